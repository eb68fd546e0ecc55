//! Distance distributions, distance partitions, complete regularity, designs
//! and distribution feasibility. All arithmetic here is exact.

mod design;
mod distribution;
mod feasibility;
mod partition;

pub use design::{
    design_arithmetic, design_check, eliminate_lambdas, lambda_upper_bound, DesignOutcome,
    DesignParams, LambdaElimination,
};
pub use distribution::{
    distance_distribution, format_rational, macwilliams_transform, summarize,
    DistanceDistribution, DistributionSummary,
};
pub use feasibility::{
    constraint_rows, feasible_distributions, solve_rows, ConstraintRow, DistributionTemplate,
    Feasibility, FeasibilityReport, RowReport, Slot,
};
pub use partition::{
    completely_regular_check, distance_partition, DistancePartition, IntersectionTable,
    Regularity, RegularityWitness,
};
