//! Claim manifest, verification reports and the operations behind the
//! command-line front end.

use std::fmt;
use std::path::Path;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::code::{puncture, Code, CodePredicates};
use crate::construct::{golay24, nordstrom_robinson, punctured_nordstrom_robinson, reed_muller_subcode};
use crate::error::{Error, Result};
use crate::spectrum::{
    completely_regular_check, constraint_rows, design_arithmetic, design_check, distance_distribution,
    distance_partition, eliminate_lambdas, feasible_distributions, format_rational, macwilliams_transform,
    solve_rows, ConstraintRow, DistributionTemplate, FeasibilityReport, Regularity, RegularityWitness,
};
use crate::symmetry::{
    assemble_with_budget, find_equivalence_with_budget, orbits_on_sphere, search_perm_automorphisms,
    translation_kernel, vertex_orbits, verify_complete_transitivity, AssembledGenerators, GeneratorKind,
    PermAutomorphisms, PermGroup, SearchBudget,
};

pub const ARTIFACT_VERSION: &str = env!("CARGO_PKG_VERSION");

pub const NR_TEMPLATE: &str = "6=112,7=?,8=?,10=112";
pub const PN_TEMPLATE: &str = "5=42,6=?,7=?,10=42";

/// Names accepted by [`construct_named`]: `golay24`, `reed_muller`, `nr`,
/// `pn` and `pn@p` for `p` in `1..=16`.
pub fn construct_named(name: &str) -> Result<Code> {
    match name {
        "golay24" => Ok(golay24()),
        "reed_muller" => Ok(reed_muller_subcode()),
        "nr" => Ok(nordstrom_robinson()),
        "pn" => punctured_nordstrom_robinson(1),
        other => {
            let p = other
                .strip_prefix("pn@")
                .and_then(|p| p.parse::<usize>().ok())
                .filter(|p| (1..=16).contains(p))
                .ok_or_else(|| Error::UnknownCode(other.to_string()))?;
            punctured_nordstrom_robinson(p)
        }
    }
}

pub fn cmd_construct(name: &str, out: impl AsRef<Path>) -> Result<Code> {
    let c = construct_named(name)?;
    c.write(out)?;
    Ok(c)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegularityReport {
    pub regular: bool,
    pub table: Option<Vec<Vec<u64>>>,
    pub witness: Option<RegularityWitness>,
}

/// Everything `analyze` prints about a code.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub m: usize,
    pub size: usize,
    pub min_distance: Option<usize>,
    pub weight_histogram: Vec<usize>,
    pub distribution: Vec<String>,
    pub transform: Vec<String>,
    pub covering_radius: usize,
    pub cell_sizes: Vec<u64>,
    pub predicates: CodePredicates,
    pub complete_regularity: RegularityReport,
}

pub fn analyze(c: &Code) -> Result<AnalysisReport> {
    let dist = distance_distribution(c)?;
    let partition = distance_partition(c)?;
    let regularity = match completely_regular_check(c)? {
        Regularity::Regular(t) => RegularityReport {
            regular: true,
            table: Some(t.rows),
            witness: None,
        },
        Regularity::NotRegular(w) => RegularityReport {
            regular: false,
            table: None,
            witness: Some(w),
        },
    };
    Ok(AnalysisReport {
        m: c.length(),
        size: c.len(),
        min_distance: c.min_distance(),
        weight_histogram: c.weight_histogram(),
        distribution: dist.a.iter().map(format_rational).collect(),
        transform: macwilliams_transform(&dist).iter().map(format_rational).collect(),
        covering_radius: partition.rho,
        cell_sizes: partition.cell_sizes,
        predicates: c.predicates(),
        complete_regularity: regularity,
    })
}

pub fn cmd_analyze(path: impl AsRef<Path>) -> Result<String> {
    let c = Code::read(path)?;
    Ok(to_json(&analyze(&c)?))
}

pub fn feasible(m: usize, template: &str, antipodal: bool) -> Result<FeasibilityReport> {
    let t = DistributionTemplate::parse(m, template, antipodal)?;
    let f = feasible_distributions(&t)?;
    Ok(FeasibilityReport::new(&t, &f))
}

pub fn cmd_feasible(m: usize, template: &str, antipodal: bool) -> Result<String> {
    Ok(to_json(&feasible(m, template, antipodal)?))
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    ExternalFact,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::ExternalFact => "external-fact",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Target {
    Nr,
    Pn,
    All,
}

impl FromStr for Target {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "nr" => Ok(Target::Nr),
            "pn" => Ok(Target::Pn),
            "all" => Ok(Target::All),
            _ => Err(Error::Parse(format!("unknown target {s:?}; expected nr, pn or all"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Scope {
    Shared,
    Nr,
    Pn,
}

impl Scope {
    fn in_target(self, t: Target) -> bool {
        !matches!((self, t), (Scope::Pn, Target::Nr) | (Scope::Nr, Target::Pn))
    }
}

struct ClaimSpec {
    id: &'static str,
    scope: Scope,
    locus: &'static str,
}

const fn claim(id: &'static str, scope: Scope, locus: &'static str) -> ClaimSpec {
    ClaimSpec { id, scope, locus }
}

const MANIFEST: &[ClaimSpec] = &[
    claim("golay.size", Scope::Shared, "extended Golay code"),
    claim("golay.delta", Scope::Shared, "extended Golay code"),
    claim("golay.octad", Scope::Shared, "extended Golay code, word 1^8 0^16"),
    claim("golay.weights", Scope::Shared, "extended Golay code, weights 8, 12, 16"),
    claim("golay.cr", Scope::Shared, "perfect-like codes are completely regular"),
    claim("nr.length", Scope::Nr, "NR construction"),
    claim("nr.size", Scope::Nr, "NR construction"),
    claim("nr.delta", Scope::Nr, "NR construction"),
    claim("nr.even", Scope::Nr, "NR construction"),
    claim("nr.antipodal", Scope::Nr, "antipodal codes"),
    claim("nr.weight6.count", Scope::Nr, "distance distribution of NR"),
    claim("nr.weight8.count", Scope::Nr, "distance distribution of NR"),
    claim("nr.weight10.count", Scope::Nr, "distance distribution of NR"),
    claim("nr.distribution", Scope::Nr, "distance distribution of NR"),
    claim("nr.rho", Scope::Nr, "covering radius of NR"),
    claim("nr.cr", Scope::Nr, "NR is completely regular"),
    claim("nr.design6", Scope::Nr, "minimum-weight words form a 3-design"),
    claim("nr.design6.blocks", Scope::Nr, "block count from the design identity"),
    claim("nr.design8", Scope::Nr, "weight-8 words form a 3-design"),
    claim("nr.lambda.odd_inadmissible", Scope::Nr, "divisibility conditions on lambda"),
    claim("nr.lambda.bound", Scope::Nr, "counting bound on lambda"),
    claim("nr.lambda.admissible", Scope::Nr, "lambda is 2 or 4"),
    claim("nr.lambda2.nonexistence", Scope::Nr, "design tables"),
    claim("feas.nr.unique", Scope::Nr, "Krawtchouk feasibility for (16, 6)"),
    claim("feas.nr.row2", Scope::Nr, "Krawtchouk feasibility for (16, 6)"),
    claim("feas.nr.printed_system", Scope::Nr, "Krawtchouk feasibility for (16, 6)"),
    claim("nr.kernel", Scope::Nr, "translation kernel lemma"),
    claim("nr.kernel.size", Scope::Nr, "translation kernel lemma"),
    claim("nr.kernel.others_move", Scope::Nr, "translation kernel lemma"),
    claim("nr.perm.order", Scope::Nr, "Perm(NR)"),
    claim("nr.mu.order", Scope::Nr, "Aut(NR) modulo the kernel"),
    claim("nr.sphere1.orbits", Scope::Nr, "Perm(NR) is 3-transitive"),
    claim("nr.sphere2.orbits", Scope::Nr, "Perm(NR) is 3-transitive"),
    claim("nr.sphere3.orbits", Scope::Nr, "Perm(NR) is 3-transitive"),
    claim("nr.sphere4.orbits", Scope::Nr, "Perm(NR) on weight-4 vertices"),
    claim("nr.zero_orbit", Scope::Nr, "Aut(NR) is transitive on NR"),
    claim("nr.ct", Scope::Nr, "NR is completely transitive"),
    claim("nr.punctures.equivalent", Scope::Nr, "all puncturings of NR are equivalent"),
    claim("nr.uniqueness", Scope::Nr, "uniqueness of (16,256,6) codes"),
    claim("pn.length", Scope::Pn, "punctured NR"),
    claim("pn.size", Scope::Pn, "punctured NR"),
    claim("pn.delta", Scope::Pn, "punctured NR"),
    claim("pn.antipodal", Scope::Pn, "antipodal codes"),
    claim("pn.weight5.count", Scope::Pn, "distance distribution of PN"),
    claim("pn.distribution", Scope::Pn, "distance distribution of PN"),
    claim("pn.rho", Scope::Pn, "covering radius of PN"),
    claim("pn.cr", Scope::Pn, "PN is completely regular"),
    claim("pn.design5", Scope::Pn, "minimum-weight words form a 2-design"),
    claim("pn.design5.blocks", Scope::Pn, "block count from the design identity"),
    claim("pn.lambda.odd_inadmissible", Scope::Pn, "divisibility conditions on lambda"),
    claim("pn.lambda.bound", Scope::Pn, "counting bound on lambda"),
    claim("pn.lambda.admissible", Scope::Pn, "lambda is 2 or 4"),
    claim("pn.lambda2.nonexistence", Scope::Pn, "design tables"),
    claim("feas.pn.unique", Scope::Pn, "Krawtchouk feasibility for (15, 5)"),
    claim("pn.perm.order", Scope::Pn, "Perm(PN) = Aut(PN)_0"),
    claim("pn.sphere3.orbits", Scope::Pn, "Perm(PN) on 3-subsets"),
    claim("pn.ct", Scope::Pn, "PN is completely transitive"),
    claim("pn.uniqueness", Scope::Pn, "uniqueness of (15,256,5) codes"),
];

/// Every claim id, in report order.
pub fn manifest_ids() -> Vec<&'static str> {
    MANIFEST.iter().map(|c| c.id).collect()
}

pub fn manifest_ids_for(target: Target) -> Vec<&'static str> {
    MANIFEST
        .iter()
        .filter(|c| c.scope.in_target(target))
        .map(|c| c.id)
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClaimResult {
    pub id: String,
    pub locus: String,
    pub expected: Option<Value>,
    pub computed: Value,
    pub status: Status,
    pub wall_time_us: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub details: Option<Value>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub external_fact: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub artifact_version: String,
    pub target: Target,
    pub claims: Vec<ClaimResult>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn failing_ids(&self) -> Vec<&str> {
        self.claims
            .iter()
            .filter(|c| c.status == Status::Fail)
            .map(|c| c.id.as_str())
            .collect()
    }

    pub fn all_passed(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn claim(&self, id: &str) -> Option<&ClaimResult> {
        self.claims.iter().find(|c| c.id == id)
    }

    pub fn to_json(&self) -> String {
        to_json(self)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    /// The same report with every wall time zeroed.
    pub fn without_timings(&self) -> Self {
        let mut r = self.clone();
        for c in &mut r.claims {
            c.wall_time_us = 0;
        }
        r
    }

    /// One line per claim, then a tally.
    pub fn human_summary(&self) -> String {
        let mut out = String::new();
        for c in &self.claims {
            out.push_str(&format!("{:<14} {:<28} {}\n", c.status.to_string(), c.id, c.computed));
        }
        out.push_str(&format!(
            "{} pass, {} fail, {} external-fact\n",
            self.summary.pass, self.summary.fail, self.summary.external_fact
        ));
        if !self.all_passed() {
            out.push_str(&format!("failing: {}\n", self.failing_ids().join(", ")));
        }
        out
    }
}

/// The codes a verification run inspects.
#[derive(Debug, Clone)]
pub struct Subjects {
    pub golay: Code,
    pub nr: Code,
    pub pn: Code,
    pub reed_muller: Code,
}

impl Subjects {
    pub fn standard() -> Self {
        Subjects {
            golay: golay24(),
            nr: nordstrom_robinson(),
            pn: punctured_nordstrom_robinson(1).expect("1 is a coordinate"),
            reed_muller: reed_muller_subcode(),
        }
    }
}

enum Outcome {
    Check {
        expected: Value,
        computed: Value,
        note: Option<String>,
        details: Option<Value>,
    },
    External {
        citation: String,
        computed: Value,
    },
}

fn check(expected: Value, computed: Value) -> Outcome {
    Outcome::Check {
        expected,
        computed,
        note: None,
        details: None,
    }
}

fn with_details(o: Outcome, d: Value) -> Outcome {
    match o {
        Outcome::Check {
            expected,
            computed,
            note,
            ..
        } => Outcome::Check {
            expected,
            computed,
            note,
            details: Some(d),
        },
        other => other,
    }
}

fn with_note(o: Outcome, n: &str) -> Outcome {
    match o {
        Outcome::Check {
            expected,
            computed,
            details,
            ..
        } => Outcome::Check {
            expected,
            computed,
            note: Some(n.to_string()),
            details,
        },
        other => other,
    }
}

/// Search results shared between claims.
struct Context<'a> {
    s: &'a Subjects,
    budget: SearchBudget,
    nr_perm: Option<Result<PermAutomorphisms>>,
    pn_perm: Option<Result<PermAutomorphisms>>,
    nr_gens: Option<Result<AssembledGenerators>>,
    pn_gens: Option<Result<AssembledGenerators>>,
}

impl<'a> Context<'a> {
    fn nr_perm(&mut self) -> Result<PermAutomorphisms> {
        let (c, b) = (&self.s.nr, self.budget);
        self.nr_perm
            .get_or_insert_with(|| search_perm_automorphisms(c, b))
            .clone()
    }

    fn pn_perm(&mut self) -> Result<PermAutomorphisms> {
        let (c, b) = (&self.s.pn, self.budget);
        self.pn_perm
            .get_or_insert_with(|| search_perm_automorphisms(c, b))
            .clone()
    }

    fn nr_gens(&mut self) -> Result<AssembledGenerators> {
        let (c, b) = (&self.s.nr, self.budget);
        self.nr_gens
            .get_or_insert_with(|| assemble_with_budget(c, b))
            .clone()
    }

    fn pn_gens(&mut self) -> Result<AssembledGenerators> {
        let (c, b) = (&self.s.pn, self.budget);
        self.pn_gens
            .get_or_insert_with(|| assemble_with_budget(c, b))
            .clone()
    }
}

fn strings(v: &[BigInt]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

fn solutions(m: usize, template: &str) -> Result<Value> {
    let t = DistributionTemplate::parse(m, template, true)?;
    let f = feasible_distributions(&t)?;
    Ok(json!(f.solutions.iter().map(|s| strings(s)).collect::<Vec<_>>()))
}

fn regular_with_full_rows(c: &Code) -> Result<(bool, Value)> {
    Ok(match completely_regular_check(c)? {
        Regularity::Regular(t) => {
            let ok = t.row_sums().iter().all(|&s| s == c.len() as u64);
            (ok, json!({ "rows": t.rows, "cell_sizes": t.cell_sizes }))
        }
        Regularity::NotRegular(w) => (false, json!({ "witness": w })),
    })
}

fn distribution_strings(c: &Code) -> Result<Value> {
    let d = distance_distribution(c)?;
    Ok(json!(d.a.iter().map(format_rational).collect::<Vec<_>>()))
}

fn design_blocks(words: &Code, t: usize, m: usize, k: usize) -> Result<Value> {
    let lambda = design_check(words, t)?.lambda();
    let b = match lambda {
        Some(l) if l > 0 => Some(format_rational(&design_arithmetic(t, m, k, l)?.b)),
        _ => None,
    };
    Ok(json!({ "b": b, "weight_class_size": words.len() }))
}

fn lambda_claim(id: &str, t: usize, m: usize, k: usize) -> Result<Outcome> {
    let e = eliminate_lambdas(t, m, k, k)?;
    Ok(if id.ends_with("odd_inadmissible") {
        with_details(
            check(json!(true), json!(e.odd_values_rejected())),
            json!({ "rejected": e.rejected }),
        )
    } else if id.ends_with("bound") {
        check(json!("13/3"), json!(e.bound))
    } else {
        check(json!([2, 4]), json!(e.admissible))
    })
}

fn sphere_count(group: &PermGroup, m: usize, k: usize) -> Result<Value> {
    Ok(json!(orbits_on_sphere(group, m, k)?.count))
}

fn mu_group(g: &AssembledGenerators) -> Result<PermGroup> {
    PermGroup::new(
        g.perm_group.degree(),
        g.elements.iter().map(|x| x.sigma().clone()).collect(),
    )
}

fn generator_details(g: &AssembledGenerators) -> Value {
    let count = |k: GeneratorKind| g.kinds.iter().filter(|x| **x == k).count();
    json!({
        "permutations": count(GeneratorKind::Permutation),
        "kernel_translations": count(GeneratorKind::KernelTranslation),
        "coset_moves": count(GeneratorKind::CosetMove),
        "unreached_cosets": g.unreached.len(),
    })
}

fn transitivity(c: &Code, g: &AssembledGenerators) -> Result<(Value, Value)> {
    let cert = verify_complete_transitivity(c, &g.elements)?;
    let sizes: Vec<u64> = cert.cells.iter().map(|x| x.orbit_size).collect();
    let computed = json!({
        "transitive": cert.transitive,
        "cells": cert.cells.len(),
        "orbits": cert.orbit_count,
        "orbit_sizes": sizes,
    });
    Ok((computed, serde_json::to_value(&cert).expect("serializable")))
}

fn evaluate(id: &str, cx: &mut Context) -> Result<Outcome> {
    let s = cx.s;
    Ok(match id {
        "golay.size" => check(json!(4096), json!(s.golay.len())),
        "golay.delta" => check(json!(8), json!(s.golay.min_distance())),
        "golay.octad" => check(json!(true), json!(s.golay.contains_bits(0xff))),
        "golay.weights" => {
            let h = s.golay.weight_histogram();
            let at = |w: usize| h.get(w).copied().unwrap_or(0);
            check(json!([759, 2576, 759]), json!([at(8), at(12), at(16)]))
        }
        "golay.cr" => {
            let (ok, d) = regular_with_full_rows(&s.golay)?;
            with_details(check(json!(true), json!(ok)), d)
        }
        "nr.length" => check(json!(16), json!(s.nr.length())),
        "nr.size" => check(json!(256), json!(s.nr.len())),
        "nr.delta" => check(json!(6), json!(s.nr.min_distance())),
        "nr.even" => check(json!(true), json!(s.nr.is_even())),
        "nr.antipodal" => check(json!(true), json!(s.nr.is_antipodal())),
        "nr.weight6.count" => check(json!(112), json!(s.nr.of_weight(6).len())),
        "nr.weight8.count" => check(json!(30), json!(s.nr.of_weight(8).len())),
        "nr.weight10.count" => check(json!(112), json!(s.nr.of_weight(10).len())),
        "nr.distribution" => check(
            json!(["1", "0", "0", "0", "0", "0", "112", "0", "30", "0", "112", "0", "0", "0", "0", "0", "1"]),
            distribution_strings(&s.nr)?,
        ),
        "nr.rho" => check(json!(4), json!(distance_partition(&s.nr)?.rho)),
        "nr.cr" => {
            let (ok, d) = regular_with_full_rows(&s.nr)?;
            with_details(check(json!(true), json!(ok)), d)
        }
        "nr.design6" => check(json!(4), json!(design_check(&s.nr.of_weight(6), 3)?.lambda())),
        "nr.design6.blocks" => check(
            json!({ "b": "112", "weight_class_size": 112 }),
            design_blocks(&s.nr.of_weight(6), 3, 16, 6)?,
        ),
        "nr.design8" => check(json!(3), json!(design_check(&s.nr.of_weight(8), 3)?.lambda())),
        "nr.lambda.odd_inadmissible" | "nr.lambda.bound" | "nr.lambda.admissible" => lambda_claim(id, 3, 16, 6)?,
        "pn.lambda.odd_inadmissible" | "pn.lambda.bound" | "pn.lambda.admissible" => lambda_claim(id, 2, 15, 5)?,
        "nr.lambda2.nonexistence" => Outcome::External {
            citation: "Handbook of Combinatorial Designs, Table 3.37, line 21: no 3-(16,6,2) design".into(),
            computed: json!({ "arithmetically_admissible": design_arithmetic(3, 16, 6, 2)?.is_admissible() }),
        },
        "pn.lambda2.nonexistence" => Outcome::External {
            citation: "Handbook of Combinatorial Designs, Table 1.28, line 16: no 2-(15,5,2) design".into(),
            computed: json!({ "arithmetically_admissible": design_arithmetic(2, 15, 5, 2)?.is_admissible() }),
        },
        "feas.nr.unique" => check(json!([["0", "30"]]), solutions(16, NR_TEMPLATE)?),
        "feas.nr.row2" => {
            let t = DistributionTemplate::parse(16, NR_TEMPLATE, true)?;
            let rows = constraint_rows(&t);
            check(json!("240 - 12a7 - 8a8"), json!(rows[2].display(&t.unknown_names).to_string()))
        }
        "feas.nr.printed_system" => {
            let t = DistributionTemplate::parse(16, NR_TEMPLATE, true)?;
            let printed = vec![
                ConstraintRow {
                    k: 2,
                    constant: 240.into(),
                    coefficients: vec![(-12).into(), (-8).into()],
                },
                ConstraintRow {
                    k: 4,
                    constant: (-840).into(),
                    coefficients: vec![(-28).into(), 28.into()],
                },
            ];
            let f = solve_rows(printed, &t.unknown_names)?;
            let derived = constraint_rows(&t)[4].display(&t.unknown_names).to_string();
            with_note(
                check(
                    json!([["0", "30"]]),
                    json!(f.solutions.iter().map(|s| strings(s)).collect::<Vec<_>>()),
                ),
                &format!(
                    "printed k=4 row is -840 - 28a7 + 28a8; the Krawtchouk sum gives {derived}; both systems have the single solution (0, 30)"
                ),
            )
        }
        "nr.kernel" => check(json!(true), json!(translation_kernel(&s.nr) == s.reed_muller)),
        "nr.kernel.size" => check(json!(32), json!(translation_kernel(&s.nr).len())),
        "nr.kernel.others_move" => {
            let k = translation_kernel(&s.nr);
            let all_move = s
                .nr
                .bits()
                .iter()
                .filter(|&&b| !k.contains_bits(b))
                .all(|&b| s.nr.translate_bits(b) != s.nr);
            check(json!(true), json!(all_move))
        }
        "nr.perm.order" => {
            let p = cx.nr_perm()?;
            with_details(
                check(json!("40320"), json!(p.group.order().to_string())),
                json!({ "generators": p.group.generators().len(), "level_orbits": p.level_orbits, "nodes": p.nodes }),
            )
        }
        "pn.perm.order" => {
            let p = cx.pn_perm()?;
            with_details(
                check(json!("2520"), json!(p.group.order().to_string())),
                json!({ "generators": p.group.generators().len(), "level_orbits": p.level_orbits, "nodes": p.nodes }),
            )
        }
        "nr.mu.order" => {
            let g = cx.nr_gens()?;
            let order = mu_group(&g)?.order();
            with_note(
                with_details(check(json!("322560"), json!(order.to_string())), generator_details(&g)),
                "order consistent with the claimed type 2^4:A_8; the isomorphism type itself is not checked",
            )
        }
        "nr.sphere1.orbits" | "nr.sphere2.orbits" | "nr.sphere3.orbits" | "nr.sphere4.orbits" => {
            let k = (id.as_bytes()["nr.sphere".len()] - b'0') as usize;
            let group = cx.nr_perm()?.group;
            check(json!(if k == 4 { 2 } else { 1 }), sphere_count(&group, 16, k)?)
        }
        "pn.sphere3.orbits" => check(json!(2), sphere_count(&cx.pn_perm()?.group, 15, 3)?),
        "nr.zero_orbit" => {
            let g = cx.nr_gens()?;
            let o = vertex_orbits(&g.elements, s.nr.length())?;
            let id0 = o.orbit_id[0];
            let exact = o.sizes[id0 as usize] == s.nr.len() as u64
                && s.nr.bits().iter().all(|&w| o.orbit_id[w as usize] == id0);
            check(json!(true), json!(exact))
        }
        "nr.ct" => {
            let g = cx.nr_gens()?;
            let (computed, cert) = transitivity(&s.nr, &g)?;
            let sizes: Vec<u64> = serde_json::from_value(computed["orbit_sizes"].clone()).unwrap_or_default();
            let summary = json!({
                "transitive": computed["transitive"],
                "cells": computed["cells"],
                "leading": sizes.iter().take(3).collect::<Vec<_>>(),
                "tail_sum": sizes.iter().skip(3).sum::<u64>(),
            });
            with_details(
                check(
                    json!({ "transitive": true, "cells": 5, "leading": [256, 4096, 30720], "tail_sum": 30464 }),
                    summary,
                ),
                cert,
            )
        }
        "pn.ct" => {
            let g = cx.pn_gens()?;
            let (computed, cert) = transitivity(&s.pn, &g)?;
            with_details(
                check(
                    json!({ "transitive": true, "cells": 4 }),
                    json!({ "transitive": computed["transitive"], "cells": computed["cells"] }),
                ),
                cert,
            )
        }
        "nr.punctures.equivalent" => {
            let first = puncture(&s.nr, 1)?;
            let mut found = Vec::new();
            for p in 2..=s.nr.length() {
                let other = puncture(&s.nr, p)?;
                if find_equivalence_with_budget(&other, &first, cx.budget)?.is_some() {
                    found.push(p);
                }
            }
            check(json!((2..=16).collect::<Vec<_>>()), json!(found))
        }
        "nr.uniqueness" => Outcome::External {
            citation: "Snover: every binary (16,256,6) code is equivalent to NR".into(),
            computed: Value::Null,
        },
        "pn.uniqueness" => Outcome::External {
            citation: "Snover: every binary (15,256,5) code is equivalent to PN".into(),
            computed: Value::Null,
        },
        "pn.length" => check(json!(15), json!(s.pn.length())),
        "pn.size" => check(json!(256), json!(s.pn.len())),
        "pn.delta" => check(json!(5), json!(s.pn.min_distance())),
        "pn.antipodal" => check(json!(true), json!(s.pn.is_antipodal())),
        "pn.weight5.count" => check(json!(42), json!(s.pn.of_weight(5).len())),
        "pn.distribution" => check(
            json!(["1", "0", "0", "0", "0", "42", "70", "15", "15", "70", "42", "0", "0", "0", "0", "1"]),
            distribution_strings(&s.pn)?,
        ),
        "pn.rho" => check(json!(3), json!(distance_partition(&s.pn)?.rho)),
        "pn.cr" => {
            let (ok, d) = regular_with_full_rows(&s.pn)?;
            with_details(check(json!(true), json!(ok)), d)
        }
        "pn.design5" => check(json!(4), json!(design_check(&s.pn.of_weight(5), 2)?.lambda())),
        "pn.design5.blocks" => check(
            json!({ "b": "42", "weight_class_size": 42 }),
            design_blocks(&s.pn.of_weight(5), 2, 15, 5)?,
        ),
        "feas.pn.unique" => check(json!([["70", "15"]]), solutions(15, PN_TEMPLATE)?),
        other => unreachable!("claim {other} has no evaluator"),
    })
}

pub fn verify(target: Target, subjects: &Subjects, budget: SearchBudget) -> VerificationReport {
    let mut cx = Context {
        s: subjects,
        budget,
        nr_perm: None,
        pn_perm: None,
        nr_gens: None,
        pn_gens: None,
    };
    let mut claims = Vec::new();
    for spec in MANIFEST.iter().filter(|c| c.scope.in_target(target)) {
        let start = Instant::now();
        let outcome = evaluate(spec.id, &mut cx);
        let wall_time_us = start.elapsed().as_micros() as u64;
        let (expected, computed, status, note, details) = match outcome {
            Ok(Outcome::Check {
                expected,
                computed,
                note,
                details,
            }) => {
                let status = if expected == computed { Status::Pass } else { Status::Fail };
                (Some(expected), computed, status, note, details)
            }
            Ok(Outcome::External { citation, computed }) => {
                (None, computed, Status::ExternalFact, Some(citation), None)
            }
            Err(e) => (None, json!({ "error": e.to_string() }), Status::Fail, Some(e.to_string()), None),
        };
        claims.push(ClaimResult {
            id: spec.id.to_string(),
            locus: spec.locus.to_string(),
            expected,
            computed,
            status,
            wall_time_us,
            note,
            details,
        });
    }
    let count = |s: Status| claims.iter().filter(|c| c.status == s).count();
    let summary = Summary {
        pass: count(Status::Pass),
        fail: count(Status::Fail),
        external_fact: count(Status::ExternalFact),
    };
    VerificationReport {
        artifact_version: ARTIFACT_VERSION.to_string(),
        target,
        claims,
        summary,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn manifest_ids_are_unique_and_filtered() {
        let ids = manifest_ids();
        assert_eq!(ids.iter().collect::<HashSet<_>>().len(), ids.len());
        let nr = manifest_ids_for(Target::Nr);
        assert!(nr.iter().all(|id| !id.starts_with("pn.") && !id.starts_with("feas.pn")));
        let pn = manifest_ids_for(Target::Pn);
        assert!(pn.iter().all(|id| !id.starts_with("nr.")));
        assert_eq!(manifest_ids_for(Target::All), ids);
    }

    #[test]
    fn names_and_targets() {
        assert_eq!(construct_named("pn@16").unwrap().length(), 15);
        assert!(matches!(construct_named("pn@17"), Err(Error::UnknownCode(_))));
        assert!(matches!(construct_named("hexacode"), Err(Error::UnknownCode(_))));
        assert_eq!("all".parse::<Target>().unwrap(), Target::All);
        assert!("golay".parse::<Target>().is_err());
    }

    #[test]
    fn analysis_of_small_code() {
        let c = Code::parse_text("m=3\n000\n111\n").unwrap();
        let a = analyze(&c).unwrap();
        assert_eq!(a.covering_radius, 1);
        assert!(a.complete_regularity.regular);
        assert_eq!(a.distribution, vec!["1", "0", "0", "1"]);
    }

    #[test]
    fn feasibility_json() {
        let r = feasible(16, NR_TEMPLATE, true).unwrap();
        assert_eq!(r.solutions, vec![vec!["0".to_string(), "30".to_string()]]);
        let empty = feasible(16, "1=1,6=112,7=?,8=?,10=112", true).unwrap();
        assert!(empty.solutions.is_empty());
    }
}
