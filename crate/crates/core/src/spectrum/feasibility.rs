//! Integer distance distributions compatible with a partially known template
//! and nonnegativity of the MacWilliams transform.
//!
//! Each transform entry `a'_k` is an affine form in the unknown slots. Bounds
//! on the unknowns are tightened by interval propagation over these rows until
//! nothing changes, and the remaining box is enumerated exhaustively.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hamming::KrawtchoukTable;

const MAX_BOX_POINTS: u64 = 100_000_000;
const MAX_PROPAGATION_ROUNDS: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Slot {
    Fixed(BigInt),
    Unknown(usize),
}

/// A distance distribution with some entries fixed and some unknown.
///
/// Unknown slots tied together by antipodal symmetry share one unknown, named
/// after the smaller index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistributionTemplate {
    pub m: usize,
    pub slots: Vec<Slot>,
    pub unknown_names: Vec<String>,
    pub antipodal: bool,
}

impl DistributionTemplate {
    /// Entries not listed are zero, except `a_0 = 1`. With `antipodal`, each
    /// listed entry also fixes (or ties) its mirror `a_{m-i}`.
    pub fn new(m: usize, entries: &[(usize, Option<BigInt>)], antipodal: bool) -> Result<Self> {
        let mut given: Vec<Option<Option<BigInt>>> = vec![None; m + 1];
        for (i, v) in entries {
            if *i > m {
                return Err(Error::Template(format!("index {i} exceeds m = {m}")));
            }
            if let Some(v) = v {
                if v.is_negative() {
                    return Err(Error::Template(format!("a_{i} = {v} is negative")));
                }
            }
            if given[*i].as_ref().is_some_and(|g| g != v) {
                return Err(Error::Template(format!("a_{i} given twice")));
            }
            given[*i] = Some(v.clone());
        }
        if antipodal {
            for i in 0..=m {
                let j = m - i;
                match (&given[i], &given[j]) {
                    (Some(a), Some(b)) if a != b => {
                        return Err(Error::Template(format!(
                            "antipodal template needs a_{i} = a_{j}"
                        )))
                    }
                    (Some(a), None) => given[j] = Some(a.clone()),
                    _ => {}
                }
            }
        }
        match &given[0] {
            None => given[0] = Some(Some(BigInt::one())),
            Some(Some(v)) if v.is_one() => {}
            _ => return Err(Error::Template("a_0 must equal 1".into())),
        }
        if antipodal && given[m].is_none() {
            given[m] = given[0].clone();
        }

        let mut slots: Vec<Slot> = Vec::with_capacity(m + 1);
        let mut unknown_names = Vec::new();
        for i in 0..=m {
            let slot = match &given[i] {
                None => Slot::Fixed(BigInt::zero()),
                Some(Some(v)) => Slot::Fixed(v.clone()),
                Some(None) => {
                    let mirror = m - i;
                    if antipodal && mirror < i {
                        slots[mirror].clone()
                    } else {
                        unknown_names.push(format!("a{i}"));
                        Slot::Unknown(unknown_names.len() - 1)
                    }
                }
            };
            slots.push(slot);
        }
        Ok(DistributionTemplate {
            m,
            slots,
            unknown_names,
            antipodal,
        })
    }

    /// Parses `"6=112,7=?,8=?"` style templates.
    pub fn parse(m: usize, spec: &str, antipodal: bool) -> Result<Self> {
        let mut entries = Vec::new();
        for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (idx, val) = part
                .split_once('=')
                .ok_or_else(|| Error::Template(format!("expected i=value or i=?, got {part:?}")))?;
            let idx: usize = idx
                .trim()
                .trim_start_matches('a')
                .parse()
                .map_err(|_| Error::Template(format!("bad index in {part:?}")))?;
            let val = match val.trim() {
                "?" => None,
                v => Some(
                    v.parse::<BigInt>()
                        .map_err(|_| Error::Template(format!("bad value in {part:?}")))?,
                ),
            };
            entries.push((idx, val));
        }
        DistributionTemplate::new(m, &entries, antipodal)
    }

    pub fn unknown_count(&self) -> usize {
        self.unknown_names.len()
    }

    /// Fill the template with values for the unknowns.
    pub fn instantiate(&self, values: &[BigInt]) -> Vec<BigInt> {
        self.slots
            .iter()
            .map(|s| match s {
                Slot::Fixed(v) => v.clone(),
                Slot::Unknown(u) => values[*u].clone(),
            })
            .collect()
    }
}

/// `a'_k = constant + sum_u coefficients[u] * x_u`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstraintRow {
    pub k: usize,
    pub constant: BigInt,
    pub coefficients: Vec<BigInt>,
}

impl ConstraintRow {
    pub fn evaluate(&self, values: &[BigInt]) -> BigInt {
        self.coefficients
            .iter()
            .zip(values)
            .fold(self.constant.clone(), |acc, (c, x)| acc + c * x)
    }

    pub fn is_trivial(&self) -> bool {
        self.coefficients.iter().all(Zero::is_zero)
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> RowDisplay<'a> {
        RowDisplay { row: self, names }
    }
}

pub struct RowDisplay<'a> {
    row: &'a ConstraintRow,
    names: &'a [String],
}

impl fmt::Display for RowDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.row.constant)?;
        for (c, name) in self.row.coefficients.iter().zip(self.names) {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { '-' } else { '+' };
            let mag = c.abs();
            if mag.is_one() {
                write!(f, " {sign} {name}")?;
            } else {
                write!(f, " {sign} {mag}{name}")?;
            }
        }
        Ok(())
    }
}

/// The rows `a'_k >= 0` for `k = 0..=m`, exactly from the Krawtchouk values.
pub fn constraint_rows(template: &DistributionTemplate) -> Vec<ConstraintRow> {
    let m = template.m;
    let table = KrawtchoukTable::new(m);
    (0..=m)
        .map(|k| {
            let mut constant = BigInt::zero();
            let mut coefficients = vec![BigInt::zero(); template.unknown_count()];
            for (i, slot) in template.slots.iter().enumerate() {
                let kv = table.get(k, i);
                match slot {
                    Slot::Fixed(v) => constant += v * kv,
                    Slot::Unknown(u) => coefficients[*u] += kv,
                }
            }
            ConstraintRow {
                k,
                constant,
                coefficients,
            }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Feasibility {
    pub rows: Vec<ConstraintRow>,
    /// Final propagated `[lo, hi]` for each unknown; `None` when the box is empty.
    pub bounds: Option<Vec<(BigInt, BigInt)>>,
    /// Every integer point satisfying all rows, in lexicographic order.
    pub solutions: Vec<Vec<BigInt>>,
}

pub fn feasible_distributions(template: &DistributionTemplate) -> Result<Feasibility> {
    let rows = constraint_rows(template);
    solve_rows(rows, &template.unknown_names)
}

/// Enumerate nonnegative integer solutions of `row >= 0` for all `rows`.
pub fn solve_rows(rows: Vec<ConstraintRow>, names: &[String]) -> Result<Feasibility> {
    let n = names.len();
    let mut lo: Vec<BigInt> = vec![BigInt::zero(); n];
    let mut hi: Vec<Option<BigInt>> = vec![None; n];

    let mut empty = false;
    let mut rounds = 0;
    loop {
        let mut changed = false;
        for row in &rows {
            for u in 0..n {
                let a = &row.coefficients[u];
                if a.is_zero() {
                    continue;
                }
                // a * x_u >= -(constant + max of the other terms)
                let mut rest = row.constant.clone();
                let mut bounded = true;
                for v in (0..n).filter(|&v| v != u) {
                    let c = &row.coefficients[v];
                    if c.is_positive() {
                        match &hi[v] {
                            Some(h) => rest += c * h,
                            None => {
                                bounded = false;
                                break;
                            }
                        }
                    } else if c.is_negative() {
                        rest += c * &lo[v];
                    }
                }
                if !bounded {
                    continue;
                }
                let rhs = -rest;
                if a.is_positive() {
                    let new_lo = -((-&rhs).div_floor(a));
                    if new_lo > lo[u] {
                        lo[u] = new_lo;
                        changed = true;
                    }
                } else {
                    let new_hi = rhs.div_floor(a);
                    if hi[u].as_ref().map_or(true, |h| new_hi < *h) {
                        hi[u] = Some(new_hi);
                        changed = true;
                    }
                }
                if hi[u].as_ref().is_some_and(|h| *h < lo[u]) {
                    empty = true;
                }
            }
        }
        rounds += 1;
        if empty || !changed || rounds >= MAX_PROPAGATION_ROUNDS {
            break;
        }
    }

    // rows with no unknowns still have to hold
    if rows
        .iter()
        .any(|r| r.is_trivial() && r.constant.is_negative())
    {
        empty = true;
    }
    if empty {
        return Ok(Feasibility {
            rows,
            bounds: None,
            solutions: Vec::new(),
        });
    }
    if let Some(u) = (0..n).find(|&u| hi[u].is_none()) {
        return Err(Error::Unbounded(names[u].clone()));
    }
    let bounds: Vec<(BigInt, BigInt)> = lo
        .into_iter()
        .zip(hi)
        .map(|(l, h)| (l, h.expect("checked above")))
        .collect();

    let mut points: u64 = 1;
    for (l, h) in &bounds {
        let width = (h - l + 1u32).to_u64().unwrap_or(u64::MAX);
        points = points.saturating_mul(width);
    }
    if points > MAX_BOX_POINTS {
        return Err(Error::SearchSpaceTooLarge(points.to_string()));
    }

    let mut solutions = Vec::new();
    let mut point: Vec<BigInt> = bounds.iter().map(|(l, _)| l.clone()).collect();
    loop {
        if rows.iter().all(|r| !r.evaluate(&point).is_negative()) {
            solutions.push(point.clone());
        }
        // odometer, last unknown fastest
        let mut idx = n;
        loop {
            if idx == 0 {
                return Ok(Feasibility {
                    rows,
                    bounds: Some(bounds),
                    solutions,
                });
            }
            idx -= 1;
            if point[idx] < bounds[idx].1 {
                point[idx] += 1;
                for j in idx + 1..n {
                    point[j] = bounds[j].0.clone();
                }
                break;
            }
        }
    }
}

/// JSON shape of a solved template.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FeasibilityReport {
    pub m: usize,
    pub antipodal: bool,
    pub unknowns: Vec<String>,
    pub rows: Vec<RowReport>,
    pub bounds: Option<Vec<[String; 2]>>,
    pub solutions: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowReport {
    pub k: usize,
    pub form: String,
    pub constant: String,
    pub coefficients: Vec<String>,
}

impl FeasibilityReport {
    pub fn new(template: &DistributionTemplate, f: &Feasibility) -> Self {
        let names = &template.unknown_names;
        FeasibilityReport {
            m: template.m,
            antipodal: template.antipodal,
            unknowns: names.clone(),
            rows: f
                .rows
                .iter()
                .map(|r| RowReport {
                    k: r.k,
                    form: r.display(names).to_string(),
                    constant: r.constant.to_string(),
                    coefficients: r.coefficients.iter().map(|c| c.to_string()).collect(),
                })
                .collect(),
            bounds: f.bounds.as_ref().map(|b| {
                b.iter()
                    .map(|(l, h)| [l.to_string(), h.to_string()])
                    .collect()
            }),
            solutions: f
                .solutions
                .iter()
                .map(|s| s.iter().map(|x| x.to_string()).collect())
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::nordstrom_robinson;
    use crate::spectrum::distance_distribution;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn nr_template() -> DistributionTemplate {
        DistributionTemplate::parse(16, "6=112,7=?,8=?,10=112", true).unwrap()
    }

    fn pn_template() -> DistributionTemplate {
        DistributionTemplate::parse(15, "5=42,6=?,7=?,10=42", true).unwrap()
    }

    #[test]
    fn template_layout() {
        let t = nr_template();
        assert_eq!(t.unknown_names, vec!["a7", "a8"]);
        assert_eq!(t.slots[9], Slot::Unknown(0));
        assert_eq!(t.slots[16], Slot::Fixed(BigInt::one()));
        assert_eq!(t.slots[3], Slot::Fixed(BigInt::zero()));
        let p = pn_template();
        assert_eq!(p.unknown_names, vec!["a6", "a7"]);
        assert_eq!(p.slots[8], Slot::Unknown(1));
        assert_eq!(p.slots[9], Slot::Unknown(0));
    }

    #[test]
    fn template_errors() {
        assert!(DistributionTemplate::parse(16, "6=112,10=111", true).is_err());
        assert!(DistributionTemplate::parse(16, "0=2", false).is_err());
        assert!(DistributionTemplate::parse(16, "17=1", false).is_err());
        assert!(DistributionTemplate::parse(16, "6=x", false).is_err());
        assert!(DistributionTemplate::parse(16, "6", false).is_err());
        assert!(DistributionTemplate::parse(16, "6=-1", false).is_err());
        assert!(DistributionTemplate::parse(16, "6=?,10=3", true).is_err());
    }

    #[test]
    fn nr_rows_match_hand_derivation() {
        let t = nr_template();
        let rows = constraint_rows(&t);
        assert_eq!(rows[2].constant, BigInt::from(240));
        assert_eq!(rows[2].coefficients, big(&[-12, -8]));
        assert_eq!(rows[2].display(&t.unknown_names).to_string(), "240 - 12a7 - 8a8");
        assert_eq!(rows[4].display(&t.unknown_names).to_string(), "-840 + 28a7 + 28a8");
    }

    #[test]
    fn nr_unique_solution() {
        let f = feasible_distributions(&nr_template()).unwrap();
        assert_eq!(f.solutions, vec![big(&[0, 30])]);
    }

    #[test]
    fn pn_unique_solution() {
        let f = feasible_distributions(&pn_template()).unwrap();
        assert_eq!(f.solutions, vec![big(&[70, 15])]);
    }

    #[test]
    fn fully_fixed_template_of_real_code() {
        let d = distance_distribution(&nordstrom_robinson()).unwrap();
        let entries: Vec<(usize, Option<BigInt>)> = d
            .as_integers()
            .unwrap()
            .into_iter()
            .enumerate()
            .map(|(i, v)| (i, Some(v)))
            .collect();
        let t = DistributionTemplate::new(16, &entries, false).unwrap();
        let f = feasible_distributions(&t).unwrap();
        assert_eq!(f.solutions, vec![Vec::<BigInt>::new()]);
    }

    #[test]
    fn contradicting_template_is_empty() {
        let t = DistributionTemplate::parse(16, "1=1,6=112,7=?,8=?,10=112", true).unwrap();
        let f = feasible_distributions(&t).unwrap();
        assert!(f.solutions.is_empty());
    }

    #[test]
    fn unbounded_system_reported() {
        let rows = vec![ConstraintRow {
            k: 0,
            constant: BigInt::from(-1),
            coefficients: big(&[1, 0]),
        }];
        let names = ["x".to_string(), "y".to_string()];
        match solve_rows(rows, &names) {
            Err(Error::Unbounded(name)) => assert_eq!(name, "x"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn propagation_limits_are_reported() {
        // each row bounding a2 also has a positive a4 coefficient, and no
        // single row bounds a4 on its own
        let t = DistributionTemplate::parse(8, "2=?,4=?", true).unwrap();
        assert!(matches!(feasible_distributions(&t), Err(Error::Unbounded(_))));
    }

    #[test]
    fn solver_matches_brute_force_on_small_templates() {
        // brute force: scan a generous box directly
        for (m, spec, anti) in [
            (8, "4=?,8=?", false),
            (8, "3=?,5=?", true),
            (10, "4=?,6=?", false),
            (6, "2=?,3=?,4=?", false),
            (7, "3=?,4=?", true),
        ] {
            let t = DistributionTemplate::parse(m, spec, anti).unwrap();
            let rows = constraint_rows(&t);
            let n = t.unknown_count();
            let limit = 1i64 << m;
            let mut want = Vec::new();
            let mut point = vec![0i64; n];
            'outer: loop {
                let p = big(&point);
                if rows.iter().all(|r| !r.evaluate(&p).is_negative()) {
                    want.push(p);
                }
                for idx in (0..n).rev() {
                    if point[idx] < limit {
                        point[idx] += 1;
                        for j in idx + 1..n {
                            point[j] = 0;
                        }
                        continue 'outer;
                    }
                }
                break;
            }
            let got = feasible_distributions(&t).unwrap_or_else(|e| panic!("m={m} {spec}: {e}"));
            assert_eq!(got.solutions, want, "m={m} {spec}");
        }
    }
}
