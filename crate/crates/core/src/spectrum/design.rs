//! 2-ary t-designs formed by constant-weight codeword sets, and the
//! arithmetic that constrains their parameters.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::code::Code;
use crate::error::{Error, Result};
use crate::hamming::{binomial, weight_class, Vertex};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DesignOutcome {
    /// Every weight-`t` vertex is covered by exactly `lambda` words.
    Design { lambda: u64 },
    /// `witness` is covered `count` times where the first weight-`t` vertex
    /// was covered `expected` times.
    NotDesign {
        witness: Vertex,
        count: u64,
        expected: u64,
    },
}

impl DesignOutcome {
    pub fn lambda(&self) -> Option<u64> {
        match self {
            DesignOutcome::Design { lambda } => Some(*lambda),
            DesignOutcome::NotDesign { .. } => None,
        }
    }
}

/// Checks whether the constant-weight word set `words` is a `t`-design.
pub fn design_check(words: &Code, t: usize) -> Result<DesignOutcome> {
    let m = words.length();
    let mut weights = words.bits().iter().map(|w| w.count_ones() as usize);
    let k = weights.next();
    if let Some(k) = k {
        if let Some(other) = weights.find(|&w| w != k) {
            return Err(Error::MixedWeights(k, other));
        }
        if t > k {
            return Err(Error::DesignStrength { t, k });
        }
    }
    if t > m {
        return Err(Error::DesignStrength { t, k: m });
    }
    let mut expected = None;
    for nu in weight_class(m, t) {
        let count = words.bits().iter().filter(|&&w| nu & !w == 0).count() as u64;
        match expected {
            None => expected = Some(count),
            Some(e) if e != count => {
                return Ok(DesignOutcome::NotDesign {
                    witness: Vertex::from_raw(m, nu),
                    count,
                    expected: e,
                })
            }
            Some(_) => {}
        }
    }
    Ok(DesignOutcome::Design {
        lambda: expected.unwrap_or(0),
    })
}

/// `lambda_i` for `i = 0..=t` and the block count `b = lambda_0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DesignParams {
    pub t: usize,
    pub m: usize,
    pub k: usize,
    pub lambda: u64,
    pub lambdas: Vec<BigRational>,
    pub b: BigRational,
    pub integral: Vec<bool>,
    pub b_integral: bool,
}

impl DesignParams {
    /// All derived parameters are integers.
    pub fn is_admissible(&self) -> bool {
        self.b_integral && self.integral.iter().all(|&x| x)
    }

    /// Smallest `i` whose `lambda_i` is not an integer.
    pub fn first_non_integral(&self) -> Option<usize> {
        self.integral.iter().position(|&x| !x)
    }
}

fn ratio(n: BigInt, d: BigInt) -> BigRational {
    BigRational::new(n, d)
}

pub fn design_arithmetic(t: usize, m: usize, k: usize, lambda: u64) -> Result<DesignParams> {
    if !(t <= k && k <= m) || lambda == 0 {
        return Err(Error::DesignParams(format!(
            "need 0 <= t <= k <= m and lambda >= 1, got t={t}, k={k}, m={m}, lambda={lambda}"
        )));
    }
    let lam = BigInt::from(lambda);
    // lambda_i * C(k-i, t-i) = lambda * C(m-i, t-i)
    let lambdas: Vec<BigRational> = (0..=t)
        .map(|i| ratio(&lam * binomial(m - i, t - i), binomial(k - i, t - i)))
        .collect();
    let b = lambdas[0].clone();
    // C(m, i) lambda_i = b C(k, i)
    debug_assert!((0..=t).all(|i| {
        BigRational::from_integer(binomial(m, i)) * &lambdas[i]
            == &b * BigRational::from_integer(binomial(k, i))
    }));
    Ok(DesignParams {
        t,
        m,
        k,
        lambda,
        integral: lambdas.iter().map(|x| x.is_integer()).collect(),
        b_integral: b.is_integer(),
        lambdas,
        b,
    })
}

/// `(m - t) / (delta - t)`: a bound on `lambda` for the weight-`delta` words
/// of a code with minimum distance `delta` containing zero.
pub fn lambda_upper_bound(m: usize, t: usize, delta: usize) -> Result<BigRational> {
    if delta <= t || m < t {
        return Err(Error::BoundArgs { delta, t });
    }
    Ok(ratio(BigInt::from(m - t), BigInt::from(delta - t)))
}

/// The outcome of combining divisibility with the upper bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LambdaElimination {
    pub t: usize,
    pub m: usize,
    pub k: usize,
    pub bound: String,
    /// Every `lambda` up to the bound with its first non-integral index, if any.
    pub rejected: Vec<(u64, usize)>,
    pub admissible: Vec<u64>,
}

/// Candidates `1 <= lambda <= bound` whose derived parameters are integral.
pub fn eliminate_lambdas(t: usize, m: usize, k: usize, delta: usize) -> Result<LambdaElimination> {
    let bound = lambda_upper_bound(m, t, delta)?;
    let top = bound.floor().to_integer().to_u64().unwrap_or(0);
    let mut rejected = Vec::new();
    let mut admissible = Vec::new();
    for lambda in 1..=top {
        let p = design_arithmetic(t, m, k, lambda)?;
        match p.first_non_integral() {
            Some(i) => rejected.push((lambda, i)),
            None if p.b_integral => admissible.push(lambda),
            None => rejected.push((lambda, 0)),
        }
    }
    Ok(LambdaElimination {
        t,
        m,
        k,
        bound: super::format_rational(&bound),
        rejected,
        admissible,
    })
}

impl LambdaElimination {
    pub fn odd_values_rejected(&self) -> bool {
        self.admissible.iter().all(|l| l % 2 == 0)
    }
}
