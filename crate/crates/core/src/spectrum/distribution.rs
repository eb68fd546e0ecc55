use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::code::Code;
use crate::error::{Error, Result};
use crate::hamming::KrawtchoukTable;

/// Distance distribution of a code, kept both as ordered pair counts and as
/// the normalized tuple `a_i = N_i / |C|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceDistribution {
    pub m: usize,
    pub size: usize,
    pub pair_counts: Vec<u64>,
    pub a: Vec<BigRational>,
}

impl DistanceDistribution {
    /// `sum_i a_i`, which equals `|C|`.
    pub fn total(&self) -> BigRational {
        self.a.iter().fold(BigRational::zero(), |acc, x| acc + x)
    }

    /// Entries as integers when all are integral.
    pub fn as_integers(&self) -> Option<Vec<BigInt>> {
        self.a
            .iter()
            .map(|x| x.is_integer().then(|| x.to_integer()))
            .collect()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..=self.m).all(|i| self.a[i] == self.a[self.m - i])
    }
}

pub fn distance_distribution(c: &Code) -> Result<DistanceDistribution> {
    if c.is_empty() {
        return Err(Error::EmptyCode);
    }
    let m = c.length();
    let words = c.bits();
    let mut counts = vec![0u64; m + 1];
    counts[0] = words.len() as u64;
    for (i, &x) in words.iter().enumerate() {
        for &y in &words[i + 1..] {
            counts[(x ^ y).count_ones() as usize] += 2;
        }
    }
    let size = BigInt::from(words.len());
    let a = counts
        .iter()
        .map(|&n| BigRational::new(BigInt::from(n), size.clone()))
        .collect();
    Ok(DistanceDistribution {
        m,
        size: words.len(),
        pair_counts: counts,
        a,
    })
}

/// `a'_k = sum_i a_i K_k(i)` for `k = 0..=m`.
pub fn macwilliams_transform(dist: &DistanceDistribution) -> Vec<BigRational> {
    let table = KrawtchoukTable::new(dist.m);
    (0..=dist.m)
        .map(|k| {
            dist.a
                .iter()
                .zip(table.row(k))
                .fold(BigRational::zero(), |acc, (a, kv)| {
                    acc + a * BigRational::from_integer(kv.clone())
                })
        })
        .collect()
}

/// Decimal for integers, `p/q` otherwise.
pub fn format_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.to_integer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistributionSummary {
    pub pair_counts: Vec<String>,
    pub a: Vec<String>,
    pub transform: Vec<String>,
}

pub fn summarize(dist: &DistanceDistribution) -> DistributionSummary {
    DistributionSummary {
        pair_counts: dist.pair_counts.iter().map(u64::to_string).collect(),
        a: dist.a.iter().map(format_rational).collect(),
        transform: macwilliams_transform(dist).iter().map(format_rational).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{golay24, nordstrom_robinson, punctured_nordstrom_robinson};
    use crate::hamming::krawtchouk;
    use num_traits::Signed;

    fn ints(d: &DistanceDistribution) -> Vec<i64> {
        d.as_integers()
            .unwrap()
            .iter()
            .map(|x| x.try_into().unwrap())
            .collect()
    }

    #[test]
    fn nr_distribution() {
        let d = distance_distribution(&nordstrom_robinson()).unwrap();
        assert_eq!(
            ints(&d),
            vec![1, 0, 0, 0, 0, 0, 112, 0, 30, 0, 112, 0, 0, 0, 0, 0, 1]
        );
        assert_eq!(d.total(), BigRational::from_integer(256.into()));
        assert!(d.is_symmetric());
    }

    #[test]
    fn pn_distribution() {
        let d = distance_distribution(&punctured_nordstrom_robinson(1).unwrap()).unwrap();
        assert_eq!(
            ints(&d),
            vec![1, 0, 0, 0, 0, 42, 70, 15, 15, 70, 42, 0, 0, 0, 0, 1]
        );
    }

    #[test]
    fn tiny_distribution() {
        let c = Code::parse_text("m=2\n00\n11\n").unwrap();
        let d = distance_distribution(&c).unwrap();
        assert_eq!(ints(&d), vec![1, 0, 1]);
        assert_eq!(d.pair_counts, vec![2, 0, 2]);
        let t = macwilliams_transform(&d);
        assert_eq!(t[0], BigRational::from_integer(2.into()));
    }

    #[test]
    fn non_integral_entries_kept_exact() {
        let c = Code::parse_text("m=3\n000\n011\n111\n").unwrap();
        let d = distance_distribution(&c).unwrap();
        assert!(d.as_integers().is_none());
        assert_eq!(format_rational(&d.a[2]), "2/3");
        assert_eq!(d.total(), BigRational::from_integer(3.into()));
    }

    #[test]
    fn transform_nonnegative_on_constructed_codes() {
        for c in [nordstrom_robinson(), punctured_nordstrom_robinson(1).unwrap()] {
            let t = macwilliams_transform(&distance_distribution(&c).unwrap());
            assert_eq!(t[0], BigRational::from_integer(BigInt::from(c.len())));
            assert!(t.iter().all(|x| !x.is_negative()));
        }
    }

    #[test]
    fn golay_is_self_dual() {
        let g = golay24();
        let d = distance_distribution(&g).unwrap();
        let t = macwilliams_transform(&d);
        // oracle: evaluate the transform directly from the weight histogram
        let hist = g.weight_histogram();
        for k in 0..=24 {
            let direct: BigInt = (0..=24)
                .map(|i| BigInt::from(hist[i]) * krawtchouk(24, k, i).unwrap())
                .sum();
            assert_eq!(t[k], BigRational::from_integer(direct));
            assert_eq!(t[k], &d.a[k] * BigRational::from_integer(4096.into()));
        }
    }
}
