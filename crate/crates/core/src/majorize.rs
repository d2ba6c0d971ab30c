//! Majorization partial order on integer tuples.
//!
//! `λ ⪯ μ` when the descending partial sums of `λ` are dominated by those of
//! `μ` and the totals agree. Product inequalities over the sequence only
//! depend on tuples up to permutation, so sweeps enumerate descending
//! tuples.

use crate::error::Error;

/// Outcome of a majorization test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Majorization {
    pub holds: bool,
    /// True when `λ` is not a permutation of `μ` (meaningful only if `holds`).
    pub strict: bool,
}

/// Tests `lambda ⪯ mu` by the partial-sum definition.
pub fn is_majorized(lambda: &[usize], mu: &[usize]) -> Result<Majorization, Error> {
    if lambda.len() != mu.len() {
        return Err(Error::LengthMismatch {
            left: lambda.len(),
            right: mu.len(),
        });
    }
    let mut l = lambda.to_vec();
    let mut m = mu.to_vec();
    l.sort_unstable_by(|a, b| b.cmp(a));
    m.sort_unstable_by(|a, b| b.cmp(a));
    let mut sum_l = 0usize;
    let mut sum_m = 0usize;
    for k in 0..l.len() {
        sum_l += l[k];
        sum_m += m[k];
        if k + 1 < l.len() && sum_l > sum_m {
            return Ok(Majorization {
                holds: false,
                strict: false,
            });
        }
    }
    if sum_l != sum_m {
        return Ok(Majorization {
            holds: false,
            strict: false,
        });
    }
    Ok(Majorization {
        holds: true,
        strict: l != m,
    })
}

/// A verified majorized pair; constructing one proves `lambda ⪯ mu`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MajPair {
    lambda: Vec<usize>,
    mu: Vec<usize>,
    strict: bool,
}

impl MajPair {
    pub fn verify(lambda: Vec<usize>, mu: Vec<usize>) -> Result<Self, Error> {
        let check = is_majorized(&lambda, &mu)?;
        if !check.holds {
            return Err(Error::NotMajorized);
        }
        Ok(MajPair {
            lambda,
            mu,
            strict: check.strict,
        })
    }

    pub fn lambda(&self) -> &[usize] {
        &self.lambda
    }

    pub fn mu(&self) -> &[usize] {
        &self.mu
    }

    pub fn strict(&self) -> bool {
        self.strict
    }

    pub fn len(&self) -> usize {
        self.lambda.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lambda.is_empty()
    }

    pub fn max_entry(&self) -> usize {
        self.lambda
            .iter()
            .chain(self.mu.iter())
            .copied()
            .max()
            .unwrap_or(0)
    }
}

/// All descending `len`-tuples with entries in `0..=max_entry`,
/// lexicographically ordered.
pub fn descending_tuples(len: usize, max_entry: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    fn rec(out: &mut Vec<Vec<usize>>, cur: &mut Vec<usize>, len: usize, cap: usize) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for v in (0..=cap).rev() {
            cur.push(v);
            rec(out, cur, len, v);
            cur.pop();
        }
    }
    rec(&mut out, &mut cur, len, max_entry);
    out
}

/// All majorized pairs `(λ, μ)` of descending `len`-tuples with entries
/// `≤ max_entry`, in deterministic order.
pub fn majorization_pairs(len: usize, max_entry: usize) -> Vec<MajPair> {
    let tuples = descending_tuples(len, max_entry);
    let mut out = Vec::new();
    for mu in &tuples {
        for lambda in &tuples {
            if let Ok(check) = is_majorized(lambda, mu) {
                if check.holds {
                    out.push(MajPair {
                        lambda: lambda.clone(),
                        mu: mu.clone(),
                        strict: check.strict,
                    });
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn textbook_pairs() {
        let m = is_majorized(&[1, 1], &[2, 0]).unwrap();
        assert!(m.holds && m.strict);
        let m = is_majorized(&[2, 0], &[1, 1]).unwrap();
        assert!(!m.holds);
        let m = is_majorized(&[3, 2, 1], &[3, 2, 1]).unwrap();
        assert!(m.holds && !m.strict);
    }

    #[test]
    fn order_of_entries_is_irrelevant() {
        let m = is_majorized(&[1, 2, 0], &[0, 3, 0]).unwrap();
        assert!(m.holds && m.strict);
    }

    #[test]
    fn unequal_totals_do_not_majorize() {
        let m = is_majorized(&[1, 1], &[3, 0]).unwrap();
        assert!(!m.holds);
    }

    #[test]
    fn length_mismatch_is_an_error() {
        assert!(matches!(
            is_majorized(&[1], &[1, 0]),
            Err(Error::LengthMismatch { left: 1, right: 2 })
        ));
    }

    #[test]
    fn pair_verification() {
        assert!(MajPair::verify(vec![1, 1], vec![2, 0]).is_ok());
        assert!(matches!(
            MajPair::verify(vec![2, 0], vec![1, 1]),
            Err(Error::NotMajorized)
        ));
    }

    #[test]
    fn tuple_enumeration_counts() {
        // Descending 2-tuples over 0..=2: (2,2),(2,1),(2,0),(1,1),(1,0),(0,0).
        assert_eq!(descending_tuples(2, 2).len(), 6);
        let pairs = majorization_pairs(2, 2);
        assert!(pairs.iter().all(|p| is_majorized(p.lambda(), p.mu()).unwrap().holds));
        // Every tuple majorizes itself.
        assert!(pairs.len() >= 6);
    }
}
