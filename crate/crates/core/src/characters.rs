//! Exact irreducible characters of the symmetric group via the
//! Murnaghan-Nakayama border-strip recursion, plus Plancherel measure and
//! the character-ratio spectrum.
//!
//! The recursion is run on beta-sets (first-column hook lengths): removing a
//! border strip of length `r` replaces one beta number `b` by `b - r`, with
//! sign `(-1)^h` where `h` counts the beta numbers jumped over. A shared
//! memo on `(shape, class-suffix)` pairs makes whole-table construction for
//! `n <= 14` cheap.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::One;

use crate::partition::{class_size, enumerate_partitions, Partition, PartitionFilter};
use crate::radical::Radical;
use crate::rational::{factorial, rat_of, Rat};
use crate::spectrum::SpectrumAtomList;
use crate::{Error, Result};

/// Murnaghan-Nakayama evaluator with a write-once memo.
#[derive(Default)]
pub struct MnCache {
    memo: HashMap<(Vec<u32>, Vec<u32>), i64>,
}

impl MnCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// `chi^lambda(mu)` for partitions of the same size.
    pub fn chi(&mut self, lambda: &Partition, mu: &Partition) -> Result<i64> {
        if lambda.n() != mu.n() {
            return Err(Error::SizeMismatch(format!(
                "character needs |lambda| = |mu|, got {lambda} and {mu}"
            )));
        }
        Ok(self.chi_inner(lambda.parts(), mu.parts()))
    }

    fn chi_inner(&mut self, lambda: &[u32], mu: &[u32]) -> i64 {
        if lambda.is_empty() {
            return 1;
        }
        let key = (lambda.to_vec(), mu.to_vec());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let r = mu[0];
        let rest = &mu[1..];
        // beta set, strictly decreasing
        let len = lambda.len();
        let beta: Vec<i64> = lambda
            .iter()
            .enumerate()
            .map(|(i, &p)| p as i64 + (len - 1 - i) as i64)
            .collect();
        let mut total = 0i64;
        for (i, &b) in beta.iter().enumerate() {
            let target = b - r as i64;
            if target < 0 || beta.contains(&target) {
                continue;
            }
            // height: beta numbers strictly between target and b
            let height = beta.iter().filter(|&&x| x < b && x > target).count();
            let mut new_beta = beta.clone();
            new_beta[i] = target;
            new_beta.sort_unstable_by(|a, b| b.cmp(a));
            let new_lambda: Vec<u32> = new_beta
                .iter()
                .enumerate()
                .map(|(j, &x)| (x - (len - 1 - j) as i64) as u32)
                .filter(|&p| p > 0)
                .collect();
            let sub = self.chi_inner(&new_lambda, rest);
            if height % 2 == 0 {
                total += sub;
            } else {
                total -= sub;
            }
        }
        self.memo.insert(key, total);
        total
    }
}

/// One row of the character table: the values of `chi^lambda` on every
/// class.
#[derive(Clone, Debug)]
pub struct CharacterSlice {
    pub label: Partition,
    /// Values indexed like the table's class list.
    pub values: Vec<i64>,
}

/// The full character table of the symmetric group of degree `n`.
///
/// Rows (irreducibles) and columns (classes) are both indexed by the
/// reverse-lexicographic partition list, so `parts[i]` names row `i` and
/// column `i` simultaneously.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub n: u32,
    pub parts: Vec<Partition>,
    pub rows: Vec<CharacterSlice>,
    pub dims: Vec<BigInt>,
    pub class_sizes: Vec<BigInt>,
    index: HashMap<Partition, usize>,
}

impl CharacterTable {
    pub fn new(n: u32) -> Self {
        let parts = enumerate_partitions(n, PartitionFilter::All);
        let mut cache = MnCache::new();
        let mut rows = Vec::with_capacity(parts.len());
        for lambda in &parts {
            let values = parts
                .iter()
                .map(|mu| cache.chi(lambda, mu).expect("sizes match"))
                .collect();
            rows.push(CharacterSlice {
                label: lambda.clone(),
                values,
            });
        }
        let id_col = parts.len().saturating_sub(1);
        let dims = rows
            .iter()
            .map(|r| {
                BigInt::from(if parts.is_empty() {
                    1
                } else {
                    r.values[id_col]
                })
            })
            .collect();
        let class_sizes = parts.iter().map(class_size).collect();
        let index = parts
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        CharacterTable {
            n,
            parts,
            rows,
            dims,
            class_sizes,
            index,
        }
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Column index of the identity class `(1^n)`.
    pub fn identity_class(&self) -> usize {
        self.parts.len() - 1
    }

    pub fn chi(&self, lambda: usize, mu: usize) -> i64 {
        self.rows[lambda].values[mu]
    }

    /// Character ratio `chi^lambda(mu) / dim(lambda)` as an exact rational.
    pub fn ratio(&self, lambda: usize, mu: usize) -> Rat {
        Rat::new(
            BigInt::from(self.chi(lambda, mu)),
            self.dims[lambda].clone(),
        )
    }

    pub fn group_order(&self) -> BigInt {
        factorial(self.n as u64)
    }

    /// Plancherel probability `dim(lambda)^2 / n!`.
    pub fn plancherel_prob(&self, lambda: usize) -> Rat {
        Rat::new(&self.dims[lambda] * &self.dims[lambda], self.group_order())
    }
}

/// Standalone character value, for one-off evaluations.
pub fn character(lambda: &Partition, mu: &Partition) -> Result<i64> {
    MnCache::new().chi(lambda, mu)
}

/// Dimension by the hook length formula, `n! / prod hooks`.
pub fn hook_dim(lambda: &Partition) -> BigInt {
    let mut hooks = BigInt::one();
    for row in 0..lambda.len() {
        for col in 0..lambda.parts()[row] as usize {
            hooks *= BigInt::from(lambda.arm(row, col) + lambda.leg(row, col) + 1);
        }
    }
    factorial(lambda.n() as u64) / hooks
}

/// The Plancherel measure of the symmetric group of degree `n`:
/// probability `dim(lambda)^2 / n!` per partition.
#[derive(Clone, Debug)]
pub struct PlancherelMeasure {
    pub entries: Vec<(Partition, Rat)>,
}

pub fn plancherel(n: u32) -> Result<PlancherelMeasure> {
    if n == 0 {
        return Err(Error::InvalidArgument("plancherel needs n >= 1".into()));
    }
    let table = CharacterTable::new(n);
    let entries = table
        .parts
        .iter()
        .enumerate()
        .map(|(i, p)| (p.clone(), table.plancherel_prob(i)))
        .collect();
    Ok(PlancherelMeasure { entries })
}

/// The spectrum of the class-`C` walk: atoms
/// `W(lambda) = sqrt(|C|) chi^lambda(C)/dim(lambda)` weighted by Plancherel
/// measure. `C` must not be the identity class (that makes `W` constant).
pub fn character_ratio_spectrum(table: &CharacterTable, c: usize) -> Result<SpectrumAtomList> {
    if table.parts[c].mult(1) == table.n {
        return Err(Error::Degenerate(
            "identity class generates a constant spectrum".into(),
        ));
    }
    let size = rat_of(&table.class_sizes[c]);
    let atoms = (0..table.parts.len())
        .map(|lam| {
            (
                Radical::new(table.ratio(lam, c), size.clone()),
                table.plancherel_prob(lam),
            )
        })
        .collect();
    SpectrumAtomList::new(atoms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, rat};
    use num_traits::Zero;

    fn mk(v: Vec<u32>) -> Partition {
        Partition::new(v).unwrap()
    }

    #[test]
    fn small_table_matches_known_values() {
        // S_3: classes (3), (2,1), (1^3)
        let t = CharacterTable::new(3);
        let row = |p: Vec<u32>| t.rows[t.index_of(&mk(p)).unwrap()].values.clone();
        assert_eq!(row(vec![3]), vec![1, 1, 1]);
        assert_eq!(row(vec![2, 1]), vec![-1, 0, 2]);
        assert_eq!(row(vec![1, 1, 1]), vec![1, -1, 1]);
    }

    #[test]
    fn permutation_trace_oracle_s4() {
        // chi^{(2,2)}((2,1,1)) = 0, checked in the spec against a trace
        // oracle; the standard S_4 table pins the whole row.
        let t = CharacterTable::new(4);
        let lam = t.index_of(&mk(vec![2, 2])).unwrap();
        let c = t.index_of(&mk(vec![2, 1, 1])).unwrap();
        assert_eq!(t.chi(lam, c), 0);
        assert_eq!(
            t.rows[lam].values,
            // classes (4), (3,1), (2,2), (2,1,1), (1^4)
            vec![0, -1, 2, 0, 2]
        );
    }

    #[test]
    fn size_mismatch_is_rejected() {
        assert!(character(&mk(vec![3]), &mk(vec![2])).is_err());
    }

    #[test]
    fn near_trivial_row_counts_fixed_points() {
        for n in 2..=10u32 {
            let t = CharacterTable::new(n);
            let lam = t.index_of(&mk(vec![n - 1, 1])).unwrap();
            for (j, mu) in t.parts.iter().enumerate() {
                assert_eq!(t.chi(lam, j), mu.mult(1) as i64 - 1, "n={n} mu={mu}");
            }
            let triv = t.index_of(&Partition::single_row(n)).unwrap();
            assert!(t.rows[triv].values.iter().all(|&v| v == 1));
        }
    }

    #[test]
    fn dims_match_hook_length_formula() {
        for n in 1..=10u32 {
            let t = CharacterTable::new(n);
            for (i, lam) in t.parts.iter().enumerate() {
                assert_eq!(t.dims[i], hook_dim(lam), "n={n} lambda={lam}");
            }
        }
    }

    #[test]
    fn plancherel_sums_to_one() {
        let p = plancherel(4).unwrap();
        let dims: Vec<i64> = CharacterTable::new(4)
            .dims
            .iter()
            .map(|d| i64::try_from(d).unwrap())
            .collect();
        assert_eq!(dims, vec![1, 3, 2, 3, 1]);
        let total: Rat = p.entries.iter().map(|(_, q)| q.clone()).sum();
        assert_eq!(total, rat(1));

        let p5 = plancherel(5).unwrap();
        let q = p5
            .entries
            .iter()
            .find(|(l, _)| l == &mk(vec![3, 2]))
            .unwrap();
        assert_eq!(q.1, frac(25, 120));

        let p1 = plancherel(1).unwrap();
        assert_eq!(p1.entries.len(), 1);
        assert_eq!(p1.entries[0].1, rat(1));
    }

    #[test]
    fn row_orthogonality_up_to_8() {
        for n in 1..=8u32 {
            let t = CharacterTable::new(n);
            let order = rat_of(&t.group_order());
            for a in 0..t.parts.len() {
                for b in a..t.parts.len() {
                    let mut s = Rat::zero();
                    for k in 0..t.parts.len() {
                        s += rat_of(&t.class_sizes[k]) * rat(t.chi(a, k) * t.chi(b, k));
                    }
                    let expect = if a == b { order.clone() } else { Rat::zero() };
                    assert_eq!(s, expect, "n={n} a={a} b={b}");
                }
            }
        }
    }

    #[test]
    fn column_orthogonality_up_to_8() {
        for n in 1..=8u32 {
            let t = CharacterTable::new(n);
            let order = rat_of(&t.group_order());
            for g in 0..t.parts.len() {
                for h in g..t.parts.len() {
                    let mut s = Rat::zero();
                    for r in 0..t.parts.len() {
                        s += rat(t.chi(r, g) * t.chi(r, h));
                    }
                    let expect = if g == h {
                        order.clone() / rat_of(&t.class_sizes[g])
                    } else {
                        Rat::zero()
                    };
                    assert_eq!(s, expect, "n={n} g={g} h={h}");
                }
            }
        }
    }

    #[test]
    fn hook_class_sizes_match_binomial_form() {
        // |C| = C(n,i)(i-1)! for the i-cycle class
        use crate::rational::binomial;
        for (n, i) in [(5u32, 2u32), (8, 3), (10, 4), (6, 6)] {
            let t = CharacterTable::new(n);
            let c = t.index_of(&Partition::hook_type(n, i).unwrap()).unwrap();
            let expect = binomial(n as u64, i as u64) * factorial(i as u64 - 1);
            assert_eq!(t.class_sizes[c], expect, "n={n} i={i}");
        }
    }

    #[test]
    fn ratio_spectrum_moments() {
        // E(W) = 0 and E(W^2) = 1 exactly for n=4, C=(2,1,1).
        let t = CharacterTable::new(4);
        let c = t.index_of(&mk(vec![2, 1, 1])).unwrap();
        let s = character_ratio_spectrum(&t, c).unwrap();
        assert!(s.mean_is_zero());
        assert_eq!(s.second_moment(), rat(1));
        // trivial row contributes the atom sqrt(|C|)
        let top = s.atoms().last().unwrap();
        assert_eq!(top.0, Radical::new(rat(1), rat(6)));

        let id = t.identity_class();
        assert!(character_ratio_spectrum(&t, id).is_err());
    }
}
