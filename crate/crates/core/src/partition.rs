//! Integer partitions with multiplicity accessors, the combinatorial
//! quantities attached to them (`z`, class sizes, arm/leg statistics), and
//! the Jack measure.

use num_bigint::BigInt;
use num_traits::One;

use crate::rational::{self, factorial, rat_of, Rat};
use crate::{Error, Result};

/// A partition: weakly decreasing positive parts.
///
/// Partitions index irreducible representations, conjugacy classes, double
/// cosets, and association-scheme-free data throughout the crate; the empty
/// partition (of 0) is allowed and has `l = 0`, `z = 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Build from weakly decreasing positive parts.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(Error::InvalidArgument(format!(
                    "parts must be weakly decreasing, got {parts:?}"
                )));
            }
        }
        if parts.contains(&0) {
            return Err(Error::InvalidArgument("parts must be positive".into()));
        }
        Ok(Partition { parts })
    }

    /// Build from arbitrary positive parts, sorting them.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts)
    }

    pub fn empty() -> Self {
        Partition { parts: vec![] }
    }

    pub fn single_row(n: u32) -> Self {
        if n == 0 {
            Partition::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// The hook-shaped class generator `(i, 1^{n-i})`.
    pub fn hook_type(n: u32, i: u32) -> Result<Self> {
        if i == 0 || i > n {
            return Err(Error::InvalidArgument(format!(
                "hook type needs 1 <= i <= n, got i={i}, n={n}"
            )));
        }
        let mut parts = vec![i];
        parts.extend(std::iter::repeat_n(1, (n - i) as usize));
        Ok(Partition { parts })
    }

    pub fn one_column(n: u32) -> Self {
        Partition {
            parts: vec![1; n as usize],
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Total size `n`.
    pub fn n(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of parts `l`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Multiplicity `m_j`: the number of parts equal to `j`.
    pub fn mult(&self, j: u32) -> u32 {
        self.parts.iter().filter(|&&p| p == j).count() as u32
    }

    /// `(part value, multiplicity)` pairs, largest part first.
    pub fn mults(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    pub fn is_strict(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    pub fn is_odd(&self) -> bool {
        self.parts.iter().all(|&p| p % 2 == 1)
    }

    /// True if the diagram contains the box at `(row, col)`, zero-indexed.
    pub fn contains(&self, row: usize, col: usize) -> bool {
        row < self.parts.len() && (col as u32) < self.parts[row]
    }

    /// Arm length of a box: boxes strictly to its right in the same row.
    pub fn arm(&self, row: usize, col: usize) -> u32 {
        debug_assert!(self.contains(row, col));
        self.parts[row] - col as u32 - 1
    }

    /// Leg length of a box: boxes strictly below it in the same column.
    pub fn leg(&self, row: usize, col: usize) -> u32 {
        debug_assert!(self.contains(row, col));
        self.parts[row + 1..]
            .iter()
            .filter(|&&p| p > col as u32)
            .count() as u32
    }

    /// Doubled partition `(2 lambda_1, 2 lambda_2, ...)`.
    pub fn doubled(&self) -> Partition {
        Partition {
            parts: self.parts.iter().map(|&p| 2 * p).collect(),
        }
    }

    /// The partitions of `n - 1` obtained by decreasing one part, keeping
    /// only strict results (the downward covers in the strict-partition
    /// lattice).
    pub fn strict_down_set(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..self.parts.len() {
            let mut parts = self.parts.clone();
            parts[i] -= 1;
            if parts[i] == 0 {
                parts.pop();
            }
            if let Ok(p) = Partition::new(parts) {
                if p.is_strict() {
                    out.push(p);
                }
            }
        }
        out
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl std::fmt::Debug for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        std::fmt::Display::fmt(self, f)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PartitionFilter {
    All,
    /// All parts distinct.
    Strict,
    /// All parts odd.
    Odd,
}

/// All partitions of `n` passing the filter, in reverse lexicographic order
/// (`(n)` first, `(1^n)` last). The order is the canonical state order for
/// every matrix in the crate.
pub fn enumerate_partitions(n: u32, filter: PartitionFilter) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    descend(n, n, filter, &mut current, &mut out);
    out
}

fn descend(
    remaining: u32,
    max_part: u32,
    filter: PartitionFilter,
    current: &mut Vec<u32>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    let top = remaining.min(max_part);
    for part in (1..=top).rev() {
        match filter {
            PartitionFilter::Odd if part % 2 == 0 => continue,
            PartitionFilter::Strict if current.last() == Some(&part) => continue,
            _ => {}
        }
        let next_max = if filter == PartitionFilter::Strict {
            part.saturating_sub(1)
        } else {
            part
        };
        current.push(part);
        descend(
            remaining - part,
            next_max.max(1).min(part),
            filter,
            current,
            out,
        );
        current.pop();
    }
}

/// `z_mu = prod_j j^{m_j} m_j!`, the centralizer order of the class `mu`.
pub fn z_of(mu: &Partition) -> BigInt {
    let mut z = BigInt::one();
    for (j, m) in mu.mults() {
        for _ in 0..m {
            z *= j;
        }
        z *= factorial(m as u64);
    }
    z
}

/// Conjugacy class size `n! / z_mu` in the symmetric group of degree `n`.
pub fn class_size(mu: &Partition) -> BigInt {
    factorial(mu.n() as u64) / z_of(mu)
}

/// The Jack measure of `lambda` at parameter `alpha > 0`:
/// `alpha^n n! / prod_s (alpha a(s) + l(s) + 1)(alpha a(s) + l(s) + alpha)`
/// over the boxes `s` of the diagram, with `a` and `l` the arm and leg.
pub fn jack_measure(lambda: &Partition, alpha: &Rat) -> Result<Rat> {
    use num_traits::Zero;
    if alpha <= &Rat::zero() {
        return Err(Error::InvalidArgument(format!(
            "jack measure needs alpha > 0, got {alpha}"
        )));
    }
    let n = lambda.n();
    let mut numer = rat_of(&factorial(n as u64));
    numer *= rational::pow_rat(alpha, n as i64);
    let mut denom = Rat::one();
    for row in 0..lambda.len() {
        for col in 0..lambda.parts()[row] as usize {
            let a = rational::rat(lambda.arm(row, col) as i64);
            let l = rational::rat(lambda.leg(row, col) as i64);
            let base = alpha * &a + &l;
            denom *= &base + rational::rat(1);
            denom *= &base + alpha;
        }
    }
    Ok(numer / denom)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, rat};
    use num_traits::Zero;
    use proptest::prelude::*;
    use std::collections::HashSet;

    #[test]
    fn enumeration_order_is_reverse_lexicographic() {
        let got: Vec<_> = enumerate_partitions(4, PartitionFilter::All)
            .iter()
            .map(|p| p.parts().to_vec())
            .collect();
        assert_eq!(
            got,
            vec![
                vec![4],
                vec![3, 1],
                vec![2, 2],
                vec![2, 1, 1],
                vec![1, 1, 1, 1]
            ]
        );
    }

    #[test]
    fn zero_has_the_empty_partition() {
        let all = enumerate_partitions(0, PartitionFilter::All);
        assert_eq!(all, vec![Partition::empty()]);
        assert_eq!(all[0].len(), 0);
        assert_eq!(z_of(&all[0]), BigInt::one());
    }

    #[test]
    fn filters() {
        let strict: HashSet<_> = enumerate_partitions(3, PartitionFilter::Strict)
            .into_iter()
            .collect();
        let odd: HashSet<_> = enumerate_partitions(3, PartitionFilter::Odd)
            .into_iter()
            .collect();
        let mk = |v: Vec<u32>| Partition::new(v).unwrap();
        assert_eq!(strict, HashSet::from([mk(vec![3]), mk(vec![2, 1])]));
        assert_eq!(odd, HashSet::from([mk(vec![3]), mk(vec![1, 1, 1])]));
    }

    #[test]
    fn strict_and_odd_counts_agree_up_to_30() {
        for n in 0..=30 {
            assert_eq!(
                enumerate_partitions(n, PartitionFilter::Strict).len(),
                enumerate_partitions(n, PartitionFilter::Odd).len(),
                "n={n}"
            );
        }
    }

    #[test]
    fn z_values() {
        let mk = |v: Vec<u32>| Partition::new(v).unwrap();
        assert_eq!(z_of(&mk(vec![1, 1, 1, 1])), BigInt::from(24));
        assert_eq!(z_of(&mk(vec![7])), BigInt::from(7));
        let mu = mk(vec![2, 1, 1]);
        assert_eq!(z_of(&mu), BigInt::from(4));
        assert_eq!(class_size(&mu), BigInt::from(6));
    }

    #[test]
    fn class_sizes_partition_the_group() {
        for n in 1..=12 {
            let mut total = BigInt::zero();
            for mu in enumerate_partitions(n, PartitionFilter::All) {
                total += class_size(&mu);
            }
            assert_eq!(total, factorial(n as u64), "n={n}");
        }
    }

    #[test]
    fn jack_measure_closed_forms() {
        let lam = Partition::new(vec![3, 2]).unwrap();
        // Displayed rational function 60 a^2 / ((2a+2)(3a+1)(a+2)(2a+1)(a+1))
        let expected = |a: Rat| {
            let numer = rat(60) * &a * &a;
            let denom = (rat(2) * &a + rat(2))
                * (rat(3) * &a + rat(1))
                * (&a + rat(2))
                * (rat(2) * &a + rat(1))
                * (&a + rat(1));
            numer / denom
        };
        for a in [rat(1), rat(2), frac(1, 2), rat(3), frac(7, 3)] {
            assert_eq!(jack_measure(&lam, &a).unwrap(), expected(a.clone()));
        }
        assert_eq!(jack_measure(&lam, &rat(2)).unwrap(), frac(2, 21));
        assert_eq!(
            jack_measure(&Partition::single_row(1), &frac(17, 5)).unwrap(),
            rat(1)
        );
        assert!(jack_measure(&lam, &rat(0)).is_err());
        assert!(jack_measure(&lam, &rat(-2)).is_err());
    }

    #[test]
    fn jack_2_sums_to_one() {
        for n in 1..=10 {
            let mut total = Rat::zero();
            for lam in enumerate_partitions(n, PartitionFilter::All) {
                total += jack_measure(&lam, &rat(2)).unwrap();
            }
            assert_eq!(total, rat(1), "n={n}");
        }
    }

    #[test]
    fn arm_and_leg() {
        let lam = Partition::new(vec![3, 2]).unwrap();
        assert_eq!(lam.arm(0, 0), 2);
        assert_eq!(lam.leg(0, 0), 1);
        assert_eq!(lam.arm(1, 1), 0);
        assert_eq!(lam.leg(0, 2), 0);
        assert!(lam.contains(1, 1));
        assert!(!lam.contains(1, 2));
    }

    #[test]
    fn down_set_keeps_strictness() {
        let lam = Partition::new(vec![4, 3, 1]).unwrap();
        let down: HashSet<_> = lam.strict_down_set().into_iter().collect();
        let mk = |v: Vec<u32>| Partition::new(v).unwrap();
        assert_eq!(
            down,
            HashSet::from([mk(vec![3, 3, 1]), mk(vec![4, 2, 1]), mk(vec![4, 3])])
                .into_iter()
                .filter(|p: &Partition| p.is_strict())
                .collect::<HashSet<_>>()
        );
        assert!(down.iter().all(|p| p.is_strict() && p.n() == 7));
    }

    proptest! {
        #[test]
        fn enumeration_is_duplicate_free_and_sorted(n in 0u32..18) {
            let all = enumerate_partitions(n, PartitionFilter::All);
            let set: HashSet<_> = all.iter().cloned().collect();
            prop_assert_eq!(set.len(), all.len());
            for p in &all {
                prop_assert_eq!(p.n(), n);
            }
            // reverse lexicographic: each element strictly dominates the next
            for w in all.windows(2) {
                prop_assert!(w[0].parts() > w[1].parts());
            }
        }
    }
}
