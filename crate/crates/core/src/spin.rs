//! Schur Q-function expansions in the odd power-sum basis and the spin
//! character coefficients they encode.
//!
//! The one-row functions come straight from the generating product
//! `prod_j (1+t x_j)/(1-t x_j) = exp(2 sum_{k odd} p_k t^k / k)`, giving
//! `q_r = sum_{mu odd, |mu|=r} (2^{l(mu)}/z_mu) p_mu`. Two-row functions use
//! the alternating contraction, longer shapes the Pfaffian expansion along
//! the first row. Extracting the `p_mu` coefficient of `Q_lambda` and
//! multiplying by `z_mu / 2^{l(mu)}` yields the integer matrix
//! `X^lambda_mu` on strict-by-odd partitions, with `g_lambda` its first
//! column.

use std::collections::BTreeMap;
use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::partition::{enumerate_partitions, z_of, Partition, PartitionFilter};
use crate::rational::{factorial, pow2, rat, rat_of, Rat};
use crate::{Error, Result};

/// An element of the odd-power-sum ring: a finite rational combination of
/// `p_mu` over partitions `mu` with all parts odd.
#[derive(Clone, Debug, PartialEq)]
pub struct OddPoly {
    terms: BTreeMap<Partition, Rat>,
}

impl OddPoly {
    pub fn zero() -> Self {
        OddPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Partition::empty(), Rat::one());
        OddPoly { terms }
    }

    pub fn terms(&self) -> &BTreeMap<Partition, Rat> {
        &self.terms
    }

    pub fn coeff(&self, mu: &Partition) -> Rat {
        self.terms.get(mu).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn insert(&mut self, mu: Partition, c: Rat) {
        debug_assert!(mu.is_odd());
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(mu) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &OddPoly) {
        for (mu, c) in &other.terms {
            self.insert(mu.clone(), c.clone());
        }
    }

    pub fn scale(&self, c: &Rat) -> OddPoly {
        if c.is_zero() {
            return OddPoly::zero();
        }
        OddPoly {
            terms: self
                .terms
                .iter()
                .map(|(mu, x)| (mu.clone(), x * c))
                .collect(),
        }
    }

    /// Product in the power-sum basis: `p_mu p_nu = p_{mu union nu}`.
    pub fn mul(&self, other: &OddPoly) -> OddPoly {
        let mut out = OddPoly::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let mut parts = a.parts().to_vec();
                parts.extend_from_slice(b.parts());
                let merged = Partition::from_unsorted(parts).expect("valid parts");
                out.insert(merged, ca * cb);
            }
        }
        out
    }
}

/// One-row Q-function `q_r` in the odd power-sum basis.
pub fn q_generator(r: u32) -> OddPoly {
    let mut out = OddPoly::zero();
    for mu in enumerate_partitions(r, PartitionFilter::Odd) {
        out.insert(
            mu.clone(),
            Rat::new(pow2(mu.len() as i64).to_integer(), z_of(&mu)),
        );
    }
    out
}

/// Two-row Q-function `Q_(a,b) = q_a q_b + 2 sum_{i>=1} (-1)^i q_{a+i} q_{b-i}`.
fn q_two_row(a: u32, b: u32) -> OddPoly {
    let mut out = q_generator(a).mul(&q_generator(b));
    for i in 1..=b {
        let prod = q_generator(a + i).mul(&q_generator(b - i));
        let sign = if i % 2 == 0 { rat(2) } else { rat(-2) };
        out.add_assign(&prod.scale(&sign));
    }
    out
}

/// Schur Q-function of a strict partition, in the odd power-sum basis.
pub fn schur_q(lambda: &Partition) -> Result<OddPoly> {
    if !lambda.is_strict() {
        return Err(Error::InvalidArgument(format!(
            "schur_q needs a strict partition, got {lambda}"
        )));
    }
    Ok(schur_q_parts(lambda.parts()))
}

fn schur_q_parts(parts: &[u32]) -> OddPoly {
    match parts.len() {
        0 => OddPoly::one(),
        1 => q_generator(parts[0]),
        2 => q_two_row(parts[0], parts[1]),
        _ => {
            // Pfaffian expansion along the first row; odd lengths get a
            // zero part appended (q_0 = 1 keeps the two-row blocks valid).
            let mut padded = parts.to_vec();
            if padded.len() % 2 == 1 {
                padded.push(0);
            }
            let mut out = OddPoly::zero();
            for j in 1..padded.len() {
                let block = q_two_row(padded[0], padded[j]);
                let rest: Vec<u32> = padded
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != 0 && k != j)
                    .map(|(_, &p)| p)
                    .filter(|&p| p > 0)
                    .collect();
                let term = block.mul(&schur_q_parts(&rest));
                if j % 2 == 1 {
                    out.add_assign(&term);
                } else {
                    out.add_assign(&term.scale(&rat(-1)));
                }
            }
            out
        }
    }
}

/// Spin character coefficients on strict-by-odd partitions of `n`, with the
/// shifted tableau counts `g_lambda = X^lambda_{(1^n)}`.
#[derive(Clone, Debug)]
pub struct SpinCharacterTable {
    pub n: u32,
    pub dp: Vec<Partition>,
    pub op: Vec<Partition>,
    /// `x[lambda][mu]` over the `dp` and `op` orders.
    pub x: Vec<Vec<i64>>,
    pub g: Vec<BigInt>,
    dp_index: HashMap<Partition, usize>,
    op_index: HashMap<Partition, usize>,
}

impl SpinCharacterTable {
    pub fn new(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("spin table needs n >= 1".into()));
        }
        let dp = enumerate_partitions(n, PartitionFilter::Strict);
        let op = enumerate_partitions(n, PartitionFilter::Odd);
        let mut x = Vec::with_capacity(dp.len());
        for lambda in &dp {
            let q = schur_q(lambda)?;
            let mut row = Vec::with_capacity(op.len());
            for mu in &op {
                let val = q.coeff(mu) * rat_of(&z_of(mu)) / pow2(mu.len() as i64);
                if !val.is_integer() {
                    return Err(Error::IdentityFailure(format!(
                        "non-integer spin coefficient at ({lambda}, {mu}): {val}"
                    )));
                }
                row.push(i64::try_from(&val.to_integer()).expect("fits i64"));
            }
            x.push(row);
        }
        let one_col = op.len() - 1; // (1^n) last in reverse-lex order
        let g: Vec<BigInt> = x.iter().map(|row| BigInt::from(row[one_col])).collect();
        for (i, lambda) in dp.iter().enumerate() {
            if g[i] != g_product_formula(lambda) {
                return Err(Error::IdentityFailure(format!(
                    "g({lambda}) disagrees with the product formula"
                )));
            }
        }
        let dp_index = dp.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        let op_index = op.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        Ok(SpinCharacterTable {
            n,
            dp,
            op,
            x,
            g,
            dp_index,
            op_index,
        })
    }

    pub fn dp_index(&self, p: &Partition) -> Option<usize> {
        self.dp_index.get(p).copied()
    }

    pub fn op_index(&self, p: &Partition) -> Option<usize> {
        self.op_index.get(p).copied()
    }

    /// Shifted Plancherel probability `2^{n - l(lambda)} g_lambda^2 / n!`.
    pub fn shifted_plancherel(&self, lam: usize) -> Rat {
        let two = pow2(self.n as i64 - self.dp[lam].len() as i64);
        two * Rat::new(&self.g[lam] * &self.g[lam], factorial(self.n as u64))
    }

    /// Normalized coefficient `X^lambda_mu / g_lambda`.
    pub fn ratio(&self, lam: usize, mu: usize) -> Rat {
        Rat::new(BigInt::from(self.x[lam][mu]), self.g[lam].clone())
    }
}

/// Number of standard shifted tableaux of strict shape `lambda`:
/// `n! / prod(lambda_i!) * prod_{i<j} (lambda_i - lambda_j)/(lambda_i + lambda_j)`.
pub fn g_product_formula(lambda: &Partition) -> BigInt {
    let parts = lambda.parts();
    let mut acc = rat_of(&factorial(lambda.n() as u64));
    for &p in parts {
        acc /= rat_of(&factorial(p as u64));
    }
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            acc *= rat((parts[i] - parts[j]) as i64);
            acc /= rat((parts[i] + parts[j]) as i64);
        }
    }
    debug_assert!(acc.is_integer());
    acc.to_integer()
}

/// Adjoint of multiplication by `p_1`: half the formal derivative in `p_1`.
pub fn p1_perp(poly: &OddPoly) -> OddPoly {
    let mut out = OddPoly::zero();
    for (mu, c) in poly.terms() {
        let m1 = mu.mult(1);
        if m1 == 0 {
            continue;
        }
        let mut parts = mu.parts().to_vec();
        parts.pop(); // drop one part equal to 1 (parts sorted decreasingly)
        let reduced = Partition::new(parts).expect("still sorted");
        out.insert(reduced, c * rat(m1 as i64) / rat(2));
    }
    out
}

/// Hall-Littlewood `P_lambda` at parameter -1, expanded in the odd
/// power-sum basis from the spin coefficients.
pub fn hall_littlewood_p(table: &SpinCharacterTable, lam: usize) -> OddPoly {
    let mut out = OddPoly::zero();
    let scale = pow2(-(table.dp[lam].len() as i64));
    for (j, mu) in table.op.iter().enumerate() {
        let c = pow2(mu.len() as i64) * rat(table.x[lam][j]) / rat_of(&z_of(mu));
        out.insert(mu.clone(), c * &scale);
    }
    out
}

/// Signed walk coefficients `p_m` on odd partitions for the generator `mu`:
/// the spectral sum over strict partitions under shifted Plancherel
/// measure. `m = 0` is the indicator of `(1^n)`. These are coefficients,
/// not probabilities, and are never normalized.
pub fn twisted_walk_coefficients(table: &SpinCharacterTable, mu: usize, m: u32) -> Vec<Rat> {
    let n = table.n;
    let eig_scale = pow2(table.op[mu].len() as i64 - n as i64);
    let mut out = Vec::with_capacity(table.op.len());
    for (v, nu) in table.op.iter().enumerate() {
        let mut acc = Rat::zero();
        for lam in 0..table.dp.len() {
            let mut term = table.shifted_plancherel(lam) * table.ratio(lam, v);
            for _ in 0..m {
                term *= table.ratio(lam, mu) * &eig_scale;
            }
            acc += term;
        }
        out.push(acc * rat_of(&factorial(n as u64)) / rat_of(&z_of(nu)));
    }
    out
}

/// `twisted_walk_coefficients` keyed by partition, validating that the
/// generator is odd.
pub fn twisted_walk_map(n: u32, mu: &Partition, m: u32) -> Result<BTreeMap<Partition, Rat>> {
    if !mu.is_odd() || mu.n() != n {
        return Err(Error::InvalidArgument(format!(
            "twisted walk needs an odd partition of {n}, got {mu}"
        )));
    }
    let table = SpinCharacterTable::new(n)?;
    let idx = table.op_index(mu).expect("odd partition of n");
    let vals = twisted_walk_coefficients(&table, idx, m);
    Ok(table.op.iter().cloned().zip(vals).collect())
}
