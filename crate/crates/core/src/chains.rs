//! Construction and auditing of the reversible kernels whose one-step move
//! from stationarity produces the exchangeable pairs.
//!
//! Every kernel is materialized as a dense matrix of exact rationals and
//! checked on construction: rows sum to exactly 1 and detailed balance
//! holds exactly against the stationary measure. The twisted kernel is
//! allowed negative entries (only its reversibility identity is signed);
//! the down-up chain on strict partitions is its genuine-probability
//! counterpart and agrees with it off the diagonal up to the factor
//! `(n-2)/n`.

use num_traits::{One, Signed, Zero};

use crate::characters::CharacterTable;
use crate::gelfand::{GelfandPairData, Label};
use crate::partition::{enumerate_partitions, Partition, PartitionFilter};
use crate::radical::Radical;
use crate::rational::{pow2, rat, rat_of, Rat};
use crate::schemes::AssociationScheme;
use crate::spin::SpinCharacterTable;
use crate::{Error, Result};

/// A finite kernel with exact entries and stationary measure.
///
/// `signed` marks kernels whose holding entries may be negative; genuine
/// chains additionally guarantee nonnegative entries.
#[derive(Clone, Debug)]
pub struct ChainKernel {
    pub states: Vec<Label>,
    pub pi: Vec<Rat>,
    pub k: Vec<Vec<Rat>>,
    pub signed: bool,
}

impl ChainKernel {
    fn validate(&self) -> Result<()> {
        let n = self.states.len();
        for x in 0..n {
            let row: Rat = self.k[x].iter().cloned().sum();
            if row != rat(1) {
                return Err(Error::IdentityFailure(format!(
                    "row {x} sums to {row}, not 1"
                )));
            }
            if !self.signed {
                if let Some(y) = self.k[x].iter().position(|e| e.is_negative()) {
                    return Err(Error::IdentityFailure(format!(
                        "negative transition at ({x},{y})"
                    )));
                }
            }
        }
        for x in 0..n {
            for y in x + 1..n {
                if &self.pi[x] * &self.k[x][y] != &self.pi[y] * &self.k[y][x] {
                    return Err(Error::IdentityFailure(format!(
                        "detailed balance fails at ({x},{y})"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn size(&self) -> usize {
        self.states.len()
    }

    /// Apply the kernel to a coefficient vector: `(K f)(x) = sum_y K(x,y) f(y)`.
    pub fn apply(&self, f: &[Rat]) -> Vec<Rat> {
        self.k
            .iter()
            .map(|row| row.iter().zip(f).map(|(k, v)| k * v).sum())
            .collect()
    }
}

/// `W` as a function on kernel states: a rational coefficient per state
/// under a common square-root scale, `W(x) = coeffs[x] * sqrt(radicand)`.
#[derive(Clone, Debug)]
pub struct WObservable {
    pub coeffs: Vec<Rat>,
    pub radicand: Rat,
}

impl WObservable {
    pub fn value(&self, x: usize) -> Radical {
        Radical::new(self.coeffs[x].clone(), self.radicand.clone())
    }
}

/// Outcome of the linearity check `E(W'|x) = (1-a) W(x)`.
#[derive(Clone, Debug, PartialEq)]
pub enum Linearity {
    Linear {
        a: Rat,
    },
    /// `W` vanishes identically; no constant is defined.
    Degenerate,
    /// The regression is not linear in `W`; the witness state is reported.
    NonLinear {
        state: usize,
    },
}

/// Exact audit of a kernel against an observable.
#[derive(Clone, Debug)]
pub struct AuditReport {
    /// Max deviation of a row sum from 1 (must be exactly 0).
    pub row_sum_deviation: Rat,
    /// Max deviation of `pi(x)K(x,y) - pi(y)K(y,x)` (must be exactly 0).
    pub detailed_balance_deviation: Rat,
    pub linearity: Linearity,
    /// `E(W^2)` under the stationary measure.
    pub second_moment: Rat,
    /// Max `|W' - W|` over transitions with nonzero kernel weight.
    pub max_step: Radical,
}

/// Audit items: row sums, detailed balance, the linear-regression constant,
/// `E(W^2)`, and the maximum step size.
pub fn audit(kernel: &ChainKernel, w: &WObservable) -> Result<AuditReport> {
    let n = kernel.size();
    if w.coeffs.len() != n {
        return Err(Error::SizeMismatch(format!(
            "observable has {} coefficients for {n} states",
            w.coeffs.len()
        )));
    }
    let mut row_dev = Rat::zero();
    for row in &kernel.k {
        let dev = (row.iter().cloned().sum::<Rat>() - rat(1)).abs();
        row_dev = row_dev.max(dev);
    }
    let mut db_dev = Rat::zero();
    for x in 0..n {
        for y in x + 1..n {
            let dev = (&kernel.pi[x] * &kernel.k[x][y] - &kernel.pi[y] * &kernel.k[y][x]).abs();
            db_dev = db_dev.max(dev);
        }
    }
    let expectation = kernel.apply(&w.coeffs);
    let linearity = regression_constant(&w.coeffs, &expectation);
    let second_moment: Rat = (0..n)
        .map(|x| &kernel.pi[x] * &w.coeffs[x] * &w.coeffs[x])
        .sum::<Rat>()
        * &w.radicand;
    let mut max_sq = Rat::zero();
    for x in 0..n {
        for y in 0..n {
            if !kernel.k[x][y].is_zero() {
                let d = &w.coeffs[y] - &w.coeffs[x];
                max_sq = max_sq.max(&d * &d);
            }
        }
    }
    // max |W'-W| = sqrt(max (c_y-c_x)^2 * radicand)
    let max_step = Radical::new(Rat::one(), max_sq * &w.radicand);
    Ok(AuditReport {
        row_sum_deviation: row_dev,
        detailed_balance_deviation: db_dev,
        linearity,
        second_moment,
        max_step,
    })
}

fn regression_constant(coeffs: &[Rat], expectation: &[Rat]) -> Linearity {
    let mut ratio: Option<Rat> = None;
    for (x, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let r = &expectation[x] / c;
        match &ratio {
            None => ratio = Some(r),
            Some(prev) if *prev == r => {}
            Some(_) => return Linearity::NonLinear { state: x },
        }
    }
    let Some(one_minus_a) = ratio else {
        return Linearity::Degenerate;
    };
    // States where W vanishes must also have vanishing conditional mean.
    for (x, c) in coeffs.iter().enumerate() {
        if c.is_zero() && !expectation[x].is_zero() {
            return Linearity::NonLinear { state: x };
        }
    }
    Linearity::Linear {
        a: rat(1) - one_minus_a,
    }
}

/// Kernel on irreducibles of the symmetric group driven by tensoring with
/// `tau`: entries are tensor multiplicities rescaled by dimensions,
/// reversible under Plancherel measure.
pub fn group_chain(table: &CharacterTable, tau: usize) -> Result<ChainKernel> {
    let s = table.parts.len();
    if table.parts[tau] == Partition::single_row(table.n) {
        return Err(Error::InvalidArgument(
            "trivial tau generates the identity kernel (a = 0)".into(),
        ));
    }
    let order = rat_of(&table.group_order());
    let mut k = vec![vec![Rat::zero(); s]; s];
    for lam in 0..s {
        for rho in 0..s {
            let mut acc = Rat::zero();
            for cls in 0..s {
                acc += rat_of(&table.class_sizes[cls])
                    * rat(table.chi(lam, cls) * table.chi(tau, cls) * table.chi(rho, cls));
            }
            acc /= &order;
            // acc is the multiplicity of rho in lam (x) tau
            debug_assert!(acc.is_integer() && !acc.is_negative());
            k[lam][rho] = acc * rat_of(&table.dims[rho])
                / (rat_of(&table.dims[lam]) * rat_of(&table.dims[tau]));
        }
    }
    let kernel = ChainKernel {
        states: table.parts.iter().cloned().map(Label::Shape).collect(),
        pi: (0..s).map(|l| table.plancherel_prob(l)).collect(),
        k,
        signed: false,
    };
    kernel.validate()?;
    Ok(kernel)
}

/// Kernel on spherical functions of a Gelfand pair driven by `omega_t`.
pub fn gelfand_chain(pair: &GelfandPairData, t: usize) -> Result<ChainKernel> {
    let s = pair.size();
    if t >= s {
        return Err(Error::InvalidArgument(format!("no spherical function {t}")));
    }
    // The trivial spherical function is the one that is constant 1.
    if pair.omega[t].iter().all(|v| v == &rat(1)) {
        return Err(Error::InvalidArgument(
            "trivial spherical function generates the identity kernel (a = 0)".into(),
        ));
    }
    let mut k = vec![vec![Rat::zero(); s]; s];
    for i in 0..s {
        for j in 0..s {
            let mut acc = Rat::zero();
            for r in 0..s {
                acc += &pair.coset_ratio[r]
                    * &pair.omega[i][r]
                    * &pair.omega[t][r]
                    * &pair.omega[j][r];
            }
            k[i][j] = acc * pair.plancherel(j);
        }
    }
    let kernel = ChainKernel {
        states: (0..s).map(Label::Index).collect(),
        pi: (0..s).map(|i| pair.plancherel(i)).collect(),
        k,
        signed: false,
    };
    kernel.validate()?;
    Ok(kernel)
}

/// The signed kernel on strict partitions driven by the spin coefficients
/// of `tau`. Rows sum to 1 and the reversibility identity holds with
/// signs; holding entries may be negative.
pub fn twisted_signed_kernel(table: &SpinCharacterTable, tau: usize) -> Result<ChainKernel> {
    let dp = &table.dp;
    let op = &table.op;
    let s = dp.len();
    let mut k = vec![vec![Rat::zero(); s]; s];
    for lam in 0..s {
        for rho in 0..s {
            let mut acc = Rat::zero();
            for (v, nu) in op.iter().enumerate() {
                acc += pow2(nu.len() as i64)
                    * rat(table.x[lam][v] * table.x[rho][v] * table.x[tau][v])
                    / rat_of(&crate::partition::z_of(nu));
            }
            acc *= rat_of(&table.g[rho])
                / (pow2(dp[rho].len() as i64) * rat_of(&table.g[lam]) * rat_of(&table.g[tau]));
            k[lam][rho] = acc;
        }
    }
    let kernel = ChainKernel {
        states: dp.iter().cloned().map(Label::Shape).collect(),
        pi: (0..s).map(|l| table.shifted_plancherel(l)).collect(),
        k,
        signed: true,
    };
    kernel.validate()?;
    Ok(kernel)
}

/// The genuine down-up chain on strict partitions: remove a box uniformly
/// weighted by shifted dimensions, then add one back.
pub fn schur_down_up_chain(table: &SpinCharacterTable) -> Result<ChainKernel> {
    let n = table.n;
    if n < 2 {
        return Err(Error::InvalidArgument("down-up chain needs n >= 2".into()));
    }
    let dp = &table.dp;
    let s = dp.len();
    let down: Vec<Vec<Partition>> = dp.iter().map(|l| l.strict_down_set()).collect();
    let mut k = vec![vec![Rat::zero(); s]; s];
    for lam in 0..s {
        for rho in 0..s {
            let mut acc = Rat::zero();
            for eta in &down[lam] {
                if down[rho].contains(eta) {
                    acc += pow2(eta.len() as i64 - dp[rho].len() as i64);
                }
            }
            k[lam][rho] =
                rat(2) * rat_of(&table.g[rho]) * acc / (rat(n as i64) * rat_of(&table.g[lam]));
        }
    }
    let kernel = ChainKernel {
        states: dp.iter().cloned().map(Label::Shape).collect(),
        pi: (0..s).map(|l| table.shifted_plancherel(l)).collect(),
        k,
        signed: false,
    };
    kernel.validate()?;
    Ok(kernel)
}

/// Kernel on scheme idempotents driven by class `t`.
pub fn scheme_chain(scheme: &AssociationScheme, t: usize) -> Result<ChainKernel> {
    let m = scheme.n_classes + 1;
    if t == 0 || t >= m {
        return Err(Error::InvalidArgument(format!(
            "chain class needs 1 <= t <= {}, got {t}",
            scheme.n_classes
        )));
    }
    let mut k = vec![vec![Rat::zero(); m]; m];
    for i in 0..m {
        for j in 0..m {
            let mut acc = Rat::zero();
            for r in 0..m {
                let v = rat_of(&scheme.valencies[r]);
                acc += &scheme.phi[r][i] * &scheme.phi[r][t] * &scheme.phi[r][j] / (&v * &v);
            }
            k[i][j] = acc * scheme.plancherel(j);
        }
    }
    let kernel = ChainKernel {
        states: (0..m).map(Label::Index).collect(),
        pi: (0..m).map(|i| scheme.plancherel(i)).collect(),
        k,
        signed: false,
    };
    kernel.validate()?;
    Ok(kernel)
}

// Observables for the built-in structures, aligned with the corresponding
// kernels' state order.

/// `W(lambda) = sqrt(|C|) chi^lambda(C)/dim lambda` on group-chain states.
pub fn w_group(table: &CharacterTable, c: usize) -> WObservable {
    WObservable {
        coeffs: (0..table.parts.len()).map(|l| table.ratio(l, c)).collect(),
        radicand: rat_of(&table.class_sizes[c]),
    }
}

/// `W(i) = sqrt(|K_u|/|K|) omega_i(g_u)` on Gelfand-chain states.
pub fn w_gelfand(pair: &GelfandPairData, u: usize) -> WObservable {
    WObservable {
        coeffs: (0..pair.size()).map(|i| pair.omega[i][u].clone()).collect(),
        radicand: pair.coset_ratio[u].clone(),
    }
}

/// `W(lambda) = sqrt(n!/(z_mu 2^{n-l(mu)})) X^lambda_mu / g_lambda` on
/// strict-partition states.
pub fn w_spin(table: &SpinCharacterTable, mu: usize) -> WObservable {
    let n = table.n;
    let z = rat_of(&crate::partition::z_of(&table.op[mu]));
    let radicand = rat_of(&crate::rational::factorial(n as u64))
        / (z * pow2(n as i64 - table.op[mu].len() as i64));
    WObservable {
        coeffs: (0..table.dp.len()).map(|l| table.ratio(l, mu)).collect(),
        radicand,
    }
}

/// `W(i) = phi_s(i)/sqrt(v_s)` on scheme-chain states.
pub fn w_scheme(scheme: &AssociationScheme, s: usize) -> WObservable {
    WObservable {
        coeffs: (0..scheme.n_classes + 1)
            .map(|i| scheme.normalized_eigenvalue(s, i))
            .collect(),
        radicand: rat_of(&scheme.valencies[s]),
    }
}

/// Eigenvector check: applying `kernel` to each basis observable must give
/// an exact scalar multiple, with the stated eigenvalue.
pub fn check_eigenvector(kernel: &ChainKernel, w: &WObservable, eigenvalue: &Rat) -> Result<()> {
    let image = kernel.apply(&w.coeffs);
    for (x, c) in w.coeffs.iter().enumerate() {
        if image[x] != eigenvalue * c {
            return Err(Error::IdentityFailure(format!(
                "eigenvector relation fails at state {x}: {} vs {}",
                image[x],
                eigenvalue * c
            )));
        }
    }
    Ok(())
}

/// The partitions of `n`, as chain states (reverse-lexicographic order).
pub fn partition_states(n: u32) -> Vec<Partition> {
    enumerate_partitions(n, PartitionFilter::All)
}
