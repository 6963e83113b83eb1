//! Exchangeable-pair moment statistics (computed two independent ways) and
//! the normal-approximation bounds assembled from them.
//!
//! `stats_direct` sums over state pairs of an audited kernel; the
//! `*_closed_stats` functions evaluate the per-structure class sums that
//! express the same quantities through two-step walk occupancies. The two
//! routes must agree exactly; that equality is the engine's central
//! cross-check.
//!
//! Bounds are assembled symbolically. Each reported term is
//! `coeff * (radicand / pi?)^(1/degree)` with exact rational `coeff` and
//! `radicand`; floats appear only in the final evaluation. The third
//! absolute moment is always replaced by its Cauchy-Schwarz majorant
//! `sqrt(E(W'-W)^2 E(W'-W)^4)`, which is how every assembled bound is
//! defined here; the raw quantity is kept only as a diagnostic.

use num_traits::{Signed, Zero};

use crate::chains::{audit, ChainKernel, Linearity, WObservable};
use crate::characters::CharacterTable;
use crate::gelfand::{matchings_coset_ratio, GelfandPairData};
use crate::partition::{z_of, Partition};
use crate::radical::Radical;
use crate::rational::{self, factorial, frac, pow2, rat, rat_of, to_f64, Rat};
use crate::schemes::AssociationScheme;
use crate::spin::SpinCharacterTable;
use crate::walks;
use crate::{Error, Result};

/// Pi to 30 significant digits; the only transcendental constant in the
/// pipeline, used in final float evaluations.
pub const PI_30: f64 = 3.14159265358979323846264338328;

/// Moment statistics of an exchangeable pair `(W, W')`.
#[derive(Clone, Debug, PartialEq)]
pub struct ExchangeableStats {
    /// Linearity constant: `E(W'|W) = (1-a) W`.
    pub a: Rat,
    /// `E(W'-W)^2`.
    pub second_moment: Rat,
    /// `Var(E[(W'-W)^2 | x])`, the state-level conditional variance.
    pub cond_var: Rat,
    /// `E(W'-W)^4`.
    pub fourth_moment: Rat,
    /// Almost-sure step bound `max |W'-W|`, when the pair comes from a
    /// genuine chain; `None` for signed kernels.
    pub max_step: Option<Radical>,
    /// Diagnostic raw `E|W'-W|^3`; bounds never use it.
    pub abs_third: Option<Radical>,
}

/// All moments by exact summation over state pairs of an audited kernel.
pub fn stats_direct(kernel: &ChainKernel, w: &WObservable) -> Result<ExchangeableStats> {
    let report = audit(kernel, w)?;
    let a = match report.linearity {
        Linearity::Linear { a } => a,
        Linearity::Degenerate => {
            return Err(Error::Degenerate("W vanishes identically".into()))
        }
        Linearity::NonLinear { state } => {
            return Err(Error::IdentityFailure(format!(
                "conditional mean is not linear in W (witness state {state}); wrong observable for this kernel"
            )))
        }
    };
    let n = kernel.size();
    let rad = &w.radicand;
    let mut second = Rat::zero();
    let mut mean_sq = Rat::zero();
    let mut fourth = Rat::zero();
    let mut abs3 = Rat::zero();
    for x in 0..n {
        let mut cond2 = Rat::zero();
        let mut cond4 = Rat::zero();
        for y in 0..n {
            if kernel.k[x][y].is_zero() {
                continue;
            }
            let d = &w.coeffs[y] - &w.coeffs[x];
            let d2 = &d * &d;
            cond2 += &kernel.k[x][y] * &d2;
            cond4 += &kernel.k[x][y] * &d2 * &d2;
            if !kernel.signed {
                abs3 += &kernel.pi[x] * &kernel.k[x][y] * &d2 * d.abs();
            }
        }
        let cond2 = cond2 * rad;
        second += &kernel.pi[x] * &cond2;
        mean_sq += &kernel.pi[x] * &cond2 * &cond2;
        fourth += &kernel.pi[x] * cond4 * rad * rad;
    }
    let cond_var = mean_sq - &second * &second;
    debug_assert!(!cond_var.is_negative());
    debug_assert!(kernel.signed || !fourth.is_negative());
    let abs_third = if kernel.signed {
        None
    } else {
        // |W'-W|^3 = |dc|^3 rad^{3/2}
        Some(Radical::new(abs3 * rad, rad.clone()))
    };
    Ok(ExchangeableStats {
        a,
        second_moment: second,
        cond_var,
        fourth_moment: fourth,
        max_step: if kernel.signed {
            None
        } else {
            Some(report.max_step)
        },
        abs_third,
    })
}

/// Closed-form statistics for the group structure: class sums over the
/// two-step occupancies of the class-`c` walk, driven by `tau`.
pub fn group_closed_stats(
    table: &CharacterTable,
    c: usize,
    tau: usize,
) -> Result<ExchangeableStats> {
    if table.parts[tau] == Partition::single_row(table.n) {
        return Err(Error::InvalidArgument("trivial tau has a = 0".into()));
    }
    let p2 = walks::group_walk(table, c, 2);
    let ratio_c = table.ratio(tau, c);
    let a = rat(1) - &ratio_c;
    let size_c = rat_of(&table.class_sizes[c]);
    let id = table.identity_class();
    let mut cond_var = Rat::zero();
    let mut fourth = Rat::zero();
    for k in 0..table.parts.len() {
        let weight = &p2[k] * &p2[k] / rat_of(&table.class_sizes[k]);
        if weight.is_zero() {
            continue;
        }
        let ratio_k = table.ratio(tau, k);
        if k != id {
            let bracket = &ratio_k + rat(1) - rat(2) * &ratio_c;
            cond_var += &weight * &bracket * &bracket;
        }
        fourth += &weight * (rat(8) * &a - rat(6) * (rat(1) - &ratio_k));
    }
    let c2 = &size_c * &size_c;
    Ok(ExchangeableStats {
        second_moment: rat(2) * &a,
        a,
        cond_var: cond_var * &c2,
        fourth_moment: fourth * &c2,
        max_step: None,
        abs_third: None,
    })
}

/// Closed-form statistics for a Gelfand pair: coset sums over two-step
/// occupancies of the coset-`u` walk, driven by `omega_t`.
pub fn gelfand_closed_stats(
    pair: &GelfandPairData,
    u: usize,
    t: usize,
) -> Result<ExchangeableStats> {
    if t >= pair.size() {
        return Err(Error::InvalidArgument(format!("no spherical function {t}")));
    }
    if pair.omega[t].iter().all(|v| v == &rat(1)) {
        return Err(Error::InvalidArgument("trivial omega_t has a = 0".into()));
    }
    let p2 = walks::gelfand_walk(pair, u, 2);
    let omega_u = pair.omega[t][u].clone();
    let a = rat(1) - &omega_u;
    let id = pair.identity_coset();
    let cu = pair.coset_ratio[u].clone();
    let mut cond_var = Rat::zero();
    let mut fourth = Rat::zero();
    for r in 0..pair.size() {
        let weight = &p2[r] * &p2[r] / &pair.coset_ratio[r];
        if weight.is_zero() {
            continue;
        }
        let omega_r = pair.omega[t][r].clone();
        if r != id {
            let bracket = &omega_r + rat(1) - rat(2) * &omega_u;
            cond_var += &weight * &bracket * &bracket;
        }
        fourth += &weight * (rat(8) * &a - rat(6) * (rat(1) - &omega_r));
    }
    let cu2 = &cu * &cu;
    Ok(ExchangeableStats {
        second_moment: rat(2) * &a,
        a,
        cond_var: cond_var * &cu2,
        fourth_moment: fourth * &cu2,
        max_step: None,
        abs_third: None,
    })
}

/// Closed-form statistics for the signed pair `(W, W*)` built from the
/// twisted kernel of `tau`, with `W` indexed by the odd partition `mu`.
pub fn twisted_j_stats(
    table: &SpinCharacterTable,
    mu: usize,
    tau: usize,
) -> Result<ExchangeableStats> {
    let n = table.n;
    let p2 = walks::twisted_walk(table, mu, 2);
    let r_mu = table.ratio(tau, mu);
    let a = rat(1) - &r_mu;
    let mu_len = table.op[mu].len() as i64;
    let pref =
        rat_of(&factorial(n as u64)) * pow2(n as i64 - mu_len) / rat_of(&z_of(&table.op[mu]));
    let pref2 = &pref * &pref;
    let id = table.op.len() - 1; // (1^n) last in reverse-lex order
    let norm = rat_of(&factorial(n as u64)) * pow2(n as i64);
    let mut cond_var = Rat::zero();
    let mut fourth = Rat::zero();
    for (v, nu) in table.op.iter().enumerate() {
        let weight = &p2[v] * &p2[v] * rat_of(&z_of(nu)) * pow2(nu.len() as i64) / &norm;
        if weight.is_zero() {
            continue;
        }
        let r_nu = table.ratio(tau, v);
        if v != id {
            let bracket = &r_nu + rat(1) - rat(2) * &r_mu;
            cond_var += &weight * &bracket * &bracket;
        }
        fourth += &weight * (rat(8) * &a - rat(6) * (rat(1) - &r_nu));
    }
    Ok(ExchangeableStats {
        second_moment: rat(2) * &a,
        a,
        cond_var: cond_var * &pref2,
        fourth_moment: fourth * &pref2,
        max_step: None,
        abs_third: None,
    })
}

/// Statistics of the genuine pair `(W, W')` from the down-up chain:
/// the signed-kernel moments for `tau = (n-1,1)` carry over with one
/// factor `(n-2)/n` per moment (squared for the conditional variance,
/// which scales at the state level).
pub fn twisted_down_up_stats(table: &SpinCharacterTable, mu: usize) -> Result<ExchangeableStats> {
    let n = table.n;
    if n < 3 {
        return Err(Error::InvalidArgument(
            "down-up statistics need n >= 3".into(),
        ));
    }
    let tau = table
        .dp_index(&Partition::new(vec![n - 1, 1]).expect("strict"))
        .expect("strict partition of n");
    let j = twisted_j_stats(table, mu, tau)?;
    let factor = frac(n as i64 - 2, n as i64);
    let m1 = table.op[mu].mult(1);
    let a = rat(1) - frac(m1 as i64, n as i64);
    debug_assert_eq!(rat(2) * &a, &factor * &j.second_moment);
    Ok(ExchangeableStats {
        second_moment: rat(2) * &a,
        a,
        cond_var: &j.cond_var * &factor * &factor,
        fourth_moment: &j.fourth_moment * &factor,
        max_step: None,
        abs_third: None,
    })
}

/// Closed-form statistics for an association scheme: class sums over the
/// two-step occupancies of the class-`s` walk, driven by class `t`.
pub fn scheme_closed_stats(
    scheme: &AssociationScheme,
    s: usize,
    t: usize,
) -> Result<ExchangeableStats> {
    if t == 0 || t > scheme.n_classes {
        return Err(Error::InvalidArgument(format!(
            "driving class needs 1 <= t <= {}, got {t}",
            scheme.n_classes
        )));
    }
    let p2 = walks::scheme_walk(scheme, s, 2)?;
    let ratio_s = scheme.normalized_eigenvalue(s, t);
    let a = rat(1) - &ratio_s;
    let vs = rat_of(&scheme.valencies[s]);
    let mut cond_var = Rat::zero();
    let mut fourth = Rat::zero();
    for r in 0..=scheme.n_classes {
        let weight = &p2[r] * &p2[r] / rat_of(&scheme.valencies[r]);
        if weight.is_zero() {
            continue;
        }
        let ratio_r = scheme.normalized_eigenvalue(r, t);
        if r != 0 {
            let bracket = &ratio_r + rat(1) - rat(2) * &ratio_s;
            cond_var += &weight * &bracket * &bracket;
        }
        fourth += &weight * (rat(8) * &a - rat(6) * (rat(1) - &ratio_r));
    }
    let vs2 = &vs * &vs;
    Ok(ExchangeableStats {
        second_moment: rat(2) * &a,
        a,
        cond_var: cond_var * &vs2,
        fourth_moment: fourth * &vs2,
        max_step: None,
        abs_third: None,
    })
}

/// The near-trivial spherical function of the matchings pair in closed
/// form: `((2n-1) m_1(mu) - n) / (2n(n-1))`.
pub fn matchings_near_trivial_omega(n: u32, mu: &Partition) -> Rat {
    let n = n as i64;
    frac((2 * n - 1) * mu.mult(1) as i64 - n, 2 * n * (n - 1))
}

/// Closed-form matchings statistics for the two-cycle generator, valid for
/// every `n >= 4` without enumerating the pair: two-step occupancies come
/// from the crossing-move count and the driving spherical value from its
/// closed form.
pub fn matchings_closed_stats_two_cycle(n: u32) -> Result<ExchangeableStats> {
    let p2 = crate::gelfand::matchings_p2_two_cycle(n)?;
    let u = Partition::hook_type(n, 2)?;
    let omega_u = matchings_near_trivial_omega(n, &u);
    let a = rat(1) - &omega_u;
    let cu = matchings_coset_ratio(&u);
    let id = Partition::one_column(n);
    let mut cond_var = Rat::zero();
    let mut fourth = Rat::zero();
    for (mu, p) in &p2 {
        let weight = p * p / matchings_coset_ratio(mu);
        let omega_r = matchings_near_trivial_omega(n, mu);
        if mu != &id {
            let bracket = &omega_r + rat(1) - rat(2) * &omega_u;
            cond_var += &weight * &bracket * &bracket;
        }
        fourth += &weight * (rat(8) * &a - rat(6) * (rat(1) - &omega_r));
    }
    let cu2 = &cu * &cu;
    Ok(ExchangeableStats {
        second_moment: rat(2) * &a,
        a,
        cond_var: cond_var * &cu2,
        fourth_moment: fourth * &cu2,
        max_step: None,
        abs_third: None,
    })
}

/// One symbolic bound term: `coeff * (radicand / pi?)^(1/degree)`.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundTerm {
    pub label: &'static str,
    pub coeff: Rat,
    pub radicand: Rat,
    pub degree: u8,
    pub over_pi: bool,
}

impl BoundTerm {
    pub fn eval(&self) -> f64 {
        let mut base = to_f64(&self.radicand);
        if self.over_pi {
            base /= PI_30;
        }
        to_f64(&self.coeff) * base.powf(1.0 / self.degree as f64)
    }

    /// As an exact radical, for degree <= 2 terms.
    pub fn as_radical(&self) -> Option<Radical> {
        match (self.degree, self.over_pi) {
            (1, false) => Some(Radical::from_rat(&self.coeff * &self.radicand)),
            (2, false) => Some(Radical::new(self.coeff.clone(), self.radicand.clone())),
            _ => None,
        }
    }

    pub fn render(&self) -> String {
        let pi = if self.over_pi { "/pi" } else { "" };
        match self.degree {
            1 => format!(
                "{}*({}{})",
                rational::render(&self.coeff),
                rational::render(&self.radicand),
                pi
            ),
            2 => format!(
                "{}*sqrt({}{})",
                rational::render(&self.coeff),
                rational::render(&self.radicand),
                pi
            ),
            _ => format!(
                "{}*({}{})^(1/{})",
                rational::render(&self.coeff),
                rational::render(&self.radicand),
                pi,
                self.degree
            ),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "coeff": rational::render(&self.coeff),
            "degree": self.degree,
            "label": self.label,
            "over_pi": self.over_pi,
            "radicand": rational::render(&self.radicand),
            "value_float": self.eval(),
        })
    }
}

/// An assembled bound: symbolic terms plus their float total.
///
/// The float total is, by construction, the sum of the term evaluations;
/// re-evaluating the symbolic terms reproduces it to relative `1e-12`.
#[derive(Clone, Debug)]
pub struct BoundReport {
    pub variant: String,
    pub terms: Vec<BoundTerm>,
    pub total: f64,
}

impl BoundReport {
    fn assemble(variant: impl Into<String>, terms: Vec<BoundTerm>) -> Self {
        let total = terms.iter().map(BoundTerm::eval).sum();
        BoundReport {
            variant: variant.into(),
            terms,
            total,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "terms": self.terms.iter().map(BoundTerm::to_json).collect::<Vec<_>>(),
            "total": self.total,
            "variant": self.variant,
        })
    }
}

// The boundary a = 1 (conditional mean zero) keeps every moment identity
// intact and is reached by the smallest hypercube, so it is admitted.
fn require_linearity_range(a: &Rat) -> Result<()> {
    if a <= &Rat::zero() || a > &rat(1) {
        return Err(Error::Degenerate(format!(
            "bounds need 0 < a <= 1, got a = {a}"
        )));
    }
    Ok(())
}

/// The two-term bound: `sqrt(cond_var)/a` plus the fourth-root term with
/// the third absolute moment replaced by its Cauchy-Schwarz majorant.
pub fn assemble_steinbound(
    variant: impl Into<String>,
    stats: &ExchangeableStats,
) -> Result<BoundReport> {
    require_linearity_range(&stats.a)?;
    let a2 = &stats.a * &stats.a;
    let term1 = BoundTerm {
        label: "term1",
        coeff: rat(1),
        radicand: &stats.cond_var / &a2,
        degree: 2,
        over_pi: false,
    };
    let term2 = BoundTerm {
        label: "term2",
        coeff: rat(1),
        radicand: &stats.second_moment * &stats.fourth_moment / (rat(2) * &a2),
        degree: 4,
        over_pi: true,
    };
    Ok(BoundReport::assemble(variant, vec![term1, term2]))
}

/// The bounded-step bound: `sqrt(cond_var)/a + 0.41 A^3/a + 1.5 A`.
pub fn assemble_rinrot(
    variant: impl Into<String>,
    stats: &ExchangeableStats,
) -> Result<BoundReport> {
    require_linearity_range(&stats.a)?;
    let Some(step) = &stats.max_step else {
        return Err(Error::InvalidArgument(
            "bounded-step bound needs an almost-sure step bound".into(),
        ));
    };
    if step.coeff().is_negative() {
        return Err(Error::InvalidArgument(
            "step bound must be nonnegative".into(),
        ));
    }
    let a2 = &stats.a * &stats.a;
    let term1 = BoundTerm {
        label: "term1",
        coeff: rat(1),
        radicand: &stats.cond_var / &a2,
        degree: 2,
        over_pi: false,
    };
    let cube = step.cube();
    let term2 = BoundTerm {
        label: "term2",
        coeff: frac(41, 100) * cube.coeff() / &stats.a,
        radicand: rat_of(cube.radicand()),
        degree: 2,
        over_pi: false,
    };
    let term3 = BoundTerm {
        label: "term3",
        coeff: frac(3, 2) * step.coeff(),
        radicand: rat_of(step.radicand()),
        degree: 2,
        over_pi: false,
    };
    Ok(BoundReport::assemble(variant, vec![term1, term2, term3]))
}

/// Kerov-normalized character-ratio bound for the `i`-cycle walk, driven
/// by `tau = (n-1, 1)`.
pub fn limgroup_bound(table: &CharacterTable, i: u32) -> Result<BoundReport> {
    let n = table.n;
    let c = table
        .index_of(&Partition::hook_type(n, i)?)
        .ok_or_else(|| {
            Error::InvalidArgument(format!("no i-cycle class for i={i} in degree {n}"))
        })?;
    let tau = table
        .index_of(&Partition::new(vec![n - 1, 1]).map_err(|_| {
            Error::InvalidArgument("near-trivial representation needs n >= 2".into())
        })?)
        .expect("partition of n");
    let stats = group_closed_stats(table, c, tau)?;
    assemble_steinbound("limgroup", &stats)
}

/// Hypercube bound from the generic Gelfand assembly at `u = t = 1`; the
/// first term vanishes and the second reduces to `(8/(pi n))^{1/4}`.
pub fn hypbound1(n: u32) -> Result<BoundReport> {
    let pair = crate::gelfand::hypercube_pair(n)?;
    let stats = gelfand_closed_stats(&pair, 1, 1)?;
    assemble_steinbound("hypbound1", &stats)
}

/// Hypercube bounded-step bound: the chain is birth-death, so the step
/// bound `2/sqrt(n)` is measured directly off the kernel.
pub fn hypbound2(n: u32) -> Result<BoundReport> {
    let pair = crate::gelfand::hypercube_pair(n)?;
    let kernel = crate::chains::gelfand_chain(&pair, 1)?;
    let w = crate::chains::w_gelfand(&pair, 1);
    let stats = stats_direct(&kernel, &w)?;
    assemble_rinrot("hypbound2", &stats)
}

/// Matchings bound for the `(i, 1^{n-i})` walk driven by the near-trivial
/// spherical function. Small `n` uses the enumerated pair; for `i = 2` the
/// closed forms extend to every `n`.
pub fn cltgel_bound(n: u32, i: u32) -> Result<BoundReport> {
    if n <= crate::gelfand::MATCHINGS_MAX_N {
        let pair = crate::gelfand::matchings_pair(n)?;
        let u = pair
            .label_index(&crate::gelfand::Label::Shape(Partition::hook_type(n, i)?))
            .expect("partition of n");
        let t = pair
            .label_index(&crate::gelfand::Label::Shape(Partition::new(vec![
                n - 1,
                1,
            ])?))
            .expect("partition of n");
        let stats = gelfand_closed_stats(&pair, u, t)?;
        assemble_steinbound("CLTgel", &stats)
    } else if i == 2 {
        let stats = matchings_closed_stats_two_cycle(n)?;
        assemble_steinbound("CLTgel", &stats)
    } else {
        Err(Error::ResourceBound(format!(
            "matchings bound beyond n = {} is only available for i = 2, got i = {i}",
            crate::gelfand::MATCHINGS_MAX_N
        )))
    }
}

/// Spin character-ratio bound for `mu = (2i+1, 1^{n-2i-1})` via the
/// down-up pair.
pub fn projerror_bound(table: &SpinCharacterTable, i: u32) -> Result<BoundReport> {
    let n = table.n;
    let part = 2 * i + 1;
    if part >= n {
        return Err(Error::InvalidArgument(format!(
            "spin generator needs 2i+1 < n, got i={i}, n={n}"
        )));
    }
    let mu = table
        .op_index(&Partition::hook_type(n, part)?)
        .ok_or_else(|| Error::InvalidArgument("generator is not an odd partition".into()))?;
    let stats = twisted_down_up_stats(table, mu)?;
    assemble_steinbound("projerror", &stats)
}

/// Hamming bound via the generic scheme assembly at `s = t = 1`; the two
/// terms reduce to `sqrt((q-2)^2/((q-1)d))` and `(2q^2/(pi(q-1)d))^{1/4}`.
pub fn hamming_steinbound(d: u32, q: u32) -> Result<BoundReport> {
    let scheme = crate::schemes::hamming_scheme(d, q)?;
    let stats = scheme_closed_stats(&scheme, 1, 1)?;
    assemble_steinbound("hamming", &stats)
}

/// Hamming bounded-step bound in its closing form: the first term is the
/// majorant `sqrt(q/d)` and the step bound is `q/sqrt((q-1)d)` from the
/// birth-death structure of the chain.
pub fn hamming_rinrot(d: u32, q: u32) -> Result<BoundReport> {
    if d < 1 || q < 2 {
        return Err(Error::InvalidArgument("need d >= 1, q >= 2".into()));
    }
    let a = frac(q as i64, ((q - 1) * d) as i64);
    require_linearity_range(&a)?;
    let step = Radical::new(rat(1), frac((q * q) as i64, ((q - 1) * d) as i64));
    let term1 = BoundTerm {
        label: "term1",
        coeff: rat(1),
        radicand: frac(q as i64, d as i64),
        degree: 2,
        over_pi: false,
    };
    let cube = step.cube();
    let term2 = BoundTerm {
        label: "term2",
        coeff: frac(41, 100) * cube.coeff() / &a,
        radicand: rat_of(cube.radicand()),
        degree: 2,
        over_pi: false,
    };
    let term3 = BoundTerm {
        label: "term3",
        coeff: frac(3, 2) * step.coeff(),
        radicand: rat_of(step.radicand()),
        degree: 2,
        over_pi: false,
    };
    Ok(BoundReport::assemble(
        "hamming-rinrot",
        vec![term1, term2, term3],
    ))
}

/// One row of a scaling sweep: the bound terms, the rescaled columns, and
/// the exact Kolmogorov distance when the spectrum is available.
#[derive(Clone, Debug)]
pub struct SweepRow {
    pub size: u32,
    pub term1: f64,
    pub term2: f64,
    pub term3: Option<f64>,
    pub total: f64,
    /// `total * size^{1/4}`, the empirical stand-in for the unspecified
    /// asymptotic constants.
    pub total_scaled: f64,
    /// `term1 * size^{1/2}`.
    pub term1_scaled: f64,
    pub kolmogorov: Option<f64>,
    pub dominated: Option<bool>,
}

#[derive(Clone, Debug)]
pub struct SweepTable {
    pub variant: String,
    pub rows: Vec<SweepRow>,
}

/// Tolerance for float comparisons against assembled bounds: the accuracy
/// of the normal CDF evaluation.
pub const DOMINATION_TOLERANCE: f64 = 1e-12;

pub fn sweep_row(size: u32, report: &BoundReport, kolmogorov: Option<f64>) -> SweepRow {
    let term1 = report.terms[0].eval();
    let term2 = report.terms.get(1).map(BoundTerm::eval).unwrap_or(0.0);
    let term3 = report.terms.get(2).map(BoundTerm::eval);
    SweepRow {
        size,
        term1,
        term2,
        term3,
        total: report.total,
        total_scaled: report.total * (size as f64).powf(0.25),
        term1_scaled: term1 * (size as f64).sqrt(),
        kolmogorov,
        dominated: kolmogorov.map(|k| k <= report.total + DOMINATION_TOLERANCE),
    }
}

impl SweepTable {
    pub fn to_csv(&self) -> String {
        let mut out =
            String::from("n,term1,term2,term3,total,total_n14,term1_n12,kolmogorov,dominated\n");
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{}\n",
                r.size,
                r.term1,
                r.term2,
                r.term3.map_or(String::new(), |v| v.to_string()),
                r.total,
                r.total_scaled,
                r.term1_scaled,
                r.kolmogorov.map_or(String::new(), |v| v.to_string()),
                r.dominated.map_or(String::new(), |v| v.to_string()),
            ));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.rows
                .iter()
                .map(|r| {
                    serde_json::json!({
                        "dominated": r.dominated,
                        "kolmogorov": r.kolmogorov,
                        "n": r.size,
                        "term1": r.term1,
                        "term1_n12": r.term1_scaled,
                        "term2": r.term2,
                        "term3": r.term3,
                        "total": r.total,
                        "total_n14": r.total_scaled,
                    })
                })
                .collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chains;
    use crate::gelfand::{hypercube_pair, matchings_pair, Label};
    use crate::normal;
    use crate::schemes::hamming_scheme;

    fn mk(v: Vec<u32>) -> Partition {
        Partition::new(v).unwrap()
    }

    #[test]
    fn direct_equals_closed_group() {
        for n in 4..=6u32 {
            let t = CharacterTable::new(n);
            let tau = t.index_of(&mk(vec![n - 1, 1])).unwrap();
            let kernel = chains::group_chain(&t, tau).unwrap();
            for c in 0..t.parts.len() - 1 {
                let direct = stats_direct(&kernel, &chains::w_group(&t, c)).unwrap();
                let closed = group_closed_stats(&t, c, tau).unwrap();
                assert_eq!(direct.a, closed.a, "n={n} c={}", t.parts[c]);
                assert_eq!(direct.second_moment, closed.second_moment);
                assert_eq!(direct.cond_var, closed.cond_var);
                assert_eq!(direct.fourth_moment, closed.fourth_moment);
                // Lemma-var identity: E(W'-W)^2 = 2a since E(W^2) = 1
                assert_eq!(direct.second_moment, rat(2) * &direct.a);
            }
        }
    }

    #[test]
    fn direct_equals_closed_hypercube() {
        for n in 2..=20u32 {
            let pair = hypercube_pair(n).unwrap();
            let kernel = chains::gelfand_chain(&pair, 1).unwrap();
            let direct = stats_direct(&kernel, &chains::w_gelfand(&pair, 1)).unwrap();
            let closed = gelfand_closed_stats(&pair, 1, 1).unwrap();
            assert_eq!(direct.a, closed.a);
            assert_eq!(direct.second_moment, closed.second_moment);
            assert_eq!(direct.cond_var, closed.cond_var);
            assert_eq!(direct.fourth_moment, closed.fourth_moment);
            assert!(closed.cond_var.is_zero(), "n={n}");
        }
    }

    #[test]
    fn direct_equals_closed_matchings() {
        for n in 3..=5u32 {
            let pair = matchings_pair(n).unwrap();
            let t_idx = pair.label_index(&Label::Shape(mk(vec![n - 1, 1]))).unwrap();
            let kernel = chains::gelfand_chain(&pair, t_idx).unwrap();
            for i in 2..=3.min(n) {
                let u = pair
                    .label_index(&Label::Shape(Partition::hook_type(n, i).unwrap()))
                    .unwrap();
                let direct = stats_direct(&kernel, &chains::w_gelfand(&pair, u)).unwrap();
                let closed = gelfand_closed_stats(&pair, u, t_idx).unwrap();
                assert_eq!(direct.a, closed.a, "n={n} i={i}");
                assert_eq!(direct.cond_var, closed.cond_var);
                assert_eq!(direct.fourth_moment, closed.fourth_moment);
            }
        }
    }

    #[test]
    fn closed_stats_accept_any_nontrivial_driver() {
        // The driver index is a spherical-function index, not a coset
        // index; the one-column label (last in reverse-lex order) is a
        // legitimate nontrivial driver even though the trivial *coset*
        // sits at that position.
        let n = 4u32;
        let pair = matchings_pair(n).unwrap();
        let t_idx = pair
            .label_index(&Label::Shape(Partition::one_column(n)))
            .unwrap();
        assert_eq!(t_idx, pair.identity_coset());
        let kernel = chains::gelfand_chain(&pair, t_idx).unwrap();
        let u = pair
            .label_index(&Label::Shape(Partition::hook_type(n, 2).unwrap()))
            .unwrap();
        let direct = stats_direct(&kernel, &chains::w_gelfand(&pair, u)).unwrap();
        let closed = gelfand_closed_stats(&pair, u, t_idx).unwrap();
        assert_eq!(direct.a, closed.a);
        assert_eq!(direct.cond_var, closed.cond_var);
        assert_eq!(direct.fourth_moment, closed.fourth_moment);

        // the genuinely trivial driver is still rejected
        let trivial = pair
            .label_index(&Label::Shape(Partition::single_row(n)))
            .unwrap();
        assert!(gelfand_closed_stats(&pair, u, trivial).is_err());
        assert!(scheme_closed_stats(&hamming_scheme(4, 3).unwrap(), 1, 9).is_err());
    }

    #[test]
    fn closed_two_cycle_matchings_matches_pair_route() {
        for n in 4..=6u32 {
            let pair = matchings_pair(n).unwrap();
            let u = pair
                .label_index(&Label::Shape(Partition::hook_type(n, 2).unwrap()))
                .unwrap();
            let t_idx = pair.label_index(&Label::Shape(mk(vec![n - 1, 1]))).unwrap();
            let from_pair = gelfand_closed_stats(&pair, u, t_idx).unwrap();
            let closed = matchings_closed_stats_two_cycle(n).unwrap();
            assert_eq!(from_pair.a, closed.a, "n={n}");
            assert_eq!(from_pair.cond_var, closed.cond_var, "n={n}");
            assert_eq!(from_pair.fourth_moment, closed.fourth_moment, "n={n}");
        }
    }

    #[test]
    fn direct_equals_closed_twisted() {
        for n in 4..=8u32 {
            let table = SpinCharacterTable::new(n).unwrap();
            let tau = table.dp_index(&mk(vec![n - 1, 1])).unwrap();
            let j = chains::twisted_signed_kernel(&table, tau).unwrap();
            let l = chains::schur_down_up_chain(&table).unwrap();
            let mu = table
                .op_index(&Partition::hook_type(n, 3).unwrap())
                .unwrap();
            let w = chains::w_spin(&table, mu);
            let j_direct = stats_direct(&j, &w).unwrap();
            let j_closed = twisted_j_stats(&table, mu, tau).unwrap();
            assert_eq!(j_direct.a, j_closed.a, "n={n}");
            assert_eq!(j_direct.second_moment, j_closed.second_moment);
            assert_eq!(j_direct.cond_var, j_closed.cond_var);
            assert_eq!(j_direct.fourth_moment, j_closed.fourth_moment);

            let l_direct = stats_direct(&l, &w).unwrap();
            let l_closed = twisted_down_up_stats(&table, mu).unwrap();
            assert_eq!(l_direct.a, l_closed.a);
            assert_eq!(l_direct.second_moment, l_closed.second_moment);
            assert_eq!(l_direct.cond_var, l_closed.cond_var);
            assert_eq!(l_direct.fourth_moment, l_closed.fourth_moment);
        }
    }

    #[test]
    fn direct_equals_closed_hamming() {
        for (d, q) in [(4u32, 3u32), (6, 4), (5, 2)] {
            let scheme = hamming_scheme(d, q).unwrap();
            let kernel = chains::scheme_chain(&scheme, 1).unwrap();
            let direct = stats_direct(&kernel, &chains::w_scheme(&scheme, 1)).unwrap();
            let closed = scheme_closed_stats(&scheme, 1, 1).unwrap();
            assert_eq!(direct.a, closed.a, "d={d} q={q}");
            assert_eq!(direct.second_moment, closed.second_moment);
            assert_eq!(direct.cond_var, closed.cond_var);
            assert_eq!(direct.fourth_moment, closed.fourth_moment);
            assert_eq!(closed.a, frac(q as i64, ((q - 1) * d) as i64));
        }
    }

    #[test]
    fn hypercube_bound_closed_form() {
        for n in [2u32, 10, 100] {
            let b = hypbound1(n).unwrap();
            assert_eq!(b.terms[0].radicand, Rat::zero(), "first term vanishes");
            assert_eq!(b.terms[1].radicand, frac(8, n as i64));
            assert!(b.terms[1].over_pi);
            let expect = (8.0 / (PI_30 * n as f64)).powf(0.25);
            assert!((b.total - expect).abs() < 1e-13, "n={n}");
        }
    }

    #[test]
    fn hypercube_rinrot_closed_form() {
        let n = 16u32;
        let b = hypbound2(n).unwrap();
        // a = 2/n, A = 2/sqrt(n), cond_var = 0
        assert_eq!(b.terms[0].radicand, Rat::zero());
        // 0.41 A^3/a + 1.5 A = (1.64 + 3)/sqrt(n)
        let expect = 4.64 / (n as f64).sqrt();
        assert!((b.total - expect).abs() < 1e-13);
        assert!(b.total <= 5.0 / (n as f64).sqrt());
    }

    #[test]
    fn hamming_bounds_closed_forms() {
        for (d, q) in [(4u32, 3u32), (20, 3), (12, 4)] {
            let b = hamming_steinbound(d, q).unwrap();
            let qd = ((q - 1) * d) as i64;
            assert_eq!(
                b.terms[0].radicand,
                frac(((q - 2) * (q - 2)) as i64, qd),
                "d={d} q={q}"
            );
            assert_eq!(b.terms[1].radicand, frac(2 * (q * q) as i64, qd));
            assert!(b.terms[1].over_pi);

            let r = hamming_rinrot(d, q).unwrap();
            assert_eq!(r.terms[0].radicand, frac(q as i64, d as i64));
            let expect = (q as f64 / d as f64).sqrt()
                + (0.41 * (q * q) as f64 + 1.5 * q as f64) / (qd as f64).sqrt();
            assert!((r.total - expect).abs() < 1e-12);
        }
    }

    #[test]
    fn abs_third_diagnostic() {
        // On the hypercube every step has |W'-W| = 2/sqrt(n), so the raw
        // third absolute moment is exactly (2/sqrt(n))^3.
        let n = 9u32;
        let pair = hypercube_pair(n).unwrap();
        let kernel = chains::gelfand_chain(&pair, 1).unwrap();
        let stats = stats_direct(&kernel, &chains::w_gelfand(&pair, 1)).unwrap();
        let abs3 = stats.abs_third.unwrap();
        assert_eq!(
            abs3,
            crate::radical::Radical::new(frac(8, (n * n) as i64), rat(n as i64))
        );
        // Cauchy-Schwarz majorant dominates the raw moment, exactly.
        assert!(abs3.square() <= &stats.second_moment * &stats.fourth_moment);

        let t = CharacterTable::new(5);
        let tau = t.index_of(&mk(vec![4, 1])).unwrap();
        let kernel = chains::group_chain(&t, tau).unwrap();
        for c in 0..t.parts.len() - 1 {
            let stats = stats_direct(&kernel, &chains::w_group(&t, c)).unwrap();
            let abs3 = stats.abs_third.unwrap();
            assert!(
                abs3.square() <= &stats.second_moment * &stats.fourth_moment,
                "majorant fails for C={}",
                t.parts[c]
            );
        }
    }

    #[test]
    fn degenerate_a_rejected() {
        let stats = ExchangeableStats {
            a: Rat::zero(),
            second_moment: Rat::zero(),
            cond_var: Rat::zero(),
            fourth_moment: Rat::zero(),
            max_step: None,
            abs_third: None,
        };
        assert!(assemble_steinbound("x", &stats).is_err());
    }

    #[test]
    fn rinrot_needs_step_bound() {
        let table = SpinCharacterTable::new(5).unwrap();
        let tau = table.dp_index(&mk(vec![4, 1])).unwrap();
        let mu = table.op_index(&mk(vec![3, 1, 1])).unwrap();
        let stats = twisted_j_stats(&table, mu, tau).unwrap();
        assert!(assemble_rinrot("x", &stats).is_err());
    }

    #[test]
    fn report_total_matches_term_evaluations() {
        let t = CharacterTable::new(8);
        let b = limgroup_bound(&t, 2).unwrap();
        let recomputed: f64 = b.terms.iter().map(BoundTerm::eval).sum();
        assert!((b.total - recomputed).abs() <= 1e-12 * b.total.abs());
    }

    #[test]
    fn kolmogorov_dominated_by_bound_small() {
        let t = CharacterTable::new(8);
        let b = limgroup_bound(&t, 2).unwrap();
        let c = t.index_of(&Partition::hook_type(8, 2).unwrap()).unwrap();
        let spec = normal::w_symmetric(&t, c).unwrap();
        let k = normal::kolmogorov_distance(&spec).unwrap();
        assert!(k <= b.total + DOMINATION_TOLERANCE);
    }
}
