//! Standard normal CDF, exact `W` distributions, and their Kolmogorov
//! distance.
//!
//! `Phi` is evaluated through the error function: a positive-term scaled
//! Maclaurin series below `z = 3` (no cancellation, so absolute error is at
//! machine level) and a Lentz continued fraction for the tail. The
//! Kolmogorov distance of an atom distribution needs only the atom points
//! and their CDF left limits because the difference against a continuous
//! increasing function is monotone between atoms.

use num_traits::Zero;

use crate::characters::CharacterTable;
use crate::gelfand::GelfandPairData;
use crate::radical::Radical;
use crate::rational::{rat, rat_of, to_f64, Rat};
use crate::schemes::AssociationScheme;
use crate::spectrum::SpectrumAtomList;
use crate::spin::SpinCharacterTable;
use crate::{chains, Error, Result};

const FRAC_2_SQRT_PI: f64 = std::f64::consts::FRAC_2_SQRT_PI;
const SQRT_2: f64 = std::f64::consts::SQRT_2;

/// erf(z) for 0 <= z < 3, via the positive-term series
/// `erf(z) = (2/sqrt(pi)) z e^{-z^2} sum_k (2 z^2)^k / (2k+1)!!`.
fn erf_series(z: f64) -> f64 {
    let z2 = 2.0 * z * z;
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut k = 1u32;
    loop {
        term *= z2 / (2 * k + 1) as f64;
        sum += term;
        if term < 1e-18 * sum || k > 300 {
            break;
        }
        k += 1;
    }
    FRAC_2_SQRT_PI * z * (-z * z).exp() * sum
}

/// erfc(z) for z >= 3, via the continued fraction
/// `erfc(z) = e^{-z^2}/sqrt(pi) / (z + (1/2)/(z + 1/(z + (3/2)/(z + ...))))`,
/// evaluated by the modified Lentz algorithm.
fn erfc_continued_fraction(z: f64) -> f64 {
    let tiny = 1e-300;
    let mut f = z.max(tiny);
    let mut c = f;
    let mut d = 0.0;
    for k in 1..200 {
        let a = k as f64 / 2.0;
        // next convergent of b_0 + a_1/(b_1 + a_2/(b_2 + ...)) with b = z
        d = z + a * d;
        if d.abs() < tiny {
            d = tiny;
        }
        c = z + a / c;
        if c.abs() < tiny {
            c = tiny;
        }
        d = 1.0 / d;
        let delta = c * d;
        f *= delta;
        if (delta - 1.0).abs() < 1e-17 {
            break;
        }
    }
    (-z * z).exp() / (std::f64::consts::PI.sqrt() * f)
}

fn erfc_pos(z: f64) -> f64 {
    if z < 3.0 {
        1.0 - erf_series(z)
    } else {
        erfc_continued_fraction(z)
    }
}

/// The standard normal CDF, absolute error below `1e-14`.
pub fn normal_cdf(x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::InvalidArgument(format!("non-finite input {x}")));
    }
    Ok(phi(x))
}

pub(crate) fn phi(x: f64) -> f64 {
    let tail = 0.5 * erfc_pos(x.abs() / SQRT_2);
    if x >= 0.0 {
        1.0 - tail
    } else {
        tail
    }
}

/// `sup_x |F(x) - Phi(x)|` for an exact atom distribution: at every atom
/// the candidates are the jump's two one-sided gaps.
pub fn kolmogorov_distance(dist: &SpectrumAtomList) -> Result<f64> {
    let atoms = dist.atoms();
    if atoms.is_empty() {
        return Err(Error::InvalidArgument("empty distribution".into()));
    }
    let mut cdf = Rat::zero();
    let mut sup = 0.0f64;
    for (value, p) in atoms {
        let left = to_f64(&cdf);
        cdf += p;
        let right = to_f64(&cdf);
        let phi_v = phi(value.to_f64());
        sup = sup.max((left - phi_v).abs()).max((right - phi_v).abs());
    }
    Ok(sup)
}

/// Validates that a spectrum has exact mean 0 and second moment 1, the
/// normalization every `W` in the crate must satisfy.
fn standardized(atoms: Vec<(Radical, Rat)>) -> Result<SpectrumAtomList> {
    let s = SpectrumAtomList::new(atoms)?;
    if !s.mean_is_zero() {
        return Err(Error::Degenerate("spectrum mean is not 0".into()));
    }
    if s.second_moment() != rat(1) {
        return Err(Error::Degenerate(format!(
            "spectrum second moment is {}, not 1",
            s.second_moment()
        )));
    }
    Ok(s)
}

/// Character-ratio spectrum `W = sqrt(|C|) chi/dim` under Plancherel
/// measure.
pub fn w_symmetric(table: &CharacterTable, c: usize) -> Result<SpectrumAtomList> {
    let w = chains::w_group(table, c);
    let atoms = (0..table.parts.len())
        .map(|l| {
            (
                Radical::new(w.coeffs[l].clone(), w.radicand.clone()),
                table.plancherel_prob(l),
            )
        })
        .collect();
    standardized(atoms)
}

/// Spherical spectrum `W = sqrt(|K_u|/|K|) omega_i(g_u)` under the pair's
/// Plancherel measure.
pub fn w_gelfand(pair: &GelfandPairData, u: usize) -> Result<SpectrumAtomList> {
    if u == pair.identity_coset() {
        return Err(Error::Degenerate(
            "trivial coset generates a constant spectrum".into(),
        ));
    }
    let w = chains::w_gelfand(pair, u);
    let atoms = (0..pair.size())
        .map(|i| {
            (
                Radical::new(w.coeffs[i].clone(), w.radicand.clone()),
                pair.plancherel(i),
            )
        })
        .collect();
    standardized(atoms)
}

/// Spin spectrum `W = sqrt(n!/(z_mu 2^{n-l(mu)})) X^lambda_mu/g_lambda`
/// under shifted Plancherel measure.
pub fn w_spin(table: &SpinCharacterTable, mu: usize) -> Result<SpectrumAtomList> {
    let w = chains::w_spin(table, mu);
    let atoms = (0..table.dp.len())
        .map(|l| {
            (
                Radical::new(w.coeffs[l].clone(), w.radicand.clone()),
                table.shifted_plancherel(l),
            )
        })
        .collect();
    standardized(atoms)
}

/// Scheme spectrum `W = phi_s(i)/sqrt(v_s)` under `mu_i/|X|`.
pub fn w_scheme(scheme: &AssociationScheme, s: usize) -> Result<SpectrumAtomList> {
    if s == 0 {
        return Err(Error::Degenerate(
            "class 0 generates a constant spectrum".into(),
        ));
    }
    if s > scheme.n_classes {
        return Err(Error::InvalidArgument(format!(
            "class index {s} out of range"
        )));
    }
    let atoms = (0..=scheme.n_classes)
        .map(|i| {
            (
                Radical::new(
                    scheme.normalized_eigenvalue(s, i),
                    rat_of(&scheme.valencies[s]),
                ),
                scheme.plancherel(i),
            )
        })
        .collect();
    standardized(atoms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gelfand::{hypercube_pair, matchings_pair};
    use crate::partition::Partition;
    use crate::rational::{binomial, frac, pow_rat};
    use crate::schemes::hamming_scheme;

    /// Composite-Simpson oracle for Phi on [0, x], independent of the
    /// series/continued-fraction path.
    fn phi_quadrature(x: f64) -> f64 {
        let steps = 40_000usize;
        let h = x / steps as f64;
        let density = |t: f64| (-t * t / 2.0).exp();
        let mut acc = density(0.0) + density(x);
        for k in 1..steps {
            let t = h * k as f64;
            acc += density(t) * if k % 2 == 1 { 4.0 } else { 2.0 };
        }
        0.5 + acc * h / (3.0 * (2.0 * std::f64::consts::PI).sqrt())
    }

    #[test]
    fn phi_fixed_values() {
        assert_eq!(normal_cdf(0.0).unwrap(), 0.5);
        assert!((normal_cdf(1.0).unwrap() - 0.841344746068543).abs() < 1e-14);
        assert!(normal_cdf(f64::NAN).is_err());
        assert!(normal_cdf(f64::INFINITY).is_err());
    }

    #[test]
    fn phi_matches_quadrature() {
        for x in [0.1, 0.5, 1.0, 1.7, 2.4, 3.3, 4.8] {
            let q = phi_quadrature(x);
            assert!((phi(x) - q).abs() < 5e-14, "x={x}: {} vs {q}", phi(x));
        }
    }

    #[test]
    fn phi_symmetry_and_monotonicity() {
        let mut prev = 0.0;
        for k in -600..=600 {
            let x = k as f64 / 100.0;
            let v = phi(x);
            assert!((v + phi(-x) - 1.0).abs() < 1e-14, "x={x}");
            if k > -600 {
                assert!(v >= prev, "x={x}");
            }
            prev = v;
        }
    }

    #[test]
    fn two_atom_distance() {
        let atoms = vec![
            (Radical::new(rat(-1), rat(1)), frac(1, 2)),
            (Radical::new(rat(1), rat(1)), frac(1, 2)),
        ];
        let s = SpectrumAtomList::new(atoms).unwrap();
        let d = kolmogorov_distance(&s).unwrap();
        assert!((d - (phi(1.0) - 0.5)).abs() < 1e-14);
        assert!((d - 0.341344746068543).abs() < 1e-12);
    }

    #[test]
    fn point_mass_distance_is_half() {
        let s = SpectrumAtomList::new(vec![(Radical::zero(), rat(1))]).unwrap();
        assert_eq!(kolmogorov_distance(&s).unwrap(), 0.5);
    }

    #[test]
    fn hypercube_spectrum_binomial_masses() {
        let n = 10u32;
        let pair = hypercube_pair(n).unwrap();
        let s = w_gelfand(&pair, 1).unwrap();
        assert_eq!(s.atoms().len(), n as usize + 1);
        // W(i) = (n - 2i)/sqrt(n) with mass C(n,i)/2^n; atoms are sorted
        // increasing so i runs n down to 0.
        for (idx, (v, p)) in s.atoms().iter().enumerate() {
            let i = n as usize - idx;
            assert_eq!(
                *v,
                Radical::new(frac(n as i64 - 2 * i as i64, n as i64), rat(n as i64))
            );
            assert_eq!(
                *p,
                rat_of(&binomial(n as u64, i as u64)) / pow_rat(&rat(2), n as i64)
            );
        }
    }

    #[test]
    fn trivial_coset_rejected() {
        let pair = hypercube_pair(4).unwrap();
        assert!(w_gelfand(&pair, pair.identity_coset()).is_err());
    }

    #[test]
    fn one_state_scheme_rejected() {
        // d = 1, q = 2: the distribution exists (two atoms); class 0 does not.
        let scheme = hamming_scheme(1, 2).unwrap();
        assert!(w_scheme(&scheme, 0).is_err());
        assert!(w_scheme(&scheme, 1).is_ok());
    }

    #[test]
    fn hamming_matches_independent_sum() {
        // W =d (Y_1 + ... + Y_d)/sqrt((q-1)d), Y = q-1 w.p. 1/q, else -1.
        for (d, q) in [(3u32, 2u32), (4, 3), (5, 4)] {
            let scheme = hamming_scheme(d, q).unwrap();
            let lhs = w_scheme(&scheme, 1).unwrap();
            let mut atoms = Vec::new();
            let radicand = rat(((q - 1) * d) as i64);
            for k in 0..=d {
                // k coordinates drawn "equal": value (kq - d)/sqrt((q-1)d)
                let coeff = frac((k as i64) * q as i64 - d as i64, ((q - 1) * d) as i64);
                let prob = rat_of(&binomial(d as u64, k as u64))
                    * pow_rat(&frac(1, q as i64), k as i64)
                    * pow_rat(&(rat(1) - frac(1, q as i64)), (d - k) as i64);
                atoms.push((Radical::new(coeff, radicand.clone()), prob));
            }
            let rhs = SpectrumAtomList::new(atoms).unwrap();
            assert_eq!(lhs, rhs, "d={d} q={q}");
        }
    }

    #[test]
    fn matchings_spectrum_standardized() {
        let pair = matchings_pair(4).unwrap();
        let u = pair
            .label_index(&crate::gelfand::Label::Shape(
                Partition::hook_type(4, 2).unwrap(),
            ))
            .unwrap();
        let s = w_gelfand(&pair, u).unwrap();
        assert_eq!(s.second_moment(), rat(1));
    }

    #[test]
    fn spin_spectrum_standardized() {
        let table = SpinCharacterTable::new(7).unwrap();
        let mu = table
            .op_index(&Partition::hook_type(7, 3).unwrap())
            .unwrap();
        let s = w_spin(&table, mu).unwrap();
        assert_eq!(s.second_moment(), rat(1));
        assert!(s.mean_is_zero());
    }
}
