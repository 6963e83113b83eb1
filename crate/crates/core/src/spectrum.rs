//! Exact atom distributions of the statistic `W`.

use num_traits::Zero;

use crate::radical::Radical;
use crate::rational::{self, Rat};
use crate::{Error, Result};

/// A finite distribution with exact atom values `(radical, probability)`,
/// sorted by value with equal values merged.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumAtomList {
    atoms: Vec<(Radical, Rat)>,
}

impl SpectrumAtomList {
    /// Sorts, merges equal values exactly, and validates that probabilities
    /// are positive and sum to 1.
    pub fn new(mut atoms: Vec<(Radical, Rat)>) -> Result<Self> {
        if atoms.is_empty() {
            return Err(Error::InvalidArgument("empty atom list".into()));
        }
        atoms.sort_by(|a, b| a.0.cmp(&b.0));
        let mut merged: Vec<(Radical, Rat)> = Vec::with_capacity(atoms.len());
        for (v, p) in atoms {
            match merged.last_mut() {
                Some((u, q)) if *u == v => *q += p,
                _ => merged.push((v, p)),
            }
        }
        let total: Rat = merged.iter().map(|(_, p)| p.clone()).sum();
        if total != rational::rat(1) {
            return Err(Error::InvalidArgument(format!(
                "atom probabilities sum to {total}, not 1"
            )));
        }
        if merged.iter().any(|(_, p)| p <= &Rat::zero()) {
            return Err(Error::InvalidArgument(
                "atom probabilities must be positive".into(),
            ));
        }
        Ok(SpectrumAtomList { atoms: merged })
    }

    pub fn atoms(&self) -> &[(Radical, Rat)] {
        &self.atoms
    }

    /// Exact test that `E(W) = 0`. Atoms are grouped by square class; square
    /// roots of distinct square classes are linearly independent over the
    /// rationals, so the mean vanishes iff every group's coefficient mass
    /// does.
    pub fn mean_is_zero(&self) -> bool {
        let mut groups: Vec<(Radical, Rat)> = Vec::new();
        for (v, p) in &self.atoms {
            if v.is_zero() {
                continue;
            }
            let contribution = v.coeff() * p;
            match groups.iter_mut().find(|(rep, _)| rep.same_square_class(v)) {
                Some((rep, acc)) => {
                    // align the coefficient to the representative's radicand
                    let ratio = (rational::rat_of(v.radicand()) / rational::rat_of(rep.radicand()))
                        .reduced();
                    // ratio is a square of a rational; take its exact root
                    let root = Rat::new(ratio.numer().sqrt(), ratio.denom().sqrt());
                    *acc += contribution * root;
                }
                None => groups.push((v.clone(), contribution)),
            }
        }
        groups.iter().all(|(_, acc)| acc.is_zero())
    }

    /// Exact `E(W^2)`, a rational.
    pub fn second_moment(&self) -> Rat {
        self.atoms.iter().map(|(v, p)| v.square() * p).sum()
    }

    /// CSV rows `value_float,value_exact,probability_exact` with a header.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("value_float,value_exact,probability_exact\n");
        for (v, p) in &self.atoms {
            out.push_str(&format!(
                "{},{},{}\n",
                v.to_f64(),
                v.render(),
                rational::render(p)
            ));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.atoms
                .iter()
                .map(|(v, p)| {
                    serde_json::json!({
                        "probability_exact": rational::render(p),
                        "value_exact": v.render(),
                        "value_float": v.to_f64(),
                    })
                })
                .collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, rat};
    use proptest::prelude::*;

    #[test]
    fn merging_is_exact() {
        // 2*sqrt(3) and 1*sqrt(12) are the same atom
        let s = SpectrumAtomList::new(vec![
            (Radical::new(rat(2), rat(3)), frac(1, 4)),
            (Radical::new(rat(1), rat(12)), frac(1, 4)),
            (Radical::new(rat(-1), rat(12)), frac(1, 2)),
        ])
        .unwrap();
        assert_eq!(s.atoms().len(), 2);
        assert_eq!(s.atoms()[0].1, frac(1, 2));
        assert_eq!(s.atoms()[1].1, frac(1, 2));
        assert!(s.atoms()[0].0 < s.atoms()[1].0);
    }

    #[test]
    fn mass_must_be_one() {
        assert!(SpectrumAtomList::new(vec![(Radical::zero(), frac(1, 2))]).is_err());
        assert!(SpectrumAtomList::new(vec![]).is_err());
    }

    #[test]
    fn mean_zero_across_square_classes() {
        // sqrt(2) - sqrt(8)/2 = 0 and independently sqrt(3) - sqrt(3) = 0
        let s = SpectrumAtomList::new(vec![
            (Radical::new(rat(4), rat(2)), frac(1, 8)),
            (Radical::new(rat(-1), rat(8)), frac(1, 4)),
            (Radical::new(rat(2), rat(3)), frac(1, 4)),
            (Radical::new(rat(-4), rat(3)), frac(1, 8)),
            (Radical::zero(), frac(1, 4)),
        ])
        .unwrap();
        assert!(s.mean_is_zero());

        let t = SpectrumAtomList::new(vec![
            (Radical::new(rat(1), rat(2)), frac(1, 2)),
            (Radical::new(rat(-1), rat(3)), frac(1, 2)),
        ])
        .unwrap();
        assert!(!t.mean_is_zero());
    }

    proptest! {
        #[test]
        fn merging_preserves_mass_and_order(
            coeffs in proptest::collection::vec((-6i64..6, 1i64..5), 1..12)
        ) {
            let k = coeffs.len() as i64;
            let atoms: Vec<_> = coeffs
                .iter()
                .map(|&(c, r)| (Radical::new(rat(c), rat(r)), frac(1, k)))
                .collect();
            let s = SpectrumAtomList::new(atoms).unwrap();
            let total: Rat = s.atoms().iter().map(|(_, p)| p.clone()).sum();
            prop_assert_eq!(total, rat(1));
            for w in s.atoms().windows(2) {
                prop_assert!(w[0].0 < w[1].0);
            }
        }
    }
}
