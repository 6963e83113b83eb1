//! Walk occupancy coefficients `p_m` for all four structures, through one
//! spectral summation core, plus brute-force oracles that recompute small
//! cases by direct enumeration. The oracles are permanent API; the CLI
//! exposes both routes for auditing.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::characters::CharacterTable;
use crate::gelfand::GelfandPairData;
use crate::partition::Partition;
use crate::perm;
use crate::rational::{rat_of, Rat};
use crate::schemes::{scheme_walk_probabilities, AssociationScheme};
use crate::spin::{twisted_walk_coefficients, SpinCharacterTable};
use crate::{Error, Result};

/// The shared spectral form: `p_m(r) = sum_i measure(i) eig(i)^m basis(i, r)`.
///
/// Each structure instantiates `measure` with its Plancherel-type measure,
/// `eig` with the normalized eigenvalue of the generator, and `basis` with
/// the appropriately weighted eigenfunction value.
pub fn spectral_sum(
    measure: &[Rat],
    eig: &[Rat],
    basis: impl Fn(usize, usize) -> Rat,
    n_labels: usize,
    m: u32,
) -> Vec<Rat> {
    let powers: Vec<Rat> = eig
        .iter()
        .map(|e| {
            let mut p = Rat::from_integer(BigInt::from(1));
            for _ in 0..m {
                p *= e;
            }
            p
        })
        .collect();
    (0..n_labels)
        .map(|r| {
            let mut acc = Rat::zero();
            for i in 0..measure.len() {
                if !measure[i].is_zero() {
                    acc += &measure[i] * &powers[i] * basis(i, r);
                }
            }
            acc
        })
        .collect()
}

/// `p_m(K)` over all classes of the symmetric group, for the walk generated
/// by class `c` (indices into the table's class list).
pub fn group_walk(table: &CharacterTable, c: usize, m: u32) -> Vec<Rat> {
    let measure: Vec<Rat> = (0..table.parts.len())
        .map(|l| table.plancherel_prob(l))
        .collect();
    let eig: Vec<Rat> = (0..table.parts.len()).map(|l| table.ratio(l, c)).collect();
    spectral_sum(
        &measure,
        &eig,
        |l, k| rat_of(&table.class_sizes[k]) * table.ratio(l, k),
        table.parts.len(),
        m,
    )
}

/// `p_m(K_r)` over double cosets for the walk generated by coset `u`.
pub fn gelfand_walk(pair: &GelfandPairData, u: usize, m: u32) -> Vec<Rat> {
    let measure: Vec<Rat> = (0..pair.size()).map(|i| pair.plancherel(i)).collect();
    let eig: Vec<Rat> = (0..pair.size()).map(|i| pair.omega[i][u].clone()).collect();
    spectral_sum(
        &measure,
        &eig,
        |i, r| &pair.coset_ratio[r] * &pair.omega[i][r],
        pair.size(),
        m,
    )
}

/// Signed coefficients for the twisted walk; delegates to the spin module.
pub fn twisted_walk(table: &SpinCharacterTable, mu: usize, m: u32) -> Vec<Rat> {
    twisted_walk_coefficients(table, mu, m)
}

/// Scheme walk occupancies; delegates to the scheme module.
pub fn scheme_walk(scheme: &AssociationScheme, s: usize, m: u32) -> Result<Vec<Rat>> {
    scheme_walk_probabilities(scheme, s, m)
}

/// Brute-force group walk: convolve the uniform measure on the class `m`
/// times by explicit permutation multiplication, then bucket by class.
/// Exact and character-free, for small oracles only.
pub fn group_walk_brute(table: &CharacterTable, c: usize, m: u32) -> Result<Vec<Rat>> {
    let n = table.n;
    if n > 7 {
        return Err(Error::ResourceBound(format!(
            "brute group walk bounded at n <= 7, got n={n}"
        )));
    }
    let elements = perm::class_elements(&table.parts[c]);
    let step = Rat::new(BigInt::from(1), BigInt::from(elements.len()));
    let mut dist: HashMap<perm::Perm, Rat> = HashMap::new();
    dist.insert(
        perm::identity(n as usize),
        Rat::from_integer(BigInt::from(1)),
    );
    for _ in 0..m {
        let mut next: HashMap<perm::Perm, Rat> = HashMap::new();
        for (p, w) in &dist {
            let contribution = w * &step;
            for e in &elements {
                *next.entry(perm::compose(e, p)).or_insert_with(Rat::zero) += &contribution;
            }
        }
        dist = next;
    }
    let mut buckets: HashMap<Partition, Rat> = HashMap::new();
    for (p, w) in dist {
        *buckets
            .entry(perm::cycle_type(&p))
            .or_insert_with(Rat::zero) += w;
    }
    Ok(table
        .parts
        .iter()
        .map(|k| buckets.get(k).cloned().unwrap_or_else(Rat::zero))
        .collect())
}

/// Brute-force hypercube walk: exact distribution over all `2^n` vertices
/// after `m` steps, each step adding a uniformly random weight-`u` vector.
pub fn hypercube_walk_brute(n: u32, u: u32, m: u32) -> Result<Vec<Rat>> {
    if n > 12 {
        return Err(Error::ResourceBound(format!(
            "brute hypercube walk bounded at n <= 12, got n={n}"
        )));
    }
    if u == 0 || u > n {
        return Err(Error::InvalidArgument(format!(
            "step weight needs 1 <= u <= n, got {u}"
        )));
    }
    let size = 1usize << n;
    let steps: Vec<usize> = (0..size).filter(|x| x.count_ones() == u).collect();
    let step_prob = Rat::new(BigInt::from(1), BigInt::from(steps.len()));
    let mut dist = vec![Rat::zero(); size];
    dist[0] = Rat::from_integer(BigInt::from(1));
    for _ in 0..m {
        let mut next = vec![Rat::zero(); size];
        for (x, p) in dist.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            for &s in &steps {
                next[x ^ s] += p * &step_prob;
            }
        }
        dist = next;
    }
    let mut by_weight = vec![Rat::zero(); n as usize + 1];
    for (x, p) in dist.into_iter().enumerate() {
        by_weight[x.count_ones() as usize] += p;
    }
    Ok(by_weight)
}

/// Brute-force scheme walk from explicit relation matrices: `m` steps of
/// the uniform `R_s`-neighbor walk from a fixed start, bucketed by the
/// relation containing the endpoint pair.
pub fn scheme_walk_brute(relations: &[Vec<Vec<u8>>], s: usize, m: u32) -> Result<Vec<Rat>> {
    let size = relations[0].len();
    if size > 256 {
        return Err(Error::ResourceBound(format!(
            "brute scheme walk bounded at 256 points, got {size}"
        )));
    }
    let degree: usize = relations[s][0].iter().map(|&e| e as usize).sum();
    if degree == 0 {
        return Err(Error::InvalidArgument("generator relation is empty".into()));
    }
    let step = Rat::new(BigInt::from(1), BigInt::from(degree));
    let mut dist = vec![Rat::zero(); size];
    dist[0] = Rat::from_integer(BigInt::from(1));
    for _ in 0..m {
        let mut next = vec![Rat::zero(); size];
        for (x, p) in dist.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            for y in 0..size {
                if relations[s][x][y] == 1 {
                    next[y] += p * &step;
                }
            }
        }
        dist = next;
    }
    let mut out = vec![Rat::zero(); relations.len()];
    for (y, p) in dist.into_iter().enumerate() {
        let r = relations.iter().position(|mat| mat[0][y] == 1).unwrap();
        out[r] += p;
    }
    Ok(out)
}

/// Closed-form hypercube walk probabilities through the pair data.
pub fn hypercube_walk(n: u32, u: usize, m: u32) -> Result<Vec<Rat>> {
    let pair = crate::gelfand::hypercube_pair(n)?;
    if u >= pair.size() {
        return Err(Error::InvalidArgument(format!(
            "coset index {u} out of range 0..={n}"
        )));
    }
    Ok(gelfand_walk(&pair, u, m))
}
