//! Association schemes: axiom verification on explicit relation matrices,
//! exact eigenmatrix extraction, and the Hamming scheme in closed form.
//!
//! The generic path is restricted to schemes whose first adjacency matrix
//! has `n+1` distinct rational (hence integer) eigenvalues, one per
//! primitive idempotent. Those eigenvalues are found by scanning the
//! valency bound, and the idempotents are Lagrange interpolation
//! polynomials in `D_1`; anything outside this class is rejected rather
//! than approximated.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::rational::{binomial, pow_rat, rat, rat_of, Rat};
use crate::{Error, Result};

/// A symmetric association scheme with exact spectral data.
///
/// `phi[s][i]` is the eigenvalue of the `s`-th adjacency matrix on the
/// `i`-th primitive idempotent, `valencies[s] = phi[s][0]`, and
/// `multiplicities[i]` is the rank of the idempotent. Intersection numbers
/// are stored as `intersection[i][j][k]`.
#[derive(Clone, Debug)]
pub struct AssociationScheme {
    pub n_classes: usize,
    pub x_size: BigInt,
    pub valencies: Vec<BigInt>,
    pub multiplicities: Vec<BigInt>,
    pub phi: Vec<Vec<Rat>>,
    pub intersection: Vec<Vec<Vec<BigInt>>>,
}

impl AssociationScheme {
    pub fn classes(&self) -> usize {
        self.n_classes
    }

    /// Plancherel probability `mu_i / |X|`.
    pub fn plancherel(&self, i: usize) -> Rat {
        Rat::new(self.multiplicities[i].clone(), self.x_size.clone())
    }

    /// Normalized eigenvalue `phi_s(i) / v_s`.
    pub fn normalized_eigenvalue(&self, s: usize, i: usize) -> Rat {
        &self.phi[s][i] / rat_of(&self.valencies[s])
    }

    /// First orthogonality: `sum_r phi_r(k) phi_r(l) / v_r = |X|/mu_k delta`.
    pub fn orthogonality_rows(&self) -> Result<()> {
        let m = self.n_classes + 1;
        for k in 0..m {
            for l in k..m {
                let mut acc = Rat::zero();
                for r in 0..m {
                    acc += &self.phi[r][k] * &self.phi[r][l] / rat_of(&self.valencies[r]);
                }
                let expect = if k == l {
                    Rat::new(self.x_size.clone(), self.multiplicities[k].clone())
                } else {
                    Rat::zero()
                };
                if acc != expect {
                    return Err(Error::IdentityFailure(format!(
                        "asorthog1 failed at (k,l)=({k},{l}): {acc}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Second orthogonality: `sum_i mu_i phi_k(i) phi_l(i) = |X| v_k delta`.
    pub fn orthogonality_columns(&self) -> Result<()> {
        let m = self.n_classes + 1;
        for k in 0..m {
            for l in k..m {
                let mut acc = Rat::zero();
                for i in 0..m {
                    acc += rat_of(&self.multiplicities[i]) * &self.phi[k][i] * &self.phi[l][i];
                }
                let expect = if k == l {
                    rat_of(&(&self.x_size * &self.valencies[k]))
                } else {
                    Rat::zero()
                };
                if acc != expect {
                    return Err(Error::IdentityFailure(format!(
                        "asorthog2 failed at (k,l)=({k},{l}): {acc}"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Intersection numbers from the eigenmatrix:
/// `c_ijk = (1/|X|) sum_s mu_s phi_i(s) phi_j(s) phi_k(s) / v_k`.
/// Cross-check route for the combinatorial Hamming counts.
#[cfg_attr(not(test), allow(dead_code))]
fn intersection_from_phi(
    x_size: &BigInt,
    valencies: &[BigInt],
    multiplicities: &[BigInt],
    phi: &[Vec<Rat>],
) -> Result<Vec<Vec<Vec<BigInt>>>> {
    let m = valencies.len();
    let mut out = vec![vec![vec![BigInt::zero(); m]; m]; m];
    for i in 0..m {
        for j in 0..m {
            for k in 0..m {
                let mut acc = Rat::zero();
                for s in 0..m {
                    acc += rat_of(&multiplicities[s]) * &phi[i][s] * &phi[j][s] * &phi[k][s];
                }
                acc /= rat_of(x_size) * rat_of(&valencies[k]);
                if !acc.is_integer() || acc.is_negative() {
                    return Err(Error::IdentityFailure(format!(
                        "intersection number c[{i}][{j}][{k}] = {acc} is not a nonnegative integer"
                    )));
                }
                out[i][j][k] = acc.to_integer();
            }
        }
    }
    Ok(out)
}

/// Verify the four scheme axioms on explicit 0/1 relation matrices and
/// extract the exact spectral data.
pub fn scheme_from_relations(relations: &[Vec<Vec<u8>>]) -> Result<AssociationScheme> {
    if relations.is_empty() {
        return Err(Error::InvalidArgument("no relation matrices".into()));
    }
    let size = relations[0].len();
    for (idx, m) in relations.iter().enumerate() {
        if m.len() != size || m.iter().any(|row| row.len() != size) {
            return Err(Error::InvalidArgument(format!(
                "relation {idx} is not {size}x{size}"
            )));
        }
        if m.iter().flatten().any(|&e| e > 1) {
            return Err(Error::InvalidArgument(format!(
                "relation {idx} has entries outside {{0,1}}"
            )));
        }
    }
    // Axiom 1: symmetry.
    for (idx, m) in relations.iter().enumerate() {
        for x in 0..size {
            for y in 0..size {
                if m[x][y] != m[y][x] {
                    return Err(Error::AxiomViolation {
                        axiom: 1,
                        detail: format!("relation {idx} is not symmetric at (x,y)=({x},{y})"),
                    });
                }
            }
        }
    }
    // Axiom 2: exactly one relation per pair.
    for x in 0..size {
        for y in 0..size {
            let hits: usize = relations.iter().map(|m| m[x][y] as usize).sum();
            if hits != 1 {
                return Err(Error::AxiomViolation {
                    axiom: 2,
                    detail: format!("pair ({x},{y}) lies in {hits} relations"),
                });
            }
        }
    }
    // Axiom 3: the identity relation comes first.
    for x in 0..size {
        for y in 0..size {
            let expect = u8::from(x == y);
            if relations[0][x][y] != expect {
                return Err(Error::AxiomViolation {
                    axiom: 3,
                    detail: format!("relation 0 is not the identity at (x,y)=({x},{y})"),
                });
            }
        }
    }
    let n_classes = relations.len() - 1;
    // Axiom 4: products lie in the span with constant coefficients.
    let m = n_classes + 1;
    let mut intersection = vec![vec![vec![BigInt::zero(); m]; m]; m];
    let mut which = vec![vec![0usize; size]; size];
    for (k, mat) in relations.iter().enumerate() {
        for x in 0..size {
            for y in 0..size {
                if mat[x][y] == 1 {
                    which[x][y] = k;
                }
            }
        }
    }
    for i in 0..m {
        for j in 0..m {
            // c_ijk: number of z with (x,z) in R_i, (y,z) in R_j, constant
            // over (x,y) in R_k.
            let mut per_class: Vec<Option<u64>> = vec![None; m];
            for x in 0..size {
                for y in 0..size {
                    let mut count = 0u64;
                    for z in 0..size {
                        if relations[i][x][z] == 1 && relations[j][y][z] == 1 {
                            count += 1;
                        }
                    }
                    let k = which[x][y];
                    match per_class[k] {
                        None => per_class[k] = Some(count),
                        Some(prev) if prev == count => {}
                        Some(prev) => {
                            return Err(Error::AxiomViolation {
                                axiom: 4,
                                detail: format!(
                                    "c[{i}][{j}][{k}] is not constant: {prev} vs {count} at (x,y)=({x},{y})"
                                ),
                            });
                        }
                    }
                }
            }
            for (k, c) in per_class.iter().enumerate() {
                intersection[i][j][k] = BigInt::from(c.unwrap_or(0));
            }
        }
    }
    let valencies: Vec<BigInt> = (0..m).map(|i| intersection[i][i][0].clone()).collect();
    let x_size = BigInt::from(size);

    if n_classes == 0 {
        return Ok(AssociationScheme {
            n_classes: 0,
            x_size,
            valencies: vec![BigInt::one()],
            multiplicities: vec![BigInt::one()],
            phi: vec![vec![rat(1)]],
            intersection,
        });
    }

    // Eigenvalues of D_1 from the collapsed multiplication operator
    // B[k][j] = c_{1jk}; they are bounded by the valency v_1.
    let b: Vec<Vec<BigInt>> = (0..m)
        .map(|k| (0..m).map(|j| intersection[1][j][k].clone()).collect())
        .collect();
    let v1 = i64::try_from(&valencies[1])
        .map_err(|_| Error::Capability("valency too large for eigenvalue scan".into()))?;
    let mut eigenvalues = Vec::new();
    for theta in -v1..=v1 {
        if collapsed_is_singular(&b, theta) {
            eigenvalues.push(theta);
        }
    }
    if eigenvalues.len() != m {
        return Err(Error::Capability(format!(
            "need {m} distinct integer eigenvalues of the first adjacency matrix, found {}",
            eigenvalues.len()
        )));
    }
    eigenvalues.sort_unstable_by(|a, b| b.cmp(a));

    // Idempotents as Lagrange polynomials in D_1.
    let d1: Vec<Vec<Rat>> = relations[1]
        .iter()
        .map(|row| row.iter().map(|&e| rat(e as i64)).collect())
        .collect();
    let mut phi = vec![vec![Rat::zero(); m]; m];
    let mut multiplicities = Vec::with_capacity(m);
    for (i, &theta_i) in eigenvalues.iter().enumerate() {
        let mut j_i = identity_matrix(size);
        let mut scale = Rat::one();
        for &theta_j in &eigenvalues {
            if theta_j == theta_i {
                continue;
            }
            j_i = mat_mul(&j_i, &mat_sub_scalar(&d1, theta_j));
            scale *= rat(theta_i - theta_j);
        }
        let scale = scale.recip();
        let mu = trace(&j_i) * &scale;
        if !mu.is_integer() || !mu.is_positive() {
            return Err(Error::Capability(format!(
                "idempotent {i} has non-integer rank {mu}"
            )));
        }
        multiplicities.push(mu.to_integer());
        // phi_s(i) = tr(D_s J_i) / mu_i
        for s in 0..m {
            let mut tr = Rat::zero();
            for x in 0..size {
                for y in 0..size {
                    if relations[s][x][y] == 1 {
                        tr += &j_i[y][x];
                    }
                }
            }
            phi[s][i] = tr * &scale / rat_of(&multiplicities[i]);
        }
    }

    let scheme = AssociationScheme {
        n_classes,
        x_size,
        valencies,
        multiplicities,
        phi,
        intersection,
    };
    scheme.orthogonality_rows()?;
    scheme.orthogonality_columns()?;
    Ok(scheme)
}

fn collapsed_is_singular(b: &[Vec<BigInt>], theta: i64) -> bool {
    let m = b.len();
    let mut a: Vec<Vec<Rat>> = (0..m)
        .map(|r| {
            (0..m)
                .map(|c| {
                    let mut v = rat_of(&b[r][c]);
                    if r == c {
                        v -= rat(theta);
                    }
                    v
                })
                .collect()
        })
        .collect();
    // Gaussian elimination; singular iff some pivot column dies.
    let mut rank = 0usize;
    for col in 0..m {
        let Some(pivot) = (rank..m).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot);
        let inv = a[rank][col].clone().recip();
        for r in 0..m {
            if r != rank && !a[r][col].is_zero() {
                let factor = &a[r][col] * &inv;
                for c in col..m {
                    let d = &a[rank][c] * &factor;
                    a[r][c] -= d;
                }
            }
        }
        rank += 1;
    }
    rank < m
}

fn identity_matrix(n: usize) -> Vec<Vec<Rat>> {
    (0..n)
        .map(|i| (0..n).map(|j| rat(i64::from(i == j))).collect())
        .collect()
}

fn mat_sub_scalar(a: &[Vec<Rat>], theta: i64) -> Vec<Vec<Rat>> {
    let mut out = a.to_vec();
    for (i, row) in out.iter_mut().enumerate() {
        row[i] -= rat(theta);
    }
    out
}

fn mat_mul(a: &[Vec<Rat>], b: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let n = a.len();
    let mut out = vec![vec![Rat::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    out[i][j] += &a[i][k] * &b[k][j];
                }
            }
        }
    }
    out
}

fn trace(a: &[Vec<Rat>]) -> Rat {
    (0..a.len()).map(|i| a[i][i].clone()).sum()
}

/// Hamming intersection numbers by splitting coordinates: with `x, y` at
/// distance `k`, a point `z` at distances `(i, j)` agrees with `x` on
/// `alpha`, with `y` on `beta`, with neither on `gamma` of the `k`
/// disagreeing coordinates, and differs from both on `delta` of the rest.
fn hamming_intersection(d: u32, q: u32) -> Vec<Vec<Vec<BigInt>>> {
    let m = d as usize + 1;
    let mut out = vec![vec![vec![BigInt::zero(); m]; m]; m];
    let factorial = |n: u64| crate::rational::factorial(n);
    for k in 0..m as u64 {
        for i in 0..m as u64 {
            for j in 0..m as u64 {
                let mut acc = BigInt::zero();
                for delta in 0..=(d as u64 - k) {
                    let Some(gamma) = (i + j).checked_sub(k + 2 * delta) else {
                        continue;
                    };
                    if gamma > k {
                        continue;
                    }
                    let Some(alpha) = (k + delta).checked_sub(i) else {
                        continue;
                    };
                    let Some(beta) = (k + delta).checked_sub(j) else {
                        continue;
                    };
                    if alpha + beta + gamma != k {
                        continue;
                    }
                    let mut term =
                        factorial(k) / (factorial(alpha) * factorial(beta) * factorial(gamma));
                    if gamma > 0 {
                        term *= BigInt::from(q as i64 - 2).pow(gamma as u32);
                    }
                    term *= binomial(d as u64 - k, delta);
                    if delta > 0 {
                        term *= BigInt::from(q as i64 - 1).pow(delta as u32);
                    }
                    acc += term;
                }
                out[i as usize][j as usize][k as usize] = acc;
            }
        }
    }
    out
}

/// The Hamming scheme `H(d, q)` in closed form: valencies and
/// multiplicities `(q-1)^i C(d,i)`, eigenvalues the alternating binomial
/// sums.
pub fn hamming_scheme(d: u32, q: u32) -> Result<AssociationScheme> {
    if d < 1 {
        return Err(Error::InvalidArgument("hamming scheme needs d >= 1".into()));
    }
    if q < 2 {
        return Err(Error::InvalidArgument("hamming scheme needs q >= 2".into()));
    }
    let m = d as usize + 1;
    let qm1 = rat(q as i64 - 1);
    let valencies: Vec<BigInt> = (0..m)
        .map(|i| (pow_rat(&qm1, i as i64) * rat_of(&binomial(d as u64, i as u64))).to_integer())
        .collect();
    let multiplicities = valencies.clone();
    let mut phi = vec![vec![Rat::zero(); m]; m];
    for s in 0..m {
        for i in 0..m {
            let mut acc = Rat::zero();
            for j in 0..=s {
                let term = pow_rat(&qm1, (s - j) as i64)
                    * rat_of(&binomial(i as u64, j as u64))
                    * rat_of(&binomial((d as usize - i) as u64, (s - j) as u64));
                if j % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            phi[s][i] = acc;
        }
    }
    let x_size = pow_rat(&rat(q as i64), d as i64).to_integer();
    let intersection = hamming_intersection(d, q);
    Ok(AssociationScheme {
        n_classes: d as usize,
        x_size,
        valencies,
        multiplicities,
        phi,
        intersection,
    })
}

/// Explicit tuple relations of `H(d, q)` (for cross-checking the closed
/// form at small sizes): matrices indexed by Hamming distance.
pub fn hamming_relations(d: u32, q: u32) -> Vec<Vec<Vec<u8>>> {
    let size = (q as usize).pow(d);
    let tuple = |mut idx: usize| -> Vec<u32> {
        let mut t = Vec::with_capacity(d as usize);
        for _ in 0..d {
            t.push((idx % q as usize) as u32);
            idx /= q as usize;
        }
        t
    };
    let tuples: Vec<Vec<u32>> = (0..size).map(tuple).collect();
    let mut rels = vec![vec![vec![0u8; size]; size]; d as usize + 1];
    for x in 0..size {
        for y in 0..size {
            let dist = tuples[x]
                .iter()
                .zip(&tuples[y])
                .filter(|(a, b)| a != b)
                .count();
            rels[dist][x][y] = 1;
        }
    }
    rels
}

/// Walk occupancies `p_m(r)` for the class-`s` walk, by the spectral sum
/// `sum_i (mu_i/|X|) (phi_s(i)/v_s)^m phi_r(i)`.
pub fn scheme_walk_probabilities(scheme: &AssociationScheme, s: usize, m: u32) -> Result<Vec<Rat>> {
    let classes = scheme.n_classes + 1;
    if s >= classes {
        return Err(Error::InvalidArgument(format!(
            "class index {s} out of range (n_classes = {})",
            scheme.n_classes
        )));
    }
    let mut out = Vec::with_capacity(classes);
    for r in 0..classes {
        let mut acc = Rat::zero();
        for i in 0..classes {
            let mut term = scheme.plancherel(i) * &scheme.phi[r][i];
            for _ in 0..m {
                term *= scheme.normalized_eigenvalue(s, i);
            }
            acc += term;
        }
        out.push(acc);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    #[test]
    fn hamming_closed_form_basics() {
        let h = hamming_scheme(3, 2).unwrap();
        h.orthogonality_rows().unwrap();
        h.orthogonality_columns().unwrap();
        let total: BigInt = h.valencies.iter().sum();
        assert_eq!(total, h.x_size);
        // phi_1(i) = (q-1)d - qi
        for i in 0..=3usize {
            assert_eq!(h.phi[1][i], rat(3 - 2 * i as i64));
        }
        // phi_s(0) = v_s
        for s in 0..=3usize {
            assert_eq!(h.phi[s][0], rat_of(&h.valencies[s]));
            assert_eq!(h.phi[0][s], rat(1));
        }
        assert!(hamming_scheme(3, 1).is_err());
        assert!(hamming_scheme(0, 2).is_err());
    }

    #[test]
    fn hamming_matches_tuple_construction() {
        for (d, q) in [(2u32, 2u32), (2, 3), (3, 2), (4, 3)] {
            let closed = hamming_scheme(d, q).unwrap();
            let built = scheme_from_relations(&hamming_relations(d, q)).unwrap();
            assert_eq!(closed.x_size, built.x_size);
            assert_eq!(closed.valencies, built.valencies);
            assert_eq!(closed.multiplicities, built.multiplicities);
            assert_eq!(closed.phi, built.phi);
            assert_eq!(closed.intersection, built.intersection);
        }
    }

    #[test]
    fn intersection_routes_agree() {
        for (d, q) in [(3u32, 2u32), (4, 3), (6, 5)] {
            let h = hamming_scheme(d, q).unwrap();
            let spectral =
                intersection_from_phi(&h.x_size, &h.valencies, &h.multiplicities, &h.phi).unwrap();
            assert_eq!(h.intersection, spectral, "d={d} q={q}");
        }
    }

    #[test]
    fn trivial_scheme() {
        let rels = vec![vec![vec![1u8]]];
        let s = scheme_from_relations(&rels).unwrap();
        assert_eq!(s.n_classes, 0);
        assert_eq!(s.valencies, vec![BigInt::one()]);
        assert_eq!(s.phi, vec![vec![rat(1)]]);
    }

    #[test]
    fn irrational_eigenvalues_rejected() {
        // Distance relations of the 5-cycle: a valid scheme whose first
        // adjacency matrix has golden-ratio eigenvalues.
        let size = 5usize;
        let mut rels = vec![vec![vec![0u8; size]; size]; 3];
        for x in 0..size {
            for y in 0..size {
                let diff = (x + size - y) % size;
                let dist = diff.min(size - diff);
                rels[dist][x][y] = 1;
            }
        }
        match scheme_from_relations(&rels) {
            Err(Error::Capability(_)) => {}
            other => panic!("expected capability rejection, got {other:?}"),
        }
    }

    #[test]
    fn non_symmetric_relation_is_axiom_1() {
        let rels = vec![
            vec![vec![1, 0], vec![0, 1]],
            vec![vec![0, 1], vec![0, 0]],
            vec![vec![0, 0], vec![1, 0]],
        ];
        match scheme_from_relations(&rels) {
            Err(Error::AxiomViolation { axiom: 1, .. }) => {}
            other => panic!("expected axiom-1 violation, got {other:?}"),
        }
    }

    #[test]
    fn overlapping_relations_are_axiom_2() {
        let rels = vec![
            vec![vec![1, 0], vec![0, 1]],
            vec![vec![0, 1], vec![1, 0]],
            vec![vec![0, 1], vec![1, 0]],
        ];
        match scheme_from_relations(&rels) {
            Err(Error::AxiomViolation { axiom: 2, .. }) => {}
            other => panic!("expected axiom-2 violation, got {other:?}"),
        }
    }

    #[test]
    fn hamming_two_step_values() {
        // p_2(0) = 1/((q-1)d), p_2(1) = (q-2)/((q-1)d), p_2(2) = 1 - 1/d
        for (d, q) in [(3u32, 2u32), (4, 3), (7, 5)] {
            let h = hamming_scheme(d, q).unwrap();
            let p2 = scheme_walk_probabilities(&h, 1, 2).unwrap();
            let qd = (q as i64 - 1) * d as i64;
            assert_eq!(p2[0], frac(1, qd));
            assert_eq!(p2[1], frac(q as i64 - 2, qd));
            assert_eq!(p2[2], rat(1) - frac(1, d as i64));
            let mass: Rat = p2.iter().cloned().sum();
            assert_eq!(mass, rat(1));
        }
    }

    #[test]
    fn walk_recurrences() {
        // p_4(0) = sum_r p_2(r)^2 / v_r and p_3(s) = v_s p_4(0)
        for (d, q, s) in [(4u32, 3u32, 1usize), (5, 2, 2), (6, 4, 1)] {
            let h = hamming_scheme(d, q).unwrap();
            let p2 = scheme_walk_probabilities(&h, s, 2).unwrap();
            let p3 = scheme_walk_probabilities(&h, s, 3).unwrap();
            let p4 = scheme_walk_probabilities(&h, s, 4).unwrap();
            let sum: Rat = (0..=d as usize)
                .map(|r| &p2[r] * &p2[r] / rat_of(&h.valencies[r]))
                .sum();
            assert_eq!(p4[0], sum);
            assert_eq!(p3[s], rat_of(&h.valencies[s]) * &p4[0]);
        }
    }

    #[test]
    fn p0_is_the_identity_indicator() {
        let h = hamming_scheme(5, 3).unwrap();
        let p0 = scheme_walk_probabilities(&h, 2, 0).unwrap();
        assert_eq!(p0[0], rat(1));
        assert!(p0[1..].iter().all(|v| v.is_zero()));
    }
}
