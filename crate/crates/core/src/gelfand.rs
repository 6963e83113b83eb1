//! Spherical function tables for the two built-in Gelfand pairs: the
//! hypercube pair (closed Krawtchouk-type forms, no enumeration) and the
//! perfect-matchings pair: the symmetric group on `2n` symbols over the
//! hyperoctahedral subgroup fixing a fixed-point-free involution.
//!
//! For the matchings pair the table is computed from the definition: the
//! subgroup is enumerated, the translates of each double-coset
//! representative are bucketed by cycle type, and one character evaluation
//! per type gives each spherical value. Dimensions are recovered from the
//! first orthogonality relation and cross-checked against the Jack measure
//! at parameter 2.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;

use num_traits::{Signed, Zero};

use crate::characters::MnCache;
use crate::partition::{enumerate_partitions, jack_measure, z_of, Partition, PartitionFilter};
use crate::perm::{self, Perm};
use crate::rational::{binomial, factorial, pow2, rat, rat_of, Rat};
use crate::{Error, Result};

/// Largest `n` for which the hyperoctahedral subgroup (`2^n n!` elements)
/// is enumerated to build the matchings pair.
pub const MATCHINGS_MAX_N: u32 = 6;

/// Largest `n` for which pairs of perfect matchings are enumerated.
pub const MATCHINGS_BRUTE_MAX_N: u32 = 5;

/// Double-coset label: an integer for the hypercube, a partition shape for
/// the matchings pair.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Index(usize),
    Shape(Partition),
}

impl std::fmt::Display for Label {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Label::Index(i) => write!(f, "{i}"),
            Label::Shape(p) => write!(f, "{p}"),
        }
    }
}

impl std::fmt::Debug for Label {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        std::fmt::Display::fmt(self, f)
    }
}

/// Spherical-function data of a Gelfand pair.
///
/// `omega[i][r]` is the value of the `i`-th spherical function on the
/// `r`-th double coset; `coset_ratio[r]` is `|K_r| / |K|`; `dims[i]` the
/// dimension of the `i`-th constituent. Row and column `identity_coset()`
/// carry the trivial coset, where every spherical function equals 1.
#[derive(Clone, Debug)]
pub struct GelfandPairData {
    pub labels: Vec<Label>,
    pub dims: Vec<BigInt>,
    pub coset_ratio: Vec<Rat>,
    pub omega: Vec<Vec<Rat>>,
    pub k_order: BigInt,
    pub g_order: BigInt,
    identity: usize,
}

impl GelfandPairData {
    pub fn size(&self) -> usize {
        self.labels.len()
    }

    /// Index of the trivial double coset (representative: identity).
    pub fn identity_coset(&self) -> usize {
        self.identity
    }

    /// Plancherel probability `d_i |K| / |G|` of the `i`-th spherical
    /// function.
    pub fn plancherel(&self, i: usize) -> Rat {
        Rat::new(&self.dims[i] * &self.k_order, self.g_order.clone())
    }

    pub fn label_index(&self, l: &Label) -> Option<usize> {
        self.labels.iter().position(|x| x == l)
    }

    /// First orthogonality: `(d_i/|G|) sum_r |K_r| w_i(r) w_j(r) = delta`.
    pub fn orthogonality_rows(&self) -> Result<()> {
        let s = self.size();
        for i in 0..s {
            for j in i..s {
                let mut acc = Rat::zero();
                for r in 0..s {
                    acc += &self.coset_ratio[r] * &self.omega[i][r] * &self.omega[j][r];
                }
                acc *= self.plancherel(i);
                let expect = if i == j { rat(1) } else { Rat::zero() };
                if acc != expect {
                    return Err(Error::IdentityFailure(format!(
                        "orthog1 failed at (i,j)=({i},{j}): {acc}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Second orthogonality: `sum_i d_i w_i(r) w_i(t) = delta |G| / |K_r|`.
    pub fn orthogonality_cosets(&self) -> Result<()> {
        let s = self.size();
        for r in 0..s {
            for t in r..s {
                let mut acc = Rat::zero();
                for i in 0..s {
                    acc += self.plancherel(i) * &self.omega[i][r] * &self.omega[i][t];
                }
                let expect = if r == t {
                    self.coset_ratio[r].recip()
                } else {
                    Rat::zero()
                };
                if acc != expect {
                    return Err(Error::IdentityFailure(format!(
                        "orthog2 failed at (r,t)=({r},{t}): {acc}"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// The hypercube pair on `n` coordinates. Labels are `0..=n`;
/// `d_r = |K_r|/|K| = C(n,r)` and the spherical values are the normalized
/// Krawtchouk sums.
pub fn hypercube_pair(n: u32) -> Result<GelfandPairData> {
    if n == 0 {
        return Err(Error::InvalidArgument("hypercube needs n >= 1".into()));
    }
    let s = n as usize + 1;
    let labels = (0..s).map(Label::Index).collect();
    let dims: Vec<BigInt> = (0..=n as u64).map(|r| binomial(n as u64, r)).collect();
    let coset_ratio: Vec<Rat> = dims.iter().map(rat_of).collect();
    let mut omega = vec![vec![Rat::zero(); s]; s];
    for i in 0..=n {
        let denom = rat_of(&binomial(n as u64, i as u64));
        for r in 0..=n {
            let mut acc = BigInt::zero();
            for m in 0..=i {
                let term = binomial(r as u64, m as u64) * binomial((n - r) as u64, (i - m) as u64);
                if m % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            omega[i as usize][r as usize] = rat_of(&acc) / denom.clone();
        }
    }
    Ok(GelfandPairData {
        labels,
        dims,
        coset_ratio,
        omega,
        k_order: factorial(n as u64),
        g_order: pow2(n as i64).to_integer() * factorial(n as u64),
        identity: 0,
    })
}

/// The fixed-point-free involution pairing `2k` with `2k+1`.
fn base_involution(n: usize) -> Perm {
    let mut t = vec![0; 2 * n];
    for k in 0..n {
        t[2 * k] = 2 * k + 1;
        t[2 * k + 1] = 2 * k;
    }
    t
}

/// All elements of the centralizer of the base involution: block
/// permutations combined with within-block swaps, `2^n n!` in total.
fn hyperoctahedral(n: usize) -> Vec<Perm> {
    let mut out = Vec::with_capacity((1usize << n) * (1..=n).product::<usize>());
    for sigma in perm::all_perms(n) {
        for eps in 0u32..(1 << n) {
            let mut w = vec![0; 2 * n];
            for k in 0..n {
                let bit = ((eps >> k) & 1) as usize;
                w[2 * k] = 2 * sigma[k] + bit;
                w[2 * k + 1] = 2 * sigma[k] + 1 - bit;
            }
            out.push(w);
        }
    }
    out
}

/// Half cycle lengths of the union of two perfect matchings, as a partition
/// of `n`.
pub fn matching_union_type(m1: &[usize], m2: &[usize]) -> Partition {
    let mut seen = vec![false; m1.len()];
    let mut halves = Vec::new();
    for start in 0..m1.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0u32;
        let mut x = start;
        loop {
            seen[x] = true;
            let y = m1[x];
            seen[y] = true;
            x = m2[y];
            len += 1;
            if x == start {
                break;
            }
        }
        halves.push(len);
    }
    Partition::from_unsorted(halves).expect("positive half-lengths")
}

/// Coset type of `w`: the union type of the base involution and its
/// conjugate by `w`.
fn coset_type(w: &[usize], t: &[usize]) -> Partition {
    let wi = perm::inverse(w);
    let conj: Perm = (0..w.len()).map(|x| w[t[wi[x]]]).collect();
    matching_union_type(t, &conj)
}

/// Double coset representative for shape `nu`: concatenated full cycles,
/// one of length `2 nu_j` per part.
fn coset_representative(nu: &Partition) -> Perm {
    let two_n = 2 * nu.n() as usize;
    let mut w = perm::identity(two_n);
    let mut offset = 0usize;
    for &part in nu.parts() {
        let len = 2 * part as usize;
        for j in 0..len {
            w[offset + j] = offset + (j + 1) % len;
        }
        offset += len;
    }
    w
}

/// `|K_mu| / |K|` for the matchings pair:
/// `2^n n! / (2^{l(mu)} prod_j m_j! j^{m_j})`.
pub fn matchings_coset_ratio(mu: &Partition) -> Rat {
    let n = mu.n();
    let numer = pow2(n as i64).to_integer() * factorial(n as u64);
    let denom = pow2(mu.len() as i64).to_integer() * z_of(mu);
    Rat::new(numer, denom)
}

/// The perfect-matchings pair at size `n`, built by enumeration.
///
/// Constituents are labeled by partitions `lambda` of `n` and realized
/// inside the degree-`2n` symmetric group by the doubled shape `2 lambda`;
/// the identification is validated internally by the Jack-measure
/// cross-check on dimensions.
pub fn matchings_pair(n: u32) -> Result<GelfandPairData> {
    if n == 0 {
        return Err(Error::InvalidArgument("matchings pair needs n >= 1".into()));
    }
    if n > MATCHINGS_MAX_N {
        return Err(Error::ResourceBound(format!(
            "matchings pair enumerates 2^n n! group elements; n={n} exceeds the bound {MATCHINGS_MAX_N}"
        )));
    }
    let parts = enumerate_partitions(n, PartitionFilter::All);
    let s = parts.len();
    let nu = n as usize;
    let t = base_involution(nu);
    let subgroup = hyperoctahedral(nu);
    let k_order = BigInt::from(subgroup.len());
    let g_order = factorial(2 * n as u64);

    // Bucket w_mu^{-1} k by cycle type, once per double coset.
    let mut buckets: Vec<HashMap<Partition, u64>> = Vec::with_capacity(s);
    for mu in &parts {
        let w = coset_representative(mu);
        if &coset_type(&w, &t) != mu {
            return Err(Error::IdentityFailure(format!(
                "representative of {mu} lies in the wrong double coset"
            )));
        }
        let w_inv = perm::inverse(&w);
        let mut counts: HashMap<Partition, u64> = HashMap::new();
        for k in &subgroup {
            *counts
                .entry(perm::cycle_type(&perm::compose(&w_inv, k)))
                .or_default() += 1;
        }
        buckets.push(counts);
    }

    let mut cache = MnCache::new();
    let mut omega = vec![vec![Rat::zero(); s]; s];
    for (i, lambda) in parts.iter().enumerate() {
        let doubled = lambda.doubled();
        for (r, counts) in buckets.iter().enumerate() {
            let mut acc = BigInt::zero();
            for (ty, &count) in counts {
                acc += BigInt::from(cache.chi(&doubled, ty)?) * BigInt::from(count);
            }
            omega[i][r] = Rat::new(acc, k_order.clone());
        }
    }

    let coset_ratio: Vec<Rat> = parts.iter().map(matchings_coset_ratio).collect();

    // d_lambda from row orthogonality, then the Jack_2 cross-check.
    let g_over_k = Rat::new(g_order.clone(), k_order.clone());
    let mut dims = Vec::with_capacity(s);
    for i in 0..s {
        let mut norm = Rat::zero();
        for r in 0..s {
            norm += &coset_ratio[r] * &omega[i][r] * &omega[i][r];
        }
        let d = &g_over_k / norm;
        if !d.is_integer() || !d.is_positive() {
            return Err(Error::IdentityFailure(format!(
                "non-integer dimension {d} for constituent {}",
                parts[i]
            )));
        }
        dims.push(d.to_integer());
    }
    let identity = s - 1; // (1^n) is last in reverse-lexicographic order
    let data = GelfandPairData {
        labels: parts.iter().cloned().map(Label::Shape).collect(),
        dims,
        coset_ratio,
        omega,
        k_order,
        g_order,
        identity,
    };
    for (i, lambda) in parts.iter().enumerate() {
        if data.omega[i][identity] != rat(1) {
            return Err(Error::IdentityFailure(format!(
                "spherical function {lambda} is not 1 on the trivial coset"
            )));
        }
        if data.plancherel(i) != jack_measure(lambda, &rat(2))? {
            return Err(Error::IdentityFailure(format!(
                "dimension of {lambda} disagrees with the Jack_2 measure"
            )));
        }
    }
    Ok(data)
}

/// All perfect matchings of `0..2n`, as involution image vectors.
pub fn all_matchings(n: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut partial = vec![usize::MAX; 2 * n];
    fn rec(out: &mut Vec<Perm>, partial: &mut Vec<usize>) {
        let first = match partial.iter().position(|&x| x == usize::MAX) {
            None => {
                out.push(partial.clone());
                return;
            }
            Some(i) => i,
        };
        for partner in first + 1..partial.len() {
            if partial[partner] == usize::MAX {
                partial[first] = partner;
                partial[partner] = first;
                rec(out, partial);
                partial[first] = usize::MAX;
                partial[partner] = usize::MAX;
            }
        }
    }
    rec(&mut out, &mut partial);
    out
}

/// Two-step coset occupancy of the walk generated by `K_{(i,1^{n-i})}`,
/// by direct enumeration over pairs of perfect matchings.
pub fn matchings_p2_combinatorial(n: u32, i: u32) -> Result<BTreeMap<Partition, Rat>> {
    if n > MATCHINGS_BRUTE_MAX_N {
        return Err(Error::ResourceBound(format!(
            "matching-pair enumeration is bounded at n={MATCHINGS_BRUTE_MAX_N}, got n={n}"
        )));
    }
    if i < 2 || i > n {
        return Err(Error::InvalidArgument(format!(
            "generator needs 2 <= i <= n, got i={i}"
        )));
    }
    let u = Partition::hook_type(n, i)?;
    let eps = base_involution(n as usize);
    let matchings = all_matchings(n as usize);
    let deltas: Vec<&Perm> = matchings
        .iter()
        .filter(|d| matching_union_type(&eps, d) == u)
        .collect();
    let mut counts: BTreeMap<Partition, u64> = BTreeMap::new();
    for delta in &deltas {
        for gamma in &matchings {
            if matching_union_type(delta, gamma) == u {
                *counts.entry(matching_union_type(&eps, gamma)).or_default() += 1;
            }
        }
    }
    let total = (deltas.len() as u64).pow(2);
    let mut out = BTreeMap::new();
    let mut mass = Rat::zero();
    for (mu, c) in counts {
        let p = Rat::new(BigInt::from(c), BigInt::from(total));
        mass += &p;
        out.insert(mu, p);
    }
    if mass != rat(1) {
        return Err(Error::IdentityFailure(format!(
            "matching pair enumeration mass {mass} != 1"
        )));
    }
    Ok(out)
}

/// Closed-form two-step coset occupancy for the `i = 2` generator, valid
/// for every `n >= 4`. Composing two crossing moves leaves exactly four
/// reachable coset types; the counts follow from how the second move's
/// edge pair meets the first move's.
pub fn matchings_p2_two_cycle(n: u32) -> Result<BTreeMap<Partition, Rat>> {
    if n < 4 {
        return Err(Error::InvalidArgument(format!(
            "two-cycle closed form needs n >= 4, got {n}"
        )));
    }
    let nn = rat(n as i64);
    let pairs = &nn * (&nn - rat(1)); // number of crossing moves
    let mut out = BTreeMap::new();
    out.insert(Partition::one_column(n), pairs.recip());
    out.insert(Partition::hook_type(n, 2)?, pairs.recip());
    out.insert(
        Partition::hook_type(n, 3)?,
        rat(4) * (&nn - rat(2)) / &pairs,
    );
    let mut two_two = vec![2, 2];
    two_two.extend(std::iter::repeat_n(1, n as usize - 4));
    out.insert(
        Partition::new(two_two)?,
        (&nn - rat(2)) * (&nn - rat(3)) / &pairs,
    );
    Ok(out)
}
