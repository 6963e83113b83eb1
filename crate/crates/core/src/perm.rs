//! Minimal permutation plumbing for the brute-force oracles and the
//! hyperoctahedral enumeration: permutations are image vectors on
//! `0..n`.

use crate::partition::Partition;

pub type Perm = Vec<usize>;

pub fn identity(n: usize) -> Perm {
    (0..n).collect()
}

/// `(p * q)(x) = p(q(x))`.
pub fn compose(p: &[usize], q: &[usize]) -> Perm {
    q.iter().map(|&x| p[x]).collect()
}

pub fn inverse(p: &[usize]) -> Perm {
    let mut inv = vec![0; p.len()];
    for (i, &x) in p.iter().enumerate() {
        inv[x] = i;
    }
    inv
}

pub fn cycle_type(p: &[usize]) -> Partition {
    let mut seen = vec![false; p.len()];
    let mut lens = Vec::new();
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0u32;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = p[x];
            len += 1;
        }
        lens.push(len);
    }
    Partition::from_unsorted(lens).expect("cycle lengths are positive")
}

/// All permutations of `0..n`, by Heap's algorithm.
pub fn all_perms(n: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut a = identity(n);
    heap(n, &mut a, &mut out);
    out
}

fn heap(k: usize, a: &mut Perm, out: &mut Vec<Perm>) {
    if k <= 1 {
        out.push(a.clone());
        return;
    }
    for i in 0..k {
        heap(k - 1, a, out);
        if k.is_multiple_of(2) {
            a.swap(i, k - 1);
        } else {
            a.swap(0, k - 1);
        }
    }
}

/// All elements of the given conjugacy class of the symmetric group.
pub fn class_elements(mu: &Partition) -> Vec<Perm> {
    let n = mu.n() as usize;
    all_perms(n)
        .into_iter()
        .filter(|p| &cycle_type(p) == mu)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_and_invert() {
        let p = vec![1, 2, 0, 3]; // (0 1 2)
        let q = inverse(&p);
        assert_eq!(compose(&p, &q), identity(4));
        assert_eq!(cycle_type(&p).parts(), &[3, 1]);
    }

    #[test]
    fn class_sizes_match_formula() {
        let mu = Partition::new(vec![2, 1, 1]).unwrap();
        assert_eq!(class_elements(&mu).len(), 6);
        let mu = Partition::new(vec![5]).unwrap();
        assert_eq!(class_elements(&mu).len(), 24);
        assert_eq!(all_perms(5).len(), 120);
    }
}
