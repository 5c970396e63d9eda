//! Independent oracles for the acceptance gate.
//!
//! Everything here is deliberately re-implemented from first principles on
//! raw image vectors (`Vec<usize>`, 0-based) and cofactor expansion — no
//! calls into the library's search, canonicalization, or elimination code —
//! so that an agreement check really compares two routes to the same value.

use hurwitz_core::exact::{BigRational, RatMatrix};
use num_traits::Zero;
use std::collections::BTreeSet;

/// All `d!` permutations of `{0, …, d−1}` as image vectors, by recursion
/// on insertion position.
pub fn all_perms(d: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for point in 0..d {
        let mut next = Vec::with_capacity(out.len() * (point + 1));
        for images in out {
            for slot in 0..=point {
                let mut extended = images.clone();
                extended.insert(slot, point);
                next.push(extended);
            }
        }
        out = next;
    }
    out
}

/// Composition `a ∘ b`: apply `b` first, then `a`.
pub fn compose_images(a: &[usize], b: &[usize]) -> Vec<usize> {
    b.iter().map(|&mid| a[mid]).collect()
}

/// Conjugation `s · p · s⁻¹` computed pointwise: the result sends
/// `s(x)` to `s(p(x))`.
pub fn conjugate_images(p: &[usize], s: &[usize]) -> Vec<usize> {
    let mut out = vec![0; p.len()];
    for x in 0..p.len() {
        out[s[x]] = s[p[x]];
    }
    out
}

/// Cycle lengths of an image vector, sorted descending, fixed points
/// included.
pub fn cycle_type_images(p: &[usize]) -> Vec<u64> {
    let mut seen = vec![false; p.len()];
    let mut lengths = Vec::new();
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut length = 0u64;
        let mut at = start;
        while !seen[at] {
            seen[at] = true;
            length += 1;
            at = p[at];
        }
        lengths.push(length);
    }
    lengths.sort_unstable_by(|a, b| b.cmp(a));
    lengths
}

/// Whether the tuple generates a transitive subgroup: flood fill on the
/// union of the functional graphs of the entries.
pub fn is_transitive_images(tuple: &[Vec<usize>], d: usize) -> bool {
    if d == 0 {
        return false;
    }
    let mut reached = vec![false; d];
    let mut stack = vec![0usize];
    reached[0] = true;
    while let Some(at) = stack.pop() {
        for entry in tuple {
            for next in [entry[at], entry.iter().position(|&y| y == at).unwrap()] {
                if !reached[next] {
                    reached[next] = true;
                    stack.push(next);
                }
            }
        }
    }
    reached.into_iter().all(|r| r)
}

/// Lexicographically least simultaneous conjugate of the tuple over the
/// supplied conjugators (comparison on the concatenated image vectors).
pub fn canonical_tuple(tuple: &[Vec<usize>], conjugators: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut best: Option<Vec<Vec<usize>>> = None;
    for s in conjugators {
        let conjugated: Vec<Vec<usize>> = tuple
            .iter()
            .map(|entry| conjugate_images(entry, s))
            .collect();
        if best.as_ref().is_none_or(|b| conjugated < *b) {
            best = Some(conjugated);
        }
    }
    best.expect("at least one conjugator")
}

/// Brute-force enumeration by the definition: walk the full cartesian
/// product of the per-slot conjugacy classes, keep tuples whose product
/// (rightmost factor applied first) is the identity and whose entries act
/// transitively, and partition the survivors into simultaneous-conjugation
/// orbits via canonical forms.  Returns (raw tuple count, class count).
pub fn brute_force_counts(d: usize, profiles: &[Vec<u64>]) -> (u64, u64) {
    let everyone = all_perms(d);
    let identity: Vec<usize> = (0..d).collect();
    let candidates: Vec<Vec<Vec<usize>>> = profiles
        .iter()
        .map(|profile| {
            let mut target = profile.clone();
            target.sort_unstable_by(|a, b| b.cmp(a));
            everyone
                .iter()
                .filter(|p| cycle_type_images(p) == target)
                .cloned()
                .collect()
        })
        .collect();

    let mut raw = 0u64;
    let mut canon_forms: BTreeSet<Vec<Vec<usize>>> = BTreeSet::new();
    let mut indices = vec![0usize; candidates.len()];
    if candidates.iter().any(|c| c.is_empty()) {
        return (0, 0);
    }
    loop {
        let tuple: Vec<Vec<usize>> = indices
            .iter()
            .zip(&candidates)
            .map(|(&i, c)| c[i].clone())
            .collect();
        let product = tuple
            .iter()
            .rev()
            .fold(identity.clone(), |acc, entry| compose_images(entry, &acc));
        if product == identity && is_transitive_images(&tuple, d) {
            raw += 1;
            canon_forms.insert(canonical_tuple(&tuple, &everyone));
        }
        // Odometer increment over the cartesian product.
        let mut slot = candidates.len();
        loop {
            if slot == 0 {
                return (raw, canon_forms.len() as u64);
            }
            slot -= 1;
            indices[slot] += 1;
            if indices[slot] < candidates[slot].len() {
                break;
            }
            indices[slot] = 0;
        }
    }
}

/// Determinant by Laplace cofactor expansion along the first row —
/// exponential, exact, and entirely unrelated to Bareiss elimination.
pub fn det_cofactor(m: &RatMatrix) -> BigRational {
    let n = m.rows();
    assert_eq!(n, m.cols(), "cofactor oracle needs a square matrix");
    if n == 0 {
        return BigRational::from_integer(1.into());
    }
    if n == 1 {
        return m.get(0, 0).clone();
    }
    let mut det = BigRational::zero();
    for col in 0..n {
        let entry = m.get(0, col);
        if entry.is_zero() {
            continue;
        }
        let mut minor = RatMatrix::zero(n - 1, n - 1);
        for r in 1..n {
            let mut target = 0;
            for c in 0..n {
                if c == col {
                    continue;
                }
                minor.set(r - 1, target, m.get(r, c).clone());
                target += 1;
            }
        }
        let term = entry * &det_cofactor(&minor);
        if col % 2 == 0 {
            det += term;
        } else {
            det -= term;
        }
    }
    det
}
