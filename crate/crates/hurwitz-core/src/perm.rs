//! Elements of the symmetric group `S_d`: composition, conjugation, cycle
//! types, and transitivity of generated subgroups.
//!
//! Points are 1-based in all input/output (cycle-notation strings such as
//! `"(1 2)(3 4)"`); storage is 0-based.  A permutation always carries its
//! degree `d`, and fixed points are part of the data: `(1 2)` in `S_3` and
//! `(1 2)` in `S_4` are different values.

use std::fmt;

use crate::error::{Error, Result};
use crate::exact::Partition;

/// A permutation of `{1, …, d}`, stored as the image table of `{0, …, d−1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

/// The cycle type of a permutation: the partition of `d` by cycle lengths,
/// fixed points included as parts equal to 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType(pub Partition);

impl Permutation {
    /// The identity on `{1, …, degree}`.
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// Builds a permutation from a 0-based image table, validating that it
    /// is a bijection.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let d = images.len();
        let mut seen = vec![false; d];
        for &img in &images {
            if img >= d || seen[img] {
                return Err(Error::invalid("image table is not a bijection"));
            }
            seen[img] = true;
        }
        Ok(Permutation { images })
    }

    /// Degree `d` (the permutation acts on `{1, …, d}`).
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a 0-based point.
    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    /// The raw 0-based image table.
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// True iff every point is fixed.
    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| i == img)
    }

    /// Composition `self ∘ other`: apply `other` first, then `self`.
    /// Errors on degree mismatch.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::invalid(format!(
                "degree mismatch in composition: {} vs {}",
                self.degree(),
                other.degree()
            )));
        }
        Ok(Permutation {
            images: other.images.iter().map(|&m| self.images[m]).collect(),
        })
    }

    /// The inverse permutation.
    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img] = i;
        }
        Permutation { images }
    }

    /// Conjugation `s · self · s⁻¹` — relabels the points of `self` via `s`.
    /// Errors on degree mismatch.
    pub fn conjugate(&self, s: &Permutation) -> Result<Permutation> {
        if self.degree() != s.degree() {
            return Err(Error::invalid(format!(
                "degree mismatch in conjugation: {} vs {}",
                self.degree(),
                s.degree()
            )));
        }
        let mut images = vec![0; self.degree()];
        for i in 0..self.degree() {
            images[s.images[i]] = s.images[self.images[i]];
        }
        Ok(Permutation { images })
    }

    /// The cycle type: partition of `d` by cycle lengths, fixed points
    /// included as 1s.
    pub fn cycle_type(&self) -> CycleType {
        let mut lengths = Vec::new();
        let mut seen = vec![false; self.degree()];
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut point = start;
            while !seen[point] {
                seen[point] = true;
                point = self.images[point];
                len += 1;
            }
            lengths.push(len);
        }
        CycleType(Partition::new(lengths).expect("cycle lengths are positive"))
    }

    /// Nontrivial cycles as 0-based point lists; each cycle starts at its
    /// minimal point, cycles sorted by starting point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut cycles = Vec::new();
        let mut seen = vec![false; self.degree()];
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut point = start;
            while !seen[point] {
                seen[point] = true;
                cycle.push(point);
                point = self.images[point];
            }
            if cycle.len() > 1 {
                cycles.push(cycle);
            }
        }
        cycles
    }

    /// Parses cycle notation with 1-based points, e.g. `"(1 2)(3 4)"`.
    ///
    /// Whitespace and commas both separate points within a cycle; fixed
    /// points may be omitted; `"()"` and the empty string denote the
    /// identity.  Cycles need not be disjoint: as in composition of maps,
    /// the rightmost cycle is applied first.  Errors on points outside
    /// `1..=degree`, repeats within one cycle, or stray characters.
    pub fn parse(text: &str, degree: usize) -> Result<Permutation> {
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut chars = text.chars().peekable();
        loop {
            while chars.next_if(|c| c.is_whitespace()).is_some() {}
            match chars.next() {
                None => break,
                Some('(') => {
                    let mut cycle: Vec<usize> = Vec::new();
                    let mut digits = String::new();
                    loop {
                        match chars.next() {
                            None => return Err(Error::invalid("unclosed cycle in permutation")),
                            Some(c) if c.is_ascii_digit() => digits.push(c),
                            Some(c) if c.is_whitespace() || c == ',' || c == ')' => {
                                if !digits.is_empty() {
                                    let point: usize = digits.parse().map_err(|_| {
                                        Error::invalid(format!("bad point {digits:?}"))
                                    })?;
                                    if point == 0 || point > degree {
                                        return Err(Error::invalid(format!(
                                            "point {point} outside 1..={degree}"
                                        )));
                                    }
                                    if cycle.contains(&(point - 1)) {
                                        return Err(Error::invalid(format!(
                                            "point {point} repeated within a cycle"
                                        )));
                                    }
                                    cycle.push(point - 1);
                                    digits.clear();
                                }
                                if c == ')' {
                                    break;
                                }
                            }
                            Some(c) => {
                                return Err(Error::invalid(format!(
                                    "unexpected character {c:?} in permutation"
                                )))
                            }
                        }
                    }
                    cycles.push(cycle);
                }
                Some(c) => {
                    return Err(Error::invalid(format!(
                        "unexpected character {c:?} in permutation"
                    )))
                }
            }
        }
        // Product of the cycles, rightmost applied first.
        let mut result = Permutation::identity(degree);
        for cycle in &cycles {
            let mut perm = Permutation::identity(degree);
            for w in cycle.windows(2) {
                perm.images[w[0]] = w[1];
            }
            if cycle.len() > 1 {
                perm.images[cycle[cycle.len() - 1]] = cycle[0];
            }
            result = result.compose(&perm)?;
        }
        Ok(result)
    }
}

/// Displays in cycle notation with 1-based points, fixed points omitted;
/// the identity displays as `"()"`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (i, point) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", point + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl CycleType {
    /// The underlying partition.
    pub fn partition(&self) -> &Partition {
        &self.0
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.0)
    }
}

/// True iff the group generated by `gens` acts transitively on `{1, …, d}`
/// (the orbit of point 1 is everything).
///
/// Computed by orbit closure: points `i` and `g(i)` always lie in one orbit
/// of the generated group, and since groups contain inverses, the orbits are
/// exactly the connected components of the undirected graph with these
/// edges.  Errors on an empty generator list (the degree would be unknown)
/// or mismatched degrees.
pub fn is_transitive(gens: &[Permutation]) -> Result<bool> {
    let Some(first) = gens.first() else {
        return Err(Error::invalid(
            "transitivity needs at least one permutation",
        ));
    };
    let d = first.degree();
    if gens.iter().any(|g| g.degree() != d) {
        return Err(Error::invalid("degree mismatch in generator list"));
    }
    if d == 0 {
        return Ok(true);
    }
    let mut parent: Vec<usize> = (0..d).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for g in gens {
        for i in 0..d {
            let (a, b) = (find(&mut parent, i), find(&mut parent, g.apply(i)));
            if a != b {
                parent[a] = b;
            }
        }
    }
    let root = find(&mut parent, 0);
    Ok((0..d).all(|i| find(&mut parent, i) == root))
}

/// All `d!` permutations of degree `d`, in lexicographic order of image
/// tables.  Intended for small `d` (the monodromy module caps `d ≤ 8`).
pub fn all_of_degree(d: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut images = Vec::with_capacity(d);
    let mut used = vec![false; d];
    fn rec(d: usize, images: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Permutation>) {
        if images.len() == d {
            out.push(Permutation {
                images: images.clone(),
            });
            return;
        }
        for next in 0..d {
            if !used[next] {
                used[next] = true;
                images.push(next);
                rec(d, images, used, out);
                images.pop();
                used[next] = false;
            }
        }
    }
    rec(d, &mut images, &mut used, &mut out);
    out
}

/// All permutations of degree `d` with the given cycle type, in
/// lexicographic order of image tables.
pub fn all_with_cycle_type(d: usize, ct: &CycleType) -> Vec<Permutation> {
    all_of_degree(d)
        .into_iter()
        .filter(|p| &p.cycle_type() == ct)
        .collect()
}
