//! Enumeration of monodromy representations of branched covers of the line:
//! tuples `(t₁, …, t_n)` in `S_d` with prescribed cycle types, product
//! `t₁·t₂·⋯·t_n` equal to the identity, and transitive image — up to
//! simultaneous conjugation (sheet relabeling).
//!
//! The search backtracks over tuple slots carrying the partial product;
//! the last slot is never searched, being forced as the inverse of the
//! partial product and validated against its prescribed cycle type.  Two
//! prunes apply: a Riemann–Hurwitz feasibility gate up front (a connected
//! cover's genus is a nonnegative integer, so an odd or negative solution
//! of the genus equation rules out all tuples), and a reachability bound
//! during the search (each remaining slot with `r` cycles can merge at most
//! `d − r` orbit components).
//!
//! Classes are deduplicated by canonical form: the lexicographically
//! minimal tuple in the conjugation orbit, found by trying all `d!`
//! conjugators.  That brute-force canonicalization caps the supported
//! degree at `d ≤ 8` by design.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};

use crate::error::{Error, Result};
use crate::exact::{BigInt, BigRational, Partition};
use crate::formulas::riemann_hurwitz_genus;
use crate::perm::{all_of_degree, all_with_cycle_type, CycleType, Permutation};

/// Largest supported degree: canonicalization tries all `d!` conjugators.
pub const MAX_DEGREE: usize = 8;

/// Default bound on search nodes before the enumeration aborts.
pub const DEFAULT_NODE_GUARD: u64 = 100_000_000;

/// A monodromy search problem: a degree and an ordered list of branch
/// profiles (cycle types), one per branch point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonodromyProblem {
    degree: usize,
    profiles: Vec<Partition>,
}

impl MonodromyProblem {
    /// Validates that the degree is positive and every profile is a
    /// partition of it.
    pub fn new(degree: usize, profiles: Vec<Partition>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::invalid("degree must be at least 1"));
        }
        for (i, p) in profiles.iter().enumerate() {
            if p.total() != degree as u64 {
                return Err(Error::invalid(format!(
                    "profile {} ([{}]) sums to {}, not the degree {}",
                    i + 1,
                    p,
                    p.total(),
                    degree
                )));
            }
        }
        Ok(MonodromyProblem { degree, profiles })
    }

    /// The sheet count `d`.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// The ordered branch profiles.
    pub fn profiles(&self) -> &[Partition] {
        &self.profiles
    }

    /// Riemann–Hurwitz genus of a connected cover with these profiles, or
    /// `None` when no such cover can exist (odd or negative solution).
    pub fn expected_genus(&self) -> Option<i64> {
        riemann_hurwitz_genus(self.degree as u64, &self.profiles)
    }

    /// Parses `{"degree": 3, "profiles": [[2,1],[2,1],[2,1],[2,1]]}`.
    pub fn from_json(text: &str) -> Result<Self> {
        let value: serde_json::Value = serde_json::from_str(text)
            .map_err(|e| Error::invalid(format!("bad problem JSON: {e}")))?;
        let degree = value
            .get("degree")
            .and_then(|v| v.as_u64())
            .ok_or_else(|| Error::invalid("problem JSON needs a positive \"degree\""))?;
        let profiles_json = value
            .get("profiles")
            .and_then(|v| v.as_array())
            .ok_or_else(|| Error::invalid("problem JSON needs a \"profiles\" array"))?;
        let mut profiles = Vec::with_capacity(profiles_json.len());
        for p in profiles_json {
            let parts = p
                .as_array()
                .ok_or_else(|| Error::invalid("each profile must be an array of parts"))?
                .iter()
                .map(|x| {
                    x.as_u64()
                        .filter(|&v| v > 0)
                        .ok_or_else(|| Error::invalid("profile parts must be positive integers"))
                })
                .collect::<Result<Vec<u64>>>()?;
            profiles.push(Partition::new(parts)?);
        }
        MonodromyProblem::new(
            usize::try_from(degree).map_err(|_| Error::invalid("degree out of range"))?,
            profiles,
        )
    }

    /// The JSON form accepted by [`MonodromyProblem::from_json`].
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "degree": self.degree,
            "profiles": self.profiles.iter()
                .map(|p| p.parts().to_vec())
                .collect::<Vec<_>>(),
        })
    }
}

/// One simultaneous-conjugation class of monodromy tuples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonodromyClass {
    representative: Vec<Permutation>,
    class_size: u64,
    stabilizer_order: u64,
}

impl MonodromyClass {
    /// The canonical representative: the lexicographically minimal tuple in
    /// the orbit.
    pub fn representative(&self) -> &[Permutation] {
        &self.representative
    }

    /// Number of tuples in the orbit (`d! / stabilizer_order`).
    pub fn class_size(&self) -> u64 {
        self.class_size
    }

    /// Order of the simultaneous-conjugation stabilizer of the tuple.
    pub fn stabilizer_order(&self) -> u64 {
        self.stabilizer_order
    }
}

/// Knobs for the search.
#[derive(Debug, Clone)]
pub struct EnumerationOptions {
    /// Abort with a resource error after this many search nodes.
    pub node_guard: u64,
    /// Worker threads for the first-slot split (1 = sequential).
    pub jobs: usize,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        EnumerationOptions {
            node_guard: DEFAULT_NODE_GUARD,
            jobs: 1,
        }
    }
}

/// The full result of a class enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enumeration {
    problem: MonodromyProblem,
    classes: Vec<MonodromyClass>,
    raw_tuple_count: u64,
    nodes_visited: u64,
    expected_genus: Option<i64>,
}

impl Enumeration {
    /// The problem this enumeration solved.
    pub fn problem(&self) -> &MonodromyProblem {
        &self.problem
    }

    /// All classes, sorted by canonical representative.
    pub fn classes(&self) -> &[MonodromyClass] {
        &self.classes
    }

    /// Number of classes.
    pub fn count(&self) -> u64 {
        self.classes.len() as u64
    }

    /// Total number of raw tuples satisfying all constraints
    /// (= Σ class sizes).
    pub fn raw_tuple_count(&self) -> u64 {
        self.raw_tuple_count
    }

    /// Search nodes visited.
    pub fn nodes_visited(&self) -> u64 {
        self.nodes_visited
    }

    /// Riemann–Hurwitz genus, `None` when impossible.
    pub fn expected_genus(&self) -> Option<i64> {
        self.expected_genus
    }

    /// Classes weighted by `1/|stabilizer|` — the Hurwitz-number style
    /// count, equal to `raw_tuple_count / d!`.
    pub fn weighted_count(&self) -> BigRational {
        let mut acc = BigRational::from_integer(BigInt::from(0));
        for class in &self.classes {
            acc += BigRational::new(BigInt::from(1), BigInt::from(class.stabilizer_order));
        }
        acc
    }

    /// JSON report: problem echo, genus, counts, and every class with its
    /// representative in cycle notation.
    pub fn to_json(&self) -> serde_json::Value {
        let genus = match self.expected_genus {
            Some(g) => serde_json::json!(g),
            None => serde_json::json!("impossible"),
        };
        serde_json::json!({
            "degree": self.problem.degree(),
            "profiles": self.problem.to_json()["profiles"],
            "expected_genus": genus,
            "count": self.count(),
            "raw_tuple_count": self.raw_tuple_count,
            "weighted_count": self.weighted_count().to_string(),
            "nodes_visited": self.nodes_visited,
            "classes": self.classes.iter().map(|c| {
                serde_json::json!({
                    "representative": c.representative()
                        .iter()
                        .map(|p| p.to_string())
                        .collect::<Vec<_>>(),
                    "class_size": c.class_size,
                    "stabilizer_order": c.stabilizer_order,
                })
            }).collect::<Vec<_>>(),
        })
    }
}

/// Enumerates all simultaneous-conjugation classes for the problem.
///
/// Errors: empty profile list or unsupported degree (invalid input), node
/// guard exceeded (resource error — never a silent truncation).
pub fn enumerate_classes(
    problem: &MonodromyProblem,
    options: &EnumerationOptions,
) -> Result<Enumeration> {
    let d = problem.degree;
    let n = problem.profiles.len();
    if n == 0 {
        return Err(Error::invalid("at least one branch profile is required"));
    }
    if d > MAX_DEGREE {
        return Err(Error::invalid(format!(
            "degree {d} exceeds the supported maximum {MAX_DEGREE}"
        )));
    }
    let expected_genus = problem.expected_genus();

    // Riemann–Hurwitz gate: a connected cover has a genus, and the genus
    // equation determines it; an odd or negative solution means no tuple
    // can satisfy all three constraints, so the search is skipped.
    if expected_genus.is_none() {
        return Ok(Enumeration {
            problem: problem.clone(),
            classes: Vec::new(),
            raw_tuple_count: 0,
            nodes_visited: 0,
            expected_genus,
        });
    }

    // Candidates per free slot, and cycle counts for the reachability bound.
    let candidates: Vec<Vec<Vec<usize>>> = problem
        .profiles
        .iter()
        .take(n - 1)
        .map(|p| {
            all_with_cycle_type(d, &CycleType(p.clone()))
                .into_iter()
                .map(|q| q.images().to_vec())
                .collect()
        })
        .collect();

    // suffix_merge[k] = max number of orbit merges slots k..n-1 can still
    // perform; a permutation with r cycles merges at most d - r components.
    let mut suffix_merge = vec![0u64; n + 1];
    for k in (0..n).rev() {
        suffix_merge[k] = suffix_merge[k + 1] + (d as u64 - problem.profiles[k].len() as u64);
    }

    let all_perm_images: Vec<Vec<usize>> = all_of_degree(d)
        .into_iter()
        .map(|p| p.images().to_vec())
        .collect();
    let factorial = all_perm_images.len() as u64;

    let nodes = AtomicU64::new(0);
    let search = Search {
        d,
        n,
        candidates: &candidates,
        last_profile: &problem.profiles[n - 1],
        suffix_merge: &suffix_merge,
        all_perm_images: &all_perm_images,
        factorial,
        nodes: &nodes,
        node_guard: options.node_guard,
    };

    let jobs = options.jobs.max(1);
    let (classes_map, raw) = if n == 1 || jobs == 1 || candidates[0].len() <= 1 {
        search.run_range(0, candidates.first().map_or(1, |c| c.len()))?
    } else {
        run_parallel(&search, jobs)?
    };

    let classes = classes_map
        .into_iter()
        .map(|(tuple, stabilizer_order)| MonodromyClass {
            representative: tuple
                .into_iter()
                .map(|images| Permutation::from_images(images).expect("search produces bijections"))
                .collect(),
            class_size: factorial / stabilizer_order,
            stabilizer_order,
        })
        .collect();

    Ok(Enumeration {
        problem: problem.clone(),
        classes,
        raw_tuple_count: raw,
        nodes_visited: nodes.load(AtomicOrdering::Relaxed),
        expected_genus,
    })
}

/// Number of classes; see [`enumerate_classes`].
pub fn count_classes(problem: &MonodromyProblem, options: &EnumerationOptions) -> Result<u64> {
    Ok(enumerate_classes(problem, options)?.count())
}

/// Map from canonical tuple to stabilizer order.
type ClassMap = BTreeMap<Vec<Vec<usize>>, u64>;

struct Search<'a> {
    d: usize,
    n: usize,
    candidates: &'a [Vec<Vec<usize>>],
    last_profile: &'a Partition,
    suffix_merge: &'a [u64],
    all_perm_images: &'a [Vec<usize>],
    factorial: u64,
    nodes: &'a AtomicU64,
    node_guard: u64,
}

/// Union-find over sheet indices, small enough to copy per search level.
#[derive(Clone)]
struct Dsu {
    parent: Vec<u8>,
    components: usize,
}

impl Dsu {
    fn new(d: usize) -> Self {
        Dsu {
            parent: (0..d as u8).collect(),
            components: d,
        }
    }

    fn find(&mut self, mut x: u8) -> u8 {
        while self.parent[x as usize] != x {
            self.parent[x as usize] = self.parent[self.parent[x as usize] as usize];
            x = self.parent[x as usize];
        }
        x
    }

    fn union(&mut self, a: u8, b: u8) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra as usize] = rb;
            self.components -= 1;
        }
    }

    /// Adds the undirected edges x — images[x].
    fn absorb(&mut self, images: &[usize]) {
        for (x, &img) in images.iter().enumerate() {
            self.union(x as u8, img as u8);
        }
    }
}

impl Search<'_> {
    fn bump_nodes(&self) -> Result<()> {
        let seen = self.nodes.fetch_add(1, AtomicOrdering::Relaxed) + 1;
        if seen > self.node_guard {
            return Err(Error::guard(format!(
                "monodromy search exceeded {} nodes",
                self.node_guard
            )));
        }
        Ok(())
    }

    /// Runs the whole search restricted to first-slot candidates with index
    /// in `[lo, hi)` (for `n = 1` the range is ignored).
    fn run_range(&self, lo: usize, hi: usize) -> Result<(ClassMap, u64)> {
        let mut state = SearchState {
            partial: (0..self.d).collect(),
            dsu: Dsu::new(self.d),
            tuple: Vec::with_capacity(self.n),
            classes: ClassMap::new(),
            raw: 0,
            scratch: vec![vec![0usize; self.d]; self.n],
        };
        if self.n == 1 {
            self.close_tuple(&mut state)?;
        } else {
            self.descend(0, Some((lo, hi)), &mut state)?;
        }
        Ok((state.classes, state.raw))
    }

    fn descend(
        &self,
        slot: usize,
        first_range: Option<(usize, usize)>,
        state: &mut SearchState,
    ) -> Result<()> {
        let (lo, hi) = match first_range {
            Some(range) if slot == 0 => range,
            _ => (0, self.candidates[slot].len()),
        };
        for candidate in &self.candidates[slot][lo..hi] {
            self.bump_nodes()?;

            let saved_partial = state.partial.clone();
            let saved_dsu = state.dsu.clone();
            // partial ← partial ∘ candidate (apply the new slot first).
            state.partial = candidate.iter().map(|&m| saved_partial[m]).collect();
            state.dsu.absorb(candidate);
            state.tuple.push(candidate.clone());

            // Reachability prune: the remaining slots (including the forced
            // last one) can merge at most suffix_merge[slot+1] components.
            let needed = state.dsu.components as u64 - 1;
            if needed <= self.suffix_merge[slot + 1] {
                if slot + 1 == self.n - 1 {
                    self.close_tuple(state)?;
                } else {
                    self.descend(slot + 1, None, state)?;
                }
            }

            state.tuple.pop();
            state.dsu = saved_dsu;
            state.partial = saved_partial;
        }
        Ok(())
    }

    /// Validates the forced last slot and records the tuple when it passes.
    fn close_tuple(&self, state: &mut SearchState) -> Result<()> {
        self.bump_nodes()?;
        // The forced entry is the inverse of the partial product; an inverse
        // has the same cycle type, so validate on the partial product.
        if cycle_lengths(&state.partial).as_slice() != self.last_profile.parts() {
            return Ok(());
        }
        // The inverse traverses the same undirected edges as the partial
        // product itself.
        let mut dsu = state.dsu.clone();
        dsu.absorb(&state.partial);
        if dsu.components != 1 {
            return Ok(());
        }
        let mut forced = vec![0usize; self.d];
        for (x, &img) in state.partial.iter().enumerate() {
            forced[img] = x;
        }
        state.tuple.push(forced);
        state.raw += 1;
        let (canonical, stabilizer) = self.canonical_form(&state.tuple, &mut state.scratch);
        if let Some(&existing) = state.classes.get(&canonical) {
            debug_assert_eq!(existing, stabilizer);
        } else {
            state.classes.insert(canonical, stabilizer);
        }
        state.tuple.pop();
        Ok(())
    }

    /// Lexicographically minimal simultaneous conjugate of `tuple`, plus the
    /// stabilizer order (the number of conjugators achieving the minimum).
    fn canonical_form(
        &self,
        tuple: &[Vec<usize>],
        scratch: &mut [Vec<usize>],
    ) -> (Vec<Vec<usize>>, u64) {
        let mut best: Option<Vec<Vec<usize>>> = None;
        let mut stabilizer = 0u64;
        for s in self.all_perm_images {
            for (slot, t) in tuple.iter().enumerate() {
                for x in 0..self.d {
                    scratch[slot][s[x]] = s[t[x]];
                }
            }
            let scratch_view = &scratch[..tuple.len()];
            match best.as_deref().map(|b| scratch_view.cmp(b)) {
                None | Some(Ordering::Less) => {
                    best = Some(scratch_view.to_vec());
                    stabilizer = 1;
                }
                Some(Ordering::Equal) => stabilizer += 1,
                Some(Ordering::Greater) => {}
            }
        }
        debug_assert_eq!(self.factorial % stabilizer, 0);
        (
            best.expect("at least the identity conjugator ran"),
            stabilizer,
        )
    }
}

struct SearchState {
    /// Composition of the tuple entries chosen so far (as image table).
    partial: Vec<usize>,
    /// Orbit structure of the group generated so far.
    dsu: Dsu,
    /// The chosen tuple entries.
    tuple: Vec<Vec<usize>>,
    classes: ClassMap,
    raw: u64,
    scratch: Vec<Vec<usize>>,
}

fn cycle_lengths(images: &[usize]) -> Vec<u64> {
    let mut lengths = Vec::new();
    let mut seen = vec![false; images.len()];
    for start in 0..images.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0u64;
        let mut point = start;
        while !seen[point] {
            seen[point] = true;
            point = images[point];
            len += 1;
        }
        lengths.push(len);
    }
    lengths.sort_unstable_by(|a, b| b.cmp(a));
    lengths
}

/// Splits the first slot across worker threads and merges their class maps.
fn run_parallel(search: &Search<'_>, jobs: usize) -> Result<(ClassMap, u64)> {
    let total = search.candidates[0].len();
    let workers = jobs.min(total);
    let chunk = total.div_ceil(workers);
    let results: Vec<Result<(ClassMap, u64)>> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let lo = w * chunk;
                let hi = ((w + 1) * chunk).min(total);
                scope.spawn(move || search.run_range(lo, hi))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("search worker panicked"))
            .collect()
    });
    let mut classes = ClassMap::new();
    let mut raw = 0u64;
    for result in results {
        let (worker_classes, worker_raw) = result?;
        raw += worker_raw;
        for (tuple, stabilizer) in worker_classes {
            if let Some(&existing) = classes.get(&tuple) {
                debug_assert_eq!(existing, stabilizer);
            } else {
                classes.insert(tuple, stabilizer);
            }
        }
    }
    Ok((classes, raw))
}
