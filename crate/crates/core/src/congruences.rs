//! Congruence closure, congruence lattices, simplicity and quotients.
//!
//! Partitions are kept canonical: the label of an element is the smallest
//! member of its block. Equality of partitions is therefore equality of label
//! vectors, and the derived ordering is lexicographic on labels.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tables::{FiniteSemiring, OpTable};

/// Default cap on the order accepted by [`congruence_lattice`].
pub const DEFAULT_LATTICE_ORDER_CAP: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition {
    labels: Vec<usize>,
}

impl Partition {
    pub fn identity(n: usize) -> Self {
        Partition {
            labels: (0..n).collect(),
        }
    }

    pub fn full(n: usize) -> Self {
        Partition { labels: vec![0; n] }
    }

    /// Accepts any labelling (equal labels = same block) and canonicalizes it.
    pub fn from_block_ids(ids: &[usize]) -> Self {
        let mut labels = vec![0; ids.len()];
        for i in 0..ids.len() {
            labels[i] = (0..=i).find(|&j| ids[j] == ids[i]).unwrap_or(i);
        }
        Partition { labels }
    }

    /// Accepts labels that must already be canonical.
    pub fn from_labels(labels: Vec<usize>) -> Result<Self> {
        for (i, &l) in labels.iter().enumerate() {
            if l > i {
                return Err(Error::InvalidPartition(format!(
                    "label {l} of element {i} exceeds the element"
                )));
            }
            if labels[l] != l {
                return Err(Error::InvalidPartition(format!(
                    "label {l} of element {i} is not a block minimum"
                )));
            }
        }
        Ok(Partition { labels })
    }

    /// Builds a partition from explicit blocks; unmentioned elements are
    /// singletons.
    pub fn from_blocks(n: usize, blocks: &[&[usize]]) -> Result<Self> {
        let mut ids: Vec<usize> = (0..n).collect();
        let mut seen = vec![false; n];
        for (k, block) in blocks.iter().enumerate() {
            for &x in block.iter() {
                if x >= n {
                    return Err(Error::ElementOutOfRange {
                        element: x,
                        order: n,
                    });
                }
                if seen[x] {
                    return Err(Error::InvalidPartition(format!(
                        "element {x} appears in two blocks"
                    )));
                }
                seen[x] = true;
                ids[x] = n + k;
            }
        }
        Ok(Partition::from_block_ids(&ids))
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    #[inline]
    pub fn label(&self, x: usize) -> usize {
        self.labels[x]
    }

    #[inline]
    pub fn related(&self, x: usize, y: usize) -> bool {
        self.labels[x] == self.labels[y]
    }

    pub fn num_blocks(&self) -> usize {
        self.labels
            .iter()
            .enumerate()
            .filter(|&(i, &l)| i == l)
            .count()
    }

    /// Blocks in order of their smallest element, members ascending.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = Vec::new();
        let mut index = vec![usize::MAX; self.order()];
        for (x, &l) in self.labels.iter().enumerate() {
            if index[l] == usize::MAX {
                index[l] = out.len();
                out.push(Vec::new());
            }
            out[index[l]].push(x);
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.labels.iter().enumerate().all(|(i, &l)| i == l)
    }

    pub fn is_full(&self) -> bool {
        self.labels.iter().all(|&l| l == 0)
    }

    /// `self ⊆ other` as relations.
    pub fn refines(&self, other: &Partition) -> bool {
        (0..self.order()).all(|x| other.related(x, self.labels[x]))
    }

    /// Block-wise intersection.
    pub fn meet(&self, other: &Partition) -> Partition {
        let ids: Vec<usize> = (0..self.order())
            .map(|x| self.labels[x] * self.order() + other.labels[x])
            .collect();
        Partition::from_block_ids(&ids)
    }

    /// Pairs `(x, label(x))` for every non-minimal element; they generate the
    /// partition as an equivalence.
    pub fn generating_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.labels
            .iter()
            .enumerate()
            .filter(|&(i, &l)| i != l)
            .map(|(i, &l)| (l, i))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.labels.iter().map(|l| l.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let labels = s
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(format!("bad label `{t}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::from_labels(labels)
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when already merged.
    fn union(&mut self, x: usize, y: usize) -> bool {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx == ry {
            return false;
        }
        // Smaller root wins so the final labels need no second pass.
        let (lo, hi) = if rx < ry { (rx, ry) } else { (ry, rx) };
        self.parent[hi] = lo;
        true
    }

    fn into_partition(mut self) -> Partition {
        let n = self.parent.len();
        let ids: Vec<usize> = (0..n).map(|x| self.find(x)).collect();
        Partition::from_block_ids(&ids)
    }
}

/// The smallest congruence containing `pairs`.
///
/// Union-find over elements with a worklist of pending pairs: every time two
/// classes merge because of `(u, v)`, the translates `(u+c, v+c)`, `(uc, vc)`
/// and `(cu, cv)` are queued for every `c`.
pub fn congruence_generated(
    s: &FiniteSemiring,
    pairs: impl IntoIterator<Item = (usize, usize)>,
) -> Result<Partition> {
    let n = s.order();
    let mut uf = UnionFind::new(n);
    let mut queue: VecDeque<(usize, usize)> = VecDeque::new();
    for (x, y) in pairs {
        for e in [x, y] {
            if e >= n {
                return Err(Error::ElementOutOfRange {
                    element: e,
                    order: n,
                });
            }
        }
        queue.push_back((x, y));
    }
    while let Some((u, v)) = queue.pop_front() {
        if !uf.union(u, v) {
            continue;
        }
        for c in 0..n {
            queue.push_back((s.add(u, c), s.add(v, c)));
            queue.push_back((s.mul(u, c), s.mul(v, c)));
            queue.push_back((s.mul(c, u), s.mul(c, v)));
        }
    }
    Ok(uf.into_partition())
}

fn principal(s: &FiniteSemiring, x: usize, y: usize) -> Partition {
    congruence_generated(s, [(x, y)]).expect("elements in range")
}

/// Join in the congruence lattice, as the closure of both generator sets.
pub fn join(s: &FiniteSemiring, a: &Partition, b: &Partition) -> Partition {
    congruence_generated(s, a.generating_pairs().chain(b.generating_pairs()))
        .expect("elements in range")
}

/// First violation of translation stability, as `(x, y, description)`.
pub fn stability_violation(s: &FiniteSemiring, p: &Partition) -> Option<(usize, usize, String)> {
    let n = s.order();
    for x in 0..n {
        for y in x + 1..n {
            if !p.related(x, y) {
                continue;
            }
            for c in 0..n {
                if !p.related(s.add(x, c), s.add(y, c)) {
                    return Some((
                        x,
                        y,
                        format!(
                            "{x}+{c}={} and {y}+{c}={} are not related",
                            s.add(x, c),
                            s.add(y, c)
                        ),
                    ));
                }
                if !p.related(s.mul(x, c), s.mul(y, c)) {
                    return Some((
                        x,
                        y,
                        format!(
                            "{x}·{c}={} and {y}·{c}={} are not related",
                            s.mul(x, c),
                            s.mul(y, c)
                        ),
                    ));
                }
                if !p.related(s.mul(c, x), s.mul(c, y)) {
                    return Some((
                        x,
                        y,
                        format!(
                            "{c}·{x}={} and {c}·{y}={} are not related",
                            s.mul(c, x),
                            s.mul(c, y)
                        ),
                    ));
                }
            }
        }
    }
    None
}

pub fn is_congruence(s: &FiniteSemiring, p: &Partition) -> bool {
    p.order() == s.order() && stability_violation(s, p).is_none()
}

/// All congruences of a finite semiring, sorted by label sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CongruenceLattice {
    congruences: Vec<Partition>,
}

impl CongruenceLattice {
    pub fn congruences(&self) -> &[Partition] {
        &self.congruences
    }

    pub fn len(&self) -> usize {
        self.congruences.len()
    }

    pub fn is_empty(&self) -> bool {
        self.congruences.is_empty()
    }

    pub fn contains(&self, p: &Partition) -> bool {
        self.congruences.binary_search(p).is_ok()
    }

    /// Maximal proper congruences.
    pub fn coatoms(&self) -> Vec<Partition> {
        let proper: Vec<&Partition> = self.congruences.iter().filter(|p| !p.is_full()).collect();
        proper
            .iter()
            .filter(|p| !proper.iter().any(|q| q != *p && p.refines(q)))
            .map(|p| (*p).clone())
            .collect()
    }

    /// Minimal non-identity congruences.
    pub fn atoms(&self) -> Vec<Partition> {
        let nontrivial: Vec<&Partition> = self
            .congruences
            .iter()
            .filter(|p| !p.is_identity())
            .collect();
        nontrivial
            .iter()
            .filter(|p| !nontrivial.iter().any(|q| q != *p && q.refines(p)))
            .map(|p| (*p).clone())
            .collect()
    }
}

pub fn congruence_lattice(s: &FiniteSemiring) -> Result<CongruenceLattice> {
    congruence_lattice_with_cap(s, DEFAULT_LATTICE_ORDER_CAP)
}

/// Closes the principal congruences under pairwise join.
pub fn congruence_lattice_with_cap(s: &FiniteSemiring, cap: usize) -> Result<CongruenceLattice> {
    let n = s.order();
    if n > cap {
        return Err(Error::OrderTooLarge {
            order: n,
            bound: cap,
        });
    }
    let principals: BTreeSet<Partition> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .map(|(i, j)| principal(s, i, j))
        .collect();
    let mut all: BTreeSet<Partition> = principals.clone();
    all.insert(Partition::identity(n));
    // Every congruence is a join of principal ones, so joining new members
    // with principals reaches the closure.
    let mut frontier: Vec<Partition> = principals.iter().cloned().collect();
    while let Some(p) = frontier.pop() {
        for q in &principals {
            if q.refines(&p) {
                continue;
            }
            let j = join(s, &p, q);
            if all.insert(j.clone()) {
                frontier.push(j);
            }
        }
    }
    Ok(CongruenceLattice {
        congruences: all.into_iter().collect(),
    })
}

/// Exactly two congruences: order at least 2 and every principal congruence
/// is full.
pub fn is_congruence_simple(s: &FiniteSemiring) -> bool {
    let n = s.order();
    n >= 2 && (0..n).all(|i| (i + 1..n).all(|j| principal(s, i, j).is_full()))
}

/// The smallest non-identity congruence, when one exists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Monolith {
    pub exists: bool,
    pub partition: Option<Partition>,
}

impl Monolith {
    pub fn is_subdirectly_irreducible(&self) -> bool {
        self.exists
    }
}

/// Meet of all principal congruences.
pub fn monolith(s: &FiniteSemiring) -> Monolith {
    let n = s.order();
    let mut meet = Partition::full(n);
    for i in 0..n {
        for j in i + 1..n {
            meet = meet.meet(&principal(s, i, j));
        }
    }
    if n < 2 || meet.is_identity() {
        Monolith {
            exists: false,
            partition: None,
        }
    } else {
        Monolith {
            exists: true,
            partition: Some(meet),
        }
    }
}

/// `S / c`, with blocks re-indexed densely in order of their smallest element.
pub fn quotient(s: &FiniteSemiring, c: &Partition) -> Result<FiniteSemiring> {
    if c.order() != s.order() {
        return Err(Error::InvalidPartition(format!(
            "partition of {} elements for order {}",
            c.order(),
            s.order()
        )));
    }
    if let Some((x, y, detail)) = stability_violation(s, c) {
        return Err(Error::NotACongruence { x, y, detail });
    }
    let reps: Vec<usize> = c.blocks().iter().map(|b| b[0]).collect();
    let mut index = vec![0; s.order()];
    for (k, &r) in reps.iter().enumerate() {
        index[r] = k;
    }
    let block_of = |x: usize| index[c.label(x)];
    let k = reps.len();
    let add = OpTable::from_fn(k, |i, j| block_of(s.add(reps[i], reps[j])))?;
    let mul = OpTable::from_fn(k, |i, j| block_of(s.mul(reps[i], reps[j])))?;
    Ok(FiniteSemiring::from_tables_unchecked(add, mul))
}

/// Elements grouped by `x + x`.
pub fn doubling_congruence(s: &FiniteSemiring) -> Partition {
    let ids: Vec<usize> = s.elements().map(|x| s.add(x, x)).collect();
    let p = Partition::from_block_ids(&ids);
    debug_assert!(
        is_congruence(s, &p),
        "x+x is an endomorphism, its kernel must be a congruence"
    );
    p
}

/// All set partitions of `0..n` via restricted growth strings. Test and
/// oracle support.
pub fn all_partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut rgs = vec![0usize; n];
    fn rec(i: usize, max: usize, rgs: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if i == rgs.len() {
            out.push(Partition::from_block_ids(rgs));
            return;
        }
        for b in 0..=max + 1 {
            rgs[i] = b;
            rec(i + 1, max.max(b), rgs, out);
        }
    }
    if n == 0 {
        return out;
    }
    rec(1, 0, &mut rgs, &mut out);
    out
}
