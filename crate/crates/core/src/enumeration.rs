//! Exhaustive generation of finite semirings up to isomorphism.
//!
//! The search runs in two stages. Multiplication tables are filled cell by
//! cell in row-major order; every assignment re-checks exactly the
//! associativity triples that read the new cell. Each complete table that is
//! lexicographically minimal in its relabelling orbit then seeds a search over
//! the upper triangle of the addition table, where each assignment re-checks
//! the additive associativity and distributivity triples that read it.
//! Completed pairs are canonicalized and deduplicated.
//!
//! Restricting to orbit-minimal multiplication tables loses no class: every
//! semiring can be relabelled so that its multiplication table is the orbit
//! minimum, and the addition search is exhaustive for that table.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::congruences::is_congruence_simple;
use crate::constructions::SemilatticeTable;
use crate::divisibility::is_mult_divisible;
use crate::error::{Error, Result};
use crate::ideals::{is_bi_ideal_simple, is_ideal_simple};
use crate::morphisms::{canonical_form, canonical_labelling, CanonicalForm};
use crate::tables::{FiniteSemiring, OpTable};

/// Order bound without idempotency constraints.
pub const MAX_ORDER_UNCONSTRAINED: usize = 4;
/// Order bound when both operations are constrained to be idempotent.
pub const MAX_ORDER_BI_IDEMPOTENT: usize = 5;
pub const MAX_SEMILATTICE_ORDER: usize = 6;

const UNSET: u8 = u8::MAX;
const MAX_N: usize = MAX_SEMILATTICE_ORDER;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ConstraintSet {
    pub mult_idempotent: bool,
    pub add_idempotent: bool,
    pub commutative_mul: bool,
    pub has_mult_absorbing: bool,
    pub congruence_simple_filter: bool,
    pub ideal_simple_filter: bool,
    pub bi_ideal_simple_filter: bool,
    pub mult_divisible_filter: bool,
}

type PostFilter = fn(&FiniteSemiring) -> bool;

impl ConstraintSet {
    pub fn mult_idempotent() -> Self {
        ConstraintSet {
            mult_idempotent: true,
            ..Self::default()
        }
    }

    pub fn bi_idempotent() -> Self {
        ConstraintSet {
            mult_idempotent: true,
            add_idempotent: true,
            ..Self::default()
        }
    }

    /// Largest order the search accepts under these constraints.
    pub fn order_bound(&self) -> usize {
        if self.mult_idempotent && self.add_idempotent {
            MAX_ORDER_BI_IDEMPOTENT
        } else {
            MAX_ORDER_UNCONSTRAINED
        }
    }

    /// Names of the set flags, in declaration order.
    pub fn active_flags(&self) -> Vec<&'static str> {
        let all = [
            ("mult_idempotent", self.mult_idempotent),
            ("add_idempotent", self.add_idempotent),
            ("commutative_mul", self.commutative_mul),
            ("has_mult_absorbing", self.has_mult_absorbing),
            ("congruence_simple_filter", self.congruence_simple_filter),
            ("ideal_simple_filter", self.ideal_simple_filter),
            ("bi_ideal_simple_filter", self.bi_ideal_simple_filter),
            ("mult_divisible_filter", self.mult_divisible_filter),
        ];
        all.iter()
            .filter(|(_, on)| *on)
            .map(|(name, _)| *name)
            .collect()
    }

    fn post_filters(&self) -> Vec<(&'static str, PostFilter)> {
        let mut v: Vec<(&'static str, PostFilter)> = Vec::new();
        if self.congruence_simple_filter {
            v.push(("congruence_simple", is_congruence_simple));
        }
        if self.ideal_simple_filter {
            v.push(("ideal_simple", |s| is_ideal_simple(s).simple));
        }
        if self.bi_ideal_simple_filter {
            v.push(("bi_ideal_simple", |s| is_bi_ideal_simple(s).simple));
        }
        if self.mult_divisible_filter {
            v.push(("mult_divisible", |s| is_mult_divisible(s).divisible));
        }
        v
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    /// Multiplication-table search nodes (cell assignments tried).
    pub mul_nodes: u64,
    /// Addition-table search nodes.
    pub add_nodes: u64,
    /// Assignments rejected by an incremental law check.
    pub prunes: u64,
    /// Complete associative multiplication tables found.
    pub mul_tables: u64,
    /// Of those, the orbit-minimal ones that seeded an addition search.
    pub mul_tables_searched: u64,
    /// Labelled semirings reached before deduplication.
    pub labelled_semirings: u64,
    pub wall_ms: u64,
}

impl SearchStats {
    pub fn nodes_visited(&self) -> u64 {
        self.mul_nodes + self.add_nodes
    }

    fn absorb(&mut self, o: &SearchStats) {
        self.mul_nodes += o.mul_nodes;
        self.add_nodes += o.add_nodes;
        self.prunes += o.prunes;
        self.mul_tables += o.mul_tables;
        self.mul_tables_searched += o.mul_tables_searched;
        self.labelled_semirings += o.labelled_semirings;
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FilterCount {
    pub filter: String,
    /// Classes still standing after this filter and all earlier ones.
    pub remaining: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationResult {
    pub order: usize,
    pub constraints: ConstraintSet,
    /// Sorted, pairwise distinct.
    pub classes: Vec<CanonicalForm>,
    /// Classes satisfying the structural constraints, before post-filters.
    pub structural_classes: usize,
    pub filter_counts: Vec<FilterCount>,
    pub stats: SearchStats,
}

impl EnumerationResult {
    pub fn semirings(&self) -> Vec<FiniteSemiring> {
        self.classes.iter().map(CanonicalForm::semiring).collect()
    }
}

#[derive(Debug, Clone, Default)]
pub struct EnumerationOptions {
    /// Worker cap; `None` uses the global pool.
    pub threads: Option<usize>,
}

pub fn enumerate(order: usize, constraints: ConstraintSet) -> Result<EnumerationResult> {
    enumerate_with(order, constraints, &EnumerationOptions::default())
}

pub fn enumerate_with(
    order: usize,
    constraints: ConstraintSet,
    options: &EnumerationOptions,
) -> Result<EnumerationResult> {
    let bound = constraints.order_bound();
    if order == 0 {
        return Err(Error::EmptyTable);
    }
    if order > bound {
        return Err(Error::OrderTooLarge { order, bound });
    }
    match options.threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t.max(1))
            .build()
            .map_err(|e| Error::Io(e.to_string()))?
            .install(|| run(order, constraints)),
        None => run(order, constraints),
    }
}

fn run(n: usize, constraints: ConstraintSet) -> Result<EnumerationResult> {
    let start = Instant::now();
    let perms = permutations(n);
    let mut stats = SearchStats::default();

    let mut mul_search = MulSearch::new(n, constraints);
    mul_search.descend(0);
    stats.absorb(&mul_search.stats);
    let seeds: Vec<[u8; MAX_N * MAX_N]> = mul_search
        .found
        .into_iter()
        .filter(|m| is_orbit_minimal(m, n, &perms))
        .filter(|m| !constraints.has_mult_absorbing || has_absorbing(m, n))
        .collect();
    stats.mul_tables_searched = seeds.len() as u64;

    let per_seed: Vec<(BTreeSet<CanonicalForm>, SearchStats)> = seeds
        .par_iter()
        .map(|mul| {
            let mut search = AddSearch::new(n, mul, constraints);
            search.descend(0);
            (search.found, search.stats)
        })
        .collect();

    let mut structural: BTreeSet<CanonicalForm> = BTreeSet::new();
    for (found, s) in per_seed {
        stats.absorb(&s);
        structural.extend(found);
    }
    let structural_classes = structural.len();

    let mut classes: Vec<CanonicalForm> = structural.into_iter().collect();
    let mut filter_counts = Vec::new();
    for (name, pred) in constraints.post_filters() {
        classes = classes
            .into_par_iter()
            .filter(|c| pred(&c.semiring()))
            .collect();
        filter_counts.push(FilterCount {
            filter: name.to_string(),
            remaining: classes.len(),
        });
    }
    classes.sort();
    stats.wall_ms = start.elapsed().as_millis() as u64;
    Ok(EnumerationResult {
        order: n,
        constraints,
        classes,
        structural_classes,
        filter_counts,
        stats,
    })
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
    out
}

/// No relabelling yields a lexicographically smaller table.
fn is_orbit_minimal(m: &[u8; MAX_N * MAX_N], n: usize, perms: &[Vec<usize>]) -> bool {
    let mut inv = [0usize; MAX_N];
    for p in perms {
        for (x, &px) in p.iter().enumerate() {
            inv[px] = x;
        }
        // Relabelled cell (i, j) is p[m[inv i][inv j]].
        for k in 0..n * n {
            let (i, j) = (k / n, k % n);
            let v = p[m[inv[i] * n + inv[j]] as usize] as u8;
            let cur = m[k];
            if v < cur {
                return false;
            }
            if v > cur {
                break;
            }
        }
    }
    true
}

fn has_absorbing(m: &[u8; MAX_N * MAX_N], n: usize) -> bool {
    (0..n).any(|w| (0..n).all(|x| m[w * n + x] as usize == w && m[x * n + w] as usize == w))
}

struct MulSearch {
    n: usize,
    cells: [u8; MAX_N * MAX_N],
    /// Cells to assign, row-major; diagonal omitted when fixed, lower triangle
    /// omitted when commutative.
    todo: Vec<(usize, usize)>,
    commutative: bool,
    found: Vec<[u8; MAX_N * MAX_N]>,
    stats: SearchStats,
}

impl MulSearch {
    fn new(n: usize, c: ConstraintSet) -> Self {
        let mut cells = [UNSET; MAX_N * MAX_N];
        if c.mult_idempotent {
            for i in 0..n {
                cells[i * n + i] = i as u8;
            }
        }
        let todo = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| !(c.mult_idempotent && i == j) && !(c.commutative_mul && j < i))
            .collect();
        MulSearch {
            n,
            cells,
            todo,
            commutative: c.commutative_mul,
            found: Vec::new(),
            stats: SearchStats::default(),
        }
    }

    #[inline]
    fn get(&self, x: usize, y: usize) -> Option<usize> {
        let v = self.cells[x * self.n + y];
        (v != UNSET).then_some(v as usize)
    }

    /// Associativity of `(xy)z = x(yz)` when all four products are known.
    #[inline]
    fn triple_ok(&self, x: usize, y: usize, z: usize) -> bool {
        let (Some(xy), Some(yz)) = (self.get(x, y), self.get(y, z)) else {
            return true;
        };
        match (self.get(xy, z), self.get(x, yz)) {
            (Some(l), Some(r)) => l == r,
            _ => true,
        }
    }

    /// Checks every triple that reads cell `(i, j)`.
    fn cell_ok(&self, i: usize, j: usize) -> bool {
        let n = self.n;
        for t in 0..n {
            // (i j) t  and  t (i j)
            if !self.triple_ok(i, j, t) || !self.triple_ok(t, i, j) {
                return false;
            }
        }
        for x in 0..n {
            for y in 0..n {
                // (x y) = i, then (i j) read as the outer product;
                // (x y) = j, then (i j) read as the inner product of i(xy).
                if self.get(x, y) == Some(i) && !self.triple_ok(x, y, j) {
                    return false;
                }
                if self.get(x, y) == Some(j) && !self.triple_ok(i, x, y) {
                    return false;
                }
            }
        }
        true
    }

    fn descend(&mut self, k: usize) {
        if k == self.todo.len() {
            self.stats.mul_tables += 1;
            self.found.push(self.cells);
            return;
        }
        let (i, j) = self.todo[k];
        let n = self.n;
        for v in 0..n as u8 {
            self.stats.mul_nodes += 1;
            self.cells[i * n + j] = v;
            if self.commutative {
                self.cells[j * n + i] = v;
            }
            let ok = self.cell_ok(i, j) && (!self.commutative || self.cell_ok(j, i));
            if ok {
                self.descend(k + 1);
            } else {
                self.stats.prunes += 1;
            }
        }
        self.cells[i * n + j] = UNSET;
        if self.commutative {
            self.cells[j * n + i] = UNSET;
        }
    }
}

struct AddSearch<'m> {
    n: usize,
    mul: &'m [u8; MAX_N * MAX_N],
    add: [u8; MAX_N * MAX_N],
    todo: Vec<(usize, usize)>,
    found: BTreeSet<CanonicalForm>,
    stats: SearchStats,
}

impl<'m> AddSearch<'m> {
    fn new(n: usize, mul: &'m [u8; MAX_N * MAX_N], c: ConstraintSet) -> Self {
        let mut add = [UNSET; MAX_N * MAX_N];
        if c.add_idempotent {
            for i in 0..n {
                add[i * n + i] = i as u8;
            }
        }
        let todo = (0..n)
            .flat_map(|i| (i..n).map(move |j| (i, j)))
            .filter(|&(i, j)| !(c.add_idempotent && i == j))
            .collect();
        AddSearch {
            n,
            mul,
            add,
            todo,
            found: BTreeSet::new(),
            stats: SearchStats::default(),
        }
    }

    #[inline]
    fn m(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.n + y] as usize
    }

    #[inline]
    fn a(&self, x: usize, y: usize) -> Option<usize> {
        let v = self.add[x * self.n + y];
        (v != UNSET).then_some(v as usize)
    }

    #[inline]
    fn assoc_ok(&self, x: usize, y: usize, z: usize) -> bool {
        let (Some(xy), Some(yz)) = (self.a(x, y), self.a(y, z)) else {
            return true;
        };
        match (self.a(xy, z), self.a(x, yz)) {
            (Some(l), Some(r)) => l == r,
            _ => true,
        }
    }

    /// `x(y+z) = xy + xz` and `(y+z)x = yx + zx`, when determined.
    #[inline]
    fn distrib_ok(&self, x: usize, y: usize, z: usize) -> bool {
        let Some(s) = self.a(y, z) else { return true };
        if let Some(r) = self.a(self.m(x, y), self.m(x, z)) {
            if self.m(x, s) != r {
                return false;
            }
        }
        if let Some(r) = self.a(self.m(y, x), self.m(z, x)) {
            if self.m(s, x) != r {
                return false;
            }
        }
        true
    }

    /// Checks every triple that reads the unordered cell `{i, j}`.
    fn cell_ok(&self, i: usize, j: usize) -> bool {
        let n = self.n;
        for (p, q) in [(i, j), (j, i)] {
            for t in 0..n {
                if !self.assoc_ok(p, q, t) || !self.assoc_ok(t, p, q) || !self.distrib_ok(t, p, q) {
                    return false;
                }
            }
            for x in 0..n {
                for y in 0..n {
                    if self.a(x, y) == Some(p) && !self.assoc_ok(x, y, q) {
                        return false;
                    }
                    if self.a(x, y) == Some(q) && !self.assoc_ok(p, x, y) {
                        return false;
                    }
                }
            }
        }
        // Distributivity triples whose right-hand side sums {i, j}.
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let left = (self.m(x, y), self.m(x, z));
                    let right = (self.m(y, x), self.m(z, x));
                    let hits = |(u, v): (usize, usize)| (u == i && v == j) || (u == j && v == i);
                    if (hits(left) || hits(right)) && !self.distrib_ok(x, y, z) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn descend(&mut self, k: usize) {
        let n = self.n;
        if k == self.todo.len() {
            self.stats.labelled_semirings += 1;
            let add = OpTable::from_bytes(n, self.add[..n * n].to_vec());
            let mul = OpTable::from_bytes(n, self.mul[..n * n].to_vec());
            let s = FiniteSemiring::from_tables_unchecked(add, mul);
            self.found
                .insert(canonical_form(&s).expect("order within canonical bound"));
            return;
        }
        let (i, j) = self.todo[k];
        for v in 0..n as u8 {
            self.stats.add_nodes += 1;
            self.add[i * n + j] = v;
            self.add[j * n + i] = v;
            if self.cell_ok(i, j) {
                self.descend(k + 1);
            } else {
                self.stats.prunes += 1;
            }
        }
        self.add[i * n + j] = UNSET;
        self.add[j * n + i] = UNSET;
    }
}

/// All semilattices of order `n` up to isomorphism, sorted by join table.
pub fn enumerate_semilattices(n: usize) -> Result<Vec<SemilatticeTable>> {
    if n == 0 {
        return Err(Error::EmptyTable);
    }
    if n > MAX_SEMILATTICE_ORDER {
        return Err(Error::OrderTooLarge {
            order: n,
            bound: MAX_SEMILATTICE_ORDER,
        });
    }
    let constraints = ConstraintSet {
        mult_idempotent: true,
        commutative_mul: true,
        ..Default::default()
    };
    let mut search = SemilatticeSearch {
        inner: MulSearch::new(n, constraints),
        found: BTreeSet::new(),
    };
    search.descend(0);
    Ok(search
        .found
        .into_iter()
        .map(SemilatticeTable::from_table_unchecked)
        .collect())
}

/// Same cell search as the multiplication stage, but canonicalizing each
/// leaf on the fly; order 6 has too many labelled tables to buffer.
struct SemilatticeSearch {
    inner: MulSearch,
    found: BTreeSet<OpTable>,
}

impl SemilatticeSearch {
    fn descend(&mut self, k: usize) {
        let s = &mut self.inner;
        let n = s.n;
        if k == s.todo.len() {
            let t = OpTable::from_bytes(n, s.cells[..n * n].to_vec());
            let (mut canon, _) = canonical_labelling(&[&t]);
            self.found.insert(canon.pop().expect("one table"));
            return;
        }
        let (i, j) = s.todo[k];
        for v in 0..n as u8 {
            let s = &mut self.inner;
            s.cells[i * n + j] = v;
            s.cells[j * n + i] = v;
            if s.cell_ok(i, j) && s.cell_ok(j, i) {
                self.descend(k + 1);
            }
        }
        let s = &mut self.inner;
        s.cells[i * n + j] = UNSET;
        s.cells[j * n + i] = UNSET;
    }
}

/// Writes one table file per class (named by digest), `manifest.txt` with
/// `key=value` lines and `manifest.json`.
pub fn export(result: &EnumerationResult, dir: &Path, mode: &str) -> Result<()> {
    fs::create_dir_all(dir)?;
    let mut files = Vec::new();
    for c in &result.classes {
        let name = format!("{}.txt", c.digest_hex());
        fs::write(dir.join(&name), c.to_text())?;
        files.push(name);
    }
    fs::write(dir.join("manifest.txt"), manifest_text(result, mode))?;
    let doc = Manifest {
        order: result.order,
        constraints: result.constraints,
        active_constraints: result
            .constraints
            .active_flags()
            .iter()
            .map(|s| s.to_string())
            .collect(),
        class_count: result.classes.len(),
        structural_classes: result.structural_classes,
        filter_counts: result.filter_counts.clone(),
        nodes_visited: result.stats.nodes_visited(),
        stats: result.stats.clone(),
        wall_ms: result.stats.wall_ms,
        mode: mode.to_string(),
        files,
    };
    let json = serde_json::to_string_pretty(&doc).map_err(|e| Error::Io(e.to_string()))?;
    fs::write(dir.join("manifest.json"), json + "\n")?;
    Ok(())
}

#[derive(Debug, Serialize)]
struct Manifest {
    order: usize,
    constraints: ConstraintSet,
    active_constraints: Vec<String>,
    class_count: usize,
    structural_classes: usize,
    filter_counts: Vec<FilterCount>,
    nodes_visited: u64,
    stats: SearchStats,
    wall_ms: u64,
    mode: String,
    files: Vec<String>,
}

pub fn manifest_text(result: &EnumerationResult, mode: &str) -> String {
    let mut out = String::new();
    let flags = result.constraints.active_flags();
    let flags = if flags.is_empty() {
        "none".to_string()
    } else {
        flags.join(",")
    };
    let _ = writeln!(out, "order={}", result.order);
    let _ = writeln!(out, "constraints={flags}");
    let _ = writeln!(out, "class_count={}", result.classes.len());
    let _ = writeln!(out, "nodes_visited={}", result.stats.nodes_visited());
    let _ = writeln!(out, "wall_ms={}", result.stats.wall_ms);
    let _ = writeln!(out, "mode={mode}");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bounds() {
        assert!(matches!(
            enumerate(5, ConstraintSet::mult_idempotent()),
            Err(Error::OrderTooLarge { bound: 4, .. })
        ));
        assert!(matches!(
            enumerate(6, ConstraintSet::bi_idempotent()),
            Err(Error::OrderTooLarge { bound: 5, .. })
        ));
        assert!(matches!(
            enumerate_semilattices(7),
            Err(Error::OrderTooLarge { .. })
        ));
        assert!(enumerate(0, ConstraintSet::default()).is_err());
    }

    #[test]
    fn order_one() {
        assert_eq!(
            enumerate(1, ConstraintSet::default())
                .unwrap()
                .classes
                .len(),
            1
        );
        assert_eq!(enumerate_semilattices(1).unwrap().len(), 1);
    }

    #[test]
    fn semilattice_two() {
        let l = enumerate_semilattices(2).unwrap();
        assert_eq!(l.len(), 1);
    }

    #[test]
    fn orbit_minimality() {
        let perms = permutations(2);
        let mut m = [UNSET; MAX_N * MAX_N];
        // x·y = x on two elements is minimal; x·y = y is not comparable to it
        // under relabelling, so both are minimal in their own orbits.
        m[..4].copy_from_slice(&[0, 0, 1, 1]);
        assert!(is_orbit_minimal(&m, 2, &perms));
        // Constant 1 relabels to constant 0.
        m[..4].copy_from_slice(&[1, 1, 1, 1]);
        assert!(!is_orbit_minimal(&m, 2, &perms));
    }

    #[test]
    fn manifest_lines() {
        let r = enumerate(2, ConstraintSet::mult_idempotent()).unwrap();
        let text = manifest_text(&r, "full");
        let keys: Vec<&str> = text.lines().map(|l| l.split('=').next().unwrap()).collect();
        assert_eq!(
            keys,
            vec![
                "order",
                "constraints",
                "class_count",
                "nodes_visited",
                "wall_ms",
                "mode"
            ]
        );
        assert!(text.contains("class_count=6\n"));
    }
}
