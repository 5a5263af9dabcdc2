//! Relabelling, canonical forms and isomorphism tests.
//!
//! The canonical form of a semiring is the lexicographically smallest pair
//! `(add, mul)` over all relabellings, comparing the addition table first and
//! both tables row-major. It is found by exhaustive search over permutations
//! with a prefix prune on the first row of the addition table.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tables::{opposite, FiniteSemiring, OpTable};

/// Largest order accepted by [`canonical_form`].
pub const MAX_CANONICAL_ORDER: usize = 8;

/// Applies `perm` (old element → new element) to a table.
pub fn relabel_table(t: &OpTable, perm: &[usize]) -> OpTable {
    let n = t.order();
    let mut inv = vec![0; n];
    for (x, &p) in perm.iter().enumerate() {
        inv[p] = x;
    }
    let cells = (0..n * n)
        .map(|k| perm[t.get(inv[k / n], inv[k % n])] as u8)
        .collect();
    OpTable::from_bytes(n, cells)
}

fn check_permutation(perm: &[usize], n: usize) -> Result<()> {
    let mut seen = vec![false; n];
    if perm.len() != n
        || perm
            .iter()
            .any(|&p| p >= n || std::mem::replace(&mut seen[p], true))
    {
        return Err(Error::InvalidPermutation(perm.to_vec()));
    }
    Ok(())
}

/// The isomorphic copy of `s` in which element `x` becomes `perm[x]`.
pub fn relabel(s: &FiniteSemiring, perm: &[usize]) -> Result<FiniteSemiring> {
    check_permutation(perm, s.order())?;
    Ok(FiniteSemiring::from_tables_unchecked(
        relabel_table(s.add_table(), perm),
        relabel_table(s.mul_table(), perm),
    ))
}

/// Minimizes the concatenation of `tables` (row-major, in the given order)
/// over all relabellings. Returns the minimal tables and the permutation
/// (original → canonical) that first reaches them in lexicographic order of
/// permutations.
pub(crate) fn canonical_labelling(tables: &[&OpTable]) -> (Vec<OpTable>, Vec<usize>) {
    let n = tables[0].order();
    let mut search = CanonSearch {
        tables,
        n,
        sigma: vec![0; n],
        pi: vec![usize::MAX; n],
        best: None,
        best_pi: Vec::new(),
        scratch: Vec::with_capacity(tables.len() * n * n),
    };
    search.descend(0);
    let best = search.best.expect("at least one permutation");
    let out = best
        .chunks(n * n)
        .map(|c| OpTable::from_bytes(n, c.to_vec()))
        .collect();
    (out, search.best_pi)
}

struct CanonSearch<'a> {
    tables: &'a [&'a OpTable],
    n: usize,
    /// canonical position → original element
    sigma: Vec<usize>,
    /// original element → canonical position, `usize::MAX` if unassigned
    pi: Vec<usize>,
    best: Option<Vec<u8>>,
    best_pi: Vec<usize>,
    scratch: Vec<u8>,
}

impl CanonSearch<'_> {
    fn descend(&mut self, depth: usize) {
        if depth == self.n {
            self.leaf();
            return;
        }
        for x in 0..self.n {
            if self.pi[x] != usize::MAX {
                continue;
            }
            self.sigma[depth] = x;
            self.pi[x] = depth;
            if !self.dominated(depth + 1) {
                self.descend(depth + 1);
            }
            self.pi[x] = usize::MAX;
        }
    }

    /// True when every completion of the first `assigned` positions is
    /// strictly worse than the current best. Only row 0 of the first table is
    /// inspected: it is the only determined prefix of the row-major order.
    fn dominated(&self, assigned: usize) -> bool {
        let Some(best) = &self.best else { return false };
        let t = self.tables[0];
        let r = self.sigma[0];
        for col in 0..assigned {
            let v = self.pi[t.get(r, self.sigma[col])];
            let b = best[col] as usize;
            if v == usize::MAX {
                // Unassigned images land at positions >= assigned.
                return b < assigned;
            }
            match v.cmp(&b) {
                Ordering::Less => return false,
                Ordering::Greater => return true,
                Ordering::Equal => {}
            }
        }
        false
    }

    fn leaf(&mut self) {
        let n = self.n;
        self.scratch.clear();
        for t in self.tables {
            for i in 0..n {
                for j in 0..n {
                    self.scratch
                        .push(self.pi[t.get(self.sigma[i], self.sigma[j])] as u8);
                }
            }
        }
        let better = match &self.best {
            None => true,
            Some(b) => self.scratch < *b,
        };
        if better {
            self.best = Some(self.scratch.clone());
            self.best_pi = self.pi.clone();
        }
    }
}

/// Isomorphism-class key of a semiring.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CanonicalForm {
    pub order: usize,
    pub canonical_add: OpTable,
    pub canonical_mul: OpTable,
    /// Original element → canonical element.
    pub witness_permutation: Vec<usize>,
}

impl CanonicalForm {
    pub fn semiring(&self) -> FiniteSemiring {
        FiniteSemiring::from_tables_unchecked(
            self.canonical_add.clone(),
            self.canonical_mul.clone(),
        )
    }

    pub fn to_text(&self) -> String {
        self.semiring().to_text()
    }

    /// FNV-1a (64-bit) over the text serialization of the canonical tables.
    pub fn digest(&self) -> u64 {
        fnv1a64(self.to_text().as_bytes())
    }

    pub fn digest_hex(&self) -> String {
        format!("{:016x}", self.digest())
    }

    fn key(&self) -> (usize, &OpTable, &OpTable) {
        (self.order, &self.canonical_add, &self.canonical_mul)
    }
}

impl PartialEq for CanonicalForm {
    fn eq(&self, other: &Self) -> bool {
        self.key() == other.key()
    }
}

impl Eq for CanonicalForm {}

impl PartialOrd for CanonicalForm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CanonicalForm {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl std::hash::Hash for CanonicalForm {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.key().hash(state);
    }
}

/// 64-bit FNV-1a: offset basis `0xcbf29ce484222325`, prime `0x100000001b3`.
pub fn fnv1a64(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

pub fn canonical_form(s: &FiniteSemiring) -> Result<CanonicalForm> {
    let n = s.order();
    if n > MAX_CANONICAL_ORDER {
        return Err(Error::OrderTooLarge {
            order: n,
            bound: MAX_CANONICAL_ORDER,
        });
    }
    let (mut tables, perm) = canonical_labelling(&[s.add_table(), s.mul_table()]);
    let canonical_mul = tables.pop().expect("two tables");
    let canonical_add = tables.pop().expect("two tables");
    Ok(CanonicalForm {
        order: n,
        canonical_add,
        canonical_mul,
        witness_permutation: perm,
    })
}

/// `Some(φ)` with `φ: S → T` an isomorphism (`φ[x]` is the image of `x`).
pub fn is_isomorphic(s: &FiniteSemiring, t: &FiniteSemiring) -> Option<Vec<usize>> {
    if s.order() != t.order() {
        return None;
    }
    if s.order() > MAX_CANONICAL_ORDER {
        return find_isomorphism(s, t);
    }
    let cs = canonical_form(s).expect("order checked");
    let ct = canonical_form(t).expect("order checked");
    if cs != ct {
        return None;
    }
    let mut t_inv = vec![0; t.order()];
    for (x, &c) in ct.witness_permutation.iter().enumerate() {
        t_inv[c] = x;
    }
    Some(cs.witness_permutation.iter().map(|&c| t_inv[c]).collect())
}

/// `S^op ≅ T`.
pub fn is_anti_isomorphic(s: &FiniteSemiring, t: &FiniteSemiring) -> bool {
    is_isomorphic(&opposite(s), t).is_some()
}

/// Backtracking search for an isomorphism, for orders beyond the canonical
/// form bound.
fn find_isomorphism(s: &FiniteSemiring, t: &FiniteSemiring) -> Option<Vec<usize>> {
    fn consistent(s: &FiniteSemiring, t: &FiniteSemiring, phi: &[usize], k: usize) -> bool {
        let assigned = |x: usize| x <= k;
        for x in 0..=k {
            for y in 0..=k {
                if x != k && y != k {
                    continue;
                }
                for (a, b) in [
                    (s.add(x, y), t.add(phi[x], phi[y])),
                    (s.mul(x, y), t.mul(phi[x], phi[y])),
                ] {
                    if assigned(a) && phi[a] != b {
                        return false;
                    }
                }
            }
        }
        true
    }
    fn rec(
        s: &FiniteSemiring,
        t: &FiniteSemiring,
        phi: &mut Vec<usize>,
        used: &mut Vec<bool>,
        k: usize,
    ) -> bool {
        let n = s.order();
        if k == n {
            return s.elements().all(|x| {
                s.elements().all(|y| {
                    t.add(phi[x], phi[y]) == phi[s.add(x, y)]
                        && t.mul(phi[x], phi[y]) == phi[s.mul(x, y)]
                })
            });
        }
        for v in 0..n {
            if used[v] {
                continue;
            }
            phi[k] = v;
            used[v] = true;
            if consistent(s, t, phi, k) && rec(s, t, phi, used, k + 1) {
                return true;
            }
            used[v] = false;
        }
        false
    }
    let n = s.order();
    let mut phi = vec![0; n];
    let mut used = vec![false; n];
    rec(s, t, &mut phi, &mut used, 0).then_some(phi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{catalog_semiring, end_semiring, CatalogName, SemilatticeTable};

    fn cat(name: CatalogName) -> FiniteSemiring {
        catalog_semiring(name)
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for pos in 0..n {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn canonical_is_orbit_invariant() {
        for name in CatalogName::semirings() {
            let s = cat(name);
            let c = canonical_form(&s).unwrap();
            assert_eq!(relabel(&s, &c.witness_permutation).unwrap(), c.semiring());
            for perm in permutations(s.order()) {
                let r = relabel(&s, &perm).unwrap();
                assert_eq!(canonical_form(&r).unwrap(), c, "{name} under {perm:?}");
            }
        }
    }

    #[test]
    fn canonical_is_minimum_over_orbit() {
        let p = cat(CatalogName::P);
        let c = canonical_form(&p).unwrap();
        let min = permutations(5)
            .iter()
            .map(|perm| relabel(&p, perm).unwrap())
            .min()
            .unwrap();
        assert_eq!(c.semiring(), min);
    }

    #[test]
    fn catalog_forms_distinct() {
        let forms: Vec<_> = (1..=8)
            .map(|k| canonical_form(&cat(CatalogName::S(k))).unwrap())
            .collect();
        for i in 0..8 {
            for j in i + 1..8 {
                assert_ne!(forms[i], forms[j], "S{} vs S{}", i + 1, j + 1);
            }
        }
    }

    #[test]
    fn isomorphism_examples() {
        let s7 = cat(CatalogName::S(7));
        let s8 = cat(CatalogName::S(8));
        let phi = is_isomorphic(&s7, &s7).unwrap();
        assert_eq!(relabel(&s7, &phi).unwrap(), s7);
        assert!(is_isomorphic(&s7, &s8).is_none());
        let l2 = SemilatticeTable::chain(2);
        let (end, _) = end_semiring(&l2).unwrap();
        let phi = is_isomorphic(&end, &s7).unwrap();
        assert_eq!(relabel(&end, &phi).unwrap(), s7);
    }

    #[test]
    fn anti_isomorphism_examples() {
        assert!(is_anti_isomorphic(
            &cat(CatalogName::S(5)),
            &cat(CatalogName::S(6))
        ));
        assert!(is_anti_isomorphic(
            &cat(CatalogName::S(7)),
            &cat(CatalogName::S(8))
        ));
        let p = cat(CatalogName::P);
        assert!(is_anti_isomorphic(&p, &p));
    }

    #[test]
    fn backtracking_agrees_with_canonical() {
        let p = cat(CatalogName::P);
        let perm = vec![3, 0, 4, 1, 2];
        let q = relabel(&p, &perm).unwrap();
        let phi = find_isomorphism(&p, &q).unwrap();
        assert_eq!(relabel(&p, &phi).unwrap(), q);
        assert!(find_isomorphism(&cat(CatalogName::S(7)), &cat(CatalogName::S(8))).is_none());
    }

    #[test]
    fn digest_is_fnv1a() {
        assert_eq!(fnv1a64(b""), 0xcbf29ce484222325);
        assert_eq!(fnv1a64(b"a"), 0xaf63dc4c8601ec8c);
    }

    #[test]
    fn rejects_bad_permutation() {
        assert!(relabel(&cat(CatalogName::S(7)), &[0, 0, 1]).is_err());
        assert!(relabel(&cat(CatalogName::S(7)), &[0, 1]).is_err());
    }
}
