//! Named semirings and the constructions that produce new ones: endomorphism
//! semirings of finite semilattices, adjunction of a zero or a bi-absorbing
//! element, and projection semirings.
//!
//! Catalog element orders:
//!
//! | name  | indices                         |
//! |-------|---------------------------------|
//! | S1–S4 | `w = 0`, `a = 1`                |
//! | S5,S6 | `a = 0`, `w = 1`                |
//! | S7,S8 | `a = 0`, `b = 1`, `w = 2`       |
//! | P     | `0, 1, a, b, c` = `0, 1, 2, 3, 4` |
//! | L2, L_chain(k) | `0 < 1 < … < k-1`     |

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tables::{check_axioms, FiniteSemiring, OpTable, MAX_TABLE_ORDER};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemilatticeTable {
    join: OpTable,
}

impl SemilatticeTable {
    pub fn new(join: OpTable) -> Result<Self> {
        if !join.is_idempotent() {
            return Err(Error::NotASemilattice("join is not idempotent".into()));
        }
        if !join.is_commutative() {
            return Err(Error::NotASemilattice("join is not commutative".into()));
        }
        if !join.is_associative() {
            return Err(Error::NotASemilattice("join is not associative".into()));
        }
        Ok(SemilatticeTable { join })
    }

    pub(crate) fn from_table_unchecked(join: OpTable) -> Self {
        SemilatticeTable { join }
    }

    /// The chain `0 < 1 < … < k-1` with join = max.
    pub fn chain(k: usize) -> Self {
        SemilatticeTable {
            join: OpTable::from_fn(k, |x, y| x.max(y)).expect("valid chain"),
        }
    }

    pub fn order(&self) -> usize {
        self.join.order()
    }

    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join.get(x, y)
    }

    pub fn join_table(&self) -> &OpTable {
        &self.join
    }

    /// `x ≤ y ⇔ x ∨ y = y`.
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.join(x, y) == y
    }

    pub fn greatest(&self) -> Option<usize> {
        (0..self.order()).find(|&g| (0..self.order()).all(|x| self.leq(x, g)))
    }

    pub fn least(&self) -> Option<usize> {
        (0..self.order()).find(|&z| (0..self.order()).all(|x| self.leq(z, x)))
    }
}

/// A join-preserving self-map, stored by images.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Endomorphism {
    pub image: Vec<usize>,
}

impl Endomorphism {
    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    pub fn preserves_join(&self, l: &SemilatticeTable) -> bool {
        let n = l.order();
        self.image.len() == n
            && (0..n).all(|x| {
                (0..n).all(|y| self.image[l.join(x, y)] == l.join(self.image[x], self.image[y]))
            })
    }
}

/// Every join-preserving self-map of `l`, in lexicographic order of images.
pub fn endomorphisms(l: &SemilatticeTable) -> Vec<Endomorphism> {
    fn rec(l: &SemilatticeTable, image: &mut Vec<usize>, out: &mut Vec<Endomorphism>) {
        let n = l.order();
        let k = image.len();
        if k == n {
            out.push(Endomorphism {
                image: image.clone(),
            });
            return;
        }
        for v in 0..n {
            image.push(v);
            // Check every join whose three arguments are now mapped.
            let ok = (0..=k).all(|x| {
                (0..=k).all(|y| {
                    let j = l.join(x, y);
                    (x != k && y != k && j != k) || j > k || image[j] == l.join(image[x], image[y])
                })
            });
            if ok {
                rec(l, image, out);
            }
            image.pop();
        }
    }
    let mut out = Vec::new();
    rec(l, &mut Vec::with_capacity(l.order()), &mut out);
    out
}

fn semiring_of_maps(maps: &[Endomorphism], l: &SemilatticeTable) -> Result<FiniteSemiring> {
    let m = maps.len();
    if m > MAX_TABLE_ORDER {
        return Err(Error::OrderTooLarge {
            order: m,
            bound: MAX_TABLE_ORDER,
        });
    }
    let index = |img: Vec<usize>| {
        maps.binary_search_by(|e| e.image.cmp(&img))
            .expect("endomorphisms are closed under both operations")
    };
    let n = l.order();
    let add = OpTable::from_fn(m, |i, j| {
        index(
            (0..n)
                .map(|x| l.join(maps[i].apply(x), maps[j].apply(x)))
                .collect(),
        )
    })?;
    let mul = OpTable::from_fn(m, |i, j| {
        index((0..n).map(|x| maps[i].apply(maps[j].apply(x))).collect())
    })?;
    check_axioms(add, mul)
}

/// `End(L)` with pointwise join and composition `(φψ)(x) = φ(ψ(x))`;
/// element `k` is the `k`-th endomorphism in lexicographic image order.
pub fn end_semiring(l: &SemilatticeTable) -> Result<(FiniteSemiring, Vec<Endomorphism>)> {
    l.greatest().ok_or(Error::NoGreatestElement)?;
    let maps = endomorphisms(l);
    let s = semiring_of_maps(&maps, l)?;
    Ok((s, maps))
}

/// `End₀(L)`: the endomorphisms fixing the least element.
pub fn end0_semiring(l: &SemilatticeTable) -> Result<(FiniteSemiring, Vec<Endomorphism>)> {
    let zero = l.least().ok_or(Error::NoLeastElement)?;
    let maps: Vec<Endomorphism> = endomorphisms(l)
        .into_iter()
        .filter(|e| e.apply(zero) == zero)
        .collect();
    let s = semiring_of_maps(&maps, l)?;
    Ok((s, maps))
}

/// `x ↦ 0` if `x ≤ a`, else `b`.
pub fn step_endomorphism(l: &SemilatticeTable, a: usize, b: usize) -> Result<Endomorphism> {
    let n = l.order();
    for e in [a, b] {
        if e >= n {
            return Err(Error::ElementOutOfRange {
                element: e,
                order: n,
            });
        }
    }
    let zero = l.least().ok_or(Error::NoLeastElement)?;
    let e = Endomorphism {
        image: (0..n).map(|x| if l.leq(x, a) { zero } else { b }).collect(),
    };
    if !e.preserves_join(l) {
        return Err(Error::NotAnEndomorphism { image: e.image });
    }
    Ok(e)
}

fn extend_by_one(
    s: &FiniteSemiring,
    add_new: impl Fn(usize) -> usize,
    z_plus_z: usize,
) -> Result<FiniteSemiring> {
    let n = s.order();
    let z = n;
    let add = OpTable::from_fn(n + 1, |x, y| match (x == z, y == z) {
        (false, false) => s.add(x, y),
        (true, true) => z_plus_z,
        (true, false) => add_new(y),
        (false, true) => add_new(x),
    })?;
    let mul = OpTable::from_fn(n + 1, |x, y| if x == z || y == z { z } else { s.mul(x, y) })?;
    check_axioms(add, mul)
}

/// Adds a zero `z` (index `n`) to a semiring with a bi-absorbing element.
pub fn adjoin_zero(s: &FiniteSemiring) -> Result<FiniteSemiring> {
    s.bi_absorbing().ok_or(Error::NoBiAbsorbing)?;
    extend_by_one(s, |x| x, s.order())
}

/// Adds a bi-absorbing element `z` (index `n`) to a semiring with a zero.
pub fn adjoin_biabsorber(s: &FiniteSemiring) -> Result<FiniteSemiring> {
    s.zero().ok_or(Error::NoZero)?;
    let z = s.order();
    extend_by_one(s, |_| z, z)
}

/// Alternates [`adjoin_zero`] and [`adjoin_biabsorber`] starting from `start`
/// until `max_order` is reached. The first element of the result is `start`.
pub fn zigzag(start: &FiniteSemiring, max_order: usize) -> Result<Vec<FiniteSemiring>> {
    let mut out = vec![start.clone()];
    while out.last().expect("non-empty").order() < max_order {
        let cur = out.last().expect("non-empty");
        let next = if cur.bi_absorbing().is_some() {
            adjoin_zero(cur)?
        } else if cur.zero().is_some() {
            adjoin_biabsorber(cur)?
        } else {
            return Err(Error::NoAbsorbingElement);
        };
        out.push(next);
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ProjectionSide {
    /// `ab = a`
    Left,
    /// `ab = b`
    Right,
}

/// Addition is the join of `l`, multiplication a projection.
pub fn projection_semiring(l: &SemilatticeTable, side: ProjectionSide) -> Result<FiniteSemiring> {
    let n = l.order();
    let mul = match side {
        ProjectionSide::Left => OpTable::from_fn(n, |x, _| x)?,
        ProjectionSide::Right => OpTable::from_fn(n, |_, y| y)?,
    };
    check_axioms(l.join_table().clone(), mul)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CatalogName {
    /// `S1` through `S8`.
    S(u8),
    P,
    L2,
    Chain(usize),
}

impl CatalogName {
    pub fn semirings() -> Vec<CatalogName> {
        (1..=8)
            .map(CatalogName::S)
            .chain([CatalogName::P])
            .collect()
    }

    pub fn all() -> Vec<CatalogName> {
        let mut v = Self::semirings();
        v.push(CatalogName::L2);
        v
    }
}

impl fmt::Display for CatalogName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogName::S(k) => write!(f, "S{k}"),
            CatalogName::P => f.write_str("P"),
            CatalogName::L2 => f.write_str("L2"),
            CatalogName::Chain(k) => write!(f, "L_chain({k})"),
        }
    }
}

impl FromStr for CatalogName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownName(s.to_string());
        match s {
            "P" => return Ok(CatalogName::P),
            "L2" => return Ok(CatalogName::L2),
            _ => {}
        }
        if let Some(k) = s.strip_prefix('S') {
            return match k.parse::<u8>() {
                Ok(k @ 1..=8) => Ok(CatalogName::S(k)),
                _ => Err(unknown()),
            };
        }
        if let Some(k) = s.strip_prefix("L_chain(").and_then(|r| r.strip_suffix(')')) {
            return match k.parse::<usize>() {
                Ok(k) if (1..=MAX_TABLE_ORDER).contains(&k) => Ok(CatalogName::Chain(k)),
                _ => Err(unknown()),
            };
        }
        Err(unknown())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum CatalogValue {
    Semiring(FiniteSemiring),
    Semilattice(SemilatticeTable),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub name: CatalogName,
    pub value: CatalogValue,
    /// Display name of each element index.
    pub element_names: Vec<String>,
}

impl CatalogEntry {
    pub fn semiring(&self) -> Option<&FiniteSemiring> {
        match &self.value {
            CatalogValue::Semiring(s) => Some(s),
            CatalogValue::Semilattice(_) => None,
        }
    }
}

fn rows<const N: usize>(t: [[usize; N]; N]) -> Vec<Vec<usize>> {
    t.iter().map(|r| r.to_vec()).collect()
}

fn names(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

pub fn catalog(name: CatalogName) -> CatalogEntry {
    // Multiplication shared by S1–S4: everything is w except a·a = a.
    let wa_mul = rows([[0, 0], [0, 1]]);
    let semiring = |add: Vec<Vec<usize>>, mul: Vec<Vec<usize>>| {
        CatalogValue::Semiring(
            FiniteSemiring::from_rows(&add, &mul).expect("catalog tables satisfy the axioms"),
        )
    };
    let (value, element_names) = match name {
        CatalogName::S(1) => (semiring(rows([[0, 1], [1, 0]]), wa_mul), names(&["w", "a"])),
        CatalogName::S(2) => (semiring(rows([[0, 1], [1, 1]]), wa_mul), names(&["w", "a"])),
        CatalogName::S(3) => (semiring(rows([[0, 0], [0, 1]]), wa_mul), names(&["w", "a"])),
        CatalogName::S(4) => (semiring(rows([[0, 0], [0, 0]]), wa_mul), names(&["w", "a"])),
        CatalogName::S(5) => (
            semiring(rows([[0, 1], [1, 1]]), rows([[0, 0], [1, 1]])),
            names(&["a", "w"]),
        ),
        CatalogName::S(6) => (
            semiring(rows([[0, 1], [1, 1]]), rows([[0, 1], [0, 1]])),
            names(&["a", "w"]),
        ),
        CatalogName::S(7) => (
            semiring(
                rows([[0, 1, 2], [1, 1, 2], [2, 2, 2]]),
                rows([[0, 0, 0], [0, 1, 2], [2, 2, 2]]),
            ),
            names(&["a", "b", "w"]),
        ),
        CatalogName::S(8) => (
            semiring(
                rows([[0, 1, 2], [1, 1, 2], [2, 2, 2]]),
                rows([[0, 0, 2], [0, 1, 2], [0, 2, 2]]),
            ),
            names(&["a", "b", "w"]),
        ),
        CatalogName::S(k) => unreachable!("catalog index S{k} out of range"),
        CatalogName::P => (
            semiring(
                rows([
                    [0, 1, 2, 3, 4],
                    [1, 1, 4, 4, 4],
                    [2, 4, 2, 4, 4],
                    [3, 4, 4, 3, 4],
                    [4, 4, 4, 4, 4],
                ]),
                rows([
                    [0, 0, 0, 0, 0],
                    [0, 1, 2, 3, 4],
                    [0, 2, 2, 0, 2],
                    [0, 3, 0, 3, 3],
                    [0, 4, 2, 3, 4],
                ]),
            ),
            names(&["0", "1", "a", "b", "c"]),
        ),
        CatalogName::L2 => (
            CatalogValue::Semilattice(SemilatticeTable::chain(2)),
            names(&["0", "1"]),
        ),
        CatalogName::Chain(k) => (
            CatalogValue::Semilattice(SemilatticeTable::chain(k)),
            (0..k).map(|i| i.to_string()).collect(),
        ),
    };
    CatalogEntry {
        name,
        value,
        element_names,
    }
}

pub fn catalog_by_name(name: &str) -> Result<CatalogEntry> {
    Ok(catalog(name.parse()?))
}

/// The semiring of a semiring-valued catalog entry.
///
/// # Panics
/// When `name` denotes a semilattice.
pub fn catalog_semiring(name: CatalogName) -> FiniteSemiring {
    match catalog(name).value {
        CatalogValue::Semiring(s) => s,
        CatalogValue::Semilattice(_) => panic!("{name} is a semilattice"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::congruences::is_congruence_simple;
    use crate::ideals::{is_bi_ideal_simple, is_ideal_simple};
    use crate::morphisms::is_isomorphic;
    use crate::tables::{opposite, predicates};

    /// All self-maps of `0..n`, filtered by join preservation.
    fn oracle_endomorphisms(l: &SemilatticeTable) -> Vec<Vec<usize>> {
        let n = l.order();
        let total = n.pow(n as u32);
        (0..total)
            .map(|mut code| {
                (0..n)
                    .map(|_| {
                        let d = code % n;
                        code /= n;
                        d
                    })
                    .collect::<Vec<usize>>()
            })
            .filter(|f| (0..n).all(|x| (0..n).all(|y| f[l.join(x, y)] == l.join(f[x], f[y]))))
            .collect()
    }

    #[test]
    fn catalog_examples() {
        let s1 = catalog_semiring(CatalogName::S(1));
        let z2 = FiniteSemiring::from_rows(&[vec![0, 1], vec![1, 0]], &[vec![0, 0], vec![0, 1]])
            .unwrap();
        assert!(is_isomorphic(&s1, &z2).is_some());
        assert!(predicates(&s1).boolean_ring.holds);

        let p = catalog(CatalogName::P);
        assert_eq!(p.semiring().unwrap().order(), 5);
        assert_eq!(p.semiring().unwrap().zero(), Some(0));

        let s4 = catalog_semiring(CatalogName::S(4));
        assert!(s4
            .elements()
            .all(|x| s4.elements().all(|y| s4.add(x, y) == 0)));
    }

    #[test]
    fn catalog_names_round_trip() {
        for name in CatalogName::all() {
            assert_eq!(name.to_string().parse::<CatalogName>().unwrap(), name);
        }
        assert_eq!(
            "L_chain(3)".parse::<CatalogName>().unwrap(),
            CatalogName::Chain(3)
        );
        assert!(matches!(
            "S9".parse::<CatalogName>(),
            Err(Error::UnknownName(_))
        ));
        assert!(matches!(
            "Q".parse::<CatalogName>(),
            Err(Error::UnknownName(_))
        ));
    }

    #[test]
    fn s8_is_opposite_of_s7() {
        assert_eq!(
            opposite(&catalog_semiring(CatalogName::S(7))),
            catalog_semiring(CatalogName::S(8))
        );
    }

    #[test]
    fn end_of_two_chain_is_s7() {
        let (end, maps) = end_semiring(&SemilatticeTable::chain(2)).unwrap();
        assert_eq!(end.order(), 3);
        assert_eq!(
            maps.iter().map(|m| m.image.clone()).collect::<Vec<_>>(),
            vec![vec![0, 0], vec![0, 1], vec![1, 1]]
        );
        assert_eq!(end, catalog_semiring(CatalogName::S(7)));
    }

    #[test]
    fn end_orders_match_oracle() {
        let one = SemilatticeTable::chain(1);
        assert_eq!(end_semiring(&one).unwrap().0.order(), 1);
        assert_eq!(end0_semiring(&one).unwrap().0.order(), 1);

        let c3 = SemilatticeTable::chain(3);
        let oracle = oracle_endomorphisms(&c3);
        assert_eq!(oracle.len(), 10);
        assert_eq!(end_semiring(&c3).unwrap().0.order(), oracle.len());
        let fixing = oracle.iter().filter(|f| f[0] == 0).count();
        assert_eq!(fixing, 6);
        assert_eq!(end0_semiring(&c3).unwrap().0.order(), fixing);

        assert_eq!(
            end0_semiring(&SemilatticeTable::chain(2))
                .unwrap()
                .0
                .order(),
            2
        );
    }

    #[test]
    fn end_is_closed_on_diamond() {
        // 0 < a, b < 1 with a ∨ b = 1.
        let join = OpTable::from_rows(&[
            vec![0, 1, 2, 3],
            vec![1, 1, 3, 3],
            vec![2, 3, 2, 3],
            vec![3, 3, 3, 3],
        ])
        .unwrap();
        let l = SemilatticeTable::new(join).unwrap();
        let maps = endomorphisms(&l);
        let mut oracle = oracle_endomorphisms(&l);
        oracle.sort();
        assert_eq!(
            maps.iter().map(|m| m.image.clone()).collect::<Vec<_>>(),
            oracle
        );
        let (s, _) = end_semiring(&l).unwrap();
        assert_eq!(s.order(), maps.len());
        for a in 0..4 {
            for b in 0..4 {
                let e = step_endomorphism(&l, a, b).unwrap();
                let (_, fixing) = end0_semiring(&l).unwrap();
                assert!(fixing.contains(&e), "e_{{{a},{b}}}");
            }
        }
    }

    #[test]
    fn no_least_element() {
        // Two incomparable atoms joined by a top, without a bottom.
        let join = OpTable::from_rows(&[vec![0, 2, 2], vec![2, 1, 2], vec![2, 2, 2]]).unwrap();
        let l = SemilatticeTable::new(join).unwrap();
        assert_eq!(end0_semiring(&l).unwrap_err(), Error::NoLeastElement);
        assert_eq!(
            step_endomorphism(&l, 0, 1).unwrap_err(),
            Error::NoLeastElement
        );
        assert!(end_semiring(&l).is_ok());
    }

    #[test]
    fn step_examples() {
        let l2 = SemilatticeTable::chain(2);
        assert_eq!(step_endomorphism(&l2, 0, 1).unwrap().image, vec![0, 1]);
        assert_eq!(step_endomorphism(&l2, 1, 0).unwrap().image, vec![0, 0]);
        assert_eq!(step_endomorphism(&l2, 1, 1).unwrap().image, vec![0, 0]);
        let c3 = SemilatticeTable::chain(3);
        assert_eq!(step_endomorphism(&c3, 1, 2).unwrap().image, vec![0, 0, 2]);
    }

    #[test]
    fn adjoin_examples() {
        let s3 = catalog_semiring(CatalogName::S(3));
        let p = adjoin_zero(&s3).unwrap();
        assert_eq!(p.order(), 3);
        assert_eq!(p.zero(), Some(2));
        assert!(is_bi_ideal_simple(&p).simple);
        let ideal = is_ideal_simple(&p);
        assert!(!ideal.simple);
        assert_eq!(ideal.witness, Some(vec![0, 2]));

        let p4 = adjoin_zero(&catalog_semiring(CatalogName::S(4))).unwrap();
        assert_eq!(p4.order(), 3);
        assert!(is_bi_ideal_simple(&p4).simple);

        let q = adjoin_biabsorber(&catalog_semiring(CatalogName::S(1))).unwrap();
        assert_eq!(q.bi_absorbing(), Some(2));
        let q2 = adjoin_biabsorber(&catalog_semiring(CatalogName::S(2))).unwrap();
        assert!(!is_congruence_simple(&q2));

        let r = adjoin_biabsorber(&p).unwrap();
        assert_eq!(r.order(), 4);
        assert!(predicates(&r).mult_idempotent.holds);
        assert!(is_bi_ideal_simple(&r).simple);

        assert_eq!(
            adjoin_zero(&catalog_semiring(CatalogName::S(1))),
            Err(Error::NoBiAbsorbing)
        );
        assert_eq!(
            adjoin_biabsorber(&catalog_semiring(CatalogName::S(3))),
            Err(Error::NoZero)
        );
    }

    #[test]
    fn zigzag_from_s3() {
        let chain = zigzag(&catalog_semiring(CatalogName::S(3)), 8).unwrap();
        assert_eq!(
            chain.iter().map(|s| s.order()).collect::<Vec<_>>(),
            (2..=8).collect::<Vec<_>>()
        );
        for s in &chain[1..] {
            assert!(s.is_mult_idempotent());
            assert!(is_bi_ideal_simple(s).simple);
            assert!(!is_ideal_simple(s).simple);
            assert!(!is_congruence_simple(s));
        }
    }

    #[test]
    fn projections() {
        let l2 = SemilatticeTable::chain(2);
        let right = projection_semiring(&l2, ProjectionSide::Right).unwrap();
        assert!(is_isomorphic(&right, &catalog_semiring(CatalogName::S(6))).is_some());
        let left = projection_semiring(&l2, ProjectionSide::Left).unwrap();
        assert!(is_isomorphic(&left, &catalog_semiring(CatalogName::S(5))).is_some());

        for k in 2..=5 {
            for side in [ProjectionSide::Left, ProjectionSide::Right] {
                let s = projection_semiring(&SemilatticeTable::chain(k), side).unwrap();
                assert!(is_ideal_simple(&s).simple);
                assert!(predicates(&s).bi_idempotent.holds);
                assert_eq!(is_congruence_simple(&s), k == 2);
            }
        }
    }
}
