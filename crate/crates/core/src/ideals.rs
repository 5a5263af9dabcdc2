//! Ideals, bi-ideals, the `A(S)/B(S)` split and the relation `ρ_S`.
//!
//! An ideal here is closed under `I+I`, `SI` and `IS`; a bi-ideal under
//! `S+I`, `SI` and `IS`. Neither definition requires the other.

use serde::{Deserialize, Serialize};

use crate::congruences::Partition;
use crate::error::{Error, Result};
use crate::tables::FiniteSemiring;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SubsetKind {
    Ideal,
    BiIdeal,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubsetClosure {
    pub members: Vec<bool>,
    pub kind: SubsetKind,
}

impl SubsetClosure {
    pub fn elements(&self) -> Vec<usize> {
        self.members
            .iter()
            .enumerate()
            .filter(|(_, &m)| m)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn len(&self) -> usize {
        self.members.iter().filter(|&&m| m).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_everything(&self) -> bool {
        self.members.iter().all(|&m| m)
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members[x]
    }
}

/// Least ideal or bi-ideal containing `seed`.
pub fn ideal_generated(
    s: &FiniteSemiring,
    seed: &[usize],
    kind: SubsetKind,
) -> Result<SubsetClosure> {
    if seed.is_empty() {
        return Err(Error::EmptySeed);
    }
    let n = s.order();
    let mut members = vec![false; n];
    let mut work = Vec::new();
    for &x in seed {
        if x >= n {
            return Err(Error::ElementOutOfRange {
                element: x,
                order: n,
            });
        }
        if !members[x] {
            members[x] = true;
            work.push(x);
        }
    }
    let push = |y: usize, members: &mut Vec<bool>, work: &mut Vec<usize>| {
        if !members[y] {
            members[y] = true;
            work.push(y);
        }
    };
    while let Some(x) = work.pop() {
        for c in 0..n {
            push(s.mul(c, x), &mut members, &mut work);
            push(s.mul(x, c), &mut members, &mut work);
            match kind {
                SubsetKind::BiIdeal => push(s.add(c, x), &mut members, &mut work),
                SubsetKind::Ideal => {
                    if members[c] {
                        push(s.add(c, x), &mut members, &mut work);
                    }
                }
            }
        }
    }
    Ok(SubsetClosure { members, kind })
}

/// Result of a simplicity scan. `witness` is a proper subset with at least two
/// elements whenever `simple` is false and the order is at least 2.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Simplicity {
    pub simple: bool,
    pub witness: Option<Vec<usize>>,
}

fn simplicity(s: &FiniteSemiring, kind: SubsetKind) -> Simplicity {
    let n = s.order();
    if n < 2 {
        return Simplicity {
            simple: false,
            witness: None,
        };
    }
    for i in 0..n {
        for j in i + 1..n {
            let c = ideal_generated(s, &[i, j], kind).expect("non-empty seed");
            if !c.is_everything() {
                return Simplicity {
                    simple: false,
                    witness: Some(c.elements()),
                };
            }
        }
    }
    Simplicity {
        simple: true,
        witness: None,
    }
}

pub fn is_ideal_simple(s: &FiniteSemiring) -> Simplicity {
    simplicity(s, SubsetKind::Ideal)
}

pub fn is_bi_ideal_simple(s: &FiniteSemiring) -> Simplicity {
    simplicity(s, SubsetKind::BiIdeal)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbDecomposition {
    pub absorbing: usize,
    /// `{a : SaS + S = {w}}`
    pub a: Vec<usize>,
    /// `{a : SaS + S = S}`
    pub b: Vec<usize>,
    /// Elements in neither set; empty under bi-ideal-simplicity.
    pub neither: Vec<usize>,
}

/// `SaS + S` as a membership mask.
pub fn sandwich_plus(s: &FiniteSemiring, a: usize) -> Vec<bool> {
    let n = s.order();
    let mut sas = vec![false; n];
    for x in 0..n {
        let xa = s.mul(x, a);
        for y in 0..n {
            sas[s.mul(xa, y)] = true;
        }
    }
    let mut out = vec![false; n];
    for (v, _) in sas.iter().enumerate().filter(|(_, &m)| m) {
        for t in 0..n {
            out[s.add(v, t)] = true;
        }
    }
    out
}

pub fn ab_decomposition(s: &FiniteSemiring) -> Result<AbDecomposition> {
    let w = s.mult_absorbing().ok_or(Error::NoAbsorbingElement)?;
    let mut dec = AbDecomposition {
        absorbing: w,
        a: vec![],
        b: vec![],
        neither: vec![],
    };
    for x in s.elements() {
        let set = sandwich_plus(s, x);
        let size = set.iter().filter(|&&m| m).count();
        if size == 1 && set[w] {
            dec.a.push(x);
        } else if size == s.order() {
            dec.b.push(x);
        } else {
            dec.neither.push(x);
        }
    }
    Ok(dec)
}

/// `ρ_S = (T×T) ∪ {(w,w)}` with `T = S∖{w}`. Whether it is a congruence is
/// left to the caller.
pub fn rho_partition(s: &FiniteSemiring) -> Result<Partition> {
    let w = s.mult_absorbing().ok_or(Error::NoAbsorbingElement)?;
    let ids: Vec<usize> = s.elements().map(|x| usize::from(x != w)).collect();
    Ok(Partition::from_block_ids(&ids))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::congruences::{is_congruence, quotient};
    use crate::constructions::{adjoin_zero, catalog_semiring, CatalogName};
    use crate::morphisms::is_isomorphic;

    fn cat(name: CatalogName) -> FiniteSemiring {
        catalog_semiring(name)
    }

    #[test]
    fn generated_examples() {
        let p = cat(CatalogName::P);
        assert_eq!(
            ideal_generated(&p, &[0, 2], SubsetKind::Ideal)
                .unwrap()
                .elements(),
            vec![0, 2]
        );
        assert!(ideal_generated(&p, &[4, 1], SubsetKind::BiIdeal)
            .unwrap()
            .is_everything());
        let all: Vec<usize> = p.elements().collect();
        assert!(ideal_generated(&p, &all, SubsetKind::Ideal)
            .unwrap()
            .is_everything());
        assert_eq!(
            ideal_generated(&p, &[], SubsetKind::Ideal),
            Err(Error::EmptySeed)
        );
    }

    #[test]
    fn simplicity_examples() {
        let p = cat(CatalogName::P);
        let r = is_ideal_simple(&p);
        assert!(!r.simple);
        assert_eq!(r.witness, Some(vec![0, 2]));
        assert!(is_bi_ideal_simple(&p).simple);
        assert!(!is_ideal_simple(&cat(CatalogName::S(7))).simple);
        assert!(is_ideal_simple(&cat(CatalogName::S(4))).simple);
        let one = FiniteSemiring::from_rows(&[vec![0]], &[vec![0]]).unwrap();
        assert!(!is_bi_ideal_simple(&one).simple);
        assert!(!is_ideal_simple(&one).simple);
    }

    #[test]
    fn zero_implies_bi_ideal_simple() {
        for name in [CatalogName::S(1), CatalogName::S(2), CatalogName::P] {
            let s = cat(name);
            assert!(s.zero().is_some());
            assert!(is_bi_ideal_simple(&s).simple, "{name}");
        }
    }

    #[test]
    fn ab_examples() {
        let s4 = ab_decomposition(&cat(CatalogName::S(4))).unwrap();
        assert_eq!((s4.a.clone(), s4.b.clone()), (vec![0, 1], vec![]));
        let s2 = ab_decomposition(&cat(CatalogName::S(2))).unwrap();
        assert_eq!((s2.a, s2.b), (vec![], vec![0, 1]));
        let s3 = ab_decomposition(&cat(CatalogName::S(3))).unwrap();
        assert_eq!((s3.a, s3.b), (vec![0], vec![1]));
        assert_eq!(
            ab_decomposition(&cat(CatalogName::S(7))),
            Err(Error::NoAbsorbingElement)
        );
    }

    #[test]
    fn rho_examples() {
        let p = cat(CatalogName::P);
        assert_eq!(
            rho_partition(&p).unwrap().blocks(),
            vec![vec![0], vec![1, 2, 3, 4]]
        );

        let s3 = cat(CatalogName::S(3));
        let rho = rho_partition(&s3).unwrap();
        assert!(rho.is_identity());
        assert_eq!(quotient(&s3, &rho).unwrap(), s3);

        let z = adjoin_zero(&s3).unwrap();
        let rho = rho_partition(&z).unwrap();
        assert!(is_congruence(&z, &rho));
        assert!(is_isomorphic(&quotient(&z, &rho).unwrap(), &cat(CatalogName::S(2))).is_some());

        assert_eq!(
            rho_partition(&cat(CatalogName::S(5))),
            Err(Error::NoAbsorbingElement)
        );
    }
}
