//! Executable checks of the structural claims about multiplicatively
//! idempotent semirings, over one semiring or an enumerated corpus.
//!
//! Each claim evaluates its hypotheses first. A claim whose hypotheses fail is
//! reported `NotApplicable` with the unmet hypothesis; it is never counted as
//! a pass.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::congruences::{
    congruence_lattice, is_congruence, is_congruence_simple, monolith, quotient,
    stability_violation, DEFAULT_LATTICE_ORDER_CAP,
};
use crate::constructions::{catalog_semiring, CatalogName};
use crate::divisibility::is_mult_divisible;
use crate::enumeration::{
    enumerate_with, ConstraintSet, EnumerationOptions, MAX_ORDER_UNCONSTRAINED,
};
use crate::error::{Error, Result};
use crate::ideals::{
    ab_decomposition, ideal_generated, is_bi_ideal_simple, is_ideal_simple, rho_partition,
    SubsetKind,
};
use crate::morphisms::{canonical_form, CanonicalForm};
use crate::tables::{band_law_check, opposite, predicates, FiniteSemiring, OpTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ClaimStatus {
    Pass,
    Fail,
    NotApplicable,
    SkippedOutOfScope,
}

impl fmt::Display for ClaimStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            ClaimStatus::Pass => "PASS",
            ClaimStatus::Fail => "FAIL",
            ClaimStatus::NotApplicable => "N/A",
            ClaimStatus::SkippedOutOfScope => "SKIP",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimResult {
    pub claim_id: String,
    pub status: ClaimStatus,
    /// For `NotApplicable`: the unmet hypothesis. Otherwise a short summary.
    pub detail: String,
    /// Serialized evidence; always present on `Fail`.
    pub witness: Option<String>,
}

impl ClaimResult {
    fn pass(id: &str, detail: impl Into<String>) -> Self {
        ClaimResult {
            claim_id: id.into(),
            status: ClaimStatus::Pass,
            detail: detail.into(),
            witness: None,
        }
    }

    fn fail(id: &str, detail: impl Into<String>, witness: impl Into<String>) -> Self {
        ClaimResult {
            claim_id: id.into(),
            status: ClaimStatus::Fail,
            detail: detail.into(),
            witness: Some(witness.into()),
        }
    }

    fn not_applicable(id: &str, unmet: impl Into<String>) -> Self {
        ClaimResult {
            claim_id: id.into(),
            status: ClaimStatus::NotApplicable,
            detail: unmet.into(),
            witness: None,
        }
    }

    fn skipped(id: &str, why: &str) -> Self {
        ClaimResult {
            claim_id: id.into(),
            status: ClaimStatus::SkippedOutOfScope,
            detail: why.into(),
            witness: None,
        }
    }

    /// Pass when `failure` is `None`, otherwise Fail with the given witness.
    fn check(id: &str, ok_detail: impl Into<String>, failure: Option<(String, String)>) -> Self {
        match failure {
            None => ClaimResult::pass(id, ok_detail),
            Some((detail, witness)) => ClaimResult::fail(id, detail, witness),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub target: String,
    /// Sorted by claim id.
    pub claims: Vec<ClaimResult>,
    /// `Pass` iff no claim failed.
    pub overall: ClaimStatus,
    /// Counts, runtimes and other run facts.
    pub metrics: BTreeMap<String, String>,
}

impl VerificationReport {
    fn new(
        target: impl Into<String>,
        mut claims: Vec<ClaimResult>,
        metrics: BTreeMap<String, String>,
    ) -> Self {
        claims.sort_by(|a, b| a.claim_id.cmp(&b.claim_id));
        let overall = if claims.iter().any(|c| c.status == ClaimStatus::Fail) {
            ClaimStatus::Fail
        } else {
            ClaimStatus::Pass
        };
        VerificationReport {
            target: target.into(),
            claims,
            overall,
            metrics,
        }
    }

    pub fn claim(&self, id: &str) -> Option<&ClaimResult> {
        self.claims.iter().find(|c| c.claim_id == id)
    }

    pub fn status(&self, id: &str) -> Option<ClaimStatus> {
        self.claim(id).map(|c| c.status)
    }

    pub fn passed(&self) -> bool {
        self.overall == ClaimStatus::Pass
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "verification: {}", self.target);
        for c in &self.claims {
            let _ = write!(out, "  [{:>4}] {:<28} {}", c.status, c.claim_id, c.detail);
            if let Some(w) = &c.witness {
                let _ = write!(
                    out,
                    " | witness: {}",
                    w.trim_end().replace("\n\n", " // ").replace('\n', " / ")
                );
            }
            out.push('\n');
        }
        for (k, v) in &self.metrics {
            let _ = writeln!(out, "  {k} = {v}");
        }
        let _ = writeln!(out, "overall: {}", self.overall);
        out
    }
}

/// Canonical forms of S1..S8, index `k` holding `S(k+1)`.
fn catalog_forms() -> &'static [CanonicalForm] {
    static FORMS: OnceLock<Vec<CanonicalForm>> = OnceLock::new();
    FORMS.get_or_init(|| {
        (1..=8)
            .map(|k| canonical_form(&catalog_semiring(CatalogName::S(k))).expect("small order"))
            .collect()
    })
}

/// Which of S1..S8 the semiring is isomorphic to.
pub fn catalog_match(s: &FiniteSemiring) -> Option<u8> {
    if s.order() > 3 {
        return None;
    }
    let c = canonical_form(s).ok()?;
    catalog_forms()
        .iter()
        .position(|f| *f == c)
        .map(|k| k as u8 + 1)
}

fn match_in(s: &FiniteSemiring, allowed: &[u8]) -> Option<(String, String)> {
    match catalog_match(s) {
        Some(k) if allowed.contains(&k) => None,
        Some(k) => Some((
            format!("isomorphic to S{k}, outside the allowed list"),
            s.to_text(),
        )),
        None => Some((
            "isomorphic to no catalog entry in the allowed list".into(),
            s.to_text(),
        )),
    }
}

fn fmt_set(v: &[usize]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

/// The subsemiring on `members`, re-indexed in ascending order, when closed.
fn subsemiring_on(s: &FiniteSemiring, members: &[usize]) -> Option<FiniteSemiring> {
    let mut index = vec![usize::MAX; s.order()];
    for (k, &x) in members.iter().enumerate() {
        index[x] = k;
    }
    let m = members.len();
    let mut add = Vec::with_capacity(m * m);
    let mut mul = Vec::with_capacity(m * m);
    for &x in members {
        for &y in members {
            let (a, p) = (index[s.add(x, y)], index[s.mul(x, y)]);
            if a == usize::MAX || p == usize::MAX {
                return None;
            }
            add.push(a);
            mul.push(p);
        }
    }
    FiniteSemiring::new(OpTable::new(m, add).ok()?, OpTable::new(m, mul).ok()?).ok()
}

/// Ideal-simplicity of the band on `members`: a semigroup ideal with at least
/// two elements that is proper, if any.
fn band_proper_ideal(s: &FiniteSemiring, members: &[usize]) -> Option<Vec<usize>> {
    for (k, &x) in members.iter().enumerate() {
        for &y in &members[k + 1..] {
            let mut hit = vec![false; s.order()];
            let mut work = vec![x, y];
            hit[x] = true;
            hit[y] = true;
            while let Some(v) = work.pop() {
                for &c in members {
                    for p in [s.mul(c, v), s.mul(v, c)] {
                        if !hit[p] {
                            hit[p] = true;
                            work.push(p);
                        }
                    }
                }
            }
            let ideal: Vec<usize> = members.iter().copied().filter(|&m| hit[m]).collect();
            if ideal.len() < members.len() {
                return Some(ideal);
            }
        }
    }
    None
}

struct Facts {
    n: usize,
    mult_idem: bool,
    add_idem: bool,
    commutative: bool,
    cancellative: bool,
    absorbing: Option<usize>,
    zero: Option<usize>,
    bi_absorbing: Option<usize>,
    bi_ideal_simple: bool,
    ideal_simple: bool,
    cong_simple: bool,
}

impl Facts {
    fn of(s: &FiniteSemiring) -> Self {
        let p = predicates(s);
        Facts {
            n: s.order(),
            mult_idem: p.mult_idempotent.holds,
            add_idem: p.add_idempotent.holds,
            commutative: p.commutative_mul.holds,
            cancellative: p.add_cancellative.holds,
            absorbing: s.mult_absorbing(),
            zero: s.zero(),
            bi_absorbing: s.bi_absorbing(),
            bi_ideal_simple: is_bi_ideal_simple(s).simple,
            ideal_simple: is_ideal_simple(s).simple,
            cong_simple: is_congruence_simple(s),
        }
    }

    /// Standing hypotheses of the absorbing-element claims.
    fn section_hypothesis(&self) -> std::result::Result<usize, &'static str> {
        if !self.mult_idem {
            return Err("not multiplicatively idempotent");
        }
        if !self.bi_ideal_simple {
            return Err("not bi-ideal-simple");
        }
        self.absorbing
            .ok_or("no multiplicatively absorbing element")
    }
}

/// `ρ_S` is a congruence and `S/ρ_S` is isomorphic to `S{target}`.
fn rho_quotient_check(s: &FiniteSemiring, target: u8) -> Option<(String, String)> {
    let rho = rho_partition(s).expect("caller checked absorbing element");
    match quotient(s, &rho) {
        Err(Error::NotACongruence { x, y, detail }) => Some((
            format!("rho = {} is not a congruence", fmt_blocks(&rho.blocks())),
            format!("({x},{y}) related but {detail}"),
        )),
        Err(e) => Some(("quotient failed".into(), e.to_string())),
        Ok(q) => match catalog_match(&q) {
            Some(k) if k == target => None,
            other => Some((
                format!(
                    "S/rho is {} rather than S{target}",
                    other.map_or("unmatched".into(), |k| format!("S{k}"))
                ),
                q.to_text(),
            )),
        },
    }
}

fn fmt_blocks(blocks: &[Vec<usize>]) -> String {
    blocks
        .iter()
        .map(|b| fmt_set(b))
        .collect::<Vec<_>>()
        .join("|")
}

/// Evaluates every per-semiring claim.
pub fn verify_semiring(s: &FiniteSemiring) -> VerificationReport {
    verify_semiring_named(s, &format!("semiring of order {}", s.order()))
}

pub fn verify_semiring_named(s: &FiniteSemiring, target: &str) -> VerificationReport {
    let f = Facts::of(s);
    let claims = semiring_claims(s, &f);
    let mut metrics = BTreeMap::new();
    metrics.insert("order".into(), f.n.to_string());
    VerificationReport::new(target, claims, metrics)
}

fn semiring_claims(s: &FiniteSemiring, f: &Facts) -> Vec<ClaimResult> {
    let mut out = Vec::new();
    lemma_2_1(s, f, &mut out);
    two_element_claims(s, f, &mut out);
    rho_claims(s, f, &mut out);
    simplicity_claims(s, f, &mut out);
    remark_claims(s, f, &mut out);
    coatom_claims(s, f, &mut out);
    finite_classification_claims(s, f, &mut out);
    out.extend(out_of_scope_claims());
    out
}

fn lemma_2_1(s: &FiniteSemiring, f: &Facts, out: &mut Vec<ClaimResult>) {
    let ids = ["Lemma2.1.i", "Lemma2.1.ii", "Lemma2.1.iii", "Lemma2.1.iv"];
    let w = match f.section_hypothesis() {
        Ok(w) => w,
        Err(why) => {
            out.extend(ids.iter().map(|id| ClaimResult::not_applicable(id, why)));
            return;
        }
    };
    let i = if s.add(w, w) != w {
        Some(("w+w != w".into(), format!("w={w}, w+w={}", s.add(w, w))))
    } else if f.zero.is_none() && f.bi_absorbing.is_none() {
        Some((
            "w is neither a zero nor bi-absorbing".into(),
            format!("w={w}"),
        ))
    } else {
        None
    };
    let kind = if f.zero.is_some() {
        "zero"
    } else {
        "bi-absorbing"
    };
    out.push(ClaimResult::check(
        ids[0],
        format!("2w=w, w={w} is {kind}"),
        i,
    ));

    let dec = ab_decomposition(s).expect("absorbing element exists");
    out.push(ClaimResult::check(
        ids[1],
        format!("A={} B={}", fmt_set(&dec.a), fmt_set(&dec.b)),
        (!dec.neither.is_empty())
            .then(|| ("elements in neither A nor B".into(), fmt_set(&dec.neither))),
    ));

    let iii = if dec.a.is_empty() {
        None
    } else {
        let closure = ideal_generated(s, &dec.a, SubsetKind::BiIdeal).expect("non-empty");
        (closure.elements() != dec.a)
            .then(|| ("A is not a bi-ideal".into(), fmt_set(&closure.elements())))
    };
    out.push(ClaimResult::check(ids[2], "A is empty or a bi-ideal", iii));

    let iv = dec.a.iter().find(|&&a| s.add(a, a) != w).map(|&a| {
        (
            "2a != w for some a in A".into(),
            format!("a={a}, a+a={}", s.add(a, a)),
        )
    });
    out.push(ClaimResult::check(ids[3], "2a=w on A", iv));
}

fn two_element_claims(s: &FiniteSemiring, f: &Facts, out: &mut Vec<ClaimResult>) {
    // Exactly one of S1..S4.
    let id = "Prop2.1.1";
    match f.section_hypothesis() {
        Err(why) => out.push(ClaimResult::not_applicable(id, why)),
        Ok(_) if f.n != 2 => out.push(ClaimResult::not_applicable(id, "order is not 2")),
        Ok(_) => {
            let m = match_in(s, &[1, 2, 3, 4]);
            out.push(ClaimResult::check(
                id,
                format!("isomorphic to S{}", catalog_match(s).unwrap_or(0)),
                m,
            ));
        }
    }

    let id = "Prop3.0";
    if !f.mult_idem {
        out.push(ClaimResult::not_applicable(
            id,
            "not multiplicatively idempotent",
        ));
    } else if f.absorbing.is_some() {
        out.push(ClaimResult::not_applicable(
            id,
            "has a multiplicatively absorbing element",
        ));
    } else if f.n != 2 {
        out.push(ClaimResult::not_applicable(id, "order is not 2"));
    } else {
        let failure = if !f.add_idem {
            Some(("not additively idempotent".into(), s.to_text()))
        } else {
            match_in(s, &[5, 6])
        };
        out.push(ClaimResult::check(
            id,
            format!(
                "bi-idempotent, isomorphic to S{}",
                catalog_match(s).unwrap_or(0)
            ),
            failure,
        ));
    }
}

fn rho_claims(s: &FiniteSemiring, f: &Facts, out: &mut Vec<ClaimResult>) {
    let section = f.section_hypothesis();

    let id = "Lemma2.4";
    match section {
        Err(why) => out.push(ClaimResult::not_applicable(id, why)),
        Ok(w) => {
            let sums_to_w = s.elements().all(|x| s.elements().all(|y| s.add(x, y) == w));
            if !sums_to_w {
                out.push(ClaimResult::not_applicable(id, "S+S != {w}"));
            } else if f.bi_absorbing != Some(w) {
                out.push(ClaimResult::fail(
                    id,
                    "w is not bi-absorbing",
                    format!("w={w}"),
                ));
            } else {
                out.push(ClaimResult::check(
                    id,
                    "w=o_S, rho congruence, S/rho ~ S4",
                    rho_quotient_check(s, 4),
                ));
            }
        }
    }

    let needs_add_idem = |id: &str, want_zero: bool| -> std::result::Result<usize, ClaimResult> {
        let w = section.map_err(|why| ClaimResult::not_applicable(id, why))?;
        if !f.add_idem {
            return Err(ClaimResult::not_applicable(id, "not additively idempotent"));
        }
        let ok = if want_zero {
            f.zero == Some(w)
        } else {
            f.bi_absorbing == Some(w)
        };
        if !ok {
            return Err(ClaimResult::not_applicable(
                id,
                if want_zero {
                    "w is not a zero"
                } else {
                    "w is not bi-absorbing"
                },
            ));
        }
        Ok(w)
    };

    match needs_add_idem("Lemma2.6", false) {
        Err(r) => out.push(r),
        Ok(w) => {
            let t: Vec<usize> = s.elements().filter(|&x| x != w).collect();
            let mut failure = None;
            'scan: for &x in &t {
                for &y in &t {
                    if s.mul(x, y) == w {
                        failure = Some(("TT not inside T".into(), format!("{x}·{y}={w}")));
                        break 'scan;
                    }
                    if s.add(x, y) == w {
                        failure = Some(("T+T not inside T".into(), format!("{x}+{y}={w}")));
                        break 'scan;
                    }
                }
            }
            out.push(ClaimResult::check(
                "Lemma2.6",
                "TT and T+T inside T",
                failure,
            ));
        }
    }

    match needs_add_idem("Lemma2.bi-absorbing", false) {
        Err(r) => out.push(r),
        Ok(_) => out.push(ClaimResult::check(
            "Lemma2.bi-absorbing",
            "rho congruence, S/rho ~ S3",
            rho_quotient_check(s, 3),
        )),
    }

    match needs_add_idem("Lemma2.7", true) {
        Err(r) => out.push(r),
        Ok(_) => out.push(ClaimResult::check(
            "Lemma2.7",
            "rho congruence, S/rho ~ S2",
            rho_quotient_check(s, 2),
        )),
    }

    // ρ_S is a congruence in each of the four sum/product shapes of T.
    let id = "Remark1.iii";
    match f.bi_absorbing {
        None => out.push(ClaimResult::not_applicable(id, "no bi-absorbing element")),
        Some(_) if f.n < 2 => out.push(ClaimResult::not_applicable(id, "T is empty")),
        Some(o) => {
            let t: Vec<usize> = s.elements().filter(|&x| x != o).collect();
            let all =
                |g: &dyn Fn(usize, usize) -> bool| t.iter().all(|&x| t.iter().all(|&y| g(x, y)));
            let sums_o = all(&|x, y| s.add(x, y) == o);
            let sums_t = all(&|x, y| s.add(x, y) != o);
            let prods_o = all(&|x, y| s.mul(x, y) == o);
            let prods_t = all(&|x, y| s.mul(x, y) != o);
            if !((sums_o || sums_t) && (prods_o || prods_t)) {
                out.push(ClaimResult::not_applicable(
                    id,
                    "T+T and TT match none of the four shapes",
                ));
            } else {
                let rho = rho_partition(s).expect("absorbing");
                let nontrivial = !rho.is_identity() && !rho.is_full();
                let failure = if let Some((x, y, d)) = stability_violation(s, &rho) {
                    Some((
                        "rho is not a congruence".into(),
                        format!("({x},{y}) related but {d}"),
                    ))
                } else if nontrivial != (f.n >= 3) {
                    Some((
                        "id != rho != full does not match |S| >= 3".into(),
                        rho.to_string(),
                    ))
                } else {
                    None
                };
                out.push(ClaimResult::check(id, "rho congruence", failure));
            }
        }
    }
}

fn simplicity_claims(s: &FiniteSemiring, f: &Facts, out: &mut Vec<ClaimResult>) {
    let id = "Remark1.i";
    if !f.ideal_simple && !f.cong_simple {
        out.push(ClaimResult::not_applicable(
            id,
            "neither ideal-simple nor congruence-simple",
        ));
    } else {
        out.push(ClaimResult::check(
            id,
            "bi-ideal-simple",
            (!f.bi_ideal_simple).then(|| {
                (
                    "simple but not bi-ideal-simple".into(),
                    fmt_set(&is_bi_ideal_simple(s).witness.unwrap_or_default()),
                )
            }),
        ));
    }

    let id = "Remark1.iv";
    match f.zero {
        None => out.push(ClaimResult::not_applicable(id, "no zero")),
        Some(_) if f.n < 2 => out.push(ClaimResult::not_applicable(id, "trivial semiring")),
        Some(_) => {
            // The only bi-ideal is S: every single element already generates S.
            let failure = s.elements().find_map(|x| {
                let c = ideal_generated(s, &[x], SubsetKind::BiIdeal).expect("non-empty");
                (!c.is_everything())
                    .then(|| ("proper bi-ideal".to_string(), fmt_set(&c.elements())))
            });
            out.push(ClaimResult::check(id, "S is the only bi-ideal", failure));
        }
    }

    let id = "Remark1.v";
    if f.n != 2 {
        out.push(ClaimResult::not_applicable(id, "order is not 2"));
    } else {
        let failure = if !f.cong_simple {
            Some(("not congruence-simple".into(), s.to_text()))
        } else if !f.ideal_simple {
            Some(("not ideal-simple".into(), s.to_text()))
        } else {
            None
        };
        out.push(ClaimResult::check(
            id,
            "congruence-simple and ideal-simple",
            failure,
        ));
    }

    let id = "Prop3.1";
    if !f.mult_idem {
        out.push(ClaimResult::not_applicable(
            id,
            "not multiplicatively idempotent",
        ));
    } else if !f.cong_simple {
        out.push(ClaimResult::not_applicable(id, "not congruence-simple"));
    } else if f.n < 3 {
        out.push(ClaimResult::not_applicable(id, "order below 3"));
    } else {
        let x = s.elements().find(|&x| s.add(x, x) != x);
        out.push(ClaimResult::check(
            id,
            "additively idempotent",
            x.map(|x| {
                (
                    "not additively idempotent".into(),
                    format!("{x}+{x}={}", s.add(x, x)),
                )
            }),
        ));
    }
}

fn remark_claims(s: &FiniteSemiring, f: &Facts, out: &mut Vec<ClaimResult>) {
    let id = "Remark1.vi";
    if !f.mult_idem || !f.cancellative {
        out.push(ClaimResult::not_applicable(
            id,
            "not both multiplicatively idempotent and additively cancellative",
        ));
    } else {
        let ring = predicates(s).boolean_ring;
        let failure = if !ring.holds {
            Some((
                "not a Boolean ring".into(),
                format!("{:?}", ring.counterexample.unwrap_or_default()),
            ))
        } else if (f.cong_simple || f.ideal_simple) && catalog_match(s) != Some(1) {
            Some((
                "simple Boolean ring not isomorphic to S1".into(),
                s.to_text(),
            ))
        } else {
            None
        };
        out.push(ClaimResult::check(id, "Boolean ring", failure));
    }

    let id = "Remark1.vii";
    match f.zero {
        None => out.push(ClaimResult::not_applicable(id, "no zero")),
        Some(_) if !f.cong_simple => {
            out.push(ClaimResult::not_applicable(id, "not congruence-simple"))
        }
        Some(z) => {
            if s.elements().any(|a| a != z && s.mul(a, a) == z) {
                out.push(ClaimResult::not_applicable(
                    id,
                    "some nonzero square is zero",
                ));
            } else {
                let pair = s
                    .elements()
                    .flat_map(|a| s.elements().map(move |b| (a, b)))
                    .find(|&(a, b)| a != z && b != z && s.mul(a, b) == z);
                out.push(ClaimResult::check(
                    id,
                    "no proper zero divisors",
                    pair.map(|(a, b)| ("zero divisors".into(), format!("{a}·{b}={z}"))),
                ));
            }
        }
    }

    let id = "BandLaw";
    if !f.mult_idem {
        out.push(ClaimResult::not_applicable(
            id,
            "not multiplicatively idempotent",
        ));
    } else {
        let r = band_law_check(s.mul_table()).expect("idempotent associative table");
        out.push(ClaimResult::check(
            id,
            "b=bab whenever b in SaS",
            r.map(|(a, b)| ("band law violated".into(), format!("a={a}, b={b}"))),
        ));
    }

    let id = "RemarkSemigroup.2";
    let d = is_mult_divisible(s);
    let failure = (d.divisible != f.mult_idem).then(|| {
        (
            "divisibility and idempotency disagree".into(),
            format!("divisible={}, witness={:?}", d.divisible, d.witness),
        )
    });
    out.push(ClaimResult::check(
        id,
        format!("divisible={} idempotent={}", d.divisible, f.mult_idem),
        failure,
    ));

    for (id, simple, what) in [
        ("Remark5.i", f.ideal_simple, "ideal-simple"),
        ("Remark5.ii", f.cong_simple, "congruence-simple"),
    ] {
        if !f.commutative || !f.mult_idem {
            out.push(ClaimResult::not_applicable(
                id,
                "not commutative and multiplicatively idempotent",
            ));
        } else if !simple {
            out.push(ClaimResult::not_applicable(id, format!("not {what}")));
        } else {
            out.push(ClaimResult::check(
                id,
                "isomorphic to one of S1..S4",
                match_in(s, &[1, 2, 3, 4]),
            ));
        }
    }

    let id = "Tables.unique-distinguished";
    let absorbing = s.elements().filter(|&w| s.is_mult_absorbing(w)).count();
    let neutral = s.elements().filter(|&e| s.is_add_neutral(e)).count();
    let failure = (absorbing > 1 || neutral > 1).then(|| {
        (
            "more than one absorbing or additively neutral element".into(),
            format!("absorbing={absorbing}, neutral={neutral}"),
        )
    });
    out.push(ClaimResult::check(
        id,
        "at most one absorbing and one additively neutral element",
        failure,
    ));
}

fn coatom_claims(s: &FiniteSemiring, f: &Facts, out: &mut Vec<ClaimResult>) {
    let id = "Cor-unique-coatom";
    let hypothesis = (|| -> std::result::Result<usize, String> {
        if !f.mult_idem {
            return Err("not multiplicatively idempotent".into());
        }
        let w = f.absorbing.ok_or("no multiplicatively absorbing element")?;
        let case_bi = f.bi_absorbing == Some(w) && f.bi_ideal_simple;
        let case_zero = f.zero == Some(w) && f.ideal_simple;
        if !case_bi && !case_zero {
            return Err(if f.bi_absorbing.is_some() {
                "w is bi-absorbing but S is not bi-ideal-simple".into()
            } else if f.zero.is_some() {
                "w is a zero but S is not ideal-simple".into()
            } else {
                "w is neither a zero nor bi-absorbing".into()
            });
        }
        if f.n > DEFAULT_LATTICE_ORDER_CAP {
            return Err(format!(
                "order above the lattice cap {DEFAULT_LATTICE_ORDER_CAP}"
            ));
        }
        Ok(w)
    })();
    match hypothesis {
        Err(why) => out.push(ClaimResult::not_applicable(id, why)),
        Ok(_) => {
            let rho = rho_partition(s).expect("absorbing");
            let lattice = congruence_lattice(s).expect("order within cap");
            let coatoms = lattice.coatoms();
            let failure = if !is_congruence(s, &rho) {
                Some(("rho is not a congruence".into(), rho.to_string()))
            } else if coatoms != vec![rho.clone()] {
                let listed: Vec<String> = coatoms.iter().map(|c| c.to_string()).collect();
                Some(("rho is not the unique coatom".into(), listed.join("; ")))
            } else {
                None
            };
            out.push(ClaimResult::check(
                id,
                format!("unique coatom {} of {} congruences", rho, lattice.len()),
                failure,
            ));
        }
    }

    let id = "Remark3.4.0";
    let cond1 = f.mult_idem && f.bi_absorbing.is_some() && f.bi_ideal_simple;
    if !cond1 {
        out.push(ClaimResult::not_applicable(
            id,
            "not a bi-ideal-simple multiplicatively idempotent semiring with o_S",
        ));
    } else {
        let o = f.bi_absorbing.expect("checked");
        let t: Vec<usize> = s.elements().filter(|&x| x != o).collect();
        let rho = rho_partition(s).expect("absorbing");
        match quotient(s, &rho).ok().and_then(|q| catalog_match(&q)) {
            Some(3) => {
                let failure = match subsemiring_on(s, &t) {
                    None => Some(("T is not a subsemiring".into(), fmt_set(&t))),
                    Some(ts) if t.len() >= 2 => {
                        if !is_bi_ideal_simple(&ts).simple {
                            Some(("T is not bi-ideal-simple".into(), fmt_set(&t)))
                        } else if let Some(x) = ts.bi_absorbing() {
                            Some(("T has a bi-absorbing element".into(), t[x].to_string()))
                        } else {
                            None
                        }
                    }
                    Some(_) => None,
                };
                out.push(ClaimResult::check(id, "S/rho ~ S3: T subsemiring", failure));
            }
            Some(4) => {
                let sums = s.elements().all(|x| s.elements().all(|y| s.add(x, y) == o));
                let tt = t.iter().all(|&x| t.iter().all(|&y| s.mul(x, y) != o));
                let failure = if !sums {
                    Some(("S+S != {o}".into(), s.to_text()))
                } else if !f.ideal_simple {
                    Some((
                        "S is not ideal-simple".into(),
                        fmt_set(&is_ideal_simple(s).witness.unwrap_or_default()),
                    ))
                } else if let Some(i) = band_proper_ideal(s, &s.elements().collect::<Vec<_>>()) {
                    Some(("the band S is not ideal-simple".into(), fmt_set(&i)))
                } else if !tt {
                    Some(("TT not inside T".into(), fmt_set(&t)))
                } else if t.len() < 2 {
                    None
                } else if let Some(i) = band_proper_ideal(s, &t) {
                    Some(("the band T is not ideal-simple".into(), fmt_set(&i)))
                } else if let Some((a, b)) = t
                    .iter()
                    .flat_map(|&a| t.iter().map(move |&b| (a, b)))
                    .find(|&(a, b)| s.mul(s.mul(b, a), b) != b)
                {
                    Some((
                        "the band T is not rectangular".into(),
                        format!("a={a}, b={b}"),
                    ))
                } else if t
                    .iter()
                    .any(|&w| t.iter().all(|&x| s.mul(w, x) == w && s.mul(x, w) == w))
                {
                    Some((
                        "T has a multiplicatively absorbing element".into(),
                        fmt_set(&t),
                    ))
                } else {
                    None
                };
                out.push(ClaimResult::check(
                    id,
                    "S/rho ~ S4: S+S={o}, ideal-simple, T rectangular",
                    failure,
                ));
            }
            _ => out.push(ClaimResult::not_applicable(id, "S/rho is not S3 or S4")),
        }
    }

    // The subsemiring conclusions need only the quotient shape; the
    // simplicity conclusion additionally needs S ideal-simple.
    let id = "Remark3.5";
    let rho_quotient = f.zero.filter(|_| f.mult_idem).and_then(|_| {
        let rho = rho_partition(s).ok()?;
        quotient(s, &rho).ok().and_then(|q| catalog_match(&q))
    });
    let z = f.zero.unwrap_or(0);
    let t: Vec<usize> = s.elements().filter(|&x| x != z).collect();
    match rho_quotient {
        Some(1) => out.push(ClaimResult::check(
            id,
            "S/rho ~ S1 forces S ~ S1",
            match_in(s, &[1]),
        )),
        Some(2) => out.push(ClaimResult::check(
            id,
            "S/rho ~ S2: T subsemiring",
            subsemiring_on(s, &t)
                .is_none()
                .then(|| ("T is not a subsemiring".into(), fmt_set(&t))),
        )),
        _ => out.push(ClaimResult::not_applicable(
            id,
            "not a multiplicatively idempotent semiring with zero and S/rho in {S1, S2}",
        )),
    }

    let id = "Remark3.5.T-simple";
    if rho_quotient != Some(2) || !f.ideal_simple || t.len() < 2 {
        out.push(ClaimResult::not_applicable(
            id,
            "needs S ideal-simple with zero, S/rho ~ S2 and |T| >= 2",
        ));
    } else {
        let failure = match subsemiring_on(s, &t) {
            None => Some(("T is not a subsemiring".into(), fmt_set(&t))),
            Some(ts) if !is_ideal_simple(&ts).simple => {
                Some(("T is not ideal-simple".into(), fmt_set(&t)))
            }
            Some(ts) if ts.mult_absorbing().is_some() => Some((
                "T has a multiplicatively absorbing element".into(),
                fmt_set(&t),
            )),
            Some(_) => None,
        };
        out.push(ClaimResult::check(
            id,
            "T ideal-simple without absorbing element",
            failure,
        ));
    }
}

fn finite_classification_claims(s: &FiniteSemiring, f: &Facts, out: &mut Vec<ClaimResult>) {
    let id = "Thm2.9";
    if !f.mult_idem || !f.cong_simple {
        out.push(ClaimResult::not_applicable(
            id,
            "not a congruence-simple multiplicatively idempotent semiring",
        ));
    } else if f.absorbing.is_none() {
        out.push(ClaimResult::not_applicable(
            id,
            "no multiplicatively absorbing element",
        ));
    } else {
        out.push(ClaimResult::check(
            id,
            "isomorphic to one of S1..S4",
            match_in(s, &[1, 2, 3, 4]),
        ));
    }

    let id = "Thm3.3";
    if !f.mult_idem || !f.cong_simple {
        out.push(ClaimResult::not_applicable(
            id,
            "not a congruence-simple multiplicatively idempotent semiring",
        ));
    } else {
        out.push(ClaimResult::check(
            id,
            "isomorphic to one of S1..S8",
            match_in(s, &[1, 2, 3, 4, 5, 6, 7, 8]),
        ));
    }

    let id = "Prop-non-bi-absorbing";
    let greatest = s.elements().find(|&w| s.is_add_absorbing(w));
    if !f.mult_idem || !f.add_idem || !f.cong_simple {
        out.push(ClaimResult::not_applicable(
            id,
            "not a congruence-simple bi-idempotent semiring",
        ));
    } else {
        match greatest {
            None => out.push(ClaimResult::fail(
                id,
                "finite bi-idempotent semiring without greatest element",
                s.to_text(),
            )),
            Some(w) if f.bi_absorbing == Some(w) => out.push(ClaimResult::not_applicable(
                id,
                "greatest element is bi-absorbing",
            )),
            Some(_) => out.push(ClaimResult::check(
                id,
                "isomorphic to one of S5..S8",
                match_in(s, &[5, 6, 7, 8]),
            )),
        }
    }

    let id = "Monolith";
    if f.n < 2 {
        out.push(ClaimResult::not_applicable(id, "order below 2"));
    } else {
        let m = monolith(s);
        let failure = m.partition.as_ref().and_then(|p| {
            (0..f.n)
                .flat_map(|i| (i + 1..f.n).map(move |j| (i, j)))
                .map(|(i, j)| {
                    crate::congruences::congruence_generated(s, [(i, j)]).expect("in range")
                })
                .find(|c| !p.refines(c))
                .map(|c| {
                    (
                        "monolith not below a principal congruence".to_string(),
                        c.to_string(),
                    )
                })
        });
        let detail = match &m.partition {
            Some(p) => format!(
                "subdirectly irreducible, monolith {}",
                fmt_blocks(&p.blocks())
            ),
            None => "not subdirectly irreducible".into(),
        };
        out.push(ClaimResult::check(id, detail, failure));
    }
}

fn out_of_scope_claims() -> Vec<ClaimResult> {
    vec![
        ClaimResult::skipped(
            "Conjecture-finiteness",
            "concerns possibly infinite congruence-simple semirings",
        ),
        ClaimResult::skipped(
            "Conjecture-divisible",
            "concerns finitely generated commutative semirings; only the finite case is checked",
        ),
        ClaimResult::skipped(
            "RemarkSemigroup.1",
            "finitely generated commutative semigroups",
        ),
        ClaimResult::skipped(
            "Remark-rings-Jacobson",
            "finitely generated commutative rings",
        ),
        ClaimResult::skipped("Remark-parasemifields", "finitely generated parasemifields"),
        ClaimResult::skipped(
            "Remark5.iii",
            "relies on an external classification of subdirectly irreducibles",
        ),
    ]
}

/// Classification search mode at orders 3 and above.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SearchMode {
    /// Only bi-idempotent tables; sufficient because congruence-simple
    /// multiplicatively idempotent semirings of order at least 3 are
    /// additively idempotent.
    Restricted,
    /// Every multiplicatively idempotent table.
    Full,
}

impl SearchMode {
    pub fn as_str(&self) -> &'static str {
        match self {
            SearchMode::Restricted => "restricted",
            SearchMode::Full => "full",
        }
    }

    pub fn max_order(&self) -> usize {
        match self {
            SearchMode::Restricted => crate::enumeration::MAX_ORDER_BI_IDEMPOTENT,
            SearchMode::Full => MAX_ORDER_UNCONSTRAINED,
        }
    }
}

impl std::str::FromStr for SearchMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "restricted" => Ok(SearchMode::Restricted),
            "full" => Ok(SearchMode::Full),
            other => Err(Error::UnknownName(other.to_string())),
        }
    }
}

fn forms_of(ks: &[u8]) -> Vec<CanonicalForm> {
    let mut v: Vec<CanonicalForm> = ks
        .iter()
        .map(|&k| catalog_forms()[k as usize - 1].clone())
        .collect();
    v.sort();
    v
}

fn describe(classes: &[CanonicalForm]) -> String {
    let names: Vec<String> = classes
        .iter()
        .map(|c| match catalog_forms().iter().position(|f| f == c) {
            Some(k) => format!("S{}", k + 1),
            None => format!("#{}", c.digest_hex()),
        })
        .collect();
    format!("[{}]", names.join(", "))
}

/// Enumerates congruence-simple multiplicatively idempotent semirings at
/// orders `2..=max_order` and compares them with the catalog.
pub fn verify_classification(
    max_order: usize,
    mode: SearchMode,
    options: &EnumerationOptions,
) -> Result<VerificationReport> {
    if max_order > mode.max_order() {
        return Err(Error::OrderTooLarge {
            order: max_order,
            bound: mode.max_order(),
        });
    }
    if max_order < 2 {
        return Err(Error::OrderTooLarge {
            order: max_order,
            bound: mode.max_order(),
        });
    }
    let mut claims = Vec::new();
    let mut metrics = BTreeMap::new();
    metrics.insert("mode".into(), mode.as_str().to_string());
    let mut all_simple: Vec<CanonicalForm> = Vec::new();

    for n in 2..=max_order {
        let mut c = ConstraintSet {
            congruence_simple_filter: true,
            ..ConstraintSet::mult_idempotent()
        };
        // Order 2 is always searched in full.
        if n >= 3 && mode == SearchMode::Restricted {
            c.add_idempotent = true;
        }
        let r = enumerate_with(n, c, options)?;
        metrics.insert(format!("order{n}.classes"), r.classes.len().to_string());
        metrics.insert(format!("order{n}.wall_ms"), r.stats.wall_ms.to_string());
        metrics.insert(
            format!("order{n}.nodes_visited"),
            r.stats.nodes_visited().to_string(),
        );
        metrics.insert(
            format!("order{n}.search"),
            if c.add_idempotent {
                "bi-idempotent"
            } else {
                "mult-idempotent"
            }
            .into(),
        );
        let expected = match n {
            2 => forms_of(&[1, 2, 3, 4, 5, 6]),
            3 => forms_of(&[7, 8]),
            _ => Vec::new(),
        };
        let id = format!("Thm3.3.order{n}");
        claims.push(ClaimResult::check(
            &id,
            format!("{} classes {}", r.classes.len(), describe(&r.classes)),
            (r.classes != expected).then(|| {
                (
                    format!("expected {}", describe(&expected)),
                    r.classes
                        .iter()
                        .map(|c| c.to_text())
                        .collect::<Vec<_>>()
                        .join("\n"),
                )
            }),
        ));
        all_simple.extend(r.classes);
    }

    // Congruence-simple with an absorbing element only at order 2.
    let bad: Vec<&CanonicalForm> = all_simple
        .iter()
        .filter(|c| c.order > 2 && c.semiring().mult_absorbing().is_some())
        .collect();
    claims.push(ClaimResult::check(
        "Thm2.9",
        "absorbing congruence-simple classes all have order 2",
        bad.first()
            .map(|c| ("absorbing class above order 2".into(), c.to_text())),
    ));

    let id = "Prop3.1";
    if mode == SearchMode::Restricted {
        claims.push(ClaimResult::not_applicable(
            id,
            "restricted mode assumes additive idempotency at order >= 3",
        ));
    } else {
        let bad = all_simple
            .iter()
            .find(|c| c.order >= 3 && !c.semiring().is_add_idempotent());
        claims.push(ClaimResult::check(
            id,
            "order >= 3 classes are additively idempotent",
            bad.map(|c| ("not additively idempotent".into(), c.to_text())),
        ));
    }

    let bad = all_simple.iter().find(|c| {
        let s = c.semiring();
        let greatest = s.elements().find(|&w| s.is_add_absorbing(w));
        s.is_add_idempotent()
            && greatest.is_some_and(|w| s.bi_absorbing() != Some(w))
            && catalog_match(&s).is_none_or(|k| !(5..=8).contains(&k))
    });
    claims.push(ClaimResult::check(
        "Prop-non-bi-absorbing",
        "classes whose greatest element is not bi-absorbing are among S5..S8",
        bad.map(|c| {
            (
                format!("unexpected class {}", describe(std::slice::from_ref(c))),
                c.to_text(),
            )
        }),
    ));

    let with_abs = enumerate_with(
        2,
        ConstraintSet {
            has_mult_absorbing: true,
            ..ConstraintSet::mult_idempotent()
        },
        options,
    )?;
    metrics.insert(
        "order2.absorbing_classes".into(),
        with_abs.classes.len().to_string(),
    );
    let expected = forms_of(&[1, 2, 3, 4]);
    claims.push(ClaimResult::check(
        "Prop2.1.1",
        format!(
            "{} classes {}",
            with_abs.classes.len(),
            describe(&with_abs.classes)
        ),
        (with_abs.classes != expected).then(|| {
            (
                format!("expected {}", describe(&expected)),
                describe(&with_abs.classes),
            )
        }),
    ));

    let order2 = enumerate_with(2, ConstraintSet::mult_idempotent(), options)?;
    let without: Vec<CanonicalForm> = order2
        .classes
        .iter()
        .filter(|c| c.semiring().mult_absorbing().is_none())
        .cloned()
        .collect();
    metrics.insert(
        "order2.non_absorbing_classes".into(),
        without.len().to_string(),
    );
    let expected = forms_of(&[5, 6]);
    let op_ok =
        opposite(&catalog_semiring(CatalogName::S(6))) == catalog_semiring(CatalogName::S(5));
    let failure = if without != expected {
        Some((
            format!("expected {}", describe(&expected)),
            describe(&without),
        ))
    } else if !op_ok {
        Some((
            "S6^op differs from S5".into(),
            opposite(&catalog_semiring(CatalogName::S(6))).to_text(),
        ))
    } else {
        None
    };
    claims.push(ClaimResult::check(
        "Prop3.0",
        format!(
            "{} classes {}, S6^op = S5",
            without.len(),
            describe(&without)
        ),
        failure,
    ));

    Ok(VerificationReport::new(
        format!("classification up to order {max_order}"),
        claims,
        metrics,
    ))
}

/// Every semiring class at orders `1..=max_order`.
pub fn corpus(max_order: usize, options: &EnumerationOptions) -> Result<Vec<FiniteSemiring>> {
    if max_order > MAX_ORDER_UNCONSTRAINED {
        return Err(Error::OrderTooLarge {
            order: max_order,
            bound: MAX_ORDER_UNCONSTRAINED,
        });
    }
    let mut out = Vec::new();
    for n in 1..=max_order {
        out.extend(enumerate_with(n, ConstraintSet::default(), options)?.semirings());
    }
    Ok(out)
}

/// Runs the per-semiring claims over the whole corpus and aggregates them: a
/// claim fails if any class fails it, passes if some class passes and none
/// fails, and is not applicable otherwise.
pub fn verify_corpus_properties(
    max_order: usize,
    options: &EnumerationOptions,
) -> Result<VerificationReport> {
    let classes = corpus(max_order, options)?;
    let per_class: Vec<Vec<ClaimResult>> = classes
        .par_iter()
        .map(|s| semiring_claims(s, &Facts::of(s)))
        .collect();

    let mut agg: BTreeMap<
        String,
        (
            usize,
            usize,
            usize,
            Option<ClaimResult>,
            Option<ClaimResult>,
        ),
    > = BTreeMap::new();
    for (s, results) in classes.iter().zip(&per_class) {
        for r in results {
            let e = agg.entry(r.claim_id.clone()).or_default();
            match r.status {
                ClaimStatus::Pass => e.0 += 1,
                ClaimStatus::NotApplicable => e.1 += 1,
                ClaimStatus::Fail => {
                    e.2 += 1;
                    if e.3.is_none() {
                        let mut r = r.clone();
                        let w = r.witness.take().unwrap_or_default();
                        r.witness = Some(if w == s.to_text() {
                            w
                        } else {
                            format!("{w} in\n{}", s.to_text())
                        });
                        e.3 = Some(r);
                    }
                }
                ClaimStatus::SkippedOutOfScope => {
                    if e.4.is_none() {
                        e.4 = Some(r.clone());
                    }
                }
            }
        }
    }

    let mut claims: Vec<ClaimResult> = agg
        .into_iter()
        .map(|(id, (pass, na, fail, first_fail, skipped))| {
            let detail = format!("pass={pass} n/a={na} fail={fail}");
            if let Some(mut f) = first_fail {
                f.detail = format!("{detail}; first: {}", f.detail);
                f
            } else if let Some(s) = skipped {
                s
            } else if pass > 0 {
                ClaimResult::pass(&id, detail)
            } else {
                ClaimResult::not_applicable(
                    &id,
                    format!("no class meets the hypotheses ({detail})"),
                )
            }
        })
        .collect();

    // Remark 1(v) quantified: the order-2 slice must be non-empty and all pass.
    let order2 = classes.iter().filter(|s| s.order() == 2).count();
    if max_order >= 2 && order2 == 0 {
        claims.push(ClaimResult::fail(
            "Corpus.order2-present",
            "no order-2 classes",
            "empty corpus slice",
        ));
    }

    let mut metrics = BTreeMap::new();
    metrics.insert("classes".into(), classes.len().to_string());
    for n in 1..=max_order {
        metrics.insert(
            format!("order{n}.classes"),
            classes
                .iter()
                .filter(|s| s.order() == n)
                .count()
                .to_string(),
        );
    }
    Ok(VerificationReport::new(
        format!("corpus up to order {max_order}"),
        claims,
        metrics,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::adjoin_zero;

    #[test]
    fn report_for_p() {
        let r = verify_semiring(&catalog_semiring(CatalogName::P));
        assert_eq!(r.status("Thm2.9"), Some(ClaimStatus::NotApplicable));
        assert_eq!(
            r.status("Cor-unique-coatom"),
            Some(ClaimStatus::NotApplicable)
        );
        // rho_P is not a congruence for the displayed tables.
        let lemma = r.claim("Lemma2.7").unwrap();
        assert_eq!(lemma.status, ClaimStatus::Fail);
        assert!(lemma.witness.is_some());
        assert_eq!(r.overall, ClaimStatus::Fail);
    }

    #[test]
    fn report_for_s4() {
        let r = verify_semiring(&catalog_semiring(CatalogName::S(4)));
        assert_eq!(r.status("Lemma2.4"), Some(ClaimStatus::Pass));
        assert!(r.passed(), "{}", r.to_text());
    }

    #[test]
    fn report_for_adjoined_zero() {
        let s = adjoin_zero(&catalog_semiring(CatalogName::S(3))).unwrap();
        let r = verify_semiring(&s);
        assert_eq!(r.status("Lemma2.7"), Some(ClaimStatus::Pass));
        assert_eq!(r.status("Remark3.5"), Some(ClaimStatus::Pass));
        assert!(r.passed(), "{}", r.to_text());
    }

    #[test]
    fn catalog_entries() {
        for k in 1..=8 {
            let r = verify_semiring(&catalog_semiring(CatalogName::S(k)));
            assert_eq!(r.status("Thm3.3"), Some(ClaimStatus::Pass));
            let failed: Vec<&str> = r
                .claims
                .iter()
                .filter(|c| c.status == ClaimStatus::Fail)
                .map(|c| c.claim_id.as_str())
                .collect();
            // S2 has greatest element 1, which is not bi-absorbing, and an
            // absorbing element 0: it is outside S5..S8.
            let expected: &[&str] = if k == 2 {
                &["Prop-non-bi-absorbing"]
            } else {
                &[]
            };
            assert_eq!(failed, expected, "S{k}\n{}", r.to_text());
        }
    }

    #[test]
    fn no_vacuous_passes() {
        let r = verify_semiring(&catalog_semiring(CatalogName::S(7)));
        assert_eq!(r.status("Lemma2.1.i"), Some(ClaimStatus::NotApplicable));
        assert!(r
            .claims
            .iter()
            .all(|c| c.status != ClaimStatus::NotApplicable || !c.detail.is_empty()));
        assert!(r
            .claims
            .iter()
            .all(|c| c.status != ClaimStatus::Fail || c.witness.is_some()));
        assert!(r.claims.windows(2).all(|w| w[0].claim_id <= w[1].claim_id));
    }

    #[test]
    fn classification_small() {
        let r = verify_classification(2, SearchMode::Restricted, &EnumerationOptions::default())
            .unwrap();
        for id in ["Thm3.3.order2", "Thm2.9", "Prop2.1.1", "Prop3.0"] {
            assert_eq!(
                r.status(id),
                Some(ClaimStatus::Pass),
                "{id}\n{}",
                r.to_text()
            );
        }
        let c = r.claim("Prop-non-bi-absorbing").unwrap();
        assert_eq!(c.status, ClaimStatus::Fail);
        assert_eq!(
            catalog_match(&FiniteSemiring::parse_text(c.witness.as_ref().unwrap()).unwrap()),
            Some(2)
        );
        assert_eq!(r.metrics["order2.classes"], "6");
        assert!(
            verify_classification(6, SearchMode::Restricted, &EnumerationOptions::default())
                .is_err()
        );
        assert!(
            verify_classification(5, SearchMode::Full, &EnumerationOptions::default()).is_err()
        );
    }

    #[test]
    fn corpus_order_two() {
        let r = verify_corpus_properties(2, &EnumerationOptions::default()).unwrap();
        assert_eq!(r.status("Remark1.v"), Some(ClaimStatus::Pass));
        assert_eq!(r.metrics["order2.classes"], "10");
    }
}
