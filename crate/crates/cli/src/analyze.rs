use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use semiring_core::congruences::{
    congruence_lattice, is_congruence_simple, monolith, DEFAULT_LATTICE_ORDER_CAP,
};
use semiring_core::constructions::{
    catalog_by_name, end0_semiring, end_semiring, endomorphisms, CatalogValue, SemilatticeTable,
};
use semiring_core::ideals::{is_bi_ideal_simple, is_ideal_simple, Simplicity};
use semiring_core::morphisms::canonical_form;
use semiring_core::tables::PredicateReport;
use semiring_core::tables::{
    classify_elements, parse_single_table, predicates, table_count, ElementProfile, Flag,
};
use semiring_core::verifier::{catalog_match, verify_semiring_named, VerificationReport};
use semiring_core::{FiniteSemiring, Result};
use serde::Serialize;

/// A semiring or semilattice read from a file or the catalog.
pub enum Source {
    Semiring {
        label: String,
        semiring: FiniteSemiring,
        names: Vec<String>,
    },
    Semilattice {
        label: String,
        lattice: SemilatticeTable,
    },
}

impl Source {
    /// `catalog:NAME` or a path to a table file.
    pub fn resolve(spec: &str) -> Result<Source> {
        if let Some(name) = spec.strip_prefix("catalog:") {
            let entry = catalog_by_name(name)?;
            let label = format!("catalog:{}", entry.name);
            return Ok(match entry.value {
                CatalogValue::Semiring(semiring) => Source::Semiring {
                    label,
                    semiring,
                    names: entry.element_names,
                },
                CatalogValue::Semilattice(lattice) => Source::Semilattice { label, lattice },
            });
        }
        Self::from_text(spec, &fs::read_to_string(Path::new(spec))?)
    }

    pub fn from_text(label: &str, text: &str) -> Result<Source> {
        if table_count(text) == 1 {
            let lattice = SemilatticeTable::new(parse_single_table(text)?)?;
            return Ok(Source::Semilattice {
                label: label.to_string(),
                lattice,
            });
        }
        let semiring = FiniteSemiring::parse_text(text)?;
        let names = semiring.elements().map(|i| i.to_string()).collect();
        Ok(Source::Semiring {
            label: label.to_string(),
            semiring,
            names,
        })
    }

    pub fn label(&self) -> &str {
        match self {
            Source::Semiring { label, .. } | Source::Semilattice { label, .. } => label,
        }
    }

    pub fn to_text(&self) -> String {
        match self {
            Source::Semiring { semiring, .. } => semiring.to_text(),
            Source::Semilattice { lattice, .. } => lattice.join_table().to_text(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct SemiringAnalysis {
    pub source: String,
    pub order: usize,
    pub element_names: Vec<String>,
    pub canonical_digest: Option<String>,
    pub catalog_match: Option<String>,
    pub predicates: PredicateReport,
    pub elements: Vec<ElementProfile>,
    pub congruence_simple: bool,
    pub ideal_simple: Simplicity,
    pub bi_ideal_simple: Simplicity,
    pub monolith: Option<Vec<Vec<usize>>>,
    /// Absent above the lattice cap.
    pub congruence_lattice_size: Option<usize>,
    pub verification: VerificationReport,
}

#[derive(Debug, Serialize)]
pub struct SemilatticeAnalysis {
    pub source: String,
    pub order: usize,
    pub greatest: Option<usize>,
    pub least: Option<usize>,
    pub endomorphisms: usize,
    pub end_order: Option<usize>,
    pub end0_order: Option<usize>,
}

#[derive(Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Analysis {
    Semiring(Box<SemiringAnalysis>),
    Semilattice(SemilatticeAnalysis),
}

impl Analysis {
    pub fn failed(&self) -> bool {
        match self {
            Analysis::Semiring(a) => !a.verification.passed(),
            Analysis::Semilattice(_) => false,
        }
    }
}

pub fn analyze(source: &Source) -> Analysis {
    match source {
        Source::Semiring {
            label,
            semiring: s,
            names,
        } => {
            let lattice_size = (s.order() <= DEFAULT_LATTICE_ORDER_CAP)
                .then(|| congruence_lattice(s).map(|l| l.len()).ok())
                .flatten();
            Analysis::Semiring(Box::new(SemiringAnalysis {
                source: label.clone(),
                order: s.order(),
                element_names: names.clone(),
                canonical_digest: canonical_form(s).ok().map(|c| c.digest_hex()),
                catalog_match: catalog_match(s).map(|k| format!("S{k}")),
                predicates: predicates(s),
                elements: classify_elements(s),
                congruence_simple: is_congruence_simple(s),
                ideal_simple: is_ideal_simple(s),
                bi_ideal_simple: is_bi_ideal_simple(s),
                monolith: monolith(s).partition.map(|p| p.blocks()),
                congruence_lattice_size: lattice_size,
                verification: verify_semiring_named(s, label),
            }))
        }
        Source::Semilattice { label, lattice } => Analysis::Semilattice(SemilatticeAnalysis {
            source: label.clone(),
            order: lattice.order(),
            greatest: lattice.greatest(),
            least: lattice.least(),
            endomorphisms: endomorphisms(lattice).len(),
            end_order: end_semiring(lattice).ok().map(|(s, _)| s.order()),
            end0_order: end0_semiring(lattice).ok().map(|(s, _)| s.order()),
        }),
    }
}

fn named(names: &[String], xs: &[usize]) -> String {
    let v: Vec<&str> = xs
        .iter()
        .map(|&x| names.get(x).map_or("?", String::as_str))
        .collect();
    format!("{{{}}}", v.join(","))
}

fn flag_line(out: &mut String, label: &str, f: &Flag, names: &[String]) {
    let _ = write!(out, "  {label:<20} {}", f.holds);
    if let Some(w) = &f.counterexample {
        let v: Vec<&str> = w
            .iter()
            .map(|&x| names.get(x).map_or("?", String::as_str))
            .collect();
        let _ = write!(out, " (counterexample ({}))", v.join(", "));
    }
    out.push('\n');
}

fn simplicity_line(out: &mut String, label: &str, s: &Simplicity, names: &[String]) {
    let _ = write!(out, "{label}: {}", s.simple);
    if let Some(w) = &s.witness {
        let _ = write!(out, " (witness {})", named(names, w));
    }
    out.push('\n');
}

pub fn render(a: &Analysis, source: &Source) -> String {
    let mut out = String::new();
    match a {
        Analysis::Semilattice(l) => {
            let _ = writeln!(out, "semilattice {} of order {}", l.source, l.order);
            let _ = writeln!(out, "greatest: {:?}", l.greatest);
            let _ = writeln!(out, "least: {:?}", l.least);
            let _ = writeln!(out, "endomorphisms: {}", l.endomorphisms);
            let _ = writeln!(
                out,
                "End(L) order: {}",
                l.end_order.map_or("n/a".into(), |n| n.to_string())
            );
            let _ = writeln!(
                out,
                "End0(L) order: {}",
                l.end0_order.map_or("n/a".into(), |n| n.to_string())
            );
        }
        Analysis::Semiring(a) => {
            let names = &a.element_names;
            let _ = writeln!(out, "semiring {} of order {}", a.source, a.order);
            out.push_str(&source.to_text());
            let _ = writeln!(out, "elements: {}", names.join(" "));
            if let Some(d) = &a.canonical_digest {
                let _ = writeln!(out, "canonical digest: {d}");
            }
            if let Some(m) = &a.catalog_match {
                let _ = writeln!(out, "isomorphic to: {m}");
            }
            out.push_str("predicates:\n");
            let p = &a.predicates;
            flag_line(&mut out, "mult-idempotent", &p.mult_idempotent, names);
            flag_line(&mut out, "add-idempotent", &p.add_idempotent, names);
            flag_line(&mut out, "bi-idempotent", &p.bi_idempotent, names);
            flag_line(&mut out, "commutative", &p.commutative_mul, names);
            flag_line(&mut out, "add-cancellative", &p.add_cancellative, names);
            flag_line(&mut out, "boolean-ring", &p.boolean_ring, names);
            out.push_str("element profiles:\n");
            for e in &a.elements {
                let mut tags = Vec::new();
                for (on, tag) in [
                    (e.is_zero, "zero"),
                    (e.is_bi_absorbing, "bi-absorbing"),
                    (e.is_mult_absorbing, "mult-absorbing"),
                    (
                        e.is_left_mult_absorbing && !e.is_mult_absorbing,
                        "left-mult-absorbing",
                    ),
                    (
                        e.is_right_mult_absorbing && !e.is_mult_absorbing,
                        "right-mult-absorbing",
                    ),
                    (e.is_add_absorbing, "add-absorbing"),
                    (e.is_add_neutral, "add-neutral"),
                    (e.is_mult_neutral, "mult-neutral"),
                ] {
                    if on {
                        tags.push(tag);
                    }
                }
                let tags = if tags.is_empty() {
                    "-".to_string()
                } else {
                    tags.join(", ")
                };
                let _ = writeln!(out, "  {:<4} {tags}", names[e.element]);
            }
            let _ = writeln!(out, "congruence-simple: {}", a.congruence_simple);
            simplicity_line(&mut out, "ideal-simple", &a.ideal_simple, names);
            simplicity_line(&mut out, "bi-ideal-simple", &a.bi_ideal_simple, names);
            match &a.monolith {
                Some(blocks) => {
                    let b: Vec<String> = blocks.iter().map(|b| named(names, b)).collect();
                    let _ = writeln!(out, "monolith: {}", b.join("|"));
                }
                None => out.push_str("monolith: none\n"),
            }
            match a.congruence_lattice_size {
                Some(n) => {
                    let _ = writeln!(out, "congruences: {n}");
                }
                None => {
                    let _ = writeln!(
                        out,
                        "congruences: not computed above order {DEFAULT_LATTICE_ORDER_CAP}"
                    );
                }
            }
            out.push_str(&a.verification.to_text());
        }
    }
    out
}
