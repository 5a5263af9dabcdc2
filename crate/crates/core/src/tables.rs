//! Finite semirings stored as a pair of Cayley tables over `0..n`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest order representable; cells are stored as bytes.
pub const MAX_TABLE_ORDER: usize = u8::MAX as usize;

/// An `n × n` operation table, row-major. `get(i, j)` is `i ∘ j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OpTable {
    order: usize,
    cells: Vec<u8>,
}

impl OpTable {
    pub fn new(order: usize, cells: Vec<usize>) -> Result<Self> {
        if order == 0 {
            return Err(Error::EmptyTable);
        }
        if order > MAX_TABLE_ORDER {
            return Err(Error::OrderTooLarge {
                order,
                bound: MAX_TABLE_ORDER,
            });
        }
        if cells.len() != order * order {
            return Err(Error::Parse {
                line: 0,
                message: format!("expected {} cells, got {}", order * order, cells.len()),
            });
        }
        let mut bytes = Vec::with_capacity(cells.len());
        for (k, &v) in cells.iter().enumerate() {
            if v >= order {
                return Err(Error::EntryOutOfRange {
                    row: k / order,
                    col: k % order,
                    value: v,
                    order,
                });
            }
            bytes.push(v as u8);
        }
        Ok(OpTable {
            order,
            cells: bytes,
        })
    }

    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        let mut cells = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Parse {
                    line: i,
                    message: format!("row {i} has {} entries, expected {n}", row.len()),
                });
            }
            cells.extend_from_slice(row);
        }
        OpTable::new(n, cells)
    }

    pub fn from_fn(order: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let cells = (0..order * order)
            .map(|k| f(k / order, k % order))
            .collect();
        OpTable::new(order, cells)
    }

    /// Builds a table from raw bytes the caller guarantees are in range.
    pub(crate) fn from_bytes(order: usize, cells: Vec<u8>) -> Self {
        debug_assert_eq!(cells.len(), order * order);
        debug_assert!(cells.iter().all(|&c| (c as usize) < order));
        OpTable { order, cells }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> usize {
        self.cells[i * self.order + j] as usize
    }

    pub fn cells(&self) -> &[u8] {
        &self.cells
    }

    pub fn row(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.cells[i * self.order..(i + 1) * self.order]
            .iter()
            .map(|&c| c as usize)
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.order).map(|i| self.row(i).collect()).collect()
    }

    pub fn transpose(&self) -> OpTable {
        let n = self.order;
        let cells = (0..n * n)
            .map(|k| self.cells[(k % n) * n + k / n])
            .collect();
        OpTable::from_bytes(n, cells)
    }

    pub fn is_associative(&self) -> bool {
        first_associativity_failure(self).is_none()
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.order;
        (0..n).all(|i| (i + 1..n).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn is_idempotent(&self) -> bool {
        (0..self.order).all(|i| self.get(i, i) == i)
    }

    /// The order followed by the rows; the single-table text format.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.order);
        self.write_rows(&mut out);
        out
    }

    fn write_rows(&self, out: &mut String) {
        for i in 0..self.order {
            let row: Vec<String> = self.row(i).map(|v| v.to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
    }
}

fn first_associativity_failure(t: &OpTable) -> Option<(usize, usize, usize)> {
    let n = t.order;
    for x in 0..n {
        for y in 0..n {
            let xy = t.get(x, y);
            for z in 0..n {
                if t.get(xy, z) != t.get(x, t.get(y, z)) {
                    return Some((x, y, z));
                }
            }
        }
    }
    None
}

/// A validated finite semiring: commutative associative addition, associative
/// multiplication, two-sided distributivity. No neutral elements are assumed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FiniteSemiring {
    add: OpTable,
    mul: OpTable,
}

/// Validates the semiring axioms over all `n³` triples.
///
/// Axioms are checked in a fixed order (additive associativity, additive
/// commutativity, multiplicative associativity, left then right
/// distributivity) and the first failing axiom is reported with its
/// lexicographically smallest witness.
pub fn check_axioms(add: OpTable, mul: OpTable) -> Result<FiniteSemiring> {
    if add.order != mul.order {
        return Err(Error::OrderMismatch {
            add: add.order,
            mul: mul.order,
        });
    }
    let n = add.order;
    if let Some((x, y, z)) = first_associativity_failure(&add) {
        return Err(Error::NotAssociativeAdd { x, y, z });
    }
    for x in 0..n {
        for y in 0..n {
            if add.get(x, y) != add.get(y, x) {
                return Err(Error::NotCommutativeAdd { x, y });
            }
        }
    }
    if let Some((x, y, z)) = first_associativity_failure(&mul) {
        return Err(Error::NotAssociativeMul { x, y, z });
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if mul.get(x, add.get(y, z)) != add.get(mul.get(x, y), mul.get(x, z)) {
                    return Err(Error::NotLeftDistributive { x, y, z });
                }
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if mul.get(add.get(y, z), x) != add.get(mul.get(y, x), mul.get(z, x)) {
                    return Err(Error::NotRightDistributive { x, y, z });
                }
            }
        }
    }
    Ok(FiniteSemiring { add, mul })
}

impl FiniteSemiring {
    pub fn new(add: OpTable, mul: OpTable) -> Result<Self> {
        check_axioms(add, mul)
    }

    pub fn from_rows(add: &[Vec<usize>], mul: &[Vec<usize>]) -> Result<Self> {
        check_axioms(OpTable::from_rows(add)?, OpTable::from_rows(mul)?)
    }

    /// Skips validation; only for tables produced by code that already
    /// enforces the axioms.
    pub(crate) fn from_tables_unchecked(add: OpTable, mul: OpTable) -> Self {
        debug_assert!(check_axioms(add.clone(), mul.clone()).is_ok());
        FiniteSemiring { add, mul }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.add.order
    }

    #[inline]
    pub fn add(&self, x: usize, y: usize) -> usize {
        self.add.get(x, y)
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul.get(x, y)
    }

    pub fn add_table(&self) -> &OpTable {
        &self.add
    }

    pub fn mul_table(&self) -> &OpTable {
        &self.mul
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    pub fn is_left_mult_absorbing(&self, w: usize) -> bool {
        self.elements().all(|x| self.mul(w, x) == w)
    }

    pub fn is_right_mult_absorbing(&self, w: usize) -> bool {
        self.elements().all(|x| self.mul(x, w) == w)
    }

    pub fn is_mult_absorbing(&self, w: usize) -> bool {
        self.is_left_mult_absorbing(w) && self.is_right_mult_absorbing(w)
    }

    pub fn is_add_absorbing(&self, w: usize) -> bool {
        self.elements().all(|x| self.add(x, w) == w)
    }

    pub fn is_add_neutral(&self, e: usize) -> bool {
        self.elements().all(|x| self.add(x, e) == x)
    }

    pub fn is_mult_neutral(&self, e: usize) -> bool {
        self.elements()
            .all(|x| self.mul(x, e) == x && self.mul(e, x) == x)
    }

    /// The multiplicatively absorbing element `w`, if any.
    pub fn mult_absorbing(&self) -> Option<usize> {
        self.elements().find(|&w| self.is_mult_absorbing(w))
    }

    /// The zero `0_S`: multiplicatively absorbing and additively neutral.
    pub fn zero(&self) -> Option<usize> {
        self.mult_absorbing().filter(|&w| self.is_add_neutral(w))
    }

    /// The bi-absorbing element `o_S`.
    pub fn bi_absorbing(&self) -> Option<usize> {
        self.mult_absorbing().filter(|&w| self.is_add_absorbing(w))
    }

    pub fn add_neutral(&self) -> Option<usize> {
        self.elements().find(|&e| self.is_add_neutral(e))
    }

    pub fn mult_neutral(&self) -> Option<usize> {
        self.elements().find(|&e| self.is_mult_neutral(e))
    }

    pub fn is_mult_idempotent(&self) -> bool {
        self.mul.is_idempotent()
    }

    pub fn is_add_idempotent(&self) -> bool {
        self.add.is_idempotent()
    }

    pub fn is_commutative(&self) -> bool {
        self.mul.is_commutative()
    }

    /// Serializes in the table text format: the order, the addition rows, a
    /// blank line, the multiplication rows.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.order());
        self.add.write_rows(&mut out);
        out.push('\n');
        self.mul.write_rows(&mut out);
        out
    }

    /// Parses the table text format and validates the axioms.
    pub fn parse_text(text: &str) -> Result<Self> {
        let (add, mul) = parse_table_pair(text)?;
        check_axioms(add, mul)
    }
}

impl fmt::Display for FiniteSemiring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Parses the two tables of the text format without checking axioms.
pub fn parse_table_pair(text: &str) -> Result<(OpTable, OpTable)> {
    let mut v = parse_tables(text, &["addition", "multiplication"])?;
    let mul = v.pop().expect("two tables");
    let add = v.pop().expect("two tables");
    Ok((add, mul))
}

/// Parses a file holding a single table: the order, then its rows.
pub fn parse_single_table(text: &str) -> Result<OpTable> {
    Ok(parse_tables(text, &["join"])?.pop().expect("one table"))
}

/// Number of tables in a table file, judged by its non-blank line count.
pub fn table_count(text: &str) -> usize {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let n: usize = match lines.next().and_then(|l| l.trim().parse().ok()) {
        Some(n) if n > 0 => n,
        _ => return 0,
    };
    lines.count() / n
}

fn parse_tables(text: &str, names: &[&str]) -> Result<Vec<OpTable>> {
    let mut lines = text.lines().enumerate().peekable();
    let parse_err = |line: usize, message: String| Error::Parse {
        line: line + 1,
        message,
    };

    let (first_no, first) = loop {
        match lines.next() {
            Some((_, l)) if l.trim().is_empty() => continue,
            Some((no, l)) => break (no, l),
            None => return Err(parse_err(0, "empty input".into())),
        }
    };
    let n: usize = first.trim().parse().map_err(|_| {
        parse_err(
            first_no,
            format!("expected order, found `{}`", first.trim()),
        )
    })?;
    if n == 0 {
        return Err(parse_err(first_no, "order must be positive".into()));
    }
    if n > MAX_TABLE_ORDER {
        return Err(Error::OrderTooLarge {
            order: n,
            bound: MAX_TABLE_ORDER,
        });
    }

    let total = text.lines().count();
    let read_block =
        |lines: &mut std::iter::Peekable<std::iter::Enumerate<std::str::Lines<'_>>>,
         what: &str|
         -> Result<OpTable> {
            let mut cells = Vec::with_capacity(n * n);
            let mut row = 0;
            while row < n {
                let (no, l) = lines.next().ok_or_else(|| {
                    parse_err(total, format!("{what} table has {row} rows, expected {n}"))
                })?;
                if l.trim().is_empty() {
                    if row == 0 {
                        continue;
                    }
                    return Err(parse_err(
                        no,
                        format!("{what} table has {row} rows, expected {n}"),
                    ));
                }
                let entries: Vec<&str> = l.split_whitespace().collect();
                if entries.len() != n {
                    return Err(parse_err(
                        no,
                        format!("{what} row has {} entries, expected {n}", entries.len()),
                    ));
                }
                for tok in entries {
                    let v: usize = tok
                        .parse()
                        .map_err(|_| parse_err(no, format!("bad integer `{tok}`")))?;
                    if v >= n {
                        return Err(parse_err(
                            no,
                            format!("entry {v} out of range 0..{}", n - 1),
                        ));
                    }
                    cells.push(v);
                }
                row += 1;
            }
            OpTable::new(n, cells)
        };

    let mut tables = Vec::with_capacity(names.len());
    for (k, what) in names.iter().enumerate() {
        if k > 0 {
            match lines.peek() {
                Some((_, l)) if l.trim().is_empty() => {}
                Some((no, _)) => {
                    return Err(parse_err(
                        *no,
                        "expected a blank line between tables".into(),
                    ))
                }
                None => {
                    return Err(parse_err(
                        first_no + k * (n + 1),
                        format!("missing {what} table"),
                    ))
                }
            }
        }
        tables.push(read_block(&mut lines, what)?);
    }
    for (no, l) in lines {
        if !l.trim().is_empty() {
            return Err(parse_err(
                no,
                format!("trailing content after {} table", names[names.len() - 1]),
            ));
        }
    }
    Ok(tables)
}

/// Outcome of one predicate scan. A false flag carries the elements that
/// refute it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flag {
    pub holds: bool,
    pub counterexample: Option<Vec<usize>>,
}

impl Flag {
    fn from_failure(failure: Option<Vec<usize>>) -> Self {
        Flag {
            holds: failure.is_none(),
            counterexample: failure,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PredicateReport {
    /// Witness `[x]` with `x·x ≠ x`.
    pub mult_idempotent: Flag,
    /// Witness `[x]` with `x+x ≠ x`.
    pub add_idempotent: Flag,
    /// Witness `[x]` failing either idempotency.
    pub bi_idempotent: Flag,
    /// Witness `[x, y]` with `x·y ≠ y·x`.
    pub commutative_mul: Flag,
    /// Witness `[a, b, c]` with `a ≠ b` and `a+c = b+c`.
    pub add_cancellative: Flag,
    /// Witness is the first failing ingredient: a cancellation triple, a
    /// non-idempotent `[x]`, a non-commuting `[x, y]`, an element without
    /// additive inverse `[x]`, or `[]` when no zero exists.
    pub boolean_ring: Flag,
}

pub fn predicates(s: &FiniteSemiring) -> PredicateReport {
    let n = s.order();
    let not_mul_idem = s.elements().find(|&x| s.mul(x, x) != x).map(|x| vec![x]);
    let not_add_idem = s.elements().find(|&x| s.add(x, x) != x).map(|x| vec![x]);
    let not_comm = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .find(|&(x, y)| s.mul(x, y) != s.mul(y, x))
        .map(|(x, y)| vec![x, y]);
    let mut not_cancel = None;
    'scan: for a in 0..n {
        for b in 0..n {
            if a == b {
                continue;
            }
            for c in 0..n {
                if s.add(a, c) == s.add(b, c) {
                    not_cancel = Some(vec![a, b, c]);
                    break 'scan;
                }
            }
        }
    }

    let ring_failure = not_cancel
        .clone()
        .or_else(|| not_mul_idem.clone())
        .or_else(|| not_comm.clone())
        .or_else(|| match s.zero() {
            None => Some(vec![]),
            Some(z) => s
                .elements()
                .find(|&x| !s.elements().any(|y| s.add(x, y) == z))
                .map(|x| vec![x]),
        });

    PredicateReport {
        bi_idempotent: Flag::from_failure(not_mul_idem.clone().or_else(|| not_add_idem.clone())),
        mult_idempotent: Flag::from_failure(not_mul_idem),
        add_idempotent: Flag::from_failure(not_add_idem),
        commutative_mul: Flag::from_failure(not_comm),
        add_cancellative: Flag::from_failure(not_cancel),
        boolean_ring: Flag::from_failure(ring_failure),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementProfile {
    pub element: usize,
    pub is_left_mult_absorbing: bool,
    pub is_right_mult_absorbing: bool,
    pub is_mult_absorbing: bool,
    pub is_add_absorbing: bool,
    pub is_bi_absorbing: bool,
    pub is_zero: bool,
    pub is_mult_neutral: bool,
    pub is_add_neutral: bool,
}

pub fn classify_elements(s: &FiniteSemiring) -> Vec<ElementProfile> {
    s.elements()
        .map(|x| {
            let left = s.is_left_mult_absorbing(x);
            let right = s.is_right_mult_absorbing(x);
            let add_abs = s.is_add_absorbing(x);
            let add_neutral = s.is_add_neutral(x);
            ElementProfile {
                element: x,
                is_left_mult_absorbing: left,
                is_right_mult_absorbing: right,
                is_mult_absorbing: left && right,
                is_add_absorbing: add_abs,
                is_bi_absorbing: left && right && add_abs,
                is_zero: left && right && add_neutral,
                is_mult_neutral: s.is_mult_neutral(x),
                is_add_neutral: add_neutral,
            }
        })
        .collect()
}

/// `S^op`: same addition, multiplication `a ∗ b = b · a`.
pub fn opposite(s: &FiniteSemiring) -> FiniteSemiring {
    FiniteSemiring::from_tables_unchecked(s.add.clone(), s.mul.transpose())
}

/// Componentwise product; the pair `(i, j)` is element `i·|T| + j`.
pub fn direct_product(s: &FiniteSemiring, t: &FiniteSemiring) -> Result<FiniteSemiring> {
    let m = t.order();
    let n = s.order() * m;
    if n > MAX_TABLE_ORDER {
        return Err(Error::OrderTooLarge {
            order: n,
            bound: MAX_TABLE_ORDER,
        });
    }
    let pair = |x: usize| (x / m, x % m);
    let add = OpTable::from_fn(n, |x, y| {
        let ((a, b), (c, d)) = (pair(x), pair(y));
        s.add(a, c) * m + t.add(b, d)
    })?;
    let mul = OpTable::from_fn(n, |x, y| {
        let ((a, b), (c, d)) = (pair(x), pair(y));
        s.mul(a, c) * m + t.mul(b, d)
    })?;
    Ok(FiniteSemiring::from_tables_unchecked(add, mul))
}

/// Checks `b·a·b = b` whenever `b ∈ BaB` in the band `B`.
///
/// Returns `Ok(None)` when the law holds and `Ok(Some((a, b)))` for the first
/// violating pair. The law is a theorem for bands, so a violation indicates a
/// defect elsewhere.
pub fn band_law_check(mul: &OpTable) -> Result<Option<(usize, usize)>> {
    if let Some((x, y, z)) = first_associativity_failure(mul) {
        return Err(Error::NotABand(format!("not associative at ({x},{y},{z})")));
    }
    if let Some(x) = (0..mul.order).find(|&x| mul.get(x, x) != x) {
        return Err(Error::NotABand(format!("{x}·{x} ≠ {x}")));
    }
    let n = mul.order;
    for a in 0..n {
        let mut principal = vec![false; n];
        for x in 0..n {
            let xa = mul.get(x, a);
            for y in 0..n {
                principal[mul.get(xa, y)] = true;
            }
        }
        for b in (0..n).filter(|&b| principal[b]) {
            if mul.get(mul.get(b, a), b) != b {
                return Ok(Some((a, b)));
            }
        }
    }
    Ok(None)
}
