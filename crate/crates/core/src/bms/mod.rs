//! Gröbner bases of point ideals via the Berlekamp–Massey–Sakata algorithm,
//! recurrence extension of partially known arrays, and syndrome completion by
//! majority voting.

mod domain;
mod engine;

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use thiserror::Error;

use crate::galois::{Elt, Field};
use crate::geometry::{MonomialOrder, Point, SupportSet};
use crate::poly::{divides, BivariatePoly, Cell};
use crate::transform::{dft2, Array2D};

pub use domain::Domain;
use engine::Engine;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BmsError {
    #[error("ZeroCoordinatePoint: {0:?} has a zero coordinate")]
    ZeroCoordinatePoint(Point),
    #[error("IncompleteCover: no recurrence determines cell {0:?}")]
    IncompleteCover(Cell),
    #[error("InconsistentKnownValues: recurrence {element} fails at shift {cell:?}")]
    InconsistentKnownValues { element: usize, cell: Cell },
    #[error("DecodingFailure: {0}")]
    DecodingFailure(String),
    #[error("DimensionMismatch: expected side {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("ParseError: {0}")]
    Parse(String),
}

/// Which cells of a [`PartialArray`] are known.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Known {
    /// Every cell; the array is read periodically over all of N².
    Full,
    Cells(SupportSet),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialArray {
    values: Array2D,
    known: Known,
}

impl PartialArray {
    pub fn full(values: Array2D) -> PartialArray {
        PartialArray { values, known: Known::Full }
    }

    /// Keeps the values on `cells` and zeroes the rest.
    pub fn on(values: &Array2D, cells: SupportSet) -> PartialArray {
        let mut v = Array2D::zeros(values.side());
        for c in cells.iter() {
            v[c] = values[c];
        }
        PartialArray { values: v, known: Known::Cells(cells) }
    }

    pub fn values(&self) -> &Array2D {
        &self.values
    }

    pub fn known(&self) -> &Known {
        &self.known
    }

    pub fn is_known(&self, c: Cell) -> bool {
        let n = self.values.side();
        match &self.known {
            Known::Full => true,
            Known::Cells(s) => c.0 < n && c.1 < n && s.contains(c),
        }
    }

    pub fn get(&self, c: Cell) -> Option<Elt> {
        match &self.known {
            Known::Full => Some(self.values.get_wrapped(c)),
            Known::Cells(_) => self.is_known(c).then(|| self.values[c]),
        }
    }
}

/// A reduced Gröbner basis, elements monic and ascending by leading term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    elements: Vec<BivariatePoly>,
    delta_set: SupportSet,
    order: MonomialOrder,
}

impl GroebnerBasis {
    /// Inter-reduces `polys` into the reduced basis they generate when they
    /// already form a Gröbner basis.
    pub fn from_polys(polys: Vec<BivariatePoly>, order: &MonomialOrder, field: &Field) -> GroebnerBasis {
        let order = order.processing_order();
        let mut gs: Vec<BivariatePoly> = polys
            .into_iter()
            .filter(|p| !p.is_zero())
            .map(|p| p.monic(&order, field))
            .collect();
        gs.sort_by(|a, b| order.cmp(lt(a, &order), lt(b, &order)));
        let mut kept: Vec<BivariatePoly> = Vec::new();
        for g in gs {
            if !kept.iter().any(|k| divides(lt(k, &order), lt(&g, &order))) {
                kept.push(g);
            }
        }
        for idx in 0..kept.len() {
            let mut f = kept[idx].clone();
            let lead = lt(&f, &order);
            loop {
                let hit = f.sorted_terms(&order).into_iter().find_map(|(c, v)| {
                    if c == lead {
                        return None;
                    }
                    kept.iter()
                        .enumerate()
                        .find(|(k, g)| *k != idx && divides(lt(g, &order), c))
                        .map(|(_, g)| (c, v, g.clone()))
                });
                match hit {
                    Some((c, v, g)) => {
                        let s = lt(&g, &order);
                        f.add_scaled(&g.shift((c.0 - s.0, c.1 - s.1)), field.neg(v), field);
                    }
                    None => break,
                }
            }
            kept[idx] = f;
        }
        let delta_set = staircase(&kept.iter().map(|g| lt(g, &order)).collect::<Vec<_>>(), &order);
        GroebnerBasis { elements: kept, delta_set, order }
    }

    pub fn elements(&self) -> &[BivariatePoly] {
        &self.elements
    }

    pub fn delta_set(&self) -> &SupportSet {
        &self.delta_set
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn leading_cells(&self) -> Vec<Cell> {
        self.elements.iter().map(|g| lt(g, &self.order)).collect()
    }

    /// Text form: an `order` line, then one `element` block of
    /// `i j logcoef` lines per polynomial, highest term first.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        match self.order {
            MonomialOrder::Weighted { a, b } => writeln!(s, "order weighted {a} {b}").unwrap(),
            MonomialOrder::Hyperbolic => writeln!(s, "order hyperbolic").unwrap(),
        }
        for g in &self.elements {
            s.push_str("element\n");
            for ((i, j), v) in g.sorted_terms(&self.order) {
                writeln!(s, "{i} {j} {}", v.log()).unwrap();
            }
        }
        s.push_str("end\n");
        s
    }

    pub fn from_text(text: &str, field: &Field) -> Result<GroebnerBasis, BmsError> {
        let bad = |m: &str| BmsError::Parse(m.to_string());
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
        let head: Vec<&str> = lines.next().ok_or_else(|| bad("empty basis"))?.split_whitespace().collect();
        let order = match head.as_slice() {
            ["order", "weighted", a, b] => MonomialOrder::Weighted {
                a: a.parse().map_err(|_| bad("weight"))?,
                b: b.parse().map_err(|_| bad("weight"))?,
            },
            ["order", "hyperbolic"] => MonomialOrder::Hyperbolic,
            _ => return Err(bad("expected order line")),
        };
        let mut polys: Vec<BivariatePoly> = Vec::new();
        let mut ended = false;
        for line in lines.by_ref() {
            match line {
                "element" => polys.push(BivariatePoly::zero()),
                "end" => {
                    ended = true;
                    break;
                }
                _ => {
                    let nums: Vec<i64> = line
                        .split_whitespace()
                        .map(|t| t.parse().map_err(|_| bad(line)))
                        .collect::<Result<_, _>>()?;
                    let [i, j, v] = nums[..] else { return Err(bad(line)) };
                    if i < 0 || j < 0 {
                        return Err(bad(line));
                    }
                    let v = field.elt(v as i32).ok_or_else(|| bad(line))?;
                    polys
                        .last_mut()
                        .ok_or_else(|| bad("term before element"))?
                        .add_term((i as usize, j as usize), v, field);
                }
            }
        }
        if !ended {
            return Err(bad("missing end"));
        }
        Ok(GroebnerBasis::from_polys(polys, &order, field))
    }
}

fn lt(p: &BivariatePoly, order: &MonomialOrder) -> Cell {
    p.leading_cell(order).expect("nonzero polynomial")
}

/// Monomials divisible by no leading cell; empty if `leads` has no pure powers.
fn staircase(leads: &[Cell], order: &MonomialOrder) -> SupportSet {
    let xi = leads.iter().filter(|c| c.1 == 0).map(|c| c.0).min();
    let yj = leads.iter().filter(|c| c.0 == 0).map(|c| c.1).min();
    let cells = match (xi, yj) {
        (Some(xi), Some(yj)) => (0..xi)
            .flat_map(|i| (0..yj).map(move |j| (i, j)))
            .filter(|&c| !leads.iter().any(|&l| divides(l, c)))
            .collect(),
        _ => Vec::new(),
    };
    SupportSet::new(cells, order)
}

/// Runs the engine over `dom` on every index in order through `last`,
/// reading values from `get`; stops early before the first index `get`
/// cannot supply.
fn run_known(dom: &Domain, field: &Field, last: Cell, get: impl Fn(Cell) -> Option<Elt>) -> Vec<BivariatePoly> {
    let mut eng = Engine::new(dom, field);
    for p in dom.enumerate_through(last) {
        if get(p).is_none() {
            break;
        }
        let read = |c: Cell| get(c).expect("earlier cells are known");
        eng.step(p, &read).expect("auxiliary polynomial exists for fully known data");
    }
    eng.minimal().iter().map(|(_, g)| g.clone()).collect()
}

/// Minimal recurrences valid on the known prefix of `known`, as a reduced
/// Gröbner basis under `order` (Hyperbolic runs under its processing order).
///
/// A `Full` array is processed as a periodic array over N² through index
/// (2n, 2n); a `Cells` array up to the first unknown cell in order.
pub fn bms(known: &PartialArray, order: &MonomialOrder, field: &Field) -> GroebnerBasis {
    let dom = Domain::plane(order, field);
    let n = known.values().side();
    let last = match known.known() {
        Known::Full => {
            let box_cells = [(2 * n, 0), (0, 2 * n), (2 * n, 2 * n)];
            box_cells.into_iter().max_by(|a, b| dom.order().cmp(*a, *b)).expect("nonempty")
        }
        Known::Cells(s) => s.cells().last().copied().unwrap_or((0, 0)),
    };
    let polys = run_known(&dom, field, last, |c| known.get(c));
    GroebnerBasis::from_polys(polys, dom.order(), field)
}

/// Reduced Gröbner basis of the ideal of polynomials vanishing on `points`.
pub fn vanishing_ideal_basis(points: &[Point], order: &MonomialOrder, field: &Field) -> Result<GroebnerBasis, BmsError> {
    let mut ind = Array2D::for_field(field);
    for p in points {
        let c = p.cell().ok_or(BmsError::ZeroCoordinatePoint(*p))?;
        ind[c] = Elt::ONE;
    }
    let u = dft2(field, &ind).expect("array built for this field");
    Ok(bms(&PartialArray::full(u), order, field))
}

/// Cell visiting and recurrence choice for [`extend_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Schedule {
    /// Row-major visit, first basis element whose leading term divides the cell.
    RowMajor,
    /// Ascending order of the basis, last applicable element.
    OrderEnumeration,
}

/// Completes `partial` to the whole grid with the recurrences of `basis`,
/// indices wrapping modulo q−1.
pub fn extend(partial: &PartialArray, basis: &GroebnerBasis, field: &Field) -> Result<Array2D, BmsError> {
    extend_with(partial, basis, field, Schedule::OrderEnumeration)
}

pub fn extend_with(
    partial: &PartialArray,
    basis: &GroebnerBasis,
    field: &Field,
    schedule: Schedule,
) -> Result<Array2D, BmsError> {
    let n = field.order() as usize;
    let side = partial.values().side();
    if side != n {
        return Err(BmsError::DimensionMismatch { expected: n, got: side });
    }
    let order = basis.order();
    let leads = basis.leading_cells();
    let mut cells: Vec<Cell> = partial.values().cells().collect();
    if schedule == Schedule::OrderEnumeration {
        cells.sort_by(|a, b| order.cmp(*a, *b));
    }
    let mut memo: HashMap<Cell, Elt> = HashMap::new();
    for c in cells {
        fill(c, partial, basis, &leads, schedule, field, &mut memo)?;
    }
    let out = Array2D::from_fn(n, |c| memo[&c]);
    check_recurrences(&out, basis, field)?;
    Ok(out)
}

fn fill(
    c: Cell,
    partial: &PartialArray,
    basis: &GroebnerBasis,
    leads: &[Cell],
    schedule: Schedule,
    field: &Field,
    memo: &mut HashMap<Cell, Elt>,
) -> Result<Elt, BmsError> {
    if let Some(&v) = memo.get(&c) {
        return Ok(v);
    }
    if let Some(v) = partial.get(c) {
        memo.insert(c, v);
        return Ok(v);
    }
    let applicable = leads.iter().enumerate().filter(|(_, &l)| divides(l, c)).map(|(k, _)| k);
    let k = match schedule {
        Schedule::RowMajor => applicable.min(),
        Schedule::OrderEnumeration => applicable.max(),
    }
    .ok_or(BmsError::IncompleteCover(c))?;
    let g = &basis.elements()[k];
    let s = leads[k];
    let n = partial.values().side();
    let mut acc = Elt::ZERO;
    for (t, v) in g.terms() {
        if t == s {
            continue;
        }
        let r = ((t.0 + c.0 - s.0) % n, (t.1 + c.1 - s.1) % n);
        let val = fill(r, partial, basis, leads, schedule, field, memo)?;
        acc = field.add(acc, field.mul(v, val));
    }
    // leading coefficient is one
    let v = field.neg(acc);
    memo.insert(c, v);
    Ok(v)
}

/// Every element's recurrence holds at every cyclic shift.
fn check_recurrences(arr: &Array2D, basis: &GroebnerBasis, field: &Field) -> Result<(), BmsError> {
    for (k, g) in basis.elements().iter().enumerate() {
        for c in arr.cells() {
            let s = g
                .terms()
                .fold(Elt::ZERO, |acc, (t, v)| field.add(acc, field.mul(v, arr.get_wrapped((t.0 + c.0, t.1 + c.1)))));
            if !s.is_zero() {
                return Err(BmsError::InconsistentKnownValues { element: k, cell: c });
            }
        }
    }
    Ok(())
}

/// Outcome of syndrome completion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Completion {
    pub full: Array2D,
    /// Some voted value disagreed with the current minimal polynomials.
    pub voted: bool,
    pub delta_size: usize,
}

/// Fills every grid value of `partial` over `dom`, voting where values are
/// unknown, then completes the array through the domain relation.
pub(crate) fn complete_syndromes(
    partial: &PartialArray,
    dom: &Domain,
    max_errors: usize,
    field: &Field,
) -> Result<Completion, BmsError> {
    let n = field.order() as usize;
    let side = partial.values().side();
    if side != n {
        return Err(BmsError::DimensionMismatch { expected: n, got: side });
    }
    let primary = dom.primary_cells();
    let last = primary
        .iter()
        .copied()
        .max_by(|a, b| dom.order().cmp(*a, *b))
        .expect("nonempty grid");
    let mut vals = Array2D::zeros(n);
    let mut set: BTreeSet<Cell> = BTreeSet::new();
    let mut eng = Engine::new(dom, field);
    let mut voted = false;
    for p in dom.enumerate_through(last) {
        let c = dom.canon(p);
        let mut guessed = false;
        if c == p && !set.contains(&c) {
            let v = match partial.get(c) {
                Some(v) => v,
                None => {
                    guessed = true;
                    eng.vote(p, &|x| vals[x])
                        .ok_or_else(|| BmsError::DecodingFailure(format!("inconclusive vote at {p:?}")))?
                }
            };
            vals[c] = v;
            set.insert(c);
        }
        let changed = eng
            .step(p, &|x| vals[x])
            .map_err(|e| BmsError::DecodingFailure(format!("no auxiliary polynomial at {:?}", e.0)))?;
        voted |= guessed && changed;
        if eng.delta().len() > max_errors {
            return Err(BmsError::DecodingFailure(format!(
                "error locator has {} > {max_errors} points",
                eng.delta().len()
            )));
        }
    }
    for c in primary {
        if let Some(v) = partial.get(c) {
            if vals[c] != v {
                return Err(BmsError::DecodingFailure(format!("known value contradicted at {c:?}")));
            }
        }
    }
    Ok(Completion { full: dom.complete(&vals, field), voted, delta_size: eng.delta().len() })
}

/// Completes syndromes known on a downward-closed set (typically Φ_m) to the
/// whole grid, returning the error-locator basis and the completed array.
pub fn bms_with_voting(
    partial: &PartialArray,
    dom: &Domain,
    max_errors: usize,
    field: &Field,
) -> Result<(GroebnerBasis, Array2D), BmsError> {
    let done = complete_syndromes(partial, dom, max_errors, field)?;
    let basis = bms(&PartialArray::full(done.full.clone()), dom.order(), field);
    if basis.delta_set().len() > max_errors {
        return Err(BmsError::DecodingFailure(format!(
            "error locator has {} > {max_errors} points",
            basis.delta_set().len()
        )));
    }
    Ok((basis, done.full))
}

#[cfg(test)]
mod tests;
