//! Curves, rational points, monomial orders and the defining sets Φ_m of the
//! three code families (codes on C_a^b curves, hyperbolic cascaded RS codes and
//! plain RS codes).

use std::cmp::Ordering;
use std::collections::BTreeSet;

use thiserror::Error;

use crate::galois::{Elt, Field};
use crate::poly::{BivariatePoly, Cell};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeometryError {
    #[error("MTooSmall: m = {m} must exceed 2g-2 = {bound}")]
    MTooSmall { m: usize, bound: isize },
    #[error("BadCurve: {0}")]
    BadCurve(String),
    #[error("UnknownPreset: {0}")]
    UnknownPreset(String),
    #[error("BadRedundancy: redundancy {r} must lie in 1..{n}")]
    BadRedundancy { r: usize, n: usize },
}

/// Total order on exponent pairs.
///
/// `Weighted { a, b }` compares the weight a·i + b·j and breaks ties by the
/// second exponent; with a, b ≥ 1 it is a monomial order. For a C_a^b curve it
/// is the pole-order at infinity, and on the strip j < a no ties occur.
/// `Hyperbolic` compares (i+1)(j+1), ties again by smaller j first. It is not
/// compatible with multiplication, so recurrence machinery runs under
/// [`MonomialOrder::processing_order`] instead.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Weighted { a: usize, b: usize },
    Hyperbolic,
}

impl MonomialOrder {
    pub fn weight(&self, (i, j): Cell) -> usize {
        match *self {
            MonomialOrder::Weighted { a, b } => a * i + b * j,
            MonomialOrder::Hyperbolic => (i + 1) * (j + 1),
        }
    }

    pub fn cmp(&self, x: Cell, y: Cell) -> Ordering {
        self.weight(x)
            .cmp(&self.weight(y))
            .then(x.1.cmp(&y.1))
            .then(x.0.cmp(&y.0))
    }

    pub fn is_monomial_order(&self) -> bool {
        matches!(self, MonomialOrder::Weighted { a, b } if *a > 0 && *b > 0)
    }

    /// The monomial order used for Gröbner bases and recurrences.
    pub fn processing_order(&self) -> MonomialOrder {
        match self {
            MonomialOrder::Hyperbolic => MonomialOrder::Weighted { a: 1, b: 1 },
            o => *o,
        }
    }

    /// All cells of N² whose weight is at most `max_weight`, ascending.
    /// Only meaningful for weighted orders.
    pub fn enumerate_up_to(&self, max_weight: usize) -> Vec<Cell> {
        let (a, b) = match *self {
            MonomialOrder::Weighted { a, b } => (a, b),
            MonomialOrder::Hyperbolic => (1, 1),
        };
        let mut cells = Vec::new();
        for j in 0..=max_weight / b {
            for i in 0..=(max_weight - b * j) / a {
                cells.push((i, j));
            }
        }
        cells.sort_by(|x, y| self.cmp(*x, *y));
        cells
    }
}

/// An ordered set of exponent pairs (a defining set Φ_m or a staircase).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportSet {
    cells: Vec<Cell>,
    members: BTreeSet<Cell>,
}

impl SupportSet {
    pub fn new(cells: impl IntoIterator<Item = Cell>, order: &MonomialOrder) -> SupportSet {
        let members: BTreeSet<Cell> = cells.into_iter().collect();
        let mut cells: Vec<Cell> = members.iter().copied().collect();
        cells.sort_by(|x, y| order.cmp(*x, *y));
        SupportSet { cells, members }
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn iter(&self) -> impl Iterator<Item = Cell> + '_ {
        self.cells.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.members.contains(&c)
    }

    pub fn is_subset(&self, other: &SupportSet) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn same_members(&self, other: &SupportSet) -> bool {
        self.members == other.members
    }

    pub fn is_downward_closed(&self) -> bool {
        self.cells.iter().all(|&(i, j)| {
            (i == 0 || self.contains((i - 1, j))) && (j == 0 || self.contains((i, j - 1)))
        })
    }
}

/// A C_a^b curve: coprime a < b, defining polynomial with leading forms y^a
/// and x^b and all other terms of weight below ab.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveSpec {
    a: usize,
    b: usize,
    poly: BivariatePoly,
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl CurveSpec {
    pub fn new(a: usize, b: usize, poly: BivariatePoly) -> Result<CurveSpec, GeometryError> {
        if a == 0 || a >= b || gcd(a, b) != 1 {
            return Err(GeometryError::BadCurve(format!(
                "need coprime 0 < a < b, got a={a}, b={b}"
            )));
        }
        if poly.coeff((0, a)).is_zero() || poly.coeff((b, 0)).is_zero() {
            return Err(GeometryError::BadCurve("missing y^a or x^b term".into()));
        }
        for ((i, j), _) in poly.terms() {
            let leading = (i, j) == (0, a) || (i, j) == (b, 0);
            if !leading && a * i + b * j >= a * b {
                return Err(GeometryError::BadCurve(format!(
                    "term x^{i}y^{j} has weight >= ab"
                )));
            }
        }
        Ok(CurveSpec { a, b, poly })
    }

    /// The Hermitian curve y^r + y = x^(r+1) over GF(r²).
    pub fn hermitian(field: &Field) -> Result<CurveSpec, GeometryError> {
        if !field.m().is_multiple_of(2) {
            return Err(GeometryError::BadCurve("Hermitian curve needs q = r^2".into()));
        }
        let r = field.p().pow(field.m() / 2) as usize;
        let poly = BivariatePoly::from_terms(
            [
                ((0, r), Elt::ONE),
                ((0, 1), Elt::ONE),
                ((r + 1, 0), field.neg(Elt::ONE)),
            ],
            field,
        );
        CurveSpec::new(r, r + 1, poly)
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn poly(&self) -> &BivariatePoly {
        &self.poly
    }

    pub fn genus(&self) -> usize {
        (self.a - 1) * (self.b - 1) / 2
    }

    pub fn order(&self) -> MonomialOrder {
        MonomialOrder::Weighted { a: self.a, b: self.b }
    }
}

/// An affine point; coordinates may be zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: Elt,
    pub y: Elt,
}

impl Point {
    pub fn new(x: Elt, y: Elt) -> Point {
        Point { x, y }
    }

    pub fn has_zero(&self) -> bool {
        self.x.is_zero() || self.y.is_zero()
    }

    /// Array cell (log x, log y) for points on the torus.
    pub fn cell(&self) -> Option<Cell> {
        (!self.has_zero()).then(|| (self.x.log() as usize, self.y.log() as usize))
    }

    pub fn from_cell((r, s): Cell) -> Point {
        Point::new(Elt::from_log(r as i32), Elt::from_log(s as i32))
    }
}

/// Affine zeros of `poly`, ascending by (log x, log y) with zero (log −1) first.
pub fn enumerate_points(poly: &BivariatePoly, field: &Field, include_zero: bool) -> Vec<Point> {
    let mut pts = Vec::new();
    for x in field.elements() {
        for y in field.elements() {
            let p = Point::new(x, y);
            if !include_zero && p.has_zero() {
                continue;
            }
            if poly.eval(x, y, field).is_zero() {
                pts.push(p);
            }
        }
    }
    pts
}

/// Defining set Φ_m.
///
/// Weighted: (i, j) with i < q−1, j < `strip`, a·i + b·j ≤ m.
/// Hyperbolic: (i, j) with i, j < q−1 and (i+1)(j+1) < m.
pub fn phi_m(order: &MonomialOrder, m: usize, field: &Field, strip: usize) -> SupportSet {
    let n = field.order() as usize;
    let cells = match order {
        MonomialOrder::Weighted { .. } => (0..n)
            .flat_map(|i| (0..strip.min(n)).map(move |j| (i, j)))
            .filter(|&c| order.weight(c) <= m)
            .collect::<Vec<_>>(),
        MonomialOrder::Hyperbolic => (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&c| order.weight(c) < m)
            .collect(),
    };
    SupportSet::new(cells, order)
}

/// Which family a code belongs to, with its design parameter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CodeKind {
    /// Code on the nonzero-coordinate points of a C_a^b curve, vanishing on Φ_m.
    Curve { curve: CurveSpec, m: usize },
    /// Hyperbolic cascaded RS code on the full (q−1)×(q−1) grid.
    Hcrs { m: usize },
    /// RS code of length q−1 with `redundancy` roots α⁰..α^(r−1).
    Rs { redundancy: usize },
}

impl CodeKind {
    pub fn name(&self) -> &'static str {
        match self {
            CodeKind::Curve { .. } => "curve",
            CodeKind::Hcrs { .. } => "hcrs",
            CodeKind::Rs { .. } => "rs",
        }
    }

    /// Order defining Φ_m.
    pub fn order(&self) -> MonomialOrder {
        match self {
            CodeKind::Curve { curve, .. } => curve.order(),
            CodeKind::Hcrs { .. } => MonomialOrder::Hyperbolic,
            CodeKind::Rs { .. } => MonomialOrder::Weighted { a: 1, b: 1 },
        }
    }

    pub fn validate(&self, field: &Field) -> Result<(), GeometryError> {
        match self {
            CodeKind::Curve { curve, m } => {
                let bound = 2 * curve.genus() as isize - 2;
                if (*m as isize) <= bound {
                    return Err(GeometryError::MTooSmall { m: *m, bound });
                }
            }
            CodeKind::Hcrs { .. } => {}
            CodeKind::Rs { redundancy } => {
                let n = field.order() as usize;
                if *redundancy == 0 || *redundancy >= n {
                    return Err(GeometryError::BadRedundancy { r: *redundancy, n });
                }
            }
        }
        Ok(())
    }

    pub fn phi_m(&self, field: &Field) -> SupportSet {
        match self {
            CodeKind::Curve { curve, m } => phi_m(&self.order(), *m, field, curve.a()),
            CodeKind::Hcrs { m } => phi_m(&MonomialOrder::Hyperbolic, *m, field, 0),
            CodeKind::Rs { redundancy } => phi_m(&self.order(), redundancy - 1, field, 1),
        }
    }

    /// Code locations with nonzero coordinates, in canonical order.
    pub fn points(&self, field: &Field) -> Vec<Point> {
        let n = field.order() as usize;
        match self {
            CodeKind::Curve { curve, .. } => enumerate_points(curve.poly(), field, false),
            CodeKind::Hcrs { .. } => (0..n)
                .flat_map(|r| (0..n).map(move |s| Point::from_cell((r, s))))
                .collect(),
            CodeKind::Rs { .. } => (0..n).map(|h| Point::from_cell((h, 0))).collect(),
        }
    }

    /// Curve points with a zero coordinate (lengthening positions).
    pub fn zero_points(&self, field: &Field) -> Vec<Point> {
        match self {
            CodeKind::Curve { curve, .. } => enumerate_points(curve.poly(), field, true)
                .into_iter()
                .filter(Point::has_zero)
                .collect(),
            _ => Vec::new(),
        }
    }

    /// Correction capability the decoder guarantees.
    pub fn designed_capability(&self) -> usize {
        match self {
            // Feng–Rao bound m − 2g + 2 for one-point codes
            CodeKind::Curve { curve, m } => {
                let d = *m as isize - 2 * curve.genus() as isize + 2;
                ((d - 1).max(0) / 2) as usize
            }
            CodeKind::Hcrs { m } => m.saturating_sub(1) / 2,
            CodeKind::Rs { redundancy } => redundancy / 2,
        }
    }
}

/// (n, k) for a code family over `field`.
pub fn code_params(kind: &CodeKind, field: &Field) -> Result<(usize, usize), GeometryError> {
    kind.validate(field)?;
    let n = kind.points(field).len();
    let r = kind.phi_m(field).len();
    Ok((n, n - r))
}

pub const PRESETS: [&str; 3] = ["hermitian-q9", "hcrs-q9", "rs-q9"];

/// Named parameter sets over GF(9) built from x²+x+2. `m` overrides the
/// design parameter (the redundancy for `rs-q9`).
pub fn preset(name: &str, m: Option<usize>) -> Result<(Field, CodeKind), GeometryError> {
    let field = Field::gf9();
    let kind = match name {
        "hermitian-q9" => CodeKind::Curve {
            curve: CurveSpec::hermitian(&field)?,
            m: m.unwrap_or(11),
        },
        "hcrs-q9" => CodeKind::Hcrs { m: m.unwrap_or(9) },
        "rs-q9" => CodeKind::Rs { redundancy: m.unwrap_or(4) },
        other => return Err(GeometryError::UnknownPreset(other.to_string())),
    };
    kind.validate(&field)?;
    Ok((field, kind))
}
