//! Sparse bivariate polynomials over a [`Field`].

use std::collections::BTreeMap;
use std::fmt;

use crate::galois::{Elt, Field};
use crate::geometry::MonomialOrder;

/// Exponent pair (i, j) of the monomial x^i y^j; also used as an array index.
pub type Cell = (usize, usize);

/// A polynomial Σ c_(i,j) x^i y^j with no stored zero coefficients.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct BivariatePoly {
    terms: BTreeMap<Cell, Elt>,
}

impl BivariatePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(cell: Cell, coef: Elt) -> Self {
        let mut p = Self::zero();
        p.set(cell, coef);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Cell, Elt)>, field: &Field) -> Self {
        let mut p = Self::zero();
        for (c, v) in terms {
            p.add_term(c, v, field);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, cell: Cell) -> Elt {
        self.terms.get(&cell).copied().unwrap_or(Elt::ZERO)
    }

    pub fn set(&mut self, cell: Cell, coef: Elt) {
        if coef.is_zero() {
            self.terms.remove(&cell);
        } else {
            self.terms.insert(cell, coef);
        }
    }

    pub fn add_term(&mut self, cell: Cell, coef: Elt, field: &Field) {
        let v = field.add(self.coeff(cell), coef);
        self.set(cell, v);
    }

    /// Terms in ascending (i, j) lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (Cell, Elt)> + '_ {
        self.terms.iter().map(|(&c, &v)| (c, v))
    }

    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(Cell, Elt)> {
        self.terms()
            .max_by(|a, b| order.cmp(a.0, b.0))
    }

    pub fn leading_cell(&self, order: &MonomialOrder) -> Option<Cell> {
        self.leading_term(order).map(|t| t.0)
    }

    /// self + λ·other
    pub fn add_scaled(&mut self, other: &BivariatePoly, lambda: Elt, field: &Field) {
        if lambda.is_zero() {
            return;
        }
        for (c, v) in other.terms() {
            self.add_term(c, field.mul(v, lambda), field);
        }
    }

    pub fn scale(&self, lambda: Elt, field: &Field) -> BivariatePoly {
        let mut out = BivariatePoly::zero();
        out.add_scaled(self, lambda, field);
        out
    }

    /// Multiplication by the monomial x^s.0 y^s.1.
    pub fn shift(&self, s: Cell) -> BivariatePoly {
        BivariatePoly {
            terms: self.terms.iter().map(|(&(i, j), &v)| ((i + s.0, j + s.1), v)).collect(),
        }
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self, order: &MonomialOrder, field: &Field) -> BivariatePoly {
        match self.leading_term(order) {
            Some((_, lc)) => self.scale(field.inv(lc).expect("nonzero leading coefficient"), field),
            None => self.clone(),
        }
    }

    pub fn eval(&self, x: Elt, y: Elt, field: &Field) -> Elt {
        self.terms().fold(Elt::ZERO, |acc, ((i, j), v)| {
            let xi = field.pow(x, i as i64).expect("nonnegative exponent");
            let yj = field.pow(y, j as i64).expect("nonnegative exponent");
            field.add(acc, field.mul(v, field.mul(xi, yj)))
        })
    }

    /// Sorts terms from highest to lowest under `order`.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(Cell, Elt)> {
        let mut t: Vec<_> = self.terms().collect();
        t.sort_by(|a, b| order.cmp(b.0, a.0));
        t
    }

    /// Renders as e.g. `y^3 + y + a^4x^4`, highest term first.
    pub fn display<'a>(&'a self, order: &'a MonomialOrder) -> impl fmt::Display + 'a {
        PolyDisplay { poly: self, order }
    }
}

struct PolyDisplay<'a> {
    poly: &'a BivariatePoly,
    order: &'a MonomialOrder,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (k, ((i, j), v)) in self.poly.sorted_terms(self.order).into_iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if v != Elt::ONE || (i, j) == (0, 0) {
                write!(f, "a^{}", v.log())?;
            }
            for (var, e) in [('x', i), ('y', j)] {
                match e {
                    0 => {}
                    1 => write!(f, "{var}")?,
                    e => write!(f, "{var}^{e}")?,
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

/// Componentwise divisibility of monomials.
pub fn divides(a: Cell, b: Cell) -> bool {
    a.0 <= b.0 && a.1 <= b.1
}

