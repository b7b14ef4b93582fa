//! Index monoids the BMS engine runs over.
//!
//! `Plane` is N² with componentwise addition, the ring K[x, y]. `Strip` is the
//! set {(i, j) : j < h} with addition reduced through a relation
//! y^h = Σ r_k x^{k0} y^{k1}; for a C_a^b curve this is the coordinate ring
//! with its Weierstrass semigroup, and for a Reed–Solomon code (y = 1) it is
//! K[x]. Array values are read periodically in every axis of period q−1.

use crate::galois::{Elt, Field};
use crate::geometry::{CodeKind, MonomialOrder};
use crate::poly::{divides, BivariatePoly, Cell};
use crate::transform::Array2D;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Domain {
    order: MonomialOrder,
    n: usize,
    kind: DomainKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum DomainKind {
    Plane,
    Strip {
        height: usize,
        /// x-exponent of the leading term of the reduced y^height
        lead_i: usize,
        /// y_pow[j] is y^j reduced into the strip, for j < 2·height
        y_pow: Vec<BivariatePoly>,
    },
}

impl Domain {
    /// N² under a monomial order (Hyperbolic is replaced by its processing order).
    pub fn plane(order: &MonomialOrder, field: &Field) -> Domain {
        Domain {
            order: order.processing_order(),
            n: field.order() as usize,
            kind: DomainKind::Plane,
        }
    }

    /// Strip of height `height` with y^height = `rhs`; `rhs` must only contain
    /// terms with j < height and have a unique leading term of the form x^b.
    pub fn strip(order: &MonomialOrder, field: &Field, height: usize, rhs: &BivariatePoly) -> Domain {
        assert!(height >= 1, "strip height must be positive");
        assert!(rhs.terms().all(|((_, j), _)| j < height), "relation must reduce y^h");
        let lead = rhs.leading_cell(order).expect("nonzero relation");
        assert_eq!(lead.1, 0, "relation leading term must be a power of x");

        let mut y_pow: Vec<BivariatePoly> = Vec::with_capacity(2 * height);
        for j in 0..2 * height {
            let p = if j < height {
                BivariatePoly::monomial((0, j), Elt::ONE)
            } else {
                let mut acc = BivariatePoly::zero();
                for ((ri, rj), v) in rhs.terms() {
                    // x^ri y^(rj + j − h) with rj + j − h < j
                    let e = rj + j - height;
                    acc.add_scaled(&y_pow[e].shift((ri, 0)), v, field);
                }
                acc
            };
            y_pow.push(p);
        }
        Domain {
            order: *order,
            n: field.order() as usize,
            kind: DomainKind::Strip { height, lead_i: lead.0, y_pow },
        }
    }

    /// The monoid that carries syndromes of the given code family.
    pub fn for_kind(kind: &CodeKind, field: &Field) -> Domain {
        match kind {
            CodeKind::Curve { curve, .. } => {
                let a = curve.a();
                let lc = curve.poly().coeff((0, a));
                let scale = field.neg(field.inv(lc).expect("curve is monic in y"));
                let mut rhs = BivariatePoly::zero();
                for (c, v) in curve.poly().terms() {
                    if c != (0, a) {
                        rhs.add_term(c, field.mul(v, scale), field);
                    }
                }
                Domain::strip(&curve.order(), field, a, &rhs)
            }
            CodeKind::Hcrs { .. } => Domain::plane(&MonomialOrder::Hyperbolic, field),
            CodeKind::Rs { .. } => Domain::strip(
                &MonomialOrder::Weighted { a: 1, b: 1 },
                field,
                1,
                &BivariatePoly::monomial((0, 0), Elt::ONE),
            ),
        }
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn side(&self) -> usize {
        self.n
    }

    pub fn is_plane(&self) -> bool {
        matches!(self.kind, DomainKind::Plane)
    }

    fn height(&self) -> Option<usize> {
        match &self.kind {
            DomainKind::Plane => None,
            DomainKind::Strip { height, .. } => Some(*height),
        }
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.height().is_none_or(|h| c.1 < h)
    }

    pub fn add(&self, x: Cell, y: Cell) -> Cell {
        let (mut i, mut j) = (x.0 + y.0, x.1 + y.1);
        if let DomainKind::Strip { height, lead_i, .. } = &self.kind {
            while j >= *height {
                j -= height;
                i += lead_i;
            }
        }
        (i, j)
    }

    /// The r with x ⊕ r = p, if any.
    pub fn sub(&self, p: Cell, x: Cell) -> Option<Cell> {
        match &self.kind {
            DomainKind::Plane => divides(x, p).then(|| (p.0 - x.0, p.1 - x.1)),
            DomainKind::Strip { height, lead_i, .. } => {
                let i = p.0.checked_sub(x.0)?;
                if p.1 >= x.1 {
                    Some((i, p.1 - x.1))
                } else {
                    let j = p.1 + height - x.1;
                    i.checked_sub(*lead_i).map(|i| (i, j))
                }
            }
        }
    }

    pub fn divides(&self, x: Cell, p: Cell) -> bool {
        self.sub(p, x).is_some()
    }

    /// Every σ with σ | p.
    pub fn divisors(&self, p: Cell) -> Vec<Cell> {
        let jmax = self.height().map_or(p.1 + 1, |h| h);
        (0..=p.0)
            .flat_map(|i| (0..jmax).map(move |j| (i, j)))
            .filter(|&s| self.divides(s, p))
            .collect()
    }

    pub fn generators(&self) -> Vec<Cell> {
        match self.height() {
            Some(1) => vec![(1, 0)],
            _ => vec![(1, 0), (0, 1)],
        }
    }

    /// φ_r · f reduced into the domain.
    pub fn mul_monomial(&self, f: &BivariatePoly, r: Cell, field: &Field) -> BivariatePoly {
        match &self.kind {
            DomainKind::Plane => f.shift(r),
            DomainKind::Strip { height, y_pow, .. } => {
                let mut out = BivariatePoly::zero();
                for ((i, j), v) in f.terms() {
                    let jj = j + r.1;
                    if jj < *height {
                        out.add_term((i + r.0, jj), v, field);
                    } else {
                        out.add_scaled(&y_pow[jj].shift((i + r.0, 0)), v, field);
                    }
                }
                out
            }
        }
    }

    /// Grid cell holding the value of index c.
    pub fn canon(&self, c: Cell) -> Cell {
        match self.kind {
            DomainKind::Plane => (c.0 % self.n, c.1 % self.n),
            DomainKind::Strip { .. } => (c.0 % self.n, c.1),
        }
    }

    /// Σ coef · E[canon(c)].
    pub fn eval(&self, f: &BivariatePoly, get: impl Fn(Cell) -> Elt, field: &Field) -> Elt {
        f.terms()
            .fold(Elt::ZERO, |acc, (c, v)| field.add(acc, field.mul(v, get(self.canon(c)))))
    }

    /// Domain cells ordered ascending, up to and including `last`.
    pub fn enumerate_through(&self, last: Cell) -> Vec<Cell> {
        let w = self.order.weight(last);
        self.order
            .enumerate_up_to(w)
            .into_iter()
            .filter(|&c| self.contains(c) && self.order.cmp(c, last).is_le())
            .collect()
    }

    /// Cells of the grid that carry independent values: the whole grid for
    /// `Plane`, the rows j < h for `Strip`.
    pub fn primary_cells(&self) -> Vec<Cell> {
        let jmax = self.height().map_or(self.n, |h| h.min(self.n));
        (0..self.n).flat_map(|i| (0..jmax).map(move |j| (i, j))).collect()
    }

    /// Fills the rows j ≥ h of a strip array through the relation; identity on `Plane`.
    pub fn complete(&self, arr: &Array2D, field: &Field) -> Array2D {
        let h = match self.height() {
            None => return arr.clone(),
            Some(h) => h,
        };
        let mut out = arr.clone();
        let mut cache: Vec<BivariatePoly> = (0..h).map(|j| BivariatePoly::monomial((0, j), Elt::ONE)).collect();
        for j in h..self.n {
            // y^j = y · y^(j−1)
            let p = self.mul_monomial(&cache[j - 1], (0, 1), field);
            cache.push(p);
        }
        for (i, j) in arr.cells() {
            if j >= h {
                let f = cache[j].shift((i, 0));
                out[(i, j)] = self.eval(&f, |c| arr[c], field);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::preset;

    #[test]
    fn hermitian_strip_arithmetic() {
        let (f, kind) = preset("hermitian-q9", None).unwrap();
        let d = Domain::for_kind(&kind, &f);
        assert_eq!(d.add((0, 2), (0, 2)), (4, 1));
        assert_eq!(d.sub((4, 1), (0, 2)), Some((0, 2)));
        assert_eq!(d.sub((1, 0), (0, 1)), None);
        // weights add
        let o = d.order();
        for x in [(0, 1), (2, 2), (5, 0)] {
            for y in [(1, 2), (0, 2), (3, 1)] {
                assert_eq!(o.weight(d.add(x, y)), o.weight(x) + o.weight(y));
            }
        }
        // y³ = x⁴ − y on the curve
        let y3 = d.mul_monomial(&BivariatePoly::monomial((0, 2), Elt::ONE), (0, 1), &f);
        let expect = BivariatePoly::from_terms([((4, 0), Elt::ONE), ((0, 1), f.neg(Elt::ONE))], &f);
        assert_eq!(y3, expect);
        assert_eq!(d.divisors((4, 1)).len(), 11);
    }

    #[test]
    fn rs_strip_is_univariate() {
        let (f, kind) = preset("rs-q9", None).unwrap();
        let d = Domain::for_kind(&kind, &f);
        assert_eq!(d.generators(), vec![(1, 0)]);
        assert_eq!(d.add((2, 0), (3, 0)), (5, 0));
        assert_eq!(d.divisors((3, 0)).len(), 4);
        assert_eq!(d.enumerate_through((3, 0)), vec![(0, 0), (1, 0), (2, 0), (3, 0)]);
    }

    #[test]
    fn complete_matches_point_sums() {
        let (f, kind) = preset("hermitian-q9", None).unwrap();
        let d = Domain::for_kind(&kind, &f);
        let pts = kind.points(&f);
        let full = Array2D::from_fn(8, |(i, j)| {
            pts.iter().take(5).fold(Elt::ZERO, |acc, p| {
                let v = f.mul(f.pow(p.x, i as i64).unwrap(), f.pow(p.y, j as i64).unwrap());
                f.add(acc, v)
            })
        });
        let mut strip = full.clone();
        for (i, j) in full.cells() {
            if j >= 3 {
                strip[(i, j)] = Elt::ZERO;
            }
        }
        assert_eq!(d.complete(&strip, &f), full);
    }
}
