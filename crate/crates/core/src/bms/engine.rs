//! Sakata's algorithm over a [`Domain`], with Feng–Rao majority voting.

use std::collections::{BTreeMap, BTreeSet};

use crate::galois::{Elt, Field};
use crate::poly::{BivariatePoly, Cell};

use super::domain::Domain;

/// Minimal polynomial set F (one per corner of the complement of Δ) and the
/// auxiliary set G (one per maximal element of Δ).
pub(crate) struct Engine<'a> {
    dom: &'a Domain,
    field: &'a Field,
    delta: BTreeSet<Cell>,
    /// (leading index, polynomial)
    minimal: Vec<(Cell, BivariatePoly)>,
    /// (span, polynomial)
    aux: Vec<(Cell, BivariatePoly)>,
}

/// Raised when no auxiliary polynomial covers a required span.
#[derive(Debug)]
pub(crate) struct MissingAuxiliary(pub Cell);

impl<'a> Engine<'a> {
    pub fn new(dom: &'a Domain, field: &'a Field) -> Self {
        Engine {
            dom,
            field,
            delta: BTreeSet::new(),
            minimal: vec![((0, 0), BivariatePoly::monomial((0, 0), Elt::ONE))],
            aux: Vec::new(),
        }
    }

    pub fn delta(&self) -> &BTreeSet<Cell> {
        &self.delta
    }

    pub fn minimal(&self) -> &[(Cell, BivariatePoly)] {
        &self.minimal
    }

    fn disc(&self, f: &BivariatePoly, lead: Cell, p: Cell, get: &impl Fn(Cell) -> Elt) -> Elt {
        let r = self.dom.sub(p, lead).expect("leading index divides p");
        self.dom.eval(&self.dom.mul_monomial(f, r, self.field), get, self.field)
    }

    fn corners(&self, delta: &BTreeSet<Cell>) -> Vec<Cell> {
        if delta.is_empty() {
            return vec![(0, 0)];
        }
        let gens = self.dom.generators();
        let cand: BTreeSet<Cell> = delta
            .iter()
            .flat_map(|&d| gens.iter().map(move |&g| (d, g)))
            .map(|(d, g)| self.dom.add(d, g))
            .filter(|c| !delta.contains(c))
            .collect();
        let mut out: Vec<Cell> = cand
            .iter()
            .copied()
            .filter(|&c| !cand.iter().any(|&o| o != c && self.dom.divides(o, c)))
            .collect();
        out.sort_by(|x, y| self.dom.order().cmp(*x, *y));
        out
    }

    /// Processes index p, whose value (and that of every earlier index) `get`
    /// returns. Reports whether any minimal polynomial failed.
    pub fn step(&mut self, p: Cell, get: &impl Fn(Cell) -> Elt) -> Result<bool, MissingAuxiliary> {
        let f = self.field;
        let mut failing: BTreeMap<Cell, Elt> = BTreeMap::new();
        for (t, poly) in &self.minimal {
            if self.dom.divides(*t, p) {
                let d = self.disc(poly, *t, p, get);
                if !d.is_zero() {
                    failing.insert(*t, d);
                }
            }
        }
        if failing.is_empty() {
            return Ok(false);
        }

        let mut delta = self.delta.clone();
        for t in failing.keys() {
            let span = self.dom.sub(p, *t).expect("divides");
            delta.extend(self.dom.divisors(span));
        }

        let mut next = Vec::new();
        for t2 in self.corners(&delta) {
            let checked = self.dom.divides(t2, p);
            // prefer a polynomial that passes at p, then the largest leading index
            let (t, poly) = self
                .minimal
                .iter()
                .filter(|(t, _)| self.dom.divides(*t, t2))
                .max_by(|a, b| {
                    let pa = !(checked && failing.contains_key(&a.0));
                    let pb = !(checked && failing.contains_key(&b.0));
                    pa.cmp(&pb).then(self.dom.order().cmp(a.0, b.0))
                })
                .expect("every new corner is a multiple of an old one");
            let mut h = self.dom.mul_monomial(poly, self.dom.sub(t2, *t).expect("divides"), f);
            if checked && failing.contains_key(t) {
                let d_h = self.disc(&h, t2, p, get);
                if !d_h.is_zero() {
                    let need = self.dom.sub(p, t2).expect("divides");
                    let (c, g) = self
                        .aux
                        .iter()
                        .find(|(c, _)| self.dom.divides(need, *c))
                        .ok_or(MissingAuxiliary(t2))?;
                    let e = self.dom.sub(*c, need).expect("divides");
                    let g2 = self.dom.mul_monomial(g, e, f);
                    let r = self.dom.sub(p, t2).expect("divides");
                    let d_g = self.dom.eval(&self.dom.mul_monomial(&g2, r, f), get, f);
                    let lam = f.neg(f.div(d_h, d_g).expect("auxiliary discrepancy is nonzero"));
                    h.add_scaled(&g2, lam, f);
                }
            }
            next.push((t2, h));
        }

        for (t, poly) in &self.minimal {
            if failing.contains_key(t) {
                let span = self.dom.sub(p, *t).expect("divides");
                self.aux.retain(|(c, _)| *c != span);
                self.aux.push((span, poly.clone()));
            }
        }
        let spans: Vec<Cell> = self.aux.iter().map(|a| a.0).collect();
        self.aux
            .retain(|(c, _)| !spans.iter().any(|&o| o != *c && self.dom.divides(*c, o)));
        self.aux.sort_by(|x, y| self.dom.order().cmp(y.0, x.0));

        self.minimal = next;
        self.delta = delta;
        Ok(true)
    }

    /// Majority vote for the unknown value at p. `None` when the vote is
    /// empty or tied.
    pub fn vote(&self, p: Cell, get: &impl Fn(Cell) -> Elt) -> Option<Elt> {
        let f = self.field;
        let mut tally: BTreeMap<Elt, usize> = BTreeMap::new();
        for s in self.dom.divisors(p) {
            if self.delta.contains(&s) {
                continue;
            }
            let rest = self.dom.sub(p, s).expect("divisor");
            if self.delta.contains(&rest) {
                continue;
            }
            let (t, poly) = self
                .minimal
                .iter()
                .filter(|(t, _)| self.dom.divides(*t, s))
                .max_by(|a, b| self.dom.order().cmp(a.0, b.0))
                .expect("a cell outside Δ is a multiple of a corner");
            let h = self.dom.mul_monomial(poly, self.dom.sub(s, *t).expect("divides"), f);
            let prod = self.dom.mul_monomial(&h, rest, f);
            let with = |v: Elt| self.dom.eval(&prod, |c| if c == p { v } else { get(c) }, f);
            let d0 = with(Elt::ZERO);
            let slope = f.sub(with(Elt::ONE), d0);
            let value = f.neg(f.div(d0, slope).ok()?);
            *tally.entry(value).or_default() += 1;
        }
        let best = tally.values().copied().max()?;
        let mut winners = tally.iter().filter(|(_, &n)| n == best);
        let (&v, _) = winners.next()?;
        winners.next().is_none().then_some(v)
    }
}
