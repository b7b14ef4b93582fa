use crate::bms::{extend, PartialArray};
use crate::galois::Elt;
use crate::geometry::Point;
use crate::linalg;
use crate::transform::{dft2, idft2, Array2D};

use super::{CodeSpec, CodecError, Mode};

fn check_len(expected: usize, got: usize) -> Result<(), CodecError> {
    if expected != got {
        return Err(CodecError::WrongLength { expected, got });
    }
    Ok(())
}

fn grid_cell(p: &Point) -> (usize, usize) {
    p.cell().expect("code points have nonzero coordinates")
}

/// x^i · y^j with 0⁰ = 1.
fn monomial_at(spec: &CodeSpec, p: &Point, (i, j): (usize, usize)) -> Elt {
    let f = spec.field();
    let xi = f.pow(p.x, i as i64).expect("nonnegative exponent");
    let yj = f.pow(p.y, j as i64).expect("nonnegative exponent");
    f.mul(xi, yj)
}

/// Rows: points, then zero points. Columns: Φ_m in order.
pub fn check_matrix(spec: &CodeSpec) -> Vec<Vec<Elt>> {
    spec.points()
        .iter()
        .chain(spec.zero_points())
        .map(|p| spec.phi_m().iter().map(|c| monomial_at(spec, p, c)).collect())
        .collect()
}

/// Places a word of length n on the grid at its points' cells.
fn embed(spec: &CodeSpec, word: &[Elt]) -> Array2D {
    let f = spec.field();
    let mut arr = Array2D::for_field(f);
    for (p, &v) in spec.points().iter().zip(word) {
        let c = grid_cell(p);
        arr[c] = f.add(arr[c], v);
    }
    arr
}

fn read_points(spec: &CodeSpec, arr: &Array2D) -> Vec<Elt> {
    spec.points().iter().map(|p| arr[grid_cell(p)]).collect()
}

/// Syndromes of a word: the Φ_m values in order and the full transform.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Syndromes {
    pub on_phi_m: Vec<Elt>,
    pub full: Array2D,
}

impl Syndromes {
    pub fn is_zero(&self) -> bool {
        self.on_phi_m.iter().all(|v| v.is_zero())
    }
}

pub fn syndromes(spec: &CodeSpec, word: &[Elt]) -> Result<Syndromes, CodecError> {
    check_len(spec.n(), word.len())?;
    let full = dft2(spec.field(), &embed(spec, word)).expect("grid array");
    let on_phi_m = spec.phi_m().iter().map(|c| full[c]).collect();
    Ok(Syndromes { on_phi_m, full })
}

/// Systematic codeword by linear algebra on the check matrix; ℘ positions
/// are solved for given the information on ℘′.
pub fn encode_matrix_oracle(spec: &CodeSpec, info: &[Elt]) -> Result<Vec<Elt>, CodecError> {
    check_len(spec.k(), info.len())?;
    let f = spec.field();
    let h = check_matrix(spec);
    let r = spec.phi_m().len();
    let a: Vec<Vec<Elt>> = (0..r).map(|l| spec.wp().iter().map(|&k| h[k][l]).collect()).collect();
    let b: Vec<Elt> = (0..r)
        .map(|l| {
            let s = spec.wp_prime().iter().zip(info).fold(Elt::ZERO, |acc, (&k, &v)| f.add(acc, f.mul(h[k][l], v)));
            f.neg(s)
        })
        .collect();
    let red = linalg::solve(f, &a, &b).ok_or(CodecError::RankDeficient)?;
    let mut word = vec![Elt::ZERO; spec.n()];
    for (&k, &v) in spec.wp_prime().iter().zip(info) {
        word[k] = v;
    }
    for (&k, &v) in spec.wp().iter().zip(&red) {
        word[k] = v;
    }
    Ok(word)
}

/// The full IDFT output of the non-systematic encoder; zero off the points.
pub fn encode_nonsystematic_grid(spec: &CodeSpec, info: &[Elt]) -> Result<Array2D, CodecError> {
    check_len(spec.k(), info.len())?;
    let f = spec.field();
    let mut arr = Array2D::for_field(f);
    for (&c, &v) in spec.info_cells().iter().zip(info) {
        arr[c] = v;
    }
    let spectrum = extend(&PartialArray::on(&arr, spec.basis_all().delta_set().clone()), spec.basis_all(), f)?;
    Ok(idft2(f, &spectrum).expect("grid array"))
}

/// Information on Φ∖Φ_m, extended by the recurrences of all points, then
/// inverse transformed.
pub fn encode_nonsystematic(spec: &CodeSpec, info: &[Elt]) -> Result<Vec<Elt>, CodecError> {
    let grid = encode_nonsystematic_grid(spec, info)?;
    let mut on_points = Array2D::for_field(spec.field());
    for p in spec.points() {
        on_points[grid_cell(p)] = Elt::ONE;
    }
    if let Some(c) = grid.cells().find(|&c| on_points[c].is_zero() && !grid[c].is_zero()) {
        return Err(CodecError::EncodingInvariant(format!("nonzero value off the points at {c:?}")));
    }
    Ok(read_points(spec, &grid))
}

/// Shared tail of the systematic encoders: y − ext_℘(y|Φ_m), inverse transformed.
fn subtract_redundancy(spec: &CodeSpec, y: &Array2D) -> Result<Array2D, CodecError> {
    let f = spec.field();
    let breve = extend(&PartialArray::on(y, spec.phi_m().clone()), spec.basis_wp(), f)?;
    Ok(idft2(f, &y.sub(&breve, f)).expect("grid array"))
}

/// Information verbatim on ℘′, redundancy on ℘ from the ℘ recurrences.
pub fn encode_systematic(spec: &CodeSpec, info: &[Elt]) -> Result<Vec<Elt>, CodecError> {
    check_len(spec.k(), info.len())?;
    let mut word = vec![Elt::ZERO; spec.n()];
    for (&k, &v) in spec.wp_prime().iter().zip(info) {
        word[k] = v;
    }
    let tilde = dft2(spec.field(), &embed(spec, &word)).expect("grid array");
    Ok(read_points(spec, &subtract_redundancy(spec, &tilde)?))
}

pub fn encode(spec: &CodeSpec, mode: Mode, info: &[Elt]) -> Result<Vec<Elt>, CodecError> {
    match mode {
        Mode::Nonsystematic => encode_nonsystematic(spec, info),
        Mode::Systematic => encode_systematic(spec, info),
    }
}

/// Transform-domain image of a zero-coordinate point: value · x^i y^j, 0⁰ = 1.
pub fn analogue_dft(spec: &CodeSpec, point: &Point, value: Elt) -> Result<Array2D, CodecError> {
    if !point.has_zero() || !spec.zero_points().contains(point) {
        return Err(CodecError::NotAZeroPoint(*point));
    }
    let f = spec.field();
    Ok(Array2D::from_fn(f.order() as usize, |c| f.mul(value, monomial_at(spec, point, c))))
}

/// Systematic encoding of the lengthened code. `info` lists the ℘′ symbols
/// followed by one symbol per zero point; the output lists the n point
/// values followed by the zero-point values.
pub fn encode_systematic_extended(spec: &CodeSpec, info: &[Elt]) -> Result<Vec<Elt>, CodecError> {
    let z = spec.zero_points().len();
    check_len(spec.k() + z, info.len())?;
    let f = spec.field();
    let (main, tail) = info.split_at(spec.k());
    let mut word = vec![Elt::ZERO; spec.n()];
    for (&k, &v) in spec.wp_prime().iter().zip(main) {
        word[k] = v;
    }
    let mut y = dft2(f, &embed(spec, &word)).expect("grid array");
    let mut analogues = Array2D::for_field(f);
    for (p, &v) in spec.zero_points().iter().zip(tail) {
        analogues = analogues.add(&analogue_dft(spec, p, v)?, f);
    }
    y = y.add(&analogues, f);
    let body = subtract_redundancy(spec, &y)?;
    let body = body.sub(&idft2(f, &analogues).expect("grid array"), f);
    let mut out = read_points(spec, &body);
    out.extend_from_slice(tail);
    Ok(out)
}
