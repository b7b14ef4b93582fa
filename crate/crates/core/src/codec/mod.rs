//! Encoders and decoders for the three code families.
//!
//! A [`CodeSpec`] fixes the code: its points, the defining set Φ_m, a split of
//! the points into redundant positions ℘ and information positions ℘′, and
//! the Gröbner bases of the ideals of ℘ and of all points.

mod decode;
mod encode;
mod rs;

use std::fmt::Write as _;

use thiserror::Error;

use crate::bms::{vanishing_ideal_basis, BmsError, Domain, GroebnerBasis};
use crate::galois::{Elt, Field, FieldError};
use crate::geometry::{CodeKind, CurveSpec, GeometryError, MonomialOrder, Point, SupportSet};
use crate::poly::{BivariatePoly, Cell};

pub use decode::{decode, Decoded};
pub use encode::{
    analogue_dft, check_matrix, encode, encode_matrix_oracle, encode_nonsystematic, encode_nonsystematic_grid,
    encode_systematic, encode_systematic_extended, syndromes, Syndromes,
};
pub use rs::{rs_dh_sequence, rs_encode_dh, rs_encode_euclid, rs_encode_idft, rs_gen_poly};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CodecError {
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error("FieldError: {0}")]
    Field(#[from] FieldError),
    #[error(transparent)]
    Bms(#[from] BmsError),
    #[error("NonGenericSupport: no redundant-point set has staircase Φ_m")]
    NonGenericSupport,
    #[error("RankDeficient: parity checks are singular on the redundant positions")]
    RankDeficient,
    #[error("NotAZeroPoint: {0:?} is not a zero-coordinate point of the curve")]
    NotAZeroPoint(Point),
    #[error("ExtendedDecodeUnsupported: decoding of lengthened words is not supported")]
    ExtendedDecodeUnsupported,
    #[error("WrongLength: expected {expected} symbols, got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error("DecodingFailure: {0}")]
    DecodingFailure(String),
    #[error("EncodingInvariant: {0}")]
    EncodingInvariant(String),
    #[error("ParseError: {0}")]
    Parse(String),
}

impl CodecError {
    /// Leading token of the message, e.g. `DecodingFailure`.
    pub fn reason(&self) -> String {
        let msg = self.to_string();
        msg.split(':').next().unwrap_or("Error").trim().to_string()
    }
}

/// Where information symbols live.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// On the cells Φ∖Φ_m of the transform domain.
    Nonsystematic,
    /// Verbatim at the information points ℘′.
    Systematic,
}

/// An immutable, fully precomputed code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeSpec {
    field: Field,
    kind: CodeKind,
    points: Vec<Point>,
    zero_points: Vec<Point>,
    phi_m: SupportSet,
    wp: Vec<usize>,
    wp_prime: Vec<usize>,
    basis_wp: GroebnerBasis,
    basis_all: GroebnerBasis,
    info_cells: Vec<Cell>,
    domain: Domain,
}

impl CodeSpec {
    /// Builds the code, choosing ℘ so that the staircase of I_℘ is Φ_m.
    pub fn new(field: Field, kind: CodeKind) -> Result<CodeSpec, CodecError> {
        kind.validate(&field)?;
        let points = kind.points(&field);
        let phi_m = kind.phi_m(&field);
        let order = kind.order().processing_order();
        let generic = |wp: &[usize]| -> Result<Option<GroebnerBasis>, CodecError> {
            let pts: Vec<Point> = wp.iter().map(|&k| points[k]).collect();
            let b = vanishing_ideal_basis(&pts, &order, &field)?;
            Ok(b.delta_set().same_members(&phi_m).then_some(b))
        };
        let r = phi_m.len();
        let n = points.len();
        let candidates: Vec<Vec<usize>> = match &kind {
            CodeKind::Hcrs { .. } => {
                vec![(0..n).filter(|&k| phi_m.contains(points[k].cell().expect("grid point"))).collect()]
            }
            _ => {
                let first: Vec<usize> = (0..r).collect();
                let mut c = vec![first.clone()];
                for alt in r..n {
                    let mut w = first.clone();
                    w[r - 1] = alt;
                    c.push(w);
                }
                c
            }
        };
        for wp in candidates {
            if generic(&wp)?.is_some() {
                return CodeSpec::with_wp(field, kind, wp);
            }
        }
        // greedy: add points in order while the staircase stays inside Φ_m
        let mut wp = Vec::new();
        for k in 0..n {
            wp.push(k);
            let pts: Vec<Point> = wp.iter().map(|&k| points[k]).collect();
            let b = vanishing_ideal_basis(&pts, &order, &field)?;
            if !b.delta_set().is_subset(&phi_m) {
                wp.pop();
            }
            if wp.len() == r {
                break;
            }
        }
        if wp.len() == r && generic(&wp)?.is_some() {
            return CodeSpec::with_wp(field, kind, wp);
        }
        Err(CodecError::NonGenericSupport)
    }

    /// Builds the code with a given redundant-point set (indices into the points).
    pub fn with_wp(field: Field, kind: CodeKind, mut wp: Vec<usize>) -> Result<CodeSpec, CodecError> {
        kind.validate(&field)?;
        let points = kind.points(&field);
        let zero_points = kind.zero_points(&field);
        let phi_m = kind.phi_m(&field);
        let order = kind.order().processing_order();
        wp.sort_unstable();
        wp.dedup();
        if wp.len() != phi_m.len() || wp.iter().any(|&k| k >= points.len()) {
            return Err(CodecError::NonGenericSupport);
        }
        let wp_pts: Vec<Point> = wp.iter().map(|&k| points[k]).collect();
        let basis_wp = vanishing_ideal_basis(&wp_pts, &order, &field)?;
        if !basis_wp.delta_set().same_members(&phi_m) {
            return Err(CodecError::NonGenericSupport);
        }
        let basis_all = vanishing_ideal_basis(&points, &order, &field)?;
        let wp_prime = (0..points.len()).filter(|k| wp.binary_search(k).is_err()).collect();
        let info_cells = basis_all.delta_set().iter().filter(|&c| !phi_m.contains(c)).collect();
        let domain = Domain::for_kind(&kind, &field);
        Ok(CodeSpec { field, kind, points, zero_points, phi_m, wp, wp_prime, basis_wp, basis_all, info_cells, domain })
    }

    /// A named parameter set; see [`crate::geometry::PRESETS`].
    pub fn preset(name: &str, m: Option<usize>) -> Result<CodeSpec, CodecError> {
        let (field, kind) = crate::geometry::preset(name, m)?;
        CodeSpec::new(field, kind)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn kind(&self) -> &CodeKind {
        &self.kind
    }

    /// Order defining Φ_m.
    pub fn order(&self) -> MonomialOrder {
        self.kind.order()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn zero_points(&self) -> &[Point] {
        &self.zero_points
    }

    pub fn phi_m(&self) -> &SupportSet {
        &self.phi_m
    }

    /// Redundant positions ℘ as indices into [`CodeSpec::points`].
    pub fn wp(&self) -> &[usize] {
        &self.wp
    }

    /// Information positions ℘′.
    pub fn wp_prime(&self) -> &[usize] {
        &self.wp_prime
    }

    pub fn basis_wp(&self) -> &GroebnerBasis {
        &self.basis_wp
    }

    pub fn basis_all(&self) -> &GroebnerBasis {
        &self.basis_all
    }

    /// Cells Φ∖Φ_m carrying non-systematic information, in order.
    pub fn info_cells(&self) -> &[Cell] {
        &self.info_cells
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    pub fn k(&self) -> usize {
        self.points.len() - self.phi_m.len()
    }

    /// Errors the decoder is guaranteed to correct.
    pub fn capability(&self) -> usize {
        self.kind.designed_capability()
    }

    /// Plain-text form; [`CodeSpec::from_text`] rebuilds and verifies it.
    pub fn to_text(&self) -> String {
        let f = &self.field;
        let mut s = String::from("agcodec-spec v1\n");
        let poly: Vec<String> = f.primitive_poly().iter().map(u32::to_string).collect();
        writeln!(s, "field {} {} {}", f.p(), f.m(), poly.join(" ")).unwrap();
        match &self.kind {
            CodeKind::Curve { curve, m } => {
                writeln!(s, "kind curve {} {} {m}", curve.a(), curve.b()).unwrap();
                for ((i, j), v) in curve.poly().sorted_terms(&curve.order()) {
                    writeln!(s, "curve {i} {j} {}", v.log()).unwrap();
                }
            }
            CodeKind::Hcrs { m } => writeln!(s, "kind hcrs {m}").unwrap(),
            CodeKind::Rs { redundancy } => writeln!(s, "kind rs {redundancy}").unwrap(),
        }
        for p in &self.points {
            writeln!(s, "point {} {}", p.x.log(), p.y.log()).unwrap();
        }
        let wp: Vec<String> = self.wp.iter().map(usize::to_string).collect();
        writeln!(s, "wp {}", wp.join(" ")).unwrap();
        s.push_str("basis wp\n");
        s.push_str(&self.basis_wp.to_text());
        s.push_str("basis all\n");
        s.push_str(&self.basis_all.to_text());
        s
    }

    pub fn from_text(text: &str) -> Result<CodeSpec, CodecError> {
        let bad = |m: String| CodecError::Parse(m);
        let mut lines = text.lines();
        if lines.next().map(str::trim) != Some("agcodec-spec v1") {
            return Err(bad("missing header `agcodec-spec v1`".into()));
        }
        let nums = |toks: &[&str]| -> Result<Vec<i64>, CodecError> {
            toks.iter().map(|t| t.parse().map_err(|_| bad(format!("bad number `{t}`")))).collect()
        };
        let mut field = None;
        let mut kind_line: Option<Vec<String>> = None;
        let mut curve_terms = Vec::new();
        let mut points = Vec::new();
        let mut wp = None;
        let mut bases: Vec<(String, String)> = Vec::new();
        while let Some(line) = lines.next() {
            let toks: Vec<&str> = line.split_whitespace().collect();
            match toks.as_slice() {
                [] => {}
                ["field", rest @ ..] => {
                    let v = nums(rest)?;
                    if v.len() < 3 || v.iter().any(|&x| x < 0) {
                        return Err(bad("field line".into()));
                    }
                    let poly: Vec<u32> = v[2..].iter().map(|&x| x as u32).collect();
                    field = Some(Field::new(v[0] as u32, v[1] as u32, &poly)?);
                }
                ["kind", rest @ ..] => kind_line = Some(rest.iter().map(|t| t.to_string()).collect()),
                ["curve", rest @ ..] => curve_terms.push(nums(rest)?),
                ["point", rest @ ..] => points.push(nums(rest)?),
                ["wp", rest @ ..] => wp = Some(nums(rest)?),
                ["basis", name] => {
                    let mut body = String::new();
                    for l in lines.by_ref() {
                        body.push_str(l);
                        body.push('\n');
                        if l.trim() == "end" {
                            break;
                        }
                    }
                    bases.push((name.to_string(), body));
                }
                _ => return Err(bad(format!("unexpected line `{line}`"))),
            }
        }
        let field = field.ok_or_else(|| bad("missing field line".into()))?;
        let kl = kind_line.ok_or_else(|| bad("missing kind line".into()))?;
        let kv = |k: usize| -> Result<usize, CodecError> {
            kl.get(k).and_then(|t| t.parse().ok()).ok_or_else(|| bad("kind line".into()))
        };
        let kind = match kl.first().map(String::as_str) {
            Some("curve") => {
                let mut poly = BivariatePoly::zero();
                for t in &curve_terms {
                    let [i, j, v] = t[..] else { return Err(bad("curve term".into())) };
                    let e = field.elt(v as i32).ok_or_else(|| bad("curve coefficient".into()))?;
                    if i < 0 || j < 0 {
                        return Err(bad("curve term".into()));
                    }
                    poly.add_term((i as usize, j as usize), e, &field);
                }
                CodeKind::Curve { curve: CurveSpec::new(kv(1)?, kv(2)?, poly)?, m: kv(3)? }
            }
            Some("hcrs") => CodeKind::Hcrs { m: kv(1)? },
            Some("rs") => CodeKind::Rs { redundancy: kv(1)? },
            _ => return Err(bad("unknown kind".into())),
        };
        let wp: Vec<usize> = wp
            .ok_or_else(|| bad("missing wp line".into()))?
            .into_iter()
            .map(|x| usize::try_from(x).map_err(|_| bad("wp index".into())))
            .collect::<Result<_, _>>()?;
        let spec = CodeSpec::with_wp(field, kind, wp)?;
        let stored: Vec<Point> = points
            .iter()
            .map(|v| match v[..] {
                [x, y] => Ok(Point::new(Elt::from_log(x as i32), Elt::from_log(y as i32))),
                _ => Err(bad("point line".into())),
            })
            .collect::<Result<_, _>>()?;
        if stored != spec.points {
            return Err(bad("stored points differ from the curve's points".into()));
        }
        for (name, body) in bases {
            let b = GroebnerBasis::from_text(&body, &spec.field)?;
            let expect = match name.as_str() {
                "wp" => &spec.basis_wp,
                "all" => &spec.basis_all,
                other => return Err(bad(format!("unknown basis `{other}`"))),
            };
            if &b != expect {
                return Err(bad(format!("stored basis `{name}` does not match")));
            }
        }
        Ok(spec)
    }
}

#[cfg(test)]
mod tests;
