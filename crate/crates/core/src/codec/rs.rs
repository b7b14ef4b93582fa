//! Reed–Solomon encoders of length q−1 with roots α⁰..α^(r−1).
//!
//! Univariate polynomials are coefficient vectors, lowest degree first.
//! Information vectors hold the k = n−r symbols I_r..I_(n−1).

use crate::galois::{Elt, Field};
use crate::geometry::GeometryError;
use crate::transform::idft1;

use super::CodecError;

fn check(field: &Field, r: usize, info: &[Elt]) -> Result<usize, CodecError> {
    let n = field.order() as usize;
    if r == 0 || r >= n {
        return Err(GeometryError::BadRedundancy { r, n }.into());
    }
    if info.len() != n - r {
        return Err(CodecError::WrongLength { expected: n - r, got: info.len() });
    }
    Ok(n)
}

fn eval(field: &Field, poly: &[Elt], x: Elt) -> Elt {
    poly.iter().rev().fold(Elt::ZERO, |acc, &c| field.add(field.mul(acc, x), c))
}

/// I(x) with the information in degrees r..n−1.
fn info_poly(n: usize, r: usize, info: &[Elt]) -> Vec<Elt> {
    let mut p = vec![Elt::ZERO; n];
    p[r..].copy_from_slice(info);
    p
}

/// G(x) = (x − α⁰)(x − α¹)···(x − α^(r−1)).
pub fn rs_gen_poly(field: &Field, r: usize) -> Result<Vec<Elt>, CodecError> {
    let n = field.order() as usize;
    if r == 0 || r >= n {
        return Err(GeometryError::BadRedundancy { r, n }.into());
    }
    let mut g = vec![Elt::ONE];
    for i in 0..r {
        let root = field.neg(field.alpha_pow(i as i64));
        let mut next = vec![Elt::ZERO; g.len() + 1];
        for (d, &c) in g.iter().enumerate() {
            next[d + 1] = field.add(next[d + 1], c);
            next[d] = field.add(next[d], field.mul(c, root));
        }
        g = next;
    }
    Ok(g)
}

/// c(x) = I(x) − (I(x) mod G(x)).
pub fn rs_encode_euclid(field: &Field, r: usize, info: &[Elt]) -> Result<Vec<Elt>, CodecError> {
    let n = check(field, r, info)?;
    let g = rs_gen_poly(field, r)?;
    let i_poly = info_poly(n, r, info);
    let mut rem = i_poly.clone();
    for d in (r..n).rev() {
        let lead = rem[d];
        if lead.is_zero() {
            continue;
        }
        for (e, &gc) in g.iter().enumerate() {
            let idx = d - r + e;
            rem[idx] = field.sub(rem[idx], field.mul(lead, gc));
        }
    }
    Ok(i_poly.iter().zip(&rem).map(|(&a, &b)| field.sub(a, b)).collect())
}

/// c_h = Σ_i I_i α^(−ih); then c(α^i) = −I_i.
pub fn rs_encode_idft(field: &Field, r: usize, info: &[Elt]) -> Result<Vec<Elt>, CodecError> {
    let n = check(field, r, info)?;
    let i_poly = info_poly(n, r, info);
    Ok((0..n).map(|h| eval(field, &i_poly, field.alpha_pow(-(h as i64)))).collect())
}

/// d_h = I(α^h) for h < r, and d_h = −Σ_(i<r) G_i d_(i+h−r) beyond.
pub fn rs_dh_sequence(field: &Field, r: usize, info: &[Elt]) -> Result<Vec<Elt>, CodecError> {
    let n = check(field, r, info)?;
    let g = rs_gen_poly(field, r)?;
    let i_poly = info_poly(n, r, info);
    let mut d: Vec<Elt> = (0..r).map(|h| eval(field, &i_poly, field.alpha_pow(h as i64))).collect();
    for h in r..n {
        let s = (0..r).fold(Elt::ZERO, |acc, i| field.add(acc, field.mul(g[i], d[i + h - r])));
        d.push(field.neg(s));
    }
    Ok(d)
}

/// R(x) from the inverse transform of (d_h), then c(x) = I(x) − R(x).
pub fn rs_encode_dh(field: &Field, r: usize, info: &[Elt]) -> Result<Vec<Elt>, CodecError> {
    let n = check(field, r, info)?;
    let d = rs_dh_sequence(field, r, info)?;
    let rem = idft1(field, &d).expect("length q−1");
    Ok(info_poly(n, r, info).iter().zip(&rem).map(|(&a, &b)| field.sub(a, b)).collect())
}
