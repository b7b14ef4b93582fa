use crate::bms::{complete_syndromes, BmsError, PartialArray};
use crate::galois::Elt;
use crate::transform::idft2;

use super::encode::{encode, syndromes};
use super::{CodeSpec, CodecError, Mode};

/// A corrected word with its information and how it was obtained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decoded {
    pub codeword: Vec<Elt>,
    pub info: Vec<Elt>,
    /// Indices of corrected positions.
    pub error_positions: Vec<usize>,
    /// Whether a voted syndrome changed the locator, i.e. plain BMS
    /// extension from Φ_m alone would have been wrong.
    pub voted: bool,
}

/// Corrects up to [`CodeSpec::capability`] errors. The result is always
/// re-encoded and checked; an uncorrectable word yields `DecodingFailure`.
pub fn decode(spec: &CodeSpec, mode: Mode, received: &[Elt]) -> Result<Decoded, CodecError> {
    if received.len() == spec.n() + spec.zero_points().len() && !spec.zero_points().is_empty() {
        return Err(CodecError::ExtendedDecodeUnsupported);
    }
    let f = spec.field();
    let syn = syndromes(spec, received)?;
    let part = PartialArray::on(&syn.full, spec.phi_m().clone());
    let fail = |m: String| CodecError::DecodingFailure(m);
    let done = complete_syndromes(&part, spec.domain(), spec.capability(), f).map_err(|e| match e {
        BmsError::DecodingFailure(m) => fail(m),
        other => fail(other.to_string()),
    })?;
    let err = idft2(f, &done.full).expect("grid array");

    let mut on_points = vec![false; err.side() * err.side()];
    let mut error_positions = Vec::new();
    let mut codeword = received.to_vec();
    for (k, p) in spec.points().iter().enumerate() {
        let c = p.cell().expect("code point");
        on_points[c.0 * err.side() + c.1] = true;
        if !err[c].is_zero() {
            error_positions.push(k);
            codeword[k] = f.sub(codeword[k], err[c]);
        }
    }
    if err.cells().any(|c| !on_points[c.0 * err.side() + c.1] && !err[c].is_zero()) {
        return Err(fail("error pattern leaves the code points".into()));
    }
    if error_positions.len() > spec.capability() {
        return Err(fail(format!("{} errors exceed capability {}", error_positions.len(), spec.capability())));
    }

    let info: Vec<Elt> = match mode {
        Mode::Nonsystematic => {
            let diff = syn.full.sub(&done.full, f);
            spec.info_cells().iter().map(|&c| diff[c]).collect()
        }
        Mode::Systematic => spec.wp_prime().iter().map(|&k| codeword[k]).collect(),
    };
    if !syndromes(spec, &codeword)?.is_zero() {
        return Err(fail("corrected word fails the parity checks".into()));
    }
    if encode(spec, mode, &info)? != codeword {
        return Err(fail("re-encoding does not reproduce the corrected word".into()));
    }
    Ok(Decoded { codeword, info, error_positions, voted: done.voted })
}
