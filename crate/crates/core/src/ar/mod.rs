//! Auslander–Reiten theory: translates, almost split sequences, knitting and certification.

pub mod backend;
pub mod dot;
pub mod knit;
pub mod oracle;
pub mod shift;
pub mod smon;
pub mod sporadic;

use crate::decompose::decompose;
use crate::error::{Error, Result};
use crate::homological::{ar_class, is_projective, tau, ShortExact};
use crate::rep::{direct_sum, Rep};

/// `m` without its projective summands.
pub fn strip_projective(m: &Rep) -> Result<Rep> {
    let d = decompose(m)?;
    let kept: Vec<Rep> = d.summands.into_iter().map(|s| s.rep).filter(|r| !is_projective(r)).collect();
    Ok(direct_sum(&m.alg, &kept).rep)
}

/// τ of the non-projective part of `m`.
pub fn tau_object(m: &Rep) -> Result<Rep> {
    tau(&strip_projective(m)?)
}

/// The almost split sequence `x → E → z` realized from an Ext¹-socle class.
pub fn ar_sequence_between(z: &Rep, x: &Rep) -> Result<ShortExact> {
    match ar_class(z, x)? {
        Some((e, c)) => Ok(e.realize(&c)),
        None => Err(Error::Certification(format!("no almost split class in Ext1({z}, {x})"))),
    }
}

/// The almost split sequence in Λ-mod ending at the indecomposable non-projective `x`.
pub fn ar_sequence_mod(x: &Rep) -> Result<ShortExact> {
    if is_projective(x) {
        return Err(Error::ProjectiveInput);
    }
    let t = tau(x)?;
    ar_sequence_between(x, &t)
}
