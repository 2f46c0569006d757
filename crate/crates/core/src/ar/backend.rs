//! Computable models of the relative translate τ_C, on objects and on morphisms.

use super::oracle::{oracle_verify, Method};
use crate::decompose::find_iso_indecomposable;
use crate::error::{Error, Result};
use crate::homological::{self, ar_class, ShortExact};
use crate::rep::{ModMap, Rep};
use crate::subcat::{Side, Subcat};
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Backend {
    /// C = Λ-mod and τ_C = DTr.
    Ambient,
    /// C Frobenius and stably d-Calabi–Yau: τ_C = Ω^{1−d}.
    Frobenius(usize),
    /// C = Gproj(Γ) for a d-Gorenstein ambient algebra Γ: τ_C = Ω_C^{−d} Ω_Γ^d τ_Γ.
    Gorenstein(usize),
    /// Objects only, found by testing Ext¹-socle classes against the generators.
    Search,
}

impl FromStr for Backend {
    type Err = Error;
    fn from_str(s: &str) -> Result<Backend> {
        let bad = || Error::BackendUnsupported(format!("unknown backend '{s}'"));
        match s.split_once(':') {
            None if s == "ambient" => Ok(Backend::Ambient),
            None if s == "search" => Ok(Backend::Search),
            Some(("frobenius", d)) => Ok(Backend::Frobenius(d.parse().map_err(|_| bad())?)),
            Some(("gorenstein", d)) => Ok(Backend::Gorenstein(d.parse().map_err(|_| bad())?)),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Backend::Ambient => write!(f, "ambient"),
            Backend::Frobenius(d) => write!(f, "frobenius:{d}"),
            Backend::Gorenstein(d) => write!(f, "gorenstein:{d}"),
            Backend::Search => write!(f, "search"),
        }
    }
}

impl Backend {
    pub fn transports_morphisms(self) -> bool {
        self != Backend::Search
    }

    pub fn has_inverse(self) -> bool {
        matches!(self, Backend::Ambient | Backend::Frobenius(_))
    }

    /// Structural preconditions; objectwise validation is `validate`.
    pub fn check(self, c: &Subcat) -> Result<()> {
        match self {
            Backend::Ambient if !c.module_category => {
                Err(Error::BackendInvalid("the ambient backend needs C = Λ-mod".into()))
            }
            Backend::Frobenius(_) | Backend::Gorenstein(_) if !c.check_frobenius() => Err(Error::NotFrobenius),
            _ => Ok(()),
        }
    }
}

/// τ_C(h) for `h` between objects of C, well defined modulo maps factoring through rel-injectives.
pub fn tau_c_morphism(c: &Subcat, b: Backend, h: &ModMap) -> Result<ModMap> {
    b.check(c)?;
    match b {
        Backend::Ambient => Ok(homological::tau_morphism(h)),
        Backend::Frobenius(0) => c.syzygy_morphism(h),
        Backend::Frobenius(d) => {
            let mut t = h.clone();
            for _ in 1..d {
                t = c.cosyzygy_morphism(&t)?;
            }
            Ok(t)
        }
        Backend::Gorenstein(d) => {
            let mut t = homological::tau_morphism(h);
            for _ in 0..d {
                t = homological::syzygy_morphism(&t);
            }
            for _ in 0..d {
                t = c.cosyzygy_morphism(&t)?;
            }
            Ok(t)
        }
        Backend::Search => Err(Error::BackendUnsupported("search cannot transport morphisms".into())),
    }
}

/// τ_C⁻¹(h), dual to `tau_c_morphism`.
pub fn tau_c_inv_morphism(c: &Subcat, b: Backend, h: &ModMap) -> Result<ModMap> {
    b.check(c)?;
    match b {
        Backend::Ambient => Ok(homological::tau_inv_morphism(h)),
        Backend::Frobenius(0) => c.cosyzygy_morphism(h),
        Backend::Frobenius(d) => {
            let mut t = h.clone();
            for _ in 1..d {
                t = c.syzygy_morphism(&t)?;
            }
            Ok(t)
        }
        Backend::Gorenstein(_) => Err(Error::BackendUnsupported("no inverse translate for the gorenstein backend".into())),
        Backend::Search => Err(Error::BackendUnsupported("search cannot transport morphisms".into())),
    }
}

/// τ_C of an object by the backend's morphism route, rel-projective summands removed.
pub fn tau_c_object(c: &Subcat, b: Backend, x: &Rep) -> Result<Rep> {
    let t = tau_c_morphism(c, b, &ModMap::identity(x))?;
    Ok(c.strip(&t.source, Side::Projective)?.rep)
}

/// τ_C X for a non-rel-projective generator, found among the generators by realizing Ext¹-socle
/// classes and keeping the first sequence that passes the definitional check inside C.
pub fn search_tau(c: &Subcat, x: &Rep) -> Result<Option<(usize, ShortExact)>> {
    for (j, y) in c.gens.iter().enumerate() {
        if c.rel_inj.contains(&j) {
            continue;
        }
        let Some((e, cls)) = ar_class(x, y)? else { continue };
        let seq = e.realize(&cls);
        if !c.contains(&seq.mid)? {
            continue;
        }
        if oracle_verify(&seq, &c.gens, Method::Oracle)?.passed() {
            return Ok(Some((j, seq)));
        }
    }
    Ok(None)
}

/// One line of backend validation: generator, generator found by search, and agreement.
#[derive(Clone, Debug)]
pub struct ValidationLine {
    pub gen: usize,
    pub search: Option<usize>,
    pub agrees: bool,
}

/// Compare the backend's τ_C with the search result on every non-rel-projective generator.
pub fn validate(c: &Subcat, b: Backend) -> Result<Vec<ValidationLine>> {
    b.check(c)?;
    let mut out = Vec::new();
    for (i, g) in c.gens.iter().enumerate() {
        if c.rel_proj.contains(&i) {
            continue;
        }
        let found = search_tau(c, g)?;
        let agrees = match (&found, b) {
            (_, Backend::Search) => found.is_some(),
            (Some((j, _)), _) => {
                let t = tau_c_object(c, b, g)?;
                find_iso_indecomposable(&c.gens[*j], &t).is_some()
            }
            (None, _) => false,
        };
        out.push(ValidationLine { gen: i, search: found.map(|(j, _)| j), agrees });
    }
    Ok(out)
}

/// Validation that fails loudly.
pub fn require_valid(c: &Subcat, b: Backend) -> Result<()> {
    for line in validate(c, b)? {
        if !line.agrees {
            return Err(Error::BackendInvalid(format!(
                "{b}: τ of generator {} disagrees with the search result {:?}",
                line.gen, line.search
            )));
        }
    }
    Ok(())
}

/// Injective dimension of the regular module, up to `cap`.
pub fn self_injective_dimension(alg: &crate::algebra::Algebra, cap: usize) -> Option<usize> {
    let mut best = 0;
    for v in 0..alg.num_vertices() {
        let mut m = Rep::standard_proj(alg, v);
        let mut d = 0;
        loop {
            let next = homological::cosyzygy(&m);
            if next.is_zero() {
                break;
            }
            d += 1;
            if d > cap {
                return None;
            }
            m = next;
        }
        best = best.max(d);
    }
    Some(best)
}
