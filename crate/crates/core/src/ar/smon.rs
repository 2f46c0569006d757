//! Translates in the monomorphism and epimorphism categories S(C) and F(C).

use super::backend::{tau_c_inv_morphism, tau_c_morphism, Backend};
use crate::error::{Error, Result};
use crate::homological::tau_morphism;
use crate::morphcat::{
    cok, is_f_injective_form, is_s_injective_form, is_s_projective_form, ker, mepi, mimo, overline, underline,
    MorObj,
};
use crate::subcat::Subcat;

/// S(C) together with a model of τ_C.
#[derive(Clone, Debug)]
pub struct Smon {
    pub c: Subcat,
    pub backend: Backend,
}

impl Smon {
    pub fn new(c: Subcat, backend: Backend) -> Result<Smon> {
        backend.check(&c)?;
        Ok(Smon { c, backend })
    }

    fn require_mono(&self, f: &MorObj) -> Result<()> {
        if !f.is_mono() {
            return Err(Error::NotInS(format!("{f} is not injective")));
        }
        Ok(())
    }

    /// τ_S f = mimo τ_C(underline Cok f).
    pub fn tau_s(&self, f: &MorObj) -> Result<MorObj> {
        self.require_mono(f)?;
        if is_s_projective_form(f, &self.c) {
            return Err(Error::ProjectiveObject);
        }
        let g = underline(&cok(f)?, &self.c)?;
        let t = tau_c_morphism(&self.c, self.backend, &g.map)?;
        mimo(&t, &self.c)
    }

    /// τ_F g = Cok mimo τ_C(underline g), for g in F(C).
    pub fn tau_f(&self, g: &MorObj) -> Result<MorObj> {
        if !g.is_epi() {
            return Err(Error::NotInF(format!("{g} is not surjective")));
        }
        if crate::morphcat::is_f_projective_form(g, &self.c) {
            return Err(Error::ProjectiveObject);
        }
        let u = underline(g, &self.c)?;
        let t = tau_c_morphism(&self.c, self.backend, &u.map)?;
        cok(&mimo(&t, &self.c)?)
    }

    /// τ_S⁻¹ f = Ker mepi τ_C⁻¹(overline f).
    pub fn tau_s_inverse(&self, f: &MorObj) -> Result<MorObj> {
        self.require_mono(f)?;
        if is_s_injective_form(f, &self.c) {
            return Err(Error::InjectiveObject);
        }
        let o = overline(f, &self.c)?;
        let t = tau_c_inv_morphism(&self.c, self.backend, &o.map)?;
        ker(&mepi(&t, &self.c)?)
    }

    /// τ_F⁻¹ g = mepi τ_C⁻¹(overline Ker g), for g in F(C).
    pub fn tau_f_inverse(&self, g: &MorObj) -> Result<MorObj> {
        if !g.is_epi() {
            return Err(Error::NotInF(format!("{g} is not surjective")));
        }
        if is_f_injective_form(g, &self.c) {
            return Err(Error::InjectiveObject);
        }
        let o = overline(&ker(g)?, &self.c)?;
        let t = tau_c_inv_morphism(&self.c, self.backend, &o.map)?;
        mepi(&t, &self.c)
    }
}

/// For C = Λ-mod: mimo(τ_Λ(Coker f)), applying DTr to the whole cokernel map with no stripping.
pub fn tau_s_direct(c: &Subcat, f: &MorObj) -> Result<MorObj> {
    if !c.module_category {
        return Err(Error::BackendUnsupported("the direct route needs C = Λ-mod".into()));
    }
    let g = cok(f)?;
    mimo(&tau_morphism(&g.map), c)
}
