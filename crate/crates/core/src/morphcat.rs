//! Morphism categories H(C) ⊇ S(C), F(C): objects are maps A → B in C, handled as T₂(Λ)-modules.

use crate::algebra::{Algebra, T2Layout};
use crate::decompose::{decompose, is_isomorphic, Summand};
use crate::error::{Error, Result};
use crate::rep::{
    block_map, cokernel, direct_sum, extend_injective, hom_basis, injective_envelope, kernel, solve_in_span, ModMap,
    Rep,
};
use crate::subcat::{Side, Subcat};
use std::fmt;

/// An object `A → B` of the morphism category over the base algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorObj {
    pub map: ModMap,
}

impl MorObj {
    pub fn new(map: ModMap) -> MorObj {
        MorObj { map }
    }

    pub fn source(&self) -> &Rep {
        &self.map.source
    }

    pub fn target(&self) -> &Rep {
        &self.map.target
    }

    pub fn base(&self) -> &Algebra {
        &self.map.source.alg
    }

    /// `(0 → B)`.
    pub fn from_zero(b: &Rep) -> MorObj {
        MorObj::new(ModMap::zero(&Rep::zero(&b.alg), b))
    }

    /// `(A → 0)`.
    pub fn to_zero(a: &Rep) -> MorObj {
        MorObj::new(ModMap::zero(a, &Rep::zero(&a.alg)))
    }

    /// `(A = A)`.
    pub fn identity(a: &Rep) -> MorObj {
        MorObj::new(ModMap::identity(a))
    }

    pub fn is_zero(&self) -> bool {
        self.source().is_zero() && self.target().is_zero()
    }

    /// The T₂(Λ)-module with A on the first copy, B on the second and the map on the connectors.
    pub fn to_t2(&self) -> Rep {
        let base = self.base();
        let t2 = base.t2();
        let l = T2Layout::of(base);
        let (a, b) = (self.source(), self.target());
        let mut dims = a.dims.clone();
        dims.extend(&b.dims);
        let mut mats = a.mats.clone();
        mats.extend(b.mats.iter().cloned());
        mats.extend(self.map.mats.iter().cloned());
        debug_assert_eq!(mats.len(), 2 * l.m + l.n);
        Rep::trusted(&t2, dims, mats)
    }

    /// Inverse of `to_t2`; `r` must live over `base.t2()`.
    pub fn from_t2(base: &Algebra, r: &Rep) -> MorObj {
        let l = T2Layout::of(base);
        let a = Rep::trusted(base, r.dims[..l.n].to_vec(), r.mats[..l.m].to_vec());
        let b = Rep::trusted(base, r.dims[l.n..].to_vec(), r.mats[l.m..2 * l.m].to_vec());
        let f = ModMap::trusted(&a, &b, r.mats[2 * l.m..].to_vec());
        MorObj::new(f)
    }

    pub fn is_mono(&self) -> bool {
        self.map.is_injective()
    }

    pub fn is_epi(&self) -> bool {
        self.map.is_surjective()
    }

    /// Membership in S(C): injective with A, B and the cokernel in C.
    pub fn in_s(&self, c: &Subcat) -> Result<bool> {
        Ok(self.is_mono()
            && c.contains(self.source())?
            && c.contains(self.target())?
            && c.contains(&cokernel(&self.map).0)?)
    }

    /// Membership in F(C): surjective with A, B and the kernel in C.
    pub fn in_f(&self, c: &Subcat) -> Result<bool> {
        Ok(self.is_epi()
            && c.contains(self.source())?
            && c.contains(self.target())?
            && c.contains(&kernel(&self.map).0)?)
    }

    pub fn direct_sum(base: &Algebra, parts: &[MorObj]) -> MorObj {
        let s = direct_sum(base, &parts.iter().map(|p| p.source().clone()).collect::<Vec<_>>());
        let t = direct_sum(base, &parts.iter().map(|p| p.target().clone()).collect::<Vec<_>>());
        let mut acc = ModMap::zero(&s.rep, &t.rep);
        for (k, p) in parts.iter().enumerate() {
            acc = acc.add(&s.proj[k].then(&p.map).then(&t.inj[k]));
        }
        MorObj::new(acc)
    }
}

impl fmt::Display for MorObj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} -> {})", self.source(), self.target())
    }
}

/// A morphism of morphism-objects from its two components, as a T₂-module map.
pub fn t2_map(x: &MorObj, y: &MorObj, top: &ModMap, bottom: &ModMap) -> ModMap {
    let mut mats = top.mats.clone();
    mats.extend(bottom.mats.iter().cloned());
    ModMap::trusted(&x.to_t2(), &y.to_t2(), mats)
}

/// The components `(A → A', B → B')` of a T₂-module map between translated objects.
pub fn split_t2_map(base: &Algebra, phi: &ModMap) -> (ModMap, ModMap) {
    let n = base.num_vertices();
    let x = MorObj::from_t2(base, &phi.source);
    let y = MorObj::from_t2(base, &phi.target);
    let top = ModMap::trusted(x.source(), y.source(), phi.mats[..n].to_vec());
    let bottom = ModMap::trusted(x.target(), y.target(), phi.mats[n..].to_vec());
    (top, bottom)
}

/// `Cok(A ↪ B) = (B → coker)`.
pub fn cok(x: &MorObj) -> Result<MorObj> {
    if !x.is_mono() {
        return Err(Error::NotInS(format!("{x} is not injective")));
    }
    Ok(MorObj::new(cokernel(&x.map).1))
}

/// `Ker(A ↠ B) = (ker → A)`.
pub fn ker(x: &MorObj) -> Result<MorObj> {
    if !x.is_epi() {
        return Err(Error::NotInF(format!("{x} is not surjective")));
    }
    Ok(MorObj::new(kernel(&x.map).1))
}

/// Injective objects of S(C) among indecomposables: `(0 → I)` and `(I = I)` with I rel-injective.
pub fn is_s_injective_form(x: &MorObj, c: &Subcat) -> bool {
    if x.source().is_zero() {
        return !x.target().is_zero() && c.is_relative(x.target(), Side::Injective);
    }
    x.map.is_iso() && c.is_relative(x.source(), Side::Injective)
}

/// Projective objects of S(C) among indecomposables: `(0 → P)` and `(P = P)` with P rel-projective.
pub fn is_s_projective_form(x: &MorObj, c: &Subcat) -> bool {
    if x.source().is_zero() {
        return !x.target().is_zero() && c.is_relative(x.target(), Side::Projective);
    }
    x.map.is_iso() && c.is_relative(x.source(), Side::Projective)
}

/// Projective objects of F(C) among indecomposables: `(P → 0)` and `(P = P)` with P rel-projective.
pub fn is_f_projective_form(x: &MorObj, c: &Subcat) -> bool {
    if x.target().is_zero() {
        return !x.source().is_zero() && c.is_relative(x.source(), Side::Projective);
    }
    x.map.is_iso() && c.is_relative(x.source(), Side::Projective)
}

/// Injective objects of F(C) among indecomposables: `(I → 0)` and `(I = I)` with I rel-injective.
pub fn is_f_injective_form(x: &MorObj, c: &Subcat) -> bool {
    if x.target().is_zero() {
        return !x.source().is_zero() && c.is_relative(x.source(), Side::Injective);
    }
    x.map.is_iso() && c.is_relative(x.source(), Side::Injective)
}

/// Indecomposable summands of a morphism-object, each with its inclusion data in T₂-modules.
pub fn summands(x: &MorObj) -> Result<Vec<(MorObj, Summand)>> {
    let d = decompose(&x.to_t2())?;
    Ok(d.summands.into_iter().map(|s| (MorObj::from_t2(x.base(), &s.rep), s)).collect())
}

/// The direct sum of the summands of `x` for which `drop` is false.
pub fn strip_where(x: &MorObj, drop: impl Fn(&MorObj) -> bool) -> Result<MorObj> {
    let kept: Vec<MorObj> = summands(x)?.into_iter().map(|(m, _)| m).filter(|m| !drop(m)).collect();
    Ok(MorObj::direct_sum(x.base(), &kept))
}

/// Minimal monomorphism: `[h; e]: A → B ⊕ I` for an inflation e of A, minus injective summands of S(C).
pub fn mimo(h: &ModMap, c: &Subcat) -> Result<MorObj> {
    let e = c.inflation(&h.source)?;
    mimo_with(h, &e, c)
}

/// `[h; e]` with a caller-chosen inflation `e` of the source, minus injective summands of S(C).
pub fn mimo_with(h: &ModMap, e: &ModMap, c: &Subcat) -> Result<MorObj> {
    let base = &c.alg;
    let ds = direct_sum(base, &[h.target.clone(), e.target.clone()]);
    let m = h.then(&ds.inj[0]).add(&e.then(&ds.inj[1]));
    strip_where(&MorObj::new(m), |s| is_s_injective_form(s, c))
}

/// Minimal epimorphism: `[h, p]: A ⊕ P → B` for a deflation p onto B, minus projective summands of F(C).
pub fn mepi(h: &ModMap, c: &Subcat) -> Result<MorObj> {
    let p = c.deflation(&h.target)?;
    let base = &c.alg;
    let ds = direct_sum(base, &[h.source.clone(), p.source.clone()]);
    let m = ds.proj[0].then(h).add(&ds.proj[1].then(&p));
    strip_where(&MorObj::new(m), |s| is_f_projective_form(s, c))
}

/// Component map between the parts of A and B without rel-projective summands.
pub fn underline(x: &MorObj, c: &Subcat) -> Result<MorObj> {
    strip_both(x, c, Side::Projective)
}

/// Component map between the parts of A and B without rel-injective summands.
pub fn overline(x: &MorObj, c: &Subcat) -> Result<MorObj> {
    strip_both(x, c, Side::Injective)
}

fn strip_both(x: &MorObj, c: &Subcat, side: Side) -> Result<MorObj> {
    let a = c.strip(x.source(), side)?;
    let b = c.strip(x.target(), side)?;
    Ok(MorObj::new(a.inc.then(&x.map).then(&b.proj)))
}

/// Isomorphism in S(C) modulo injective objects.
pub fn stable_iso_s(x: &MorObj, y: &MorObj, c: &Subcat) -> Result<bool> {
    let xs = strip_where(x, |s| is_s_injective_form(s, c))?;
    let ys = strip_where(y, |s| is_s_injective_form(s, c))?;
    is_isomorphic(&xs.to_t2(), &ys.to_t2())
}

/// Isomorphism in F(C) modulo projective objects.
pub fn stable_iso_f(x: &MorObj, y: &MorObj, c: &Subcat) -> Result<bool> {
    let xs = strip_where(x, |s| is_f_projective_form(s, c))?;
    let ys = strip_where(y, |s| is_f_projective_form(s, c))?;
    is_isomorphic(&xs.to_t2(), &ys.to_t2())
}

/// Whether `c: Y₁ → X₂` lies in Htp(a, b) = {a∘s + t∘b}, for a: X₁ → X₂ and b: Y₁ → Y₂;
/// equivalently, whether the gluing of a and b along c splits.
pub fn cw_split_test(a: &ModMap, c: &ModMap, b: &ModMap) -> bool {
    let mut gens: Vec<ModMap> = hom_basis(&b.source, &a.source).iter().map(|s| s.then(a)).collect();
    gens.extend(hom_basis(&b.target, &a.target).iter().map(|t| b.then(t)));
    solve_in_span(&gens, c).is_some()
}

/// The glued object `[[a, c], [0, b]]: X₁ ⊕ Y₁ → X₂ ⊕ Y₂`.
pub fn glue(a: &ModMap, c: &ModMap, b: &ModMap) -> MorObj {
    let base = &a.source.alg;
    let s = direct_sum(base, &[a.source.clone(), b.source.clone()]);
    let t = direct_sum(base, &[a.target.clone(), b.target.clone()]);
    let m = block_map(&s, &t, &[vec![a.clone(), c.clone()], vec![ModMap::zero(&a.source, &b.target), b.clone()]]);
    MorObj::new(m)
}

/// For C = Λ-mod: `[h; e]` with e an extension of the injective envelope of ker h.
pub fn envelope_extension_mono(h: &ModMap) -> MorObj {
    let base = &h.source.alg;
    let (k, inc) = kernel(h);
    let env = injective_envelope(&k);
    let e = extend_injective(&env.sum, &env.map, &inc).expect("injective modules extend along monos");
    let ds = direct_sum(base, &[h.target.clone(), e.target.clone()]);
    MorObj::new(h.then(&ds.inj[0]).add(&e.then(&ds.inj[1])))
}
