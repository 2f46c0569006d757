//! Presentations, duality, the Auslander–Reiten translate, Ext¹ and stable Hom.

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::Mat;
use crate::rep::{
    cokernel, combine, descend, direct_sum, extend_injective, hom_basis, injective_envelope, inj_components,
    inj_sum_map, kernel, lift_projective, maps_as_columns, proj_components, proj_sum_map, projective_cover, restrict,
    solve_in_span, ModMap, Rep, StandardSum,
};
use num_traits::Zero;

/// Minimal projective presentation `P1 --d--> P0 --aug--> M → 0`.
#[derive(Clone, Debug)]
pub struct MinPresentation {
    pub p0: StandardSum,
    pub p1: StandardSum,
    pub d: ModMap,
    pub aug: ModMap,
    pub syzygy: Rep,
    /// Inclusion ΩM → P0.
    pub syz_inc: ModMap,
}

pub fn min_presentation(m: &Rep) -> MinPresentation {
    let c0 = projective_cover(m);
    let (omega, k) = kernel(&c0.map);
    let c1 = projective_cover(&omega);
    let d = c1.map.then(&k);
    MinPresentation { p0: c0.sum, p1: c1.sum, d, aug: c0.map, syzygy: omega, syz_inc: k }
}

/// Minimal injective copresentation `0 → M --coaug--> I0 --e--> I1`.
#[derive(Clone, Debug)]
pub struct MinCopresentation {
    pub i0: StandardSum,
    pub i1: StandardSum,
    pub e: ModMap,
    pub coaug: ModMap,
    pub cosyzygy: Rep,
    /// Projection I0 → Ω⁻¹M.
    pub cosyz_proj: ModMap,
}

pub fn min_copresentation(m: &Rep) -> MinCopresentation {
    let e0 = injective_envelope(m);
    let (co, q) = cokernel(&e0.map);
    let e1 = injective_envelope(&co);
    let e = q.then(&e1.map);
    MinCopresentation { i0: e0.sum, i1: e1.sum, e, coaug: e0.map, cosyzygy: co, cosyz_proj: q }
}

/// D = Hom_k(−, k): a Λ-module becomes a Λ^op-module with transposed matrices.
pub fn dual_rep(m: &Rep) -> Rep {
    let op = m.alg.opposite();
    let mats = m.mats.iter().map(|a| a.transpose()).collect();
    Rep::new(&op, m.dims.clone(), mats).expect("dual of a module is a module")
}

/// D on morphisms: `f: M → N` gives `Df: DN → DM`.
pub fn dual_map(f: &ModMap) -> ModMap {
    let s = dual_rep(&f.target);
    let t = dual_rep(&f.source);
    ModMap::new(&s, &t, f.mats.iter().map(|a| a.transpose()).collect()).expect("dual of a morphism")
}

/// Reverse every path of an element, re-expanded in the basis of the opposite algebra.
fn reverse_element(alg: &Algebra, op: &Algebra, x: &Element) -> Element {
    let mut acc: Vec<(usize, Scalar)> = Vec::new();
    let f = alg.field;
    for (b, c) in x {
        for (k, d) in op.normal_form(&alg.basis[*b].reversed()) {
            let v = f.mul(c, &d);
            match acc.iter_mut().find(|(i, _)| *i == k) {
                Some(e) => e.1 = f.add(&e.1, &v),
                None => acc.push((k, v)),
            }
        }
    }
    acc.retain(|(_, c)| !c.is_zero());
    acc
}

/// Tr M = Coker Hom_Λ(d, Λ), a Λ^op-module, with Hom(P_v, Λ) read off the path basis.
pub fn transpose_tr(m: &Rep) -> Rep {
    let alg = &m.alg;
    let op = alg.opposite();
    let pres = min_presentation(m);
    let comps = proj_components(&pres.p1, &pres.p0, &pres.d);
    let src = StandardSum::projective(&op, pres.p0.vertices.clone());
    let tgt = StandardSum::projective(&op, pres.p1.vertices.clone());
    // Component (i, j) of the dual map is component (j, i) of d, reversed.
    let dual_comps: Vec<Vec<Element>> = (0..pres.p1.vertices.len())
        .map(|i| (0..pres.p0.vertices.len()).map(|j| reverse_element(alg, &op, &comps[j][i])).collect())
        .collect();
    let dd = proj_sum_map(&op, &src, &tgt, &dual_comps);
    cokernel(&dd).0
}

pub fn is_projective(m: &Rep) -> bool {
    projective_cover(m).map.is_injective()
}

pub fn is_injective(m: &Rep) -> bool {
    injective_envelope(m).map.is_surjective()
}

/// Data tying τM to the presentation it was computed from.
#[derive(Clone, Debug)]
pub struct TauData {
    pub pres: MinPresentation,
    /// ν(d): νP1 → νP0 between standard injective sums.
    pub nu_d: ModMap,
    pub nu_p1: StandardSum,
    pub nu_p0: StandardSum,
    /// τM = ker ν(d) with its inclusion into νP1.
    pub tau: Rep,
    pub inc: ModMap,
}

/// τM = ker(ν d) for the minimal presentation d, where ν sends P_v to I_v.
pub fn tau_data(m: &Rep) -> TauData {
    let alg = &m.alg;
    let pres = min_presentation(m);
    let comps = proj_components(&pres.p1, &pres.p0, &pres.d);
    let nu_p1 = StandardSum::injective(alg, pres.p1.vertices.clone());
    let nu_p0 = StandardSum::injective(alg, pres.p0.vertices.clone());
    let nu_d = inj_sum_map(alg, &nu_p1, &nu_p0, &comps);
    let (tau, inc) = kernel(&nu_d);
    TauData { pres, nu_d, nu_p1, nu_p0, tau, inc }
}

pub fn tau(m: &Rep) -> Result<Rep> {
    if !m.is_zero() && is_projective(m) {
        return Err(Error::ProjectiveInput);
    }
    Ok(tau_data(m).tau)
}

/// Data tying τ⁻M to the copresentation it was computed from.
#[derive(Clone, Debug)]
pub struct TauInvData {
    pub copres: MinCopresentation,
    pub nu_e: ModMap,
    pub nu_i0: StandardSum,
    pub nu_i1: StandardSum,
    pub tau_inv: Rep,
    pub proj: ModMap,
}

/// τ⁻M = Coker(ν⁻ e) for the minimal copresentation e, where ν⁻ sends I_v to P_v.
pub fn tau_inv_data(m: &Rep) -> TauInvData {
    let alg = &m.alg;
    let copres = min_copresentation(m);
    let comps = inj_components(&copres.i0, &copres.i1, &copres.e);
    let nu_i0 = StandardSum::projective(alg, copres.i0.vertices.clone());
    let nu_i1 = StandardSum::projective(alg, copres.i1.vertices.clone());
    let nu_e = proj_sum_map(alg, &nu_i0, &nu_i1, &comps);
    let (tau_inv, proj) = cokernel(&nu_e);
    TauInvData { copres, nu_e, nu_i0, nu_i1, tau_inv, proj }
}

pub fn tau_inv(m: &Rep) -> Result<Rep> {
    if !m.is_zero() && is_injective(m) {
        return Err(Error::InjectiveInput);
    }
    Ok(tau_inv_data(m).tau_inv)
}

/// τh: τM → τN, by lifting h across the minimal presentations and applying ν.
/// Well defined modulo maps factoring through injectives.
pub fn tau_morphism(h: &ModMap) -> ModMap {
    let alg = &h.source.alg;
    let dm = tau_data(&h.source);
    let dn = tau_data(&h.target);
    let (pm, pn) = (&dm.pres, &dn.pres);
    let h0 = lift_projective(&pm.p0, &pm.aug.then(h), &pn.aug).expect("lift to P0");
    let h1 = lift_projective(&pm.p1, &pm.d.then(&h0), &pn.d).expect("lift to P1");
    let comps = proj_components(&pm.p1, &pn.p1, &h1);
    let nu_h1 = inj_sum_map(alg, &dm.nu_p1, &dn.nu_p1, &comps);
    restrict(&dn.inc, &dm.inc.then(&nu_h1)).expect("ν(h1) preserves the kernels")
}

/// τ⁻h: τ⁻M → τ⁻N, dually through injective copresentations.
pub fn tau_inv_morphism(h: &ModMap) -> ModMap {
    let alg = &h.source.alg;
    let dm = tau_inv_data(&h.source);
    let dn = tau_inv_data(&h.target);
    let (cm, cn) = (&dm.copres, &dn.copres);
    let h0 = extend_injective(&cn.i0, &h.then(&cn.coaug), &cm.coaug).expect("extend to I0");
    let h1 = extend_injective(&cn.i1, &h0.then(&cn.e), &cm.e).expect("extend to I1");
    let comps = inj_components(&cm.i1, &cn.i1, &h1);
    let nu_h1 = proj_sum_map(alg, &dm.nu_i1, &dn.nu_i1, &comps);
    descend(&dm.proj, &nu_h1.then(&dn.proj)).expect("ν⁻(h1) descends to cokernels")
}

pub fn syzygy(m: &Rep) -> Rep {
    kernel(&projective_cover(m).map).0
}

pub fn cosyzygy(m: &Rep) -> Rep {
    cokernel(&injective_envelope(m).map).0
}

/// Ωh: ΩM → ΩN, restriction of a lift between projective covers.
pub fn syzygy_morphism(h: &ModMap) -> ModMap {
    let cm = projective_cover(&h.source);
    let cn = projective_cover(&h.target);
    let (_, km) = kernel(&cm.map);
    let (_, kn) = kernel(&cn.map);
    let l = lift_projective(&cm.sum, &cm.map.then(h), &cn.map).expect("lift between covers");
    restrict(&kn, &km.then(&l)).expect("lift preserves kernels")
}

/// Ω⁻¹h: Ω⁻¹M → Ω⁻¹N, induced by an extension between injective envelopes.
pub fn cosyzygy_morphism(h: &ModMap) -> ModMap {
    let em = injective_envelope(&h.source);
    let en = injective_envelope(&h.target);
    let (_, qm) = cokernel(&em.map);
    let (_, qn) = cokernel(&en.map);
    let l = extend_injective(&en.sum, &h.then(&en.map), &em.map).expect("extend between envelopes");
    descend(&qm, &l.then(&qn)).expect("extension descends to cokernels")
}

/// A space of maps modulo a subspace, with chosen representatives of a quotient basis.
#[derive(Clone, Debug)]
pub struct QuotientHom {
    pub basis: Vec<ModMap>,
    /// Spanning set of the subspace being factored out.
    pub sub: Vec<ModMap>,
    /// Representatives of a basis of the quotient.
    pub reps: Vec<ModMap>,
}

impl QuotientHom {
    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    pub fn contains_in_sub(&self, f: &ModMap) -> bool {
        solve_in_span(&self.sub, f).is_some()
    }

    fn build(basis: Vec<ModMap>, sub: Vec<ModMap>) -> QuotientHom {
        if basis.is_empty() {
            return QuotientHom { basis, sub, reps: Vec::new() };
        }
        let f = basis[0].field();
        let len = basis[0].flatten().len();
        let s = maps_as_columns(&sub, f, len);
        let b = maps_as_columns(&basis, f, len);
        let cols = s.hstack(&b);
        let piv = cols.rref().pivots;
        let reps = piv.iter().filter(|&&c| c >= s.cols()).map(|&c| basis[c - s.cols()].clone()).collect();
        QuotientHom { basis, sub, reps }
    }
}

/// Hom(M, N) modulo maps factoring through projectives (through the cover of N).
pub fn stable_hom(m: &Rep, n: &Rep) -> QuotientHom {
    let cov = projective_cover(n);
    let sub = hom_basis(m, cov.sum.rep()).iter().map(|b| b.then(&cov.map)).collect();
    QuotientHom::build(hom_basis(m, n), sub)
}

/// Hom(M, N) modulo maps factoring through injectives (through the envelope of M).
pub fn costable_hom(m: &Rep, n: &Rep) -> QuotientHom {
    let env = injective_envelope(m);
    let sub = hom_basis(env.sum.rep(), n).iter().map(|b| env.map.then(b)).collect();
    QuotientHom::build(hom_basis(m, n), sub)
}

pub fn factors_through_projective(f: &ModMap) -> bool {
    let cov = projective_cover(&f.target);
    crate::rep::factor_through(f, &cov.map).is_some()
}

pub fn factors_through_injective(f: &ModMap) -> bool {
    let env = injective_envelope(&f.source);
    crate::rep::factor_from(f, &env.map).is_some()
}

/// A short exact sequence `left --inf--> mid --def--> right`.
#[derive(Clone, Debug)]
pub struct ShortExact {
    pub left: Rep,
    pub mid: Rep,
    pub right: Rep,
    pub inf: ModMap,
    pub def: ModMap,
}

impl ShortExact {
    pub fn is_exact(&self) -> bool {
        self.inf.is_injective()
            && self.def.is_surjective()
            && self.inf.then(&self.def).is_zero()
            && self.left.total_dim() + self.right.total_dim() == self.mid.total_dim()
    }

    /// Whether the sequence splits (the deflation has a section).
    pub fn splits(&self) -> bool {
        crate::rep::factor_through(&ModMap::identity(&self.right), &self.def).is_some()
    }
}

/// Ext¹(M, N) = Hom(ΩM, N) / {g ∘ ι : g ∈ Hom(P0, N)} for the projective cover of M.
#[derive(Clone, Debug)]
pub struct Ext1 {
    pub m: Rep,
    pub n: Rep,
    pub aug: ModMap,
    pub p0: StandardSum,
    pub omega: Rep,
    pub inc: ModMap,
    pub cocycles: QuotientHom,
}

pub fn ext1(m: &Rep, n: &Rep) -> Ext1 {
    let cov = projective_cover(m);
    let (omega, inc) = kernel(&cov.map);
    let sub = hom_basis(cov.sum.rep(), n).iter().map(|g| inc.then(g)).collect();
    let cocycles = QuotientHom::build(hom_basis(&omega, n), sub);
    Ext1 { m: m.clone(), n: n.clone(), aug: cov.map, p0: cov.sum, omega, inc, cocycles }
}

impl Ext1 {
    pub fn dim(&self) -> usize {
        self.cocycles.dim()
    }

    /// Basis classes of Ext¹ as cocycles ΩM → N.
    pub fn classes(&self) -> &[ModMap] {
        &self.cocycles.reps
    }

    pub fn is_trivial(&self, c: &ModMap) -> bool {
        self.cocycles.contains_in_sub(c)
    }

    /// Coordinates of a cocycle's class in the basis `classes()`.
    pub fn class_coords(&self, c: &ModMap) -> Vec<Scalar> {
        let mut all = self.cocycles.sub.clone();
        all.extend(self.cocycles.reps.iter().cloned());
        let x = solve_in_span(&all, c).expect("not a cocycle");
        x[self.cocycles.sub.len()..].to_vec()
    }

    pub fn class(&self, coeffs: &[Scalar]) -> ModMap {
        combine(&self.cocycles.reps, coeffs, &self.omega, &self.n)
    }

    /// Ω of an endomorphism φ of M, restricted from a lift to P0.
    pub fn omega_of(&self, phi: &ModMap) -> ModMap {
        let l = lift_projective(&self.p0, &self.aug.then(phi), &self.aug).expect("lift to cover");
        restrict(&self.inc, &self.inc.then(&l)).expect("lift preserves the syzygy")
    }

    /// Pullback of a class along φ: M → M.
    pub fn pull(&self, c: &ModMap, phi: &ModMap) -> ModMap {
        self.omega_of(phi).then(c)
    }

    /// E = (N ⊕ P0) / im [c; −ι], with N → E → M.
    pub fn realize(&self, c: &ModMap) -> ShortExact {
        let alg = &self.m.alg;
        let ds = direct_sum(alg, &[self.n.clone(), self.p0.rep().clone()]);
        let u = c.then(&ds.inj[0]).sub(&self.inc.then(&ds.inj[1]));
        let (mid, pi) = cokernel(&u);
        let inf = ds.inj[0].then(&pi);
        let def = descend(&pi, &ds.proj[1].then(&self.aug)).expect("augmentation kills the graph");
        ShortExact { left: self.n.clone(), mid, right: self.m.clone(), inf, def }
    }

    /// The subspace of classes killed (modulo coboundaries) by pulling back along every `rads` element
    /// and by pushing forward along every `rads_n` element. Returned as coefficient vectors.
    pub fn socle_classes(&self, rads_m: &[ModMap], rads_n: &[ModMap]) -> Vec<Vec<Scalar>> {
        let f = self.m.field();
        let k = self.dim();
        if k == 0 {
            return Vec::new();
        }
        // Each condition: Σ_i α_i T(c_i) ∈ span(sub). Unknowns α (k) and β per condition.
        let mut blocks: Vec<(Vec<ModMap>, Vec<ModMap>)> = Vec::new();
        for r in rads_m {
            let om = self.omega_of(r);
            let imgs: Vec<ModMap> = self.classes().iter().map(|c| om.then(c)).collect();
            blocks.push((imgs, self.cocycles.sub.clone()));
        }
        let mut push_sub: Option<Vec<ModMap>> = None;
        for r in rads_n {
            let imgs: Vec<ModMap> = self.classes().iter().map(|c| c.then(r)).collect();
            let sub = push_sub.get_or_insert_with(|| self.cocycles.sub.clone()).clone();
            blocks.push((imgs, sub));
        }
        let len = self.classes()[0].flatten().len();
        let total_beta: usize = blocks.iter().map(|(_, s)| s.len()).sum();
        let mut sys = Mat::zeros(f, blocks.len() * len, k + total_beta);
        let mut boff = k;
        for (bi, (imgs, sub)) in blocks.iter().enumerate() {
            let a = maps_as_columns(imgs, f, len);
            let s = maps_as_columns(sub, f, len);
            sys.paste(bi * len, 0, &a);
            sys.paste(bi * len, boff, &s.neg());
            boff += sub.len();
        }
        let ker = sys.kernel_basis();
        let alpha = ker.submatrix(0, k, 0, ker.cols()).image_basis();
        (0..alpha.cols()).map(|c| alpha.col(c).vectorize()).collect()
    }
}

/// Radical basis of End(M) as maps.
pub fn radical_endos(m: &Rep) -> Result<Vec<ModMap>> {
    let e = crate::decompose::endo_algebra(m)?;
    Ok((0..e.radical.cols()).map(|c| e.element(&e.radical.col(c).vectorize())).collect())
}

/// A nonzero class of Ext¹(Z, X) annihilated by rad End(Z) and rad End(X), the almost split class
/// when X = τZ in an extension-closed category containing both.
pub fn ar_class(z: &Rep, x: &Rep) -> Result<Option<(Ext1, ModMap)>> {
    let e = ext1(z, x);
    if e.dim() == 0 {
        return Ok(None);
    }
    let rz = radical_endos(z)?;
    let rx = radical_endos(x)?;
    let soc = e.socle_classes(&rz, &rx);
    match soc.first() {
        None => Ok(None),
        Some(a) => {
            let c = e.class(a);
            Ok(Some((e, c)))
        }
    }
}
