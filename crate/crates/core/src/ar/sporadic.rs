//! Almost split sequences of H(C) and F(C) built directly from one of C.

use crate::error::{Error, Result};
use crate::homological::ShortExact;
use crate::morphcat::{t2_map, MorObj};
use crate::rep::{cokernel, direct_sum, factor_from, factor_through, ModMap, Rep};
use crate::subcat::Subcat;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Template {
    /// In H(C), ending at (0 → C).
    HZeroTo,
    /// In H(C), ending at (C = C).
    HIdentity,
    /// In F(C), ending at (C = C).
    FIdentity,
    /// In F(C), starting at (A = A).
    FStartIdentity,
    /// In F(C), ending at (C → 0).
    FToZero,
}

#[derive(Clone, Debug)]
pub struct Sporadic {
    pub template: Template,
    pub left: MorObj,
    pub mid: MorObj,
    pub right: MorObj,
    /// The sequence as T₂-modules.
    pub seq: ShortExact,
}

fn assemble(template: Template, left: MorObj, mid: MorObj, right: MorObj, inf: (ModMap, ModMap), def: (ModMap, ModMap)) -> Sporadic {
    let i = t2_map(&left, &mid, &inf.0, &inf.1);
    let d = t2_map(&mid, &right, &def.0, &def.1);
    let seq = ShortExact { left: i.source.clone(), mid: i.target.clone(), right: d.target.clone(), inf: i, def: d };
    Sporadic { template, left, mid, right, seq }
}

/// The five template sequences from an almost split sequence `A →f B →g C` of C.
pub fn sporadic_sequences(c: &Subcat, delta: &ShortExact) -> Result<Vec<Sporadic>> {
    let base = &c.alg;
    let (a, cc) = (&delta.left, &delta.right);
    let (f, g) = (&delta.inf, &delta.def);
    let zero = Rep::zero(base);
    let z = |x: &Rep, y: &Rep| ModMap::zero(x, y);
    let id = ModMap::identity;
    let mut out = Vec::new();

    // (A = A) → (A → B) → (0 → C).
    out.push(assemble(
        Template::HZeroTo,
        MorObj::identity(a),
        MorObj::new(f.clone()),
        MorObj::from_zero(cc),
        (id(a), f.clone()),
        (z(a, &zero), g.clone()),
    ));

    // (A → 0) → (B → C) → (C = C), in H(C) and again in F(C).
    for t in [Template::HIdentity, Template::FIdentity] {
        out.push(assemble(
            t,
            MorObj::to_zero(a),
            MorObj::new(g.clone()),
            MorObj::identity(cc),
            (f.clone(), z(&zero, cc)),
            (g.clone(), id(cc)),
        ));
    }

    // (A = A) → (A ⊕ P(C) → B) → (P(C) → C).
    let p = c.deflation(cc)?;
    let pc = p.source.clone();
    let pp = factor_through(&p, g).ok_or_else(|| Error::Certification("lift of the deflation onto C".into()))?;
    let top = direct_sum(base, &[a.clone(), pc.clone()]);
    let mid_map = top.proj[0].then(f).add(&top.proj[1].then(&pp));
    out.push(assemble(
        Template::FStartIdentity,
        MorObj::identity(a),
        MorObj::new(mid_map),
        MorObj::new(p.clone()),
        (top.inj[0].clone(), f.clone()),
        (top.proj[1].clone(), g.clone()),
    ));

    // (I(A) → Ω⁻¹A) → (I(A) ⊕ C → Ω⁻¹A) → (C → 0).
    let e = c.inflation(a)?;
    let ia = e.target.clone();
    let (_, cmap) = cokernel(&e);
    let ep = factor_from(&e, f).ok_or_else(|| Error::Certification("extension of the inflation along f".into()))?;
    let top = direct_sum(base, &[ia.clone(), cc.clone()]);
    let col = ep.then(&top.inj[0]).add(&g.then(&top.inj[1]));
    let (_, d) = cokernel(&col);
    let phi = crate::rep::descend(&cmap, &top.inj[0].then(&d)).expect("ι₁ respects the images");
    let phi_inv = phi.inverse().ok_or_else(|| Error::Certification("cokernel comparison is not invertible".into()))?;
    let dp = d.then(&phi_inv);
    let omega = cmap.target.clone();
    out.push(assemble(
        Template::FToZero,
        MorObj::new(cmap.clone()),
        MorObj::new(dp),
        MorObj::to_zero(cc),
        (top.inj[0].clone(), id(&omega)),
        (top.proj[1].clone(), z(&omega, &zero)),
    ));
    Ok(out)
}
