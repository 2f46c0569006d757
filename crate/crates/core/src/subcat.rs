//! Additive subcategories add(G₁, …, G_r) of Λ-mod with the inherited exact structure.

use crate::algebra::Algebra;
use crate::decompose::{decompose, find_iso_indecomposable, Summand};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::homological::{self, ext1};
use crate::rep::{
    cokernel, direct_sum, factor_from, factor_through, hom_basis, injective_envelope, kernel, projective_cover,
    restrict, descend, ModMap, Rep,
};

/// A summand of some object matched to a generator, with an isomorphism `gen → summand`.
#[derive(Clone, Debug)]
pub struct Located {
    pub summand: Summand,
    pub gen: usize,
    pub iso: ModMap,
}

/// Which relative class a stripping operation removes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Projective,
    Injective,
}

/// An object with the summands of one relative class removed, and the split maps.
#[derive(Clone, Debug)]
pub struct Stripped {
    pub rep: Rep,
    pub inc: ModMap,
    pub proj: ModMap,
}

#[derive(Clone, Debug)]
pub struct Subcat {
    pub alg: Algebra,
    pub gens: Vec<Rep>,
    pub rel_proj: Vec<usize>,
    pub rel_inj: Vec<usize>,
    /// True when the generators are all indecomposables of Λ-mod; absolute covers and envelopes are used then.
    pub module_category: bool,
    /// Per generator, an inflation into a sum of rel-injective generators.
    pub inflations: Vec<ModMap>,
    /// Per generator, a deflation from a sum of rel-projective generators.
    pub deflations: Vec<ModMap>,
}

/// Outcome of the extension-closure check.
#[derive(Clone, Debug, Default)]
pub struct ClosureReport {
    pub pairs: usize,
    pub classes: usize,
    /// All classes were realized (finite field with few classes) rather than basis classes and pairwise sums.
    pub exhaustive: bool,
    pub violations: Vec<String>,
}

impl ClosureReport {
    pub fn closed(&self) -> bool {
        self.violations.is_empty()
    }
}

impl Subcat {
    /// The subcategory generated by `gens`, which must be indecomposable and pairwise non-isomorphic.
    pub fn from_generators(alg: &Algebra, gens: Vec<Rep>) -> Result<Subcat> {
        Self::build(alg, gens, false)
    }

    /// Λ-mod presented by a complete list of its indecomposables.
    pub fn module_category(alg: &Algebra, gens: Vec<Rep>) -> Result<Subcat> {
        Self::build(alg, gens, true)
    }

    fn build(alg: &Algebra, gens: Vec<Rep>, module_category: bool) -> Result<Subcat> {
        for (i, g) in gens.iter().enumerate() {
            if g.alg != *alg {
                return Err(Error::AlgebraMismatch);
            }
            if g.is_zero() || !decompose(g)?.is_indecomposable() {
                return Err(Error::InvalidRep(format!("generator {i} is not indecomposable")));
            }
            for (j, h) in gens[..i].iter().enumerate() {
                if find_iso_indecomposable(h, g).is_some() {
                    return Err(Error::InvalidRep(format!("generators {j} and {i} are isomorphic")));
                }
            }
        }
        let n = gens.len();
        let mut ext_zero = vec![vec![false; n]; n];
        for i in 0..n {
            for j in 0..n {
                ext_zero[i][j] = ext1(&gens[i], &gens[j]).dim() == 0;
            }
        }
        let rel_proj: Vec<usize> = (0..n).filter(|&i| (0..n).all(|j| ext_zero[i][j])).collect();
        let rel_inj: Vec<usize> = (0..n).filter(|&j| (0..n).all(|i| ext_zero[i][j])).collect();
        let mut c = Subcat {
            alg: alg.clone(),
            gens,
            rel_proj,
            rel_inj,
            module_category,
            inflations: Vec::new(),
            deflations: Vec::new(),
        };
        if module_category {
            c.inflations = c.gens.iter().map(|g| injective_envelope(g).map).collect();
            c.deflations = c.gens.iter().map(|g| projective_cover(g).map).collect();
        } else {
            for i in 0..n {
                let e = c.search_inflation(i)?;
                c.inflations.push(e);
                let p = c.search_deflation(i)?;
                c.deflations.push(p);
            }
        }
        Ok(c)
    }

    pub fn field(&self) -> Field {
        self.alg.field
    }

    /// Greedy minimal mono from generator `i` into copies of rel-injectives, one copy per hom-basis map
    /// to start with; copies are dropped while the map stays mono with cokernel in C.
    fn search_inflation(&self, i: usize) -> Result<ModMap> {
        let g = &self.gens[i];
        if self.rel_inj.contains(&i) {
            return Ok(ModMap::identity(g));
        }
        let mut cands: Vec<(usize, ModMap)> = Vec::new();
        for &j in &self.rel_inj {
            for h in hom_basis(g, &self.gens[j]) {
                cands.push((j, h));
            }
        }
        let assemble = |keep: &[bool]| -> ModMap {
            let chosen: Vec<&(usize, ModMap)> = cands.iter().zip(keep).filter(|(_, &k)| k).map(|(c, _)| c).collect();
            let ds = direct_sum(&self.alg, &chosen.iter().map(|(j, _)| self.gens[*j].clone()).collect::<Vec<_>>());
            let mut e = ModMap::zero(g, &ds.rep);
            for (k, (_, h)) in chosen.iter().enumerate() {
                e = e.add(&h.then(&ds.inj[k]));
            }
            e
        };
        let mut keep = vec![true; cands.len()];
        let full = assemble(&keep);
        if !full.is_injective() {
            return Err(Error::NotEnoughInjectives(i));
        }
        if !self.contains(&cokernel(&full).0)? {
            return Err(Error::MembershipFailure(format!("cokernel of the rel-injective approximation of generator {i}")));
        }
        for k in 0..keep.len() {
            keep[k] = false;
            let e = assemble(&keep);
            if !(e.is_injective() && self.contains(&cokernel(&e).0)?) {
                keep[k] = true;
            }
        }
        Ok(assemble(&keep))
    }

    fn search_deflation(&self, i: usize) -> Result<ModMap> {
        let g = &self.gens[i];
        if self.rel_proj.contains(&i) {
            return Ok(ModMap::identity(g));
        }
        let mut cands: Vec<(usize, ModMap)> = Vec::new();
        for &j in &self.rel_proj {
            for h in hom_basis(&self.gens[j], g) {
                cands.push((j, h));
            }
        }
        let assemble = |keep: &[bool]| -> ModMap {
            let chosen: Vec<&(usize, ModMap)> = cands.iter().zip(keep).filter(|(_, &k)| k).map(|(c, _)| c).collect();
            let ds = direct_sum(&self.alg, &chosen.iter().map(|(j, _)| self.gens[*j].clone()).collect::<Vec<_>>());
            let mut p = ModMap::zero(&ds.rep, g);
            for (k, (_, h)) in chosen.iter().enumerate() {
                p = p.add(&ds.proj[k].then(h));
            }
            p
        };
        let mut keep = vec![true; cands.len()];
        let full = assemble(&keep);
        if !full.is_surjective() {
            return Err(Error::NotEnoughProjectives(i));
        }
        if !self.contains(&kernel(&full).0)? {
            return Err(Error::MembershipFailure(format!("kernel of the rel-projective approximation of generator {i}")));
        }
        for k in 0..keep.len() {
            keep[k] = false;
            let p = assemble(&keep);
            if !(p.is_surjective() && self.contains(&kernel(&p).0)?) {
                keep[k] = true;
            }
        }
        Ok(assemble(&keep))
    }

    /// Index of the generator isomorphic to the indecomposable `x`, with an isomorphism `gen → x`.
    pub fn match_generator(&self, x: &Rep) -> Option<(usize, ModMap)> {
        self.gens.iter().enumerate().find_map(|(i, g)| find_iso_indecomposable(g, x).map(|phi| (i, phi)))
    }

    /// Decompose `x` and match every summand with a generator; `None` if some summand is not in C.
    pub fn locate(&self, x: &Rep) -> Result<Option<Vec<Located>>> {
        let d = decompose(x)?;
        let mut out = Vec::new();
        for s in d.summands {
            match self.match_generator(&s.rep) {
                Some((gen, iso)) => out.push(Located { summand: s, gen, iso }),
                None => return Ok(None),
            }
        }
        Ok(Some(out))
    }

    /// Multiset of generator indices of `x`, if `x` lies in C.
    pub fn contains_multiset(&self, x: &Rep) -> Result<Option<Vec<usize>>> {
        Ok(self.locate(x)?.map(|ls| {
            let mut v: Vec<usize> = ls.iter().map(|l| l.gen).collect();
            v.sort_unstable();
            v
        }))
    }

    pub fn contains(&self, x: &Rep) -> Result<bool> {
        if x.alg != self.alg {
            return Err(Error::AlgebraMismatch);
        }
        Ok(self.locate(x)?.is_some())
    }

    /// Whether the indecomposable `x` is rel-projective (`Side::Projective`) or rel-injective.
    pub fn is_relative(&self, x: &Rep, side: Side) -> bool {
        if self.module_category {
            return match side {
                Side::Projective => homological::is_projective(x),
                Side::Injective => homological::is_injective(x),
            };
        }
        let list = match side {
            Side::Projective => &self.rel_proj,
            Side::Injective => &self.rel_inj,
        };
        list.iter().any(|&i| find_iso_indecomposable(&self.gens[i], x).is_some())
    }

    /// `x` with all rel-projective (or rel-injective) summands removed.
    pub fn strip(&self, x: &Rep, side: Side) -> Result<Stripped> {
        let d = decompose(x)?;
        let kept: Vec<&Summand> = d.summands.iter().filter(|s| !self.is_relative(&s.rep, side)).collect();
        let ds = direct_sum(&self.alg, &kept.iter().map(|s| s.rep.clone()).collect::<Vec<_>>());
        let mut inc = ModMap::zero(&ds.rep, x);
        let mut proj = ModMap::zero(x, &ds.rep);
        for (k, s) in kept.iter().enumerate() {
            inc = inc.add(&ds.proj[k].then(&s.inc));
            proj = proj.add(&s.proj.then(&ds.inj[k]));
        }
        Ok(Stripped { rep: ds.rep, inc, proj })
    }

    /// An inflation of `x` into a rel-injective object.
    pub fn inflation(&self, x: &Rep) -> Result<ModMap> {
        if self.module_category {
            return Ok(injective_envelope(x).map);
        }
        let parts = self.locate(x)?.ok_or_else(|| Error::MembershipFailure(format!("object {x} is not in C")))?;
        let ds = direct_sum(&self.alg, &parts.iter().map(|p| self.inflations[p.gen].target.clone()).collect::<Vec<_>>());
        let mut e = ModMap::zero(x, &ds.rep);
        for (k, p) in parts.iter().enumerate() {
            let inv = p.iso.inverse().expect("isomorphism");
            e = e.add(&p.summand.proj.then(&inv).then(&self.inflations[p.gen]).then(&ds.inj[k]));
        }
        Ok(e)
    }

    /// A deflation onto `x` from a rel-projective object.
    pub fn deflation(&self, x: &Rep) -> Result<ModMap> {
        if self.module_category {
            return Ok(projective_cover(x).map);
        }
        let parts = self.locate(x)?.ok_or_else(|| Error::MembershipFailure(format!("object {x} is not in C")))?;
        let ds = direct_sum(&self.alg, &parts.iter().map(|p| self.deflations[p.gen].source.clone()).collect::<Vec<_>>());
        let mut q = ModMap::zero(&ds.rep, x);
        for (k, p) in parts.iter().enumerate() {
            q = q.add(&ds.proj[k].then(&self.deflations[p.gen]).then(&p.iso).then(&p.summand.inc));
        }
        Ok(q)
    }

    /// Relative cosyzygy of `h: X → Y`, the induced map between cokernels of the inflations.
    pub fn cosyzygy_morphism(&self, h: &ModMap) -> Result<ModMap> {
        if self.module_category {
            return Ok(homological::cosyzygy_morphism(h));
        }
        let ex = self.inflation(&h.source)?;
        let ey = self.inflation(&h.target)?;
        let l = factor_from(&h.then(&ey), &ex)
            .ok_or_else(|| Error::Certification("extension along an inflation into a rel-injective".into()))?;
        let (_, px) = cokernel(&ex);
        let (_, py) = cokernel(&ey);
        Ok(descend(&px, &l.then(&py)).expect("extension maps the image of the inflation"))
    }

    /// Relative syzygy of `h: X → Y`, the induced map between kernels of the deflations.
    pub fn syzygy_morphism(&self, h: &ModMap) -> Result<ModMap> {
        if self.module_category {
            return Ok(homological::syzygy_morphism(h));
        }
        let px = self.deflation(&h.source)?;
        let py = self.deflation(&h.target)?;
        let l = factor_through(&px.then(h), &py)
            .ok_or_else(|| Error::Certification("lift along a deflation from a rel-projective".into()))?;
        let (_, ix) = kernel(&px);
        let (_, iy) = kernel(&py);
        Ok(restrict(&iy, &ix.then(&l)).expect("lift preserves the kernel"))
    }

    pub fn cosyzygy(&self, x: &Rep) -> Result<Rep> {
        Ok(self.cosyzygy_morphism(&ModMap::identity(x))?.source.clone())
    }

    pub fn syzygy(&self, x: &Rep) -> Result<Rep> {
        Ok(self.syzygy_morphism(&ModMap::identity(x))?.source.clone())
    }

    /// Projectives and injectives coincide.
    pub fn check_frobenius(&self) -> bool {
        self.rel_proj == self.rel_inj
    }

    /// Realize Ext¹ classes between generator pairs and test their middle terms for membership.
    pub fn check_extension_closed(&self) -> Result<ClosureReport> {
        let f = self.field();
        let mut rep = ClosureReport { exhaustive: true, ..Default::default() };
        for (i, g) in self.gens.iter().enumerate() {
            for (j, h) in self.gens.iter().enumerate() {
                let e = ext1(g, h);
                let k = e.dim();
                rep.pairs += 1;
                if k == 0 {
                    continue;
                }
                let coeffs = class_sample(f, k);
                if !is_exhaustive(f, k) {
                    rep.exhaustive = false;
                }
                for c in coeffs {
                    rep.classes += 1;
                    let seq = e.realize(&e.class(&c));
                    if !self.contains(&seq.mid)? {
                        rep.violations.push(format!("Ext1(G{i}, G{j}) class {c:?} has middle term {} outside C", seq.mid));
                    }
                }
            }
        }
        Ok(rep)
    }
}

const EXHAUSTIVE_LIMIT: u64 = 64;

fn is_exhaustive(f: Field, k: usize) -> bool {
    match f {
        Field::Prime(p) => p.checked_pow(k as u32).is_some_and(|n| n <= EXHAUSTIVE_LIMIT),
        Field::Rationals => false,
    }
}

/// Coefficient vectors to realize: every nonzero vector when few, else basis vectors and pairwise sums.
fn class_sample(f: Field, k: usize) -> Vec<Vec<crate::field::Scalar>> {
    let mut out = Vec::new();
    if is_exhaustive(f, k) {
        let p = f.characteristic();
        let total = p.pow(k as u32);
        for n in 1..total {
            let mut v = Vec::with_capacity(k);
            let mut m = n;
            for _ in 0..k {
                v.push(f.from_i64((m % p) as i64));
                m /= p;
            }
            out.push(v);
        }
        return out;
    }
    let unit = |i: usize| {
        let mut v = vec![f.zero(); k];
        v[i] = f.one();
        v
    };
    for i in 0..k {
        out.push(unit(i));
    }
    for i in 0..k {
        for j in i + 1..k {
            let mut v = unit(i);
            v[j] = f.one();
            out.push(v);
        }
    }
    out
}
