//! Knitting: enumerate indecomposables and almost split sequences from the projectives (or injectives).

use super::ar_sequence_between;
use super::backend::Backend;
use super::oracle::{oracle_verify, Certificate, Method};
use super::smon::Smon;
use crate::algebra::Algebra;
use crate::decompose::{decompose, find_iso_indecomposable};
use crate::error::{Error, Result};
use crate::homological::{self, ext1, ShortExact};
use crate::morphcat::MorObj;
use crate::rep::{cokernel, radical, socle, Rep};
use std::collections::{BTreeMap, VecDeque};

/// A category whose AR quiver can be knitted: objects are modules over `ambient()`.
pub trait KnitCategory {
    fn ambient(&self) -> Algebra;
    fn projective_seeds(&self) -> Result<Vec<Rep>>;
    fn injective_seeds(&self) -> Result<Vec<Rep>>;
    /// Further indecomposables known to lie in the category, so that knitting can start even when
    /// every projective is injective.
    fn extra_seeds(&self) -> Result<Vec<Rep>>;
    /// τ of an indecomposable non-projective object.
    fn tau(&self, z: &Rep) -> Result<Rep>;
    /// τ⁻¹ of an indecomposable non-injective object.
    fn tau_inv(&self, x: &Rep) -> Result<Rep>;
    /// Whether `tau_inv` is available; otherwise knitting only uses τ.
    fn has_tau_inv(&self) -> bool;
    /// Membership test for newly discovered objects.
    fn contains(&self, x: &Rep) -> Result<bool>;
}

/// Λ-mod with τ = DTr.
pub struct ModuleCat {
    pub alg: Algebra,
}

impl KnitCategory for ModuleCat {
    fn ambient(&self) -> Algebra {
        self.alg.clone()
    }
    fn projective_seeds(&self) -> Result<Vec<Rep>> {
        Ok((0..self.alg.num_vertices()).map(|v| Rep::standard_proj(&self.alg, v)).collect())
    }
    fn injective_seeds(&self) -> Result<Vec<Rep>> {
        Ok((0..self.alg.num_vertices()).map(|v| Rep::standard_inj(&self.alg, v)).collect())
    }
    fn extra_seeds(&self) -> Result<Vec<Rep>> {
        let mut out = Vec::new();
        for v in 0..self.alg.num_vertices() {
            let p = Rep::standard_proj(&self.alg, v);
            out.extend(decompose(&radical(&p).0)?.summands.into_iter().map(|s| s.rep));
            let i = Rep::standard_inj(&self.alg, v);
            let (_, soc) = socle(&i);
            out.extend(decompose(&cokernel(&soc).0)?.summands.into_iter().map(|s| s.rep));
        }
        Ok(out)
    }
    fn tau(&self, z: &Rep) -> Result<Rep> {
        homological::tau(z)
    }
    fn tau_inv(&self, x: &Rep) -> Result<Rep> {
        homological::tau_inv(x)
    }
    fn has_tau_inv(&self) -> bool {
        true
    }
    fn contains(&self, _x: &Rep) -> Result<bool> {
        Ok(true)
    }
}

impl KnitCategory for Smon {
    fn ambient(&self) -> Algebra {
        self.c.alg.t2()
    }
    fn projective_seeds(&self) -> Result<Vec<Rep>> {
        let mut out = Vec::new();
        for &i in &self.c.rel_proj {
            let p = &self.c.gens[i];
            out.push(MorObj::identity(p).to_t2());
            out.push(MorObj::from_zero(p).to_t2());
        }
        Ok(out)
    }
    fn injective_seeds(&self) -> Result<Vec<Rep>> {
        let mut out = Vec::new();
        for &i in &self.c.rel_inj {
            let p = &self.c.gens[i];
            out.push(MorObj::identity(p).to_t2());
            out.push(MorObj::from_zero(p).to_t2());
        }
        Ok(out)
    }
    fn extra_seeds(&self) -> Result<Vec<Rep>> {
        let mut out = Vec::new();
        for g in &self.c.gens {
            out.push(MorObj::from_zero(g).to_t2());
            out.push(MorObj::identity(g).to_t2());
        }
        Ok(out)
    }
    fn tau(&self, z: &Rep) -> Result<Rep> {
        Ok(self.tau_s(&MorObj::from_t2(&self.c.alg, z))?.to_t2())
    }
    fn tau_inv(&self, x: &Rep) -> Result<Rep> {
        Ok(self.tau_s_inverse(&MorObj::from_t2(&self.c.alg, x))?.to_t2())
    }
    fn has_tau_inv(&self) -> bool {
        self.backend.has_inverse()
    }
    fn contains(&self, x: &Rep) -> Result<bool> {
        MorObj::from_t2(&self.c.alg, x).in_s(&self.c)
    }
}

/// One knitted almost split sequence `left → ⊕ mid → right`, indices into the inventory.
#[derive(Clone, Debug)]
pub struct KnitSeq {
    pub left: usize,
    pub right: usize,
    /// (object, multiplicity) for the middle term.
    pub mid: Vec<(usize, usize)>,
    pub seq: ShortExact,
    pub cert: Option<Certificate>,
}

#[derive(Clone, Debug)]
pub struct KnitResult {
    pub objects: Vec<Rep>,
    pub projective: Vec<bool>,
    pub injective: Vec<bool>,
    pub sequences: Vec<KnitSeq>,
    /// Irreducible-map multiplicities, keyed by (source, target).
    pub arrows: BTreeMap<(usize, usize), usize>,
    /// τ-links `(z, τz)`.
    pub tau: Vec<(usize, usize)>,
}

impl KnitResult {
    pub fn all_certified(&self) -> bool {
        self.sequences.iter().all(|s| s.cert.as_ref().is_some_and(|c| c.passed()))
    }

    /// τ maps the non-projectives bijectively onto the non-injectives.
    pub fn tau_bijective(&self) -> bool {
        let n = self.objects.len();
        let mut dom = vec![0usize; n];
        let mut cod = vec![0usize; n];
        for &(z, x) in &self.tau {
            dom[z] += 1;
            cod[x] += 1;
        }
        (0..n).all(|i| dom[i] == usize::from(!self.projective[i]) && cod[i] == usize::from(!self.injective[i]))
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.values().sum()
    }

    /// Run the definitional oracle on every sequence against the full inventory.
    pub fn certify(&mut self) -> Result<bool> {
        for s in &mut self.sequences {
            s.cert = Some(oracle_verify(&s.seq, &self.objects, Method::Formula)?);
        }
        Ok(self.all_certified())
    }
}

struct Inventory {
    objects: Vec<Rep>,
    queue: VecDeque<usize>,
    cap: usize,
}

impl Inventory {
    fn find(&self, x: &Rep) -> Option<usize> {
        self.objects.iter().position(|y| y.dims == x.dims && find_iso_indecomposable(y, x).is_some())
    }

    fn add(&mut self, x: Rep) -> Result<usize> {
        if let Some(i) = self.find(&x) {
            return Ok(i);
        }
        if self.objects.len() >= self.cap {
            return Err(Error::CapExceeded(self.cap));
        }
        self.objects.push(x);
        self.queue.push_back(self.objects.len() - 1);
        Ok(self.objects.len() - 1)
    }
}

fn single_summand(x: &Rep, what: &str) -> Result<Rep> {
    let d = decompose(x)?;
    if d.summands.len() != 1 {
        return Err(Error::Certification(format!("{what} {x} is not indecomposable")));
    }
    Ok(x.clone())
}

/// Knit the AR quiver of `cat`, stopping with `CapExceeded` past `cap` objects. Every discovered
/// object gets its sequence ending at it (via τ) and, when τ⁻ is available, the one starting at it.
pub fn knit(cat: &dyn KnitCategory, cap: usize) -> Result<KnitResult> {
    let mut inv = Inventory { objects: Vec::new(), queue: VecDeque::new(), cap };
    let mut proj_idx = Vec::new();
    let mut inj_idx = Vec::new();
    for p in cat.projective_seeds()? {
        proj_idx.push(inv.add(single_summand(&p, "projective seed")?)?);
    }
    for i in cat.injective_seeds()? {
        inj_idx.push(inv.add(single_summand(&i, "injective seed")?)?);
    }
    for x in cat.extra_seeds()? {
        inv.add(single_summand(&x, "seed")?)?;
    }
    let mut sequences: Vec<KnitSeq> = Vec::new();
    let mut ending: BTreeMap<usize, usize> = BTreeMap::new();
    let mut starting: BTreeMap<usize, usize> = BTreeMap::new();
    while let Some(i) = inv.queue.pop_front() {
        let x = inv.objects[i].clone();
        let mut pairs = Vec::new();
        if !proj_idx.contains(&i) && !ending.contains_key(&i) {
            let t = single_summand(&cat.tau(&x)?, "translate")?;
            if inv.find(&t).is_none() && !cat.contains(&t)? {
                return Err(Error::Certification(format!("translate {t} left the category")));
            }
            pairs.push((inv.add(t)?, i));
        }
        if cat.has_tau_inv() && !inj_idx.contains(&i) && !starting.contains_key(&i) {
            let z = single_summand(&cat.tau_inv(&x)?, "translate")?;
            if inv.find(&z).is_none() && !cat.contains(&z)? {
                return Err(Error::Certification(format!("translate {z} left the category")));
            }
            pairs.push((i, inv.add(z)?));
        }
        for (left, right) in pairs {
            match (starting.get(&left), ending.get(&right)) {
                (None, None) => {}
                (Some(&s), _) | (_, Some(&s)) => {
                    if sequences[s].left != left || sequences[s].right != right {
                        return Err(Error::Certification(format!("τ disagrees at objects {left} and {right}")));
                    }
                    continue;
                }
            }
            let seq = ar_sequence_between(&inv.objects[right], &inv.objects[left])?;
            let d = decompose(&seq.mid)?;
            let mut mid: BTreeMap<usize, usize> = BTreeMap::new();
            for s in d.summands {
                if inv.find(&s.rep).is_none() && !cat.contains(&s.rep)? {
                    return Err(Error::Certification(format!("middle summand {} left the category", s.rep)));
                }
                let k = inv.add(s.rep)?;
                *mid.entry(k).or_default() += 1;
            }
            starting.insert(left, sequences.len());
            ending.insert(right, sequences.len());
            sequences.push(KnitSeq { left, right, mid: mid.into_iter().collect(), seq, cert: None });
        }
    }
    let n = inv.objects.len();
    let mut projective = vec![false; n];
    let mut injective = vec![false; n];
    for &p in &proj_idx {
        projective[p] = true;
    }
    for &i in &inj_idx {
        injective[i] = true;
    }
    // Seeds are only candidates: confirm them by Ext¹-vanishing against everything found.
    for &p in &proj_idx {
        if inv.objects.iter().any(|y| ext1(&inv.objects[p], y).dim() != 0) {
            return Err(Error::Certification(format!("seed {} is not projective", inv.objects[p])));
        }
    }
    for &i in &inj_idx {
        if inv.objects.iter().any(|y| ext1(y, &inv.objects[i]).dim() != 0) {
            return Err(Error::Certification(format!("seed {} is not injective", inv.objects[i])));
        }
    }
    let mut arrows: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut tau = Vec::new();
    for s in &sequences {
        tau.push((s.right, s.left));
        for &(y, m) in &s.mid {
            for key in [(s.left, y), (y, s.right)] {
                let e = arrows.entry(key).or_insert(m);
                if *e != m {
                    return Err(Error::Certification(format!("inconsistent arrow multiplicity {key:?}")));
                }
            }
        }
    }
    Ok(KnitResult { objects: inv.objects, projective, injective, sequences, arrows, tau })
}

/// All indecomposable Λ-modules of a representation-finite algebra, in knitting order.
pub fn module_indecomposables(alg: &Algebra, cap: usize) -> Result<Vec<Rep>> {
    Ok(knit(&ModuleCat { alg: alg.clone() }, cap)?.objects)
}

/// Λ-mod as a subcategory, with its generators enumerated by knitting.
pub fn module_subcat(alg: &Algebra, cap: usize) -> Result<crate::subcat::Subcat> {
    crate::subcat::Subcat::module_category(alg, module_indecomposables(alg, cap)?)
}

/// One level of the power iteration: S(C) as a subcategory of T₂-modules, with the backend for it.
#[derive(Clone, Debug)]
pub struct Level {
    pub smon: Smon,
    pub knit: KnitResult,
}

/// Knit S(C), S(S(C)), … up to `power` levels. Each next level treats the knitted S(C) as a
/// Gorenstein-projective category over T₂ and models its translate with the gorenstein backend,
/// validated against the search backend before use.
pub fn power_knit(c: crate::subcat::Subcat, backend: Backend, power: usize, cap: usize) -> Result<Vec<Level>> {
    let mut levels: Vec<Level> = Vec::new();
    let mut smon = Smon::new(c, backend)?;
    for k in 0..power {
        if k > 0 {
            super::backend::require_valid(&smon.c, smon.backend)?;
        }
        let mut res = knit(&smon, cap)?;
        res.certify()?;
        let next_gor = match smon.backend {
            Backend::Ambient => {
                let g = super::backend::self_injective_dimension(&smon.c.alg, 8);
                (g == Some(0)).then_some(1)
            }
            Backend::Frobenius(_) => super::backend::self_injective_dimension(&smon.c.alg, 8).map(|g| g + 1),
            Backend::Gorenstein(g) => Some(g + 1),
            Backend::Search => None,
        };
        let next = if k + 1 < power {
            let g = next_gor.ok_or_else(|| {
                Error::BackendUnsupported(format!("cannot iterate S past level {} with backend {}", k + 1, smon.backend))
            })?;
            let sub = crate::subcat::Subcat::from_generators(&smon.c.alg.t2(), res.objects.clone())?;
            Some(Smon::new(sub, Backend::Gorenstein(g))?)
        } else {
            None
        };
        levels.push(Level { smon: smon.clone(), knit: res });
        match next {
            Some(s) => smon = s,
            None => break,
        }
    }
    Ok(levels)
}
