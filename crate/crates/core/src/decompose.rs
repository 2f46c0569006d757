//! Krull–Schmidt decomposition with certified indecomposable summands, and isomorphism tests.

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::linalg::Mat;
use crate::poly::min_poly;
use crate::rep::{hom_basis, radical, submodule, ModMap, Rep};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const DEFAULT_SEED: u64 = 0x5eed_a5a5;

/// Seeded generator used by every randomized probe.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random scalar: small integers over ℚ, uniform residues over 𝔽_p.
pub fn random_scalar(field: Field, rng: &mut ChaCha8Rng) -> Scalar {
    match field {
        Field::Rationals => field.from_i64(rng.gen_range(-9..=9)),
        Field::Prime(p) => field.from_i64(rng.gen_range(0..p) as i64),
    }
}

/// End(m) presented by a basis, with its Jacobson radical.
#[derive(Clone, Debug)]
pub struct EndAlgebra {
    pub module: Rep,
    pub basis: Vec<ModMap>,
    /// Radical as coefficient columns in `basis`.
    pub radical: Mat,
}

impl EndAlgebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn residue_dim(&self) -> usize {
        self.dim() - self.radical.cols()
    }

    pub fn element(&self, coeffs: &[Scalar]) -> ModMap {
        crate::rep::combine(&self.basis, coeffs, &self.module, &self.module)
    }

    /// Multiplication table: `table[i][j]` = coordinates of `basis[i] ∘ basis[j]`.
    pub fn structure_constants(&self) -> Vec<Vec<Vec<Scalar>>> {
        let coords = Coordinates::new(&self.basis, self.module.field());
        self.basis
            .iter()
            .map(|a| self.basis.iter().map(|b| coords.of(&a.after(b))).collect())
            .collect()
    }
}

/// Coordinates of maps in the span of a basis, read off from a set of pivot entries.
pub struct Coordinates {
    positions: Vec<(usize, usize, usize)>,
    inverse: Mat,
}

impl Coordinates {
    pub fn new(basis: &[ModMap], field: Field) -> Coordinates {
        if basis.is_empty() {
            return Coordinates { positions: Vec::new(), inverse: Mat::zeros(field, 0, 0) };
        }
        let m = &basis[0];
        let mut index = Vec::new();
        for (v, mat) in m.mats.iter().enumerate() {
            for c in 0..mat.cols() {
                for r in 0..mat.rows() {
                    index.push((v, r, c));
                }
            }
        }
        let cols = crate::rep::maps_as_columns(basis, field, index.len());
        let piv = cols.transpose().rref().pivots;
        let positions: Vec<_> = piv.iter().map(|&i| index[i]).collect();
        let inverse = cols.select_rows(&piv).inverse().expect("basis maps are dependent");
        Coordinates { positions, inverse }
    }

    pub fn of(&self, f: &ModMap) -> Vec<Scalar> {
        let field = self.inverse.field();
        let y = Mat::from_vec(
            field,
            self.positions.len(),
            1,
            self.positions.iter().map(|&(v, r, c)| f.mats[v].get(r, c).clone()).collect(),
        );
        self.inverse.mul(&y).vectorize()
    }
}

/// End(m) with its radical computed as the kernel of the trace form of the action on m.
/// Over 𝔽_p this needs p > dim m so that composition multiplicities are nonzero in k.
pub fn endo_algebra(m: &Rep) -> Result<EndAlgebra> {
    let f = m.field();
    if let Field::Prime(p) = f {
        if p as usize <= m.total_dim() {
            return Err(Error::FieldTooSmall { p, dim: m.total_dim() });
        }
    }
    let basis = hom_basis(m, m);
    let d = basis.len();
    let mut gram = Mat::zeros(f, d, d);
    for i in 0..d {
        for j in i..d {
            let mut t = f.zero();
            for v in 0..m.dims.len() {
                let (a, b) = (&basis[i].mats[v], &basis[j].mats[v]);
                for r in 0..a.rows() {
                    for c in 0..a.cols() {
                        t = f.add(&t, &f.mul(a.get(r, c), b.get(c, r)));
                    }
                }
            }
            gram.set(i, j, t.clone());
            gram.set(j, i, t);
        }
    }
    let radical = gram.kernel_basis();
    Ok(EndAlgebra { module: m.clone(), basis, radical })
}

/// Radical of an abstract algebra given by structure constants (`table[i][j][k]`), via the trace form.
pub fn algebra_radical(field: Field, table: &[Vec<Vec<Scalar>>]) -> Result<Mat> {
    let d = table.len();
    if let Field::Prime(p) = field {
        if p as usize <= d {
            return Err(Error::FieldTooSmall { p, dim: d });
        }
    }
    // tr(L_{e_k}) = Σ_b c[k][b][b]
    let traces: Vec<Scalar> = (0..d)
        .map(|k| (0..d).fold(field.zero(), |acc, b| field.add(&acc, &table[k][b][b])))
        .collect();
    let mut gram = Mat::zeros(field, d, d);
    for i in 0..d {
        for j in 0..d {
            let t = (0..d).fold(field.zero(), |acc, k| field.add(&acc, &field.mul(&table[i][j][k], &traces[k])));
            gram.set(i, j, t);
        }
    }
    Ok(gram.kernel_basis())
}

/// How an indecomposable leaf was certified.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LeafCertificate {
    /// End/rad is one-dimensional.
    Split,
    /// End/rad is a field extension of the given degree, witnessed by an element with irreducible minimal polynomial.
    FieldExtension(usize),
}

#[derive(Clone, Debug)]
pub struct Summand {
    pub rep: Rep,
    pub inc: ModMap,
    pub proj: ModMap,
    pub cert: LeafCertificate,
    /// Index of the isomorphism class among the decomposition's classes.
    pub class: usize,
}

#[derive(Clone, Debug)]
pub struct Decomposition {
    pub module: Rep,
    pub summands: Vec<Summand>,
    /// One representative summand index per isomorphism class, with multiplicity.
    pub classes: Vec<(usize, usize)>,
    /// Per vertex, the columns of the summand inclusions side by side.
    pub change_of_basis: Vec<Mat>,
}

impl Decomposition {
    pub fn is_indecomposable(&self) -> bool {
        self.summands.len() == 1
    }

    pub fn class_reps(&self) -> Vec<(Rep, usize)> {
        self.classes.iter().map(|&(i, k)| (self.summands[i].rep.clone(), k)).collect()
    }
}

pub fn decompose(m: &Rep) -> Result<Decomposition> {
    decompose_seeded(m, DEFAULT_SEED)
}

pub fn decompose_seeded(m: &Rep, seed: u64) -> Result<Decomposition> {
    let mut rng = rng(seed);
    let mut leaves: Vec<(Rep, ModMap, LeafCertificate)> = Vec::new();
    let mut stack = vec![(m.clone(), ModMap::identity(m))];
    while let Some((x, inc)) = stack.pop() {
        if x.is_zero() {
            continue;
        }
        match split_once(&x, &mut rng)? {
            Split::Pieces(a, ia, b, ib) => {
                // Push in reverse so the output order follows discovery.
                stack.push((b, ib.then(&inc)));
                stack.push((a, ia.then(&inc)));
            }
            Split::Leaf(cert) => leaves.push((x, inc, cert)),
        }
    }
    let f = m.field();
    let nv = m.dims.len();
    let change: Vec<Mat> =
        (0..nv).map(|v| Mat::hcat(f, m.dims[v], &leaves.iter().map(|l| l.1.mats[v].clone()).collect::<Vec<_>>())).collect();
    let inv: Vec<Mat> = change.iter().map(|c| c.inverse().expect("summands do not span")).collect();
    let mut summands: Vec<Summand> = Vec::new();
    let mut offs = vec![0; nv];
    for (rep, inc, cert) in leaves {
        let pm = (0..nv)
            .map(|v| {
                let r = inv[v].submatrix(offs[v], offs[v] + rep.dims[v], 0, m.dims[v]);
                offs[v] += rep.dims[v];
                r
            })
            .collect();
        let proj = ModMap { source: m.clone(), target: rep.clone(), mats: pm };
        summands.push(Summand { rep, inc, proj, cert, class: 0 });
    }
    let mut classes: Vec<(usize, usize)> = Vec::new();
    for i in 0..summands.len() {
        let mut found = None;
        for (c, (rep_idx, _)) in classes.iter().enumerate() {
            if iso_indecomposable(&summands[*rep_idx].rep, &summands[i].rep) {
                found = Some(c);
                break;
            }
        }
        match found {
            Some(c) => {
                classes[c].1 += 1;
                summands[i].class = c;
            }
            None => {
                summands[i].class = classes.len();
                classes.push((i, 1));
            }
        }
    }
    Ok(Decomposition { module: m.clone(), summands, classes, change_of_basis: change })
}

enum Split {
    Pieces(Rep, ModMap, Rep, ModMap),
    Leaf(LeafCertificate),
}

/// Fitting decomposition along φ: `m = ker φᴺ ⊕ im φᴺ` if both are nonzero.
fn fitting(m: &Rep, phi: &ModMap) -> Option<(Rep, ModMap, Rep, ModMap)> {
    let n = m.dims.iter().copied().max().unwrap_or(0).max(1);
    let pow: Vec<Mat> = phi.mats.iter().map(|a| mat_pow(a, n)).collect();
    let im: Vec<Mat> = pow.iter().map(|a| a.image_basis()).collect();
    let im_dim: usize = im.iter().map(|b| b.cols()).sum();
    if im_dim == 0 || im_dim == m.total_dim() {
        return None;
    }
    let ker: Vec<Mat> = pow.iter().map(|a| a.kernel_basis()).collect();
    let (k, ik) = submodule(m, &ker);
    let (i, ii) = submodule(m, &im);
    Some((i, ii, k, ik))
}

fn mat_pow(a: &Mat, mut e: usize) -> Mat {
    let mut base = a.clone();
    let mut acc = Mat::identity(a.field(), a.rows());
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.mul(&base);
        }
        e >>= 1;
        if e > 0 {
            base = base.mul(&base);
        }
    }
    acc
}

fn block_diag_action(phi: &ModMap) -> Mat {
    Mat::block_diag(phi.field(), &phi.mats)
}

fn split_once(m: &Rep, rng: &mut ChaCha8Rng) -> Result<Split> {
    let e = endo_algebra(m)?;
    let f = m.field();
    let d = e.dim();
    if e.residue_dim() == 1 {
        return Ok(Split::Leaf(LeafCertificate::Split));
    }
    let try_phi = |phi: &ModMap| fitting(m, phi).map(|(a, ia, b, ib)| Split::Pieces(a, ia, b, ib));

    // Deterministic probes: basis elements, then pairwise sums.
    for phi in &e.basis {
        if let Some(s) = try_phi(phi) {
            return Ok(s);
        }
    }
    for i in 0..d {
        for j in i + 1..d {
            if let Some(s) = try_phi(&e.basis[i].add(&e.basis[j])) {
                return Ok(s);
            }
        }
    }

    // Eigenvalue shifts of random elements: φ − λ for λ a root of the minimal polynomial.
    let rounds = 8;
    let mut random_elements = Vec::new();
    for _ in 0..rounds {
        let c: Vec<Scalar> = (0..d).map(|_| random_scalar(f, rng)).collect();
        let phi = e.element(&c);
        if let Some(s) = try_phi(&phi) {
            return Ok(s);
        }
        let mp = min_poly(&block_diag_action(&phi));
        if let Some(roots) = mp.roots() {
            for lam in roots {
                let shifted = phi.sub(&ModMap::identity(m).scale(&lam));
                if let Some(s) = try_phi(&shifted) {
                    return Ok(s);
                }
            }
        }
        random_elements.push(phi);
    }

    // Annihilators of vectors in the radical layers: any non-nilpotent element killing
    // a layer vector is non-invertible, so Fitting splits along it.
    let layers = radical_layers(m);
    for (upper, lower) in &layers {
        for v in 0..m.dims.len() {
            let up = &upper[v];
            let low = &lower[v];
            if up.cols() == low.cols() {
                continue;
            }
            let reps = low.hstack(up).complement_within(low.cols());
            let mut probes: Vec<Mat> = (0..reps.cols()).map(|c| reps.col(c)).collect();
            for _ in 0..2 {
                let coeffs: Vec<Scalar> = (0..reps.cols()).map(|_| random_scalar(f, rng)).collect();
                let w = reps.mul(&Mat::from_vec(f, reps.cols(), 1, coeffs));
                probes.push(w);
            }
            for w in probes {
                if w.is_zero() {
                    continue;
                }
                // Σ c_i φ_i w ∈ span(lower): solve for (c, y) with Σ c_i φ_i w − lower·y = 0.
                let cols: Vec<Mat> = e.basis.iter().map(|phi| phi.mats[v].mul(&w)).collect();
                let sys = Mat::hcat(f, m.dims[v], &cols).hstack(&low.neg());
                let ker = sys.kernel_basis();
                if ker.cols() == 0 {
                    continue;
                }
                let ann = ker.submatrix(0, d, 0, ker.cols());
                let mut cands: Vec<Vec<Scalar>> = (0..ann.cols()).map(|c| ann.col(c).vectorize()).collect();
                for _ in 0..3 {
                    let r: Vec<Scalar> = (0..ann.cols()).map(|_| random_scalar(f, rng)).collect();
                    cands.push(ann.mul(&Mat::from_vec(f, ann.cols(), 1, r)).vectorize());
                }
                for c in cands {
                    if let Some(s) = try_phi(&e.element(&c)) {
                        return Ok(s);
                    }
                }
            }
        }
    }

    // No split: try to certify End/rad as a field.
    let s = e.residue_dim();
    for phi in &random_elements {
        let q = min_poly(&block_diag_action(phi)).squarefree_part();
        let deg = q.degree().unwrap_or(0);
        if deg == s && (2..=3).contains(&deg) && q.roots().is_some_and(|r| r.is_empty()) {
            return Ok(Split::Leaf(LeafCertificate::FieldExtension(deg)));
        }
    }
    Err(Error::DecompositionInconclusive(format!(
        "module {m} has End/rad of dimension {s} but no split was found"
    )))
}

/// Radical filtration as per-vertex bases `(rad^j, rad^{j+1})`, for each layer j.
fn radical_layers(m: &Rep) -> Vec<(Vec<Mat>, Vec<Mat>)> {
    let f = m.field();
    let mut out = Vec::new();
    let mut cur_rep = m.clone();
    let mut cur_inc: Vec<Mat> = m.dims.iter().map(|&d| Mat::identity(f, d)).collect();
    while !cur_rep.is_zero() {
        let (r, inc) = radical(&cur_rep);
        let lower: Vec<Mat> = cur_inc.iter().zip(&inc.mats).map(|(a, b)| a.mul(b)).collect();
        out.push((cur_inc.clone(), lower.clone()));
        if r.total_dim() == cur_rep.total_dim() {
            break;
        }
        cur_rep = r;
        cur_inc = lower;
    }
    out
}

impl Mat {
    /// Columns among the last ones of `self` that extend the first `k` columns to a basis of the span.
    pub(crate) fn complement_within(&self, k: usize) -> Mat {
        let piv = self.rref().pivots;
        let keep: Vec<usize> = piv.into_iter().filter(|&c| c >= k).collect();
        self.select_cols(&keep)
    }
}

/// Isomorphism test for two indecomposables.
pub fn iso_indecomposable(x: &Rep, y: &Rep) -> bool {
    find_iso_indecomposable(x, y).is_some()
}

/// An isomorphism x → y between indecomposables, if one exists. Exact: for local End(x),
/// x ≅ y iff some composite g ∘ f of basis maps is invertible, and then f is an isomorphism.
pub fn find_iso_indecomposable(x: &Rep, y: &Rep) -> Option<ModMap> {
    if x.dims != y.dims || x.alg != y.alg {
        return None;
    }
    let fs = hom_basis(x, y);
    if fs.is_empty() {
        return None;
    }
    let f = x.field();
    let mut r = rng(DEFAULT_SEED ^ 0x1);
    for _ in 0..2 {
        let c: Vec<Scalar> = (0..fs.len()).map(|_| random_scalar(f, &mut r)).collect();
        let phi = crate::rep::combine(&fs, &c, x, y);
        if phi.is_iso() {
            return Some(phi);
        }
    }
    let gs = hom_basis(y, x);
    for h in &fs {
        if h.is_iso() {
            return Some(h.clone());
        }
        for g in &gs {
            if g.after(h).is_iso() {
                return Some(h.clone());
            }
        }
    }
    None
}

/// Isomorphism test for arbitrary modules.
pub fn is_isomorphic(m: &Rep, n: &Rep) -> Result<bool> {
    m.same_algebra(n)?;
    if m.dims != n.dims {
        return Ok(false);
    }
    if m.is_zero() {
        return Ok(true);
    }
    let fs = hom_basis(m, n);
    let f = m.field();
    let mut r = rng(DEFAULT_SEED ^ 0x2);
    for _ in 0..2 {
        let c: Vec<Scalar> = (0..fs.len()).map(|_| random_scalar(f, &mut r)).collect();
        if crate::rep::combine(&fs, &c, m, n).is_iso() {
            return Ok(true);
        }
    }
    if hom_basis(n, m).len() != fs.len() || hom_basis(m, m).len() != fs.len() {
        return Ok(false);
    }
    let dm = decompose(m)?;
    let dn = decompose(n)?;
    Ok(same_multiset(&dm.class_reps(), &dn.class_reps()))
}

pub fn same_multiset(a: &[(Rep, usize)], b: &[(Rep, usize)]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut used = vec![false; b.len()];
    'outer: for (x, k) in a {
        for (j, (y, l)) in b.iter().enumerate() {
            if !used[j] && k == l && iso_indecomposable(x, y) {
                used[j] = true;
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// Whether every entry of a coefficient vector is zero.
pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(|x| x.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::examples::*;
    use crate::rep::direct_sum;

    const Q: Field = Field::Rationals;

    #[test]
    fn dual_numbers_endos() {
        let a = truncated_polynomial(Q, 2);
        let s = Rep::simple(&a, 0);
        let p = Rep::standard_proj(&a, 0);
        assert_eq!(endo_algebra(&s).unwrap().radical.cols(), 0);
        let ep = endo_algebra(&p).unwrap();
        assert_eq!(ep.dim(), 2);
        assert_eq!(ep.radical.cols(), 1);
        let ss = direct_sum(&a, &[s.clone(), s.clone()]).rep;
        let e = endo_algebra(&ss).unwrap();
        assert_eq!((e.dim(), e.radical.cols()), (4, 0));
        let table = e.structure_constants();
        assert_eq!(algebra_radical(Q, &table).unwrap().cols(), 0);
        assert!(decompose(&p).unwrap().is_indecomposable());
    }

    #[test]
    fn decompose_conjugated_sum() {
        let a = truncated_polynomial(Q, 2);
        let s = Rep::simple(&a, 0);
        let p = Rep::standard_proj(&a, 0);
        let m = direct_sum(&a, &[p.clone(), s.clone(), p.clone()]).rep;
        let g = Mat::from_i64(Q, &[vec![1, 2, 0, 1, 3], vec![0, 1, 1, 0, 0], vec![2, 0, 1, 1, 0], vec![1, 1, 1, 2, 1], vec![0, 3, 0, 1, 1]]);
        assert!(g.is_invertible());
        let (mc, _) = m.conjugate(&[g]);
        let d = decompose(&mc).unwrap();
        assert_eq!(d.summands.len(), 3);
        let mut mults: Vec<(usize, usize)> = d.class_reps().iter().map(|(r, k)| (r.total_dim(), *k)).collect();
        mults.sort();
        assert_eq!(mults, vec![(1, 1), (2, 2)]);
        assert!(is_isomorphic(&m, &mc).unwrap());
        let ss = direct_sum(&a, &[s.clone(), s.clone()]).rep;
        assert!(!is_isomorphic(&p, &ss).unwrap());
    }

    #[test]
    fn field_too_small() {
        let a = truncated_polynomial(Field::Prime(2), 2);
        let p = Rep::standard_proj(&a, 0);
        assert!(matches!(decompose(&p), Err(Error::FieldTooSmall { .. })));
    }
}
