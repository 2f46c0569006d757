//! Bound quiver algebras kQ/I with a residue-path basis.
//!
//! Paths compose diagrammatically: `p.q` is "p then q". The path basis is found
//! by linear reduction in the truncated path space, growing the truncation
//! length until every path of some length lies in the ideal.

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::linalg::Mat;
use num_traits::Zero;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

pub const DEFAULT_LENGTH_CAP: usize = 32;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Quiver {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    pub fn add_vertex(&mut self, name: &str) -> usize {
        self.vertices.push(name.to_string());
        self.vertices.len() - 1
    }

    pub fn add_arrow(&mut self, name: &str, source: usize, target: usize) -> usize {
        self.arrows.push(Arrow { name: name.to_string(), source, target });
        self.arrows.len() - 1
    }

    fn validate(&self) -> Result<()> {
        for (i, v) in self.vertices.iter().enumerate() {
            if self.vertices[..i].contains(v) {
                return Err(Error::InvalidQuiver(format!("duplicate vertex {v}")));
            }
        }
        for (i, a) in self.arrows.iter().enumerate() {
            if self.arrows[..i].iter().any(|b| b.name == a.name) {
                return Err(Error::InvalidQuiver(format!("duplicate arrow {}", a.name)));
            }
            if a.source >= self.vertices.len() || a.target >= self.vertices.len() {
                return Err(Error::InvalidQuiver(format!("arrow {} has an undeclared endpoint", a.name)));
            }
        }
        Ok(())
    }
}

/// A path: trivial at `source` when `arrows` is empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Path {
        Path { source: v, target: v, arrows: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn from_arrows(q: &Quiver, arrows: &[usize]) -> Option<Path> {
        let first = arrows.first()?;
        let mut cur = q.arrows[*first].source;
        let source = cur;
        for &a in arrows {
            if q.arrows[a].source != cur {
                return None;
            }
            cur = q.arrows[a].target;
        }
        Some(Path { source, target: cur, arrows: arrows.to_vec() })
    }

    /// `self` then `other`, if composable.
    pub fn concat(&self, other: &Path) -> Option<Path> {
        if self.target != other.source {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&other.arrows);
        Some(Path { source: self.source, target: other.target, arrows })
    }

    pub fn reversed(&self) -> Path {
        let mut arrows = self.arrows.clone();
        arrows.reverse();
        Path { source: self.target, target: self.source, arrows }
    }

    pub fn display(&self, q: &Quiver) -> String {
        if self.arrows.is_empty() {
            format!("e_{}", q.vertices[self.source])
        } else {
            self.arrows.iter().map(|&a| q.arrows[a].name.as_str()).collect::<Vec<_>>().join(".")
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Relation {
    pub terms: Vec<(Scalar, Path)>,
}

impl Relation {
    fn validate(&self, q: &Quiver) -> Result<()> {
        let Some((_, first)) = self.terms.first() else {
            return Err(Error::InvalidRelation("empty relation".into()));
        };
        for (_, p) in &self.terms {
            if p.source != first.source || p.target != first.target {
                return Err(Error::InvalidRelation(format!("{} is not parallel to {}", p.display(q), first.display(q))));
            }
            if p.len() < 2 {
                return Err(Error::InvalidRelation(format!("{} has length < 2", p.display(q))));
            }
        }
        Ok(())
    }

    pub fn display(&self, q: &Quiver) -> String {
        self.terms
            .iter()
            .map(|(c, p)| format!("{}*{}", crate::field::format_scalar(c), p.display(q)))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Sparse vector over the path basis.
pub type Element = Vec<(usize, Scalar)>;

#[derive(Debug)]
pub struct AlgebraData {
    pub quiver: Quiver,
    pub relations: Vec<Relation>,
    pub field: Field,
    pub basis: Vec<Path>,
    pub nilpotency_degree: usize,
    /// Base algebra when this is T₂ of it.
    pub t2_base: Option<Algebra>,
    basis_index: HashMap<Path, usize>,
    reductions: HashMap<Path, Element>,
    between: Vec<Vec<Vec<usize>>>,
    opposite: OnceLock<Algebra>,
    t2: OnceLock<Algebra>,
}

#[derive(Clone, Debug)]
pub struct Algebra(Arc<AlgebraData>);

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.field == other.0.field
                && self.0.quiver == other.0.quiver
                && self.0.relations == other.0.relations)
    }
}
impl Eq for Algebra {}

impl std::ops::Deref for Algebra {
    type Target = AlgebraData;
    fn deref(&self) -> &AlgebraData {
        &self.0
    }
}

fn paths_of_length(q: &Quiver, prev: &[Path], len: usize) -> Vec<Path> {
    if len == 0 {
        return (0..q.vertices.len()).map(Path::trivial).collect();
    }
    let mut out = Vec::new();
    for p in prev {
        for (ai, a) in q.arrows.iter().enumerate() {
            if a.source == p.target {
                let mut arrows = p.arrows.clone();
                arrows.push(ai);
                out.push(Path { source: p.source, target: a.target, arrows });
            }
        }
    }
    out
}

impl Algebra {
    pub fn build(quiver: Quiver, relations: Vec<Relation>, field: Field) -> Result<Algebra> {
        Self::build_with_cap(quiver, relations, field, DEFAULT_LENGTH_CAP, None)
    }

    pub fn build_with_cap(
        quiver: Quiver,
        relations: Vec<Relation>,
        field: Field,
        cap: usize,
        t2_base: Option<Algebra>,
    ) -> Result<Algebra> {
        quiver.validate()?;
        let relations: Vec<Relation> = relations
            .into_iter()
            .map(|r| Relation {
                terms: r.terms.into_iter().map(|(c, p)| (field.reduce(c), p)).filter(|(c, _)| !c.is_zero()).collect(),
            })
            .filter(|r| !r.terms.is_empty())
            .collect();
        for r in &relations {
            r.validate(&quiver)?;
        }
        let mut by_len: Vec<Vec<Path>> = vec![paths_of_length(&quiver, &[], 0)];
        for n in 2..=cap + 1 {
            while by_len.len() < n {
                let next = paths_of_length(&quiver, by_len.last().unwrap(), by_len.len());
                by_len.push(next);
            }
            // Columns: longest paths first so that pivots eliminate long paths.
            let cols: Vec<&Path> = by_len.iter().rev().flatten().collect();
            let col_index: HashMap<&Path, usize> = cols.iter().enumerate().map(|(i, p)| (*p, i)).collect();
            let mut rows: Vec<Vec<(usize, Scalar)>> = Vec::new();
            for r in &relations {
                let (s, t) = (r.terms[0].1.source, r.terms[0].1.target);
                let minlen = r.terms.iter().map(|(_, p)| p.len()).min().unwrap();
                for lp in 0..n {
                    for p in by_len.get(lp).into_iter().flatten().filter(|p| p.target == s) {
                        for lq in 0..n.saturating_sub(lp + minlen) {
                            for q in by_len[lq].iter().filter(|q| q.source == t) {
                                let mut row = Vec::new();
                                for (c, path) in &r.terms {
                                    let full = p.concat(path).unwrap().concat(q).unwrap();
                                    if full.len() < n {
                                        row.push((col_index[&full], c.clone()));
                                    }
                                }
                                if !row.is_empty() {
                                    rows.push(row);
                                }
                            }
                        }
                    }
                }
            }
            let mut m = Mat::zeros(field, rows.len(), cols.len());
            for (i, row) in rows.iter().enumerate() {
                for (j, c) in row {
                    let v = field.add(m.get(i, *j), c);
                    m.set(i, *j, v);
                }
            }
            let rr = m.rref();
            let top_len = n - 1;
            let top_count = by_len[top_len].len();
            // Top-length paths occupy columns 0..top_count.
            let all_vanish = (0..top_count).all(|j| match rr.pivots.iter().position(|&p| p == j) {
                Some(i) => (0..cols.len()).all(|c| c == j || rr.mat.get(i, c).is_zero()),
                None => false,
            });
            if !all_vanish {
                continue;
            }
            let free: Vec<usize> = (0..cols.len()).filter(|c| !rr.pivots.contains(c)).collect();
            // Basis in increasing length order for readability.
            let mut basis: Vec<Path> = free.iter().map(|&c| cols[c].clone()).collect();
            basis.sort_by(|a, b| (a.len(), a.source, &a.arrows, a.target).cmp(&(b.len(), b.source, &b.arrows, b.target)));
            let basis_index: HashMap<Path, usize> = basis.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
            let mut reductions: HashMap<Path, Element> = HashMap::new();
            for (j, p) in cols.iter().enumerate() {
                if p.len() >= top_len {
                    continue;
                }
                let elt = if let Some(&b) = basis_index.get(*p) {
                    vec![(b, field.one())]
                } else {
                    let i = rr.pivots.iter().position(|&c| c == j).unwrap();
                    free.iter()
                        .filter(|&&fc| !rr.mat.get(i, fc).is_zero())
                        .map(|&fc| (basis_index[cols[fc]], field.neg(rr.mat.get(i, fc))))
                        .collect()
                };
                reductions.insert((*p).clone(), elt);
            }
            let nv = quiver.vertices.len();
            let mut between = vec![vec![Vec::new(); nv]; nv];
            for (i, p) in basis.iter().enumerate() {
                between[p.source][p.target].push(i);
            }
            return Ok(Algebra(Arc::new(AlgebraData {
                quiver,
                relations,
                field,
                basis,
                nilpotency_degree: top_len,
                t2_base,
                basis_index,
                reductions,
                between,
                opposite: OnceLock::new(),
                t2: OnceLock::new(),
            })));
        }
        Err(Error::NonAdmissible { cap })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn num_vertices(&self) -> usize {
        self.quiver.vertices.len()
    }

    pub fn num_arrows(&self) -> usize {
        self.quiver.arrows.len()
    }

    pub fn arrow(&self, a: usize) -> &Arrow {
        &self.quiver.arrows[a]
    }

    pub fn basis_index(&self, p: &Path) -> Option<usize> {
        self.basis_index.get(p).copied()
    }

    /// Basis indices of residue paths from `u` to `v`.
    pub fn paths_between(&self, u: usize, v: usize) -> &[usize] {
        &self.between[u][v]
    }

    /// Residue of a path in the basis.
    pub fn normal_form(&self, p: &Path) -> Element {
        if p.len() >= self.nilpotency_degree {
            return Vec::new();
        }
        self.reductions.get(p).cloned().unwrap_or_default()
    }

    /// Product "basis path `i` then basis path `j`", expanded in the basis.
    pub fn mul_basis(&self, i: usize, j: usize) -> Element {
        match self.basis[i].concat(&self.basis[j]) {
            Some(p) => self.normal_form(&p),
            None => Vec::new(),
        }
    }

    /// Arrows reversed, relations reversed term by term.
    pub fn opposite(&self) -> Algebra {
        self.opposite.get_or_init(|| self.build_opposite()).clone()
    }

    /// T₂ of this algebra, built once and shared.
    pub fn t2(&self) -> Algebra {
        self.t2.get_or_init(|| t2_algebra(self)).clone()
    }

    fn build_opposite(&self) -> Algebra {
        let mut q = self.quiver.clone();
        for a in &mut q.arrows {
            std::mem::swap(&mut a.source, &mut a.target);
        }
        let rels = self
            .relations
            .iter()
            .map(|r| Relation { terms: r.terms.iter().map(|(c, p)| (c.clone(), p.reversed())).collect() })
            .collect();
        Algebra::build(q, rels, self.field).expect("opposite of an admissible algebra is admissible")
    }

    pub fn same(&self, other: &Algebra) -> bool {
        self == other
    }

    pub fn describe(&self) -> String {
        format!(
            "vertices={} arrows={} relations={} dim={} nilpotency={} field={}",
            self.num_vertices(),
            self.num_arrows(),
            self.relations.len(),
            self.dim(),
            self.nilpotency_degree,
            self.field
        )
    }
}

/// Index bookkeeping for T₂(Λ): vertex v of Λ gives v¹ = v and v² = n + v; arrow a gives
/// a¹ = a, a² = m + a; the connector ε_v is arrow 2m + v.
#[derive(Clone, Copy, Debug)]
pub struct T2Layout {
    pub n: usize,
    pub m: usize,
}

impl T2Layout {
    pub fn of(base: &Algebra) -> T2Layout {
        T2Layout { n: base.num_vertices(), m: base.num_arrows() }
    }
    pub fn v1(&self, v: usize) -> usize {
        v
    }
    pub fn v2(&self, v: usize) -> usize {
        self.n + v
    }
    pub fn a1(&self, a: usize) -> usize {
        a
    }
    pub fn a2(&self, a: usize) -> usize {
        self.m + a
    }
    pub fn eps(&self, v: usize) -> usize {
        2 * self.m + v
    }
}

/// The triangular matrix algebra T₂(Λ) as a bound quiver algebra.
pub fn t2_algebra(base: &Algebra) -> Algebra {
    let l = T2Layout::of(base);
    let bq = &base.quiver;
    let mut q = Quiver::default();
    for copy in ["1", "2"] {
        for v in &bq.vertices {
            q.add_vertex(&format!("{v}^{copy}"));
        }
    }
    for (copy, off) in [("1", 0), ("2", l.n)] {
        for a in &bq.arrows {
            q.add_arrow(&format!("{}^{copy}", a.name), a.source + off, a.target + off);
        }
    }
    for (v, name) in bq.vertices.iter().enumerate() {
        q.add_arrow(&format!("eps({name})"), l.v1(v), l.v2(v));
    }
    let mut rels = Vec::new();
    for (shift_v, shift_a) in [(0, 0), (l.n, l.m)] {
        for r in &base.relations {
            rels.push(Relation {
                terms: r
                    .terms
                    .iter()
                    .map(|(c, p)| {
                        (
                            c.clone(),
                            Path {
                                source: p.source + shift_v,
                                target: p.target + shift_v,
                                arrows: p.arrows.iter().map(|a| a + shift_a).collect(),
                            },
                        )
                    })
                    .collect(),
            });
        }
    }
    let f = base.field;
    for (ai, a) in bq.arrows.iter().enumerate() {
        let lhs = Path { source: l.v1(a.source), target: l.v2(a.target), arrows: vec![l.a1(ai), l.eps(a.target)] };
        let rhs = Path { source: l.v1(a.source), target: l.v2(a.target), arrows: vec![l.eps(a.source), l.a2(ai)] };
        rels.push(Relation { terms: vec![(f.one(), lhs), (f.from_i64(-1), rhs)] });
    }
    Algebra::build_with_cap(q, rels, f, DEFAULT_LENGTH_CAP.max(2 * base.nilpotency_degree + 2), Some(base.clone()))
        .expect("T2 of an admissible algebra is admissible")
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.describe())
    }
}

/// Small constructors used by tests, fixtures and examples.
pub mod examples {
    use super::*;

    /// k[x]/x^n on one vertex.
    pub fn truncated_polynomial(field: Field, n: usize) -> Algebra {
        let mut q = Quiver::default();
        q.add_vertex("o");
        q.add_arrow("x", 0, 0);
        let rel = Relation { terms: vec![(field.one(), Path { source: 0, target: 0, arrows: vec![0; n] })] };
        Algebra::build(q, vec![rel], field).unwrap()
    }

    /// Linearly oriented A_n: 1 → 2 → … → n, no relations.
    pub fn linear_an(field: Field, n: usize) -> Algebra {
        let mut q = Quiver::default();
        for i in 1..=n {
            q.add_vertex(&i.to_string());
        }
        for i in 0..n.saturating_sub(1) {
            q.add_arrow(&format!("a{}", i + 1), i, i + 1);
        }
        Algebra::build(q, vec![], field).unwrap()
    }

    /// Cluster-tilted algebra of type A₃ with a 3-cycle and a pendant vertex:
    /// alpha: 2→1, beta: 2→3, gamma: 3→4, delta: 4→2, all length-two paths
    /// around the cycle vanish.
    pub fn cluster_tilted(field: Field) -> Algebra {
        let mut q = Quiver::default();
        for v in ["1", "2", "3", "4"] {
            q.add_vertex(v);
        }
        let alpha = q.add_arrow("alpha", 1, 0);
        let beta = q.add_arrow("beta", 1, 2);
        let gamma = q.add_arrow("gamma", 2, 3);
        let delta = q.add_arrow("delta", 3, 1);
        let _ = alpha;
        let rel = |a: usize, b: usize| Relation { terms: vec![(field.one(), Path::from_arrows(&q, &[a, b]).unwrap())] };
        let rels = vec![rel(delta, beta), rel(gamma, delta), rel(beta, gamma)];
        Algebra::build(q.clone(), rels, field).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::examples::*;
    use super::*;

    const Q: Field = Field::Rationals;

    #[test]
    fn dual_numbers() {
        let a = truncated_polynomial(Q, 2);
        assert_eq!(a.dim(), 2);
        assert_eq!(a.nilpotency_degree, 2);
        let b = truncated_polynomial(Q, 3);
        assert_eq!(b.dim(), 3);
    }

    #[test]
    fn a2_and_opposite() {
        let a = linear_an(Q, 2);
        assert_eq!(a.dim(), 3);
        let op = a.opposite();
        assert_eq!(op.dim(), 3);
        assert_eq!(op.arrow(0).source, 1);
        assert_eq!(op.opposite(), a);
        assert_eq!(truncated_polynomial(Q, 2).opposite(), truncated_polynomial(Q, 2));
    }

    #[test]
    fn nonhomogeneous_relation() {
        // x² − x³ generates the same ideal as x², since 1 − x is a unit.
        let mut q = Quiver::default();
        q.add_vertex("o");
        q.add_arrow("x", 0, 0);
        let p = |n| Path { source: 0, target: 0, arrows: vec![0; n] };
        let rel = Relation { terms: vec![(Q.one(), p(2)), (Q.from_i64(-1), p(3))] };
        let a = Algebra::build(q, vec![rel], Q).unwrap();
        assert_eq!(a.dim(), 2);
    }

    #[test]
    fn free_loop_is_not_admissible() {
        let mut q = Quiver::default();
        q.add_vertex("o");
        q.add_arrow("x", 0, 0);
        let err = Algebra::build_with_cap(q, vec![], Q, 6, None).unwrap_err();
        assert_eq!(err, Error::NonAdmissible { cap: 6 });
    }

    #[test]
    fn t2_dimensions() {
        let k = linear_an(Q, 1);
        let t = t2_algebra(&k);
        assert_eq!(t.dim(), 3);
        let tt = t2_algebra(&t);
        assert_eq!(tt.dim(), 9);
        let d = truncated_polynomial(Q, 2);
        assert_eq!(t2_algebra(&d).dim(), 6);
    }

    #[test]
    fn basis_closed_under_products() {
        let a = cluster_tilted(Q);
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                for (k, _) in a.mul_basis(i, j) {
                    assert!(k < a.dim());
                }
            }
        }
    }
}
