//! Line-oriented text formats for algebras, modules, morphism objects and subcategories.
//!
//! `#` starts a comment. Algebra files hold `field Q` or `field F <p>`, then
//! `vertex <name>`, `arrow <name> <src> <tgt>` and `relation <c>*<path> + ...`
//! lines, with paths written as dot-joined arrow names in diagrammatic order.
//! A module is a list of `dim <vertex> <n>` lines and `mat <arrow>` headers,
//! each followed by one line per row of the matrix. Morphism-object files hold
//! two `[module]` blocks and then `map <vertex>` matrices. Subcategory files
//! are either the single line `all` or a list of (optionally named) `[module]`
//! blocks.

use crate::algebra::{Algebra, Path, Quiver, Relation};
use crate::error::{Error, Result};
use crate::field::{format_scalar, parse_scalar, Field, Scalar};
use crate::linalg::Mat;
use crate::morphcat::MorObj;
use crate::rep::{ModMap, Rep};

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

/// Non-blank, comment-stripped lines with their 1-based numbers.
struct Lines<'a> {
    items: Vec<(usize, Vec<&'a str>)>,
    pos: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Lines<'a> {
        let items = text
            .lines()
            .enumerate()
            .filter_map(|(i, l)| {
                let l = l.split('#').next().unwrap_or("");
                let toks: Vec<&str> = l.split_whitespace().collect();
                (!toks.is_empty()).then_some((i + 1, toks))
            })
            .collect();
        Lines { items, pos: 0 }
    }

    fn peek(&self) -> Option<&(usize, Vec<&'a str>)> {
        self.items.get(self.pos)
    }

    fn next(&mut self) -> Option<(usize, Vec<&'a str>)> {
        let it = self.items.get(self.pos).cloned();
        self.pos += 1;
        it
    }

    fn last_line(&self) -> usize {
        self.items.last().map_or(0, |(n, _)| *n)
    }
}

fn parse_usize(line: usize, s: &str) -> Result<usize> {
    s.parse().map_err(|_| perr(line, format!("expected a non-negative integer, found '{s}'")))
}

fn scalar(field: Field, line: usize, s: &str) -> Result<Scalar> {
    parse_scalar(field, s).ok_or_else(|| perr(line, format!("bad scalar '{s}'")))
}

fn parse_field(line: usize, toks: &[&str]) -> Result<Field> {
    match toks {
        ["Q"] => Ok(Field::Rationals),
        ["F", p] => {
            let p: u64 = p.parse().map_err(|_| perr(line, format!("bad characteristic '{p}'")))?;
            Field::prime(p).ok_or_else(|| perr(line, format!("{p} is not a prime")))
        }
        _ => Err(perr(line, "expected 'field Q' or 'field F <p>'")),
    }
}

fn parse_path(q: &Quiver, line: usize, s: &str) -> Result<Path> {
    let mut arrows = Vec::new();
    for name in s.split('.') {
        arrows.push(q.arrow_index(name).ok_or_else(|| perr(line, format!("unknown arrow '{name}'")))?);
    }
    Path::from_arrows(q, &arrows).ok_or_else(|| perr(line, format!("'{s}' is not a path")))
}

fn parse_relation(q: &Quiver, field: Field, line: usize, toks: &[&str]) -> Result<Relation> {
    let mut terms = Vec::new();
    let mut sign = field.one();
    let mut expect_term = true;
    for &t in toks {
        if !expect_term {
            sign = match t {
                "+" => field.one(),
                "-" => field.neg(&field.one()),
                _ => return Err(perr(line, format!("expected '+' or '-', found '{t}'"))),
            };
            expect_term = true;
            continue;
        }
        let (c, p) = match t.split_once('*') {
            Some((c, p)) => (scalar(field, line, c)?, p),
            None => (field.one(), t),
        };
        terms.push((field.mul(&sign, &c), parse_path(q, line, p)?));
        expect_term = false;
    }
    if expect_term {
        return Err(perr(line, "relation ends without a term"));
    }
    Ok(Relation { terms })
}

pub fn parse_algebra(text: &str) -> Result<Algebra> {
    let mut lines = Lines::new(text);
    let mut field = None;
    let mut q = Quiver::default();
    let mut rels = Vec::new();
    while let Some((n, toks)) = lines.next() {
        match toks[0] {
            "field" => {
                if field.is_some() {
                    return Err(perr(n, "field given twice"));
                }
                field = Some(parse_field(n, &toks[1..])?);
            }
            "vertex" => {
                let [_, name] = toks[..] else { return Err(perr(n, "expected 'vertex <name>'")) };
                if q.vertex_index(name).is_some() {
                    return Err(perr(n, format!("duplicate vertex '{name}'")));
                }
                q.add_vertex(name);
            }
            "arrow" => {
                let [_, name, s, t] = toks[..] else { return Err(perr(n, "expected 'arrow <name> <src> <tgt>'")) };
                if q.arrow_index(name).is_some() {
                    return Err(perr(n, format!("duplicate arrow '{name}'")));
                }
                let s = q.vertex_index(s).ok_or_else(|| perr(n, format!("unknown vertex '{s}'")))?;
                let t = q.vertex_index(t).ok_or_else(|| perr(n, format!("unknown vertex '{t}'")))?;
                q.add_arrow(name, s, t);
            }
            "relation" => {
                let f = field.ok_or_else(|| perr(n, "relation before the field line"))?;
                rels.push((n, parse_relation(&q, f, n, &toks[1..])?));
            }
            other => return Err(perr(n, format!("unknown keyword '{other}'"))),
        }
    }
    let field = field.ok_or_else(|| perr(lines.last_line(), "missing field line"))?;
    // relation errors are reported against their own line
    for (n, r) in &rels {
        if let Some((_, p0)) = r.terms.first() {
            for (_, p) in &r.terms {
                if p.source != p0.source || p.target != p0.target {
                    return Err(perr(*n, "terms are not parallel paths"));
                }
            }
        }
    }
    Algebra::build(q, rels.into_iter().map(|(_, r)| r).collect(), field)
}

pub fn emit_algebra(alg: &Algebra) -> String {
    let mut out = String::new();
    match alg.field {
        Field::Rationals => out.push_str("field Q\n"),
        Field::Prime(p) => out.push_str(&format!("field F {p}\n")),
    }
    for v in &alg.quiver.vertices {
        out.push_str(&format!("vertex {v}\n"));
    }
    for a in &alg.quiver.arrows {
        let q = &alg.quiver;
        out.push_str(&format!("arrow {} {} {}\n", a.name, q.vertices[a.source], q.vertices[a.target]));
    }
    for r in &alg.relations {
        out.push_str(&format!("relation {}\n", r.display(&alg.quiver)));
    }
    out
}

fn read_rows(lines: &mut Lines, field: Field, rows: usize, cols: usize, header: usize) -> Result<Mat> {
    let mut m = Mat::zeros(field, rows, cols);
    for i in 0..rows {
        let (n, toks) = lines.next().ok_or_else(|| perr(header, format!("matrix needs {rows} rows")))?;
        if toks.len() != cols {
            return Err(perr(n, format!("row has {} entries, expected {cols}", toks.len())));
        }
        for (j, t) in toks.iter().enumerate() {
            m.set(i, j, scalar(field, n, t)?);
        }
    }
    Ok(m)
}

/// Reads `dim`/`mat` lines until a line starting with another keyword.
fn parse_module_body(alg: &Algebra, lines: &mut Lines, start: usize) -> Result<Rep> {
    let q = &alg.quiver;
    let mut dims = vec![0; alg.num_vertices()];
    let mut mats: Vec<Option<Mat>> = vec![None; alg.num_arrows()];
    let mut dims_frozen = false;
    while let Some((n, toks)) = lines.peek().cloned() {
        match toks[0] {
            "dim" => {
                lines.next();
                if dims_frozen {
                    return Err(perr(n, "dim after the first mat"));
                }
                let [_, v, d] = toks[..] else { return Err(perr(n, "expected 'dim <vertex> <n>'")) };
                let v = q.vertex_index(v).ok_or_else(|| perr(n, format!("unknown vertex '{v}'")))?;
                dims[v] = parse_usize(n, d)?;
            }
            "mat" => {
                lines.next();
                dims_frozen = true;
                let [_, a] = toks[..] else { return Err(perr(n, "expected 'mat <arrow>'")) };
                let ai = q.arrow_index(a).ok_or_else(|| perr(n, format!("unknown arrow '{a}'")))?;
                if mats[ai].is_some() {
                    return Err(perr(n, format!("matrix of '{a}' given twice")));
                }
                let arr = &q.arrows[ai];
                mats[ai] = Some(read_rows(lines, alg.field, dims[arr.target], dims[arr.source], n)?);
            }
            _ => break,
        }
    }
    let mats = mats
        .into_iter()
        .enumerate()
        .map(|(i, m)| {
            let a = &q.arrows[i];
            m.unwrap_or_else(|| Mat::zeros(alg.field, dims[a.target], dims[a.source]))
        })
        .collect();
    Rep::new(alg, dims, mats).map_err(|e| perr(start, e.to_string()))
}

pub fn parse_module(alg: &Algebra, text: &str) -> Result<Rep> {
    let mut lines = Lines::new(text);
    let rep = parse_module_body(alg, &mut lines, 1)?;
    if let Some((n, toks)) = lines.next() {
        return Err(perr(n, format!("unexpected '{}'", toks[0])));
    }
    Ok(rep)
}

fn emit_mat(out: &mut String, m: &Mat) {
    for i in 0..m.rows() {
        let row: Vec<String> = (0..m.cols()).map(|j| format_scalar(m.get(i, j))).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
}

pub fn emit_module(rep: &Rep) -> String {
    let q = &rep.alg.quiver;
    let mut out = String::new();
    for (v, d) in rep.dims.iter().enumerate() {
        out.push_str(&format!("dim {} {d}\n", q.vertices[v]));
    }
    for (i, m) in rep.mats.iter().enumerate() {
        if m.rows() > 0 && m.cols() > 0 {
            out.push_str(&format!("mat {}\n", q.arrows[i].name));
            emit_mat(&mut out, m);
        }
    }
    out
}

/// Expects a `[module]` header (an optional name may follow it) at the cursor.
fn parse_block(alg: &Algebra, lines: &mut Lines) -> Result<Option<(Option<String>, Rep)>> {
    let Some((n, toks)) = lines.peek().cloned() else { return Ok(None) };
    let name = match toks[..] {
        ["[module]"] => None,
        ["[module]", name] => Some(name.to_string()),
        _ => return Ok(None),
    };
    lines.next();
    Ok(Some((name, parse_module_body(alg, lines, n)?)))
}

pub fn parse_morobj(alg: &Algebra, text: &str) -> Result<MorObj> {
    let mut lines = Lines::new(text);
    let mut blocks = Vec::new();
    for _ in 0..2 {
        let at = lines.peek().map_or(lines.last_line(), |(n, _)| *n);
        match parse_block(alg, &mut lines)? {
            Some((_, r)) => blocks.push(r),
            None => return Err(perr(at, "expected a [module] block")),
        }
    }
    let (a, b) = (blocks[0].clone(), blocks[1].clone());
    let q = &alg.quiver;
    let mut mats: Vec<Option<Mat>> = vec![None; alg.num_vertices()];
    while let Some((n, toks)) = lines.next() {
        let ["map", v] = toks[..] else { return Err(perr(n, format!("unexpected '{}'", toks[0]))) };
        let vi = q.vertex_index(v).ok_or_else(|| perr(n, format!("unknown vertex '{v}'")))?;
        if mats[vi].is_some() {
            return Err(perr(n, format!("map at '{v}' given twice")));
        }
        mats[vi] = Some(read_rows(&mut lines, alg.field, b.dims[vi], a.dims[vi], n)?);
    }
    let mats = mats
        .into_iter()
        .enumerate()
        .map(|(v, m)| m.unwrap_or_else(|| Mat::zeros(alg.field, b.dims[v], a.dims[v])))
        .collect();
    let f = ModMap::new(&a, &b, mats).map_err(|e| perr(lines.last_line(), e.to_string()))?;
    Ok(MorObj::new(f))
}

pub fn emit_morobj(x: &MorObj) -> String {
    let f = &x.map;
    let q = &f.source.alg.quiver;
    let mut out = String::from("[module]\n");
    out.push_str(&emit_module(&f.source));
    out.push_str("[module]\n");
    out.push_str(&emit_module(&f.target));
    for (v, m) in f.mats.iter().enumerate() {
        if m.rows() > 0 && m.cols() > 0 {
            out.push_str(&format!("map {}\n", q.vertices[v]));
            emit_mat(&mut out, m);
        }
    }
    out
}

/// A subcategory given either as all of Λ-mod or by named generators.
#[derive(Clone, Debug)]
pub enum SubcatSpec {
    AllModules,
    Generators(Vec<(String, Rep)>),
}

pub fn parse_subcat(alg: &Algebra, text: &str) -> Result<SubcatSpec> {
    let mut lines = Lines::new(text);
    if let Some((_, toks)) = lines.peek() {
        if toks[..] == ["all"] {
            lines.next();
            if let Some((n, _)) = lines.next() {
                return Err(perr(n, "nothing may follow 'all'"));
            }
            return Ok(SubcatSpec::AllModules);
        }
    }
    let mut gens = Vec::new();
    while let Some(block) = parse_block(alg, &mut lines)? {
        let (name, rep) = block;
        gens.push((name.unwrap_or_else(|| format!("G{}", gens.len() + 1)), rep));
    }
    if let Some((n, toks)) = lines.next() {
        return Err(perr(n, format!("unexpected '{}'", toks[0])));
    }
    if gens.is_empty() {
        return Err(perr(1, "no generators"));
    }
    Ok(SubcatSpec::Generators(gens))
}

pub fn emit_subcat(spec: &SubcatSpec) -> String {
    match spec {
        SubcatSpec::AllModules => "all\n".into(),
        SubcatSpec::Generators(gens) => {
            let mut out = String::new();
            for (name, rep) in gens {
                out.push_str(&format!("[module] {name}\n"));
                out.push_str(&emit_module(rep));
            }
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::examples::*;

    const X2: &str = "field Q\nvertex o\narrow x o o\nrelation x.x\n";

    #[test]
    fn dual_numbers_parse() {
        let a = parse_algebra(X2).unwrap();
        assert_eq!(a.dim(), 2);
        assert_eq!(a, truncated_polynomial(Field::Rationals, 2));
    }

    #[test]
    fn empty_module_is_zero() {
        let a = parse_algebra(X2).unwrap();
        assert!(parse_module(&a, "# nothing\n").unwrap().is_zero());
    }

    #[test]
    fn signed_relations() {
        let text = "field F 5\nvertex 1\nvertex 2\narrow a 1 2\narrow b 1 2\narrow c 2 2\nrelation a.c - 2*b.c\nrelation c.c\n";
        let a = parse_algebra(text).unwrap();
        assert_eq!(a.relations.len(), 2);
        assert_eq!(a.relations[0].terms[1].0, Field::Prime(5).from_i64(-2));
        assert_eq!(parse_algebra(&emit_algebra(&a)).unwrap(), a);
    }

    #[test]
    fn positioned_errors() {
        let e = parse_algebra("field Q\nvertex o\narrow x o p\n").unwrap_err();
        assert_eq!(e, Error::Parse { line: 3, msg: "unknown vertex 'p'".into() });
        let e = parse_algebra("field Q\nvertex o\narrow x o o\nrelation x.y\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 4, .. }));
        let a = parse_algebra(X2).unwrap();
        let e = parse_module(&a, "dim o 2\nmat x\n0 0\n1\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 4, .. }));
    }

    #[test]
    fn relation_violation_names_relation() {
        let a = parse_algebra(X2).unwrap();
        let e = parse_module(&a, "dim o 2\nmat x\n1 0\n0 1\n").unwrap_err();
        assert!(e.to_string().contains("x.x"), "{e}");
    }

    #[test]
    fn morobj_roundtrip() {
        let a = parse_algebra(X2).unwrap();
        let text = "[module]\ndim o 1\n[module]\ndim o 2\nmat x\n0 0\n1 0\nmap o\n0\n1\n";
        let f = parse_morobj(&a, text).unwrap();
        assert!(f.is_mono());
        assert_eq!(parse_morobj(&a, &emit_morobj(&f)).unwrap().map, f.map);
    }
}
