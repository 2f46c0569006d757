//! Independent census of S(k[x]/x²-mod): every monomorphism X ↪ Y with dim X + dim Y ≤ 4 over 𝔽₁₇,
//! X and Y in Jordan normal form, decomposed and deduplicated. Compared with the knitted quiver.

mod common;

use arq_core::decompose::{decompose, is_isomorphic};
use arq_core::field::Field;
use arq_core::io::parse_algebra;
use arq_core::morphcat::MorObj;
use arq_core::rep::{combine, direct_sum, hom_basis, Rep};
use common::contexts;

const P: u64 = 17;
const MAX_TOTAL: usize = 4;

/// All coefficient vectors of length `k` over 𝔽_p.
fn all_vectors(k: usize) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..k {
        out = out.into_iter().flat_map(|v| (0..P as i64).map(move |c| [v.clone(), vec![c]].concat())).collect();
    }
    out
}

/// (#S, #A) multiplicities: the rank of x counts the free summands.
fn sa(m: &Rep) -> (usize, usize) {
    let r = m.mats[0].rank();
    (m.total_dim() - 2 * r, r)
}

#[test]
fn exhaustive_census_finds_the_five_knitted_objects() {
    let alg = parse_algebra("field F 17\nvertex o\narrow x o o\nrelation x.x\n").unwrap();
    let f = Field::Prime(P);
    let s = Rep::simple(&alg, 0);
    let a = Rep::standard_proj(&alg, 0);
    // Jordan normal forms S^i ⊕ A^j of dimension ≤ MAX_TOTAL.
    let mut forms = Vec::new();
    for j in 0..=MAX_TOTAL / 2 {
        for i in 0..=MAX_TOTAL - 2 * j {
            let parts: Vec<Rep> = std::iter::repeat_n(s.clone(), i).chain(std::iter::repeat_n(a.clone(), j)).collect();
            forms.push(direct_sum(&alg, &parts).rep);
        }
    }
    let mut found: Vec<Rep> = Vec::new();
    let mut monos = 0usize;
    for x in &forms {
        for y in &forms {
            if x.total_dim() + y.total_dim() > MAX_TOTAL || x.total_dim() > y.total_dim() {
                continue;
            }
            let basis = hom_basis(x, y);
            for coeffs in all_vectors(basis.len()) {
                let c: Vec<_> = coeffs.iter().map(|&v| f.from_i64(v)).collect();
                let obj = MorObj::new(combine(&basis, &c, x, y));
                if !obj.is_mono() || obj.is_zero() {
                    continue;
                }
                monos += 1;
                for part in decompose(&obj.to_t2()).unwrap().summands {
                    if !found.iter().any(|g| g.dims == part.rep.dims && is_isomorphic(g, &part.rep).unwrap()) {
                        found.push(part.rep);
                    }
                }
            }
        }
    }
    assert!(monos > 0);
    let mut census: Vec<_> = found
        .iter()
        .map(|r| {
            let o = MorObj::from_t2(&alg, r);
            (sa(o.source()), sa(o.target()))
        })
        .collect();
    census.sort();
    // (0→S), (0→A), (S=S), (S↪A), (A=A)
    assert_eq!(census, vec![((0, 0), (0, 1)), ((0, 0), (1, 0)), ((0, 1), (0, 1)), ((1, 0), (0, 1)), ((1, 0), (1, 0))]);

    let ctx = &contexts()[0];
    let mut knitted: Vec<_> = ctx.s_objects.iter().map(|o| (sa(o.source()), sa(o.target()))).collect();
    knitted.sort();
    assert_eq!(census, knitted);
}
