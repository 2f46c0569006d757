//! Fixtures, cached inventories and random generators shared by the integration tests.
#![allow(dead_code)]

pub mod props;

use arq_core::algebra::Algebra;
use arq_core::ar::backend::Backend;
use arq_core::ar::knit::{knit, module_subcat, KnitResult, ModuleCat};
use arq_core::ar::smon::Smon;
use arq_core::field::{Field, Scalar};
use arq_core::io::{self, SubcatSpec};
use arq_core::linalg::Mat;
use arq_core::morphcat::{cok, MorObj};
use arq_core::rep::{combine, hom_basis, ModMap, Rep};
use arq_core::subcat::Subcat;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use std::sync::OnceLock;

pub const CAP: usize = 400;

pub fn fixture(name: &str) -> String {
    let path = format!("{}/../../fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"))
}

pub fn algebra(name: &str) -> Algebra {
    io::parse_algebra(&fixture(name)).unwrap()
}

/// The Gorenstein-projective subcategory of the cluster-tilted fixture.
pub fn gproj() -> Subcat {
    let a = algebra("cluster_tilted.alg");
    let SubcatSpec::Generators(g) = io::parse_subcat(&a, &fixture("gproj.sub")).unwrap() else {
        panic!("gproj.sub lists generators")
    };
    Subcat::from_generators(&a, g.into_iter().map(|(_, r)| r).collect()).unwrap()
}

/// One of the small algebras with C = Λ-mod and the knitted inventories around it.
pub struct Ctx {
    pub name: &'static str,
    pub alg: Algebra,
    pub smon: Smon,
    /// AR quiver of Λ-mod.
    pub modules: KnitResult,
    /// AR quiver of S(Λ-mod).
    pub smon_knit: KnitResult,
    pub s_objects: Vec<MorObj>,
}

impl Ctx {
    pub fn c(&self) -> &Subcat {
        &self.smon.c
    }
}

fn build(name: &'static str, file: &str) -> Ctx {
    let alg = algebra(file);
    let modules = knit(&ModuleCat { alg: alg.clone() }, CAP).unwrap();
    let c = module_subcat(&alg, CAP).unwrap();
    let smon = Smon::new(c, Backend::Ambient).unwrap();
    let mut smon_knit = knit(&smon, CAP).unwrap();
    assert!(smon_knit.certify().unwrap(), "{name}: knitted S(C) does not certify");
    let s_objects = smon_knit.objects.iter().map(|x| MorObj::from_t2(&alg, x)).collect();
    Ctx { name, alg, smon, modules, smon_knit, s_objects }
}

/// k[x]/x², k[x]/x³ and linear A₃, each with C = Λ-mod.
pub fn contexts() -> &'static [Ctx] {
    static CELL: OnceLock<Vec<Ctx>> = OnceLock::new();
    CELL.get_or_init(|| {
        vec![
            build("k[x]/x^2", "dual_numbers.alg"),
            build("k[x]/x^3", "truncated_x3.alg"),
            build("A3", "a3.alg"),
        ]
    })
}

/// Frobenius instances with their knitted S(C): the two self-injective truncated polynomial
/// rings and the Gproj fixture.
pub fn frobenius_contexts() -> &'static [(Smon, Vec<MorObj>)] {
    static CELL: OnceLock<Vec<(Smon, Vec<MorObj>)>> = OnceLock::new();
    CELL.get_or_init(|| {
        let mut out: Vec<(Smon, Vec<MorObj>)> =
            contexts()[..2].iter().map(|c| (c.smon.clone(), c.s_objects.clone())).collect();
        let s = Smon::new(gproj(), Backend::Frobenius(3)).unwrap();
        let r = knit(&s, CAP).unwrap();
        let objs = r.objects.iter().map(|x| MorObj::from_t2(&s.c.alg, x)).collect();
        out.push((s, objs));
        out
    })
}

/// Indecomposables of H(C) = T₂(Λ)-mod and of F(C), for checking template sequences.
pub struct MorphismInventories {
    pub h: Vec<Rep>,
    pub f: Vec<Rep>,
}

pub fn morphism_inventories() -> &'static [MorphismInventories] {
    static CELL: OnceLock<Vec<MorphismInventories>> = OnceLock::new();
    CELL.get_or_init(|| {
        contexts()
            .iter()
            .map(|ctx| {
                let h = knit(&ModuleCat { alg: ctx.alg.t2() }, CAP).unwrap().objects;
                let f = ctx.s_objects.iter().map(|x| cok(x).unwrap().to_t2()).collect();
                MorphismInventories { h, f }
            })
            .collect()
    })
}

/// Small coefficients keep entries from growing under repeated rebasing.
pub fn small_scalar(field: Field, rng: &mut ChaCha8Rng) -> Scalar {
    field.from_i64(rng.gen_range(-2..=2))
}

pub fn invertible(field: Field, n: usize, rng: &mut ChaCha8Rng) -> Mat {
    loop {
        let data = (0..n * n).map(|_| small_scalar(field, rng)).collect();
        let m = Mat::from_vec(field, n, n, data);
        if m.is_invertible() {
            return m;
        }
    }
}

/// `m` in a random basis, with the isomorphism from `m`.
pub fn shuffle(m: &Rep, rng: &mut ChaCha8Rng) -> (Rep, ModMap) {
    let p: Vec<Mat> = m.dims.iter().map(|&d| invertible(m.field(), d, rng)).collect();
    m.conjugate(&p)
}

pub fn shuffle_obj(f: &MorObj, rng: &mut ChaCha8Rng) -> MorObj {
    let (_, pa) = shuffle(f.source(), rng);
    let (_, pb) = shuffle(f.target(), rng);
    MorObj::new(pa.inverse().unwrap().then(&f.map).then(&pb))
}

/// Direct sum of 1..=`max` random picks from `pool`, in a random basis.
pub fn random_module(alg: &Algebra, pool: &[Rep], max: usize, rng: &mut ChaCha8Rng) -> Rep {
    let k = rng.gen_range(1..=max);
    let parts: Vec<Rep> = (0..k).map(|_| pool[rng.gen_range(0..pool.len())].clone()).collect();
    shuffle(&arq_core::rep::direct_sum(alg, &parts).rep, rng).0
}

pub fn random_object(base: &Algebra, pool: &[MorObj], max: usize, rng: &mut ChaCha8Rng) -> MorObj {
    let k = rng.gen_range(1..=max);
    let parts: Vec<MorObj> = (0..k).map(|_| pool[rng.gen_range(0..pool.len())].clone()).collect();
    shuffle_obj(&MorObj::direct_sum(base, &parts), rng)
}

pub fn random_map(m: &Rep, n: &Rep, rng: &mut ChaCha8Rng) -> ModMap {
    let basis = hom_basis(m, n);
    let coeffs: Vec<_> = basis.iter().map(|_| small_scalar(m.field(), rng)).collect();
    combine(&basis, &coeffs, m, n)
}
