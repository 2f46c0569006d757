//! Randomized property suites. Each suite draws an instance index and a seed, builds its objects
//! from a ChaCha stream, and fails with a message naming the instance.

use super::*;
use arq_core::ar::oracle::{oracle_verify, Method};
use arq_core::ar::shift::{cosyzygy_s, rot, suspension};
use arq_core::ar::sporadic::{sporadic_sequences, Template};
use arq_core::decompose::{is_isomorphic, rng};
use arq_core::homological::{dual_rep, is_injective, is_projective, tau, tau_inv, transpose_tr};
use arq_core::morphcat::{cw_split_test, envelope_extension_mono, glue, ker, mimo, mimo_with, stable_iso_s};
use arq_core::rep::direct_sum;
use proptest::prelude::{any, prop_assert, prop_assert_eq};
use rand::Rng;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};

pub const CASES: u32 = 256;
const SEED: [u8; 32] = *b"arq property suites, fixed seed!";

pub type Suite = (&'static str, fn(u32) -> Result<(), String>);

pub const SUITES: &[Suite] = &[
    ("rss_roundtrip", rss_roundtrip),
    ("mimo_embedding_choice", mimo_embedding_choice),
    ("mimo_envelope_extension", mimo_envelope_extension),
    ("cw_split_matches_decomposition", cw_split_matches_decomposition),
    ("duality_involutions", duality_involutions),
    ("sporadic_templates_verify", sporadic_templates_verify),
    ("frobenius_iff_smon_frobenius", frobenius_iff_smon_frobenius),
    ("suspension_routes", suspension_routes),
];

fn run(
    cases: u32,
    instances: usize,
    test: impl Fn(usize, &mut ChaCha8Rng) -> Result<(), TestCaseError>,
) -> Result<(), String> {
    let mut cfg = Config::with_cases(cases);
    cfg.failure_persistence = None;
    let mut runner = TestRunner::new_with_rng(cfg, TestRng::from_seed(RngAlgorithm::ChaCha, &SEED));
    runner
        .run(&(0..instances, any::<u64>()), |(i, seed)| test(i, &mut rng(seed)))
        .map_err(|e| e.to_string())
}

fn ok<T>(r: arq_core::Result<T>) -> Result<T, TestCaseError> {
    r.map_err(|e| TestCaseError::fail(e.to_string()))
}

/// Ker Cok f ≅ f on S(C) and Cok Ker g ≅ g on F(C).
pub fn rss_roundtrip(cases: u32) -> Result<(), String> {
    let ctxs = contexts();
    run(cases, ctxs.len(), |i, r| {
        let ctx = &ctxs[i];
        let f = random_object(&ctx.alg, &ctx.s_objects, 2, r);
        let back = ok(ker(&ok(cok(&f))?))?;
        prop_assert!(ok(is_isomorphic(&back.to_t2(), &f.to_t2()))?, "{}: Ker Cok {f}", ctx.name);
        let g = ok(cok(&random_object(&ctx.alg, &ctx.s_objects, 2, r)))?;
        let back = ok(cok(&ok(ker(&g))?))?;
        prop_assert!(ok(is_isomorphic(&back.to_t2(), &g.to_t2()))?, "{}: Cok Ker {g}", ctx.name);
        Ok(())
    })
}

/// Replacing the inflation by a rebased one padded with another injective leaves mimo unchanged.
pub fn mimo_embedding_choice(cases: u32) -> Result<(), String> {
    let ctxs = contexts();
    run(cases, ctxs.len(), |i, r| {
        let ctx = &ctxs[i];
        let c = ctx.c();
        let x = random_module(&ctx.alg, &c.gens, 2, r);
        let y = random_module(&ctx.alg, &c.gens, 2, r);
        let h = random_map(&x, &y, r);
        let e = ok(c.inflation(&x))?;
        let (i1, phi) = shuffle(&e.target, r);
        let inj: Vec<Rep> = c.rel_inj.iter().map(|&j| c.gens[j].clone()).collect();
        let i2 = random_module(&ctx.alg, &inj, 1, r);
        let pad = random_map(&x, &i2, r);
        let ds = direct_sum(&ctx.alg, &[i1, i2]);
        let e2 = e.then(&phi).then(&ds.inj[0]).add(&pad.then(&ds.inj[1]));
        let m1 = ok(mimo(&h, c))?;
        let m2 = ok(mimo_with(&h, &e2, c))?;
        prop_assert!(ok(stable_iso_s(&m1, &m2, c))?, "{}: mimo of {h:?} depends on the inflation", ctx.name);
        Ok(())
    })
}

/// For C = Λ-mod, mimo h agrees with [h, e]ᵀ for e extending the envelope of Ker h.
pub fn mimo_envelope_extension(cases: u32) -> Result<(), String> {
    let ctxs = contexts();
    run(cases, ctxs.len(), |i, r| {
        let ctx = &ctxs[i];
        let c = ctx.c();
        let x = random_module(&ctx.alg, &c.gens, 2, r);
        let y = random_module(&ctx.alg, &c.gens, 2, r);
        let h = random_map(&x, &y, r);
        let m = ok(mimo(&h, c))?;
        let env = envelope_extension_mono(&h);
        prop_assert!(env.is_mono());
        prop_assert!(ok(stable_iso_s(&m, &env, c))?, "{}: {m} vs {env}", ctx.name);
        Ok(())
    })
}

/// The glued object splits as a ⊕ b exactly when c is homotopic to zero.
pub fn cw_split_matches_decomposition(cases: u32) -> Result<(), String> {
    let ctxs = contexts();
    run(cases, ctxs.len(), |i, r| {
        let ctx = &ctxs[i];
        let pool = &ctx.c().gens;
        let mut m = || random_module(&ctx.alg, pool, 2, r);
        let (x1, x2, y1, y2) = (m(), m(), m(), m());
        let a = random_map(&x1, &x2, r);
        let b = random_map(&y1, &y2, r);
        let c = if r.gen_bool(0.5) {
            random_map(&y1, &x2, r)
        } else {
            let s = random_map(&y1, &x1, r);
            let t = random_map(&y2, &x2, r);
            s.then(&a).add(&b.then(&t))
        };
        let split = cw_split_test(&a, &c, &b);
        let sum = MorObj::direct_sum(&ctx.alg, &[MorObj::new(a.clone()), MorObj::new(b.clone())]);
        let iso = ok(is_isomorphic(&glue(&a, &c, &b).to_t2(), &sum.to_t2()))?;
        prop_assert_eq!(split, iso, "{}", ctx.name);
        Ok(())
    })
}

/// D² ≅ id on all modules; TrTr ≅ id and τ⁻τ ≅ id without projective summands.
pub fn duality_involutions(cases: u32) -> Result<(), String> {
    let ctxs = contexts();
    run(cases, ctxs.len(), |i, r| {
        let ctx = &ctxs[i];
        let all = &ctx.c().gens;
        let m = random_module(&ctx.alg, all, 3, r);
        prop_assert!(ok(is_isomorphic(&dual_rep(&dual_rep(&m)), &m))?, "{}: D²", ctx.name);
        let nonproj: Vec<Rep> = all.iter().filter(|x| !is_projective(x)).cloned().collect();
        let m = random_module(&ctx.alg, &nonproj, 3, r);
        prop_assert!(ok(is_isomorphic(&transpose_tr(&transpose_tr(&m)), &m))?, "{}: TrTr", ctx.name);
        prop_assert!(ok(is_isomorphic(&ok(tau_inv(&ok(tau(&m))?))?, &m))?, "{}: τ⁻τ", ctx.name);
        let noninj: Vec<Rep> = all.iter().filter(|x| !is_injective(x)).cloned().collect();
        let m = random_module(&ctx.alg, &noninj, 3, r);
        prop_assert!(ok(is_isomorphic(&ok(tau(&ok(tau_inv(&m))?))?, &m))?, "{}: ττ⁻", ctx.name);
        Ok(())
    })
}

/// Every template built from an almost split sequence of C passes the definitional check in
/// H(C) or F(C).
pub fn sporadic_templates_verify(cases: u32) -> Result<(), String> {
    let ctxs = contexts();
    let invs = morphism_inventories();
    run(cases, ctxs.len(), |i, r| {
        let ctx = &ctxs[i];
        let seqs = &ctx.modules.sequences;
        let delta = &seqs[r.gen_range(0..seqs.len())].seq;
        let all = ok(sporadic_sequences(ctx.c(), delta))?;
        let sp = &all[r.gen_range(0..all.len())];
        let inv = match sp.template {
            Template::HZeroTo | Template::HIdentity => &invs[i].h,
            _ => &invs[i].f,
        };
        let cert = ok(oracle_verify(&sp.seq, inv, Method::Sporadic))?;
        prop_assert!(cert.passed(), "{}: {:?} on {} -> {}", ctx.name, sp.template, delta.left, delta.right);
        Ok(())
    })
}

/// C is Frobenius exactly when the projectives and injectives of S(C) coincide, on the three
/// fixed instances. Deterministic, so `cases` is unused.
pub fn frobenius_iff_smon_frobenius(_cases: u32) -> Result<(), String> {
    let x2 = algebra("dual_numbers.alg");
    let free = Subcat::from_generators(&x2, vec![Rep::standard_proj(&x2, 0)]).map_err(|e| e.to_string())?;
    let a3 = &contexts()[2];
    let instances = [
        ("add(A) over k[x]/x^2", Smon::new(free, Backend::Frobenius(1)), true),
        ("Gproj fixture", Smon::new(gproj(), Backend::Frobenius(3)), true),
        ("A3-mod", Ok(a3.smon.clone()), false),
    ];
    for (name, s, expect) in instances {
        let s = s.map_err(|e| format!("{name}: {e}"))?;
        let res = knit(&s, CAP).map_err(|e| format!("{name}: {e}"))?;
        let smon_frob = res.projective == res.injective;
        let c_frob = s.c.check_frobenius();
        if c_frob != expect || smon_frob != c_frob {
            return Err(format!("{name}: C Frobenius {c_frob}, S(C) Frobenius {smon_frob}, expected {expect}"));
        }
    }
    Ok(())
}

/// f⟨1⟩ ≅ mimo(Ω⁻¹_C f) ≅ Ω⁻¹_S f and mimo Rot³ f ≅ f⟨1⟩ in the stable category of S(C).
pub fn suspension_routes(cases: u32) -> Result<(), String> {
    let fcs = frobenius_contexts();
    run(cases, fcs.len(), |i, r| {
        let (s, objs) = &fcs[i];
        let c = &s.c;
        let f = random_object(&c.alg, objs, 2, r);
        let sus = ok(suspension(s, &f))?;
        let via_c = ok(mimo(&ok(c.cosyzygy_morphism(&f.map))?, c))?;
        prop_assert!(ok(stable_iso_s(&sus, &via_c, c))?, "instance {i}: f<1> vs mimo of Ω⁻¹ on {f}");
        let via_s = ok(cosyzygy_s(s, &f))?;
        prop_assert!(ok(stable_iso_s(&sus, &via_s, c))?, "instance {i}: f<1> vs Ω⁻¹ in S on {f}");
        let mut g = f.clone();
        for _ in 0..3 {
            g = ok(rot(s, &g.map))?;
        }
        let g = ok(mimo(&g.map, c))?;
        prop_assert!(ok(stable_iso_s(&g, &sus, c))?, "instance {i}: Rot³ on {f}");
        Ok(())
    })
}
