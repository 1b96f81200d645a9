//! Acceptance criteria: one PASS/FAIL line each, exact comparisons only.

use std::io::Write;
use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use trivext::algebra::{dual_module, find_isomorphism, hom_space, Algebra, LeftModule};
use trivext::catalog;
use trivext::gorenstein::{Agreement, Answer, Decider, ExtensionChecker, Regime};
use trivext::homology::{
    ext_from_resolution, ext_groups, id_bounded, minimal_projective_resolution, padded_projective_resolution,
    pd_bounded, DimensionVerdict,
};
use trivext::linalg::{FieldSpec, FpMatrix};
use trivext::morita::{field_context, morita_ring, MoritaChecker, MoritaRing};
use trivext::sample::{
    enumerate_pairs, enumerate_quiver_modules_upto, random_copair, random_module, random_pair, random_right_module,
    semisimple_modules,
};
use trivext::structure::{indecomposable_summands, Structure};
use trivext::trivext::{
    classify_injective, classify_projective, copair_to_module, functor_c, functor_h, functor_k, functor_t,
    functor_u_copair, functor_u_pair, functor_z_copair, functor_z_pair, induced_delta, induced_gamma,
    module_to_copair, module_to_pair, pair_to_module, ses_of_copair, ses_of_pair, zero_hom_iso, zero_tensor_iso,
    PairModule, TrivialExtension,
};
use trivext_cli::report::{Harness, Property, Side};
use trivext_cli::{corpus, run, Command, Flags, Workspace};

type Outcome = Result<String, String>;

fn gf(p: u32) -> FieldSpec {
    FieldSpec::new(p).unwrap()
}

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn iso(a: &LeftModule, b: &LeftModule) -> bool {
    a.dim() == b.dim() && find_isomorphism(a, b, 0).ok().flatten().is_some()
}

fn hom_dim(a: &LeftModule, b: &LeftModule) -> usize {
    hom_space(a, b).unwrap().dim()
}

fn nakayama_view(f: FieldSpec) -> TrivialExtension {
    morita_ring(&field_context(f, true, true)).unwrap().view().clone()
}

/// `(name, extension)` for the three test families at one prime.
fn test_extensions(p: u32) -> Vec<(String, TrivialExtension)> {
    let f = gf(p);
    vec![
        (format!("D/GF({p})"), catalog::field_extension(f)),
        (format!("A2/GF({p})"), catalog::triangular_extension(f)),
        (format!("Nakayama/GF({p})"), nakayama_view(f)),
    ]
}

/// All pairs over an extension with semisimple base, total dimension at most
/// `max_dim`, up to isomorphism.
fn exhaustive_pairs(t: &TrivialExtension, max_dim: usize) -> Vec<PairModule> {
    let st = Structure::new(t.base().clone(), 0);
    let bases = semisimple_modules(t.base(), st.simples(), max_dim);
    enumerate_pairs(t, &bases, 0)
}

fn functor_identities() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut count = 0;
    for p in [2, 3] {
        for (name, t) in test_extensions(p) {
            for _ in 0..34 {
                let x = random_module(t.base(), 4, &mut rng);
                let y = random_module(t.base(), 4, &mut rng);
                let n = random_module(t.total(), 4, &mut rng);
                let n2 = random_module(t.total(), 4, &mut rng);
                let pair = module_to_pair(&n, &t).unwrap();
                let copair = module_to_copair(&n, &t).unwrap();
                let copair2 = module_to_copair(&n2, &t).unwrap();

                ensure(iso(&functor_c(&functor_t(&x, &t)).0, &x), || format!("{name}: CT(X) ≇ X"))?;
                ensure(iso(&functor_u_pair(&functor_z_pair(&x, &t)), &x), || format!("{name}: UZ(X) ≇ X"))?;
                ensure(iso(&functor_k(&functor_h(&y, &t)).0, &y), || format!("{name}: KH(Y) ≇ Y"))?;

                let tx = pair_to_module(&functor_t(&x, &t), &t);
                ensure(hom_dim(&tx, &n) == hom_dim(&x, &functor_u_pair(&pair)), || {
                    format!("{name}: Hom(TX, N) vs Hom(X, UN)")
                })?;
                let zx = pair_to_module(&functor_z_pair(&x, &t), &t);
                ensure(hom_dim(&functor_c(&pair).0, &x) == hom_dim(&n, &zx), || {
                    format!("{name}: Hom(CN, X) vs Hom(N, ZX)")
                })?;
                ensure(hom_dim(&zx, &n) == hom_dim(&x, &functor_k(&copair).0), || {
                    format!("{name}: Hom(ZX, N) vs Hom(X, KN)")
                })?;
                let hy = copair_to_module(&functor_h(&y, &t), &t);
                ensure(hom_dim(&functor_u_copair(&copair2), &y) == hom_dim(&n2, &hy), || {
                    format!("{name}: Hom(UN, Y) vs Hom(N, HY)")
                })?;
                count += 1;
            }
        }
    }
    ensure(count >= 200, || format!("only {count} instances"))?;
    Ok(format!("{count} instances"))
}

fn projective_classification() -> Outcome {
    let mut checked = 0;
    for p in [2, 3] {
        for (name, t) in test_extensions(p) {
            let base = Structure::new(t.base().clone(), 0);
            let total = Structure::new(t.total().clone(), 0);
            let free: Vec<LeftModule> = base
                .pims()
                .iter()
                .map(|q| pair_to_module(&functor_t(q, &t), &t))
                .collect();
            let cofree: Vec<LeftModule> = base
                .injective_indecomposables()
                .iter()
                .map(|e| copair_to_module(&functor_h(e, &t), &t))
                .collect();
            let injectives = total.injective_indecomposables();
            for (images, targets, what) in [(&free, total.pims(), "T(P)"), (&cofree, &injectives[..], "H(E)")] {
                ensure(images.len() == targets.len(), || format!("{name}: {what} count"))?;
                // a bijection up to isomorphism
                let mut used = vec![false; targets.len()];
                for m in images {
                    let j = (0..targets.len())
                        .find(|&j| !used[j] && iso(m, &targets[j]))
                        .ok_or_else(|| format!("{name}: {what} is not indecomposable projective/injective"))?;
                    used[j] = true;
                }
            }
            for pim in total.pims() {
                let pair = module_to_pair(pim, &t).unwrap();
                ensure(classify_projective(&pair, &t, &base).is_some(), || format!("{name}: unclassified PIM"))?;
            }
            for e in &injectives {
                let c = module_to_copair(e, &t).unwrap();
                ensure(classify_injective(&c, &t, &base).is_some(), || format!("{name}: unclassified injective"))?;
            }
            // simples are classified exactly when they are projective
            for s in total.simples() {
                let pair = module_to_pair(s, &t).unwrap();
                ensure(
                    classify_projective(&pair, &t, &base).is_some() == total.is_projective(s),
                    || format!("{name}: simple misclassified"),
                )?;
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} total algebras"))
}

fn pair_structure() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut count = 0;
    let mut extensions = vec![("D/GF(2)".to_string(), catalog::field_extension(gf(2)))];
    extensions.push(("D/GF(3)".into(), catalog::field_extension(gf(3))));
    extensions.push(("A2/GF(2)".into(), catalog::triangular_extension(gf(2))));
    extensions.push(("Nakayama/GF(2)".into(), nakayama_view(gf(2))));
    for (name, t) in extensions {
        for _ in 0..100 {
            let pair = random_pair(&t, 4, &mut rng);
            let copair = random_copair(&t, 4, &mut rng);
            let w = random_right_module(t.base(), 3, &mut rng);
            let x = random_module(t.base(), 3, &mut rng);
            ensure(zero_tensor_iso(&w, &pair, &t).holds(), || format!("{name}: Z(W) ⊗ (X, α)"))?;
            ensure(zero_hom_iso(&x, &copair, &t).holds(), || format!("{name}: Hom(Z(X), [Y, β])"))?;
            ensure(ses_of_pair(&pair, &t).is_exact(), || format!("{name}: pair sequence"))?;
            ensure(ses_of_copair(&copair, &t).is_exact(), || format!("{name}: copair sequence"))?;
            let (delta, m_rho) = induced_delta(&pair, &t);
            ensure(
                delta.validate().is_ok() && delta.matrix().mul(m_rho.matrix()) == *pair.alpha().matrix(),
                || format!("{name}: δ (M ⊗ ρ) ≠ α"),
            )?;
            let (gamma, iota_star) = induced_gamma(&copair, &t);
            ensure(
                gamma.validate().is_ok() && iota_star.matrix().mul(gamma.matrix()) == *copair.beta().matrix(),
                || format!("{name}: ι_* γ ≠ β"),
            )?;
            count += 1;
        }
    }
    Ok(format!("{count} instances"))
}

fn triangular_equivalence() -> Outcome {
    let t = catalog::triangular_extension(gf(2));
    let checker = ExtensionChecker::new(t.clone(), 10, 0);
    ensure(checker.m_compatible().established(), || "M report not established".into())?;
    ensure(checker.zr_compatible().established(), || "Z(R) report not established".into())?;
    let pairs = exhaustive_pairs(&t, 4);
    let expected = enumerate_quiver_modules_upto(&Arc::new(catalog::a2(gf(2))), 4, 0).len();
    ensure(pairs.len() == expected, || format!("{} pairs vs {expected} A2 modules", pairs.len()))?;
    for p in &pairs {
        let rep = checker.verify_pair(p);
        ensure(rep.status == Agreement::Agree, || format!("{rep:?}"))?;
    }
    Ok(format!("{} pairs, all agree", pairs.len()))
}

fn hypothesis_necessity() -> Outcome {
    let t = catalog::field_extension(gf(2));
    let checker = ExtensionChecker::new(t.clone(), 10, 0);
    let k = LeftModule::regular(t.base().clone());
    let rep = checker.verify_pair(&functor_z_pair(&k, &t));
    ensure(rep.total.answer == Answer::CertifiedYes, || format!("GP of Z(k): {:?}", rep.total))?;
    ensure(!rep.local.middle_exact, || "Z(k) middle sequence is exact".into())?;
    ensure(checker.zr_compatible().sufficient_via.is_none(), || "Z(R) report established".into())?;
    ensure(rep.status == Agreement::ConsistentUnestablished, || format!("{:?}", rep.status))?;
    let rep = checker.verify_copair(&functor_z_copair(&k, &t));
    ensure(rep.total.answer == Answer::CertifiedYes, || format!("GI of Z(k): {:?}", rep.total))?;
    ensure(!rep.local.middle_exact, || "Z(k) copair sequence is exact".into())?;
    ensure(checker.zr_cocompatible().sufficient_via.is_none(), || "Z(R) coreport established".into())?;
    ensure(rep.status == Agreement::ConsistentUnestablished, || format!("{:?}", rep.status))?;
    Ok("Z(k) over k ⋉ k, pair and copair".into())
}

fn lifted_resolutions() -> Outcome {
    let ws = Workspace::build(&corpus::builtin()).map_err(|e| e.to_string())?;
    let window = 4;
    let mut built = 0;
    let checkers: Vec<(&String, ExtensionChecker)> = ws
        .extensions
        .iter()
        .map(|(n, t)| (n, ExtensionChecker::new(t.clone(), 10, 0)))
        .collect();
    let checker = |e: &String| &checkers.iter().find(|(n, _)| *n == e).unwrap().1;
    let mut pairs: Vec<(String, &String, PairModule)> =
        ws.pairs.iter().map(|(n, (e, p))| (n.clone(), e, p.clone())).collect();
    for (e, t) in &ws.extensions {
        if t.base().dim() <= 2 {
            for (i, p) in exhaustive_pairs(t, 3).into_iter().enumerate() {
                pairs.push((format!("{e}#{i}"), e, p));
            }
        }
    }
    for (name, e, p) in &pairs {
        let c = checker(e);
        if !(c.m_compatible().established() && c.pair_conditions(p).hold()) {
            continue;
        }
        let r = c
            .build_pair_complete_resolution(p, window)
            .map_err(|err| format!("{name}: {err}"))?;
        ensure(r.checks.all(), || format!("{name}: {:?}", r.checks))?;
        built += 1;
    }
    for (name, (e, cp)) in &ws.copairs {
        let c = checker(e);
        if !(c.m_cocompatible().established() && c.copair_conditions(cp).hold()) {
            continue;
        }
        let r = c
            .build_copair_complete_coresolution(cp, window)
            .map_err(|err| format!("{name}: {err}"))?;
        ensure(r.checks.all(), || format!("{name}: {:?}", r.checks))?;
        built += 1;
    }
    ensure(built > 0, || "no qualifying instance".into())?;
    Ok(format!("{built} complexes built and checked"))
}

fn decider(a: Algebra) -> Decider {
    let a = Arc::new(a);
    let bound = (2 * a.dim()).max(10);
    Decider::new(Arc::new(Structure::new(a, 0)), bound)
}

fn decider_sanity() -> Outcome {
    let a2 = decider(catalog::a2(gf(2)));
    ensure(a2.regime() == Regime::IwanagaGorenstein { left: 1, right: 1 }, || {
        format!("A2 regime {:?}", a2.regime())
    })?;
    let alg = a2.structure().algebra().clone();
    let regular_parts = indecomposable_summands(&LeftModule::regular(alg.clone()), 0);
    let modules = enumerate_quiver_modules_upto(&alg, 4, 0);
    for m in &modules {
        // projective iff every indecomposable summand is a summand of A
        let projective = indecomposable_summands(m, 0)
            .iter()
            .all(|s| regular_parts.iter().any(|q| iso(s, q)));
        let v = a2.gp(m);
        let certified = matches!(v.answer, Answer::CertifiedYes | Answer::CertifiedNo);
        ensure(certified && v.is_yes() == projective, || format!("A2 module of dim {}: {v:?}", m.dim()))?;
    }
    let mut count = modules.len();
    for a in [catalog::dual_numbers(gf(2)), catalog::cyclic_nakayama(gf(2))] {
        let d = decider(a);
        ensure(d.regime() == Regime::SelfInjective, || format!("regime {:?}", d.regime()))?;
        let alg = d.structure().algebra().clone();
        for m in enumerate_quiver_modules_upto(&alg, 3, 0) {
            ensure(d.gp(&m).is_certified_yes(), || format!("GP of dim {}", m.dim()))?;
            ensure(d.gi(&m).is_certified_yes(), || format!("GI of dim {}", m.dim()))?;
            // every right module is the dual of a left module
            ensure(d.gf_right(&dual_module(&m)).is_certified_yes(), || format!("GF of dim {}", m.dim()))?;
            count += 1;
        }
    }
    Ok(format!("{count} modules"))
}

fn ext_oracle() -> Outcome {
    let d = Structure::new(Arc::new(catalog::dual_numbers(gf(2))), 0);
    let k = d.simples()[0].clone();
    let minimal = ext_groups(&d, &k, &k, 6).map_err(|e| e.to_string())?;
    let padded = ext_from_resolution(&padded_projective_resolution(&d, &k, 7, 5), &k, 6).map_err(|e| e.to_string())?;
    for i in 1..=6 {
        let a = minimal.iter().find(|g| g.degree == i).map(|g| g.dim);
        let b = padded.iter().find(|g| g.degree == i).map(|g| g.dim);
        ensure(a == Some(1) && b == Some(1), || format!("Ext^{i}(k, k): {a:?} vs {b:?}"))?;
    }
    let res = minimal_projective_resolution(&d, &k, 6);
    ensure(res.to_complex().lo() == -6, || "resolution length".into())?;
    let a2 = Structure::new(Arc::new(catalog::a2(gf(2))), 0);
    let q = a2.algebra().quiver().unwrap();
    // the simple at the source of the arrow
    let s = q.simple(a2.algebra(), 0);
    let pd = pd_bounded(&a2, &s, 10);
    ensure(pd == DimensionVerdict::Finite(1), || format!("pd S = {pd:?}"))?;
    let id = id_bounded(&d, &LeftModule::regular(d.algebra().clone()), 10);
    ensure(id == DimensionVerdict::Finite(0), || format!("id D = {id:?}"))?;
    Ok("Ext^1..6(k, k) = 1 twice, pd = 1, id = 0".into())
}

/// Brute-force algebra isomorphism search over GF(2).
fn isomorphic_gf2(a: &Algebra, b: &Algebra) -> bool {
    let n = a.dim();
    n == b.dim()
        && (0u64..1 << (n * n)).any(|bits| {
            let data = (0..n * n).map(|i| ((bits >> i) & 1) as u32).collect();
            let phi = FpMatrix::new(a.field(), n, n, data).unwrap();
            phi.rank() == n && a.is_isomorphism_to(b, &phi)
        })
}

fn morita_suite() -> Outcome {
    let f = gf(2);
    let k = Algebra::ground_field(f);
    let kk = Arc::try_unwrap(Algebra::product_algebra(&k, &k).unwrap().algebra).unwrap();
    let known = [
        ((false, false), kk),
        ((true, false), catalog::a2(f)),
        ((true, true), catalog::cyclic_nakayama(f)),
    ];
    for ((u, v), expected) in &known {
        let ring = morita_ring(&field_context(f, *u, *v)).map_err(|e| e.to_string())?;
        ensure(ring.lambda().is_isomorphism_to(ring.view().total(), ring.iso()), || "witness fails".into())?;
        ensure(isomorphic_gf2(ring.lambda(), expected), || format!("Λ for U={u}, V={v}"))?;
    }

    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let rings: Vec<MoritaRing> = [(2, true, false), (2, true, true), (3, true, true), (3, true, false)]
        .iter()
        .map(|&(p, u, v)| morita_ring(&field_context(gf(p), u, v)).unwrap())
        .collect();
    let mut tuples = 0;
    for ring in &rings {
        let total = ring.view().total().clone();
        for _ in 0..25 {
            let n = random_module(&total, 4, &mut rng);
            let t = ring.tuple_from_module(&n).map_err(|e| e.to_string())?;
            let pair = ring.theta(&t).map_err(|e| e.to_string())?;
            let back = ring.theta_inverse(&pair).map_err(|e| e.to_string())?;
            ensure(back.f().matrix() == t.f().matrix() && back.g().matrix() == t.g().matrix(), || {
                "theta round trip".into()
            })?;
            ensure(iso(&pair_to_module(&pair, ring.view()), &n), || "theta changes the module".into())?;
            let m = random_module(&total, 3, &mut rng);
            let s = ring.tuple_from_module(&m).map_err(|e| e.to_string())?;
            ensure(ring.tuple_hom_dim(&s, &t) == hom_dim(&m, &n), || "tuple hom dimension".into())?;
            let w = random_right_module(&total, 4, &mut rng);
            let r = ring.right_tuple_from_module(&w).map_err(|e| e.to_string())?;
            let r2 = ring.upsilon_inverse(&ring.upsilon(&r).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
            ensure(r2.f() == r.f() && r2.g() == r.g(), || "upsilon round trip".into())?;
            tuples += 1;
        }
    }

    let mut directions = 0;
    for ring in &rings {
        let checker = MoritaChecker::new(ring.clone(), 10, 0);
        let total = ring.view().total().clone();
        for _ in 0..10 {
            let n = random_module(&total, 4, &mut rng);
            let w = random_right_module(&total, 4, &mut rng);
            let reps = [
                checker.verify_tuple(&ring.tuple_from_module(&n).unwrap()).unwrap(),
                checker.verify_cotuple(&ring.cotuple_from_module(&n).unwrap()).unwrap(),
                checker.verify_right_tuple(&ring.right_tuple_from_module(&w).unwrap()).unwrap(),
            ];
            for rep in reps {
                ensure(rep.status != Agreement::Contradiction, || format!("{rep:?}"))?;
                ensure(!rep.forward_established || !rep.local_hold() || !rep.lambda.is_no(), || {
                    "forward direction".into()
                })?;
                ensure(rep.propagation_holds, || "sum report not established".into())?;
                directions += 1;
            }
        }
    }

    let ring = morita_ring(&field_context(f, true, false)).unwrap();
    let checker = MoritaChecker::new(ring.clone(), 10, 0);
    let pairs = exhaustive_pairs(ring.view(), 4);
    ensure(pairs.len() == 21, || format!("{} A2 tuples", pairs.len()))?;
    for p in &pairs {
        let t = ring.theta_inverse(p).map_err(|e| e.to_string())?;
        let rep = checker.verify_tuple(&t).map_err(|e| e.to_string())?;
        ensure(rep.status == Agreement::Agree, || format!("A2 tuple: {rep:?}"))?;
    }

    let ring = morita_ring(&field_context(f, true, true)).unwrap();
    let checker = MoritaChecker::new(ring.clone(), 10, 0);
    for p in exhaustive_pairs(ring.view(), 3) {
        let t = ring.theta_inverse(&p).unwrap();
        let rep = checker.verify_tuple(&t).unwrap();
        ensure(!rep.local_hold() || rep.lambda.is_certified_yes(), || "Nakayama tuple".into())?;
        ensure(!rep.converse_established || rep.status == Agreement::Agree, || "Nakayama converse".into())?;
    }
    Ok(format!(
        "3 rings, {tuples} round trips, {directions} direction checks, {} A2 tuples agree",
        pairs.len()
    ))
}

fn determinism() -> Outcome {
    let commands = [
        Command::Validate,
        Command::Check(Property::Gp),
        Command::Check(Property::Gi),
        Command::Check(Property::Gf),
        Command::Verify(Harness::PairGp),
        Command::Verify(Harness::CopairGi),
        Command::Verify(Harness::RightPairGf),
        Command::Verify(Harness::TupleGp),
        Command::Verify(Harness::CotupleGi),
        Command::Verify(Harness::RightTupleGf),
    ];
    let flags = Flags {
        seed: 17,
        samples: 5,
        max_dim: 3,
        ..Default::default()
    };
    let once = || -> Result<Vec<String>, String> {
        let ws = Workspace::build(&corpus::builtin()).map_err(|e| e.to_string())?;
        let mut out: Vec<String> = commands
            .iter()
            .map(|c| run(c, &ws, "builtin", &[], &flags).map(|r| r.payload()).map_err(|e| e.to_string()))
            .collect::<Result<_, _>>()?;
        let mut f = flags.clone();
        f.window = Some(3);
        let r = run(&Command::Resolve(Side::Pair), &ws, "builtin", &["d_free".into()], &f).map_err(|e| e.to_string())?;
        out.push(r.payload());
        Ok(out)
    };
    let (a, b) = (once()?, once()?);
    ensure(a == b, || "reports differ between runs".into())?;
    let sweep = || {
        let t = catalog::triangular_extension(gf(2));
        let checker = ExtensionChecker::new(t.clone(), 10, 0);
        exhaustive_pairs(&t, 3)
            .iter()
            .map(|p| serde_json::to_string(&checker.verify_pair(p)).unwrap())
            .collect::<Vec<_>>()
    };
    ensure(sweep() == sweep(), || "sweep reports differ".into())?;
    Ok(format!("{} reports identical across runs", a.len()))
}

type Criterion = (&'static str, fn() -> Outcome);

#[test]
fn acceptance() {
    let criteria: [Criterion; 10] = [
        ("functor identities and adjunctions", functor_identities),
        ("projectives and injectives of the total algebra", projective_classification),
        ("pair isomorphisms, sequences and factorizations", pair_structure),
        ("full equivalence over the triangular extension", triangular_equivalence),
        ("hypothesis necessity exhibits", hypothesis_necessity),
        ("lifted complete resolutions", lifted_resolutions),
        ("Gorenstein decider sanity", decider_sanity),
        ("Ext oracle", ext_oracle),
        ("Morita context suite", morita_suite),
        ("determinism", determinism),
    ];
    let handles: Vec<_> = criteria
        .iter()
        .map(|&(name, f)| (name, std::thread::spawn(f)))
        .collect();
    let mut failed = Vec::new();
    for (i, (name, h)) in handles.into_iter().enumerate() {
        let outcome = h.join().unwrap_or_else(|e| {
            Err(e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_else(|| "panicked".into()))
        });
        // straight to the handle so the lines survive output capture
        let line = match outcome {
            Ok(detail) => format!("PASS criterion {}: {name} ({detail})\n", i + 1),
            Err(why) => {
                failed.push(i + 1);
                format!("FAIL criterion {}: {name} ({why})\n", i + 1)
            }
        };
        std::io::stdout().write_all(line.as_bytes()).unwrap();
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
