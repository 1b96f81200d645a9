use std::sync::Arc;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use trivext::algebra::{
    cokernel_module, dual_module, find_isomorphism, hom_from_bimodule, hom_space, is_exact_at, right_kernel,
    tensor_over, Algebra, Bimodule, LeftModule, ModuleHom, RightModule,
};
use trivext::catalog;
use trivext::gorenstein::{Agreement, Answer, Certificate, Decider, ExtensionChecker};
use trivext::homology::{ext_from_resolution, ext_groups, id_bounded, padded_projective_resolution, pd_bounded, DimensionVerdict};
use trivext::linalg::{FieldSpec, FpMatrix};
use trivext::morita::{field_context, morita_ring, MoritaChecker};
use trivext::sample::{random_hom, random_module, random_nonzero_module, random_right_module};
use trivext::structure::Structure;
use trivext::trivext::{module_to_copair, module_to_pair, module_to_right_pair, TrivialExtension};

fn gf(p: u32) -> FieldSpec {
    FieldSpec::new(p).unwrap()
}

fn algebras() -> Vec<Arc<Algebra>> {
    vec![
        Arc::new(catalog::dual_numbers(gf(2))),
        Arc::new(catalog::dual_numbers(gf(3))),
        Arc::new(catalog::a2(gf(2))),
        Arc::new(catalog::a2(gf(3))),
        Arc::new(catalog::cyclic_nakayama(gf(2))),
        Arc::new(catalog::local_two_loops(gf(2))),
        catalog::triangular_extension(gf(3)).total().clone(),
    ]
}

fn extensions() -> Vec<TrivialExtension> {
    vec![
        catalog::field_extension(gf(2)),
        catalog::field_extension(gf(3)),
        catalog::triangular_extension(gf(2)),
        catalog::triangular_extension(gf(3)),
        morita_ring(&field_context(gf(2), true, true)).unwrap().view().clone(),
        morita_ring(&field_context(gf(3), true, false)).unwrap().view().clone(),
        TrivialExtension::new(
            Arc::new(catalog::dual_numbers(gf(2))),
            Bimodule::regular(Arc::new(catalog::dual_numbers(gf(2)))),
        )
        .unwrap(),
    ]
}

fn bimodules() -> Vec<Bimodule> {
    let mut out: Vec<Bimodule> = extensions().iter().map(|t| t.bimodule().clone()).collect();
    out.push(Bimodule::regular(Arc::new(catalog::a2(gf(2)))));
    out
}

fn structure(a: &Arc<Algebra>) -> Structure {
    Structure::new(a.clone(), 0)
}

fn iso(a: &LeftModule, b: &LeftModule) -> bool {
    a.dim() == b.dim() && find_isomorphism(a, b, 0).unwrap().is_some()
}

/// `ker g = im f`, by listing every vector of a GF(2)-space.
fn exact_by_enumeration(f: &FpMatrix, g: &FpMatrix) -> bool {
    let (n, m) = (f.rows(), f.cols());
    let vectors = |len: usize| {
        (0u32..1 << len).map(move |bits| (0..len).map(|i| (bits >> i) & 1).collect::<Vec<u32>>())
    };
    let mut image: Vec<Vec<u32>> = vectors(m).map(|u| f.mul_vec(&u)).collect();
    image.sort();
    image.dedup();
    let mut kernel: Vec<Vec<u32>> = vectors(n).filter(|v| g.mul_vec(v).iter().all(|&x| x == 0)).collect();
    kernel.sort();
    image == kernel
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn random_modules_and_maps_validate(seed in any::<u64>(), which in 0usize..7) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = &algebras()[which];
        let m = random_module(a, 4, &mut rng);
        let n = random_module(a, 4, &mut rng);
        m.validate().unwrap();
        random_hom(&m, &n, &mut rng).validate().unwrap();
        random_right_module(a, 4, &mut rng).validate().unwrap();
    }

    #[test]
    fn tensor_hom_adjunction(seed in any::<u64>(), which in 0usize..8) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let b = &bimodules()[which];
        let x = random_module(b.right_algebra(), 3, &mut rng);
        let y = random_module(b.left_algebra(), 3, &mut rng);
        let mx = tensor_over(b, &x).unwrap();
        let hy = hom_from_bimodule(b, &y).unwrap();
        mx.module().validate().unwrap();
        hy.module().validate().unwrap();
        prop_assert_eq!(
            hom_space(mx.module(), &y).unwrap().dim(),
            hom_space(&x, hy.module()).unwrap().dim()
        );
    }

    #[test]
    fn duality_turns_cokernels_into_kernels(seed in any::<u64>(), which in 0usize..7) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = &algebras()[which];
        let m = random_module(a, 3, &mut rng);
        let n = random_module(a, 3, &mut rng);
        let f = random_hom(&m, &n, &mut rng);
        let (c, _) = cokernel_module(&f);
        let (dn, dm) = (dual_module(&n), dual_module(&m));
        let k = right_kernel(&dn, &dm, &f.matrix().transpose());
        prop_assert!(iso(&dual_module(&c).to_left_over_opposite(), &k.to_left_over_opposite()));
    }

    #[test]
    fn exactness_matches_enumeration(seed in any::<u64>(), which in 0usize..2) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = &[Arc::new(catalog::dual_numbers(gf(2))), Arc::new(catalog::a2(gf(2)))][which];
        let l = random_module(a, 4, &mut rng);
        let m = random_module(a, 4, &mut rng);
        let n = random_module(a, 4, &mut rng);
        let f = random_hom(&l, &m, &mut rng);
        let g = random_hom(&m, &n, &mut rng);
        // only composable pairs with g f = 0 can be exact
        let gf_zero = g.matrix().mul(f.matrix()).is_zero();
        let ours = is_exact_at(&f, &g).unwrap();
        prop_assert_eq!(ours, gf_zero && exact_by_enumeration(f.matrix(), g.matrix()));
        // the canonical exact pair through the cokernel
        let (_, q) = cokernel_module(&g);
        let (_, q_f) = cokernel_module(&f);
        prop_assert!(is_exact_at(&f, &q_f).unwrap());
        prop_assert!(is_exact_at(&g, &q).unwrap());
    }

    #[test]
    fn structure_invariants(seed in any::<u64>(), which in 0usize..7) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = &algebras()[which];
        let st = structure(a);
        let total: usize = st.pims().iter().zip(st.multiplicities()).map(|(p, &k)| k * p.dim()).sum();
        prop_assert_eq!(total, a.dim());
        let m = random_module(a, 4, &mut rng);
        let cover = st.projective_cover(&m);
        prop_assert!(cover.epi.matrix().mul(cover.kernel_inclusion.matrix()).is_zero());
        prop_assert!(st.is_projective(&cover.cover));
        prop_assert_eq!(cover.cover.dim(), m.dim() + cover.kernel.dim());
        // composition factors do not depend on the seed
        let other = Structure::new(a.clone(), seed);
        let count = |s: &Structure| {
            let mut v: Vec<usize> = s.chop(&m).factors.iter().map(|f| st.simple_index(f).unwrap()).collect();
            v.sort();
            v
        };
        prop_assert_eq!(count(&st), count(&other));
        // double duals
        for p in st.pims() {
            let back = st.from_opposite_dual(&st.to_opposite_dual(p));
            prop_assert!(iso(&back, p));
        }
    }

    #[test]
    fn ext_is_resolution_independent(seed in any::<u64>(), which in 0usize..7) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = &algebras()[which];
        let st = structure(a);
        let m = random_nonzero_module(a, 3, &mut rng);
        let n = random_module(a, 3, &mut rng);
        let minimal: Vec<usize> = ext_groups(&st, &m, &n, 3).unwrap().iter().map(|g| g.dim).collect();
        let padded: Vec<usize> = ext_from_resolution(&padded_projective_resolution(&st, &m, 4, seed), &n, 3)
            .unwrap()
            .iter()
            .map(|g| g.dim)
            .collect();
        prop_assert_eq!(minimal, padded);
    }

    #[test]
    fn dimensions_are_witnessed(seed in any::<u64>(), which in 0usize..7) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = &algebras()[which];
        let st = structure(a);
        let m = random_nonzero_module(a, 3, &mut rng);
        if let DimensionVerdict::Finite(d) = pd_bounded(&st, &m, 8) {
            let n = random_module(a, 3, &mut rng);
            let top = ext_groups(&st, &m, &n, d + 1).unwrap();
            prop_assert_eq!(top.iter().find(|g| g.degree == d + 1).unwrap().dim, 0);
            let hit = st.simples().iter().any(|s| {
                ext_groups(&st, &m, s, d).unwrap().iter().any(|g| g.degree == d && g.dim > 0)
            });
            prop_assert!(hit);
        }
        // injective dimension by iterated envelopes
        let mut cur = m.clone();
        let mut steps = 0;
        while !st.is_injective(&cur) && steps <= 8 {
            let (_, iota) = st.injective_envelope(&cur);
            cur = cokernel_module(&iota).0;
            steps += 1;
        }
        let expected = if steps <= 8 { DimensionVerdict::Finite(steps) } else { DimensionVerdict::ExceedsBound(8) };
        let id = id_bounded(&st, &m, 8);
        match expected {
            DimensionVerdict::Finite(_) => prop_assert_eq!(id, expected),
            _ => prop_assert!(matches!(id, DimensionVerdict::ExceedsBound(_))),
        }
    }

    #[test]
    fn certified_no_is_sound(seed in any::<u64>(), which in 0usize..7) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = &algebras()[which];
        let st = Arc::new(structure(a));
        let d = Decider::new(st.clone(), 10);
        let g = random_nonzero_module(a, 4, &mut rng);
        let v = d.gp(&g);
        if let Certificate::ExtWitness { degree, dim } = v.certificate {
            prop_assert_eq!(v.answer, Answer::CertifiedNo);
            let res = padded_projective_resolution(&st, &g, degree + 1, seed);
            let regular = LeftModule::regular(a.clone());
            let again = ext_from_resolution(&res, &regular, degree).unwrap();
            prop_assert_eq!(again.iter().find(|e| e.degree == degree).unwrap().dim, dim);
            prop_assert!(dim > 0);
        }
    }

    #[test]
    fn projectives_and_injectives_are_gorenstein(which in 0usize..7) {
        let a = &algebras()[which];
        let st = Arc::new(structure(a));
        let d = Decider::new(st.clone(), 10);
        for p in st.pims() {
            prop_assert!(d.gp(p).is_certified_yes());
        }
        prop_assert!(d.gf_right(&RightModule::regular(a.clone())).is_yes());
        for e in st.injective_indecomposables() {
            prop_assert!(d.gi(&e).is_certified_yes());
        }
        let free = LeftModule::free(a.clone(), 2);
        prop_assert!(d.gp(&free).is_certified_yes());
    }

    #[test]
    fn local_conditions_never_contradict(seed in any::<u64>(), which in 0usize..7) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let t = &extensions()[which];
        let checker = ExtensionChecker::new(t.clone(), 10, 0);
        let n = random_nonzero_module(t.total(), 4, &mut rng);
        let w = random_right_module(t.total(), 4, &mut rng);
        let reps = [
            checker.verify_pair(&module_to_pair(&n, t).unwrap()),
            checker.verify_copair(&module_to_copair(&n, t).unwrap()),
            checker.verify_right_pair(&module_to_right_pair(&w, t).unwrap()),
        ];
        for rep in reps {
            prop_assert_ne!(rep.status, Agreement::Contradiction);
            if rep.forward_established && rep.local.hold() {
                prop_assert!(!rep.total.is_no());
            }
            if rep.converse_established && rep.total.is_certified_yes() {
                prop_assert!(rep.local.hold());
            }
        }
    }

    #[test]
    fn morita_tuples_never_contradict(seed in any::<u64>(), which in 0usize..4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = [gf(2), gf(3)][which / 2];
        let ring = morita_ring(&field_context(f, true, which % 2 == 0)).unwrap();
        let checker = MoritaChecker::new(ring.clone(), 10, 0);
        let n = random_nonzero_module(ring.view().total(), 4, &mut rng);
        ring.to_lambda(&n).validate().unwrap();
        let t = ring.tuple_from_module(&n).unwrap();
        let c = ring.cotuple_from_module(&n).unwrap();
        prop_assert!(iso(&ring.tuple_module(&t).unwrap(), &n));
        for rep in [checker.verify_tuple(&t).unwrap(), checker.verify_cotuple(&c).unwrap()] {
            prop_assert_ne!(rep.status, Agreement::Contradiction);
            prop_assert!(rep.local_matches_view);
            prop_assert!(rep.propagation_holds);
        }
    }
}

#[test]
fn zero_hom_of_zero_module() {
    let a = Arc::new(catalog::a2(gf(2)));
    let z = LeftModule::zero(a.clone());
    let r = LeftModule::regular(a);
    let h = ModuleHom::zero(z.clone(), r.clone());
    assert_eq!(cokernel_module(&h).0.dim(), r.dim());
    assert_eq!(hom_space(&z, &r).unwrap().dim(), 0);
}
