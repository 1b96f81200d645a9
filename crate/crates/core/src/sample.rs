//! Random and exhaustive module generation for tests, sweeps and benches.

use std::sync::Arc;

use rand::Rng;

use crate::algebra::{
    find_isomorphism, hom_space, quotient_module, spin, submodule, Algebra, LeftModule, ModuleHom, RightModule,
};
use crate::linalg::{FieldSpec, FpMatrix};
use crate::trivext::{module_to_copair, module_to_pair, CopairModule, PairModule, TrivialExtension};

/// A random subquotient of a free module of rank at most two, of dimension
/// at most `max_dim` (possibly zero).
pub fn random_module<R: Rng>(alg: &Arc<Algebra>, max_dim: usize, rng: &mut R) -> LeftModule {
    let f = alg.field();
    loop {
        let free = LeftModule::free(alg.clone(), rng.gen_range(1..=2));
        let gens = FpMatrix::random(f, rng.gen_range(1..=2), free.dim(), rng);
        let (s, _) = submodule(&free, &spin(&gens, free.action())).expect("spun subspaces are submodules");
        let k = rng.gen_range(0..=2);
        let rel = FpMatrix::random(f, k, s.dim(), rng);
        let (q, _) = quotient_module(&s, &spin(&rel, s.action())).expect("spun subspaces are submodules");
        if q.dim() <= max_dim {
            return q;
        }
    }
}

/// Like [`random_module`] but never zero.
pub fn random_nonzero_module<R: Rng>(alg: &Arc<Algebra>, max_dim: usize, rng: &mut R) -> LeftModule {
    loop {
        let m = random_module(alg, max_dim, rng);
        if m.dim() > 0 {
            return m;
        }
    }
}

pub fn random_right_module<R: Rng>(alg: &Arc<Algebra>, max_dim: usize, rng: &mut R) -> RightModule {
    let op = Arc::new(alg.opposite());
    let m = random_module(&op, max_dim, rng);
    RightModule::from_left_over_opposite(&m, alg.clone()).expect("opposite of the opposite")
}

pub fn random_hom<R: Rng>(m: &LeftModule, n: &LeftModule, rng: &mut R) -> ModuleHom {
    let h = hom_space(m, n).expect("same algebra");
    let p = m.field().p();
    let c: Vec<u32> = (0..h.dim()).map(|_| rng.gen_range(0..p)).collect();
    ModuleHom::new(m.clone(), n.clone(), h.element(&c)).expect("combination of homomorphisms")
}

pub fn random_pair<R: Rng>(t: &TrivialExtension, max_dim: usize, rng: &mut R) -> PairModule {
    module_to_pair(&random_module(t.total(), max_dim, rng), t).expect("module over the total algebra")
}

pub fn random_copair<R: Rng>(t: &TrivialExtension, max_dim: usize, rng: &mut R) -> CopairModule {
    module_to_copair(&random_module(t.total(), max_dim, rng), t).expect("module over the total algebra")
}

/// Isomorphism classes collected incrementally; the rank of every basis
/// action and the dimension of the endomorphism ring prefilter candidates.
pub struct IsoClasses {
    seed: u64,
    reps: Vec<(Vec<usize>, LeftModule)>,
}

impl IsoClasses {
    pub fn new(seed: u64) -> Self {
        IsoClasses { seed, reps: Vec::new() }
    }

    fn invariant(m: &LeftModule) -> Vec<usize> {
        let mut v = vec![m.dim()];
        v.extend(m.action().iter().map(FpMatrix::rank));
        v.push(hom_space(m, m).expect("same algebra").dim());
        v
    }

    /// Adds `m` unless an isomorphic module is present; returns whether it
    /// was new.
    pub fn insert(&mut self, m: LeftModule) -> bool {
        let inv = Self::invariant(&m);
        let seed = self.seed;
        let known = self
            .reps
            .iter()
            .any(|(i, r)| *i == inv && find_isomorphism(r, &m, seed).ok().flatten().is_some());
        if !known {
            self.reps.push((inv, m));
        }
        !known
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn into_modules(self) -> Vec<LeftModule> {
        self.reps.into_iter().map(|(_, m)| m).collect()
    }
}

fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Calls `visit` with every matrix of the given shape over `f`.
fn for_each_matrix(f: FieldSpec, rows: usize, cols: usize, mut visit: impl FnMut(FpMatrix)) {
    let n = rows * cols;
    let p = f.p();
    let mut digits = vec![0u32; n];
    loop {
        visit(FpMatrix::new(f, rows, cols, digits.clone()).expect("reduced entries"));
        let mut i = 0;
        loop {
            if i == n {
                return;
            }
            digits[i] += 1;
            if digits[i] == p {
                digits[i] = 0;
                i += 1;
            } else {
                break;
            }
        }
    }
}

/// Every module of dimension exactly `dim` over a quiver algebra, up to
/// isomorphism, by enumerating all representations.
pub fn enumerate_quiver_modules(alg: &Arc<Algebra>, dim: usize, seed: u64) -> Vec<LeftModule> {
    let q = alg.quiver().expect("quiver algebra");
    let f = alg.field();
    let mut classes = IsoClasses::new(seed);
    for dims in compositions(dim, q.vertices()) {
        let shapes: Vec<(usize, usize)> = q.arrows().iter().map(|&(s, t)| (dims[t], dims[s])).collect();
        let mut stack: Vec<FpMatrix> = Vec::new();
        enumerate_arrows(f, &shapes, &mut stack, &mut |maps| {
            if let Ok(m) = q.representation(alg, &dims, maps) {
                classes.insert(m);
            }
        });
    }
    classes.into_modules()
}

fn enumerate_arrows(
    f: FieldSpec,
    shapes: &[(usize, usize)],
    stack: &mut Vec<FpMatrix>,
    visit: &mut dyn FnMut(&[FpMatrix]),
) {
    if stack.len() == shapes.len() {
        visit(stack);
        return;
    }
    let (r, c) = shapes[stack.len()];
    for_each_matrix(f, r, c, |m| {
        stack.push(m);
        enumerate_arrows(f, shapes, stack, visit);
        stack.pop();
    });
}

/// All modules of dimension `1..=max_dim` over a quiver algebra.
pub fn enumerate_quiver_modules_upto(alg: &Arc<Algebra>, max_dim: usize, seed: u64) -> Vec<LeftModule> {
    (1..=max_dim)
        .flat_map(|d| enumerate_quiver_modules(alg, d, seed))
        .collect()
}

/// Every pair `(X, α)` with `X` drawn from `bases` and `α` ranging over all
/// of `Hom_R(M ⊗ X, X)` subject to the square-zero law, deduplicated up to
/// isomorphism of total modules.
pub fn enumerate_pairs(t: &TrivialExtension, bases: &[LeftModule], seed: u64) -> Vec<PairModule> {
    let mut classes = IsoClasses::new(seed);
    let mut out = Vec::new();
    for x in bases {
        let mx = t.tensor(x);
        let h = hom_space(mx.module(), x).expect("same algebra");
        let f = x.field();
        for_each_matrix(f, 1, h.dim(), |c| {
            let alpha = h.element(c.row(0));
            if let Ok(p) = PairModule::new(t, x.clone(), alpha) {
                if classes.insert(crate::trivext::pair_to_module(&p, t)) {
                    out.push(p);
                }
            }
        });
    }
    out
}

/// Direct sums of the given simples with total dimension `1..=max_dim`
/// (all modules when the algebra is semisimple).
pub fn semisimple_modules(alg: &Arc<Algebra>, simples: &[LeftModule], max_dim: usize) -> Vec<LeftModule> {
    let mut out = Vec::new();
    fn rec(
        alg: &Arc<Algebra>,
        simples: &[LeftModule],
        i: usize,
        budget: usize,
        acc: &mut Vec<LeftModule>,
        out: &mut Vec<LeftModule>,
    ) {
        if i == simples.len() {
            if !acc.is_empty() {
                out.push(LeftModule::direct_sum_all(alg, acc));
            }
            return;
        }
        let d = simples[i].dim();
        let mut k = 0;
        loop {
            rec(alg, simples, i + 1, budget - k * d, acc, out);
            if (k + 1) * d > budget {
                break;
            }
            acc.push(simples[i].clone());
            k += 1;
        }
        for _ in 0..k {
            acc.pop();
        }
    }
    rec(alg, simples, 0, max_dim, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn gf(p: u32) -> FieldSpec {
        FieldSpec::new(p).unwrap()
    }

    #[test]
    fn random_modules_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let alg = Arc::new(catalog::cyclic_nakayama(gf(3)));
        for _ in 0..20 {
            let m = random_module(&alg, 4, &mut rng);
            assert!(m.dim() <= 4);
            m.validate().unwrap();
            random_right_module(&alg, 3, &mut rng).validate().unwrap();
        }
    }

    #[test]
    fn indecomposable_counts_of_small_quivers() {
        // A2 has exactly three indecomposables: S0, S1 and P0.
        let a2 = Arc::new(catalog::a2(gf(2)));
        let counts: Vec<usize> = (1..=3).map(|d| enumerate_quiver_modules(&a2, d, 0).len()).collect();
        // dim 1: S0, S1; dim 2: S0², S1², S0⊕S1, P0; dim 3: 6 partitions into those
        assert_eq!(counts, vec![2, 4, 6]);
        let d = Arc::new(catalog::dual_numbers(gf(2)));
        // k[y]/y²-modules are sums of k and D: dims 1, 2, 3 give 1, 2, 2 classes
        let counts: Vec<usize> = (1..=3).map(|n| enumerate_quiver_modules(&d, n, 0).len()).collect();
        assert_eq!(counts, vec![1, 2, 2]);
    }

    #[test]
    fn semisimple_sums() {
        let k = Arc::new(Algebra::ground_field(gf(2)));
        let s = vec![LeftModule::regular(k.clone())];
        assert_eq!(semisimple_modules(&k, &s, 3).len(), 3);
    }
}
