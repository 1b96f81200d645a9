//! Trivial extensions `R ⋉ M` and the two presentations of their modules:
//! pairs `(X, α)` with `α: M ⊗ X -> X` and copairs `[Y, β]` with
//! `β: Y -> Hom_R(M, Y)`.
//!
//! The total algebra uses the basis of `R` followed by the basis of `M`.
//! Tensor products `M ⊗ X` put the `X` factor outermost and Hom spaces are
//! vectorized row by row, so `M ⊗ (X ⊕ X')` and `Hom(M, Y ⊕ Y')` are literally
//! block diagonal; this makes the structure maps of `T(X)` and `H(Y)` the
//! block matrices `[[0, 0], [1, 0]]` on the nose.

use std::sync::Arc;

use crate::algebra::{
    cokernel_module, hom_from_bimodule, hom_space, image_module, is_exact_at, kernel_module, tensor_over,
    tensor_right_bimodule, tensor_right_left, Algebra, Bimodule, HomModule, LeftModule, ModuleHom,
    RightModule, RightTensor, Tensor,
};
use crate::error::{Error, Result};
use crate::linalg::{solve, FieldSpec, FpMatrix};
use crate::structure::Structure;
use crate::algebra::right_cokernel;

/// `R ⋉ M` with `(r, m)(r', m') = (r r', r m' + m r')`.
#[derive(Clone, Debug)]
pub struct TrivialExtension {
    base: Arc<Algebra>,
    bimodule: Bimodule,
    total: Arc<Algebra>,
}

impl TrivialExtension {
    pub fn new(base: Arc<Algebra>, bimodule: Bimodule) -> Result<Self> {
        if **bimodule.left_algebra() != *base || **bimodule.right_algebra() != *base {
            return Err(Error::AlgebraMismatch("both legs of M must be the base algebra".into()));
        }
        let f = base.field();
        let (r, m) = (base.dim(), bimodule.dim());
        let n = r + m;
        let mut lmul = vec![FpMatrix::zeros(f, n, n); n];
        let mut rmul = vec![FpMatrix::zeros(f, n, n); n];
        for i in 0..r {
            // r_i * r_j, r_i * m_k
            lmul[i].set_block(0, 0, base.left_mult(i));
            lmul[i].set_block(r, r, bimodule.left_act(i));
            // r_j * r_i, m_k * r_i
            rmul[i].set_block(0, 0, base.right_mult(i));
            rmul[i].set_block(r, r, bimodule.right_act(i));
        }
        for k in 0..m {
            // m_k * r_j = (m_k) r_j, r_j * m_k = r_j (m_k)
            for j in 0..r {
                let right = bimodule.right_act(j).col(k);
                let left = bimodule.left_act(j).col(k);
                for (l, (&a, &b)) in right.iter().zip(&left).enumerate() {
                    lmul[r + k].set(r + l, j, a);
                    rmul[r + k].set(r + l, j, b);
                }
            }
        }
        let mut unit = base.unit().to_vec();
        unit.extend(std::iter::repeat_n(0, m));
        let total = Algebra::assemble(f, lmul, rmul, unit, None);
        total.validate()?;
        Ok(TrivialExtension {
            base,
            bimodule,
            total: Arc::new(total),
        })
    }

    pub fn base(&self) -> &Arc<Algebra> {
        &self.base
    }
    pub fn bimodule(&self) -> &Bimodule {
        &self.bimodule
    }
    pub fn total(&self) -> &Arc<Algebra> {
        &self.total
    }
    pub fn base_dim(&self) -> usize {
        self.base.dim()
    }
    pub fn m_dim(&self) -> usize {
        self.bimodule.dim()
    }
    /// Total-algebra coordinates of `(r, m)`.
    pub fn embed(&self, r: &[u32], m: &[u32]) -> Vec<u32> {
        let mut v = r.to_vec();
        v.extend_from_slice(m);
        v
    }
    /// Splits total coordinates into `(r, m)`.
    pub fn split(&self, v: &[u32]) -> (Vec<u32>, Vec<u32>) {
        (v[..self.base_dim()].to_vec(), v[self.base_dim()..].to_vec())
    }

    /// `M ⊗_R X`.
    pub fn tensor(&self, x: &LeftModule) -> Tensor {
        tensor_over(&self.bimodule, x).expect("module over the base algebra")
    }
    /// `Hom_R(M, Y)`.
    pub fn hom(&self, y: &LeftModule) -> HomModule {
        hom_from_bimodule(&self.bimodule, y).expect("module over the base algebra")
    }

    /// `R` as an `R ⋉ M`-bimodule with `M` acting as zero on both sides.
    pub fn zr_bimodule(&self) -> Bimodule {
        let f = self.base.field();
        let (r, m) = (self.base_dim(), self.m_dim());
        let mut la: Vec<FpMatrix> = (0..r).map(|i| self.base.left_mult(i).clone()).collect();
        let mut ra: Vec<FpMatrix> = (0..r).map(|i| self.base.right_mult(i).clone()).collect();
        la.extend((0..m).map(|_| FpMatrix::zeros(f, r, r)));
        ra.extend((0..m).map(|_| FpMatrix::zeros(f, r, r)));
        Bimodule::new_unchecked(self.total.clone(), self.total.clone(), r, la, ra)
    }

    /// A left `R`-module inflated to `R ⋉ M` (M acting as zero).
    pub fn inflate(&self, x: &LeftModule) -> LeftModule {
        let f = x.field();
        let mut action = x.action().to_vec();
        action.extend((0..self.m_dim()).map(|_| FpMatrix::zeros(f, x.dim(), x.dim())));
        LeftModule::new_unchecked(self.total.clone(), x.dim(), action)
    }

    /// A right `R`-module inflated to `R ⋉ M`.
    pub fn inflate_right(&self, w: &RightModule) -> RightModule {
        let f = w.field();
        let mut action = w.action().to_vec();
        action.extend((0..self.m_dim()).map(|_| FpMatrix::zeros(f, w.dim(), w.dim())));
        RightModule::new_unchecked(self.total.clone(), w.dim(), action)
    }

    /// Restriction of a total module to `R`.
    pub fn restrict(&self, n: &LeftModule) -> LeftModule {
        LeftModule::new_unchecked(self.base.clone(), n.dim(), n.action()[..self.base_dim()].to_vec())
    }

    pub fn restrict_right(&self, n: &RightModule) -> RightModule {
        RightModule::new_unchecked(self.base.clone(), n.dim(), n.action()[..self.base_dim()].to_vec())
    }

    /// `Structure` of the base and of the total algebra.
    pub fn structures(&self, seed: u64) -> (Structure, Structure) {
        (
            Structure::new(self.base.clone(), seed),
            Structure::new(self.total.clone(), seed),
        )
    }

    /// The extension over the opposite algebras: `R^op ⋉ M` with `M` read as
    /// an `R^op`-bimodule by swapping its legs. Its total algebra is the
    /// opposite of this one (same basis).
    pub fn opposite(&self) -> TrivialExtension {
        let op = Arc::new(self.base.opposite());
        let m = Bimodule::new_unchecked(
            op.clone(),
            op.clone(),
            self.m_dim(),
            self.bimodule.right_action().to_vec(),
            self.bimodule.left_action().to_vec(),
        );
        TrivialExtension::new(op, m).expect("opposite of a trivial extension")
    }
}

/// Pair `(X, α)`: `α: M ⊗ X -> X` with `α (M ⊗ α) = 0`.
#[derive(Clone, Debug)]
pub struct PairModule {
    x: LeftModule,
    tensor: Tensor,
    alpha: ModuleHom,
}

impl PairModule {
    pub fn new(t: &TrivialExtension, x: LeftModule, alpha: FpMatrix) -> Result<Self> {
        let tensor = t.tensor(&x);
        let alpha = ModuleHom::new(tensor.module().clone(), x.clone(), alpha)?;
        let p = PairModule { x, tensor, alpha };
        p.check_law(t)?;
        Ok(p)
    }

    fn check_law(&self, t: &TrivialExtension) -> Result<()> {
        let mm = t.tensor(self.tensor.module());
        let m_alpha = mm.induced(&self.tensor, self.alpha.matrix());
        if !self.alpha.matrix().mul(&m_alpha).is_zero() {
            return Err(Error::InvariantViolation("α ∘ (M ⊗ α) ≠ 0".into()));
        }
        Ok(())
    }

    pub fn x(&self) -> &LeftModule {
        &self.x
    }
    pub fn tensor(&self) -> &Tensor {
        &self.tensor
    }
    pub fn alpha(&self) -> &ModuleHom {
        &self.alpha
    }
    pub fn dim(&self) -> usize {
        self.x.dim()
    }

    /// `M ⊗ α: M ⊗ M ⊗ X -> M ⊗ X` together with `M ⊗ M ⊗ X`.
    pub fn m_alpha(&self, t: &TrivialExtension) -> (Tensor, ModuleHom) {
        let mm = t.tensor(self.tensor.module());
        let mat = mm.induced(&self.tensor, self.alpha.matrix());
        let hom = ModuleHom::new_unchecked(mm.module().clone(), self.tensor.module().clone(), mat);
        (mm, hom)
    }

    /// Exactness of `M ⊗ M ⊗ X -> M ⊗ X -> X`.
    pub fn middle_exact(&self, t: &TrivialExtension) -> bool {
        let (_, ma) = self.m_alpha(t);
        is_exact_at(&ma, &self.alpha).expect("composable")
    }
}

/// Copair `[Y, β]`: `β: Y -> Hom_R(M, Y)` with `Hom(M, β) β = 0`.
#[derive(Clone, Debug)]
pub struct CopairModule {
    y: LeftModule,
    hom: HomModule,
    beta: ModuleHom,
}

impl CopairModule {
    pub fn new(t: &TrivialExtension, y: LeftModule, beta: FpMatrix) -> Result<Self> {
        let hom = t.hom(&y);
        let beta = ModuleHom::new(y.clone(), hom.module().clone(), beta)?;
        let c = CopairModule { y, hom, beta };
        let (_, gb) = c.g_beta(t);
        if !gb.matrix().mul(c.beta.matrix()).is_zero() {
            return Err(Error::InvariantViolation("Hom(M, β) ∘ β ≠ 0".into()));
        }
        Ok(c)
    }

    pub fn y(&self) -> &LeftModule {
        &self.y
    }
    pub fn hom(&self) -> &HomModule {
        &self.hom
    }
    pub fn beta(&self) -> &ModuleHom {
        &self.beta
    }
    pub fn dim(&self) -> usize {
        self.y.dim()
    }

    /// `β_* = Hom(M, β): Hom(M, Y) -> Hom(M, Hom(M, Y))` with its target.
    pub fn g_beta(&self, t: &TrivialExtension) -> (HomModule, ModuleHom) {
        let gg = t.hom(self.hom.module());
        let mat = self.hom.induced(&gg, self.beta.matrix());
        let hom = ModuleHom::new_unchecked(self.hom.module().clone(), gg.module().clone(), mat);
        (gg, hom)
    }

    /// Exactness of `Y -> Hom(M, Y) -> Hom(M, Hom(M, Y))`.
    pub fn middle_exact(&self, t: &TrivialExtension) -> bool {
        let (_, gb) = self.g_beta(t);
        is_exact_at(&self.beta, &gb).expect("composable")
    }
}

/// Right pair `(X, α)`: `α: X ⊗ M -> X` for a right module `X`.
#[derive(Clone, Debug)]
pub struct RightPairModule {
    x: RightModule,
    tensor: RightTensor,
    alpha: FpMatrix,
}

impl RightPairModule {
    pub fn new(t: &TrivialExtension, x: RightModule, alpha: FpMatrix) -> Result<Self> {
        let tensor = tensor_right_bimodule(&x, t.bimodule())?;
        if alpha.rows() != x.dim() || alpha.cols() != tensor.dim() {
            return Err(Error::Shape("α must map X ⊗ M to X".into()));
        }
        for (i, a) in tensor.module().action().iter().enumerate() {
            if alpha.mul(a) != x.act(i).mul(&alpha) {
                return Err(Error::InvalidHom(format!("α does not commute with b{i}")));
            }
        }
        let p = RightPairModule { x, tensor, alpha };
        let (_, aa) = p.alpha_m(t);
        if !p.alpha.mul(&aa).is_zero() {
            return Err(Error::InvariantViolation("α ∘ (α ⊗ M) ≠ 0".into()));
        }
        Ok(p)
    }

    pub fn x(&self) -> &RightModule {
        &self.x
    }
    pub fn tensor(&self) -> &RightTensor {
        &self.tensor
    }
    pub fn alpha(&self) -> &FpMatrix {
        &self.alpha
    }

    /// `α ⊗ M: X ⊗ M ⊗ M -> X ⊗ M`.
    pub fn alpha_m(&self, t: &TrivialExtension) -> (RightTensor, FpMatrix) {
        let xmm = tensor_right_bimodule(self.tensor.module(), t.bimodule()).expect("same algebra");
        let mat = xmm.induced(&self.tensor, &self.alpha);
        (xmm, mat)
    }

    pub fn middle_exact(&self, t: &TrivialExtension) -> bool {
        let (_, am) = self.alpha_m(t);
        crate::algebra::exact_matrices(&am, &self.alpha)
    }

    /// `coker α` as a right `R`-module.
    pub fn cokernel(&self) -> RightModule {
        right_cokernel(self.tensor.module(), &self.x, &self.alpha)
    }
}

/// Action matrices of `m_k` on `X` from `α`: `x -> α(m_k ⊗ x)`.
pub(crate) fn m_actions_from_alpha(proj: &FpMatrix, alpha: &FpMatrix, x_dim: usize, m_dim: usize) -> Vec<FpMatrix> {
    let f = alpha.field();
    let ix = FpMatrix::identity(f, x_dim);
    let a = alpha.mul(proj);
    (0..m_dim)
        .map(|k| {
            let mut e = FpMatrix::zeros(f, m_dim, 1);
            e.set(k, 0, 1);
            a.mul(&ix.kron(&e))
        })
        .collect()
}

/// `α` on the plain tensor space: column `j * dim M + k` is `m_k · x_j`.
pub(crate) fn plain_alpha(f: FieldSpec, m_actions: &[FpMatrix], x_dim: usize) -> FpMatrix {
    plain_from_actions(f, m_actions, x_dim, x_dim)
}

/// The map on the plain tensor space whose column `j * k_max + k` is column
/// `j` of `actions[k]`; each action is `rows x src_dim`.
pub(crate) fn plain_from_actions(f: FieldSpec, actions: &[FpMatrix], rows: usize, src_dim: usize) -> FpMatrix {
    let m_dim = actions.len();
    let mut a = FpMatrix::zeros(f, rows, src_dim * m_dim);
    for (k, act) in actions.iter().enumerate() {
        for j in 0..src_dim {
            for r in 0..rows {
                a.set(r, j * m_dim + k, act.get(r, j));
            }
        }
    }
    a
}

pub fn pair_to_module(p: &PairModule, t: &TrivialExtension) -> LeftModule {
    let mut action = p.x.action().to_vec();
    action.extend(m_actions_from_alpha(
        p.tensor.projection(),
        p.alpha.matrix(),
        p.x.dim(),
        t.m_dim(),
    ));
    LeftModule::new_unchecked(t.total.clone(), p.x.dim(), action)
}

pub fn module_to_pair(n: &LeftModule, t: &TrivialExtension) -> Result<PairModule> {
    if **n.algebra() != *t.total {
        return Err(Error::AlgebraMismatch("module is not over the total algebra".into()));
    }
    let x = t.restrict(n);
    let tensor = t.tensor(&x);
    let alpha = plain_alpha(n.field(), &n.action()[t.base_dim()..], x.dim()).mul(tensor.section());
    let alpha = ModuleHom::new_unchecked(tensor.module().clone(), x.clone(), alpha);
    Ok(PairModule { x, tensor, alpha })
}

/// Action matrices of `m_k` on `Y` from `β`: `y -> β(y)(m_k)`.
pub(crate) fn actions_from_beta(hom: &HomModule, beta: &FpMatrix, y_dim: usize, m_dim: usize) -> Vec<FpMatrix> {
    let f = beta.field();
    // column c is vec(β(y_c)), row-major with the Y index outer
    let v = hom.basis().transpose().mul(beta);
    (0..m_dim)
        .map(|k| {
            if y_dim == 0 {
                return FpMatrix::zeros(f, 0, beta.cols());
            }
            let rows: Vec<usize> = (0..y_dim).map(|r| r * m_dim + k).collect();
            v.select_rows(&rows)
        })
        .collect()
}

/// Inverse of [`actions_from_beta`].
pub(crate) fn beta_from_actions(hom: &HomModule, actions: &[FpMatrix], y_dim: usize, src_dim: usize) -> FpMatrix {
    let f = hom.module().field();
    let md = actions.len();
    let mut v = FpMatrix::zeros(f, y_dim * md, src_dim);
    for (k, a) in actions.iter().enumerate() {
        for r in 0..y_dim {
            for c in 0..src_dim {
                v.set(r * md + k, c, a.get(r, c));
            }
        }
    }
    hom.coordinate_matrix().mul(&v)
}

pub fn copair_to_module(c: &CopairModule, t: &TrivialExtension) -> LeftModule {
    let mut action = c.y.action().to_vec();
    action.extend(actions_from_beta(&c.hom, c.beta.matrix(), c.y.dim(), t.m_dim()));
    LeftModule::new_unchecked(t.total.clone(), c.y.dim(), action)
}

pub fn module_to_copair(n: &LeftModule, t: &TrivialExtension) -> Result<CopairModule> {
    if **n.algebra() != *t.total {
        return Err(Error::AlgebraMismatch("module is not over the total algebra".into()));
    }
    let y = t.restrict(n);
    let hom = t.hom(&y);
    let beta = beta_from_actions(&hom, &n.action()[t.base_dim()..], y.dim(), y.dim());
    let beta = ModuleHom::new_unchecked(y.clone(), hom.module().clone(), beta);
    Ok(CopairModule { y, hom, beta })
}

pub fn right_pair_to_module(p: &RightPairModule, t: &TrivialExtension) -> RightModule {
    let mut action = p.x.action().to_vec();
    action.extend(m_actions_from_alpha(p.tensor.projection(), &p.alpha, p.x.dim(), t.m_dim()));
    RightModule::new_unchecked(t.total.clone(), p.x.dim(), action)
}

pub fn module_to_right_pair(n: &RightModule, t: &TrivialExtension) -> Result<RightPairModule> {
    if **n.algebra() != *t.total {
        return Err(Error::AlgebraMismatch("module is not over the total algebra".into()));
    }
    let x = t.restrict_right(n);
    let tensor = tensor_right_bimodule(&x, t.bimodule())?;
    let alpha = plain_alpha(n.field(), &n.action()[t.base_dim()..], x.dim()).mul(tensor.section());
    Ok(RightPairModule { x, tensor, alpha })
}

/// `T(X) = (X ⊕ M ⊗ X, [[0, 0], [1, 0]])`.
pub fn functor_t(x: &LeftModule, t: &TrivialExtension) -> PairModule {
    let mx = t.tensor(x);
    let total = x.direct_sum(mx.module());
    let tensor = t.tensor(&total);
    let (xd, td) = (x.dim(), mx.dim());
    let mut mu = FpMatrix::zeros(x.field(), xd + td, tensor.dim());
    mu.set_block(xd, 0, &FpMatrix::identity(x.field(), td));
    debug_assert_eq!(tensor.dim(), td + t.tensor(mx.module()).dim());
    let alpha = ModuleHom::new_unchecked(tensor.module().clone(), total.clone(), mu);
    PairModule {
        x: total,
        tensor,
        alpha,
    }
}

/// `T(f) = f ⊕ (M ⊗ f)`.
pub fn functor_t_map(f: &ModuleHom, t: &TrivialExtension) -> FpMatrix {
    let (a, b) = (t.tensor(f.source()), t.tensor(f.target()));
    f.matrix().block_diag(&a.induced(&b, f.matrix()))
}

/// `Z(X) = (X, 0)`.
pub fn functor_z_pair(x: &LeftModule, t: &TrivialExtension) -> PairModule {
    let tensor = t.tensor(x);
    let alpha = ModuleHom::zero(tensor.module().clone(), x.clone());
    PairModule {
        x: x.clone(),
        tensor,
        alpha,
    }
}

/// `Z(Y) = [Y, 0]`.
pub fn functor_z_copair(y: &LeftModule, t: &TrivialExtension) -> CopairModule {
    let hom = t.hom(y);
    let beta = ModuleHom::zero(y.clone(), hom.module().clone());
    CopairModule {
        y: y.clone(),
        hom,
        beta,
    }
}

/// `H(Y) = [Hom(M, Y) ⊕ Y, [[0, 0], [1, 0]]]`.
pub fn functor_h(y: &LeftModule, t: &TrivialExtension) -> CopairModule {
    let gy = t.hom(y);
    let total = gy.module().direct_sum(y);
    let hom = t.hom(&total);
    let (gd, yd) = (gy.dim(), y.dim());
    let mut theta = FpMatrix::zeros(y.field(), hom.dim(), gd + yd);
    let ggd = hom.dim() - gd;
    theta.set_block(ggd, 0, &FpMatrix::identity(y.field(), gd));
    let beta = ModuleHom::new_unchecked(total.clone(), hom.module().clone(), theta);
    CopairModule {
        y: total,
        hom,
        beta,
    }
}

/// `H(g) = Hom(M, g) ⊕ g`.
pub fn functor_h_map(g: &ModuleHom, t: &TrivialExtension) -> FpMatrix {
    let (a, b) = (t.hom(g.source()), t.hom(g.target()));
    a.induced(&b, g.matrix()).block_diag(g.matrix())
}

pub fn functor_u_pair(p: &PairModule) -> LeftModule {
    p.x.clone()
}

pub fn functor_u_copair(c: &CopairModule) -> LeftModule {
    c.y.clone()
}

/// `C(X, α) = coker α` with the projection `ρ: X -> coker α`.
pub fn functor_c(p: &PairModule) -> (LeftModule, ModuleHom) {
    cokernel_module(&p.alpha)
}

/// `K[Y, β] = ker β` with the inclusion `ι: ker β -> Y`.
pub fn functor_k(c: &CopairModule) -> (LeftModule, ModuleHom) {
    kernel_module(&c.beta)
}

/// A projective `P` and an isomorphism `T(P) -> (X, α)` of total modules,
/// when the pair is projective.
#[derive(Clone, Debug)]
pub struct ProjectiveWitness {
    pub p: LeftModule,
    pub iso: ModuleHom,
}

#[derive(Clone, Debug)]
pub struct InjectiveWitness {
    pub e: LeftModule,
    /// `[Y, β] -> H(E)` as total modules.
    pub iso: ModuleHom,
}

pub fn classify_projective(p: &PairModule, t: &TrivialExtension, base: &Structure) -> Option<ProjectiveWitness> {
    let (c, rho) = functor_c(p);
    if !base.is_projective(&c) {
        return None;
    }
    let h = hom_space(&c, &p.x).expect("same algebra");
    let id = FpMatrix::identity(c.field(), c.dim());
    let s = h.solve(Some(rho.matrix()), None, &id)?;
    let tp = functor_t(&c, t);
    let mc = t.tensor(&c);
    let ms = mc.induced(&p.tensor, &s);
    let map = FpMatrix::hstack(c.field(), p.dim(), &[&s, &p.alpha.matrix().mul(&ms)]);
    let src = pair_to_module(&tp, t);
    let dst = pair_to_module(p, t);
    let iso = ModuleHom::new(src, dst, map).ok()?;
    iso.is_isomorphism().then_some(ProjectiveWitness { p: c, iso })
}

pub fn classify_injective(c: &CopairModule, t: &TrivialExtension, base: &Structure) -> Option<InjectiveWitness> {
    let (e, iota) = functor_k(c);
    if !base.is_injective(&e) {
        return None;
    }
    let h = hom_space(&c.y, &e).expect("same algebra");
    let id = FpMatrix::identity(e.field(), e.dim());
    let r = h.solve(None, Some(iota.matrix()), &id)?;
    let he = functor_h(&e, t);
    let ge = t.hom(&e);
    let gr = c.hom.induced(&ge, &r);
    let map = FpMatrix::vstack(e.field(), c.dim(), &[&gr.mul(c.beta.matrix()), &r]);
    let src = copair_to_module(c, t);
    let dst = copair_to_module(&he, t);
    let iso = ModuleHom::new(src, dst, map).ok()?;
    iso.is_isomorphism().then_some(InjectiveWitness { e, iso })
}

/// A short exact sequence `0 -> A -> B -> C -> 0` of total modules.
#[derive(Clone, Debug)]
pub struct ShortExact {
    pub mono: ModuleHom,
    pub epi: ModuleHom,
}

impl ShortExact {
    pub fn is_exact(&self) -> bool {
        self.mono.is_injective()
            && self.epi.is_surjective()
            && is_exact_at(&self.mono, &self.epi).unwrap_or(false)
            && self.mono.validate().is_ok()
            && self.epi.validate().is_ok()
    }
}

/// `0 -> Z(im α) -> (X, α) -> Z(coker α) -> 0`.
pub fn ses_of_pair(p: &PairModule, t: &TrivialExtension) -> ShortExact {
    let (im, incl, _) = image_module(&p.alpha);
    let (c, rho) = functor_c(p);
    let mid = pair_to_module(p, t);
    let left = t.inflate(&im);
    let right = t.inflate(&c);
    ShortExact {
        mono: ModuleHom::new_unchecked(left, mid.clone(), incl.matrix().clone()),
        epi: ModuleHom::new_unchecked(mid, right, rho.matrix().clone()),
    }
}

/// `0 -> Z(ker β) -> [Y, β] -> Z(im β) -> 0`.
pub fn ses_of_copair(c: &CopairModule, t: &TrivialExtension) -> ShortExact {
    let (k, iota) = functor_k(c);
    let (im, _, core) = image_module(&c.beta);
    let mid = copair_to_module(c, t);
    ShortExact {
        mono: ModuleHom::new_unchecked(t.inflate(&k), mid.clone(), iota.matrix().clone()),
        epi: ModuleHom::new_unchecked(mid, t.inflate(&im), core.matrix().clone()),
    }
}

/// `δ: M ⊗ coker α -> X` with `δ (M ⊗ ρ) = α`.
pub fn induced_delta(p: &PairModule, t: &TrivialExtension) -> (ModuleHom, ModuleHom) {
    let (c, rho) = functor_c(p);
    let mc = t.tensor(&c);
    let m_rho = p.tensor.induced(&mc, rho.matrix());
    let f = c.field();
    let right_inv = solve(&m_rho, &FpMatrix::identity(f, mc.dim())).expect("M ⊗ ρ is surjective");
    let delta = p.alpha.matrix().mul(&right_inv);
    let m_rho = ModuleHom::new_unchecked(p.tensor.module().clone(), mc.module().clone(), m_rho);
    (
        ModuleHom::new_unchecked(mc.module().clone(), p.x.clone(), delta),
        m_rho,
    )
}

/// `γ: Y -> Hom(M, ker β)` with `ι_* γ = β`; also returns `ι_*`.
pub fn induced_gamma(c: &CopairModule, t: &TrivialExtension) -> (ModuleHom, ModuleHom) {
    let (k, iota) = functor_k(c);
    let gk = t.hom(&k);
    let iota_star = gk.induced(&c.hom, iota.matrix());
    let gamma = solve(&iota_star, c.beta.matrix()).expect("β lands in the image of ι_*");
    (
        ModuleHom::new_unchecked(c.y.clone(), gk.module().clone(), gamma),
        ModuleHom::new_unchecked(gk.module().clone(), c.hom.module().clone(), iota_star),
    )
}

/// An explicit linear isomorphism between the two sides of a natural
/// isomorphism, with the checks that were run on it.
#[derive(Clone, Debug)]
pub struct IsoWitness {
    pub lhs_dim: usize,
    pub rhs_dim: usize,
    pub map: FpMatrix,
    pub well_defined: bool,
    pub invertible: bool,
}

impl IsoWitness {
    pub fn holds(&self) -> bool {
        self.well_defined && self.invertible
    }
}

/// `Z(W) ⊗_{R⋉M} (X, α) ≅ W ⊗_R coker α`, induced by `W ⊗ ρ`.
pub fn zero_tensor_iso(w: &RightModule, p: &PairModule, t: &TrivialExtension) -> IsoWitness {
    let zw = t.inflate_right(w);
    let n = pair_to_module(p, t);
    let lhs = tensor_right_left(&zw, &n).expect("same algebra");
    let (c, rho) = functor_c(p);
    let rhs = tensor_right_left(w, &c).expect("same algebra");
    let f = w.field();
    let plain = rho.matrix().kron(&FpMatrix::identity(f, w.dim()));
    let through = rhs.projection().mul(&plain);
    let map = through.mul(lhs.section());
    let well_defined = map.mul(lhs.projection()) == through;
    let invertible = map.is_invertible();
    IsoWitness {
        lhs_dim: lhs.dim(),
        rhs_dim: rhs.dim(),
        map,
        well_defined,
        invertible,
    }
}

/// `Hom_R(X, ker β) ≅ Hom_{R⋉M}(Z(X), [Y, β])`, induced by `g -> ι g`.
pub fn zero_hom_iso(x: &LeftModule, c: &CopairModule, t: &TrivialExtension) -> IsoWitness {
    let (k, iota) = functor_k(c);
    let rhs = hom_space(x, &k).expect("same algebra");
    let lhs = hom_space(&t.inflate(x), &copair_to_module(c, t)).expect("same algebra");
    let f = x.field();
    let mut map = FpMatrix::zeros(f, lhs.dim(), rhs.dim());
    let mut well_defined = true;
    for (j, g) in rhs.basis().iter().enumerate() {
        match lhs.coords(&iota.matrix().mul(g)) {
            Some(col) => {
                for (i, v) in col.into_iter().enumerate() {
                    map.set(i, j, v);
                }
            }
            None => well_defined = false,
        }
    }
    let invertible = map.is_invertible();
    IsoWitness {
        lhs_dim: lhs.dim(),
        rhs_dim: rhs.dim(),
        map,
        well_defined,
        invertible,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::linalg::FieldSpec;

    fn gf(p: u32) -> FieldSpec {
        FieldSpec::new(p).unwrap()
    }

    fn field_ext(p: u32) -> TrivialExtension {
        let k = Arc::new(Algebra::ground_field(gf(p)));
        TrivialExtension::new(k.clone(), Bimodule::regular(k)).unwrap()
    }

    #[test]
    fn zero_bimodule_gives_base() {
        let d = Arc::new(catalog::dual_numbers(gf(2)));
        let t = TrivialExtension::new(d.clone(), Bimodule::zero(d.clone(), d.clone())).unwrap();
        assert_eq!(**t.total(), *d);
    }

    #[test]
    fn field_by_field_is_dual_numbers() {
        let t = field_ext(2);
        assert_eq!(**t.total(), catalog::dual_numbers(gf(2)));
        // M-part squares to zero
        assert_eq!(t.total().product(1, 1), vec![0, 0]);
    }

    #[test]
    fn jordan_block_pair_is_regular_module() {
        let t = field_ext(2);
        let k = Arc::new(Algebra::ground_field(gf(2)));
        let x = LeftModule::free(k, 2);
        let mx = t.tensor(&x);
        assert_eq!(mx.dim(), 2);
        let alpha = FpMatrix::from_slices(gf(2), &[&[0, 0], &[1, 0]]);
        let p = PairModule::new(&t, x, alpha).unwrap();
        let n = pair_to_module(&p, &t);
        assert!(n.validate().is_ok());
        let reg = LeftModule::regular(t.total().clone());
        assert!(crate::algebra::find_isomorphism(&n, &reg, 0).unwrap().is_some());
        let back = module_to_pair(&n, &t).unwrap();
        assert_eq!(back.alpha().matrix(), p.alpha().matrix());
    }

    #[test]
    fn functor_identities_on_the_nose() {
        let t = field_ext(3);
        let k = t.base().clone();
        let x = LeftModule::free(k, 2);
        let tx = functor_t(&x, &t);
        assert!(tx.alpha().validate().is_ok());
        let (c, _) = functor_c(&tx);
        assert_eq!(c, x);
        let hy = functor_h(&x, &t);
        assert!(hy.beta().validate().is_ok());
        let (kk, _) = functor_k(&hy);
        assert_eq!(kk, x);
        assert_eq!(functor_u_pair(&functor_z_pair(&x, &t)), x);
        assert_eq!(functor_u_copair(&functor_z_copair(&x, &t)), x);
        let zero = LeftModule::zero(t.base().clone());
        assert_eq!(functor_t(&zero, &t).dim(), 0);
    }

    #[test]
    fn copair_round_trip_and_h_of_field() {
        let t = field_ext(2);
        let e = LeftModule::regular(t.base().clone());
        let he = functor_h(&e, &t);
        let n = copair_to_module(&he, &t);
        assert!(n.validate().is_ok());
        let reg = LeftModule::regular(t.total().clone());
        assert!(crate::algebra::find_isomorphism(&n, &reg, 0).unwrap().is_some());
        let back = module_to_copair(&n, &t).unwrap();
        assert_eq!(back.beta().matrix(), he.beta().matrix());
        assert_eq!(copair_to_module(&back, &t), n);
    }

    #[test]
    fn classification_on_small_cases() {
        let t = field_ext(2);
        let (base, _) = t.structures(0);
        let k = LeftModule::regular(t.base().clone());
        let tk = functor_t(&k, &t);
        let w = classify_projective(&tk, &t, &base).unwrap();
        assert_eq!(w.p.dim(), 1);
        assert!(classify_projective(&functor_z_pair(&k, &t), &t, &base).is_none());
        let hk = functor_h(&k, &t);
        assert!(classify_injective(&hk, &t, &base).is_some());
        assert!(classify_injective(&functor_z_copair(&k, &t), &t, &base).is_none());
    }

    #[test]
    fn sequences_factorizations_and_isos_on_regular_pair() {
        let t = field_ext(2);
        let k = LeftModule::regular(t.base().clone());
        let tk = functor_t(&k, &t);
        let ses = ses_of_pair(&tk, &t);
        assert!(ses.is_exact());
        assert_eq!((ses.mono.source().dim(), ses.epi.target().dim()), (1, 1));
        let (delta, m_rho) = induced_delta(&tk, &t);
        assert_eq!(delta.matrix().mul(m_rho.matrix()), *tk.alpha().matrix());
        assert!(!delta.is_zero());
        let w = RightModule::regular(t.base().clone());
        assert!(zero_tensor_iso(&w, &tk, &t).holds());
        let hk = functor_h(&k, &t);
        assert!(ses_of_copair(&hk, &t).is_exact());
        let (gamma, iota_star) = induced_gamma(&hk, &t);
        assert_eq!(iota_star.matrix().mul(gamma.matrix()), *hk.beta().matrix());
        assert!(zero_hom_iso(&k, &hk, &t).holds());
        let z = functor_z_copair(&k, &t);
        let (gamma, _) = induced_gamma(&z, &t);
        assert!(gamma.is_zero());
    }
}
