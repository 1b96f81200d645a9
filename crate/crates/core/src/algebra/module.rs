use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{same_algebra, Algebra};
use crate::error::{Error, Result};
use crate::linalg::{EchelonBasis, FieldSpec, FpMatrix, Rref};

/// Budget for exhaustive sweeps over coefficient vectors (`p^k <= budget`).
pub const EXHAUSTIVE_BUDGET: u64 = 4096;

/// Left module: `action[i]` is the matrix of `x -> b_i x` on column vectors.
#[derive(Clone, PartialEq, Eq)]
pub struct LeftModule {
    algebra: Arc<Algebra>,
    dim: usize,
    action: Vec<FpMatrix>,
}

/// Right module: `action[i]` is the matrix of `x -> x b_i` on column vectors,
/// so that `action(b_i b_j) = action[j] * action[i]`.
#[derive(Clone, PartialEq, Eq)]
pub struct RightModule {
    algebra: Arc<Algebra>,
    dim: usize,
    action: Vec<FpMatrix>,
}

impl fmt::Debug for LeftModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LeftModule(dim {}) over {:?}", self.dim, self.algebra)
    }
}

impl fmt::Debug for RightModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RightModule(dim {}) over {:?}", self.dim, self.algebra)
    }
}

fn check_action_shapes(algebra: &Algebra, dim: usize, action: &[FpMatrix]) -> Result<()> {
    if action.len() != algebra.dim() {
        return Err(Error::InvalidModule(format!(
            "{} action matrices for an algebra of dimension {}",
            action.len(),
            algebra.dim()
        )));
    }
    for (i, a) in action.iter().enumerate() {
        if a.rows() != dim || a.cols() != dim || a.field() != algebra.field() {
            return Err(Error::InvalidModule(format!(
                "action of b{i} is {}x{} over GF({}), expected {dim}x{dim} over GF({})",
                a.rows(),
                a.cols(),
                a.field().p(),
                algebra.field().p()
            )));
        }
    }
    Ok(())
}

impl LeftModule {
    pub fn new(algebra: Arc<Algebra>, dim: usize, action: Vec<FpMatrix>) -> Result<Self> {
        check_action_shapes(&algebra, dim, &action)?;
        let m = LeftModule { algebra, dim, action };
        m.validate()?;
        Ok(m)
    }

    pub(crate) fn new_unchecked(algebra: Arc<Algebra>, dim: usize, action: Vec<FpMatrix>) -> Self {
        debug_assert!(check_action_shapes(&algebra, dim, &action).is_ok());
        LeftModule { algebra, dim, action }
    }

    pub fn zero(algebra: Arc<Algebra>) -> Self {
        let f = algebra.field();
        let action = vec![FpMatrix::zeros(f, 0, 0); algebra.dim()];
        LeftModule { algebra, dim: 0, action }
    }

    /// The left regular module `_A A`.
    pub fn regular(algebra: Arc<Algebra>) -> Self {
        let action = (0..algebra.dim()).map(|i| algebra.left_mult(i).clone()).collect();
        let dim = algebra.dim();
        LeftModule { algebra, dim, action }
    }

    /// Free module `A^n`.
    pub fn free(algebra: Arc<Algebra>, n: usize) -> Self {
        let reg = Self::regular(algebra.clone());
        Self::direct_sum_all(&algebra, &vec![reg; n])
    }

    pub fn validate(&self) -> Result<()> {
        check_action_shapes(&self.algebra, self.dim, &self.action)?;
        let f = self.field();
        let unit = self.act_by(self.algebra.unit());
        if unit != FpMatrix::identity(f, self.dim) {
            return Err(Error::InvalidModule("the unit does not act as the identity".into()));
        }
        let n = self.algebra.dim();
        for i in 0..n {
            for j in 0..n {
                let lhs = self.action[i].mul(&self.action[j]);
                let rhs = self.act_by(&self.algebra.product(i, j));
                if lhs != rhs {
                    return Err(Error::InvalidModule(format!(
                        "module law fails for b{i}*b{j}"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }
    pub fn field(&self) -> FieldSpec {
        self.algebra.field()
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn is_zero(&self) -> bool {
        self.dim == 0
    }
    pub fn action(&self) -> &[FpMatrix] {
        &self.action
    }
    pub fn act(&self, i: usize) -> &FpMatrix {
        &self.action[i]
    }
    pub fn act_by(&self, x: &[u32]) -> FpMatrix {
        FpMatrix::combination(self.field(), (self.dim, self.dim), x, &self.action)
    }
    pub fn generator_actions(&self) -> Vec<FpMatrix> {
        self.algebra.generators().iter().map(|&g| self.action[g].clone()).collect()
    }

    pub fn identity(&self) -> ModuleHom {
        ModuleHom::new_unchecked(self.clone(), self.clone(), FpMatrix::identity(self.field(), self.dim))
    }

    pub fn direct_sum(&self, other: &LeftModule) -> LeftModule {
        assert!(same_algebra(&self.algebra, &other.algebra), "direct sum over different algebras");
        let action = self
            .action
            .iter()
            .zip(&other.action)
            .map(|(a, b)| a.block_diag(b))
            .collect();
        LeftModule::new_unchecked(self.algebra.clone(), self.dim + other.dim, action)
    }

    pub fn direct_sum_all(algebra: &Arc<Algebra>, parts: &[LeftModule]) -> LeftModule {
        parts
            .iter()
            .fold(LeftModule::zero(algebra.clone()), |acc, m| acc.direct_sum(m))
    }

    /// Conjugate the action by an invertible change of basis `p`:
    /// the new module has action `p * A * p^{-1}`.
    pub fn transport(&self, p: &FpMatrix) -> Result<(LeftModule, ModuleHom)> {
        let inv = p
            .inverse()
            .ok_or_else(|| Error::Shape("change of basis is not invertible".into()))?;
        let action = self.action.iter().map(|a| p.mul(a).mul(&inv)).collect();
        let m = LeftModule::new_unchecked(self.algebra.clone(), self.dim, action);
        let iso = ModuleHom::new_unchecked(self.clone(), m.clone(), p.clone());
        Ok((m, iso))
    }

    /// Same module regarded over an isomorphic algebra: `phi` maps the basis
    /// of `self.algebra()` to coordinates in `target`, and the new action of
    /// `target` basis element `j` is the old action of `phi^{-1}(b_j)`.
    pub fn pull_back(&self, target: Arc<Algebra>, phi: &FpMatrix) -> Result<LeftModule> {
        let inv = phi
            .inverse()
            .ok_or_else(|| Error::Shape("algebra map is not invertible".into()))?;
        let action = (0..target.dim()).map(|j| self.act_by(&inv.col(j))).collect();
        LeftModule::new(target, self.dim, action)
    }
}

impl RightModule {
    pub fn new(algebra: Arc<Algebra>, dim: usize, action: Vec<FpMatrix>) -> Result<Self> {
        check_action_shapes(&algebra, dim, &action)?;
        let m = RightModule { algebra, dim, action };
        m.validate()?;
        Ok(m)
    }

    pub(crate) fn new_unchecked(algebra: Arc<Algebra>, dim: usize, action: Vec<FpMatrix>) -> Self {
        debug_assert!(check_action_shapes(&algebra, dim, &action).is_ok());
        RightModule { algebra, dim, action }
    }

    pub fn zero(algebra: Arc<Algebra>) -> Self {
        let f = algebra.field();
        let action = vec![FpMatrix::zeros(f, 0, 0); algebra.dim()];
        RightModule { algebra, dim: 0, action }
    }

    /// The right regular module `A_A`.
    pub fn regular(algebra: Arc<Algebra>) -> Self {
        let action = (0..algebra.dim()).map(|i| algebra.right_mult(i).clone()).collect();
        let dim = algebra.dim();
        RightModule { algebra, dim, action }
    }

    pub fn validate(&self) -> Result<()> {
        check_action_shapes(&self.algebra, self.dim, &self.action)?;
        let unit = self.act_by(self.algebra.unit());
        if unit != FpMatrix::identity(self.field(), self.dim) {
            return Err(Error::InvalidModule("the unit does not act as the identity".into()));
        }
        let n = self.algebra.dim();
        for i in 0..n {
            for j in 0..n {
                let lhs = self.action[j].mul(&self.action[i]);
                let rhs = self.act_by(&self.algebra.product(i, j));
                if lhs != rhs {
                    return Err(Error::InvalidModule(format!(
                        "right module law fails for b{i}*b{j}"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }
    pub fn field(&self) -> FieldSpec {
        self.algebra.field()
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn action(&self) -> &[FpMatrix] {
        &self.action
    }
    pub fn act(&self, i: usize) -> &FpMatrix {
        &self.action[i]
    }
    pub fn act_by(&self, x: &[u32]) -> FpMatrix {
        FpMatrix::combination(self.field(), (self.dim, self.dim), x, &self.action)
    }

    pub fn direct_sum(&self, other: &RightModule) -> RightModule {
        assert!(same_algebra(&self.algebra, &other.algebra));
        let action = self
            .action
            .iter()
            .zip(&other.action)
            .map(|(a, b)| a.block_diag(b))
            .collect();
        RightModule::new_unchecked(self.algebra.clone(), self.dim + other.dim, action)
    }

    /// The same data read as a left module over the opposite algebra.
    pub fn to_left_over_opposite(&self) -> LeftModule {
        let op = Arc::new(self.algebra.opposite());
        LeftModule::new_unchecked(op, self.dim, self.action.clone())
    }

    /// Inverse of [`RightModule::to_left_over_opposite`]; `algebra` is the
    /// algebra whose opposite `m` lives over.
    pub fn from_left_over_opposite(m: &LeftModule, algebra: Arc<Algebra>) -> Result<RightModule> {
        if algebra.opposite() != **m.algebra() {
            return Err(Error::AlgebraMismatch("module is not over the opposite algebra".into()));
        }
        Ok(RightModule::new_unchecked(algebra, m.dim(), m.action().to_vec()))
    }
}

/// Cokernel of `f: source -> target` between right modules.
pub fn right_cokernel(source: &RightModule, target: &RightModule, f: &FpMatrix) -> RightModule {
    let op = Arc::new(target.algebra.opposite());
    let s = LeftModule::new_unchecked(op.clone(), source.dim, source.action.clone());
    let t = LeftModule::new_unchecked(op, target.dim, target.action.clone());
    let (c, _) = cokernel_module(&ModuleHom::new_unchecked(s, t, f.clone()));
    RightModule::new_unchecked(target.algebra.clone(), c.dim(), c.action().to_vec())
}

/// Kernel of `f: source -> target` between right modules.
pub fn right_kernel(source: &RightModule, target: &RightModule, f: &FpMatrix) -> RightModule {
    let op = Arc::new(target.algebra.opposite());
    let s = LeftModule::new_unchecked(op.clone(), source.dim, source.action.clone());
    let t = LeftModule::new_unchecked(op, target.dim, target.action.clone());
    let (k, _) = kernel_module(&ModuleHom::new_unchecked(s, t, f.clone()));
    RightModule::new_unchecked(source.algebra.clone(), k.dim(), k.action().to_vec())
}

/// Linear dual `Hom_k(X, k)`: a right module with transposed action.
pub fn dual_module(x: &LeftModule) -> RightModule {
    let action = x.action.iter().map(FpMatrix::transpose).collect();
    RightModule::new_unchecked(x.algebra.clone(), x.dim, action)
}

/// Linear dual of a right module: a left module with transposed action.
pub fn dual_right_module(w: &RightModule) -> LeftModule {
    let action = w.action.iter().map(FpMatrix::transpose).collect();
    LeftModule::new_unchecked(w.algebra.clone(), w.dim, action)
}

/// A module homomorphism; `matrix` is `target.dim x source.dim`.
#[derive(Clone, PartialEq, Eq)]
pub struct ModuleHom {
    source: LeftModule,
    target: LeftModule,
    matrix: FpMatrix,
}

impl fmt::Debug for ModuleHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ModuleHom {} -> {}: {:?}", self.source.dim, self.target.dim, self.matrix)
    }
}

impl ModuleHom {
    pub fn new(source: LeftModule, target: LeftModule, matrix: FpMatrix) -> Result<Self> {
        if !same_algebra(&source.algebra, &target.algebra) {
            return Err(Error::AlgebraMismatch("source and target of a hom".into()));
        }
        if matrix.rows() != target.dim || matrix.cols() != source.dim {
            return Err(Error::InvalidHom(format!(
                "matrix is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                target.dim,
                source.dim
            )));
        }
        for i in 0..source.algebra.dim() {
            if matrix.mul(&source.action[i]) != target.action[i].mul(&matrix) {
                return Err(Error::InvalidHom(format!("does not commute with b{i}")));
            }
        }
        Ok(ModuleHom { source, target, matrix })
    }

    pub(crate) fn new_unchecked(source: LeftModule, target: LeftModule, matrix: FpMatrix) -> Self {
        debug_assert_eq!((matrix.rows(), matrix.cols()), (target.dim, source.dim));
        ModuleHom { source, target, matrix }
    }

    pub fn zero(source: LeftModule, target: LeftModule) -> Self {
        let m = FpMatrix::zeros(source.field(), target.dim, source.dim);
        ModuleHom::new_unchecked(source, target, m)
    }

    pub fn source(&self) -> &LeftModule {
        &self.source
    }
    pub fn target(&self) -> &LeftModule {
        &self.target
    }
    pub fn matrix(&self) -> &FpMatrix {
        &self.matrix
    }

    pub fn validate(&self) -> Result<()> {
        ModuleHom::new(self.source.clone(), self.target.clone(), self.matrix.clone()).map(|_| ())
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &ModuleHom) -> ModuleHom {
        assert_eq!(first.target.dim, self.source.dim, "composition dimension mismatch");
        ModuleHom::new_unchecked(first.source.clone(), self.target.clone(), self.matrix.mul(&first.matrix))
    }

    pub fn add(&self, other: &ModuleHom) -> ModuleHom {
        ModuleHom::new_unchecked(self.source.clone(), self.target.clone(), self.matrix.add(&other.matrix))
    }

    pub fn neg(&self) -> ModuleHom {
        ModuleHom::new_unchecked(self.source.clone(), self.target.clone(), self.matrix.neg())
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }
    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }
    pub fn is_injective(&self) -> bool {
        self.rank() == self.source.dim
    }
    pub fn is_surjective(&self) -> bool {
        self.rank() == self.target.dim
    }
    pub fn is_isomorphism(&self) -> bool {
        self.source.dim == self.target.dim && self.is_injective()
    }

    /// Direct sum of two maps, block diagonal.
    pub fn direct_sum(&self, other: &ModuleHom) -> ModuleHom {
        ModuleHom::new_unchecked(
            self.source.direct_sum(&other.source),
            self.target.direct_sum(&other.target),
            self.matrix.block_diag(&other.matrix),
        )
    }
}

/// Basis of a space of intertwiners, stored as vectorized matrices in RREF.
#[derive(Clone, Debug)]
pub struct HomSpace {
    source: LeftModule,
    target: LeftModule,
    basis: Vec<FpMatrix>,
    rref: Rref,
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
    pub fn source(&self) -> &LeftModule {
        &self.source
    }
    pub fn target(&self) -> &LeftModule {
        &self.target
    }
    pub fn basis(&self) -> &[FpMatrix] {
        &self.basis
    }
    pub fn hom(&self, i: usize) -> ModuleHom {
        ModuleHom::new_unchecked(self.source.clone(), self.target.clone(), self.basis[i].clone())
    }
    pub fn homs(&self) -> Vec<ModuleHom> {
        (0..self.dim()).map(|i| self.hom(i)).collect()
    }
    pub fn element(&self, coeffs: &[u32]) -> FpMatrix {
        FpMatrix::combination(
            self.source.field(),
            (self.target.dim, self.source.dim),
            coeffs,
            &self.basis,
        )
    }
    /// Coordinates of a matrix in this basis, `None` if it is not a hom.
    pub fn coords(&self, m: &FpMatrix) -> Option<Vec<u32>> {
        FpMatrix::coordinates_in(&self.rref, m.data())
    }

    /// Some `phi` in this space with `post * phi * pre = rhs` (either factor
    /// may be omitted), or `None` if no such hom exists.
    pub fn solve(&self, post: Option<&FpMatrix>, pre: Option<&FpMatrix>, rhs: &FpMatrix) -> Option<FpMatrix> {
        let f = self.source.field();
        let apply = |b: &FpMatrix| {
            let x = match post {
                Some(p) => p.mul(b),
                None => b.clone(),
            };
            match pre {
                Some(q) => x.mul(q),
                None => x,
            }
        };
        let n = rhs.rows() * rhs.cols();
        let mut sys = FpMatrix::zeros(f, n, self.dim());
        for (j, b) in self.basis.iter().enumerate() {
            let img = apply(b);
            if img.rows() != rhs.rows() || img.cols() != rhs.cols() {
                return None;
            }
            for (i, &x) in img.data().iter().enumerate() {
                sys.set(i, j, x);
            }
        }
        let target = FpMatrix::new(f, n, 1, rhs.data().to_vec()).expect("shape");
        let c = crate::linalg::solve(&sys, &target)?;
        Some(self.element(&c.col(0)))
    }
}

/// Solves `F * a_k = b_k * F` for all `(a_k, b_k)` with `F` of shape
/// `t x s`, returning an RREF basis of vectorized solutions.
pub(crate) fn intertwiner_basis(field: FieldSpec, s: usize, t: usize, pairs: &[(&FpMatrix, &FpMatrix)]) -> FpMatrix {
    let n = s * t;
    let mut basis = FpMatrix::identity(field, n);
    let it = FpMatrix::identity(field, t);
    let is = FpMatrix::identity(field, s);
    for (a, b) in pairs {
        if basis.rows() == 0 {
            break;
        }
        // vec(F a) = (I_t ⊗ a^T) vec F ; vec(b F) = (b ⊗ I_s) vec F
        let eq = it.kron(&a.transpose()).sub(&b.kron(&is));
        let restricted = eq.mul(&basis.transpose());
        let k = restricted.kernel_basis();
        basis = k.mul(&basis).row_space();
    }
    basis
}

pub(crate) fn hom_space_from_pairs(source: &LeftModule, target: &LeftModule) -> HomSpace {
    let gens = source.algebra.generators();
    let pairs: Vec<(&FpMatrix, &FpMatrix)> =
        gens.iter().map(|&g| (&source.action[g], &target.action[g])).collect();
    let vb = intertwiner_basis(source.field(), source.dim, target.dim, &pairs);
    let rref = vb.rref();
    let basis = (0..vb.rows())
        .map(|r| FpMatrix::new(source.field(), target.dim, source.dim, vb.row(r).to_vec()).unwrap())
        .collect();
    HomSpace {
        source: source.clone(),
        target: target.clone(),
        basis,
        rref,
    }
}

/// Basis of `Hom_A(m, n)`.
pub fn hom_space(m: &LeftModule, n: &LeftModule) -> Result<HomSpace> {
    if !same_algebra(&m.algebra, &n.algebra) {
        return Err(Error::AlgebraMismatch("hom_space between modules over different algebras".into()));
    }
    Ok(hom_space_from_pairs(m, n))
}

/// Smallest subspace containing the rows of `vectors` and stable under all
/// `ops`. Returned as RREF rows.
pub fn spin(vectors: &FpMatrix, ops: &[FpMatrix]) -> FpMatrix {
    let field = vectors.field();
    let mut eb = EchelonBasis::new(field, vectors.cols());
    let mut queue: Vec<Vec<u32>> = Vec::new();
    for r in 0..vectors.rows() {
        if eb.insert(vectors.row(r)) {
            queue.push(vectors.row(r).to_vec());
        }
    }
    while let Some(v) = queue.pop() {
        for op in ops {
            let w = op.mul_vec(&v);
            if eb.insert(&w) {
                queue.push(w);
            }
        }
        if eb.len() == vectors.cols() {
            break;
        }
    }
    eb.to_matrix()
}

/// Submodule spanned by the rows of `basis` (which must be invariant).
pub fn submodule(m: &LeftModule, basis: &FpMatrix) -> Result<(LeftModule, ModuleHom)> {
    let basis = basis.row_space();
    let r = basis.rref();
    let incl = basis.transpose();
    let mut action = Vec::with_capacity(m.action.len());
    for a in &m.action {
        let img = a.mul(&incl);
        let coords = img.select_rows(&r.pivot_cols);
        if incl.mul(&coords) != img {
            return Err(Error::InvalidModule("subspace is not a submodule".into()));
        }
        action.push(coords);
    }
    let sub = LeftModule::new_unchecked(m.algebra.clone(), basis.rows(), action);
    let inc = ModuleHom::new_unchecked(sub.clone(), m.clone(), incl);
    Ok((sub, inc))
}

/// Quotient of `m` by the submodule spanned by the rows of `sub_basis`.
pub fn quotient_module(m: &LeftModule, sub_basis: &FpMatrix) -> Result<(LeftModule, ModuleHom)> {
    let f = m.field();
    let q = if sub_basis.rows() == 0 {
        FpMatrix::identity(f, m.dim)
    } else {
        sub_basis.kernel_basis()
    };
    let section = section_of_rref(&q);
    let mut action = Vec::with_capacity(m.action.len());
    for a in &m.action {
        let qa = q.mul(a);
        let induced = qa.mul(&section);
        if induced.mul(&q) != qa {
            return Err(Error::InvalidModule("quotient by a non-submodule".into()));
        }
        action.push(induced);
    }
    let quo = LeftModule::new_unchecked(m.algebra.clone(), q.rows(), action);
    let proj = ModuleHom::new_unchecked(m.clone(), quo.clone(), q);
    Ok((quo, proj))
}

/// For a full-row-rank RREF matrix `q`, the matrix `s` with `q s = I`
/// supported on the pivot columns.
pub(crate) fn section_of_rref(q: &FpMatrix) -> FpMatrix {
    let r = q.rref();
    debug_assert_eq!(r.reduced, *q, "section_of_rref expects an RREF matrix");
    let mut s = FpMatrix::zeros(q.field(), q.cols(), q.rows());
    for (j, &pc) in r.pivot_cols.iter().enumerate() {
        s.set(pc, j, 1);
    }
    s
}

pub fn kernel_module(f: &ModuleHom) -> (LeftModule, ModuleHom) {
    submodule(&f.source, &f.matrix.kernel_basis()).expect("kernels are submodules")
}

pub fn cokernel_module(f: &ModuleHom) -> (LeftModule, ModuleHom) {
    quotient_module(&f.target, &f.matrix.column_space()).expect("images are submodules")
}

/// Image as a submodule of the target: `(im, inclusion, corestriction)`.
pub fn image_module(f: &ModuleHom) -> (LeftModule, ModuleHom, ModuleHom) {
    let (im, incl) = submodule(&f.target, &f.matrix.column_space()).expect("images are submodules");
    let r = f.matrix.column_space().rref();
    let core = f.matrix.select_rows(&r.pivot_cols);
    let corestriction = ModuleHom::new_unchecked(f.source.clone(), im.clone(), core);
    (im, incl, corestriction)
}

/// `im f = ker g`, decided by `g f = 0` and `rank f + rank g = dim B`.
pub fn is_exact_at(f: &ModuleHom, g: &ModuleHom) -> Result<bool> {
    if f.target.dim != g.source.dim {
        return Err(Error::Shape(format!(
            "cannot compose: f lands in dim {}, g starts in dim {}",
            f.target.dim, g.source.dim
        )));
    }
    Ok(exact_matrices(&f.matrix, &g.matrix))
}

/// Exactness of `. --f--> . --g--> .` on plain matrices.
pub(crate) fn exact_matrices(f: &FpMatrix, g: &FpMatrix) -> bool {
    g.mul(f).is_zero() && f.rank() + g.rank() == f.rows()
}

/// Searches `Hom(m, n)` for an invertible element: exhaustive when the space
/// has at most [`EXHAUSTIVE_BUDGET`] elements, seeded random sampling beyond.
pub fn find_isomorphism(m: &LeftModule, n: &LeftModule, seed: u64) -> Result<Option<ModuleHom>> {
    if m.dim != n.dim {
        return Ok(None);
    }
    let h = hom_space(m, n)?;
    Ok(find_invertible(&h, seed).map(|mat| ModuleHom::new_unchecked(m.clone(), n.clone(), mat)))
}

pub(crate) fn find_invertible(h: &HomSpace, seed: u64) -> Option<FpMatrix> {
    let f = h.source.field();
    if h.source.dim != h.target.dim {
        return None;
    }
    if h.source.dim == 0 {
        return Some(FpMatrix::zeros(f, 0, 0));
    }
    let k = h.dim();
    if k == 0 {
        return None;
    }
    for b in &h.basis {
        if b.is_invertible() {
            return Some(b.clone());
        }
    }
    let p = f.p() as u64;
    let total = (p as f64).powi(k as i32);
    if total <= EXHAUSTIVE_BUDGET as f64 {
        let mut coeffs = vec![0u32; k];
        loop {
            let mut i = 0;
            loop {
                if i == k {
                    return None;
                }
                coeffs[i] += 1;
                if coeffs[i] as u64 == p {
                    coeffs[i] = 0;
                    i += 1;
                } else {
                    break;
                }
            }
            let cand = h.element(&coeffs);
            if cand.is_invertible() {
                return Some(cand);
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..4 * EXHAUSTIVE_BUDGET {
        let coeffs: Vec<u32> = (0..k).map(|_| rng.gen_range(0..f.p())).collect();
        let cand = h.element(&coeffs);
        if cand.is_invertible() {
            return Some(cand);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::monomial_quiver_algebra;

    fn gf(p: u32) -> FieldSpec {
        FieldSpec::new(p).unwrap()
    }

    fn dual_numbers(p: u32) -> Arc<Algebra> {
        Arc::new(monomial_quiver_algebra(gf(p), 1, &[(0, 0)], &[vec![0, 0]]).unwrap())
    }

    fn a2() -> Arc<Algebra> {
        Arc::new(monomial_quiver_algebra(gf(2), 2, &[(0, 1)], &[]).unwrap())
    }

    fn simple_at(alg: &Arc<Algebra>, v: usize) -> LeftModule {
        alg.quiver().unwrap().simple(alg, v)
    }

    #[test]
    fn hom_of_field_simple_is_scalars() {
        let k = Arc::new(Algebra::ground_field(gf(5)));
        let s = LeftModule::regular(k);
        assert_eq!(hom_space(&s, &s).unwrap().dim(), 1);
    }

    #[test]
    fn hom_of_regular_d_is_two_dimensional() {
        let d = dual_numbers(2);
        let r = LeftModule::regular(d);
        let h = hom_space(&r, &r).unwrap();
        assert_eq!(h.dim(), 2);
        for hom in h.homs() {
            assert!(hom.validate().is_ok());
        }
    }

    #[test]
    fn hom_between_distinct_simples_of_a2_vanishes() {
        let a = a2();
        let s1 = simple_at(&a, 0);
        let s2 = simple_at(&a, 1);
        assert_eq!(hom_space(&s1, &s2).unwrap().dim(), 0);
        assert_eq!(hom_space(&s2, &s1).unwrap().dim(), 0);
        // brute force over all 1x1 matrices at p = 2
        for v in 0..2u32 {
            let m = FpMatrix::new(gf(2), 1, 1, vec![v]).unwrap();
            assert_eq!(ModuleHom::new(s1.clone(), s2.clone(), m).is_ok(), v == 0);
        }
    }

    #[test]
    fn kernel_image_cokernel_of_multiplication_by_y() {
        let d = dual_numbers(2);
        let r = LeftModule::regular(d.clone());
        // right multiplication by y is a left-module endomorphism
        let y = d.right_mult(1).clone();
        let f = ModuleHom::new(r.clone(), r.clone(), y).unwrap();
        let (k, ki) = kernel_module(&f);
        let (im, _, _) = image_module(&f);
        let (c, cp) = cokernel_module(&f);
        assert_eq!((k.dim(), im.dim(), c.dim()), (1, 1, 1));
        assert!(k.validate().is_ok() && im.validate().is_ok() && c.validate().is_ok());
        assert!(ki.validate().is_ok() && cp.validate().is_ok());
        assert!(is_exact_at(&f, &f).unwrap());

        let id = r.identity();
        assert_eq!(kernel_module(&id).0.dim(), 0);
        assert_eq!(cokernel_module(&id).0.dim(), 0);
        let z = ModuleHom::zero(r.clone(), r.clone());
        assert_eq!(kernel_module(&z).0.dim(), 2);
        assert_eq!(cokernel_module(&z).0.dim(), 2);
    }

    #[test]
    fn exactness_examples() {
        let d = dual_numbers(3);
        let r = LeftModule::regular(d);
        let zero = LeftModule::zero(r.algebra().clone());
        let into = ModuleHom::zero(zero, r.clone());
        assert!(is_exact_at(&into, &r.identity()).unwrap());
        let z = ModuleHom::zero(r.clone(), r.clone());
        assert!(!is_exact_at(&z, &z).unwrap());
    }

    #[test]
    fn dual_of_d_regular_is_regular_right_module() {
        let d = dual_numbers(2);
        let r = LeftModule::regular(d.clone());
        let dual = dual_module(&r);
        assert!(dual.validate().is_ok());
        let as_left = dual.to_left_over_opposite();
        let reg_op = RightModule::regular(d).to_left_over_opposite();
        assert!(find_isomorphism(&as_left, &reg_op, 0).unwrap().is_some());
        assert_eq!(dual_right_module(&dual), r);
    }

    #[test]
    fn right_module_round_trip_through_opposite() {
        let a = a2();
        let w = RightModule::regular(a.clone());
        assert!(w.validate().is_ok());
        let l = w.to_left_over_opposite();
        assert!(l.validate().is_ok());
        assert_eq!(RightModule::from_left_over_opposite(&l, a).unwrap(), w);
    }

    #[test]
    fn invalid_module_is_rejected() {
        let d = dual_numbers(2);
        // y acting invertibly contradicts y^2 = 0
        let bad = vec![FpMatrix::identity(gf(2), 1), FpMatrix::identity(gf(2), 1)];
        assert!(LeftModule::new(d, 1, bad).is_err());
    }
}
