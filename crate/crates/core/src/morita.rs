//! Morita context rings `Λ = [[A, V], [U, B]]` with zero bimodule maps, their
//! identification with `(A × B) ⋉ (U ⊕ V)`, and modules over them as tuples.
//!
//! Basis conventions: `Λ` is `A, V, U, B` (matrix positions read row by
//! row); the trivial extension view is `A, B, U, V`.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::{
    exact_matrices, hom_from_bimodule, hom_space, kernel_module, right_cokernel, tensor_over, tensor_right_bimodule,
    Algebra, Bimodule, HomModule, LeftModule, ModuleHom, RightModule, RightTensor, Tensor,
};
use crate::algebra::cokernel_module;
use crate::error::{Error, Result};
use crate::gorenstein::{
    agreement, compatibility_report, cocompatibility_report, Agreement, CompatibilityReport, Decider,
    EquivalenceReport, ExtensionChecker, GorensteinVerdict,
};
use crate::linalg::{FieldSpec, FpMatrix};
use crate::structure::Structure;
use crate::trivext::{
    copair_to_module, module_to_copair, module_to_pair, module_to_right_pair, pair_to_module, plain_from_actions,
    right_pair_to_module, CopairModule, PairModule, RightPairModule, TrivialExtension,
};

/// `A`, `B`, a `B`-`A` bimodule `U` and an `A`-`B` bimodule `V`.
#[derive(Clone, Debug)]
pub struct MoritaContext {
    a: Arc<Algebra>,
    b: Arc<Algebra>,
    u: Bimodule,
    v: Bimodule,
}

impl MoritaContext {
    pub fn new(a: Arc<Algebra>, b: Arc<Algebra>, u: Bimodule, v: Bimodule) -> Result<Self> {
        if a.field() != b.field() {
            return Err(Error::FieldMismatch(a.field().p(), b.field().p()));
        }
        let legs = [
            (u.left_algebra(), &b, "left leg of U"),
            (u.right_algebra(), &a, "right leg of U"),
            (v.left_algebra(), &a, "left leg of V"),
            (v.right_algebra(), &b, "right leg of V"),
        ];
        for (leg, want, what) in legs {
            if **leg != **want {
                return Err(Error::AlgebraMismatch(format!("{what} is the wrong algebra")));
            }
        }
        Ok(MoritaContext { a, b, u, v })
    }

    pub fn a(&self) -> &Arc<Algebra> {
        &self.a
    }
    pub fn b(&self) -> &Arc<Algebra> {
        &self.b
    }
    pub fn u(&self) -> &Bimodule {
        &self.u
    }
    pub fn v(&self) -> &Bimodule {
        &self.v
    }
    fn field(&self) -> FieldSpec {
        self.a.field()
    }
}

/// `Λ` built directly, the trivial extension view, and the algebra
/// isomorphism between them.
#[derive(Clone, Debug)]
pub struct MoritaRing {
    ctx: MoritaContext,
    lambda: Arc<Algebra>,
    view: TrivialExtension,
    /// Column `i` is the image of the `i`-th basis element of `Λ`.
    iso: FpMatrix,
    /// `perm[i]` is the view index of the `i`-th basis element of `Λ`.
    perm: Vec<usize>,
}

pub fn morita_ring(ctx: &MoritaContext) -> Result<MoritaRing> {
    MoritaRing::new(ctx.clone())
}

impl MoritaRing {
    pub fn new(ctx: MoritaContext) -> Result<Self> {
        let f = ctx.field();
        let (a, b, u, v) = (&ctx.a, &ctx.b, &ctx.u, &ctx.v);
        let (na, nb, nu, nv) = (a.dim(), b.dim(), u.dim(), v.dim());
        let (oa, ov, ou, ob) = (0, na, na + nv, na + nv + nu);
        let n = na + nb + nu + nv;
        let mut lmul = vec![FpMatrix::zeros(f, n, n); n];
        let mut rmul = vec![FpMatrix::zeros(f, n, n); n];
        for i in 0..na {
            lmul[oa + i].set_block(oa, oa, a.left_mult(i));
            lmul[oa + i].set_block(ov, ov, v.left_act(i));
            rmul[oa + i].set_block(oa, oa, a.right_mult(i));
            rmul[oa + i].set_block(ou, ou, u.right_act(i));
        }
        for j in 0..nb {
            lmul[ob + j].set_block(ou, ou, u.left_act(j));
            lmul[ob + j].set_block(ob, ob, b.left_mult(j));
            rmul[ob + j].set_block(ov, ov, v.right_act(j));
            rmul[ob + j].set_block(ob, ob, b.right_mult(j));
        }
        for k in 0..nv {
            // v_k b_j and a_j v_k
            for j in 0..nb {
                lmul[ov + k].set_block(ov, ob + j, &column(f, &v.right_act(j).col(k)));
            }
            for j in 0..na {
                rmul[ov + k].set_block(ov, oa + j, &column(f, &v.left_act(j).col(k)));
            }
        }
        for k in 0..nu {
            // u_k a_j and b_j u_k
            for j in 0..na {
                lmul[ou + k].set_block(ou, oa + j, &column(f, &u.right_act(j).col(k)));
            }
            for j in 0..nb {
                rmul[ou + k].set_block(ou, ob + j, &column(f, &u.left_act(j).col(k)));
            }
        }
        let mut unit = vec![0; n];
        unit[oa..oa + na].copy_from_slice(a.unit());
        unit[ob..ob + nb].copy_from_slice(b.unit());
        let lambda = Algebra::assemble(f, lmul, rmul, unit, None);
        lambda.validate()?;

        let r = Algebra::product_algebra(a, b)?.algebra;
        let zero = |d: usize| FpMatrix::zeros(f, d, d);
        let la = (0..na)
            .map(|i| zero(nu).block_diag(v.left_act(i)))
            .chain((0..nb).map(|j| u.left_act(j).block_diag(&zero(nv))))
            .collect();
        let ra = (0..na)
            .map(|i| u.right_act(i).block_diag(&zero(nv)))
            .chain((0..nb).map(|j| zero(nu).block_diag(v.right_act(j))))
            .collect();
        let m = Bimodule::new(r.clone(), r.clone(), nu + nv, la, ra)?;
        let view = TrivialExtension::new(r, m)?;

        let perm: Vec<usize> = (0..na)
            .chain((0..nv).map(|k| na + nb + nu + k))
            .chain((0..nu).map(|k| na + nb + k))
            .chain((0..nb).map(|j| na + j))
            .collect();
        let mut iso = FpMatrix::zeros(f, n, n);
        for (i, &p) in perm.iter().enumerate() {
            iso.set(p, i, 1);
        }
        if !lambda.is_isomorphism_to(view.total(), &iso) {
            return Err(Error::Construction("Λ and (A × B) ⋉ (U ⊕ V) do not match".into()));
        }
        Ok(MoritaRing {
            ctx,
            lambda: Arc::new(lambda),
            view,
            iso,
            perm,
        })
    }

    pub fn context(&self) -> &MoritaContext {
        &self.ctx
    }
    pub fn lambda(&self) -> &Arc<Algebra> {
        &self.lambda
    }
    pub fn view(&self) -> &TrivialExtension {
        &self.view
    }
    pub fn iso(&self) -> &FpMatrix {
        &self.iso
    }

    /// A module over the view read as a `Λ`-module.
    pub fn to_lambda(&self, n: &LeftModule) -> LeftModule {
        let action = self.perm.iter().map(|&p| n.act(p).clone()).collect();
        LeftModule::new_unchecked(self.lambda.clone(), n.dim(), action)
    }

    pub fn to_lambda_right(&self, n: &RightModule) -> RightModule {
        let action = self.perm.iter().map(|&p| n.act(p).clone()).collect();
        RightModule::new_unchecked(self.lambda.clone(), n.dim(), action)
    }

    fn sizes(&self) -> (usize, usize, usize) {
        (self.ctx.a.dim(), self.ctx.b.dim(), self.ctx.u.dim())
    }

    /// Module over the view with `X ⊕ Y` underlying, `u_k` acting `X -> Y` by
    /// `cross_u[k]` and `v_k` acting `Y -> X` by `cross_v[k]`.
    fn assemble(&self, x: &LeftModule, y: &LeftModule, cross_u: &[FpMatrix], cross_v: &[FpMatrix]) -> Result<LeftModule> {
        let f = self.ctx.field();
        let (dx, dy) = (x.dim(), y.dim());
        let (zx, zy) = (FpMatrix::zeros(f, dx, dx), FpMatrix::zeros(f, dy, dy));
        let mut action: Vec<FpMatrix> = x.action().iter().map(|a| a.block_diag(&zy)).collect();
        action.extend(y.action().iter().map(|b| zx.block_diag(b)));
        for fk in cross_u {
            let mut m = FpMatrix::zeros(f, dx + dy, dx + dy);
            m.set_block(dx, 0, fk);
            action.push(m);
        }
        for gk in cross_v {
            let mut m = FpMatrix::zeros(f, dx + dy, dx + dy);
            m.set_block(0, dx, gk);
            action.push(m);
        }
        LeftModule::new(self.view.total().clone(), dx + dy, action)
    }

    /// Splits a module over the view into `(X, Y, u-blocks, v-blocks)` along
    /// the central idempotents of `A × B`.
    fn split(&self, n: &LeftModule) -> Result<(LeftModule, LeftModule, Vec<FpMatrix>, Vec<FpMatrix>)> {
        let f = self.ctx.field();
        let (na, nb, nu) = self.sizes();
        let mut ea = vec![0; n.algebra().dim()];
        ea[..na].copy_from_slice(self.ctx.a.unit());
        let mut eb = vec![0; n.algebra().dim()];
        eb[na..na + nb].copy_from_slice(self.ctx.b.unit());
        let xa = n.act_by(&ea).transpose().row_space();
        let yb = n.act_by(&eb).transpose().row_space();
        let (dx, dy) = (xa.rows(), yb.rows());
        let cols = FpMatrix::vstack(f, n.dim(), &[&xa, &yb]).transpose();
        let p = cols
            .inverse()
            .ok_or_else(|| Error::InvalidModule("idempotents do not split the module".into()))?;
        let (m, _) = n.transport(&p)?;
        let x = LeftModule::new(
            self.ctx.a.clone(),
            dx,
            (0..na).map(|i| m.act(i).block(0, dx, 0, dx)).collect(),
        )?;
        let y = LeftModule::new(
            self.ctx.b.clone(),
            dy,
            (0..nb).map(|j| m.act(na + j).block(dx, dy, dx, dy)).collect(),
        )?;
        let nv = n.algebra().dim() - na - nb - nu;
        let cross_u = (0..nu).map(|k| m.act(na + nb + k).block(dx, dy, 0, dx)).collect();
        let cross_v = (0..nv).map(|k| m.act(na + nb + nu + k).block(0, dx, dx, dy)).collect();
        Ok((x, y, cross_u, cross_v))
    }

    /// The module over the view given by a tuple.
    pub fn tuple_module(&self, t: &TupleModule) -> Result<LeftModule> {
        let f = self.ctx.field();
        let cross_u: Vec<FpMatrix> = (0..self.ctx.u.dim())
            .map(|k| tensor_block(f, &t.ux, t.f.matrix(), self.ctx.u.dim(), t.x.dim(), k))
            .collect();
        let cross_v: Vec<FpMatrix> = (0..self.ctx.v.dim())
            .map(|k| tensor_block(f, &t.vy, t.g.matrix(), self.ctx.v.dim(), t.y.dim(), k))
            .collect();
        self.assemble(&t.x, &t.y, &cross_u, &cross_v)
    }

    /// `Θ(X, Y, f, g) = ((X, Y), (g, f))`.
    pub fn theta(&self, t: &TupleModule) -> Result<PairModule> {
        module_to_pair(&self.tuple_module(t)?, &self.view)
    }

    pub fn theta_inverse(&self, p: &PairModule) -> Result<TupleModule> {
        self.tuple_from_module(&pair_to_module(p, &self.view))
    }

    pub fn tuple_from_module(&self, n: &LeftModule) -> Result<TupleModule> {
        let f = self.ctx.field();
        let (x, y, cu, cv) = self.split(n)?;
        let ux = tensor_over(&self.ctx.u, &x)?;
        let vy = tensor_over(&self.ctx.v, &y)?;
        let fm = plain_from_actions(f, &cu, y.dim(), x.dim()).mul(ux.section());
        let gm = plain_from_actions(f, &cv, x.dim(), y.dim()).mul(vy.section());
        TupleModule::new(&self.ctx, x, y, fm, gm)
    }

    pub fn cotuple_module(&self, t: &CotupleModule) -> Result<LeftModule> {
        let cross_u: Vec<FpMatrix> = (0..self.ctx.u.dim())
            .map(|k| hom_block(&t.hu, t.f.matrix(), k))
            .collect();
        let cross_v: Vec<FpMatrix> = (0..self.ctx.v.dim())
            .map(|k| hom_block(&t.hv, t.g.matrix(), k))
            .collect();
        self.assemble(&t.x, &t.y, &cross_u, &cross_v)
    }

    /// The copair view of a cotuple `[X, Y, f, g]`.
    pub fn theta_copair(&self, t: &CotupleModule) -> Result<CopairModule> {
        module_to_copair(&self.cotuple_module(t)?, &self.view)
    }

    pub fn theta_copair_inverse(&self, c: &CopairModule) -> Result<CotupleModule> {
        self.cotuple_from_module(&copair_to_module(c, &self.view))
    }

    pub fn cotuple_from_module(&self, n: &LeftModule) -> Result<CotupleModule> {
        let f = self.ctx.field();
        let (x, y, cu, cv) = self.split(n)?;
        let hu = hom_from_bimodule(&self.ctx.u, &y)?;
        let hv = hom_from_bimodule(&self.ctx.v, &x)?;
        let fm = coords_from_blocks(f, &hu, &cu, x.dim())?;
        let gm = coords_from_blocks(f, &hv, &cv, y.dim())?;
        CotupleModule::new(&self.ctx, x, y, fm, gm)
    }

    /// Right module over the view with `W ⊕ Q` underlying.
    pub fn right_tuple_module(&self, t: &RightTupleModule) -> Result<RightModule> {
        let f = self.ctx.field();
        let (dw, dq) = (t.w.dim(), t.q.dim());
        let (zw, zq) = (FpMatrix::zeros(f, dw, dw), FpMatrix::zeros(f, dq, dq));
        let mut action: Vec<FpMatrix> = t.w.action().iter().map(|a| a.block_diag(&zq)).collect();
        action.extend(t.q.action().iter().map(|b| zw.block_diag(b)));
        for k in 0..self.ctx.u.dim() {
            let mut m = FpMatrix::zeros(f, dw + dq, dw + dq);
            m.set_block(0, dw, &right_tensor_block(f, &t.qu, &t.f, self.ctx.u.dim(), dq, k));
            action.push(m);
        }
        for k in 0..self.ctx.v.dim() {
            let mut m = FpMatrix::zeros(f, dw + dq, dw + dq);
            m.set_block(dw, 0, &right_tensor_block(f, &t.wv, &t.g, self.ctx.v.dim(), dw, k));
            action.push(m);
        }
        RightModule::new(self.view.total().clone(), dw + dq, action)
    }

    /// `Υ(W, Q, f, g) = ((W, Q), (f, g))`.
    pub fn upsilon(&self, t: &RightTupleModule) -> Result<RightPairModule> {
        module_to_right_pair(&self.right_tuple_module(t)?, &self.view)
    }

    pub fn upsilon_inverse(&self, p: &RightPairModule) -> Result<RightTupleModule> {
        self.right_tuple_from_module(&right_pair_to_module(p, &self.view))
    }

    pub fn right_tuple_from_module(&self, n: &RightModule) -> Result<RightTupleModule> {
        let f = self.ctx.field();
        let (na, nb, nu) = self.sizes();
        let op_view = Arc::new(n.algebra().opposite());
        let left = LeftModule::new_unchecked(op_view, n.dim(), n.action().to_vec());
        let mut ea = vec![0; n.algebra().dim()];
        ea[..na].copy_from_slice(self.ctx.a.unit());
        let mut eb = vec![0; n.algebra().dim()];
        eb[na..na + nb].copy_from_slice(self.ctx.b.unit());
        let wa = left.act_by(&ea).transpose().row_space();
        let qb = left.act_by(&eb).transpose().row_space();
        let (dw, dq) = (wa.rows(), qb.rows());
        let cols = FpMatrix::vstack(f, n.dim(), &[&wa, &qb]).transpose();
        let p = cols
            .inverse()
            .ok_or_else(|| Error::InvalidModule("idempotents do not split the module".into()))?;
        let (m, _) = left.transport(&p)?;
        let w = RightModule::new(
            self.ctx.a.clone(),
            dw,
            (0..na).map(|i| m.act(i).block(0, dw, 0, dw)).collect(),
        )?;
        let q = RightModule::new(
            self.ctx.b.clone(),
            dq,
            (0..nb).map(|j| m.act(na + j).block(dw, dq, dw, dq)).collect(),
        )?;
        let nv = n.algebra().dim() - na - nb - nu;
        let cu: Vec<FpMatrix> = (0..nu).map(|k| m.act(na + nb + k).block(0, dw, dw, dq)).collect();
        let cv: Vec<FpMatrix> = (0..nv).map(|k| m.act(na + nb + nu + k).block(dw, dq, 0, dw)).collect();
        let qu = tensor_right_bimodule(&q, &self.ctx.u)?;
        let wv = tensor_right_bimodule(&w, &self.ctx.v)?;
        let fm = plain_from_actions(f, &cu, dw, dq).mul(qu.section());
        let gm = plain_from_actions(f, &cv, dq, dw).mul(wv.section());
        RightTupleModule::new(&self.ctx, w, q, fm, gm)
    }

    /// Dimension of the space of tuple morphisms `(α, β)` with
    /// `β f1 = f2 (U ⊗ α)` and `α g1 = g2 (V ⊗ β)`.
    pub fn tuple_hom_dim(&self, s: &TupleModule, t: &TupleModule) -> usize {
        let f = self.ctx.field();
        let hx = hom_space(&s.x, &t.x).expect("same algebra");
        let hy = hom_space(&s.y, &t.y).expect("same algebra");
        let (nx, ny) = (hx.dim(), hy.dim());
        let r1 = t.y.dim() * s.ux.dim();
        let r2 = t.x.dim() * s.vy.dim();
        let mut sys = FpMatrix::zeros(f, r1 + r2, nx + ny);
        let put = |sys: &mut FpMatrix, col: usize, top: &FpMatrix, bottom: &FpMatrix| {
            for (i, &v) in top.data().iter().chain(bottom.data()).enumerate() {
                sys.set(i, col, v);
            }
        };
        for (c, a) in hx.basis().iter().enumerate() {
            let u_a = s.ux.induced(&t.ux, a);
            let top = t.f.matrix().mul(&u_a).neg();
            let bottom = a.mul(s.g.matrix());
            put(&mut sys, c, &top, &bottom);
        }
        for (c, b) in hy.basis().iter().enumerate() {
            let v_b = s.vy.induced(&t.vy, b);
            let top = b.mul(s.f.matrix());
            let bottom = t.g.matrix().mul(&v_b).neg();
            put(&mut sys, nx + c, &top, &bottom);
        }
        nx + ny - sys.rank()
    }
}

fn column(f: FieldSpec, v: &[u32]) -> FpMatrix {
    FpMatrix::column(f, v)
}

/// `x -> h(m_k ⊗ x)` for `h` defined on `M ⊗ X`.
fn tensor_block(f: FieldSpec, t: &Tensor, h: &FpMatrix, m_dim: usize, x_dim: usize, k: usize) -> FpMatrix {
    let mut e = vec![0; m_dim];
    e[k] = 1;
    let mut out = FpMatrix::zeros(f, h.rows(), x_dim);
    for j in 0..x_dim {
        let mut x = vec![0; x_dim];
        x[j] = 1;
        let col = h.mul_vec(&t.pure(&e, &x));
        for (r, v) in col.into_iter().enumerate() {
            out.set(r, j, v);
        }
    }
    out
}

/// `q -> h(q ⊗ m_k)` for `h` defined on `Q ⊗ M`.
fn right_tensor_block(f: FieldSpec, t: &RightTensor, h: &FpMatrix, m_dim: usize, q_dim: usize, k: usize) -> FpMatrix {
    let mut out = FpMatrix::zeros(f, h.rows(), q_dim);
    let mut e = vec![0; m_dim];
    e[k] = 1;
    for j in 0..q_dim {
        let mut x = vec![0; q_dim];
        x[j] = 1;
        let col = h.mul_vec(&t.pure(&x, &e));
        for (r, v) in col.into_iter().enumerate() {
            out.set(r, j, v);
        }
    }
    out
}

/// `x -> h(x)(m_k)` for `h: X -> Hom(M, Y)`.
fn hom_block(hm: &HomModule, h: &FpMatrix, k: usize) -> FpMatrix {
    let f = h.field();
    let x_dim = h.cols();
    let y_dim = hm.to_map(&vec![0; hm.dim()]).rows();
    let mut out = FpMatrix::zeros(f, y_dim, x_dim);
    for j in 0..x_dim {
        let map = hm.to_map(&h.col(j));
        for r in 0..y_dim {
            out.set(r, j, map.get(r, k));
        }
    }
    out
}

/// Inverse of [`hom_block`]: `h: X -> Hom(M, Y)` from the blocks.
fn coords_from_blocks(f: FieldSpec, hm: &HomModule, blocks: &[FpMatrix], x_dim: usize) -> Result<FpMatrix> {
    let y_dim = hm.to_map(&vec![0; hm.dim()]).rows();
    let mut out = FpMatrix::zeros(f, hm.dim(), x_dim);
    for j in 0..x_dim {
        let mut map = FpMatrix::zeros(f, y_dim, blocks.len());
        for (k, b) in blocks.iter().enumerate() {
            for r in 0..y_dim {
                map.set(r, k, b.get(r, j));
            }
        }
        let c = hm
            .coords(&map)
            .ok_or_else(|| Error::InvalidModule("cross action is not bimodule-linear".into()))?;
        for (i, v) in c.into_iter().enumerate() {
            out.set(i, j, v);
        }
    }
    Ok(out)
}

/// `(X, Y, f, g)` with `f: U ⊗ X -> Y`, `g: V ⊗ Y -> X`.
#[derive(Clone, Debug)]
pub struct TupleModule {
    x: LeftModule,
    y: LeftModule,
    ux: Tensor,
    vy: Tensor,
    f: ModuleHom,
    g: ModuleHom,
}

impl TupleModule {
    pub fn new(ctx: &MoritaContext, x: LeftModule, y: LeftModule, f: FpMatrix, g: FpMatrix) -> Result<Self> {
        let ux = tensor_over(&ctx.u, &x)?;
        let vy = tensor_over(&ctx.v, &y)?;
        let f = ModuleHom::new(ux.module().clone(), y.clone(), f)?;
        let g = ModuleHom::new(vy.module().clone(), x.clone(), g)?;
        let t = TupleModule { x, y, ux, vy, f, g };
        let (vux, vf) = t.v_f(ctx);
        let (uvy, ug) = t.u_g(ctx);
        if !t.g.matrix().mul(&vf).is_zero() {
            return Err(Error::InvariantViolation("g (V ⊗ f) ≠ 0".into()));
        }
        if !t.f.matrix().mul(&ug).is_zero() {
            return Err(Error::InvariantViolation("f (U ⊗ g) ≠ 0".into()));
        }
        let _ = (vux, uvy);
        Ok(t)
    }

    /// `f = 0`, `g = 0`.
    pub fn zero_maps(ctx: &MoritaContext, x: LeftModule, y: LeftModule) -> Result<Self> {
        let f = x.field();
        let ux = tensor_over(&ctx.u, &x)?;
        let vy = tensor_over(&ctx.v, &y)?;
        let (fm, gm) = (FpMatrix::zeros(f, y.dim(), ux.dim()), FpMatrix::zeros(f, x.dim(), vy.dim()));
        TupleModule::new(ctx, x, y, fm, gm)
    }

    pub fn x(&self) -> &LeftModule {
        &self.x
    }
    pub fn y(&self) -> &LeftModule {
        &self.y
    }
    pub fn f(&self) -> &ModuleHom {
        &self.f
    }
    pub fn g(&self) -> &ModuleHom {
        &self.g
    }
    pub fn dim(&self) -> usize {
        self.x.dim() + self.y.dim()
    }

    /// `V ⊗ f: V ⊗ U ⊗ X -> V ⊗ Y`.
    fn v_f(&self, ctx: &MoritaContext) -> (Tensor, FpMatrix) {
        let vux = tensor_over(&ctx.v, self.ux.module()).expect("U ⊗ X is a B-module");
        let m = vux.induced(&self.vy, self.f.matrix());
        (vux, m)
    }

    /// `U ⊗ g: U ⊗ V ⊗ Y -> U ⊗ X`.
    fn u_g(&self, ctx: &MoritaContext) -> (Tensor, FpMatrix) {
        let uvy = tensor_over(&ctx.u, self.vy.module()).expect("V ⊗ Y is an A-module");
        let m = uvy.induced(&self.ux, self.g.matrix());
        (uvy, m)
    }

    /// Exactness of `V⊗U⊗X -> V⊗Y -> X` and of `U⊗V⊗Y -> U⊗X -> Y`.
    pub fn sequences_exact(&self, ctx: &MoritaContext) -> [bool; 2] {
        let (_, vf) = self.v_f(ctx);
        let (_, ug) = self.u_g(ctx);
        [
            exact_matrices(&vf, self.g.matrix()),
            exact_matrices(&ug, self.f.matrix()),
        ]
    }
}

/// `[X, Y, f, g]` with `f: X -> Hom_B(U, Y)`, `g: Y -> Hom_A(V, X)`.
#[derive(Clone, Debug)]
pub struct CotupleModule {
    x: LeftModule,
    y: LeftModule,
    hu: HomModule,
    hv: HomModule,
    f: ModuleHom,
    g: ModuleHom,
}

impl CotupleModule {
    pub fn new(ctx: &MoritaContext, x: LeftModule, y: LeftModule, f: FpMatrix, g: FpMatrix) -> Result<Self> {
        let hu = hom_from_bimodule(&ctx.u, &y)?;
        let hv = hom_from_bimodule(&ctx.v, &x)?;
        let f = ModuleHom::new(x.clone(), hu.module().clone(), f)?;
        let g = ModuleHom::new(y.clone(), hv.module().clone(), g)?;
        let t = CotupleModule { x, y, hu, hv, f, g };
        if !t.hom_u_g(ctx).mul(t.f.matrix()).is_zero() {
            return Err(Error::InvariantViolation("Hom(U, g) f ≠ 0".into()));
        }
        if !t.hom_v_f(ctx).mul(t.g.matrix()).is_zero() {
            return Err(Error::InvariantViolation("Hom(V, f) g ≠ 0".into()));
        }
        Ok(t)
    }

    pub fn x(&self) -> &LeftModule {
        &self.x
    }
    pub fn y(&self) -> &LeftModule {
        &self.y
    }
    pub fn f(&self) -> &ModuleHom {
        &self.f
    }
    pub fn g(&self) -> &ModuleHom {
        &self.g
    }
    pub fn dim(&self) -> usize {
        self.x.dim() + self.y.dim()
    }

    /// `Hom(U, g): Hom(U, Y) -> Hom(U, Hom(V, X))`.
    fn hom_u_g(&self, ctx: &MoritaContext) -> FpMatrix {
        let target = hom_from_bimodule(&ctx.u, self.hv.module()).expect("Hom(V, X) is a B-module");
        self.hu.induced(&target, self.g.matrix())
    }

    /// `Hom(V, f): Hom(V, X) -> Hom(V, Hom(U, Y))`.
    fn hom_v_f(&self, ctx: &MoritaContext) -> FpMatrix {
        let target = hom_from_bimodule(&ctx.v, self.hu.module()).expect("Hom(U, Y) is an A-module");
        self.hv.induced(&target, self.f.matrix())
    }

    /// Exactness of `X -> Hom(U, Y) -> Hom(U, Hom(V, X))` and of
    /// `Y -> Hom(V, X) -> Hom(V, Hom(U, Y))`.
    pub fn sequences_exact(&self, ctx: &MoritaContext) -> [bool; 2] {
        [
            exact_matrices(self.f.matrix(), &self.hom_u_g(ctx)),
            exact_matrices(self.g.matrix(), &self.hom_v_f(ctx)),
        ]
    }
}

/// `(W, Q, f, g)` with `f: Q ⊗ U -> W`, `g: W ⊗ V -> Q`.
#[derive(Clone, Debug)]
pub struct RightTupleModule {
    w: RightModule,
    q: RightModule,
    qu: RightTensor,
    wv: RightTensor,
    f: FpMatrix,
    g: FpMatrix,
}

impl RightTupleModule {
    pub fn new(ctx: &MoritaContext, w: RightModule, q: RightModule, f: FpMatrix, g: FpMatrix) -> Result<Self> {
        let qu = tensor_right_bimodule(&q, &ctx.u)?;
        let wv = tensor_right_bimodule(&w, &ctx.v)?;
        check_right_hom(qu.module(), &w, &f, "f")?;
        check_right_hom(wv.module(), &q, &g, "g")?;
        let t = RightTupleModule { w, q, qu, wv, f, g };
        if !t.g.mul(&t.f_v(ctx)).is_zero() {
            return Err(Error::InvariantViolation("g (f ⊗ V) ≠ 0".into()));
        }
        if !t.f.mul(&t.g_u(ctx)).is_zero() {
            return Err(Error::InvariantViolation("f (g ⊗ U) ≠ 0".into()));
        }
        Ok(t)
    }

    pub fn w(&self) -> &RightModule {
        &self.w
    }
    pub fn q(&self) -> &RightModule {
        &self.q
    }
    pub fn f(&self) -> &FpMatrix {
        &self.f
    }
    pub fn g(&self) -> &FpMatrix {
        &self.g
    }
    pub fn dim(&self) -> usize {
        self.w.dim() + self.q.dim()
    }

    /// `f ⊗ V: Q ⊗ U ⊗ V -> W ⊗ V`.
    fn f_v(&self, ctx: &MoritaContext) -> FpMatrix {
        let quv = tensor_right_bimodule(self.qu.module(), &ctx.v).expect("Q ⊗ U is a right A-module");
        quv.induced(&self.wv, &self.f)
    }

    /// `g ⊗ U: W ⊗ V ⊗ U -> Q ⊗ U`.
    fn g_u(&self, ctx: &MoritaContext) -> FpMatrix {
        let wvu = tensor_right_bimodule(self.wv.module(), &ctx.u).expect("W ⊗ V is a right B-module");
        wvu.induced(&self.qu, &self.g)
    }

    /// Exactness of `Q⊗U⊗V -> W⊗V -> Q` and of `W⊗V⊗U -> Q⊗U -> W`.
    pub fn sequences_exact(&self, ctx: &MoritaContext) -> [bool; 2] {
        [
            exact_matrices(&self.f_v(ctx), &self.g),
            exact_matrices(&self.g_u(ctx), &self.f),
        ]
    }
}

fn check_right_hom(source: &RightModule, target: &RightModule, h: &FpMatrix, name: &str) -> Result<()> {
    if h.rows() != target.dim() || h.cols() != source.dim() {
        return Err(Error::Shape(format!("{name} has the wrong shape")));
    }
    for (i, (a, b)) in source.action().iter().zip(target.action()).enumerate() {
        if h.mul(a) != b.mul(h) {
            return Err(Error::InvalidHom(format!("{name} does not commute with b{i}")));
        }
    }
    Ok(())
}

/// Tuple-level conditions, the verdict over `Λ`, and the same question asked
/// of the trivial extension view.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TupleReport {
    pub sequences_exact: [bool; 2],
    /// Verdicts on the two components: over `A` first, then over `B`.
    pub components: [GorensteinVerdict; 2],
    pub lambda: GorensteinVerdict,
    pub view: EquivalenceReport,
    /// The tuple-level conditions agree with the pair-level ones of the view.
    pub local_matches_view: bool,
    pub u_report: CompatibilityReport,
    pub v_report: CompatibilityReport,
    pub sum_report: CompatibilityReport,
    /// `U` and `V` established implies `U ⊕ V` established.
    pub propagation_holds: bool,
    pub forward_established: bool,
    pub converse_established: bool,
    pub status: Agreement,
}

impl TupleReport {
    pub fn local_hold(&self) -> bool {
        self.sequences_exact.iter().all(|&b| b) && self.components.iter().all(GorensteinVerdict::is_yes)
    }
}

/// Deciders and bimodule reports for one Morita context ring.
pub struct MoritaChecker {
    ring: MoritaRing,
    a: Decider,
    b: Decider,
    lambda: Decider,
    view: ExtensionChecker,
    u_compatible: CompatibilityReport,
    v_compatible: CompatibilityReport,
    u_cocompatible: CompatibilityReport,
    v_cocompatible: CompatibilityReport,
}

impl MoritaChecker {
    pub fn new(ring: MoritaRing, bound: usize, seed: u64) -> Self {
        let ctx = ring.context();
        let sa = Arc::new(Structure::new(ctx.a.clone(), seed));
        let sb = Arc::new(Structure::new(ctx.b.clone(), seed));
        let sl = Arc::new(Structure::new(ring.lambda.clone(), seed));
        MoritaChecker {
            u_compatible: compatibility_report(&ctx.u, &sb, &sa, bound),
            v_compatible: compatibility_report(&ctx.v, &sa, &sb, bound),
            u_cocompatible: cocompatibility_report(&ctx.u, &sb, &sa, bound),
            v_cocompatible: cocompatibility_report(&ctx.v, &sa, &sb, bound),
            view: ExtensionChecker::new(ring.view.clone(), bound, seed),
            a: Decider::new(sa, bound),
            b: Decider::new(sb, bound),
            lambda: Decider::new(sl, bound),
            ring,
        }
    }

    pub fn ring(&self) -> &MoritaRing {
        &self.ring
    }
    pub fn lambda(&self) -> &Decider {
        &self.lambda
    }
    pub fn view(&self) -> &ExtensionChecker {
        &self.view
    }

    #[allow(clippy::too_many_arguments)]
    fn report(
        &self,
        sequences_exact: [bool; 2],
        components: [GorensteinVerdict; 2],
        lambda: GorensteinVerdict,
        view: EquivalenceReport,
        u: CompatibilityReport,
        v: CompatibilityReport,
        sum: CompatibilityReport,
        zr: CompatibilityReport,
    ) -> TupleReport {
        let local = sequences_exact.iter().all(|&b| b) && components.iter().all(GorensteinVerdict::is_yes);
        let forward = u.established() && v.established();
        let converse = zr.established();
        TupleReport {
            sequences_exact,
            components,
            lambda,
            view,
            local_matches_view: local == view.local.hold()
                && sequences_exact.iter().all(|&b| b) == view.local.middle_exact,
            u_report: u,
            v_report: v,
            sum_report: sum,
            propagation_holds: !forward || sum.established(),
            forward_established: forward,
            converse_established: converse,
            status: agreement(lambda.is_yes(), local, forward, converse),
        }
    }

    /// Gorenstein projectivity of `(X, Y, f, g)` against its tuple-level
    /// conditions.
    pub fn verify_tuple(&self, t: &TupleModule) -> Result<TupleReport> {
        let ctx = self.ring.context();
        let (ca, _) = cokernel_module(&t.g);
        let (cb, _) = cokernel_module(&t.f);
        let n = self.ring.tuple_module(t)?;
        let view = self.view.verify_pair(&module_to_pair(&n, &self.ring.view)?);
        Ok(self.report(
            t.sequences_exact(ctx),
            [self.a.gp(&ca), self.b.gp(&cb)],
            self.lambda.gp(&self.ring.to_lambda(&n)),
            view,
            self.u_compatible,
            self.v_compatible,
            self.view.m_compatible(),
            self.view.zr_compatible(),
        ))
    }

    /// Gorenstein injectivity of `[X, Y, f, g]`.
    pub fn verify_cotuple(&self, t: &CotupleModule) -> Result<TupleReport> {
        let ctx = self.ring.context();
        let (ka, _) = kernel_module(&t.f);
        let (kb, _) = kernel_module(&t.g);
        let n = self.ring.cotuple_module(t)?;
        let view = self.view.verify_copair(&module_to_copair(&n, &self.ring.view)?);
        Ok(self.report(
            t.sequences_exact(ctx),
            [self.a.gi(&ka), self.b.gi(&kb)],
            self.lambda.gi(&self.ring.to_lambda(&n)),
            view,
            self.u_cocompatible,
            self.v_cocompatible,
            self.view.m_cocompatible(),
            self.view.zr_cocompatible(),
        ))
    }

    /// Gorenstein flatness of the right module `(W, Q, f, g)`.
    pub fn verify_right_tuple(&self, t: &RightTupleModule) -> Result<TupleReport> {
        let ctx = self.ring.context();
        let ca = right_cokernel(t.qu.module(), &t.w, &t.f);
        let cb = right_cokernel(t.wv.module(), &t.q, &t.g);
        let n = self.ring.right_tuple_module(t)?;
        let view = self
            .view
            .verify_right_pair(&module_to_right_pair(&n, &self.ring.view)?);
        Ok(self.report(
            t.sequences_exact(ctx),
            [self.a.gf_right(&ca), self.b.gf_right(&cb)],
            self.lambda.gf_right(&self.ring.to_lambda_right(&n)),
            view,
            self.u_cocompatible,
            self.v_cocompatible,
            self.view.m_cocompatible(),
            self.view.zr_cocompatible(),
        ))
    }
}

/// `A = B = k` with `U = k` and `V` either `0` or `k`.
pub fn field_context(field: FieldSpec, u: bool, v: bool) -> MoritaContext {
    let k = Arc::new(Algebra::ground_field(field));
    let leg = |present: bool| {
        if present {
            Bimodule::regular(k.clone())
        } else {
            Bimodule::zero(k.clone(), k.clone())
        }
    };
    MoritaContext::new(k.clone(), k.clone(), leg(u), leg(v)).expect("legs over the same field")
}
