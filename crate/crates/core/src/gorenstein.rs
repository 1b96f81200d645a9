//! Gorenstein projective, injective and flat modules: deciders with
//! certificates, sufficient criteria for (co)compatible bimodules, complete
//! resolutions on a window, and the lifting of complete resolutions along a
//! trivial extension.
//!
//! Over a finite-dimensional algebra a finitely generated module is
//! Gorenstein projective iff it is totally reflexive. When both regular
//! modules have finite injective dimension `d`, vanishing of
//! `Ext^{1..d}(G, A)` already decides the question; otherwise the positive
//! answer is only [`Answer::ProbableYes`].

use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::algebra::{
    dual_right_module, hom_space, is_exact_at, Algebra, Bimodule, HomSpace, LeftModule, ModuleHom, RightModule,
};
use crate::error::{Error, Result};
use crate::homology::{
    id_bounded, induced_on_hom, minimal_projective_resolution, pd_bounded, ChainComplex, DimensionVerdict,
    SyzygyWalk,
};
use crate::linalg::FpMatrix;
use crate::structure::Structure;
use crate::trivext::{
    classify_injective, classify_projective, copair_to_module, functor_c, functor_h, functor_h_map, functor_k,
    functor_t, functor_t_map, functor_z_copair, functor_z_pair, induced_delta, induced_gamma, module_to_copair,
    module_to_pair, pair_to_module, right_pair_to_module, CopairModule, PairModule, RightPairModule,
    TrivialExtension,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Regime {
    SelfInjective,
    /// Injective dimensions of the left and the right regular module.
    IwanagaGorenstein { left: usize, right: usize },
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Answer {
    CertifiedYes,
    CertifiedNo,
    ProbableYes { bound: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Certificate {
    Projective,
    SelfInjective,
    /// `Ext^i(G, A) = 0` for `1 <= i <= through`.
    ExtVanishing { through: usize },
    /// `dim Ext^degree(G, A) = dim != 0`.
    ExtWitness { degree: usize, dim: usize },
    /// Nonvanishing `Ext^degree(G*, A)` over the opposite algebra.
    DualExtWitness { degree: usize, dim: usize },
    /// The evaluation map `G -> G**` is not invertible.
    BidualityDefect {
        kernel_dim: usize,
        bidual_dim: usize,
        module_dim: usize,
    },
    /// Every test passed up to `bound`.
    Battery { bound: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GorensteinVerdict {
    pub answer: Answer,
    pub certificate: Certificate,
    pub regime: Regime,
}

impl GorensteinVerdict {
    /// `true` for both kinds of positive answer.
    pub fn is_yes(&self) -> bool {
        !self.is_no()
    }
    pub fn is_no(&self) -> bool {
        self.answer == Answer::CertifiedNo
    }
    pub fn is_certified_yes(&self) -> bool {
        self.answer == Answer::CertifiedYes
    }
}

/// Regime of the algebra of `st`, from the injective dimensions of the two
/// regular modules searched up to `bound`.
pub fn gorenstein_regime(st: &Structure, bound: usize) -> Regime {
    let left = id_bounded(st, &LeftModule::regular(st.algebra().clone()), bound);
    let op = st.opposite();
    let right = id_bounded(op, &LeftModule::regular(op.algebra().clone()), bound);
    match (left, right) {
        (DimensionVerdict::Finite(0), DimensionVerdict::Finite(0)) => Regime::SelfInjective,
        (DimensionVerdict::Finite(left), DimensionVerdict::Finite(right)) => Regime::IwanagaGorenstein { left, right },
        _ => Regime::Unknown,
    }
}

fn swap(r: Regime) -> Regime {
    match r {
        Regime::IwanagaGorenstein { left, right } => Regime::IwanagaGorenstein {
            left: right,
            right: left,
        },
        other => other,
    }
}

/// `Hom_A(m, A)` as a left module over `op = A^op`, with its hom space.
/// The basis element `b_i` of `A^op` acts by right multiplication with `b_i`.
pub fn regular_dual(m: &LeftModule, op: &Arc<Algebra>) -> (LeftModule, HomSpace) {
    let alg = m.algebra();
    let h = hom_space(m, &LeftModule::regular(alg.clone())).expect("same algebra");
    let f = m.field();
    let action: Vec<FpMatrix> = (0..alg.dim())
        .map(|i| {
            let r = alg.right_mult(i);
            let mut a = FpMatrix::zeros(f, h.dim(), h.dim());
            for (k, b) in h.basis().iter().enumerate() {
                let c = h.coords(&r.mul(b)).expect("right multiplication is A-linear");
                for (l, x) in c.into_iter().enumerate() {
                    a.set(l, k, x);
                }
            }
            a
        })
        .collect();
    (LeftModule::new_unchecked(op.clone(), h.dim(), action), h)
}

/// Gorenstein decider for one algebra; the opposite side is built on demand.
pub struct Decider {
    st: Arc<Structure>,
    bound: usize,
    regime: Regime,
    opposite: OnceLock<Box<Decider>>,
}

impl std::fmt::Debug for Decider {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Decider")
            .field("dim", &self.st.algebra().dim())
            .field("bound", &self.bound)
            .field("regime", &self.regime)
            .finish()
    }
}

impl Decider {
    pub fn new(st: Arc<Structure>, bound: usize) -> Self {
        let regime = gorenstein_regime(&st, bound);
        Decider {
            st,
            bound,
            regime,
            opposite: OnceLock::new(),
        }
    }

    pub fn structure(&self) -> &Arc<Structure> {
        &self.st
    }
    pub fn bound(&self) -> usize {
        self.bound
    }
    pub fn regime(&self) -> Regime {
        self.regime
    }

    pub fn opposite(&self) -> &Decider {
        self.opposite.get_or_init(|| {
            Box::new(Decider {
                st: self.st.opposite_shared().clone(),
                bound: self.bound,
                regime: swap(self.regime),
                opposite: OnceLock::new(),
            })
        })
    }

    fn verdict(&self, answer: Answer, certificate: Certificate) -> GorensteinVerdict {
        GorensteinVerdict {
            answer,
            certificate,
            regime: self.regime,
        }
    }

    /// `dim Ext^i(g, A)` for `i = 0..=top`.
    pub fn ext_into_regular(&self, g: &LeftModule, top: usize) -> Vec<usize> {
        let reg = LeftModule::regular(self.st.algebra().clone());
        SyzygyWalk::new(&self.st).ext_dims(g, &reg, top)
    }

    fn first_ext(&self, g: &LeftModule, top: usize) -> Option<(usize, usize)> {
        let e = self.ext_into_regular(g, top);
        (1..=top).find(|&i| e[i] != 0).map(|i| (i, e[i]))
    }

    /// Is `g` Gorenstein projective?
    pub fn gp(&self, g: &LeftModule) -> GorensteinVerdict {
        if g.dim() == 0 || self.st.is_projective(g) {
            return self.verdict(Answer::CertifiedYes, Certificate::Projective);
        }
        let top = match self.regime {
            Regime::SelfInjective => return self.verdict(Answer::CertifiedYes, Certificate::SelfInjective),
            Regime::IwanagaGorenstein { left, .. } => left,
            Regime::Unknown => self.bound,
        };
        if let Some((degree, dim)) = self.first_ext(g, top) {
            return self.verdict(Answer::CertifiedNo, Certificate::ExtWitness { degree, dim });
        }
        if self.regime != Regime::Unknown {
            return self.verdict(Answer::CertifiedYes, Certificate::ExtVanishing { through: top });
        }
        let op = self.opposite();
        let (dual, h) = regular_dual(g, op.st.algebra());
        let f = g.field();
        let stacked = FpMatrix::vstack(f, g.dim(), &h.basis().iter().collect::<Vec<_>>());
        let kernel_dim = g.dim() - stacked.rank();
        let bidual_dim = hom_space(&dual, &LeftModule::regular(op.st.algebra().clone()))
            .expect("same algebra")
            .dim();
        if kernel_dim != 0 || bidual_dim != g.dim() {
            return self.verdict(
                Answer::CertifiedNo,
                Certificate::BidualityDefect {
                    kernel_dim,
                    bidual_dim,
                    module_dim: g.dim(),
                },
            );
        }
        if let Some((degree, dim)) = op.first_ext(&dual, self.bound) {
            return self.verdict(Answer::CertifiedNo, Certificate::DualExtWitness { degree, dim });
        }
        self.verdict(
            Answer::ProbableYes { bound: self.bound },
            Certificate::Battery { bound: self.bound },
        )
    }

    /// Is `y` Gorenstein injective? Decided as Gorenstein projectivity of
    /// `D(y)` over the opposite algebra.
    pub fn gi(&self, y: &LeftModule) -> GorensteinVerdict {
        let v = self.opposite().gp(&self.st.to_opposite_dual(y));
        GorensteinVerdict {
            regime: self.regime,
            ..v
        }
    }

    /// Is the right module `x` Gorenstein flat? Decided as Gorenstein
    /// injectivity of its linear dual.
    pub fn gf_right(&self, x: &RightModule) -> GorensteinVerdict {
        self.gi(&dual_right_module(x))
    }

    /// A complete projective resolution `P^{-w} -> ... -> P^w` of the
    /// Gorenstein projective module `c`, with `c = ker f^0`.
    ///
    /// The left half is the minimal resolution of `c`; the right half is the
    /// `A`-dual of the minimal resolution of `Hom(c, A)` over `A^op`.
    pub fn complete_resolution(&self, c: &LeftModule, window: usize) -> Result<CompleteResolution> {
        if window == 0 {
            return Err(Error::Shape("window must be positive".into()));
        }
        let w = window;
        let alg = self.st.algebra();
        let op = self.st.opposite();
        let left = minimal_projective_resolution(&self.st, c, w - 1);
        let (dual, h) = regular_dual(c, op.algebra());
        let right = minimal_projective_resolution(op, &dual, w);
        let f = c.field();

        let mut spaces = Vec::with_capacity(w + 1);
        let mut upper = Vec::with_capacity(w + 1);
        for q in &right.terms {
            let (p, s) = regular_dual(q, alg);
            upper.push(p);
            spaces.push(s);
        }
        // iota(e_c) = (q -> pi_Q(q)(e_c))
        let pi_q = right.augmentation.matrix();
        let mut iota = FpMatrix::zeros(f, upper[0].dim(), c.dim());
        for col in 0..c.dim() {
            let mut phi = FpMatrix::zeros(f, alg.dim(), h.dim());
            for (k, b) in h.basis().iter().enumerate() {
                for r in 0..alg.dim() {
                    phi.set(r, k, b.get(r, col));
                }
            }
            let coords = spaces[0]
                .coords(&phi.mul(pi_q))
                .ok_or_else(|| Error::Construction("evaluation is not A^op-linear".into()))?;
            for (r, x) in coords.into_iter().enumerate() {
                iota.set(r, col, x);
            }
        }
        let iota = ModuleHom::new(c.clone(), upper[0].clone(), iota)?;
        let pi = left.augmentation.clone();

        let mut modules: Vec<LeftModule> = left.terms.iter().rev().cloned().collect();
        let mut diffs: Vec<ModuleHom> = left.differentials.iter().rev().cloned().collect();
        diffs.push(iota.compose(&pi));
        modules.extend(upper.iter().cloned());
        for j in 0..w {
            let d = right.differentials[j].matrix();
            let m = induced_on_hom(&spaces[j], &spaces[j + 1], |phi| phi.mul(d));
            diffs.push(ModuleHom::new(upper[j].clone(), upper[j + 1].clone(), m)?);
        }
        let complex = ChainComplex::new(-(w as i64), modules, diffs)?;
        if !iota.is_injective() {
            return Err(Error::HypothesesUnmet("module is not torsionless".into()));
        }
        let exact = complex.is_exact().exact;
        let hom_exact = self
            .st
            .pims()
            .iter()
            .all(|q| complex.hom_into(q).map(|h| h.is_exact().exact).unwrap_or(false));
        if !exact || !hom_exact {
            return Err(Error::HypothesesUnmet(
                "no complete projective resolution through the module on this window".into(),
            ));
        }
        Ok(CompleteResolution { complex, iota, pi })
    }

    /// A complete injective resolution `E^{-w-1} -> ... -> E^{w-1}` of the
    /// Gorenstein injective module `k`, obtained by dualizing a complete
    /// projective resolution of `D(k)` over the opposite algebra.
    pub fn complete_coresolution(&self, k: &LeftModule, window: usize) -> Result<CompleteCoresolution> {
        let op = self.opposite();
        let dk = self.st.to_opposite_dual(k);
        let res = op.complete_resolution(&dk, window)?;
        let st = &self.st;
        let n = res.complex.modules().len();
        let modules: Vec<LeftModule> = (0..n)
            .rev()
            .map(|j| st.from_opposite_dual(&res.complex.modules()[j]))
            .collect();
        let diffs: Vec<ModuleHom> = (0..n - 1)
            .rev()
            .map(|j| {
                ModuleHom::new_unchecked(
                    modules[n - 2 - j].clone(),
                    modules[n - 1 - j].clone(),
                    res.complex.differentials()[j].matrix().transpose(),
                )
            })
            .collect();
        let lo = -res.complex.hi() - 1;
        let complex = ChainComplex::new(lo, modules, diffs)?;
        let e0 = complex.module(0).clone();
        let em1 = complex.module(-1).clone();
        let iota = ModuleHom::new(k.clone(), e0, res.pi.matrix().transpose())?;
        let pi = ModuleHom::new(em1, k.clone(), res.iota.matrix().transpose())?;
        Ok(CompleteCoresolution { complex, iota, pi })
    }
}

/// `c ≅ ker f^0` inside `complex`, with `f^{-1} = iota pi`.
#[derive(Clone, Debug)]
pub struct CompleteResolution {
    pub complex: ChainComplex,
    /// `c -> P^0`.
    pub iota: ModuleHom,
    /// `P^{-1} -> c`.
    pub pi: ModuleHom,
}

/// `k ≅ ker f^0` inside `complex`, with `f^{-1} = iota pi`.
#[derive(Clone, Debug)]
pub struct CompleteCoresolution {
    pub complex: ChainComplex,
    /// `k -> E^0`.
    pub iota: ModuleHom,
    /// `E^{-1} -> k`.
    pub pi: ModuleHom,
}

pub fn gp_check(st: Arc<Structure>, g: &LeftModule, bound: usize) -> GorensteinVerdict {
    Decider::new(st, bound).gp(g)
}

pub fn gi_check(st: Arc<Structure>, y: &LeftModule, bound: usize) -> GorensteinVerdict {
    Decider::new(st, bound).gi(y)
}

pub fn gf_check_right(st: Arc<Structure>, x: &RightModule, bound: usize) -> GorensteinVerdict {
    Decider::new(st, bound).gf_right(x)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum BimoduleKind {
    Compatible,
    Cocompatible,
}

/// Sufficient finite-dimension criteria; the same two serve both kinds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Criterion {
    /// `fd(N_B) < ∞` and `pd(_A N) < ∞`.
    FinitePdFd,
    /// `fd(N_B) < ∞` and `id(_A N) < ∞`.
    FiniteIdFd,
}

/// Which sufficient criterion, if any, establishes that `_A N_B` is a
/// generalized (co)compatible bimodule. `None` means "not established".
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompatibilityReport {
    pub kind: BimoduleKind,
    pub sufficient_via: Option<Criterion>,
    pub pd_left: DimensionVerdict,
    pub id_left: DimensionVerdict,
    pub fd_right: DimensionVerdict,
}

impl CompatibilityReport {
    pub fn established(&self) -> bool {
        self.sufficient_via.is_some()
    }
}

fn dimension_report(
    kind: BimoduleKind,
    n: &Bimodule,
    left: &Structure,
    right: &Structure,
    bound: usize,
) -> CompatibilityReport {
    let nl = n.left_module();
    let pd_left = pd_bounded(left, &nl, bound);
    let id_left = id_bounded(left, &nl, bound);
    let op = right.opposite();
    let nr = LeftModule::new_unchecked(op.algebra().clone(), n.dim(), n.right_action().to_vec());
    let fd_right = pd_bounded(op, &nr, bound);
    let sufficient_via = if !fd_right.is_finite() {
        None
    } else if pd_left.is_finite() {
        Some(Criterion::FinitePdFd)
    } else if id_left.is_finite() {
        Some(Criterion::FiniteIdFd)
    } else {
        None
    };
    CompatibilityReport {
        kind,
        sufficient_via,
        pd_left,
        id_left,
        fd_right,
    }
}

/// `left` and `right` are the structures of the algebras acting on the left
/// and on the right of `n`.
pub fn compatibility_report(n: &Bimodule, left: &Structure, right: &Structure, bound: usize) -> CompatibilityReport {
    dimension_report(BimoduleKind::Compatible, n, left, right, bound)
}

pub fn cocompatibility_report(n: &Bimodule, left: &Structure, right: &Structure, bound: usize) -> CompatibilityReport {
    dimension_report(BimoduleKind::Cocompatible, n, left, right, bound)
}

/// The pair-level conditions: exactness of `M⊗M⊗X -> M⊗X -> X` and the
/// verdict on `coker α` (or the copair and right-pair mirrors).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalConditions {
    pub middle_exact: bool,
    pub component: GorensteinVerdict,
}

impl LocalConditions {
    pub fn hold(&self) -> bool {
        self.middle_exact && self.component.is_yes()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Agreement {
    Agree,
    /// The two sides differ, but the implication that would be violated has
    /// hypotheses that were not established.
    ConsistentUnestablished,
    /// An implication with established hypotheses failed.
    Contradiction,
}

/// Both sides of a characterization of Gorenstein modules over `R ⋉ M`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivalenceReport {
    /// Verdict on the module over the total algebra.
    pub total: GorensteinVerdict,
    pub local: LocalConditions,
    /// Hypothesis on `M` behind "local conditions imply Gorenstein".
    pub forward_established: bool,
    /// Hypothesis on `Z(R)` behind "Gorenstein implies local conditions".
    pub converse_established: bool,
    pub status: Agreement,
}

pub(crate) fn agreement(total: bool, local: bool, forward: bool, converse: bool) -> Agreement {
    match (total, local) {
        (a, b) if a == b => Agreement::Agree,
        (false, true) if forward => Agreement::Contradiction,
        (true, false) if converse => Agreement::Contradiction,
        _ => Agreement::ConsistentUnestablished,
    }
}

/// The complex `T(P^i)` lifted from a complete resolution of `coker α`.
#[derive(Clone, Debug)]
pub struct LiftedResolution {
    pub base: CompleteResolution,
    pub complex: ChainComplex,
    /// `(X, α) -> T(P^0)`, onto `ker g^0`.
    pub lambda: ModuleHom,
    pub checks: LiftChecks,
}

/// The complex `H(E^i)` lifted from a complete injective resolution of
/// `ker β`.
#[derive(Clone, Debug)]
pub struct LiftedCoresolution {
    pub base: CompleteCoresolution,
    pub complex: ChainComplex,
    /// `[Y, β] -> H(E^0)`, onto `ker ∂^0`.
    pub lambda: ModuleHom,
    pub checks: LiftChecks,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiftChecks {
    pub window_exact: bool,
    /// Every term is `T(P)` (resp. `H(E)`) by the classification of
    /// projective (resp. injective) total modules.
    pub terms_classified: bool,
    /// `lambda` is injective with image `ker g^0`.
    pub kernel_matches: bool,
    /// Exactness after `Hom(-, T(Q))` (resp. `Hom(H(Q), -)`).
    pub hom_exact_free: bool,
    /// Exactness after `Hom(-, Z(Q))` (resp. `Hom(Z(Q), -)`).
    pub hom_exact_zero: bool,
}

impl LiftChecks {
    pub fn all(&self) -> bool {
        self.window_exact && self.terms_classified && self.kernel_matches && self.hom_exact_free && self.hom_exact_zero
    }
}

fn unmet(what: &str) -> Error {
    Error::HypothesesUnmet(what.into())
}

/// Deciders and bimodule reports for one trivial extension.
pub struct ExtensionChecker {
    t: TrivialExtension,
    base: Decider,
    total: Decider,
    m_compatible: CompatibilityReport,
    m_cocompatible: CompatibilityReport,
    zr_compatible: CompatibilityReport,
    zr_cocompatible: CompatibilityReport,
}

impl ExtensionChecker {
    pub fn new(t: TrivialExtension, bound: usize, seed: u64) -> Self {
        let (b, tot) = t.structures(seed);
        let (b, tot) = (Arc::new(b), Arc::new(tot));
        let m = t.bimodule();
        let zr = t.zr_bimodule();
        ExtensionChecker {
            m_compatible: compatibility_report(m, &b, &b, bound),
            m_cocompatible: cocompatibility_report(m, &b, &b, bound),
            zr_compatible: compatibility_report(&zr, &tot, &tot, bound),
            zr_cocompatible: cocompatibility_report(&zr, &tot, &tot, bound),
            base: Decider::new(b, bound),
            total: Decider::new(tot, bound),
            t,
        }
    }

    pub fn extension(&self) -> &TrivialExtension {
        &self.t
    }
    pub fn base(&self) -> &Decider {
        &self.base
    }
    pub fn total(&self) -> &Decider {
        &self.total
    }
    pub fn m_compatible(&self) -> CompatibilityReport {
        self.m_compatible
    }
    pub fn m_cocompatible(&self) -> CompatibilityReport {
        self.m_cocompatible
    }
    pub fn zr_compatible(&self) -> CompatibilityReport {
        self.zr_compatible
    }
    pub fn zr_cocompatible(&self) -> CompatibilityReport {
        self.zr_cocompatible
    }

    pub fn pair_conditions(&self, p: &PairModule) -> LocalConditions {
        LocalConditions {
            middle_exact: p.middle_exact(&self.t),
            component: self.base.gp(&functor_c(p).0),
        }
    }

    pub fn copair_conditions(&self, c: &CopairModule) -> LocalConditions {
        LocalConditions {
            middle_exact: c.middle_exact(&self.t),
            component: self.base.gi(&functor_k(c).0),
        }
    }

    pub fn right_pair_conditions(&self, p: &RightPairModule) -> LocalConditions {
        LocalConditions {
            middle_exact: p.middle_exact(&self.t),
            component: self.base.gf_right(&p.cokernel()),
        }
    }

    /// Gorenstein projectivity of `(X, α)` against its pair-level conditions.
    pub fn verify_pair(&self, p: &PairModule) -> EquivalenceReport {
        let total = self.total.gp(&pair_to_module(p, &self.t));
        let local = self.pair_conditions(p);
        self.report(total, local, self.m_compatible, self.zr_compatible)
    }

    /// Gorenstein injectivity of `[Y, β]` against its copair-level conditions.
    pub fn verify_copair(&self, c: &CopairModule) -> EquivalenceReport {
        let total = self.total.gi(&copair_to_module(c, &self.t));
        let local = self.copair_conditions(c);
        self.report(total, local, self.m_cocompatible, self.zr_cocompatible)
    }

    /// Gorenstein flatness of a right pair against its pair-level conditions.
    pub fn verify_right_pair(&self, p: &RightPairModule) -> EquivalenceReport {
        let total = self.total.gf_right(&right_pair_to_module(p, &self.t));
        let local = self.right_pair_conditions(p);
        self.report(total, local, self.m_cocompatible, self.zr_cocompatible)
    }

    fn report(
        &self,
        total: GorensteinVerdict,
        local: LocalConditions,
        m: CompatibilityReport,
        zr: CompatibilityReport,
    ) -> EquivalenceReport {
        let (forward, converse) = (m.established(), zr.established());
        EquivalenceReport {
            total,
            local,
            forward_established: forward,
            converse_established: converse,
            status: agreement(total.is_yes(), local.hold(), forward, converse),
        }
    }

    /// Lifts a complete projective resolution `Ξ` of `coker α` to the complex
    /// `T(P^i)` with `g^i = [[f^i, 0], [σ^i, M⊗f^i]]` and `ker g^0 ≅ (X, α)`.
    pub fn build_pair_complete_resolution(&self, p: &PairModule, window: usize) -> Result<LiftedResolution> {
        let t = &self.t;
        let cond = self.pair_conditions(p);
        if !cond.middle_exact {
            return Err(unmet("M⊗M⊗X -> M⊗X -> X is not exact"));
        }
        if cond.component.is_no() {
            return Err(unmet("coker α is not Gorenstein projective"));
        }
        let (c, rho) = functor_c(p);
        let base = self.base.complete_resolution(&c, window)?;
        let xi = &base.complex;
        let (lo, hi) = (xi.lo(), xi.hi());
        let f = c.field();
        let x = p.x();
        let tensors: Vec<_> = xi.modules().iter().map(|m| t.tensor(m)).collect();
        let tix = |i: i64| (i - lo) as usize;
        let m_f = |i: i64| tensors[tix(i)].induced(&tensors[tix(i + 1)], xi.differential(i).matrix());
        let f_of = |i: i64| xi.differential(i).matrix().clone();

        let (delta, _) = induced_delta(p, t);
        let mc = t.tensor(&c);
        let m_iota = mc.induced(&tensors[tix(0)], base.iota.matrix());
        let m_pi = tensors[tix(-1)].induced(&mc, base.pi.matrix());
        let psi = hom_space(x, tensors[tix(0)].module())?
            .solve(None, Some(delta.matrix()), &m_iota)
            .ok_or_else(|| unmet("M⊗ι does not extend along δ"))?;
        let eta = hom_space(xi.module(-1), x)?
            .solve(Some(rho.matrix()), None, base.pi.matrix())
            .ok_or_else(|| unmet("π does not lift along ρ"))?;
        let iota_rho = base.iota.matrix().mul(rho.matrix());
        let lambda = FpMatrix::vstack(f, x.dim(), &[&iota_rho, &psi]);
        let delta_m_pi = delta.matrix().mul(&m_pi);
        let xi_map = FpMatrix::hstack(f, x.dim(), &[&eta, &delta_m_pi]);

        let mut sigma: Vec<Option<FpMatrix>> = vec![None; (hi - lo) as usize];
        let sidx = |i: i64| (i - lo) as usize;
        for i in 0..hi {
            let space = hom_space(xi.module(i), tensors[tix(i + 1)].module())?;
            let s = if i == 0 {
                space.solve(None, Some(&iota_rho), &m_f(0).mul(&psi).neg())
            } else {
                let prev = sigma[sidx(i - 1)].as_ref().expect("filled in order");
                space.solve(None, Some(&f_of(i - 1)), &m_f(i).mul(prev).neg())
            };
            sigma[sidx(i)] = Some(s.ok_or_else(|| unmet("no correction term σ on the right half"))?);
        }
        for i in (lo..=-2).rev() {
            let space = hom_space(xi.module(i), tensors[tix(i + 1)].module())?;
            let s = if i == -2 {
                space.solve(Some(&delta_m_pi), None, &eta.mul(&f_of(-2)).neg())
            } else {
                let next = sigma[sidx(i + 1)].as_ref().expect("filled in order");
                space.solve(Some(&m_f(i + 1)), None, &next.mul(&f_of(i)).neg())
            };
            sigma[sidx(i)] = Some(s.ok_or_else(|| unmet("no correction term σ on the left half"))?);
        }

        let pairs: Vec<PairModule> = xi.modules().iter().map(|m| functor_t(m, t)).collect();
        let totals: Vec<LeftModule> = pairs.iter().map(|q| pair_to_module(q, t)).collect();
        let mut diffs = Vec::with_capacity(totals.len() - 1);
        for i in lo..hi {
            let g = if i == -1 {
                lambda.mul(&xi_map)
            } else {
                let fi = f_of(i);
                let mut g = fi.block_diag(&m_f(i));
                g.set_block(fi.rows(), 0, sigma[sidx(i)].as_ref().expect("all filled"));
                g
            };
            diffs.push(ModuleHom::new(totals[tix(i)].clone(), totals[tix(i + 1)].clone(), g)?);
        }
        let complex = ChainComplex::new(lo, totals, diffs)?;
        let lambda = ModuleHom::new(pair_to_module(p, t), complex.module(0).clone(), lambda)?;

        let base_st = self.base.structure();
        let terms_classified = pairs.iter().all(|q| classify_projective(q, t, base_st).is_some());
        let kernel_matches =
            lambda.is_injective() && is_exact_at(&lambda, complex.differential(0)).unwrap_or(false);
        let hom_exact = |q: &LeftModule| complex.hom_into(q).map(|h| h.is_exact().exact).unwrap_or(false);
        let pims = base_st.pims();
        let checks = LiftChecks {
            window_exact: complex.is_exact().exact,
            terms_classified,
            kernel_matches,
            hom_exact_free: pims.iter().all(|q| hom_exact(&pair_to_module(&functor_t(q, t), t))),
            hom_exact_zero: pims.iter().all(|q| hom_exact(&pair_to_module(&functor_z_pair(q, t), t))),
        };
        Ok(LiftedResolution {
            base,
            complex,
            lambda,
            checks,
        })
    }

    /// Lifts a complete injective resolution of `ker β` to the complex
    /// `H(E^i)` with `∂^i = [[(f^i)_*, 0], [τ^i, f^i]]` and
    /// `ker ∂^0 ≅ [Y, β]`.
    pub fn build_copair_complete_coresolution(&self, c: &CopairModule, window: usize) -> Result<LiftedCoresolution> {
        let t = &self.t;
        let cond = self.copair_conditions(c);
        if !cond.middle_exact {
            return Err(unmet("Y -> Hom(M, Y) -> Hom(M, Hom(M, Y)) is not exact"));
        }
        if cond.component.is_no() {
            return Err(unmet("ker β is not Gorenstein injective"));
        }
        let (k, iota) = functor_k(c);
        let base = self.base.complete_coresolution(&k, window)?;
        let xi = &base.complex;
        let (lo, hi) = (xi.lo(), xi.hi());
        let f = k.field();
        let y = c.y();
        let homs: Vec<_> = xi.modules().iter().map(|m| t.hom(m)).collect();
        let tix = |i: i64| (i - lo) as usize;
        let f_star = |i: i64| homs[tix(i)].induced(&homs[tix(i + 1)], xi.differential(i).matrix());
        let f_of = |i: i64| xi.differential(i).matrix().clone();

        let (gamma, _) = induced_gamma(c, t);
        let gk = t.hom(&k);
        let tau = gk.induced(&homs[tix(0)], base.iota.matrix());
        let pi_star = homs[tix(-1)].induced(&gk, base.pi.matrix());
        let phi = hom_space(y, xi.module(0))?
            .solve(None, Some(iota.matrix()), base.iota.matrix())
            .ok_or_else(|| unmet("ι_K does not extend along ι"))?;
        let psi = hom_space(homs[tix(-1)].module(), y)?
            .solve(Some(gamma.matrix()), None, &pi_star)
            .ok_or_else(|| unmet("π_* does not lift along γ"))?;
        let tau_gamma = tau.mul(gamma.matrix());
        let lambda = FpMatrix::vstack(f, y.dim(), &[&tau_gamma, &phi]);
        let iota_pi = iota.matrix().mul(base.pi.matrix());
        let xi_map = FpMatrix::hstack(f, y.dim(), &[&psi, &iota_pi]);

        let mut taus: Vec<Option<FpMatrix>> = vec![None; (hi - lo) as usize];
        for i in 0..hi {
            let space = hom_space(homs[tix(i)].module(), xi.module(i + 1))?;
            let s = if i == 0 {
                space.solve(None, Some(&tau_gamma), &f_of(0).mul(&phi).neg())
            } else {
                let prev = taus[tix(i - 1)].as_ref().expect("filled in order");
                space.solve(None, Some(&f_star(i - 1)), &f_of(i).mul(prev).neg())
            };
            taus[tix(i)] = Some(s.ok_or_else(|| unmet("no correction term τ on the right half"))?);
        }
        for i in (lo..=-2).rev() {
            let space = hom_space(homs[tix(i)].module(), xi.module(i + 1))?;
            let s = if i == -2 {
                space.solve(Some(&iota_pi), None, &psi.mul(&f_star(-2)).neg())
            } else {
                let next = taus[tix(i + 1)].as_ref().expect("filled in order");
                space.solve(Some(&f_of(i + 1)), None, &next.mul(&f_star(i)).neg())
            };
            taus[tix(i)] = Some(s.ok_or_else(|| unmet("no correction term τ on the left half"))?);
        }

        let copairs: Vec<CopairModule> = xi.modules().iter().map(|m| functor_h(m, t)).collect();
        let totals: Vec<LeftModule> = copairs.iter().map(|q| copair_to_module(q, t)).collect();
        let mut diffs = Vec::with_capacity(totals.len() - 1);
        for i in lo..hi {
            let d = if i == -1 {
                lambda.mul(&xi_map)
            } else {
                let fs = f_star(i);
                let mut d = fs.block_diag(&f_of(i));
                d.set_block(fs.rows(), 0, taus[tix(i)].as_ref().expect("all filled"));
                d
            };
            diffs.push(ModuleHom::new(totals[tix(i)].clone(), totals[tix(i + 1)].clone(), d)?);
        }
        let complex = ChainComplex::new(lo, totals, diffs)?;
        let lambda = ModuleHom::new(copair_to_module(c, t), complex.module(0).clone(), lambda)?;

        let base_st = self.base.structure();
        let terms_classified = copairs.iter().all(|q| classify_injective(q, t, base_st).is_some());
        let kernel_matches =
            lambda.is_injective() && is_exact_at(&lambda, complex.differential(0)).unwrap_or(false);
        let hom_exact = |q: &LeftModule| complex.hom_from(q).map(|h| h.is_exact().exact).unwrap_or(false);
        let injectives = base_st.injective_indecomposables();
        let checks = LiftChecks {
            window_exact: complex.is_exact().exact,
            terms_classified,
            kernel_matches,
            hom_exact_free: injectives
                .iter()
                .all(|q| hom_exact(&copair_to_module(&functor_h(q, t), t))),
            hom_exact_zero: injectives
                .iter()
                .all(|q| hom_exact(&copair_to_module(&functor_z_copair(q, t), t))),
        };
        Ok(LiftedCoresolution {
            base,
            complex,
            lambda,
            checks,
        })
    }

    /// `T(X)` as a total module; convenience for sweeps.
    pub fn t_module(&self, x: &LeftModule) -> LeftModule {
        pair_to_module(&functor_t(x, &self.t), &self.t)
    }

    pub fn as_pair(&self, n: &LeftModule) -> Result<PairModule> {
        module_to_pair(n, &self.t)
    }

    pub fn as_copair(&self, n: &LeftModule) -> Result<CopairModule> {
        module_to_copair(n, &self.t)
    }

    /// `T(f)` as a map of total modules.
    pub fn t_map(&self, g: &ModuleHom) -> FpMatrix {
        functor_t_map(g, &self.t)
    }

    pub fn h_map(&self, g: &ModuleHom) -> FpMatrix {
        functor_h_map(g, &self.t)
    }
}
