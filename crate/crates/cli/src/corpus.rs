//! The built-in example workspace.

use std::collections::BTreeMap;

use crate::workspace::{
    AlgebraSpec, BimoduleSpec, ContextSpec, ExtensionSpec, Functor, ModuleSpec, PairSpec, TupleSpec, WorkspaceFile,
    SCHEMA_VERSION,
};

fn s(x: &str) -> String {
    x.to_string()
}

fn pair(extension: &str, module: &str, functor: Functor) -> PairSpec {
    PairSpec {
        extension: s(extension),
        module: Some(s(module)),
        functor: Some(functor),
        map: None,
        total: None,
    }
}

fn tuple(context: &str, x: &str, y: &str) -> TupleSpec {
    TupleSpec {
        context: s(context),
        x: s(x),
        y: s(y),
        f: None,
        g: None,
    }
}

/// GF(2) and GF(3) ground fields, the dual numbers as `k ⋉ k`, the lower
/// triangular ring as `(k × k) ⋉ k`, the three Morita contexts over `k`, and
/// instances over each.
pub fn builtin() -> WorkspaceFile {
    let mut w = WorkspaceFile {
        schema_version: SCHEMA_VERSION,
        field: 2,
        ..Default::default()
    };
    w.algebras = BTreeMap::from([
        (s("k"), AlgebraSpec::Field { field: None }),
        (s("k3"), AlgebraSpec::Field { field: Some(3) }),
        (
            s("dual_numbers"),
            AlgebraSpec::Quiver {
                field: None,
                vertices: 1,
                arrows: vec![[0, 0]],
                relations: vec![vec![0, 0]],
            },
        ),
        (
            s("dual_numbers3"),
            AlgebraSpec::Quiver {
                field: Some(3),
                vertices: 1,
                arrows: vec![[0, 0]],
                relations: vec![vec![0, 0]],
            },
        ),
        (
            s("a2"),
            AlgebraSpec::Quiver {
                field: None,
                vertices: 2,
                arrows: vec![[0, 1]],
                relations: vec![],
            },
        ),
        (
            s("nakayama"),
            AlgebraSpec::Quiver {
                field: None,
                vertices: 2,
                arrows: vec![[0, 1], [1, 0]],
                relations: vec![vec![0, 1], vec![1, 0]],
            },
        ),
        (s("kk"), AlgebraSpec::Product { factors: [s("k"), s("k")] }),
    ]);
    w.bimodules = BTreeMap::from([
        (s("k_reg"), BimoduleSpec::Regular { algebra: s("k") }),
        (s("k3_reg"), BimoduleSpec::Regular { algebra: s("k3") }),
        (s("k_zero"), BimoduleSpec::Zero { left: s("k"), right: s("k") }),
        (
            s("triangular"),
            BimoduleSpec::Actions {
                left: s("kk"),
                right: s("kk"),
                dim: 1,
                left_action: vec![vec![vec![0]], vec![vec![1]]],
                right_action: vec![vec![vec![1]], vec![vec![0]]],
            },
        ),
    ]);
    w.extensions = BTreeMap::from([
        (
            s("d_ext"),
            ExtensionSpec {
                base: s("k"),
                bimodule: s("k_reg"),
            },
        ),
        (
            s("d3_ext"),
            ExtensionSpec {
                base: s("k3"),
                bimodule: s("k3_reg"),
            },
        ),
        (
            s("a2_ext"),
            ExtensionSpec {
                base: s("kk"),
                bimodule: s("triangular"),
            },
        ),
    ]);
    let ctx = |u: &str, v: &str| ContextSpec {
        a: s("k"),
        b: s("k"),
        u: s(u),
        v: s(v),
    };
    w.contexts = BTreeMap::from([
        (s("split_ctx"), ctx("k_zero", "k_zero")),
        (s("a2_ctx"), ctx("k_reg", "k_zero")),
        (s("nakayama_ctx"), ctx("k_reg", "k_reg")),
    ]);
    let module = |kind: &str, algebra: &str| match kind {
        "regular" => ModuleSpec::Regular { algebra: s(algebra) },
        _ => ModuleSpec::Zero { algebra: s(algebra) },
    };
    w.modules = BTreeMap::from([
        (s("k_mod"), module("regular", "k")),
        (s("k3_mod"), module("regular", "k3")),
        (s("kk_reg"), module("regular", "kk")),
        (s("d_regular"), module("regular", "dual_numbers")),
        (s("d_simple"), ModuleSpec::Simple { algebra: s("dual_numbers"), vertex: 0 }),
        (s("d3_simple"), ModuleSpec::Simple { algebra: s("dual_numbers3"), vertex: 0 }),
        (s("a2_s0"), ModuleSpec::Simple { algebra: s("a2"), vertex: 0 }),
        (s("a2_s1"), ModuleSpec::Simple { algebra: s("a2"), vertex: 1 }),
        (s("nakayama_s0"), ModuleSpec::Simple { algebra: s("nakayama"), vertex: 0 }),
        (
            s("kk_first"),
            ModuleSpec::Actions {
                algebra: s("kk"),
                dim: 1,
                action: vec![vec![vec![1]], vec![vec![0]]],
            },
        ),
        (
            s("kk_second"),
            ModuleSpec::Actions {
                algebra: s("kk"),
                dim: 1,
                action: vec![vec![vec![0]], vec![vec![1]]],
            },
        ),
    ]);
    w.right_modules = BTreeMap::from([
        (s("k_right"), module("regular", "k")),
        (s("nakayama_right"), module("regular", "nakayama")),
    ]);
    w.pairs = BTreeMap::from([
        (s("d_free"), pair("d_ext", "k_mod", Functor::T)),
        (s("d_zk"), pair("d_ext", "k_mod", Functor::Z)),
        (s("d3_zk"), pair("d3_ext", "k3_mod", Functor::Z)),
        (s("a2_free"), pair("a2_ext", "kk_reg", Functor::T)),
        (s("a2_z_first"), pair("a2_ext", "kk_first", Functor::Z)),
        (s("a2_z_second"), pair("a2_ext", "kk_second", Functor::Z)),
    ]);
    w.copairs = BTreeMap::from([
        (s("d_cofree"), pair("d_ext", "k_mod", Functor::H)),
        (s("d_zk_co"), pair("d_ext", "k_mod", Functor::Z)),
        (s("a2_cofree"), pair("a2_ext", "kk_reg", Functor::H)),
    ]);
    w.right_pairs = BTreeMap::from([(s("d_zk_right"), pair("d_ext", "k_right", Functor::Z))]);
    w.tuples = BTreeMap::from([
        (s("nakayama_zero_tuple"), tuple("nakayama_ctx", "k_mod", "k_mod")),
        (s("a2_x_only"), tuple("a2_ctx", "k_mod", "k_mod")),
    ]);
    w.cotuples = BTreeMap::from([(s("nakayama_zero_cotuple"), tuple("nakayama_ctx", "k_mod", "k_mod"))]);
    w.right_tuples = BTreeMap::from([(s("nakayama_zero_right"), tuple("nakayama_ctx", "k_right", "k_right"))]);
    w
}
