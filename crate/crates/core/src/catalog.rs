//! Small algebras used throughout the test corpus and the canned workspace.

use std::sync::Arc;

use crate::algebra::{monomial_quiver_algebra, Algebra, Bimodule};
use crate::linalg::{FieldSpec, FpMatrix};
use crate::trivext::TrivialExtension;

/// `k[y]/(y^2)`: one vertex, one loop, relation `yy`.
pub fn dual_numbers(field: FieldSpec) -> Algebra {
    monomial_quiver_algebra(field, 1, &[(0, 0)], &[vec![0, 0]]).expect("admissible")
}

/// Path algebra of `0 -> 1`; dimension 3.
pub fn a2(field: FieldSpec) -> Algebra {
    monomial_quiver_algebra(field, 2, &[(0, 1)], &[]).expect("admissible")
}

/// Two-cycle `0 <-> 1` with radical square zero; dimension 4, self-injective.
pub fn cyclic_nakayama(field: FieldSpec) -> Algebra {
    monomial_quiver_algebra(field, 2, &[(0, 1), (1, 0)], &[vec![0, 1], vec![1, 0]]).expect("admissible")
}

/// `k<x, y>/(x^2, y^2, xy, yx)`: local, radical square zero, two-dimensional
/// socle, hence not Gorenstein. Dimension 3.
pub fn local_two_loops(field: FieldSpec) -> Algebra {
    monomial_quiver_algebra(
        field,
        1,
        &[(0, 0), (0, 0)],
        &[vec![0, 0], vec![1, 1], vec![0, 1], vec![1, 0]],
    )
    .expect("admissible")
}

/// `k ⋉ k`, whose total algebra is [`dual_numbers`].
pub fn field_extension(field: FieldSpec) -> TrivialExtension {
    let k = Arc::new(Algebra::ground_field(field));
    TrivialExtension::new(k.clone(), Bimodule::regular(k)).expect("regular bimodule")
}

/// `(k × k) ⋉ k` with `k` a module over the second factor on the left and
/// the first on the right: the lower triangular matrix ring, of dimension 3.
pub fn triangular_extension(field: FieldSpec) -> TrivialExtension {
    let k = Algebra::ground_field(field);
    let r = Algebra::product_algebra(&k, &k).expect("same field").algebra;
    let one = |v: i64| FpMatrix::from_slices(field, &[&[v]]);
    let m = Bimodule::new(r.clone(), r.clone(), 1, vec![one(0), one(1)], vec![one(1), one(0)])
        .expect("legs through the two factors");
    TrivialExtension::new(r, m).expect("bimodule over the base")
}
