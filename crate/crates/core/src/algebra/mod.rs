//! Finite-dimensional algebras given by structure constants, together with
//! their one-sided modules, bimodules, Hom spaces and tensor products.

mod bimodule;
mod module;
pub mod quiver;

use std::fmt;
use std::sync::Arc;

pub use bimodule::{hom_from_bimodule, tensor_over, tensor_right_bimodule, tensor_right_left, Bimodule, HomModule, PlainTensor, RightTensor, Tensor};
pub use module::{
    cokernel_module, dual_module, dual_right_module, find_isomorphism, hom_space, image_module, is_exact_at,
    kernel_module, quotient_module, right_cokernel, right_kernel, spin, submodule, HomSpace, LeftModule, ModuleHom,
    RightModule,
};
pub use quiver::{monomial_quiver_algebra, Path, QuiverInfo};
pub use module::EXHAUSTIVE_BUDGET;
pub(crate) use module::{exact_matrices, section_of_rref};

use crate::error::{Error, Result};
use crate::linalg::{FieldSpec, FpMatrix};

/// Associative unital algebra over GF(p) with a fixed basis `b_0..b_{n-1}`.
///
/// Multiplication is stored as the left- and right-regular representations:
/// `lmul[i] * e_j` and `rmul[j] * e_i` are both the coordinates of `b_i b_j`.
#[derive(Clone)]
pub struct Algebra {
    field: FieldSpec,
    dim: usize,
    lmul: Vec<FpMatrix>,
    rmul: Vec<FpMatrix>,
    unit: Vec<u32>,
    generators: Vec<usize>,
    quiver: Option<QuiverInfo>,
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.dim == other.dim && self.unit == other.unit && self.lmul == other.lmul
    }
}
impl Eq for Algebra {}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Algebra<GF({})> dim {}", self.field.p(), self.dim)
    }
}

/// Product algebra `A x B` with its two central idempotents.
#[derive(Clone, Debug)]
pub struct ProductAlgebra {
    pub algebra: Arc<Algebra>,
    pub first_idempotent: Vec<u32>,
    pub second_idempotent: Vec<u32>,
    pub first_dim: usize,
}

impl Algebra {
    /// `table[i][j]` holds the coordinates of `b_i b_j`.
    pub fn from_structure_constants(field: FieldSpec, table: &[Vec<Vec<u32>>], unit: &[u32]) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidAlgebra("the zero ring is not allowed (dim must be >= 1)".into()));
        }
        if unit.len() != n {
            return Err(Error::InvalidAlgebra(format!("unit has {} coordinates, expected {n}", unit.len())));
        }
        let mut lmul = vec![FpMatrix::zeros(field, n, n); n];
        let mut rmul = vec![FpMatrix::zeros(field, n, n); n];
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidAlgebra(format!("table row {i} has {} entries", row.len())));
            }
            for (j, prod) in row.iter().enumerate() {
                if prod.len() != n {
                    return Err(Error::InvalidAlgebra(format!("product b{i}*b{j} has {} coordinates", prod.len())));
                }
                for (k, &v) in prod.iter().enumerate() {
                    let v = v % field.p();
                    lmul[i].set(k, j, v);
                    rmul[j].set(k, i, v);
                }
            }
        }
        let unit: Vec<u32> = unit.iter().map(|&u| u % field.p()).collect();
        let alg = Self::assemble(field, lmul, rmul, unit, None);
        alg.validate()?;
        Ok(alg)
    }

    pub(crate) fn assemble(
        field: FieldSpec,
        lmul: Vec<FpMatrix>,
        rmul: Vec<FpMatrix>,
        unit: Vec<u32>,
        quiver: Option<QuiverInfo>,
    ) -> Self {
        let dim = lmul.len();
        let mut alg = Algebra {
            field,
            dim,
            lmul,
            rmul,
            unit,
            generators: Vec::new(),
            quiver,
        };
        alg.generators = alg.compute_generators();
        alg
    }

    /// GF(p) itself as a one-dimensional algebra.
    pub fn ground_field(field: FieldSpec) -> Self {
        Self::from_structure_constants(field, &[vec![vec![1]]], &[1]).expect("ground field is an algebra")
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn unit(&self) -> &[u32] {
        &self.unit
    }
    /// Matrix of `x -> b_i x`.
    pub fn left_mult(&self, i: usize) -> &FpMatrix {
        &self.lmul[i]
    }
    /// Matrix of `x -> x b_i`.
    pub fn right_mult(&self, i: usize) -> &FpMatrix {
        &self.rmul[i]
    }
    /// Basis indices generating the algebra as a unital algebra.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }
    pub fn quiver(&self) -> Option<&QuiverInfo> {
        self.quiver.as_ref()
    }

    /// Coordinates of `b_i b_j`.
    pub fn product(&self, i: usize, j: usize) -> Vec<u32> {
        self.lmul[i].col(j)
    }

    pub fn mul(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        self.left_mult_by(x).mul_vec(y)
    }

    /// Left multiplication by an arbitrary element.
    pub fn left_mult_by(&self, x: &[u32]) -> FpMatrix {
        FpMatrix::combination(self.field, (self.dim, self.dim), x, &self.lmul)
    }

    pub fn right_mult_by(&self, x: &[u32]) -> FpMatrix {
        FpMatrix::combination(self.field, (self.dim, self.dim), x, &self.rmul)
    }

    pub fn basis_vector(&self, i: usize) -> Vec<u32> {
        let mut v = vec![0; self.dim];
        v[i] = 1;
        v
    }

    pub fn table(&self) -> Vec<Vec<Vec<u32>>> {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.product(i, j)).collect())
            .collect()
    }

    /// Checks associativity on all basis triples and the two-sided unit law.
    pub fn validate(&self) -> Result<()> {
        if self.dim == 0 {
            return Err(Error::InvalidAlgebra("the zero ring is not allowed (dim must be >= 1)".into()));
        }
        let u = self.left_mult_by(&self.unit);
        let id = FpMatrix::identity(self.field, self.dim);
        if u != id || self.right_mult_by(&self.unit) != id {
            return Err(Error::InvalidAlgebra("unit law violated".into()));
        }
        // (b_i b_j) b_k = b_i (b_j b_k)  <=>  L_{b_i b_j} = L_i L_j
        for i in 0..self.dim {
            for j in 0..self.dim {
                let lhs = self.left_mult_by(&self.product(i, j));
                let rhs = self.lmul[i].mul(&self.lmul[j]);
                if lhs != rhs {
                    let k = (0..self.dim).find(|&k| lhs.col(k) != rhs.col(k)).unwrap_or(0);
                    return Err(Error::InvalidAlgebra(format!(
                        "associativity fails on basis triple ({i}, {j}, {k})"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn opposite(&self) -> Algebra {
        Algebra::assemble(
            self.field,
            self.rmul.clone(),
            self.lmul.clone(),
            self.unit.clone(),
            self.quiver.as_ref().map(QuiverInfo::opposite),
        )
    }

    pub fn is_commutative(&self) -> bool {
        self.lmul == self.rmul
    }

    fn compute_generators(&self) -> Vec<usize> {
        let mut gens: Vec<usize> = Vec::new();
        let unit = FpMatrix::row_vector(self.field, &self.unit);
        let mut span = unit.row_space();
        for i in 0..self.dim {
            let r = span.rref();
            if FpMatrix::coordinates_in(&r, &self.basis_vector(i)).is_some() {
                continue;
            }
            gens.push(i);
            let ops: Vec<FpMatrix> = gens.iter().map(|&g| self.lmul[g].clone()).collect();
            span = spin(&unit, &ops);
            if span.rows() == self.dim {
                break;
            }
        }
        gens
    }

    /// Product algebra with componentwise multiplication. Basis: first the
    /// basis of `a`, then that of `b`.
    pub fn product_algebra(a: &Algebra, b: &Algebra) -> Result<ProductAlgebra> {
        if a.field != b.field {
            return Err(Error::FieldMismatch(a.field.p(), b.field.p()));
        }
        let f = a.field;
        let (na, nb) = (a.dim, b.dim);
        let n = na + nb;
        let zb = FpMatrix::zeros(f, nb, nb);
        let za = FpMatrix::zeros(f, na, na);
        let lmul = (0..na)
            .map(|i| a.lmul[i].block_diag(&zb))
            .chain((0..nb).map(|i| za.block_diag(&b.lmul[i])))
            .collect();
        let rmul = (0..na)
            .map(|i| a.rmul[i].block_diag(&zb))
            .chain((0..nb).map(|i| za.block_diag(&b.rmul[i])))
            .collect();
        let mut unit = a.unit.clone();
        unit.extend_from_slice(&b.unit);
        let mut first = a.unit.clone();
        first.extend(std::iter::repeat_n(0, nb));
        let mut second = vec![0; na];
        second.extend_from_slice(&b.unit);
        let alg = Algebra::assemble(f, lmul, rmul, unit, None);
        debug_assert!(alg.validate().is_ok());
        debug_assert_eq!(alg.dim, n);
        Ok(ProductAlgebra {
            algebra: Arc::new(alg),
            first_idempotent: first,
            second_idempotent: second,
            first_dim: na,
        })
    }

    /// Whether `phi` (rows indexed by the basis of `other`) is an algebra
    /// isomorphism `self -> other`.
    pub fn is_isomorphism_to(&self, other: &Algebra, phi: &FpMatrix) -> bool {
        if self.dim != other.dim || !phi.is_invertible() || phi.mul_vec(&self.unit) != other.unit {
            return false;
        }
        for i in 0..self.dim {
            for j in 0..self.dim {
                let lhs = phi.mul_vec(&self.product(i, j));
                let rhs = other.mul(&phi.col(i), &phi.col(j));
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }
}

/// Algebras are compared structurally; pointer equality is a fast path.
pub(crate) fn same_algebra(a: &Arc<Algebra>, b: &Arc<Algebra>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

pub fn opposite_algebra(a: &Algebra) -> Algebra {
    a.opposite()
}

pub fn product_algebra(a: &Algebra, b: &Algebra) -> Result<ProductAlgebra> {
    Algebra::product_algebra(a, b)
}

pub fn validate_algebra(a: &Algebra) -> Result<()> {
    a.validate()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u32) -> FieldSpec {
        FieldSpec::new(p).unwrap()
    }

    /// GF(2)[y]/(y^2) written out by hand: basis {1, y}.
    pub(crate) fn dual_numbers(p: u32) -> Algebra {
        let table = vec![
            vec![vec![1, 0], vec![0, 1]],
            vec![vec![0, 1], vec![0, 0]],
        ];
        Algebra::from_structure_constants(gf(p), &table, &[1, 0]).unwrap()
    }

    #[test]
    fn ground_field_and_dual_numbers_validate() {
        assert!(Algebra::ground_field(gf(2)).validate().is_ok());
        let d = dual_numbers(2);
        assert!(d.validate().is_ok());
        assert!(d.is_commutative());
        assert_eq!(d.generators(), &[1]);
    }

    #[test]
    fn broken_unit_is_reported() {
        // b1 b1 = b2, unit declared as b2 which is not a two-sided identity.
        let table = vec![
            vec![vec![0, 1], vec![0, 0]],
            vec![vec![0, 0], vec![0, 0]],
        ];
        let err = Algebra::from_structure_constants(gf(2), &table, &[0, 1]).unwrap_err();
        assert!(err.to_string().contains("unit law violated"), "{err}");
    }

    #[test]
    fn nonassociative_table_names_triple() {
        // Basis {1, a, b} with a*a = b, a*b = 0 but b*a = a: not associative.
        let table = vec![
            vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]],
            vec![vec![0, 1, 0], vec![0, 0, 1], vec![0, 0, 0]],
            vec![vec![0, 0, 1], vec![0, 1, 0], vec![0, 0, 0]],
        ];
        let err = Algebra::from_structure_constants(gf(2), &table, &[1, 0, 0]).unwrap_err();
        assert!(err.to_string().contains("triple"), "{err}");
    }

    #[test]
    fn zero_ring_rejected() {
        assert!(Algebra::from_structure_constants(gf(2), &[], &[]).is_err());
    }

    #[test]
    fn opposite_is_involutive_and_transposes_table() {
        let d = dual_numbers(3);
        assert_eq!(d.opposite(), d);
        let a2 = monomial_quiver_algebra(gf(2), 2, &[(0, 1)], &[]).unwrap();
        let op = a2.opposite();
        assert_ne!(op, a2);
        assert_eq!(op.opposite(), a2);
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(op.product(i, j), a2.product(j, i));
            }
        }
        let k = Algebra::ground_field(gf(5));
        assert_eq!(k.opposite(), k);
    }

    #[test]
    fn product_algebras() {
        let k = Algebra::ground_field(gf(2));
        let kk = Algebra::product_algebra(&k, &k).unwrap();
        assert_eq!(kk.algebra.dim(), 2);
        assert!(kk.algebra.validate().is_ok());
        let e1 = &kk.first_idempotent;
        let e2 = &kk.second_idempotent;
        assert_eq!(kk.algebra.mul(e1, e1), *e1);
        assert_eq!(kk.algebra.mul(e1, e2), vec![0, 0]);
        let g3 = Algebra::ground_field(gf(3));
        let d = dual_numbers(3);
        let p = Algebra::product_algebra(&g3, &d).unwrap();
        assert_eq!(p.algebra.dim(), 3);
        assert!(p.algebra.validate().is_ok());
        assert!(Algebra::product_algebra(&g3, &k).is_err());
    }
}
