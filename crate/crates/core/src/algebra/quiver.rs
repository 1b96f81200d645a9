//! Path algebras of finite quivers modulo monomial (zero) relations.
//!
//! An arrow `a: s -> t` maps `V_s -> V_t` in a representation, so the product
//! `p * q` of two paths means "first `q`, then `p`" and left modules are the
//! same thing as representations.

use std::sync::Arc;

use super::{Algebra, LeftModule};
use crate::error::{Error, Result};
use crate::linalg::{FieldSpec, FpMatrix};

/// Hard cap on the length of surviving paths before the relations are
/// declared non-admissible.
const MAX_PATH_LENGTH: usize = 64;
const MAX_BASIS: usize = 4096;

/// A path listed by its arrows in traversal order; length-zero paths are the
/// vertex idempotents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverInfo {
    vertices: usize,
    arrows: Vec<(usize, usize)>,
    relations: Vec<Vec<usize>>,
    paths: Vec<Path>,
}

impl QuiverInfo {
    pub fn vertices(&self) -> usize {
        self.vertices
    }
    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }
    pub fn relations(&self) -> &[Vec<usize>] {
        &self.relations
    }
    /// Basis paths, indexed like the algebra basis.
    pub fn paths(&self) -> &[Path] {
        &self.paths
    }

    /// Basis index of the vertex idempotent `e_v`.
    pub fn vertex_index(&self, v: usize) -> usize {
        v
    }

    /// Basis index of the length-one path along arrow `a`.
    pub fn arrow_index(&self, a: usize) -> Option<usize> {
        self.paths.iter().position(|p| p.arrows == [a])
    }

    /// Same basis, read in the opposite quiver.
    pub fn opposite(&self) -> QuiverInfo {
        QuiverInfo {
            vertices: self.vertices,
            arrows: self.arrows.iter().map(|&(s, t)| (t, s)).collect(),
            relations: self
                .relations
                .iter()
                .map(|r| r.iter().rev().copied().collect())
                .collect(),
            paths: self
                .paths
                .iter()
                .map(|p| Path {
                    source: p.target,
                    target: p.source,
                    arrows: p.arrows.iter().rev().copied().collect(),
                })
                .collect(),
        }
    }

    /// Left module from a representation: `dims[v] = dim V_v` and
    /// `arrow_maps[a]` is the `dims[t] x dims[s]` matrix of arrow `a: s -> t`.
    pub fn representation(&self, algebra: &Arc<Algebra>, dims: &[usize], arrow_maps: &[FpMatrix]) -> Result<LeftModule> {
        if dims.len() != self.vertices {
            return Err(Error::InvalidModule(format!(
                "{} vertex dimensions for {} vertices",
                dims.len(),
                self.vertices
            )));
        }
        if arrow_maps.len() != self.arrows.len() {
            return Err(Error::InvalidModule(format!(
                "{} arrow maps for {} arrows",
                arrow_maps.len(),
                self.arrows.len()
            )));
        }
        let field = algebra.field();
        for (a, (&(s, t), m)) in self.arrows.iter().zip(arrow_maps).enumerate() {
            if m.rows() != dims[t] || m.cols() != dims[s] {
                return Err(Error::InvalidModule(format!(
                    "arrow {a} needs a {}x{} matrix, got {}x{}",
                    dims[t],
                    dims[s],
                    m.rows(),
                    m.cols()
                )));
            }
        }
        let mut offsets = vec![0; self.vertices + 1];
        for v in 0..self.vertices {
            offsets[v + 1] = offsets[v] + dims[v];
        }
        let total = offsets[self.vertices];
        let action = self
            .paths
            .iter()
            .map(|p| {
                let mut block = FpMatrix::identity(field, dims[p.source]);
                for &a in &p.arrows {
                    block = arrow_maps[a].mul(&block);
                }
                block.embed(total, total, offsets[p.target], offsets[p.source])
            })
            .collect();
        LeftModule::new(algebra.clone(), total, action)
    }

    /// The simple module concentrated at vertex `v`.
    pub fn simple(&self, algebra: &Arc<Algebra>, v: usize) -> LeftModule {
        let mut dims = vec![0; self.vertices];
        dims[v] = 1;
        let maps: Vec<FpMatrix> = self
            .arrows
            .iter()
            .map(|&(s, t)| FpMatrix::zeros(algebra.field(), dims[t], dims[s]))
            .collect();
        self.representation(algebra, &dims, &maps)
            .expect("simple representation is a module")
    }
}

fn contains_relation(arrows: &[usize], relations: &[Vec<usize>]) -> bool {
    relations
        .iter()
        .any(|r| !r.is_empty() && arrows.windows(r.len()).any(|w| w == r.as_slice()))
}

/// Path algebra of the quiver with `vertices` vertices and the listed arrows
/// `(source, target)`, modulo the ideal generated by the zero relations.
pub fn monomial_quiver_algebra(
    field: FieldSpec,
    vertices: usize,
    arrows: &[(usize, usize)],
    zero_relations: &[Vec<usize>],
) -> Result<Algebra> {
    if vertices == 0 {
        return Err(Error::InvalidAlgebra("the zero ring is not allowed (dim must be >= 1)".into()));
    }
    for (a, &(s, t)) in arrows.iter().enumerate() {
        if s >= vertices || t >= vertices {
            return Err(Error::InvalidAlgebra(format!("arrow {a} leaves the vertex set")));
        }
    }
    for rel in zero_relations {
        if rel.is_empty() {
            return Err(Error::InvalidAlgebra("empty relation".into()));
        }
        for w in rel.windows(2) {
            if w[0] >= arrows.len() || w[1] >= arrows.len() || arrows[w[0]].1 != arrows[w[1]].0 {
                return Err(Error::InvalidAlgebra(format!("relation {rel:?} is not a path")));
            }
        }
        if rel.iter().any(|&a| a >= arrows.len()) {
            return Err(Error::InvalidAlgebra(format!("relation {rel:?} names a missing arrow")));
        }
    }

    let mut paths: Vec<Path> = (0..vertices)
        .map(|v| Path {
            source: v,
            target: v,
            arrows: Vec::new(),
        })
        .collect();
    let mut layer: Vec<Path> = arrows
        .iter()
        .enumerate()
        .map(|(a, &(s, t))| Path {
            source: s,
            target: t,
            arrows: vec![a],
        })
        .filter(|p| !contains_relation(&p.arrows, zero_relations))
        .collect();
    let mut length = 1;
    while !layer.is_empty() {
        if length > MAX_PATH_LENGTH || paths.len() + layer.len() > MAX_BASIS {
            return Err(Error::InfiniteBasis(length.min(MAX_PATH_LENGTH)));
        }
        let mut next = Vec::new();
        for p in &layer {
            for (a, &(s, t)) in arrows.iter().enumerate() {
                if s != p.target {
                    continue;
                }
                let mut seq = p.arrows.clone();
                seq.push(a);
                if !contains_relation(&seq, zero_relations) {
                    next.push(Path {
                        source: p.source,
                        target: t,
                        arrows: seq,
                    });
                }
            }
        }
        paths.append(&mut layer);
        layer = next;
        length += 1;
    }

    let n = paths.len();
    let mut lmul = vec![FpMatrix::zeros(field, n, n); n];
    let mut rmul = vec![FpMatrix::zeros(field, n, n); n];
    for (i, p) in paths.iter().enumerate() {
        for (j, q) in paths.iter().enumerate() {
            // p * q: first q, then p
            if q.target != p.source {
                continue;
            }
            let mut seq = q.arrows.clone();
            seq.extend_from_slice(&p.arrows);
            if let Some(k) = paths
                .iter()
                .position(|r| r.source == q.source && r.target == p.target && r.arrows == seq)
            {
                lmul[i].set(k, j, 1);
                rmul[j].set(k, i, 1);
            }
        }
    }
    let mut unit = vec![0; n];
    for u in unit.iter_mut().take(vertices) {
        *u = 1;
    }
    let info = QuiverInfo {
        vertices,
        arrows: arrows.to_vec(),
        relations: zero_relations.to_vec(),
        paths,
    };
    let alg = Algebra::assemble(field, lmul, rmul, unit, Some(info));
    alg.validate()?;
    Ok(alg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::hom_space;

    fn gf(p: u32) -> FieldSpec {
        FieldSpec::new(p).unwrap()
    }

    #[test]
    fn single_vertex_is_the_field() {
        let a = monomial_quiver_algebra(gf(3), 1, &[], &[]).unwrap();
        assert_eq!(a, Algebra::ground_field(gf(3)));
    }

    #[test]
    fn a2_has_three_paths() {
        let a = monomial_quiver_algebra(gf(2), 2, &[(0, 1)], &[]).unwrap();
        assert_eq!(a.dim(), 3);
        let q = a.quiver().unwrap();
        assert_eq!(q.arrow_index(0), Some(2));
        // arrow * e_0 = arrow, e_0 * arrow = 0
        assert_eq!(a.product(2, 0), vec![0, 0, 1]);
        assert_eq!(a.product(0, 2), vec![0, 0, 0]);
        assert_eq!(a.product(1, 2), vec![0, 0, 1]);
    }

    #[test]
    fn loop_with_square_relation_is_dual_numbers() {
        let a = monomial_quiver_algebra(gf(2), 1, &[(0, 0)], &[vec![0, 0]]).unwrap();
        let table = vec![vec![vec![1, 0], vec![0, 1]], vec![vec![0, 1], vec![0, 0]]];
        let d = Algebra::from_structure_constants(gf(2), &table, &[1, 0]).unwrap();
        assert_eq!(a, d);
    }

    #[test]
    fn unbounded_loop_is_rejected() {
        let err = monomial_quiver_algebra(gf(2), 1, &[(0, 0)], &[]).unwrap_err();
        assert!(matches!(err, Error::InfiniteBasis(_)));
    }

    #[test]
    fn cyclic_nakayama_radical_square_zero() {
        let a = monomial_quiver_algebra(gf(2), 2, &[(0, 1), (1, 0)], &[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(a.dim(), 4);
        assert!(a.validate().is_ok());
    }

    #[test]
    fn representations_and_simples() {
        let a = Arc::new(monomial_quiver_algebra(gf(2), 2, &[(0, 1)], &[]).unwrap());
        let q = a.quiver().unwrap();
        let p1 = q
            .representation(&a, &[1, 1], &[FpMatrix::identity(gf(2), 1)])
            .unwrap();
        assert_eq!(hom_space(&p1, &LeftModule::regular(a.clone())).unwrap().dim(), 1);
        let s1 = q.simple(&a, 0);
        let s2 = q.simple(&a, 1);
        assert_eq!(hom_space(&p1, &s1).unwrap().dim(), 1);
        assert_eq!(hom_space(&p1, &s2).unwrap().dim(), 0);
        assert!(q
            .representation(&a, &[1, 1], &[FpMatrix::identity(gf(2), 2)])
            .is_err());
    }

    #[test]
    fn opposite_quiver_reverses_arrows() {
        let a = monomial_quiver_algebra(gf(2), 2, &[(0, 1)], &[]).unwrap();
        let op = a.opposite();
        let q = op.quiver().unwrap();
        assert_eq!(q.arrows(), &[(1, 0)]);
        let arc = Arc::new(op.clone());
        let rep = q.representation(&arc, &[1, 1], &[FpMatrix::identity(gf(2), 1)]);
        assert!(rep.is_ok());
    }
}
