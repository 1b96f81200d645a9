//! Workspace files: named algebras, bimodules, modules, extensions, Morita
//! contexts and instances, in TOML with integer entries only.

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use trivext::algebra::{
    hom_from_bimodule, monomial_quiver_algebra, tensor_over, tensor_right_bimodule, Algebra, Bimodule, LeftModule,
    RightModule,
};
use trivext::linalg::{FieldSpec, FpMatrix};
use trivext::morita::{
    morita_ring, CotupleModule, MoritaContext, MoritaRing, RightTupleModule, TupleModule,
};
use trivext::trivext::{
    functor_h, functor_t, functor_z_copair, functor_z_pair, module_to_copair, module_to_pair,
    module_to_right_pair, CopairModule, PairModule, RightPairModule, TrivialExtension,
};

use crate::CliError;

pub const SCHEMA_VERSION: u32 = 1;

/// A matrix as a list of rows.
pub type Rows = Vec<Vec<u32>>;

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WorkspaceFile {
    pub schema_version: u32,
    /// Default prime for algebras that do not name their own.
    pub field: u32,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub algebras: BTreeMap<String, AlgebraSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub bimodules: BTreeMap<String, BimoduleSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub extensions: BTreeMap<String, ExtensionSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub contexts: BTreeMap<String, ContextSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub modules: BTreeMap<String, ModuleSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub right_modules: BTreeMap<String, ModuleSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub pairs: BTreeMap<String, PairSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub copairs: BTreeMap<String, PairSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub right_pairs: BTreeMap<String, PairSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub tuples: BTreeMap<String, TupleSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub cotuples: BTreeMap<String, TupleSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub right_tuples: BTreeMap<String, TupleSpec>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum AlgebraSpec {
    Field {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        field: Option<u32>,
    },
    /// Path algebra of a quiver modulo paths (lists of arrow indices).
    Quiver {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        field: Option<u32>,
        vertices: usize,
        arrows: Vec<[usize; 2]>,
        #[serde(default)]
        relations: Vec<Vec<usize>>,
    },
    /// `table[i][j]` holds the coordinates of `b_i b_j`.
    Constants {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        field: Option<u32>,
        table: Vec<Vec<Vec<u32>>>,
        unit: Vec<u32>,
    },
    Product {
        factors: [String; 2],
    },
    Opposite {
        of: String,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BimoduleSpec {
    Regular {
        algebra: String,
    },
    Zero {
        left: String,
        right: String,
    },
    Actions {
        left: String,
        right: String,
        dim: usize,
        left_action: Vec<Rows>,
        right_action: Vec<Rows>,
    },
    Sum {
        summands: [String; 2],
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ModuleSpec {
    Regular {
        algebra: String,
    },
    Zero {
        algebra: String,
    },
    /// Simple module at a vertex of a quiver algebra.
    Simple {
        algebra: String,
        vertex: usize,
    },
    Actions {
        algebra: String,
        dim: usize,
        action: Vec<Rows>,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExtensionSpec {
    pub base: String,
    pub bimodule: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ContextSpec {
    pub a: String,
    pub b: String,
    pub u: String,
    pub v: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Functor {
    T,
    Z,
    H,
}

/// An instance over a trivial extension, given either by a functor applied
/// to a base module, by an explicit structure map, or by a module over the
/// total algebra.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairSpec {
    pub extension: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub module: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub functor: Option<Functor>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub map: Option<Rows>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub total: Option<String>,
}

/// A tuple over a Morita context; missing maps are zero.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TupleSpec {
    pub context: String,
    pub x: String,
    pub y: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f: Option<Rows>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g: Option<Rows>,
}

impl WorkspaceFile {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let file: WorkspaceFile = toml::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
        if file.schema_version != SCHEMA_VERSION {
            return Err(CliError::Schema(file.schema_version));
        }
        Ok(file)
    }

    pub fn read(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(path.display().to_string(), e.to_string()))?;
        Self::parse(&text)
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("workspace files serialize")
    }
}

/// Everything in a workspace file, built and validated.
#[derive(Debug)]
pub struct Workspace {
    pub algebras: BTreeMap<String, Arc<Algebra>>,
    pub bimodules: BTreeMap<String, Bimodule>,
    pub extensions: BTreeMap<String, TrivialExtension>,
    pub contexts: BTreeMap<String, MoritaRing>,
    pub modules: BTreeMap<String, LeftModule>,
    pub right_modules: BTreeMap<String, RightModule>,
    pub pairs: BTreeMap<String, (String, PairModule)>,
    pub copairs: BTreeMap<String, (String, CopairModule)>,
    pub right_pairs: BTreeMap<String, (String, RightPairModule)>,
    pub tuples: BTreeMap<String, (String, TupleModule)>,
    pub cotuples: BTreeMap<String, (String, CotupleModule)>,
    pub right_tuples: BTreeMap<String, (String, RightTupleModule)>,
}

fn entity(kind: &str, name: &str, e: impl std::fmt::Display) -> CliError {
    CliError::Invalid(format!("{kind} `{name}`: {e}"))
}

fn missing(kind: &str, name: &str, what: &str, target: &str) -> CliError {
    CliError::Invalid(format!("{kind} `{name}`: unknown {what} `{target}`"))
}

fn field(p: u32) -> Result<FieldSpec, String> {
    FieldSpec::new(p).map_err(|e| e.to_string())
}

fn matrix(f: FieldSpec, rows: usize, cols: usize, data: &Rows) -> Result<FpMatrix, String> {
    if data.len() != rows || data.iter().any(|r| r.len() != cols) {
        return Err(format!("expected a {rows}x{cols} matrix"));
    }
    let flat = data.iter().flatten().map(|&v| v % f.p()).collect();
    FpMatrix::new(f, rows, cols, flat).map_err(|e| e.to_string())
}

fn matrices(f: FieldSpec, dim: usize, data: &[Rows]) -> Result<Vec<FpMatrix>, String> {
    data.iter().map(|m| matrix(f, dim, dim, m)).collect()
}

type TupleParts<'a> = (&'a MoritaRing, Option<(LeftModule, LeftModule)>, Option<(RightModule, RightModule)>);

impl Workspace {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        Self::build(&WorkspaceFile::read(path)?)
    }

    pub fn build(file: &WorkspaceFile) -> Result<Self, CliError> {
        field(file.field).map_err(|e| CliError::Invalid(format!("workspace field: {e}")))?;
        let mut names = BTreeSet::new();
        for name in file.algebras.keys().chain(file.extensions.keys()).chain(file.contexts.keys()) {
            if !names.insert(name) {
                return Err(CliError::Invalid(format!(
                    "`{name}` names more than one of algebra, extension, context"
                )));
            }
        }
        let mut targets = BTreeSet::new();
        let target_names = file
            .modules
            .keys()
            .chain(file.right_modules.keys())
            .chain(file.pairs.keys())
            .chain(file.copairs.keys())
            .chain(file.right_pairs.keys())
            .chain(file.tuples.keys())
            .chain(file.cotuples.keys())
            .chain(file.right_tuples.keys());
        for name in target_names {
            if !targets.insert(name) {
                return Err(CliError::Invalid(format!(
                    "`{name}` names more than one module or instance"
                )));
            }
        }
        let mut ws = Workspace {
            algebras: BTreeMap::new(),
            bimodules: BTreeMap::new(),
            extensions: BTreeMap::new(),
            contexts: BTreeMap::new(),
            modules: BTreeMap::new(),
            right_modules: BTreeMap::new(),
            pairs: BTreeMap::new(),
            copairs: BTreeMap::new(),
            right_pairs: BTreeMap::new(),
            tuples: BTreeMap::new(),
            cotuples: BTreeMap::new(),
            right_tuples: BTreeMap::new(),
        };
        for name in file.algebras.keys() {
            ws.algebra(file, name, &mut Vec::new())?;
        }
        for name in file.bimodules.keys() {
            ws.bimodule(file, name, &mut Vec::new())?;
        }
        for (name, spec) in &file.extensions {
            let base = ws.algebras.get(&spec.base).ok_or_else(|| missing("extension", name, "algebra", &spec.base))?;
            let m = ws
                .bimodules
                .get(&spec.bimodule)
                .ok_or_else(|| missing("extension", name, "bimodule", &spec.bimodule))?;
            let t = TrivialExtension::new(base.clone(), m.clone()).map_err(|e| entity("extension", name, e))?;
            ws.extensions.insert(name.clone(), t);
        }
        for (name, spec) in &file.contexts {
            let alg = |n: &String| ws.algebras.get(n).cloned().ok_or_else(|| missing("context", name, "algebra", n));
            let bim = |n: &String| ws.bimodules.get(n).cloned().ok_or_else(|| missing("context", name, "bimodule", n));
            let ctx = MoritaContext::new(alg(&spec.a)?, alg(&spec.b)?, bim(&spec.u)?, bim(&spec.v)?)
                .map_err(|e| entity("context", name, e))?;
            let ring = morita_ring(&ctx).map_err(|e| entity("context", name, e))?;
            ws.contexts.insert(name.clone(), ring);
        }
        for (name, spec) in &file.modules {
            let m = ws.left_module(spec).map_err(|e| entity("module", name, e))?;
            ws.modules.insert(name.clone(), m);
        }
        for (name, spec) in &file.right_modules {
            let m = ws.right_module(spec).map_err(|e| entity("right module", name, e))?;
            ws.right_modules.insert(name.clone(), m);
        }
        for (name, spec) in &file.pairs {
            let p = ws.pair(spec).map_err(|e| entity("pair", name, e))?;
            ws.pairs.insert(name.clone(), (spec.extension.clone(), p));
        }
        for (name, spec) in &file.copairs {
            let c = ws.copair(spec).map_err(|e| entity("copair", name, e))?;
            ws.copairs.insert(name.clone(), (spec.extension.clone(), c));
        }
        for (name, spec) in &file.right_pairs {
            let p = ws.right_pair(spec).map_err(|e| entity("right pair", name, e))?;
            ws.right_pairs.insert(name.clone(), (spec.extension.clone(), p));
        }
        for (name, spec) in &file.tuples {
            let t = ws.tuple(spec).map_err(|e| entity("tuple", name, e))?;
            ws.tuples.insert(name.clone(), (spec.context.clone(), t));
        }
        for (name, spec) in &file.cotuples {
            let t = ws.cotuple(spec).map_err(|e| entity("cotuple", name, e))?;
            ws.cotuples.insert(name.clone(), (spec.context.clone(), t));
        }
        for (name, spec) in &file.right_tuples {
            let t = ws.right_tuple(spec).map_err(|e| entity("right tuple", name, e))?;
            ws.right_tuples.insert(name.clone(), (spec.context.clone(), t));
        }
        Ok(ws)
    }

    /// Entity counts by section, in file order of sections.
    pub fn counts(&self) -> BTreeMap<&'static str, usize> {
        BTreeMap::from([
            ("algebras", self.algebras.len()),
            ("bimodules", self.bimodules.len()),
            ("extensions", self.extensions.len()),
            ("contexts", self.contexts.len()),
            ("modules", self.modules.len()),
            ("right_modules", self.right_modules.len()),
            ("pairs", self.pairs.len()),
            ("copairs", self.copairs.len()),
            ("right_pairs", self.right_pairs.len()),
            ("tuples", self.tuples.len()),
            ("cotuples", self.cotuples.len()),
            ("right_tuples", self.right_tuples.len()),
        ])
    }

    pub fn instance_count(&self) -> usize {
        self.pairs.len()
            + self.copairs.len()
            + self.right_pairs.len()
            + self.tuples.len()
            + self.cotuples.len()
            + self.right_tuples.len()
    }

    fn algebra(&mut self, file: &WorkspaceFile, name: &str, stack: &mut Vec<String>) -> Result<Arc<Algebra>, CliError> {
        if let Some(a) = self.algebras.get(name) {
            return Ok(a.clone());
        }
        if stack.iter().any(|s| s == name) {
            return Err(CliError::Invalid(format!("algebra `{name}`: definition is cyclic")));
        }
        let spec = file
            .algebras
            .get(name)
            .ok_or_else(|| CliError::Invalid(format!("unknown algebra `{name}`")))?;
        stack.push(name.to_string());
        let own = |p: &Option<u32>| field(p.unwrap_or(file.field)).map_err(|e| entity("algebra", name, e));
        let alg = match spec {
            AlgebraSpec::Field { field } => Algebra::ground_field(own(field)?),
            AlgebraSpec::Quiver {
                field,
                vertices,
                arrows,
                relations,
            } => {
                let arrows: Vec<(usize, usize)> = arrows.iter().map(|a| (a[0], a[1])).collect();
                monomial_quiver_algebra(own(field)?, *vertices, &arrows, relations)
                    .map_err(|e| entity("algebra", name, e))?
            }
            AlgebraSpec::Constants { field, table, unit } => {
                Algebra::from_structure_constants(own(field)?, table, unit).map_err(|e| entity("algebra", name, e))?
            }
            AlgebraSpec::Product { factors } => {
                let a = self.algebra(file, &factors[0], stack)?;
                let b = self.algebra(file, &factors[1], stack)?;
                let p = Algebra::product_algebra(&a, &b).map_err(|e| entity("algebra", name, e))?;
                Arc::try_unwrap(p.algebra).unwrap_or_else(|a| (*a).clone())
            }
            AlgebraSpec::Opposite { of } => self.algebra(file, of, stack)?.opposite(),
        };
        stack.pop();
        let alg = Arc::new(alg);
        self.algebras.insert(name.to_string(), alg.clone());
        Ok(alg)
    }

    fn bimodule(&mut self, file: &WorkspaceFile, name: &str, stack: &mut Vec<String>) -> Result<Bimodule, CliError> {
        if let Some(b) = self.bimodules.get(name) {
            return Ok(b.clone());
        }
        if stack.iter().any(|s| s == name) {
            return Err(CliError::Invalid(format!("bimodule `{name}`: definition is cyclic")));
        }
        let spec = file
            .bimodules
            .get(name)
            .ok_or_else(|| CliError::Invalid(format!("unknown bimodule `{name}`")))?;
        stack.push(name.to_string());
        let alg = |n: &String| {
            self.algebras
                .get(n)
                .cloned()
                .ok_or_else(|| missing("bimodule", name, "algebra", n))
        };
        let b = match spec {
            BimoduleSpec::Regular { algebra } => Bimodule::regular(alg(algebra)?),
            BimoduleSpec::Zero { left, right } => Bimodule::zero(alg(left)?, alg(right)?),
            BimoduleSpec::Actions {
                left,
                right,
                dim,
                left_action,
                right_action,
            } => {
                let (l, r) = (alg(left)?, alg(right)?);
                let f = l.field();
                let la = matrices(f, *dim, left_action).map_err(|e| entity("bimodule", name, e))?;
                let ra = matrices(f, *dim, right_action).map_err(|e| entity("bimodule", name, e))?;
                Bimodule::new(l, r, *dim, la, ra).map_err(|e| entity("bimodule", name, e))?
            }
            BimoduleSpec::Sum { summands } => {
                let a = self.bimodule(file, &summands[0], stack)?;
                let b = self.bimodule(file, &summands[1], stack)?;
                if **a.left_algebra() != **b.left_algebra() || **a.right_algebra() != **b.right_algebra() {
                    return Err(entity("bimodule", name, "summands live over different algebras"));
                }
                a.direct_sum(&b)
            }
        };
        stack.pop();
        self.bimodules.insert(name.to_string(), b.clone());
        Ok(b)
    }

    /// Algebras, totals of extensions and context rings, by name.
    pub fn any_algebra(&self, name: &str) -> Option<Arc<Algebra>> {
        self.algebras
            .get(name)
            .cloned()
            .or_else(|| self.extensions.get(name).map(|t| t.total().clone()))
            .or_else(|| self.contexts.get(name).map(|r| r.lambda().clone()))
    }

    fn left_module(&self, spec: &ModuleSpec) -> Result<LeftModule, String> {
        let name = spec_algebra(spec);
        let alg = self.any_algebra(name).ok_or_else(|| format!("unknown algebra `{name}`"))?;
        Ok(match spec {
            ModuleSpec::Regular { .. } => LeftModule::regular(alg),
            ModuleSpec::Zero { .. } => LeftModule::zero(alg),
            ModuleSpec::Simple { vertex, .. } => {
                let q = alg.quiver().ok_or_else(|| format!("`{name}` is not a quiver algebra"))?;
                if *vertex >= q.vertices() {
                    return Err(format!("vertex {vertex} out of range"));
                }
                q.simple(&alg, *vertex)
            }
            ModuleSpec::Actions { dim, action, .. } => {
                if action.len() != alg.dim() {
                    return Err(format!("expected {} action matrices, got {}", alg.dim(), action.len()));
                }
                let a = matrices(alg.field(), *dim, action)?;
                LeftModule::new(alg, *dim, a).map_err(|e| e.to_string())?
            }
        })
    }

    fn right_module(&self, spec: &ModuleSpec) -> Result<RightModule, String> {
        let name = spec_algebra(spec);
        let alg = self.any_algebra(name).ok_or_else(|| format!("unknown algebra `{name}`"))?;
        Ok(match spec {
            ModuleSpec::Regular { .. } => RightModule::regular(alg),
            ModuleSpec::Zero { .. } => RightModule::zero(alg),
            ModuleSpec::Simple { vertex, .. } => {
                let op = Arc::new(alg.opposite());
                let q = alg.quiver().ok_or_else(|| format!("`{name}` is not a quiver algebra"))?;
                if *vertex >= q.vertices() {
                    return Err(format!("vertex {vertex} out of range"));
                }
                let s = q.simple(&alg, *vertex);
                let left = LeftModule::new(op, s.dim(), s.action().to_vec()).map_err(|e| e.to_string())?;
                RightModule::from_left_over_opposite(&left, alg).map_err(|e| e.to_string())?
            }
            ModuleSpec::Actions { dim, action, .. } => {
                if action.len() != alg.dim() {
                    return Err(format!("expected {} action matrices, got {}", alg.dim(), action.len()));
                }
                let a = matrices(alg.field(), *dim, action)?;
                RightModule::new(alg, *dim, a).map_err(|e| e.to_string())?
            }
        })
    }

    fn extension(&self, name: &str) -> Result<&TrivialExtension, String> {
        self.extensions.get(name).ok_or_else(|| format!("unknown extension `{name}`"))
    }

    fn context(&self, name: &str) -> Result<&MoritaRing, String> {
        self.contexts.get(name).ok_or_else(|| format!("unknown context `{name}`"))
    }

    fn base_module(&self, spec: &PairSpec, t: &TrivialExtension) -> Result<LeftModule, String> {
        let name = spec.module.as_ref().ok_or("needs `module` alongside `functor` or `map`")?;
        let x = self.modules.get(name).ok_or_else(|| format!("unknown module `{name}`"))?;
        if **x.algebra() != **t.base() {
            return Err(format!("module `{name}` is not over the base of `{}`", spec.extension));
        }
        Ok(x.clone())
    }

    fn total_module(&self, name: &str, t: &TrivialExtension) -> Result<LeftModule, String> {
        let n = self.modules.get(name).ok_or_else(|| format!("unknown module `{name}`"))?;
        if **n.algebra() != **t.total() {
            return Err(format!("module `{name}` is not over the total algebra"));
        }
        Ok(n.clone())
    }

    fn one_source(spec: &PairSpec) -> Result<(), String> {
        let given = [spec.functor.is_some(), spec.map.is_some(), spec.total.is_some()];
        if given.iter().filter(|&&b| b).count() != 1 {
            return Err("give exactly one of `functor`, `map`, `total`".into());
        }
        Ok(())
    }

    fn pair(&self, spec: &PairSpec) -> Result<PairModule, String> {
        let t = self.extension(&spec.extension)?;
        Self::one_source(spec)?;
        if let Some(total) = &spec.total {
            return module_to_pair(&self.total_module(total, t)?, t).map_err(|e| e.to_string());
        }
        let x = self.base_module(spec, t)?;
        match (spec.functor, &spec.map) {
            (Some(Functor::T), _) => Ok(functor_t(&x, t)),
            (Some(Functor::Z), _) => Ok(functor_z_pair(&x, t)),
            (Some(Functor::H), _) => Err("pairs come from the functors T and Z".into()),
            (None, Some(rows)) => {
                let a = matrix(x.field(), x.dim(), t.tensor(&x).dim(), rows)?;
                PairModule::new(t, x, a).map_err(|e| e.to_string())
            }
            (None, None) => unreachable!("one source is present"),
        }
    }

    fn copair(&self, spec: &PairSpec) -> Result<CopairModule, String> {
        let t = self.extension(&spec.extension)?;
        Self::one_source(spec)?;
        if let Some(total) = &spec.total {
            return module_to_copair(&self.total_module(total, t)?, t).map_err(|e| e.to_string());
        }
        let y = self.base_module(spec, t)?;
        match (spec.functor, &spec.map) {
            (Some(Functor::H), _) => Ok(functor_h(&y, t)),
            (Some(Functor::Z), _) => Ok(functor_z_copair(&y, t)),
            (Some(Functor::T), _) => Err("copairs come from the functors H and Z".into()),
            (None, Some(rows)) => {
                let b = matrix(y.field(), t.hom(&y).dim(), y.dim(), rows)?;
                CopairModule::new(t, y, b).map_err(|e| e.to_string())
            }
            (None, None) => unreachable!("one source is present"),
        }
    }

    fn right_pair(&self, spec: &PairSpec) -> Result<RightPairModule, String> {
        let t = self.extension(&spec.extension)?;
        Self::one_source(spec)?;
        if let Some(total) = &spec.total {
            let n = self
                .right_modules
                .get(total)
                .ok_or_else(|| format!("unknown right module `{total}`"))?;
            if **n.algebra() != **t.total() {
                return Err(format!("right module `{total}` is not over the total algebra"));
            }
            return module_to_right_pair(n, t).map_err(|e| e.to_string());
        }
        let name = spec.module.as_ref().ok_or("needs `module` alongside `functor` or `map`")?;
        let w = self
            .right_modules
            .get(name)
            .ok_or_else(|| format!("unknown right module `{name}`"))?;
        if **w.algebra() != **t.base() {
            return Err(format!("right module `{name}` is not over the base of `{}`", spec.extension));
        }
        let wm = tensor_right_bimodule(w, t.bimodule()).map_err(|e| e.to_string())?;
        match (spec.functor, &spec.map) {
            (Some(Functor::Z), _) => {
                let zero = FpMatrix::zeros(w.field(), w.dim(), wm.module().dim());
                RightPairModule::new(t, w.clone(), zero).map_err(|e| e.to_string())
            }
            (Some(_), _) => Err("right pairs are given by `functor = \"Z\"`, `map` or `total`".into()),
            (None, Some(rows)) => {
                let a = matrix(w.field(), w.dim(), wm.module().dim(), rows)?;
                RightPairModule::new(t, w.clone(), a).map_err(|e| e.to_string())
            }
            (None, None) => unreachable!("one source is present"),
        }
    }

    fn tuple_parts(
        &self,
        spec: &TupleSpec,
        right: bool,
    ) -> Result<TupleParts<'_>, String> {
        let ring = self.context(&spec.context)?;
        let ctx = ring.context();
        if right {
            let get = |n: &String| {
                self.right_modules
                    .get(n)
                    .cloned()
                    .ok_or_else(|| format!("unknown right module `{n}`"))
            };
            let (w, q) = (get(&spec.x)?, get(&spec.y)?);
            if **w.algebra() != **ctx.a() || **q.algebra() != **ctx.b() {
                return Err("`x` must be over A and `y` over B".into());
            }
            Ok((ring, None, Some((w, q))))
        } else {
            let get = |n: &String| self.modules.get(n).cloned().ok_or_else(|| format!("unknown module `{n}`"));
            let (x, y) = (get(&spec.x)?, get(&spec.y)?);
            if **x.algebra() != **ctx.a() || **y.algebra() != **ctx.b() {
                return Err("`x` must be over A and `y` over B".into());
            }
            Ok((ring, Some((x, y)), None))
        }
    }

    fn tuple(&self, spec: &TupleSpec) -> Result<TupleModule, String> {
        let (ring, lr, _) = self.tuple_parts(spec, false)?;
        let (x, y) = lr.expect("left parts");
        let ctx = ring.context();
        let f = x.field();
        let ux = tensor_over(ctx.u(), &x).map_err(|e| e.to_string())?.dim();
        let vy = tensor_over(ctx.v(), &y).map_err(|e| e.to_string())?.dim();
        let fm = opt_matrix(f, y.dim(), ux, &spec.f)?;
        let gm = opt_matrix(f, x.dim(), vy, &spec.g)?;
        TupleModule::new(ctx, x, y, fm, gm).map_err(|e| e.to_string())
    }

    fn cotuple(&self, spec: &TupleSpec) -> Result<CotupleModule, String> {
        let (ring, lr, _) = self.tuple_parts(spec, false)?;
        let (x, y) = lr.expect("left parts");
        let ctx = ring.context();
        let f = x.field();
        let hu = hom_from_bimodule(ctx.u(), &y).map_err(|e| e.to_string())?.dim();
        let hv = hom_from_bimodule(ctx.v(), &x).map_err(|e| e.to_string())?.dim();
        let fm = opt_matrix(f, hu, x.dim(), &spec.f)?;
        let gm = opt_matrix(f, hv, y.dim(), &spec.g)?;
        CotupleModule::new(ctx, x, y, fm, gm).map_err(|e| e.to_string())
    }

    fn right_tuple(&self, spec: &TupleSpec) -> Result<RightTupleModule, String> {
        let (ring, _, rr) = self.tuple_parts(spec, true)?;
        let (w, q) = rr.expect("right parts");
        let ctx = ring.context();
        let f = w.field();
        let qu = tensor_right_bimodule(&q, ctx.u()).map_err(|e| e.to_string())?;
        let wv = tensor_right_bimodule(&w, ctx.v()).map_err(|e| e.to_string())?;
        let fm = opt_matrix(f, w.dim(), qu.module().dim(), &spec.f)?;
        let gm = opt_matrix(f, q.dim(), wv.module().dim(), &spec.g)?;
        RightTupleModule::new(ctx, w, q, fm, gm).map_err(|e| e.to_string())
    }
}

fn spec_algebra(spec: &ModuleSpec) -> &str {
    match spec {
        ModuleSpec::Regular { algebra }
        | ModuleSpec::Zero { algebra }
        | ModuleSpec::Simple { algebra, .. }
        | ModuleSpec::Actions { algebra, .. } => algebra,
    }
}

fn opt_matrix(f: FieldSpec, rows: usize, cols: usize, data: &Option<Rows>) -> Result<FpMatrix, String> {
    match data {
        Some(d) => matrix(f, rows, cols, d),
        None => Ok(FpMatrix::zeros(f, rows, cols)),
    }
}
