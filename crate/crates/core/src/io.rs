//! JSON formats for rings, complexes, modules and deformation registries.
//!
//! Matrices are lists of rows indexed by target generators, with entries written as
//! polynomials in the ring's variables (`"3*x*y - y^2"`). A complex file lists its
//! terms by homological degree and the differential leaving each source degree;
//! a module file is a complex file with a single term in degree 0.

use serde::{Deserialize, Serialize};

use crate::complex::ChainComplex;
use crate::dimensions::DeformationSpec;
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::module::{FreeModule, GradedMap, PresentedModule};
use crate::ring::{Algebra, GradedAlgebra, Monomial, RingElement};

fn default_characteristic() -> u32 {
    101
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingFile {
    #[serde(default = "default_characteristic")]
    pub characteristic: u32,
    pub variables: Vec<String>,
    #[serde(default)]
    pub relations: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RelationsFile {
    /// Degrees of the relation generators (columns of `matrix`).
    pub generators: Vec<i32>,
    pub matrix: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermFile {
    pub degree: i32,
    pub generators: Vec<i32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub relations: Option<RelationsFile>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DifferentialFile {
    /// Homological degree of the source term.
    pub source: i32,
    pub matrix: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexFile {
    pub terms: Vec<TermFile>,
    #[serde(default)]
    pub differentials: Vec<DifferentialFile>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleFile {
    pub generators: Vec<i32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub relations: Option<RelationsFile>,
}

/// Named modules available without writing a presentation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NamedModule {
    ResidueField,
    Ring,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NamedFile {
    pub named: NamedModule,
    #[serde(default)]
    pub degree: i32,
}

/// Any object file: a complex, a single module, or a named module.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ObjectFile {
    Complex(ComplexFile),
    Module(ModuleFile),
    Named(NamedFile),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DeformationEntry {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub ambient_vars: Vec<String>,
    #[serde(rename = "Q_relations", default)]
    pub q_relations: Vec<String>,
    pub regular_sequence: Vec<String>,
}

/// `(line, column)`, both 1-based, of a byte offset.
pub fn line_col(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let col = before.len() - before.rfind('\n').map_or(0, |i| i + 1) + 1;
    (line, col)
}

fn located(text: &str, offset: usize, message: impl std::fmt::Display) -> Error {
    let (l, c) = line_col(text, offset);
    Error::Parse { offset, message: format!("line {l}, column {c}: {message}") }
}

fn offset_of(text: &str, line: usize, column: usize) -> usize {
    let start: usize = text.split_inclusive('\n').take(line.saturating_sub(1)).map(str::len).sum();
    (start + column.saturating_sub(1)).min(text.len())
}

fn from_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| {
        let off = offset_of(text, e.line(), e.column());
        located(text, off, e)
    })
}

/// Locate a failing string inside the file: the offset of the first occurrence of
/// the quoted string, plus the offset inside it.
fn locate_in(text: &str, s: &str, inner: usize) -> usize {
    let quoted = serde_json::to_string(s).unwrap_or_default();
    text.find(&quoted).map_or(0, |i| i + 1 + inner)
}

fn relocate(text: &str, s: &str, err: Error, what: &str) -> Error {
    match err {
        Error::Parse { offset, message } => located(text, locate_in(text, s, offset), format!("{what} `{s}`: {message}")),
        other => located(text, locate_in(text, s, 0), format!("{what} `{s}`: {other}")),
    }
}

/// Parse a ring file.
pub fn parse_ring(text: &str) -> Result<Algebra> {
    let file: RingFile = from_json(text)?;
    ring_from_file(&file, text)
}

fn ring_from_file(file: &RingFile, text: &str) -> Result<Algebra> {
    let field = PrimeField::new(file.characteristic).map_err(|e| located(text, locate_in(text, "characteristic", 0), e))?;
    let vars: Vec<&str> = file.variables.iter().map(String::as_str).collect();
    let poly = GradedAlgebra::polynomial(field, &vars).map_err(|e| located(text, locate_in(text, "variables", 0), e))?;
    let rels = file
        .relations
        .iter()
        .map(|r| poly.parse_monomial(r).map_err(|e| relocate(text, r, e, "relation")))
        .collect::<Result<Vec<Monomial>>>()?;
    GradedAlgebra::new(field, file.variables.clone(), rels).map_err(|e| located(text, 0, e))
}

pub fn ring_to_file(alg: &Algebra) -> RingFile {
    RingFile {
        characteristic: alg.field().characteristic(),
        variables: alg.var_names().to_vec(),
        relations: alg.relations().iter().map(|m| alg.format_monomial(m)).collect(),
    }
}

fn parse_matrix(
    alg: &Algebra,
    text: &str,
    rows: &[Vec<String>],
    source: FreeModule,
    target: FreeModule,
    what: &str,
) -> Result<GradedMap> {
    if rows.len() != target.rank() || rows.iter().any(|r| r.len() != source.rank()) {
        return Err(located(
            text,
            0,
            format!("{what}: matrix must be {} x {} (rows = target generators)", target.rank(), source.rank()),
        ));
    }
    let mut cols: Vec<Vec<RingElement>> = vec![vec![RingElement::zero(); target.rank()]; source.rank()];
    for (i, row) in rows.iter().enumerate() {
        for (j, s) in row.iter().enumerate() {
            cols[j][i] = alg.parse_element(s).map_err(|e| relocate(text, s, e, "entry"))?;
        }
    }
    GradedMap::new(alg, source, target, cols).map_err(|e| located(text, 0, format!("{what}: {e}")))
}

fn module_from_parts(
    alg: &Algebra,
    text: &str,
    generators: &[i32],
    relations: Option<&RelationsFile>,
    what: &str,
) -> Result<PresentedModule> {
    let gens = FreeModule::new(generators.to_vec());
    Ok(match relations {
        None => PresentedModule::free(alg, gens),
        Some(r) => PresentedModule::new(parse_matrix(alg, text, &r.matrix, FreeModule::new(r.generators.clone()), gens, what)?),
    })
}

/// Parse a complex, module or named-module file over `alg`.
pub fn parse_object(alg: &Algebra, text: &str) -> Result<ChainComplex> {
    let file: ObjectFile = from_json(text)?;
    object_from_file(alg, &file, text)
}

pub fn object_from_file(alg: &Algebra, file: &ObjectFile, text: &str) -> Result<ChainComplex> {
    match file {
        ObjectFile::Named(n) => {
            let m = match n.named {
                NamedModule::ResidueField => PresentedModule::residue_field(alg),
                NamedModule::Ring => PresentedModule::ring(alg),
            };
            Ok(ChainComplex::module(m, n.degree))
        }
        ObjectFile::Module(m) => {
            Ok(ChainComplex::module(module_from_parts(alg, text, &m.generators, m.relations.as_ref(), "module")?, 0))
        }
        ObjectFile::Complex(c) => complex_from_file(alg, c, text),
    }
}

fn complex_from_file(alg: &Algebra, file: &ComplexFile, text: &str) -> Result<ChainComplex> {
    if file.terms.is_empty() {
        return Ok(ChainComplex::zero(alg));
    }
    let low = file.terms.iter().map(|t| t.degree).min().unwrap();
    let high = file.terms.iter().map(|t| t.degree).max().unwrap();
    let mut terms = Vec::new();
    for d in low..=high {
        let mut found = file.terms.iter().filter(|t| t.degree == d);
        let t = found.next();
        if found.next().is_some() {
            return Err(located(text, 0, format!("term in degree {d} listed twice")));
        }
        terms.push(match t {
            Some(t) => module_from_parts(alg, text, &t.generators, t.relations.as_ref(), &format!("term {d}"))?,
            None => PresentedModule::zero(alg),
        });
    }
    for d in &file.differentials {
        if d.source <= low || d.source > high {
            return Err(located(text, 0, format!("differential from degree {} has no target term", d.source)));
        }
    }
    let mut diffs = Vec::new();
    for i in low + 1..=high {
        let src = terms[(i - low) as usize].generators().clone();
        let tgt = terms[(i - 1 - low) as usize].generators().clone();
        let mut found = file.differentials.iter().filter(|d| d.source == i);
        let m = match found.next() {
            Some(d) => parse_matrix(alg, text, &d.matrix, src, tgt, &format!("differential {i}"))?,
            None => GradedMap::zero(alg, src, tgt),
        };
        if found.next().is_some() {
            return Err(located(text, 0, format!("differential from degree {i} listed twice")));
        }
        diffs.push(m);
    }
    ChainComplex::new(alg, low, terms, diffs).map_err(|e| located(text, 0, e))
}

fn matrix_strings(alg: &Algebra, m: &GradedMap) -> Vec<Vec<String>> {
    (0..m.target().rank())
        .map(|i| (0..m.source().rank()).map(|j| alg.format_element(&m.entry(i, j))).collect())
        .collect()
}

fn relations_file(m: &PresentedModule) -> Option<RelationsFile> {
    (!m.is_free()).then(|| RelationsFile {
        generators: m.relations().source().degrees().to_vec(),
        matrix: matrix_strings(m.algebra(), m.relations()),
    })
}

/// The file form of a complex; parsing it back gives an equal complex.
pub fn complex_to_file(x: &ChainComplex) -> ComplexFile {
    let alg = x.algebra();
    let terms = x
        .indices()
        .map(|i| {
            let t = x.term(i).unwrap();
            TermFile { degree: i, generators: t.generators().degrees().to_vec(), relations: relations_file(t) }
        })
        .collect();
    let differentials = x
        .indices()
        .skip(1)
        .map(|i| DifferentialFile { source: i, matrix: matrix_strings(alg, x.differential(i).unwrap()) })
        .collect();
    ComplexFile { terms, differentials }
}

pub fn module_to_file(m: &PresentedModule) -> ModuleFile {
    ModuleFile { generators: m.generators().degrees().to_vec(), relations: relations_file(m) }
}

/// Parse a deformation registry and validate every entry against `r`.
pub fn parse_registry(r: &Algebra, text: &str) -> Result<Vec<DeformationSpec>> {
    let entries: Vec<DeformationEntry> = from_json(text)?;
    entries
        .iter()
        .enumerate()
        .map(|(i, e)| {
            let name = e.name.clone().unwrap_or_else(|| format!("registry[{i}]"));
            if e.ambient_vars != r.var_names() {
                return Err(located(text, 0, format!("{name}: ambient variables {:?} differ from the ring's", e.ambient_vars)));
            }
            let vars: Vec<&str> = e.ambient_vars.iter().map(String::as_str).collect();
            let poly = GradedAlgebra::polynomial(r.field(), &vars)?;
            let parse = |s: &String| poly.parse_monomial(s).map_err(|err| relocate(text, s, err, "monomial"));
            let q_rels = e.q_relations.iter().map(parse).collect::<Result<Vec<_>>>()?;
            let seq = e.regular_sequence.iter().map(parse).collect::<Result<Vec<_>>>()?;
            let q = GradedAlgebra::new(r.field(), e.ambient_vars.clone(), q_rels)?;
            let spec = DeformationSpec::new(name, q, seq);
            spec.validate(r)?;
            Ok(spec)
        })
        .collect()
}

pub fn registry_entry(spec: &DeformationSpec) -> DeformationEntry {
    DeformationEntry {
        name: Some(spec.name.clone()),
        ambient_vars: spec.q.var_names().to_vec(),
        q_relations: spec.q.relations().iter().map(|m| spec.q.format_monomial(m)).collect(),
        regular_sequence: spec.sequence.iter().map(|m| spec.q.format_monomial(m)).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const RING: &str = r#"{"characteristic": 101, "variables": ["s", "t"], "relations": ["s^2", "s*t", "t^2"]}"#;

    #[test]
    fn ring_round_trip() {
        let r = parse_ring(RING).unwrap();
        assert_eq!(r.relations().len(), 3);
        let again = parse_ring(&serde_json::to_string(&ring_to_file(&r)).unwrap()).unwrap();
        assert_eq!(*r, *again);
    }

    #[test]
    fn errors_carry_locations() {
        let bad = "{\"variables\": [\"x\"],\n \"relations\": [\"x^2\", \"x*q\"]}";
        match parse_ring(bad) {
            Err(Error::Parse { offset, message }) => {
                assert!(message.starts_with("line 2"), "{message}");
                assert_eq!(&bad[offset..offset + 1], "q");
            }
            other => panic!("{other:?}"),
        }
        match parse_ring("{\"variables\": [\"x\"],\n  oops}") {
            Err(Error::Parse { message, .. }) => assert!(message.starts_with("line 2"), "{message}"),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_ring(r#"{"characteristic": 100, "variables": ["x"]}"#), Err(Error::Parse { .. })));
    }

    #[test]
    fn complex_round_trip() {
        let r = parse_ring(RING).unwrap();
        let text = r#"{"terms": [{"degree": 0, "generators": [0]}, {"degree": 1, "generators": [1]}],
                       "differentials": [{"source": 1, "matrix": [["s"]]}]}"#;
        let x = parse_object(&r, text).unwrap();
        assert_eq!((x.low(), x.high()), (0, 1));
        let back = serde_json::to_string(&ObjectFile::Complex(complex_to_file(&x))).unwrap();
        assert_eq!(parse_object(&r, &back).unwrap(), x);
        let m = parse_object(&r, r#"{"generators": [0], "relations": {"generators": [1], "matrix": [["s"]]}}"#).unwrap();
        assert_eq!(m.term(0).unwrap().dim(1), 1);
        let k = parse_object(&r, r#"{"named": "residue_field"}"#).unwrap();
        assert_eq!(*k.term(0).unwrap(), PresentedModule::residue_field(&r));
        assert!(parse_object(&r, r#"{"terms": [{"degree": 0, "generators": [0]}, {"degree": 1, "generators": [0]}],
                       "differentials": [{"source": 1, "matrix": [["s"]]}]}"#)
        .is_err());
    }

    #[test]
    fn registry_entries_are_validated() {
        let r = parse_ring(r#"{"variables": ["x", "y"], "relations": ["x^2", "y^3"]}"#).unwrap();
        let good = r#"[{"ambient_vars": ["x", "y"], "Q_relations": ["y^3"], "regular_sequence": ["x^2"]}]"#;
        let specs = parse_registry(&r, good).unwrap();
        assert_eq!(specs[0].length(), 1);
        let bad = r#"[{"ambient_vars": ["x", "y"], "Q_relations": [], "regular_sequence": ["x^2"]}]"#;
        assert!(matches!(parse_registry(&r, bad), Err(Error::BadDeformation(_))));
    }
}
