//! JSON documents for algebras and modules.
//!
//! Algebras are stored sparsely as `(i, j, k, coefficient)` quadruples,
//! modules as dense grids. Rationals are written `"p"` or `"p/q"` with
//! `q > 0`; bare JSON integers are accepted on input. Emission is
//! canonical: product keys ascending, literals in lowest terms.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::algebra::LeibnizAlgebra;
use crate::error::{Error, Result};
use crate::exactlin::{format_rational, parse_rational, RMatrix, Rational};
use crate::faithful::{Certificate, FaithfulResult};
use crate::rep::LeibnizModule;

#[derive(Clone, Debug, Deserialize, Serialize, PartialEq, Eq)]
#[serde(untagged)]
pub enum Literal {
    Int(i64),
    Text(String),
}

impl Literal {
    fn to_rational(&self, location: &str) -> Result<Rational> {
        match self {
            Literal::Int(i) => Ok(Rational::from_integer((*i).into())),
            Literal::Text(s) => parse_rational(s).map_err(|m| Error::parse(location, m)),
        }
    }
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDocument {
    #[serde(default)]
    pub name: String,
    pub dim: usize,
    #[serde(default)]
    pub products: Vec<(usize, usize, usize, Literal)>,
}

#[derive(Clone, Debug, Deserialize, Serialize, PartialEq, Eq)]
pub struct CertificateDocument {
    pub branch: String,
    pub dim_v: usize,
    pub kernel_dim: usize,
    pub axioms_ok: bool,
    pub dim_bound_ok: bool,
    pub leftnil_ok: bool,
    pub rightnil_ok: Option<bool>,
    pub patsourakos_ok: bool,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleDocument {
    pub alg_dim: usize,
    pub mod_dim: usize,
    pub lambda: Vec<Vec<Vec<Literal>>>,
    pub rho: Vec<Vec<Vec<Literal>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateDocument>,
}

fn json_error(e: serde_json::Error) -> Error {
    Error::parse(format!("line {} column {}", e.line(), e.column()), e.to_string())
}

pub fn parse_algebra(text: &str) -> Result<LeibnizAlgebra> {
    let doc: AlgebraDocument = serde_json::from_str(text).map_err(json_error)?;
    algebra_from_document(&doc)
}

pub fn algebra_from_document(doc: &AlgebraDocument) -> Result<LeibnizAlgebra> {
    let mut seen = BTreeSet::new();
    let mut entries = Vec::with_capacity(doc.products.len());
    for (idx, (i, j, k, lit)) in doc.products.iter().enumerate() {
        let loc = format!("products[{idx}]");
        for x in [i, j, k] {
            if *x >= doc.dim {
                return Err(Error::parse(loc, format!("index {x} out of range for dim {}", doc.dim)));
            }
        }
        if !seen.insert((*i, *j, *k)) {
            return Err(Error::parse(loc, format!("duplicate key ({i}, {j}, {k})")));
        }
        entries.push((*i, *j, *k, lit.to_rational(&loc)?));
    }
    let alg = LeibnizAlgebra::from_products(doc.dim, entries)?;
    Ok(if doc.name.is_empty() { alg } else { alg.with_name(doc.name.clone()) })
}

pub fn emit_algebra(alg: &LeibnizAlgebra) -> String {
    let mut out = String::from("{\n");
    let name = serde_json::to_string(alg.name().unwrap_or("")).expect("string serializes");
    writeln!(out, "  \"name\": {name},").unwrap();
    writeln!(out, "  \"dim\": {},", alg.dim()).unwrap();
    let products: Vec<String> = alg
        .nonzero_constants()
        .map(|(i, j, k, c)| format!("    [{i}, {j}, {k}, \"{}\"]", format_rational(c)))
        .collect();
    if products.is_empty() {
        out.push_str("  \"products\": []\n");
    } else {
        writeln!(out, "  \"products\": [\n{}\n  ]", products.join(",\n")).unwrap();
    }
    out.push_str("}\n");
    out
}

fn grid_to_matrix(grid: &[Vec<Literal>], size: usize, loc: &str) -> Result<RMatrix> {
    if grid.len() != size {
        return Err(Error::parse(loc, format!("expected {size} rows, found {}", grid.len())));
    }
    let mut rows = Vec::with_capacity(size);
    for (r, row) in grid.iter().enumerate() {
        if row.len() != size {
            return Err(Error::parse(
                format!("{loc}[{r}]"),
                format!("expected {size} entries, found {}", row.len()),
            ));
        }
        rows.push(
            row.iter()
                .enumerate()
                .map(|(c, lit)| lit.to_rational(&format!("{loc}[{r}][{c}]")))
                .collect::<Result<Vec<_>>>()?,
        );
    }
    RMatrix::from_rows(size, rows)
}

pub fn module_from_document(doc: &ModuleDocument) -> Result<LeibnizModule> {
    let mut families = Vec::with_capacity(2);
    for (field, grids) in [("lambda", &doc.lambda), ("rho", &doc.rho)] {
        if grids.len() != doc.alg_dim {
            return Err(Error::parse(
                field,
                format!("expected {} matrices, found {}", doc.alg_dim, grids.len()),
            ));
        }
        families.push(
            grids
                .iter()
                .enumerate()
                .map(|(i, g)| grid_to_matrix(g, doc.mod_dim, &format!("{field}[{i}]")))
                .collect::<Result<Vec<_>>>()?,
        );
    }
    let rho = families.pop().expect("two families");
    let lambda = families.pop().expect("two families");
    LeibnizModule::new(doc.alg_dim, doc.mod_dim, lambda, rho)
}

/// Parses a module document, returning its certificate block if present.
pub fn parse_module_document(text: &str) -> Result<(LeibnizModule, Option<CertificateDocument>)> {
    let doc: ModuleDocument = serde_json::from_str(text).map_err(json_error)?;
    Ok((module_from_document(&doc)?, doc.certificate))
}

pub fn parse_module(text: &str) -> Result<LeibnizModule> {
    parse_module_document(text).map(|(m, _)| m)
}

fn write_family(out: &mut String, field: &str, family: &[RMatrix], last: bool) {
    if family.is_empty() {
        writeln!(out, "  \"{field}\": []{}", if last { "" } else { "," }).unwrap();
        return;
    }
    writeln!(out, "  \"{field}\": [").unwrap();
    for (i, m) in family.iter().enumerate() {
        let rows: Vec<String> = m
            .row_vecs()
            .map(|r| {
                let cells: Vec<String> = r.iter().map(|x| format!("\"{}\"", format_rational(x))).collect();
                format!("      [{}]", cells.join(", "))
            })
            .collect();
        let sep = if i + 1 == family.len() { "" } else { "," };
        if rows.is_empty() {
            writeln!(out, "    []{sep}").unwrap();
        } else {
            writeln!(out, "    [\n{}\n    ]{sep}", rows.join(",\n")).unwrap();
        }
    }
    writeln!(out, "  ]{}", if last { "" } else { "," }).unwrap();
}

fn emit_module_with(module: &LeibnizModule, certificate: Option<&CertificateDocument>) -> String {
    let mut out = String::from("{\n");
    writeln!(out, "  \"alg_dim\": {},", module.alg_dim()).unwrap();
    writeln!(out, "  \"mod_dim\": {},", module.mod_dim()).unwrap();
    write_family(&mut out, "lambda", module.lambda(), false);
    write_family(&mut out, "rho", module.rho(), certificate.is_none());
    if let Some(cert) = certificate {
        let body = serde_json::to_string_pretty(cert).expect("certificate serializes");
        let indented = body.replace('\n', "\n  ");
        writeln!(out, "  \"certificate\": {indented}").unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn emit_module(module: &LeibnizModule) -> String {
    emit_module_with(module, None)
}

pub fn certificate_document(result: &FaithfulResult) -> CertificateDocument {
    let Certificate {
        axioms_ok,
        kernel_dim,
        dim_bound_ok,
        leftnil_ok,
        rightnil_ok,
        patsourakos_ok,
    } = result.certificate.clone();
    CertificateDocument {
        branch: result.branch.as_str().to_string(),
        dim_v: result.dim_v,
        kernel_dim,
        axioms_ok,
        dim_bound_ok,
        leftnil_ok,
        rightnil_ok,
        patsourakos_ok,
    }
}

/// Module document with the certificate block embedded.
pub fn emit_faithful_result(result: &FaithfulResult) -> String {
    emit_module_with(&result.module, Some(&certificate_document(result)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{rat, ratio};
    use crate::fixtures;

    #[test]
    fn leib2_document() {
        let text = r#"{"name": "leib2", "dim": 2, "products": [[0, 0, 1, "1"]]}"#;
        assert_eq!(parse_algebra(text).unwrap(), fixtures::leib2());
    }

    #[test]
    fn empty_products_is_abelian() {
        let alg = parse_algebra(r#"{"name": "", "dim": 3, "products": []}"#).unwrap();
        assert_eq!(alg, LeibnizAlgebra::abelian(3));
        let alg = parse_algebra(r#"{"dim": 3}"#).unwrap();
        assert_eq!(alg, LeibnizAlgebra::abelian(3));
    }

    #[test]
    fn literal_forms() {
        let alg = parse_algebra(r#"{"dim": 1, "products": [[0, 0, 0, "-6/4"]]}"#).unwrap();
        assert_eq!(alg.constant(0, 0, 0), &ratio(-3, 2));
        let alg = parse_algebra(r#"{"dim": 1, "products": [[0, 0, 0, 7]]}"#).unwrap();
        assert_eq!(alg.constant(0, 0, 0), &rat(7));
    }

    #[test]
    fn parse_errors_carry_locations() {
        let cases = [
            (r#"{"dim": 2, "products": [[0, 0, 1, "1/0"]]}"#, "products[0]"),
            (r#"{"dim": 2, "products": [[0, 0, 1, "1"], [0, 2, 1, "1"]]}"#, "products[1]"),
            (r#"{"dim": 2, "products": [[0, 0, 1, "1"], [0, 0, 1, "2"]]}"#, "products[1]"),
            (r#"{"dim": 2, "products": [[0, 0, 1, "abc"]]}"#, "products[0]"),
        ];
        for (text, loc) in cases {
            match parse_algebra(text) {
                Err(Error::Parse { location, .. }) => assert_eq!(location, loc, "{text}"),
                other => panic!("expected parse error for {text}, got {other:?}"),
            }
        }
        assert!(matches!(parse_algebra("{not json"), Err(Error::Parse { .. })));
    }

    #[test]
    fn emission_is_canonical() {
        let text = emit_algebra(&fixtures::leib2());
        assert_eq!(
            text,
            "{\n  \"name\": \"leib2\",\n  \"dim\": 2,\n  \"products\": [\n    [0, 0, 1, \"1\"]\n  ]\n}\n"
        );
        let again = emit_algebra(&parse_algebra(&text).unwrap());
        assert_eq!(again, text);
    }

    #[test]
    fn module_round_trip_on_fixtures() {
        for alg in fixtures::corpus() {
            let m = crate::rep::adjoint_module(&alg);
            let text = emit_module(&m);
            assert_eq!(parse_module(&text).unwrap(), m);
            assert_eq!(emit_module(&parse_module(&text).unwrap()), text);
        }
    }

    #[test]
    fn module_shape_errors() {
        let text = r#"{"alg_dim": 1, "mod_dim": 2, "lambda": [[["0", "0"], ["0"]]], "rho": [[["0", "0"], ["0", "0"]]]}"#;
        match parse_module(text) {
            Err(Error::Parse { location, .. }) => assert_eq!(location, "lambda[0][1]"),
            other => panic!("{other:?}"),
        }
        let text = r#"{"alg_dim": 2, "mod_dim": 1, "lambda": [[["0"]]], "rho": [[["0"]], [["0"]]]}"#;
        assert!(matches!(parse_module(text), Err(Error::Parse { .. })));
    }

    #[test]
    fn certificate_block_round_trips() {
        let r = crate::faithful::faithful_representation(&fixtures::leib2()).unwrap();
        let text = emit_faithful_result(&r);
        let (m, cert) = parse_module_document(&text).unwrap();
        assert_eq!(m, r.module);
        let cert = cert.unwrap();
        assert_eq!(cert.branch, "construction");
        assert_eq!(cert.dim_v, 3);
        assert_eq!(cert.rightnil_ok, Some(true));
    }
}
