//! Canonical file formats. Each object serializes to a single JSON line
//! with a fixed key order and compact separators, terminated by a newline;
//! the writer's bytes are the identity of the value, so write(read(f))
//! reproduces a canonical file exactly.
//!
//! Scalars are written as their polynomial-basis coefficient lists over the
//! prime field, constant term first. The field block embeds the modulus, so
//! a file from a tool with a different modulus convention is detected
//! rather than misread.

use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, AlgebraCtx};
use crate::amodule::ModuleRep;
use crate::error::{Error, Result};
use crate::field::FieldCtx;
use crate::matrix::MatrixGF;
use crate::resolution::{CohClass, MultiDegree, Resolution};

#[derive(Serialize, Deserialize)]
struct FieldJson {
    p: u32,
    n: usize,
    modulus: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct ModuleJson {
    field: FieldJson,
    r: usize,
    dim: usize,
    generators: Vec<Vec<Vec<u32>>>,
}

fn entry_list(x: &MatrixGF) -> Vec<Vec<u32>> {
    let f = x.field();
    let mut out = Vec::with_capacity(x.rows() * x.cols());
    for i in 0..x.rows() {
        for j in 0..x.cols() {
            out.push(f.coeffs(x.get(i, j)));
        }
    }
    out
}

pub fn module_to_string(m: &ModuleRep) -> String {
    let f = m.field();
    let json = ModuleJson {
        field: FieldJson {
            p: f.p(),
            n: f.n(),
            modulus: f.modulus().to_vec(),
        },
        r: m.alg().r(),
        dim: m.dim(),
        generators: m.gens().iter().map(entry_list).collect(),
    };
    let mut s = serde_json::to_string(&json).expect("plain data serializes");
    s.push('\n');
    s
}

/// Reads a module from the canonical format, validating the field context
/// and the module axioms.
pub fn module_from_str(text: &str) -> Result<ModuleRep> {
    let json: ModuleJson =
        serde_json::from_str(text).map_err(|e| Error::InvalidModuleFile(e.to_string()))?;
    let field = FieldCtx::new(json.field.p, json.field.n)?;
    if field.modulus() != json.field.modulus.as_slice() {
        return Err(Error::InvalidModuleFile(format!(
            "modulus {:?} differs from the canonical modulus {:?} of GF({}^{})",
            json.field.modulus,
            field.modulus(),
            json.field.p,
            json.field.n
        )));
    }
    let alg = AlgebraCtx::new(&field, json.r)?;
    if json.generators.len() != json.r {
        return Err(Error::InvalidModuleFile(format!(
            "{} generator matrices for r = {}",
            json.generators.len(),
            json.r
        )));
    }
    let d = json.dim;
    let mut gens = Vec::with_capacity(json.r);
    for entries in &json.generators {
        if entries.len() != d * d {
            return Err(Error::InvalidModuleFile(format!(
                "generator matrix has {} entries, expected {}",
                entries.len(),
                d * d
            )));
        }
        let mut x = MatrixGF::zeros(&field, d, d);
        for (t, coeffs) in entries.iter().enumerate() {
            x.set(t / d, t % d, field.from_coeffs(coeffs)?);
        }
        gens.push(x);
    }
    ModuleRep::new(&alg, gens)
}

#[derive(Serialize, Deserialize)]
struct ClassJson {
    degree: usize,
    support: Vec<(Vec<usize>, Vec<u32>)>,
}

/// Class serialization: degree plus the support, lexicographically sorted
/// by multidegree. The ambient algebra is context, not payload.
pub fn class_to_string(c: &CohClass) -> String {
    let f = c.alg().field();
    let json = ClassJson {
        degree: c.degree(),
        support: c
            .support()
            .map(|(j, s)| (j.0.clone(), f.coeffs(s)))
            .collect(),
    };
    let mut s = serde_json::to_string(&json).expect("plain data serializes");
    s.push('\n');
    s
}

pub fn class_from_str(alg: &Algebra, text: &str) -> Result<CohClass> {
    let json: ClassJson =
        serde_json::from_str(text).map_err(|e| Error::InvalidModuleFile(e.to_string()))?;
    let f = alg.field().clone();
    let mut support = Vec::with_capacity(json.support.len());
    for (j, coeffs) in json.support {
        if j.len() != alg.r() {
            return Err(Error::InvalidModuleFile(format!(
                "multidegree of length {} over rank {}",
                j.len(),
                alg.r()
            )));
        }
        support.push((MultiDegree(j), f.from_coeffs(&coeffs)?));
    }
    CohClass::from_support(alg, json.degree, support)
}

#[derive(Serialize)]
struct MatrixJson {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<u32>>,
}

#[derive(Serialize)]
struct ResolutionJson {
    ranks: Vec<usize>,
    diffs: Vec<MatrixJson>,
}

/// Dump of a computed resolution: free ranks per degree and the
/// differential matrices, row-major entries as coefficient lists.
pub fn resolution_to_string(res: &Resolution) -> String {
    let json = ResolutionJson {
        ranks: res.ranks().to_vec(),
        diffs: (1..=res.max_degree())
            .map(|d| {
                let m = res.diff(d);
                MatrixJson {
                    rows: m.rows(),
                    cols: m.cols(),
                    entries: entry_list(m),
                }
            })
            .collect(),
    };
    let mut s = serde_json::to_string(&json).expect("plain data serializes");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Scalar;
    use crate::resolution::trivial_resolution;

    fn alg(p: u32, n: usize, r: usize) -> Algebra {
        AlgebraCtx::new(&FieldCtx::new(p, n).unwrap(), r).unwrap()
    }

    #[test]
    fn module_round_trip_is_byte_identical() {
        let a = alg(2, 2, 2);
        let m = crate::resolution::l_zeta(&CohClass::zeta(&a, 0)).unwrap();
        let once = module_to_string(&m);
        let back = module_from_str(&once).unwrap();
        assert_eq!(back, m);
        assert_eq!(module_to_string(&back), once);
        assert_eq!(once.matches('\n').count(), 1);
        assert!(once.ends_with('\n'));
    }

    #[test]
    fn golden_module_file() {
        let a = alg(2, 2, 1);
        let m = ModuleRep::trivial(&a);
        assert_eq!(
            module_to_string(&m),
            "{\"field\":{\"p\":2,\"n\":2,\"modulus\":[1,1,1]},\"r\":1,\"dim\":1,\"generators\":[[[0,0]]]}\n"
        );
    }

    #[test]
    fn reader_rejects_malformed_and_invalid_files() {
        assert!(matches!(
            module_from_str("not json"),
            Err(Error::InvalidModuleFile(_))
        ));

        // Wrong entry count.
        let bad = "{\"field\":{\"p\":2,\"n\":1,\"modulus\":[0,1]},\"r\":1,\"dim\":2,\"generators\":[[[1]]]}";
        assert!(matches!(
            module_from_str(bad),
            Err(Error::InvalidModuleFile(_))
        ));

        // Non-canonical modulus.
        let bad = "{\"field\":{\"p\":2,\"n\":2,\"modulus\":[1,0,1]},\"r\":1,\"dim\":1,\"generators\":[[[0,0]]]}";
        assert!(matches!(
            module_from_str(bad),
            Err(Error::InvalidModuleFile(_))
        ));

        // Well-formed file, non-nilpotent action: an invariant violation,
        // not a parse error.
        let bad = "{\"field\":{\"p\":2,\"n\":1,\"modulus\":[0,1]},\"r\":1,\"dim\":1,\"generators\":[[[1]]]}";
        assert!(matches!(
            module_from_str(bad),
            Err(Error::NotNilpotent { .. })
        ));

        // Unreduced scalar coefficient.
        let bad = "{\"field\":{\"p\":2,\"n\":1,\"modulus\":[0,1]},\"r\":1,\"dim\":1,\"generators\":[[[7]]]}";
        assert!(matches!(
            module_from_str(bad),
            Err(Error::ScalarNotReduced { value: 7, p: 2 })
        ));
    }

    #[test]
    fn class_round_trip_and_golden() {
        let a = alg(3, 1, 2);
        let c = CohClass::zeta(&a, 0)
            .add(&CohClass::zeta(&a, 1).scale(Scalar(2)))
            .unwrap();
        let text = class_to_string(&c);
        assert_eq!(
            text,
            "{\"degree\":2,\"support\":[[[0,2],[2]],[[2,0],[1]]]}\n"
        );
        let back = class_from_str(&a, &text).unwrap();
        assert_eq!(back, c);
        assert_eq!(class_to_string(&back), text);

        assert!(class_from_str(&a, "{\"degree\":1,\"support\":[[[1],[1]]]}").is_err());
    }

    #[test]
    fn resolution_dump_shape() {
        let a = alg(2, 1, 2);
        let res = trivial_resolution(&a, 2);
        let text = resolution_to_string(&res);
        assert!(text.starts_with("{\"ranks\":[1,2,3],\"diffs\":[{\"rows\":4,\"cols\":8,"));
        assert!(text.ends_with("\n"));
        assert_eq!(resolution_to_string(&res), text);
    }
}
