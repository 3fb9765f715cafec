//! JSON forms of structures. Scalars are written as canonical literals so
//! that a load/save round trip is bit-exact.

use crate::algebra::{Algebra, Generator, Tensor};
use crate::error::{invalid, Error, Result};
use crate::group::{AbelianGroup, Elem};
use crate::hopf::HopfAlgebra;
use crate::linalg::Vector;
use crate::scalar::{Field, Scalar};
use serde::{Deserialize, Serialize};

pub type SparseJson = Vec<(usize, String)>;

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct AlgebraJson {
    pub conductor: u32,
    pub basis: Vec<String>,
    pub unit: SparseJson,
    /// nonzero products `(a, b, a·b)`
    pub mult: Vec<(usize, usize, SparseJson)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub presentation: Option<PresentationJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct PresentationJson {
    pub generators: Vec<(String, usize)>,
    pub words: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct HopfJson {
    pub name: String,
    pub algebra: AlgebraJson,
    pub comult: Vec<Vec<(usize, usize, String)>>,
    pub counit: Vec<String>,
    pub antipode: Vec<SparseJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grading: Option<Vec<u32>>,
    pub grouplikes: Vec<(Elem, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<AbelianGroup>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exps: Option<Vec<Vec<u32>>>,
}

pub fn vector_json(v: &Vector) -> SparseJson {
    v.iter().map(|(k, c)| (k, c.to_string())).collect()
}

pub fn vector_from_json(f: &Field, v: &SparseJson) -> Result<Vector> {
    let mut out = Vector::zero();
    for (k, s) in v {
        out.add_term(*k, &f.parse(s)?);
    }
    Ok(out)
}

fn tensor_json(t: &Tensor) -> Vec<(usize, usize, String)> {
    t.iter().map(|((a, b), c)| (a, b, c.to_string())).collect()
}

fn tensor_from_json(f: &Field, v: &[(usize, usize, String)]) -> Result<Tensor> {
    let mut out = Tensor::zero();
    for (a, b, s) in v {
        out.add_term((*a, *b), &f.parse(s)?);
    }
    Ok(out)
}

pub fn algebra_to_json(a: &Algebra) -> AlgebraJson {
    let d = a.dim();
    let mut mult = Vec::new();
    for x in 0..d {
        for y in 0..d {
            let p = a.basis_mul(x, y);
            if !p.is_zero() {
                mult.push((x, y, vector_json(p)));
            }
        }
    }
    AlgebraJson {
        conductor: a.field().conductor(),
        basis: a.labels().to_vec(),
        unit: vector_json(a.unit()),
        mult,
        presentation: a.presentation().map(|p| PresentationJson {
            generators: p.generators.iter().map(|g| (g.name.clone(), g.basis)).collect(),
            words: p.words.iter().map(|w| w.letters.clone()).collect(),
        }),
    }
}

pub fn algebra_from_json(j: &AlgebraJson) -> Result<Algebra> {
    let f = Field::new(j.conductor)?;
    let d = j.basis.len();
    let mut table = vec![Vector::zero(); d * d];
    for (x, y, v) in &j.mult {
        if *x >= d || *y >= d {
            return Err(invalid("product index out of range"));
        }
        table[x * d + y] = vector_from_json(&f, v)?;
    }
    let alg = Algebra::from_table(f.clone(), j.basis.clone(), table, vector_from_json(&f, &j.unit)?)?;
    match &j.presentation {
        None => Ok(alg),
        Some(p) => {
            if p.generators.iter().any(|(_, b)| *b >= d) || p.words.iter().flatten().any(|&l| l >= p.generators.len()) {
                return Err(invalid("presentation index out of range"));
            }
            let gens = p
                .generators
                .iter()
                .map(|(name, basis)| Generator { name: name.clone(), basis: *basis })
                .collect();
            alg.with_words(gens, p.words.clone())
        }
    }
}

pub fn hopf_to_json(h: &HopfAlgebra) -> HopfJson {
    let d = h.dim();
    HopfJson {
        name: h.name.clone(),
        algebra: algebra_to_json(&h.algebra),
        comult: (0..d).map(|b| tensor_json(h.comult(b))).collect(),
        counit: (0..d).map(|b| h.counit(b).to_string()).collect(),
        antipode: (0..d).map(|b| vector_json(h.antipode(b))).collect(),
        grading: h.grading().map(|g| g.to_vec()),
        grouplikes: h.grouplike_basis().to_vec(),
        group: h.group(),
        exps: h.exps().map(|e| e.to_vec()),
    }
}

pub fn hopf_from_json(j: &HopfJson) -> Result<HopfAlgebra> {
    let alg = algebra_from_json(&j.algebra)?;
    let f = alg.field().clone();
    let comult = j.comult.iter().map(|t| tensor_from_json(&f, t)).collect::<Result<Vec<_>>>()?;
    let counit = j.counit.iter().map(|s| f.parse(s)).collect::<Result<Vec<Scalar>>>()?;
    let antipode = j.antipode.iter().map(|v| vector_from_json(&f, v)).collect::<Result<Vec<_>>>()?;
    let h = HopfAlgebra::from_parts(
        j.name.clone(),
        alg,
        comult,
        counit,
        antipode,
        j.grading.clone(),
        j.grouplikes.clone(),
        j.group,
    )?;
    Ok(match &j.exps {
        Some(e) => h.with_exps_checked(e.clone())?,
        None => h,
    })
}

pub fn hopf_to_string(h: &HopfAlgebra) -> String {
    serde_json::to_string_pretty(&hopf_to_json(h)).expect("serializable")
}

pub fn hopf_from_str(s: &str) -> Result<HopfAlgebra> {
    let j: HopfJson = serde_json::from_str(s).map_err(|e| Error::Json(e.to_string()))?;
    hopf_from_json(&j)
}

pub fn scalar_matrix_json(m: &[Vec<Scalar>]) -> Vec<Vec<String>> {
    m.iter().map(|r| r.iter().map(|c| c.to_string()).collect()).collect()
}
