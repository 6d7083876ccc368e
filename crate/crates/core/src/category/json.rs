//! JSON form of morphisms. Diagrams and coefficients are stored as text, so
//! a serialize/deserialize/serialize cycle is byte-identical.

use serde::{Deserialize, Serialize};

use super::{Category, CategoryError, CategoryKind, Morphism};
use crate::diagrams::ColoredPartition;
use crate::poly::PolyQ;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub diagram: String,
    pub coeff: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorphismJson {
    pub category: String,
    pub loop_weight: String,
    pub k: usize,
    pub l: usize,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, thiserror::Error)]
pub enum JsonError {
    #[error("unknown category `{0}`")]
    UnknownCategory(String),
    #[error("bad polynomial `{0}`")]
    Poly(String),
    #[error("bad diagram: {0}")]
    Diagram(#[from] crate::diagrams::ParseDiagramError),
    #[error(transparent)]
    Category(#[from] CategoryError),
    #[error(transparent)]
    Serde(#[from] serde_json::Error),
}

impl From<&Morphism> for MorphismJson {
    fn from(m: &Morphism) -> Self {
        MorphismJson {
            category: m.category.kind.name().to_string(),
            loop_weight: m.category.loop_weight.to_string(),
            k: m.source,
            l: m.target,
            terms: m
                .terms
                .iter()
                .map(|(d, c)| TermJson {
                    diagram: d.to_string(),
                    coeff: c.to_string(),
                })
                .collect(),
        }
    }
}

impl TryFrom<&MorphismJson> for Morphism {
    type Error = JsonError;

    fn try_from(j: &MorphismJson) -> Result<Self, Self::Error> {
        let kind = CategoryKind::from_name(&j.category)
            .ok_or_else(|| JsonError::UnknownCategory(j.category.clone()))?;
        let weight: PolyQ = j
            .loop_weight
            .parse()
            .map_err(|_| JsonError::Poly(j.loop_weight.clone()))?;
        let cat = Category::new(kind, weight);
        let mut terms = Vec::with_capacity(j.terms.len());
        for t in &j.terms {
            let d: ColoredPartition = t.diagram.parse()?;
            let c: PolyQ = t
                .coeff
                .parse()
                .map_err(|_| JsonError::Poly(t.coeff.clone()))?;
            terms.push((d, c));
        }
        Ok(Morphism::from_terms(&cat, j.k, j.l, terms)?)
    }
}

impl Morphism {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&MorphismJson::from(self)).expect("plain data serializes")
    }

    pub fn from_json(s: &str) -> Result<Morphism, JsonError> {
        let j: MorphismJson = serde_json::from_str(s)?;
        Morphism::try_from(&j)
    }
}
