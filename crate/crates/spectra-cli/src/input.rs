//! JSON object descriptions: one `kind`-tagged document per file.

use crate::error::CliError;
use alexandroff::template::{BlockType, ChainTemplate};
use order_core::lattice::FiniteLattice;
use order_core::mask;
use order_core::preorder::{FinitePoset, Preorder};
use ring_spectra::FiniteCommRing;
use serde::Deserialize;
use topology_core::space::{FiniteSpace, ALEXANDROFF_LIMIT};

#[derive(Debug, Clone)]
pub enum ParsedObject {
    Topology(FiniteSpace),
    Preorder(Preorder),
    Lattice(FiniteLattice),
    Ring(FiniteCommRing),
    Template(ChainTemplate),
}

impl ParsedObject {
    pub fn kind(&self) -> &'static str {
        match self {
            ParsedObject::Topology(_) => "topology",
            ParsedObject::Preorder(_) => "preorder",
            ParsedObject::Lattice(_) => "lattice",
            ParsedObject::Ring(_) => "ring",
            ParsedObject::Template(_) => "template",
        }
    }
}

#[derive(Deserialize)]
struct TopologySpec {
    points: Vec<String>,
    opens: Vec<Vec<String>>,
}

#[derive(Deserialize)]
struct RelationSpec {
    elements: Vec<String>,
    #[serde(default)]
    le: Vec<(String, String)>,
}

#[derive(Deserialize)]
struct RingSpec {
    modulus: Option<usize>,
    product: Option<Vec<RingSpec>>,
    tables: Option<TablesSpec>,
    ideal_of: Option<Box<RingSpec>>,
    carrier: Option<Vec<String>>,
}

#[derive(Deserialize)]
struct TablesSpec {
    elements: Vec<String>,
    add: Vec<Vec<String>>,
    mul: Vec<Vec<String>>,
}

#[derive(Deserialize)]
struct TemplateSpec {
    blocks: Vec<BlockSpec>,
    #[serde(default)]
    below: Vec<(String, String)>,
}

#[derive(Deserialize)]
struct BlockSpec {
    name: String,
    #[serde(rename = "type")]
    block_type: String,
    elements: Option<Vec<String>>,
    #[serde(default)]
    le: Vec<(String, String)>,
}

pub fn parse_object(text: &str) -> Result<ParsedObject, CliError> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
    let kind = value
        .get("kind")
        .and_then(|k| k.as_str())
        .ok_or_else(|| CliError::Parse("missing string field `kind`".into()))?
        .to_string();
    let detail = |e: serde_json::Error| CliError::Parse(format!("in `{kind}` object: {e}"));
    match kind.as_str() {
        "topology" => {
            let spec: TopologySpec = serde_json::from_value(value).map_err(detail)?;
            let space = FiniteSpace::from_open_sets(spec.points, &spec.opens)
                .map_err(|e| CliError::Validation(e.to_string()))?;
            Ok(ParsedObject::Topology(space))
        }
        "preorder" => {
            let spec: RelationSpec = serde_json::from_value(value).map_err(detail)?;
            if spec.elements.len() > ALEXANDROFF_LIMIT {
                return Err(CliError::Bound(format!(
                    "preorder has {} elements (limit {ALEXANDROFF_LIMIT})",
                    spec.elements.len()
                )));
            }
            let p = Preorder::from_pairs(&spec.elements, &spec.le)
                .map_err(|e| CliError::Validation(e.to_string()))?;
            Ok(ParsedObject::Preorder(p))
        }
        "lattice" => {
            let spec: RelationSpec = serde_json::from_value(value).map_err(detail)?;
            if spec.elements.len() > order_core::ideal::SUBSET_SCAN_LIMIT {
                return Err(CliError::Bound(format!(
                    "lattice has {} elements (limit {})",
                    spec.elements.len(),
                    order_core::ideal::SUBSET_SCAN_LIMIT
                )));
            }
            let poset = FinitePoset::from_pairs(&spec.elements, &spec.le)
                .map_err(|e| CliError::Validation(e.to_string()))?;
            let lattice = FiniteLattice::from_poset(poset)
                .map_err(|e| CliError::Validation(e.to_string()))?;
            Ok(ParsedObject::Lattice(lattice))
        }
        "ring" => {
            let spec: RingSpec = serde_json::from_value(value).map_err(detail)?;
            Ok(ParsedObject::Ring(build_ring(&spec)?))
        }
        "template" => {
            let spec: TemplateSpec = serde_json::from_value(value).map_err(detail)?;
            Ok(ParsedObject::Template(build_template(spec)?))
        }
        other => Err(CliError::Parse(format!(
            "unknown kind `{other}` (expected topology, preorder, lattice, ring or template)"
        ))),
    }
}

fn build_ring(spec: &RingSpec) -> Result<FiniteCommRing, CliError> {
    let chosen = [
        spec.modulus.is_some(),
        spec.product.is_some(),
        spec.tables.is_some(),
        spec.ideal_of.is_some(),
    ]
    .iter()
    .filter(|&&b| b)
    .count();
    if chosen != 1 {
        return Err(CliError::Parse(
            "a ring needs exactly one of `modulus`, `product`, `tables`, `ideal_of`".into(),
        ));
    }
    if spec.carrier.is_some() && spec.ideal_of.is_none() {
        return Err(CliError::Parse("`carrier` only applies together with `ideal_of`".into()));
    }
    let validation = |e: ring_spectra::RingError| CliError::Validation(e.to_string());
    if let Some(n) = spec.modulus {
        return FiniteCommRing::cyclic(n).map_err(validation);
    }
    if let Some(parts) = &spec.product {
        if parts.len() != 2 {
            return Err(CliError::Parse(format!(
                "`product` takes exactly two ring descriptions, got {}",
                parts.len()
            )));
        }
        let a = build_ring(&parts[0])?;
        let b = build_ring(&parts[1])?;
        return FiniteCommRing::product(&a, &b).map_err(validation);
    }
    if let Some(tables) = &spec.tables {
        let n = tables.elements.len();
        let index = |l: &String| -> Result<usize, CliError> {
            tables
                .elements
                .iter()
                .position(|e| e == l)
                .ok_or_else(|| CliError::Validation(format!("unknown element label `{l}`")))
        };
        let flatten = |rows: &Vec<Vec<String>>, what: &str| -> Result<Vec<usize>, CliError> {
            if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                return Err(CliError::Parse(format!("`{what}` must be an {n}×{n} table")));
            }
            rows.iter().flatten().map(index).collect()
        };
        let add = flatten(&tables.add, "add")?;
        let mul = flatten(&tables.mul, "mul")?;
        return FiniteCommRing::from_tables(tables.elements.clone(), add, mul).map_err(validation);
    }
    let inner = build_ring(spec.ideal_of.as_ref().expect("checked above"))?;
    let carrier_labels = spec
        .carrier
        .as_ref()
        .ok_or_else(|| CliError::Parse("`ideal_of` needs a `carrier` list".into()))?;
    let mut carrier = 0u64;
    for l in carrier_labels {
        let i = inner
            .index_of(l)
            .ok_or_else(|| CliError::Validation(format!("unknown carrier element `{l}`")))?;
        carrier |= mask::bit(i);
    }
    FiniteCommRing::ideal_as_ring(&inner, carrier).map_err(validation)
}

fn build_template(spec: TemplateSpec) -> Result<ChainTemplate, CliError> {
    let mut blocks = Vec::with_capacity(spec.blocks.len());
    for b in spec.blocks {
        let block_type = match b.block_type.as_str() {
            "fin" => {
                let elements: Vec<String> = match b.elements {
                    Some(e) => e,
                    None => {
                        // infer from the relation pairs, in order of appearance
                        let mut seen = Vec::new();
                        for (x, y) in &b.le {
                            if !seen.contains(x) {
                                seen.push(x.clone());
                            }
                            if !seen.contains(y) {
                                seen.push(y.clone());
                            }
                        }
                        seen
                    }
                };
                let p = Preorder::from_pairs(&elements, &b.le)
                    .map_err(|e| CliError::Validation(e.to_string()))?;
                BlockType::Fin(p)
            }
            "omega" => BlockType::Omega,
            "omega*" | "omegastar" => BlockType::OmegaStar,
            "zeta" => BlockType::Zeta,
            "eta" => BlockType::Eta,
            other => {
                return Err(CliError::Parse(format!(
                    "unknown block type `{other}` (expected fin, omega, omega*, zeta or eta)"
                )))
            }
        };
        blocks.push((b.name, block_type));
    }
    ChainTemplate::new(blocks, &spec.below).map_err(|e| CliError::Validation(e.to_string()))
}
