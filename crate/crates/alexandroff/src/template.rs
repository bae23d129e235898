//! Block templates: finite posets of blocks, each block a finite preorder
//! or one of the four infinite chain order types.

use crate::error::TemplateError;
use order_core::mask::{self, Mask};
use order_core::preorder::Preorder;

/// One block of a template.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BlockType {
    /// An explicit finite preorder (equivalences permitted).
    Fin(Preorder),
    /// `0 < 1 < 2 < …`: least element, no greatest.
    Omega,
    /// `… < -2 < -1`: greatest element, no least.
    OmegaStar,
    /// The integers: neither endpoint.
    Zeta,
    /// A dense countable chain without endpoints.
    Eta,
}

impl BlockType {
    /// Blocks whose points cannot be covered from finitely many of their
    /// own up-sets (no least element and infinite descent).
    pub fn lacks_least(&self) -> bool {
        matches!(self, BlockType::OmegaStar | BlockType::Zeta | BlockType::Eta)
    }

    /// Blocks with unbounded ascent (no greatest element or class).
    pub fn ascending_infinite(&self) -> bool {
        matches!(self, BlockType::Omega | BlockType::Zeta | BlockType::Eta)
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, BlockType::Fin(_))
    }

    pub fn type_name(&self) -> &'static str {
        match self {
            BlockType::Fin(_) => "fin",
            BlockType::Omega => "omega",
            BlockType::OmegaStar => "omega*",
            BlockType::Zeta => "zeta",
            BlockType::Eta => "eta",
        }
    }
}

/// A finite strict poset of named blocks; `A` below `B` means every point
/// of `A` lies below every point of `B` in the induced global preorder.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainTemplate {
    names: Vec<String>,
    blocks: Vec<BlockType>,
    /// `above[i] = { j : block i strictly below block j }`; irreflexive and
    /// transitive.
    above: Vec<Mask>,
}

impl ChainTemplate {
    pub fn new(
        blocks: Vec<(String, BlockType)>,
        below_edges: &[(String, String)],
    ) -> Result<ChainTemplate, TemplateError> {
        let names: Vec<String> = blocks.iter().map(|(n, _)| n.clone()).collect();
        let types: Vec<BlockType> = blocks.into_iter().map(|(_, b)| b).collect();
        if names.len() > 16 {
            return Err(TemplateError::InvalidTemplate(format!(
                "{} blocks exceed the 16-block bound",
                names.len()
            )));
        }
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(TemplateError::InvalidTemplate(format!("duplicate block name `{n}`")));
            }
        }
        for (name, b) in names.iter().zip(&types) {
            if let BlockType::Fin(p) = b {
                if p.n() == 0 {
                    return Err(TemplateError::InvalidTemplate(format!(
                        "finite block `{name}` has no points"
                    )));
                }
            }
        }
        let index = |s: &str| -> Result<usize, TemplateError> {
            names
                .iter()
                .position(|n| n == s)
                .ok_or_else(|| TemplateError::InvalidTemplate(format!("unknown block name `{s}`")))
        };
        let n = names.len();
        let mut above: Vec<Mask> = vec![0; n];
        for (a, b) in below_edges {
            let i = index(a)?;
            let j = index(b)?;
            above[i] |= mask::bit(j);
        }
        // strict transitive closure
        for k in 0..n {
            for i in 0..n {
                if mask::has(above[i], k) {
                    above[i] |= above[k];
                }
            }
        }
        for i in 0..n {
            if mask::has(above[i], i) {
                return Err(TemplateError::InvalidTemplate(format!(
                    "below relation has a cycle through `{}`",
                    names[i]
                )));
            }
        }
        Ok(ChainTemplate { names, blocks: types, above })
    }

    pub fn n_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn block(&self, i: usize) -> &BlockType {
        &self.blocks[i]
    }

    pub fn blocks(&self) -> &[BlockType] {
        &self.blocks
    }

    /// Is block `a` strictly below block `b`?
    pub fn is_below(&self, a: usize, b: usize) -> bool {
        mask::has(self.above[a], b)
    }

    /// `{ j : i ▸ j }`.
    pub fn blocks_above(&self, i: usize) -> Mask {
        self.above[i]
    }

    /// `{ j : j ▸ i }`.
    pub fn blocks_below(&self, i: usize) -> Mask {
        let mut m = 0;
        for j in 0..self.n_blocks() {
            if self.is_below(j, i) {
                m |= mask::bit(j);
            }
        }
        m
    }

    /// Blocks with nothing above them.
    pub fn maximal_blocks(&self) -> Vec<usize> {
        (0..self.n_blocks()).filter(|&i| self.above[i] == 0).collect()
    }

    pub fn describe(&self) -> String {
        let parts: Vec<String> = self
            .names
            .iter()
            .zip(&self.blocks)
            .map(|(n, b)| format!("{n}:{}", b.type_name()))
            .collect();
        format!("template[{}]", parts.join(" "))
    }
}

/// The stock worked examples, one per region of the hierarchy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Preset {
    X1,
    X2,
    X3,
    X4,
    X5,
    X6,
    X7,
}

impl Preset {
    pub const ALL: [Preset; 7] =
        [Preset::X1, Preset::X2, Preset::X3, Preset::X4, Preset::X5, Preset::X6, Preset::X7];

    pub fn name(&self) -> &'static str {
        match self {
            Preset::X1 => "X1",
            Preset::X2 => "X2",
            Preset::X3 => "X3",
            Preset::X4 => "X4",
            Preset::X5 => "X5",
            Preset::X6 => "X6",
            Preset::X7 => "X7",
        }
    }
}

impl std::str::FromStr for Preset {
    type Err = TemplateError;

    fn from_str(s: &str) -> Result<Preset, TemplateError> {
        match s.to_ascii_uppercase().as_str() {
            "X1" => Ok(Preset::X1),
            "X2" => Ok(Preset::X2),
            "X3" => Ok(Preset::X3),
            "X4" => Ok(Preset::X4),
            "X5" => Ok(Preset::X5),
            "X6" => Ok(Preset::X6),
            "X7" => Ok(Preset::X7),
            other => Err(TemplateError::UnknownPreset(other.to_string())),
        }
    }
}

/// Builds the template behind a preset:
/// the integers (X1), the negative integers (X2), the naturals (X3), a
/// 4-chain (X4), a dense chain (X5), the three-point non-T₀ space (X6),
/// and two integer lines under an equivalent pair of tops (X7).
pub fn preset(p: Preset) -> ChainTemplate {
    match p {
        Preset::X1 => ChainTemplate::new(vec![("Z".into(), BlockType::Zeta)], &[]).unwrap(),
        Preset::X2 => ChainTemplate::new(vec![("Z-".into(), BlockType::OmegaStar)], &[]).unwrap(),
        Preset::X3 => ChainTemplate::new(vec![("N".into(), BlockType::Omega)], &[]).unwrap(),
        Preset::X4 => {
            let chain = Preorder::from_pairs(
                &["1", "2", "3", "4"],
                &[("1", "2"), ("2", "3"), ("3", "4")],
            )
            .unwrap();
            ChainTemplate::new(vec![("C".into(), BlockType::Fin(chain))], &[]).unwrap()
        }
        Preset::X5 => ChainTemplate::new(vec![("Q".into(), BlockType::Eta)], &[]).unwrap(),
        Preset::X6 => {
            let p = Preorder::from_pairs(
                &["a", "b", "c"],
                &[("c", "a"), ("c", "b"), ("a", "b"), ("b", "a")],
            )
            .unwrap();
            ChainTemplate::new(vec![("T".into(), BlockType::Fin(p))], &[]).unwrap()
        }
        Preset::X7 => {
            let tops =
                Preorder::from_pairs(&["w0", "w1"], &[("w0", "w1"), ("w1", "w0")]).unwrap();
            ChainTemplate::new(
                vec![
                    ("R0".into(), BlockType::Zeta),
                    ("R1".into(), BlockType::Zeta),
                    ("Top".into(), BlockType::Fin(tops)),
                ],
                &[("R0".into(), "Top".into()), ("R1".into(), "Top".into())],
            )
            .unwrap()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presets_have_the_documented_shapes() {
        assert_eq!(preset(Preset::X4).n_blocks(), 1);
        assert!(preset(Preset::X4).block(0).is_finite());
        let x7 = preset(Preset::X7);
        assert_eq!(x7.n_blocks(), 3);
        assert!(x7.is_below(0, 2) && x7.is_below(1, 2));
        assert!(!x7.is_below(0, 1));
        assert_eq!(x7.maximal_blocks(), vec![2]);
    }

    #[test]
    fn preset_parsing() {
        assert_eq!("x3".parse::<Preset>().unwrap(), Preset::X3);
        assert!(matches!("X9".parse::<Preset>(), Err(TemplateError::UnknownPreset(_))));
    }

    #[test]
    fn below_cycles_are_rejected() {
        let err = ChainTemplate::new(
            vec![("A".into(), BlockType::Zeta), ("B".into(), BlockType::Omega)],
            &[("A".into(), "B".into()), ("B".into(), "A".into())],
        )
        .unwrap_err();
        assert!(matches!(err, TemplateError::InvalidTemplate(_)));
    }

    #[test]
    fn below_closure_is_transitive() {
        let t = ChainTemplate::new(
            vec![
                ("A".into(), BlockType::Omega),
                ("B".into(), BlockType::Omega),
                ("C".into(), BlockType::Omega),
            ],
            &[("A".into(), "B".into()), ("B".into(), "C".into())],
        )
        .unwrap();
        assert!(t.is_below(0, 2));
    }

    #[test]
    fn empty_fin_block_is_invalid() {
        let empty = Preorder::from_pairs::<&str, &str, &str>(&[], &[]).unwrap();
        let err = ChainTemplate::new(vec![("E".into(), BlockType::Fin(empty))], &[]).unwrap_err();
        assert!(matches!(err, TemplateError::InvalidTemplate(_)));
    }
}
