//! Bridges between templates and concrete finite spaces.

use crate::error::TemplateError;
use crate::template::{BlockType, ChainTemplate};
use order_core::preorder::Preorder;
use topology_core::space::{alexandroff, FiniteSpace};

/// Point labels for a template realization: bare payload labels when they
/// are globally unique, otherwise `block.point`.
fn global_labels(t: &ChainTemplate, payloads: &[&Preorder]) -> Vec<Vec<String>> {
    let mut all: Vec<&str> = Vec::new();
    for p in payloads {
        all.extend(p.labels().iter().map(|s| s.as_str()));
    }
    let mut sorted = all.clone();
    sorted.sort_unstable();
    sorted.dedup();
    let unique = sorted.len() == all.len();
    payloads
        .iter()
        .enumerate()
        .map(|(b, p)| {
            p.labels()
                .iter()
                .map(|l| if unique { l.clone() } else { format!("{}.{l}", t.name(b)) })
                .collect()
        })
        .collect()
}

/// Realizes an all-finite template as the Alexandroff space of its induced
/// preorder.
pub fn embed_finite(t: &ChainTemplate) -> Result<FiniteSpace, TemplateError> {
    let mut payloads: Vec<&Preorder> = Vec::with_capacity(t.n_blocks());
    for (b, block) in t.blocks().iter().enumerate() {
        match block {
            BlockType::Fin(p) => payloads.push(p),
            _ => return Err(TemplateError::HasInfiniteBlock(t.name(b).to_string())),
        }
    }
    let labels_per_block = global_labels(t, &payloads);
    let labels: Vec<String> = labels_per_block.iter().flatten().cloned().collect();

    let mut pairs: Vec<(String, String)> = Vec::new();
    for (b, p) in payloads.iter().enumerate() {
        for i in 0..p.n() {
            for j in 0..p.n() {
                if i != j && p.le(i, j) {
                    pairs.push((labels_per_block[b][i].clone(), labels_per_block[b][j].clone()));
                }
            }
        }
    }
    for a in 0..t.n_blocks() {
        for b in 0..t.n_blocks() {
            if t.is_below(a, b) {
                for la in &labels_per_block[a] {
                    for lb in &labels_per_block[b] {
                        pairs.push((la.clone(), lb.clone()));
                    }
                }
            }
        }
    }
    let preorder = Preorder::from_pairs(&labels, &pairs)?;
    Ok(alexandroff(&preorder))
}

/// Replaces every infinite block by a `k`-chain and realizes the result.
///
/// This is a diagnostic view only: it does not preserve the predicates
/// driven by infinite ascent or descent (compactness, soberness,
/// ∅-fundamentality); `t0` survives truncation.
pub fn truncate(t: &ChainTemplate, k: usize) -> Result<FiniteSpace, TemplateError> {
    assert!(k >= 1, "truncation depth must be at least 1");
    let blocks: Vec<(String, BlockType)> = t
        .names()
        .iter()
        .zip(t.blocks())
        .map(|(name, block)| {
            let replaced = match block {
                BlockType::Fin(p) => BlockType::Fin(p.clone()),
                _ => {
                    let labels: Vec<String> = (0..k).map(|i| i.to_string()).collect();
                    let pairs: Vec<(String, String)> =
                        (1..k).map(|i| (labels[i - 1].clone(), labels[i].clone())).collect();
                    BlockType::Fin(Preorder::from_pairs(&labels, &pairs).expect("chain"))
                }
            };
            (name.clone(), replaced)
        })
        .collect();
    let edges: Vec<(String, String)> = below_edges(t);
    let finite = ChainTemplate::new(blocks, &edges)?;
    embed_finite(&finite)
}

/// Adds a one-point block below every existing block (the template version
/// of the trivial compactification).
pub fn add_generic_bottom(t: &ChainTemplate) -> ChainTemplate {
    let mut name = String::from("bot");
    let mut k = 1;
    while t.names().contains(&name) {
        k += 1;
        name = format!("bot{k}");
    }
    let point = Preorder::from_pairs(&["0"], &[] as &[(&str, &str)]).unwrap();
    let mut blocks: Vec<(String, BlockType)> = t
        .names()
        .iter()
        .zip(t.blocks())
        .map(|(n, b)| (n.clone(), b.clone()))
        .collect();
    let mut edges = below_edges(t);
    for n in t.names() {
        edges.push((name.clone(), n.clone()));
    }
    blocks.push((name, BlockType::Fin(point)));
    ChainTemplate::new(blocks, &edges).expect("adding a bottom keeps the relation acyclic")
}

fn below_edges(t: &ChainTemplate) -> Vec<(String, String)> {
    let mut out = Vec::new();
    for a in 0..t.n_blocks() {
        for b in 0..t.n_blocks() {
            if t.is_below(a, b) {
                out.push((t.name(a).to_string(), t.name(b).to_string()));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::classify_template;
    use crate::template::{preset, Preset};
    use topology_core::classify::classify;
    use topology_core::map::are_homeomorphic;

    #[test]
    fn x4_embeds_as_the_four_chain_with_matching_profile() {
        let t = preset(Preset::X4);
        let x = embed_finite(&t).unwrap();
        let poset = order_core::preorder::FinitePoset::chain(4);
        assert!(are_homeomorphic(&x, &alexandroff(poset.preorder())).is_some());
        assert_eq!(classify_template(&t), classify(&x));
    }

    #[test]
    fn x6_embeds_with_matching_profile() {
        let t = preset(Preset::X6);
        let x = embed_finite(&t).unwrap();
        assert_eq!(x.opens().len(), 3);
        assert_eq!(classify_template(&t), classify(&x));
    }

    #[test]
    fn infinite_blocks_cannot_embed() {
        assert!(matches!(
            embed_finite(&preset(Preset::X1)),
            Err(TemplateError::HasInfiniteBlock(_))
        ));
    }

    #[test]
    fn two_singleton_blocks_embed_discretely() {
        use order_core::preorder::Preorder;
        let pt = || BlockType::Fin(Preorder::from_pairs::<&str, &str, &str>(&["0"], &[]).unwrap());
        let t = ChainTemplate::new(vec![("A".into(), pt()), ("B".into(), pt())], &[]).unwrap();
        let x = embed_finite(&t).unwrap();
        assert_eq!(x.points(), &["A.0".to_string(), "B.0".to_string()]);
        assert_eq!(x.opens().len(), 4);
        assert_eq!(classify_template(&t), classify(&x));
    }

    #[test]
    fn truncating_x1_gives_a_chain() {
        let x = truncate(&preset(Preset::X1), 3).unwrap();
        let poset = order_core::preorder::FinitePoset::chain(3);
        assert!(are_homeomorphic(&x, &alexandroff(poset.preorder())).is_some());
    }

    #[test]
    fn truncating_x7_keeps_the_t0_failure() {
        let t = preset(Preset::X7);
        let x = truncate(&t, 2).unwrap();
        assert_eq!(x.n_points(), 6);
        assert!(!classify(&x).t0);
        assert!(!classify_template(&t).t0);
    }

    #[test]
    fn truncation_can_disagree_on_compactness() {
        // symbolic X1 is not compact, but every truncation is
        let t = preset(Preset::X1);
        assert!(!classify_template(&t).compact);
        assert!(classify(&truncate(&t, 4).unwrap()).compact);
        // X3 happens to agree: a least element makes both sides compact
        let x3 = preset(Preset::X3);
        let truncated = truncate(&x3, 5).unwrap();
        assert_eq!(truncated.n_points(), 5);
        assert!(classify_template(&x3).compact && classify(&truncated).compact);
    }

    #[test]
    fn bottom_makes_x2_spectral() {
        let t = add_generic_bottom(&preset(Preset::X2));
        let p = classify_template(&t);
        assert!(p.spectral);
    }

    #[test]
    fn bottom_keeps_x4_spectral() {
        let p = classify_template(&add_generic_bottom(&preset(Preset::X4)));
        assert!(p.spectral);
    }

    #[test]
    fn bottom_does_not_repair_x5() {
        let p = classify_template(&add_generic_bottom(&preset(Preset::X5)));
        assert!(!p.almost_sober, "the dense cut survives compactification");
        assert!(p.compact);
    }

    #[test]
    fn bottom_name_avoids_collisions() {
        use order_core::preorder::Preorder;
        let pt = BlockType::Fin(Preorder::from_pairs::<&str, &str, &str>(&["0"], &[]).unwrap());
        let t = ChainTemplate::new(vec![("bot".into(), pt)], &[]).unwrap();
        let with_bottom = add_generic_bottom(&t);
        assert_eq!(with_bottom.names(), &["bot".to_string(), "bot2".to_string()]);
    }
}
