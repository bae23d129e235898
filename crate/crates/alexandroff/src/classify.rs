//! Exact classification of a block template by finite case analysis.
//!
//! In the Alexandroff topology of the induced preorder: closed sets are
//! down-sets, compact opens are up-closures of finite point sets, and
//! irreducible closed sets are directed down-sets (the converse inclusion
//! is validated against the finite-space oracle in the tests). The rules
//! below decide each predicate from block types and the below-relation.

use crate::template::{BlockType, ChainTemplate};
use order_core::mask::{self, Mask};
use order_core::preorder::Preorder;
use topology_core::PredicateProfile;

/// A generator point for the coherence analysis: intersections of point
/// up-sets are controlled by which block each generator sits in, plus the
/// exact point for finite blocks (a choice inside an infinite chain never
/// matters: two chain generators merge into their maximum).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Generator {
    block: usize,
    /// Point index for `Fin` blocks, `None` for chain blocks.
    point: Option<usize>,
}

fn generator_universe(t: &ChainTemplate) -> Vec<Generator> {
    let mut out = Vec::new();
    for (b, block) in t.blocks().iter().enumerate() {
        match block {
            BlockType::Fin(p) => {
                for x in 0..p.n() {
                    out.push(Generator { block: b, point: Some(x) });
                }
            }
            _ => out.push(Generator { block: b, point: None }),
        }
    }
    out
}

/// Greatest equivalence class of a finite preorder, if one exists.
fn greatest_class(p: &Preorder) -> Option<Mask> {
    (0..p.n()).find(|&i| p.down_mask(i) == mask::full(p.n())).map(|i| p.class_mask(i))
}

/// The intersection `↑x₁ ∩ … ∩ ↑xₖ` of the generators in `s` is a compact
/// open iff every fully-included block without a least element is covered
/// from below by a block meeting the intersection.
fn intersection_is_compact(t: &ChainTemplate, universe: &[Generator], s: Mask) -> bool {
    let gen_blocks: Vec<usize> = mask::iter(s).map(|g| universe[g].block).collect();
    let mut t_mask: Mask = 0;
    for &b in &gen_blocks {
        t_mask |= mask::bit(b);
    }

    // does block `d` meet the intersection?
    let part_nonempty = |d: usize| -> bool {
        for a in mask::iter(t_mask) {
            if a != d && !t.is_below(a, d) {
                return false;
            }
        }
        if mask::has(t_mask, d) {
            if let BlockType::Fin(p) = t.block(d) {
                let points: Vec<usize> = mask::iter(s)
                    .filter(|&g| universe[g].block == d)
                    .map(|g| universe[g].point.expect("fin generators carry points"))
                    .collect();
                return (0..p.n()).any(|z| points.iter().all(|&x| p.le(x, z)));
            }
            // a chain tail is never empty
        }
        true
    };

    for c in 0..t.n_blocks() {
        let fully_included =
            !mask::has(t_mask, c) && mask::iter(t_mask).all(|a| t.is_below(a, c));
        if fully_included && t.block(c).lacks_least() {
            let witnessed = (0..t.n_blocks()).any(|d| t.is_below(d, c) && part_nonempty(d));
            if !witnessed {
                return false;
            }
        }
    }
    true
}

fn is_t0(t: &ChainTemplate) -> bool {
    t.blocks().iter().all(|b| match b {
        BlockType::Fin(p) => p.is_antisymmetric(),
        _ => true,
    })
}

fn is_compact(t: &ChainTemplate) -> bool {
    (0..t.n_blocks())
        .all(|b| !t.block(b).lacks_least() || t.blocks_below(b) != 0)
}

fn is_coherent(t: &ChainTemplate) -> bool {
    let universe = generator_universe(t);
    assert!(universe.len() <= 16, "coherence analysis limited to 16 generators");
    (1..(1u64 << universe.len())).all(|s| intersection_is_compact(t, &universe, s))
}

fn is_sober(t: &ChainTemplate) -> bool {
    is_t0(t) && t.blocks().iter().all(|b| !b.ascending_infinite())
}

fn is_almost_sober(t: &ChainTemplate) -> bool {
    if t.blocks().iter().any(|b| matches!(b, BlockType::Eta)) {
        return false;
    }
    (0..t.n_blocks()).all(|b| {
        if matches!(t.block(b), BlockType::Omega | BlockType::Zeta) {
            // the down-closure of the block must be the whole space
            t.blocks_below(b) == mask::full(t.n_blocks()) & !mask::bit(b)
        } else {
            true
        }
    })
}

fn is_empty_fundamental(t: &ChainTemplate) -> bool {
    t.maximal_blocks().iter().all(|&m| !t.block(m).ascending_infinite())
}

/// Every pair of points has an upper bound: a unique maximal block, with a
/// greatest class when that block is finite (chains are directed anyway).
fn is_directed(t: &ChainTemplate) -> bool {
    let maxima = t.maximal_blocks();
    if maxima.len() != 1 {
        return maxima.is_empty(); // the empty template is vacuously directed
    }
    match t.block(maxima[0]) {
        BlockType::Fin(p) => greatest_class(p).is_some(),
        _ => true,
    }
}

pub fn classify_template(t: &ChainTemplate) -> PredicateProfile {
    let coherent = is_coherent(t);
    let empty_fundamental = is_empty_fundamental(t);
    let ra_space = coherent && (empty_fundamental || is_directed(t));
    let profile = PredicateProfile::from_parts(
        is_t0(t),
        is_sober(t),
        is_almost_sober(t),
        coherent,
        is_compact(t),
        empty_fundamental,
        ra_space,
    );
    debug_assert!(profile.is_consistent());
    profile
}

/// Profile plus a witness line for each false flag.
#[derive(Debug, Clone)]
pub struct TemplateReport {
    pub profile: PredicateProfile,
    pub witnesses: Vec<(&'static str, String)>,
}

pub fn classify_template_report(t: &ChainTemplate) -> TemplateReport {
    let profile = classify_template(t);
    let mut witnesses = Vec::new();

    if !profile.t0 {
        'outer: for (b, block) in t.blocks().iter().enumerate() {
            if let BlockType::Fin(p) = block {
                for i in 0..p.n() {
                    for j in (i + 1)..p.n() {
                        if p.le(i, j) && p.le(j, i) {
                            witnesses.push((
                                "t0",
                                format!(
                                    "block `{}` identifies points `{}` and `{}`",
                                    t.name(b),
                                    p.label(i),
                                    p.label(j)
                                ),
                            ));
                            break 'outer;
                        }
                    }
                }
            }
        }
    }
    if !profile.compact {
        if let Some(b) = (0..t.n_blocks())
            .find(|&b| t.block(b).lacks_least() && t.blocks_below(b) == 0)
        {
            witnesses.push((
                "compact",
                format!(
                    "block `{}` ({}) has no least point and nothing below it, so its up-set cover has no finite subcover",
                    t.name(b),
                    t.block(b).type_name()
                ),
            ));
        }
    }
    if !profile.sober {
        if let Some(b) = (0..t.n_blocks()).find(|&b| t.block(b).ascending_infinite()) {
            witnesses.push((
                "sober",
                format!(
                    "the down-closure of block `{}` ({}) is an irreducible closed set with no greatest point",
                    t.name(b),
                    t.block(b).type_name()
                ),
            ));
        } else if !profile.t0 {
            witnesses.push(("sober", "an indistinguishable pair rules out unique generic points".into()));
        }
    }
    if !profile.almost_sober {
        if let Some(b) =
            (0..t.n_blocks()).find(|&b| matches!(t.block(b), BlockType::Eta))
        {
            witnesses.push((
                "almost_sober",
                format!(
                    "witness: cut below a point of the dense block `{}` — a proper irreducible closed set with no generic point",
                    t.name(b)
                ),
            ));
        } else if let Some(b) = (0..t.n_blocks()).find(|&b| {
            matches!(t.block(b), BlockType::Omega | BlockType::Zeta)
                && t.blocks_below(b) != mask::full(t.n_blocks()) & !mask::bit(b)
        }) {
            let missing = (0..t.n_blocks())
                .find(|&c| c != b && !t.is_below(c, b))
                .map(|c| t.name(c).to_string())
                .unwrap_or_default();
            witnesses.push((
                "almost_sober",
                format!(
                    "the down-closure of block `{}` misses block `{missing}`: a proper irreducible closed set with no greatest point",
                    t.name(b)
                ),
            ));
        }
    }
    if !profile.empty_fundamental {
        if let Some(&m) = t
            .maximal_blocks()
            .iter()
            .find(|&&m| t.block(m).ascending_infinite())
        {
            witnesses.push((
                "empty_fundamental",
                format!(
                    "the tower of up-sets inside maximal block `{}` has the finite intersection property but empty intersection",
                    t.name(m)
                ),
            ));
        }
    }
    if !profile.coherent {
        let universe = generator_universe(t);
        if let Some(s) =
            (1..(1u64 << universe.len())).find(|&s| !intersection_is_compact(t, &universe, s))
        {
            let gens: Vec<String> = mask::iter(s)
                .map(|g| match universe[g].point {
                    Some(x) => {
                        let BlockType::Fin(p) = t.block(universe[g].block) else { unreachable!() };
                        format!("{}.{}", t.name(universe[g].block), p.label(x))
                    }
                    None => t.name(universe[g].block).to_string(),
                })
                .collect();
            witnesses.push((
                "coherent",
                format!(
                    "the intersection of the up-sets of {{{}}} is not a compact open",
                    gens.join(", ")
                ),
            ));
        }
    }
    if !profile.ra_space {
        if profile.coherent {
            let maxima = t.maximal_blocks();
            let desc: Vec<&str> = maxima.iter().map(|&m| t.name(m)).collect();
            witnesses.push((
                "ra_space",
                format!(
                    "∅ is not fundamental and the maximal blocks {{{}}} carry disjoint compact up-sets",
                    desc.join(", ")
                ),
            ));
        } else {
            witnesses.push(("ra_space", "requires coherent".into()));
        }
    }
    for (flag, needs, value) in [
        ("balbes_dwinger", "t0, coherent and almost_sober", profile.balbes_dwinger),
        ("up_spectral", "coherent and sober", profile.up_spectral),
        ("down_spectral", "t0, coherent, compact and almost_sober", profile.down_spectral),
        ("almost_spectral", "up_spectral", profile.almost_spectral),
        ("spectral", "sober, coherent and compact", profile.spectral),
    ] {
        if !value {
            witnesses.push((flag, format!("requires {needs}")));
        }
    }
    TemplateReport { profile, witnesses }
}
