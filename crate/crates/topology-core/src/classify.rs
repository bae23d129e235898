//! The classification predicates and their definition-level audit checkers.

use crate::space::FiniteSpace;
use order_core::mask::{self, Mask};

/// Boolean vector of the space classes.
///
/// The derived flags are determined by the primitive ones:
/// `spectral = sober ∧ coherent ∧ compact`, `up_spectral = coherent ∧ sober`,
/// `down_spectral = t0 ∧ coherent ∧ compact ∧ almost_sober`,
/// `almost_spectral = up_spectral`, and
/// `balbes_dwinger = t0 ∧ coherent ∧ almost_sober`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PredicateProfile {
    pub t0: bool,
    pub sober: bool,
    pub almost_sober: bool,
    pub coherent: bool,
    pub compact: bool,
    pub empty_fundamental: bool,
    pub ra_space: bool,
    pub balbes_dwinger: bool,
    pub up_spectral: bool,
    pub down_spectral: bool,
    pub almost_spectral: bool,
    pub spectral: bool,
}

impl PredicateProfile {
    /// Fills in the derived flags from the primitive seven.
    pub fn from_parts(
        t0: bool,
        sober: bool,
        almost_sober: bool,
        coherent: bool,
        compact: bool,
        empty_fundamental: bool,
        ra_space: bool,
    ) -> PredicateProfile {
        let up_spectral = coherent && sober;
        PredicateProfile {
            t0,
            sober,
            almost_sober,
            coherent,
            compact,
            empty_fundamental,
            ra_space,
            balbes_dwinger: t0 && coherent && almost_sober,
            up_spectral,
            down_spectral: t0 && coherent && compact && almost_sober,
            almost_spectral: up_spectral,
            spectral: sober && coherent && compact,
        }
    }

    /// Checks the defining formulas and the monotone implications between
    /// flags.
    pub fn is_consistent(&self) -> bool {
        self.spectral == (self.sober && self.coherent && self.compact)
            && self.up_spectral == (self.coherent && self.sober)
            && self.down_spectral == (self.t0 && self.coherent && self.compact && self.almost_sober)
            && self.almost_spectral == self.up_spectral
            && self.balbes_dwinger == (self.t0 && self.coherent && self.almost_sober)
            && (!self.sober || (self.t0 && self.almost_sober))
            && (!self.spectral || (self.up_spectral && self.down_spectral))
    }

    pub const FLAG_NAMES: [&'static str; 12] = [
        "t0",
        "sober",
        "almost_sober",
        "coherent",
        "compact",
        "empty_fundamental",
        "ra_space",
        "balbes_dwinger",
        "up_spectral",
        "down_spectral",
        "almost_spectral",
        "spectral",
    ];

    pub fn flags(&self) -> [bool; 12] {
        [
            self.t0,
            self.sober,
            self.almost_sober,
            self.coherent,
            self.compact,
            self.empty_fundamental,
            self.ra_space,
            self.balbes_dwinger,
            self.up_spectral,
            self.down_spectral,
            self.almost_spectral,
            self.spectral,
        ]
    }
}

impl std::fmt::Display for PredicateProfile {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (name, value) in Self::FLAG_NAMES.iter().zip(self.flags()) {
            writeln!(f, "{name}: {value}")?;
        }
        Ok(())
    }
}

/// Non-empty closed sets not expressible as a union of two proper closed
/// subsets; brute force over closed-set pairs, ascending mask order.
pub fn irreducible_closed_sets(x: &FiniteSpace) -> Vec<Mask> {
    let closeds = x.closed_sets();
    closeds
        .iter()
        .copied()
        .filter(|&f| f != 0)
        .filter(|&f| {
            !closeds.iter().any(|&g| {
                g & !f == 0
                    && g != f
                    && closeds.iter().any(|&h| h & !f == 0 && h != f && (g | h) == f)
            })
        })
        .collect()
}

/// The points whose closure is exactly `f`.
pub fn generic_points(x: &FiniteSpace, f: Mask) -> Vec<usize> {
    (0..x.n_points()).filter(|&p| x.closure(mask::bit(p)) == f).collect()
}

/// Fundamental subsets of a finite space.
///
/// Every open of a finite space is compact, and the empty set is always
/// fundamental (any collection of opens is finite), so this is the open
/// family itself. [`audit::fundamental_sets_by_definition`] recomputes the
/// same family from the definitions.
pub fn fundamental_sets(x: &FiniteSpace) -> Vec<Mask> {
    x.opens().to_vec()
}

/// Classifies a finite space.
///
/// `t0`, `sober` and `almost_sober` are computed from the definitions.
/// `compact`, `coherent` and `empty_fundamental` are theorems on finite
/// spaces and are set structurally; the definition-level checkers in
/// [`audit`] re-derive them by explicit search. `ra_space` is checked as
/// "coherent and the fundamental sets form a sublattice of the powerset".
pub fn classify(x: &FiniteSpace) -> PredicateProfile {
    let n = x.n_points();
    let t0 = (0..n).all(|i| (0..n).all(|j| i == j || x.min_open(i) != x.min_open(j)));
    let irreducibles = irreducible_closed_sets(x);
    let sober = irreducibles.iter().all(|&f| generic_points(x, f).len() == 1);
    let almost_sober = irreducibles
        .iter()
        .filter(|&&f| f != x.full_mask())
        .all(|&f| !generic_points(x, f).is_empty());

    let coherent = true;
    let compact = true;
    let empty_fundamental = true;

    let fundamental = fundamental_sets(x);
    let sublattice = fundamental.iter().all(|&a| {
        fundamental.iter().all(|&b| {
            fundamental.binary_search(&(a | b)).is_ok()
                && fundamental.binary_search(&(a & b)).is_ok()
        })
    });
    let ra_space = coherent && sublattice;

    let profile = PredicateProfile::from_parts(
        t0,
        sober,
        almost_sober,
        coherent,
        compact,
        empty_fundamental,
        ra_space,
    );
    debug_assert!(profile.is_consistent());
    profile
}

/// A profile plus a human-readable witness for every false flag.
#[derive(Debug, Clone)]
pub struct ClassifyReport {
    pub profile: PredicateProfile,
    pub witnesses: Vec<(&'static str, String)>,
}

pub fn classify_report(x: &FiniteSpace) -> ClassifyReport {
    let profile = classify(x);
    let mut witnesses = Vec::new();
    if !profile.t0 {
        'outer: for i in 0..x.n_points() {
            for j in (i + 1)..x.n_points() {
                if x.min_open(i) == x.min_open(j) {
                    witnesses.push((
                        "t0",
                        format!(
                            "points `{}` and `{}` are topologically indistinguishable",
                            x.point_label(i),
                            x.point_label(j)
                        ),
                    ));
                    break 'outer;
                }
            }
        }
    }
    if !profile.sober {
        for &f in &irreducible_closed_sets(x) {
            let gens = generic_points(x, f);
            if gens.len() != 1 {
                let desc = if gens.is_empty() {
                    "the closure of no point".to_string()
                } else {
                    format!(
                        "the closure of {} distinct points",
                        gens.len()
                    )
                };
                witnesses.push((
                    "sober",
                    format!(
                        "irreducible closed set {} is {desc}",
                        mask::render(f, x.points())
                    ),
                ));
                break;
            }
        }
    }
    if !profile.almost_sober {
        for &f in &irreducible_closed_sets(x) {
            if f != x.full_mask() && generic_points(x, f).is_empty() {
                witnesses.push((
                    "almost_sober",
                    format!(
                        "proper irreducible closed set {} is the closure of no point",
                        mask::render(f, x.points())
                    ),
                ));
                break;
            }
        }
    }
    for (flag, needs) in [
        ("balbes_dwinger", "t0, coherent and almost_sober"),
        ("up_spectral", "coherent and sober"),
        ("down_spectral", "t0, coherent, compact and almost_sober"),
        ("almost_spectral", "up_spectral"),
        ("spectral", "sober, coherent and compact"),
    ] {
        let value = match flag {
            "balbes_dwinger" => profile.balbes_dwinger,
            "up_spectral" => profile.up_spectral,
            "down_spectral" => profile.down_spectral,
            "almost_spectral" => profile.almost_spectral,
            _ => profile.spectral,
        };
        if !value {
            witnesses.push((flag, format!("requires {needs}")));
        }
    }
    ClassifyReport { profile, witnesses }
}

/// Definition-level checkers used to audit the structural constants.
///
/// They search the open family literally: compactness extracts a finite
/// subcover from every covering subfamily, coherence exhibits a basis of
/// compact opens closed under intersections, and ∅-fundamentality inspects
/// every family of non-empty open-compacts with empty intersection. The
/// subfamily scans run over all `2^|opens|` subfamilies with a running
/// union/intersection table.
pub mod audit {
    use super::*;

    const SUBFAMILY_LIMIT: usize = 20;

    fn subfamily_unions(opens: &[Mask]) -> Vec<Mask> {
        let k = opens.len();
        let mut table = vec![0 as Mask; 1 << k];
        for s in 1usize..(1 << k) {
            let top = s.trailing_zeros() as usize;
            table[s] = table[s & (s - 1)] | opens[top];
        }
        table
    }

    fn greedy_finite_subcover(members: &[Mask], k: Mask) -> Option<Vec<usize>> {
        let mut covered = 0 as Mask;
        let mut chosen = Vec::new();
        for (i, &u) in members.iter().enumerate() {
            if k & !covered == 0 {
                break;
            }
            if u & k & !covered != 0 {
                covered |= u;
                chosen.push(i);
            }
        }
        if k & !covered == 0 {
            Some(chosen)
        } else {
            None
        }
    }

    /// Every subfamily of the open family covering `k` admits a finite
    /// subcover.
    pub fn is_compact_by_cover_search(x: &FiniteSpace, k: Mask) -> bool {
        let opens = x.opens();
        assert!(opens.len() <= SUBFAMILY_LIMIT, "cover search limited to 2^{SUBFAMILY_LIMIT} subfamilies");
        let unions = subfamily_unions(opens);
        for (s, &union) in unions.iter().enumerate() {
            if k & !union == 0 {
                // the subfamily covers k: extract an explicit finite subcover
                let members: Vec<Mask> =
                    mask::iter(s as u64).map(|i| opens[i]).collect();
                if greedy_finite_subcover(&members, k).is_none() {
                    return false;
                }
            }
        }
        true
    }

    /// Searches for a basis of open-compact sets closed under finite
    /// intersections. The candidate is the full open family.
    pub fn is_coherent_by_basis_search(x: &FiniteSpace) -> bool {
        let opens = x.opens();
        let all_compact = opens.iter().all(|&u| is_compact_by_cover_search(x, u));
        let intersection_closed =
            opens.iter().all(|&u| opens.iter().all(|&v| x.is_open(u & v)));
        let basis = opens.iter().all(|&u| {
            let union_of_smaller: Mask =
                opens.iter().filter(|&&b| b & !u == 0).fold(0, |acc, &b| acc | b);
            union_of_smaller == u
        });
        all_compact && intersection_closed && basis
    }

    /// Every non-empty collection of non-empty open-compact sets with empty
    /// intersection has a finite subcollection with empty intersection.
    pub fn is_empty_fundamental_by_family_search(x: &FiniteSpace) -> bool {
        let members: Vec<Mask> = x
            .opens()
            .iter()
            .copied()
            .filter(|&u| u != 0 && is_compact_by_cover_search(x, u))
            .collect();
        let k = members.len();
        assert!(k <= SUBFAMILY_LIMIT, "family search limited to 2^{SUBFAMILY_LIMIT} subfamilies");
        let mut inters = vec![x.full_mask(); 1 << k];
        for s in 1usize..(1 << k) {
            let top = s.trailing_zeros() as usize;
            inters[s] = inters[s & (s - 1)] & members[top];
        }
        for (s, &inter) in inters.iter().enumerate().skip(1) {
            if inter == 0 {
                // a finite subcollection with empty intersection: s itself is
                // finite; shrink it greedily for the witness
                let mut witness: Vec<usize> = mask::iter(s as u64).collect();
                let mut i = 0;
                while i < witness.len() {
                    let without: Mask = witness
                        .iter()
                        .enumerate()
                        .filter(|&(j, _)| j != i)
                        .fold(x.full_mask(), |acc, (_, &m)| acc & members[m]);
                    if without == 0 {
                        witness.remove(i);
                    } else {
                        i += 1;
                    }
                }
                if witness.is_empty() {
                    return false;
                }
            }
        }
        true
    }

    /// F(X) recomputed from the definitions: non-empty open-compacts, plus
    /// ∅ when the clause for the empty set holds.
    pub fn fundamental_sets_by_definition(x: &FiniteSpace) -> Vec<Mask> {
        let mut out: Vec<Mask> = x
            .opens()
            .iter()
            .copied()
            .filter(|&u| u != 0 && is_compact_by_cover_search(x, u))
            .collect();
        if is_empty_fundamental_by_family_search(x) {
            out.push(0);
        }
        out.sort_unstable();
        out
    }

    pub fn is_sober_by_definition(x: &FiniteSpace) -> bool {
        irreducible_closed_sets(x).iter().all(|&f| generic_points(x, f).len() == 1)
    }

    pub fn is_almost_sober_by_definition(x: &FiniteSpace) -> bool {
        irreducible_closed_sets(x)
            .iter()
            .filter(|&&f| f != x.full_mask())
            .all(|&f| !generic_points(x, f).is_empty())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::alexandroff;
    use order_core::preorder::FinitePoset;

    fn x6() -> FiniteSpace {
        FiniteSpace::new(vec!["a".into(), "b".into(), "c".into()], vec![0b000, 0b011, 0b111])
            .unwrap()
    }

    #[test]
    fn sierpinski_is_spectral() {
        let p = classify(&FiniteSpace::sierpinski());
        assert!(p.sober && p.spectral && p.t0);
        assert!(p.is_consistent());
    }

    #[test]
    fn sierpinski_irreducibles() {
        let irr = irreducible_closed_sets(&FiniteSpace::sierpinski());
        assert_eq!(irr, vec![0b10, 0b11]);
    }

    #[test]
    fn discrete_two_point_irreducibles_are_the_singletons() {
        let d = FiniteSpace::discrete(vec!["1".into(), "2".into()]);
        assert_eq!(irreducible_closed_sets(&d), vec![0b01, 0b10]);
    }

    #[test]
    fn x6_profile_matches_its_diagram_placement() {
        let p = classify(&x6());
        assert!(!p.t0);
        assert!(p.almost_sober);
        assert!(p.ra_space);
        assert!(!p.balbes_dwinger);
        assert!(!p.sober);
    }

    #[test]
    fn x6_irreducibles_are_point_c_and_the_whole_space() {
        assert_eq!(irreducible_closed_sets(&x6()), vec![0b100, 0b111]);
    }

    #[test]
    fn four_chain_is_spectral() {
        let poset = FinitePoset::chain(4);
        let p = classify(&alexandroff(poset.preorder()));
        assert!(p.flags().iter().all(|&b| b), "all twelve flags hold");
    }

    #[test]
    fn report_names_indistinguishable_pair() {
        let report = classify_report(&x6());
        let t0 = report.witnesses.iter().find(|(f, _)| *f == "t0").unwrap();
        assert!(t0.1.contains("`a`") && t0.1.contains("`b`"));
    }

    #[test]
    fn empty_space_is_spectral() {
        let p = classify(&FiniteSpace::empty());
        assert!(p.spectral && p.t0 && p.sober);
    }

    #[test]
    fn audit_checkers_agree_on_samples() {
        for x in [
            FiniteSpace::sierpinski(),
            FiniteSpace::discrete(vec!["1".into(), "2".into(), "3".into()]),
            FiniteSpace::indiscrete(vec!["1".into(), "2".into()]),
            x6(),
            FiniteSpace::empty(),
        ] {
            assert!(audit::is_compact_by_cover_search(&x, x.full_mask()));
            assert!(audit::is_coherent_by_basis_search(&x));
            assert!(audit::is_empty_fundamental_by_family_search(&x));
            assert_eq!(audit::fundamental_sets_by_definition(&x), fundamental_sets(&x));
            let p = classify(&x);
            assert_eq!(audit::is_sober_by_definition(&x), p.sober);
            assert_eq!(audit::is_almost_sober_by_definition(&x), p.almost_sober);
        }
    }
}
