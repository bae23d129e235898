//! The named audit suites behind `spectra audit`.
//!
//! Per-instance work is fanned out over scoped worker threads in
//! contiguous chunks and reassembled in input order, so parallel runs are
//! byte-identical to sequential ones.

use crate::error::CliError;
use alexandroff::bridge::embed_finite;
use alexandroff::classify::classify_template;
use alexandroff::rng::{random_fin_template, SplitMix64};
use alexandroff::template::{preset, Preset};
use duality::adjunction::adjunction_audit_with_endos;
use duality::audits::{roundtrip_lattice_audit, roundtrip_space_audit};
use order_core::enumerate::enumerate_distributive_lattices;
use order_core::mask::{self, Mask};
use ring_spectra::dorroh::{dorroh, embedded_ideal_mask, ideal_embedding_audit};
use ring_spectra::ideal::enumerate_ideals;
use ring_spectra::quotient::theta_audit;
use ring_spectra::FiniteCommRing;
use topology_core::classify::classify;
use topology_core::enumerate::labeled_topologies;

pub const SUITES: [&str; 7] = [
    "roundtrip-spaces",
    "roundtrip-lattices",
    "adjunction",
    "theta",
    "ideal-embedding",
    "symbolic-oracle",
    "diagram",
];

/// Expected flag table for the seven presets, in profile order
/// (t0, sober, almost_sober, coherent, compact, empty_fundamental,
/// ra_space, balbes_dwinger, up_spectral, down_spectral, almost_spectral,
/// spectral).
pub const DIAGRAM_TABLE: [(Preset, [bool; 12]); 7] = [
    (Preset::X1, [true, false, true, true, false, false, true, true, false, false, false, false]),
    (Preset::X2, [true, true, true, true, false, true, true, true, true, false, true, false]),
    (Preset::X3, [true, false, true, true, true, false, true, true, false, true, false, false]),
    (Preset::X4, [true, true, true, true, true, true, true, true, true, true, true, true]),
    (Preset::X5, [true, false, false, true, false, false, true, false, false, false, false, false]),
    (Preset::X6, [false, false, true, true, true, true, true, false, false, false, false, false]),
    (Preset::X7, [false, false, false, true, false, true, true, false, false, false, false, false]),
];

#[derive(Debug, Clone)]
pub struct SuiteOutcome {
    pub name: &'static str,
    pub total: usize,
    pub passed: usize,
    pub first_failure: Option<String>,
    pub lines: Vec<String>,
}

impl SuiteOutcome {
    pub fn ok(&self) -> bool {
        self.passed == self.total
    }

    pub fn summary(&self) -> String {
        format!("suite {}: {}/{} passed", self.name, self.passed, self.total)
    }

    fn collect(name: &'static str, results: Vec<(bool, String)>, lines: Vec<String>) -> SuiteOutcome {
        let total = results.len();
        let passed = results.iter().filter(|(ok, _)| *ok).count();
        let first_failure = results.into_iter().find(|(ok, _)| !ok).map(|(_, w)| w);
        SuiteOutcome { name, total, passed, first_failure, lines }
    }
}

/// Applies `f` to every item on a small thread pool, keeping input order.
fn parallel_map<T, R, F>(items: Vec<T>, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync,
{
    let workers = std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1).min(8);
    if workers <= 1 || items.len() < 2 {
        return items.into_iter().map(f).collect();
    }
    let chunk_size = items.len().div_ceil(workers);
    let mut chunks: Vec<Vec<T>> = Vec::new();
    let mut items = items;
    while !items.is_empty() {
        let rest = items.split_off(items.len().min(chunk_size));
        chunks.push(items);
        items = rest;
    }
    let f = &f;
    let mut out: Vec<Vec<R>> = Vec::with_capacity(chunks.len());
    std::thread::scope(|scope| {
        let handles: Vec<_> = chunks
            .into_iter()
            .map(|chunk| scope.spawn(move || chunk.into_iter().map(f).collect::<Vec<R>>()))
            .collect();
        for h in handles {
            out.push(h.join().expect("audit worker panicked"));
        }
    });
    out.into_iter().flatten().collect()
}

/// `spec(F(X)) ≅ X` via `h`, across every topology with up to `max_points`
/// points; non-T₀ spaces must fail the homeomorphism exactly.
pub fn roundtrip_spaces(max_points: usize) -> Result<SuiteOutcome, CliError> {
    let mut results = Vec::new();
    let mut lines = Vec::new();
    for n in 0..=max_points {
        let spaces = labeled_topologies(n).map_err(|e| CliError::Bound(e.to_string()))?;
        let batch = parallel_map(spaces, |x| {
            let r = roundtrip_space_audit(&x);
            (r.ok(), r.profile.t0, format!("{}: h audit failed", x.describe()))
        });
        let t0 = batch.iter().filter(|(_, t0, _)| *t0).count();
        lines.push(format!(
            "{n} points: {} topologies, {} T0, all h-audits consistent",
            batch.len(),
            t0
        ));
        results.extend(batch.into_iter().map(|(ok, _, w)| (ok, w)));
    }
    Ok(SuiteOutcome::collect("roundtrip-spaces", results, lines))
}

/// `F(spec(L)) ≅ L` via `d`, across the distributive corpus.
pub fn roundtrip_lattices(max_elements: usize) -> Result<SuiteOutcome, CliError> {
    let corpus =
        enumerate_distributive_lattices(max_elements).map_err(|e| CliError::Bound(e.to_string()))?;
    let lines = vec![format!("{} distributive lattices with ≤ {max_elements} elements", corpus.len())];
    let results = parallel_map(corpus, |l| {
        let r = roundtrip_lattice_audit(&l);
        (r.ok() && r.distributive, format!("{}: d audit failed", l.describe()))
    });
    Ok(SuiteOutcome::collect("roundtrip-lattices", results, lines))
}

/// λ bijectivity plus naturality (against all endomorphisms) for every
/// pair of a distributive lattice and a space within the bounds.
pub fn adjunction(max_lattice: usize, max_points: usize) -> Result<SuiteOutcome, CliError> {
    let lattices =
        enumerate_distributive_lattices(max_lattice).map_err(|e| CliError::Bound(e.to_string()))?;
    let mut spaces = Vec::new();
    for n in 0..=max_points {
        spaces.extend(labeled_topologies(n).map_err(|e| CliError::Bound(e.to_string()))?);
    }
    let mut pairs = Vec::new();
    for m in &lattices {
        for x in &spaces {
            pairs.push((m.clone(), x.clone()));
        }
    }
    let lines = vec![format!(
        "{} lattices × {} spaces = {} pairs",
        lattices.len(),
        spaces.len(),
        pairs.len()
    )];
    let results = parallel_map(pairs, |(m, x)| match adjunction_audit_with_endos(&m, &x) {
        Ok(report) => (
            report.ok(),
            format!(
                "M = {}, X = {}: {}",
                m.describe(),
                x.describe(),
                report.failure.unwrap_or_else(|| "audit failed".into())
            ),
        ),
        Err(e) => (false, format!("M = {}, X = {}: {e}", m.describe(), x.describe())),
    });
    Ok(SuiteOutcome::collect("adjunction", results, lines))
}

/// `V(I) ≅ Spec(A/I)` for every ideal of every `Z/n` up to the bound.
pub fn theta(max_modulus: usize) -> Result<SuiteOutcome, CliError> {
    let mut instances = Vec::new();
    for n in 1..=max_modulus {
        let r = FiniteCommRing::cyclic(n).map_err(|e| CliError::Bound(e.to_string()))?;
        for i in enumerate_ideals(&r) {
            instances.push((n, r.clone(), i));
        }
    }
    let lines = vec![format!("{} (ring, ideal) instances over Z/1..Z/{max_modulus}", instances.len())];
    let results = parallel_map(instances, |(n, r, i)| {
        let label = format!("Z/{n}, ideal {}", mask::render(i, r.labels()));
        match theta_audit(&r, i) {
            Ok(rep) if rep.ok() => (true, label),
            Ok(_) => (false, format!("{label}: theta is not a homeomorphism")),
            Err(e) => (false, format!("{label}: {e}")),
        }
    });
    Ok(SuiteOutcome::collect("theta", results, lines))
}

/// `Spec(S) ≅ V(S)ᶜ ⊆ Spec(R)` for every ideal `S` of every `Z/n` up to
/// the bound, plus the Dorroh extensions of the stock non-unital rings.
pub fn ideal_embedding(max_modulus: usize) -> Result<SuiteOutcome, CliError> {
    let mut instances: Vec<(String, FiniteCommRing, Mask)> = Vec::new();
    for n in 1..=max_modulus {
        let r = FiniteCommRing::cyclic(n).map_err(|e| CliError::Bound(e.to_string()))?;
        for s in enumerate_ideals(&r) {
            let label = format!("Z/{n} ⊇ {}", mask::render(s, r.labels()));
            instances.push((label, r.clone(), s));
        }
    }
    let stock: [(usize, Mask); 3] = [(8, 0b01010101), (9, 0b001001001), (4, 0b0101)];
    for (n, carrier) in stock {
        let base = FiniteCommRing::cyclic(n).map_err(|e| CliError::Bound(e.to_string()))?;
        let s = FiniteCommRing::ideal_as_ring(&base, carrier)
            .map_err(|e| CliError::Validation(e.to_string()))?;
        let d = dorroh(&s).map_err(|e| CliError::Validation(e.to_string()))?;
        let label = format!("dorroh of the {}-element ideal of Z/{n}", s.n());
        instances.push((label, d, embedded_ideal_mask(&s)));
    }
    let count = instances.len();
    let results = parallel_map(instances, |(label, r, s)| match ideal_embedding_audit(&r, s) {
        Ok(rep) if rep.ok() => {
            (true, format!("{label} (dense: {})", rep.dense))
        }
        Ok(_) => (false, format!("{label}: embedding audit failed")),
        Err(e) => (false, format!("{label}: {e}")),
    });
    let dense = results.iter().filter(|(ok, w)| *ok && w.ends_with("(dense: true)")).count();
    let lines = vec![
        format!("{count} (ring, ideal) instances including 3 Dorroh extensions"),
        format!("density diagnostic (reported, never asserted): {dense}/{count} dense"),
    ];
    Ok(SuiteOutcome::collect("ideal-embedding", results, lines))
}

/// Seeded random all-finite templates: the symbolic classifier must agree
/// flag-by-flag with the honest classifier on the realized space.
pub fn symbolic_oracle(seed: u64, trials: usize) -> Result<SuiteOutcome, CliError> {
    let mut rng = SplitMix64::new(seed);
    let templates: Vec<_> = (0..trials).map(|_| random_fin_template(&mut rng, 6)).collect();
    let lines = vec![format!("{trials} templates from seed {seed}")];
    let results = parallel_map(templates, |t| {
        let symbolic = classify_template(&t);
        match embed_finite(&t) {
            Ok(space) => {
                let finite = classify(&space);
                (symbolic == finite, format!("{}: symbolic ≠ finite", t.describe()))
            }
            Err(e) => (false, format!("{}: {e}", t.describe())),
        }
    });
    Ok(SuiteOutcome::collect("symbolic-oracle", results, lines))
}

/// The seven presets against the frozen diagram table.
pub fn diagram() -> Result<SuiteOutcome, CliError> {
    let mut results = Vec::new();
    let mut lines = Vec::new();
    for (p, expected) in DIAGRAM_TABLE {
        let profile = classify_template(&preset(p));
        let ok = profile.flags() == expected;
        lines.push(format!("{}: {}", p.name(), if ok { "placed correctly" } else { "misplaced" }));
        results.push((ok, format!("{} classified off its diagram region", p.name())));
    }
    Ok(SuiteOutcome::collect("diagram", results, lines))
}

/// Dispatch by suite name.
pub fn run_suite(
    name: &str,
    max_points: Option<usize>,
    max_lattice: Option<usize>,
    seed: Option<u64>,
    trials: usize,
) -> Result<SuiteOutcome, CliError> {
    match name {
        "roundtrip-spaces" => roundtrip_spaces(max_points.unwrap_or(4)),
        "roundtrip-lattices" => roundtrip_lattices(max_lattice.unwrap_or(6)),
        "adjunction" => adjunction(max_lattice.unwrap_or(4), max_points.unwrap_or(3)),
        "theta" => theta(24),
        "ideal-embedding" => ideal_embedding(16),
        "symbolic-oracle" => {
            let seed = seed.ok_or(CliError::MissingSeed("symbolic-oracle"))?;
            symbolic_oracle(seed, trials)
        }
        "diagram" => diagram(),
        other => Err(CliError::UnknownSuite(other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagram_suite_is_seven_for_seven() {
        let outcome = diagram().unwrap();
        assert_eq!(outcome.total, 7);
        assert!(outcome.ok());
    }

    #[test]
    fn small_roundtrip_suites_pass() {
        let spaces = roundtrip_spaces(2).unwrap();
        assert!(spaces.ok());
        assert_eq!(spaces.total, 1 + 1 + 4);
        let lattices = roundtrip_lattices(4).unwrap();
        assert!(lattices.ok());
        assert_eq!(lattices.total, 5);
    }

    #[test]
    fn symbolic_oracle_needs_a_seed() {
        assert!(matches!(
            run_suite("symbolic-oracle", None, None, None, 10),
            Err(CliError::MissingSeed(_))
        ));
    }

    #[test]
    fn unknown_suite_is_reported() {
        assert!(matches!(
            run_suite("nonsense", None, None, None, 0),
            Err(CliError::UnknownSuite(_))
        ));
    }

    #[test]
    fn parallel_map_preserves_order() {
        let items: Vec<usize> = (0..100).collect();
        let doubled = parallel_map(items, |i| i * 2);
        assert_eq!(doubled, (0..100).map(|i| i * 2).collect::<Vec<_>>());
    }
}
