//! Text rendering for the CLI commands. All output is assembled in
//! canonical order, so identical inputs produce byte-identical reports.

use crate::error::CliError;
use crate::input::ParsedObject;
use alexandroff::classify::classify_template_report;
use duality::spectrum::spec_lattice;
use order_core::enumerate::{all_lattices, enumerate_distributive_lattices, labeled_posets};
use order_core::mask::{self, Mask};
use ring_spectra::spectrum::spec_ring;
use topology_core::classify::{classify, classify_report};
use topology_core::enumerate::labeled_topologies;
use topology_core::space::{alexandroff, FiniteSpace};
use topology_core::PredicateProfile;

fn profile_lines(profile: &PredicateProfile, witnesses: &[(&'static str, String)]) -> String {
    let mut out = String::new();
    for (name, value) in PredicateProfile::FLAG_NAMES.iter().zip(profile.flags()) {
        match witnesses.iter().find(|(f, _)| f == name) {
            Some((_, w)) => out.push_str(&format!("{name}: {value} — {w}\n")),
            None => out.push_str(&format!("{name}: {value}\n")),
        }
    }
    out
}

pub fn classify_text(obj: &ParsedObject) -> Result<String, CliError> {
    let (header, body) = match obj {
        ParsedObject::Topology(x) => {
            let r = classify_report(x);
            (x.describe(), profile_lines(&r.profile, &r.witnesses))
        }
        ParsedObject::Preorder(p) => {
            let x = alexandroff(p);
            let r = classify_report(&x);
            (format!("alexandroff of {} elements", p.n()), profile_lines(&r.profile, &r.witnesses))
        }
        ParsedObject::Template(t) => {
            let r = classify_template_report(t);
            (t.describe(), profile_lines(&r.profile, &r.witnesses))
        }
        other => {
            return Err(CliError::Validation(format!(
                "classify expects a topology, preorder or template, got a {}",
                other.kind()
            )))
        }
    };
    Ok(format!("object: {header}\n{body}"))
}

fn space_dump(space: &FiniteSpace, title: &str) -> (String, String) {
    let mut out = String::new();
    if space.n_points() == 0 {
        out.push_str(&format!("spectrum of {title}: Spec is empty.\n"));
        return (out, space.to_dot());
    }
    out.push_str(&format!("spectrum of {title}: {} points\n", space.n_points()));
    out.push_str("points:\n");
    let short: Vec<String> = (0..space.n_points()).map(|i| format!("[{i}]")).collect();
    for (i, label) in space.points().iter().enumerate() {
        out.push_str(&format!("  [{i}] {label}\n"));
    }
    out.push_str(&format!("open sets ({}):\n", space.opens().len()));
    for &u in space.opens() {
        out.push_str(&format!("  {}\n", mask::render(u, &short)));
    }
    let profile = classify(space);
    out.push_str(&format!(
        "classified: t0={} sober={} spectral={}\n",
        profile.t0, profile.sober, profile.spectral
    ));
    (out, space.to_dot())
}

/// Returns the report text and the DOT rendering of the spectrum's
/// specialization order.
pub fn spec_text(obj: &ParsedObject) -> Result<(String, String), CliError> {
    match obj {
        ParsedObject::Lattice(l) => {
            let s = spec_lattice(l);
            Ok(space_dump(&s.space, &l.describe()))
        }
        ParsedObject::Ring(r) => {
            let s = spec_ring(r);
            Ok(space_dump(&s.space, &r.describe()))
        }
        other => Err(CliError::Validation(format!(
            "spec expects a lattice or ring, got a {}",
            other.kind()
        ))),
    }
}

pub fn enumerate_text(kind: &str, n: usize) -> Result<String, CliError> {
    match kind {
        "topologies" => {
            let spaces = labeled_topologies(n).map_err(|e| CliError::Bound(e.to_string()))?;
            let mut out = format!("topologies on {n} labelled points: {}\n", spaces.len());
            let mut counts = [0usize; 12];
            for x in &spaces {
                for (i, flag) in classify(x).flags().iter().enumerate() {
                    if *flag {
                        counts[i] += 1;
                    }
                }
            }
            for (name, count) in PredicateProfile::FLAG_NAMES.iter().zip(counts) {
                out.push_str(&format!("  {name}: {count}\n"));
            }
            Ok(out)
        }
        "posets" => {
            let posets = labeled_posets(n).map_err(|e| CliError::Bound(e.to_string()))?;
            Ok(format!("posets on {n} labelled elements: {}\n", posets.len()))
        }
        "lattices" => {
            let lats = all_lattices(n).map_err(|e| CliError::Bound(e.to_string()))?;
            let distributive = lats.iter().filter(|l| l.is_distributive()).count();
            let mut out =
                format!("lattices with at most {n} elements, up to isomorphism: {}\n", lats.len());
            out.push_str(&format!("  distributive: {distributive}\n"));
            for k in 1..=n {
                let size_k = lats.iter().filter(|l| l.n() == k).count();
                out.push_str(&format!("  with {k} elements: {size_k}\n"));
            }
            Ok(out)
        }
        "distributive-lattices" => {
            let lats =
                enumerate_distributive_lattices(n).map_err(|e| CliError::Bound(e.to_string()))?;
            Ok(format!(
                "distributive lattices with at most {n} elements, up to isomorphism: {}\n",
                lats.len()
            ))
        }
        other => Err(CliError::UnknownKind(other.to_string())),
    }
}

/// One mask rendered over short point indices (used by tests).
pub fn render_mask(m: Mask, labels: &[String]) -> String {
    mask::render(m, labels)
}
