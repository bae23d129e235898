//! The adjunction bijection `λ` between proper homs `M → F(X)` and
//! strongly continuous maps `X → spec(M)`, with exhaustive audits.

use crate::error::DualityError;
use crate::functors::{f_of_map, spec_hom, spec_hom_between};
use crate::maps::{d_map, h_map};
use crate::spectrum::spec_lattice;
use order_core::hom::{enumerate_proper_homs, LatticeHom};
use order_core::lattice::FiniteLattice;
use topology_core::map::{enumerate_strongly_continuous, SpaceMap};
use topology_core::space::FiniteSpace;

pub const LATTICE_LIMIT: usize = 5;
pub const SPACE_LIMIT: usize = 4;

/// `λ(M,X)(α) = spec(α) ∘ h_X`.
pub fn lambda(
    m: &FiniteLattice,
    x: &FiniteSpace,
    alpha: &LatticeHom,
) -> Result<SpaceMap, DualityError> {
    if alpha.source != *m {
        return Err(DualityError::ObjectMismatch("α must start at M"));
    }
    let h = h_map(x);
    if alpha.target != h.fundamental.lattice {
        return Err(DualityError::ObjectMismatch("α must land in F(X)"));
    }
    let spec_m = spec_lattice(m);
    let s = spec_hom_between(alpha, &h.spectrum, &spec_m)?;
    Ok(h.map.and_then(&s).expect("endpoints line up"))
}

/// The inverse direction: `ε ↦ F(ε) ∘ d`.
pub fn lambda_inverse(
    m: &FiniteLattice,
    x: &FiniteSpace,
    epsilon: &SpaceMap,
) -> Result<LatticeHom, DualityError> {
    if epsilon.source != *x {
        return Err(DualityError::ObjectMismatch("ε must start at X"));
    }
    let d = d_map(m);
    if epsilon.target != d.spectrum.space {
        return Err(DualityError::ObjectMismatch("ε must land in spec(M)"));
    }
    let f_eps = f_of_map(epsilon)?;
    Ok(d.hom.and_then(&f_eps).expect("endpoints line up"))
}

/// The two hom-sets, the pairing λ produces, and the audit verdicts.
#[derive(Debug, Clone)]
pub struct AdjunctionReport {
    pub hom_side: Vec<LatticeHom>,
    pub map_side: Vec<SpaceMap>,
    /// `lambda_table[i] = j` pairs `hom_side[i]` with `map_side[j]`.
    pub lambda_table: Vec<usize>,
    pub bijective: bool,
    /// `λ(λ⁻¹(ε)) = ε` for every ε.
    pub inverse_ok: bool,
    pub naturality_squares: usize,
    pub naturality_ok: bool,
    pub failure: Option<String>,
}

impl AdjunctionReport {
    pub fn ok(&self) -> bool {
        self.bijective && self.inverse_ok && self.naturality_ok
    }
}

impl std::fmt::Display for AdjunctionReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "proper homs M → F(X): {}", self.hom_side.len())?;
        writeln!(f, "strongly continuous maps X → spec(M): {}", self.map_side.len())?;
        writeln!(f, "lambda bijective: {}", self.bijective)?;
        writeln!(f, "inverse recovers every map: {}", self.inverse_ok)?;
        writeln!(
            f,
            "naturality squares: {} checked, all commute: {}",
            self.naturality_squares, self.naturality_ok
        )?;
        if let Some(w) = &self.failure {
            writeln!(f, "first failure: {w}")?;
        }
        Ok(())
    }
}

/// Enumerates both hom-sets exhaustively, pairs them through λ, verifies
/// bijectivity and the inverse construction, and checks both naturality
/// squares against the supplied morphism families (`space_family` are maps
/// `g : Y → X`, `lattice_family` are homs `f : L → M`).
pub fn adjunction_audit(
    m: &FiniteLattice,
    x: &FiniteSpace,
    space_family: &[SpaceMap],
    lattice_family: &[LatticeHom],
) -> Result<AdjunctionReport, DualityError> {
    if m.n() > LATTICE_LIMIT {
        return Err(DualityError::BoundExceeded {
            what: "lattice size",
            n: m.n(),
            limit: LATTICE_LIMIT,
        });
    }
    if x.n_points() > SPACE_LIMIT {
        return Err(DualityError::BoundExceeded {
            what: "space size",
            n: x.n_points(),
            limit: SPACE_LIMIT,
        });
    }

    let h = h_map(x);
    let spec_m = spec_lattice(m);
    let hom_side = enumerate_proper_homs(m, &h.fundamental.lattice);
    let map_side = enumerate_strongly_continuous(x, &spec_m.space);

    let mut failure = None;
    let mut lambda_table = Vec::with_capacity(hom_side.len());
    let mut hit = vec![false; map_side.len()];
    let mut bijective = true;
    for alpha in &hom_side {
        let s = spec_hom_between(alpha, &h.spectrum, &spec_m)?;
        let lam = h.map.and_then(&s).expect("endpoints line up");
        match map_side.iter().position(|e| *e == lam) {
            Some(j) => {
                if hit[j] {
                    bijective = false;
                    failure.get_or_insert_with(|| {
                        format!("lambda is not injective at map index {j}")
                    });
                }
                hit[j] = true;
                lambda_table.push(j);
            }
            None => {
                bijective = false;
                failure.get_or_insert_with(|| "lambda left the enumerated map side".to_string());
                lambda_table.push(usize::MAX);
            }
        }
    }
    if !hit.iter().all(|&b| b) {
        bijective = false;
        failure.get_or_insert_with(|| "lambda misses a strongly continuous map".to_string());
    }

    let mut inverse_ok = true;
    for eps in &map_side {
        let alpha = lambda_inverse(m, x, eps)?;
        let back = lambda(m, x, &alpha)?;
        if back != *eps {
            inverse_ok = false;
            failure.get_or_insert_with(|| "lambda(F(ε)∘d) failed to recover ε".to_string());
        }
    }

    let mut naturality_squares = 0usize;
    let mut naturality_ok = true;
    for g in space_family {
        if g.target != *x {
            return Err(DualityError::ObjectMismatch("family map must end at X"));
        }
        let f_g = f_of_map(g)?;
        for (i, alpha) in hom_side.iter().enumerate() {
            if lambda_table[i] == usize::MAX {
                continue;
            }
            let through_y = lambda(m, &g.source, &alpha.and_then(&f_g).expect("endpoints"))?;
            let through_x = g.and_then(&map_side[lambda_table[i]]).expect("endpoints");
            naturality_squares += 1;
            if through_y != through_x {
                naturality_ok = false;
                failure.get_or_insert_with(|| "space naturality square does not commute".into());
            }
        }
    }
    for f in lattice_family {
        if f.target != *m {
            return Err(DualityError::ObjectMismatch("family hom must end at M"));
        }
        let spec_f = spec_hom(f)?;
        for (i, alpha) in hom_side.iter().enumerate() {
            if lambda_table[i] == usize::MAX {
                continue;
            }
            // proper ∘ proper is proper, so λ is defined on the composite
            let composed = f.and_then(alpha).expect("endpoints");
            let lhs = lambda(&f.source, x, &composed)?;
            let rhs = map_side[lambda_table[i]].and_then(&spec_f).expect("endpoints");
            naturality_squares += 1;
            if lhs != rhs {
                naturality_ok = false;
                failure.get_or_insert_with(|| "lattice naturality square does not commute".into());
            }
        }
    }

    Ok(AdjunctionReport {
        hom_side,
        map_side,
        lambda_table,
        bijective,
        inverse_ok,
        naturality_squares,
        naturality_ok,
        failure,
    })
}

/// Endomorphism families for an audit: all strongly continuous `X → X` and
/// all proper `M → M`.
pub fn endomorphism_families(
    m: &FiniteLattice,
    x: &FiniteSpace,
) -> (Vec<SpaceMap>, Vec<LatticeHom>) {
    (enumerate_strongly_continuous(x, x), enumerate_proper_homs(m, m))
}

/// Convenience: audit against the endomorphism families.
pub fn adjunction_audit_with_endos(
    m: &FiniteLattice,
    x: &FiniteSpace,
) -> Result<AdjunctionReport, DualityError> {
    let (gs, fs) = endomorphism_families(m, x);
    adjunction_audit(m, x, &gs, &fs)
}
