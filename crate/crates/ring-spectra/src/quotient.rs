//! Quotient rings and the homeomorphism `θ : V(I) → Spec(A/I)`.

use crate::error::RingError;
use crate::ideal::is_ideal;
use crate::ring::FiniteCommRing;
use crate::spectrum::spec_ring;
use order_core::mask::{self, Mask};
use topology_core::map::SpaceMap;

/// A quotient ring together with the projection from the original carrier.
#[derive(Debug, Clone)]
pub struct QuotientRing {
    pub ring: FiniteCommRing,
    /// `projection[a]` is the quotient index of the coset `a + I`.
    pub projection: Vec<usize>,
}

/// Quotient by the additive cosets of an ideal. Coset labels use the least
/// representative, e.g. `[2]`.
pub fn quotient(a: &FiniteCommRing, ideal: Mask) -> Result<QuotientRing, RingError> {
    if !is_ideal(a, ideal) {
        return Err(RingError::NotAnIdeal(
            mask::render(ideal, a.labels()),
            "not an additive subgroup absorbing multiplication",
        ));
    }
    let n = a.n();
    let coset_of = |x: usize| -> Mask {
        let mut m = 0;
        for i in mask::iter(ideal) {
            m |= mask::bit(a.add(x, i));
        }
        m
    };
    let mut reps: Vec<usize> = Vec::new();
    let mut projection = vec![usize::MAX; n];
    for x in 0..n {
        if projection[x] != usize::MAX {
            continue;
        }
        let c = coset_of(x);
        let idx = reps.len();
        for y in mask::iter(c) {
            projection[y] = idx;
        }
        reps.push(mask::iter(c).next().expect("cosets are non-empty"));
    }
    let k = reps.len();
    let labels: Vec<String> = reps.iter().map(|&r| format!("[{}]", a.label(r))).collect();
    let mut add = vec![0usize; k * k];
    let mut mul = vec![0usize; k * k];
    for (i, &x) in reps.iter().enumerate() {
        for (j, &y) in reps.iter().enumerate() {
            add[i * k + j] = projection[a.add(x, y)];
            mul[i * k + j] = projection[a.mul(x, y)];
        }
    }
    let ring = FiniteCommRing::from_tables(labels, add, mul)?;
    Ok(QuotientRing { ring, projection })
}

/// Audit of `θ : V(I) → Spec(A/I), P ↦ P/I`.
#[derive(Debug, Clone)]
pub struct ThetaReport {
    pub v_points: usize,
    pub quotient_primes: usize,
    pub bijective: bool,
    pub homeomorphism: bool,
}

impl ThetaReport {
    pub fn ok(&self) -> bool {
        self.bijective && self.homeomorphism
    }
}

/// Verifies that `P ↦ P/I` is a bijection from `V(I)` onto `Spec(A/I)` and
/// a homeomorphism for the subspace topology.
pub fn theta_audit(a: &FiniteCommRing, ideal: Mask) -> Result<ThetaReport, RingError> {
    let q = quotient(a, ideal)?;
    let spec_a = spec_ring(a);
    let spec_q = spec_ring(&q.ring);

    let v_mask = spec_a.vanishing(ideal);
    let v_points: Vec<usize> = mask::iter(v_mask).collect();

    let mut image = Vec::with_capacity(v_points.len());
    let mut bijective = true;
    for &p in &v_points {
        let mut quotient_ideal: Mask = 0;
        for x in mask::iter(spec_a.primes[p].mask) {
            quotient_ideal |= mask::bit(q.projection[x]);
        }
        match spec_q.point_of_prime(quotient_ideal) {
            Some(idx) if !image.contains(&idx) => image.push(idx),
            _ => bijective = false,
        }
    }
    bijective &= image.len() == spec_q.n_points();

    let homeomorphism = if bijective {
        let sub = spec_a.space.subspace(v_mask);
        let table: Vec<usize> = image.clone();
        SpaceMap::new(sub, spec_q.space.clone(), table)
            .map(|f| f.is_homeomorphism())
            .unwrap_or(false)
    } else {
        false
    };

    Ok(ThetaReport {
        v_points: v_points.len(),
        quotient_primes: spec_q.n_points(),
        bijective,
        homeomorphism,
    })
}
