//! Unitalization over `Z/char(S)` and the ideal-embedding audit: `Spec(S)`
//! is homeomorphic to the open subspace `V(S)ᶜ` of `Spec(R)` whenever `S`
//! is an ideal of `R`.

use crate::error::RingError;
use crate::ideal::is_ideal;
use crate::ring::FiniteCommRing;
use crate::spectrum::spec_ring;
use order_core::mask::{self, Mask};
use topology_core::map::SpaceMap;

/// The Dorroh-style extension: pairs `(k, s)` with `k ∈ Z/char(S)`,
/// componentwise addition and `(k,s)(l,t) = (kl, k·t + l·s + st)`. The
/// identity is `(1, 0)` and `S` embeds as the ideal `{(0, s)}`.
///
/// Working over `Z/char(S)` rather than `Z` keeps the extension finite; it
/// is *a* unital extension containing `S` as an ideal, which is all the
/// embedding audit needs.
pub fn dorroh(s: &FiniteCommRing) -> Result<FiniteCommRing, RingError> {
    let c = s.characteristic();
    let ns = s.n();
    let n = c * ns;
    if n > mask::MAX_ELEMENTS {
        return Err(RingError::TooManyElements(n, mask::MAX_ELEMENTS));
    }
    let idx = |k: usize, x: usize| k * ns + x;
    let labels: Vec<String> = (0..c)
        .flat_map(|k| (0..ns).map(move |x| (k, x)))
        .map(|(k, x)| format!("({k},{})", s.label(x)))
        .collect();
    let mut add = vec![0usize; n * n];
    let mut mul = vec![0usize; n * n];
    for k in 0..c {
        for x in 0..ns {
            for l in 0..c {
                for y in 0..ns {
                    let p = idx(k, x) * n + idx(l, y);
                    add[p] = idx((k + l) % c, s.add(x, y));
                    let cross = s.add(s.nsmul(k, y), s.nsmul(l, x));
                    mul[p] = idx((k * l) % c, s.add(cross, s.mul(x, y)));
                }
            }
        }
    }
    let ring = FiniteCommRing::from_tables(labels, add, mul)?;
    debug_assert_eq!(ring.one(), Some(idx(1 % c, s.zero())));
    Ok(ring)
}

/// The carrier of `S` inside [`dorroh`]`(S)`: the slice `k = 0`.
pub fn embedded_ideal_mask(s: &FiniteCommRing) -> Mask {
    mask::full(s.n())
}

/// Audit of Spec(S) ≅ V(S)ᶜ ⊆ Spec(R) via `P ↦ P ∩ S`.
#[derive(Debug, Clone)]
pub struct EmbeddingReport {
    /// `V(S)ᶜ` as a point mask in Spec(R).
    pub open_mask: Mask,
    pub open_is_open: bool,
    pub spec_s_points: usize,
    pub bijective: bool,
    pub homeomorphism: bool,
    /// Whether `V(S)ᶜ` is dense in Spec(R). Reported only: the chosen
    /// extension does not guarantee it.
    pub dense: bool,
}

impl EmbeddingReport {
    pub fn ok(&self) -> bool {
        self.open_is_open && self.bijective && self.homeomorphism
    }
}

pub fn ideal_embedding_audit(r: &FiniteCommRing, s_mask: Mask) -> Result<EmbeddingReport, RingError> {
    if !is_ideal(r, s_mask) {
        return Err(RingError::NotAnIdeal(
            mask::render(s_mask, r.labels()),
            "the embedding audit needs an ideal of R",
        ));
    }
    let s_ring = FiniteCommRing::ideal_as_ring(r, s_mask)?;
    let spec_s = spec_ring(&s_ring);
    let spec_r = spec_ring(r);

    let open_mask = mask::full(spec_r.n_points()) & !spec_r.vanishing(s_mask);
    let open_is_open = spec_r.space.is_open(open_mask);
    let dense = spec_r.space.closure(open_mask) == spec_r.space.full_mask();

    // P ↦ P ∩ S, re-indexed into the carrier of S
    let kept: Vec<usize> = mask::iter(s_mask).collect();
    let mut image = Vec::new();
    let mut bijective = true;
    for p in mask::iter(open_mask) {
        let restricted = spec_r.primes[p].mask & s_mask;
        let mut s_prime: Mask = 0;
        for (new, &old) in kept.iter().enumerate() {
            if mask::has(restricted, old) {
                s_prime |= mask::bit(new);
            }
        }
        match spec_s.point_of_prime(s_prime) {
            Some(idx) if !image.contains(&idx) => image.push(idx),
            _ => bijective = false,
        }
    }
    bijective &= image.len() == spec_s.n_points();

    let homeomorphism = if bijective {
        let sub = spec_r.space.subspace(open_mask);
        SpaceMap::new(sub, spec_s.space.clone(), image.clone())
            .map(|f| f.is_homeomorphism())
            .unwrap_or(false)
    } else {
        false
    };

    Ok(EmbeddingReport {
        open_mask,
        open_is_open,
        spec_s_points: spec_s.n_points(),
        bijective,
        homeomorphism,
        dense,
    })
}
