//! Finite topological spaces as explicit open-set families.

use crate::error::TopologyError;
use order_core::mask::{self, Mask};
use order_core::preorder::Preorder;

/// Points above this bound make the all-up-sets construction impractical.
pub const ALEXANDROFF_LIMIT: usize = 16;

/// A finite space: labelled points plus the family of open sets as
/// bitmasks, deduplicated and sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteSpace {
    points: Vec<String>,
    opens: Vec<Mask>,
}

impl FiniteSpace {
    /// Validates the closure axioms and returns the normalized space.
    pub fn new(points: Vec<String>, opens: Vec<Mask>) -> Result<FiniteSpace, TopologyError> {
        let n = points.len();
        if n > mask::MAX_ELEMENTS {
            return Err(TopologyError::TooManyPoints(n, mask::MAX_ELEMENTS));
        }
        for (i, l) in points.iter().enumerate() {
            if points[..i].contains(l) {
                return Err(TopologyError::DuplicateLabel(l.clone()));
            }
        }
        let mut opens = opens;
        opens.sort_unstable();
        opens.dedup();
        let all = mask::full(n);
        debug_assert!(opens.iter().all(|&m| m & !all == 0), "opens must be point subsets");
        if !opens.contains(&0) {
            return Err(TopologyError::MissingEmpty);
        }
        if !opens.contains(&all) {
            return Err(TopologyError::MissingFull);
        }
        for (i, &u) in opens.iter().enumerate() {
            for &v in &opens[..i] {
                if opens.binary_search(&(u | v)).is_err() {
                    return Err(TopologyError::NotClosedUnderUnion(
                        mask::render(u, &points),
                        mask::render(v, &points),
                    ));
                }
                if opens.binary_search(&(u & v)).is_err() {
                    return Err(TopologyError::NotClosedUnderIntersection(
                        mask::render(u, &points),
                        mask::render(v, &points),
                    ));
                }
            }
        }
        Ok(FiniteSpace { points, opens })
    }

    /// Builds a space from label lists for each open set.
    pub fn from_open_sets<S: AsRef<str>>(
        points: Vec<String>,
        opens: &[Vec<S>],
    ) -> Result<FiniteSpace, TopologyError> {
        let mut masks = Vec::with_capacity(opens.len());
        for family in opens {
            let mut m = 0;
            for l in family {
                let i = points
                    .iter()
                    .position(|p| p == l.as_ref())
                    .ok_or_else(|| TopologyError::UnknownLabel(l.as_ref().to_string()))?;
                m |= mask::bit(i);
            }
            masks.push(m);
        }
        FiniteSpace::new(points, masks)
    }

    /// The Sierpiński space: points 1, 2 with opens ∅, {1}, {1,2}.
    pub fn sierpinski() -> FiniteSpace {
        FiniteSpace::new(vec!["1".into(), "2".into()], vec![0b00, 0b01, 0b11]).unwrap()
    }

    pub fn discrete(labels: Vec<String>) -> FiniteSpace {
        let n = labels.len();
        FiniteSpace::new(labels, (0..(1u64 << n)).collect()).unwrap()
    }

    pub fn indiscrete(labels: Vec<String>) -> FiniteSpace {
        let n = labels.len();
        FiniteSpace::new(labels, vec![0, mask::full(n)]).unwrap()
    }

    pub fn empty() -> FiniteSpace {
        FiniteSpace::new(vec![], vec![0]).unwrap()
    }

    pub fn n_points(&self) -> usize {
        self.points.len()
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn point_label(&self, i: usize) -> &str {
        &self.points[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.points.iter().position(|p| p == label)
    }

    pub fn full_mask(&self) -> Mask {
        mask::full(self.n_points())
    }

    /// Sorted open family.
    pub fn opens(&self) -> &[Mask] {
        &self.opens
    }

    pub fn is_open(&self, m: Mask) -> bool {
        self.opens.binary_search(&m).is_ok()
    }

    pub fn is_closed(&self, m: Mask) -> bool {
        self.is_open(self.full_mask() & !m)
    }

    /// Complements of the opens, sorted ascending.
    pub fn closed_sets(&self) -> Vec<Mask> {
        let mut out: Vec<Mask> = self.opens.iter().map(|&u| self.full_mask() & !u).collect();
        out.sort_unstable();
        out
    }

    /// Smallest closed superset of `m`.
    pub fn closure(&self, m: Mask) -> Mask {
        let mut c = self.full_mask();
        for s in self.closed_sets() {
            if m & !s == 0 {
                c &= s;
            }
        }
        c
    }

    /// Smallest open set containing the point `i` (finite spaces always
    /// have one).
    pub fn min_open(&self, i: usize) -> Mask {
        let mut u = self.full_mask();
        for &o in &self.opens {
            if mask::has(o, i) {
                u &= o;
            }
        }
        u
    }

    /// Specialization preorder: `x ≤ y` iff `x ∈ closure{y}`, equivalently
    /// `y` belongs to every open containing `x`.
    pub fn specialization(&self) -> Preorder {
        let rows: Vec<Mask> = (0..self.n_points()).map(|i| self.min_open(i)).collect();
        Preorder::from_up_sets(self.points.clone(), rows)
            .expect("minimal opens form a preorder")
    }

    /// Subspace on the points of `m`, with the trace topology.
    pub fn subspace(&self, m: Mask) -> FiniteSpace {
        let kept: Vec<usize> = mask::iter(m).collect();
        let points: Vec<String> = kept.iter().map(|&i| self.points[i].clone()).collect();
        let mut opens: Vec<Mask> = self
            .opens
            .iter()
            .map(|&u| {
                let mut t = 0;
                for (new, &old) in kept.iter().enumerate() {
                    if mask::has(u, old) {
                        t |= mask::bit(new);
                    }
                }
                t
            })
            .collect();
        opens.sort_unstable();
        opens.dedup();
        FiniteSpace { points, opens }
    }

    /// Adds one fresh point whose only neighbourhood is the whole space
    /// (equivalently, a new bottom in the specialization preorder).
    pub fn trivial_compactification(&self) -> FiniteSpace {
        let mut label = String::from("ω");
        let mut k = 1;
        while self.points.contains(&label) {
            k += 1;
            label = format!("ω{k}");
        }
        let mut points = self.points.clone();
        points.push(label);
        let mut opens = self.opens.clone();
        opens.push(mask::full(points.len()));
        FiniteSpace::new(points, opens).expect("adding a dense point preserves the axioms")
    }

    /// Graphviz output: one node per point, one edge `a → b` for each strict
    /// specialization cover pair (Hasse reduction).
    pub fn to_dot(&self) -> String {
        let sp = self.specialization();
        let n = self.n_points();
        let lt = |i: usize, j: usize| sp.le(i, j) && !sp.le(j, i);
        let mut out = String::from("digraph specialization {\n  rankdir=BT;\n");
        for p in &self.points {
            out.push_str(&format!("  \"{p}\";\n"));
        }
        for i in 0..n {
            for j in 0..n {
                if lt(i, j) && !(0..n).any(|k| lt(i, k) && lt(k, j)) {
                    out.push_str(&format!("  \"{}\" -> \"{}\";\n", self.points[i], self.points[j]));
                }
            }
        }
        out.push_str("}\n");
        out
    }

    pub fn describe(&self) -> String {
        format!(
            "space[{} points, {} opens]",
            self.n_points(),
            self.opens.len()
        )
    }
}

/// The Alexandroff space of a preorder: opens are exactly the up-sets.
///
/// Panics when the preorder has more than [`ALEXANDROFF_LIMIT`] elements;
/// callers taking untrusted input validate size first.
pub fn alexandroff(p: &Preorder) -> FiniteSpace {
    let n = p.n();
    assert!(n <= ALEXANDROFF_LIMIT, "alexandroff limited to {ALEXANDROFF_LIMIT} points");
    let opens: Vec<Mask> = (0..(1u64 << n))
        .filter(|&m| mask::iter(m).all(|i| p.up_mask(i) & !m == 0))
        .collect();
    FiniteSpace { points: p.labels().to_vec(), opens }
}
