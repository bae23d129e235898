//! Subsets of an indexed carrier (at most 64 elements) as `u64` bitmasks.

pub type Mask = u64;

/// Largest carrier size representable by a `Mask`.
pub const MAX_ELEMENTS: usize = 64;

pub fn bit(i: usize) -> Mask {
    debug_assert!(i < MAX_ELEMENTS);
    1u64 << i
}

pub fn full(n: usize) -> Mask {
    debug_assert!(n <= MAX_ELEMENTS);
    if n == MAX_ELEMENTS {
        !0
    } else {
        (1u64 << n) - 1
    }
}

pub fn has(m: Mask, i: usize) -> bool {
    m & bit(i) != 0
}

pub fn count(m: Mask) -> usize {
    m.count_ones() as usize
}

/// Indices of the set bits, ascending.
pub fn iter(m: Mask) -> BitIter {
    BitIter(m)
}

pub struct BitIter(Mask);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }
}

/// Renders a subset with its element labels, e.g. `{a, c}`.
pub fn render(m: Mask, labels: &[String]) -> String {
    let mut out = String::from("{");
    for (k, i) in iter(m).enumerate() {
        if k > 0 {
            out.push_str(", ");
        }
        out.push_str(&labels[i]);
    }
    out.push('}');
    out
}
