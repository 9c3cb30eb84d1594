//! Enumeration of bounded integer tuples.

/// All tuples `x` with `0 ≤ x_i ≤ bounds[i]` and `Σ x_i = total`, in
/// lexicographic order.
pub fn bounded_compositions(total: u64, bounds: &[u64]) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut suffix_cap = vec![0u64; bounds.len() + 1];
    for i in (0..bounds.len()).rev() {
        suffix_cap[i] = suffix_cap[i + 1] + bounds[i];
    }
    let mut cur = Vec::with_capacity(bounds.len());
    fn rec(
        i: usize,
        left: u64,
        bounds: &[u64],
        cap: &[u64],
        cur: &mut Vec<u64>,
        out: &mut Vec<Vec<u64>>,
    ) {
        if i == bounds.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let lo = left.saturating_sub(cap[i + 1]);
        let hi = bounds[i].min(left);
        for x in lo..=hi {
            cur.push(x);
            rec(i + 1, left - x, bounds, cap, cur, out);
            cur.pop();
        }
    }
    if total <= suffix_cap[0] {
        rec(0, total, bounds, &suffix_cap, &mut cur, &mut out);
    }
    out
}

/// All tuples in the box `[0, bound)^dim`, in lexicographic order.
pub fn box_tuples(dim: usize, bound: u64) -> impl Iterator<Item = Vec<u64>> {
    let count = (bound as u128).pow(dim as u32);
    (0..count).map(move |idx| box_tuple_at(dim, bound, idx))
}

/// Number of tuples in `[0, bound)^dim`.
pub fn box_size(dim: usize, bound: u64) -> u128 {
    (bound as u128).pow(dim as u32)
}

/// The `idx`-th tuple of `[0, bound)^dim` in lexicographic order.
pub fn box_tuple_at(dim: usize, bound: u64, mut idx: u128) -> Vec<u64> {
    let mut t = vec![0u64; dim];
    for slot in t.iter_mut().rev() {
        *slot = (idx % bound as u128) as u64;
        idx /= bound as u128;
    }
    t
}
