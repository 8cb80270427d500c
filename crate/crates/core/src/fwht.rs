//! In-place fast Walsh–Hadamard transform.

/// Transforms `values` in place: `out[a] = Σ_x (-1)^{popcount(a & x)} · in[x]`.
///
/// The length must be a power of two. Cost is `len · log2(len)` additions.
pub fn fwht(values: &mut [i32]) {
    let len = values.len();
    assert!(len.is_power_of_two(), "FWHT length must be a power of two");
    let mut half = 1;
    while half < len {
        for block in values.chunks_exact_mut(2 * half) {
            let (lo, hi) = block.split_at_mut(half);
            for (u, v) in lo.iter_mut().zip(hi.iter_mut()) {
                let (x, y) = (*u, *v);
                *u = x + y;
                *v = x - y;
            }
        }
        half *= 2;
    }
}
