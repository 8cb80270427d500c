//! Definition-level reference routines.
//!
//! Each function here recomputes a quantity straight from its definition, without
//! the tables, transforms or search strategies used by the main implementation. They
//! are slow on purpose and are used by the test suites to cross-check the fast paths.

use std::collections::HashSet;

use crate::codes::LinearCodeSpec;
use crate::sidon::PointSet;
use crate::vbf::VectorialBooleanFunction;

fn parity(v: u32) -> bool {
    v.count_ones() % 2 == 1
}

fn sign(bit: bool) -> i32 {
    if bit {
        -1
    } else {
        1
    }
}

/// Field product via coefficient vectors: schoolbook multiplication, then long division.
pub fn schoolbook_field_mul(a: u32, b: u32, modulus: u64) -> u32 {
    let coeffs =
        |v: u64, len: usize| -> Vec<u8> { (0..len).map(|i| ((v >> i) & 1) as u8).collect() };
    let a = coeffs(a as u64, 32);
    let b = coeffs(b as u64, 32);
    let mut prod = [0u8; 64];
    for (i, &ai) in a.iter().enumerate() {
        for (j, &bj) in b.iter().enumerate() {
            prod[i + j] ^= ai & bj;
        }
    }
    let m = coeffs(modulus, 64);
    let deg_m = m.iter().rposition(|&c| c == 1).expect("nonzero modulus");
    for top in (deg_m..64).rev() {
        if prod[top] == 1 {
            for (k, &mk) in m.iter().enumerate().take(deg_m + 1) {
                prod[top - deg_m + k] ^= mk;
            }
        }
    }
    prod.iter()
        .take(deg_m)
        .enumerate()
        .fold(0u32, |acc, (i, &c)| acc | ((c as u32) << i))
}

/// Irreducibility by trial division with every polynomial of degree `1..=deg/2`.
pub fn is_irreducible_trial_division(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let deg = 63 - p.leading_zeros();
    let rem = |mut a: u64, d: u64| {
        let dd = 63 - d.leading_zeros();
        while a != 0 && 63 - a.leading_zeros() >= dd {
            a ^= d << (63 - a.leading_zeros() - dd);
        }
        a
    };
    (2u64..1 << (deg / 2 + 1))
        .filter(|d| 63 - d.leading_zeros() <= deg / 2)
        .all(|d| rem(p, d) != 0)
}

/// Full difference distribution table, maximum over nontrivial rows.
pub fn differential_uniformity_brute_force(f: &VectorialBooleanFunction) -> u32 {
    let n = f.input_dim();
    let m = f.output_dim();
    let mut best = 0;
    for a in 1..1u32 << n {
        for b in 0..1u32 << m {
            let count = (0..1u32 << n)
                .filter(|&x| f.eval(x) ^ f.eval(x ^ a) == b)
                .count() as u32;
            best = best.max(count);
        }
    }
    best
}

/// `W_F(a, b)` by direct summation, indexed `(b << n) | a`.
pub fn walsh_direct(f: &VectorialBooleanFunction) -> Vec<i32> {
    let n = f.input_dim();
    let m = f.output_dim();
    let mut out = Vec::with_capacity(1 << (n + m));
    for b in 0..1u32 << m {
        for a in 0..1u32 << n {
            out.push(
                (0..1u32 << n)
                    .map(|x| sign(parity(a & x) ^ parity(b & f.eval(x))))
                    .sum(),
            );
        }
    }
    out
}

pub fn linearity_direct(f: &VectorialBooleanFunction) -> u32 {
    let n = f.input_dim();
    walsh_direct(f)[1 << n..]
        .iter()
        .map(|v| v.unsigned_abs())
        .max()
        .unwrap_or(0)
}

/// `W_M(a)` by direct summation.
pub fn set_walsh_direct(m: &PointSet) -> Vec<i32> {
    (0..1u32 << m.dim())
        .map(|a| m.points().iter().map(|&p| sign(parity(a & p))).sum())
        .collect()
}

/// No four distinct elements sum to zero.
pub fn is_sidon_four_tuples(m: &PointSet) -> bool {
    let p = m.points();
    let k = p.len();
    for i in 0..k {
        for j in i + 1..k {
            for l in j + 1..k {
                for r in l + 1..k {
                    if p[i] ^ p[j] ^ p[l] ^ p[r] == 0 {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// No three distinct elements sum to zero.
pub fn is_sum_free_triples(m: &PointSet) -> bool {
    let p = m.points();
    let k = p.len();
    for i in 0..k {
        for j in i + 1..k {
            for l in j + 1..k {
                if p[i] ^ p[j] ^ p[l] == 0 {
                    return false;
                }
            }
        }
    }
    true
}

fn pair_sums_distinct(points: &[u32]) -> bool {
    let mut seen = HashSet::new();
    for (i, &p) in points.iter().enumerate() {
        for &q in &points[i + 1..] {
            if !seen.insert(p ^ q) {
                return false;
            }
        }
    }
    true
}

/// Re-verifies `M ∪ {x}` for every candidate `x`.
pub fn is_maximal_sidon_direct(m: &PointSet) -> bool {
    let mut pts = m.points().to_vec();
    for x in 0..1u32 << m.dim() {
        if m.contains(x) {
            continue;
        }
        pts.push(x);
        let ok = pair_sums_distinct(&pts);
        pts.pop();
        if ok {
            return false;
        }
    }
    true
}

/// Every derivative `D_a(x) = F(x^a) ^ F(x) ^ F(a) ^ F(0)` is additive on all pairs.
pub fn is_quadratic_by_derivatives(f: &VectorialBooleanFunction) -> bool {
    let size = 1u32 << f.input_dim();
    for a in 0..size {
        let d = |x: u32| f.eval(x ^ a) ^ f.eval(x) ^ f.eval(a) ^ f.eval(0);
        for x in 0..size {
            for y in x..size {
                if d(x ^ y) != d(x) ^ d(y) {
                    return false;
                }
            }
        }
    }
    true
}

/// Minimum weight over all nonzero codewords, by enumerating the whole code from a
/// generator basis. `None` for the zero code.
pub fn min_distance_by_enumeration(code: &LinearCodeSpec) -> Option<u32> {
    let rows = code.generator_matrix();
    let k = rows.len();
    assert!(k <= 20, "enumeration oracle limited to dimension 20");
    let words = rows.first().map_or(1, Vec::len);
    let mut best = None;
    let mut word = vec![0u64; words];
    // Gray code walk: step i flips generator row trailing_zeros(i)
    for i in 1u64..1 << k {
        let row = &rows[i.trailing_zeros() as usize];
        for (w, r) in word.iter_mut().zip(row) {
            *w ^= r;
        }
        let weight: u32 = word.iter().map(|w| w.count_ones()).sum();
        best = Some(best.map_or(weight, |b: u32| b.min(weight)));
    }
    best
}
