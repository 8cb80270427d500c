//! Named constructions: Gold, inverse and Dobbertin power maps, graphs and their
//! hyperplane slices, the multiplicative-subgroup Sidon set, and the closed-form
//! size and bound formulas.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::gf2::FieldContext;
use crate::sidon::{HyperplaneSlice, PointSet};
use crate::vbf::VectorialBooleanFunction;
use crate::MAX_DIM;

/// A construction selectable by name: `gold:k`, `inverse`, `dobbertin`,
/// `mult-subgroup` or `file:<path>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Gold(u32),
    Inverse,
    Dobbertin,
    MultSubgroup,
    FromFile(PathBuf),
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "inverse" => Ok(FamilySpec::Inverse),
            "dobbertin" => Ok(FamilySpec::Dobbertin),
            "mult-subgroup" => Ok(FamilySpec::MultSubgroup),
            "gold" => Ok(FamilySpec::Gold(1)),
            _ => {
                if let Some(k) = s.strip_prefix("gold:") {
                    let k = k
                        .parse()
                        .map_err(|_| Error::invalid(format!("bad Gold parameter `{k}`")))?;
                    Ok(FamilySpec::Gold(k))
                } else if let Some(path) = s.strip_prefix("file:") {
                    if path.is_empty() {
                        return Err(Error::invalid("file family needs a path"));
                    }
                    Ok(FamilySpec::FromFile(PathBuf::from(path)))
                } else {
                    Err(Error::invalid(format!("unknown family `{s}`")))
                }
            }
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Gold(k) => write!(f, "gold:{k}"),
            FamilySpec::Inverse => f.write_str("inverse"),
            FamilySpec::Dobbertin => f.write_str("dobbertin"),
            FamilySpec::MultSubgroup => f.write_str("mult-subgroup"),
            FamilySpec::FromFile(p) => write!(f, "file:{}", p.display()),
        }
    }
}

fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn power_function(ctx: &FieldContext, e: u64) -> VectorialBooleanFunction {
    let n = ctx.degree();
    VectorialBooleanFunction::from_fn(n, n, |x| ctx.pow(x, e))
        .expect("field degree is within truth-table limits")
}

/// `x -> x^(2^k + 1)`, APN whenever `gcd(k, n) = 1`.
pub fn gold_function(ctx: &FieldContext, k: u32) -> Result<VectorialBooleanFunction> {
    let n = ctx.degree();
    if k == 0 || k >= n || gcd(k, n) != 1 {
        return Err(Error::invalid(format!(
            "Gold exponent needs 1 <= k < n and gcd(k, n) = 1, got k = {k}, n = {n}"
        )));
    }
    Ok(power_function(ctx, (1u64 << k) + 1))
}

/// `x -> x^(-1)`, with `0 -> 0`.
pub fn inverse_function(ctx: &FieldContext) -> VectorialBooleanFunction {
    let n = ctx.degree();
    VectorialBooleanFunction::from_fn(n, n, |x| ctx.inv(x)).expect("field degree is within limits")
}

/// Exponent `2^{4k} + 2^{3k} + 2^{2k} + 2^k - 1` of the Dobbertin map for `n = 5k`.
pub fn dobbertin_exponent(n: u32) -> Result<u64> {
    if n == 0 || !n.is_multiple_of(5) || n > 75 {
        return Err(Error::invalid(format!(
            "Dobbertin map needs n = 5k, got {n}"
        )));
    }
    let k = n / 5;
    Ok((1u64 << (4 * k)) + (1 << (3 * k)) + (1 << (2 * k)) + (1 << k) - 1)
}

pub fn dobbertin_function(ctx: &FieldContext) -> Result<VectorialBooleanFunction> {
    Ok(power_function(ctx, dobbertin_exponent(ctx.degree())?))
}

/// Exact linearity of the inverse map for odd `n >= 5`:
/// `f - (f mod 4)` with `f = floor(2^{n/2+1} + 1) = isqrt(2^{n+2}) + 1`.
pub fn inverse_linearity_formula(n: u32) -> Result<u64> {
    if n < 5 || n.is_multiple_of(2) {
        return Err(Error::invalid(format!(
            "inverse linearity formula needs odd n >= 5, got {n}"
        )));
    }
    if n > 61 {
        return Err(Error::Capacity(format!(
            "n = {n} overflows 64-bit arithmetic"
        )));
    }
    // n + 2 is odd, so 2^{n+2} is never a perfect square
    let f = (1u64 << (n + 2)).isqrt() + 1;
    Ok(f - f % 4)
}

/// `2^{3n/5} + 2^{2n/5}`, the conjectured Dobbertin linearity (verified here for n = 5, 10).
pub fn dobbertin_conjectured_linearity(n: u32) -> Result<u64> {
    if n == 0 || !n.is_multiple_of(5) || n > 100 {
        return Err(Error::invalid(format!(
            "Dobbertin linearity needs n = 5k, got {n}"
        )));
    }
    Ok((1u64 << (3 * n / 5)) + (1u64 << (2 * n / 5)))
}

/// `G_F = {x | F(x) << n}` in `F_2^{n+m}`.
pub fn graph(f: &VectorialBooleanFunction) -> Result<PointSet> {
    let n = f.input_dim();
    let t = n + f.output_dim();
    if t > MAX_DIM {
        return Err(Error::Capacity(format!(
            "graph dimension {t} exceeds {MAX_DIM}"
        )));
    }
    let points = f
        .table()
        .iter()
        .enumerate()
        .map(|(x, &y)| x as u32 | (y << n))
        .collect();
    PointSet::new(t, points)
}

/// Sidon set of size `2^{n-1} + lin F / 2` in `F_2^{2n-1}`: the best hyperplane slice
/// of the graph of an APN function.
pub fn apn_slice_sidon(f: &VectorialBooleanFunction) -> Result<HyperplaneSlice> {
    if !f.is_apn()? {
        return Err(Error::invalid("APN slice needs an APN function"));
    }
    graph(f)?.best_hyperplane_slice()
}

fn prime_factors(mut v: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= v {
        if v.is_multiple_of(p) {
            out.push(p);
            while v.is_multiple_of(p) {
                v /= p;
            }
        }
        p += 1;
    }
    if v > 1 {
        out.push(v);
    }
    out
}

/// Smallest element (as an integer) whose multiplicative order is `2^n - 1`.
pub fn primitive_element(ctx: &FieldContext) -> u32 {
    let group = (1u64 << ctx.degree()) - 1;
    let primes = prime_factors(group);
    (1..ctx.order())
        .find(|&g| primes.iter().all(|&q| ctx.pow(g, group / q) != 1))
        .expect("the multiplicative group is cyclic")
}

/// The subgroup of order `2^n + 1` in `F_2^{2n}^*`, plus `0` when `n` is even.
pub fn mult_subgroup_sidon(n: u32) -> Result<PointSet> {
    if n == 0 || 2 * n > MAX_DIM {
        return Err(Error::invalid(format!(
            "subgroup construction needs 1 <= 2n <= {MAX_DIM}, got n = {n}"
        )));
    }
    let ctx = FieldContext::with_default_modulus(2 * n)?;
    let g = primitive_element(&ctx);
    let h = ctx.pow(g, (1u64 << n) - 1);
    let mut points = Vec::with_capacity((1 << n) + 2);
    let mut cur = 1;
    for _ in 0..=(1u32 << n) {
        points.push(cur);
        cur = ctx.mul(cur, h);
    }
    if n.is_multiple_of(2) {
        points.push(0);
    }
    PointSet::new(2 * n, points)
}

/// Size achieved by the classical constructions in `F_2^t`.
///
/// Even `t = 2n`: `2^n + 1` (n odd) or `2^n + 2` (n even).
/// Odd `t = 2n - 1`: `2^{n-1} + 2^{n/2}` (n even) or `2^{n-1} + 2^{(n-1)/2}` (n odd).
pub fn classical_size(t: u32) -> Result<u64> {
    if !(3..=63).contains(&t) {
        return Err(Error::invalid(format!(
            "classical size needs 3 <= t <= 63, got {t}"
        )));
    }
    Ok(if t.is_multiple_of(2) {
        let n = t / 2;
        (1u64 << n) + if n.is_multiple_of(2) { 2 } else { 1 }
    } else {
        let n = t.div_ceil(2);
        let bonus = if n.is_multiple_of(2) {
            n / 2
        } else {
            (n - 1) / 2
        };
        (1u64 << (n - 1)) + (1u64 << bonus)
    })
}

/// `2^{(t+1)/2} - 2` for odd `t`, `floor(sqrt(2^{t+1}) + 0.5)` for even `t`, in exact
/// integer arithmetic.
///
/// For `t` in {1, 3} the odd-case value is below the true maximum ({0,1,2,4} is a
/// Sidon set of size 4 in `F_2^3`).
pub fn sidon_upper_bound(t: u32) -> Result<u64> {
    if !(1..=60).contains(&t) {
        return Err(Error::invalid(format!(
            "upper bound needs 1 <= t <= 60, got {t}"
        )));
    }
    Ok(if t % 2 == 1 {
        (1u64 << t.div_ceil(2)) - 2
    } else {
        let n = 1u128 << (t + 1);
        let r = n.isqrt();
        // sqrt(n) + 1/2 >= r + 1  <=>  4n >= (2r + 1)^2
        if 4 * n >= (2 * r + 1) * (2 * r + 1) {
            (r + 1) as u64
        } else {
            r as u64
        }
    })
}

/// `|M|(|M|-1)/2 <= 2^t - 1`.
pub fn satisfies_trivial_bound(m: &PointSet) -> bool {
    let k = m.len() as u64;
    k * k.saturating_sub(1) / 2 < 1u64 << m.dim()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;

    fn field(n: u32) -> FieldContext {
        FieldContext::with_default_modulus(n).unwrap()
    }

    #[test]
    fn family_names_round_trip() {
        for name in [
            "gold:1",
            "gold:3",
            "inverse",
            "dobbertin",
            "mult-subgroup",
            "file:a/b.txt",
        ] {
            let spec: FamilySpec = name.parse().unwrap();
            assert_eq!(spec.to_string(), name);
        }
        assert_eq!("gold".parse::<FamilySpec>().unwrap(), FamilySpec::Gold(1));
        assert!("kasami".parse::<FamilySpec>().is_err());
        assert!("gold:x".parse::<FamilySpec>().is_err());
        assert!("file:".parse::<FamilySpec>().is_err());
    }

    #[test]
    fn gold_examples() {
        let f3 = gold_function(&field(3), 1).unwrap();
        assert!(f3.is_apn().unwrap());
        assert_eq!(f3.linearity().unwrap(), 4);
        assert!(gold_function(&field(4), 1).unwrap().is_apn().unwrap());
        assert!(gold_function(&field(5), 1).unwrap().is_quadratic().unwrap());
        assert!(gold_function(&field(4), 2).is_err());
        assert!(gold_function(&field(4), 0).is_err());
        assert!(gold_function(&field(4), 4).is_err());
    }

    #[test]
    fn gold_is_almost_bent_for_odd_n() {
        for n in [3, 5, 7, 9] {
            for k in (1..n).filter(|&k| gcd(k, n) == 1) {
                let f = gold_function(&field(n), k).unwrap();
                assert!(f.is_apn().unwrap());
                assert!(f.is_quadratic().unwrap());
                assert_eq!(
                    f.linearity().unwrap(),
                    1 << n.div_ceil(2),
                    "n = {n}, k = {k}"
                );
            }
        }
    }

    #[test]
    fn inverse_examples() {
        assert!(inverse_function(&field(5)).is_apn().unwrap());
        assert!(!inverse_function(&field(6)).is_apn().unwrap());
        let f7 = inverse_function(&field(7));
        assert_eq!(f7.linearity().unwrap(), 20);
        assert_eq!(inverse_linearity_formula(7).unwrap(), 20);
    }

    #[test]
    fn inverse_formula_values() {
        assert_eq!(inverse_linearity_formula(5).unwrap(), 12);
        assert_eq!(inverse_linearity_formula(7).unwrap(), 20);
        assert_eq!(inverse_linearity_formula(9).unwrap(), 44);
        assert_eq!(inverse_linearity_formula(11).unwrap(), 88);
        assert_eq!(inverse_linearity_formula(13).unwrap(), 180);
        assert!(inverse_linearity_formula(6).is_err());
        assert!(inverse_linearity_formula(3).is_err());
    }

    #[test]
    fn inverse_formula_matches_floating_point_evaluation() {
        // independent evaluation in f64 where it is exact enough
        for n in (5..=41).step_by(2) {
            let f = (2f64.powf(n as f64 / 2.0 + 1.0) + 1.0).floor() as u64;
            assert_eq!(inverse_linearity_formula(n).unwrap(), f - f % 4, "n = {n}");
        }
    }

    #[test]
    fn inverse_formula_matches_brute_force() {
        for n in [5, 7, 9] {
            let f = inverse_function(&field(n));
            assert_eq!(
                f.linearity().unwrap() as u64,
                inverse_linearity_formula(n).unwrap()
            );
        }
        assert_eq!(oracle::linearity_direct(&inverse_function(&field(5))), 12);
    }

    #[test]
    fn dobbertin_examples() {
        assert_eq!(dobbertin_exponent(5).unwrap(), 29);
        assert_eq!(dobbertin_exponent(10).unwrap(), 339);
        assert!(dobbertin_exponent(7).is_err());
        let f5 = dobbertin_function(&field(5)).unwrap();
        assert_eq!(oracle::differential_uniformity_brute_force(&f5), 2);
        assert!(f5.is_apn().unwrap());
        assert_eq!(f5.linearity().unwrap(), 12);
        assert!(dobbertin_function(&field(6)).is_err());
    }

    #[test]
    fn dobbertin_ten_bits() {
        let f = dobbertin_function(&field(10)).unwrap();
        assert!(f.is_apn().unwrap());
        assert_eq!(f.linearity().unwrap(), 80);
        assert_eq!(dobbertin_conjectured_linearity(10).unwrap(), 80);
    }

    #[test]
    fn dobbertin_conjecture_values() {
        assert_eq!(dobbertin_conjectured_linearity(5).unwrap(), 12);
        assert_eq!(dobbertin_conjectured_linearity(15).unwrap(), 576);
        assert!(dobbertin_conjectured_linearity(12).is_err());
    }

    #[test]
    fn field_representation_does_not_change_linearity() {
        // all degree-5 irreducibles give linearly equivalent power maps
        for modulus in (32u64..64).filter(|&p| crate::gf2::is_irreducible(p)) {
            let ctx = FieldContext::new(5, modulus).unwrap();
            assert_eq!(inverse_function(&ctx).linearity().unwrap(), 12);
            assert_eq!(dobbertin_function(&ctx).unwrap().linearity().unwrap(), 12);
        }
    }

    #[test]
    fn graph_examples() {
        let cube = gold_function(&field(3), 1).unwrap();
        let g = graph(&cube).unwrap();
        assert_eq!(g.len(), 8);
        assert_eq!(g.dim(), 6);
        assert!(g.is_sidon());
        assert!(oracle::is_sidon_four_tuples(&g));
        assert_eq!(g.linearity(), cube.linearity().unwrap());
        let id = VectorialBooleanFunction::from_fn(3, 3, |x| x).unwrap();
        assert!(!graph(&id).unwrap().is_sidon());
    }

    #[test]
    fn graph_spectrum_is_function_spectrum() {
        let cube = gold_function(&field(3), 1).unwrap();
        let fs = cube.walsh_spectrum().unwrap();
        let gs = graph(&cube).unwrap().walsh();
        for a in 0..8 {
            for b in 0..8 {
                assert_eq!(gs.get(a | (b << 3)), fs.get(a, b));
            }
        }
    }

    #[test]
    fn apn_slice_examples() {
        let s = apn_slice_sidon(&inverse_function(&field(5))).unwrap();
        assert_eq!((s.sliced.dim(), s.sliced.len()), (9, 22));
        assert!(s.sliced.is_sidon());
        let s = apn_slice_sidon(&gold_function(&field(4), 1).unwrap()).unwrap();
        assert_eq!((s.sliced.dim(), s.sliced.len()), (7, 12));
        assert!(apn_slice_sidon(&inverse_function(&field(6))).is_err());
    }

    #[test]
    fn slice_size_matches_linearity_for_all_small_apn_power_maps() {
        for n in 3..=7u32 {
            let ctx = field(n);
            for e in 1..(1u64 << n) - 1 {
                let f = VectorialBooleanFunction::from_fn(n, n, |x| ctx.pow(x, e)).unwrap();
                if !f.is_apn().unwrap() {
                    continue;
                }
                let lin = f.linearity().unwrap() as usize;
                let s = apn_slice_sidon(&f).unwrap();
                assert_eq!(s.sliced.len(), (1 << (n - 1)) + lin / 2, "n = {n}, e = {e}");
                assert!(s.sliced.is_sidon());
                assert!(f.apn_linearity_bound_check().unwrap());
            }
        }
    }

    #[test]
    fn primitive_elements() {
        let ctx = FieldContext::new(4, 0b10011).unwrap();
        assert_eq!(primitive_element(&ctx), 2);
        // x^4 + x^3 + x^2 + x + 1: x has order 5
        let ctx = FieldContext::new(4, 0b11111).unwrap();
        let g = primitive_element(&ctx);
        let order = (1..=15).find(|&e| ctx.pow(g, e) == 1).unwrap();
        assert_eq!(order, 15);
        for smaller in 1..g {
            assert!((1..15).any(|e| ctx.pow(smaller, e) == 1));
        }
    }

    #[test]
    fn mult_subgroup_examples() {
        let expected = [
            (1, 3, 2),
            (2, 6, 4),
            (3, 9, 6),
            (4, 18, 8),
            (5, 33, 10),
            (6, 66, 12),
        ];
        for (n, size, t) in expected {
            let m = mult_subgroup_sidon(n).unwrap();
            assert_eq!((m.len(), m.dim()), (size, t), "n = {n}");
            assert!(m.is_sidon());
        }
        assert!(!mult_subgroup_sidon(3).unwrap().contains(0));
        assert!(mult_subgroup_sidon(0).is_err());
        assert!(mult_subgroup_sidon(13).is_err());
    }

    #[test]
    fn mult_subgroup_sum_free_exactly_for_even_n() {
        for n in 1..=6 {
            let m = mult_subgroup_sidon(n).unwrap();
            let core: Vec<u32> = m.points().iter().copied().filter(|&p| p != 0).collect();
            let core = PointSet::new(m.dim(), core).unwrap();
            assert_eq!(core.len(), (1 << n) + 1);
            assert!(core.is_sidon());
            assert_eq!(core.is_sum_free(), n % 2 == 0, "n = {n}");
        }
    }

    #[test]
    fn classical_sizes_match_reference_row() {
        let row = [
            4, 6, 6, 9, 12, 18, 20, 33, 40, 66, 72, 129, 144, 258, 272, 513, 544, 1026, 1056, 2049,
            2112, 4098, 4160,
        ];
        for (t, &v) in (3..=25).zip(row.iter()) {
            assert_eq!(classical_size(t).unwrap(), v, "t = {t}");
        }
        assert!(classical_size(2).is_err());
    }

    #[test]
    fn upper_bound_values() {
        assert_eq!(sidon_upper_bound(15).unwrap(), 254);
        assert_eq!(sidon_upper_bound(7).unwrap(), 14);
        assert_eq!(sidon_upper_bound(10).unwrap(), 45);
        assert_eq!(sidon_upper_bound(4).unwrap(), 6);
        for t in (2..=40).step_by(2) {
            let f = ((2f64.powi(t as i32 + 1)).sqrt() + 0.5).floor() as u64;
            assert_eq!(sidon_upper_bound(t).unwrap(), f, "t = {t}");
        }
    }

    #[test]
    fn classical_sizes_within_upper_bound() {
        for t in 5..=25 {
            assert!(
                classical_size(t).unwrap() <= sidon_upper_bound(t).unwrap(),
                "t = {t}"
            );
        }
    }

    #[test]
    fn odd_bound_formula_undershoots_at_three() {
        let witness = PointSet::new(3, vec![0, 1, 2, 4]).unwrap();
        assert!(witness.is_sidon());
        assert_eq!(sidon_upper_bound(3).unwrap(), 2);
        assert_eq!(classical_size(3).unwrap(), 4);
    }

    #[test]
    fn trivial_bound() {
        assert!(satisfies_trivial_bound(
            &PointSet::new(3, vec![0, 1, 2, 4]).unwrap()
        ));
        assert!(!satisfies_trivial_bound(
            &PointSet::new(3, (0..6).collect()).unwrap()
        ));
    }
}
