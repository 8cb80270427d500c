//! Point sets in `F_2^t`: Sidon and sum-free predicates, maximality, the set Walsh
//! transform, and slicing along hyperplanes.

use std::fmt::Write as _;

use crate::bits::{tokens, BitTable};
use crate::error::{Error, Result};
use crate::fwht::fwht;
use crate::gf2::dot;
use crate::MAX_DIM;

/// A finite subset of `F_2^t`, stored sorted and without duplicates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PointSet {
    t: u32,
    points: Vec<u32>,
}

impl PointSet {
    /// Builds a set from arbitrary-order points. Duplicates and out-of-range points are errors.
    pub fn new(t: u32, mut points: Vec<u32>) -> Result<Self> {
        if t > MAX_DIM {
            return Err(Error::Capacity(format!("dimension {t} exceeds {MAX_DIM}")));
        }
        if let Some(&p) = points.iter().find(|&&p| (p as u64) >> t != 0) {
            return Err(Error::invalid(format!(
                "point {p} does not fit in {t} bits"
            )));
        }
        points.sort_unstable();
        if let Some(w) = points.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::invalid(format!("duplicate point {}", w[0])));
        }
        Ok(Self { t, points })
    }

    pub fn dim(&self) -> u32 {
        self.t
    }

    pub fn points(&self) -> &[u32] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: u32) -> bool {
        self.points.binary_search(&p).is_ok()
    }

    fn space_size(&self) -> usize {
        1usize << self.t
    }

    fn membership(&self) -> BitTable {
        BitTable::with_bits(self.space_size(), self.points.iter().copied())
    }

    /// All pairwise sums of distinct elements are distinct.
    ///
    /// Runs in `O(|M|^2)` with a `2^t`-bit occupancy table.
    pub fn is_sidon(&self) -> bool {
        let k = self.points.len() as u64;
        if k * k.saturating_sub(1) / 2 > (self.space_size() as u64).saturating_sub(1) {
            return false;
        }
        let mut seen = BitTable::new(self.space_size());
        for (i, &p) in self.points.iter().enumerate() {
            for &q in &self.points[i + 1..] {
                if seen.test_and_set(p ^ q) {
                    return false;
                }
            }
        }
        true
    }

    /// No three distinct elements sum to zero.
    pub fn is_sum_free(&self) -> bool {
        let members = self.membership();
        for (i, &p) in self.points.iter().enumerate() {
            for &q in &self.points[i + 1..] {
                let r = p ^ q;
                // r equals p or q only when the other one is 0
                if r != p && r != q && members.get(r) {
                    return false;
                }
            }
        }
        true
    }

    /// No point of `F_2^t` can be added while keeping the Sidon property.
    ///
    /// A point `x` outside `M` is addable iff it is not a sum of three distinct
    /// elements of `M`, so the set is maximal iff `M` together with all such
    /// triple sums covers the space.
    pub fn is_maximal_sidon(&self) -> Result<bool> {
        if !self.is_sidon() {
            return Err(Error::invalid("maximality is only defined for Sidon sets"));
        }
        let mut covered = self.membership();
        let pts = &self.points;
        for i in 0..pts.len() {
            for j in i + 1..pts.len() {
                let pair = pts[i] ^ pts[j];
                for &r in &pts[j + 1..] {
                    covered.set(pair ^ r);
                }
            }
        }
        Ok(covered.count_ones() == self.space_size() as u64)
    }

    /// The points not blocked by `M`: every `x` such that `M ∪ {x}` is still Sidon.
    pub fn addable_points(&self) -> Result<Vec<u32>> {
        if !self.is_sidon() {
            return Err(Error::invalid(
                "addable points are only defined for Sidon sets",
            ));
        }
        let mut covered = self.membership();
        let pts = &self.points;
        for i in 0..pts.len() {
            for j in i + 1..pts.len() {
                let pair = pts[i] ^ pts[j];
                for &r in &pts[j + 1..] {
                    covered.set(pair ^ r);
                }
            }
        }
        Ok((0..self.space_size() as u32)
            .filter(|&x| !covered.get(x))
            .collect())
    }

    /// `W_M(a) = Σ_{m ∈ M} (-1)^{a·m}` for every `a`, by one FWHT of the indicator vector.
    pub fn walsh(&self) -> SetWalshSpectrum {
        let mut values = vec![0i32; self.space_size()];
        for &p in &self.points {
            values[p as usize] = 1;
        }
        fwht(&mut values);
        SetWalshSpectrum { t: self.t, values }
    }

    /// `max |W_M(a)|` over `a != 0`; zero when `t = 0`.
    pub fn linearity(&self) -> u32 {
        self.walsh().linearity()
    }

    /// `M + b`.
    pub fn translate(&self, b: u32) -> Result<PointSet> {
        if (b as u64) >> self.t != 0 {
            return Err(Error::invalid(format!(
                "translation {b} does not fit in {} bits",
                self.t
            )));
        }
        let mut points: Vec<u32> = self.points.iter().map(|&p| p ^ b).collect();
        points.sort_unstable();
        Ok(PointSet { t: self.t, points })
    }

    fn check_normal(&self, a: u32) -> Result<()> {
        if a == 0 {
            return Err(Error::invalid("hyperplane normal must be nonzero"));
        }
        if (a as u64) >> self.t != 0 {
            return Err(Error::invalid(format!(
                "normal {a} does not fit in {} bits",
                self.t
            )));
        }
        Ok(())
    }

    /// `{m ∈ M : a·m = side}`, kept in dimension `t`.
    pub fn hyperplane_intersect(&self, a: u32, side: u32) -> Result<PointSet> {
        self.check_normal(a)?;
        if side > 1 {
            return Err(Error::invalid("side must be 0 or 1"));
        }
        let points = self
            .points
            .iter()
            .copied()
            .filter(|&p| dot(a, p) == side)
            .collect();
        Ok(PointSet { t: self.t, points })
    }

    /// Re-encodes points of `H_a = {g : a·g = 0}` in `F_2^{t-1}` by deleting the
    /// coordinate at the lowest set bit of `a`.
    pub fn project_hyperplane(&self, a: u32) -> Result<PointSet> {
        self.check_normal(a)?;
        if self.t < 2 {
            return Err(Error::invalid("projection needs dimension at least 2"));
        }
        if let Some(&p) = self.points.iter().find(|&&p| dot(a, p) != 0) {
            return Err(Error::invalid(format!(
                "point {p} is not on the hyperplane {a}"
            )));
        }
        let pivot = a.trailing_zeros();
        let points = self
            .points
            .iter()
            .map(|&p| delete_coordinate(p, pivot))
            .collect();
        PointSet::new(self.t - 1, points)
    }

    /// The largest hyperplane slice: pick `a != 0` maximising `|W_M(a)|` (smallest `a` on
    /// ties), keep the side holding `(|M| + lin M) / 2` points, shift it onto `H_a` if it
    /// is the off-hyperplane coset, and project to `F_2^{t-1}`.
    pub fn best_hyperplane_slice(&self) -> Result<HyperplaneSlice> {
        if self.is_empty() {
            return Err(Error::invalid("cannot slice an empty set"));
        }
        if self.t < 2 {
            return Err(Error::invalid("slicing needs dimension at least 2"));
        }
        let spectrum = self.walsh();
        let (normal, walsh_value) = spectrum.argmax_abs();
        let side = u32::from(walsh_value <= 0);
        let mut part = self.hyperplane_intersect(normal, side)?;
        if side == 1 {
            part = part.translate(1 << normal.trailing_zeros())?;
        }
        let sliced = part.project_hyperplane(normal)?;
        Ok(HyperplaneSlice {
            normal,
            side,
            walsh_value,
            sliced,
        })
    }

    /// Parses the point-set format: a header line `t`, then one decimal point per line.
    pub fn parse(text: &str) -> Result<Self> {
        let mut toks = tokens(text);
        let (line, tok) = toks
            .next()
            .ok_or_else(|| Error::parse(text.lines().count().max(1), "missing dimension header"))?;
        let t: u32 = tok
            .parse()
            .map_err(|_| Error::parse(line, format!("bad dimension `{tok}`")))?;
        if t > MAX_DIM {
            return Err(Error::parse(
                line,
                format!("dimension {t} exceeds {MAX_DIM}"),
            ));
        }
        let mut points = Vec::new();
        let mut seen = BitTable::new(1usize << t);
        for (line, tok) in toks {
            let p: u64 = tok
                .parse()
                .map_err(|_| Error::parse(line, format!("bad point `{tok}`")))?;
            if p >> t != 0 {
                return Err(Error::parse(
                    line,
                    format!("point {p} does not fit in {t} bits"),
                ));
            }
            if seen.test_and_set(p as u32) {
                return Err(Error::parse(line, format!("duplicate point {p}")));
            }
            points.push(p as u32);
        }
        PointSet::new(t, points)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.t);
        for p in &self.points {
            let _ = writeln!(out, "{p}");
        }
        out
    }
}

#[inline]
fn delete_coordinate(p: u32, pivot: u32) -> u32 {
    let low = p & ((1 << pivot) - 1);
    let high = (p >> pivot) >> 1;
    low | (high << pivot)
}

/// Result of [`PointSet::best_hyperplane_slice`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperplaneSlice {
    /// Normal vector `a` of the chosen hyperplane.
    pub normal: u32,
    /// 0 for `M ∩ H_a`, 1 for the coset `M ∩ (H_a + b)`.
    pub side: u32,
    pub walsh_value: i32,
    pub sliced: PointSet,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetWalshSpectrum {
    t: u32,
    values: Vec<i32>,
}

impl SetWalshSpectrum {
    pub fn dim(&self) -> u32 {
        self.t
    }

    #[inline]
    pub fn get(&self, a: u32) -> i32 {
        self.values[a as usize]
    }

    pub fn values(&self) -> &[i32] {
        &self.values
    }

    pub fn linearity(&self) -> u32 {
        self.values[1..]
            .iter()
            .map(|v| v.unsigned_abs())
            .max()
            .unwrap_or(0)
    }

    /// Smallest nonzero `a` attaining the maximum of `|W_M(a)|`, with its value.
    fn argmax_abs(&self) -> (u32, i32) {
        let mut best = (1u32, self.values[1]);
        for (a, &v) in self.values.iter().enumerate().skip(2) {
            if v.unsigned_abs() > best.1.unsigned_abs() {
                best = (a as u32, v);
            }
        }
        best
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;
    use proptest::prelude::*;

    fn set(t: u32, pts: &[u32]) -> PointSet {
        PointSet::new(t, pts.to_vec()).unwrap()
    }

    #[test]
    fn construction_sorts_and_validates() {
        let m = set(3, &[4, 1, 2]);
        assert_eq!(m.points(), &[1, 2, 4]);
        assert!(PointSet::new(3, vec![1, 1]).is_err());
        assert!(PointSet::new(3, vec![8]).is_err());
        assert!(PointSet::new(26, vec![]).is_err());
    }

    #[test]
    fn sidon_examples() {
        assert!(set(3, &[0, 5, 7]).is_sidon());
        assert!(set(2, &[]).is_sidon());
        assert!(!set(2, &[0, 1, 2, 3]).is_sidon());
        assert!(set(3, &[0, 1, 2, 4]).is_sidon());
    }

    #[test]
    fn sum_free_examples() {
        assert!(!set(2, &[0, 1, 2, 3]).is_sum_free());
        assert!(set(3, &[1, 2, 4]).is_sum_free());
        assert!(set(3, &[0, 1, 2, 4]).is_sum_free());
        assert!(!set(3, &[1, 2, 3]).is_sum_free());
    }

    #[test]
    fn maximal_examples() {
        assert!(set(1, &[0, 1]).is_maximal_sidon().unwrap());
        assert!(set(0, &[0]).is_maximal_sidon().unwrap());
        let m = set(3, &[0, 1, 2]);
        assert!(!m.is_maximal_sidon().unwrap());
        assert!(m.addable_points().unwrap().contains(&4));
        assert!(!m.addable_points().unwrap().contains(&3));
        assert!(matches!(
            set(2, &[0, 1, 2, 3]).is_maximal_sidon(),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn set_walsh_examples() {
        let single = set(4, &[0]).walsh();
        assert!(single.values().iter().all(|&v| v == 1));
        let full = set(4, &(0..16).collect::<Vec<_>>()).walsh();
        assert_eq!(full.get(0), 16);
        assert!(full.values()[1..].iter().all(|&v| v == 0));
        assert_eq!(set(1, &[0, 1]).linearity(), 0);
    }

    #[test]
    fn translate_examples() {
        let m = set(4, &[0, 3, 5, 9]);
        assert_eq!(m.translate(0).unwrap(), m);
        assert_eq!(m.translate(6).unwrap().translate(6).unwrap(), m);
        assert!(m.translate(16).is_err());
    }

    #[test]
    fn hyperplane_examples() {
        let m = set(4, &[0, 3, 5, 9, 14]);
        let w = m.walsh();
        for a in 1..16 {
            let on = m.hyperplane_intersect(a, 0).unwrap();
            let off = m.hyperplane_intersect(a, 1).unwrap();
            assert_eq!(on.len() + off.len(), m.len());
            assert_eq!(2 * on.len() as i32, m.len() as i32 + w.get(a));
        }
        assert!(m.hyperplane_intersect(0, 0).is_err());
    }

    #[test]
    fn projection_examples() {
        let m = set(3, &[0b000, 0b110]);
        assert_eq!(m.project_hyperplane(1).unwrap(), set(2, &[0b00, 0b11]));
        assert!(set(3, &[0b001]).project_hyperplane(1).is_err());
        // pivot in the middle: a = 0b0110, pivot 1
        let m = set(4, &[0b0000, 0b0110, 0b1001, 0b1111]);
        assert_eq!(
            m.project_hyperplane(0b0110).unwrap(),
            set(3, &[0b000, 0b010, 0b101, 0b111])
        );
    }

    #[test]
    fn slice_of_singleton() {
        let s = set(3, &[0]).best_hyperplane_slice().unwrap();
        assert_eq!(s.sliced.len(), 1);
        assert_eq!(s.sliced.dim(), 2);
        assert_eq!(s.normal, 1);
        assert!(set(3, &[]).best_hyperplane_slice().is_err());
        assert!(set(1, &[0]).best_hyperplane_slice().is_err());
    }

    #[test]
    fn slice_takes_the_coset_when_walsh_is_negative() {
        // every point has bit 0 set, so W(1) = -|M|
        let m = set(3, &[1, 3, 5]);
        let s = m.best_hyperplane_slice().unwrap();
        assert_eq!((s.normal, s.side, s.walsh_value), (1, 1, -3));
        assert_eq!(s.sliced, set(2, &[0, 1, 2]));
    }

    #[test]
    fn text_format() {
        let m = PointSet::parse("# demo\n3\n4\n 1 \n\n2 # trailing\n").unwrap();
        assert_eq!(m, set(3, &[1, 2, 4]));
        assert_eq!(PointSet::parse(&m.to_text()).unwrap(), m);
        assert_eq!(PointSet::parse("5\n").unwrap().len(), 0);
        match PointSet::parse("3\n1\n9\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
        match PointSet::parse("3\n1\nx\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
        match PointSet::parse("3\n1\n1\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
        assert!(PointSet::parse("# nothing\n").is_err());
    }

    fn arb_set(max_t: u32, max_len: usize) -> impl Strategy<Value = PointSet> {
        (1..=max_t).prop_flat_map(move |t| {
            proptest::collection::btree_set(0u32..(1 << t), 0..=max_len.min(1 << t))
                .prop_map(move |pts| PointSet::new(t, pts.into_iter().collect()).unwrap())
        })
    }

    /// Greedy Sidon set from a shuffled candidate order.
    fn arb_sidon(max_t: u32) -> impl Strategy<Value = PointSet> {
        (2..=max_t, any::<u64>()).prop_map(|(t, seed)| {
            use rand::{seq::SliceRandom, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let mut cands: Vec<u32> = (0..1 << t).collect();
            cands.shuffle(&mut rng);
            let mut pts = Vec::new();
            for c in cands {
                pts.push(c);
                if !PointSet::new(t, pts.clone()).unwrap().is_sidon() {
                    pts.pop();
                }
            }
            PointSet::new(t, pts).unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn sidon_fast_path_matches_four_tuples(m in arb_set(7, 24)) {
            prop_assert_eq!(m.is_sidon(), oracle::is_sidon_four_tuples(&m));
        }

        #[test]
        fn sum_free_matches_triples(m in arb_set(6, 16)) {
            prop_assert_eq!(m.is_sum_free(), oracle::is_sum_free_triples(&m));
        }

        #[test]
        fn set_walsh_matches_direct(m in arb_set(8, 40)) {
            let direct = oracle::set_walsh_direct(&m);
            prop_assert_eq!(m.walsh().values().to_vec(), direct);
        }

        #[test]
        fn set_walsh_inversion_and_parseval(m in arb_set(9, 60)) {
            let w = m.walsh();
            let sum: i64 = w.values().iter().map(|&v| v as i64).sum();
            prop_assert_eq!(sum, if m.contains(0) { 1i64 << m.dim() } else { 0 });
            let energy: i64 = w.values().iter().map(|&v| (v as i64).pow(2)).sum();
            prop_assert_eq!(energy, (m.len() as i64) << m.dim());
            prop_assert_eq!(w.get(0), m.len() as i32);
            for a in 1..(1u32 << m.dim()) {
                prop_assert_eq!(w.get(a).rem_euclid(2) as usize, m.len() % 2);
            }
        }

        #[test]
        fn translation_preserves_sidon(m in arb_set(8, 20), b: u32) {
            let b = b & ((1 << m.dim()) - 1);
            prop_assert_eq!(m.translate(b).unwrap().is_sidon(), m.is_sidon());
        }

        #[test]
        fn maximality_matches_direct(m in arb_sidon(7)) {
            prop_assert!(m.is_maximal_sidon().unwrap());
            prop_assert_eq!(m.is_maximal_sidon().unwrap(), oracle::is_maximal_sidon_direct(&m));
        }

        #[test]
        fn maximality_of_subsets_matches_direct(m in arb_sidon(7), drop in 0usize..8) {
            let keep: Vec<u32> = m.points().iter().copied().skip(drop.min(m.len())).collect();
            let sub = PointSet::new(m.dim(), keep).unwrap();
            prop_assert_eq!(sub.is_maximal_sidon().unwrap(), oracle::is_maximal_sidon_direct(&sub));
        }

        #[test]
        fn slicing_preserves_sidon(m in arb_sidon(8), a_raw: u32, side in 0u32..2) {
            let a = (a_raw % ((1 << m.dim()) - 1)) + 1;
            let mut part = m.hyperplane_intersect(a, side).unwrap();
            if side == 1 {
                part = part.translate(1 << a.trailing_zeros()).unwrap();
            }
            let proj = part.project_hyperplane(a).unwrap();
            prop_assert_eq!(proj.len(), part.len());
            prop_assert!(proj.is_sidon());
        }

        #[test]
        fn projection_is_linear_and_preserves_sidon(m in arb_set(8, 30), a_raw: u32) {
            let a = (a_raw % ((1 << m.dim()) - 1)) + 1;
            prop_assume!(m.dim() >= 2);
            let on = m.hyperplane_intersect(a, 0).unwrap();
            let proj = on.project_hyperplane(a).unwrap();
            let pivot = a.trailing_zeros();
            for &p in on.points() {
                for &q in on.points() {
                    prop_assert_eq!(
                        delete_coordinate(p ^ q, pivot),
                        delete_coordinate(p, pivot) ^ delete_coordinate(q, pivot)
                    );
                }
            }
            prop_assert_eq!(proj.is_sidon(), on.is_sidon());
        }

        #[test]
        fn best_slice_size(m in arb_set(8, 40)) {
            prop_assume!(m.dim() >= 2 && !m.is_empty());
            let s = m.best_hyperplane_slice().unwrap();
            prop_assert_eq!(2 * s.sliced.len(), m.len() + m.linearity() as usize);
            prop_assert_eq!(s.walsh_value.unsigned_abs(), m.linearity());
            if m.is_sidon() {
                prop_assert!(s.sliced.is_sidon());
            }
        }

        #[test]
        fn text_round_trip(m in arb_set(10, 50)) {
            prop_assert_eq!(PointSet::parse(&m.to_text()).unwrap(), m);
        }
    }
}
