//! Binary linear codes given by parity-check columns, and the Sidon-set route to
//! codes with minimum distance at least 5.

use std::collections::HashMap;
use std::fmt;
use std::io::{self, Write};

use crate::bits::{tokens, BitTable};
use crate::error::{Error, Result};
use crate::sidon::PointSet;
use crate::MAX_DIM;

/// Largest weight [`LinearCodeSpec::exact_min_distance`] will search for.
pub const MAX_DISTANCE_CAP: u32 = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MinDistance {
    Exact(u32),
    AtLeast(u32),
}

impl MinDistance {
    pub fn lower_bound(self) -> u32 {
        match self {
            MinDistance::Exact(d) | MinDistance::AtLeast(d) => d,
        }
    }
}

impl fmt::Display for MinDistance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MinDistance::Exact(d) => write!(f, "{d}"),
            MinDistance::AtLeast(d) => write!(f, ">={d}"),
        }
    }
}

/// A `[m, m - t]` code defined by `m` distinct nonzero parity-check columns spanning `F_2^t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearCodeSpec {
    t: u32,
    columns: Vec<u32>,
    min_distance: MinDistance,
}

/// Dimension of the span of `vectors`.
pub fn rank(vectors: &[u32]) -> u32 {
    let mut basis = [0u32; 32];
    let mut r = 0;
    for &v in vectors {
        let mut v = v;
        while v != 0 {
            let lead = 31 - v.leading_zeros() as usize;
            if basis[lead] == 0 {
                basis[lead] = v;
                r += 1;
                break;
            }
            v ^= basis[lead];
        }
    }
    r
}

impl LinearCodeSpec {
    /// Validates the columns: distinct, nonzero, within `t` bits, and of full rank `t`.
    pub fn new(t: u32, columns: Vec<u32>) -> Result<Self> {
        if !(1..=MAX_DIM).contains(&t) {
            return Err(Error::invalid(format!(
                "check bits {t} outside 1..={MAX_DIM}"
            )));
        }
        let mut seen = BitTable::new(1usize << t);
        for &c in &columns {
            if c == 0 {
                return Err(Error::invalid("parity-check columns must be nonzero"));
            }
            if c >> t != 0 {
                return Err(Error::invalid(format!(
                    "column {c} does not fit in {t} bits"
                )));
            }
            if seen.test_and_set(c) {
                return Err(Error::invalid(format!("duplicate column {c}")));
            }
        }
        let span = rank(&columns);
        if span != t {
            return Err(Error::RankDeficient { span, expected: t });
        }
        Ok(Self {
            t,
            columns,
            min_distance: MinDistance::AtLeast(3),
        })
    }

    pub fn check_bits(&self) -> u32 {
        self.t
    }

    pub fn length(&self) -> usize {
        self.columns.len()
    }

    pub fn dimension(&self) -> usize {
        self.columns.len() - self.t as usize
    }

    pub fn columns(&self) -> &[u32] {
        &self.columns
    }

    pub fn min_distance(&self) -> MinDistance {
        self.min_distance
    }

    /// True iff no three or four distinct columns sum to zero, i.e. the columns form a
    /// sum-free Sidon set and the minimum distance is at least 5.
    pub fn verify_distance_ge5(&self) -> bool {
        let size = 1usize << self.t;
        let members = BitTable::with_bits(size, self.columns.iter().copied());
        let mut pair_sums = BitTable::new(size);
        for (i, &p) in self.columns.iter().enumerate() {
            for &q in &self.columns[i + 1..] {
                let s = p ^ q;
                if members.get(s) || pair_sums.test_and_set(s) {
                    return false;
                }
            }
        }
        true
    }

    /// Support of a minimum-weight codeword of weight at most `cap`, if one exists.
    ///
    /// Weights are tried in increasing order. For weight `w = a + b` with `b = w / 2`,
    /// the XORs of all `b`-subsets go into a table and every `a`-subset is looked up.
    /// Since no lighter codeword exists at that point, any match (or, for even `w`, any
    /// collision between two `b`-subsets) is a pair of disjoint subsets, hence a codeword
    /// of weight exactly `w`.
    pub fn min_weight_codeword(&self, cap: u32) -> Result<Option<Vec<usize>>> {
        if cap > MAX_DISTANCE_CAP {
            return Err(Error::Capacity(format!(
                "weight search is limited to {MAX_DISTANCE_CAP}, got cap {cap}"
            )));
        }
        let cols = &self.columns;
        let mut b = 0usize;
        while 2 * b as u32 <= cap {
            let mut half: HashMap<u32, [u32; 3]> = HashMap::new();
            let mut collision = None;
            for_each_subset(cols.len(), b, |idx| {
                let sum = xor_of(cols, idx);
                match half.get(&sum) {
                    Some(prev) => {
                        collision = Some(symmetric_difference(&prev[..b], idx));
                        true
                    }
                    None => {
                        let mut packed = [0u32; 3];
                        for (slot, &i) in packed.iter_mut().zip(idx) {
                            *slot = i as u32;
                        }
                        half.insert(sum, packed);
                        false
                    }
                }
            });
            if let Some(support) = collision {
                return Ok(Some(support));
            }
            if (2 * b as u32) < cap {
                let mut hit = None;
                for_each_subset(cols.len(), b + 1, |idx| {
                    if let Some(prev) = half.get(&xor_of(cols, idx)) {
                        hit = Some(symmetric_difference(&prev[..b], idx));
                        return true;
                    }
                    false
                });
                if let Some(support) = hit {
                    return Ok(Some(support));
                }
            }
            b += 1;
        }
        Ok(None)
    }

    /// Smallest codeword weight up to `cap`, or `AtLeast(cap + 1)` when none is that light.
    pub fn exact_min_distance(&self, cap: u32) -> Result<MinDistance> {
        Ok(match self.min_weight_codeword(cap)? {
            Some(support) => MinDistance::Exact(support.len() as u32),
            None => MinDistance::AtLeast(cap + 1),
        })
    }

    /// Runs [`exact_min_distance`](Self::exact_min_distance) and records the result.
    pub fn certify_min_distance(&mut self, cap: u32) -> Result<MinDistance> {
        let d = self.exact_min_distance(cap)?;
        if d.lower_bound() >= self.min_distance.lower_bound() {
            self.min_distance = d;
        }
        Ok(d)
    }

    /// Basis of the code: one row per non-pivot column, rows packed as `u64` words over
    /// the `m` code coordinates.
    pub fn generator_matrix(&self) -> Vec<Vec<u64>> {
        let m = self.columns.len();
        let words = m.div_ceil(64).max(1);
        // basis[lead] = (reduced column value, combination of original columns)
        let mut basis: Vec<Option<(u32, Vec<u64>)>> = vec![None; 32];
        let mut rows = Vec::with_capacity(self.dimension());
        for (j, &col) in self.columns.iter().enumerate() {
            let mut value = col;
            let mut combo = vec![0u64; words];
            combo[j / 64] |= 1 << (j % 64);
            loop {
                if value == 0 {
                    rows.push(combo);
                    break;
                }
                let lead = 31 - value.leading_zeros() as usize;
                match &basis[lead] {
                    Some((v, c)) => {
                        value ^= v;
                        for (dst, src) in combo.iter_mut().zip(c) {
                            *dst ^= src;
                        }
                    }
                    None => {
                        basis[lead] = Some((value, combo));
                        break;
                    }
                }
            }
        }
        rows
    }

    /// Writes the `t x m` parity-check matrix: header `t m d_lower`, then `t` rows of
    /// space-separated bits, row `i` holding bit `i` of every column.
    pub fn export_parity_check(&self, sink: &mut impl Write) -> io::Result<()> {
        writeln!(
            sink,
            "{} {} {}",
            self.t,
            self.columns.len(),
            self.min_distance.lower_bound()
        )?;
        let mut line = String::with_capacity(2 * self.columns.len());
        for i in 0..self.t {
            line.clear();
            for (j, &c) in self.columns.iter().enumerate() {
                if j > 0 {
                    line.push(' ');
                }
                line.push(if (c >> i) & 1 == 1 { '1' } else { '0' });
            }
            writeln!(sink, "{line}")?;
        }
        Ok(())
    }

    pub fn to_text(&self) -> String {
        let mut out = Vec::new();
        self.export_parity_check(&mut out)
            .expect("writing to memory");
        String::from_utf8(out).expect("ASCII output")
    }

    /// Reads the format written by [`export_parity_check`](Self::export_parity_check).
    /// The header distance becomes a lower bound.
    pub fn parse(text: &str) -> Result<Self> {
        let mut toks = tokens(text);
        let mut header = |what: &str| -> Result<usize> {
            let (line, tok) = toks.next().ok_or_else(|| {
                Error::parse(text.lines().count().max(1), format!("missing {what}"))
            })?;
            tok.parse()
                .map_err(|_| Error::parse(line, format!("bad {what} `{tok}`")))
        };
        let t = header("check-bit count")?;
        let m = header("length")?;
        let d = header("distance bound")?;
        if !(1..=MAX_DIM as usize).contains(&t) {
            return Err(Error::parse(
                1,
                format!("check bits {t} outside 1..={MAX_DIM}"),
            ));
        }
        let mut columns = vec![0u32; m];
        let mut count = 0usize;
        let mut last_line = 1;
        for (line, tok) in toks {
            last_line = line;
            if count == t * m {
                return Err(Error::parse(line, "more matrix entries than t * m"));
            }
            let bit = match tok {
                "0" => 0,
                "1" => 1,
                _ => return Err(Error::parse(line, format!("bad matrix entry `{tok}`"))),
            };
            columns[count % m] |= bit << (count / m);
            count += 1;
        }
        if count != t * m {
            return Err(Error::parse(
                last_line,
                format!("expected {} matrix entries, found {count}", t * m),
            ));
        }
        let mut code = Self::new(t as u32, columns)?;
        code.min_distance = MinDistance::AtLeast(d as u32);
        Ok(code)
    }
}

/// Code with `|M| - 1` columns: translate `M` by its smallest element so that it
/// contains 0, then drop 0. The remaining points are a sum-free Sidon set.
pub fn sidon_to_code(set: &PointSet) -> Result<LinearCodeSpec> {
    if !set.is_sidon() {
        return Err(Error::invalid("code construction needs a Sidon set"));
    }
    let t = set.dim();
    if set.len() < t as usize + 2 {
        return Err(Error::invalid(format!(
            "need at least t + 2 = {} points for a code of positive dimension, got {}",
            t + 2,
            set.len()
        )));
    }
    let shift = set.points()[0];
    let columns: Vec<u32> = set.points()[1..].iter().map(|&p| p ^ shift).collect();
    let mut code = LinearCodeSpec::new(t, columns)?;
    if !code.verify_distance_ge5() {
        return Err(Error::invalid(
            "normalized columns failed the distance-5 check",
        ));
    }
    code.min_distance = MinDistance::AtLeast(5);
    Ok(code)
}

fn xor_of(cols: &[u32], idx: &[usize]) -> u32 {
    idx.iter().fold(0, |acc, &i| acc ^ cols[i])
}

fn symmetric_difference(a: &[u32], b: &[usize]) -> Vec<usize> {
    let a: Vec<usize> = a.iter().map(|&i| i as usize).collect();
    let mut out: Vec<usize> = a
        .iter()
        .filter(|i| !b.contains(i))
        .chain(b.iter().filter(|i| !a.contains(i)))
        .copied()
        .collect();
    out.sort_unstable();
    out
}

/// Calls `visit` on every strictly increasing `k`-subset of `0..m` until it returns true.
fn for_each_subset(m: usize, k: usize, mut visit: impl FnMut(&[usize]) -> bool) {
    if k > m {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if visit(&idx) {
            return;
        }
        let Some(pos) = (0..k).rev().find(|&i| idx[i] != i + m - k) else {
            return;
        };
        idx[pos] += 1;
        for i in pos + 1..k {
            idx[i] = idx[i - 1] + 1;
        }
    }
}
