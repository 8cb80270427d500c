//! Vectorial Boolean functions `F: F_2^n -> F_2^m` given by their truth tables.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::bits::tokens;
use crate::error::{Error, Result};
use crate::fwht::fwht;
use crate::gf2::dot;

/// Largest input dimension accepted for a truth table.
pub const MAX_INPUT_DIM: u32 = 25;
/// Largest output dimension.
pub const MAX_OUTPUT_DIM: u32 = 32;
/// Resource guard on `n + m` for the full Walsh spectrum.
pub const MAX_SPECTRUM_DIM: u32 = 32;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VectorialBooleanFunction {
    n: u32,
    m: u32,
    table: Vec<u32>,
}

impl VectorialBooleanFunction {
    pub fn new(n: u32, m: u32, table: Vec<u32>) -> Result<Self> {
        if !(1..=MAX_INPUT_DIM).contains(&n) {
            return Err(Error::invalid(format!(
                "input dimension {n} outside 1..={MAX_INPUT_DIM}"
            )));
        }
        if !(1..=MAX_OUTPUT_DIM).contains(&m) {
            return Err(Error::invalid(format!(
                "output dimension {m} outside 1..={MAX_OUTPUT_DIM}"
            )));
        }
        if table.len() != 1usize << n {
            return Err(Error::invalid(format!(
                "truth table has {} entries, expected 2^{n}",
                table.len()
            )));
        }
        if m < 32 {
            if let Some((x, &y)) = table.iter().enumerate().find(|(_, &y)| y >> m != 0) {
                return Err(Error::invalid(format!(
                    "F({x}) = {y:#x} does not fit in {m} bits"
                )));
            }
        }
        Ok(Self { n, m, table })
    }

    /// Tabulates `f` over `F_2^n`.
    pub fn from_fn(n: u32, m: u32, f: impl Fn(u32) -> u32) -> Result<Self> {
        if !(1..=MAX_INPUT_DIM).contains(&n) {
            return Err(Error::invalid(format!(
                "input dimension {n} outside 1..={MAX_INPUT_DIM}"
            )));
        }
        Self::new(n, m, (0..1u32 << n).map(f).collect())
    }

    pub fn input_dim(&self) -> u32 {
        self.n
    }

    pub fn output_dim(&self) -> u32 {
        self.m
    }

    pub fn table(&self) -> &[u32] {
        &self.table
    }

    #[inline]
    pub fn eval(&self, x: u32) -> u32 {
        self.table[x as usize]
    }

    fn domain_size(&self) -> usize {
        1 << self.n
    }

    /// Maximum over `a != 0` and `b` of `#{x : F(x) ^ F(x ^ a) = b}`.
    ///
    /// Uses one histogram of `2^m` counters that is cleared after each `a`.
    pub fn differential_uniformity(&self) -> Result<u32> {
        if self.m > MAX_INPUT_DIM {
            return Err(Error::Capacity(format!(
                "difference histogram over 2^{} outputs",
                self.m
            )));
        }
        let size = self.domain_size();
        let mut counts = vec![0u32; 1 << self.m];
        let mut best = 0;
        for a in 1..size {
            for x in 0..size {
                let d = self.table[x] ^ self.table[x ^ a];
                let c = &mut counts[d as usize];
                *c += 1;
                best = best.max(*c);
            }
            for x in 0..size {
                counts[(self.table[x] ^ self.table[x ^ a]) as usize] = 0;
            }
        }
        Ok(best)
    }

    /// True iff the differential uniformity is exactly 2. Requires `n = m`.
    pub fn is_apn(&self) -> Result<bool> {
        if self.n != self.m {
            return Err(Error::invalid(format!(
                "APN needs n = m, got n = {}, m = {}",
                self.n, self.m
            )));
        }
        Ok(self.differential_uniformity()? == 2)
    }

    /// Signs `(-1)^{b·F(x)}` for one component, written into `buf`.
    fn component_signs(&self, b: u32, buf: &mut [i32]) {
        for (slot, &y) in buf.iter_mut().zip(&self.table) {
            *slot = 1 - 2 * dot(b, y) as i32;
        }
    }

    /// Runs `visit(b, spectrum_of_component_b)` for every `b` in `F_2^m`.
    fn for_each_component(
        &self,
        components: impl Iterator<Item = u32>,
        mut visit: impl FnMut(u32, &[i32]),
    ) {
        let mut buf = vec![0i32; self.domain_size()];
        for b in components {
            self.component_signs(b, &mut buf);
            fwht(&mut buf);
            visit(b, &buf);
        }
    }

    fn check_spectrum_size(&self) -> Result<()> {
        if self.n + self.m > MAX_SPECTRUM_DIM {
            return Err(Error::Capacity(format!(
                "Walsh spectrum needs n + m <= {MAX_SPECTRUM_DIM}, got {}",
                self.n + self.m
            )));
        }
        Ok(())
    }

    /// Full spectrum `W_F(a, b) = Σ_x (-1)^{a·x + b·F(x)}`, one FWHT per component.
    pub fn walsh_spectrum(&self) -> Result<WalshSpectrum> {
        self.check_spectrum_size()?;
        let mut values = vec![0i32; 1usize << (self.n + self.m)];
        let len = self.domain_size();
        let last = u32::MAX >> (32 - self.m);
        self.for_each_component(0..=last, |b, spec| {
            let start = b as usize * len;
            values[start..start + len].copy_from_slice(spec);
        });
        Ok(WalshSpectrum {
            n: self.n,
            m: self.m,
            values,
        })
    }

    /// `max |W_F(a, b)|` over all `a` and all `b != 0`. Streams components without storing them.
    pub fn linearity(&self) -> Result<u32> {
        self.check_spectrum_size()?;
        let mut best = 0u32;
        let last = u32::MAX >> (32 - self.m);
        self.for_each_component(1..=last, |_, spec| {
            let local = spec.iter().map(|v| v.unsigned_abs()).max().unwrap_or(0);
            best = best.max(local);
        });
        Ok(best)
    }

    /// Multiplicity of each Walsh value over all `a` and all `b != 0`, streamed per component.
    pub fn walsh_histogram(&self) -> Result<BTreeMap<i32, u64>> {
        self.check_spectrum_size()?;
        let mut hist = BTreeMap::new();
        let last = u32::MAX >> (32 - self.m);
        self.for_each_component(1..=last, |_, spec| {
            for &v in spec {
                *hist.entry(v).or_insert(0) += 1;
            }
        });
        Ok(hist)
    }

    /// Number of `x` with `a·F(x) = lambda`, for a nonzero output mask `a`.
    pub fn component_weight(&self, a: u32, lambda: u32) -> Result<u32> {
        if a == 0 {
            return Err(Error::invalid("component mask must be nonzero"));
        }
        if self.m < 32 && a >> self.m != 0 {
            return Err(Error::invalid(format!(
                "mask {a:#x} exceeds {} bits",
                self.m
            )));
        }
        if lambda > 1 {
            return Err(Error::invalid("lambda must be 0 or 1"));
        }
        Ok(self.table.iter().filter(|&&y| dot(a, y) == lambda).count() as u32)
    }

    /// Algebraic degree: the largest weight of a monomial with nonzero coefficient in
    /// the algebraic normal form of any coordinate. Zero for constant functions.
    pub fn algebraic_degree(&self) -> u32 {
        let mut anf = self.table.clone();
        let len = anf.len();
        let mut half = 1;
        while half < len {
            for block in anf.chunks_exact_mut(2 * half) {
                let (lo, hi) = block.split_at_mut(half);
                for (u, v) in lo.iter().zip(hi.iter_mut()) {
                    *v ^= *u;
                }
            }
            half *= 2;
        }
        anf.iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(u, _)| (u as u32).count_ones())
            .max()
            .unwrap_or(0)
    }

    /// True iff every derivative `x -> F(x+a) + F(x) + F(a) + F(0)` is linear,
    /// i.e. the algebraic degree is at most 2.
    pub fn is_quadratic(&self) -> Result<bool> {
        if self.n != self.m || self.n > 16 {
            return Err(Error::invalid(format!(
                "quadratic test needs n = m <= 16, got n = {}, m = {}",
                self.n, self.m
            )));
        }
        Ok(self.algebraic_degree() <= 2)
    }

    /// Checks `lin F <= 2^n - 4` for an APN function. Errors if `F` is not APN.
    pub fn apn_linearity_bound_check(&self) -> Result<bool> {
        if !self.is_apn()? {
            return Err(Error::invalid(
                "linearity bound applies to APN functions only",
            ));
        }
        Ok(self.linearity()? as u64 + 4 <= 1u64 << self.n)
    }

    /// Parses the truth-table format: `n m`, then `2^n` hexadecimal values in row order.
    pub fn parse(text: &str) -> Result<Self> {
        let mut toks = tokens(text);
        let mut header = |what: &str| -> Result<u32> {
            let (line, tok) = toks.next().ok_or_else(|| {
                Error::parse(text.lines().count().max(1), format!("missing {what}"))
            })?;
            tok.parse()
                .map_err(|_| Error::parse(line, format!("bad {what} `{tok}`")))
        };
        let n = header("input dimension")?;
        let m = header("output dimension")?;
        if !(1..=MAX_INPUT_DIM).contains(&n) || !(1..=MAX_OUTPUT_DIM).contains(&m) {
            return Err(Error::parse(
                1,
                format!("unsupported dimensions n = {n}, m = {m}"),
            ));
        }
        let expected = 1usize << n;
        let mut table = Vec::with_capacity(expected);
        let mut last_line = 1;
        for (line, tok) in toks {
            last_line = line;
            if table.len() == expected {
                return Err(Error::parse(line, format!("more than {expected} values")));
            }
            let digits = tok
                .strip_prefix("0x")
                .or_else(|| tok.strip_prefix("0X"))
                .unwrap_or(tok);
            let v = u32::from_str_radix(digits, 16)
                .map_err(|_| Error::parse(line, format!("bad hex value `{tok}`")))?;
            if m < 32 && v >> m != 0 {
                return Err(Error::parse(line, format!("value {tok} exceeds {m} bits")));
            }
            table.push(v);
        }
        if table.len() != expected {
            return Err(Error::parse(
                last_line,
                format!("expected {expected} values, found {}", table.len()),
            ));
        }
        Self::new(n, m, table)
    }

    /// Renders the truth-table format accepted by [`parse`](Self::parse).
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.m);
        for v in &self.table {
            let _ = writeln!(out, "{v:x}");
        }
        out
    }
}

/// Dense Walsh spectrum indexed by `(b << n) | a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalshSpectrum {
    n: u32,
    m: u32,
    values: Vec<i32>,
}

impl WalshSpectrum {
    pub fn input_dim(&self) -> u32 {
        self.n
    }

    pub fn output_dim(&self) -> u32 {
        self.m
    }

    #[inline]
    pub fn get(&self, a: u32, b: u32) -> i32 {
        self.values[((b as usize) << self.n) | a as usize]
    }

    pub fn values(&self) -> &[i32] {
        &self.values
    }

    /// Values of one component `b`, indexed by `a`.
    pub fn component(&self, b: u32) -> &[i32] {
        let len = 1usize << self.n;
        &self.values[b as usize * len..(b as usize + 1) * len]
    }

    pub fn linearity(&self) -> u32 {
        self.values[1usize << self.n..]
            .iter()
            .map(|v| v.unsigned_abs())
            .max()
            .unwrap_or(0)
    }

    /// Multiplicity of each Walsh value over all `a` and all `b != 0`.
    pub fn histogram(&self) -> BTreeMap<i32, u64> {
        let mut hist = BTreeMap::new();
        for &v in &self.values[1usize << self.n..] {
            *hist.entry(v).or_insert(0) += 1;
        }
        hist
    }
}
