/// Fixed-size bit table over `0..len`, used as an occupancy map for XOR values.
pub(crate) struct BitTable {
    words: Vec<u64>,
}

impl BitTable {
    pub(crate) fn new(len: usize) -> Self {
        Self {
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub(crate) fn with_bits(len: usize, bits: impl IntoIterator<Item = u32>) -> Self {
        let mut table = Self::new(len);
        for b in bits {
            table.set(b);
        }
        table
    }

    #[inline]
    pub(crate) fn get(&self, i: u32) -> bool {
        (self.words[(i >> 6) as usize] >> (i & 63)) & 1 == 1
    }

    #[inline]
    pub(crate) fn set(&mut self, i: u32) {
        self.words[(i >> 6) as usize] |= 1 << (i & 63);
    }

    /// Sets bit `i` and reports whether it was already set.
    #[inline]
    pub(crate) fn test_and_set(&mut self, i: u32) -> bool {
        let w = &mut self.words[(i >> 6) as usize];
        let mask = 1u64 << (i & 63);
        let was = *w & mask != 0;
        *w |= mask;
        was
    }

    pub(crate) fn count_ones(&self) -> u64 {
        self.words.iter().map(|w| w.count_ones() as u64).sum()
    }
}

/// Tokenizes a text file into `(line_number, token)` pairs, skipping `#` comments.
pub(crate) fn tokens(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().flat_map(|(i, line)| {
        let content = match line.find('#') {
            Some(pos) => &line[..pos],
            None => line,
        };
        content.split_whitespace().map(move |tok| (i + 1, tok))
    })
}
