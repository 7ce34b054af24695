use alloc::vec;
use alloc::vec::Vec;

/// Fixed-length bitset backing the cyclic sumset in the oracle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct BitSet {
    len: usize,
    words: Vec<u64>,
}

impl BitSet {
    pub(crate) fn new(len: usize) -> Self {
        BitSet {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    #[inline]
    pub(crate) fn insert(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub(crate) fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub(crate) fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            core::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + bit)
            })
        })
    }

    /// `self |= other << shift`, dropping bits that fall past the end.
    pub(crate) fn or_shifted(&mut self, other: &BitSet, shift: usize) {
        let (ws, bs) = (shift / 64, shift % 64);
        let n = self.words.len();
        for (i, &w) in other.words.iter().enumerate() {
            if w == 0 {
                continue;
            }
            let lo = i + ws;
            if lo >= n {
                break;
            }
            self.words[lo] |= w << bs;
            if bs != 0 && lo + 1 < n {
                self.words[lo + 1] |= w >> (64 - bs);
            }
        }
        self.trim();
    }

    fn trim(&mut self) {
        let tail = self.len % 64;
        if tail != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << tail) - 1;
            }
        }
    }

    /// The cyclic sumset `{ (a + b) mod len : a, b ∈ self }`.
    pub(crate) fn cyclic_sumset(&self) -> BitSet {
        let len = self.len;
        let mut wide = BitSet::new(2 * len);
        for a in self.iter() {
            wide.or_shifted(self, a);
        }
        let mut out = BitSet::new(len);
        for s in wide.iter() {
            out.insert(if s >= len { s - len } else { s });
        }
        out
    }
}
