//! Wavelet matrix over small unsigned integers, answering "how many values in
//! positions `a..b` fall in `lo..hi`" in `O(bits)` rank operations.

#[derive(Debug, Clone, Copy, Default)]
#[repr(align(16))]
struct Block {
    word: u64,
    // Ones strictly before this word.
    before: u32,
}

/// Bit vector with constant-time rank; each word sits next to its prefix count
/// so a rank touches one cache line.
#[derive(Debug, Clone)]
struct RankBits {
    blocks: Vec<Block>,
}

impl RankBits {
    fn from_bits(bits: impl ExactSizeIterator<Item = bool>) -> Self {
        let len = bits.len();
        // One spare block so that rank at `len` needs no bounds special case.
        let mut blocks = vec![Block::default(); len / 64 + 1];
        for (i, b) in bits.enumerate() {
            if b {
                blocks[i / 64].word |= 1 << (i % 64);
            }
        }
        let mut acc = 0u32;
        for b in blocks.iter_mut() {
            b.before = acc;
            acc += b.word.count_ones();
        }
        RankBits { blocks }
    }

    #[inline]
    fn rank1(&self, i: usize) -> usize {
        let b = &self.blocks[i / 64];
        let mask = (1u64 << (i % 64)).wrapping_sub(1);
        b.before as usize + (b.word & mask).count_ones() as usize
    }

    #[inline]
    fn rank0(&self, i: usize) -> usize {
        i - self.rank1(i)
    }
}

#[derive(Debug, Clone)]
pub(crate) struct WaveletMatrix {
    levels: Vec<RankBits>,
    zeros: Vec<usize>,
    bits: u32,
}

impl WaveletMatrix {
    /// Every value must be below `1 << bits`.
    pub(crate) fn new(mut values: Vec<u32>, bits: u32) -> Self {
        let mut levels = Vec::with_capacity(bits as usize);
        let mut zeros = Vec::with_capacity(bits as usize);
        let mut ones = Vec::with_capacity(values.len());
        for level in (0..bits).rev() {
            levels.push(RankBits::from_bits(values.iter().map(|&v| v >> level & 1 == 1)));
            ones.clear();
            let mut z = 0;
            for i in 0..values.len() {
                let v = values[i];
                if v >> level & 1 == 1 {
                    ones.push(v);
                } else {
                    values[z] = v;
                    z += 1;
                }
            }
            values.truncate(z);
            values.extend_from_slice(&ones);
            zeros.push(z);
        }
        WaveletMatrix { levels, zeros, bits }
    }

    /// Values below `x` among positions `a..b`.
    fn rank_less(&self, mut a: usize, mut b: usize, x: u32) -> usize {
        if self.bits < 32 && x >= 1 << self.bits {
            return b - a;
        }
        let mut less = 0;
        for (l, (bv, &z)) in self.levels.iter().zip(&self.zeros).enumerate() {
            if a == b {
                break;
            }
            let bit = x >> (self.bits - 1 - l as u32) & 1;
            let (za, zb) = (bv.rank0(a), bv.rank0(b));
            if bit == 1 {
                less += zb - za;
                a = z + (a - za);
                b = z + (b - zb);
            } else {
                a = za;
                b = zb;
            }
        }
        less
    }

    /// Values in `lo..hi` among positions `a..b`.
    pub(crate) fn count(&self, a: usize, b: usize, lo: u32, hi: u32) -> usize {
        if a >= b || lo >= hi {
            return 0;
        }
        self.rank_less(a, b, hi) - self.rank_less(a, b, lo)
    }
}
