use std::cmp::Ordering;
use std::fmt;

/// Maximum number of ring variables (`2n` plus auxiliary variables).
pub const MAX_VARS: usize = 32;

/// Total-degree cap; exceeding it is a hard error.
pub const DEGREE_CAP: u32 = 64;

const HIGH: u64 = 0x8080_8080_8080_8080;
const LOW7: u64 = 0x7f7f_7f7f_7f7f_7f7f;
const ONES: u64 = 0x0101_0101_0101_0101;

/// An exponent vector with one byte per variable, packed into four words.
///
/// Variable `i` lives in byte `i % 8` of word `i / 8`. The degree cap keeps
/// every exponent below `0x80`, which the word-parallel comparisons rely on.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    words: [u64; 4],
    deg: u32,
}

impl Monomial {
    pub const fn one() -> Self {
        Monomial {
            words: [0; 4],
            deg: 0,
        }
    }

    pub fn var(i: usize) -> Self {
        Self::var_pow(i, 1)
    }

    pub fn var_pow(i: usize, e: u32) -> Self {
        assert!(i < MAX_VARS, "variable index {i} exceeds {MAX_VARS}");
        assert!(e <= DEGREE_CAP, "degree cap {DEGREE_CAP} exceeded");
        let mut m = Monomial::one();
        m.words[i / 8] = (e as u64) << (8 * (i % 8));
        m.deg = e;
        m
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        exps.iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(Monomial::one(), |m, (i, &e)| m * Monomial::var_pow(i, e))
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.deg
    }

    #[inline]
    pub fn exponent(&self, i: usize) -> u32 {
        ((self.words[i / 8] >> (8 * (i % 8))) & 0xff) as u32
    }

    pub fn exponents(&self, nvars: usize) -> Vec<u32> {
        (0..nvars).map(|i| self.exponent(i)).collect()
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    /// Bitmask of the variables that occur.
    pub fn support(&self) -> u32 {
        let mut mask = 0u32;
        for (w, &word) in self.words.iter().enumerate() {
            // High bit of each byte set iff the byte is nonzero.
            let nz = (((word & LOW7) + LOW7) | word) & HIGH;
            let mut bits = nz;
            while bits != 0 {
                let b = bits.trailing_zeros() as usize / 8;
                mask |= 1 << (w * 8 + b);
                bits &= bits - 1;
            }
        }
        mask
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        if self.deg > other.deg {
            return false;
        }
        (0..4).all(|w| ((other.words[w] | HIGH) - self.words[w]) & HIGH == HIGH)
    }

    /// `other / self`, if `self` divides `other`.
    #[inline]
    pub fn divide_into(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let mut words = [0; 4];
        for (w, out) in words.iter_mut().enumerate() {
            *out = other.words[w] - self.words[w];
        }
        Some(Monomial {
            words,
            deg: other.deg - self.deg,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut words = [0; 4];
        let mut deg = 0;
        for (w, out) in words.iter_mut().enumerate() {
            let (a, b) = (self.words[w], other.words[w]);
            let ge = ((b | HIGH) - a) & HIGH;
            let mask = (ge >> 7) * 0xff;
            *out = (b & mask) | (a & !mask);
            deg += byte_sum(*out);
        }
        Monomial { words, deg }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        (0..4).all(|w| {
            let a = self.words[w];
            let b = other.words[w];
            let nza = (((a & LOW7) + LOW7) | a) & HIGH;
            let nzb = (((b & LOW7) + LOW7) | b) & HIGH;
            nza & nzb == 0
        })
    }

    /// Degree of the part living in variables `from..`.
    pub(crate) fn degree_from(&self, from: usize) -> u32 {
        let mut d = 0;
        for w in 0..4 {
            d += byte_sum(self.words[w] & mask_from(w, from));
        }
        d
    }

    pub(crate) fn masked_from(&self, from: usize) -> [u64; 4] {
        let mut out = [0; 4];
        for (w, o) in out.iter_mut().enumerate() {
            *o = self.words[w] & mask_from(w, from);
        }
        out
    }

    #[inline]
    pub(crate) fn words(&self) -> &[u64; 4] {
        &self.words
    }
}

/// Byte mask selecting variables with index `>= from` inside word `w`.
fn mask_from(w: usize, from: usize) -> u64 {
    let lo = w * 8;
    if from <= lo {
        u64::MAX
    } else if from >= lo + 8 {
        0
    } else {
        u64::MAX << (8 * (from - lo))
    }
}

#[inline]
fn byte_sum(w: u64) -> u32 {
    // Exponents are below 0x80 and at most 64 in total, so no byte overflows.
    (w.wrapping_mul(ONES) >> 56) as u32
}

impl std::ops::Mul for Monomial {
    type Output = Monomial;

    #[inline]
    fn mul(self, rhs: Monomial) -> Monomial {
        let deg = self.deg + rhs.deg;
        assert!(deg <= DEGREE_CAP, "degree cap {DEGREE_CAP} exceeded");
        let mut words = self.words;
        for (w, out) in words.iter_mut().enumerate() {
            *out += rhs.words[w];
        }
        Monomial { words, deg }
    }
}

/// Reverse-lexicographic tie-break on equal degree: the monomial with the
/// smaller exponent in the last differing variable is larger.
#[inline]
pub(crate) fn revlex_words(a: &[u64; 4], b: &[u64; 4]) -> Ordering {
    for w in (0..4).rev() {
        let x = a[w] ^ b[w];
        if x != 0 {
            let shift = (63 - x.leading_zeros()) / 8 * 8;
            let ea = (a[w] >> shift) & 0xff;
            let eb = (b[w] >> shift) & 0xff;
            return eb.cmp(&ea);
        }
    }
    Ordering::Equal
}

/// Lexicographic with variable 0 most significant.
#[inline]
pub(crate) fn lex_words(a: &[u64; 4], b: &[u64; 4]) -> Ordering {
    for w in 0..4 {
        let x = a[w] ^ b[w];
        if x != 0 {
            let shift = x.trailing_zeros() / 8 * 8;
            let ea = (a[w] >> shift) & 0xff;
            let eb = (b[w] >> shift) & 0xff;
            return ea.cmp(&eb);
        }
    }
    Ordering::Equal
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let exps: Vec<(usize, u32)> = (0..MAX_VARS)
            .map(|i| (i, self.exponent(i)))
            .filter(|&(_, e)| e > 0)
            .collect();
        if exps.is_empty() {
            return write!(f, "1");
        }
        for (k, (i, e)) in exps.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            write!(f, "v{i}")?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}
