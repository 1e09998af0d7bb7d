//! Signs, element sets and sign vectors.
//!
//! A [`SignVector`] lives on a fixed universe of at most 64 positions and is
//! stored as a pair of bit masks. Systems obtained by deletion keep the
//! universe of their parent and simply shrink their ground set, so a vector
//! "restricted to `U \ A`" is the same vector with zeros on `A`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result, MAX_ELEMENTS};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Minus,
    Zero,
    Plus,
}

impl Sign {
    pub fn from_i8(v: i8) -> Option<Sign> {
        match v {
            -1 => Some(Sign::Minus),
            0 => Some(Sign::Zero),
            1 => Some(Sign::Plus),
            _ => None,
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Minus => -1,
            Sign::Zero => 0,
            Sign::Plus => 1,
        }
    }

    pub fn from_char(c: char) -> Option<Sign> {
        match c {
            '+' => Some(Sign::Plus),
            '-' => Some(Sign::Minus),
            '0' => Some(Sign::Zero),
            _ => None,
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Sign::Minus => '-',
            Sign::Zero => '0',
            Sign::Plus => '+',
        }
    }

    /// Position in the tie-breaking order `0 < + < -`.
    pub fn rank(self) -> u8 {
        match self {
            Sign::Zero => 0,
            Sign::Plus => 1,
            Sign::Minus => 2,
        }
    }
}

impl std::ops::Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Minus => Sign::Plus,
            Sign::Zero => Sign::Zero,
            Sign::Plus => Sign::Minus,
        }
    }
}

/// A set of element positions, as a bit mask over the universe.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSet(u64);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    pub fn from_bits(bits: u64) -> Self {
        ElementSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// `{0, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_ELEMENTS);
        if n >= 64 {
            ElementSet(u64::MAX)
        } else {
            ElementSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(e: usize) -> Self {
        ElementSet(1u64 << e)
    }

    pub fn contains(self, e: usize) -> bool {
        e < 64 && self.0 >> e & 1 == 1
    }

    pub fn with(self, e: usize) -> Self {
        ElementSet(self.0 | 1u64 << e)
    }

    pub fn without(self, e: usize) -> Self {
        ElementSet(self.0 & !(1u64 << e))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        ElementSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        ElementSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        ElementSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> ElementIter {
        ElementIter(self.0)
    }

    /// All subsets of `self` with exactly `k` elements, in increasing
    /// lexicographic order of their sorted element lists.
    pub fn subsets_of_size(self, k: usize) -> Vec<ElementSet> {
        let elems: Vec<usize> = self.iter().collect();
        let mut out = Vec::new();
        if k > elems.len() {
            return out;
        }
        let n = elems.len();
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            out.push(idx.iter().map(|&i| elems[i]).collect());
            let mut i = k;
            while i > 0 && idx[i - 1] == n - k + i - 1 {
                i -= 1;
            }
            if i == 0 {
                return out;
            }
            idx[i - 1] += 1;
            for j in i..k {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }

    /// Every subset of `self`, in increasing order of the raw bit mask.
    pub fn power_set(self) -> impl Iterator<Item = ElementSet> {
        let mask = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == mask {
                None
            } else {
                Some((cur.wrapping_sub(mask)) & mask)
            };
            Some(ElementSet(cur))
        })
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(ElementSet::EMPTY, ElementSet::with)
    }
}

pub struct ElementIter(u64);

impl Iterator for ElementIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let e = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(e)
    }
}

/// A map from the universe positions to `{-1, 0, +1}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignVector {
    len: u8,
    plus: u64,
    minus: u64,
}

impl SignVector {
    pub fn zero(len: usize) -> Self {
        assert!(len <= MAX_ELEMENTS, "sign vectors hold at most 64 entries");
        SignVector {
            len: len as u8,
            plus: 0,
            minus: 0,
        }
    }

    pub fn from_signs(signs: &[Sign]) -> Self {
        let mut v = SignVector::zero(signs.len());
        for (e, &s) in signs.iter().enumerate() {
            v = v.with(e, s);
        }
        v
    }

    /// Builds a vector from its `+` and `-` masks. The masks must be disjoint
    /// and lie within `len`.
    pub fn from_masks(len: usize, plus: ElementSet, minus: ElementSet) -> Self {
        let all = ElementSet::full(len);
        assert!(plus.intersection(minus).is_empty());
        assert!(plus.union(minus).is_subset(all));
        SignVector {
            len: len as u8,
            plus: plus.bits(),
            minus: minus.bits(),
        }
    }

    /// Parses a `+`/`-`/`0` string, one character per position.
    pub fn parse(s: &str) -> Result<Self> {
        let n = s.chars().count();
        if n > MAX_ELEMENTS {
            return Err(Error::input(format!(
                "sign string has {n} characters, at most {MAX_ELEMENTS} allowed"
            )));
        }
        let mut v = SignVector::zero(n);
        for (i, c) in s.chars().enumerate() {
            let sign = Sign::from_char(c).ok_or_else(|| Error::Parse {
                line: 1,
                column: i + 1,
                message: format!("invalid sign character {c:?}"),
            })?;
            v = v.with(i, sign);
        }
        Ok(v)
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, e: usize) -> Sign {
        if self.plus >> e & 1 == 1 {
            Sign::Plus
        } else if self.minus >> e & 1 == 1 {
            Sign::Minus
        } else {
            Sign::Zero
        }
    }

    pub fn with(mut self, e: usize, s: Sign) -> Self {
        assert!(e < self.len(), "position {e} out of range");
        let bit = 1u64 << e;
        self.plus &= !bit;
        self.minus &= !bit;
        match s {
            Sign::Plus => self.plus |= bit,
            Sign::Minus => self.minus |= bit,
            Sign::Zero => {}
        }
        self
    }

    pub fn signs(&self) -> impl Iterator<Item = Sign> + '_ {
        (0..self.len()).map(|e| self.get(e))
    }

    pub fn plus(&self) -> ElementSet {
        ElementSet(self.plus)
    }

    pub fn minus(&self) -> ElementSet {
        ElementSet(self.minus)
    }

    pub fn support(&self) -> ElementSet {
        ElementSet(self.plus | self.minus)
    }

    /// Positions of the universe where the vector vanishes.
    pub fn zero_set(&self) -> ElementSet {
        ElementSet::full(self.len()).difference(self.support())
    }

    pub fn is_zero(&self) -> bool {
        self.plus | self.minus == 0
    }

    /// `X o Y`: the entry of `self` where nonzero, else the entry of `other`.
    pub fn compose(&self, other: &SignVector) -> SignVector {
        debug_assert_eq!(self.len, other.len);
        let sup = self.plus | self.minus;
        SignVector {
            len: self.len,
            plus: self.plus | (other.plus & !sup),
            minus: self.minus | (other.minus & !sup),
        }
    }

    /// Positions where the two vectors carry opposite nonzero signs.
    pub fn separator(&self, other: &SignVector) -> ElementSet {
        debug_assert_eq!(self.len, other.len);
        ElementSet((self.plus & other.minus) | (self.minus & other.plus))
    }

    /// The product order with `0 <= -, +`: every nonzero entry of `self` is
    /// matched by `other`.
    pub fn below(&self, other: &SignVector) -> bool {
        debug_assert_eq!(self.len, other.len);
        self.plus & !other.plus == 0 && self.minus & !other.minus == 0
    }

    pub fn try_compose(&self, other: &SignVector) -> Result<SignVector> {
        self.check_len(other)?;
        Ok(self.compose(other))
    }

    pub fn try_separator(&self, other: &SignVector) -> Result<ElementSet> {
        self.check_len(other)?;
        Ok(self.separator(other))
    }

    pub fn try_below(&self, other: &SignVector) -> Result<bool> {
        self.check_len(other)?;
        Ok(self.below(other))
    }

    fn check_len(&self, other: &SignVector) -> Result<()> {
        if self.len != other.len {
            return Err(Error::Dimension {
                expected: self.len(),
                found: other.len(),
            });
        }
        Ok(())
    }

    /// Zeroes every position outside `keep`.
    pub fn restrict(&self, keep: ElementSet) -> SignVector {
        SignVector {
            len: self.len,
            plus: self.plus & keep.bits(),
            minus: self.minus & keep.bits(),
        }
    }

    /// Reverses the signs on `positions`.
    pub fn reorient(&self, positions: ElementSet) -> SignVector {
        let m = positions.bits();
        SignVector {
            len: self.len,
            plus: (self.plus & !m) | (self.minus & m),
            minus: (self.minus & !m) | (self.plus & m),
        }
    }

    /// Flips the sign at a single (nonzero) position.
    pub fn flip(&self, e: usize) -> SignVector {
        self.reorient(ElementSet::singleton(e))
    }

    /// Renders the entries at the positions of `ground`, in increasing order.
    pub fn format_on(&self, ground: ElementSet) -> String {
        ground.iter().map(|e| self.get(e).to_char()).collect()
    }
}

impl std::ops::Neg for SignVector {
    type Output = SignVector;
    fn neg(self) -> SignVector {
        SignVector {
            len: self.len,
            plus: self.minus,
            minus: self.plus,
        }
    }
}

impl Ord for SignVector {
    /// Lexicographic over positions with `0 < + < -` at each position.
    fn cmp(&self, other: &Self) -> Ordering {
        let diff = (self.plus ^ other.plus) | (self.minus ^ other.minus);
        if diff == 0 {
            return self.len.cmp(&other.len);
        }
        let e = diff.trailing_zeros() as usize;
        self.get(e).rank().cmp(&other.get(e).rank())
    }
}

impl PartialOrd for SignVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in self.signs() {
            write!(f, "{}", s.to_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignVector({self})")
    }
}

/// Every vector of `{-,0,+}^ground` on a universe of `len` positions,
/// in canonical order.
pub fn all_sign_vectors(len: usize, ground: ElementSet) -> Vec<SignVector> {
    let elems: Vec<usize> = ground.iter().collect();
    let mut out = vec![SignVector::zero(len)];
    // Building from the last position backwards keeps the output sorted.
    for &e in elems.iter().rev() {
        let mut next = Vec::with_capacity(out.len() * 3);
        for s in [Sign::Zero, Sign::Plus, Sign::Minus] {
            next.extend(out.iter().map(|v| v.with(e, s)));
        }
        out = next;
    }
    out.sort_unstable();
    out
}
