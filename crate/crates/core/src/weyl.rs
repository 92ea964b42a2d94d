//! Type-A Weyl group bookkeeping: permutations of `{1..r+1}`, reduced words
//! in the simple reflections `s_1..s_r`, the favourite reduced expression of
//! the long element, Bruhat order, and inversion sets.
//!
//! Permutations act on variable indices: the simple reflection `s_i` swaps
//! `x_i` and `x_{i+1}`.  A positive root is a pair `(i, j)` with `i < j`,
//! standing for `e_i - e_j`; `w` sends it negative exactly when
//! `w(i) > w(j)`.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Errors for values built from runtime input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WeylError {
    /// The image list was not a bijection on `{1..size}`.
    NotABijection,
    /// A word letter was outside `1..=r`.
    LetterOutOfRange { letter: u32, rank: u32 },
    /// A requested prefix length exceeded the long word.
    LengthOutOfRange { len: usize, max: usize },
}

impl fmt::Display for WeylError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeylError::NotABijection => write!(f, "image list is not a bijection"),
            WeylError::LetterOutOfRange { letter, rank } => {
                write!(f, "simple reflection s{letter} out of range for rank {rank}")
            }
            WeylError::LengthOutOfRange { len, max } => {
                write!(f, "prefix length {len} exceeds long-word length {max}")
            }
        }
    }
}

impl core::error::Error for WeylError {}

// ---------------------------------------------------------------------------
// Permutations
// ---------------------------------------------------------------------------

/// An element of `S_{r+1}`, stored as the image list `w(1), ..., w(r+1)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// The identity on `{1..size}`.
    pub fn identity(size: usize) -> Self {
        Permutation {
            images: (1..=size).collect(),
        }
    }

    /// Build from an image list `w(1), ..., w(size)` (1-based values).
    pub fn from_images(images: Vec<usize>) -> Result<Self, WeylError> {
        let size = images.len();
        let mut seen = vec![false; size];
        for &im in &images {
            if im == 0 || im > size || seen[im - 1] {
                return Err(WeylError::NotABijection);
            }
            seen[im - 1] = true;
        }
        Ok(Permutation { images })
    }

    /// The simple reflection `s_i` swapping `i` and `i+1` (1-based,
    /// `i <= size-1`).
    pub fn simple(size: usize, i: usize) -> Self {
        assert!(i >= 1 && i < size, "simple reflection index out of range");
        let mut p = Permutation::identity(size);
        p.images.swap(i - 1, i);
        p
    }

    /// Number of letters moved around (the `r+1` of the ambient `S_{r+1}`).
    pub fn size(&self) -> usize {
        self.images.len()
    }

    /// Image `w(k)` for 1-based `k`.
    pub fn apply(&self, k: usize) -> usize {
        self.images[k - 1]
    }

    /// One-line notation, e.g. `[2, 3, 1]`.
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Function composition: `(self ∘ other)(k) = self(other(k))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.size(), other.size(), "size mismatch in composition");
        Permutation {
            images: (1..=self.size())
                .map(|k| self.apply(other.apply(k)))
                .collect(),
        }
    }

    /// Group inverse.
    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.size()];
        for (k, &im) in self.images.iter().enumerate() {
            images[im - 1] = k + 1;
        }
        Permutation { images }
    }

    /// Coxeter length: the number of inversions.
    pub fn length(&self) -> usize {
        let mut count = 0;
        for i in 0..self.size() {
            for j in (i + 1)..self.size() {
                if self.images[i] > self.images[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// `(-1)^length`.
    pub fn sign(&self) -> i64 {
        if self.length() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// The order-reversing long element.
    pub fn longest(size: usize) -> Self {
        Permutation {
            images: (1..=size).rev().collect(),
        }
    }
}

impl fmt::Display for Permutation {
    /// One-line notation: `w(1) w(2) ... w(size)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for im in &self.images {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{im}")?;
            first = false;
        }
        Ok(())
    }
}

/// Every element of `S_size`, in lexicographic order of image lists.
pub fn all_permutations(size: usize) -> Vec<Permutation> {
    fn go(prefix: &mut Vec<usize>, remaining: &mut BTreeSet<usize>, out: &mut Vec<Permutation>) {
        if remaining.is_empty() {
            out.push(Permutation {
                images: prefix.clone(),
            });
            return;
        }
        let choices: Vec<usize> = remaining.iter().copied().collect();
        for c in choices {
            remaining.remove(&c);
            prefix.push(c);
            go(prefix, remaining, out);
            prefix.pop();
            remaining.insert(c);
        }
    }
    let mut out = Vec::new();
    go(
        &mut Vec::new(),
        &mut (1..=size).collect::<BTreeSet<usize>>(),
        &mut out,
    );
    out
}

// ---------------------------------------------------------------------------
// Words
// ---------------------------------------------------------------------------

/// A word in the simple reflections, stored as 1-based letter indices.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Word {
    letters: Vec<u32>,
}

impl Word {
    /// The empty word.
    pub fn empty() -> Self {
        Word::default()
    }

    /// Build a word, checking every letter against the rank.
    pub fn new(letters: Vec<u32>, rank: u32) -> Result<Self, WeylError> {
        for &l in &letters {
            if l == 0 || l > rank {
                return Err(WeylError::LetterOutOfRange { letter: l, rank });
            }
        }
        Ok(Word { letters })
    }

    /// Letters, left to right.
    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

impl fmt::Display for Word {
    /// Comma-separated letters; the empty word prints as `e`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e");
        }
        let mut first = true;
        for l in &self.letters {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
            first = false;
        }
        Ok(())
    }
}

/// The chosen reduced expression of the long element of `S_{r+1}`:
/// `s_1 s_2 s_1 s_3 s_2 s_1 ... s_r ... s_1`, of length `r(r+1)/2`.
/// Rank zero gives the empty word for the trivial group.
pub fn favourite_long_word(r: u32) -> Word {
    let mut letters = Vec::with_capacity((r * (r + 1) / 2) as usize);
    for k in 1..=r {
        for i in (1..=k).rev() {
            letters.push(i);
        }
    }
    Word { letters }
}

/// The first `l` letters of [`favourite_long_word`].
pub fn beginning_section(r: u32, l: usize) -> Result<Word, WeylError> {
    let full = favourite_long_word(r);
    if l > full.len() {
        return Err(WeylError::LengthOutOfRange { len: l, max: full.len() });
    }
    Ok(Word {
        letters: full.letters[..l].to_vec(),
    })
}

/// For a beginning section longer than the rank-`(r-1)` long word, the tail
/// is `s_r s_{r-1} ... s_{r-k}`; returns that `k`.  `None` when the section
/// lies inside the rank-`(r-1)` long word.
pub fn section_tail_k(r: u32, l: usize) -> Option<u32> {
    let lower = (r * (r - 1) / 2) as usize;
    if l > lower {
        Some((l - lower - 1) as u32)
    } else {
        None
    }
}

/// Multiply out a word: `s_{i_1} ∘ s_{i_2} ∘ ... ∘ s_{i_l}` as a function on
/// `{1..r+1}` (the rightmost letter acts first).
pub fn evaluate_word(w: &Word, r: u32) -> Permutation {
    let size = (r + 1) as usize;
    let mut p = Permutation::identity(size);
    for &l in &w.letters {
        p = p.compose(&Permutation::simple(size, l as usize));
    }
    p
}

/// A reduced word for `w` by greedy descent: repeatedly strip the first
/// right descent.  Any reduced word works wherever this is used (the braid
/// property is tested separately); this one is deterministic.
pub fn reduced_word(w: &Permutation) -> Word {
    let mut current = w.clone();
    let mut letters_rev: Vec<u32> = Vec::with_capacity(current.length());
    loop {
        let mut descent = None;
        for i in 1..current.size() {
            if current.apply(i) > current.apply(i + 1) {
                descent = Some(i);
                break;
            }
        }
        match descent {
            None => break,
            Some(i) => {
                // w = w' · s_i with one fewer inversion; s_i lands at the
                // right end of the final word.
                current = current.compose(&Permutation::simple(current.size(), i));
                letters_rev.push(i as u32);
            }
        }
    }
    letters_rev.reverse();
    Word { letters: letters_rev }
}

// ---------------------------------------------------------------------------
// Bruhat order and inversions
// ---------------------------------------------------------------------------

/// Bruhat comparison by the dominance criterion: `u <= w` iff for all
/// `i, j`, the count of `a <= i` with `u(a) >= j` never exceeds the same
/// count for `w`.  Agreement with the subword definition is checked
/// exhaustively in tests.
pub fn bruhat_leq(u: &Permutation, w: &Permutation) -> bool {
    assert_eq!(u.size(), w.size(), "size mismatch in Bruhat comparison");
    let size = u.size();
    for i in 1..=size {
        for j in 1..=size {
            let cu = (1..=i).filter(|&a| u.apply(a) >= j).count();
            let cw = (1..=i).filter(|&a| w.apply(a) >= j).count();
            if cu > cw {
                return false;
            }
        }
    }
    true
}

/// All `u` with `u <= w` in Bruhat order.
pub fn lower_interval(w: &Permutation) -> Vec<Permutation> {
    all_permutations(w.size())
        .into_iter()
        .filter(|u| bruhat_leq(u, w))
        .collect()
}

/// The inversion set `Φ(w)`: positive roots `(i, j)`, `i < j`, with
/// `w(i) > w(j)`, i.e. sent negative by `w`.
pub fn inversion_set_phi(w: &Permutation) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 1..=w.size() {
        for j in (i + 1)..=w.size() {
            if w.apply(i) > w.apply(j) {
                out.push((i, j));
            }
        }
    }
    out
}

/// All positive roots `(i, j)` with `i < j <= size`.
pub fn positive_roots(size: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 1..=size {
        for j in (i + 1)..=size {
            out.push((i, j));
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Tests
// ---------------------------------------------------------------------------
