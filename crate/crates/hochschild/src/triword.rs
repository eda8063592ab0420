//! Triwords and the componentwise (Hochschild) lattice order.
//!
//! A triword of size `n` is a word over `{0,1,2}` whose first letter is not
//! `2` and in which no letter `1` occurs anywhere after a letter `0` (the
//! subword `01` is forbidden). `Tr(n)` denotes the set of all triwords of
//! size `n`; under the componentwise order it is a lattice with bottom `0^n`
//! and top `12^(n-1)`.

use std::fmt;
use std::str::FromStr;

use crate::poset::FinitePoset;
use crate::{Error, Result};

/// A word over `{0,1,2}` satisfying the two triword conditions.
///
/// Letters are stored as digit values. Comparison traits (`Ord`, `PartialOrd`)
/// are *lexicographic* — handy for sorting and canonical listings. The lattice
/// order is a different relation; use [`Triword::leq`] for it.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triword(Vec<u8>);

impl Triword {
    /// Validates the two triword conditions and wraps the digits.
    ///
    /// Error positions are 1-based, matching the usual `u_1 … u_n` indexing.
    pub fn new(letters: Vec<u8>) -> Result<Self> {
        for (i, &d) in letters.iter().enumerate() {
            if d > 2 {
                return Err(Error::BadAlphabet {
                    position: i + 1,
                    letter: if d < 10 { (b'0' + d) as char } else { '?' },
                });
            }
        }
        if letters.first() == Some(&2) {
            return Err(Error::LeadingTwo);
        }
        if let Some(zero) = letters.iter().position(|&d| d == 0) {
            if let Some(one) = letters[zero..].iter().position(|&d| d == 1) {
                return Err(Error::ForbiddenZeroOne {
                    zero: zero + 1,
                    one: zero + one + 1,
                });
            }
        }
        Ok(Triword(letters))
    }

    /// The minimal element `0^n` of `Tr(n)`.
    pub fn bottom(n: usize) -> Self {
        Triword(vec![0; n])
    }

    /// The maximal element `12^(n-1)` of `Tr(n)`.
    pub fn top(n: usize) -> Self {
        let mut letters = vec![2; n];
        if let Some(first) = letters.first_mut() {
            *first = 1;
        }
        Triword(letters)
    }

    pub fn size(&self) -> usize {
        self.0.len()
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    /// True when `self ≤ other` componentwise.
    pub fn leq(&self, other: &Triword) -> Result<bool> {
        self.check_size(other)?;
        Ok(self.0.iter().zip(&other.0).all(|(a, b)| a <= b))
    }

    /// Componentwise maximum; always a triword and the least upper bound.
    pub fn join(&self, other: &Triword) -> Result<Triword> {
        self.check_size(other)?;
        let letters = self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect();
        // Componentwise max preserves both triword conditions.
        Ok(Triword(letters))
    }

    /// Greatest lower bound: componentwise minimum, then every `1` with a `0`
    /// anywhere to its left is lowered to `0` (rewriting all subwords `01` to
    /// `00` until none remain — one left-to-right scan reaches the fixpoint).
    pub fn meet(&self, other: &Triword) -> Result<Triword> {
        self.check_size(other)?;
        let mut letters: Vec<u8> = self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect();
        let mut zero_seen = false;
        for d in letters.iter_mut() {
            if *d == 1 && zero_seen {
                *d = 0;
            }
            if *d == 0 {
                zero_seen = true;
            }
        }
        Ok(Triword(letters))
    }

    /// True when `other` covers `self`: exactly one position differs and no
    /// triword lies strictly between. Raising a letter by one step is always a
    /// cover; the jump `0 → 2` at position `i` is a cover exactly when the
    /// intermediate word with `1` at `i` is not a triword, i.e. when a `0`
    /// occurs before position `i`.
    pub fn covers(&self, other: &Triword) -> Result<bool> {
        self.check_size(other)?;
        let mut diff = None;
        for (i, (&a, &b)) in self.0.iter().zip(&other.0).enumerate() {
            if a != b {
                if diff.is_some() {
                    return Ok(false);
                }
                diff = Some((i, a, b));
            }
        }
        let Some((i, a, b)) = diff else { return Ok(false) };
        if b < a {
            return Ok(false);
        }
        Ok(b - a == 1 || (a == 0 && b == 2 && self.0[..i].contains(&0)))
    }

    /// All upper covers, in lexicographic order.
    pub fn upper_covers(&self) -> Vec<Triword> {
        let mut out = Vec::new();
        let mut zero_before = false;
        for (i, &d) in self.0.iter().enumerate() {
            match d {
                0 => {
                    if !zero_before {
                        // 0 → 1 stays a triword only when no 0 precedes i.
                        out.push(self.with_letter(i, 1));
                    } else if i > 0 {
                        // 0 → 2 is a cover only when a 0 precedes i (otherwise
                        // the word with 1 at i sits strictly between).
                        out.push(self.with_letter(i, 2));
                    }
                }
                1 => {
                    if i > 0 {
                        out.push(self.with_letter(i, 2));
                    }
                }
                _ => {}
            }
            zero_before |= d == 0;
        }
        out.sort();
        out
    }

    /// All lower covers, in lexicographic order.
    pub fn lower_covers(&self) -> Vec<Triword> {
        let mut out = Vec::new();
        let mut zero_before = false;
        for (i, &d) in self.0.iter().enumerate() {
            let one_after = self.0[i + 1..].contains(&1);
            match d {
                1 => {
                    if !one_after {
                        out.push(self.with_letter(i, 0));
                    }
                }
                2 => {
                    if !zero_before {
                        out.push(self.with_letter(i, 1));
                    } else if !one_after {
                        out.push(self.with_letter(i, 0));
                    }
                }
                _ => {}
            }
            zero_before |= d == 0;
        }
        out.sort();
        out
    }

    fn with_letter(&self, i: usize, d: u8) -> Triword {
        let mut letters = self.0.clone();
        letters[i] = d;
        Triword(letters)
    }

    fn check_size(&self, other: &Triword) -> Result<()> {
        if self.0.len() != other.0.len() {
            return Err(Error::SizeMismatch {
                left: self.0.len(),
                right: other.0.len(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for Triword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &d in &self.0 {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Triword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Triword({self})")
    }
}

impl FromStr for Triword {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let letters = s
            .chars()
            .enumerate()
            .map(|(i, c)| {
                c.to_digit(3).map(|d| d as u8).ok_or(Error::BadAlphabet {
                    position: i + 1,
                    letter: c,
                })
            })
            .collect::<Result<Vec<u8>>>()?;
        Triword::new(letters)
    }
}

/// All triwords of size `n` in lexicographic order, generated from the
/// grammar `Tr = ε + 0·A + 1·B`, `A = ε + 0·A + 2·A`, `B = ε + 0·A + 1·B + 2·B`
/// (linear in the output size, unlike filtering all 3^n words).
///
/// `A` produces the suffixes allowed after a `0` (letters `{0,2}` only) and
/// `B` those allowed while no `0` has been seen yet.
pub fn generate(n: usize) -> Vec<Triword> {
    fn rec(out: &mut Vec<Vec<u8>>, prefix: &mut Vec<u8>, remaining: usize, zero_seen: bool) {
        if remaining == 0 {
            out.push(prefix.clone());
            return;
        }
        for d in 0..=2u8 {
            let ok = match d {
                1 => !zero_seen,
                2 => !prefix.is_empty(),
                _ => true,
            };
            if ok {
                prefix.push(d);
                rec(out, prefix, remaining - 1, zero_seen || d == 0);
                prefix.pop();
            }
        }
    }
    let mut words = Vec::new();
    rec(&mut words, &mut Vec::new(), n, false);
    words.into_iter().map(Triword).collect()
}

/// The Hasse diagram of `Tr(n)`: elements in lexicographic order, covers as
/// sorted index pairs. Practical up to n = 14 or so (`|Tr(14)| = 69632`).
pub fn hasse(n: usize) -> FinitePoset {
    let elements = generate(n);
    FinitePoset::from_elements_and_upper_covers(
        elements.iter().map(|u| u.to_string()).collect(),
        |i| {
            elements[i]
                .upper_covers()
                .iter()
                .map(|v| v.to_string())
                .collect()
        },
    )
}
