//! Permutations of `{0, …, n-1}` stored as image tables.
//!
//! Composition is written left-to-right: `p.then(&q)` (and `&p * &q`) maps
//! `i` to `q[p[i]]`, so the left factor acts first. Every module and every
//! serialized file uses this convention.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// Builds a permutation from its image table, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::NotAPermutation(format!(
                    "image table {images:?} is not a bijection"
                )));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Self::from_images(images.clone()).is_ok());
        Permutation { images }
    }

    /// Builds a permutation of the given degree from disjoint cycles
    /// written with 0-based points.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &x) in cycle.iter().enumerate() {
                if x >= degree {
                    return Err(Error::PointOutOfRange { point: x, degree });
                }
                if touched[x] {
                    return Err(Error::NotAPermutation(format!(
                        "point {x} occurs twice in the cycle list"
                    )));
                }
                touched[x] = true;
                images[x] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    /// Same as [`Permutation::from_cycles`] but with 1-based points, the way
    /// permutations are usually printed in group tables.
    pub fn from_cycles_1based(degree: usize, cycles: &[&[usize]]) -> Result<Self> {
        let shifted: Vec<Vec<usize>> = cycles
            .iter()
            .map(|c| {
                c.iter()
                    .map(|&x| {
                        x.checked_sub(1)
                            .ok_or(Error::PointOutOfRange { point: 0, degree })
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        let refs: Vec<&[usize]> = shifted.iter().map(|c| c.as_slice()).collect();
        Self::from_cycles(degree, &refs)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Checked composition: apply `self` first, then `other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.then(other))
    }

    /// Unchecked composition for callers that already know the degrees agree.
    #[inline]
    pub fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self.images.iter().map(|&x| other.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { images: inv }
    }

    /// `self` raised to an arbitrary integer power.
    pub fn pow(&self, exp: i64) -> Permutation {
        let base = if exp < 0 { self.inverse() } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = Permutation::identity(self.degree());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.then(&sq);
            }
            sq = sq.then(&sq);
            e >>= 1;
        }
        acc
    }

    /// `g⁻¹ · self · g`, the image of `self` under conjugation by `g`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        g.inverse().then(self).then(g)
    }

    /// `a⁻¹ b⁻¹ a b`.
    pub fn commutator(a: &Permutation, b: &Permutation) -> Permutation {
        a.inverse().then(&b.inverse()).then(a).then(b)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn fixes(&self, point: usize) -> bool {
        self.images[point] == point
    }

    pub fn first_moved_point(&self) -> Option<usize> {
        self.images.iter().enumerate().find(|(i, x)| i != *x).map(|(i, _)| i)
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.degree()).filter(|&i| self.images[i] != i).collect()
    }

    pub fn is_fixed_point_free(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i != x)
    }

    /// Disjoint cycles including fixed points, each starting at its least
    /// point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    /// Least `k ≥ 1` with `self^k = 1`, the lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| lcm(acc, c.len() as u64))
    }

    /// True iff `⟨self⟩` acts semiregularly: all cycles share one length.
    pub fn is_semiregular(&self) -> bool {
        let ord = self.order();
        self.cycles().iter().all(|c| c.len() as u64 == ord)
    }

    /// Cycle notation with 0-based points, fixed points omitted.
    pub fn cycle_string(&self) -> String {
        let cycles: Vec<String> = self
            .cycles()
            .into_iter()
            .filter(|c| c.len() > 1)
            .map(|c| {
                let body: Vec<String> = c.iter().map(|x| x.to_string()).collect();
                format!("({})", body.join(" "))
            })
            .collect();
        if cycles.is_empty() {
            "()".to_string()
        } else {
            cycles.concat()
        }
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

impl Mul for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        assert_eq!(self.degree(), rhs.degree(), "degree mismatch in product");
        self.then(rhs)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]{}", self.degree(), self.cycle_string())
    }
}

/// One-line image list `n: i0 i1 … i(n-1)`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.degree())?;
        for x in &self.images {
            write!(f, " {x}")?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parse_err = |message: String| Error::Parse { line: 1, message };
        let (head, tail) = s
            .split_once(':')
            .ok_or_else(|| parse_err(format!("missing `:` in `{s}`")))?;
        let n: usize = head
            .trim()
            .parse()
            .map_err(|_| parse_err(format!("bad degree `{head}`")))?;
        let images = tail
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| parse_err(format!("bad image `{t}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        if images.len() != n {
            return Err(parse_err(format!(
                "degree {n} but {} images",
                images.len()
            )));
        }
        Permutation::from_images(images)
    }
}

/// Serializes a generator list, one permutation per line.
pub fn format_generators(gens: &[Permutation]) -> String {
    gens.iter().map(|g| format!("{g}\n")).collect()
}

pub fn parse_generators(text: &str) -> Result<Vec<Permutation>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            l.parse::<Permutation>().map_err(|e| match e {
                Error::Parse { message, .. } => Error::Parse {
                    line: i + 1,
                    message,
                },
                other => other,
            })
        })
        .collect()
}
