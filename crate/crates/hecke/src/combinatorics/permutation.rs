use std::cmp::Ordering;
use std::fmt;

/// A permutation of {1, ..., n} in one-line notation, 1-based.
///
/// The Coxeter length (inversion count) is computed once at construction and
/// cached; the ordering used everywhere in the crate is (length, one-line lex),
/// which makes echelon pivots and report output reproducible.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<u8>,
    length: u32,
}

fn inversions(images: &[u8]) -> u32 {
    let mut inv = 0;
    for i in 0..images.len() {
        for j in i + 1..images.len() {
            if images[i] > images[j] {
                inv += 1;
            }
        }
    }
    inv
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "n must be positive");
        Permutation {
            images: (1..=n as u8).collect(),
            length: 0,
        }
    }

    /// The simple reflection s_i = (i, i+1), 1 <= i <= n-1.
    pub fn simple(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i < n, "simple reflection index {i} out of range for S_{n}");
        let mut images: Vec<u8> = (1..=n as u8).collect();
        images.swap(i - 1, i);
        Permutation { images, length: 1 }
    }

    pub fn from_one_line(images: &[usize]) -> Self {
        Self::try_from_one_line(images).expect("invalid one-line notation")
    }

    pub fn try_from_one_line(images: &[usize]) -> Result<Self, String> {
        let n = images.len();
        if n == 0 {
            return Err("empty one-line notation".into());
        }
        if n > u8::MAX as usize {
            return Err(format!("n = {n} too large"));
        }
        let mut seen = vec![false; n + 1];
        for &v in images {
            if v < 1 || v > n {
                return Err(format!("value {v} out of range 1..={n}"));
            }
            if seen[v] {
                return Err(format!("value {v} repeated"));
            }
            seen[v] = true;
        }
        let images: Vec<u8> = images.iter().map(|&v| v as u8).collect();
        let length = inversions(&images);
        Ok(Permutation { images, length })
    }

    /// Product of simple reflections s_{word[0]} s_{word[1]} ... applied via the
    /// composition convention (v o w)(i) = v(w(i)).
    pub fn from_word(n: usize, word: &[usize]) -> Self {
        let mut w = Permutation::identity(n);
        for &i in word {
            w = w.mul_simple_right(i);
        }
        w
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v as usize).collect()
    }

    pub(crate) fn bytes(&self) -> &[u8] {
        &self.images
    }

    /// w(i), 1-based.
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1] as usize
    }

    pub fn length(&self) -> usize {
        self.length as usize
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }

    /// (self o other)(i) = self(other(i)).
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.n(), other.n(), "size mismatch in composition");
        let images: Vec<u8> = other.images.iter().map(|&v| self.images[v as usize - 1]).collect();
        let length = inversions(&images);
        Permutation { images, length }
    }

    pub fn inverse(&self) -> Self {
        let n = self.n();
        let mut images = vec![0u8; n];
        for (pos, &v) in self.images.iter().enumerate() {
            images[v as usize - 1] = pos as u8 + 1;
        }
        Permutation {
            images,
            length: self.length,
        }
    }

    /// self * s_i: swaps the entries at positions i, i+1.
    pub fn mul_simple_right(&self, i: usize) -> Self {
        assert!(i >= 1 && i < self.n(), "simple reflection index out of range");
        let mut images = self.images.clone();
        images.swap(i - 1, i);
        let length = if self.images[i - 1] < self.images[i] {
            self.length + 1
        } else {
            self.length - 1
        };
        Permutation { images, length }
    }

    /// s_i * self: swaps the values i, i+1 wherever they occur.
    pub fn mul_simple_left(&self, i: usize) -> Self {
        assert!(i >= 1 && i < self.n(), "simple reflection index out of range");
        let a = self.images.iter().position(|&v| v as usize == i).unwrap();
        let b = self.images.iter().position(|&v| v as usize == i + 1).unwrap();
        let mut images = self.images.clone();
        images.swap(a, b);
        let length = if a < b { self.length + 1 } else { self.length - 1 };
        Permutation { images, length }
    }

    /// True iff w(i) > w(i+1).
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.images[i - 1] > self.images[i]
    }

    /// {i : w(i) > w(i+1)}.
    pub fn right_descents(&self) -> Vec<usize> {
        (1..self.n()).filter(|&i| self.has_right_descent(i)).collect()
    }

    /// Right descents of the inverse.
    pub fn left_descents(&self) -> Vec<usize> {
        self.inverse().right_descents()
    }

    /// A reduced word for w: peel maximal right descents.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut rev = Vec::with_capacity(self.length());
        while !w.is_identity() {
            let i = (1..w.n()).find(|&i| w.has_right_descent(i)).unwrap();
            rev.push(i);
            w = w.mul_simple_right(i);
        }
        rev.reverse();
        rev
    }

    /// All of S_n in the deterministic (length, one-line lex) order.
    pub fn all(n: usize) -> Vec<Permutation> {
        assert!(n >= 1);
        let mut line: Vec<usize> = (1..=n).collect();
        let mut out = Vec::new();
        loop {
            out.push(Permutation::from_one_line(&line));
            if !next_lex(&mut line) {
                break;
            }
        }
        out.sort();
        out
    }
}

fn next_lex(a: &mut [usize]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let Some(i) = (0..a.len() - 1).rev().find(|&i| a[i] < a[i + 1]) else {
        return false;
    };
    let j = (i + 1..a.len()).rev().find(|&j| a[j] > a[i]).unwrap();
    a.swap(i, j);
    a[i + 1..].reverse();
    true
}

impl PartialOrd for Permutation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Permutation {
    fn cmp(&self, other: &Self) -> Ordering {
        self.length
            .cmp(&other.length)
            .then_with(|| self.images.cmp(&other.images))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
