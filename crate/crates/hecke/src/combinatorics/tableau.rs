//! Standard Young tableaux and the Robinson-Schensted correspondence.

use std::fmt;

use super::partition::Partition;
use super::permutation::Permutation;

/// A standard Young tableau: rows strictly increasing left to right, columns
/// strictly increasing top to bottom, entries a permutation of {1..n}.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Self {
        let t = Tableau { rows };
        assert!(t.is_standard(), "not a standard tableau");
        t
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len()).collect())
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn is_standard(&self) -> bool {
        if self.rows.is_empty() {
            return false;
        }
        let n = self.size();
        let mut seen = vec![false; n + 1];
        for r in &self.rows {
            for &v in r {
                if v < 1 || v > n || seen[v] {
                    return false;
                }
                seen[v] = true;
            }
        }
        if !self.rows.windows(2).all(|w| w[0].len() >= w[1].len()) {
            return false;
        }
        for r in &self.rows {
            if r.is_empty() || !r.windows(2).all(|w| w[0] < w[1]) {
                return false;
            }
        }
        for i in 1..self.rows.len() {
            for j in 0..self.rows[i].len() {
                if self.rows[i - 1][j] >= self.rows[i][j] {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, "/")?;
            }
            for (j, v) in r.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Row insertion of w(1), ..., w(n): returns (insertion tableau P, recording
/// tableau Q) of equal shape.
pub fn rsk(w: &Permutation) -> (Tableau, Tableau) {
    let mut p: Vec<Vec<usize>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for step in 1..=w.n() {
        let mut x = w.image(step);
        let mut row = 0;
        loop {
            if row == p.len() {
                p.push(vec![x]);
                q.push(vec![step]);
                break;
            }
            match p[row].iter().position(|&y| y > x) {
                None => {
                    p[row].push(x);
                    q[row].push(step);
                    break;
                }
                Some(j) => {
                    std::mem::swap(&mut p[row][j], &mut x);
                    row += 1;
                }
            }
        }
    }
    (Tableau::from_rows(p), Tableau::from_rows(q))
}

/// Left cells of S_n are the fibers of the recording tableau.
pub fn same_left_cell(w: &Permutation, w2: &Permutation) -> bool {
    assert_eq!(w.n(), w2.n(), "size mismatch in left cell comparison");
    rsk(w).1 == rsk(w2).1
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn rsk_examples() {
        let (p, q) = rsk(&Permutation::identity(3));
        assert_eq!(p.rows(), &[vec![1, 2, 3]]);
        assert_eq!(q, p);

        let (p, q) = rsk(&Permutation::from_one_line(&[2, 1, 3]));
        assert_eq!(p.rows(), &[vec![1, 3], vec![2]]);
        assert_eq!(q.rows(), &[vec![1, 3], vec![2]]);

        let (p, q) = rsk(&Permutation::from_one_line(&[3, 2, 1]));
        assert_eq!(p.rows(), &[vec![1], vec![2], vec![3]]);
        assert_eq!(q, p);
    }

    #[test]
    fn rsk_injective_and_shape_equal() {
        for n in 1..=5 {
            let mut seen = HashSet::new();
            for w in Permutation::all(n) {
                let (p, q) = rsk(&w);
                assert_eq!(p.shape(), q.shape());
                assert!(p.is_standard() && q.is_standard());
                assert!(seen.insert((p, q)), "rsk not injective at {w}");
            }
        }
    }

    #[test]
    fn left_cell_examples() {
        let w = Permutation::from_one_line(&[2, 1, 3]);
        assert!(same_left_cell(&w, &w));
        assert!(same_left_cell(&w, &Permutation::from_one_line(&[3, 1, 2])));
        assert!(!same_left_cell(&w, &Permutation::from_one_line(&[2, 3, 1])));
    }
}
