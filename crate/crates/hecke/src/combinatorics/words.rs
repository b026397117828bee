//! The explicit group elements driving the divisibility lemmas: the hook-shaped
//! involutions z, the staircase elements z_i, and the h-word factor list.

use super::partition::Partition;
use super::permutation::Permutation;

/// The word (s_i s_{i-1} ... s_{i-j})(s_{i+1} s_i ... s_{i-j+1}) ...
/// (s_{i+j} ... s_i), as a list of simple reflection indices.
pub fn hook_word(i: usize, j: usize) -> Vec<usize> {
    assert!(i >= 1 && j <= i - 1, "need j <= i - 1");
    let mut word = Vec::with_capacity((j + 1) * (j + 1));
    for t in 0..=j {
        for s in (i - j + t..=i + t).rev() {
            word.push(s);
        }
    }
    word
}

/// The element z of the hook-case lemma, an involution of S_{i+j+1} with
/// unique left and right descent s_i.
pub fn lemma1_z(i: usize, j: usize) -> Permutation {
    let n = i + j + 1;
    Permutation::from_word(n, &hook_word(i, j))
}

/// The staircase elements z_1, ..., z_{k-1} attached to lambda, embedded in
/// S_n, together with the ordered factor list of the element h:
/// z_{k-1}; z_{k-2}, z_{k-1}; ...; z_1, ..., z_{k-1}. Both empty when k = 1.
pub struct Lemma4Data {
    pub z: Vec<Permutation>,
    pub h_word: Vec<Permutation>,
}

pub fn lemma4_data(lambda: &Partition) -> Lemma4Data {
    let n = lambda.n();
    let k = lambda.len();
    let mut z = Vec::new();
    for i in 1..k {
        // z_i is the hook word at pivot lambda_1 + ... + lambda_i with depth
        // lambda_{i+1} - 1
        let pivot = lambda.prefix_sum(i);
        let depth = lambda.part(i + 1) - 1;
        z.push(Permutation::from_word(n, &hook_word(pivot, depth)));
    }
    let mut h_word = Vec::new();
    for t in 1..k {
        for s in (k - t)..k {
            h_word.push(z[s - 1].clone());
        }
    }
    Lemma4Data { z, h_word }
}

/// Reverses the 1-based value range lo..=hi, identity elsewhere.
fn block_reversal(n: usize, lo: usize, hi: usize) -> Permutation {
    let mut line: Vec<usize> = (1..=n).collect();
    line[lo - 1..hi].reverse();
    Permutation::from_one_line(&line)
}

/// The pair (u * w_lambda, w_mu) of the hook-case left-cell step, transported
/// from the ambient extended group into S_n by cyclically relabeling the
/// simple reflections away from s_i. Both members are products of block
/// reversals; they lie in the same left cell.
pub fn lemma1_cell_pair(i: usize, j: usize) -> (Permutation, Permutation) {
    assert!(i >= 1 && j <= i - 1, "need j <= i - 1");
    let n = i + j + 1;
    let w_prime = block_reversal(n, 1, i);
    let w_k = if i >= j + 2 {
        block_reversal(n, j + 2, i)
    } else {
        Permutation::identity(n)
    };
    let u = w_prime.compose(&w_k);
    let w_lambda = block_reversal(n, j + 2, n);
    let u_w_lambda = u.compose(&w_lambda);
    let w_mu = block_reversal(n, 1, j + 1).compose(&w_lambda);
    (u_w_lambda, w_mu)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::tableau::same_left_cell;

    #[test]
    fn z_examples() {
        assert_eq!(lemma1_z(2, 0), Permutation::simple(3, 2));
        assert_eq!(hook_word(2, 1), vec![2, 1, 3, 2]);
        assert_eq!(lemma1_z(2, 1).one_line(), vec![3, 4, 1, 2]);
        let z = lemma1_z(3, 1);
        assert_eq!(z.left_descents(), vec![3]);
        assert_eq!(z.right_descents(), vec![3]);
    }

    #[test]
    fn z_is_a_reduced_involution_with_unique_descent() {
        for i in 1..=5 {
            for j in 0..i.min(6 - i) {
                // keep n = i + j + 1 <= 6
                let z = lemma1_z(i, j);
                assert_eq!(z, z.inverse(), "z not an involution at ({i},{j})");
                assert_eq!(z.length(), (j + 1) * (j + 1), "word not reduced at ({i},{j})");
                assert_eq!(z.left_descents(), vec![i]);
                assert_eq!(z.right_descents(), vec![i]);
            }
        }
    }

    #[test]
    fn lemma4_examples() {
        let d = lemma4_data(&Partition::new(vec![2, 1]));
        assert_eq!(d.z, vec![Permutation::simple(3, 2)]);
        assert_eq!(d.h_word, vec![Permutation::simple(3, 2)]);

        let d = lemma4_data(&Partition::new(vec![2, 2]));
        assert_eq!(d.z, vec![Permutation::from_word(4, &[2, 1, 3, 2])]);

        let d = lemma4_data(&Partition::new(vec![1, 1, 1]));
        assert_eq!(d.z, vec![Permutation::simple(3, 1), Permutation::simple(3, 2)]);
        assert_eq!(
            d.h_word,
            vec![
                Permutation::simple(3, 2),
                Permutation::simple(3, 1),
                Permutation::simple(3, 2)
            ]
        );

        let d = lemma4_data(&Partition::new(vec![3]));
        assert!(d.z.is_empty());
        assert!(d.h_word.is_empty());
    }

    #[test]
    fn cell_pairs_share_recording_tableau() {
        for i in 1..=5 {
            for j in 0..i.min(6 - i) {
                let (a, b) = lemma1_cell_pair(i, j);
                assert!(same_left_cell(&a, &b), "cell step fails at ({i},{j})");
            }
        }
    }
}
