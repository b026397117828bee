//! Parabolic subgroups S_lambda of S_n and their coset combinatorics.

use super::partition::Partition;
use super::permutation::Permutation;

/// Simple reflection indices generating S_lambda: {i : i, i+1 in the same block}.
pub fn parabolic_generators(lambda: &Partition) -> Vec<usize> {
    let mut out = Vec::new();
    for (lo, hi) in lambda.blocks() {
        for i in lo..hi {
            out.push(i);
        }
    }
    out
}

/// All elements of the parabolic subgroup S_lambda, in the deterministic
/// (length, one-line lex) order.
pub fn parabolic_elements(lambda: &Partition) -> Vec<Permutation> {
    let n = lambda.n();
    let blocks = lambda.blocks();
    let mut elems = vec![Permutation::identity(n)];
    for (lo, hi) in blocks {
        if lo == hi {
            continue;
        }
        let mut next = Vec::with_capacity(elems.len() * factorial(hi - lo + 1));
        let block_perms = block_permutations(n, lo, hi);
        for base in &elems {
            for bp in &block_perms {
                next.push(base.compose(bp));
            }
        }
        elems = next;
    }
    elems.sort();
    elems
}

fn factorial(k: usize) -> usize {
    (1..=k).product()
}

/// Permutations fixing everything outside the block {lo..=hi}.
fn block_permutations(n: usize, lo: usize, hi: usize) -> Vec<Permutation> {
    let vals: Vec<usize> = (lo..=hi).collect();
    let mut out = Vec::new();
    permute(&vals, &mut Vec::new(), &mut |arr| {
        let mut line: Vec<usize> = (1..=n).collect();
        for (off, &v) in arr.iter().enumerate() {
            line[lo - 1 + off] = v;
        }
        out.push(Permutation::from_one_line(&line));
    });
    out
}

fn permute(rest: &[usize], chosen: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    if rest.is_empty() {
        f(chosen);
        return;
    }
    for (i, &v) in rest.iter().enumerate() {
        let mut next: Vec<usize> = rest.to_vec();
        next.remove(i);
        chosen.push(v);
        permute(&next, chosen, f);
        chosen.pop();
    }
}

/// The longest element w_lambda of S_lambda: reverses each block.
pub fn longest_element(lambda: &Partition) -> Permutation {
    let n = lambda.n();
    let mut line: Vec<usize> = (1..=n).collect();
    for (lo, hi) in lambda.blocks() {
        line[lo - 1..hi].reverse();
    }
    Permutation::from_one_line(&line)
}

/// True iff w is increasing on every block of lambda, i.e. w is the minimal
/// length representative of the left coset w S_lambda.
pub fn is_min_left_coset_rep(w: &Permutation, lambda: &Partition) -> bool {
    lambda
        .blocks()
        .iter()
        .all(|&(lo, hi)| (lo..hi).all(|i| w.image(i) < w.image(i + 1)))
}

/// Minimal-length representatives of the left cosets w S_lambda, in the
/// deterministic order. Cardinality n!/prod(lambda_j!).
pub fn min_left_coset_reps(lambda: &Partition) -> Vec<Permutation> {
    Permutation::all(lambda.n())
        .into_iter()
        .filter(|w| is_min_left_coset_rep(w, lambda))
        .collect()
}

/// Minimal-length representatives of the double cosets S_lambda w S_mu, in the
/// deterministic order.
pub fn min_double_coset_reps(lambda: &Partition, mu: &Partition) -> Vec<Permutation> {
    assert_eq!(lambda.n(), mu.n(), "size mismatch in double coset enumeration");
    Permutation::all(lambda.n())
        .into_iter()
        .filter(|w| is_min_left_coset_rep(w, mu) && is_min_left_coset_rep(&w.inverse(), lambda))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn longest_elements() {
        assert_eq!(longest_element(&p(&[1, 1, 1])), Permutation::identity(3));
        assert_eq!(longest_element(&p(&[2, 1])).one_line(), vec![2, 1, 3]);
        let w = longest_element(&p(&[3]));
        assert_eq!(w.one_line(), vec![3, 2, 1]);
        assert_eq!(w.length(), 3);
    }

    #[test]
    fn longest_element_length_and_descents() {
        for n in 1..=6 {
            for lam in super::super::partition::partitions_of(n) {
                let w = longest_element(&lam);
                let expect: usize = lam.parts().iter().map(|&l| l * (l - 1) / 2).sum();
                assert_eq!(w.length(), expect, "lambda = {lam}");
                let gens = parabolic_generators(&lam);
                assert_eq!(w.right_descents(), gens, "lambda = {lam}");
                assert_eq!(w.left_descents(), gens, "lambda = {lam}");
            }
        }
    }

    #[test]
    fn parabolic_elements_count_and_closure() {
        let lam = p(&[2, 2, 1]);
        let elems = parabolic_elements(&lam);
        assert_eq!(elems.len(), 4);
        let lam = p(&[3, 2]);
        let elems = parabolic_elements(&lam);
        assert_eq!(elems.len(), 12);
        // closed under composition
        for a in &elems {
            for b in &elems {
                assert!(elems.contains(&a.compose(b)));
            }
        }
    }

    #[test]
    fn coset_reps_examples() {
        assert_eq!(min_left_coset_reps(&p(&[3])), vec![Permutation::identity(3)]);
        assert_eq!(min_left_coset_reps(&p(&[1, 1, 1])).len(), 6);
        let reps: Vec<Vec<usize>> = min_left_coset_reps(&p(&[2, 1]))
            .iter()
            .map(|w| w.one_line())
            .collect();
        assert_eq!(reps, vec![vec![1, 2, 3], vec![1, 3, 2], vec![2, 3, 1]]);
    }

    #[test]
    fn coset_reps_cardinality_and_length_additivity() {
        for n in 1..=5 {
            for lam in super::super::partition::partitions_of(n) {
                let reps = min_left_coset_reps(&lam);
                let order: usize = lam.parts().iter().map(|&l| factorial(l)).product();
                assert_eq!(reps.len(), factorial(n) / order);
                let sub = parabolic_elements(&lam);
                for d in &reps {
                    for w in &sub {
                        assert_eq!(d.compose(w).length(), d.length() + w.length());
                    }
                }
            }
        }
    }

    #[test]
    fn double_coset_examples() {
        assert_eq!(
            min_double_coset_reps(&p(&[3]), &p(&[3])),
            vec![Permutation::identity(3)]
        );
        assert_eq!(min_double_coset_reps(&p(&[1, 1, 1]), &p(&[1, 1, 1])).len(), 6);
        let reps: Vec<Vec<usize>> = min_double_coset_reps(&p(&[2, 1]), &p(&[2, 1]))
            .iter()
            .map(|w| w.one_line())
            .collect();
        assert_eq!(reps, vec![vec![1, 2, 3], vec![1, 3, 2]]);
    }

    #[test]
    fn double_cosets_partition_the_group() {
        // every w lies in exactly one double coset S_lambda d S_mu
        let lam = p(&[2, 2]);
        let mu = p(&[3, 1]);
        let reps = min_double_coset_reps(&lam, &mu);
        let sub_l = parabolic_elements(&lam);
        let sub_m = parabolic_elements(&mu);
        let mut covered = std::collections::HashSet::new();
        for d in &reps {
            for x in &sub_l {
                for y in &sub_m {
                    covered.insert(x.compose(d).compose(y));
                }
            }
        }
        assert_eq!(covered.len(), 24);
        // each rep is the unique minimum of its double coset
        for d in &reps {
            for x in &sub_l {
                for y in &sub_m {
                    let w = x.compose(d).compose(y);
                    if &w != d {
                        assert!(w.length() > d.length());
                    }
                }
            }
        }
    }
}
