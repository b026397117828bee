use std::fmt;

/// A partition of n: weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Self {
        Self::try_new(parts).expect("invalid partition")
    }

    pub fn try_new(parts: Vec<usize>) -> Result<Self, String> {
        if parts.is_empty() {
            return Err("partition must have at least one part".into());
        }
        if parts.iter().any(|&p| p == 0) {
            return Err("partition parts must be positive".into());
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err("partition parts must be weakly decreasing".into());
        }
        Ok(Partition { parts })
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of parts k.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// lambda_i with the convention lambda_{k+1} = 0, 1-based.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// The consecutive blocks I_j = {prefix+1, ..., prefix+lambda_j} as
    /// inclusive 1-based ranges.
    pub fn blocks(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.parts.len());
        let mut start = 1;
        for &p in &self.parts {
            out.push((start, start + p - 1));
            start += p;
        }
        out
    }

    /// lambda_1 + ... + lambda_i.
    pub fn prefix_sum(&self, i: usize) -> usize {
        self.parts.iter().take(i).sum()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All partitions of n, in reverse-lexicographic order: (n) first, (1,...,1) last.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    assert!(n >= 1, "n must be positive");
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    descend(n, n, &mut prefix, &mut out);
    out
}

fn descend(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition::new(prefix.clone()));
        return;
    }
    for p in (1..=remaining.min(max)).rev() {
        prefix.push(p);
        descend(remaining - p, p, prefix, out);
        prefix.pop();
    }
}

/// Dominance order: mu >= lambda iff every prefix sum of mu dominates.
pub fn dominance_ge(mu: &Partition, lambda: &Partition) -> bool {
    assert_eq!(mu.n(), lambda.n(), "size mismatch in dominance comparison");
    let k = mu.len().max(lambda.len());
    let mut a = 0;
    let mut b = 0;
    for i in 1..=k {
        a += mu.part(i);
        b += lambda.part(i);
        if a < b {
            return false;
        }
    }
    true
}

/// Strict dominance: mu > lambda.
pub fn dominance_gt(mu: &Partition, lambda: &Partition) -> bool {
    mu != lambda && dominance_ge(mu, lambda)
}
