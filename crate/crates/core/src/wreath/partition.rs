use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

/// A partition, parts weakly decreasing and positive.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Sorts and drops zero parts.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `m_r`, the number of parts equal to `r`.
    pub fn multiplicity(&self, r: usize) -> usize {
        self.parts.iter().filter(|&&p| p == r).count()
    }

    /// `(r, m_r)` for the distinct part sizes, largest first.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((r, m)) if *r == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// `z_λ = ∏_r r^{m_r} m_r!`
    pub fn z(&self) -> BigInt {
        let mut acc = BigInt::from(1);
        for (r, m) in self.multiplicities() {
            for k in 1..=m {
                acc *= BigInt::from(r) * BigInt::from(k);
            }
        }
        acc
    }

    /// Sign of a permutation of this cycle type.
    pub fn sign(&self) -> i64 {
        if (self.size() - self.len()) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Union of parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        write!(f, "({})", body.join(","))
    }
}

/// All partitions of `n` in reverse lexicographic order, `(n)` first.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn go(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for p in (1..=max.min(n)).rev() {
            prefix.push(p);
            go(n - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        let counts: Vec<usize> = (0..8).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15]);
        assert_eq!(partitions(3)[0], Partition::new(vec![3]));
    }

    #[test]
    fn z_values() {
        assert_eq!(Partition::new(vec![1, 1, 1]).z(), BigInt::from(6));
        assert_eq!(Partition::new(vec![2, 2, 1]).z(), BigInt::from(8));
        let mut total = num_rational::BigRational::from_integer(0.into());
        for p in partitions(5) {
            total += num_rational::BigRational::new(1.into(), p.z());
        }
        assert_eq!(total, num_rational::BigRational::from_integer(1.into()));
    }
}
