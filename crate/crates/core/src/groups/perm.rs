//! Permutations of `0..n` ranked in lexicographic (Lehmer) order.

use super::table::GroupLaw;
use crate::error::{Error, Result};

/// `s[i]` is the image of `i`.
pub type Perm = Vec<usize>;

pub fn factorial(n: usize) -> Option<usize> {
    (1..=n).try_fold(1usize, |acc, k| acc.checked_mul(k))
}

pub fn perm_rank(p: &[usize]) -> usize {
    let n = p.len();
    let mut rank = 0;
    let mut used = vec![false; n];
    for (i, &x) in p.iter().enumerate() {
        let smaller = (0..x).filter(|&y| !used[y]).count();
        rank = rank * (n - i) + smaller;
        used[x] = true;
    }
    rank
}

pub fn perm_unrank(n: usize, mut rank: usize) -> Perm {
    let mut digits = vec![0; n];
    for i in (0..n).rev() {
        let base = n - i;
        digits[i] = rank % base;
        rank /= base;
    }
    let mut avail: Vec<usize> = (0..n).collect();
    digits.into_iter().map(|d| avail.remove(d)).collect()
}

/// `(s t)(i) = s(t(i))`
pub fn perm_mul(s: &[usize], t: &[usize]) -> Perm {
    t.iter().map(|&x| s[x]).collect()
}

pub fn perm_inv(s: &[usize]) -> Perm {
    let mut r = vec![0; s.len()];
    for (i, &x) in s.iter().enumerate() {
        r[x] = i;
    }
    r
}

/// Cycles of `s`, each starting at its least element, ordered by that element.
pub fn perm_cycles(s: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; s.len()];
    let mut out = Vec::new();
    for i in 0..s.len() {
        if seen[i] {
            continue;
        }
        let mut cyc = vec![i];
        seen[i] = true;
        let mut j = s[i];
        while j != i {
            seen[j] = true;
            cyc.push(j);
            j = s[j];
        }
        out.push(cyc);
    }
    out
}

#[derive(Debug)]
pub(crate) struct PermLaw {
    n: usize,
    order: usize,
}

impl PermLaw {
    pub(crate) fn new(n: usize) -> Result<Self> {
        let order = factorial(n)
            .filter(|&o| o <= u32::MAX as usize)
            .ok_or_else(|| Error::InvalidInput(format!("S_{} is too large", n)))?;
        Ok(PermLaw { n, order })
    }

    pub(crate) fn order_usize(&self) -> usize {
        self.order
    }

    pub(crate) fn mul_ranks(&self, a: usize, b: usize) -> usize {
        perm_rank(&perm_mul(&perm_unrank(self.n, a), &perm_unrank(self.n, b)))
    }

    /// One-line notation, 1-based.
    pub(crate) fn label(&self, r: usize) -> String {
        let p = perm_unrank(self.n, r);
        let body: Vec<String> = p.iter().map(|x| (x + 1).to_string()).collect();
        format!("[{}]", body.join(" "))
    }
}

impl GroupLaw for PermLaw {
    fn order(&self) -> usize {
        self.order
    }
    fn mul(&self, a: usize, b: usize) -> usize {
        self.mul_ranks(a, b)
    }
    fn inv(&self, a: usize) -> usize {
        perm_rank(&perm_inv(&perm_unrank(self.n, a)))
    }
    fn identity(&self) -> usize {
        0
    }
    fn generators(&self) -> Vec<usize> {
        if self.n < 2 {
            return vec![];
        }
        let mut t: Perm = (0..self.n).collect();
        t.swap(0, 1);
        let cyc: Perm = (0..self.n).map(|i| (i + 1) % self.n).collect();
        vec![perm_rank(&t), perm_rank(&cyc)]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_roundtrip() {
        for r in 0..120 {
            assert_eq!(perm_rank(&perm_unrank(5, r)), r);
        }
        assert_eq!(perm_unrank(4, 0), vec![0, 1, 2, 3]);
    }

    #[test]
    fn cycles() {
        assert_eq!(perm_cycles(&[1, 0, 3, 4, 2]), vec![vec![0, 1], vec![2, 3, 4]]);
    }
}
