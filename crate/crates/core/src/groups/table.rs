use std::fmt;
use std::sync::Arc;

use super::closure::Mat2;
use crate::error::{Error, Result};

/// A group law on `0..order` for groups too large to tabulate.
pub trait GroupLaw: Send + Sync + fmt::Debug {
    fn order(&self) -> usize;
    fn mul(&self, a: usize, b: usize) -> usize;
    fn inv(&self, a: usize) -> usize;
    fn identity(&self) -> usize;
    fn generators(&self) -> Vec<usize>;
}

#[derive(Clone, Debug)]
enum Backing {
    Table(Arc<Vec<u32>>),
    Law(Arc<dyn GroupLaw>),
}

/// A finite group on the element set `0..order`.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    order: usize,
    backing: Backing,
    inverse: Vec<usize>,
    identity: usize,
    generators: Vec<usize>,
    labels: Option<Vec<String>>,
    matrices: Option<Vec<Mat2>>,
}

const FULL_CHECK_LIMIT: usize = 512;

impl FiniteGroup {
    /// Builds a group from a multiplication table, checking the group axioms
    /// (associativity exhaustively up to order 512, on a sample above).
    pub fn from_table(mult: Vec<Vec<usize>>, labels: Option<Vec<String>>) -> Result<Self> {
        let n = mult.len();
        if n == 0 {
            return Err(Error::InvalidInput("empty multiplication table".into()));
        }
        let mut flat = Vec::with_capacity(n * n);
        for row in &mult {
            if row.len() != n {
                return Err(Error::InvalidInput("multiplication table is not square".into()));
            }
            for &x in row {
                if x >= n {
                    return Err(Error::InvalidInput(format!("entry {} out of range", x)));
                }
                flat.push(x as u32);
            }
        }
        if let Some(l) = &labels {
            if l.len() != n {
                return Err(Error::InvalidInput("label count differs from order".into()));
            }
        }
        Self::from_flat(n, flat, labels, None, true)
    }

    /// Builds from a table known to be a group (no associativity check).
    pub(crate) fn from_trusted_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        let n = rows.len();
        let flat = rows.into_iter().flatten().map(|x| x as u32).collect();
        Self::from_flat(n, flat, None, None, false)
    }

    pub(crate) fn from_flat(
        n: usize,
        flat: Vec<u32>,
        labels: Option<Vec<String>>,
        matrices: Option<Vec<Mat2>>,
        check_assoc: bool,
    ) -> Result<Self> {
        let m = |a: usize, b: usize| flat[a * n + b] as usize;
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| m(e, x) == x && m(x, e) == x))
            .ok_or_else(|| Error::InvalidInput("no identity element".into()))?;
        let mut inverse = vec![usize::MAX; n];
        for a in 0..n {
            let b = (0..n)
                .find(|&b| m(a, b) == identity)
                .ok_or_else(|| Error::InvalidInput(format!("element {} has no inverse", a)))?;
            if m(b, a) != identity {
                return Err(Error::InvalidInput(format!("inverse of {} is one-sided", a)));
            }
            inverse[a] = b;
        }
        let check = |a: usize, b: usize, c: usize| m(m(a, b), c) == m(a, m(b, c));
        if !check_assoc {
        } else if n <= FULL_CHECK_LIMIT {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if !check(a, b, c) {
                            return Err(Error::InvalidInput("table is not associative".into()));
                        }
                    }
                }
            }
        } else {
            // deterministic sample of triples
            let mut s: u64 = 0x9e37_79b9_7f4a_7c15;
            for _ in 0..20_000 {
                s ^= s << 13;
                s ^= s >> 7;
                s ^= s << 17;
                let (a, b, c) = (
                    (s % n as u64) as usize,
                    ((s >> 20) % n as u64) as usize,
                    ((s >> 40) % n as u64) as usize,
                );
                if !check(a, b, c) {
                    return Err(Error::InvalidInput("table is not associative".into()));
                }
            }
        }
        let generators = greedy_generators(n, identity, |a, b| m(a, b));
        Ok(FiniteGroup {
            order: n,
            backing: Backing::Table(Arc::new(flat)),
            inverse,
            identity,
            generators,
            labels,
            matrices,
        })
    }

    /// Wraps an implicit group law; inverses are taken from the law.
    pub fn from_law(law: Arc<dyn GroupLaw>, labels: Option<Vec<String>>) -> Self {
        let n = law.order();
        let inverse = (0..n).map(|a| law.inv(a)).collect();
        FiniteGroup {
            order: n,
            identity: law.identity(),
            generators: law.generators(),
            backing: Backing::Law(law),
            inverse,
            labels,
            matrices: None,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.backing {
            Backing::Table(t) => t[a * self.order + b] as usize,
            Backing::Law(l) => l.mul(a, b),
        }
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn matrices(&self) -> Option<&[Mat2]> {
        self.matrices.as_deref()
    }

    /// Attaches a matrix model (the caller has checked it).
    pub(crate) fn with_matrices(mut self, ms: Vec<Mat2>) -> Self {
        self.matrices = Some(ms);
        self
    }

    /// `g h g^{-1}`
    pub fn conj(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(g, h), self.inv(g))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        let mut x = self.identity;
        for _ in 0..k {
            x = self.mul(x, a);
        }
        x
    }

    /// Least common multiple of element orders.
    pub fn exponent(&self) -> usize {
        (0..self.order).fold(1, |acc, a| {
            num_integer::Integer::lcm(&acc, &self.element_order(a))
        })
    }

    /// Full multiplication table as rows (materialises implicit laws).
    pub fn mult_rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|a| (0..self.order).map(|b| self.mul(a, b)).collect())
            .collect()
    }

    /// Same table structure (used for cheap group identity checks in tests).
    pub fn is_table_backed(&self) -> bool {
        matches!(self.backing, Backing::Table(_))
    }
}

fn greedy_generators(n: usize, identity: usize, m: impl Fn(usize, usize) -> usize) -> Vec<usize> {
    let mut in_sub = vec![false; n];
    in_sub[identity] = true;
    let mut gens = Vec::new();
    for cand in 0..n {
        if in_sub[cand] {
            continue;
        }
        gens.push(cand);
        in_sub = vec![false; n];
        in_sub[identity] = true;
        let mut members = vec![identity];
        let mut i = 0;
        while i < members.len() {
            let x = members[i];
            for &g in &gens {
                let y = m(x, g);
                if !in_sub[y] {
                    in_sub[y] = true;
                    members.push(y);
                }
            }
            i += 1;
        }
        if members.len() == n {
            break;
        }
    }
    gens
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_group() {
        let t = vec![vec![0, 1], vec![1, 1]];
        assert!(FiniteGroup::from_table(t, None).is_err());
    }

    #[test]
    fn z3_table() {
        let t = (0..3).map(|a| (0..3).map(|b| (a + b) % 3).collect()).collect();
        let g = FiniteGroup::from_table(t, None).unwrap();
        assert_eq!(g.identity(), 0);
        assert_eq!(g.inv(1), 2);
        assert_eq!(g.exponent(), 3);
        assert_eq!(g.generators(), &[1]);
    }
}
