use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::partition::{partitions, Partition};
use crate::exact::Rational;
use crate::groups::Group;

/// A partition-valued function on the conjugacy classes of Γ (the type of
/// a class of Γ_n). Classes with empty partitions are not stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TypeFunction {
    map: BTreeMap<usize, Partition>,
}

impl TypeFunction {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn from_map(map: BTreeMap<usize, Partition>) -> Self {
        TypeFunction {
            map: map.into_iter().filter(|(_, p)| !p.is_empty()).collect(),
        }
    }

    /// Single cycle of length `r` with cycle-product in class `c`.
    pub fn cycle(c: usize, r: usize) -> Self {
        Self::from_map(BTreeMap::from([(c, Partition::new(vec![r]))]))
    }

    pub fn get(&self, c: usize) -> Option<&Partition> {
        self.map.get(&c)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Partition)> {
        self.map.iter().map(|(&c, p)| (c, p))
    }

    /// Every cycle as `(class, length)`.
    pub fn cycles(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.map
            .iter()
            .flat_map(|(&c, p)| p.parts().iter().map(move |&r| (c, r)))
    }

    /// ‖ρ‖ = Σ_c |ρ(c)|
    pub fn norm(&self) -> usize {
        self.map.values().map(Partition::size).sum()
    }

    pub fn num_cycles(&self) -> usize {
        self.map.values().map(Partition::len).sum()
    }

    /// Disjoint union, the type of `x ⊕ y` in Γ_{n+m}.
    pub fn union(&self, other: &TypeFunction) -> TypeFunction {
        let mut map = self.map.clone();
        for (&c, p) in &other.map {
            let e = map.entry(c).or_default();
            *e = e.union(p);
        }
        TypeFunction { map }
    }

    /// Type of the inverse class: ρ⁻¹(c) = ρ(c⁻¹).
    pub fn inverse(&self, inverse_class: &[usize]) -> TypeFunction {
        TypeFunction {
            map: self.map.iter().map(|(&c, p)| (inverse_class[c], p.clone())).collect(),
        }
    }

    /// Z_ρ = ∏_c ζ_c^{ℓ(ρ(c))} ∏_r r^{m_r(c)} m_r(c)!
    pub fn centralizer_order(&self, centralizer_orders: &[usize]) -> BigInt {
        let mut z = BigInt::from(1);
        for (&c, p) in &self.map {
            z *= BigInt::from(centralizer_orders[c]).pow(p.len() as u32) * p.z();
        }
        z
    }

    pub fn to_json(&self) -> TypeJson {
        TypeJson {
            classes: self
                .map
                .iter()
                .map(|(c, p)| (c.to_string(), p.parts().to_vec()))
                .collect(),
        }
    }
}

impl fmt::Display for TypeFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.map.is_empty() {
            return write!(f, "∅");
        }
        let body: Vec<String> = self.map.iter().map(|(c, p)| format!("{}{}", p, fmt_sub(*c))).collect();
        write!(f, "{}", body.join(""))
    }
}

fn fmt_sub(c: usize) -> String {
    format!("_c{}", c)
}

/// `{"classes": {"<class-index>": [parts...]}}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypeJson {
    pub classes: BTreeMap<String, Vec<usize>>,
}

/// All types of total size `n` over `r` classes, without duplicates.
///
/// Ordered by the size given to class 0 (largest first), then class 1, and
/// so on; within a class partitions come in reverse lexicographic order.
pub fn enumerate_types(r: usize, n: usize) -> Vec<TypeFunction> {
    fn go(c: usize, r: usize, left: usize, cur: &mut BTreeMap<usize, Partition>, out: &mut Vec<TypeFunction>) {
        if c == r {
            if left == 0 {
                out.push(TypeFunction::from_map(cur.clone()));
            }
            return;
        }
        if c + 1 == r {
            for p in partitions(left) {
                cur.insert(c, p);
                go(c + 1, r, 0, cur, out);
            }
            cur.remove(&c);
            return;
        }
        for size in (0..=left).rev() {
            for p in partitions(size) {
                cur.insert(c, p);
                go(c + 1, r, left - size, cur, out);
            }
        }
        cur.remove(&c);
    }
    let mut out = Vec::new();
    if r == 0 {
        if n == 0 {
            out.push(TypeFunction::empty());
        }
        return out;
    }
    go(0, r, n, &mut BTreeMap::new(), &mut out);
    out
}

/// The types of Γ_n with an index, centralizer orders and inverses.
#[derive(Debug)]
pub struct WreathLevel {
    base: Arc<Group>,
    n: usize,
    types: Vec<TypeFunction>,
    index: HashMap<TypeFunction, usize>,
    z: Vec<Rational>,
    inverse: Vec<usize>,
}

impl WreathLevel {
    pub fn new(base: &Arc<Group>, n: usize) -> Self {
        let cls = base.classes();
        let types = enumerate_types(cls.len(), n);
        let index: HashMap<TypeFunction, usize> =
            types.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
        let z = types
            .iter()
            .map(|t| Rational::from_integer(t.centralizer_order(&cls.centralizer_orders)))
            .collect();
        let inverse = types
            .iter()
            .map(|t| index[&t.inverse(&cls.inverse_class)])
            .collect();
        WreathLevel {
            base: base.clone(),
            n,
            types,
            index,
            z,
            inverse,
        }
    }

    pub fn base(&self) -> &Arc<Group> {
        &self.base
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn types(&self) -> &[TypeFunction] {
        &self.types
    }

    pub fn len(&self) -> usize {
        self.types.len()
    }

    pub fn is_empty(&self) -> bool {
        self.types.is_empty()
    }

    pub fn index_of(&self, t: &TypeFunction) -> Option<usize> {
        self.index.get(t).copied()
    }

    /// Z_ρ for the type at index `i`.
    pub fn z(&self, i: usize) -> &Rational {
        &self.z[i]
    }

    pub fn inverse(&self, i: usize) -> usize {
        self.inverse[i]
    }

    /// |Γ_n| = |Γ|ⁿ n!
    pub fn group_order(&self) -> BigInt {
        let mut o = BigInt::from(self.base.order()).pow(self.n as u32);
        for k in 1..=self.n {
            o *= k;
        }
        o
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{cyclic, trivial};

    fn gen_count(r: usize, n: usize) -> usize {
        // coefficient of q^n in ∏_m (1 − q^m)^{−r}
        let mut c = vec![0usize; n + 1];
        c[0] = 1;
        for _ in 0..r {
            for m in 1..=n {
                for k in m..=n {
                    c[k] += c[k - m];
                }
            }
        }
        c[n]
    }

    #[test]
    fn type_counts() {
        assert_eq!(enumerate_types(2, 2).len(), 5);
        assert_eq!(enumerate_types(3, 0), vec![TypeFunction::empty()]);
        assert_eq!(enumerate_types(1, 4).len(), 5);
        for r in 1..4 {
            for n in 0..6 {
                let ts = enumerate_types(r, n);
                assert_eq!(ts.len(), gen_count(r, n));
                let set: std::collections::HashSet<_> = ts.iter().collect();
                assert_eq!(set.len(), ts.len());
                assert!(ts.iter().all(|t| t.norm() == n));
            }
        }
    }

    #[test]
    fn centralizers() {
        let z2 = Group::new(cyclic(2).unwrap());
        let zeta = &z2.classes().centralizer_orders;
        assert_eq!(TypeFunction::cycle(1, 2).centralizer_order(zeta), BigInt::from(4));
        assert_eq!(TypeFunction::cycle(1, 5).centralizer_order(zeta), BigInt::from(10));
        let t = Group::new(trivial());
        let ones = TypeFunction::from_map(BTreeMap::from([(0, Partition::new(vec![1; 4]))]));
        assert_eq!(ones.centralizer_order(&t.classes().centralizer_orders), BigInt::from(24));
        // Σ_ρ 1/Z_ρ = 1
        let lvl = WreathLevel::new(&z2, 3);
        let s: Rational = (0..lvl.len()).map(|i| lvl.z(i).recip()).sum();
        assert_eq!(s, Rational::from_integer(1.into()));
    }
}
