use std::collections::BTreeMap;
use std::sync::Arc;

use super::partition::Partition;
use super::types::{TypeFunction, WreathLevel};
use crate::error::{Budget, Error, Result};
use crate::groups::perm::{factorial, perm_cycles, perm_inv, perm_mul, perm_rank, perm_unrank};
use crate::groups::{FiniteGroup, Group, GroupLaw};

/// An element `(g, s)` of Γ_n = Γⁿ ⋊ S_n; `g[i]` are element indices of Γ
/// and `s[i]` is the image of `i` (0-based).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WreathElement {
    pub g: Vec<usize>,
    pub s: Vec<usize>,
}

impl WreathElement {
    pub fn identity(base: &FiniteGroup, n: usize) -> Self {
        WreathElement {
            g: vec![base.identity(); n],
            s: (0..n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.s.len()
    }

    /// `(g,s)(h,t) = (g · s(h), st)` where `s(h)_i = h_{s⁻¹(i)}`.
    pub fn mul(&self, other: &WreathElement, base: &FiniteGroup) -> WreathElement {
        let sinv = perm_inv(&self.s);
        let g = (0..self.n())
            .map(|i| base.mul(self.g[i], other.g[sinv[i]]))
            .collect();
        WreathElement {
            g,
            s: perm_mul(&self.s, &other.s),
        }
    }

    /// `(g,s)⁻¹ = (s⁻¹(g⁻¹), s⁻¹)`
    pub fn inv(&self, base: &FiniteGroup) -> WreathElement {
        WreathElement {
            g: (0..self.n()).map(|i| base.inv(self.g[self.s[i]])).collect(),
            s: perm_inv(&self.s),
        }
    }

    /// `x ⊕ y ∈ Γ_{n+m}`, `y` acting on the last `m` points.
    pub fn direct_sum(&self, other: &WreathElement) -> WreathElement {
        let n = self.n();
        let mut g = self.g.clone();
        g.extend_from_slice(&other.g);
        let mut s = self.s.clone();
        s.extend(other.s.iter().map(|&x| x + n));
        WreathElement { g, s }
    }

    /// Splits an element of Γ_n × Γ_m ⊂ Γ_{n+m}; `None` if `s` mixes the blocks.
    pub fn split(&self, n: usize) -> Option<(WreathElement, WreathElement)> {
        if self.s[..n].iter().any(|&x| x >= n) {
            return None;
        }
        let a = WreathElement {
            g: self.g[..n].to_vec(),
            s: self.s[..n].to_vec(),
        };
        let b = WreathElement {
            g: self.g[n..].to_vec(),
            s: self.s[n..].iter().map(|&x| x - n).collect(),
        };
        Some((a, b))
    }

    /// Cycle-products `g_{i_r} ⋯ g_{i_1}` for cycles `i_1 → i_2 → ⋯ → i_r`,
    /// with cycle lengths.
    pub fn cycle_products(&self, base: &FiniteGroup) -> Vec<(usize, usize)> {
        perm_cycles(&self.s)
            .into_iter()
            .map(|cyc| {
                let x = cyc.iter().fold(base.identity(), |acc, &i| base.mul(self.g[i], acc));
                (x, cyc.len())
            })
            .collect()
    }

    pub fn type_of(&self, base: &Group) -> TypeFunction {
        let mut map: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (x, r) in self.cycle_products(base.table()) {
            map.entry(base.classes().class_of[x]).or_default().push(r);
        }
        TypeFunction::from_map(map.into_iter().map(|(c, v)| (c, Partition::new(v))).collect())
    }

    /// A fixed element of the given type: consecutive cycles, class
    /// representative in the first slot of each cycle.
    pub fn canonical(base: &Group, t: &TypeFunction) -> WreathElement {
        let n = t.norm();
        let mut e = WreathElement::identity(base.table(), n);
        let mut pos = 0;
        for (c, r) in t.cycles() {
            for k in 0..r {
                e.s[pos + k] = pos + (k + 1) % r;
            }
            e.g[pos] = base.classes().class_reps[c];
            pos += r;
        }
        e
    }

    pub fn sign(&self) -> i64 {
        let cycles = perm_cycles(&self.s);
        if (self.n() - cycles.len()) % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

/// Index encoding `rank(s) · |Γ|ⁿ + Σ_i g_i |Γ|^i` of Γ_n.
#[derive(Debug)]
pub struct WreathLaw {
    base: Arc<Group>,
    n: usize,
    base_pow: usize,
    order: usize,
}

impl WreathLaw {
    pub fn new(base: &Arc<Group>, n: usize, budget: Budget) -> Result<Self> {
        let b = base.order();
        let too_big = || Error::BudgetExceeded {
            what: format!("wreath product of order {}ⁿ·n! with n = {}", b, n),
            size: usize::MAX,
            budget: budget.0,
        };
        let base_pow = (0..n).try_fold(1usize, |acc, _| acc.checked_mul(b)).ok_or_else(too_big)?;
        let order = factorial(n)
            .and_then(|f| f.checked_mul(base_pow))
            .ok_or_else(too_big)?;
        budget.check("wreath product", order)?;
        Ok(WreathLaw {
            base: base.clone(),
            n,
            base_pow,
            order,
        })
    }

    pub fn base(&self) -> &Arc<Group> {
        &self.base
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn encode(&self, e: &WreathElement) -> usize {
        let b = self.base.order();
        let gi = e.g.iter().rev().fold(0, |acc, &x| acc * b + x);
        perm_rank(&e.s) * self.base_pow + gi
    }

    pub fn decode(&self, mut idx: usize) -> WreathElement {
        let b = self.base.order();
        let s = perm_unrank(self.n, idx / self.base_pow);
        idx %= self.base_pow;
        let g = (0..self.n)
            .map(|_| {
                let x = idx % b;
                idx /= b;
                x
            })
            .collect();
        WreathElement { g, s }
    }

    /// All elements in index order.
    pub fn elements(&self) -> impl Iterator<Item = WreathElement> + '_ {
        (0..self.order).map(move |i| self.decode(i))
    }
}

impl GroupLaw for WreathLaw {
    fn order(&self) -> usize {
        self.order
    }
    fn mul(&self, a: usize, b: usize) -> usize {
        let t = self.base.table();
        self.encode(&self.decode(a).mul(&self.decode(b), t))
    }
    fn inv(&self, a: usize) -> usize {
        self.encode(&self.decode(a).inv(self.base.table()))
    }
    fn identity(&self) -> usize {
        self.encode(&WreathElement::identity(self.base.table(), self.n))
    }
    fn generators(&self) -> Vec<usize> {
        let t = self.base.table();
        let mut gens = Vec::new();
        for &h in t.generators() {
            let mut e = WreathElement::identity(t, self.n);
            if self.n > 0 {
                e.g[0] = h;
                gens.push(self.encode(&e));
            }
        }
        if self.n >= 2 {
            let mut e = WreathElement::identity(t, self.n);
            e.s.swap(0, 1);
            gens.push(self.encode(&e));
            let mut e = WreathElement::identity(t, self.n);
            e.s = (0..self.n).map(|i| (i + 1) % self.n).collect();
            gens.push(self.encode(&e));
        }
        gens
    }
}

/// Multiplication tables are materialised up to this order.
const TABLE_LIMIT: usize = 2048;

/// Γ_n as an explicit group, with its classes matched to types.
#[derive(Debug)]
pub struct WreathGroup {
    law: Arc<WreathLaw>,
    group: Arc<Group>,
    level: Arc<WreathLevel>,
    class_type: Vec<usize>,
    type_class: Vec<usize>,
}

impl WreathGroup {
    pub fn new(level: &Arc<WreathLevel>, budget: Budget) -> Result<Self> {
        let law = Arc::new(WreathLaw::new(level.base(), level.n(), budget)?);
        let labels = None;
        let table = if law.order() <= TABLE_LIMIT {
            let o = law.order();
            let elems: Vec<WreathElement> = law.elements().collect();
            let t = level.base().table();
            let mut rows = Vec::with_capacity(o);
            for a in &elems {
                rows.push(elems.iter().map(|b| law.encode(&a.mul(b, t))).collect());
            }
            FiniteGroup::from_trusted_rows(rows)?
        } else {
            FiniteGroup::from_law(law.clone(), labels)
        };
        let group = Group::new(table);
        let cls = group.classes();
        let mut class_type = Vec::with_capacity(cls.len());
        let mut type_class = vec![usize::MAX; level.len()];
        for (c, &rep) in cls.class_reps.iter().enumerate() {
            let t = law.decode(rep).type_of(level.base());
            let i = level
                .index_of(&t)
                .ok_or_else(|| Error::InvalidInput(format!("type {} not enumerated", t)))?;
            if type_class[i] != usize::MAX {
                return Err(Error::InvalidInput(format!("type {} met twice", t)));
            }
            type_class[i] = c;
            class_type.push(i);
        }
        if class_type.len() != level.len() {
            return Err(Error::InvalidInput("classes and types do not match".into()));
        }
        Ok(WreathGroup {
            law,
            group,
            level: level.clone(),
            class_type,
            type_class,
        })
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn law(&self) -> &Arc<WreathLaw> {
        &self.law
    }

    pub fn level(&self) -> &Arc<WreathLevel> {
        &self.level
    }

    /// Index (in the level) of the type of class `c`.
    pub fn class_type(&self, c: usize) -> usize {
        self.class_type[c]
    }

    pub fn type_class(&self, t: usize) -> usize {
        self.type_class[t]
    }
}

/// Explicit Γ_n; fails when |Γ|ⁿ n! exceeds the budget.
pub fn build_wreath(base: &Arc<Group>, n: usize, budget: Budget) -> Result<WreathGroup> {
    WreathGroup::new(&Arc::new(WreathLevel::new(base, n)), budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{cyclic, symmetric, trivial};

    #[test]
    fn type_of_examples() {
        let z2 = Group::new(cyclic(2).unwrap());
        let id = WreathElement::identity(z2.table(), 3);
        assert_eq!(id.type_of(&z2), TypeFunction::from_map(BTreeMap::from([(0, Partition::new(vec![1, 1, 1]))])));
        let a = WreathElement { g: vec![1, 0], s: vec![1, 0] };
        assert_eq!(a.type_of(&z2), TypeFunction::cycle(1, 2));
    }

    #[test]
    fn orders_and_classes() {
        let z2 = Group::new(cyclic(2).unwrap());
        let w = build_wreath(&z2, 2, Budget::default()).unwrap();
        assert_eq!(w.group().order(), 8);
        let w = build_wreath(&z2, 3, Budget::default()).unwrap();
        assert_eq!(w.group().order(), 48);
        assert_eq!(w.group().num_classes(), 10);
        let t = Group::new(trivial());
        let s4 = build_wreath(&t, 4, Budget::default()).unwrap();
        assert_eq!(s4.group().num_classes(), 5);
        assert!(build_wreath(&z2, 9, Budget::default()).is_err());
        let s3 = Group::new(symmetric(3).unwrap());
        assert!(matches!(build_wreath(&s3, 5, Budget(1000)), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn law_roundtrip() {
        let z3 = Group::new(cyclic(3).unwrap());
        let law = WreathLaw::new(&z3, 3, Budget::default()).unwrap();
        for i in 0..law.order() {
            assert_eq!(law.encode(&law.decode(i)), i);
        }
        assert_eq!(GroupLaw::identity(&law), 0);
    }
}
