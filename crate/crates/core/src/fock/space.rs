use std::collections::BTreeMap;
use std::fmt;

use super::algebra::FrobeniusAlgebra;
use crate::error::{Error, Result};
use crate::exact::{CycNum, Rational};

/// Colours (basis labels) with parities and the pairing that governs the
/// Heisenberg bracket `[𝔮_{−n}(c), 𝔮_n(d)] = −n · pairing[c][d]`.
#[derive(Clone, Debug)]
pub struct FockSpace {
    labels: Vec<String>,
    odd: Vec<bool>,
    pairing: Vec<Vec<CycNum>>,
}

impl FockSpace {
    pub fn new(labels: Vec<String>, odd: Vec<bool>, pairing: Vec<Vec<CycNum>>) -> Result<Self> {
        let d = labels.len();
        if odd.len() != d || pairing.len() != d || pairing.iter().any(|r| r.len() != d) {
            return Err(Error::InvalidInput("Fock space data have inconsistent sizes".into()));
        }
        Ok(FockSpace { labels, odd, pairing })
    }

    /// Colours = basis of the algebra, pairing = ∫ e_c e_d.
    pub fn from_algebra(a: &FrobeniusAlgebra) -> Self {
        FockSpace {
            labels: a.labels().to_vec(),
            odd: (0..a.dim()).map(|i| a.is_odd(i)).collect(),
            pairing: a
                .gram()
                .into_iter()
                .map(|r| r.into_iter().map(CycNum::from_rational).collect())
                .collect(),
        }
    }

    pub fn num_colors(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn is_odd(&self, c: usize) -> bool {
        self.odd[c]
    }

    pub fn pairing(&self, c: usize, d: usize) -> &CycNum {
        &self.pairing[c][d]
    }

    /// All monomials of weight exactly `w`.
    pub fn basis(&self, w: usize) -> Vec<Monomial> {
        let keys: Vec<(u32, usize)> = (1..=w as u32)
            .flat_map(|m| (0..self.num_colors()).map(move |c| (m, c)))
            .collect();
        let mut out = Vec::new();
        fn go(
            s: &FockSpace,
            keys: &[(u32, usize)],
            i: usize,
            left: usize,
            cur: &mut Vec<(u32, usize)>,
            out: &mut Vec<Monomial>,
        ) {
            if left == 0 {
                out.push(Monomial(cur.clone()));
                return;
            }
            if i == keys.len() {
                return;
            }
            let (m, c) = keys[i];
            let max = if s.odd[c] { 1 } else { left / m as usize };
            for k in (0..=max.min(left / m as usize)).rev() {
                for _ in 0..k {
                    cur.push((m, c));
                }
                go(s, keys, i + 1, left - k * m as usize, cur, out);
                for _ in 0..k {
                    cur.pop();
                }
            }
        }
        go(self, &keys, 0, w, &mut Vec::new(), &mut out);
        out.sort();
        out
    }

    /// All monomials of weight ≤ `w`.
    pub fn basis_upto(&self, w: usize) -> Vec<Monomial> {
        (0..=w).flat_map(|k| self.basis(k)).collect()
    }

    /// Number of monomials of each weight `0..=cutoff`.
    pub fn graded_dimension(&self, cutoff: usize) -> Vec<usize> {
        (0..=cutoff).map(|w| self.basis(w).len()).collect()
    }

    fn odd_count(&self, gens: &[(u32, usize)]) -> usize {
        gens.iter().filter(|(_, c)| self.odd[*c]).count()
    }

    /// `𝔮_n(e_c)` (n > 0) applied to a monomial.
    pub(crate) fn create(&self, n: u32, c: usize, m: &Monomial) -> Option<(bool, Monomial)> {
        let key = (n, c);
        if self.odd[c] && m.0.contains(&key) {
            return None;
        }
        let pos = m.0.partition_point(|g| *g <= key);
        let negative = self.odd[c] && self.odd_count(&m.0[..pos]) % 2 == 1;
        let mut v = m.0.clone();
        v.insert(pos, key);
        Some((negative, Monomial(v)))
    }

    /// Removes each occurrence of a generator of mode `n`, as a
    /// super-derivation of parity `odd`; `weight(c')` gives the scalar for
    /// the removed colour.
    pub(crate) fn derive<F>(&self, n: u32, odd: bool, m: &Monomial, mut weight: F) -> Vec<(CycNum, Monomial)>
    where
        F: FnMut(usize) -> CycNum,
    {
        let mut out = Vec::new();
        let mut odd_before = 0;
        for (i, &(mode, c)) in m.0.iter().enumerate() {
            if mode == n {
                let w = weight(c);
                if !w.is_zero() {
                    let mut v = m.0.clone();
                    v.remove(i);
                    let w = if odd && odd_before % 2 == 1 { -w } else { w };
                    out.push((w, Monomial(v)));
                }
            }
            if self.odd[c] {
                odd_before += 1;
            }
        }
        out
    }
}

/// A product of creation operators `𝔮_n(e_c)` applied to the vacuum,
/// stored as sorted `(n, c)` pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(pub(crate) Vec<(u32, usize)>);

impl Monomial {
    pub fn vacuum() -> Self {
        Monomial(Vec::new())
    }

    pub fn generators(&self) -> &[(u32, usize)] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().map(|(n, _)| *n as usize).sum()
    }

    /// Builds a monomial from generators in any order, with the sign of the
    /// reordering; `None` if an odd generator repeats.
    pub fn from_generators(space: &FockSpace, gens: &[(u32, usize)]) -> Option<(bool, Monomial)> {
        let mut m = Monomial::vacuum();
        let mut neg = false;
        for &(n, c) in gens.iter().rev() {
            let (s, next) = space.create(n, c, &m)?;
            neg ^= s;
            m = next;
        }
        Some((neg, m))
    }

    pub fn display(&self, space: &FockSpace) -> String {
        if self.0.is_empty() {
            return "|0⟩".to_string();
        }
        let mut s = String::new();
        for (n, c) in &self.0 {
            s.push_str(&format!("q{}({})", n, space.labels[*c]));
        }
        s + "|0⟩"
    }
}

/// Exact linear combination of monomials.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FockVector {
    terms: BTreeMap<Monomial, CycNum>,
}

impl FockVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn vacuum() -> Self {
        Self::monomial(Monomial::vacuum())
    }

    pub fn monomial(m: Monomial) -> Self {
        let mut v = Self::zero();
        v.add_term(m, CycNum::one());
        v
    }

    pub fn add_term(&mut self, m: Monomial, c: CycNum) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &CycNum)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> CycNum {
        self.terms.get(m).cloned().unwrap_or_else(CycNum::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest weight present (0 for the zero vector).
    pub fn max_weight(&self) -> usize {
        self.terms.keys().map(Monomial::weight).max().unwrap_or(0)
    }

    pub fn add(&self, other: &FockVector) -> FockVector {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &FockVector) -> FockVector {
        self.add(&other.scale(&CycNum::from_int(-1)))
    }

    pub fn scale(&self, s: &CycNum) -> FockVector {
        let mut out = FockVector::zero();
        if s.is_zero() {
            return out;
        }
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c * s);
        }
        out
    }

    pub fn scale_rational(&self, s: &Rational) -> FockVector {
        self.scale(&CycNum::from_rational(s.clone()))
    }

    /// Product in the (super)polynomial algebra of creation operators.
    pub fn mul(&self, space: &FockSpace, other: &FockVector) -> FockVector {
        let mut out = FockVector::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let mut cur = Some((false, m2.clone()));
                for &(n, c) in m1.0.iter().rev() {
                    cur = cur.and_then(|(neg, m)| space.create(n, c, &m).map(|(s, m)| (neg ^ s, m)));
                }
                if let Some((neg, m)) = cur {
                    let v = c1 * c2;
                    out.add_term(m, if neg { -v } else { v });
                }
            }
        }
        out
    }

    /// Weight-`w` part.
    pub fn component(&self, w: usize) -> FockVector {
        FockVector {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.weight() == w)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn display(&self, space: &FockSpace) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| format!("({})·{}", c, m.display(space)))
            .collect();
        parts.join(" + ")
    }
}

impl fmt::Display for FockVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let gens: Vec<String> = m.0.iter().map(|(n, col)| format!("q{}[{}]", n, col)).collect();
                format!("({})·{}", c, gens.join(""))
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
