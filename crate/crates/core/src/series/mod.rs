//! Truncated power series in `q` with polynomial coefficients in `t, x, y`,
//! the Hilbert-scheme generating functions, and orbifold Euler numbers of
//! finite group actions.

mod orbifold;

pub use orbifold::{orbifold_euler_bruteforce, wreath_gset, wreath_orbifold_euler_check, GSet};

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::exact::{rat, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Var {
    Q,
    T,
    X,
    Y,
}

impl Var {
    pub const ALL: [Var; 4] = [Var::Q, Var::T, Var::X, Var::Y];

    fn slot(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::Q => "q",
            Var::T => "t",
            Var::X => "x",
            Var::Y => "y",
        }
    }
}

/// Exponents of `(q, t, x, y)`.
pub type Exponent = [u32; 4];

/// A series truncated below `q^order`. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries {
    vars: BTreeSet<Var>,
    order: usize,
    coeffs: BTreeMap<Exponent, Rational>,
}

impl PowerSeries {
    pub fn zero(order: usize) -> Self {
        PowerSeries {
            vars: [Var::Q].into(),
            order,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(order, [0; 4], rat(1))
    }

    /// `c · q^a t^b x^c y^d`, dropped when it lies at or above the truncation.
    pub fn monomial(order: usize, e: Exponent, c: Rational) -> Self {
        let mut s = Self::zero(order);
        for v in Var::ALL {
            if e[v.slot()] > 0 {
                s.vars.insert(v);
            }
        }
        s.insert(e, c);
        s
    }

    fn insert(&mut self, e: Exponent, c: Rational) {
        if (e[0] as usize) >= self.order || c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(e).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn variables(&self) -> &BTreeSet<Var> {
        &self.vars
    }

    pub fn coefficient(&self, e: Exponent) -> Rational {
        self.coeffs.get(&e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Rational)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The polynomial multiplying `qⁿ`, as a series with q-exponent 0.
    pub fn q_coefficient(&self, n: usize) -> PowerSeries {
        let mut out = PowerSeries::zero(1);
        out.vars = self.vars.iter().copied().filter(|&v| v != Var::Q).collect();
        out.vars.insert(Var::Q);
        for (e, c) in &self.coeffs {
            if e[0] as usize == n {
                out.insert([0, e[1], e[2], e[3]], c.clone());
            }
        }
        out
    }

    /// Coefficients of `q⁰, …, q^{order−1}` when the series only involves q.
    pub fn q_coefficients(&self) -> Option<Vec<Rational>> {
        let mut out = vec![Rational::zero(); self.order];
        for (e, c) in &self.coeffs {
            if e[1..].iter().any(|&x| x != 0) {
                return None;
            }
            out[e[0] as usize] = c.clone();
        }
        Some(out)
    }

    pub fn truncate(&self, order: usize) -> PowerSeries {
        let mut out = self.clone();
        out.order = order.min(self.order);
        out.coeffs.retain(|e, _| (e[0] as usize) < out.order);
        out
    }

    pub fn add(&self, other: &PowerSeries) -> PowerSeries {
        let mut out = self.truncate(other.order);
        out.vars.extend(other.vars.iter().copied());
        for (e, c) in &other.coeffs {
            out.insert(*e, c.clone());
        }
        out
    }

    pub fn neg(&self) -> PowerSeries {
        self.scale(&rat(-1))
    }

    pub fn sub(&self, other: &PowerSeries) -> PowerSeries {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: &Rational) -> PowerSeries {
        let mut out = PowerSeries {
            vars: self.vars.clone(),
            order: self.order,
            coeffs: BTreeMap::new(),
        };
        for (e, c) in &self.coeffs {
            out.insert(*e, c * s);
        }
        out
    }

    pub fn mul(&self, other: &PowerSeries) -> PowerSeries {
        let order = self.order.min(other.order);
        let mut out = PowerSeries::zero(order);
        out.vars = self.vars.union(&other.vars).copied().collect();
        for (a, ca) in &self.coeffs {
            for (b, cb) in &other.coeffs {
                if (a[0] + b[0]) as usize >= order {
                    continue;
                }
                let e = [a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]];
                out.insert(e, ca * cb);
            }
        }
        out
    }

    /// `self^a` for any integer `a`, by the binomial series. Requires the
    /// part of q-degree 0 to be exactly 1.
    pub fn pow(&self, a: i64) -> Option<PowerSeries> {
        let one = PowerSeries::one(self.order);
        let u = self.sub(&one);
        if u.coeffs.keys().any(|e| e[0] == 0) {
            return None;
        }
        let mut out = one.clone();
        out.vars.extend(self.vars.iter().copied());
        let mut power = one;
        let mut binom = rat(1);
        // u has q-order ≥ 1, so u^k vanishes once k reaches the truncation
        for k in 1..self.order as i64 {
            binom = binom * rat(a - k + 1) / rat(k);
            if binom.is_zero() {
                break;
            }
            power = power.mul(&u);
            if power.is_zero() {
                break;
            }
            out = out.add(&power.scale(&binom));
        }
        Some(out)
    }

    /// Replaces `var` by `c · with` (or by the constant `c`).
    pub fn substitute(&self, var: Var, c: &Rational, with: Option<Var>) -> PowerSeries {
        assert!(var != Var::Q && with != Some(Var::Q), "q is the truncation variable");
        let mut out = PowerSeries::zero(self.order);
        out.vars = self.vars.iter().copied().filter(|&v| v != var).collect();
        out.vars.insert(Var::Q);
        if let Some(w) = with {
            out.vars.insert(w);
        }
        for (e, coef) in &self.coeffs {
            let k = e[var.slot()];
            let mut f = *e;
            f[var.slot()] = 0;
            if let Some(w) = with {
                f[w.slot()] += k;
            }
            out.insert(f, coef * pow_rat(c, k));
        }
        out
    }

    /// One row per stored term: the four exponents and the coefficient.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("q,t,x,y,coefficient\n");
        for (e, c) in &self.coeffs {
            s += &format!("{},{},{},{},{}\n", e[0], e[1], e[2], e[3], c);
        }
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<_> = self
            .coeffs
            .iter()
            .map(|(e, c)| {
                let mut m = serde_json::Map::new();
                for v in &self.vars {
                    m.insert(v.name().into(), e[v.slot()].into());
                }
                m.insert("coefficient".into(), c.to_string().into());
                serde_json::Value::Object(m)
            })
            .collect();
        serde_json::json!({
            "variables": self.vars.iter().map(|v| v.name()).collect::<Vec<_>>(),
            "order": self.order,
            "terms": terms,
        })
    }
}

fn pow_rat(c: &Rational, k: u32) -> Rational {
    (0..k).fold(rat(1), |acc, _| acc * c)
}

impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "O(q^{})", self.order);
        }
        for (i, (e, c)) in self.coeffs.iter().enumerate() {
            let mono: Vec<String> = Var::ALL
                .iter()
                .filter(|v| e[v.slot()] > 0)
                .map(|v| match e[v.slot()] {
                    1 => v.name().to_string(),
                    k => format!("{}^{}", v.name(), k),
                })
                .collect();
            let sign = if c.is_negative() { "-" } else { "+" };
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let a = c.abs();
            match (a.is_one(), mono.is_empty()) {
                (true, true) => write!(f, "1")?,
                (true, false) => write!(f, "{}", mono.join("*"))?,
                (false, true) => write!(f, "{a}")?,
                (false, false) => write!(f, "{a}*{}", mono.join("*"))?,
            }
        }
        write!(f, " + O(q^{})", self.order)
    }
}

/// `(1 + sign · t^a x^b y^c q^m)^k`
fn factor(order: usize, e: Exponent, sign: i64, k: i64) -> PowerSeries {
    PowerSeries::one(order)
        .add(&PowerSeries::monomial(order, e, rat(sign)))
        .pow(k)
        .expect("factor has constant term 1")
}

/// Poincaré polynomials of `X^{[n]}` for a surface with Betti numbers
/// `b_0, …, b_4`, through `q^{order−1}`.
pub fn gottsche_poincare(b: [u64; 5], order: usize) -> PowerSeries {
    let mut out = PowerSeries::one(order);
    out.vars.insert(Var::T);
    for m in 1..order as u32 {
        let num = [(2 * m - 1, b[1]), (2 * m + 1, b[3])];
        let den = [(2 * m - 2, b[0]), (2 * m, b[2]), (2 * m + 2, b[4])];
        for (t, k) in num {
            if k > 0 {
                out = out.mul(&factor(order, [m, t, 0, 0], 1, k as i64));
            }
        }
        for (t, k) in den {
            if k > 0 {
                out = out.mul(&factor(order, [m, t, 0, 0], -1, -(k as i64)));
            }
        }
    }
    out
}

/// `∏_{m≥1} (1 − q^m)^{−e}` through `q^{order−1}`.
pub fn euler_product(e: i64, order: usize) -> PowerSeries {
    let mut out = PowerSeries::one(order);
    if e == 0 {
        return out;
    }
    for m in 1..order as u32 {
        out = out.mul(&factor(order, [m, 0, 0, 0], -1, -e));
    }
    out
}

/// `∏_{r≥1} ∏_{s,t} (1 − x^s y^t q^r (xy)^{r−1})^{(−1)^{s+t+1} h^{s,t}}`
/// through `q^{order−1}`. Entries with `h = 0` are ignored.
pub fn hodge_product(h: &BTreeMap<(u32, u32), i64>, order: usize) -> PowerSeries {
    let mut out = PowerSeries::one(order);
    out.vars.insert(Var::X);
    out.vars.insert(Var::Y);
    for r in 1..order as u32 {
        for (&(s, t), &hst) in h {
            if hst == 0 {
                continue;
            }
            let sign = if (s + t) % 2 == 0 { -1 } else { 1 };
            out = out.mul(&factor(order, [r, 0, s + r - 1, t + r - 1], -1, sign * hst));
        }
    }
    out
}

/// Hodge numbers `h^{s,t}` from a square table indexed `[s][t]`.
pub fn hodge_table(rows: &[Vec<i64>]) -> BTreeMap<(u32, u32), i64> {
    let mut h = BTreeMap::new();
    for (s, row) in rows.iter().enumerate() {
        for (t, &v) in row.iter().enumerate() {
            if v != 0 {
                h.insert((s as u32, t as u32), v);
            }
        }
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;

    fn q_only(s: &PowerSeries) -> Vec<i64> {
        s.q_coefficients()
            .unwrap()
            .iter()
            .map(|c| c.to_integer().try_into().unwrap())
            .collect()
    }

    #[test]
    fn binomial_inverse() {
        let s = PowerSeries::one(6).add(&PowerSeries::monomial(6, [1, 0, 0, 0], rat(-1)));
        let inv = s.pow(-1).unwrap();
        assert_eq!(q_only(&inv), vec![1; 6]);
        assert_eq!(q_only(&s.mul(&inv)), vec![1, 0, 0, 0, 0, 0]);
        let half = PowerSeries::one(4).add(&PowerSeries::monomial(4, [1, 0, 0, 0], rat(1)));
        assert!(half.pow(3).unwrap().q_coefficients().unwrap() == vec![rat(1), rat(3), rat(3), rat(1)]);
        assert!(PowerSeries::monomial(4, [0, 1, 0, 0], rat(2)).pow(2).is_none());
    }

    #[test]
    fn q_one_is_the_surface() {
        let s = gottsche_poincare([1, 2, 3, 4, 5], 3);
        let c = s.q_coefficient(1);
        for k in 0..5u32 {
            assert_eq!(c.coefficient([0, k, 0, 0]), rat(k as i64 + 1));
        }
    }

    #[test]
    fn small_products() {
        assert_eq!(q_only(&euler_product(1, 7)), vec![1, 1, 2, 3, 5, 7, 11]);
        assert_eq!(q_only(&euler_product(0, 5)), vec![1, 0, 0, 0, 0]);
        assert_eq!(q_only(&euler_product(-1, 8)), vec![1, -1, -1, 0, 0, 1, 0, 1]);
    }

    #[test]
    fn substitution_and_display() {
        let s = PowerSeries::monomial(3, [1, 2, 0, 0], ratio(1, 2));
        let at = s.substitute(Var::T, &rat(-2), None);
        assert_eq!(at.coefficient([1, 0, 0, 0]), rat(2));
        let moved = PowerSeries::monomial(3, [1, 0, 1, 1], rat(1)).substitute(Var::X, &rat(-1), Some(Var::Y));
        assert_eq!(moved.coefficient([1, 0, 0, 2]), rat(-1));
        assert_eq!(
            euler_product(1, 3).sub(&PowerSeries::monomial(3, [0, 3, 0, 0], ratio(3, 2))).to_string(),
            "1 - 3/2*t^3 + q + 2*q^2 + O(q^3)"
        );
        assert_eq!(PowerSeries::zero(2).to_string(), "O(q^2)");
    }

    #[test]
    fn hodge_q_one() {
        let h = hodge_table(&[vec![1, 2, 1], vec![2, 4, 2], vec![1, 2, 1]]);
        let s = hodge_product(&h, 2);
        for (&(a, b), &v) in &h {
            let sign = if (a + b) % 2 == 0 { 1 } else { -1 };
            assert_eq!(s.coefficient([1, 0, a, b]), rat(sign * v));
        }
    }
}
