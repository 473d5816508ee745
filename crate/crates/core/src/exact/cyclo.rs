use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::rc::Rc;

use num_traits::{One, Signed, Zero};

use super::poly::{cyclotomic_polynomial, euler_phi};
use super::{lcm, rat, Rational};
use crate::error::{Error, Result};

thread_local! {
    static PHI_CACHE: RefCell<HashMap<u32, Rc<Vec<i64>>>> = RefCell::new(HashMap::new());
}

fn cyclotomic(n: u32) -> Rc<Vec<i64>> {
    PHI_CACHE.with(|cache| {
        cache
            .borrow_mut()
            .entry(n)
            .or_insert_with(|| Rc::new(cyclotomic_polynomial(n as u64).coeffs))
            .clone()
    })
}

/// An exact element of the cyclotomic field `Q(ζ_N)`.
///
/// Stored as coordinates in the basis `ζ^0, …, ζ^{φ(N)-1}`, reduced modulo
/// the `N`-th cyclotomic polynomial, so equal elements of one conductor have
/// equal coefficient vectors. Operands with different conductors are embedded
/// into `Q(ζ_lcm)` before combining; results are never descended to a smaller
/// conductor.
#[derive(Clone, Debug)]
pub struct CycNum {
    conductor: u32,
    coeffs: Vec<Rational>,
}

impl CycNum {
    pub fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(rat(n))
    }

    pub fn from_rational(r: Rational) -> Self {
        CycNum {
            conductor: 1,
            coeffs: vec![r],
        }
    }

    /// `ζ_n^k` with conductor `n`.
    pub fn zeta(n: u32, k: i64) -> Self {
        assert!(n >= 1);
        let mut v = vec![Rational::zero(); n as usize];
        v[k.rem_euclid(n as i64) as usize] = Rational::one();
        Self::from_powers(n, v)
    }

    /// Builds `Σ c_i ζ_n^i` from a coefficient vector of any length,
    /// reducing to canonical form.
    pub fn from_powers(n: u32, powers: Vec<Rational>) -> Self {
        assert!(n >= 1);
        let phi = euler_phi(n as u64) as usize;
        let mut c = powers;
        // x^n = 1 in the field; fold high powers first so the vector stays short.
        let nn = n as usize;
        if c.len() > nn {
            for i in nn..c.len() {
                let v = std::mem::take(&mut c[i]);
                if !v.is_zero() {
                    c[i % nn] += v;
                }
            }
            c.truncate(nn);
        }
        if c.len() > phi {
            let f = cyclotomic(n);
            for i in (phi..c.len()).rev() {
                if c[i].is_zero() {
                    continue;
                }
                let lead = std::mem::take(&mut c[i]);
                for (j, &fc) in f.iter().enumerate().take(phi) {
                    if fc != 0 {
                        c[i - phi + j] -= &lead * rat(fc);
                    }
                }
            }
            c.truncate(phi);
        }
        c.resize(phi, Rational::zero());
        CycNum {
            conductor: n,
            coeffs: c,
        }
    }

    /// Reconstruct from stored canonical coordinates.
    pub fn from_coeffs(n: u32, coeffs: Vec<Rational>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("conductor must be positive".into()));
        }
        let phi = euler_phi(n as u64) as usize;
        if coeffs.len() != phi {
            return Err(Error::InvalidInput(format!(
                "conductor {} needs {} coefficients, got {}",
                n,
                phi,
                coeffs.len()
            )));
        }
        Ok(CycNum {
            conductor: n,
            coeffs,
        })
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(Zero::is_zero)
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.coeffs[0].clone())
    }

    /// The value as an integer, if it is one.
    pub fn to_integer(&self) -> Option<i64> {
        use num_traits::ToPrimitive;
        let r = self.to_rational()?;
        if r.is_integer() {
            r.to_integer().to_i64()
        } else {
            None
        }
    }

    /// Re-express in `Q(ζ_m)`; `m` must be a multiple of the conductor.
    pub fn embed(&self, m: u32) -> CycNum {
        assert_eq!(m % self.conductor, 0, "embedding target must be a multiple");
        if m == self.conductor {
            return self.clone();
        }
        let step = (m / self.conductor) as usize;
        let mut v = vec![Rational::zero(); m as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                v[i * step] = c.clone();
            }
        }
        Self::from_powers(m, v)
    }

    fn common(a: &CycNum, b: &CycNum) -> (CycNum, CycNum) {
        let m = lcm(a.conductor as u64, b.conductor as u64) as u32;
        (a.embed(m), b.embed(m))
    }

    /// Galois automorphism `ζ ↦ ζ^k`.
    pub fn galois(&self, k: i64) -> CycNum {
        if self.conductor == 1 {
            return self.clone();
        }
        let n = self.conductor as i64;
        let mut v = vec![Rational::zero(); n as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                v[(i as i64 * k).rem_euclid(n) as usize] += c;
            }
        }
        Self::from_powers(self.conductor, v)
    }

    /// Complex conjugation `ζ ↦ ζ^{-1}`.
    pub fn conjugate(&self) -> CycNum {
        self.galois(-1)
    }

    pub fn scale(&self, r: &Rational) -> CycNum {
        CycNum {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    pub fn checked_div(&self, other: &CycNum) -> Result<CycNum> {
        Ok(self * &other.inverse()?)
    }

    pub fn inverse(&self) -> Result<CycNum> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.conductor == 1 {
            return Ok(Self::from_rational(self.coeffs[0].recip()));
        }
        let f: Vec<Rational> = cyclotomic(self.conductor).iter().map(|&c| rat(c)).collect();
        let inv = poly_inverse_mod(&self.coeffs, &f);
        Ok(Self::from_powers(self.conductor, inv))
    }

    /// Approximate complex value, for display only.
    pub fn approx(&self) -> (f64, f64) {
        use num_traits::ToPrimitive;
        let n = self.conductor as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (i, c) in self.coeffs.iter().enumerate() {
            let v = c.to_f64().unwrap_or(f64::NAN);
            let ang = 2.0 * std::f64::consts::PI * i as f64 / n;
            re += v * ang.cos();
            im += v * ang.sin();
        }
        (re, im)
    }
}

fn trim(p: &mut Vec<Rational>) {
    while p.len() > 1 && p.last().unwrap().is_zero() {
        p.pop();
    }
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let mut out = vec![Rational::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(&mut out);
    out
}

fn poly_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lead = b[db].clone();
    if r.len() - 1 < db || (r.len() == 1 && r[0].is_zero()) {
        return (vec![Rational::zero()], r);
    }
    let mut q = vec![Rational::zero(); r.len() - db];
    for i in (0..q.len()).rev() {
        let c = &r[i + db] / &lead;
        if !c.is_zero() {
            for (j, bc) in b.iter().enumerate() {
                r[i + j] -= &c * bc;
            }
        }
        q[i] = c;
    }
    r.truncate(db.max(1));
    trim(&mut r);
    (q, r)
}

/// Inverse of `a` modulo the irreducible `f`, by the extended Euclidean
/// algorithm over `Q[x]`.
fn poly_inverse_mod(a: &[Rational], f: &[Rational]) -> Vec<Rational> {
    let mut r0 = f.to_vec();
    let mut r1 = a.to_vec();
    trim(&mut r1);
    let mut t0 = vec![Rational::zero()];
    let mut t1 = vec![Rational::one()];
    while !(r1.len() == 1 && r1[0].is_zero()) {
        let (q, r) = poly_divrem(&r0, &r1);
        let t = poly_sub(&t0, &poly_mul(&q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        t0 = std::mem::replace(&mut t1, t);
    }
    // r0 is a nonzero constant.
    let c = r0[0].recip();
    t0.iter().map(|x| x * &c).collect()
}

impl PartialEq for CycNum {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = Self::common(self, other);
        a.coeffs == b.coeffs
    }
}

impl Eq for CycNum {}

impl From<i64> for CycNum {
    fn from(n: i64) -> Self {
        CycNum::from_int(n)
    }
}

impl From<Rational> for CycNum {
    fn from(r: Rational) -> Self {
        CycNum::from_rational(r)
    }
}

impl Zero for CycNum {
    fn zero() -> Self {
        CycNum::zero()
    }
    fn is_zero(&self) -> bool {
        CycNum::is_zero(self)
    }
}

impl One for CycNum {
    fn one() -> Self {
        CycNum::one()
    }
}

impl<'a> Add<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn add(self, rhs: &CycNum) -> CycNum {
        if self.conductor == rhs.conductor {
            return CycNum {
                conductor: self.conductor,
                coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
            };
        }
        let (a, b) = CycNum::common(self, rhs);
        &a + &b
    }
}

impl<'a> Sub<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn sub(self, rhs: &CycNum) -> CycNum {
        if self.conductor == rhs.conductor {
            return CycNum {
                conductor: self.conductor,
                coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
            };
        }
        let (a, b) = CycNum::common(self, rhs);
        &a - &b
    }
}

impl<'a> Mul<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn mul(self, rhs: &CycNum) -> CycNum {
        if rhs.conductor == 1 {
            return self.scale(&rhs.coeffs[0]);
        }
        if self.conductor == 1 {
            return rhs.scale(&self.coeffs[0]);
        }
        if self.conductor == rhs.conductor {
            return CycNum::from_powers(self.conductor, poly_mul(&self.coeffs, &rhs.coeffs));
        }
        let (a, b) = CycNum::common(self, rhs);
        &a * &b
    }
}

impl<'a> Div<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    /// Panics on division by zero; use [`CycNum::checked_div`] to handle it.
    fn div(self, rhs: &CycNum) -> CycNum {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<CycNum> for CycNum {
            type Output = CycNum;
            fn $m(self, rhs: CycNum) -> CycNum {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a CycNum> for CycNum {
            type Output = CycNum;
            fn $m(self, rhs: &CycNum) -> CycNum {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<CycNum> for &'a CycNum {
            type Output = CycNum;
            fn $m(self, rhs: CycNum) -> CycNum {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        -&self
    }
}

impl AddAssign<&CycNum> for CycNum {
    fn add_assign(&mut self, rhs: &CycNum) {
        if self.conductor == rhs.conductor {
            for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
                *a += b;
            }
        } else {
            *self = &*self + rhs;
        }
    }
}

impl AddAssign for CycNum {
    fn add_assign(&mut self, rhs: CycNum) {
        *self += &rhs;
    }
}

impl SubAssign<&CycNum> for CycNum {
    fn sub_assign(&mut self, rhs: &CycNum) {
        if self.conductor == rhs.conductor {
            for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
                *a -= b;
            }
        } else {
            *self = &*self - rhs;
        }
    }
}

impl SubAssign for CycNum {
    fn sub_assign(&mut self, rhs: CycNum) {
        *self -= &rhs;
    }
}

impl MulAssign<&CycNum> for CycNum {
    fn mul_assign(&mut self, rhs: &CycNum) {
        *self = &*self * rhs;
    }
}

impl std::iter::Sum for CycNum {
    fn sum<I: Iterator<Item = CycNum>>(iter: I) -> CycNum {
        let mut acc = CycNum::zero();
        for x in iter {
            acc += &x;
        }
        acc
    }
}

impl<'a> std::iter::Sum<&'a CycNum> for CycNum {
    fn sum<I: Iterator<Item = &'a CycNum>>(iter: I) -> CycNum {
        let mut acc = CycNum::zero();
        for x in iter {
            acc += x;
        }
        acc
    }
}

impl fmt::Display for CycNum {
    /// Exact form, e.g. `2 - 3/2*z12^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            if i == 0 {
                write!(f, "{}", a)?;
            } else {
                if !a.is_one() {
                    write!(f, "{}*", a)?;
                }
                if i == 1 {
                    write!(f, "z{}", self.conductor)?;
                } else {
                    write!(f, "z{}^{}", self.conductor, i)?;
                }
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u32, k: i64) -> CycNum {
        CycNum::zeta(n, k)
    }

    #[test]
    fn i_squared() {
        assert_eq!(&z(4, 1) * &z(4, 1), CycNum::from_int(-1));
    }

    #[test]
    fn primitive_cube_roots_sum() {
        assert_eq!(&z(3, 1) + &z(3, 2), CycNum::from_int(-1));
    }

    #[test]
    fn golden_product() {
        // (ζ + ζ^4)(ζ^2 + ζ^3) = ζ^3 + ζ^4 + ζ^6 + ζ^7 = ζ + ζ^2 + ζ^3 + ζ^4 = -1
        let a = &z(5, 1) + &z(5, 4);
        let b = &z(5, 2) + &z(5, 3);
        assert_eq!(&a * &b, CycNum::from_int(-1));
    }

    #[test]
    fn conjugation() {
        assert_eq!(z(4, 1).conjugate(), -z(4, 1));
        assert_eq!(CycNum::one().conjugate(), CycNum::one());
        let a = &z(3, 1) + &CycNum::from_int(2);
        assert_eq!(a.conjugate(), &z(3, 2) + &CycNum::from_int(2));
        assert_eq!(a.conjugate().coeffs(), &[rat(1), rat(-1)]);
    }

    #[test]
    fn mixed_conductors() {
        // ζ_4 · ζ_3 = ζ_12^{3+4}
        assert_eq!(&z(4, 1) * &z(3, 1), z(12, 7));
        assert_eq!(z(6, 2), z(3, 1));
        assert_eq!(z(2, 1), CycNum::from_int(-1));
    }

    #[test]
    fn inverse_and_div_by_zero() {
        let a = &z(5, 1) + &CycNum::from_int(3);
        let inv = a.inverse().unwrap();
        assert_eq!(&a * &inv, CycNum::one());
        assert_eq!(CycNum::zero().inverse(), Err(Error::DivisionByZero));
    }

    #[test]
    fn display() {
        assert_eq!(CycNum::from_int(-3).to_string(), "-3");
        let a = &CycNum::from_int(2) - &z(12, 3).scale(&super::super::ratio(3, 2));
        assert_eq!(a.to_string(), "2 - 3/2*z12^3");
    }
}
