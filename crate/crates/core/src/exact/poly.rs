use std::fmt;

/// Dense integer polynomial, coefficients from the constant term upwards.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPoly {
    pub coeffs: Vec<i64>,
}

impl IntPoly {
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    fn trim(mut self) -> Self {
        while self.coeffs.len() > 1 && *self.coeffs.last().unwrap() == 0 {
            self.coeffs.pop();
        }
        self
    }

    /// Exact division by a monic divisor. Panics if the remainder is nonzero.
    fn div_exact_monic(&self, d: &IntPoly) -> IntPoly {
        let dd = d.degree();
        assert_eq!(*d.coeffs.last().unwrap(), 1, "divisor must be monic");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            assert!(rem.iter().all(|&c| c == 0));
            return IntPoly { coeffs: vec![0] };
        }
        let mut quot = vec![0i64; rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = rem[i + dd];
            quot[i] = c;
            if c != 0 {
                for (j, &dc) in d.coeffs.iter().enumerate() {
                    rem[i + j] -= c * dc;
                }
            }
        }
        assert!(rem.iter().all(|&c| c == 0), "inexact polynomial division");
        IntPoly { coeffs: quot }.trim()
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", sign)?;
            }
            let a = c.abs();
            match (i, a) {
                (0, _) => write!(f, "{}", a)?,
                (1, 1) => write!(f, "x")?,
                (1, _) => write!(f, "{}x", a)?,
                (_, 1) => write!(f, "x^{}", i)?,
                _ => write!(f, "{}x^{}", a, i)?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Euler's totient.
pub fn euler_phi(n: u64) -> u64 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// The `n`-th cyclotomic polynomial `Φ_n`, obtained from `x^n - 1` by exact
/// division by `Φ_d` for every proper divisor `d` of `n`.
pub fn cyclotomic_polynomial(n: u64) -> IntPoly {
    assert!(n >= 1, "cyclotomic polynomial needs n >= 1");
    let mut coeffs = vec![0i64; n as usize + 1];
    coeffs[0] = -1;
    coeffs[n as usize] = 1;
    let mut p = IntPoly { coeffs };
    for d in 1..n {
        if n % d == 0 {
            p = p.div_exact_monic(&cyclotomic_polynomial(d));
        }
    }
    p
}
