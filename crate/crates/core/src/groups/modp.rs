//! Small prime-field linear algebra used to split class-sum eigenspaces.

pub(crate) fn mul(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn pow(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul(r, a, p);
        }
        a = mul(a, a, p);
        e >>= 1;
    }
    r
}

pub(crate) fn inv(a: u64, p: u64) -> u64 {
    pow(a, p - 2, p)
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Smallest prime `p ≡ 1 (mod e)` with `p > lower`.
pub(crate) fn prime_1_mod(e: u64, lower: u64) -> u64 {
    let mut p = (lower / e + 1) * e + 1;
    while !is_prime(p) {
        p += e;
    }
    p
}

pub(crate) fn primitive_root(p: u64) -> u64 {
    let fs = prime_factors(p - 1);
    (2..p)
        .find(|&g| fs.iter().all(|&q| pow(g, (p - 1) / q, p) != 1))
        .expect("prime has a primitive root")
}

/// Basis of the null space of the k×k matrix `a` (row-major), as vectors.
pub(crate) fn nullspace(mut a: Vec<Vec<u64>>, p: u64) -> Vec<Vec<u64>> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, piv);
        let iv = inv(a[r][c], p);
        for x in a[r].iter_mut() {
            *x = mul(*x, iv, p);
        }
        for i in 0..rows {
            if i != r && a[i][c] != 0 {
                let f = a[i][c];
                for j in 0..cols {
                    let t = mul(f, a[r][j], p);
                    a[i][j] = (a[i][j] + p - t) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0; cols];
            v[f] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = (p - a[i][f]) % p;
            }
            v
        })
        .collect()
}

/// Reduced row echelon form of a list of row vectors; returns
/// `(rows, pivot_columns)` with zero rows dropped.
pub(crate) fn rref(mut a: Vec<Vec<u64>>, p: u64) -> (Vec<Vec<u64>>, Vec<usize>) {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, piv);
        let iv = inv(a[r][c], p);
        for x in a[r].iter_mut() {
            *x = mul(*x, iv, p);
        }
        for i in 0..rows {
            if i != r && a[i][c] != 0 {
                let f = a[i][c];
                for j in 0..cols {
                    let t = mul(f, a[r][j], p);
                    a[i][j] = (a[i][j] + p - t) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    (a, pivots)
}

/// Characteristic polynomial det(xI − a), coefficients low to high,
/// via reduction to Hessenberg form.
pub(crate) fn charpoly(mut h: Vec<Vec<u64>>, p: u64) -> Vec<u64> {
    let n = h.len();
    for m in 1..n.saturating_sub(1) {
        let Some(i) = (m..n).find(|&i| h[i][m - 1] != 0) else {
            continue;
        };
        if i != m {
            h.swap(i, m);
            for row in h.iter_mut() {
                row.swap(i, m);
            }
        }
        let iv = inv(h[m][m - 1], p);
        for i in m + 1..n {
            let u = mul(h[i][m - 1], iv, p);
            if u == 0 {
                continue;
            }
            for j in 0..n {
                let t = mul(u, h[m][j], p);
                h[i][j] = (h[i][j] + p - t) % p;
            }
            for row in h.iter_mut() {
                let t = mul(u, row[i], p);
                row[m] = (row[m] + t) % p;
            }
        }
    }
    // 1-indexed recurrence on leading principal minors
    let hh = |i: usize, j: usize| h[i - 1][j - 1];
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for m in 1..=n {
        let prev = &polys[m - 1];
        let mut next = vec![0u64; m + 1];
        for (k, &c) in prev.iter().enumerate() {
            next[k + 1] = (next[k + 1] + c) % p;
            next[k] = (next[k] + p - mul(hh(m, m), c, p)) % p;
        }
        let mut t = 1u64;
        for i in (1..m).rev() {
            t = mul(t, hh(i + 1, i), p);
            let coef = mul(hh(i, m), t, p);
            if coef == 0 {
                continue;
            }
            for (k, &c) in polys[i - 1].iter().enumerate() {
                next[k] = (next[k] + p - mul(coef, c, p)) % p;
            }
        }
        polys.push(next);
    }
    polys.pop().unwrap()
}

pub(crate) fn eval(poly: &[u64], x: u64, p: u64) -> u64 {
    poly.iter().rev().fold(0, |acc, &c| (mul(acc, x, p) + c) % p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn charpoly_matches_roots() {
        let p = 101;
        // upper triangular with eigenvalues 2, 3, 3, plus a similarity twist
        let a = vec![vec![2, 5, 7], vec![0, 3, 1], vec![0, 0, 3]];
        let s = vec![vec![1, 0, 0], vec![4, 1, 0], vec![9, 2, 1]];
        let sinv_rows = {
            // inverse of unit lower triangular s
            let mut m = vec![vec![1u64, 0, 0], vec![p - 4, 1, 0], vec![0, p - 2, 1]];
            m[2][0] = (p * 2 + 8 - 9) % p;
            m
        };
        let mm = |x: &Vec<Vec<u64>>, y: &Vec<Vec<u64>>| -> Vec<Vec<u64>> {
            (0..3)
                .map(|i| (0..3).map(|j| (0..3).fold(0, |acc, k| (acc + mul(x[i][k], y[k][j], p)) % p)).collect())
                .collect()
        };
        let b = mm(&mm(&s, &a), &sinv_rows);
        let cp = charpoly(b, p);
        assert_eq!(cp.len(), 4);
        for x in 0..p {
            let expect = x == 2 || x == 3;
            assert_eq!(eval(&cp, x, p) == 0, expect);
        }
    }

    #[test]
    fn primes() {
        assert_eq!(prime_1_mod(6, 20), 31);
        assert_eq!(primitive_root(7), 3);
        let ns = nullspace(vec![vec![1, 2], vec![2, 4]], 7);
        assert_eq!(ns, vec![vec![5, 1]]);
    }
}
