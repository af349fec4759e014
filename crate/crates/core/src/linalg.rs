//! Exact integer and mod-p linear algebra on small dense matrices.

use crate::error::{Error, Result};

pub fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// Integer determinant by Bareiss fraction-free elimination.
pub fn det_int(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    (sign * a[n - 1][n - 1]) as i64
}

/// det(m) mod p for any modulus p ≥ 2, via the integer determinant.
pub fn det_mod(m: &[Vec<i64>], p: u32) -> Result<u32> {
    if p < 2 {
        return Err(Error::InvalidModulus(p));
    }
    Ok(det_int(m).rem_euclid(p as i64) as u32)
}

pub fn inv_mod(a: u32, p: u32) -> Option<u32> {
    let (mut r0, mut r1) = (p as i64, (a % p) as i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    (r0 == 1).then(|| t0.rem_euclid(p as i64) as u32)
}

/// Reduced row echelon form over ℤ/p (p prime). Returns the reduced matrix
/// and its pivot columns.
pub fn rref_mod(m: &[Vec<i64>], p: u32) -> Result<(Vec<Vec<u32>>, Vec<usize>)> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let pm = p as i64;
    let mut a: Vec<Vec<u32>> = m.iter().map(|r| r.iter().map(|&x| x.rem_euclid(pm) as u32).collect()).collect();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(pr) = (r..rows).find(|&i| a[i][c] != 0) else { continue };
        a.swap(r, pr);
        let inv = inv_mod(a[r][c], p).expect("prime modulus");
        for x in a[r].iter_mut() {
            *x = (*x * inv) % p;
        }
        for i in 0..rows {
            if i != r && a[i][c] != 0 {
                let f = a[i][c];
                for j in 0..cols {
                    a[i][j] = (a[i][j] + (p - f) * a[r][j]) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    Ok((a, pivots))
}

/// Basis of the right kernel {x : m·x = 0} over ℤ/p, one vector per free column.
pub fn kernel_mod(m: &[Vec<i64>], p: u32) -> Result<Vec<Vec<u32>>> {
    let (a, pivots) = rref_mod(m, p)?;
    let cols = m.first().map_or(0, Vec::len);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    Ok(free
        .iter()
        .map(|&f| {
            let mut v = vec![0u32; cols];
            v[f] = 1;
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = (p - a[row][f]) % p;
            }
            v
        })
        .collect())
}
