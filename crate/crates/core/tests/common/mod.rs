//! Independent oracles. Nothing here calls into the library.

#![allow(dead_code, clippy::needless_range_loop)]

/// Bonds of the E8 diagram in the 1..8 numbering; Eₙ keeps the ones inside 1..n.
pub const E_EDGES: [(usize, usize); 7] = [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)];

/// Classical highest-root coefficients, used only as search boxes.
pub const THETA_E8: [i32; 8] = [2, 3, 4, 6, 5, 4, 3, 2];

pub fn cartan_e(n: usize) -> Vec<Vec<i32>> {
    let mut a = vec![vec![0; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    for &(i, j) in &E_EDGES {
        if i <= n && j <= n {
            a[i - 1][j - 1] = -1;
            a[j - 1][i - 1] = -1;
        }
    }
    a
}

pub fn form(a: &[Vec<i32>], x: &[i32], y: &[i32]) -> i32 {
    let mut s = 0;
    for i in 0..x.len() {
        for j in 0..y.len() {
            s += x[i] * a[i][j] * y[j];
        }
    }
    s
}

/// Every nonnegative integer vector inside the box `0..=bounds[i]` with norm 2.
pub fn brute_positive_roots(a: &[Vec<i32>], bounds: &[i32]) -> Vec<Vec<i32>> {
    let n = a.len();
    let mut out = Vec::new();
    let mut v = vec![0i32; n];
    loop {
        if v.iter().any(|&c| c != 0) && form(a, &v, &v) == 2 {
            out.push(v.clone());
        }
        let mut k = 0;
        loop {
            if k == n {
                return out;
            }
            v[k] += 1;
            if v[k] <= bounds[k] {
                break;
            }
            v[k] = 0;
            k += 1;
        }
    }
}

/// Largest index with a nonzero entry, 2 counted as 3.
pub fn stratum(v: &[i32]) -> usize {
    let t = v.iter().rposition(|&c| c != 0).expect("nonzero") + 1;
    if t == 2 {
        3
    } else {
        t
    }
}

pub fn le(x: &[i32], y: &[i32]) -> bool {
    x.iter().zip(y).all(|(a, b)| a <= b)
}

pub fn digits(s: &str) -> Vec<i32> {
    s.chars().map(|c| c.to_digit(10).expect("digit") as i32).collect()
}

pub fn pad(v: &[i32], n: usize) -> Vec<i32> {
    let mut w = v.to_vec();
    w.resize(n, 0);
    w
}

/// Parameters (n, k, λ, μ) from an adjacency matrix, or None if not strongly regular.
pub fn srg(adj: &[Vec<bool>]) -> Option<(usize, usize, usize, usize)> {
    let n = adj.len();
    let deg: Vec<usize> = adj.iter().map(|r| r.iter().filter(|&&b| b).count()).collect();
    let k = deg[0];
    if deg.iter().any(|&d| d != k) {
        return None;
    }
    let (mut lambda, mut mu) = (None, None);
    for i in 0..n {
        for j in (i + 1)..n {
            let c = (0..n).filter(|&w| adj[i][w] && adj[j][w]).count();
            let slot = if adj[i][j] { &mut lambda } else { &mut mu };
            match *slot {
                None => *slot = Some(c),
                Some(x) if x != c => return None,
                _ => {}
            }
        }
    }
    Some((n, k, lambda.unwrap_or(0), mu.unwrap_or(0)))
}

/// Number of down-sets of a finite poset given by `less[i][j]` (i < j):
/// ideals avoiding x are the ideals of P∖↑x, those containing x are ↓x plus
/// an ideal of P∖↓x.
pub fn count_down_sets(less: &[Vec<bool>], alive: u64) -> u64 {
    if alive == 0 {
        return 1;
    }
    let x = alive.trailing_zeros() as usize;
    let mut up = 1u64 << x;
    let mut down = 1u64 << x;
    for y in 0..less.len() {
        if alive >> y & 1 == 1 {
            if less[x][y] {
                up |= 1 << y;
            }
            if less[y][x] {
                down |= 1 << y;
            }
        }
    }
    count_down_sets(less, alive & !up) + count_down_sets(less, alive & !down)
}
