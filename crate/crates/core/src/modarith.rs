//! Residue arithmetic over `Z_n` and kernels of `Z_n`-linear maps.
//!
//! The kernel routine works over any modulus, prime or not. It brings the
//! augmented row matrix `[A | I]` into a Howell-style echelon form: after a
//! pivot is fixed in a column, the pivot row scaled by the annihilator of the
//! pivot is appended, so the rows that vanish on the first `k` columns span
//! exactly the part of the row module that vanishes there.

/// Greatest common divisor; `gcd(0, 0) = 0`.
pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

/// Extended Euclid on signed integers: returns `(g, s, t)` with `s*a + t*b = g >= 0`.
pub fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i128, 0i128);
    let (mut old_t, mut t) = (0i128, 1i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    if old_r < 0 {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

/// Inverse of `a` modulo `n`, if `gcd(a, n) = 1`.
pub fn inv_mod(a: u64, n: u64) -> Option<u64> {
    if n == 1 {
        return Some(0);
    }
    let (g, s, _) = ext_gcd((a % n) as i128, n as i128);
    if g != 1 {
        return None;
    }
    Some(s.rem_euclid(n as i128) as u64)
}

/// Positive divisors of `n` in increasing order.
/// Distinct prime factors of `n`, ascending.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// True when `n` is a power of two (including `1`).
pub fn is_power_of_two(n: u64) -> bool {
    n != 0 && n & (n - 1) == 0
}

#[inline]
pub(crate) fn reduce(x: i128, n: u32) -> u32 {
    x.rem_euclid(n as i128) as u32
}

/// Generators of the left kernel `{ x in Z_n^r : sum_i x_i * rows[i] = 0 }`.
///
/// Every row must have the same length. The returned vectors have length
/// `rows.len()` and are non-zero; their additive span is the whole kernel.
pub fn left_kernel(n: u32, rows: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let r = rows.len();
    if r == 0 {
        return Vec::new();
    }
    let m = rows[0].len();
    let width = m + r;
    let mut mat: Vec<Vec<u32>> = rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            assert_eq!(row.len(), m, "ragged matrix");
            let mut v = Vec::with_capacity(width);
            v.extend(row.iter().map(|&x| x % n));
            v.extend((0..r).map(|j| u32::from(i == j) % n));
            v
        })
        .collect();

    let mut ptr = 0usize;
    for col in 0..m {
        if ptr >= mat.len() {
            break;
        }
        // Gather the gcd of the column into row `ptr`.
        for i in ptr + 1..mat.len() {
            let y = mat[i][col];
            if y == 0 {
                continue;
            }
            let x = mat[ptr][col];
            if x == 0 {
                mat.swap(ptr, i);
                continue;
            }
            let (g, s, t) = ext_gcd(x as i128, y as i128);
            let (yg, xg) = (y as i128 / g, x as i128 / g);
            let (top, bottom) = {
                let (head, tail) = mat.split_at_mut(i);
                (&mut head[ptr], &mut tail[0])
            };
            for k in col..width {
                let p = top[k] as i128;
                let q = bottom[k] as i128;
                top[k] = reduce(s * p + t * q, n);
                bottom[k] = reduce(yg * p - xg * q, n);
            }
        }
        let pivot = mat[ptr][col];
        if pivot == 0 {
            continue;
        }
        let ann = n as u64 / gcd(pivot as u64, n as u64);
        if ann != n as u64 {
            let extra: Vec<u32> = mat[ptr]
                .iter()
                .map(|&x| (x as u64 * ann % n as u64) as u32)
                .collect();
            if extra.iter().any(|&x| x != 0) {
                mat.push(extra);
            }
        }
        ptr += 1;
    }

    mat.into_iter()
        .filter(|row| row[..m].iter().all(|&x| x == 0))
        .map(|row| row[m..].to_vec())
        .filter(|v| v.iter().any(|&x| x != 0))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn span(n: u32, gens: &[Vec<u32>], len: usize) -> std::collections::BTreeSet<Vec<u32>> {
        let mut set = std::collections::BTreeSet::new();
        set.insert(vec![0; len]);
        let mut frontier: Vec<Vec<u32>> = vec![vec![0; len]];
        while let Some(v) = frontier.pop() {
            for g in gens {
                let w: Vec<u32> = v.iter().zip(g).map(|(a, b)| (a + b) % n).collect();
                if set.insert(w.clone()) {
                    frontier.push(w);
                }
            }
        }
        set
    }

    fn brute_kernel(n: u32, rows: &[Vec<u32>]) -> std::collections::BTreeSet<Vec<u32>> {
        let r = rows.len();
        let m = rows[0].len();
        let total = (n as u64).pow(r as u32);
        let mut out = std::collections::BTreeSet::new();
        for idx in 0..total {
            let mut x = vec![0u32; r];
            let mut t = idx;
            for i in (0..r).rev() {
                x[i] = (t % n as u64) as u32;
                t /= n as u64;
            }
            let ok = (0..m).all(|c| {
                let s: u64 = (0..r).map(|i| x[i] as u64 * rows[i][c] as u64).sum();
                s.is_multiple_of(n as u64)
            });
            if ok {
                out.insert(x);
            }
        }
        out
    }

    #[test]
    fn small_arithmetic() {
        assert_eq!(gcd(12, 18), 6);
        assert_eq!(lcm(4, 6), 12);
        assert_eq!(inv_mod(2, 9), Some(5));
        assert_eq!(inv_mod(2, 3), Some(2));
        assert_eq!(inv_mod(2, 4), None);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert!(is_power_of_two(32) && !is_power_of_two(24));
    }

    #[test]
    fn kernel_matches_enumeration_on_fixed_cases() {
        let cases: Vec<(u32, Vec<Vec<u32>>)> = vec![
            (6, vec![vec![2], vec![3]]),
            (4, vec![vec![2, 0], vec![0, 2], vec![2, 2]]),
            (12, vec![vec![4, 6, 1], vec![8, 0, 3]]),
            (9, vec![vec![3, 3], vec![6, 0], vec![0, 0]]),
            (8, vec![vec![0, 4], vec![2, 6], vec![4, 4]]),
        ];
        for (n, rows) in cases {
            let gens = left_kernel(n, &rows);
            assert_eq!(span(n, &gens, rows.len()), brute_kernel(n, &rows), "n={n} rows={rows:?}");
        }
    }

    proptest::proptest! {
        #[test]
        fn kernel_agrees_with_brute_force(
            n in 2u32..13,
            seed in proptest::collection::vec(0u32..1000, 9),
            r in 1usize..4,
            m in 1usize..4,
        ) {
            let rows: Vec<Vec<u32>> = (0..r)
                .map(|i| (0..m).map(|j| seed[(i * 3 + j) % 9] % n).collect())
                .collect();
            let gens = left_kernel(n, &rows);
            proptest::prop_assert_eq!(span(n, &gens, r), brute_kernel(n, &rows));
        }
    }
}
