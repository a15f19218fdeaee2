//! Exact Bernoulli and Euler numbers.
//!
//! Both come from the Brent–Harvey integer recurrences for the tangent and
//! secant numbers, which avoid rational arithmetic until the final division.
//! Tables are memoized process-wide behind a read-write lock.

use std::sync::{OnceLock, RwLock};

use rug::{Integer, Rational};

/// Reduced fraction with positive denominator.
pub type ExactRational = Rational;

/// B₂ₖ for k = 0, 1, 2, … (B₀ = 1).
static EVEN_BERNOULLI: OnceLock<RwLock<Vec<Rational>>> = OnceLock::new();
/// Secant numbers |E₂ₖ| for k = 0, 1, 2, …
static SECANT: OnceLock<RwLock<Vec<Integer>>> = OnceLock::new();

/// Tangent numbers T₁ … Tₙ (T₁ = 1, T₂ = 2, T₃ = 16, …).
fn tangent_numbers(n: usize) -> Vec<Integer> {
    let mut t: Vec<Integer> = vec![Integer::new(); n + 1];
    if n == 0 {
        return t;
    }
    t[1] = Integer::from(1);
    for k in 2..=n {
        t[k] = Integer::from(&t[k - 1] * (k as u64 - 1));
    }
    for k in 2..=n {
        for j in k..=n {
            let a = Integer::from(&t[j - 1] * (j - k) as u64);
            let b = Integer::from(&t[j] * (j - k + 2) as u64);
            t[j] = a + b;
        }
    }
    t
}

/// Secant numbers S₀ … Sₙ (1, 1, 5, 61, 1385, …).
fn secant_numbers(n: usize) -> Vec<Integer> {
    let mut s: Vec<Integer> = vec![Integer::new(); n + 1];
    s[0] = Integer::from(1);
    for k in 1..=n {
        s[k] = Integer::from(&s[k - 1] * k as u64);
    }
    for k in 1..=n {
        for j in (k + 1)..=n {
            let a = Integer::from(&s[j - 1] * (j - k) as u64);
            let b = Integer::from(&s[j] * (j - k + 1) as u64);
            s[j] = a + b;
        }
    }
    s
}

fn even_bernoulli_table(n: usize) -> Vec<Rational> {
    let t = tangent_numbers(n);
    let mut out = Vec::with_capacity(n + 1);
    out.push(Rational::from(1));
    for (k, tk) in t.iter().enumerate().skip(1) {
        // B₂ₖ = (−1)^{k−1} 2k Tₖ / (4ᵏ (4ᵏ − 1))
        let four_k = Integer::from(1) << (2 * k as u32);
        let den = Integer::from(&four_k - 1u32) * four_k;
        let num = Integer::from(tk * (2 * k as u64));
        let mut b = Rational::from((num, den));
        if k % 2 == 0 {
            b = -b;
        }
        out.push(b);
    }
    out
}

/// B₂ₖ, computing and caching the table through index `k` if needed.
pub fn even_bernoulli(k: usize) -> Rational {
    let lock = EVEN_BERNOULLI.get_or_init(|| RwLock::new(Vec::new()));
    {
        let table = lock.read().expect("bernoulli table poisoned");
        if let Some(b) = table.get(k) {
            return b.clone();
        }
    }
    let mut table = lock.write().expect("bernoulli table poisoned");
    if table.len() <= k {
        let target = (k + 1).max(2 * table.len()).max(64);
        *table = even_bernoulli_table(target);
    }
    table[k].clone()
}

/// Exact Bₙ with the convention B₁ = −1/2.
pub fn bernoulli(n: u32) -> ExactRational {
    match n {
        1 => Rational::from((-1, 2)),
        _ if n % 2 == 1 => Rational::new(),
        _ => even_bernoulli(n as usize / 2),
    }
}

/// Exact Euler number Eₙ (secant convention: E₀ = 1, E₂ = −1, E₄ = 5).
/// Odd indices give 0.
pub fn euler_number(n: u32) -> Integer {
    if n % 2 == 1 {
        return Integer::new();
    }
    let k = n as usize / 2;
    let lock = SECANT.get_or_init(|| RwLock::new(Vec::new()));
    let s = {
        let table = lock.read().expect("secant table poisoned");
        table.get(k).cloned()
    };
    let s = match s {
        Some(s) => s,
        None => {
            let mut table = lock.write().expect("secant table poisoned");
            if table.len() <= k {
                let target = (k + 1).max(2 * table.len()).max(32);
                *table = secant_numbers(target);
            }
            table[k].clone()
        }
    };
    if k % 2 == 1 {
        -s
    } else {
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binomial(n: u32, k: u32) -> Integer {
        Integer::from(Integer::binomial_u(n, k))
    }

    /// Σⱼ C(n+1, j) Bⱼ = 0 solved for Bₙ, with exact rationals.
    fn bernoulli_by_recurrence(n: u32) -> Vec<Rational> {
        let mut b = vec![Rational::from(1)];
        for m in 1..=n {
            let mut acc = Rational::new();
            for (j, bj) in b.iter().enumerate() {
                acc += Rational::from(binomial(m + 1, j as u32) * bj);
            }
            b.push(-acc / Rational::from(m + 1));
        }
        b
    }

    #[test]
    fn small_bernoulli_values() {
        assert_eq!(bernoulli(0), 1);
        assert_eq!(bernoulli(1), Rational::from((-1, 2)));
        assert_eq!(bernoulli(2), Rational::from((1, 6)));
        assert_eq!(bernoulli(4), Rational::from((-1, 30)));
        assert_eq!(bernoulli(3), 0);
        assert_eq!(bernoulli(12), Rational::from((-691, 2730)));
    }

    #[test]
    fn bernoulli_matches_defining_recurrence() {
        let reference = bernoulli_by_recurrence(60);
        for (n, b) in reference.iter().enumerate() {
            assert_eq!(&bernoulli(n as u32), b, "B_{n}");
        }
    }

    #[test]
    fn bernoulli_is_reduced() {
        for n in [2u32, 10, 30, 100] {
            let b = bernoulli(n);
            let g = Integer::from(b.numer().gcd_ref(b.denom()));
            assert_eq!(g, 1);
            assert!(*b.denom() > 0);
        }
    }

    #[test]
    fn euler_numbers() {
        assert_eq!(euler_number(0), 1);
        assert_eq!(euler_number(2), -1);
        assert_eq!(euler_number(4), 5);
        assert_eq!(euler_number(6), -61);
        assert_eq!(euler_number(8), 1385);
        assert_eq!(euler_number(7), 0);
    }

    #[test]
    fn euler_numbers_satisfy_secant_recurrence() {
        // Σₖ C(2n, 2k) E₂ₖ = 0 for n ≥ 1
        for n in 1..=20u32 {
            let mut acc = Integer::new();
            for k in 0..=n {
                acc += binomial(2 * n, 2 * k) * euler_number(2 * k);
            }
            assert_eq!(acc, 0, "n = {n}");
        }
    }

    #[test]
    fn euler_number_signs_alternate() {
        for n in 0..=20u32 {
            let e = euler_number(2 * n);
            let expected = if n % 2 == 0 { 1 } else { -1 };
            assert_eq!(e.cmp0() as i32, expected, "E_{}", 2 * n);
        }
    }
}
