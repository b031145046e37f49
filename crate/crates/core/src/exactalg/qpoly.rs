//! Plain integer polynomials in one variable, as ascending coefficient
//! vectors `[c_0, c_1, …]` (so index = power of `q`).
//!
//! Used for the `P` coefficient polynomials of the Satake basis and for
//! Poincaré-polynomial bookkeeping where the exponents are honest naturals
//! and a dense vector is the clearest representation.

use num_traits::Zero;

use super::{Int, Rat};

/// Trim trailing zero coefficients (canonical form; zero = empty vector).
pub fn trim(mut p: Vec<Int>) -> Vec<Int> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

/// Sum of two polynomials.
pub fn add(a: &[Int], b: &[Int]) -> Vec<Int> {
    let mut out = vec![Int::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    trim(out)
}

/// Product of two polynomials.
pub fn mul(a: &[Int], b: &[Int]) -> Vec<Int> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Int::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

/// Exact quotient `a / b`, panicking if the division leaves a remainder.
pub fn div_exact(a: &[Int], b: &[Int]) -> Vec<Int> {
    let a = trim(a.to_vec());
    let b = trim(b.to_vec());
    assert!(!b.is_empty(), "division by zero polynomial");
    if a.is_empty() {
        return Vec::new();
    }
    assert!(a.len() >= b.len(), "inexact polynomial division (degree)");
    let mut rem = a;
    let mut quo = vec![Int::zero(); rem.len() - b.len() + 1];
    let lead = b.last().unwrap().clone();
    for k in (0..quo.len()).rev() {
        let top = rem[k + b.len() - 1].clone();
        if top.is_zero() {
            continue;
        }
        let (c, r) = num_integer::Integer::div_rem(&top, &lead);
        assert!(r.is_zero(), "inexact polynomial division (coefficient)");
        quo[k] = c.clone();
        for (j, bc) in b.iter().enumerate() {
            rem[k + j] -= &c * bc;
        }
    }
    assert!(rem.iter().all(Zero::is_zero), "inexact polynomial division (remainder)");
    trim(quo)
}

/// Evaluate at a rational point.
pub fn eval(p: &[Int], x: &Rat) -> Rat {
    let mut acc = Rat::zero();
    for c in p.iter().rev() {
        acc = acc * x + Rat::from(c.clone());
    }
    acc
}

/// `1 + q + … + q^{k-1}` (the q-integer `[k]_q`).
pub fn q_integer(k: usize) -> Vec<Int> {
    vec![Int::from(1); k]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> Vec<Int> {
        trim(cs.iter().map(|&c| Int::from(c)).collect())
    }

    #[test]
    fn ring_ops() {
        let a = p(&[1, 1]); // 1 + q
        let b = p(&[1, 0, -1]); // 1 - q^2
        assert_eq!(mul(&a, &p(&[1, -1])), b);
        assert_eq!(add(&b, &p(&[-1, 0, 1])), Vec::<Int>::new());
        assert_eq!(div_exact(&b, &a), p(&[1, -1]));
    }

    #[test]
    fn q_integers_divide() {
        // [6]_q / [3]_q = 1 + q^3.
        assert_eq!(div_exact(&q_integer(6), &q_integer(3)), p(&[1, 0, 0, 1]));
    }

    #[test]
    #[should_panic(expected = "inexact")]
    fn inexact_division_panics() {
        div_exact(&p(&[1, 1, 1]), &p(&[1, 1]));
    }

    #[test]
    fn evaluation() {
        let a = p(&[1, 2, 1]); // (1+q)^2
        assert_eq!(
            eval(&a, &Rat::new(Int::from(1), Int::from(2))),
            Rat::new(Int::from(9), Int::from(4))
        );
    }
}
