//! Exact quadratic numbers `(a + c·√d) / q`.

use std::cmp::Ordering;
use std::fmt;

use crate::numtheory::{gcd, square_part};

/// `(a + c·√d) / q` in canonical form: `q ≥ 1`, `d` squarefree and `≥ 2`
/// whenever `c ≠ 0`, `c = 0 ⇒ d = 0`, and `gcd(a, c, q) = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Surd {
    a: i64,
    c: i64,
    d: u64,
    q: u64,
}

impl Surd {
    pub fn integer(a: i64) -> Self {
        Surd { a, c: 0, d: 0, q: 1 }
    }

    /// `(a + sign·√b) / q`, simplified. `sign` is `+1`, `-1` or `0`.
    pub fn new(a: i64, sign: i8, b: u64, q: u64) -> Self {
        assert!(q >= 1, "surd denominator must be positive");
        let (k, r) = square_part(b);
        let (mut a, mut c, mut d) = match (sign, r) {
            (0, _) | (_, 0) => (a, 0, 0),
            (_, 1) => (a + i64::from(sign) * k as i64, 0, 0),
            _ => (a, i64::from(sign) * k as i64, r),
        };
        if c == 0 {
            d = 0;
        }
        let g = gcd(gcd(a.unsigned_abs(), c.unsigned_abs()), q).max(1);
        a /= g as i64;
        c /= g as i64;
        Surd { a, c, d, q: q / g }
    }

    /// Roots of `x² - b·x + c`, larger first. Requires a real discriminant.
    pub fn quadratic_roots(b: i64, c: i64) -> (Surd, Surd) {
        let disc = b * b - 4 * c;
        assert!(disc >= 0, "complex roots for x^2 - {b}x + {c}");
        let disc = disc as u64;
        (Surd::new(b, 1, disc, 2), Surd::new(b, -1, disc, 2))
    }

    pub fn is_rational(&self) -> bool {
        self.c == 0
    }

    /// Full radicand `c²·d`; the value is `(a ± √radicand) / q`.
    pub fn radicand(&self) -> u64 {
        (self.c.unsigned_abs()).pow(2) * self.d
    }

    /// Evaluates `(a ± √(c²d)) / q`: one rounding in the square root, one in
    /// the sum, one in the division (exact when `q` is a power of two).
    pub fn value(&self) -> f64 {
        let root = (self.radicand() as f64).sqrt();
        let s = match self.c.signum() {
            1 => self.a as f64 + root,
            -1 => self.a as f64 - root,
            _ => self.a as f64,
        };
        s / self.q as f64
    }

    pub fn parts(&self) -> (i64, i64, u64, u64) {
        (self.a, self.c, self.d, self.q)
    }
}

impl PartialOrd for Surd {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Surd {
    fn cmp(&self, other: &Self) -> Ordering {
        if self == other {
            return Ordering::Equal;
        }
        self.value().total_cmp(&other.value()).then_with(|| self.parts().cmp(&other.parts()))
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut num = String::new();
        if self.c == 0 {
            num.push_str(&self.a.to_string());
        } else {
            let coef = self.c.unsigned_abs();
            let radical = if coef == 1 {
                format!("sqrt({})", self.d)
            } else {
                format!("{coef}*sqrt({})", self.d)
            };
            let op = if self.c < 0 { "-" } else { "+" };
            if self.a == 0 {
                num = if self.c < 0 { format!("-{radical}") } else { radical };
            } else {
                num = format!("{}{op}{radical}", self.a);
            }
        }
        if self.q == 1 {
            write!(f, "{num}")
        } else if self.c == 0 {
            write!(f, "{num}/{}", self.q)
        } else {
            write!(f, "({num})/{}", self.q)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn canonical_forms() {
        assert_eq!(Surd::new(12, 1, 48, 2), Surd::new(6, 1, 12, 1));
        assert_eq!(Surd::new(6, 1, 12, 1).to_string(), "6+2*sqrt(3)");
        assert_eq!(Surd::new(15, -1, 45, 1).to_string(), "15-3*sqrt(5)");
        assert_eq!(Surd::new(13, 1, 25, 2), Surd::integer(9));
        assert_eq!(Surd::new(13, 1, 217, 2).to_string(), "(13+sqrt(217))/2");
        assert_eq!(Surd::new(3, 0, 0, 2).to_string(), "3/2");
        assert_eq!(Surd::new(0, -1, 8, 1).to_string(), "-2*sqrt(2)");
        assert_eq!(Surd::new(20, 1, 136, 1).parts(), (20, 2, 34, 1));
    }

    #[test]
    fn quadratic_roots_match_formula() {
        // x^2 - 13x + 12 = (x - 12)(x - 1)
        assert_eq!(Surd::quadratic_roots(13, 12), (Surd::integer(12), Surd::integer(1)));
        let (hi, lo) = Surd::quadratic_roots(12, 24);
        assert_eq!(hi.to_string(), "6+2*sqrt(3)");
        assert_eq!(lo.to_string(), "6-2*sqrt(3)");
    }

    #[test]
    fn ordering_follows_value() {
        let mut v = [Surd::integer(10), Surd::new(15, 1, 45, 1), Surd::new(15, -1, 45, 1)];
        v.sort();
        assert_eq!(v[0], Surd::new(15, -1, 45, 1));
        assert_eq!(v[2], Surd::new(15, 1, 45, 1));
    }

    proptest! {
        #[test]
        fn value_within_one_ulp_of_direct_evaluation(a in -1000i64..1000, b in 0u64..100_000, plus in any::<bool>()) {
            let sign = if plus { 1 } else { -1 };
            let direct = a as f64 + f64::from(sign) * (b as f64).sqrt();
            let s = Surd::new(a, sign, b, 1);
            let got = s.value();
            prop_assert!((got - direct).abs() <= f64::EPSILON * direct.abs(), "{} vs {}", got, direct);
        }

        #[test]
        fn halved_roots_within_one_ulp(b in -200i64..200, c in -5000i64..5000) {
            prop_assume!(b * b - 4 * c >= 0);
            let disc = (b * b - 4 * c) as f64;
            let (hi, lo) = Surd::quadratic_roots(b, c);
            let d_hi = (b as f64 + disc.sqrt()) / 2.0;
            let d_lo = (b as f64 - disc.sqrt()) / 2.0;
            for (got, want) in [(hi.value(), d_hi), (lo.value(), d_lo)] {
                let tol = want.abs().max(1.0) * f64::EPSILON;
                prop_assert!((got - want).abs() <= tol, "{} vs {}", got, want);
            }
        }
    }
}
