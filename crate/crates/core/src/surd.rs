//! Exact arithmetic in multi-quadratic fields `Q(√p1, √p2, ...)`.
//!
//! An element is a finite sum `Σ c_d √d` with rational `c_d` and squarefree
//! radicands `d` (`d = 1` is the rational part). Square roots of distinct
//! squarefree integers are linearly independent over `Q`, so this normal form is
//! unique and equality is structural.
//!
//! Signs are decided by splitting on the largest prime `p` occurring in any
//! radicand: `x = a + b√p` with `a, b` free of `p`, and when `a` and `b` have
//! opposite signs the comparison reduces to the sign of `a² − p·b²`, an element
//! with one prime fewer.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Surd {
    terms: BTreeMap<u64, BigRational>,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `n = square² · free` with `free` squarefree.
fn split_square(mut n: u64) -> (u64, u64) {
    let mut square = 1;
    let mut free = 1;
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        for _ in 0..e / 2 {
            square *= p;
        }
        if e % 2 == 1 {
            free *= p;
        }
        p += 1;
    }
    (square, free * n)
}

fn largest_prime(mut n: u64) -> u64 {
    let mut best = 1;
    let mut p = 2;
    while p * p <= n {
        while n % p == 0 {
            n /= p;
            best = p;
        }
        p += 1;
    }
    if n > 1 {
        n
    } else {
        best
    }
}

fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

impl Surd {
    pub fn zero() -> Surd {
        Surd::default()
    }

    pub fn integer(n: i64) -> Surd {
        Surd::from_rational(ratio(n, 1))
    }

    pub fn rational(num: i64, den: i64) -> Surd {
        Surd::from_rational(ratio(num, den))
    }

    pub fn from_rational(q: BigRational) -> Surd {
        let mut s = Surd::zero();
        s.add_term(1, q);
        s
    }

    /// `√n`, simplified.
    pub fn sqrt(n: u64) -> Surd {
        let (square, free) = split_square(n);
        let mut s = Surd::zero();
        if free != 0 {
            s.add_term(free, ratio(square as i64, 1));
        }
        s
    }

    /// `√q` for a nonnegative rational `q = num/den`.
    pub fn sqrt_ratio(num: u64, den: u64) -> Surd {
        assert!(den != 0, "zero denominator");
        // √(num/den) = √(num·den) / den
        Surd::sqrt(num * den).scale(&ratio(1, den as i64))
    }

    /// `√q` for a nonnegative big rational. Panics on negative input or when the
    /// numerator·denominator product does not fit in `u64`.
    pub fn sqrt_big(q: &BigRational) -> Surd {
        assert!(!q.is_negative(), "square root of a negative rational");
        let prod = (q.numer() * q.denom()).to_u64().expect("radicand too large");
        let den = q.denom().clone();
        Surd::sqrt(prod).scale(&BigRational::new(BigInt::one(), den))
    }

    fn add_term(&mut self, key: u64, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(key).or_insert_with(BigRational::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn scale(&self, q: &BigRational) -> Surd {
        if q.is_zero() {
            return Surd::zero();
        }
        Surd { terms: self.terms.iter().map(|(k, c)| (*k, c * q)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The rational value if there are no radical terms.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&1).cloned(),
            _ => None,
        }
    }

    pub fn square(&self) -> Surd {
        self * self
    }

    pub fn to_f64(&self) -> f64 {
        self.terms
            .iter()
            .map(|(k, c)| c.to_f64().unwrap_or(f64::NAN) * (*k as f64).sqrt())
            .sum()
    }

    /// Exact sign.
    pub fn signum(&self) -> Ordering {
        let Some(p) = self.terms.keys().map(|k| largest_prime(*k)).max() else {
            return Ordering::Equal;
        };
        if p == 1 {
            return self.terms[&1].cmp(&BigRational::zero());
        }
        let mut a = Surd::zero();
        let mut b = Surd::zero();
        for (k, c) in &self.terms {
            if k % p == 0 {
                b.add_term(k / p, c.clone());
            } else {
                a.add_term(*k, c.clone());
            }
        }
        let sa = a.signum();
        let sb = b.signum();
        match (sa, sb) {
            (_, Ordering::Equal) => sa,
            (Ordering::Equal, _) => sb,
            _ if sa == sb => sa,
            _ => {
                // opposite signs: |a| vs √p·|b|
                let d = &a.square() - &b.square().scale(&ratio(p as i64, 1));
                if sa == Ordering::Greater {
                    d.signum()
                } else {
                    d.signum().reverse()
                }
            }
        }
    }

    /// Decimal rendering truncated toward zero, e.g. `4.4343...`.
    pub fn decimal(&self, places: usize) -> String {
        let scale = 10f64.powi(places as i32);
        let v = (self.to_f64() * scale).trunc() / scale;
        format!("{v:.places$}")
    }
}

impl Ord for Surd {
    fn cmp(&self, other: &Surd) -> Ordering {
        (self - other).signum()
    }
}

impl PartialOrd for Surd {
    fn partial_cmp(&self, other: &Surd) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<i64> for Surd {
    fn from(n: i64) -> Surd {
        Surd::integer(n)
    }
}

impl Add<&Surd> for &Surd {
    type Output = Surd;

    fn add(self, rhs: &Surd) -> Surd {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, c.clone());
        }
        out
    }
}

impl Sub<&Surd> for &Surd {
    type Output = Surd;

    fn sub(self, rhs: &Surd) -> Surd {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, -c.clone());
        }
        out
    }
}

impl Mul<&Surd> for &Surd {
    type Output = Surd;

    fn mul(self, rhs: &Surd) -> Surd {
        let mut out = Surd::zero();
        for (k1, c1) in &self.terms {
            for (k2, c2) in &rhs.terms {
                // √k1·√k2 = g·√(k1·k2/g²) for squarefree k1, k2 with g = gcd
                let g = gcd(*k1, *k2);
                let key = (k1 / g) * (k2 / g);
                out.add_term(key, c1 * c2 * ratio(g as i64, 1));
            }
        }
        out
    }
}

impl Neg for &Surd {
    type Output = Surd;

    fn neg(self) -> Surd {
        Surd { terms: self.terms.iter().map(|(k, c)| (*k, -c.clone())).collect() }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Surd> for Surd {
            type Output = Surd;
            fn $m(self, rhs: Surd) -> Surd { (&self).$m(&rhs) }
        }
        impl $tr<&Surd> for Surd {
            type Output = Surd;
            fn $m(self, rhs: &Surd) -> Surd { (&self).$m(rhs) }
        }
        impl $tr<Surd> for &Surd {
            type Output = Surd;
            fn $m(self, rhs: Surd) -> Surd { self.$m(&rhs) }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Surd {
    type Output = Surd;

    fn neg(self) -> Surd {
        -&self
    }
}

impl fmt::Display for Surd {
    /// Exact form such as `20 + 5/4*sqrt(2) - 5*sqrt(31)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            if *k == 1 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "sqrt({k})")?;
            } else {
                write!(f, "{mag}*sqrt({k})")?;
            }
        }
        Ok(())
    }
}
