//! Arithmetic in GF(p^m) in logarithm representation.
//!
//! Every nonzero element is stored as its discrete logarithm `k` with respect to
//! a fixed primitive element α, and zero is stored as `-1`. This is the notation
//! used throughout the crate's array files: `3` means α³ and `-1` means zero.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("characteristic {0} is not prime")]
    NotPrime(u32),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field size {0} is too large for table arithmetic")]
    TooLarge(u64),
    #[error("polynomial must be monic of degree {expected} with coefficients below p")]
    BadPolynomial { expected: u32 },
    #[error("polynomial is not primitive: α has order {order}, expected {expected}")]
    NonPrimitivePolynomial { order: u32, expected: u32 },
    #[error("division by zero")]
    DivisionByZero,
}

/// A field element: `-1` is zero, `k >= 0` is α^k.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Elt(i32);

impl Elt {
    pub const ZERO: Elt = Elt(-1);
    pub const ONE: Elt = Elt(0);

    /// Element with the given log code. The caller is responsible for keeping
    /// `log` below q−1; use [`Field::elt`] for checked construction.
    pub const fn from_log(log: i32) -> Elt {
        if log < 0 {
            Elt::ZERO
        } else {
            Elt(log)
        }
    }

    pub fn log(self) -> i32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 < 0
    }
}

impl fmt::Debug for Elt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            write!(f, "0")
        } else {
            write!(f, "a^{}", self.0)
        }
    }
}

impl fmt::Display for Elt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// GF(p^m) with exp/log/Zech tables built from a primitive polynomial.
#[derive(Clone, PartialEq, Eq)]
pub struct Field {
    p: u32,
    m: u32,
    q: u32,
    primitive_poly: Vec<u32>,
    /// exponent → vector form (base-p digits, least significant first)
    exp_table: Vec<u32>,
    /// vector form → exponent, `-1` at index 0
    log_table: Vec<i32>,
    /// zech[k] = log(1 + α^k)
    zech: Vec<i32>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}) poly={:?}", self.p, self.m, self.primitive_poly)
    }
}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

impl Field {
    /// Builds GF(p^m). `primitive_poly` lists coefficients in ascending degree
    /// order and must be monic of degree `m`, e.g. `[2, 1, 1]` for x²+x+2.
    pub fn new(p: u32, m: u32, primitive_poly: &[u32]) -> Result<Field, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if m == 0 {
            return Err(FieldError::ZeroDegree);
        }
        let q64 = (p as u64).pow(m);
        if q64 > 1 << 16 {
            return Err(FieldError::TooLarge(q64));
        }
        let q = q64 as u32;
        if primitive_poly.len() != m as usize + 1
            || primitive_poly[m as usize] != 1
            || primitive_poly.iter().any(|&c| c >= p)
        {
            return Err(FieldError::BadPolynomial { expected: m });
        }

        let to_digits = |mut v: u32| -> Vec<u32> {
            let mut d = vec![0; m as usize];
            for slot in d.iter_mut() {
                *slot = v % p;
                v /= p;
            }
            d
        };
        let from_digits = |d: &[u32]| -> u32 { d.iter().rev().fold(0, |acc, &c| acc * p + c) };

        let mut exp_table = Vec::with_capacity(q as usize - 1);
        let mut log_table = vec![-1i32; q as usize];
        let mut cur = 1u32;
        for k in 0..(q - 1) {
            if log_table[cur as usize] >= 0 {
                return Err(FieldError::NonPrimitivePolynomial { order: k, expected: q - 1 });
            }
            exp_table.push(cur);
            log_table[cur as usize] = k as i32;
            // multiply by x modulo the polynomial
            let digits = to_digits(cur);
            let top = digits[m as usize - 1];
            let mut next = vec![0u32; m as usize];
            for i in (1..m as usize).rev() {
                next[i] = digits[i - 1];
            }
            for (i, slot) in next.iter_mut().enumerate() {
                let sub = (top * primitive_poly[i]) % p;
                *slot = (*slot + p - sub) % p;
            }
            cur = from_digits(&next);
        }
        if cur != 1 {
            return Err(FieldError::NonPrimitivePolynomial { order: 0, expected: q - 1 });
        }

        let add_vec = |a: u32, b: u32| -> u32 {
            let (da, db) = (to_digits(a), to_digits(b));
            let s: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
            from_digits(&s)
        };
        let zech = (0..q - 1)
            .map(|k| log_table[add_vec(1, exp_table[k as usize]) as usize])
            .collect();

        Ok(Field {
            p,
            m,
            q,
            primitive_poly: primitive_poly.to_vec(),
            exp_table,
            log_table,
            zech,
        })
    }

    /// GF(9) from x²+x+2, whose root α satisfies α³+α+1 = 0.
    pub fn gf9() -> Field {
        Field::new(3, 2, &[2, 1, 1]).expect("x^2+x+2 is primitive over GF(3)")
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// Size of the multiplicative group, q − 1.
    pub fn order(&self) -> u32 {
        self.q - 1
    }

    pub fn primitive_poly(&self) -> &[u32] {
        &self.primitive_poly
    }

    /// Vector (base-p digit) encoding of `a`; zero maps to 0.
    pub fn to_vector(&self, a: Elt) -> u32 {
        if a.is_zero() {
            0
        } else {
            self.exp_table[a.0 as usize]
        }
    }

    pub fn from_vector(&self, v: u32) -> Elt {
        Elt(self.log_table[v as usize])
    }

    /// Checks that `log` is a valid element code for this field.
    pub fn elt(&self, log: i32) -> Option<Elt> {
        (log >= -1 && log < self.order() as i32).then_some(Elt(log))
    }

    /// α^k, any integer exponent.
    pub fn alpha_pow(&self, k: i64) -> Elt {
        Elt(k.rem_euclid(self.order() as i64) as i32)
    }

    /// The element n·1 of the prime subfield.
    pub fn from_int(&self, n: i64) -> Elt {
        self.from_vector(n.rem_euclid(self.p as i64) as u32)
    }

    pub fn elements(&self) -> impl Iterator<Item = Elt> {
        (-1..self.order() as i32).map(Elt)
    }

    pub fn add(&self, a: Elt, b: Elt) -> Elt {
        if a.is_zero() {
            return b;
        }
        if b.is_zero() {
            return a;
        }
        let n = self.order() as i32;
        let z = self.zech[(b.0 - a.0).rem_euclid(n) as usize];
        if z < 0 {
            Elt::ZERO
        } else {
            Elt((a.0 + z) % n)
        }
    }

    pub fn neg(&self, a: Elt) -> Elt {
        if a.is_zero() || self.p == 2 {
            return a;
        }
        let n = self.order() as i32;
        Elt((a.0 + n / 2) % n)
    }

    pub fn sub(&self, a: Elt, b: Elt) -> Elt {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Elt, b: Elt) -> Elt {
        if a.is_zero() || b.is_zero() {
            return Elt::ZERO;
        }
        Elt((a.0 + b.0) % self.order() as i32)
    }

    pub fn inv(&self, a: Elt) -> Result<Elt, FieldError> {
        if a.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(Elt((self.order() as i32 - a.0) % self.order() as i32))
    }

    pub fn div(&self, a: Elt, b: Elt) -> Result<Elt, FieldError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// a^e for any integer e; 0^0 = 1, 0^e = 0 for e > 0, error for e < 0.
    pub fn pow(&self, a: Elt, e: i64) -> Result<Elt, FieldError> {
        if a.is_zero() {
            return match e {
                0 => Ok(Elt::ONE),
                e if e > 0 => Ok(Elt::ZERO),
                _ => Err(FieldError::DivisionByZero),
            };
        }
        Ok(self.alpha_pow(a.0 as i64 * e))
    }

    /// Multiply-accumulate helper: acc + a·b.
    #[inline]
    pub fn mul_add(&self, acc: Elt, a: Elt, b: Elt) -> Elt {
        self.add(acc, self.mul(a, b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(k: i32) -> Elt {
        Elt(k)
    }

    /// Polynomial arithmetic over GF(3) on coefficient vectors, independent of
    /// the table construction.
    fn poly_mod_gf3(mut a: Vec<i64>, modulus: &[i64]) -> Vec<i64> {
        let d = modulus.len() - 1;
        while a.len() > d {
            let top = a.pop().unwrap().rem_euclid(3);
            let shift = a.len() - d;
            for i in 0..d {
                a[shift + i] -= top * modulus[i];
            }
        }
        a.iter().map(|c| c.rem_euclid(3)).collect()
    }

    #[test]
    fn gf9_alpha_satisfies_cubic_relation() {
        // α³ + α + 1 reduced mod x²+x+2 over GF(3) must vanish
        let r = poly_mod_gf3(vec![1, 1, 0, 1], &[2, 1, 1]);
        assert_eq!(r, vec![0, 0]);
        let f = Field::gf9();
        let lhs = f.add(f.add(f.alpha_pow(3), f.alpha_pow(1)), Elt::ONE);
        assert!(lhs.is_zero());
        // α² = 2α + 1 as digits [1, 2]
        assert_eq!(f.to_vector(e(2)), 1 + 2 * 3);
        assert_eq!(f.to_vector(e(3)), 2 + 2 * 3);
    }

    #[test]
    fn gf2_prime_field() {
        let f = Field::new(2, 1, &[1, 1]).unwrap();
        assert_eq!(f.q(), 2);
        assert_eq!(f.exp_table, vec![1]);
        assert_eq!(f.add(Elt::ONE, Elt::ONE), Elt::ZERO);
    }

    #[test]
    fn non_primitive_rejected() {
        let err = Field::new(3, 2, &[1, 0, 1]).unwrap_err();
        assert!(matches!(err, FieldError::NonPrimitivePolynomial { order: 4, expected: 8 }));
        assert!(matches!(Field::new(4, 1, &[1, 1]), Err(FieldError::NotPrime(4))));
        assert!(matches!(Field::new(3, 2, &[2, 1, 2]), Err(FieldError::BadPolynomial { .. })));
    }

    #[test]
    fn gf9_quoted_values() {
        let f = Field::gf9();
        assert_eq!(f.neg(Elt::ONE), e(4));
        assert_eq!(f.add(Elt::ONE, e(4)), Elt::ZERO);
        assert_eq!(f.add(e(5), Elt::ZERO), e(5));
        assert_eq!(f.mul(e(1), e(7)), Elt::ONE);
        assert_eq!(f.pow(e(2), -1).unwrap(), e(6));
        assert_eq!(f.mul(Elt::ZERO, e(5)), Elt::ZERO);
        assert_eq!(f.inv(Elt::ZERO), Err(FieldError::DivisionByZero));
        assert_eq!(f.div(e(3), Elt::ZERO), Err(FieldError::DivisionByZero));
    }

    #[test]
    fn gf9_exhaustive_laws() {
        let f = Field::gf9();
        let all: Vec<Elt> = f.elements().collect();
        for &a in &all {
            assert_eq!(f.mul(f.from_int(3), a), Elt::ZERO);
            assert_eq!(f.add(a, f.neg(a)), Elt::ZERO);
            if !a.is_zero() {
                assert_eq!(f.pow(a, 8).unwrap(), Elt::ONE);
                assert_eq!(f.neg(a), f.mul(a, f.alpha_pow(4)));
            }
            for &b in &all {
                // table addition agrees with digit-wise addition
                let (va, vb) = (f.to_vector(a), f.to_vector(b));
                let sum = (va % 3 + vb % 3) % 3 + 3 * ((va / 3 + vb / 3) % 3);
                assert_eq!(f.add(a, b), f.from_vector(sum));
                for &c in &all {
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }

    #[test]
    fn gf16_char2() {
        let f = Field::new(2, 4, &[1, 1, 0, 0, 1]).unwrap();
        for a in f.elements() {
            assert_eq!(f.neg(a), a);
            assert_eq!(f.add(a, a), Elt::ZERO);
        }
    }
}
