use num_traits::Zero;

use super::gcd::{exact_div, int_normalize, poly_gcd};
use super::poly::Poly;
use super::Rat;
use crate::{Error, Result};

/// Rational function in canonical form: `num/den` with `gcd(num, den) = 1`,
/// `den` integer-primitive with positive leading coefficient (graded-lex).
/// The canonical form is unique, so structural equality is equality of
/// fractions.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<RatFunc> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RatFunc::reduce(num, den))
    }

    /// Canonicalize; `den` must be nonzero.
    fn reduce(num: Poly, den: Poly) -> RatFunc {
        assert_eq!(num.nvars(), den.nvars());
        if num.is_zero() {
            return RatFunc {
                num,
                den: Poly::one(den.nvars()),
            };
        }
        let g = poly_gcd(&num, &den);
        let (num, den) = if g.is_constant() {
            (num, den)
        } else {
            (
                exact_div(&num, &g).expect("gcd divides numerator"),
                exact_div(&den, &g).expect("gcd divides denominator"),
            )
        };
        let (den_canon, s) = int_normalize(&den);
        // num/den = (num/s)/den_canon
        let num = num.scale(&s.recip());
        RatFunc {
            num,
            den: den_canon,
        }
    }

    pub fn from_poly(p: Poly) -> RatFunc {
        let n = p.nvars();
        RatFunc {
            num: p,
            den: Poly::one(n),
        }
    }

    pub fn zero(nvars: usize) -> RatFunc {
        RatFunc::from_poly(Poly::zero(nvars))
    }

    pub fn one(nvars: usize) -> RatFunc {
        RatFunc::from_poly(Poly::one(nvars))
    }

    pub fn constant(nvars: usize, c: Rat) -> RatFunc {
        RatFunc::from_poly(Poly::constant(nvars, c))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    /// The polynomial value, if the denominator is trivial.
    pub fn as_poly(&self) -> Option<Poly> {
        if !self.den.is_constant() {
            return None;
        }
        let c = self.den.constant_coeff();
        Some(self.num.scale(&c.recip()))
    }

    pub fn add(&self, other: &RatFunc) -> RatFunc {
        // Reduce via gcd of denominators to keep intermediate degrees low.
        let g = poly_gcd(&self.den, &other.den);
        let (da, db) = if g.is_constant() {
            (self.den.clone(), other.den.clone())
        } else {
            (
                exact_div(&self.den, &g).unwrap(),
                exact_div(&other.den, &g).unwrap(),
            )
        };
        let num = self.num.mul(&db).add(&other.num.mul(&da));
        let den = self.den.mul(&db);
        RatFunc::reduce(num, den)
    }

    pub fn sub(&self, other: &RatFunc) -> RatFunc {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &RatFunc) -> RatFunc {
        // Cross-cancel before multiplying.
        let g1 = poly_gcd(&self.num, &other.den);
        let g2 = poly_gcd(&other.num, &self.den);
        let na = divide_out(&self.num, &g1);
        let db = divide_out(&other.den, &g1);
        let nb = divide_out(&other.num, &g2);
        let da = divide_out(&self.den, &g2);
        RatFunc::reduce(na.mul(&nb), da.mul(&db))
    }

    pub fn div(&self, other: &RatFunc) -> Result<RatFunc> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.mul(&other.inv()?))
    }

    pub fn inv(&self) -> Result<RatFunc> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn scale(&self, c: &Rat) -> RatFunc {
        if c.is_zero() {
            return RatFunc::zero(self.nvars());
        }
        RatFunc {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn mul_poly(&self, p: &Poly) -> RatFunc {
        self.mul(&RatFunc::from_poly(p.clone()))
    }

    /// Apply an integer matrix to the first `mat.len()` variables (identity
    /// elsewhere) and re-canonicalize. For an invertible matrix this is a
    /// field automorphism, so the denominator stays nonzero.
    pub fn apply_matrix(&self, mat: &[Vec<i64>]) -> RatFunc {
        let num = self.num.apply_matrix(mat);
        let den = self.den.apply_matrix(mat);
        assert!(!den.is_zero(), "substitution must be invertible");
        RatFunc::reduce(num, den)
    }

    pub fn substitute(&self, rows: &[Poly]) -> Result<RatFunc> {
        let num = self.num.substitute(rows);
        let den = self.den.substitute(rows);
        RatFunc::new(num, den)
    }

    pub fn extend_vars(&self, new_nvars: usize) -> RatFunc {
        RatFunc {
            num: self.num.extend_vars(new_nvars),
            den: self.den.extend_vars(new_nvars),
        }
    }

    /// Equality as fractions by cross-multiplication. Canonical forms make
    /// this equivalent to `==`; kept for the canonical-form uniqueness tests.
    pub fn eq_cross(&self, other: &RatFunc) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

fn divide_out(p: &Poly, g: &Poly) -> Poly {
    if g.is_constant() {
        p.clone()
    } else {
        exact_div(p, g).expect("gcd divides")
    }
}

impl From<Poly> for RatFunc {
    fn from(p: Poly) -> Self {
        RatFunc::from_poly(p)
    }
}

impl std::ops::Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::add(self, rhs)
    }
}

impl std::ops::Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::sub(self, rhs)
    }
}

impl std::ops::Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::mul(self, rhs)
    }
}
