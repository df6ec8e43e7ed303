//! Dense polynomials with exact arbitrary-precision integer coefficients.
//!
//! `IntPolynomial` is univariate in `t` and is the result type of every
//! g-polynomial computation; `BivariatePolynomial` in `x`, `y` holds Tutte
//! polynomials. Both keep a trimmed representation (no trailing zero
//! coefficients) so that structural equality is polynomial equality.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Univariate polynomial in `t`, coefficients stored by ascending power.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_coeffs([1])
    }

    /// The monomial `t`.
    pub fn t() -> Self {
        Self::from_coeffs([0, 1])
    }

    /// Coefficients by ascending power; trailing zeros are trimmed.
    pub fn from_coeffs<I, C>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = C>,
        C: Into<BigInt>,
    {
        let mut coeffs: Vec<BigInt> = coeffs.into_iter().map(Into::into).collect();
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// `c * t^k`.
    pub fn monomial<C: Into<BigInt>>(c: C, k: usize) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        Self { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficients by ascending power (empty for the zero polynomial).
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `t^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn eval(&self, v: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * v + c;
        }
        acc
    }

    pub fn eval_i64(&self, v: i64) -> BigInt {
        self.eval(&BigInt::from(v))
    }

    /// Substitute `t + b` for `t`. Only the shifts `b = 1` and `b = -1` occur
    /// in this crate, so anything else is rejected.
    pub fn compose_shift(&self, b: i64) -> Result<Self> {
        if b != 1 && b != -1 {
            return Err(Error::ShiftOutOfRange(b));
        }
        let shift = Self::from_coeffs([b, 1]);
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &shift) + &Self::from_coeffs([c.clone()]);
        }
        Ok(acc)
    }

    /// Exact division by `t`; errors when the constant term is nonzero.
    pub fn div_t(&self) -> Result<Self> {
        match self.coeffs.first() {
            None => Ok(Self::zero()),
            Some(c) if c.is_zero() => Ok(Self {
                coeffs: self.coeffs[1..].to_vec(),
            }),
            Some(c) => Err(Error::ConstantTermNotZero(c.to_string())),
        }
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn scaled(&self, c: &BigInt) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c))
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Coefficients as `i64` by ascending power, for JSON output.
    pub fn coeffs_i64(&self) -> Result<Vec<i64>> {
        self.coeffs
            .iter()
            .map(|c| i64::try_from(c).map_err(|_| Error::CoefficientTooLarge(c.to_string())))
            .collect()
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::from_coeffs((0..n).map(|k| {
            self.coeffs.get(k).cloned().unwrap_or_default()
                + rhs.coeffs.get(k).cloned().unwrap_or_default()
        }))
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::from_coeffs((0..n).map(|k| {
            self.coeffs.get(k).cloned().unwrap_or_default()
                - rhs.coeffs.get(k).cloned().unwrap_or_default()
        }))
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial { coeffs }
    }
}

impl fmt::Display for IntPolynomial {
    /// Descending powers, `t^k` notation, unit coefficients omitted:
    /// `3t^3 + 5t^2 + 3t`, `3t^2 - t + 1`, `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for k in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            if !mag.is_one() || k == 0 {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{k}")?,
            }
        }
        Ok(())
    }
}

/// Polynomial in `x` and `y`; `coeffs[i][j]` is the coefficient of `x^i y^j`.
/// Rows and row tails are trimmed of zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BivariatePolynomial {
    coeffs: Vec<Vec<BigInt>>,
}

impl BivariatePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (i, j, c) in terms {
            p.add_term(i, j, c.into());
        }
        p.trim();
        p
    }

    pub fn add_term(&mut self, i: usize, j: usize, c: BigInt) {
        if c.is_zero() {
            return;
        }
        if self.coeffs.len() <= i {
            self.coeffs.resize(i + 1, Vec::new());
        }
        if self.coeffs[i].len() <= j {
            self.coeffs[i].resize(j + 1, BigInt::zero());
        }
        self.coeffs[i][j] += c;
    }

    /// Drop zero tails so that equal polynomials compare equal.
    pub fn trim(&mut self) {
        for row in &mut self.coeffs {
            while row.last().is_some_and(Zero::is_zero) {
                row.pop();
            }
        }
        while self.coeffs.last().is_some_and(Vec::is_empty) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, i: usize, j: usize) -> BigInt {
        self.coeffs
            .get(i)
            .and_then(|row| row.get(j))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// Rows by ascending `x` power; each row by ascending `y` power.
    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.coeffs
    }

    pub fn eval(&self, x: i64, y: i64) -> BigInt {
        let (x, y) = (BigInt::from(x), BigInt::from(y));
        let mut acc = BigInt::zero();
        for row in self.coeffs.iter().rev() {
            let mut row_acc = BigInt::zero();
            for c in row.iter().rev() {
                row_acc = row_acc * &y + c;
            }
            acc = acc * &x + row_acc;
        }
        acc
    }

    pub fn rows_i64(&self) -> Result<Vec<Vec<i64>>> {
        self.coeffs
            .iter()
            .map(|row| {
                row.iter()
                    .map(|c| {
                        i64::try_from(c).map_err(|_| Error::CoefficientTooLarge(c.to_string()))
                    })
                    .collect()
            })
            .collect()
    }
}

impl fmt::Display for BivariatePolynomial {
    /// Terms by descending `x` power, then ascending `y` power:
    /// `x^2 + 2x + 2y + y^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for i in (0..self.coeffs.len()).rev() {
            for (j, c) in self.coeffs[i].iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                if first {
                    if c.is_negative() {
                        write!(f, "-")?;
                    }
                    first = false;
                } else if c.is_negative() {
                    write!(f, " - ")?;
                } else {
                    write!(f, " + ")?;
                }
                let mag = c.abs();
                if !mag.is_one() || (i == 0 && j == 0) {
                    write!(f, "{mag}")?;
                }
                match i {
                    0 => {}
                    1 => write!(f, "x")?,
                    _ => write!(f, "x^{i}")?,
                }
                match j {
                    0 => {}
                    1 => write!(f, "y")?,
                    _ => write!(f, "y^{j}")?,
                }
            }
        }
        Ok(())
    }
}

/// Binomial coefficient; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k.min(n - k) {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Narayana polynomial `N_m(t) = sum_k (1/m) C(m,k) C(m,k-1) t^(k-1)`,
/// with `N_0 = 1` by the empty-product convention.
pub fn narayana(m: usize) -> IntPolynomial {
    if m == 0 {
        return IntPolynomial::one();
    }
    IntPolynomial::from_coeffs(
        (1..=m).map(|k| binomial(m, k) * binomial(m, k - 1) / BigInt::from(m)),
    )
}
