//! Univariate polynomials with exact rational coefficients, and the
//! semistandard tableau counts they describe.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Coefficients stored from the constant term upward, without trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<BigRational>,
}

pub fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn integer(v: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(v.into())
}

impl Polynomial {
    pub fn new(coeffs: Vec<BigRational>) -> Self {
        let mut p = Polynomial { coeffs };
        p.trim();
        p
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: BigRational) -> Self {
        Polynomial::new(vec![c])
    }

    /// `x + c`.
    pub fn linear(c: BigRational) -> Self {
        Polynomial::new(vec![c, BigRational::one()])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `x^k`.
    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_int(&self, x: i64) -> BigRational {
        self.eval(&integer(x))
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(other.coeffs.len());
        Polynomial::new((0..len).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn scale(&self, c: &BigRational) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }

    /// Coefficients as `"num/den"` strings, constant term first.
    pub fn to_rational_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| format!("{}/{}", c.numer(), c.denom())).collect()
    }

    pub fn from_rational_strings<S: AsRef<str>>(items: &[S]) -> Result<Self> {
        let coeffs = items.iter().map(|s| parse_rational(s.as_ref())).collect::<Result<Vec<_>>>()?;
        Ok(Polynomial::new(coeffs))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::from(self.to_rational_strings())
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::InvalidConfiguration(format!("bad rational {s:?}"));
    let (num, den) = match s.trim().split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            let show_coeff = k == 0 || !a.is_one();
            if show_coeff {
                write!(f, "{a}")?;
            }
            match k {
                0 => {}
                1 => f.write_str("N")?,
                _ => write!(f, "N^{k}")?,
            }
        }
        Ok(())
    }
}

/// Hook-content polynomial: `SSYT(λ, N) = ∏ (N + c(u)) / H_λ`.
pub fn ssyt_count_polynomial(lambda: &Partition) -> Polynomial {
    let product = lambda
        .cells()
        .map(|(r, c)| Polynomial::linear(integer(Partition::content(r, c))))
        .fold(Polynomial::constant(BigRational::one()), |acc, f| acc.mul(&f));
    let hooks = BigRational::from_integer(BigInt::from(lambda.hook_product()));
    product.scale(&hooks.recip())
}

/// Counts semistandard tableaux of shape `λ` with entries in `1..=n` by
/// filling cells one at a time.
pub fn ssyt_enumerate(lambda: &Partition, n: usize) -> BigUint {
    let cells: Vec<(usize, usize)> = lambda.cells().collect();
    let mut grid: Vec<Vec<usize>> = lambda.parts().iter().map(|&l| vec![0; l]).collect();

    fn fill(idx: usize, cells: &[(usize, usize)], grid: &mut Vec<Vec<usize>>, n: usize) -> u64 {
        let Some(&(r, c)) = cells.get(idx) else {
            return 1;
        };
        let lo_row = if c > 0 { grid[r][c - 1] } else { 1 };
        let lo_col = if r > 0 { grid[r - 1][c] + 1 } else { 1 };
        let lo = lo_row.max(lo_col);
        let mut total = 0;
        for v in lo..=n {
            grid[r][c] = v;
            total += fill(idx + 1, cells, grid, n);
        }
        grid[r][c] = 0;
        total
    }

    BigUint::from(fill(0, &cells, &mut grid, n))
}

/// Lagrange interpolation through `(x, y)` pairs with distinct `x`.
pub fn interpolate(points: &[(BigRational, BigRational)]) -> Result<Polynomial> {
    for (i, (x, _)) in points.iter().enumerate() {
        if points[..i].iter().any(|(x2, _)| x2 == x) {
            return Err(Error::InvalidConfiguration(format!("duplicate interpolation point {x}")));
        }
    }
    let mut result = Polynomial::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        let mut basis = Polynomial::constant(BigRational::one());
        let mut denom = BigRational::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i != j {
                basis = basis.mul(&Polynomial::linear(-xj.clone()));
                denom *= xi - xj;
            }
        }
        result = result.add(&basis.scale(&(yi / denom)));
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn empty_and_single_box() {
        assert_eq!(ssyt_count_polynomial(&Partition::empty()), Polynomial::constant(integer(1)));
        assert_eq!(ssyt_count_polynomial(&p("1")), Polynomial::linear(integer(0)));
        assert_eq!(ssyt_enumerate(&Partition::empty(), 5), BigUint::from(1u32));
        assert_eq!(ssyt_enumerate(&p("1"), 3), BigUint::from(3u32));
    }

    #[test]
    fn two_two_one_matches_printed_polynomial() {
        // (N+1) N^2 (N-1)(N-2) = N^5 - 2N^4 - N^3 + 2N^2
        let expected = Polynomial::new(vec![
            integer(0),
            integer(0),
            rational(2, 24),
            rational(-1, 24),
            rational(-2, 24),
            rational(1, 24),
        ]);
        let poly = ssyt_count_polynomial(&p("2,2,1"));
        assert_eq!(poly, expected);
        assert_eq!(poly.eval_int(3), integer(3));
        assert_eq!(ssyt_enumerate(&p("2,2,1"), 3), BigUint::from(3u32));
    }

    #[test]
    fn rational_strings() {
        let poly = ssyt_count_polynomial(&p("2"));
        assert_eq!(poly.to_rational_strings(), vec!["0/1", "1/2", "1/2"]);
        let back = Polynomial::from_rational_strings(&poly.to_rational_strings()).unwrap();
        assert_eq!(back, poly);
        assert!(parse_rational("1/0").is_err());
        assert_eq!(parse_rational("-3").unwrap(), integer(-3));
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let target = ssyt_count_polynomial(&p("2,1"));
        let pts: Vec<_> = (0..4).map(|x| (integer(x), target.eval_int(x))).collect();
        assert_eq!(interpolate(&pts).unwrap(), target);
        let dup = vec![(integer(1), integer(1)), (integer(1), integer(2))];
        assert!(interpolate(&dup).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(ssyt_count_polynomial(&p("2")).to_string(), "1/2N^2 + 1/2N");
        assert_eq!(Polynomial::zero().to_string(), "0");
    }
}
