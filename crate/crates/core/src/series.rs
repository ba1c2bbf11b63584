//! Truncated formal power series over exact rationals, and the Catalan
//! generating functions built on them.
//!
//! A series carries an inclusive truncation order. Binary operations return
//! the smaller of the two orders; nothing is ever extended past what the
//! inputs determine.

use std::fmt;
use std::ops::Mul;

use num_traits::{One, Signed, Zero};

use crate::error::{domain, Error, Result};
use crate::family::c;
use crate::numeric::{rat, ratio, ExactInt, ExactRational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    // len == order + 1
    coeffs: Vec<ExactRational>,
}

impl TruncatedSeries {
    /// Series with the given coefficients; the order is `coeffs.len() - 1`.
    /// Panics on an empty slice.
    pub fn new(coeffs: Vec<ExactRational>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series needs at least one coefficient");
        TruncatedSeries { coeffs }
    }

    pub fn from_integers<I, T>(order: usize, coeffs: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<ExactInt>,
    {
        let mut v: Vec<ExactRational> = coeffs.into_iter().map(|c| rat(c.into())).take(order + 1).collect();
        v.resize(order + 1, ExactRational::zero());
        TruncatedSeries::new(v)
    }

    pub fn zero(order: usize) -> Self {
        TruncatedSeries::new(vec![ExactRational::zero(); order + 1])
    }

    pub fn one(order: usize) -> Self {
        let mut s = TruncatedSeries::zero(order);
        s.coeffs[0] = ExactRational::one();
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[ExactRational] {
        &self.coeffs
    }

    /// Coefficient of `x^n`; `None` beyond the truncation order.
    pub fn coeff(&self, n: usize) -> Option<&ExactRational> {
        self.coeffs.get(n)
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a truncated series");
        TruncatedSeries::new(self.coeffs[..=order].to_vec())
    }

    /// Integer coefficients, or `None` if any coefficient is fractional.
    pub fn integer_coeffs(&self) -> Option<Vec<ExactInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    pub fn sub(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        TruncatedSeries::new((0..=order).map(|i| &self.coeffs[i] - &other.coeffs[i]).collect())
    }

    pub fn scale(&self, factor: &ExactRational) -> Self {
        TruncatedSeries::new(self.coeffs.iter().map(|c| c * factor).collect())
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        series_mul(self, rhs)
    }
}

/// Sparse `coeff*x^n` rendering, zero terms omitted.
impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "{}*x^{}", c.abs(), n)?;
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(x^{})", self.order() + 1)
    }
}

/// Cauchy product, truncated to the smaller order.
pub fn series_mul(a: &TruncatedSeries, b: &TruncatedSeries) -> TruncatedSeries {
    let order = a.order().min(b.order());
    let mut out = vec![ExactRational::zero(); order + 1];
    for (i, ai) in a.coeffs[..=order].iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.coeffs[..=order - i].iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    TruncatedSeries::new(out)
}

/// `a^e` by repeated squaring.
pub fn series_pow(a: &TruncatedSeries, e: u32) -> TruncatedSeries {
    let mut result = TruncatedSeries::one(a.order());
    let mut base = a.clone();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            result = series_mul(&result, &base);
        }
        e >>= 1;
        if e > 0 {
            base = series_mul(&base, &base);
        }
    }
    result
}

/// Multiplicative inverse through the truncation order.
pub fn series_invert(a: &TruncatedSeries) -> Result<TruncatedSeries> {
    let a0 = &a.coeffs[0];
    if a0.is_zero() {
        return Err(Error::NotInvertible);
    }
    let inv0 = a0.recip();
    let mut out: Vec<ExactRational> = Vec::with_capacity(a.coeffs.len());
    out.push(inv0.clone());
    for n in 1..=a.order() {
        let acc: ExactRational = (1..=n).map(|i| &a.coeffs[i] * &out[n - i]).sum();
        out.push(-acc * &inv0);
    }
    Ok(TruncatedSeries::new(out))
}

/// Square root with constant term `+1`, for a series with constant term 1.
pub fn series_sqrt_of(a: &TruncatedSeries) -> Result<TruncatedSeries> {
    if !a.coeffs[0].is_one() {
        return Err(Error::BadConstantTerm);
    }
    let half = ratio(1, 2);
    let mut out: Vec<ExactRational> = Vec::with_capacity(a.coeffs.len());
    out.push(ExactRational::one());
    for n in 1..=a.order() {
        let cross: ExactRational = (1..n).map(|i| &out[i] * &out[n - i]).sum();
        out.push((&a.coeffs[n] - cross) * &half);
    }
    Ok(TruncatedSeries::new(out))
}

/// Classical Catalan series `sum C(n,0) x^n`.
pub fn gamma0(order: usize) -> TruncatedSeries {
    TruncatedSeries::from_integers(order, (0..=order as i64).map(|n| c(n, 0)))
}

/// `(1 - sqrt(1 - 4x)) / (2x)` expanded exactly: with `s = sqrt(1 - 4x)`
/// known through `order + 1`, the coefficient of `x^n` is `-s_{n+1} / 2`.
pub fn gamma0_from_radical(order: usize) -> TruncatedSeries {
    let mut base = TruncatedSeries::zero(order + 1);
    base.coeffs[0] = ExactRational::one();
    base.coeffs[1] = rat(-4);
    let s = series_sqrt_of(&base).expect("constant term is 1");
    TruncatedSeries::new(s.coeffs[1..].iter().map(|c| -c * ratio(1, 2)).collect())
}

/// `sum_n C(n+m, m) x^n`, computed as `gamma0^(2m+1)`.
pub fn gamma_m(m: u32, order: usize) -> TruncatedSeries {
    series_pow(&gamma0(order), 2 * m + 1)
}

/// `theta_m(x) = sum_n (n+1)(m+1)/((n+m+1)(2m+1)) C(n+m+1, m) x^n`, from its
/// coefficient formula.
pub fn theta(m: u32, order: usize) -> TruncatedSeries {
    let m = i64::from(m);
    TruncatedSeries::new(
        (0..=order as i64)
            .map(|n| ratio((n + 1) * (m + 1), (n + m + 1) * (2 * m + 1)) * rat(c(n + m + 1, m)))
            .collect(),
    )
}

/// The series `1 + sum_{n>=1} (prod_{k=1}^{m} (n+m-k+1)/k)
/// (prod_{k=m+2}^{n+m+1} (n+m+k+1)/k) x^n`, which equals `gamma_m * gamma0`.
pub fn gamma_product_form(m: u32, order: usize) -> Result<TruncatedSeries> {
    if m < 1 {
        return domain("the product form needs m >= 1");
    }
    let m = i64::from(m);
    let mut coeffs = vec![ExactRational::one()];
    for n in 1..=order as i64 {
        let left: ExactRational = (1..=m).map(|k| ratio(n + m - k + 1, k)).product();
        let right: ExactRational = (m + 2..=n + m + 1).map(|k| ratio(n + m + k + 1, k)).product();
        coeffs.push(left * right);
    }
    Ok(TruncatedSeries::new(coeffs))
}

/// Bivariate truncated series; `coeff(i, j)` multiplies `x^i y^j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BivariateSeries {
    order_x: usize,
    order_y: usize,
    // columns[j] is the x-series multiplying y^j
    columns: Vec<TruncatedSeries>,
}

impl BivariateSeries {
    pub fn order_x(&self) -> usize {
        self.order_x
    }

    pub fn order_y(&self) -> usize {
        self.order_y
    }

    pub fn coeff(&self, i: usize, j: usize) -> Option<&ExactRational> {
        self.columns.get(j)?.coeff(i)
    }

    /// The x-series multiplying `y^j`.
    pub fn y_coefficient(&self, j: usize) -> Option<&TruncatedSeries> {
        self.columns.get(j)
    }

    /// Row-major grid indexed `[i][j]`.
    pub fn grid(&self) -> Vec<Vec<ExactRational>> {
        (0..=self.order_x)
            .map(|i| self.columns.iter().map(|col| col.coeffs[i].clone()).collect())
            .collect()
    }
}

/// `gamma0(x) / (1 - y gamma0(x)^2)` expanded as `sum_j y^j gamma0^(2j+1)`,
/// which is exact through `y^order_y`.
pub fn big_gamma(order_x: usize, order_y: usize) -> BivariateSeries {
    let g = gamma0(order_x);
    let g2 = series_mul(&g, &g);
    let mut columns = Vec::with_capacity(order_y + 1);
    let mut current = g;
    for _ in 0..=order_y {
        let next = series_mul(&current, &g2);
        columns.push(std::mem::replace(&mut current, next));
    }
    BivariateSeries { order_x, order_y, columns }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::int;
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> TruncatedSeries {
        TruncatedSeries::from_integers(v.len() - 1, v.iter().copied())
    }

    #[test]
    fn mul_examples() {
        assert_eq!(series_mul(&ints(&[1, 1, 0]), &ints(&[1, 1, 0])), ints(&[1, 2, 1]));
        assert_eq!(series_mul(&gamma0(2), &gamma0(2)), ints(&[1, 2, 5]));
        let a = ints(&[3, -1, 4, 1]);
        assert_eq!(series_mul(&a, &TruncatedSeries::one(3)), a);
        assert_eq!(series_mul(&a, &TruncatedSeries::one(1)).order(), 1);
    }

    #[test]
    fn pow_examples() {
        assert_eq!(series_pow(&ints(&[5, 7, 2]), 0), TruncatedSeries::one(2));
        assert_eq!(series_pow(&ints(&[1, 1, 0, 0]), 3), ints(&[1, 3, 3, 1]));
        assert_eq!(series_pow(&gamma0(3), 3).coeff(1), Some(&rat(3)));
    }

    #[test]
    fn invert_examples() {
        let geo = series_invert(&ints(&[1, -1, 0, 0, 0])).unwrap();
        assert_eq!(geo, ints(&[1, 1, 1, 1, 1]));
        assert_eq!(series_invert(&ints(&[0, 1])), Err(Error::NotInvertible));
        let g = gamma0(20);
        assert_eq!(series_mul(&series_invert(&g).unwrap(), &g), TruncatedSeries::one(20));
        let a = ints(&[2, 3, -1, 5]);
        assert_eq!(series_invert(&series_invert(&a).unwrap()).unwrap(), a);
    }

    #[test]
    fn sqrt_examples() {
        assert_eq!(series_sqrt_of(&TruncatedSeries::one(4)).unwrap(), TruncatedSeries::one(4));
        let s = series_sqrt_of(&ints(&[1, -4, 0, 0, 0, 0])).unwrap();
        assert_eq!(s, ints(&[1, -2, -2, -4, -10, -28]));
        assert_eq!(series_mul(&s, &s), ints(&[1, -4, 0, 0, 0, 0]));
        assert_eq!(series_sqrt_of(&ints(&[1, 2, 1, 0])).unwrap(), ints(&[1, 1, 0, 0]));
        assert_eq!(series_sqrt_of(&ints(&[4, 1])), Err(Error::BadConstantTerm));
    }

    #[test]
    fn gamma0_examples() {
        assert_eq!(gamma0(4), ints(&[1, 1, 2, 5, 14]));
        assert_eq!(gamma0(10).coeff(10), Some(&rat(16796)));
        assert_eq!(gamma0_from_radical(24), gamma0(24));
    }

    #[test]
    fn functional_equation() {
        // gamma0 = 1 + x gamma0^2
        let g = gamma0(24);
        let sq = series_mul(&g, &g);
        let mut rhs = vec![rat(1)];
        rhs.extend(sq.coeffs()[..24].iter().cloned());
        assert_eq!(g, TruncatedSeries::new(rhs));
    }

    #[test]
    fn gamma_m_examples() {
        assert_eq!(gamma_m(0, 8), gamma0(8));
        assert_eq!(gamma_m(1, 3).coeff(1), Some(&rat(3)));
        assert_eq!(gamma_m(2, 3).coeff(0), Some(&rat(1)));
        for m in 0..=6u32 {
            let step = series_mul(&gamma_m(m, 16), &series_pow(&gamma0(16), 2));
            assert_eq!(gamma_m(m + 1, 16), step);
        }
    }

    #[test]
    fn theta_examples() {
        assert_eq!(theta(0, 3), ints(&[1, 2, 5, 14]));
        assert_eq!(theta(1, 1), ints(&[1, 4]));
    }

    #[test]
    fn product_form_examples() {
        assert_eq!(gamma_product_form(1, 2).unwrap(), ints(&[1, 4, 14]));
        assert!(gamma_product_form(0, 2).is_err());
    }

    #[test]
    fn big_gamma_examples() {
        let g = big_gamma(4, 2);
        assert_eq!(g.coeff(0, 0), Some(&rat(1)));
        assert_eq!(g.coeff(1, 1), Some(&rat(3)));
        let row: Vec<_> = (0..=4).map(|i| g.coeff(i, 0).unwrap().clone()).collect();
        assert_eq!(row, ints(&[1, 1, 2, 5, 14]).coeffs());
        assert_eq!(g.coeff(5, 0), None);
        assert_eq!(g.coeff(0, 3), None);
    }

    #[test]
    fn display_is_sparse() {
        assert_eq!(ints(&[1, 0, -2, 3]).to_string(), "1*x^0 - 2*x^2 + 3*x^3 + O(x^4)");
        assert_eq!(TruncatedSeries::zero(1).to_string(), "0 + O(x^2)");
    }

    #[test]
    fn integer_coeffs() {
        assert_eq!(gamma0(3).integer_coeffs(), Some(vec![int(1), int(1), int(2), int(5)]));
        assert_eq!(TruncatedSeries::new(vec![ratio(1, 2)]).integer_coeffs(), None);
    }

    fn arb_series() -> impl Strategy<Value = TruncatedSeries> {
        prop::collection::vec((-20i64..20, 1i64..6), 1..9)
            .prop_map(|v| TruncatedSeries::new(v.into_iter().map(|(p, q)| ratio(p, q)).collect()))
    }

    proptest! {
        #[test]
        fn invert_roundtrip(mut a in arb_series(), c0 in 1i64..5) {
            a.coeffs[0] = rat(c0);
            let inv = series_invert(&a).unwrap();
            prop_assert_eq!(series_mul(&a, &inv), TruncatedSeries::one(a.order()));
        }

        #[test]
        fn sqrt_roundtrip(mut a in arb_series()) {
            a.coeffs[0] = rat(1);
            let b = series_sqrt_of(&a).unwrap();
            prop_assert_eq!(series_mul(&b, &b), a);
        }

        #[test]
        fn mul_commutes(a in arb_series(), b in arb_series()) {
            prop_assert_eq!(series_mul(&a, &b), series_mul(&b, &a));
        }
    }
}
