//! Closed formulas for the generalized Catalan family and the alternative
//! evaluation routes (two recursions, product forms, ballot probability).
//!
//! Scaled formulas are evaluated over exact rationals and converted back with
//! [`expect_integer`], so a transcription slip shows up as an error rather
//! than a truncated count.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{domain, Result};
use crate::numeric::{binomial, expect_integer, rat, ratio, ExactInt, ExactRational};
use crate::paths::{count_paths, Constraint, Point};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyKind {
    /// Paths from `(0,-2m)` to `(n-m,n-m)` that never cross `y = x`.
    C,
    /// As `C`, starting one unit lower at `(0,-2m-1)`.
    Cbar,
    /// Paths from `(0,-2m)` staying strictly below `y = x` until the end.
    D,
    /// As `D`, starting at `(0,-2m-1)`.
    Dbar,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 4] = [FamilyKind::C, FamilyKind::Cbar, FamilyKind::D, FamilyKind::Dbar];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::C => "C",
            FamilyKind::Cbar => "Cbar",
            FamilyKind::D => "D",
            FamilyKind::Dbar => "Dbar",
        }
    }

    /// Start point, end point and constraint of the defining path set.
    pub fn path_model(self, n: i64, m: i64) -> (Point, Point, Constraint) {
        let end = Point::new(n - m, n - m);
        match self {
            FamilyKind::C => (Point::new(0, -2 * m), end, Constraint::NoCross(0)),
            FamilyKind::Cbar => (Point::new(0, -2 * m - 1), end, Constraint::NoCross(0)),
            FamilyKind::D => (Point::new(0, -2 * m), end, Constraint::StrictlyBelowUntilEnd(0)),
            FamilyKind::Dbar => (
                Point::new(0, -2 * m - 1),
                end,
                Constraint::StrictlyBelowUntilEnd(0),
            ),
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "C" | "c" => Ok(FamilyKind::C),
            "Cbar" | "cbar" | "CBAR" => Ok(FamilyKind::Cbar),
            "D" | "d" => Ok(FamilyKind::D),
            "Dbar" | "dbar" | "DBAR" => Ok(FamilyKind::Dbar),
            other => Err(format!("unknown family kind `{other}` (expected C, Cbar, D or Dbar)")),
        }
    }
}

/// A family member together with its parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalanValue {
    pub kind: FamilyKind,
    pub n: i64,
    pub m: i64,
    pub value: ExactInt,
}

impl CatalanValue {
    pub fn compute(kind: FamilyKind, n: i64, m: i64) -> Result<Self> {
        Ok(CatalanValue { kind, n, m, value: catalan_family(kind, n, m)? })
    }
}

fn check_triangle(n: i64, m: i64) -> Result<()> {
    if n < 0 || m < 0 {
        return domain(format!("need 0 <= m <= n, got n={n}, m={m} (negative index)"));
    }
    if m > n {
        return domain(format!("need m <= n, got n={n}, m={m}"));
    }
    Ok(())
}

/// Closed formula for a family member, `0 <= m <= n`.
pub fn catalan_family(kind: FamilyKind, n: i64, m: i64) -> Result<ExactInt> {
    check_triangle(n, m)?;
    let value = match kind {
        FamilyKind::C | FamilyKind::Dbar => ratio(2 * m + 1, n + m + 1) * rat(binomial(2 * n, n + m)),
        FamilyKind::Cbar => ratio(2 * m + 2, n + m + 2) * rat(binomial(2 * n + 1, n - m)),
        FamilyKind::D => {
            if n == 0 {
                // empty path; 2m/(n+m) is 0/0 here
                return Ok(ExactInt::one());
            }
            ratio(2 * m, n + m) * rat(binomial(2 * n - 1, n - m))
        }
    };
    expect_integer(value, "catalan_family")
}

/// Shorthand for `C(n, m)` inside the crate, where callers have already
/// established `0 <= m <= n`.
pub(crate) fn c(n: i64, m: i64) -> ExactInt {
    catalan_family(FamilyKind::C, n, m).expect("indices checked by caller")
}

pub(crate) fn d(n: i64, m: i64) -> ExactInt {
    catalan_family(FamilyKind::D, n, m).expect("indices checked by caller")
}

/// Count the defining path set directly (dynamic-programming oracle).
pub fn catalan_family_by_paths(kind: FamilyKind, n: i64, m: i64) -> Result<ExactInt> {
    check_triangle(n, m)?;
    let (start, end, constraint) = kind.path_model(n, m);
    Ok(count_paths(start, end, constraint))
}

/// Probability that the leader stays at least `2m` votes ahead throughout the
/// count, with `n+m` votes against `n-m`.
pub fn ballot_probability(n: i64, m: i64) -> Result<ExactRational> {
    check_triangle(n, m)?;
    Ok(ratio(2 * m + 1, n + m + 1))
}

/// `C(n,m)` by the last-touch recursion
/// `C(n,m) = n(2m+1)/((n-m)(m+1)) * sum_{k<n-m} C(k+m,m) C(n-m-k-1,0)`,
/// building every lower value from the recursion itself with `C(j,j) = 1`.
pub fn c_via_product_recursion(n: i64, m: i64) -> Result<ExactInt> {
    check_triangle(n, m)?;
    if m >= n {
        return domain(format!("the product recursion needs m < n, got n={n}, m={m}"));
    }
    let size = n as usize + 1;
    // table[j][i] = C(j, i) for 0 <= i <= j
    let mut table: Vec<Vec<ExactInt>> = Vec::with_capacity(size);
    for j in 0..=n {
        let mut row = vec![ExactInt::zero(); j as usize + 1];
        row[j as usize] = ExactInt::one();
        for i in 0..j {
            let sum: ExactInt = (0..j - i)
                .map(|k| &table[(k + i) as usize][i as usize] * &table[(j - i - k - 1) as usize][0])
                .sum();
            let scaled = ratio(j * (2 * i + 1), (j - i) * (i + 1)) * rat(sum);
            row[i as usize] = expect_integer(scaled, "c_via_product_recursion")?;
        }
        table.push(row);
    }
    Ok(table[n as usize][m as usize].clone())
}

/// `C(n,m)` for `1 <= m <= n` by the weighted recursion
/// `C(n,m) = m/(2m+1) * sum_{k=m}^{n} (k+m+1)/k * C(k,m) C(n-k,0)`.
///
/// The `k = n` term contains `C(n,m)` itself; moving it to the left leaves the
/// factor `(n-m)(m+1)/((2m+1)n)`, so
/// `C(n,m) = m n / ((n-m)(m+1)) * sum_{k=m}^{n-1} (k+m+1)/k * C(k,m) C(n-k,0)`.
/// At `n = m` the relation is a tautology and `C(m,m) = 1` is the base case.
/// Values `C(k,m)` for `k < n` come from the recursion; the classical factors
/// `C(j,0)` come from the closed formula.
pub fn c_via_weighted_recursion(n: i64, m: i64) -> Result<ExactInt> {
    check_triangle(n, m)?;
    if m < 1 {
        return domain(format!("the weighted recursion needs m >= 1, got m={m}"));
    }
    let classical: Vec<ExactInt> = (0..=n - m).map(|j| c(j, 0)).collect();
    // column[k - m] = C(k, m)
    let mut column = vec![ExactInt::one()];
    for top in m + 1..=n {
        let sum: ExactRational = (m..top)
            .map(|k| {
                ratio(k + m + 1, k) * rat(&column[(k - m) as usize] * &classical[(top - k) as usize])
            })
            .sum();
        let value = ratio(m * top, (top - m) * (m + 1)) * sum;
        column.push(expect_integer(value, "c_via_weighted_recursion")?);
    }
    Ok(column.pop().expect("column starts non-empty"))
}

/// Which central binomial expression [`central_binomial_via`] evaluates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CentralBinomialRoute {
    /// From the last-touch recursion; valid for `0 <= m < n`.
    ProductRecursion,
    /// From the weighted recursion; valid for `1 <= m <= n`.
    WeightedRecursion,
}

/// `binom(2n, n)` expressed through a convolution of family values.
pub fn central_binomial_via(n: i64, m: i64, route: CentralBinomialRoute) -> Result<ExactInt> {
    check_triangle(n, m)?;
    let value = match route {
        CentralBinomialRoute::ProductRecursion => {
            if m >= n {
                return domain(format!("this route needs m < n, got n={n}, m={m}"));
            }
            let prefactor = ratio(n + m + 1, m + 1);
            let product: ExactRational = (0..=m).map(|k| ratio(n + k, n - k)).product();
            let sum: ExactInt = (0..n - m).map(|k| c(k + m, m) * c(n - m - k - 1, 0)).sum();
            prefactor * product * rat(sum)
        }
        CentralBinomialRoute::WeightedRecursion => {
            if m < 1 {
                return domain(format!("this route needs m >= 1, got m={m}"));
            }
            // m(n-m)/(2m+1)^2 * prod_{k=1}^{m+1} (n+k)/(n-k+1), with the
            // k = m+1 factor (n+m+1)/(n-m) cancelled against (n-m) so that
            // m = n stays defined.
            let prefactor = ratio(m * (n + m + 1), (2 * m + 1) * (2 * m + 1));
            let product: ExactRational = (1..=m).map(|k| ratio(n + k, n - k + 1)).product();
            let sum: ExactRational = (m..=n)
                .map(|k| ratio(k + m + 1, k) * rat(c(k, m) * c(n - k, 0)))
                .sum();
            prefactor * product * sum
        }
    };
    expect_integer(value, "central_binomial_via")
}

/// Product form of `sum_{k=0}^{n-m-1} C(k+m,m) C(n-m-k-1,0)` for `1 <= m < n`:
/// `(prod_{k=1}^{m} (n-k)/k) * (prod_{k=m+2}^{n} (n+k)/k)`.
pub fn convolution_closed_form(n: i64, m: i64) -> Result<ExactInt> {
    if m < 1 || m >= n {
        return domain(format!("need 1 <= m < n, got n={n}, m={m}"));
    }
    let left: ExactRational = (1..=m).map(|k| ratio(n - k, k)).product();
    let right: ExactRational = (m + 2..=n).map(|k| ratio(n + k, k)).product();
    expect_integer(left * right, "convolution_closed_form")
}

/// `C(n+m, m)` for `1 <= m <= n` from the product expansion
/// `(n+m)(2m+1)/(n(m+1)) * prod_{k=1}^{m} (n+m-k)/k * prod_{k=m+2}^{n+m} (n+m+k)/k`.
pub fn c_closed_product(n: i64, m: i64) -> Result<ExactInt> {
    if m < 1 || m > n {
        return domain(format!("need 1 <= m <= n, got n={n}, m={m}"));
    }
    let s = n + m;
    let prefactor = ratio(s * (2 * m + 1), n * (m + 1));
    let left: ExactRational = (1..=m).map(|k| ratio(s - k, k)).product();
    let right: ExactRational = (m + 2..=s).map(|k| ratio(s + k, k)).product();
    expect_integer(prefactor * left * right, "c_closed_product")
}

/// Direct convolution `sum_{k=0}^{n-m-1} C(k+m,m) C(n-m-k-1,0)`.
pub fn convolution_sum(n: i64, m: i64) -> Result<ExactInt> {
    if m < 0 || m >= n {
        return domain(format!("need 0 <= m < n, got n={n}, m={m}"));
    }
    Ok((0..n - m).map(|k| c(k + m, m) * c(n - m - k - 1, 0)).sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::numeric::int;

    #[test]
    fn family_examples() {
        assert_eq!(catalan_family(FamilyKind::C, 4, 0).unwrap(), int(14));
        assert_eq!(catalan_family(FamilyKind::C, 3, 1).unwrap(), int(9));
        assert_eq!(catalan_family(FamilyKind::D, 3, 1).unwrap(), int(5));
        assert_eq!(catalan_family(FamilyKind::Cbar, 1, 0).unwrap(), int(2));
        assert_eq!(catalan_family(FamilyKind::C, 4, 2).unwrap(), int(20));
        for n in 0..20 {
            assert_eq!(catalan_family(FamilyKind::C, n, n).unwrap(), int(1));
        }
        assert_eq!(catalan_family(FamilyKind::D, 0, 0).unwrap(), int(1));
        assert_eq!(catalan_family(FamilyKind::D, 5, 0).unwrap(), int(0));
    }

    #[test]
    fn family_domain() {
        for (n, m) in [(1, 2), (-1, 0), (3, -1)] {
            for kind in FamilyKind::ALL {
                assert!(matches!(catalan_family(kind, n, m), Err(Error::Domain(_))));
            }
        }
    }

    #[test]
    fn family_positivity() {
        for n in 0..=25 {
            for m in 0..=n {
                for kind in [FamilyKind::C, FamilyKind::Cbar, FamilyKind::Dbar] {
                    assert!(catalan_family(kind, n, m).unwrap() > int(0));
                }
                let dv = catalan_family(FamilyKind::D, n, m).unwrap();
                assert_eq!(dv == int(0), m == 0 && n >= 1);
            }
        }
    }

    #[test]
    fn variant_relations() {
        for n in 0..=30 {
            for m in 0..=n {
                assert_eq!(
                    catalan_family(FamilyKind::Cbar, n, m).unwrap(),
                    catalan_family(FamilyKind::D, n + 1, m + 1).unwrap()
                );
                assert_eq!(
                    catalan_family(FamilyKind::Dbar, n, m).unwrap(),
                    catalan_family(FamilyKind::C, n, m).unwrap()
                );
                if m >= 1 {
                    assert_eq!(d(n, m) * int(n * (2 * m + 1)), int(m * (n + m + 1)) * c(n, m));
                }
            }
        }
    }

    #[test]
    fn ballot() {
        assert_eq!(ballot_probability(3, 1).unwrap(), ratio(3, 5));
        assert_eq!(ballot_probability(7, 7).unwrap(), ratio(1, 1));
        assert_eq!(ballot_probability(100, 0).unwrap(), ratio(1, 101));
        assert_eq!(rat(c(3, 1)) / rat(binomial(6, 4)), ratio(3, 5));
        assert!(ballot_probability(1, 2).is_err());
    }

    #[test]
    fn recursion_examples() {
        assert_eq!(c_via_product_recursion(1, 0).unwrap(), int(1));
        assert_eq!(c_via_product_recursion(3, 1).unwrap(), int(9));
        assert_eq!(c_via_product_recursion(5, 0).unwrap(), int(42));
        assert!(c_via_product_recursion(3, 3).is_err());

        assert_eq!(c_via_weighted_recursion(1, 1).unwrap(), int(1));
        assert_eq!(c_via_weighted_recursion(3, 1).unwrap(), int(9));
        assert_eq!(c_via_weighted_recursion(4, 2).unwrap(), int(20));
        assert!(c_via_weighted_recursion(3, 0).is_err());
        assert!(c_via_weighted_recursion(3, 4).is_err());
    }

    #[test]
    fn central_binomial_examples() {
        use CentralBinomialRoute::*;
        assert_eq!(central_binomial_via(3, 1, ProductRecursion).unwrap(), int(20));
        assert_eq!(central_binomial_via(3, 1, WeightedRecursion).unwrap(), int(20));
        assert_eq!(central_binomial_via(2, 0, ProductRecursion).unwrap(), int(6));
        assert_eq!(central_binomial_via(4, 4, WeightedRecursion).unwrap(), int(70));
        assert!(central_binomial_via(3, 3, ProductRecursion).is_err());
        assert!(central_binomial_via(3, 0, WeightedRecursion).is_err());
    }

    #[test]
    fn product_forms() {
        assert_eq!(convolution_closed_form(2, 1).unwrap(), int(1));
        assert_eq!(convolution_closed_form(3, 1).unwrap(), int(4));
        // C(1,1)C(2,0) + C(2,1)C(1,0) + C(3,1)C(0,0) = 2 + 3 + 9
        assert_eq!(convolution_closed_form(4, 1).unwrap(), int(14));
        assert_eq!(convolution_sum(4, 1).unwrap(), int(14));
        assert!(convolution_closed_form(3, 3).is_err());
        assert!(convolution_closed_form(3, 0).is_err());

        assert_eq!(c_closed_product(2, 1).unwrap(), int(9));
        assert_eq!(c_closed_product(1, 1).unwrap(), int(3));
        assert_eq!(c_closed_product(2, 2).unwrap(), int(20));
        assert!(c_closed_product(1, 2).is_err());
    }

    #[test]
    fn parse_kind() {
        assert_eq!("Cbar".parse::<FamilyKind>().unwrap(), FamilyKind::Cbar);
        assert!("E".parse::<FamilyKind>().is_err());
    }
}
