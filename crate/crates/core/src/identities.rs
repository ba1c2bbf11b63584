//! Registry of summation identities with exact two-sided evaluation, range
//! sweeps and the exploratory sweep of the first-touch identity beyond its
//! proven range of `k`.
//!
//! Each side is evaluated on its own from binomials and family values; no
//! side calls the other or shares a simplification with it.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{domain, Result};
use crate::family::{c, d};
use crate::numeric::{binomial, binomial_falling, rat, ratio, ExactInt, ExactRational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityId {
    /// Bad paths split just before their first crossing.
    Cor4_1,
    /// First-touch decomposition written with binomials, `1 <= m <= n-1`.
    Cor4_2,
    /// Rewritten form of `Cor4_1` summed over `m <= k <= n`.
    Transformed,
    /// Decomposition at the first touch of `y = x - 2m + k`.
    Cor4_4,
    /// `C(n,m) = sum_k D(k+m,m) C(n-m-k,0)`.
    Decomp,
    /// Last-touch convolution against its product form.
    Convolution,
    /// `C(n+m+1,m+1) = sum_{a+b+c=n} C(a+m,m) C(b,0) C(c,0)`.
    Lemma6_2,
}

impl IdentityId {
    pub const ALL: [IdentityId; 7] = [
        IdentityId::Cor4_1,
        IdentityId::Cor4_2,
        IdentityId::Transformed,
        IdentityId::Cor4_4,
        IdentityId::Decomp,
        IdentityId::Convolution,
        IdentityId::Lemma6_2,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            IdentityId::Cor4_1 => "ID_COR4_1",
            IdentityId::Cor4_2 => "ID_COR4_2",
            IdentityId::Transformed => "ID_TRANSFORMED",
            IdentityId::Cor4_4 => "ID_COR4_4",
            IdentityId::Decomp => "ID_DECOMP",
            IdentityId::Convolution => "ID_CONVOLUTION",
            IdentityId::Lemma6_2 => "ID_LEMMA6_2",
        }
    }

    /// Whether `params` lies in the domain where the identity is claimed.
    pub fn admits(self, p: &Params) -> bool {
        let Params { n, m, k } = *p;
        let base = match self {
            IdentityId::Cor4_1 => 0 <= m && m < n,
            IdentityId::Cor4_2 => 1 <= m && m < n,
            IdentityId::Transformed | IdentityId::Decomp | IdentityId::Lemma6_2 => 0 <= m && m <= n,
            IdentityId::Cor4_4 => 0 <= m && m < n,
            IdentityId::Convolution => 1 <= m && m < n,
        };
        let k_ok = match (self, k) {
            (IdentityId::Cor4_4, Some(k)) => 1 <= k && k <= 2 * m,
            (IdentityId::Cor4_4, None) => false,
            (_, k) => k.is_none(),
        };
        base && k_ok
    }

    /// Every admissible tuple with `n <= n_max`, ordered by `(n, m, k)`.
    pub fn grid(self, n_max: i64) -> Vec<Params> {
        let mut out = Vec::new();
        for n in 0..=n_max {
            for m in 0..=n {
                if self == IdentityId::Cor4_4 {
                    for k in 1..=2 * m {
                        out.push(Params::with_k(n, m, k));
                    }
                } else {
                    out.push(Params::new(n, m));
                }
            }
        }
        out.retain(|p| self.admits(p));
        out
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for IdentityId {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let upper = s.to_ascii_uppercase();
        let tag = if upper.starts_with("ID_") { upper } else { format!("ID_{upper}") };
        IdentityId::ALL
            .into_iter()
            .find(|id| id.tag() == tag)
            .ok_or_else(|| format!("unknown identity `{s}`"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Params {
    pub n: i64,
    pub m: i64,
    pub k: Option<i64>,
}

impl Params {
    pub const fn new(n: i64, m: i64) -> Self {
        Params { n, m, k: None }
    }

    pub const fn with_k(n: i64, m: i64, k: i64) -> Self {
        Params { n, m, k: Some(k) }
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={},m={}", self.n, self.m)?;
        if let Some(k) = self.k {
            write!(f, ",k={k}")?;
        }
        Ok(())
    }
}

/// Whether a tuple lies where the identity is proven or only observed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Regime {
    Proven,
    Conjectural,
}

impl Regime {
    pub fn name(self) -> &'static str {
        match self {
            Regime::Proven => "proven",
            Regime::Conjectural => "conjectural",
        }
    }
}

/// Both sides of an identity at one parameter tuple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Evaluation {
    pub params: Params,
    pub lhs: ExactRational,
    pub rhs: ExactRational,
    pub regime: Regime,
}

impl Evaluation {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

#[derive(Debug, Clone)]
pub struct IdentityReport {
    pub id: IdentityId,
    pub params_checked: usize,
    /// Tuples where the sides differ, in parameter order.
    pub failures: Vec<Evaluation>,
    pub elapsed: Duration,
    /// Every evaluated tuple; filled only by [`conjecture_sweep`].
    pub evidence: Vec<Evaluation>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn failures_in(&self, regime: Regime) -> impl Iterator<Item = &Evaluation> {
        self.failures.iter().filter(move |e| e.regime == regime)
    }

    pub fn checked_in(&self, regime: Regime) -> usize {
        self.evidence.iter().filter(|e| e.regime == regime).count()
    }
}

/// Evaluate `(LHS, RHS)` of `id` at `params`.
pub fn evaluate_sides(id: IdentityId, params: Params) -> Result<(ExactRational, ExactRational)> {
    if !id.admits(&params) {
        return domain(format!("{params} is outside the domain of {id}"));
    }
    let Params { n, m, k } = params;
    Ok(match id {
        IdentityId::Cor4_1 => (cor4_1_lhs(n, m), cor4_1_rhs(n, m)),
        IdentityId::Cor4_2 => (cor4_2_lhs(n, m), cor4_2_rhs(n, m)),
        IdentityId::Transformed => (transformed_lhs(n, m), transformed_rhs(n, m)),
        IdentityId::Cor4_4 => {
            let k = k.expect("admits() requires k");
            (first_touch_lhs(n, m, k), first_touch_rhs(n, m))
        }
        IdentityId::Decomp => (decomp_lhs(n, m), decomp_rhs(n, m)),
        IdentityId::Convolution => (convolution_lhs(n, m), convolution_rhs(n, m)),
        IdentityId::Lemma6_2 => (lemma6_2_lhs(n, m), lemma6_2_rhs(n, m)),
    })
}

fn cor4_1_lhs(n: i64, m: i64) -> ExactRational {
    (m..n)
        .map(|k| ratio(1, 2 * k + 1) * rat(binomial(2 * k + 1, k - m) * binomial(2 * (n - k), n - k)))
        .sum()
}

fn cor4_1_rhs(n: i64, m: i64) -> ExactRational {
    ratio(2, 2 * m + 1) * rat(binomial(2 * n, n - m - 1))
}

fn cor4_2_lhs(n: i64, m: i64) -> ExactRational {
    (m..=n)
        .map(|k| ratio(1, k * (n - k + 1)) * rat(binomial(2 * k, k - m) * binomial(2 * (n - k), n - k)))
        .sum()
}

fn cor4_2_rhs(n: i64, m: i64) -> ExactRational {
    ratio(2 * m + 1, m * (n + m + 1)) * rat(binomial(2 * n, n - m))
}

fn transformed_lhs(n: i64, m: i64) -> ExactRational {
    (m..=n)
        .map(|k| {
            ratio(2 * n - 2 * k + 1, (k + m + 1) * (n - k + 1))
                * rat(binomial(2 * k, k - m) * binomial(2 * (n - k), n - k))
        })
        .sum()
}

fn transformed_rhs(n: i64, m: i64) -> ExactRational {
    ratio(
        (2 * n + 1) * (2 * n + 2),
        (2 * m + 1) * (n + m + 1) * (n + m + 2),
    ) * rat(binomial(2 * n, n - m))
}

/// Left side of the first-touch identity,
/// `sum_{h=0}^{n-m} k/(h+k) binom(2h+k-1,h) binom(2n-2h-k,n-m-h)`.
///
/// When `k > 2m` the upper index `2n-2h-k` can go negative; those factors use
/// the falling-factorial binomial. For `k <= 2m` it never does.
fn first_touch_lhs(n: i64, m: i64, k: i64) -> ExactRational {
    (0..=n - m)
        .map(|h| {
            let upper = 2 * n - 2 * h - k;
            let tail = if upper < 0 {
                binomial_falling(upper, n - m - h).expect("n - m - h >= 0")
            } else {
                binomial(upper, n - m - h)
            };
            ratio(k, h + k) * rat(binomial(2 * h + k - 1, h) * tail)
        })
        .sum()
}

fn first_touch_rhs(n: i64, m: i64) -> ExactRational {
    rat(binomial(2 * n, n - m))
}

fn decomp_lhs(n: i64, m: i64) -> ExactRational {
    rat(c(n, m))
}

fn decomp_rhs(n: i64, m: i64) -> ExactRational {
    rat((0..=n - m).map(|k| d(k + m, m) * c(n - m - k, 0)).sum::<ExactInt>())
}

fn convolution_lhs(n: i64, m: i64) -> ExactRational {
    rat((0..n - m).map(|k| c(k + m, m) * c(n - m - k - 1, 0)).sum::<ExactInt>())
}

fn convolution_rhs(n: i64, m: i64) -> ExactRational {
    let left: ExactRational = (1..=m).map(|k| ratio(n - k, k)).product();
    let right: ExactRational = (m + 2..=n).map(|k| ratio(n + k, k)).product();
    left * right
}

fn lemma6_2_lhs(n: i64, m: i64) -> ExactRational {
    rat(c(n + m + 1, m + 1))
}

fn lemma6_2_rhs(n: i64, m: i64) -> ExactRational {
    let mut total = ExactInt::zero();
    for a in 0..=n {
        let head = c(a + m, m);
        for b in 0..=n - a {
            total += &head * c(b, 0) * c(n - a - b, 0);
        }
    }
    rat(total)
}

fn sweep(id: IdentityId, grid: Vec<Params>, keep_evidence: bool) -> IdentityReport {
    let started = Instant::now();
    let evaluations: Vec<Evaluation> = grid
        .into_par_iter()
        .map(|params| {
            let (lhs, rhs) = match (id, params.k) {
                (IdentityId::Cor4_4, Some(k)) => (
                    first_touch_lhs(params.n, params.m, k),
                    first_touch_rhs(params.n, params.m),
                ),
                _ => evaluate_sides(id, params).expect("grid holds admissible tuples only"),
            };
            let regime = match params.k {
                Some(k) if k > 2 * params.m => Regime::Conjectural,
                _ => Regime::Proven,
            };
            Evaluation { params, lhs, rhs, regime }
        })
        .collect();
    let params_checked = evaluations.len();
    let mut failures: Vec<Evaluation> = evaluations.iter().filter(|e| !e.holds()).cloned().collect();
    failures.sort_by_key(|e| e.params);
    IdentityReport {
        id,
        params_checked,
        failures,
        elapsed: started.elapsed(),
        evidence: if keep_evidence { evaluations } else { Vec::new() },
    }
}

/// Check `id` at every admissible tuple with `n <= n_max`.
pub fn verify_identity(id: IdentityId, n_max: i64) -> IdentityReport {
    sweep(id, id.grid(n_max), false)
}

/// Evaluate the first-touch identity for `1 <= n <= n_max`, `0 <= m < n` and
/// `1 <= k <= k_max`, including `k > 2m` where it is only conjectured.
pub fn conjecture_sweep(n_max: i64, k_max: i64) -> IdentityReport {
    let mut grid = Vec::new();
    for n in 1..=n_max {
        for m in 0..n {
            for k in 1..=k_max {
                grid.push(Params::with_k(n, m, k));
            }
        }
    }
    sweep(IdentityId::Cor4_4, grid, true)
}

/// Both sides of the first-touch identity at any `k >= 1` (falling-factorial
/// convention for negative upper indices).
pub fn first_touch_sides(n: i64, m: i64, k: i64) -> Result<(ExactRational, ExactRational)> {
    if !(0 <= m && m < n && k >= 1) {
        return domain(format!("need 0 <= m < n and k >= 1, got n={n}, m={m}, k={k}"));
    }
    Ok((first_touch_lhs(n, m, k), first_touch_rhs(n, m)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn both(v: i64) -> (ExactRational, ExactRational) {
        (rat(v), rat(v))
    }

    #[test]
    fn side_examples() {
        assert_eq!(evaluate_sides(IdentityId::Cor4_1, Params::new(2, 0)).unwrap(), both(8));
        assert_eq!(evaluate_sides(IdentityId::Cor4_2, Params::new(2, 1)).unwrap(), both(3));
        assert_eq!(evaluate_sides(IdentityId::Cor4_4, Params::with_k(2, 1, 1)).unwrap(), both(4));
        assert_eq!(evaluate_sides(IdentityId::Transformed, Params::new(1, 0)).unwrap(), both(4));
    }

    #[test]
    fn out_of_domain() {
        assert!(evaluate_sides(IdentityId::Cor4_1, Params::new(2, 2)).is_err());
        assert!(evaluate_sides(IdentityId::Cor4_2, Params::new(2, 0)).is_err());
        assert!(evaluate_sides(IdentityId::Cor4_4, Params::with_k(3, 1, 3)).is_err());
        assert!(evaluate_sides(IdentityId::Cor4_4, Params::new(3, 1)).is_err());
        assert!(evaluate_sides(IdentityId::Decomp, Params::with_k(3, 1, 1)).is_err());
        assert!(evaluate_sides(IdentityId::Convolution, Params::new(3, 0)).is_err());
    }

    #[test]
    fn conjectural_examples() {
        assert_eq!(first_touch_sides(3, 1, 3).unwrap(), both(15));
        assert_eq!(first_touch_sides(2, 0, 1).unwrap(), both(6));
        assert_eq!(first_touch_sides(3, 1, 4).unwrap(), both(15));
    }

    #[test]
    fn smallest_sweep() {
        let r = verify_identity(IdentityId::Cor4_1, 1);
        assert_eq!(r.params_checked, 1);
        assert!(r.passed());
    }

    #[test]
    fn every_identity_holds_to_twelve() {
        for id in IdentityId::ALL {
            let r = verify_identity(id, 12);
            assert!(r.params_checked > 0, "{id}");
            assert!(r.passed(), "{id}: {:?}", r.failures.first());
        }
    }

    #[test]
    fn names_parse() {
        assert_eq!("ID_COR4_1".parse::<IdentityId>().unwrap(), IdentityId::Cor4_1);
        assert_eq!("lemma6_2".parse::<IdentityId>().unwrap(), IdentityId::Lemma6_2);
        assert!("bogus".parse::<IdentityId>().is_err());
    }

    #[test]
    fn conjecture_report_shape() {
        let r = conjecture_sweep(4, 3);
        assert_eq!(r.params_checked, (1..=4).map(|n| n * 3).sum::<i64>() as usize);
        assert_eq!(r.evidence.len(), r.params_checked);
        assert!(r.checked_in(Regime::Conjectural) > 0);
        assert_eq!(r.failures_in(Regime::Proven).count(), 0);
    }
}
