//! Closed-form bounds on universal target sizes, in exact arithmetic.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_integer::Roots;
use num_rational::Ratio;
use num_traits::{One, ToPrimitive};
use serde::{Serialize, Serializer};

use crate::density::densest_subgraph;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn binomial(n: u64, r: u64) -> BigUint {
    if r > n {
        return BigUint::ZERO;
    }
    let r = r.min(n - r);
    let mut acc = BigUint::one();
    for i in 0..r {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Smallest `e` with `base^e >= x`. `x = 0` and `x = 1` give 0.
pub fn ceil_log(base: u64, x: u64) -> u32 {
    assert!(base >= 2, "logarithm base must be at least 2");
    let mut e = 0;
    let mut power: u128 = 1;
    while power < x as u128 {
        power *= base as u128;
        e += 1;
    }
    e
}

/// Exact `ceil(sqrt(x))`.
pub fn ceil_sqrt(x: u64) -> u64 {
    let r = x.sqrt();
    if r * r == x {
        r
    } else {
        r + 1
    }
}

/// Upper bound `8 d r^4 * C(8 d r^4, d) * k^d` on the smallest universal
/// target for graphs with an `r`-color acyclic coloring and a
/// `d`-orientation.
pub fn universal_upper_bound(r: u64, d: u64, k: u64) -> BigUint {
    let base = BigUint::from(8u32) * d * BigUint::from(r).pow(4);
    let choose = binomial(base.to_u64().expect("8dr^4 fits in u64"), d);
    base * choose * BigUint::from(k).pow(d as u32)
}

/// `k^D` with `D` rational, kept in exact form.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RationalPower {
    pub base: u64,
    #[serde(serialize_with = "ratio_string")]
    pub exponent: Ratio<u64>,
    pub approx: f64,
}

impl RationalPower {
    pub fn new(base: u64, exponent: Ratio<u64>) -> Self {
        let approx = (base as f64).powf(*exponent.numer() as f64 / *exponent.denom() as f64);
        RationalPower {
            base,
            exponent,
            approx,
        }
    }

    /// Exact value when the exponent is an integer.
    pub fn exact(&self) -> Option<BigUint> {
        self.exponent
            .is_integer()
            .then(|| BigUint::from(self.base).pow(self.exponent.to_integer() as u32))
    }

    /// Smallest integer at least `base^exponent`, compared exactly.
    pub fn ceil(&self) -> BigUint {
        // n >= b^(p/q)  iff  n^q >= b^p
        let (p, q) = (*self.exponent.numer() as u32, *self.exponent.denom() as u32);
        let target = BigUint::from(self.base).pow(p);
        let mut n = BigUint::from(self.approx.floor().max(1.0) as u64);
        while n.pow(q) < target {
            n += 1u32;
        }
        while n > BigUint::one() && (&n - 1u32).pow(q) >= target {
            n -= 1u32;
        }
        n
    }
}

/// Lower bound `k^D(G)` on any target universal for `G`.
pub fn universal_lower_bound(graph: &Graph, k: u64) -> RationalPower {
    RationalPower::new(k, densest_subgraph(graph).value)
}

fn ratio_string<S: Serializer>(r: &Ratio<u64>, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

fn decimal<S: Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_str_radix(10))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    #[serde(serialize_with = "decimal")]
    pub lower: BigUint,
    #[serde(serialize_with = "decimal")]
    pub upper: BigUint,
    pub parameters: BTreeMap<String, u64>,
    pub notes: Vec<String>,
}

/// Planar graphs have density 3 and acyclic colorings with 5 colors.
pub fn planar_bounds(k: u64) -> Result<BoundReport> {
    if k < 2 {
        return Err(Error::InvalidPalette(k as u32));
    }
    Ok(BoundReport {
        lower: BigUint::from(k).pow(3),
        upper: universal_upper_bound(5, 3, k),
        parameters: [("r", 5), ("d", 3), ("k", k)]
            .into_iter()
            .map(|(a, b)| (a.to_string(), b))
            .collect(),
        notes: vec![
            "lower: k^3 from planar density 3".into(),
            "upper: 8dr^4 C(8dr^4, d) k^d with r = 5, d = 3".into(),
        ],
    })
}

/// General form of the upper bound as a report with no lower side known.
pub fn upper_report(r: u64, d: u64, k: u64) -> Result<BoundReport> {
    if r == 0 || d == 0 {
        return Err(Error::Precondition("r and d must be at least 1".into()));
    }
    if k < 2 {
        return Err(Error::InvalidPalette(k as u32));
    }
    Ok(BoundReport {
        lower: BigUint::one(),
        upper: universal_upper_bound(r, d, k),
        parameters: [("r", r), ("d", d), ("k", k)]
            .into_iter()
            .map(|(a, b)| (a.to_string(), b))
            .collect(),
        notes: vec!["upper: 8dr^4 C(8dr^4, d) k^d".into()],
    })
}

/// `a * sqrt(b) + c` with `b` square-free and `c` rational.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Surd {
    pub coefficient: u64,
    pub radicand: u64,
    #[serde(serialize_with = "signed_ratio_string")]
    pub offset: Ratio<i64>,
}

fn signed_ratio_string<S: Serializer>(r: &Ratio<i64>, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

impl Surd {
    /// `sqrt(x) + offset` in simplified form.
    pub fn sqrt_plus(x: u64, offset: Ratio<i64>) -> Self {
        let mut coefficient = 1;
        let mut radicand = x;
        let mut f = 2;
        while f * f <= radicand {
            while radicand.is_multiple_of(f * f) {
                radicand /= f * f;
                coefficient *= f;
            }
            f += 1;
        }
        if radicand == 0 {
            coefficient = 0;
        }
        Surd {
            coefficient,
            radicand,
            offset,
        }
    }

    pub fn is_rational(&self) -> bool {
        self.radicand <= 1
    }

    pub fn approx(&self) -> f64 {
        self.coefficient as f64 * (self.radicand as f64).sqrt()
            + *self.offset.numer() as f64 / *self.offset.denom() as f64
    }

    pub fn rational(&self) -> Option<Ratio<i64>> {
        self.is_rational()
            .then(|| Ratio::from_integer((self.coefficient * self.radicand.min(1)) as i64) + self.offset)
    }
}

impl std::fmt::Display for Surd {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if let Some(r) = self.rational() {
            return write!(f, "{r}");
        }
        if self.coefficient != 1 {
            write!(f, "{}", self.coefficient)?;
        }
        write!(f, "sqrt({})", self.radicand)?;
        let o = self.offset;
        if o > Ratio::from_integer(0) {
            write!(f, " + {o}")
        } else if o < Ratio::from_integer(0) {
            write!(f, " - {}", -o)
        } else {
            Ok(())
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GenusBounds {
    pub g: u64,
    pub lower: Surd,
    pub upper: Surd,
    pub lower_approx: f64,
    pub upper_approx: f64,
    /// `ceil(sqrt(12 g))`
    pub t: u64,
}

/// `sqrt(3g) - 1/2 <= D <= sqrt(3g) + 3` for graphs of genus `g`.
pub fn genus_density_bounds(g: u64) -> Result<GenusBounds> {
    if g == 0 {
        return Err(Error::Precondition(
            "genus must be at least 1; use the planar bounds for genus 0".into(),
        ));
    }
    let lower = Surd::sqrt_plus(3 * g, Ratio::new(-1, 2));
    let upper = Surd::sqrt_plus(3 * g, Ratio::from_integer(3));
    Ok(GenusBounds {
        g,
        lower_approx: lower.approx(),
        upper_approx: upper.approx(),
        lower,
        upper,
        t: ceil_sqrt(12 * g),
    })
}

/// Genus of the orientable surface that `K_t` embeds in: `ceil((t-3)(t-4)/12)`.
pub fn clique_genus(t: u64) -> Result<u64> {
    if t < 3 {
        return Err(Error::Precondition("t must be at least 3".into()));
    }
    if t <= 4 {
        return Ok(0);
    }
    Ok(((t - 3) * (t - 4)).div_ceil(12))
}

/// Orientation degree `ceil(log_k p)` for graphs with a `p`-vertex
/// universal target.
pub fn orientation_degree_from_target(p: u64, k: u64) -> Result<u32> {
    if p == 0 {
        return Err(Error::Precondition("p must be at least 1".into()));
    }
    if k < 2 {
        return Err(Error::InvalidPalette(k as u32));
    }
    Ok(ceil_log(k, p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::complete;

    #[test]
    fn binomials() {
        assert_eq!(binomial(8, 1), BigUint::from(8u32));
        assert_eq!(binomial(10, 3), BigUint::from(120u32));
        assert_eq!(binomial(3, 5), BigUint::ZERO);
        assert_eq!(binomial(0, 0), BigUint::one());
        assert_eq!(binomial(60, 30), BigUint::from(118264581564861424u64));
    }

    #[test]
    fn upper_bound_values() {
        assert_eq!(universal_upper_bound(1, 1, 2), BigUint::from(128u32));
        assert_eq!(universal_upper_bound(1, 1, 3), BigUint::from(192u32));
        assert_eq!(universal_upper_bound(2, 1, 2), BigUint::from(32768u32));
        let n = 8 * 3 * 625u64;
        let expected = BigUint::from(n) * binomial(n, 3) * BigUint::from(8u32);
        assert_eq!(universal_upper_bound(5, 3, 2), expected);
        assert_eq!(binomial(n, 3), BigUint::from(562387505000u64));
        assert_eq!(expected.to_string(), "67486500600000000");
    }

    #[test]
    fn lower_bound_values() {
        let k3 = universal_lower_bound(&complete(3).unwrap(), 2);
        assert_eq!(k3.exact(), Some(BigUint::from(2u32)));
        let k4 = universal_lower_bound(&complete(4).unwrap(), 2);
        assert_eq!(k4.exponent, Ratio::new(3, 2));
        assert!((k4.approx - 2.0f64.powf(1.5)).abs() < 1e-12);
        assert_eq!(k4.ceil(), BigUint::from(3u32));
        let empty = universal_lower_bound(&Graph::edgeless(3).unwrap(), 5);
        assert_eq!(empty.exact(), Some(BigUint::one()));
        assert_eq!(empty.ceil(), BigUint::one());
    }

    #[test]
    fn planar_values() {
        assert_eq!(planar_bounds(2).unwrap().lower, BigUint::from(8u32));
        assert_eq!(planar_bounds(3).unwrap().lower, BigUint::from(27u32));
        let json = serde_json::to_value(planar_bounds(2).unwrap()).unwrap();
        assert_eq!(json["lower"], "8");
        assert_eq!(json["upper"], universal_upper_bound(5, 3, 2).to_string());
        assert!(planar_bounds(1).is_err());
    }

    #[test]
    fn genus_values() {
        let b = genus_density_bounds(1).unwrap();
        assert_eq!(b.t, 4);
        assert!((b.lower_approx - (3f64.sqrt() - 0.5)).abs() < 1e-12);
        assert!((b.upper_approx - (3f64.sqrt() + 3.0)).abs() < 1e-12);
        assert_eq!(b.lower.to_string(), "sqrt(3) - 1/2");
        let b = genus_density_bounds(3).unwrap();
        assert_eq!(b.t, 6);
        assert_eq!(b.lower.rational(), Some(Ratio::new(5, 2)));
        assert_eq!(b.upper.rational(), Some(Ratio::from_integer(6)));
        let b = genus_density_bounds(12).unwrap();
        assert_eq!(b.t, 12);
        assert_eq!(b.lower.rational(), Some(Ratio::new(11, 2)));
        assert_eq!(b.upper.rational(), Some(Ratio::from_integer(9)));
        let b = genus_density_bounds(4).unwrap();
        assert_eq!(b.lower.to_string(), "2sqrt(3) - 1/2");
        assert!(genus_density_bounds(0).is_err());
    }

    #[test]
    fn clique_genus_values() {
        assert_eq!(clique_genus(4).unwrap(), 0);
        assert_eq!(clique_genus(7).unwrap(), 1);
        assert_eq!(clique_genus(8).unwrap(), 2);
        assert_eq!(clique_genus(3).unwrap(), 0);
        assert!(clique_genus(2).is_err());
    }

    #[test]
    fn log_values() {
        assert_eq!(orientation_degree_from_target(8, 2).unwrap(), 3);
        assert_eq!(orientation_degree_from_target(9, 2).unwrap(), 4);
        assert_eq!(orientation_degree_from_target(1, 7).unwrap(), 0);
        assert!(orientation_degree_from_target(0, 2).is_err());
    }

    #[test]
    fn integer_roots_match_naive_loops() {
        let mut r = 0u64;
        for x in 0..=1_000_000u64 {
            while r * r < x {
                r += 1;
            }
            assert_eq!(ceil_sqrt(x), r, "x = {x}");
        }
        for base in [2u64, 3, 5, 10] {
            let mut e = 0u32;
            let mut power = 1u64;
            for x in 1..=1_000_000u64 {
                while power < x {
                    power *= base;
                    e += 1;
                }
                assert_eq!(ceil_log(base, x), e, "base {base}, x = {x}");
            }
        }
    }

    #[test]
    fn genus_t_matches_naive_loop() {
        let mut t = 0u64;
        for g in 1..=100_000u64 {
            while t * t < 12 * g {
                t += 1;
            }
            assert_eq!(genus_density_bounds(g).unwrap().t, t);
        }
    }
}
