//! Exact fractions for efficacy values and bound comparisons.
//!
//! Every value the solver compares (efficacies, upper bounds, incumbents) is
//! an exact [`Rational`]; no floating point enters any decision path. The
//! guard intermediates of the alternative-comparison algorithm can be
//! negative, so a separate [`SignedRatio`] covers those.

use std::cmp::Ordering;
use std::fmt;

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = b;
        b = a % b;
        a = t;
    }
    a
}

/// An exact non-negative fraction with a positive denominator.
///
/// Stored in reduced form; ordering and equality are by cross-multiplication,
/// so `Rational::new(8, 22) == Rational::new(4, 11)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Rational {
    num: u64,
    den: u64,
}

impl Rational {
    pub const ZERO: Rational = Rational { num: 0, den: 1 };
    pub const ONE: Rational = Rational { num: 1, den: 1 };

    /// Builds `num/den` in reduced form. Panics if `den == 0`.
    pub fn new(num: u64, den: u64) -> Self {
        assert!(den > 0, "rational denominator must be positive");
        if num == 0 {
            return Rational::ZERO;
        }
        let g = gcd(num, den);
        Rational {
            num: num / g,
            den: den / g,
        }
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }

    /// Parses a plain decimal such as `0.75`, `1`, or `.6087` into the exact
    /// fraction it denotes (`75/100`, `1/1`, `6087/10000`).
    pub fn from_decimal_str(s: &str) -> Result<Self, String> {
        let s = s.trim();
        if s.is_empty() {
            return Err("empty decimal".into());
        }
        let (int_part, frac_part) = match s.split_once('.') {
            Some((i, f)) => (i, f),
            None => (s, ""),
        };
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(format!("invalid decimal {s:?}"));
        }
        if !int_part.chars().all(|c| c.is_ascii_digit())
            || !frac_part.chars().all(|c| c.is_ascii_digit())
        {
            return Err(format!("invalid decimal {s:?}"));
        }
        if frac_part.len() > 18 {
            return Err(format!("too many decimal places in {s:?}"));
        }
        let int: u64 = if int_part.is_empty() {
            0
        } else {
            int_part
                .parse()
                .map_err(|_| format!("invalid decimal {s:?}"))?
        };
        let scale = 10u64.pow(frac_part.len() as u32);
        let frac: u64 = if frac_part.is_empty() {
            0
        } else {
            frac_part
                .parse()
                .map_err(|_| format!("invalid decimal {s:?}"))?
        };
        let num = int
            .checked_mul(scale)
            .and_then(|v| v.checked_add(frac))
            .ok_or_else(|| format!("decimal {s:?} out of range"))?;
        Ok(Rational::new(num, scale))
    }

    /// Renders the value with `places` decimal digits, rounding half to even
    /// (banker's rounding), e.g. `14/17` at 4 places is `"0.8235"`.
    pub fn to_decimal(&self, places: u32) -> String {
        let scale = 10u128.pow(places);
        let scaled = self.num as u128 * scale;
        let mut q = scaled / self.den as u128;
        let r = scaled % self.den as u128;
        match (2 * r).cmp(&(self.den as u128)) {
            Ordering::Greater => q += 1,
            Ordering::Equal => {
                if q % 2 == 1 {
                    q += 1;
                }
            }
            Ordering::Less => {}
        }
        let int = q / scale;
        let frac = q % scale;
        if places == 0 {
            format!("{int}")
        } else {
            format!("{int}.{frac:0width$}", width = places as usize)
        }
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        let lhs = self.num as u128 * other.den as u128;
        let rhs = other.num as u128 * self.den as u128;
        lhs.cmp(&rhs)
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// A signed exact fraction, used for the comparison-guard intermediates.
///
/// Normalized so the denominator is positive and the fraction is reduced.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SignedRatio {
    num: i64,
    den: i64,
}

impl SignedRatio {
    /// Builds `num/den` in reduced form with a positive denominator.
    /// Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "signed ratio denominator must be non-zero");
        let (num, den) = if den < 0 { (-num, -den) } else { (num, den) };
        if num == 0 {
            return SignedRatio { num: 0, den: 1 };
        }
        let g = gcd(num.unsigned_abs(), den.unsigned_abs()) as i64;
        SignedRatio {
            num: num / g,
            den: den / g,
        }
    }

    pub fn num(&self) -> i64 {
        self.num
    }

    pub fn den(&self) -> i64 {
        self.den
    }
}

impl Ord for SignedRatio {
    fn cmp(&self, other: &Self) -> Ordering {
        let lhs = self.num as i128 * other.den as i128;
        let rhs = other.num as i128 * self.den as i128;
        lhs.cmp(&rhs)
    }
}

impl PartialOrd for SignedRatio {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SignedRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}
