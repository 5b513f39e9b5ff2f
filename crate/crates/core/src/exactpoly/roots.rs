//! Real-root counting with Sturm sequences and isolation of the largest real
//! root by rational bisection.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};
use serde::{Serialize, Serializer};

use super::poly::sign_of;
use super::{IntPoly, PolyError};

/// Sturm chain `p, p', -rem(p, p'), ...` with every member scaled by a
/// positive factor to stay in `Z[λ]`.
#[derive(Debug, Clone)]
pub struct SturmSequence {
    chain: Vec<IntPoly>,
}

impl SturmSequence {
    pub fn new(p: &IntPoly) -> Self {
        let mut chain = vec![p.clone()];
        if p.degree().unwrap_or(0) == 0 {
            return SturmSequence { chain };
        }
        let d = p.derivative();
        chain.push(d);
        loop {
            let len = chain.len();
            let r = chain[len - 2].rational_remainder(&chain[len - 1]);
            if r.is_zero() {
                break;
            }
            chain.push(-&r);
        }
        SturmSequence { chain }
    }

    fn variations<I: Iterator<Item = i8>>(signs: I) -> usize {
        let mut count = 0;
        let mut last = 0i8;
        for s in signs.filter(|&s| s != 0) {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    pub fn variations_at(&self, x: &BigRational) -> usize {
        Self::variations(self.chain.iter().map(|q| q.sign_at(x)))
    }

    fn variations_at_infinity(&self, positive: bool) -> usize {
        Self::variations(self.chain.iter().map(|q| {
            let lead = q.leading().map_or(0, sign_of);
            let odd = q.degree().unwrap_or(0) % 2 == 1;
            if !positive && odd {
                -lead
            } else {
                lead
            }
        }))
    }

    /// Distinct real roots in `(a, b]`, assuming `a < b`.
    pub fn count_in(&self, a: &BigRational, b: &BigRational) -> usize {
        self.variations_at(a).saturating_sub(self.variations_at(b))
    }

    /// Distinct real roots overall.
    pub fn count_real(&self) -> usize {
        self.variations_at_infinity(false)
            .saturating_sub(self.variations_at_infinity(true))
    }
}

/// Number of real roots counted with multiplicity.
///
/// Sums the distinct-root counts of `p`, `gcd(p, p')`, `gcd(g, g')`, ...: a
/// root of multiplicity `m` appears in exactly the first `m` members.
pub fn count_real_roots_with_multiplicity(p: &IntPoly) -> usize {
    let mut total = 0;
    let mut current = p.primitive();
    while current.degree().unwrap_or(0) > 0 {
        total += SturmSequence::new(&current).count_real();
        current = current.gcd(&current.derivative());
    }
    total
}

/// `1 + max|c_i| / |c_lead|`: every real root lies strictly inside
/// `(-bound, bound)`.
pub fn cauchy_bound(p: &IntPoly) -> BigRational {
    let lead = p.leading().map(Signed::abs).unwrap_or_else(BigInt::one);
    let max = p
        .coeffs()
        .iter()
        .take(p.coeffs().len().saturating_sub(1))
        .map(Signed::abs)
        .max()
        .unwrap_or_default();
    BigRational::one() + BigRational::new(max, lead)
}

/// Closed rational interval `[lo, hi]`; `lo == hi` when the root is exact.
#[derive(Clone, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RootInterval {
    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn lo_f64(&self) -> f64 {
        self.lo.to_f64().unwrap_or(f64::NAN)
    }

    pub fn hi_f64(&self) -> f64 {
        self.hi.to_f64().unwrap_or(f64::NAN)
    }

    pub fn midpoint_f64(&self) -> f64 {
        ((&self.lo + &self.hi) / BigRational::from_integer(2.into()))
            .to_f64()
            .unwrap_or(f64::NAN)
    }

    /// `x ∈ [lo − slack, hi + slack]`.
    pub fn contains_f64(&self, x: f64, slack: f64) -> bool {
        x >= self.lo_f64() - slack && x <= self.hi_f64() + slack
    }

    /// `Some(Greater)` when `self` lies strictly above `other`; `None` when
    /// the intervals overlap and are not the same exact point.
    pub fn compare(&self, other: &RootInterval) -> Option<Ordering> {
        if self.lo > other.hi {
            Some(Ordering::Greater)
        } else if self.hi < other.lo {
            Some(Ordering::Less)
        } else if self.is_exact() && other.is_exact() && self.lo == other.lo {
            Some(Ordering::Equal)
        } else {
            None
        }
    }
}

impl fmt::Debug for RootInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:.17}, {:.17}]", self.lo_f64(), self.hi_f64())
    }
}

impl Serialize for RootInterval {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("RootInterval", 4)?;
        st.serialize_field("lo", &self.lo.to_string())?;
        st.serialize_field("hi", &self.hi.to_string())?;
        st.serialize_field("lo_approx", &crate::report::sig15(self.lo_f64()))?;
        st.serialize_field("hi_approx", &crate::report::sig15(self.hi_f64()))?;
        st.end()
    }
}

/// `10^-digits` as an exact rational.
pub fn eps_pow10(digits: u32) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(10).pow(digits))
}

/// Checks small-denominator rationals near `x` for an exact root of `p`.
fn exact_root_near(p: &IntPoly, lo: &BigRational, hi: &BigRational) -> Option<BigRational> {
    let lead = p.leading()?.abs();
    // rational roots have denominators dividing the leading coefficient
    let lead_small = lead.to_u64().filter(|&l| l <= 10_000)?;
    for d in (1..=lead_small).filter(|d| lead_small % d == 0) {
        let d = BigInt::from(d);
        let scaled = lo * BigRational::from(d.clone());
        let mut num = scaled.ceil().to_integer();
        loop {
            let candidate = BigRational::new(num.clone(), d.clone());
            if &candidate > hi {
                break;
            }
            if p.sign_at(&candidate) == 0 {
                return Some(candidate);
            }
            num += 1;
        }
    }
    None
}

/// Interval of width at most `eps` containing the largest real root of `p`.
///
/// Bisection over `(-B, B]` with `B` the Cauchy bound, keeping the invariant
/// that `(lo, hi]` holds the largest root and `(hi, B]` holds none. Stops once
/// the interval is narrow enough and isolates exactly one root; at that point
/// the square-free part changes sign across `[lo, hi]` or vanishes at `hi`.
pub fn max_real_root(p: &IntPoly, eps: &BigRational) -> Result<RootInterval, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    if !eps.is_positive() {
        return Err(PolyError::NonPositiveEps);
    }
    let sf = p.square_free();
    let sturm = SturmSequence::new(&sf);
    if sturm.count_real() == 0 {
        return Err(PolyError::NoRealRoot);
    }
    let bound = cauchy_bound(&sf);
    let mut lo = -bound.clone();
    let mut hi = bound;
    let two = BigRational::from_integer(2.into());
    let mut hi_variations = sturm.variations_at(&hi);
    loop {
        if sf.sign_at(&hi) == 0 {
            // nothing above hi, so hi is the largest root
            return Ok(RootInterval {
                lo: hi.clone(),
                hi,
            });
        }
        let inside = sturm.variations_at(&lo).saturating_sub(hi_variations);
        if inside == 1 && &hi - &lo <= *eps {
            break;
        }
        let mid = (&lo + &hi) / &two;
        let mid_variations = sturm.variations_at(&mid);
        if mid_variations > hi_variations {
            lo = mid;
        } else {
            hi = mid;
            hi_variations = mid_variations;
        }
    }
    if let Some(root) = exact_root_near(&sf, &lo, &hi) {
        return Ok(RootInterval {
            lo: root.clone(),
            hi: root,
        });
    }
    Ok(RootInterval { lo, hi })
}

/// Compares the largest real roots of `p` and `q`, refining both from
/// `eps_start` by factors of ten down to `eps_min` until the intervals
/// separate. Returns the ordering with the final intervals, or `None` with
/// them if they still overlap.
pub fn compare_max_roots(
    p: &IntPoly,
    q: &IntPoly,
    eps_start: &BigRational,
    eps_min: &BigRational,
) -> Result<(Option<Ordering>, RootInterval, RootInterval), PolyError> {
    let ten = BigRational::from_integer(10.into());
    let mut eps = eps_start.clone();
    loop {
        let a = max_real_root(p, &eps)?;
        let b = max_real_root(q, &eps)?;
        if let Some(ord) = a.compare(&b) {
            return Ok((Some(ord), a, b));
        }
        // equal polynomials up to content share every root
        if p.square_free() == q.square_free() {
            return Ok((Some(Ordering::Equal), a, b));
        }
        if eps <= *eps_min {
            return Ok((None, a, b));
        }
        eps /= &ten;
        if eps < *eps_min {
            eps = eps_min.clone();
        }
    }
}
