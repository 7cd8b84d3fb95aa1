//! Outward-rounded interval arithmetic over `f64`.
//!
//! Every operation widens its result by at least one ulp on each side, and
//! the elementary functions by `ELEM_ULPS`, so the true value of any
//! expression built from exact inputs lies inside the computed interval.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Widening applied to libm results (sqrt, ln, exp, atan, cos).
const ELEM_ULPS: u32 = 2;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

fn down(x: f64, n: u32) -> f64 {
    (0..n).fold(x, |v, _| v.next_down())
}

fn up(x: f64, n: u32) -> f64 {
    (0..n).fold(x, |v, _| v.next_up())
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Self {
        assert!(lo <= hi, "empty interval [{lo}, {hi}]");
        Interval { lo, hi }
    }

    /// Exact point interval; only for values representable in `f64`.
    pub fn exact(x: f64) -> Self {
        Interval { lo: x, hi: x }
    }

    pub fn int(n: i64) -> Self {
        let x = n as f64;
        assert_eq!(x as i64, n, "integer {n} is not exact in f64");
        Interval::exact(x)
    }

    /// Enclosure of the decimal literal `s`, e.g. `"1.03"`.
    pub fn dec(s: &str) -> Self {
        let x: f64 = s.parse().expect("decimal literal");
        Interval { lo: x.next_down(), hi: x.next_up() }
    }

    /// Enclosure of `p / q`.
    pub fn ratio(p: i64, q: i64) -> Self {
        Interval::int(p) / Interval::int(q)
    }

    pub fn pi() -> Self {
        let p = std::f64::consts::PI;
        Interval { lo: p.next_down(), hi: p.next_up() }
    }

    pub fn mid(self) -> f64 {
        0.5 * (self.lo + self.hi)
    }

    pub fn width(self) -> f64 {
        self.hi - self.lo
    }

    pub fn contains(self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn sqrt(self) -> Self {
        assert!(self.lo >= 0.0, "sqrt of {self}");
        Interval { lo: down(self.lo.sqrt(), ELEM_ULPS).max(0.0), hi: up(self.hi.sqrt(), ELEM_ULPS) }
    }

    pub fn ln(self) -> Self {
        assert!(self.lo > 0.0, "ln of {self}");
        Interval { lo: down(self.lo.ln(), ELEM_ULPS), hi: up(self.hi.ln(), ELEM_ULPS) }
    }

    pub fn exp(self) -> Self {
        Interval { lo: down(self.lo.exp(), ELEM_ULPS).max(0.0), hi: up(self.hi.exp(), ELEM_ULPS) }
    }

    pub fn atan(self) -> Self {
        Interval { lo: down(self.lo.atan(), ELEM_ULPS), hi: up(self.hi.atan(), ELEM_ULPS) }
    }

    pub fn asin(self) -> Self {
        assert!(self.lo >= -1.0 && self.hi <= 1.0, "asin of {self}");
        Interval { lo: down(self.lo.asin(), ELEM_ULPS), hi: up(self.hi.asin(), ELEM_ULPS) }
    }

    /// Cosine on an interval inside `[0, pi]`, where it is decreasing.
    pub fn cos(self) -> Self {
        assert!(self.lo >= 0.0 && self.hi <= 3.0, "cos only implemented on [0, 3]");
        Interval { lo: down(self.hi.cos(), ELEM_ULPS), hi: up(self.lo.cos(), ELEM_ULPS) }
    }

    pub fn powi(self, n: u32) -> Self {
        (0..n).fold(Interval::exact(1.0), |acc, _| acc * self)
    }

    pub fn recip(self) -> Self {
        Interval::exact(1.0) / self
    }

    /// Certainly `self < other`.
    pub fn lt(self, other: Interval) -> bool {
        self.hi < other.lo
    }

    /// Guaranteed margin `other - self`, as its lower endpoint.
    pub fn margin_below(self, other: Interval) -> f64 {
        (other - self).lo
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:.17e}, {:.17e}]", self.lo, self.hi)
    }
}

impl Add for Interval {
    type Output = Interval;
    fn add(self, o: Interval) -> Interval {
        Interval { lo: (self.lo + o.lo).next_down(), hi: (self.hi + o.hi).next_up() }
    }
}

impl Sub for Interval {
    type Output = Interval;
    fn sub(self, o: Interval) -> Interval {
        Interval { lo: (self.lo - o.hi).next_down(), hi: (self.hi - o.lo).next_up() }
    }
}

impl Neg for Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        Interval { lo: -self.hi, hi: -self.lo }
    }
}

impl Mul for Interval {
    type Output = Interval;
    fn mul(self, o: Interval) -> Interval {
        let p = [self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi];
        let lo = p.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = p.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        Interval { lo: lo.next_down(), hi: hi.next_up() }
    }
}

impl Div for Interval {
    type Output = Interval;
    fn div(self, o: Interval) -> Interval {
        assert!(o.lo > 0.0 || o.hi < 0.0, "division by an interval containing 0: {o}");
        let p = [self.lo / o.lo, self.lo / o.hi, self.hi / o.lo, self.hi / o.hi];
        let lo = p.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = p.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        Interval { lo: lo.next_down(), hi: hi.next_up() }
    }
}
