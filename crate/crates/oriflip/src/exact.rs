//! Exact plane coordinates over Q(sqrt 3).
//!
//! Triangle-lattice x coordinates are rational multiples of sqrt 3; every
//! other family is plain rational. Keeping both components rational gives
//! exact comparisons, so vertex deduplication, star orders, and face walks
//! never touch floating point.

use num_rational::Ratio;
use num_traits::{Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

pub type Rat = Ratio<i64>;

pub fn rat(n: i64, d: i64) -> Rat {
    Ratio::new(n, d)
}

/// a + b*sqrt(3).
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Q3 {
    pub a: Rat,
    pub b: Rat,
}

impl Q3 {
    pub fn new(a: Rat, b: Rat) -> Self {
        Q3 { a, b }
    }

    pub fn from_int(n: i64) -> Self {
        Q3 { a: Rat::from_integer(n), b: Rat::zero() }
    }

    pub fn from_rat(a: Rat) -> Self {
        Q3 { a, b: Rat::zero() }
    }

    /// b * sqrt(3) with a = 0.
    pub fn sqrt3(b: Rat) -> Self {
        Q3 { a: Rat::zero(), b }
    }

    pub fn zero() -> Self {
        Q3 { a: Rat::zero(), b: Rat::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Sign of a + b*sqrt(3), exactly.
    pub fn sign(&self) -> Ordering {
        let (sa, sb) = (sign_rat(&self.a), sign_rat(&self.b));
        match (sa, sb) {
            (Ordering::Equal, s) | (s, Ordering::Equal) => s,
            (Ordering::Greater, Ordering::Greater) => Ordering::Greater,
            (Ordering::Less, Ordering::Less) => Ordering::Less,
            // opposite signs: compare a^2 against 3 b^2, winner is the
            // component with the larger square
            (Ordering::Greater, Ordering::Less) => (self.a * self.a).cmp(&(self.b * self.b * 3)),
            (Ordering::Less, Ordering::Greater) => (self.b * self.b * 3).cmp(&(self.a * self.a)),
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.a.to_f64().unwrap() + self.b.to_f64().unwrap() * 3f64.sqrt()
    }
}

fn sign_rat(r: &Rat) -> Ordering {
    if r.is_zero() {
        Ordering::Equal
    } else if r.is_positive() {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}

impl Add for Q3 {
    type Output = Q3;
    fn add(self, o: Q3) -> Q3 {
        Q3 { a: self.a + o.a, b: self.b + o.b }
    }
}

impl Sub for Q3 {
    type Output = Q3;
    fn sub(self, o: Q3) -> Q3 {
        Q3 { a: self.a - o.a, b: self.b - o.b }
    }
}

impl Neg for Q3 {
    type Output = Q3;
    fn neg(self) -> Q3 {
        Q3 { a: -self.a, b: -self.b }
    }
}

impl Mul for Q3 {
    type Output = Q3;
    fn mul(self, o: Q3) -> Q3 {
        // (a1 + b1 s)(a2 + b2 s) = a1 a2 + 3 b1 b2 + (a1 b2 + b1 a2) s
        Q3 {
            a: self.a * o.a + self.b * o.b * 3,
            b: self.a * o.b + self.b * o.a,
        }
    }
}

impl PartialOrd for Q3 {
    fn partial_cmp(&self, o: &Q3) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl Ord for Q3 {
    fn cmp(&self, o: &Q3) -> Ordering {
        (*self - *o).sign()
    }
}

impl fmt::Debug for Q3 {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else if self.a.is_zero() {
            write!(f, "{}√3", self.b)
        } else {
            write!(f, "{}+{}√3", self.a, self.b)
        }
    }
}

impl fmt::Display for Q3 {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Exact 2D point.
pub type Point = (Q3, Q3);

/// Cross product sign of (p->q) x (p->r).
pub fn cross_sign(p: Point, q: Point, r: Point) -> Ordering {
    let ux = q.0 - p.0;
    let uy = q.1 - p.1;
    let vx = r.0 - p.0;
    let vy = r.1 - p.1;
    (ux * vy - uy * vx).sign()
}

/// Compares two direction vectors by counterclockwise angle from east,
/// range [0, 360). Zero vectors are not allowed.
pub fn cmp_direction(u: (Q3, Q3), v: (Q3, Q3)) -> Ordering {
    debug_assert!(!(u.0.is_zero() && u.1.is_zero()));
    debug_assert!(!(v.0.is_zero() && v.1.is_zero()));
    let hu = half_plane(u);
    let hv = half_plane(v);
    hu.cmp(&hv).then_with(|| {
        // same half plane: u before v iff u x v > 0
        (v.0 * u.1 - v.1 * u.0).sign()
    })
}

// 0 for angles in [0, 180), 1 for [180, 360)
fn half_plane(d: (Q3, Q3)) -> u8 {
    match d.1.sign() {
        Ordering::Greater => 0,
        Ordering::Less => 1,
        Ordering::Equal => {
            if d.0.sign() == Ordering::Greater {
                0
            } else {
                1
            }
        }
    }
}
