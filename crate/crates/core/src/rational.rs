//! Exact rational scalars and their wire format.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero() -> Q {
    Q::zero()
}

pub fn one() -> Q {
    Q::one()
}

/// Always "p/q", including integers ("-8/1").
pub fn to_wire(x: &Q) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

pub fn from_wire(s: &str) -> Option<Q> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim().parse::<BigInt>().ok()?, d.trim().parse::<BigInt>().ok()?),
        None => (s.parse::<BigInt>().ok()?, BigInt::one()),
    };
    if d.is_zero() {
        return None;
    }
    Some(Q::new(n, d))
}

/// Short human form: "3", "-1/2".
pub fn display(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Converts an integral rational to i64, if it is one and fits.
pub fn to_i64(x: &Q) -> Option<i64> {
    if !x.is_integer() {
        return None;
    }
    i64::try_from(x.numer()).ok()
}

pub fn abs(x: &Q) -> Q {
    x.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wire_round_trip() {
        for x in [q(0), q(-8), qf(3, 7), qf(-1, 2)] {
            assert_eq!(from_wire(&to_wire(&x)).unwrap(), x);
        }
        assert_eq!(to_wire(&q(-8)), "-8/1");
        assert_eq!(from_wire("4/-2"), Some(q(-2)));
        assert_eq!(from_wire("1/0"), None);
        assert_eq!(display(&qf(2, 4)), "1/2");
    }
}
