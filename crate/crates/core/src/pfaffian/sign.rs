use std::fmt;
use std::ops::{Mul, Neg};

/// A sign in {−1, 0, +1}; zero marks a repeated index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Sign(i8);

impl Sign {
    pub const PLUS: Sign = Sign(1);
    pub const MINUS: Sign = Sign(-1);
    pub const ZERO: Sign = Sign(0);

    /// (−1)^e.
    pub fn from_parity(e: usize) -> Sign {
        if e % 2 == 0 {
            Sign::PLUS
        } else {
            Sign::MINUS
        }
    }

    pub fn value(self) -> i32 {
        self.0 as i32
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        Sign(self.0 * rhs.0)
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        Sign(-self.0)
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            1 => write!(f, "+1"),
            -1 => write!(f, "-1"),
            _ => write!(f, "0"),
        }
    }
}

#[inline]
fn theta(a: usize, b: usize) -> usize {
    // θ(a − b) for a ≠ b
    (a > b) as usize
}

fn distinct(idx: &[usize]) -> bool {
    idx.iter().enumerate().all(|(n, a)| !idx[..n].contains(a))
}

/// σ_{i,j,r}: (−1)^{i+j+r+1+θ(r−i)+θ(r−j)+θ(j−i)}, or 0 on repeats.
pub fn sigma3(i: usize, j: usize, r: usize) -> Sign {
    if !distinct(&[i, j, r]) {
        return Sign::ZERO;
    }
    Sign::from_parity(i + j + r + 1 + theta(r, i) + theta(r, j) + theta(j, i))
}

/// σ_{i,j,r,h,k}: (−1)^{h+k+1+θ(k−i)+θ(k−j)+θ(k−r)+θ(k−h)+θ(h−i)+θ(h−j)+θ(h−r)},
/// or 0 on repeats.
pub fn sigma5(i: usize, j: usize, r: usize, h: usize, k: usize) -> Sign {
    if !distinct(&[i, j, r, h, k]) {
        return Sign::ZERO;
    }
    let e = h + k + 1
        + theta(k, i)
        + theta(k, j)
        + theta(k, r)
        + theta(k, h)
        + theta(h, i)
        + theta(h, j)
        + theta(h, r);
    Sign::from_parity(e)
}
