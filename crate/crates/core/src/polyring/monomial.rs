use std::fmt;

/// z₁^a₁ z₂^a₂ z₃^a₃, packed as `deg<<48 | a1<<32 | a2<<16 | a3`.
///
/// With this packing the integer order is graded lex (z₁ > z₂ > z₃) and
/// multiplying monomials is adding keys.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(u64);

const MASK: u64 = 0xffff;

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    pub fn new(exponents: [u32; 3]) -> Monomial {
        let deg: u32 = exponents.iter().sum();
        assert!(deg <= MASK as u32, "monomial degree {deg} exceeds 65535");
        Monomial(
            (deg as u64) << 48
                | (exponents[0] as u64) << 32
                | (exponents[1] as u64) << 16
                | exponents[2] as u64,
        )
    }

    /// The variable z_l, l ∈ {1,2,3}.
    pub fn var(l: usize) -> Monomial {
        let mut e = [0; 3];
        e[l - 1] = 1;
        Monomial::new(e)
    }

    pub fn exponents(self) -> [u32; 3] {
        [
            (self.0 >> 32 & MASK) as u32,
            (self.0 >> 16 & MASK) as u32,
            (self.0 & MASK) as u32,
        ]
    }

    pub fn degree(self) -> u32 {
        (self.0 >> 48) as u32
    }

    pub fn is_one(self) -> bool {
        self.0 == 0
    }

    pub fn mul(self, other: Monomial) -> Monomial {
        debug_assert!(self.degree() + other.degree() <= MASK as u32);
        Monomial(self.0 + other.0)
    }

    /// self / z_l, if z_l divides self.
    pub fn div_var(self, l: usize) -> Option<Monomial> {
        let e = self.exponents();
        if e[l - 1] == 0 {
            return None;
        }
        let shift = 16 * (3 - l) as u64;
        Some(Monomial(self.0 - (1 << 48) - (1 << shift)))
    }

    pub fn divides(self, other: Monomial) -> bool {
        let a = self.exponents();
        let b = other.exponents();
        (0..3).all(|i| a[i] <= b[i])
    }
}

const NAMES: [&str; 3] = ["x", "y", "z"];

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (name, e) in NAMES.iter().zip(self.exponents()) {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn packing_round_trips() {
        let m = Monomial::new([3, 0, 7]);
        assert_eq!(m.exponents(), [3, 0, 7]);
        assert_eq!(m.degree(), 10);
        assert_eq!(m.to_string(), "x^3*z^7");
    }

    #[test]
    fn order_is_graded_lex() {
        let x = Monomial::var(1);
        let y = Monomial::var(2);
        let z = Monomial::var(3);
        assert!(x > y && y > z);
        assert!(Monomial::new([0, 0, 2]) > x);
        assert!(Monomial::new([1, 1, 0]) > Monomial::new([0, 2, 0]));
        assert!(Monomial::new([1, 0, 0]).mul(z) > Monomial::new([0, 2, 0]));
    }

    #[test]
    fn division_by_variable() {
        let m = Monomial::new([1, 2, 0]);
        assert_eq!(m.div_var(2), Some(Monomial::new([1, 1, 0])));
        assert_eq!(m.div_var(3), None);
    }
}
