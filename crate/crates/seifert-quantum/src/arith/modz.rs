use rug::Rational;
use std::fmt;

/// A rational number modulo ℤ, stored by its representative in [0, 1).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RationalModZ(Rational);

impl RationalModZ {
    pub fn new(x: Rational) -> Self {
        let fl = x.clone().floor();
        RationalModZ(x - fl)
    }

    pub fn from_frac(num: i64, den: i64) -> Self {
        Self::new(Rational::from((num, den)))
    }

    pub fn rep(&self) -> &Rational {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0 == 0
    }

    pub fn neg(&self) -> Self {
        Self::new(Rational::from(-&self.0))
    }

    /// Representative in (-1/2, 1/2].
    pub fn centered(&self) -> Rational {
        if self.0 > Rational::from((1, 2)) {
            Rational::from(&self.0 - 1u32)
        } else {
            self.0.clone()
        }
    }
}

impl fmt::Display for RationalModZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_representative() {
        assert_eq!(RationalModZ::from_frac(-1, 120), RationalModZ::from_frac(119, 120));
        assert_eq!(RationalModZ::from_frac(-2209, 120).rep(), &Rational::from((71, 120)));
        assert!(RationalModZ::from_frac(7, 1).is_zero());
    }
}
