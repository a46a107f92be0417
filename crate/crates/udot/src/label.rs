//! Basis labels for the idempotented quantum sl2 algebra.

use std::fmt;

/// Word order of a monomial: E-powers before F-powers, or the reverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Form {
    EF,
    FE,
}

/// A monomial E^(a)F^(b)1_n (form EF) or F^(b)E^(a)1_n (form FE) in divided
/// powers; n is the weight on the right.
///
/// When a or b is zero, or when n = b−a, the two word orders denote the same
/// element; such labels are normalised to the EF tag so equal elements
/// compare equal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisLabel {
    form: Form,
    a: u32,
    b: u32,
    n: i64,
}

impl BasisLabel {
    pub fn new(form: Form, a: u32, b: u32, n: i64) -> Self {
        let form = if a == 0 || b == 0 || n == b as i64 - a as i64 {
            Form::EF
        } else {
            form
        };
        BasisLabel { form, a, b, n }
    }

    pub fn ef(a: u32, b: u32, n: i64) -> Self {
        Self::new(Form::EF, a, b, n)
    }

    pub fn fe(a: u32, b: u32, n: i64) -> Self {
        Self::new(Form::FE, a, b, n)
    }

    pub fn idempotent(n: i64) -> Self {
        Self::ef(0, 0, n)
    }

    pub fn form(&self) -> Form {
        self.form
    }

    /// number of E's
    pub fn a(&self) -> u32 {
        self.a
    }

    /// number of F's
    pub fn b(&self) -> u32 {
        self.b
    }

    /// weight on the right
    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn src_weight(&self) -> i64 {
        self.n
    }

    pub fn dst_weight(&self) -> i64 {
        self.n + 2 * (self.a as i64 - self.b as i64)
    }

    /// Membership in the canonical basis: EF labels need n ≤ b−a, FE labels
    /// n ≥ b−a; pure E- or F-powers qualify for every weight.
    pub fn is_canonical(&self) -> bool {
        if self.a == 0 || self.b == 0 {
            return true;
        }
        let split = self.b as i64 - self.a as i64;
        match self.form {
            Form::EF => self.n <= split,
            Form::FE => self.n >= split,
        }
    }
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = |f: &mut fmt::Formatter<'_>| -> fmt::Result {
            match self.a {
                0 => Ok(()),
                1 => write!(f, "E "),
                a => write!(f, "E({a}) "),
            }
        };
        let ff = |f: &mut fmt::Formatter<'_>| -> fmt::Result {
            match self.b {
                0 => Ok(()),
                1 => write!(f, "F "),
                b => write!(f, "F({b}) "),
            }
        };
        match self.form {
            Form::EF => {
                e(f)?;
                ff(f)?;
            }
            Form::FE => {
                ff(f)?;
                e(f)?;
            }
        }
        write!(f, "1_{{{}}}", self.n)
    }
}
