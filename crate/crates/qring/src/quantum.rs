//! Quantum integers, factorials, binomials and the products g(a).

use crate::{LaurentPoly, RatFun};
use std::fmt;

/// [a] = (q^a − q^{−a})/(q − q^{−1}); [0] = 0 and [−a] = −[a].
pub fn qint(a: i64) -> LaurentPoly {
    let mut p = LaurentPoly::zero();
    let m = a.abs();
    let mut e = m - 1;
    while e >= 1 - m {
        p += &LaurentPoly::q(e);
        e -= 2;
    }
    if a < 0 {
        p = -p;
    }
    p
}

/// [a]! = [a][a−1]⋯[1], with [0]! = 1.
pub fn qfact(a: u32) -> LaurentPoly {
    let mut p = LaurentPoly::one();
    for i in 1..=a as i64 {
        p *= &qint(i);
    }
    p
}

/// Quantum binomial [m][m−1]⋯[m−j+1]/[j]!, defined for any integer top.
///
/// The division is exact; failure would be a bug, not an input error.
pub fn qbin(m: i64, j: u32) -> LaurentPoly {
    let mut num = LaurentPoly::one();
    for i in 0..j as i64 {
        num *= &qint(m - i);
        if num.is_zero() {
            return num;
        }
    }
    num.divide_exact(&qfact(j))
        .expect("quantum binomial division is always exact")
}

/// g(a) = ∏_{j=1}^{a} 1/(1 − q^{2j}).
pub fn g(a: u32) -> RatFun {
    let mut den = LaurentPoly::one();
    for j in 1..=a as i64 {
        den *= &(&LaurentPoly::one() - &LaurentPoly::q(2 * j));
    }
    RatFun::new(LaurentPoly::one(), den)
}

/// Outcome of one named identity check.
#[derive(Clone, Debug)]
pub struct CheckResult {
    pub name: String,
    pub pass: bool,
    pub detail: Option<String>,
}

/// Report from a sweep of the quantum-combinatorics identities.
#[derive(Clone, Debug, Default)]
pub struct IdentityReport {
    pub checks: Vec<CheckResult>,
}

impl IdentityReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn record(&mut self, name: impl Into<String>, pass: bool, detail: Option<String>) {
        self.checks.push(CheckResult {
            name: name.into(),
            pass,
            detail,
        });
    }

    /// Record one named check that passes iff every case passes; the first
    /// failing case is kept as the detail.
    pub fn check_all<I: IntoIterator<Item = (String, bool)>>(&mut self, name: &str, cases: I) {
        let mut pass = true;
        let mut detail = None;
        for (case, ok) in cases {
            if !ok {
                pass = false;
                detail = Some(format!("first failure at {}", case));
                break;
            }
        }
        self.record(name, pass, detail);
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(
                f,
                "{} {}{}",
                if c.pass { "PASS" } else { "FAIL" },
                c.name,
                c.detail.as_deref().map(|d| format!(" ({d})")).unwrap_or_default()
            )?;
        }
        Ok(())
    }
}

/// Sweep the standard identities for parameters up to `range`:
/// antisymmetry and bar-invariance of [a], positivity and exponent symmetry
/// of qbin, the g recursion, both Pascal rules, the two qbin/g ratio rules,
/// and the splitting g(p)g(r) = qbin(p+r,p)·q^{pr}·g(p+r).
pub fn check_qidentities(range: u32) -> IdentityReport {
    let r = range as i64;
    let mut rep = IdentityReport::default();

    rep.check_all(
        "qint antisymmetry [-a] = -[a]",
        (0..=r).map(|a| (format!("a={a}"), qint(-a) == -qint(a))),
    );
    rep.check_all(
        "qint bar-invariance bar([a]) = [a]",
        (-r..=r).map(|a| (format!("a={a}"), qint(a).bar() == qint(a))),
    );
    rep.check_all(
        "qbin nonneg coefficients and symmetric exponents for 0 <= j <= m",
        (0..=r).flat_map(|m| (0..=m as u32).map(move |j| (m, j))).map(|(m, j)| {
            let b = qbin(m, j);
            let sym = b.is_zero() || (b.min_exp() == b.max_exp().map(|e| -e));
            let bar_inv = b.bar() == b;
            (format!("m={m} j={j}"), b.coeffs_nonneg() && sym && bar_inv)
        }),
    );
    rep.check_all(
        "g recursion g(a+1) = g(a)/(1 - q^{2(a+1)})",
        (0..range).map(|a| {
            let lhs = g(a + 1);
            let step = RatFun::new(
                LaurentPoly::one(),
                &LaurentPoly::one() - &LaurentPoly::q(2 * (a as i64 + 1)),
            );
            (format!("a={a}"), lhs == &g(a) * &step)
        }),
    );
    rep.check_all(
        "pascal qbin(a+1,j) = q^{-j} qbin(a,j) + q^{a-j+1} qbin(a,j-1)",
        (-r..=r).flat_map(|a| (1..=range).map(move |j| (a, j))).map(|(a, j)| {
            let lhs = qbin(a + 1, j);
            let rhs = &qbin(a, j).shifted(-(j as i64))
                + &qbin(a, j - 1).shifted(a - j as i64 + 1);
            (format!("a={a} j={j}"), lhs == rhs)
        }),
    );
    rep.check_all(
        "pascal qbin(a+1,j) = q^{j} qbin(a,j) + q^{-a+j-1} qbin(a,j-1)",
        (-r..=r).flat_map(|a| (1..=range).map(move |j| (a, j))).map(|(a, j)| {
            let lhs = qbin(a + 1, j);
            let rhs = &qbin(a, j).shifted(j as i64)
                + &qbin(a, j - 1).shifted(-a + j as i64 - 1);
            (format!("a={a} j={j}"), lhs == rhs)
        }),
    );
    rep.check_all(
        "ratio qbin(m,j+1)/g(j+1) = q^{m+1}(q^{2(j-m)} - 1) qbin(m,j)/g(j)",
        (-r..=r).flat_map(|m| (0..range).map(move |j| (m, j))).map(|(m, j)| {
            let lhs = &RatFun::from_poly(qbin(m, j + 1)) / &g(j + 1);
            let factor = RatFun::from_poly(
                (&LaurentPoly::q(2 * (j as i64 - m)) - &LaurentPoly::one()).shifted(m + 1),
            );
            let rhs = &(&factor * &RatFun::from_poly(qbin(m, j))) / &g(j);
            (format!("m={m} j={j}"), lhs == rhs)
        }),
    );
    rep.check_all(
        "ratio qbin(m,j+1)/g(j+1) = q^{m+1+j}(q^{-2m} - 1) qbin(m-1,j)/g(j)",
        (-r..=r).flat_map(|m| (0..range).map(move |j| (m, j))).map(|(m, j)| {
            let lhs = &RatFun::from_poly(qbin(m, j + 1)) / &g(j + 1);
            let factor = RatFun::from_poly(
                (&LaurentPoly::q(-2 * m) - &LaurentPoly::one()).shifted(m + 1 + j as i64),
            );
            let rhs = &(&factor * &RatFun::from_poly(qbin(m - 1, j))) / &g(j);
            (format!("m={m} j={j}"), lhs == rhs)
        }),
    );
    rep.check_all(
        "splitting g(p)g(r) = qbin(p+r,p) q^{pr} g(p+r)",
        (0..=range).flat_map(|p| (0..=range).map(move |q_| (p, q_))).map(|(p, rr)| {
            let lhs = &g(p) * &g(rr);
            let rhs = &RatFun::from_poly(
                qbin((p + rr) as i64, p).shifted((p * rr) as i64),
            ) * &g(p + rr);
            (format!("p={p} r={rr}"), lhs == rhs)
        }),
    );
    rep
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn qint_values() {
        assert!(qint(0).is_zero());
        assert_eq!(qint(1), LaurentPoly::one());
        assert_eq!(qint(2), "q + q^-1".parse().unwrap());
        assert_eq!(qint(-2), "-q - q^-1".parse().unwrap());
    }

    #[test]
    fn qbin_values() {
        assert_eq!(qbin(-1, 1), LaurentPoly::from_int(-1));
        assert_eq!(qbin(2, 1), qint(2));
        assert_eq!(qbin(4, 2), "q^4 + q^2 + 2 + q^-2 + q^-4".parse().unwrap());
        assert!(qbin(1, 2).is_zero());
        assert_eq!(qbin(0, 0), LaurentPoly::one());
        // negative top: [-m choose j] = (-1)^j qbin(m+j-1, j) bar
        assert_eq!(qbin(-2, 1), -qint(2));
    }

    #[test]
    fn g_values() {
        assert_eq!(g(0), RatFun::one());
        let one_minus_q2: LaurentPoly = "1 - q^2".parse().unwrap();
        assert_eq!(g(1), RatFun::new(LaurentPoly::one(), one_minus_q2));
        // bar(g(1)) = 1/(1-q^{-2}) = -q^2/(1-q^2) in canonical form
        let b = g(1).bar();
        assert_eq!(b.num(), &"-q^2".parse().unwrap());
        assert_eq!(b.den(), &"1 - q^2".parse().unwrap());
    }

    #[test]
    fn identity_sweep() {
        let report = check_qidentities(6);
        assert!(report.all_pass(), "\n{report}");
    }
}
