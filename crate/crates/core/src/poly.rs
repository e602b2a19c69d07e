//! Sparse Laurent polynomials with integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// `Σ c_e x^e` stored as exponent → nonzero coefficient.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    terms: BTreeMap<i32, i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(1, 0)
    }

    pub fn monomial(coeff: i64, exp: i32) -> Self {
        let mut p = LaurentPoly::zero();
        p.add_term(coeff, exp);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i32, i64)>) -> Self {
        let mut p = LaurentPoly::zero();
        for (e, c) in terms {
            p.add_term(c, e);
        }
        p
    }

    pub fn add_term(&mut self, coeff: i64, exp: i32) {
        if coeff == 0 {
            return;
        }
        let entry = self.terms.entry(exp).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i32) -> i64 {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    /// Substitutes `x → x^-1`.
    pub fn mirror(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(&e, &c)| (-e, c)).collect() }
    }

    pub fn scale_exponents(&self, factor: i32) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(&e, &c)| (e * factor, c)).collect() }
    }

    /// Divides every exponent by `d`, if all are divisible.
    pub fn divide_exponents(&self, d: i32) -> Option<Self> {
        self.terms
            .iter()
            .map(|(&e, &c)| (e % d == 0).then_some((e / d, c)))
            .collect::<Option<BTreeMap<_, _>>>()
            .map(|terms| LaurentPoly { terms })
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(LaurentPoly::one(), |acc, _| &acc * self)
    }

    /// Value at `x = -1`.
    pub fn eval_at_minus_one(&self) -> i64 {
        self.terms.iter().map(|(&e, &c)| if e.rem_euclid(2) == 0 { c } else { -c }).sum()
    }

    /// Renders as `c*X^e` terms joined by `" + "`, ascending exponents.
    pub fn render(&self, var: &str) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        self.terms.iter().map(|(e, c)| format!("{c}*{var}^{e}")).collect::<Vec<_>>().join(" + ")
    }

    /// Parses the output of [`LaurentPoly::render`].
    pub fn parse_rendered(s: &str, var: &str) -> Option<Self> {
        let s = s.trim();
        if s == "0" {
            return Some(LaurentPoly::zero());
        }
        let mut p = LaurentPoly::zero();
        let sep = format!("*{var}^");
        for term in s.split(" + ") {
            let (c, e) = term.trim().split_once(&sep)?;
            p.add_term(c.parse().ok()?, e.parse().ok()?);
        }
        Some(p)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("A"))
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, &c) in &rhs.terms {
            out.add_term(c, e);
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(&e, &c)| (e, -c)).collect() }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&e1, &c1) in &self.terms {
            for (&e2, &c2) in &rhs.terms {
                out.add_term(c1 * c2, e1 + e2);
            }
        }
        out
    }
}
