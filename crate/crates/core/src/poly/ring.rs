use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::field::PrimeField;
use super::monomial::{Monomial, MAX_VARS};
use super::order::MonomialOrder;
use super::polynomial::Polynomial;
use crate::error::{Error, Result};

/// `S = F_p[x_1..x_n, y_1..y_n]`, optionally extended by auxiliary variables
/// `t_1..t_aux` that sort after `y_n` in the variable indexing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Ring {
    n: usize,
    #[serde(default)]
    aux: usize,
    #[serde(rename = "char")]
    field: PrimeField,
}

impl Ring {
    pub fn new(n: usize, field: PrimeField) -> Result<Self> {
        Ring { n, aux: 0, field }.checked()
    }

    /// The default ring over `F_32003`.
    pub fn standard(n: usize) -> Self {
        Ring::new(n, PrimeField::default()).expect("vertex count within variable budget")
    }

    fn checked(self) -> Result<Self> {
        if self.nvars() > MAX_VARS {
            return Err(Error::Capacity {
                what: "ring variable count",
                got: self.nvars(),
                ceiling: MAX_VARS,
            });
        }
        Ok(self)
    }

    pub fn with_aux(self, aux: usize) -> Result<Self> {
        Ring { aux, ..self }.checked()
    }

    /// Same `n` and field, no auxiliary variables.
    pub fn base(self) -> Self {
        Ring { aux: 0, ..self }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn aux(&self) -> usize {
        self.aux
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn nvars(&self) -> usize {
        2 * self.n + self.aux
    }

    /// Index of `x_i`, `1 <= i <= n`.
    pub fn x(&self, i: usize) -> usize {
        debug_assert!((1..=self.n).contains(&i));
        i - 1
    }

    /// Index of `y_i`, `1 <= i <= n`.
    pub fn y(&self, i: usize) -> usize {
        debug_assert!((1..=self.n).contains(&i));
        self.n + i - 1
    }

    pub fn var(&self, index: usize) -> Polynomial {
        Polynomial::monomial(1, Monomial::var(index))
    }

    /// `f_ij = x_i y_j - x_j y_i`.
    pub fn minor(&self, i: usize, j: usize) -> Polynomial {
        let a = Monomial::var(self.x(i)) * Monomial::var(self.y(j));
        let b = Monomial::var(self.x(j)) * Monomial::var(self.y(i));
        Polynomial::from_terms(self.field, [(a, 1), (b, self.field.neg(1))], MonomialOrder::DegRevLex)
    }

    pub fn var_name(&self, index: usize) -> String {
        if index < self.n {
            format!("x{}", index + 1)
        } else if index < 2 * self.n {
            format!("y{}", index - self.n + 1)
        } else {
            format!("t{}", index - 2 * self.n + 1)
        }
    }

    fn var_index(&self, name: &str) -> Option<usize> {
        let (kind, rest) = name.split_at(1);
        let k: usize = rest.parse().ok()?;
        match kind {
            "x" if (1..=self.n).contains(&k) => Some(k - 1),
            "y" if (1..=self.n).contains(&k) => Some(self.n + k - 1),
            "t" if (1..=self.aux).contains(&k) => Some(2 * self.n + k - 1),
            _ => None,
        }
    }

    /// Renders `c*x1^a*y3^b` terms, listed in lex order.
    pub fn format_poly(&self, f: &Polynomial) -> String {
        if f.is_zero() {
            return "0".into();
        }
        let f = f.clone().resorted(MonomialOrder::Lex);
        let mut out = String::new();
        for (k, t) in f.terms().iter().enumerate() {
            let c = self.field.to_signed(t.coeff);
            let (neg, mag) = (c < 0, c.unsigned_abs());
            match (k, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let mut factors = Vec::new();
            if mag != 1 || t.mono.is_one() {
                factors.push(mag.to_string());
            }
            for v in 0..self.nvars() {
                match t.mono.exponent(v) {
                    0 => {}
                    1 => factors.push(self.var_name(v)),
                    e => factors.push(format!("{}^{}", self.var_name(v), e)),
                }
            }
            let _ = write!(out, "{}", factors.join("*"));
        }
        out
    }

    /// Parses the output of [`Ring::format_poly`] (and minor variations:
    /// arbitrary spacing, repeated factors, coefficients anywhere in a term).
    pub fn parse_poly(&self, text: &str) -> Result<Polynomial> {
        let err = |column: usize, msg: String| Error::Parse { line: 1, column, msg };
        let s: Vec<(usize, char)> = text.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(err(1, "empty polynomial".into()));
        }
        let mut terms = Vec::new();
        let mut i = 0;
        while i < s.len() {
            let mut sign = 1i64;
            while i < s.len() && (s[i].1 == '+' || s[i].1 == '-') {
                if s[i].1 == '-' {
                    sign = -sign;
                }
                i += 1;
            }
            let start = i;
            while i < s.len() && s[i].1 != '+' && s[i].1 != '-' {
                i += 1;
            }
            if start == i {
                return Err(err(s.get(start).map_or(text.len(), |c| c.0) + 1, "missing term".into()));
            }
            let mut coeff = self.field.from_i64(sign);
            let mut mono = Monomial::one();
            let token: String = s[start..i].iter().map(|c| c.1).collect();
            let col = s[start].0 + 1;
            for factor in token.split('*') {
                if factor.is_empty() {
                    return Err(err(col, format!("empty factor in {token:?}")));
                }
                if factor.chars().all(|c| c.is_ascii_digit()) {
                    let v: i64 = factor.parse().map_err(|_| err(col, format!("bad coefficient {factor:?}")))?;
                    coeff = self.field.mul(coeff, self.field.from_i64(v));
                    continue;
                }
                let (name, exp) = match factor.split_once('^') {
                    Some((n, e)) => (n, e.parse::<u32>().map_err(|_| err(col, format!("bad exponent in {factor:?}")))?),
                    None => (factor, 1),
                };
                let v = self
                    .var_index(name)
                    .ok_or_else(|| err(col, format!("unknown variable {name:?}")))?;
                if exp > super::monomial::DEGREE_CAP || mono.degree() + exp > super::monomial::DEGREE_CAP {
                    return Err(err(col, "degree cap exceeded".into()));
                }
                mono = mono * Monomial::var_pow(v, exp);
            }
            terms.push((mono, coeff));
        }
        Ok(Polynomial::from_terms(self.field, terms, MonomialOrder::DegRevLex))
    }
}
