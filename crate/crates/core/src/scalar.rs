//! Exact scalars.
//!
//! Every scalar is a quotient of two univariate polynomials whose coefficients
//! are Gaussian rationals. Plain rationals are constant polynomials with zero
//! imaginary part and ℚ(i) elements are constant polynomials. Which of these
//! fields a structure lives in is recorded by a [`Field`] descriptor carried
//! by the structure, not by each scalar.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("symbol `{0}` is not allowed in this field")]
    WrongSymbol(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at the substitution point")]
    Pole,
    #[error("scalar is not a field constant")]
    NotConstant,
}

/// Which exact field a structure works over.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    Rational,
    Gaussian,
    /// Rational functions in `param`, with Gaussian coefficients when `gaussian`.
    Function { param: String, gaussian: bool },
}

impl Field {
    pub fn function(param: &str) -> Field {
        Field::Function { param: param.to_string(), gaussian: false }
    }

    pub fn gaussian_function(param: &str) -> Field {
        Field::Function { param: param.to_string(), gaussian: true }
    }

    pub fn param(&self) -> Option<&str> {
        match self {
            Field::Function { param, .. } => Some(param),
            _ => None,
        }
    }

    pub fn allows_i(&self) -> bool {
        matches!(self, Field::Gaussian | Field::Function { gaussian: true, .. })
    }

    /// Parse descriptors such as `Q`, `Q(i)`, `Q(q)`, `Q(i)(kappa)`.
    pub fn parse(text: &str) -> Result<Field, ScalarError> {
        let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || ScalarError::Syntax { pos: 0, msg: format!("unknown field `{text}`") };
        let rest = t.strip_prefix('Q').or_else(|| t.strip_prefix('ℚ')).ok_or_else(bad)?;
        if rest.is_empty() {
            return Ok(Field::Rational);
        }
        let (gaussian, rest) = match rest.strip_prefix("(i)") {
            Some(r) => (true, r),
            None => (false, rest),
        };
        if rest.is_empty() {
            return if gaussian { Ok(Field::Gaussian) } else { Err(bad()) };
        }
        let inner = rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')).ok_or_else(bad)?;
        if inner.is_empty() || inner == "i" || !inner.chars().all(|c| c.is_alphanumeric() || c == '_') {
            return Err(bad());
        }
        Ok(Field::Function { param: inner.to_string(), gaussian })
    }

    /// Whether every scalar of `self` is also a scalar of `other`.
    pub fn embeds_in(&self, other: &Field) -> bool {
        match (self, other) {
            (Field::Rational, _) => true,
            (Field::Gaussian, f) => f.allows_i(),
            (Field::Function { param: a, gaussian: g }, Field::Function { param: b, gaussian: h }) => {
                a == b && (!g || *h)
            }
            _ => false,
        }
    }

    /// Check that a scalar only uses symbols this field provides.
    pub fn admits(&self, s: &Scalar) -> bool {
        if !self.allows_i() && s.has_imaginary() {
            return false;
        }
        self.param().is_some() || s.is_constant()
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Gaussian => write!(f, "Q(i)"),
            Field::Function { param, gaussian: false } => write!(f, "Q({param})"),
            Field::Function { param, gaussian: true } => write!(f, "Q(i)({param})"),
        }
    }
}

/// A Gaussian rational `re + im·i`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Gauss {
    pub re: BigRational,
    pub im: BigRational,
}

impl Gauss {
    pub fn zero() -> Gauss {
        Gauss { re: BigRational::zero(), im: BigRational::zero() }
    }
    pub fn one() -> Gauss {
        Gauss { re: BigRational::one(), im: BigRational::zero() }
    }
    pub fn i() -> Gauss {
        Gauss { re: BigRational::zero(), im: BigRational::one() }
    }
    pub fn real(re: BigRational) -> Gauss {
        Gauss { re, im: BigRational::zero() }
    }
    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }
    pub fn add(&self, o: &Gauss) -> Gauss {
        Gauss { re: &self.re + &o.re, im: &self.im + &o.im }
    }
    pub fn sub(&self, o: &Gauss) -> Gauss {
        Gauss { re: &self.re - &o.re, im: &self.im - &o.im }
    }
    pub fn mul(&self, o: &Gauss) -> Gauss {
        if self.im.is_zero() && o.im.is_zero() {
            return Gauss::real(&self.re * &o.re);
        }
        Gauss {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
    pub fn neg(&self) -> Gauss {
        Gauss { re: -&self.re, im: -&self.im }
    }
    pub fn inv(&self) -> Gauss {
        if self.im.is_zero() {
            return Gauss::real(self.re.recip());
        }
        let n = &self.re * &self.re + &self.im * &self.im;
        Gauss { re: &self.re / &n, im: -&self.im / &n }
    }
}

/// Dense univariate polynomial, low degree first, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
struct Poly(Vec<Gauss>);

impl Poly {
    fn zero() -> Poly {
        Poly(Vec::new())
    }
    fn constant(c: Gauss) -> Poly {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly(vec![c])
        }
    }
    fn one() -> Poly {
        Poly(vec![Gauss::one()])
    }
    fn trim(mut self) -> Poly {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
        self
    }
    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
    fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0[0].is_one()
    }
    fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }
    fn lead(&self) -> &Gauss {
        self.0.last().expect("lead of zero polynomial")
    }
    fn add(&self, o: &Poly) -> Poly {
        let n = self.0.len().max(o.0.len());
        let z = Gauss::zero();
        let v = (0..n)
            .map(|k| self.0.get(k).unwrap_or(&z).add(o.0.get(k).unwrap_or(&z)))
            .collect();
        Poly(v).trim()
    }
    fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        if o.is_one() {
            return self.clone();
        }
        if self.is_one() {
            return o.clone();
        }
        let mut v = vec![Gauss::zero(); self.0.len() + o.0.len() - 1];
        for (a, x) in self.0.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (b, y) in o.0.iter().enumerate() {
                if !y.is_zero() {
                    v[a + b] = v[a + b].add(&x.mul(y));
                }
            }
        }
        Poly(v).trim()
    }
    fn scale(&self, c: &Gauss) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly(self.0.iter().map(|x| x.mul(c)).collect())
    }
    fn neg(&self) -> Poly {
        Poly(self.0.iter().map(Gauss::neg).collect())
    }
    fn divrem(&self, d: &Poly) -> (Poly, Poly) {
        let inv = d.lead().inv();
        let mut r = self.0.clone();
        let dd = d.degree();
        if self.0.len() < d.0.len() {
            return (Poly::zero(), self.clone());
        }
        let mut q = vec![Gauss::zero(); self.0.len() - dd];
        for k in (dd..r.len()).rev() {
            if r[k].is_zero() {
                continue;
            }
            let c = r[k].mul(&inv);
            for (j, y) in d.0.iter().enumerate() {
                r[k - dd + j] = r[k - dd + j].sub(&c.mul(y));
            }
            q[k - dd] = c;
        }
        r.truncate(dd);
        (Poly(q).trim(), Poly(r).trim())
    }
    fn exact_div(&self, d: &Poly) -> Poly {
        if d.is_one() {
            return self.clone();
        }
        self.divrem(d).0
    }
    fn monic(&self) -> Poly {
        if self.is_zero() || self.lead().is_one() {
            return self.clone();
        }
        self.scale(&self.lead().inv())
    }
    fn gcd(&self, o: &Poly) -> Poly {
        if self.is_zero() {
            return o.monic();
        }
        if o.is_zero() {
            return self.monic();
        }
        if self.degree() == 0 || o.degree() == 0 {
            return Poly::one();
        }
        let (mut a, mut b) = if self.degree() >= o.degree() {
            (self.clone(), o.clone())
        } else {
            (o.clone(), self.clone())
        };
        while !b.is_zero() {
            let r = a.divrem(&b).1.monic();
            a = b;
            b = r;
        }
        a.monic()
    }
    fn eval(&self, x: &Gauss) -> Gauss {
        let mut acc = Gauss::zero();
        for c in self.0.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }
    fn has_imaginary(&self) -> bool {
        self.0.iter().any(|c| !c.im.is_zero())
    }
}

/// Canonical exact scalar: `num/den` with `den` monic and coprime to `num`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    num: Poly,
    den: Poly,
}

impl Scalar {
    pub fn zero() -> Scalar {
        Scalar { num: Poly::zero(), den: Poly::one() }
    }
    pub fn one() -> Scalar {
        Scalar::from_gauss(Gauss::one())
    }
    pub fn from_i64(n: i64) -> Scalar {
        Scalar::from_gauss(Gauss::real(BigRational::from_integer(n.into())))
    }
    pub fn ratio(n: i64, d: i64) -> Scalar {
        assert!(d != 0, "zero denominator");
        Scalar::from_gauss(Gauss::real(BigRational::new(n.into(), d.into())))
    }
    pub fn from_rational(r: BigRational) -> Scalar {
        Scalar::from_gauss(Gauss::real(r))
    }
    pub fn from_gauss(c: Gauss) -> Scalar {
        Scalar { num: Poly::constant(c), den: Poly::one() }
    }
    /// The imaginary unit.
    pub fn i() -> Scalar {
        Scalar::from_gauss(Gauss::i())
    }
    /// The formal parameter of a function field.
    pub fn var() -> Scalar {
        Scalar { num: Poly(vec![Gauss::zero(), Gauss::one()]), den: Poly::one() }
    }
    /// `var()^n` for any integer `n`.
    pub fn var_pow(n: i64) -> Scalar {
        let mono = |k: usize| {
            let mut v = vec![Gauss::zero(); k];
            v.push(Gauss::one());
            Poly(v)
        };
        if n >= 0 {
            Scalar { num: mono(n as usize), den: Poly::one() }
        } else {
            Scalar { num: Poly::one(), den: mono((-n) as usize) }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }
    pub fn is_constant(&self) -> bool {
        self.num.0.len() <= 1 && self.den.is_one()
    }
    pub fn has_imaginary(&self) -> bool {
        self.num.has_imaginary() || self.den.has_imaginary()
    }
    /// The value as a Gaussian rational when the scalar is constant.
    pub fn as_gauss(&self) -> Option<Gauss> {
        if !self.is_constant() {
            return None;
        }
        Some(self.num.0.first().cloned().unwrap_or_else(Gauss::zero))
    }
    /// The value as a rational when the scalar is a real constant.
    pub fn as_rational(&self) -> Option<BigRational> {
        self.as_gauss().filter(|g| g.im.is_zero()).map(|g| g.re)
    }

    pub fn neg(&self) -> Scalar {
        Scalar { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn inv(&self) -> Result<Scalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let lc = self.num.lead().inv();
        Ok(Scalar { num: self.den.scale(&lc), den: self.num.scale(&lc) })
    }

    pub fn pow(&self, e: i64) -> Result<Scalar, ScalarError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut n = e.unsigned_abs();
        let mut acc = Scalar::one();
        let mut sq = base;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &sq;
            }
            n >>= 1;
            if n > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// Substitute a constant for the parameter.
    pub fn specialize(&self, value: &Scalar) -> Result<Scalar, ScalarError> {
        let x = value.as_gauss().ok_or(ScalarError::NotConstant)?;
        let d = self.den.eval(&x);
        if d.is_zero() {
            return Err(ScalarError::Pole);
        }
        Ok(Scalar::from_gauss(self.num.eval(&x).mul(&d.inv())))
    }

    /// Render with the parameter printed as `param`. The output parses back.
    pub fn render(&self, param: &str) -> String {
        let n = render_poly(&self.num, param);
        if self.den.is_one() {
            return n;
        }
        let d = render_poly(&self.den, param);
        let wrap = |s: String, p: &Poly| {
            if p.0.iter().filter(|c| !c.is_zero()).count() > 1 || s.starts_with('-') || s.contains('/') {
                format!("({s})")
            } else {
                s
            }
        };
        let dwrap = if self.den.0.iter().filter(|c| !c.is_zero()).count() == 1 && !d.contains(['/', '*', '+', '-']) {
            d
        } else {
            format!("({d})")
        };
        format!("{}/{}", wrap(n, &self.num), dwrap)
    }
}

fn render_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn render_gauss(c: &Gauss) -> String {
    match (c.re.is_zero(), c.im.is_zero()) {
        (_, true) => render_rational(&c.re),
        (true, false) => {
            if c.im.is_one() {
                "i".into()
            } else if (-&c.im).is_one() {
                "-i".into()
            } else {
                format!("{}*i", render_rational(&c.im))
            }
        }
        (false, false) => {
            let im = if c.im.is_negative() {
                format!(" - {}", render_gauss(&Gauss { re: BigRational::zero(), im: -&c.im }))
            } else {
                format!(" + {}", render_gauss(&Gauss { re: BigRational::zero(), im: c.im.clone() }))
            };
            format!("({}{})", render_rational(&c.re), im)
        }
    }
}

fn render_poly(p: &Poly, param: &str) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, c) in p.0.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.im.is_zero() && c.re.is_negative();
        let mag = if neg { c.neg() } else { c.clone() };
        let coeff = render_gauss(&mag);
        let mono = match k {
            0 => String::new(),
            1 => param.to_string(),
            _ => format!("{param}^{k}"),
        };
        let term = if mono.is_empty() {
            coeff
        } else if mag.is_one() {
            mono
        } else {
            format!("{coeff}*{mono}")
        };
        if out.is_empty() {
            out = if neg { format!("-{term}") } else { term };
        } else {
            out.push_str(if neg { " - " } else { " + " });
            out.push_str(&term);
        }
    }
    out
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render("q"))
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render("t"))
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && o.den.is_one() {
            return Scalar { num: self.num.add(&o.num), den: Poly::one() };
        }
        // Henrici: only gcd(n, g) can cancel
        let g = self.den.gcd(&o.den);
        let (b1, d1) = (self.den.exact_div(&g), o.den.exact_div(&g));
        let n = self.num.mul(&d1).add(&o.num.mul(&b1));
        if n.is_zero() {
            return Scalar::zero();
        }
        let h = n.gcd(&g);
        let den = self.den.mul(&d1);
        if h.is_one() {
            Scalar::make_monic(n, den)
        } else {
            Scalar::make_monic(n.exact_div(&h), den.exact_div(&h))
        }
    }
}

impl Scalar {
    fn make_monic(num: Poly, den: Poly) -> Scalar {
        if den.lead().is_one() {
            Scalar { num, den }
        } else {
            let inv = den.lead().inv();
            Scalar { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        self + &o.neg()
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        if self.is_zero() || o.is_zero() {
            return Scalar::zero();
        }
        if self.is_one() {
            return o.clone();
        }
        if o.is_one() {
            return self.clone();
        }
        if self.den.is_one() && o.den.is_one() {
            return Scalar { num: self.num.mul(&o.num), den: Poly::one() };
        }
        let g1 = self.num.gcd(&o.den);
        let g2 = o.num.gcd(&self.den);
        let num = self.num.exact_div(&g1).mul(&o.num.exact_div(&g2));
        let den = self.den.exact_div(&g2).mul(&o.den.exact_div(&g1));
        Scalar::make_monic(num, den)
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, o: &Scalar) -> Scalar {
        self * &o.inv().expect("division by zero scalar")
    }
}

impl<'a> Neg for &'a Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(self)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                <&Scalar as $tr<&Scalar>>::$m(&self, &o)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                <&Scalar as $tr<&Scalar>>::$m(&self, o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(&self)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Scalar {
        Scalar::from_i64(n)
    }
}

/// Values an arithmetic expression can evaluate to.
pub trait ExprValue: Clone {
    fn from_int(n: BigInt) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn div(&self, o: &Self) -> Result<Self, String>;
    fn pow(&self, e: i64) -> Result<Self, String>;
}

impl ExprValue for Scalar {
    fn from_int(n: BigInt) -> Self {
        Scalar::from_rational(BigRational::from_integer(n))
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        Scalar::neg(self)
    }
    fn div(&self, o: &Self) -> Result<Self, String> {
        Ok(self * &o.inv().map_err(|e| e.to_string())?)
    }
    fn pow(&self, e: i64) -> Result<Self, String> {
        Scalar::pow(self, e).map_err(|e| e.to_string())
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Bracket(String),
    Op(char),
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, ScalarError> {
    let mut out = Vec::new();
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut k = 0;
    while k < chars.len() {
        let (pos, c) = chars[k];
        if c.is_whitespace() {
            k += 1;
        } else if c.is_ascii_digit() {
            let mut j = k;
            while j < chars.len() && chars[j].1.is_ascii_digit() {
                j += 1;
            }
            let s: String = chars[k..j].iter().map(|x| x.1).collect();
            out.push((pos, Tok::Int(s.parse().expect("digits"))));
            k = j;
        } else if c.is_alphabetic() || c == '_' {
            let mut j = k;
            while j < chars.len() && (chars[j].1.is_alphanumeric() || chars[j].1 == '_' || chars[j].1 == '\'') {
                j += 1;
            }
            out.push((pos, Tok::Ident(chars[k..j].iter().map(|x| x.1).collect())));
            k = j;
        } else if c == '[' {
            let mut j = k + 1;
            let mut depth = 1;
            while j < chars.len() && depth > 0 {
                match chars[j].1 {
                    '[' => depth += 1,
                    ']' => depth -= 1,
                    _ => {}
                }
                j += 1;
            }
            if depth != 0 {
                return Err(ScalarError::Syntax { pos, msg: "unclosed `[`".into() });
            }
            out.push((pos, Tok::Bracket(chars[k + 1..j - 1].iter().map(|x| x.1).collect())));
            k = j;
        } else if "+-*/^()".contains(c) {
            out.push((pos, Tok::Op(c)));
            k += 1;
        } else if c == '·' {
            out.push((pos, Tok::Op('*')));
            k += 1;
        } else {
            return Err(ScalarError::Syntax { pos, msg: format!("unexpected `{c}`") });
        }
    }
    Ok(out)
}

/// Recursive-descent evaluator shared by scalar and vector parsers.
///
/// `atom` resolves identifiers and bracketed labels `[...]`; it returns
/// `None` for unknown names.
pub fn parse_expr<V, F>(text: &str, atom: F) -> Result<V, ScalarError>
where
    V: ExprValue,
    F: Fn(&str, bool) -> Option<Result<V, String>>,
{
    let toks = tokenize(text)?;
    let mut p = Parser { toks, pos: 0, atom, end: text.len(), _v: std::marker::PhantomData };
    let v = p.expr()?;
    if p.pos < p.toks.len() {
        return Err(ScalarError::Syntax { pos: p.toks[p.pos].0, msg: "trailing input".into() });
    }
    Ok(v)
}

struct Parser<V, F> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    atom: F,
    end: usize,
    _v: std::marker::PhantomData<V>,
}

impl<V: ExprValue, F: Fn(&str, bool) -> Option<Result<V, String>>> Parser<V, F> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.1)
    }
    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|t| t.0).unwrap_or(self.end)
    }
    fn err<T>(&self, msg: &str) -> Result<T, ScalarError> {
        Err(ScalarError::Syntax { pos: self.here(), msg: msg.to_string() })
    }
    fn expr(&mut self) -> Result<V, ScalarError> {
        let mut acc = match self.peek() {
            Some(Tok::Op('-')) => {
                self.pos += 1;
                self.term()?.neg()
            }
            Some(Tok::Op('+')) => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        while let Some(Tok::Op(c @ ('+' | '-'))) = self.peek() {
            let c = *c;
            self.pos += 1;
            let t = self.term()?;
            acc = if c == '+' { acc.add(&t) } else { acc.sub(&t) };
        }
        Ok(acc)
    }
    fn term(&mut self) -> Result<V, ScalarError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Op('*')) => {
                    self.pos += 1;
                    acc = acc.mul(&self.unary()?);
                }
                Some(Tok::Op('/')) => {
                    self.pos += 1;
                    let at = self.here();
                    let d = self.unary()?;
                    acc = acc.div(&d).map_err(|m| {
                        if m.contains("zero") {
                            ScalarError::DivisionByZero
                        } else {
                            ScalarError::Syntax { pos: at, msg: m }
                        }
                    })?;
                }
                Some(Tok::Int(_)) | Some(Tok::Ident(_)) | Some(Tok::Bracket(_)) | Some(Tok::Op('(')) => {
                    acc = acc.mul(&self.power()?);
                }
                _ => return Ok(acc),
            }
        }
    }
    fn unary(&mut self) -> Result<V, ScalarError> {
        if let Some(Tok::Op('-')) = self.peek() {
            self.pos += 1;
            return Ok(self.unary()?.neg());
        }
        self.power()
    }
    fn power(&mut self) -> Result<V, ScalarError> {
        let base = self.atom()?;
        if let Some(Tok::Op('^')) = self.peek() {
            self.pos += 1;
            let at = self.here();
            let e = self.exponent()?;
            return base.pow(e).map_err(|m| {
                if m.contains("zero") {
                    ScalarError::DivisionByZero
                } else {
                    ScalarError::Syntax { pos: at, msg: m }
                }
            });
        }
        Ok(base)
    }
    fn exponent(&mut self) -> Result<i64, ScalarError> {
        let paren = matches!(self.peek(), Some(Tok::Op('(')));
        if paren {
            self.pos += 1;
        }
        let neg = match self.peek() {
            Some(Tok::Op('-')) => {
                self.pos += 1;
                true
            }
            Some(Tok::Op('+')) => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let n = match self.peek() {
            Some(Tok::Int(n)) => n.to_i64(),
            _ => return self.err("expected integer exponent"),
        };
        let Some(n) = n else { return self.err("exponent too large") };
        self.pos += 1;
        if paren {
            if self.peek() != Some(&Tok::Op(')')) {
                return self.err("expected `)`");
            }
            self.pos += 1;
        }
        Ok(if neg { -n } else { n })
    }
    fn atom(&mut self) -> Result<V, ScalarError> {
        let Some(t) = self.peek().cloned() else { return self.err("unexpected end of input") };
        let at = self.here();
        match t {
            Tok::Int(n) => {
                self.pos += 1;
                Ok(V::from_int(n))
            }
            Tok::Op('(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(&Tok::Op(')')) {
                    return self.err("expected `)`");
                }
                self.pos += 1;
                Ok(v)
            }
            Tok::Ident(name) => {
                self.pos += 1;
                match (self.atom)(&name, false) {
                    Some(r) => r.map_err(|m| ScalarError::Syntax { pos: at, msg: m }),
                    None => Err(ScalarError::WrongSymbol(name)),
                }
            }
            Tok::Bracket(inner) => {
                self.pos += 1;
                match (self.atom)(&inner, true) {
                    Some(r) => r.map_err(|m| ScalarError::Syntax { pos: at, msg: m }),
                    None => Err(ScalarError::WrongSymbol(format!("[{inner}]"))),
                }
            }
            Tok::Op(c) => self.err(&format!("unexpected `{c}`")),
        }
    }
}

/// Resolve the scalar symbols `i` and the field parameter.
pub fn scalar_atom(field: &Field, name: &str) -> Option<Scalar> {
    if name == "i" && field.allows_i() {
        return Some(Scalar::i());
    }
    if field.param() == Some(name) {
        return Some(Scalar::var());
    }
    None
}

pub fn parse_scalar(text: &str, field: &Field) -> Result<Scalar, ScalarError> {
    parse_expr(text, |name, bracket| if bracket { None } else { scalar_atom(field, name).map(Ok) })
}

/// Render a scalar in the notation of `field`.
pub fn render(s: &Scalar, field: &Field) -> String {
    s.render(field.param().unwrap_or("t"))
}

/// Rational helper used throughout tests and builders.
pub fn rat(n: i64, d: i64) -> Scalar {
    Scalar::ratio(n, d)
}

/// Small integer check, used by reports.
pub fn as_small_int(s: &Scalar) -> Option<i64> {
    let r = s.as_rational()?;
    if r.is_integer() {
        r.numer().to_i64()
    } else {
        None
    }
}
