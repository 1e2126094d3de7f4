//! Exact coefficient rings: arbitrary-precision rationals and multivariate
//! Laurent polynomials over them.
//!
//! A [`LaurentPoly`] carries its variable [`Context`] so that entries of a
//! matrix can be printed, parsed and evaluated without outside bookkeeping.
//! Terms live in a `BTreeMap` keyed by dense exponent vectors, which keeps the
//! lexicographic canonical order for free.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Exact rational number, always in lowest terms with positive denominator.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("incompatible variable contexts [{0}] and [{1}]")]
    Context(String, String),
    #[error("variable `{0}` is not assigned")]
    Unassigned(String),
    #[error("`{0}` is not a unit of the Laurent ring")]
    NotAUnit(String),
    #[error("variable `{0}` specialized to zero")]
    ZeroSpecialization(String),
    #[error("`{0}` is not divisible by `{1}`")]
    NotDivisible(String, String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

/// Parses `p`, `-p` or `p/q`.
pub fn parse_rational(s: &str) -> Result<Rational, RingError> {
    let s = s.trim();
    let bad = |msg: &str| RingError::Parse {
        pos: 0,
        msg: format!("{msg}: `{s}`"),
    };
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad("invalid numerator"))?;
    let den: BigInt = den.parse().map_err(|_| bad("invalid denominator"))?;
    if den.is_zero() {
        return Err(bad("zero denominator"));
    }
    Ok(Rational::new(num, den))
}

pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn integer(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Ordered list of variable names shared by a family of polynomials.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Context(Arc<[String]>);

impl Context {
    pub fn new<I, S>(names: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Context(names.into_iter().map(Into::into).collect())
    }

    /// Context `prefix1, …, prefixN`.
    pub fn indexed(prefix: &str, n: usize) -> Self {
        Context::new((1..=n).map(|i| format!("{prefix}{i}")))
    }

    pub fn empty() -> Self {
        Context::default()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|v| v == name)
    }

    /// Concatenation; fails if a name occurs in both.
    pub fn concat(&self, other: &Context) -> Result<Context, RingError> {
        if self.0.iter().any(|v| other.index_of(v).is_some()) {
            return Err(RingError::Context(self.to_string(), other.to_string()));
        }
        Ok(Context::new(self.0.iter().chain(other.0.iter()).cloned()))
    }

    fn is_subset_of(&self, other: &Context) -> bool {
        self.0.iter().all(|v| other.index_of(v).is_some())
    }
}

impl fmt::Display for Context {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.join(", "))
    }
}

impl fmt::Debug for Context {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Context[{self}]")
    }
}

/// Element of `Q[x_1^{±1}, …, x_k^{±1}]`.
#[derive(Clone)]
pub struct LaurentPoly {
    ctx: Context,
    terms: BTreeMap<Vec<i32>, Rational>,
}

impl LaurentPoly {
    pub fn zero(ctx: &Context) -> Self {
        LaurentPoly {
            ctx: ctx.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ctx: &Context, c: Rational) -> Self {
        Self::monomial(ctx, c, vec![0; ctx.len()])
    }

    pub fn one(ctx: &Context) -> Self {
        Self::constant(ctx, Rational::one())
    }

    /// `c · x^exps`; the exponent vector must have one slot per variable.
    pub fn monomial(ctx: &Context, c: Rational, exps: Vec<i32>) -> Self {
        assert_eq!(exps.len(), ctx.len(), "exponent vector length");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        LaurentPoly {
            ctx: ctx.clone(),
            terms,
        }
    }

    /// The variable `name` to the power `exp`.
    pub fn var_pow(ctx: &Context, name: &str, exp: i32) -> Result<Self, RingError> {
        let idx = ctx
            .index_of(name)
            .ok_or_else(|| RingError::Context(name.to_string(), ctx.to_string()))?;
        let mut exps = vec![0; ctx.len()];
        exps[idx] = exp;
        Ok(Self::monomial(ctx, Rational::one(), exps))
    }

    pub fn var(ctx: &Context, name: &str) -> Result<Self, RingError> {
        Self::var_pow(ctx, name, 1)
    }

    pub fn context(&self) -> &Context {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical (lexicographic exponent) order.
    pub fn terms(&self) -> impl Iterator<Item = (&[i32], &Rational)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    /// The value if this is a constant polynomial (including zero).
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                e.iter().all(|&x| x == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    /// Re-expresses the polynomial over a context containing all its variables.
    pub fn with_context(&self, target: &Context) -> Result<Self, RingError> {
        if &self.ctx == target {
            return Ok(self.clone());
        }
        let mut map = Vec::with_capacity(self.ctx.len());
        for name in self.ctx.names() {
            let idx = target
                .index_of(name)
                .ok_or_else(|| RingError::Context(self.ctx.to_string(), target.to_string()))?;
            map.push(idx);
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut out = vec![0; target.len()];
                for (slot, &x) in map.iter().zip(e) {
                    out[*slot] = x;
                }
                (out, c.clone())
            })
            .collect();
        Ok(LaurentPoly {
            ctx: target.clone(),
            terms,
        })
    }

    /// Brings two operands into one context. Identical contexts pass
    /// through; otherwise the smaller variable set must embed in the larger.
    fn unify(&self, other: &Self) -> Result<(Self, Self), RingError> {
        if self.ctx == other.ctx {
            return Ok((self.clone(), other.clone()));
        }
        if self.ctx.is_subset_of(&other.ctx) {
            Ok((self.with_context(&other.ctx)?, other.clone()))
        } else if other.ctx.is_subset_of(&self.ctx) {
            Ok((self.clone(), other.with_context(&self.ctx)?))
        } else {
            Err(RingError::Context(
                self.ctx.to_string(),
                other.ctx.to_string(),
            ))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, RingError> {
        let (mut a, b) = self.unify(other)?;
        for (e, c) in b.terms {
            a.add_term(e, c);
        }
        Ok(a)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, RingError> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, RingError> {
        let (a, b) = self.unify(other)?;
        let mut out = LaurentPoly::zero(&a.ctx);
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let e = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, k: &Rational) -> Self {
        if k.is_zero() {
            return LaurentPoly::zero(&self.ctx);
        }
        LaurentPoly {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = LaurentPoly::one(&self.ctx);
        for _ in 0..k {
            acc = acc.try_mul(self).expect("same context");
        }
        acc
    }

    fn add_term(&mut self, e: Vec<i32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// Inverse of a single-term polynomial.
    pub fn unit_inverse(&self) -> Result<Self, RingError> {
        if self.terms.len() != 1 {
            return Err(RingError::NotAUnit(self.to_string()));
        }
        let (e, c) = self.terms.iter().next().unwrap();
        Ok(LaurentPoly::monomial(
            &self.ctx,
            c.recip(),
            e.iter().map(|x| -x).collect(),
        ))
    }

    /// Exact quotient `self / divisor`, failing when the division leaves a
    /// remainder.
    ///
    /// Both operands are shifted to honest polynomials with no monomial
    /// factor; a Laurent quotient then has to be a polynomial, and lex
    /// division by a single divisor has zero remainder iff it divides.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self, RingError> {
        let (a, b) = self.unify(divisor)?;
        if b.is_zero() {
            return Err(RingError::NotDivisible(a.to_string(), b.to_string()));
        }
        if b.terms.len() == 1 {
            return a.try_mul(&b.unit_inverse()?);
        }
        if a.is_zero() {
            return Ok(a);
        }
        let k = a.ctx.len();
        let a_shift = a.min_exponents();
        let b_shift = b.min_exponents();
        let shift = |p: &LaurentPoly, s: &[i32]| -> BTreeMap<Vec<i32>, Rational> {
            p.terms
                .iter()
                .map(|(e, c)| (e.iter().zip(s).map(|(x, m)| x - m).collect(), c.clone()))
                .collect()
        };
        let mut rem = shift(&a, &a_shift);
        let den = shift(&b, &b_shift);
        let (lead_e, lead_c) = den
            .iter()
            .next_back()
            .map(|(e, c)| (e.clone(), c.clone()))
            .unwrap();
        let mut quot: BTreeMap<Vec<i32>, Rational> = BTreeMap::new();
        while let Some((re, rc)) = rem.iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
            let qe: Vec<i32> = re.iter().zip(&lead_e).map(|(x, y)| x - y).collect();
            if qe.iter().any(|&x| x < 0) {
                return Err(RingError::NotDivisible(a.to_string(), b.to_string()));
            }
            let qc = &rc / &lead_c;
            for (de, dc) in &den {
                let e: Vec<i32> = de.iter().zip(&qe).map(|(x, y)| x + y).collect();
                let entry = rem.entry(e.clone()).or_insert_with(Rational::zero);
                *entry -= dc * &qc;
                if entry.is_zero() {
                    rem.remove(&e);
                }
            }
            *quot.entry(qe).or_insert_with(Rational::zero) += qc;
        }
        let back: Vec<i32> = (0..k).map(|i| a_shift[i] - b_shift[i]).collect();
        let mut out = LaurentPoly::zero(&a.ctx);
        for (e, c) in quot {
            out.add_term(e.iter().zip(&back).map(|(x, s)| x + s).collect(), c);
        }
        Ok(out)
    }

    fn min_exponents(&self) -> Vec<i32> {
        let mut m = vec![i32::MAX; self.ctx.len()];
        for e in self.terms.keys() {
            for (slot, &x) in m.iter_mut().zip(e) {
                *slot = (*slot).min(x);
            }
        }
        m.iter_mut().for_each(|x| {
            if *x == i32::MAX {
                *x = 0
            }
        });
        m
    }

    /// Substitutes the assigned values for every variable of the context.
    pub fn specialize(&self, s: &Specialization) -> Result<Rational, RingError> {
        let values = self
            .ctx
            .names()
            .iter()
            .map(|name| {
                s.get(name)
                    .cloned()
                    .ok_or_else(|| RingError::Unassigned(name.clone()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (v, &x) in values.iter().zip(e) {
                term *= rational_pow(v, x);
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Partial substitution: replaces the assigned variables by values and
    /// keeps the rest symbolic in `target`, which must contain every
    /// unassigned variable.
    pub fn substitute(&self, s: &Specialization, target: &Context) -> Result<Self, RingError> {
        let mut out = LaurentPoly::zero(target);
        for (e, c) in &self.terms {
            let mut coeff = c.clone();
            let mut exps = vec![0; target.len()];
            for (name, &x) in self.ctx.names().iter().zip(e) {
                if let Some(v) = s.get(name) {
                    coeff *= rational_pow(v, x);
                } else {
                    let idx = target
                        .index_of(name)
                        .ok_or_else(|| RingError::Unassigned(name.clone()))?;
                    exps[idx] += x;
                }
            }
            out.add_term(exps, coeff);
        }
        Ok(out)
    }

    /// Renames variables through `rename`; the image context must be given.
    pub fn rename(
        &self,
        target: &Context,
        rename: impl Fn(&str) -> String,
    ) -> Result<Self, RingError> {
        let mut out = LaurentPoly::zero(target);
        for (e, c) in &self.terms {
            let mut exps = vec![0; target.len()];
            for (name, &x) in self.ctx.names().iter().zip(e) {
                let new = rename(name);
                let idx = target
                    .index_of(&new)
                    .ok_or_else(|| RingError::Context(new.clone(), target.to_string()))?;
                exps[idx] += x;
            }
            out.add_term(exps, c.clone());
        }
        Ok(out)
    }

    /// Parses an arithmetic expression over the variables of `ctx`.
    ///
    /// Accepts the canonical form written by `Display` as well as looser
    /// input such as `t2^-1*(t1-1)` or `2 t1 t2^{-1}`; juxtaposition means
    /// multiplication and `/` needs a unit on its right.
    pub fn parse(ctx: &Context, input: &str) -> Result<Self, RingError> {
        let mut p = Parser {
            ctx,
            src: input.as_bytes(),
            pos: 0,
        };
        let out = p.expr()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.error("trailing input"));
        }
        Ok(out)
    }

    /// LaTeX rendering, highest term first: `t_{1} t_{2}^{-1} - t_{2}^{-1}`.
    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let vars: Vec<String> = self
                .ctx
                .names()
                .iter()
                .zip(e)
                .filter(|(_, &x)| x != 0)
                .map(|(name, &x)| {
                    let base = latex_var(name);
                    if x == 1 {
                        base
                    } else {
                        format!("{base}^{{{x}}}")
                    }
                })
                .collect();
            let coeff = if abs.is_integer() {
                abs.numer().to_string()
            } else {
                format!("\\frac{{{}}}{{{}}}", abs.numer(), abs.denom())
            };
            if vars.is_empty() {
                out.push_str(&coeff);
            } else {
                if !abs.is_one() {
                    out.push_str(&coeff);
                    out.push(' ');
                }
                out.push_str(&vars.join(" "));
            }
        }
        out
    }
}

fn latex_var(name: &str) -> String {
    let split = name.trim_end_matches(|c: char| c.is_ascii_digit()).len();
    if split == name.len() || split == 0 {
        name.to_string()
    } else {
        format!("{}_{{{}}}", &name[..split], &name[split..])
    }
}

pub(crate) fn rational_pow(v: &Rational, e: i32) -> Rational {
    if e >= 0 {
        num_traits::pow(v.clone(), e as usize)
    } else {
        num_traits::pow(v.recip(), e.unsigned_abs() as usize)
    }
}

impl PartialEq for LaurentPoly {
    /// Value equality; polynomials over compatible contexts compare after
    /// embedding into the larger one.
    fn eq(&self, other: &Self) -> bool {
        match self.unify(other) {
            Ok((a, b)) => a.terms == b.terms,
            Err(_) => false,
        }
    }
}

impl fmt::Display for LaurentPoly {
    /// Canonical text form: `c * x1^e1 * … ` terms in lexicographic exponent
    /// order joined by ` + `, zero exponents omitted, `0` for zero.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            for (name, &x) in self.ctx.names().iter().zip(e) {
                if x != 0 {
                    write!(f, " * {name}^{x}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

struct Parser<'a> {
    ctx: &'a Context,
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> RingError {
        RingError::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<LaurentPoly, RingError> {
        let mut acc = self.product()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc.try_add(&self.product()?)?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc.try_sub(&self.product()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn product(&mut self) -> Result<LaurentPoly, RingError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc.try_mul(&self.unary()?)?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let rhs = self.unary()?;
                    let inv = rhs
                        .unit_inverse()
                        .map_err(|_| self.error("division by a non-unit"))?;
                    acc = acc.try_mul(&inv)?;
                }
                Some(c) if c == b'(' || c.is_ascii_alphanumeric() => {
                    acc = acc.try_mul(&self.unary()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<LaurentPoly, RingError> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(self.unary()?.neg());
        }
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.exponent()?;
            return if e >= 0 {
                Ok(base.pow(e as u32))
            } else {
                let inv = base
                    .unit_inverse()
                    .map_err(|_| self.error("negative power of a non-unit"))?;
                Ok(inv.pow(e.unsigned_abs()))
            };
        }
        Ok(base)
    }

    fn exponent(&mut self) -> Result<i32, RingError> {
        let close = match self.peek() {
            Some(b'{') => Some(b'}'),
            Some(b'(') => Some(b')'),
            _ => None,
        };
        if close.is_some() {
            self.pos += 1;
        }
        let neg = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        let mag: i32 = digits
            .parse()
            .map_err(|_| self.error("expected exponent"))?;
        if let Some(c) = close {
            if self.peek() != Some(c) {
                return Err(self.error("unclosed exponent"));
            }
            self.pos += 1;
        }
        Ok(if neg { -mag } else { mag })
    }

    fn atom(&mut self) -> Result<LaurentPoly, RingError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let n: BigInt = std::str::from_utf8(&self.src[start..self.pos])
                    .unwrap()
                    .parse()
                    .map_err(|_| self.error("bad integer"))?;
                Ok(LaurentPoly::constant(self.ctx, Rational::from_integer(n)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                // `t_1` and `t1` name the same variable
                let name = name.replace('_', "");
                LaurentPoly::var(self.ctx, &name)
            }
            _ => Err(self.error("expected a term")),
        }
    }
}

/// Assignment of nonzero rationals to variable names.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Specialization {
    values: BTreeMap<String, Rational>,
}

impl Specialization {
    pub fn new<I, S>(pairs: I) -> Result<Self, RingError>
    where
        I: IntoIterator<Item = (S, Rational)>,
        S: Into<String>,
    {
        let mut values = BTreeMap::new();
        for (name, v) in pairs {
            let name = name.into();
            if v.is_zero() {
                return Err(RingError::ZeroSpecialization(name));
            }
            values.insert(name, v);
        }
        Ok(Specialization { values })
    }

    /// `prefix1 = values[0]`, `prefix2 = values[1]`, …
    pub fn indexed(prefix: &str, values: &[Rational]) -> Result<Self, RingError> {
        Self::new(
            values
                .iter()
                .enumerate()
                .map(|(i, v)| (format!("{prefix}{}", i + 1), v.clone())),
        )
    }

    /// Parses `t1=2,t2=3/4,…`.
    pub fn parse(s: &str) -> Result<Self, RingError> {
        let mut pairs = Vec::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (name, value) = part.split_once('=').ok_or_else(|| RingError::Parse {
                pos: 0,
                msg: format!("expected name=value, got `{part}`"),
            })?;
            pairs.push((name.trim().replace('_', ""), parse_rational(value)?));
        }
        Self::new(pairs)
    }

    pub fn get(&self, name: &str) -> Option<&Rational> {
        self.values.get(name)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&String, &Rational)> {
        self.values.iter()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn covers(&self, ctx: &Context) -> bool {
        ctx.names().iter().all(|n| self.values.contains_key(n))
    }

    /// Union of two assignments over disjoint names.
    pub fn merge(&self, other: &Specialization) -> Result<Self, RingError> {
        let a: BTreeSet<_> = self.values.keys().collect();
        if other.values.keys().any(|k| a.contains(k)) {
            return Err(RingError::Context(self.to_string(), other.to_string()));
        }
        let mut values = self.values.clone();
        values.extend(other.values.iter().map(|(k, v)| (k.clone(), v.clone())));
        Ok(Specialization { values })
    }
}

impl fmt::Display for Specialization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .values
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        write!(f, "{}", parts.join(","))
    }
}
