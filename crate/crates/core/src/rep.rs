//! Generator images of the extended Gassner and Burau representations, the
//! change to a basis containing the fixed vector, the degree `n − 1`
//! composition factors and their tensor products.
//!
//! Matrices of `ρ` (IA), `ρ̂_G` and `ρ̂_B` act on column vectors and fix
//! `v = (t_1 − 1, …, t_n − 1)ᵀ` resp. `(1, …, 1)ᵀ`. After the change of basis
//! `S = {e_1, …, e_{n−1}, v}` images are recorded row-wise: row `k` holds the
//! `S`-coordinates of the image of `S_k`. This is the transpose of
//! `P⁻¹ M P`; the fixed vector then shows up as the last row `(0, …, 0, 1)`
//! and the composition factor is the leading `(n−1)`-block. Factor and
//! tensor images are used as column-acting matrices from then on.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::linalg::{LinalgError, Matrix, Scalar};
use crate::ring::{Context, LaurentPoly, Rational, RingError, Specialization};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error("{0}")]
    Domain(String),
    #[error("generator label sets differ: {0}")]
    LabelMismatch(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Generator of `IA(F_n)`, `Cb_n` or `C_n`; indices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GenLabel {
    /// `ε_ij : x_i ↦ x_j⁻¹ x_i x_j`
    Eps(usize, usize),
    /// `ε_ijk`, the IA-automorphism of Definition-1 type
    EpsTriple(usize, usize, usize),
    /// `α_i`, swapping `x_i` and `x_{i+1}`
    Alpha(usize),
}

impl GenLabel {
    /// Whether the label names a generator for strand count `n`.
    pub fn is_valid(&self, n: usize) -> bool {
        let ok = |i: usize| (1..=n).contains(&i);
        match *self {
            GenLabel::Eps(i, j) => ok(i) && ok(j) && i != j,
            GenLabel::EpsTriple(i, j, k) => ok(i) && ok(j) && ok(k) && i != j && j != k && i != k,
            GenLabel::Alpha(i) => i >= 1 && i < n,
        }
    }

    /// All `ε_ij`, ordered by `(i, j)`.
    pub fn eps_all(n: usize) -> Vec<GenLabel> {
        let mut out = Vec::new();
        for i in 1..=n {
            for j in 1..=n {
                if i != j {
                    out.push(GenLabel::Eps(i, j));
                }
            }
        }
        out
    }
}

impl fmt::Display for GenLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenLabel::Eps(i, j) => write!(f, "eps({i},{j})"),
            GenLabel::EpsTriple(i, j, k) => write!(f, "eps({i},{j},{k})"),
            GenLabel::Alpha(i) => write!(f, "alpha({i})"),
        }
    }
}

impl FromStr for GenLabel {
    type Err = RepError;

    /// Accepts `eps(1,2)`, `eps(1,2,3)`, `alpha(1)` and the short forms
    /// `e12`, `e123`, `a1` for single-digit indices.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || RepError::Domain(format!("unrecognised generator label `{s}`"));
        let s = s.trim();
        let args = |body: &str| -> Result<Vec<usize>, RepError> {
            body.split(',')
                .map(|x| x.trim().parse().map_err(|_| bad()))
                .collect()
        };
        if let Some(body) = s.strip_prefix("eps(").and_then(|r| r.strip_suffix(')')) {
            return match args(body)?.as_slice() {
                [i, j] => Ok(GenLabel::Eps(*i, *j)),
                [i, j, k] => Ok(GenLabel::EpsTriple(*i, *j, *k)),
                _ => Err(bad()),
            };
        }
        if let Some(body) = s.strip_prefix("alpha(").and_then(|r| r.strip_suffix(')')) {
            return match args(body)?.as_slice() {
                [i] => Ok(GenLabel::Alpha(*i)),
                _ => Err(bad()),
            };
        }
        let digits = |r: &str| -> Option<Vec<usize>> {
            r.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize))
                .collect()
        };
        if let Some(d) = s.strip_prefix('e').and_then(digits) {
            return match d.as_slice() {
                [i, j] => Ok(GenLabel::Eps(*i, *j)),
                [i, j, k] => Ok(GenLabel::EpsTriple(*i, *j, *k)),
                _ => Err(bad()),
            };
        }
        if let Some(d) = s.strip_prefix('a').and_then(digits) {
            if let [i] = d.as_slice() {
                return Ok(GenLabel::Alpha(*i));
            }
        }
        Err(bad())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    IA,
    RhoG,
    RhoB,
    PhiG,
    PhiB,
    Tensor,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::IA => "IA",
            Family::RhoG => "RhoG",
            Family::RhoB => "RhoB",
            Family::PhiG => "PhiG",
            Family::PhiB => "PhiB",
            Family::Tensor => "Tensor",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = RepError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "IA" => Family::IA,
            "RhoG" => Family::RhoG,
            "RhoB" => Family::RhoB,
            "PhiG" => Family::PhiG,
            "PhiB" => Family::PhiB,
            "Tensor" => Family::Tensor,
            _ => return Err(RepError::Domain(format!("unknown family `{s}`"))),
        })
    }
}

/// Generator images of a representation over entries of type `T`
/// (`LaurentPoly` symbolically, `Rational` once specialized).
#[derive(Clone, PartialEq)]
pub struct Representation<T> {
    family: Family,
    n: usize,
    degree: usize,
    context: Context,
    images: BTreeMap<GenLabel, Matrix<T>>,
}

impl<T: Scalar> fmt::Debug for Representation<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{} n={} degree={} over [{}]",
            self.family, self.n, self.degree, self.context
        )?;
        for (l, m) in &self.images {
            writeln!(f, "{l}:\n{m}")?;
        }
        Ok(())
    }
}

impl<T: Scalar> Representation<T> {
    pub fn new(
        family: Family,
        n: usize,
        degree: usize,
        context: Context,
        images: BTreeMap<GenLabel, Matrix<T>>,
    ) -> Result<Self, RepError> {
        for (label, m) in &images {
            if !label.is_valid(n) {
                return Err(RepError::Domain(format!(
                    "label {label} invalid for n = {n}"
                )));
            }
            if m.rows() != degree || m.cols() != degree {
                return Err(RepError::Domain(format!(
                    "image of {label} is {}x{}, expected degree {degree}",
                    m.rows(),
                    m.cols()
                )));
            }
        }
        Ok(Representation {
            family,
            n,
            degree,
            context,
            images,
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn context(&self) -> &Context {
        &self.context
    }

    pub fn images(&self) -> &BTreeMap<GenLabel, Matrix<T>> {
        &self.images
    }

    pub fn image(&self, label: GenLabel) -> Option<&Matrix<T>> {
        self.images.get(&label)
    }

    pub fn labels(&self) -> Vec<GenLabel> {
        self.images.keys().copied().collect()
    }

    /// Generator matrices in label order.
    pub fn generators(&self) -> Vec<Matrix<T>> {
        self.images.values().cloned().collect()
    }

    /// Restriction to the labels accepted by `keep`.
    pub fn restrict(&self, keep: impl Fn(&GenLabel) -> bool) -> Self {
        Representation {
            images: self
                .images
                .iter()
                .filter(|(l, _)| keep(l))
                .map(|(l, m)| (*l, m.clone()))
                .collect(),
            ..self.clone()
        }
    }

    /// Product of the images along a word, left to right.
    pub fn word_image(&self, word: &[GenLabel]) -> Result<Matrix<T>, RepError> {
        let mut it = word.iter();
        let first = it
            .next()
            .ok_or_else(|| RepError::Domain("empty word".into()))?;
        let mut acc = self.lookup(*first)?.clone();
        for l in it {
            acc = acc.mul(self.lookup(*l)?)?;
        }
        Ok(acc)
    }

    fn lookup(&self, l: GenLabel) -> Result<&Matrix<T>, RepError> {
        self.images
            .get(&l)
            .ok_or_else(|| RepError::LabelMismatch(format!("{l} has no image")))
    }

    fn same_labels<U: Scalar>(&self, other: &Representation<U>) -> Result<(), RepError> {
        if self.images.keys().ne(other.images.keys()) {
            return Err(RepError::LabelMismatch(format!(
                "{:?} vs {:?}",
                self.labels(),
                other.labels()
            )));
        }
        Ok(())
    }
}

impl Representation<LaurentPoly> {
    /// Evaluates every entry at `s`, which must cover the whole context.
    pub fn specialize(&self, s: &Specialization) -> Result<Representation<Rational>, RepError> {
        if let Some(missing) = self.context.names().iter().find(|v| s.get(v).is_none()) {
            return Err(RingError::Unassigned(missing.clone()).into());
        }
        let images = self
            .images
            .iter()
            .map(|(l, m)| Ok((*l, m.try_map(|p| p.specialize(s))?)))
            .collect::<Result<_, RingError>>()?;
        Ok(Representation {
            family: self.family,
            n: self.n,
            degree: self.degree,
            context: Context::empty(),
            images,
        })
    }

    /// Every image has a unit determinant (a single-term Laurent polynomial).
    pub fn check_invertible(&self) -> Result<(), RepError> {
        for (l, m) in &self.images {
            let det = m.det()?;
            if det.num_terms() != 1 {
                return Err(RepError::Invariant(format!(
                    "det of {l} is {det}, not a unit"
                )));
            }
        }
        Ok(())
    }
}

fn poly(ctx: &Context, s: &str) -> LaurentPoly {
    LaurentPoly::parse(ctx, s).expect("builder expression")
}

fn check_n(n: usize, min: usize, what: &str) -> Result<(), RepError> {
    if n < min {
        return Err(RepError::Domain(format!(
            "{what} needs n >= {min}, got {n}"
        )));
    }
    if n > 16 {
        return Err(RepError::Domain(format!(
            "{what}: n = {n} is beyond desk scale (max 16)"
        )));
    }
    Ok(())
}

/// `ρ̂_G(ε_ij)` over variables `{prefix}1..{prefix}n`: the identity with row
/// `i` replaced by `t_j⁻¹ e_i + t_j⁻¹(t_i − 1) e_j`.
fn gassner_eps(ctx: &Context, prefix: &str, n: usize, i: usize, j: usize) -> Matrix<LaurentPoly> {
    let mut m = Matrix::identity(n, &LaurentPoly::zero(ctx));
    m.set(i - 1, i - 1, poly(ctx, &format!("{prefix}{j}^-1")));
    m.set(
        i - 1,
        j - 1,
        poly(ctx, &format!("{prefix}{j}^-1 * ({prefix}{i} - 1)")),
    );
    m
}

/// `ρ` on the IA generators `ε_ij` and `ε_ijk`.
///
/// Each defining formula `e_i ρ(g) = …` becomes row `i` of the image; with
/// this reading the `ε_ij` images coincide with `ρ̂_G`.
pub fn build_ia_generators(n: usize) -> Result<Representation<LaurentPoly>, RepError> {
    check_n(n, 2, "IA representation")?;
    let ctx = Context::indexed("t", n);
    let mut images = BTreeMap::new();
    for l in GenLabel::eps_all(n) {
        if let GenLabel::Eps(i, j) = l {
            images.insert(l, gassner_eps(&ctx, "t", n, i, j));
        }
    }
    for i in 1..=n {
        for j in (1..=n).filter(|&j| j != i) {
            for k in (1..=n).filter(|&k| k != i && k != j) {
                let mut m = Matrix::identity(n, &LaurentPoly::zero(&ctx));
                m.set(
                    i - 1,
                    j - 1,
                    poly(&ctx, &format!("t{i} * t{j}^-1 * (t{k}^-1 - 1)")),
                );
                m.set(
                    i - 1,
                    k - 1,
                    poly(&ctx, &format!("t{i} * t{k}^-1 * (1 - t{j}^-1)")),
                );
                images.insert(GenLabel::EpsTriple(i, j, k), m);
            }
        }
    }
    Representation::new(Family::IA, n, n, ctx, images)
}

/// `ρ̂_G` on `Cb_n` over `t1..tn`.
pub fn build_rho_g(n: usize) -> Result<Representation<LaurentPoly>, RepError> {
    rho_g_over(n, "t")
}

/// `ρ̂_G` over the variables `{prefix}1..{prefix}n`.
pub fn rho_g_over(n: usize, prefix: &str) -> Result<Representation<LaurentPoly>, RepError> {
    check_n(n, 2, "extended Gassner representation")?;
    let ctx = Context::indexed(prefix, n);
    let images = GenLabel::eps_all(n)
        .into_iter()
        .map(|l| match l {
            GenLabel::Eps(i, j) => (l, gassner_eps(&ctx, prefix, n, i, j)),
            _ => unreachable!(),
        })
        .collect();
    Representation::new(Family::RhoG, n, n, ctx, images)
}

/// `ρ̂_B` on `C_n` over the single variable `t`.
pub fn build_rho_b(n: usize) -> Result<Representation<LaurentPoly>, RepError> {
    rho_b_over(n, "t")
}

/// `ρ̂_B` over the single variable `var`: the `ε_ij` images of `ρ̂_G` with all
/// `t_i` identified, plus the transposition matrices `α_i`.
pub fn rho_b_over(n: usize, var: &str) -> Result<Representation<LaurentPoly>, RepError> {
    check_n(n, 2, "extended Burau representation")?;
    let gassner = rho_g_over(n, var)?;
    let ctx = Context::new([var]);
    let mut images = BTreeMap::new();
    for (l, m) in gassner.images() {
        images.insert(*l, m.try_map(|p| p.rename(&ctx, |_| var.to_string()))?);
    }
    for i in 1..n {
        let mut m = Matrix::identity(n, &LaurentPoly::zero(&ctx));
        let (zero, one) = (LaurentPoly::zero(&ctx), LaurentPoly::one(&ctx));
        m.set(i - 1, i - 1, zero.clone());
        m.set(i, i, zero);
        m.set(i - 1, i, one.clone());
        m.set(i, i - 1, one);
        images.insert(GenLabel::Alpha(i), m);
    }
    Representation::new(Family::RhoB, n, n, ctx, images)
}

/// The vector fixed by every generator of `ρ̂_G` or `ρ̂_B`.
pub fn fixed_vector(rep: &Representation<LaurentPoly>) -> Result<Vec<LaurentPoly>, RepError> {
    let ctx = rep.context();
    match rep.family() {
        Family::RhoG => Ok(ctx
            .names()
            .iter()
            .map(|name| poly(ctx, &format!("{name} - 1")))
            .collect()),
        Family::RhoB => Ok(vec![LaurentPoly::one(ctx); rep.degree()]),
        f => Err(RepError::Domain(format!("no fixed vector for family {f}"))),
    }
}

/// Change to the basis `S = {e_1, …, e_{n−1}, v}`.
///
/// Returns `P` (columns `e_1, …, e_{n−1}, v`) and the representation whose
/// image of `g` is `(P⁻¹ · M(g) · P)ᵀ`, i.e. row `k` lists the `S`-coordinates
/// of `g(S_k)`. Every such image has last row `(0, …, 0, 1)`.
pub fn change_of_basis(
    rep: &Representation<LaurentPoly>,
) -> Result<(Matrix<LaurentPoly>, Representation<LaurentPoly>), RepError> {
    let v = fixed_vector(rep)?;
    let n = rep.degree();
    let ctx = rep.context();
    let mut p = Matrix::identity(n, &LaurentPoly::zero(ctx));
    for (r, x) in v.iter().enumerate() {
        p.set(r, n - 1, x.clone());
    }
    let mut images = BTreeMap::new();
    for (l, m) in rep.images() {
        let mp = m.mul(&p)?;
        let c = solve_upper_triangular(&p, &mp)?;
        let conj = c.transpose();
        let last_ok = (0..n).all(|k| {
            let x = conj.get(n - 1, k);
            if k == n - 1 {
                x.is_one()
            } else {
                x.is_zero()
            }
        });
        if !last_ok {
            return Err(RepError::Invariant(format!(
                "{l} does not fix the vector v"
            )));
        }
        images.insert(*l, conj);
    }
    let conj = Representation::new(rep.family(), rep.n(), n, ctx.clone(), images)?;
    Ok((p, conj))
}

/// `X` with `U · X = B` for upper-triangular `U`, dividing exactly in the
/// Laurent ring.
fn solve_upper_triangular(
    u: &Matrix<LaurentPoly>,
    b: &Matrix<LaurentPoly>,
) -> Result<Matrix<LaurentPoly>, RepError> {
    let n = u.rows();
    let mut x = Matrix::zeros(n, b.cols(), u.get(0, 0));
    for col in 0..b.cols() {
        for r in (0..n).rev() {
            let mut acc = b.get(r, col).clone();
            for k in r + 1..n {
                acc = acc.minus(&u.get(r, k).times(x.get(k, col)));
            }
            x.set(r, col, acc.div_exact(u.get(r, r))?);
        }
    }
    Ok(x)
}

/// The degree `n − 1` composition factor `φ̂_G` / `φ̂_B`: leading block of
/// the images after [`change_of_basis`].
pub fn composition_factor(
    rep: &Representation<LaurentPoly>,
) -> Result<Representation<LaurentPoly>, RepError> {
    let family = match rep.family() {
        Family::RhoG => Family::PhiG,
        Family::RhoB => Family::PhiB,
        f => {
            return Err(RepError::Domain(format!(
                "no composition factor for family {f}"
            )))
        }
    };
    let (_, conj) = change_of_basis(rep)?;
    let d = rep.degree() - 1;
    let images = conj
        .images()
        .iter()
        .map(|(l, m)| (*l, m.leading_block(d, d)))
        .collect();
    Representation::new(family, rep.n(), d, rep.context().clone(), images)
}

/// `φ̂_G` over `{prefix}1..{prefix}n`.
pub fn phi_g_over(n: usize, prefix: &str) -> Result<Representation<LaurentPoly>, RepError> {
    composition_factor(&rho_g_over(n, prefix)?)
}

/// `φ̂_B` over the variable `var`.
pub fn phi_b_over(n: usize, var: &str) -> Result<Representation<LaurentPoly>, RepError> {
    composition_factor(&rho_b_over(n, var)?)
}

fn tensor_with<T: Scalar>(
    a: &Representation<T>,
    b: &Representation<T>,
    context: Context,
    lift: impl Fn(&T) -> Result<T, RingError>,
) -> Result<Representation<T>, RepError> {
    a.same_labels(b)?;
    if a.n() != b.n() {
        return Err(RepError::LabelMismatch(format!(
            "n = {} vs n = {}",
            a.n(),
            b.n()
        )));
    }
    let mut images = BTreeMap::new();
    for (l, ma) in a.images() {
        let mb = &b.images()[l];
        images.insert(*l, ma.try_map(&lift)?.kron(&mb.try_map(&lift)?));
    }
    Representation::new(
        Family::Tensor,
        a.n(),
        a.degree() * b.degree(),
        context,
        images,
    )
}

/// `a ⊗ b` with images `a(g) ⊗ b(g)` (standard Kronecker layout). The
/// contexts must be disjoint; the result uses `a`'s variables then `b`'s.
pub fn tensor(
    a: &Representation<LaurentPoly>,
    b: &Representation<LaurentPoly>,
) -> Result<Representation<LaurentPoly>, RepError> {
    let ctx = a.context().concat(b.context())?;
    tensor_with(a, b, ctx.clone(), |p| p.with_context(&ctx))
}

/// Tensor product of already specialized representations.
pub fn tensor_rational(
    a: &Representation<Rational>,
    b: &Representation<Rational>,
) -> Result<Representation<Rational>, RepError> {
    tensor_with(a, b, Context::empty(), |x| Ok(x.clone()))
}
