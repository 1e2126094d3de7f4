//! Certified (ir)reducibility of finitely generated matrix representations
//! over ℚ, and checkers for the theorem statements.
//!
//! Absolute irreducibility is certified by the Burnside density criterion
//! (the generated algebra is all of `M_d(ℚ)`); reducibility only by an
//! explicit invariant subspace that has been spun and checked exactly.

mod theorems;
pub mod upoly;

use std::cmp::Ordering;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::linalg::{
    algebra_closure_dim, default_closure_cap, kernel, spin, unit_vector, LinalgError, Matrix,
    Subspace,
};
use crate::rep::RepError;
use crate::ring::{Rational, RingError};

pub use theorems::{
    check_theorem, random_specialization, s1_subspace, ClaimedWitness, Computed, FixedVectorCheck,
    TheoremId, TheoremParams, TheoremReport,
};

/// Random algebra elements tried by the last search stage.
pub const RANDOM_BUDGET: usize = 200;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IrredError {
    #[error("{0}")]
    Domain(String),
    #[error("no invariant subspace found (closure dimension {closure_dim} < {degree}², saturated: {saturated})")]
    WitnessNotFound {
        closure_dim: usize,
        degree: usize,
        saturated: bool,
    },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Ring(#[from] RingError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    AbsolutelyIrreducible,
    Reducible,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::AbsolutelyIrreducible => "AbsolutelyIrreducible",
            Verdict::Reducible => "Reducible",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrredCertificate {
    pub verdict: Verdict,
    pub closure_dim: usize,
    pub degree: usize,
    pub witness: Option<Subspace>,
    pub saturated: bool,
}

impl IrredCertificate {
    /// Re-checks the certificate against `gens` from scratch.
    pub fn is_sound_for(&self, gens: &[Matrix<Rational>]) -> Result<bool, IrredError> {
        let d = self.degree;
        Ok(match self.verdict {
            Verdict::AbsolutelyIrreducible => {
                self.witness.is_none() && self.closure_dim == d * d && self.saturated && {
                    let (dim, sat) = algebra_closure_dim(gens, default_closure_cap(d))?;
                    dim == d * d && sat
                }
            }
            Verdict::Reducible => match &self.witness {
                Some(w) => {
                    w.ambient_dim() == d
                        && w.is_proper()
                        && verify_subspace_invariant(w, gens)?
                        && spin(&w.basis().cloned().collect::<Vec<_>>(), gens)? == *w
                }
                None => false,
            },
        })
    }
}

/// `M·b ∈ sub` for every generator `M` and basis vector `b`.
pub fn verify_subspace_invariant(
    sub: &Subspace,
    gens: &[Matrix<Rational>],
) -> Result<bool, IrredError> {
    Ok(sub.is_invariant_under(gens)?)
}

fn check_gens(gens: &[Matrix<Rational>]) -> Result<usize, IrredError> {
    let first = gens
        .first()
        .ok_or_else(|| IrredError::Domain("no generators".into()))?;
    let d = first.rows();
    if d == 0 {
        return Err(IrredError::Domain("zero-dimensional representation".into()));
    }
    for g in gens {
        if g.rows() != d || g.cols() != d {
            return Err(LinalgError::Shape(format!(
                "generator is {}x{}, expected {d}x{d}",
                g.rows(),
                g.cols()
            ))
            .into());
        }
    }
    Ok(d)
}

/// [`decide_seeded`] with seed 0.
pub fn decide(gens: &[Matrix<Rational>]) -> Result<IrredCertificate, IrredError> {
    decide_seeded(gens, 0)
}

/// Decides absolute irreducibility of the representation generated by
/// `gens`, returning a certificate.
///
/// Witness search, stopping at the first stage that yields a proper
/// invariant subspace: standard basis vectors, rational eigenvectors of the
/// generators, then kernels of `p(A)` for factors `p` of the characteristic
/// polynomials of seeded random algebra elements `A`. Each stage also runs
/// on the transposed generators and takes annihilators. Among the
/// candidates of a stage the smallest, then RREF-lexicographically least,
/// subspace is reported.
pub fn decide_seeded(gens: &[Matrix<Rational>], seed: u64) -> Result<IrredCertificate, IrredError> {
    let d = check_gens(gens)?;
    let (closure_dim, saturated) = algebra_closure_dim(gens, default_closure_cap(d))?;
    if closure_dim == d * d {
        return Ok(IrredCertificate {
            verdict: Verdict::AbsolutelyIrreducible,
            closure_dim,
            degree: d,
            witness: None,
            saturated,
        });
    }
    let search = Search::new(gens);
    let mut witness = search.basis_vectors()?;
    if witness.is_none() {
        witness = search.eigenvectors()?;
    }
    if witness.is_none() {
        witness = search.random_kernels(seed)?;
    }
    match witness {
        Some(w) => Ok(IrredCertificate {
            verdict: Verdict::Reducible,
            closure_dim,
            degree: d,
            witness: Some(w),
            saturated,
        }),
        None => Err(IrredError::WitnessNotFound {
            closure_dim,
            degree: d,
            saturated,
        }),
    }
}

fn rref_order(a: &Subspace, b: &Subspace) -> Ordering {
    a.dim().cmp(&b.dim()).then_with(|| a.basis().cmp(b.basis()))
}

struct Search<'a> {
    gens: &'a [Matrix<Rational>],
    transposed: Vec<Matrix<Rational>>,
    d: usize,
}

impl<'a> Search<'a> {
    fn new(gens: &'a [Matrix<Rational>]) -> Self {
        Search {
            gens,
            transposed: gens.iter().map(Matrix::transpose).collect(),
            d: gens[0].rows(),
        }
    }

    /// Proper invariant subspaces from spinning `seeds` directly, and from
    /// spinning `dual_seeds` under the transposes and taking annihilators.
    fn candidates(
        &self,
        seeds: &[Vec<Rational>],
        dual_seeds: &[Vec<Rational>],
    ) -> Result<Vec<Subspace>, IrredError> {
        let mut out = Vec::new();
        for v in seeds {
            let s = spin(std::slice::from_ref(v), self.gens)?;
            if s.is_proper() {
                out.push(s);
            }
        }
        for v in dual_seeds {
            let s = spin(std::slice::from_ref(v), &self.transposed)?;
            if s.is_proper() {
                out.push(s.annihilator());
            }
        }
        Ok(out)
    }

    fn best(cands: Vec<Subspace>) -> Option<Subspace> {
        cands.into_iter().min_by(rref_order)
    }

    fn basis_vectors(&self) -> Result<Option<Subspace>, IrredError> {
        let units: Vec<_> = (0..self.d).map(|i| unit_vector(self.d, i)).collect();
        Ok(Self::best(self.candidates(&units, &units)?))
    }

    fn eigenvectors(&self) -> Result<Option<Subspace>, IrredError> {
        let mut seeds = Vec::new();
        let mut dual = Vec::new();
        for (g, gt) in self.gens.iter().zip(&self.transposed) {
            let chi = g.charpoly()?;
            let Some(roots) = upoly::rational_roots(&chi) else {
                continue;
            };
            for r in roots {
                let shift = Matrix::identity_q(self.d).scale(&r);
                seeds.extend(kernel(&sub(g, &shift)).basis().cloned());
                dual.extend(kernel(&sub(gt, &shift)).basis().cloned());
            }
        }
        Ok(Self::best(self.candidates(&seeds, &dual)?))
    }

    fn random_element(&self, rng: &mut ChaCha8Rng) -> Matrix<Rational> {
        let mut acc = Matrix::identity_q(self.d).scale(&coeff(rng));
        for _ in 0..rng.gen_range(1..=3) {
            let len = rng.gen_range(1..=3);
            let mut word = self.gens[rng.gen_range(0..self.gens.len())].clone();
            for _ in 1..len {
                word = word
                    .mul(&self.gens[rng.gen_range(0..self.gens.len())])
                    .expect("square");
            }
            acc = acc.add(&word.scale(&coeff(rng))).expect("square");
        }
        acc
    }

    fn random_kernels(&self, seed: u64) -> Result<Option<Subspace>, IrredError> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..RANDOM_BUDGET {
            let a = self.random_element(&mut rng);
            let at = a.transpose();
            let mut seeds = Vec::new();
            let mut dual = Vec::new();
            for p in upoly::factor(&a.charpoly()?) {
                let k = kernel(&upoly::eval_matrix(&p, &a));
                if k.dim() < self.d {
                    seeds.extend(k.basis().cloned());
                }
                let kt = kernel(&upoly::eval_matrix(&p, &at));
                if kt.dim() < self.d {
                    dual.extend(kt.basis().cloned());
                }
            }
            if let Some(w) = Self::best(self.candidates(&seeds, &dual)?) {
                return Ok(Some(w));
            }
        }
        Ok(None)
    }
}

fn coeff(rng: &mut ChaCha8Rng) -> Rational {
    let k = rng.gen_range(1..=3i64) * if rng.gen_bool(0.5) { 1 } else { -1 };
    Rational::from_integer(k.into())
}

fn sub(a: &Matrix<Rational>, b: &Matrix<Rational>) -> Matrix<Rational> {
    a.add(&b.map(|x| -x)).expect("same shape")
}
