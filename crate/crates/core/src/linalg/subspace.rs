use std::collections::VecDeque;

use num_traits::{One, Zero};

use super::{LinalgError, Matrix};
use crate::ring::Rational;

/// Reduced row-echelon form and rank.
pub fn rref(a: &Matrix<Rational>) -> (Matrix<Rational>, usize) {
    let mut rows = a.to_rows();
    let (nr, nc) = (a.rows(), a.cols());
    let mut rank = 0;
    for col in 0..nc {
        if rank == nr {
            break;
        }
        let Some(p) = (rank..nr).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = rows[rank][col].recip();
        rows[rank].iter_mut().for_each(|x| *x *= &inv);
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, y) in row[col..nc].iter_mut().zip(&pivot[col..nc]) {
                    *x -= &f * y;
                }
            }
        }
        rank += 1;
    }
    let m = if nr == 0 {
        a.clone()
    } else {
        Matrix::from_rows(rows).expect("shape preserved")
    };
    (m, rank)
}

/// Right null space `{x : A x = 0}`.
pub fn kernel(a: &Matrix<Rational>) -> Subspace {
    let (r, rank) = rref(a);
    let n = a.cols();
    let pivots: Vec<usize> = (0..rank)
        .map(|i| (0..n).find(|&c| !r.get(i, c).is_zero()).unwrap())
        .collect();
    let mut out = Subspace::zero(n);
    for free in (0..n).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Rational::zero(); n];
        v[free] = Rational::one();
        for (i, &p) in pivots.iter().enumerate() {
            v[p] = -r.get(i, free).clone();
        }
        out.insert(v);
    }
    out
}

/// Subspace of `Q^n`, stored as its unique reduced row-echelon basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    ambient: usize,
    // (pivot column, row), sorted by pivot, each row reduced against the others
    rows: Vec<(usize, Vec<Rational>)>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            rows: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        let mut s = Subspace::zero(ambient);
        for i in 0..ambient {
            s.insert(unit_vector(ambient, i));
        }
        s
    }

    pub fn span<I>(ambient: usize, vectors: I) -> Result<Self, LinalgError>
    where
        I: IntoIterator<Item = Vec<Rational>>,
    {
        let mut s = Subspace::zero(ambient);
        for v in vectors {
            if v.len() != ambient {
                return Err(LinalgError::Shape(format!(
                    "vector of length {} in ambient dimension {ambient}",
                    v.len()
                )));
            }
            s.insert(v);
        }
        Ok(s)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Nonzero and not the whole space.
    pub fn is_proper(&self) -> bool {
        self.dim() > 0 && self.dim() < self.ambient
    }

    pub fn basis(&self) -> impl Iterator<Item = &Vec<Rational>> {
        self.rows.iter().map(|(_, r)| r)
    }

    pub fn basis_matrix(&self) -> Matrix<Rational> {
        let rows: Vec<Vec<Rational>> = self.basis().cloned().collect();
        if rows.is_empty() {
            return Matrix::new(0, self.ambient, Vec::new()).expect("empty");
        }
        Matrix::from_rows(rows).expect("equal lengths")
    }

    /// Reduces `v` against the basis in place; zero iff `v` was a member.
    fn reduce(&self, v: &mut [Rational]) {
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let f = v[*p].clone();
            for (x, r) in v.iter_mut().zip(row).skip(*p) {
                *x -= &f * r;
            }
        }
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        if v.len() != self.ambient {
            return false;
        }
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(Zero::is_zero)
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, mut v: Vec<Rational>) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length");
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].recip();
        v.iter_mut().for_each(|x| *x *= &inv);
        for (_, row) in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let f = row[p].clone();
                for (x, y) in row.iter_mut().zip(&v).skip(p) {
                    *x -= &f * y;
                }
            }
        }
        let at = self.rows.partition_point(|(q, _)| *q < p);
        self.rows.insert(at, (p, v));
        true
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis().all(|b| self.contains(b))
    }

    /// `{x : ⟨u, x⟩ = 0 for all u in self}`.
    pub fn annihilator(&self) -> Subspace {
        if self.rows.is_empty() {
            return Subspace::full(self.ambient);
        }
        kernel(&self.basis_matrix())
    }

    /// Every generator maps every basis vector back into the subspace.
    pub fn is_invariant_under(&self, gens: &[Matrix<Rational>]) -> Result<bool, LinalgError> {
        for g in gens {
            check_square(g, self.ambient)?;
            for b in self.basis() {
                if !self.contains(&g.mul_vec(b)?) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

pub fn unit_vector(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::one();
    v
}

fn check_square(g: &Matrix<Rational>, d: usize) -> Result<(), LinalgError> {
    if g.rows() != d || g.cols() != d {
        return Err(LinalgError::Shape(format!(
            "generator is {}x{}, expected {d}x{d}",
            g.rows(),
            g.cols()
        )));
    }
    Ok(())
}

/// Smallest subspace containing `seed` and mapped into itself by every
/// generator. Generators are assumed invertible, so this is also the
/// submodule generated under the group.
pub fn spin(seed: &[Vec<Rational>], gens: &[Matrix<Rational>]) -> Result<Subspace, LinalgError> {
    let d = match (seed.first(), gens.first()) {
        (Some(v), _) => v.len(),
        (None, Some(g)) => g.rows(),
        (None, None) => 0,
    };
    for g in gens {
        check_square(g, d)?;
    }
    let mut space = Subspace::zero(d);
    let mut queue = VecDeque::new();
    for v in seed {
        if v.len() != d {
            return Err(LinalgError::Shape(
                "seed vectors of different lengths".into(),
            ));
        }
        if space.insert(v.clone()) {
            queue.push_back(v.clone());
        }
    }
    while let Some(v) = queue.pop_front() {
        if space.dim() == d {
            break;
        }
        for g in gens {
            let w = g.mul_vec(&v)?;
            if space.insert(w.clone()) {
                queue.push_back(w);
            }
        }
    }
    Ok(space)
}

/// Elementary-product budget used when no cap is given: `4·d⁴`.
pub fn default_closure_cap(d: usize) -> usize {
    4 * d.pow(4)
}

/// Dimension of the matrix algebra spanned by all words in `gens` (the
/// empty word included), and whether the closure stabilised within `cap`
/// generator products.
pub fn algebra_closure_dim(
    gens: &[Matrix<Rational>],
    cap: usize,
) -> Result<(usize, bool), LinalgError> {
    let Some(first) = gens.first() else {
        return Ok((0, true));
    };
    let d = first.rows();
    for g in gens {
        check_square(g, d)?;
    }
    let flat = |m: &Matrix<Rational>| m.data().to_vec();
    let id = Matrix::identity_q(d);
    let mut span = Subspace::zero(d * d);
    span.insert(flat(&id));
    let mut queue = VecDeque::from([id]);
    let mut products = 0usize;
    while let Some(x) = queue.pop_front() {
        if span.dim() == d * d {
            return Ok((d * d, true));
        }
        for g in gens {
            if products >= cap {
                return Ok((span.dim(), false));
            }
            products += 1;
            let y = g.mul(&x)?;
            if span.insert(flat(&y)) {
                queue.push_back(y);
            }
        }
    }
    Ok((span.dim(), true))
}
