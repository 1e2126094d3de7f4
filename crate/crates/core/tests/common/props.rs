// Seeded property checks, driven through proptest's runner so the core
// suite and the acceptance harness exercise the same code.
#![allow(dead_code)]

use std::fmt::Debug;

use conjrep::irred::{decide, IrredError, Verdict};
use conjrep::linalg::{algebra_closure_dim, default_closure_cap, rref, spin, Matrix};
use conjrep::rep::*;
use conjrep::ring::{integer, rational, Context, LaurentPoly, Rational, Specialization};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed, TestCaseError, TestRunner};

pub const SEED: u64 = 0x5eed;

fn runner(cases: u32) -> TestRunner {
    TestRunner::new(Config {
        cases,
        rng_seed: RngSeed::Fixed(SEED),
        failure_persistence: None,
        ..Config::default()
    })
}

fn run<S>(
    cases: u32,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String>
where
    S: Strategy,
    S::Value: Debug,
{
    runner(cases)
        .run(&strategy, test)
        .map_err(|e| e.to_string())
}

type Terms = Vec<(i64, i32, i32)>;

fn ctx2() -> Context {
    Context::indexed("t", 2)
}

fn terms() -> impl Strategy<Value = Terms> {
    prop::collection::vec((-5i64..=5, -2i32..=2, -2i32..=2), 0..5)
}

fn poly(ctx: &Context, ts: &Terms) -> LaurentPoly {
    ts.iter().fold(LaurentPoly::zero(ctx), |acc, &(c, a, b)| {
        acc.try_add(&LaurentPoly::monomial(ctx, integer(c), vec![a, b]))
            .unwrap()
    })
}

fn nonzero_rational() -> impl Strategy<Value = (i64, i64)> {
    ((-9i64..=9).prop_filter("nonzero", |p| *p != 0), 1i64..=5)
}

/// Commutative ring axioms on 1000 random triples of Laurent polynomials.
pub fn ring_axioms() -> Result<(), String> {
    let ctx = ctx2();
    run(1000, (terms(), terms(), terms()), |(a, b, c)| {
        let (a, b, c) = (poly(&ctx, &a), poly(&ctx, &b), poly(&ctx, &c));
        let add = |x: &LaurentPoly, y: &LaurentPoly| x.try_add(y).unwrap();
        let mul = |x: &LaurentPoly, y: &LaurentPoly| x.try_mul(y).unwrap();
        prop_assert_eq!(add(&add(&a, &b), &c), add(&a, &add(&b, &c)));
        prop_assert_eq!(mul(&mul(&a, &b), &c), mul(&a, &mul(&b, &c)));
        prop_assert_eq!(add(&a, &b), add(&b, &a));
        prop_assert_eq!(mul(&a, &b), mul(&b, &a));
        prop_assert_eq!(mul(&a, &add(&b, &c)), add(&mul(&a, &b), &mul(&a, &c)));
        prop_assert!(add(&a, &a.neg()).is_zero());
        prop_assert_eq!(mul(&a, &LaurentPoly::one(&ctx)), a.clone());
        prop_assert_eq!(add(&a, &LaurentPoly::zero(&ctx)), a);
        Ok(())
    })
}

/// Specialization is a ring homomorphism.
pub fn specialize_homomorphism() -> Result<(), String> {
    let ctx = ctx2();
    run(
        500,
        (terms(), terms(), nonzero_rational(), nonzero_rational()),
        |(a, b, x, y)| {
            let (a, b) = (poly(&ctx, &a), poly(&ctx, &b));
            let s =
                Specialization::indexed("t", &[rational(x.0, x.1), rational(y.0, y.1)]).unwrap();
            let ev = |p: &LaurentPoly| p.specialize(&s).unwrap();
            prop_assert_eq!(ev(&a.try_add(&b).unwrap()), ev(&a) + ev(&b));
            prop_assert_eq!(ev(&a.try_mul(&b).unwrap()), ev(&a) * ev(&b));
            Ok(())
        },
    )
}

/// The canonical text form parses back to the same polynomial and is a
/// fixed point of print ∘ parse.
pub fn canonical_round_trip() -> Result<(), String> {
    let ctx = ctx2();
    run(500, terms(), |a| {
        let a = poly(&ctx, &a);
        let text = a.to_string();
        let back = LaurentPoly::parse(&ctx, &text).unwrap();
        prop_assert_eq!(&back, &a);
        prop_assert_eq!(back.to_string(), text);
        Ok(())
    })
}

pub fn unit_inverse_round_trip() -> Result<(), String> {
    let ctx = ctx2();
    run(
        300,
        (nonzero_rational(), -4i32..=4, -4i32..=4),
        |(c, a, b)| {
            let u = LaurentPoly::monomial(&ctx, rational(c.0, c.1), vec![a, b]);
            let inv = u.unit_inverse().unwrap();
            prop_assert!(u.try_mul(&inv).unwrap().is_one());
            prop_assert_eq!(inv.unit_inverse().unwrap(), u);
            Ok(())
        },
    )
}

fn int_matrix(d: usize, xs: &[i64]) -> Matrix<Rational> {
    Matrix::from_rows(
        xs.chunks(d)
            .map(|r| r.iter().map(|&x| integer(x)).collect())
            .collect(),
    )
    .unwrap()
}

/// `L·U` with unit diagonals: always invertible.
fn invertible(d: usize, lower: &[i64], upper: &[i64]) -> Matrix<Rational> {
    let mut l = Matrix::identity_q(d);
    let mut u = Matrix::identity_q(d);
    let mut k = 0;
    for r in 0..d {
        for c in 0..r {
            l.set(r, c, integer(lower[k]));
            u.set(c, r, integer(upper[k]));
            k += 1;
        }
    }
    l.mul(&u).unwrap()
}

fn conjugator(d: usize) -> impl Strategy<Value = (Vec<i64>, Vec<i64>)> {
    let k = d * (d - 1) / 2;
    (
        prop::collection::vec(-2i64..=2, k),
        prop::collection::vec(-2i64..=2, k),
    )
}

fn conjugate(gens: &[Matrix<Rational>], s: &Matrix<Rational>) -> Vec<Matrix<Rational>> {
    let si = s.inverse().unwrap();
    gens.iter()
        .map(|g| si.mul(g).unwrap().mul(s).unwrap())
        .collect()
}

/// spin(seed) contains the seed, is invariant, and is a fixed point of spin.
pub fn spin_properties() -> Result<(), String> {
    let strategy = (2usize..=4).prop_flat_map(|d| {
        (
            Just(d),
            prop::collection::vec(prop::collection::vec(-2i64..=2, d * d), 1..=2),
            prop::collection::vec(-3i64..=3, d),
        )
    });
    run(300, strategy, |(d, gens, seed)| {
        let gens: Vec<_> = gens.iter().map(|g| int_matrix(d, g)).collect();
        let seed: Vec<Rational> = seed.iter().map(|&x| integer(x)).collect();
        let w = spin(std::slice::from_ref(&seed), &gens).unwrap();
        prop_assert!(w.contains(&seed));
        prop_assert!(w.is_invariant_under(&gens).unwrap());
        let again = spin(&w.basis().cloned().collect::<Vec<_>>(), &gens).unwrap();
        prop_assert_eq!(again, w);
        Ok(())
    })
}

/// Row-equivalent matrices share one reduced echelon form.
pub fn rref_uniqueness() -> Result<(), String> {
    let strategy = (prop::collection::vec(-3i64..=3, 12), conjugator(3));
    run(300, strategy, |(a, (lo, up))| {
        let a = Matrix::from_rows(
            a.chunks(4)
                .map(|r| r.iter().map(|&x| integer(x)).collect())
                .collect(),
        )
        .unwrap();
        let e = invertible(3, &lo, &up);
        let (r, rank) = rref(&a);
        let (r2, rank2) = rref(&e.mul(&a).unwrap());
        prop_assert_eq!(rank, rank2);
        prop_assert_eq!(&r, &r2);
        prop_assert_eq!(rref(&r).0, r);
        Ok(())
    })
}

fn phi_g3(t: [Rational; 3]) -> Vec<Matrix<Rational>> {
    let s = Specialization::indexed("t", &t).unwrap();
    phi_g_over(3, "t")
        .unwrap()
        .specialize(&s)
        .unwrap()
        .generators()
}

/// Closure dimension is unchanged under 20 random simultaneous conjugations.
pub fn closure_conjugation_invariance() -> Result<(), String> {
    let sets = [
        phi_g3([integer(1), integer(2), integer(3)]),
        phi_g3([integer(2), integer(3), integer(5)]),
        vec![int_matrix(3, &[1, 1, 0, 0, 1, 0, 0, 0, 2])],
    ];
    let dims: Vec<_> = sets
        .iter()
        .map(|g| algebra_closure_dim(g, default_closure_cap(g[0].rows())).unwrap())
        .collect();
    run(20, (0..sets.len(), conjugator(3)), |(k, (lo, up))| {
        let d = sets[k][0].rows();
        let conj = conjugate(&sets[k], &invertible(d, &lo, &up));
        prop_assert_eq!(
            algebra_closure_dim(&conj, default_closure_cap(d)).unwrap(),
            dims[k]
        );
        Ok(())
    })
}

fn word(labels: &[GenLabel], idx: &[usize]) -> Vec<GenLabel> {
    idx.iter().map(|i| labels[i % labels.len()]).collect()
}

/// On 200 random words, φ̂(w) is the leading block of the basis-changed
/// image of w, whose last row stays (0, …, 0, 1).
pub fn truncation_homomorphism() -> Result<(), String> {
    let cases: Vec<_> = [(3, true), (4, true), (3, false), (4, false)]
        .into_iter()
        .map(|(n, gassner)| {
            let rep = if gassner {
                build_rho_g(n)
            } else {
                build_rho_b(n)
            }
            .unwrap();
            let (_, conj) = change_of_basis(&rep).unwrap();
            let phi = composition_factor(&rep).unwrap();
            (n, conj, phi)
        })
        .collect();
    run(
        200,
        (0..cases.len(), prop::collection::vec(0usize..64, 1..=6)),
        |(k, idx)| {
            let (n, conj, phi) = &cases[k];
            let w = word(&conj.labels(), &idx);
            let big = conj.word_image(&w).unwrap();
            prop_assert_eq!(phi.word_image(&w).unwrap(), big.leading_block(n - 1, n - 1));
            for c in 0..*n {
                let e = big.get(n - 1, c);
                let ok = if c == n - 1 { e.is_one() } else { e.is_zero() };
                prop_assert!(ok, "last row entry {} is {}", c, e);
            }
            Ok(())
        },
    )
}

/// On 50 random words, the tensor image is the Kronecker product of the
/// factor images.
pub fn kronecker_mixed_product() -> Result<(), String> {
    let pairs = [
        (phi_g_over(3, "t").unwrap(), phi_g_over(3, "m").unwrap()),
        (phi_b_over(3, "t").unwrap(), phi_b_over(3, "m").unwrap()),
    ];
    let tensors: Vec<_> = pairs.iter().map(|(a, b)| tensor(a, b).unwrap()).collect();
    run(
        50,
        (0..2usize, prop::collection::vec(0usize..64, 1..=6)),
        |(k, idx)| {
            let (a, b) = &pairs[k];
            let t = &tensors[k];
            let w = word(&a.labels(), &idx);
            let lift = |m: Matrix<LaurentPoly>| m.try_map(|p| p.with_context(t.context())).unwrap();
            let want = lift(a.word_image(&w).unwrap()).kron(&lift(b.word_image(&w).unwrap()));
            prop_assert_eq!(t.word_image(&w).unwrap(), want);
            Ok(())
        },
    )
}

/// Generators with disjoint index supports commute, for every extension
/// and composition factor at n = 4, 5.
pub fn disjoint_support_commutation() -> Result<(), String> {
    for n in [4, 5] {
        let reps = [
            build_rho_g(n).unwrap(),
            build_rho_b(n).unwrap(),
            phi_g_over(n, "t").unwrap(),
            phi_b_over(n, "t").unwrap(),
        ];
        for rep in &reps {
            let labels = rep.labels();
            for (x, y) in labels
                .iter()
                .flat_map(|x| labels.iter().map(move |y| (x, y)))
            {
                if x >= y || !disjoint(x, y) {
                    continue;
                }
                let (a, b) = (rep.image(*x).unwrap(), rep.image(*y).unwrap());
                if a.mul(b).unwrap() != b.mul(a).unwrap() {
                    return Err(format!(
                        "{} at n = {n}: {x} and {y} do not commute",
                        rep.family()
                    ));
                }
            }
        }
    }
    Ok(())
}

fn support(l: &GenLabel) -> Vec<usize> {
    match *l {
        GenLabel::Eps(i, j) => vec![i, j],
        GenLabel::EpsTriple(i, j, k) => vec![i, j, k],
        GenLabel::Alpha(i) => vec![i, i + 1],
    }
}

fn disjoint(x: &GenLabel, y: &GenLabel) -> bool {
    let sy = support(y);
    support(x).iter().all(|i| !sy.contains(i))
}

fn outcome(gens: &[Matrix<Rational>]) -> Result<Option<Verdict>, String> {
    match decide(gens) {
        Ok(c) => {
            if !c.is_sound_for(gens).map_err(|e| e.to_string())? {
                return Err("unsound certificate".into());
            }
            Ok(Some(c.verdict))
        }
        Err(IrredError::WitnessNotFound { .. }) => Ok(None),
        Err(e) => Err(e.to_string()),
    }
}

/// Instances for the conjugation-stability check, with their verdicts.
pub fn decide_instances() -> Vec<(&'static str, Vec<Matrix<Rational>>)> {
    let g = |t: [i64; 3], m: [i64; 3]| {
        let a = phi_g_over(3, "t").unwrap();
        let b = phi_g_over(3, "m").unwrap();
        let s = Specialization::indexed("t", &t.map(integer))
            .unwrap()
            .merge(&Specialization::indexed("m", &m.map(integer)).unwrap())
            .unwrap();
        tensor(&a, &b).unwrap().specialize(&s).unwrap().generators()
    };
    let b = |t: i64| {
        let s = Specialization::parse(&format!("t={t}")).unwrap();
        phi_b_over(3, "t")
            .unwrap()
            .specialize(&s)
            .unwrap()
            .generators()
    };
    vec![
        ("phi_G(2,3,5)", phi_g3([integer(2), integer(3), integer(5)])),
        ("phi_G(1,2,3)", phi_g3([integer(1), integer(2), integer(3)])),
        ("phi_G(2,3,1)", phi_g3([integer(2), integer(3), integer(1)])),
        ("phi_B(2)", b(2)),
        ("phi_G(2,3,5)^2", g([2, 3, 5], [2, 3, 5])),
        ("phi_G(2,3,5)xphi_G(2,3,7)", g([2, 3, 5], [2, 3, 7])),
        ("rotation", vec![Matrix::from_ints(&[&[0, -1], &[1, 0]])]),
    ]
}

/// decide's outcome is unchanged under 10 random conjugations per instance,
/// and every certificate it returns is sound.
pub fn decide_conjugation_stability() -> Result<(), String> {
    for (name, gens) in decide_instances() {
        let d = gens[0].rows();
        let base = outcome(&gens)?;
        run(10, conjugator(d), |(lo, up)| {
            let conj = conjugate(&gens, &invertible(d, &lo, &up));
            let got = outcome(&conj).map_err(TestCaseError::fail)?;
            prop_assert_eq!(got, base, "{}", name);
            Ok(())
        })?;
    }
    Ok(())
}
