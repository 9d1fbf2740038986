//! Two-variable specializations of Sergeev's formula for `s_λ[X − Y]`.
//!
//! Each identity expresses a Schur function on a small signed alphabet as an
//! explicit rational function. They are checked here by exact evaluation at
//! seeded rational points, with the left side computed independently through
//! [`schur_eval_characters`].

use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, Partition};
use crate::scalar::FieldScalar;
use crate::schur::{schur_eval_characters, SignedAlphabet};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt;

/// Which specialization to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Specialization {
    /// Hook `μ = (m, 1^e)` on `x₁ − x₂`.
    HookOneMinusOne,
    /// Two-row `ν` on `y₁ + y₂`.
    TwoRowTwoVariables,
    /// Double hook `λ` on `u₁ + u₂ − v₁ − v₂`.
    DoubleHookTwoMinusTwo,
    /// Hook `λ = (n₂, 1^{d₁})` on `u₁ + u₂ − v₁ − v₂`.
    HookTwoMinusTwo,
}

impl Specialization {
    pub const ALL: [Specialization; 4] = [
        Specialization::HookOneMinusOne,
        Specialization::TwoRowTwoVariables,
        Specialization::DoubleHookTwoMinusTwo,
        Specialization::HookTwoMinusTwo,
    ];

    /// Whether `shape` satisfies the identity's hypotheses.
    pub fn qualifies(self, shape: &Partition) -> bool {
        match self {
            Specialization::HookOneMinusOne | Specialization::HookTwoMinusTwo => {
                shape.hook_params().is_some()
            }
            Specialization::TwoRowTwoVariables => !shape.is_empty() && shape.len() <= 2,
            Specialization::DoubleHookTwoMinusTwo => shape.double_hook_params().is_some(),
        }
    }

    /// All qualifying shapes of size `n`, in enumeration order.
    pub fn shapes(self, n: u32) -> Vec<Partition> {
        enumerate_partitions(n)
            .into_iter()
            .filter(|p| self.qualifies(p))
            .collect()
    }
}

impl fmt::Display for Specialization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Specialization::HookOneMinusOne => "hook[x1-x2]",
            Specialization::TwoRowTwoVariables => "two-row[y1+y2]",
            Specialization::DoubleHookTwoMinusTwo => "double-hook[u1+u2-v1-v2]",
            Specialization::HookTwoMinusTwo => "hook[u1+u2-v1-v2]",
        })
    }
}

/// Values for the four variables. The one- and two-variable identities read
/// `x₁ = u₁, x₂ = v₁` and `y₁ = u₁, y₂ = u₂`.
#[derive(Clone, Debug, PartialEq)]
pub struct SamplePoint<F> {
    pub u: [F; 2],
    pub v: [F; 2],
}

impl<F: FieldScalar> SamplePoint<F> {
    pub fn new(u1: F, u2: F, v1: F, v2: F) -> Self {
        SamplePoint {
            u: [u1, u2],
            v: [v1, v2],
        }
    }

    /// The alphabet the identity's left side is evaluated on.
    pub fn alphabet(&self, which: Specialization) -> SignedAlphabet<F> {
        let [u1, u2] = self.u.clone();
        let [v1, v2] = self.v.clone();
        match which {
            Specialization::HookOneMinusOne => SignedAlphabet::difference([u1], [v1]),
            Specialization::TwoRowTwoVariables => SignedAlphabet::positive([u1, u2]),
            _ => SignedAlphabet::difference([u1, u2], [v1, v2]),
        }
    }

    fn check_regular(&self, which: Specialization) -> Result<()> {
        let [u1, u2] = &self.u;
        let [v1, v2] = &self.v;
        let singular = match which {
            Specialization::HookOneMinusOne => false,
            Specialization::TwoRowTwoVariables => u1 == u2,
            _ => u1 == u2 || v1 == v2,
        };
        if singular {
            Err(Error::SingularPoint(format!("{which}: {self:?}")))
        } else {
            Ok(())
        }
    }
}

fn sign<F: FieldScalar>(exp: u32) -> F {
    if exp.is_multiple_of(2) {
        F::one()
    } else {
        -F::one()
    }
}

/// Closed-form right side of the specialization for `shape` at `point`.
pub fn sergeev_rhs<F: FieldScalar>(
    which: Specialization,
    shape: &Partition,
    point: &SamplePoint<F>,
) -> Result<F> {
    if !which.qualifies(shape) {
        return Err(Error::HypothesisNotMet(format!("{shape:?} for {which}")));
    }
    point.check_regular(which)?;
    let [u1, u2] = point.u.clone();
    let [v1, v2] = point.v.clone();
    let value = match which {
        Specialization::HookOneMinusOne => {
            let (e, m) = shape.hook_params().expect("qualified");
            let (x1, x2) = (u1, v1);
            sign::<F>(e) * x1.pow_u32(m - 1) * x2.pow_u32(e) * (x1 - x2)
        }
        Specialization::TwoRowTwoVariables => {
            let (a, b) = (shape.part(0), shape.part(1));
            let (y1, y2) = (u1, u2);
            (y1.clone() * y2.clone()).pow_u32(b) * (y1.pow_u32(a - b + 1) - y2.pow_u32(a - b + 1))
                / (y1 - y2)
        }
        Specialization::DoubleHookTwoMinusTwo => {
            let dh = shape.double_hook_params().expect("qualified");
            let cross = (u1.clone() - v1.clone())
                * (u2.clone() - v1.clone())
                * (u1.clone() - v2.clone())
                * (u2.clone() - v2.clone())
                / ((u1.clone() - u2.clone()) * (v1.clone() - v2.clone()));
            let r = dh.n4 - dh.n3 + 1;
            cross
                * sign::<F>(dh.d1)
                * (u1.clone() * u2.clone()).pow_u32(dh.n3 - 2)
                * (v1.clone() * v2.clone()).pow_u32(dh.d2)
                * (u2.pow_u32(r) - u1.pow_u32(r))
                * (v2.pow_u32(dh.d1 + 1) - v1.pow_u32(dh.d1 + 1))
        }
        Specialization::HookTwoMinusTwo => {
            let (d1, n2) = shape.hook_params().expect("qualified");
            let term = |a: &F, b: &F, other_a: &F, other_b: &F| {
                a.clone()
                    * b.clone()
                    * (a.clone() - b.clone())
                    * (a.clone() - other_b.clone())
                    * (other_a.clone() - b.clone())
                    * a.pow_u32(n2 - 2)
                    * b.pow_u32(d1 - 1)
            };
            let sum =
                term(&u1, &v1, &u2, &v2) - term(&u1, &v2, &u2, &v1) - term(&u2, &v1, &u1, &v2)
                    + term(&u2, &v2, &u1, &v1);
            sign::<F>(d1 - 1) * sum / ((u1 - u2) * (v1 - v2))
        }
    };
    Ok(value)
}

/// Checks the specialization for `shape` at every point.
pub fn verify_sergeev_specializations<F: FieldScalar>(
    which: Specialization,
    shape: &Partition,
    points: &[SamplePoint<F>],
) -> Result<bool> {
    for point in points {
        let rhs = sergeev_rhs(which, shape, point)?;
        if schur_eval_characters(shape, &point.alphabet(which)) != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Largest numerator and denominator magnitude of generated sample values.
pub const SAMPLE_BOUND: i64 = 13;

fn random_rational(rng: &mut ChaCha8Rng) -> BigRational {
    loop {
        let num = rng.gen_range(-SAMPLE_BOUND..=SAMPLE_BOUND);
        if num != 0 {
            let den = rng.gen_range(1..=SAMPLE_BOUND);
            return BigRational::new(BigInt::from(num), BigInt::from(den));
        }
    }
}

/// `count` reproducible points with nonzero coordinates, `u₁ ≠ u₂`,
/// `v₁ ≠ v₂` and no `uᵢ = vⱼ` coincidences.
pub fn sample_points(seed: u64, count: usize) -> Vec<SamplePoint<BigRational>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let vals: [BigRational; 4] = std::array::from_fn(|_| random_rational(&mut rng));
        let distinct = (0..4).all(|i| (i + 1..4).all(|j| vals[i] != vals[j]));
        if distinct {
            let [u1, u2, v1, v2] = vals;
            out.push(SamplePoint::new(u1, u2, v1, v2));
        }
    }
    out
}

/// `count` reproducible ordinary alphabets of `size` distinct nonzero letters.
pub fn sample_alphabets(seed: u64, count: usize, size: usize) -> Vec<SignedAlphabet<BigRational>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut letters: Vec<BigRational> = Vec::with_capacity(size);
            while letters.len() < size {
                let v = random_rational(&mut rng);
                if !letters.contains(&v) {
                    letters.push(v);
                }
            }
            SignedAlphabet::positive(letters)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn p(parts: &[u32]) -> Partition {
        Partition::from_parts(parts.iter().copied())
    }

    #[test]
    fn hook_difference_example() {
        let mu = p(&[3, 1, 1]);
        let pt = SamplePoint::new(q(2, 1), q(0, 1), q(1, 2), q(0, 1));
        assert!(
            verify_sergeev_specializations(Specialization::HookOneMinusOne, &mu, &[pt]).unwrap()
        );
    }

    #[test]
    fn two_row_example() {
        let nu = p(&[3, 2]);
        let pt = SamplePoint::new(q(1, 3), q(4, 1), q(0, 1), q(0, 1));
        let rhs = sergeev_rhs(Specialization::TwoRowTwoVariables, &nu, &pt).unwrap();
        assert_eq!(
            rhs,
            schur_eval_characters(&nu, &pt.alphabet(Specialization::TwoRowTwoVariables))
        );
    }

    #[test]
    fn double_hook_without_fourth_part() {
        // (3,2,2,1): the second row equals 2, so the rewrite supplies n3 = 2.
        let lambda = p(&[3, 2, 2, 1]);
        let dh = lambda.double_hook_params().unwrap();
        assert_eq!((dh.d1, dh.d2, dh.n3, dh.n4), (1, 1, 2, 3));
        let pts = sample_points(7, 5);
        assert!(verify_sergeev_specializations(
            Specialization::DoubleHookTwoMinusTwo,
            &lambda,
            &pts
        )
        .unwrap());
    }

    #[test]
    fn hook_super_example() {
        let pts = sample_points(11, 3);
        for shape in Specialization::HookTwoMinusTwo.shapes(6) {
            assert!(
                verify_sergeev_specializations(Specialization::HookTwoMinusTwo, &shape, &pts)
                    .unwrap()
            );
        }
    }

    #[test]
    fn singular_and_unqualified() {
        let pt = SamplePoint::new(q(1, 1), q(1, 1), q(2, 1), q(3, 1));
        assert!(matches!(
            sergeev_rhs(Specialization::TwoRowTwoVariables, &p(&[2, 1]), &pt),
            Err(Error::SingularPoint(_))
        ));
        assert!(matches!(
            sergeev_rhs(Specialization::HookTwoMinusTwo, &p(&[2, 2]), &pt),
            Err(Error::HypothesisNotMet(_))
        ));
    }

    #[test]
    fn wrong_sign_is_detected() {
        let shape = p(&[4, 1, 1]);
        let pt = &sample_points(3, 1)[0];
        let rhs = sergeev_rhs(Specialization::HookTwoMinusTwo, &shape, pt).unwrap();
        let lhs = schur_eval_characters(&shape, &pt.alphabet(Specialization::HookTwoMinusTwo));
        assert_eq!(lhs, rhs);
        assert_ne!(lhs, -rhs);
    }

    #[test]
    fn sampling_is_reproducible() {
        assert_eq!(sample_points(42, 4), sample_points(42, 4));
        assert_ne!(sample_points(42, 4), sample_points(43, 4));
        for a in sample_alphabets(5, 3, 4) {
            assert_eq!(a.len(), 4);
        }
    }
}
