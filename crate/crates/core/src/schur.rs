//! Evaluation of Schur functions on finite signed alphabets.
//!
//! An alphabet is a formal sum `±a₁ ± a₂ ± …`; a negated entry contributes
//! `−aᵢ^r` to the power sum `p_r`, which is not the same as the letter `−aᵢ`
//! when `r` is even. Sums and products of alphabets follow
//! `p_r[X+Y] = p_r[X] + p_r[Y]` and `p_r[XY] = p_r[X]·p_r[Y]`.
//!
//! Two independent evaluators are provided: the power-sum expansion
//! `s_λ = Σ_ρ z_ρ⁻¹ χ^λ(ρ) p_ρ`, valid for any signed alphabet, and Jacobi's
//! bialternant `det(x_i^{λ_j+m−j}) / ∏_{i<j}(x_i − x_j)` for ordinary
//! alphabets of distinct values.

use crate::character::with_oracle;
use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, Partition};
use crate::scalar::FieldScalar;
use num_bigint::{BigInt, Sign};

/// Sign of an alphabet entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EntrySign {
    Plus,
    Minus,
}

impl EntrySign {
    fn times(self, other: EntrySign) -> EntrySign {
        if self == other {
            EntrySign::Plus
        } else {
            EntrySign::Minus
        }
    }
}

/// A finite alphabet `Σ ±aᵢ` over the field `F`.
#[derive(Clone, Debug, PartialEq)]
pub struct SignedAlphabet<F> {
    entries: Vec<(EntrySign, F)>,
}

impl<F> Default for SignedAlphabet<F> {
    fn default() -> Self {
        SignedAlphabet {
            entries: Vec::new(),
        }
    }
}

impl<F: FieldScalar> SignedAlphabet<F> {
    pub fn new(entries: Vec<(EntrySign, F)>) -> Self {
        SignedAlphabet { entries }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// An ordinary alphabet `a₁ + a₂ + …`.
    pub fn positive<I: IntoIterator<Item = F>>(values: I) -> Self {
        Self::new(values.into_iter().map(|v| (EntrySign::Plus, v)).collect())
    }

    /// `X − Y` for ordinary alphabets given by their letters.
    pub fn difference<I, J>(plus: I, minus: J) -> Self
    where
        I: IntoIterator<Item = F>,
        J: IntoIterator<Item = F>,
    {
        let mut entries: Vec<_> = plus.into_iter().map(|v| (EntrySign::Plus, v)).collect();
        entries.extend(minus.into_iter().map(|v| (EntrySign::Minus, v)));
        Self::new(entries)
    }

    pub fn entries(&self) -> &[(EntrySign, F)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Multiplies every letter by `c`.
    pub fn scaled(&self, c: &F) -> Self {
        Self::new(
            self.entries
                .iter()
                .map(|(s, v)| (*s, v.clone() * c.clone()))
                .collect(),
        )
    }

    fn is_ordinary(&self) -> Result<()> {
        match self
            .entries
            .iter()
            .position(|(s, _)| *s == EntrySign::Minus)
        {
            Some(i) => Err(Error::SignedEntry(i)),
            None => Ok(()),
        }
    }
}

/// `A + B`: concatenation.
pub fn alphabet_sum<F: FieldScalar>(
    a: &SignedAlphabet<F>,
    b: &SignedAlphabet<F>,
) -> SignedAlphabet<F> {
    let mut entries = a.entries.clone();
    entries.extend(b.entries.iter().cloned());
    SignedAlphabet::new(entries)
}

/// `AB`: all pairwise products, signs multiplied.
pub fn alphabet_product<F: FieldScalar>(
    a: &SignedAlphabet<F>,
    b: &SignedAlphabet<F>,
) -> SignedAlphabet<F> {
    let mut entries = Vec::with_capacity(a.len() * b.len());
    for (sa, va) in &a.entries {
        for (sb, vb) in &b.entries {
            entries.push((sa.times(*sb), va.clone() * vb.clone()));
        }
    }
    SignedAlphabet::new(entries)
}

/// `p_r[A] = Σ ±aᵢ^r`.
pub fn power_sum_eval<F: FieldScalar>(r: u32, a: &SignedAlphabet<F>) -> F {
    a.entries.iter().fold(F::zero(), |acc, (s, v)| {
        let term = v.pow_u32(r);
        match s {
            EntrySign::Plus => acc + term,
            EntrySign::Minus => acc - term,
        }
    })
}

/// `s_λ[A]` through the power-sum expansion with exact character values.
pub fn schur_eval_characters<F: FieldScalar>(lambda: &Partition, a: &SignedAlphabet<F>) -> F {
    let n = lambda.size();
    let power_sums: Vec<F> = (0..=n).map(|r| power_sum_eval(r, a)).collect();
    let mut total = F::zero();
    for rho in enumerate_partitions(n) {
        let chi = with_oracle(|o| o.character(lambda, &rho)).expect("sizes agree");
        if chi.sign() == Sign::NoSign {
            continue;
        }
        let z = BigInt::from_biguint(Sign::Plus, rho.z());
        let coeff = F::from_bigint(&chi) / F::from_bigint(&z);
        let p_rho = rho
            .parts()
            .iter()
            .fold(F::one(), |acc, &r| acc * power_sums[r as usize].clone());
        total = total + coeff * p_rho;
    }
    total
}

/// `s_λ(x₁, …, x_m)` as a quotient of alternants. The alphabet must be
/// ordinary with pairwise distinct letters; `s_λ` vanishes when `l(λ) > m`.
pub fn schur_eval_bialternant<F: FieldScalar>(
    lambda: &Partition,
    a: &SignedAlphabet<F>,
) -> Result<F> {
    a.is_ordinary()?;
    let xs: Vec<F> = a.entries.iter().map(|(_, v)| v.clone()).collect();
    let m = xs.len();
    let mut vandermonde = F::one();
    for i in 0..m {
        for j in i + 1..m {
            if xs[i] == xs[j] {
                return Err(Error::RepeatedValue(i, j));
            }
            vandermonde = vandermonde * (xs[i].clone() - xs[j].clone());
        }
    }
    if lambda.len() > m {
        return Ok(F::zero());
    }
    let matrix: Vec<Vec<F>> = xs
        .iter()
        .map(|x| {
            (0..m)
                .map(|j| x.pow_u32(lambda.part(j) + (m - 1 - j) as u32))
                .collect()
        })
        .collect();
    Ok(determinant(matrix) / vandermonde)
}

/// Determinant by Gaussian elimination over a field.
pub fn determinant<F: FieldScalar>(mut m: Vec<Vec<F>>) -> F {
    let n = m.len();
    let mut det = F::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return F::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det = det * p.clone();
        let (top, rest) = m.split_at_mut(col + 1);
        let pivot_row = &top[col];
        for row in rest {
            if row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone() / p.clone();
            for (x, y) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *x = x.clone() - factor.clone() * y.clone();
            }
        }
    }
    det
}

/// Source of the coefficients in [`verify_comultiplication`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GammaSource {
    Oracle,
    Auto,
}

/// Checks `s_λ[XY] = Σ_{μ,ν ⊢ n} γ^λ_{μν} s_μ[X] s_ν[Y]` exactly.
///
/// The left side uses the power-sum expansion on the product alphabet; the
/// right side uses the bialternant on `X` and `Y`, which must be ordinary
/// alphabets of distinct letters.
pub fn verify_comultiplication<F: FieldScalar>(
    lambda: &Partition,
    x: &SignedAlphabet<F>,
    y: &SignedAlphabet<F>,
    source: GammaSource,
) -> Result<bool> {
    let method = match source {
        GammaSource::Oracle => crate::Method::OracleOnly,
        GammaSource::Auto => crate::Method::Auto,
    };
    verify_comultiplication_with(lambda, x, y, |l, m, n| {
        crate::compute(l, m, n, method).map(|r| BigInt::from_biguint(Sign::Plus, r.gamma))
    })
}

/// [`verify_comultiplication`] with caller-supplied coefficients.
pub fn verify_comultiplication_with<F, G>(
    lambda: &Partition,
    x: &SignedAlphabet<F>,
    y: &SignedAlphabet<F>,
    mut gamma: G,
) -> Result<bool>
where
    F: FieldScalar,
    G: FnMut(&Partition, &Partition, &Partition) -> Result<BigInt>,
{
    let n = lambda.size();
    let lhs = schur_eval_characters(lambda, &alphabet_product(x, y));
    let shapes = enumerate_partitions(n);
    let sx = shapes
        .iter()
        .map(|s| schur_eval_bialternant(s, x))
        .collect::<Result<Vec<_>>>()?;
    let sy = shapes
        .iter()
        .map(|s| schur_eval_bialternant(s, y))
        .collect::<Result<Vec<_>>>()?;
    let mut rhs = F::zero();
    for (i, mu) in shapes.iter().enumerate() {
        for (j, nu) in shapes.iter().enumerate() {
            let g = gamma(lambda, mu, nu)?;
            if g.sign() == Sign::NoSign {
                continue;
            }
            rhs = rhs + F::from_bigint(&g) * sx[i].clone() * sy[j].clone();
        }
    }
    Ok(lhs == rhs)
}
