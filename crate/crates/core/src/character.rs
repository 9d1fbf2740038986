//! Irreducible characters of `S_n` and the class-sum Kronecker oracle.
//!
//! Characters are computed with the Murnaghan–Nakayama rule on beta-sets
//! (first-column hook lengths): removing a border strip of size `r` is the
//! same as moving one bead from position `b` to `b − r`, with sign
//! `(−1)^{beads strictly between}`. Results are memoized on `(λ, ρ)`.
//!
//! The oracle evaluates
//! `n!·γ = Σ_{ρ ⊢ n} (n!/z_ρ) χ^λ(ρ) χ^μ(ρ) χ^ν(ρ)` in integers and divides once,
//! checking divisibility.

use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, Partition};
use crate::result::{KroneckerResult, Provenance};
use crate::scalar::RingScalar;
use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Zero};
use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;

/// Memo table for `χ^λ(ρ)` over any signed ring.
#[derive(Clone, Debug, Default)]
pub struct CharacterCache<T> {
    memo: HashMap<(Partition, Partition), T>,
}

impl<T: RingScalar> CharacterCache<T> {
    pub fn new() -> Self {
        CharacterCache {
            memo: HashMap::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.memo.len()
    }

    pub fn is_empty(&self) -> bool {
        self.memo.is_empty()
    }

    pub fn clear(&mut self) {
        self.memo.clear();
    }

    /// `χ^λ(ρ)`; errors when `|λ| ≠ |ρ|`.
    pub fn character(&mut self, lambda: &Partition, rho: &Partition) -> Result<T> {
        if lambda.size() != rho.size() {
            return Err(Error::SizeMismatch(format!(
                "|{lambda:?}| = {} but |{rho:?}| = {}",
                lambda.size(),
                rho.size()
            )));
        }
        Ok(self.mn(lambda, rho.parts()))
    }

    fn mn(&mut self, lambda: &Partition, rho: &[u32]) -> T {
        let Some((&r, rest)) = rho.split_first() else {
            return if lambda.is_empty() {
                T::one()
            } else {
                T::zero()
            };
        };
        if rest.is_empty() {
            // One cycle: nonzero only on hooks, value (−1)^{leg}.
            return match lambda.hook_leg_any() {
                Some(leg) if leg % 2 == 0 => T::one(),
                Some(_) => -T::one(),
                None => T::zero(),
            };
        }
        let key = (lambda.clone(), Partition::from_parts(rho.iter().copied()));
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let mut total = T::zero();
        for (smaller, negative) in remove_border_strips(lambda, r) {
            let v = self.mn(&smaller, rest);
            total = if negative { total - v } else { total + v };
        }
        self.memo.insert(key, total.clone());
        total
    }
}

/// All shapes obtained by removing a border strip of size `r`, with whether
/// the strip has odd height (negative sign).
fn remove_border_strips(lambda: &Partition, r: u32) -> Vec<(Partition, bool)> {
    let len = lambda.len() as i64;
    let beta: Vec<i64> = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| i64::from(p) + len - 1 - i as i64)
        .collect();
    let r = i64::from(r);
    let mut out = Vec::new();
    for (idx, &b) in beta.iter().enumerate() {
        let target = b - r;
        if target < 0 || beta.contains(&target) {
            continue;
        }
        let between = beta.iter().filter(|&&c| target < c && c < b).count();
        let mut moved = beta.clone();
        moved[idx] = target;
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let parts = moved
            .iter()
            .enumerate()
            .map(|(i, &c)| (c - (len - 1 - i as i64)) as u32);
        out.push((Partition::from_parts(parts), between % 2 == 1));
    }
    out
}

/// Per-size data for the oracle: classes, weights `n!/z_ρ`, `n!`.
#[derive(Debug)]
struct ClassData {
    classes: Vec<Partition>,
    weights: Vec<BigInt>,
    factorial: BigInt,
}

impl ClassData {
    fn new(n: u32) -> Self {
        let classes = enumerate_partitions(n);
        let factorial: BigInt = (1..=n).map(BigInt::from).product();
        let weights = classes
            .iter()
            .map(|rho| &factorial / BigInt::from_biguint(Sign::Plus, rho.z()))
            .collect();
        ClassData {
            classes,
            weights,
            factorial,
        }
    }
}

/// Exact Kronecker oracle with character rows cached per shape.
///
/// Not `Sync`; use one per worker thread. The free functions in this module
/// use a thread-local instance.
#[derive(Debug, Default)]
pub struct Oracle {
    chars: CharacterCache<BigInt>,
    class_data: HashMap<u32, Rc<ClassData>>,
    rows: HashMap<Partition, Rc<Vec<BigInt>>>,
}

impl Oracle {
    pub fn new() -> Self {
        Self::default()
    }

    /// Drops every cached character value.
    pub fn clear(&mut self) {
        self.chars.clear();
        self.class_data.clear();
        self.rows.clear();
    }

    pub fn character(&mut self, lambda: &Partition, rho: &Partition) -> Result<BigInt> {
        self.chars.character(lambda, rho)
    }

    /// `f^λ = χ^λ(1^n)`.
    pub fn dimension(&mut self, lambda: &Partition) -> BigUint {
        let id = Partition::column(lambda.size());
        let v = self.chars.character(lambda, &id).expect("sizes agree");
        v.to_biguint().expect("dimensions are positive")
    }

    fn classes(&mut self, n: u32) -> Rc<ClassData> {
        self.class_data
            .entry(n)
            .or_insert_with(|| Rc::new(ClassData::new(n)))
            .clone()
    }

    /// Character row `(χ^λ(ρ))_ρ` in enumeration order of `ρ ⊢ n`.
    pub fn row(&mut self, lambda: &Partition) -> Rc<Vec<BigInt>> {
        if let Some(r) = self.rows.get(lambda) {
            return r.clone();
        }
        let data = self.classes(lambda.size());
        let row: Vec<BigInt> = data
            .classes
            .iter()
            .map(|rho| self.chars.mn(lambda, rho.parts()))
            .collect();
        let row = Rc::new(row);
        self.rows.insert(lambda.clone(), row.clone());
        row
    }

    /// `γ^λ_{μν}` from the class sum.
    pub fn kron(&mut self, lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<BigUint> {
        let n = lambda.size();
        if mu.size() != n || nu.size() != n {
            return Err(Error::SizeMismatch(format!(
                "({lambda:?}, {mu:?}, {nu:?}) have sizes {n}, {}, {}",
                mu.size(),
                nu.size()
            )));
        }
        let data = self.classes(n);
        let (rl, rm, rn) = (self.row(lambda), self.row(mu), self.row(nu));
        let mut sum = BigInt::zero();
        for i in 0..data.classes.len() {
            if rl[i].is_zero() || rm[i].is_zero() || rn[i].is_zero() {
                continue;
            }
            sum += &data.weights[i] * &rl[i] * &rm[i] * &rn[i];
        }
        let (q, r) = sum.div_rem(&data.factorial);
        if !r.is_zero() || q.sign() == Sign::Minus {
            return Err(Error::IntegralityViolation(format!(
                "{lambda:?}, {mu:?}, {nu:?}"
            )));
        }
        Ok(q.to_biguint().unwrap_or_default())
    }
}

thread_local! {
    static ORACLE: RefCell<Oracle> = RefCell::new(Oracle::new());
}

/// Runs `f` with this thread's shared oracle.
pub fn with_oracle<R>(f: impl FnOnce(&mut Oracle) -> R) -> R {
    ORACLE.with(|o| f(&mut o.borrow_mut()))
}

/// Clears this thread's character cache, e.g. between sizes of a sweep.
pub fn clear_character_cache() {
    with_oracle(Oracle::clear)
}

/// `χ^λ(ρ)`, memoized per thread.
pub fn character(lambda: &Partition, rho: &Partition) -> Result<BigInt> {
    with_oracle(|o| o.character(lambda, rho))
}

/// `f^λ`, the degree of the irreducible character.
pub fn dimension(lambda: &Partition) -> BigUint {
    with_oracle(|o| o.dimension(lambda))
}

/// `γ^λ_{μν}` from the character class sum, tagged with
/// [`Provenance::Oracle`].
pub fn kron_oracle(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<KroneckerResult> {
    let gamma = with_oracle(|o| o.kron(lambda, mu, nu))?;
    Ok(KroneckerResult::new(gamma, Provenance::Oracle))
}

/// Sum of `(f^λ)²` over `λ ⊢ n`; equals `n!`.
pub fn sum_of_squared_dimensions(n: u32) -> BigUint {
    enumerate_partitions(n)
        .iter()
        .map(|l| {
            let f = dimension(l);
            &f * &f
        })
        .fold(BigUint::zero(), |a, b| a + b)
}

/// `n!` as an arbitrary-precision integer.
pub fn factorial(n: u32) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}
