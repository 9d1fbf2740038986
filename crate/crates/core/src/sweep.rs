//! Closed-form-versus-oracle sweeps over whole families of triples.

use crate::character::{clear_character_cache, kron_oracle};
use crate::closed_forms::{compute, Method};
use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, Partition};
use crate::result::Provenance;
use num_bigint::BigUint;
use rayon::prelude::*;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

/// Which `(μ, ν)` pairs a sweep ranges over. `λ` always ranges over every
/// partition of `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// `μ, ν` with at most two rows.
    TwoRowTwoRow,
    /// `μ, ν` of the form `(m, 1^e)`, including `(n)` and `(1^n)`.
    HookHook,
    /// `μ` of the form `(m, 1^e)`, `ν` with at most two rows.
    HookTwoRow,
    All,
}

impl Family {
    pub const ALL: [Family; 4] = [
        Family::TwoRowTwoRow,
        Family::HookHook,
        Family::HookTwoRow,
        Family::All,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Family::TwoRowTwoRow => "two-row",
            Family::HookHook => "hook-hook",
            Family::HookTwoRow => "hook-two-row",
            Family::All => "all",
        }
    }

    /// Whether `(μ, ν)` belongs to the family.
    pub fn admits(&self, mu: &Partition, nu: &Partition) -> bool {
        let hook = |p: &Partition| p.hook_leg_any().is_some();
        let two_row = |p: &Partition| p.is_two_row_like();
        match self {
            Family::TwoRowTwoRow => two_row(mu) && two_row(nu),
            Family::HookHook => hook(mu) && hook(nu),
            Family::HookTwoRow => hook(mu) && two_row(nu),
            Family::All => true,
        }
    }

    /// The family's triples of size `n` in enumeration order: `λ` outermost,
    /// then `μ`, then `ν`.
    pub fn triples(&self, n: u32) -> Vec<[Partition; 3]> {
        let shapes = enumerate_partitions(n);
        let mut out = Vec::new();
        for lambda in &shapes {
            for mu in &shapes {
                for nu in &shapes {
                    if self.admits(mu, nu) {
                        out.push([lambda.clone(), mu.clone(), nu.clone()]);
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "two-row" | "tworow" | "two-row-two-row" => Ok(Family::TwoRowTwoRow),
            "hook-hook" | "hookhook" => Ok(Family::HookHook),
            "hook-two-row" | "hooktworow" => Ok(Family::HookTwoRow),
            "all" => Ok(Family::All),
            _ => Err(Error::Parse(format!("unknown family {s:?}"))),
        }
    }
}

/// A triple where the dispatcher disagreed with the oracle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub triple: [Partition; 3],
    pub closed: BigUint,
    pub oracle: BigUint,
    pub provenance: Provenance,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [l, m, n] = &self.triple;
        write!(
            f,
            "lambda={l} mu={m} nu={n}: {}={} oracle={}",
            self.provenance, self.closed, self.oracle
        )
    }
}

/// Outcome of [`sweep`] for one size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepReport {
    pub n: u32,
    pub family: Family,
    pub triples_checked: usize,
    /// Triples no closed form covered; they were only checked for oracle
    /// self-agreement.
    pub fallbacks: usize,
    pub mismatches: Vec<Mismatch>,
    /// Largest coefficient produced by a closed form.
    pub max_closed_gamma: BigUint,
    pub elapsed_ms: u128,
}

impl SweepReport {
    pub fn is_ok(&self) -> bool {
        self.mismatches.is_empty()
    }
}

impl fmt::Display for SweepReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={} family={} triples={} fallbacks={} mismatches={} max_gamma={} elapsed_ms={}",
            self.n,
            self.family,
            self.triples_checked,
            self.fallbacks,
            self.mismatches.len(),
            self.max_closed_gamma,
            self.elapsed_ms
        )
    }
}

enum Outcome {
    Closed(BigUint),
    Fallback,
    Bad(Mismatch),
}

fn check(triple: &[Partition; 3]) -> Result<Outcome> {
    let [l, m, n] = triple;
    let auto = compute(l, m, n, Method::Auto)?;
    if auto.provenance == Provenance::Oracle {
        return Ok(Outcome::Fallback);
    }
    let oracle = kron_oracle(l, m, n)?.gamma;
    if oracle == auto.gamma {
        Ok(Outcome::Closed(auto.gamma))
    } else {
        Ok(Outcome::Bad(Mismatch {
            triple: triple.clone(),
            closed: auto.gamma,
            oracle,
            provenance: auto.provenance,
        }))
    }
}

/// Compares [`compute`] in `Auto` mode against the oracle on every triple of
/// the family with `|λ| = n`. `jobs` is the number of worker threads; `1`
/// runs on the calling thread.
pub fn sweep(family: Family, n: u32, jobs: usize) -> Result<SweepReport> {
    let start = Instant::now();
    let triples = family.triples(n);
    let outcomes: Vec<Outcome> = if jobs <= 1 {
        let r = triples.iter().map(check).collect::<Result<_>>();
        clear_character_cache();
        r?
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::ThreadPool(e.to_string()))?;
        let r = pool.install(|| triples.par_iter().map(check).collect::<Result<_>>());
        pool.broadcast(|_| clear_character_cache());
        r?
    };

    let mut report = SweepReport {
        n,
        family,
        triples_checked: triples.len(),
        fallbacks: 0,
        mismatches: Vec::new(),
        max_closed_gamma: BigUint::default(),
        elapsed_ms: 0,
    };
    for outcome in outcomes {
        match outcome {
            Outcome::Closed(g) => report.max_closed_gamma = report.max_closed_gamma.max(g),
            Outcome::Fallback => report.fallbacks += 1,
            Outcome::Bad(m) => report.mismatches.push(m),
        }
    }
    report.elapsed_ms = start.elapsed().as_millis();
    Ok(report)
}
