//! Closed formulas for `γ^λ_{μν}` when `μ` and `ν` are two-row shapes, hooks,
//! or one of each, and a dispatcher that searches the symmetry group of the
//! coefficient for a triple one of them covers.
//!
//! The symmetries used are the `S₃` action permuting `(λ, μ, ν)` and the
//! conjugation of any two of the three partitions.

use crate::character::kron_oracle;
use crate::error::{Error, Result};
use crate::lattice::{gamma_region_closed, Rect};
use crate::partition::Partition;
use crate::result::{KroneckerResult, Move, Provenance, Slot};
use std::str::FromStr;

fn check_sizes(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u32> {
    let n = lambda.size();
    if mu.size() != n || nu.size() != n {
        return Err(Error::SizeMismatch(format!(
            "|λ| = {n}, |μ| = {}, |ν| = {}",
            mu.size(),
            nu.size()
        )));
    }
    Ok(n)
}

fn indicator(p: bool) -> i64 {
    i64::from(p)
}

fn nonnegative(value: i64, what: &str) -> u64 {
    assert!(value >= 0, "{what} produced a negative coefficient {value}");
    value as u64
}

/// Two two-row shapes `μ`, `ν` and `l(λ) ≤ 4`:
/// `γ = Γ(a,b,a+b+1,c)(ν₂, μ₂+1) − Γ(a,b,a+b+c+d+2,c)(ν₂, μ₂+1)` with
/// `a = λ₃+λ₄`, `b = λ₂−λ₃`, `c = min(λ₁−λ₂, λ₃−λ₄)`, `d = |λ₁+λ₄−λ₂−λ₃|`.
/// Zero when `l(λ) > 4`. One-row `μ` or `ν` are read with second part 0.
pub fn kron_two_tworow(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
    check_sizes(lambda, mu, nu)?;
    if !mu.is_two_row_like() || !nu.is_two_row_like() {
        return Err(Error::ShapeMismatch(format!(
            "μ = {mu:?} and ν = {nu:?} must have at most two parts"
        )));
    }
    if lambda.len() > 4 {
        return Ok(0);
    }
    let (mut m2, mut n2) = (mu.part(1), nu.part(1));
    if n2 > m2 {
        std::mem::swap(&mut m2, &mut n2);
    }
    let l: [u32; 4] = std::array::from_fn(|i| lambda.part(i));
    let a = l[2] + l[3];
    let b = l[1] - l[2];
    let c = (l[0] - l[1]).min(l[2] - l[3]);
    let d = (i64::from(l[0] + l[3]) - i64::from(l[1] + l[2])).unsigned_abs() as u32;

    let near = gamma_region_closed(Rect::new(a, b, a + b + 1, c), n2, m2 + 1);
    let far = gamma_region_closed(Rect::new(a, b, a + b + c + d + 2, c), n2, m2 + 1);
    Ok(nonnegative(near as i64 - far as i64, "two-row theorem"))
}

/// All three shapes two-row: `γ = (y − x)(y ≥ x)` with
/// `x = max(0, ⌈(μ₂+ν₂+λ₂−n)/2⌉)`, `y = ⌈(μ₂+ν₂−λ₂+1)/2⌉`, after ordering the
/// triple so that `ν₂ ≤ μ₂ ≤ λ₂`.
pub fn kron_tworow_corollary(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
    let n = check_sizes(lambda, mu, nu)?;
    if [lambda, mu, nu].iter().any(|p| !p.is_two_row_like()) {
        return Err(Error::ShapeMismatch(
            "all three shapes must have at most two parts".into(),
        ));
    }
    // γ is symmetric in the triple, so sort the second parts.
    let mut seconds = [lambda.part(1), mu.part(1), nu.part(1)].map(i64::from);
    seconds.sort_unstable();
    let [n2, m2, l2] = seconds;
    let n = i64::from(n);
    let x = 0.max(ceil_half(m2 + n2 + l2 - n));
    let y = ceil_half(m2 + n2 - l2 + 1);
    Ok(if y >= x { (y - x) as u64 } else { 0 })
}

fn ceil_half(v: i64) -> i64 {
    v.div_euclid(2) + v.rem_euclid(2)
}

fn require_hook(p: &Partition, name: &str) -> Result<(u32, u32)> {
    p.hook_params().ok_or_else(|| {
        Error::ShapeMismatch(format!(
            "{name} = {p:?} is not a hook (1^e m), e ≥ 1, m ≥ 2"
        ))
    })
}

/// Two hooks `μ = (1^e u)`, `ν = (1^f v)`:
///
/// 1. `λ = (n)`: `δ_{μν}`;
/// 2. `(3,3) ∈ λ`: 0;
/// 3. `λ = (1^{d1} 2^{d2} n3 n4)` a double hook, `x = 2d2 + d1`:
///    `(n3−1 ≤ (e+f−x)/2 ≤ n4)(|f−e| ≤ d1) + (n3 ≤ (e+f−x+1)/2 ≤ n4)(|f−e| ≤ d1+1)`;
/// 4. `λ = (1^d w)` a hook with `e ≤ u`, `f ≤ v`, `d ≤ w`:
///    `(e ≤ d+f)(d ≤ e+f)(f ≤ e+d)`.
///
/// Case 4 outside its hypotheses, and `λ = (1^n)`, return
/// [`Error::HypothesisNotMet`].
pub fn kron_two_hooks(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
    check_sizes(lambda, mu, nu)?;
    let (e, u) = require_hook(mu, "μ")?;
    let (f, v) = require_hook(nu, "ν")?;
    if lambda.len() <= 1 {
        return Ok(u64::from(mu == nu));
    }
    if lambda.part(2) >= 3 {
        return Ok(0);
    }
    let (e, f) = (i64::from(e), i64::from(f));
    if let Some(dh) = lambda.double_hook_params() {
        let (d1, d2, n3, n4) = (
            i64::from(dh.d1),
            i64::from(dh.d2),
            i64::from(dh.n3),
            i64::from(dh.n4),
        );
        let x = 2 * d2 + d1;
        let s = e + f - x;
        let gap = (f - e).abs();
        let value = indicator(2 * (n3 - 1) <= s && s <= 2 * n4) * indicator(gap <= d1)
            + indicator(2 * n3 <= s + 1 && s < 2 * n4) * indicator(gap <= d1 + 1);
        return Ok(nonnegative(value, "two-hook theorem"));
    }
    let Some((d, w)) = lambda.hook_params() else {
        return Err(Error::HypothesisNotMet(format!(
            "λ = {lambda:?} is a single column"
        )));
    };
    if e > i64::from(u) || f > i64::from(v) || d > w {
        return Err(Error::HypothesisNotMet(format!(
            "hook case needs e ≤ u, f ≤ v, d ≤ w; got e={e}, u={u}, f={f}, v={v}, d={d}, w={w}"
        )));
    }
    let d = i64::from(d);
    Ok((e <= d + f && d <= e + f && f <= e + d) as u64)
}

/// Two hooks and a two-row `λ = (λ₁, λ₂)` with `λ₂ ≥ 2`:
/// `(λ₂−1 ≤ e ≤ λ₁)(e = f) + (λ₂ ≤ (e+f+1)/2 ≤ λ₁)(|e−f| ≤ 1)`.
///
/// This is the double-hook case of [`kron_two_hooks`] with `d1 = d2 = 0`,
/// so `λ₂ ≤ 1` (a row or a hook) returns [`Error::HypothesisNotMet`].
pub fn kron_hook_hook_tworow_corollary(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
) -> Result<u64> {
    check_sizes(lambda, mu, nu)?;
    let (e, _) = require_hook(mu, "μ")?;
    let (f, _) = require_hook(nu, "ν")?;
    if !lambda.is_two_row_like() {
        return Err(Error::ShapeMismatch(format!(
            "λ = {lambda:?} is not two-row"
        )));
    }
    let (l1, l2) = (i64::from(lambda.part(0)), i64::from(lambda.part(1)));
    if l2 < 2 {
        return Err(Error::HypothesisNotMet(format!(
            "λ = {lambda:?} must contain the cell (2,2)"
        )));
    }
    let (e, f) = (i64::from(e), i64::from(f));
    let value = indicator(l2 - 1 <= e && e <= l1) * indicator(e == f)
        + indicator(2 * l2 <= e + f + 1 && e + f < 2 * l1) * indicator((e - f).abs() <= 1);
    Ok(value as u64)
}

/// A hook `μ = (1^{e1} m2)` and a two-row `ν = (ν₁, ν₂)`:
///
/// 1. `λ = (n)`: `δ_{μν}`;
/// 2. `(3,3) ∈ λ`: 0;
/// 3. `λ = (1^{d1} 2^{d2} n3 n4)` a double hook; if `n4 − n3 > d1` the pair
///    `{λ, μ}` is conjugated first. With `t = d1 + 2d2`,
///    `(n3 ≤ ν₂−d2−1 ≤ n4)(t < e1 < t+3) + (n3 ≤ ν₂−d2 ≤ n4)(t ≤ e1 ≤ t+3)
///     + (n3 ≤ ν₂−d2+1 ≤ n4)(t < e1 < t+3) − (n3+d2+d1 = ν₂)(t+1 ≤ e1 ≤ t+2)`;
/// 4. `λ` a hook: `γ^λ_{μν} = γ^ν_{λμ}`, evaluated with the two-hook formulas.
///
/// `λ = (1^n)` is handled by conjugating `{λ, μ}` into case 1.
pub fn kron_hook_tworow(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
    check_sizes(lambda, mu, nu)?;
    require_hook(mu, "μ")?;
    if !nu.is_two_row_like() {
        return Err(Error::ShapeMismatch(format!("ν = {nu:?} is not two-row")));
    }
    if lambda.len() <= 1 {
        return Ok(u64::from(mu == nu));
    }
    if lambda.part(0) == 1 {
        return Ok(u64::from(&mu.conjugate() == nu));
    }
    if lambda.part(2) >= 3 {
        return Ok(0);
    }
    if let Some(dh) = lambda.double_hook_params() {
        if dh.n4 - dh.n3 > dh.d1 {
            let (lc, mc) = (lambda.conjugate(), mu.conjugate());
            return kron_hook_tworow_double_hook(&lc, &mc, nu);
        }
        return kron_hook_tworow_double_hook(lambda, mu, nu);
    }
    // λ is a proper hook: move it next to μ and let ν play the outer role.
    match nu.part(1) {
        0 => Ok(u64::from(lambda == mu)),
        1 => kron_two_hooks(nu, lambda, mu),
        _ => kron_hook_hook_tworow_corollary(nu, lambda, mu),
    }
}

fn kron_hook_tworow_double_hook(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
    let dh = lambda
        .double_hook_params()
        .expect("caller checked the shape");
    let (e1, _) = require_hook(mu, "μ")?;
    debug_assert!(dh.n4 - dh.n3 <= dh.d1);
    let (d1, d2, n3, n4) = (
        i64::from(dh.d1),
        i64::from(dh.d2),
        i64::from(dh.n3),
        i64::from(dh.n4),
    );
    let (e1, v2) = (i64::from(e1), i64::from(nu.part(1)));
    let t = d1 + 2 * d2;
    let in_band = |k: i64| indicator(n3 <= k && k <= n4);
    let inner = indicator(t < e1 && e1 < t + 3);
    let value = in_band(v2 - d2 - 1) * inner
        + in_band(v2 - d2) * indicator(t <= e1 && e1 <= t + 3)
        + in_band(v2 - d2 + 1) * inner
        - indicator(n3 + d2 + d1 == v2) * indicator(t < e1 && e1 <= t + 2);
    let value = nonnegative(value, "hook × two-row theorem");
    debug_assert!(value <= 3);
    Ok(value)
}

/// How [`compute`] obtains the coefficient.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Method {
    /// Closed form when some symmetry variant admits one, else the oracle.
    #[default]
    Auto,
    /// Closed forms only; errors when none applies.
    ClosedOnly,
    /// Always the character class sum.
    OracleOnly,
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "auto" => Ok(Method::Auto),
            "closed" | "closed-only" | "closedonly" => Ok(Method::ClosedOnly),
            "oracle" | "oracle-only" | "oracleonly" => Ok(Method::OracleOnly),
            _ => Err(Error::Parse(format!("unknown method {s:?}"))),
        }
    }
}

/// A symmetry variant of a queried triple together with the moves that
/// produced it from the original.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizedTriple {
    pub lambda: Partition,
    pub mu: Partition,
    pub nu: Partition,
    pub moves: Vec<Move>,
}

const CONJUGATIONS: [Option<(Slot, Slot)>; 4] = [
    None,
    Some((Slot::Mu, Slot::Nu)),
    Some((Slot::Lambda, Slot::Mu)),
    Some((Slot::Lambda, Slot::Nu)),
];

const PERMUTATIONS: [[Slot; 3]; 6] = {
    use Slot::{Lambda as L, Mu as M, Nu as N};
    [
        [L, M, N],
        [L, N, M],
        [M, L, N],
        [N, M, L],
        [M, N, L],
        [N, L, M],
    ]
};

impl NormalizedTriple {
    /// The 24 variants of `(λ, μ, ν)` in dispatch order: for each conjugation
    /// pattern (none, `{μ,ν}`, `{λ,μ}`, `{λ,ν}`), the identity, then the three
    /// transpositions (`μ↔ν`, `λ↔μ`, `λ↔ν`), then the two 3-cycles.
    pub fn variants(lambda: &Partition, mu: &Partition, nu: &Partition) -> Vec<NormalizedTriple> {
        let original = [lambda.clone(), mu.clone(), nu.clone()];
        let mut out = Vec::with_capacity(24);
        for conj in CONJUGATIONS {
            let mut moves = Vec::new();
            let mut triple = original.clone();
            if let Some((s, t)) = conj {
                let m = Move::ConjugatePair(s, t);
                triple = m.apply(&triple);
                moves.push(m);
            }
            for order in PERMUTATIONS {
                let mut moves = moves.clone();
                let mut t = triple.clone();
                if order != PERMUTATIONS[0] {
                    let m = Move::Permute(order);
                    t = m.apply(&t);
                    moves.push(m);
                }
                let [lambda, mu, nu] = t;
                out.push(NormalizedTriple {
                    lambda,
                    mu,
                    nu,
                    moves,
                });
            }
        }
        out
    }

    /// Undoes the recorded moves.
    pub fn original(&self) -> [Partition; 3] {
        let mut t = [self.lambda.clone(), self.mu.clone(), self.nu.clone()];
        for m in self.moves.iter().rev() {
            t = m.inverse().apply(&t);
        }
        t
    }

    /// The closed form covering this variant, if any, with its value.
    fn closed_form(&self) -> Result<Option<(u64, Provenance)>> {
        let (l, m, n) = (&self.lambda, &self.mu, &self.nu);
        let attempt = |r: Result<u64>, prov| match r {
            Ok(v) => Ok(Some((v, prov))),
            Err(Error::HypothesisNotMet(_)) => Ok(None),
            Err(e) => Err(e),
        };
        if l.len() <= 1 {
            return Ok(Some((u64::from(m == n), Provenance::DeltaRule)));
        }
        if m.is_two_row_like() && n.is_two_row_like() {
            return attempt(kron_two_tworow(l, m, n), Provenance::TwoRowTwoRow);
        }
        if m.hook_params().is_some() && n.hook_params().is_some() {
            return attempt(kron_two_hooks(l, m, n), Provenance::HookHook);
        }
        if m.hook_params().is_some() && n.is_two_row_like() {
            return attempt(kron_hook_tworow(l, m, n), Provenance::HookTwoRow);
        }
        Ok(None)
    }
}

/// `γ^λ_{μν}` by the requested method.
///
/// `Auto` and `ClosedOnly` walk [`NormalizedTriple::variants`] in order and
/// use the first one a closed form covers within its hypotheses; the result
/// records that variant's moves. `Auto` falls back to the oracle.
pub fn compute(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    method: Method,
) -> Result<KroneckerResult> {
    check_sizes(lambda, mu, nu)?;
    if method == Method::OracleOnly {
        return kron_oracle(lambda, mu, nu);
    }
    for variant in NormalizedTriple::variants(lambda, mu, nu) {
        if let Some((gamma, provenance)) = variant.closed_form()? {
            return Ok(KroneckerResult {
                gamma: gamma.into(),
                provenance,
                moves: variant.moves,
            });
        }
    }
    match method {
        Method::Auto => kron_oracle(lambda, mu, nu),
        _ => Err(Error::NoClosedFormApplicable(format!(
            "{lambda:?}, {mu:?}, {nu:?}"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    fn p(parts: &[u32]) -> Partition {
        Partition::from_parts(parts.iter().copied())
    }

    fn oracle(l: &Partition, m: &Partition, n: &Partition) -> u64 {
        let g = kron_oracle(l, m, n).unwrap().gamma;
        u64::try_from(g).unwrap()
    }

    #[test]
    fn two_tworow_examples() {
        assert_eq!(
            kron_two_tworow(&p(&[2, 2]), &p(&[2, 2]), &p(&[2, 2])).unwrap(),
            1
        );
        assert_eq!(
            kron_two_tworow(&p(&[3, 3]), &p(&[3, 3]), &p(&[3, 3])).unwrap(),
            0
        );
        let t = p(&[12, 4]);
        assert_eq!(kron_two_tworow(&t, &t, &t).unwrap(), 3);
        let (l, m, n) = (p(&[3, 1, 1, 1]), p(&[4, 2]), p(&[3, 3]));
        assert_eq!(kron_two_tworow(&l, &m, &n).unwrap(), oracle(&l, &m, &n));
        assert_eq!(
            kron_two_tworow(&p(&[2, 2, 1, 1, 1, 1]), &p(&[4, 4]), &p(&[5, 3])).unwrap(),
            0
        );
        assert!(matches!(
            kron_two_tworow(&p(&[2, 2]), &p(&[2, 1, 1]), &p(&[2, 2])),
            Err(Error::ShapeMismatch(_))
        ));
    }

    #[test]
    fn tworow_corollary_examples() {
        assert_eq!(
            kron_tworow_corollary(&p(&[2, 2]), &p(&[2, 2]), &p(&[2, 2])).unwrap(),
            1
        );
        assert_eq!(
            kron_tworow_corollary(&p(&[3, 1]), &p(&[3, 1]), &p(&[3, 1])).unwrap(),
            1
        );
        // μ₂ + ν₂ < λ₂ forces zero.
        let (l, m, n) = (p(&[5, 5]), p(&[8, 2]), p(&[8, 2]));
        assert_eq!(kron_tworow_corollary(&l, &m, &n).unwrap(), 0);
        assert_eq!(oracle(&l, &m, &n), 0);
        // (2l,2l), (2l,2l), (3l,l) family.
        for l in 1..=4u32 {
            let sq = p(&[2 * l, 2 * l]);
            let lam = p(&[3 * l, l]);
            assert_eq!(
                kron_tworow_corollary(&lam, &sq, &sq).unwrap(),
                u64::from(l % 2 == 0)
            );
        }
    }

    #[test]
    fn two_hooks_examples() {
        let n = 6;
        for mu in [p(&[4, 1, 1]), p(&[3, 1, 1, 1]), p(&[5, 1])] {
            for nu in [p(&[4, 1, 1]), p(&[3, 1, 1, 1]), p(&[5, 1])] {
                assert_eq!(
                    kron_two_hooks(&Partition::row(n), &mu, &nu).unwrap(),
                    u64::from(mu == nu)
                );
            }
        }
        let l = p(&[3, 3, 3]);
        for mu in [
            p(&[7, 1, 1]),
            p(&[5, 1, 1, 1, 1]),
            p(&[3, 1, 1, 1, 1, 1, 1]),
        ] {
            assert_eq!(kron_two_hooks(&l, &mu, &p(&[6, 1, 1, 1])).unwrap(), 0);
        }
        let (l, m, n) = (p(&[2, 1, 1]), p(&[2, 1, 1]), p(&[3, 1]));
        assert_eq!(kron_two_hooks(&l, &m, &n).unwrap(), 1);
        assert_eq!(oracle(&l, &m, &n), 1);
        // e = 3 > u = 2.
        assert!(matches!(
            kron_two_hooks(&p(&[3, 1, 1]), &p(&[2, 1, 1, 1]), &p(&[3, 1, 1])),
            Err(Error::HypothesisNotMet(_))
        ));
        assert!(matches!(
            kron_two_hooks(&p(&[3, 1]), &p(&[2, 2]), &p(&[3, 1])),
            Err(Error::ShapeMismatch(_))
        ));
    }

    #[test]
    fn hook_hook_tworow_corollary_examples() {
        // e = f = 3, λ = (3,3).
        let (l, m, n) = (p(&[3, 3]), p(&[3, 1, 1, 1]), p(&[3, 1, 1, 1]));
        assert_eq!(
            kron_hook_hook_tworow_corollary(&l, &m, &n).unwrap(),
            oracle(&l, &m, &n)
        );
        // e = f, e < λ₂ − 1 and (e+f+1)/2 < λ₂.
        let (l, m, n) = (p(&[4, 4]), p(&[7, 1]), p(&[7, 1]));
        assert_eq!(kron_hook_hook_tworow_corollary(&l, &m, &n).unwrap(), 0);
        assert_eq!(oracle(&l, &m, &n), 0);
        // λ₂ = 1 lies outside the double-hook case.
        assert!(matches!(
            kron_hook_hook_tworow_corollary(&p(&[3, 1]), &p(&[2, 1, 1]), &p(&[2, 1, 1])),
            Err(Error::HypothesisNotMet(_))
        ));
        assert_eq!(oracle(&p(&[3, 1]), &p(&[2, 1, 1]), &p(&[2, 1, 1])), 1);
    }

    #[test]
    fn hook_tworow_examples() {
        for nu in [p(&[3, 2]), p(&[4, 1]), p(&[5])] {
            for mu in [p(&[3, 1, 1]), p(&[2, 1, 1, 1])] {
                assert_eq!(kron_hook_tworow(&p(&[5]), &mu, &nu).unwrap(), 0);
            }
        }
        let (l, m, n) = (p(&[2, 2, 1]), p(&[2, 1, 1, 1]), p(&[3, 2]));
        assert_eq!(kron_hook_tworow(&l, &m, &n).unwrap(), oracle(&l, &m, &n));
        // λ = (4,2,1): d1 = 1, d2 = 0, t = 1; e1 = 5 is outside {1,..,4}.
        let (l, m, n) = (p(&[4, 2, 1]), p(&[2, 1, 1, 1, 1, 1]), p(&[4, 3]));
        assert_eq!(kron_hook_tworow(&l, &m, &n).unwrap(), 0);
        assert_eq!(oracle(&l, &m, &n), 0);
    }

    #[test]
    fn compute_examples() {
        let r = compute(&p(&[4, 3, 1]), &p(&[6, 2]), &p(&[5, 3]), Method::Auto).unwrap();
        assert_eq!(r.provenance, Provenance::TwoRowTwoRow);
        assert!(r.moves.is_empty());
        let o = compute(&p(&[4, 3, 1]), &p(&[6, 2]), &p(&[5, 3]), Method::OracleOnly).unwrap();
        assert_eq!(r.gamma, o.gamma);

        let r = compute(&p(&[4]), &p(&[2, 2]), &p(&[2, 1, 1]), Method::Auto).unwrap();
        assert_eq!(r.provenance, Provenance::DeltaRule);
        assert_eq!(r.gamma, BigUint::from(0u32));

        let (l, m, n) = (p(&[2, 2, 1, 1, 1, 1]), p(&[4, 4]), p(&[5, 3]));
        let auto = compute(&l, &m, &n, Method::Auto).unwrap();
        let orc = compute(&l, &m, &n, Method::OracleOnly).unwrap();
        assert_eq!(auto.gamma, orc.gamma);
        assert_eq!(orc.provenance, Provenance::Oracle);

        // (3,3,2) three times: no variant has two hooks or two-row shapes.
        let t = p(&[3, 3, 2]);
        assert!(matches!(
            compute(&t, &t, &t, Method::ClosedOnly),
            Err(Error::NoClosedFormApplicable(_))
        ));
        assert_eq!(
            compute(&t, &t, &t, Method::Auto).unwrap().provenance,
            Provenance::Oracle
        );

        assert!(matches!(
            compute(&p(&[2, 1]), &p(&[2, 2]), &p(&[3]), Method::Auto),
            Err(Error::SizeMismatch(_))
        ));
    }

    #[test]
    fn column_lambda_goes_through_conjugation() {
        let (l, m, n) = (p(&[1, 1, 1, 1, 1]), p(&[3, 1, 1]), p(&[3, 1, 1]));
        let r = compute(&l, &m, &n, Method::ClosedOnly).unwrap();
        assert_eq!(r.gamma, BigUint::from(1u32));
        assert_eq!(r.moves, vec![Move::ConjugatePair(Slot::Lambda, Slot::Mu)]);
        assert_eq!(r.provenance, Provenance::DeltaRule);
    }

    #[test]
    fn variants_recover_original() {
        let (l, m, n) = (p(&[3, 2, 1]), p(&[4, 2]), p(&[3, 1, 1, 1]));
        let vs = NormalizedTriple::variants(&l, &m, &n);
        assert_eq!(vs.len(), 24);
        assert!(vs[0].moves.is_empty());
        for v in &vs {
            assert_eq!(v.original(), [l.clone(), m.clone(), n.clone()]);
        }
    }

    #[test]
    fn method_parsing() {
        assert_eq!("oracle".parse::<Method>().unwrap(), Method::OracleOnly);
        assert_eq!("closed".parse::<Method>().unwrap(), Method::ClosedOnly);
        assert_eq!("AUTO".parse::<Method>().unwrap(), Method::Auto);
        assert!("fast".parse::<Method>().is_err());
    }
}
