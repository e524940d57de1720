//! Every identity as a named, bounded, exhaustive check.
//!
//! A check returns a one-line summary on success and the first offending
//! object on failure. Bounds are capped by the `PARTMAT_MAX_N` environment
//! variable when it is set.

mod golden;

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

pub use golden::{golden, Golden};

use crate::algebra::{
    dim_poly, dist_poly, dist_rhs_poly, eulerian_poly, factorial, lemma31_check,
    motzkin_stat_series, ndippm_gf_check, ndpm_gf_check, path_sum_check, s_poly_fishburn,
    s_poly_inv, telescoping_residual, v_poly, Poly, SeriesCheck,
};
use crate::enumerate::{
    dyck_words, grid_paths, inversion_sequences, ippm, motzkin_words, nondecreasing,
    partition_matrices, pattern_class, IppmStrategy, NondecreasingStrategy,
};
use crate::maps::{
    cdk_eta, parity_append, parity_remove, phi, phi_inv, seq_append, seq_remove, theta,
};
use crate::objects::PartitionMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckId {
    SignedCount,
    Involution,
    Doubling,
    DistinctValues,
    BlocksAndOdd,
    NondecreasingDyck,
    PhiRoundTrip,
    ParityAppend,
    STable,
    EtaBijective,
    ClosedForms,
}

/// Size parameter of a check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundKind {
    MaxN,
    MaxT,
}

impl BoundKind {
    pub fn name(self) -> &'static str {
        match self {
            BoundKind::MaxN => "max-n",
            BoundKind::MaxT => "max-T",
        }
    }
}

impl CheckId {
    pub const ALL: [CheckId; 11] = [
        CheckId::SignedCount,
        CheckId::Involution,
        CheckId::Doubling,
        CheckId::DistinctValues,
        CheckId::BlocksAndOdd,
        CheckId::NondecreasingDyck,
        CheckId::PhiRoundTrip,
        CheckId::ParityAppend,
        CheckId::STable,
        CheckId::EtaBijective,
        CheckId::ClosedForms,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckId::SignedCount => "theorem-1-1",
            CheckId::Involution => "theorem-2-3",
            CheckId::Doubling => "lemma-3-1",
            CheckId::DistinctValues => "theorem-3-2",
            CheckId::BlocksAndOdd => "theorem-4-blk-odd",
            CheckId::NondecreasingDyck => "theorem-4-ndpm-dyck",
            CheckId::PhiRoundTrip => "phi-roundtrip",
            CheckId::ParityAppend => "lemma-5-1",
            CheckId::STable => "s-table",
            CheckId::EtaBijective => "eta-bijective",
            CheckId::ClosedForms => "gf-closed-forms",
        }
    }

    pub fn bound_kind(self) -> BoundKind {
        match self {
            CheckId::Doubling | CheckId::ClosedForms => BoundKind::MaxT,
            _ => BoundKind::MaxN,
        }
    }

    pub fn default_bound(self) -> usize {
        match self {
            CheckId::SignedCount
            | CheckId::Involution
            | CheckId::DistinctValues
            | CheckId::STable => 8,
            CheckId::Doubling | CheckId::ParityAppend | CheckId::EtaBijective => 7,
            CheckId::BlocksAndOdd | CheckId::PhiRoundTrip => 12,
            CheckId::NondecreasingDyck | CheckId::ClosedForms => 10,
        }
    }

    /// What the check establishes, for report lines.
    pub fn statement(self) -> &'static str {
        match self {
            CheckId::SignedCount => "S_n(-1) = |I_n(-,-,=)| = |IPPM_n|",
            CheckId::Involution => "theta is an inv-sign-reversing involution fixing IPPM",
            CheckId::Doubling => "sum z^v t^w over IPPM = sum z^w t^2w (1+1/t)^dim over PM",
            CheckId::DistinctValues => {
                "sum z^v over IPPM_n = sum z^dist over I_n(-,-,=) = closed form"
            }
            CheckId::BlocksAndOdd => "(blk, odd) on NDIPPM_n ~ (comp, level) on M_n",
            CheckId::NondecreasingDyck => "blk on NDPM_n ~ touch on Dyck paths, |NDPM_n| = Cat_n",
            CheckId::PhiRoundTrip => "phi is a statistic-preserving bijection NDIPPM_n -> M_n",
            CheckId::ParityAppend => "minus-to-plus appending bijections preserve v and dist",
            CheckId::STable => "S_n(q) by Fishburn matrices and by inversions match the table",
            CheckId::EtaBijective => "eta is a bijection PM_n -> I_n keeping monotonicity",
            CheckId::ClosedForms => "closed forms, continued fractions and enumeration agree",
        }
    }
}

impl FromStr for CheckId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        CheckId::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown check `{s}`"))
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Outcome of one check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub check: CheckId,
    pub bound: usize,
    pub passed: bool,
    /// Summary on success, the first counterexample on failure.
    pub detail: String,
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status} {} ({} {}): {}; {}",
            self.check,
            self.check.bound_kind().name(),
            self.bound,
            self.check.statement(),
            self.detail
        )
    }
}

/// Value of `PARTMAT_MAX_N`, if set to a positive integer.
pub fn env_cap() -> Option<usize> {
    std::env::var("PARTMAT_MAX_N")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .filter(|&v| v > 0)
}

/// The requested bound (or the default), capped by `PARTMAT_MAX_N`.
pub fn effective_bound(check: CheckId, requested: Option<usize>) -> usize {
    let bound = requested.unwrap_or(check.default_bound()).max(1);
    match env_cap() {
        Some(cap) => bound.min(cap),
        None => bound,
    }
}

pub fn run(check: CheckId, bound: usize) -> Report {
    let outcome = match check {
        CheckId::SignedCount => signed_count(bound),
        CheckId::Involution => involution(bound),
        CheckId::Doubling => series(lemma31_check(bound as u32)),
        CheckId::DistinctValues => distinct_values(bound),
        CheckId::BlocksAndOdd => blocks_and_odd(bound),
        CheckId::NondecreasingDyck => nondecreasing_dyck(bound),
        CheckId::PhiRoundTrip => phi_round_trip(bound),
        CheckId::ParityAppend => parity_classes(bound),
        CheckId::STable => s_table(bound),
        CheckId::EtaBijective => eta_bijective(bound),
        CheckId::ClosedForms => closed_forms(bound),
    };
    let (passed, detail) = match outcome {
        Ok(summary) => (true, summary),
        Err(counterexample) => (false, counterexample),
    };
    Report {
        check,
        bound,
        passed,
        detail,
    }
}

/// Runs the checks on separate threads; reports come back in input order.
pub fn run_all(checks: &[(CheckId, usize)]) -> Vec<Report> {
    std::thread::scope(|scope| {
        let handles: Vec<_> = checks
            .iter()
            .map(|&(check, bound)| scope.spawn(move || run(check, bound)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("checks do not panic"))
            .collect()
    })
}

type Outcome = Result<String, String>;

fn ensure(ok: bool, counterexample: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(counterexample())
    }
}

fn series(check: SeriesCheck) -> Outcome {
    match check.first_failure() {
        None => Ok(format!("residual zero to t^{}", check.series.order())),
        Some((name, residual)) => Err(format!("{name} = {residual}")),
    }
}

fn signed_count(max_n: usize) -> Outcome {
    for n in 1..=max_n {
        let s = s_poly_fishburn(n).eval_i64(-1);
        let sequences = pattern_class(n).expect("n >= 1").count();
        let matrices = ippm(n, IppmStrategy::Doubling).expect("n >= 1").count();
        ensure(
            s == BigInt::from(sequences) && s == BigInt::from(matrices),
            || format!("n = {n}: S_n(-1) = {s}, |I_n(-,-,=)| = {sequences}, |IPPM_n| = {matrices}"),
        )?;
    }
    Ok(format!("n <= {max_n}"))
}

fn involution(max_n: usize) -> Outcome {
    for n in 1..=max_n {
        for p in partition_matrices(n).expect("n >= 1") {
            let image = theta(&p);
            ensure(image.validate().is_ok() && image.n() == n, || {
                format!("theta({p}) = {image} is not a matrix of weight {n}")
            })?;
            ensure(theta(&image) == p, || {
                format!("theta is not an involution at {p}")
            })?;
            if p.is_improper() {
                ensure(image == p, || format!("improper {p} is moved to {image}"))?;
                ensure(p.inv() % 2 == 0, || format!("improper {p} has odd inv"))?;
            } else {
                ensure(image != p, || {
                    format!("{p} has a proper event but is fixed")
                })?;
                ensure(p.inv().abs_diff(image.inv()) == 1, || {
                    format!("inv({p}) = {}, inv({image}) = {}", p.inv(), image.inv())
                })?;
            }
        }
    }
    Ok(format!("n <= {max_n}"))
}

fn poly_mismatch(n: usize, what: &str, left: &Poly, right: &Poly) -> String {
    format!("n = {n}: {what}: {left} vs {right}")
}

fn distinct_values(max_n: usize) -> Outcome {
    for n in 1..=max_n {
        let v = v_poly(n);
        let dist = dist_poly(n);
        let closed = dist_rhs_poly(n);
        ensure(v == dist, || {
            poly_mismatch(n, "v over IPPM vs dist", &v, &dist)
        })?;
        ensure(dist == closed, || {
            poly_mismatch(n, "dist vs closed form", &dist, &closed)
        })?;
    }
    Ok(format!("n <= {max_n}"))
}

fn blocks_and_odd(max_n: usize) -> Outcome {
    let table = &golden().motzkin;
    for n in 1..=max_n {
        let mut joint: BTreeMap<(usize, usize), i64> = BTreeMap::new();
        let mut count = 0u64;
        for b in nondecreasing(n, true, NondecreasingStrategy::Paths).expect("n >= 1") {
            *joint.entry((b.block_count(), b.odd_count())).or_default() += 1;
            count += 1;
        }
        for m in motzkin_words(n).expect("n >= 1") {
            let st = m.stats();
            *joint.entry((st.comp, st.level)).or_default() -= 1;
        }
        joint.retain(|_, c| *c != 0);
        ensure(joint.is_empty(), || {
            let ((blk, odd), diff) = joint.iter().next().expect("nonempty");
            format!("n = {n}: (blk, odd) = ({blk}, {odd}) differs by {diff}")
        })?;
        if let Some(&expected) = table.get(n - 1) {
            ensure(count == expected, || {
                format!("n = {n}: |NDIPPM_n| = {count}, expected {expected}")
            })?;
        }
    }
    Ok(format!("n <= {max_n}"))
}

fn catalan(n: usize) -> BigInt {
    factorial(2 * n) / (factorial(n) * factorial(n + 1))
}

fn nondecreasing_dyck(max_n: usize) -> Outcome {
    for n in 1..=max_n {
        let mut blk: BTreeMap<usize, i64> = BTreeMap::new();
        let mut count = 0u64;
        for a in nondecreasing(n, false, NondecreasingStrategy::Paths).expect("n >= 1") {
            *blk.entry(a.block_count()).or_default() += 1;
            count += 1;
        }
        for d in dyck_words(n).expect("n >= 1") {
            *blk.entry(d.touch()).or_default() -= 1;
        }
        blk.retain(|_, c| *c != 0);
        ensure(blk.is_empty(), || {
            let (k, diff) = blk.iter().next().expect("nonempty");
            format!("n = {n}: blk = touch = {k} differs by {diff}")
        })?;
        let cat = catalan(n);
        ensure(BigInt::from(count) == cat, || {
            format!("n = {n}: |NDPM_n| = {count}, Cat_n = {cat}")
        })?;
    }
    Ok(format!("n <= {max_n}"))
}

fn phi_round_trip(max_n: usize) -> Outcome {
    for n in 1..=max_n {
        let mut seen = HashSet::new();
        for b in nondecreasing(n, true, NondecreasingStrategy::Paths).expect("n >= 1") {
            let m = phi(&b).map_err(|e| format!("phi({b}) failed: {e}"))?;
            let st = m.stats();
            ensure(
                (st.len, st.comp, st.level) == (b.n(), b.block_count(), b.odd_count()),
                || format!("phi({b}) = {m} does not carry (w, blk, odd)"),
            )?;
            ensure(phi_inv(&m) == b, || {
                format!("phi_inv(phi({b})) = {}", phi_inv(&m))
            })?;
            ensure(seen.insert(m.to_string()), || {
                format!("phi({b}) = {m} is repeated")
            })?;
        }
        let mut words = 0usize;
        for m in motzkin_words(n).expect("n >= 1") {
            let b = phi_inv(&m);
            ensure(
                b.is_improper() && b.is_nondecreasing() && b.n() == n,
                || format!("phi_inv({m}) = {b} is outside NDIPPM_{n}"),
            )?;
            ensure(phi(&b).ok().as_ref() == Some(&m), || {
                format!("phi(phi_inv({m})) != {m}")
            })?;
            words += 1;
        }
        ensure(words == seen.len(), || {
            format!("n = {n}: {} matrices but {words} words", seen.len())
        })?;
    }
    Ok(format!("n <= {max_n}"))
}

fn odd_last_cell(q: &PartitionMatrix) -> bool {
    let n = q.n();
    let last = (q.row(n), q.col(n));
    q.positions().filter(|pos| *pos == last).count() % 2 == 1
}

fn parity_classes(max_n: usize) -> Outcome {
    for n in 1..=max_n {
        let mut images = HashSet::new();
        for q in ippm(n, IppmStrategy::Filter).expect("n >= 1") {
            if !odd_last_cell(&q) {
                continue;
            }
            let image = parity_append(&q).map_err(|e| format!("parity_append({q}): {e}"))?;
            ensure(image.validate().is_ok() && image.is_improper(), || {
                format!("parity_append({q}) = {image} is not improper")
            })?;
            ensure(!odd_last_cell(&image), || {
                format!("parity_append({q}) = {image} is not in the plus class")
            })?;
            ensure(image.semi_weight() == q.semi_weight(), || {
                format!("v changes at {q}")
            })?;
            ensure(parity_remove(&image).ok().as_ref() == Some(&q), || {
                format!("parity_remove(parity_append({q})) != {q}")
            })?;
            images.insert(image);
        }
        let plus: Vec<PartitionMatrix> = ippm(n + 1, IppmStrategy::Filter)
            .expect("n >= 1")
            .filter(|q| !odd_last_cell(q))
            .collect();
        ensure(
            plus.len() == images.len() && plus.iter().all(|q| images.contains(q)),
            || {
                format!(
                    "n = {n}: {} images, {} plus-class matrices",
                    images.len(),
                    plus.len()
                )
            },
        )?;

        let mut seq_images = HashSet::new();
        for e in pattern_class(n)
            .expect("n >= 1")
            .filter(|e| !e.ends_with_repeat())
        {
            let f = seq_append(&e).map_err(|err| format!("seq_append({e}): {err}"))?;
            ensure(f.in_pattern_class() && f.ends_with_repeat(), || {
                format!("seq_append({e}) = {f} is not in the plus class")
            })?;
            ensure(f.dist() == e.dist(), || format!("dist changes at {e}"))?;
            ensure(seq_remove(&f).ok().as_ref() == Some(&e), || {
                format!("seq_remove(seq_append({e})) != {e}")
            })?;
            seq_images.insert(f);
        }
        let plus_count = pattern_class(n + 1)
            .expect("n >= 1")
            .filter(|f| f.ends_with_repeat())
            .count();
        ensure(plus_count == seq_images.len(), || {
            format!(
                "n = {n}: {} sequence images, {plus_count} plus-class sequences",
                seq_images.len()
            )
        })?;
    }
    Ok(format!("n <= {max_n}"))
}

fn s_table(max_n: usize) -> Outcome {
    let g = golden();
    for n in 1..=max_n {
        let by_fishburn = s_poly_fishburn(n);
        let by_inv = s_poly_inv(n);
        ensure(by_fishburn == by_inv, || {
            poly_mismatch(n, "Fishburn sum vs inv sum", &by_fishburn, &by_inv)
        })?;
        ensure(by_inv.eval_i64(1) == factorial(n), || {
            format!("n = {n}: S_n(1) != n!")
        })?;
        if let Some(expected) = g.s_table.get(n - 1) {
            ensure(&by_inv == expected, || {
                poly_mismatch(n, "computed vs table", &by_inv, expected)
            })?;
        }
        for (name, table, at) in [("S_n(0)", &g.fishburn, 0), ("S_n(-1)", &g.signed, -1)] {
            if let Some(&expected) = table.get(n - 1) {
                let value = by_inv.eval_i64(at);
                ensure(value == BigInt::from(expected), || {
                    format!("n = {n}: {name} = {value}, expected {expected}")
                })?;
            }
        }
    }
    Ok(format!("n <= {max_n}"))
}

fn eta_bijective(max_n: usize) -> Outcome {
    for n in 1..=max_n {
        let mut images = HashSet::new();
        for p in partition_matrices(n).expect("n >= 1") {
            let e = cdk_eta(&p);
            ensure(e.validate().is_ok() && e.len() == n, || {
                format!("eta({p}) = {e} is invalid")
            })?;
            if p.is_nondecreasing() {
                ensure(e.is_nondecreasing(), || format!("eta({p}) = {e} decreases"))?;
            }
            ensure(images.insert(e.clone()), || {
                format!("eta({p}) = {e} is repeated")
            })?;
        }
        let all = inversion_sequences(n).expect("n >= 1").count();
        ensure(
            images.len() == all && BigInt::from(all) == factorial(n),
            || format!("n = {n}: {} images of {all} sequences", images.len()),
        )?;
    }
    Ok(format!("n <= {max_n}"))
}

fn closed_forms(max_t: usize) -> Outcome {
    let order = max_t as u32;
    let wrap = |r: Result<SeriesCheck, crate::algebra::SeriesError>| {
        r.map_err(|e| format!("series arithmetic failed: {e}"))
    };
    series(wrap(motzkin_stat_series(order))?)?;
    series(wrap(ndippm_gf_check(order))?)?;
    series(wrap(ndpm_gf_check(order))?)?;
    // the path sum grows like 8 variables in `order` steps
    series(wrap(path_sum_check(order.min(7)))?)?;
    for big_n in 1..=12 {
        let r = telescoping_residual(big_n);
        ensure(r.is_zero(), || {
            format!("Stirling rearrangement at N = {big_n}: {r}")
        })?;
    }
    for n in 1..=max_t.min(8) {
        let lhs = dim_poly(n);
        let rhs = &Poly::monomial('x', BigInt::from(1), 1) * &eulerian_poly(n);
        ensure(lhs == rhs, || {
            poly_mismatch(n, "sum x^dim vs x E_n(x)", &lhs, &rhs)
        })?;
    }
    // grid paths with k steps, over all dimensions, are counted by Motzkin_k
    let motzkin = &golden().motzkin;
    let mut by_steps = vec![0u64; motzkin.len() + 1];
    for dim in 1..=motzkin.len() + 1 {
        for path in grid_paths(dim).expect("dim >= 1") {
            if let Some(slot) = by_steps.get_mut(path.steps().len()) {
                *slot += 1;
            }
        }
    }
    ensure(by_steps[0] == 1 && by_steps[1..] == motzkin[..], || {
        format!("grid paths by number of steps: {by_steps:?}")
    })?;
    Ok(format!("residuals zero to t^{max_t}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for c in CheckId::ALL {
            assert_eq!(c.name().parse::<CheckId>().unwrap(), c);
        }
    }

    #[test]
    fn small_bounds_pass() {
        let plan: Vec<_> = CheckId::ALL.iter().map(|&c| (c, 4)).collect();
        for report in run_all(&plan) {
            assert!(report.passed, "{report}");
        }
    }
}
