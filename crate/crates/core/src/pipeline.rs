//! The end-to-end analysis of one `(λ, l)` cell.

use rayon::prelude::*;
use serde::Serialize;

use crate::combinatorics::{binomial, partitions, Partition};
use crate::error::{Error, Result};
use crate::grassmann::{plucker_quadrics, shuffle_equations, NilpotentMatrix};
use crate::groebner::{
    buchberger_with, eliminate_linear, hilbert_data_with, quadric_rank, AnalysisRecord, Budget,
    Status,
};
use crate::polyring::MonomialOrder;
use crate::tables::{judge, Expectations, Verdict};

#[derive(Clone, Copy, Debug, Default)]
pub struct AnalyzeOptions {
    /// Wall-clock seconds allowed for the Gröbner and Hilbert stages of one
    /// analysis; `None` is unlimited.
    pub budget: Option<f64>,
    /// Stop after `σ`.
    pub sigma_only: bool,
    /// Also report minimal generator counts in degrees one and two.
    pub min_gens: bool,
}

/// shuffle equations → linear elimination → Gröbner basis → Hilbert series.
pub fn analyze(lambda: &Partition, l: usize, opts: &AnalyzeOptions) -> Result<AnalysisRecord> {
    let t = NilpotentMatrix::jordan(lambda)?;
    analyze_matrix(&t, lambda, l, opts)
}

/// [`analyze`] for an arbitrary nilpotent matrix; `lambda` only labels the
/// record.
pub fn analyze_matrix(
    t: &NilpotentMatrix,
    lambda: &Partition,
    l: usize,
    opts: &AnalyzeOptions,
) -> Result<AnalysisRecord> {
    let n = t.n();
    let budget = opts.budget.map_or_else(Budget::unlimited, Budget::seconds);
    let linear = shuffle_equations(t, l)?;
    let mut rec = AnalysisRecord {
        lambda: lambda.clone(),
        l,
        sigma: linear.sigma(),
        delta: None,
        gamma: None,
        min_linear: None,
        min_quadrics: None,
        status: Status::Complete,
    };
    if opts.sigma_only {
        return Ok(rec);
    }
    let nvars = binomial(n, l);
    let mut gens = linear.basis();
    gens.extend(plucker_quadrics(n, l)?);
    let elim = eliminate_linear(&gens, nvars)?;
    if opts.min_gens {
        rec.min_linear = Some(elim.rank());
        rec.min_quadrics = Some(quadric_rank(&elim.gens));
    }
    let kept = elim.kept.len();
    if kept == 0 {
        return Err(Error::UnitIdeal);
    }
    if elim.gens.is_empty() {
        rec.delta = Some(kept as i64 - 1);
        rec.gamma = Some(1);
        return Ok(rec);
    }
    let outcome = buchberger_with(
        &elim.gens,
        &MonomialOrder::degrevlex(),
        Some(kept),
        budget,
    )
    .and_then(|(g, _)| hilbert_data_with(&g, kept, budget));
    match outcome {
        Ok(h) => {
            rec.delta = Some(h.delta);
            rec.gamma = Some(h.gamma);
        }
        Err(Error::Timeout(_)) => rec.status = Status::Incomplete,
        Err(e) => return Err(e),
    }
    Ok(rec)
}

/// One computed table entry next to its expectation.
#[derive(Clone, Debug, Serialize)]
pub struct CellReport {
    pub lambda: Partition,
    pub l: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub record: Option<AnalysisRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub erratum: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub verdict: Verdict,
}

/// Partitions of `n` in printed-table order where one exists, otherwise in
/// the order of [`partitions`].
pub fn table_partitions(n: usize, data: &Expectations) -> Vec<Partition> {
    let mut rows = data.row_order(n).unwrap_or_default();
    for p in partitions(n) {
        if !rows.contains(&p) {
            rows.push(p);
        }
    }
    rows
}

/// Analyzes every `(λ, l)` with `λ ⊢ n` and `l ∈ ls` in parallel; the output
/// is ordered by row, then by `l`.
pub fn run_table(n: usize, ls: &[usize], opts: &AnalyzeOptions, data: &Expectations) -> Vec<CellReport> {
    let cells: Vec<(Partition, usize)> = table_partitions(n, data)
        .into_iter()
        .flat_map(|p| ls.iter().map(move |&l| (p.clone(), l)))
        .collect();
    cells
        .into_par_iter()
        .map(|(lambda, l)| {
            let expected = data.expected(&lambda, l);
            let (record, error, verdict) = match analyze(&lambda, l, opts) {
                Ok(r) => {
                    let v = judge(&r, expected.as_ref());
                    (Some(r), None, v)
                }
                Err(e) => (None, Some(e.to_string()), Verdict::Fail),
            };
            CellReport {
                lambda,
                l,
                record,
                expected: expected.as_ref().map(|e| e.cell.to_string()),
                erratum: expected.and_then(|e| e.erratum).map(|e| {
                    format!("printed sigma {} corrected to {}: {}", e.printed_sigma, e.sigma, e.note)
                }),
                error,
                verdict,
            }
        })
        .collect()
}
