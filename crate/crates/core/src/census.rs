//! Runs the theorem catalog over every enumerated algebra.
//!
//! All counts produced here come from the enumerator; there is no external
//! baseline to compare them with.

use serde::Serialize;

use crate::algebra::Algebra;
use crate::enumerate::{enumerate_algebras, EnumOptions};
use crate::error::Result;
use crate::format::emit_algebra;
use crate::harness::{bigstar_check, is_pm, run_suite, star_check, SuiteOptions};
use crate::spectrum::Spectrum;

pub const DEFAULT_CENSUS_SIZE: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub filters: usize,
    pub primes: usize,
    pub maximal: usize,
    pub minimal: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Flags {
    pub mtl: bool,
    pub star: bool,
    pub bigstar: bool,
    /// Every prime lies under a unique maximal filter.
    pub pm: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusRecord {
    pub size: usize,
    /// Position within its size class, in canonical order.
    pub index: usize,
    /// The algebra in `.rlat` form.
    pub encoding: String,
    pub counts: Counts,
    pub flags: Flags,
    pub checks: usize,
    /// Ids of failed checks.
    pub failed: Vec<String>,
}

impl CensusRecord {
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("census records serialize")
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SizeSummary {
    pub size: usize,
    pub algebras: usize,
    pub mtl: usize,
    pub pm: usize,
    pub star: usize,
    pub bigstar: usize,
    /// Algebras with at least one failed check.
    pub failing: usize,
}

pub fn census_record(alg: &Algebra, index: usize, options: SuiteOptions) -> Result<CensusRecord> {
    let spectrum = Spectrum::new(alg)?;
    let report = run_suite(alg, options)?;
    Ok(CensusRecord {
        size: alg.size(),
        index,
        encoding: emit_algebra(alg),
        counts: Counts {
            filters: spectrum.filters().len(),
            primes: spectrum.spec().len(),
            maximal: spectrum.max().len(),
            minimal: spectrum.min().len(),
        },
        flags: Flags {
            mtl: alg.is_mtl(),
            star: star_check(alg),
            bigstar: bigstar_check(alg),
            pm: is_pm(&spectrum),
        },
        checks: report.checks.len(),
        failed: report.failures().map(|c| c.id.to_string()).collect(),
    })
}

/// Enumerates sizes `2..=max_n` and runs the suite on each algebra,
/// handing every record to `sink` as soon as it is ready.
pub fn run_census(
    max_n: usize,
    enum_options: &EnumOptions,
    suite_options: SuiteOptions,
    mut sink: impl FnMut(&CensusRecord),
) -> Result<Vec<SizeSummary>> {
    let mut summaries = Vec::new();
    for n in 2..=max_n {
        summaries.push(census_size(n, enum_options, suite_options, &mut sink)?);
    }
    Ok(summaries)
}

/// The census restricted to a single size.
pub fn census_size(
    n: usize,
    enum_options: &EnumOptions,
    suite_options: SuiteOptions,
    mut sink: impl FnMut(&CensusRecord),
) -> Result<SizeSummary> {
    let mut summary = SizeSummary {
        size: n,
        ..Default::default()
    };
    for (i, alg) in enumerate_algebras(n, enum_options)?.iter().enumerate() {
        let record = census_record(alg, i, suite_options)?;
        summary.algebras += 1;
        summary.mtl += record.flags.mtl as usize;
        summary.pm += record.flags.pm as usize;
        summary.star += record.flags.star as usize;
        summary.bigstar += record.flags.bigstar as usize;
        summary.failing += !record.failed.is_empty() as usize;
        sink(&record);
    }
    Ok(summary)
}
