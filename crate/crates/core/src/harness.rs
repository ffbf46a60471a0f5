//! Sensitivity reports, parameter sweeps, CSV output and closed-form
//! verification.

use std::fmt;
use std::io::{Read, Write};
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bwt::{bbwt, bwt, TransformVariant};
use crate::error::{Error, Result};
use crate::families::{
    fib_property_check, generate, predict, predict_reverse, predict_transform, FamilyId,
    FamilySpec, Prediction,
};
use crate::measures::{compute, MeasureId, MeasureOptions, Measured};
use crate::text::{reverse, Text};
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SensitivityReport {
    pub measure: MeasureId,
    pub value_fwd: Rational,
    pub value_rev: Rational,
    /// `value_rev - value_fwd`.
    pub additive: Rational,
    /// `value_rev / value_fwd`; absent when `value_fwd` is zero.
    pub multiplicative: Option<Rational>,
    /// False when either side is a budget-limited z_end bound.
    pub exact: bool,
}

impl SensitivityReport {
    pub fn new(measure: MeasureId, fwd: Measured, rev: Measured) -> Self {
        let zero = Rational::from_integer(0);
        SensitivityReport {
            measure,
            value_fwd: fwd.value,
            value_rev: rev.value,
            additive: rev.value - fwd.value,
            multiplicative: (fwd.value != zero).then(|| rev.value / fwd.value),
            exact: fwd.exact && rev.exact,
        }
    }

    /// The report for the reversed text.
    pub fn swapped(&self) -> Self {
        let zero = Rational::from_integer(0);
        SensitivityReport {
            measure: self.measure,
            value_fwd: self.value_rev,
            value_rev: self.value_fwd,
            additive: -self.additive,
            multiplicative: (self.value_rev != zero).then(|| self.value_fwd / self.value_rev),
            exact: self.exact,
        }
    }
}

pub fn sensitivity_report(
    w: &Text,
    measures: &[MeasureId],
    opts: MeasureOptions,
) -> Result<Vec<SensitivityReport>> {
    if w.is_empty() {
        return Err(Error::EmptyText);
    }
    let rw = reverse(w);
    measures
        .iter()
        .map(|&m| Ok(SensitivityReport::new(m, compute(w, m, opts)?, compute(&rw, m, opts)?)))
        .collect()
}

/// Inclusive `start:end[:step]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParamRange {
    pub start: u64,
    pub end: u64,
    pub step: u64,
}

impl ParamRange {
    pub fn new(start: u64, end: u64, step: u64) -> Result<Self> {
        if step == 0 {
            return Err(Error::Parse("range step must be positive".into()));
        }
        if start > end {
            return Err(Error::Parse(format!("empty range {start}:{end}")));
        }
        Ok(ParamRange { start, end, step })
    }

    pub fn single(p: u64) -> Self {
        ParamRange {
            start: p,
            end: p,
            step: 1,
        }
    }

    pub fn values(&self) -> Vec<u64> {
        (self.start..=self.end).step_by(self.step as usize).collect()
    }
}

impl FromStr for ParamRange {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        let num = |t: &str| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| Error::Parse(format!("bad range `{s}`")))
        };
        match parts.as_slice() {
            [a] => Ok(ParamRange::single(num(a)?)),
            [a, b] => ParamRange::new(num(a)?, num(b)?, 1),
            [a, b, c] => ParamRange::new(num(a)?, num(b)?, num(c)?),
            _ => Err(Error::Parse(format!("bad range `{s}`"))),
        }
    }
}

impl fmt::Display for ParamRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.start, self.end, self.step)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepRow {
    pub family: String,
    pub param: u64,
    pub n: usize,
    pub report: SensitivityReport,
}

/// Parameter points for `family`; parameterless families collapse to one.
fn points(family: FamilyId, range: ParamRange) -> Result<Vec<FamilySpec>> {
    let params = if family.takes_param() {
        range.values()
    } else {
        vec![0]
    };
    let specs: Vec<FamilySpec> = params
        .into_iter()
        .map(|p| FamilySpec::new(family, p))
        .collect();
    for s in &specs {
        s.validate()?;
    }
    Ok(specs)
}

/// Two rows per (param, measure): the family itself, then the reversed
/// orientation under the twin's label.
pub fn sweep(
    family: FamilyId,
    range: ParamRange,
    measures: &[MeasureId],
    opts: MeasureOptions,
) -> Result<Vec<SweepRow>> {
    let mut measures = measures.to_vec();
    measures.sort();
    measures.dedup();
    let specs = points(family, range)?;
    let per_point: Vec<Vec<SweepRow>> = specs
        .par_iter()
        .map(|spec| {
            let w = generate(spec)?;
            let reports = sensitivity_report(&w, &measures, opts)?;
            let mut rows = Vec::with_capacity(2 * reports.len());
            for r in reports {
                let twin = r.swapped();
                rows.push(SweepRow {
                    family: family.id().to_string(),
                    param: spec.param,
                    n: w.len(),
                    report: r,
                });
                rows.push(SweepRow {
                    family: family.reversed_label(),
                    param: spec.param,
                    n: w.len(),
                    report: twin,
                });
            }
            Ok(rows)
        })
        .collect::<Result<_>>()?;
    Ok(per_point.into_iter().flatten().collect())
}

pub const CSV_HEADER: &str =
    "family,param,n,measure,value_fwd,value_rev,additive,multiplicative_num,multiplicative_den,exact";

#[derive(Debug, Serialize, Deserialize)]
struct CsvRecord {
    family: String,
    param: u64,
    n: usize,
    measure: String,
    value_fwd: String,
    value_rev: String,
    additive: String,
    multiplicative_num: Option<i64>,
    multiplicative_den: Option<i64>,
    exact: bool,
}

pub fn write_csv<W: Write>(rows: &[SweepRow], out: W) -> Result<()> {
    let mut wtr = csv::Writer::from_writer(out);
    for row in rows {
        let r = &row.report;
        wtr.serialize(CsvRecord {
            family: row.family.clone(),
            param: row.param,
            n: row.n,
            measure: r.measure.id().to_string(),
            value_fwd: r.value_fwd.to_string(),
            value_rev: r.value_rev.to_string(),
            additive: r.additive.to_string(),
            multiplicative_num: r.multiplicative.map(|m| *m.numer()),
            multiplicative_den: r.multiplicative.map(|m| *m.denom()),
            exact: r.exact,
        })?;
    }
    if rows.is_empty() {
        wtr.write_record(CSV_HEADER.split(','))?;
    }
    wtr.flush().map_err(|e| Error::Csv(e.to_string()))?;
    Ok(())
}

pub fn csv_string(rows: &[SweepRow]) -> Result<String> {
    let mut buf = Vec::new();
    write_csv(rows, &mut buf)?;
    String::from_utf8(buf).map_err(|e| Error::Csv(e.to_string()))
}

pub fn read_csv<R: Read>(input: R) -> Result<Vec<SweepRow>> {
    let mut rdr = csv::Reader::from_reader(input);
    let ratio = |s: &str| {
        Rational::from_str(s).map_err(|_| Error::Csv(format!("bad rational `{s}`")))
    };
    rdr.deserialize()
        .map(|rec| {
            let rec: CsvRecord = rec?;
            let multiplicative = match (rec.multiplicative_num, rec.multiplicative_den) {
                (Some(n), Some(d)) if d != 0 => Some(Rational::new(n, d)),
                (None, None) => None,
                _ => return Err(Error::Csv("incomplete multiplicative column".into())),
            };
            Ok(SweepRow {
                family: rec.family,
                param: rec.param,
                n: rec.n,
                report: SensitivityReport {
                    measure: rec.measure.parse()?,
                    value_fwd: ratio(&rec.value_fwd)?,
                    value_rev: ratio(&rec.value_rev)?,
                    additive: ratio(&rec.additive)?,
                    multiplicative,
                    exact: rec.exact,
                },
            })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyRow {
    /// Family label of the orientation checked.
    pub family: String,
    pub param: u64,
    /// Measure id, transform id, or `fib:<property>`.
    pub check: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
    pub lemma: &'static str,
}

impl fmt::Display for VerifyRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<4} {:<12} {:>6} {:<20} expected={} computed={}",
            if self.pass { "PASS" } else { "FAIL" },
            self.family,
            self.param,
            self.check,
            self.expected,
            self.computed
        )
    }
}

fn measure_row(
    label: String,
    param: u64,
    w: &Text,
    p: Prediction,
    opts: MeasureOptions,
) -> Result<VerifyRow> {
    let got = compute(w, p.measure, opts)?;
    let expected = Rational::from_integer(p.value as i64);
    let computed = if got.exact {
        got.value.to_string()
    } else {
        format!("{} (exact=false)", got.value)
    };
    Ok(VerifyRow {
        family: label,
        param,
        check: p.measure.id().to_string(),
        expected: p.value.to_string(),
        computed,
        pass: got.exact && got.value == expected,
        lemma: p.lemma,
    })
}

fn transform_row(
    label: String,
    param: u64,
    w: &Text,
    spec: &FamilySpec,
    variant: TransformVariant,
) -> Result<VerifyRow> {
    let expected = predict_transform(spec, variant)?;
    let computed = match variant {
        TransformVariant::Bijective => bbwt(w)?.output,
        _ => bwt(w)?.output,
    };
    let shown = |t: &Text| {
        if t.len() <= 40 {
            t.to_string()
        } else {
            format!("<{} symbols>", t.len())
        }
    };
    Ok(VerifyRow {
        family: label,
        param,
        check: variant.id().to_string(),
        expected: shown(&expected),
        computed: shown(&computed),
        pass: expected == computed,
        lemma: match variant {
            TransformVariant::Bijective => "closed-form BBWT",
            _ => "closed-form BWT",
        },
    })
}

fn verify_point(spec: &FamilySpec, opts: MeasureOptions) -> Result<Vec<VerifyRow>> {
    let w = generate(spec)?;
    let rw = reverse(&w);
    let fam = spec.family;
    let mut rows = Vec::new();
    for m in MeasureId::ALL {
        if let Some(p) = predict(spec, m) {
            rows.push(measure_row(fam.id().into(), spec.param, &w, p, opts)?);
        }
        if let Some(p) = predict_reverse(spec, m) {
            rows.push(measure_row(fam.reversed_label(), spec.param, &rw, p, opts)?);
        }
    }
    if matches!(fam, FamilyId::Uk | FamilyId::UkRev) {
        let twin = spec.reversed().expect("u_k has a twin");
        for variant in [TransformVariant::Plain, TransformVariant::Bijective] {
            rows.push(transform_row(fam.id().into(), spec.param, &w, spec, variant)?);
            rows.push(transform_row(fam.reversed_label(), spec.param, &rw, &twin, variant)?);
        }
    }
    if fam == FamilyId::Fib && spec.param >= 6 {
        let report = fib_property_check(spec.param)?;
        for (name, ok) in report.checks() {
            rows.push(VerifyRow {
                family: fam.id().into(),
                param: spec.param,
                check: format!("fib:{name}"),
                expected: "true".into(),
                computed: ok.to_string(),
                pass: ok,
                lemma: "Fibonacci word properties",
            });
        }
    }
    Ok(rows)
}

pub fn verify(
    family: FamilyId,
    range: ParamRange,
    opts: MeasureOptions,
) -> Result<Vec<VerifyRow>> {
    let specs = points(family, range)?;
    let rows: Vec<Vec<VerifyRow>> = specs
        .par_iter()
        .map(|s| verify_point(s, opts))
        .collect::<Result<_>>()?;
    Ok(rows.into_iter().flatten().collect())
}

/// Parameter grid used by `verify --family all`.
pub fn default_grid(quick: bool) -> Vec<(FamilyId, ParamRange)> {
    use FamilyId as F;
    let r = |a, b, s| ParamRange { start: a, end: b, step: s };
    if quick {
        vec![
            (F::Uk, r(1, 20, 1)),
            (F::UkRev, r(1, 20, 1)),
            (F::Tp, r(2, 6, 1)),
            (F::TpRev, r(2, 6, 1)),
            (F::WSigma, r(2, 40, 2)),
            (F::WSigmaRev, r(2, 40, 2)),
            (F::Fib, r(6, 20, 1)),
            (F::Central, r(4, 20, 1)),
            (F::FibPlus, r(8, 18, 2)),
            (F::CFib, r(9, 19, 2)),
            (F::CFibRev, r(9, 19, 2)),
            (F::UnaryPlus, r(2, 100, 1)),
            (F::T55, r(0, 0, 1)),
        ]
    } else {
        vec![
            (F::Uk, r(1, 100, 1)),
            (F::UkRev, r(1, 100, 1)),
            (F::Tp, r(2, 20, 1)),
            (F::TpRev, r(2, 20, 1)),
            (F::WSigma, r(2, 200, 2)),
            (F::WSigmaRev, r(2, 200, 2)),
            (F::Fib, r(6, 25, 1)),
            (F::Central, r(4, 25, 1)),
            (F::FibPlus, r(8, 24, 2)),
            (F::CFib, r(9, 25, 2)),
            (F::CFibRev, r(9, 25, 2)),
            (F::UnaryPlus, r(2, 500, 1)),
            (F::T55, r(0, 0, 1)),
        ]
    }
}
