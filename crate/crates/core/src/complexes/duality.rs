use std::fmt::Write as _;

use super::basis::chain_basis;
use super::chain::Coefficients;
use super::dims::{cohomology_dims_with, homology_window, DimTable};
use super::ComplexError;
use crate::exec::Execution;
use crate::structure::PoissonStructure;

/// One compared cell: twisted homology at (n, w) against cohomology at (ℓ − n, w − s).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityRow {
    pub n: usize,
    pub w: i64,
    pub twisted: usize,
    pub cohomology: usize,
    pub canonical: Option<usize>,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DualityFailure {
    /// No single shift matches every cell of the window.
    ShiftNotFound,
    /// A uniform shift exists but differs from the total weight.
    UnexpectedShift { found: i64, expected: i64 },
    /// All traces vanish yet canonical and twisted homology differ at (n, w).
    UnimodularMismatch { n: usize, w: i64 },
}

/// Twisted homology, cohomology, the detected shift and per-cell verdicts over `0..=max_weight`.
#[derive(Clone, Debug)]
pub struct DualityReport {
    pub nvars: usize,
    pub max_weight: i64,
    pub twisted: DimTable,
    pub canonical: Option<DimTable>,
    pub cohomology: DimTable,
    pub expected_shift: i64,
    pub shift: Option<i64>,
    pub unimodular: bool,
    pub rows: Vec<DualityRow>,
}

impl DualityReport {
    pub fn failures(&self) -> Vec<DualityFailure> {
        let mut out = Vec::new();
        match self.shift {
            None => out.push(DualityFailure::ShiftNotFound),
            Some(s) if s != self.expected_shift => out.push(DualityFailure::UnexpectedShift {
                found: s,
                expected: self.expected_shift,
            }),
            _ => {}
        }
        if let Some(c) = &self.canonical {
            for (n, w, d) in c.iter() {
                if self.twisted.get(n, w) != Some(d) {
                    out.push(DualityFailure::UnimodularMismatch { n, w });
                }
            }
        }
        out
    }

    pub fn passed(&self) -> bool {
        self.failures().is_empty()
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# expected_shift\t{}", self.expected_shift);
        let _ = writeln!(
            out,
            "# shift\t{}",
            self.shift.map_or("none".to_string(), |s| s.to_string())
        );
        out.push_str("n\tw\ttwisted_dim\tcohomology_dim\tverdict\n");
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}",
                r.n,
                r.w,
                r.twisted,
                r.cohomology,
                if r.ok { "ok" } else { "mismatch" }
            );
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "ℓ = {}, expected shift: {}",
            self.nvars, self.expected_shift
        );
        match self.shift {
            Some(s) => {
                let _ = writeln!(out, "detected shift: {s}");
            }
            None => out.push_str("detected shift: none (no uniform shift fits the window)\n"),
        }
        let s = self.shift.unwrap_or(self.expected_shift);
        let _ = writeln!(
            out,
            "{:>3} {:>4} {:>14} {:>16} {:>8}",
            "n",
            "w",
            "HP_n(A,ω)_w",
            format!("HP^(ℓ-n)_(w-{s})"),
            "verdict"
        );
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{:>3} {:>4} {:>14} {:>16} {:>8}",
                r.n,
                r.w,
                r.twisted,
                r.cohomology,
                if r.ok { "ok" } else { "MISMATCH" }
            );
        }
        if self.unimodular {
            let same = !self
                .failures()
                .iter()
                .any(|f| matches!(f, DualityFailure::UnimodularMismatch { .. }));
            let _ = writeln!(
                out,
                "unimodular: canonical and twisted homology {}",
                if same { "agree cell-wise" } else { "DIFFER" }
            );
        } else {
            out.push_str("unimodular: no (twisted coefficients required)\n");
        }
        let _ = writeln!(
            out,
            "verdict: {}",
            if self.passed() { "pass" } else { "FAIL" }
        );
        out
    }
}

pub fn duality_report(
    s: &PoissonStructure,
    max_weight: i64,
) -> Result<DualityReport, ComplexError> {
    duality_report_with(Execution::default(), s, max_weight)
}

pub fn duality_report_with(
    exec: Execution,
    s: &PoissonStructure,
    max_weight: i64,
) -> Result<DualityReport, ComplexError> {
    let l = s.nvars();
    let total = s.vars().total_weight();
    let twisted = homology_window(exec, s, Coefficients::Omega, 0, max_weight)?;
    let unimodular = s.modular_data().unimodular;
    let canonical = if unimodular {
        Some(homology_window(
            exec,
            s,
            Coefficients::Canonical,
            0,
            max_weight,
        )?)
    } else {
        None
    };
    // Cochain cells below weight −total are empty.
    let cohomology = cohomology_dims_with(exec, s, -total, max_weight)?;
    let coh = |n: usize, w: i64| -> usize {
        if w < -total {
            0
        } else {
            cohomology
                .get(n, w)
                .expect("cohomology window covers all shifts")
        }
    };
    let fits = |shift: i64| {
        (0..=l).all(|n| (0..=max_weight).all(|w| twisted.get(n, w) == Some(coh(l - n, w - shift))))
    };
    let shift = if fits(total) {
        Some(total)
    } else {
        (0..=max_weight + total).find(|&c| fits(c))
    };
    let used = shift.unwrap_or(total);
    let mut rows = Vec::new();
    for n in 0..=l {
        for w in 0..=max_weight {
            if chain_basis(n, w, s.vars()).is_empty() {
                continue;
            }
            let t = twisted.get(n, w).expect("computed");
            let c = coh(l - n, w - used);
            rows.push(DualityRow {
                n,
                w,
                twisted: t,
                cohomology: c,
                canonical: canonical.as_ref().and_then(|tab| tab.get(n, w)),
                ok: t == c,
            });
        }
    }
    Ok(DualityReport {
        nvars: l,
        max_weight,
        twisted,
        canonical,
        cohomology,
        expected_shift: total,
        shift,
        unimodular,
        rows,
    })
}
