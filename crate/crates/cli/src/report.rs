use std::fmt::Write as _;

use poisson_core::catalog::CatalogEntry;
use poisson_core::complexes::{
    cohomology_dims_with, duality_report_with, homology_dims_with, Coefficients,
};
use poisson_core::envelope::{
    confluence_check, gr_dimension_check_with, j_quotient_check, nu_check,
};
use poisson_core::structure::JacobiWitness;
use poisson_core::{Execution, Homogeneity, PoissonStructure, VarTable};

/// Exit status, ordered by severity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Pass,
    Fail,
    Usage,
}

impl Status {
    pub fn code(self) -> u8 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Usage => 2,
        }
    }
}

pub struct Report {
    pub text: String,
    pub status: Status,
    pub error: Option<String>,
}

impl Report {
    pub fn ok(text: String) -> Self {
        Report {
            text,
            status: Status::Pass,
            error: None,
        }
    }

    pub fn usage(error: String) -> Self {
        Report {
            text: String::new(),
            status: Status::Usage,
            error: Some(error),
        }
    }

    fn verdict(text: String, pass: bool) -> Self {
        Report {
            text,
            status: if pass { Status::Pass } else { Status::Fail },
            error: None,
        }
    }
}

pub enum Op {
    Check,
    Trace {
        tsv: bool,
    },
    Homology {
        coeff: Coefficients,
        max_weight: i64,
        tsv: bool,
    },
    Cohomology {
        max_weight: i64,
        tsv: bool,
    },
    Duality {
        max_weight: i64,
        tsv: bool,
    },
    Pbw {
        nu: bool,
        samples: usize,
        seed: u64,
        max_filtration: u32,
        gr_weight: u64,
    },
}

fn pass_fail(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "FAIL"
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn header(label: &str, vars: &VarTable) -> String {
    let noun = if vars.len() == 1 {
        "variable"
    } else {
        "variables"
    };
    format!("structure: {label} ({} {noun}: {vars})\n", vars.len())
}

fn bracket_lines(s: &PoissonStructure) -> String {
    let v = s.vars();
    let mut out = String::from("bracket:\n");
    let mut any = false;
    for i in 0..s.nvars() {
        for j in i + 1..s.nvars() {
            let p = s.entry(i, j);
            if !p.is_zero() {
                any = true;
                let _ = writeln!(out, "  {{{},{}}} = {}", v.name(i), v.name(j), v.display(p));
            }
        }
    }
    if !any {
        out.push_str("  0\n");
    }
    out
}

pub fn jacobi_failure(label: &str, vars: &VarTable, witnesses: &[JacobiWitness]) -> Report {
    let mut out = header(label, vars);
    out.push_str("valid: no, the Jacobi identity fails\n");
    for w in witnesses {
        let (i, j, k) = w.triple;
        let (a, b, c) = (vars.name(i), vars.name(j), vars.name(k));
        let _ = writeln!(
            out,
            "  {{{a},{{{b},{c}}}}} + {{{b},{{{c},{a}}}}} + {{{c},{{{a},{b}}}}} = {}",
            vars.display(&w.jacobiator)
        );
    }
    Report::verdict(out, false)
}

fn homogeneity_line(s: &PoissonStructure) -> String {
    match s.homogeneity() {
        Homogeneity::Zero => "homogeneity: zero bracket\n".into(),
        Homogeneity::Degree(d) => format!("homogeneity: degree {d}\n"),
        Homogeneity::Inhomogeneous => "homogeneity: none (graded commands unavailable)\n".into(),
    }
}

fn check(label: &str, s: &PoissonStructure) -> Report {
    let mut out = header(label, s.vars());
    out.push_str(&bracket_lines(s));
    out.push_str("valid: yes\n");
    out.push_str(&homogeneity_line(s));
    let _ = writeln!(out, "unimodular: {}", yes_no(s.modular_data().unimodular));
    Report::ok(out)
}

fn trace(label: &str, s: &PoissonStructure, tsv: bool) -> Report {
    let v = s.vars();
    let md = s.modular_data();
    let mut out = String::new();
    if tsv {
        out.push_str("var\ttrace\n");
        for (i, t) in md.traces.iter().enumerate() {
            let _ = writeln!(out, "{}\t{}", v.name(i), v.display(t));
        }
        return Report::ok(out);
    }
    out.push_str(&header(label, v));
    let width = v
        .names()
        .iter()
        .map(|n| n.chars().count())
        .max()
        .unwrap_or(1)
        + 4;
    for (i, t) in md.traces.iter().enumerate() {
        let name = format!("tr(d{})", v.name(i));
        let _ = writeln!(out, "  {name:<width$} = {}", v.display(t), width = width);
    }
    let _ = writeln!(out, "unimodular: {}", yes_no(md.unimodular));
    Report::ok(out)
}

fn graded<T>(label: &str, s: &PoissonStructure, f: impl FnOnce() -> T) -> Result<T, Report> {
    match s.weight_shift() {
        Ok(_) => Ok(f()),
        Err(_) => Err(Report::usage(format!(
            "{label}: bracket is not weighted-homogeneous, so the complexes do not split by weight"
        ))),
    }
}

fn pbw(
    label: &str,
    s: &PoissonStructure,
    exec: Execution,
    opts: (bool, usize, u64, u32, u64),
) -> Report {
    let (nu, samples, seed, max_p, gr_weight) = opts;
    let v = s.vars();
    let mut out = header(label, v);
    let mut pass = true;

    let c = confluence_check(s, samples, seed);
    pass &= c.passed();
    let _ = writeln!(
        out,
        "confluence: {} ({} words, three reduction orders)",
        pass_fail(c.passed()),
        c.checked
    );
    for w in c.failures.iter().take(3) {
        let _ = writeln!(out, "  disagreement on {}", w.display(v));
    }

    let mut gr_ok = true;
    let mut cells = 0;
    let mut bad = Vec::new();
    for p in 0..=max_p {
        let g = gr_dimension_check_with(exec, s, p, gr_weight);
        gr_ok &= g.passed();
        cells += g.rows.len();
        bad.extend(g.rows.into_iter().filter(|r| r.envelope != r.symmetric));
    }
    pass &= gr_ok;
    let _ = writeln!(
        out,
        "associated graded: {} (p ≤ {max_p}, w ≤ {gr_weight}, {cells} cells against A[y])",
        pass_fail(gr_ok)
    );
    for r in bad.iter().take(3) {
        let _ = writeln!(
            out,
            "  p={} w={}: rank {} vs {}",
            r.p, r.weight, r.envelope, r.symmetric
        );
    }

    let j = j_quotient_check(s, samples, seed);
    pass &= j.passed();
    let _ = writeln!(
        out,
        "J generators: {} (top differential gives h_x - tr(dx))",
        pass_fail(j.generators_match)
    );
    let _ = writeln!(
        out,
        "J quotient: {} ({} pairs a·h_x against the ω action)",
        pass_fail(j.failures.is_empty()),
        j.checked
    );
    for (a, i) in j.failures.iter().take(3) {
        let _ = writeln!(out, "  a = {}, x = {}", v.display(a), v.name(*i));
    }

    if nu {
        match nu_check(s, samples, seed) {
            Ok(r) => {
                pass &= r.passed();
                let shifts: Vec<String> = r.shifts.iter().map(ToString::to_string).collect();
                let _ = writeln!(
                    out,
                    "nu: {} (shifts ({}), {} relations, {} module cases)",
                    pass_fail(r.passed()),
                    shifts.join(", "),
                    r.relations_checked,
                    r.module_checked
                );
                for (lhs, _) in r.relation_failures.iter().take(3) {
                    let _ = writeln!(out, "  relation {} not preserved", lhs.display(v));
                }
                for (m, u) in r.module_failures.iter().take(3) {
                    let _ = writeln!(out, "  {}·{} differs", v.display(m), u.display(v));
                }
            }
            Err(_) => out.push_str("nu: skipped (bracket is not log-canonical)\n"),
        }
    }
    Report::verdict(out, pass)
}

pub fn run(op: &Op, label: &str, s: &PoissonStructure, exec: Execution) -> Report {
    let result = match *op {
        Op::Check => Ok(check(label, s)),
        Op::Trace { tsv } => Ok(trace(label, s, tsv)),
        Op::Homology {
            coeff,
            max_weight,
            tsv,
        } => graded(label, s, || {
            let t = homology_dims_with(exec, s, coeff, max_weight).expect("homogeneous");
            if tsv {
                Report::ok(t.to_tsv())
            } else {
                let name = match coeff {
                    Coefficients::Canonical => "A",
                    Coefficients::Omega => "ω_A",
                };
                Report::ok(format!(
                    "{}dim HP_n(A, {name}) by weight w ≤ {max_weight}\n{}",
                    header(label, s.vars()),
                    t.to_text()
                ))
            }
        }),
        Op::Cohomology { max_weight, tsv } => graded(label, s, || {
            let lo = -s.vars().total_weight();
            let t = cohomology_dims_with(exec, s, lo, max_weight).expect("homogeneous");
            if tsv {
                Report::ok(t.to_tsv())
            } else {
                Report::ok(format!(
                    "{}dim HP^n(A) by weight {lo} ≤ w ≤ {max_weight}\n{}",
                    header(label, s.vars()),
                    t.to_text()
                ))
            }
        }),
        Op::Duality { max_weight, tsv } => graded(label, s, || {
            let r = duality_report_with(exec, s, max_weight).expect("homogeneous");
            let text = if tsv {
                r.to_tsv()
            } else {
                header(label, s.vars()) + &r.to_text()
            };
            Report::verdict(text, r.passed())
        }),
        Op::Pbw {
            nu,
            samples,
            seed,
            max_filtration,
            gr_weight,
        } => Ok(pbw(
            label,
            s,
            exec,
            (nu, samples, seed, max_filtration, gr_weight),
        )),
    };
    result.unwrap_or_else(|r| r)
}

pub fn catalog_listing(entries: &[CatalogEntry]) -> String {
    let mut out = String::from("id        vars  degree  unimodular  description\n");
    for e in entries {
        let degree = match e.homogeneity {
            Homogeneity::Degree(d) => d.to_string(),
            Homogeneity::Zero => "-".into(),
            Homogeneity::Inhomogeneous => "none".into(),
        };
        let _ = writeln!(
            out,
            "{:<9} {:>4}  {:>6}  {:<10}  {}",
            e.id,
            e.document.vars.len(),
            degree,
            yes_no(e.unimodular),
            e.description
        );
    }
    out
}
