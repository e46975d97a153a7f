//! The verification suites behind `boolfun verify`. Each suite sweeps a
//! table space exhaustively, counts checks, and collects counterexamples
//! in `bf:v1` form for replay.

use anyhow::{bail, Result};

use boolfun::construct::{and_split, compose};
use boolfun::maxonomial::{check_lemma1_decomposition, min_hitting_set};
use boolfun::measures::{block_sensitivity, check_claim_wi, per_variable_degrees, weight_profile};
use boolfun::search::npn_canonical;
use boolfun::table::{full_var_mask, vars_of_mask};
use boolfun::TruthTable;

/// Exhaustive sweeps iterate all `2^(2^n)` tables; above this they are
/// no longer desk-scale.
const MAX_SWEEP_ARITY: usize = 4;

const MAX_DUMPED_FAILURES: usize = 20;

pub const SUITE_NAMES: &[&str] = &[
    "claim-wi",
    "lemma1-decomposition",
    "hcube",
    "hbs",
    "npn-invariance",
    "composition-multiplicativity",
    "prop1-weight-report",
];

pub struct SuiteReport {
    pub name: String,
    pub scope: String,
    pub checked: u64,
    pub failed: u64,
    pub counterexamples: Vec<(String, String)>,
    pub extra: Vec<(String, String)>,
}

impl SuiteReport {
    fn new(name: &str, scope: String) -> Self {
        SuiteReport {
            name: name.to_string(),
            scope,
            checked: 0,
            failed: 0,
            counterexamples: Vec::new(),
            extra: Vec::new(),
        }
    }

    fn fail(&mut self, table: &TruthTable, detail: String) {
        self.failed += 1;
        if self.counterexamples.len() < MAX_DUMPED_FAILURES {
            self.counterexamples.push((table.to_string(), detail));
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("suite={}\n", self.name));
        out.push_str(&format!("scope={}\n", self.scope));
        out.push_str(&format!("checked={}\n", self.checked));
        out.push_str(&format!("failed={}\n", self.failed));
        for (k, v) in &self.extra {
            out.push_str(&format!("{k}={v}\n"));
        }
        for (idx, (table, detail)) in self.counterexamples.iter().enumerate() {
            out.push_str(&format!("counterexample.{idx}.table={table}\n"));
            out.push_str(&format!("counterexample.{idx}.detail={detail}\n"));
        }
        if self.failed as usize > self.counterexamples.len() {
            out.push_str("counterexamples_truncated=true\n");
        }
        out.push_str(&format!(
            "result={}\n",
            if self.passed() { "pass" } else { "fail" }
        ));
        out
    }
}

fn tables_of(n: usize) -> impl Iterator<Item = TruthTable> {
    (0..1u64 << (1usize << n)).map(move |w| TruthTable::from_word(n, w).unwrap())
}

fn sweep_bound(requested: Option<usize>, default: usize) -> Result<usize> {
    let bound = requested.unwrap_or(default);
    if bound > MAX_SWEEP_ARITY {
        bail!("exhaustive sweeps support arity <= {MAX_SWEEP_ARITY}, got {bound}");
    }
    Ok(bound)
}

pub fn run(name: &str, bound: Option<usize>) -> Result<SuiteReport> {
    match name {
        "claim-wi" => claim_wi(sweep_bound(bound, 3)?),
        "lemma1-decomposition" => lemma1(sweep_bound(bound, 3)?),
        "hcube" => hcube(sweep_bound(bound, 4)?),
        "hbs" => hbs(sweep_bound(bound, 4)?),
        "npn-invariance" => npn_invariance(sweep_bound(bound, 3)?),
        "composition-multiplicativity" => composition(),
        "prop1-weight-report" => prop1_weight_report(sweep_bound(bound, 3)?),
        other => bail!(
            "unknown suite `{other}`; known suites: {}",
            SUITE_NAMES.join(", ")
        ),
    }
}

fn claim_wi(bound: usize) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("claim-wi", format!("n<={bound}"));
    for n in 1..=bound {
        for t in tables_of(n) {
            for j_mask in 1..full_var_mask(n) + 1 {
                for i in vars_of_mask(full_var_mask(n) & !j_mask) {
                    let c = check_claim_wi(&t, j_mask, i)?;
                    report.checked += 1;
                    if !c.holds {
                        report.fail(
                            &t,
                            format!("J={j_mask:#x} i={i} lhs={} rhs={}", c.lhs, c.rhs),
                        );
                    }
                }
            }
        }
    }
    Ok(report)
}

fn lemma1(bound: usize) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("lemma1-decomposition", format!("n<={bound}"));
    for n in 0..=bound {
        for t in tables_of(n) {
            let h = min_hitting_set(&t);
            let r = check_lemma1_decomposition(&t, h.set)?;
            report.checked += 1;
            if !r.all_hold() {
                report.fail(
                    &t,
                    format!(
                        "H={:#x} degs_full={} split={} offset_bound={} degree_drop={}",
                        r.hitting_set,
                        r.hitting_degrees_full,
                        r.split_holds,
                        r.offset_bound_holds,
                        r.restrictions_drop_degree
                    ),
                );
            }
        }
    }
    Ok(report)
}

fn hcube(bound: usize) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("hcube", format!("n<={bound}"));
    for n in 0..=bound {
        for t in tables_of(n) {
            let d = t.degree();
            let h = min_hitting_set(&t).size;
            report.checked += 1;
            if h > d * d * d {
                report.fail(&t, format!("h={h} deg={d}"));
            }
        }
    }
    Ok(report)
}

fn hbs(bound: usize) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("hbs", format!("n<={bound}"));
    for n in 0..=bound {
        for t in tables_of(n) {
            let d = t.degree();
            let h = min_hitting_set(&t).size;
            let bs = block_sensitivity(&t)?;
            report.checked += 1;
            if h > d * bs {
                report.fail(&t, format!("h={h} deg={d} bs={bs}"));
            }
        }
    }
    Ok(report)
}

fn npn_invariance(bound: usize) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("npn-invariance", format!("n<={bound}"));
    for n in 0..=bound {
        for t in tables_of(n) {
            let c = npn_canonical(&t)?;
            report.checked += 1;
            let ok = c.degree() == t.degree()
                && c.relevant_count() == t.relevant_count()
                && weight_profile(&c).total() == weight_profile(&t).total()
                && min_hitting_set(&c).size == min_hitting_set(&t).size;
            if !ok {
                report.fail(&t, format!("canonical={c}"));
            }
        }
    }
    Ok(report)
}

fn composition() -> Result<SuiteReport> {
    let mut report = SuiteReport::new(
        "composition-multiplicativity",
        "all non-constant 2x2-variable pairs".to_string(),
    );
    let tables: Vec<TruthTable> = tables_of(2)
        .filter(|t| t.constant_value().is_none())
        .collect();
    for f in &tables {
        for g in &tables {
            let c = compose(f, g)?;
            report.checked += 1;
            let deg_ok = c.degree() == f.degree() * g.degree();
            let h_ok =
                min_hitting_set(&c).size == min_hitting_set(f).size * min_hitting_set(g).size;
            if !deg_ok || !h_ok {
                report.fail(&c, format!("f={f} g={g}"));
            }
        }
    }
    Ok(report)
}

/// Report-only suite: how the total weight moves under AND-splitting a
/// relevant variable. The split variable's own contribution is preserved
/// exactly; other variables can lose half their weight when every one of
/// their top monomials contains the split variable. Counts are broken out
/// for the case `deg_i(f) < deg(f)`.
fn prop1_weight_report(bound: usize) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("prop1-weight-report", format!("n<={bound}"));
    let mut equal = 0u64;
    let mut decreased = 0u64;
    let mut increased = 0u64;
    let mut sub_equal = 0u64;
    let mut sub_decreased = 0u64;
    let mut first_sub_decrease: Option<String> = None;
    for n in 1..=bound {
        for t in tables_of(n) {
            let relevant = t.relevant_vars();
            let degs = per_variable_degrees(&t);
            let w_before = weight_profile(&t).total();
            let d = t.degree();
            for i in vars_of_mask(relevant) {
                let g = and_split(&t, i)?;
                let w_after = weight_profile(&g).total();
                report.checked += 1;
                let sub = degs[i - 1] == Some(d) || d == 0;
                match w_after.cmp(&w_before) {
                    std::cmp::Ordering::Equal => {
                        equal += 1;
                        if !sub {
                            sub_equal += 1;
                        }
                    }
                    std::cmp::Ordering::Less => {
                        decreased += 1;
                        if !sub {
                            sub_decreased += 1;
                            if first_sub_decrease.is_none() {
                                first_sub_decrease =
                                    Some(format!("{t} i={i} W_before={w_before} W_after={w_after}"));
                            }
                        }
                    }
                    std::cmp::Ordering::Greater => increased += 1,
                }
            }
        }
    }
    report.extra.push(("report.equal".into(), equal.to_string()));
    report
        .extra
        .push(("report.decreased".into(), decreased.to_string()));
    report
        .extra
        .push(("report.increased".into(), increased.to_string()));
    report
        .extra
        .push(("report.subdeg.equal".into(), sub_equal.to_string()));
    report
        .extra
        .push(("report.subdeg.decreased".into(), sub_decreased.to_string()));
    if let Some(example) = first_sub_decrease {
        report
            .extra
            .push(("report.subdeg.first_decrease".into(), example));
    }
    Ok(report)
}
