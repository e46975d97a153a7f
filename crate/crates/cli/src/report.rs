//! The analysis report: every exact quantity for one function, rendered as
//! line-oriented `key=value` text. Rationals are serialized as
//! numerator/denominator so nothing is lost crossing the CLI boundary.

use std::fmt;

use boolfun::maxonomial::{maxonomials, min_hitting_set};
use boolfun::measures::{block_sensitivity, per_variable_degrees, weight_profile};
use boolfun::table::format_var_set;
use boolfun::{DyadicRational, HittingSetResult, Result, TruthTable};

pub struct AnalysisReport {
    pub table: String,
    pub n: usize,
    pub degree: usize,
    pub relevant_mask: u32,
    pub relevant_count: usize,
    pub per_var_degrees: Vec<Option<usize>>,
    pub per_var_weights: Vec<DyadicRational>,
    pub weight_total: DyadicRational,
    pub maxonomial_masks: Vec<u32>,
    pub hitting: HittingSetResult,
    pub bs: Option<usize>,
}

pub fn analyze(tt: &TruthTable, include_bs: bool) -> Result<AnalysisReport> {
    let profile = weight_profile(tt);
    let maxonomial_masks = match maxonomials(tt) {
        Ok(set) => set.masks().to_vec(),
        Err(_) => Vec::new(),
    };
    let bs = if include_bs {
        Some(block_sensitivity(tt)?)
    } else {
        None
    };
    Ok(AnalysisReport {
        table: tt.to_string(),
        n: tt.arity(),
        degree: tt.degree(),
        relevant_mask: tt.relevant_vars(),
        relevant_count: tt.relevant_count(),
        per_var_degrees: per_variable_degrees(tt),
        per_var_weights: profile.weights().to_vec(),
        weight_total: profile.total(),
        maxonomial_masks,
        hitting: min_hitting_set(tt),
        bs,
    })
}

fn mask_list(masks: &[u32]) -> String {
    if masks.is_empty() {
        return "-".to_string();
    }
    let parts: Vec<String> = masks.iter().map(|&m| format_var_set(m)).collect();
    parts.join(",")
}

impl fmt::Display for AnalysisReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "table={}", self.table)?;
        writeln!(f, "n={}", self.n)?;
        writeln!(f, "degree={}", self.degree)?;
        writeln!(f, "relevant_mask={:#x}", self.relevant_mask)?;
        writeln!(f, "relevant_count={}", self.relevant_count)?;
        for i in 1..=self.n {
            match self.per_var_degrees[i - 1] {
                Some(d) => writeln!(f, "deg_i.{i}={d}")?,
                None => writeln!(f, "deg_i.{i}=none")?,
            }
            writeln!(f, "w_i.{i}={}", self.per_var_weights[i - 1])?;
        }
        writeln!(f, "W={}", self.weight_total)?;
        writeln!(f, "maxonomial_count={}", self.maxonomial_masks.len())?;
        writeln!(f, "maxonomials={}", mask_list(&self.maxonomial_masks))?;
        writeln!(f, "h={}", self.hitting.size)?;
        writeln!(f, "hitting_set={}", format_var_set(self.hitting.set))?;
        match &self.hitting.certificate {
            Some(cert) => {
                writeln!(f, "hitting_certified=true")?;
                writeln!(f, "certificate={}", mask_list(cert))?;
            }
            None => writeln!(f, "hitting_certified=false")?,
        }
        if let Some(bs) = self.bs {
            writeln!(f, "bs={bs}")?;
        }
        let d = self.degree;
        writeln!(
            f,
            "check.weight_sum_consistent={}",
            self.per_var_weights.iter().copied().sum::<DyadicRational>() == self.weight_total
        )?;
        writeln!(f, "check.h_le_deg_cubed={}", self.hitting.size <= d * d * d)?;
        Ok(())
    }
}
