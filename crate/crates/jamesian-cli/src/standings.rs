//! Standings files and the pairwise matchup matrix.
//!
//! A standings file is a two-column CSV with header `team,pct`; every team
//! name must be unique and every winning percentage strictly inside (0, 1).
//! Percentages of exactly 0 or 1 are rejected: a full pairwise matrix over
//! such a table would need the matchup function at one of its two undefined
//! corners.

use jamesian::{sweep, JamesianFunction};

use crate::fmtnum::format_prob;
use crate::CliError;

#[derive(Debug, Clone)]
pub struct StandingsTable {
    rows: Vec<(String, f64)>,
}

impl StandingsTable {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let (_, header) = lines
            .next()
            .ok_or_else(|| CliError::usage("standings file is empty".to_string()))?;
        if !header.eq_ignore_ascii_case("team,pct") {
            return Err(CliError::usage(format!(
                "standings row 1: expected header `team,pct`, found `{header}`"
            )));
        }
        let mut rows: Vec<(String, f64)> = Vec::new();
        for (line_no, line) in lines {
            let (team, pct) = line.split_once(',').ok_or_else(|| {
                CliError::usage(format!("standings row {line_no}: expected `team,pct`"))
            })?;
            let team = team.trim().to_string();
            if team.is_empty() {
                return Err(CliError::usage(format!(
                    "standings row {line_no}: empty team name"
                )));
            }
            if rows.iter().any(|(t, _)| *t == team) {
                return Err(CliError::usage(format!(
                    "standings row {line_no}: duplicate team `{team}`"
                )));
            }
            let pct: f64 = pct.trim().parse().map_err(|_| {
                CliError::usage(format!(
                    "standings row {line_no}: cannot parse percentage `{}`",
                    pct.trim()
                ))
            })?;
            if !(pct > 0.0 && pct < 1.0) {
                return Err(CliError::usage(format!(
                    "standings row {line_no}: percentage {pct} must lie strictly inside (0, 1); \
                     the matchup function is undefined where two boundary teams meet"
                )));
            }
            rows.push((team, pct));
        }
        if rows.is_empty() {
            return Err(CliError::usage("standings file has no teams".to_string()));
        }
        Ok(StandingsTable { rows })
    }

    /// Pairwise matchup matrix as CSV: header row of team names, one row per
    /// team, entries `J(a_i, a_j)` at 12 decimal digits.
    pub fn matchup_csv(&self, j: &JamesianFunction) -> String {
        let n = self.rows.len();
        let values = sweep::map_collect(n * n, |p| {
            let (i, k) = (p / n, p % n);
            j.eval_unchecked(self.rows[i].1, self.rows[k].1)
        });
        let mut out = String::from("team");
        for (name, _) in &self.rows {
            out.push(',');
            out.push_str(name);
        }
        out.push('\n');
        for i in 0..n {
            out.push_str(&self.rows[i].0);
            for k in 0..n {
                out.push(',');
                out.push_str(&format_prob(values[i * n + k]));
            }
            out.push('\n');
        }
        out
    }
}
