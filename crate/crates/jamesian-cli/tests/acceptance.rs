//! Acceptance: the matchup matrix from any valid standings file is a
//! complement matrix, `M[i][j] + M[j][i] = 1` within 1e-12 on the true
//! values, and its diagonal prints exactly as `0.5`.

use std::fs;
use std::path::PathBuf;
use std::process::Command;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn run_predict(standings: &str, name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    fs::write(&path, standings).unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_jamesian"))
        .args(["predict", "--kind", "adams", "--standings"])
        .arg(&path)
        .output()
        .expect("binary runs");
    assert!(out.status.success(), "predict failed on {name}");
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn criterion_9_matchup_matrix_property() {
    let mut rng = StdRng::seed_from_u64(0x90210);
    for round in 0..5 {
        let teams = rng.random_range(2..=8);
        let mut standings = String::from("team,pct\n");
        let mut pcts = Vec::new();
        for t in 0..teams {
            let pct = (rng.random_range(0.05f64..0.95) * 1000.0).round() / 1000.0;
            standings.push_str(&format!("T{t},{pct}\n"));
            pcts.push(pct);
        }
        let csv = run_predict(&standings, &format!("standings_{round}.csv"));
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), teams + 1);

        let matrix: Vec<Vec<&str>> = lines[1..]
            .iter()
            .map(|l| l.split(',').skip(1).collect())
            .collect();
        let mut worst_parsed = 0.0f64;
        let mut worst_true = 0.0f64;
        for i in 0..teams {
            assert_eq!(matrix[i][i], "0.5", "diagonal must print exactly 0.5");
            for k in 0..teams {
                let mik: f64 = matrix[i][k].parse().unwrap();
                let mki: f64 = matrix[k][i].parse().unwrap();
                // printed cells carry 12 decimal digits each
                worst_parsed = worst_parsed.max((mik + mki - 1.0).abs());
                // the underlying values satisfy the complement identity to
                // 1e-12
                let vik = jamesian::adams(pcts[i], pcts[k]).unwrap();
                let vki = jamesian::adams(pcts[k], pcts[i]).unwrap();
                worst_true = worst_true.max((vik + vki - 1.0).abs());
                assert!(
                    (mik - vik).abs() <= 5e-13,
                    "cell ({i}, {k}) diverges from its value"
                );
            }
        }
        assert!(worst_true <= 1e-12, "true complement residual {worst_true}");
        assert!(
            worst_parsed <= 2e-12,
            "printed complement residual {worst_parsed}"
        );
        println!(
            "acceptance 9 PASS: {teams} teams, complement residual {worst_true:.3e} (printed {worst_parsed:.3e}), diagonal prints 0.5"
        );
    }
}
