//! Bruce-Roberts numbers of a family of plane cases, against the closed forms
//! `4m^2 + 2m` and `3m^2 + 2m + 1`.

use saito::cli::m_family_table;
use std::time::Instant;

fn main() {
    let max = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(10);
    let start = Instant::now();
    let table = m_family_table(1, max, None).expect("hypotheses hold");
    println!("{:>4} {:>8} {:>8} {:>8} {:>4}", "m", "mu_BR", "tau_BR", "ratio", "r_f");
    for row in &table.rows {
        let m = u64::from(row.m);
        let fits = row.mu_br.finite() == Some(4 * m * m + 2 * m) && row.tau_br.finite() == Some(3 * m * m + 2 * m + 1);
        println!(
            "{:>4} {:>8} {:>8} {:>8} {:>4} {}",
            row.m,
            row.mu_br.to_string(),
            row.tau_br.to_string(),
            row.ratio.to_string(),
            row.rf.to_string(),
            if fits { "" } else { "  closed form differs" }
        );
    }
    println!("{} rows in {:?}", table.rows.len(), start.elapsed());
}
