//! The Borcherds exponents `f(n, l)` of `phi1 / phi2`, checked through
//! the identity `f * theta(z)^2 = theta(2z)^2`.
//!
//!     cargo run --example f_table -- 5

use paramodular::jacobi::{f_table, f_verify_quotient};
use paramodular::TruncationSpec;

fn main() -> paramodular::Result<()> {
    let max_n: i64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(5);
    let table = f_table(max_n)?;
    for n in 0..=max_n {
        let row: Vec<String> = table
            .row(n)?
            .into_iter()
            .map(|(l, f)| format!("{l}:{f}"))
            .collect();
        println!("n={n:<2} {}", row.join(" "));
    }
    let ok = f_verify_quotient(&table, TruncationSpec::jacobi(24 * max_n))?;
    println!("quotient identity holds through q^{max_n}: {ok}");
    Ok(())
}
