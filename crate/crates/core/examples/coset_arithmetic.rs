//! Coset indices and diagonal coset counts for small levels, each next to
//! its brute-force enumeration, and the solutions of the weight equation.
//!
//!     cargo run --example coset_arithmetic -- 12

use paramodular::arith::{
    coset_index, coset_index_bruteforce, diagonal_coset_count, diagonal_coset_count_bruteforce,
    weight_equation_solutions,
};

fn main() -> paramodular::Result<()> {
    let t_max: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(12);
    println!("{:>3} {:>8} {:>8} {:>6} {:>6}", "t", "index", "brute", "diag", "brute");
    for t in 1..=t_max {
        println!(
            "{t:>3} {:>8} {:>8} {:>6} {:>6}",
            coset_index(t),
            coset_index_bruteforce(t)?,
            diagonal_coset_count(t),
            diagonal_coset_count_bruteforce(t)?,
        );
    }
    for m in 1..=2 {
        let sols: Vec<String> = weight_equation_solutions(m)
            .into_iter()
            .map(|(t, k)| format!("(t={t}, k={k})"))
            .collect();
        println!("multiplicity {m}: {}", sols.join(" "));
    }
    Ok(())
}
