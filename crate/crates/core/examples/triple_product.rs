//! The odd theta function two ways: as the signed sum over half-integers
//! and as `eta^3` times the Jacobi triple product. Also prints the
//! Jacobi forms `phi1 = eta^3 theta` and `phi2 = eta theta`.
//!
//!     cargo run --example triple_product -- 6

use paramodular::jacobi::{phi1, phi2};
use paramodular::series::{eta, theta_product, theta_sum};
use paramodular::{JacobiSeries, TruncationSpec};

fn show(name: &str, x: &JacobiSeries, limit: usize) {
    println!("{name} ({} terms):", x.len());
    for (e, c) in x.iter().take(limit) {
        println!("  {c:>4} * q^({}/24) zeta^({}/4)", e.a, e.b);
    }
}

fn main() -> paramodular::Result<()> {
    let q_order: i64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(6);
    let window = TruncationSpec::jacobi(24 * q_order);

    let sum = theta_sum(window)?;
    let product = theta_product(window)?;
    println!("sum == product through q^{q_order}: {}", sum == product);

    show("eta", &eta(window)?, 6);
    show("theta", &sum, 8);
    show("phi1", &phi1(window)?, 8);
    show("phi2", &phi2(window)?, 8);
    Ok(())
}
