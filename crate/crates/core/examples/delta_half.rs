//! The weight one-half form from its theta series and from the
//! decomposition into Jacobi theta functions, plus its norm profile: it
//! is not a cusp form, so terms of norm zero survive.
//!
//!     cargo run --example delta_half -- 6

use paramodular::siegel::{delta_half_sum, delta_half_theta_decomp, norm_classify};
use paramodular::TruncationSpec;

fn main() -> paramodular::Result<()> {
    let order: i64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(6);
    let window = TruncationSpec::from_orders(order, order);
    let sum = delta_half_sum(window)?;
    let decomp = delta_half_theta_decomp(window)?;
    println!("{} terms; routes agree: {}", sum.len(), sum == decomp);

    let norms = norm_classify(&sum)?;
    println!(
        "norm range [{}, {}], attained first at {}",
        norms.min_norm, norms.max_norm, norms.minimizers[0]
    );
    for (e, c) in sum.iter().take(8) {
        println!("  {e}  {c}");
    }
    Ok(())
}
