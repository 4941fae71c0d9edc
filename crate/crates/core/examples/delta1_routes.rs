//! `Delta_1` as an additive lift and as a Borcherds product. The two
//! constructions share no code beyond the series ring, so agreement on a
//! window is a strong consistency check.
//!
//!     cargo run --release --example delta1_routes -- 4 12

use std::time::Instant;

use paramodular::siegel::{delta1_lift, delta1_product, required_f_order};
use paramodular::TruncationSpec;

fn main() -> paramodular::Result<()> {
    let mut args = std::env::args().skip(1).map(|s| s.parse::<i64>().ok());
    let q_order = args.next().flatten().unwrap_or(4);
    let s_order = args.next().flatten().unwrap_or(3 * q_order);
    let window = TruncationSpec::from_orders(q_order, s_order);

    let clock = Instant::now();
    let lift = delta1_lift(window)?;
    println!("lift: {} terms in {:.2?}", lift.len(), clock.elapsed());

    let clock = Instant::now();
    let product = delta1_product(window)?;
    println!(
        "product: {} terms in {:.2?} (f table through n = {})",
        product.len(),
        clock.elapsed(),
        required_f_order(window)
    );

    println!("identical: {}", lift == product);
    println!("leading terms (a/24, b/4, c/24):");
    for (e, c) in lift.iter().take(10) {
        println!("  {e}  {c}");
    }
    Ok(())
}
