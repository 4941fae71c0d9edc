//! `Delta_5` as the product of the ten even genus-2 theta constants,
//! with its symmetries under the swap of `tau_1, tau_3` and under
//! `z -> -z`.
//!
//!     cargo run --example delta5 -- 4

use paramodular::siegel::{
    check_r_antisymmetry, check_swap_symmetry, delta5_theta_product, even_characteristics,
    norm_classify,
};
use paramodular::TruncationSpec;

fn main() -> paramodular::Result<()> {
    let order: i64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    let window = TruncationSpec::from_orders(order, order);
    println!("{} even characteristics", even_characteristics().len());

    let d5 = delta5_theta_product(window)?;
    println!("{} terms", d5.len());
    println!("swap symmetric: {}", check_swap_symmetry(&d5, 1)?);
    println!("odd in z: {}", check_r_antisymmetry(&d5));
    println!("minimal norm: {}", norm_classify(&d5)?.min_norm);
    for (e, c) in d5.iter().take(6) {
        println!("  {e}  {c}");
    }
    Ok(())
}
