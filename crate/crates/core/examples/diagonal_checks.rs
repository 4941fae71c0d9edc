//! Structural checks for all four forms: vanishing order along the
//! diagonal, the norm range of the support, and the swap symmetry with
//! parameter equal to the level.
//!
//!     cargo run --release --example diagonal_checks

use paramodular::siegel::{
    check_swap_symmetry, diagonal_vanishing_order, norm_classify, FormName,
};
use paramodular::TruncationSpec;

fn main() -> paramodular::Result<()> {
    let window = TruncationSpec::from_orders(6, 18);
    for form in FormName::ALL {
        let d = form.descriptor();
        let x = form.build(window)?;
        let norms = norm_classify(&x)?;
        println!(
            "{form:<10} weight {:<3} level {} terms {:<5} diagonal order {:?} \
             min norm {:<5} swap({}) {}",
            d.weight,
            d.t,
            x.len(),
            diagonal_vanishing_order(&x, 3),
            norms.min_norm,
            d.t,
            check_swap_symmetry(&x, d.t as i64)?,
        );
    }
    Ok(())
}
