//! The four forms with divisor the diagonal, their constructions and the
//! checks that compare them.
//!
//! | form        | weight | level `t` | character order | cusp form |
//! |-------------|--------|-----------|-----------------|-----------|
//! | `Delta_5`   | 5      | 1         | 2               | yes       |
//! | `Delta_2`   | 2      | 2         | 4               | yes       |
//! | `Delta_1`   | 1      | 3         | 6               | yes       |
//! | `Delta_1/2` | 1/2    | 4         | 8               | no        |

mod checks;
mod lift;
mod product;
mod theta;

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;

use crate::error::Result;
use crate::series::{SiegelSeries, TruncationSpec};

pub use checks::{
    check_r_antisymmetry, check_swap_symmetry, diagonal_first_moment, diagonal_moment,
    diagonal_vanishing_order, hyperbolic_norm, norm_classify, on_sublattice, restrict_diagonal,
    symmetrize_in_r, NormClass,
};
pub use lift::{delta1_lift, delta2_lift};
pub use product::{delta1_product, delta1_product_with_table, required_f_order, DELTA1_LEADING};
pub use theta::{
    delta5_theta_product, delta_half_sum, delta_half_theta_decomp, even_characteristics,
    theta_constant, Characteristic,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FormName {
    Delta5,
    Delta2,
    Delta1,
    DeltaHalf,
}

impl FormName {
    pub const ALL: [FormName; 4] = [
        FormName::Delta5,
        FormName::Delta2,
        FormName::Delta1,
        FormName::DeltaHalf,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            FormName::Delta5 => "delta5",
            FormName::Delta2 => "delta2",
            FormName::Delta1 => "delta1",
            FormName::DeltaHalf => "delta-half",
        }
    }

    pub fn descriptor(&self) -> FormDescriptor {
        let (t, weight, character_order, is_cusp) = match self {
            FormName::Delta5 => (1, Ratio::from_integer(5), 2, true),
            FormName::Delta2 => (2, Ratio::from_integer(2), 4, true),
            FormName::Delta1 => (3, Ratio::from_integer(1), 6, true),
            FormName::DeltaHalf => (4, Ratio::new(1, 2), 8, false),
        };
        FormDescriptor {
            name: *self,
            t,
            weight,
            character_order,
            is_cusp,
        }
    }

    /// The form through its primary construction.
    pub fn build(&self, trunc: TruncationSpec) -> Result<SiegelSeries> {
        match self {
            FormName::Delta5 => delta5_theta_product(trunc),
            FormName::Delta2 => delta2_lift(trunc),
            FormName::Delta1 => delta1_lift(trunc),
            FormName::DeltaHalf => delta_half_sum(trunc),
        }
    }
}

impl fmt::Display for FormName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FormName {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        FormName::ALL
            .into_iter()
            .find(|f| f.as_str() == s)
            .ok_or_else(|| format!("unknown form `{s}`"))
    }
}

/// One row of the table above.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormDescriptor {
    pub name: FormName,
    /// Polarization type `(1, t)`; also the swap parameter `lambda`.
    pub t: u64,
    pub weight: Ratio<u64>,
    pub character_order: u32,
    pub is_cusp: bool,
}

/// `Delta_1^3`, on `a in 12Z`, `b in 2Z`, `c in 12Z`.
pub fn delta1_cubed(trunc: TruncationSpec) -> Result<SiegelSeries> {
    let d = delta1_lift(trunc)?;
    Ok(d.mul(&d).mul(&d))
}
