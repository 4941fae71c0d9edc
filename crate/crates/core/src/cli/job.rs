//! What `compute` can build, along which route, and at which truncation.

use std::fmt;

use crate::error::{Error, Result};
use crate::jacobi::{f_table, phi1, phi2};
use crate::series::{eta, theta_product, theta_sum, TruncationSpec, Q_UNIT};
use crate::siegel::{
    delta1_cubed, delta1_lift, delta1_product, delta2_lift, delta5_theta_product, delta_half_sum,
    delta_half_theta_decomp,
};

use super::table::{Table, Truncation};

/// The four forms, the cube of `Delta_1`, and the auxiliary objects.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, clap::ValueEnum)]
pub enum Object {
    Delta5,
    Delta2,
    Delta1,
    DeltaHalf,
    Delta1Cubed,
    Eta,
    Theta,
    Phi1,
    Phi2,
    FTable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, clap::ValueEnum)]
pub enum Route {
    Lift,
    Product,
    ThetaSum,
    ThetaDecomp,
    ThetaProductGenus2,
}

impl Object {
    pub fn as_str(&self) -> &'static str {
        match self {
            Object::Delta5 => "delta5",
            Object::Delta2 => "delta2",
            Object::Delta1 => "delta1",
            Object::DeltaHalf => "delta-half",
            Object::Delta1Cubed => "delta1-cubed",
            Object::Eta => "eta",
            Object::Theta => "theta",
            Object::Phi1 => "phi1",
            Object::Phi2 => "phi2",
            Object::FTable => "f-table",
        }
    }

    /// Routes that build this object; the first one is the default.
    pub fn routes(&self) -> &'static [Route] {
        use Route::*;
        match self {
            Object::Delta5 => &[ThetaProductGenus2],
            Object::Delta2 => &[Lift],
            Object::Delta1 | Object::Delta1Cubed => &[Lift, Product],
            Object::DeltaHalf => &[ThetaSum, ThetaDecomp],
            Object::Theta => &[ThetaSum, Product],
            Object::Eta | Object::Phi1 | Object::Phi2 | Object::FTable => &[Product],
        }
    }

    fn is_jacobi(&self) -> bool {
        matches!(
            self,
            Object::Eta | Object::Theta | Object::Phi1 | Object::Phi2
        )
    }
}

impl Route {
    pub fn as_str(&self) -> &'static str {
        match self {
            Route::Lift => "lift",
            Route::Product => "product",
            Route::ThetaSum => "theta-sum",
            Route::ThetaDecomp => "theta-decomp",
            Route::ThetaProductGenus2 => "theta-product-genus2",
        }
    }
}

impl fmt::Display for Object {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A validated request for one table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct JobSpec {
    pub object: Object,
    pub route: Route,
    /// Natural `q`-order, i.e. `tq / 24`.
    pub q_order: i64,
    /// Natural `s`-order; ignored by the one-variable objects.
    pub s_order: i64,
    /// Largest `n` of the exponent table; only read for `f-table`.
    pub max_n: i64,
}

impl JobSpec {
    /// Checks the route against the object and the orders against zero.
    /// `route = None` picks the object's default route.
    pub fn new(
        object: Object,
        route: Option<Route>,
        q_order: i64,
        s_order: i64,
        max_n: i64,
    ) -> std::result::Result<Self, String> {
        let route = route.unwrap_or(object.routes()[0]);
        if !object.routes().contains(&route) {
            let valid: Vec<_> = object.routes().iter().map(Route::as_str).collect();
            return Err(format!(
                "route `{route}` does not build `{object}`; valid: {}",
                valid.join(", ")
            ));
        }
        if q_order < 1 || s_order < 1 {
            return Err(format!(
                "--q-order and --s-order must be at least 1, got {q_order} and {s_order}"
            ));
        }
        if max_n < 0 {
            return Err(format!("--max-n must be non-negative, got {max_n}"));
        }
        Ok(Self {
            object,
            route,
            q_order,
            s_order,
            max_n,
        })
    }

    /// The internal window, in units of 1/24.
    pub fn truncation(&self) -> Truncation {
        match self.object {
            Object::FTable => Truncation {
                tq: self.max_n,
                ts: 0,
            },
            o if o.is_jacobi() => Truncation {
                tq: Q_UNIT * self.q_order,
                ts: 0,
            },
            _ => {
                let t = TruncationSpec::from_orders(self.q_order, self.s_order);
                Truncation { tq: t.tq, ts: t.ts }
            }
        }
    }

    pub fn compute(&self) -> Result<Table> {
        let (form, route) = (self.object.as_str(), self.route.as_str());
        let t = self.truncation();
        let siegel = TruncationSpec::new(t.tq, t.ts);
        let jacobi = TruncationSpec::jacobi(t.tq);
        let table = match (self.object, self.route) {
            (Object::Delta5, _) => Table::from_siegel(form, route, &delta5_theta_product(siegel)?),
            (Object::Delta2, _) => Table::from_siegel(form, route, &delta2_lift(siegel)?),
            (Object::Delta1, Route::Product) => {
                Table::from_siegel(form, route, &delta1_product(siegel)?)
            }
            (Object::Delta1, _) => Table::from_siegel(form, route, &delta1_lift(siegel)?),
            (Object::Delta1Cubed, Route::Product) => {
                let d = delta1_product(siegel)?;
                Table::from_siegel(form, route, &d.mul(&d).mul(&d))
            }
            (Object::Delta1Cubed, _) => Table::from_siegel(form, route, &delta1_cubed(siegel)?),
            (Object::DeltaHalf, Route::ThetaDecomp) => {
                Table::from_siegel(form, route, &delta_half_theta_decomp(siegel)?)
            }
            (Object::DeltaHalf, _) => Table::from_siegel(form, route, &delta_half_sum(siegel)?),
            (Object::Eta, _) => Table::from_jacobi(form, route, &eta(jacobi)?),
            (Object::Theta, Route::Product) => {
                Table::from_jacobi(form, route, &theta_product(jacobi)?)
            }
            (Object::Theta, _) => Table::from_jacobi(form, route, &theta_sum(jacobi)?),
            (Object::Phi1, _) => Table::from_jacobi(form, route, &phi1(jacobi)?),
            (Object::Phi2, _) => Table::from_jacobi(form, route, &phi2(jacobi)?),
            (Object::FTable, _) => {
                let table = f_table(self.max_n)?;
                let mut rows = Vec::new();
                for n in 0..=self.max_n {
                    rows.extend(table.row(n)?.into_iter().map(|(l, f)| (n, l, f)));
                }
                Table::from_integer_grid(form, route, t, rows)
            }
        };
        Ok(table)
    }
}

/// Errors that stem from the request rather than from a failed check.
pub fn is_usage_error(e: &Error) -> bool {
    !matches!(e, Error::NonIntegral { .. } | Error::NonReal(_))
}
