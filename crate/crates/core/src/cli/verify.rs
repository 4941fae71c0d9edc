//! Named end-to-end checks run by `paramodular verify`.
//!
//! Every check has a default window sized so that `verify all` stays in the
//! minutes range; `--q-order`, `--s-order`, `--max-n` and `--t-max`
//! override it.

use num_rational::Ratio;
use num_traits::{Signed, Zero};

use crate::arith::{
    coset_index, coset_index_bruteforce, diagonal_coset_count, diagonal_coset_count_bruteforce,
    weight_equation_solutions, BRUTEFORCE_LIMIT,
};
use crate::error::{Error, Result};
use crate::jacobi::{f_table, f_verify_quotient};
use crate::series::{theta_product, theta_sum, Coeff, TruncationSpec, Q_UNIT};
use crate::siegel::{
    check_r_antisymmetry, check_swap_symmetry, delta1_cubed, delta1_lift, delta1_product,
    delta_half_sum, delta_half_theta_decomp, diagonal_first_moment, norm_classify, on_sublattice,
    restrict_diagonal, FormName,
};

/// Optional replacements for the default windows.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Overrides {
    pub q_order: Option<i64>,
    pub s_order: Option<i64>,
    pub max_n: Option<i64>,
    pub t_max: Option<u64>,
}

impl Overrides {
    fn window(&self, default: TruncationSpec) -> TruncationSpec {
        TruncationSpec::new(
            self.q_order.map_or(default.tq, |q| Q_UNIT * q),
            self.s_order.map_or(default.ts, |s| Q_UNIT * s),
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub pass: bool,
    pub detail: String,
}

impl Outcome {
    pub fn new(pass: bool, detail: impl Into<String>) -> Self {
        Self {
            pass,
            detail: detail.into(),
        }
    }
}

pub struct Check {
    pub name: &'static str,
    pub about: &'static str,
    run: fn(&Overrides) -> Result<Outcome>,
}

impl Check {
    pub const fn new(
        name: &'static str,
        about: &'static str,
        run: fn(&Overrides) -> Result<Outcome>,
    ) -> Self {
        Self { name, about, run }
    }

    pub fn run(&self, o: &Overrides) -> Result<Outcome> {
        (self.run)(o)
    }
}

pub const CHECKS: &[Check] = &[
    Check {
        name: "triple-product",
        about: "theta as a sum equals theta as a triple product (default tq = 1200)",
        run: triple_product,
    },
    Check {
        name: "f-table",
        about: "Borcherds exponents reproduce the theta quotient; rows n = 0, 1 (default max-n 10)",
        run: f_table_check,
    },
    Check {
        name: "delta1-lift-vs-product",
        about: "Delta_1 lift and Borcherds product agree exactly (default a <= 144, c <= 432)",
        run: delta1_routes,
    },
    Check {
        name: "delta-half-routes",
        about: "Delta_1/2 double sum equals its theta decomposition (default a, c <= 300)",
        run: delta_half_routes,
    },
    Check {
        name: "diagonal-vanishing",
        about: "each form vanishes on tau_2 = 0 to order exactly one",
        run: diagonal_vanishing,
    },
    Check {
        name: "cusp-classification",
        about: "minimal hyperbolic norms: 1/12, 1/4, > 0 and identically 0",
        run: cusp_classification,
    },
    Check {
        name: "coset-index",
        about: "index formula equals the brute-force count (default t <= 30)",
        run: coset_index_check,
    },
    Check {
        name: "diagonal-count",
        about: "diagonal coset formula equals the brute-force count (default t <= 30)",
        run: diagonal_count_check,
    },
    Check {
        name: "weight-equation",
        about: "the weight equation has exactly the four solutions of the form table",
        run: weight_equation,
    },
    Check {
        name: "symmetry",
        about: "swap symmetry with lambda = t and r -> 1/r antisymmetry for all four forms",
        run: symmetry,
    },
    Check {
        name: "delta1-cubed-lattice",
        about: "Delta_1^3 lives on (12Z, 2Z, 12Z), is cusp-like and vanishes to order >= 2",
        run: cubed_lattice,
    },
];

pub fn find(name: &str) -> Option<&'static Check> {
    CHECKS.iter().find(|c| c.name == name)
}

/// Default window per form for the checks that sweep all four.
fn form_window(form: FormName) -> TruncationSpec {
    match form {
        FormName::Delta5 => TruncationSpec::new(144, 144),
        FormName::DeltaHalf => TruncationSpec::new(300, 300),
        FormName::Delta1 | FormName::Delta2 => TruncationSpec::new(144, 432),
    }
}

fn sweep(
    o: &Overrides,
    mut per_form: impl FnMut(FormName, TruncationSpec) -> Result<(bool, String)>,
) -> Result<Outcome> {
    let mut pass = true;
    let mut parts = Vec::new();
    for form in FormName::ALL {
        let (ok, what) = per_form(form, o.window(form_window(form)))?;
        pass &= ok;
        parts.push(format!("{form}: {what}"));
    }
    Ok(Outcome::new(pass, parts.join("; ")))
}

fn triple_product(o: &Overrides) -> Result<Outcome> {
    let t = TruncationSpec::jacobi(o.window(TruncationSpec::jacobi(1200)).tq);
    let sum = theta_sum(t)?;
    let prod = theta_product(t)?;
    Ok(Outcome::new(
        sum == prod,
        format!("tq={} terms={}", t.tq, sum.len()),
    ))
}

fn f_table_check(o: &Overrides) -> Result<Outcome> {
    let max_n = o.max_n.unwrap_or(10);
    let table = f_table(max_n)?;
    let quotient = f_verify_quotient(&table, TruncationSpec::jacobi(Q_UNIT * max_n))?;
    let row0 = table.row(0)? == [(-1, 1), (0, 2), (1, 1)];
    let row1 = max_n < 1
        || table.row(1)?
            == [
                (-3, -2),
                (-2, -2),
                (-1, 2),
                (0, 4),
                (1, 2),
                (2, -2),
                (3, -2),
            ];
    Ok(Outcome::new(
        quotient && row0 && row1,
        format!("max_n={max_n} quotient={quotient} row0={row0} row1={row1}"),
    ))
}

fn delta1_routes(o: &Overrides) -> Result<Outcome> {
    let t = o.window(TruncationSpec::new(144, 432));
    let lift = delta1_lift(t)?;
    let prod = delta1_product(t)?;
    let differing = lift.sub(&prod).len();
    Ok(Outcome::new(
        differing == 0,
        format!(
            "tq={} ts={} terms={} differing={differing}",
            t.tq,
            t.ts,
            lift.len()
        ),
    ))
}

fn delta_half_routes(o: &Overrides) -> Result<Outcome> {
    let t = o.window(TruncationSpec::new(300, 300));
    let sum = delta_half_sum(t)?;
    let decomp = delta_half_theta_decomp(t)?;
    let differing = sum.sub(&decomp).len();
    Ok(Outcome::new(
        differing == 0,
        format!(
            "tq={} ts={} terms={} differing={differing}",
            t.tq,
            t.ts,
            sum.len()
        ),
    ))
}

fn diagonal_vanishing(o: &Overrides) -> Result<Outcome> {
    sweep(o, |form, t| {
        let x = form.build(t)?;
        let marginal_zero = restrict_diagonal(&x).values().all(Coeff::is_zero);
        let moment_nonzero = diagonal_first_moment(&x).values().any(|v| !v.is_zero());
        Ok((
            marginal_zero && moment_nonzero,
            format!("marginal zero={marginal_zero} first moment nonzero={moment_nonzero}"),
        ))
    })
}

fn cusp_classification(o: &Overrides) -> Result<Outcome> {
    sweep(o, |form, t| {
        let class = norm_classify(&form.build(t)?)?;
        let ok = match form {
            FormName::Delta1 => class.min_norm == Ratio::new(1.into(), 12.into()),
            FormName::Delta2 => class.min_norm == Ratio::new(1.into(), 4.into()),
            FormName::Delta5 => class.min_norm.is_positive(),
            FormName::DeltaHalf => class.is_singular(),
        };
        Ok((ok, format!("min norm {}", class.min_norm)))
    })
}

fn compare_counts(
    o: &Overrides,
    formula: fn(u64) -> u64,
    brute: fn(u64) -> Result<u64>,
) -> Result<Outcome> {
    let t_max = o.t_max.unwrap_or(30);
    if t_max > BRUTEFORCE_LIMIT {
        return Err(Error::GuardExceeded {
            value: t_max,
            limit: BRUTEFORCE_LIMIT,
        });
    }
    for t in 1..=t_max {
        let (f, b) = (formula(t), brute(t)?);
        if f != b {
            return Ok(Outcome::new(
                false,
                format!("t={t} formula={f} bruteforce={b}"),
            ));
        }
    }
    Ok(Outcome::new(true, format!("t<={t_max}")))
}

fn coset_index_check(o: &Overrides) -> Result<Outcome> {
    compare_counts(o, coset_index, coset_index_bruteforce)
}

fn diagonal_count_check(o: &Overrides) -> Result<Outcome> {
    compare_counts(o, diagonal_coset_count, diagonal_coset_count_bruteforce)
}

fn weight_equation(_: &Overrides) -> Result<Outcome> {
    let got = weight_equation_solutions(1);
    let expected = vec![
        (1, Ratio::from_integer(5)),
        (2, Ratio::from_integer(2)),
        (3, Ratio::from_integer(1)),
        (4, Ratio::new(1, 2)),
    ];
    let shown: Vec<_> = got.iter().map(|(t, k)| format!("({t},{k})")).collect();
    Ok(Outcome::new(got == expected, shown.join(" ")))
}

fn symmetry(o: &Overrides) -> Result<Outcome> {
    sweep(o, |form, t| {
        let x = form.build(t)?;
        let lambda = form.descriptor().t as i64;
        let swap = check_swap_symmetry(&x, lambda)?;
        let anti = check_r_antisymmetry(&x);
        Ok((
            swap && anti,
            format!("swap(lambda={lambda})={swap} antisymmetric={anti}"),
        ))
    })
}

fn cubed_lattice(o: &Overrides) -> Result<Outcome> {
    let t = o.window(TruncationSpec::new(144, 432));
    let cube = delta1_cubed(t)?;
    let lattice = on_sublattice(&cube, 12, 2, 12);
    let cusp = norm_classify(&cube)?.is_cusp_like();
    let marginals = restrict_diagonal(&cube).values().all(Coeff::is_zero)
        && diagonal_first_moment(&cube).values().all(Coeff::is_zero);
    Ok(Outcome::new(
        lattice && cusp && marginals,
        format!(
            "terms={} lattice={lattice} cusp={cusp} marginals zero={marginals}",
            cube.len()
        ),
    ))
}
