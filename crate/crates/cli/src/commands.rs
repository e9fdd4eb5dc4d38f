use crate::render::{Cell, Table};
use crate::CliError;
use tricomi_core::airfoil::{
    gamma_profile, j_accelerated_detailed, j_pv_oracle, j_series_detailed, profile_normalization,
    sigma, AirfoilQuery, SigmaMethod,
};
use tricomi_core::quad::QuadratureResult;
use tricomi_core::tricomi::{
    asymptotic_integral, error_table, invert_erfc_numeric, oracle_direct, oracle_transformed,
    CoefficientMethod,
};

pub const DEFAULT_TABLE1_M: [u64; 5] = [100, 1_000, 10_000, 100_000, 1_000_000];
pub const DEFAULT_TABLE2_M: [u64; 3] = [10_000, 100_000, 1_000_000];
pub const DEFAULT_TABLE2_K: [usize; 4] = [0, 1, 2, 3];
pub const DEFAULT_ORDER: usize = 3;

/// A rendered-ready table and whether every computation behind it converged.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub table: Table,
    pub converged: bool,
}

const NOT_CONVERGED_NOTE: &str = "Cells marked `nc` did not reach the requested tolerance.";

fn finish(mut table: Table, converged: bool) -> Report {
    if !converged {
        table.notes.push(NOT_CONVERGED_NOTE.into());
    }
    Report { table, converged }
}

fn quad_cell(r: &QuadratureResult) -> Cell {
    Cell::Number(r.value)
}

fn check_m(m_list: &[u64]) -> Result<(), CliError> {
    if m_list.is_empty() {
        return Err(CliError::Usage("need at least one m".into()));
    }
    match m_list.iter().find(|&&m| m < 2) {
        Some(m) => Err(CliError::Usage(format!("expansion columns need m ≥ 2, got {m}"))),
        None => Ok(()),
    }
}

/// Oracle and k = 3 expansion values of I_{1,m} and I_{2,m}.
pub fn table1(m_list: &[u64], tol: f64) -> Result<Report, CliError> {
    check_m(m_list)?;
    let mut converged = true;
    let mut rows = Vec::new();
    let mut flagged = Vec::new();
    for &m in m_list {
        let mut row = vec![Cell::Int(m)];
        for n in 1..=2 {
            let o = oracle_direct(n, m, tol)?;
            if !o.converged {
                converged = false;
                flagged.push(format!("m={m} I{n} oracle: nc"));
            }
            row.push(quad_cell(&o));
            row.push(Cell::Number(asymptotic_integral(n, m, DEFAULT_ORDER)?));
        }
        rows.push(row);
    }
    let header = ["m", "I1_oracle", "I1_asym", "I2_oracle", "I2_asym"];
    let table = Table { header: header.map(String::from).to_vec(), rows, notes: flagged };
    Ok(finish(table, converged))
}

/// Relative error of the I_{1,m} expansion truncated at each k.
///
/// A trailing row repeats k = 3 with the closed-form third coefficient in
/// place of the moment-derived one.
pub fn table2(m_list: &[u64], k_list: &[usize], tol: f64) -> Result<Report, CliError> {
    check_m(m_list)?;
    if k_list.is_empty() {
        return Err(CliError::Usage("need at least one k".into()));
    }
    if let Some(k) = k_list.iter().find(|&&k| k > DEFAULT_ORDER) {
        return Err(CliError::Usage(format!("truncation index must be ≤ 3, got {k}")));
    }
    let main = error_table(1, m_list, k_list, CoefficientMethod::MomentBased, tol)?;
    let mut rows: Vec<Vec<Cell>> = main
        .k_list
        .iter()
        .zip(&main.rel_err)
        .map(|(&k, errs)| {
            std::iter::once(Cell::Int(k as u64)).chain(errs.iter().map(|&e| Cell::Number(e))).collect()
        })
        .collect();
    let mut notes = Vec::new();
    if k_list.contains(&3) {
        let variant = error_table(1, m_list, &[3], CoefficientMethod::ClosedForm, tol)?;
        let label = Cell::Text("3 (closed-form C1)".into());
        rows.push(std::iter::once(label).chain(variant.rel_err[0].iter().map(|&e| Cell::Number(e))).collect());
        notes.push(
            "Row `3 (closed-form C1)` uses the closed-form third coefficient of the n = 1 \
             expansion; the k rows above use the coefficient derived from the log-moments."
                .into(),
        );
    }
    let header = std::iter::once("k".to_string()).chain(m_list.iter().map(|m| format!("m={m}"))).collect();
    let converged = main.all_converged();
    Ok(finish(Table { header, rows, notes }, converged))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IMethod {
    Oracle,
    Transformed,
    Asymptotic,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JMethod {
    Series,
    Accelerated,
    Pv,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SigmaChoice {
    Closed,
    Direct,
    All,
}

/// One `eval` subject with its parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EvalRequest {
    I { n: u32, m: u64, k: usize, method: IMethod },
    J { n: u32, a: f64, mu: f64, method: JMethod },
    Invert { y: f64 },
    Sigma { m: u32, mu: f64, method: SigmaChoice },
    Profile { n: u32, x: f64 },
}

fn row(method: &str, value: f64, info: String) -> Vec<Cell> {
    vec![Cell::Text(method.into()), Cell::Number(value), Cell::Text(info)]
}

fn quad_row(method: &str, r: &QuadratureResult) -> Vec<Cell> {
    let mut info = format!("evals={}", r.n_evals);
    if !r.converged {
        info += " nc";
    }
    row(method, r.value, info)
}

/// Evaluates a single quantity by the requested route(s). Rows are tagged
/// with the route so that outputs can be compared.
pub fn eval(request: EvalRequest, tol: f64) -> Result<Report, CliError> {
    let mut rows = Vec::new();
    let mut converged = true;
    let mut notes = Vec::new();
    match request {
        EvalRequest::I { n, m, k, method } => {
            if n > 2 {
                return Err(CliError::Usage(format!("I_(n,m) is provided for n ≤ 2, got {n}")));
            }
            if matches!(method, IMethod::Oracle | IMethod::All) {
                let r = oracle_direct(n, m, tol)?;
                converged &= r.converged;
                rows.push(quad_row("oracle", &r));
            }
            if matches!(method, IMethod::Transformed | IMethod::All) {
                let r = oracle_transformed(n, m, tol)?;
                converged &= r.converged;
                rows.push(quad_row("transformed", &r));
            }
            if matches!(method, IMethod::Asymptotic | IMethod::All) {
                if m < 2 && method == IMethod::All {
                    notes.push("The expansion needs m ≥ 2; asym row omitted.".into());
                } else {
                    rows.push(row("asym", asymptotic_integral(n, m, k)?, format!("k={k}")));
                }
            }
        }
        EvalRequest::J { n, a, mu, method } => {
            let q = AirfoilQuery::new(n, a, mu)?;
            let series_row = |name: &str, s: tricomi_core::airfoil::JSeries| {
                let mut info = format!("terms={}", s.sum.terms);
                if s.sum.extrapolated {
                    info += " extrapolated";
                }
                if !s.sum.converged {
                    info += " nc";
                }
                (row(name, s.value, info), s.sum.converged)
            };
            if matches!(method, JMethod::Series | JMethod::All) {
                let (r, ok) = series_row("series", j_series_detailed(&q, tol)?);
                converged &= ok;
                rows.push(r);
            }
            if matches!(method, JMethod::Accelerated | JMethod::All) {
                let (r, ok) = series_row("accelerated", j_accelerated_detailed(&q, tol)?);
                converged &= ok;
                rows.push(r);
            }
            if matches!(method, JMethod::Pv | JMethod::All) {
                let r = j_pv_oracle(&q, tol)?;
                converged &= r.converged;
                rows.push(quad_row("pv", &r));
            }
        }
        EvalRequest::Invert { y } => {
            rows.push(row("numeric", invert_erfc_numeric(y)?, String::new()));
        }
        EvalRequest::Sigma { m, mu, method } => {
            if matches!(method, SigmaChoice::Closed | SigmaChoice::All) {
                rows.push(row("closed", sigma(m, mu, SigmaMethod::ClosedForm)?, String::new()));
            }
            if matches!(method, SigmaChoice::Direct | SigmaChoice::All) {
                rows.push(row("direct", sigma(m, mu, SigmaMethod::DirectSum)?, String::new()));
            }
        }
        EvalRequest::Profile { n, x } => {
            rows.push(row("P_n", gamma_profile(n, x)?, String::new()));
            if let Ok(c) = profile_normalization(n) {
                notes.push(format!("Quoted closed-form profile for this n equals {} × P_n.", (c * 1e12).round() / 1e12));
            }
        }
    }
    let header = ["method", "value", "info"].map(String::from).to_vec();
    Ok(finish(Table { header, rows, notes }, converged))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::render::mantissa_exponent;

    fn number(c: &Cell) -> f64 {
        match c {
            Cell::Number(v) => *v,
            other => panic!("expected a number, got {other:?}"),
        }
    }

    #[test]
    fn table1_row_1000() {
        let r = table1(&[1_000], 1e-12).unwrap();
        assert!(r.converged);
        let cells: Vec<String> = r.table.rows[0][1..].iter().map(|c| mantissa_exponent(number(c), 7)).collect();
        assert_eq!(cells, ["4.058838(-3)", "4.060226(-3)", "9.413132(-3)", "9.414250(-3)"]);
    }

    #[test]
    fn table1_rejects_small_m() {
        assert_eq!(table1(&[1], 1e-12).unwrap_err().exit_code(), 2);
        assert_eq!(table1(&[], 1e-12).unwrap_err().exit_code(), 2);
    }

    #[test]
    fn table2_cells() {
        let r = table2(&DEFAULT_TABLE2_M, &DEFAULT_TABLE2_K, 1e-12).unwrap();
        assert_eq!(r.table.rows.len(), 5);
        assert_eq!(r.table.header, ["k", "m=10000", "m=100000", "m=1000000"]);
        assert_eq!(mantissa_exponent(number(&r.table.rows[1][2]), 4), "3.686(-3)");
        assert_eq!(mantissa_exponent(number(&r.table.rows[0][3]), 4), "8.094(-2)");
        assert_eq!(r.table.rows[4][0], Cell::Text("3 (closed-form C1)".into()));
        assert!(table2(&[10_000], &[4], 1e-12).is_err());
    }

    #[test]
    fn table2_leading_term_only() {
        let r = table2(&[10_000], &[0], 1e-12).unwrap();
        assert_eq!(r.table.rows.len(), 1);
        let o = oracle_direct(1, 10_000, 1e-12).unwrap().value;
        let lead = asymptotic_integral(1, 10_000, 0).unwrap();
        assert!((number(&r.table.rows[0][1]) - (lead / o - 1.0).abs()).abs() < 1e-15);
    }

    #[test]
    fn eval_routes() {
        let j = eval(EvalRequest::J { n: 0, a: 0.5, mu: 0.5, method: JMethod::All }, 1e-12).unwrap();
        assert_eq!(j.table.rows.len(), 3);
        for r in &j.table.rows {
            assert!((number(&r[1]) - std::f64::consts::PI).abs() < 1e-10);
        }
        let i = eval(EvalRequest::I { n: 0, m: 99, k: 3, method: IMethod::All }, 1e-12).unwrap();
        for r in &i.table.rows {
            assert!((number(&r[1]) - tricomi_core::specfun::SQRT_PI / 100.0).abs() < 1e-15);
        }
        let inv = eval(EvalRequest::Invert { y: 1.0 }, 1e-12).unwrap();
        assert_eq!(number(&inv.table.rows[0][1]), 0.0);
    }

    #[test]
    fn eval_errors_map_to_exit_codes() {
        let bad = eval(EvalRequest::J { n: 0, a: 1.5, mu: 0.5, method: JMethod::All }, 1e-12);
        assert_eq!(bad.unwrap_err().exit_code(), 2);
        let bad = eval(EvalRequest::Invert { y: 2.0 }, 1e-12);
        assert_eq!(bad.unwrap_err().exit_code(), 2);
    }
}
