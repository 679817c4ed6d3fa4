use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use super::over_binomial;

/// One row of a coefficient table: the polynomial in `t` multiplying `q^q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub q: usize,
    pub t_poly: String,
    pub at_t1: String,
    #[serde(skip)]
    pub coeffs: Vec<BigInt>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoefficientTable {
    pub m: usize,
    pub n: usize,
    pub rows: Vec<TableRow>,
}

/// `"5+10t+5t^2"` for coefficients `[5, 10, 5]`.
fn t_poly_string(coeffs: &[BigInt]) -> String {
    let mut out = String::new();
    for (k, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let negative = c < &BigInt::zero();
        if negative {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        let abs = if negative { -c } else { c.clone() };
        if k == 0 || !abs.is_one() {
            write!(out, "{abs}").unwrap();
        }
        match k {
            0 => {}
            1 => out.push('t'),
            _ => write!(out, "t^{k}").unwrap(),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Coefficients of `B(m, n)` arranged by powers of `q`, from `q^0` to `q^{mn}`.
pub fn coefficient_table(m: usize, n: usize) -> CoefficientTable {
    let b = over_binomial(m as i64, n as i64);
    let max_t = b.max_t().unwrap_or(0);
    let rows = (0..=m * n)
        .map(|w| {
            let coeffs: Vec<BigInt> = (0..=max_t).map(|k| b.coeff_tq(k, w as i64)).collect();
            let at_t1: BigInt = coeffs.iter().sum();
            let last = coeffs
                .iter()
                .rposition(|c| !c.is_zero())
                .map_or(0, |i| i + 1);
            TableRow {
                q: w,
                t_poly: t_poly_string(&coeffs[..last]),
                at_t1: at_t1.to_string(),
                coeffs: coeffs[..last].to_vec(),
            }
        })
        .collect();
    CoefficientTable { m, n, rows }
}

impl CoefficientTable {
    /// Pretty JSON followed by a newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("table serializes");
        s.push('\n');
        s
    }

    pub fn to_plain(&self) -> String {
        let width = self
            .rows
            .iter()
            .map(|r| r.t_poly.len())
            .max()
            .unwrap_or(0)
            .max(4);
        let mut out = format!("{:>4}  {:<width$}  t=1\n", "q^", "B");
        for r in &self.rows {
            writeln!(out, "{:>4}  {:<width$}  {}", r.q, r.t_poly, r.at_t1).unwrap();
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("q,t_poly,at_t1\n");
        for r in &self.rows {
            writeln!(out, "{},{},{}", r.q, r.t_poly, r.at_t1).unwrap();
        }
        out
    }

    pub fn to_latex(&self) -> String {
        let mut out = String::from(
            "\\begin{tabular}{r|l|r}\n$N$ & coefficient of $q^N$ & $t=1$ \\\\\n\\hline\n",
        );
        for r in &self.rows {
            let tex = r.t_poly.replace("t^", "t^{").replace('+', " + ");
            // close each exponent brace opened above
            let mut fixed = String::new();
            let mut open = false;
            for ch in tex.chars() {
                if open && !ch.is_ascii_digit() {
                    fixed.push('}');
                    open = false;
                }
                fixed.push(ch);
                if ch == '{' {
                    open = true;
                }
            }
            if open {
                fixed.push('}');
            }
            writeln!(out, "{} & ${}$ & {} \\\\", r.q, fixed, r.at_t1).unwrap();
        }
        out.push_str("\\end{tabular}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn t_poly_formatting() {
        let c = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        assert_eq!(t_poly_string(&c(&[5, 10, 5])), "5+10t+5t^2");
        assert_eq!(t_poly_string(&c(&[1, 1])), "1+t");
        assert_eq!(t_poly_string(&c(&[0, 1])), "t");
        assert_eq!(t_poly_string(&c(&[])), "0");
        assert_eq!(t_poly_string(&c(&[2, -1])), "2-t");
    }

    #[test]
    fn table_four_four() {
        let t = coefficient_table(4, 4);
        assert_eq!(t.rows.len(), 17);
        assert_eq!(t.rows[5].t_poly, "5+10t+5t^2");
        assert_eq!(t.rows[10].t_poly, "7+16t+12t^2+4t^3+t^4");
        assert_eq!(t.rows[9].at_t1, "42");
        let total: u64 = t.rows.iter().map(|r| r.at_t1.parse::<u64>().unwrap()).sum();
        assert_eq!(total, 321);
    }

    #[test]
    fn latex_braces() {
        let t = coefficient_table(4, 4);
        let tex = t.to_latex();
        assert!(tex.contains("$7 + 16t + 12t^{2} + 4t^{3} + t^{4}$"));
    }
}
