//! Region scans of the witness family on the plane `a + b + c = p_θ`.

use std::io::Write;

use spa_lab_core::catalog::{solve_case_i, solve_case_ii, WINDOW_TOL};
use spa_lab_core::{classify_family, p_theta, CaseTag, WitnessParams, WitnessType};

use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Region {
    NotBlockPositive,
    PositiveType,
    CopositiveType,
    PptType,
    PptMatrix,
}

impl Region {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::NotBlockPositive => "NotBlockPositive",
            Self::PositiveType => "PositiveType",
            Self::CopositiveType => "CopositiveType",
            Self::PptType => "PPTType",
            Self::PptMatrix => "PPTMatrix",
        }
    }

    pub fn of(p: &WitnessParams) -> Self {
        let f = classify_family(p);
        if !f.is_block_positive {
            Self::NotBlockPositive
        } else if f.is_ppt_matrix {
            Self::PptMatrix
        } else {
            match f.witness_type {
                WitnessType::PositiveType => Self::PositiveType,
                WitnessType::CopositiveType => Self::CopositiveType,
                WitnessType::PptType => Self::PptType,
                WitnessType::NotAWitness => Self::NotBlockPositive,
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ScanRow {
    pub b: f64,
    pub c: f64,
    pub a: f64,
    pub region: Region,
    pub case: Option<CaseTag>,
}

fn in_window(solutions: spa_lab_core::Result<Vec<spa_lab_core::CaseSolution>>) -> bool {
    solutions.is_ok_and(|s| !s.is_empty())
}

/// Within `half_step` of `bc = (1 - a)²`, `2 - p <= a < 1`, to first order.
fn near_case_i_curve(p: f64, a: f64, b: f64, c: f64, half_step: f64) -> bool {
    if a < 2.0 - p - WINDOW_TOL || a >= 1.0 {
        return false;
    }
    let s = 1.0 - a;
    let g = b * c - s * s;
    // on the plane 1 - a = 1 - p + b + c
    let grad = ((c - 2.0 * s).powi(2) + (b - 2.0 * s).powi(2)).sqrt();
    if grad < 1e-15 {
        return g.abs() < 1e-15;
    }
    g.abs() / grad <= half_step
}

fn on_case_ii_curve(p: f64, a: f64, b: f64, c: f64) -> bool {
    (b == 0.0 || c == 0.0) && a >= 1.0 - WINDOW_TOL && a < p
}

/// Grid `b = p·i/r`, `c = p·j/r` with `a = p - b - c >= 0`.
pub fn scan_plane(theta: f64, resolution: usize) -> Result<Vec<ScanRow>> {
    if resolution < 2 {
        return Err(Error::Resolution(resolution));
    }
    let p = p_theta(theta);
    let r = resolution as f64;
    let half_step = 0.5 * p / r;
    let case_i = in_window(solve_case_i(p));
    let case_ii = in_window(solve_case_ii(p));

    let mut rows = Vec::with_capacity((resolution + 1) * (resolution + 2) / 2);
    for i in 0..=resolution {
        for j in 0..=resolution - i {
            let b = p * i as f64 / r;
            let c = p * j as f64 / r;
            let a = p * (resolution - i - j) as f64 / r;
            let params = WitnessParams::new(a, b, c, theta)?;
            let case = if case_i && near_case_i_curve(p, a, b, c, half_step) {
                Some(CaseTag::CaseI)
            } else if case_ii && on_case_ii_curve(p, a, b, c) {
                Some(CaseTag::CaseII)
            } else {
                None
            };
            rows.push(ScanRow { b, c, a, region: Region::of(&params), case });
        }
    }
    Ok(rows)
}

pub const CSV_HEADER: [&str; 5] = ["b", "c", "a", "region", "case"];

pub fn write_csv<W: Write>(rows: &[ScanRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for row in rows {
        w.write_record([
            row.b.to_string(),
            row.c.to_string(),
            row.a.to_string(),
            row.region.as_str().to_owned(),
            row.case.map_or(String::new(), |t| t.as_str().to_owned()),
        ])?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use spa_lab_core::theta_for_p;

    #[test]
    fn row_count_is_triangle() {
        for res in [2, 7, 50] {
            let rows = scan_plane(0.4, res).unwrap();
            assert_eq!(rows.len(), (res + 1) * (res + 2) / 2);
        }
        assert!(matches!(scan_plane(0.4, 1), Err(Error::Resolution(1))));
    }

    #[test]
    fn rows_lie_on_plane() {
        let theta = 0.9;
        let p = p_theta(theta);
        for row in scan_plane(theta, 40).unwrap() {
            assert!((row.a + row.b + row.c - p).abs() <= 1e-12);
            assert!(row.a >= 0.0);
        }
    }

    #[test]
    fn case_ii_marks_axes_only() {
        let theta = theta_for_p(1.8).unwrap();
        let rows = scan_plane(theta, 90).unwrap();
        let marked: Vec<_> = rows.iter().filter(|r| r.case.is_some()).collect();
        assert!(!marked.is_empty());
        for r in marked {
            assert_eq!(r.case, Some(CaseTag::CaseII));
            assert!(r.b == 0.0 || r.c == 0.0);
            assert!(r.a >= 1.0 - 1e-12 && r.a < 1.8);
        }
    }
}
