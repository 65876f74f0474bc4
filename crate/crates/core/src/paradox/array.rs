//! Multiplicative Kochen-Specker arrays: grids of ±1-valued observables in
//! which every row and every column is a commuting set with a fixed product.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::pauli::{PauliLetter, PauliString, Sign};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorArray {
    rows: usize,
    cols: usize,
    cells: Vec<PauliString>,
    pub declared_row_products: Vec<Sign>,
    pub declared_col_products: Vec<Sign>,
}

impl OperatorArray {
    pub fn new(
        rows: usize,
        cols: usize,
        cells: Vec<PauliString>,
        declared_row_products: Vec<Sign>,
        declared_col_products: Vec<Sign>,
    ) -> Result<Self> {
        if rows == 0 || cols == 0 || cells.len() != rows * cols {
            return Err(Error::MalformedArray(format!("{} cells for a {rows}×{cols} grid", cells.len())));
        }
        if declared_row_products.len() != rows || declared_col_products.len() != cols {
            return Err(Error::MalformedArray("declared product count does not match the grid".into()));
        }
        let n = cells[0].n();
        if let Some(bad) = cells.iter().find(|c| c.n() != n) {
            return Err(Error::DimensionMismatch { left: n, right: bad.n() });
        }
        Ok(Self { rows, cols, cells, declared_row_products, declared_col_products })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// 0-based cell access.
    pub fn cell(&self, row: usize, col: usize) -> &PauliString {
        &self.cells[row * self.cols + col]
    }

    pub fn row(&self, r: usize) -> Vec<PauliString> {
        (0..self.cols).map(|c| *self.cell(r, c)).collect()
    }

    pub fn col(&self, c: usize) -> Vec<PauliString> {
        (0..self.rows).map(|r| *self.cell(r, c)).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LineCheck {
    /// 1-based row or column number.
    pub index: usize,
    pub commuting: bool,
    /// `Some(s)` when the ordered product is `s · 1`.
    pub product: Option<Sign>,
    pub declared: Sign,
}

impl LineCheck {
    pub fn matches_declared(&self) -> bool {
        self.commuting && self.product == Some(self.declared)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ArrayReport {
    pub rows: Vec<LineCheck>,
    pub cols: Vec<LineCheck>,
    /// Product of all row products differs from product of all column
    /// products, so no ±1 assignment to the cells can satisfy every line.
    pub impossible: bool,
}

impl ArrayReport {
    pub fn all_lines_match(&self) -> bool {
        self.rows.iter().chain(&self.cols).all(LineCheck::matches_declared)
    }
}

fn check_line(index: usize, ops: &[PauliString], declared: Sign) -> LineCheck {
    let commuting = ops
        .iter()
        .enumerate()
        .all(|(i, a)| ops[..i].iter().all(|b| a.commutes_unchecked(b)));
    let product = ops[1..].iter().fold(ops[0], |acc, o| acc.mul_unchecked(o));
    let product = match (product.is_scalar(), product.phase_exp()) {
        (true, 0) => Some(Sign::Plus),
        (true, 2) => Some(Sign::Minus),
        _ => None,
    };
    LineCheck { index: index + 1, commuting, product, declared }
}

pub fn check_array(arr: &OperatorArray) -> Result<ArrayReport> {
    if let Some(bad) = arr.cells.iter().find(|c| !c.is_hermitian()) {
        return Err(Error::NotHermitian(bad.to_string()));
    }
    let rows: Vec<_> =
        (0..arr.rows).map(|r| check_line(r, &arr.row(r), arr.declared_row_products[r])).collect();
    let cols: Vec<_> =
        (0..arr.cols).map(|c| check_line(c, &arr.col(c), arr.declared_col_products[c])).collect();
    let total = |lines: &[LineCheck]| -> Option<Sign> {
        lines.iter().map(|l| l.product).collect::<Option<Vec<_>>>().map(Sign::product)
    };
    let impossible = match (total(&rows), total(&cols)) {
        (Some(r), Some(c)) => r != c,
        _ => false,
    };
    Ok(ArrayReport { rows, cols, impossible })
}

/// The 6×13 array for the five-qubit code. Columns 1–5 hold `σ_kz`,
/// columns 6–10 hold `σ_kx` (at column `5 + k`), columns 11 and 12 are
/// identity spacers and column 13 holds each row's product operator.
pub fn canonical_array() -> Result<OperatorArray> {
    let n = 5;
    let id = PauliString::identity(n)?;
    let mut cells = vec![id; 6 * 13];
    let single = |site: usize, letter| PauliString::single(n, site, letter);
    for (site, cell) in cells.iter_mut().take(n).enumerate() {
        *cell = single(site, PauliLetter::Z)?;
    }
    cells[12] = "ZZZZZ".parse()?;
    // row r (2..=6) is centred on qubit c = r - 1: x on c-1, z on c, x on c+1
    for row in 1..6 {
        let c = row - 1;
        let (left, right) = ((c + n - 1) % n, (c + 1) % n);
        cells[row * 13 + c] = single(c, PauliLetter::Z)?;
        cells[row * 13 + 5 + left] = single(left, PauliLetter::X)?;
        cells[row * 13 + 5 + right] = single(right, PauliLetter::X)?;
        cells[row * 13 + 12] =
            PauliString::from_sites(n, &[(left, PauliLetter::X), (c, PauliLetter::Z), (right, PauliLetter::X)])?;
    }
    let mut col_products = vec![Sign::Plus; 13];
    col_products[12] = Sign::Minus;
    OperatorArray::new(6, 13, cells, vec![Sign::Plus; 6], col_products)
}

/// The two-qubit 3×3 square with rows `XI IX XX`, `IZ ZI ZZ`, `XZ ZX YY`;
/// its last column multiplies to `-1`.
pub fn two_qubit_square() -> Result<OperatorArray> {
    let cells = ["XI", "IX", "XX", "IZ", "ZI", "ZZ", "XZ", "ZX", "YY"]
        .iter()
        .map(|s| s.parse())
        .collect::<Result<Vec<PauliString>>>()?;
    OperatorArray::new(3, 3, cells, vec![Sign::Plus; 3], vec![Sign::Plus, Sign::Plus, Sign::Minus])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_cells() {
        let arr = canonical_array().unwrap();
        assert_eq!(arr.cell(1, 12).to_string(), "+ZXIIX");
        assert_eq!(arr.cell(1, 12).sigma_label(), "σ1z σ2x σ5x");
        assert!(arr.cell(0, 6).is_scalar());
        assert_eq!(arr.cell(5, 12).sigma_label(), "σ1x σ4x σ5z");
        assert_eq!(arr.cell(2, 1).sigma_label(), "σ2z");
        assert_eq!(arr.cell(2, 5).sigma_label(), "σ1x");
        assert_eq!(arr.cell(2, 7).sigma_label(), "σ3x");
        assert_eq!(arr.cell(2, 12).sigma_label(), "σ1x σ2z σ3x");
    }

    #[test]
    fn square_is_impossible() {
        let r = check_array(&two_qubit_square().unwrap()).unwrap();
        assert!(r.all_lines_match());
        assert!(r.impossible);
    }

    #[test]
    fn single_identity_cell_is_fine() {
        let arr = OperatorArray::new(1, 1, vec!["II".parse().unwrap()], vec![Sign::Plus], vec![Sign::Plus]).unwrap();
        let r = check_array(&arr).unwrap();
        assert!(!r.impossible);
        assert!(r.all_lines_match());
    }

    #[test]
    fn malformed_and_non_hermitian_rejected() {
        assert!(OperatorArray::new(2, 2, vec!["X".parse().unwrap()], vec![Sign::Plus; 2], vec![Sign::Plus; 2]).is_err());
        let arr = OperatorArray::new(1, 1, vec!["iX".parse().unwrap()], vec![Sign::Plus], vec![Sign::Plus]).unwrap();
        assert!(matches!(check_array(&arr), Err(Error::NotHermitian(_))));
    }
}
