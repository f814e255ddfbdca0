use std::fmt;

use super::scalar::{Scalar, ThetaMode};
use crate::error::{Error, Result};

/// Default largest matrix dimension accepted by symbolic characteristic
/// polynomial computations.
pub const DEFAULT_SYMBOLIC_CAP: usize = 24;

/// Dense row-major matrix over the exact scalar field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    mode: ThetaMode,
    data: Vec<Scalar>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize, mode: &ThetaMode) -> Self {
        ExactMatrix {
            rows,
            cols,
            mode: mode.clone(),
            data: vec![mode.zero(); rows * cols],
        }
    }

    pub fn identity(n: usize, mode: &ThetaMode) -> Self {
        let mut m = Self::zeros(n, n, mode);
        for i in 0..n {
            m.data[i * n + i] = mode.one();
        }
        m
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        mode: &ThetaMode,
        mut entry: impl FnMut(usize, usize) -> Scalar,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(entry(r, c));
            }
        }
        ExactMatrix {
            rows,
            cols,
            mode: mode.clone(),
            data,
        }
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>, mode: &ThetaMode) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        let data: Vec<Scalar> = rows.into_iter().flatten().collect();
        if let Some(bad) = data.iter().find(|x| !mode.matches(x)) {
            return Err(Error::ModeMismatch(format!("entry {bad} does not match mode {mode}")));
        }
        Ok(ExactMatrix {
            rows: r,
            cols: c,
            mode: mode.clone(),
            data,
        })
    }

    /// Build from small integers.
    pub fn from_ints(rows: &[&[i64]], mode: &ThetaMode) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&x| mode.int(x)).collect())
                .collect(),
            mode,
        )
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vec<Scalar>], nrows: usize, mode: &ThetaMode) -> Self {
        Self::from_fn(nrows, cols.len(), mode, |r, c| cols[c][r].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn mode(&self) -> &ThetaMode {
        &self.mode
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn add_to(&mut self, r: usize, c: usize, v: &Scalar) {
        self.data[r * self.cols + c] += v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, &self.mode, |r, c| self.get(c, r).clone())
    }

    pub fn map(&self, mode: &ThetaMode, f: impl Fn(&Scalar) -> Result<Scalar>) -> Result<Self> {
        let data = self.data.iter().map(f).collect::<Result<Vec<_>>>()?;
        Ok(ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            mode: mode.clone(),
            data,
        })
    }

    /// Entry-wise substitution of θ.
    pub fn specialize(&self, mode: &ThetaMode) -> Result<Self> {
        self.map(mode, |x| mode.specialize(x))
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            mode: self.mode.clone(),
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        Ok(ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            mode: self.mode.clone(),
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        Ok(ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            mode: self.mode.clone(),
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        })
    }

    fn same_shape(&self, other: &Self) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols, &self.mode);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let prod = a * b;
                    out.add_to(i, j, &prod);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|r| {
                let mut acc = self.mode.zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect())
    }

    pub fn pow(&self, e: u32) -> Result<Self> {
        self.require_square()?;
        let mut acc = Self::identity(self.rows, &self.mode);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    fn require_square(&self) -> Result<()> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(())
    }

    pub fn trace(&self) -> Result<Scalar> {
        self.require_square()?;
        let mut acc = self.mode.zero();
        for i in 0..self.rows {
            acc += self.get(i, i);
        }
        Ok(acc)
    }

    /// Characteristic polynomial `det(tI - M)`, monic, coefficients in
    /// descending powers of `t`, with the default symbolic cap.
    pub fn charpoly(&self) -> Result<Vec<Scalar>> {
        self.charpoly_with_cap(DEFAULT_SYMBOLIC_CAP)
    }

    /// Faddeev–LeVerrier recursion. Only divisions by the integers
    /// `1..=n` occur, so no pivoting in the rational-function field is needed.
    pub fn charpoly_with_cap(&self, cap: usize) -> Result<Vec<Scalar>> {
        self.require_square()?;
        let n = self.rows;
        if self.mode.is_symbolic() && n > cap {
            return Err(Error::SymbolicCapExceeded { dim: n, cap });
        }
        let mut coeffs = vec![self.mode.one()];
        let mut aux = Self::zeros(n, n, &self.mode);
        for k in 1..=n {
            // aux <- A * aux + c_{k-1} I
            let mut next = self.mul(&aux)?;
            let c_prev = coeffs.last().unwrap().clone();
            for i in 0..n {
                next.add_to(i, i, &c_prev);
            }
            aux = next;
            let tr = self.mul(&aux)?.trace()?;
            let c = (-tr).scale(&num::BigRational::new(1.into(), (k as i64).into()));
            coeffs.push(c);
        }
        Ok(coeffs)
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            if p != row {
                for c in 0..m.cols {
                    m.data.swap(p * m.cols + c, row * m.cols + c);
                }
            }
            let inv = m.get(row, col).checked_inv().expect("pivot is nonzero");
            for c in col..m.cols {
                let v = m.get(row, c) * &inv;
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let f = m.get(r, col).clone();
                if f.is_zero() {
                    continue;
                }
                for c in col..m.cols {
                    let v = m.get(row, c);
                    if v.is_zero() {
                        continue;
                    }
                    let upd = m.get(r, c) - &(&f * v);
                    m.set(r, c, upd);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the null space `{v : M v = 0}`.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![self.mode.zero(); self.cols];
                v[f] = self.mode.one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = -r.get(i, f);
                }
                v
            })
            .collect()
    }

    /// Basis of the column space in echelon form, together with the row
    /// indices at which the basis vectors form an identity block.
    ///
    /// If `B` is the returned basis (as columns) and `rows` the indices, then
    /// for any `M` leaving the column space invariant the restriction of `M`
    /// is the submatrix of `M B` at those rows.
    pub fn column_space(&self) -> (Vec<Vec<Scalar>>, Vec<usize>) {
        let (r, pivots) = self.transpose().rref();
        let basis = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        (basis, pivots)
    }

    /// Solve `M x = b`; `None` if inconsistent. Free variables are set to zero.
    pub fn solve(&self, b: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch("right-hand side length".into()));
        }
        let aug = Self::from_fn(self.rows, self.cols + 1, &self.mode, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                b[r].clone()
            }
        });
        let (red, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![self.mode.zero(); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = red.get(i, self.cols).clone();
        }
        Ok(Some(x))
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Evaluate a descending coefficient list at `t`.
pub fn eval_descending(coeffs: &[Scalar], t: &Scalar) -> Scalar {
    let mut acc = t.zero_like();
    for c in coeffs {
        acc = &(&acc * t) + c;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one() -> ThetaMode {
        ThetaMode::specialized(1, 1)
    }

    #[test]
    fn charpoly_swap_matrix() {
        let m = ExactMatrix::from_ints(&[&[0, 1], &[1, 0]], &one()).unwrap();
        let cp = m.charpoly().unwrap();
        assert_eq!(cp, vec![one().int(1), one().int(0), one().int(-1)]);
    }

    #[test]
    fn charpoly_triangular_symbolic() {
        let s = ThetaMode::Symbolic;
        let m = ExactMatrix::from_rows(
            vec![vec![s.linear(2, 1), s.linear(0, -1)], vec![s.zero(), s.zero()]],
            &s,
        )
        .unwrap();
        let cp = m.charpoly().unwrap();
        assert_eq!(cp, vec![s.one(), -s.linear(2, 1), s.zero()]);
    }

    #[test]
    fn charpoly_of_power_sum_on_two_variable_monomials() {
        // Sum of T_i^2 on V_(1,1,0) at θ = 1, basis x1x2, x1x3, x2x3.
        let m = ExactMatrix::from_ints(&[&[8, -2, -2], &[-2, 8, -2], &[-2, -2, 8]], &one())
            .unwrap();
        let cp = m.charpoly().unwrap();
        // (t-4)(t-10)^2 = t^3 - 24 t^2 + 180 t - 400
        assert_eq!(cp, vec![one().int(1), one().int(-24), one().int(180), one().int(-400)]);
    }

    #[test]
    fn charpoly_rejects_non_square_and_cap() {
        let m = ExactMatrix::zeros(2, 3, &one());
        assert!(matches!(m.charpoly(), Err(Error::NotSquare { .. })));
        let big = ExactMatrix::identity(5, &ThetaMode::Symbolic);
        assert!(matches!(
            big.charpoly_with_cap(4),
            Err(Error::SymbolicCapExceeded { dim: 5, cap: 4 })
        ));
    }

    #[test]
    fn kernels() {
        let m = one();
        assert!(ExactMatrix::identity(2, &m).kernel_basis().is_empty());
        assert_eq!(ExactMatrix::zeros(2, 2, &m).kernel_basis().len(), 2);
        let k = ExactMatrix::from_ints(&[&[1, 1], &[1, 1]], &m).unwrap().kernel_basis();
        assert_eq!(k, vec![vec![m.int(-1), m.int(1)]]);
    }

    #[test]
    fn solve_and_column_space() {
        let m = one();
        let a = ExactMatrix::from_ints(&[&[2, 1], &[1, 3]], &m).unwrap();
        let x = a.solve(&[m.int(3), m.int(4)]).unwrap().unwrap();
        assert_eq!(x, vec![m.int(1), m.int(1)]);
        let p = ExactMatrix::from_ints(&[&[1, 1], &[1, 1]], &m).unwrap();
        let (basis, rows) = p.column_space();
        assert_eq!(basis, vec![vec![m.int(1), m.int(1)]]);
        assert_eq!(rows, vec![0]);
    }
}
