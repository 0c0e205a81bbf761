//! Exact dense matrices over the rationals.
//!
//! Rank and kernel computations clear denominators row by row and run a
//! fraction-free Gauss-Jordan sweep on integer rows, dividing every updated
//! row by its content so entries stay small. Pivots are always the first
//! usable row in column order, which makes every output reproducible.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rat::{primitive_integer_vector, Rat};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            entries: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    /// Builds a matrix from row vectors; all rows must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rat>>) -> Self {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged row");
            entries.extend(r);
        }
        RatMatrix {
            rows: n,
            cols,
            entries,
        }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&x| Rat::from(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rat {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rat) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rat] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn push_row(&mut self, row: Vec<Rat>) {
        assert_eq!(row.len(), self.cols, "ragged row");
        self.entries.extend(row);
        self.rows += 1;
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| self.row(r).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn mul(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = RatMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let s: Rat = (0..self.cols).map(|k| self.get(i, k) * other.get(k, j)).sum();
                out.set(i, j, s);
            }
        }
        out
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut out = RatMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    /// Determinant of a square matrix by rational elimination.
    pub fn det(&self) -> Rat {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let mut a: Vec<Vec<Rat>> = (0..n).map(|r| self.row(r).to_vec()).collect();
        let mut det = Rat::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else {
                return Rat::zero();
            };
            if p != c {
                a.swap(p, c);
                det = -det;
            }
            let piv = a[c][c].clone();
            det = &det * &piv;
            for r in c + 1..n {
                if a[r][c].is_zero() {
                    continue;
                }
                let f = &a[r][c] / &piv;
                for k in c..n {
                    let t = &f * &a[c][k];
                    a[r][k] -= &t;
                }
            }
        }
        det
    }

    /// Inverse of a square matrix, `None` when singular.
    pub fn inverse(&self) -> Option<RatMatrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a: Vec<Vec<Rat>> = (0..n)
            .map(|r| {
                let mut row = self.row(r).to_vec();
                row.extend((0..n).map(|c| if c == r { Rat::one() } else { Rat::zero() }));
                row
            })
            .collect();
        for c in 0..n {
            let p = (c..n).find(|&r| !a[r][c].is_zero())?;
            a.swap(p, c);
            let piv = a[c][c].recip();
            for k in 0..2 * n {
                a[c][k] = &a[c][k] * &piv;
            }
            for r in 0..n {
                if r == c || a[r][c].is_zero() {
                    continue;
                }
                let f = a[r][c].clone();
                for k in 0..2 * n {
                    let t = &f * &a[c][k];
                    a[r][k] -= &t;
                }
            }
        }
        Some(RatMatrix::from_rows(
            n,
            a.into_iter().map(|row| row[n..].to_vec()).collect(),
        ))
    }

    fn reduced(&self) -> Reduced {
        Reduced::compute(self)
    }

    pub fn rank(&self) -> usize {
        self.reduced().pivots.len()
    }

    /// Basis of the right kernel. Each vector is a primitive integer vector
    /// with positive leading entry; vectors are ordered by their free column.
    pub fn kernel_basis(&self) -> Vec<Vec<Rat>> {
        self.reduced().kernel()
    }
}

/// Integer reduced row echelon form (pivot entries not normalized to 1).
struct Reduced {
    cols: usize,
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

fn integer_row(row: &[Rat]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for x in row {
        lcm = lcm.lcm(x.denom());
    }
    let mut ints: Vec<BigInt> = row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    remove_content(&mut ints);
    ints
}

fn remove_content(row: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for x in row.iter() {
        if !x.is_zero() {
            g = g.gcd(x);
            if g.is_one() {
                return;
            }
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for x in row.iter_mut() {
        *x /= &g;
    }
}

impl Reduced {
    fn compute(m: &RatMatrix) -> Reduced {
        let mut rows: Vec<Vec<BigInt>> = (0..m.rows).map(|r| integer_row(m.row(r))).collect();
        rows.retain(|r| r.iter().any(|x| !x.is_zero()));
        let mut pivots = Vec::new();
        let mut prow = 0;
        for col in 0..m.cols {
            if prow == rows.len() {
                break;
            }
            let Some(p) = (prow..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
                continue;
            };
            rows.swap(prow, p);
            let (head, tail) = rows.split_at_mut(prow);
            let (pivot_row, tail) = tail.split_first_mut().expect("pivot row");
            if pivot_row[col].is_negative() {
                for x in pivot_row.iter_mut() {
                    *x = -&*x;
                }
            }
            let a = pivot_row[col].clone();
            for row in head.iter_mut().chain(tail.iter_mut()) {
                if row[col].is_zero() {
                    continue;
                }
                let g = a.gcd(&row[col]);
                let fa = &a / &g;
                let fb = &row[col] / &g;
                for (x, y) in row.iter_mut().zip(pivot_row.iter()) {
                    *x = &fa * &*x - &fb * y;
                }
                remove_content(row);
            }
            pivots.push(col);
            prow += 1;
        }
        rows.truncate(prow);
        Reduced {
            cols: m.cols,
            rows,
            pivots,
        }
    }

    fn kernel(&self) -> Vec<Vec<Rat>> {
        let mut out = Vec::new();
        let mut is_pivot = vec![false; self.cols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![Rat::zero(); self.cols];
            v[free] = Rat::one();
            for (row, &pc) in self.rows.iter().zip(&self.pivots) {
                if !row[free].is_zero() {
                    v[pc] = -Rat::new(row[free].clone(), row[pc].clone());
                }
            }
            out.push(primitive_integer_vector(&v));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_rank_and_kernel() {
        assert_eq!(RatMatrix::identity(2).rank(), 2);
        assert!(RatMatrix::identity(3).kernel_basis().is_empty());
    }

    #[test]
    fn zero_matrix() {
        let z = RatMatrix::zeros(3, 5);
        assert_eq!(z.rank(), 0);
        assert_eq!(z.kernel_basis().len(), 5);
    }

    #[test]
    fn single_row_kernel() {
        let m = RatMatrix::from_i64(&[&[1, -1]]);
        assert_eq!(m.kernel_basis(), vec![vec![Rat::from(1), Rat::from(1)]]);
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let m = RatMatrix::from_i64(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, -1, 2]]);
        let k = m.kernel_basis();
        assert_eq!(m.rank() + k.len(), 4);
        for v in &k {
            assert!(m.mul_vec(v).iter().all(Rat::is_zero));
        }
    }

    #[test]
    fn det_and_inverse() {
        let m = RatMatrix::from_i64(&[&[0, -1, 1], &[0, -1, 0], &[1, -1, 0]]);
        assert_eq!(m.det(), Rat::from(1));
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), RatMatrix::identity(3));
        assert!(RatMatrix::from_i64(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }
}
