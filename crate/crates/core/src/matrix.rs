//! Exact integer matrices: dense Smith normal form with transform tracking,
//! and a sparse variant for the large, very sparse differentials of the
//! spectral-sequence oracle.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_traits::Zero;

use crate::scalar::IntScalar;

/// Dense row-major matrix over an integer scalar.
#[derive(Clone, PartialEq, Eq)]
pub struct DenseMatrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: IntScalar> DenseMatrix<T> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        DenseMatrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        DenseMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Convenience constructor from machine integers.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| T::from(v)).collect())
                .collect(),
        )
    }

    pub fn diagonal(entries: &[T]) -> Self {
        let n = entries.len();
        let mut m = Self::zero(n, n);
        for (i, e) in entries.iter().enumerate() {
            m.set(i, i, e.clone());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    pub fn diagonal_entries(&self) -> Vec<T> {
        (0..self.rows.min(self.cols))
            .map(|i| self.get(i, i).clone())
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(j, i, self.get(i, j).clone());
            }
        }
        m
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in matrix product");
        let mut out = Self::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let cur = out.get(i, j).clone();
                        out.set(i, j, cur + a.clone() * b.clone());
                    }
                }
            }
        }
        out
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += f * row[src]
    pub fn add_row_multiple(&mut self, dst: usize, src: usize, f: &T) {
        for j in 0..self.cols {
            let add = f.clone() * self.get(src, j).clone();
            let cur = self.get(dst, j).clone();
            self.set(dst, j, cur + add);
        }
    }

    /// Replace rows r1, r2 by the unimodular combination
    /// (a11*r1 + a12*r2, a21*r1 + a22*r2).
    pub fn transform_rows(&mut self, r1: usize, r2: usize, a11: &T, a12: &T, a21: &T, a22: &T) {
        for j in 0..self.cols {
            let x = self.get(r1, j).clone();
            let y = self.get(r2, j).clone();
            self.set(r1, j, a11.clone() * x.clone() + a12.clone() * y.clone());
            self.set(r2, j, a21.clone() * x + a22.clone() * y);
        }
    }

    /// Replace columns c1, c2 by the unimodular combination
    /// (a11*c1 + a12*c2, a21*c1 + a22*c2).
    pub fn transform_cols(&mut self, c1: usize, c2: usize, a11: &T, a12: &T, a21: &T, a22: &T) {
        for i in 0..self.rows {
            let x = self.get(i, c1).clone();
            let y = self.get(i, c2).clone();
            self.set(i, c1, a11.clone() * x.clone() + a12.clone() * y.clone());
            self.set(i, c2, a21.clone() * x + a22.clone() * y);
        }
    }

    /// col[dst] += f * col[src]
    pub fn add_col_multiple(&mut self, dst: usize, src: usize, f: &T) {
        for i in 0..self.rows {
            let add = f.clone() * self.get(i, src).clone();
            let cur = self.get(i, dst).clone();
            self.set(i, dst, cur + add);
        }
    }

    pub fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = self.get(i, j).clone();
            self.set(i, j, -v);
        }
    }

    /// Exact determinant of a square matrix (fraction-free Bareiss
    /// elimination; every division is exact).
    pub fn determinant(&self) -> T {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return T::one();
        }
        let mut m = self.clone();
        let mut prev = T::one();
        let mut sign = T::one();
        for k in 0..n - 1 {
            if m.get(k, k).is_zero() {
                match (k + 1..n).find(|&i| !m.get(i, k).is_zero()) {
                    Some(i) => {
                        m.swap_rows(k, i);
                        sign = -sign;
                    }
                    None => return T::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m.get(i, j).clone() * m.get(k, k).clone()
                        - m.get(i, k).clone() * m.get(k, j).clone();
                    m.set(i, j, num / prev.clone());
                }
            }
            prev = m.get(k, k).clone();
        }
        sign * m.get(n - 1, n - 1).clone()
    }

    pub fn rank(&self) -> usize {
        smith_normal_form(self)
            .d
            .diagonal_entries()
            .iter()
            .filter(|d| !d.is_zero())
            .count()
    }

    /// cols − rank, i.e. the rank of the kernel of the map Z^cols → Z^rows.
    pub fn kernel_rank(&self) -> usize {
        self.cols - self.rank()
    }
}

impl<T: IntScalar> fmt::Debug for DenseMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Result of a Smith normal form computation: `d = u * a * v` with `u`, `v`
/// unimodular and the diagonal of `d` non-negative in divisibility order.
#[derive(Clone)]
pub struct SmithDecomposition<T> {
    pub d: DenseMatrix<T>,
    pub u: DenseMatrix<T>,
    pub v: DenseMatrix<T>,
}

impl<T: IntScalar> fmt::Debug for SmithDecomposition<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SmithDecomposition {{ d: {:?}, u: {:?}, v: {:?} }}", self.d, self.u, self.v)
    }
}

impl<T: IntScalar> SmithDecomposition<T> {
    pub fn diagonal(&self) -> Vec<T> {
        self.d.diagonal_entries()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|d| !d.is_zero()).count()
    }
}

fn min_abs_nonzero<T: IntScalar>(m: &DenseMatrix<T>, from: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, T)> = None;
    for i in from..m.rows() {
        for j in from..m.cols() {
            let v = m.get(i, j);
            if v.is_zero() {
                continue;
            }
            let a = v.abs();
            if a.is_one() {
                return Some((i, j));
            }
            match &best {
                Some((_, _, cur)) if *cur <= a => {}
                _ => best = Some((i, j, a)),
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

/// Smith normal form with unimodular transforms.
///
/// Pivots start at the entry of minimal absolute value; entries are
/// eliminated by exact division where possible and by extended-gcd
/// two-row/two-column transforms otherwise, which keeps intermediate entry
/// growth polynomial.
pub fn smith_normal_form<T: IntScalar>(a: &DenseMatrix<T>) -> SmithDecomposition<T> {
    let rows = a.rows();
    let cols = a.cols();
    let mut d = a.clone();
    let mut u = DenseMatrix::identity(rows);
    let mut v = DenseMatrix::identity(cols);

    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pi, pj)) = min_abs_nonzero(&d, t) else {
            break;
        };
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);

        // First shrink the pivot to the gcd of its row and column using
        // two-row/two-column transforms, then eliminate with exact
        // quotients in a single pass each way. Gathering the gcd up front
        // avoids the row/column ping-pong that balloons the entries.
        loop {
            let mut changed = false;
            for i in t + 1..rows {
                let b = d.get(i, t).clone();
                if b.is_zero() || (b.clone() % d.get(t, t).clone()).is_zero() {
                    continue;
                }
                let a = d.get(t, t).clone();
                let e = a.extended_gcd(&b);
                let m21 = -(b / e.gcd.clone());
                let m22 = a / e.gcd;
                d.transform_rows(t, i, &e.x, &e.y, &m21, &m22);
                u.transform_rows(t, i, &e.x, &e.y, &m21, &m22);
                changed = true;
            }
            for j in t + 1..cols {
                let b = d.get(t, j).clone();
                if b.is_zero() || (b.clone() % d.get(t, t).clone()).is_zero() {
                    continue;
                }
                let a = d.get(t, t).clone();
                let e = a.extended_gcd(&b);
                let m21 = -(b / e.gcd.clone());
                let m22 = a / e.gcd;
                d.transform_cols(t, j, &e.x, &e.y, &m21, &m22);
                v.transform_cols(t, j, &e.x, &e.y, &m21, &m22);
                changed = true;
            }
            if !changed {
                break;
            }
        }
        for i in t + 1..rows {
            if !d.get(i, t).is_zero() {
                let q = -(d.get(i, t).clone() / d.get(t, t).clone());
                d.add_row_multiple(i, t, &q);
                u.add_row_multiple(i, t, &q);
            }
        }
        for j in t + 1..cols {
            if !d.get(t, j).is_zero() {
                let q = -(d.get(t, j).clone() / d.get(t, t).clone());
                d.add_col_multiple(j, t, &q);
                v.add_col_multiple(j, t, &q);
            }
        }
        t += 1;
    }

    // The matrix is diagonal; repair the divisibility chain with local 2x2
    // transforms. For a pair (a, b) with a not dividing b this replaces it
    // by (gcd, ±lcm), so repeated passes settle into the chain.
    let n = rows.min(cols);
    loop {
        let mut changed = false;
        for i in 0..n {
            for j in i + 1..n {
                let a = d.get(i, i).clone();
                let b = d.get(j, j).clone();
                if b.is_zero() {
                    continue;
                }
                if a.is_zero() {
                    d.swap_rows(i, j);
                    u.swap_rows(i, j);
                    d.swap_cols(i, j);
                    v.swap_cols(i, j);
                    changed = true;
                    continue;
                }
                if (b.clone() % a.clone()).is_zero() {
                    continue;
                }
                // fold b into column i, then gcd the two rows
                let one = T::one();
                d.add_col_multiple(i, j, &one);
                v.add_col_multiple(i, j, &one);
                let e = a.extended_gcd(&b);
                let m21 = -(b.clone() / e.gcd.clone());
                let m22 = a / e.gcd.clone();
                d.transform_rows(i, j, &e.x, &e.y, &m21, &m22);
                u.transform_rows(i, j, &e.x, &e.y, &m21, &m22);
                // clear the leftover above the new lcm entry
                let q = -(e.y * b / e.gcd);
                d.add_col_multiple(j, i, &q);
                v.add_col_multiple(j, i, &q);
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }

    for i in 0..n {
        if d.get(i, i).is_negative() {
            d.negate_row(i);
            u.negate_row(i);
        }
    }

    SmithDecomposition { d, u, v }
}

/// Sparse matrix keyed by row; suited to the oracle differentials, whose
/// rows or columns carry at most a handful of entries.
#[derive(Clone, Debug)]
pub struct SparseMatrix<T> {
    rows: usize,
    cols: usize,
    row_data: Vec<BTreeMap<usize, T>>,
}

impl<T: IntScalar> SparseMatrix<T> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            row_data: vec![BTreeMap::new(); rows],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.row_data.iter().map(BTreeMap::len).sum()
    }

    pub fn add_entry(&mut self, i: usize, j: usize, v: T) {
        assert!(i < self.rows && j < self.cols, "entry out of bounds");
        let row = &mut self.row_data[i];
        let cur = row.remove(&j).unwrap_or_else(T::zero) + v;
        if !cur.is_zero() {
            row.insert(j, cur);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.row_data.iter().all(BTreeMap::is_empty)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in matrix product");
        let mut out = Self::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for (k, v) in &self.row_data[i] {
                for (j, w) in &rhs.row_data[*k] {
                    out.add_entry(i, *j, v.clone() * w.clone());
                }
            }
        }
        out
    }

    pub fn to_dense(&self) -> DenseMatrix<T> {
        let mut m = DenseMatrix::zero(self.rows, self.cols);
        for (i, row) in self.row_data.iter().enumerate() {
            for (j, v) in row {
                m.set(i, *j, v.clone());
            }
        }
        m
    }

    /// Rank together with a certificate that every elementary divisor is a
    /// unit (equivalently: the cokernel of the matrix is free).
    ///
    /// Elimination pivots only on ±1 entries, which are unimodular row
    /// operations and never grow the remaining entries; if no unit entry is
    /// left the small residue is handed to the dense Smith normal form.
    pub fn rank_and_unit_certificate(&self) -> (usize, bool) {
        let mut rows: Vec<BTreeMap<usize, T>> = self.row_data.clone();
        // col -> set of active rows with a nonzero entry there
        let mut col_index: HashMap<usize, BTreeSet<usize>> = HashMap::new();
        for (i, row) in rows.iter().enumerate() {
            for j in row.keys() {
                col_index.entry(*j).or_default().insert(i);
            }
        }
        let mut active: BTreeSet<usize> =
            (0..rows.len()).filter(|&i| !rows[i].is_empty()).collect();
        let mut rank = 0;

        while !active.is_empty() {
            // Find a ±1 pivot, preferring sparse rows.
            let mut pivot: Option<(usize, usize)> = None;
            let mut best_len = usize::MAX;
            for &i in &active {
                if rows[i].len() >= best_len {
                    continue;
                }
                if let Some((j, _)) = rows[i].iter().find(|(_, v)| v.abs().is_one()) {
                    best_len = rows[i].len();
                    pivot = Some((i, *j));
                    if best_len == 1 {
                        break;
                    }
                }
            }
            let Some((pr, pc)) = pivot else {
                // No unit entries left: fall back to the dense kernel for the
                // residue. Its divisors decide the certificate.
                let remaining: Vec<usize> = active.iter().copied().collect();
                let mut dense = DenseMatrix::zero(remaining.len(), self.cols);
                for (di, &i) in remaining.iter().enumerate() {
                    for (j, v) in &rows[i] {
                        dense.set(di, *j, v.clone());
                    }
                }
                let snf = smith_normal_form(&dense);
                let diag = snf.diagonal();
                let extra = diag.iter().filter(|d| !d.is_zero()).count();
                let certified = diag.iter().all(|d| d.is_zero() || d.is_one());
                return (rank + extra, certified);
            };

            let pivot_val = rows[pr].get(&pc).expect("pivot present").clone();
            let pivot_row = rows[pr].clone();
            let targets: Vec<usize> = col_index
                .get(&pc)
                .map(|s| s.iter().copied().filter(|&i| i != pr).collect())
                .unwrap_or_default();
            for i in targets {
                let val = rows[i].get(&pc).expect("indexed entry").clone();
                let q = val / pivot_val.clone(); // exact: pivot is ±1
                for (j, v) in &pivot_row {
                    let cur = rows[i].remove(j).unwrap_or_else(T::zero) - q.clone() * v.clone();
                    if cur.is_zero() {
                        if let Some(s) = col_index.get_mut(j) {
                            s.remove(&i);
                        }
                    } else {
                        rows[i].insert(*j, cur);
                        col_index.entry(*j).or_default().insert(i);
                    }
                }
                if rows[i].is_empty() {
                    active.remove(&i);
                }
            }
            // Retire the pivot row.
            for j in pivot_row.keys() {
                if let Some(s) = col_index.get_mut(j) {
                    s.remove(&pr);
                }
            }
            active.remove(&pr);
            rows[pr].clear();
            rank += 1;
        }
        (rank, true)
    }

    pub fn rank(&self) -> usize {
        self.rank_and_unit_certificate().0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Int;
    use num_traits::Signed;

    fn dm(rows: &[&[i64]]) -> DenseMatrix<Int> {
        DenseMatrix::from_i64(rows)
    }

    fn check_snf(a: &DenseMatrix<Int>) -> SmithDecomposition<Int> {
        let snf = smith_normal_form(a);
        assert_eq!(snf.u.mul(a).mul(&snf.v), snf.d, "U*A*V != D");
        assert!(snf.d.is_diagonal());
        assert_eq!(snf.u.determinant().abs(), Int::from(1));
        assert_eq!(snf.v.determinant().abs(), Int::from(1));
        let diag = snf.diagonal();
        for w in diag.windows(2) {
            if !w[0].is_zero() {
                assert!(
                    (w[1].clone() % w[0].clone()).is_zero(),
                    "divisibility chain broken: {:?}",
                    diag
                );
            } else {
                assert!(w[1].is_zero(), "zero before nonzero in diagonal");
            }
        }
        snf
    }

    #[test]
    fn snf_2x2_example() {
        // d1 = gcd of entries = 2, d1*d2 = gcd of 2x2 minors = |2*8-4*6| = 8
        let snf = check_snf(&dm(&[&[2, 4], &[6, 8]]));
        assert_eq!(snf.diagonal(), vec![Int::from(2), Int::from(4)]);
    }

    #[test]
    fn snf_empty_matrix() {
        let snf = check_snf(&dm(&[]));
        assert!(snf.diagonal().is_empty());
    }

    #[test]
    fn snf_identity() {
        let snf = check_snf(&DenseMatrix::<Int>::identity(3));
        assert_eq!(snf.d, DenseMatrix::identity(3));
    }

    #[test]
    fn snf_idempotent_on_diagonal() {
        let d = dm(&[&[2, 0, 0], &[0, 4, 0], &[0, 0, 0]]);
        let snf = check_snf(&d);
        assert_eq!(snf.d, d);
    }

    #[test]
    fn kernel_rank_examples() {
        assert_eq!(DenseMatrix::<Int>::zero(3, 5).kernel_rank(), 5);
        assert_eq!(DenseMatrix::<Int>::identity(4).kernel_rank(), 0);
    }

    #[test]
    fn bareiss_determinant() {
        let a = dm(&[&[3, 1, 4], &[1, 5, 9], &[2, 6, 5]]);
        assert_eq!(a.determinant(), Int::from(-90));
        assert_eq!(DenseMatrix::<Int>::identity(5).determinant(), Int::from(1));
    }

    /// Independent oracle: the product d_1 ... d_i of elementary divisors
    /// equals the gcd of all i-by-i minors.
    fn minor_gcd(a: &DenseMatrix<Int>, size: usize) -> Int {
        fn combos(n: usize, k: usize) -> Vec<Vec<usize>> {
            if k == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for first in 0..n {
                for mut rest in combos(n, k - 1) {
                    if rest.iter().all(|&x| x > first) {
                        let mut c = vec![first];
                        c.append(&mut rest);
                        out.push(c);
                    }
                }
            }
            out
        }
        let mut g = Int::from(0);
        for ri in combos(a.rows(), size) {
            for ci in combos(a.cols(), size) {
                let mut sub = DenseMatrix::zero(size, size);
                for (x, &i) in ri.iter().enumerate() {
                    for (y, &j) in ci.iter().enumerate() {
                        sub.set(x, y, a.get(i, j).clone());
                    }
                }
                g = num_integer::Integer::gcd(&g, &sub.determinant());
            }
        }
        g
    }

    #[test]
    fn snf_matches_minor_gcds_on_small_random_matrices() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..40 {
            let r = rng.gen_range(1..=4);
            let c = rng.gen_range(1..=4);
            let mut a = DenseMatrix::zero(r, c);
            for i in 0..r {
                for j in 0..c {
                    a.set(i, j, Int::from(rng.gen_range(-9i64..=9)));
                }
            }
            let snf = check_snf(&a);
            let diag = snf.diagonal();
            let mut prod = Int::from(1);
            for (i, d) in diag.iter().enumerate() {
                prod *= d.clone();
                assert_eq!(prod, minor_gcd(&a, i + 1), "divisor product vs minor gcd");
            }
        }
    }

    #[test]
    fn sparse_rank_agrees_with_dense() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..30 {
            let r = rng.gen_range(1..=8);
            let c = rng.gen_range(1..=8);
            let mut sp = SparseMatrix::<Int>::zero(r, c);
            for i in 0..r {
                for j in 0..c {
                    if rng.gen_bool(0.4) {
                        sp.add_entry(i, j, Int::from(rng.gen_range(-3i64..=3)));
                    }
                }
            }
            let (rank, _) = sp.rank_and_unit_certificate();
            assert_eq!(rank, sp.to_dense().rank());
        }
    }

    #[test]
    fn sparse_certificate_detects_torsion() {
        let mut sp = SparseMatrix::<Int>::zero(2, 2);
        sp.add_entry(0, 0, Int::from(2));
        sp.add_entry(1, 1, Int::from(3));
        let (rank, certified) = sp.rank_and_unit_certificate();
        assert_eq!(rank, 2);
        assert!(!certified);

        let mut unit = SparseMatrix::<Int>::zero(2, 3);
        unit.add_entry(0, 1, Int::from(1));
        unit.add_entry(1, 2, Int::from(-1));
        assert_eq!(unit.rank_and_unit_certificate(), (2, true));
    }

    #[test]
    fn sparse_mul() {
        let mut a = SparseMatrix::<Int>::zero(2, 3);
        a.add_entry(0, 0, Int::from(1));
        a.add_entry(1, 2, Int::from(2));
        let mut b = SparseMatrix::<Int>::zero(3, 2);
        b.add_entry(0, 1, Int::from(3));
        b.add_entry(2, 0, Int::from(-1));
        let c = a.mul(&b);
        assert_eq!(c.to_dense(), DenseMatrix::from_i64(&[&[0, 3], &[-2, 0]]));
    }
}
