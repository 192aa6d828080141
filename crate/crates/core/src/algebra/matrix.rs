use super::field::Field;

/// Dense row-major matrix over a field.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

/// Result of Gauss-Jordan elimination.
#[derive(Clone, Debug)]
pub struct Rref<F: Field> {
    pub matrix: Matrix<F>,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(field: &F, rows: usize, cols: usize) -> Self {
        Matrix {
            data: vec![field.zero(); rows * cols],
            field: field.clone(),
            rows,
            cols,
        }
    }

    pub fn identity(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Builds a matrix from rows; all rows must have length `cols`.
    pub fn from_rows(field: &F, cols: usize, rows: Vec<Vec<F::Elem>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix row");
            data.extend(r);
        }
        Matrix {
            field: field.clone(),
            rows: n,
            cols,
            data,
        }
    }

    pub fn from_i64(field: &F, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&v| field.from_i64(v)).collect())
            .collect();
        Self::from_rows(field, cols, rows)
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F::Elem {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F::Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F::Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let f = &self.field;
        let mut out = Self::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let v = f.add(out.get(i, j), &f.mul(a, other.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(v.len(), self.cols);
        let f = &self.field;
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(f.zero(), |acc, (a, b)| f.add(&acc, &f.mul(a, b)))
            })
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Reduced row echelon form, pivot columns and rank.
    pub fn rref(&self) -> Rref<F> {
        let f = self.field.clone();
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !f.is_zero(m.get(i, c))) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = f.inv(m.get(r, c));
            for j in c..m.cols {
                let v = f.mul(m.get(r, j), &inv);
                m.set(r, j, v);
            }
            let pivot_row: Vec<F::Elem> = m.row(r)[c..].to_vec();
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c).clone();
                if f.is_zero(&factor) {
                    continue;
                }
                let base = i * m.cols;
                for (off, pv) in pivot_row.iter().enumerate() {
                    if !f.is_zero(pv) {
                        f.sub_mul_assign(&mut m.data[base + c + off], &factor, pv);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        let rank = pivots.len();
        Rref {
            matrix: m,
            pivots,
            rank,
        }
    }

    pub fn rank(&self) -> usize {
        RowSpace::from_rows(&self.field, self.cols, (0..self.rows).map(|i| self.row(i).to_vec()))
            .rank()
    }

    /// Basis of the right null space.
    pub fn kernel_basis(&self) -> Vec<Vec<F::Elem>> {
        let f = &self.field;
        let Rref { matrix, pivots, .. } = self.rref();
        let mut is_pivot = vec![None; self.cols];
        for (row, &c) in pivots.iter().enumerate() {
            is_pivot[c] = Some(row);
        }
        (0..self.cols)
            .filter(|&j| is_pivot[j].is_none())
            .map(|free| {
                let mut v = vec![f.zero(); self.cols];
                v[free] = f.one();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = f.neg(matrix.get(row, free));
                }
                v
            })
            .collect()
    }
}

/// Incrementally maintained row space in echelon form. Used to build spans,
/// test membership and extract complements one vector at a time.
#[derive(Clone, Debug)]
pub struct RowSpace<F: Field> {
    field: F,
    dim: usize,
    // rows normalized with leading 1 at `pivot`; kept sorted by pivot
    rows: Vec<(usize, Vec<F::Elem>)>,
}

impl<F: Field> RowSpace<F> {
    pub fn new(field: &F, dim: usize) -> Self {
        RowSpace {
            field: field.clone(),
            dim,
            rows: Vec::new(),
        }
    }

    pub fn from_rows(field: &F, dim: usize, rows: impl IntoIterator<Item = Vec<F::Elem>>) -> Self {
        let mut s = Self::new(field, dim);
        for r in rows {
            s.insert(r);
        }
        s
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.dim
    }

    /// Reduces `v` against the current echelon rows; returns the residue.
    pub fn reduce(&self, mut v: Vec<F::Elem>) -> Vec<F::Elem> {
        let f = &self.field;
        for (p, row) in &self.rows {
            let c = v[*p].clone();
            if f.is_zero(&c) {
                continue;
            }
            for j in *p..self.dim {
                if !f.is_zero(&row[j]) {
                    f.sub_mul_assign(&mut v[j], &c, &row[j]);
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        self.reduce(v.to_vec()).iter().all(|c| self.field.is_zero(c))
    }

    /// Inserts `v`; returns true when it enlarged the span.
    pub fn insert(&mut self, v: Vec<F::Elem>) -> bool {
        assert_eq!(v.len(), self.dim, "vector length mismatch");
        if self.is_full() {
            return false;
        }
        let f = self.field.clone();
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|c| !f.is_zero(c)) else {
            return false;
        };
        let inv = f.inv(&v[p]);
        for c in v.iter_mut().skip(p) {
            *c = f.mul(c, &inv);
        }
        let at = self.rows.partition_point(|(q, _)| *q < p);
        self.rows.insert(at, (p, v));
        true
    }

    /// Echelon basis vectors (not fully reduced).
    pub fn basis(&self) -> impl Iterator<Item = &[F::Elem]> {
        self.rows.iter().map(|(_, r)| r.as_slice())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::{PrimeField, RationalField};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn identity_rref() {
        let q = RationalField;
        let id = Matrix::identity(&q, 2);
        let r = id.rref();
        assert_eq!(r.matrix, id);
        assert_eq!(r.pivots, vec![0, 1]);
        assert_eq!(r.rank, 2);
    }

    #[test]
    fn dependent_rows() {
        let q = RationalField;
        let m = Matrix::from_i64(&q, &[&[1, 2], &[2, 4]]);
        let r = m.rref();
        assert_eq!(r.matrix, Matrix::from_i64(&q, &[&[1, 2], &[0, 0]]));
        assert_eq!(r.rank, 1);
    }

    #[test]
    fn empty_matrix() {
        let q = RationalField;
        let m = Matrix::zeros(&q, 0, 3);
        assert_eq!(m.rref().rank, 0);
        assert_eq!(m.kernel_basis().len(), 3);
    }

    #[test]
    fn kernel_edge_cases() {
        let q = RationalField;
        assert!(Matrix::identity(&q, 3).kernel_basis().is_empty());
        assert_eq!(Matrix::zeros(&q, 2, 3).kernel_basis().len(), 3);
    }

    #[test]
    fn product_of_generic_factors_has_inner_rank() {
        // 20x12 times 12x30 with random entries mod p has rank 12 with
        // overwhelming probability; rank of each factor is checked too.
        let f = PrimeField::default_prime();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut random = |r: usize, c: usize| {
            let rows = (0..r).map(|_| (0..c).map(|_| f.sample(&mut rng)).collect()).collect();
            Matrix::from_rows(&f, c, rows)
        };
        let a = random(20, 12);
        let b = random(12, 30);
        assert_eq!(a.rank(), 12);
        assert_eq!(b.rank(), 12);
        let m = a.mul(&b);
        let r = m.rref();
        assert_eq!(r.rank, 12);
        assert_eq!(m.kernel_basis().len(), 18);
        for v in m.kernel_basis() {
            assert!(m.mul_vec(&v).iter().all(|c| *c == 0));
        }
    }

    #[test]
    fn row_space_membership() {
        let q = RationalField;
        let mut s = RowSpace::new(&q, 3);
        assert!(s.insert(vec![q.from_i64(1), q.from_i64(1), q.from_i64(0)]));
        assert!(s.insert(vec![q.from_i64(0), q.from_i64(1), q.from_i64(1)]));
        assert!(!s.insert(vec![q.from_i64(1), q.from_i64(2), q.from_i64(1)]));
        assert!(s.contains(&[q.from_i64(2), q.from_i64(3), q.from_i64(1)]));
        assert!(!s.contains(&[q.from_i64(0), q.from_i64(0), q.from_i64(1)]));
        assert_eq!(s.rank(), 2);
    }
}
