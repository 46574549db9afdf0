use std::ops::{Deref, Index};

use super::{check_dim, FieldError, FieldKind, Scalar};

/// Coefficients of an element with respect to a fixed basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vector {
    coeffs: Vec<Scalar>,
}

impl Vector {
    pub fn new(coeffs: Vec<Scalar>) -> Self {
        Vector { coeffs }
    }

    pub fn zeros(kind: FieldKind, n: usize) -> Self {
        Vector {
            coeffs: vec![kind.zero(); n],
        }
    }

    pub fn basis(kind: FieldKind, n: usize, i: usize) -> Self {
        let mut v = Self::zeros(kind, n);
        v.coeffs[i] = kind.one();
        v
    }

    pub fn into_inner(self) -> Vec<Scalar> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    pub fn add(&self, other: &Vector) -> Vector {
        assert_eq!(self.len(), other.len(), "vector length mismatch");
        Vector::new(self.iter().zip(other.iter()).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        assert_eq!(self.len(), other.len(), "vector length mismatch");
        Vector::new(self.iter().zip(other.iter()).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, c: &Scalar) -> Vector {
        Vector::new(self.iter().map(|a| c * a).collect())
    }

    pub fn add_scaled(&mut self, c: &Scalar, other: &[Scalar]) {
        if c.is_zero() {
            return;
        }
        for (a, b) in self.coeffs.iter_mut().zip(other) {
            if !b.is_zero() {
                *a = &*a + &(c * b);
            }
        }
    }
}

impl From<Vec<Scalar>> for Vector {
    fn from(v: Vec<Scalar>) -> Self {
        Vector::new(v)
    }
}

impl Deref for Vector {
    type Target = [Scalar];
    fn deref(&self) -> &[Scalar] {
        &self.coeffs
    }
}

/// A square matrix over one field, acting on column vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinMap {
    dim: usize,
    entries: Vec<Scalar>,
}

impl LinMap {
    pub fn identity(kind: FieldKind, n: usize) -> Self {
        Self::from_fn(kind, n, |i, j| if i == j { kind.one() } else { kind.zero() })
    }

    pub fn zero(kind: FieldKind, n: usize) -> Self {
        Self::from_fn(kind, n, |_, _| kind.zero())
    }

    pub fn scalar(c: &Scalar, n: usize) -> Self {
        let kind = c.kind();
        Self::from_fn(kind, n, |i, j| if i == j { c.clone() } else { kind.zero() })
    }

    pub fn from_fn(_kind: FieldKind, n: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        LinMap { dim: n, entries }
    }

    /// Builds the matrix whose `j`-th column is `cols[j]`.
    pub fn from_columns(cols: &[Vector]) -> Self {
        let n = cols.len();
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for col in cols {
                assert_eq!(col.len(), n, "column length mismatch");
                entries.push(col[i].clone());
            }
        }
        LinMap { dim: n, entries }
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self, FieldError> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            check_dim("matrix row", n, row.len())?;
            entries.extend(row);
        }
        let m = LinMap { dim: n, entries };
        m.single_kind()?;
        Ok(m)
    }

    fn single_kind(&self) -> Result<(), FieldError> {
        if let Some(first) = self.entries.first() {
            let kind = first.kind();
            if let Some(bad) = self.entries.iter().find(|e| e.kind() != kind) {
                return Err(FieldError::MixedFields(kind, bad.kind()));
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn kind(&self) -> FieldKind {
        self.entries[0].kind()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.dim + j]
    }

    pub fn rows(&self) -> Vec<Vec<Scalar>> {
        self.entries.chunks(self.dim).map(|r| r.to_vec()).collect()
    }

    pub fn apply(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.dim, "vector length mismatch");
        let kind = self.kind();
        let mut out = Vector::zeros(kind, self.dim);
        for j in 0..self.dim {
            if v[j].is_zero() {
                continue;
            }
            for i in 0..self.dim {
                let e = self.entry(i, j);
                if !e.is_zero() {
                    let updated = &out.coeffs[i] + &(e * &v[j]);
                    out.coeffs[i] = updated;
                }
            }
        }
        out
    }

    /// Image of the `j`-th basis vector.
    pub fn column(&self, j: usize) -> Vector {
        Vector::new((0..self.dim).map(|i| self.entry(i, j).clone()).collect())
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinMap) -> LinMap {
        assert_eq!(self.dim, other.dim, "matrix size mismatch");
        let n = self.dim;
        let kind = self.kind();
        LinMap::from_fn(kind, n, |i, j| {
            let mut acc = kind.zero();
            for k in 0..n {
                let a = self.entry(i, k);
                let b = other.entry(k, j);
                if !a.is_zero() && !b.is_zero() {
                    acc = &acc + &(a * b);
                }
            }
            acc
        })
    }

    pub fn add(&self, other: &LinMap) -> LinMap {
        assert_eq!(self.dim, other.dim, "matrix size mismatch");
        LinMap {
            dim: self.dim,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &LinMap) -> LinMap {
        self.add(&other.scale(&other.kind().from_i64(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> LinMap {
        LinMap {
            dim: self.dim,
            entries: self.entries.iter().map(|a| c * a).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> LinMap {
        (0..k).fold(LinMap::identity(self.kind(), self.dim), |acc, _| acc.compose(self))
    }

    pub fn is_identity(&self) -> bool {
        *self == LinMap::identity(self.kind(), self.dim)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn commutes_with(&self, other: &LinMap) -> bool {
        self.compose(other) == other.compose(self)
    }

    /// First basis index `j` with `(self∘other)(e_j) ≠ (other∘self)(e_j)`.
    pub fn commutation_witness(&self, other: &LinMap) -> Option<usize> {
        let ab = self.compose(other);
        let ba = other.compose(self);
        (0..self.dim).find(|&j| ab.column(j) != ba.column(j))
    }

    /// Exact inverse by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Option<LinMap> {
        let n = self.dim;
        let kind = self.kind();
        let mut a: Vec<Vec<Scalar>> = self.rows();
        let mut inv: Vec<Vec<Scalar>> = LinMap::identity(kind, n).rows();
        for c in 0..n {
            let pivot = (c..n).find(|&r| !a[r][c].is_zero())?;
            a.swap(c, pivot);
            inv.swap(c, pivot);
            let p = a[c][c].inverse().expect("pivot is nonzero");
            for j in 0..n {
                a[c][j] = &a[c][j] * &p;
                inv[c][j] = &inv[c][j] * &p;
            }
            for r in 0..n {
                if r == c || a[r][c].is_zero() {
                    continue;
                }
                let f = a[r][c].clone();
                for j in 0..n {
                    a[r][j] = &a[r][j] - &(&f * &a[c][j]);
                    inv[r][j] = &inv[r][j] - &(&f * &inv[c][j]);
                }
            }
        }
        Some(LinMap {
            dim: n,
            entries: inv.into_iter().flatten().collect(),
        })
    }

    /// Inverse, or a "not bijective" error naming the map.
    pub fn invert_named(&self, name: &str) -> Result<LinMap, FieldError> {
        self.inverse()
            .ok_or_else(|| FieldError::NotBijective(name.to_string()))
    }
}

impl Index<(usize, usize)> for LinMap {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        self.entry(i, j)
    }
}

/// Solves `rows · x = rhs` exactly. Returns one solution (free variables set
/// to zero) or `None` when the system is inconsistent.
pub fn solve_linear(kind: FieldKind, rows: &[Vec<Scalar>], rhs: &[Scalar]) -> Option<Vec<Scalar>> {
    let n_vars = rows.first().map_or(0, Vec::len);
    let mut aug: Vec<Vec<Scalar>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut row = r.clone();
            row.push(b.clone());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for c in 0..n_vars {
        let Some(p) = (rank..aug.len()).find(|&r| !aug[r][c].is_zero()) else {
            continue;
        };
        aug.swap(rank, p);
        let inv = aug[rank][c].inverse().expect("pivot is nonzero");
        for x in aug[rank].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..aug.len() {
            if r == rank || aug[r][c].is_zero() {
                continue;
            }
            let f = aug[r][c].clone();
            for j in 0..=n_vars {
                let delta = &f * &aug[rank][j];
                aug[r][j] = &aug[r][j] - &delta;
            }
        }
        pivots.push(c);
        rank += 1;
    }
    if aug[rank..].iter().any(|row| !row[n_vars].is_zero()) {
        return None;
    }
    let mut x = vec![kind.zero(); n_vars];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = aug[r][n_vars].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Scalar {
        FieldKind::Rational.from_i64(n)
    }

    fn m(rows: &[&[i64]]) -> LinMap {
        LinMap::from_rows(rows.iter().map(|r| r.iter().map(|&v| q(v)).collect()).collect()).unwrap()
    }

    #[test]
    fn identity_inverse() {
        let id = LinMap::identity(FieldKind::Rational, 3);
        assert_eq!(id.inverse().unwrap(), id);
    }

    #[test]
    fn involution_inverse() {
        let s = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(s.inverse().unwrap(), s);
    }

    #[test]
    fn shear_inverse() {
        let f = m(&[&[1, 1], &[0, 1]]);
        let g = f.inverse().unwrap();
        assert_eq!(g, m(&[&[1, -1], &[0, 1]]));
        // direct multiplication, both orders
        assert!(g.compose(&f).is_identity());
        assert!(f.compose(&g).is_identity());
    }

    #[test]
    fn singular_map_is_named() {
        let f = m(&[&[1, 2], &[2, 4]]);
        assert_eq!(
            f.invert_named("alpha"),
            Err(FieldError::NotBijective("alpha".into()))
        );
    }

    #[test]
    fn column_action_convention() {
        // F e_0 = e_0, F e_1 = 2 e_0 + 3 e_1
        let f = m(&[&[1, 2], &[0, 3]]);
        assert_eq!(f.apply(&[q(0), q(1)]).into_inner(), vec![q(2), q(3)]);
        assert_eq!(f.column(1).into_inner(), vec![q(2), q(3)]);
    }

    #[test]
    fn from_rows_rejects_ragged_and_mixed() {
        assert!(LinMap::from_rows(vec![vec![q(1)], vec![q(1), q(2)]]).is_err());
        let p = Scalar::prime(1, 3).unwrap();
        assert!(LinMap::from_rows(vec![vec![q(1), p.clone()], vec![p.clone(), p]]).is_err());
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let rows = vec![vec![q(1), q(1)], vec![q(2), q(2)]];
        let x = solve_linear(FieldKind::Rational, &rows, &[q(3), q(6)]).unwrap();
        assert_eq!(&x[0] + &x[1], q(3));
        assert!(solve_linear(FieldKind::Rational, &rows, &[q(3), q(5)]).is_none());
    }
}
