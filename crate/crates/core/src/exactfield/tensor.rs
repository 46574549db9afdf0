use super::{check_dim, FieldError, FieldKind, LinMap, Scalar, Vector};

/// An element `Σ coeffs[i][j] e_i⊗e_j` of `A⊗A`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tensor2 {
    n: usize,
    coeffs: Vec<Scalar>,
}

/// An element of `A⊗A⊗A`, stored row-major as `coeffs[(i*n + j)*n + k]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tensor3 {
    n: usize,
    coeffs: Vec<Scalar>,
}

macro_rules! dense_common {
    ($ty:ident, $rank:expr) => {
        impl $ty {
            pub fn zero(kind: FieldKind, n: usize) -> Self {
                $ty {
                    n,
                    coeffs: vec![kind.zero(); n.pow($rank)],
                }
            }

            pub fn from_flat(n: usize, coeffs: Vec<Scalar>) -> Result<Self, FieldError> {
                check_dim(stringify!($ty), n.pow($rank), coeffs.len())?;
                Ok($ty { n, coeffs })
            }

            pub fn dim(&self) -> usize {
                self.n
            }

            pub fn kind(&self) -> FieldKind {
                self.coeffs[0].kind()
            }

            pub fn flat(&self) -> &[Scalar] {
                &self.coeffs
            }

            pub fn is_zero(&self) -> bool {
                self.coeffs.iter().all(Scalar::is_zero)
            }

            pub fn add(&self, other: &Self) -> Self {
                assert_eq!(self.n, other.n, "tensor dimension mismatch");
                $ty {
                    n: self.n,
                    coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
                }
            }

            pub fn sub(&self, other: &Self) -> Self {
                assert_eq!(self.n, other.n, "tensor dimension mismatch");
                $ty {
                    n: self.n,
                    coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
                }
            }

            pub fn scale(&self, c: &Scalar) -> Self {
                $ty {
                    n: self.n,
                    coeffs: self.coeffs.iter().map(|a| c * a).collect(),
                }
            }

            pub fn neg(&self) -> Self {
                $ty {
                    n: self.n,
                    coeffs: self.coeffs.iter().map(Scalar::negated).collect(),
                }
            }

            pub(crate) fn add_at(&mut self, idx: usize, v: &Scalar) {
                if !v.is_zero() {
                    let updated = &self.coeffs[idx] + v;
                    self.coeffs[idx] = updated;
                }
            }
        }
    };
}

dense_common!(Tensor2, 2);
dense_common!(Tensor3, 3);

impl Tensor2 {
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self, FieldError> {
        let n = rows.len();
        let mut coeffs = Vec::with_capacity(n * n);
        for row in rows {
            check_dim("tensor row", n, row.len())?;
            coeffs.extend(row);
        }
        Ok(Tensor2 { n, coeffs })
    }

    pub fn rows(&self) -> Vec<Vec<Scalar>> {
        self.coeffs.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.coeffs[i * self.n + j]
    }

    pub fn basis(kind: FieldKind, n: usize, i: usize, j: usize) -> Self {
        let mut t = Self::zero(kind, n);
        t.coeffs[i * n + j] = kind.one();
        t
    }

    /// `a⊗b`.
    pub fn simple(a: &[Scalar], b: &[Scalar]) -> Self {
        let n = a.len();
        let mut coeffs = Vec::with_capacity(n * n);
        for x in a {
            for y in b {
                coeffs.push(x * y);
            }
        }
        Tensor2 { n, coeffs }
    }

    /// `(F⊗G)(self)`.
    pub fn map_legs(&self, f: &LinMap, g: &LinMap) -> Tensor2 {
        let n = self.n;
        // (F⊗G)t = F · t · Gᵀ in matrix terms
        let mut tmp = Tensor2::zero(self.kind(), n);
        for i in 0..n {
            for j in 0..n {
                let c = self.get(i, j);
                if c.is_zero() {
                    continue;
                }
                for b in 0..n {
                    let gb = g.entry(b, j);
                    if !gb.is_zero() {
                        tmp.add_at(i * n + b, &(c * gb));
                    }
                }
            }
        }
        let mut out = Tensor2::zero(self.kind(), n);
        for i in 0..n {
            for b in 0..n {
                let c = tmp.get(i, b);
                if c.is_zero() {
                    continue;
                }
                for a in 0..n {
                    let fa = f.entry(a, i);
                    if !fa.is_zero() {
                        out.add_at(a * n + b, &(c * fa));
                    }
                }
            }
        }
        out
    }

    /// Iterator over the nonzero terms `(i, j, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        let n = self.n;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(idx, c)| (idx / n, idx % n, c))
    }

    /// Swaps the two legs.
    pub fn flip(&self) -> Tensor2 {
        let n = self.n;
        let mut out = Tensor2::zero(self.kind(), n);
        for (i, j, c) in self.terms() {
            out.coeffs[j * n + i] = c.clone();
        }
        out
    }
}

impl Tensor3 {
    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.coeffs[(i * self.n + j) * self.n + k]
    }

    /// `a⊗b⊗c`.
    pub fn simple(a: &[Scalar], b: &[Scalar], c: &[Scalar]) -> Self {
        let n = a.len();
        let mut coeffs = Vec::with_capacity(n * n * n);
        for x in a {
            for y in b {
                let xy = x * y;
                for z in c {
                    coeffs.push(&xy * z);
                }
            }
        }
        Tensor3 { n, coeffs }
    }

    pub fn add_simple(&mut self, coeff: &Scalar, a: &[Scalar], b: &[Scalar], c: &[Scalar]) {
        if coeff.is_zero() {
            return;
        }
        let n = self.n;
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let cx = coeff * x;
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let cxy = &cx * y;
                for (k, z) in c.iter().enumerate() {
                    if !z.is_zero() {
                        self.add_at((i * n + j) * n + k, &(&cxy * z));
                    }
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> {
        let n = self.n;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(idx, c)| (idx / (n * n), (idx / n) % n, idx % n, c))
    }

    /// `(F⊗G⊗H)(self)`.
    pub fn map_legs(&self, f: &LinMap, g: &LinMap, h: &LinMap) -> Tensor3 {
        let mut out = Tensor3::zero(self.kind(), self.n);
        for (i, j, k, c) in self.terms() {
            out.add_simple(c, &f.column(i), &g.column(j), &h.column(k));
        }
        out
    }

    /// First index triple, in lexicographic order, where the tensor is nonzero.
    pub fn first_nonzero(&self) -> Option<(usize, usize, usize)> {
        self.terms().next().map(|(i, j, k, _)| (i, j, k))
    }
}

/// A bilinear map `A⊗A → A`: `(e_i, e_j) ↦ Σ_k table[i][j][k] e_k`.
///
/// Structure constants of an algebra and every derived product share this
/// representation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BilinearMap {
    n: usize,
    table: Vec<Scalar>,
}

impl BilinearMap {
    pub fn zero(kind: FieldKind, n: usize) -> Self {
        BilinearMap {
            n,
            table: vec![kind.zero(); n * n * n],
        }
    }

    pub fn from_grid(grid: Vec<Vec<Vec<Scalar>>>) -> Result<Self, FieldError> {
        let n = grid.len();
        let mut table = Vec::with_capacity(n * n * n);
        for plane in grid {
            check_dim("bilinear map rows", n, plane.len())?;
            for row in plane {
                check_dim("bilinear map entries", n, row.len())?;
                table.extend(row);
            }
        }
        Ok(BilinearMap { n, table })
    }

    pub fn from_flat(n: usize, table: Vec<Scalar>) -> Result<Self, FieldError> {
        check_dim("bilinear map", n * n * n, table.len())?;
        Ok(BilinearMap { n, table })
    }

    /// Builds the table from the images of basis pairs.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Vector) -> Self {
        let mut table = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                let v = f(i, j);
                assert_eq!(v.len(), n, "image length mismatch");
                table.extend(v.into_inner());
            }
        }
        BilinearMap { n, table }
    }

    pub fn grid(&self) -> Vec<Vec<Vec<Scalar>>> {
        self.table
            .chunks(self.n * self.n)
            .map(|plane| plane.chunks(self.n).map(|r| r.to_vec()).collect())
            .collect()
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> FieldKind {
        self.table[0].kind()
    }

    pub fn flat(&self) -> &[Scalar] {
        &self.table
    }

    pub fn coeff(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.table[(i * self.n + j) * self.n + k]
    }

    pub fn on_basis(&self, i: usize, j: usize) -> &[Scalar] {
        let start = (i * self.n + j) * self.n;
        &self.table[start..start + self.n]
    }

    pub fn apply(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        let mut out = Vector::zeros(self.kind(), self.n);
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                out.add_scaled(&(x * y), self.on_basis(i, j));
            }
        }
        out
    }

    /// Applies the map to an element of `A⊗A`.
    pub fn apply_tensor(&self, t: &Tensor2) -> Vector {
        let mut out = Vector::zeros(self.kind(), self.n);
        for (i, j, c) in t.terms() {
            out.add_scaled(c, self.on_basis(i, j));
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        BilinearMap {
            n: self.n,
            table: self.table.iter().zip(&other.table).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        BilinearMap {
            n: self.n,
            table: self.table.iter().zip(&other.table).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        BilinearMap {
            n: self.n,
            table: self.table.iter().map(|a| c * a).collect(),
        }
    }

    /// `F ∘ self`.
    pub fn then(&self, f: &LinMap) -> Self {
        BilinearMap::from_fn(self.n, |i, j| f.apply(self.on_basis(i, j)))
    }

    pub fn is_zero(&self) -> bool {
        self.table.iter().all(Scalar::is_zero)
    }
}

/// A linear map `A → A⊗A`, stored as the images of the basis vectors.
/// Comultiplications and BiHom-derivations both use this shape.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoMap {
    images: Vec<Tensor2>,
}

impl CoMap {
    pub fn new(images: Vec<Tensor2>) -> Result<Self, FieldError> {
        let n = images.len();
        for t in &images {
            check_dim("comultiplication image", n, t.dim())?;
        }
        Ok(CoMap { images })
    }

    pub fn zero(kind: FieldKind, n: usize) -> Self {
        CoMap {
            images: vec![Tensor2::zero(kind, n); n],
        }
    }

    pub fn from_fn(n: usize, f: impl FnMut(usize) -> Tensor2) -> Self {
        CoMap {
            images: (0..n).map(f).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.images.len()
    }

    pub fn kind(&self) -> FieldKind {
        self.images[0].kind()
    }

    pub fn images(&self) -> &[Tensor2] {
        &self.images
    }

    pub fn on_basis(&self, j: usize) -> &Tensor2 {
        &self.images[j]
    }

    pub fn apply(&self, v: &[Scalar]) -> Tensor2 {
        let n = self.dim();
        let mut out = Tensor2::zero(self.kind(), n);
        for (j, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (idx, t) in self.images[j].flat().iter().enumerate() {
                if !t.is_zero() {
                    out.add_at(idx, &(c * t));
                }
            }
        }
        out
    }

    /// `self ∘ F`.
    pub fn after(&self, f: &LinMap) -> CoMap {
        CoMap::from_fn(self.dim(), |j| self.apply(&f.column(j)))
    }

    /// `(F⊗G) ∘ self`.
    pub fn then_legs(&self, f: &LinMap, g: &LinMap) -> CoMap {
        CoMap::from_fn(self.dim(), |j| self.images[j].map_legs(f, g))
    }

    /// `(self⊗F)(t)`.
    pub fn then_first_leg(&self, t: &Tensor2, f: &LinMap) -> Tensor3 {
        let n = self.dim();
        let mut out = Tensor3::zero(self.kind(), n);
        for (a, b, c) in t.terms() {
            let fb = f.column(b);
            for (i, j, d) in self.images[a].terms() {
                let cd = c * d;
                for (k, x) in fb.iter().enumerate() {
                    if !x.is_zero() {
                        out.add_at((i * n + j) * n + k, &(&cd * x));
                    }
                }
            }
        }
        out
    }

    /// `(F⊗self)(t)`.
    pub fn then_second_leg(&self, f: &LinMap, t: &Tensor2) -> Tensor3 {
        let n = self.dim();
        let mut out = Tensor3::zero(self.kind(), n);
        for (a, b, c) in t.terms() {
            let fa = f.column(a);
            for (j, k, d) in self.images[b].terms() {
                let cd = c * d;
                for (i, x) in fa.iter().enumerate() {
                    if !x.is_zero() {
                        out.add_at((i * n + j) * n + k, &(&cd * x));
                    }
                }
            }
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> CoMap {
        CoMap::from_fn(self.dim(), |j| self.images[j].scale(c))
    }

    pub fn add(&self, other: &CoMap) -> CoMap {
        CoMap::from_fn(self.dim(), |j| self.images[j].add(&other.images[j]))
    }

    pub fn sub(&self, other: &CoMap) -> CoMap {
        CoMap::from_fn(self.dim(), |j| self.images[j].sub(&other.images[j]))
    }

    pub fn is_zero(&self) -> bool {
        self.images.iter().all(Tensor2::is_zero)
    }
}

/// A value that a contraction plan can act on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TensorValue {
    Vector(Vector),
    T2(Tensor2),
    T3(Tensor3),
}

impl TensorValue {
    pub fn rank(&self) -> usize {
        match self {
            TensorValue::Vector(_) => 1,
            TensorValue::T2(_) => 2,
            TensorValue::T3(_) => 3,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            TensorValue::Vector(v) => v.is_zero(),
            TensorValue::T2(t) => t.is_zero(),
            TensorValue::T3(t) => t.is_zero(),
        }
    }
}

/// A multilinear contraction step.
#[derive(Clone, Copy, Debug)]
pub enum Plan<'a> {
    /// Apply one linear map per leg.
    MapLegs(&'a [&'a LinMap]),
    /// Multiply legs `first` and `first + 1` with the given product,
    /// lowering the rank by one.
    MultiplyLegs {
        first: usize,
        product: &'a BilinearMap,
    },
}

/// Runs one contraction step exactly.
pub fn contract(t: &TensorValue, plan: Plan<'_>) -> Result<TensorValue, FieldError> {
    match plan {
        Plan::MapLegs(maps) => {
            check_dim("contraction plan legs", t.rank(), maps.len())?;
            Ok(match t {
                TensorValue::Vector(v) => TensorValue::Vector(maps[0].apply(v)),
                TensorValue::T2(x) => TensorValue::T2(x.map_legs(maps[0], maps[1])),
                TensorValue::T3(x) => TensorValue::T3(x.map_legs(maps[0], maps[1], maps[2])),
            })
        }
        Plan::MultiplyLegs { first, product } => {
            if first + 1 >= t.rank() {
                return Err(FieldError::DimensionMismatch {
                    what: "contraction leg index".into(),
                    expected: t.rank() - 1,
                    found: first + 1,
                });
            }
            Ok(match t {
                TensorValue::Vector(_) => unreachable!(),
                TensorValue::T2(x) => TensorValue::Vector(product.apply_tensor(x)),
                TensorValue::T3(x) => {
                    let n = x.dim();
                    let mut out = Tensor2::zero(x.kind(), n);
                    for (i, j, k, c) in x.terms() {
                        if first == 0 {
                            for (m, p) in product.on_basis(i, j).iter().enumerate() {
                                out.add_at(m * n + k, &(c * p));
                            }
                        } else {
                            for (m, p) in product.on_basis(j, k).iter().enumerate() {
                                out.add_at(i * n + m, &(c * p));
                            }
                        }
                    }
                    TensorValue::T2(out)
                }
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Scalar {
        FieldKind::Rational.from_i64(n)
    }

    fn dual_numbers() -> BilinearMap {
        // basis (u, x): u unit, x² = 0
        BilinearMap::from_fn(2, |i, j| match (i, j) {
            (0, 0) => Vector::new(vec![q(1), q(0)]),
            (0, 1) | (1, 0) => Vector::new(vec![q(0), q(1)]),
            _ => Vector::zeros(FieldKind::Rational, 2),
        })
    }

    #[test]
    fn identity_plan_is_noop() {
        let t = Tensor2::from_rows(vec![vec![q(1), q(2)], vec![q(3), q(4)]]).unwrap();
        let id = LinMap::identity(FieldKind::Rational, 2);
        let out = contract(&TensorValue::T2(t.clone()), Plan::MapLegs(&[&id, &id])).unwrap();
        assert_eq!(out, TensorValue::T2(t));
    }

    #[test]
    fn one_dim_leg_multiplication() {
        let mu = BilinearMap::from_fn(1, |_, _| Vector::new(vec![q(1)]));
        let e = Vector::new(vec![q(1)]);
        let t = TensorValue::T2(Tensor2::simple(&e, &e));
        let out = contract(&t, Plan::MultiplyLegs { first: 0, product: &mu }).unwrap();
        assert_eq!(out, TensorValue::Vector(e));
    }

    #[test]
    fn dual_number_square_vanishes() {
        let mu = dual_numbers();
        let x = Vector::basis(FieldKind::Rational, 2, 1);
        let t = TensorValue::T2(Tensor2::simple(&x, &x));
        assert!(contract(&t, Plan::MultiplyLegs { first: 0, product: &mu }).unwrap().is_zero());
        let t3 = TensorValue::T3(Tensor3::simple(&x, &x, &x));
        for first in 0..2 {
            assert!(contract(&t3, Plan::MultiplyLegs { first, product: &mu }).unwrap().is_zero());
        }
    }

    #[test]
    fn plan_rank_mismatch() {
        let id = LinMap::identity(FieldKind::Rational, 2);
        let t = TensorValue::T2(Tensor2::zero(FieldKind::Rational, 2));
        assert!(contract(&t, Plan::MapLegs(&[&id])).is_err());
        let mu = dual_numbers();
        assert!(contract(&t, Plan::MultiplyLegs { first: 1, product: &mu }).is_err());
    }

    #[test]
    fn map_legs_matches_simple_tensors() {
        let f = LinMap::from_rows(vec![vec![q(1), q(2)], vec![q(0), q(3)]]).unwrap();
        let g = LinMap::from_rows(vec![vec![q(0), q(1)], vec![q(5), q(1)]]).unwrap();
        let a = Vector::new(vec![q(2), q(-1)]);
        let b = Vector::new(vec![q(1), q(4)]);
        let t = Tensor2::simple(&a, &b);
        assert_eq!(t.map_legs(&f, &g), Tensor2::simple(&f.apply(&a), &g.apply(&b)));
        let t3 = Tensor3::simple(&a, &b, &a);
        assert_eq!(
            t3.map_legs(&f, &g, &f),
            Tensor3::simple(&f.apply(&a), &g.apply(&b), &f.apply(&a))
        );
    }
}
