//! Enumerators and independent classical oracles shared by the integration
//! targets. The oracles work on raw structure constants with explicit loops
//! and never call the library's checkers.

#![allow(dead_code)]

use bihom::exactfield::{BilinearMap, FieldKind, LinMap, Scalar, Tensor2};

/// Every `n×n` coefficient array over a small prime field, in a fixed order.
pub fn all_arrays(kind: FieldKind, n: usize) -> Vec<Vec<Scalar>> {
    let el = kind.elements().expect("finite field");
    let p = el.len();
    (0..p.pow((n * n) as u32))
        .map(|mut c| {
            (0..n * n)
                .map(|_| {
                    let x = el[c % p].clone();
                    c /= p;
                    x
                })
                .collect()
        })
        .collect()
}

pub fn all_tensors(kind: FieldKind, n: usize) -> Vec<Tensor2> {
    all_arrays(kind, n).into_iter().map(|v| Tensor2::from_flat(n, v).unwrap()).collect()
}

pub fn all_maps(kind: FieldKind, n: usize) -> Vec<LinMap> {
    all_arrays(kind, n)
        .into_iter()
        .map(|v| LinMap::from_rows(v.chunks(n).map(|r| r.to_vec()).collect()).unwrap())
        .collect()
}

type V = Vec<Scalar>;

/// Structure constants `c[i][j][k]` of a bilinear product.
pub struct Table {
    pub n: usize,
    pub c: Vec<Vec<Vec<Scalar>>>,
    pub kind: FieldKind,
}

impl Table {
    pub fn of(mul: &BilinearMap) -> Table {
        Table {
            n: mul.dim(),
            c: mul.grid(),
            kind: mul.kind(),
        }
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> V {
        let mut out = vec![self.kind.zero(); self.n];
        for i in 0..self.n {
            for j in 0..self.n {
                let ab = &a[i] * &b[j];
                for (k, o) in out.iter_mut().enumerate() {
                    *o = &*o + &(&ab * &self.c[i][j][k]);
                }
            }
        }
        out
    }

    pub fn e(&self, i: usize) -> V {
        let mut v = vec![self.kind.zero(); self.n];
        v[i] = self.kind.one();
        v
    }

    fn triples(&self) -> impl Iterator<Item = (V, V, V)> + '_ {
        let n = self.n;
        (0..n * n * n).map(move |t| (self.e(t / (n * n)), self.e((t / n) % n), self.e(t % n)))
    }
}

fn add(a: &[Scalar], b: &[Scalar]) -> V {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub(a: &[Scalar], b: &[Scalar]) -> V {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn apply(f: &LinMap, v: &[Scalar]) -> V {
    let n = v.len();
    (0..n)
        .map(|i| (0..n).fold(f.kind().zero(), |acc, j| &acc + &(f.entry(i, j) * &v[j])))
        .collect()
}

/// `(ab)c = a(bc)`.
pub fn classical_associative(t: &Table) -> bool {
    t.triples().all(|(a, b, c)| t.mul(&t.mul(&a, &b), &c) == t.mul(&a, &t.mul(&b, &c)))
}

/// `1a = a1 = a`.
pub fn classical_unit(t: &Table, unit: &[Scalar]) -> bool {
    (0..t.n).all(|a| t.mul(unit, &t.e(a)) == t.e(a) && t.mul(&t.e(a), unit) == t.e(a))
}

/// Residues of `r13r12 − r12r23 + s23r13 + λr13` and
/// `s13r12 − s12s23 + s23s13 + γs13` as dense `n³` arrays. With `x` at
/// `(i, j)` and `y` at `(k, l)`: `x13y12 = x¹y¹⊗y²⊗x²`,
/// `x12y23 = x¹⊗x²y¹⊗y²`, `x23y13 = y¹⊗x¹⊗x²y²`, `x13 = x¹⊗1⊗x²`.
pub fn classical_ybp_residue(t: &Table, unit: Option<&[Scalar]>, r: &Tensor2, s: &Tensor2, lambda: &Scalar, gamma: &Scalar) -> (V, V) {
    let n = t.n;
    let zero = t.kind.zero();
    let mut first = vec![zero.clone(); n * n * n];
    let mut second = first.clone();
    let term = |out: &mut V, coeff: &Scalar, a: &[Scalar], b: &[Scalar], d: &[Scalar]| {
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let idx = (i * n + j) * n + k;
                    out[idx] = &out[idx] + &(&(&(coeff * &a[i]) * &b[j]) * &d[k]);
                }
            }
        }
    };
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
    for &(i, j) in &pairs {
        for &(k, l) in &pairs {
            let (ei, ej, ek, el) = (t.e(i), t.e(j), t.e(k), t.e(l));
            let (eiek, ejek, ejel) = (t.mul(&ei, &ek), t.mul(&ej, &ek), t.mul(&ej, &el));
            let rr = r.get(i, j) * r.get(k, l);
            let sr = s.get(i, j) * r.get(k, l);
            let ss = s.get(i, j) * s.get(k, l);
            term(&mut first, &rr, &eiek, &el, &ej);
            term(&mut first, &-&rr, &ei, &ejek, &el);
            term(&mut first, &sr, &ek, &ei, &ejel);
            term(&mut second, &sr, &eiek, &el, &ej);
            term(&mut second, &-&ss, &ei, &ejek, &el);
            term(&mut second, &ss, &ek, &ei, &ejel);
        }
    }
    if let Some(u) = unit {
        for &(i, j) in &pairs {
            let (ei, ej) = (t.e(i), t.e(j));
            term(&mut first, &(lambda * r.get(i, j)), &ei, u, &ej);
            term(&mut second, &(gamma * s.get(i, j)), &ei, u, &ej);
        }
    }
    (first, second)
}

pub fn classical_ybp(t: &Table, unit: Option<&[Scalar]>, r: &Tensor2, s: &Tensor2, lambda: &Scalar, gamma: &Scalar) -> bool {
    let (a, b) = classical_ybp_residue(t, unit, r, s, lambda, gamma);
    a.iter().chain(&b).all(Scalar::is_zero)
}

/// Associativity plus `R(a)R(b) = R(R(a)b + aS(b)) + ξ(a, b)` and the same
/// for `S` with `ζ`.
pub fn classical_rb_system(t: &Table, r: &LinMap, s: &LinMap, xi: &BilinearMap, zeta: &BilinearMap) -> bool {
    let n = t.n;
    let identity = |p: &LinMap, curv: &BilinearMap| {
        (0..n).all(|a| {
            (0..n).all(|b| {
                let (ea, eb) = (t.e(a), t.e(b));
                let inner = add(&t.mul(&apply(r, &ea), &eb), &t.mul(&ea, &apply(s, &eb)));
                t.mul(&apply(p, &ea), &apply(p, &eb)) == add(&apply(p, &inner), curv.on_basis(a, b))
            })
        })
    };
    classical_associative(t) && identity(r, xi) && identity(s, zeta)
}

/// `(x≺y)≺z = x≺(y≺z + y≻z)`, `(x≻y)≺z = x≻(y≺z)`,
/// `(x≺y + x≻y)≻z = x≻(y≻z)`.
pub fn classical_dendriform(prec: &Table, succ: &Table) -> bool {
    prec.triples().all(|(x, y, z)| {
        let l = |a: &[Scalar], b: &[Scalar]| prec.mul(a, b);
        let g = |a: &[Scalar], b: &[Scalar]| succ.mul(a, b);
        l(&l(&x, &y), &z) == l(&x, &add(&l(&y, &z), &g(&y, &z)))
            && l(&g(&x, &y), &z) == g(&x, &l(&y, &z))
            && g(&add(&l(&x, &y), &g(&x, &y)), &z) == g(&x, &g(&y, &z))
    })
}

/// `(x∗y)∗z − x∗(y∗z)` symmetric in `x, y`.
pub fn classical_prelie(t: &Table) -> bool {
    t.triples().all(|(x, y, z)| {
        let assoc = |a: &[Scalar], b: &[Scalar]| sub(&t.mul(&t.mul(a, b), &z), &t.mul(a, &t.mul(b, &z)));
        assoc(&x, &y) == assoc(&y, &x)
    })
}
