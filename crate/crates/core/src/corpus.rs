//! Built-in algebras and deterministic instance generators.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::exactfield::{BilinearMap, FieldKind, LinMap, Scalar, Tensor2, Vector};
use crate::structures::{check_bihom_algebra, multiplicative_witness, AlgebraData, StructureMaps};

/// A named algebra with its structure maps.
#[derive(Clone, Debug)]
pub struct Named {
    pub name: String,
    pub alg: AlgebraData,
    pub maps: StructureMaps,
}

fn vec_of(kind: FieldKind, v: &[i64]) -> Vector {
    Vector::new(v.iter().map(|&x| kind.from_i64(x)).collect())
}

fn diag(kind: FieldKind, d: &[i64]) -> LinMap {
    LinMap::from_fn(kind, d.len(), |i, j| if i == j { kind.from_i64(d[i]) } else { kind.zero() })
}

/// Builds structure constants from `(i, j, k, c)` entries.
pub fn table(kind: FieldKind, n: usize, entries: &[(usize, usize, usize, i64)]) -> BilinearMap {
    let mut flat = vec![kind.zero(); n * n * n];
    for &(i, j, k, c) in entries {
        flat[(i * n + j) * n + k] = kind.from_i64(c);
    }
    BilinearMap::from_flat(n, flat).expect("table size")
}

/// The ground field as a 1-dimensional algebra with unit `e`.
pub fn field(kind: FieldKind) -> (AlgebraData, StructureMaps) {
    let alg = AlgebraData::new(table(kind, 1, &[(0, 0, 0, 1)]), Some(vec_of(kind, &[1]))).unwrap();
    (alg, StructureMaps::identity(kind, 1))
}

pub fn field_q() -> (AlgebraData, StructureMaps) {
    field(FieldKind::Rational)
}

/// `K[x]/(x²)` on the basis `(u, x)` with unit `u`.
pub fn dual_numbers(kind: FieldKind) -> (AlgebraData, StructureMaps) {
    let mul = table(kind, 2, &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)]);
    let alg = AlgebraData::new(mul, Some(vec_of(kind, &[1, 0]))).unwrap();
    (alg, StructureMaps::identity(kind, 2))
}

/// Upper-triangular 2×2 matrices on the basis `(e11, e12, e22)`.
pub fn upper_triangular_in(kind: FieldKind) -> (AlgebraData, StructureMaps) {
    let mul = table(
        kind,
        3,
        &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 2, 1, 1), (2, 2, 2, 1)],
    );
    let alg = AlgebraData::new(mul, Some(vec_of(kind, &[1, 0, 1]))).unwrap();
    (alg, StructureMaps::identity(kind, 3))
}

pub fn upper_triangular() -> (AlgebraData, StructureMaps) {
    upper_triangular_in(FieldKind::Rational)
}

/// `K^n` with orthogonal idempotents and unit `Σ e_i`.
pub fn diagonal(kind: FieldKind, n: usize) -> (AlgebraData, StructureMaps) {
    let entries: Vec<_> = (0..n).map(|i| (i, i, i, 1)).collect();
    let alg = AlgebraData::new(table(kind, n, &entries), Some(Vector::new(vec![kind.one(); n]))).unwrap();
    (alg, StructureMaps::identity(kind, n))
}

/// The product `μ∘(α⊗β)`. BiHom-associative whenever `μ` is associative and
/// `α, β` are commuting algebra morphisms; a unit of `μ` stays a unit.
pub fn yau_twist(mul: &BilinearMap, alpha: &LinMap, beta: &LinMap) -> BilinearMap {
    let n = mul.dim();
    BilinearMap::from_fn(n, |i, j| mul.apply(&alpha.column(i), &beta.column(j)))
}

/// Twists an associative algebra by commuting automorphisms `α, β` and
/// records `ψ, ω` as the remaining structure maps.
pub fn twisted(alg: &AlgebraData, alpha: LinMap, beta: LinMap, psi: LinMap, omega: LinMap) -> (AlgebraData, StructureMaps) {
    let mul = yau_twist(alg.mul(), &alpha, &beta);
    (alg.with_mul(mul), StructureMaps::new(alpha, beta, psi, omega))
}

/// `F_2 × F_2` twisted by the swap of the two idempotents.
pub fn f2_swap() -> (AlgebraData, StructureMaps) {
    let kind = FieldKind::Prime(2);
    let (base, _) = diagonal(kind, 2);
    let swap = LinMap::from_rows(vec![vec![kind.zero(), kind.one()], vec![kind.one(), kind.zero()]]).unwrap();
    let id = base.identity();
    twisted(&base, swap, id.clone(), id.clone(), id)
}

/// Dual numbers twisted by `x ↦ c x` in both `α` and `β`, with `ψ = ω = α`.
pub fn dual_numbers_scaled(kind: FieldKind, c: i64) -> (AlgebraData, StructureMaps) {
    let (base, _) = dual_numbers(kind);
    let a = diag(kind, &[1, c]);
    twisted(&base, a.clone(), a.clone(), a.clone(), a)
}

/// Upper-triangular matrices twisted by `e12 ↦ t e12` in `α` only.
pub fn upper_triangular_scaled(kind: FieldKind, t: i64) -> (AlgebraData, StructureMaps) {
    let (base, _) = upper_triangular_in(kind);
    let a = diag(kind, &[1, t, 1]);
    let id = base.identity();
    twisted(&base, a, id.clone(), id.clone(), id)
}

/// All built-in algebras over `kind`, untwisted and twisted.
pub fn builtin(kind: FieldKind) -> Vec<Named> {
    let mut out = Vec::new();
    let mut push = |name: &str, (alg, maps): (AlgebraData, StructureMaps)| {
        out.push(Named {
            name: name.to_string(),
            alg,
            maps,
        })
    };
    push("field", field(kind));
    push("dual-numbers", dual_numbers(kind));
    push("diagonal-2", diagonal(kind, 2));
    push("upper-triangular", upper_triangular_in(kind));
    push("diagonal-3", diagonal(kind, 3));
    match kind {
        FieldKind::Prime(2) => push("f2-swap", f2_swap()),
        FieldKind::Prime(p) if p > 2 => {
            push("dual-numbers-scaled", dual_numbers_scaled(kind, -1));
            push("upper-triangular-scaled", upper_triangular_scaled(kind, 2));
        }
        FieldKind::Rational => {
            push("dual-numbers-scaled", dual_numbers_scaled(kind, -1));
            push("upper-triangular-scaled", upper_triangular_scaled(kind, 2));
        }
        _ => {}
    }
    out
}

/// All invertible `n×n` matrices over a small prime field that are algebra
/// automorphisms of `mul` (and fix the unit, if any).
pub fn automorphisms(alg: &AlgebraData) -> Vec<LinMap> {
    let kind = alg.kind();
    let elems = kind.elements().expect("finite field");
    let n = alg.dim();
    let p = elems.len();
    let total = p.pow((n * n) as u32);
    let mut out = Vec::new();
    for code in 0..total {
        let mut c = code;
        let mut rows = vec![vec![kind.zero(); n]; n];
        for slot in (0..n * n).rev() {
            rows[slot / n][slot % n] = elems[c % p].clone();
            c /= p;
        }
        let f = LinMap::from_rows(rows).unwrap();
        if f.inverse().is_none() || multiplicative_witness(alg.mul(), &f).is_some() {
            continue;
        }
        if let Some(u) = alg.unit() {
            if &f.apply(u) != u {
                continue;
            }
        }
        out.push(f);
    }
    out
}

/// Deterministic random source for generated corpora.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_scalar(rng: &mut ChaCha8Rng, kind: FieldKind, bound: i64) -> Scalar {
    kind.from_i64(rng.gen_range(-bound..=bound))
}

pub fn random_map(rng: &mut ChaCha8Rng, kind: FieldKind, n: usize, bound: i64) -> LinMap {
    LinMap::from_fn(kind, n, |_, _| random_scalar(rng, kind, bound))
}

pub fn random_table(rng: &mut ChaCha8Rng, kind: FieldKind, n: usize, bound: i64) -> BilinearMap {
    let flat = (0..n * n * n).map(|_| random_scalar(rng, kind, bound)).collect();
    BilinearMap::from_flat(n, flat).unwrap()
}

pub fn random_tensor(rng: &mut ChaCha8Rng, kind: FieldKind, n: usize, bound: i64) -> Tensor2 {
    Tensor2::from_flat(n, (0..n * n).map(|_| random_scalar(rng, kind, bound)).collect()).unwrap()
}

/// Every built-in algebra over `kind` with every pair of commuting
/// automorphisms as `(α, β)`, Yau-twisted. Only for small finite fields.
pub fn twisted_family(kind: FieldKind, max_dim: usize) -> Vec<Named> {
    let mut out = Vec::new();
    for base in builtin(kind) {
        if base.alg.dim() > max_dim || !base.maps.is_identity() {
            continue;
        }
        let auts = automorphisms(&base.alg);
        for (i, a) in auts.iter().enumerate() {
            for (j, b) in auts.iter().enumerate() {
                if !a.commutes_with(b) {
                    continue;
                }
                let (alg, maps) = twisted(&base.alg, a.clone(), b.clone(), a.clone(), b.clone());
                debug_assert!(check_bihom_algebra(&alg, &maps).unwrap().passed());
                out.push(Named {
                    name: format!("{}-twist-{i}-{j}", base.name),
                    alg,
                    maps,
                });
            }
        }
    }
    out
}
