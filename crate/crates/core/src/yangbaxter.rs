//! Twisted leg products in `A⊗A⊗A`, weighted Yang-Baxter residues and an
//! exhaustive solver over prime fields.
//!
//! With `r = Σ r¹⊗r²` and `s = Σ s¹⊗s²`:
//!
//! * `r12s23 = α(r¹) ⊗ r²s¹ ⊗ β(s²)`
//! * `r13s12 = ω(r¹)s¹ ⊗ β(s²) ⊗ αψ(r²)`
//! * `r23s13 = βω(s¹) ⊗ α(r¹) ⊗ r²ψ(s²)`
//! * `r13 = ω(r¹) ⊗ 1 ⊗ ψ(r²)`

use crate::exactfield::{check_dim, FieldKind, LinMap, Scalar, Tensor2, Tensor3, Vector};
use crate::par::{filter_map_range, Execution};
use crate::report::BihomError;
use crate::structures::{AlgebraData, StructureMaps};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LegKind {
    /// `r12 s23`
    P12x23,
    /// `r13 s12`
    P13x12,
    /// `r23 s13`
    P23x13,
}

/// `first` supplies the left letter of the kind, `second` the right one.
pub fn leg_product(kind: LegKind, first: &Tensor2, second: &Tensor2, alg: &AlgebraData, maps: &StructureMaps) -> Tensor3 {
    let n = alg.dim();
    let f = alg.kind();
    let col = |m: &LinMap, i: usize| m.column(i);
    let mut out = Tensor3::zero(f, n);
    match kind {
        LegKind::P12x23 => {
            for (a, b, rc) in first.terms() {
                let x = col(&maps.alpha, a);
                for (c, d, sc) in second.terms() {
                    let y = alg.mul().on_basis(b, c);
                    out.add_simple(&(rc * sc), &x, y, &col(&maps.beta, d));
                }
            }
        }
        LegKind::P13x12 => {
            let ap = maps.alpha.compose(&maps.psi);
            for (a, b, rc) in first.terms() {
                let wa = col(&maps.omega, a);
                let z = col(&ap, b);
                for (c, d, sc) in second.terms() {
                    let x = alg.product(&wa, &alg.basis(c));
                    out.add_simple(&(rc * sc), &x, &col(&maps.beta, d), &z);
                }
            }
        }
        LegKind::P23x13 => {
            let bw = maps.beta.compose(&maps.omega);
            for (a, b, rc) in first.terms() {
                let y = col(&maps.alpha, a);
                for (c, d, sc) in second.terms() {
                    let z = alg.product(&alg.basis(b), &col(&maps.psi, d));
                    out.add_simple(&(rc * sc), &col(&bw, c), &y, &z);
                }
            }
        }
    }
    out
}

/// `ω(r¹) ⊗ 1 ⊗ ψ(r²)`.
pub fn embed_13(r: &Tensor2, alg: &AlgebraData, maps: &StructureMaps) -> Result<Tensor3, BihomError> {
    let unit = alg.require_unit()?;
    let mut out = Tensor3::zero(alg.kind(), alg.dim());
    for (a, b, c) in r.terms() {
        out.add_simple(c, &maps.omega.column(a), unit, &maps.psi.column(b));
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YbeInstance {
    pub alg: AlgebraData,
    pub maps: StructureMaps,
    pub r: Tensor2,
    pub s: Tensor2,
    pub lambda: Scalar,
    pub gamma: Scalar,
}

impl YbeInstance {
    pub fn new(alg: AlgebraData, maps: StructureMaps, r: Tensor2, s: Tensor2, lambda: Scalar, gamma: Scalar) -> Result<Self, BihomError> {
        let n = alg.dim();
        maps.check_dims(n)?;
        check_dim("r", n, r.dim())?;
        check_dim("s", n, s.dim())?;
        let kind = alg.kind();
        for k in [r.kind(), s.kind(), lambda.kind(), gamma.kind(), maps.alpha.kind()] {
            if k != kind {
                return Err(crate::exactfield::FieldError::MixedFields(kind, k).into());
            }
        }
        Ok(YbeInstance {
            alg,
            maps,
            r,
            s,
            lambda,
            gamma,
        })
    }
}

/// Defects of the two weighted equations; both zero iff `(r, s)` is a pair
/// of the given weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Residue {
    pub first: Tensor3,
    pub second: Tensor3,
}

impl Residue {
    pub fn is_zero(&self) -> bool {
        self.first.is_zero() && self.second.is_zero()
    }
}

/// `r13r12 − r12r23 + s23r13` and `s13r12 − s12s23 + s23s13`, without weight terms.
pub fn homogeneous_parts(r: &Tensor2, s: &Tensor2, alg: &AlgebraData, maps: &StructureMaps) -> (Tensor3, Tensor3) {
    let first = leg_product(LegKind::P13x12, r, r, alg, maps)
        .sub(&leg_product(LegKind::P12x23, r, r, alg, maps))
        .add(&leg_product(LegKind::P23x13, s, r, alg, maps));
    let second = leg_product(LegKind::P13x12, s, r, alg, maps)
        .sub(&leg_product(LegKind::P12x23, s, s, alg, maps))
        .add(&leg_product(LegKind::P23x13, s, s, alg, maps));
    (first, second)
}

pub fn abhybp_residue(inst: &YbeInstance) -> Result<Residue, BihomError> {
    let (mut first, mut second) = homogeneous_parts(&inst.r, &inst.s, &inst.alg, &inst.maps);
    if !inst.lambda.is_zero() {
        first = first.add(&embed_13(&inst.r, &inst.alg, &inst.maps)?.scale(&inst.lambda));
    }
    if !inst.gamma.is_zero() {
        second = second.add(&embed_13(&inst.s, &inst.alg, &inst.maps)?.scale(&inst.gamma));
    }
    Ok(Residue { first, second })
}

/// `(F⊗F)(t) = t`.
pub fn check_invariance(t: &Tensor2, f: &LinMap) -> bool {
    t.dim() == f.dim() && &t.map_legs(f, f) == t
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMode {
    /// `s = r`.
    Diagonal,
    /// Independent `r` and `s`.
    Pairs,
}

#[derive(Clone, Copy, Debug)]
pub struct SearchOptions {
    pub max_candidates: u128,
    pub max_dim: usize,
    pub execution: Execution,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            max_candidates: 1 << 24,
            max_dim: 3,
            execution: Execution::Parallel,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub r: Tensor2,
    pub s: Tensor2,
}

/// Number of candidates the search would enumerate, saturating.
pub fn candidate_count(p: u64, n: usize, mode: SearchMode) -> u128 {
    let slots = (n * n) as u32 * if mode == SearchMode::Pairs { 2 } else { 1 };
    (p as u128).checked_pow(slots).unwrap_or(u128::MAX)
}

fn decode(code: u64, p: u64, n: usize, kind: FieldKind) -> Tensor2 {
    let mut c = code;
    let mut coeffs = vec![kind.zero(); n * n];
    for slot in (0..n * n).rev() {
        coeffs[slot] = kind.from_i64((c % p) as i64);
        c /= p;
    }
    Tensor2::from_flat(n, coeffs).expect("grid size")
}

/// Every `r` (and `s` in pairs mode) with zero residue, in lexicographic
/// coefficient order with residues `0..p` as digits.
pub fn search_solutions(
    alg: &AlgebraData,
    maps: &StructureMaps,
    weight: (&Scalar, &Scalar),
    mode: SearchMode,
    opts: SearchOptions,
) -> Result<Vec<Solution>, BihomError> {
    let kind = alg.kind();
    let FieldKind::Prime(p) = kind else {
        return Err(BihomError::Search("search requires a finite field".into()));
    };
    let n = alg.dim();
    maps.check_dims(n)?;
    if n > opts.max_dim {
        return Err(BihomError::Search(format!(
            "dimension {n} exceeds the search bound {}",
            opts.max_dim
        )));
    }
    let slots = n * n * if mode == SearchMode::Pairs { 2 } else { 1 };
    let count = candidate_count(p, n, mode);
    if count >= opts.max_candidates {
        return Err(BihomError::Search(format!(
            "search space of {p}^{slots} = {} candidates exceeds the bound {}",
            if count == u128::MAX { "more than 2^128".to_string() } else { count.to_string() },
            opts.max_candidates
        )));
    }
    let (lambda, gamma) = weight;
    if (!lambda.is_zero() || !gamma.is_zero()) && alg.unit().is_none() {
        return Err(BihomError::UnitRequired);
    }
    let per = p.pow((n * n) as u32);
    let mut found = filter_map_range(opts.execution, 0..count as u64, |code| {
        let (r, s) = match mode {
            SearchMode::Diagonal => {
                let r = decode(code, p, n, kind);
                (r.clone(), r)
            }
            SearchMode::Pairs => (decode(code / per, p, n, kind), decode(code % per, p, n, kind)),
        };
        let inst = YbeInstance {
            alg: alg.clone(),
            maps: maps.clone(),
            r,
            s,
            lambda: lambda.clone(),
            gamma: gamma.clone(),
        };
        let res = abhybp_residue(&inst).expect("unit checked above");
        res.is_zero().then_some((code, Solution { r: inst.r, s: inst.s }))
    });
    found.sort_by_key(|(code, _)| *code);
    Ok(found.into_iter().map(|(_, s)| s).collect())
}

/// The classical left-multiplication-sandwich operator `a ↦ r¹ a r²`
/// twisted as `β²ψ(r¹)(α⁻¹β⁻¹(a) αω(r²))`.
pub fn operator_from_tensor(r: &Tensor2, alg: &AlgebraData, maps: &StructureMaps) -> Result<LinMap, BihomError> {
    let ainv = maps.alpha.invert_named("alpha")?;
    let binv = maps.beta.invert_named("beta")?;
    let pre = ainv.compose(&binv);
    let left = maps.beta.compose(&maps.beta).compose(&maps.psi);
    let right = maps.alpha.compose(&maps.omega);
    let n = alg.dim();
    let cols: Vec<Vector> = (0..n)
        .map(|j| {
            let a = pre.column(j);
            let mut out = alg.zero_vector();
            for (x, y, c) in r.terms() {
                let inner = alg.product(&a, &right.column(y));
                out.add_scaled(c, &alg.product(&left.column(x), &inner));
            }
            out
        })
        .collect();
    Ok(LinMap::from_columns(&cols))
}
