//! BiHom-associative algebras, BiHom-coassociative coalgebras and their
//! (bi)modules, with exhaustive axiom checkers over basis tuples.

use crate::exactfield::{check_dim, BilinearMap, CoMap, FieldError, FieldKind, LinMap, Scalar, Tensor2, Tensor3, Vector};
use crate::report::{first_witness, require, BihomError, CheckReport, Construction};

/// Operations that realize a constructive statement.
pub const THEOREM_OPERATIONS: &[&str] = &["tensor_bimodule"];

/// Structure constants plus an optional unit. The unit, when present, is
/// nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraData {
    mul: BilinearMap,
    unit: Option<Vector>,
}

impl AlgebraData {
    pub fn new(mul: BilinearMap, unit: Option<Vector>) -> Result<Self, FieldError> {
        if let Some(u) = &unit {
            check_dim("unit", mul.dim(), u.len())?;
            if u.is_zero() {
                return Err(FieldError::Parse("unit must be nonzero".into()));
            }
        }
        Ok(AlgebraData { mul, unit })
    }

    pub fn dim(&self) -> usize {
        self.mul.dim()
    }

    pub fn kind(&self) -> FieldKind {
        self.mul.kind()
    }

    pub fn mul(&self) -> &BilinearMap {
        &self.mul
    }

    pub fn unit(&self) -> Option<&Vector> {
        self.unit.as_ref()
    }

    pub fn require_unit(&self) -> Result<&Vector, BihomError> {
        self.unit.as_ref().ok_or(BihomError::UnitRequired)
    }

    pub fn product(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        self.mul.apply(a, b)
    }

    pub fn without_unit(&self) -> AlgebraData {
        AlgebraData {
            mul: self.mul.clone(),
            unit: None,
        }
    }

    pub fn with_mul(&self, mul: BilinearMap) -> AlgebraData {
        AlgebraData {
            mul,
            unit: self.unit.clone(),
        }
    }

    pub fn basis(&self, i: usize) -> Vector {
        Vector::basis(self.kind(), self.dim(), i)
    }

    pub fn zero_vector(&self) -> Vector {
        Vector::zeros(self.kind(), self.dim())
    }

    pub fn identity(&self) -> LinMap {
        LinMap::identity(self.kind(), self.dim())
    }

    /// `μ(x⊗y)` leg-wise multiplication of the two legs of `t`.
    pub fn multiply(&self, t: &Tensor2) -> Vector {
        self.mul.apply_tensor(t)
    }

    /// `1⊗1`.
    pub fn unit_tensor(&self) -> Result<Tensor2, BihomError> {
        let u = self.require_unit()?;
        Ok(Tensor2::simple(u, u))
    }
}

/// The four structure maps. Contexts that only need `α, β` carry identities
/// for `ψ, ω`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureMaps {
    pub alpha: LinMap,
    pub beta: LinMap,
    pub psi: LinMap,
    pub omega: LinMap,
}

impl StructureMaps {
    pub fn identity(kind: FieldKind, n: usize) -> Self {
        let id = LinMap::identity(kind, n);
        StructureMaps {
            alpha: id.clone(),
            beta: id.clone(),
            psi: id.clone(),
            omega: id,
        }
    }

    pub fn new(alpha: LinMap, beta: LinMap, psi: LinMap, omega: LinMap) -> Self {
        StructureMaps {
            alpha,
            beta,
            psi,
            omega,
        }
    }

    pub fn pair(alpha: LinMap, beta: LinMap) -> Self {
        let id = LinMap::identity(alpha.kind(), alpha.dim());
        StructureMaps {
            alpha,
            beta,
            psi: id.clone(),
            omega: id,
        }
    }

    pub fn dim(&self) -> usize {
        self.alpha.dim()
    }

    pub fn named(&self) -> [(&'static str, &LinMap); 4] {
        [
            ("alpha", &self.alpha),
            ("beta", &self.beta),
            ("psi", &self.psi),
            ("omega", &self.omega),
        ]
    }

    pub fn is_identity(&self) -> bool {
        self.named().iter().all(|(_, m)| m.is_identity())
    }

    pub fn check_dims(&self, n: usize) -> Result<(), FieldError> {
        for (name, m) in self.named() {
            check_dim(name, n, m.dim())?;
        }
        Ok(())
    }

    /// Records commutation of every pair of the four maps.
    pub fn record_pairwise_commute(&self, report: &mut CheckReport) {
        let named = self.named();
        for i in 0..4 {
            for j in i + 1..4 {
                let w = named[i].1.commutation_witness(named[j].1).map(|k| vec![k]);
                report.record(format!("{}-{}-commute", named[i].0, named[j].0), w);
            }
        }
    }

    pub fn record_bijective(&self, report: &mut CheckReport, which: &[&str]) {
        for (name, m) in self.named() {
            if which.contains(&name) {
                report.record_bool(format!("{name}-bijective"), m.inverse().is_some());
            }
        }
    }
}

/// First basis pair `(i, j)` with `F(e_i e_j) ≠ F(e_i) F(e_j)`.
pub fn multiplicative_witness(mul: &BilinearMap, f: &LinMap) -> Option<Vec<usize>> {
    let n = mul.dim();
    let cols: Vec<Vector> = (0..n).map(|j| f.column(j)).collect();
    first_witness(&[n, n], |t| f.apply(mul.on_basis(t[0], t[1])) == mul.apply(&cols[t[0]], &cols[t[1]]))
}

/// Checks the BiHom-associative algebra axioms for an arbitrary product.
/// Unit laws are checked only when `unit` is given.
pub fn check_bihom_product(mul: &BilinearMap, alpha: &LinMap, beta: &LinMap, unit: Option<&Vector>) -> CheckReport {
    let n = mul.dim();
    let mut report = CheckReport::new();
    report.record("alpha-beta-commute", alpha.commutation_witness(beta).map(|j| vec![j]));
    report.record("alpha-multiplicative", multiplicative_witness(mul, alpha));
    report.record("beta-multiplicative", multiplicative_witness(mul, beta));

    let alpha_cols: Vec<Vector> = (0..n).map(|j| alpha.column(j)).collect();
    let beta_cols: Vec<Vector> = (0..n).map(|j| beta.column(j)).collect();
    report.record(
        "bihom-associativity",
        first_witness(&[n, n, n], |t| {
            let (i, j, k) = (t[0], t[1], t[2]);
            let left = mul.apply(&alpha_cols[i], mul.on_basis(j, k));
            let right = mul.apply(mul.on_basis(i, j), &beta_cols[k]);
            left == right
        }),
    );

    if let Some(u) = unit {
        report.record_bool("unit-fixed-by-alpha", &alpha.apply(u) == u);
        report.record_bool("unit-fixed-by-beta", &beta.apply(u) == u);
        report.record(
            "right-unit",
            first_witness(&[n], |t| {
                let e = Vector::basis(mul.kind(), n, t[0]);
                mul.apply(&e, u) == alpha_cols[t[0]]
            }),
        );
        report.record(
            "left-unit",
            first_witness(&[n], |t| {
                let e = Vector::basis(mul.kind(), n, t[0]);
                mul.apply(u, &e) == beta_cols[t[0]]
            }),
        );
    }
    report
}

pub fn check_bihom_algebra(alg: &AlgebraData, maps: &StructureMaps) -> Result<CheckReport, FieldError> {
    maps.check_dims(alg.dim())?;
    Ok(check_bihom_product(alg.mul(), &maps.alpha, &maps.beta, alg.unit()))
}

/// Comultiplication with an optional counit `ε(e_j) = counit[j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoalgebraData {
    pub delta: CoMap,
    pub counit: Option<Vector>,
}

impl CoalgebraData {
    pub fn new(delta: CoMap, counit: Option<Vector>) -> Result<Self, FieldError> {
        if let Some(e) = &counit {
            check_dim("counit", delta.dim(), e.len())?;
        }
        Ok(CoalgebraData { delta, counit })
    }

    pub fn dim(&self) -> usize {
        self.delta.dim()
    }
}

/// First basis index `j` with `(F⊗F)Δ(e_j) ≠ Δ(F e_j)`.
pub fn comultiplicative_witness(delta: &CoMap, f: &LinMap) -> Option<Vec<usize>> {
    let n = delta.dim();
    first_witness(&[n], |t| delta.on_basis(t[0]).map_legs(f, f) == delta.apply(&f.column(t[0])))
}

/// `(Δ⊗ψ)Δ = (ω⊗Δ)Δ` on basis vectors.
pub fn coassociativity_witness(delta: &CoMap, psi: &LinMap, omega: &LinMap) -> Option<Vec<usize>> {
    let n = delta.dim();
    first_witness(&[n], |t| {
        let d = delta.on_basis(t[0]);
        delta.then_first_leg(d, psi) == delta.then_second_leg(omega, d)
    })
}

pub fn check_bihom_coalgebra(co: &CoalgebraData, maps: &StructureMaps) -> Result<CheckReport, FieldError> {
    let n = co.dim();
    check_dim("psi", n, maps.psi.dim())?;
    check_dim("omega", n, maps.omega.dim())?;
    let (psi, omega) = (&maps.psi, &maps.omega);
    let mut report = CheckReport::new();
    report.record("psi-omega-commute", psi.commutation_witness(omega).map(|j| vec![j]));
    report.record("psi-comultiplicative", comultiplicative_witness(&co.delta, psi));
    report.record("omega-comultiplicative", comultiplicative_witness(&co.delta, omega));
    report.record("bihom-coassociativity", coassociativity_witness(&co.delta, psi, omega));

    if let Some(eps) = &co.counit {
        let kind = psi.kind();
        let apply_eps = |v: &[Scalar]| -> Scalar {
            v.iter()
                .zip(eps.iter())
                .fold(kind.zero(), |acc, (x, e)| &acc + &(x * e))
        };
        report.record(
            "counit-psi-invariant",
            first_witness(&[n], |t| apply_eps(&psi.column(t[0])) == eps[t[0]]),
        );
        report.record(
            "counit-omega-invariant",
            first_witness(&[n], |t| apply_eps(&omega.column(t[0])) == eps[t[0]]),
        );
        // (id⊗ε)Δ(e_j) = Σ_{a,b} c_ab ε(e_b) e_a
        report.record(
            "right-counit",
            first_witness(&[n], |t| {
                let mut v = Vector::zeros(kind, n);
                for (a, b, c) in co.delta.on_basis(t[0]).terms() {
                    let mut unit = Vector::zeros(kind, n);
                    unit.add_scaled(&(c * &eps[b]), &Vector::basis(kind, n, a));
                    v = v.add(&unit);
                }
                v == omega.column(t[0])
            }),
        );
        report.record(
            "left-counit",
            first_witness(&[n], |t| {
                let mut v = Vector::zeros(kind, n);
                for (a, b, c) in co.delta.on_basis(t[0]).terms() {
                    let mut unit = Vector::zeros(kind, n);
                    unit.add_scaled(&(c * &eps[a]), &Vector::basis(kind, n, b));
                    v = v.add(&unit);
                }
                v == psi.column(t[0])
            }),
        );
    }
    Ok(report)
}

/// A bilinear map `X × Y → Z` between spaces of dimensions `left`, `right`
/// and `out`, indexed `table[(i*right + j)*out + k]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pairing {
    left: usize,
    right: usize,
    out: usize,
    table: Vec<Scalar>,
}

impl Pairing {
    pub fn zero(kind: FieldKind, left: usize, right: usize, out: usize) -> Self {
        Pairing {
            left,
            right,
            out,
            table: vec![kind.zero(); left * right * out],
        }
    }

    pub fn from_fn(left: usize, right: usize, out: usize, mut f: impl FnMut(usize, usize) -> Vector) -> Self {
        let mut table = Vec::with_capacity(left * right * out);
        for i in 0..left {
            for j in 0..right {
                let v = f(i, j);
                assert_eq!(v.len(), out, "pairing image length mismatch");
                table.extend(v.into_inner());
            }
        }
        Pairing {
            left,
            right,
            out,
            table,
        }
    }

    pub fn from_grid(grid: Vec<Vec<Vec<Scalar>>>, right: usize, out: usize) -> Result<Self, FieldError> {
        let left = grid.len();
        let mut table = Vec::with_capacity(left * right * out);
        for plane in grid {
            check_dim("action rows", right, plane.len())?;
            for row in plane {
                check_dim("action entries", out, row.len())?;
                table.extend(row);
            }
        }
        Ok(Pairing {
            left,
            right,
            out,
            table,
        })
    }

    pub fn grid(&self) -> Vec<Vec<Vec<Scalar>>> {
        if self.right == 0 || self.out == 0 {
            return vec![Vec::new(); self.left];
        }
        self.table
            .chunks(self.right * self.out)
            .map(|plane| plane.chunks(self.out).map(|r| r.to_vec()).collect())
            .collect()
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        (self.left, self.right, self.out)
    }

    pub fn on_basis(&self, i: usize, j: usize) -> &[Scalar] {
        let start = (i * self.right + j) * self.out;
        &self.table[start..start + self.out]
    }

    pub fn apply(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let kind = x.first().or(y.first()).map(Scalar::kind).expect("nonempty operand");
        let mut out = Vector::zeros(kind, self.out);
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if !b.is_zero() {
                    out.add_scaled(&(a * b), self.on_basis(i, j));
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Pairing) -> Pairing {
        Pairing {
            table: self.table.iter().zip(&other.table).map(|(a, b)| a + b).collect(),
            ..self.clone()
        }
    }

    pub fn scale(&self, c: &Scalar) -> Pairing {
        Pairing {
            table: self.table.iter().map(|a| c * a).collect(),
            ..self.clone()
        }
    }

    pub fn flat(&self) -> &[Scalar] {
        &self.table
    }

    pub fn from_bilinear(mul: &BilinearMap) -> Pairing {
        let n = mul.dim();
        Pairing {
            left: n,
            right: n,
            out: n,
            table: mul.flat().to_vec(),
        }
    }
}

/// A module `M` of dimension `dim`. `left` is `A × M → M`, `right` is
/// `M × A → M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleData {
    pub dim: usize,
    pub left: Option<Pairing>,
    pub right: Option<Pairing>,
    pub alpha: LinMap,
    pub beta: LinMap,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
    Bimodule,
}

impl ModuleData {
    /// `A` acting on itself by multiplication on both sides.
    pub fn regular(alg: &AlgebraData, maps: &StructureMaps) -> Self {
        let p = Pairing::from_bilinear(alg.mul());
        ModuleData {
            dim: alg.dim(),
            left: Some(p.clone()),
            right: Some(p),
            alpha: maps.alpha.clone(),
            beta: maps.beta.clone(),
        }
    }

    pub fn act_left(&self, a: &[Scalar], m: &[Scalar]) -> Vector {
        self.left.as_ref().expect("left action present").apply(a, m)
    }

    pub fn act_right(&self, m: &[Scalar], a: &[Scalar]) -> Vector {
        self.right.as_ref().expect("right action present").apply(m, a)
    }

    fn validate(&self, n: usize) -> Result<(), FieldError> {
        check_dim("module alpha", self.dim, self.alpha.dim())?;
        check_dim("module beta", self.dim, self.beta.dim())?;
        if let Some(l) = &self.left {
            check_dim("left action algebra index", n, l.left)?;
            check_dim("left action module index", self.dim, l.right)?;
            check_dim("left action output", self.dim, l.out)?;
        }
        if let Some(r) = &self.right {
            check_dim("right action module index", self.dim, r.left)?;
            check_dim("right action algebra index", n, r.right)?;
            check_dim("right action output", self.dim, r.out)?;
        }
        Ok(())
    }
}

pub fn check_module(alg: &AlgebraData, maps: &StructureMaps, module: &ModuleData, side: Side) -> Result<CheckReport, BihomError> {
    let n = alg.dim();
    let m = module.dim;
    maps.check_dims(n)?;
    module.validate(n)?;
    let kind = alg.kind();
    let want_left = matches!(side, Side::Left | Side::Bimodule);
    let want_right = matches!(side, Side::Right | Side::Bimodule);
    if want_left && module.left.is_none() {
        return Err(BihomError::MissingInput("left action".into()));
    }
    if want_right && module.right.is_none() {
        return Err(BihomError::MissingInput("right action".into()));
    }
    let ea = |i: usize| Vector::basis(kind, n, i);
    let em = |i: usize| Vector::basis(kind, m, i);
    let (am, bm) = (&module.alpha, &module.beta);
    let (a_alg, b_alg) = (&maps.alpha, &maps.beta);

    let mut report = CheckReport::new();
    report.record("module-maps-commute", am.commutation_witness(bm).map(|j| vec![j]));
    if want_left {
        let act = |a: &[Scalar], x: &[Scalar]| module.act_left(a, x);
        report.record(
            "left-alpha-compatible",
            first_witness(&[n, m], |t| am.apply(&act(&ea(t[0]), &em(t[1]))) == act(&a_alg.column(t[0]), &am.column(t[1]))),
        );
        report.record(
            "left-beta-compatible",
            first_witness(&[n, m], |t| bm.apply(&act(&ea(t[0]), &em(t[1]))) == act(&b_alg.column(t[0]), &bm.column(t[1]))),
        );
        report.record(
            "left-associativity",
            first_witness(&[n, n, m], |t| {
                let lhs = act(&a_alg.column(t[0]), &act(&ea(t[1]), &em(t[2])));
                let rhs = act(alg.mul().on_basis(t[0], t[1]), &bm.column(t[2]));
                lhs == rhs
            }),
        );
    }
    if want_right {
        let act = |x: &[Scalar], a: &[Scalar]| module.act_right(x, a);
        report.record(
            "right-alpha-compatible",
            first_witness(&[m, n], |t| am.apply(&act(&em(t[0]), &ea(t[1]))) == act(&am.column(t[0]), &a_alg.column(t[1]))),
        );
        report.record(
            "right-beta-compatible",
            first_witness(&[m, n], |t| bm.apply(&act(&em(t[0]), &ea(t[1]))) == act(&bm.column(t[0]), &b_alg.column(t[1]))),
        );
        report.record(
            "right-associativity",
            first_witness(&[m, n, n], |t| {
                let lhs = act(&act(&em(t[0]), &ea(t[1])), &b_alg.column(t[2]));
                let rhs = act(&am.column(t[0]), alg.mul().on_basis(t[1], t[2]));
                lhs == rhs
            }),
        );
    }
    if side == Side::Bimodule {
        report.record(
            "bimodule-compatibility",
            first_witness(&[n, m, n], |t| {
                let lhs = module.act_left(&a_alg.column(t[0]), &module.act_right(&em(t[1]), &ea(t[2])));
                let rhs = module.act_right(&module.act_left(&ea(t[0]), &em(t[1])), &b_alg.column(t[2]));
                lhs == rhs
            }),
        );
    }
    Ok(report)
}

/// Kronecker product of square matrices, basis `(i, j) ↦ i*dim(g) + j`.
pub fn kron(f: &LinMap, g: &LinMap) -> LinMap {
    let (p, q) = (f.dim(), g.dim());
    LinMap::from_fn(f.kind(), p * q, |r, c| f.entry(r / q, c / q) * g.entry(r % q, c % q))
}

/// Hypotheses shared by the tensor-power actions: `ψ, ω` multiplicative and
/// the four maps pairwise commuting.
pub fn tensor_action_hypotheses(alg: &AlgebraData, maps: &StructureMaps) -> CheckReport {
    let mut report = CheckReport::new();
    report.record("psi-multiplicative", multiplicative_witness(alg.mul(), &maps.psi));
    report.record("omega-multiplicative", multiplicative_witness(alg.mul(), &maps.omega));
    maps.record_pairwise_commute(&mut report);
    report
}

/// The bimodule `M⊗N⊗V` with `a▷(m⊗n⊗v) = ω(a)▷m ⊗ β_N n ⊗ β_V v` and
/// `(m⊗n⊗v)◁a = α_M m ⊗ α_N n ⊗ v◁ψ(a)`. Basis `(i, j, k) ↦ (i*dN + j)*dV + k`.
pub fn tensor_bimodule(
    alg: &AlgebraData,
    maps: &StructureMaps,
    mm: &ModuleData,
    nn: &ModuleData,
    vv: &ModuleData,
) -> Result<Construction<ModuleData>, BihomError> {
    let mut hyp = check_bihom_algebra(&alg.without_unit(), maps)?;
    for (name, module) in [("M", mm), ("N", nn), ("V", vv)] {
        hyp.absorb(name, check_module(alg, maps, module, Side::Bimodule)?);
    }
    let mut extra = tensor_action_hypotheses(alg, maps);
    hyp.entries.append(&mut extra.entries);
    require(&hyp)?;

    let n = alg.dim();
    let kind = alg.kind();
    let (dm, dn, dv) = (mm.dim, nn.dim, vv.dim);
    let total = dm * dn * dv;
    let split = |idx: usize| (idx / (dn * dv), (idx / dv) % dn, idx % dv);
    let left = Pairing::from_fn(n, total, total, |a, idx| {
        let (i, j, k) = split(idx);
        let x = mm.act_left(&maps.omega.column(a), &Vector::basis(kind, dm, i));
        let y = nn.beta.column(j);
        let z = vv.beta.column(k);
        triple_vector(&x, &y, &z)
    });
    let right = Pairing::from_fn(total, n, total, |idx, a| {
        let (i, j, k) = split(idx);
        let x = mm.alpha.column(i);
        let y = nn.alpha.column(j);
        let z = vv.act_right(&Vector::basis(kind, dv, k), &maps.psi.column(a));
        triple_vector(&x, &y, &z)
    });
    let module = ModuleData {
        dim: total,
        left: Some(left),
        right: Some(right),
        alpha: kron(&kron(&mm.alpha, &nn.alpha), &vv.alpha),
        beta: kron(&kron(&mm.beta, &nn.beta), &vv.beta),
    };
    let conclusion = check_module(alg, maps, &module, Side::Bimodule)?;
    Ok(Construction {
        value: module,
        hypotheses: hyp,
        conclusion,
    })
}

/// The two-factor action on `A⊗A`: `a▷(x⊗y) = ω(a)x⊗β(y)`,
/// `(x⊗y)◁a = α(x)⊗yψ(a)`.
pub fn tensor_square_bimodule(alg: &AlgebraData, maps: &StructureMaps) -> ModuleData {
    let n = alg.dim();
    let left = Pairing::from_fn(n, n * n, n * n, |a, idx| {
        let x = alg.product(&maps.omega.column(a), &alg.basis(idx / n));
        Tensor2::simple(&x, &maps.beta.column(idx % n)).flat().to_vec().into()
    });
    let right = Pairing::from_fn(n * n, n, n * n, |idx, a| {
        let y = alg.product(&alg.basis(idx % n), &maps.psi.column(a));
        Tensor2::simple(&maps.alpha.column(idx / n), &y).flat().to_vec().into()
    });
    ModuleData {
        dim: n * n,
        left: Some(left),
        right: Some(right),
        alpha: kron(&maps.alpha, &maps.alpha),
        beta: kron(&maps.beta, &maps.beta),
    }
}

fn triple_vector(x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vector {
    let mut out = Vec::with_capacity(x.len() * y.len() * z.len());
    for a in x {
        for b in y {
            let ab = a * b;
            for c in z {
                out.push(&ab * c);
            }
        }
    }
    Vector::new(out)
}

/// `a▷t` on `A⊗A`: `ω(a)t¹⊗β(t²)`.
pub fn act_left2(alg: &AlgebraData, maps: &StructureMaps, a: &[Scalar], t: &Tensor2) -> Tensor2 {
    let wa = maps.omega.apply(a);
    let lmul = LinMap::from_columns(&(0..alg.dim()).map(|j| alg.product(&wa, &alg.basis(j))).collect::<Vec<_>>());
    t.map_legs(&lmul, &maps.beta)
}

/// `t◁a` on `A⊗A`: `α(t¹)⊗t²ψ(a)`.
pub fn act_right2(alg: &AlgebraData, maps: &StructureMaps, t: &Tensor2, a: &[Scalar]) -> Tensor2 {
    let pa = maps.psi.apply(a);
    let rmul = LinMap::from_columns(&(0..alg.dim()).map(|j| alg.product(&alg.basis(j), &pa)).collect::<Vec<_>>());
    t.map_legs(&maps.alpha, &rmul)
}

/// `a▷t` on `A⊗A⊗A`: `ω(a)t¹⊗β(t²)⊗β(t³)`.
pub fn act_left3(alg: &AlgebraData, maps: &StructureMaps, a: &[Scalar], t: &Tensor3) -> Tensor3 {
    let wa = maps.omega.apply(a);
    let lmul = LinMap::from_columns(&(0..alg.dim()).map(|j| alg.product(&wa, &alg.basis(j))).collect::<Vec<_>>());
    t.map_legs(&lmul, &maps.beta, &maps.beta)
}

/// `t◁a` on `A⊗A⊗A`: `α(t¹)⊗α(t²)⊗t³ψ(a)`.
pub fn act_right3(alg: &AlgebraData, maps: &StructureMaps, t: &Tensor3, a: &[Scalar]) -> Tensor3 {
    let pa = maps.psi.apply(a);
    let rmul = LinMap::from_columns(&(0..alg.dim()).map(|j| alg.product(&alg.basis(j), &pa)).collect::<Vec<_>>());
    t.map_legs(&maps.alpha, &maps.alpha, &rmul)
}

/// Left multiplication by `a` as a matrix.
pub fn left_mul(alg: &AlgebraData, a: &[Scalar]) -> LinMap {
    LinMap::from_columns(&(0..alg.dim()).map(|j| alg.product(a, &alg.basis(j))).collect::<Vec<_>>())
}

/// Right multiplication by `a` as a matrix.
pub fn right_mul(alg: &AlgebraData, a: &[Scalar]) -> LinMap {
    LinMap::from_columns(&(0..alg.dim()).map(|j| alg.product(&alg.basis(j), a)).collect::<Vec<_>>())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn q(n: i64) -> Scalar {
        FieldKind::Rational.from_i64(n)
    }

    #[test]
    fn field_algebra_passes() {
        let (alg, maps) = corpus::field_q();
        let r = check_bihom_algebra(&alg, &maps).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(r.entries.len(), 8);
    }

    #[test]
    fn dual_numbers_pass() {
        let (alg, maps) = corpus::dual_numbers(FieldKind::Rational);
        assert!(check_bihom_algebra(&alg, &maps).unwrap().passed());
    }

    #[test]
    fn twisted_dual_numbers_fail_associativity_at_x_u_u() {
        let (alg, _) = corpus::dual_numbers(FieldKind::Rational);
        let alpha = LinMap::from_rows(vec![vec![q(1), q(0)], vec![q(0), q(2)]]).unwrap();
        let maps = StructureMaps::pair(alpha, alg.identity());
        let r = check_bihom_algebra(&alg.without_unit(), &maps).unwrap();
        assert!(r.holds("alpha-multiplicative") && r.holds("beta-multiplicative"));
        assert_eq!(r.get("bihom-associativity").unwrap().witness, Some(vec![1, 0, 0]));
    }

    #[test]
    fn coalgebra_examples() {
        let kind = FieldKind::Rational;
        let maps = StructureMaps::identity(kind, 1);
        let ee = Tensor2::basis(kind, 1, 0, 0);
        let co = CoalgebraData::new(CoMap::new(vec![ee.clone()]).unwrap(), Some(Vector::new(vec![q(1)]))).unwrap();
        assert!(check_bihom_coalgebra(&co, &maps).unwrap().passed());

        let doubled = CoMap::new(vec![ee.scale(&q(2))]).unwrap();
        for eps in [q(1), q(2), q(-3)] {
            let co = CoalgebraData::new(doubled.clone(), Some(Vector::new(vec![eps]))).unwrap();
            let r = check_bihom_coalgebra(&co, &maps).unwrap();
            assert!(r.holds("bihom-coassociativity"));
            assert!(!r.holds("right-counit") || !r.holds("left-counit"));
        }

        let zero = CoalgebraData::new(CoMap::zero(kind, 1), Some(Vector::new(vec![q(1)]))).unwrap();
        let r = check_bihom_coalgebra(&zero, &maps).unwrap();
        assert!(r.holds("bihom-coassociativity"));
        assert!(!r.holds("right-counit") && !r.holds("left-counit"));
        let zero_maps = StructureMaps::new(maps.alpha.clone(), maps.beta.clone(), LinMap::zero(kind, 1), LinMap::zero(kind, 1));
        let r = check_bihom_coalgebra(&zero, &zero_maps).unwrap();
        assert!(r.holds("right-counit") && r.holds("left-counit"));
    }

    #[test]
    fn regular_and_zero_modules() {
        let (alg, maps) = corpus::dual_numbers(FieldKind::Rational);
        let reg = ModuleData::regular(&alg, &maps);
        assert!(check_module(&alg, &maps, &reg, Side::Bimodule).unwrap().passed());
        let zero = ModuleData {
            dim: 2,
            left: Some(Pairing::zero(FieldKind::Rational, 2, 2, 2)),
            right: Some(Pairing::zero(FieldKind::Rational, 2, 2, 2)),
            alpha: LinMap::identity(FieldKind::Rational, 2),
            beta: LinMap::identity(FieldKind::Rational, 2),
        };
        assert!(check_module(&alg, &maps, &zero, Side::Bimodule).unwrap().passed());
    }

    #[test]
    fn bad_module_witness() {
        let (alg, maps) = corpus::dual_numbers(FieldKind::Rational);
        let left = Pairing::from_fn(2, 1, 1, |_, _| Vector::new(vec![q(1)]));
        let module = ModuleData {
            dim: 1,
            left: Some(left),
            right: None,
            alpha: LinMap::identity(FieldKind::Rational, 1),
            beta: LinMap::identity(FieldKind::Rational, 1),
        };
        let r = check_module(&alg, &maps, &module, Side::Left).unwrap();
        assert_eq!(r.get("left-associativity").unwrap().witness, Some(vec![1, 1, 0]));
        assert!(matches!(check_module(&alg, &maps, &module, Side::Right), Err(BihomError::MissingInput(_))));
    }

    #[test]
    fn tensor_cube_of_field() {
        let (alg, maps) = corpus::field_q();
        let reg = ModuleData::regular(&alg, &maps);
        let built = tensor_bimodule(&alg, &maps, &reg, &reg, &reg).unwrap();
        assert!(built.conclusion.passed());
        let a = Vector::new(vec![q(3)]);
        let x = Vector::new(vec![q(5)]);
        assert_eq!(built.value.act_left(&a, &x), Vector::new(vec![q(15)]));
    }

    #[test]
    fn tensor_square_matches_direct_formula() {
        let (alg, maps) = corpus::upper_triangular();
        let sq = tensor_square_bimodule(&alg, &maps);
        let n = alg.dim();
        for a in 0..n {
            for i in 0..n {
                for j in 0..n {
                    let t = Tensor2::basis(alg.kind(), n, i, j);
                    let direct = act_left2(&alg, &maps, &alg.basis(a), &t);
                    let via = sq.act_left(&alg.basis(a), &Vector::basis(alg.kind(), n * n, i * n + j));
                    assert_eq!(direct.flat(), &via[..]);
                    let direct = act_right2(&alg, &maps, &t, &alg.basis(a));
                    let via = sq.act_right(&Vector::basis(alg.kind(), n * n, i * n + j), &alg.basis(a));
                    assert_eq!(direct.flat(), &via[..]);
                }
            }
        }
        assert!(check_module(&alg, &maps, &sq, Side::Bimodule).unwrap().passed());
    }

    #[test]
    fn dual_number_tensor_cube_passes() {
        let (alg, maps) = corpus::dual_numbers(FieldKind::Rational);
        let reg = ModuleData::regular(&alg, &maps);
        let built = tensor_bimodule(&alg, &maps, &reg, &reg, &reg).unwrap();
        assert!(built.conclusion.passed(), "{}", built.conclusion);
        // (x⊗u⊗u)◁x = x⊗u⊗x
        let kind = alg.kind();
        let xuu = Vector::basis(kind, 8, 4);
        assert_eq!(built.value.act_right(&xuu, &alg.basis(1)), Vector::basis(kind, 8, 5));
    }
}
