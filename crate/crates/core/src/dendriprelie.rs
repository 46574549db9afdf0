//! BiHom-dendriform and left BiHom-pre-Lie structures built from a weight-λ
//! Rota-Baxter operator, Rota-Baxter paired modules and the pre-Lie modules
//! they induce.

use crate::exactfield::{check_dim, BilinearMap, FieldError, LinMap, Scalar, Vector};
use crate::rbsystems::rb_operator_check;
use crate::report::{first_witness, require, BihomError, CheckReport, Construction};
use crate::structures::{check_bihom_algebra, check_module, multiplicative_witness, AlgebraData, ModuleData, Pairing, Side, StructureMaps};

/// Operations that realize a constructive statement.
pub const THEOREM_OPERATIONS: &[&str] = &["dendriform_from_rb", "prelie_from_rb", "prelie_module_from_paired"];

/// Exhaustive module checks run over `n²·m` tuples; `m` stays at most this.
pub const MAX_MODULE_DIM: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DendriformApproach {
    /// `a≺b = aR(b)`, `a≻b = R(a)b + λab`.
    First,
    /// `a≺b = aR(b) + λab`, `a≻b = R(a)b`.
    Second,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PreLieApproach {
    /// `a⋆b = R(a)b + λab − α⁻¹β(b)R(αβ⁻¹(a))`.
    Star,
    /// `a♮b = R(a)b − α⁻¹β(b)R(αβ⁻¹(a)) − λα⁻¹β(b)αβ⁻¹(a)`.
    Natural,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dendriform {
    pub prec: BilinearMap,
    pub succ: BilinearMap,
    pub maps: StructureMaps,
}

/// A left BiHom-pre-Lie candidate `(A, ∗, α, β)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreLie {
    pub product: BilinearMap,
    pub maps: StructureMaps,
}

/// `(R, T)` acting on a left module with weight `λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairedModule {
    pub module: ModuleData,
    pub r: LinMap,
    pub t: LinMap,
    pub lambda: Scalar,
}

fn commute_entry(report: &mut CheckReport, name: &str, f: &LinMap, g: &LinMap) {
    report.record(name, f.commutation_witness(g).map(|j| vec![j]));
}

pub fn check_dendriform(d: &Dendriform) -> Result<CheckReport, FieldError> {
    let n = d.prec.dim();
    check_dim("succ", n, d.succ.dim())?;
    check_dim("alpha", n, d.maps.alpha.dim())?;
    check_dim("beta", n, d.maps.beta.dim())?;
    let (a, b) = (&d.maps.alpha, &d.maps.beta);
    let (pr, su) = (&d.prec, &d.succ);
    let mut report = CheckReport::new();
    commute_entry(&mut report, "alpha-beta-commute", a, b);
    report.record("alpha-multiplicative-prec", multiplicative_witness(pr, a));
    report.record("alpha-multiplicative-succ", multiplicative_witness(su, a));
    report.record("beta-multiplicative-prec", multiplicative_witness(pr, b));
    report.record("beta-multiplicative-succ", multiplicative_witness(su, b));

    let e = |i: usize| Vector::basis(pr.kind(), n, i);
    // (x≺y)≺β(z) = α(x)≺(y≺z) + α(x)≺(y≻z)
    report.record(
        "prec-prec-axiom",
        first_witness(&[n, n, n], |t| {
            let (x, y, z) = (e(t[0]), e(t[1]), e(t[2]));
            let ax = a.column(t[0]);
            let lhs = pr.apply(&pr.apply(&x, &y), &b.column(t[2]));
            let rhs = pr.apply(&ax, &pr.apply(&y, &z)).add(&pr.apply(&ax, &su.apply(&y, &z)));
            lhs == rhs
        }),
    );
    // (x≻y)≺β(z) = α(x)≻(y≺z)
    report.record(
        "succ-prec-axiom",
        first_witness(&[n, n, n], |t| {
            let (x, y, z) = (e(t[0]), e(t[1]), e(t[2]));
            pr.apply(&su.apply(&x, &y), &b.column(t[2])) == su.apply(&a.column(t[0]), &pr.apply(&y, &z))
        }),
    );
    // α(x)≻(y≻z) = (x≺y)≻β(z) + (x≻y)≻β(z)
    report.record(
        "succ-succ-axiom",
        first_witness(&[n, n, n], |t| {
            let (x, y, z) = (e(t[0]), e(t[1]), e(t[2]));
            let bz = b.column(t[2]);
            let lhs = su.apply(&a.column(t[0]), &su.apply(&y, &z));
            let rhs = su.apply(&pr.apply(&x, &y), &bz).add(&su.apply(&su.apply(&x, &y), &bz));
            lhs == rhs
        }),
    );
    Ok(report)
}

/// Hypotheses shared by every construction from `(A, R, α, β)` of weight `λ`.
fn rb_hypotheses(alg: &AlgebraData, maps: &StructureMaps, r: &LinMap, lambda: &Scalar, bijective: bool) -> Result<CheckReport, BihomError> {
    let mut report = CheckReport::new();
    report.absorb("base-algebra", check_bihom_algebra(&alg.without_unit(), maps)?);
    report.absorb("rota-baxter", rb_operator_check(alg, maps, r, lambda)?);
    if bijective {
        maps.record_bijective(&mut report, &["alpha", "beta"]);
    }
    Ok(report)
}

/// `x·R(y)` and `R(x)·y` as tables.
fn one_sided(alg: &AlgebraData, r: &LinMap) -> (BilinearMap, BilinearMap) {
    let n = alg.dim();
    let right = BilinearMap::from_fn(n, |i, j| alg.product(&alg.basis(i), &r.column(j)));
    let left = BilinearMap::from_fn(n, |i, j| alg.product(&r.column(i), &alg.basis(j)));
    (right, left)
}

fn dendriform_tables(alg: &AlgebraData, maps: &StructureMaps, r: &LinMap, lambda: &Scalar, approach: DendriformApproach) -> Dendriform {
    let (x_ry, rx_y) = one_sided(alg, r);
    let weighted = alg.mul().scale(lambda);
    let (prec, succ) = match approach {
        DendriformApproach::First => (x_ry, rx_y.add(&weighted)),
        DendriformApproach::Second => (x_ry.add(&weighted), rx_y),
    };
    Dendriform {
        prec,
        succ,
        maps: maps.clone(),
    }
}

pub fn dendriform_from_rb(
    alg: &AlgebraData,
    maps: &StructureMaps,
    r: &LinMap,
    lambda: &Scalar,
    approach: DendriformApproach,
) -> Result<Construction<Dendriform>, BihomError> {
    let hypotheses = rb_hypotheses(alg, maps, r, lambda, false)?;
    require(&hypotheses)?;
    let value = dendriform_tables(alg, maps, r, lambda, approach);
    let conclusion = check_dendriform(&value)?;
    Ok(Construction {
        value,
        hypotheses,
        conclusion,
    })
}

pub fn check_prelie(p: &PreLie) -> Result<CheckReport, FieldError> {
    let n = p.product.dim();
    check_dim("alpha", n, p.maps.alpha.dim())?;
    check_dim("beta", n, p.maps.beta.dim())?;
    let (a, b) = (&p.maps.alpha, &p.maps.beta);
    let m = &p.product;
    let ab = a.compose(b);
    let mut report = CheckReport::new();
    commute_entry(&mut report, "alpha-beta-commute", a, b);
    report.record("alpha-multiplicative", multiplicative_witness(m, a));
    report.record("beta-multiplicative", multiplicative_witness(m, b));
    let e = |i: usize| Vector::basis(m.kind(), n, i);
    // αβ(x)∗(α(y)∗z) − (β(x)∗α(y))∗β(z)
    let assoc = |x: usize, y: usize, z: usize| {
        let bz = b.column(z);
        m.apply(&ab.column(x), &m.apply(&a.column(y), &e(z))).sub(&m.apply(&m.apply(&b.column(x), &a.column(y)), &bz))
    };
    report.record("left-symmetry", first_witness(&[n, n, n], |t| assoc(t[0], t[1], t[2]) == assoc(t[1], t[0], t[2])));
    Ok(report)
}

/// `a∗b = a≻b − α⁻¹β(b)≺αβ⁻¹(a)`. Needs `α, β` bijective.
pub fn prelie_from_dendriform(d: &Dendriform) -> Result<PreLie, FieldError> {
    let ai = d.maps.alpha.invert_named("alpha")?;
    let bi = d.maps.beta.invert_named("beta")?;
    let aib = ai.compose(&d.maps.beta);
    let abi = d.maps.alpha.compose(&bi);
    let n = d.prec.dim();
    let product = BilinearMap::from_fn(n, |i, j| {
        Vector::new(d.succ.on_basis(i, j).to_vec()).sub(&d.prec.apply(&aib.column(j), &abi.column(i)))
    });
    Ok(PreLie {
        product,
        maps: d.maps.clone(),
    })
}

/// The table of `⋆` or `♮` written out directly.
fn prelie_table(alg: &AlgebraData, maps: &StructureMaps, r: &LinMap, lambda: &Scalar, approach: PreLieApproach) -> Result<BilinearMap, FieldError> {
    let ai = maps.alpha.invert_named("alpha")?;
    let bi = maps.beta.invert_named("beta")?;
    let aib = ai.compose(&maps.beta);
    let abi = maps.alpha.compose(&bi);
    Ok(BilinearMap::from_fn(alg.dim(), |i, j| {
        let (x, y) = (alg.basis(i), alg.basis(j));
        let (sy, sx) = (aib.column(j), abi.column(i));
        let base = alg.product(&r.column(i), &y).sub(&alg.product(&sy, &r.apply(&sx)));
        match approach {
            PreLieApproach::Star => base.add(&alg.product(&x, &y).scale(lambda)),
            PreLieApproach::Natural => base.sub(&alg.product(&sy, &sx).scale(lambda)),
        }
    }))
}

pub fn prelie_from_rb(
    alg: &AlgebraData,
    maps: &StructureMaps,
    r: &LinMap,
    lambda: &Scalar,
    approach: PreLieApproach,
) -> Result<Construction<PreLie>, BihomError> {
    let hypotheses = rb_hypotheses(alg, maps, r, lambda, true)?;
    require(&hypotheses)?;
    let value = PreLie {
        product: prelie_table(alg, maps, r, lambda, approach)?,
        maps: maps.clone(),
    };
    let conclusion = check_prelie(&value)?;
    Ok(Construction {
        value,
        hypotheses,
        conclusion,
    })
}

fn module_bound(m: usize) -> Result<(), BihomError> {
    if m > MAX_MODULE_DIM {
        return Err(BihomError::Hypothesis(format!("module dimension {m} exceeds the bound {MAX_MODULE_DIM}")));
    }
    Ok(())
}

fn left_pairing(module: &ModuleData) -> Result<&Pairing, BihomError> {
    module.left.as_ref().ok_or_else(|| BihomError::MissingInput("left action".into()))
}

/// Errors when the underlying left module fails its axioms.
pub fn check_paired_module(alg: &AlgebraData, maps: &StructureMaps, pm: &PairedModule) -> Result<CheckReport, BihomError> {
    let n = alg.dim();
    let md = &pm.module;
    let m = md.dim;
    module_bound(m)?;
    check_dim("R", n, pm.r.dim())?;
    check_dim("T", m, pm.t.dim())?;
    require(&check_module(alg, maps, md, Side::Left)?)?;
    let act = left_pairing(md)?;
    let kind = alg.kind();
    let mut report = CheckReport::new();
    commute_entry(&mut report, "T-alpha-commute", &pm.t, &md.alpha);
    commute_entry(&mut report, "T-beta-commute", &pm.t, &md.beta);
    commute_entry(&mut report, "R-alpha-commute", &pm.r, &maps.alpha);
    commute_entry(&mut report, "R-beta-commute", &pm.r, &maps.beta);
    // R(a)▷T(m) = T(R(a)▷m) + T(a▷T(m)) + λT(a▷m)
    report.record(
        "paired-identity",
        first_witness(&[n, m], |t| {
            let (a, x) = (alg.basis(t[0]), Vector::basis(kind, m, t[1]));
            let (ra, tx) = (pm.r.column(t[0]), pm.t.column(t[1]));
            let lhs = act.apply(&ra, &tx);
            let inner = act.apply(&ra, &x).add(&act.apply(&a, &tx)).add(&act.apply(&a, &x).scale(&pm.lambda));
            lhs == pm.t.apply(&inner)
        }),
    );
    Ok(report)
}

/// `a▷⋆m = R(a)▷m + a▷T(m) + λa▷m`.
fn star_action(alg: &AlgebraData, pm: &PairedModule) -> Result<ModuleData, BihomError> {
    let act = left_pairing(&pm.module)?;
    let m = pm.module.dim;
    let kind = alg.kind();
    let left = Pairing::from_fn(alg.dim(), m, m, |i, j| {
        let (a, x) = (alg.basis(i), Vector::basis(kind, m, j));
        act.apply(&pm.r.column(i), &x)
            .add(&act.apply(&a, &pm.t.column(j)))
            .add(&act.apply(&a, &x).scale(&pm.lambda))
    });
    Ok(ModuleData {
        dim: m,
        left: Some(left),
        right: None,
        alpha: pm.module.alpha.clone(),
        beta: pm.module.beta.clone(),
    })
}

/// The pre-Lie algebra of the chosen approach and the module `(M, ▷⋆)`.
pub fn prelie_module_from_paired(
    alg: &AlgebraData,
    maps: &StructureMaps,
    pm: &PairedModule,
    approach: PreLieApproach,
) -> Result<Construction<(PreLie, ModuleData)>, BihomError> {
    let mut hypotheses = rb_hypotheses(alg, maps, &pm.r, &pm.lambda, true)?;
    hypotheses.absorb("paired", check_paired_module(alg, maps, pm)?);
    require(&hypotheses)?;
    let prelie = PreLie {
        product: prelie_table(alg, maps, &pm.r, &pm.lambda, approach)?,
        maps: maps.clone(),
    };
    let module = star_action(alg, pm)?;
    let mut conclusion = CheckReport::new();
    conclusion.absorb("prelie", check_prelie(&prelie)?);
    conclusion.absorb("module", check_prelie_module(&prelie, &module)?);
    Ok(Construction {
        value: (prelie, module),
        hypotheses,
        conclusion,
    })
}

/// The commutation and compatibility laws and the symmetry law
/// `αβ(a)▷(α(b)▷m) − (β(a)·α(b))▷β_M(m)` symmetric in `a, b`, where `·` is
/// the pre-Lie product. Nothing beyond these is checked.
pub fn check_prelie_module(p: &PreLie, module: &ModuleData) -> Result<CheckReport, BihomError> {
    let n = p.product.dim();
    let m = module.dim;
    module_bound(m)?;
    check_dim("module alpha", m, module.alpha.dim())?;
    check_dim("module beta", m, module.beta.dim())?;
    let act = left_pairing(module)?;
    let (l, r, o) = act.dims();
    check_dim("action algebra index", n, l)?;
    check_dim("action module index", m, r)?;
    check_dim("action output", m, o)?;

    let kind = p.product.kind();
    let (aa, ba) = (&p.maps.alpha, &p.maps.beta);
    let (am, bm) = (&module.alpha, &module.beta);
    let ea = |i: usize| Vector::basis(kind, n, i);
    let em = |i: usize| Vector::basis(kind, m, i);
    let mut report = CheckReport::new();
    commute_entry(&mut report, "module-maps-commute", am, bm);
    report.record(
        "alpha-compatible",
        first_witness(&[n, m], |t| am.apply(&act.apply(&ea(t[0]), &em(t[1]))) == act.apply(&aa.column(t[0]), &am.column(t[1]))),
    );
    report.record(
        "beta-compatible",
        first_witness(&[n, m], |t| bm.apply(&act.apply(&ea(t[0]), &em(t[1]))) == act.apply(&ba.column(t[0]), &bm.column(t[1]))),
    );
    let ab = aa.compose(ba);
    let side = |x: usize, y: usize, z: usize| {
        let bz = bm.column(z);
        act.apply(&ab.column(x), &act.apply(&aa.column(y), &em(z)))
            .sub(&act.apply(&p.product.apply(&ba.column(x), &aa.column(y)), &bz))
    };
    report.record("left-symmetry", first_witness(&[n, n, m], |t| side(t[0], t[1], t[2]) == side(t[1], t[0], t[2])));
    Ok(report)
}
