//! `check`, `construct` and `search`.

use crate::covariantbialg::{self as cov, CovariantBialgebra};
use crate::dendriprelie::{self as dp, Dendriform, DendriformApproach, PairedModule, PreLie, PreLieApproach};
use crate::exactfield::{BilinearMap, FieldKind, Scalar, Tensor2};
use crate::par::{map_slice, Execution};
use crate::rbsystems::{self as rb, RbSystem};
use crate::report::{BihomError, CheckReport, Construction, EquivalenceReport};
use crate::structures::{self as st, AlgebraData, CoalgebraData, ModuleData, Side, StructureMaps};
use crate::yangbaxter::{abhybp_residue, candidate_count, search_solutions, SearchMode, SearchOptions, YbeInstance};

use super::format::Instance;
use super::report::{Outcome, Report, SearchSummary, SolutionEntry, TaskReport};

/// What a theorem run produced: a report plus the instance to write out.
pub struct Produced {
    pub report: TaskReport,
    pub output: Instance,
}

pub struct TheoremEntry {
    pub id: &'static str,
    pub module: &'static str,
    pub operation: &'static str,
    run: fn(&str, &Instance) -> Result<Produced, BihomError>,
}

/// Theorem ids accepted by `construct` and by task lists, with the library
/// operation each one runs.
pub const THEOREMS: &[TheoremEntry] = &[
    TheoremEntry { id: "thm-4.46", module: "rbsystems", operation: "rb_from_ybp", run: thm_rb_from_ybp },
    TheoremEntry { id: "lem-8.1", module: "rbsystems", operation: "check_lemma_8_1", run: thm_star_associativity },
    TheoremEntry { id: "thm-8.1a", module: "rbsystems", operation: "check_thm_8_1a_unital", run: thm_star_unital },
    TheoremEntry { id: "thm-8.4", module: "rbsystems", operation: "twistor_from_rb", run: thm_twistor },
    TheoremEntry { id: "lem-2.7", module: "covariantbialg", operation: "build_from_tensors", run: thm_build_from_tensors },
    TheoremEntry { id: "prop-2.11", module: "covariantbialg", operation: "check_prop_2_11", run: thm_residue_criterion },
    TheoremEntry { id: "thm-2.9", module: "covariantbialg", operation: "check_thm_2_9", run: thm_u_characterization },
    TheoremEntry { id: "thm-2.15", module: "covariantbialg", operation: "check_quasitriangular", run: thm_quasitriangular },
    TheoremEntry { id: "prop-2.17", module: "covariantbialg", operation: "check_prop_2_17", run: thm_unit_shift },
    TheoremEntry { id: "cor-3.15", module: "dendriprelie", operation: "dendriform_from_rb", run: thm_dendriform_first },
    TheoremEntry { id: "prop-3.16", module: "dendriprelie", operation: "prelie_from_rb", run: thm_prelie_star },
    TheoremEntry { id: "lem-3.19", module: "dendriprelie", operation: "dendriform_from_rb", run: thm_dendriform_second },
    TheoremEntry { id: "lem-3.20", module: "dendriprelie", operation: "prelie_from_rb", run: thm_prelie_natural },
    TheoremEntry { id: "thm-3.17", module: "dendriprelie", operation: "prelie_module_from_paired", run: thm_module_star },
    TheoremEntry { id: "thm-3.21", module: "dendriprelie", operation: "prelie_module_from_paired", run: thm_module_natural },
    TheoremEntry { id: "lem-3.4", module: "rbsystems", operation: "rb_systems_from_weighted_rb", run: thm_weighted_systems },
    TheoremEntry { id: "prop-2.1a", module: "structures", operation: "tensor_bimodule", run: thm_tensor_bimodule },
];

/// Structure checkers accepted in task lists.
pub const CHECKS: &[&str] = &[
    "algebra",
    "coalgebra",
    "left-module",
    "right-module",
    "bimodule",
    "derivation-delta1",
    "derivation-delta2",
    "covariant-bialgebra",
    "unital-covariant-bialgebra",
    "yang-baxter-pair",
    "rota-baxter",
    "rb-system",
    "dendriform",
    "prelie",
    "paired-module",
    "prelie-module",
];

pub fn theorem(id: &str) -> Option<&'static TheoremEntry> {
    THEOREMS.iter().find(|t| t.id == id)
}

pub fn theorem_ids() -> String {
    THEOREMS.iter().map(|t| t.id).collect::<Vec<_>>().join(", ")
}

fn missing(what: &str) -> BihomError {
    BihomError::MissingInput(what.to_string())
}

fn need<'a, T>(v: &'a Option<T>, what: &str) -> Result<&'a T, BihomError> {
    v.as_ref().ok_or_else(|| missing(what))
}

fn scalar_or_zero(v: &Option<Scalar>, kind: FieldKind) -> Scalar {
    v.clone().unwrap_or_else(|| kind.zero())
}

fn lambda(inst: &Instance) -> Scalar {
    scalar_or_zero(&inst.lambda, inst.kind)
}

/// `R`, `S`, `ξ`, `ζ` from the operators block; absent curvatures are zero.
fn rb_system(inst: &Instance) -> Result<RbSystem, BihomError> {
    let zero = BilinearMap::zero(inst.kind, inst.alg.dim());
    RbSystem::new(
        inst.alg.clone(),
        inst.maps.clone(),
        need(&inst.op_r, "operators.R")?.clone(),
        need(&inst.op_s, "operators.S")?.clone(),
        inst.xi.clone().unwrap_or_else(|| zero.clone()),
        inst.zeta.clone().unwrap_or(zero),
    )
}

fn tensors(inst: &Instance) -> Result<(&Tensor2, &Tensor2), BihomError> {
    Ok((need(&inst.r, "tensors.r")?, need(&inst.s, "tensors.s")?))
}

fn ybe(inst: &Instance) -> Result<YbeInstance, BihomError> {
    let (r, s) = tensors(inst)?;
    YbeInstance::new(
        inst.alg.clone(),
        inst.maps.clone(),
        r.clone(),
        s.clone(),
        lambda(inst),
        scalar_or_zero(&inst.gamma, inst.kind),
    )
}

/// The declared module, or the regular one.
fn module_or_regular(inst: &Instance) -> ModuleData {
    inst.module.clone().unwrap_or_else(|| ModuleData::regular(&inst.alg, &inst.maps))
}

fn left_module(inst: &Instance) -> ModuleData {
    inst.module.clone().unwrap_or_else(|| ModuleData {
        right: None,
        ..ModuleData::regular(&inst.alg, &inst.maps)
    })
}

fn paired(inst: &Instance) -> Result<PairedModule, BihomError> {
    Ok(PairedModule {
        module: left_module(inst),
        r: need(&inst.op_r, "operators.R")?.clone(),
        t: need(&inst.op_t, "operators.T")?.clone(),
        lambda: lambda(inst),
    })
}

fn built<T>(id: &str, c: &Construction<T>, output: Instance) -> Produced {
    Produced {
        report: TaskReport::from_construction(id, c),
        output,
    }
}

fn judged(id: &str, eq: EquivalenceReport, output: Instance) -> Produced {
    Produced {
        report: TaskReport::from_equivalence(id, eq),
        output,
    }
}

/// The instance with its algebra product replaced and the unit dropped.
fn with_product(inst: &Instance, mul: BilinearMap) -> Result<Instance, BihomError> {
    Ok(Instance {
        alg: AlgebraData::new(mul, None)?,
        ..inst.clone()
    })
}

fn thm_rb_from_ybp(id: &str, inst: &Instance) -> Result<Produced, BihomError> {
    let c = rb::rb_from_ybp(&ybe(inst)?)?;
    let sys = &c.value;
    let output = Instance {
        op_r: Some(sys.r.clone()),
        op_s: Some(sys.s.clone()),
        xi: Some(sys.xi.clone()),
        zeta: Some(sys.zeta.clone()),
        ..inst.clone()
    };
    Ok(built(id, &c, output))
}

fn thm_star_associativity(id: &str, inst: &Instance) -> Result<Produced, BihomError> {
    let sys = rb_system(inst)?;
    let eq = rb::check_lemma_8_1(&sys)?;
    Ok(judged(id, eq, with_product(inst, rb::star_product(&sys))?))
}

fn thm_star_unital(id: &str, inst: &Instance) -> Result<Produced, BihomError> {
    let sys = rb_system(inst)?;
    let eq = rb::check_thm_8_1a_unital(&sys)?;
    Ok(judged(id, eq, with_product(inst, rb::star_product(&sys))?))
}

fn thm_twistor(id: &str, inst: &Instance) -> Result<Produced, BihomError> {
    let c = rb::twistor_from_rb(&rb_system(inst)?)?;
    let output = with_product(inst, rb::twisted_product(&c.value, &inst.alg))?;
    Ok(built(id, &c, output))
}

fn with_tensor_maps(inst: &Instance, r: &Tensor2, s: &Tensor2) -> Instance {
    match cov::build_from_tensors(&inst.alg, &inst.maps, r, s) {
        Ok(c) => Instance {
            delta: Some(c.value.delta),
            delta1: Some(c.value.delta_r),
            delta2: Some(c.value.delta_s),
            ..inst.clone()
        },
        Err(_) => inst.clone(),
    }
}

fn thm_build_from_tensors(id: &str, inst: &Instance) -> Result<Produced, BihomError> {
    let (r, s) = tensors(inst)?;
    let c = cov::build_from_tensors(&inst.alg, &inst.maps, r, s)?;
    let output = Instance {
        delta: Some(c.value.delta.clone()),
        delta1: Some(c.value.delta_r.clone()),
        delta2: Some(c.value.delta_s.clone()),
        ..inst.clone()
    };
    Ok(built(id, &c, output))
}

fn thm_residue_criterion(id: &str, inst: &Instance) -> Result<Produced, BihomError> {
    let (r, s) = tensors(inst)?;
    let eq = cov::check_prop_2_11(&inst.alg, &inst.maps, r, s)?;
    Ok(judged(id, eq, with_tensor_maps(inst, r, s)))
}

fn thm_u_characterization(id: &str, inst: &Instance) -> Result<Produced, BihomError> {
    let b = CovariantBialgebra::new(
        inst.alg.clone(),
        inst.maps.clone(),
        need(&inst.delta1, "comultiplication.delta1")?.clone(),
        need(&inst.delta2, "comultiplication.delta2")?.clone(),
        need(&inst.delta, "comultiplication.delta")?.clone(),
        true,
    )?;
    let eq = cov::check_thm_2_9(&b)?;
    Ok(judged(id, eq, inst.clone()))
}

fn thm_quasitriangular(id: &str, inst: &Instance) -> Result<Produced, BihomError> {
    let (r, s) = tensors(inst)?;
    let eq = cov::check_quasitriangular(&inst.alg, &inst.maps, r, s)?;
    Ok(judged(id, eq, with_tensor_maps(inst, r, s)))
}

fn thm_unit_shift(id: &str, inst: &Instance) -> Result<Produced, BihomError> {
    let r = need(&inst.r, "tensors.r")?;
    let eq = cov::check_prop_2_17(&inst.alg, &inst.maps, r)?;
    let s = r.sub(&inst.alg.unit_tensor()?);
    Ok(judged(id, eq, with_tensor_maps(inst, r, &s)))
}

fn dendriform(id: &str, inst: &Instance, approach: DendriformApproach) -> Result<Produced, BihomError> {
    let r = need(&inst.op_r, "operators.R")?;
    let c = dp::dendriform_from_rb(&inst.alg, &inst.maps, r, &lambda(inst), approach)?;
    let output = Instance {
        prec: Some(c.value.prec.clone()),
        succ: Some(c.value.succ.clone()),
        ..inst.clone()
    };
    Ok(built(id, &c, output))
}

fn thm_dendriform_first(id: &str, inst: &Instance) -> Result<Produced, BihomError> {
    dendriform(id, inst, DendriformApproach::First)
}

fn thm_dendriform_second(id: &str, inst: &Instance) -> Result<Produced, BihomError> {
    dendriform(id, inst, DendriformApproach::Second)
}

fn prelie(id: &str, inst: &Instance, approach: PreLieApproach) -> Result<Produced, BihomError> {
    let r = need(&inst.op_r, "operators.R")?;
    let c = dp::prelie_from_rb(&inst.alg, &inst.maps, r, &lambda(inst), approach)?;
    let output = Instance {
        prelie: Some(c.value.product.clone()),
        ..inst.clone()
    };
    Ok(built(id, &c, output))
}

fn thm_prelie_star(id: &str, inst: &Instance) -> Result<Produced, BihomError> {
    prelie(id, inst, PreLieApproach::Star)
}

fn thm_prelie_natural(id: &str, inst: &Instance) -> Result<Produced, BihomError> {
    prelie(id, inst, PreLieApproach::Natural)
}

fn prelie_module(id: &str, inst: &Instance, approach: PreLieApproach) -> Result<Produced, BihomError> {
    let pm = paired(inst)?;
    let c = dp::prelie_module_from_paired(&inst.alg, &inst.maps, &pm, approach)?;
    let (p, module) = &c.value;
    let output = Instance {
        prelie: Some(p.product.clone()),
        module: Some(module.clone()),
        ..inst.clone()
    };
    Ok(built(id, &c, output))
}

fn thm_module_star(id: &str, inst: &Instance) -> Result<Produced, BihomError> {
    prelie_module(id, inst, PreLieApproach::Star)
}

fn thm_module_natural(id: &str, inst: &Instance) -> Result<Produced, BihomError> {
    prelie_module(id, inst, PreLieApproach::Natural)
}

fn thm_weighted_systems(id: &str, inst: &Instance) -> Result<Produced, BihomError> {
    let r = need(&inst.op_r, "operators.R")?;
    let c = rb::rb_systems_from_weighted_rb(&inst.alg, &inst.maps, r, &lambda(inst))?;
    let first = &c.value.0;
    let output = Instance {
        op_r: Some(first.r.clone()),
        op_s: Some(first.s.clone()),
        xi: Some(first.xi.clone()),
        zeta: Some(first.zeta.clone()),
        ..inst.clone()
    };
    Ok(built(id, &c, output))
}

fn thm_tensor_bimodule(id: &str, inst: &Instance) -> Result<Produced, BihomError> {
    let m = module_or_regular(inst);
    let c = st::tensor_bimodule(&inst.alg, &inst.maps, &m, &m, &m)?;
    let output = Instance {
        module: Some(c.value.clone()),
        op_t: None,
        ..inst.clone()
    };
    Ok(built(id, &c, output))
}

fn run_check(name: &str, inst: &Instance) -> Result<CheckReport, BihomError> {
    let (alg, maps) = (&inst.alg, &inst.maps);
    Ok(match name {
        "algebra" => st::check_bihom_algebra(alg, maps)?,
        "coalgebra" => {
            let co = CoalgebraData::new(need(&inst.delta, "comultiplication.delta")?.clone(), None)?;
            st::check_bihom_coalgebra(&co, maps)?
        }
        "left-module" => st::check_module(alg, maps, need(&inst.module, "module")?, Side::Left)?,
        "right-module" => st::check_module(alg, maps, need(&inst.module, "module")?, Side::Right)?,
        "bimodule" => st::check_module(alg, maps, need(&inst.module, "module")?, Side::Bimodule)?,
        "derivation-delta1" => cov::check_derivation(alg, maps, need(&inst.delta1, "comultiplication.delta1")?)?,
        "derivation-delta2" => cov::check_derivation(alg, maps, need(&inst.delta2, "comultiplication.delta2")?)?,
        "covariant-bialgebra" | "unital-covariant-bialgebra" => {
            let b = CovariantBialgebra::new(
                alg.clone(),
                maps.clone(),
                need(&inst.delta1, "comultiplication.delta1")?.clone(),
                need(&inst.delta2, "comultiplication.delta2")?.clone(),
                need(&inst.delta, "comultiplication.delta")?.clone(),
                name == "unital-covariant-bialgebra",
            )?;
            cov::check_covariant_bialgebra(&b)?
        }
        "yang-baxter-pair" => {
            let res = abhybp_residue(&ybe(inst)?)?;
            let mut report = CheckReport::new();
            let at = |t: &crate::exactfield::Tensor3| t.first_nonzero().map(|(i, j, k)| vec![i, j, k]);
            report.record("first-equation", at(&res.first));
            report.record("second-equation", at(&res.second));
            report
        }
        "rota-baxter" => rb::rb_operator_check(alg, maps, need(&inst.op_r, "operators.R")?, &lambda(inst))?,
        "rb-system" => rb::check_rb_system(&rb_system(inst)?)?,
        "dendriform" => dp::check_dendriform(&Dendriform {
            prec: need(&inst.prec, "products.prec")?.clone(),
            succ: need(&inst.succ, "products.succ")?.clone(),
            maps: maps.clone(),
        })?,
        "prelie" => dp::check_prelie(&PreLie {
            product: need(&inst.prelie, "products.prelie")?.clone(),
            maps: maps.clone(),
        })?,
        "paired-module" => dp::check_paired_module(alg, maps, &paired(inst)?)?,
        "prelie-module" => {
            let p = PreLie {
                product: need(&inst.prelie, "products.prelie")?.clone(),
                maps: maps.clone(),
            };
            dp::check_prelie_module(&p, need(&inst.module, "module")?)?
        }
        other => return Err(BihomError::MissingInput(format!("unknown task {other:?}; checks: {}; theorems: {}", CHECKS.join(", "), theorem_ids()))),
    })
}

/// Runs one task: a structure check or a theorem id.
pub fn run_task(name: &str, inst: &Instance) -> TaskReport {
    if let Some(t) = theorem(name) {
        return match (t.run)(name, inst) {
            Ok(p) => p.report,
            Err(e) => TaskReport::from_error(name, &e),
        };
    }
    match run_check(name, inst) {
        Ok(report) => TaskReport::from_check(name, report),
        Err(e) => TaskReport::from_error(name, &e),
    }
}

/// Runs every task of the instance; report order is file order.
pub fn cmd_check(input: &str, inst: &Instance, exec: Execution) -> Report {
    let tasks = map_slice(exec, &inst.tasks, |spec| {
        let mut t = run_task(&spec.run, inst);
        t.expected = spec.expect;
        t
    });
    Report {
        command: "check".into(),
        input: Some(input.to_string()),
        tasks,
        search: None,
        elapsed_ms: 0,
    }
}

/// Runs a theorem and returns the report with the instance to write.
pub fn cmd_construct(input: &str, inst: &Instance, id: &str) -> Result<(Report, Option<Instance>), String> {
    let t = theorem(id).ok_or_else(|| format!("unknown theorem id {id:?}; known ids: {}", theorem_ids()))?;
    let (task, output) = match (t.run)(id, inst) {
        Ok(p) => (p.report, Some(p.output)),
        Err(e) => (TaskReport::from_error(id, &e), None),
    };
    let report = Report {
        command: "construct".into(),
        input: Some(input.to_string()),
        tasks: vec![task],
        search: None,
        elapsed_ms: 0,
    };
    Ok((report, output))
}

pub struct SearchRequest {
    pub alg: AlgebraData,
    pub maps: StructureMaps,
    pub lambda: Scalar,
    pub gamma: Scalar,
    pub mode: SearchMode,
    pub max_candidates: u128,
    pub verify: bool,
}

fn tensor_text(t: &Tensor2) -> Vec<Vec<String>> {
    t.rows()
        .iter()
        .map(|row| {
            row.iter()
                .map(|s| match s {
                    Scalar::Prime { residue, .. } => residue.to_string(),
                    other => other.to_string(),
                })
                .collect()
        })
        .collect()
}

pub fn cmd_search(req: &SearchRequest, exec: Execution) -> Report {
    let (alg, maps) = (&req.alg, &req.maps);
    let kind = alg.kind();
    let n = alg.dim();
    let mode_name = match req.mode {
        SearchMode::Diagonal => "diagonal",
        SearchMode::Pairs => "pairs",
    };
    let mut report = Report {
        command: "search".into(),
        input: None,
        tasks: Vec::new(),
        search: None,
        elapsed_ms: 0,
    };
    let FieldKind::Prime(p) = kind else {
        report.tasks.push(TaskReport::message("search", Outcome::HypothesisError, "search requires a finite field"));
        return report;
    };
    let count = candidate_count(p, n, req.mode);
    let opts = SearchOptions {
        max_candidates: req.max_candidates,
        max_dim: SearchOptions::default().max_dim,
        execution: exec,
    };
    let solutions = match search_solutions(alg, maps, (&req.lambda, &req.gamma), req.mode, opts) {
        Ok(s) => s,
        Err(e) => {
            report.tasks.push(TaskReport::from_error("search", &e));
            return report;
        }
    };
    report.tasks.push(TaskReport::message("search", Outcome::Pass, format!("{} solutions", solutions.len())));
    if req.verify {
        let checks = map_slice(exec, &solutions, |sol| -> Result<CheckReport, BihomError> {
            let (_, mut first) = rb::operator_from_solution(alg, maps, &sol.r, &req.lambda)?;
            if req.mode == SearchMode::Pairs {
                let (_, second) = rb::operator_from_solution(alg, maps, &sol.s, &req.gamma)?;
                let mut both = CheckReport::new();
                both.absorb("r", first);
                both.absorb("s", second);
                first = both;
            }
            Ok(first)
        });
        for (i, c) in checks.into_iter().enumerate() {
            let name = format!("verify[{i}]");
            report.tasks.push(match c {
                Ok(c) => TaskReport::from_check(&name, c),
                Err(e) => TaskReport::from_error(&name, &e),
            });
        }
    }
    let text = |s: &Scalar| match s {
        Scalar::Prime { residue, .. } => residue.to_string(),
        other => other.to_string(),
    };
    report.search = Some(SearchSummary {
        field: kind.to_string(),
        dim: n,
        weight: [text(&req.lambda), text(&req.gamma)],
        mode: mode_name.into(),
        candidates: count.to_string(),
        solutions: solutions
            .iter()
            .map(|s| SolutionEntry {
                r: tensor_text(&s.r),
                s: tensor_text(&s.s),
            })
            .collect(),
    });
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn dispatch_table_covers_module_registries() {
        let registries: [(&str, &[&str]); 4] = [
            ("structures", st::THEOREM_OPERATIONS),
            ("rbsystems", rb::THEOREM_OPERATIONS),
            ("covariantbialg", cov::THEOREM_OPERATIONS),
            ("dendriprelie", dp::THEOREM_OPERATIONS),
        ];
        let table: BTreeSet<(&str, &str)> = THEOREMS.iter().map(|t| (t.module, t.operation)).collect();
        let registry: BTreeSet<(&str, &str)> = registries
            .iter()
            .flat_map(|(m, ops)| ops.iter().map(move |op| (*m, *op)))
            .collect();
        assert_eq!(table, registry);
        let ids: BTreeSet<&str> = THEOREMS.iter().map(|t| t.id).collect();
        assert_eq!(ids.len(), THEOREMS.len());
        assert_eq!(ids.len(), 17);
    }
}
