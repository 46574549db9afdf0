//! Exhaustive scans over small prime fields: every equivalence the library
//! reports must have agreeing verdicts, and every construction whose
//! hypotheses hold must verify.

mod common;

use bihom::corpus::{self, Named};
use bihom::covariantbialg::*;
use bihom::dendriprelie::*;
use bihom::exactfield::{CoMap, FieldKind, LinMap, Tensor2};
use bihom::rbsystems::rb_operator_check;
use bihom::report::EquivalenceReport;
use bihom::structures::{act_right2, ModuleData};
use bihom::yangbaxter::check_invariance;

use common::{all_maps, all_tensors};

fn family(kind: FieldKind) -> Vec<Named> {
    let mut fam = corpus::builtin(kind);
    fam.retain(|b| b.alg.dim() <= 2);
    fam.extend(corpus::twisted_family(kind, 2));
    fam
}

fn invariant_tensors(b: &Named, samples: usize) -> Vec<Tensor2> {
    let inv: Vec<Tensor2> = all_tensors(b.alg.kind(), b.alg.dim())
        .into_iter()
        .filter(|t| b.maps.named().iter().all(|(_, m)| check_invariance(t, m)))
        .collect();
    let step = (inv.len() / samples).max(1);
    inv.into_iter().step_by(step).collect()
}

/// Tallies `[agree, first verdict false, first verdict true]`.
fn tally(counts: &mut [usize; 3], what: &str, e: &EquivalenceReport) {
    assert!(e.agree(), "{what}: verdicts disagree\n{e}");
    counts[0] += 1;
    counts[1 + e.verdicts[0].holds as usize] += 1;
}

#[test]
fn tensor_equivalences_agree_over_f3() {
    let (mut p211, mut qt, mut t29, mut p217) = ([0; 3], [0; 3], [0; 3], [0; 3]);
    for b in family(FieldKind::Prime(3)) {
        let pick = invariant_tensors(&b, 8);
        for r in &pick {
            for s in &pick {
                tally(&mut p211, &b.name, &check_prop_2_11(&b.alg, &b.maps, r, s).unwrap());
                tally(&mut qt, &b.name, &check_quasitriangular(&b.alg, &b.maps, r, s).unwrap());
                let built = build_from_tensors(&b.alg, &b.maps, r, s).unwrap();
                assert!(built.conclusion.passed(), "{}: {}", b.name, built.conclusion);
                let m = built.value;
                let cb = CovariantBialgebra::new(b.alg.clone(), b.maps.clone(), m.delta_r, m.delta_s, m.delta, false).unwrap();
                tally(&mut t29, &b.name, &check_thm_2_9(&cb).unwrap());
            }
            tally(&mut p217, &b.name, &check_prop_2_17(&b.alg, &b.maps, r).unwrap());
        }
    }
    for (what, c) in [("prop-2.11", p211), ("quasitriangular", qt), ("thm-2.9", t29), ("prop-2.17", p217)] {
        assert!(c[0] >= 100, "{what}: only {} instances", c[0]);
        assert!(c[1] > 0 && c[2] > 0, "{what}: one verdict value never occurs {c:?}");
    }
}

#[test]
fn bialgebra_criterion_agrees_on_independent_comultiplications() {
    let mut counts = [0; 3];
    for b in family(FieldKind::Prime(3)) {
        let n = b.alg.dim();
        let pick = invariant_tensors(&b, 4);
        let binv = b.maps.beta.inverse().unwrap();
        for x in &pick {
            let d1 = build_from_tensors(&b.alg, &b.maps, x, x).unwrap().value.delta_r;
            for y in &pick {
                let d2 = build_from_tensors(&b.alg, &b.maps, y, y).unwrap().value.delta_r;
                for u in &pick {
                    // δ = u◁β⁻¹(a) + δ₁ and the inner comultiplication of (u, y)
                    let shifted = CoMap::from_fn(n, |j| act_right2(&b.alg, &b.maps, u, &binv.column(j)).add(d1.on_basis(j)));
                    let inner = build_from_tensors(&b.alg, &b.maps, u, y).unwrap().value.delta;
                    for delta in [shifted, inner] {
                        let cb = CovariantBialgebra::new(b.alg.clone(), b.maps.clone(), d1.clone(), d2.clone(), delta, false).unwrap();
                        tally(&mut counts, &b.name, &check_thm_2_9(&cb).unwrap());
                    }
                }
            }
        }
    }
    assert!(counts[1] > 0 && counts[2] > 0, "{counts:?}");
}

#[test]
fn rota_baxter_constructions_verify_over_f2_and_f3() {
    for kind in [FieldKind::Prime(2), FieldKind::Prime(3)] {
        let mut verified = 0;
        for b in family(kind) {
            let n = b.alg.dim();
            let reg = ModuleData::regular(&b.alg, &b.maps);
            let left = ModuleData { right: None, ..reg };
            for r in all_maps(kind, n) {
                for lam in kind.elements().unwrap() {
                    if !rb_operator_check(&b.alg, &b.maps, &r, &lam).unwrap().passed() {
                        continue;
                    }
                    for ap in [DendriformApproach::First, DendriformApproach::Second] {
                        let d = dendriform_from_rb(&b.alg, &b.maps, &r, &lam, ap).unwrap();
                        assert!(d.conclusion.passed(), "{} {ap:?} λ={lam}: {}", b.name, d.conclusion);
                        verified += 1;
                    }
                    for ap in [PreLieApproach::Star, PreLieApproach::Natural] {
                        let pl = prelie_from_rb(&b.alg, &b.maps, &r, &lam, ap).unwrap();
                        assert!(pl.conclusion.passed(), "{} {ap:?} λ={lam}: {}", b.name, pl.conclusion);
                        verified += 1;
                        for t in [r.clone(), LinMap::zero(kind, n), LinMap::scalar(&-&lam, n)] {
                            let pm = PairedModule {
                                module: left.clone(),
                                r: r.clone(),
                                t,
                                lambda: lam.clone(),
                            };
                            let c = prelie_module_from_paired(&b.alg, &b.maps, &pm, ap).unwrap();
                            assert!(c.conclusion.passed(), "{} {ap:?} λ={lam}: {}", b.name, c.conclusion);
                            verified += 1;
                        }
                    }
                }
            }
        }
        assert!(verified >= 500, "{kind}: only {verified} constructions");
    }
}
