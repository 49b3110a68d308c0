use std::time::Instant;

use depthlab::depth::DepthValue;
use depthlab::ree3_model::*;

#[test]
fn every_clause_holds_and_runs_quickly() {
    let start = Instant::now();
    let r = build_r3().unwrap();
    let report = verify_structure(&r);
    for c in &report.clauses {
        eprintln!("{:<24} {} {}", c.name, c.holds, c.detail);
    }
    assert!(report.passed());
    let mut orders = report.maximal_orders.clone();
    orders.sort();
    assert_eq!(orders, [42, 54, 168, 504]);
    assert_eq!(report.coset_action.degree, 28);
    assert!(report.coset_action.two_transitive);
    let attained: Vec<usize> = report.coset_action.three_point_stabilizers.keys().copied().collect();
    assert_eq!(attained, [1, 2]);
    eprintln!("N_H(S) conjugate to a point stabilizer: {}", report.nhs_is_point_stabilizer);
    eprintln!("elapsed {:?}", start.elapsed());
    assert!(start.elapsed().as_secs() < 120);
}

#[test]
fn depth_survey_of_maximal_subgroups() {
    let r = build_r3().unwrap();
    let survey = r3_depth_survey(&r).unwrap();
    assert_eq!(survey.len(), 4);
    for e in &survey {
        eprintln!(
            "|H|={} class={} dc={:?} d={:?} bound={}",
            e.subgroup_order, e.class_size, e.report.dc, e.report.d, e.report.core_bound.bound
        );
        let (dc, d) = (e.report.dc.value().unwrap(), e.report.d.value().unwrap());
        assert!(d <= dc);
    }
    let derived = survey.iter().find(|e| e.subgroup_order == 504).unwrap();
    assert_eq!((derived.report.dc, derived.report.d), (DepthValue::Exact(2), DepthValue::Exact(2)));
}
