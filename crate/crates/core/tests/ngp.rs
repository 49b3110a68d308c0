use std::time::Instant;

use depthlab::chars::{Cyclotomic, Rat};
use depthlab::error::Error;
use depthlab::ngp_table::*;

#[test]
fn orthogonality_q27_is_exact_and_fast() {
    let p = ReeParams::new(1).unwrap();
    let start = Instant::now();
    let r = orthogonality_report(&p).unwrap();
    assert!(start.elapsed().as_secs_f64() < 10.0);
    assert_eq!((r.classes, r.irreducibles, r.conductor), (34, 34, 156));
    assert_eq!(r.class_size_sum, "511758");
}

#[test]
fn orthogonality_q243() {
    let p = ReeParams::new(2).unwrap();
    let r = orthogonality_report(&p).unwrap();
    assert_eq!(r.classes, 250);
    assert_eq!(r.conductor, 1452);
}

#[test]
fn column_at_j_has_norm_q_times_q_minus_one() {
    let p = ReeParams::new(1).unwrap();
    let rows = table_rows(&p);
    let j = rows[0].len() - 1;
    let s = rows
        .iter()
        .fold(Cyclotomic::zero(1), |acc, r| &acc + &(&r[j] * &r[j].conj()));
    assert_eq!(s.as_integer(), Some(27 * 26));
}

#[test]
fn a_corrupted_entry_is_caught() {
    let p = ReeParams::new(1).unwrap();
    let mut t = build_table(&p).unwrap();
    let a3 = alpha_row(&p, 3);
    t.irreducibles[a3][5] = t.irreducibles[a3][5].conj();
    assert!(check_orthogonality(&t).is_err());
}

#[test]
fn decompositions_q27_all_b() {
    let p = ReeParams::new(1).unwrap();
    let t = build_table(&p).unwrap();
    let cert = verify_decompositions(&p, &t, true).unwrap();
    assert!(cert.passed(), "{cert:#?}");
    assert_eq!(cert.rows.len(), 2 + 2 * 12);
    assert!(cert.alpha6_reading_confirmed);
    assert!(cert.alpha2_reading_rejected);
    for r in &cert.rows {
        assert!(r.norm > 0);
    }
}

#[test]
fn decompositions_q243_under_a_minute() {
    let p = ReeParams::new(2).unwrap();
    let start = Instant::now();
    let t = build_table(&p).unwrap();
    let cert = verify_decompositions(&p, &t, true).unwrap();
    assert!(cert.passed(), "{cert:#?}");
    assert_eq!(cert.rows.len(), 2 + 2 * 120);
    assert_eq!(cert.rows[0].alpha_coefficients, [1, 243, 9, 9, 5, 4, 5, 4]);
    assert!(start.elapsed().as_secs_f64() < 60.0);
}

#[test]
fn depth_certificate_is_five() {
    for n in [1, 2] {
        let p = ReeParams::new(n).unwrap();
        let c = depth_certificate(&p).unwrap();
        assert_eq!(c.depth, 5);
        assert_eq!(c.witness, "all distances \u{2264}2; m(1_G)=2");
        assert_eq!(c.distance_trivial_delta, 2);
    }
}

#[test]
fn removing_an_edge_of_the_trivial_row_breaks_the_certificate() {
    let p = ReeParams::new(1).unwrap();
    let base = relation_data(&p);
    for i in 1..=8 {
        let mut data = base.clone();
        let drop = (0, alpha_row(&p, i));
        data.edges.retain(|&e| e != drop);
        let err = depth_from_relations(&p, &data).unwrap_err();
        assert!(matches!(err, Error::Indeterminate(_)), "alpha_{i}: {err}");
    }
}

#[test]
fn degree_identity_holds_for_many_q() {
    for n in 1..=6u32 {
        let m = 3i128.pow(n);
        let q = 3 * m * m;
        assert_eq!(2 + (q - 1) * (q * q + q + 1), q.pow(3) + 1);
        let p = ReeParams::new(n).unwrap();
        let coeffs = claimed_alpha_coefficients(&p, Source::Delta);
        let degs = [q - 1, q * (q - 1), m * (q - 1), m * (q - 1), m * (q - 1) / 2, m * (q - 1) / 2, m * (q - 1) / 2, m * (q - 1) / 2];
        let total: i128 = 2 + coeffs.iter().zip(degs).map(|(c, d)| c * d).sum::<i128>();
        assert_eq!(total, q.pow(3) + 1);
    }
    let _ = Rat::from_integer(0);
}
