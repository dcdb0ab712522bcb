use std::sync::Arc;

use vsecant::secant::{di_ideal_generator_profile, ordinary_generator_profile, SecantIdeals};
use vsecant::GradedRing;

fn ideals(v: usize) -> SecantIdeals {
    SecantIdeals::new(Arc::new(GradedRing::free(v)))
}

#[test]
fn conic_quadric_only() {
    let p = ordinary_generator_profile(&ideals(2).ideal(1), 2, 4);
    assert_eq!(p.new_by_n(2), vec![(1, 0), (2, 1), (3, 0), (4, 0)]);
}

#[test]
fn twisted_cubic_cut_out_by_quadrics() {
    let p = ordinary_generator_profile(&ideals(2).ideal(1), 3, 3);
    assert_eq!(p.new_by_n(3), vec![(1, 0), (2, 3), (3, 0)]);
    assert_eq!(p.max_new_degree(), 2);
}

#[test]
fn secant_line_variety_of_quartic_needs_a_cubic() {
    let p = ordinary_generator_profile(&ideals(2).ideal(2), 4, 4);
    assert_eq!(p.new_by_n(4), vec![(1, 0), (2, 0), (3, 1), (4, 0)]);
    assert_eq!(p.max_new_degree(), 3);
}

#[test]
fn one_variable_has_no_generators() {
    for r in 1..=2 {
        let p = ordinary_generator_profile(&ideals(1).ideal(r), 3, 4);
        assert_eq!(p.max_new_degree(), 0);
        assert!(p.rows.iter().all(|row| row.dim == 0));
    }
}

#[test]
fn di_profile_of_veronese_ideal_is_quadratic() {
    let p = di_ideal_generator_profile(&ideals(2).ideal(1), 4, 4);
    assert!(p.rows.iter().all(|r| r.new == 0 || r.n == 2));
    assert!(p
        .rows
        .iter()
        .filter(|r| r.n == 1)
        .all(|r| r.dim == 0 && r.new == 0));
    assert_eq!(p.max_new_degree(), 2);
}

#[test]
fn di_profile_of_secant_lines_is_cubic() {
    let p = di_ideal_generator_profile(&ideals(2).ideal(2), 5, 4);
    assert!(
        p.rows.iter().all(|r| r.new == 0 || r.n == 3),
        "{:?}",
        p.rows
    );
    assert_eq!(p.max_new_degree(), 3);
}

#[test]
fn profile_rows_are_consistent() {
    let p = di_ideal_generator_profile(&ideals(3).ideal(1), 2, 3);
    for r in &p.rows {
        assert!(r.generated <= r.dim);
        assert_eq!(r.new, r.dim - r.generated);
    }
}

#[test]
fn ordinary_profile_eventually_vanishes() {
    for (v, r, d) in [(2, 1, 2), (2, 1, 3), (3, 1, 2), (2, 2, 4), (2, 2, 5)] {
        let p = ordinary_generator_profile(&ideals(v).ideal(r), d, 4);
        assert_eq!(p.row(d, 4).unwrap().new, 0, "v={v} r={r} d={d}");
        assert!(p.max_new_degree() >= 2, "v={v} r={r} d={d}");
    }
}
