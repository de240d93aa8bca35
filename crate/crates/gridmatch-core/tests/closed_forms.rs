//! Closed forms against recurrences, end to end.
//!
//! Every corrected closed form must reproduce its recurrence exactly — the
//! irrational parts cancel and the rational residue is an integer — over a
//! long sweep. The published forms that differ are checked to fail exactly
//! where they are known to fail, with the exact wrong values they produce.

use gridmatch_core::algebra::{quad_add, quad_mul, rat, ratio};
use gridmatch_core::sequences::{AuditVerdict, FormValue, Registry};
use gridmatch_core::QuadraticElement;

/// Corrected closed forms equal the recurrences for every valid n ≤ 50.
#[test]
fn corrected_forms_track_recurrences_to_fifty() {
    let registry = Registry::standard();
    let mut checked = 0usize;
    for def in registry.defs() {
        let Some(form) = &def.closed_form else {
            continue;
        };
        let from = form.valid_from.max(def.recurrence.index_base);
        for n in from..=50 {
            let closed = registry.eval_closed_form(def.name, n).unwrap();
            let recur = registry.eval_recurrence(def.name, n).unwrap();
            assert_eq!(closed, recur, "{} at n = {}", def.name, n);
        }
        checked += 1;
    }
    // f, p, h, H, A, B, C, D, E, G, g, T, t, M, N, and V via its product.
    assert_eq!(checked, 16, "every expected closed form was swept");
}

/// Long-range audits come back clean for every corrected form.
#[test]
fn corrected_form_audits_are_clean() {
    let registry = Registry::standard();
    for def in registry.defs() {
        if def.closed_form.is_none() {
            continue;
        }
        let audit = registry.audit_closed_form(def.name, 50).unwrap();
        assert_eq!(audit.verdict, AuditVerdict::Clean, "{}", def.name);
    }
}

/// The two published forms with wrong constants fail at n = 1 with the
/// exact fractional values 1/2 and 5/7.
#[test]
fn published_v_and_n_fail_with_known_fractions() {
    let registry = Registry::standard();

    let v = registry.audit_published_form("V", 40).unwrap();
    assert_eq!(
        v.verdict,
        AuditVerdict::FirstMismatch {
            n: 1,
            found: FormValue::Rational(ratio(1, 2)),
            expected: 2.into(),
        }
    );

    let n = registry.audit_published_form("N", 40).unwrap();
    assert_eq!(
        n.verdict,
        AuditVerdict::FirstMismatch {
            n: 1,
            found: FormValue::Rational(ratio(5, 7)),
            expected: 1.into(),
        }
    );
}

/// The published f form never cancels its irrational part, and the
/// published h form evaluates one index ahead.
#[test]
fn published_f_and_h_fail_as_expected() {
    let registry = Registry::standard();

    let f = registry.audit_published_form("f", 40).unwrap();
    match f.verdict {
        AuditVerdict::FirstMismatch {
            n: 0,
            found: FormValue::Irrational(_),
            ..
        } => {}
        other => panic!("published f: unexpected verdict {other:?}"),
    }

    let h = registry.audit_published_form("h", 40).unwrap();
    assert_eq!(
        h.verdict,
        AuditVerdict::FirstMismatch {
            n: 1,
            found: FormValue::Rational(rat(3)),
            expected: 1.into(),
        }
    );
}

/// Published forms that only restate the corrected ones stay clean.
#[test]
fn remaining_published_forms_are_clean() {
    let registry = Registry::standard();
    for name in ["p", "H", "A", "B", "C", "D", "E", "G", "g", "T", "t", "M"] {
        let audit = registry.audit_published_form(name, 40).unwrap();
        assert_eq!(audit.verdict, AuditVerdict::Clean, "{name}");
    }
}

fn poly_at(x: &QuadraticElement, coeffs: &[i64]) -> QuadraticElement {
    let mut acc = QuadraticElement::from_rational(rat(0), x.d()).unwrap();
    for &c in coeffs {
        acc = quad_mul(&acc, x).unwrap();
        acc = quad_add(&acc, &QuadraticElement::from_rational(rat(c), x.d()).unwrap()).unwrap();
    }
    acc
}

fn assert_root(x: QuadraticElement, coeffs: &[i64]) {
    let zero = QuadraticElement::from_rational(rat(0), x.d()).unwrap();
    assert_eq!(poly_at(&x, coeffs), zero, "{x} on {coeffs:?}");
}

/// Every characteristic root used by the registry satisfies its
/// polynomial exactly in quadratic-field arithmetic.
#[test]
fn characteristic_roots_satisfy_their_polynomials() {
    // x^2 - 4x + 1 for 2 ± sqrt(3).
    assert_root(
        QuadraticElement::new(rat(2), rat(1), 3).unwrap(),
        &[1, -4, 1],
    );
    assert_root(
        QuadraticElement::new(rat(2), rat(-1), 3).unwrap(),
        &[1, -4, 1],
    );
    // x^2 - x - 1 for (1 ± sqrt(5))/2.
    assert_root(
        QuadraticElement::new(ratio(1, 2), ratio(1, 2), 5).unwrap(),
        &[1, -1, -1],
    );
    assert_root(
        QuadraticElement::new(ratio(1, 2), ratio(-1, 2), 5).unwrap(),
        &[1, -1, -1],
    );
    // x^2 - 2x - 1 for 1 ± sqrt(2).
    assert_root(
        QuadraticElement::new(rat(1), rat(1), 2).unwrap(),
        &[1, -2, -1],
    );
    assert_root(
        QuadraticElement::new(rat(1), rat(-1), 2).unwrap(),
        &[1, -2, -1],
    );
    // x^3 - 4x^2 - 4x + 1 for (5 ± sqrt(21))/2 and -1.
    assert_root(
        QuadraticElement::new(ratio(5, 2), ratio(1, 2), 21).unwrap(),
        &[1, -4, -4, 1],
    );
    assert_root(
        QuadraticElement::new(ratio(5, 2), ratio(-1, 2), 21).unwrap(),
        &[1, -4, -4, 1],
    );
    assert_root(
        QuadraticElement::from_rational(rat(-1), 21).unwrap(),
        &[1, -4, -4, 1],
    );
    // x^3 - 3x^2 - 3x + 1 factors as (x + 1)(x^2 - 4x + 1).
    assert_root(
        QuadraticElement::new(rat(2), rat(1), 3).unwrap(),
        &[1, -3, -3, 1],
    );
    assert_root(
        QuadraticElement::from_rational(rat(-1), 3).unwrap(),
        &[1, -3, -3, 1],
    );
    // x^3 - 5x^2 + 5x - 1 factors as (x - 1)(x^2 - 4x + 1).
    assert_root(
        QuadraticElement::new(rat(2), rat(-1), 3).unwrap(),
        &[1, -5, 5, -1],
    );
    assert_root(
        QuadraticElement::from_rational(rat(1), 3).unwrap(),
        &[1, -5, 5, -1],
    );
}

/// Product recurrences: the f·p product obeys the order-4 recurrence with
/// coefficients (2, 7, 2, -1), which is V's registered recurrence.
#[test]
fn v_factors_through_the_product_recurrence() {
    let registry = Registry::standard();
    let check = registry.verify_product_recurrence("f", 1, "p", 2).unwrap();
    assert_eq!(check.coeffs, (2, 7, 2, -1));

    for n in 0..=40 {
        let product =
            registry.eval_recurrence("f", n).unwrap() * registry.eval_recurrence("p", n).unwrap();
        assert_eq!(product, registry.eval_recurrence("V", n).unwrap(), "n = {n}");
    }
}
