//! The sequence registry: linear recurrences, closed forms over quadratic
//! fields, and audits of published closed forms against the recurrences.
//!
//! Every sequence carries its recurrence (the working definition used for
//! all exact evaluation) and, where one exists, two closed forms: the
//! `published_form` exactly as it appears in print, and the `closed_form`
//! in corrected shape. Auditing a published form means evaluating it with
//! exact quadratic-field arithmetic and reporting the first index where it
//! fails to reproduce the recurrence — including the cases where it fails
//! by not being an integer, or not even rational.

use alloc::borrow::ToOwned;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebra::{
    quad_add, quad_conj, quad_mul, quad_pow, ratio, AlgebraError, QuadraticElement, Rational,
};

/// A linear recurrence with constant coefficients and an optional affine
/// constant: `s(n) = c1*s(n-1) + ... + ck*s(n-k) + affine_constant`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecurrenceSpec {
    pub order: usize,
    /// `coeffs[i]` multiplies `s(n - 1 - i)`.
    pub coeffs: Vec<i64>,
    /// Smallest index at which the sequence is defined.
    pub index_base: i64,
    /// `s(index_base) ..= s(index_base + order - 1)`.
    pub initial_values: Vec<BigInt>,
    pub affine_constant: i64,
}

/// A sum of conjugate terms in one quadratic field:
/// `sum coeff_i * root_i^n + alternating * (-1)^n + constant`.
#[derive(Clone, Debug, PartialEq)]
pub struct ConjugateForm {
    pub d: u64,
    pub terms: Vec<(QuadraticElement, QuadraticElement)>,
    pub alternating: Rational,
    pub constant: Rational,
}

/// The shape of a closed form.
#[derive(Clone, Debug, PartialEq)]
pub enum ClosedFormKind {
    /// A conjugate sum in a single quadratic field.
    Conjugate(ConjugateForm),
    /// The pointwise product of two other registry sequences.
    Product {
        left: &'static str,
        right: &'static str,
    },
    /// `outer * sqrt(radicand) * left(n) * right(n)` where the two factors
    /// live in different quadratic fields whose radicands multiply to
    /// `radicand`. Rational only when both factors are pure square-root
    /// multiples.
    SqrtProduct {
        outer: Rational,
        radicand: u64,
        left: ConjugateForm,
        right: ConjugateForm,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub struct ClosedFormSpec {
    pub kind: ClosedFormKind,
    /// Smallest index the form claims to cover.
    pub valid_from: i64,
}

/// One registered sequence.
#[derive(Clone, Debug)]
pub struct SequenceDef {
    pub name: &'static str,
    pub description: &'static str,
    pub recurrence: RecurrenceSpec,
    /// Corrected closed form, when the sequence has one.
    pub closed_form: Option<ClosedFormSpec>,
    /// The closed form exactly as published, when the sequence has one.
    pub published_form: Option<ClosedFormSpec>,
}

/// Errors from registry evaluation.
#[derive(Clone, Debug, PartialEq)]
pub enum SequenceError {
    UnknownSequence(String),
    IndexBelowBase {
        name: String,
        n: i64,
        index_base: i64,
    },
    NoClosedForm(String),
    NoPublishedForm(String),
    BelowValidity {
        name: String,
        n: i64,
        valid_from: i64,
    },
    Algebra(AlgebraError),
    /// A product-recurrence check was asked about a sequence that is not of
    /// the shape `s(n) = u*s(n-1) + s(n-2)`.
    ShapeMismatch {
        name: String,
        expected_coeff: i64,
        actual: Vec<i64>,
    },
    MalformedForm(String),
}

impl fmt::Display for SequenceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SequenceError::UnknownSequence(name) => write!(f, "unknown sequence {name:?}"),
            SequenceError::IndexBelowBase { name, n, index_base } => {
                write!(f, "index {n} is below the base index {index_base} of sequence {name}")
            }
            SequenceError::NoClosedForm(name) => {
                write!(f, "sequence {name} has no closed form in the registry")
            }
            SequenceError::NoPublishedForm(name) => {
                write!(f, "sequence {name} has no published closed form in the registry")
            }
            SequenceError::BelowValidity { name, n, valid_from } => {
                write!(f, "closed form of {name} is valid from {valid_from}, not at {n}")
            }
            SequenceError::Algebra(e) => write!(f, "{e}"),
            SequenceError::ShapeMismatch { name, expected_coeff, actual } => {
                write!(
                    f,
                    "sequence {name} is not of the shape s(n) = {expected_coeff}*s(n-1) + s(n-2); \
                     its coefficients are {actual:?}"
                )
            }
            SequenceError::MalformedForm(why) => write!(f, "malformed closed form: {why}"),
        }
    }
}

impl core::error::Error for SequenceError {}

impl From<AlgebraError> for SequenceError {
    fn from(e: AlgebraError) -> Self {
        SequenceError::Algebra(e)
    }
}

/// Exact value of a closed form: rational, or irrational with a rendering
/// of the offending element.
#[derive(Clone, Debug, PartialEq)]
pub enum FormValue {
    Rational(Rational),
    Irrational(String),
}

impl fmt::Display for FormValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormValue::Rational(r) => write!(f, "{r}"),
            FormValue::Irrational(s) => write!(f, "{s}"),
        }
    }
}

/// Outcome of auditing a published closed form against the recurrence.
#[derive(Clone, Debug, PartialEq)]
pub enum AuditVerdict {
    /// The form reproduced the recurrence at every checked index.
    Clean,
    /// The form first disagreed at `n`, evaluating to `found` where the
    /// recurrence gives `expected`.
    FirstMismatch {
        n: i64,
        found: FormValue,
        expected: BigInt,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub struct FormAudit {
    pub name: String,
    pub from: i64,
    pub to: i64,
    pub verdict: AuditVerdict,
}

/// Result of a successful product-recurrence verification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductRecurrenceCheck {
    pub coeffs: (i64, i64, i64, i64),
    pub checked_from: i64,
    pub checked_to: i64,
}

/// If `a(n) = u*a(n-1) + a(n-2)` and `b(n) = v*b(n-1) + b(n-2)`, the product
/// `a(n)*b(n)` satisfies an order-4 recurrence with these coefficients.
pub fn product_recurrence_coeffs(u: i64, v: i64) -> (i64, i64, i64, i64) {
    (u * v, u * u + v * v + 2, u * v, -1)
}

/// The registry of sequences, keyed by name.
pub struct Registry {
    defs: BTreeMap<&'static str, SequenceDef>,
}

impl Registry {
    /// The full standard catalog.
    pub fn standard() -> Self {
        let mut defs = BTreeMap::new();
        for def in standard_defs() {
            defs.insert(def.name, def);
        }
        Registry { defs }
    }

    pub fn get(&self, name: &str) -> Option<&SequenceDef> {
        self.defs.get(name)
    }

    pub fn defs(&self) -> impl Iterator<Item = &SequenceDef> {
        self.defs.values()
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.defs.keys().copied()
    }

    fn require(&self, name: &str) -> Result<&SequenceDef, SequenceError> {
        self.get(name)
            .ok_or_else(|| SequenceError::UnknownSequence(name.to_owned()))
    }

    /// `s(n)` by iterating the recurrence from the initial values.
    pub fn eval_recurrence(&self, name: &str, n: i64) -> Result<BigInt, SequenceError> {
        let def = self.require(name)?;
        let rec = &def.recurrence;
        if n < rec.index_base {
            return Err(SequenceError::IndexBelowBase {
                name: def.name.to_owned(),
                n,
                index_base: rec.index_base,
            });
        }
        let offset = (n - rec.index_base) as usize;
        if offset < rec.order {
            return Ok(rec.initial_values[offset].clone());
        }
        let mut window = rec.initial_values.clone();
        for _ in rec.order..=offset {
            let mut next = BigInt::from(rec.affine_constant);
            for (i, &c) in rec.coeffs.iter().enumerate() {
                next += &window[window.len() - 1 - i] * c;
            }
            window.remove(0);
            window.push(next);
        }
        Ok(window.pop().expect("window holds `order` values"))
    }

    /// `s(index_base) ..= s(up_to)` in one pass.
    pub fn sequence_prefix(&self, name: &str, up_to: i64) -> Result<Vec<BigInt>, SequenceError> {
        let def = self.require(name)?;
        let rec = &def.recurrence;
        if up_to < rec.index_base {
            return Err(SequenceError::IndexBelowBase {
                name: def.name.to_owned(),
                n: up_to,
                index_base: rec.index_base,
            });
        }
        let len = (up_to - rec.index_base) as usize + 1;
        let mut values: Vec<BigInt> = rec
            .initial_values
            .iter()
            .take(len)
            .cloned()
            .collect();
        while values.len() < len {
            let mut next = BigInt::from(rec.affine_constant);
            for (i, &c) in rec.coeffs.iter().enumerate() {
                next += &values[values.len() - 1 - i] * c;
            }
            values.push(next);
        }
        Ok(values)
    }

    /// Exact value of the corrected closed form.
    pub fn eval_closed_form_exact(&self, name: &str, n: i64) -> Result<Rational, SequenceError> {
        let def = self.require(name)?;
        let form = def
            .closed_form
            .as_ref()
            .ok_or_else(|| SequenceError::NoClosedForm(def.name.to_owned()))?;
        match self.eval_form(def.name, form, n)? {
            FormValue::Rational(r) => Ok(r),
            FormValue::Irrational(s) => {
                Err(SequenceError::Algebra(AlgebraError::IrrationalResidue(s)))
            }
        }
    }

    /// Integer value of the corrected closed form; errors if the exact value
    /// is irrational or fractional rather than rounding it away.
    pub fn eval_closed_form(&self, name: &str, n: i64) -> Result<BigInt, SequenceError> {
        let exact = self.eval_closed_form_exact(name, n)?;
        if exact.is_integer() {
            Ok(exact.to_integer())
        } else {
            Err(SequenceError::Algebra(AlgebraError::FractionalResidue(
                format!("{exact}"),
            )))
        }
    }

    /// Exact value of the published closed form (rational or a rendering of
    /// the irrational residue).
    pub fn eval_published_form(&self, name: &str, n: i64) -> Result<FormValue, SequenceError> {
        let def = self.require(name)?;
        let form = def
            .published_form
            .as_ref()
            .ok_or_else(|| SequenceError::NoPublishedForm(def.name.to_owned()))?;
        self.eval_form(def.name, form, n)
    }

    /// Audits the published closed form against the recurrence over
    /// `valid_from ..= n_max`, reporting the first disagreement.
    pub fn audit_published_form(&self, name: &str, n_max: i64) -> Result<FormAudit, SequenceError> {
        let def = self.require(name)?;
        let form = def
            .published_form
            .as_ref()
            .ok_or_else(|| SequenceError::NoPublishedForm(def.name.to_owned()))?;
        self.audit_form(def, form, n_max)
    }

    /// Audits the corrected closed form against the recurrence over
    /// `valid_from ..= n_max`.
    pub fn audit_closed_form(&self, name: &str, n_max: i64) -> Result<FormAudit, SequenceError> {
        let def = self.require(name)?;
        let form = def
            .closed_form
            .as_ref()
            .ok_or_else(|| SequenceError::NoClosedForm(def.name.to_owned()))?;
        self.audit_form(def, form, n_max)
    }

    fn audit_form(
        &self,
        def: &SequenceDef,
        form: &ClosedFormSpec,
        n_max: i64,
    ) -> Result<FormAudit, SequenceError> {
        let from = form.valid_from.max(def.recurrence.index_base);
        let mut verdict = AuditVerdict::Clean;
        for n in from..=n_max {
            let expected = self.eval_recurrence(def.name, n)?;
            let found = self.eval_form(def.name, form, n)?;
            let agrees = match &found {
                FormValue::Rational(r) => {
                    r.is_integer() && r.to_integer() == expected
                }
                FormValue::Irrational(_) => false,
            };
            if !agrees {
                verdict = AuditVerdict::FirstMismatch { n, found, expected };
                break;
            }
        }
        Ok(FormAudit {
            name: def.name.to_owned(),
            from,
            to: n_max,
            verdict,
        })
    }

    fn eval_form(
        &self,
        name: &str,
        form: &ClosedFormSpec,
        n: i64,
    ) -> Result<FormValue, SequenceError> {
        if n < form.valid_from {
            return Err(SequenceError::BelowValidity {
                name: name.to_owned(),
                n,
                valid_from: form.valid_from,
            });
        }
        match &form.kind {
            ClosedFormKind::Conjugate(conjugate) => eval_conjugate(conjugate, n),
            ClosedFormKind::Product { left, right } => {
                let l = self.eval_recurrence(left, n)?;
                let r = self.eval_recurrence(right, n)?;
                Ok(FormValue::Rational(Rational::from_integer(l * r)))
            }
            ClosedFormKind::SqrtProduct {
                outer,
                radicand,
                left,
                right,
            } => {
                if left.d * right.d != *radicand {
                    return Err(SequenceError::MalformedForm(format!(
                        "sqrt({}) does not match the factor fields sqrt({}) and sqrt({})",
                        radicand, left.d, right.d
                    )));
                }
                let lv = conjugate_sum(left, n)?;
                let rv = conjugate_sum(right, n)?;
                if !lv.a().is_zero() || !rv.a().is_zero() {
                    return Ok(FormValue::Irrational(format!(
                        "sqrt({radicand}) * ({lv}) * ({rv})"
                    )));
                }
                // sqrt(r) * b1*sqrt(d1) * b2*sqrt(d2) = r * b1 * b2 when
                // d1 * d2 = r.
                let scale = Rational::from_integer(BigInt::from(*radicand));
                Ok(FormValue::Rational(outer * scale * lv.b() * rv.b()))
            }
        }
    }

    /// Confirms that `left` and `right` have the shapes
    /// `s(n) = u*s(n-1) + s(n-2)` and `s(n) = v*s(n-1) + s(n-2)`, then
    /// checks numerically that their pointwise product satisfies the
    /// order-4 recurrence with `product_recurrence_coeffs(u, v)`.
    pub fn verify_product_recurrence(
        &self,
        left: &str,
        u: i64,
        right: &str,
        v: i64,
    ) -> Result<ProductRecurrenceCheck, SequenceError> {
        self.require_plus_one_shape(left, u)?;
        self.require_plus_one_shape(right, v)?;
        let base = self
            .require(left)?
            .recurrence
            .index_base
            .max(self.require(right)?.recurrence.index_base);
        let coeffs = product_recurrence_coeffs(u, v);
        let (c1, c2, c3, c4) = coeffs;
        let product = |n: i64| -> Result<BigInt, SequenceError> {
            Ok(self.eval_recurrence(left, n)? * self.eval_recurrence(right, n)?)
        };
        let checked_from = base + 4;
        let checked_to = base + 40;
        for n in checked_from..=checked_to {
            let lhs = product(n)?;
            let rhs = product(n - 1)? * c1
                + product(n - 2)? * c2
                + product(n - 3)? * c3
                + product(n - 4)? * c4;
            if lhs != rhs {
                return Err(SequenceError::MalformedForm(format!(
                    "product of {left} and {right} violates the order-4 recurrence at n = {n}"
                )));
            }
        }
        Ok(ProductRecurrenceCheck {
            coeffs,
            checked_from,
            checked_to,
        })
    }

    fn require_plus_one_shape(&self, name: &str, u: i64) -> Result<(), SequenceError> {
        let def = self.require(name)?;
        let rec = &def.recurrence;
        if rec.order != 2 || rec.affine_constant != 0 || rec.coeffs != vec![u, 1] {
            return Err(SequenceError::ShapeMismatch {
                name: def.name.to_owned(),
                expected_coeff: u,
                actual: rec.coeffs.clone(),
            });
        }
        Ok(())
    }
}

/// Evaluates a conjugate sum at `n`, splitting the outcome into
/// rational/irrational.
fn eval_conjugate(form: &ConjugateForm, n: i64) -> Result<FormValue, SequenceError> {
    let value = conjugate_sum(form, n)?;
    match value.to_rational() {
        Ok(r) => Ok(FormValue::Rational(r)),
        Err(AlgebraError::IrrationalResidue(_)) => {
            Ok(FormValue::Irrational(format!("{value}")))
        }
        Err(e) => Err(SequenceError::Algebra(e)),
    }
}

/// The quadratic-field element `sum coeff_i * root_i^n + alt*(-1)^n + const`.
fn conjugate_sum(form: &ConjugateForm, n: i64) -> Result<QuadraticElement, SequenceError> {
    debug_assert!(n >= 0, "conjugate sums are evaluated at nonnegative indices");
    let mut acc = QuadraticElement::from_rational(Rational::zero(), form.d)?;
    for (coeff, root) in &form.terms {
        let power = quad_pow(root, n as u64);
        acc = quad_add(&acc, &quad_mul(coeff, &power)?)?;
    }
    let sign = if n % 2 == 0 {
        form.alternating.clone()
    } else {
        -form.alternating.clone()
    };
    let extras = QuadraticElement::from_rational(sign + &form.constant, form.d)?;
    Ok(quad_add(&acc, &extras)?)
}

// ---------------------------------------------------------------------------
// The standard catalog.
// ---------------------------------------------------------------------------

fn rec(coeffs: &[i64], index_base: i64, inits: &[i64], affine: i64) -> RecurrenceSpec {
    assert_eq!(coeffs.len(), inits.len());
    RecurrenceSpec {
        order: coeffs.len(),
        coeffs: coeffs.to_vec(),
        index_base,
        initial_values: inits.iter().map(|&v| BigInt::from(v)).collect(),
        affine_constant: affine,
    }
}

fn qe(a: (i64, i64), b: (i64, i64), d: u64) -> QuadraticElement {
    QuadraticElement::new(ratio(a.0, a.1), ratio(b.0, b.1), d)
        .expect("catalog radicands are square-free")
}

/// A conjugate-symmetric pair `c*root^n + conj(c)*conj(root)^n + alt*(-1)^n + const`.
fn sym_pair(
    d: u64,
    coeff_rational: (i64, i64),
    coeff_surd: (i64, i64),
    root: &QuadraticElement,
    alternating: (i64, i64),
    constant: (i64, i64),
    valid_from: i64,
) -> ClosedFormSpec {
    let c = qe(coeff_rational, coeff_surd, d);
    ClosedFormSpec {
        kind: ClosedFormKind::Conjugate(ConjugateForm {
            d,
            terms: vec![
                (c.clone(), root.clone()),
                (quad_conj(&c), quad_conj(root)),
            ],
            alternating: ratio(alternating.0, alternating.1),
            constant: ratio(constant.0, constant.1),
        }),
        valid_from,
    }
}

fn standard_defs() -> Vec<SequenceDef> {
    // Fundamental roots: 2 +- sqrt(3), (5 +- sqrt(21))/2, (1 +- sqrt(5))/2,
    // and 1 +- sqrt(2).
    let x = qe((2, 1), (1, 1), 3);
    let y = qe((5, 2), (1, 2), 21);
    let phi = qe((1, 2), (1, 2), 5);
    let r = qe((1, 1), (1, 1), 2);

    let zero = (0, 1);

    let mut defs = Vec::new();
    let mut push = |name: &'static str,
                    description: &'static str,
                    recurrence: RecurrenceSpec,
                    closed_form: Option<ClosedFormSpec>,
                    published_form: Option<ClosedFormSpec>| {
        defs.push(SequenceDef {
            name,
            description,
            recurrence,
            closed_form,
            published_form,
        });
    };

    // --- Ladder strip P2 x P_n and the order-2 Pell pair -------------------
    let f_corrected = sym_pair(5, (1, 2), (1, 10), &phi, zero, zero, 0);
    // The published form joins the conjugate terms with the wrong sign on
    // the rational halves, which makes the value irrational at every index.
    let f_published = ClosedFormSpec {
        kind: ClosedFormKind::Conjugate(ConjugateForm {
            d: 5,
            terms: vec![
                (qe((1, 2), (1, 10), 5), phi.clone()),
                (qe((-1, 2), (1, 10), 5), quad_conj(&phi)),
            ],
            alternating: Rational::zero(),
            constant: Rational::zero(),
        }),
        valid_from: 0,
    };
    push(
        "f",
        "Matchings of the ladder P2 x P_n; the Fibonacci numbers with f(0) = f(1) = 1.",
        rec(&[1, 1], 0, &[1, 1], 0),
        Some(f_corrected),
        Some(f_published),
    );

    push(
        "p",
        "Pell numbers shifted so p(0) = 1, p(1) = 2; the second factor of V.",
        rec(&[2, 1], 0, &[1, 2], 0),
        Some(sym_pair(2, (1, 2), (1, 4), &r, zero, zero, 0)),
        Some(sym_pair(2, (1, 2), (1, 4), &r, zero, zero, 0)),
    );

    // The published form of h raises the roots to n+1 instead of n, which
    // silently evaluates h(n+1); folded into the coefficients that is
    // coeff = root/2.
    let h_published = ClosedFormSpec {
        kind: ClosedFormKind::Conjugate(ConjugateForm {
            d: 2,
            terms: vec![
                (qe((1, 2), (1, 2), 2), r.clone()),
                (qe((1, 2), (-1, 2), 2), quad_conj(&r)),
            ],
            alternating: Rational::zero(),
            constant: Rational::zero(),
        }),
        valid_from: 0,
    };
    push(
        "h",
        "Half companion Pell numbers: h(n) = p(n-1) + p(n-2) with h(0) = h(1) = 1.",
        rec(&[2, 1], 0, &[1, 1], 0),
        Some(sym_pair(2, (1, 2), zero, &r, zero, zero, 0)),
        Some(h_published),
    );

    // --- The 3 x 2n strip family and its companions ------------------------
    push(
        "H",
        "Trace sequence (2+sqrt(3))^n + (2-sqrt(3))^n; satisfies 2C = H.",
        rec(&[4, -1], 0, &[2, 4], 0),
        Some(sym_pair(3, (1, 1), zero, &x, zero, zero, 0)),
        Some(sym_pair(3, (1, 1), zero, &x, zero, zero, 0)),
    );
    push(
        "A",
        "Matchings of the grid P3 x P_{2n}.",
        rec(&[4, -1], 0, &[1, 3], 0),
        Some(sym_pair(3, (1, 2), (1, 6), &x, zero, zero, 0)),
        Some(sym_pair(3, (1, 2), (1, 6), &x, zero, zero, 0)),
    );
    push(
        "B",
        "Matchings of P3 x P_{2n} with a corner and the adjacent middle vertex of the first rank removed.",
        rec(&[4, -1], 1, &[1, 4], 0),
        Some(sym_pair(3, zero, (1, 6), &x, zero, zero, 1)),
        Some(sym_pair(3, zero, (1, 6), &x, zero, zero, 1)),
    );
    push(
        "C",
        "Matchings of P3 x P_{2n} with the first two vertices of one outer row removed.",
        rec(&[4, -1], 0, &[1, 2], 0),
        Some(sym_pair(3, (1, 2), zero, &x, zero, zero, 0)),
        Some(sym_pair(3, (1, 2), zero, &x, zero, zero, 0)),
    );
    push(
        "D",
        "Companion sequence with D = E + 1 and 2D = A + 1.",
        rec(&[5, -5, 1], 0, &[1, 2, 6], 0),
        Some(sym_pair(3, (1, 4), (1, 12), &x, zero, (1, 2), 0)),
        Some(sym_pair(3, (1, 4), (1, 12), &x, zero, (1, 2), 0)),
    );
    push(
        "D-alt",
        "Order-2 affine presentation of D; agrees with D everywhere.",
        rec(&[4, -1], 0, &[1, 2], -1),
        None,
        None,
    );
    push(
        "E",
        "Companion sequence with E = D - 1 and 2E = A - 1.",
        rec(&[5, -5, 1], 0, &[0, 1, 5], 0),
        Some(sym_pair(3, (1, 4), (1, 12), &x, zero, (-1, 2), 0)),
        Some(sym_pair(3, (1, 4), (1, 12), &x, zero, (-1, 2), 0)),
    );
    push(
        "E-alt",
        "Order-2 affine presentation of E; agrees with E everywhere.",
        rec(&[4, -1], 0, &[0, 1], 1),
        None,
        None,
    );

    // --- The cycle grid C4 x P_n ------------------------------------------
    push(
        "G",
        "Matchings of the cycle grid C4 x P_n.",
        rec(&[3, 3, -1], 0, &[1, 2, 9], 0),
        Some(sym_pair(3, (1, 3), (1, 6), &x, (1, 3), zero, 0)),
        Some(sym_pair(3, (1, 3), (1, 6), &x, (1, 3), zero, 0)),
    );
    push(
        "g",
        "Matchings of C4 x P_n with two adjacent vertices of the last rank removed.",
        rec(&[3, 3, -1], 0, &[0, 1, 3], 0),
        Some(sym_pair(3, (1, 12), (1, 12), &x, (-1, 6), zero, 0)),
        Some(sym_pair(3, (1, 12), (1, 12), &x, (-1, 6), zero, 0)),
    );

    // --- The near-complete grid W4 x P_n (K4 minus an edge) ----------------
    let v_corrected = ClosedFormSpec {
        kind: ClosedFormKind::Product {
            left: "f",
            right: "p",
        },
        valid_from: 0,
    };
    // The published form is sqrt(10)/40 times the product of the two
    // conjugate differences with exponent n; that evaluates to half the
    // correct product at every index.
    let v_published = ClosedFormSpec {
        kind: ClosedFormKind::SqrtProduct {
            outer: ratio(1, 40),
            radicand: 10,
            left: ConjugateForm {
                d: 5,
                terms: vec![
                    (qe((1, 1), zero, 5), phi.clone()),
                    (qe((-1, 1), zero, 5), quad_conj(&phi)),
                ],
                alternating: Rational::zero(),
                constant: Rational::zero(),
            },
            right: ConjugateForm {
                d: 2,
                terms: vec![
                    (qe((1, 1), zero, 2), r.clone()),
                    (qe((-1, 1), zero, 2), quad_conj(&r)),
                ],
                alternating: Rational::zero(),
                constant: Rational::zero(),
            },
        },
        valid_from: 1,
    };
    push(
        "V",
        "Matchings of the near-complete grid W4 x P_n; equals f(n) * p(n).",
        rec(&[2, 7, 2, -1], 0, &[1, 2, 10, 36], 0),
        Some(v_corrected),
        Some(v_published),
    );
    push(
        "R",
        "Matchings of W4 x P_n with one degree-2 and one adjacent degree-3 vertex of the last rank removed.",
        rec(&[3, 5, -5, -3, 1], 1, &[1, 3, 13, 49, 194], 0),
        None,
        None,
    );
    push(
        "S",
        "Companion sequence satisfying S(n) = V(n-1) + S(n-2).",
        rec(&[2, 8, 0, -8, -2, 1], 0, &[1, 0, 3, 10, 39, 155], 0),
        None,
        None,
    );

    // --- The triangle grids C3 x P_{2n} and C3 x P_{2n+1} ------------------
    push(
        "T",
        "Matchings of the triangle grid C3 x P_{2n}.",
        rec(&[5, -1], 0, &[1, 4], 0),
        Some(sym_pair(21, (1, 2), (1, 14), &y, zero, zero, 0)),
        Some(sym_pair(21, (1, 2), (1, 14), &y, zero, zero, 0)),
    );
    push(
        "t",
        "Matchings of C3 x P_{2n+1} with one vertex of the last rank removed.",
        rec(&[5, -1], 0, &[1, 5], 0),
        Some(sym_pair(21, (1, 2), (5, 42), &y, zero, zero, 0)),
        Some(sym_pair(21, (1, 2), (5, 42), &y, zero, zero, 0)),
    );
    push(
        "Q",
        "Matchings of the star grid K_{1,3} x P_{2n}; coincides with T.",
        rec(&[5, -1], 0, &[1, 4], 0),
        None,
        None,
    );
    push(
        "q",
        "Matchings of K_{1,3} x P_{2n+1} with two leaves of the last rank removed; coincides with t.",
        rec(&[5, -1], 0, &[1, 5], 0),
        None,
        None,
    );

    // --- The complete grid K4 x P_n ----------------------------------------
    push(
        "M",
        "Matchings of the complete grid K4 x P_n.",
        rec(&[4, 4, -1], 0, &[1, 3, 16], 0),
        Some(sym_pair(21, (5, 14), (1, 14), &y, (2, 7), zero, 0)),
        Some(sym_pair(21, (5, 14), (1, 14), &y, (2, 7), zero, 0)),
    );
    // The published form of N carries +1/7 on the alternating term where the
    // corrected form needs -1/7; every value is off by 2/7.
    push(
        "N",
        "Matchings of K4 x P_n with two vertices of the last rank removed.",
        rec(&[4, 4, -1], 1, &[1, 4, 20], 0),
        Some(sym_pair(21, (1, 14), (1, 42), &y, (-1, 7), zero, 1)),
        Some(sym_pair(21, (1, 14), (1, 42), &y, (1, 7), zero, 1)),
    );

    defs
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn bigs(values: &[i64]) -> Vec<BigInt> {
        values.iter().map(|&v| big(v)).collect()
    }

    #[test]
    fn recurrence_frozen_values() {
        let reg = Registry::standard();
        let expect = [
            ("V", 6, 2_197),
            ("H", 3, 52),
            ("A", 10, 413_403),
            ("B", 10, 151_316),
            ("G", 10, 326_041),
            ("g", 10, 119_339),
            ("M", 8, 190_096),
            ("T", 8, 229_771),
            ("N", 8, 50_140),
            ("R", 6, 754),
            ("S", 6, 599),
            ("q", 2, 24),
            ("f", 10, 89),
            ("p", 8, 985),
            ("h", 8, 577),
            ("D", 4, 77),
            ("E", 4, 76),
        ];
        for (name, n, value) in expect {
            assert_eq!(
                reg.eval_recurrence(name, n).unwrap(),
                big(value),
                "{name}({n})"
            );
        }
    }

    #[test]
    fn prefixes_start_at_the_base_index() {
        let reg = Registry::standard();
        assert_eq!(reg.sequence_prefix("B", 4).unwrap(), bigs(&[1, 4, 15, 56]));
        assert_eq!(reg.sequence_prefix("N", 4).unwrap(), bigs(&[1, 4, 20, 95]));
        assert_eq!(reg.sequence_prefix("f", 4).unwrap(), bigs(&[1, 1, 2, 3, 5]));
        assert_eq!(
            reg.sequence_prefix("D", 4).unwrap(),
            bigs(&[1, 2, 6, 21, 77])
        );
        assert_eq!(
            reg.sequence_prefix("S", 6).unwrap(),
            bigs(&[1, 0, 3, 10, 39, 155, 599])
        );
    }

    #[test]
    fn indices_below_the_base_are_rejected() {
        let reg = Registry::standard();
        assert!(matches!(
            reg.eval_recurrence("B", 0),
            Err(SequenceError::IndexBelowBase { .. })
        ));
        assert!(matches!(
            reg.eval_recurrence("f", -1),
            Err(SequenceError::IndexBelowBase { .. })
        ));
        assert!(matches!(
            reg.sequence_prefix("N", 0),
            Err(SequenceError::IndexBelowBase { .. })
        ));
        assert!(matches!(
            reg.eval_recurrence("nope", 3),
            Err(SequenceError::UnknownSequence(_))
        ));
    }

    #[test]
    fn closed_form_frozen_values() {
        let reg = Registry::standard();
        let expect = [
            ("A", 5, 571),
            ("t", 3, 115),
            ("M", 5, 1_728),
            ("V", 6, 2_197),
            ("G", 10, 326_041),
            ("f", 10, 89),
            ("h", 5, 41),
            ("B", 5, 209),
            ("N", 2, 4),
        ];
        for (name, n, value) in expect {
            assert_eq!(
                reg.eval_closed_form(name, n).unwrap(),
                big(value),
                "closed form of {name} at {n}"
            );
        }
    }

    #[test]
    fn corrected_forms_match_recurrences() {
        let reg = Registry::standard();
        for def in reg.defs() {
            let Some(form) = &def.closed_form else { continue };
            let audit = reg.audit_closed_form(def.name, form.valid_from + 30).unwrap();
            assert_eq!(
                audit.verdict,
                AuditVerdict::Clean,
                "corrected form of {}",
                def.name
            );
        }
    }

    #[test]
    fn published_form_audits_find_the_known_errata() {
        let reg = Registry::standard();

        let v = reg.audit_published_form("V", 12).unwrap();
        assert_eq!(
            v.verdict,
            AuditVerdict::FirstMismatch {
                n: 1,
                found: FormValue::Rational(ratio(1, 2)),
                expected: big(2),
            }
        );

        let n = reg.audit_published_form("N", 12).unwrap();
        assert_eq!(
            n.verdict,
            AuditVerdict::FirstMismatch {
                n: 1,
                found: FormValue::Rational(ratio(5, 7)),
                expected: big(1),
            }
        );

        let f = reg.audit_published_form("f", 12).unwrap();
        match f.verdict {
            AuditVerdict::FirstMismatch {
                n: 0,
                found: FormValue::Irrational(_),
                ..
            } => {}
            other => panic!("published f should be irrational at n = 0, got {other:?}"),
        }

        let h = reg.audit_published_form("h", 12).unwrap();
        assert_eq!(
            h.verdict,
            AuditVerdict::FirstMismatch {
                n: 1,
                found: FormValue::Rational(Rational::from_integer(big(3))),
                expected: big(1),
            }
        );

        for clean in ["p", "A", "B", "C", "D", "E", "G", "g", "T", "t", "M", "H"] {
            let audit = reg.audit_published_form(clean, 20).unwrap();
            assert_eq!(
                audit.verdict,
                AuditVerdict::Clean,
                "published form of {clean}"
            );
        }
    }

    #[test]
    fn alternate_presentations_agree() {
        let reg = Registry::standard();
        for (main, alt) in [("D", "D-alt"), ("E", "E-alt")] {
            for n in 0..=40 {
                assert_eq!(
                    reg.eval_recurrence(main, n).unwrap(),
                    reg.eval_recurrence(alt, n).unwrap(),
                    "{main} vs {alt} at {n}"
                );
            }
        }
    }

    #[test]
    fn product_recurrences() {
        assert_eq!(product_recurrence_coeffs(1, 2), (2, 7, 2, -1));

        let reg = Registry::standard();
        let fp = reg.verify_product_recurrence("f", 1, "p", 2).unwrap();
        assert_eq!(fp.coeffs, (2, 7, 2, -1));

        let ff = reg.verify_product_recurrence("f", 1, "f", 1).unwrap();
        assert_eq!(ff.coeffs, (1, 4, 1, -1));

        let hp = reg.verify_product_recurrence("h", 2, "p", 2).unwrap();
        assert_eq!(hp.coeffs, (4, 10, 4, -1));

        assert!(matches!(
            reg.verify_product_recurrence("A", 1, "p", 2),
            Err(SequenceError::ShapeMismatch { .. })
        ));
    }

    #[test]
    fn the_product_form_of_v_tracks_its_own_recurrence() {
        let reg = Registry::standard();
        for n in 0..=30 {
            let direct = reg.eval_recurrence("V", n).unwrap();
            let product =
                reg.eval_recurrence("f", n).unwrap() * reg.eval_recurrence("p", n).unwrap();
            assert_eq!(direct, product, "V({n})");
        }
    }

    #[test]
    fn twin_sequences_coincide() {
        let reg = Registry::standard();
        for n in 0..=30 {
            assert_eq!(
                reg.eval_recurrence("Q", n).unwrap(),
                reg.eval_recurrence("T", n).unwrap()
            );
            assert_eq!(
                reg.eval_recurrence("q", n).unwrap(),
                reg.eval_recurrence("t", n).unwrap()
            );
        }
    }
}
