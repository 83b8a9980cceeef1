use std::collections::HashMap;
use std::time::Instant;

use super::parity::koszul;
use super::superalgebra::Superalgebra;
use crate::exactmath::{Poly, Var};
use crate::par;
use crate::report::{CheckOutcome, Identity, Report};

pub const GRADING: &str = "grading";
pub const SKEW: &str = "skew-symmetry";
pub const HOM_JACOBI: &str = "hom-jacobi";
pub const MULTIPLICATIVE: &str = "multiplicative";
pub const REGULAR: &str = "regular";

pub(crate) fn pair_location(a: &Superalgebra, i: usize, j: usize) -> String {
    format!("({}, {})", a.name(i), a.name(j))
}

pub(crate) fn triple_location(a: &Superalgebra, i: usize, j: usize, k: usize) -> String {
    format!("({}, {}, {})", a.name(i), a.name(j), a.name(k))
}

/// Every target of every bracket has parity `p_i + p_j`.
pub fn check_grading(a: &Superalgebra) -> CheckOutcome {
    let mut out = CheckOutcome::new(GRADING, a.names());
    for (i, j) in par::pairs(a.dim()) {
        for (k, _) in a.table(i, j).support() {
            if a.parity(k) != a.parity(i) + a.parity(j) {
                out.violate(
                    pair_location(a, i, j),
                    format!("target {} has parity {}", a.name(k), a.parity(k)),
                );
            }
        }
    }
    out
}

/// `[a_l b] + delta (-1)^{|a||b|} [b_{-l-d} a] = 0` on every pair where both
/// orientations are stored (including diagonal pairs). Completed pairs hold
/// by construction.
pub fn check_skew_symmetry(a: &Superalgebra) -> CheckOutcome {
    let mut out = CheckOutcome::new(SKEW, a.names());
    let flip: HashMap<Var, Poly> = [(Var::lambda(1), -&(&Poly::lambda(1) + &Poly::d()))].into();
    for (&(i, j), v) in a.stored() {
        if j < i {
            continue;
        }
        let Some(w) = a.stored().get(&(j, i)) else {
            continue;
        };
        let s = a.delta() * koszul(a.parity(i), a.parity(j));
        out.push(Identity::new(
            pair_location(a, i, j),
            vec![v.clone(), w.substitute(&flip).scale_int(s)],
        ));
    }
    out
}

/// The Hom-Jacobi terms on a basis triple with `lambda = l1`, `mu = l2`:
/// `[alpha(a)_l [b_m c]] - delta [[a_l b]_{l+m} alpha(c)] - delta (-1)^{|a||b|} [alpha(b)_m [a_l c]]`.
pub fn hom_jacobi_terms(a: &Superalgebra, i: usize, j: usize, k: usize) -> Vec<crate::algebra::Element> {
    let lam = Poly::lambda(1);
    let mu = Poly::lambda(2);
    let ei = a.basis_element(i);
    let ej = a.basis_element(j);
    let ek = a.basis_element(k);
    let delta = a.delta();
    let lhs = a.bracket(&a.apply_alpha(&ei), &a.bracket(&ej, &ek, &mu), &lam);
    let r1 = a.bracket(&a.bracket(&ei, &ej, &lam), &a.apply_alpha(&ek), &(&lam + &mu));
    let r2 = a.bracket(&a.apply_alpha(&ej), &a.bracket(&ei, &ek, &lam), &mu);
    vec![
        lhs,
        r1.scale_int(-delta),
        r2.scale_int(-delta * koszul(a.parity(i), a.parity(j))),
    ]
}

/// Hom-Jacobi on all basis triples. Sesquilinearity reduces the identity for
/// arbitrary elements to these.
pub fn check_hom_jacobi(a: &Superalgebra) -> CheckOutcome {
    let mut out = CheckOutcome::new(HOM_JACOBI, a.names());
    let triples = par::triples(a.dim());
    let ids = par::map(&triples, |&(i, j, k)| {
        Identity::new(triple_location(a, i, j, k), hom_jacobi_terms(a, i, j, k))
    });
    out.identities = ids;
    out
}

/// `alpha([e_i l e_j]) = [alpha(e_i) l alpha(e_j)]` on all pairs.
pub fn check_multiplicative(a: &Superalgebra) -> CheckOutcome {
    let mut out = CheckOutcome::new(MULTIPLICATIVE, a.names());
    let lam = Poly::lambda(1);
    for (i, j) in par::pairs(a.dim()) {
        let lhs = a.apply_alpha(a.table(i, j));
        let rhs = a.bracket(
            &a.apply_alpha(&a.basis_element(i)),
            &a.apply_alpha(&a.basis_element(j)),
            &lam,
        );
        out.push(Identity::new(pair_location(a, i, j), vec![lhs, -&rhs]));
    }
    out
}

/// `det(alpha)` is a unit of `Q[d]`, i.e. a nonzero rational.
pub fn check_regular(a: &Superalgebra) -> CheckOutcome {
    let mut out = CheckOutcome::new(REGULAR, a.names());
    let det = a.alpha().det();
    match det.constant_value() {
        Some(c) if c != num_traits::Zero::zero() => {}
        _ => out.violate("alpha", format!("det(alpha) = {det} is not a nonzero constant")),
    }
    out
}

/// Selects the optional checks of [`run_suite`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteOptions {
    pub multiplicative: bool,
    pub regular: bool,
}

impl SuiteOptions {
    pub const FULL: SuiteOptions = SuiteOptions {
        multiplicative: true,
        regular: true,
    };
    pub const AXIOMS: SuiteOptions = SuiteOptions {
        multiplicative: false,
        regular: false,
    };
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions::FULL
    }
}

/// Grading, skew-symmetry and Hom-Jacobi, plus the selected optional checks.
pub fn run_suite(a: &Superalgebra, subject: &str, opts: SuiteOptions) -> Report {
    let start = Instant::now();
    let mut report = Report::new(subject);
    report.checks.push(check_grading(a));
    report.checks.push(check_skew_symmetry(a));
    report.checks.push(check_hom_jacobi(a));
    if opts.multiplicative {
        report.checks.push(check_multiplicative(a));
    }
    if opts.regular {
        report.checks.push(check_regular(a));
    }
    report.elapsed = start.elapsed();
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn three_generator_suite() {
        for delta in [1, -1] {
            let r = run_suite(&fixtures::three_generator(delta), "", SuiteOptions::FULL);
            assert!(r.passed());
            assert_eq!(r.checks.len(), 5);
        }
    }

    #[test]
    fn minimal_orientation_completes_to_same_table() {
        for delta in [1, -1] {
            let full = fixtures::three_generator(delta);
            let min = fixtures::three_generator_minimal(delta);
            assert_eq!(full.full_table(), min.full_table());
        }
    }

    #[test]
    fn inconsistent_orientations_break_skew() {
        let a = fixtures::build(
            1,
            &[("a", 0), ("b", 0)],
            &[&["1", "0"], &["0", "1"]],
            &[("a", "b", &[("a", "1")]), ("b", "a", &[("a", "1")])],
        );
        let s = check_skew_symmetry(&a);
        assert_eq!(s.first_failure(), Some("(a, b)"));
    }

    #[test]
    fn hom_jacobi_terms_sum_to_residual() {
        let a = fixtures::cur_jordan();
        let terms = hom_jacobi_terms(&a, 0, 1, 2);
        let sum = crate::algebra::element::sum(a.dim(), &terms);
        assert!(sum.is_zero());
        assert_eq!(terms.len(), 3);
    }

    #[test]
    fn nonregular_twist_reported() {
        let a = fixtures::abelian(2, 1);
        assert!(check_regular(&a).passed());
        let b = fixtures::build(1, &[("a", 0)], &[&["0"]], &[]);
        assert!(!check_regular(&b).passed());
    }
}
