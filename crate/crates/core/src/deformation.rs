//! One-parameter deformations `[a_l b]_t = [a_l b] + t psi_{l,-d-l}(a, b)`,
//! their closure conditions, Nijenhuis operators and the triviality of the
//! deformation they generate.

use std::collections::{BTreeMap, BTreeSet};

use crate::algebra::checks::{self, pair_location, triple_location, SuiteOptions};
use crate::algebra::{koszul, Element, Parity, Superalgebra};
use crate::cohomology::{sorted_tuples, Cochain};
use crate::error::{Error, Result};
use crate::exactmath::{Poly, PolyMatrix, Var};
use crate::par;
use crate::report::{CheckOutcome, Identity, Report};
use crate::representation::adjoint_rep;

pub const QUADRATIC: &str = "deformation-quadratic";
pub const MIXED: &str = "deformation-mixed";
pub const NIJENHUIS: &str = "nijenhuis";
pub const TRIVIAL: &str = "trivial-deformation";

/// An even, lambda-free map `f` on the generators (entries in `d` and the
/// scalar parameters) commuting with the twist.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NijenhuisCandidate {
    f: PolyMatrix,
}

impl NijenhuisCandidate {
    pub fn new(a: &Superalgebra, f: PolyMatrix) -> Result<Self> {
        if f.rows() != a.dim() || f.cols() != a.dim() {
            return Err(Error::Dimension(format!("f must be {0}x{0}", a.dim())));
        }
        crate::algebra::superalgebra::check_even_matrix("f", &f, &a.parities())?;
        let mut allowed: BTreeSet<Var> = a.scalar_params().clone();
        allowed.insert(Var::d());
        for (r, c, p) in f.entries() {
            crate::algebra::superalgebra::check_vars(p, &allowed, &format!("f[{r}][{c}]"))?;
        }
        if f.mul(a.alpha()) != a.alpha().mul(&f) {
            return Err(Error::NotAlphaCompatible("f does not commute with alpha".into()));
        }
        Ok(NijenhuisCandidate { f })
    }

    pub fn scalar(a: &Superalgebra, c: i64) -> Result<Self> {
        NijenhuisCandidate::new(a, PolyMatrix::scalar(a.dim(), Poly::int(c)))
    }

    pub fn matrix(&self) -> &PolyMatrix {
        &self.f
    }

    pub fn apply(&self, x: &Element) -> Element {
        x.apply(&self.f)
    }
}

fn t_var(a: &Superalgebra) -> Result<Var> {
    let t = Var::t();
    if a.scalar_params().contains(&t) {
        return Err(Error::Invalid("the algebra already uses the parameter t".into()));
    }
    Ok(t)
}

fn check_psi(a: &Superalgebra, psi: &Cochain) -> Result<()> {
    if psi.arity() != 2 {
        return Err(Error::Invalid(format!(
            "expected a 2-cochain, got arity {}",
            psi.arity()
        )));
    }
    if psi.parity() != Parity::Even {
        return Err(Error::Grading {
            location: "deformation cochain".into(),
            target: "odd cochain".into(),
        });
    }
    if psi.module_dim() != a.dim() {
        return Err(Error::Dimension("the cochain must take values in the algebra".into()));
    }
    Ok(())
}

/// `psi_{l1, -d-l1}(e_i, e_j)` on every ordered pair.
fn psi_table(a: &Superalgebra, psi: &Cochain) -> BTreeMap<(usize, usize), Element> {
    let mu = -&(&Poly::lambda(1) + &Poly::d());
    par::pairs(a.dim())
        .into_iter()
        .filter_map(|(i, j)| {
            let v = psi.value(&[i, j]).subs(&[(Var::lambda(2), mu.clone())]);
            (!v.is_zero()).then_some(((i, j), v))
        })
        .collect()
}

/// The algebra with the cochain as its bracket table and the same twist.
fn psi_algebra(a: &Superalgebra, psi: &Cochain) -> Result<Superalgebra> {
    let stored = psi_table(a, psi);
    let mut all = stored;
    for (i, j) in par::pairs(a.dim()) {
        all.entry((i, j)).or_insert_with(|| Element::zero(a.dim()));
    }
    Superalgebra::new(
        a.delta(),
        a.basis().to_vec(),
        a.alpha().clone(),
        all,
        a.scalar_params().clone(),
    )
}

/// `A` over `Q[t]` with bracket `[a_l b] + t psi_{l,-d-l}(a, b)`.
pub fn deform(a: &Superalgebra, psi: &Cochain) -> Result<Superalgebra> {
    check_psi(a, psi)?;
    let t = Poly::var(t_var(a)?);
    let table = psi_table(a, psi);
    let stored: BTreeMap<(usize, usize), Element> = par::pairs(a.dim())
        .into_iter()
        .map(|(i, j)| {
            let mut v = a.table(i, j).clone();
            if let Some(p) = table.get(&(i, j)) {
                v.add_scaled(p, &t);
            }
            ((i, j), v)
        })
        .collect();
    let mut params = a.scalar_params().clone();
    params.insert(Var::t());
    Superalgebra::new(a.delta(), a.basis().to_vec(), a.alpha().clone(), stored, params)
}

/// Hom-Jacobi shape with `x` as the outer bracket and `y` as the inner one:
/// `x(alpha a, y(b, c)) - delta x(y(a, b), alpha c) - delta (-1)^{|a||b|} x(alpha b, y(a, c))`.
fn mixed_terms(a: &Superalgebra, x: &Superalgebra, y: &Superalgebra, i: usize, j: usize, k: usize) -> Vec<Element> {
    let (lam, mu) = (Poly::lambda(1), Poly::lambda(2));
    let (ei, ej, ek) = (a.basis_element(i), a.basis_element(j), a.basis_element(k));
    let delta = a.delta();
    let t1 = x.bracket(&a.apply_alpha(&ei), &y.bracket(&ej, &ek, &mu), &lam);
    let t2 = x.bracket(&y.bracket(&ei, &ej, &lam), &a.apply_alpha(&ek), &(&lam + &mu));
    let t3 = x.bracket(&a.apply_alpha(&ej), &y.bracket(&ei, &ek, &lam), &mu);
    vec![
        t1,
        t2.scale_int(-delta),
        t3.scale_int(-delta * koszul(a.parity(i), a.parity(j))),
    ]
}

/// The `t^2` condition (`psi` composed with itself) and the `t^1` condition
/// (`psi` composed with the bracket in both orders) on all basis triples.
pub fn check_deformation_conditions(a: &Superalgebra, psi: &Cochain) -> Result<Vec<CheckOutcome>> {
    check_psi(a, psi)?;
    let p = psi_algebra(a, psi)?;
    let triples = par::triples(a.dim());
    let mut quad = CheckOutcome::new(QUADRATIC, a.names());
    quad.identities = par::map(&triples, |&(i, j, k)| {
        Identity::new(triple_location(a, i, j, k), mixed_terms(a, &p, &p, i, j, k))
    });
    let mut mixed = CheckOutcome::new(MIXED, a.names());
    mixed.identities = par::map(&triples, |&(i, j, k)| {
        let mut terms = mixed_terms(a, a, &p, i, j, k);
        terms.extend(mixed_terms(a, &p, a, i, j, k));
        Identity::new(triple_location(a, i, j, k), terms)
    });
    Ok(vec![quad, mixed])
}

/// `[a_l b]_N = [f(a)_l b] + [a_l f(b)] - f([a_l b])` on every ordered pair.
pub fn nijenhuis_bracket(a: &Superalgebra, f: &NijenhuisCandidate) -> BTreeMap<(usize, usize), Element> {
    let lam = Poly::lambda(1);
    let pairs = par::pairs(a.dim());
    let values = par::map(&pairs, |&(i, j)| {
        let (ei, ej) = (a.basis_element(i), a.basis_element(j));
        let v =
            &(&a.bracket(&f.apply(&ei), &ej, &lam) + &a.bracket(&ei, &f.apply(&ej), &lam)) - &f.apply(a.table(i, j));
        ((i, j), v)
    });
    values.into_iter().collect()
}

/// `[f(a)_l f(b)] = f([a_l b]_N)`; the residual reported is right minus left.
pub fn is_nijenhuis(a: &Superalgebra, f: &NijenhuisCandidate) -> CheckOutcome {
    let lam = Poly::lambda(1);
    let n = nijenhuis_bracket(a, f);
    let mut out = CheckOutcome::new(NIJENHUIS, a.names());
    for (i, j) in par::pairs(a.dim()) {
        let lhs = a.bracket(&f.apply(&a.basis_element(i)), &f.apply(&a.basis_element(j)), &lam);
        let rhs = f.apply(&n[&(i, j)]);
        out.push(Identity::new(pair_location(a, i, j), vec![rhs, -&lhs]));
    }
    out
}

/// The 2-cochain `psi_{l1,l2}(a, b)` whose evaluation at `l2 = -d - l1` is
/// `[a_l1 b]_N`, i.e. `[a_l1 b]_N` with `d` replaced by `-l1 - l2`.
pub fn nijenhuis_two_cochain(a: &Superalgebra, f: &NijenhuisCandidate) -> Result<Cochain> {
    let n = nijenhuis_bracket(a, f);
    let back = -&(&Poly::lambda(1) + &Poly::lambda(2));
    let values = sorted_tuples(a.dim(), 2)
        .into_iter()
        .map(|t| {
            let v = n[&(t[0], t[1])].subs(&[(Var::d(), back.clone())]);
            (t, v)
        })
        .collect();
    Cochain::new_unchecked(a, &adjoint_rep(a), 2, Parity::Even, values)
}

/// Builds the deformation generated by a Nijenhuis operator, checks it, and
/// verifies `T_t([a_l b]_t) = [T_t(a)_l T_t(b)]` with `T_t = id + t f`
/// coefficientwise in `t`.
pub fn verify_trivial_deformation(a: &Superalgebra, f: &NijenhuisCandidate) -> Result<Report> {
    let nij = is_nijenhuis(a, f);
    if let Some(loc) = nij.first_failure() {
        return Err(Error::Precondition(format!(
            "f is not a Nijenhuis operator: fails at {loc}"
        )));
    }
    let t = Poly::var(t_var(a)?);
    let psi = nijenhuis_two_cochain(a, f)?;
    let deformed = deform(a, &psi)?;
    let mut report = checks::run_suite(&deformed, "deformation generated by f", SuiteOptions::FULL);
    report.checks.insert(0, nij);
    report.checks.extend(check_deformation_conditions(a, &psi)?);

    let tt = PolyMatrix::identity(a.dim()).add(&f.matrix().scale(&t));
    let lam = Poly::lambda(1);
    let mut trivial = CheckOutcome::new(TRIVIAL, a.names());
    let pairs = par::pairs(a.dim());
    let per_pair = par::map(&pairs, |&(i, j)| {
        let lhs = deformed.table(i, j).apply(&tt);
        let rhs = a.bracket(&a.basis_element(i).apply(&tt), &a.basis_element(j).apply(&tt), &lam);
        let tv = Var::t();
        (0..=2)
            .map(|k| {
                let l = lhs.map(|p| p.coefficient_of(&tv, k));
                let r = rhs.map(|p| p.coefficient_of(&tv, k));
                Identity::new(format!("{} t^{k}", pair_location(a, i, j)), vec![l, -&r])
            })
            .collect::<Vec<_>>()
    });
    trivial.identities = per_pair.into_iter().flatten().collect();
    report.checks.push(trivial);
    report.note("T_t = id + t f; psi(a, b) = [a_l b]_N with d -> -l1 - l2");
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn psi_e2e3(a: &Superalgebra) -> Cochain {
        Cochain::new(
            a,
            &adjoint_rep(a),
            2,
            Parity::Even,
            [(vec![1, 2], Element::basis(3, 0))].into(),
        )
        .unwrap()
    }

    #[test]
    fn deformed_bracket_is_shifted_by_t() {
        for delta in [1, -1] {
            let a = fixtures::three_generator(delta);
            let b = deform(&a, &psi_e2e3(&a)).unwrap();
            let expected = &Poly::int(delta) + &Poly::var(Var::t());
            assert_eq!(b.table(1, 2), &Element::monomial(3, 0, expected));
            assert!(checks::run_suite(&b, "", SuiteOptions::AXIOMS).passed());
        }
    }

    #[test]
    fn conditions_agree_with_hom_jacobi_of_deformation() {
        let a = fixtures::three_generator(1);
        let psi = psi_e2e3(&a);
        let conds = check_deformation_conditions(&a, &psi).unwrap();
        let deformed = deform(&a, &psi).unwrap();
        let jacobi = checks::check_hom_jacobi(&deformed).passed();
        assert_eq!(conds.iter().all(CheckOutcome::passed), jacobi);
    }

    #[test]
    fn odd_cochain_rejected() {
        let a = fixtures::three_generator(1);
        let psi = Cochain::zero(&a, &adjoint_rep(&a), 2, Parity::Odd);
        assert!(deform(&a, &psi).is_err());
    }

    #[test]
    fn twist_is_not_nijenhuis_on_three_generator_algebra() {
        let a = fixtures::three_generator(1);
        let f = NijenhuisCandidate::new(&a, a.alpha().clone()).unwrap();
        let out = is_nijenhuis(&a, &f);
        let two_e1 = Element::basis(3, 0).scale_int(2);
        let expect = [("(e2, e2)", 1), ("(e2, e3)", -1), ("(e3, e2)", -1), ("(e3, e3)", 1)];
        for (loc, s) in expect {
            let id = out.identities.iter().find(|id| id.location == loc).unwrap();
            assert_eq!(id.residual(), &two_e1.scale_int(s), "{loc}");
        }
        assert_eq!(out.failures().count(), 4);
        assert!(verify_trivial_deformation(&a, &f).is_err());
    }

    #[test]
    fn scalar_operator_gives_trivial_deformation() {
        let a = fixtures::cur_1_1();
        let f = NijenhuisCandidate::scalar(&a, 2).unwrap();
        let report = verify_trivial_deformation(&a, &f).unwrap();
        assert!(report.passed(), "{}", report.render_text());
        assert!(report.check(TRIVIAL).is_some());
    }

    #[test]
    fn candidate_must_commute_with_twist() {
        let a = fixtures::three_generator(1);
        let mut m = PolyMatrix::zeros(3, 3);
        m.set(1, 1, Poly::one());
        assert!(NijenhuisCandidate::new(&a, m).is_err());
    }
}
