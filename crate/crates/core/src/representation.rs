//! Conformal modules: the twisted representation axiom, adjoint and
//! alpha-power-twisted adjoint modules, semidirect sums and the criterion
//! for the dual module.

use std::collections::{BTreeMap, BTreeSet};

use crate::algebra::checks::{self, SuiteOptions};
use crate::algebra::superalgebra::{check_even_matrix, check_names, check_vars};
use crate::algebra::{koszul, sesquilinear, Element, Generator, Parity, Superalgebra};
use crate::error::{Error, Result};
use crate::exactmath::{Poly, PolyMatrix, Var};
use crate::par;
use crate::report::{CheckOutcome, Identity, Report};

pub const REPRESENTATION: &str = "representation";
pub const REPRESENTATION_STRICT: &str = "representation-untwisted";
pub const DUAL: &str = "dual-condition";

/// A module `M` with twist `beta` and action matrices: `rho(e_i)_l (v_j) =
/// sum_k rho[i][k][j] v_k`, entries polynomial in `l1` and `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    module_basis: Vec<Generator>,
    beta: PolyMatrix,
    rho: Vec<PolyMatrix>,
}

impl Representation {
    pub fn new(a: &Superalgebra, module_basis: Vec<Generator>, beta: PolyMatrix, rho: Vec<PolyMatrix>) -> Result<Self> {
        check_names(&module_basis)?;
        let parities: Vec<Parity> = module_basis.iter().map(|g| g.parity).collect();
        let m = parities.len();
        check_even_matrix("beta", &beta, &parities)?;
        if rho.len() != a.dim() {
            return Err(Error::Dimension(format!(
                "{} action matrices for {} generators",
                rho.len(),
                a.dim()
            )));
        }
        let mut allowed: BTreeSet<Var> = a.scalar_params().clone();
        allowed.insert(Var::d());
        for (r, c, p) in beta.entries() {
            check_vars(p, &allowed, &format!("beta[{r}][{c}]"))?;
        }
        allowed.insert(Var::lambda(1));
        for (i, mat) in rho.iter().enumerate() {
            if mat.rows() != m || mat.cols() != m {
                return Err(Error::Dimension(format!("action of {} is not {m}x{m}", a.name(i))));
            }
            for (r, c, p) in mat.entries() {
                let location = format!("rho({})[{r}][{c}]", a.name(i));
                check_vars(p, &allowed, &location)?;
                if !p.is_zero() && parities[r] != parities[c] + a.parity(i) {
                    return Err(Error::Grading {
                        location,
                        target: module_basis[r].name.clone(),
                    });
                }
            }
        }
        Ok(Representation {
            module_basis,
            beta,
            rho,
        })
    }

    pub fn zero(a: &Superalgebra, module_basis: Vec<Generator>) -> Result<Self> {
        let m = module_basis.len();
        Representation::new(
            a,
            module_basis,
            PolyMatrix::identity(m),
            vec![PolyMatrix::zeros(m, m); a.dim()],
        )
    }

    pub fn module_basis(&self) -> &[Generator] {
        &self.module_basis
    }

    pub fn dim(&self) -> usize {
        self.module_basis.len()
    }

    pub fn names(&self) -> Vec<String> {
        self.module_basis.iter().map(|g| g.name.clone()).collect()
    }

    pub fn parity(&self, m: usize) -> Parity {
        self.module_basis[m].parity
    }

    pub fn beta(&self) -> &PolyMatrix {
        &self.beta
    }

    pub fn rho(&self) -> &[PolyMatrix] {
        &self.rho
    }

    pub fn action_column(&self, i: usize, j: usize) -> Element {
        let mat = &self.rho[i];
        Element::from_coeffs((0..mat.rows()).map(|k| mat.get(k, j).clone()).collect())
    }

    /// `rho(x)_lam (v)` by sesquilinearity.
    pub fn act(&self, x: &Element, v: &Element, lam: &Poly) -> Element {
        sesquilinear(x, v, lam, self.dim(), |i, j| self.action_column(i, j))
    }

    pub fn apply_beta(&self, v: &Element) -> Element {
        v.apply(&self.beta)
    }

    pub fn module_element(&self, m: usize) -> Element {
        Element::basis(self.dim(), m)
    }
}

fn triple_loc(a: &Superalgebra, r: &Representation, i: usize, j: usize, m: usize) -> String {
    format!("({}, {}; {})", a.name(i), a.name(j), r.module_basis[m].name)
}

fn rep_triples(a: &Superalgebra, r: &Representation) -> Vec<(usize, usize, usize)> {
    par::pairs(a.dim())
        .into_iter()
        .flat_map(|(i, j)| (0..r.dim()).map(move |m| (i, j, m)))
        .collect()
}

/// The twisted axiom
/// `rho([a_l b])_{l+m} beta = rho(alpha a)_l rho(b)_m - delta (-1)^{|a||b|} rho(alpha b)_m rho(a)_l`
/// on every generator pair and module generator; with `strict` also the
/// untwisted commutator identity.
pub fn check_representation(a: &Superalgebra, r: &Representation, strict: bool) -> Vec<CheckOutcome> {
    let (lam, mu) = (Poly::lambda(1), Poly::lambda(2));
    let lm = &lam + &mu;
    let triples = rep_triples(a, r);
    let mut twisted = CheckOutcome::new(REPRESENTATION, r.names());
    twisted.identities = par::map(&triples, |&(i, j, m)| {
        let (ei, ej, v) = (a.basis_element(i), a.basis_element(j), r.module_element(m));
        let lhs = r.act(a.table(i, j), &r.apply_beta(&v), &lm);
        let t1 = r.act(&a.apply_alpha(&ei), &r.act(&ej, &v, &mu), &lam);
        let t2 = r.act(&a.apply_alpha(&ej), &r.act(&ei, &v, &lam), &mu);
        let s = a.delta() * koszul(a.parity(i), a.parity(j));
        Identity::new(triple_loc(a, r, i, j, m), vec![lhs, -&t1, t2.scale_int(s)])
    });
    let mut out = vec![twisted];
    if strict {
        let mut plain = CheckOutcome::new(REPRESENTATION_STRICT, r.names());
        plain.identities = par::map(&triples, |&(i, j, m)| {
            let (ei, ej, v) = (a.basis_element(i), a.basis_element(j), r.module_element(m));
            let t1 = r.act(&ei, &r.act(&ej, &v, &mu), &lam);
            let t2 = r.act(&ej, &r.act(&ei, &v, &lam), &mu);
            let rhs = r.act(a.table(i, j), &v, &lm);
            Identity::new(
                triple_loc(a, r, i, j, m),
                vec![t1, t2.scale_int(-koszul(a.parity(i), a.parity(j))), -&rhs],
            )
        });
        out.push(plain);
    }
    out
}

/// `ad(a)_l (b) = delta [a_l b]` with `beta = alpha`.
pub fn adjoint_rep(a: &Superalgebra) -> Representation {
    twisted_adjoint_unchecked(a, &PolyMatrix::identity(a.dim()))
}

/// The module `rho(a)_l b = delta [alpha^s(a)_l b]` on the algebra itself,
/// `beta = alpha`.
pub fn twisted_adjoint(a: &Superalgebra, s: i32) -> Result<Representation> {
    let power = a.alpha_pow(s)?;
    Ok(twisted_adjoint_unchecked(a, &power))
}

fn twisted_adjoint_unchecked(a: &Superalgebra, power: &PolyMatrix) -> Representation {
    let n = a.dim();
    let lam = Poly::lambda(1);
    let rho = (0..n)
        .map(|i| {
            let x = a.basis_element(i).apply(power);
            let mut mat = PolyMatrix::zeros(n, n);
            for j in 0..n {
                let col = a.bracket(&x, &a.basis_element(j), &lam).scale_int(a.delta());
                for k in 0..n {
                    mat.set(k, j, col.coeff(k).clone());
                }
            }
            mat
        })
        .collect();
    Representation {
        module_basis: a.basis().to_vec(),
        beta: a.alpha().clone(),
        rho,
    }
}

/// `R + M` with bracket `[a_l b] + delta rho(a)_l v - (-1)^{|u||b|} rho(b)_{-l-d} u`
/// and twist `alpha + beta`; module names clashing with algebra names get
/// an `_m` suffix. Rejects representations failing the twisted axiom.
pub fn semidirect_sum(a: &Superalgebra, r: &Representation) -> Result<(Superalgebra, Report)> {
    let rep = check_representation(a, r, false);
    if let Some(loc) = rep[0].first_failure() {
        return Err(Error::Precondition(format!("representation axiom fails at {loc}")));
    }
    semidirect_sum_unchecked(a, r)
}

/// [`semidirect_sum`] without validating the representation.
pub fn semidirect_sum_unchecked(a: &Superalgebra, r: &Representation) -> Result<(Superalgebra, Report)> {
    let n = a.dim();
    let total = n + r.dim();
    let mut basis = a.basis().to_vec();
    let mut taken: BTreeSet<String> = basis.iter().map(|g| g.name.clone()).collect();
    taken.extend(r.names());
    for g in r.module_basis() {
        let mut name = g.name.clone();
        if a.index_of(&name).is_some() {
            name.push_str("_m");
            while taken.contains(&name) {
                name.push_str("_m");
            }
        }
        taken.insert(name.clone());
        basis.push(Generator::new(&name, g.parity));
    }
    let mut stored: BTreeMap<(usize, usize), Element> =
        a.stored().iter().map(|(&k, v)| (k, v.embed(total, 0))).collect();
    let flip = -&(&Poly::lambda(1) + &Poly::d());
    for i in 0..n {
        for m in 0..r.dim() {
            let col = r.action_column(i, m);
            if col.is_zero() {
                continue;
            }
            stored.insert((i, n + m), col.scale_int(a.delta()).embed(total, n));
            let s = -koszul(r.parity(m), a.parity(i));
            let back = col.subs(&[(Var::lambda(1), flip.clone())]).scale_int(s);
            stored.insert((n + m, i), back.embed(total, n));
        }
    }
    let sum = Superalgebra::new(
        a.delta(),
        basis,
        a.alpha().block_diag(r.beta()),
        stored,
        a.scalar_params().clone(),
    )?;
    let report = checks::run_suite(&sum, "semidirect sum", SuiteOptions::FULL);
    Ok((sum, report))
}

/// The condition under which the dual module with `rho~(a)_l f = -f o rho(a)_l`
/// and twist `beta` is a representation:
/// `beta rho([a_l b])_{l+m} = (-1)^{|a||b|} rho(a)_l rho(alpha b)_m - delta rho(b)_m rho(alpha a)_l`.
pub fn check_dual_condition(a: &Superalgebra, r: &Representation) -> CheckOutcome {
    let (lam, mu) = (Poly::lambda(1), Poly::lambda(2));
    let lm = &lam + &mu;
    let triples = rep_triples(a, r);
    let mut out = CheckOutcome::new(DUAL, r.names());
    out.identities = par::map(&triples, |&(i, j, m)| {
        let (ei, ej, v) = (a.basis_element(i), a.basis_element(j), r.module_element(m));
        let lhs = r.apply_beta(&r.act(a.table(i, j), &v, &lm));
        let t1 = r.act(&ei, &r.act(&a.apply_alpha(&ej), &v, &mu), &lam);
        let t2 = r.act(&ej, &r.act(&a.apply_alpha(&ei), &v, &lam), &mu);
        let s = koszul(a.parity(i), a.parity(j));
        Identity::new(
            triple_loc(a, r, i, j, m),
            vec![lhs, t1.scale_int(-s), t2.scale_int(a.delta())],
        )
    });
    out
}

/// [`check_dual_condition`] for the adjoint representation.
pub fn check_coadjoint_condition(a: &Superalgebra) -> CheckOutcome {
    check_dual_condition(a, &adjoint_rep(a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn adjoint_modules_of_fixtures() {
        for (name, a) in fixtures::passing_algebras() {
            let out = check_representation(&a, &adjoint_rep(&a), false);
            assert!(out[0].passed(), "{name}");
        }
    }

    #[test]
    fn adjoint_of_current_algebra_satisfies_untwisted_axiom() {
        let a = fixtures::cur_1_1();
        let out = check_representation(&a, &adjoint_rep(&a), true);
        assert_eq!(out.len(), 2);
        assert!(out.iter().all(CheckOutcome::passed));
    }

    #[test]
    fn zero_module_semidirect_sum_passes() {
        let a = fixtures::cur_1_1();
        let r = Representation::zero(&a, vec![Generator::new("v", Parity::Odd)]).unwrap();
        let (s, report) = semidirect_sum(&a, &r).unwrap();
        assert!(report.passed());
        assert_eq!(s.dim(), 3);
    }

    #[test]
    fn adjoint_semidirect_sum_renames_module() {
        let a = fixtures::cur_1_1();
        let (s, report) = semidirect_sum(&a, &adjoint_rep(&a)).unwrap();
        assert_eq!(s.names(), ["x", "y", "x_m", "y_m"]);
        assert!(report.passed(), "{}", report.render_text());
    }

    #[test]
    fn broken_action_rejected() {
        let a = fixtures::cur_1_1();
        // rho(x) = E11 gives rho(x) rho(y) - rho(y) rho(x) = -rho(y)
        let mut rho_x = PolyMatrix::zeros(2, 2);
        rho_x.set(0, 0, Poly::one());
        let mut rho_y = PolyMatrix::zeros(2, 2);
        rho_y.set(1, 0, Poly::int(5));
        let r = Representation::new(&a, a.basis().to_vec(), PolyMatrix::identity(2), vec![rho_x, rho_y]).unwrap();
        assert!(!check_representation(&a, &r, false)[0].passed());
        assert!(semidirect_sum(&a, &r).is_err());
    }

    #[test]
    fn negative_power_needs_regular_twist() {
        let a = fixtures::build(1, &[("a", 0)], &[&["0"]], &[]);
        assert!(twisted_adjoint(&a, -1).is_err());
        assert!(twisted_adjoint(&fixtures::three_generator(1), -1).is_ok());
    }
}
