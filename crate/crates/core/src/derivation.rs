//! alpha^k-derivations: the twisted Leibniz check, inner derivations,
//! commutators and an exact solver for the derivation space at bounded degree.

use std::collections::{BTreeMap, BTreeSet};

use crate::algebra::checks::pair_location;
use crate::algebra::{koszul, ConformalEndo, Element, Parity, Superalgebra};
use crate::error::{Error, Result};
use crate::exactmath::{kernel, Monomial, Poly, PolyMatrix, Rational, Var};
use crate::par;
use crate::report::{CheckOutcome, Identity};

pub const DERIVATION: &str = "alpha-k-derivation";

/// A conformal map `D_lam` together with the twist exponent `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationCandidate {
    pub map: ConformalEndo,
    pub k: u32,
}

impl DerivationCandidate {
    pub fn new(map: ConformalEndo, k: u32) -> Self {
        DerivationCandidate { map, k }
    }

    pub fn parity(&self) -> Parity {
        self.map.parity()
    }

    pub fn is_zero(&self) -> bool {
        self.map.is_zero()
    }
}

/// A lambda variable not used by `map` (neither as its conformal variable
/// nor as a passive one).
fn fresh_lambda(map: &ConformalEndo) -> Var {
    let mut used: BTreeSet<Var> = map.entries().entries().flat_map(|(_, _, p)| p.vars()).collect();
    used.insert(map.var().clone());
    (1..).map(Var::lambda).find(|v| !used.contains(v)).expect("unbounded")
}

/// `D_lam(alpha(e_j)) = alpha(D_lam(e_j))` for every generator.
pub fn alpha_commutation(a: &Superalgebra, map: &ConformalEndo) -> Vec<Identity> {
    let lam = Poly::var(map.var().clone());
    (0..a.dim())
        .map(|j| {
            let e = a.basis_element(j);
            let lhs = map.apply(&a.apply_alpha(&e), &lam);
            let rhs = a.apply_alpha(&map.column(j));
            Identity::new(format!("alpha-commutation ({})", a.name(j)), vec![lhs, -&rhs])
        })
        .collect()
}

/// The Leibniz terms on `(e_i, e_j)` with `lam` the map's variable and `mu`
/// a fresh one:
/// `D_l[e_i m e_j] - delta^k [D_l(e_i) (l+m) alpha^k e_j] - delta^k (-1)^{|e_i||D|} [alpha^k e_i m D_l(e_j)]`.
pub fn leibniz_terms(
    a: &Superalgebra,
    map: &ConformalEndo,
    alpha_k: &PolyMatrix,
    k: u32,
    mu: &Var,
    i: usize,
    j: usize,
) -> Vec<Element> {
    let lam = Poly::var(map.var().clone());
    let mu = Poly::var(mu.clone());
    let sign_k = if k % 2 == 1 { a.delta() } else { 1 };
    let ei = a.basis_element(i);
    let ej = a.basis_element(j);
    let lhs = map.apply(&a.bracket(&ei, &ej, &mu), &lam);
    let r1 = a.bracket(&map.apply(&ei, &lam), &ej.apply(alpha_k), &(&lam + &mu));
    let r2 = a.bracket(&ei.apply(alpha_k), &map.apply(&ej, &lam), &mu);
    vec![
        lhs,
        r1.scale_int(-sign_k),
        r2.scale_int(-sign_k * koszul(a.parity(i), map.parity())),
    ]
}

fn parity_violations(a: &Superalgebra, map: &ConformalEndo, out: &mut CheckOutcome) {
    for (r, c, p) in map.entries().entries() {
        if !p.is_zero() && a.parity(r) != a.parity(c) + map.parity() {
            out.violate(
                format!("entry ({}, {})", a.name(r), a.name(c)),
                format!("map is not homogeneous of parity {}", map.parity()),
            );
        }
    }
}

/// Checks the twisted Leibniz rule on all basis pairs together with
/// commutation with `alpha`.
pub fn check_alpha_k_derivation(a: &Superalgebra, cand: &DerivationCandidate) -> CheckOutcome {
    let mut out = CheckOutcome::new(DERIVATION, a.names());
    let map = &cand.map;
    if map.dim() != a.dim() || map.entries().rows() != a.dim() {
        out.violate("shape", format!("map has rank {}, algebra {}", map.dim(), a.dim()));
        return out;
    }
    parity_violations(a, map, &mut out);
    out.identities.extend(alpha_commutation(a, map));
    let alpha_k = a.alpha().pow(cand.k);
    let mu = fresh_lambda(map);
    let pairs = par::pairs(a.dim());
    let ids = par::map(&pairs, |&(i, j)| {
        Identity::new(
            pair_location(a, i, j),
            leibniz_terms(a, map, &alpha_k, cand.k, &mu, i, j),
        )
    });
    out.identities.extend(ids);
    out
}

/// Homogeneous parity of an element's support, `None` when mixed.
fn element_parity(a: &Superalgebra, x: &Element) -> Option<Parity> {
    let mut ps = x.support().map(|(i, _)| a.parity(i));
    let first = ps.next().unwrap_or(Parity::Even);
    ps.all(|p| p == first).then_some(first)
}

/// The inner derivation `b -> delta [a_l alpha^{k+1}(b)]` of an
/// `alpha`-fixed element, an alpha^{k+1}-derivation when `delta^k = 1`.
pub fn inner_derivation(a: &Superalgebra, x: &Element, k: u32) -> Result<DerivationCandidate> {
    if x.dim() != a.dim() {
        return Err(Error::Dimension(format!(
            "element has rank {}, algebra {}",
            x.dim(),
            a.dim()
        )));
    }
    if x.vars().iter().any(|v| !v.is_d() && !a.scalar_params().contains(v)) {
        return Err(Error::Precondition(
            "element coefficients must be polynomials in d".into(),
        ));
    }
    if a.apply_alpha(x) != *x {
        return Err(Error::Precondition("the element is not fixed by alpha".into()));
    }
    if a.delta() == -1 && k % 2 == 1 {
        return Err(Error::Precondition("delta^k must be 1".into()));
    }
    let parity = element_parity(a, x).ok_or_else(|| Error::Precondition("the element is not homogeneous".into()))?;
    let n = a.dim();
    let alpha_k1 = a.alpha().pow(k + 1);
    let lam = Poly::lambda(1);
    let mut entries = PolyMatrix::zeros(n, n);
    for j in 0..n {
        let col = a
            .bracket(x, &a.basis_element(j).apply(&alpha_k1), &lam)
            .scale_int(a.delta());
        for r in 0..n {
            entries.set(r, j, col.coeff(r).clone());
        }
    }
    Ok(DerivationCandidate::new(ConformalEndo::in_l1(parity, entries), k + 1))
}

/// `[D_l D']_m = D_l D'_{m-l} - (-1)^{|D||D'|} D'_{m-l} D_l`, a conformal map in
/// `m = l2` with `l = l1` passive, at exponent `k + s`.
pub fn commutator(d1: &DerivationCandidate, d2: &DerivationCandidate) -> Result<DerivationCandidate> {
    let n = d1.map.dim();
    if d2.map.dim() != n {
        return Err(Error::Dimension(format!("ranks {} and {}", n, d2.map.dim())));
    }
    for c in [d1, d2] {
        let passive = c
            .map
            .entries()
            .entries()
            .flat_map(|(_, _, p)| p.vars())
            .any(|v| v.is_lambda() && v != *c.map.var());
        if passive {
            return Err(Error::Precondition(
                "commutator of maps with passive lambda variables".into(),
            ));
        }
    }
    let (l1, l2) = (Var::lambda(1), Var::lambda(2));
    let f = d1.map.with_var(l1.clone());
    let g = d2.map.with_var(Var::lambda(3));
    let lam = Poly::var(l1);
    let shifted = &Poly::var(l2.clone()) - &lam;
    let sign = koszul(f.parity(), g.parity());
    let mut entries = PolyMatrix::zeros(n, n);
    for j in 0..n {
        let e = Element::basis(n, j);
        let fg = f.apply(&g.apply(&e, &shifted), &lam);
        let gf = g.apply(&f.apply(&e, &lam), &shifted);
        let col = &fg - &gf.scale_int(sign);
        for r in 0..n {
            entries.set(r, j, col.coeff(r).clone());
        }
    }
    Ok(DerivationCandidate::new(
        ConformalEndo::new(f.parity() + g.parity(), l2, entries),
        d1.k + d2.k,
    ))
}

/// Degree bounds `(lambda-degree, d-degree)` for an ansatz.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreeBounds {
    pub lambda: u32,
    pub d: u32,
}

impl DegreeBounds {
    pub fn new(lambda: u32, d: u32) -> Self {
        DegreeBounds { lambda, d }
    }

    /// Monomials `l^a d^b` within the bounds, in a fixed order.
    pub fn monomials(&self, lam: &Var) -> Vec<Monomial> {
        let mut out = Vec::new();
        for a in 0..=self.lambda {
            for b in 0..=self.d {
                out.push(Monomial::from_factors([(lam.clone(), a), (Var::d(), b)]));
            }
        }
        out
    }
}

impl Default for DegreeBounds {
    fn default() -> Self {
        DegreeBounds::new(2, 2)
    }
}

/// One unknown of the derivation ansatz: the coefficient of `monomial` in
/// entry `(row, col)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Unknown {
    pub row: usize,
    pub col: usize,
    pub monomial: Monomial,
}

/// The unknowns of the ansatz for maps of the given parity.
pub fn ansatz(a: &Superalgebra, parity: Parity, bounds: DegreeBounds) -> Vec<Unknown> {
    let mons = bounds.monomials(&Var::lambda(1));
    let n = a.dim();
    let mut out = Vec::new();
    for row in 0..n {
        for col in 0..n {
            if a.parity(row) != a.parity(col) + parity {
                continue;
            }
            for m in &mons {
                out.push(Unknown {
                    row,
                    col,
                    monomial: m.clone(),
                });
            }
        }
    }
    out
}

fn unit_map(n: usize, parity: Parity, u: &Unknown) -> ConformalEndo {
    let mut m = PolyMatrix::zeros(n, n);
    m.set(
        u.row,
        u.col,
        Poly::monomial(u.monomial.clone(), Rational::from_integer(1.into())),
    );
    ConformalEndo::in_l1(parity, m)
}

/// Flattens residuals into `(identity, component, monomial) -> coefficient`.
fn flatten(ids: &[Identity]) -> BTreeMap<(usize, usize, Monomial), Rational> {
    let mut out = BTreeMap::new();
    for (t, id) in ids.iter().enumerate() {
        for (c, p) in id.residual().support() {
            for (m, q) in p.terms() {
                out.insert((t, c, m.clone()), q.clone());
            }
        }
    }
    out
}

/// A basis of the alpha^k-derivations of the given parity whose entries lie
/// in the span of `l1^a d^b`, `a <= bounds.lambda`, `b <= bounds.d`.
///
/// Every residual is linear in the map, so the residual of a unit map per
/// unknown gives one column of the homogeneous system.
pub fn solve_derivation_space(
    a: &Superalgebra,
    k: u32,
    parity: Parity,
    bounds: DegreeBounds,
) -> Result<Vec<DerivationCandidate>> {
    let n = a.dim();
    let unknowns = ansatz(a, parity, bounds);
    let columns = par::map(&unknowns, |u| {
        let cand = DerivationCandidate::new(unit_map(n, parity, u), k);
        flatten(&check_alpha_k_derivation(a, &cand).identities)
    });
    let rows: BTreeSet<&(usize, usize, Monomial)> = columns.iter().flat_map(|c| c.keys()).collect();
    let system: Vec<Vec<Rational>> = rows
        .iter()
        .map(|key| {
            columns
                .iter()
                .map(|c| c.get(*key).cloned().unwrap_or_else(Rational::default))
                .collect()
        })
        .collect();
    let basis = kernel(&system, unknowns.len())?;
    Ok(basis
        .into_iter()
        .map(|v| {
            let mut m = PolyMatrix::zeros(n, n);
            for (u, c) in unknowns.iter().zip(&v) {
                if c == &Rational::default() {
                    continue;
                }
                let cur = m.get(u.row, u.col).clone();
                m.set(u.row, u.col, &cur + &Poly::monomial(u.monomial.clone(), c.clone()));
            }
            DerivationCandidate::new(ConformalEndo::in_l1(parity, m), k)
        })
        .collect())
}
