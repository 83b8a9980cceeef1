use std::collections::HashMap;

use super::element::Element;
use super::parity::Parity;
use crate::exactmath::{Poly, PolyMatrix, Rational, Var};

/// A conformal linear map `f_lam` on a free `Q[d]`-module of finite rank,
/// stored as the matrix of `f_v(e_j) = sum_k entries[k][j] e_k`, a polynomial
/// in the conformal variable `v` and `d`. The extension rule
/// `f_lam(h(d) e_j) = h(d + lam) f_lam(e_j)` makes `f_lam d = (d + lam) f_lam`
/// hold by construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ConformalEndo {
    parity: Parity,
    var: Var,
    entries: PolyMatrix,
}

impl ConformalEndo {
    pub fn new(parity: Parity, var: Var, entries: PolyMatrix) -> Self {
        ConformalEndo { parity, var, entries }
    }

    /// A map written in the default conformal variable `l1`.
    pub fn in_l1(parity: Parity, entries: PolyMatrix) -> Self {
        ConformalEndo::new(parity, Var::lambda(1), entries)
    }

    pub fn zero(dim: usize) -> Self {
        ConformalEndo::in_l1(Parity::Even, PolyMatrix::zeros(dim, dim))
    }

    pub fn identity(dim: usize) -> Self {
        ConformalEndo::in_l1(Parity::Even, PolyMatrix::identity(dim))
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn var(&self) -> &Var {
        &self.var
    }

    pub fn entries(&self) -> &PolyMatrix {
        &self.entries
    }

    pub fn dim(&self) -> usize {
        self.entries.cols()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_zero()
    }

    pub fn is_lambda_free(&self) -> bool {
        self.entries.entries().all(|(_, _, p)| !p.contains_var(&self.var))
    }

    /// `f_v(e_j)` as an element whose coefficients involve `v`.
    pub fn column(&self, j: usize) -> Element {
        Element::from_coeffs(
            (0..self.entries.rows())
                .map(|k| self.entries.get(k, j).clone())
                .collect(),
        )
    }

    /// `f_lam(x)` for an arbitrary (possibly lambda-valued) element `x`.
    pub fn apply(&self, x: &Element, lam: &Poly) -> Element {
        let shift: HashMap<Var, Poly> = [(Var::d(), &Poly::d() + lam)].into();
        let at: HashMap<Var, Poly> = [(self.var.clone(), lam.clone())].into();
        let mut out = Element::zero(self.entries.rows());
        for (j, h) in x.support() {
            let col = self.column(j);
            if col.is_zero() {
                continue;
            }
            out.add_scaled(&col.substitute(&at), &h.substitute(&shift));
        }
        out
    }

    /// Renames the conformal variable.
    pub fn with_var(&self, var: Var) -> Self {
        let entries = self.entries.map(|p| p.rename(&[(self.var.clone(), var.clone())]));
        ConformalEndo::new(self.parity, var, entries)
    }

    pub fn scale(&self, c: &Poly) -> Self {
        ConformalEndo::new(self.parity, self.var.clone(), self.entries.scale(c))
    }

    pub fn add(&self, other: &ConformalEndo) -> Self {
        let other = other.with_var(self.var.clone());
        ConformalEndo::new(self.parity, self.var.clone(), self.entries.add(&other.entries))
    }

    /// The matrix of the `n`-th coefficient map, `f_(n) = n! [v^n] f_v`.
    pub fn coefficient_map(&self, n: u32) -> PolyMatrix {
        let fact: Rational = (1..=n as i64).map(crate::exactmath::int).product();
        self.entries.map(|p| p.coefficient_of(&self.var, n).scale(&fact))
    }

    /// Matrix of `f_lam` with every entry substituted at `lam`.
    pub fn at(&self, lam: &Poly) -> PolyMatrix {
        let at: HashMap<Var, Poly> = [(self.var.clone(), lam.clone())].into();
        self.entries.substitute(&at)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::parse_poly;

    fn p(s: &str) -> Poly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn translation_rule() {
        let f = ConformalEndo::in_l1(
            Parity::Even,
            PolyMatrix::from_rows(vec![vec![p("l1*d"), p("0")], vec![p("1"), p("l1")]]).unwrap(),
        );
        let x = Element::from_coeffs(vec![p("d"), p("0")]);
        let lam = p("l2");
        // f_l2(d e0) = (d + l2) f_l2(e0)
        let expected = f.apply(&Element::basis(2, 0), &lam).scale(&p("d+l2"));
        assert_eq!(f.apply(&x, &lam), expected);
        assert_eq!(f.coefficient_map(1).get(0, 0), &p("d"));
    }

    #[test]
    fn composition_shifts_inner_d() {
        // D_l(e0) = d e0; (D_l D_m)(e0) = D_l(d e0) = (d + l) d e0
        let dm = ConformalEndo::in_l1(Parity::Even, PolyMatrix::scalar(1, p("d")));
        let inner = dm.apply(&Element::basis(1, 0), &p("l2"));
        let outer = dm.apply(&inner, &p("l1"));
        assert_eq!(outer, Element::from_coeffs(vec![p("(d+l1)*d")]));
    }
}
