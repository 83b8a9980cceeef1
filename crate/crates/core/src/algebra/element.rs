use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::exactmath::{MissingVariable, Poly, PolyMatrix, Rational, Var};

/// A vector `sum_i f_i e_i` over a fixed basis of a free `Q[d]`-module.
///
/// Coefficients may carry lambda variables and scalar parameters besides
/// `d`; in that case the vector is the value of a lambda-bracket (an element
/// of `R[lambda]`) and the extra variables are passive under sesquilinearity.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Element {
    coeffs: Vec<Poly>,
}

/// A bracket value: an [`Element`] whose coefficients may involve lambda
/// variables.
pub type LambdaValue = Element;

impl Element {
    pub fn zero(dim: usize) -> Self {
        Element {
            coeffs: vec![Poly::zero(); dim],
        }
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        Element::monomial(dim, i, Poly::one())
    }

    pub fn monomial(dim: usize, i: usize, coeff: Poly) -> Self {
        let mut e = Element::zero(dim);
        e.coeffs[i] = coeff;
        e
    }

    pub fn from_coeffs(coeffs: Vec<Poly>) -> Self {
        Element { coeffs }
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, i: usize) -> &Poly {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Poly> {
        self.coeffs
    }

    pub fn set(&mut self, i: usize, p: Poly) {
        self.coeffs[i] = p;
    }

    /// Nonzero `(index, coefficient)` pairs in basis order.
    pub fn support(&self) -> impl Iterator<Item = (usize, &Poly)> {
        self.coeffs.iter().enumerate().filter(|(_, p)| !p.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Poly::is_zero)
    }

    pub fn vars(&self) -> BTreeSet<Var> {
        self.coeffs.iter().flat_map(Poly::vars).collect()
    }

    pub fn map(&self, f: impl Fn(&Poly) -> Poly) -> Element {
        Element {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn substitute(&self, assignments: &HashMap<Var, Poly>) -> Element {
        self.map(|p| p.substitute(assignments))
    }

    pub fn subs(&self, assignments: &[(Var, Poly)]) -> Element {
        let map: HashMap<Var, Poly> = assignments.iter().cloned().collect();
        self.substitute(&map)
    }

    pub fn scale(&self, c: &Poly) -> Element {
        self.map(|p| p * c)
    }

    pub fn scale_int(&self, n: i64) -> Element {
        self.map(|p| p.scale_int(n))
    }

    pub fn add_assign(&mut self, other: &Element) {
        assert_eq!(self.dim(), other.dim(), "element dimension mismatch");
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            if !b.is_zero() {
                *a += b;
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Element, c: &Poly) {
        assert_eq!(self.dim(), other.dim(), "element dimension mismatch");
        if c.is_zero() {
            return;
        }
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            if !b.is_zero() {
                *a += &(b * c);
            }
        }
    }

    /// Matrix action `M v` with `M` acting on coefficient columns. For a
    /// matrix over `Q[d]` this is the action of a `Q[d]`-module map.
    pub fn apply(&self, m: &PolyMatrix) -> Element {
        assert_eq!(m.cols(), self.dim(), "matrix does not match element");
        let mut out = Element::zero(m.rows());
        for (j, c) in self.support() {
            for k in 0..m.rows() {
                let e = m.get(k, j);
                if !e.is_zero() {
                    out.coeffs[k] += &(e * c);
                }
            }
        }
        out
    }

    /// Embeds into a larger basis, placing coordinate `i` at `offset + i`.
    pub fn embed(&self, dim: usize, offset: usize) -> Element {
        let mut out = Element::zero(dim);
        for (i, p) in self.coeffs.iter().enumerate() {
            out.coeffs[offset + i] = p.clone();
        }
        out
    }

    /// Coordinates `offset..offset + len` as an element of rank `len`.
    pub fn restrict(&self, offset: usize, len: usize) -> Element {
        Element {
            coeffs: self.coeffs[offset..offset + len].to_vec(),
        }
    }

    pub fn eval(&self, point: &HashMap<Var, Rational>) -> Result<Vec<Rational>, MissingVariable> {
        self.coeffs.iter().map(|p| p.eval(point)).collect()
    }

    /// Renders as `c1*name1 + ...` with the given basis names.
    pub fn display_with(&self, names: &[String]) -> String {
        let parts: Vec<String> = self
            .support()
            .map(|(i, p)| {
                let name = names.get(i).map_or_else(|| format!("#{i}"), Clone::clone);
                if p.is_one() {
                    name
                } else if p.num_terms() == 1 {
                    format!("{p}*{name}")
                } else {
                    format!("({p})*{name}")
                }
            })
            .collect();
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.coeffs).finish()
    }
}

impl Add<&Element> for &Element {
    type Output = Element;

    fn add(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        out.add_assign(rhs);
        out
    }
}

impl Sub<&Element> for &Element {
    type Output = Element;

    fn sub(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        out.add_assign(&-rhs);
        out
    }
}

impl Neg for &Element {
    type Output = Element;

    fn neg(self) -> Element {
        self.map(|p| -p)
    }
}

/// Sum of a list of elements of the same rank.
pub fn sum(dim: usize, items: &[Element]) -> Element {
    let mut acc = Element::zero(dim);
    for e in items {
        acc.add_assign(e);
    }
    acc
}

/// The sesquilinear extension of a table of generator products:
///
/// `[x_L y] = sum_{i,j} x_i(d -> -L) * y_j(d -> d + L) * table(i, j)(l1 -> L)`.
///
/// The table entries are polynomials in `d` and `l1`; `L` is an arbitrary
/// polynomial. Every other variable is passive. This one rule realizes the
/// lambda-bracket, module actions, lambda-products and conformal maps.
pub fn sesquilinear<F>(x: &Element, y: &Element, lam: &Poly, out_dim: usize, table: F) -> Element
where
    F: Fn(usize, usize) -> Element,
{
    let d = Var::d();
    let l1 = Var::lambda(1);
    let left: HashMap<Var, Poly> = [(d.clone(), -lam)].into();
    let right: HashMap<Var, Poly> = [(d.clone(), &Poly::d() + lam)].into();
    let tab: HashMap<Var, Poly> = [(l1.clone(), lam.clone())].into();
    let is_l1 = *lam == Poly::lambda(1);

    let mut out = Element::zero(out_dim);
    let ys: Vec<(usize, Poly)> = y.support().map(|(j, g)| (j, g.substitute(&right))).collect();
    for (i, f) in x.support() {
        let f = f.substitute(&left);
        for (j, g) in &ys {
            let t = table(i, *j);
            if t.is_zero() {
                continue;
            }
            let t = if is_l1 { t } else { t.substitute(&tab) };
            out.add_scaled(&t, &(&f * g));
        }
    }
    out
}
