use std::collections::{BTreeMap, BTreeSet, HashMap};

use super::element::{sesquilinear, Element};
use super::parity::{koszul, Parity};
use crate::error::{Error, Result};
use crate::exactmath::{Poly, PolyMatrix, Var};

/// A named homogeneous generator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Generator {
    pub name: String,
    pub parity: Parity,
}

impl Generator {
    pub fn new(name: &str, parity: Parity) -> Self {
        Generator {
            name: name.to_string(),
            parity,
        }
    }
}

/// A finitely generated delta-Hom-Jordan Lie conformal superalgebra on a free
/// `Q[d]`-module, given by structure constants `[e_i l1 e_j]`.
///
/// Only some orientations need to be stored; the missing ones are completed
/// by skew-symmetry, `[e_j l e_i] = -delta (-1)^{p_i p_j} [e_i (-l-d) e_j]`.
/// Pairs with neither orientation stored bracket to zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Superalgebra {
    delta: i64,
    basis: Vec<Generator>,
    alpha: PolyMatrix,
    stored: BTreeMap<(usize, usize), Element>,
    scalar_params: BTreeSet<Var>,
    full: Vec<Element>,
}

pub(crate) fn check_delta(delta: i64) -> Result<()> {
    if delta == 1 || delta == -1 {
        Ok(())
    } else {
        Err(Error::BadDelta(delta))
    }
}

pub(crate) fn check_names(basis: &[Generator]) -> Result<()> {
    let mut seen = BTreeSet::new();
    for g in basis {
        if !crate::exactmath::var::is_valid_name(&g.name) {
            return Err(Error::Invalid(format!("basis name `{}` is not an identifier", g.name)));
        }
        if !seen.insert(g.name.as_str()) {
            return Err(Error::DuplicateName(g.name.clone()));
        }
    }
    Ok(())
}

/// Checks that a square matrix preserves the grading given by `parities`.
pub(crate) fn check_even_matrix(what: &str, m: &PolyMatrix, parities: &[Parity]) -> Result<()> {
    if m.rows() != parities.len() || m.cols() != parities.len() {
        return Err(Error::Dimension(format!(
            "{what} is {}x{}, expected {n}x{n}",
            m.rows(),
            m.cols(),
            n = parities.len()
        )));
    }
    for (r, c, p) in m.entries() {
        if !p.is_zero() && parities[r] != parities[c] {
            return Err(Error::NotEven {
                what: what.to_string(),
                row: r,
                col: c,
            });
        }
    }
    Ok(())
}

pub(crate) fn check_vars(p: &Poly, allowed: &BTreeSet<Var>, location: &str) -> Result<()> {
    match p.vars().into_iter().find(|v| !allowed.contains(v)) {
        Some(v) => Err(Error::ForbiddenVariable {
            var: v.to_string(),
            location: location.to_string(),
        }),
        None => Ok(()),
    }
}

impl Superalgebra {
    pub fn new(
        delta: i64,
        basis: Vec<Generator>,
        alpha: PolyMatrix,
        stored: BTreeMap<(usize, usize), Element>,
        scalar_params: BTreeSet<Var>,
    ) -> Result<Self> {
        check_delta(delta)?;
        check_names(&basis)?;
        let n = basis.len();
        let parities: Vec<Parity> = basis.iter().map(|g| g.parity).collect();
        check_even_matrix("alpha", &alpha, &parities)?;
        for v in &scalar_params {
            if v.is_d() || v.is_lambda() {
                return Err(Error::Invalid(format!("`{v}` cannot be a scalar parameter")));
            }
        }
        let mut alpha_vars = scalar_params.clone();
        alpha_vars.insert(Var::d());
        for (r, c, p) in alpha.entries() {
            check_vars(p, &alpha_vars, &format!("alpha[{r}][{c}]"))?;
        }
        let mut sc_vars = alpha_vars;
        sc_vars.insert(Var::lambda(1));
        for (&(i, j), value) in &stored {
            for idx in [i, j] {
                if idx >= n {
                    return Err(Error::IndexOutOfRange { index: idx, dim: n });
                }
            }
            if value.dim() != n {
                return Err(Error::Dimension(format!(
                    "bracket value has rank {}, expected {n}",
                    value.dim()
                )));
            }
            let location = format!("[{} l1 {}]", basis[i].name, basis[j].name);
            for (k, p) in value.support() {
                check_vars(p, &sc_vars, &location)?;
                if parities[k] != parities[i] + parities[j] {
                    return Err(Error::Grading {
                        location,
                        target: basis[k].name.clone(),
                    });
                }
            }
        }
        let mut alg = Superalgebra {
            delta,
            basis,
            alpha,
            stored,
            scalar_params,
            full: Vec::new(),
        };
        alg.full = alg.complete_table();
        Ok(alg)
    }

    fn complete_table(&self) -> Vec<Element> {
        let n = self.dim();
        let mut full = Vec::with_capacity(n * n);
        let flip: HashMap<Var, Poly> = [(Var::lambda(1), -&(&Poly::lambda(1) + &Poly::d()))].into();
        for i in 0..n {
            for j in 0..n {
                let v = match (self.stored.get(&(i, j)), self.stored.get(&(j, i))) {
                    (Some(v), _) => v.clone(),
                    (None, Some(w)) => {
                        let s = -self.delta * koszul(self.parity(i), self.parity(j));
                        w.substitute(&flip).scale_int(s)
                    }
                    (None, None) => Element::zero(n),
                };
                full.push(v);
            }
        }
        full
    }

    pub fn delta(&self) -> i64 {
        self.delta
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Generator] {
        &self.basis
    }

    pub fn names(&self) -> Vec<String> {
        self.basis.iter().map(|g| g.name.clone()).collect()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.basis[i].name
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.basis.iter().position(|g| g.name == name)
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.basis[i].parity
    }

    pub fn parities(&self) -> Vec<Parity> {
        self.basis.iter().map(|g| g.parity).collect()
    }

    pub fn alpha(&self) -> &PolyMatrix {
        &self.alpha
    }

    /// Structure constants as given, before skew completion.
    pub fn stored(&self) -> &BTreeMap<(usize, usize), Element> {
        &self.stored
    }

    pub fn scalar_params(&self) -> &BTreeSet<Var> {
        &self.scalar_params
    }

    /// `[e_i l1 e_j]`, completed by skew-symmetry when not stored.
    pub fn table(&self, i: usize, j: usize) -> &Element {
        &self.full[i * self.dim() + j]
    }

    pub fn basis_element(&self, i: usize) -> Element {
        Element::basis(self.dim(), i)
    }

    pub fn zero_element(&self) -> Element {
        Element::zero(self.dim())
    }

    /// `[x_lam y]` for arbitrary elements by conformal sesquilinearity.
    pub fn bracket(&self, x: &Element, y: &Element, lam: &Poly) -> Element {
        sesquilinear(x, y, lam, self.dim(), |i, j| self.table(i, j).clone())
    }

    /// Brackets an element of `R[lambda]` (left) with `c` at the polynomial
    /// `outer`: each coefficient `P_k(lambda, d)` contributes
    /// `P_k(lambda, -outer) [e_k outer c]`.
    pub fn bracket_nested_left(&self, inner: &Element, outer: &Poly, c: &Element) -> Result<Element> {
        let outer_vars = outer.vars();
        if let Some(v) = c.vars().into_iter().find(|v| v.is_lambda() && outer_vars.contains(v)) {
            return Err(Error::ForbiddenVariable {
                var: v.to_string(),
                location: "right argument of a nested bracket".to_string(),
            });
        }
        Ok(self.bracket(inner, c, outer))
    }

    pub fn apply_alpha(&self, x: &Element) -> Element {
        x.apply(&self.alpha)
    }

    /// `alpha^k`, with negative powers through the inverse.
    pub fn alpha_pow(&self, k: i32) -> Result<PolyMatrix> {
        self.alpha.signed_pow(k).ok_or(Error::NotRegular)
    }

    pub fn is_regular(&self) -> bool {
        self.alpha.inverse().is_some()
    }

    /// Same data with a different sign; the stored orientations are kept.
    pub fn with_delta(&self, delta: i64) -> Result<Self> {
        Superalgebra::new(
            delta,
            self.basis.clone(),
            self.alpha.clone(),
            self.stored.clone(),
            self.scalar_params.clone(),
        )
    }

    /// Substitutes a scalar parameter by a polynomial in the remaining ones.
    pub fn specialize(&self, var: &Var, value: &Poly) -> Result<Self> {
        let map: HashMap<Var, Poly> = [(var.clone(), value.clone())].into();
        let mut params = self.scalar_params.clone();
        params.remove(var);
        Superalgebra::new(
            self.delta,
            self.basis.clone(),
            self.alpha.substitute(&map),
            self.stored.iter().map(|(k, v)| (*k, v.substitute(&map))).collect(),
            params,
        )
    }

    /// Structure constants with both orientations made explicit.
    pub fn full_table(&self) -> BTreeMap<(usize, usize), Element> {
        let n = self.dim();
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| !self.table(i, j).is_zero())
            .map(|(i, j)| ((i, j), self.table(i, j).clone()))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn skew_completion_of_missing_orientation() {
        let a = fixtures::cur_1_1();
        // [y l x] = -delta (-1)^0 [x_{-l-d} y] = -y
        assert_eq!(a.table(1, 0), &Element::basis(2, 1).scale_int(-1));
    }

    #[test]
    fn bracket_is_sesquilinear() {
        let a = fixtures::cur_1_1();
        let lam = Poly::lambda(1);
        let dx = Element::monomial(2, 0, Poly::d());
        let y = a.basis_element(1);
        // [dx_l y] = -l [x_l y]
        assert_eq!(
            a.bracket(&dx, &y, &lam),
            a.bracket(&a.basis_element(0), &y, &lam).scale(&-&lam)
        );
        let dy = Element::monomial(2, 1, Poly::d());
        // [x_l dy] = (d + l) [x_l y]
        assert_eq!(
            a.bracket(&a.basis_element(0), &dy, &lam),
            Element::monomial(2, 1, &Poly::d() + &lam)
        );
    }

    #[test]
    fn rejects_bad_grading_and_names() {
        let odd = Generator::new("u", Parity::Odd);
        let even = Generator::new("v", Parity::Even);
        let stored = [((0, 1), Element::basis(2, 1))].into();
        let err = Superalgebra::new(
            1,
            vec![odd.clone(), even.clone()],
            PolyMatrix::identity(2),
            stored,
            BTreeSet::new(),
        );
        assert!(matches!(err, Err(Error::Grading { .. })));
        let dup = Superalgebra::new(
            1,
            vec![even.clone(), even],
            PolyMatrix::identity(2),
            BTreeMap::new(),
            BTreeSet::new(),
        );
        assert!(dup.is_err());
        assert!(Superalgebra::new(2, vec![odd], PolyMatrix::identity(1), BTreeMap::new(), BTreeSet::new()).is_err());
    }

    #[test]
    fn lambda_in_twist_rejected() {
        let g = Generator::new("u", Parity::Even);
        let alpha = PolyMatrix::scalar(1, Poly::lambda(1));
        assert!(Superalgebra::new(1, vec![g], alpha, BTreeMap::new(), BTreeSet::new()).is_err());
    }

    #[test]
    fn specialize_parameter() {
        let g = Generator::new("u", Parity::Even);
        let t = Var::t();
        let stored = [((0, 0), Element::monomial(1, 0, &Poly::var(t.clone()) * &Poly::d()))].into();
        let a = Superalgebra::new(1, vec![g], PolyMatrix::identity(1), stored, [t.clone()].into()).unwrap();
        let b = a.specialize(&t, &Poly::zero()).unwrap();
        assert!(b.table(0, 0).is_zero());
        assert!(b.scalar_params().is_empty());
    }

    #[test]
    fn alpha_powers() {
        let a = fixtures::three_generator(-1);
        assert_eq!(a.alpha_pow(2).unwrap(), PolyMatrix::identity(3));
        assert_eq!(a.alpha_pow(-1).unwrap(), a.alpha().clone());
    }
}
