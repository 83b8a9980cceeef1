//! Helpers shared by the integration tests: an independent derivation-space
//! dimension count and random Hom-associative instances.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use conformal_core::algebra::{ConformalEndo, Element, Generator, Parity, Superalgebra};
use conformal_core::constructions::HomAssocConformal;
use conformal_core::derivation::{check_alpha_k_derivation, DerivationCandidate};
use conformal_core::exactmath::{frac, int, Monomial, Poly, PolyMatrix, Rational, Var};

/// Rank by plain Gaussian elimination with full pivot search.
#[allow(clippy::needless_range_loop)]
pub fn rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r][c].clone();
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = &rows[i][c] / &pivot;
                for k in c..cols {
                    let v = &rows[r][k] * &f;
                    rows[i][k] -= v;
                }
            }
        }
        r += 1;
    }
    r
}

/// Dimension of the alpha^k-derivations with entries in the span of
/// `l1^a d^b`, found by running the checker on a map whose entries carry one
/// symbolic coefficient per monomial and counting independent linear
/// conditions on those coefficients.
pub fn brute_force_derivation_dimension(a: &Superalgebra, k: u32, parity: Parity, lmax: u32, dmax: u32) -> usize {
    let n = a.dim();
    let mut entries = PolyMatrix::zeros(n, n);
    let mut coeffs = Vec::new();
    for row in 0..n {
        for col in 0..n {
            if a.parity(row) != a.parity(col) + parity {
                continue;
            }
            let mut p = Poly::zero();
            for e in 0..=lmax {
                for f in 0..=dmax {
                    let c = Var::new(&format!("c{}", coeffs.len()));
                    coeffs.push(c.clone());
                    let m = Monomial::from_factors([(c, 1), (Var::lambda(1), e), (Var::d(), f)]);
                    p += &Poly::monomial(m, int(1));
                }
            }
            entries.set(row, col, p);
        }
    }
    let cand = DerivationCandidate::new(ConformalEndo::in_l1(parity, entries), k);
    let out = check_alpha_k_derivation(a, &cand);
    assert!(out.violations.is_empty(), "parity violations in a homogeneous ansatz");
    let unknowns: BTreeSet<Var> = coeffs.iter().cloned().collect();
    let mut rows = Vec::new();
    for id in &out.identities {
        for (_, p) in id.residual().support() {
            // group by the monomial in the non-coefficient variables
            let mut groups: BTreeMap<Monomial, Vec<Rational>> = BTreeMap::new();
            for (m, c) in p.terms() {
                let (inner, outer) = m.split(&unknowns);
                let idx = coeffs
                    .iter()
                    .position(|v| inner.degree_in(v) == 1)
                    .expect("linear in coefficients");
                groups
                    .entry(outer)
                    .or_insert_with(|| vec![Rational::zero(); coeffs.len()])[idx] += c;
            }
            rows.extend(groups.into_values());
        }
    }
    coeffs.len() - rank(rows)
}

fn nonzero(rng: &mut ChaCha8Rng) -> Rational {
    loop {
        let n = rng.gen_range(-5i64..=5);
        if n != 0 {
            return frac(n, rng.gen_range(1i64..=4));
        }
    }
}

/// A random small Hom-associative conformal superalgebra.
///
/// Even instances (delta = 1): the 1|1 matrix superalgebra in a randomly
/// rescaled basis, as a current algebra, with product and twist composed with
/// the automorphism `E12 -> q E12`, `E21 -> E21 / q`.
/// Odd instances (delta = -1): strictly upper triangular 3x3 matrices with
/// random parities, rescaled basis and an arbitrary diagonal twist; all triple
/// products vanish.
type Shape = (
    Vec<&'static str>,
    Vec<Parity>,
    Vec<(usize, usize, usize)>,
    Vec<Rational>,
);

pub fn random_hom_assoc(rng: &mut ChaCha8Rng, delta: i64) -> HomAssocConformal {
    let (names, parities, table, auto): Shape = if delta == 1 {
        // E11, E22, E12, E21
        let q = nonzero(rng);
        let inv = Rational::from_integer(1.into()) / &q;
        (
            vec!["E11", "E22", "E12", "E21"],
            vec![Parity::Even, Parity::Even, Parity::Odd, Parity::Odd],
            vec![
                (0, 0, 0),
                (1, 1, 1),
                (0, 2, 2),
                (2, 1, 2),
                (1, 3, 3),
                (3, 0, 3),
                (2, 3, 0),
                (3, 2, 1),
            ],
            vec![int(1), int(1), q, inv],
        )
    } else {
        let p = Parity::from_bit(rng.gen_range(0u8..=1)).unwrap();
        let r = Parity::from_bit(rng.gen_range(0u8..=1)).unwrap();
        (
            vec!["E12", "E23", "E13"],
            vec![p, r, p + r],
            vec![(0, 1, 2)],
            vec![nonzero(rng), nonzero(rng), nonzero(rng)],
        )
    };
    let n = names.len();
    let scale: Vec<Rational> = (0..n).map(|_| nonzero(rng)).collect();
    let mut products = BTreeMap::new();
    for &(i, j, k) in &table {
        // (s_i E_i)(s_j E_j) = s_i s_j / s_k (s_k E_k), then the automorphism
        let c = &scale[i] * &scale[j] / &scale[k];
        let c = if delta == 1 { c * &auto[k] } else { c };
        let mut v = Element::zero(n);
        v.set(k, Poly::constant(c));
        products.insert((i, j), v);
    }
    let mut alpha = PolyMatrix::zeros(n, n);
    for (i, x) in auto.iter().enumerate() {
        alpha.set(i, i, Poly::constant(x.clone()));
    }
    let basis = names
        .iter()
        .zip(&parities)
        .map(|(s, p)| Generator::new(s, *p))
        .collect();
    HomAssocConformal::new(delta, basis, alpha, products).expect("random instance")
}
