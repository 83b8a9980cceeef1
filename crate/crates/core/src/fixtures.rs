//! Small algebras used by the tests, the acceptance suite, the benchmark and
//! the command-line tool.

use std::collections::{BTreeMap, BTreeSet};

use crate::algebra::{Element, Generator, Parity, Superalgebra};
use crate::constructions::{current_algebra, JordanLieSuperalgebra};
use crate::exactmath::{int, parse_poly, Poly, PolyMatrix, Rational};

fn parity(bit: u8) -> Parity {
    Parity::from_bit(bit).expect("parity bit")
}

fn gens(basis: &[(&str, u8)]) -> Vec<Generator> {
    basis.iter().map(|&(n, p)| Generator::new(n, parity(p))).collect()
}

fn poly(s: &str) -> Poly {
    parse_poly(s).expect("fixture polynomial")
}

/// `(left, right, [(target, polynomial)])`.
pub type BracketSpec<'a> = (&'a str, &'a str, &'a [(&'a str, &'a str)]);

/// Builds a superalgebra from compact expressions. Bracket entries are
/// `(left, right, [(target, polynomial in d and l1)])`.
pub fn build(delta: i64, basis: &[(&str, u8)], alpha: &[&[&str]], brackets: &[BracketSpec]) -> Superalgebra {
    let generators = gens(basis);
    let idx = |name: &str| basis.iter().position(|(n, _)| *n == name).expect("fixture name");
    let n = basis.len();
    let alpha = PolyMatrix::from_rows(alpha.iter().map(|r| r.iter().map(|s| poly(s)).collect()).collect())
        .unwrap_or_else(|| PolyMatrix::zeros(0, 0));
    let alpha = if n == 0 { PolyMatrix::zeros(0, 0) } else { alpha };
    let mut stored = BTreeMap::new();
    for (a, b, terms) in brackets {
        let mut v = Element::zero(n);
        for (t, p) in terms.iter() {
            v.set(idx(t), poly(p));
        }
        stored.insert((idx(a), idx(b)), v);
    }
    Superalgebra::new(delta, generators, alpha, stored, BTreeSet::new()).expect("fixture algebra")
}

/// The three-generator algebra: `e1` even, `e2`, `e3` odd,
/// `alpha(e1) = delta e1`, `alpha` swaps `e2` and `e3`, `[e2 l e3] = delta e1`.
/// Both orientations of the nonzero bracket are stored.
pub fn three_generator(delta: i64) -> Superalgebra {
    let d = delta.to_string();
    build(
        delta,
        &[("e1", 0), ("e2", 1), ("e3", 1)],
        &[&[&d, "0", "0"], &["0", "0", "1"], &["0", "1", "0"]],
        &[("e2", "e3", &[("e1", &d)]), ("e3", "e2", &[("e1", "1")])],
    )
}

/// The same algebra with only `[e2 l e3]` given; the other orientation is
/// completed by skew-symmetry.
pub fn three_generator_minimal(delta: i64) -> Superalgebra {
    let d = delta.to_string();
    build(
        delta,
        &[("e1", 0), ("e2", 1), ("e3", 1)],
        &[&[&d, "0", "0"], &["0", "0", "1"], &["0", "1", "0"]],
        &[("e2", "e3", &[("e1", &d)])],
    )
}

/// Rank-`n` abelian algebra of even generators `a1..an` with identity twist.
pub fn abelian(n: usize, delta: i64) -> Superalgebra {
    let names: Vec<String> = (1..=n).map(|i| format!("a{i}")).collect();
    let basis: Vec<Generator> = names.iter().map(|s| Generator::new(s, Parity::Even)).collect();
    Superalgebra::new(delta, basis, PolyMatrix::identity(n), BTreeMap::new(), BTreeSet::new()).expect("abelian algebra")
}

fn rat_rows(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
    rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
}

fn jordan_lie(
    delta: i64,
    basis: &[(&str, u8)],
    alpha: &[&[i64]],
    brackets: &[(usize, usize, &[i64])],
    checked: bool,
) -> crate::Result<JordanLieSuperalgebra> {
    let br = brackets
        .iter()
        .map(|&(i, j, v)| ((i, j), v.iter().map(|&x| int(x)).collect()))
        .collect();
    if checked {
        JordanLieSuperalgebra::new(delta, gens(basis), br, rat_rows(alpha))
    } else {
        JordanLieSuperalgebra::new_unchecked(delta, gens(basis), br, rat_rows(alpha))
    }
}

/// `x` even, `y` odd, `[x, y] = y`, identity twist, delta = 1.
pub fn g_1_1() -> JordanLieSuperalgebra {
    jordan_lie(1, &[("x", 0), ("y", 1)], &[&[1, 0], &[0, 1]], &[(0, 1, &[0, 1])], true).expect("g_1_1")
}

/// The same bracket with delta = -1; fails Hom-Jacobi on `(x, x, y)`.
pub fn g_1_1_jordan_sign() -> JordanLieSuperalgebra {
    jordan_lie(
        -1,
        &[("x", 0), ("y", 1)],
        &[&[1, 0], &[0, 1]],
        &[(0, 1, &[0, 1])],
        false,
    )
    .expect("shape")
}

/// A delta = -1 example: `x` even, `y1`, `y2` odd, `[x, y1] = y2`,
/// `[y1, y2] = x`, identity twist.
pub fn g_jordan() -> JordanLieSuperalgebra {
    jordan_lie(
        -1,
        &[("x", 0), ("y1", 1), ("y2", 1)],
        &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]],
        &[(0, 1, &[0, 0, 1]), (1, 2, &[1, 0, 0])],
        true,
    )
    .expect("g_jordan")
}

/// sl2 with `[h, e] = 2e`, `[h, f] = -2f`, `[e, f] = h`.
pub fn sl2() -> JordanLieSuperalgebra {
    jordan_lie(
        1,
        &[("h", 0), ("e", 0), ("f", 0)],
        &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]],
        &[(0, 1, &[0, 2, 0]), (0, 2, &[0, 0, -2]), (1, 2, &[1, 0, 0])],
        true,
    )
    .expect("sl2")
}

/// Heisenberg algebra `[p, q] = c` with the multiplicative twist `p -> 2p`,
/// `q -> -q`, `c -> -2c`.
pub fn heisenberg_twisted() -> JordanLieSuperalgebra {
    jordan_lie(
        1,
        &[("p", 0), ("q", 0), ("c", 0)],
        &[&[2, 0, 0], &[0, -1, 0], &[0, 0, -2]],
        &[(0, 1, &[0, 0, 1])],
        true,
    )
    .expect("heisenberg")
}

/// `[x, y] = y`, `[x, z] = z`, `[y, z] = x`: fails the Jacobi identity.
pub fn broken_three() -> JordanLieSuperalgebra {
    jordan_lie(
        1,
        &[("x", 0), ("y", 0), ("z", 0)],
        &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]],
        &[(0, 1, &[0, 1, 0]), (0, 2, &[0, 0, 1]), (1, 2, &[1, 0, 0])],
        false,
    )
    .expect("shape")
}

/// Abelian 1|1 superalgebra.
pub fn g_abelian() -> JordanLieSuperalgebra {
    jordan_lie(1, &[("u", 0), ("v", 1)], &[&[1, 0], &[0, 1]], &[], true).expect("abelian")
}

/// `Cur(g_1_1)`: `[x l y] = y`.
pub fn cur_1_1() -> Superalgebra {
    current_algebra(&g_1_1()).expect("current algebra")
}

/// `Cur(g_jordan)`, a delta = -1 current algebra.
pub fn cur_jordan() -> Superalgebra {
    current_algebra(&g_jordan()).expect("current algebra")
}

/// Named fixtures that pass the full suite.
pub fn passing_algebras() -> Vec<(&'static str, Superalgebra)> {
    vec![
        ("three-generator delta=1", three_generator(1)),
        ("three-generator delta=-1", three_generator(-1)),
        ("cur(g 1|1)", cur_1_1()),
        ("cur(g jordan)", cur_jordan()),
        ("cur(sl2)", current_algebra(&sl2()).expect("cur sl2")),
        (
            "cur(heisenberg)",
            current_algebra(&heisenberg_twisted()).expect("cur heis"),
        ),
        ("abelian rank 2", abelian(2, 1)),
        ("twisted cur(sl2)", twisted_cur_sl2()),
        ("twisted cur(g jordan)", twisted_cur_jordan()),
    ]
}

/// Yau twist of `Cur(sl2)` by the automorphism `h -> h`, `e -> 2e`, `f -> f/2`.
/// A non-nilpotent algebra whose twist is not an involution.
pub fn twisted_cur_sl2() -> Superalgebra {
    let cur = current_algebra(&sl2()).expect("cur sl2");
    let beta = diagonal(&["1", "2", "1/2"]);
    crate::constructions::yau_twist(&cur, &beta).expect("twist").0
}

/// Yau twist of `Cur(g_jordan)` by `x -> 2x`, `y1 -> -y1`, `y2 -> -2 y2`.
pub fn twisted_cur_jordan() -> Superalgebra {
    let beta = diagonal(&["2", "-1", "-2"]);
    crate::constructions::yau_twist(&cur_jordan(), &beta).expect("twist").0
}

fn diagonal(entries: &[&str]) -> PolyMatrix {
    let n = entries.len();
    let mut m = PolyMatrix::zeros(n, n);
    for (i, s) in entries.iter().enumerate() {
        m.set(i, i, poly(s));
    }
    m
}
