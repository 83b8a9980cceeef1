use std::fmt;
use std::sync::Arc;

/// A polynomial indeterminate, identified by name.
///
/// The conventional names are `d` for the translation operator, `l1`, `l2`,
/// `l3` for the lambda variables and `t` for the deformation parameter.
/// Ordering is by name, which fixes the canonical monomial order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var(Arc<str>);

impl Var {
    pub fn new(name: &str) -> Self {
        Var(Arc::from(name))
    }

    pub fn name(&self) -> &str {
        &self.0
    }

    /// The translation operator.
    pub fn d() -> Self {
        Var::new("d")
    }

    /// The `i`-th lambda variable (`l1`, `l2`, ...).
    pub fn lambda(i: usize) -> Self {
        Var::new(&format!("l{i}"))
    }

    pub fn t() -> Self {
        Var::new("t")
    }

    pub fn is_d(&self) -> bool {
        &*self.0 == "d"
    }

    pub fn is_lambda(&self) -> bool {
        self.0.len() > 1 && self.0.starts_with('l') && self.0[1..].bytes().all(|b| b.is_ascii_digit())
    }

    /// Returns the first name `prefix{n}` (n = 1, 2, ...) not present in `avoid`.
    pub fn fresh<'a, I>(prefix: &str, avoid: I) -> Self
    where
        I: IntoIterator<Item = &'a Var> + Clone,
    {
        (1..)
            .map(|n| Var::new(&format!("{prefix}{n}")))
            .find(|v| !avoid.clone().into_iter().any(|a| a == v))
            .expect("unbounded search")
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for Var {
    fn from(s: &str) -> Self {
        Var::new(s)
    }
}

/// Valid variable names: an ASCII letter followed by letters, digits or `_`.
pub fn is_valid_name(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic()) && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}
