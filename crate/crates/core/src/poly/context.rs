use std::fmt;
use std::sync::Arc;

use super::PolyError;

/// Ordered list of variable names shared by every polynomial of a ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VariableContext {
    names: Vec<String>,
}

/// Shared handle to a [`VariableContext`].
pub type Ctx = Arc<VariableContext>;

impl VariableContext {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Ctx, PolyError> {
        if names.is_empty() {
            return Err(PolyError::EmptyContext);
        }
        let mut out: Vec<String> = Vec::with_capacity(names.len());
        for n in names {
            let n = n.as_ref().trim();
            if n.is_empty() {
                return Err(PolyError::InvalidVariableName(n.to_string()));
            }
            if out.iter().any(|m| m == n) {
                return Err(PolyError::DuplicateVariable(n.to_string()));
            }
            out.push(n.to_string());
        }
        Ok(Arc::new(VariableContext { names: out }))
    }

    /// The ring `Q[x, y, z]`.
    pub fn xyz() -> Ctx {
        Self::new(&["x", "y", "z"]).expect("static names")
    }

    /// The ring `Q[x, y, z, w]`.
    pub fn xyzw() -> Ctx {
        Self::new(&["x", "y", "z", "w"]).expect("static names")
    }

    pub fn n_vars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Context with variable `var` removed.
    pub fn without(&self, var: usize) -> Result<Ctx, PolyError> {
        let names: Vec<&str> = self
            .names
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != var)
            .map(|(_, n)| n.as_str())
            .collect();
        VariableContext::new(&names)
    }

    /// Context with a fresh variable prepended (used for elimination tricks).
    pub fn with_leading(&self, stem: &str) -> Ctx {
        let mut name = stem.to_string();
        while self.names.contains(&name) {
            name.push('_');
        }
        let mut names = vec![name];
        names.extend(self.names.iter().cloned());
        Arc::new(VariableContext { names })
    }
}

impl fmt::Display for VariableContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.names.join(","))
    }
}

pub(crate) fn same_context(a: &Ctx, b: &Ctx) -> bool {
    Arc::ptr_eq(a, b) || a.names == b.names
}
