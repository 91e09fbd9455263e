//! Variable registries for multivariate series.
//!
//! Every series carries an `Arc<VarSet>`. The main variables `x` and `y`
//! (width and height markers) are always present at indices 0 and 1; their
//! total degree defines the truncation order. Any further variables are
//! auxiliary markers (side perimeters, join variables) with per-variable
//! exponent caps.

use std::sync::Arc;

/// Index of a variable inside its `VarSet`.
pub type Var = usize;

/// Index of `x` in every `VarSet`.
pub const X: Var = 0;
/// Index of `y` in every `VarSet`.
pub const Y: Var = 1;

/// An ordered registry of variable names with per-variable exponent caps.
///
/// Caps for the main variables are advisory (the truncation order governs
/// them); caps for auxiliary variables are hard limits applied by every
/// arithmetic operation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VarSet {
    names: Vec<String>,
    caps: Vec<u16>,
}

impl VarSet {
    /// The plain bivariate registry {x, y}. Main caps are set to `order`.
    pub fn xy(order: u32) -> Arc<VarSet> {
        VarSet::with_aux(order, &[])
    }

    /// {x, y} plus auxiliary variables with explicit caps.
    pub fn with_aux(order: u32, aux: &[(&str, u32)]) -> Arc<VarSet> {
        let mut names = vec!["x".to_string(), "y".to_string()];
        let mut caps = vec![order as u16, order as u16];
        for (name, cap) in aux {
            assert!(
                !names.iter().any(|n| n == name),
                "duplicate variable {name}"
            );
            names.push(name.to_string());
            caps.push(*cap as u16);
        }
        Arc::new(VarSet { names, caps })
    }

    /// Number of variables.
    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        false // x and y are always present
    }

    /// Resolve a variable name to its index.
    pub fn var(&self, name: &str) -> Var {
        self.names
            .iter()
            .position(|n| n == name)
            .unwrap_or_else(|| panic!("unknown variable {name}"))
    }

    pub fn name(&self, v: Var) -> &str {
        &self.names[v]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn cap(&self, v: Var) -> u16 {
        self.caps[v]
    }

    pub fn is_main(&self, v: Var) -> bool {
        v == X || v == Y
    }

    /// Registry with variable `v` removed (used by the restricted Hadamard
    /// join, which eliminates its join variable).
    pub fn without(&self, v: Var) -> Arc<VarSet> {
        assert!(!self.is_main(v), "cannot remove a main variable");
        let mut names = self.names.clone();
        let mut caps = self.caps.clone();
        names.remove(v);
        caps.remove(v);
        Arc::new(VarSet { names, caps })
    }
}
