//! Name-keyed registries of interchangeable strategies.
//!
//! Each algorithm family (neighbourhood-matrix construction, maximal clique
//! enumeration, exact isomorphism) is a trait; implementations are boxed and
//! registered under a stable name so callers can pick one at runtime.

use std::fmt;

use crate::error::{Error, Result};

/// Implemented by every strategy trait object stored in a [`Registry`].
pub trait Named {
    fn name(&self) -> &'static str;

    fn description(&self) -> &'static str {
        ""
    }
}

pub struct Registry<T: ?Sized + Named> {
    kind: &'static str,
    entries: Vec<Box<T>>,
}

impl<T: ?Sized + Named> Registry<T> {
    pub fn new(kind: &'static str) -> Self {
        Registry {
            kind,
            entries: Vec::new(),
        }
    }

    /// Adds a strategy. A later registration under an existing name replaces it.
    pub fn register(&mut self, strategy: Box<T>) -> &mut Self {
        let name = strategy.name();
        match self.entries.iter().position(|e| e.name() == name) {
            Some(pos) => self.entries[pos] = strategy,
            None => self.entries.push(strategy),
        }
        self
    }

    pub fn with(mut self, strategy: Box<T>) -> Self {
        self.register(strategy);
        self
    }

    pub fn get(&self, name: &str) -> Result<&T> {
        self.entries
            .iter()
            .find(|e| e.name() == name)
            .map(|b| &**b)
            .ok_or_else(|| Error::UnknownStrategy {
                kind: self.kind,
                name: name.to_string(),
                known: self.names().join(", "),
            })
    }

    /// The first registered strategy.
    pub fn default_strategy(&self) -> &T {
        &self.entries[0]
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.entries.iter().map(|e| e.name()).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &T> {
        self.entries.iter().map(|b| &**b)
    }
}

impl<T: ?Sized + Named> fmt::Debug for Registry<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Registry")
            .field("kind", &self.kind)
            .field("entries", &self.names())
            .finish()
    }
}
