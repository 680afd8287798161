//! Interned generator symbols.
//!
//! A [`Letter`] packs the intern id and the parity into one `u32`
//! (`id << 1 | parity`), so sign computations never touch the registry.
//! A name is bound to a single parity for the lifetime of the process.

use std::collections::HashMap;
use std::fmt;
use std::sync::{OnceLock, RwLock};

use crate::error::{Error, Result};
use crate::Parity;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(u32);

/// Built-in generators, registered first so that their relative order (and
/// hence canonical printing) is stable.
const BUILTIN: &[(&str, Parity)] = &[
    ("x", Parity::Even),
    ("xi", Parity::Odd),
    ("eta", Parity::Odd),
    ("y", Parity::Even),
    ("phi", Parity::Even),
    ("u", Parity::Odd),
    ("a", Parity::Even),
    ("ainv", Parity::Even),
    ("beta", Parity::Odd),
    ("gamma", Parity::Odd),
    ("d", Parity::Even),
    ("dinv", Parity::Even),
    ("dx", Parity::Even),
    ("dxi", Parity::Odd),
    ("dphi", Parity::Even),
    ("du", Parity::Odd),
    ("x'", Parity::Even),
    ("xi'", Parity::Odd),
    ("eta'", Parity::Odd),
    ("y'", Parity::Even),
    ("phi'", Parity::Even),
    ("u'", Parity::Odd),
    ("a'", Parity::Even),
    ("beta'", Parity::Odd),
    ("gamma'", Parity::Odd),
    ("d'", Parity::Even),
];

#[derive(Default)]
struct Registry {
    names: Vec<String>,
    by_name: HashMap<String, Letter>,
}

fn registry() -> &'static RwLock<Registry> {
    static REG: OnceLock<RwLock<Registry>> = OnceLock::new();
    REG.get_or_init(|| {
        let mut reg = Registry::default();
        for (name, parity) in BUILTIN {
            reg.insert(name, *parity);
        }
        RwLock::new(reg)
    })
}

impl Registry {
    fn insert(&mut self, name: &str, parity: Parity) -> Letter {
        let id = self.names.len() as u32;
        let letter = Letter(id << 1 | parity.bit());
        self.names.push(name.to_string());
        self.by_name.insert(name.to_string(), letter);
        letter
    }
}

impl Letter {
    /// Interns `name` with `parity`, or returns the existing letter.
    pub fn intern(name: &str, parity: Parity) -> Result<Letter> {
        if let Some(l) = Letter::lookup(name) {
            return if l.parity() == parity {
                Ok(l)
            } else {
                Err(Error::ParityConflict {
                    name: name.to_string(),
                })
            };
        }
        let mut reg = registry().write().expect("letter registry poisoned");
        if let Some(l) = reg.by_name.get(name) {
            return Ok(*l);
        }
        Ok(reg.insert(name, parity))
    }

    pub fn lookup(name: &str) -> Option<Letter> {
        registry()
            .read()
            .expect("letter registry poisoned")
            .by_name
            .get(name)
            .copied()
    }

    /// Lookup for names known to exist (built-ins).
    pub fn named(name: &str) -> Letter {
        Letter::lookup(name).unwrap_or_else(|| panic!("unregistered generator `{name}`"))
    }

    pub fn parity(self) -> Parity {
        Parity::from_bit(self.0 & 1 == 1)
    }

    pub fn id(self) -> u32 {
        self.0 >> 1
    }

    pub fn name(self) -> String {
        registry().read().expect("letter registry poisoned").names[self.id() as usize].clone()
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_parities() {
        assert_eq!(Letter::named("xi").parity(), Parity::Odd);
        assert_eq!(Letter::named("a").parity(), Parity::Even);
        assert_eq!(Letter::named("u").parity(), Parity::Odd);
        assert!(Letter::named("x") < Letter::named("xi"));
    }

    #[test]
    fn parity_conflict_is_rejected() {
        assert!(Letter::intern("beta", Parity::Even).is_err());
        let l = Letter::intern("zeta_test", Parity::Odd).unwrap();
        assert_eq!(Letter::intern("zeta_test", Parity::Odd).unwrap(), l);
    }
}
