use std::collections::{BTreeMap, BTreeSet};

use crate::canon::{canonical_form, CanonicalCode};
use crate::graph::Graph;

/// A set of graphs up to isomorphism, keyed by canonical code. Iteration
/// order is the code order, so it is deterministic.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GraphFamily {
    members: BTreeMap<CanonicalCode, Graph>,
}

impl GraphFamily {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `g` unless an isomorphic graph is present. Returns whether it
    /// was added.
    pub fn insert(&mut self, g: Graph) -> bool {
        let code = canonical_form(&g);
        self.insert_with_code(code, g)
    }

    pub fn insert_with_code(&mut self, code: CanonicalCode, g: Graph) -> bool {
        match self.members.entry(code) {
            std::collections::btree_map::Entry::Occupied(_) => false,
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(g);
                true
            }
        }
    }

    pub fn contains(&self, g: &Graph) -> bool {
        self.members.contains_key(&canonical_form(g))
    }

    pub fn contains_code(&self, code: &CanonicalCode) -> bool {
        self.members.contains_key(code)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Graph> {
        self.members.values()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&CanonicalCode, &Graph)> {
        self.members.iter()
    }

    pub fn codes(&self) -> BTreeSet<CanonicalCode> {
        self.members.keys().cloned().collect()
    }

    pub fn is_subset(&self, other: &GraphFamily) -> bool {
        self.members.keys().all(|c| other.members.contains_key(c))
    }

    /// Members satisfying `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&Graph) -> bool) -> GraphFamily {
        GraphFamily {
            members: self
                .members
                .iter()
                .filter(|(_, g)| keep(g))
                .map(|(c, g)| (c.clone(), g.clone()))
                .collect(),
        }
    }
}

impl FromIterator<Graph> for GraphFamily {
    fn from_iter<I: IntoIterator<Item = Graph>>(iter: I) -> Self {
        let mut fam = GraphFamily::new();
        for g in iter {
            fam.insert(g);
        }
        fam
    }
}

impl Extend<Graph> for GraphFamily {
    fn extend<I: IntoIterator<Item = Graph>>(&mut self, iter: I) {
        for g in iter {
            self.insert(g);
        }
    }
}
