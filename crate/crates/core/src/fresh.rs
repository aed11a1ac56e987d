//! Deterministic fresh labels of the form `base#n`.

use std::collections::BTreeSet;

#[derive(Clone, Debug, Default)]
pub struct FreshLabels {
    used: BTreeSet<String>,
    counter: usize,
}

impl FreshLabels {
    pub fn new<I: IntoIterator<Item = String>>(used: I) -> FreshLabels {
        FreshLabels {
            used: used.into_iter().collect(),
            counter: 0,
        }
    }

    pub fn reserve(&mut self, label: &str) {
        self.used.insert(label.to_owned());
    }

    pub fn fresh(&mut self, base: &str) -> String {
        loop {
            self.counter += 1;
            let l = format!("{base}#{}", self.counter);
            if self.used.insert(l.clone()) {
                return l;
            }
        }
    }
}
