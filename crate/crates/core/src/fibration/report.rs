use serde::Serialize;

/// One named check with its outcome and a witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Item {
    pub name: String,
    pub holds: bool,
    pub witness: String,
}

impl Item {
    pub fn new(name: impl Into<String>, holds: bool, witness: impl Into<String>) -> Item {
        Item { name: name.into(), holds, witness: witness.into() }
    }
}

/// A list of checks plus informational notes that never fail.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub items: Vec<Item>,
    pub notes: Vec<String>,
}

impl Report {
    pub fn push(&mut self, name: impl Into<String>, holds: bool, witness: impl Into<String>) {
        self.items.push(Item::new(name, holds, witness));
    }

    pub fn extend(&mut self, items: Vec<Item>) {
        self.items.extend(items);
    }

    pub fn note(&mut self, n: impl Into<String>) {
        self.notes.push(n.into());
    }

    pub fn passes(&self) -> bool {
        self.items.iter().all(|i| i.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Item> {
        self.items.iter().filter(|i| !i.holds)
    }
}
