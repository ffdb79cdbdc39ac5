//! Renders transfer kernels in the ideal-class vocabulary: the classes `a`, `b`, `c`
//! correspond to `sG'`, `tG'`, `rG'`.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::kernel::{AbelianizationCoord, KernelSubspace};

/// A formal product of `a`, `b`, `c` naming one class of `G/G'`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CapitulationLabel(pub AbelianizationCoord);

impl CapitulationLabel {
    /// ASCII form such as `ab`; the zero class is `1`.
    pub fn ascii(self) -> String {
        self.render(['a', 'b', 'c'])
    }

    /// Fraktur form such as `𝔞𝔟`.
    pub fn fraktur(self) -> String {
        self.render(['𝔞', '𝔟', '𝔠'])
    }

    fn render(self, letters: [char; 3]) -> String {
        let s: String = self
            .0
            .components()
            .iter()
            .zip(letters)
            .filter(|(&bit, _)| bit == 1)
            .map(|(_, ch)| ch)
            .collect();
        if s.is_empty() {
            "1".into()
        } else {
            s
        }
    }
}

impl fmt::Display for CapitulationLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.ascii())
    }
}

impl Serialize for CapitulationLabel {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.ascii())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CapitulationView {
    pub labels: Vec<CapitulationLabel>,
    pub capitulating_classes: usize,
    pub summary: &'static str,
}

impl CapitulationView {
    /// `⟨b⟩`, `⟨ab, c⟩`, or `C_k,2` for the whole group.
    pub fn render(&self) -> String {
        if self.capitulating_classes == 8 {
            return "C_k,2".into();
        }
        let inner: Vec<String> = self.labels.iter().map(|l| l.ascii()).collect();
        format!("⟨{}⟩", inner.join(", "))
    }
}

pub fn capitulation_view(kernel: &KernelSubspace) -> CapitulationView {
    let summary = match kernel.len() {
        8 => "all classes capitulate",
        4 => "four classes capitulate",
        2 => "two classes capitulate",
        _ => "only the trivial class capitulates",
    };
    CapitulationView {
        labels: kernel
            .basis()
            .iter()
            .map(|&v| CapitulationLabel(v))
            .collect(),
        capitulating_classes: kernel.len(),
        summary,
    }
}
