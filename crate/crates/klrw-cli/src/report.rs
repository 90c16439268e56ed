use serde_json::Value;

use crate::commands::Format;

/// Outcome of a command: a machine-readable report, its text rendering and
/// whether every requested verification passed.
#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub value: Value,
    pub text: String,
    pub passed: bool,
}

impl Report {
    pub fn new(value: Value, text: String, passed: bool) -> Self {
        Self { value, text, passed }
    }

    /// Keys come out sorted, so identical reports render byte-identically.
    pub fn json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.value).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.json(),
            Format::Text => self.text.clone(),
        }
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed {
            0
        } else {
            1
        }
    }
}
