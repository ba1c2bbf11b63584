//! Command results and their text, JSON and CSV renderings.
//!
//! JSON has the shape `{"command": ..., "params": {...}, "result": {...}}`.
//! Every number is a decimal string so values beyond 64 bits survive intact.

use std::collections::BTreeMap;

use clap::ValueEnum;
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

/// Exit codes shared by every subcommand.
pub mod exit {
    pub const OK: i32 = 0;
    pub const MISMATCH: i32 = 1;
    pub const USAGE: i32 = 2;
}

#[derive(Debug, Clone)]
pub struct CommandResult {
    pub command: &'static str,
    pub params: BTreeMap<String, String>,
    pub payload: Value,
    pub text: String,
    pub csv: String,
    pub exit_code: i32,
}

impl CommandResult {
    pub fn new(command: &'static str) -> Self {
        CommandResult {
            command,
            params: BTreeMap::new(),
            payload: Value::Null,
            text: String::new(),
            csv: String::new(),
            exit_code: exit::OK,
        }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "params": self.params,
            "result": self.payload,
        })
    }

    pub fn render(&self, format: OutputFormat) -> String {
        let mut out = match format {
            OutputFormat::Text => self.text.clone(),
            OutputFormat::Json => serde_json::to_string_pretty(&self.to_json()).expect("serializable"),
            OutputFormat::Csv => self.csv.clone(),
        };
        if !out.ends_with('\n') {
            out.push('\n');
        }
        out
    }
}

/// CSV text from a header and rows; fields are plain tokens, never quoted.
pub fn csv<S: AsRef<str>>(header: &[S], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut out = header.iter().map(AsRef::as_ref).collect::<Vec<_>>().join(",");
    out.push('\n');
    for row in rows {
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

pub fn strings<T: ToString>(items: &[T]) -> Vec<String> {
    items.iter().map(ToString::to_string).collect()
}
