use std::fmt::Write as _;

use serde_json::{json, Map, Value};

/// An error that ends a command early.
#[derive(Debug)]
pub struct Fatal {
    pub code: u8,
    pub message: String,
}

impl Fatal {
    /// Unreadable input, bad flags or syntax errors: exit code 2.
    pub fn usage(message: impl Into<String>) -> Self {
        Fatal {
            code: 2,
            message: message.into(),
        }
    }

    /// Input that parses but is not a valid object: exit code 1.
    pub fn semantic(message: impl Into<String>) -> Self {
        Fatal {
            code: 1,
            message: message.into(),
        }
    }
}

/// The outcome of a command: a verdict, a structured result and the lines
/// shown in text mode.
#[derive(Debug)]
pub struct Report {
    pub command: &'static str,
    pub config: Map<String, Value>,
    pub ok: bool,
    pub result: Map<String, Value>,
    pub lines: Vec<String>,
    /// Replaces the text rendering, for commands that emit a file format.
    pub raw: Option<String>,
}

impl Report {
    pub fn new(command: &'static str) -> Self {
        Report {
            command,
            config: Map::new(),
            ok: true,
            result: Map::new(),
            lines: Vec::new(),
            raw: None,
        }
    }

    pub fn config(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.config.insert(key.to_string(), value.into());
        self
    }

    pub fn set(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.result.insert(key.to_string(), value.into());
        self
    }

    pub fn line(&mut self, s: impl Into<String>) -> &mut Self {
        self.lines.push(s.into());
        self
    }

    pub fn fail(&mut self) -> &mut Self {
        self.ok = false;
        self
    }

    /// Keys are emitted in sorted order and timings are left out, so equal
    /// inputs give byte-identical documents.
    pub fn structured(&self) -> String {
        let doc = json!({
            "tool": "dblfolds",
            "version": env!("CARGO_PKG_VERSION"),
            "command": self.command,
            "config": self.config,
            "status": if self.ok { "ok" } else { "fail" },
            "result": self.result,
        });
        let mut s = serde_json::to_string_pretty(&doc).expect("json values serialize");
        s.push('\n');
        s
    }

    pub fn text(&self, elapsed: Option<std::time::Duration>) -> String {
        if let Some(raw) = &self.raw {
            return raw.clone();
        }
        let mut s = String::new();
        for l in &self.lines {
            let _ = writeln!(s, "{l}");
        }
        let _ = write!(s, "{}: {}", self.command, if self.ok { "ok" } else { "FAIL" });
        if let Some(d) = elapsed {
            let _ = write!(s, " ({:.2}s)", d.as_secs_f64());
        }
        s.push('\n');
        s
    }
}
