//! Key-value reports with a fixed key order.

use std::fmt::Write;

#[derive(Default)]
pub struct Report {
    lines: Vec<(String, String)>,
    failures: usize,
}

impl Report {
    pub fn new(command: &str) -> Report {
        let mut r = Report::default();
        r.put("command", command);
        r
    }

    pub fn put(&mut self, key: impl Into<String>, value: impl ToString) {
        self.lines.push((key.into(), value.to_string()));
    }

    /// Record a certificate outcome; any `false` makes the report fail.
    pub fn check(&mut self, key: impl Into<String>, ok: bool) {
        if !ok {
            self.failures += 1;
        }
        self.put(key, ok);
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        for (k, v) in &self.lines {
            let _ = writeln!(s, "{k}: {v}");
        }
        let _ = writeln!(s, "status: {}", if self.passed() { "pass" } else { "fail" });
        s
    }
}
