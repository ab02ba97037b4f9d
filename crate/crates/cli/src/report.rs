//! Run reports: a deterministic payload followed by a `--` line and a timing
//! trailer. Golden comparisons use everything before the `--`.

use std::fmt::Display;
use std::path::Path;
use std::time::Instant;

use sha2::{Digest, Sha256};

use crate::Failure;

pub struct Report {
    lines: Vec<String>,
    started: Instant,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

impl Report {
    pub fn new(argv: &[String]) -> Self {
        let mut echo = vec!["hatcraft".to_string()];
        echo.extend(argv.iter().skip(1).cloned());
        Self {
            lines: vec![format!("command {}", echo.join(" "))],
            started: Instant::now(),
        }
    }

    pub fn line(&mut self, line: impl Into<String>) {
        self.lines.push(line.into());
    }

    pub fn field(&mut self, key: &str, value: impl Display) {
        self.lines.push(format!("{key} {value}"));
    }

    /// Appends a multi-line block as-is.
    pub fn block(&mut self, text: &str) {
        self.lines.extend(text.lines().map(str::to_string));
    }

    /// Reads an input file and records its hash.
    pub fn input(&mut self, role: &str, path: &Path) -> Result<String, Failure> {
        let bytes = std::fs::read(path).map_err(|e| Failure::input(path, e))?;
        self.lines
            .push(format!("input {role} {} sha256 {}", path.display(), sha256_hex(&bytes)));
        String::from_utf8(bytes).map_err(|_| Failure::data(format!("{}: not UTF-8", path.display())))
    }

    /// Writes an output file and records its hash.
    pub fn output(&mut self, role: &str, path: &Path, text: &str) -> Result<(), Failure> {
        std::fs::write(path, text).map_err(|e| Failure::output(path, e))?;
        self.lines.push(format!(
            "output {role} {} sha256 {}",
            path.display(),
            sha256_hex(text.as_bytes())
        ));
        Ok(())
    }

    pub fn render(&self) -> String {
        let mut out = self.lines.join("\n");
        out.push_str("\n--\n");
        out.push_str(&format!(
            "elapsed-ms {:.3}\n",
            self.started.elapsed().as_secs_f64() * 1e3
        ));
        out
    }
}
