//! The JSON report emitted by checking commands.

use serde::Serialize;

#[derive(Serialize)]
pub struct Report {
    pub command: String,
    pub ok: bool,
    pub checks: Vec<CheckJson>,
    pub timing_ms: u128,
}

#[derive(Serialize)]
pub struct CheckJson {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Report {
    pub fn new(command: impl Into<String>, started: std::time::Instant) -> Report {
        Report {
            command: command.into(),
            ok: true,
            checks: Vec::new(),
            timing_ms: started.elapsed().as_millis(),
        }
    }

    pub fn push(&mut self, name: impl Into<String>, pass: bool, witness: Option<String>) {
        self.ok &= pass;
        self.checks.push(CheckJson {
            name: name.into(),
            pass,
            witness,
        });
    }

    pub fn finish(mut self, started: std::time::Instant) -> Report {
        self.timing_ms = started.elapsed().as_millis();
        self
    }
}
