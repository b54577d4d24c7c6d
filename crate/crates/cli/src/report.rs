use std::path::Path;
use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

pub const SCHEMA: u32 = 1;

/// Wall-clock seconds per phase.
#[derive(Debug, Default, Serialize)]
pub struct Phases {
    pub load: f64,
    pub orient: f64,
    pub compute: f64,
}

#[derive(Debug, Serialize)]
pub struct RunReport {
    pub schema: u32,
    pub command: &'static str,
    pub input: String,
    pub n: usize,
    pub m: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    pub strategy: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub parallelism: Option<String>,
    pub threads: usize,
    pub seconds: Phases,
    pub result: Value,
}

impl RunReport {
    pub fn new(command: &'static str, input: &Path) -> Self {
        RunReport {
            schema: SCHEMA,
            command,
            input: input.display().to_string(),
            n: 0,
            m: 0,
            k: None,
            strategy: String::new(),
            parallelism: None,
            threads: kclique::par::current_threads(),
            seconds: Phases::default(),
            result: Value::Null,
        }
    }

    pub fn write(&self, path: &Path) -> anyhow::Result<()> {
        let mut text = serde_json::to_string_pretty(self)?;
        text.push('\n');
        std::fs::write(path, text)?;
        Ok(())
    }
}

/// Runs `f` and returns its value with the elapsed seconds.
pub fn timed<T>(f: impl FnOnce() -> T) -> (T, f64) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed().as_secs_f64())
}
