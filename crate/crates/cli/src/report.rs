use std::io::Write;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::Failure;

/// Buffered command output in one of the two formats. Text lines and the
/// JSON value are both produced by every command; only one is printed.
pub struct Out {
    json: bool,
    text: String,
    value: Option<Value>,
}

impl Out {
    pub fn new(json: bool) -> Out {
        Out {
            json,
            text: String::new(),
            value: None,
        }
    }

    pub fn text(&mut self, line: impl AsRef<str>) {
        self.text.push_str(line.as_ref());
        self.text.push('\n');
    }

    /// Text output that already ends in a newline.
    pub fn raw(&mut self, s: String) {
        self.text.push_str(&s);
    }

    pub fn json(&mut self, v: Value) {
        self.value = Some(v);
    }

    pub fn flush(self) {
        let mut stdout = std::io::stdout().lock();
        if self.json {
            let v = self.value.unwrap_or(Value::Null);
            let _ = writeln!(
                stdout,
                "{}",
                serde_json::to_string_pretty(&v).expect("serializable")
            );
        } else {
            let _ = stdout.write_all(self.text.as_bytes());
        }
    }
}

pub fn emit_error(json: bool, kind: &str, message: &str, code: u8) {
    if json {
        eprintln!(
            "{}",
            json!({ "error": { "kind": kind, "code": code, "message": message } })
        );
    } else {
        eprintln!("olie: {kind} error: {message}");
    }
}

/// `f` on seeds `seed..seed+count`, in seed order whatever the worker count.
pub fn run_seeds<T, F>(workers: usize, seed: u64, count: u64, f: F) -> Result<Vec<T>, Failure>
where
    T: Send,
    F: Fn(u64) -> T + Sync + Send,
{
    let end = seed
        .checked_add(count)
        .ok_or_else(|| Failure::Usage("seed range overflows".into()))?;
    if workers <= 1 {
        return Ok((seed..end).map(f).collect());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Failure::Usage(format!("cannot start workers: {e}")))?;
    Ok(pool.install(|| (seed..end).into_par_iter().map(f).collect()))
}
