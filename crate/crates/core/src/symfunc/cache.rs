//! Persistent store for Littlewood–Richardson coefficients.
//!
//! The file is plain text, one record per line after a header:
//!
//! ```text
//! # mackey lr-cache v1
//! lr  [2,1]  [1]  [1]  1  3f5c0e1a9b2d4c67
//! ```
//!
//! Fields are tab separated: tag, `lam`, `mu`, `nu`, the coefficient, and the
//! first 16 hex digits of the SHA-256 of the preceding fields joined by tabs.
//! Records are only ever appended. If any record fails to parse or its
//! checksum does not match, the file is rewritten from the records that did
//! validate.

use std::fs::{self, File, OpenOptions};
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::sync::{Mutex, OnceLock};

use sha2::{Digest, Sha256};

use crate::diagrams::Partition;
use crate::error::{Error, Result};

use super::lr;

pub const HEADER: &str = "# mackey lr-cache v1";

struct Store {
    path: PathBuf,
    writer: BufWriter<File>,
}

fn store() -> &'static Mutex<Option<Store>> {
    static STORE: OnceLock<Mutex<Option<Store>>> = OnceLock::new();
    STORE.get_or_init(|| Mutex::new(None))
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LoadReport {
    pub loaded: usize,
    pub discarded: usize,
    pub rebuilt: bool,
}

fn checksum(body: &str) -> String {
    let digest = Sha256::digest(body.as_bytes());
    digest[..8].iter().map(|b| format!("{b:02x}")).collect()
}

/// Renders one record line (without newline).
pub fn encode_record(lam: &Partition, mu: &Partition, nu: &Partition, c: u64) -> String {
    let body = format!("lr\t{lam}\t{mu}\t{nu}\t{c}");
    let sum = checksum(&body);
    format!("{body}\t{sum}")
}

/// Parses and verifies one record line.
pub fn decode_record(line: &str) -> Option<(Partition, Partition, Partition, u64)> {
    let (body, sum) = line.rsplit_once('\t')?;
    if checksum(body) != sum {
        return None;
    }
    let fields: Vec<&str> = body.split('\t').collect();
    if fields.len() != 5 || fields[0] != "lr" {
        return None;
    }
    let lam: Partition = fields[1].parse().ok()?;
    let mu: Partition = fields[2].parse().ok()?;
    let nu: Partition = fields[3].parse().ok()?;
    let c: u64 = fields[4].parse().ok()?;
    Some((lam, mu, nu, c))
}

/// Loads the cache file at `path` into the in-memory memo and keeps it open
/// for appending newly computed coefficients. A missing file is created.
pub fn attach(path: &Path) -> Result<LoadReport> {
    let mut report = LoadReport::default();
    let mut good = Vec::new();
    if path.exists() {
        let reader = BufReader::new(File::open(path)?);
        for (i, line) in reader.lines().enumerate() {
            let line = line?;
            if i == 0 {
                if line != HEADER {
                    report.discarded += 1;
                }
                continue;
            }
            if line.is_empty() {
                continue;
            }
            match decode_record(&line) {
                Some(rec) => good.push(rec),
                None => report.discarded += 1,
            }
        }
    }
    report.loaded = good.len();
    report.rebuilt = report.discarded > 0 || !path.exists();
    for (lam, mu, nu, c) in &good {
        lr::memo_insert((lam.clone(), mu.clone(), nu.clone()), *c);
    }
    if report.rebuilt {
        if let Some(dir) = path.parent() {
            fs::create_dir_all(dir)?;
        }
        let tmp = path.with_extension("tmp");
        {
            let mut w = BufWriter::new(File::create(&tmp)?);
            writeln!(w, "{HEADER}")?;
            for (lam, mu, nu, c) in &good {
                writeln!(w, "{}", encode_record(lam, mu, nu, *c))?;
            }
            w.flush()?;
        }
        fs::rename(&tmp, path)?;
    }
    let file = OpenOptions::new().append(true).open(path)?;
    let mut guard = store().lock().map_err(|_| Error::Cache("store poisoned".into()))?;
    *guard = Some(Store { path: path.to_path_buf(), writer: BufWriter::new(file) });
    Ok(report)
}

/// Flushes and closes the attached cache file, if any.
pub fn detach() -> Result<()> {
    let mut guard = store().lock().map_err(|_| Error::Cache("store poisoned".into()))?;
    if let Some(mut s) = guard.take() {
        s.writer.flush()?;
    }
    Ok(())
}

pub fn flush() -> Result<()> {
    let mut guard = store().lock().map_err(|_| Error::Cache("store poisoned".into()))?;
    if let Some(s) = guard.as_mut() {
        s.writer.flush()?;
    }
    Ok(())
}

/// Path of the attached cache file.
pub fn attached_path() -> Option<PathBuf> {
    store().lock().ok()?.as_ref().map(|s| s.path.clone())
}

pub(crate) fn record(key: &(Partition, Partition, Partition), c: u64) {
    if let Ok(mut guard) = store().lock() {
        if let Some(s) = guard.as_mut() {
            // a failed append only loses a cache entry; the value is still returned
            let _ = writeln!(s.writer, "{}", encode_record(&key.0, &key.1, &key.2, c));
        }
    }
}

/// Writes every coefficient currently in memory to a fresh file at `path`.
pub fn export(path: &Path) -> Result<usize> {
    let entries = lr::memo_entries();
    let mut w = BufWriter::new(File::create(path)?);
    writeln!(w, "{HEADER}")?;
    for ((lam, mu, nu), c) in &entries {
        writeln!(w, "{}", encode_record(lam, mu, nu, *c))?;
    }
    w.flush()?;
    Ok(entries.len())
}
