//! Content-addressed polynomial cache.
//!
//! One file per key at `<dir>/<sha256(key)>.poly`:
//!
//! ```text
//! vars: a1 a2 a3
//! -64 0 0 1
//! 1728 3 0 1
//! checksum: <sha256 of key and the lines above>
//! ```
//!
//! Only coefficient variables are stored, so cached polynomials must be free
//! of `x`. Anything that fails to parse or verify is treated as a miss and
//! overwritten by the next write.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::sync::Arc;

use redisc_core::{BigInt, Polynomial, VarTable};
use sha2::{Digest, Sha256};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Lookup {
    Hit(Polynomial),
    Miss,
    Corrupt(String),
}

#[derive(Clone, Debug, Default)]
pub struct Cache {
    dir: Option<PathBuf>,
}

impl Cache {
    pub fn new(dir: Option<PathBuf>) -> Self {
        Cache { dir }
    }

    pub fn disabled() -> Self {
        Cache { dir: None }
    }

    pub fn is_enabled(&self) -> bool {
        self.dir.is_some()
    }

    pub fn path_for(&self, key: &str) -> Option<PathBuf> {
        let dir = self.dir.as_ref()?;
        Some(dir.join(format!("{}.poly", hex::encode(Sha256::digest(key.as_bytes())))))
    }

    pub fn get(&self, key: &str, table: &Arc<VarTable>) -> Lookup {
        let Some(path) = self.path_for(key) else {
            return Lookup::Miss;
        };
        match fs::read_to_string(&path) {
            Ok(text) => match decode(key, &text, table) {
                Ok(p) => Lookup::Hit(p),
                Err(why) => Lookup::Corrupt(why),
            },
            Err(e) if e.kind() == io::ErrorKind::NotFound => Lookup::Miss,
            Err(e) => Lookup::Corrupt(e.to_string()),
        }
    }

    pub fn put(&self, key: &str, poly: &Polynomial) -> io::Result<()> {
        let (Some(dir), Some(path)) = (self.dir.as_ref(), self.path_for(key)) else {
            return Ok(());
        };
        let text = encode(key, poly).map_err(|e| io::Error::new(io::ErrorKind::InvalidInput, e))?;
        fs::create_dir_all(dir)?;
        write_atomic(dir, &path, text.as_bytes())
    }

    /// Returns the cached value or computes and stores it. Cache trouble is
    /// reported on stderr and never fails the computation.
    pub fn get_or_compute<E>(
        &self,
        key: &str,
        table: &Arc<VarTable>,
        compute: impl FnOnce() -> Result<Polynomial, E>,
    ) -> Result<Polynomial, E> {
        match self.get(key, table) {
            Lookup::Hit(p) => return Ok(p),
            Lookup::Miss => {}
            Lookup::Corrupt(why) => eprintln!("redisc: discarding cache entry for `{key}`: {why}"),
        }
        let p = compute()?;
        if let Err(e) = self.put(key, &p) {
            eprintln!("redisc: could not cache `{key}`: {e}");
        }
        Ok(p)
    }
}

fn write_atomic(dir: &Path, path: &Path, bytes: &[u8]) -> io::Result<()> {
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(bytes)?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

fn checksum(key: &str, body: &str) -> String {
    let mut h = Sha256::new();
    h.update(key.as_bytes());
    h.update(b"\n");
    h.update(body.as_bytes());
    hex::encode(h.finalize())
}

pub fn encode(key: &str, poly: &Polynomial) -> Result<String, String> {
    let table = poly.table();
    let width = table.len();
    let mut body = String::from("vars:");
    for name in &table.names()[1..] {
        body.push(' ');
        body.push_str(name);
    }
    body.push('\n');
    for (m, c) in poly.terms() {
        if m.exponent(0) != 0 {
            return Err(format!("term depends on {}", table.name(0)));
        }
        body.push_str(&c.to_string());
        for e in &m.exponents()[1..width] {
            body.push(' ');
            body.push_str(&e.to_string());
        }
        body.push('\n');
    }
    let sum = checksum(key, &body);
    Ok(format!("{body}checksum: {sum}\n"))
}

pub fn decode(key: &str, text: &str, table: &Arc<VarTable>) -> Result<Polynomial, String> {
    let body_end = text.rfind("checksum: ").ok_or("missing checksum line")?;
    let (body, trailer) = text.split_at(body_end);
    let stated = trailer.trim_end_matches('\n').trim_start_matches("checksum: ");
    if stated != checksum(key, body) {
        return Err("checksum mismatch".into());
    }
    let mut lines = body.lines();
    let header = lines.next().ok_or("empty file")?;
    let vars: Vec<&str> = header.strip_prefix("vars:").ok_or("missing vars header")?.split_whitespace().collect();
    if vars.iter().copied().ne(table.names()[1..].iter().map(String::as_str)) {
        return Err(format!("variables {vars:?} do not match the requested table"));
    }
    let mut terms = Vec::new();
    for (i, line) in lines.enumerate() {
        let mut fields = line.split(' ');
        let coeff: BigInt = fields
            .next()
            .and_then(|c| c.parse().ok())
            .ok_or_else(|| format!("line {}: bad coefficient", i + 2))?;
        let mut exps = vec![0u16];
        for f in fields {
            exps.push(f.parse().map_err(|_| format!("line {}: bad exponent `{f}`", i + 2))?);
        }
        if exps.len() != table.len() {
            return Err(format!("line {}: expected {} exponents", i + 2, table.len() - 1));
        }
        terms.push((exps, coeff));
    }
    let count = terms.len();
    let poly = Polynomial::from_terms(table, terms);
    if poly.num_terms() != count {
        return Err("duplicate or zero terms".into());
    }
    Ok(poly)
}
