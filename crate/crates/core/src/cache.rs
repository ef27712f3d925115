//! On-disk cache of universal polynomials.
//!
//! One file, `universal.cache`, holding records
//!
//! ```text
//! MZETA-CACHE v1
//! P 2
//! -2*s2*t2 + s1^2*t2 + s2*t1^2
//!
//! Q 4 2
//! ...
//! ```
//!
//! A record is accepted only if its polynomial parses over the key's table,
//! satisfies the key's grading and re-renders to exactly the stored text.
//! Writes go to a temporary file that is then renamed over the old one.

use std::fs;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::poly::MultiPoly;
use crate::universal::{store, UniversalKey};

pub const CACHE_ENV: &str = "MZETA_CACHE_DIR";
pub const CACHE_FILE: &str = "universal.cache";
const MAGIC: &str = "MZETA-CACHE v1";

#[derive(Debug, Clone)]
pub struct DiskCache {
    dir: PathBuf,
}

impl DiskCache {
    /// The directory from the flag, else from the environment.
    pub fn locate(flag: Option<&Path>) -> Option<PathBuf> {
        flag.map(Path::to_path_buf)
            .or_else(|| std::env::var_os(CACHE_ENV).filter(|v| !v.is_empty()).map(PathBuf::from))
    }

    pub fn open(dir: impl Into<PathBuf>) -> Result<DiskCache> {
        let dir = dir.into();
        fs::create_dir_all(&dir)
            .map_err(|e| Error::Io(format!("cannot create cache directory {}: {e}", dir.display())))?;
        Ok(DiskCache { dir })
    }

    pub fn path(&self) -> PathBuf {
        self.dir.join(CACHE_FILE)
    }

    pub fn load(&self) -> Result<Vec<(UniversalKey, MultiPoly)>> {
        let path = self.path();
        if !path.exists() {
            return Ok(Vec::new());
        }
        parse_records(&fs::read_to_string(&path)?)
    }

    /// Loads every record into the process store; returns how many.
    pub fn load_into_store(&self) -> Result<usize> {
        let records = self.load()?;
        let n = records.len();
        for (k, v) in records {
            store().insert(k, v);
        }
        Ok(n)
    }

    /// Merges the process store into the file; returns the record count.
    pub fn save_store(&self) -> Result<usize> {
        let mut records = self.load()?;
        for (k, v) in store().snapshot() {
            if !records.iter().any(|(r, _)| *r == k) {
                records.push((k, v));
            }
        }
        records.sort_by_key(|(k, _)| *k);
        let text = render_records(&records);
        let tmp = self.dir.join(format!("{CACHE_FILE}.tmp{}", std::process::id()));
        fs::write(&tmp, text).map_err(|e| Error::Io(format!("cannot write {}: {e}", tmp.display())))?;
        fs::rename(&tmp, self.path())?;
        Ok(records.len())
    }

    pub fn clear(&self) -> Result<()> {
        match fs::remove_file(self.path()) {
            Err(e) if e.kind() != std::io::ErrorKind::NotFound => Err(e.into()),
            _ => Ok(()),
        }
    }
}

pub fn render_records(records: &[(UniversalKey, MultiPoly)]) -> String {
    let mut out = format!("{MAGIC}\n");
    for (k, v) in records {
        out.push_str(&format!("{}\n{}\n\n", k.header(), v));
    }
    out
}

pub fn parse_records(text: &str) -> Result<Vec<(UniversalKey, MultiPoly)>> {
    let mut lines = text.lines();
    if lines.next() != Some(MAGIC) {
        return Err(Error::parse("cache file lacks the `MZETA-CACHE v1` header"));
    }
    let mut out = Vec::new();
    let lines: Vec<&str> = lines.collect();
    for chunk in lines.split(|l| l.is_empty()) {
        match chunk {
            [] => continue,
            [header, body] => {
                let key = UniversalKey::parse_header(header)?;
                let value = MultiPoly::parse(&key.vars(), body)?;
                if value.to_string() != *body {
                    return Err(Error::parse(format!("record `{header}` is not in canonical form")));
                }
                if !key.grading_holds(&value) {
                    return Err(Error::parse(format!("record `{header}` has the wrong grading")));
                }
                out.push((key, value));
            }
            _ => return Err(Error::parse(format!("malformed cache record near `{}`", chunk[0]))),
        }
    }
    Ok(out)
}
