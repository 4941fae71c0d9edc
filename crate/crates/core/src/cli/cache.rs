//! Content-addressed on-disk cache of rendered tables.
//!
//! An entry lives at `<dir>/<sha256 of the key>.tbl` and starts with the
//! header line `paramodular-cache <version> <sha256 of the body>`. Writers
//! go through a temporary file in the same directory followed by a rename,
//! so readers see either a complete old entry or a complete new one.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use super::job::JobSpec;
use super::table::Format;

/// Bump to invalidate every existing entry.
pub const FORMAT_VERSION: u32 = 1;

const MAGIC: &str = "paramodular-cache";
const EXTENSION: &str = "tbl";
const PARTIAL_PREFIX: &str = ".partial-";

/// Everything that determines the bytes of a rendered table.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CacheKey {
    pub form: String,
    pub route: String,
    pub tq: i64,
    pub ts: i64,
    pub format: Format,
    pub version: u32,
}

impl CacheKey {
    pub fn for_job(job: &JobSpec, format: Format) -> Self {
        let t = job.truncation();
        Self {
            form: job.object.as_str().to_owned(),
            route: job.route.as_str().to_owned(),
            tq: t.tq,
            ts: t.ts,
            format,
            version: FORMAT_VERSION,
        }
    }

    pub fn digest(&self) -> String {
        let canonical = format!(
            "form={}\nroute={}\ntq={}\nts={}\nformat={}\nversion={}\n",
            self.form,
            self.route,
            self.tq,
            self.ts,
            self.format.as_str(),
            self.version
        );
        hex::encode(Sha256::digest(canonical.as_bytes()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Lookup {
    Hit(String),
    Miss,
    /// The file exists but its header or checksum is wrong.
    Corrupt(String),
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CacheStats {
    pub entries: usize,
    pub bytes: u64,
    pub corrupt: usize,
    pub stale: usize,
    pub partial: usize,
}

pub struct Cache {
    dir: PathBuf,
}

enum EntryState {
    Valid(String),
    Stale,
    Corrupt(String),
}

fn checksum(body: &str) -> String {
    hex::encode(Sha256::digest(body.as_bytes()))
}

fn inspect(raw: &[u8]) -> EntryState {
    let Ok(text) = std::str::from_utf8(raw) else {
        return EntryState::Corrupt("not UTF-8".into());
    };
    let Some((header, body)) = text.split_once('\n') else {
        return EntryState::Corrupt("missing header".into());
    };
    let fields: Vec<&str> = header.split(' ').collect();
    let [magic, version, sum] = fields[..] else {
        return EntryState::Corrupt("malformed header".into());
    };
    if magic != MAGIC {
        return EntryState::Corrupt("bad magic".into());
    }
    if version != FORMAT_VERSION.to_string() {
        return EntryState::Stale;
    }
    if sum != checksum(body) {
        return EntryState::Corrupt("checksum mismatch".into());
    }
    EntryState::Valid(body.to_owned())
}

impl Cache {
    pub fn open(dir: impl Into<PathBuf>) -> io::Result<Self> {
        let dir = dir.into();
        fs::create_dir_all(&dir)?;
        Ok(Self { dir })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path(&self, key: &CacheKey) -> PathBuf {
        self.dir.join(format!("{}.{EXTENSION}", key.digest()))
    }

    pub fn lookup(&self, key: &CacheKey) -> io::Result<Lookup> {
        let raw = match fs::read(self.path(key)) {
            Ok(raw) => raw,
            Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(Lookup::Miss),
            Err(e) => return Err(e),
        };
        Ok(match inspect(&raw) {
            EntryState::Valid(body) => Lookup::Hit(body),
            EntryState::Stale => Lookup::Miss,
            EntryState::Corrupt(why) => Lookup::Corrupt(why),
        })
    }

    pub fn store(&self, key: &CacheKey, body: &str) -> io::Result<()> {
        let mut tmp = tempfile::Builder::new()
            .prefix(PARTIAL_PREFIX)
            .tempfile_in(&self.dir)?;
        write!(tmp, "{MAGIC} {FORMAT_VERSION} {}\n{body}", checksum(body))?;
        tmp.as_file().sync_all()?;
        tmp.persist(self.path(key)).map_err(|e| e.error)?;
        Ok(())
    }

    fn scan(
        &self,
        mut visit: impl FnMut(&Path, Option<EntryState>) -> io::Result<()>,
    ) -> io::Result<()> {
        for entry in fs::read_dir(&self.dir)? {
            let path = entry?.path();
            let name = path
                .file_name()
                .and_then(|n| n.to_str())
                .unwrap_or_default();
            if name.starts_with(PARTIAL_PREFIX) {
                visit(&path, None)?;
            } else if path.extension().is_some_and(|e| e == EXTENSION) {
                let state = inspect(&fs::read(&path)?);
                visit(&path, Some(state))?;
            }
        }
        Ok(())
    }

    pub fn stats(&self) -> io::Result<CacheStats> {
        let mut s = CacheStats::default();
        self.scan(|path, state| {
            match state {
                None => s.partial += 1,
                Some(EntryState::Valid(_)) => {
                    s.entries += 1;
                    s.bytes += fs::metadata(path)?.len();
                }
                Some(EntryState::Stale) => s.stale += 1,
                Some(EntryState::Corrupt(_)) => s.corrupt += 1,
            }
            Ok(())
        })?;
        Ok(s)
    }

    /// Deletes stale, corrupt and leftover partial files. Returns how many
    /// files were removed.
    pub fn gc(&self) -> io::Result<usize> {
        let mut removed = 0;
        self.scan(|path, state| {
            if !matches!(state, Some(EntryState::Valid(_))) {
                match fs::remove_file(path) {
                    Ok(()) => removed += 1,
                    Err(e) if e.kind() == io::ErrorKind::NotFound => {}
                    Err(e) => return Err(e),
                }
            }
            Ok(())
        })?;
        Ok(removed)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn key(version: u32) -> CacheKey {
        CacheKey {
            form: "delta1".into(),
            route: "lift".into(),
            tq: 48,
            ts: 48,
            format: Format::Json,
            version,
        }
    }

    #[test]
    fn store_then_lookup() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::open(dir.path()).unwrap();
        assert_eq!(cache.lookup(&key(1)).unwrap(), Lookup::Miss);
        cache.store(&key(1), "payload\nline 2\n").unwrap();
        assert_eq!(
            cache.lookup(&key(1)).unwrap(),
            Lookup::Hit("payload\nline 2\n".into())
        );
        assert_eq!(cache.stats().unwrap().entries, 1);
    }

    #[test]
    fn version_is_part_of_the_key() {
        assert_ne!(key(1).digest(), key(2).digest());
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::open(dir.path()).unwrap();
        cache.store(&key(1), "x").unwrap();
        assert_eq!(cache.lookup(&key(2)).unwrap(), Lookup::Miss);
    }

    #[test]
    fn stale_header_is_a_miss_and_collected() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::open(dir.path()).unwrap();
        let path = cache.path(&key(1));
        fs::write(&path, format!("{MAGIC} 0 {}\nold", checksum("old"))).unwrap();
        assert_eq!(cache.lookup(&key(1)).unwrap(), Lookup::Miss);
        assert_eq!(cache.stats().unwrap().stale, 1);
        assert_eq!(cache.gc().unwrap(), 1);
        assert!(!path.exists());
    }

    #[test]
    fn tampered_body_is_corrupt() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::open(dir.path()).unwrap();
        cache.store(&key(1), "12345").unwrap();
        let path = cache.path(&key(1));
        let mut raw = fs::read_to_string(&path).unwrap();
        raw.push('6');
        fs::write(&path, raw).unwrap();
        assert!(matches!(cache.lookup(&key(1)).unwrap(), Lookup::Corrupt(_)));
        fs::write(&path, "garbage").unwrap();
        assert!(matches!(cache.lookup(&key(1)).unwrap(), Lookup::Corrupt(_)));
    }

    #[test]
    fn gc_removes_partials_and_keeps_valid() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::open(dir.path()).unwrap();
        cache.store(&key(1), "keep").unwrap();
        fs::write(dir.path().join(format!("{PARTIAL_PREFIX}abc")), "half").unwrap();
        fs::write(dir.path().join("notes.txt"), "unrelated").unwrap();
        let before = cache.stats().unwrap();
        assert_eq!((before.entries, before.partial), (1, 1));
        assert_eq!(cache.gc().unwrap(), 1);
        assert_eq!(cache.lookup(&key(1)).unwrap(), Lookup::Hit("keep".into()));
        assert!(dir.path().join("notes.txt").exists());
    }
}
