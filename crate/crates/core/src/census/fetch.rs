use crate::error::{Error, Result};
use crate::graph::parse_graph6;
use sha2::{Digest, Sha256};
use std::path::{Path, PathBuf};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum FetchMode {
    /// Use the cache when present, download otherwise.
    #[default]
    Online,
    /// Never touch the network.
    Offline,
    /// Download even when cached.
    Refresh,
}

/// `DEFECT_LAB_CACHE`, else `~/.cache/defect-lab`.
pub fn default_cache_dir() -> PathBuf {
    if let Some(d) = std::env::var_os("DEFECT_LAB_CACHE") {
        return PathBuf::from(d);
    }
    let home = std::env::var_os("HOME").map(PathBuf::from).unwrap_or_else(|| PathBuf::from("."));
    home.join(".cache").join("defect-lab")
}

fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

fn is_url(s: &str) -> bool {
    s.starts_with("http://") || s.starts_with("https://")
}

/// Every non-empty line must be a graph6 string.
fn check_graph6_list(text: &str) -> Result<()> {
    for (i, line) in text.lines().enumerate() {
        let s = line.trim().trim_start_matches(">>graph6<<");
        if !s.is_empty() {
            parse_graph6(s).map_err(|e| Error::Fetch(format!("line {}: {e}", i + 1)))?;
        }
    }
    Ok(())
}

fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    std::fs::write(&tmp, bytes)?;
    std::fs::rename(&tmp, path)?;
    Ok(())
}

/// Local path for a source. Local files are returned as they are; URLs are
/// cached under the digest of the URL with the digest of the content beside.
pub fn fetch_dataset(source: &str, cache_dir: &Path, mode: FetchMode) -> Result<PathBuf> {
    if !is_url(source) {
        let p = PathBuf::from(source);
        if !p.is_file() {
            return Err(Error::Fetch(format!("{source}: no such file")));
        }
        return Ok(p);
    }
    let key = sha256_hex(source.as_bytes());
    let data = cache_dir.join(format!("{key}.g6"));
    let digest = cache_dir.join(format!("{key}.sha256"));
    if mode != FetchMode::Refresh && data.is_file() {
        let bytes = std::fs::read(&data)?;
        let recorded = std::fs::read_to_string(&digest).unwrap_or_default();
        if recorded.trim() != sha256_hex(&bytes) {
            return Err(Error::Integrity(format!(
                "cached copy of {source} at {} does not match its digest; fetch again with refresh",
                data.display()
            )));
        }
        return Ok(data);
    }
    if mode == FetchMode::Offline {
        return Err(Error::Fetch(format!("{source} is not cached and the network is off")));
    }
    let body = ureq::get(source)
        .call()
        .map_err(|e| Error::Fetch(format!("{source}: {e}")))?
        .body_mut()
        .read_to_string()
        .map_err(|e| Error::Fetch(format!("{source}: {e}")))?;
    check_graph6_list(&body)?;
    std::fs::create_dir_all(cache_dir)?;
    write_atomic(&data, body.as_bytes())?;
    write_atomic(&digest, sha256_hex(body.as_bytes()).as_bytes())?;
    Ok(data)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seed(dir: &Path, url: &str, body: &str, digest_of: &str) -> PathBuf {
        let key = sha256_hex(url.as_bytes());
        std::fs::write(dir.join(format!("{key}.g6")), body).unwrap();
        std::fs::write(dir.join(format!("{key}.sha256")), sha256_hex(digest_of.as_bytes())).unwrap();
        dir.join(format!("{key}.g6"))
    }

    #[test]
    fn cached_offline() {
        let dir = tempfile::tempdir().unwrap();
        let url = "https://example.invalid/snarks.g6";
        let p = seed(dir.path(), url, "I?h]@eOWG\n", "I?h]@eOWG\n");
        assert_eq!(fetch_dataset(url, dir.path(), FetchMode::Offline).unwrap(), p);
    }

    #[test]
    fn corrupted_cache() {
        let dir = tempfile::tempdir().unwrap();
        let url = "https://example.invalid/snarks.g6";
        seed(dir.path(), url, "tampered\n", "I?h]@eOWG\n");
        assert!(matches!(fetch_dataset(url, dir.path(), FetchMode::Offline), Err(Error::Integrity(_))));
    }

    #[test]
    fn cold_cache_offline() {
        let dir = tempfile::tempdir().unwrap();
        let r = fetch_dataset("https://example.invalid/x.g6", dir.path(), FetchMode::Offline);
        assert!(matches!(r, Err(Error::Fetch(_))));
    }

    #[test]
    fn local_paths_pass_through() {
        let dir = tempfile::tempdir().unwrap();
        let f = dir.path().join("a.g6");
        std::fs::write(&f, "").unwrap();
        assert_eq!(fetch_dataset(f.to_str().unwrap(), dir.path(), FetchMode::Offline).unwrap(), f);
        assert!(fetch_dataset("/no/such/file.g6", dir.path(), FetchMode::Online).is_err());
    }
}
