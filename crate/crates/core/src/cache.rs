//! On-disk cache of graded bases, keyed by quiver and code version.

use crate::algebra::basis::GradedBasis;
use crate::algebra::Algebra;
use crate::error::Result;
use crate::quiver::{build_quiver, root_data, QuiverId};
use serde::{Deserialize, Serialize};
use std::path::{Path, PathBuf};

/// Bumped whenever the basis layout or monomial order changes.
pub const CACHE_VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), "+basis.1");

/// Environment variable naming the cache directory.
pub const CACHE_ENV: &str = "PREPROJ_CACHE_DIR";

#[derive(Serialize, Deserialize)]
struct Entry {
    version: String,
    quiver: QuiverId,
    basis: GradedBasis,
}

/// The explicit directory if given, else the environment override.
pub fn resolve_dir(explicit: Option<&Path>) -> Option<PathBuf> {
    explicit.map(Path::to_path_buf).or_else(|| std::env::var_os(CACHE_ENV).map(PathBuf::from))
}

pub fn entry_path(dir: &Path, id: QuiverId) -> PathBuf {
    dir.join(format!("{id}-{CACHE_VERSION}.json"))
}

/// How an algebra was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Source {
    Built,
    Cached,
}

/// Loads the basis from `dir` when a matching entry exists, otherwise builds
/// it and writes a fresh entry. Unreadable or stale entries are rebuilt.
pub fn load_or_build(id: QuiverId, dir: Option<&Path>) -> Result<(Algebra, Source)> {
    let Some(dir) = dir else {
        return Ok((Algebra::build(id)?, Source::Built));
    };
    let path = entry_path(dir, id);
    if let Ok(text) = std::fs::read_to_string(&path) {
        if let Ok(e) = serde_json::from_str::<Entry>(&text) {
            if e.version == CACHE_VERSION && e.quiver == id {
                let quiver = build_quiver(id.family, id.rank_param)?;
                let roots = root_data(&quiver);
                if let Ok(alg) = Algebra::from_parts(quiver, roots, e.basis) {
                    return Ok((alg, Source::Cached));
                }
            }
        }
    }
    let alg = Algebra::build(id)?;
    std::fs::create_dir_all(dir)?;
    let entry = Entry { version: CACHE_VERSION.to_string(), quiver: id, basis: alg.basis.clone() };
    let tmp = path.with_extension("tmp");
    std::fs::write(&tmp, serde_json::to_vec(&entry)?)?;
    std::fs::rename(&tmp, &path)?;
    Ok((alg, Source::Built))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::Family;

    #[test]
    fn second_load_hits_the_cache() {
        let dir = std::env::temp_dir().join(format!("preproj-cache-test-{}", std::process::id()));
        let id = QuiverId::new(Family::D, 4).unwrap();
        let (a, s1) = load_or_build(id, Some(&dir)).unwrap();
        let (b, s2) = load_or_build(id, Some(&dir)).unwrap();
        assert_eq!((s1, s2), (Source::Built, Source::Cached));
        assert_eq!(a.basis, b.basis);
        std::fs::write(entry_path(&dir, id), "{not json").unwrap();
        assert_eq!(load_or_build(id, Some(&dir)).unwrap().1, Source::Built);
        std::fs::remove_dir_all(&dir).unwrap();
    }
}
