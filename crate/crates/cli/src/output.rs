use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};

/// Writes every file or none: on the first failure the files already
/// written are removed again.
pub fn write_all(files: &[(&Path, &str)]) -> Result<()> {
    let mut written: Vec<PathBuf> = Vec::new();
    for (path, content) in files {
        if let Err(e) = fs::write(path, content) {
            for p in &written {
                let _ = fs::remove_file(p);
            }
            let _ = fs::remove_file(path);
            return Err(e).with_context(|| format!("cannot write {}", path.display()));
        }
        written.push(path.to_path_buf());
    }
    Ok(())
}

/// Shortest representation that parses back to the same `f64`.
pub fn num(x: f64) -> String {
    format!("{x:?}")
}
