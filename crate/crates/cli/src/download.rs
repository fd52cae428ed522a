//! Dataset downloader driven by the committed manifest.
//!
//! The manifest lists the upstream archives by name; entries whose checksum
//! is still null print the computed digest so it can be recorded after a
//! trusted first download. Fetching shells out to `curl`.

use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::Command;

use serde::Deserialize;
use sha2::{Digest, Sha256};

#[derive(Debug, Deserialize)]
pub struct Manifest {
    pub datasets: Vec<DatasetEntry>,
}

#[derive(Debug, Deserialize)]
pub struct DatasetEntry {
    pub name: String,
    pub url: String,
    /// Decompressed file name under the data directory.
    pub file: String,
    /// Hex sha256 of the compressed archive; null until recorded.
    pub sha256: Option<String>,
}

pub fn load_manifest(path: &Path) -> Result<Manifest, String> {
    let text = fs::read_to_string(path)
        .map_err(|e| format!("cannot read manifest {}: {e}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| format!("malformed manifest: {e}"))
}

/// Ensures the named dataset is present and decompressed under `data_dir`,
/// downloading it if needed. Returns the edge-list path.
pub fn fetch_dataset(
    manifest_path: &Path,
    name: &str,
    data_dir: &Path,
) -> Result<PathBuf, String> {
    let manifest = load_manifest(manifest_path)?;
    let entry = manifest
        .datasets
        .iter()
        .find(|d| d.name == name)
        .ok_or_else(|| {
            let known: Vec<&str> = manifest.datasets.iter().map(|d| d.name.as_str()).collect();
            format!("unknown dataset `{name}` (manifest has: {})", known.join(", "))
        })?;
    let target = data_dir.join(&entry.file);
    if target.exists() {
        return Ok(target);
    }
    fs::create_dir_all(data_dir).map_err(|e| format!("cannot create data dir: {e}"))?;
    let archive = data_dir.join(format!("{}.gz", entry.file));
    eprintln!("downloading {} -> {}", entry.url, archive.display());
    let status = Command::new("curl")
        .args(["-fsSL", "--retry", "3", "-o"])
        .arg(&archive)
        .arg(&entry.url)
        .status()
        .map_err(|e| format!("failed to run curl: {e}"))?;
    if !status.success() {
        return Err(format!("curl exited with {status} for {}", entry.url));
    }
    verify_checksum(&archive, entry)?;
    decompress(&archive, &target)?;
    Ok(target)
}

pub fn verify_checksum(archive: &Path, entry: &DatasetEntry) -> Result<(), String> {
    let bytes = fs::read(archive).map_err(|e| format!("cannot read archive: {e}"))?;
    let digest = hex_digest(&bytes);
    match &entry.sha256 {
        Some(expected) if expected.eq_ignore_ascii_case(&digest) => Ok(()),
        Some(expected) => Err(format!(
            "checksum mismatch for {}: manifest {expected}, archive {digest}",
            entry.name
        )),
        None => {
            eprintln!(
                "no checksum recorded for {}; archive sha256 is {digest} \
                 (add it to the manifest after verifying the source)",
                entry.name
            );
            Ok(())
        }
    }
}

pub fn hex_digest(bytes: &[u8]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(bytes);
    hasher
        .finalize()
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

fn decompress(archive: &Path, target: &Path) -> Result<(), String> {
    let file = fs::File::open(archive).map_err(|e| format!("cannot open archive: {e}"))?;
    let mut decoder = flate2::read::GzDecoder::new(file);
    let mut text = Vec::new();
    decoder
        .read_to_end(&mut text)
        .map_err(|e| format!("cannot decompress {}: {e}", archive.display()))?;
    fs::write(target, text).map_err(|e| format!("cannot write {}: {e}", target.display()))
}
