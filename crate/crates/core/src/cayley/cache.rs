//! Ball cache files: one JSON header line, then binary records
//! `[key length: u8][key bytes][distance: u8]`.

use super::key::NfKey;
use super::{BallScope, CayleyError, DistanceMap};
use crate::presentation::GroupPresentation;
use serde::{Deserialize, Serialize};
use std::io::{BufRead, BufReader, BufWriter, Read, Write};
use std::path::Path;

const FORMAT: &str = "hnn-patterns-ball/1";

#[derive(Debug, Serialize, Deserialize)]
struct Header {
    format: String,
    tool_version: String,
    presentation_hash: String,
    rank: usize,
    radius: u32,
    scope: BallScope,
    sphere_sizes: Vec<u64>,
    entries: usize,
}

impl DistanceMap {
    pub fn save(&self, path: &Path) -> Result<(), CayleyError> {
        let mut w = BufWriter::new(std::fs::File::create(path)?);
        let header = Header {
            format: FORMAT.into(),
            tool_version: crate::TOOL_VERSION.into(),
            presentation_hash: self.presentation_hash.clone(),
            rank: self.rank,
            radius: self.radius,
            scope: self.scope.clone(),
            sphere_sizes: self.sphere_sizes.clone(),
            entries: self.dist.len(),
        };
        serde_json::to_writer(&mut w, &header).map_err(|e| CayleyError::CacheFormat(e.to_string()))?;
        w.write_all(b"\n")?;
        let mut entries: Vec<(&NfKey, &u8)> = self.dist.iter().collect();
        entries.sort();
        for (k, d) in entries {
            w.write_all(&[k.as_bytes().len() as u8])?;
            w.write_all(k.as_bytes())?;
            w.write_all(&[*d])?;
        }
        w.flush()?;
        Ok(())
    }

    /// Loads a cache, checking it was built for `p` with at least `min_radius`.
    pub fn load(path: &Path, p: &GroupPresentation, min_radius: u32) -> Result<Self, CayleyError> {
        let mut r = BufReader::new(std::fs::File::open(path)?);
        let mut line = String::new();
        r.read_line(&mut line)?;
        let h: Header = serde_json::from_str(&line).map_err(|e| CayleyError::CacheFormat(e.to_string()))?;
        if h.format != FORMAT {
            return Err(CayleyError::CacheFormat(format!("unknown format `{}`", h.format)));
        }
        if h.presentation_hash != p.hash() {
            return Err(CayleyError::PresentationMismatch { expected: p.hash(), found: h.presentation_hash });
        }
        if h.radius < min_radius {
            return Err(CayleyError::CacheFormat(format!("cache radius {} is below {}", h.radius, min_radius)));
        }
        let mut dist = rustc_hash::FxHashMap::default();
        dist.reserve(h.entries);
        let mut buf = Vec::new();
        r.read_to_end(&mut buf)?;
        let mut pos = 0;
        while pos < buf.len() {
            let n = buf[pos] as usize;
            let end = pos + 1 + n;
            if end >= buf.len() {
                return Err(CayleyError::CacheFormat("truncated record".into()));
            }
            dist.insert(NfKey::from_bytes(&buf[pos + 1..end]), buf[end]);
            pos = end + 1;
        }
        if dist.len() != h.entries {
            return Err(CayleyError::CacheFormat(format!("expected {} entries, found {}", h.entries, dist.len())));
        }
        Ok(DistanceMap {
            presentation_hash: h.presentation_hash,
            rank: h.rank,
            radius: h.radius,
            scope: h.scope,
            dist,
            sphere_sizes: h.sphere_sizes,
        })
    }
}
