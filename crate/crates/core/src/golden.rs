//! Reference polynomials stored as text files, one polynomial per file in
//! the canonical printed form, under `<dir>/v1/<name>.txt`.

use std::fs;
use std::path::{Path, PathBuf};

use crate::elliptic::reference::{A3, A4, GAMMA4, H1, H2, H3, OCTIC, RESOLVENT_B, RESOLVENT_RGP, SEXTIC, T4};
use crate::permgroup::catalog::V35;
use crate::polyring::{format_poly, parse_poly, poly, MultiPoly, PolyError};
use crate::resolvent::v35::V35_IMAGE;
use crate::resolvent::warmup::RESOLVENT_CUBIC;

/// Layout version; a change in the canonical text format bumps it.
pub const GOLDEN_VERSION: &str = "v1";

/// `(file stem, reference text)` for every stored polynomial.
pub const GOLDEN_ENTRIES: [(&str, &str); 14] = [
    ("resolvent_cubic", RESOLVENT_CUBIC),
    ("sextic", SEXTIC),
    ("resolvent_rgp", RESOLVENT_RGP),
    ("resolvent_b", RESOLVENT_B),
    ("a3", A3),
    ("a4", A4),
    ("gamma4", GAMMA4),
    ("t4", T4),
    ("octic", OCTIC),
    ("v35", V35),
    ("omega_v35", V35_IMAGE),
    ("h1", H1),
    ("h2", H2),
    ("h3", H3),
];

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GoldenError {
    #[error("unknown golden entry `{0}`")]
    Unknown(String),
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("{path}: {source}")]
    Parse { path: String, source: PolyError },
}

/// Canonical file contents for a polynomial.
pub fn render(p: &MultiPoly) -> String {
    format!("{}\n", format_poly(p))
}

pub fn golden_path(dir: &Path, name: &str) -> PathBuf {
    dir.join(GOLDEN_VERSION).join(format!("{name}.txt"))
}

/// Reference polynomial for `name`, from the built-in table.
pub fn reference(name: &str) -> Result<MultiPoly, GoldenError> {
    GOLDEN_ENTRIES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, text)| poly(text))
        .ok_or_else(|| GoldenError::Unknown(name.to_string()))
}

/// Raw text of a golden file.
pub fn read_text(dir: &Path, name: &str) -> Result<String, GoldenError> {
    let path = golden_path(dir, name);
    fs::read_to_string(&path).map_err(|e| GoldenError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

/// Parsed golden polynomial.
pub fn load(dir: &Path, name: &str) -> Result<MultiPoly, GoldenError> {
    let text = read_text(dir, name)?;
    parse_poly(text.trim()).map_err(|source| GoldenError::Parse {
        path: golden_path(dir, name).display().to_string(),
        source,
    })
}

/// Writes every entry in canonical form.
pub fn write_all(dir: &Path) -> Result<(), GoldenError> {
    let io = |path: &Path, e: std::io::Error| GoldenError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    };
    let sub = dir.join(GOLDEN_VERSION);
    fs::create_dir_all(&sub).map_err(|e| io(&sub, e))?;
    for (name, text) in GOLDEN_ENTRIES {
        let path = golden_path(dir, name);
        fs::write(&path, render(&poly(text))).map_err(|e| io(&path, e))?;
    }
    Ok(())
}

/// Whether `computed` renders to exactly the stored text.
pub fn matches_bit_exact(dir: &Path, name: &str, computed: &MultiPoly) -> Result<bool, GoldenError> {
    Ok(read_text(dir, name)? == render(computed))
}
