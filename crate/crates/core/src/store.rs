//! File-backed card store: one `<id>.json` file per card under a root
//! directory.
//!
//! Writes go to a dot-prefixed `.tmp` file in the same directory and are
//! renamed into place, so readers only ever see complete documents.

use std::fmt;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::model::{Classification, ModelCard};
use crate::render::{to_json, to_json_body, RenderOptions};
use crate::validation::{has_errors, lint_card, parse_card, Diagnostic};
use crate::vocabulary::TermSelection;

#[derive(Debug, Error)]
pub enum StoreError {
    #[error("card has error diagnostics")]
    RejectedInvalid(Vec<Diagnostic>),
    #[error("a card with id `{0}` already exists")]
    Conflict(StoredId),
    #[error("no card with id `{0}`")]
    NotFound(StoredId),
    #[error("invalid card id `{0}`: only A-Z, a-z, 0-9, `_` and `-` are allowed")]
    InvalidId(String),
    #[error("stored card `{id}` is corrupt")]
    Corrupt {
        id: StoredId,
        diagnostics: Vec<Diagnostic>,
    },
    #[error("storage error at {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
}

fn io_err(path: &Path) -> impl FnOnce(io::Error) -> StoreError + '_ {
    move |source| StoreError::Io {
        path: path.to_path_buf(),
        source,
    }
}

/// Identifier of a stored card; also its file stem.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StoredId(String);

impl StoredId {
    pub fn new(id: impl Into<String>) -> Result<Self, StoreError> {
        let id = id.into();
        let ok = !id.is_empty()
            && id
                .bytes()
                .all(|b| b.is_ascii_alphanumeric() || b == b'_' || b == b'-');
        if ok {
            Ok(StoredId(id))
        } else {
            Err(StoreError::InvalidId(id))
        }
    }

    /// The MMCID when present, otherwise `card-` plus 16 hex digits of the
    /// SHA-256 of the card's canonical JSON body.
    pub fn for_card(card: &ModelCard) -> Result<Self, StoreError> {
        match &card.identification.mmcid {
            Some(mmcid) => StoredId::new(mmcid.clone()),
            None => {
                let digest = Sha256::digest(to_json_body(card));
                let hex: String = digest[..8].iter().map(|b| format!("{b:02x}")).collect();
                Ok(StoredId(format!("card-{hex}")))
            }
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for StoredId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StoreLocation {
    root: PathBuf,
}

impl StoreLocation {
    /// Opens an existing directory.
    pub fn open(root: impl Into<PathBuf>) -> Result<Self, StoreError> {
        let root = root.into();
        let meta = fs::metadata(&root).map_err(io_err(&root))?;
        if !meta.is_dir() {
            return Err(StoreError::Io {
                source: io::Error::other("not a directory"),
                path: root,
            });
        }
        Ok(Self { root })
    }

    /// Creates the directory (and parents) if needed, then opens it.
    pub fn create(root: impl Into<PathBuf>) -> Result<Self, StoreError> {
        let root = root.into();
        fs::create_dir_all(&root).map_err(io_err(&root))?;
        Self::open(root)
    }

    pub fn root(&self) -> &Path {
        &self.root
    }

    pub fn path_for(&self, id: &StoredId) -> PathBuf {
        self.root.join(format!("{id}.json"))
    }
}

/// Saves a card. Fails with [`StoreError::Conflict`] if the id is taken and
/// `overwrite` is false.
pub fn save(
    loc: &StoreLocation,
    card: &ModelCard,
    opts: &RenderOptions,
    overwrite: bool,
) -> Result<StoredId, StoreError> {
    let diagnostics = lint_card(card);
    if has_errors(&diagnostics) {
        return Err(StoreError::RejectedInvalid(diagnostics));
    }
    let id = StoredId::for_card(card)?;
    let target = loc.path_for(&id);
    let bytes = to_json(card, &opts.resolved());

    let mut tmp = tempfile::Builder::new()
        .prefix(".")
        .suffix(".tmp")
        .tempfile_in(loc.root())
        .map_err(io_err(loc.root()))?;
    tmp.write_all(&bytes).map_err(io_err(tmp.path()))?;
    tmp.as_file().sync_all().map_err(io_err(tmp.path()))?;

    let persisted = if overwrite {
        tmp.persist(&target)
    } else {
        tmp.persist_noclobber(&target)
    };
    match persisted {
        Ok(_) => Ok(id),
        Err(e) if e.error.kind() == io::ErrorKind::AlreadyExists => Err(StoreError::Conflict(id)),
        Err(e) => Err(StoreError::Io {
            path: target,
            source: e.error,
        }),
    }
}

pub fn load(loc: &StoreLocation, id: &StoredId) -> Result<ModelCard, StoreError> {
    let path = loc.path_for(id);
    let bytes = match fs::read(&path) {
        Ok(bytes) => bytes,
        Err(e) if e.kind() == io::ErrorKind::NotFound => {
            return Err(StoreError::NotFound(id.clone()))
        }
        Err(e) => return Err(io_err(&path)(e)),
    };
    parse_card(&bytes)
        .map(|parsed| parsed.card)
        .map_err(|diagnostics| StoreError::Corrupt {
            id: id.clone(),
            diagnostics,
        })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ListedCard {
    pub id: StoredId,
    pub classification: Classification,
}

/// A file in the store that could not be read as a card.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkippedFile {
    pub path: PathBuf,
    pub reason: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Listing {
    pub cards: Vec<ListedCard>,
    pub skipped: Vec<SkippedFile>,
}

/// Lists stored cards sorted by id, keeping only those whose domains
/// contain `domain_filter` when one is given. Unreadable or corrupt files
/// are reported in [`Listing::skipped`].
pub fn list_cards(
    loc: &StoreLocation,
    domain_filter: Option<&TermSelection>,
) -> Result<Listing, StoreError> {
    let mut listing = Listing::default();
    let dir = fs::read_dir(loc.root()).map_err(io_err(loc.root()))?;
    for entry in dir {
        let entry = entry.map_err(io_err(loc.root()))?;
        let path = entry.path();
        let Some(name) = path.file_name().and_then(|n| n.to_str()) else {
            continue;
        };
        let Some(stem) = name.strip_suffix(".json") else {
            continue;
        };
        let Ok(id) = StoredId::new(stem) else {
            continue;
        };
        match load(loc, &id) {
            Ok(card) => {
                let keep =
                    domain_filter.is_none_or(|sel| card.classification.domains.contains(sel));
                if keep {
                    listing.cards.push(ListedCard {
                        id,
                        classification: card.classification,
                    });
                }
            }
            Err(StoreError::Corrupt { diagnostics, .. }) => listing.skipped.push(SkippedFile {
                path,
                reason: diagnostics
                    .first()
                    .map(|d| d.message.clone())
                    .unwrap_or_else(|| "unparseable card".into()),
            }),
            // Removed between read_dir and read, or not a regular file.
            Err(StoreError::NotFound(_)) => {}
            Err(e) => listing.skipped.push(SkippedFile {
                path,
                reason: e.to_string(),
            }),
        }
    }
    listing.cards.sort_by(|a, b| a.id.cmp(&b.id));
    listing.skipped.sort_by(|a, b| a.path.cmp(&b.path));
    Ok(listing)
}
