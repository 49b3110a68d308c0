//! Group and subgroup files: `{"degree": n, "generators": [[images...], ...]}`,
//! subgroup files add `"parent": "<path>"`.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::{PermGroup, Subgroup};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupFile {
    pub degree: usize,
    pub generators: Vec<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parent: Option<String>,
}

impl GroupFile {
    pub fn from_group(g: &PermGroup) -> Self {
        GroupFile {
            degree: g.degree(),
            generators: g.generators().iter().map(|p| p.images().to_vec()).collect(),
            parent: None,
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn read(path: &Path) -> Result<Self> {
        GroupFile::parse(&std::fs::read_to_string(path)?)
    }

    pub fn to_group(&self) -> Result<PermGroup> {
        if let Some(g) = self.generators.iter().find(|g| g.len() != self.degree) {
            return Err(Error::input(format!("generator of length {} in a degree-{} file", g.len(), self.degree)));
        }
        PermGroup::from_images(self.degree, self.generators.clone())
    }

    /// Resolves `parent` relative to the directory of `path`.
    pub fn parent_path(&self, path: &Path) -> Option<PathBuf> {
        self.parent.as_ref().map(|p| {
            let p = PathBuf::from(p);
            if p.is_absolute() {
                p
            } else {
                path.parent().unwrap_or(Path::new(".")).join(p)
            }
        })
    }

    pub fn to_subgroup(&self, parent: &PermGroup, cap: usize) -> Result<Subgroup> {
        if self.degree != parent.degree() {
            return Err(Error::input("subgroup degree differs from its parent"));
        }
        let gens = self.to_group()?.generators().to_vec();
        Subgroup::generated(parent, gens, cap)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_group_and_subgroup_files() {
        let g = GroupFile::parse(r#"{"degree": 3, "generators": [[1,0,2],[1,2,0]]}"#).unwrap();
        let s3 = g.to_group().unwrap();
        assert_eq!(s3.order(), 6u32.into());
        let h = GroupFile::parse(r#"{"degree": 3, "generators": [[1,2,0]], "parent": "g.json"}"#).unwrap();
        assert_eq!(h.parent_path(Path::new("/tmp/x/h.json")).unwrap(), PathBuf::from("/tmp/x/g.json"));
        assert_eq!(h.to_subgroup(&s3, 100).unwrap().order(), 3);
    }

    #[test]
    fn malformed_files_are_input_errors() {
        let bad = GroupFile::parse(r#"{"degree": 3, "generators": [[0,0,2]]}"#).unwrap();
        assert!(matches!(bad.to_group(), Err(Error::Input(_))));
        let short = GroupFile::parse(r#"{"degree": 4, "generators": [[1,0,2]]}"#).unwrap();
        assert!(matches!(short.to_group(), Err(Error::Input(_))));
    }
}
