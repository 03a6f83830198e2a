// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! JSON group input files.
//!
//! A file names a group and gives either permutation generators as lists of
//! 0-based cycles, or a full Cayley table:
//!
//! ```json
//! {"name": "S3", "degree": 3, "generators": [[[0, 1, 2]], [[0, 1]]]}
//! {"name": "C2", "cayley": [[0, 1], [1, 0]]}
//! ```

use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{Bounds, FiniteGroup, GroupError, Permutation};

#[derive(Debug, Error)]
pub enum InputError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed group file: {0}")]
    Json(#[from] serde_json::Error),
    #[error("group file must contain exactly one of \"generators\" and \"cayley\"")]
    AmbiguousSource,
    #[error("\"generators\" requires a positive \"degree\"")]
    MissingDegree,
    #[error("{0}")]
    Group(#[from] GroupError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupFile {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<Vec<Vec<usize>>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cayley: Option<Vec<Vec<usize>>>,
}

impl GroupFile {
    pub fn from_json(text: &str) -> Result<Self, InputError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn read(path: &Path) -> Result<Self, InputError> {
        let text = std::fs::read_to_string(path).map_err(|source| InputError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::from_json(&text)
    }

    pub fn build(&self) -> Result<FiniteGroup, InputError> {
        self.build_with(&Bounds::default())
    }

    pub fn build_with(&self, bounds: &Bounds) -> Result<FiniteGroup, InputError> {
        let group = match (&self.generators, &self.cayley) {
            (Some(gens), None) => {
                let degree = self
                    .degree
                    .filter(|&d| d > 0)
                    .ok_or(InputError::MissingDegree)?;
                let perms = gens
                    .iter()
                    .map(|cycles| Permutation::from_cycles(degree, cycles))
                    .collect::<Result<Vec<_>, _>>()?;
                FiniteGroup::from_permutation_generators_with(&perms, bounds)?
            }
            (None, Some(table)) => FiniteGroup::from_cayley_table_with(table, bounds)?,
            _ => return Err(InputError::AmbiguousSource),
        };
        Ok(group.with_label(self.name.clone()))
    }
}
