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

use std::fmt;

use super::GroupError;

/// A bijection on `0..degree`, stored as its image list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, GroupError> {
        let d = images.len();
        if d == 0 {
            return Err(GroupError::InvalidPermutation(
                "degree must be positive".into(),
            ));
        }
        let mut seen = vec![false; d];
        for &p in &images {
            if p >= d {
                return Err(GroupError::InvalidPermutation(format!(
                    "image {p} out of range for degree {d}"
                )));
            }
            if std::mem::replace(&mut seen[p], true) {
                return Err(GroupError::InvalidPermutation(format!(
                    "image {p} repeated"
                )));
            }
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation from disjoint cycles of 0-based points; each cycle
    /// maps every point to the next one.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self, GroupError> {
        if degree == 0 {
            return Err(GroupError::InvalidPermutation(
                "degree must be positive".into(),
            ));
        }
        let mut images: Vec<usize> = (0..degree).collect();
        let mut moved = vec![false; degree];
        for cycle in cycles {
            for (i, &p) in cycle.iter().enumerate() {
                if p >= degree {
                    return Err(GroupError::InvalidPermutation(format!(
                        "point {p} out of range for degree {degree}"
                    )));
                }
                if std::mem::replace(&mut moved[p], true) {
                    return Err(GroupError::InvalidPermutation(format!(
                        "point {p} appears in more than one cycle position"
                    )));
                }
                images[p] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: self.images.iter().map(|&p| other.images[p]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &p) in self.images.iter().enumerate() {
            images[p] = i;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &p)| i == p)
    }

    /// Non-trivial cycles, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut p = self.images[start];
            while p != start {
                seen[p] = true;
                cycle.push(p);
                p = self.images[p];
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let body: Vec<String> = c.iter().map(|p| p.to_string()).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn cycles_round_trip() {
        let p = Permutation::from_cycles(5, &[vec![0, 2, 4], vec![1, 3]]).unwrap();
        assert_eq!(p.images(), &[2, 3, 4, 1, 0]);
        assert_eq!(p.to_string(), "(0 2 4)(1 3)");
        assert_eq!(Permutation::from_cycles(5, &p.cycles()).unwrap(), p);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Permutation::from_images(vec![0, 0]).is_err());
        assert!(Permutation::from_images(vec![0, 2]).is_err());
        assert!(Permutation::from_cycles(3, &[vec![0, 3]]).is_err());
        assert!(Permutation::from_cycles(3, &[vec![0, 1], vec![1, 2]]).is_err());
        assert!(Permutation::from_cycles(0, &[]).is_err());
    }

    #[test]
    fn composition_order() {
        // (0 1) then (1 2): 0 -> 1 -> 2
        let a = Permutation::from_cycles(3, &[vec![0, 1]]).unwrap();
        let b = Permutation::from_cycles(3, &[vec![1, 2]]).unwrap();
        assert_eq!(a.then(&b).apply(0), 2);
    }

    fn perm_strategy() -> impl Strategy<Value = Permutation> {
        (1usize..9).prop_flat_map(|d| {
            Just((0..d).collect::<Vec<_>>())
                .prop_shuffle()
                .prop_map(|v| Permutation::from_images(v).unwrap())
        })
    }

    proptest! {
        #[test]
        fn inverse_cancels(p in perm_strategy()) {
            prop_assert!(p.then(&p.inverse()).is_identity());
            prop_assert!(p.inverse().then(&p).is_identity());
            prop_assert_eq!(Permutation::from_cycles(p.degree(), &p.cycles()).unwrap(), p);
        }
    }
}
