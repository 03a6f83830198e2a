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

//! Commuting graphs of finite groups and their star-freeness.
//!
//! The crate builds groups from tables, permutations and product recipes,
//! ships a self-validating catalog of small groups, decides strong and
//! induced k-star-freeness of commuting graphs, and enumerates solutions of
//! the class equation under bounded centralizer sizes.

pub mod analysis;
pub mod catalog;
pub mod class_eq;
pub mod classify;
pub mod graph;
pub mod group;

pub use group::{Bounds, FiniteGroup, GroupError, Permutation};
