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

//! C interface to the starfree toolkit.
//!
//! Groups are opaque handles created by the `starfree_group_*` constructors
//! and released with [`starfree_group_free`]. Every fallible call returns a
//! [`StarfreeStatus`]; on failure [`starfree_last_error`] describes the
//! problem. Strings handed out by the library are released with
//! [`starfree_string_free`]. Catalog data is loaded once per tier and shared.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::OnceLock;

use starfree::analysis::analyze;
use starfree::catalog::{Catalog, CatalogError, Tier};
use starfree::class_eq::{solve, SolveError};
use starfree::classify::{verify_against_published, MAX_K};
use starfree::graph::{
    induced_star_number, is_induced_k_star_free, is_strong_k_star_free, strong_star_number,
    CommutingGraph,
};
use starfree::group::{GroupFile, InputError};
use starfree::{FiniteGroup, GroupError};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StarfreeStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    UnknownName = 3,
    InvalidGroup = 4,
    AbelianGroup = 5,
    CatalogError = 6,
    Panic = 7,
}

/// An owned finite group.
pub struct StarfreeGroup {
    group: FiniteGroup,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure {
    status: StarfreeStatus,
    message: String,
}

impl Failure {
    fn new(status: StarfreeStatus, message: impl Into<String>) -> Self {
        Failure {
            status,
            message: message.into(),
        }
    }
}

impl From<GroupError> for Failure {
    fn from(err: GroupError) -> Self {
        let status = match err {
            GroupError::AbelianGroup => StarfreeStatus::AbelianGroup,
            GroupError::ElementOutOfRange { .. } => StarfreeStatus::InvalidArgument,
            _ => StarfreeStatus::InvalidGroup,
        };
        Failure::new(status, err.to_string())
    }
}

impl From<CatalogError> for Failure {
    fn from(err: CatalogError) -> Self {
        let status = match err {
            CatalogError::UnknownName(_) => StarfreeStatus::UnknownName,
            _ => StarfreeStatus::CatalogError,
        };
        Failure::new(status, err.to_string())
    }
}

impl From<InputError> for Failure {
    fn from(err: InputError) -> Self {
        match err {
            InputError::Group(inner) => inner.into(),
            other => Failure::new(StarfreeStatus::InvalidArgument, other.to_string()),
        }
    }
}

impl From<SolveError> for Failure {
    fn from(err: SolveError) -> Self {
        Failure::new(StarfreeStatus::InvalidArgument, err.to_string())
    }
}

fn set_last_error(message: Option<String>) {
    let message = message.map(|m| CString::new(m.replace('\0', " ")).expect("NUL bytes removed"));
    LAST_ERROR.with(|slot| *slot.borrow_mut() = message);
}

/// Runs `body`, recording any failure or panic for [`starfree_last_error`].
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> StarfreeStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            set_last_error(None);
            StarfreeStatus::Ok
        }
        Ok(Err(failure)) => {
            set_last_error(Some(failure.message));
            failure.status
        }
        Err(payload) => {
            let message = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_last_error(Some(format!("internal error: {message}")));
            StarfreeStatus::Panic
        }
    }
}

fn catalog(stretch: bool) -> Result<&'static Catalog, Failure> {
    static STANDARD: OnceLock<Result<Catalog, String>> = OnceLock::new();
    static STRETCH: OnceLock<Result<Catalog, String>> = OnceLock::new();
    let (cell, tier) = if stretch {
        (&STRETCH, Tier::Stretch)
    } else {
        (&STANDARD, Tier::Standard)
    };
    cell.get_or_init(|| Catalog::load(tier).map_err(|e| e.to_string()))
        .as_ref()
        .map_err(|msg| Failure::new(StarfreeStatus::CatalogError, msg.clone()))
}

/// # Safety
/// `text` must be null or a valid NUL-terminated string.
unsafe fn read_str<'a>(text: *const c_char) -> Result<&'a str, Failure> {
    if text.is_null() {
        return Err(Failure::new(
            StarfreeStatus::NullPointer,
            "string argument is null",
        ));
    }
    CStr::from_ptr(text)
        .to_str()
        .map_err(|_| Failure::new(StarfreeStatus::InvalidArgument, "string is not UTF-8"))
}

/// # Safety
/// `group` must be null or a live handle.
unsafe fn read_group<'a>(group: *const StarfreeGroup) -> Result<&'a FiniteGroup, Failure> {
    group
        .as_ref()
        .map(|g| &g.group)
        .ok_or_else(|| Failure::new(StarfreeStatus::NullPointer, "group handle is null"))
}

/// # Safety
/// `out` must be null or valid for writes.
unsafe fn write<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure::new(
            StarfreeStatus::NullPointer,
            "output pointer is null",
        ));
    }
    out.write(value);
    Ok(())
}

fn into_c_string(text: String) -> *mut c_char {
    CString::new(text.replace('\0', " "))
        .expect("NUL bytes removed")
        .into_raw()
}

/// # Safety
/// `out` must be null or valid for writes.
unsafe fn publish_group(out: *mut *mut StarfreeGroup, group: FiniteGroup) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure::new(
            StarfreeStatus::NullPointer,
            "output pointer is null",
        ));
    }
    out.write(Box::into_raw(Box::new(StarfreeGroup { group })));
    Ok(())
}

/// Message describing the last failed call on this thread, or null after a
/// successful call. Valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn starfree_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow()
            .as_ref()
            .map_or(std::ptr::null(), |m| m.as_ptr())
    })
}

/// Builds a catalog group by name. `stretch` selects the larger catalog tier.
///
/// # Safety
/// `name` must be a NUL-terminated string and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn starfree_group_from_catalog(
    name: *const c_char,
    stretch: bool,
    out: *mut *mut StarfreeGroup,
) -> StarfreeStatus {
    guard(|| {
        let name = read_str(name)?;
        let group = catalog(stretch)?.build(name)?;
        publish_group(out, group)
    })
}

/// Builds a group from a JSON group file document.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn starfree_group_from_json(
    json: *const c_char,
    out: *mut *mut StarfreeGroup,
) -> StarfreeStatus {
    guard(|| {
        let file = GroupFile::from_json(read_str(json)?)?;
        publish_group(out, file.build()?)
    })
}

/// Builds a group from a row-major `order × order` multiplication table.
///
/// # Safety
/// `table` must point to `order * order` readable values and `out` must be
/// valid for writes.
#[no_mangle]
pub unsafe extern "C" fn starfree_group_from_cayley(
    table: *const usize,
    order: usize,
    out: *mut *mut StarfreeGroup,
) -> StarfreeStatus {
    guard(|| {
        if table.is_null() {
            return Err(Failure::new(StarfreeStatus::NullPointer, "table is null"));
        }
        let cells = order.checked_mul(order).filter(|&c| c > 0).ok_or_else(|| {
            Failure::new(StarfreeStatus::InvalidArgument, "order must be positive")
        })?;
        let flat = std::slice::from_raw_parts(table, cells);
        let rows: Vec<Vec<usize>> = flat.chunks(order).map(<[usize]>::to_vec).collect();
        publish_group(out, FiniteGroup::from_cayley_table(&rows)?)
    })
}

/// Releases a group handle. Null is ignored.
///
/// # Safety
/// `group` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn starfree_group_free(group: *mut StarfreeGroup) {
    if !group.is_null() {
        drop(Box::from_raw(group));
    }
}

/// # Safety
/// `group` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn starfree_group_order(
    group: *const StarfreeGroup,
    out: *mut usize,
) -> StarfreeStatus {
    guard(|| write(out, read_group(group)?.order()))
}

/// # Safety
/// `group` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn starfree_group_center_size(
    group: *const StarfreeGroup,
    out: *mut usize,
) -> StarfreeStatus {
    guard(|| write(out, read_group(group)?.center_size()))
}

/// Smallest `k` for which the commuting graph has no `k`-star subgraph.
///
/// # Safety
/// `group` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn starfree_strong_star_number(
    group: *const StarfreeGroup,
    out: *mut usize,
) -> StarfreeStatus {
    guard(|| write(out, strong_star_number(read_group(group)?)?))
}

/// Smallest `k` for which the commuting graph has no induced `k`-star.
///
/// # Safety
/// `group` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn starfree_induced_star_number(
    group: *const StarfreeGroup,
    out: *mut usize,
) -> StarfreeStatus {
    guard(|| write(out, induced_star_number(read_group(group)?)?))
}

/// # Safety
/// `group` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn starfree_is_strong_k_star_free(
    group: *const StarfreeGroup,
    k: usize,
    out: *mut bool,
) -> StarfreeStatus {
    guard(|| write(out, is_strong_k_star_free(read_group(group)?, k)?))
}

/// # Safety
/// `group` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn starfree_is_induced_k_star_free(
    group: *const StarfreeGroup,
    k: usize,
    out: *mut bool,
) -> StarfreeStatus {
    guard(|| write(out, is_induced_k_star_free(read_group(group)?, k)?))
}

/// Full analysis as JSON: profile, class equation, star numbers and graph
/// components. Free the result with [`starfree_string_free`].
///
/// # Safety
/// `group` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn starfree_analyze_json(
    group: *const StarfreeGroup,
    out: *mut *mut c_char,
) -> StarfreeStatus {
    guard(|| {
        let g = read_group(group)?;
        let analysis = analyze(g, catalog(false).ok())?;
        write(out, into_c_string(analysis.to_json()))
    })
}

/// The commuting graph in DOT format. Free the result with
/// [`starfree_string_free`].
///
/// # Safety
/// `group` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn starfree_export_dot(
    group: *const StarfreeGroup,
    out: *mut *mut c_char,
) -> StarfreeStatus {
    guard(|| {
        let graph = CommutingGraph::new(read_group(group)?)?;
        write(out, into_c_string(graph.to_dot()))
    })
}

/// Classification report for `k` in 1..=6 as JSON. Free the result with
/// [`starfree_string_free`].
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn starfree_classify_json(
    k: u32,
    stretch: bool,
    out: *mut *mut c_char,
) -> StarfreeStatus {
    guard(|| {
        if k == 0 || u64::from(k) > MAX_K {
            return Err(Failure::new(
                StarfreeStatus::InvalidArgument,
                format!("k must be between 1 and {MAX_K}"),
            ));
        }
        let report = verify_against_published(catalog(stretch)?, u64::from(k));
        write(out, into_c_string(report.to_json()))
    })
}

/// Class-equation solutions for strictly increasing centralizer `sizes` and
/// center size `center`, as a JSON array. Free the result with
/// [`starfree_string_free`].
///
/// # Safety
/// `sizes` must point to `len` readable values and `out` must be valid for
/// writes.
#[no_mangle]
pub unsafe extern "C" fn starfree_solve_json(
    sizes: *const u64,
    len: usize,
    center: u64,
    out: *mut *mut c_char,
) -> StarfreeStatus {
    guard(|| {
        if sizes.is_null() {
            return Err(Failure::new(StarfreeStatus::NullPointer, "sizes is null"));
        }
        let sizes = std::slice::from_raw_parts(sizes, len);
        let solutions = solve(sizes, center)?;
        write(
            out,
            into_c_string(serde_json::to_string(&solutions).expect("solutions serialize")),
        )
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `text` must be null or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn starfree_string_free(text: *mut c_char) {
    if !text.is_null() {
        drop(CString::from_raw(text));
    }
}
