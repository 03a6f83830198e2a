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

use std::ffi::{c_char, CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use starfree_ffi::*;

fn last_error() -> String {
    let msg = starfree_last_error();
    assert!(!msg.is_null());
    unsafe { CStr::from_ptr(msg) }
        .to_string_lossy()
        .into_owned()
}

fn take_string(text: *mut c_char) -> String {
    let owned = unsafe { CStr::from_ptr(text) }
        .to_string_lossy()
        .into_owned();
    unsafe { starfree_string_free(text) };
    owned
}

fn catalog_group(name: &str) -> *mut StarfreeGroup {
    let name = CString::new(name).unwrap();
    let mut group = ptr::null_mut();
    assert_eq!(
        unsafe { starfree_group_from_catalog(name.as_ptr(), false, &mut group) },
        StarfreeStatus::Ok
    );
    assert!(starfree_last_error().is_null());
    group
}

#[test]
fn star_numbers_through_handles() {
    let q8 = catalog_group("Q8");
    let (mut order, mut center, mut s, mut induced) = (0, 0, 0, 0);
    unsafe {
        assert_eq!(starfree_group_order(q8, &mut order), StarfreeStatus::Ok);
        assert_eq!(
            starfree_group_center_size(q8, &mut center),
            StarfreeStatus::Ok
        );
        assert_eq!(starfree_strong_star_number(q8, &mut s), StarfreeStatus::Ok);
        assert_eq!(
            starfree_induced_star_number(q8, &mut induced),
            StarfreeStatus::Ok
        );
        let mut free = false;
        assert_eq!(
            starfree_is_strong_k_star_free(q8, 2, &mut free),
            StarfreeStatus::Ok
        );
        assert!(free);
        assert_eq!(
            starfree_is_strong_k_star_free(q8, 1, &mut free),
            StarfreeStatus::Ok
        );
        assert!(!free);
        assert_eq!(
            starfree_is_induced_k_star_free(q8, 2, &mut free),
            StarfreeStatus::Ok
        );
        assert!(free);
        starfree_group_free(q8);
    }
    assert_eq!((order, center, s, induced), (8, 2, 2, 2));
}

#[test]
fn json_and_cayley_constructors() {
    let json =
        CString::new(r#"{"name": "S3", "degree": 3, "generators": [[[0, 1, 2]], [[0, 1]]]}"#)
            .unwrap();
    let mut group = ptr::null_mut();
    assert_eq!(
        unsafe { starfree_group_from_json(json.as_ptr(), &mut group) },
        StarfreeStatus::Ok
    );
    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { starfree_analyze_json(group, &mut out) },
        StarfreeStatus::Ok
    );
    let analysis: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
    assert_eq!(analysis["strong_star_number"], 2);
    assert_eq!(analysis["identified_as"], "S3");
    unsafe { starfree_group_free(group) };

    let c2: [usize; 4] = [0, 1, 1, 0];
    assert_eq!(
        unsafe { starfree_group_from_cayley(c2.as_ptr(), 2, &mut group) },
        StarfreeStatus::Ok
    );
    let mut s = 0;
    assert_eq!(
        unsafe { starfree_strong_star_number(group, &mut s) },
        StarfreeStatus::AbelianGroup
    );
    assert!(last_error().contains("abelian"));
    unsafe { starfree_group_free(group) };

    let broken: [usize; 4] = [0, 1, 1, 1];
    let mut none = ptr::null_mut();
    assert_eq!(
        unsafe { starfree_group_from_cayley(broken.as_ptr(), 2, &mut none) },
        StarfreeStatus::InvalidGroup
    );
    assert!(none.is_null());
    assert_eq!(
        unsafe { starfree_group_from_cayley(broken.as_ptr(), 0, &mut none) },
        StarfreeStatus::InvalidArgument
    );
}

#[test]
fn error_codes() {
    let mut group = ptr::null_mut();
    let unknown = CString::new("Q7").unwrap();
    assert_eq!(
        unsafe { starfree_group_from_catalog(unknown.as_ptr(), false, &mut group) },
        StarfreeStatus::UnknownName
    );
    assert!(last_error().contains("Q7"));
    assert_eq!(
        unsafe { starfree_group_from_catalog(ptr::null(), false, &mut group) },
        StarfreeStatus::NullPointer
    );
    let q8 = CString::new("Q8").unwrap();
    assert_eq!(
        unsafe { starfree_group_from_catalog(q8.as_ptr(), false, ptr::null_mut()) },
        StarfreeStatus::NullPointer
    );
    let mut order = 0;
    assert_eq!(
        unsafe { starfree_group_order(ptr::null(), &mut order) },
        StarfreeStatus::NullPointer
    );
    let bad_json = CString::new("{").unwrap();
    assert_eq!(
        unsafe { starfree_group_from_json(bad_json.as_ptr(), &mut group) },
        StarfreeStatus::InvalidArgument
    );
    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { starfree_classify_json(9, false, &mut out) },
        StarfreeStatus::InvalidArgument
    );
    let sizes = [6u64];
    assert_eq!(
        unsafe { starfree_solve_json(sizes.as_ptr(), 1, 4, &mut out) },
        StarfreeStatus::InvalidArgument
    );
    unsafe {
        starfree_group_free(ptr::null_mut());
        starfree_string_free(ptr::null_mut());
    }
}

#[test]
fn classify_solve_and_export() {
    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { starfree_classify_json(3, false, &mut out) },
        StarfreeStatus::Ok
    );
    let report: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
    assert_eq!(report["status"], "PASS");
    assert_eq!(report["verified_groups"].as_array().unwrap().len(), 4);

    let sizes = [2u64, 5];
    assert_eq!(
        unsafe { starfree_solve_json(sizes.as_ptr(), 2, 1, &mut out) },
        StarfreeStatus::Ok
    );
    let solutions: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
    assert_eq!(solutions[0]["order"], 10);
    assert_eq!(solutions[0]["multiplicities"], serde_json::json!([1, 2]));

    let a4 = catalog_group("A4");
    assert_eq!(
        unsafe { starfree_export_dot(a4, &mut out) },
        StarfreeStatus::Ok
    );
    let dot = take_string(out);
    assert!(dot.starts_with("graph \"A4\" {"));
    assert_eq!(dot.lines().filter(|l| l.contains(" -- ")).count(), 7);
    unsafe { starfree_group_free(a4) };
}

#[test]
fn header_declares_the_interface() {
    let header =
        std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("include/starfree.h"))
            .unwrap();
    for symbol in [
        "typedef struct StarfreeGroup StarfreeGroup;",
        "STARFREE_STATUS_ABELIAN_GROUP = 5",
        "starfree_group_from_catalog(",
        "starfree_group_from_json(",
        "starfree_group_from_cayley(",
        "starfree_group_free(",
        "starfree_strong_star_number(",
        "starfree_induced_star_number(",
        "starfree_classify_json(",
        "starfree_solve_json(",
        "starfree_export_dot(",
        "starfree_string_free(",
        "starfree_last_error(",
    ] {
        assert!(header.contains(symbol), "header lacks {symbol}");
    }
}

fn c_compiler() -> Option<PathBuf> {
    let name = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    Command::new(&name)
        .arg("--version")
        .output()
        .ok()
        .filter(|o| o.status.success())
        .map(|_| PathBuf::from(name))
}

#[test]
fn c_program_links_against_static_library() {
    let Some(cc) = c_compiler() else {
        eprintln!("no C compiler found; C link check not run");
        return;
    };
    let deps = std::env::current_exe()
        .unwrap()
        .parent()
        .unwrap()
        .to_path_buf();
    let lib = deps.join("libstarfree_ffi.a");
    assert!(lib.exists(), "{} missing", lib.display());
    let dir = tempfile::tempdir().unwrap();
    let source = dir.path().join("smoke.c");
    std::fs::write(
        &source,
        r#"
#include <stdio.h>
#include "starfree.h"
int main(void) {
    StarfreeGroup *g = NULL;
    size_t s = 0;
    if (starfree_group_from_catalog("A5", false, &g) != STARFREE_STATUS_OK) return 10;
    if (starfree_strong_star_number(g, &s) != STARFREE_STATUS_OK) return 11;
    starfree_group_free(g);
    if (starfree_group_from_catalog("nope", false, &g) != STARFREE_STATUS_UNKNOWN_NAME) return 12;
    if (starfree_last_error() == NULL) return 13;
    printf("%zu\n", s);
    return 0;
}
"#,
    )
    .unwrap();
    let exe = dir.path().join("smoke");
    let include = Path::new(env!("CARGO_MANIFEST_DIR")).join("include");
    let status = Command::new(cc)
        .arg(&source)
        .arg("-I")
        .arg(&include)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success(), "C compilation failed");
    let run = Command::new(&exe)
        .env_remove("STARFREE_CATALOG_DIR")
        .output()
        .unwrap();
    assert_eq!(run.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&run.stdout), "4\n");
}
