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

//! Catalog files compiled into the library.

pub(crate) const SHA256SUMS: &str = include_str!("../../catalog/v1/SHA256SUMS");

pub(crate) const FILES: &[(usize, &str, &str)] = &[
    (
        1,
        "order_001.json",
        include_str!("../../catalog/v1/order_001.json"),
    ),
    (
        2,
        "order_002.json",
        include_str!("../../catalog/v1/order_002.json"),
    ),
    (
        3,
        "order_003.json",
        include_str!("../../catalog/v1/order_003.json"),
    ),
    (
        4,
        "order_004.json",
        include_str!("../../catalog/v1/order_004.json"),
    ),
    (
        5,
        "order_005.json",
        include_str!("../../catalog/v1/order_005.json"),
    ),
    (
        6,
        "order_006.json",
        include_str!("../../catalog/v1/order_006.json"),
    ),
    (
        7,
        "order_007.json",
        include_str!("../../catalog/v1/order_007.json"),
    ),
    (
        8,
        "order_008.json",
        include_str!("../../catalog/v1/order_008.json"),
    ),
    (
        9,
        "order_009.json",
        include_str!("../../catalog/v1/order_009.json"),
    ),
    (
        10,
        "order_010.json",
        include_str!("../../catalog/v1/order_010.json"),
    ),
    (
        11,
        "order_011.json",
        include_str!("../../catalog/v1/order_011.json"),
    ),
    (
        12,
        "order_012.json",
        include_str!("../../catalog/v1/order_012.json"),
    ),
    (
        13,
        "order_013.json",
        include_str!("../../catalog/v1/order_013.json"),
    ),
    (
        14,
        "order_014.json",
        include_str!("../../catalog/v1/order_014.json"),
    ),
    (
        15,
        "order_015.json",
        include_str!("../../catalog/v1/order_015.json"),
    ),
    (
        16,
        "order_016.json",
        include_str!("../../catalog/v1/order_016.json"),
    ),
    (
        17,
        "order_017.json",
        include_str!("../../catalog/v1/order_017.json"),
    ),
    (
        18,
        "order_018.json",
        include_str!("../../catalog/v1/order_018.json"),
    ),
    (
        19,
        "order_019.json",
        include_str!("../../catalog/v1/order_019.json"),
    ),
    (
        20,
        "order_020.json",
        include_str!("../../catalog/v1/order_020.json"),
    ),
    (
        21,
        "order_021.json",
        include_str!("../../catalog/v1/order_021.json"),
    ),
    (
        22,
        "order_022.json",
        include_str!("../../catalog/v1/order_022.json"),
    ),
    (
        23,
        "order_023.json",
        include_str!("../../catalog/v1/order_023.json"),
    ),
    (
        24,
        "order_024.json",
        include_str!("../../catalog/v1/order_024.json"),
    ),
    (
        25,
        "order_025.json",
        include_str!("../../catalog/v1/order_025.json"),
    ),
    (
        26,
        "order_026.json",
        include_str!("../../catalog/v1/order_026.json"),
    ),
    (
        27,
        "order_027.json",
        include_str!("../../catalog/v1/order_027.json"),
    ),
    (
        28,
        "order_028.json",
        include_str!("../../catalog/v1/order_028.json"),
    ),
    (
        29,
        "order_029.json",
        include_str!("../../catalog/v1/order_029.json"),
    ),
    (
        30,
        "order_030.json",
        include_str!("../../catalog/v1/order_030.json"),
    ),
    (
        31,
        "order_031.json",
        include_str!("../../catalog/v1/order_031.json"),
    ),
    (
        32,
        "order_032.json",
        include_str!("../../catalog/v1/order_032.json"),
    ),
    (
        50,
        "order_050.json",
        include_str!("../../catalog/v1/order_050.json"),
    ),
    (
        60,
        "order_060.json",
        include_str!("../../catalog/v1/order_060.json"),
    ),
];
