//! Reference values transcribed by a parsing script; regenerate rather than edit.
//!
//! Tables are indexed `[row][col]` with both axes in ascending global-label
//! order, i.e. digit pairs `(-1,-1), (0,-1), (1,-1), (-1,0), ...`.
#![allow(dead_code)]

use num_complex::Complex64;

pub const TOL: f64 = 5e-4;

const fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub const TABLE1_WL_OF_GLOBAL_MOMENTUM: [[Complex64; 9]; 9] = [
    [
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
    ],
    [
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
    ],
    [
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
    ],
    [
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
    ],
    [
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
    ],
    [
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
    ],
    [
        c(0.4491, 0.0),
        c(-0.2931, 0.0),
        c(0.4491, 0.0),
        c(0.4491, 0.0),
        c(-0.2931, 0.0),
        c(0.4491, 0.0),
        c(0.4491, 0.0),
        c(-0.2931, 0.0),
        c(0.4491, 0.0),
    ],
    [
        c(-0.2931, 0.0),
        c(0.844, 0.0),
        c(-0.2931, 0.0),
        c(-0.2931, 0.0),
        c(0.844, 0.0),
        c(-0.2931, 0.0),
        c(-0.2931, 0.0),
        c(0.844, 0.0),
        c(-0.2931, 0.0),
    ],
    [
        c(0.844, 0.0),
        c(0.4491, 0.0),
        c(0.844, 0.0),
        c(0.844, 0.0),
        c(0.4491, 0.0),
        c(0.844, 0.0),
        c(0.844, 0.0),
        c(0.4491, 0.0),
        c(0.844, 0.0),
    ],
];

pub const TABLE2_WG_OF_LOCAL_MOMENTUM: [[Complex64; 9]; 9] = [
    [
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
    ],
    [
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
    ],
    [
        c(-0.2931, 0.0),
        c(0.844, 0.0),
        c(-0.2931, 0.0),
        c(-0.2931, 0.0),
        c(0.844, 0.0),
        c(-0.2931, 0.0),
        c(-0.2931, 0.0),
        c(0.844, 0.0),
        c(-0.2931, 0.0),
    ],
    [
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
    ],
    [
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
    ],
    [
        c(0.4491, 0.0),
        c(-0.2931, 0.0),
        c(0.4491, 0.0),
        c(0.4491, 0.0),
        c(-0.2931, 0.0),
        c(0.4491, 0.0),
        c(0.4491, 0.0),
        c(-0.2931, 0.0),
        c(0.4491, 0.0),
    ],
    [
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
    ],
    [
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
    ],
    [
        c(0.844, 0.0),
        c(0.4491, 0.0),
        c(0.844, 0.0),
        c(0.844, 0.0),
        c(0.4491, 0.0),
        c(0.844, 0.0),
        c(0.844, 0.0),
        c(0.4491, 0.0),
        c(0.844, 0.0),
    ],
];

pub const TABLE3_WIGNER_LOCAL: [[Complex64; 9]; 9] = [
    [
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(-0.1227, 0.0),
        c(0.128, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0106, 0.0),
        c(0.0, 0.0),
    ],
    [
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(-0.1227, 0.0),
        c(0.128, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0106, 0.0),
        c(0.0, 0.0),
    ],
    [
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.9954, 0.0),
        c(0.994, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.9788, 0.0),
        c(0.0, 0.0),
    ],
    [
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(-0.1227, 0.0),
        c(0.128, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0106, 0.0),
        c(0.0, 0.0),
    ],
    [
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.9954, 0.0),
        c(0.994, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.9788, 0.0),
        c(0.0, 0.0),
    ],
    [
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(-0.1227, 0.0),
        c(0.128, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0106, 0.0),
        c(0.0, 0.0),
    ],
    [
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.9954, 0.0),
        c(0.994, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.9788, 0.0),
        c(0.0, 0.0),
    ],
    [
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(-0.1227, 0.0),
        c(0.128, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0106, 0.0),
        c(0.0, 0.0),
    ],
    [
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(-0.1227, 0.0),
        c(0.128, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0106, 0.0),
        c(0.0, 0.0),
    ],
];

pub const TABLE4_WEYL_LOCAL: [[Complex64; 9]; 9] = [
    [
        c(0.067, -0.0295),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(-0.125, 0.0722),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.067, -0.0295),
    ],
    [
        c(-0.059, 0.0432),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.125, -0.0722),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(-0.059, 0.0432),
    ],
    [
        c(-0.4921, -0.8523),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(-0.5, -0.866),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(-0.4921, -0.8523),
    ],
    [
        c(-0.0079, -0.0727),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.1443),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(-0.0079, -0.0727),
    ],
    [
        c(0.9841, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(1.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.9841, 0.0),
    ],
    [
        c(-0.0079, 0.0727),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, -0.1443),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(-0.0079, 0.0727),
    ],
    [
        c(-0.4921, 0.8523),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(-0.5, 0.866),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(-0.4921, 0.8523),
    ],
    [
        c(-0.059, -0.0432),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.125, 0.0722),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(-0.059, -0.0432),
    ],
    [
        c(0.067, 0.0295),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(-0.125, -0.0722),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.067, 0.0295),
    ],
];

pub const TABLE5_R_LOCAL: [[Complex64; 9]; 9] = [
    [
        c(-0.1042, 0.0),
        c(-0.0833, 0.0),
        c(-0.1852, 0.0),
        c(-0.0456, 0.0),
        c(-0.1389, 0.0),
        c(-0.1042, 0.0),
        c(-0.1389, 0.0),
        c(-0.1005, 0.0),
        c(-0.0833, 0.0),
    ],
    [
        c(-0.1042, 0.0),
        c(-0.0833, 0.0),
        c(-0.1852, 0.0),
        c(-0.0456, 0.0),
        c(-0.1389, 0.0),
        c(-0.1042, 0.0),
        c(-0.1389, 0.0),
        c(-0.1005, 0.0),
        c(-0.0833, 0.0),
    ],
    [
        c(-0.1042, 0.0),
        c(-0.0833, 0.0),
        c(0.9329, 0.0),
        c(0.8204, 0.0),
        c(-0.1389, 0.0),
        c(-0.1042, 0.0),
        c(-0.1389, 0.0),
        c(0.8677, 0.0),
        c(-0.0833, 0.0),
    ],
    [
        c(-0.1042, 0.0),
        c(-0.0833, 0.0),
        c(-0.1852, 0.0),
        c(-0.0456, 0.0),
        c(-0.1389, 0.0),
        c(-0.1042, 0.0),
        c(-0.1389, 0.0),
        c(-0.1005, 0.0),
        c(-0.0833, 0.0),
    ],
    [
        c(-0.1042, 0.0),
        c(-0.0833, 0.0),
        c(0.9329, 0.0),
        c(0.8204, 0.0),
        c(-0.1389, 0.0),
        c(-0.1042, 0.0),
        c(-0.1389, 0.0),
        c(0.8677, 0.0),
        c(-0.0833, 0.0),
    ],
    [
        c(-0.1042, 0.0),
        c(-0.0833, 0.0),
        c(-0.1852, 0.0),
        c(-0.0456, 0.0),
        c(-0.1389, 0.0),
        c(-0.1042, 0.0),
        c(-0.1389, 0.0),
        c(-0.1005, 0.0),
        c(-0.0833, 0.0),
    ],
    [
        c(-0.1042, 0.0),
        c(-0.0833, 0.0),
        c(0.9329, 0.0),
        c(0.8204, 0.0),
        c(-0.1389, 0.0),
        c(-0.1042, 0.0),
        c(-0.1389, 0.0),
        c(0.8677, 0.0),
        c(-0.0833, 0.0),
    ],
    [
        c(-0.1042, 0.0),
        c(-0.0833, 0.0),
        c(-0.1852, 0.0),
        c(-0.0456, 0.0),
        c(-0.1389, 0.0),
        c(-0.1042, 0.0),
        c(-0.1389, 0.0),
        c(-0.1005, 0.0),
        c(-0.0833, 0.0),
    ],
    [
        c(-0.1042, 0.0),
        c(-0.0833, 0.0),
        c(-0.1852, 0.0),
        c(-0.0456, 0.0),
        c(-0.1389, 0.0),
        c(-0.1042, 0.0),
        c(-0.1389, 0.0),
        c(-0.1005, 0.0),
        c(-0.0833, 0.0),
    ],
];

pub const TABLE6_RTILDE_LOCAL: [[Complex64; 9]; 9] = [
    [
        c(0.067, -0.0295),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(-0.1354, 0.0541),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.067, -0.0295),
    ],
    [
        c(-0.059, 0.0432),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(-0.059, 0.0432),
    ],
    [
        c(-0.4921, -0.8523),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(-0.4896, -0.848),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(-0.4921, -0.8523),
    ],
    [
        c(-0.0079, -0.0727),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(-0.0079, -0.0727),
    ],
    [
        c(0.9841, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.9841, 0.0),
    ],
    [
        c(-0.0079, 0.0727),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(-0.0079, 0.0727),
    ],
    [
        c(-0.4921, 0.8523),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(-0.4896, 0.848),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(-0.4921, 0.8523),
    ],
    [
        c(-0.059, -0.0432),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(-0.059, -0.0432),
    ],
    [
        c(0.067, 0.0295),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(-0.1354, -0.0541),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.067, 0.0295),
    ],
];

pub const TABLE7_WIGNER_GLOBAL: [[Complex64; 9]; 9] = [
    [
        c(0.1003, 0.0),
        c(0.0, 0.0),
        c(0.25, 0.0),
        c(0.4167, 0.0),
        c(0.0, 0.0),
        c(0.1294, 0.0),
        c(0.0, 0.0),
        c(-0.2732, 0.0),
        c(0.0, 0.0),
    ],
    [
        c(-0.2887, 0.0),
        c(0.0, 0.0),
        c(0.25, 0.0),
        c(0.4167, 0.0),
        c(0.0, 0.0),
        c(-0.3727, 0.0),
        c(0.0, 0.0),
        c(0.0106, 0.0),
        c(0.0, 0.0),
    ],
    [
        c(0.4423, 0.0),
        c(0.0, 0.0),
        c(0.25, 0.0),
        c(0.4167, 0.0),
        c(0.0, 0.0),
        c(0.571, 0.0),
        c(0.0, 0.0),
        c(0.4454, 0.0),
        c(0.0, 0.0),
    ],
    [
        c(-0.5425, 0.0),
        c(0.0, 0.0),
        c(0.25, 0.0),
        c(0.4167, 0.0),
        c(0.0, 0.0),
        c(-0.7004, 0.0),
        c(0.0, 0.0),
        c(0.8278, 0.0),
        c(0.0, 0.0),
    ],
    [
        c(0.5774, 0.0),
        c(0.0, 0.0),
        c(0.25, 0.0),
        c(0.4167, 0.0),
        c(0.0, 0.0),
        c(0.7454, 0.0),
        c(0.0, 0.0),
        c(0.9788, 0.0),
        c(0.0, 0.0),
    ],
    [
        c(-0.5425, 0.0),
        c(0.0, 0.0),
        c(0.25, 0.0),
        c(0.4167, 0.0),
        c(0.0, 0.0),
        c(-0.7004, 0.0),
        c(0.0, 0.0),
        c(0.8278, 0.0),
        c(0.0, 0.0),
    ],
    [
        c(0.4423, 0.0),
        c(0.0, 0.0),
        c(0.25, 0.0),
        c(0.4167, 0.0),
        c(0.0, 0.0),
        c(0.571, 0.0),
        c(0.0, 0.0),
        c(0.4454, 0.0),
        c(0.0, 0.0),
    ],
    [
        c(-0.2887, 0.0),
        c(0.0, 0.0),
        c(0.25, 0.0),
        c(0.4167, 0.0),
        c(0.0, 0.0),
        c(-0.3727, 0.0),
        c(0.0, 0.0),
        c(0.0106, 0.0),
        c(0.0, 0.0),
    ],
    [
        c(0.1003, 0.0),
        c(0.0, 0.0),
        c(0.25, 0.0),
        c(0.4167, 0.0),
        c(0.0, 0.0),
        c(0.1294, 0.0),
        c(0.0, 0.0),
        c(-0.2732, 0.0),
        c(0.0, 0.0),
    ],
];

pub const TABLE8_WEYL_GLOBAL: [[Complex64; 9]; 9] = [
    [
        c(-0.3001, -0.4118),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(-0.1614, -0.2795),
        c(-0.3667, -0.3069),
        c(-0.1614, -0.2795),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(-0.3001, -0.4118),
    ],
    [
        c(-0.3307, -0.0727),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.3227, 0.0),
        c(0.0, 0.1443),
        c(0.3227, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(-0.3307, -0.0727),
    ],
    [
        c(0.2859, -0.5526),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(-0.1614, 0.2795),
        c(-0.3292, 0.7845),
        c(-0.1614, 0.2795),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.2859, -0.5526),
    ],
    [
        c(0.0142, -0.1408),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(-0.1614, -0.2795),
        c(0.1959, 0.2254),
        c(-0.1614, -0.2795),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0142, -0.1408),
    ],
    [
        c(0.6614, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.3227, 0.0),
        c(1.0, 0.0),
        c(0.3227, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.6614, 0.0),
    ],
    [
        c(0.0142, 0.1408),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(-0.1614, 0.2795),
        c(0.1959, -0.2254),
        c(-0.1614, 0.2795),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0142, 0.1408),
    ],
    [
        c(0.2859, 0.5526),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(-0.1614, -0.2795),
        c(-0.3292, -0.7845),
        c(-0.1614, -0.2795),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.2859, 0.5526),
    ],
    [
        c(-0.3307, 0.0727),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.3227, 0.0),
        c(0.0, -0.1443),
        c(0.3227, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(-0.3307, 0.0727),
    ],
    [
        c(-0.3001, 0.4118),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(-0.1614, 0.2795),
        c(-0.3667, 0.3069),
        c(-0.1614, 0.2795),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(-0.3001, 0.4118),
    ],
];

pub const TABLE9_R_GLOBAL: [[Complex64; 9]; 9] = [
    [
        c(-0.0039, 0.0),
        c(-0.0833, 0.0),
        c(0.1875, 0.0),
        c(0.2431, 0.0),
        c(-0.1389, 0.0),
        c(0.0253, 0.0),
        c(-0.1389, 0.0),
        c(-0.3843, 0.0),
        c(-0.0833, 0.0),
    ],
    [
        c(-0.3928, 0.0),
        c(-0.0833, 0.0),
        c(0.1875, 0.0),
        c(0.2431, 0.0),
        c(-0.1389, 0.0),
        c(-0.4768, 0.0),
        c(-0.1389, 0.0),
        c(-0.1005, 0.0),
        c(-0.0833, 0.0),
    ],
    [
        c(0.3381, 0.0),
        c(-0.0833, 0.0),
        c(0.1875, 0.0),
        c(0.2431, 0.0),
        c(-0.1389, 0.0),
        c(0.4668, 0.0),
        c(-0.1389, 0.0),
        c(0.3343, 0.0),
        c(-0.0833, 0.0),
    ],
    [
        c(-0.6467, 0.0),
        c(-0.0833, 0.0),
        c(0.1875, 0.0),
        c(0.2431, 0.0),
        c(-0.1389, 0.0),
        c(-0.8046, 0.0),
        c(-0.1389, 0.0),
        c(0.7167, 0.0),
        c(-0.0833, 0.0),
    ],
    [
        c(0.4732, 0.0),
        c(-0.0833, 0.0),
        c(0.1875, 0.0),
        c(0.2431, 0.0),
        c(-0.1389, 0.0),
        c(0.6412, 0.0),
        c(-0.1389, 0.0),
        c(0.8677, 0.0),
        c(-0.0833, 0.0),
    ],
    [
        c(-0.6467, 0.0),
        c(-0.0833, 0.0),
        c(0.1875, 0.0),
        c(0.2431, 0.0),
        c(-0.1389, 0.0),
        c(-0.8046, 0.0),
        c(-0.1389, 0.0),
        c(0.7167, 0.0),
        c(-0.0833, 0.0),
    ],
    [
        c(0.3381, 0.0),
        c(-0.0833, 0.0),
        c(0.1875, 0.0),
        c(0.2431, 0.0),
        c(-0.1389, 0.0),
        c(0.4668, 0.0),
        c(-0.1389, 0.0),
        c(0.3343, 0.0),
        c(-0.0833, 0.0),
    ],
    [
        c(-0.3928, 0.0),
        c(-0.0833, 0.0),
        c(0.1875, 0.0),
        c(0.2431, 0.0),
        c(-0.1389, 0.0),
        c(-0.4768, 0.0),
        c(-0.1389, 0.0),
        c(-0.1005, 0.0),
        c(-0.0833, 0.0),
    ],
    [
        c(-0.0039, 0.0),
        c(-0.0833, 0.0),
        c(0.1875, 0.0),
        c(0.2431, 0.0),
        c(-0.1389, 0.0),
        c(0.0253, 0.0),
        c(-0.1389, 0.0),
        c(-0.3843, 0.0),
        c(-0.0833, 0.0),
    ],
];

pub const TABLE10_RTILDE_GLOBAL: [[Complex64; 9]; 9] = [
    [
        c(-0.3001, -0.4118),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(-0.1614, -0.2795),
        c(-0.3342, -0.3351),
        c(-0.1614, -0.2795),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(-0.3001, -0.4118),
    ],
    [
        c(-0.3307, -0.0727),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.3227, 0.0),
        c(0.0, 0.0),
        c(0.3227, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(-0.3307, -0.0727),
    ],
    [
        c(0.2859, -0.5526),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(-0.1614, 0.2795),
        c(-0.3735, 0.7316),
        c(-0.1614, 0.2795),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.2859, -0.5526),
    ],
    [
        c(0.0142, -0.1408),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(-0.1614, -0.2795),
        c(0.0827, 0.2729),
        c(-0.1614, -0.2795),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0142, -0.1408),
    ],
    [
        c(0.6614, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.3227, 0.0),
        c(0.0, 0.0),
        c(0.3227, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.6614, 0.0),
    ],
    [
        c(0.0142, 0.1408),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(-0.1614, 0.2795),
        c(0.0827, -0.2729),
        c(-0.1614, 0.2795),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.0142, 0.1408),
    ],
    [
        c(0.2859, 0.5526),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(-0.1614, -0.2795),
        c(-0.3735, -0.7316),
        c(-0.1614, -0.2795),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.2859, 0.5526),
    ],
    [
        c(-0.3307, 0.0727),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(0.3227, 0.0),
        c(0.0, 0.0),
        c(0.3227, 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(-0.3307, 0.0727),
    ],
    [
        c(-0.3001, 0.4118),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(-0.1614, 0.2795),
        c(-0.3342, 0.3351),
        c(-0.1614, 0.2795),
        c(0.0, 0.0),
        c(0.0, 0.0),
        c(-0.3001, 0.4118),
    ],
];

/// Rows `delta_0`, columns `delta_1`.
pub const CORRELATOR_X: [[f64; 3]; 3] = [
    [-0.1042, 0.2431, -0.1389],
    [-0.0833, -0.1389, 0.2222],
    [0.1875, -0.1042, -0.0833],
];

/// Rows `gamma_0`, columns `gamma_1`.
pub const CORRELATOR_PL: [[f64; 3]; 3] = [
    [-0.1093, -0.1093, 0.2187],
    [-0.1093, 0.2187, -0.1093],
    [0.2187, -0.1093, -0.1093],
];

/// Ascending global label.
pub const CORRELATOR_PG: [f64; 9] = [
    -0.0419, -0.1093, 0.125, -0.0832, 0.2187, -0.0832, 0.125, -0.1093, -0.0419,
];

/// `(a, b)` in row-major order over `a, b in {-1, 0, 1}`.
pub const LAMBDA_1: [Complex64; 9] = [
    c(-0.2337, -0.3556),
    c(0.0259, -0.1315),
    c(0.3254, 0.4898),
    c(0.116, 0.043),
    c(0.2836, -0.0628),
    c(-0.309, 0.1367),
    c(0.0671, 0.0943),
    c(-0.3539, -0.0845),
    c(0.3014, -0.0675),
];

/// `(a, b)` in row-major order over `a, b in {-1, 0, 1}`.
pub const LAMBDA_2: [Complex64; 9] = [
    c(-0.2911, -0.7197),
    c(-0.1491, -0.2668),
    c(0.1502, -0.0831),
    c(0.37, -0.0854),
    c(0.1218, 0.1319),
    c(-0.2208, -0.0247),
    c(0.0872, -0.1268),
    c(-0.0032, 0.091),
    c(-0.034, -0.1243),
];

pub const EXPECTATIONS: [(&str, f64); 8] = [
    ("X_1", -0.1667),
    ("1_X", 0.0833),
    ("X_X", -0.25),
    ("XG", 0.0833),
    ("P_1", 0.0),
    ("1_P", 0.0),
    ("P_P", -0.6561),
    ("PG", 0.0),
];
