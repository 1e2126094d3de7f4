// Printed generator matrices, transcribed entry by entry. Entries use the
// library's parser syntax; `Display::rows` is row-major as printed.
#![allow(dead_code)]

pub struct Display {
    pub n: usize,
    pub label: &'static str,
    pub rows: &'static [&'static [&'static str]],
}

const fn d(n: usize, label: &'static str, rows: &'static [&'static [&'static str]]) -> Display {
    Display { n, label, rows }
}

/// Extended Gassner representation, spot matrices for n = 2..5.
pub const RHO_G: &[Display] = &[
    d(2, "eps(1,2)", &[&["t2^-1", "t2^-1 (t1 - 1)"], &["0", "1"]]),
    d(2, "eps(2,1)", &[&["1", "0"], &["t1^-1 (t2 - 1)", "t1^-1"]]),
    d(
        3,
        "eps(1,3)",
        &[
            &["t3^-1", "0", "t3^-1 (t1 - 1)"],
            &["0", "1", "0"],
            &["0", "0", "1"],
        ],
    ),
    d(
        3,
        "eps(2,3)",
        &[
            &["1", "0", "0"],
            &["0", "t3^-1", "t3^-1 (t2 - 1)"],
            &["0", "0", "1"],
        ],
    ),
    d(
        3,
        "eps(3,2)",
        &[
            &["1", "0", "0"],
            &["0", "1", "0"],
            &["0", "t2^-1 (t3 - 1)", "t2^-1"],
        ],
    ),
    d(
        3,
        "eps(3,1)",
        &[
            &["1", "0", "0"],
            &["0", "1", "0"],
            &["t1^-1 (t3 - 1)", "0", "t1^-1"],
        ],
    ),
    d(
        4,
        "eps(2,4)",
        &[
            &["1", "0", "0", "0"],
            &["0", "t4^-1", "0", "t4^-1 (t2 - 1)"],
            &["0", "0", "1", "0"],
            &["0", "0", "0", "1"],
        ],
    ),
    d(
        4,
        "eps(4,1)",
        &[
            &["1", "0", "0", "0"],
            &["0", "1", "0", "0"],
            &["0", "0", "1", "0"],
            &["t1^-1 (t4 - 1)", "0", "0", "t1^-1"],
        ],
    ),
    d(
        4,
        "eps(3,2)",
        &[
            &["1", "0", "0", "0"],
            &["0", "1", "0", "0"],
            &["0", "t2^-1 (t3 - 1)", "t2^-1", "0"],
            &["0", "0", "0", "1"],
        ],
    ),
    d(
        5,
        "eps(2,5)",
        &[
            &["1", "0", "0", "0", "0"],
            &["0", "t5^-1", "0", "0", "t5^-1 (t2 - 1)"],
            &["0", "0", "1", "0", "0"],
            &["0", "0", "0", "1", "0"],
            &["0", "0", "0", "0", "1"],
        ],
    ),
    d(
        5,
        "eps(5,3)",
        &[
            &["1", "0", "0", "0", "0"],
            &["0", "1", "0", "0", "0"],
            &["0", "0", "1", "0", "0"],
            &["0", "0", "0", "1", "0"],
            &["0", "0", "t3^-1 (t5 - 1)", "0", "t3^-1"],
        ],
    ),
];

/// Extended Burau representation, n = 3, 4.
pub const RHO_B: &[Display] = &[
    d(
        3,
        "eps(1,2)",
        &[
            &["t^-1", "1 - t^-1", "0"],
            &["0", "1", "0"],
            &["0", "0", "1"],
        ],
    ),
    d(
        3,
        "eps(3,1)",
        &[
            &["1", "0", "0"],
            &["0", "1", "0"],
            &["1 - t^-1", "0", "t^-1"],
        ],
    ),
    d(
        3,
        "eps(2,3)",
        &[
            &["1", "0", "0"],
            &["0", "t^-1", "1 - t^-1"],
            &["0", "0", "1"],
        ],
    ),
    d(
        3,
        "alpha(1)",
        &[&["0", "1", "0"], &["1", "0", "0"], &["0", "0", "1"]],
    ),
    d(
        3,
        "alpha(2)",
        &[&["1", "0", "0"], &["0", "0", "1"], &["0", "1", "0"]],
    ),
    d(
        4,
        "eps(2,4)",
        &[
            &["1", "0", "0", "0"],
            &["0", "t^-1", "0", "1 - t^-1"],
            &["0", "0", "1", "0"],
            &["0", "0", "0", "1"],
        ],
    ),
    d(
        4,
        "eps(4,2)",
        &[
            &["1", "0", "0", "0"],
            &["0", "1", "0", "0"],
            &["0", "0", "1", "0"],
            &["0", "1 - t^-1", "0", "t^-1"],
        ],
    ),
    d(
        4,
        "alpha(3)",
        &[
            &["1", "0", "0", "0"],
            &["0", "1", "0", "0"],
            &["0", "0", "0", "1"],
            &["0", "0", "1", "0"],
        ],
    ),
];

/// Extended Gassner representation in the basis {e_1, .., e_{n-1}, v}.
pub const CONJ_G: &[Display] = &[
    d(
        3,
        "eps(1,2)",
        &[
            &["t2^-1", "0", "0"],
            &["t2^-1 (t1 - 1)", "1", "0"],
            &["0", "0", "1"],
        ],
    ),
    d(
        3,
        "eps(1,3)",
        &[&["t3^-1", "0", "0"], &["0", "1", "0"], &["0", "0", "1"]],
    ),
    d(
        3,
        "eps(2,1)",
        &[
            &["1", "t1^-1 (t2 - 1)", "0"],
            &["0", "t1^-1", "0"],
            &["0", "0", "1"],
        ],
    ),
    d(
        3,
        "eps(2,3)",
        &[&["1", "0", "0"], &["0", "t3^-1", "0"], &["0", "0", "1"]],
    ),
    d(
        3,
        "eps(3,1)",
        &[
            &["t1^-1", "-t1^-1 (t2 - 1)", "t1^-1"],
            &["0", "1", "0"],
            &["0", "0", "1"],
        ],
    ),
    d(
        3,
        "eps(3,2)",
        &[
            &["1", "0", "0"],
            &["-t2^-1 (t1 - 1)", "t2^-1", "t2^-1"],
            &["0", "0", "1"],
        ],
    ),
    d(
        4,
        "eps(1,3)",
        &[
            &["t3^-1", "0", "0", "0"],
            &["0", "1", "0", "0"],
            &["t3^-1 (t1 - 1)", "0", "1", "0"],
            &["0", "0", "0", "1"],
        ],
    ),
    d(
        4,
        "eps(3,2)",
        &[
            &["1", "0", "0", "0"],
            &["0", "1", "t2^-1 (t3 - 1)", "0"],
            &["0", "0", "t2^-1", "0"],
            &["0", "0", "0", "1"],
        ],
    ),
    d(
        4,
        "eps(2,4)",
        &[
            &["1", "0", "0", "0"],
            &["0", "t4^-1", "0", "0"],
            &["0", "0", "1", "0"],
            &["0", "0", "0", "1"],
        ],
    ),
    d(
        4,
        "eps(4,3)",
        &[
            &["1", "0", "0", "0"],
            &["0", "1", "0", "0"],
            &["-t3^-1 (t1 - 1)", "-t3^-1 (t2 - 1)", "t3^-1", "t3^-1"],
            &["0", "0", "0", "1"],
        ],
    ),
];

/// Extended Burau representation in the basis {e_1, .., e_{n-1}, v}.
pub const CONJ_B: &[Display] = &[
    d(
        3,
        "eps(1,2)",
        &[
            &["t^-1", "0", "0"],
            &["1 - t^-1", "1", "0"],
            &["0", "0", "1"],
        ],
    ),
    d(
        3,
        "eps(2,1)",
        &[
            &["1", "1 - t^-1", "0"],
            &["0", "t^-1", "0"],
            &["0", "0", "1"],
        ],
    ),
    d(
        3,
        "eps(3,1)",
        &[
            &["t^-1", "t^-1 - 1", "t^-1"],
            &["0", "1", "0"],
            &["0", "0", "1"],
        ],
    ),
    d(
        3,
        "eps(3,2)",
        &[
            &["1", "0", "0"],
            &["t^-1 - 1", "t^-1", "t^-1"],
            &["0", "0", "1"],
        ],
    ),
    d(
        3,
        "alpha(1)",
        &[&["0", "1", "0"], &["1", "0", "0"], &["0", "0", "1"]],
    ),
    d(
        3,
        "alpha(2)",
        &[&["1", "0", "0"], &["-1", "-1", "1"], &["0", "0", "1"]],
    ),
    d(
        4,
        "eps(4,2)",
        &[
            &["1", "0", "0", "0"],
            &["t^-1 - 1", "t^-1", "t^-1 - 1", "t^-1"],
            &["0", "0", "1", "0"],
            &["0", "0", "0", "1"],
        ],
    ),
    d(
        4,
        "alpha(2)",
        &[
            &["1", "0", "0", "0"],
            &["0", "0", "1", "0"],
            &["0", "1", "0", "0"],
            &["0", "0", "0", "1"],
        ],
    ),
    d(
        4,
        "alpha(3)",
        &[
            &["1", "0", "0", "0"],
            &["0", "1", "0", "0"],
            &["-1", "-1", "-1", "1"],
            &["0", "0", "0", "1"],
        ],
    ),
];

/// Entries of `CONJ_B` (n, label, row, col; 0-based) whose printed value
/// differs from the exact change of basis. The printed v-coordinate of
/// `eps(n,j)(e_j)` is `t^-1`, carried over from the Gassner case without
/// rescaling by `v_G = (t - 1) v_B`; exactly it is `1 - t^-1`. These entries
/// lie in the last column, which the composition factor discards.
pub const CONJ_B_MISPRINTS: &[(usize, &str, usize, usize)] = &[
    (3, "eps(3,1)", 0, 2),
    (3, "eps(3,2)", 1, 2),
    (4, "eps(4,2)", 1, 3),
];

/// Degree n-1 factor of the extended Gassner representation.
pub const PHI_G: &[Display] = &[
    d(3, "eps(1,2)", &[&["t2^-1", "0"], &["t2^-1 (t1 - 1)", "1"]]),
    d(3, "eps(2,1)", &[&["1", "t1^-1 (t2 - 1)"], &["0", "t1^-1"]]),
    d(3, "eps(1,3)", &[&["t3^-1", "0"], &["0", "1"]]),
    d(3, "eps(3,1)", &[&["t1^-1", "-t1^-1 (t2 - 1)"], &["0", "1"]]),
    d(3, "eps(3,2)", &[&["1", "0"], &["-t2^-1 (t1 - 1)", "t2^-1"]]),
    d(3, "eps(2,3)", &[&["1", "0"], &["0", "t3^-1"]]),
    d(
        4,
        "eps(4,3)",
        &[
            &["1", "0", "0"],
            &["0", "1", "0"],
            &["-t3^-1 (t1 - 1)", "-t3^-1 (t2 - 1)", "t3^-1"],
        ],
    ),
    d(
        4,
        "eps(1,3)",
        &[
            &["t3^-1", "0", "0"],
            &["0", "1", "0"],
            &["t3^-1 (t1 - 1)", "0", "1"],
        ],
    ),
    d(
        4,
        "eps(3,2)",
        &[
            &["1", "0", "0"],
            &["0", "1", "t2^-1 (t3 - 1)"],
            &["0", "0", "t2^-1"],
        ],
    ),
    d(
        4,
        "eps(1,4)",
        &[&["t4^-1", "0", "0"], &["0", "1", "0"], &["0", "0", "1"]],
    ),
];

/// Degree n-1 factor of the extended Burau representation.
pub const PHI_B: &[Display] = &[
    d(3, "eps(1,2)", &[&["t^-1", "0"], &["1 - t^-1", "1"]]),
    d(3, "eps(2,1)", &[&["1", "1 - t^-1"], &["0", "t^-1"]]),
    d(3, "eps(1,3)", &[&["t^-1", "0"], &["0", "1"]]),
    d(3, "eps(3,1)", &[&["t^-1", "t^-1 - 1"], &["0", "1"]]),
    d(3, "eps(3,2)", &[&["1", "0"], &["t^-1 - 1", "t^-1"]]),
    d(3, "eps(2,3)", &[&["1", "0"], &["0", "t^-1"]]),
    d(3, "alpha(1)", &[&["0", "1"], &["1", "0"]]),
    d(3, "alpha(2)", &[&["1", "0"], &["-1", "-1"]]),
    d(
        4,
        "alpha(3)",
        &[&["1", "0", "0"], &["0", "1", "0"], &["-1", "-1", "-1"]],
    ),
    d(
        4,
        "eps(4,2)",
        &[
            &["1", "0", "0"],
            &["t^-1 - 1", "t^-1", "t^-1 - 1"],
            &["0", "0", "1"],
        ],
    ),
];

/// Tensor square of the Gassner factor at n = 3, variables t1..t3, m1..m3.
pub const TENSOR_G: &[Display] = &[
    d(
        3,
        "eps(1,2)",
        &[
            &["t2^-1 m2^-1", "0", "0", "0"],
            &["t2^-1 (t1 - 1) m2^-1", "m2^-1", "0", "0"],
            &["t2^-1 m2^-1 (m1 - 1)", "0", "t2^-1", "0"],
            &[
                "t2^-1 (t1 - 1) m2^-1 (m1 - 1)",
                "m2^-1 (m1 - 1)",
                "t2^-1 (t1 - 1)",
                "1",
            ],
        ],
    ),
    d(
        3,
        "eps(2,1)",
        &[
            &[
                "1",
                "t1^-1 (t2 - 1)",
                "m1^-1 (m2 - 1)",
                "t1^-1 (t2 - 1) m1^-1 (m2 - 1)",
            ],
            &["0", "t1^-1", "0", "t1^-1 m1^-1 (m2 - 1)"],
            &["0", "0", "m1^-1", "t1^-1 m1^-1 (t2 - 1)"],
            &["0", "0", "0", "t1^-1 m1^-1"],
        ],
    ),
    d(
        3,
        "eps(1,3)",
        &[
            &["t3^-1 m3^-1", "0", "0", "0"],
            &["0", "m3^-1", "0", "0"],
            &["0", "0", "t3^-1", "0"],
            &["0", "0", "0", "1"],
        ],
    ),
    d(
        3,
        "eps(3,1)",
        &[
            &[
                "t1^-1 m1^-1",
                "-t1^-1 (t2 - 1) m1^-1",
                "-t1^-1 m1^-1 (m2 - 1)",
                "t1^-1 (t2 - 1) m1^-1 (m2 - 1)",
            ],
            &["0", "m1^-1", "0", "-m1^-1 (m2 - 1)"],
            &["0", "0", "t1^-1", "-t1^-1 (t2 - 1)"],
            &["0", "0", "0", "1"],
        ],
    ),
    d(
        3,
        "eps(2,3)",
        &[
            &["1", "0", "0", "0"],
            &["0", "t3^-1", "0", "0"],
            &["0", "0", "m3^-1", "0"],
            &["0", "0", "0", "t3^-1 m3^-1"],
        ],
    ),
    d(
        3,
        "eps(3,2)",
        &[
            &["1", "0", "0", "0"],
            &["-t2^-1 (t1 - 1)", "t2^-1", "0", "0"],
            &["-m2^-1 (m1 - 1)", "0", "m2^-1", "0"],
            &[
                "t2^-1 (t1 - 1) m2^-1 (m1 - 1)",
                "-t2^-1 m2^-1 (m1 - 1)",
                "-t2^-1 (t1 - 1) m2^-1",
                "t2^-1 m2^-1",
            ],
        ],
    ),
];

/// Tensor square of the Burau factor at n = 3, variables t, m.
pub const TENSOR_B: &[Display] = &[
    d(
        3,
        "eps(1,2)",
        &[
            &["t^-1 m^-1", "0", "0", "0"],
            &["t^-1 (1 - m^-1)", "t^-1", "0", "0"],
            &["m^-1 (1 - t^-1)", "0", "m^-1", "0"],
            &["(1 - t^-1) (1 - m^-1)", "1 - t^-1", "1 - m^-1", "1"],
        ],
    ),
    d(
        3,
        "eps(2,1)",
        &[
            &["1", "1 - m^-1", "1 - t^-1", "(1 - t^-1) (1 - m^-1)"],
            &["0", "m^-1", "0", "m^-1 (1 - t^-1)"],
            &["0", "0", "t^-1", "t^-1 (1 - m^-1)"],
            &["0", "0", "0", "t^-1 m^-1"],
        ],
    ),
    d(
        3,
        "eps(1,3)",
        &[
            &["t^-1 m^-1", "0", "0", "0"],
            &["0", "t^-1", "0", "0"],
            &["0", "0", "m^-1", "0"],
            &["0", "0", "0", "1"],
        ],
    ),
    d(
        3,
        "eps(3,1)",
        &[
            &[
                "t^-1 m^-1",
                "t^-1 (m^-1 - 1)",
                "m^-1 (t^-1 - 1)",
                "(t^-1 - 1) (m^-1 - 1)",
            ],
            &["0", "t^-1", "0", "t^-1 - 1"],
            &["0", "0", "m^-1", "m^-1 - 1"],
            &["0", "0", "0", "1"],
        ],
    ),
    d(
        3,
        "eps(2,3)",
        &[
            &["1", "0", "0", "0"],
            &["0", "m^-1", "0", "0"],
            &["0", "0", "t^-1", "0"],
            &["0", "0", "0", "t^-1 m^-1"],
        ],
    ),
    d(
        3,
        "eps(3,2)",
        &[
            &["1", "0", "0", "0"],
            &["m^-1 - 1", "m^-1", "0", "0"],
            &["t^-1 - 1", "0", "t^-1", "0"],
            &[
                "(t^-1 - 1) (m^-1 - 1)",
                "m^-1 (t^-1 - 1)",
                "t^-1 (m^-1 - 1)",
                "t^-1 m^-1",
            ],
        ],
    ),
    d(
        3,
        "alpha(1)",
        &[
            &["0", "0", "0", "1"],
            &["0", "0", "1", "0"],
            &["0", "1", "0", "0"],
            &["1", "0", "0", "0"],
        ],
    ),
    d(
        3,
        "alpha(2)",
        &[
            &["1", "0", "0", "0"],
            &["-1", "-1", "0", "0"],
            &["-1", "0", "-1", "0"],
            &["1", "1", "1", "1"],
        ],
    ),
];

/// A printed action `g(b) = c1 e_1 + c23 (e_2 + e_3) + c4 e_4` on the
/// invariant subspace S₁ = <e_1, e_2 + e_3, e_4>, at equal parameters.
pub struct S1Identity {
    pub label: &'static str,
    /// "e1", "e2+e3" or "e4"
    pub basis: &'static str,
    pub coeffs: [&'static str; 3],
}

const fn s1(label: &'static str, basis: &'static str, coeffs: [&'static str; 3]) -> S1Identity {
    S1Identity {
        label,
        basis,
        coeffs,
    }
}

/// Gassner tensor square at t = m, over t1..t3 (as printed).
pub const S1_GASSNER: &[S1Identity] = &[
    s1(
        "eps(1,2)",
        "e1",
        ["t2^-2", "t2^-2 (t1 - 1)", "t2^-2 (t1 - 1)^2"],
    ),
    s1("eps(2,1)", "e1", ["1", "0", "0"]),
    s1("eps(1,3)", "e1", ["t3^-2", "0", "0"]),
    s1("eps(3,1)", "e1", ["t1^-2", "0", "0"]),
    s1("eps(2,3)", "e1", ["1", "0", "0"]),
    s1(
        "eps(3,2)",
        "e1",
        ["1", "-t2^-1 (t1 - 1)", "(t1 - 1)^2 t2^-2"],
    ),
    s1("eps(1,2)", "e2+e3", ["0", "t2^-1", "2 t2^-1 (t1 - 1)"]),
    s1("eps(2,1)", "e2+e3", ["2 t1^-1 (t2 - 1)", "t1^-1", "0"]),
    s1("eps(1,3)", "e2+e3", ["0", "t3^-1", "0"]),
    s1("eps(3,1)", "e2+e3", ["-2 t1^-1 (t2 - 1)", "t1^-1", "0"]),
    s1("eps(2,3)", "e2+e3", ["0", "t3^-1", "0"]),
    s1("eps(3,2)", "e2+e3", ["0", "t2^-1", "-t2^-2 (t1 - 1)^2"]),
    s1("eps(1,2)", "e4", ["0", "0", "1"]),
    s1(
        "eps(2,1)",
        "e4",
        ["t1^-2 (t2 - 1)^2", "t1^-2 (t2 - 1)", "t1^-2"],
    ),
    s1("eps(1,3)", "e4", ["0", "0", "1"]),
    s1(
        "eps(3,1)",
        "e4",
        ["t1^-2 (t2 - 1)^2", "-t1^-1 (t2 - 1)", "1"],
    ),
    s1("eps(2,3)", "e4", ["0", "0", "t3^-2"]),
    s1("eps(3,2)", "e4", ["0", "0", "t2^-2"]),
];

/// Burau tensor square at t = m, over t (as printed).
pub const S1_BURAU: &[S1Identity] = &[
    s1(
        "eps(1,2)",
        "e1",
        ["t^-2", "t^-1 (1 - t^-1)", "(1 - t^-1)^2"],
    ),
    s1("eps(2,1)", "e1", ["1", "0", "0"]),
    s1("eps(1,3)", "e1", ["1", "0", "0"]),
    s1("eps(3,1)", "e1", ["t^-2", "0", "0"]),
    s1("eps(2,3)", "e1", ["1", "0", "0"]),
    s1("eps(3,2)", "e1", ["1", "t^-1 - 1", "(t^-1 - 1)^2"]),
    s1("eps(1,2)", "e2+e3", ["0", "t^-1", "2 (1 - t^-1)"]),
    s1("eps(2,1)", "e2+e3", ["2 (1 - t^-1)", "t^-1", "0"]),
    s1("eps(1,3)", "e2+e3", ["0", "t^-1", "0"]),
    s1("eps(3,1)", "e2+e3", ["2 t^-1 (1 - t^-1)", "t^-1", "0"]),
    s1("eps(2,3)", "e2+e3", ["0", "t^-1", "0"]),
    s1("eps(3,2)", "e2+e3", ["0", "t^-1", "t^-1 (t^-1 - 1)"]),
    s1("eps(1,2)", "e4", ["0", "0", "1"]),
    s1(
        "eps(2,1)",
        "e4",
        ["(1 - t^-1)^2", "t^-1 (1 - t^-1)", "t^-2"],
    ),
    s1("eps(1,3)", "e4", ["0", "0", "t^-2"]),
    s1("eps(3,1)", "e4", ["(t^-1 - 1)^2", "t^-1 - 1", "1"]),
    s1("eps(2,3)", "e4", ["0", "0", "t^-2"]),
    s1("eps(3,2)", "e4", ["0", "0", "t^-2"]),
];

/// Printed identities whose coefficients disagree with the exact product
/// (membership in S₁ still holds). Keyed by (label, basis).
pub const S1_GASSNER_MISPRINTS: &[(&str, &str)] = &[("eps(3,1)", "e2+e3"), ("eps(3,2)", "e2+e3")];
pub const S1_BURAU_MISPRINTS: &[(&str, &str)] = &[
    ("eps(1,3)", "e1"),
    ("eps(3,1)", "e2+e3"),
    ("eps(3,2)", "e2+e3"),
    ("eps(1,3)", "e4"),
];
