//! Fixed ring corpus shared by the test suites and the CLI.

/// Single-factor rings, principal and not.
pub const RINGS: &[&str] = &[
    "Z/2",
    "Z/3",
    "Z/4",
    "Z/6",
    "Z/8",
    "Z/9",
    "Z/12",
    "Z/16",
    "Z/18",
    "Z/25",
    "Z/27",
    "Z/30",
    "Z/32",
    "Z/36",
    "Z/49",
    "Z/60",
    "Z/64",
    "Z/72",
    "Z/81",
    "Z/100",
    "Z/125",
    "GF(4)",
    "GF(8)",
    "GF(9)",
    "GF(2)[t]/(t^2)",
    "GF(2)[t]/(t^3)",
    "GF(2)[t]/(t^2+t)",
    "GF(2)[t]/(t^3+t+1)",
    "GF(2)[t]/(t^4+t^2)",
    "GF(3)[t]/(t^2)",
    "GF(3)[t]/(t^2+1)",
    "GF(3)[t]/(t^3-t)",
    "GF(4)[t]/(t^2)",
    "GF(5)[t]/(t^2)",
    "GF(2)[x,y]/(x,y)^2",
    "GF(3)[x,y]/(x,y)^2",
];

/// Two-factor products `R1 x R2` with carrier at most 512.
pub const PRODUCTS: &[(&str, &str)] = &[
    ("Z/2", "Z/3"),
    ("Z/4", "Z/9"),
    ("Z/8", "GF(2)[t]/(t^2)"),
    ("Z/2", "Z/2"),
    ("Z/4", "Z/4"),
    ("Z/8", "Z/8"),
    ("Z/3", "Z/27"),
    ("Z/16", "Z/9"),
    ("Z/6", "Z/10"),
    ("Z/12", "Z/5"),
    ("Z/25", "Z/4"),
    ("Z/32", "Z/3"),
    ("Z/64", "Z/2"),
    ("Z/49", "Z/7"),
    ("GF(4)", "Z/9"),
    ("GF(8)", "GF(2)[t]/(t^3)"),
    ("GF(9)", "Z/27"),
    ("GF(2)[t]/(t^2)", "GF(2)[t]/(t^2)"),
    ("GF(3)[t]/(t^2)", "Z/9"),
    ("GF(2)[t]/(t^2+t)", "Z/12"),
    ("GF(4)[t]/(t^2)", "Z/8"),
    ("Z/125", "Z/4"),
    ("GF(2)[t]/(t^4+t^2)", "Z/9"),
    ("Z/18", "Z/20"),
];

/// `R1 x R2` as a ring string.
pub fn product(pair: &(&str, &str)) -> String {
    format!("{} x {}", pair.0, pair.1)
}
