//! The ten basis matrices in the 4-D spinor and 5-D versor representations,
//! the versor matrices `P_A`, and the printed bracket tables.

use adskit_core::{Matrix, Scalar};

pub const NAMES: [&str; 10] = ["T", "X", "Y", "Z", "A", "B", "C", "I", "J", "K"];
pub const VERSOR_NAMES: [&str; 5] = ["Pl", "Pt", "Px", "Py", "Pz"];

/// Index of a symbol among the ten basis names, or among the fifteen
/// so(3,3) names (versors first) when `extended` is set.
pub fn symbol_index(name: &str, extended: bool) -> Option<usize> {
    if extended {
        if let Some(p) = VERSOR_NAMES.iter().position(|&n| n == name) {
            return Some(p);
        }
        NAMES.iter().position(|&n| n == name).map(|p| p + 5)
    } else {
        NAMES.iter().position(|&n| n == name)
    }
}

/// Compact generators square to `-1/4` in the spinor representation.
pub fn is_compact(i: usize) -> bool {
    matches!(i, 0 | 7 | 8 | 9)
}

const SPINOR: [[[i64; 4]; 4]; 10] = [
    [[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]],
    [[0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0], [1, 0, 0, 0]],
    [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1]],
    [[0, 0, -1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, 1, 0, 0]],
    [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, -1, 0]],
    [[0, 0, -1, 0], [0, 0, 0, -1], [-1, 0, 0, 0], [0, -1, 0, 0]],
    [[-1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, -1]],
    [[0, 0, 1, 0], [0, 0, 0, -1], [-1, 0, 0, 0], [0, 1, 0, 0]],
    [[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]],
    [[0, 0, 0, 1], [0, 0, 1, 0], [0, -1, 0, 0], [-1, 0, 0, 0]],
];

const VERSOR_P: [[[i64; 4]; 4]; 5] = [
    [[0, 0, 0, 1], [0, 0, -1, 0], [0, 1, 0, 0], [-1, 0, 0, 0]],
    [[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]],
    [[-1, 0, 0, 0], [0, 1, 0, 0], [0, 0, -1, 0], [0, 0, 0, 1]],
    [[0, 0, 0, 1], [0, 0, -1, 0], [0, -1, 0, 0], [1, 0, 0, 0]],
    [[0, -1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, -1], [0, 0, -1, 0]],
];

/// Nonzero entries `(row, col, value)` of the 5-D matrices.
const VERSOR_REP: [[(usize, usize, i64); 2]; 10] = [
    [(0, 1, -1), (1, 0, 1)],
    [(0, 2, 1), (2, 0, 1)],
    [(0, 3, 1), (3, 0, 1)],
    [(0, 4, 1), (4, 0, 1)],
    [(1, 2, 1), (2, 1, 1)],
    [(1, 3, 1), (3, 1, 1)],
    [(1, 4, 1), (4, 1, 1)],
    [(3, 4, -1), (4, 3, 1)],
    [(2, 4, 1), (4, 2, -1)],
    [(2, 3, -1), (3, 2, 1)],
];

fn half_matrix(rows: &[[i64; 4]; 4]) -> Matrix {
    Matrix::from_fn(4, 4, |r, c| Scalar::frac(rows[r][c], 2))
}

pub fn spinor_matrix(i: usize) -> Matrix {
    half_matrix(&SPINOR[i])
}

pub fn spinor_matrices() -> Vec<Matrix> {
    (0..10).map(spinor_matrix).collect()
}

pub fn versor_matrix(i: usize) -> Matrix {
    let mut m = Matrix::zeros(5, 5);
    for &(r, c, v) in &VERSOR_REP[i] {
        m.set(r, c, Scalar::int(v));
    }
    m
}

pub fn versor_matrices() -> Vec<Matrix> {
    (0..10).map(versor_matrix).collect()
}

/// `P_λ, P_t, P_x, P_y, P_z` as 4×4 matrices.
pub fn p_matrix(a: usize) -> Matrix {
    half_matrix(&VERSOR_P[a])
}

pub fn p_matrices() -> Vec<Matrix> {
    (0..5).map(p_matrix).collect()
}

/// The printed symplectic matrix.
pub fn omega() -> Matrix {
    Matrix::from_fn(4, 4, |r, c| Scalar::int([[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]][r][c]))
}

/// Invariant form of the 5-D representation.
pub fn omega5() -> Matrix {
    Matrix::from_fn(5, 5, |r, c| if r != c { Scalar::zero() } else if r < 2 { Scalar::one() } else { Scalar::int(-1) })
}

/// Bracket table in natural units, row `[row, column]`.
pub const BRACKET_TABLE: [[&str; 10]; 10] = [
    ["0", "A", "B", "C", "-X", "-Y", "-Z", "0", "0", "0"],
    ["-A", "0", "-K", "J", "-T", "0", "0", "0", "Z", "-Y"],
    ["-B", "K", "0", "-I", "0", "-T", "0", "-Z", "0", "X"],
    ["-C", "-J", "I", "0", "0", "0", "-T", "Y", "-X", "0"],
    ["X", "T", "0", "0", "0", "-K", "J", "0", "C", "-B"],
    ["Y", "0", "T", "0", "K", "0", "-I", "-C", "0", "A"],
    ["Z", "0", "0", "T", "-J", "I", "0", "B", "-A", "0"],
    ["0", "0", "Z", "-Y", "0", "C", "-B", "0", "K", "-J"],
    ["0", "-Z", "0", "X", "-C", "0", "A", "-K", "0", "I"],
    ["0", "Y", "-X", "0", "B", "-A", "0", "J", "-I", "0"],
];

/// The fifteen-element table over `P_λ..P_z, T..K`.
pub const SO33_TABLE: [[&str; 15]; 15] = [
    ["0", "T", "X", "Y", "Z", "-Pt", "-Px", "-Py", "-Pz", "0", "0", "0", "0", "0", "0"],
    ["-T", "0", "A", "B", "C", "Pl", "0", "0", "0", "-Px", "-Py", "-Pz", "0", "0", "0"],
    ["-X", "-A", "0", "-K", "J", "0", "-Pl", "0", "0", "-Pt", "0", "0", "0", "Pz", "-Py"],
    ["-Y", "-B", "K", "0", "-I", "0", "0", "-Pl", "0", "0", "-Pt", "0", "-Pz", "0", "Px"],
    ["-Z", "-C", "-J", "I", "0", "0", "0", "0", "-Pl", "0", "0", "-Pt", "Py", "-Px", "0"],
    ["Pt", "-Pl", "0", "0", "0", "0", "A", "B", "C", "-X", "-Y", "-Z", "0", "0", "0"],
    ["Px", "0", "Pl", "0", "0", "-A", "0", "-K", "J", "-T", "0", "0", "0", "Z", "-Y"],
    ["Py", "0", "0", "Pl", "0", "-B", "K", "0", "-I", "0", "-T", "0", "-Z", "0", "X"],
    ["Pz", "0", "0", "0", "Pl", "-C", "-J", "I", "0", "0", "0", "-T", "Y", "-X", "0"],
    ["0", "Px", "Pt", "0", "0", "X", "T", "0", "0", "0", "-K", "J", "0", "C", "-B"],
    ["0", "Py", "0", "Pt", "0", "Y", "0", "T", "0", "K", "0", "-I", "-C", "0", "A"],
    ["0", "Pz", "0", "0", "Pt", "Z", "0", "0", "T", "-J", "I", "0", "B", "-A", "0"],
    ["0", "0", "0", "Pz", "-Py", "0", "0", "Z", "-Y", "0", "C", "-B", "0", "K", "-J"],
    ["0", "0", "-Pz", "0", "Px", "0", "-Z", "0", "X", "-C", "0", "A", "-K", "0", "I"],
    ["0", "0", "Py", "-Px", "0", "0", "Y", "-X", "0", "B", "-A", "0", "J", "-I", "0"],
];

/// Parses a table cell (`0`, `A`, `-Pz`) into `(sign, index)`.
pub fn parse_cell(cell: &str, extended: bool) -> Option<(i64, usize)> {
    if cell == "0" {
        return None;
    }
    let (sign, name) = match cell.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, cell),
    };
    let idx = symbol_index(name, extended).unwrap_or_else(|| panic!("unknown table symbol {cell:?}"));
    Some((sign, idx))
}

/// A printed table as a dense coefficient array `c[i][j][k]`.
pub fn printed_constants(extended: bool) -> Vec<Vec<Vec<i64>>> {
    let n = if extended { 15 } else { 10 };
    let mut out = vec![vec![vec![0; n]; n]; n];
    for i in 0..n {
        for j in 0..n {
            let cell = if extended { SO33_TABLE[i][j] } else { BRACKET_TABLE[i][j] };
            if let Some((s, k)) = parse_cell(cell, extended) {
                out[i][j][k] = s;
            }
        }
    }
    out
}

/// Renders `Σ c_k e_k` in table notation (`0`, `A`, `-X`, `2T-K`).
pub fn render_combination(coeffs: &[Scalar], names: &[&str]) -> String {
    let mut out = String::new();
    for (c, n) in coeffs.iter().zip(names) {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_real() && c.re() < &num_traits::Zero::zero();
        let mag = if neg { -c } else { c.clone() };
        if neg {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        if !mag.is_one() {
            if mag.is_real() {
                out.push_str(&mag.to_string());
            } else {
                out.push_str(&format!("({mag})"));
            }
        }
        out.push_str(n);
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

pub fn extended_names() -> Vec<&'static str> {
    VERSOR_NAMES.iter().chain(NAMES.iter()).copied().collect()
}
