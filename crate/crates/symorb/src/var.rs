//! Variable indices for the doubly-indexed ambient ring.

use std::fmt;

/// A variable of the ambient ring: either a main variable `x[row][col]`
/// (row >= 1, col >= 1) or a parameter `s[index]` (index >= 1).
///
/// The derived order is the canonical significance order used everywhere:
/// parameters before main variables, parameters by index, main variables by
/// row then column. Smaller in this order means more significant (earlier in
/// the list x1 > x2 > ... of a textbook monomial order).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VarIndex {
    /// Parameter `s[k]`, shared across rows.
    Param { index: u32 },
    /// Main variable `x[row][col]`.
    Main { row: u32, col: u32 },
}

impl VarIndex {
    pub fn main(row: u32, col: u32) -> Self {
        assert!(row >= 1 && col >= 1, "main variable indices are 1-based");
        VarIndex::Main { row, col }
    }

    pub fn param(index: u32) -> Self {
        assert!(index >= 1, "parameter indices are 1-based");
        VarIndex::Param { index }
    }

    pub fn is_main(&self) -> bool {
        matches!(self, VarIndex::Main { .. })
    }

    pub fn is_param(&self) -> bool {
        matches!(self, VarIndex::Param { .. })
    }

    pub fn row(&self) -> Option<u32> {
        match self {
            VarIndex::Main { row, .. } => Some(*row),
            VarIndex::Param { .. } => None,
        }
    }

    pub fn col(&self) -> Option<u32> {
        match self {
            VarIndex::Main { col, .. } => Some(*col),
            VarIndex::Param { .. } => None,
        }
    }
}

impl fmt::Display for VarIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VarIndex::Main { row, col } => write!(f, "x[{row}][{col}]"),
            VarIndex::Param { index } => write!(f, "s[{index}]"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order_params_first_then_rows_then_cols() {
        let mut v = vec![
            VarIndex::main(2, 1),
            VarIndex::main(1, 2),
            VarIndex::param(3),
            VarIndex::main(1, 1),
            VarIndex::param(1),
        ];
        v.sort();
        assert_eq!(
            v,
            vec![
                VarIndex::param(1),
                VarIndex::param(3),
                VarIndex::main(1, 1),
                VarIndex::main(1, 2),
                VarIndex::main(2, 1),
            ]
        );
    }

    #[test]
    fn display_forms() {
        assert_eq!(VarIndex::main(3, 2).to_string(), "x[3][2]");
        assert_eq!(VarIndex::param(7).to_string(), "s[7]");
    }
}
