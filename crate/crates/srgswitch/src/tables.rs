//! The bundled switching tables. Each replays from a named 63- or 64-vertex
//! graph with 4-element GM sets.

use srgswitch_core::Transcript;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Table {
    /// From `sp3`, 2-rank 6 to 24.
    Table1,
    /// From `g-3`, 2-rank 8 to 26.
    Table2Left,
    /// From `g'-3`, 2-rank 8 to 26.
    Table2Right,
    /// From `g+3`, 2-rank 8 to 26.
    Table3Left,
    /// From `g'+3`, 2-rank 8 to 26.
    Table3Right,
    /// `Table3Left` with step 14 corrected to a valid GM set.
    Table3LeftErratum,
}

impl Table {
    pub const ALL: [Table; 6] = [
        Table::Table1,
        Table::Table2Left,
        Table::Table2Right,
        Table::Table3Left,
        Table::Table3Right,
        Table::Table3LeftErratum,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Table::Table1 => "table1",
            Table::Table2Left => "table2-left",
            Table::Table2Right => "table2-right",
            Table::Table3Left => "table3-left",
            Table::Table3Right => "table3-right",
            Table::Table3LeftErratum => "table3-left-erratum",
        }
    }

    pub fn json(self) -> &'static str {
        match self {
            Table::Table1 => include_str!("../data/table1.json"),
            Table::Table2Left => include_str!("../data/table2_left.json"),
            Table::Table2Right => include_str!("../data/table2_right.json"),
            Table::Table3Left => include_str!("../data/table3_left.json"),
            Table::Table3Right => include_str!("../data/table3_right.json"),
            Table::Table3LeftErratum => include_str!("../data/table3_left_erratum.json"),
        }
    }

    pub fn transcript(self) -> Transcript {
        crate::transcript::parse(self.json()).expect("bundled tables are well formed")
    }

    pub fn from_name(name: &str) -> Option<Table> {
        Table::ALL.into_iter().find(|t| t.name() == name)
    }
}
