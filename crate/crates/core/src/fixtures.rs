//! Bundled workspaces.

use crate::dsl::{parse_workspace_with, ParseOptions, Workspace};
use crate::error::Result;
use crate::linalg::Field;

pub const F1: &str = include_str!("../fixtures/f1.quiver");
pub const F2: &str = include_str!("../fixtures/f2.quiver");
pub const F2_DEGENERATION: &str = include_str!("../fixtures/f2_degeneration.quiver");
pub const F3: &str = include_str!("../fixtures/f3.quiver");

/// `(name, source)` for every bundled workspace.
pub const ALL: [(&str, &str); 4] = [
    ("f1", F1),
    ("f2", F2),
    ("f2_degeneration", F2_DEGENERATION),
    ("f3", F3),
];

pub fn source(name: &str) -> Option<&'static str> {
    ALL.iter().find(|(n, _)| *n == name).map(|(_, s)| *s)
}

pub fn load(source: &str, field: Field) -> Result<Workspace> {
    parse_workspace_with(
        source,
        &ParseOptions {
            field: Some(field),
            ..ParseOptions::default()
        },
    )
}

pub fn f1(field: Field) -> Workspace {
    load(F1, field).expect("bundled fixture")
}

pub fn f2(field: Field) -> Workspace {
    load(F2_DEGENERATION, field).expect("bundled fixture")
}

pub fn f3(field: Field) -> Workspace {
    load(F3, field).expect("bundled fixture")
}
