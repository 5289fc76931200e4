#![allow(dead_code)]

use quiver_ext::dsl::Workspace;
use quiver_ext::fixtures;
use quiver_ext::{Field, Representation};

pub const Q: Field = Field::Rational;

pub fn f1() -> Workspace {
    fixtures::f1(Q)
}

pub fn f2() -> Workspace {
    fixtures::f2(Q)
}

pub fn f3() -> Workspace {
    fixtures::f3(Q)
}

pub fn module(ws: &Workspace, name: &str) -> Representation {
    ws.module(name).unwrap().clone()
}

/// The fixture modules of F2 used for pairwise checks.
pub fn f2_pool(ws: &Workspace) -> Vec<Representation> {
    ["S1", "S2", "S3", "P2", "P3", "M"].iter().map(|n| module(ws, n)).collect()
}

pub fn f3_pool(ws: &Workspace) -> Vec<Representation> {
    ["S1", "S2", "S3", "S4", "P2", "P3", "P4", "radP4"]
        .iter()
        .map(|n| module(ws, n))
        .collect()
}
