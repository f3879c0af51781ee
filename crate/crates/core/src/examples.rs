//! Worked example graphs shipped with the library.

pub const NAMES: [&str; 5] = ["a2_cell", "b3_cell", "one_vertex", "asymptotic_b3", "six_vertex"];

pub fn bundled(name: &str) -> Option<&'static str> {
    Some(match name {
        "a2_cell" => include_str!("../data/a2_cell.json"),
        "b3_cell" => include_str!("../data/b3_cell.json"),
        "one_vertex" => include_str!("../data/one_vertex.json"),
        "asymptotic_b3" => include_str!("../data/asymptotic_b3.json"),
        "six_vertex" => include_str!("../data/six_vertex.json"),
        _ => return None,
    })
}

/// Parsed form of a bundled example.
pub fn load(name: &str) -> Option<crate::io::GraphInput> {
    bundled(name).map(|t| crate::io::parse_graph(t).expect("bundled examples are valid"))
}
