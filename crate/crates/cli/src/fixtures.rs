//! The three worked examples as algebra files. `¬` and `⊕` are derived.

use reslat_core::fixtures;

use crate::format::{render_algebra, AlgebraFile};

pub fn example_files() -> Vec<(&'static str, AlgebraFile)> {
    vec![
        (
            "ex1",
            AlgebraFile::from_residuated("ex1", &fixtures::ex1(), true),
        ),
        (
            "ex2",
            AlgebraFile::from_residuated("ex2", &fixtures::ex2(), true),
        ),
        (
            "ex3",
            AlgebraFile::from_residuated("ex3", &fixtures::ex3(), true),
        ),
    ]
}

pub fn example_text(name: &str) -> Option<String> {
    example_files()
        .into_iter()
        .find(|(n, _)| *n == name)
        .map(|(_, f)| render_algebra(&f))
}
