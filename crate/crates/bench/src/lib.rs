//! Fixtures shared by the criterion benches.

use ohmnet_core::{Family, FamilySpec, Graph};

/// Sizes timed for every method.
pub const SMALL_SIZES: [usize; 3] = [25, 50, 100];
/// Sizes timed only for the formula methods.
pub const LARGE_SIZES: [usize; 3] = [1_000, 10_000, 100_000];

/// A linear 2-tree and its end-to-end pair `(1, n)`.
pub fn two_tree(n: usize) -> (FamilySpec, Graph, (usize, usize)) {
    let spec = FamilySpec::new(Family::Linear2Tree, n).expect("n >= 2");
    let graph = spec.generate();
    (spec, graph, (1, n))
}
