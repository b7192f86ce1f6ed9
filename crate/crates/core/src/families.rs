//! Generators for the named graph families.
//!
//! All generated graphs carry unit resistors. Numbering:
//! - path, linear 2-tree, linear 3-tree: vertex `i` joined to `i+1 ..= i+k`
//!   for k = 1, 2, 3 (a banded adjacency).
//! - ladder with `m` rungs: column `c` (0-based) holds `2c+1` on top and
//!   `2c+2` below, so `1, 2` is the left rung.
//! - fan / wheel on `k` vertices: rim `1 ..= k-1` as a path (fan) or cycle
//!   (wheel), hub `k` joined to every rim vertex.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Path,
    Linear2Tree,
    Linear3Tree,
    Ladder,
    Fan,
    Wheel,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Path,
        Family::Linear2Tree,
        Family::Linear3Tree,
        Family::Ladder,
        Family::Fan,
        Family::Wheel,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Linear2Tree => "linear2tree",
            Family::Linear3Tree => "linear3tree",
            Family::Ladder => "ladder",
            Family::Fan => "fan",
            Family::Wheel => "wheel",
        }
    }

    /// Smallest legal size parameter.
    pub fn min_size(self) -> usize {
        match self {
            Family::Path | Family::Linear2Tree => 2,
            Family::Linear3Tree => 4,
            Family::Ladder => 1,
            Family::Fan => 2,
            Family::Wheel => 4,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown family {s:?}")))
    }
}

/// A family together with its size parameter: `n` for the path and linear
/// trees, the rung count `m` for ladders (2m vertices), and the total vertex
/// count `k` for fans and wheels.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilySpec {
    family: Family,
    size: usize,
}

impl FamilySpec {
    pub fn new(family: Family, size: usize) -> Result<Self> {
        if size < family.min_size() {
            return Err(Error::Domain(format!(
                "{family} requires size >= {}, got {size}",
                family.min_size()
            )));
        }
        Ok(Self { family, size })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn vertex_count(&self) -> usize {
        match self.family {
            Family::Ladder => 2 * self.size,
            _ => self.size,
        }
    }

    pub fn generate(&self) -> Graph {
        generate(self)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.family, self.size)
    }
}

fn banded(n: usize, width: usize) -> Vec<(usize, usize)> {
    (1..=n)
        .flat_map(|i| (i + 1..=(i + width).min(n)).map(move |j| (i, j)))
        .collect()
}

pub fn generate(spec: &FamilySpec) -> Graph {
    let s = spec.size;
    let edges: Vec<(usize, usize)> = match spec.family {
        Family::Path => banded(s, 1),
        Family::Linear2Tree => banded(s, 2),
        Family::Linear3Tree => banded(s, 3),
        Family::Ladder => {
            let rungs = (0..s).map(|c| (2 * c + 1, 2 * c + 2));
            let rails = (0..s.saturating_sub(1))
                .flat_map(|c| [(2 * c + 1, 2 * c + 3), (2 * c + 2, 2 * c + 4)]);
            rungs.chain(rails).collect()
        }
        Family::Fan | Family::Wheel => {
            let hub = s;
            let mut e: Vec<(usize, usize)> =
                (1..hub.saturating_sub(1)).map(|i| (i, i + 1)).collect();
            if spec.family == Family::Wheel {
                e.push((1, hub - 1));
            }
            e.extend((1..hub).map(|i| (i, hub)));
            e
        }
    };
    Graph::unit(spec.vertex_count(), &edges).expect("family edges are in range and loop-free")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::RatMatrix;
    use crate::rational::int;

    fn lap(family: Family, size: usize) -> RatMatrix {
        FamilySpec::new(family, size)
            .unwrap()
            .generate()
            .laplacian()
    }

    fn m<const N: usize>(rows: [[i64; N]; N]) -> RatMatrix {
        RatMatrix::from_ints(&rows).unwrap()
    }

    #[test]
    fn path_laplacians() {
        assert_eq!(lap(Family::Path, 2), m([[1, -1], [-1, 1]]));
        assert_eq!(
            lap(Family::Path, 3),
            m([[1, -1, 0], [-1, 2, -1], [0, -1, 1]])
        );
        assert_eq!(
            lap(Family::Path, 5),
            m([
                [1, -1, 0, 0, 0],
                [-1, 2, -1, 0, 0],
                [0, -1, 2, -1, 0],
                [0, 0, -1, 2, -1],
                [0, 0, 0, -1, 1],
            ])
        );
    }

    #[test]
    fn linear2tree_laplacians() {
        assert_eq!(
            lap(Family::Linear2Tree, 3),
            m([[2, -1, -1], [-1, 2, -1], [-1, -1, 2]])
        );
        assert_eq!(
            lap(Family::Linear2Tree, 4),
            m([
                [2, -1, -1, 0],
                [-1, 3, -1, -1],
                [-1, -1, 3, -1],
                [0, -1, -1, 2]
            ])
        );
        assert_eq!(
            lap(Family::Linear2Tree, 7),
            m([
                [2, -1, -1, 0, 0, 0, 0],
                [-1, 3, -1, -1, 0, 0, 0],
                [-1, -1, 4, -1, -1, 0, 0],
                [0, -1, -1, 4, -1, -1, 0],
                [0, 0, -1, -1, 4, -1, -1],
                [0, 0, 0, -1, -1, 3, -1],
                [0, 0, 0, 0, -1, -1, 2],
            ])
        );
    }

    #[test]
    fn linear3tree_laplacians() {
        assert_eq!(
            lap(Family::Linear3Tree, 4),
            m([
                [3, -1, -1, -1],
                [-1, 3, -1, -1],
                [-1, -1, 3, -1],
                [-1, -1, -1, 3]
            ])
        );
        assert_eq!(
            lap(Family::Linear3Tree, 7),
            m([
                [3, -1, -1, -1, 0, 0, 0],
                [-1, 4, -1, -1, -1, 0, 0],
                [-1, -1, 5, -1, -1, -1, 0],
                [-1, -1, -1, 6, -1, -1, -1],
                [0, -1, -1, -1, 5, -1, -1],
                [0, 0, -1, -1, -1, 4, -1],
                [0, 0, 0, -1, -1, -1, 3],
            ])
        );
        assert_eq!(
            lap(Family::Linear3Tree, 9),
            m([
                [3, -1, -1, -1, 0, 0, 0, 0, 0],
                [-1, 4, -1, -1, -1, 0, 0, 0, 0],
                [-1, -1, 5, -1, -1, -1, 0, 0, 0],
                [-1, -1, -1, 6, -1, -1, -1, 0, 0],
                [0, -1, -1, -1, 6, -1, -1, -1, 0],
                [0, 0, -1, -1, -1, 6, -1, -1, -1],
                [0, 0, 0, -1, -1, -1, 5, -1, -1],
                [0, 0, 0, 0, -1, -1, -1, 4, -1],
                [0, 0, 0, 0, 0, -1, -1, -1, 3],
            ])
        );
    }

    #[test]
    fn ladder_laplacians() {
        assert_eq!(lap(Family::Ladder, 1), m([[1, -1], [-1, 1]]));
        assert_eq!(
            lap(Family::Ladder, 2),
            m([
                [2, -1, -1, 0],
                [-1, 2, 0, -1],
                [-1, 0, 2, -1],
                [0, -1, -1, 2]
            ])
        );
        assert_eq!(
            lap(Family::Ladder, 4),
            m([
                [2, -1, -1, 0, 0, 0, 0, 0],
                [-1, 2, 0, -1, 0, 0, 0, 0],
                [-1, 0, 3, -1, -1, 0, 0, 0],
                [0, -1, -1, 3, 0, -1, 0, 0],
                [0, 0, -1, 0, 3, -1, -1, 0],
                [0, 0, 0, -1, -1, 3, 0, -1],
                [0, 0, 0, 0, -1, 0, 2, -1],
                [0, 0, 0, 0, 0, -1, -1, 2],
            ])
        );
    }

    #[test]
    fn fan_laplacians() {
        assert_eq!(lap(Family::Fan, 2), m([[1, -1], [-1, 1]]));
        assert_eq!(
            lap(Family::Fan, 3),
            m([[2, -1, -1], [-1, 2, -1], [-1, -1, 2]])
        );
        assert_eq!(
            lap(Family::Fan, 6),
            m([
                [2, -1, 0, 0, 0, -1],
                [-1, 3, -1, 0, 0, -1],
                [0, -1, 3, -1, 0, -1],
                [0, 0, -1, 3, -1, -1],
                [0, 0, 0, -1, 2, -1],
                [-1, -1, -1, -1, -1, 5],
            ])
        );
    }

    #[test]
    fn wheel_laplacians() {
        assert_eq!(
            lap(Family::Wheel, 4),
            m([
                [3, -1, -1, -1],
                [-1, 3, -1, -1],
                [-1, -1, 3, -1],
                [-1, -1, -1, 3]
            ])
        );
        assert_eq!(
            lap(Family::Wheel, 5),
            m([
                [3, -1, 0, -1, -1],
                [-1, 3, -1, 0, -1],
                [0, -1, 3, -1, -1],
                [-1, 0, -1, 3, -1],
                [-1, -1, -1, -1, 4],
            ])
        );
        assert_eq!(
            lap(Family::Wheel, 7),
            m([
                [3, -1, 0, 0, 0, -1, -1],
                [-1, 3, -1, 0, 0, 0, -1],
                [0, -1, 3, -1, 0, 0, -1],
                [0, 0, -1, 3, -1, 0, -1],
                [0, 0, 0, -1, 3, -1, -1],
                [-1, 0, 0, 0, -1, 3, -1],
                [-1, -1, -1, -1, -1, -1, 6],
            ])
        );
    }

    #[test]
    fn named_examples() {
        let g = FamilySpec::new(Family::Path, 3).unwrap().generate();
        assert_eq!(
            g.edges().map(|(u, v, _)| (u, v)).collect::<Vec<_>>(),
            vec![(1, 2), (2, 3)]
        );

        let g = FamilySpec::new(Family::Ladder, 2).unwrap().generate();
        let mut e: Vec<_> = g.edges().map(|(u, v, _)| (u, v)).collect();
        e.sort();
        assert_eq!(e, vec![(1, 2), (1, 3), (2, 4), (3, 4)]);

        let k4 = FamilySpec::new(Family::Wheel, 4).unwrap().generate();
        assert_eq!(k4.edge_count(), 6);
    }

    #[test]
    fn degree_properties() {
        for k in 3..12 {
            let fan = FamilySpec::new(Family::Fan, k).unwrap().generate();
            let hubs = (1..=k).filter(|&v| fan.degree(v) == k - 1).count();
            // fan(3) is a triangle and fan(4) has middle rim vertex 2 at degree 3
            let expected = match k {
                3 => 3,
                4 => 2,
                _ => 1,
            };
            assert_eq!(hubs, expected, "fan({k})");
            assert_eq!(fan.degree(k), k - 1);
        }
        for k in 5..12 {
            let wheel = FamilySpec::new(Family::Wheel, k).unwrap().generate();
            assert_eq!(wheel.degree(k), k - 1);
            assert!((1..k).all(|v| wheel.degree(v) == 3));
        }
        for n in 2..15 {
            let t = FamilySpec::new(Family::Linear2Tree, n).unwrap().generate();
            let deg2: Vec<usize> = (1..=n).filter(|&v| t.degree(v) == 2).collect();
            if n == 2 {
                assert!(deg2.is_empty());
            } else if n == 3 {
                assert_eq!(deg2, vec![1, 2, 3]);
            } else {
                assert_eq!(deg2, vec![1, n]);
            }
        }
        for n in 5..15 {
            let t = FamilySpec::new(Family::Linear3Tree, n).unwrap().generate();
            let deg3: Vec<usize> = (1..=n).filter(|&v| t.degree(v) == 3).collect();
            assert_eq!(deg3, vec![1, n]);
        }
    }

    #[test]
    fn unit_laplacian_diagonal_is_degree() {
        for family in Family::ALL {
            for size in family.min_size()..family.min_size() + 6 {
                let g = FamilySpec::new(family, size).unwrap().generate();
                let l = g.laplacian();
                for v in 1..=g.vertex_count() {
                    assert_eq!(l.get(v - 1, v - 1), &int(g.degree(v) as i64));
                }
            }
        }
    }

    #[test]
    fn rejects_small_sizes_and_unknown_names() {
        assert!(FamilySpec::new(Family::Linear3Tree, 3).is_err());
        assert!(FamilySpec::new(Family::Wheel, 3).is_err());
        assert!(FamilySpec::new(Family::Ladder, 0).is_err());
        assert!(FamilySpec::new(Family::Path, 1).is_err());
        assert!("hexagon".parse::<Family>().is_err());
        assert_eq!(
            "linear2tree".parse::<Family>().unwrap(),
            Family::Linear2Tree
        );
    }
}
