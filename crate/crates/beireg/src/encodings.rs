//! Built-in example trees with fixed labelings, so that golden tests and
//! the `examples` command are reproducible.

use crate::graph::SimpleGraph;
use crate::tree::Tree;

/// The 10-vertex jewel: center 1, supporting vertices 2, 3, 4, and two
/// leaves on each support. One jewel with `D(1) = 3`; regularity 6.
pub fn jewel10() -> Tree {
    let edges = [
        (1, 2),
        (1, 3),
        (1, 4),
        (2, 5),
        (2, 6),
        (3, 7),
        (3, 8),
        (4, 9),
        (4, 10),
    ];
    Tree::new(SimpleGraph::new(10, edges).unwrap()).unwrap()
}

/// 20-vertex tree with two adjacent centers 1 and 2 (each of `D = 4`):
/// supports 3, 4, 5 on vertex 1 and 6, 7, 8 on vertex 2, each support
/// carrying two leaves (9..=20). Both bounds meet at 12.
pub fn two_center_example() -> Tree {
    let mut edges = vec![(1, 2), (1, 3), (1, 4), (1, 5), (2, 6), (2, 7), (2, 8)];
    let mut leaf = 9;
    for support in 3..=8 {
        edges.push((support, leaf));
        edges.push((support, leaf + 1));
        leaf += 2;
    }
    Tree::new(SimpleGraph::new(20, edges).unwrap()).unwrap()
}

/// Hub family member on `7d + 1` vertices: hub 1 with `d` copies, each
/// copy a vertex `u` on the hub carrying two branch vertices, each branch
/// vertex carrying two leaves. For `d >= 3` the centers are the hub and
/// every `u`, so the bound gap grows with `d`.
pub fn hub_family(d: usize) -> Tree {
    let mut edges = Vec::new();
    let mut next = 2;
    for _ in 0..d {
        let u = next;
        next += 1;
        edges.push((1, u));
        for _ in 0..2 {
            let a = next;
            next += 1;
            edges.push((u, a));
            edges.push((a, next));
            edges.push((a, next + 1));
            next += 2;
        }
    }
    Tree::new(SimpleGraph::new(next - 1, edges).unwrap()).unwrap()
}

/// 16-vertex chain of two linked jewels: centers 1 and 2 joined through a
/// degree-3 vertex 3 (which carries leaf 8), supports 4, 5 on center 1 and
/// 6, 7 on center 2, two leaves per support. Here `mu = 1`, the bounds
/// stay apart (9 and 10), and no exact rule fires.
pub fn linked_centers_example() -> Tree {
    let edges = [
        (1, 3),
        (2, 3),
        (1, 4),
        (1, 5),
        (2, 6),
        (2, 7),
        (3, 8),
        (4, 9),
        (4, 10),
        (5, 11),
        (5, 12),
        (6, 13),
        (6, 14),
        (7, 15),
        (7, 16),
    ];
    Tree::new(SimpleGraph::new(16, edges).unwrap()).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jewel::jewel_profile;

    #[test]
    fn jewel10_profile() {
        let p = jewel_profile(&jewel10());
        assert_eq!((p.iv, p.s, p.d_g, p.mu), (4, 1, 3, 0));
    }

    #[test]
    fn two_center_profile() {
        let t = two_center_example();
        assert_eq!(t.n(), 20);
        let p = jewel_profile(&t);
        assert_eq!(p.centers, vec![(1, 4), (2, 4)]);
        assert_eq!((p.iv, p.d_g, p.p, p.e_g, p.mu), (8, 8, 1, 1, 0));
        assert_eq!(p.component_sizes, vec![2]);
    }

    #[test]
    fn hub_family_profile() {
        let t = hub_family(3);
        assert_eq!(t.n(), 22);
        let p = jewel_profile(&t);
        assert_eq!(p.s, 4); // hub plus the three copy roots
        assert_eq!(p.d_g, 12);
        assert_eq!(p.iv, 10);
        assert_eq!(p.component_sizes, vec![4]);
    }

    #[test]
    fn linked_centers_profile() {
        let p = jewel_profile(&linked_centers_example());
        assert_eq!((p.iv, p.s, p.d_g, p.p, p.e_g), (7, 2, 6, 2, 0));
        assert_eq!(p.c_g, vec![3]);
    }
}
