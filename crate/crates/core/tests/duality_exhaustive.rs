use caterpillar_paths::contraction::kappa;
use caterpillar_paths::duality::{
    among_path, compatible_path, segments_to_tree, tree_to_segments, tree_to_segments_mapped,
    validate_path, PathMode, SegmentFamily,
};
use caterpillar_paths::induced::max_caterpillar;
use caterpillar_paths::oracle::enum_free_trees;
use caterpillar_paths::tree::Tree;

/// Cells adjacent across a chord, computed from boundary arcs alone: the two
/// arcs flanking each endpoint lie in the two cells the chord separates.
fn arc_adjacency_tree(s: &SegmentFamily) -> Tree {
    let dual = segments_to_tree(s);
    let arcs = s.label_count();
    let edges = s.pairs().iter().map(|&(a, _)| {
        let before = dual.cell_of_arc[(a + arcs - 1) % arcs];
        let after = dual.cell_of_arc[a];
        (before, after)
    });
    Tree::new(s.len() + 1, edges).unwrap()
}

#[test]
fn round_trip_every_root() {
    for m in 1..=8 {
        for t in enum_free_trees(m).unwrap() {
            let code = t.canonical_code();
            for root in 0..t.vertex_count() {
                let (s, map) = tree_to_segments_mapped(&t, root).unwrap();
                let dual = segments_to_tree(&s);
                assert_eq!(dual.tree.canonical_code(), code);
                assert_eq!(arc_adjacency_tree(&s).canonical_code(), code);
                let mut sorted = map.clone();
                sorted.sort_unstable();
                assert_eq!(sorted, (0..m).collect::<Vec<_>>());
            }
        }
    }
}

#[test]
fn arc_cells_match_nesting() {
    for m in 1..=7 {
        for t in enum_free_trees(m).unwrap() {
            let s = tree_to_segments(&t, 0).unwrap();
            let dual = segments_to_tree(&s);
            // Arc i sits inside exactly the chords (a, b) with a ≤ i < b.
            for (i, &cell) in dual.cell_of_arc.iter().enumerate() {
                let innermost = s
                    .pairs()
                    .iter()
                    .enumerate()
                    .filter(|(_, &(a, b))| a <= i && i < b)
                    .max_by_key(|(_, &(a, _))| a)
                    .map(|(j, _)| j);
                match innermost {
                    Some(j) => assert_eq!(dual.segment_cells[j].1, cell),
                    None => assert!(dual.segment_cells.iter().all(|&(_, inner)| inner != cell)),
                }
            }
        }
    }
}

#[test]
fn constructive_paths_all_roots() {
    for m in 1..=8 {
        for t in enum_free_trees(m).unwrap() {
            for root in 0..t.vertex_count() {
                let s = tree_to_segments(&t, root).unwrap();
                let dual = segments_to_tree(&s);
                let w = max_caterpillar(&dual.tree).unwrap();
                let p = compatible_path(&s, &w).unwrap();
                let report = validate_path(&s, &p, PathMode::Compatible);
                assert!(
                    report.passed(),
                    "{t} root {root}: {:?} {:?}",
                    p.endpoints,
                    report.issues
                );
                assert_eq!(p.segment_count(), w.size);

                let a = among_path(&s).unwrap();
                let report = validate_path(&s, &a.path, PathMode::Simple);
                assert!(
                    report.passed(),
                    "{t} root {root}: {:?} {:?}",
                    a.path.endpoints,
                    report.issues
                );
                assert_eq!(a.path.segment_count(), kappa(&dual.tree).unwrap());
            }
        }
    }
}
