use std::io::Cursor;

use fairclique::generate::gnp;
use fairclique::graph::{read_attributes, read_edge_list, write_edge_list};
use fairclique::{assign_random_attributes, connected_components, Error, VertexMask};

#[test]
fn edge_list_round_trip() {
    for seed in 0..5 {
        let g = gnp(40, 0.2, seed);
        let mut buf = Vec::new();
        write_edge_list(&g, &mut buf).unwrap();
        let back = read_edge_list(Cursor::new(buf)).unwrap();
        // isolated vertices are not representable in an edge list
        assert_eq!(back.m(), g.m());
        for (u, v) in g.edges() {
            let (bu, bv) = (
                back.dense_id_of(g.original_id(u)).unwrap(),
                back.dense_id_of(g.original_id(v)).unwrap(),
            );
            assert!(back.has_edge(bu, bv));
        }
        let degree_sum: usize = back.vertices().map(|v| back.degree(v)).sum();
        assert_eq!(degree_sum, 2 * back.m());
    }
}

#[test]
fn sparse_ids_and_comments() {
    let text = "# SNAP style\n% KONECT style\n100 7\n7 100\n7 7\n\n42 100\n";
    let g = read_edge_list(Cursor::new(text)).unwrap();
    assert_eq!((g.n(), g.m()), (3, 2));
    assert_eq!(g.original_ids(), &[100, 7, 42]);
    let ag = read_attributes(g, Cursor::new("7 x\n100 y\n42 x\n")).unwrap();
    assert_eq!(ag.num_attrs(), 2);
    assert_eq!(ag.attr_names(), &["y".to_string(), "x".to_string()]);
}

#[test]
fn attribute_file_errors() {
    let g = || read_edge_list(Cursor::new("0 1\n1 2\n")).unwrap();
    for bad in ["0 a\n1 b\n", "0 a\n1 b\n2 a\n3 b\n", "0 a\n1 b\n1 a\n2 a\n"] {
        assert!(
            matches!(read_attributes(g(), Cursor::new(bad)), Err(Error::Attributes(_))),
            "{bad:?}"
        );
    }
}

#[test]
fn random_attributes_are_deterministic_and_cover() {
    let g = gnp(100, 0.05, 1);
    let a = assign_random_attributes(g.clone(), 4, 7).unwrap();
    let b = assign_random_attributes(g, 4, 7).unwrap();
    assert_eq!(a.attrs(), b.attrs());
    let all: Vec<_> = a.vertices().collect();
    assert!(a.attr_counts(&all).iter().all(|&c| c >= 1));
}

#[test]
fn components_partition_alive_vertices() {
    for seed in 0..10 {
        let g = gnp(50, 0.04, seed);
        let mask = VertexMask::from_vertices(g.n(), g.vertices().filter(|v| v % 3 != 0));
        let comps = connected_components(&g, &mask);
        let mut seen: Vec<u32> = comps.iter().flatten().copied().collect();
        seen.sort_unstable();
        assert_eq!(seen, mask.iter().collect::<Vec<_>>());
        for comp in &comps {
            for &v in comp {
                for &w in g.neighbors(v) {
                    assert!(!mask.contains(w) || comp.contains(&w));
                }
            }
        }
    }
}
