mod common;

use cliquepoly::catalog::canonical_form;
use cliquepoly::cliques::count_cliques;
use num_bigint::BigUint;

#[test]
fn edge_values_count_triangles() {
    for g in common::catalog_upto(7).iter().chain(&common::random_graphs(11, 200, 1, 12)) {
        let tris = g.triangles();
        let mut total = 0usize;
        for (u, v) in g.edges() {
            let val = g.edge_value(u, v).unwrap();
            let containing = tris
                .iter()
                .filter(|&&(a, b, c)| [a, b, c].contains(&u) && [a, b, c].contains(&v))
                .count();
            assert_eq!(val, containing);
            total += val;
        }
        assert_eq!(BigUint::from(total), BigUint::from(3u8) * count_cliques(g).get(3));
    }
}

#[test]
fn neighborhood_order_is_degree() {
    for g in common::catalog_upto(6) {
        for v in 0..g.n() {
            assert_eq!(g.induced_neighborhood(v).unwrap().graph.n(), g.degree(v));
        }
    }
}

#[test]
fn delete_then_readd_is_isomorphic() {
    for g in common::catalog_upto(6) {
        let original = canonical_form(&g).unwrap();
        for v in 0..g.n() {
            let del = g.delete_vertex(v).unwrap();
            let back: Vec<usize> = g.neighbors(v).iter().map(|&u| del.old_to_new[u].unwrap()).collect();
            let rebuilt = del.graph.add_vertex(&back).unwrap();
            assert_eq!(canonical_form(&rebuilt).unwrap(), original);
        }
    }
}
