use geodesia::corona::{product, Variant};
use geodesia::format::{parse_edge_list, parse_labeled, write_edge_list, write_labeled};
use geodesia::geodetic::{naive_oracle, ForcedVertices, LengthBound, SolveConfig, SolveError, Solver};
use geodesia::graph::{
    antipodal_pairs, distances, enumerate_geodesics, generate, pendant_vertices, Family, Graph, Vertex, UNREACHABLE,
};
use proptest::prelude::*;

/// Connected graph: a random tree plus a random selection of the other pairs.
fn connected(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n)
        .prop_flat_map(|n| {
            let parents: Vec<_> = (1..n).map(|i| 0..i).collect();
            (Just(n), parents, prop::collection::vec(any::<bool>(), n * (n - 1) / 2), 0.0..0.6f64)
        })
        .prop_map(|(n, parents, coins, density)| {
            let mut edges: Vec<(Vertex, Vertex)> = parents.iter().enumerate().map(|(i, &p)| (p, i + 1)).collect();
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let threshold = (density * 8.0) as usize;
            for ((u, v), (i, coin)) in pairs.zip(coins.iter().enumerate()) {
                if *coin && i % 8 < threshold {
                    edges.push((u, v));
                }
            }
            Graph::new(n, edges).unwrap()
        })
}

fn with_subset(max_n: usize) -> impl Strategy<Value = (Graph, Vec<Vertex>)> {
    connected(max_n).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), prop::collection::vec(any::<bool>(), n)).prop_map(|(g, bits)| {
            let set = bits.iter().enumerate().filter(|(_, &b)| b).map(|(v, _)| v).collect();
            (g, set)
        })
    })
}

fn bound() -> impl Strategy<Value = LengthBound> {
    prop_oneof![Just(LengthBound::Unbounded), Just(LengthBound::TWO)]
}

fn floyd(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.order();
    let mut d = vec![vec![u32::MAX / 2; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0;
    }
    for &(u, v) in g.edges() {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                d[i][j] = d[i][j].min(d[i][k] + d[k][j]);
            }
        }
    }
    d
}

fn simple_paths(g: &Graph, u: Vertex, v: Vertex) -> Vec<Vec<Vertex>> {
    fn go(g: &Graph, path: &mut Vec<Vertex>, target: Vertex, out: &mut Vec<Vec<Vertex>>) {
        let last = *path.last().unwrap();
        if last == target {
            out.push(path.clone());
            return;
        }
        for &w in g.neighbors(last) {
            if !path.contains(&w) {
                path.push(w);
                go(g, path, target, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(g, &mut vec![u], v, &mut out);
    out
}

fn solver(g: &Graph) -> Solver<'_> {
    Solver::new(g, SolveConfig::default()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, ..ProptestConfig::default() })]

    #[test]
    fn check_agrees_with_oracle((g, set) in with_subset(8), b in bound()) {
        let fast = solver(&g).check(&set, b).unwrap();
        let slow = match naive_oracle(&g, &set, b) {
            Err(SolveError::OracleBlowup(_)) => return Ok(()),
            other => other.unwrap(),
        };
        prop_assert_eq!(fast.is_some(), slow.is_some());
        if let Some(cert) = fast {
            prop_assert!(cert.verify(&g, b).is_ok());
        }
        if let Some(cert) = slow {
            prop_assert!(cert.verify(&g, b).is_ok());
        }
    }

    #[test]
    fn geodesics_are_the_shortest_simple_paths(g in connected(7), u in 0usize..7, v in 0usize..7) {
        let (u, v) = (u % g.order(), v % g.order());
        let d = distances(&g).get(u, v).unwrap() as usize;
        let got: Vec<Vec<Vertex>> =
            enumerate_geodesics(&g, u, v, usize::MAX).unwrap().iter().map(|p| p.vertices().to_vec()).collect();
        let mut want: Vec<Vec<Vertex>> = simple_paths(&g, u, v).into_iter().filter(|p| p.len() == d + 1).collect();
        want.sort();
        prop_assert!(got.iter().all(|p| p.len() == d + 1));
        prop_assert_eq!(got, want);
    }

    #[test]
    fn distances_form_a_metric(g in connected(9)) {
        let t = distances(&g);
        let f = floyd(&g);
        for u in g.vertices() {
            for v in g.vertices() {
                prop_assert_eq!(t.raw(u, v), t.raw(v, u));
                prop_assert_eq!(t.raw(u, v), f[u][v]);
                prop_assert_ne!(t.raw(u, v), UNREACHABLE);
                for w in g.vertices() {
                    prop_assert!(t.raw(u, w) <= t.raw(u, v) + t.raw(v, w));
                }
            }
        }
    }

    #[test]
    fn construction_ignores_edge_order(g in connected(9), seed in any::<u64>()) {
        let mut edges: Vec<(Vertex, Vertex)> = g.edges().iter().map(|&(u, v)| if seed & 1 == 0 { (v, u) } else { (u, v) }).collect();
        let len = edges.len();
        for i in (1..len).rev() {
            let j = (seed.rotate_left(i as u32) as usize) % (i + 1);
            edges.swap(i, j);
        }
        prop_assert_eq!(Graph::new(g.order(), edges).unwrap(), g);
    }

    #[test]
    fn supersets_stay_valid((g, set) in with_subset(8), extra in 0usize..8, b in bound()) {
        let s = solver(&g);
        if s.check(&set, b).unwrap().is_some() {
            let mut bigger = set.clone();
            let x = extra % g.order();
            if !bigger.contains(&x) {
                bigger.push(x);
            }
            prop_assert!(s.check(&bigger, b).unwrap().is_some());
        }
    }

    #[test]
    fn number_bounds(g in connected(8)) {
        let s = solver(&g);
        let sg = s.minimum(LengthBound::Unbounded).unwrap();
        let two = s.minimum(LengthBound::TWO).unwrap();
        prop_assert!(2 <= sg.number && sg.number <= g.order());
        prop_assert!(sg.number <= two.number);
        if distances(&g).diameter().unwrap() <= 2 {
            prop_assert_eq!(sg.number, two.number);
        }
        prop_assert!(sg.certificate.verify(&g, LengthBound::Unbounded).is_ok());
        prop_assert!(two.certificate.verify(&g, LengthBound::TWO).is_ok());
    }

    #[test]
    fn pendants_lie_in_every_valid_set((g, set) in with_subset(8), b in bound()) {
        let s = solver(&g);
        let pendants = pendant_vertices(&g);
        if s.check(&set, b).unwrap().is_some() {
            prop_assert!(pendants.iter().all(|p| set.contains(p)));
        }
        for &p in &pendants {
            let rest: Vec<Vertex> = g.vertices().filter(|&v| v != p).collect();
            prop_assert!(s.check(&rest, b).unwrap().is_none());
        }
    }

    #[test]
    fn edge_lists_round_trip(g in connected(10)) {
        prop_assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn labeled_products_round_trip(base in connected(4), hs in prop::collection::vec(connected(3), 6), v in 0usize..3) {
        let variant = [Variant::Corona, Variant::EdgeCorona, Variant::NeighborhoodCorona][v];
        let count = variant.copy_count(&base);
        let copies: Vec<Graph> = hs.iter().cycle().take(count).cloned().collect();
        let p = product(variant, &base, &copies).unwrap();
        prop_assert_eq!(parse_labeled(&write_labeled(&p)).unwrap(), p);
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 40, ..ProptestConfig::default() })]

    #[test]
    fn minimum_is_minimal_under_the_oracle(g in connected(7), b in bound()) {
        let cfg = SolveConfig { forced: ForcedVertices::None, ..SolveConfig::default() };
        let k = Solver::new(&g, cfg).unwrap().minimum(b).unwrap().number;
        let n = g.order();
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize != k - 1 {
                continue;
            }
            let set: Vec<Vertex> = (0..n).filter(|v| mask >> v & 1 == 1).collect();
            match naive_oracle(&g, &set, b) {
                Err(SolveError::OracleBlowup(_)) => {}
                other => prop_assert!(other.unwrap().is_none(), "{:?} accepted below the minimum", set),
            }
        }
    }
}

#[test]
fn cycle_antipodal_geodesic_counts() {
    for k in 2..=8 {
        let even = generate(Family::Cycle, 2 * k).unwrap();
        let pairs = antipodal_pairs(&even).unwrap();
        assert_eq!(pairs.len(), k);
        for (u, v) in pairs {
            assert_eq!(enumerate_geodesics(&even, u, v, 10).unwrap().len(), 2);
        }
        let odd = generate(Family::Cycle, 2 * k + 1).unwrap();
        let pairs = antipodal_pairs(&odd).unwrap();
        assert_eq!(pairs.len(), 2 * k + 1);
        for (u, v) in pairs {
            assert_eq!(enumerate_geodesics(&odd, u, v, 10).unwrap().len(), 1);
        }
    }
}
