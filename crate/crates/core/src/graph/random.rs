use rand::seq::SliceRandom;
use rand::Rng;

use super::{Graph, Vertex};

/// Random connected graph on `n` vertices: a random spanning tree plus each
/// remaining pair independently with probability `density`.
pub fn random_connected<R: Rng + ?Sized>(n: usize, density: f64, rng: &mut R) -> Graph {
    let mut order: Vec<Vertex> = (0..n).collect();
    order.shuffle(rng);
    let mut edges = Vec::new();
    for i in 1..n {
        let j = rng.gen_range(0..i);
        edges.push((order[i], order[j]));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(density.clamp(0.0, 1.0)) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).expect("generated pairs are in range and loop-free")
}

#[cfg(test)]
mod tests {
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::*;

    #[test]
    fn always_connected_and_reproducible() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for n in 1..12 {
            assert!(random_connected(n, 0.0, &mut rng).is_connected());
            let g = random_connected(n, 0.0, &mut rng);
            assert_eq!(g.size(), n - 1);
        }
        let a = random_connected(9, 0.3, &mut ChaCha8Rng::seed_from_u64(5));
        let b = random_connected(9, 0.3, &mut ChaCha8Rng::seed_from_u64(5));
        assert_eq!(a, b);
        assert_eq!(random_connected(6, 1.0, &mut rng).size(), 15);
    }
}
