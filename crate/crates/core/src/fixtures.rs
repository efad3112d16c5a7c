//! A fixed corpus of small matroids used by the verification suites.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::builders::{cycle_graph, graphic, k4_minus_edge, linear_gf2};
use crate::matroid::Matroid;

/// Seed of the random binary part of the corpus.
pub const CORPUS_SEED: u64 = 0x006d_6174_726f_6964;
pub const RANDOM_BINARY_COUNT: usize = 25;

#[derive(Debug, Clone)]
pub struct Fixture {
    pub name: String,
    pub matroid: Matroid,
}

impl Fixture {
    fn new(name: impl Into<String>, matroid: Matroid) -> Fixture {
        Fixture {
            name: name.into(),
            matroid,
        }
    }
}

/// `U(r, n)` for `1 ≤ n ≤ max_n` and `0 ≤ r ≤ n`.
pub fn uniform_fixtures(max_n: usize) -> Vec<Fixture> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for r in 0..=n {
            let m = Matroid::uniform(r, n).expect("valid parameters");
            out.push(Fixture::new(format!("U({r},{n})"), m));
        }
    }
    out
}

fn graph(vertices: &[&str], edges: &[(&str, &str)]) -> Matroid {
    graphic(vertices, edges).expect("fixed graph")
}

/// Cycles C3 to C6, K4, K4 minus an edge (twice, with different edge
/// orders), a triangle and a square sharing an edge, the wheel W4 and the
/// theta graph with three paths of length two.
pub fn graphic_fixtures() -> Vec<Fixture> {
    let mut out = Vec::new();
    for n in 3..=6 {
        out.push(Fixture::new(
            format!("C{n}"),
            cycle_graph(n).expect("cycle"),
        ));
    }
    out.push(Fixture::new(
        "K4",
        graph(
            &["a", "b", "c", "d"],
            &[
                ("a", "b"),
                ("a", "c"),
                ("a", "d"),
                ("b", "c"),
                ("b", "d"),
                ("c", "d"),
            ],
        ),
    ));
    out.push(Fixture::new("K4-e", k4_minus_edge()));
    out.push(Fixture::new(
        "two-triangles",
        graph(
            &["a", "b", "c", "d"],
            &[("a", "c"), ("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")],
        ),
    ));
    out.push(Fixture::new(
        "triangle+square",
        graph(
            &["a", "b", "c", "d", "e"],
            &[
                ("a", "b"),
                ("b", "c"),
                ("c", "a"),
                ("c", "d"),
                ("d", "e"),
                ("e", "a"),
            ],
        ),
    ));
    out.push(Fixture::new(
        "W4",
        graph(
            &["h", "r0", "r1", "r2", "r3"],
            &[
                ("r0", "r1"),
                ("r1", "r2"),
                ("r2", "r3"),
                ("r3", "r0"),
                ("h", "r0"),
                ("h", "r1"),
                ("h", "r2"),
                ("h", "r3"),
            ],
        ),
    ));
    out.push(Fixture::new(
        "theta",
        graph(
            &["u", "v", "x", "y", "z"],
            &[
                ("u", "x"),
                ("x", "v"),
                ("u", "y"),
                ("y", "v"),
                ("u", "z"),
                ("z", "v"),
            ],
        ),
    ));
    out
}

/// Seeded random loopless binary matroids on 4 to 9 elements of rank at most 4.
pub fn random_binary_fixtures(count: usize, seed: u64) -> Vec<Fixture> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let n = rng.gen_range(4..=9);
            let rows = rng.gen_range(2..=4);
            // nonzero columns only: a loop would make every fixture disconnected
            let columns: Vec<Vec<u8>> = (0..n)
                .map(|_| {
                    let bits: u8 = rng.gen_range(1..(1u8 << rows));
                    (0..rows).map(|r| (bits >> r) & 1).collect()
                })
                .collect();
            Fixture::new(
                format!("GF2#{i}"),
                linear_gf2(&columns).expect("at most nine columns"),
            )
        })
        .collect()
}

/// The whole corpus: uniform matroids on at most seven elements, the graphic
/// fixtures and the random binary matroids.
pub fn corpus() -> Vec<Fixture> {
    let mut out = uniform_fixtures(7);
    out.extend(graphic_fixtures());
    out.extend(random_binary_fixtures(RANDOM_BINARY_COUNT, CORPUS_SEED));
    out
}

/// The connected members of the corpus with at least three elements.
pub fn connected_corpus() -> Vec<Fixture> {
    corpus()
        .into_iter()
        .filter(|f| f.matroid.len() >= 3 && f.matroid.is_connected())
        .collect()
}
