#![allow(dead_code)]

use euclid_core::euclidean::{bottom_euclidean, EuclideanTable};
use euclid_core::ordinal::Ordinal;
use euclid_core::ring::FiniteRing;
use euclid_core::syntax::parse_finite_ring;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn ring(src: &str) -> FiniteRing {
    parse_finite_ring(src, 512).unwrap_or_else(|e| panic!("{src}: {e}"))
}

/// Bottom table with all values finite.
pub fn naturals(t: &EuclideanTable) -> Vec<u64> {
    t.finite_values().expect("finite ring")
}

/// A random validated table above `bottom`: a few raises of single
/// elements (kept only when the division property survives) and random
/// strictly increasing reshapes of the value chain.
pub fn perturb(bottom: &EuclideanTable, rng: &mut ChaCha8Rng) -> EuclideanTable {
    let ring = bottom.ring().clone();
    let mut values = naturals(bottom);
    let steps = rng.gen_range(1..=4);
    for _ in 0..steps {
        if rng.gen_bool(0.5) {
            let top = values.iter().copied().max().unwrap_or(0);
            let mut gaps: Vec<u64> = (0..=top + 1).map(|_| rng.gen_range(1..=3)).collect();
            gaps[0] = rng.gen_range(0..=2);
            let map: Vec<u64> = gaps
                .iter()
                .scan(0u64, |acc, g| {
                    *acc += g;
                    Some(*acc)
                })
                .collect();
            values = values.iter().map(|&v| map[v as usize]).collect();
        } else {
            let mut trial = values.clone();
            let k = rng.gen_range(0..trial.len());
            trial[k] += rng.gen_range(1..=3);
            if EuclideanTable::from_naturals(&ring, &trial).is_ok() {
                values = trial;
            }
        }
    }
    EuclideanTable::from_naturals(&ring, &values).expect("perturbations keep the division property")
}

/// Principal corpus rings with at most `limit` elements, single and product.
pub fn principal_rings(limit: u64) -> Vec<FiniteRing> {
    let singles = euclid_core::corpus::RINGS.iter().map(|s| s.to_string());
    let products = euclid_core::corpus::PRODUCTS.iter().map(euclid_core::corpus::product);
    singles
        .chain(products)
        .map(|s| ring(&s))
        .filter(|r| r.size() <= limit && r.is_principal().unwrap())
        .collect()
}

/// Seeded choice of a ring and a perturbed table on it.
pub fn random_table(rings: &[(FiniteRing, EuclideanTable)], rng: &mut ChaCha8Rng) -> EuclideanTable {
    let (_, bottom) = rings.choose(rng).expect("nonempty corpus");
    perturb(bottom, rng)
}

pub fn with_bottoms(rings: Vec<FiniteRing>) -> Vec<(FiniteRing, EuclideanTable)> {
    rings
        .into_iter()
        .map(|r| {
            let b = bottom_euclidean(&r).unwrap();
            (r, b)
        })
        .collect()
}

pub fn pointwise_le(a: &EuclideanTable, b: &EuclideanTable) -> bool {
    a.nonzero_values().iter().zip(b.nonzero_values()).all(|(x, y)| x <= y)
}

pub fn ord(n: u64) -> Ordinal {
    Ordinal::from(n)
}
