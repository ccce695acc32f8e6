//! Fixtures shared by the benchmarks.

use a2spider::web::Generator::{Cap, Cup, Fork, H, Merge};
use a2spider::{Morphism, Sign, SignSeq};

/// A square face closed off into a scalar: cup, two H moves, cap.
pub fn closed_square(s: Sign) -> Morphism {
    let g = Morphism::generator;
    g(Cup(s)).then(&g(H(s))).then(&g(H(s.flip()))).then(&g(Cap(s)))
}

/// The bigon on `s` stacked `n` times.
pub fn bigon_tower(s: Sign, n: usize) -> Morphism {
    let bigon = Morphism::generator(Fork(s)).then(&Morphism::generator(Merge(s.flip())));
    (0..n).fold(Morphism::identity(&SignSeq(vec![s])), |acc, _| acc.then(&bigon))
}
