//! Homological shift ideals by the Möbius route and the syzygy route.

use polymat::fixtures;
use polymat::syzygy::{betti_table, hs_from_betti, hs_ideal, polymatroidal_ideal};

fn main() {
    let p = fixtures::paper_example();
    let table = betti_table(&polymatroidal_ideal(&p)).unwrap();
    for i in 0..=table.projective_dimension() {
        let via_mobius = hs_ideal(&p, p.cage(), i).unwrap();
        let via_betti = hs_from_betti(&table, 3, i);
        assert_eq!(via_mobius, via_betti);
        println!("HS_{i} ({} generators):", via_mobius.num_generators());
        println!("{}\n", via_mobius.render_text());
    }
}
