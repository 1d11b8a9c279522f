// The bijection between m-partite noncrossing pairings of [md] and
// noncrossing partitions of [md/2] without singletons.

use ncinv::partition::{enumerate_m_partite_nc_pairings, thicken, unthicken};

pub fn run_example() -> ncinv::Result<()> {
    let (m, d) = (4, 4);
    for p in enumerate_m_partite_nc_pairings(m, d) {
        let q = thicken(&p, m, d)?;
        assert_eq!(unthicken(&q, m, d)?, p);
        println!("{:?} <-> {q:?}", p.chords().collect::<Vec<_>>());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("thickening example");
}
