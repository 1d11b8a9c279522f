// Hilbert series of the invariant algebra computed three ways.

use ncinv::hilbert::{compare_methods, dims_by_chebyshev, dims_by_enumeration, DEFAULT_NODES};

pub fn run_example() -> ncinv::Result<()> {
    for d in 1..=4 {
        let e = dims_by_enumeration(d, 8);
        assert_eq!(e.dims, dims_by_chebyshev(d, 8).dims);
        println!("d={d}: {:?}", e.dims);
    }

    let report = compare_methods(3, 8, DEFAULT_NODES);
    print!("{}", report.to_csv(10));
    assert!(report.is_clean());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("hilbert series example");
}
