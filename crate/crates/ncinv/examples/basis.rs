// The noncrossing basis of invariant m-linear forms on binary d-ics,
// with the leading word of each element read off its chord diagram.

use ncinv::bracket::BracketMonomial;
use ncinv::symbolic::{
    leading_term, noncrossing_basis, noncrossing_basis_with_pairings, predicted_leading_word,
};

pub fn run_example() -> ncinv::Result<()> {
    // the noncommutative discriminant
    for p in noncrossing_basis(2, 2) {
        println!("d=2, m=2: {p}");
    }

    let (m, d) = (4, 2);
    let basis = noncrossing_basis_with_pairings(m, d);
    println!("d={d}, m={m}: {} elements", basis.len());
    for (pairing, poly) in &basis {
        let b = BracketMonomial::from_pairing(m, d, pairing.clone())?;
        let lead = leading_term(poly)?;
        assert_eq!(lead, predicted_leading_word(&b)?);
        println!(
            "  {:?} -> leading word {lead:?}",
            pairing.chords().collect::<Vec<_>>()
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("basis example");
}
