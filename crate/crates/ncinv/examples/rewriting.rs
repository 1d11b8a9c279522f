// Rewriting a crossing bracket monomial into noncrossing form with the
// Plücker relation, and checking that the polynomial it stands for is
// unchanged.

use ncinv::bracket::{to_noncrossing, BracketExpression, BracketMonomial};
use ncinv::symbolic::{restitute_expression, restitution};

pub fn run_example() -> ncinv::Result<()> {
    // four intervals of size 1 joined by two crossing chords
    let b = BracketMonomial::from_pairs(4, 1, &[(1, 3), (2, 4)])?;
    println!("input crossings: {}", b.crossing_count());

    let normal = to_noncrossing(&BracketExpression::from(&b));
    assert!(normal.is_noncrossing());
    for (chords, c) in normal.terms() {
        println!("  {c} · {:?}", chords.chords().collect::<Vec<_>>());
    }
    assert_eq!(restitute_expression(&normal), restitution(&b));

    // the same through the JSON interchange format
    let json = normal.to_json();
    println!("{json}");
    assert_eq!(BracketExpression::from_json(&json)?, normal);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("rewriting example");
}
