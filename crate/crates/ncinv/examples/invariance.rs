// Acting with SL(2) on noncommutative polynomials and checking the basis
// is invariant while a perturbation is not.

use ncinv::action::{act, default_witnesses, is_invariant, sym_power, GroupElement};
use ncinv::symbolic::noncrossing_basis;
use ncinv::Rational;

pub fn run_example() -> ncinv::Result<()> {
    let g = GroupElement::parse(&["2", "1/3", "3", "1"])?;
    let rho = sym_power(&g, 3);
    println!("det of the d=3 representation: {}", rho.determinant());

    let disc = noncrossing_basis(2, 2).remove(0);
    assert_eq!(act(&g, &disc), disc);

    let witnesses = default_witnesses(5, 0);
    for p in noncrossing_basis(4, 2) {
        assert!(is_invariant(&p, &witnesses)?);
        println!("invariant: {p}");
    }

    let mut broken = disc.clone();
    broken.add_term(vec![1, 1], Rational::from_integer(1.into()))?;
    println!("{broken} invariant? {}", is_invariant(&broken, &witnesses)?);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("invariance example");
}
