// Noncrossing partitions of [n]: enumeration, the lattice order and the
// Möbius function.

use ncinv::partition::{
    crossing_count, enumerate_nc, is_noncrossing, leq, meet, nc_moebius, SetPartition,
};

pub fn run_example() -> ncinv::Result<()> {
    let n = 4;
    let all = enumerate_nc(n);
    println!("NC({n}) has {} elements", all.len());
    assert_eq!(all.len(), 14);

    let p = SetPartition::new(4, vec![vec![1, 2], vec![3, 4]])?;
    let q = SetPartition::new(4, vec![vec![1, 4], vec![2, 3]])?;
    let r = meet(&p, &q)?;
    println!("{p:?} ∧ {q:?} = {r:?}");
    assert!(leq(&r, &p)? && leq(&r, &q)?);

    let crossing = SetPartition::new(4, vec![vec![1, 3], vec![2, 4]])?;
    assert!(!is_noncrossing(&crossing));
    println!("crossings of {crossing:?}: {}", crossing_count(&crossing));

    for k in 1..=6 {
        let mu = nc_moebius(&SetPartition::minimal(k), &SetPartition::maximal(k))?;
        println!("μ(0̂, 1̂) on NC({k}) = {mu}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("partitions example");
}
