// Free moment-cumulant conversion and the mixed moments of the ψ family.

use ncinv::free_prob::{
    cumulants_from_moments, moments_from_cumulants, psi_mixed_moment, psi_orthogonality,
    CumulantSequence,
};

pub fn run_example() -> ncinv::Result<()> {
    let semi = moments_from_cumulants(&CumulantSequence::Semicircle, 8);
    println!(
        "semicircle moments: {:?}",
        semi.values()
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
    );

    let poisson = moments_from_cumulants(&CumulantSequence::FreePoisson, 6);
    let back = cumulants_from_moments(&poisson, 6)?;
    println!("free Poisson cumulants recovered: {back}");

    let table: CumulantSequence = "table:[0,2,1,-1]".parse()?;
    println!(
        "φ(ψ2 ψ2) under {table} = {}",
        psi_mixed_moment(&[2, 2], &table)
    );
    for m in 0..=3 {
        let row: Vec<String> = (0..=3)
            .map(|n| psi_orthogonality(m, n, &table).map(|x| x.to_string()))
            .collect::<ncinv::Result<_>>()?;
        println!("  {}", row.join(" "));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("cumulants example");
}
