//! Digit formulas: Lucas, binomial row censuses, runs of ones.

use polycount::closed_forms::{
    averaging_identity, binomial_row_census, example24_split, family22_count, lucas_binomial, omega_runs,
    prop23_count, RunDecomposition,
};

fn main() -> polycount::Result<()> {
    println!("C(1000, 300) mod 7 = {}", lucas_binomial(1000, 300, 7)?);
    println!("row 4 mod 3: {:?}", binomial_row_census(4, 3)?.counts);
    println!("N((1+x+x^2)^10) over F_3 = {}", prop23_count(10, 3)?);
    println!("(N_0, N_1, N_2) of (1+x+x^2)^5 over F_3 = {:?}", example24_split(5)?);
    let runs = RunDecomposition::of(6039);
    println!("6039 has runs {:?}; omega(6039) = {}", runs.lengths(), omega_runs(6039));
    let (lhs, rhs) = averaging_identity(10);
    println!("average of omega over [0, 2^10) = {lhs} = F(12) = {rhs}");
    println!("k=3, n=5: {}", family22_count(3, 5)?);
    Ok(())
}
