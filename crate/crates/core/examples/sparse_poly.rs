//! Parsing, multiplying and censusing sparse multivariate polynomials.

use polycount::{parse_poly, FieldSpec, Integers};

fn main() -> polycount::Result<()> {
    let f3 = FieldSpec::prime(3)?;
    let f = parse_poly("1+x1+x2^2", 2, &f3)?;
    let cube = f.pow(3)?;
    println!("({f})^3 = {cube}");
    println!("Frobenius image equals the cube: {}", f.frobenius() == cube);
    let census = f.pow(5)?.coeff_census();
    println!("census of ({f})^5: {:?}, nonzero {}", census.counts, census.total());

    let z = parse_poly("x1 - x2", 2, &Integers)?;
    println!("(x1 - x2)^4 = {}", z.pow(4)?);
    Ok(())
}
