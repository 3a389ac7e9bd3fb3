//! Rational generating functions from automaton output via Berlekamp-Massey.

use polycount::ratgen::{fit_genfun, parse_seq, repunit_genfun};
use polycount::{parse_poly, Budget, DigitAutomaton, FieldElem, FieldSpec};

fn main() -> polycount::Result<()> {
    let f2 = FieldSpec::prime(2)?;
    for text in ["1+x1+x2+x2^2", "1+x1+x2+x3+x1*x2^2+x1*x3^2+x2*x3^2", "1+x1+x2+x1^2*x2^2"] {
        let k = polycount::mpoly::infer_nvars(text);
        let a = DigitAutomaton::build(&parse_poly(text, k, &f2)?, &Budget::default())?;
        let fit = repunit_genfun(&a, FieldElem(1), 1)?;
        println!("{text}: {} (order {})", fit.genfun, fit.recurrence.order());
    }
    let (gf, rec) = fit_genfun(&parse_seq("1,1,2,3,5,8,13")?, 3)?;
    println!("Fibonacci: {gf}, coefficients {:?}", rec.coeff_strings());
    Ok(())
}
