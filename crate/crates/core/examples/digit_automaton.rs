//! The digit automaton of 1 + x over F_2 and counts for large exponents.

use num_bigint::BigUint;
use polycount::automaton::parse_exponent;
use polycount::{parse_poly, Budget, DigitAutomaton, FieldElem, FieldSpec};

fn main() -> polycount::Result<()> {
    let f2 = FieldSpec::prime(2)?;
    let a = DigitAutomaton::build(&parse_poly("1+x", 1, &f2)?, &Budget::default())?;
    println!("states: {:?}", a.dump().states);
    println!("N_1((1+x)^11) = {}", a.count(&BigUint::from(11u32), FieldElem(1))?);

    let f = parse_poly("1+x1+x2+x1*x2^2", 2, &f2)?;
    let b = DigitAutomaton::build(&f, &Budget::default())?;
    println!("{} reachable states for {f}", b.num_states());
    let n = parse_exponent("rep:40", 2)?;
    println!("N_1(f^(2^40 - 1)) = {}", b.count(&n, FieldElem(1))?);
    let counts: Vec<String> = b.repunit_counts(FieldElem(1), 8, 1)?.iter().map(|c| c.to_string()).collect();
    println!("N_1(f^(2^m - 1)), m < 8: {}", counts.join(", "));
    Ok(())
}
