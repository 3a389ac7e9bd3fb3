//! Cross-checks the automaton against direct expansion over F_4.

use num_bigint::BigUint;
use polycount::oracle::brute_power_censuses;
use polycount::{parse_poly, Budget, DigitAutomaton, FieldSpec};

fn main() -> polycount::Result<()> {
    let f4 = FieldSpec::parse("2^2")?;
    let f = parse_poly("1+[0,1]*x1+x2", 2, &f4)?;
    let a = DigitAutomaton::build(&f, &Budget::default())?;
    let censuses = brute_power_censuses(&f, 24, &Budget::default())?;
    for (n, census) in censuses.iter().enumerate() {
        for alpha in f4.nonzero_elements() {
            assert_eq!(a.count(&BigUint::from(n), alpha)?, BigUint::from(census.get(&alpha)));
        }
    }
    println!("automaton and expansion agree for n <= 24; n = 24: {:?}", censuses[24].counts);
    Ok(())
}
