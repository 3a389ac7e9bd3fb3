//! The law N_alpha(m) = u(m) q^m + v(m) for g(x)^(q^m - c).

use polycount::qpow::{count_qpow, fit_qpow_profile, primitive_u_check};
use polycount::ratgen::rational_string;
use polycount::{Budget, FieldElem, FieldSpec, UniPoly};

fn main() -> polycount::Result<()> {
    let budget = Budget::default();
    let f2 = FieldSpec::prime(2)?;
    let g = UniPoly::from_ints(&f2, &[1, 0, 1, 0, 0, 1]);
    let prof = fit_qpow_profile(&g, 1, FieldElem(1), &budget)?;
    println!("{}", serde_json::to_string(&prof.to_json()).expect("serializable"));
    println!("primitive u = {}", rational_string(&primitive_u_check(&g)?));
    for m in 0..8 {
        let direct = count_qpow(&g, 1, FieldElem(1), m, &budget)?;
        println!("m={m}: direct {direct}, law {}", rational_string(&prof.predict(m)));
    }

    let f3 = FieldSpec::prime(3)?;
    let h = UniPoly::from_ints(&f3, &[2, 0, 1, 1]);
    for alpha in [1, 2] {
        let p = fit_qpow_profile(&h, 1, FieldElem(alpha), &budget)?;
        let v: Vec<String> = p.v.iter().map(rational_string).collect();
        println!("2+x^2+x^3, alpha={alpha}: u={} v={v:?}", rational_string(&p.u[0]));
    }
    Ok(())
}
