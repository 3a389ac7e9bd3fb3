//! Arithmetic in F_4 and factorization of univariate polynomials over F_2.

use polycount::ffield::ArithOp;
use polycount::{FieldElem, FieldSpec, UniPoly};

fn main() -> polycount::Result<()> {
    let f4 = FieldSpec::parse("2^2")?;
    println!("{f4:?}, modulus {:?}", f4.modulus());
    for a in f4.nonzero_elements() {
        let inv = f4.field_arith(FieldElem(1), a, ArithOp::Div)?;
        println!("{} = {:?}: inverse {}, square {}", a, f4.coeffs(a), inv, f4.mul(a, a));
    }

    let f2 = FieldSpec::prime(2)?;
    for coeffs in [[1, 0, 1, 0, 0, 1], [1, 1, 1, 1, 1, 1]] {
        let g = UniPoly::from_ints(&f2, &coeffs);
        println!("{g:?}");
        println!("  irreducible: {}", g.is_irreducible()?);
        for (part, mult) in g.squarefree_decomposition()? {
            println!("  squarefree part {part:?} with multiplicity {mult}");
            for (d, block) in part.distinct_degree_factorization()? {
                println!("    degree-{d} factors multiply to {block:?}");
            }
        }
    }
    let g = UniPoly::from_ints(&f2, &[1, 1, 1, 1, 1]);
    println!("1+x+x^2+x^3+x^4 primitive: {}", f2.is_primitive(&g)?);
    Ok(())
}
