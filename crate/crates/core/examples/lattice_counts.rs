//! Draconian sequences, polytope lattice points and shifted lattice paths.

use polycount::lattice::{
    enum_draconian, noncrossing_identity, omega_count, ps_lattice_points, shifted_path_count, PathMode, PsMode,
};

fn main() -> polycount::Result<()> {
    println!("K_3 = {:?}", enum_draconian(3, 15)?);
    println!("monomials of (x1+x2+x3)(x1+x2)(x1) = {}", omega_count(&[3, 2, 1])?);
    let t = [2, 1, 3];
    println!(
        "#Pi_3{t:?}: direct {}, formula {}",
        ps_lattice_points(&t, PsMode::Direct),
        ps_lattice_points(&t, PsMode::Formula)
    );
    for mode in [PathMode::Closed, PathMode::Lsum, PathMode::Ksum, PathMode::Paths] {
        println!("paths n=3 s=2 t=2 by {mode:?}: {}", shifted_path_count(3, 2, 2, mode)?);
    }
    let c = noncrossing_identity(&[2, -1, 3]);
    println!("identity at (2,-1,3): {} = {}", c.lhs, c.rhs);
    Ok(())
}
