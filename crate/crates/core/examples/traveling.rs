//! Traveling products, the connectivity matrix and its characteristic polynomial.

use polycount::traveling::{charpoly, connectivity_matrix, h_seq, theta_charpoly, traveling_genfun, traveling_seq, v_genfun};

fn main() -> polycount::Result<()> {
    println!("prod (1+x_i+x_(i+1)) over F_3: {:?}", h_seq(3, 8)?);
    println!("j=1, k=3: {} -> {:?}", traveling_genfun(1, 3)?, traveling_seq(1, 3, 8)?);
    let a = connectivity_matrix(3, 2);
    println!("A(3,2) = {a:?}");
    println!("charpoly {:?}, Theta {:?}", charpoly(&a), theta_charpoly(3, 2));
    println!("V(k=2, m=3): {}", v_genfun(2, 3)?);
    Ok(())
}
