//! Dunkl operators, P_m and the pairing that makes x_i D_i self-adjoint.

use hp_core::arith::ThetaMode;
use hp_core::operators::{apply_dunkl, apply_p, apply_xd, dunkl_pairing};
use hp_core::poly::{Exponents, MultiPoly};

fn main() -> hp_core::Result<()> {
    let s = ThetaMode::Symbolic;
    let f = MultiPoly::monomial(Exponents::new(vec![2, 1, 0]), s.one(), &s);
    println!("f = {f}");
    println!("D_1 f = {}", apply_dunkl(0, &f)?);
    for m in 1..=3 {
        println!("P_{m} f = {}", apply_p(m, &f)?);
    }

    let d12 = apply_dunkl(0, &apply_dunkl(1, &f)?)?;
    let d21 = apply_dunkl(1, &apply_dunkl(0, &f)?)?;
    println!("D_1 D_2 f == D_2 D_1 f: {}", d12 == d21);

    let p23 = apply_p(2, &apply_p(3, &f)?)?;
    let p32 = apply_p(3, &apply_p(2, &f)?)?;
    println!("[P_2, P_3] f == 0: {}", p23 == p32);

    let g = MultiPoly::monomial(Exponents::new(vec![1, 1, 1]), s.one(), &s);
    let lhs = dunkl_pairing(&apply_xd(0, &f)?, &g)?;
    let rhs = dunkl_pairing(&f, &apply_xd(0, &g)?)?;
    println!("<x_1D_1 f, g> = {lhs}, <f, x_1D_1 g> = {rhs}");
    Ok(())
}
