//! Exact scalars in Q and in Q(θ).

use hp_core::arith::{evaluate_at_theta, rational, ExactMatrix, Scalar, ThetaMode};

fn main() -> hp_core::Result<()> {
    let s = ThetaMode::Symbolic;
    let x = s.linear(1, 1); // 1 + θ
    let y = &s.theta().scale_int(2) / &x;
    println!("x = {x}");
    println!("2θ / x = {y}");
    println!("x * (2θ / x) = {}", &x * &y);

    let back = Scalar::parse(&y.to_string(), &s)?;
    assert_eq!(back, y);

    if let Scalar::Sym(r) = &y {
        println!("at θ = 1/2: {}", evaluate_at_theta(r, &rational(1, 2))?);
    }

    let m = ExactMatrix::from_fn(2, 2, &s, |r, c| if r == c { s.theta() } else { s.one() });
    let cp = m.charpoly()?;
    let shown: Vec<String> = cp.iter().map(|c| c.to_string()).collect();
    println!("charpoly of [[θ,1],[1,θ]]: [{}]", shown.join(", "));
    Ok(())
}
