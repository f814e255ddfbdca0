//! Characters of S_N, averaged characters and the two-block spherical values.

use hp_core::characters::{
    averaged_character, averaged_character_n11, character_one_cycle, spherical_p2, AveragedCharacterSpec,
    CharacterContext,
};
use hp_core::poly::Partition;

fn main() -> hp_core::Result<()> {
    let ctx = CharacterContext::new(4)?;
    print!("{:>8}", "");
    for c in ctx.classes() {
        print!("{:>9}", format!("({c})"));
    }
    println!();
    for tau in ctx.irreps() {
        print!("{:>8}", format!("({tau})"));
        for c in ctx.classes() {
            print!("{:>9}", ctx.value(tau, c)?);
        }
        println!();
    }

    let tau: Partition = "3,2".parse()?;
    for k in 1..=5 {
        println!("χ^({tau}) on a {k}-cycle: {}", character_one_cycle(&tau, k)?);
    }

    let spec = AveragedCharacterSpec::new(vec![2, 1, 2], vec![0, 2])?;
    let std: Partition = "4,1".parse()?;
    println!(
        "(4,1) averaged over n=(2,1,2), A={{1,3}}: {} (closed form {})",
        averaged_character(&std, &spec)?,
        averaged_character_n11(&spec)
    );

    for k in 0..=2 {
        let tau = Partition::from_unsorted(vec![5 - k, k]);
        let spec = AveragedCharacterSpec::new(vec![3, 2], vec![0, 1])?;
        println!(
            "τ=({tau}): averaged {} spherical {}",
            averaged_character(&tau, &spec)?,
            spherical_p2(5, 2, k as usize)?
        );
    }
    Ok(())
}
