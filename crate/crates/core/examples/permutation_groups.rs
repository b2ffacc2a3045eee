//! Stabilizer chains, orbits and the derived series of S5.
use vnc_core::{Permutation, PermutationGroup};

fn main() -> vnc_core::Result<()> {
    let a: Permutation = "5: 1 2 3 4 0".parse()?;
    let b = Permutation::from_cycles(5, &[&[0, 1]])?;
    let s5 = PermutationGroup::new(5, vec![a.clone(), b])?;
    let chain = s5.chain();
    println!("|S5| = {}, base {:?}, transversals {:?}", s5.order(), chain.base(), chain.transversal_lengths());

    let series = s5.derived_series();
    let orders: Vec<u64> = series.iter().map(PermutationGroup::order).collect();
    println!("derived series orders {orders:?}, solvable: {}", s5.is_solvable());

    let c5 = PermutationGroup::new(5, vec![a])?;
    let n = s5.normalizer(&c5)?;
    let c = s5.centralizer(&c5)?;
    println!("N(C5) has order {}, C(C5) has order {}", n.order(), c.order());

    let stab = s5.point_stabilizer(0)?;
    println!("stabilizer of 0: order {}, orbits {:?}", stab.order(), stab.orbits().blocks());
    Ok(())
}
