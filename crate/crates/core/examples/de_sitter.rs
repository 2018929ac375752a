use ckspaces::rank_one::{beltrami_metric, sectional_curvature_rank1};
use ckspaces::*;

fn main() -> Result<()> {
    let ds = OmegaSignature::new(vec![-1.0, -1.0, 1.0, 1.0])?;
    let eta = BeltramiPoint { coords: vec![0.1, 0.2, 0.0, -0.1] };
    let g = beltrami_metric(&ds, &eta, &Tolerances::default())?;
    let (u, v) = ([1.0, 0.0, 0.0, 0.0], [0.0, 0.0, 1.0, 0.0]);
    let k = sectional_curvature_rank1(&ds, &eta, &u, &v, CurvatureOptions::default())?;
    assert!((k + 1.0).abs() < 1e-4);
    println!("metric at eta:\n{}", g.matrix);
    println!("sectional curvature {k:.6}");
    println!("{}", classify_group(&ds).rank_one.expect("catalogued").name);
    Ok(())
}
