//! The rank-one space `S^(1) = SO_{w1..wN}(N+1) / SO_{w2..wN}(N)`.
//!
//! In rank-adapted notation the constants are `k_i = w_i` and the
//! translations are `P_i = Omega_0i`. The space is realised as the orbit of
//! `O = (1,0,...,0)` on the "sphere" `(x^0)^2 + sum k_0l (x^l)^2 = 1`.

mod charts;
mod curvature;
mod metric;

pub use charts::{
    act, act_beltrami, beltrami_to_weierstrass, origin, parallel_to_weierstrass, polar_to_weierstrass,
    weierstrass_to_beltrami, BeltramiPoint, ParallelCoords, PolarCoords, WeierstrassPoint,
};
pub use curvature::{is_nondegenerate_rank1, sectional_curvature_rank1};
pub use metric::{
    ambient_pullback_check_rank1, beltrami_metric, foliation_report_rank1, metric_at_origin_rank1,
    parallel_metric, parallel_to_beltrami, polar_metric, subsidiary_metric_rank1,
};
