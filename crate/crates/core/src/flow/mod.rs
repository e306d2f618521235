//! Max flow, MQI cut improvement, spectral bisection, and the flow-based NCP.

mod bisect;
mod maxflow;
mod mqi;
mod ncp;

pub use bisect::{spectral_bisect, spectral_order, DEFAULT_BISECT_TOL};
pub use maxflow::{max_flow, FlowNetwork, MaxFlow};
pub use mqi::{mqi, mqi_trace};
pub use ncp::{ncp_flow, FlowNcpConfig, DEFAULT_DEPTH_CAP};
