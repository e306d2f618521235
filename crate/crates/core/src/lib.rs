//! Network community profiles: the best conductance attainable at each set
//! size, computed by local spectral, flow-based and whisker engines, plus the
//! graph generators and lower bounds used to study them.

pub mod bounds;
pub mod cut;
pub mod error;
pub mod flow;
pub mod generators;
pub mod graph;
pub mod groups;
pub mod io;
pub mod local_spectral;
pub mod oracle;
pub mod pipeline;
pub mod profile;
mod spectral;
pub mod stats;
pub mod whiskers;

pub use bounds::{spectral_lower_bound, SpectralBound};
pub use cut::{conductance, sweep_cut, Cut, Sweep, SweepPoint};
pub use error::{NcpError, Result};
pub use flow::{max_flow, mqi, ncp_flow, spectral_bisect, FlowNcpConfig, FlowNetwork};
pub use graph::{largest_connected_component, Graph};
pub use groups::group_profile;
pub use local_spectral::{
    approximate_pagerank, local_spectral_cut, ncp_local_spectral, LocalSpectralParams,
    SpectralNcpConfig,
};
pub use oracle::brute_force_ncp;
pub use profile::{Method, NcpProfile, ProfilePoint, Witness};
pub use stats::{graph_stats, GraphStats};
pub use whiskers::{bag_of_whiskers, decompose_whiskers, find_bridges, WhiskerSet};
