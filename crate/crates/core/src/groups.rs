//! Conductance of externally labelled groups.

use std::collections::{BTreeMap, HashMap};

use crate::cut::conductance;
use crate::graph::Graph;
use crate::profile::{Method, NcpProfile};

/// Groups in label order, members mapped to graph indices through `index`.
/// Labels on nodes missing from `index` are dropped.
pub fn groups_from_labels(
    labels: &[(u64, String)],
    index: &HashMap<u64, usize>,
) -> Vec<(String, Vec<usize>)> {
    let mut groups: BTreeMap<&str, Vec<usize>> = BTreeMap::new();
    let mut dropped = 0usize;
    for (node, group) in labels {
        match index.get(node) {
            Some(&v) => groups.entry(group.as_str()).or_default().push(v),
            None => dropped += 1,
        }
    }
    if dropped > 0 {
        log::warn!("{dropped} labels name nodes outside the analysed graph");
    }
    groups
        .into_iter()
        .map(|(name, mut members)| {
            members.sort_unstable();
            members.dedup();
            (name.to_string(), members)
        })
        .collect()
}

/// One cut per group, folded into a lower envelope by size. Empty groups
/// and groups covering the whole graph are skipped.
pub fn group_profile(g: &Graph, groups: &[(String, Vec<usize>)]) -> NcpProfile {
    let mut out = NcpProfile::new();
    for (name, members) in groups {
        if members.is_empty() {
            log::warn!("group {name} is empty, skipped");
            continue;
        }
        match conductance(g, members) {
            Ok(cut) => {
                out.offer_cut(&cut, Method::Groups);
            }
            Err(e) => log::warn!("group {name} skipped: {e}"),
        }
    }
    out
}
