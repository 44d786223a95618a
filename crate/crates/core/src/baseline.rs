//! Graph-based reference scheduler.
//!
//! Shares Phase 1 (random labeling) and Phase 2 (forest decomposition) with
//! the SINR-aware scheduler, and walks edges in the identical order, so any
//! difference in output comes purely from the coloring rule: an edge takes
//! the lowest color whose class raises neither a primary (shared endpoint)
//! nor a secondary (interference-range) conflict. No SINR is evaluated at
//! scheduling time, which is exactly the weakness the SINR-aware scheduler
//! exists to fix: pairwise range checks cannot see interference that
//! accumulates across several in-range transmitters, and they refuse
//! co-scheduling that the physical model would in fact tolerate.

use crate::cfls::Coloring;
use crate::graph::{
    coloring_order, decompose_into_oriented_forests, has_primary_conflict,
    has_secondary_conflict, random_labeling, TwoTierGraph,
};
use crate::model::{Link, Schedule, SimRng};

fn first_graph_clean_color(x: Link, partial: &Coloring, g: &TwoTierGraph) -> usize {
    'colors: for color in 1..=partial.num_colors() {
        for &h in partial.class(color) {
            if has_primary_conflict(x, h) || has_secondary_conflict(x, h, g) {
                continue 'colors;
            }
        }
        return color;
    }
    partial.num_colors() + 1
}

/// Runs the graph-based scheduler. `rng` drives only the labeling; seeding
/// it identically to the SINR-aware scheduler yields the same labeling and
/// forest structure, making the two directly comparable on one network.
pub fn graph_based_link_schedule(g: &TwoTierGraph, rng: &mut SimRng) -> Schedule {
    let labeling = random_labeling(g.num_nodes(), rng);
    let forests = decompose_into_oriented_forests(g);
    let order = coloring_order(&forests, &labeling);
    let mut coloring = Coloring::new();
    for x in order {
        let color = first_graph_clean_color(x, &coloring, g);
        coloring.assign(x, color);
    }
    coloring.into_schedule()
}
