//! Plain enumeration oracle for `chi_td` on tiny graphs.
//!
//! Every label vector in `[1, k]^n` is generated for `k = 1, 2, ...` and
//! checked against the definitional total-labeling conditions. Nothing is
//! shared with the backtracking search.

use crate::error::{param, Result};
use crate::graph::Graph;

pub const MAX_BRUTE_FORCE_VERTICES: usize = 8;

/// Least `k <= cap` admitting a total difference labeling, or `None` when
/// every `k <= cap` fails.
pub fn brute_force_chi(g: &Graph, cap: u64) -> Result<Option<u64>> {
    let n = g.vertex_count();
    if n > MAX_BRUTE_FORCE_VERTICES {
        return Err(param(format!(
            "brute force supports at most {MAX_BRUTE_FORCE_VERTICES} vertices, got {n}"
        )));
    }
    if n == 0 {
        return Ok((cap >= 1).then_some(1));
    }
    let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).to_vec()).collect();
    let mut labels = vec![1u64; n];
    let mut incident = Vec::with_capacity(n);
    for k in 1..=cap {
        labels.iter_mut().for_each(|x| *x = 1);
        loop {
            if is_total_difference(&adj, &labels, &mut incident) {
                return Ok(Some(k));
            }
            // odometer increment over [1, k]^n
            let mut i = 0;
            while i < n && labels[i] == k {
                labels[i] = 1;
                i += 1;
            }
            if i == n {
                break;
            }
            labels[i] += 1;
        }
    }
    Ok(None)
}

fn is_total_difference(adj: &[Vec<usize>], l: &[u64], incident: &mut Vec<u64>) -> bool {
    for (v, nb) in adj.iter().enumerate() {
        incident.clear();
        for &u in nb {
            let e = l[u].abs_diff(l[v]);
            if e == 0 || e == l[v] || e == l[u] || incident.contains(&e) {
                return false;
            }
            incident.push(e);
        }
    }
    true
}
