//! Augmenting-path bipartite matching on small bit-mask adjacency.

/// Maximum matching between left vertices `0..adj.len()` and right vertices
/// `0..64`, where `adj[i]` is the mask of right neighbors of `i`. Returns the
/// matching size and the right partner of each left vertex.
pub(crate) fn max_bipartite_matching(adj: &[u64]) -> (usize, Vec<Option<usize>>) {
    let mut owner: [Option<usize>; 64] = [None; 64];
    let mut size = 0;
    for left in 0..adj.len() {
        let mut visited = 0u64;
        if augment(adj, left, &mut visited, &mut owner) {
            size += 1;
        }
    }
    let mut partner = vec![None; adj.len()];
    for (right, o) in owner.iter().enumerate() {
        if let Some(l) = *o {
            partner[l] = Some(right);
        }
    }
    (size, partner)
}

fn augment(adj: &[u64], left: usize, visited: &mut u64, owner: &mut [Option<usize>; 64]) -> bool {
    for right in crate::graph::mask_bits(adj[left] & !*visited) {
        *visited |= 1 << right;
        let free = match owner[right] {
            None => true,
            Some(other) => augment(adj, other, visited, owner),
        };
        if free {
            owner[right] = Some(left);
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn needs_augmenting_path() {
        // 0 - {0, 1}, 1 - {0}: greedy would give 0 -> 0 and strand 1.
        let (size, partner) = max_bipartite_matching(&[0b11, 0b01]);
        assert_eq!(size, 2);
        assert_eq!(partner, vec![Some(1), Some(0)]);
    }

    #[test]
    fn hall_violation() {
        let (size, _) = max_bipartite_matching(&[0b1, 0b1, 0b1]);
        assert_eq!(size, 1);
        assert_eq!(max_bipartite_matching(&[]).0, 0);
    }
}
