use crate::bitset::VertexSet;

/// Kuhn's augmenting-path matching. `cands[i]` lists the right-hand
/// vertices admissible for left vertex `i`. Returns a right vertex per left
/// vertex if every left vertex can be matched.
pub fn saturating_matching(cands: &[VertexSet]) -> Option<Vec<usize>> {
    let mut owner: Vec<Option<usize>> = vec![None; crate::bitset::MAX_ORDER];
    let mut assigned = vec![usize::MAX; cands.len()];
    for left in 0..cands.len() {
        let mut visited = VertexSet::new();
        if !augment(left, cands, &mut owner, &mut assigned, &mut visited) {
            return None;
        }
    }
    Some(assigned)
}

fn augment(
    left: usize,
    cands: &[VertexSet],
    owner: &mut [Option<usize>],
    assigned: &mut [usize],
    visited: &mut VertexSet,
) -> bool {
    for r in cands[left].iter() {
        if visited.contains(r) {
            continue;
        }
        visited.insert(r);
        let free = match owner[r] {
            None => true,
            Some(other) => augment(other, cands, owner, assigned, visited),
        };
        if free {
            owner[r] = Some(left);
            assigned[left] = r;
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
        // 0 -> {1, 2}, 1 -> {1}: greedy would give 0 the vertex 1.
        let cands = vec![[1, 2].iter().collect(), [1].iter().collect()];
        let m = saturating_matching(&cands).unwrap();
        assert_eq!(m, vec![2, 1]);
    }

    #[test]
    fn hall_violation() {
        let cands: Vec<VertexSet> = vec![[5].iter().collect(), [5].iter().collect(), [5, 6].iter().collect()];
        assert!(saturating_matching(&cands).is_none());
        assert_eq!(saturating_matching(&[]), Some(vec![]));
    }
}
