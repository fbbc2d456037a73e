//! Hopcroft–Karp maximum bipartite matching and the König vertex cover.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

const FREE: u32 = u32::MAX;

/// A maximum matching between `left.len()` left vertices and `right`
/// vertices `0..right_len`, with adjacency `adj[l]`.
#[derive(Debug, Clone)]
pub struct Matching {
    pub pair_left: Vec<u32>,
    pub pair_right: Vec<u32>,
    pub size: usize,
}

pub fn hopcroft_karp(adj: &[Vec<u32>], right_len: usize) -> Matching {
    let nl = adj.len();
    let mut pair_left = vec![FREE; nl];
    let mut pair_right = vec![FREE; right_len];
    let mut dist = vec![0u32; nl];
    let mut size = 0;
    loop {
        // Layer the left vertices by alternating BFS from the free ones.
        let mut queue = VecDeque::new();
        for l in 0..nl {
            if pair_left[l] == FREE {
                dist[l] = 0;
                queue.push_back(l);
            } else {
                dist[l] = u32::MAX;
            }
        }
        let mut found = false;
        while let Some(l) = queue.pop_front() {
            for &r in &adj[l] {
                let m = pair_right[r as usize];
                if m == FREE {
                    found = true;
                } else if dist[m as usize] == u32::MAX {
                    dist[m as usize] = dist[l] + 1;
                    queue.push_back(m as usize);
                }
            }
        }
        if !found {
            break;
        }
        // Vertex-disjoint shortest augmenting paths by iterative DFS.
        let mut next = vec![0usize; nl];
        for start in 0..nl {
            if pair_left[start] != FREE {
                continue;
            }
            let mut stack: Vec<usize> = vec![start];
            while let Some(&l) = stack.last() {
                if next[l] == adj[l].len() {
                    dist[l] = u32::MAX;
                    stack.pop();
                    continue;
                }
                let r = adj[l][next[l]] as usize;
                next[l] += 1;
                let m = pair_right[r];
                if m == FREE {
                    // Flip the path recorded on the stack.
                    let mut r = r as u32;
                    for &v in stack.iter().rev() {
                        let prev = pair_left[v];
                        pair_left[v] = r;
                        pair_right[r as usize] = v as u32;
                        r = prev;
                    }
                    size += 1;
                    for &v in &stack {
                        dist[v] = u32::MAX;
                    }
                    break;
                } else if dist[m as usize] == dist[l] + 1 {
                    stack.push(m as usize);
                }
            }
        }
    }
    Matching {
        pair_left,
        pair_right,
        size,
    }
}

/// Left and right vertices reachable from free left vertices along
/// alternating paths; König's cover is `(L \ Z) ∪ (R ∩ Z)`.
pub fn alternating_reach(adj: &[Vec<u32>], m: &Matching) -> (Vec<bool>, Vec<bool>) {
    let mut left = vec![false; adj.len()];
    let mut right = vec![false; m.pair_right.len()];
    let mut queue = VecDeque::new();
    for l in 0..adj.len() {
        if m.pair_left[l] == FREE {
            left[l] = true;
            queue.push_back(l);
        }
    }
    while let Some(l) = queue.pop_front() {
        for &r in &adj[l] {
            let r = r as usize;
            if right[r] || m.pair_left[l] == r as u32 {
                continue;
            }
            right[r] = true;
            let next = m.pair_right[r];
            if next != FREE && !left[next as usize] {
                left[next as usize] = true;
                queue.push_back(next as usize);
            }
        }
    }
    (left, right)
}
