//! Minimum-cost flow for the largest union of `k` antichains.
//!
//! Network: `s → v_in` (cost `k`), `v_in → v_out` (cost `−1`, capacity 1),
//! `u_out → w_in` for every strict containment `u ⊂ w` (cost 0), and
//! `v_out → t` (cost 0). A unit of flow is a chain; its cost is `k` minus the
//! members it counts. The largest `C_{k+1}`-free subfamily has size
//! `N + min cost`, where the minimum is over all flow values. Successive
//! shortest paths stop at the first path of non-negative cost, which is the
//! global minimum by convexity of cost in the flow value.
//!
//! The grid variant routes chains through every set of `2^[n]` along single
//! element additions, with a free bypass `S_in → S_out`, instead of one arc
//! per containment pair; it is much sparser for dense families.
//!
//! Witness: with `d` the residual distances from `s` after adding a return
//! arc `t → s`, the members with `d(v_out) < d(v_in)` form a largest union of
//! `k` antichains. A chain of `k + 1` of them would close a negative cycle
//! through `t → s`, and each flow path contributes exactly `k` of its
//! counted members while every uncounted member qualifies.

use alloc::collections::{BinaryHeap, VecDeque};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Reverse;

use crate::lattice::{Containment, Set};

#[derive(Debug, Clone)]
struct Arc {
    to: usize,
    cap: i64,
    cost: i64,
}

struct Network {
    arcs: Vec<Arc>,
    out: Vec<Vec<usize>>,
}

impl Network {
    fn new(nodes: usize) -> Self {
        Network {
            arcs: Vec::new(),
            out: vec![Vec::new(); nodes],
        }
    }

    fn add(&mut self, from: usize, to: usize, cap: i64, cost: i64) {
        self.out[from].push(self.arcs.len());
        self.arcs.push(Arc { to, cap, cost });
        self.out[to].push(self.arcs.len());
        self.arcs.push(Arc { to: from, cap: 0, cost: -cost });
    }
}

/// Result of the flow computation.
pub struct KAntichainFlow {
    /// Size of the largest union of `k` antichains.
    pub value: usize,
    /// Positions of a witness subfamily, ascending.
    pub members: Vec<usize>,
}

const INF: i64 = i64::MAX / 4;

/// Successive shortest paths from a DAG start, then residual distances with
/// the return arc. Returns `(min cost, distances)`.
fn solve(mut g: Network, s: usize, t: usize, topo: &[usize], big: i64) -> (i64, Vec<i64>) {
    let nodes = g.out.len();
    let mut pot = vec![INF; nodes];
    pot[s] = 0;
    for &u in topo {
        if pot[u] == INF {
            continue;
        }
        for &a in &g.out[u] {
            let arc = &g.arcs[a];
            if arc.cap > 0 && pot[u] + arc.cost < pot[arc.to] {
                pot[arc.to] = pot[u] + arc.cost;
            }
        }
    }
    let mut total_cost = 0i64;
    let mut prev_arc = vec![usize::MAX; nodes];
    let mut dist = vec![INF; nodes];
    loop {
        dist.iter_mut().for_each(|d| *d = INF);
        dist[s] = 0;
        let mut heap = BinaryHeap::new();
        heap.push(Reverse((0i64, s)));
        while let Some(Reverse((d, u))) = heap.pop() {
            if d > dist[u] {
                continue;
            }
            for &a in &g.out[u] {
                let arc = &g.arcs[a];
                if arc.cap <= 0 {
                    continue;
                }
                let nd = d + arc.cost + pot[u] - pot[arc.to];
                if nd < dist[arc.to] {
                    dist[arc.to] = nd;
                    prev_arc[arc.to] = a;
                    heap.push(Reverse((nd, arc.to)));
                }
            }
        }
        if dist[t] == INF {
            break;
        }
        let path_cost = dist[t] + pot[t] - pot[s];
        for v in 0..nodes {
            if dist[v] < INF {
                pot[v] += dist[v];
            }
        }
        if path_cost >= 0 {
            break;
        }
        let mut push = INF;
        let mut v = t;
        while v != s {
            let a = prev_arc[v];
            push = push.min(g.arcs[a].cap);
            v = g.arcs[a ^ 1].to;
        }
        let mut v = t;
        while v != s {
            let a = prev_arc[v];
            g.arcs[a].cap -= push;
            g.arcs[a ^ 1].cap += push;
            v = g.arcs[a ^ 1].to;
        }
        total_cost += push * path_cost;
    }

    let flow_out: i64 = g.out[s].iter().filter(|&&a| a % 2 == 0).map(|&a| g.arcs[a ^ 1].cap).sum();
    g.add(t, s, big, 0);
    let back = g.arcs.len() - 1;
    g.arcs[back].cap = flow_out;
    let mut d = vec![INF; nodes];
    let mut in_queue = vec![false; nodes];
    let mut queue = VecDeque::new();
    d[s] = 0;
    queue.push_back(s);
    in_queue[s] = true;
    while let Some(u) = queue.pop_front() {
        in_queue[u] = false;
        for &a in &g.out[u] {
            let arc = &g.arcs[a];
            if arc.cap > 0 && d[u] + arc.cost < d[arc.to] {
                d[arc.to] = d[u] + arc.cost;
                if !in_queue[arc.to] {
                    in_queue[arc.to] = true;
                    queue.push_back(arc.to);
                }
            }
        }
    }
    (total_cost, d)
}

/// Closure network on containment lists (positions in canonical order,
/// which is a linear extension).
pub fn k_antichain_flow(links: &Containment, k: usize) -> KAntichainFlow {
    let n = links.up.len();
    let s = 2 * n;
    let t = 2 * n + 1;
    let inn = |v: usize| 2 * v;
    let out = |v: usize| 2 * v + 1;
    let big = n as i64 + 1;
    let mut g = Network::new(2 * n + 2);
    for v in 0..n {
        g.add(s, inn(v), big, k as i64);
        g.add(inn(v), out(v), 1, -1);
        g.add(out(v), t, big, 0);
        for &w in &links.up[v] {
            g.add(out(v), inn(w as usize), big, 0);
        }
    }
    let mut topo = vec![s];
    for v in 0..n {
        topo.push(inn(v));
        topo.push(out(v));
    }
    topo.push(t);
    let (cost, d) = solve(g, s, t, &topo, big);
    let members = (0..n).filter(|&v| d[out(v)] < d[inn(v)]).collect();
    KAntichainFlow {
        value: (n as i64 + cost) as usize,
        members,
    }
}

/// Grid network over all of `2^[n]`; `members` are masks, any order.
pub fn k_antichain_flow_grid(n: u32, members: &[Set], k: usize) -> KAntichainFlow {
    let size = 1usize << n;
    let s = 2 * size;
    let t = 2 * size + 1;
    let big = members.len() as i64 + 1;
    let mut present = vec![false; size];
    for &m in members {
        present[m as usize] = true;
    }
    let mut g = Network::new(2 * size + 2);
    for v in 0..size {
        if present[v] {
            g.add(s, 2 * v, big, k as i64);
            g.add(2 * v, 2 * v + 1, 1, -1);
            g.add(2 * v + 1, t, big, 0);
        }
        g.add(2 * v, 2 * v + 1, big, 0);
        for i in 0..n {
            if v >> i & 1 == 0 {
                g.add(2 * v + 1, 2 * (v | 1 << i), big, 0);
            }
        }
    }
    // Numeric order of masks is a linear extension of inclusion.
    let mut topo = vec![s];
    topo.extend(0..2 * size);
    topo.push(t);
    let (cost, d) = solve(g, s, t, &topo, big);
    let chosen = (0..members.len())
        .filter(|&i| {
            let v = members[i] as usize;
            d[2 * v + 1] < d[2 * v]
        })
        .collect();
    KAntichainFlow {
        value: (members.len() as i64 + cost) as usize,
        members: chosen,
    }
}
