//! Abstract pattern posets given by their Hasse diagrams.
//!
//! A [`Poset`] is validated on construction: the cover digraph is acyclic
//! and no cover is implied by the others. The strict order, height and the
//! undirected cover graph are derived eagerly; distances are computed on
//! demand because blow-ups can be large.

use alloc::collections::VecDeque;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    labels: Vec<String>,
    covers: Vec<(usize, usize)>,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
    above: Vec<Vec<u64>>,
    height: usize,
}

fn bit(row: &[u64], i: usize) -> bool {
    row[i / 64] >> (i % 64) & 1 == 1
}

fn set_bit(row: &mut [u64], i: usize) {
    row[i / 64] |= 1 << (i % 64);
}

impl Poset {
    /// Validates labels and covers `(lower, upper)` and derives the order.
    pub fn build<S: AsRef<str>>(elements: &[S], covers: &[(S, S)]) -> Result<Poset> {
        let labels: Vec<String> = elements.iter().map(|s| s.as_ref().to_string()).collect();
        let mut idx = Vec::with_capacity(covers.len());
        for (lo, hi) in covers {
            let find = |name: &str| {
                labels
                    .iter()
                    .position(|l| l == name)
                    .ok_or_else(|| Error::UnknownElement(name.to_string()))
            };
            idx.push((find(lo.as_ref())?, find(hi.as_ref())?));
        }
        Poset::from_indices(labels, idx)
    }

    /// Like [`Poset::build`] but additionally requires a tree poset.
    pub fn build_tree<S: AsRef<str>>(elements: &[S], covers: &[(S, S)]) -> Result<Poset> {
        let p = Poset::build(elements, covers)?;
        if !p.is_connected() {
            return Err(Error::Disconnected);
        }
        if !p.is_tree() {
            return Err(Error::NotATree);
        }
        Ok(p)
    }

    pub fn from_indices(labels: Vec<String>, covers: Vec<(usize, usize)>) -> Result<Poset> {
        let n = labels.len();
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::DuplicateElement(l.clone()));
            }
        }
        let mut covers = covers;
        for &(a, b) in &covers {
            if a >= n || b >= n {
                return Err(Error::InvalidParameter(format!("cover index ({a}, {b}) out of range")));
            }
            if a == b {
                return Err(Error::Cycle(labels[a].clone()));
            }
        }
        covers.sort_unstable();
        if let Some(w) = covers.windows(2).find(|w| w[0] == w[1]) {
            let (a, b) = w[0];
            return Err(Error::InvalidCover(labels[a].clone(), labels[b].clone()));
        }
        let mut up = vec![Vec::new(); n];
        let mut down = vec![Vec::new(); n];
        for &(a, b) in &covers {
            up[a].push(b);
            down[b].push(a);
        }
        // Kahn's algorithm; leftovers lie on or behind a cycle.
        let mut indeg: Vec<usize> = down.iter().map(Vec::len).collect();
        let mut queue: VecDeque<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut topo = Vec::with_capacity(n);
        while let Some(v) = queue.pop_front() {
            topo.push(v);
            for &w in &up[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    queue.push_back(w);
                }
            }
        }
        if topo.len() < n {
            let stuck = (0..n).find(|&v| indeg[v] > 0).unwrap_or(0);
            return Err(Error::Cycle(labels[stuck].clone()));
        }
        let words = n.div_ceil(64).max(1);
        let mut above = vec![vec![0u64; words]; n];
        for &v in topo.iter().rev() {
            let mut row = vec![0u64; words];
            for &w in &up[v] {
                set_bit(&mut row, w);
                for (r, x) in row.iter_mut().zip(&above[w]) {
                    *r |= *x;
                }
            }
            above[v] = row;
        }
        for &(a, b) in &covers {
            if up[a].iter().any(|&c| c != b && bit(&above[c], b)) {
                return Err(Error::ImpliedCover {
                    lower: labels[a].clone(),
                    upper: labels[b].clone(),
                });
            }
        }
        let mut chain = vec![1usize; n];
        for &v in &topo {
            for &w in &up[v] {
                chain[w] = chain[w].max(chain[v] + 1);
            }
        }
        let height = chain.into_iter().max().unwrap_or(0);
        Ok(Poset {
            labels,
            covers,
            up,
            down,
            above,
            height,
        })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Cover pairs `(lower, upper)`, sorted.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn upper_covers(&self, v: usize) -> &[usize] {
        &self.up[v]
    }

    pub fn lower_covers(&self, v: usize) -> &[usize] {
        &self.down[v]
    }

    /// Strict order `a < b`.
    pub fn less(&self, a: usize, b: usize) -> bool {
        bit(&self.above[a], b)
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        a == b || self.less(a, b)
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.less(a, b) || self.less(b, a)
    }

    /// Number of elements in a longest chain.
    pub fn height(&self) -> usize {
        self.height
    }

    /// Neighbours in the undirected Hasse diagram.
    pub fn neighbours(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.down[v].iter().chain(self.up[v].iter()).copied()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.up[v].len() + self.down[v].len()
    }

    /// Undirected Hasse distances from `v`; `None` when unreachable.
    pub fn distances_from(&self, v: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.len()];
        let mut queue = VecDeque::new();
        dist[v] = Some(0);
        queue.push_back(v);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap_or(0);
            for w in self.neighbours(u) {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn distance_matrix(&self) -> Vec<Vec<Option<usize>>> {
        (0..self.len()).map(|v| self.distances_from(v)).collect()
    }

    pub fn is_connected(&self) -> bool {
        self.is_empty() || self.distances_from(0).iter().all(Option::is_some)
    }

    /// Undirected cover graph connected and acyclic.
    pub fn is_tree(&self) -> bool {
        !self.is_empty() && self.is_connected() && self.covers.len() + 1 == self.len()
    }

    /// Minimum eccentricity in the Hasse diagram and every element attaining it.
    pub fn radius_and_centers(&self) -> Result<(usize, Vec<usize>)> {
        if !self.is_tree() {
            return Err(Error::NotATree);
        }
        let ecc: Vec<usize> = (0..self.len())
            .map(|v| self.distances_from(v).into_iter().flatten().max().unwrap_or(0))
            .collect();
        let radius = ecc.iter().copied().min().unwrap_or(0);
        let centers = (0..self.len()).filter(|&v| ecc[v] == radius).collect();
        Ok((radius, centers))
    }

    /// Same labels, every cover reversed.
    pub fn dual(&self) -> Poset {
        let covers = self.covers.iter().map(|&(a, b)| (b, a)).collect();
        Poset::from_indices(self.labels.clone(), covers).expect("dual of a valid poset is valid")
    }

    /// Subposet on `keep` (ascending indices); valid when `keep` is convex
    /// enough that covers among kept elements stay the Hasse diagram, as for
    /// deletions of leaves and whole branches of a tree.
    pub fn restrict(&self, keep: &[usize]) -> Poset {
        let mut map = vec![usize::MAX; self.len()];
        for (i, &v) in keep.iter().enumerate() {
            map[v] = i;
        }
        let labels = keep.iter().map(|&v| self.labels[v].clone()).collect();
        let covers = self
            .covers
            .iter()
            .filter(|&&(a, b)| map[a] != usize::MAX && map[b] != usize::MAX)
            .map(|&(a, b)| (map[a], map[b]))
            .collect();
        Poset::from_indices(labels, covers).expect("restriction of a tree poset is valid")
    }

    /// Breadth-first structure of a tree rooted at `root`.
    pub fn rooted(&self, root: usize) -> Result<RootedTree> {
        if root >= self.len() {
            return Err(Error::UnknownElement(format!("#{root}")));
        }
        if !self.is_tree() {
            return Err(Error::NotATree);
        }
        RootedTree::new(self, root)
    }

    /// Order-isomorphism test by backtracking over the strict order.
    pub fn is_isomorphic(&self, other: &Poset) -> bool {
        if self.len() != other.len() || self.covers.len() != other.covers.len() || self.height != other.height {
            return false;
        }
        let sig = |p: &Poset, v: usize| (p.up[v].len(), p.down[v].len());
        let mut image = vec![usize::MAX; self.len()];
        let mut used = vec![false; other.len()];
        fn go(
            a: &Poset,
            b: &Poset,
            v: usize,
            image: &mut Vec<usize>,
            used: &mut Vec<bool>,
            sig: &dyn Fn(&Poset, usize) -> (usize, usize),
        ) -> bool {
            if v == a.len() {
                return true;
            }
            for w in 0..b.len() {
                if used[w] || sig(a, v) != sig(b, w) {
                    continue;
                }
                let ok = (0..v).all(|u| {
                    a.less(u, v) == b.less(image[u], w) && a.less(v, u) == b.less(w, image[u])
                });
                if ok {
                    image[v] = w;
                    used[w] = true;
                    if go(a, b, v + 1, image, used, sig) {
                        return true;
                    }
                    used[w] = false;
                }
            }
            false
        }
        go(self, other, 0, &mut image, &mut used, &sig)
    }
}

/// A tree poset viewed from a root: the order `O_P` (root, then elements at
/// distance 1, then distance 2, …, ties by index), parents and orientation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedTree {
    pub root: usize,
    /// Elements in `O_P` order.
    pub order: Vec<usize>,
    /// Parent toward the root (`usize::MAX` for the root).
    pub parent: Vec<usize>,
    pub dist: Vec<usize>,
    /// Children in `O_P` order.
    pub children: Vec<Vec<usize>>,
    /// `upward[v]`: `v` lies above its parent.
    pub upward: Vec<bool>,
}

impl RootedTree {
    fn new(p: &Poset, root: usize) -> Result<RootedTree> {
        let dist: Vec<usize> = p
            .distances_from(root)
            .into_iter()
            .map(|d| d.ok_or(Error::Disconnected))
            .collect::<Result<_>>()?;
        let mut order: Vec<usize> = (0..p.len()).collect();
        order.sort_by_key(|&v| (dist[v], v));
        let mut parent = vec![usize::MAX; p.len()];
        let mut upward = vec![false; p.len()];
        let mut children = vec![Vec::new(); p.len()];
        for &v in &order {
            if v == root {
                continue;
            }
            let par = p
                .neighbours(v)
                .find(|&w| dist[w] + 1 == dist[v])
                .ok_or(Error::NotATree)?;
            parent[v] = par;
            upward[v] = p.less(par, v);
            children[par].push(v);
        }
        Ok(RootedTree {
            root,
            order,
            parent,
            dist,
            children,
            upward,
        })
    }

    pub fn depth(&self) -> usize {
        self.dist.iter().copied().max().unwrap_or(0)
    }

    /// Elements of the subtree hanging from `v`, including `v`.
    pub fn subtree(&self, v: usize) -> Vec<usize> {
        let mut out = vec![v];
        let mut i = 0;
        while i < out.len() {
            out.extend(self.children[out[i]].iter().copied());
            i += 1;
        }
        out
    }

    /// Path from the root down to `v`, inclusive.
    pub fn path_from_root(&self, v: usize) -> Vec<usize> {
        let mut path = vec![v];
        let mut cur = v;
        while self.parent[cur] != usize::MAX {
            cur = self.parent[cur];
            path.push(cur);
        }
        path.reverse();
        path
    }
}

/// Named posets. Every entry but the diamond is a tree poset.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CatalogName {
    /// `C_t`, labels `c1 < … < ct`.
    Chain(usize),
    /// `∧`: `a, x < c`.
    Wedge,
    /// `∨`, the dual of `∧`: `c < a, x`.
    Vee,
    /// `Y`: `a, x > c > d`.
    Y,
    /// `Y^d`: `a, x < c < d`.
    Yd,
    /// `S`: `a > b < x < d > e`.
    S,
    /// `S⁺`: `a > b < x < d < f`, `d > e`.
    SPlus,
    /// `S⁺⁺`: `S⁺` with `g < b`.
    SPlusPlus,
    /// `N`: `p1 < q1 > p2 < q2`.
    N,
    /// `∨_t = P_{t,2}`.
    Fork(usize),
    /// `P_{t,h}`: upward monotone `t`-ary tree of height `h`, root at the bottom.
    MonotoneTree(usize, usize),
    /// `D_k`: bottom `b`, `k` middle elements, top `t`.
    Diamond(usize),
}

/// A catalog poset together with its designated root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: CatalogName,
    pub poset: Poset,
    pub root: Option<usize>,
}

fn entry(name: CatalogName, elements: &[&str], covers: &[(&str, &str)], root: Option<&str>) -> CatalogEntry {
    let poset = Poset::build(elements, covers).expect("catalog entries are valid");
    let root = root.and_then(|r| poset.index_of(r));
    CatalogEntry { name, poset, root }
}

fn labelled(name: CatalogName, labels: Vec<String>, covers: Vec<(usize, usize)>, root: Option<usize>) -> CatalogEntry {
    let poset = Poset::from_indices(labels, covers).expect("catalog entries are valid");
    CatalogEntry { name, poset, root }
}

/// Builds a catalog poset.
pub fn catalog(name: CatalogName) -> Result<CatalogEntry> {
    use CatalogName::*;
    let bad = |what: &str| Err(Error::InvalidParameter(what.to_string()));
    Ok(match name {
        Chain(t) => {
            if t == 0 {
                return bad("chain length must be at least 1");
            }
            let labels = (1..=t).map(|i| format!("c{i}")).collect();
            let covers = (1..t).map(|i| (i - 1, i)).collect();
            labelled(name, labels, covers, Some(0))
        }
        Wedge => entry(name, &["a", "x", "c"], &[("a", "c"), ("x", "c")], Some("x")),
        Vee => entry(name, &["a", "x", "c"], &[("c", "a"), ("c", "x")], Some("x")),
        Y => entry(
            name,
            &["a", "x", "c", "d"],
            &[("c", "a"), ("c", "x"), ("d", "c")],
            Some("x"),
        ),
        Yd => entry(
            name,
            &["a", "x", "c", "d"],
            &[("a", "c"), ("x", "c"), ("c", "d")],
            Some("x"),
        ),
        S => entry(
            name,
            &["a", "b", "x", "d", "e"],
            &[("b", "a"), ("b", "x"), ("x", "d"), ("e", "d")],
            Some("x"),
        ),
        SPlus => entry(
            name,
            &["a", "b", "x", "d", "e", "f"],
            &[("b", "a"), ("b", "x"), ("x", "d"), ("d", "f"), ("e", "d")],
            Some("x"),
        ),
        SPlusPlus => entry(
            name,
            &["a", "b", "x", "d", "e", "f", "g"],
            &[("b", "a"), ("b", "x"), ("x", "d"), ("d", "f"), ("e", "d"), ("g", "b")],
            Some("x"),
        ),
        N => entry(
            name,
            &["p1", "p2", "q1", "q2"],
            &[("p1", "q1"), ("p2", "q1"), ("p2", "q2")],
            Some("p2"),
        ),
        Fork(t) => {
            if t == 0 {
                return bad("fork arity must be at least 1");
            }
            return catalog(MonotoneTree(t, 2)).map(|e| CatalogEntry { name, ..e });
        }
        MonotoneTree(t, h) => {
            if t == 0 || h == 0 {
                return bad("monotone tree needs arity and height at least 1");
            }
            let mut labels = vec![String::from("v")];
            let mut covers = Vec::new();
            let mut frontier = vec![0usize];
            for _ in 1..h {
                let mut next = Vec::new();
                for &p in &frontier {
                    for i in 1..=t {
                        let id = labels.len();
                        let label = format!("{}.{i}", labels[p]);
                        labels.push(label);
                        covers.push((p, id));
                        next.push(id);
                    }
                }
                frontier = next;
            }
            labelled(name, labels, covers, Some(0))
        }
        Diamond(k) => {
            if k == 0 {
                return bad("diamond width must be at least 1");
            }
            let mut labels = vec![String::from("b")];
            labels.extend((1..=k).map(|i| format!("m{i}")));
            labels.push(String::from("t"));
            let top = k + 1;
            let mut covers = Vec::new();
            for i in 1..=k {
                covers.push((0, i));
                covers.push((i, top));
            }
            labelled(name, labels, covers, None)
        }
    })
}

/// Parses `chain:t`, `wedge`, `vee`, `y`, `yd`, `s`, `splus`, `spp`, `n`,
/// `fork:t`, `tree:t,h`, `diamond:k`.
pub fn parse_catalog_name(text: &str) -> Result<CatalogName> {
    let text = text.trim();
    let (head, arg) = match text.split_once(':') {
        Some((h, a)) => (h, Some(a)),
        None => (text, None),
    };
    let unknown = || Error::UnknownPattern(text.to_string());
    let num = |s: &str| s.trim().parse::<usize>().map_err(|_| unknown());
    use CatalogName::*;
    Ok(match (head.to_ascii_lowercase().as_str(), arg) {
        ("chain", Some(a)) => Chain(num(a)?),
        ("antichain", None) => Chain(2),
        ("wedge", None) => Wedge,
        ("vee", None) => Vee,
        ("y", None) => Y,
        ("yd", None) => Yd,
        ("s", None) => S,
        ("splus", None) => SPlus,
        ("spp", None) | ("splusplus", None) => SPlusPlus,
        ("n", None) => N,
        ("fork", Some(a)) => Fork(num(a)?),
        ("tree", Some(a)) => {
            let (t, h) = a.split_once(',').ok_or_else(unknown)?;
            MonotoneTree(num(t)?, num(h)?)
        }
        ("diamond", Some(a)) => Diamond(num(a)?),
        ("diamond", None) => Diamond(2),
        _ => return Err(unknown()),
    })
}

/// Whether the branch of `p` hanging from `a` (rooted tree `rt`) maps
/// injectively onto a subtree hanging from `b`, preserving cover directions.
fn branch_embeds(p: &Poset, rt: &RootedTree, a: usize, b: usize, used: &mut Vec<bool>) -> bool {
    let kids_a = &rt.children[a];
    fn assign(
        p: &Poset,
        rt: &RootedTree,
        kids_a: &[usize],
        i: usize,
        b: usize,
        used: &mut Vec<bool>,
    ) -> bool {
        if i == kids_a.len() {
            return true;
        }
        let ka = kids_a[i];
        for &kb in &rt.children[b] {
            if used[kb] || rt.upward[kb] != rt.upward[ka] {
                continue;
            }
            used[kb] = true;
            let snapshot = used.clone();
            if branch_embeds(p, rt, ka, kb, used) && assign(p, rt, kids_a, i + 1, b, used) {
                return true;
            }
            *used = snapshot;
            used[kb] = false;
        }
        false
    }
    assign(p, rt, kids_a, 0, b, used)
}

/// One reduction move, if any applies.
fn reduction_step(p: &Poset, root: usize) -> Result<Option<Vec<usize>>> {
    let rt = p.rooted(root)?;
    let leaves: Vec<usize> = (0..p.len()).filter(|&v| v != root && p.degree(v) == 1).collect();
    // Move 1: drop a leaf path dominated by a sibling path of at least the same length.
    let mut best: Option<(&str, &str, Vec<usize>)> = None;
    for &v in &leaves {
        let pv = rt.path_from_root(v);
        for &u in &leaves {
            if u == v {
                continue;
            }
            let pu = rt.path_from_root(u);
            let common = pv.iter().zip(&pu).take_while(|(a, b)| a == b).count();
            let k = pv.len() - common;
            let l = pu.len() - common;
            if k == 0 || k > l {
                continue;
            }
            let vs = &pv[common..];
            let us = &pu[common..];
            let same_orientation = (0..k).all(|i| rt.upward[vs[i]] == rt.upward[us[i]]);
            let inner_degree_two = vs[..k - 1].iter().all(|&w| p.degree(w) == 2);
            if !(same_orientation && inner_degree_two) {
                continue;
            }
            let key = (p.label(v), p.label(u));
            if best.as_ref().is_none_or(|(bv, bu, _)| key < (*bv, *bu)) {
                best = Some((key.0, key.1, vs.to_vec()));
            }
        }
    }
    if let Some((_, _, removed)) = best {
        return Ok(Some(removed));
    }
    // Move 2: drop a root branch that embeds into another root branch.
    let branches = &rt.children[root];
    let mut best: Option<(&str, usize)> = None;
    for &y1 in branches {
        for &y2 in branches {
            if y1 == y2 || rt.upward[y1] != rt.upward[y2] {
                continue;
            }
            let mut used = vec![false; p.len()];
            used[y2] = true;
            if branch_embeds(p, &rt, y1, y2, &mut used) {
                let key = p.label(y1);
                if best.is_none_or(|(bk, _)| key < bk) {
                    best = Some((key, y1));
                }
            }
        }
    }
    Ok(best.map(|(_, y1)| rt.subtree(y1)))
}

/// Applies both reduction moves until neither applies.
///
/// Moves are chosen deterministically: the leaf-path move with the smallest
/// (removed leaf, dominating leaf) label pair first, then the branch move
/// whose attachment label is smallest. Degree conditions are read in the
/// current poset.
pub fn reduce_equiv(poset: &Poset, root: usize) -> Result<Poset> {
    if root >= poset.len() {
        return Err(Error::UnknownElement(format!("#{root}")));
    }
    let mut current = poset.clone();
    let mut root_label = poset.label(root).to_string();
    loop {
        let r = current.index_of(&root_label).expect("root is never removed");
        match reduction_step(&current, r)? {
            None => return Ok(current),
            Some(removed) => {
                let keep: Vec<usize> = (0..current.len()).filter(|v| !removed.contains(v)).collect();
                current = current.restrict(&keep);
                root_label = current.label(current.index_of(&root_label).expect("root kept")).to_string();
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use CatalogName::*;

    fn cat(name: CatalogName) -> Poset {
        catalog(name).unwrap().poset
    }

    #[test]
    fn build_examples() {
        let c2 = Poset::build(&["a", "b"], &[("a", "b")]).unwrap();
        assert_eq!(c2.height(), 2);
        assert!(matches!(
            Poset::build(&["a", "b"], &[("a", "b"), ("b", "a")]),
            Err(Error::Cycle(_))
        ));
        assert_eq!(
            Poset::build(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("a", "c")]),
            Err(Error::ImpliedCover {
                lower: "a".into(),
                upper: "c".into()
            })
        );
        assert_eq!(
            Poset::build_tree(&["a", "b", "c"], &[("a", "b")]),
            Err(Error::Disconnected)
        );
        assert!(matches!(
            Poset::build(&["a"], &[("a", "z")]),
            Err(Error::UnknownElement(_))
        ));
    }

    #[test]
    fn heights() {
        for t in 1..6 {
            assert_eq!(cat(Chain(t)).height(), t);
        }
        assert_eq!(cat(Wedge).height(), 2);
        assert_eq!(cat(SPlus).height(), 4);
        assert_eq!(cat(SPlusPlus).height(), 5);
        assert_eq!(cat(Diamond(2)).height(), 3);
    }

    #[test]
    fn radius_examples() {
        let n = cat(N);
        assert_eq!(n.radius_and_centers().unwrap().0, 2);
        let (r, c) = cat(Chain(2)).radius_and_centers().unwrap();
        assert_eq!((r, c), (1, vec![0, 1]));
        let (r, c) = cat(Chain(5)).radius_and_centers().unwrap();
        assert_eq!((r, c), (2, vec![2]));
        assert_eq!(cat(Diamond(2)).radius_and_centers(), Err(Error::NotATree));
    }

    #[test]
    fn duals() {
        assert!(cat(Wedge).dual().is_isomorphic(&cat(Vee)));
        assert!(cat(Y).dual().is_isomorphic(&cat(Yd)));
        assert!(cat(Chain(4)).dual().is_isomorphic(&cat(Chain(4))));
        let s = cat(SPlusPlus);
        assert_eq!(s.dual().dual(), s);
    }

    #[test]
    fn catalog_shapes() {
        let spp = cat(SPlusPlus);
        assert_eq!(spp.len(), 7);
        assert_eq!(spp.covers().len(), 6);
        assert_eq!(cat(Diamond(2)).len(), 4);
        assert_eq!(cat(Fork(2)).len(), 3);
        assert!(cat(Fork(2)).is_isomorphic(&cat(Vee)));
        assert_eq!(cat(MonotoneTree(2, 3)).len(), 7);
        assert!(catalog(Chain(0)).is_err());
        assert_eq!(parse_catalog_name("tree:3,2").unwrap(), MonotoneTree(3, 2));
        assert!(parse_catalog_name("bogus").is_err());
    }

    #[test]
    fn rooted_order_is_by_distance() {
        let p = cat(SPlus);
        let rt = p.rooted(p.index_of("x").unwrap()).unwrap();
        let labels: Vec<&str> = rt.order.iter().map(|&v| p.label(v)).collect();
        assert_eq!(labels, ["x", "b", "d", "a", "e", "f"]);
        assert!(!rt.upward[p.index_of("b").unwrap()]);
        assert!(rt.upward[p.index_of("f").unwrap()]);
    }

    #[test]
    fn reduce_removes_duplicate_leg() {
        let p = Poset::build(&["a1", "a2", "x", "c"], &[("a1", "c"), ("a2", "c"), ("x", "c")]).unwrap();
        let r = reduce_equiv(&p, p.index_of("x").unwrap()).unwrap();
        assert_eq!(r.len(), 3);
        assert!(r.is_isomorphic(&cat(Wedge)));
    }

    #[test]
    fn reduced_catalog_posets_are_fixed_points() {
        for name in [Wedge, Vee, Y, Yd, S, SPlus, SPlusPlus] {
            let e = catalog(name).unwrap();
            let r = reduce_equiv(&e.poset, e.root.unwrap()).unwrap();
            assert_eq!(r, e.poset, "{name:?}");
        }
    }

    #[test]
    fn reduce_drops_embeddable_branch() {
        // Two upward branches from x: x<c1>a1 and x<c2; the second embeds in the first.
        let p = Poset::build(&["x", "c1", "a1", "c2"], &[("x", "c1"), ("a1", "c1"), ("x", "c2")]).unwrap();
        let r = reduce_equiv(&p, 0).unwrap();
        assert!(r.is_isomorphic(&cat(Wedge)));
        assert_eq!(r.label(0), "x");
    }
}
