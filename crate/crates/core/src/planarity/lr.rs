//! Left-right planarity test with embedding extraction.
//!
//! Directed edges `v -> w` are indexed as `v * n + w`. The phases are the
//! usual ones: DFS orientation with lowpoints and nesting depths, the
//! constraint-stack test, sign resolution, and the embedding DFS that merges
//! back edges into the rotation of their target.

#[derive(Clone, Copy, Default, PartialEq, Eq, Debug)]
struct Interval {
    low: Option<usize>,
    high: Option<usize>,
}

impl Interval {
    fn is_empty(&self) -> bool {
        self.low.is_none() && self.high.is_none()
    }
}

#[derive(Clone, Copy, Debug)]
struct ConflictPair {
    id: usize,
    left: Interval,
    right: Interval,
}

impl ConflictPair {
    fn swap(&mut self) {
        std::mem::swap(&mut self.left, &mut self.right);
    }
}

const NIL: usize = usize::MAX;

struct State<'a> {
    n: usize,
    adj: &'a [Vec<usize>],
    height: Vec<usize>,
    parent_edge: Vec<usize>,
    oriented: Vec<bool>,
    out: Vec<Vec<usize>>,
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting: Vec<i64>,
    reference: Vec<usize>,
    side: Vec<i8>,
    stack: Vec<ConflictPair>,
    next_id: usize,
    stack_bottom: Vec<Option<usize>>,
    lowpt_edge: Vec<usize>,
    roots: Vec<usize>,
}

/// Rotation per vertex (clockwise successor order), or `None` when the
/// graph is not planar. With `embed == false` a planar verdict returns an
/// empty rotation list.
pub(crate) fn lr_planarity(adj: &[Vec<usize>], embed: bool) -> Option<Vec<Vec<usize>>> {
    let n = adj.len();
    let e: usize = adj.iter().map(Vec::len).sum::<usize>() / 2;
    if n > 2 && e > 3 * n - 6 {
        return None;
    }
    let ne = n * n;
    let mut s = State {
        n,
        adj,
        height: vec![NIL; n],
        parent_edge: vec![NIL; n],
        oriented: vec![false; ne],
        out: vec![Vec::new(); n],
        lowpt: vec![0; ne],
        lowpt2: vec![0; ne],
        nesting: vec![0; ne],
        reference: vec![NIL; ne],
        side: vec![1; ne],
        stack: Vec::new(),
        next_id: 0,
        stack_bottom: vec![None; ne],
        lowpt_edge: vec![NIL; ne],
        roots: Vec::new(),
    };
    for v in 0..n {
        if s.height[v] == NIL {
            s.height[v] = 0;
            s.roots.push(v);
            s.orient(v);
        }
    }
    for v in 0..n {
        let nest = &s.nesting;
        s.out[v].sort_by_key(|&w| nest[v * n + w]);
    }
    for i in 0..s.roots.len() {
        let r = s.roots[i];
        if !s.test(r) {
            return None;
        }
    }
    if !embed {
        return Some(Vec::new());
    }
    Some(s.embed())
}

impl State<'_> {
    fn orient(&mut self, v: usize) {
        let n = self.n;
        let e = self.parent_edge[v];
        for &w in &self.adj[v] {
            if self.oriented[v * n + w] || self.oriented[w * n + v] {
                continue;
            }
            let vw = v * n + w;
            self.oriented[vw] = true;
            self.out[v].push(w);
            self.lowpt[vw] = self.height[v];
            self.lowpt2[vw] = self.height[v];
            if self.height[w] == NIL {
                self.parent_edge[w] = vw;
                self.height[w] = self.height[v] + 1;
                self.orient(w);
            } else {
                self.lowpt[vw] = self.height[w];
            }
            self.nesting[vw] = 2 * self.lowpt[vw] as i64;
            if self.lowpt2[vw] < self.height[v] {
                self.nesting[vw] += 1;
            }
            if e != NIL {
                if self.lowpt[vw] < self.lowpt[e] {
                    self.lowpt2[e] = self.lowpt[e].min(self.lowpt2[vw]);
                    self.lowpt[e] = self.lowpt[vw];
                } else if self.lowpt[vw] > self.lowpt[e] {
                    self.lowpt2[e] = self.lowpt2[e].min(self.lowpt[vw]);
                } else {
                    self.lowpt2[e] = self.lowpt2[e].min(self.lowpt2[vw]);
                }
            }
        }
    }

    fn top_id(&self) -> Option<usize> {
        self.stack.last().map(|p| p.id)
    }

    fn push(&mut self, left: Interval, right: Interval) {
        let id = self.next_id;
        self.next_id += 1;
        self.stack.push(ConflictPair { id, left, right });
    }

    fn conflicting(&self, i: &Interval, b: usize) -> bool {
        match i.high {
            Some(h) => self.lowpt[h] > self.lowpt[b],
            None => false,
        }
    }

    fn lowest(&self, p: &ConflictPair) -> usize {
        match (p.left.low, p.right.low) {
            (None, Some(r)) => self.lowpt[r],
            (Some(l), None) => self.lowpt[l],
            (Some(l), Some(r)) => self.lowpt[l].min(self.lowpt[r]),
            (None, None) => unreachable!("empty conflict pair on the stack"),
        }
    }

    fn test(&mut self, v: usize) -> bool {
        let n = self.n;
        let e = self.parent_edge[v];
        let children = self.out[v].clone();
        for (idx, &w) in children.iter().enumerate() {
            let ei = v * n + w;
            self.stack_bottom[ei] = self.top_id();
            if ei == self.parent_edge[w] {
                if !self.test(w) {
                    return false;
                }
            } else {
                self.lowpt_edge[ei] = ei;
                self.push(Interval::default(), Interval { low: Some(ei), high: Some(ei) });
            }
            if self.lowpt[ei] < self.height[v] {
                if idx == 0 {
                    self.lowpt_edge[e] = self.lowpt_edge[ei];
                } else if !self.add_constraints(ei, e) {
                    return false;
                }
            }
        }
        if e != NIL {
            self.remove_back_edges(e);
        }
        true
    }

    fn add_constraints(&mut self, ei: usize, e: usize) -> bool {
        let mut p_left = Interval::default();
        let mut p_right = Interval::default();
        loop {
            let mut q = self.stack.pop().expect("constraint stack underflow");
            if !q.left.is_empty() {
                q.swap();
            }
            if !q.left.is_empty() {
                return false;
            }
            let qlow = q.right.low.expect("nonempty right interval");
            if self.lowpt[qlow] > self.lowpt[e] {
                if p_right.is_empty() {
                    p_right = q.right;
                } else {
                    self.reference[p_right.low.unwrap()] = q.right.high.unwrap_or(NIL);
                }
                p_right.low = q.right.low;
            } else {
                self.reference[qlow] = self.lowpt_edge[e];
            }
            if self.top_id() == self.stack_bottom[ei] {
                break;
            }
        }
        loop {
            let Some(top) = self.stack.last() else { break };
            if !(self.conflicting(&top.left, ei) || self.conflicting(&top.right, ei)) {
                break;
            }
            let mut q = self.stack.pop().unwrap();
            if self.conflicting(&q.right, ei) {
                q.swap();
            }
            if self.conflicting(&q.right, ei) {
                return false;
            }
            if p_right.is_empty() {
                p_right = q.right;
            } else {
                if let Some(low) = p_right.low {
                    self.reference[low] = q.right.high.unwrap_or(NIL);
                }
                if q.right.low.is_some() {
                    p_right.low = q.right.low;
                }
            }
            if p_left.is_empty() {
                p_left = q.left;
            } else {
                self.reference[p_left.low.unwrap()] = q.left.high.unwrap_or(NIL);
            }
            p_left.low = q.left.low;
        }
        if !(p_left.is_empty() && p_right.is_empty()) {
            self.push(p_left, p_right);
        }
        true
    }

    fn remove_back_edges(&mut self, e: usize) {
        let n = self.n;
        let u = e / n;
        while let Some(top) = self.stack.last() {
            if self.lowest(top) != self.height[u] {
                break;
            }
            let p = self.stack.pop().unwrap();
            if let Some(l) = p.left.low {
                self.side[l] = -1;
            }
        }
        if let Some(mut p) = self.stack.pop() {
            while let Some(h) = p.left.high {
                if h % n != u {
                    break;
                }
                p.left.high = opt(self.reference[h]);
            }
            if p.left.high.is_none() {
                if let Some(l) = p.left.low {
                    self.reference[l] = p.right.low.unwrap_or(NIL);
                    self.side[l] = -1;
                    p.left.low = None;
                }
            }
            while let Some(h) = p.right.high {
                if h % n != u {
                    break;
                }
                p.right.high = opt(self.reference[h]);
            }
            if p.right.high.is_none() {
                if let Some(r) = p.right.low {
                    self.reference[r] = p.left.low.unwrap_or(NIL);
                    self.side[r] = -1;
                    p.right.low = None;
                }
            }
            self.stack.push(p);
        }
        if self.lowpt[e] < self.height[u] {
            let top = self.stack.last().expect("return edge implies a pending pair");
            let (hl, hr) = (top.left.high, top.right.high);
            self.reference[e] = match (hl, hr) {
                (Some(l), Some(r)) if self.lowpt[l] > self.lowpt[r] => l,
                (Some(l), None) => l,
                (_, r) => r.unwrap_or(NIL),
            };
        }
    }

    fn sign(&mut self, e: usize) -> i8 {
        let mut chain = vec![e];
        while self.reference[*chain.last().unwrap()] != NIL {
            let next = self.reference[*chain.last().unwrap()];
            chain.push(next);
        }
        // resolve from the far end back toward e
        for i in (0..chain.len() - 1).rev() {
            let (a, b) = (chain[i], chain[i + 1]);
            self.side[a] *= self.side[b];
            self.reference[a] = NIL;
        }
        self.side[e]
    }

    fn embed(mut self) -> Vec<Vec<usize>> {
        let n = self.n;
        for v in 0..n {
            for i in 0..self.out[v].len() {
                let w = self.out[v][i];
                let vw = v * n + w;
                let s = self.sign(vw) as i64;
                self.nesting[vw] *= s;
            }
        }
        let mut rot = Rotation::new(n);
        for v in 0..n {
            let nest = &self.nesting;
            self.out[v].sort_by_key(|&w| nest[v * n + w]);
            let mut prev = NIL;
            for &w in &self.out[v] {
                rot.add_cw(v, w, prev);
                prev = w;
            }
        }
        let mut left_ref = vec![NIL; n];
        let mut right_ref = vec![NIL; n];
        for i in 0..self.roots.len() {
            let r = self.roots[i];
            self.embed_dfs(r, &mut rot, &mut left_ref, &mut right_ref);
        }
        rot.into_lists()
    }

    fn embed_dfs(&self, v: usize, rot: &mut Rotation, left_ref: &mut [usize], right_ref: &mut [usize]) {
        let n = self.n;
        for &w in &self.out[v] {
            let ei = v * n + w;
            if ei == self.parent_edge[w] {
                rot.add_first(w, v);
                left_ref[v] = w;
                right_ref[v] = w;
                self.embed_dfs(w, rot, left_ref, right_ref);
            } else if self.side[ei] == 1 {
                rot.add_cw(w, v, right_ref[w]);
            } else {
                rot.add_ccw(w, v, left_ref[w]);
                left_ref[w] = v;
            }
        }
    }
}

fn opt(e: usize) -> Option<usize> {
    (e != NIL).then_some(e)
}

/// Doubly linked cyclic neighbor orders, one per vertex.
struct Rotation {
    n: usize,
    cw: Vec<usize>,
    ccw: Vec<usize>,
    first: Vec<usize>,
}

impl Rotation {
    fn new(n: usize) -> Self {
        Rotation { n, cw: vec![NIL; n * n], ccw: vec![NIL; n * n], first: vec![NIL; n] }
    }

    fn add_cw(&mut self, v: usize, w: usize, reference: usize) {
        let n = self.n;
        if reference == NIL {
            self.cw[v * n + w] = w;
            self.ccw[v * n + w] = w;
            self.first[v] = w;
            return;
        }
        let after = self.cw[v * n + reference];
        self.cw[v * n + reference] = w;
        self.cw[v * n + w] = after;
        self.ccw[v * n + after] = w;
        self.ccw[v * n + w] = reference;
    }

    fn add_ccw(&mut self, v: usize, w: usize, reference: usize) {
        if reference == NIL {
            self.add_cw(v, w, NIL);
            return;
        }
        let before = self.ccw[v * self.n + reference];
        self.add_cw(v, w, before);
        if reference == self.first[v] {
            self.first[v] = w;
        }
    }

    fn add_first(&mut self, v: usize, w: usize) {
        let f = self.first[v];
        self.add_ccw(v, w, f);
    }

    /// Clockwise neighbor lists, each starting at the smallest neighbor.
    fn into_lists(self) -> Vec<Vec<usize>> {
        let n = self.n;
        (0..n)
            .map(|v| {
                let Some(start) = (0..n).find(|&w| self.cw[v * n + w] != NIL) else {
                    return Vec::new();
                };
                let mut list = vec![start];
                let mut cur = self.cw[v * n + start];
                while cur != start {
                    list.push(cur);
                    cur = self.cw[v * n + cur];
                }
                list
            })
            .collect()
    }
}
