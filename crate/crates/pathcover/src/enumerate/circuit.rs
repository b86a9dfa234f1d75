//! Resumable enumeration of the simple cycles through one anchor vertex.
//!
//! This is the classic blocked-search cycle enumerator, restated as an
//! iterator: the depth-first state lives in explicit frames, so the search
//! pauses after each emitted cycle and resumes on the next pull. Work per
//! emitted cycle stays polynomial in the subgraph size, and the retained
//! state is one path stack plus per-vertex bookkeeping.

/// Iterator over all simple cycles through `anchor` inside the subgraph
/// induced on `members`, emitted in closed form starting and ending at
/// the anchor.
///
/// Neighbor lists are scanned ascending, so emission order is
/// deterministic. Callers partition the cycle space by choosing members
/// and anchor: handing in a strongly connected component and its smallest
/// vertex yields each cycle exactly once, rooted at its smallest member.
pub(crate) struct CircuitIter {
    members: Vec<u32>,
    adj: Vec<Vec<u32>>,
    anchor: u32,
    blocked: Vec<bool>,
    block_list: Vec<Vec<u32>>,
    frames: Vec<Frame>,
    path: Vec<u32>,
    started: bool,
}

struct Frame {
    v: u32,
    cursor: usize,
    found: bool,
}

impl CircuitIter {
    /// `members` must be sorted ascending and contain `anchor_global`;
    /// `full_adj` is indexed by global vertex id.
    pub(crate) fn new(members: Vec<u32>, full_adj: &[Vec<u32>], anchor_global: u32) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        let local = |v: u32| members.binary_search(&v).ok().map(|i| i as u32);
        let adj: Vec<Vec<u32>> = members
            .iter()
            .map(|&m| {
                full_adj[m as usize]
                    .iter()
                    .filter_map(|&w| local(w))
                    .collect()
            })
            .collect();
        let anchor = local(anchor_global).expect("anchor must be a member") as u32;
        let n = members.len();
        CircuitIter {
            members,
            adj,
            anchor,
            blocked: vec![false; n],
            block_list: vec![Vec::new(); n],
            frames: Vec::new(),
            path: Vec::new(),
            started: false,
        }
    }

    /// Vertices currently on the search path.
    pub(crate) fn depth(&self) -> usize {
        self.path.len()
    }

    fn push_frame(&mut self, v: u32) {
        self.path.push(v);
        self.blocked[v as usize] = true;
        self.frames.push(Frame {
            v,
            cursor: 0,
            found: false,
        });
    }

    fn unblock(&mut self, v: u32) {
        let mut work = vec![v];
        while let Some(u) = work.pop() {
            if !self.blocked[u as usize] {
                continue;
            }
            self.blocked[u as usize] = false;
            let dependents = std::mem::take(&mut self.block_list[u as usize]);
            work.extend(dependents);
        }
    }

    fn emit(&self) -> Vec<u32> {
        let mut cycle: Vec<u32> = self
            .path
            .iter()
            .map(|&l| self.members[l as usize])
            .collect();
        cycle.push(self.members[self.anchor as usize]);
        debug_assert!(
            {
                let mut body = cycle[..cycle.len() - 1].to_vec();
                body.sort_unstable();
                body.windows(2).all(|w| w[0] < w[1])
            },
            "emitted cycle must be simple"
        );
        cycle
    }
}

impl Iterator for CircuitIter {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        if !self.started {
            self.started = true;
            self.push_frame(self.anchor);
        }
        while let Some(top) = self.frames.last_mut() {
            let v = top.v as usize;
            if top.cursor < self.adj[v].len() {
                let w = self.adj[v][top.cursor];
                top.cursor += 1;
                if w == self.anchor {
                    top.found = true;
                    return Some(self.emit());
                }
                if !self.blocked[w as usize] {
                    self.push_frame(w);
                }
            } else {
                let Frame { v, found, .. } = self.frames.pop().expect("frame present");
                if found {
                    self.unblock(v);
                } else {
                    for i in 0..self.adj[v as usize].len() {
                        let w = self.adj[v as usize][i];
                        if !self.block_list[w as usize].contains(&v) {
                            self.block_list[w as usize].push(v);
                        }
                    }
                }
                self.path.pop();
                if let Some(parent) = self.frames.last_mut() {
                    parent.found |= found;
                }
            }
        }
        None
    }
}
