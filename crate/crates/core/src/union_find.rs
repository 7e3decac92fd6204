/// Disjoint-set forest with union by rank and path compression.
#[derive(Debug, Clone)]
pub struct DisjointSet {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl DisjointSet {
    pub fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            rank: vec![0; n],
        }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    /// Root lookup without compressing the path.
    pub fn root(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    #[inline]
    pub fn is_root(&self, x: usize) -> bool {
        self.parent[x] == x
    }

    /// Joins the sets of two distinct roots and returns the surviving root.
    /// Higher rank wins; on equal rank the smaller index survives.
    pub fn link(&mut self, a: usize, b: usize) -> usize {
        debug_assert!(self.is_root(a) && self.is_root(b) && a != b);
        let (win, lose) = match self.rank[a].cmp(&self.rank[b]) {
            std::cmp::Ordering::Greater => (a, b),
            std::cmp::Ordering::Less => (b, a),
            std::cmp::Ordering::Equal => {
                let (w, l) = if a < b { (a, b) } else { (b, a) };
                self.rank[w] += 1;
                (w, l)
            }
        };
        self.parent[lose] = win;
        win
    }

    /// Unions the sets containing `a` and `b`. Returns `false` if they were
    /// already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.link(ra, rb);
        true
    }
}
