//! PQ-tree for the consecutive-ones property.
//!
//! Nodes live in an arena and every child keeps a parent pointer. A reduction
//! first bubbles up from the constrained leaves to find the pertinent subtree,
//! then applies the usual templates bottom-up, normalising every partial
//! Q-node so that its full children sit at the end.

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    Leaf(usize),
    P,
    Q,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Label {
    Empty,
    Full,
    Partial,
}

#[derive(Debug, Clone)]
struct Node {
    kind: Kind,
    children: Vec<usize>,
    parent: Option<usize>,
}

#[derive(Debug, Clone)]
pub(crate) struct PqTree {
    nodes: Vec<Node>,
    root: usize,
    leaves: Vec<usize>,
    // Per-reduction scratch, indexed by node and valid when `seen == stamp`.
    seen: Vec<u32>,
    count: Vec<usize>,
    label: Vec<Label>,
    marked_children: Vec<Vec<usize>>,
    stamp: u32,
}

impl PqTree {
    /// The universal tree over leaves `0..n`: one P-node holding all leaves.
    pub(crate) fn new(n: usize) -> Self {
        let mut t = PqTree {
            nodes: Vec::with_capacity(2 * n + 1),
            root: 0,
            leaves: Vec::with_capacity(n),
            seen: Vec::new(),
            count: Vec::new(),
            label: Vec::new(),
            marked_children: Vec::new(),
            stamp: 0,
        };
        for x in 0..n {
            let id = t.alloc(Kind::Leaf(x), Vec::new());
            t.leaves.push(id);
        }
        t.root = if n == 1 { t.leaves[0] } else { t.alloc(Kind::P, t.leaves.clone()) };
        t
    }

    fn alloc(&mut self, kind: Kind, children: Vec<usize>) -> usize {
        let id = self.nodes.len();
        for &c in &children {
            self.nodes[c].parent = Some(id);
        }
        self.nodes.push(Node { kind, children, parent: None });
        self.seen.push(0);
        self.count.push(0);
        self.label.push(Label::Empty);
        self.marked_children.push(Vec::new());
        id
    }

    fn touched(&self, x: usize) -> bool {
        self.seen[x] == self.stamp
    }

    fn label_of(&self, x: usize) -> Label {
        if self.touched(x) {
            self.label[x]
        } else {
            Label::Empty
        }
    }

    /// Leaves in frontier order.
    pub(crate) fn frontier(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.leaves.len());
        let mut stack = vec![self.root];
        while let Some(x) = stack.pop() {
            match self.nodes[x].kind {
                Kind::Leaf(v) => out.push(v),
                _ => stack.extend(self.nodes[x].children.iter().rev()),
            }
        }
        out
    }

    /// Restricts the tree to orderings where `set` is consecutive. Returns
    /// false, leaving the tree unusable, if no such ordering remains.
    pub(crate) fn reduce(&mut self, set: &[usize]) -> bool {
        if set.len() <= 1 || set.len() >= self.leaves.len() {
            return true;
        }
        self.stamp += 1;
        let top = self.bubble(set);
        let root = self.pertinent_root(top, set.len());
        let order = self.post_order(root);
        for x in order {
            if !self.apply(x, x == root) {
                return false;
            }
        }
        true
    }

    /// Marks every node between the constrained leaves and a common ancestor
    /// and returns that ancestor.
    fn bubble(&mut self, set: &[usize]) -> usize {
        let mut queue = std::collections::VecDeque::with_capacity(set.len());
        for &v in set {
            let x = self.leaves[v];
            self.touch(x);
            self.count[x] = 1;
            queue.push_back(x);
        }
        while queue.len() > 1 {
            let x = queue.pop_front().expect("non-empty");
            let Some(p) = self.nodes[x].parent else {
                // The tree root waits until every other branch has merged in.
                queue.push_back(x);
                continue;
            };
            if !self.touched(p) {
                self.touch(p);
                queue.push_back(p);
            }
            self.marked_children[p].push(x);
        }
        queue[0]
    }

    fn touch(&mut self, x: usize) {
        self.seen[x] = self.stamp;
        self.count[x] = 0;
        self.label[x] = Label::Empty;
        self.marked_children[x].clear();
    }

    /// Deepest marked node below `top` holding all `total` constrained leaves.
    fn pertinent_root(&mut self, top: usize, total: usize) -> usize {
        // Leaf counts, children before parents.
        let mut order = vec![top];
        let mut i = 0;
        while i < order.len() {
            let x = order[i];
            order.extend(self.marked_children[x].iter().copied());
            i += 1;
        }
        for &x in order.iter().rev() {
            if !matches!(self.nodes[x].kind, Kind::Leaf(_)) {
                self.count[x] = self.marked_children[x].iter().map(|&c| self.count[c]).sum();
            }
        }
        let mut x = top;
        while let Some(&c) = self.marked_children[x].iter().find(|&&c| self.count[c] == total) {
            x = c;
        }
        x
    }

    fn post_order(&self, root: usize) -> Vec<usize> {
        let mut order = vec![root];
        let mut i = 0;
        while i < order.len() {
            let x = order[i];
            order.extend(self.marked_children[x].iter().copied());
            i += 1;
        }
        order.reverse();
        order
    }

    /// Puts `new` where `old` hangs in the tree.
    fn replace(&mut self, old: usize, new: usize) {
        match self.nodes[old].parent {
            Some(p) => {
                let slot = self.nodes[p].children.iter().position(|&c| c == old).expect("child of its parent");
                self.nodes[p].children[slot] = new;
                self.nodes[new].parent = Some(p);
            }
            None => {
                self.root = new;
                self.nodes[new].parent = None;
            }
        }
        self.nodes[old].parent = None;
    }

    /// A single node standing for `group`: the child itself or a new P-node.
    fn group(&mut self, group: Vec<usize>) -> Option<usize> {
        match group.len() {
            0 => None,
            1 => Some(group[0]),
            _ => Some(self.alloc(Kind::P, group)),
        }
    }

    fn set_children(&mut self, x: usize, children: Vec<usize>) {
        for &c in &children {
            self.nodes[c].parent = Some(x);
        }
        self.nodes[x].children = children;
    }

    /// Children of a partial Q-node, empty end first.
    fn partial_children(&self, y: usize) -> Vec<usize> {
        debug_assert_eq!(self.nodes[y].kind, Kind::Q);
        self.nodes[y].children.clone()
    }

    fn mark(&mut self, x: usize, label: Label) {
        self.seen[x] = self.stamp;
        self.label[x] = label;
    }

    fn apply(&mut self, x: usize, is_root: bool) -> bool {
        match self.nodes[x].kind {
            Kind::Leaf(_) => {
                self.label[x] = Label::Full;
                true
            }
            Kind::P => self.apply_p(x, is_root),
            Kind::Q => self.apply_q(x, is_root),
        }
    }

    fn apply_p(&mut self, x: usize, is_root: bool) -> bool {
        let children = self.nodes[x].children.clone();
        let (mut empty, mut full, mut partial) = (Vec::new(), Vec::new(), Vec::new());
        for &c in &children {
            match self.label_of(c) {
                Label::Empty => empty.push(c),
                Label::Full => full.push(c),
                Label::Partial => partial.push(c),
            }
        }
        if partial.is_empty() && empty.is_empty() {
            self.mark(x, Label::Full);
            return true;
        }
        match (partial.len(), is_root) {
            (0, true) => {
                let f = self.group(full).expect("a root has pertinent children");
                empty.push(f);
                self.set_children(x, empty);
                true
            }
            (0, false) => {
                let e = self.group(empty).expect("checked above");
                let f = self.group(full).expect("a pertinent node has pertinent children");
                let q = self.alloc(Kind::Q, vec![e, f]);
                self.replace(x, q);
                self.mark(q, Label::Partial);
                true
            }
            (1, _) => {
                let y = partial[0];
                let mut ys = self.partial_children(y);
                if let Some(f) = self.group(full) {
                    ys.push(f);
                }
                if is_root {
                    self.set_children(y, ys);
                    if empty.is_empty() {
                        self.replace(x, y);
                    } else {
                        empty.push(y);
                        self.set_children(x, empty);
                    }
                } else {
                    let mut all = Vec::with_capacity(ys.len() + 1);
                    if let Some(e) = self.group(empty) {
                        all.push(e);
                    }
                    all.extend(ys);
                    self.set_children(y, all);
                    self.replace(x, y);
                    self.mark(y, Label::Partial);
                }
                true
            }
            (2, true) => {
                let (y1, y2) = (partial[0], partial[1]);
                let mut merged = self.partial_children(y1);
                if let Some(f) = self.group(full) {
                    merged.push(f);
                }
                merged.extend(self.partial_children(y2).into_iter().rev());
                self.set_children(y1, merged);
                self.nodes[y2].children.clear();
                if empty.is_empty() {
                    self.replace(x, y1);
                } else {
                    empty.push(y1);
                    self.set_children(x, empty);
                }
                true
            }
            _ => false,
        }
    }

    fn apply_q(&mut self, x: usize, is_root: bool) -> bool {
        let mut children = self.nodes[x].children.clone();
        let mut labels: Vec<Label> = children.iter().map(|&c| self.label_of(c)).collect();
        if labels.iter().all(|&l| l == Label::Full) {
            self.mark(x, Label::Full);
            return true;
        }
        let n = labels.len();
        let Some(mut first) = labels.iter().position(|&l| l != Label::Empty) else {
            return false;
        };
        let mut last = labels.iter().rposition(|&l| l != Label::Empty).expect("first exists");
        if labels[first..=last].contains(&Label::Empty) {
            return false;
        }
        let partial_at = |labels: &[Label], i: usize| labels[i] == Label::Partial;
        if (first + 1..last).any(|i| partial_at(&labels, i)) {
            return false;
        }
        if !is_root {
            // The block must end at the last child, with only its first child
            // possibly partial; otherwise try the mirror image.
            let fits = |labels: &[Label], first: usize, last: usize| {
                last == n - 1 && (first == last || !partial_at(labels, last))
            };
            if !fits(&labels, first, last) {
                children.reverse();
                labels.reverse();
                (first, last) = (n - 1 - last, n - 1 - first);
                if !fits(&labels, first, last) {
                    return false;
                }
            }
        }
        let mut out = Vec::with_capacity(n + 4);
        for (i, &c) in children.iter().enumerate() {
            if labels[i] != Label::Partial {
                out.push(c);
                continue;
            }
            // Empty side faces away from the block.
            let ys = self.partial_children(c);
            if i == first {
                out.extend(ys);
            } else {
                out.extend(ys.into_iter().rev());
            }
            self.nodes[c].children.clear();
        }
        self.set_children(x, out);
        if !is_root {
            self.mark(x, Label::Partial);
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn consecutive(order: &[usize], set: &[usize]) -> bool {
        let mut pos: Vec<usize> = set.iter().map(|&v| order.iter().position(|&x| x == v).unwrap()).collect();
        pos.sort_unstable();
        pos.windows(2).all(|w| w[1] == w[0] + 1)
    }

    #[test]
    fn chain_of_overlaps() {
        let mut t = PqTree::new(5);
        let sets = [vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 4]];
        for s in &sets {
            assert!(t.reduce(s));
        }
        let f = t.frontier();
        assert!(f == [0, 1, 2, 3, 4] || f == [4, 3, 2, 1, 0]);
    }

    #[test]
    fn cycle_is_rejected() {
        let mut t = PqTree::new(3);
        assert!(t.reduce(&[0, 1]));
        assert!(t.reduce(&[1, 2]));
        assert!(!t.reduce(&[0, 2]));
    }

    #[test]
    fn nested_sets() {
        let mut t = PqTree::new(6);
        let sets = [vec![0, 1, 2, 3], vec![1, 2], vec![2, 3, 4], vec![5, 0]];
        for s in &sets {
            assert!(t.reduce(s), "{s:?}");
        }
        let f = t.frontier();
        for s in &sets {
            assert!(consecutive(&f, s), "{f:?} {s:?}");
        }
    }
}
