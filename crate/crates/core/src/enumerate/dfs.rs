/// A search tree over `u32` choice sequences, explored depth first with
/// choices in increasing order, which yields complete sequences in
/// lexicographic order.
pub(crate) trait SearchTree {
    /// Smallest admissible choice `>= from` extending `prefix`.
    fn next_choice(&self, prefix: &[u32], from: u32) -> Option<u32>;

    /// `prefix` is a complete object. Complete prefixes are never extended.
    fn is_complete(&self, prefix: &[u32]) -> bool;
}

pub(crate) struct Dfs<T> {
    tree: T,
    prefix: Vec<u32>,
    started: bool,
    done: bool,
}

impl<T: SearchTree> Dfs<T> {
    pub(crate) fn new(tree: T) -> Self {
        Dfs {
            tree,
            prefix: Vec::new(),
            started: false,
            done: false,
        }
    }

    pub(crate) fn tree(&self) -> &T {
        &self.tree
    }

    /// Moves to the next complete sequence.
    pub(crate) fn advance(&mut self) -> Option<&[u32]> {
        self.step().then_some(&self.prefix[..])
    }

    /// As [`Dfs::advance`], also lending the tree.
    pub(crate) fn advance_with_tree(&mut self) -> Option<(&T, &[u32])> {
        self.step().then_some((&self.tree, &self.prefix[..]))
    }

    fn step(&mut self) -> bool {
        if self.done {
            return false;
        }
        let mut backtrack = self.started;
        self.started = true;
        loop {
            if backtrack {
                let Some(last) = self.prefix.pop() else {
                    self.done = true;
                    return false;
                };
                if let Some(choice) = self.tree.next_choice(&self.prefix, last + 1) {
                    self.prefix.push(choice);
                    backtrack = false;
                }
            } else if self.tree.is_complete(&self.prefix) {
                return true;
            } else {
                match self.tree.next_choice(&self.prefix, 0) {
                    Some(choice) => self.prefix.push(choice),
                    None => backtrack = true,
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Binary strings of length `n` with no two adjacent ones.
    struct Fibonacci(usize);

    impl SearchTree for Fibonacci {
        fn next_choice(&self, prefix: &[u32], from: u32) -> Option<u32> {
            let max = if prefix.last() == Some(&1) { 0 } else { 1 };
            (from <= max).then_some(from)
        }

        fn is_complete(&self, prefix: &[u32]) -> bool {
            prefix.len() == self.0
        }
    }

    #[test]
    fn lexicographic_leaves() {
        let mut dfs = Dfs::new(Fibonacci(3));
        let mut seen = Vec::new();
        while let Some(leaf) = dfs.advance() {
            seen.push(leaf.to_vec());
        }
        assert_eq!(
            seen,
            vec![
                vec![0, 0, 0],
                vec![0, 0, 1],
                vec![0, 1, 0],
                vec![1, 0, 0],
                vec![1, 0, 1],
            ]
        );
        assert!(dfs.advance().is_none());
    }

    #[test]
    fn empty_prefix_can_be_complete() {
        let mut dfs = Dfs::new(Fibonacci(0));
        assert_eq!(dfs.advance(), Some(&[][..]));
        assert_eq!(dfs.advance(), None);
    }
}
