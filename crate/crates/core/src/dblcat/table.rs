/// A partial binary operation on `0..n`, stored densely.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table {
    n: usize,
    cells: Vec<u32>,
}

const NONE: u32 = u32::MAX;

impl Table {
    pub fn new(n: usize) -> Self {
        Table {
            n,
            cells: vec![NONE; n * n],
        }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, a: usize, b: usize) -> Option<usize> {
        match self.cells[a * self.n + b] {
            NONE => None,
            c => Some(c as usize),
        }
    }

    pub fn set(&mut self, a: usize, b: usize, c: usize) {
        self.cells[a * self.n + b] = c as u32;
    }

    pub fn clear(&mut self, a: usize, b: usize) {
        self.cells[a * self.n + b] = NONE;
    }

    /// Defined entries `(a, b, a*b)` in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.cells.iter().enumerate().filter(|&(_i, &c)| c != NONE).map(|(i, &c)| (i / self.n, i % self.n, c as usize))
    }

    /// The same operation with its arguments swapped.
    pub fn transposed(&self) -> Table {
        let mut t = Table::new(self.n);
        for (a, b, c) in self.entries() {
            t.set(b, a, c);
        }
        t
    }
}
