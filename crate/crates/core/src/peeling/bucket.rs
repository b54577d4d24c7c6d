//! Bucketing structure keyed by k-clique count.
//!
//! Only a window of `width` consecutive buckets starting at `lo` is
//! materialized; vertices whose value lies past the window sit in an
//! unordered overflow list. When the window runs dry it is rebuilt around
//! the smallest overflow value. A value below `lo` slides the window down,
//! spilling the buckets that fall off its top into the overflow.

use std::collections::VecDeque;

use crate::graph::VertexId;

pub const DEFAULT_WINDOW: usize = 128;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Loc {
    Window,
    Overflow,
    Gone,
}

#[derive(Debug, Clone)]
pub struct BucketQueue {
    value: Vec<u64>,
    loc: Vec<Loc>,
    // index of the vertex inside its bucket or the overflow list
    pos: Vec<u32>,
    lo: u64,
    window: VecDeque<Vec<VertexId>>,
    // no window bucket below this slot is non-empty
    cursor: usize,
    overflow: Vec<VertexId>,
    len: usize,
}

impl BucketQueue {
    pub fn new(values: Vec<u64>) -> Self {
        Self::with_window(values, DEFAULT_WINDOW)
    }

    pub fn with_window(values: Vec<u64>, width: usize) -> Self {
        assert!(width > 0, "window must hold at least one bucket");
        let n = values.len();
        let lo = values.iter().copied().min().unwrap_or(0);
        let mut q = BucketQueue {
            value: values,
            loc: vec![Loc::Gone; n],
            pos: vec![0; n],
            lo,
            window: (0..width).map(|_| Vec::new()).collect(),
            cursor: 0,
            overflow: Vec::new(),
            len: 0,
        };
        for v in 0..n as VertexId {
            q.insert(v);
        }
        q
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.loc[v as usize] != Loc::Gone
    }

    pub fn value(&self, v: VertexId) -> u64 {
        self.value[v as usize]
    }

    fn width(&self) -> u64 {
        self.window.len() as u64
    }

    fn insert(&mut self, v: VertexId) {
        let val = self.value[v as usize];
        if val < self.lo {
            self.slide_down(val);
        }
        let vi = v as usize;
        if val - self.lo < self.width() {
            let slot = (val - self.lo) as usize;
            let bucket = &mut self.window[slot];
            self.pos[vi] = bucket.len() as u32;
            bucket.push(v);
            self.loc[vi] = Loc::Window;
            self.cursor = self.cursor.min(slot);
        } else {
            self.pos[vi] = self.overflow.len() as u32;
            self.overflow.push(v);
            self.loc[vi] = Loc::Overflow;
        }
        self.len += 1;
    }

    fn detach(&mut self, v: VertexId) {
        let vi = v as usize;
        let at = self.pos[vi] as usize;
        let list = match self.loc[vi] {
            Loc::Window => &mut self.window[(self.value[vi] - self.lo) as usize],
            Loc::Overflow => &mut self.overflow,
            Loc::Gone => return,
        };
        list.swap_remove(at);
        if let Some(&moved) = list.get(at) {
            self.pos[moved as usize] = at as u32;
        }
        self.loc[vi] = Loc::Gone;
        self.len -= 1;
    }

    fn spill(&mut self, bucket: Vec<VertexId>) {
        for v in bucket {
            self.pos[v as usize] = self.overflow.len() as u32;
            self.loc[v as usize] = Loc::Overflow;
            self.overflow.push(v);
        }
    }

    fn slide_down(&mut self, new_lo: u64) {
        let shift = self.lo - new_lo;
        if shift >= self.width() {
            for slot in 0..self.window.len() {
                let bucket = std::mem::take(&mut self.window[slot]);
                self.spill(bucket);
            }
        } else {
            for _ in 0..shift {
                let top = self.window.pop_back().unwrap_or_default();
                self.spill(top);
                self.window.push_front(Vec::new());
            }
        }
        self.lo = new_lo;
        self.cursor = 0;
    }

    /// Re-centers the window on the smallest overflow value.
    fn refill(&mut self) {
        let Some(min) = self.overflow.iter().map(|&v| self.value[v as usize]).min() else {
            return;
        };
        self.lo = min;
        self.cursor = 0;
        let spilled = std::mem::take(&mut self.overflow);
        self.len -= spilled.len();
        for v in spilled {
            self.insert(v);
        }
    }

    /// Changes the value of a vertex still in the queue.
    pub fn update(&mut self, v: VertexId, value: u64) {
        if !self.contains(v) {
            self.value[v as usize] = value;
            return;
        }
        if self.value[v as usize] == value {
            return;
        }
        self.detach(v);
        self.value[v as usize] = value;
        self.insert(v);
    }

    /// Removes and returns every vertex holding the minimum value, sorted by
    /// id, together with that value.
    pub fn pop_min(&mut self) -> Option<(u64, Vec<VertexId>)> {
        if self.len == 0 {
            return None;
        }
        loop {
            while self.cursor < self.window.len() && self.window[self.cursor].is_empty() {
                self.cursor += 1;
            }
            if self.cursor < self.window.len() {
                break;
            }
            self.refill();
        }
        let slot = self.cursor;
        let mut batch = std::mem::take(&mut self.window[slot]);
        for &v in &batch {
            self.loc[v as usize] = Loc::Gone;
        }
        self.len -= batch.len();
        batch.sort_unstable();
        Some((self.lo + slot as u64, batch))
    }
}
