//! Bounded memo tables shared by the recursive deciders.

use std::hash::Hash;
use std::sync::Mutex;

use lru::LruCache;

/// Default entry bound for every memo table.
pub const DEFAULT_MEMO_CAPACITY: usize = 1 << 22;

/// Thread-safe LRU map. Capacity is enforced on insert so that large
/// bounds do not reserve memory up front.
pub struct MemoCache<K: Hash + Eq, V: Clone> {
    capacity: usize,
    inner: Mutex<LruCache<K, V>>,
}

impl<K: Hash + Eq, V: Clone> MemoCache<K, V> {
    pub fn new(capacity: usize) -> Self {
        MemoCache { capacity: capacity.max(1), inner: Mutex::new(LruCache::unbounded()) }
    }

    pub fn get(&self, key: &K) -> Option<V> {
        self.inner.lock().unwrap().get(key).cloned()
    }

    pub fn insert(&self, key: K, value: V) {
        let mut inner = self.inner.lock().unwrap();
        inner.put(key, value);
        while inner.len() > self.capacity {
            inner.pop_lru();
        }
    }

    pub fn len(&self) -> usize {
        self.inner.lock().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl<K: Hash + Eq, V: Clone> Default for MemoCache<K, V> {
    fn default() -> Self {
        MemoCache::new(DEFAULT_MEMO_CAPACITY)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn evicts_least_recently_used() {
        let c = MemoCache::new(2);
        c.insert(1, "a");
        c.insert(2, "b");
        assert_eq!(c.get(&1), Some("a"));
        c.insert(3, "c");
        assert_eq!(c.get(&2), None);
        assert_eq!(c.get(&1), Some("a"));
        assert_eq!(c.len(), 2);
    }
}
