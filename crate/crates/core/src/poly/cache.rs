use std::collections::HashMap;
use std::sync::{Mutex, RwLock};

use rug::{Float, Rational};

/// Append-only memo of an exact sequence. `step(prefix, n)` computes entry
/// `n` from entries `0..n`.
pub(crate) struct SeqCache {
    data: RwLock<Vec<Rational>>,
    step: fn(&[Rational], usize) -> Rational,
}

impl SeqCache {
    pub(crate) const fn new(step: fn(&[Rational], usize) -> Rational) -> Self {
        SeqCache { data: RwLock::new(Vec::new()), step }
    }

    pub(crate) fn get(&self, n: usize) -> Rational {
        if let Some(v) = self.data.read().unwrap().get(n) {
            return v.clone();
        }
        let mut data = self.data.write().unwrap();
        while data.len() <= n {
            let next = (self.step)(&data, data.len());
            data.push(next);
        }
        data[n].clone()
    }
}

/// Rounded copies of an exact sequence, one table per binary precision.
pub(crate) struct FloatTable {
    tables: Mutex<HashMap<u32, Vec<Float>>>,
}

impl FloatTable {
    pub(crate) fn new() -> Self {
        FloatTable { tables: Mutex::new(HashMap::new()) }
    }

    pub(crate) fn get(&self, n: usize, prec: u32, exact: impl Fn(usize) -> Rational) -> Float {
        let mut tables = self.tables.lock().unwrap();
        let t = tables.entry(prec).or_default();
        while t.len() <= n {
            let v = Float::with_val(prec, &exact(t.len()));
            t.push(v);
        }
        t[n].clone()
    }
}
