//! Core representation of finite operations as value tables.
//!
//! Elements of the carrier are indices `0..m`; a [`Domain`] fixes the carrier
//! size together with two designated elements `zero` and `one`. An n-ary
//! [`Operation`] stores its full value table with the fixed tuple encoding
//! `index(x_1,..,x_n) = sum x_i * m^(n-i)`, i.e. `x_1` varies slowest.
//! All file formats and witnesses use this encoding.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// A carrier element, stored as its index.
pub type El = u8;

/// Largest supported carrier size (element indices must fit in [`El`]).
pub const MAX_DOMAIN_SIZE: usize = 256;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OpError {
    #[error("domain size must be at least 2, got {0}")]
    DomainTooSmall(usize),
    #[error("domain size must be at most {MAX_DOMAIN_SIZE}, got {0}")]
    DomainTooLarge(usize),
    #[error("designated elements must be distinct, both are {0}")]
    DesignatedEqual(El),
    #[error("element {element} out of range for domain of size {size}")]
    ElementOutOfRange { element: usize, size: usize },
    #[error("table length {got} does not match m^n = {expected}")]
    TableLength { expected: usize, got: usize },
    #[error("table for arity {arity} on domain of size {size} does not fit in memory")]
    TableTooBig { size: usize, arity: usize },
    #[error("tuple length {got} does not match arity {expected}")]
    TupleLength { expected: usize, got: usize },
    #[error("argument position {position} out of range 1..={arity}")]
    PositionOutOfRange { position: usize, arity: usize },
    #[error("expected {expected} inner operations, got {got}")]
    CompositionCount { expected: usize, got: usize },
    #[error("inner operations must share domain and arity")]
    CompositionMismatch,
    #[error("cannot compose a nullary operation; lift it to a constant instead")]
    NullaryComposition,
    #[error("section positions must be strictly increasing and in 1..={arity}")]
    BadSectionPositions { arity: usize },
    #[error("argument assignment must cover the prefix 1..={target}, position {missing} is missing")]
    AssignmentNotSurjective { target: usize, missing: usize },
    #[error("all operations must live on the same domain")]
    DomainMismatch,
}

/// A finite carrier of size `m >= 2` with designated elements `zero` and `one`.
///
/// Elements are the indices `0..m`. The designated elements default to the
/// indices 0 and 1 but may be any distinct pair, which is how carriers such
/// as `{0, a, 1}` are modeled (`0 -> 0`, `a -> 1`, `1 -> 2` with `zero = 0`,
/// `one = 2`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Domain {
    size: usize,
    zero: El,
    one: El,
}

impl Domain {
    pub fn new(size: usize, zero: El, one: El) -> Result<Self, OpError> {
        if size < 2 {
            return Err(OpError::DomainTooSmall(size));
        }
        if size > MAX_DOMAIN_SIZE {
            return Err(OpError::DomainTooLarge(size));
        }
        for e in [zero, one] {
            if e as usize >= size {
                return Err(OpError::ElementOutOfRange { element: e as usize, size });
            }
        }
        if zero == one {
            return Err(OpError::DesignatedEqual(zero));
        }
        Ok(Domain { size, zero, one })
    }

    /// Domain of size `m` with the default designated pair `0`, `1`.
    pub fn with_defaults(size: usize) -> Result<Self, OpError> {
        Domain::new(size, 0, 1)
    }

    /// The two-element domain `{0, 1}`.
    pub fn boolean() -> Self {
        Domain { size: 2, zero: 0, one: 1 }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn zero(&self) -> El {
        self.zero
    }

    pub fn one(&self) -> El {
        self.one
    }

    pub fn contains(&self, e: El) -> bool {
        (e as usize) < self.size
    }

    /// Iterator over all elements.
    pub fn elements(&self) -> impl Iterator<Item = El> + Clone {
        (0..self.size as u16).map(|e| e as El)
    }

    /// `m^arity`, the table length of an `arity`-ary operation.
    pub fn table_len(&self, arity: usize) -> Result<usize, OpError> {
        let arity32 = u32::try_from(arity)
            .map_err(|_| OpError::TableTooBig { size: self.size, arity })?;
        self.size
            .checked_pow(arity32)
            .ok_or(OpError::TableTooBig { size: self.size, arity })
    }
}

/// Encode a tuple into its table index: `x_1` is the most significant digit.
pub fn encode_tuple(domain: &Domain, tuple: &[El]) -> Result<usize, OpError> {
    let mut idx = 0usize;
    for &x in tuple {
        if !domain.contains(x) {
            return Err(OpError::ElementOutOfRange { element: x as usize, size: domain.size });
        }
        idx = idx * domain.size + x as usize;
    }
    Ok(idx)
}

/// Inverse of [`encode_tuple`]: decode `index` into an `arity`-tuple.
pub fn decode_index(domain: &Domain, arity: usize, index: usize) -> Vec<El> {
    let mut tuple = vec![0; arity];
    decode_index_into(domain, index, &mut tuple);
    tuple
}

/// In-place variant of [`decode_index`]; the tuple length gives the arity.
pub fn decode_index_into(domain: &Domain, index: usize, tuple: &mut [El]) {
    let mut v = index;
    for slot in tuple.iter_mut().rev() {
        *slot = (v % domain.size) as El;
        v /= domain.size;
    }
    debug_assert_eq!(v, 0, "index out of range for arity");
}

/// Advance `tuple` to the lexicographically next one; false on wrap-around.
pub(crate) fn next_tuple(domain: &Domain, tuple: &mut [El]) -> bool {
    let top = (domain.size - 1) as El;
    for slot in tuple.iter_mut().rev() {
        if *slot < top {
            *slot += 1;
            return true;
        }
        *slot = 0;
    }
    false
}

/// An n-ary operation on a finite domain, stored as a flat value table.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Operation {
    domain: Domain,
    arity: usize,
    table: Vec<El>,
}

impl Operation {
    /// Build an operation from its full value table.
    pub fn from_table(domain: Domain, arity: usize, table: Vec<El>) -> Result<Self, OpError> {
        let expected = domain.table_len(arity)?;
        if table.len() != expected {
            return Err(OpError::TableLength { expected, got: table.len() });
        }
        for &e in &table {
            if !domain.contains(e) {
                return Err(OpError::ElementOutOfRange { element: e as usize, size: domain.size });
            }
        }
        Ok(Operation { domain, arity, table })
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn table(&self) -> &[El] {
        &self.table
    }

    pub fn into_table(self) -> Vec<El> {
        self.table
    }

    /// Evaluate at a tuple, checking length and element range.
    pub fn evaluate(&self, tuple: &[El]) -> Result<El, OpError> {
        if tuple.len() != self.arity {
            return Err(OpError::TupleLength { expected: self.arity, got: tuple.len() });
        }
        Ok(self.table[encode_tuple(&self.domain, tuple)?])
    }

    /// Evaluate without validating; the tuple must be in range.
    #[inline]
    pub(crate) fn eval_unchecked(&self, tuple: &[El]) -> El {
        debug_assert_eq!(tuple.len(), self.arity);
        let mut idx = 0usize;
        for &x in tuple {
            debug_assert!(self.domain.contains(x));
            idx = idx * self.domain.size + x as usize;
        }
        self.table[idx]
    }

    /// True when the table takes a single value.
    pub fn is_constant(&self) -> bool {
        self.table.windows(2).all(|w| w[0] == w[1])
    }

    /// The projection `p^n_i(x_1,..,x_n) = x_i` (`i` is 1-based).
    pub fn projection(domain: Domain, arity: usize, i: usize) -> Result<Self, OpError> {
        if i == 0 || i > arity {
            return Err(OpError::PositionOutOfRange { position: i, arity });
        }
        let len = domain.table_len(arity)?;
        let mut table = vec![0; len];
        let mut tuple = vec![0; arity];
        for slot in table.iter_mut() {
            *slot = tuple[i - 1];
            next_tuple(&domain, &mut tuple);
        }
        Ok(Operation { domain, arity, table })
    }

    /// The constant operation of the given arity. Arity 0 yields a table of
    /// length 1, the nullary constant.
    pub fn constant(domain: Domain, arity: usize, value: El) -> Result<Self, OpError> {
        if !domain.contains(value) {
            return Err(OpError::ElementOutOfRange { element: value as usize, size: domain.size });
        }
        let len = domain.table_len(arity)?;
        Ok(Operation { domain, arity, table: vec![value; len] })
    }

    /// Pointwise composition `f(g_1,..,g_n)(x) = f(g_1(x),..,g_n(x))`.
    ///
    /// All inner operations must share this operation's domain and a common
    /// arity, which becomes the arity of the result.
    pub fn compose(&self, inners: &[Operation]) -> Result<Self, OpError> {
        if inners.len() != self.arity {
            return Err(OpError::CompositionCount { expected: self.arity, got: inners.len() });
        }
        let first = inners.first().ok_or(OpError::NullaryComposition)?;
        let result_arity = first.arity;
        for g in inners {
            if g.domain != self.domain {
                return Err(OpError::DomainMismatch);
            }
            if g.arity != result_arity {
                return Err(OpError::CompositionMismatch);
            }
        }
        let len = self.domain.table_len(result_arity)?;
        let mut table = vec![0; len];
        let mut args = vec![0; self.arity];
        for (idx, slot) in table.iter_mut().enumerate() {
            for (a, g) in args.iter_mut().zip(inners) {
                *a = g.table[idx];
            }
            *slot = self.eval_unchecked(&args);
        }
        Ok(Operation { domain: self.domain, arity: result_arity, table })
    }

    /// The section obtained by freezing all arguments outside `positions` at
    /// the values of `frozen`. `positions` lists the free argument positions
    /// (1-based, strictly increasing); the result's `k`-th argument is the
    /// `k`-th listed position.
    pub fn section(&self, positions: &[usize], frozen: &[El]) -> Result<Self, OpError> {
        if frozen.len() != self.arity {
            return Err(OpError::TupleLength { expected: self.arity, got: frozen.len() });
        }
        let increasing = positions.windows(2).all(|w| w[0] < w[1]);
        let in_range = positions.iter().all(|&p| p >= 1 && p <= self.arity);
        if !increasing || !in_range {
            return Err(OpError::BadSectionPositions { arity: self.arity });
        }
        let mut full: Vec<El> = frozen.to_vec();
        for &e in &full {
            if !self.domain.contains(e) {
                return Err(OpError::ElementOutOfRange { element: e as usize, size: self.domain.size });
            }
        }
        let arity = positions.len();
        let len = self.domain.table_len(arity)?;
        let mut table = vec![0; len];
        let mut free = vec![0; arity];
        for slot in table.iter_mut() {
            for (&p, &x) in positions.iter().zip(&free) {
                full[p - 1] = x;
            }
            *slot = self.eval_unchecked(&full);
            next_tuple(&self.domain, &mut free);
        }
        Ok(Operation { domain: self.domain, arity, table })
    }

    /// Whether the `k`-th argument is essential: some tuple `b` makes the
    /// `k`-section non-constant. Returns the lexicographically first such
    /// witness.
    pub fn essential_witness(&self, k: usize) -> Result<Option<Vec<El>>, OpError> {
        if k == 0 || k > self.arity {
            return Err(OpError::PositionOutOfRange { position: k, arity: self.arity });
        }
        // Tuples differing only at position k give the same section, so the
        // scan fixes b_k = 0; the first hit is still lexicographically first.
        let mut b = vec![0; self.arity];
        loop {
            let mut values = self.domain.elements().map(|x| {
                b[k - 1] = x;
                self.eval_unchecked(&b)
            });
            let first = values.next().expect("domain is nonempty");
            let non_constant = values.any(|v| v != first);
            b[k - 1] = 0;
            if non_constant {
                return Ok(Some(b));
            }
            // advance b over positions != k
            let mut advanced = false;
            for (i, slot) in b.iter_mut().enumerate().rev() {
                if i == k - 1 {
                    continue;
                }
                if (*slot as usize) < self.domain.size - 1 {
                    *slot += 1;
                    advanced = true;
                    break;
                }
                *slot = 0;
            }
            if !advanced {
                return Ok(None);
            }
        }
    }

    pub fn is_essential(&self, k: usize) -> Result<bool, OpError> {
        Ok(self.essential_witness(k)?.is_some())
    }

    /// Identify arguments according to `assignment`, which maps each of this
    /// operation's positions to a target position (1-based). The targets must
    /// cover a prefix `1..=m'`; the result has arity `m'` and satisfies
    /// `result(y_1,..,y_m') = self(y_{assignment[1]},..,y_{assignment[n]})`.
    pub fn identify_args(&self, assignment: &[usize]) -> Result<Self, OpError> {
        if assignment.len() != self.arity {
            return Err(OpError::TupleLength { expected: self.arity, got: assignment.len() });
        }
        let target = assignment.iter().copied().max().unwrap_or(0);
        for &t in assignment {
            if t == 0 {
                return Err(OpError::PositionOutOfRange { position: 0, arity: target });
            }
        }
        for want in 1..=target {
            if !assignment.contains(&want) {
                return Err(OpError::AssignmentNotSurjective { target, missing: want });
            }
        }
        let len = self.domain.table_len(target)?;
        let mut table = vec![0; len];
        let mut y = vec![0; target];
        let mut args = vec![0; self.arity];
        for slot in table.iter_mut() {
            for (a, &t) in args.iter_mut().zip(assignment) {
                *a = y[t - 1];
            }
            *slot = self.eval_unchecked(&args);
            next_tuple(&self.domain, &mut y);
        }
        Ok(Operation { domain: self.domain, arity: target, table })
    }
}
