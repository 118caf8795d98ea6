//! Finite bounded lattices with dense order, meet and join tables.
//!
//! A [`Lattice`] stores, for `n` elements indexed `0..n`, the full order
//! relation as an `n × n` boolean matrix together with precomputed meet and
//! join tables, its least element (`bottom`) and its greatest element (`top`).
//! Every element carries a display label; all algorithms work on indices and
//! use labels only for input/output. Values are immutable after construction,
//! so they can be shared freely.
//!
//! Construction from a cover relation ([`Lattice::from_covers`]) validates the
//! input completely: the covers must be acyclic, the declared bottom/top must
//! really be least/greatest, and every pair of elements must have a unique
//! greatest lower bound and least upper bound. There is no unchecked
//! constructor.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

/// Index of a lattice element (dense, `0..n`).
pub type Elem = usize;

/// Which extremal element a bound complaint refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundRole {
    Bottom,
    Top,
}

impl BoundRole {
    fn noun(self) -> &'static str {
        match self {
            BoundRole::Bottom => "bottom",
            BoundRole::Top => "top",
        }
    }

    fn superlative(self) -> &'static str {
        match self {
            BoundRole::Bottom => "least",
            BoundRole::Top => "greatest",
        }
    }
}

impl fmt::Display for BoundRole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.noun())
    }
}

/// Which binary bound failed to exist uniquely for a pair of elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    Meet,
    Join,
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundKind::Meet => "meet",
            BoundKind::Join => "join",
        })
    }
}

/// Errors raised while constructing or slicing lattices.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    /// Two elements were declared with the same label.
    #[error("duplicate element label `{0}`")]
    DuplicateLabel(String),
    /// A cover or bound referenced a label that was never declared.
    #[error("unknown element label `{0}`")]
    UnknownLabel(String),
    /// The cover relation is cyclic, so it is not the Hasse diagram of an
    /// order; the label lies on a cycle.
    #[error("cover relation has a cycle through `{0}`")]
    CycleInCovers(String),
    /// Some pair of elements lacks a unique greatest lower bound or least
    /// upper bound, so the order is not a lattice.
    #[error("elements `{a}` and `{b}` have no unique {kind}")]
    NotALattice { a: String, b: String, kind: BoundKind },
    /// The declared bottom (top) element is not below (above) every element.
    #[error("declared {role} `{label}` is not the {} element", role.superlative())]
    NotBounded { label: String, role: BoundRole },
    /// A top-level lattice must have at least two elements (`bottom ≠ top`).
    #[error("a lattice needs at least two elements (bottom must differ from top)")]
    Degenerate,
    /// `interval(lo, hi)` was asked for with `lo ≰ hi`.
    #[error("interval is empty: `{lo}` is not below `{hi}`")]
    EmptyInterval { lo: String, hi: String },
    /// A relation passed to [`Lattice::from_leq`] is not a partial order.
    #[error("relation is not a partial order: {0}")]
    NotPartialOrder(String),
    /// A relation passed to [`Lattice::from_leq`] has no least or greatest
    /// element.
    #[error("order has no {} element", role.superlative())]
    NoBound { role: BoundRole },
    /// The label table has the wrong length for the relation.
    #[error("expected {expected} labels, got {got}")]
    LabelCountMismatch { expected: usize, got: usize },
}

/// A finite bounded lattice: elements `0..n`, full order matrix, and
/// precomputed meet/join tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lattice {
    name: String,
    names: Vec<String>,
    n: usize,
    /// Row-major order matrix: `leq[a * n + b]` holds iff `a ≤ b`.
    leq: Vec<bool>,
    meet: Vec<Elem>,
    join: Vec<Elem>,
    bottom: Elem,
    top: Elem,
}

impl Lattice {
    /// Builds a lattice from labels and a cover relation.
    ///
    /// The order is the reflexive-transitive closure of `covers`; the declared
    /// `bottom` and `top` must be its least and greatest elements, every pair
    /// must have a unique meet and join, and `bottom ≠ top`.
    pub fn from_covers<S: AsRef<str>>(
        name: &str,
        labels: &[S],
        bottom: &str,
        top: &str,
        covers: &[(S, S)],
    ) -> Result<Self, LatticeError> {
        let n = labels.len();
        let mut index = HashMap::with_capacity(n);
        for (i, label) in labels.iter().enumerate() {
            let label = label.as_ref();
            if index.insert(label.to_owned(), i).is_some() {
                return Err(LatticeError::DuplicateLabel(label.to_owned()));
            }
        }
        let lookup = |label: &str| -> Result<Elem, LatticeError> {
            index
                .get(label)
                .copied()
                .ok_or_else(|| LatticeError::UnknownLabel(label.to_owned()))
        };

        if n < 2 {
            return Err(LatticeError::Degenerate);
        }
        let bottom = lookup(bottom)?;
        let top = lookup(top)?;

        let mut edges = vec![Vec::new(); n];
        let mut in_degree = vec![0usize; n];
        for (lo, hi) in covers {
            let lo = lookup(lo.as_ref())?;
            let hi = lookup(hi.as_ref())?;
            edges[lo].push(hi);
            in_degree[hi] += 1;
        }

        // Kahn's algorithm: if some element never reaches in-degree zero, the
        // cover relation is cyclic.
        let mut queue: Vec<Elem> = (0..n).filter(|&v| in_degree[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = queue.pop() {
            seen += 1;
            for &w in &edges[v] {
                in_degree[w] -= 1;
                if in_degree[w] == 0 {
                    queue.push(w);
                }
            }
        }
        if seen < n {
            let on_cycle = (0..n)
                .find(|&v| in_degree[v] > 0)
                .expect("some vertex retains positive in-degree on a cycle");
            return Err(LatticeError::CycleInCovers(labels[on_cycle].as_ref().to_owned()));
        }

        // Reflexive-transitive closure by DFS from every element.
        let mut leq = vec![false; n * n];
        for a in 0..n {
            let mut stack = vec![a];
            while let Some(v) = stack.pop() {
                if !leq[a * n + v] {
                    leq[a * n + v] = true;
                    stack.extend_from_slice(&edges[v]);
                }
            }
        }

        for x in 0..n {
            if !leq[bottom * n + x] {
                return Err(LatticeError::NotBounded {
                    label: labels[bottom].as_ref().to_owned(),
                    role: BoundRole::Bottom,
                });
            }
            if !leq[x * n + top] {
                return Err(LatticeError::NotBounded {
                    label: labels[top].as_ref().to_owned(),
                    role: BoundRole::Top,
                });
            }
        }

        let names: Vec<String> = labels.iter().map(|l| l.as_ref().to_owned()).collect();
        let (meet, join) = compute_tables(n, &leq, &names)?;
        Ok(Lattice { name: name.to_owned(), names, n, leq, meet, join, bottom, top })
    }

    /// Builds a lattice directly from an order matrix.
    ///
    /// Validates that `leq` is a partial order with least and greatest
    /// elements and unique meets/joins. Unlike [`Lattice::from_covers`] this
    /// accepts the one-element order, which arises as a degenerate interval
    /// and as the submodule lattice of a trivial module; such a value reports
    /// [`Lattice::is_degenerate`].
    pub fn from_leq(name: &str, names: Vec<String>, leq: Vec<bool>) -> Result<Self, LatticeError> {
        let n = names.len();
        if leq.len() != n * n {
            return Err(LatticeError::LabelCountMismatch { expected: leq.len(), got: n });
        }
        if n == 0 {
            return Err(LatticeError::NoBound { role: BoundRole::Bottom });
        }
        for a in 0..n {
            if !leq[a * n + a] {
                return Err(LatticeError::NotPartialOrder(format!(
                    "`{}` is not related to itself",
                    names[a]
                )));
            }
            for b in 0..n {
                if a != b && leq[a * n + b] && leq[b * n + a] {
                    return Err(LatticeError::NotPartialOrder(format!(
                        "`{}` and `{}` are below each other",
                        names[a], names[b]
                    )));
                }
                for c in 0..n {
                    if leq[a * n + b] && leq[b * n + c] && !leq[a * n + c] {
                        return Err(LatticeError::NotPartialOrder(format!(
                            "`{}` ≤ `{}` ≤ `{}` but not `{}` ≤ `{}`",
                            names[a], names[b], names[c], names[a], names[c]
                        )));
                    }
                }
            }
        }
        let bottom = (0..n)
            .find(|&b| (0..n).all(|x| leq[b * n + x]))
            .ok_or(LatticeError::NoBound { role: BoundRole::Bottom })?;
        let top = (0..n)
            .find(|&t| (0..n).all(|x| leq[x * n + t]))
            .ok_or(LatticeError::NoBound { role: BoundRole::Top })?;
        let (meet, join) = compute_tables(n, &leq, &names)?;
        Ok(Lattice { name: name.to_owned(), names, n, leq, meet, join, bottom, top })
    }

    /// Returns the same lattice under a different display name.
    #[must_use]
    pub fn with_name(mut self, name: &str) -> Self {
        self.name = name.to_owned();
        self
    }

    /// Number of elements.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Display name of the lattice.
    pub fn name(&self) -> &str {
        &self.name
    }

    /// Display labels in index order.
    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Label of one element.
    pub fn label(&self, e: Elem) -> &str {
        &self.names[e]
    }

    /// Index of the element with the given label, if any.
    pub fn index_of(&self, label: &str) -> Option<Elem> {
        self.names.iter().position(|l| l == label)
    }

    /// True when the lattice has a single element (`bottom = top`); such
    /// values only arise from degenerate intervals and trivial submodule
    /// lattices, and callers that require `bottom ≠ top` must branch on this.
    pub fn is_degenerate(&self) -> bool {
        self.n == 1
    }

    /// Iterator over all element indices.
    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.n
    }

    /// Whether `a ≤ b`.
    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        self.leq[a * self.n + b]
    }

    /// Whether `a < b`.
    pub fn lt(&self, a: Elem, b: Elem) -> bool {
        a != b && self.leq(a, b)
    }

    /// Whether `a ≤ b` or `b ≤ a`.
    pub fn comparable(&self, a: Elem, b: Elem) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }

    /// Greatest lower bound (table lookup).
    pub fn meet(&self, a: Elem, b: Elem) -> Elem {
        self.meet[a * self.n + b]
    }

    /// Least upper bound (table lookup).
    pub fn join(&self, a: Elem, b: Elem) -> Elem {
        self.join[a * self.n + b]
    }

    /// Join of an arbitrary set of elements; the empty join is `bottom`.
    pub fn join_all<I: IntoIterator<Item = Elem>>(&self, elems: I) -> Elem {
        elems.into_iter().fold(self.bottom, |acc, e| self.join(acc, e))
    }

    /// Meet of an arbitrary set of elements; the empty meet is `top`.
    pub fn meet_all<I: IntoIterator<Item = Elem>>(&self, elems: I) -> Elem {
        elems.into_iter().fold(self.top, |acc, e| self.meet(acc, e))
    }

    /// Least element.
    pub fn bottom(&self) -> Elem {
        self.bottom
    }

    /// Greatest element.
    pub fn top(&self) -> Elem {
        self.top
    }

    /// All elements `≤ a`, in index order.
    pub fn down_set(&self, a: Elem) -> Vec<Elem> {
        self.elements().filter(|&x| self.leq(x, a)).collect()
    }

    /// All elements `≥ a`, in index order.
    pub fn up_set(&self, a: Elem) -> Vec<Elem> {
        self.elements().filter(|&x| self.leq(a, x)).collect()
    }

    /// The cover relation: pairs `(a, b)` with `a < b` and nothing strictly
    /// between, in lexicographic index order.
    pub fn covers(&self) -> Vec<(Elem, Elem)> {
        let mut out = Vec::new();
        for a in self.elements() {
            for b in self.elements() {
                if self.lt(a, b)
                    && !self.elements().any(|c| self.lt(a, c) && self.lt(c, b))
                {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Elements covering `bottom`.
    pub fn atoms(&self) -> Vec<Elem> {
        self.covers()
            .into_iter()
            .filter(|&(a, _)| a == self.bottom)
            .map(|(_, b)| b)
            .collect()
    }

    /// Elements covered by `top`.
    pub fn coatoms(&self) -> Vec<Elem> {
        self.covers()
            .into_iter()
            .filter(|&(_, b)| b == self.top)
            .map(|(a, _)| a)
            .collect()
    }

    /// True when any two elements are comparable.
    pub fn is_chain(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.comparable(a, b)))
    }

    /// The order-dual lattice: same elements and labels, order reversed,
    /// meet and join swapped, bottom and top swapped. An involution.
    pub fn dual(&self) -> Lattice {
        let n = self.n;
        let mut leq = vec![false; n * n];
        for a in 0..n {
            for b in 0..n {
                leq[a * n + b] = self.leq(b, a);
            }
        }
        let meet = self.join.clone();
        let join = self.meet.clone();
        let name = match self.name.strip_prefix("dual(").and_then(|s| s.strip_suffix(')')) {
            Some(original) => original.to_owned(),
            None => format!("dual({})", self.name),
        };
        Lattice {
            name,
            names: self.names.clone(),
            n,
            leq,
            meet,
            join,
            bottom: self.top,
            top: self.bottom,
        }
    }

    /// Elements of the interval `[lo, hi]` in ambient index order.
    ///
    /// Fails with [`LatticeError::EmptyInterval`] when `lo ≰ hi`.
    pub fn interval_elements(&self, lo: Elem, hi: Elem) -> Result<Vec<Elem>, LatticeError> {
        if !self.leq(lo, hi) {
            return Err(LatticeError::EmptyInterval {
                lo: self.names[lo].clone(),
                hi: self.names[hi].clone(),
            });
        }
        Ok(self
            .elements()
            .filter(|&x| self.leq(lo, x) && self.leq(x, hi))
            .collect())
    }

    /// The interval `[lo, hi]` as a standalone lattice with inherited labels.
    ///
    /// Intervals of a lattice are again lattices (their meets and joins agree
    /// with the ambient ones). When `lo = hi` the result is the one-element
    /// lattice, reported by [`Lattice::is_degenerate`]; callers that need
    /// `bottom ≠ top` must branch on that flag.
    pub fn interval(&self, lo: Elem, hi: Elem) -> Result<Lattice, LatticeError> {
        let members = self.interval_elements(lo, hi)?;
        let m = members.len();
        let mut leq = vec![false; m * m];
        for (i, &a) in members.iter().enumerate() {
            for (j, &b) in members.iter().enumerate() {
                leq[i * m + j] = self.leq(a, b);
            }
        }
        let names = members.iter().map(|&e| self.names[e].clone()).collect();
        let name = format!("{}[{},{}]", self.name, self.names[lo], self.names[hi]);
        Lattice::from_leq(&name, names, leq)
    }

    /// First modularity failure `(a, x, b)` with `a ≤ b` but
    /// `a ∨ (x ∧ b) ≠ (a ∨ x) ∧ b`, in lexicographic index order.
    pub fn modularity_witness(&self) -> Option<(Elem, Elem, Elem)> {
        for a in self.elements() {
            for x in self.elements() {
                for b in self.elements() {
                    if self.leq(a, b)
                        && self.join(a, self.meet(x, b)) != self.meet(self.join(a, x), b)
                    {
                        return Some((a, x, b));
                    }
                }
            }
        }
        None
    }

    /// Whether the modular law `a ≤ b ⇒ a ∨ (x ∧ b) = (a ∨ x) ∧ b` holds.
    pub fn is_modular(&self) -> bool {
        self.modularity_witness().is_none()
    }

    /// First distributivity failure `(a, b, c)` with
    /// `a ∧ (b ∨ c) ≠ (a ∧ b) ∨ (a ∧ c)`, in lexicographic index order.
    pub fn distributivity_witness(&self) -> Option<(Elem, Elem, Elem)> {
        for a in self.elements() {
            for b in self.elements() {
                for c in self.elements() {
                    if self.meet(a, self.join(b, c))
                        != self.join(self.meet(a, b), self.meet(a, c))
                    {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    /// Whether `a ∧ (b ∨ c) = (a ∧ b) ∨ (a ∧ c)` holds for all triples.
    pub fn is_distributive(&self) -> bool {
        self.distributivity_witness().is_none()
    }

    /// All complements of `a`: elements `x` with `a ∧ x = bottom` and
    /// `a ∨ x = top`, in index order.
    pub fn complements_of(&self, a: Elem) -> Vec<Elem> {
        self.elements()
            .filter(|&x| self.meet(a, x) == self.bottom && self.join(a, x) == self.top)
            .collect()
    }

    /// Whether `a` has at least one complement.
    pub fn has_complement(&self, a: Elem) -> bool {
        self.elements()
            .any(|x| self.meet(a, x) == self.bottom && self.join(a, x) == self.top)
    }

    /// Whether every element has a complement.
    pub fn is_complemented(&self) -> bool {
        self.elements().all(|a| self.has_complement(a))
    }

    /// Whether the interval `[bottom, a]` is a distributive lattice. (On
    /// finite lattices the ascending chain condition is automatic, so this is
    /// the whole cyclicity condition.)
    pub fn is_cyclic_element(&self, a: Elem) -> bool {
        let down = self.down_set(a);
        for &x in &down {
            for &y in &down {
                for &z in &down {
                    if self.meet(x, self.join(y, z))
                        != self.join(self.meet(x, y), self.meet(x, z))
                    {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// All cyclic elements, in index order.
    pub fn cyclic_elements(&self) -> Vec<Elem> {
        self.elements().filter(|&a| self.is_cyclic_element(a)).collect()
    }

    /// Whether every element is the join of the cyclic elements below it.
    pub fn is_cyclically_generated(&self) -> bool {
        let cyclic = self.cyclic_elements();
        self.elements().all(|a| {
            self.join_all(cyclic.iter().copied().filter(|&c| self.leq(c, a))) == a
        })
    }

    /// Canonical form of the order matrix, equal for two lattices exactly
    /// when they are isomorphic. Suitable as a deduplication key.
    pub fn canonical_form(&self) -> CanonicalForm {
        let n = self.n;
        // Iterated invariant refinement: split elements by (class, classes of
        // elements below, classes of elements above) until stable. Any
        // isomorphism must respect the resulting partition.
        let mut class: Vec<usize> = {
            let mut keys: Vec<(usize, usize)> = (0..n)
                .map(|a| {
                    let down = (0..n).filter(|&x| self.leq(x, a)).count();
                    let up = (0..n).filter(|&x| self.leq(a, x)).count();
                    (down, up)
                })
                .collect();
            let mut sorted = keys.clone();
            sorted.sort_unstable();
            sorted.dedup();
            keys.iter_mut()
                .map(|k| sorted.binary_search(k).expect("key is from the sorted list"))
                .collect()
        };
        loop {
            let mut keys: Vec<(usize, Vec<usize>, Vec<usize>)> = Vec::with_capacity(n);
            for a in 0..n {
                let mut down: Vec<usize> =
                    (0..n).filter(|&x| self.leq(x, a)).map(|x| class[x]).collect();
                let mut up: Vec<usize> =
                    (0..n).filter(|&x| self.leq(a, x)).map(|x| class[x]).collect();
                down.sort_unstable();
                up.sort_unstable();
                keys.push((class[a], down, up));
            }
            let mut sorted = keys.clone();
            sorted.sort_unstable();
            sorted.dedup();
            let next: Vec<usize> = keys
                .iter()
                .map(|k| sorted.binary_search(k).expect("key is from the sorted list"))
                .collect();
            if next == class {
                break;
            }
            class = next;
        }

        // Positions 0..n are grouped by class id; minimize the permuted order
        // matrix over all assignments sending each element to a position of
        // its own class.
        let class_count = class.iter().max().map_or(0, |&c| c + 1);
        let mut members: Vec<Vec<Elem>> = vec![Vec::new(); class_count];
        for (e, &c) in class.iter().enumerate() {
            members[c].push(e);
        }
        let mut position_base = vec![0usize; class_count];
        let mut base = 0;
        for (c, m) in members.iter().enumerate() {
            position_base[c] = base;
            base += m.len();
        }

        let mut best: Option<Vec<bool>> = None;
        let mut assignment = vec![0usize; n]; // element -> position
        minimize_over_class_permutations(
            self,
            &members,
            &position_base,
            0,
            &mut assignment,
            &mut best,
        );
        let bits = best.expect("at least one class-respecting assignment exists");
        CanonicalForm::pack(n, &bits)
    }

    /// Whether `self` and `other` are isomorphic as lattices (labels and
    /// names are ignored).
    pub fn structurally_eq(&self, other: &Lattice) -> bool {
        self.n == other.n && self.canonical_form() == other.canonical_form()
    }
}

/// Recursively assigns positions class by class, keeping the minimal permuted
/// order matrix seen so far.
fn minimize_over_class_permutations(
    l: &Lattice,
    members: &[Vec<Elem>],
    position_base: &[usize],
    class: usize,
    assignment: &mut Vec<usize>,
    best: &mut Option<Vec<bool>>,
) {
    if class == members.len() {
        let n = l.n();
        let mut inverse = vec![0usize; n]; // position -> element
        for (e, &p) in assignment.iter().enumerate() {
            inverse[p] = e;
        }
        let mut bits = vec![false; n * n];
        for i in 0..n {
            for j in 0..n {
                bits[i * n + j] = l.leq(inverse[i], inverse[j]);
            }
        }
        match best {
            Some(current) if *current <= bits => {}
            _ => *best = Some(bits),
        }
        return;
    }
    let elems = &members[class];
    let base = position_base[class];
    let mut order: Vec<usize> = (0..elems.len()).collect();
    permute_positions(l, elems, base, &mut order, 0, assignment, members, position_base, class, best);
}

/// Enumerates the permutations of one class (Heap-style by swapping a
/// position vector) and recurses into the next class.
#[allow(clippy::too_many_arguments)]
fn permute_positions(
    l: &Lattice,
    elems: &[Elem],
    base: usize,
    order: &mut Vec<usize>,
    depth: usize,
    assignment: &mut Vec<usize>,
    members: &[Vec<Elem>],
    position_base: &[usize],
    class: usize,
    best: &mut Option<Vec<bool>>,
) {
    if depth == order.len() {
        for (offset, &slot) in order.iter().enumerate() {
            assignment[elems[slot]] = base + offset;
        }
        minimize_over_class_permutations(l, members, position_base, class + 1, assignment, best);
        return;
    }
    for i in depth..order.len() {
        order.swap(depth, i);
        permute_positions(
            l, elems, base, order, depth + 1, assignment, members, position_base, class, best,
        );
        order.swap(depth, i);
    }
}

/// Size-tagged, bit-packed canonical order matrix. Total order so canonical
/// forms can be sorted; packing is most-significant-bit first so that the
/// derived ordering agrees with lexicographic order on the bit sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: usize,
    bits: Vec<u64>,
}

impl CanonicalForm {
    fn pack(n: usize, bits: &[bool]) -> Self {
        let mut packed = vec![0u64; bits.len().div_ceil(64)];
        for (k, &bit) in bits.iter().enumerate() {
            if bit {
                packed[k / 64] |= 1 << (63 - (k % 64));
            }
        }
        CanonicalForm { n, bits: packed }
    }

    /// Number of elements of the lattice this form describes.
    pub fn n(&self) -> usize {
        self.n
    }
}

/// Computes dense meet and join tables, failing on the first pair without a
/// unique bound.
fn compute_tables(
    n: usize,
    leq: &[bool],
    names: &[String],
) -> Result<(Vec<Elem>, Vec<Elem>), LatticeError> {
    let mut meet = vec![0; n * n];
    let mut join = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            let glb = (0..n)
                .filter(|&x| leq[x * n + a] && leq[x * n + b])
                .find(|&m| {
                    (0..n)
                        .filter(|&x| leq[x * n + a] && leq[x * n + b])
                        .all(|x| leq[x * n + m])
                });
            match glb {
                Some(m) => meet[a * n + b] = m,
                None => {
                    return Err(LatticeError::NotALattice {
                        a: names[a].clone(),
                        b: names[b].clone(),
                        kind: BoundKind::Meet,
                    })
                }
            }
            let lub = (0..n)
                .filter(|&x| leq[a * n + x] && leq[b * n + x])
                .find(|&j| {
                    (0..n)
                        .filter(|&x| leq[a * n + x] && leq[b * n + x])
                        .all(|x| leq[j * n + x])
                });
            match lub {
                Some(j) => join[a * n + b] = j,
                None => {
                    return Err(LatticeError::NotALattice {
                        a: names[a].clone(),
                        b: names[b].clone(),
                        kind: BoundKind::Join,
                    })
                }
            }
        }
    }
    Ok((meet, join))
}
