//! Essential and closed elements, closures, uniform dimension, and their
//! order duals (coessential, coclosed, hollow, lifting, supplements).
//!
//! All predicates are free functions over an immutable [`Lattice`]. The dual
//! notions are never reimplemented: they are the primal predicates evaluated
//! on [`Lattice::dual`], packaged in [`DualNotionSuite`] so the dual is built
//! once. Element indices are shared between a lattice and its dual, so no
//! translation is needed.

use thiserror::Error;

use crate::lattice::{Elem, Lattice};

/// Errors raised by essentiality predicates.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EssentialityError {
    /// The element is not below the stated upper bound (for dual notions the
    /// bound check happens in the dual order).
    #[error("`{a}` is not below `{upper}`")]
    NotBelow { a: String, upper: String },
    /// A predicate that only makes sense on cyclically generated lattices was
    /// asked on one that is not.
    #[error("lattice `{0}` is not cyclically generated")]
    NotCyclicallyGenerated(String),
    /// The element has no closure (cannot happen on modular lattices; see
    /// [`closures_of`]).
    #[error("element `{0}` has no closure")]
    NoClosure(String),
    /// The element has several closures, listed in the error.
    #[error("element `{element}` has multiple closures: {closures:?}")]
    MultipleClosures { element: String, closures: Vec<String> },
    /// A predicate defined only for modular lattices was asked on one that is
    /// not modular.
    #[error("lattice `{0}` is not modular")]
    NotModular(String),
}

/// Maximum size of a join-independent subset, with a witness realizing it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionResult {
    /// The dimension.
    pub value: usize,
    /// A join-independent subset of that size; the lexicographically least
    /// one (as a sorted index sequence), so results are deterministic.
    pub witness: Vec<Elem>,
}

/// All closures of one element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureSet {
    /// The element whose closures were computed.
    pub element: Elem,
    /// Every `c` such that `element` is essential in `[0, c]` and `c` is
    /// closed, in index order. Always nonempty on modular lattices; may be
    /// empty in general.
    pub closures: Vec<Elem>,
}

/// Whether `a` is essential in the interval `[bottom, upper]`: every
/// `x ≤ upper` meeting `a` at `bottom` is `bottom` itself.
///
/// "Essential in the whole lattice" is the `upper = top` case.
pub fn is_essential_in(l: &Lattice, a: Elem, upper: Elem) -> Result<bool, EssentialityError> {
    if !l.leq(a, upper) {
        return Err(EssentialityError::NotBelow {
            a: l.label(a).to_owned(),
            upper: l.label(upper).to_owned(),
        });
    }
    Ok(l
        .elements()
        .all(|x| !l.leq(x, upper) || l.meet(a, x) != l.bottom() || x == l.bottom()))
}

/// Whether `a` meets every nonzero cyclic element — on a cyclically generated
/// lattice this is equivalent to `a` being essential in the whole lattice,
/// and that equivalence is asserted here.
pub fn essential_via_cyclic(l: &Lattice, a: Elem) -> Result<bool, EssentialityError> {
    if !l.is_cyclically_generated() {
        return Err(EssentialityError::NotCyclicallyGenerated(l.name().to_owned()));
    }
    let verdict = l
        .cyclic_elements()
        .into_iter()
        .all(|x| l.meet(a, x) != l.bottom() || x == l.bottom());
    let direct = is_essential_in(l, a, l.top()).expect("a is below top");
    assert_eq!(
        verdict, direct,
        "cyclic essentiality test disagrees with the definition for `{}` in `{}`",
        l.label(a),
        l.name()
    );
    Ok(verdict)
}

/// Whether `a` is closed: no strictly larger `c` has `a` essential in
/// `[bottom, c]`.
pub fn is_closed(l: &Lattice, a: Elem) -> bool {
    l.elements().all(|c| {
        !l.lt(a, c) || !is_essential_in(l, a, c).expect("a < c implies a ≤ c")
    })
}

/// All closed elements, in index order. `bottom` and `top` are always closed.
pub fn closed_elements(l: &Lattice) -> Vec<Elem> {
    l.elements().filter(|&a| is_closed(l, a)).collect()
}

/// All closures of `a`: closed elements `c` with `a` essential in
/// `[bottom, c]`.
///
/// Nonempty whenever the lattice is modular (and in fact on every finite
/// lattice); callers must still handle the empty set.
pub fn closures_of(l: &Lattice, a: Elem) -> ClosureSet {
    let closures = l
        .elements()
        .filter(|&c| {
            l.leq(a, c)
                && is_closed(l, c)
                && is_essential_in(l, a, c).expect("a ≤ c was checked")
        })
        .collect();
    ClosureSet { element: a, closures }
}

/// Whether every element has exactly one closure.
pub fn is_uc(l: &Lattice) -> bool {
    l.elements().all(|a| closures_of(l, a).closures.len() == 1)
}

/// The unique closure of `a`, failing when there is none or several.
pub fn unique_closure(l: &Lattice, a: Elem) -> Result<Elem, EssentialityError> {
    let set = closures_of(l, a);
    match set.closures.as_slice() {
        [] => Err(EssentialityError::NoClosure(l.label(a).to_owned())),
        [c] => Ok(*c),
        many => Err(EssentialityError::MultipleClosures {
            element: l.label(a).to_owned(),
            closures: many.iter().map(|&c| l.label(c).to_owned()).collect(),
        }),
    }
}

/// Whether every nonzero element is essential in the whole lattice.
pub fn is_uniform(l: &Lattice) -> bool {
    l.elements().all(|a| {
        a == l.bottom() || is_essential_in(l, a, l.top()).expect("top bounds everything")
    })
}

/// Whether `set` is join-independent: `bottom` is not a member and for every
/// subset `S` and member `x ∉ S`, `(⋁S) ∧ x = bottom`.
///
/// Checked literally over all subsets (duplicates are ignored); the binding
/// case is always the maximal subset, which is what the dimension search
/// uses incrementally.
pub fn is_join_independent(l: &Lattice, set: &[Elem]) -> bool {
    let mut y = set.to_vec();
    y.sort_unstable();
    y.dedup();
    if y.contains(&l.bottom()) {
        return false;
    }
    let k = y.len();
    assert!(k < usize::BITS as usize, "independent sets are small");
    for mask in 0usize..(1 << k) {
        let s_join =
            l.join_all((0..k).filter(|&i| mask & (1 << i) != 0).map(|i| y[i]));
        for (i, &x) in y.iter().enumerate() {
            if mask & (1 << i) == 0 && l.meet(s_join, x) != l.bottom() {
                return false;
            }
        }
    }
    true
}

/// Whether the ordered list satisfies the incremental independence test:
/// every element is nonzero and meets the join of its predecessors at
/// `bottom`.
///
/// On modular lattices this agrees with [`is_join_independent`] for every
/// ordering; on non-modular lattices it can be strictly weaker.
pub fn join_independent_incremental(l: &Lattice, ordered: &[Elem]) -> bool {
    if ordered.contains(&l.bottom()) {
        return false;
    }
    let mut prefix = l.bottom();
    for &b in ordered {
        if l.meet(prefix, b) != l.bottom() {
            return false;
        }
        prefix = l.join(prefix, b);
    }
    true
}

/// Given a join-independent `set` (with per-member joins of the others in
/// `others_join`), decides whether `set ∪ {z}` stays join-independent using
/// only the maximal-subset cases, which bound all others.
fn extends_independent(l: &Lattice, set: &[Elem], others_join: &[Elem], z: Elem) -> bool {
    if z == l.bottom() {
        return false;
    }
    let full = l.join_all(set.iter().copied());
    if l.meet(full, z) != l.bottom() {
        return false;
    }
    set.iter()
        .zip(others_join)
        .all(|(&x, &rest)| l.meet(l.join(rest, z), x) == l.bottom())
}

/// Joins of all members except the one at each position.
fn joins_of_others(l: &Lattice, set: &[Elem]) -> Vec<Elem> {
    (0..set.len())
        .map(|i| {
            l.join_all(set.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &x)| x))
        })
        .collect()
}

/// Depth-first search for a join-independent subset of size `target` using
/// candidates from `pool[from..]` in index order; the first hit is the
/// lexicographically least witness.
fn independent_set_of_size(
    l: &Lattice,
    pool: &[Elem],
    from: usize,
    set: &mut Vec<Elem>,
    target: usize,
) -> bool {
    if set.len() == target {
        return true;
    }
    let needed = target - set.len();
    if pool.len() - from < needed {
        return false;
    }
    for i in from..pool.len() {
        let z = pool[i];
        let others = joins_of_others(l, set);
        if extends_independent(l, set, &others, z) {
            set.push(z);
            if independent_set_of_size(l, pool, i + 1, set, target) {
                return true;
            }
            set.pop();
        }
    }
    false
}

/// Maximum size of a join-independent subset, with the lexicographically
/// least witness of that size.
///
/// Every join-independent set stays independent after replacing each member
/// by an atom below it (distinct automatically), so the maximum is realized
/// on atoms; the value search runs over atoms only and the witness search
/// over all elements.
pub fn uniform_dimension(l: &Lattice) -> DimensionResult {
    let atoms = l.atoms();
    let mut value = 0;
    let mut probe = Vec::new();
    for target in (1..=atoms.len()).rev() {
        probe.clear();
        if independent_set_of_size(l, &atoms, 0, &mut probe, target) {
            value = target;
            break;
        }
    }
    let pool: Vec<Elem> = l.elements().filter(|&a| a != l.bottom()).collect();
    let mut witness = Vec::new();
    let found = independent_set_of_size(l, &pool, 0, &mut witness, value);
    assert!(found, "an independent set of the established size exists");
    DimensionResult { value, witness }
}

/// Uniform dimension of the dual lattice. Element indices agree between a
/// lattice and its dual, so the witness needs no translation.
pub fn hollow_dimension(l: &Lattice) -> DimensionResult {
    uniform_dimension(&l.dual())
}

/// Whether the (modular) lattice is extending: every element is essential
/// below some complemented element.
///
/// Both definitional forms — "every element has a complemented essential
/// extension" and "every closed element is complemented" — are evaluated and
/// must agree; the common verdict is returned.
pub fn is_extending(l: &Lattice) -> Result<bool, EssentialityError> {
    if !l.is_modular() {
        return Err(EssentialityError::NotModular(l.name().to_owned()));
    }
    let by_extension = l.elements().all(|a| {
        l.elements().any(|c| {
            l.leq(a, c)
                && l.has_complement(c)
                && is_essential_in(l, a, c).expect("a ≤ c was checked")
        })
    });
    let by_closed = closed_elements(l).into_iter().all(|c| l.has_complement(c));
    assert_eq!(
        by_extension, by_closed,
        "the two extending criteria disagree on `{}`",
        l.name()
    );
    Ok(by_extension)
}

/// All supplements of `a`: minimal elements `x` with `a ∨ x = top`, in index
/// order.
pub fn supplements_of(l: &Lattice, a: Elem) -> Vec<Elem> {
    let fills: Vec<Elem> =
        l.elements().filter(|&x| l.join(a, x) == l.top()).collect();
    fills
        .iter()
        .copied()
        .filter(|&x| !fills.iter().any(|&y| l.lt(y, x)))
        .collect()
}

/// Every element that is a supplement of something, in index order.
pub fn supplement_elements(l: &Lattice) -> Vec<Elem> {
    l.elements()
        .filter(|&x| {
            l.elements().any(|a| {
                l.join(a, x) == l.top()
                    && !l.elements().any(|y| l.lt(y, x) && l.join(a, y) == l.top())
            })
        })
        .collect()
}

/// Whether every element lies coessentially above some supplement: for each
/// `a` there is a supplement `x ≤ a` (of some element) with `a` coessential
/// in `[x, top]`.
pub fn is_coessentially_supplemented(l: &Lattice) -> bool {
    let suite = DualNotionSuite::new(l);
    let supplements = supplement_elements(l);
    l.elements().all(|a| {
        supplements.iter().any(|&x| {
            l.leq(x, a)
                && suite
                    .is_coessential_in(a, x)
                    .expect("x ≤ a was checked in the primal order")
        })
    })
}

/// Whether supplements exist inside every filling element: whenever
/// `a ∨ b = top`, some supplement of `a` lies below `b`.
pub fn is_amply_supplemented(l: &Lattice) -> bool {
    l.elements().all(|a| {
        let supplements = supplements_of(l, a);
        l.elements()
            .filter(|&b| l.join(a, b) == l.top())
            .all(|b| supplements.iter().any(|&x| l.leq(x, b)))
    })
}

/// The dual notions, evaluated as primal predicates on the dual lattice.
///
/// Indices are shared with the primal lattice. The bound check of
/// [`DualNotionSuite::is_coessential_in`] happens in the dual order: the
/// lower bound must be primally *below* the element.
pub struct DualNotionSuite {
    dual: Lattice,
}

impl DualNotionSuite {
    /// Builds the suite (computes the dual once).
    pub fn new(l: &Lattice) -> Self {
        DualNotionSuite { dual: l.dual() }
    }

    /// The dual lattice the suite evaluates on.
    pub fn dual(&self) -> &Lattice {
        &self.dual
    }

    /// Whether `a` is coessential in `[lo, top]` (requires `lo ≤ a`): every
    /// `y ≥ lo` joining with `a` to `top` is `top` itself.
    pub fn is_coessential_in(&self, a: Elem, lo: Elem) -> Result<bool, EssentialityError> {
        is_essential_in(&self.dual, a, lo)
    }

    /// Whether no `c` strictly below `a` has `a` coessential in `[c, top]`.
    pub fn is_coclosed(&self, a: Elem) -> bool {
        is_closed(&self.dual, a)
    }

    /// All coclosed elements, in index order.
    pub fn coclosed_elements(&self) -> Vec<Elem> {
        closed_elements(&self.dual)
    }

    /// All coclosures of `a`: coclosed `c ≤ a` with `a` coessential in
    /// `[c, top]`.
    pub fn coclosures_of(&self, a: Elem) -> ClosureSet {
        closures_of(&self.dual, a)
    }

    /// Whether every element has exactly one coclosure.
    pub fn is_ucc(&self) -> bool {
        is_uc(&self.dual)
    }

    /// The unique coclosure of `a`, failing when there is none or several.
    pub fn unique_coclosure(&self, a: Elem) -> Result<Elem, EssentialityError> {
        unique_closure(&self.dual, a)
    }

    /// Whether every proper element is coessential in the whole lattice
    /// (the dual of uniformity).
    pub fn is_hollow(&self) -> bool {
        is_uniform(&self.dual)
    }

    /// Whether the dual lattice is extending (requires modularity, which is
    /// self-dual).
    pub fn is_lifting(&self) -> Result<bool, EssentialityError> {
        is_extending(&self.dual)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn grid() -> Lattice {
        fixtures::grid3x3()
    }

    fn by_label(l: &Lattice, s: &str) -> Elem {
        l.index_of(s).unwrap_or_else(|| panic!("label {s}"))
    }

    /// Exhaustive oracle straight from the definition, used to pin the fast
    /// path on every fixture.
    fn essential_oracle(l: &Lattice, a: Elem, upper: Elem) -> bool {
        l.elements()
            .filter(|&x| l.leq(x, upper))
            .all(|x| l.meet(a, x) != l.bottom() || x == l.bottom())
    }

    #[test]
    fn essential_matches_oracle_on_all_fixtures() {
        for l in fixtures::all_lattices() {
            for a in l.elements() {
                for upper in l.elements() {
                    if l.leq(a, upper) {
                        assert_eq!(
                            is_essential_in(&l, a, upper).unwrap(),
                            essential_oracle(&l, a, upper),
                            "{} a={} upper={}",
                            l.name(),
                            l.label(a),
                            l.label(upper)
                        );
                    } else {
                        assert!(is_essential_in(&l, a, upper).is_err());
                    }
                }
            }
        }
    }

    #[test]
    fn grid_essential_examples() {
        let g = grid();
        let h1 = by_label(&g, "H1");
        let h3 = by_label(&g, "H3");
        assert!(is_essential_in(&g, h1, h3).unwrap());
        for a in g.elements() {
            assert!(is_essential_in(&g, a, a).unwrap());
        }
        assert!(!is_essential_in(&g, h1, g.top()).unwrap());
    }

    #[test]
    fn non_essential_atom_in_example_c() {
        let c = fixtures::example_c();
        let c5 = by_label(&c, "c5");
        assert!(!is_essential_in(&c, c5, c.top()).unwrap());
        assert!(!essential_via_cyclic(&c, c5).unwrap());
        assert!(essential_via_cyclic(&c, c.top()).unwrap());
    }

    #[test]
    fn cyclic_criterion_agrees_with_definition_everywhere() {
        for l in fixtures::all_lattices() {
            if !l.is_cyclically_generated() {
                continue;
            }
            for a in l.elements() {
                // essential_via_cyclic asserts agreement internally.
                let _ = essential_via_cyclic(&l, a).unwrap();
            }
        }
    }

    #[test]
    fn example_c_cyclic_elements() {
        let c = fixtures::example_c();
        let expected: Vec<Elem> = ["0", "c1", "c2", "c3", "c4"]
            .iter()
            .map(|s| by_label(&c, s))
            .collect();
        assert_eq!(c.cyclic_elements(), expected);
        assert!(c.is_cyclically_generated());
    }

    #[test]
    fn grid_cyclic_criterion_for_center() {
        let g = grid();
        let h4 = by_label(&g, "H4");
        assert!(essential_via_cyclic(&g, h4).unwrap());
    }

    #[test]
    fn noncyclically_generated_input_is_rejected() {
        // A diamond under a doubled top: the cyclic elements are {0,x,y,z},
        // whose joins reach w but never 1, so the lattice is not cyclically
        // generated.
        let l = Lattice::from_covers(
            "tower",
            &["0", "x", "y", "z", "w", "1"],
            "0",
            "1",
            &[
                ("0", "x"),
                ("0", "y"),
                ("0", "z"),
                ("x", "w"),
                ("y", "w"),
                ("z", "w"),
                ("w", "1"),
            ],
        )
        .unwrap();
        assert!(!l.is_cyclically_generated());
        assert!(matches!(
            essential_via_cyclic(&l, 0),
            Err(EssentialityError::NotCyclicallyGenerated(_))
        ));
    }

    #[test]
    fn grid_closed_elements() {
        let g = grid();
        let expected: Vec<Elem> = ["0", "H3", "H5", "G"]
            .iter()
            .map(|s| by_label(&g, s))
            .collect();
        assert_eq!(closed_elements(&g), expected);
    }

    #[test]
    fn bottom_and_top_are_always_closed() {
        for l in fixtures::all_lattices() {
            let closed = closed_elements(&l);
            assert!(closed.contains(&l.bottom()), "{}", l.name());
            assert!(closed.contains(&l.top()), "{}", l.name());
        }
    }

    #[test]
    fn z2z4_h3_is_not_closed_and_has_two_closures() {
        let l = fixtures::z2z4();
        let h3 = by_label(&l, "H3");
        let h5 = by_label(&l, "H5");
        let h6 = by_label(&l, "H6");
        assert!(!is_closed(&l, h3));
        assert_eq!(closures_of(&l, h3).closures, vec![h5, h6]);
        assert_eq!(
            unique_closure(&l, h3),
            Err(EssentialityError::MultipleClosures {
                element: "H3".into(),
                closures: vec!["H5".into(), "H6".into()],
            })
        );
        assert!(!is_uc(&l));
    }

    #[test]
    fn grid_closures() {
        let g = grid();
        let h1 = by_label(&g, "H1");
        let h2 = by_label(&g, "H2");
        let h3 = by_label(&g, "H3");
        let h5 = by_label(&g, "H5");
        assert_eq!(closures_of(&g, h1).closures, vec![h3]);
        assert_eq!(unique_closure(&g, h2), Ok(h5));
        assert!(is_uc(&g));
    }

    #[test]
    fn closure_of_closed_element_is_itself() {
        for l in fixtures::all_lattices() {
            for c in closed_elements(&l) {
                assert_eq!(closures_of(&l, c).closures, vec![c], "{}", l.name());
            }
        }
    }

    #[test]
    fn closures_exist_on_every_fixture() {
        // Guaranteed on modular lattices; empirically true on all finite
        // fixtures (maximal essential extensions are closed).
        for l in fixtures::all_lattices() {
            for a in l.elements() {
                assert!(
                    !closures_of(&l, a).closures.is_empty(),
                    "{} {}",
                    l.name(),
                    l.label(a)
                );
            }
        }
    }

    #[test]
    fn essential_interval_splitting() {
        // a ≤ b ≤ c: essential in [0,c] iff essential in [0,b] and b
        // essential in [0,c]; and essential in [0,c] implies a∧b essential
        // in [0,b] for arbitrary b ≤ c.
        for l in fixtures::all_lattices() {
            for a in l.elements() {
                for b in l.elements() {
                    for c in l.elements() {
                        if l.leq(a, b) && l.leq(b, c) {
                            let ac = is_essential_in(&l, a, c).unwrap();
                            let ab = is_essential_in(&l, a, b).unwrap();
                            let bc = is_essential_in(&l, b, c).unwrap();
                            assert_eq!(ac, ab && bc, "{}", l.name());
                        }
                        if l.leq(b, c) && l.leq(a, c) {
                            let ac = is_essential_in(&l, a, c).unwrap();
                            if ac {
                                let meet = l.meet(a, b);
                                assert!(
                                    is_essential_in(&l, meet, b).unwrap(),
                                    "{}",
                                    l.name()
                                );
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn complements_are_closed_on_modular_fixtures() {
        for l in fixtures::all_lattices() {
            if !l.is_modular() {
                continue;
            }
            for a in l.elements() {
                for x in l.complements_of(a) {
                    assert!(is_closed(&l, x), "{} {}", l.name(), l.label(x));
                }
            }
        }
    }

    #[test]
    fn closure_is_monotone_on_modular_uc_fixtures() {
        for l in fixtures::all_lattices() {
            if !l.is_modular() || !is_uc(&l) {
                continue;
            }
            for a in l.elements() {
                for b in l.elements() {
                    if l.leq(a, b) {
                        let ca = unique_closure(&l, a).unwrap();
                        let cb = unique_closure(&l, b).unwrap();
                        assert!(l.leq(ca, cb), "{}", l.name());
                    }
                }
            }
        }
    }

    #[test]
    fn uniformity() {
        assert!(!is_uniform(&grid()));
        assert!(is_uniform(&fixtures::chain4()));
        // The interval [0, H5] of z2z4 is a 3-chain, hence uniform.
        let l = fixtures::z2z4();
        let h5 = by_label(&l, "H5");
        let i = l.interval(l.bottom(), h5).unwrap();
        assert!(i.is_chain());
        assert!(is_uniform(&i));
    }

    #[test]
    fn join_independence_basics() {
        let g = grid();
        let h1 = by_label(&g, "H1");
        let h2 = by_label(&g, "H2");
        let h3 = by_label(&g, "H3");
        assert!(is_join_independent(&g, &[h1, h2]));
        assert!(is_join_independent(&g, &[h1]));
        assert!(is_join_independent(&g, &[]));
        assert!(!is_join_independent(&g, &[g.bottom()]));
        // (H1 ∨ H2) ∧ H3 = H4 ∧ H3 = H1 ≠ 0.
        assert!(!is_join_independent(&g, &[h1, h2, h3]));
        assert!(join_independent_incremental(&g, &[h1, h2]));
        assert!(join_independent_incremental(&g, &[h1]));
        assert!(!join_independent_incremental(&g, &[h1, h2, h3]));
    }

    #[test]
    fn incremental_is_weaker_on_nonmodular_lattices() {
        // In example_c, [c2, c3, c1] passes the incremental test
        // (c2∧c3 = 0, (c2∨c3)∧c1 = c5∧c1 = 0) but the set {c1,c2,c3} is not
        // join-independent ((c1∨c3)∧c2 = 1∧c2 = c2).
        let c = fixtures::example_c();
        let c1 = by_label(&c, "c1");
        let c2 = by_label(&c, "c2");
        let c3 = by_label(&c, "c3");
        assert!(join_independent_incremental(&c, &[c2, c3, c1]));
        assert!(!is_join_independent(&c, &[c1, c2, c3]));
    }

    #[test]
    fn incremental_agrees_with_full_on_modular_fixtures() {
        for l in fixtures::all_lattices() {
            if !l.is_modular() || l.n() > 9 {
                continue;
            }
            let pool: Vec<Elem> = l.elements().collect();
            // All subsets up to size 3, all orderings.
            for &a in &pool {
                for &b in &pool {
                    for &c in &pool {
                        if a < b && b < c {
                            let full = is_join_independent(&l, &[a, b, c]);
                            for perm in [
                                [a, b, c],
                                [a, c, b],
                                [b, a, c],
                                [b, c, a],
                                [c, a, b],
                                [c, b, a],
                            ] {
                                assert_eq!(
                                    join_independent_incremental(&l, &perm),
                                    full,
                                    "{} {:?}",
                                    l.name(),
                                    perm
                                );
                            }
                        }
                    }
                }
            }
        }
    }

    /// Exhaustive dimension oracle over all subsets of nonzero elements.
    fn udim_oracle(l: &Lattice) -> usize {
        let pool: Vec<Elem> = l.elements().filter(|&a| a != l.bottom()).collect();
        let mut best = 0;
        for mask in 0usize..(1 << pool.len()) {
            let set: Vec<Elem> = pool
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask & (1 << i) != 0)
                .map(|(_, &x)| x)
                .collect();
            if set.len() > best && is_join_independent(l, &set) {
                best = set.len();
            }
        }
        best
    }

    #[test]
    fn uniform_dimension_matches_exhaustive_oracle() {
        for l in fixtures::all_lattices() {
            let fast = uniform_dimension(&l);
            assert_eq!(fast.value, udim_oracle(&l), "{}", l.name());
            assert!(is_join_independent(&l, &fast.witness));
            assert_eq!(fast.witness.len(), fast.value);
        }
    }

    #[test]
    fn dimension_examples() {
        let g = grid();
        let d = uniform_dimension(&g);
        assert_eq!(d.value, 2);
        assert_eq!(d.witness, vec![by_label(&g, "H1"), by_label(&g, "H2")]);

        assert_eq!(uniform_dimension(&fixtures::chain4()).value, 1);

        let c = fixtures::example_c();
        let d = uniform_dimension(&c);
        assert_eq!(d.value, 2);
        assert_eq!(d.witness, vec![by_label(&c, "c1"), by_label(&c, "c2")]);

        assert_eq!(uniform_dimension(&fixtures::diamond_m4()).value, 2);
    }

    #[test]
    fn dimension_one_iff_uniform() {
        for l in fixtures::all_lattices() {
            assert_eq!(
                uniform_dimension(&l).value == 1,
                is_uniform(&l),
                "{}",
                l.name()
            );
        }
    }

    #[test]
    fn hollow_dimension_examples() {
        assert_eq!(hollow_dimension(&fixtures::chain4()).value, 1);
        assert_eq!(hollow_dimension(&grid()).value, 2);
        assert_eq!(hollow_dimension(&fixtures::z2z4()).value, 2);
        let c = fixtures::example_c();
        assert_eq!(
            hollow_dimension(&c).value,
            uniform_dimension(&c.dual()).value
        );
    }

    #[test]
    fn extending_examples() {
        assert_eq!(is_extending(&grid()), Ok(true));
        assert_eq!(is_extending(&fixtures::z2z4()), Ok(true));
        assert_eq!(is_extending(&fixtures::chain4()), Ok(true));
        assert!(matches!(
            is_extending(&fixtures::example_c()),
            Err(EssentialityError::NotModular(_))
        ));
    }

    #[test]
    fn supplements() {
        let g = grid();
        let h3 = by_label(&g, "H3");
        let h4 = by_label(&g, "H4");
        let h5 = by_label(&g, "H5");
        assert_eq!(supplements_of(&g, h3), vec![h5]);
        assert_eq!(supplements_of(&g, h4), vec![g.top()]);
        assert!(supplements_of(&g, g.top()).contains(&g.bottom()));
        assert_eq!(supplements_of(&g, g.bottom()), vec![g.top()]);
    }

    #[test]
    fn amply_supplemented_fixtures() {
        assert!(is_coessentially_supplemented(&grid()));
        assert!(is_amply_supplemented(&grid()));
        assert!(is_coessentially_supplemented(&fixtures::chain4()));
        assert!(is_amply_supplemented(&fixtures::chain4()));
        assert!(is_coessentially_supplemented(&fixtures::z2z4()));
    }

    #[test]
    fn dual_suite_on_grid() {
        let g = grid();
        let suite = DualNotionSuite::new(&g);
        let expected: Vec<Elem> = ["0", "H3", "H5", "G"]
            .iter()
            .map(|s| by_label(&g, s))
            .collect();
        assert_eq!(suite.coclosed_elements(), expected);
        assert!(!suite.is_hollow());
        assert_eq!(suite.is_lifting(), Ok(true));
        assert!(suite.is_ucc());
    }

    #[test]
    fn dual_suite_on_chain() {
        let c = fixtures::chain4();
        let suite = DualNotionSuite::new(&c);
        assert!(suite.is_hollow());
        assert_eq!(suite.is_lifting(), Ok(true));
        // Coessential: x is coessential in [0,1]? join(x, y)=y ≠ 1 unless
        // y = 1... every y ≥ 0 with x ∨ y = 1 is y = 1, so yes.
        let x = by_label(&c, "x");
        assert!(suite.is_coessential_in(x, c.bottom()).unwrap());
        assert!(suite.is_coessential_in(x, x).unwrap());
        assert!(suite.is_coessential_in(c.top(), c.bottom()).is_ok());
        // Bound check runs in the dual order: lo must be below a primally.
        assert!(suite.is_coessential_in(x, c.top()).is_err());
    }

    #[test]
    fn coessential_equals_essential_on_dual() {
        for l in fixtures::all_lattices() {
            let d = l.dual();
            let suite = DualNotionSuite::new(&l);
            for a in l.elements() {
                for lo in l.elements() {
                    if l.leq(lo, a) {
                        assert_eq!(
                            suite.is_coessential_in(a, lo).unwrap(),
                            is_essential_in(&d, a, lo).unwrap()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn one_element_lattice_dimension() {
        let point = Lattice::from_leq("point", vec!["0".into()], vec![true]).unwrap();
        let d = uniform_dimension(&point);
        assert_eq!(d.value, 0);
        assert!(d.witness.is_empty());
        assert_eq!(closed_elements(&point), vec![0]);
    }
}
