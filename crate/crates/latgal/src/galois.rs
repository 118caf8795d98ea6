//! Monotone Galois connections between finite bounded lattices: verified
//! construction, property classification, and executable checkers for the
//! structure theorems built on essentiality.
//!
//! A [`GaloisConnection`] is always fully verified at construction — the
//! adjunction law `α(a) ≤ b ⟺ a ≤ β(b)` is checked over every pair, and the
//! identities it implies (idempotent round-trips, preservation of joins by
//! `α` and meets by `β`, preservation of the extremes) are asserted as
//! defense in depth. There is no unverified constructor, so every downstream
//! checker may rely on the laws.
//!
//! Theorem checkers distinguish three outcomes: hypotheses not met (a
//! neutral [`GaloisError::HypothesisNotMet`]), hypotheses met and conclusion
//! verified (an `Ok` report), and hypotheses met but conclusion false
//! ([`GaloisError::TheoremViolation`] — the statements are proved, so this
//! can only mean an implementation bug, and callers treat it as an alarm).

use thiserror::Error;

use crate::essentiality::{
    self, closed_elements, closures_of, is_coessentially_supplemented, is_essential_in, is_uc,
    uniform_dimension, DimensionResult, DualNotionSuite,
};
use crate::lattice::{Elem, Lattice};

/// Errors raised while building connections or running theorem checkers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GaloisError {
    /// A map table's length does not match its source lattice.
    #[error("map `{map}` has {got} entries but its source lattice has {expected} elements")]
    MapLengthMismatch { map: String, expected: usize, got: usize },
    /// A map table entry is outside the codomain.
    #[error("map `{map}` sends element {index} to out-of-range index {value} (codomain has {n} elements)")]
    ValueOutOfRange { map: String, index: usize, value: usize, n: usize },
    /// A map fails monotonicity on the given comparable pair.
    #[error("map `{map}` is not monotone: `{lo}` ≤ `{hi}` but their images are not ordered")]
    NotMonotone { map: String, lo: String, hi: String },
    /// The pair of maps violates the adjunction law at `(a, b)`.
    #[error("not an adjunction at a=`{a}`, b=`{b}`: α(a)=`{alpha_a}`, β(b)=`{beta_b}` break α(a) ≤ b ⟺ a ≤ β(b)")]
    NotAdjoint { a: String, b: String, alpha_a: String, beta_b: String },
    /// A theorem checker was invoked on a connection that does not satisfy
    /// the theorem's hypotheses; the missing ones are listed. Neutral: the
    /// theorem simply says nothing here.
    #[error("hypotheses not met: {}", missing.join(", "))]
    HypothesisNotMet { missing: Vec<String> },
    /// Hypotheses were met but a proved conclusion failed — this indicates a
    /// bug in the implementation, never a fact about the input.
    #[error("verified conclusion failed (implementation bug): {description}")]
    TheoremViolation { description: String },
}

/// A named, validated monotone map between two fixed lattices, stored as a
/// dense table over source indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonotoneMap {
    name: String,
    table: Vec<Elem>,
}

impl MonotoneMap {
    /// Validates length, range, and monotonicity of `table` as a map
    /// `src → dst`.
    pub fn new(
        name: &str,
        src: &Lattice,
        dst: &Lattice,
        table: Vec<Elem>,
    ) -> Result<Self, GaloisError> {
        if table.len() != src.n() {
            return Err(GaloisError::MapLengthMismatch {
                map: name.to_owned(),
                expected: src.n(),
                got: table.len(),
            });
        }
        for (index, &value) in table.iter().enumerate() {
            if value >= dst.n() {
                return Err(GaloisError::ValueOutOfRange {
                    map: name.to_owned(),
                    index,
                    value,
                    n: dst.n(),
                });
            }
        }
        for lo in src.elements() {
            for hi in src.elements() {
                if src.leq(lo, hi) && !dst.leq(table[lo], table[hi]) {
                    return Err(GaloisError::NotMonotone {
                        map: name.to_owned(),
                        lo: src.label(lo).to_owned(),
                        hi: src.label(hi).to_owned(),
                    });
                }
            }
        }
        Ok(MonotoneMap { name: name.to_owned(), table })
    }

    /// The map's name (used in diagnostics).
    pub fn name(&self) -> &str {
        &self.name
    }

    /// Image of one element.
    pub fn apply(&self, e: Elem) -> Elem {
        self.table[e]
    }

    /// The full table over source indices.
    pub fn table(&self) -> &[Elem] {
        &self.table
    }
}

/// A verified monotone Galois connection `α: A → B`, `β: B → A` with
/// `α(a) ≤ b ⟺ a ≤ β(b)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaloisConnection {
    name: String,
    a: Lattice,
    b: Lattice,
    alpha: MonotoneMap,
    beta: MonotoneMap,
}

impl GaloisConnection {
    /// Builds and fully verifies a connection from the two map tables.
    ///
    /// Checks, in order: table lengths and ranges, monotonicity of both maps
    /// (first violation reported), and the adjunction law on every pair
    /// (first violation in lexicographic `(a, b)` order reported). On
    /// success the implied identities — `αβα = α`, `βαβ = β`, unit/counit
    /// inequalities, `α(0) = 0`, `β(1) = 1`, `α` preserving binary joins and
    /// `β` binary meets — are asserted.
    pub fn new(
        name: &str,
        a: Lattice,
        b: Lattice,
        alpha: Vec<Elem>,
        beta: Vec<Elem>,
    ) -> Result<Self, GaloisError> {
        let alpha = MonotoneMap::new("alpha", &a, &b, alpha)?;
        let beta = MonotoneMap::new("beta", &b, &a, beta)?;
        for x in a.elements() {
            for y in b.elements() {
                let left = b.leq(alpha.apply(x), y);
                let right = a.leq(x, beta.apply(y));
                if left != right {
                    return Err(GaloisError::NotAdjoint {
                        a: a.label(x).to_owned(),
                        b: b.label(y).to_owned(),
                        alpha_a: b.label(alpha.apply(x)).to_owned(),
                        beta_b: a.label(beta.apply(y)).to_owned(),
                    });
                }
            }
        }
        let conn = GaloisConnection { name: name.to_owned(), a, b, alpha, beta };
        conn.assert_adjunction_consequences();
        Ok(conn)
    }

    /// Builds a connection from the lower adjoint alone: the upper adjoint is
    /// derived as `β(b) = ⋁{a : α(a) ≤ b}` and the result fully verified.
    pub fn from_alpha(
        name: &str,
        a: Lattice,
        b: Lattice,
        alpha: Vec<Elem>,
    ) -> Result<Self, GaloisError> {
        let alpha_checked = MonotoneMap::new("alpha", &a, &b, alpha)?;
        let beta: Vec<Elem> = b
            .elements()
            .map(|y| a.join_all(a.elements().filter(|&x| b.leq(alpha_checked.apply(x), y))))
            .collect();
        Self::new(name, a, b, alpha_checked.table, beta)
    }

    /// Builds a connection from the upper adjoint alone: the lower adjoint is
    /// derived as `α(a) = ⋀{b : a ≤ β(b)}` and the result fully verified.
    pub fn from_beta(
        name: &str,
        a: Lattice,
        b: Lattice,
        beta: Vec<Elem>,
    ) -> Result<Self, GaloisError> {
        let beta_checked = MonotoneMap::new("beta", &b, &a, beta)?;
        let alpha: Vec<Elem> = a
            .elements()
            .map(|x| b.meet_all(b.elements().filter(|&y| a.leq(x, beta_checked.apply(y)))))
            .collect();
        Self::new(name, a, b, alpha, beta_checked.table)
    }

    /// Asserts the identities every adjunction satisfies; failure can only
    /// mean a bug in the lattice tables, not bad input.
    fn assert_adjunction_consequences(&self) {
        let (a, b) = (&self.a, &self.b);
        assert_eq!(
            self.alpha(a.bottom()),
            b.bottom(),
            "lower adjoint must preserve bottom ({})",
            self.name
        );
        assert_eq!(
            self.beta(b.top()),
            a.top(),
            "upper adjoint must preserve top ({})",
            self.name
        );
        for x in a.elements() {
            assert!(a.leq(x, self.unit(x)), "unit inequality ({})", self.name);
            assert_eq!(
                self.alpha(self.unit(x)),
                self.alpha(x),
                "triple-composite identity for the lower adjoint ({})",
                self.name
            );
            for x2 in a.elements() {
                assert_eq!(
                    self.alpha(a.join(x, x2)),
                    b.join(self.alpha(x), self.alpha(x2)),
                    "lower adjoint must preserve joins ({})",
                    self.name
                );
            }
        }
        for y in b.elements() {
            assert!(b.leq(self.counit(y), y), "counit inequality ({})", self.name);
            assert_eq!(
                self.beta(self.counit(y)),
                self.beta(y),
                "triple-composite identity for the upper adjoint ({})",
                self.name
            );
            for y2 in b.elements() {
                assert_eq!(
                    self.beta(b.meet(y, y2)),
                    a.meet(self.beta(y), self.beta(y2)),
                    "upper adjoint must preserve meets ({})",
                    self.name
                );
            }
        }
    }

    /// The connection's name.
    pub fn name(&self) -> &str {
        &self.name
    }

    /// Domain lattice (source of the lower adjoint).
    pub fn a(&self) -> &Lattice {
        &self.a
    }

    /// Codomain lattice (source of the upper adjoint).
    pub fn b(&self) -> &Lattice {
        &self.b
    }

    /// Lower adjoint `α` applied to one element.
    pub fn alpha(&self, x: Elem) -> Elem {
        self.alpha.apply(x)
    }

    /// Upper adjoint `β` applied to one element.
    pub fn beta(&self, y: Elem) -> Elem {
        self.beta.apply(y)
    }

    /// The lower adjoint as a map.
    pub fn alpha_map(&self) -> &MonotoneMap {
        &self.alpha
    }

    /// The upper adjoint as a map.
    pub fn beta_map(&self) -> &MonotoneMap {
        &self.beta
    }

    /// Round trip on the domain: `βα(x) ≥ x`.
    pub fn unit(&self, x: Elem) -> Elem {
        self.beta(self.alpha(x))
    }

    /// Round trip on the codomain: `αβ(y) ≤ y`.
    pub fn counit(&self, y: Elem) -> Elem {
        self.alpha(self.beta(y))
    }

    /// Fixed points of the round trips on each side, in index order. The
    /// restrictions of the adjoints to these sets are mutually inverse
    /// bijections, which is asserted.
    pub fn galois_elements(&self) -> (Vec<Elem>, Vec<Elem>) {
        let fixed_a: Vec<Elem> = self.a.elements().filter(|&x| self.unit(x) == x).collect();
        let fixed_b: Vec<Elem> = self.b.elements().filter(|&y| self.counit(y) == y).collect();
        for &x in &fixed_a {
            assert!(
                fixed_b.contains(&self.alpha(x)) && self.beta(self.alpha(x)) == x,
                "adjoints must restrict to inverse bijections on fixed points ({})",
                self.name
            );
        }
        for &y in &fixed_b {
            assert!(
                fixed_a.contains(&self.beta(y)) && self.alpha(self.beta(y)) == y,
                "adjoints must restrict to inverse bijections on fixed points ({})",
                self.name
            );
        }
        assert_eq!(fixed_a.len(), fixed_b.len());
        (fixed_a, fixed_b)
    }

    /// First element (by index) that is not essential below its round-trip
    /// image, if any.
    pub fn essential_witness(&self) -> Option<Elem> {
        self.a.elements().find(|&x| {
            !is_essential_in(&self.a, x, self.unit(x)).expect("unit inequality bounds x")
        })
    }

    /// Whether every element of the domain is essential below its round-trip
    /// image.
    pub fn is_essential(&self) -> bool {
        self.essential_witness().is_none()
    }

    /// First cyclic element that is not essential below its round-trip
    /// image, if any.
    pub fn cyclically_essential_witness(&self) -> Option<Elem> {
        self.a.cyclic_elements().into_iter().find(|&x| {
            !is_essential_in(&self.a, x, self.unit(x)).expect("unit inequality bounds x")
        })
    }

    /// Whether every cyclic element of the domain is essential below its
    /// round-trip image.
    pub fn is_cyclically_essential(&self) -> bool {
        self.cyclically_essential_witness().is_none()
    }

    /// First codomain element under which the round-trip image is not
    /// essential, if any.
    ///
    /// Cross-checks the kernel criterion: a retractable connection always
    /// has trivial kernel (`β(b) = 0 ⇒ b = 0`), and when `β` preserves
    /// bottom the two conditions are equivalent; both directions are
    /// asserted.
    pub fn retractable_witness(&self) -> Option<Elem> {
        let witness = self
            .b
            .elements()
            .find(|&y| !is_essential_in(&self.b, self.counit(y), y).expect("counit is below y"));
        let kernel_trivial = self
            .b
            .elements()
            .all(|y| self.beta(y) != self.a.bottom() || y == self.b.bottom());
        if witness.is_none() {
            assert!(
                kernel_trivial,
                "a retractable connection must have trivial kernel ({})",
                self.name
            );
        }
        if self.beta_preserves_bottom() {
            assert_eq!(
                witness.is_none(),
                kernel_trivial,
                "kernel criterion must match retractability when β preserves bottom ({})",
                self.name
            );
        }
        witness
    }

    /// Whether every codomain element has its round-trip image essential
    /// under it.
    pub fn is_retractable(&self) -> bool {
        self.retractable_witness().is_none()
    }

    /// First closed codomain element that is not the unique closure of its
    /// round-trip image, if any.
    pub fn uc_witness(&self) -> Option<Elem> {
        closed_elements(&self.b)
            .into_iter()
            .find(|&y| closures_of(&self.b, self.counit(y)).closures != vec![y])
    }

    /// Whether every closed codomain element is the unique closure of its
    /// round-trip image.
    pub fn is_uc_connection(&self) -> bool {
        self.uc_witness().is_none()
    }

    /// First disjoint codomain pair `(y, y′)` (lexicographic) on which `β`
    /// fails `β(y ∨ y′) = β(y) ∨ β(y′)`, if any.
    ///
    /// When `β` is additive and preserves bottom it must also carry
    /// complements to complements, which is asserted.
    pub fn beta_additive_witness(&self) -> Option<(Elem, Elem)> {
        let b = &self.b;
        let a = &self.a;
        let mut witness = None;
        'scan: for y in b.elements() {
            for y2 in b.elements() {
                if b.meet(y, y2) == b.bottom()
                    && self.beta(b.join(y, y2)) != a.join(self.beta(y), self.beta(y2))
                {
                    witness = Some((y, y2));
                    break 'scan;
                }
            }
        }
        if witness.is_none() && self.beta_preserves_bottom() {
            for y in b.elements() {
                for c in b.complements_of(y) {
                    assert!(
                        a.meet(self.beta(y), self.beta(c)) == a.bottom()
                            && a.join(self.beta(y), self.beta(c)) == a.top(),
                        "an additive bottom-preserving β must preserve complements ({})",
                        self.name
                    );
                }
            }
        }
        witness
    }

    /// Whether `β` distributes over joins of disjoint pairs.
    pub fn is_beta_additive(&self) -> bool {
        self.beta_additive_witness().is_none()
    }

    /// Whether the lower adjoint preserves the top element.
    pub fn alpha_preserves_top(&self) -> bool {
        self.alpha(self.a.top()) == self.b.top()
    }

    /// Whether the upper adjoint preserves the bottom element.
    pub fn beta_preserves_bottom(&self) -> bool {
        self.beta(self.b.bottom()) == self.a.bottom()
    }

    /// First codomain element not coessential over its round-trip image, if
    /// any (the order dual of [`GaloisConnection::essential_witness`]).
    pub fn coessential_witness(&self) -> Option<Elem> {
        let suite = DualNotionSuite::new(&self.b);
        self.b.elements().find(|&y| {
            !suite
                .is_coessential_in(y, self.counit(y))
                .expect("counit is below y")
        })
    }

    /// Whether every codomain element is coessential over its round-trip
    /// image.
    pub fn is_coessential(&self) -> bool {
        self.coessential_witness().is_none()
    }

    /// First domain element whose round-trip image is not coessential over
    /// it, if any.
    pub fn coretractable_witness(&self) -> Option<Elem> {
        let suite = DualNotionSuite::new(&self.a);
        self.a.elements().find(|&x| {
            !suite
                .is_coessential_in(self.unit(x), x)
                .expect("x is below its round-trip image")
        })
    }

    /// Whether every domain element has its round-trip image coessential
    /// over it.
    pub fn is_coretractable(&self) -> bool {
        self.coretractable_witness().is_none()
    }

    /// First coclosed domain element that is not the unique coclosure of its
    /// round-trip image, if any.
    pub fn ucc_witness(&self) -> Option<Elem> {
        let suite = DualNotionSuite::new(&self.a);
        suite
            .coclosed_elements()
            .into_iter()
            .find(|&x| suite.coclosures_of(self.unit(x)).closures != vec![x])
    }

    /// Whether every coclosed domain element is the unique coclosure of its
    /// round-trip image.
    pub fn is_ucc(&self) -> bool {
        self.ucc_witness().is_none()
    }

    /// The swapped connection `(β, α)` between the dual lattices: its domain
    /// is `dual(B)`, its codomain `dual(A)`. An involution (up to name).
    ///
    /// The dual-side properties of `self` (coessential, coretractable,
    /// unique-coclosure) coincide with the primal properties of the result;
    /// [`GaloisConnection::classify`] asserts that coincidence on every call.
    pub fn dual_connection(&self) -> GaloisConnection {
        let name = match self.name.strip_prefix("dual(").and_then(|s| s.strip_suffix(')')) {
            Some(original) => original.to_owned(),
            None => format!("dual({})", self.name),
        };
        GaloisConnection::new(
            &name,
            self.b.dual(),
            self.a.dual(),
            self.beta.table.clone(),
            self.alpha.table.clone(),
        )
        .expect("the swapped maps form a connection between the dual lattices")
    }

    /// Full property classification with minimal witnesses.
    ///
    /// Asserts the internal consistency conditions: essential implies
    /// cyclically essential, and each dual-side property agrees with the
    /// corresponding primal property of [`GaloisConnection::dual_connection`].
    pub fn classify(&self) -> PropertyReport {
        let essential = Flag::from_witness(self.essential_witness());
        let cyclically_essential = Flag::from_witness(self.cyclically_essential_witness());
        let retractable = Flag::from_witness(self.retractable_witness());
        let uc = Flag::from_witness(self.uc_witness());
        let coessential = Flag::from_witness(self.coessential_witness());
        let coretractable = Flag::from_witness(self.coretractable_witness());
        let ucc = Flag::from_witness(self.ucc_witness());
        let beta_additive = PairFlag::from_witness(self.beta_additive_witness());

        if essential.holds {
            assert!(
                cyclically_essential.holds,
                "essential must imply cyclically essential ({})",
                self.name
            );
        }
        let dual = self.dual_connection();
        assert_eq!(
            coessential.witness,
            dual.essential_witness(),
            "coessentiality must match essentiality of the swapped dual connection ({})",
            self.name
        );
        assert_eq!(
            coretractable.witness,
            dual.retractable_witness(),
            "coretractability must match retractability of the swapped dual connection ({})",
            self.name
        );
        assert_eq!(
            ucc.witness,
            dual.uc_witness(),
            "unique-coclosure must match unique-closure of the swapped dual connection ({})",
            self.name
        );

        PropertyReport {
            essential,
            cyclically_essential,
            retractable,
            uc,
            coessential,
            coretractable,
            ucc,
            beta_additive,
            alpha_top: self.alpha_preserves_top(),
            beta_bottom: self.beta_preserves_bottom(),
        }
    }

    /// Collects the missing hypotheses out of `(name, holds)` pairs.
    fn missing(requirements: &[(&str, bool)]) -> Option<GaloisError> {
        let missing: Vec<String> = requirements
            .iter()
            .filter(|&&(_, holds)| !holds)
            .map(|&(name, _)| name.to_owned())
            .collect();
        if missing.is_empty() {
            None
        } else {
            Some(GaloisError::HypothesisNotMet { missing })
        }
    }

    /// Checks the dimension-comparison statements.
    ///
    /// Requires both lattices modular, the connection retractable, and `β`
    /// bottom-preserving. Then the codomain's uniform dimension never
    /// exceeds the domain's; if the connection is essential the dimensions
    /// are equal; and if the domain is cyclically generated, the connection
    /// cyclically essential and `β` additive, they are equal as well.
    pub fn verify_udim_theorem(&self) -> Result<UdimReport, GaloisError> {
        if let Some(err) = Self::missing(&[
            ("modular domain", self.a.is_modular()),
            ("modular codomain", self.b.is_modular()),
            ("retractable", self.is_retractable()),
            ("bottom-preserving upper adjoint", self.beta_preserves_bottom()),
        ]) {
            return Err(err);
        }
        let dim_a = uniform_dimension(&self.a);
        let dim_b = uniform_dimension(&self.b);
        if dim_b.value > dim_a.value {
            return Err(GaloisError::TheoremViolation {
                description: format!(
                    "codomain dimension {} exceeds domain dimension {} ({})",
                    dim_b.value, dim_a.value, self.name
                ),
            });
        }
        let essential_equality = if self.is_essential() {
            if dim_a.value != dim_b.value {
                return Err(GaloisError::TheoremViolation {
                    description: format!(
                        "essential connection with unequal dimensions {} and {} ({})",
                        dim_a.value, dim_b.value, self.name
                    ),
                });
            }
            ClauseStatus::Passed
        } else {
            ClauseStatus::NotApplicable
        };
        let cyclic_equality = if self.a.is_cyclically_generated()
            && self.is_cyclically_essential()
            && self.is_beta_additive()
        {
            if dim_a.value != dim_b.value {
                return Err(GaloisError::TheoremViolation {
                    description: format!(
                        "cyclically essential additive connection with unequal dimensions {} and {} ({})",
                        dim_a.value, dim_b.value, self.name
                    ),
                });
            }
            ClauseStatus::Passed
        } else {
            ClauseStatus::NotApplicable
        };
        Ok(UdimReport {
            udim_a: dim_a,
            udim_b: dim_b,
            comparison: ClauseStatus::Passed,
            essential_equality,
            cyclic_equality,
        })
    }

    /// Builds and verifies the closed-element correspondence.
    ///
    /// Requires the connection essential, retractable, and unique-closure;
    /// [`CorrespondenceMode::Modular`] additionally requires both lattices
    /// modular.
    ///
    /// In [`CorrespondenceMode::General`], the distinguished sets are the
    /// closed elements whose adjoint image has a unique closure on the other
    /// side; `φ` maps `a` to the closure of `α(a)` (verified to land in the
    /// codomain set), and `ψ(b)`, the closure of `β(b)`, is well defined
    /// exactly when the codomain set coincides with the closed elements
    /// whose `β`-image is closed — that equivalence is verified, and when it
    /// holds the two maps are verified mutually inverse.
    ///
    /// In [`CorrespondenceMode::Modular`], the sets are verified to be
    /// exactly the closed elements of each side, `ψ` to agree with `β`
    /// pointwise and to preserve order, and — when the codomain is a
    /// unique-closure lattice — `φ` to preserve order as well.
    pub fn closed_correspondence(
        &self,
        mode: CorrespondenceMode,
    ) -> Result<CorrespondenceResult, GaloisError> {
        let mut requirements = vec![
            ("essential", self.is_essential()),
            ("retractable", self.is_retractable()),
            ("unique-closure", self.is_uc_connection()),
        ];
        if mode == CorrespondenceMode::Modular {
            requirements.push(("modular domain", self.a.is_modular()));
            requirements.push(("modular codomain", self.b.is_modular()));
        }
        if let Some(err) = Self::missing(&requirements) {
            return Err(err);
        }

        let (a, b) = (&self.a, &self.b);
        let closed_a = closed_elements(a);
        let closed_b = closed_elements(b);
        let script_a: Vec<Elem> = closed_a
            .iter()
            .copied()
            .filter(|&x| closures_of(b, self.alpha(x)).closures.len() == 1)
            .collect();
        let script_b: Vec<Elem> = closed_b
            .iter()
            .copied()
            .filter(|&y| closures_of(a, self.beta(y)).closures.len() == 1)
            .collect();

        let phi: Vec<(Elem, Elem)> = script_a
            .iter()
            .map(|&x| (x, closures_of(b, self.alpha(x)).closures[0]))
            .collect();
        let psi: Vec<(Elem, Elem)> = script_b
            .iter()
            .map(|&y| (y, closures_of(a, self.beta(y)).closures[0]))
            .collect();

        // φ must always land in the codomain set.
        for &(x, fx) in &phi {
            if !script_b.contains(&fx) {
                return Err(GaloisError::TheoremViolation {
                    description: format!(
                        "closure of α(`{}`) is `{}`, which is outside the codomain set ({})",
                        a.label(x),
                        b.label(fx),
                        self.name
                    ),
                });
            }
        }

        // ψ is well defined iff the codomain set is exactly the closed
        // elements with closed β-image; evaluate both sides independently.
        let psi_well_defined = psi.iter().all(|&(_, gy)| script_a.contains(&gy));
        let beta_closed_set: Vec<Elem> = closed_b
            .iter()
            .copied()
            .filter(|&y| essentiality::is_closed(a, self.beta(y)))
            .collect();
        let closed_image_coincidence = script_b == beta_closed_set;
        if psi_well_defined != closed_image_coincidence {
            return Err(GaloisError::TheoremViolation {
                description: format!(
                    "ψ well-definedness ({psi_well_defined}) disagrees with the closed-image characterization ({closed_image_coincidence}) ({})",
                    self.name
                ),
            });
        }

        let mutually_inverse = if psi_well_defined {
            let phi_at = |x: Elem| phi.iter().find(|&&(s, _)| s == x).map(|&(_, t)| t);
            let psi_at = |y: Elem| psi.iter().find(|&&(s, _)| s == y).map(|&(_, t)| t);
            for &(x, fx) in &phi {
                if psi_at(fx) != Some(x) {
                    return Err(GaloisError::TheoremViolation {
                        description: format!(
                            "round trip through the codomain moved `{}` ({})",
                            a.label(x),
                            self.name
                        ),
                    });
                }
            }
            for &(y, gy) in &psi {
                if phi_at(gy) != Some(y) {
                    return Err(GaloisError::TheoremViolation {
                        description: format!(
                            "round trip through the domain moved `{}` ({})",
                            b.label(y),
                            self.name
                        ),
                    });
                }
            }
            Some(true)
        } else {
            None
        };

        let mut psi_order_preserving = None;
        let mut phi_order_preserving = None;
        if mode == CorrespondenceMode::Modular {
            if script_a != closed_a {
                return Err(GaloisError::TheoremViolation {
                    description: format!(
                        "domain set differs from the closed elements of the domain ({})",
                        self.name
                    ),
                });
            }
            if script_b != closed_b {
                return Err(GaloisError::TheoremViolation {
                    description: format!(
                        "codomain set differs from the closed elements of the codomain ({})",
                        self.name
                    ),
                });
            }
            for &(y, gy) in &psi {
                if gy != self.beta(y) {
                    return Err(GaloisError::TheoremViolation {
                        description: format!(
                            "ψ(`{}`) differs from β(`{}`) in the modular case ({})",
                            b.label(y),
                            b.label(y),
                            self.name
                        ),
                    });
                }
            }
            let monotone_on = |pairs: &[(Elem, Elem)], src: &Lattice, dst: &Lattice| {
                pairs.iter().all(|&(x1, y1)| {
                    pairs
                        .iter()
                        .all(|&(x2, y2)| !src.leq(x1, x2) || dst.leq(y1, y2))
                })
            };
            if !monotone_on(&psi, b, a) {
                return Err(GaloisError::TheoremViolation {
                    description: format!("ψ failed to preserve order ({})", self.name),
                });
            }
            psi_order_preserving = Some(true);
            if is_uc(b) {
                if !monotone_on(&phi, a, b) {
                    return Err(GaloisError::TheoremViolation {
                        description: format!(
                            "φ failed to preserve order although the codomain has unique closures ({})",
                            self.name
                        ),
                    });
                }
                phi_order_preserving = Some(true);
            }
        }

        Ok(CorrespondenceResult {
            mode,
            script_a,
            script_b,
            phi,
            psi,
            psi_well_defined,
            closed_image_coincidence,
            mutually_inverse,
            psi_order_preserving,
            phi_order_preserving,
            verified: true,
            failure_witness: None,
        })
    }

    /// Evaluates both sides of the restriction equivalence independently and
    /// asserts they match: the closed-element bijections are the restrictions
    /// of the adjoints if and only if every closed codomain element is a
    /// fixed point.
    ///
    /// Same hypotheses as the modular correspondence; returns the common
    /// truth value.
    pub fn closed_galois_equivalence(&self) -> Result<bool, GaloisError> {
        let correspondence = self.closed_correspondence(CorrespondenceMode::Modular)?;
        let restrictions = correspondence
            .phi
            .iter()
            .all(|&(x, fx)| fx == self.alpha(x))
            && correspondence
                .psi
                .iter()
                .all(|&(y, gy)| gy == self.beta(y));
        let (_, fixed_b) = self.galois_elements();
        let all_closed_fixed = correspondence
            .script_b
            .iter()
            .all(|y| fixed_b.contains(y));
        if restrictions != all_closed_fixed {
            return Err(GaloisError::TheoremViolation {
                description: format!(
                    "restriction form ({restrictions}) disagrees with fixed-point form ({all_closed_fixed}) ({})",
                    self.name
                ),
            });
        }
        Ok(restrictions)
    }

    /// Checks the two extending-transfer statements.
    ///
    /// Requires the connection essential, retractable, unique-closure, and
    /// both lattices modular. When `β` is additive, an extending codomain
    /// forces an extending domain; when `α` preserves top, an extending
    /// domain forces an extending codomain.
    pub fn verify_extending_transfer(&self) -> Result<ExtendingReport, GaloisError> {
        if let Some(err) = Self::missing(&[
            ("essential", self.is_essential()),
            ("retractable", self.is_retractable()),
            ("unique-closure", self.is_uc_connection()),
            ("modular domain", self.a.is_modular()),
            ("modular codomain", self.b.is_modular()),
        ]) {
            return Err(err);
        }
        let a_extending =
            essentiality::is_extending(&self.a).expect("modularity was checked");
        let b_extending =
            essentiality::is_extending(&self.b).expect("modularity was checked");
        let to_domain = if self.is_beta_additive() {
            if b_extending && !a_extending {
                return Err(GaloisError::TheoremViolation {
                    description: format!(
                        "additive upper adjoint with extending codomain but non-extending domain ({})",
                        self.name
                    ),
                });
            }
            ClauseStatus::Passed
        } else {
            ClauseStatus::NotApplicable
        };
        let to_codomain = if self.alpha_preserves_top() {
            if a_extending && !b_extending {
                return Err(GaloisError::TheoremViolation {
                    description: format!(
                        "top-preserving lower adjoint with extending domain but non-extending codomain ({})",
                        self.name
                    ),
                });
            }
            ClauseStatus::Passed
        } else {
            ClauseStatus::NotApplicable
        };
        Ok(ExtendingReport { a_extending, b_extending, to_domain, to_codomain })
    }

    /// Builds and verifies the coclosed-element correspondence by running
    /// the modular closed-element correspondence on the swapped dual
    /// connection and translating back.
    ///
    /// Requires the connection coessential, coretractable, unique-coclosure,
    /// both lattices modular, and the domain coessentially supplemented.
    /// When the domain has unique coclosures the bijections preserve order
    /// (checked inside the dual run).
    pub fn verify_dual_correspondence(&self) -> Result<DualCorrespondenceReport, GaloisError> {
        if let Some(err) = Self::missing(&[
            ("coessential", self.is_coessential()),
            ("coretractable", self.is_coretractable()),
            ("unique-coclosure", self.is_ucc()),
            ("modular domain", self.a.is_modular()),
            ("modular codomain", self.b.is_modular()),
            (
                "coessentially supplemented domain",
                is_coessentially_supplemented(&self.a),
            ),
        ]) {
            return Err(err);
        }
        let dual = self.dual_connection();
        let inner = dual.closed_correspondence(CorrespondenceMode::Modular)?;
        // The dual connection runs from dual(B) to dual(A): its domain set is
        // the coclosed elements of B and its codomain set those of A; its φ
        // maps the B side to the A side.
        Ok(DualCorrespondenceReport {
            coclosed_a: inner.script_b.clone(),
            coclosed_b: inner.script_a.clone(),
            a_to_b: inner.psi.clone(),
            b_to_a: inner.phi.clone(),
            order_preserving: inner.phi_order_preserving,
        })
    }
}

/// One classified property: whether it holds, and the minimal
/// counterexample when it does not.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Flag {
    /// Whether the property holds.
    pub holds: bool,
    /// Minimal (least-index) counterexample element when it does not.
    pub witness: Option<Elem>,
}

impl Flag {
    fn from_witness(witness: Option<Elem>) -> Self {
        Flag { holds: witness.is_none(), witness }
    }
}

/// Like [`Flag`] but with a pair witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairFlag {
    /// Whether the property holds.
    pub holds: bool,
    /// Lexicographically minimal counterexample pair when it does not.
    pub witness: Option<(Elem, Elem)>,
}

impl PairFlag {
    fn from_witness(witness: Option<(Elem, Elem)>) -> Self {
        PairFlag { holds: witness.is_none(), witness }
    }
}

/// Full property classification of a connection. Witness elements for
/// `essential`, `cyclically_essential`, `coretractable` and `ucc` live in
/// the domain lattice; those for `retractable`, `uc`, `coessential` and
/// `beta_additive` in the codomain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyReport {
    pub essential: Flag,
    pub cyclically_essential: Flag,
    pub retractable: Flag,
    pub uc: Flag,
    pub coessential: Flag,
    pub coretractable: Flag,
    pub ucc: Flag,
    pub beta_additive: PairFlag,
    /// Whether the lower adjoint preserves top.
    pub alpha_top: bool,
    /// Whether the upper adjoint preserves bottom.
    pub beta_bottom: bool,
}

impl PropertyReport {
    /// Whether the three headline properties (essential, retractable,
    /// unique-closure) all hold.
    pub fn is_fully_positive(&self) -> bool {
        self.essential.holds && self.retractable.holds && self.uc.holds
    }
}

/// Outcome of one theorem clause.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClauseStatus {
    /// The clause's side condition did not hold; nothing was claimed.
    NotApplicable,
    /// The side condition held and the conclusion was verified.
    Passed,
}

/// Verified dimension comparison between the two sides of a connection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UdimReport {
    /// Uniform dimension of the domain, with witness.
    pub udim_a: DimensionResult,
    /// Uniform dimension of the codomain, with witness.
    pub udim_b: DimensionResult,
    /// The inequality `udim(B) ≤ udim(A)` (always checked).
    pub comparison: ClauseStatus,
    /// Equality under essentiality.
    pub essential_equality: ClauseStatus,
    /// Equality under cyclic essentiality with an additive upper adjoint on
    /// a cyclically generated domain.
    pub cyclic_equality: ClauseStatus,
}

/// Which variant of the closed-element correspondence to verify.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorrespondenceMode {
    /// No modularity assumed: the distinguished sets may be proper subsets
    /// of the closed elements, and ψ's well-definedness is equivalent to the
    /// closed-image characterization.
    General,
    /// Both lattices modular: the distinguished sets are exactly the closed
    /// elements and the bijections are `closure ∘ α` and `β` itself.
    Modular,
}

/// Verified closed-element correspondence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorrespondenceResult {
    pub mode: CorrespondenceMode,
    /// Domain-side distinguished set (closed elements in the modular mode).
    pub script_a: Vec<Elem>,
    /// Codomain-side distinguished set.
    pub script_b: Vec<Elem>,
    /// `a ↦ closure(α(a))` over `script_a`.
    pub phi: Vec<(Elem, Elem)>,
    /// `b ↦ closure(β(b))` over `script_b`.
    pub psi: Vec<(Elem, Elem)>,
    /// Whether ψ lands inside the domain set.
    pub psi_well_defined: bool,
    /// Whether the codomain set equals the closed elements with closed
    /// `β`-image (equivalent to `psi_well_defined`; both sides are computed
    /// independently).
    pub closed_image_coincidence: bool,
    /// `Some(true)` when ψ was well defined and the maps verified mutually
    /// inverse; `None` when ψ was not well defined (nothing claimed).
    pub mutually_inverse: Option<bool>,
    /// `Some(true)` when verified (modular mode); `None` otherwise.
    pub psi_order_preserving: Option<bool>,
    /// `Some(true)` when verified (modular mode with unique-closure
    /// codomain); `None` otherwise.
    pub phi_order_preserving: Option<bool>,
    /// Always true on a returned result; failures surface as errors.
    pub verified: bool,
    /// Always `None` on a returned result.
    pub failure_witness: Option<String>,
}

/// Verified extending-transfer report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtendingReport {
    pub a_extending: bool,
    pub b_extending: bool,
    /// Codomain-to-domain transfer (side condition: additive upper adjoint).
    pub to_domain: ClauseStatus,
    /// Domain-to-codomain transfer (side condition: top-preserving lower
    /// adjoint).
    pub to_codomain: ClauseStatus,
}

/// Verified coclosed-element correspondence, translated back from the dual
/// run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualCorrespondenceReport {
    /// Coclosed elements of the domain.
    pub coclosed_a: Vec<Elem>,
    /// Coclosed elements of the codomain.
    pub coclosed_b: Vec<Elem>,
    /// `a ↦ coclosure(α(a))` over the domain's coclosed elements.
    pub a_to_b: Vec<(Elem, Elem)>,
    /// `b ↦ coclosure(β(b))` over the codomain's coclosed elements.
    pub b_to_a: Vec<(Elem, Elem)>,
    /// `Some(true)` when the domain has unique coclosures and order
    /// preservation was verified; `None` otherwise.
    pub order_preserving: Option<bool>,
}

/// The identity connection on one lattice.
pub fn identity_connection(l: &Lattice) -> GaloisConnection {
    let table: Vec<Elem> = l.elements().collect();
    GaloisConnection::new(
        &format!("identity({})", l.name()),
        l.clone(),
        l.clone(),
        table.clone(),
        table,
    )
    .expect("the identity pair is a connection")
}

/// The constant connection `α ≡ bottom`, `β ≡ top` between two lattices.
pub fn constant_connection(a: &Lattice, b: &Lattice) -> GaloisConnection {
    GaloisConnection::new(
        &format!("constant({},{})", a.name(), b.name()),
        a.clone(),
        b.clone(),
        vec![b.bottom(); a.n()],
        vec![a.top(); b.n()],
    )
    .expect("the constant pair is a connection")
}
