//! Named example lattices and connections used across the test-suite and
//! shipped with the CLI as text fixtures.
//!
//! Each constructor documents the structural properties that make the example
//! useful; the test-suite asserts every one of them, so the doc comments here
//! double as a catalogue of known-good expected values.

use crate::galois::GaloisConnection;
use crate::lattice::Lattice;

/// The 3×3 grid: the product of two three-element chains.
///
/// Nine elements `0 < {H1,H2} < … < G`, modular, distributive, self-dual.
/// Its closed elements are `{0, H3, H5, G}`, it has unique closures, uniform
/// dimension 2 (witness `{H1, H2}`), and it is extending. Arises as the
/// subgroup lattice of a product of two cyclic groups of squared prime order.
pub fn grid3x3() -> Lattice {
    Lattice::from_covers(
        "grid3x3",
        &["0", "H1", "H2", "H3", "H4", "H5", "H6", "H7", "G"],
        "0",
        "G",
        &[
            ("0", "H1"),
            ("0", "H2"),
            ("H1", "H3"),
            ("H1", "H4"),
            ("H2", "H4"),
            ("H2", "H5"),
            ("H3", "H6"),
            ("H4", "H6"),
            ("H4", "H7"),
            ("H5", "H7"),
            ("H6", "G"),
            ("H7", "G"),
        ],
    )
    .expect("grid3x3 fixture is a lattice")
}

/// The subgroup lattice of the abelian group ℤ₂ × ℤ₄ (eight elements).
///
/// Modular but not distributive (it contains a diamond), and not a
/// unique-closure lattice: `H3` has the two closures `H5` and `H6`. Uniform
/// and hollow dimension are both 2; the lattice is extending.
pub fn z2z4() -> Lattice {
    Lattice::from_covers(
        "z2z4",
        &["0", "H1", "H2", "H3", "H4", "H5", "H6", "G"],
        "0",
        "G",
        &[
            ("0", "H1"),
            ("0", "H2"),
            ("0", "H3"),
            ("H1", "H4"),
            ("H2", "H4"),
            ("H3", "H4"),
            ("H3", "H5"),
            ("H3", "H6"),
            ("H4", "G"),
            ("H5", "G"),
            ("H6", "G"),
        ],
    )
    .expect("z2z4 fixture is a lattice")
}

/// The sublattice of [`z2z4`] obtained by removing `H6`.
///
/// Still modular. Paired with [`z2z4`] by the [`inclusion_floor`] connection,
/// whose unit is the identity and whose counit collapses only `H6` to `H3`.
pub fn z2z4_sub() -> Lattice {
    Lattice::from_covers(
        "z2z4_sub",
        &["0", "H1", "H2", "H3", "H4", "H5", "G"],
        "0",
        "G",
        &[
            ("0", "H1"),
            ("0", "H2"),
            ("0", "H3"),
            ("H1", "H4"),
            ("H2", "H4"),
            ("H3", "H4"),
            ("H3", "H5"),
            ("H4", "G"),
            ("H5", "G"),
        ],
    )
    .expect("z2z4_sub fixture is a lattice")
}

/// A nine-element non-modular lattice (it contains a pentagon through
/// `a1 < a3` and `a4`). Domain side of the [`mixed_pair`] and
/// [`retract_pair`] connections.
pub fn example_a() -> Lattice {
    Lattice::from_covers(
        "example_a",
        &["0", "a1", "a2", "a3", "a4", "a5", "a6", "a7", "1"],
        "0",
        "1",
        &[
            ("0", "a1"),
            ("0", "a2"),
            ("a1", "a3"),
            ("a1", "a4"),
            ("a2", "a5"),
            ("a3", "a5"),
            ("a4", "a6"),
            ("a4", "a7"),
            ("a5", "1"),
            ("a6", "1"),
            ("a7", "1"),
        ],
    )
    .expect("example_a fixture is a lattice")
}

/// An eight-element lattice in which `b3` has the two closures `b5` and
/// `b6`. Codomain side of the [`mixed_pair`] and [`retract_pair`]
/// connections.
pub fn example_b() -> Lattice {
    Lattice::from_covers(
        "example_b",
        &["0", "b1", "b2", "b3", "b4", "b5", "b6", "1"],
        "0",
        "1",
        &[
            ("0", "b1"),
            ("0", "b2"),
            ("b1", "b3"),
            ("b2", "b4"),
            ("b3", "b5"),
            ("b3", "b6"),
            ("b4", "1"),
            ("b5", "1"),
            ("b6", "1"),
        ],
    )
    .expect("example_b fixture is a lattice")
}

/// A seven-element non-modular lattice: four atoms, three of which join into
/// a coatom `c5` while `c1` joins each of the others straight to the top.
///
/// Its cyclic elements are `{0, c1, c2, c3, c4}` (the interval below `c5` is
/// a non-distributive diamond), it is cyclically generated, and its uniform
/// dimension is 2 with witness `{c1, c2}`. Domain side of [`ceiling_pair`].
pub fn example_c() -> Lattice {
    Lattice::from_covers(
        "example_c",
        &["0", "c1", "c2", "c3", "c4", "c5", "1"],
        "0",
        "1",
        &[
            ("0", "c1"),
            ("0", "c2"),
            ("0", "c3"),
            ("0", "c4"),
            ("c2", "c5"),
            ("c3", "c5"),
            ("c4", "c5"),
            ("c1", "1"),
            ("c5", "1"),
        ],
    )
    .expect("example_c fixture is a lattice")
}

/// The modular lattice of four atoms under a common top (`M4`), labelled so
/// that it embeds into [`example_c`] by label. Codomain side of
/// [`ceiling_pair`].
pub fn diamond_m4() -> Lattice {
    Lattice::from_covers(
        "diamond_m4",
        &["0", "c1", "c2", "c3", "c4", "1"],
        "0",
        "1",
        &[
            ("0", "c1"),
            ("0", "c2"),
            ("0", "c3"),
            ("0", "c4"),
            ("c1", "1"),
            ("c2", "1"),
            ("c3", "1"),
            ("c4", "1"),
        ],
    )
    .expect("diamond_m4 fixture is a lattice")
}

/// The four-element chain `0 < x < y < 1`: distributive, uniform, hollow,
/// and self-dual. Both sides of the [`chain_residual`] connection.
pub fn chain4() -> Lattice {
    Lattice::from_covers(
        "chain4",
        &["0", "x", "y", "1"],
        "0",
        "1",
        &[("0", "x"), ("x", "y"), ("y", "1")],
    )
    .expect("chain4 fixture is a lattice")
}

/// All fixture lattices, in a fixed order.
pub fn all_lattices() -> Vec<Lattice> {
    vec![
        grid3x3(),
        z2z4(),
        z2z4_sub(),
        example_a(),
        example_b(),
        example_c(),
        diamond_m4(),
        chain4(),
    ]
}

/// Fixture lattice by name, if any.
pub fn lattice_by_name(name: &str) -> Option<Lattice> {
    all_lattices().into_iter().find(|l| l.name() == name)
}

/// Builds a connection fixture from label-level map tables, panicking if the
/// tables are not a Galois connection (fixtures are known-good).
fn connection(
    name: &str,
    a: Lattice,
    b: Lattice,
    alpha: &[(&str, &str)],
    beta: &[(&str, &str)],
) -> GaloisConnection {
    let alpha: Vec<usize> = a
        .names()
        .iter()
        .map(|l| {
            let target = alpha
                .iter()
                .find(|(src, _)| src == l)
                .unwrap_or_else(|| panic!("fixture `{name}`: no alpha image for `{l}`"))
                .1;
            b.index_of(target)
                .unwrap_or_else(|| panic!("fixture `{name}`: unknown label `{target}`"))
        })
        .collect();
    let beta: Vec<usize> = b
        .names()
        .iter()
        .map(|l| {
            let target = beta
                .iter()
                .find(|(src, _)| src == l)
                .unwrap_or_else(|| panic!("fixture `{name}`: no beta image for `{l}`"))
                .1;
            a.index_of(target)
                .unwrap_or_else(|| panic!("fixture `{name}`: unknown label `{target}`"))
        })
        .collect();
    GaloisConnection::new(name, a, b, alpha, beta)
        .unwrap_or_else(|e| panic!("fixture `{name}` is a Galois connection: {e}"))
}

/// The canonical connection on the 3×3 grid ([`grid3x3`] on both sides).
///
/// Essential, retractable, and unique-closure; its lower adjoint fixes
/// `{0, H1, H2, H4}` and its upper adjoint fixes `{0, H3, H5, G}`. The
/// upper adjoint is additive and the connection preserves uniform dimension.
/// `H3` is closed on the codomain side without being a fixed point there.
pub fn grid_pair() -> GaloisConnection {
    connection(
        "grid_pair",
        grid3x3(),
        grid3x3(),
        &[
            ("0", "0"),
            ("H1", "H1"),
            ("H2", "H2"),
            ("H3", "H1"),
            ("H4", "H4"),
            ("H5", "H2"),
            ("H6", "H4"),
            ("H7", "H4"),
            ("G", "H4"),
        ],
        &[
            ("0", "0"),
            ("H1", "H3"),
            ("H2", "H5"),
            ("H3", "H3"),
            ("H4", "G"),
            ("H5", "H5"),
            ("H6", "G"),
            ("H7", "G"),
            ("G", "G"),
        ],
    )
}

/// The sublattice inclusion [`z2z4_sub`] → [`z2z4`] with its floor map back.
///
/// Essential and retractable, but not unique-closure: the counit image of
/// `H6` is `H3`, whose closures in [`z2z4`] are `{H5, H6}`, not `{H6}`
/// alone.
pub fn inclusion_floor() -> GaloisConnection {
    connection(
        "inclusion_floor",
        z2z4_sub(),
        z2z4(),
        &[
            ("0", "0"),
            ("H1", "H1"),
            ("H2", "H2"),
            ("H3", "H3"),
            ("H4", "H4"),
            ("H5", "H5"),
            ("G", "G"),
        ],
        &[
            ("0", "0"),
            ("H1", "H1"),
            ("H2", "H2"),
            ("H3", "H3"),
            ("H4", "H4"),
            ("H5", "H5"),
            ("H6", "H3"),
            ("G", "G"),
        ],
    )
}

/// A connection [`example_a`] → [`example_b`] failing all three headline
/// properties at once: not essential (witness `a3`), not retractable
/// (witness `b2`), and not unique-closure (witness `b5`).
///
/// Also exhibits a fixed point of the round-trip that is not closed (`a4`)
/// and two failures of essentiality transport across the maps.
pub fn mixed_pair() -> GaloisConnection {
    connection(
        "mixed_pair",
        example_a(),
        example_b(),
        &[
            ("0", "0"),
            ("a1", "b1"),
            ("a2", "b4"),
            ("a3", "1"),
            ("a4", "b1"),
            ("a5", "1"),
            ("a6", "1"),
            ("a7", "b3"),
            ("1", "1"),
        ],
        &[
            ("0", "0"),
            ("b1", "a4"),
            ("b2", "0"),
            ("b3", "a7"),
            ("b4", "a2"),
            ("b5", "a7"),
            ("b6", "a7"),
            ("1", "1"),
        ],
    )
}

/// A variant of [`mixed_pair`] that swaps the images of `a2`/`b2` so that the
/// connection becomes retractable while remaining neither essential
/// (witness `a3`) nor unique-closure (witness `b5`).
pub fn retract_pair() -> GaloisConnection {
    connection(
        "retract_pair",
        example_a(),
        example_b(),
        &[
            ("0", "0"),
            ("a1", "b1"),
            ("a2", "b2"),
            ("a3", "1"),
            ("a4", "b1"),
            ("a5", "1"),
            ("a6", "1"),
            ("a7", "b3"),
            ("1", "1"),
        ],
        &[
            ("0", "0"),
            ("b1", "a4"),
            ("b2", "a2"),
            ("b3", "a7"),
            ("b4", "a2"),
            ("b5", "a7"),
            ("b6", "a7"),
            ("1", "1"),
        ],
    )
}

/// The ceiling/inclusion pair [`example_c`] ⇄ [`diamond_m4`]:
/// the lower adjoint sends `c5` to the top and fixes everything else, the
/// upper adjoint is the label inclusion.
///
/// Cyclically essential but not essential (witness `c5`, which misses the
/// cyclic atom `c1`), retractable, unique-closure, and its upper adjoint is
/// not additive (witness `c2`, `c3`).
pub fn ceiling_pair() -> GaloisConnection {
    connection(
        "ceiling_pair",
        example_c(),
        diamond_m4(),
        &[
            ("0", "0"),
            ("c1", "c1"),
            ("c2", "c2"),
            ("c3", "c3"),
            ("c4", "c4"),
            ("c5", "1"),
            ("1", "1"),
        ],
        &[
            ("0", "0"),
            ("c1", "c1"),
            ("c2", "c2"),
            ("c3", "c3"),
            ("c4", "c4"),
            ("1", "1"),
        ],
    )
}

/// The residuated pair of "meet with `y`" on the four-element chain
/// ([`chain4`] on both sides): the lower adjoint caps at `y`, the upper
/// adjoint sends everything above `x` that reaches `y` to the top.
///
/// Essential, retractable, and unique-closure; a minimal example where all
/// three headline properties hold on a chain.
pub fn chain_residual() -> GaloisConnection {
    connection(
        "chain_residual",
        chain4(),
        chain4(),
        &[("0", "0"), ("x", "x"), ("y", "y"), ("1", "y")],
        &[("0", "0"), ("x", "x"), ("y", "1"), ("1", "1")],
    )
}

/// All fixture connections, in a fixed order.
pub fn all_connections() -> Vec<GaloisConnection> {
    vec![
        grid_pair(),
        inclusion_floor(),
        mixed_pair(),
        retract_pair(),
        ceiling_pair(),
        chain_residual(),
    ]
}

/// Fixture connection by name, if any.
pub fn connection_by_name(name: &str) -> Option<GaloisConnection> {
    all_connections().into_iter().find(|c| c.name() == name)
}
