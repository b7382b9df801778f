"""Character triples (G, N, psi) and Clifford-theoretic primitives.

A triple packages a group, a normal subgroup and an irreducible character of
that subgroup, together with three cached invariants: the center (the center
of the induced character psi^G), the central character (the unique linear
character of the center under psi^G, which is G-invariant and scalar under
psi), and the kernel (the kernel of psi^G, equal to the G-core of Ker psi
and to the kernel of the central character).

Everything is exact.  Characters of subgroups live on the standalone
presentation returned by Subgroup.as_group(); helpers here move characters
between presentations of nested subgroups via parent-group indices.
"""

from __future__ import annotations

from .chartab import (
    Character,
    character_center_subgroup,
    character_table,
    conjugate_character,
    induce,
    inner_product_int,
    is_invariant,
    is_irreducible,
    kernel_subgroup,
    linear_characters,
    restrict,
)
from .cyclotomic import ONE
from .pcgroup import PcPresentation, Subgroup, core, normal_subgroups


# -- characters across nested subgroups ---------------------------------------


def character_on_subgroup(H: Subgroup, value_at_parent, irreducible=None) -> Character:
    """Character of H.as_group()[0] with value value_at_parent(embed(h)) at h.

    value_at_parent receives parent-group element indices; it must be constant
    on H-classes (this is implied whenever it restricts a class function of a
    group containing H).
    """
    presH, embH, _ = H.as_group()
    vals = [value_at_parent(embH(rep)) for rep in presH.class_reps()]
    return Character(presH, vals, irreducible)


def restrict_between(theta: Character, S: Subgroup, L: Subgroup) -> Character:
    """Restrict theta in Irr(S) to L <= S, both subgroups of the same parent."""
    assert L.parent is S.parent and L.elems <= S.elems
    _, _, coordS = S.as_group()
    return character_on_subgroup(L, lambda g: theta.value_at_idx(coordS(g)))


def lies_above(chi: Character, theta: Character, H: Subgroup) -> bool:
    """True iff theta is a constituent of chi restricted to H <= chi.group."""
    assert H.parent is chi.group
    rest = restrict(chi, H)
    assert theta.group is rest.group, "theta must live on H.as_group()[0]"
    return inner_product_int(rest, theta) != 0


# -- orbits and stabilizers under conjugation ----------------------------------


def intern_subgroup(H: Subgroup) -> Subgroup:
    """Canonical instance per (parent, element set), so per-object caches hit."""
    pool = H.parent._cache.setdefault("interned_subgroups", {})
    return pool.setdefault(H.elems, H)


def _orbit_and_stabilizer(lam: Character, L: Subgroup, within: Subgroup | None = None):
    """Conjugation orbit of lam in Irr(L) and its stabilizer subgroup.

    The orbit is walked with a Schreier transversal over the generators of
    the acting group (the whole parent by default), so the cost scales with
    the orbit, not the group; Schreier's lemma yields the full stabilizer.
    """
    G = L.parent
    if within is None:
        gens = [G.generator(i).idx for i in range(G.n)]
        ambient = G.order
    else:
        assert within.parent is G
        gens = within.igs_idxs()
        ambient = within.order
    transversal = {lam.values: 0}
    orbit = [lam]
    queue = [lam]
    schreier: list[int] = []
    while queue:
        node = queue.pop(0)
        t = transversal[node.values]
        for s in gens:
            moved = conjugate_character(node, L, s)
            ts = G.mul_idx(t, s)
            u = transversal.get(moved.values)
            if u is None:
                transversal[moved.values] = ts
                orbit.append(moved)
                queue.append(moved)
            else:
                schreier.append(G.mul_idx(ts, G.inv_idx(u)))
    stab = intern_subgroup(Subgroup.from_generator_idxs(G, schreier))
    assert len(orbit) * stab.order == ambient, "orbit-stabilizer count"
    return orbit, stab


def character_orbit(lam: Character, L: Subgroup) -> list[Character]:
    """The orbit of lam in Irr(L) under conjugation by the parent group."""
    orbit, _ = _orbit_and_stabilizer(lam, L)
    return orbit


def stabilizer(lam: Character, L: Subgroup, within: Subgroup | None = None) -> Subgroup:
    """The stabilizer of lam in Irr(L), in the parent or in `within`."""
    _, stab = _orbit_and_stabilizer(lam, L, within)
    return stab


def clifford_constituents(chi: Character, L: Subgroup):
    """(multiplicity, orbit) for chi restricted to the normal subgroup L.

    The constituents of chi|_L form a single conjugation orbit appearing
    with uniform multiplicity; both facts are asserted.
    """
    assert L.is_normal_in()
    parts = _decompose_restriction(chi, L)
    mults = {m for m, _ in parts}
    assert len(mults) == 1, "Clifford multiplicity must be uniform"
    orbit = character_orbit(parts[0][1], L)
    assert {theta.values for _, theta in parts} == {t.values for t in orbit}
    return parts[0][0], orbit


def _decompose_restriction(chi: Character, L: Subgroup):
    rest = restrict(chi, L)
    table = character_table(rest.group)
    out = []
    for irr in table.irreducibles:
        m = inner_product_int(rest, irr)
        assert m >= 0
        if m:
            out.append((m, irr))
    return out


# -- the Clifford correspondent --------------------------------------------------


def clifford_correspondent(chi: Character, lam: Character, L: Subgroup) -> Character:
    """The unique irreducible of the stabilizer of lam above lam inducing chi.

    chi must be an irreducible of L.parent lying above lam in Irr(L), L
    normal.  When lam is invariant the correspondent is chi itself.
    """
    G = L.parent
    assert chi.group is G
    assert L.is_normal_in()
    if not lies_above(chi, lam, L):
        raise ValueError("character does not lie above the given constituent")
    S = stabilizer(lam, L)
    if S.order == G.order:
        return chi
    presS, embS, coordS = S.as_group()
    L_in_S = intern_subgroup(
        Subgroup.from_generator_idxs(presS, [coordS(g) for g in L.igs_idxs()])
    )
    coordL = _coord_of(L)
    lamS = character_on_subgroup(
        L_in_S,
        lambda s_idx: lam.value_at_idx(coordL(embS(s_idx))),
        irreducible=True,
    )
    index = G.order // S.order
    found = None
    for theta in character_table(presS).irreducibles:
        if theta.values[0].as_rational() * index != chi.values[0].as_rational():
            continue
        if inner_product_int(restrict(theta, L_in_S), lamS) == 0:
            continue
        if induce(theta, G, S).values == chi.values:
            assert found is None, "Clifford correspondent must be unique"
            found = theta
    assert found is not None, "an inducing constituent over lam must exist"
    return found


def _coord_of(H: Subgroup):
    return H.as_group()[2]


# -- triples ------------------------------------------------------------------------


class Triple:
    """An ordered triple (G, N, psi) with cached center, central character, kernel."""

    __slots__ = ("G", "N", "psi", "induced", "center", "central_character", "kernel")

    def __init__(self, G, N, psi, induced, center, central_character, kernel):
        self.G = G
        self.N = N
        self.psi = psi
        self.induced = induced
        self.center = center
        self.central_character = central_character
        self.kernel = kernel

    def __repr__(self):
        return (
            f"<Triple |G|={self.G.order} |N|={self.N.order} "
            f"psi(1)={self.psi.values[0]} |Z|={self.center.order}>"
        )


def make_triple(G: PcPresentation, N: Subgroup, psi: Character) -> Triple:
    """Build a triple and compute its center, central character and kernel.

    The central character is computed from psi's scalar action on the center
    (psi restricted there is psi(1) times a linear character); the equality
    with the route through psi^G is asserted.
    """
    if N.parent is not G:
        raise ValueError("N must be a subgroup of G")
    if not N.is_normal_in():
        raise ValueError("triple requires a normal subgroup")
    presN, embN, coordN = N.as_group()
    if psi.group is not presN:
        raise ValueError("psi must live on N.as_group()[0]")
    if not is_irreducible(psi):
        raise ValueError("triple requires an irreducible character")
    psi = Character(psi.group, psi.values, irreducible=True)

    ind = induce(psi, G, N)
    Z = character_center_subgroup(ind)
    assert Z.is_normal_in(), "center of an induced character is normal"
    assert Z.elems <= N.elems, "center must lie in the normal subgroup"

    inv_deg = 1 / psi.values[0].as_rational()
    zeta = character_on_subgroup(
        Z,
        lambda g: psi.value_at_idx(coordN(g)) * inv_deg,
        irreducible=True,
    )
    presZ = zeta.group
    assert zeta.values[0] == ONE
    for i in range(presZ.n):
        a = presZ.generator(i).idx
        for j in range(presZ.n):
            b = presZ.generator(j).idx
            prod = zeta.value_at_idx(presZ.mul_idx(a, b))
            assert prod == zeta.value_at_idx(a) * zeta.value_at_idx(b), (
                "central character must be multiplicative"
            )
    assert is_invariant(zeta, Z), "central character must be G-invariant"

    # second route: psi^G restricted to the center is psi^G(1) times zeta
    ind_deg = ind.values[0]
    rest = restrict(ind, Z)
    assert rest.group is presZ
    assert all(
        rv == ind_deg * zv for rv, zv in zip(rest.values, zeta.values)
    ), "scalar action of the induced character must match psi's"

    ker = kernel_subgroup(ind)
    ker_psi = Subgroup(G, frozenset(embN(x) for x in kernel_subgroup(psi).elems))
    assert ker == core(G, ker_psi), "kernel must be the core of Ker(psi)"
    ker_zeta = Subgroup(G, frozenset(Z.as_group()[1](x) for x in kernel_subgroup(zeta).elems))
    assert ker == ker_zeta, "kernel must equal the central character's kernel"
    assert ker.elems <= Z.elems

    return Triple(G, N, psi, ind, Z, zeta, ker)


# -- diagnostics used by the test suites ---------------------------------------------


def verify_center_characterization(T: Triple) -> None:
    """Exhaustively confirm the maximality description of the triple's center.

    Over every normal subgroup L of G inside N: psi lies over a G-invariant
    linear character of L exactly when L lies in the center, and then that
    character is the restriction of the central character, with psi scalar
    on L.
    """
    G, N, psi = T.G, T.N, T.psi
    _, _, coordN = N.as_group()
    _, _, coordZ = T.center.as_group()
    for L in normal_subgroups(G):
        if not L.elems <= N.elems:
            continue
        psi_L = character_on_subgroup(L, lambda g: psi.value_at_idx(coordN(g)))
        invariant_linears = [
            lam
            for lam in linear_characters(psi_L.group)
            if inner_product_int(psi_L, lam) != 0 and is_invariant(lam, L)
        ]
        inside = L.elems <= T.center.elems
        assert bool(invariant_linears) == inside, (
            "invariant linear constituents must occur exactly inside the center"
        )
        if invariant_linears:
            assert len(invariant_linears) == 1
            lam = invariant_linears[0]
            zeta_L = character_on_subgroup(
                L, lambda g: T.central_character.value_at_idx(coordZ(g))
            )
            assert lam.values == zeta_L.values, (
                "the invariant constituent must be the central character's restriction"
            )
            deg = psi.values[0]
            _, embL, _ = L.as_group()
            for rep in psi_L.group.class_reps():
                assert psi.value_at_idx(coordN(embL(rep))) == deg * lam.value_at_idx(rep)


def verify_correspondence_bijectivity(G: PcPresentation, L: Subgroup) -> None:
    """Check that induction biject Irr(S | lam) onto Irr(G | orbit of lam).

    Runs over every irreducible lam of L: collects Irr(G) above lam, maps
    each through its Clifford correspondent, and confirms the round trip and
    the counting both ways.
    """
    assert L.is_normal_in()
    presL, _, _ = L.as_group()
    table_G = character_table(G)
    for lam in character_table(presL).irreducibles:
        S = stabilizer(lam, L)
        above = [chi for chi in table_G.irreducibles if lies_above(chi, lam, L)]
        correspondents = []
        for chi in above:
            theta = clifford_correspondent(chi, lam, L)
            if S.order == G.order:
                assert theta.values == chi.values
            else:
                assert induce(theta, G, S).values == chi.values
            correspondents.append(theta)
        assert len({tuple(t.values) for t in correspondents}) == len(above), (
            "distinct characters must have distinct correspondents"
        )
        if S.order < G.order:
            presS, embS, coordS = S.as_group()
            L_in_S = intern_subgroup(
                Subgroup.from_generator_idxs(presS, [coordS(g) for g in L.igs_idxs()])
            )
            coordL = _coord_of(L)
            lamS = character_on_subgroup(
                L_in_S,
                lambda s_idx: lam.value_at_idx(coordL(embS(s_idx))),
                irreducible=True,
            )
            over_lam = [
                theta
                for theta in character_table(presS).irreducibles
                if inner_product_int(restrict(theta, L_in_S), lamS) != 0
            ]
            assert len(over_lam) == len(above), "induction must be onto"
