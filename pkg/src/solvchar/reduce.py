"""Stepwise reduction of character triples along linear constituents.

A reduction step picks a normal subgroup L between the center and the normal
subgroup of a triple, a linear constituent lam of psi|_L over the central
character, and passes to the stabilizer of lam: the new group is G(lam), the
new normal subgroup N(lam) = N cap G(lam), and the new character is the
Clifford correspondent of psi over lam.  Chains of proper steps strictly
shrink the group, so they terminate; a triple with no proper step available
is linearly irreducible, and a chain ending in one is a linear limit.

Every step re-bases to the standalone presentation of the stabilizer, so a
chain carries explicit element maps back to its origin.  All chain
invariants (centers grow, kernels grow, central characters restrict to one
another) are asserted at construction time.
"""

from __future__ import annotations

from math import gcd, lcm

from .chartab import (
    Character,
    character_table,
    conjugate_character,
    induce,
    inner_product_int,
    is_invariant,
    linear_characters,
)
from .clifford import (
    Triple,
    _orbit_and_stabilizer,
    character_on_subgroup,
    clifford_correspondent,
    intern_subgroup,
    lies_above,
    make_triple,
    restrict_between,
    stabilizer,
)
from .cyclotomic import ONE
from .pcgroup import (
    Subgroup,
    centralizer,
    is_nilpotent_subgroup,
    normal_subgroups,
    quotient,
)


# -- characters moved between nested presentations ----------------------------


def _copy_inside(H: Subgroup, L: Subgroup) -> Subgroup:
    """The copy of L inside presH, for subgroups L <= H of one parent."""
    assert L.parent is H.parent and L.elems <= H.elems
    _, _, coordH = H.as_group()
    return intern_subgroup(
        Subgroup(H.as_group()[0], frozenset(coordH(g) for g in L.elems))
    )


def _char_inside(H: Subgroup, L: Subgroup, lam: Character):
    """lam, living on L.as_group()[0], rebased onto the copy of L in presH."""
    L_in_H = _copy_inside(H, L)
    _, embH, _ = H.as_group()
    _, _, coordL = L.as_group()
    moved = character_on_subgroup(
        L_in_H,
        lambda h: lam.value_at_idx(coordL(embH(h))),
        irreducible=lam.irreducible,
    )
    return L_in_H, moved


def _correspondent_value_fn(container: Subgroup, theta: Character, L: Subgroup, lam: Character):
    """Clifford correspondent of theta over lam, taken inside `container`.

    theta must live on container.as_group()[0]; L <= container with L normal
    in the common parent.  Returns the stabilizer container(lam) as a set of
    parent indices, plus the correspondent as a value function on parent
    indices (defined on that stabilizer).
    """
    presC, embC, coordC = container.as_group()
    assert theta.group is presC
    L_in_C, lam_C = _char_inside(container, L, lam)
    corr = clifford_correspondent(theta, lam_C, L_in_C)
    stab_C = stabilizer(lam_C, L_in_C)
    stab_elems = frozenset(embC(x) for x in stab_C.elems)
    if stab_C.order == presC.order:
        fn = lambda g: corr.value_at_idx(coordC(g))
    else:
        _, _, coord_sc = stab_C.as_group()
        fn = lambda g: corr.value_at_idx(coord_sc(coordC(g)))
    return stab_elems, fn


# -- steps and chains ----------------------------------------------------------


class ReductionStep:
    """One reduction: the pair (L, lam) and the triple it produces.

    stab is the stabilizer of lam as a subgroup of the previous triple's
    group; result lives on stab.as_group()[0].
    """

    __slots__ = ("L", "lam", "stab", "result")

    def __init__(self, L: Subgroup, lam: Character, stab: Subgroup, result: Triple):
        self.L = L
        self.lam = lam
        self.stab = stab
        self.result = result

    def __repr__(self):
        return f"<ReductionStep |L|={self.L.order} -> |G|={self.result.G.order}>"


class ReductionChain:
    """A validated chain of reduction steps starting from origin.

    Construction checks, per step: the step is proper, it is based in the
    previous presentation, the center and kernel grow, and the new central
    character restricts to the old one.
    """

    __slots__ = ("origin", "steps", "_levels")

    def __init__(self, origin: Triple, steps):
        self.origin = origin
        self.steps = tuple(steps)
        self._levels = None
        cur = origin
        for step in self.steps:
            assert step.stab.parent is cur.G, "step must be based in the current group"
            assert step.L.parent is cur.G and step.L.is_normal_in()
            assert step.L.elems <= cur.N.elems
            assert step.lam.values[0] == ONE, "reduction constituents are linear"
            assert step.result.G.order < cur.G.order, "recorded steps are proper"
            presS, embS, coordS = step.stab.as_group()
            assert step.result.G is presS
            new_center = {embS(z) for z in step.result.center.elems}
            assert cur.center.elems <= new_center, "centers grow along a chain"
            _, _, coord_zc = cur.center.as_group()
            _, _, coord_zn = step.result.center.as_group()
            for z in cur.center.elems:
                old = cur.central_character.value_at_idx(coord_zc(z))
                new = step.result.central_character.value_at_idx(coord_zn(coordS(z)))
                assert new == old, "central characters restrict along a chain"
            new_kernel = {embS(x) for x in step.result.kernel.elems}
            assert cur.kernel.elems <= new_kernel, "kernels grow along a chain"
            cur = step.result

    @property
    def terminal(self) -> Triple:
        return self.steps[-1].result if self.steps else self.origin

    def __len__(self):
        return len(self.steps)

    def __repr__(self):
        orders = [self.origin.G.order] + [s.result.G.order for s in self.steps]
        return f"<ReductionChain {' -> '.join(map(str, orders))}>"

    def level_maps(self):
        """Per level: (presentation, idx -> origin idx, origin idx -> idx)."""
        if self._levels is None:
            pres0 = self.origin.G
            ident = {i: i for i in range(pres0.order)}
            levels = [(pres0, ident, dict(ident))]
            for step in self.steps:
                presS, embS, _ = step.stab.as_group()
                prev = levels[-1][1]
                to_origin = {s: prev[embS(s)] for s in range(presS.order)}
                levels.append((presS, to_origin, {o: s for s, o in to_origin.items()}))
            self._levels = levels
        return self._levels

    def groups_at_origin(self) -> list:
        """Element sets of the successive groups, in origin coordinates."""
        return [frozenset(to_o.values()) for _, to_o, _ in self.level_maps()]

    def subgroup_at_origin(self, H: Subgroup, level: int = -1) -> Subgroup:
        """A subgroup of the level presentation copied back into the origin."""
        pres, to_o, _ = self.level_maps()[level]
        assert H.parent is pres
        return intern_subgroup(
            Subgroup(self.origin.G, frozenset(to_o[x] for x in H.elems))
        )


# -- candidate enumeration and single steps ------------------------------------


def _candidates(T: Triple, full_range: bool = False):
    """Ordered (L, lam) pairs: L normal with Z(T) <= L <= N, lam a linear
    constituent of psi|_L restricting to the central character on Z(T).

    full_range drops the center bound and the central-character condition,
    enumerating every normal L <= N with a linear constituent under psi; the
    bounded form is a convenience, not a restriction, which differential
    tests confirm.
    """
    G, N, psi = T.G, T.N, T.psi
    _, _, coordN = N.as_group()
    above = None if full_range else T.center
    out = []
    for L in normal_subgroups(G, within=N, above=above):
        L = intern_subgroup(L)
        presL = L.as_group()[0]
        psi_L = character_on_subgroup(L, lambda g: psi.value_at_idx(coordN(g)))
        lams = [
            lam for lam in linear_characters(presL)
            if inner_product_int(psi_L, lam) != 0
        ]
        if not full_range:
            lams = [
                lam for lam in lams
                if restrict_between(lam, L, T.center).values
                == T.central_character.values
            ]
        lams.sort(key=Character.sort_key)
        out.extend((L, lam) for lam in lams)
    return out


def _apply_step(T: Triple, L: Subgroup, lam: Character) -> ReductionStep | None:
    """Reduce T at (L, lam); None when lam is invariant (no proper step)."""
    G, N = T.G, T.N
    S = stabilizer(lam, L)
    if S.order == G.order:
        return None
    stab_in_N, val_fn = _correspondent_value_fn(N, T.psi, L, lam)
    assert stab_in_N == N.elems & S.elems, "stabilizer in N is N meet the stabilizer"
    presS, embS, coordS = S.as_group()
    n_prime = intern_subgroup(Subgroup(presS, frozenset(coordS(x) for x in stab_in_N)))
    assert n_prime.is_normal_in()
    psi_prime = character_on_subgroup(
        n_prime, lambda s: val_fn(embS(s)), irreducible=True
    )
    result = make_triple(presS, n_prime, psi_prime)
    return ReductionStep(L, lam, S, result)


def direct_reductions(T: Triple, full_range: bool = False) -> list[ReductionStep]:
    """Every proper one-step reduction of T, in deterministic order."""
    out = []
    for L, lam in _candidates(T, full_range):
        step = _apply_step(T, L, lam)
        if step is not None:
            out.append(step)
    return out


def is_linearly_irreducible(T: Triple) -> bool:
    """True iff T admits no proper reduction step."""
    return all(
        stabilizer(lam, L).order == T.G.order for L, lam in _candidates(T)
    )


def linear_limit(T: Triple, policy: str = "first"):
    """Reduce T until no proper step remains.

    policy "first" follows the first proper candidate at every level and
    returns one ReductionChain.  policy "all" explores every maximal chain
    and returns the list of all of them, for studying how terminals vary
    with the choices made.
    """
    if policy == "first":
        steps = []
        cur = T
        while True:
            step = None
            for L, lam in _candidates(cur):
                step = _apply_step(cur, L, lam)
                if step is not None:
                    break
            if step is None:
                break
            steps.append(step)
            cur = step.result
        return ReductionChain(T, steps)
    if policy == "all":
        chains = []

        def walk(cur, prefix):
            proper = direct_reductions(cur)
            if not proper:
                chains.append(ReductionChain(T, prefix))
                return
            for step in proper:
                walk(step.result, prefix + [step])

        walk(T, [])
        return chains
    raise ValueError(f"unknown policy {policy!r}")


# -- limits with an invariance constraint ---------------------------------------


def invariant_linear_limit(T: Triple, A: Subgroup, chi_stab: Subgroup | None = None) -> ReductionChain:
    """A linear limit whose chosen constituents are all fixed by chi_stab.

    A is a subgroup of T.G whose order is coprime to that of the reducible
    part of N; chi_stab defaults to the stabilizer of T.psi within A.  At
    each step the first proper candidate lam is replaced by a member of its
    N-orbit fixed by chi_stab; the coprime orders guarantee such a member
    exists, so an orbit without one is reported as a precondition failure.
    The fixing group lands in every stabilizer, and the invariance of each
    new character and central character is asserted as the chain grows.
    """
    G = T.G
    assert A.parent is G
    if chi_stab is None:
        chi_stab = stabilizer(T.psi, T.N, within=A)
    assert chi_stab.elems <= A.elems
    steps = []
    cur = T
    cur_stab = chi_stab
    while True:
        picked = None
        for L, lam in _candidates(cur):
            if stabilizer(lam, L).order == cur.G.order:
                continue
            orbit, _ = _orbit_and_stabilizer(lam, L, within=cur.N)
            orbit = sorted(orbit, key=Character.sort_key)
            fixed = [
                t for t in orbit
                if all(
                    conjugate_character(t, L, a).values == t.values
                    for a in cur_stab.igs_idxs()
                )
            ]
            if not fixed:
                raise ValueError(
                    "no orbit member is fixed by the given stabilizer; "
                    "the coprime-action preconditions do not hold"
                )
            picked = (L, fixed[0])
            break
        if picked is None:
            break
        L, lam = picked
        step = _apply_step(cur, L, lam)
        assert step is not None, "conjugate constituents have conjugate stabilizers"
        S = step.stab
        assert cur_stab.elems <= S.elems, "fixing lam puts the fixing group in G(lam)"
        presS, _, coordS = S.as_group()
        next_stab = intern_subgroup(
            Subgroup(presS, frozenset(coordS(a) for a in cur_stab.elems))
        )
        nxt = step.result
        assert is_invariant(nxt.psi, nxt.N, K=next_stab), (
            "the correspondent stays fixed by the fixing group"
        )
        assert is_invariant(nxt.central_character, nxt.center, K=next_stab), (
            "the central character stays fixed by the fixing group"
        )
        steps.append(step)
        cur = nxt
        cur_stab = next_stab
    return ReductionChain(T, steps)


# -- reductions of characters lying above the triple ----------------------------


def _overlying_walk(H: Subgroup, theta: Character, chain: ReductionChain):
    """Yield (step, H_i, theta_i) along the chain, for N <= H <= G."""
    cur_H, cur_theta = H, theta
    for step in chain.steps:
        assert step.L.elems <= cur_H.elems
        stab_in_H, val_fn = _correspondent_value_fn(cur_H, cur_theta, step.L, step.lam)
        S = step.stab
        assert stab_in_H == cur_H.elems & S.elems
        presS, embS, coordS = S.as_group()
        cur_H = intern_subgroup(
            Subgroup(presS, frozenset(coordS(x) for x in stab_in_H))
        )
        cur_theta = character_on_subgroup(
            cur_H, lambda s: val_fn(embS(s)), irreducible=True
        )
        yield step, cur_H, cur_theta


def reduce_overlying(H: Subgroup, theta: Character, chain: ReductionChain) -> Character:
    """Carry theta in Irr(H), lying above the chain's character, to the end.

    Returns the irreducible of H cap G' above the terminal character whose
    induction back to H is theta; the inducing round trip is checked end to
    end, not only step by step.
    """
    T0 = chain.origin
    G = T0.G
    assert H.parent is G and T0.N.elems <= H.elems
    presH, embH, _ = H.as_group()
    assert theta.group is presH
    if inner_product_int(restrict_between(theta, H, T0.N), T0.psi) == 0:
        raise ValueError("character does not lie above the chain's origin character")
    cur_H, cur_theta = H, theta
    for _, cur_H, cur_theta in _overlying_walk(H, theta, chain):
        pass
    if not chain.steps:
        return cur_theta

    # end to end: the reduced character induces theta in one shot
    _, to_origin, _ = chain.level_maps()[-1]
    _, embHf, _ = cur_H.as_group()
    final_origin = {to_origin[embHf(i)]: i for i in range(cur_H.order)}
    copy_in_H = _copy_inside(H, Subgroup(G, frozenset(final_origin)))
    theta_copy = character_on_subgroup(
        copy_in_H,
        lambda h: cur_theta.value_at_idx(final_origin[embH(h)]),
        irreducible=True,
    )
    assert induce(theta_copy, presH, copy_in_H).values == theta.values, (
        "the reduced character must induce the original"
    )
    return cur_theta


def overlying_chain(H: Subgroup, theta: Character, chain: ReductionChain) -> ReductionChain:
    """The parallel chain on (G, H, theta) for a normal H with N <= H <= G.

    Reuses the same (L, lam) steps; the results are fresh triples over the
    reduced overlying characters.  Chain validation reapplies every
    monotonicity check to the new triples, and the origin's center and
    kernel are checked to contain the base chain's.
    """
    T0 = chain.origin
    assert H.is_normal_in()
    origin = make_triple(T0.G, H, theta)
    assert T0.center.elems <= origin.center.elems
    assert T0.kernel.elems <= origin.kernel.elems
    new_steps = [
        ReductionStep(
            step.L, step.lam, step.stab,
            make_triple(step.stab.as_group()[0], H_i, theta_i),
        )
        for step, H_i, theta_i in _overlying_walk(H, theta, chain)
    ]
    return ReductionChain(origin, new_steps)


# -- structural checks on terminals ----------------------------------------------


def _nilpotent_quotient(N: Subgroup, K: Subgroup) -> bool:
    """Whether N/K is nilpotent, for K <= N normal subgroups of one parent."""
    K_in_N = _copy_inside(N, K)
    qr = quotient(N.as_group()[0], K_in_N)
    return is_nilpotent_subgroup(Subgroup.whole(qr.group))


def verify_terminal_center_structure(T: Triple) -> None:
    """Modulo the kernel: the center is the center of N, it is cyclic, it
    affords a faithful invariant linear character, and no abelian normal
    subgroup inside N properly contains it."""
    qr = quotient(T.G, T.kernel)
    Q = qr.group
    proj = qr.proj_array
    n_bar = intern_subgroup(Subgroup(Q, frozenset(int(proj[x]) for x in T.N.elems)))
    z_bar = intern_subgroup(Subgroup(Q, frozenset(int(proj[x]) for x in T.center.elems)))
    central = centralizer(Q, n_bar).elems & n_bar.elems
    assert z_bar.elems == central, "center modulo kernel is the center of N"
    presZ, embZb, _ = z_bar.as_group()
    assert presZ.exponent() == presZ.order, "center modulo kernel is cyclic"

    _, _, coordZ = T.center.as_group()
    zeta_bar = character_on_subgroup(
        z_bar,
        lambda q: T.central_character.value_at_idx(coordZ(int(qr.section[q]))),
        irreducible=True,
    )
    for i in range(z_bar.order):
        if embZb(i) != 0:
            assert zeta_bar.value_at_idx(i) != ONE, "the dropped character is faithful"
    assert is_invariant(zeta_bar, z_bar), "the dropped character stays invariant"

    for L in normal_subgroups(Q, within=n_bar):
        if L.as_group()[0].is_abelian():
            assert not z_bar.elems < L.elems, (
                "no abelian normal subgroup inside N properly contains the center"
            )


def verify_vanishing_off_center(T: Triple) -> None:
    """psi vanishes outside the center, is scalar on it, and is invariant."""
    presN, embN, _ = T.N.as_group()
    deg = T.psi.values[0]
    _, _, coordZ = T.center.as_group()
    for rep in presN.class_reps():
        g = embN(rep)
        if g in T.center.elems:
            expected = deg * T.central_character.value_at_idx(coordZ(g))
            assert T.psi.value_at_idx(rep) == expected
        else:
            assert T.psi.value_at_idx(rep).is_zero()
    assert is_invariant(T.psi, T.N), "a scalar-plus-zero character is invariant"


def _pair_stabilizer_elems(G, Z: Subgroup, zeta_val) -> frozenset:
    """Elements g with Z^g = Z and zeta(g z g^-1) = zeta(z) for all z in Z."""
    out = set()
    for g in range(G.order):
        gi = G.inv_idx(g)
        for z in Z.elems:
            zg = G.mul_idx(G.mul_idx(g, z), gi)
            if zg not in Z.elems or zeta_val(zg) != zeta_val(z):
                break
        else:
            out.add(g)
    return frozenset(out)


def verify_central_character_determines_reduction(chain: ReductionChain) -> None:
    """At every level: the level's group is the stabilizer of its central
    character in the origin group, its normal subgroup is the stabilizer
    inside the origin's, and its character is the unique irreducible of that
    stabilizer lying above the central character and inducing the origin's.
    When the terminal is linearly irreducible with nilpotent N/Z, the
    terminal character is the only one above its central character.
    """
    T0 = chain.origin
    G = T0.G
    levels = chain.level_maps()
    presN0, embN0, coordN0 = T0.N.as_group()
    for k in range(1, len(chain.steps) + 1):
        Tk = chain.steps[k - 1].result
        _, to_origin, _ = levels[k]

        z_origin = {to_origin[z]: z for z in Tk.center.elems}
        Z0 = intern_subgroup(Subgroup(G, frozenset(z_origin)))
        _, _, coord_zk = Tk.center.as_group()
        zeta_vals = {
            g: Tk.central_character.value_at_idx(coord_zk(i))
            for g, i in z_origin.items()
        }
        stab_elems = _pair_stabilizer_elems(G, Z0, zeta_vals.__getitem__)
        assert stab_elems == frozenset(to_origin.values()), (
            "the level group is the stabilizer of its central character"
        )

        _, embNk, coordNk = Tk.N.as_group()
        n_origin = frozenset(to_origin[embNk(i)] for i in range(Tk.N.order))
        assert n_origin == T0.N.elems & stab_elems, (
            "the level normal subgroup is the stabilizer inside N"
        )

        # unique irreducible of N' above zeta' inducing psi, and it is psi'
        N_red = _copy_inside(T0.N, Subgroup(G, n_origin))
        presNr, embNr, coordNr = N_red.as_group()
        Z_in_Nr = _copy_inside(N_red, _copy_inside(T0.N, Z0))
        zeta_r = character_on_subgroup(
            Z_in_Nr,
            lambda nr: zeta_vals[embN0(embNr(nr))],
            irreducible=True,
        )
        overlying = [
            cand
            for cand in character_table(presNr).irreducibles
            if lies_above(cand, zeta_r, Z_in_Nr)
        ]
        matches = [
            cand
            for cand in overlying
            if induce(cand, presN0, N_red).values == T0.psi.values
        ]
        assert len(matches) == 1, "exactly one overlying character induces psi"
        got = matches[0]
        for i in range(Tk.N.order):
            o = to_origin[embNk(i)]
            assert got.value_at_idx(coordNr(coordN0(o))) == Tk.psi.value_at_idx(
                coordNk(embNk(i))
            ), "the unique inducing character is the level character"

        if (
            k == len(chain.steps)
            and _nilpotent_quotient(Tk.N, Tk.center)
            and is_linearly_irreducible(Tk)
        ):
            assert len(overlying) == 1, (
                "with nilpotent N/Z the terminal character is alone above zeta"
            )


def verify_centralizer_survival(chain: ReductionChain, B: Subgroup) -> None:
    """A subgroup centralizing N survives into every group of the chain."""
    G = chain.origin.G
    assert B.parent is G
    cen = centralizer(G, chain.origin.N)
    assert B.elems <= cen.elems, "B must centralize the normal subgroup"
    for elems in chain.groups_at_origin():
        assert B.elems <= elems, "centralizing subgroups survive every step"


# -- componentwise treatment of nilpotent normal subgroups -----------------------


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _component_exponents(orders: list[int]) -> list[int]:
    """k_i with k_i = 1 mod orders[i] and 0 mod the rest (orders coprime)."""
    total = 1
    for e in orders:
        total *= e
    out = []
    for e in orders:
        rest = total // e
        out.append((rest * pow(rest, -1, e)) % total if e > 1 else 0)
    return out


def _is_p_power(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def _unique_constituent(psi: Character, N: Subgroup, Np: Subgroup) -> Character:
    _, _, coordN = N.as_group()
    rest = character_on_subgroup(Np, lambda g: psi.value_at_idx(coordN(g)))
    found = None
    for cand in character_table(Np.as_group()[0]).irreducibles:
        if inner_product_int(rest, cand) != 0:
            assert found is None, "restriction to a direct factor has one constituent"
            found = cand
    assert found is not None
    return found


def sylow_components(T: Triple) -> list[Triple]:
    """Split (G, N, psi) over the primary components of a nilpotent N.

    Returns one triple per prime dividing |N|, each carrying the unique
    constituent of psi on that component; the component values multiply back
    to psi, which is asserted classwise.
    """
    G, N = T.G, T.N
    assert is_nilpotent_subgroup(N), "component splitting needs a nilpotent subgroup"
    presN, embN, _ = N.as_group()
    parts = []
    for p in _prime_factors(N.order):
        elems = frozenset(x for x in N.elems if _is_p_power(G.element_order(x), p))
        Np = intern_subgroup(Subgroup(G, elems))
        assert Np.is_normal_in(), "primary components of a normal subgroup are normal"
        parts.append(make_triple(G, Np, _unique_constituent(T.psi, N, Np)))

    ks = _component_exponents([part.N.as_group()[0].exponent() for part in parts])
    for rep in presN.class_reps():
        x = embN(rep)
        prod = ONE
        for part, k in zip(parts, ks):
            xp = G.pow_idx(x, k)
            assert xp in part.N.elems
            _, _, coordP = part.N.as_group()
            prod = prod * part.psi.value_at_idx(coordP(xp))
        assert prod == T.psi.value_at_idx(rep), "component values multiply to psi"
    return parts


def assemble_component_limits(T: Triple, chains: list[ReductionChain]) -> ReductionChain:
    """Replay componentwise limit chains into one limit of T, for nilpotent N.

    Each chain must reduce one of the component triples of T from
    sylow_components (same ambient group object).  Steps are replayed on the
    composite triple in order, skipping any that stop being proper; the
    outcome is checked to be a linear limit whose group is the intersection
    of the component terminals' groups and whose normal subgroup, center,
    kernel, character and central character all assemble from the component
    terminals as direct products.
    """
    G = T.G
    assert all(c.origin.G is G for c in chains)
    orders = [c.origin.N.order for c in chains]
    total = 1
    for d in orders:
        total *= d
    assert total == T.N.order and all(
        gcd(a, b) == 1 for i, a in enumerate(orders) for b in orders[i + 1:]
    ), "chains must cover the component triples exactly"

    cur = T
    steps = []
    cur_to_origin = {i: i for i in range(G.order)}
    for comp in chains:
        levels = comp.level_maps()
        for j, step in enumerate(comp.steps):
            _, to_o, from_o = levels[j]
            origin_to_cur = {o: c for c, o in cur_to_origin.items()}
            L_cur = intern_subgroup(
                Subgroup(cur.G, frozenset(origin_to_cur[to_o[x]] for x in step.L.elems))
            )
            _, _, coordL = step.L.as_group()
            lam_cur = character_on_subgroup(
                L_cur,
                lambda c, c2o=cur_to_origin, f=from_o, cl=coordL, lv=step.lam: (
                    lv.value_at_idx(cl(f[c2o[c]]))
                ),
                irreducible=True,
            )
            new = _apply_step(cur, L_cur, lam_cur)
            if new is None:
                continue
            _, embS, _ = new.stab.as_group()
            cur_to_origin = {
                s: cur_to_origin[embS(s)] for s in range(new.result.G.order)
            }
            steps.append(new)
            cur = new.result
    out = ReductionChain(T, steps)

    term = out.terminal
    assert is_linearly_irreducible(term), "the assembled terminal is a limit"

    meet = frozenset(range(G.order))
    for comp in chains:
        meet &= comp.groups_at_origin()[-1]
    assert frozenset(cur_to_origin.values()) == meet, (
        "the assembled group is the intersection of the component groups"
    )

    def fetch(comp: ReductionChain, part: str):
        """(origin idx -> value fn or None, elements at origin) of a piece."""
        t = comp.terminal
        sub = {"N": t.N, "Z": t.center, "K": t.kernel}[part]
        char = {"N": t.psi, "Z": t.central_character, "K": None}[part]
        _, to_o, _ = comp.level_maps()[-1]
        _, embP, _ = sub.as_group()
        at_origin = {to_o[embP(i)]: i for i in range(sub.order)}
        fn = (lambda g: char.value_at_idx(at_origin[g])) if char else None
        return frozenset(at_origin), fn

    _, to_o, _ = out.level_maps()[-1]
    for part, sub, char in (
        ("N", term.N, term.psi),
        ("Z", term.center, term.central_character),
        ("K", term.kernel, None),
    ):
        pieces = [fetch(comp, part) for comp in chains]
        prod_elems = frozenset([0])
        for elems, _ in pieces:
            prod_elems = frozenset(G.mul_idx(a, b) for a in prod_elems for b in elems)
        _, embT, _ = sub.as_group()
        origin_of = {to_o[embT(i)]: i for i in range(sub.order)}
        assert frozenset(origin_of) == prod_elems, (
            "terminal pieces assemble as direct products"
        )

        if char is not None:
            ks = _component_exponents(
                [_elems_exponent(G, elems) for elems, _ in pieces]
            )
            for g in origin_of:
                prod = ONE
                for (elems, fn), k in zip(pieces, ks):
                    gp = G.pow_idx(g, k)
                    assert gp in elems
                    prod = prod * fn(gp)
                assert prod == char.value_at_idx(origin_of[g]), (
                    "terminal characters factor over the components"
                )
    return out


def _elems_exponent(G, elems) -> int:
    exp = 1
    for x in elems:
        exp = lcm(exp, G.element_order(x))
    return exp


# -- reporting -------------------------------------------------------------------


def chain_report(chain: ReductionChain) -> dict:
    """JSON-ready summary: per step the orders and the chosen constituent,
    plus structural flags of the terminal."""

    def triple_row(T):
        return {
            "group_order": T.G.order,
            "normal_order": T.N.order,
            "degree": T.psi.degree,
            "center_order": T.center.order,
            "kernel_order": T.kernel.order,
        }

    term = chain.terminal
    return {
        "origin": triple_row(chain.origin),
        "steps": [
            {
                "subgroup_order": step.L.order,
                "constituent": [v.serialize() for v in step.lam.values],
                **triple_row(step.result),
            }
            for step in chain.steps
        ],
        "terminal": {
            **triple_row(term),
            "linearly_irreducible": is_linearly_irreducible(term),
            "nilpotent_quotient": _nilpotent_quotient(term.N, term.kernel),
        },
    }
