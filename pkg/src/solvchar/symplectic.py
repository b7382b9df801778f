"""Invariant alternating forms on abelian carriers.

One type serves two value conventions. Root-of-unity mode carries the form
c(x, y) = zeta([x, y]) that a character triple induces on N/Z(T) once that
quotient is abelian. Prime-field mode carries a symplectic bilinear form on
an elementary abelian group read as a vector space. Either way the values
generate a cyclic group, so the form is stored as an exponent table and the
mode only decides how a value is presented.

Classification follows the submodule convention: a subgroup of the carrier
only counts as isotropic, self-perpendicular and so on if it is stable
under every actor.
"""

from collections import namedtuple

import numpy as np

from .clifford import Triple, intern_subgroup
from .cyclotomic import Cyclotomic
from .pcgroup import (
    BoundExceeded,
    GroupMap,
    PcPresentation,
    Subgroup,
    _is_prime,
    derived_series,
    product_set,
    quotient,
)
from .reduce import ReductionChain

ENUMERATION_BOUND = 3**8


class FormedModule:
    """An abelian group with an alternating bi-additive form and actors.

    table[x, y] is the exponent e of c(x, y) in the cyclic value group of
    order modulus (the carrier exponent). Mode "unity" presents values as
    complex roots of unity, mode "field" as elements of the prime field.
    Actors are automorphisms of the carrier, normally the images of the
    acting group's polycyclic generators.
    """

    __slots__ = ("carrier", "actors", "table", "mode", "modulus", "_perms")

    def __init__(self, carrier: PcPresentation, actors, table, mode: str = "unity",
                 check: bool = True):
        if mode not in ("unity", "field"):
            raise ValueError(f"unknown form mode {mode!r}")
        self.carrier = carrier
        self.actors = tuple(actors)
        self.mode = mode
        self.modulus = carrier.exponent()
        tab = np.array(table, dtype=np.int64)
        tab.setflags(write=False)
        self.table = tab
        self._perms = None
        if check:
            self._validate()

    def _validate(self):
        C, m, tab = self.carrier, self.modulus, self.table
        assert C.is_abelian(), "carrier must be abelian"
        if self.mode == "field" and C.order > 1:
            assert _is_prime(m), "field mode needs an elementary abelian carrier"
        assert tab.shape == (C.order, C.order), "table must cover the carrier"
        assert tab.min() >= 0 and tab.max() < max(m, 1), "exponents out of range"
        assert all(tab[x, x] == 0 for x in range(C.order)), "form must be alternating"
        assert ((tab + tab.T) % m == 0).all(), "form must be skew-symmetric"
        # one generator at a time suffices for bi-additivity on both arguments
        for t in range(C.n):
            g = C.generator(t).idx
            shifted = np.fromiter(
                (C.mul_idx(x, g) for x in range(C.order)), dtype=np.int64,
                count=C.order,
            )
            assert (tab[shifted, :] == (tab + tab[g, :][None, :]) % m).all(), (
                "form must be additive in the first argument"
            )
            assert (tab[:, shifted] == (tab + tab[:, g][:, None]) % m).all(), (
                "form must be additive in the second argument"
            )
        for perm in self.actor_perms():
            assert len(set(perm.tolist())) == C.order, "actors must be bijective"
            assert (tab[np.ix_(perm, perm)] == tab).all(), (
                "form must be invariant under every actor"
            )

    def actor_perms(self) -> list:
        if self._perms is None:
            C = self.carrier
            perms = []
            for a in self.actors:
                assert a.source is C and a.target is C, "actors must act on the carrier"
                perms.append(
                    np.fromiter((a.apply_idx(x) for x in range(C.order)),
                                dtype=np.int64, count=C.order)
                )
            self._perms = perms
        return self._perms

    def value(self, x: int, y: int):
        """c(x, y) in the declared value group."""
        e = int(self.table[x, y])
        if self.mode == "field":
            return e
        return Cyclotomic.root_of_unity(self.modulus, e)

    def radical(self) -> Subgroup:
        rows = np.nonzero((self.table == 0).all(axis=1))[0]
        return Subgroup(self.carrier, frozenset(int(x) for x in rows))

    def is_nonsingular(self) -> bool:
        return self.radical().order == 1

    def __repr__(self):
        return (
            f"<FormedModule |carrier|={self.carrier.order} mode={self.mode} "
            f"actors={len(self.actors)}>"
        )


def perp(M: FormedModule, B: Subgroup) -> Subgroup:
    """The subgroup of carrier elements pairing trivially with all of B."""
    assert B.parent is M.carrier
    n = M.carrier.order
    gens = B.igs_idxs()
    if gens:
        mask = (M.table[gens, :] == 0).all(axis=0)
        elems = frozenset(int(x) for x in np.nonzero(mask)[0])
    else:
        elems = frozenset(range(n))
    out = Subgroup(M.carrier, elems)
    for b in B.igs_idxs():
        assert all(M.table[x, b] == 0 for x in out.igs_idxs()), (
            "the double perpendicular must contain B"
        )
    rad = frozenset(int(x) for x in np.nonzero((M.table == 0).all(axis=1))[0])
    assert B.order * out.order == n * len(B.elems & rad), (
        "perpendicular order must satisfy duality"
    )
    return out


def is_isotropic(M: FormedModule, B: Subgroup) -> bool:
    assert B.parent is M.carrier
    gens = B.igs_idxs()
    if not gens:
        return True
    return bool((M.table[np.ix_(gens, gens)] == 0).all())


def is_self_perpendicular(M: FormedModule, B: Subgroup) -> bool:
    return perp(M, B).elems == B.elems


def is_invariant_subgroup(M: FormedModule, B: Subgroup) -> bool:
    assert B.parent is M.carrier
    return all(
        int(perm[g]) in B.elems for perm in M.actor_perms() for g in B.igs_idxs()
    )


def _actor_orbit(M: FormedModule, x: int) -> frozenset:
    orbit = {x}
    frontier = [x]
    while frontier:
        y = frontier.pop()
        for perm in M.actor_perms():
            z = int(perm[y])
            if z not in orbit:
                orbit.add(z)
                frontier.append(z)
    return frozenset(orbit)


def invariant_isotropic_subgroups(M: FormedModule) -> list:
    """Every actor-stable isotropic subgroup of the carrier, smallest first.

    Grown bottom-up by adjoining whole actor-orbits, which reaches every
    invariant subgroup; pruning keeps only isotropic intermediate stages,
    which is complete because subgroups of isotropic subgroups stay
    isotropic.
    """
    C = M.carrier
    if C.order > ENUMERATION_BOUND:
        raise BoundExceeded(f"carrier order {C.order} exceeds {ENUMERATION_BOUND}")
    orbits = {}
    for x in range(1, C.order):
        if M.table[x, x] != 0:
            continue
        orb = _actor_orbit(M, x)
        orbits[min(orb)] = orb
    trivial = Subgroup.trivial(C)
    found = {trivial.elems: trivial}
    frontier = [trivial]
    while frontier:
        grown = []
        for B in frontier:
            for rep, orb in orbits.items():
                if rep in B.elems:
                    continue
                B2 = Subgroup.from_generator_idxs(C, list(B.igs_idxs()) + sorted(orb))
                if B2.elems in found or not is_isotropic(M, B2):
                    continue
                assert is_invariant_subgroup(M, B2)
                found[B2.elems] = B2
                grown.append(B2)
        frontier = grown
    return sorted(found.values(), key=lambda S: (S.order, S.key()))


def maximal_invariant_isotropic(M: FormedModule) -> list:
    """All maximal members, by inclusion, among invariant isotropic subgroups."""
    subs = invariant_isotropic_subgroups(M)
    return [B for B in subs if not any(B.elems < D.elems for D in subs)]


def is_anisotropic(M: FormedModule) -> bool:
    return len(invariant_isotropic_subgroups(M)) == 1


def is_hyperbolic(M: FormedModule) -> bool:
    return any(
        is_self_perpendicular(M, B) for B in invariant_isotropic_subgroups(M)
    )


def classification_report(M: FormedModule) -> dict:
    """JSON-ready structural summary of a formed module."""
    subs = invariant_isotropic_subgroups(M)
    return {
        "carrier_order": M.carrier.order,
        "mode": M.mode,
        "value_order": M.modulus,
        "nonsingular": M.is_nonsingular(),
        "radical_order": M.radical().order,
        "invariant_isotropic_orders": [B.order for B in subs],
        "maximal_invariant_isotropic_orders": [
            B.order for B in maximal_invariant_isotropic(M)
        ],
        "anisotropic": is_anisotropic(M),
        "hyperbolic": is_hyperbolic(M),
    }


# -- building modules ---------------------------------------------------------------


def with_actors(M: FormedModule, actors) -> FormedModule:
    """The same carrier and form under a different acting generator list."""
    return FormedModule(M.carrier, actors, M.table, mode=M.mode)


def _rescale(table: np.ndarray, m_old: int, m_new: int) -> np.ndarray:
    assert m_new >= 1 and m_old % m_new == 0
    step = m_old // m_new
    assert (table % step == 0).all(), "values must lie in the smaller value group"
    return (table // step) % max(m_new, 1)


def submodule(M: FormedModule, S: Subgroup) -> FormedModule:
    """Restrict the form and every actor to an actor-stable subgroup."""
    assert S.parent is M.carrier
    presS, embS, coordS = S.as_group()
    emb = [embS(x) for x in range(presS.order)]
    tab = _rescale(M.table[np.ix_(emb, emb)], M.modulus, presS.exponent())
    actors = []
    for a in M.actors:
        imgs = []
        for t in range(presS.n):
            y = a.apply_idx(embS(presS.generator(t).idx))
            if not S.contains_idx(y):
                raise ValueError("subgroup is not actor-stable")
            imgs.append(coordS(y))
        actors.append(GroupMap(presS, presS, imgs, check=True))
    return FormedModule(presS, actors, tab, mode=M.mode)


def _module_mod(M: FormedModule, K: Subgroup):
    """Quotient the carrier by a subgroup of the radical; the form descends."""
    assert K.parent is M.carrier
    idxs = sorted(K.elems)
    assert (M.table[idxs, :] == 0).all(), "K must pair trivially with the carrier"
    assert is_invariant_subgroup(M, K)
    qr = quotient(M.carrier, K)
    Q2 = qr.group
    sec = [int(qr.section[a]) for a in range(Q2.order)]
    tab = M.table[np.ix_(sec, sec)]
    pj = [int(x) for x in qr.proj_array]
    assert (M.table == tab[np.ix_(pj, pj)]).all(), (
        "form must be constant on K-cosets"
    )
    tab = _rescale(tab, M.modulus, Q2.exponent())
    actors = []
    for perm in M.actor_perms():
        imgs = [
            pj[int(perm[sec[Q2.generator(t).idx]])] for t in range(Q2.n)
        ]
        actors.append(GroupMap(Q2, Q2, imgs, check=True))
    return FormedModule(Q2, actors, tab, mode=M.mode), qr


def module_from_gram(carrier: PcPresentation, actors, gram,
                     mode: str = "unity") -> FormedModule:
    """Extend a Gram matrix of exponents over the generators bi-additively.

    The carrier must be a direct sum of its generator cycles (trivial power
    words), so exponent vectors add componentwise; row i of the Gram matrix
    must vanish mod the value order when multiplied by the order of
    generator i, or validation rejects the table.
    """
    if any(any(w) for w in carrier.powers):
        raise ValueError("carrier must be a direct sum of its generator cycles")
    m = carrier.exponent()
    gram = np.array(gram, dtype=np.int64) % max(m, 1)
    assert gram.shape == (carrier.n, carrier.n)
    vecs = np.array([carrier.unrank(x) for x in range(carrier.order)], dtype=np.int64)
    if carrier.n == 0:
        table = np.zeros((1, 1), dtype=np.int64)
    else:
        table = np.einsum("xi,ij,yj->xy", vecs, gram, vecs) % max(m, 1)
    return FormedModule(carrier, actors, table, mode=mode)


# -- the form a triple induces on N/Z(T) -----------------------------------------------


def _unity_exponent(v: Cyclotomic, m: int) -> int:
    root = v.as_root_of_unity()
    if root is None:
        raise ValueError("form value is not a root of unity")
    n, k = root
    if m % n:
        raise ValueError("form value order does not divide the carrier exponent")
    return (k * (m // n)) % m if m else 0


_QuotientFormData = namedtuple("_QuotientFormData", "module presN embN coordN qr")


def _quotient_form_data(T: Triple) -> _QuotientFormData:
    G, N, Z = T.G, T.N, T.center
    presN, embN, coordN = N.as_group()
    z_in_n = intern_subgroup(
        Subgroup(presN, frozenset(coordN(g) for g in Z.elems))
    )
    qr = quotient(presN, z_in_n)
    Q = qr.group
    if not Q.is_abelian():
        raise ValueError("the quotient by the triple center must be abelian")
    m = Q.exponent()

    zeta = T.central_character
    coordZ = Z.as_group()[2]
    comm_exp: dict[int, int] = {}

    def exp_of(k: int) -> int:
        e = comm_exp.get(k)
        if e is None:
            assert k in z_in_n.elems, "commutators must fall into the center"
            e = _unity_exponent(zeta.value_at_idx(coordZ(embN(k))), m)
            comm_exp[k] = e
        return e

    table = np.zeros((Q.order, Q.order), dtype=np.int64)
    sec = [int(qr.section[a]) for a in range(Q.order)]
    for a in range(Q.order):
        for b in range(Q.order):
            table[a, b] = exp_of(presN.comm_idx(sec[a], sec[b]))
    # well defined: every pair of representatives gives the same value
    pj = qr.proj_array
    for x in range(presN.order):
        for y in range(presN.order):
            assert table[pj[x], pj[y]] == exp_of(presN.comm_idx(x, y)), (
                "form must not depend on coset representatives"
            )

    actors = []
    for i in range(G.n):
        g = G.generator(i).idx
        imgs = [
            int(pj[coordN(G.conj_idx(embN(sec[Q.generator(t).idx]), g))])
            for t in range(Q.n)
        ]
        actors.append(GroupMap(Q, Q, imgs, check=True))
    module = FormedModule(Q, actors, table, mode="unity")
    return _QuotientFormData(module, presN, embN, coordN, qr)


def quotient_form(T: Triple) -> FormedModule:
    """The alternating form zeta([x, y]) on N/Z(T), with G acting by conjugation."""
    return _quotient_form_data(T).module


# -- actions of subgroups of the acting group -------------------------------------------


def subgroup_action_maps(M: FormedModule, acting: PcPresentation,
                         H: Subgroup) -> list:
    """Action maps for the canonical generators of H inside the acting group.

    M.actors must line up with the polycyclic generators of `acting`; the
    action of an arbitrary element is composed along its normal form.
    """
    if len(M.actors) != acting.n:
        raise ValueError("actors must correspond to the acting generators")
    assert H.parent is acting
    C = M.carrier
    perms = M.actor_perms()
    out = []
    for h in H.igs_idxs():
        A = np.arange(C.order)
        for t, e in enumerate(acting.unrank(h)):
            for _ in range(e):
                A = perms[t][A]
        out.append(
            GroupMap(C, C, [int(A[C.generator(t).idx]) for t in range(C.n)],
                     check=True)
        )
    return out


def verify_theorem_m_t1(M: FormedModule, acting: PcPresentation, H: Subgroup,
                        S: Subgroup) -> bool:
    """One instance of the hyperbolic-restriction statement.

    For an anisotropic module over an odd prime field, a submodule whose
    restriction to a subgroup of p-power index is hyperbolic must vanish.
    Hypothesis violations raise ValueError; a False return would mean the
    implication itself failed on a valid instance, signalling a bug.
    """
    if M.mode != "field":
        raise ValueError("the statement concerns prime-field modules")
    p = M.modulus
    if p % 2 == 0:
        raise ValueError("the characteristic must be odd")
    if len(M.actors) != acting.n:
        raise ValueError("actors must correspond to the acting generators")
    if derived_series(acting)[-1].order != 1:
        raise ValueError("the acting group must be solvable")
    if H.parent is not acting:
        raise ValueError("H must be a subgroup of the acting group")
    index = acting.order // H.order
    while p > 1 and index % p == 0:
        index //= p
    if index != 1:
        raise ValueError("H must have p-power index")
    if not is_anisotropic(M):
        raise ValueError("the module must be anisotropic")
    if S.parent is not M.carrier or not is_invariant_subgroup(M, S):
        raise ValueError("S must be an actor-stable subgroup")

    restricted = submodule(M, S)
    # anisotropy forces the restricted radical to vanish, so the form survives
    assert restricted.is_nonsingular(), "restricted form must stay symplectic"
    h_maps = subgroup_action_maps(M, acting, H)
    under_h = submodule(with_actors(M, h_maps), S)
    if is_hyperbolic(under_h):
        return S.order == 1
    return True


# -- limits against the isotropic description -------------------------------------------


def verify_limit_correspondence(T: Triple, chain: ReductionChain) -> bool:
    """Match a linear limit of T against the maximal-isotropic description.

    Checks G = G'N and G' cap N = N', locates L = Z(T')/Z(T) among the
    maximal invariant isotropic subgroups of N/Z(T), verifies perp(L) =
    N'/Z(T), and exhibits the canonical map N'/Z(T') -> perp(L)/L as a
    form-preserving, action-equivariant isomorphism. Returns True when
    every check passes; a degenerate form is rejected up front.
    """
    if chain.origin is not T:
        raise ValueError("the chain must start at the given triple")
    data = _quotient_form_data(T)
    M = data.module
    if not M.is_nonsingular():
        raise ValueError("the quotient form must be nonsingular")
    G, N = T.G, T.N
    Tp = chain.terminal
    presT = Tp.G
    Gp = chain.subgroup_at_origin(Subgroup.whole(presT))
    Np = chain.subgroup_at_origin(Tp.N)
    Zp = chain.subgroup_at_origin(Tp.center)
    assert product_set(Gp, N) == frozenset(range(G.order)), "G must factor as G'N"
    assert (Gp.elems & N.elems) == Np.elems, "G' must meet N in N'"

    proj, coordN, embN = data.qr.proj_array, data.coordN, data.embN
    Q = M.carrier
    L = intern_subgroup(
        Subgroup(Q, frozenset(int(proj[coordN(g)]) for g in Zp.elems))
    )
    nbar = frozenset(int(proj[coordN(g)]) for g in Np.elems)
    assert is_invariant_subgroup(M, L) and is_isotropic(M, L)
    assert any(L.elems == B.elems for B in maximal_invariant_isotropic(M)), (
        "Z(T')/Z(T) must be maximal among invariant isotropic subgroups"
    )
    Lperp = perp(M, L)
    assert Lperp.elems == nbar, "the perpendicular of L must be N'/Z(T)"

    # both sides of the canonical map, as formed modules
    termdata = _quotient_form_data(Tp)
    M1 = termdata.module
    presP, embP, coordP = Lperp.as_group()
    L_in_P = intern_subgroup(
        Subgroup(presP, frozenset(coordP(x) for x in L.elems))
    )
    M2, qr2 = _module_mod(submodule(M, Lperp), L_in_P)
    Q1, Q2 = M1.carrier, M2.carrier
    assert Q1.order == Q2.order, "N'/Z(T') and perp(L)/L must have equal order"
    assert M1.modulus == M2.modulus, "both sides must share the value group"

    to_origin = chain.level_maps()[-1][1]
    embN1 = Tp.N.as_group()[1]
    coordN1 = Tp.N.as_group()[2]
    pj2 = [int(x) for x in qr2.proj_array]
    phi = []
    for q in range(Q1.order):
        n1 = int(termdata.qr.section[q])
        g_orig = to_origin[embN1(n1)]
        xbar = int(proj[coordN(g_orig)])
        phi.append(pj2[coordP(xbar)])
    assert len(set(phi)) == Q1.order, "the canonical map must be a bijection"
    for a in range(Q1.order):
        for b in range(Q1.order):
            assert phi[Q1.mul_idx(a, b)] == Q2.mul_idx(phi[a], phi[b]), (
                "the canonical map must be a homomorphism"
            )
    assert (M1.table == M2.table[np.ix_(phi, phi)]).all(), (
        "the canonical map must preserve the forms"
    )

    # equivariance: G' acts on N'/Z(T') directly and on perp(L)/L through
    # its origin copy; the two actions must agree through the map
    sec = [int(data.qr.section[a]) for a in range(Q.order)]
    sec2 = [int(qr2.section[c]) for c in range(Q2.order)]
    for t in range(presT.n):
        g_orig = to_origin[presT.generator(t).idx]
        alpha = [
            int(proj[coordN(G.conj_idx(embN(sec[q]), g_orig))])
            for q in range(Q.order)
        ]
        beta = [pj2[coordP(alpha[embP(sec2[c])])] for c in range(Q2.order)]
        a1 = M1.actors[t]
        for q in range(Q1.order):
            assert phi[a1.apply_idx(q)] == beta[phi[q]], (
                "the canonical map must be action-equivariant"
            )
    return True
