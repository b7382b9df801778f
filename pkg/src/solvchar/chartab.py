"""Exact character tables and character-level operations.

Tables are computed without floating point: abelian groups through their dual
(solving the power-relation chain in roots of unity), nonabelian groups by
the exact Dixon method: simultaneous eigenvectors of class-sum matrices over
a prime field F_l with l = 1 (mod exp(G)), lifted to cyclotomics by discrete
logarithm.  Row and column orthogonality are verified exactly before a table
is returned; equality of class functions is exact value equality, with no
tolerance parameters anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt, lcm

import numpy as np

from .cyclotomic import Cyclotomic, ONE, ZERO, cyc, geometric_sum_is_zero
from .pcgroup import (
    BoundExceeded, Element, PcPresentation, Subgroup,
    derived_subgroup, quotient, subgroups_of_index,
)


class LiftFailure(RuntimeError):
    """Internal failure in the modular lifting; signals a bug, never degraded."""


# -- characters ------------------------------------------------------------------


class Character:
    """A class function on a PcPresentation, one Cyclotomic per class.

    Values follow the canonical class order of conjugacy_class_data.  The
    irreducible flag is set when irreducibility is known by construction.
    """

    __slots__ = ("group", "values", "irreducible")

    def __init__(self, group: PcPresentation, values, irreducible: bool | None = None):
        self.group = group
        self.values = tuple(cyc(v) for v in values)
        assert len(self.values) == group.class_count
        self.irreducible = irreducible

    @property
    def degree(self) -> int:
        d = self.values[0].as_rational()
        assert d is not None and d.denominator == 1 and d > 0
        return int(d)

    def value_at_idx(self, idx: int) -> Cyclotomic:
        return self.values[self.group.class_of_idx(idx)]

    def __call__(self, x) -> Cyclotomic:
        if isinstance(x, Element):
            assert x.group is self.group
            return self.value_at_idx(x.idx)
        return self.value_at_idx(int(x))

    def is_linear(self) -> bool:
        return self.values[0] == ONE

    def complex_conjugate(self) -> "Character":
        return Character(
            self.group, [v.conjugate() for v in self.values], self.irreducible
        )

    def __mul__(self, other: "Character") -> "Character":
        assert self.group is other.group
        return Character(
            self.group, [a * b for a, b in zip(self.values, other.values)]
        )

    def __eq__(self, other):
        return (
            isinstance(other, Character)
            and self.group is other.group
            and self.values == other.values
        )

    def __hash__(self):
        return hash((id(self.group), self.values))

    def sort_key(self):
        return (self.degree, tuple(v.serialize() for v in self.values))

    def __repr__(self):
        return f"<Character deg {self.values[0]} of {self.group.name}>"


def trivial_character(G: PcPresentation) -> Character:
    return Character(G, [ONE] * G.class_count, irreducible=True)


def inner_product(a: Character, b: Character) -> Cyclotomic:
    G = a.group
    assert b.group is G
    sizes = G.class_sizes()
    total = ZERO
    for h, x, y in zip(sizes, a.values, b.values):
        total = total + x * y.conjugate() * h
    return total * Fraction(1, G.order)


def inner_product_int(a: Character, b: Character) -> int:
    v = inner_product(a, b).as_rational()
    assert v is not None and v.denominator == 1, "inner product of characters must be a rational integer"
    return int(v)


def is_irreducible(chi: Character) -> bool:
    return inner_product(chi, chi) == ONE


class CharacterTable:
    """The complete list of irreducible characters in canonical order."""

    __slots__ = ("group", "irreducibles")

    def __init__(self, group: PcPresentation, irreducibles):
        self.group = group
        self.irreducibles = tuple(irreducibles)
        assert len(self.irreducibles) == group.class_count

    @property
    def degrees(self) -> list[int]:
        return [chi.degree for chi in self.irreducibles]

    def linears(self) -> list[Character]:
        return [chi for chi in self.irreducibles if chi.is_linear()]

    def index_of(self, chi: Character) -> int:
        return self.irreducibles.index(chi)

    def __iter__(self):
        return iter(self.irreducibles)

    def __len__(self):
        return len(self.irreducibles)


# -- roots of unity as integer pairs ----------------------------------------------


def _root_normalize(o: int, c: int) -> tuple[int, int]:
    c %= o
    if c == 0:
        return (1, 0)
    g = gcd(c, o)
    return (o // g, c // g)


def _root_mul(a: tuple[int, int], b: tuple[int, int]) -> tuple[int, int]:
    o = lcm(a[0], b[0])
    return _root_normalize(o, a[1] * (o // a[0]) + b[1] * (o // b[0]))


def _root_pow(a: tuple[int, int], e: int) -> tuple[int, int]:
    return _root_normalize(a[0], a[1] * e)


# -- abelian dual ----------------------------------------------------------------


def _abelian_dual_roots(G: PcPresentation) -> list[list[tuple[int, int]]]:
    """All characters of an abelian G as root-of-unity pairs per generator.

    Solved bottom-up: the value at g_i is a p_i-th root of the value of its
    power word, which involves only later generators.
    """
    assert G.is_abelian()
    n = G.n
    assignments: list[dict[int, tuple[int, int]]] = [{}]
    for i in range(n - 1, -1, -1):
        p = G.orders[i]
        word = G.powers[i]
        nxt = []
        for asg in assignments:
            rhs = (1, 0)
            for j in range(i + 1, n):
                if word[j]:
                    rhs = _root_mul(rhs, _root_pow(asg[j], word[j]))
            o, c = rhs
            base = _root_normalize(o * p, c)
            for t in range(p):
                new = dict(asg)
                new[i] = _root_mul(base, (p, t) if t else (1, 0))
                nxt.append(new)
        assignments = nxt
    return [[asg[i] for i in range(n)] for asg in assignments]


def _abelian_exponent_data(G: PcPresentation) -> tuple[int, np.ndarray, np.ndarray]:
    """(E, T, V) for abelian G: value of character s at element x is
    zeta_E ** V[s, x], where T[s, i] is the exponent at generator i.

    Classes of an abelian group are singletons in rank order, so V columns
    are indexed by element rank directly.
    """
    got = G._cache.get("abelian_dual")
    if got is not None:
        return got
    duals = _abelian_dual_roots(G)
    E = 1
    for roots in duals:
        for o, _ in roots:
            E = lcm(E, o)
    T = np.zeros((len(duals), G.n), dtype=np.int64)
    for s, roots in enumerate(duals):
        for i, (o, c) in enumerate(roots):
            T[s, i] = c * (E // o) % E
    if G.n:
        exps = np.array(
            np.unravel_index(np.arange(G.order), G.orders), dtype=np.int64
        ).T
        V = (exps @ T.T).T % E
    else:
        V = np.zeros((1, 1), dtype=np.int64)
    order = sorted(range(V.shape[0]), key=lambda s: tuple(V[s]))
    T = T[order]
    V = V[order]
    got = (E, T, V)
    G._cache["abelian_dual"] = got
    return got


def _abelian_table_rows(G: PcPresentation) -> list[Character]:
    E, T, V = _abelian_exponent_data(G)
    reps = G.class_reps()
    assert reps == list(range(G.order)), "abelian classes must be singletons in rank order"
    cache: dict[int, Cyclotomic] = {}
    for t in map(int, np.unique(V)):
        root = Cyclotomic.root_of_unity(E, t)
        got = root.as_root_of_unity()
        assert got is not None and got == _root_normalize(E, t)
        cache[t] = root
    rows = []
    for s in range(V.shape[0]):
        vals = tuple(cache[int(t)] for t in V[s])
        rows.append(Character(G, vals, irreducible=True))
    return rows


def linear_characters(G: PcPresentation) -> list[Character]:
    """Linear characters of any G, by inflation from G/[G,G]."""
    got = G._cache.get("linears")
    if got is not None:
        return got
    if G.is_abelian():
        rows = _abelian_table_rows(G)
    else:
        q = quotient(G, derived_subgroup(G))
        qrows = _abelian_table_rows(q.group)
        reps = G.class_reps()
        rows = []
        for lam in qrows:
            vals = [lam.value_at_idx(int(q.proj_array[rep])) for rep in reps]
            rows.append(Character(G, vals, irreducible=True))
        rows.sort(key=lambda c: c.sort_key())
    G._cache["linears"] = rows
    return rows


# -- modular linear algebra helpers ----------------------------------------------


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _table_modulus(exponent: int, order: int) -> int:
    l = exponent + 1
    while True:
        if l > 2 * isqrt(order) + 1 and _is_prime(l) and order % l != 0:
            return l
        l += exponent


def _primitive_root(l: int) -> int:
    m = l - 1
    fac = []
    d, mm = 2, m
    while d * d <= mm:
        if mm % d == 0:
            fac.append(d)
            while mm % d == 0:
                mm //= d
        d += 1
    if mm > 1:
        fac.append(mm)
    for w in range(2, l):
        if all(pow(w, m // q, l) != 1 for q in fac):
            return w
    raise LiftFailure("no primitive root found")


def _rref(M: np.ndarray, l: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form mod l; returns (R, pivot columns)."""
    R = M % l
    R = R.astype(np.int64)
    rows, cols = R.shape
    piv = []
    rr = 0
    for c in range(cols):
        if rr >= rows:
            break
        nz = np.nonzero(R[rr:, c])[0]
        if len(nz) == 0:
            continue
        r0 = rr + int(nz[0])
        if r0 != rr:
            R[[rr, r0]] = R[[r0, rr]]
        R[rr] = (R[rr] * pow(int(R[rr, c]), -1, l)) % l
        for r in range(rows):
            if r != rr and R[r, c]:
                R[r] = (R[r] - R[r, c] * R[rr]) % l
        piv.append(c)
        rr += 1
    return R[:rr], piv


def _nullspace(M: np.ndarray, l: int) -> np.ndarray:
    """Rows spanning the right nullspace of M mod l."""
    R, piv = _rref(M, l)
    cols = M.shape[1]
    free = [c for c in range(cols) if c not in piv]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for t, fc in enumerate(free):
        basis[t, fc] = 1
        for r, pc in enumerate(piv):
            basis[t, pc] = (-int(R[r, fc])) % l
    return basis


def _coords_in_rref(R: np.ndarray, piv: list[int], vecs: np.ndarray, l: int) -> np.ndarray:
    """Coordinates of each row of vecs in the RREF basis R (must lie in span)."""
    coords = vecs[:, piv] % l
    recon = (coords @ R) % l
    if not np.array_equal(recon, vecs % l):
        raise LiftFailure("vector left the invariant subspace")
    return coords


def _poly_eval_all(coeffs: list[int], l: int) -> np.ndarray:
    """Evaluate a polynomial (ascending coefficients) at all points of F_l."""
    xs = np.arange(l, dtype=np.int64)
    vals = np.zeros(l, dtype=np.int64)
    for c in reversed(coeffs):
        vals = (vals * xs + c) % l
    return vals


def _poly_eval_matrix(coeffs: list[int], R: np.ndarray, l: int) -> np.ndarray:
    b = R.shape[0]
    out = np.zeros((b, b), dtype=np.int64)
    for c in reversed(coeffs):
        out = (out @ R + c * np.eye(b, dtype=np.int64)) % l
    return out


def _min_poly(R: np.ndarray, l: int) -> list[int]:
    """Minimal polynomial of R mod l (ascending coefficients, monic).

    The lcm of the Krylov polynomials of the standard basis vectors is the
    minimal polynomial; seeds are folded in until the lcm annihilates R.
    """
    b = R.shape[0]
    best: list[int] | None = None
    for seed in range(b):
        v = np.zeros(b, dtype=np.int64)
        v[seed] = 1
        K = np.array([v], dtype=np.int64)
        while True:
            # look for a dependency among the iterates
            Rk, piv = _rref(K, l)
            if Rk.shape[0] < K.shape[0]:
                # earlier rows are independent, so the last row is the
                # dependent one: R^m v = sum c_s R^s v gives the minimal
                # polynomial of v
                c = _solve_row_combination(K[:-1], K[-1], l)
                poly = [(-int(x)) % l for x in c] + [1]
                break
            nxt = (K[-1] @ R.T) % l
            K = np.vstack([K, nxt])
        best = poly if best is None else _poly_lcm(best, poly, l)
        if not _poly_eval_matrix(best, R, l).any():
            break
    assert best is not None and not _poly_eval_matrix(best, R, l).any()
    return best


def _solve_row_combination(rows: np.ndarray, target: np.ndarray, l: int) -> np.ndarray:
    """Solve c @ rows = target mod l."""
    k = rows.shape[0]
    aug = np.concatenate([rows.T % l, (target % l).reshape(-1, 1)], axis=1)
    R, piv = _rref(aug, l)
    c = np.zeros(k, dtype=np.int64)
    for r, pc in enumerate(piv):
        if pc == k:
            raise LiftFailure("inconsistent dependency solve")
        c[pc] = R[r, k]
    return c


def _poly_mul(a: list[int], b: list[int], l: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % l
    return out


def _poly_divmod(a: list[int], b: list[int], l: int) -> tuple[list[int], list[int]]:
    a = a[:]
    binv = pow(b[-1], -1, l)
    q = [0] * max(0, len(a) - len(b) + 1)
    while len(a) >= len(b) and any(a):
        if a[-1] == 0:
            a.pop()
            continue
        shift = len(a) - len(b)
        f = a[-1] * binv % l
        q[shift] = f
        for i, y in enumerate(b):
            a[shift + i] = (a[shift + i] - f * y) % l
        a.pop()
    while a and a[-1] == 0:
        a.pop()
    return q, a


def _poly_gcd(a: list[int], b: list[int], l: int) -> list[int]:
    while b and any(b):
        _, r = _poly_divmod(a, b, l)
        a, b = b, r
    inv = pow(a[-1], -1, l)
    return [x * inv % l for x in a]


def _poly_lcm(a: list[int], b: list[int], l: int) -> list[int]:
    g = _poly_gcd(a[:], b[:], l)
    q, r = _poly_divmod(_poly_mul(a, b, l), g, l)
    assert not any(r)
    inv = pow(q[-1], -1, l)
    return [x * inv % l for x in q]


# -- Dixon table ---------------------------------------------------------------


def _dixon_table(G: PcPresentation) -> list[Character]:
    class_of, classes = G.conjugacy_class_data()
    r = len(classes)
    reps = [rep for rep, _ in classes]
    sizes = [len(m) for _, m in classes]
    e = G.exponent()
    l = _table_modulus(e, G.order)
    w = _primitive_root(l)

    inv_class = [int(class_of[G.inv_idx(rep)]) for rep in reps]

    matrices: dict[int, np.ndarray] = {}

    def class_matrix(i: int) -> np.ndarray:
        got = matrices.get(i)
        if got is None:
            A = np.zeros((r, r), dtype=np.int64)
            for x in classes[i][1]:
                xi = G.inv_idx(int(x))
                for k, z in enumerate(reps):
                    A[int(class_of[G.mul_idx(xi, z)]), k] += 1
            matrices[i] = got = A
        return got

    # split the common eigenspaces of the commuting class matrices
    spaces: list[np.ndarray] = [np.eye(r, dtype=np.int64)]
    for i in range(1, r):
        if all(S.shape[0] == 1 for S in spaces):
            break
        A = class_matrix(i)
        nxt: list[np.ndarray] = []
        for B in spaces:
            b = B.shape[0]
            if b == 1:
                nxt.append(B)
                continue
            Bref, piv = _rref(B, l)
            img = (Bref @ A.T) % l
            # coords[s] expresses A·basis_s, so the matrix acting on column
            # coordinate vectors is the transpose
            R = _coords_in_rref(Bref, piv, img, l).T % l
            mp = _min_poly(R, l)
            roots = np.nonzero(_poly_eval_all(mp, l) == 0)[0]
            pieces = []
            for mu in roots:
                ker = _nullspace((R - int(mu) * np.eye(b, dtype=np.int64)) % l, l)
                if ker.shape[0]:
                    pieces.append((ker @ Bref) % l)
            if sum(p.shape[0] for p in pieces) != b:
                raise LiftFailure("class matrix not diagonalizable over F_l")
            nxt.extend(pieces)
        spaces = nxt
    if not all(S.shape[0] == 1 for S in spaces):
        raise LiftFailure("class matrices failed to separate the characters")

    inv_sizes = [pow(h, -1, l) for h in sizes]
    sqrt_bound = isqrt(G.order)
    # discrete logs for square roots and root-of-unity exponents
    dlog = np.full(l, -1, dtype=np.int64)
    acc = 1
    for t in range(l - 1):
        dlog[acc] = t
        acc = acc * w % l

    rows: list[Character] = []
    for S in spaces:
        v = S[0] % l
        if v[0] == 0:
            raise LiftFailure("eigenvector vanishes at the identity class")
        v = v * pow(int(v[0]), -1, l) % l
        s = 0
        for k in range(r):
            s = (s + int(v[k]) * int(v[inv_class[k]]) * inv_sizes[k]) % l
        if s == 0:
            raise LiftFailure("degree norm vanished")
        d2 = G.order * pow(s, -1, l) % l
        t = int(dlog[d2])
        if t % 2 != 0:
            raise LiftFailure("degree square is not a square mod l")
        d = pow(w, t // 2, l)
        if d > l - d:
            d = l - d
        if d > sqrt_bound or d * d % l != d2:
            raise LiftFailure("no valid degree in range")
        chi_mod = [(d * int(v[k]) % l) * inv_sizes[k] % l for k in range(r)]

        values: list[Cyclotomic] = [Cyclotomic.from_rational(d)]
        for k in range(1, r):
            o = G.element_order(reps[k])
            # pcls[s] = class of reps[k]^s, starting at s = 0 (identity)
            pcls = []
            x = 0
            for _ in range(o):
                pcls.append(int(class_of[x]))
                x = G.mul_idx(x, reps[k])
            zo = pow(w, (l - 1) // o, l)
            oinv = pow(o, -1, l)
            val = ZERO
            total = 0
            for t_exp in range(o):
                acc2 = 0
                for sdx in range(o):
                    acc2 = (acc2 + chi_mod[pcls[sdx]] * pow(zo, (-sdx * t_exp) % o, l)) % l
                m = acc2 * oinv % l
                if m > d:
                    raise LiftFailure("eigenvalue multiplicity out of range")
                total += m
                if m:
                    val = val + Cyclotomic.root_of_unity(o, t_exp) * m
            if total != d:
                raise LiftFailure("eigenvalue multiplicities do not sum to the degree")
            values.append(val)
        rows.append(Character(G, values, irreducible=True))

    assert sum(chi.degree**2 for chi in rows) == G.order
    return rows


# -- orthogonality verification ---------------------------------------------------


def _root_of_value(v: Cyclotomic) -> tuple[int, int]:
    root = v.as_root_of_unity()
    if root is None:
        raise AssertionError("linear character value is not a root of unity")
    return root


def _verify_abelian(table: CharacterTable) -> None:
    """Exact orthogonality for a table of linear characters.

    Every row is matched exactly against the dual exponent matrix, then the
    relations are checked on exponents.  A row inner product factorizes
    through the generators; each factor is a geometric sum over a cyclic
    factor of prime length p, zero exactly when the difference root is
    nontrivial with exponent killed by p.  A column sum vanishes exactly
    when the value exponents are equidistributed over the powers of the
    column's value root.
    """
    G = table.group
    E, T, V = _abelian_exponent_data(G)
    r = len(table.irreducibles)
    assert V.shape == (r, G.order) and r == G.order
    roots: dict[int, Cyclotomic] = {
        t: Cyclotomic.root_of_unity(E, t) for t in map(int, np.unique(V))
    }
    by_gen_roots = {tuple(map(int, T[s])): s for s in range(r)}
    assert len(by_gen_roots) == r
    gen_class = [G.class_of_idx(G.generator(i).idx) for i in range(G.n)]
    seen = set()
    for chi in table.irreducibles:
        assert chi.is_linear()
        key = tuple(
            c * (E // o) % E
            for o, c in (_root_of_value(chi.values[k]) for k in gen_class)
        )
        s = by_gen_roots.get(key)
        assert s is not None and s not in seen, "row is not a dual element"
        seen.add(s)
        row = V[s]
        for k, v in enumerate(chi.values):
            assert v == roots[int(row[k])], f"row {s} deviates at class {k}"
    orders = np.array(G.orders, dtype=np.int64)
    for t in range(r):
        diff = (T - T[t]) % E
        killed = ((diff * orders) % E == 0) & (diff != 0)
        others = np.flatnonzero(~killed.any(axis=1))
        assert list(others) == [t], f"row {t} not orthogonal to all other rows"
    # identity column sums to |G|; every other column must be separated from
    # it and hit each power of its value root equally often
    assert not V[:, 0].any()
    for k in range(1, G.order):
        col = V[:, k]
        g = int(np.gcd.reduce(col, initial=E))
        o = E // g
        assert o > 1, f"class {k} not separated from the identity"
        counts = np.bincount(col // g, minlength=o)
        assert counts.size == o and counts.min() == counts.max(), f"column {k} sum nonzero"


def _verify_nonabelian(table: CharacterTable) -> None:
    G = table.group
    rows = table.irreducibles
    r = len(rows)
    sizes = G.class_sizes()
    order = G.order
    conj_rows = [[v.conjugate() for v in chi.values] for chi in rows]
    for s in range(r):
        for t in range(s, r):
            acc = ZERO
            for k in range(r):
                acc = acc + rows[s].values[k] * conj_rows[t][k] * sizes[k]
            expected = order if s == t else 0
            assert acc == Cyclotomic.from_rational(expected), f"rows {s},{t}"
    # column orthogonality
    for k1 in range(r):
        for k2 in range(k1, r):
            acc = ZERO
            for s in range(r):
                acc = acc + rows[s].values[k1] * conj_rows[s][k2]
            expected = Fraction(order, sizes[k1]) if k1 == k2 else 0
            assert acc == Cyclotomic.from_rational(expected), f"cols {k1},{k2}"


def verify_table_orthogonality(table: CharacterTable) -> None:
    G = table.group
    assert sum(chi.degree**2 for chi in table.irreducibles) == G.order
    if G.is_abelian():
        _verify_abelian(table)
    else:
        _verify_nonabelian(table)


def character_table(G: PcPresentation) -> CharacterTable:
    got = G._cache.get("char_table")
    if got is not None:
        return got
    if G.is_abelian():
        rows = _abelian_table_rows(G)
    else:
        rows = _dixon_table(G)
        rows.sort(key=lambda c: c.sort_key())
    table = CharacterTable(G, rows)
    verify_table_orthogonality(table)
    G._cache["char_table"] = table
    return table


# -- induction / restriction -------------------------------------------------------


def induce(theta: Character, G: PcPresentation, H: Subgroup) -> Character:
    """Frobenius induction from a subgroup, via class fusion."""
    assert H.parent is G
    presH, _, coordH = H.as_group()
    assert theta.group is presH
    class_of, classes = G.conjugacy_class_data()
    vals = []
    for rep, members in classes:
        cent = Fraction(G.order, len(members))
        acc = ZERO
        for x in members:
            x = int(x)
            if x in H.elems:
                acc = acc + theta.value_at_idx(coordH(x))
        vals.append(acc * Fraction(cent, H.order))
    chi = Character(G, vals)
    assert chi.values[0] == Cyclotomic.from_rational(
        Fraction(G.order, H.order) * theta.values[0].as_rational()
    )
    return chi


def restrict(chi: Character, H: Subgroup) -> Character:
    G = chi.group
    assert H.parent is G
    presH, embedH, coordH = H.as_group()
    vals = [chi.value_at_idx(embedH(rep)) for rep in presH.class_reps()]
    return Character(presH, vals)


def decompose(chi: Character, table: CharacterTable | None = None) -> list[tuple[int, Character]]:
    """Multiplicities of chi against the irreducibles of its group."""
    if table is None:
        table = character_table(chi.group)
    out = []
    for irr in table.irreducibles:
        m = inner_product_int(chi, irr)
        assert m >= 0, "negative multiplicity: not a character"
        if m:
            out.append((m, irr))
    return out


# -- kernels and centers --------------------------------------------------------


def kernel_subgroup(chi: Character) -> Subgroup:
    G = chi.group
    deg = chi.values[0]
    elems = [
        x for x in range(G.order) if chi.values[G.class_of_idx(x)] == deg
    ]
    K = Subgroup(G, frozenset(elems))
    assert Subgroup.from_generator_idxs(G, elems).elems == K.elems
    return K


def character_center_subgroup(chi: Character) -> Subgroup:
    G = chi.group
    deg2 = chi.values[0] * chi.values[0]
    elems = [
        x
        for x in range(G.order)
        if chi.values[G.class_of_idx(x)].abs_squared() == deg2
    ]
    Z = Subgroup(G, frozenset(elems))
    assert Subgroup.from_generator_idxs(G, elems).elems == Z.elems
    return Z


# -- determinantal order ----------------------------------------------------------


def determinant_value(chi: Character, x_idx: int) -> Cyclotomic:
    """det(chi) at a group element, by Newton's identities on power values."""
    G = chi.group
    d = chi.degree
    # power_vals[i-1] = chi(x^i)
    power_vals = []
    y = int(x_idx)
    for _ in range(d):
        power_vals.append(chi.value_at_idx(y))
        y = G.mul_idx(y, int(x_idx))
    es = [ONE]
    for k in range(1, d + 1):
        acc = ZERO
        sign = 1
        for i in range(1, k + 1):
            term = es[k - i] * power_vals[i - 1]
            acc = acc + (term if sign > 0 else term * -1)
            sign = -sign
        es.append(acc * Fraction(1, k))
    return es[d]


def determinantal_order(chi: Character) -> int:
    """Order of det(chi) in the group of linear characters."""
    G = chi.group
    o = 1
    for i in range(G.n):
        v = determinant_value(chi, G.generator(i).idx)
        root = v.as_root_of_unity()
        assert root is not None, "determinant value must be a root of unity"
        o = lcm(o, Cyclotomic.root_of_unity(*root).multiplicative_order())
    return o


# -- monomiality -----------------------------------------------------------------


@dataclass(frozen=True)
class MonomialResult:
    status: str  # "monomial" | "not_monomial" | "indeterminate"
    subgroup: Subgroup | None = None
    linear: Character | None = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.status == "monomial"


def is_monomial(chi: Character) -> MonomialResult:
    """Search for a subgroup of index chi(1) and a linear inducing chi.

    The index is forced: an induced linear has degree |G:H|.  Conjugate
    subgroups induce the same characters, so class representatives suffice.
    A blown enumeration bound reports indeterminate, never false.
    """
    G = chi.group
    d = chi.degree
    if d == 1:
        return MonomialResult("monomial", Subgroup.whole(G), chi)
    try:
        cands = subgroups_of_index(G, d)
    except BoundExceeded as exc:
        return MonomialResult("indeterminate", detail=str(exc))
    for H in cands:
        presH, _, _ = H.as_group()
        for lam in linear_characters(presH):
            if induce(lam, G, H).values == chi.values:
                return MonomialResult("monomial", H, lam)
    return MonomialResult("not_monomial")


# -- extensions ------------------------------------------------------------------


def conjugate_character(theta: Character, N: Subgroup, g_idx: int) -> Character:
    """theta^g on the normal subgroup N: x -> theta(g x g^{-1})."""
    G = N.parent
    presN, embedN, coordN = N.as_group()
    assert theta.group is presN
    gi = G.inv_idx(int(g_idx))
    vals = []
    for rep in presN.class_reps():
        x = embedN(rep)
        y = G.mul_idx(G.mul_idx(int(g_idx), x), gi)
        vals.append(theta.value_at_idx(coordN(y)))
    return Character(presN, vals, theta.irreducible)


def is_invariant(theta: Character, N: Subgroup, K: Subgroup | None = None) -> bool:
    """Invariance of theta in Irr(N) under K (default: the whole parent)."""
    G = N.parent
    actors = K.igs_idxs() if K is not None else [G.generator(i).idx for i in range(G.n)]
    return all(
        conjugate_character(theta, N, g).values == theta.values for g in actors
    )


def extension_set(theta: Character, K: PcPresentation, N: Subgroup) -> list[Character]:
    """All irreducible characters of K restricting exactly to theta on N <| K.

    Full restriction scan of Irr(K); no cohomological shortcut.
    """
    assert N.parent is K and N.is_normal_in()
    if not is_invariant(theta, N):
        raise ValueError("character is not invariant: no extensions exist")
    out = []
    for chi in character_table(K).irreducibles:
        if chi.values[0] != theta.values[0]:
            continue
        if restrict(chi, N).values == theta.values:
            out.append(chi)
    return out


def canonical_extension(theta: Character, K: PcPresentation, N: Subgroup) -> Character:
    """The unique extension with determinantal order coprime to |K/N|."""
    index = K.order // N.order
    if gcd(index, N.order) != 1:
        raise ValueError("canonical extension requires coprime index")
    o_theta = determinantal_order(theta)
    exts = extension_set(theta, K, N)
    assert exts, "coprime invariant characters always extend"
    picked = [chi for chi in exts if gcd(determinantal_order(chi), index) == 1]
    assert len(picked) == 1, "canonical extension must be unique"
    chosen = picked[0]
    assert determinantal_order(chosen) == o_theta, "canonical extension preserves determinantal order"
    return chosen


# -- semidirect characters ---------------------------------------------------------


def semidirect_character(
    M: PcPresentation, A: Subgroup, B: Subgroup, alpha: Character, beta: Character
) -> Character:
    """alpha (on A) joined with an M-invariant beta (on B), M = A x| B coprime.

    The value at m = x y (x in A, y in B) is alpha(x) * beta_ext(m) where
    beta_ext is the canonical extension of beta to M.
    """
    assert A.parent is M and B.parent is M
    assert B.is_normal_in()
    assert gcd(A.order, B.order) == 1 and A.order * B.order == M.order
    assert len(A.elems & B.elems) == 1
    presA, embedA, coordA = A.as_group()
    assert alpha.group is presA and beta.group is B.as_group()[0]
    if not is_invariant(beta, B):
        raise ValueError("beta must be M-invariant")
    beta_ext = canonical_extension(beta, M, B)
    a_part = _a_component_map(M, A, B)
    vals = []
    for k, rep in enumerate(M.class_reps()):
        x = a_part[rep]
        vals.append(alpha.value_at_idx(coordA(x)) * beta_ext.values[k])
    return Character(M, vals)


def _a_component_map(M: PcPresentation, A: Subgroup, B: Subgroup) -> dict[int, int]:
    got = M._cache.get(("a_part", A.igs, B.igs))
    if got is None:
        got = {}
        for rep in M.class_reps():
            for a in A.elems:
                if M.mul_idx(M.inv_idx(a), rep) in B.elems:
                    got[rep] = a
                    break
            else:
                raise AssertionError("element not in A*B")
        M._cache[("a_part", A.igs, B.igs)] = got
    return got


def gallagher_factor(
    chi: Character, M: PcPresentation, A: Subgroup, B: Subgroup, beta: Character
) -> Character:
    """The unique alpha on A with chi = alpha x| beta, by scanning Irr(A)."""
    presA, _, _ = A.as_group()
    for alpha in character_table(presA).irreducibles:
        if semidirect_character(M, A, B, alpha, beta).values == chi.values:
            return alpha
    raise ValueError("character does not factor over the given beta")


# -- table dump -------------------------------------------------------------------


def table_to_dict(table: CharacterTable) -> dict:
    G = table.group
    _, classes = G.conjugacy_class_data()
    return {
        "group": G.name,
        "order": G.order,
        "class_representatives": [list(G.unrank(rep)) for rep, _ in classes],
        "class_sizes": [len(m) for _, m in classes],
        "characters": [
            [v.serialize() for v in chi.values] for chi in table.irreducibles
        ],
    }
