"""Finite solvable groups via polycyclic presentations with prime relative orders.

A presentation on generators g_1 > ... > g_n (1-based in files, 0-based here)
consists of relative orders p_i (primes), power relations g_i^{p_i} = word
over g_{i+1}..g_n, and conjugation relations g_j^{g_i} = word over
g_{i+1}..g_n for i < j.  Elements are normal words g_1^{e_1}...g_n^{e_n}
with 0 <= e_i < p_i, stored as exponent tuples or mixed-radix ranks.

Multiplication is collection from the left.  Presentations are checked for
consistency with the standard overlap tests at construction; inconsistent
input is rejected, never repaired.

Everything here assumes desk scale: the default bounds cap group order at
3125 and subgroup-index searches at 125; exceeding a bound raises
BoundExceeded rather than returning partial data.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm, prod

import numpy as np

ORDER_BOUND = 3125
INDEX_BOUND = 125


class BoundExceeded(Exception):
    """A computation exceeded its configured size bound."""


class InconsistentPresentation(ValueError):
    """The overlap checks failed: the relations do not define a group of the
    declared order."""


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class PcPresentation:
    """A consistent polycyclic presentation and its cached structure data."""

    def __init__(self, orders, powers, conjugates, name: str = "", check: bool = True):
        self.orders = tuple(int(p) for p in orders)
        self.n = len(self.orders)
        self.name = name or f"pc{prod(self.orders)}"
        for p in self.orders:
            if not _is_prime(p):
                raise ValueError(f"relative order {p} is not prime")
        self.powers = tuple(tuple(int(e) for e in w) for w in powers)
        if len(self.powers) != self.n:
            raise ValueError("need one power relation per generator")
        conj = {}
        for (i, j), w in conjugates.items():
            if not (0 <= i < j < self.n):
                raise ValueError(f"conjugation relation indices out of order: {(i, j)}")
            conj[(i, j)] = tuple(int(e) for e in w)
        self.conjugates = conj
        for i, w in enumerate(self.powers):
            if len(w) != self.n or any(w[t] for t in range(i + 1)):
                raise ValueError(f"power word of generator {i + 1} must lie below it")
            if any(not (0 <= w[t] < self.orders[t]) for t in range(self.n)):
                raise ValueError(f"power word of generator {i + 1} not a normal word")
        for (i, j), w in conj.items():
            if len(w) != self.n or any(w[t] for t in range(i + 1)):
                raise ValueError(f"conjugate word for ({i + 1},{j + 1}) must lie below g_{i + 1}")
        self.order = prod(self.orders)
        if self.order > ORDER_BOUND:
            raise BoundExceeded(f"group order {self.order} exceeds bound {ORDER_BOUND}")
        # mixed-radix weights, most significant first (rank order = lex order)
        self._weights = [0] * self.n
        w = 1
        for i in range(self.n - 1, -1, -1):
            self._weights[i] = w
            w *= self.orders[i]
        self._power_letters = [
            tuple((t, e) for t, e in enumerate(word) if e) for word in self.powers
        ]
        self._conj_letters = {
            ij: tuple((t, e) for t, e in enumerate(word) if e)
            for ij, word in self.conjugates.items()
        }
        self._cache: dict = {}
        if check:
            self._check_consistency()

    # -- words and collection ------------------------------------------

    def _conj_word(self, i: int, j: int):
        """Letters of g_j^{g_i} for i < j (trivial when no relation given)."""
        return self._conj_letters.get((i, j), ((j, 1),))

    def collect(self, letters) -> tuple:
        """Collect a positive word (list of (gen, exp) pairs) to normal form."""
        word = [(i, e) for i, e in letters if e]
        orders = self.orders
        while True:
            merged = []
            for i, e in word:
                if merged and merged[-1][0] == i:
                    merged[-1][1] += e
                else:
                    merged.append([i, e])
            word = [(i, e) for i, e in merged if e]
            pos = -1
            kind = ""
            for t, (i, e) in enumerate(word):
                if e >= orders[i]:
                    pos, kind = t, "pow"
                    break
                if t + 1 < len(word) and word[t + 1][0] < i:
                    pos, kind = t, "swap"
                    break
            if pos < 0:
                break
            if kind == "pow":
                i, e = word[pos]
                q, r = divmod(e, orders[i])
                repl = ([(i, r)] if r else []) + list(self._power_letters[i]) * q
                word[pos : pos + 1] = repl
            else:
                i, a = word[pos]
                j, b = word[pos + 1]
                # g_i^a g_j spends one g_j: g_i^a g_j = g_j (g_i^{g_j})^a
                w = list(self._conj_word(j, i))
                repl = [(j, 1)] + w * a + ([(j, b - 1)] if b > 1 else [])
                word[pos : pos + 2] = repl
        exps = [0] * self.n
        for i, e in word:
            exps[i] = e
        return tuple(exps)

    def _check_consistency(self):
        """Standard overlap/confluence tests; raises on failure.

        Normal words ascend in generator index, so the products that exercise
        collection put the higher-indexed generator on the left.
        """

        def word_of(tup):
            return [(i, e) for i, e in enumerate(tup) if e]

        def eval_seq(*parts):
            letters = []
            for part in parts:
                letters.extend(part)
            return self.collect(letters)

        n = self.n
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    # g_k (g_j g_i) == (g_k g_j) g_i
                    a = eval_seq([(k, 1)], word_of(self.collect([(j, 1), (i, 1)])))
                    b = eval_seq(word_of(self.collect([(k, 1), (j, 1)])), [(i, 1)])
                    if a != b:
                        raise InconsistentPresentation(
                            f"overlap g{k + 1}(g{j + 1}g{i + 1}) != (g{k + 1}g{j + 1})g{i + 1}"
                        )
        for i in range(n):
            for j in range(i + 1, n):
                pj = self.orders[j]
                # g_j^{p_j} g_i == g_j^{p_j - 1} (g_j g_i)
                a = eval_seq(self._power_letters[j], [(i, 1)])
                b = eval_seq([(j, pj - 1)], word_of(self.collect([(j, 1), (i, 1)])))
                if a != b:
                    raise InconsistentPresentation(f"power overlap at (g{j + 1}^p, g{i + 1})")
                pi = self.orders[i]
                # g_j (g_i^{p_i}) == (g_j g_i) g_i^{p_i - 1}
                a = eval_seq([(j, 1)], self._power_letters[i])
                b = eval_seq(word_of(self.collect([(j, 1), (i, 1)])), [(i, pi - 1)])
                if a != b:
                    raise InconsistentPresentation(f"power overlap at (g{j + 1}, g{i + 1}^p)")
        for i in range(n):
            # g_i (g_i^{p_i}) == (g_i^{p_i}) g_i
            a = eval_seq([(i, 1)], self._power_letters[i])
            b = eval_seq(self._power_letters[i], [(i, 1)])
            if a != b:
                raise InconsistentPresentation(f"power overlap at g{i + 1} with itself")

    # -- element indexing -----------------------------------------------

    def rank(self, exps) -> int:
        return sum(e * w for e, w in zip(exps, self._weights))

    def unrank(self, idx: int) -> tuple:
        exps = [0] * self.n
        for i in range(self.n):
            exps[i], idx = divmod(idx, self._weights[i])
        return tuple(exps)

    @property
    def identity(self) -> "Element":
        return Element(self, 0)

    def generator(self, i: int) -> "Element":
        exps = [0] * self.n
        exps[i] = 1
        return Element(self, self.rank(exps))

    def generators(self) -> list["Element"]:
        return [self.generator(i) for i in range(self.n)]

    def element(self, exps) -> "Element":
        exps = tuple(int(e) % p for e, p in zip(exps, self.orders))
        return Element(self, self.rank(exps))

    def elements(self):
        return (Element(self, i) for i in range(self.order))

    # -- multiplication tables --------------------------------------------

    def _letters_of(self, idx: int):
        tab = self._cache.get("letters")
        if tab is None:
            tab = [None] * self.order
            self._cache["letters"] = tab
        w = tab[idx]
        if w is None:
            exps = self.unrank(idx)
            w = tuple((i, e) for i, e in enumerate(exps) if e)
            tab[idx] = w
        return w

    @property
    def _rmul(self) -> list[np.ndarray]:
        tabs = self._cache.get("rmul")
        if tabs is None:
            tabs = []
            for i in range(self.n):
                arr = np.empty(self.order, dtype=np.int32)
                for x in range(self.order):
                    arr[x] = self.rank(self.collect(list(self._letters_of(x)) + [(i, 1)]))
                assert len(np.unique(arr)) == self.order, "collection broke cancellativity"
                tabs.append(arr)
            self._cache["rmul"] = tabs
        return tabs

    def mul_idx(self, a: int, b: int) -> int:
        rmul = self._rmul
        for i, e in self._letters_of(b):
            t = rmul[i]
            for _ in range(e):
                a = int(t[a])
        return a

    @property
    def _inv(self) -> np.ndarray:
        arr = self._cache.get("inv")
        if arr is None:
            rmul = self._rmul
            arr = np.empty(self.order, dtype=np.int32)
            for x in range(self.order):
                v, acc = x, 0
                for i in range(self.n):
                    e = self.unrank(v)[i]
                    if e:
                        t = (self.orders[i] - e) % self.orders[i]
                        ti = rmul[i]
                        for _ in range(t):
                            v = int(ti[v])
                            acc = int(ti[acc])
                assert v == 0, "inverse peel failed"
                arr[x] = acc
            self._cache["inv"] = arr
        return arr

    def inv_idx(self, a: int) -> int:
        return int(self._inv[a])

    def conj_idx(self, x: int, g: int) -> int:
        """g^{-1} x g."""
        return self.mul_idx(self.mul_idx(self.inv_idx(g), x), g)

    def comm_idx(self, x: int, y: int) -> int:
        """[x, y] = x^{-1} y^{-1} x y."""
        return self.mul_idx(
            self.mul_idx(self.mul_idx(self.inv_idx(x), self.inv_idx(y)), x), y
        )

    def pow_idx(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv_idx(a), -e
        out = 0
        for _ in range(e):
            out = self.mul_idx(out, a)
        return out

    @property
    def _conj_tables(self) -> list[np.ndarray]:
        tabs = self._cache.get("conj_tables")
        if tabs is None:
            rmul = self._rmul
            tabs = []
            idx_all = np.arange(self.order)
            for i in range(self.n):
                gi = self.rank(tuple(1 if t == i else 0 for t in range(self.n)))
                giv = self.inv_idx(gi)
                left = np.empty(self.order, dtype=np.int32)
                for x in range(self.order):
                    left[x] = self.mul_idx(giv, x)
                tabs.append(rmul[i][left])
            self._cache["conj_tables"] = tabs
        return tabs

    def element_order(self, x) -> int:
        idx = x.idx if isinstance(x, Element) else int(x)
        o, y = 1, idx
        while y != 0:
            y = self.mul_idx(y, idx)
            o += 1
        return o

    def exponent(self) -> int:
        return lcm(*(self.element_order(r) for r, _ in self.conjugacy_class_data()[1]))

    # -- conjugacy classes ---------------------------------------------------

    def conjugacy_class_data(self):
        """(class_of array, [(rep_idx, members array)] ordered by rep index)."""
        data = self._cache.get("classes")
        if data is None:
            tabs = self._conj_tables
            class_of = np.full(self.order, -1, dtype=np.int32)
            classes = []
            for idx in range(self.order):
                if class_of[idx] >= 0:
                    continue
                cid = len(classes)
                orbit = [idx]
                class_of[idx] = cid
                head = 0
                while head < len(orbit):
                    x = orbit[head]
                    head += 1
                    for t in tabs:
                        y = int(t[x])
                        if class_of[y] < 0:
                            class_of[y] = cid
                            orbit.append(y)
                classes.append((idx, np.array(sorted(orbit), dtype=np.int32)))
            data = (class_of, classes)
            self._cache["classes"] = data
        return data

    @property
    def class_count(self) -> int:
        return len(self.conjugacy_class_data()[1])

    def class_of_idx(self, idx: int) -> int:
        return int(self.conjugacy_class_data()[0][idx])

    def class_reps(self) -> list[int]:
        return [rep for rep, _ in self.conjugacy_class_data()[1]]

    def class_sizes(self) -> list[int]:
        return [len(m) for _, m in self.conjugacy_class_data()[1]]

    def is_abelian(self) -> bool:
        return all(
            self._conj_word(i, j) == ((j, 1),)
            for j in range(self.n)
            for i in range(j)
        )

    # -- misc -----------------------------------------------------------------

    def __repr__(self):
        return f"<PcPresentation {self.name} order {self.order}>"

    def __len__(self):
        return self.order


class Element:
    """A group element: a presentation together with a normal-form rank."""

    __slots__ = ("group", "idx")

    def __init__(self, group: PcPresentation, idx: int):
        self.group = group
        self.idx = int(idx)

    @property
    def exps(self) -> tuple:
        return self.group.unrank(self.idx)

    def __mul__(self, other: "Element") -> "Element":
        assert self.group is other.group
        return Element(self.group, self.group.mul_idx(self.idx, other.idx))

    def inverse(self) -> "Element":
        return Element(self.group, self.group.inv_idx(self.idx))

    def __pow__(self, e: int) -> "Element":
        return Element(self.group, self.group.pow_idx(self.idx, e))

    def conjugate_by(self, g: "Element") -> "Element":
        return Element(self.group, self.group.conj_idx(self.idx, g.idx))

    def commutator(self, other: "Element") -> "Element":
        return Element(self.group, self.group.comm_idx(self.idx, other.idx))

    def order(self) -> int:
        return self.group.element_order(self.idx)

    def is_identity(self) -> bool:
        return self.idx == 0

    def __eq__(self, other):
        return (
            isinstance(other, Element)
            and self.group is other.group
            and self.idx == other.idx
        )

    def __hash__(self):
        return hash((id(self.group), self.idx))

    def __repr__(self):
        return f"Element{self.exps}"


# -- subgroups -----------------------------------------------------------------


class Subgroup:
    """A subgroup of a PcPresentation, canonically represented.

    The canonical induced generating sequence (igs) is computed greedily from
    the full element set: at each echelon depth take the lexicographically
    smallest element with leading exponent normalized to 1.  Two subgroups are
    equal iff their igs tuples are equal.
    """

    __slots__ = ("parent", "elems", "igs", "order", "_cache")

    def __init__(self, parent: PcPresentation, elems: frozenset):
        self.parent = parent
        self.elems = frozenset(int(e) for e in elems)
        assert 0 in self.elems
        self.igs = self._canonical_igs()
        self.order = len(self.elems)
        self._cache = {}

    @staticmethod
    def from_generator_idxs(parent: PcPresentation, gen_idxs) -> "Subgroup":
        gen_idxs = [int(g) for g in gen_idxs]
        seen = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gen_idxs:
                    y = parent.mul_idx(x, g)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return Subgroup(parent, frozenset(seen))

    @staticmethod
    def from_generators(parent: PcPresentation, gens) -> "Subgroup":
        return Subgroup.from_generator_idxs(
            parent, [g.idx if isinstance(g, Element) else int(g) for g in gens]
        )

    @staticmethod
    def trivial(parent: PcPresentation) -> "Subgroup":
        return Subgroup(parent, frozenset([0]))

    @staticmethod
    def whole(parent: PcPresentation) -> "Subgroup":
        return Subgroup(parent, frozenset(range(parent.order)))

    def _canonical_igs(self) -> tuple:
        G = self.parent
        cur = [G.unrank(e) for e in self.elems if e]
        igs = []
        while cur:
            d = min(next(t for t, e in enumerate(tup) if e) for tup in cur)
            p = G.orders[d]
            cands = []
            for tup in cur:
                lead = next(t for t, e in enumerate(tup) if e)
                if lead == d:
                    a = tup[d]
                    s = G.unrank(G.pow_idx(G.rank(tup), pow(a, -1, p)))
                    assert s[d] == 1
                    cands.append(s)
            igs.append(min(cands))
            cur = [tup for tup in cur if next(t for t, e in enumerate(tup) if e) > d]
        return tuple(igs)

    @property
    def pivots(self) -> tuple:
        return tuple(next(t for t, e in enumerate(s) if e) for s in self.igs)

    def igs_idxs(self) -> list[int]:
        return [self.parent.rank(s) for s in self.igs]

    def contains_idx(self, idx: int) -> bool:
        return int(idx) in self.elems

    def __contains__(self, x) -> bool:
        if isinstance(x, Element):
            return x.group is self.parent and x.idx in self.elems
        return int(x) in self.elems

    def __le__(self, other: "Subgroup") -> bool:
        return self.elems <= other.elems

    def __lt__(self, other: "Subgroup") -> bool:
        return self.elems < other.elems

    def __eq__(self, other):
        return (
            isinstance(other, Subgroup)
            and self.parent is other.parent
            and self.igs == other.igs
        )

    def __hash__(self):
        return hash((id(self.parent), self.igs))

    def __repr__(self):
        return f"<Subgroup order {self.order} of {self.parent.name} igs {self.igs}>"

    def key(self):
        return (self.order, self.igs)

    def conjugate_by_idx(self, g: int) -> "Subgroup":
        G = self.parent
        gi = G.inv_idx(g)
        return Subgroup(
            G, frozenset(G.mul_idx(G.mul_idx(gi, x), g) for x in self.elems)
        )

    def is_normal_in(self, other: "Subgroup | None" = None) -> bool:
        G = self.parent
        if other is None:
            tabs = G._conj_tables
            return all(int(t[s]) in self.elems for t in tabs for s in self.igs_idxs())
        return all(
            G.conj_idx(s, g) in self.elems
            for g in other.igs_idxs()
            for s in self.igs_idxs()
        )

    def elements(self):
        return (Element(self.parent, i) for i in sorted(self.elems))

    # -- standalone presentation ------------------------------------------

    def as_group(self):
        """(presentation, embed, coordinatize) for this subgroup.

        embed(sub_idx) -> parent idx; coordinatize(parent idx) -> sub idx.
        """
        got = self._cache.get("as_group")
        if got is not None:
            return got
        G = self.parent
        igs_idx = self.igs_idxs()
        k = len(igs_idx)
        piv = self.pivots
        orders = [G.orders[d] for d in piv]
        # tail subgroups T_t = <s_t, ..., s_k>, built upward as coset unions
        tails = [frozenset([0])]
        for t in range(k - 1, -1, -1):
            prev = tails[0]
            s = igs_idx[t]
            cur = set()
            acc = 0
            for _ in range(orders[t]):
                cur.update(G.mul_idx(acc, x) for x in prev)
                acc = G.mul_idx(acc, s)
            assert len(cur) == orders[t] * len(prev), "igs tail is not a subgroup"
            tails.insert(0, frozenset(cur))
        assert tails[0] == self.elems

        inv_pows = [
            [G.pow_idx(s, -a) for a in range(orders[t])]
            for t, s in enumerate(igs_idx)
        ]

        def coordinatize_idx(x: int) -> tuple:
            out = []
            for t in range(k):
                for a in range(orders[t]):
                    y = G.mul_idx(inv_pows[t][a], x)
                    if y in tails[t + 1]:
                        out.append(a)
                        x = y
                        break
                else:
                    raise ValueError("element not in subgroup")
            assert x == 0
            return tuple(out)

        powers = []
        for t in range(k):
            powers.append(coordinatize_idx(G.pow_idx(igs_idx[t], orders[t])))
        conj = {}
        for t in range(k):
            for u in range(t + 1, k):
                w = coordinatize_idx(G.conj_idx(igs_idx[u], igs_idx[t]))
                conj[(t, u)] = w
        pres = PcPresentation(
            orders, powers, conj, name=f"{G.name}|sub{self.order}", check=True
        )

        embed_arr = np.empty(self.order, dtype=np.int32)
        for si in range(self.order):
            exps = pres.unrank(si)
            acc = 0
            for t, a in enumerate(exps):
                acc = G.mul_idx(acc, G.pow_idx(igs_idx[t], a))
            embed_arr[si] = acc
        coord_map = {int(p): s for s, p in enumerate(embed_arr)}
        assert len(coord_map) == self.order

        def embed(sub_idx: int) -> int:
            return int(embed_arr[sub_idx])

        def coordinatize(parent_idx: int) -> int:
            got = coord_map.get(int(parent_idx))
            if got is None:
                raise ValueError("element not in subgroup")
            return got

        got = (pres, embed, coordinatize)
        self._cache["as_group"] = got
        return got


# -- homomorphisms ----------------------------------------------------------


class GroupMap:
    """A homomorphism between presentations, given by generator images."""

    __slots__ = ("source", "target", "images")

    def __init__(self, source: PcPresentation, target: PcPresentation, images, check: bool = True):
        self.source = source
        self.target = target
        self.images = tuple(
            im.idx if isinstance(im, Element) else int(im) for im in images
        )
        if len(self.images) != source.n:
            raise ValueError("need one image per generator")
        if check and not self.is_homomorphism():
            raise ValueError("generator images do not satisfy the relations")

    def apply_idx(self, x: int) -> int:
        t = self.target
        out = 0
        for i, e in self.source._letters_of(int(x)):
            out = t.mul_idx(out, t.pow_idx(self.images[i], e))
        return out

    def apply(self, x: Element) -> Element:
        assert x.group is self.source
        return Element(self.target, self.apply_idx(x.idx))

    def is_homomorphism(self) -> bool:
        s, t = self.source, self.target
        for i in range(s.n):
            lhs = t.pow_idx(self.images[i], s.orders[i])
            rhs = 0
            for j, e in enumerate(s.powers[i]):
                rhs = t.mul_idx(rhs, t.pow_idx(self.images[j], e))
            if lhs != rhs:
                return False
        for j in range(s.n):
            for i in range(j):
                lhs = t.conj_idx(self.images[j], self.images[i])
                word = s.conjugates.get((i, j))
                if word is None:
                    rhs = self.images[j]
                else:
                    rhs = 0
                    for m, e in enumerate(word):
                        rhs = t.mul_idx(rhs, t.pow_idx(self.images[m], e))
                if lhs != rhs:
                    return False
        return True

    def kernel(self) -> Subgroup:
        ker = frozenset(
            x for x in range(self.source.order) if self.apply_idx(x) == 0
        )
        return Subgroup(self.source, ker)

    def image_subgroup(self) -> Subgroup:
        return Subgroup.from_generator_idxs(self.target, self.images)

    def is_bijective(self) -> bool:
        if self.source.order != self.target.order:
            return False
        return len({self.apply_idx(x) for x in range(self.source.order)}) == self.source.order

    def is_automorphism(self) -> bool:
        return self.source is self.target and self.is_bijective()

    def compose(self, inner: "GroupMap") -> "GroupMap":
        """self o inner (apply inner first)."""
        assert inner.target is self.source
        return GroupMap(
            inner.source,
            self.target,
            [self.apply_idx(im) for im in inner.images],
            check=False,
        )

    def inverse_map(self) -> "GroupMap":
        assert self.is_bijective()
        lut = {self.apply_idx(x): x for x in range(self.source.order)}
        return GroupMap(
            self.target,
            self.source,
            [lut[self.target.rank(tuple(1 if t == i else 0 for t in range(self.target.n)))]
             for i in range(self.target.n)],
            check=False,
        )

    def __eq__(self, other):
        return (
            isinstance(other, GroupMap)
            and self.source is other.source
            and self.target is other.target
            and self.images == other.images
        )

    def __hash__(self):
        return hash((id(self.source), id(self.target), self.images))

    @staticmethod
    def identity(G: PcPresentation) -> "GroupMap":
        return GroupMap(G, G, [G.generator(i).idx for i in range(G.n)], check=False)


# -- constructors ------------------------------------------------------------


def cyclic(n: int) -> PcPresentation:
    """Cyclic group of order n along its prime chain."""
    ps = []
    m = n
    d = 2
    while d * d <= m:
        while m % d == 0:
            ps.append(d)
            m //= d
        d += 1
    if m > 1:
        ps.append(m)
    ps.sort()
    k = len(ps)
    powers = []
    for t in range(k):
        w = [0] * k
        if t + 1 < k:
            w[t + 1] = 1
        powers.append(tuple(w))
    return PcPresentation(ps, powers, {}, name=f"C{n}")


def elementary_abelian(p: int, k: int) -> PcPresentation:
    zero = tuple([0] * k)
    return PcPresentation([p] * k, [zero] * k, {}, name=f"E{p}^{k}")


def extraspecial(p: int, w: int) -> PcPresentation:
    """Extraspecial group of order p^(1+2w) and exponent p (p odd)."""
    assert p % 2 == 1 and w >= 1
    n = 2 * w + 1
    zero = tuple([0] * n)
    conj = {}
    zi = n - 1
    for t in range(w):
        a, b = 2 * t, 2 * t + 1
        word = [0] * n
        word[b] = 1
        word[zi] = 1
        conj[(a, b)] = tuple(word)
    return PcPresentation([p] * n, [zero] * n, conj, name=f"ES{p}^{1 + 2 * w}")


def direct_product(A: PcPresentation, B: PcPresentation):
    return semidirect(A, B, [GroupMap.identity(B)] * A.n)


def semidirect(A: PcPresentation, B: PcPresentation, action) -> PcPresentation:
    """A acting on B: action is one automorphism of B per generator of A.

    Generators of the result: A's first, then B's.  The overlap checks verify
    that the action really is compatible with A's relations (an invalid
    action is rejected there).
    """
    if len(action) != A.n:
        raise ValueError("need one automorphism of B per generator of A")
    for am in action:
        if not (am.source is B and am.target is B and am.is_automorphism()):
            raise ValueError("action entries must be automorphisms of B")
    nA, nB = A.n, B.n
    n = nA + nB
    orders = A.orders + B.orders

    def pad_a(word):
        return tuple(word) + tuple([0] * nB)

    def pad_b(word):
        return tuple([0] * nA) + tuple(word)

    powers = [pad_a(A.powers[i]) for i in range(nA)]
    powers += [pad_b(B.powers[j]) for j in range(nB)]
    conj = {}
    for (i, j), wrd in A.conjugates.items():
        conj[(i, j)] = pad_a(wrd)
    for (i, j), wrd in B.conjugates.items():
        conj[(nA + i, nA + j)] = pad_b(wrd)
    for i in range(nA):
        for j in range(nB):
            img = action[i].apply_idx(B.rank(tuple(1 if t == j else 0 for t in range(nB))))
            word = B.unrank(img)
            if word != tuple(1 if t == j else 0 for t in range(nB)):
                conj[(i, nA + j)] = pad_b(word)
    name = f"{A.name}|x{B.name}"
    try:
        return PcPresentation(orders, powers, conj, name=name, check=True)
    except InconsistentPresentation as exc:
        raise ValueError(f"invalid semidirect action: {exc}") from exc


def embed_left(G: PcPresentation, A: PcPresentation) -> GroupMap:
    """Embedding of the acting factor into semidirect(A, B, ...)."""
    return GroupMap(A, G, [G.generator(i).idx for i in range(A.n)], check=True)


def embed_right(G: PcPresentation, B: PcPresentation) -> GroupMap:
    """Embedding of the normal factor into semidirect(A, B, ...)."""
    off = G.n - B.n
    return GroupMap(B, G, [G.generator(off + j).idx for j in range(B.n)], check=True)


@dataclass
class QuotientResult:
    group: PcPresentation
    projection: GroupMap
    proj_array: np.ndarray  # parent idx -> quotient idx
    section: np.ndarray  # quotient idx -> parent coset representative


def quotient(G: PcPresentation, N: Subgroup) -> QuotientResult:
    """Quotient presentation on the images of the non-pivot generators."""
    assert N.parent is G and N.is_normal_in()
    piv = set(N.pivots)
    nonpiv = [i for i in range(G.n) if i not in piv]
    k = len(nonpiv)
    # U_t = <N, g_i : i in nonpiv[t:]>
    Us = [N.elems]
    for t in range(k - 1, -1, -1):
        gens = list(N.igs_idxs()) + [
            G.rank(tuple(1 if m == i else 0 for m in range(G.n))) for i in nonpiv[t:]
        ]
        Us.insert(0, Subgroup.from_generator_idxs(G, gens).elems)
    assert len(Us[0]) == G.order

    gen_idx = [G.rank(tuple(1 if m == i else 0 for m in range(G.n))) for i in nonpiv]
    inv_pows = [
        [G.pow_idx(g, -a) for a in range(G.orders[nonpiv[t]])]
        for t, g in enumerate(gen_idx)
    ]

    def extract(x: int) -> tuple:
        out = []
        for t in range(k):
            p = G.orders[nonpiv[t]]
            for a in range(p):
                y = G.mul_idx(inv_pows[t][a], x)
                if y in Us[t + 1]:
                    out.append(a)
                    x = y
                    break
            else:
                raise AssertionError("coset extraction failed")
        return tuple(out)

    orders = [G.orders[i] for i in nonpiv]
    powers = [extract(G.pow_idx(g, orders[t])) for t, g in enumerate(gen_idx)]
    conj = {}
    for t in range(k):
        for u in range(t + 1, k):
            conj[(t, u)] = extract(G.conj_idx(gen_idx[u], gen_idx[t]))
    Q = PcPresentation(orders, powers, conj, name=f"{G.name}/{N.order}", check=True)
    assert Q.order * N.order == G.order

    proj_arr = np.empty(G.order, dtype=np.int32)
    for x in range(G.order):
        proj_arr[x] = Q.rank(extract(x))
    # fibers must be exactly the N-cosets; the identity fiber is N itself
    fiber0 = frozenset(int(x) for x in np.nonzero(proj_arr == 0)[0])
    assert fiber0 == N.elems, "projection kernel mismatch"

    section = np.empty(Q.order, dtype=np.int32)
    for q in range(Q.order):
        exps = Q.unrank(q)
        acc = 0
        for t, a in enumerate(exps):
            acc = G.mul_idx(acc, G.pow_idx(gen_idx[t], a))
        section[q] = acc
        assert int(proj_arr[acc]) == q
    proj = GroupMap(G, Q, [int(proj_arr[G.rank(tuple(1 if m == i else 0 for m in range(G.n)))]) for i in range(G.n)], check=True)
    return QuotientResult(Q, proj, proj_arr, section)


def central_product(A: PcPresentation, B: PcPresentation, pairs):
    """Central product identifying central subgroups via the given pairs.

    pairs: list of (a, b) Elements whose graph generates the identified
    central subgroup {(z, phi(z)^{-1})}.  Returns (group, embed_A, embed_B).
    """
    D = direct_product(A, B)
    eA = embed_left(D, A)
    eB = embed_right(D, B)
    gens = []
    for a, b in pairs:
        ga = eA.apply_idx(a.idx if isinstance(a, Element) else A.rank(a))
        gb = eB.apply_idx(b.idx if isinstance(b, Element) else B.rank(b))
        gens.append(D.mul_idx(ga, D.inv_idx(gb)))
    Nsub = Subgroup.from_generator_idxs(D, gens)
    zc = center(D)
    assert Nsub.elems <= zc.elems, "identified subgroup must be central"
    q = quotient(D, Nsub)
    embA = GroupMap(A, q.group, [q.projection.apply_idx(eA.images[i]) for i in range(A.n)], check=True)
    embB = GroupMap(B, q.group, [q.projection.apply_idx(eB.images[j]) for j in range(B.n)], check=True)
    return q.group, embA, embB


# -- structure queries ---------------------------------------------------------


def center(G: PcPresentation) -> Subgroup:
    got = G._cache.get("center")
    if got is None:
        tabs = G._conj_tables
        idx = np.arange(G.order)
        mask = np.ones(G.order, dtype=bool)
        for t in tabs:
            mask &= t == idx
        got = Subgroup(G, frozenset(int(i) for i in np.nonzero(mask)[0]))
        G._cache["center"] = got
    return got


def centralizer(G: PcPresentation, X) -> Subgroup:
    """Centralizer of an element, element index, or subgroup."""
    if isinstance(X, Subgroup):
        targets = X.igs_idxs()
    elif isinstance(X, Element):
        targets = [X.idx]
    else:
        targets = [int(X)]
    out = []
    for g in range(G.order):
        if all(G.mul_idx(g, s) == G.mul_idx(s, g) for s in targets):
            out.append(g)
    return Subgroup(G, frozenset(out))


def normalizer(G: PcPresentation, H: Subgroup) -> Subgroup:
    """Normalizer via orbit-stabilizer on the element set of H."""
    got = H._cache.get("normalizer")
    if got is not None:
        return got
    tabs = G._conj_tables
    gens = [G.rank(tuple(1 if m == i else 0 for m in range(G.n))) for i in range(G.n)]
    start = np.array(sorted(H.elems), dtype=np.int32)
    key0 = start.tobytes()
    transversal = {key0: 0}
    points = {key0: start}
    queue = [key0]
    schreier = set(H.igs_idxs())
    while queue:
        key = queue.pop()
        arr = points[key]
        t_u = transversal[key]
        for i, tab in enumerate(tabs):
            img = np.sort(tab[arr])
            k2 = img.tobytes()
            if k2 not in transversal:
                transversal[k2] = G.mul_idx(t_u, gens[i])
                points[k2] = img
                queue.append(k2)
            else:
                # Schreier generator t_u g t_v^{-1}
                s = G.mul_idx(G.mul_idx(t_u, gens[i]), G.inv_idx(transversal[k2]))
                schreier.add(s)
    Nsub = Subgroup.from_generator_idxs(G, schreier)
    assert Nsub.order * len(transversal) == G.order
    H._cache["normalizer"] = Nsub
    return Nsub


def core(G: PcPresentation, H: Subgroup) -> Subgroup:
    """Largest normal subgroup of G inside H: the classes wholly inside H."""
    class_of, classes = G.conjugacy_class_data()
    keep = []
    for rep, members in classes:
        if all(int(m) in H.elems for m in members):
            keep.extend(int(m) for m in members)
    return Subgroup(G, frozenset(keep))


def commutator_subgroup(G: PcPresentation, A: Subgroup, B: Subgroup) -> Subgroup:
    """[A, B]: generated by element commutators, closed under conj by <A, B>."""
    gens = set()
    for a in A.igs_idxs():
        for b in B.igs_idxs():
            gens.add(G.comm_idx(a, b))
    conjers = A.igs_idxs() + B.igs_idxs()
    cur = Subgroup.from_generator_idxs(G, gens)
    while True:
        extra = set()
        for s in cur.igs_idxs():
            for g in conjers:
                c = G.conj_idx(s, g)
                if c not in cur.elems:
                    extra.add(c)
        if not extra:
            return cur
        cur = Subgroup.from_generator_idxs(G, set(cur.igs_idxs()) | extra)


def derived_subgroup(G: PcPresentation) -> Subgroup:
    got = G._cache.get("derived")
    if got is None:
        whole = Subgroup.whole(G)
        got = commutator_subgroup(G, whole, whole)
        G._cache["derived"] = got
    return got


def lower_central_series(G: PcPresentation) -> list[Subgroup]:
    whole = Subgroup.whole(G)
    series = [whole]
    while True:
        nxt = commutator_subgroup(G, series[-1], whole)
        if nxt == series[-1]:
            break
        series.append(nxt)
        if nxt.order == 1:
            break
    return series


def derived_series(G: PcPresentation) -> list[Subgroup]:
    series = [Subgroup.whole(G)]
    while series[-1].order > 1:
        nxt = commutator_subgroup(G, series[-1], series[-1])
        if nxt == series[-1]:
            break
        series.append(nxt)
    return series


def is_nilpotent_group(G: PcPresentation) -> bool:
    return lower_central_series(G)[-1].order == 1


def is_nilpotent_subgroup(H: Subgroup) -> bool:
    pres, _, _ = H.as_group()
    return is_nilpotent_group(pres)


def minimal_normal_subgroups(G: PcPresentation) -> list[Subgroup]:
    _, classes = G.conjugacy_class_data()
    cands: dict[tuple, Subgroup] = {}
    for rep, members in classes:
        if rep == 0:
            continue
        S = Subgroup.from_generator_idxs(G, [int(m) for m in members])
        cands[S.igs] = S
    minimal = []
    for S in sorted(cands.values(), key=lambda s: s.order):
        if not any(M.elems <= S.elems for M in minimal):
            minimal.append(S)
    return minimal


def normal_subgroups(G: PcPresentation, within: Subgroup | None = None,
                     above: Subgroup | None = None, limit: int = 20000) -> list[Subgroup]:
    """All normal subgroups of G with above <= N <= within, by class joins."""
    _, classes = G.conjugacy_class_data()
    top = within.elems if within is not None else frozenset(range(G.order))
    base = above if above is not None else Subgroup.trivial(G)
    assert base.elems <= top
    usable = [
        (rep, [int(m) for m in members])
        for rep, members in classes
        if rep != 0 and all(int(m) in top for m in members)
    ]
    found = {base.igs: base}
    queue = [base]
    while queue:
        N = queue.pop()
        for rep, members in usable:
            if rep in N.elems:
                continue
            N2 = Subgroup.from_generator_idxs(G, list(N.igs_idxs()) + members)
            if not (N2.elems <= top):
                continue
            if N2.igs not in found:
                if len(found) >= limit:
                    raise BoundExceeded("normal subgroup lattice too large")
                found[N2.igs] = N2
                queue.append(N2)
    return sorted(found.values(), key=lambda s: s.key())


def sylow(G: PcPresentation, p: int) -> Subgroup:
    return hall(G, frozenset([p]))


def hall(G: PcPresentation, primes) -> Subgroup:
    """A Hall subgroup for the given prime set (G is solvable, so it exists)."""
    primes = frozenset(primes)
    key = ("hall", primes)
    got = G._cache.get(key)
    if got is not None:
        return got
    rest = [p for p in set(G.orders) if p not in primes]
    if not rest:
        out = Subgroup.whole(G)
        G._cache[key] = out
        return out
    if all(p not in primes for p in set(G.orders)):
        out = Subgroup.trivial(G)
        G._cache[key] = out
        return out
    N = min(minimal_normal_subgroups(G), key=lambda s: s.key())
    p = G.orders[N.pivots[0]]
    pres_N, embed_N, _ = N.as_group()
    assert pres_N.is_abelian() and len(set(pres_N.orders)) == 1
    q = quotient(G, N)
    Hbar = hall(q.group, primes)
    pre = frozenset(
        int(x) for x in range(G.order) if int(q.proj_array[x]) in Hbar.elems
    )
    K = Subgroup(G, pre)
    if p in primes:
        G._cache[key] = K
        return K
    # complement N in K by cocycle averaging (Schur-Zassenhaus, N abelian)
    presK, embedK, coordK = K.as_group()
    N_in_K = Subgroup(presK, frozenset(coordK(x) for x in N.elems))
    qK = quotient(presK, N_in_K)
    Qbar = qK.group
    m = Qbar.order
    expN = p  # N is elementary abelian
    kinv = pow(m % expN, -1, expN)
    t = [int(qK.section[i]) for i in range(m)]
    comp = []
    for a in range(m):
        d = 0  # product of cocycle values, inside abelian N
        ta = t[a]
        for b in range(m):
            ab = int(qK.proj_array[presK.mul_idx(ta, t[b])])
            f = presK.mul_idx(presK.mul_idx(ta, t[b]), presK.inv_idx(t[ab]))
            d = presK.mul_idx(d, f)
        s = presK.mul_idx(presK.pow_idx(d, -kinv), ta)
        comp.append(s)
    # the averaged section must be a homomorphism
    lut = {int(qK.proj_array[s]): s for s in comp}
    assert len(lut) == m
    for a in range(m):
        for b in range(m):
            ab = int(qK.proj_array[presK.mul_idx(lut[a], lut[b])])
            assert presK.mul_idx(lut[a], lut[b]) == lut[ab], "averaged section not multiplicative"
    C = Subgroup(G, frozenset(embedK(s) for s in comp))
    G._cache[key] = C
    return C


def p_core(G: PcPresentation, p: int) -> Subgroup:
    return core(G, sylow(G, p))


def fitting_subgroup(G: PcPresentation) -> Subgroup:
    got = G._cache.get("fitting")
    if got is None:
        gens: set[int] = set()
        for p in sorted(set(G.orders)):
            gens.update(p_core(G, p).igs_idxs())
        got = Subgroup.from_generator_idxs(G, gens) if gens else Subgroup.trivial(G)
        G._cache["fitting"] = got
    return got


def nilpotent_length(G: PcPresentation) -> int:
    length = 0
    cur = G
    while cur.order > 1:
        F = fitting_subgroup(cur)
        assert F.order > 1, "solvable groups have nontrivial Fitting subgroup"
        cur = quotient(cur, F).group
        length += 1
    return length


def frattini_subgroup(G: PcPresentation) -> Subgroup:
    got = G._cache.get("frattini")
    if got is not None:
        return got
    if G.order == 1:
        out = Subgroup.trivial(G)
        G._cache["frattini"] = out
        return out
    primes = set(G.orders)
    if len(primes) == 1:
        # p-group: Phi(G) = G^p [G, G]
        p = next(iter(primes))
        gens = set(derived_subgroup(G).igs_idxs())
        for i in range(G.n):
            gens.add(G.pow_idx(G.generator(i).idx, p))
        out = Subgroup.from_generator_idxs(G, gens)
    elif is_nilpotent_group(G):
        gens = set()
        for p in sorted(primes):
            S = sylow(G, p)
            presS, embedS, _ = S.as_group()
            phi = frattini_subgroup(presS)
            gens.update(embedS(x) for x in phi.igs_idxs())
        out = Subgroup.from_generator_idxs(G, gens) if gens else Subgroup.trivial(G)
    else:
        N = min(minimal_normal_subgroups(G), key=lambda s: s.key())
        q = quotient(G, N)
        phi_bar = frattini_subgroup(q.group)
        part = frozenset(
            int(x) for x in range(G.order) if int(q.proj_array[x]) in phi_bar.elems
        )
        p = G.orders[N.pivots[0]]
        if q.group.order % p != 0:
            C = hall(G, frozenset(pp for pp in primes if pp != p))
            inter = part & core(G, C).elems
        else:
            comps = [
                H for H in subgroup_classes_of_order(G, q.group.order)
                if len(H.elems & N.elems) == 1
            ]
            inter = set(part)
            for H in comps:
                inter &= core(G, H).elems
            inter = frozenset(inter)
        out = Subgroup(G, _group_closure_check(G, inter))
    G._cache["frattini"] = out
    return out


def _group_closure_check(G: PcPresentation, elems: frozenset) -> frozenset:
    sub = Subgroup.from_generator_idxs(G, elems)
    assert sub.elems == frozenset(int(e) for e in elems), "intersection not a subgroup"
    return sub.elems


def intersect(A: Subgroup, B: Subgroup) -> Subgroup:
    assert A.parent is B.parent
    return Subgroup(A.parent, A.elems & B.elems)


def product_set(A: Subgroup, B: Subgroup) -> frozenset:
    G = A.parent
    return frozenset(G.mul_idx(a, b) for a in A.elems for b in B.elems)


def join(A: Subgroup, B: Subgroup) -> Subgroup:
    return Subgroup.from_generator_idxs(A.parent, list(A.igs_idxs()) + list(B.igs_idxs()))


# -- subgroup enumeration -------------------------------------------------------


def _conjugacy_canonical(G: PcPresentation, H: Subgroup) -> tuple[Subgroup, list[Subgroup]]:
    """(canonical class representative, full orbit) for subgroup conjugacy."""
    tabs = G._conj_tables
    start = np.array(sorted(H.elems), dtype=np.int32)
    seen = {start.tobytes(): start}
    queue = [start]
    while queue:
        arr = queue.pop()
        for t in tabs:
            img = np.sort(t[arr])
            k = img.tobytes()
            if k not in seen:
                seen[k] = img
                queue.append(img)
    orbit_sets = [frozenset(int(x) for x in arr) for arr in seen.values()]
    subs = [Subgroup(G, s) for s in orbit_sets]
    rep = min(subs, key=lambda s: s.igs)
    return rep, subs


def subgroup_classes_up_to_order(G: PcPresentation, max_order: int) -> dict[int, list[Subgroup]]:
    """Conjugacy class representatives of subgroups of each order <= max_order.

    Cyclic extension method: every subgroup arises from a normal subgroup of
    prime index inside it, so extending class representatives H by elements
    x of N_G(H) with x^p in H finds every class.  Only orders dividing
    max_order are visited.
    """
    if G.order > ORDER_BOUND:
        raise BoundExceeded(f"group order {G.order} exceeds bound {ORDER_BOUND}")
    cached = G._cache.get(("sub_classes", max_order))
    if cached is not None:
        return cached
    triv = Subgroup.trivial(G)
    layers: dict[int, dict[tuple, Subgroup]] = {1: {triv.igs: triv}}
    todo = [triv]
    while todo:
        H = todo.pop()
        o = H.order
        Nh = normalizer(G, H)
        # coset representatives of H in its normalizer
        seen_cosets = set()
        reps = []
        for x in sorted(Nh.elems):
            if x in seen_cosets:
                continue
            reps.append(x)
            seen_cosets.update(G.mul_idx(x, h) for h in H.elems)
        for p in sorted(set(G.orders)):
            if (o * p) > max_order or max_order % (o * p) != 0:
                continue
            layers.setdefault(o * p, {})
            for x in reps:
                if x in H.elems:
                    continue
                if G.pow_idx(x, p) not in H.elems:
                    continue
                elems = set()
                acc = 0
                for _ in range(p):
                    elems.update(G.mul_idx(acc, h) for h in H.elems)
                    acc = G.mul_idx(acc, x)
                if acc not in H.elems:
                    continue  # x^p landed outside after cosets: not an extension
                H2 = Subgroup(G, frozenset(elems))
                if H2.order != o * p:
                    continue
                rep, _ = _conjugacy_canonical(G, H2)
                if rep.igs not in layers[o * p]:
                    layers[o * p][rep.igs] = rep
                    todo.append(rep)
    out = {o: sorted(d.values(), key=lambda s: s.igs) for o, d in layers.items()}
    G._cache[("sub_classes", max_order)] = out
    return out


def subgroup_classes_of_order(G: PcPresentation, order: int) -> list[Subgroup]:
    if G.order % order != 0:
        return []
    return subgroup_classes_up_to_order(G, order).get(order, [])


def subgroups_of_index(G: PcPresentation, n: int) -> list[Subgroup]:
    """Conjugacy class representatives of subgroups of index exactly n."""
    if n > INDEX_BOUND:
        raise BoundExceeded(f"index {n} exceeds bound {INDEX_BOUND}")
    if G.order % n != 0:
        return []
    return subgroup_classes_of_order(G, G.order // n)


# -- group files ------------------------------------------------------------------


class GroupFileError(ValueError):
    """Malformed group file, with the offending line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def parse_group_file(text: str, name: str = "") -> PcPresentation:
    """Parse the plain-text presentation format.

    Directives (1-based generator indices):
      pcgroup n
      order i p
      power i : e1 ... en
      conj i j : e1 ... en
    '#' starts a comment.  Omitted power words default to the identity;
    omitted conjugation relations default to trivial action.
    """
    n = None
    orders: dict[int, int] = {}
    powers: dict[int, tuple] = {}
    conj: dict[tuple, tuple] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        head = parts[0]
        try:
            if head == "pcgroup":
                if n is not None:
                    raise GroupFileError(line_no, "duplicate pcgroup directive")
                n = int(parts[1])
                if n < 1:
                    raise GroupFileError(line_no, "generator count must be positive")
            elif head == "order":
                if n is None:
                    raise GroupFileError(line_no, "order before pcgroup directive")
                i, p = int(parts[1]), int(parts[2])
                if not (1 <= i <= n):
                    raise GroupFileError(line_no, f"generator index {i} out of range")
                orders[i - 1] = p
            elif head in ("power", "conj"):
                if n is None:
                    raise GroupFileError(line_no, f"{head} before pcgroup directive")
                if ":" not in parts:
                    raise GroupFileError(line_no, "missing ':' separator")
                sep = parts.index(":")
                idxs = [int(v) for v in parts[1:sep]]
                word = [int(v) for v in parts[sep + 1 :]]
                if len(word) != n:
                    raise GroupFileError(line_no, f"word must have {n} entries, got {len(word)}")
                if head == "power":
                    if len(idxs) != 1:
                        raise GroupFileError(line_no, "power needs one generator index")
                    powers[idxs[0] - 1] = tuple(word)
                else:
                    if len(idxs) != 2:
                        raise GroupFileError(line_no, "conj needs two generator indices")
                    i, j = idxs[0] - 1, idxs[1] - 1
                    if not (0 <= i < j < n):
                        raise GroupFileError(line_no, f"conj indices must satisfy i < j, got {idxs}")
                    conj[(i, j)] = tuple(word)
            else:
                raise GroupFileError(line_no, f"unknown directive {head!r}")
        except GroupFileError:
            raise
        except (ValueError, IndexError) as exc:
            raise GroupFileError(line_no, f"cannot parse: {exc}") from exc
    if n is None:
        raise GroupFileError(0, "missing pcgroup directive")
    missing = [i + 1 for i in range(n) if i not in orders]
    if missing:
        raise GroupFileError(0, f"missing order directives for generators {missing}")
    zero = tuple([0] * n)
    power_list = [powers.get(i, zero) for i in range(n)]
    try:
        return PcPresentation(
            [orders[i] for i in range(n)], power_list, conj, name=name, check=True
        )
    except (ValueError, InconsistentPresentation) as exc:
        raise GroupFileError(0, str(exc)) from exc


def load_group_file(path) -> PcPresentation:
    from pathlib import Path

    p = Path(path)
    return parse_group_file(p.read_text(), name=p.stem)


def format_group_file(G: PcPresentation) -> str:
    lines = [f"# {G.name}", f"pcgroup {G.n}"]
    for i, p in enumerate(G.orders, start=1):
        lines.append(f"order {i} {p}")
    for i, w in enumerate(G.powers, start=1):
        if any(w):
            lines.append(f"power {i} : " + " ".join(str(e) for e in w))
    for (i, j), w in sorted(G.conjugates.items()):
        trivial = tuple(1 if t == j else 0 for t in range(G.n))
        if w != trivial:
            lines.append(f"conj {i + 1} {j + 1} : " + " ".join(str(e) for e in w))
    return "\n".join(lines) + "\n"
