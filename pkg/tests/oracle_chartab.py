"""Brute-force character table oracle for small groups.

Independent of the production table builder: conjugacy classes are recomputed
by conjugating with every group element, linear characters by exhaustively
solving the defining relations over root-of-unity tuples, and the remaining
irreducibles come out of the characters induced from cyclic subgroups.  The
rational span of those inductions is the whole virtual-character space
(Artin's induction theorem), and every induction has integer coordinates
over the irreducibles, so each irreducible is a norm-1 vector of the dual
lattice of the reduced inductions.  Dual units are enumerated exactly
(Fraction LDL^T plus bounded depth-first search) and then screened, because
a dual unit can also be a rational mix of irreducibles (square sums like
(3/5)^2 + (4/5)^2 reach norm 1) or even a class-permuted copy of a true row
that no inner-product or value test can reject.  The decisive screen is the
class-sum eigenfunction identity: summing a character over a class times any
element gives |K| chi(K) chi(g) / chi(1), and a norm-1 rational combination
of irreducibles satisfying it for every class is forced onto a single
irreducible.  Everything is exact, so the oracle needs no tuning and
certifies itself.
"""

import itertools
from fractions import Fraction

from solvchar.cyclotomic import Cyclotomic, ZERO


def brute_classes(G):
    """Class list and element->class map, by conjugating with all of G."""
    class_of = [-1] * G.order
    classes = []
    for x in range(G.order):
        if class_of[x] >= 0:
            continue
        orbit = set()
        for g in range(G.order):
            orbit.add(G.mul_idx(G.inv_idx(g), G.mul_idx(x, g)))
        k = len(classes)
        for y in orbit:
            assert class_of[y] == -1
            class_of[y] = k
        classes.append(sorted(orbit))
    return classes, class_of


def _element_order(G, x):
    o = 1
    y = x
    while y != 0:
        y = G.mul_idx(y, x)
        o += 1
    return o


def brute_linear_characters(G, classes):
    """All homomorphisms G -> roots of unity, by exhaustive solving.

    A candidate assigns each generator a root exponent in Q/Z; it survives if
    every power and conjugation relation balances.  Values at a class are read
    off the normal form of its representative.
    """

    def word_exponent(qs, letters):
        acc = Fraction(0)
        for i, e in letters:
            acc += qs[i] * e
        return acc % 1

    choices = []
    for i in range(G.n):
        m = _element_order(G, G.generator(i).idx)
        choices.append([Fraction(k, m) for k in range(m)])
    out = []
    for qs in itertools.product(*choices):
        ok = True
        for i in range(G.n):
            target = (qs[i] * G.orders[i]) % 1
            if word_exponent(qs, G._power_letters[i]) != target:
                ok = False
                break
        if ok:
            for j in range(G.n):
                for i in range(j + 1, G.n):
                    if word_exponent(qs, G._conj_word(j, i)) != qs[i] % 1:
                        ok = False
                        break
                if not ok:
                    break
        if not ok:
            continue
        vals = []
        for cl in classes:
            q = Fraction(0)
            for i, e in enumerate(G.unrank(cl[0])):
                q += qs[i] * e
            q %= 1
            vals.append(Cyclotomic.root_of_unity(q.denominator, q.numerator))
        out.append(tuple(vals))
    assert len(out) >= 1
    return out


def induced_from_cyclic(G, classes, class_of):
    """All characters induced from linear characters of cyclic subgroups.

    For C = <x> of order m, one pass over the powers of x records which class
    each power hits; the linear character s -> zeta_m^(t*s) of C then induces
    to theta(cl_k) = (|C_G(g_k)| / m) * sum of those roots over the hits.
    """
    r = len(classes)
    cent = [Fraction(G.order, len(cl)) for cl in classes]
    seen = set()
    out = []
    for x in range(G.order):
        powers = [0]
        y = x
        while y != 0:
            powers.append(y)
            y = G.mul_idx(y, x)
        m = len(powers)
        key = frozenset(powers)
        if key in seen:
            continue
        seen.add(key)
        hits = {}
        for s, y in enumerate(powers):
            hits.setdefault(class_of[y], []).append(s)
        for t in range(m):
            vals = []
            for k in range(r):
                acc = ZERO
                for s in hits.get(k, ()):
                    acc = acc + Cyclotomic.root_of_unity(m, t * s)
                vals.append(acc * (cent[k] / m))
            out.append(tuple(vals))
    return out


def _inner(G, classes, a, b):
    acc = ZERO
    for k, cl in enumerate(classes):
        acc = acc + a[k] * b[k].conjugate() * len(cl)
    q = (acc * Fraction(1, G.order)).as_rational()
    assert q is not None, "inner product must be rational"
    return q


def _inner_int(G, classes, a, b):
    q = _inner(G, classes, a, b)
    assert q.denominator == 1, "inner product of virtual characters must be integral"
    return int(q)


def _sub(a, b, c):
    return tuple(x - y * c for x, y in zip(a, b))


def _combo(vecs, coeffs, r):
    out = []
    for k in range(r):
        acc = ZERO
        for c, v in zip(coeffs, vecs):
            if c:
                acc = acc + v[k] * c
        out.append(acc)
    return tuple(out)


def _degree(a):
    return a[0].as_rational()


def _solve_system(A, b):
    """Solve A x = b exactly by Gaussian elimination over Fractions."""
    m = len(A)
    M = [[Fraction(A[i][j]) for j in range(m)] + [Fraction(b[i])] for i in range(m)]
    for col in range(m):
        piv = next(i for i in range(col, m) if M[i][col] != 0)
        M[col], M[piv] = M[piv], M[col]
        inv = 1 / M[col][col]
        M[col] = [v * inv for v in M[col]]
        for i in range(m):
            if i != col and M[i][col]:
                f = M[i][col]
                M[i] = [v - f * w for v, w in zip(M[i], M[col])]
    return [M[i][m] for i in range(m)]


def _det(A):
    m = len(A)
    M = [[Fraction(v) for v in row] for row in A]
    det = Fraction(1)
    for col in range(m):
        piv = next((i for i in range(col, m) if M[i][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            M[col], M[piv] = M[piv], M[col]
            det = -det
        det *= M[col][col]
        inv = 1 / M[col][col]
        for i in range(col + 1, m):
            if M[i][col]:
                f = M[i][col] * inv
                M[i] = [v - f * w for v, w in zip(M[i], M[col])]
    return det


def _unit_coefficients(gram):
    """All x with x^T gram x = 1, one per +/- pair, by bounded search.

    gram must be symmetric positive definite (exact Fractions); uses an
    LDL^T factorization and depth-first enumeration with exact bounds.
    """
    m = len(gram)
    L = [[Fraction(1) if i == j else Fraction(0) for j in range(m)] for i in range(m)]
    d = [Fraction(0)] * m
    for i in range(m):
        d[i] = Fraction(gram[i][i]) - sum(L[i][k] ** 2 * d[k] for k in range(i))
        assert d[i] > 0, "gram matrix must be positive definite"
        for j in range(i + 1, m):
            L[j][i] = (
                Fraction(gram[j][i]) - sum(L[j][k] * L[i][k] * d[k] for k in range(i))
            ) / d[i]
    out = []
    x = [0] * m

    def descend(i, rem):
        if i < 0:
            if rem == 0 and any(x):
                out.append(tuple(x))
            return
        c = -sum(L[j][i] * x[j] for j in range(i + 1, m))
        k = int(c)
        while d[i] * (k - c) ** 2 <= rem:
            x[i] = k
            descend(i - 1, rem - d[i] * (k - c) ** 2)
            k -= 1
        k = int(c) + 1
        while d[i] * (k - c) ** 2 <= rem:
            x[i] = k
            descend(i - 1, rem - d[i] * (k - c) ** 2)
            k += 1
        x[i] = 0

    descend(m - 1, Fraction(1))
    seen = set()
    uniq = []
    for vec in out:
        neg = tuple(-v for v in vec)
        if vec not in seen and neg not in seen:
            seen.add(vec)
            uniq.append(vec)
    return uniq


def oracle_character_table(G):
    """Irreducible character value rows in the production class order.

    Output rows are value tuples indexed like conjugacy_class_data classes,
    sorted by degree then serialized values, ready to compare against the
    production table sorted the same way.
    """
    classes, class_of = brute_classes(G)
    r = len(classes)
    zero = tuple([ZERO] * r)
    found = []
    found_keys = set()

    def take(vec):
        d = _degree(vec)
        if d is not None and d < 0:
            vec = _sub(zero, vec, 1)
            d = -d
        assert d is not None and d > 0, "norm-1 vector must be a signed character"
        if vec not in found_keys:
            found_keys.add(vec)
            found.append(vec)

    for vec in brute_linear_characters(G, classes):
        assert _inner_int(G, classes, vec, vec) == 1
        take(vec)

    # reduce the cyclic inductions against the linears, keep the distinct
    # nonzero remainders; their rational span carries every other irreducible
    survivors = []
    seen = set()
    for vec in induced_from_cyclic(G, classes, class_of):
        for chi in found:
            c = _inner_int(G, classes, vec, chi)
            if c:
                vec = _sub(vec, chi, c)
        if vec != zero and vec not in seen:
            seen.add(vec)
            survivors.append(vec)

    if survivors:
        sel = []
        gram_full = [
            [_inner_int(G, classes, a, b) for b in survivors] for a in survivors
        ]
        for k in range(len(survivors)):
            trial = sel + [k]
            if _det([[gram_full[a][b] for b in trial] for a in trial]) != 0:
                sel.append(k)
        basis = [survivors[k] for k in sel]
        gram = [[gram_full[a][b] for b in sel] for a in sel]
        m = len(sel)
        assert m == r - len(found), "inductions from cyclic must span Irr(G)"
        def is_class_sum_eigenfunction(vec, d):
            for K in range(r):
                omega = vec[K] * Fraction(len(classes[K]), d)
                for j in range(r):
                    g = classes[j][0]
                    acc = ZERO
                    for x in classes[K]:
                        acc = acc + vec[class_of[G.mul_idx(x, g)]]
                    if acc != omega * vec[j]:
                        return False
            return True

        # every irreducible has integer inner product with each basis vector
        # and norm 1, so it is a unit of the dual lattice; the converse
        # fails, since a dual unit can be a rational mix of irreducibles, so
        # each unit must pass the class-sum eigenfunction identity, which
        # pins the simultaneous eigenvectors of the commuting convolution
        # operators, and those span one irreducible each
        dual_gram = [_solve_system(gram, [1 if j == i else 0 for j in range(m)]) for i in range(m)]
        for i in range(m):
            for j in range(m):
                assert dual_gram[i][j] == dual_gram[j][i]
        for y in _unit_coefficients(dual_gram):
            coeffs = _solve_system(gram, list(y))
            vec = _combo(basis, coeffs, r)
            assert _inner_int(G, classes, vec, vec) == 1
            d = _degree(vec)
            if d == 0 or d.denominator != 1:
                continue
            if d < 0:
                vec = _sub(zero, vec, 1)
                d = -d
            if not all(v.is_integral() for v in vec):
                continue
            if not is_class_sum_eigenfunction(vec, int(d)):
                continue
            take(vec)

    assert len(found) == r, f"oracle incomplete: {len(found)} of {r} characters"
    assert sum(int(_degree(chi)) ** 2 for chi in found) == G.order

    # the oracle certifies its own rows before anything is compared
    for i in range(r):
        for j in range(r):
            assert _inner_int(G, classes, found[i], found[j]) == (1 if i == j else 0)

    _, prod_classes = G.conjugacy_class_data()
    perm = [class_of[int(members[0])] for _, members in prod_classes]
    assert sorted(perm) == list(range(r))
    rows = [tuple(vec[k] for k in perm) for vec in found]
    rows.sort(key=lambda row: (int(_degree(row)), [v.serialize() for v in row]))
    return rows
