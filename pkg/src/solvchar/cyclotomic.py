"""Exact arithmetic in the union of cyclotomic fields Q(zeta_n).

Elements are stored as sparse dictionaries {exponent: Fraction} over a fixed
canonical integral basis of Q(zeta_n), with n minimal (the conductor).  All
arithmetic is exact; there are no floating point code paths and no tolerance
parameters.  Equality of canonical forms is structural equality.

The basis used for Q(zeta_n), n = prod p^a, picks zeta_n^i exactly when every
prime-power digit of i is admissible:

  * odd p:  the digit j in [0, p^a) must have nonzero top base-p digit,
            i.e. j >= p^(a-1);
  * p = 2:  the digit j must satisfy j < 2^(a-1).

Here the p-digit of i is j = i * (n/p^a)^{-1} mod p^a, so that
zeta_n^i = prod_p zeta_{p^a}^{j_p}.  Each basis has phi(n) elements.  A
non-admissible exponent is rewritten using 1 + zeta_p + ... + zeta_p^{p-1} = 0
(odd p) or zeta_{2^a}^{2^(a-1)} = -1; both rewrites shift the exponent by
multiples of n/p, which leaves every other prime's digit untouched, so one
pass per prime normalizes any element.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm


@lru_cache(maxsize=None)
def _factor(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of n as a sorted tuple of (p, a) pairs."""
    assert n >= 1
    out = []
    d, m = 2, n
    while d * d <= m:
        if m % d == 0:
            a = 0
            while m % d == 0:
                m //= d
                a += 1
            out.append((d, a))
        d += 1 if d == 2 else 2
    if m > 1:
        out.append((m, 1))
    return tuple(out)


@lru_cache(maxsize=None)
def _digit_data(n: int) -> tuple[tuple[int, int, int, int], ...]:
    """Per prime of n: (p, p^a, p^(a-1), u) with u = (n/p^a)^{-1} mod p^a."""
    out = []
    for p, a in _factor(n):
        pa = p**a
        u = pow((n // pa) % pa, -1, pa)
        out.append((p, pa, pa // p, u))
    return tuple(out)


def _crt_exponent(n: int, digits: dict[int, int]) -> int:
    """Exponent i mod n with p-digit digits[p] for each p | n.

    The digit of i at p is (i * u) mod p^a with u = (n/p^a)^{-1}, so i must
    satisfy i = digits[p] * (n/p^a) mod p^a at every prime.
    """
    i = 0
    for p, pa, _, _ in _digit_data(n):
        m = n // pa
        r = (digits[p] * m) % pa
        i += r * m * pow(m % pa, -1, pa)
    return i % n


def _reduce_to_basis(n: int, coeffs: dict[int, Fraction]) -> dict[int, Fraction]:
    """Rewrite arbitrary exponents into the canonical basis of Q(zeta_n)."""
    if n == 1:
        c = sum(coeffs.values(), Fraction(0))
        return {0: c} if c else {}
    for p, pa, ph, u in _digit_data(n):
        step = n // p
        nxt: dict[int, Fraction] = {}
        for i, c in coeffs.items():
            if not c:
                continue
            j = (i * u) % pa
            if p == 2:
                if j < ph:
                    nxt[i] = nxt.get(i, Fraction(0)) + c
                else:
                    k = (i + step) % n
                    nxt[k] = nxt.get(k, Fraction(0)) - c
            else:
                if j >= ph:
                    nxt[i] = nxt.get(i, Fraction(0)) + c
                else:
                    for t in range(1, p):
                        k = (i + t * step) % n
                        nxt[k] = nxt.get(k, Fraction(0)) - c
        coeffs = nxt
    return {i: c for i, c in coeffs.items() if c}


def _try_drop_prime_power(n: int, coeffs: dict[int, Fraction]):
    """One conductor-reduction step; returns (n', coeffs') or None.

    Assumes coeffs is in basis form for conductor n.
    """
    for p, pa, ph, u in _digit_data(n):
        if pa == 2:
            # n = 2m with m odd: zeta_n^i = (-1)^(j2) * zeta_m^(i*2^{-1} mod m)
            m = n // 2
            out: dict[int, Fraction] = {}
            inv2 = pow(2, -1, m) if m > 1 else 0
            for i, c in coeffs.items():
                sign = -1 if (i * u) % 2 else 1
                k = (i * inv2) % m if m > 1 else 0
                out[k] = out.get(k, Fraction(0)) + sign * c
            return m, {k: c for k, c in out.items() if c}
        if pa > p or p == 2:
            # drop one factor p when every p-digit is divisible by p
            if all(((i * u) % pa) % p == 0 for i in coeffs):
                n2 = n // p
                out = {}
                for i, c in coeffs.items():
                    digits = {q: (i * uq) % qa for q, qa, _, uq in _digit_data(n)}
                    digits[p] //= p
                    k = _crt_exponent(n2, digits)
                    out[k] = out.get(k, Fraction(0)) + c
                return n2, {k: c for k, c in out.items() if c}
        else:
            # odd p, a = 1: reducible iff within each residue class mod n/p the
            # coefficient is constant across the p-1 admissible digits; the
            # surviving exponent is the m-part i * p^{-1} mod m (m = n/p)
            m = n // p
            w = pow(p % m, -1, m) if m > 1 else 0
            groups: dict[int, dict[int, Fraction]] = {}
            for i, c in coeffs.items():
                groups.setdefault((i * w) % m if m > 1 else 0, {})[(i * u) % pa] = c
            ok = all(
                len(g) == p - 1 and len(set(g.values())) == 1
                for g in groups.values()
            )
            if ok and groups:
                out = {}
                for k, g in groups.items():
                    c = -next(iter(g.values()))
                    if c:
                        out[k] = c
                return m, out
    return None


def _canonical(n: int, coeffs: dict[int, Fraction]) -> tuple[int, dict[int, Fraction]]:
    coeffs = {i % n: Fraction(c) for i, c in coeffs.items() if c}
    if not coeffs:
        return 1, {}
    if n % 2 == 0 and (n // 2) % 2 == 1:
        # normalize n = 2 mod 4 immediately: Q(zeta_2m) = Q(zeta_m) for odd m
        pass  # handled by the reduction loop below
    coeffs = _reduce_to_basis(n, coeffs)
    while n > 1:
        if not coeffs:
            return 1, {}
        red = _try_drop_prime_power(n, coeffs)
        if red is None:
            break
        n, coeffs = red
        if n > 1:
            coeffs = _reduce_to_basis(n, coeffs)
    if n == 1:
        c = coeffs.get(0, Fraction(0))
        return 1, ({0: c} if c else {})
    return n, coeffs


class Cyclotomic:
    """An element of Q(zeta_n) in canonical (minimal-conductor, basis) form."""

    __slots__ = ("n", "coeffs", "_hash")

    def __init__(self, n: int, coeffs: dict[int, Fraction] | None = None):
        if coeffs is None:
            coeffs = {}
        self.n, self.coeffs = _canonical(n, coeffs)
        self._hash = None

    # -- constructors -------------------------------------------------

    @staticmethod
    def from_rational(c) -> "Cyclotomic":
        return Cyclotomic(1, {0: Fraction(c)})

    @staticmethod
    def zero() -> "Cyclotomic":
        return Cyclotomic(1, {})

    @staticmethod
    def one() -> "Cyclotomic":
        return Cyclotomic(1, {0: Fraction(1)})

    # -- predicates / views -------------------------------------------

    @property
    def conductor(self) -> int:
        return self.n

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_rational(self) -> bool:
        return self.n == 1

    def as_rational(self) -> Fraction | None:
        if self.n != 1:
            return None
        return self.coeffs.get(0, Fraction(0))

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs.values())

    # -- arithmetic ----------------------------------------------------

    @staticmethod
    def _coerce(x) -> "Cyclotomic":
        if isinstance(x, Cyclotomic):
            return x
        if isinstance(x, (int, Fraction)):
            return Cyclotomic.from_rational(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to Cyclotomic")

    def __add__(self, other) -> "Cyclotomic":
        other = self._coerce(other)
        n = lcm(self.n, other.n)
        a, b = n // self.n, n // other.n
        out: dict[int, Fraction] = {}
        for i, c in self.coeffs.items():
            out[i * a] = out.get(i * a, Fraction(0)) + c
        for i, c in other.coeffs.items():
            out[i * b] = out.get(i * b, Fraction(0)) + c
        return Cyclotomic(n, out)

    __radd__ = __add__

    def __neg__(self) -> "Cyclotomic":
        z = Cyclotomic.__new__(Cyclotomic)
        z.n = self.n
        z.coeffs = {i: -c for i, c in self.coeffs.items()}
        z._hash = None
        return z

    def __sub__(self, other) -> "Cyclotomic":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Cyclotomic":
        return self._coerce(other) + (-self)

    def __mul__(self, other) -> "Cyclotomic":
        other = self._coerce(other)
        if self.is_zero() or other.is_zero():
            return Cyclotomic.zero()
        if other.n == 1:
            c = other.coeffs[0]
            return Cyclotomic(self.n, {i: v * c for i, v in self.coeffs.items()})
        if self.n == 1:
            c = self.coeffs[0]
            return Cyclotomic(other.n, {i: v * c for i, v in other.coeffs.items()})
        n = lcm(self.n, other.n)
        a, b = n // self.n, n // other.n
        out: dict[int, Fraction] = {}
        for i, ci in self.coeffs.items():
            ia = i * a
            for j, cj in other.coeffs.items():
                k = (ia + j * b) % n
                out[k] = out.get(k, Fraction(0)) + ci * cj
        return Cyclotomic(n, out)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Cyclotomic":
        other = self._coerce(other)
        return self * other.inverse()

    def inverse(self) -> "Cyclotomic":
        """Multiplicative inverse via the norm trick (product of conjugates)."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic")
        if self.n == 1:
            return Cyclotomic(1, {0: 1 / self.coeffs[0]})
        prod = Cyclotomic.one()
        for k in range(2, self.n):
            if gcd(k, self.n) == 1:
                prod = prod * self.galois(k)
        norm = (self * prod).as_rational()
        assert norm is not None and norm != 0, "field norm must be a nonzero rational"
        return prod * Cyclotomic(1, {0: 1 / norm})

    def __pow__(self, e: int) -> "Cyclotomic":
        if e < 0:
            return self.inverse() ** (-e)
        out = Cyclotomic.one()
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    # -- Galois action --------------------------------------------------

    def galois(self, k: int) -> "Cyclotomic":
        """Apply the automorphism zeta_n -> zeta_n^k; requires gcd(k, n) = 1."""
        k %= self.n
        if self.n == 1:
            return self
        if gcd(k, self.n) != 1:
            raise ValueError(f"galois exponent {k} not coprime to conductor {self.n}")
        return Cyclotomic(self.n, {(i * k) % self.n: c for i, c in self.coeffs.items()})

    def conjugate(self) -> "Cyclotomic":
        return self.galois(self.n - 1) if self.n > 1 else self

    def abs_squared(self) -> "Cyclotomic":
        """z * conj(z), exactly (rational whenever z is a scaled root of unity)."""
        return self * self.conjugate()

    # -- root-of-unity helpers ------------------------------------------

    @staticmethod
    def root_of_unity(e: int, k: int = 1) -> "Cyclotomic":
        assert e >= 1
        return Cyclotomic(e, {k % e: Fraction(1)})

    def as_root_of_unity(self) -> tuple[int, int] | None:
        """Return (n, k) with self == zeta_n^k in lowest terms, else None."""
        n = self.n
        if n == 1:
            c = self.as_rational()
            if c == 1:
                return (1, 0)
            if c == -1:
                return (2, 1)
            return None
        if sum(abs(c) for c in self.coeffs.values()) > max(2, n):
            return None
        for k in range(n):
            if gcd(k, n) == 1 and self == Cyclotomic.root_of_unity(n, k):
                return (n, k)
            if self == -Cyclotomic.root_of_unity(n, k):
                # -zeta_n^k = zeta_{2n}^{n + 2k}
                return (2 * n, (n + 2 * k) % (2 * n))
        return None

    def multiplicative_order(self, bound: int = 10**6) -> int | None:
        """Order of self as a root of unity, or None if not a root of unity."""
        r = self.as_root_of_unity()
        if r is None:
            return None
        n, k = r
        return n // gcd(n, k) if k else 1

    # -- serialization ----------------------------------------------------

    def serialize(self) -> str:
        """Canonical string form 'n:[k=num/den,...]' with ascending exponents."""
        parts = []
        for k in sorted(self.coeffs):
            c = self.coeffs[k]
            s = str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
            parts.append(f"{k}={s}")
        return f"{self.n}:[{','.join(parts)}]"

    @staticmethod
    def parse(s: str) -> "Cyclotomic":
        head, _, body = s.partition(":")
        n = int(head)
        body = body.strip()
        if not (body.startswith("[") and body.endswith("]")):
            raise ValueError(f"malformed cyclotomic literal: {s!r}")
        inner = body[1:-1].strip()
        coeffs: dict[int, Fraction] = {}
        if inner:
            for item in inner.split(","):
                k, _, v = item.partition("=")
                coeffs[int(k)] = Fraction(v)
        return Cyclotomic(n, coeffs)

    # -- dunder plumbing ---------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Cyclotomic.from_rational(other)
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self.coeffs.items())))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self) -> str:
        return f"Cyclotomic({self.serialize()!r})"

    def __complex__(self) -> complex:
        # debugging aid only; no library code consumes floats
        from cmath import exp, pi

        return sum(
            float(c) * exp(2j * pi * k / self.n) for k, c in self.coeffs.items()
        ) if self.coeffs else 0j


ZERO = Cyclotomic.zero()
ONE = Cyclotomic.one()


def cyc(x) -> Cyclotomic:
    """Coerce an int or Fraction to a Cyclotomic."""
    return Cyclotomic._coerce(x)


def geometric_sum_is_zero(order: int, exponent: int, length: int) -> bool:
    """Exact test for sum_{t<length} zeta_order^(exponent*t) == 0.

    The sum vanishes iff w = zeta_order^exponent satisfies w != 1 and
    w^length = 1 (so the powers run over a full cycle a whole number of
    times); this is pure integer arithmetic on exponents.
    """
    o = order // gcd(order, exponent % order) if exponent % order else 1
    return o != 1 and length % o == 0
