"""Arithmetic in small finite fields GF(p^k) in the polynomial basis.

Elements are length-k tuples of residues mod p (coefficient of x^i at
position i).  The reducing modulus is chosen deterministically: the
lexicographically least coefficient vector among all monic irreducible
polynomials of degree k over GF(p), so element encodings are reproducible
across runs.  Fields are capped at 2**16 elements; everything this library
builds on top of them is far smaller.
"""

from __future__ import annotations

from functools import lru_cache

ORDER_CAP = 2**16


class FieldError(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _poly_trim(c: list[int]) -> tuple[int, ...]:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _poly_mul_mod_p(a: tuple[int, ...], b: tuple[int, ...], p: int) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(out)


def _poly_rem(a: tuple[int, ...], mod: tuple[int, ...], p: int) -> tuple[int, ...]:
    # mod is monic; classic long division, remainder only
    r = list(a)
    dm = len(mod) - 1
    while len(r) - 1 >= dm and r:
        lead = r[-1]
        if lead:
            shift = len(r) - 1 - dm
            for i in range(dm + 1):
                r[shift + i] = (r[shift + i] - lead * mod[i]) % p
        r.pop()
    return _poly_trim(r)


def _is_irreducible(poly: tuple[int, ...], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    deg = len(poly) - 1
    if deg <= 0:
        return False
    if deg == 1:
        return True
    for d in range(1, deg // 2 + 1):
        for code in range(p**d):
            div = []
            c = code
            for _ in range(d):
                div.append(c % p)
                c //= p
            div.append(1)  # monic
            if not _poly_rem(poly, tuple(div), p):
                return False
    return True


def _least_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Lex-least (ascending-power coefficient tuple) monic irreducible of degree k."""
    if k == 1:
        return (0, 1)  # the polynomial x
    for code in range(p**k):
        coeffs = []
        c = code
        for _ in range(k):
            coeffs.append(c % p)
            c //= p
        cand = tuple(coeffs) + (1,)
        if _is_irreducible(cand, p):
            return cand
    raise FieldError(f"no irreducible polynomial of degree {k} over GF({p})")  # pragma: no cover


class Field:
    """GF(p^k) with elements represented as coefficient tuples of length k.

    All operations are pure; instances are immutable after construction and
    safe to share between threads or processes.
    """

    def __init__(self, p: int, k: int):
        if not is_prime(p):
            raise FieldError(f"characteristic {p} is not prime")
        if k < 1:
            raise FieldError(f"extension degree must be >= 1, got {k}")
        if p**k > ORDER_CAP:
            raise FieldError(f"field order {p}^{k} exceeds cap {ORDER_CAP}")
        self.p = p
        self.k = k
        self.order = p**k
        self.modulus = _least_irreducible(p, k)
        self.zero = (0,) * k
        self.one = (1,) + (0,) * (k - 1)

    # -- element encoding ------------------------------------------------
    def element(self, index: int) -> tuple[int, ...]:
        """Element with the given index (base-p digits, constant term first)."""
        if not 0 <= index < self.order:
            raise FieldError(f"element index {index} out of range for GF({self.order})")
        coeffs = []
        for _ in range(self.k):
            coeffs.append(index % self.p)
            index //= self.p
        return tuple(coeffs)

    def index(self, x: tuple[int, ...]) -> int:
        self._check(x)
        idx = 0
        for c in reversed(x):
            idx = idx * self.p + c
        return idx

    def elements(self) -> list[tuple[int, ...]]:
        return [self.element(i) for i in range(self.order)]

    def _check(self, x: tuple[int, ...]) -> None:
        if len(x) != self.k or any(not 0 <= c < self.p for c in x):
            raise FieldError(f"{x!r} is not a valid element of GF({self.p}^{self.k})")

    # -- arithmetic --------------------------------------------------------
    def add(self, x: tuple[int, ...], y: tuple[int, ...]) -> tuple[int, ...]:
        self._check(x)
        self._check(y)
        p = self.p
        return tuple((a + b) % p for a, b in zip(x, y))

    def neg(self, x: tuple[int, ...]) -> tuple[int, ...]:
        self._check(x)
        p = self.p
        return tuple((-a) % p for a in x)

    def sub(self, x: tuple[int, ...], y: tuple[int, ...]) -> tuple[int, ...]:
        return self.add(x, self.neg(y))

    def mul(self, x: tuple[int, ...], y: tuple[int, ...]) -> tuple[int, ...]:
        self._check(x)
        self._check(y)
        prod = _poly_mul_mod_p(_poly_trim(list(x)), _poly_trim(list(y)), self.p)
        red = _poly_rem(prod, self.modulus, self.p)
        return tuple(red) + (0,) * (self.k - len(red))

    def pow(self, x: tuple[int, ...], e: int) -> tuple[int, ...]:
        if e < 0:
            return self.pow(self.inv(x), -e)
        out = self.one
        base = x
        while e:
            if e & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            e >>= 1
        return out

    def inv(self, x: tuple[int, ...]) -> tuple[int, ...]:
        self._check(x)
        if x == self.zero:
            raise ZeroDivisionError("inverse of zero in a finite field")
        # x^(q-2) = x^-1 in GF(q)
        return self.pow(x, self.order - 2)

    def frobenius(self, x: tuple[int, ...]) -> tuple[int, ...]:
        """The map x -> x^p (squaring in characteristic 2)."""
        return self.pow(x, self.p)

    # -- dense index tables for group builders -----------------------------
    def index_tables(self) -> tuple[list[list[int]], list[list[int]]]:
        """(add, mul) tables over element indices; cached per field."""
        if not hasattr(self, "_tables"):
            els = self.elements()
            idx = {e: i for i, e in enumerate(els)}
            add = [[idx[self.add(a, b)] for b in els] for a in els]
            mul = [[idx[self.mul(a, b)] for b in els] for a in els]
            self._tables = (add, mul)
        return self._tables

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.k})" if self.k > 1 else f"GF({self.p})"


@lru_cache(maxsize=None)
def field(p: int, k: int = 1) -> Field:
    """Construct (and cache) GF(p^k) with the deterministic modulus."""
    return Field(p, k)


def field_of_order(q: int) -> Field:
    """GF(q) for a prime power q, factoring q as p^k."""
    if q < 2:
        raise FieldError(f"{q} is not a prime power")
    for p in range(2, q + 1):
        if not is_prime(p):
            continue
        if q % p == 0:
            k = 0
            m = q
            while m % p == 0:
                m //= p
                k += 1
            if m != 1:
                raise FieldError(f"{q} is not a prime power")
            return field(p, k)
    raise FieldError(f"{q} is not a prime power")  # pragma: no cover
