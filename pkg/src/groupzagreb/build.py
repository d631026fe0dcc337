"""Constructors for every group family the checker knows about, plus direct
products, the special groups needed by the planarity/toroidality golden
tests, Cayley-table ingestion, and the deterministic catalog used by the
scan command.

Construction routes: explicit normal forms for dihedral, dicyclic, U_6n,
M_2mn and the order-pq groups; matrix enumeration over GF(q) for the four
matrix families (Hanaki A(n,nu) and A(n,p), GL(2,q), PSL(2,2^k) realized as
SL(2,2^k)); coset enumeration for SD_8n, V_8n, the quasidihedral 2-groups
and Sz(2).  Matrix-group elements are indexed lexicographically on their
row-major coefficient vectors, with the identity moved to index 0.
"""

from __future__ import annotations

import io
import os
from dataclasses import dataclass

from . import ff
from .coset import Presentation, coset_enumerate
from .grp import DEFAULT_ASSOC_CAP, FiniteGroup, GroupTableError

DEFAULT_ORDER_CAP = 5000


class FamilyError(ValueError):
    """Invalid family name or parameters."""


class OrderCapError(ValueError):
    """Requested group exceeds the configured order cap."""


class CayleyFormatError(ValueError):
    """A Cayley-table file violated the text format."""


# ---------------------------------------------------------------------------
# family specs
# ---------------------------------------------------------------------------

def _is_prime(n: int) -> bool:
    return ff.is_prime(n)


def _is_prime_power(q: int) -> bool:
    if q < 2:
        return False
    p = 2
    while p * p <= q:
        if q % p == 0:
            while q % p == 0:
                q //= p
            return q == 1
        p += 1
    return True  # q itself prime


_FAMILY_PARAM_NAMES = {
    "dihedral": ("m",),
    "dicyclic": ("n",),
    "quasidihedral": ("n",),
    "sd8n": ("n",),
    "v8n": ("n",),
    "u6n": ("n",),
    "m2mn": ("m", "n"),
    "pq": ("p", "q"),
    "sz2": (),
    "hanaki_a1": ("n",),
    "hanaki_a2": ("n", "p"),
    "gl2": ("q",),
    "psl2": ("k",),
}

FAMILY_NAMES = tuple(sorted(_FAMILY_PARAM_NAMES))


@dataclass(frozen=True)
class FamilySpec:
    """A family name plus parameter tuple, e.g. FamilySpec("dihedral", (6,))."""

    family: str
    params: tuple[int, ...] = ()

    def __post_init__(self):
        if self.family not in _FAMILY_PARAM_NAMES:
            raise FamilyError(f"unknown family {self.family!r}")
        names = _FAMILY_PARAM_NAMES[self.family]
        if len(self.params) != len(names):
            raise FamilyError(
                f"family {self.family} takes parameters {names}, got {self.params}"
            )
        err = self.validity_error()
        if err:
            raise FamilyError(f"{self.family}{self.params}: {err}")

    def validity_error(self) -> str | None:
        f, ps = self.family, self.params
        if f == "dihedral":
            if ps[0] < 3:
                return "m must be >= 3"
        elif f == "dicyclic":
            if ps[0] < 2:
                return "n must be >= 2"
        elif f == "quasidihedral":
            if ps[0] < 4:
                return "n must be >= 4 (order 2^n >= 16)"
        elif f == "sd8n":
            if ps[0] < 2:
                return "n must be >= 2"
        elif f in ("v8n", "u6n"):
            if ps[0] < 1:
                return "n must be >= 1"
        elif f == "m2mn":
            m, n = ps
            if m < 3 or m == 4:
                return "m must be >= 3 and != 4"
            if n < 1:
                return "n must be >= 1"
        elif f == "pq":
            p, q = ps
            if not (_is_prime(p) and _is_prime(q)):
                return "p and q must be prime"
            if p >= q:
                return "p must be < q"
            if (q - 1) % p:
                return "p must divide q-1"
        elif f == "hanaki_a1":
            if ps[0] < 2:
                return "n must be >= 2 (n = 1 gives an abelian group)"
        elif f == "hanaki_a2":
            n, p = ps
            if n < 1:
                return "n must be >= 1"
            if not _is_prime(p):
                return "p must be prime"
        elif f == "gl2":
            if ps[0] <= 2 or not _is_prime_power(ps[0]):
                return "q must be a prime power > 2"
        elif f == "psl2":
            if ps[0] < 2:
                return "k must be >= 2"
        return None

    def order(self) -> int:
        f, ps = self.family, self.params
        if f == "dihedral":
            return 2 * ps[0]
        if f == "dicyclic":
            return 4 * ps[0]
        if f == "quasidihedral":
            return 2 ** ps[0]
        if f in ("sd8n", "v8n"):
            return 8 * ps[0]
        if f == "u6n":
            return 6 * ps[0]
        if f == "m2mn":
            return 2 * ps[0] * ps[1]
        if f == "pq":
            return ps[0] * ps[1]
        if f == "sz2":
            return 20
        if f == "hanaki_a1":
            return 4 ** ps[0]
        if f == "hanaki_a2":
            return ps[1] ** (3 * ps[0])
        if f == "gl2":
            q = ps[0]
            return (q * q - 1) * (q * q - q)
        q = 2 ** ps[0]
        return (q + 1) * q * (q - 1)

    def label(self) -> str:
        f, ps = self.family, self.params
        if f == "dihedral":
            return f"D_{2 * ps[0]}"
        if f == "dicyclic":
            return f"Q_{4 * ps[0]}"
        if f == "quasidihedral":
            return f"QD_{2 ** ps[0]}"
        if f == "sd8n":
            return f"SD_{8 * ps[0]}"
        if f == "v8n":
            return f"V_{8 * ps[0]}"
        if f == "u6n":
            return f"U_{6 * ps[0]}"
        if f == "m2mn":
            return f"M_{2 * ps[0] * ps[1]}[m={ps[0]},n={ps[1]}]"
        if f == "pq":
            return f"Z_{ps[1]}:Z_{ps[0]}"
        if f == "sz2":
            return "Sz(2)"
        if f == "hanaki_a1":
            return f"A({ps[0]},nu)"
        if f == "hanaki_a2":
            return f"A({ps[0]},{ps[1]})"
        if f == "gl2":
            return f"GL(2,{ps[0]})"
        return f"PSL(2,{2 ** ps[0]})"


# ---------------------------------------------------------------------------
# normal-form builders
# ---------------------------------------------------------------------------

def _dihedral(m: int) -> FiniteGroup:
    # elements f^u g^s, index = u + s*m; g f g^-1 = f^-1
    n = 2 * m
    table = []
    for i in range(n):
        u1, s1 = i % m, i // m
        sign = -1 if s1 else 1
        row = [((u1 + sign * (j % m)) % m) + (((s1 + j // m) % 2) * m) for j in range(n)]
        table.append(row)
    return FiniteGroup(table, label=f"D_{n}")


def _dicyclic(n: int) -> FiniteGroup:
    # elements f^u g^s with f^(2n)=1, g^2=f^n, g f g^-1 = f^-1; index u + s*2n
    twon = 2 * n
    size = 4 * n
    table = []
    for i in range(size):
        u1, s1 = i % twon, i // twon
        sign = -1 if s1 else 1
        row = []
        for j in range(size):
            u2, s2 = j % twon, j // twon
            u = u1 + sign * u2
            if s1 and s2:
                u += n  # g^2 = f^n
            row.append((u % twon) + (((s1 + s2) % 2) * twon))
        table.append(row)
    return FiniteGroup(table, label=f"Q_{size}")


def _u6n(n: int) -> FiniteGroup:
    # elements b^i a^j with a^(2n)=b^3=1, a^-1 b a = b^-1; index = i + 3*j
    twon = 2 * n
    size = 6 * n
    table = []
    for idx in range(size):
        i1, j1 = idx % 3, idx // 3
        sign = -1 if j1 % 2 else 1
        row = [((i1 + sign * (jdx % 3)) % 3) + 3 * ((j1 + jdx // 3) % twon) for jdx in range(size)]
        table.append(row)
    return FiniteGroup(table, label=f"U_{size}")


def _m2mn(m: int, n: int) -> FiniteGroup:
    # elements a^i b^j with a^m=b^(2n)=1, b a b^-1 = a^-1; index = i + m*j
    twon = 2 * n
    size = 2 * m * n
    table = []
    for idx in range(size):
        i1, j1 = idx % m, idx // m
        sign = -1 if j1 % 2 else 1
        row = [((i1 + sign * (jdx % m)) % m) + m * ((j1 + jdx // m) % twon) for jdx in range(size)]
        table.append(row)
    return FiniteGroup(table, label=f"M_{size}[m={m},n={n}]")


def _least_primitive_root(q: int) -> int:
    phi = q - 1
    prime_factors = []
    mm = phi
    d = 2
    while d * d <= mm:
        if mm % d == 0:
            prime_factors.append(d)
            while mm % d == 0:
                mm //= d
        d += 1
    if mm > 1:
        prime_factors.append(mm)
    for g in range(2, q):
        if all(pow(g, phi // f, q) != 1 for f in prime_factors):
            return g
    raise FamilyError(f"no primitive root mod {q}")  # pragma: no cover


def _pq(p: int, q: int) -> FiniteGroup:
    # Z_q x| Z_p with y acting as multiplication by r^y, r = g^((q-1)/p);
    # elements (x, y), index = x*p + y
    r = pow(_least_primitive_root(q), (q - 1) // p, q)
    rpow = [pow(r, y, q) for y in range(p)]
    size = p * q
    table = []
    for i in range(size):
        x1, y1 = divmod(i, p)
        ry1 = rpow[y1]
        row = [((x1 + ry1 * (j // p)) % q) * p + ((y1 + j % p) % p) for j in range(size)]
        table.append(row)
    return FiniteGroup(table, label=f"Z_{q}:Z_{p}")


def cyclic(n: int, label: str | None = None) -> FiniteGroup:
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return FiniteGroup(table, label=label or f"Z_{n}")


def suzuki2_affine() -> FiniteGroup:
    """Sz(2) as the affine maps x -> a*x + b over GF(5), a != 0.

    Independent of the presentation route; used to cross-check it.
    """
    els = [(a, b) for a in range(1, 5) for b in range(5)]  # identity (1,0) first
    idx = {e: i for i, e in enumerate(els)}
    table = []
    for a1, b1 in els:
        table.append([idx[((a1 * a2) % 5, (a1 * b2 + b1) % 5)] for a2, b2 in els])
    return FiniteGroup(table, label="Sz(2)")


# ---------------------------------------------------------------------------
# presentation builders
# ---------------------------------------------------------------------------

def _power(letter: int, e: int) -> tuple[int, ...]:
    return (letter,) * e if e >= 0 else (-letter,) * (-e)


def presentation_for(spec: FamilySpec) -> Presentation:
    f, ps = spec.family, spec.params
    F, G = 1, 2
    if f == "sd8n":
        (n,) = ps
        return Presentation(2, (
            _power(F, 4 * n),
            _power(G, 2),
            (G, F, G) + _power(F, -(2 * n - 1)),  # g f g = f^(2n-1)
        ))
    if f == "v8n":
        (n,) = ps
        return Presentation(2, (
            _power(F, 2 * n),
            _power(G, 4),
            (G, F, G, F),        # g f = f^-1 g^-1
            (-G, F, -G, F),      # g^-1 f = f^-1 g
        ))
    if f == "quasidihedral":
        (n,) = ps
        half = 2 ** (n - 1)
        e = 2 ** (n - 2) - 1
        return Presentation(2, (
            _power(F, half),
            _power(G, 2),
            (G, F, -G) + _power(F, -e),  # g f g^-1 = f^(2^(n-2)-1)
        ))
    if f == "sz2":
        A, B = 1, 2
        return Presentation(2, (
            _power(A, 5),
            _power(B, 4),
            (-B, A, B, -A, -A),  # b^-1 a b = a^2
        ))
    raise FamilyError(f"no presentation route for family {f}")


def dihedral_presentation(m: int) -> Presentation:
    F, G = 1, 2
    return Presentation(2, (_power(F, m), _power(G, 2), (G, F, -G, F)))


# ---------------------------------------------------------------------------
# matrix builders
# ---------------------------------------------------------------------------

def _hanaki_a1(n: int) -> FiniteGroup:
    # pairs (a, b) over GF(2^n): (a,b)(a',b') = (a+a', b+b'+nu(a)*a')
    K = ff.field(2, n)
    add, mul = K.index_tables()
    frob = [K.index(K.frobenius(K.element(i))) for i in range(K.order)]
    q = K.order
    els = [(a, b) for a in range(q) for b in range(q)]  # identity (0,0) first
    idx = {e: i for i, e in enumerate(els)}
    table = []
    for a1, b1 in els:
        fa1 = frob[a1]
        addb1 = add[b1]
        row = [idx[(add[a1][a2], add[addb1[b2]][mul[fa1][a2]])] for a2, b2 in els]
        table.append(row)
    return FiniteGroup(table, label=f"A({n},nu)")


def _hanaki_a2(n: int, p: int) -> FiniteGroup:
    # triples (a, b, c) over GF(p^n): (a,b,c)(a',b',c') = (a+a', b+b'+c*a', c+c')
    K = ff.field(p, n)
    add, mul = K.index_tables()
    q = K.order
    els = [(a, b, c) for a in range(q) for b in range(q) for c in range(q)]
    idx = {e: i for i, e in enumerate(els)}
    table = []
    for a1, b1, c1 in els:
        mc1 = mul[c1]
        row = [
            idx[(add[a1][a2], add[add[b1][b2]][mc1[a2]], add[c1][c2])]
            for a2, b2, c2 in els
        ]
        table.append(row)
    return FiniteGroup(table, label=f"A({n},{p})")


def _matrix_group(K: ff.Field, det_condition, label: str) -> FiniteGroup:
    """2x2 matrices over K whose determinant satisfies det_condition,
    lex-ordered by (a, b, c, d) with the identity moved to index 0."""
    add, mul = K.index_tables()
    q = K.order
    neg = [K.index(K.neg(K.element(i))) for i in range(q)]
    one = K.index(K.one)
    els = []
    for a in range(q):
        for b in range(q):
            for c in range(q):
                mb = mul[b]
                ad_row = mul[a]
                for d in range(q):
                    det = add[ad_row[d]][neg[mb[c]]]
                    if det_condition(det):
                        els.append((a, b, c, d))
    ident = (one, 0, 0, one)
    els.remove(ident)
    els.insert(0, ident)
    idx = {e: i for i, e in enumerate(els)}
    table = []
    for a, b, c, d in els:
        ma, mb, mc, md = mul[a], mul[b], mul[c], mul[d]
        row = [
            idx[(
                add[ma[e]][mb[g]], add[ma[f2]][mb[h]],
                add[mc[e]][md[g]], add[mc[f2]][md[h]],
            )]
            for e, f2, g, h in els
        ]
        table.append(row)
    return FiniteGroup(table, label=label)


def _gl2(q: int) -> FiniteGroup:
    K = ff.field_of_order(q)
    return _matrix_group(K, lambda det: det != 0, f"GL(2,{q})")


def _sl2(q: int, label: str | None = None) -> FiniteGroup:
    K = ff.field_of_order(q)
    one = K.index(K.one)
    return _matrix_group(K, lambda det: det == one, label or f"SL(2,{q})")


def _psl2_2k(k: int) -> FiniteGroup:
    # in characteristic 2 the center of SL(2, 2^k) is trivial, so SL = PSL
    return _sl2(2 ** k, label=f"PSL(2,{2 ** k})")


# ---------------------------------------------------------------------------
# build_family / direct products
# ---------------------------------------------------------------------------

def build_family(spec: FamilySpec, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """Build the group for a family spec as a validated FiniteGroup."""
    expected = spec.order()
    if expected > order_cap:
        raise OrderCapError(
            f"{spec.label()} has order {expected}, above the cap {order_cap}"
        )
    f, ps = spec.family, spec.params
    if f == "dihedral":
        G = _dihedral(ps[0])
    elif f == "dicyclic":
        G = _dicyclic(ps[0])
    elif f == "u6n":
        G = _u6n(ps[0])
    elif f == "m2mn":
        G = _m2mn(*ps)
    elif f == "pq":
        G = _pq(*ps)
    elif f in ("sd8n", "v8n", "quasidihedral", "sz2"):
        G = coset_enumerate(presentation_for(spec), bound=16 * expected + 64, label=spec.label())
    elif f == "hanaki_a1":
        G = _hanaki_a1(ps[0])
    elif f == "hanaki_a2":
        G = _hanaki_a2(*ps)
    elif f == "gl2":
        G = _gl2(ps[0])
    else:
        G = _psl2_2k(ps[0])
    if G.order != expected:
        raise FamilyError(
            f"{spec.label()}: construction produced order {G.order}, expected {expected}"
        )
    G.family = spec.family
    G.params = spec.params
    return G


def direct_product(G: FiniteGroup, H: FiniteGroup, label: str | None = None,
                   order_cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """G x H with element (i, j) at index i*|H| + j."""
    if G.order * H.order > order_cap:
        raise OrderCapError(
            f"direct product order {G.order * H.order} exceeds the cap {order_cap}"
        )
    tg, th = G.table, H.table
    oh = H.order
    table = []
    for i1 in range(G.order):
        grow = [g * oh for g in tg[i1]]
        for j1 in range(H.order):
            hrow = th[j1]
            table.append([grow[i2] + hrow[j2] for i2 in range(G.order) for j2 in range(oh)])
    return FiniteGroup(table, label=label or f"{G.label}x{H.label}")


# ---------------------------------------------------------------------------
# special groups
# ---------------------------------------------------------------------------

def _perm_group(perms: list[tuple[int, ...]], label: str) -> FiniteGroup:
    els = sorted(perms)  # identity is lex-least
    idx = {e: i for i, e in enumerate(els)}
    table = []
    for s in els:
        table.append([idx[tuple(s[t[i]] for i in range(len(t)))] for t in els])
    return FiniteGroup(table, label=label)


def _symmetric(n: int, even_only: bool, label: str) -> FiniteGroup:
    from itertools import permutations

    perms = []
    for perm in permutations(range(n)):
        if even_only:
            inv = sum(
                1
                for i in range(n)
                for j in range(i + 1, n)
                if perm[i] > perm[j]
            )
            if inv % 2:
                continue
        perms.append(perm)
    return _perm_group(perms, label)


def _special_presentations() -> dict[str, Presentation]:
    A, B, C = 1, 2, 3
    return {
        # modular (Iwasawa) group of order 16: b a b^-1 = a^5
        "M_16": Presentation(2, (
            _power(A, 8), _power(B, 2), (B, A, -B) + _power(A, -5),
        )),
        "Z_4:Z_4": Presentation(2, (
            _power(A, 4), _power(B, 4), (B, A, -B, A),
        )),
        # central product of D_8 and Z_4 over their common central involution
        "D_8*Z_4": Presentation(3, (
            _power(A, 4), _power(B, 2), (B, A, -B, A),
            _power(C, 4), (C, C, -A, -A),
            (C, A, -C, -A), (C, B, -C, -B),
        )),
        # (Z_2 x Z_2) : Z_4 with the order-4 generator swapping the factors
        "SG(16,3)": Presentation(3, (
            _power(A, 2), _power(B, 2), _power(C, 4),
            (A, B, -A, -B),
            (C, A, -C, B), (C, B, -C, A),
        )),
    }


def _build_special(name: str) -> FiniteGroup:
    if name == "A_4":
        return _symmetric(4, True, "A_4")
    if name == "S_4":
        return _symmetric(4, False, "S_4")
    if name == "A_5":
        G = _sl2(4, label="A_5")  # A_5 = PSL(2,4) = SL(2,4)
        return G
    if name == "SL(2,3)":
        return _sl2(3)
    if name == "Z_2xD_8":
        return direct_product(cyclic(2), _dihedral(4), label="Z_2xD_8")
    if name == "Z_2xQ_8":
        return direct_product(cyclic(2), _dicyclic(2), label="Z_2xQ_8")
    if name == "D_6xZ_3":
        return direct_product(_dihedral(3), cyclic(3), label="D_6xZ_3")
    if name == "A_4xZ_2":
        return direct_product(_symmetric(4, True, "A_4"), cyclic(2), label="A_4xZ_2")
    pres = _special_presentations()[name]
    return coset_enumerate(pres, bound=2048, label=name)


_SPECIAL_NAMES = (
    "A_4", "S_4", "A_5", "SL(2,3)",
    "M_16", "Z_4:Z_4", "D_8*Z_4", "SG(16,3)",
    "Z_2xD_8", "Z_2xQ_8",
    "D_6xZ_3", "A_4xZ_2",
)

_SPECIAL_ORDERS = {
    "A_4": 12, "S_4": 24, "A_5": 60, "SL(2,3)": 24,
    "M_16": 16, "Z_4:Z_4": 16, "D_8*Z_4": 16, "SG(16,3)": 16,
    "Z_2xD_8": 16, "Z_2xQ_8": 16,
    "D_6xZ_3": 18, "A_4xZ_2": 24,
}


def special_group(name: str) -> FiniteGroup:
    if name not in _SPECIAL_ORDERS:
        raise FamilyError(f"unknown special group {name!r}")
    G = _build_special(name)
    if G.order != _SPECIAL_ORDERS[name]:  # pragma: no cover - construction bug guard
        raise FamilyError(f"{name}: built order {G.order} != {_SPECIAL_ORDERS[name]}")
    return G


def builtin_special_groups() -> list[FiniteGroup]:
    """The named groups from the planarity/toroidality results, concretely built."""
    return [special_group(name) for name in _SPECIAL_NAMES]


# ---------------------------------------------------------------------------
# Cayley-table ingestion
# ---------------------------------------------------------------------------

def ingest_cayley(source, assoc_cap: int = DEFAULT_ASSOC_CAP) -> FiniteGroup:
    """Parse and fully validate a Cayley-table file.

    Format: first line the order n, then n lines of n space-separated
    indices in [0, n) (row i lists the products g_i * g_j), optionally
    followed by a ``# name: <label>`` comment line.  The identity need not
    be index 0 in the file; the group is renumbered so that it is.
    """
    if hasattr(source, "read"):
        text = source.read()
    elif isinstance(source, os.PathLike) or (
        isinstance(source, str) and source and "\n" not in source
    ):
        with open(source, "r", encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = source
    lines = [ln.strip() for ln in io.StringIO(text)]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise CayleyFormatError("empty Cayley file")
    try:
        n = int(lines[0])
    except ValueError:
        raise CayleyFormatError(f"first line must be the order, got {lines[0]!r}") from None
    if n < 1:
        raise CayleyFormatError(f"order must be positive, got {n}")
    label = "ingested"
    body = lines[1:]
    while body and body[-1].startswith("#"):
        comment = body.pop()
        if comment.lstrip("#").strip().startswith("name:"):
            label = comment.lstrip("#").strip()[5:].strip()
    if len(body) != n:
        raise CayleyFormatError(f"expected {n} table rows, found {len(body)}")
    table = []
    for ln in body:
        try:
            row = [int(tok) for tok in ln.split()]
        except ValueError:
            raise CayleyFormatError(f"non-integer entry in row {ln!r}") from None
        if len(row) != n:
            raise CayleyFormatError(f"row has {len(row)} entries, expected {n}")
        if any(not 0 <= v < n for v in row):
            raise CayleyFormatError(f"entry out of range [0,{n}) in row {ln!r}")
        table.append(row)

    identity = None
    for e in range(n):
        if table[e] == list(range(n)) and all(table[i][e] == i for i in range(n)):
            identity = e
            break
    if identity is None:
        raise GroupTableError("identity axiom violated: no two-sided identity element")
    if identity != 0:
        # renumber so the identity is index 0, preserving the relative order
        # of the remaining elements
        old_order = [identity] + [i for i in range(n) if i != identity]
        new_of_old = {old: new for new, old in enumerate(old_order)}
        table = [
            [new_of_old[table[i][j]] for j in old_order]
            for i in old_order
        ]
    G = FiniteGroup(table, label=label)
    G.validate(assoc_cap=assoc_cap)
    return G


# ---------------------------------------------------------------------------
# catalog
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CatalogEntry:
    """One buildable catalog item; sortable by (order, family, params, label)."""

    order: int
    family: str
    params: tuple[int, ...]
    label: str

    def sort_key(self):
        return (self.order, self.family, self.params, self.label)

    def build(self, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
        if self.family == "special":
            return special_group(self.label)
        return build_family(FamilySpec(self.family, self.params), order_cap=order_cap)


def _primes_up_to(n: int) -> list[int]:
    return [p for p in range(2, n + 1) if _is_prime(p)]


def catalog(max_order: int) -> list[CatalogEntry]:
    """Every builtin family instance and special group of order <= max_order,
    deduplicated by (family, params) and deterministically sorted."""
    if max_order < 6:
        raise FamilyError("max_order must be >= 6")
    specs: list[FamilySpec] = []
    specs += [FamilySpec("dihedral", (m,)) for m in range(3, max_order // 2 + 1)]
    specs += [FamilySpec("dicyclic", (n,)) for n in range(2, max_order // 4 + 1)]
    n = 4
    while 2 ** n <= max_order:
        specs.append(FamilySpec("quasidihedral", (n,)))
        n += 1
    specs += [FamilySpec("sd8n", (n,)) for n in range(2, max_order // 8 + 1)]
    specs += [FamilySpec("v8n", (n,)) for n in range(1, max_order // 8 + 1)]
    specs += [FamilySpec("u6n", (n,)) for n in range(1, max_order // 6 + 1)]
    for m in range(3, max_order // 2 + 1):
        if m == 4:
            continue
        for nn in range(1, max_order // (2 * m) + 1):
            specs.append(FamilySpec("m2mn", (m, nn)))
    primes = _primes_up_to(max_order)
    for q in primes:
        for p in primes:
            if p >= q or p * q > max_order:
                continue
            if (q - 1) % p == 0:
                specs.append(FamilySpec("pq", (p, q)))
    if max_order >= 20:
        specs.append(FamilySpec("sz2", ()))
    nn = 2
    while 4 ** nn <= max_order:
        specs.append(FamilySpec("hanaki_a1", (nn,)))
        nn += 1
    for p in primes:
        nn = 1
        while p ** (3 * nn) <= max_order:
            specs.append(FamilySpec("hanaki_a2", (nn, p)))
            nn += 1
    q = 3
    while (q * q - 1) * (q * q - q) <= max_order:
        if _is_prime_power(q):
            specs.append(FamilySpec("gl2", (q,)))
        q += 1
    k = 2
    while (2 ** k + 1) * 2 ** k * (2 ** k - 1) <= max_order:
        specs.append(FamilySpec("psl2", (k,)))
        k += 1

    entries = {
        (s.family, s.params): CatalogEntry(s.order(), s.family, s.params, s.label())
        for s in specs
    }
    for name in _SPECIAL_NAMES:
        if _SPECIAL_ORDERS[name] <= max_order:
            entries[("special", name)] = CatalogEntry(
                _SPECIAL_ORDERS[name], "special", (), name
            )
    return sorted(entries.values(), key=CatalogEntry.sort_key)
