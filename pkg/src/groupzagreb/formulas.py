"""Closed-form Zagreb evaluators for every group family, with equality-case
predicates, quotient-hypothesis entries, and the crosscheck that compares a
formula prediction against a brute-forced group report field by field.

Each entry carries exact integer polynomial evaluators for M1/M2 of both the
commuting and non-commuting graph, the predicted vertex/edge counts and
clique decomposition, and an equality predicate for the conjecture.  A few
families additionally carry ``alt_forms``: variant closed forms that fail
the complement identity (they cannot be reproduced from the clique
decomposition).  Those are never used as predictions; sweeps evaluate them
and report the disagreement, with the brute-force oracle as the arbiter.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .grp import (
    FiniteGroup,
    recognize_dihedral,
    recognize_elementary_abelian_p2,
)
from .zagreb import (
    CliqueDecomposition,
    GroupReport,
    Verdict,
    group_report,
)


class FormulaError(ValueError):
    pass


@dataclass(frozen=True)
class FormulaPrediction:
    vertices: int
    edges_c: int
    edges_nc: int
    m1_c: int
    m2_c: int
    m1_nc: int
    m2_nc: int
    decomposition: CliqueDecomposition
    equality_c: bool
    equality_nc: bool


@dataclass(frozen=True)
class AltForm:
    """A variant closed form kept only so that sweeps can flag it."""

    field: str
    note: str
    fn: Callable


@dataclass(frozen=True)
class FormulaEntry:
    key: str
    param_names: tuple[str, ...]
    validate: Callable[..., str | None]
    predict: Callable[..., FormulaPrediction]
    alt_forms: tuple[AltForm, ...] = ()

    def evaluate(self, params: tuple[int, ...]) -> FormulaPrediction:
        if len(params) != len(self.param_names):
            raise FormulaError(
                f"{self.key} takes parameters {self.param_names}, got {params}"
            )
        err = self.validate(*params)
        if err:
            raise FormulaError(f"{self.key}{params}: {err}")
        return self.predict(*params)


def evaluate(entry: FormulaEntry, params: tuple[int, ...]) -> FormulaPrediction:
    return entry.evaluate(params)


# ---------------------------------------------------------------------------
# small helpers
# ---------------------------------------------------------------------------

def _half(v: int) -> int:
    if v % 2:
        raise FormulaError(f"expected an even value, got {v}")
    return v // 2


def _parts(*pairs: tuple[int, int]) -> CliqueDecomposition:
    merged: dict[int, int] = {}
    for copies, size in pairs:
        if copies and size:
            merged[size] = merged.get(size, 0) + copies
    return CliqueDecomposition(tuple((merged[s], s) for s in sorted(merged)))


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def _prediction(parts, m1_c, m2_c, m1_nc, m2_nc, vertices, edges_c, edges_nc, eq):
    return FormulaPrediction(
        vertices=vertices,
        edges_c=edges_c,
        edges_nc=edges_nc,
        m1_c=m1_c,
        m2_c=m2_c,
        m1_nc=m1_nc,
        m2_nc=m2_nc,
        decomposition=parts,
        equality_c=eq,
        equality_nc=eq,
    )


# ---------------------------------------------------------------------------
# family closed forms
# ---------------------------------------------------------------------------

def _dihedral_predict(m: int) -> FormulaPrediction:
    if m % 2:
        return _prediction(
            _parts((1, m - 1), (m, 1)),
            m1_c=(m - 1) * (m - 2) ** 2,
            m2_c=_half((m - 1) * (m - 2) ** 3),
            m1_nc=m * (m - 1) * (5 * m - 4),
            m2_nc=m * (m - 1) * (4 * m * m - 6 * m + 2),
            vertices=2 * m - 1,
            edges_c=_half((m - 1) * (m - 2)),
            edges_nc=_half(3 * m * (m - 1)),
            eq=False,
        )
    return _prediction(
        _parts((1, m - 2), (m // 2, 2)),
        m1_c=(m - 2) * (m - 3) ** 2 + m,
        m2_c=_half((m - 2) * (m - 3) ** 3 + m),
        m1_nc=5 * m**3 - 18 * m**2 + 16 * m,
        m2_nc=4 * m**4 - 20 * m**3 + 32 * m**2 - 16 * m,
        vertices=2 * m - 2,
        edges_c=_half((m - 2) * (m - 3) + m),
        edges_nc=_half(3 * m * (m - 2)),
        eq=m == 4,
    )


def _dicyclic_predict(n: int) -> FormulaPrediction:
    pred = _dihedral_predict(2 * n)
    return _prediction(
        pred.decomposition,
        m1_c=(2 * n - 2) * (2 * n - 3) ** 2 + 2 * n,
        m2_c=(n - 1) * (2 * n - 3) ** 3 + n,
        m1_nc=40 * n**3 - 72 * n**2 + 32 * n,
        m2_nc=64 * n**4 - 160 * n**3 + 128 * n**2 - 32 * n,
        vertices=pred.vertices,
        edges_c=pred.edges_c,
        edges_nc=pred.edges_nc,
        eq=n == 2,
    )


def _quasidihedral_predict(n: int) -> FormulaPrediction:
    h = 2 ** (n - 1)
    pred = _dihedral_predict(h)
    return _prediction(
        pred.decomposition,
        m1_c=(h - 2) * (h - 3) ** 2 + h,
        m2_c=(2 ** (n - 2) - 1) * (h - 3) ** 3 + 2 ** (n - 2),
        m1_nc=5 * 2 ** (3 * n - 3) - 18 * 2 ** (2 * n - 2) + 16 * 2 ** (n - 1),
        m2_nc=4 * 2 ** (4 * n - 4) - 20 * 2 ** (3 * n - 3)
        + 32 * 2 ** (2 * n - 2) - 16 * 2 ** (n - 1),
        vertices=pred.vertices,
        edges_c=pred.edges_c,
        edges_nc=pred.edges_nc,
        eq=h == 4,  # only at order 8, below this family's validity range
    )


def _v8n_predict(n: int) -> FormulaPrediction:
    if n % 2:
        # same graph as the dihedral group of order 8n
        return _prediction(
            _parts((1, 4 * n - 2), (2 * n, 2)),
            m1_c=(4 * n - 2) * (4 * n - 3) ** 2 + 4 * n,
            m2_c=(2 * n - 1) * (4 * n - 3) ** 3 + 2 * n,
            m1_nc=16 * n * (20 * n**2 - 18 * n + 4),
            m2_nc=64 * n * (16 * n**3 - 20 * n**2 + 8 * n - 1),
            vertices=8 * n - 2,
            edges_c=_half((4 * n - 2) * (4 * n - 3) + 4 * n),
            edges_nc=24 * n**2 - 12 * n,
            eq=n == 1,
        )
    return _prediction(
        _parts((1, 4 * n - 4), (n, 4)),
        m1_c=(4 * n - 4) * (4 * n - 5) ** 2 + 36 * n,
        m2_c=(2 * n - 2) * (4 * n - 5) ** 3 + 54 * n,
        m1_nc=8 * n * (40 * n**2 - 72 * n + 32),
        m2_nc=2 * n * (512 * n**3 - 1280 * n**2 + 1024 * n - 256),
        vertices=8 * n - 4,
        edges_c=(2 * n - 2) * (4 * n - 5) + 6 * n,
        edges_nc=24 * n * (n - 1),
        eq=n == 2,
    )


def _v8n_even_alt_m1_nc(n: int):
    return 8 * n * (40 * n**2 + 8 * n - 93) if n % 2 == 0 else None


def _v8n_even_alt_m2_nc(n: int):
    return 2 * n * (512 * n**3 - 1180 * n**2 + 1024 * n - 229) if n % 2 == 0 else None


def _sd8n_predict(n: int) -> FormulaPrediction:
    # parities swapped relative to V_8n
    if n % 2:
        return _prediction(
            _parts((1, 4 * n - 4), (n, 4)),
            m1_c=(4 * n - 4) * (4 * n - 5) ** 2 + 36 * n,
            m2_c=(2 * n - 2) * (4 * n - 5) ** 3 + 54 * n,
            m1_nc=8 * n * (40 * n**2 - 72 * n + 32),
            m2_nc=2 * n * (512 * n**3 - 1280 * n**2 + 1024 * n - 256),
            vertices=8 * n - 4,
            edges_c=(2 * n - 2) * (4 * n - 5) + 6 * n,
            edges_nc=24 * n * (n - 1),
            eq=False,
        )
    return _prediction(
        _parts((1, 4 * n - 2), (2 * n, 2)),
        m1_c=(4 * n - 2) * (4 * n - 3) ** 2 + 4 * n,
        m2_c=(2 * n - 1) * (4 * n - 3) ** 3 + 2 * n,
        m1_nc=16 * n * (20 * n**2 - 18 * n + 4),
        m2_nc=64 * n * (16 * n**3 - 20 * n**2 + 8 * n - 1),
        vertices=8 * n - 2,
        edges_c=_half((4 * n - 2) * (4 * n - 3) + 4 * n),
        edges_nc=24 * n**2 - 12 * n,
        eq=False,
    )


def _sd8n_alt_m1_nc(n: int):
    return 8 * n * (40 * n**2 + 8 * n - 93) if n % 2 else None


def _sd8n_alt_m2_nc(n: int):
    return 2 * n * (512 * n**3 - 1180 * n**2 + 1024 * n - 229) if n % 2 else None


def _quot_dihedral_predict(m: int, n: int) -> FormulaPrediction:
    return _prediction(
        _parts((1, (m - 1) * n), (m, n)),
        m1_c=n * (m - 1) * (m * n - n - 1) ** 2 + m * n * (n - 1) ** 2,
        m2_c=_half((m * n - n) * (m * n - n - 1) ** 3 + m * n * (n - 1) ** 3),
        m1_nc=n**3 * (5 * m**3 - 9 * m**2 + 4 * m),
        m2_nc=n**4 * (4 * m**4 - 10 * m**3 + 8 * m**2 - 2 * m),
        vertices=(2 * m - 1) * n,
        edges_c=_half((m * n - n) * (m * n - n - 1) + m * n * (n - 1)),
        edges_nc=_half(3 * m**2 * n**2 - 3 * m * n**2),
        eq=False,
    )


def _u6n_predict(n: int) -> FormulaPrediction:
    return _prediction(
        _parts((1, 2 * n), (3, n)),
        m1_c=2 * n * (2 * n - 1) ** 2 + 3 * n * (n - 1) ** 2,
        m2_c=_half(2 * n * (2 * n - 1) ** 3 + 3 * n * (n - 1) ** 3),
        m1_nc=66 * n**3,
        m2_nc=120 * n**4,
        vertices=5 * n,
        edges_c=_half(2 * n * (2 * n - 1) + 3 * n * (n - 1)),
        edges_nc=9 * n**2,
        eq=False,
    )


def _m2mn_predict(m: int, n: int) -> FormulaPrediction:
    if m % 2:
        base = _quot_dihedral_predict(m, n)
        return base
    return _prediction(
        _parts((1, (m - 2) * n), (m // 2, 2 * n)),
        m1_c=n * (m - 2) * (m * n - 2 * n - 1) ** 2 + m * n * (2 * n - 1) ** 2,
        m2_c=_half((m * n - 2 * n) * (m * n - 2 * n - 1) ** 3 + m * n * (2 * n - 1) ** 3),
        m1_nc=n**3 * (5 * m**3 - 18 * m**2 + 16 * m),
        m2_nc=4 * n**4 * (m**4 - 5 * m**3 + 8 * m**2 - 4 * m),
        vertices=(m - 1) * 2 * n,
        edges_c=_half((m * n - 2 * n) * (m * n - 2 * n - 1) + m * n * (2 * n - 1)),
        edges_nc=_half(3 * (m // 2) ** 2 * (2 * n) ** 2 - 3 * (m // 2) * (2 * n) ** 2),
        eq=False,
    )


def _pq_predict(p: int, q: int) -> FormulaPrediction:
    return _prediction(
        _parts((1, q - 1), (q, p - 1)),
        m1_c=(q - 1) * (q - 2) ** 2 + q * (p - 1) * (p - 2) ** 2,
        m2_c=_half((q - 1) * (q - 2) ** 3 + q * (p - 1) * (p - 2) ** 3),
        m1_nc=q * (p - 1) * (q - 1) * (p**2 * q - p**2 + p * q - q),
        m2_nc=_half(
            p**4 * q**4 - 3 * p**4 * q**3 + 3 * p**4 * q**2 - p**4 * q
            + 2 * p**3 * q**3 - 4 * p**3 * q**2 + 2 * p**3 * q
            - 3 * p**2 * q**4 + 5 * p**2 * q**3 - p**2 * q**2 - p**2 * q
            + 2 * p * q**4 - 4 * p * q**3 + 2 * p * q**2
        ),
        vertices=p * q - 1,
        edges_c=_half((q - 1) * (q - 2) + q * (p - 1) * (p - 2)),
        edges_nc=_half(p**2 * q**2 - p**2 * q - q**2 + q),
        eq=False,
    )


def _pq_alt_m1_nc(p: int, q: int):
    return (
        p**3 * q**3 - 2 * p**2 * q**2 - p * q**3 - p**3 * q**2 + p * q**2
        - 3 * q**2 - 3 * q * p**2 + 2 * q + p**3 * q + q**3 - 4
    )


def _pq_alt_m2_nc(p: int, q: int):
    return Fraction(
        p**4 * q**4 - 7 * p**3 * q**3 + 41 * p**2 * q**2 - 51 * p * q
        + 3 * p**4 * q**2 + 13 * q**2 - 16 * p**3 * q**2 + 14 * p * q**2
        + 2 * p**2 * q**3 - 16 * p * q**3 + 8 * p**2 * q - 9 * q
        + 2 * p * q**4 + 2 * p**3 * q + p**4 * q + 18,
        2,
    )


def _quot_zpzp_predict(p: int, n: int) -> FormulaPrediction:
    return _prediction(
        _parts((p + 1, (p - 1) * n)),
        m1_c=(p * n - n) * (p + 1) * (p * n - n - 1) ** 2,
        m2_c=_half((p + 1) * (p * n - n) * (p * n - n - 1) ** 3),
        m1_nc=(p + 1) * (p * n - n) * (p**4 * n**2 - 2 * p**3 * n**2 + p**2 * n**2),
        m2_nc=_half((p + 1) * p**3 * n**4 * (p - 1) ** 4),
        vertices=n * (p**2 - 1),
        edges_c=_half((p + 1) * (p * n - n) * (p * n - n - 1)),
        edges_nc=_half((p**2 * n - n) * (p**2 * n - p * n)),
        eq=True,
    )


def _quot_zpzp_alt_m2_nc(p: int, n: int):
    return Fraction(
        (p + 1) ** 2 * (p * n - n) ** 2 * (p**4 * n**2 - 2 * p**3 * n**2 + p**2 * n**2),
        2,
    )


def _quot_sz2_predict(n: int) -> FormulaPrediction:
    return _prediction(
        _parts((1, 4 * n), (5, 3 * n)),
        m1_c=4 * n * (4 * n - 1) ** 2 + 15 * n * (3 * n - 1) ** 2,
        m2_c=_half(4 * n * (4 * n - 1) ** 3 + 15 * n * (3 * n - 1) ** 3),
        m1_nc=4740 * n**3,
        m2_nc=37440 * n**4,
        vertices=19 * n,
        edges_c=_half(4 * n * (4 * n - 1) + 15 * n * (3 * n - 1)),
        edges_nc=150 * n**2,
        eq=False,
    )


def _hanaki_a1_predict(n: int) -> FormulaPrediction:
    x = 2**n
    return _prediction(
        _parts((x - 1, x)),
        m1_c=x * (x - 1) ** 3,
        m2_c=_half(x * (x - 1) ** 4),
        m1_nc=x**5 * (x - 5) + 4 * x**3 * (2 * x - 1),
        m2_nc=_half(x**7 * (x - 7)) + 9 * x**6 - 10 * x**5 + 4 * x**4,
        vertices=x * x - x,
        edges_c=_half(x * (x - 1) ** 2),
        edges_nc=_half(x**2 * (x - 1) * (x - 2)),
        eq=True,
    )


def _hanaki_a1_alt_e_nc(n: int):
    x = 2**n
    return x * (x - 2) * (x**2 - x)


def _hanaki_a2_predict(n: int, p: int) -> FormulaPrediction:
    x = p**n
    return _prediction(
        _parts((x + 1, x * x - x)),
        m1_c=x * (x**2 - 1) * (x**2 - x - 1) ** 2,
        m2_c=_half(x * (x**2 - 1) * (x**2 - x - 1) ** 3),
        m1_nc=x**8 * (x - 2) + x**5 * (2 * x - 1),
        m2_nc=_half((x**3 - x) * (x**8 * (x - 3) + x**6 * (3 * x - 1))),
        vertices=x**3 - x,
        edges_c=_half(x * (x**2 - 1) * (x**2 - x - 1)),
        edges_nc=_half(x**2 * (x - 1) * (x**3 - x)),
        eq=True,
    )


def _gl2_predict(q: int) -> FormulaPrediction:
    return _prediction(
        _parts(
            (q * (q + 1) // 2, (q - 1) * (q - 2)),
            (q + 1, (q - 1) ** 2),
            (q * (q - 1) // 2, q * (q - 1)),
        ),
        m1_c=q * (q - 1) * (q**6 - 4 * q**5 + 4 * q**4 + 2 * q**3 - 4 * q**2 + q - 1),
        m2_c=_half(
            q * (q - 1)
            * (q**8 - 6 * q**7 + 14 * q**6 - 15 * q**5 + 3 * q**4
               + 12 * q**3 - 16 * q**2 + 9 * q - 1)
        ),
        m1_nc=(q - 1) * (
            q**11 - 2 * q**10 - 4 * q**9 + 9 * q**8 + 5 * q**7 - 15 * q**6
            + q**5 + 7 * q**4 - 2 * q**3 + q**2 - q
        ),
        m2_nc=_half(
            q * (q - 1)
            * (q**14 - 3 * q**13 - 4 * q**12 + 19 * q**11 - 47 * q**9 + 28 * q**8
               + 43 * q**7 - 50 * q**6 + 11 * q**5 + 4 * q**4 - 12 * q**3
               + 19 * q**2 - 11 * q + 2)
        ),
        vertices=(q - 1) * (q**3 - q - 1),
        edges_c=_half(q * (q - 1) * (q**4 - 2 * q**3 - q**2 + 2 * q + 1)),
        edges_nc=_half(q * (q**7 - 2 * q**6 - 2 * q**5 + 5 * q**4 + q**3 - 4 * q**2 + 1)),
        eq=False,
    )


def _psl2_predict(k: int) -> FormulaPrediction:
    x = 2**k
    return _prediction(
        _parts((x + 1, x - 1), (x * (x + 1) // 2, x - 2), (x * (x - 1) // 2, x)),
        m1_c=x**5 - 4 * x**4 + 4 * x**3 + 4 * x**2 - 5 * x - 4,
        m2_c=_half(x**6 - 6 * x**5 + 14 * x**4 - 9 * x**3 - 15 * x**2 + 15 * x + 8),
        m1_nc=x**9 - 5 * x**7 - x**6 + 8 * x**5 + 2 * x**4 - 3 * x**3 - x**2 - x,
        m2_nc=_half(
            x**12 - 7 * x**10 - x**9 + 18 * x**8 + 3 * x**7 - 18 * x**6
            - 2 * x**5 + x**4 + 2 * x**3 + 5 * x**2 - 2 * x
        ),
        vertices=x**3 - x - 1,
        edges_c=_half(x**4 - 2 * x**3 - x**2 + 2 * x + 2),
        edges_nc=_half(x**6 - 3 * x**4 - x**3 + 2 * x**2 + x),
        eq=False,
    )


def _psl2_alt_e_c(k: int):
    x = 2**k
    return Fraction(x**4 - 2 * x**3 - 2 * x**2 + 3 * x + 2, 2)


def _psl2_alt_e_nc(k: int):
    x = 2**k
    return Fraction(x**6 - 3 * x**4 - x**3 + 3 * x**2, 2)


def _psl2_alt_m1_nc(k: int):
    x = 2**k
    return x**9 - 5 * x**7 - x**6 + 9 * x**5 - 5 * x**3 - 3 * x**2 + 3 * x


def _psl2_alt_m2_nc(k: int):
    x = 2**k
    return Fraction(
        x**12 - 7 * x**10 - x**9 + 21 * x**8 - 26 * x**6 - 2 * x**5
        + 15 * x**4 + 3 * x**3 + 6 * x**2 - 8 * x,
        2,
    )


# ---------------------------------------------------------------------------
# the registry
# ---------------------------------------------------------------------------

def _v_dihedral(m):
    return None if m >= 3 else "m must be >= 3"


def _v_positive(n):
    return None if n >= 1 else "n must be >= 1"


_ALT_COMPLEMENT_NOTE = "variant form; fails the complement identity"
_ALT_EQUALITY_NOTE = "variant equality claim; contradicted by the oracle"

ENTRIES: dict[str, FormulaEntry] = {}


def _register(entry: FormulaEntry) -> FormulaEntry:
    ENTRIES[entry.key] = entry
    return entry


_register(FormulaEntry("dihedral", ("m",), _v_dihedral, _dihedral_predict))
_register(FormulaEntry(
    "dicyclic", ("n",),
    lambda n: None if n >= 2 else "n must be >= 2",
    _dicyclic_predict,
))
_register(FormulaEntry(
    "quasidihedral", ("n",),
    lambda n: None if n >= 4 else "n must be >= 4",
    _quasidihedral_predict,
))
_register(FormulaEntry(
    "sd8n", ("n",),
    lambda n: None if n >= 2 else "n must be >= 2",
    _sd8n_predict,
    alt_forms=(
        AltForm("m1_nc", _ALT_COMPLEMENT_NOTE, _sd8n_alt_m1_nc),
        AltForm("m2_nc", _ALT_COMPLEMENT_NOTE, _sd8n_alt_m2_nc),
        AltForm("equality_c", _ALT_EQUALITY_NOTE, lambda n: n == 2),
        AltForm("equality_nc", _ALT_EQUALITY_NOTE, lambda n: n == 2),
    ),
))
_register(FormulaEntry(
    "v8n", ("n",), _v_positive, _v8n_predict,
    alt_forms=(
        AltForm("m1_nc", _ALT_COMPLEMENT_NOTE, _v8n_even_alt_m1_nc),
        AltForm("m2_nc", _ALT_COMPLEMENT_NOTE, _v8n_even_alt_m2_nc),
    ),
))
_register(FormulaEntry("u6n", ("n",), _v_positive, _u6n_predict))
_register(FormulaEntry(
    "m2mn", ("m", "n"),
    lambda m, n: (
        "m must be >= 3 and != 4" if m < 3 or m == 4
        else ("n must be >= 1" if n < 1 else None)
    ),
    _m2mn_predict,
))
_register(FormulaEntry(
    "pq", ("p", "q"),
    lambda p, q: (
        "p and q must be prime" if not (_is_prime(p) and _is_prime(q))
        else ("p must be < q" if p >= q
              else ("p must divide q-1" if (q - 1) % p else None))
    ),
    _pq_predict,
    alt_forms=(
        AltForm("m1_nc", _ALT_COMPLEMENT_NOTE, _pq_alt_m1_nc),
        AltForm("m2_nc", _ALT_COMPLEMENT_NOTE, _pq_alt_m2_nc),
    ),
))
_register(FormulaEntry("sz2", (), lambda: None, lambda: _quot_sz2_predict(1)))
_register(FormulaEntry(
    "hanaki_a1", ("n",),
    lambda n: None if n >= 2 else "n must be >= 2",
    _hanaki_a1_predict,
    alt_forms=(AltForm("edges_nc", _ALT_COMPLEMENT_NOTE, _hanaki_a1_alt_e_nc),),
))
_register(FormulaEntry(
    "hanaki_a2", ("n", "p"),
    lambda n, p: (
        "n must be >= 1" if n < 1 else (None if _is_prime(p) else "p must be prime")
    ),
    _hanaki_a2_predict,
))
_register(FormulaEntry(
    "gl2", ("q",),
    lambda q: None if q > 2 else "q must be a prime power > 2",
    _gl2_predict,
))
_register(FormulaEntry(
    "psl2", ("k",),
    lambda k: None if k >= 2 else "k must be >= 2",
    _psl2_predict,
    alt_forms=(
        AltForm("edges_c", _ALT_COMPLEMENT_NOTE, _psl2_alt_e_c),
        AltForm("edges_nc", _ALT_COMPLEMENT_NOTE, _psl2_alt_e_nc),
        AltForm("m1_nc", _ALT_COMPLEMENT_NOTE, _psl2_alt_m1_nc),
        AltForm("m2_nc", _ALT_COMPLEMENT_NOTE, _psl2_alt_m2_nc),
    ),
))
_register(FormulaEntry(
    "quot_dihedral", ("m", "n"),
    lambda m, n: ("m must be >= 3" if m < 3 else ("n must be >= 1" if n < 1 else None)),
    _quot_dihedral_predict,
))
_register(FormulaEntry(
    "quot_zpzp", ("p", "n"),
    lambda p, n: (
        "p must be prime" if not _is_prime(p) else ("n must be >= 1" if n < 1 else None)
    ),
    _quot_zpzp_predict,
    alt_forms=(AltForm("m2_nc", _ALT_COMPLEMENT_NOTE, _quot_zpzp_alt_m2_nc),),
))
_register(FormulaEntry("quot_sz2", ("n",), _v_positive, _quot_sz2_predict))


# ---------------------------------------------------------------------------
# dispatch: which entries apply to a concrete group
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Applicable:
    entry: FormulaEntry
    params: tuple[int, ...]
    source: str  # "family" or "quotient"
    tags: tuple[str, ...] = ()


_F20_ORDER_PROFILE = {1: 1, 2: 5, 4: 10, 5: 4}

_PR_CONSEQUENCES = {
    Fraction(5, 14): "D_14",
    Fraction(2, 5): "D_10",
    Fraction(11, 27): "Z_3xZ_3",
    Fraction(1, 2): "D_6",
    Fraction(7, 16): "D_8",
    Fraction(5, 8): "Z_2xZ_2",
}


def _looks_like_f20(G: FiniteGroup) -> bool:
    if G.order != 20 or len(G.center()) != 1:
        return False
    profile: dict[int, int] = {}
    for x in range(20):
        o = G.element_order(x)
        profile[o] = profile.get(o, 0) + 1
    return profile == _F20_ORDER_PROFILE


def registry_for(G: FiniteGroup, with_tags: bool = True) -> tuple[Applicable, ...]:
    """Entries applicable to G: its own family entry (when it was built from a
    family spec) plus quotient-hypothesis entries whenever G/Z(G) is
    recognized, with consequence tags from centralizer counts and the
    commutativity degree."""
    apps: list[Applicable] = []
    tags: tuple[str, ...] = ()
    if with_tags:
        tag_list = []
        cents = G.count_distinct_centralizers()
        if cents in (4, 5):
            tag_list.append(f"{cents}-centralizer")
        pr = G.commutativity_degree()
        if pr in _PR_CONSEQUENCES:
            tag_list.append(f"pr={pr}=>G/Z={_PR_CONSEQUENCES[pr]}")
        tags = tuple(tag_list)

    if G.family in ENTRIES:
        apps.append(Applicable(ENTRIES[G.family], G.params or (), "family", tags))

    z = len(G.center())
    if z < G.order:
        quotient = G.central_quotient()
        m = recognize_dihedral(quotient)
        if m is not None:
            apps.append(Applicable(
                ENTRIES["quot_dihedral"], (m, z), "quotient",
                tags + (f"G/Z=D_{2 * m}",),
            ))
        p = recognize_elementary_abelian_p2(quotient)
        if p is not None:
            apps.append(Applicable(
                ENTRIES["quot_zpzp"], (p, z), "quotient",
                tags + (f"G/Z=Z_{p}xZ_{p}",),
            ))
        if _looks_like_f20(quotient):
            apps.append(Applicable(
                ENTRIES["quot_sz2"], (z,), "quotient",
                tags + ("G/Z=Sz(2)",),
            ))
    return tuple(apps)


# ---------------------------------------------------------------------------
# crosscheck
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FieldDiff:
    field: str
    predicted: object
    actual: object
    note: str = ""


@dataclass(frozen=True)
class CrosscheckResult:
    entry_key: str
    params: tuple[int, ...]
    diffs: tuple[FieldDiff, ...]
    alt_mismatches: tuple[FieldDiff, ...]

    @property
    def clean(self) -> bool:
        return not self.diffs


def crosscheck(
    entry: FormulaEntry,
    params: tuple[int, ...],
    G: FiniteGroup | None = None,
    report: GroupReport | None = None,
) -> CrosscheckResult:
    """Compare a formula prediction against a brute-forced group report.

    Primary closed forms that disagree land in ``diffs``; alternate forms
    that disagree with the confirmed value land in ``alt_mismatches`` (they
    are expected to disagree - that is why they are retained)."""
    if report is None:
        if G is None:
            raise ValueError("crosscheck needs a group or a precomputed report")
        report = group_report(G)
    pred = entry.evaluate(params)

    actual = {
        "vertices": report.c.vertices,
        "edges_c": report.c.edges,
        "edges_nc": report.nc.edges,
        "m1_c": report.c.m1,
        "m2_c": report.c.m2,
        "m1_nc": report.nc.m1,
        "m2_nc": report.nc.m2,
        "decomposition": report.decomposition,
        "equality_c": report.verdict_c.status == Verdict.HOLDS_WITH_EQUALITY,
        "equality_nc": report.verdict_nc.status == Verdict.HOLDS_WITH_EQUALITY,
    }
    predicted = {
        "vertices": pred.vertices,
        "edges_c": pred.edges_c,
        "edges_nc": pred.edges_nc,
        "m1_c": pred.m1_c,
        "m2_c": pred.m2_c,
        "m1_nc": pred.m1_nc,
        "m2_nc": pred.m2_nc,
        "decomposition": pred.decomposition,
        "equality_c": pred.equality_c,
        "equality_nc": pred.equality_nc,
    }
    diffs = tuple(
        FieldDiff(f, predicted[f], actual[f])
        for f in predicted
        if predicted[f] != actual[f]
    )
    alt = []
    for alt_form in entry.alt_forms:
        value = alt_form.fn(*params)
        if value is None:
            continue  # variant does not apply to this parameter case
        confirmed = predicted[alt_form.field]
        if value != confirmed:
            alt.append(FieldDiff(alt_form.field, value, confirmed, alt_form.note))
    return CrosscheckResult(entry.key, tuple(params), diffs, tuple(alt))
