"""Hirzebruch-Jung continued fractions and the Wahl / T-singularity calculus.

A cyclic quotient singularity 1/p(1, q) is resolved by a chain of rational
curves C_1..C_r with C_i^2 = -b_i, where p/q = [b_1, ..., b_r] is the
Hirzebruch-Jung expansion b_1 - 1/(b_2 - 1/(...)).  T-singularities are the
ones of the form 1/(d n^2)(1, d n a - 1); Wahl singularities are the d = 1 case.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, isqrt
from typing import Iterator, Sequence

from wahlkit._linalg import frac_str, solve

__all__ = [
    "TString",
    "SingularityClass",
    "NumericalInvariants",
    "hj_expand",
    "hj_eval",
    "wahl_string",
    "classify",
    "wahl_parent",
    "generate_children",
    "enumerate_wahl",
    "discrepancies",
    "length_bound",
    "describe",
]


@dataclass(frozen=True)
class TString:
    """Chain [b_1, ..., b_r] of negated self-intersections, read left to right."""

    entries: tuple[int, ...]

    def __init__(self, entries: Sequence[int]):
        entries = tuple(int(b) for b in entries)
        if not entries:
            raise ValueError("empty string")
        if any(b < 2 for b in entries):
            raise ValueError(f"entries must be >= 2, got {list(entries)}")
        object.__setattr__(self, "entries", entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def reversed(self) -> "TString":
        return TString(self.entries[::-1])

    def canonical(self) -> "TString":
        """Lexicographically smaller of the string and its reverse."""
        return min(self, self.reversed(), key=lambda t: t.entries)

    def excess(self) -> int:
        """sum(b_i - 2); equals r + 1 on Wahl strings."""
        return sum(b - 2 for b in self.entries)

    def intersection_matrix(self) -> list[list[int]]:
        r = len(self)
        return [
            [-self.entries[i] if i == j else (1 if abs(i - j) == 1 else 0) for j in range(r)]
            for i in range(r)
        ]

    def __repr__(self) -> str:
        return f"TString({list(self.entries)})"


@dataclass(frozen=True)
class SingularityClass:
    kind: str  # "Wahl", "T" or "NotT"
    d: int | None = None
    n: int | None = None
    a: int | None = None
    certificate: tuple[str, ...] = field(default=(), compare=False)

    @property
    def is_t(self) -> bool:
        return self.kind in ("Wahl", "T")

    def to_json(self) -> dict:
        if self.kind == "NotT":
            return {"kind": "NotT"}
        out = {"kind": self.kind, "n": self.n, "a": self.a}
        if self.kind == "T":
            out["d"] = self.d
        return out


@dataclass(frozen=True)
class NumericalInvariants:
    k_squared: int
    p_g: int
    q: int = 0
    chi: int | None = None

    def __post_init__(self):
        expected = 1 - self.q + self.p_g
        if self.chi is None:
            object.__setattr__(self, "chi", expected)
        elif self.chi != expected:
            raise ValueError(f"chi = {self.chi} but 1 - q + p_g = {expected}")
        if self.p_g < 0 or self.q < 0:
            raise ValueError("p_g and q must be nonnegative")

    def on_noether_line(self) -> bool:
        return self.k_squared == 2 * self.p_g - 4

    def one_above_noether_line(self) -> bool:
        return self.k_squared == 2 * self.p_g - 3


def _as_pair(f) -> tuple[int, int]:
    if isinstance(f, tuple):
        p, q = (int(x) for x in f)
    else:
        f = Fraction(f)
        p, q = f.numerator, f.denominator
    return p, q


def hj_expand(f) -> TString:
    """Expand p/q (a Fraction or a (p, q) pair) as a Hirzebruch-Jung fraction.

    >>> hj_expand(Fraction(9, 5))
    TString([2, 5])
    """
    p, q = _as_pair(f)
    if q < 1 or p <= q:
        raise ValueError(f"need p > q >= 1, got {p}/{q}")
    if gcd(p, q) != 1:
        raise ValueError(f"{p}/{q} is not reduced")
    out = []
    while q:
        b = -(-p // q)  # ceiling
        out.append(b)
        p, q = q, b * q - p
    return TString(out)


def hj_eval(t: TString | Sequence[int]) -> Fraction:
    t = t if isinstance(t, TString) else TString(t)
    val = Fraction(t[-1])
    for b in reversed(t.entries[:-1]):
        val = b - 1 / val
    return val


def wahl_string(n: int, a: int) -> TString:
    """T-string of the Wahl singularity 1/n^2 (1, na - 1)."""
    if n < 2 or not 1 <= a < n:
        raise ValueError(f"need n >= 2 and 1 <= a < n, got n={n}, a={a}")
    if gcd(n, a) != 1:
        raise ValueError(f"gcd(n, a) = {gcd(n, a)} != 1")
    return hj_expand((n * n, n * a - 1))


def wahl_parent(t: TString) -> TString | None:
    """Undo one generation step; None when neither rule applies."""
    b = t.entries
    if len(b) < 2:
        return None
    if b[0] == 2 and b[-1] >= 3:
        return TString(b[1:-1] + (b[-1] - 1,))
    if b[-1] == 2 and b[0] >= 3:
        return TString((b[0] - 1,) + b[1:-1])
    return None


def _wahl_certificate(t: TString) -> tuple[str, ...] | None:
    chain = [t]
    while len(chain[-1]) > 1:
        parent = wahl_parent(chain[-1])
        if parent is None:
            return None
        chain.append(parent)
    if chain[-1].entries != (4,):
        return None
    return tuple(str(list(s.entries)) for s in chain)


def _t_parameters(p: int, q: int) -> tuple[int, int, int] | None:
    """(d, n, a) with p = d n^2 and q = d n a - 1, if any."""
    for n in range(2, isqrt(p) + 1):
        if p % (n * n):
            continue
        d = p // (n * n)
        if (q + 1) % (d * n):
            continue
        a = (q + 1) // (d * n)
        if 1 <= a < n and gcd(n, a) == 1:
            return d, n, a
    return None


def classify(t: TString | Sequence[int]) -> SingularityClass:
    """Recognise Wahl and T strings.

    The string is canonicalised (smaller of itself and its reverse) first.
    Wahl recognition walks the generation rules back to [4] and keeps the chain
    as a certificate; the (n, a) label is then read off the fraction.
    """
    t = t if isinstance(t, TString) else TString(t)
    c = t.canonical()
    f = hj_eval(c)
    p, q = f.numerator, f.denominator
    cert = _wahl_certificate(c)
    if cert is not None:
        params = _t_parameters(p, q)
        assert params is not None and params[0] == 1, f"{c} walks back to [4] but {p}/{q} is not n^2/(na-1)"
        _, n, a = params
        return SingularityClass("Wahl", 1, n, a, cert)
    if p == 1:
        return SingularityClass("NotT")
    params = _t_parameters(p, q)
    if params is None:
        return SingularityClass("NotT")
    d, n, a = params
    assert d >= 2, f"{c} has Wahl fraction {p}/{q} but no generation certificate"
    return SingularityClass("T", d, n, a)


def generate_children(t: TString | Sequence[int]) -> tuple[TString, TString]:
    """The two Wahl strings one step longer: [2, b_1, ..., b_r + 1] and [b_1 + 1, ..., b_r, 2]."""
    t = t if isinstance(t, TString) else TString(t)
    if _wahl_certificate(t) is None:
        raise ValueError(f"{t} is not a Wahl string")
    b = t.entries
    left = (2,) + b[:-1] + (b[-1] + 1,)
    right = (b[0] + 1,) + b[1:] + (2,)
    return TString(left), TString(right)


def enumerate_wahl(r_max: int) -> list[TString]:
    """All Wahl strings of length <= r_max, grouped by length, sorted within a length."""
    if r_max < 1:
        raise ValueError("r_max must be >= 1")
    level = {TString([4])}
    out = sorted(level, key=lambda s: s.entries)
    for _ in range(r_max - 1):
        level = {child for s in level for child in generate_children(s)}
        out.extend(sorted(level, key=lambda s: s.entries))
    return out


def discrepancies(t: TString | Sequence[int]) -> tuple[Fraction, ...]:
    """Coefficients a_i in K_X = phi^* K_W + sum a_i C_i.

    Solves sum_j a_j (C_j . C_i) = K_X . C_i = b_i - 2 (adjunction on a
    smooth rational curve).
    """
    t = t if isinstance(t, TString) else TString(t)
    m = t.intersection_matrix()
    return tuple(solve(m, [b - 2 for b in t.entries]))


def length_bound(kw2: int, ks2: int, on_line: bool = False, general_type: bool = True) -> range:
    """Admissible lengths r of the unique Wahl singularity.

    kw2 = K_W^2 of the stable surface, ks2 = K_S^2 of the minimal model of its
    minimal resolution.  Returns a range (1..r_max inclusive).
    """
    if kw2 <= ks2:
        raise ValueError(
            f"K_W^2 = {kw2} <= K_S^2 = {ks2}: with K_W and K_S big and nef one always has K_W^2 > K_S^2"
        )
    if kw2 == ks2 + 1:
        if on_line and general_type:
            return range(1, 2)
        return range(1, 3)
    return range(1, 400 * ks2**4 + 1)


def describe(t: TString | Sequence[int]) -> dict:
    """JSON-ready summary: entries, class and (for T-strings) discrepancies."""
    t = t if isinstance(t, TString) else TString(t)
    cls = classify(t)
    out = {"entries": list(t.entries), "class": cls.to_json()}
    if cls.is_t:
        out["discrepancies"] = [frac_str(a) for a in discrepancies(t)]
    return out
