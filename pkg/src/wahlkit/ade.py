"""Simply-laced root systems in explicit coordinates.

Models (the bilinear form ``o`` is positive on roots, all roots have norm 2):

* A_n: ambient e_0..e_n, E_i = e_{i-1} - e_i.
* D_n: ambient e_1..e_n, E_i = e_i - e_{i+1} (i < n), E_n = e_{n-1} + e_n.
* E_n: ambient h, e_1..e_n with h o h = -1, E_i = e_i - e_{i+1} (i < n) and
  E_n = h - e_1 - e_2 - e_3, which hangs off node 3.

Weights are kept as ambient vectors in the rational span of the roots, and
also expose their Dynkin labels (pairings with the simple roots).
"""
from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import product
from typing import Iterable, Sequence

from wahlkit._linalg import frac_str, inverse

__all__ = [
    "RootSystem",
    "Weight",
    "build",
    "parse_system",
    "direct_sum",
    "fundamental_weights",
    "weight_of_divisor",
    "norm2",
    "is_dominant",
    "is_minuscule",
    "positive_roots",
    "weight_system",
    "count_dominant",
    "weyl_orbit",
    "reflect",
    "same_coset",
    "from_dynkin",
    "root_coordinates",
    "dominant_weights_with_norm",
]


@dataclass(frozen=True)
class RootSystem:
    family: str
    rank: int
    simple_roots: tuple[tuple[int, ...], ...]
    form: tuple[int, ...]  # diagonal of the ambient form
    coords: tuple[str, ...]
    components: tuple[tuple[str, int], ...] = ()

    @property
    def name(self) -> str:
        return "+".join(f"{f}{n}" for f, n in self.components)

    def dot(self, u: Sequence, v: Sequence):
        return sum(f * a * b for f, a, b in zip(self.form, u, v))

    @cached_property
    def cartan(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(self.dot(a, b) for b in self.simple_roots) for a in self.simple_roots)

    @cached_property
    def cartan_inverse(self) -> list[list[Fraction]]:
        return inverse(self.cartan)

    def vector(self, terms: dict[str, int | Fraction] | str) -> tuple[Fraction, ...]:
        """Ambient vector from {"h": 2, "e1": -1, ...} or a string like "2h - e1 - e2"."""
        if isinstance(terms, str):
            terms = _parse_linear(terms)
        v = [Fraction(0)] * len(self.coords)
        for k, c in terms.items():
            v[self.coords.index(k)] += Fraction(c)
        return tuple(v)

    def to_json(self) -> dict:
        return {"family": self.family, "rank": self.rank}


@dataclass(frozen=True)
class Weight:
    system: RootSystem
    vector: tuple[Fraction, ...]

    @cached_property
    def dynkin(self) -> tuple:
        labels = tuple(self.system.dot(self.vector, a) for a in self.system.simple_roots)
        return labels

    def is_integral(self) -> bool:
        return all(Fraction(x).denominator == 1 for x in self.dynkin)

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(self.system, tuple(a + b for a, b in zip(self.vector, other.vector)))

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(self.system, tuple(a - b for a, b in zip(self.vector, other.vector)))

    def __rmul__(self, c) -> "Weight":
        return Weight(self.system, tuple(c * a for a in self.vector))

    def __eq__(self, other) -> bool:
        return isinstance(other, Weight) and self.system == other.system and self.vector == other.vector

    def __hash__(self) -> int:
        return hash((self.system.name, self.vector))

    def to_json(self) -> dict:
        out = self.system.to_json()
        out["weight"] = [frac_str(x) for x in self.vector]
        return out

    def __repr__(self) -> str:
        return f"Weight({self.system.name}, {_format_vector(self.system, self.vector)})"


def _format_vector(rs: RootSystem, v: Sequence) -> str:
    parts = []
    for c, name in zip(v, rs.coords):
        if c:
            parts.append(f"{frac_str(c)}*{name}")
    return " + ".join(parts) or "0"


_TERM = re.compile(r"([+-]?)\s*(\d+(?:/\d+)?)?\s*\*?\s*([a-z]\d*)")


def _parse_linear(s: str) -> dict[str, Fraction]:
    out: dict[str, Fraction] = {}
    s = s.replace(" ", "")
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse {s!r} at {pos}")
        sign, coeff, name = m.groups()
        c = Fraction(coeff) if coeff else Fraction(1)
        out[name] = out.get(name, 0) + (-c if sign == "-" else c)
        pos = m.end()
    return out


def build(family: str, n: int) -> RootSystem:
    family = family.upper()
    if family == "A":
        if n < 1:
            raise ValueError("A_n needs n >= 1")
        coords = tuple(f"e{i}" for i in range(n + 1))
        roots = []
        for i in range(1, n + 1):
            v = [0] * (n + 1)
            v[i - 1], v[i] = 1, -1
            roots.append(tuple(v))
        form = (1,) * (n + 1)
    elif family == "D":
        if n < 4:
            raise ValueError("D_n needs n >= 4")
        coords = tuple(f"e{i}" for i in range(1, n + 1))
        roots = []
        for i in range(1, n):
            v = [0] * n
            v[i - 1], v[i] = 1, -1
            roots.append(tuple(v))
        v = [0] * n
        v[n - 2] = v[n - 1] = 1
        roots.append(tuple(v))
        form = (1,) * n
    elif family == "E":
        if n not in (6, 7, 8):
            raise ValueError("E_n needs n in {6, 7, 8}")
        coords = ("h",) + tuple(f"e{i}" for i in range(1, n + 1))
        roots = []
        for i in range(1, n):
            v = [0] * (n + 1)
            v[i], v[i + 1] = 1, -1
            roots.append(tuple(v))
        roots.append((1, -1, -1, -1) + (0,) * (n - 3))
        form = (-1,) + (1,) * n
    else:
        raise ValueError(f"unknown family {family!r}")
    return RootSystem(family, n, tuple(roots), form, coords, ((family, n),))


def parse_system(label: str) -> RootSystem:
    """'E7', 'A3', or a direct sum like 'A3+D5'."""
    parts = []
    for piece in label.replace(" ", "").split("+"):
        m = re.fullmatch(r"([ADEade])(\d+)", piece)
        if not m:
            raise ValueError(f"bad root system label {piece!r}")
        parts.append(build(m.group(1), int(m.group(2))))
    rs = parts[0]
    for other in parts[1:]:
        rs = direct_sum(rs, other)
    return rs


def direct_sum(a: RootSystem, b: RootSystem) -> RootSystem:
    """Orthogonal sum; summands keep the order given, coordinates are suffixed."""
    na, nb = len(a.coords), len(b.coords)
    k = len(a.components)
    ca = tuple(f"{c}_1" for c in a.coords) if k == 1 else a.coords
    cb = tuple(f"{c}_{k + 1}" for c in b.coords)
    roots = tuple(r + (0,) * nb for r in a.simple_roots) + tuple((0,) * na + r for r in b.simple_roots)
    return RootSystem("+".join([a.family, b.family]), a.rank + b.rank, roots, a.form + b.form, ca + cb,
                      a.components + b.components)


def fundamental_weights(rs: RootSystem) -> list[Weight]:
    """omega_i = sum_j (C^-1)_{ij} alpha_j, so omega_i o E_j = delta_ij."""
    cinv = rs.cartan_inverse
    out = []
    for i in range(rs.rank):
        v = [Fraction(0)] * len(rs.coords)
        for j, root in enumerate(rs.simple_roots):
            for k, x in enumerate(root):
                v[k] += cinv[i][j] * x
        out.append(Weight(rs, tuple(v)))
    return out


def weight_of_divisor(rs: RootSystem, intersections: Sequence[int]) -> Weight:
    """The weight pairing with E_i as C . E_i does."""
    if len(intersections) != rs.rank:
        raise ValueError(f"need {rs.rank} intersection numbers, got {len(intersections)}")
    return from_dynkin(rs, intersections)


def from_dynkin(rs: RootSystem, labels: Sequence) -> Weight:
    w = Weight(rs, (Fraction(0),) * len(rs.coords))
    for c, om in zip(labels, fundamental_weights(rs)):
        if c:
            w = w + c * om
    return w


def norm2(rs: RootSystem, w: Weight) -> Fraction:
    return Fraction(rs.dot(w.vector, w.vector))


def is_dominant(rs: RootSystem, w: Weight) -> bool:
    return all(x >= 0 for x in w.dynkin)


def positive_roots(rs: RootSystem) -> list[tuple[int, ...]]:
    """Positive roots in simple-root coordinates, by closure from the simple roots."""
    return list(_positive_roots(rs))


@lru_cache(maxsize=None)
def _positive_roots(rs: RootSystem) -> tuple[tuple[int, ...], ...]:
    C = rs.cartan
    n = rs.rank
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = set(simple)
    queue = deque(simple)
    while queue:
        beta = queue.popleft()
        for j in range(n):
            pairing = sum(beta[i] * C[i][j] for i in range(n))
            if pairing < 0:
                new = tuple(b + (i == j) for i, b in enumerate(beta))
                if new not in seen:
                    seen.add(new)
                    queue.append(new)
    roots = sorted(seen, key=lambda r: (sum(r), r))
    expected = sum(_POSITIVE_COUNT[f](m) for f, m in rs.components)
    assert len(roots) == expected, f"{rs.name}: {len(roots)} positive roots, expected {expected}"
    return tuple(roots)


_POSITIVE_COUNT = {
    "A": lambda n: n * (n + 1) // 2,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
}


def is_minuscule(rs: RootSystem, i: int) -> bool:
    """Is the i-th fundamental weight (1-based) minuscule?

    Criterion: its pairing with every root lies in {-1, 0, 1}.  The pairing of
    omega_i with a root is that root's alpha_i coefficient.
    """
    if not 1 <= i <= rs.rank:
        raise ValueError(f"index {i} out of range 1..{rs.rank}")
    return all(abs(beta[i - 1]) <= 1 for beta in _positive_roots(rs))


def weight_system(
    rs: RootSystem,
    highest: Sequence[int],
    stop_after_dominant: int | None = None,
    max_depth: int | None = None,
):
    """Distinct weights of the irreducible representation with the given highest weight.

    Weights are Dynkin-label tuples.  From mu and a simple root alpha_j with
    m = <mu, alpha_j> > 0 the whole string mu - k alpha_j (k = 1..m) is a
    weight; weights are processed in order of depth below the highest weight,
    so every string top is handled before the weights under it.  With
    ``stop_after_dominant`` the search stops once that many dominant weights
    have been seen; ``max_depth`` keeps only weights at most that far below the
    highest weight.
    """
    C = rs.cartan
    n = rs.rank
    top = tuple(int(x) for x in highest)
    if any(x < 0 for x in top):
        raise ValueError("highest weight must be dominant")
    buckets: dict[int, set] = {0: {top}}
    seen = {top}
    dominant = 0
    depth = 0
    while depth in buckets:
        for mu in sorted(buckets.pop(depth)):
            if all(x >= 0 for x in mu):
                dominant += 1
                if stop_after_dominant is not None and dominant >= stop_after_dominant:
                    return seen
            for j in range(n):
                m = mu[j]
                cur = mu
                for k in range(1, m + 1):
                    cur = tuple(a - c for a, c in zip(cur, C[j]))
                    if max_depth is not None and depth + k > max_depth:
                        break
                    if cur not in seen:
                        seen.add(cur)
                        buckets.setdefault(depth + k, set()).add(cur)
        depth += 1
        if depth not in buckets and buckets:
            depth = min(buckets)
    return seen


def count_dominant(rs: RootSystem, highest: Sequence[int], cap: int | None = None) -> int:
    ws = weight_system(rs, highest, stop_after_dominant=cap)
    return sum(1 for mu in ws if all(x >= 0 for x in mu))


def reflect(rs: RootSystem, mu: Sequence[int], j: int) -> tuple[int, ...]:
    """s_j on Dynkin labels (0-based j)."""
    m = mu[j]
    return tuple(a - m * c for a, c in zip(mu, rs.cartan[j]))


def weyl_orbit(rs: RootSystem, mu: Sequence[int], limit: int = 200000) -> set:
    start = tuple(mu)
    seen = {start}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for j in range(rs.rank):
            if cur[j] == 0:
                continue
            new = reflect(rs, cur, j)
            if new not in seen:
                seen.add(new)
                if len(seen) > limit:
                    raise RuntimeError(f"orbit exceeds {limit} elements")
                queue.append(new)
    return seen


def root_coordinates(rs: RootSystem, dynkin: Sequence) -> tuple[Fraction, ...]:
    """Coefficients on the simple roots of the weight with these Dynkin labels."""
    cinv = rs.cartan_inverse
    return tuple(sum(dynkin[i] * cinv[i][j] for i in range(rs.rank)) for j in range(rs.rank))


def dynkin_norm(rs: RootSystem, c: Sequence) -> Fraction:
    cinv = rs.cartan_inverse
    return sum(c[i] * cinv[i][j] * c[j] for i in range(rs.rank) for j in range(rs.rank))


def same_coset(rs: RootSystem, c1: Sequence, c2: Sequence) -> bool:
    """Do two weights (Dynkin labels) differ by an element of the root lattice?"""
    cinv = rs.cartan_inverse
    diff = [a - b for a, b in zip(c1, c2)]
    return all(sum(diff[i] * cinv[i][j] for i in range(rs.rank)).denominator == 1 for j in range(rs.rank))


def dominant_weights_with_norm(rs: RootSystem, norms: Iterable) -> list[tuple[int, ...]]:
    """All dominant integral weights (as Dynkin labels) whose norm lies in ``norms``."""
    norms = {Fraction(x) for x in norms}
    top = max(norms)
    cinv = rs.cartan_inverse
    # omega_i o omega_j >= 0, so c_i^2 (C^-1)_ii <= norm bounds each label
    bounds = []
    for i in range(rs.rank):
        b = 0
        while (b + 1) ** 2 * cinv[i][i] <= top:
            b += 1
        bounds.append(b)
    out = []
    for c in product(*(range(b + 1) for b in bounds)):
        if dynkin_norm(rs, c) in norms:
            out.append(c)
    return out
