"""Curve germs at a point of the plane, over the rationals.

A branch curve B is a polynomial in x, y (its Taylor expansion at p = origin,
cut at a total-degree cap).  The second curve D is smooth and written as a
graph, either x = f(y) or y = g(x) with f(0) = g(0) = 0.  Everything here is
exact: polynomials are dicts ``{(i, j): Fraction}`` for x^i y^j.

The blowup that follows D's point works in the chart that contains D's
tangent direction, divides by the square of the exceptional coordinate (so the
exceptional curve stays in B_1' when B has a triple point) and then moves the
new point q_1 of D to the origin.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterator, Mapping

from wahlkit._linalg import rank_int

__all__ = [
    "DEFAULT_CAP",
    "Inconclusive",
    "LocalCurve",
    "Graph",
    "normal_form",
    "mult",
    "blowup_branch",
    "blowup_following",
    "separation",
    "quotient_length",
    "oracle_mult",
    "ConfigRecord",
    "Impossible",
    "classify_config",
    "find_config",
    "FIGURES",
    "figure_label",
    "enumerate_configs",
    "enumeration_graphs",
    "FIGURE_INFO",
    "case_one",
    "even_case_families",
]

DEFAULT_CAP = 24
INF = math.inf


class Inconclusive(ValueError):
    """The degree cap was too small to decide the answer."""


Poly = dict  # {(i, j): Fraction}


def _clean(terms: Mapping) -> dict:
    return {m: Fraction(c) for m, c in terms.items() if c != 0}


def _mul(p: Poly, q: Poly, cap: int | None = None) -> Poly:
    out: dict = {}
    for (i, j), a in p.items():
        for (k, l), b in q.items():
            if cap is not None and i + j + k + l > cap:
                continue
            key = (i + k, j + l)
            out[key] = out.get(key, 0) + a * b
    return _clean(out)


def _fmt_mono(i: int, j: int) -> str:
    parts = []
    if i:
        parts.append("x" if i == 1 else f"x^{i}")
    if j:
        parts.append("y" if j == 1 else f"y^{j}")
    return "*".join(parts)


@dataclass(frozen=True)
class LocalCurve:
    """A germ given by its Taylor polynomial, cut at ``degree_cap``.

    ``truncated`` records whether terms above the cap were actually dropped at
    some point; if not, the polynomial is the germ itself.
    """

    terms: tuple = ()
    degree_cap: int = DEFAULT_CAP
    truncated: bool = False

    @classmethod
    def from_terms(cls, terms: Mapping, degree_cap: int = DEFAULT_CAP, truncated: bool = False) -> "LocalCurve":
        clean = _clean(terms)
        kept = {m: c for m, c in clean.items() if m[0] + m[1] <= degree_cap}
        dropped = len(kept) < len(clean)
        return cls(tuple(sorted(kept.items())), degree_cap, truncated or dropped)

    @property
    def coeffs(self) -> dict:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def order(self) -> float:
        """Lowest total degree of a term; infinity for the zero polynomial.

        A truncated zero polynomial only certifies order > cap.
        """
        if not self.terms:
            if self.truncated:
                raise Inconclusive(f"all terms up to degree {self.degree_cap} vanish")
            return INF
        return min(i + j for (i, j), _ in self.terms)

    def degree(self) -> int:
        return max((i + j for (i, j), _ in self.terms), default=0)

    def initial_form(self) -> dict:
        o = self.order()
        return {m: c for m, c in self.terms if m[0] + m[1] == o}

    def is_singular(self) -> bool:
        """Order >= 2 at the origin (a curve through the origin that is not smooth there)."""
        return self.order() >= 2

    def __mul__(self, other: "LocalCurve") -> "LocalCurve":
        cap = min(self.degree_cap, other.degree_cap)
        return LocalCurve.from_terms(_mul(self.coeffs, other.coeffs, cap), cap, self.truncated or other.truncated)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = ""
        for (i, j), c in sorted(self.terms, key=lambda t: (t[0][0] + t[0][1], -t[0][0])):
            mono = _fmt_mono(i, j)
            sign = "-" if c < 0 else "+"
            a = abs(c)
            body = mono if (a == 1 and mono) else (f"{a}*{mono}" if mono else str(a))
            out += f" {sign} {body}" if out else ("-" + body if c < 0 else body)
        return out

    def to_json(self) -> dict:
        return {
            "terms": [[i, j, str(c)] for (i, j), c in self.terms],
            "degree_cap": self.degree_cap,
            "truncated": self.truncated,
        }


def normal_form(family: str, n: int, degree_cap: int = DEFAULT_CAP, variant: str = "plus") -> LocalCurve:
    """The standard local equation of an ADE singularity.

    ``variant="minus"`` gives y(x^2 - y^(n-2)) for D_n, whose branches are
    defined over Q when n is even.
    """
    family = family.upper()
    one = Fraction(1)
    if family == "A":
        if n < 1:
            raise ValueError(f"A_n needs n >= 1, got {n}")
        t = {(2, 0): one, (0, n + 1): -one}
    elif family == "D":
        if n < 4:
            raise ValueError(f"D_n needs n >= 4, got {n}")
        if variant not in ("plus", "minus"):
            raise ValueError(f"unknown D_n variant {variant!r}")
        t = {(2, 1): one, (0, n - 1): one if variant == "plus" else -one}
    elif family == "E":
        forms = {
            6: {(3, 0): one, (0, 4): -one},
            7: {(3, 0): one, (1, 3): -one},
            8: {(3, 0): one, (0, 5): one},
        }
        if n not in forms:
            raise ValueError(f"E_n needs n in 6..8, got {n}")
        t = forms[n]
    else:
        raise ValueError(f"unknown family {family!r}")
    deg = max(i + j for i, j in t)
    if degree_cap < deg:
        raise ValueError(f"degree_cap {degree_cap} is below the degree {deg} of the normal form")
    return LocalCurve.from_terms(t, degree_cap)


@dataclass(frozen=True)
class Graph:
    """A smooth germ through the origin: x = f(y) if ``solved_for == "x"``,
    otherwise y = g(x).  ``coeffs[i]`` is the coefficient of t^(i+1).

    If ``precision`` is set, f is only known modulo t^(precision+1).
    """

    solved_for: str
    coeffs: tuple = ()
    precision: int | None = None

    def __post_init__(self):
        if self.solved_for not in ("x", "y"):
            raise ValueError("solved_for must be 'x' or 'y'")
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    @classmethod
    def x_of_y(cls, *coeffs, precision: int | None = None) -> "Graph":
        return cls("x", coeffs, precision)

    @classmethod
    def y_of_x(cls, *coeffs, precision: int | None = None) -> "Graph":
        return cls("y", coeffs, precision)

    @classmethod
    def monomial(cls, solved_for: str, k: int, a=1, *tail) -> "Graph":
        """``a*t^k + tail[0]*t^(k+1) + ...``"""
        if k < 1:
            raise ValueError("k must be at least 1")
        return cls(solved_for, (0,) * (k - 1) + (a,) + tuple(tail))

    @classmethod
    def parse(cls, text: str) -> "Graph":
        """Parse ``"x=y^2+3*y^3"`` or ``"y = -1/2 x^2"``, or a preset:
        ``transversal`` or ``tangent:k`` (x = y^k)."""
        s = text.replace(" ", "")
        if s == "transversal":
            return cls.x_of_y(2)
        m = re.fullmatch(r"tangent:(\d+)", s)
        if m:
            return cls.monomial("x", int(m.group(1)))
        m = re.fullmatch(r"([xy])=(.+)", s)
        if not m:
            raise ValueError(f"cannot parse graph curve {text!r}")
        lhs, rhs = m.groups()
        var = "y" if lhs == "x" else "x"
        coeffs: dict[int, Fraction] = {}
        for sign, body in re.findall(r"([+-]?)([^+-]+)", rhs):
            if re.fullmatch(r"0+(?:/\d+)?", body):
                continue
            t = re.fullmatch(rf"((?:\d+(?:/\d+)?)?)\*?{var}(?:\^(\d+))?", body)
            if not t:
                raise ValueError(f"cannot parse term {body!r} in {text!r} (only powers of {var} allowed)")
            c = Fraction(t.group(1)) if t.group(1) else Fraction(1)
            e = int(t.group(2) or 1)
            coeffs[e] = coeffs.get(e, 0) + (-c if sign == "-" else c)
        top = max(coeffs, default=1)
        return cls(lhs, tuple(coeffs.get(i, 0) for i in range(1, top + 1)))

    @property
    def k(self) -> float:
        """Minimal degree of f (infinity if f = 0)."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i + 1
        return INF

    @property
    def slope(self) -> Fraction:
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def direction(self) -> tuple[Fraction, Fraction]:
        return (self.slope, Fraction(1)) if self.solved_for == "x" else (Fraction(1), self.slope)

    def equation(self, degree_cap: int = DEFAULT_CAP) -> LocalCurve:
        """x - f(y) or y - g(x) as a curve."""
        lhs = (1, 0) if self.solved_for == "x" else (0, 1)
        t = {lhs: Fraction(1)}
        for i, c in enumerate(self.coeffs):
            m = (0, i + 1) if self.solved_for == "x" else (i + 1, 0)
            t[m] = t.get(m, 0) - c
        return LocalCurve.from_terms(t, degree_cap)

    def after_blowup(self) -> "Graph":
        """The strict transform, recentred: f(t)/t - f'(0)."""
        prec = None if self.precision is None else self.precision - 1
        return Graph(self.solved_for, self.coeffs[1:], prec)

    def __str__(self) -> str:
        var = "y" if self.solved_for == "x" else "x"
        body = LocalCurve.from_terms({(0, i + 1): c for i, c in enumerate(self.coeffs)})
        return f"{self.solved_for} = " + str(body).replace("y", var)

    def to_json(self) -> dict:
        return {"solved_for": self.solved_for, "coeffs": [str(c) for c in self.coeffs], "precision": self.precision}


def _restrict(B: LocalCurve, D: Graph) -> tuple[dict[int, Fraction], int]:
    """B restricted to D as a power series in the parameter t, and the order up
    to which that series is certified."""
    f = {i + 1: c for i, c in enumerate(D.coeffs) if c}
    bound = B.degree_cap + 1 if B.truncated else 10**9
    if D.precision is not None:
        # an unknown change of f in degree > precision moves the result only in degree > precision
        bound = min(bound, D.precision + 1)
    limit = min(bound, 10**9)
    powers = [{0: Fraction(1)}]
    out: dict[int, Fraction] = {}
    for (i, j), c in B.terms:
        # D = {x = f(t), y = t}: x^i y^j -> f^i t^j ; for y = g(x) swap roles
        a, b = (i, j) if D.solved_for == "x" else (j, i)
        while len(powers) <= a:
            nxt: dict[int, Fraction] = {}
            for e1, c1 in powers[-1].items():
                for e2, c2 in f.items():
                    if e1 + e2 < limit:
                        nxt[e1 + e2] = nxt.get(e1 + e2, 0) + c1 * c2
            powers.append(nxt)
        for e, v in powers[a].items():
            if e + b < limit:
                out[e + b] = out.get(e + b, 0) + c * v
    return {e: v for e, v in out.items() if v}, bound


def mult(B: LocalCurve, D: Graph) -> float:
    """Local intersection number (B . D) at the origin.

    Returns ``math.inf`` when D is a component of B.  Raises
    :class:`Inconclusive` when the truncation cannot decide.
    """
    series, bound = _restrict(B, D)
    if series:
        o = min(series)
        if o < bound:
            return o
    if bound >= 10**9:
        return INF
    raise Inconclusive(f"B restricted to D vanishes up to order {bound - 1}; raise the degree cap or precision")


def blowup_branch(B: LocalCurve, chart: str = "y", drop: int = 2, shift: Fraction | int = 0) -> LocalCurve:
    """sigma*(B) - drop*E in one chart, with the new point moved to the origin.

    ``chart="y"`` substitutes (x, y) -> (x*y, y) and divides by y^drop;
    ``chart="x"`` substitutes (x, y) -> (x, x*y) and divides by x^drop.  Then
    the fibre coordinate is shifted by ``shift`` (the point of E being followed).
    """
    if chart not in ("x", "y"):
        raise ValueError("chart must be 'x' or 'y'")
    o = B.order()
    if o < drop:
        raise ValueError(f"B has order {o} at the origin, cannot subtract {drop}E")
    out: dict = {}
    for (i, j), c in B.terms:
        if chart == "y":
            key = (i, i + j - drop)
        else:
            key = (i + j - drop, j)
        out[key] = out.get(key, 0) + c
    shift = Fraction(shift)
    if shift:
        shifted: dict = {}
        for (i, j), c in out.items():
            # y-chart: the fibre coordinate is x; x-chart: it is y
            e = i if chart == "y" else j
            for r in range(e + 1):
                coef = c * math.comb(e, r) * shift ** (e - r)
                key = (r, j) if chart == "y" else (i, r)
                shifted[key] = shifted.get(key, 0) + coef
        out = shifted
    # substitution raises total degree; track the cap honestly
    return LocalCurve.from_terms(out, B.degree_cap, B.truncated)


def blowup_following(B: LocalCurve, D: Graph, drop: int = 2) -> tuple[LocalCurve, Graph]:
    """Blow up the origin and follow D to the point q_1 where its strict
    transform meets the exceptional curve."""
    chart = "y" if D.solved_for == "x" else "x"
    return blowup_branch(B, chart, drop, D.slope), D.after_blowup()


def separation(B: LocalCurve, D: Graph, max_steps: int = 64) -> int:
    """Number of blowups, following D, until B' is smooth at or misses the followed point.

    D may be a component of B: then B' always contains the followed point and
    the count ends once the rest of B has been pulled away from D.
    """
    cur, d = B, D
    for l in range(max_steps + 1):
        if cur.order() <= 1:
            return l
        cur, d = blowup_following(cur, d)
    raise Inconclusive(f"still singular after {max_steps} blowups")


# ---------------------------------------------------------------------------
# independent check: length of O/(B, D) by linear algebra on truncations


def _monomials(N: int) -> list[tuple[int, int]]:
    return [(i, d - i) for d in range(N) for i in range(d, -1, -1)]


def quotient_length(B: LocalCurve, D: Graph, N: int) -> int:
    """dim C[x,y]/(B, D, m^N), counted as monomials minus the rank of the
    truncated multiples of B and of D's equation."""
    mons = _monomials(N)
    col = {m: c for c, m in enumerate(mons)}
    gens = []
    for P in (B, D.equation(max(N, 1))):
        den = math.lcm(*(c.denominator for _, c in P.terms)) if P.terms else 1
        gens.append({m: int(c * den) for m, c in P.terms})
    rows = []
    for g in gens:
        for a, b in mons:
            row = [0] * len(mons)
            hit = False
            for (i, j), c in g.items():
                key = (i + a, j + b)
                if key in col:
                    row[col[key]] = c
                    hit = True
            if hit:
                rows.append(row)
    return len(mons) - rank_int(rows)


def oracle_mult(B: LocalCurve, D: Graph, n_max: int = 14) -> float:
    """(B . D) from quotient lengths: the length at level N is min(mult, N)."""
    for N in range(1, n_max + 1):
        v = quotient_length(B, D, N)
        if v < N:
            return v
    return INF


# ---------------------------------------------------------------------------
# configurations and the figure catalogue


@dataclass(frozen=True)
class Impossible:
    family: str
    n: int
    mult: int
    reason: str

    def to_json(self) -> dict:
        return {"sing": f"{self.family}{self.n}", "mult": self.mult, "impossible": True, "reason": self.reason}


@dataclass(frozen=True)
class ConfigRecord:
    family: str
    n: int
    graph: Graph
    transversal: bool
    mult: float
    separation: int | None
    post_blowup_singular: bool
    figure: str | None = None
    variant: str = "plus"

    def __post_init__(self):
        if self.mult < 1:
            raise ValueError("a configuration needs p on D")

    @property
    def sing(self) -> str:
        return f"{self.family}{self.n}"

    @property
    def k(self):
        return "transversal" if self.transversal else self.graph.k

    def to_json(self) -> dict:
        return {
            "sing": self.sing,
            "k": self.k,
            "mult": self.mult if self.mult != INF else "inf",
            "separation": self.separation,
            "post_blowup_singular": self.post_blowup_singular,
            "figure": self.figure,
            "graph": str(self.graph),
        }


def _default_variant(family: str, n: int) -> str:
    # even D_n: use the split form so every branch is defined over Q
    return "minus" if family == "D" and n % 2 == 0 else "plus"


def _is_transversal(B: LocalCurve, D: Graph) -> bool:
    u, v = D.direction()
    return sum(c * u**i * v**j for (i, j), c in B.initial_form().items()) != 0


def classify_config(family: str, n: int, tangency: Graph | str, variant: str | None = None) -> ConfigRecord:
    """Intersection data of the normal form of ``family``_n against D."""
    family = family.upper()
    if isinstance(tangency, str):
        tangency = Graph.parse(tangency)
    variant = variant or _default_variant(family, n)
    B = normal_form(family, n, variant=variant)
    m = mult(B, tangency)
    if m == INF:
        sep = None
        post = True
    else:
        sep = separation(B, tangency)
        B1, _ = blowup_following(B, tangency)
        post = B1.is_singular()
    rec = ConfigRecord(family, n, tangency, _is_transversal(B, tangency), m, sep, post, None, variant)
    return ConfigRecord(
        rec.family, rec.n, rec.graph, rec.transversal, rec.mult, rec.separation, rec.post_blowup_singular,
        figure_label(rec), variant,
    )


# The enumeration family: x = a t^k + b t^(k+1) + c t^(k+2) or y = (same in x).
A_VALUES = (1, -1, 2)
BC_VALUES = ((0, 0), (1, 0), (0, 1), (1, 1))


def _params(g: Graph) -> tuple[str, int, Fraction, Fraction, Fraction]:
    k = g.k
    tail = list(g.coeffs[k - 1:]) + [Fraction(0)] * 3
    return g.solved_for, k, tail[0], tail[1], tail[2]


def _fig_predicates():
    """Each figure entry: (label, mult, separation, predicate on (family, n, kind, k, a, b, c)).

    Coordinates are those of :func:`normal_form` (split variant for even D_n):
    the tangent cone of A_n (n >= 2), D_n's singular branch, E_6, E_7 and E_8
    is the line x = 0, D_n's smooth branch is y = 0, and the branches of A_1
    and of the three lines of D_4 are x = +-y (and y = 0).
    """
    def cone(kind, k):  # D tangent to x = 0
        return kind == "x" and k >= 2

    def line_branch(kind, k, a):  # D tangent to x = +-y
        return k == 1 and a in (1, -1)

    def transversal(fam, n, kind, k, a):
        if fam == "A" and n == 1:
            return not line_branch(kind, k, a)
        if fam == "D":
            if kind == "y" and k >= 2:
                return False
            if n == 4:
                return not line_branch(kind, k, a)
        return not cone(kind, k)

    def contact_with_line(kind, k, a, b, c):
        # contact order of D with the branch x = a*y when a = +-1
        if not line_branch(kind, k, a):
            return 1
        return 2 if b else (3 if c else INF)

    E = [
        # ---- distinct points: mult 2 or 3, separation 1
        ("distinct_points(a)", 2, 1, lambda f, n, kd, k, a, b, c: f == "A" and n % 2 == 1 and transversal(f, n, kd, k, a)),
        ("distinct_points(b)", 2, 1, lambda f, n, kd, k, a, b, c: f == "A" and n % 2 == 0 and transversal(f, n, kd, k, a)),
        ("distinct_points(c)", 3, 1, lambda f, n, kd, k, a, b, c: f == "A" and n == 1 and contact_with_line(kd, k, a, b, c) == 2),
        ("distinct_points(d)", 3, 1, lambda f, n, kd, k, a, b, c: f == "A" and n == 2 and cone(kd, k)),
        ("distinct_points(e)", 3, 1, lambda f, n, kd, k, a, b, c: f == "D" and n % 2 == 1 and transversal(f, n, kd, k, a)),
        ("distinct_points(f)", 3, 1, lambda f, n, kd, k, a, b, c: f == "D" and n % 2 == 0 and transversal(f, n, kd, k, a)),
        ("distinct_points(g)", 3, 1, lambda f, n, kd, k, a, b, c: f == "E" and n == 6 and transversal(f, n, kd, k, a)),
        ("distinct_points(h)", 3, 1, lambda f, n, kd, k, a, b, c: f == "E" and n == 7 and transversal(f, n, kd, k, a)),
        ("distinct_points(i)", 3, 1, lambda f, n, kd, k, a, b, c: f == "E" and n == 8 and transversal(f, n, kd, k, a)),
        # ---- same points, mult 4, separation 2
        ("same_points_4(a)", 4, 2, lambda f, n, kd, k, a, b, c: f == "A" and n == 3 and cone(kd, k) and k > 2),
        ("same_points_4(b)", 4, 2, lambda f, n, kd, k, a, b, c: f == "A" and n == 3 and cone(kd, k) and k == 2 and a not in (1, -1)),
        ("same_points_4(c)", 4, 2, lambda f, n, kd, k, a, b, c: f == "A" and n % 2 == 1 and n > 3 and cone(kd, k) and k == 2),
        ("same_points_4(d)", 4, 2, lambda f, n, kd, k, a, b, c: f == "A" and n % 2 == 0 and n > 2 and cone(kd, k) and k == 2),
        ("same_points_4(e)", 4, 2, lambda f, n, kd, k, a, b, c: f == "D" and n == 5 and cone(kd, k)),
        ("same_points_4(f)", 4, 2, lambda f, n, kd, k, a, b, c: f == "D" and n % 2 == 1 and kd == "y" and k == 2),
        ("same_points_4(g)", 4, 2, lambda f, n, kd, k, a, b, c: f == "D" and n % 2 == 0 and (
            (kd == "y" and k == 2) or (n == 4 and contact_with_line(kd, k, a, b, c) == 2))),
        ("same_points_4(h)", 4, 2, lambda f, n, kd, k, a, b, c: f == "E" and n == 6 and cone(kd, k)),
        # ---- same points, mult 5, separation 2
        ("same_points_5(a)", 5, 2, lambda f, n, kd, k, a, b, c: f == "A" and n == 3 and cone(kd, k) and k == 2 and a in (1, -1) and b != 0),
        ("same_points_5(b)", 5, 2, lambda f, n, kd, k, a, b, c: f == "A" and n == 4 and cone(kd, k) and k >= 3),
        ("same_points_5(c)", 5, 2, lambda f, n, kd, k, a, b, c: f == "D" and n % 2 == 1 and n >= 7 and cone(kd, k) and k == 2),
        ("same_points_5(d)", 5, 2, lambda f, n, kd, k, a, b, c: f == "D" and n % 2 == 1 and kd == "y" and k == 3),
        ("same_points_5(e)", 5, 2, lambda f, n, kd, k, a, b, c: f == "D" and n % 2 == 0 and n >= 6 and cone(kd, k) and (
            (k == 2 and not (n == 6 and a in (1, -1))) or (n == 6 and k >= 3))),
        ("same_points_5(f)", 5, 2, lambda f, n, kd, k, a, b, c: f == "D" and n % 2 == 0 and (
            (kd == "y" and k == 3) or (n == 4 and contact_with_line(kd, k, a, b, c) == 3))),
        ("same_points_5(g)", 5, 2, lambda f, n, kd, k, a, b, c: f == "E" and n == 7 and cone(kd, k) and k == 2),
        ("same_points_5(h)", 5, 2, lambda f, n, kd, k, a, b, c: f == "E" and n == 8 and cone(kd, k)),
    ]
    return E


FIGURES = _fig_predicates()
FIGURE_INFO = {label: (m, l) for label, m, l, _ in FIGURES}


def figure_label(rec: ConfigRecord) -> str | None:
    """The figure entry a configuration belongs to, if any."""
    if rec.variant != _default_variant(rec.family, rec.n) or rec.graph.k == INF:
        return None
    kd, k, a, b, c = _params(rec.graph)
    hits = [label for label, _, _, pred in FIGURES if pred(rec.family, rec.n, kd, k, a, b, c)]
    assert len(hits) <= 1, hits
    return hits[0] if hits else None


def _forms(n_max: int) -> Iterator[tuple[str, int]]:
    for n in range(1, n_max + 1):
        yield "A", n
    for n in range(4, n_max + 1):
        yield "D", n
    for n in (6, 7, 8):
        yield "E", n


def enumeration_graphs(k_max: int = 5) -> Iterator[Graph]:
    for kind, k, a, (b, c) in product(("x", "y"), range(1, k_max + 1), A_VALUES, BC_VALUES):
        yield Graph.monomial(kind, k, a, b, c)


def enumerate_configs(n_max: int = 10, k_max: int = 5) -> Iterator[ConfigRecord]:
    """Every normal form of rank <= n_max against every enumeration graph."""
    for family, n in _forms(n_max):
        for g in enumeration_graphs(k_max):
            yield classify_config(family, n, g)


def case_one(rec: ConfigRecord) -> bool:
    """The odd-case filter: mult 2 or 3 with separation 1, or mult 4 or 5 with separation 2."""
    if rec.mult in (2, 3):
        return rec.separation == 1
    if rec.mult in (4, 5):
        return rec.separation == 2 and rec.post_blowup_singular
    return False


def _exact_orders(B: LocalCurve, kind: str, target: int) -> tuple[dict[int, int], list[int]]:
    """Newton-polygon values of (B . D) for D of minimal degree k.

    Along x = f(y) with f of order k, x^i y^j restricts to order i*k + j (for
    y = g(x), to i + j*k).  When a single monomial attains the minimum, that
    minimum is the intersection number whatever the higher terms of f are.
    Returns {k: exact value} and the list of k where several monomials tie.
    The last key listed also covers every larger k.
    """
    exact: dict[int, int] = {}
    ties: list[int] = []
    # for k > target every monomial whose order grows with k is past the target,
    # so k = target + 1 stands for all larger k
    for k in range(1, target + 2):
        vals = sorted((i * k + j) if kind == "x" else (i + j * k) for (i, j), _ in B.terms)
        if vals[0] > target:
            break
        if len(vals) > 1 and vals[0] == vals[1]:
            ties.append(k)
        else:
            exact[k] = vals[0]
    return exact, ties


def find_config(family: str, n: int, target_mult: int, k_max: int | None = None) -> ConfigRecord | Impossible:
    """A configuration with the requested (B . D)_p, or an explanation why there is none."""
    family = family.upper()
    k_max = k_max or target_mult
    for g in enumeration_graphs(k_max):
        rec = classify_config(family, n, g)
        if rec.mult == target_mult:
            return rec
    B = normal_form(family, n, variant=_default_variant(family, n))
    parts = []
    conclusive = True
    for kind in ("x", "y"):
        exact, ties = _exact_orders(B, kind, target_mult)
        desc = ", ".join(f"k={k}: {v}" for k, v in exact.items())
        parts.append(f"{kind} = {'f(y)' if kind == 'x' else 'g(x)'}: {desc or 'none'}" + ("" if len(exact) > target_mult else f", larger k: > {target_mult}"))
        if ties:
            conclusive = False
            parts[-1] += f", undecided for k in {ties}"
    reason = "(B.D)_p along D of minimal degree k is " + "; ".join(parts)
    if not conclusive:
        reason += "; not found by search, but the argument is not conclusive"
    return Impossible(family, n, target_mult, reason)


def even_case_families(n_max: int = 10, k_max: int = 5) -> dict[str, list[int]]:
    """Singularity types admitting an even (B . D)_p >= 2, with the even values seen.

    Over a point with even contact the two branches of the preimage of D are
    w = +-t^(m/2), so both are smooth; only the parity of (B.D)_p matters.
    """
    out: dict[str, set[int]] = {}
    for rec in enumerate_configs(n_max, k_max):
        if rec.mult != INF and rec.mult % 2 == 0:
            key = rec.family if rec.family in ("A", "D") else rec.sing
            out.setdefault(key, set()).add(int(rec.mult))
    return {k: sorted(v) for k, v in sorted(out.items())}
