"""Dimension counts for loci of triples (Z, B, D).

Z is the smooth quadric F0 or the quadric cone (handled through F2), D is in
|Delta| or |Gamma|, and B is in |6 Delta| (or B = D + B' with B' in |5 Delta|).
A locus is specified by the points of B n D with their local intersection
numbers and the singularity B is asked to have there.  Its dimension is

    dim|D| + k + dim|B| - sum(mult) - sum(codim) - dim Aut(Z)

with k the number of points.  Every summand is kept in the report.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterable, Sequence

from wahlkit.pic import anticanonical_half, h0_hirzebruch, hirzebruch, intersect, riemann_roch_chi

__all__ = [
    "PointSpec",
    "LocusSpec",
    "DimReport",
    "SING_CODIMS",
    "MAX_TAYLOR_N",
    "linear_system_dim",
    "aut_dim",
    "locus_dimension",
    "NAMED_TYPES",
    "named_type",
    "constraint_table",
    "POINT_MENU",
    "enumerate_specs",
    "D_IN_B",
]

BASES = {"F0": 0, "cone": 2, "F2": 2}
MAX_TAYLOR_N = 5

# (singularity, mult) -> (codim, highest Taylor degree constrained, verified)
SING_CODIMS: dict[tuple[str, int], tuple[int, int, bool]] = {
    # linear term vanishes, quadratic part nondegenerate
    ("node", 2): (1, 2, True),
    # linear term vanishes, quadratic part degenerate, cubic term nonzero
    ("A2", 2): (2, 3, True),
    # linear term and one quadratic coefficient vanish
    ("node", 3): (2, 2, True),
}


def _base_d(base: str) -> int:
    try:
        return BASES[base]
    except KeyError:
        raise ValueError(f"unknown base {base!r}; use F0 or cone") from None


def _class_coords(d: int, cls: str) -> tuple[int, int]:
    """Coordinates (a, b) of a D0 + b G for the supported classes."""
    F = hirzebruch(d)
    delta = anticanonical_half(F).coeffs
    table = {"Gamma": (0, 1)}
    for m in range(1, 7):
        table[("" if m == 1 else str(m)) + "Delta"] = (m * delta[0], m * delta[1])
    if cls not in table:
        raise ValueError(f"unsupported class {cls!r}; use Delta, Gamma, 5Delta or 6Delta")
    return table[cls]


def linear_system_dim(base: str, cls: str) -> int:
    """dim |cls| = h^0 - 1 on the base."""
    d = _base_d(base)
    a, b = _class_coords(d, cls)
    h0 = h0_hirzebruch(d, a, b)
    # these classes have no higher cohomology, so h^0 is the Riemann-Roch value
    F = hirzebruch(d)
    assert h0 == riemann_roch_chi(F, F.divisor(D0=a, G=b))
    return h0 - 1


def aut_dim(base: str) -> int:
    d = _base_d(base)
    return 6 if d == 0 else 7


def _intersection(base: str, c1: str, c2: str) -> int:
    d = _base_d(base)
    F = hirzebruch(d)
    a1, b1 = _class_coords(d, c1)
    a2, b2 = _class_coords(d, c2)
    return int(intersect(F, F.divisor(D0=a1, G=b1), F.divisor(D0=a2, G=b2)))


@dataclass(frozen=True)
class PointSpec:
    """One point of B n D.

    ``sing`` is None where B is smooth.  For a singular point the codimension
    and the Taylor degree it constrains come from :data:`SING_CODIMS` unless
    given explicitly (then the point is marked unverified).
    """

    mult: int
    sing: str | None = None
    sing_codim: int | None = None
    taylor_degree: int | None = None

    def __post_init__(self):
        if self.mult < 1:
            raise ValueError("a point of B n D has mult >= 1")
        if self.sing is None:
            if self.sing_codim not in (None, 0):
                raise ValueError("a smooth point has codimension 0")
            object.__setattr__(self, "sing_codim", 0)
            object.__setattr__(self, "taylor_degree", 0)
            return
        known = SING_CODIMS.get((self.sing, self.mult))
        if known is not None:
            codim, tdeg, _ = known
            if self.sing_codim is not None and self.sing_codim != codim:
                raise ValueError(
                    f"{self.sing} at a point of multiplicity {self.mult} has codimension {codim}, not {self.sing_codim}"
                )
            object.__setattr__(self, "sing_codim", codim)
            if self.taylor_degree is None:
                object.__setattr__(self, "taylor_degree", tdeg)
        else:
            if self.sing_codim is None or self.taylor_degree is None:
                raise ValueError(
                    f"no built-in codimension for {self.sing} at multiplicity {self.mult}; "
                    "give sing_codim and taylor_degree"
                )
            if self.sing_codim < 0:
                raise ValueError("sing_codim must be >= 0")

    @property
    def verified(self) -> bool:
        return self.sing is None or (self.sing, self.mult) in SING_CODIMS

    def label(self) -> str:
        return f"{self.sing or 'smooth'}@{self.mult}"


@dataclass(frozen=True)
class LocusSpec:
    base: str
    d_class: str
    points: tuple[PointSpec, ...]
    d_in_b: bool = False

    def __post_init__(self):
        _base_d(self.base)
        if self.d_class not in ("Delta", "Gamma"):
            raise ValueError("d_class must be Delta or Gamma")
        object.__setattr__(self, "points", tuple(self.points))
        if self.d_in_b and self.d_class != "Delta":
            raise ValueError("D inside B only occurs for D ~ Delta")

    @property
    def branch_class(self) -> str:
        return "5Delta" if self.d_in_b else "6Delta"

    def total_intersection(self) -> int:
        return _intersection(self.base, self.d_class, self.branch_class)

    def signature(self) -> tuple:
        return (self.base, self.d_class, self.d_in_b, tuple(sorted(p.label() for p in self.points)))


@dataclass(frozen=True)
class DimReport:
    terms: dict
    total: int
    type_label: str | None = None
    unverified: tuple = ()
    sing_parts: tuple = ()  # the nonzero per-point codimensions making up terms["sing"]

    def __post_init__(self):
        assert self.total == sum(self.terms.values())
        assert -sum(self.sing_parts) == self.terms["sing"]

    def formula(self) -> str:
        """The sum written out, one codimension per singular point, zeros omitted."""
        t = self.terms
        vals = [t["dim_D"], t["k"], t["dim_B"], t["mult"], *(-c for c in self.sing_parts), t["aut"]]
        out = str(vals[0])
        for v in vals[1:]:
            out += f"{v}" if v < 0 else f"+{v}"
        return f"{out}={self.total}"

    def to_json(self) -> dict:
        out = {"terms": dict(self.terms), "total": self.total, "type_label": self.type_label}
        if self.unverified:
            out["unverified"] = list(self.unverified)
        return out


def locus_dimension(spec: LocusSpec, type_label: str | None = None) -> DimReport:
    total_bd = spec.total_intersection()
    msum = sum(p.mult for p in spec.points)
    if msum > total_bd:
        raise ValueError(f"the points have total multiplicity {msum} > (B.D) = {total_bd}")
    for p in spec.points:
        n_needed = p.taylor_degree + 1
        if n_needed > MAX_TAYLOR_N:
            raise ValueError(
                f"{p.label()} constrains the Taylor expansion to degree {p.taylor_degree}; "
                f"independence of conditions is only available up to n = {MAX_TAYLOR_N}"
            )
    terms = {
        "dim_D": linear_system_dim(spec.base, spec.d_class),
        "k": len(spec.points),
        "dim_B": linear_system_dim(spec.base, spec.branch_class),
        "mult": -msum,
        "sing": -sum(p.sing_codim for p in spec.points),
        "aut": -aut_dim(spec.base),
    }
    unverified = tuple(p.label() for p in spec.points if not p.verified)
    parts = tuple(p.sing_codim for p in spec.points if p.sing_codim)
    return DimReport(terms, sum(terms.values()), type_label or named_type(spec), unverified, parts)


def _pts(*items) -> tuple[PointSpec, ...]:
    out = []
    for it in items:
        out.append(it if isinstance(it, PointSpec) else PointSpec(it))
    return tuple(out)


# the A_3 codimension is not derived in the counting argument; it is the value
# that makes the stated 38 come out, and stays marked unverified
A3_AT_4 = PointSpec(4, "A3", sing_codim=2, taylor_degree=4)

NAMED_TYPES: dict[str, LocusSpec] = {
    "1": LocusSpec("F0", "Delta", _pts(2, 2, 2, 2, 2, 2)),
    "1'": LocusSpec("F0", "Delta", _pts(PointSpec(2, "node"), 2, 2, 2, 2, 2)),
    "1''": LocusSpec("cone", "Delta", _pts(2, 2, 2, 2, 2, 2)),
    "1'''": LocusSpec("F0", "Delta", _pts(4, 2, 2, 2, 2)),
    "2a": LocusSpec("F0", "Gamma", _pts(PointSpec(2, "node"), PointSpec(2, "node"), 1, 1)),
    "2a'": LocusSpec("F0", "Gamma", _pts(A3_AT_4, 1, 1)),
    "2a''": LocusSpec("F0", "Gamma", _pts(PointSpec(2, "node"), PointSpec(2, "A2"), 1, 1)),
    "2b": LocusSpec("cone", "Gamma", _pts(PointSpec(2, "node"), PointSpec(2, "node"), 1, 1)),
}
D_IN_B = LocusSpec("F0", "Delta", _pts(*([1] * 10)), d_in_b=True)

_BY_SIGNATURE = {spec.signature(): label for label, spec in NAMED_TYPES.items()}
_BY_SIGNATURE[D_IN_B.signature()] = "DsubB"


def named_type(spec: LocusSpec) -> str | None:
    return _BY_SIGNATURE.get(spec.signature())


def constraint_table() -> dict[tuple[str, str], dict]:
    """For each (base, class): the constant c with dim = c + k - m (m = sum of
    codimensions), and the m giving dimension 39 and 38 as offsets k - j."""
    out = {}
    for base in ("F0", "cone"):
        for cls in ("Delta", "Gamma"):
            c = (
                linear_system_dim(base, cls)
                + linear_system_dim(base, "6Delta")
                - _intersection(base, cls, "6Delta")
                - aut_dim(base)
            )
            out[(base, cls)] = {"constant": c, "m_for_39": f"k-{39 - c}", "m_for_38": f"k-{38 - c}"}
    return out


# local pictures available at a point of B n D, as (mult, sing)
POINT_MENU: tuple[PointSpec, ...] = (
    PointSpec(1),
    PointSpec(2),
    PointSpec(4),
    PointSpec(6),
    PointSpec(2, "node"),
    PointSpec(2, "A2"),
    PointSpec(3, "node"),
    A3_AT_4,
)


def _multisets(menu: Sequence[PointSpec], total: int) -> Iterable[tuple[PointSpec, ...]]:
    for k in range(1, total + 1):
        for combo in combinations_with_replacement(range(len(menu)), k):
            pts = tuple(menu[i] for i in combo)
            if sum(p.mult for p in pts) == total:
                yield pts


def _admissible(cls: str, pts: Sequence[PointSpec]) -> bool:
    """The intersection patterns allowed for a triple with a unique 1/4(1,1) point."""
    if cls == "Delta":
        return all(p.mult % 2 == 0 for p in pts)
    sing = [p for p in pts if p.sing is not None]
    if any(p.sing is None and p.mult != 1 for p in pts):
        return False
    if not any(p.mult % 2 for p in pts):
        return False
    if len(sing) == 2:
        return all(p.mult in (2, 3) for p in sing)
    if len(sing) == 1:
        return sing[0].mult in (4, 5)
    return False


def enumerate_specs(min_dim: int = 38, menu: Sequence[PointSpec] = POINT_MENU) -> list[tuple[LocusSpec, DimReport]]:
    """All admissible specs built from ``menu`` whose locus has dimension >= min_dim."""
    out = []
    seen = set()
    for base in ("F0", "cone"):
        for cls in ("Delta", "Gamma"):
            total = _intersection(base, cls, "6Delta")
            for pts in _multisets(menu, total):
                if not _admissible(cls, pts):
                    continue
                spec = LocusSpec(base, cls, pts)
                if spec.signature() in seen:
                    continue
                seen.add(spec.signature())
                rep = locus_dimension(spec)
                if rep.total >= min_dim:
                    out.append((spec, rep))
    return out
