"""Intersection theory on rational surface models.

A :class:`SurfaceLattice` is a Picard lattice given by basis labels, a Gram
matrix and the canonical class.  Blowing up appends an exceptional class E with
E^2 = -1; old basis vectors are identified with their pullbacks, so a class on
the old lattice pulls back by padding its coordinates with zeros.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from wahlkit._linalg import bilinear, solve

__all__ = [
    "SurfaceLattice",
    "DivisorClass",
    "DoubleCoverRule",
    "hirzebruch",
    "projective_plane",
    "blow_up",
    "blow_up_along",
    "pullback",
    "proper_transform",
    "coordinates",
    "intersect",
    "adjunction_genus",
    "riemann_roch_chi",
    "h0_hirzebruch",
    "anticanonical_half",
    "double_cover_pullback",
    "horikawa_case_iii_valid",
]


@dataclass(frozen=True)
class SurfaceLattice:
    labels: tuple[str, ...]
    gram: tuple[tuple[int, ...], ...]
    canonical: tuple[int, ...]
    chi_structure: int = 1
    name: str = ""
    exceptional: tuple[str, ...] = ()

    def __post_init__(self):
        r = len(self.labels)
        if len(set(self.labels)) != r:
            raise ValueError(f"duplicate basis labels in {self.labels}")
        if len(self.gram) != r or any(len(row) != r for row in self.gram):
            raise ValueError("gram matrix shape does not match the basis")
        if any(self.gram[i][j] != self.gram[j][i] for i in range(r) for j in range(r)):
            raise ValueError("gram matrix is not symmetric")
        if len(self.canonical) != r:
            raise ValueError("canonical class has the wrong length")

    @property
    def rank(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"no basis label {label!r} in {self.labels}") from None

    def divisor(self, coeffs: Mapping[str, int] | Sequence[int] | None = None, **kw) -> "DivisorClass":
        """Build a class from a label->coefficient map, a full vector, or keywords."""
        if coeffs is not None and not isinstance(coeffs, Mapping):
            return DivisorClass(self, tuple(coeffs))
        terms = dict(coeffs or {})
        terms.update(kw)
        vec = [0] * self.rank
        for label, c in terms.items():
            vec[self.index(label)] += c
        return DivisorClass(self, tuple(vec))

    def basis_class(self, label: str) -> "DivisorClass":
        return self.divisor({label: 1})

    @property
    def K(self) -> "DivisorClass":
        return DivisorClass(self, self.canonical)

    def zero(self) -> "DivisorClass":
        return DivisorClass(self, (0,) * self.rank)

    def to_json(self) -> dict:
        return {"basis": list(self.labels), "gram": [list(r) for r in self.gram], "K": list(self.canonical)}


@dataclass(frozen=True)
class DivisorClass:
    lattice: SurfaceLattice = field(repr=False)
    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != self.lattice.rank:
            raise ValueError(f"class has {len(self.coeffs)} coordinates, lattice rank is {self.lattice.rank}")

    def _check(self, other: "DivisorClass"):
        if other.lattice != self.lattice:
            raise ValueError("classes live on different lattices")

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        self._check(other)
        return DivisorClass(self.lattice, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return self + (-1) * other

    def __neg__(self) -> "DivisorClass":
        return (-1) * self

    def __rmul__(self, c) -> "DivisorClass":
        return DivisorClass(self.lattice, tuple(c * a for a in self.coeffs))

    def __mul__(self, other: "DivisorClass"):
        """Intersection product."""
        return intersect(self.lattice, self, other)

    def __getitem__(self, label: str):
        return self.coeffs[self.lattice.index(label)]

    def __repr__(self) -> str:
        terms = [f"{c}*{l}" for c, l in zip(self.coeffs, self.lattice.labels) if c]
        return "DivisorClass(" + (" + ".join(terms) or "0") + ")"


def hirzebruch(d: int) -> SurfaceLattice:
    """F_d with basis (D0, G): D0^2 = -d, D0.G = 1, G^2 = 0."""
    if d < 0:
        raise ValueError("d must be >= 0")
    return SurfaceLattice(("D0", "G"), ((-d, 1), (1, 0)), (-2, -(d + 2)), name=f"F{d}")


def projective_plane() -> SurfaceLattice:
    return SurfaceLattice(("H",), ((1,),), (-3,), name="P2")


def blow_up(L: SurfaceLattice, label: str) -> SurfaceLattice:
    """Blow up one point; K goes to the pullback of K plus E."""
    if label in L.labels:
        raise ValueError(f"label {label!r} already used")
    r = L.rank
    gram = tuple(row + (0,) for row in L.gram) + ((0,) * r + (-1,),)
    return SurfaceLattice(
        L.labels + (label,),
        gram,
        L.canonical + (1,),
        L.chi_structure,
        L.name + f"+{label}",
        L.exceptional + (label,),
    )


def pullback(L_new: SurfaceLattice, cls: DivisorClass) -> DivisorClass:
    old = cls.lattice
    if L_new.labels[: old.rank] != old.labels or L_new.gram[: old.rank] != tuple(
        row + (0,) * (L_new.rank - old.rank) for row in old.gram
    ):
        raise ValueError("target lattice is not a blowup of the class's lattice")
    return DivisorClass(L_new, tuple(cls.coeffs) + (0,) * (L_new.rank - old.rank))


def proper_transform(L_new: SurfaceLattice, cls: DivisorClass, multiplicities: Mapping[str, int]) -> DivisorClass:
    """sigma^* cls - sum m_i E_i."""
    out = pullback(L_new, cls)
    for label, m in multiplicities.items():
        if label not in L_new.exceptional or label in cls.lattice.labels:
            raise KeyError(f"{label!r} is not an exceptional class over the original lattice")
        out = out - m * L_new.basis_class(label)
    return out


def blow_up_along(L: SurfaceLattice, D: DivisorClass, separations: Sequence[int], prefix: str = "E"):
    """Blow up l_i times at the i-th point, each time at the point of D's transform.

    Exceptional classes are total transforms, so D's proper transform is
    sigma^*D - sum E.  Returns (lattice, proper transform of D, exceptional labels).
    """
    labels = []
    M = L
    for i, l in enumerate(separations, 1):
        if l < 0:
            raise ValueError("separation numbers are nonnegative")
        for j in range(1, l + 1):
            lab = f"{prefix}{i}" if l == 1 else f"{prefix}{i}_{j}"
            M = blow_up(M, lab)
            labels.append(lab)
    Dt = proper_transform(M, D, {lab: 1 for lab in labels})
    return M, Dt, labels


def coordinates(cls: DivisorClass, basis: Sequence[DivisorClass]) -> list[Fraction]:
    """Coefficients of cls in another basis of the same lattice."""
    if len(basis) != cls.lattice.rank:
        raise ValueError("need a full basis")
    cols = [[b.coeffs[i] for b in basis] for i in range(cls.lattice.rank)]
    return solve(cols, cls.coeffs)


def intersect(L: SurfaceLattice, A: DivisorClass, B: DivisorClass):
    if A.lattice != L or B.lattice != L:
        raise ValueError("classes do not live on this lattice")
    return bilinear(A.coeffs, L.gram, B.coeffs)


def adjunction_genus(L: SurfaceLattice, D: DivisorClass) -> Fraction:
    """p_a(D) = D(D+K)/2 + 1."""
    return Fraction(intersect(L, D, D + L.K), 2) + 1


def riemann_roch_chi(L: SurfaceLattice, D: DivisorClass) -> int:
    """chi(O(D)) = chi(O) + D(D-K)/2."""
    twice = intersect(L, D, D - L.K)
    assert twice % 2 == 0, "D(D-K) is always even"
    return L.chi_structure + twice // 2


def h0_hirzebruch(d: int, a: int, b: int) -> int:
    """h^0(F_d, a D0 + b G) = sum_{k=0..a} max(0, b - k d + 1)."""
    if a < 0:
        raise ValueError("a must be >= 0")
    return sum(max(0, b - k * d + 1) for k in range(a + 1))


def anticanonical_half(L: SurfaceLattice) -> DivisorClass:
    """Delta = -K/2 on F_0 or F_2 (D0 + G, resp. D0 + 2G)."""
    if any(c % 2 for c in L.canonical):
        raise ValueError(f"K is not divisible by 2 on {L.name}")
    return DivisorClass(L, tuple(-c // 2 for c in L.canonical))


@dataclass(frozen=True)
class DoubleCoverRule:
    """Double cover f: Y -> Z branched along B ~ 2L, in terms of base classes.

    K_Y = f^*(K_Z + L); f^*A . f^*B = 2 A.B.
    """

    base: SurfaceLattice
    branch_half: DivisorClass
    k_base: DivisorClass  # K_Z + L, so K_Y = f^* k_base

    def pullback_intersection(self, A: DivisorClass, B: DivisorClass):
        return 2 * intersect(self.base, A, B)

    def k_dot_pullback(self, D: DivisorClass):
        return 2 * intersect(self.base, self.k_base, D)

    def k_squared(self):
        return self.pullback_intersection(self.k_base, self.k_base)


def double_cover_pullback(L: SurfaceLattice, cls: DivisorClass | None, branch_half: DivisorClass):
    """Return the cover rule, and K_Y . f^*cls when cls is given."""
    rule = DoubleCoverRule(L, branch_half, L.K + branch_half)
    if cls is None:
        return rule
    return rule, rule.k_dot_pullback(cls)


def horikawa_case_iii_valid(p_g: int, d: int) -> bool:
    """Admissible (p_g, d) for double covers of F_d branched in 6D0 + (p_g+3d+2)G."""
    return p_g >= max(d + 4, 2 * d - 2) and (p_g - d) % 2 == 0
