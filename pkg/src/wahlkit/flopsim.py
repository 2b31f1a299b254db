"""Lattice model of flop reduction.

A degenerating curve class C + sum a_i E_i is recorded by the weight
omega = omega_C and the coefficients a; its weight is mu = omega - sum a_i E_i.
Everything is done in Dynkin labels, so <mu, E_j> is just mu[j].  Flopping the
(-2)-curve E_j with <mu, E_j> < 0 replaces a_j by a_j + <mu, E_j> and mu by its
reflection s_j(mu).
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator, Sequence

from wahlkit.ade import RootSystem, dynkin_norm, root_coordinates, weight_system

__all__ = [
    "FlopError",
    "FiberState",
    "FlopTrace",
    "POLICIES",
    "flop_step",
    "reduce",
    "dominant_decompositions",
    "valid_starts",
    "random_state",
]


class FlopError(ValueError):
    """A flop was requested that the geometry cannot perform."""


@dataclass(frozen=True)
class FiberState:
    system: RootSystem
    omega: tuple[int, ...]
    coeffs: tuple[int, ...]

    def __post_init__(self):
        r = self.system.rank
        if len(self.omega) != r or len(self.coeffs) != r:
            raise ValueError(f"omega and coeffs must have length {r}")
        if any(a < 0 for a in self.coeffs):
            raise ValueError(f"coefficients must be nonnegative, got {list(self.coeffs)}")

    @property
    def mu(self) -> tuple[int, ...]:
        C = self.system.cartan
        return tuple(
            w - sum(a * C[i][j] for i, a in enumerate(self.coeffs)) for j, w in enumerate(self.omega)
        )

    def is_dominant(self) -> bool:
        return all(x >= 0 for x in self.mu)

    def height(self) -> int:
        return sum(self.coeffs)


@dataclass(frozen=True)
class FlopTrace:
    steps: tuple[int, ...]  # 0-based simple-root indices
    initial: FiberState
    final: FiberState

    def to_json(self) -> dict:
        return {
            "omega": list(self.initial.omega),
            "steps": [j + 1 for j in self.steps],
            "initial_a": list(self.initial.coeffs),
            "final_a": list(self.final.coeffs),
            "final_dominant": self.final.is_dominant(),
        }


def flop_step(s: FiberState, j: int) -> FiberState:
    """Flop E_j (0-based index)."""
    m = s.mu[j]
    if m >= 0:
        raise FlopError(f"<mu, E_{j + 1}> = {m} is not negative; E_{j + 1} cannot be flopped")
    new_aj = s.coeffs[j] + m
    if new_aj < 0:
        raise FlopError(
            f"flopping E_{j + 1} would give a_{j + 1} = {new_aj} < 0; "
            "the state is not a weight of the representation generated by omega"
        )
    coeffs = list(s.coeffs)
    coeffs[j] = new_aj
    return FiberState(s.system, s.omega, tuple(coeffs))


def _choose(mu: Sequence[int], policy: str) -> int | None:
    negative = [j for j, x in enumerate(mu) if x < 0]
    if not negative:
        return None
    if policy == "smallest":
        return negative[0]
    if policy == "largest":
        return negative[-1]
    if policy == "most_negative":
        return min(negative, key=lambda j: (mu[j], j))
    raise ValueError(f"unknown policy {policy!r}; choose from {POLICIES}")


POLICIES = ("smallest", "largest", "most_negative")


def reduce(s: FiberState, policy: str = "smallest") -> FlopTrace:
    """Flop until mu is dominant.  The height drops at every step, so this halts."""
    if policy not in POLICIES:
        raise ValueError(f"unknown policy {policy!r}; choose from {POLICIES}")
    steps = []
    cur = s
    while (j := _choose(cur.mu, policy)) is not None:
        nxt = flop_step(cur, j)
        assert nxt.height() < cur.height()
        steps.append(j)
        cur = nxt
    return FlopTrace(tuple(steps), s, cur)


def _coeffs_from_mu(rs: RootSystem, omega: Sequence[int], mu: Sequence[int]) -> tuple[int, ...]:
    diff = [w - m for w, m in zip(omega, mu)]
    coeffs = root_coordinates(rs, diff)
    assert all(c.denominator == 1 for c in coeffs), "mu is not in omega's coset"
    return tuple(int(c) for c in coeffs)


def dominant_decompositions(
    rs: RootSystem, omega: Sequence[int], height_bound: int = 12, side_condition: str | None = None
) -> list[tuple[int, ...]]:
    """All a >= 0 with sum(a) <= height_bound and omega - sum a_i E_i dominant.

    ``side_condition`` filters the survivors: ``"norm"`` keeps those whose weight
    has the same norm as omega, ``"weight_system"`` keeps those that are weights
    of the irreducible representation with highest weight omega.
    """
    omega = tuple(int(x) for x in omega)
    if any(x < 0 for x in omega):
        raise ValueError("omega must be dominant")
    C = rs.cartan
    r = rs.rank
    target = dynkin_norm(rs, omega)
    ws = weight_system(rs, omega, max_depth=height_bound) if side_condition == "weight_system" else None
    out = []
    for a in _bounded_sum(r, height_bound):
        mu = tuple(omega[j] - sum(a[i] * C[i][j] for i in range(r)) for j in range(r))
        if any(x < 0 for x in mu):
            continue
        if side_condition == "norm" and dynkin_norm(rs, mu) != target:
            continue
        if ws is not None and mu not in ws:
            continue
        out.append(a)
    return out


def _bounded_sum(r: int, bound: int) -> Iterator[tuple[int, ...]]:
    if r == 0:
        yield ()
        return
    for first in range(bound + 1):
        for rest in _bounded_sum(r - 1, bound - first):
            yield (first,) + rest


def valid_starts(
    rs: RootSystem, omega: Sequence[int], height_bound: int = 8, orbit_only: bool = True
) -> list[FiberState]:
    """States C + sum a_i E_i whose weight lies in the representation V_omega.

    With ``orbit_only`` only weights of the same norm as omega are kept (for a
    minuscule omega that is every weight).
    """
    omega = tuple(int(x) for x in omega)
    target = dynkin_norm(rs, omega)
    out = []
    for mu in sorted(weight_system(rs, omega, max_depth=height_bound)):
        a = _coeffs_from_mu(rs, omega, mu)
        if sum(a) > height_bound:
            continue
        if orbit_only and dynkin_norm(rs, mu) != target:
            continue
        out.append(FiberState(rs, omega, a))
    out.sort(key=lambda s: (s.height(), s.coeffs))
    return out


def random_state(rs: RootSystem, omega: Sequence[int], rng: random.Random, max_steps: int = 30) -> FiberState:
    """A random weight of V_omega, reached by walking down root strings."""
    omega = tuple(int(x) for x in omega)
    C = rs.cartan
    mu = omega
    for _ in range(rng.randint(0, max_steps)):
        choices = [j for j in range(rs.rank) if mu[j] > 0]
        if not choices:
            break
        j = rng.choice(choices)
        k = rng.randint(1, mu[j])
        mu = tuple(x - k * c for x, c in zip(mu, C[j]))
    return FiberState(rs, omega, _coeffs_from_mu(rs, omega, mu))
