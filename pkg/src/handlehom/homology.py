"""Homology, cohomology and the orientability test."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .core import (
    ChainComplex,
    HandleDecomposition,
    OrientationMode,
    Ring,
    SignConvention,
    build_complex,
    euler_characteristic,
)
from .linalg import invariant_factors, rank_mod2, transpose

__all__ = [
    "AbelianGroup",
    "HomologyProfile",
    "Orientability",
    "OrientabilityResult",
    "classify_orientability",
    "cohomology",
    "euler_characteristic",
    "format_group",
    "homology",
]


@dataclass(frozen=True, order=True)
class AbelianGroup:
    """``Z^free_rank + Z/t_1 + ... + Z/t_m`` with ``t_1 | t_2 | ...``, each >= 2."""

    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        t = tuple(int(x) for x in self.torsion)
        if self.free_rank < 0 or any(x < 2 for x in t):
            raise ValueError(f"invalid group data {self.free_rank}, {t}")
        if any(b % a for a, b in zip(t, t[1:])):
            raise ValueError(f"torsion {t} is not a divisibility chain")
        object.__setattr__(self, "torsion", t)

    @classmethod
    def from_factors(cls, free_rank: int, factors) -> AbelianGroup:
        """Group from a divisibility chain that may still contain 1s."""
        return cls(free_rank, tuple(f for f in factors if f > 1))

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def __str__(self):
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " + ".join(parts) if parts else "0"


Z = AbelianGroup(1)
TRIVIAL = AbelianGroup()


def format_group(g: AbelianGroup, ring: Ring) -> str:
    """``Z^r + Z/t ...`` over the integers; ``(Z/2)^r`` for mod-2 vector spaces."""
    if ring is Ring.INTEGERS:
        return str(g)
    r = g.free_rank
    return "0" if r == 0 else "Z/2" if r == 1 else f"(Z/2)^{r}"


@dataclass(frozen=True)
class HomologyProfile:
    ring: Ring
    groups: tuple[AbelianGroup, ...]
    euler_characteristic: int

    @property
    def betti(self) -> tuple[int, ...]:
        return tuple(g.free_rank for g in self.groups)

    def __getitem__(self, k: int) -> AbelianGroup:
        return self.groups[k]


def _ranks_and_factors(c: ChainComplex):
    # rank and invariant factors of every d_k, k = 1..top
    if c.ring is Ring.MOD2:
        return [rank_mod2(d) for d in c.boundaries], [() for _ in c.boundaries]
    rk, fac = [], []
    for d in c.boundaries:
        diag = invariant_factors(d)
        rk.append(len(diag))
        fac.append(diag)
    return rk, fac


def homology(c: ChainComplex) -> HomologyProfile:
    """Homology groups of ``c`` in every degree 0..top."""
    rk, fac = _ranks_and_factors(c)
    n = c.top
    groups = []
    for k in range(n + 1):
        out_rank = rk[k - 1] if k >= 1 else 0
        in_rank = rk[k] if k < n else 0
        free = c.ranks[k] - out_rank - in_rank
        torsion = fac[k] if k < n else ()
        groups.append(AbelianGroup.from_factors(free, torsion))
    chi = sum((-1) ** k * r for k, r in enumerate(c.ranks))
    return HomologyProfile(c.ring, tuple(groups), chi)


def cohomology(c: ChainComplex) -> HomologyProfile:
    """Cohomology of ``c``, computed from the transposed boundary matrices.

    ``H^k = ker(d_{k+1}^T) / im(d_k^T)``; the transposed maps are reduced
    with the same Smith normal form routine rather than derived from homology.
    """
    n = c.top
    dual = [transpose(d) for d in c.boundaries]  # dual[k-1]: C^{k-1} -> C^k
    if c.ring is Ring.MOD2:
        rk = [rank_mod2(d) for d in dual]
        fac = [() for _ in dual]
    else:
        fac = [invariant_factors(d) for d in dual]
        rk = [len(f) for f in fac]
    groups = []
    for k in range(n + 1):
        out_rank = rk[k] if k < n else 0  # d_{k+1}^T leaves degree k
        in_rank = rk[k - 1] if k >= 1 else 0  # d_k^T lands in degree k
        free = c.ranks[k] - out_rank - in_rank
        torsion = fac[k - 1] if k >= 1 else ()
        groups.append(AbelianGroup.from_factors(free, torsion))
    chi = sum((-1) ** k * r for k, r in enumerate(c.ranks))
    return HomologyProfile(c.ring, tuple(groups), chi)


def decomposition_homology(
    d: HandleDecomposition,
    ring: Ring = Ring.INTEGERS,
    sign: SignConvention = SignConvention.GEIGES,
) -> HomologyProfile:
    return homology(build_complex(d, sign, ring))


class Orientability(enum.Enum):
    ORIENTABLE = "orientable"
    NON_ORIENTABLE = "non-orientable"
    INAPPLICABLE = "inapplicable"


@dataclass(frozen=True)
class OrientabilityResult:
    verdict: Orientability
    reason: str = ""


def classify_orientability(d: HandleDecomposition) -> OrientabilityResult:
    """Decide orientability of a closed connected manifold from its top homology.

    Only integral data for closed manifolds qualifies; connectivity is taken
    to mean ``H_0 = Z``.
    """
    if d.relative:
        return OrientabilityResult(Orientability.INAPPLICABLE, "decomposition is relative")
    if d.orientation_mode is OrientationMode.MOD2:
        return OrientabilityResult(Orientability.INAPPLICABLE, "mod-2 data carries no signs")
    h = decomposition_homology(d)
    if h[0] != Z:
        return OrientabilityResult(
            Orientability.INAPPLICABLE, f"not connected: H_0 = {h[0]}"
        )
    top = h[d.dimension]
    if top == Z:
        return OrientabilityResult(Orientability.ORIENTABLE, "H_n = Z")
    if top.is_trivial:
        return OrientabilityResult(Orientability.NON_ORIENTABLE, "H_n = 0")
    return OrientabilityResult(
        Orientability.INAPPLICABLE, f"H_n = {top} is neither Z nor 0; not a closed manifold"
    )

