"""Upside-down decompositions and Poincare duality checks."""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    HandleDecomposition,
    OrientationMode,
    Ring,
    SignConvention,
    build_complex,
)
from .errors import NotApplicable
from .homology import AbelianGroup, cohomology, format_group, homology


def _require_applicable(d: HandleDecomposition, ring: Ring) -> None:
    if ring is Ring.INTEGERS and d.orientation_mode is not OrientationMode.ORIENTED:
        raise NotApplicable(
            f"integral duality needs an oriented manifold; input is {d.orientation_mode.value} "
            "(non-orientable data does not dualize by transposition; use --ring z2)"
        )


def dual_decomposition(d: HandleDecomposition, ring: Ring = Ring.INTEGERS) -> HandleDecomposition:
    """Read ``d`` upside down.

    Each k-handle becomes an (n-k)-handle with the same label and the raw
    matrix in degree n-k+1 is the transpose of D_k. Transposing the whole
    complex keeps every composite zero, so the + sign is used throughout.
    """
    _require_applicable(d, ring)
    n = d.dimension
    handles = tuple(d.handles[n - k] for k in range(n + 1))
    inter = {}
    for k in range(1, n + 1):
        inter[n - k + 1] = {(mu, nu): v for (nu, mu), v in d.intersections[k].items()}
    return HandleDecomposition(
        n, handles, inter, relative=d.relative, orientation_mode=d.orientation_mode
    )


@dataclass(frozen=True)
class DualityRow:
    degree: int
    cohomology: AbelianGroup
    dual_homology: AbelianGroup

    @property
    def isomorphic(self) -> bool:
        return self.cohomology == self.dual_homology


@dataclass(frozen=True)
class DualityReport:
    ring: Ring
    dimension: int
    rows: tuple[DualityRow, ...]

    @property
    def all_isomorphic(self) -> bool:
        return all(r.isomorphic for r in self.rows)

    def render(self) -> str:
        n = self.dimension
        left = [f"H^{r.degree}(M, d-M)" for r in self.rows]
        right = [f"H_{n - r.degree}(M, d+M)" for r in self.rows]
        lg = [format_group(r.cohomology, self.ring) for r in self.rows]
        rg = [format_group(r.dual_homology, self.ring) for r in self.rows]
        w1 = max((len(a) + len(b) + 3 for a, b in zip(left, lg)), default=0)
        w2 = max((len(c) + len(e) + 3 for c, e in zip(right, rg)), default=0)
        lines = [f"ring = {'Z' if self.ring is Ring.INTEGERS else 'Z/2'}"]
        for r, a, b, c, e in zip(self.rows, left, lg, right, rg):
            mark = "ok" if r.isomorphic else "MISMATCH"
            lines.append(f"{(a + ' = ' + b).ljust(w1)}  <->  {(c + ' = ' + e).ljust(w2)}  {mark}")
        lines.append(f"all_isomorphic = {str(self.all_isomorphic).lower()}")
        return "\n".join(lines) + "\n"


def check_duality(
    d: HandleDecomposition,
    ring: Ring = Ring.INTEGERS,
    sign: SignConvention = SignConvention.GEIGES,
) -> DualityReport:
    """Compare ``H^k`` of ``d`` with ``H_{n-k}`` of its upside-down decomposition."""
    dual = dual_decomposition(d, ring)
    co = cohomology(build_complex(d, sign, ring))
    ho = homology(build_complex(dual, sign, ring))
    n = d.dimension
    rows = tuple(DualityRow(k, co[k], ho[n - k]) for k in range(n + 1))
    return DualityReport(ring, n, rows)
