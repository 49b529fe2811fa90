"""Combinatorial handle decompositions and their chain complexes.

A decomposition stores, for every index ``k``, the labels of its k-handles and
the raw signed intersection counts between attaching spheres of k-handles and
belt spheres of (k-1)-handles. No sign convention is baked into the stored
numbers; :func:`build_complex` applies one.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .errors import InconsistentBoundary, ShapeError
from .linalg import IntegerMatrix


class OrientationMode(enum.Enum):
    ORIENTED = "oriented"
    COORIENTED = "cooriented"
    MOD2 = "mod2"


class SignConvention(enum.Enum):
    """How raw intersection counts become boundary coefficients.

    ``GEIGES`` multiplies the counts in degree k by ``(-1)**(k-1)``, matching
    cellular homology. ``PLAIN`` uses the counts unchanged.
    """

    GEIGES = "geiges"
    PLAIN = "plain"

    def factor(self, k: int) -> int:
        if self is SignConvention.PLAIN:
            return 1
        return -1 if (k - 1) % 2 else 1


class Ring(enum.Enum):
    INTEGERS = "z"
    MOD2 = "z2"


# D_k is keyed by (label of (k-1)-handle, label of k-handle)
Entries = Mapping[tuple[str, str], int]


@dataclass(frozen=True, eq=True)
class HandleDecomposition:
    """Handles per index plus sparse raw intersection matrices.

    ``handles[k]`` is the tuple of k-handle labels, kept sorted.
    ``intersections[k]`` for ``1 <= k <= dimension`` maps
    ``(km1_label, k_label)`` to the nonzero count ``A_k . B_{k-1}``.
    Construction only normalizes; :func:`validate` reports structural problems.
    """

    dimension: int
    handles: tuple[tuple[str, ...], ...]
    intersections: Mapping[int, Entries] = field(default_factory=dict)
    relative: bool = False
    orientation_mode: OrientationMode = OrientationMode.ORIENTED

    def __post_init__(self):
        hs = [tuple(sorted(h)) for h in self.handles]
        while len(hs) < self.dimension + 1:
            hs.append(())
        object.__setattr__(self, "handles", tuple(hs))
        clean = {}
        for k in range(1, max(self.dimension, 0) + 1):
            src = self.intersections.get(k, {})
            clean[k] = {key: int(v) for key, v in sorted(src.items()) if v}
        extra = set(self.intersections) - set(clean)
        for k in extra:
            # kept so validate can report it; never produced by well-formed input
            clean[k] = {key: int(v) for key, v in sorted(self.intersections[k].items()) if v}
        object.__setattr__(self, "intersections", clean)

    __hash__ = None  # type: ignore[assignment]

    @classmethod
    def from_counts(
        cls,
        dimension: int,
        handles: Iterable[Iterable[str]],
        intersections: Mapping[int, Entries] | None = None,
        **kw,
    ) -> HandleDecomposition:
        return cls(dimension, tuple(tuple(h) for h in handles), dict(intersections or {}), **kw)

    def labels(self, k: int) -> tuple[str, ...]:
        if 0 <= k <= self.dimension:
            return self.handles[k]
        return ()

    def count(self, k: int) -> int:
        return len(self.labels(k))

    def entry(self, k: int, km1_label: str, k_label: str) -> int:
        return self.intersections.get(k, {}).get((km1_label, k_label), 0)

    def raw_matrix(self, k: int, mod2: bool = False) -> IntegerMatrix:
        """Dense D_k, rows indexed by (k-1)-handles and columns by k-handles."""
        rows, cols = self.labels(k - 1), self.labels(k)
        ri = {l: i for i, l in enumerate(rows)}
        ci = {l: j for j, l in enumerate(cols)}
        nc = len(cols)
        out = [0] * (len(rows) * nc)
        for (nu, mu), v in self.intersections.get(k, {}).items():
            if nu not in ri or mu not in ci:
                raise ShapeError(f"D_{k} entry ({nu}, {mu}) references an undeclared handle")
            out[ri[nu] * nc + ci[mu]] = v & 1 if mod2 else v
        return IntegerMatrix._wrap(len(rows), nc, tuple(out))

    def with_matrices(
        self, handles: Iterable[Iterable[str]], matrices: Mapping[int, IntegerMatrix]
    ) -> HandleDecomposition:
        """Copy with new handles; ``matrices[k]`` is dense D_k in sorted label order."""
        hs = tuple(tuple(sorted(h)) for h in handles)
        inter = {}
        for k in range(1, self.dimension + 1):
            m = matrices.get(k)
            if m is None:
                continue
            rows, cols = hs[k - 1], hs[k]
            if m.shape != (len(rows), len(cols)):
                raise ShapeError(f"D_{k} has shape {m.shape}, expected {(len(rows), len(cols))}")
            inter[k] = {
                (rows[i], cols[j]): m[i, j]
                for i in range(m.rows)
                for j in range(m.cols)
                if m[i, j]
            }
        return HandleDecomposition(
            self.dimension, hs, inter, relative=self.relative, orientation_mode=self.orientation_mode
        )


@dataclass(frozen=True)
class ChainComplex:
    """Free chain complex ``C_0 <- C_1 <- ... <- C_n``.

    ``boundaries[k - 1]`` is the matrix of d_k with shape ``ranks[k-1] x ranks[k]``.
    """

    ring: Ring
    ranks: tuple[int, ...]
    boundaries: tuple[IntegerMatrix, ...]
    generator_labels: tuple[tuple[str, ...], ...] = ()

    def __post_init__(self):
        if len(self.boundaries) != max(len(self.ranks) - 1, 0):
            raise ShapeError("need exactly one boundary matrix per positive degree")
        for k, d in enumerate(self.boundaries, start=1):
            if d.shape != (self.ranks[k - 1], self.ranks[k]):
                raise ShapeError(
                    f"d_{k} has shape {d.shape}, expected {(self.ranks[k - 1], self.ranks[k])}"
                )
        if not self.generator_labels:
            object.__setattr__(
                self,
                "generator_labels",
                tuple(tuple(f"e{k}_{i}" for i in range(r)) for k, r in enumerate(self.ranks)),
            )

    @property
    def top(self) -> int:
        return len(self.ranks) - 1

    def boundary(self, k: int) -> IntegerMatrix:
        """d_k; zero map for degrees outside ``1..top``."""
        if 1 <= k <= self.top:
            return self.boundaries[k - 1]
        rows = self.ranks[k - 1] if 0 <= k - 1 <= self.top else 0
        cols = self.ranks[k] if 0 <= k <= self.top else 0
        return IntegerMatrix.zeros(rows, cols)

    def check(self) -> None:
        """Raise :class:`InconsistentBoundary` unless every d_k d_{k+1} vanishes."""
        for k in range(1, self.top):
            bad = first_nonzero_composite(self.boundaries[k - 1], self.boundaries[k], self.ring)
            if bad is not None:
                i, j, v = bad
                raise InconsistentBoundary(
                    k, self.generator_labels[k - 1][i], self.generator_labels[k + 1][j], v
                )


def _sparse_rows(m: IntegerMatrix):
    c = m.cols
    data = m.entries
    return [[(j, x) for j, x in enumerate(data[i * c:(i + 1) * c]) if x] for i in range(m.rows)]


def first_nonzero_composite(a: IntegerMatrix, b: IntegerMatrix, ring: Ring):
    """First (row, col, value) where ``a @ b`` is nonzero in ``ring``, else None."""
    bl = _sparse_rows(b)
    mod2 = ring is Ring.MOD2
    for i, r in enumerate(_sparse_rows(a)):
        acc: dict[int, int] = {}
        for l, x in r:
            for j, y in bl[l]:
                acc[j] = acc.get(j, 0) + x * y
        bad = sorted(j for j, v in acc.items() if (v & 1 if mod2 else v))
        if bad:
            v = acc[bad[0]]
            return i, bad[0], (v & 1 if mod2 else v)
    return None


def build_complex(
    d: HandleDecomposition,
    sign: SignConvention = SignConvention.GEIGES,
    ring: Ring = Ring.INTEGERS,
) -> ChainComplex:
    """Handle chain complex of ``d``: d_k = sign(k) * D_k, reduced mod 2 if asked."""
    n = d.dimension
    mats = []
    for k in range(1, n + 1):
        m = d.raw_matrix(k, mod2=ring is Ring.MOD2)
        if ring is Ring.INTEGERS and sign.factor(k) != 1:
            m = -m
        mats.append(m)
    c = ChainComplex(ring, tuple(d.count(k) for k in range(n + 1)), tuple(mats), d.handles)
    c.check()
    return c


@dataclass(frozen=True)
class Violation:
    kind: str
    message: str


@dataclass(frozen=True)
class ValidationReport:
    dimension: int
    ranks: tuple[int, ...]
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def kinds(self) -> set[str]:
        return {v.kind for v in self.violations}


def validate(d: HandleDecomposition) -> ValidationReport:
    """Diagnose ``d`` without raising.

    Checks label uniqueness, that every entry references declared handles, the
    0/1 restriction for mod-2 data, and d d = 0 under both sign conventions.
    The composite is tested over Z/2 for mod-2 data and over Z otherwise.
    """
    out: list[Violation] = []
    n = d.dimension
    if n < 0:
        out.append(Violation("BadDimension", f"dimension {n} is negative"))
    if len(d.handles) > n + 1:
        out.append(Violation("BadDegree", f"handles declared above dimension {n}"))
    for k, labels in enumerate(d.handles):
        seen = set()
        for l in labels:
            if l in seen:
                out.append(Violation("DuplicateLabel", f"label {l!r} repeated in degree {k}"))
            seen.add(l)
    for k, entries in d.intersections.items():
        if not 1 <= k <= n:
            if entries:
                out.append(Violation("BadDegree", f"intersections given in degree {k}"))
            continue
        below, here = set(d.labels(k - 1)), set(d.labels(k))
        for (nu, mu), v in entries.items():
            if mu not in here:
                out.append(Violation("UnknownLabel", f"D_{k} references unknown {k}-handle {mu!r}"))
            if nu not in below:
                out.append(Violation("UnknownLabel", f"D_{k} references unknown {k - 1}-handle {nu!r}"))
            if d.orientation_mode is OrientationMode.MOD2 and v not in (0, 1):
                out.append(Violation("NonBinaryEntry", f"D_{k}[{nu}, {mu}] = {v} in mod-2 data"))
    ranks = tuple(len(set(h)) for h in d.handles)
    if not out:
        ring = Ring.MOD2 if d.orientation_mode is OrientationMode.MOD2 else Ring.INTEGERS
        for s in SignConvention:
            try:
                build_complex(d, s, ring)
            except InconsistentBoundary as exc:
                out.append(Violation("InconsistentBoundary", f"{s.value}: {exc}"))
    return ValidationReport(n, ranks, tuple(out))


def euler_characteristic(d: HandleDecomposition) -> int:
    """Alternating sum of handle counts."""
    return sum((-1) ** k * d.count(k) for k in range(d.dimension + 1))
