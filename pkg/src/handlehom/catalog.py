"""Builtin handle decompositions of standard manifolds with known homology."""

from __future__ import annotations

from dataclasses import dataclass

from .core import HandleDecomposition, OrientationMode, Ring
from .homology import AbelianGroup, HomologyProfile

Z = AbelianGroup(1)
O = AbelianGroup()


def _zmod(t):
    return AbelianGroup(0, (t,))


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    decomposition: HandleDecomposition
    expected: HomologyProfile
    expected_mod2: HomologyProfile
    orientable: bool
    notes: str = ""


def _profile(ring, groups, chi):
    return HomologyProfile(ring, tuple(groups), chi)


def _mod2(dims, chi):
    return _profile(Ring.MOD2, [AbelianGroup(r) for r in dims], chi)


def _sphere(n):
    d = HandleDecomposition(
        n, tuple((f"h{k}",) if k in (0, n) else () for k in range(n + 1))
    )
    groups = [Z if k in (0, n) else O for k in range(n + 1)]
    chi = 1 + (-1) ** n
    return CatalogEntry(
        f"S{n}",
        d,
        _profile(Ring.INTEGERS, groups, chi),
        _mod2([g.free_rank for g in groups], chi),
        True,
        f"{n}-sphere: one 0-handle and one {n}-handle",
    )


def _surface(g):
    ones = tuple(f"{c}{i}" for i in range(1, g + 1) for c in "ab")
    d = HandleDecomposition(2, (("h0",), ones, ("h2",)))
    name = "T2" if g == 1 else f"Sigma{g}"
    chi = 2 - 2 * g
    return CatalogEntry(
        name,
        d,
        _profile(Ring.INTEGERS, [Z, AbelianGroup(2 * g), Z], chi),
        _mod2([1, 2 * g, 1], chi),
        True,
        f"closed orientable surface of genus {g}; all boundary maps vanish",
    )


def _lens(p):
    d = HandleDecomposition(
        3,
        (("h0",), ("h1",), ("h2",), ("h3",)),
        {2: {("h1", "h2"): p}},
    )
    even = p % 2 == 0
    return CatalogEntry(
        f"L({p},1)",
        d,
        _profile(Ring.INTEGERS, [Z, _zmod(p), O, Z], 0),
        _mod2([1, 1, 1, 1] if even else [1, 0, 0, 1], 0),
        True,
        "lens-space-style chain-level model; the matrices are the normative content",
    )


def _build():
    entries = [_sphere(n) for n in range(1, 6)]
    entries += [_surface(1), _surface(2), _surface(3)]
    entries.append(
        CatalogEntry(
            "RP2",
            HandleDecomposition(
                2,
                (("h0",), ("h1",), ("h2",)),
                {2: {("h1", "h2"): 2}},
                orientation_mode=OrientationMode.COORIENTED,
            ),
            _profile(Ring.INTEGERS, [Z, _zmod(2), O], 1),
            _mod2([1, 1, 1], 1),
            False,
            "real projective plane: one handle of each index, A_2 crosses the 1-handle twice",
        )
    )
    entries.append(
        CatalogEntry(
            "Klein",
            HandleDecomposition(
                2,
                (("h0",), ("a", "b"), ("h2",)),
                {2: {("b", "h2"): 2}},
                orientation_mode=OrientationMode.COORIENTED,
            ),
            _profile(Ring.INTEGERS, [Z, AbelianGroup(1, (2,)), O], 0),
            _mod2([1, 2, 1], 0),
            False,
            "Klein bottle: attaching circle runs over a with total 0 and over b with total 2",
        )
    )
    entries.append(
        CatalogEntry(
            "RP3",
            HandleDecomposition(
                3,
                (("h0",), ("h1",), ("h2",), ("h3",)),
                {2: {("h1", "h2"): 2}},
            ),
            _profile(Ring.INTEGERS, [Z, _zmod(2), O, Z], 0),
            _mod2([1, 1, 1, 1], 0),
            True,
            "real projective 3-space: one handle of each index",
        )
    )
    entries += [_lens(3), _lens(5)]
    return tuple(entries)


_CATALOG = _build()


def catalog() -> list[CatalogEntry]:
    return list(_CATALOG)


def get(name: str) -> CatalogEntry:
    for e in _CATALOG:
        if e.name == name:
            return e
    raise KeyError(f"no catalog entry named {name!r}")


def names() -> list[str]:
    return [e.name for e in _CATALOG]
