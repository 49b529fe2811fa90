"""Handle slides, cancelling pairs and reorientations as matrix operations.

Each move returns a new :class:`HandleDecomposition`; inputs are never
modified. Moves act on the raw intersection matrices D_k, so they commute with
the choice of sign convention.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Union

from .core import (
    HandleDecomposition,
    OrientationMode,
    Ring,
    build_complex,
    euler_characteristic,
)
from .errors import (
    DuplicateLabel,
    HandleHomologyError,
    InvarianceViolation,
    PivotNotUnit,
    SameHandle,
    UnknownLabel,
)
from .homology import homology


def _index(d: HandleDecomposition, k: int, label: str) -> int:
    if not 0 <= k <= d.dimension:
        raise UnknownLabel(f"degree {k} outside 0..{d.dimension}")
    try:
        return d.handles[k].index(label)
    except ValueError:
        raise UnknownLabel(f"no {k}-handle labelled {label!r}") from None


def _check_degree(d: HandleDecomposition, k: int) -> None:
    if not 1 <= k <= d.dimension:
        raise ValueError(f"move degree {k} outside 1..{d.dimension}")


def _copy_entries(d: HandleDecomposition) -> dict[int, dict[tuple[str, str], int]]:
    return {k: dict(v) for k, v in d.intersections.items()}


def _rebuild(d: HandleDecomposition, handles, entries) -> HandleDecomposition:
    if d.orientation_mode is OrientationMode.MOD2:
        entries = {k: {key: v & 1 for key, v in e.items()} for k, e in entries.items()}
    return HandleDecomposition(
        d.dimension,
        tuple(tuple(h) for h in handles),
        entries,
        relative=d.relative,
        orientation_mode=d.orientation_mode,
    )


def _bump(entries, key, delta):
    v = entries.get(key, 0) + delta
    if v:
        entries[key] = v
    else:
        entries.pop(key, None)


def slide(d: HandleDecomposition, k: int, moving: str, over: str, sign: int = 1) -> HandleDecomposition:
    """Slide the k-handle ``moving`` over ``over``.

    The new generator is ``moving + sign * over``: its column in D_k picks up
    ``sign`` times the column of ``over``, and in D_{k+1} the row of ``over``
    loses ``sign`` times the row of ``moving``.
    """
    _check_degree(d, k)
    if sign not in (1, -1):
        raise ValueError("slide sign must be +1 or -1")
    if moving == over:
        raise SameHandle(f"cannot slide {moving!r} over itself")
    _index(d, k, moving)
    _index(d, k, over)
    e = _copy_entries(d)
    col_over = [(nu, v) for (nu, mu), v in e[k].items() if mu == over]
    for nu, v in col_over:
        _bump(e[k], (nu, moving), sign * v)
    if k < d.dimension:
        row_moving = [(mu, v) for (nu, mu), v in e[k + 1].items() if nu == moving]
        for mu, v in row_moving:
            _bump(e[k + 1], (over, mu), -sign * v)
    return _rebuild(d, d.handles, e)


def reorient_handle(d: HandleDecomposition, k: int, handle: str) -> HandleDecomposition:
    """Replace the generator ``handle`` by its negative."""
    _check_degree(d, k)
    _index(d, k, handle)
    e = _copy_entries(d)
    e[k] = {key: (-v if key[1] == handle else v) for key, v in e[k].items()}
    if k < d.dimension:
        e[k + 1] = {key: (-v if key[0] == handle else v) for key, v in e[k + 1].items()}
    return _rebuild(d, d.handles, e)


def create_pair(
    d: HandleDecomposition, k: int, new_k_label: str, new_km1_label: str, sign: int = 1
) -> HandleDecomposition:
    """Add a cancelling (k-1, k) pair attached away from all other handles."""
    _check_degree(d, k)
    if sign not in (1, -1):
        raise ValueError("pair sign must be +1 or -1")
    if new_k_label in d.handles[k]:
        raise DuplicateLabel(f"{k}-handle {new_k_label!r} already exists")
    if new_km1_label in d.handles[k - 1]:
        raise DuplicateLabel(f"{k - 1}-handle {new_km1_label!r} already exists")
    handles = [list(h) for h in d.handles]
    handles[k].append(new_k_label)
    handles[k - 1].append(new_km1_label)
    e = _copy_entries(d)
    e[k][(new_km1_label, new_k_label)] = sign
    return _rebuild(d, handles, e)


def cancel(d: HandleDecomposition, k: int, k_handle: str, km1_handle: str) -> HandleDecomposition:
    """Remove a k-handle and a (k-1)-handle meeting with intersection number +-1.

    The surviving part of D_k becomes the Schur complement of the pivot. The
    pivot's row in D_{k+1} and column in D_{k-1} are dropped.
    """
    _check_degree(d, k)
    mu0 = k_handle
    nu0 = km1_handle
    _index(d, k, mu0)
    _index(d, k - 1, nu0)
    e = _copy_entries(d)
    raw = e[k].get((nu0, mu0), 0)
    alpha = raw & 1 if d.orientation_mode is OrientationMode.MOD2 else raw
    if alpha not in (1, -1):
        raise PivotNotUnit(f"D_{k}[{km1_handle}, {k_handle}] = {raw} is not a unit")
    gamma = {nu: v for (nu, mu), v in e[k].items() if mu == mu0 and nu != nu0}
    beta = {mu: v for (nu, mu), v in e[k].items() if nu == nu0 and mu != mu0}
    e[k] = {key: v for key, v in e[k].items() if key[0] != nu0 and key[1] != mu0}
    for nu, g in gamma.items():
        g *= alpha  # alpha is its own inverse
        for mu, b in beta.items():
            _bump(e[k], (nu, mu), -g * b)
    if k < d.dimension:
        e[k + 1] = {key: v for key, v in e[k + 1].items() if key[0] != mu0}
    if k >= 2:
        e[k - 1] = {key: v for key, v in e[k - 1].items() if key[1] != nu0}
    handles = [list(h) for h in d.handles]
    handles[k].remove(mu0)
    handles[k - 1].remove(nu0)
    return _rebuild(d, handles, e)


@dataclass(frozen=True)
class Slide:
    degree: int
    moving: str
    over: str
    sign: int = 1

    def apply(self, d):
        return slide(d, self.degree, self.moving, self.over, self.sign)

    def to_line(self):
        return f"slide {self.degree} {self.moving} {self.over} {'+' if self.sign > 0 else '-'}"


@dataclass(frozen=True)
class Cancel:
    degree: int
    k_handle: str
    km1_handle: str

    def apply(self, d):
        return cancel(d, self.degree, self.k_handle, self.km1_handle)

    def to_line(self):
        return f"cancel {self.degree} {self.k_handle} {self.km1_handle}"


@dataclass(frozen=True)
class CreatePair:
    degree: int
    new_k_label: str
    new_km1_label: str
    sign: int = 1

    def apply(self, d):
        return create_pair(d, self.degree, self.new_k_label, self.new_km1_label, self.sign)

    def to_line(self):
        return (
            f"create {self.degree} {self.new_k_label} {self.new_km1_label} "
            f"{'+' if self.sign > 0 else '-'}"
        )


@dataclass(frozen=True)
class ReorientHandle:
    degree: int
    handle: str

    def apply(self, d):
        return reorient_handle(d, self.degree, self.handle)

    def to_line(self):
        return f"reorient {self.degree} {self.handle}"


Move = Union[Slide, Cancel, CreatePair, ReorientHandle]

MOVE_KEYWORDS = ("slide", "cancel", "create", "reorient")


def parse_move(line: str) -> Move:
    """Parse one move line, e.g. ``slide 1 a b +``. Raises ValueError."""
    parts = line.split()
    if not parts:
        raise ValueError("empty move line")
    kw, args = parts[0], parts[1:]

    def sign(tok):
        if tok not in ("+", "-"):
            raise ValueError(f"expected + or -, got {tok!r}")
        return 1 if tok == "+" else -1

    arity = {"slide": 4, "cancel": 3, "create": 4, "reorient": 2}
    if kw not in arity:
        raise ValueError(f"unknown move {kw!r}")
    if len(args) != arity[kw]:
        raise ValueError(f"{kw} takes {arity[kw]} arguments, got {len(args)}")
    try:
        k = int(args[0])
    except ValueError:
        raise ValueError(f"degree must be an integer, got {args[0]!r}") from None
    if kw == "slide":
        return Slide(k, args[1], args[2], sign(args[3]))
    if kw == "cancel":
        return Cancel(k, args[1], args[2])
    if kw == "create":
        return CreatePair(k, args[1], args[2], sign(args[3]))
    return ReorientHandle(k, args[1])


def apply_moves(d: HandleDecomposition, moves) -> HandleDecomposition:
    for m in moves:
        d = m.apply(d)
    return d


@dataclass(frozen=True)
class MoveJournal:
    initial: HandleDecomposition
    moves: tuple[Move, ...] = ()
    result: HandleDecomposition | None = field(default=None)

    def __post_init__(self):
        if self.result is None:
            object.__setattr__(self, "result", apply_moves(self.initial, self.moves))

    def replay(self) -> HandleDecomposition:
        return apply_moves(self.initial, self.moves)


def unit_pivots(d: HandleDecomposition):
    """All ``(k, k_label, km1_label)`` whose raw entry is a unit."""
    mod2 = d.orientation_mode is OrientationMode.MOD2
    out = []
    for k in range(1, d.dimension + 1):
        for (nu, mu), v in d.intersections[k].items():
            if (v & 1) if mod2 else v in (1, -1):
                out.append((k, mu, nu))
    return out


# relative weights of the move families in the fuzzer
FUZZ_WEIGHTS = {"slide": 40, "create": 20, "cancel": 20, "reorient": 20}


def _families(d: HandleDecomposition, fresh):
    # family -> (number of applicable moves, function index -> move)
    n = d.dimension
    fams = {}
    hs = d.handles
    slide_counts = [(k, 2 * len(hs[k]) * (len(hs[k]) - 1)) for k in range(1, n + 1)]
    total = sum(c for _, c in slide_counts)
    if total:
        def pick_slide(i):
            for k, c in slide_counts:
                if i < c:
                    h = hs[k]
                    sign = 1 if i % 2 == 0 else -1
                    i //= 2
                    a, b = divmod(i, len(h) - 1)
                    if b >= a:
                        b += 1
                    return Slide(k, h[a], h[b], sign)
                i -= c
            raise AssertionError("slide index out of range")

        fams["slide"] = (total, pick_slide)
    if n >= 1:
        fams["create"] = (
            2 * n,
            lambda i: CreatePair(i // 2 + 1, fresh[0], fresh[1], 1 if i % 2 == 0 else -1),
        )
    pivots = unit_pivots(d)
    if pivots:
        fams["cancel"] = (len(pivots), lambda i: Cancel(*pivots[i]))
    reorients = [(k, h) for k in range(1, n + 1) for h in hs[k]]
    if reorients:
        fams["reorient"] = (len(reorients), lambda i: ReorientHandle(*reorients[i]))
    return fams


def _profiles(d: HandleDecomposition):
    rings = [Ring.MOD2] if d.orientation_mode is OrientationMode.MOD2 else [Ring.INTEGERS, Ring.MOD2]
    return tuple(homology(build_complex(d, ring=r)) for r in rings), euler_characteristic(d)


def fuzz_moves(d: HandleDecomposition, steps: int, seed: int) -> MoveJournal:
    """Apply ``steps`` random moves, checking invariance after each one.

    A move family is drawn with the weights in ``FUZZ_WEIGHTS`` (restricted
    to families with at least one applicable move), then a move uniformly
    from that family. After every step d d = 0 is re-verified and homology
    over Z and Z/2 and the Euler characteristic are compared with the start.
    """
    rng = random.Random(seed)
    start, chi0 = _profiles(d)
    used = {l for h in d.handles for l in h}
    counter = 0
    moves: list[Move] = []
    cur = d
    for _ in range(steps):
        while f"n{counter}" in used or f"n{counter + 1}" in used:
            counter += 1
        fresh = (f"n{counter}", f"n{counter + 1}")
        fams = _families(cur, fresh)
        if not fams:
            break
        names = sorted(fams)
        fam = rng.choices(names, weights=[FUZZ_WEIGHTS[f] for f in names])[0]
        count, pick = fams[fam]
        move = pick(rng.randrange(count))
        if fam == "create":
            used.update(fresh)
            counter += 2
        moves.append(move)
        try:
            cur = move.apply(cur)
            now, chi = _profiles(cur)
        except HandleHomologyError as exc:
            journal = MoveJournal(d, tuple(moves), cur)
            raise InvarianceViolation(f"step {len(moves)}: {move.to_line()}: {exc}", journal) from exc
        if now != start or chi != chi0:
            journal = MoveJournal(d, tuple(moves), cur)
            raise InvarianceViolation(
                f"step {len(moves)}: {move.to_line()} changed invariants", journal
            )
    return MoveJournal(d, tuple(moves), cur)
