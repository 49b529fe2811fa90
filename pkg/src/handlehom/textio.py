"""Plain-text interchange format for decompositions and move journals.

Grammar, one statement per line, ``#`` starts a comment::

    dimension <n>
    relative <true|false>
    orientation <oriented|cooriented|mod2>
    handle <k> <label>
    intersect <k> <k-handle-label> <(k-1)-handle-label> <integer>

A journal is a decomposition followed by move lines (``slide``, ``cancel``,
``create``, ``reorient``).
"""

from __future__ import annotations

from .core import HandleDecomposition, OrientationMode, Ring
from .duality import DualityReport, DualityRow
from .errors import FormatSyntaxError, SemanticError
from .homology import AbelianGroup
from .moves import MOVE_KEYWORDS, MoveJournal, parse_move

_BOOLS = {"true": True, "false": False}


def serialize(d: HandleDecomposition) -> str:
    """Canonical text for ``d``: handles by degree then label, entries by (row, column) label."""
    out = [
        f"dimension {d.dimension}",
        f"relative {'true' if d.relative else 'false'}",
        f"orientation {d.orientation_mode.value}",
    ]
    for k, labels in enumerate(d.handles):
        for l in sorted(labels):
            out.append(f"handle {k} {l}")
    for k in sorted(d.intersections):
        for (nu, mu), v in sorted(d.intersections[k].items()):
            out.append(f"intersect {k} {mu} {nu} {v}")
    return "\n".join(out) + "\n"


def _tokens(line: str):
    # (column, token) pairs, columns 1-based; comment text dropped
    body = line.split("#", 1)[0]
    toks = []
    i = 0
    while i < len(body):
        if body[i].isspace():
            i += 1
            continue
        j = i
        while j < len(body) and not body[j].isspace():
            j += 1
        toks.append((i + 1, body[i:j]))
        i = j
    return toks


def _int(tok, lineno, col, what):
    try:
        return int(tok)
    except ValueError:
        raise FormatSyntaxError(f"{what} must be an integer, got {tok!r}", lineno, col) from None


def _split_lines(text: str):
    return text.replace("\r\n", "\n").split("\n")


def parse(text: str) -> HandleDecomposition:
    """Parse decomposition text. Move lines are rejected; see :func:`parse_journal`."""
    d, moves = _parse(text, allow_moves=False)
    return d


def _parse(text: str, allow_moves: bool):
    dimension = None
    relative = None
    orientation = None
    handles: list[list[str]] = []
    entries: dict[int, dict[tuple[str, str], int]] = {}
    pending = []  # intersect statements, resolved once all handles are known
    moves = []
    in_moves = False

    for lineno, line in enumerate(_split_lines(text), start=1):
        toks = _tokens(line)
        if not toks:
            continue
        col, kw = toks[0]
        args = toks[1:]
        if kw in MOVE_KEYWORDS:
            if not allow_moves:
                raise FormatSyntaxError(f"move line {kw!r} outside a journal", lineno, col)
            in_moves = True
            try:
                moves.append(parse_move(" ".join(t for _, t in toks)))
            except ValueError as exc:
                raise FormatSyntaxError(str(exc), lineno, col) from None
            continue
        if in_moves:
            raise FormatSyntaxError(f"{kw!r} after move lines", lineno, col)

        def arity(n):
            if len(args) != n:
                raise FormatSyntaxError(f"{kw} takes {n} argument(s), got {len(args)}", lineno, col)

        if kw == "dimension":
            arity(1)
            if dimension is not None:
                raise SemanticError("dimension given twice", lineno, col)
            n = _int(args[0][1], lineno, args[0][0], "dimension")
            if n < 0:
                raise SemanticError(f"bad dimension {n}", lineno, args[0][0])
            dimension = n
            handles = [[] for _ in range(n + 1)]
        elif kw == "relative":
            arity(1)
            if args[0][1] not in _BOOLS:
                raise FormatSyntaxError(f"expected true or false, got {args[0][1]!r}", lineno, args[0][0])
            relative = _BOOLS[args[0][1]]
        elif kw == "orientation":
            arity(1)
            try:
                orientation = OrientationMode(args[0][1])
            except ValueError:
                raise FormatSyntaxError(
                    f"unknown orientation {args[0][1]!r}", lineno, args[0][0]
                ) from None
        elif kw == "handle":
            arity(2)
            if dimension is None:
                raise SemanticError("handle before dimension", lineno, col)
            k = _int(args[0][1], lineno, args[0][0], "handle index")
            if not 0 <= k <= dimension:
                raise SemanticError(f"handle index {k} outside 0..{dimension}", lineno, args[0][0])
            label = args[1][1]
            if label in handles[k]:
                raise SemanticError(f"duplicate {k}-handle {label!r}", lineno, args[1][0])
            handles[k].append(label)
        elif kw == "intersect":
            arity(4)
            if dimension is None:
                raise SemanticError("intersect before dimension", lineno, col)
            k = _int(args[0][1], lineno, args[0][0], "degree")
            v = _int(args[3][1], lineno, args[3][0], "intersection number")
            if not 1 <= k <= dimension:
                raise SemanticError(f"intersect degree {k} outside 1..{dimension}", lineno, args[0][0])
            pending.append((lineno, k, args[1], args[2], v, args[3][0]))
        else:
            raise FormatSyntaxError(f"unknown statement {kw!r}", lineno, col)

    if dimension is None:
        raise SemanticError("missing dimension line")
    orientation = orientation or OrientationMode.ORIENTED
    for lineno, k, (mcol, mu), (ncol, nu), v, vcol in pending:
        if mu not in handles[k]:
            raise SemanticError(f"undeclared {k}-handle {mu!r}", lineno, mcol)
        if nu not in handles[k - 1]:
            raise SemanticError(f"undeclared {k - 1}-handle {nu!r}", lineno, ncol)
        if (nu, mu) in entries.setdefault(k, {}):
            raise SemanticError(f"intersection ({mu}, {nu}) given twice", lineno, mcol)
        if orientation is OrientationMode.MOD2 and v not in (0, 1):
            raise SemanticError(f"mod-2 entry must be 0 or 1, got {v}", lineno, vcol)
        entries[k][(nu, mu)] = v
    d = HandleDecomposition(
        dimension,
        tuple(tuple(h) for h in handles),
        entries,
        relative=bool(relative),
        orientation_mode=orientation,
    )
    return d, moves


def serialize_journal(j: MoveJournal) -> str:
    lines = [serialize(j.initial).rstrip("\n"), "# moves"]
    lines.extend(m.to_line() for m in j.moves)
    return "\n".join(lines) + "\n"


def parse_journal(text: str) -> MoveJournal:
    """Parse and replay a journal; the result is recomputed from the moves."""
    d, moves = _parse(text, allow_moves=True)
    return MoveJournal(d, tuple(moves))


def _group_tokens(g: AbelianGroup) -> str:
    return f"{g.free_rank} {','.join(map(str, g.torsion)) or '-'}"


def serialize_report(r: DualityReport) -> str:
    """Line-oriented form of a duality report.

    ``row <k> <free> <torsion> <free> <torsion>`` gives H^k and then the dual
    H_{n-k}; torsion is comma-separated or ``-`` when empty.
    """
    out = [f"ring {r.ring.value}", f"dimension {r.dimension}"]
    for row in r.rows:
        out.append(f"row {row.degree} {_group_tokens(row.cohomology)} {_group_tokens(row.dual_homology)}")
    out.append(f"all_isomorphic {'true' if r.all_isomorphic else 'false'}")
    return "\n".join(out) + "\n"


def parse_report(text: str) -> DualityReport:
    """Inverse of :func:`serialize_report`; ``all_isomorphic`` is recomputed from the rows."""
    ring = dimension = None
    rows = []
    for lineno, line in enumerate(_split_lines(text), start=1):
        toks = _tokens(line)
        if not toks:
            continue
        kw = toks[0][1]
        vals = [t for _, t in toks[1:]]
        try:
            if kw == "ring":
                ring = Ring(vals[0])
            elif kw == "dimension":
                dimension = int(vals[0])
            elif kw == "row":
                k, f1, t1, f2, t2 = vals
                rows.append(DualityRow(int(k), _group(f1, t1), _group(f2, t2)))
            elif kw != "all_isomorphic":
                raise FormatSyntaxError(f"unknown statement {kw!r}", lineno, toks[0][0])
        except (ValueError, IndexError):
            raise FormatSyntaxError(f"malformed {kw} line", lineno, toks[0][0]) from None
    if ring is None or dimension is None:
        raise SemanticError("report needs ring and dimension lines")
    return DualityReport(ring, dimension, tuple(rows))


def _group(free: str, torsion: str) -> AbelianGroup:
    ts = () if torsion == "-" else tuple(int(x) for x in torsion.split(","))
    return AbelianGroup(int(free), ts)
