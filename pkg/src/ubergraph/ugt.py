"""Reader and writer for the line-oriented UGT text format.

::

    # comment
    mode cyclic                 # optional, default well-founded, before declarations
    vertex 1 2 3
    edge e1 = { 1 }
    edge e2 = { 1 e1 }

Build errors raised while parsing are annotated with the line and column of
the offending token.
"""

from __future__ import annotations

import re
from pathlib import Path

from .core import IDENT, Mode, Ubergraph, build
from .errors import (
    DuplicateEdgeSet,
    DuplicateLabel,
    DuplicateMember,
    EmptyEdge,
    FoundationViolation,
    InvalidLabel,
    UbergraphError,
    UgtSyntaxError,
    UnknownMember,
)

_TOKEN = re.compile(r"\s*(?:([A-Za-z0-9_-]+)|([={}])|(\S))")

Pos = tuple[int, int]


def _tokens(line: str, lineno: int) -> list[tuple[str, Pos]]:
    out = []
    pos = 0
    while pos < len(line):
        m = _TOKEN.match(line, pos)
        if m is None:  # trailing whitespace only
            break
        if m.group(3) is not None:
            raise UgtSyntaxError(f"unexpected character {m.group(3)!r}",
                                 line=lineno, column=m.start(3) + 1)
        tok = m.group(1) or m.group(2)
        out.append((tok, (lineno, m.start(m.lastindex) + 1)))
        pos = m.end()
    return out


def _ident(tok: str, pos: Pos, what: str) -> str:
    if not IDENT.fullmatch(tok):
        raise UgtSyntaxError(f"expected {what}, got {tok!r}", line=pos[0], column=pos[1])
    return tok


def parse(text: str | bytes) -> Ubergraph:
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise UgtSyntaxError(f"input is not UTF-8: {exc.reason}", line=1, column=1) from exc
    mode = Mode.WELL_FOUNDED
    mode_seen = False
    declared = False
    vertices: list[str] = []
    edges: list[tuple[str, list[str]]] = []
    decl_pos: dict[str, list[Pos]] = {}
    member_pos: dict[str, list[tuple[str, Pos]]] = {}

    for lineno, raw in enumerate(re.split(r"\r?\n", text), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        toks = _tokens(raw, lineno)
        head, head_pos = toks[0]
        if head == "mode":
            if mode_seen or declared:
                raise UgtSyntaxError("mode must appear once, before any declaration",
                                     line=lineno, column=head_pos[1])
            if len(toks) != 2 or toks[1][0] not in ("well-founded", "cyclic"):
                col = toks[1][1][1] if len(toks) > 1 else len(raw.rstrip()) + 1
                raise UgtSyntaxError("expected 'well-founded' or 'cyclic' after 'mode'",
                                     line=lineno, column=col)
            mode = Mode(toks[1][0])
            mode_seen = True
        elif head == "vertex":
            if len(toks) < 2:
                raise UgtSyntaxError("'vertex' needs at least one label",
                                     line=lineno, column=len(raw.rstrip()) + 1)
            for tok, pos in toks[1:]:
                vertices.append(_ident(tok, pos, "vertex label"))
                decl_pos.setdefault(tok, []).append(pos)
            declared = True
        elif head == "edge":
            label, members = _edge_decl(toks, lineno, len(raw.rstrip()) + 1)
            edges.append((label, [tok for tok, _ in members]))
            decl_pos.setdefault(label, []).append(toks[1][1])
            member_pos.setdefault(label, members)
            declared = True
        else:
            raise UgtSyntaxError(f"unknown declaration {head!r}", line=lineno, column=head_pos[1])

    try:
        return build(vertices, edges, mode)
    except UbergraphError as exc:
        _locate(exc, decl_pos, member_pos)
        raise


def _edge_decl(toks, lineno: int, eol: int):
    def expect(i: int, want: str) -> None:
        if i >= len(toks):
            raise UgtSyntaxError(f"expected {want!r}", line=lineno, column=eol)
        if toks[i][0] != want:
            raise UgtSyntaxError(f"expected {want!r}, got {toks[i][0]!r}",
                                 line=lineno, column=toks[i][1][1])

    if len(toks) < 2:
        raise UgtSyntaxError("expected edge label", line=lineno, column=eol)
    label = _ident(*toks[1], "edge label")
    expect(2, "=")
    expect(3, "{")
    members = []
    i = 4
    while i < len(toks) and toks[i][0] != "}":
        tok, pos = toks[i]
        members.append((_ident(tok, pos, "member label or '}'"), pos))
        i += 1
    expect(i, "}")
    if i + 1 < len(toks):
        raise UgtSyntaxError(f"unexpected {toks[i + 1][0]!r} after '}}'",
                             line=lineno, column=toks[i + 1][1][1])
    return label, members


def _locate(exc: UbergraphError, decl_pos, member_pos) -> None:
    label = exc.label
    pos = None
    if isinstance(exc, (DuplicateLabel, InvalidLabel)):
        occurrences = decl_pos.get(label, [])
        pos = occurrences[1] if len(occurrences) > 1 else (occurrences or [None])[0]
    elif isinstance(exc, (UnknownMember, DuplicateMember)):
        seen: set[str] = set()
        for tok, p in member_pos.get(label, []):
            bad = tok in seen if isinstance(exc, DuplicateMember) else tok not in decl_pos
            if bad:
                pos = p
                break
            seen.add(tok)
    elif isinstance(exc, (EmptyEdge, DuplicateEdgeSet, FoundationViolation)):
        pos = decl_pos.get(label, [None])[0]
    if pos is not None:
        exc.line, exc.column = pos


def serialize(u: Ubergraph) -> str:
    lines = []
    if u.mode is Mode.CYCLIC:
        lines.append("mode cyclic")
    if u.vertices:
        lines.append("vertex " + " ".join(u.vertices))
    for e, ms in u.edges.items():
        lines.append(f"edge {e} = {{ {' '.join(u.sorted_nodes(ms))} }}")
    return "".join(line + "\n" for line in lines)


def load(path: str | Path) -> Ubergraph:
    return parse(Path(path).read_bytes())


def dump(u: Ubergraph, path: str | Path) -> None:
    Path(path).write_text(serialize(u), encoding="utf-8", newline="\n")
