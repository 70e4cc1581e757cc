"""
Text format for translation quivers.

    # comment
    v <id> <label> [truncated]
    a <src> <tgt> <d> <d'>
    t <z> <x>              # tau(z) = x

Labels containing blanks are shell-quoted. Output is deterministic (sorted ids).
"""

import shlex
from pathlib import Path
from typing import List, Tuple, Union

from ar_window.errors import ParseError, QuiverError
from ar_window.quiver.translation_quiver import ValuedTranslationQuiver, build

PathLike = Union[str, Path]


def dumps(q: ValuedTranslationQuiver) -> str:
    lines = [f"# vertices={len(q)} arrows={len(q.arrows)} translations={len(q.tau_map)}"]
    for v in q.vertices:
        flag = " truncated" if q.is_boundary(v) else ""
        lines.append(f"v {v} {shlex.quote(q.label(v))}{flag}")
    for (a, b), (d, d_prime) in sorted(q.arrows.items()):
        lines.append(f"a {a} {b} {d} {d_prime}")
    for z, x in sorted(q.tau_map.items()):
        lines.append(f"t {z} {x}")
    return "\n".join(lines) + "\n"


def loads(text: str, source: str = "<string>") -> ValuedTranslationQuiver:
    vertices: List[Tuple[int, str]] = []
    arrows: List[Tuple[int, int, int, int]] = []
    tau: List[Tuple[int, int]] = []
    boundary: List[int] = []

    for number, raw in enumerate(text.splitlines(), start=1):
        try:
            tokens = shlex.split(raw, comments=True)
        except ValueError as e:
            raise ParseError(str(e), source, number) from e
        if not tokens:
            continue
        kind, args = tokens[0], tokens[1:]
        try:
            if kind == "v":
                if len(args) < 2:
                    raise ParseError("vertex line needs an id and a label", source, number)
                vid = int(args[0])
                vertices.append((vid, args[1]))
                for flag in args[2:]:
                    if flag == "truncated":
                        boundary.append(vid)
                    elif flag not in ("projective", "injective"):
                        raise ParseError(f"unknown vertex flag {flag!r}", source, number)
            elif kind == "a":
                if len(args) != 4:
                    raise ParseError("arrow line needs <src> <tgt> <d> <d'>", source, number)
                src, tgt, d, d_prime = (int(x) for x in args)
                arrows.append((src, tgt, d, d_prime))
            elif kind == "t":
                if len(args) != 2:
                    raise ParseError("translation line needs <z> <x>", source, number)
                tau.append((int(args[0]), int(args[1])))
            else:
                raise ParseError(f"unknown record type {kind!r}", source, number)
        except ValueError as e:
            raise ParseError(f"expected integers: {raw.strip()!r}", source, number) from e

    try:
        return build(vertices, arrows, tau, boundary)
    except QuiverError as e:
        raise ParseError(str(e), source) from e


def read_quiver(path: PathLike) -> ValuedTranslationQuiver:
    path = Path(path)
    return loads(path.read_text(encoding="utf-8"), str(path))


def write_quiver(q: ValuedTranslationQuiver, path: PathLike) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dumps(q), encoding="utf-8")
    return path
