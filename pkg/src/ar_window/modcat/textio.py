"""
Text formats for algebras and modules.

Algebra files:

    field 32003
    vertex <id> [label]
    arrow <name> <src> <tgt>
    relation 1*a.b + -1*c.d = 0

Module files (matrices row-major, shape dim(target) x dim(source)):

    name <text>
    dim <vertex> <n>
    matrix <arrow> <rows> <cols> <entries...>
"""

import re
import shlex
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

import numpy as np

from ar_window.errors import ParseError, PresentationError, RepresentationError
from ar_window.modcat.algebra import DEFAULT_NILPOTENCE_BOUND, AlgebraPresentation
from ar_window.modcat.linalg import DEFAULT_PRIME
from ar_window.modcat.representation import Representation

PathLike = Union[str, Path]

_TERM = re.compile(r"^(?:([+-]?\d+)\s*\*\s*|([+-]))?\s*([A-Za-z_][\w]*(?:\.[A-Za-z_][\w]*)*)$")


def parse_relation(text: str) -> List[Tuple[int, Tuple[str, ...]]]:
    """'2*a.b - c.d = 0' -> [(2, ('a', 'b')), (-1, ('c', 'd'))]"""
    if "=" in text:
        lhs, rhs = text.split("=", 1)
        if rhs.strip() != "0":
            raise ValueError("relation must read '<combination> = 0'")
    else:
        lhs = text
    normalised = re.sub(r"(?<=[\w\s])-\s*(?=[A-Za-z_\d])", "+ -", lhs.strip())
    terms = []
    for chunk in normalised.split("+"):
        chunk = chunk.strip()
        if not chunk:
            continue
        match = _TERM.match(chunk)
        if not match:
            raise ValueError(f"cannot read term {chunk!r}")
        coef_text, sign, path = match.groups()
        if coef_text is not None:
            coef = int(coef_text)
        else:
            coef = -1 if sign == "-" else 1
        terms.append((coef, tuple(path.split("."))))
    if not terms:
        raise ValueError("empty relation")
    return terms


def loads_algebra(
    text: str,
    source: str = "<string>",
    p: Optional[int] = None,
    nilpotence_bound: int = DEFAULT_NILPOTENCE_BOUND,
    default_p: int = DEFAULT_PRIME,
) -> AlgebraPresentation:
    """``p`` overrides the file's field line; ``default_p`` applies when it has none"""
    field_order: Optional[int] = None
    vertices: List[int] = []
    labels: Dict[int, str] = {}
    arrows: List[Tuple[str, int, int]] = []
    relations = []

    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        kind, _, rest = line.partition(" ")
        rest = rest.strip()
        try:
            if kind == "field":
                field_order = int(rest)
            elif kind == "vertex":
                parts = shlex.split(rest)
                if not parts:
                    raise ParseError("vertex line needs an id", source, number)
                vid = int(parts[0])
                vertices.append(vid)
                if len(parts) > 1:
                    labels[vid] = parts[1]
            elif kind == "arrow":
                parts = rest.split()
                if len(parts) != 3:
                    raise ParseError("arrow line needs <name> <src> <tgt>", source, number)
                arrows.append((parts[0], int(parts[1]), int(parts[2])))
            elif kind == "relation":
                relations.append(parse_relation(rest))
            else:
                raise ParseError(f"unknown record type {kind!r}", source, number)
        except ValueError as e:
            raise ParseError(str(e), source, number) from e

    order = p if p is not None else (field_order if field_order is not None else default_p)
    try:
        algebra = AlgebraPresentation(
            vertices, arrows, relations, p=order, labels=labels, nilpotence_bound=nilpotence_bound
        )
        algebra.algebra  # builds kQ/I; raises on non-admissible relations
    except PresentationError as e:
        raise PresentationError(f"{source}: {e}") from e
    return algebra


def dumps_algebra(a: AlgebraPresentation) -> str:
    lines = [f"field {a.p}"]
    for v in a.vertices:
        label = a.label(v)
        lines.append(f"vertex {v}" if label == str(v) else f"vertex {v} {shlex.quote(label)}")
    for arrow in a.arrows:
        lines.append(f"arrow {arrow.name} {arrow.source} {arrow.target}")
    for relation in a.relations:
        lines.append(f"relation {relation}")
    return "\n".join(lines) + "\n"


def loads_module(
    text: str, algebra: AlgebraPresentation, source: str = "<string>"
) -> Representation:
    name = ""
    dims: Dict[int, int] = {}
    matrices: Dict[str, np.ndarray] = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        kind, _, rest = line.partition(" ")
        parts = rest.split()
        try:
            if kind == "name":
                name = rest.strip()
            elif kind == "dim":
                if len(parts) != 2:
                    raise ParseError("dim line needs <vertex> <n>", source, number)
                dims[int(parts[0])] = int(parts[1])
            elif kind == "matrix":
                if len(parts) < 3:
                    raise ParseError("matrix line needs <arrow> <rows> <cols>", source, number)
                rows, cols = int(parts[1]), int(parts[2])
                entries = [int(x) for x in parts[3:]]
                if len(entries) != rows * cols:
                    raise ParseError(
                        f"matrix {parts[0]} needs {rows * cols} entries, got {len(entries)}",
                        source,
                        number,
                    )
                matrices[parts[0]] = np.array(entries, dtype=np.int64).reshape(rows, cols)
            else:
                raise ParseError(f"unknown record type {kind!r}", source, number)
        except ValueError as e:
            raise ParseError(str(e), source, number) from e
    try:
        return Representation(algebra, dims, matrices, name=name)
    except RepresentationError as e:
        raise ParseError(str(e), source) from e


def dumps_module(m: Representation) -> str:
    lines = []
    if m.name:
        lines.append(f"name {m.name}")
    for v in m.vertices:
        lines.append(f"dim {v} {m.dim(v)}")
    for arrow in m.algebra.arrows:
        mat = m.matrix(arrow.name)
        entries = " ".join(str(int(x)) for x in mat.reshape(-1))
        lines.append(f"matrix {arrow.name} {mat.shape[0]} {mat.shape[1]} {entries}".rstrip())
    return "\n".join(lines) + "\n"


def read_algebra(
    path: PathLike,
    p: Optional[int] = None,
    nilpotence_bound: int = DEFAULT_NILPOTENCE_BOUND,
    default_p: int = DEFAULT_PRIME,
) -> AlgebraPresentation:
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    return loads_algebra(text, str(path), p, nilpotence_bound, default_p)


def read_module(path: PathLike, algebra: AlgebraPresentation) -> Representation:
    path = Path(path)
    return loads_module(path.read_text(encoding="utf-8"), algebra, str(path))

