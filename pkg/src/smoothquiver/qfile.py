"""Reading and writing the line-oriented quiver text format.

::

    # comment
    vertex a
    vertex b
    arrow a b alpha      # optional third token names the arrow
    arrow b a
    d 2 2
    n 2 2
    theta 0 0            # rationals such as 1/2 are accepted

``vertex`` lines fix the vertex order; repeated ``arrow`` lines give
parallel arrows, enumerated in input order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import QuiverInputError
from .quiver import DimVec, Quiver, Stability

__all__ = ["QuiverSyntaxError", "QuiverFile", "parse_quiver_text", "read_quiver_file", "format_quiver"]


class QuiverSyntaxError(QuiverInputError):
    def __init__(self, message: str, line: int, col: int, source: str = "<input>"):
        super().__init__(f"{source}:{line}:{col}: {message}")
        self.line, self.col, self.source, self.reason = line, col, source, message


@dataclass(frozen=True)
class QuiverFile:
    quiver: Quiver
    d: Optional[DimVec] = None
    n: Optional[DimVec] = None
    theta: Optional[Stability] = None
    source: str = "<input>"
    end_line: int = 1

    def require(self, *fields: str) -> None:
        for f in fields:
            if getattr(self, f) is None:
                raise QuiverSyntaxError(f"missing '{f}' line", self.end_line, 1, self.source)

    @property
    def stability(self) -> Stability:
        """The declared theta, or the zero stability when none is given."""
        return self.theta if self.theta is not None else Stability.zero(self.quiver.num_vertices)


def _tokens(line: str) -> list[tuple[str, int]]:
    """Whitespace-separated tokens with 1-based columns, comments stripped."""
    out, k = [], 0
    text = line.split("#", 1)[0]
    while k < len(text):
        if text[k].isspace():
            k += 1
            continue
        start = k
        while k < len(text) and not text[k].isspace():
            k += 1
        out.append((text[start:k], start + 1))
    return out


def parse_quiver_text(text: str, source: str = "<input>") -> QuiverFile:
    vertices: list[str] = []
    arrows: list[tuple] = []
    vectors: dict[str, tuple] = {}
    lines = text.splitlines()

    def fail(msg, ln, col):
        raise QuiverSyntaxError(msg, ln, col, source)

    for ln, line in enumerate(lines, 1):
        toks = _tokens(line)
        if not toks:
            continue
        (kw, kcol), args = toks[0], toks[1:]
        if kw == "vertex":
            if len(args) != 1:
                fail("'vertex' takes exactly one name", ln, kcol)
            name, col = args[0]
            if name in vertices:
                fail(f"duplicate vertex {name!r}", ln, col)
            if vectors:
                fail("vertices must be declared before d, n and theta", ln, kcol)
            vertices.append(name)
        elif kw == "arrow":
            if len(args) not in (2, 3):
                fail("'arrow' takes a source, a target and an optional name", ln, kcol)
            for name, col in args[:2]:
                if name not in vertices:
                    fail(f"unknown vertex {name!r}", ln, col)
            arrows.append(tuple(t for t, _ in args))
        elif kw in ("d", "n", "theta"):
            if kw in vectors:
                fail(f"duplicate '{kw}' line", ln, kcol)
            if len(args) != len(vertices):
                col = args[len(vertices)][1] if len(args) > len(vertices) else len(line.rstrip()) + 1
                fail(f"'{kw}' needs {len(vertices)} entries, got {len(args)}", ln, col)
            vals = []
            for tok, col in args:
                try:
                    v = Fraction(tok) if kw == "theta" else int(tok)
                except ValueError:
                    fail(f"bad {'rational' if kw == 'theta' else 'integer'} {tok!r}", ln, col)
                if kw != "theta" and v < 0:
                    fail(f"negative entry {tok!r}", ln, col)
                vals.append(v)
            vectors[kw] = tuple(vals)
        else:
            fail(f"unknown keyword {kw!r}", ln, kcol)
    if not vertices:
        fail("no vertices declared", max(len(lines), 1), 1)
    quiver = Quiver(vertices, arrows)
    theta = Stability(vectors["theta"]) if "theta" in vectors else None
    return QuiverFile(quiver, vectors.get("d"), vectors.get("n"), theta, source, len(lines) + 1)


def read_quiver_file(path: str) -> QuiverFile:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise QuiverSyntaxError(f"cannot read file: {exc.strerror}", 0, 0, path) from None
    return parse_quiver_text(text, path)


def format_quiver(quiver: Quiver, d: Optional[Sequence[int]] = None, n: Optional[Sequence[int]] = None,
                  theta: Optional[Stability] = None) -> str:
    """Inverse of the parser (arrow names always written)."""
    out = [f"vertex {v}" for v in quiver.vertices]
    out += [f"arrow {quiver.vertices[a.source]} {quiver.vertices[a.target]} {a.name}" for a in quiver.arrows]
    for kw, vec in (("d", d), ("n", n), ("theta", theta.weights if theta is not None else None)):
        if vec is not None:
            out.append(kw + " " + " ".join(str(x) for x in vec))
    return "\n".join(out) + "\n"
