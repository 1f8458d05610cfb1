"""Parser and printer for the motive expression language.

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := 'L' | 'A' nat | 'P' nat | 'Gm' ('^' nat)? | 'pt' '(' nat ')'
            | 'coh' '(' path ')' | '(' expr ')'

Whitespace between tokens is ignored. ``+``, ``-`` and ``*`` associate to
the left.
"""

from __future__ import annotations

from typing import Callable

from .endo import EndoComplex
from .motive import (
    Affine,
    Cohomology,
    Diff,
    Lefschetz,
    MotiveExpr,
    Point,
    Prod,
    Projective,
    Sum,
    Torus,
)

_KEYWORDS = ("coh", "Gm", "pt", "L", "A", "P")


class MotiveSyntaxError(ValueError):
    def __init__(self, message: str, line: int, column: int, expected: tuple[str, ...] = ()):
        self.line = line
        self.column = column
        self.expected = tuple(sorted(set(expected)))
        detail = f"; expected one of: {', '.join(self.expected)}" if self.expected else ""
        super().__init__(f"line {line}, column {column}: {message}{detail}")


class _Parser:
    def __init__(self, src: str, load: Callable[[str], EndoComplex]):
        self.src = src
        self.pos = 0
        self.load = load

    def where(self, pos: int | None = None) -> tuple[int, int]:
        pos = self.pos if pos is None else pos
        before = self.src[:pos]
        line = before.count("\n") + 1
        col = pos - (before.rfind("\n") + 1) + 1
        return line, col

    def fail(self, message: str, expected=(), pos: int | None = None):
        line, col = self.where(pos)
        raise MotiveSyntaxError(message, line, col, tuple(expected))

    def skip_ws(self):
        while self.pos < len(self.src) and self.src[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.src[self.pos] if self.pos < len(self.src) else ""

    def found(self) -> str:
        c = self.peek()
        return repr(c) if c else "end of input"

    def expect(self, ch: str):
        if self.peek() != ch:
            self.fail(f"unexpected {self.found()}", [repr(ch)])
        self.pos += 1

    def nat(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.src) and self.src[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.fail(f"unexpected {self.found()}", ["natural number"])
        return int(self.src[start : self.pos])

    def parse(self) -> MotiveExpr:
        node = self.expr()
        if self.peek():
            self.fail(f"unexpected {self.found()}", ["'+'", "'-'", "'*'", "end of input"])
        return node

    def expr(self) -> MotiveExpr:
        node = self.term()
        while self.peek() in ("+", "-"):
            op = self.src[self.pos]
            self.pos += 1
            rhs = self.term()
            node = Sum(node, rhs) if op == "+" else Diff(node, rhs)
        return node

    def term(self) -> MotiveExpr:
        node = self.factor()
        while self.peek() == "*":
            self.pos += 1
            node = Prod(node, self.factor())
        return node

    def factor(self) -> MotiveExpr:
        factor_start = ["'L'", "'A'", "'P'", "'Gm'", "'pt'", "'coh'", "'('"]
        c = self.peek()
        if c == "(":
            self.pos += 1
            node = self.expr()
            self.expect(")")
            return node
        start = self.pos
        word = next((kw for kw in _KEYWORDS if self.src.startswith(kw, self.pos)), None)
        if word is None:
            self.fail(f"unexpected {self.found()}", factor_start)
        self.pos += len(word)
        if word == "L":
            return Lefschetz()
        if word == "A":
            return Affine(self.nat())
        if word == "P":
            return Projective(self.nat())
        if word == "Gm":
            if self.peek() == "^":
                self.pos += 1
                return Torus(self.nat())
            return Torus(1)
        if word == "pt":
            self.expect("(")
            at = self.pos
            m = self.nat()
            if m < 1:
                self.fail("point degree must be at least 1", pos=at)
            self.expect(")")
            return Point(m)
        # coh(path): the path runs to the closing parenthesis
        self.expect("(")
        end = self.src.find(")", self.pos)
        if end < 0:
            self.fail("unterminated path", ["')'"], pos=len(self.src))
        path = self.src[self.pos : end].strip()
        if not path:
            self.fail("empty path", ["path"])
        try:
            complex_ = self.load(path)
        except (OSError, ValueError) as exc:
            self.fail(f"cannot load cohomology data {path!r}: {exc}", pos=start)
        self.pos = end + 1
        return Cohomology(complex_, path)


def _default_loader(path: str) -> EndoComplex:
    from .formats import load_cohomology

    return load_cohomology(path).complex


def parse_motive(src: str, load_cohomology: Callable[[str], EndoComplex] | None = None) -> MotiveExpr:
    """Parse motive DSL text; ``coh(path)`` files are read through ``load_cohomology``."""
    return _Parser(src, load_cohomology or _default_loader).parse()


def to_source(x: MotiveExpr) -> str:
    """Print ``x`` so that ``parse_motive(to_source(x)) == x``."""
    if isinstance(x, Point):
        return f"pt({x.m})"
    if isinstance(x, Lefschetz):
        return "L"
    if isinstance(x, Affine):
        return f"A{x.n}"
    if isinstance(x, Projective):
        return f"P{x.n}"
    if isinstance(x, Torus):
        return "Gm" if x.r == 1 else f"Gm^{x.r}"
    if isinstance(x, Cohomology):
        if x.source is None:
            raise ValueError("cohomology data without a source path cannot be printed")
        return f"coh({x.source})"
    if isinstance(x, (Sum, Diff)):
        op = "+" if isinstance(x, Sum) else "-"
        right = to_source(x.right)
        if isinstance(x.right, (Sum, Diff)):
            right = f"({right})"
        return f"{to_source(x.left)} {op} {right}"
    if isinstance(x, Prod):
        left, right = to_source(x.left), to_source(x.right)
        if isinstance(x.left, (Sum, Diff)):
            left = f"({left})"
        if isinstance(x.right, (Sum, Diff, Prod)):
            right = f"({right})"
        return f"{left} * {right}"
    raise TypeError(f"not a motive expression: {x!r}")
