"""The ring-construction expression language.

Grammar (whitespace between tokens is ignored)::

    expr  := atom | atom "x" expr
    atom  := "Z" int | "M(" int "," expr ")" | "T(" int "," expr ")"
           | "GR(" expr "," gexpr ")" | "TrivExt(" expr ")"
           | "Quot(" expr ",J)" | "Corner(" expr "," int ")"
    gexpr := "C" int | "C" int "*" gexpr

Both products are right-associative.  :func:`render` produces the canonical
spelling, which parses back to an equal tree.
"""

from dataclasses import dataclass
from typing import Optional, Union

from .errors import ParseError

MAX_INT = 2**31 - 1


@dataclass(frozen=True)
class Zn:
    n: int


@dataclass(frozen=True)
class Mat:
    k: int
    ring: "RingExpr"


@dataclass(frozen=True)
class Tri:
    k: int
    ring: "RingExpr"


@dataclass(frozen=True)
class Prod:
    left: "RingExpr"
    right: "RingExpr"


@dataclass(frozen=True)
class GR:
    ring: "RingExpr"
    group: "GroupExpr"


@dataclass(frozen=True)
class TrivExt:
    ring: "RingExpr"


@dataclass(frozen=True)
class Quot:
    ring: "RingExpr"
    ideal: str = "J"


@dataclass(frozen=True)
class Corner:
    ring: "RingExpr"
    e: int


@dataclass(frozen=True)
class C:
    n: int


@dataclass(frozen=True)
class GProd:
    left: "GroupExpr"
    right: "GroupExpr"


RingExpr = Union[Zn, Mat, Tri, Prod, GR, TrivExt, Quot, Corner]
GroupExpr = Union[C, GProd]

# atom keywords, longest first so prefixes do not shadow them
_ATOMS = ("TrivExt(", "Corner(", "Quot(", "GR(", "M(", "T(", "Z")


def render(node) -> str:
    if isinstance(node, Zn):
        return f"Z{node.n}"
    if isinstance(node, Mat):
        return f"M({node.k},{render(node.ring)})"
    if isinstance(node, Tri):
        return f"T({node.k},{render(node.ring)})"
    if isinstance(node, Prod):
        return f"{render(node.left)}x{render(node.right)}"
    if isinstance(node, GR):
        return f"GR({render(node.ring)},{render(node.group)})"
    if isinstance(node, TrivExt):
        return f"TrivExt({render(node.ring)})"
    if isinstance(node, Quot):
        return f"Quot({render(node.ring)},{node.ideal})"
    if isinstance(node, Corner):
        return f"Corner({render(node.ring)},{node.e})"
    if isinstance(node, C):
        return f"C{node.n}"
    if isinstance(node, GProd):
        return f"{render(node.left)}*{render(node.right)}"
    raise TypeError(f"not an expression node: {node!r}")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def offset(self, pos=None) -> int:
        pos = self.pos if pos is None else pos
        return len(self.text[:pos].encode("utf-8"))

    def fail(self, message, expected=(), reason="syntax", pos=None):
        raise ParseError(message, self.offset(pos), expected, reason)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self, token: str) -> bool:
        self.skip()
        return self.text.startswith(token, self.pos)

    def accept(self, token: str) -> bool:
        if self.peek(token):
            self.pos += len(token)
            return True
        return False

    def expect(self, token: str):
        if not self.accept(token):
            got = self.text[self.pos:self.pos + 1] or "end of input"
            self.fail(f"expected {token!r}, found {got!r}", {token})

    def integer(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.fail("expected an integer", {"<int>"})
        value = int(self.text[start:self.pos])
        if value > MAX_INT:
            self.fail(f"integer {value} is too large", {"<int>"}, "integer-overflow", start)
        return value

    def expr(self):
        left = self.atom()
        if self.accept("x"):
            return Prod(left, self.expr())
        return left

    def atom(self):
        self.skip()
        start = self.pos
        for kw in _ATOMS:
            word = kw.rstrip("(")
            if not self.text.startswith(word, self.pos):
                continue
            if word == kw:
                self.pos += len(word)
                break
            # whitespace may separate a keyword from its parenthesis
            after = self.pos + len(word)
            while after < len(self.text) and self.text[after].isspace():
                after += 1
            if self.text.startswith("(", after):
                self.pos = after + 1
                break
        else:
            if self.pos >= len(self.text):
                self.fail("unexpected end of input", set(_ATOMS))
            end = self.pos
            while end < len(self.text) and self.text[end].isalnum():
                end += 1
            word = self.text[self.pos:max(end, self.pos + 1)]
            self.fail(f"unknown atom {word!r}", set(_ATOMS), "unknown-atom")
        if kw == "Z":
            return Zn(self.integer())
        if kw in ("M(", "T("):
            k = self.integer()
            self.expect(",")
            inner = self.expr()
            self.expect(")")
            return Mat(k, inner) if kw == "M(" else Tri(k, inner)
        if kw == "GR(":
            inner = self.expr()
            self.expect(",")
            group = self.gexpr()
            self.expect(")")
            return GR(inner, group)
        if kw == "TrivExt(":
            inner = self.expr()
            self.expect(")")
            return TrivExt(inner)
        if kw == "Quot(":
            inner = self.expr()
            self.expect(",")
            self.expect("J")
            self.expect(")")
            return Quot(inner)
        inner = self.expr()
        self.expect(",")
        e = self.integer()
        self.expect(")")
        return Corner(inner, e)

    def gexpr(self):
        self.expect("C")
        left = C(self.integer())
        if self.accept("*"):
            return GProd(left, self.gexpr())
        return left


def parse_ring_expr(text: str) -> RingExpr:
    """Parse ``text``; raises :class:`ParseError` with a byte offset."""
    p = _Parser(text)
    node = p.expr()
    p.skip()
    if p.pos != len(text):
        p.fail(f"unexpected trailing input {text[p.pos:p.pos + 8]!r}", {"x", "<end>"})
    return node


def canonical(text: str) -> str:
    return render(parse_ring_expr(text))


def _flatten(node, cls):
    if isinstance(node, cls):
        return _flatten(node.left, cls) + _flatten(node.right, cls)
    return [node]


def evaluate_group(node):
    from .constructions import make_cyclic_group, make_group_product

    if isinstance(node, C):
        return make_cyclic_group(node.n)
    parts = [evaluate_group(g) for g in _flatten(node, GProd)]
    return make_group_product(parts)


def evaluate(node, cap: Optional[int] = None):
    """Build the :class:`~ringlab.ring.FiniteRing` an expression denotes."""
    from . import constructions as C_
    from .structure import jacobson_radical

    name = render(node)
    if isinstance(node, Zn):
        return C_.make_zn(node.n, cap)
    if isinstance(node, (Mat, Tri)):
        return C_.make_matrix_ring(evaluate(node.ring, cap), node.k, isinstance(node, Tri), cap, name)
    if isinstance(node, Prod):
        factors = [evaluate(f, cap) for f in _flatten(node, Prod)]
        return C_.make_product(factors, cap, name)
    if isinstance(node, GR):
        return C_.make_group_ring(evaluate(node.ring, cap), evaluate_group(node.group), cap, name)
    if isinstance(node, TrivExt):
        return C_.make_trivial_extension(evaluate(node.ring, cap), cap=cap, provenance=name)
    if isinstance(node, Quot):
        R = evaluate(node.ring, cap)
        return C_.make_quotient(R, jacobson_radical(R), name)[0]
    if isinstance(node, Corner):
        return C_.corner_ring(evaluate(node.ring, cap), node.e, name)
    raise TypeError(f"not a ring expression: {node!r}")


def build(text: str, cap: Optional[int] = None):
    return evaluate(parse_ring_expr(text), cap)
