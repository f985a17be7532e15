"""Recursive-descent parser for bundle expressions.

Grammar (whitespace ignored, offsets reported in error messages):

    expr    := term ('+' term)*
    term    := factor ('*' factor)*
    factor  := func | atom | '(' expr ')'
    func    := ('Sym' '^' INT | 'Wedge' '^' INT) '(' expr ')' | 'Dual' '(' expr ')'
    atom    := 'UD' | 'U' | 'QD' | 'Q' | 'O' '(' SINT ')'
             | 'S' '[' SINT (',' SINT)* ']' ('UD'|'U'|'QD'|'Q')

The ambient G(k,n) is supplied by the caller, not the text.
"""

from __future__ import annotations

from . import bundles
from .bundles import BundleExpr
from .errors import ParseError


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def eat(self, literal: str) -> bool:
        self.skip_ws()
        if self.text.startswith(literal, self.pos):
            self.pos += len(literal)
            return True
        return False

    def expect(self, literal: str) -> None:
        if not self.eat(literal):
            raise ParseError(f"expected {literal!r}", self.pos)

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] in "+-":
            self.pos += 1
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start or not self.text[start:self.pos].lstrip("+-"):
            raise ParseError("expected an integer", start)
        return int(self.text[start:self.pos])


class _Parser:
    def __init__(self, text: str, k: int, n: int):
        self.s = _Scanner(text)
        self.k = k
        self.n = n

    def parse(self) -> BundleExpr:
        e = self.expr()
        self.s.skip_ws()
        if self.s.pos != len(self.s.text):
            raise ParseError("trailing input", self.s.pos)
        return e

    def expr(self) -> BundleExpr:
        out = self.term()
        while self.s.eat("+"):
            out = bundles.direct_sum(out, self.term())
        return out

    def term(self) -> BundleExpr:
        out = self.factor()
        while self.s.eat("*"):
            out = bundles.tensor(out, self.factor())
        return out

    def factor(self) -> BundleExpr:
        s = self.s
        if s.eat("("):
            e = self.expr()
            s.expect(")")
            return e
        if s.eat("Sym^"):
            m = s.integer()
            s.expect("(")
            e = self.expr()
            s.expect(")")
            return bundles.sym_power(e, m)
        if s.eat("Wedge^"):
            m = s.integer()
            s.expect("(")
            e = self.expr()
            s.expect(")")
            return bundles.wedge_power(e, m)
        if s.eat("Dual("):
            e = self.expr()
            s.expect(")")
            return bundles.dual(e)
        if s.eat("S["):
            lam = [s.integer()]
            while s.eat(","):
                lam.append(s.integer())
            s.expect("]")
            block = self.block_name()
            return bundles.schur(self.k, self.n, block, tuple(lam))
        if s.eat("O("):
            t = s.integer()
            s.expect(")")
            return bundles.line(self.k, self.n, t)
        # plain atoms; longest match first
        for name, builder in (
            ("UD", bundles.tautological_dual),
            ("QD", bundles.quotient_dual),
            ("U", bundles.tautological),
            ("Q", bundles.quotient),
        ):
            if s.eat(name):
                return builder(self.k, self.n)
        raise ParseError("expected an atom, Sym^, Wedge^, Dual or '('", s.pos)

    def block_name(self) -> str:
        for name in ("UD", "QD", "U", "Q"):
            if self.s.eat(name):
                return name
        raise ParseError("expected U, UD, Q or QD after the Schur label", self.s.pos)


def parse_bundle(text: str, k: int, n: int) -> BundleExpr:
    """Parse a bundle expression on G(k,n); raises ParseError with offset."""
    return _Parser(text, k, n).parse()


def render_bundle(expr: BundleExpr) -> str:
    """Canonical textual form that parse_bundle maps back to `expr`."""
    if expr.is_zero():
        raise ValueError("the zero expression has no literal in the grammar")
    parts = []
    for w, mult in expr.terms:
        up = ",".join(str(e) for e in w.upper)
        lo = ",".join(str(e) for e in w.lower)
        piece = f"S[{up}]UD*S[{lo}]QD"
        parts.extend([piece] * mult)
    return " + ".join(parts)
