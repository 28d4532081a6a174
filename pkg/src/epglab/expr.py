"""Parser for group expressions used on the command line.

Grammar:

    atom := "C"n | "E"p"^"k | "D"n | "Q8" | "A"n | "S"n
          | "SL(n,q)" | "PSL(n,q)" | "PSU(3,q)" | "Sz(q)"
          | "M11" | "M12" | "M22" | "J1" | "K_A7"
    expr := atom | expr "x" expr | "CP(" expr "," expr ")" | "Quo(" expr ",Cyc)"

"x" is the direct product (left associative); CP is the central product over
canonical central involutions; Quo(e,Cyc) is the quotient by the cycliciser.
Parsing errors carry the byte offset of the offending token.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union


class ExprSyntaxError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


class ExprSemanticError(ValueError):
    pass


@dataclass(frozen=True)
class Atom:
    name: str
    args: tuple[int, ...] = ()

    def render(self) -> str:
        if self.name in ("C", "A", "S"):
            return f"{self.name}{self.args[0]}"
        if self.name == "D":
            return f"D{self.args[0]}"
        if self.name == "E":
            return f"E{self.args[0]}^{self.args[1]}"
        if self.name in ("SL", "PSL", "PSU"):
            return f"{self.name}({self.args[0]},{self.args[1]})"
        if self.name == "Sz":
            return f"Sz({self.args[0]})"
        return self.name


@dataclass(frozen=True)
class Product:
    left: "Expression"
    right: "Expression"

    def render(self) -> str:
        return f"{self.left.render()} x {self.right.render()}"


@dataclass(frozen=True)
class CentralProduct:
    left: "Expression"
    right: "Expression"

    def render(self) -> str:
        return f"CP({self.left.render()},{self.right.render()})"


@dataclass(frozen=True)
class QuotientByCyc:
    inner: "Expression"

    def render(self) -> str:
        return f"Quo({self.inner.render()},Cyc)"


Expression = Union[Atom, Product, CentralProduct, QuotientByCyc]


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg: str) -> ExprSyntaxError:
        return ExprSyntaxError(msg, self.pos)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        self.skip_ws()
        if self.peek() != ch:
            raise self.error(f"expected '{ch}'")
        self.pos += 1

    def number(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise self.error("expected a number")
        return int(self.text[start : self.pos])

    def word(self) -> str:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and (self.text[self.pos].isalnum()
                                             or self.text[self.pos] == "_"):
            self.pos += 1
        return self.text[start : self.pos]

    def parse(self) -> Expression:
        expr = self.parse_expr()
        self.skip_ws()
        if self.pos != len(self.text):
            raise self.error("trailing input")
        return expr

    def parse_expr(self) -> Expression:
        left = self.parse_atom()
        while True:
            self.skip_ws()
            save = self.pos
            if self.peek() in ("x", "X"):
                nxt = self.text[self.pos + 1 : self.pos + 2]
                if nxt == "" or nxt.isspace() or nxt.isalnum() or nxt in "(_":
                    self.pos += 1
                    right = self.parse_atom()
                    left = Product(left, right)
                    continue
            self.pos = save
            return left

    def parse_atom(self) -> Expression:
        self.skip_ws()
        start = self.pos
        w = self.word()
        if not w:
            raise self.error("expected a group atom")
        upper = w.upper()
        if upper == "CP":
            self.expect("(")
            left = self.parse_expr()
            self.expect(",")
            right = self.parse_expr()
            self.expect(")")
            return CentralProduct(left, right)
        if upper == "QUO":
            self.expect("(")
            inner = self.parse_expr()
            self.expect(",")
            tag = self.word()
            if tag != "Cyc":
                self.pos = start
                raise self.error("Quo expects ',Cyc)'")
            self.expect(")")
            return QuotientByCyc(inner)
        if upper in ("Q8", "M11", "M12", "M22", "J1"):
            return Atom(upper)
        if upper == "K_A7":
            return Atom("K_A7")
        if upper in ("SL", "PSL", "PSU", "SZ"):
            name = {"SL": "SL", "PSL": "PSL", "PSU": "PSU", "SZ": "Sz"}[upper]
            self.expect("(")
            a = self.number()
            if name == "Sz":
                self.expect(")")
                return Atom("Sz", (a,))
            self.expect(",")
            b = self.number()
            self.expect(")")
            if name == "PSU" and a != 3:
                raise ExprSemanticError("only PSU(3,q) is supported")
            return Atom(name, (a, b))
        head, digits = w[0], w[1:]
        if head in ("C", "D", "A", "S", "E") and digits:
            if head == "E":
                if not digits.isdigit():
                    self.pos = start
                    raise self.error(f"unknown atom '{w}'")
                p = int(digits)
                self.skip_ws()
                if self.peek() != "^":
                    raise self.error("elementary abelian needs 'E p^k'")
                self.pos += 1
                k = self.number()
                return Atom("E", (p, k))
            if not digits.isdigit():
                self.pos = start
                raise self.error(f"unknown atom '{w}'")
            n = int(digits)
            if head == "D":
                if n % 2 or n < 2:
                    raise ExprSemanticError(
                        f"D{n}: dihedral groups are named by even order (D. of order 2n)")
                return Atom("D", (n,))
            if head == "C":
                if n < 1:
                    raise ExprSemanticError("C needs order >= 1")
                return Atom("C", (n,))
            if head == "A":
                if n < 3:
                    raise ExprSemanticError("A needs n >= 3")
                return Atom("A", (n,))
            if head == "S":
                if n < 1:
                    raise ExprSemanticError("S needs n >= 1")
                return Atom("S", (n,))
        self.pos = start
        raise self.error(f"unknown atom '{w}'")


def parse(text: str) -> Expression:
    """Parse a group expression; canonical render() round-trips."""
    return _Parser(text).parse()
