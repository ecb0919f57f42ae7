"""The CLI expression mini-language: parser, printer, evaluator, formatters.

Atoms cover the power-sum/Schur/generator basis elements and every named
family; unary operators are omega, alt, ddp1; binary +, -, * and plethysm
(f∘g, ASCII alias f@g); series forms H/E/Hpm/Epm/inv with an explicit
truncation order plus ge2. A family atom with its degree slot omitted denotes
the whole graded series truncated by the enclosing context.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .numtheory import PrimeSet
from .partitions import Partition, partitions_of
from .repmodules import PsiSpec, SubsetRule, from_psi
from .schur import from_schur, to_schur
from .series import (
    SymSeries,
    alt_transform,
    family_series,
    outer_apply,
    plethystic_inverse,
    standard_series,
)
from .symfunc import PowerSumPoly, generator, h_of, e_of, omega, p1_derivative


class ExprError(ValueError):
    """Syntax or type error with the byte offset where it happened."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at offset {pos})")
        self.message = message
        self.pos = pos


# -- tokens -----------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z][A-Za-z0-9]*)|(?P<op>∘|@|[-+*/(){}\[\],;])|(?P<bad>\S))"
)


@dataclass(frozen=True)
class Token:
    kind: str  # int | name | op | end
    text: str
    pos: int


def tokenize(src: str) -> list:
    out = []
    i = 0
    while i < len(src):
        m = _TOKEN_RE.match(src, i)
        if not m:
            break
        if m.group("bad"):
            raise ExprError(f"unexpected character {m.group('bad')!r}", m.start("bad"))
        for kind in ("int", "name", "op"):
            if m.group(kind):
                out.append(Token(kind, m.group(kind), m.start(kind)))
                break
        i = m.end()
    out.append(Token("end", "", len(src)))
    return out


# -- AST --------------------------------------------------------------------


@dataclass(frozen=True)
class Node:
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Scalar(Node):
    value: Fraction = Fraction(0)


@dataclass(frozen=True)
class BasisAtom(Node):
    kind: str = "p"  # p | s
    partition: Partition = Partition(())


@dataclass(frozen=True)
class GenAtom(Node):
    kind: str = "h"  # h | e
    degree: int = 0


@dataclass(frozen=True)
class FamilyAtom(Node):
    name: str = "Lie"
    degree: Optional[int] = None  # None means the whole series
    primes: Optional[PrimeSet] = None
    r: Optional[int] = None
    rule: Optional[SubsetRule] = None


@dataclass(frozen=True)
class Unary(Node):
    op: str = "omega"  # omega | alt | ddp1
    child: Node = None


@dataclass(frozen=True)
class BinOp(Node):
    op: str = "+"  # + | - | * | pleth
    left: Node = None
    right: Node = None


@dataclass(frozen=True)
class SeriesForm(Node):
    kind: str = "H"  # H | E | Hpm | Epm | inv | ge2
    child: Node = None
    order: Optional[int] = None  # None only for ge2


UNARY_NAMES = ("omega", "alt", "ddp1")
SERIES_NAMES = ("H", "E", "Hpm", "Epm", "inv", "ge2")
FAMILY_NAMES = ("Lie", "Lie2", "Conj", "L", "Lbar", "Foulkes", "fT")


class Parser:
    def __init__(self, src: str):
        self.src = src
        self.tokens = tokenize(src)
        self.i = 0

    def peek(self) -> Token:
        return self.tokens[self.i]

    def next(self) -> Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, text: str) -> Token:
        tok = self.next()
        if tok.text != text:
            raise ExprError(f"expected {text!r}, found {tok.text or 'end of input'!r}", tok.pos)
        return tok

    # expr := term (('+'|'-') term)*
    def parse_expr(self) -> Node:
        tok = self.peek()
        if tok.text == "-":
            self.next()
            node = BinOp(tok.pos, "-", Scalar(tok.pos, Fraction(0)), self.parse_term())
        else:
            node = self.parse_term()
        while self.peek().text in ("+", "-"):
            op = self.next()
            node = BinOp(op.pos, op.text, node, self.parse_term())
        return node

    # term := factor ('*' factor)*
    def parse_term(self) -> Node:
        node = self.parse_factor()
        while self.peek().text == "*":
            op = self.next()
            node = BinOp(op.pos, "*", node, self.parse_factor())
        return node

    # factor := primary (('∘'|'@') primary)*
    def parse_factor(self) -> Node:
        node = self.parse_primary()
        while self.peek().text in ("∘", "@"):
            op = self.next()
            node = BinOp(op.pos, "pleth", node, self.parse_primary())
        return node

    def parse_primary(self) -> Node:
        tok = self.peek()
        if tok.kind == "int":
            return self.parse_scalar()
        if tok.text == "(":
            self.next()
            node = self.parse_expr()
            self.expect(")")
            return node
        if tok.kind == "name":
            return self.parse_named()
        raise ExprError(f"expected an expression, found {tok.text or 'end of input'!r}", tok.pos)

    def parse_scalar(self) -> Node:
        tok = self.next()
        value = Fraction(int(tok.text))
        if self.peek().text == "/":
            self.next()
            den = self.next()
            if den.kind != "int" or int(den.text) == 0:
                raise ExprError("expected a nonzero integer denominator", den.pos)
            value /= int(den.text)
        return Scalar(tok.pos, value)

    def parse_partition(self) -> Partition:
        open_tok = self.expect("[")
        parts = []
        if self.peek().text != "]":
            while True:
                tok = self.next()
                if tok.kind != "int":
                    raise ExprError("expected a part", tok.pos)
                parts.append(int(tok.text))
                if self.peek().text == ",":
                    self.next()
                    continue
                break
        self.expect("]")
        try:
            return Partition(parts)
        except ValueError as exc:
            raise ExprError(str(exc), open_tok.pos) from None

    def parse_prime_set(self) -> PrimeSet:
        bar = False
        if self.peek().text == "bar":
            bar = True
            self.next()
        open_tok = self.expect("{")
        primes = []
        if self.peek().text != "}":
            while True:
                tok = self.next()
                if tok.kind != "int":
                    raise ExprError("expected a prime", tok.pos)
                primes.append(int(tok.text))
                if self.peek().text == ",":
                    self.next()
                    continue
                break
        self.expect("}")
        try:
            s = PrimeSet.of(*primes)
        except ValueError as exc:
            raise ExprError(str(exc), open_tok.pos) from None
        return s.bar if bar else s

    def parse_rule(self) -> SubsetRule:
        tok = self.peek()
        if tok.text == "{":
            self.next()
            values = []
            if self.peek().text != "}":
                while True:
                    t = self.next()
                    if t.kind != "int":
                        raise ExprError("expected an integer", t.pos)
                    values.append(int(t.text))
                    if self.peek().text == ",":
                        self.next()
                        continue
                    break
            self.expect("}")
            return SubsetRule.explicit(values)
        if tok.kind == "name" and tok.text in ("le", "div", "mod1", "pow"):
            self.next()
            self.expect("(")
            k = self.next()
            if k.kind != "int":
                raise ExprError("expected an integer argument", k.pos)
            self.expect(")")
            maker = {"le": SubsetRule.up_to, "div": SubsetRule.divisors_of,
                     "mod1": SubsetRule.one_mod, "pow": SubsetRule.powers_of}[tok.text]
            try:
                return maker(int(k.text))
            except ValueError as exc:
                raise ExprError(str(exc), k.pos) from None
        if tok.kind == "name" and tok.text == "coprime":
            self.next()
            self.expect("(")
            s = self.parse_prime_set()
            self.expect(")")
            return SubsetRule.coprime_to(s.primes)
        if tok.kind == "name" and tok.text == "all":
            self.next()
            return SubsetRule.everything()
        raise ExprError(f"expected a subset rule, found {tok.text!r}", tok.pos)

    def parse_named(self) -> Node:
        tok = self.next()
        name = tok.text
        if name in ("p", "s") and self.peek().text == "[":
            return BasisAtom(tok.pos, name, self.parse_partition())
        if name in ("h", "e"):
            self.expect("(")
            deg = self.next()
            if deg.kind != "int":
                raise ExprError("expected a degree", deg.pos)
            self.expect(")")
            return GenAtom(tok.pos, name, int(deg.text))
        if name in UNARY_NAMES:
            self.expect("(")
            child = self.parse_expr()
            self.expect(")")
            return Unary(tok.pos, name, child)
        if name in SERIES_NAMES:
            self.expect("(")
            child = self.parse_expr()
            if name == "ge2":
                self.expect(")")
                return SeriesForm(tok.pos, name, child, None)
            self.expect(";")
            order = self.next()
            if order.kind != "int":
                raise ExprError("expected a truncation order", order.pos)
            self.expect(")")
            return SeriesForm(tok.pos, name, child, int(order.text))
        if name in ("Lie", "Lie2", "Conj"):
            degree = None
            if self.peek().text == "(":
                self.next()
                deg = self.next()
                if deg.kind != "int":
                    raise ExprError("expected a degree", deg.pos)
                self.expect(")")
                degree = int(deg.text)
            return FamilyAtom(tok.pos, name, degree)
        if name in ("L", "Lbar"):
            self.expect("(")
            degree = None
            if self.peek().kind == "int":
                deg = self.next()
                degree = int(deg.text)
                self.expect(";")
            s = self.parse_prime_set()
            self.expect(")")
            return FamilyAtom(tok.pos, name, degree, primes=s)
        if name == "Foulkes":
            self.expect("(")
            first = self.next()
            if first.kind != "int":
                raise ExprError("expected an integer", first.pos)
            if self.peek().text == ",":
                self.next()
                second = self.next()
                if second.kind != "int":
                    raise ExprError("expected an integer", second.pos)
                self.expect(")")
                return FamilyAtom(tok.pos, name, int(first.text), r=int(second.text))
            self.expect(")")
            return FamilyAtom(tok.pos, name, None, r=int(first.text))
        if name == "fT":
            self.expect("(")
            degree = None
            if self.peek().kind == "int":
                deg = self.next()
                degree = int(deg.text)
                self.expect(";")
            rule = self.parse_rule()
            self.expect(")")
            return FamilyAtom(tok.pos, name, degree, rule=rule)
        raise ExprError(f"unknown name {name!r}", tok.pos)


def parse(src: str):
    parser = Parser(src)
    node = parser.parse_expr()
    tail = parser.peek()
    if tail.kind != "end":
        raise ExprError(f"unexpected trailing input {tail.text!r}", tail.pos)
    return node


# -- printer (round-trips through parse) ------------------------------------


def to_string(node: Node) -> str:
    if isinstance(node, Scalar):
        return str(node.value)
    if isinstance(node, BasisAtom):
        return f"{node.kind}{node.partition}"
    if isinstance(node, GenAtom):
        return f"{node.kind}({node.degree})"
    if isinstance(node, FamilyAtom):
        return _family_str(node)
    if isinstance(node, Unary):
        return f"{node.op}({to_string(node.child)})"
    if isinstance(node, SeriesForm):
        if node.kind == "ge2":
            return f"ge2({to_string(node.child)})"
        return f"{node.kind}({to_string(node.child)};{node.order})"
    if isinstance(node, BinOp):
        if node.op == "pleth":
            return f"({to_string(node.left)})@({to_string(node.right)})"
        return f"({to_string(node.left)}){node.op}({to_string(node.right)})"
    raise TypeError(f"not an expression node: {node!r}")


def _family_str(node: FamilyAtom) -> str:
    if node.name in ("Lie", "Lie2", "Conj"):
        return node.name if node.degree is None else f"{node.name}({node.degree})"
    if node.name in ("L", "Lbar"):
        s = "{" + ",".join(str(p) for p in node.primes.primes) + "}"
        if node.primes.complement and node.name == "L":
            s = "bar" + s
        head = f"{node.name}("
        return head + (f"{node.degree};{s})" if node.degree is not None else f"{s})")
    if node.name == "Foulkes":
        if node.degree is None:
            return f"Foulkes({node.r})"
        return f"Foulkes({node.degree},{node.r})"
    if node.name == "fT":
        rule = node.rule.describe()
        if node.degree is None:
            return f"fT({rule})"
        return f"fT({node.degree};{rule})"
    raise ValueError(node.name)


# -- evaluation --------------------------------------------------------------


def _family_spec(node: FamilyAtom) -> PsiSpec:
    if node.name == "Lie":
        return PsiSpec.moebius()
    if node.name == "Conj":
        return PsiSpec.totient()
    if node.name == "Lie2":
        return PsiSpec.prime_set(PrimeSet.of(2))
    if node.name == "L":
        return PsiSpec.prime_set(node.primes)
    if node.name == "Lbar":
        base = PrimeSet(node.primes.primes)
        return PsiSpec.prime_set(base.bar if not node.primes.complement else base)
    if node.name == "Foulkes":
        return PsiSpec.foulkes(node.r)
    if node.name == "fT":
        return PsiSpec.subset(node.rule)
    raise ValueError(node.name)


def _series_p1_derivative(f: SymSeries) -> SymSeries:
    comps = {d - 1: p1_derivative(f.component(d)) for d in range(1, f.trunc + 1)}
    return SymSeries.from_components(comps, f.trunc)


def evaluate_node(node: Node, trunc: int) -> SymSeries:
    if isinstance(node, Scalar):
        return SymSeries.from_poly(PowerSumPoly.scalar(node.value), trunc)
    if isinstance(node, BasisAtom):
        poly = PowerSumPoly.p_of(node.partition) if node.kind == "p" else from_schur(node.partition)
        return SymSeries.from_poly(poly, max(trunc, node.partition.size))
    if isinstance(node, GenAtom):
        return SymSeries.from_poly(generator(node.kind, node.degree), max(trunc, node.degree))
    if isinstance(node, FamilyAtom):
        spec = _family_spec(node)
        if node.name == "Foulkes" and node.degree is not None:
            if not 1 <= node.r <= node.degree:
                raise ExprError("cyclic weight index must lie between 1 and the degree", node.pos)
        if node.degree is not None:
            return SymSeries.from_poly(from_psi(spec, node.degree), max(trunc, node.degree))
        return family_series(spec, max(trunc, 1))
    if isinstance(node, Unary):
        inner = evaluate_node(node.child, trunc)
        if node.op == "omega":
            return inner.omega()
        if node.op == "alt":
            return alt_transform(inner)
        if node.op == "ddp1":
            return _series_p1_derivative(inner)
        raise ExprError(f"unknown operator {node.op!r}", node.pos)
    if isinstance(node, SeriesForm):
        if node.kind == "ge2":
            return evaluate_node(node.child, trunc).ge2()
        order = node.order
        inner = evaluate_node(node.child, order)
        if inner.trunc > order:
            inner = inner.retrunc(order)
        if inner.has_constant_term():
            raise ExprError("series argument must have no constant term", node.pos)
        if node.kind == "inv":
            try:
                return plethystic_inverse(inner)
            except ValueError as exc:
                raise ExprError(str(exc), node.pos) from None
        return outer_apply(standard_series(node.kind, order), inner)
    if isinstance(node, BinOp):
        left = evaluate_node(node.left, trunc)
        right = evaluate_node(node.right, trunc)
        if node.op == "+":
            return left + right
        if node.op == "-":
            return left - right
        if node.op == "*":
            return left * right
        if node.op == "pleth":
            if right.has_constant_term():
                raise ExprError("plethysm needs a right argument with no constant term",
                                node.pos)
            return outer_apply(left, right)
        raise ExprError(f"unknown operator {node.op!r}", node.pos)
    raise TypeError(f"not an expression node: {node!r}")


# -- basis conversion at the display boundary ---------------------------------


def _solve_in_basis(poly: PowerSumPoly, n: int, kind: str) -> dict:
    """Expand a homogeneous degree-n element in products of h or e generators."""
    lams = list(partitions_of(n))
    build = h_of if kind == "h" else e_of
    basis = [build(lam) for lam in lams]
    mus = list(partitions_of(n))
    index = {mu: i for i, mu in enumerate(mus)}
    size = len(mus)
    matrix = [[Fraction(0)] * size for _ in range(size)]
    for col, vec in enumerate(basis):
        for mu, c in vec.terms.items():
            matrix[index[mu]][col] = c
    rhs = [poly.coeff(mu) for mu in mus]
    sol = _gauss_solve(matrix, rhs)
    return {lam: c for lam, c in zip(lams, sol) if c}


def _gauss_solve(matrix: list, rhs: list) -> list:
    n = len(rhs)
    a = [row[:] + [rhs[i]] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col]), None)
        if pivot is None:
            raise ValueError("singular basis matrix")
        a[col], a[pivot] = a[pivot], a[col]
        inv = 1 / a[col][col]
        a[col] = [v * inv for v in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                factor = a[r][col]
                a[r] = [v - factor * w for v, w in zip(a[r], a[col])]
    return [a[r][n] for r in range(n)]


def expansion_terms(series: SymSeries, basis: str, degree: Optional[int] = None) -> list:
    """Sorted (degree, partition, coefficient) triples in the requested basis."""
    degrees = [degree] if degree is not None else list(range(series.trunc + 1))
    out = []
    for d in degrees:
        if d > series.trunc or d < 0:
            raise ValueError(f"degree {d} beyond truncation order {series.trunc}")
        comp = series.component(d)
        if comp.is_zero():
            continue
        if basis == "p":
            items = sorted(comp.terms.items())
        elif basis == "s":
            items = to_schur(comp, d).sorted_items()
        elif basis in ("h", "e"):
            items = sorted(_solve_in_basis(comp, d, basis).items())
        else:
            raise ValueError(f"unknown basis {basis!r}")
        for lam, c in items:
            out.append((d, lam, c))
    return out


def evaluate(src: str, basis: str = "p", degree: Optional[int] = None,
             trunc: int = 10) -> list:
    """Parse and evaluate; returns sorted (degree, partition, coeff) triples."""
    node = parse(src)
    ctx = max(trunc, degree or 0)
    series = evaluate_node(node, ctx)
    return expansion_terms(series, basis, degree)


def render_terms(terms: list, fmt: str = "text") -> str:
    if fmt == "text":
        return "\n".join(f"{c}\t{lam}" for _, lam, c in terms)
    if fmt == "json":
        import json

        return json.dumps({str(lam): str(c) for _, lam, c in terms})
    if fmt == "csv":
        lines = ["degree,partition,coeff"]
        lines += [f'{d},"{lam}",{c}' for d, lam, c in terms]
        return "\n".join(lines)
    raise ValueError(f"unknown format {fmt!r}")
