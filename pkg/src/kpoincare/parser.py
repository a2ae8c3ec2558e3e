"""Expression language shared by the CLI and the REPL.

Grammar (whitespace insensitive)::

    expr    := term (('+' | '-') term)*
    term    := factor (('*' | '/') factor)*
    factor  := ('-' | '+')* atom ['^' int]
    atom    := int | name | generator | call | '(' expr ')'
    generator := 'L' '[' int ',' int ']' | ('x' | 'y') '[' int ']'
    call    := name '(' expr (',' expr)* ')'

Names are the scalars ``i``, ``q`` (= 1/kappa) and ``kappa``.  Calls are
``comm``, ``Delta``, ``S``, ``eps``, ``star``, ``ad``, ``d`` and ``wedge``.
Division is allowed only by scalars.

:func:`parse` returns a tree whose :func:`to_text` re-parses to an equal
tree; :func:`parse_latex` accepts the LaTeX produced by the renderers by
rewriting it into the text grammar first.  :func:`evaluate` computes the
value of a tree in an algebra context.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .algebra import AlgebraElement, TensorElement, get_algebra
from .forms import Form
from .scalars import ONE, Q, Scalar, scalar

CALLS = {"comm": 2, "Delta": 1, "S": 1, "eps": 1, "star": 1, "ad": 1, "d": 1, "wedge": 2}
SCALAR_NAMES = ("i", "q", "kappa")


class ExpressionError(ValueError):
    """A syntax or evaluation error located at (line, column), both 1-based."""

    def __init__(self, message: str, line: int = 1, col: int = 1, expected: tuple = ()):
        self.message = message
        self.line = line
        self.col = col
        self.expected = tuple(sorted(set(expected)))
        loc = f"line {line}, column {col}"
        tail = f" (expected one of: {', '.join(self.expected)})" if self.expected else ""
        super().__init__(f"{loc}: {message}{tail}")


class ParseError(ExpressionError):
    pass


class EvaluationError(ExpressionError):
    pass


# ---------------------------------------------------------------------------
# tree
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Node:
    pos: tuple = field(default=(1, 1), compare=False, repr=False, kw_only=True)


@dataclass(frozen=True)
class Num(Node):
    value: int


@dataclass(frozen=True)
class Name(Node):
    name: str


@dataclass(frozen=True)
class Gen(Node):
    kind: str
    indices: tuple


@dataclass(frozen=True)
class Call(Node):
    name: str
    args: tuple


@dataclass(frozen=True)
class Neg(Node):
    arg: Node


@dataclass(frozen=True)
class BinOp(Node):
    op: str
    left: Node
    right: Node


@dataclass(frozen=True)
class Pow(Node):
    base: Node
    exponent: int


_PREC = {"+": 1, "-": 1, "*": 2, "/": 2}


def to_text(node: Node) -> str:
    """Render a tree in the text grammar; ``parse(to_text(t)) == t``."""
    if isinstance(node, Num):
        return str(node.value)
    if isinstance(node, Name):
        return node.name
    if isinstance(node, Gen):
        return f"{node.kind}[{','.join(map(str, node.indices))}]"
    if isinstance(node, Call):
        return f"{node.name}({', '.join(to_text(a) for a in node.args)})"
    if isinstance(node, Neg):
        inner = to_text(node.arg)
        if isinstance(node.arg, BinOp):
            inner = f"({inner})"
        return "-" + inner
    if isinstance(node, Pow):
        base = to_text(node.base)
        if not isinstance(node.base, (Num, Name, Gen, Call)):
            base = f"({base})"
        return f"{base}^{node.exponent}"
    if isinstance(node, BinOp):
        p = _PREC[node.op]
        left = to_text(node.left)
        if isinstance(node.left, BinOp) and _PREC[node.left.op] < p:
            left = f"({left})"
        right = to_text(node.right)
        # the grammar is left-associative, so an equal-precedence right operand needs parentheses
        if isinstance(node.right, BinOp) and _PREC[node.right.op] <= p:
            right = f"({right})"
        elif isinstance(node.right, Neg):
            right = f"({right})"
        sep = f" {node.op} " if p == 1 else node.op
        return f"{left}{sep}{right}"
    raise TypeError(f"not an expression node: {node!r}")


# ---------------------------------------------------------------------------
# lexer and parser
# ---------------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^()\[\],]))")


@dataclass
class Token:
    kind: str  # "int", "name", "op", "end"
    text: str
    line: int
    col: int


def _position(src: str, offset: int) -> tuple[int, int]:
    line = src.count("\n", 0, offset) + 1
    col = offset - (src.rfind("\n", 0, offset) + 1) + 1
    return line, col


def tokenize(src: str) -> list[Token]:
    out = []
    k = 0
    while True:
        while k < len(src) and src[k].isspace():
            k += 1
        if k >= len(src):
            break
        m = _TOKEN.match(src, k)
        if not m or m.end() == k:
            line, col = _position(src, k)
            raise ParseError(f"unexpected character {src[k]!r}", line, col)
        kind = m.lastgroup
        start = m.start(kind)
        line, col = _position(src, start)
        out.append(Token(kind, m.group(kind), line, col))
        k = m.end()
    line, col = _position(src, len(src))
    out.append(Token("end", "", line, col))
    return out


_ATOM_START = ("integer", "name", "generator", "'('", "'-'", "'+'")


class _Parser:
    def __init__(self, src: str):
        self.toks = tokenize(src)
        self.k = 0

    @property
    def tok(self) -> Token:
        return self.toks[self.k]

    def fail(self, expected, message: str | None = None):
        t = self.tok
        found = "end of input" if t.kind == "end" else repr(t.text)
        raise ParseError(message or f"unexpected {found}", t.line, t.col, tuple(expected))

    def accept(self, text: str) -> Token | None:
        t = self.tok
        if t.kind == "op" and t.text == text:
            self.k += 1
            return t
        return None

    def expect(self, text: str) -> Token:
        t = self.accept(text)
        if t is None:
            self.fail([repr(text)])
        return t

    def expect_int(self) -> int:
        t = self.tok
        if t.kind != "int":
            self.fail(["integer"])
        self.k += 1
        return int(t.text)

    def parse(self) -> Node:
        node = self.expr()
        if self.tok.kind != "end":
            self.fail(["'+'", "'-'", "'*'", "'/'", "'^'", "end of input"])
        return node

    def expr(self) -> Node:
        node = self.term()
        while self.tok.kind == "op" and self.tok.text in "+-":
            t = self.tok
            self.k += 1
            node = BinOp(t.text, node, self.term(), pos=(t.line, t.col))
        return node

    def term(self) -> Node:
        node = self.factor()
        while self.tok.kind == "op" and self.tok.text in "*/":
            t = self.tok
            self.k += 1
            node = BinOp(t.text, node, self.factor(), pos=(t.line, t.col))
        return node

    def factor(self) -> Node:
        t = self.tok
        if self.accept("-"):
            return Neg(self.factor(), pos=(t.line, t.col))
        if self.accept("+"):
            return self.factor()
        node = self.atom()
        if self.tok.kind == "op" and self.tok.text == "^":
            t2 = self.tok
            self.k += 1
            node = Pow(node, self.expect_int(), pos=(t2.line, t2.col))
        return node

    def atom(self) -> Node:
        t = self.tok
        pos = (t.line, t.col)
        if t.kind == "int":
            self.k += 1
            return Num(int(t.text), pos=pos)
        if t.kind == "op" and t.text == "(":
            self.k += 1
            node = self.expr()
            self.expect(")")
            return node
        if t.kind != "name":
            self.fail(_ATOM_START)
        self.k += 1
        name = t.text
        if self.tok.kind == "op" and self.tok.text == "[":
            if name not in ("L", "x", "y"):
                raise ParseError(f"unknown generator {name!r}", t.line, t.col, ("'L'", "'x'", "'y'"))
            self.k += 1
            idx = [self.expect_int()]
            if name == "L":
                self.expect(",")
                idx.append(self.expect_int())
            self.expect("]")
            return Gen(name, tuple(idx), pos=pos)
        if self.tok.kind == "op" and self.tok.text == "(":
            if name not in CALLS:
                raise ParseError(f"unknown function {name!r}", t.line, t.col, tuple(map(repr, CALLS)))
            self.k += 1
            args = [self.expr()]
            while self.accept(","):
                args.append(self.expr())
            close = self.tok
            self.expect(")")
            if len(args) != CALLS[name]:
                raise ParseError(f"{name} takes {CALLS[name]} argument(s), got {len(args)}", close.line, close.col)
            return Call(name, tuple(args), pos=pos)
        if name in ("L", "x", "y"):
            self.fail(["'['"])
        if name not in SCALAR_NAMES:
            raise ParseError(f"unknown name {name!r}", t.line, t.col, tuple(map(repr, SCALAR_NAMES)))
        return Name(name, pos=pos)


def parse(src: str) -> Node:
    return _Parser(src).parse()


# ---------------------------------------------------------------------------
# LaTeX front end
# ---------------------------------------------------------------------------

_LATEX_TOKEN = re.compile(
    r"\s*(?:(?P<cmd>\\[A-Za-z]+|\\[,;! ])|(?P<int>\d+)|(?P<name>[A-Za-z])|(?P<op>[-+*/^_(){}\[\],]))"
)


def latex_to_text(src: str) -> str:
    """Rewrite the LaTeX dialect of the renderers into the text grammar.

    Handles ``\\frac{a}{b}``, ``\\kappa``, ``\\Lambda^{m}{}_{n}``, ``x^{m}``
    (an index, not a power), ``\\left( ... \\right)^{k}``, ``\\cdot`` and
    juxtaposition as multiplication.
    """
    toks = []
    k = 0
    while k < len(src):
        if src[k].isspace():
            k += 1
            continue
        m = _LATEX_TOKEN.match(src, k)
        if not m or m.end() == k:
            line, col = _position(src, k)
            raise ParseError(f"unexpected character {src[k]!r} in LaTeX input", line, col)
        toks.append((m.lastgroup, m.group(m.lastgroup), m.start(m.lastgroup)))
        k = m.end()
    out: list[str] = []
    pos = 0

    def peek(j=0):
        return toks[pos + j] if pos + j < len(toks) else ("end", "", len(src))

    def err(msg, expected=()):
        line, col = _position(src, peek()[2])
        raise ParseError(msg, line, col, expected)

    def take(text):
        nonlocal pos
        if peek()[1] != text:
            err(f"expected {text!r}", (repr(text),))
        pos += 1

    def braced_int() -> str:
        nonlocal pos
        if peek()[1] == "{":
            take("{")
            sign = ""
            if peek()[1] == "-":
                sign = "-"
                pos += 1
            if peek()[0] != "int":
                err("expected an integer", ("integer",))
            v = peek()[1]
            pos += 1
            take("}")
            return sign + v
        if peek()[0] != "int":
            err("expected an integer", ("integer", "'{'"))
        v = peek()[1][0]  # a bare superscript binds one digit
        t = toks[pos]
        if len(t[1]) > 1:
            toks[pos] = ("int", t[1][1:], t[2] + 1)
        else:
            pos += 1
        return v

    def group(stop) -> None:
        nonlocal pos
        prev_operand = False
        while True:
            kind, text, _ = peek()
            if kind == "end" or text in stop:
                return
            operand_start = (
                kind in ("int", "name")
                or text in ("\\frac", "\\kappa", "\\Lambda", "\\left", "(", "{")
            )
            if operand_start and prev_operand:
                out.append("*")
            if kind == "int" or (kind == "name" and text not in ("x", "y")):
                out.append(text)
                pos += 1
                prev_operand = True
            elif kind == "name":
                pos += 1
                take("^")
                out.append(f"{text}[{braced_int()}]")
                prev_operand = True
            elif text == "\\kappa":
                out.append("kappa")
                pos += 1
                prev_operand = True
            elif text == "\\Lambda":
                pos += 1
                take("^")
                mu = braced_int()
                if peek()[1] == "{" and peek(1)[1] == "}":
                    pos += 2
                take("_")
                out.append(f"L[{mu},{braced_int()}]")
                prev_operand = True
            elif text == "\\frac":
                pos += 1
                take("{")
                out.append("((")
                group({"}"})
                take("}")
                take("{")
                out.append(")/(")
                group({"}"})
                take("}")
                out.append("))")
                prev_operand = True
            elif text in ("\\left", "("):
                pos += 1
                if text == "\\left":
                    take("(")
                out.append("(")
                group({"\\right", ")"})
                if peek()[1] == "\\right":
                    pos += 1
                take(")")
                out.append(")")
                prev_operand = True
            elif text == "{":
                pos += 1
                out.append("(")
                group({"}"})
                take("}")
                out.append(")")
                prev_operand = True
            elif text == "^":
                pos += 1
                out.append(f"^{braced_int()}")
                prev_operand = True
            elif text == "\\cdot" or text == "*":
                out.append("*")
                pos += 1
                prev_operand = False
            elif text in ("+", "-", "/", ","):
                out.append(text)
                pos += 1
                prev_operand = False
            elif text in ("\\,", "\\;", "\\!", "\\ "):
                pos += 1
            elif kind == "cmd" and text[1:] in CALLS:
                out.append(text[1:])
                pos += 1
                prev_operand = False
            else:
                err(f"unsupported LaTeX token {text!r}")

    group(set())
    if peek()[0] != "end":
        err(f"unbalanced {peek()[1]!r}")
    return "".join(out)


def parse_latex(src: str) -> Node:
    return parse(latex_to_text(src))


# ---------------------------------------------------------------------------
# evaluation
# ---------------------------------------------------------------------------

@dataclass
class Context:
    algebra: str = "poincare"
    n: int = 4

    @property
    def alg(self):
        return get_algebra(self.algebra, self.n)


def _fail(node: Node, message: str) -> EvaluationError:
    return EvaluationError(message, *node.pos)


def evaluate(node: Node, ctx: Context | None = None):
    """Value of an expression: a Scalar, AlgebraElement, TensorElement or form."""
    ctx = ctx or Context()
    return _Eval(ctx).run(node)


class _Eval:
    def __init__(self, ctx: Context):
        self.ctx = ctx
        self.alg = ctx.alg

    def run(self, node: Node):
        if isinstance(node, Num):
            return scalar(node.value)
        if isinstance(node, Name):
            if node.name == "i":
                return Scalar.from_gauss(0, 1)
            if node.name == "q":
                return Q
            return Q.inverse()
        if isinstance(node, Gen):
            return self.generator(node)
        if isinstance(node, Neg):
            return -self.run(node.arg)
        if isinstance(node, Pow):
            base = self.run(node.base)
            try:
                return base ** node.exponent
            except TypeError:
                raise _fail(node, f"cannot raise {type(base).__name__} to a power") from None
        if isinstance(node, BinOp):
            return self.binop(node)
        if isinstance(node, Call):
            return self.call(node)
        raise TypeError(f"not an expression node: {node!r}")

    def generator(self, node: Gen):
        alg = self.alg
        kind = node.kind
        if kind == "y" and alg.kind != "minkowski":
            raise _fail(node, "generator y[m] needs the kappa-Minkowski algebra (--algebra minkowski)")
        if kind in ("L", "x") and alg.kind != "poincare":
            raise _fail(node, f"generator {kind}[...] needs the kappa-Poincare algebra; use y[m]")
        for v in node.indices:
            if not 0 <= v < alg.n:
                raise _fail(node, f"index {v} out of range 0..{alg.n - 1} for n = {alg.n}")
        return alg.L(*node.indices) if kind == "L" else alg.x(node.indices[0])

    def _lift(self, v):
        return self.alg.const(v) if isinstance(v, Scalar) else v

    def binop(self, node: BinOp):
        a, b = self.run(node.left), self.run(node.right)
        op = node.op
        if op == "/":
            if not isinstance(b, Scalar):
                raise _fail(node, "division is only defined by scalars")
            if not b:
                raise _fail(node, "division by zero")
            return a * b.inverse() if not isinstance(a, Scalar) else a / b
        if op == "*":
            if isinstance(a, Scalar) and not isinstance(b, Scalar):
                return b.scale(a)
            if isinstance(b, Scalar) and not isinstance(a, Scalar):
                return a.scale(b)
            try:
                out = a * b
            except Exception as e:  # mismatched tensor legs and the like
                raise _fail(node, str(e)) from None
            if out is NotImplemented:
                raise _fail(node, f"cannot multiply {type(a).__name__} by {type(b).__name__}")
            return out
        if isinstance(a, Scalar) != isinstance(b, Scalar):
            a, b = self._lift(a), self._lift(b)
        if type(a) is not type(b) and not (isinstance(a, Form) and isinstance(b, Form)):
            raise _fail(node, f"cannot add {type(a).__name__} and {type(b).__name__}")
        try:
            return a + b if op == "+" else a - b
        except Exception as e:
            raise _fail(node, str(e)) from None

    def call(self, node: Call):
        args = [self.run(a) for a in node.args]
        name = node.name
        alg = self.alg
        if name == "wedge":
            return self.wedge(node, *args)
        if name == "d":
            return self.d(node, args[0])
        a = args[0]
        if isinstance(a, Scalar):
            a = alg.const(a)
        if name == "comm":
            b = self._lift(args[1])
            if not (isinstance(a, AlgebraElement) and isinstance(b, AlgebraElement)):
                if isinstance(a, AlgebraElement) and isinstance(b, Form):
                    return a * b - b * a
                if isinstance(a, Form) and isinstance(b, AlgebraElement):
                    return a * b - b * a
                raise _fail(node, "comm needs algebra elements or an element and a form")
            return a * b - b * a
        if not isinstance(a, AlgebraElement):
            raise _fail(node, f"{name} needs an algebra element, got {type(a).__name__}")
        if name == "Delta":
            return a.coproduct()
        if name == "S":
            return a.antipode()
        if name == "eps":
            return a.counit()
        if name == "star":
            return a.star()
        if name == "ad":
            return a.adjoint()
        raise _fail(node, f"unknown function {name!r}")

    def d(self, node: Call, a):
        alg = self.alg
        if isinstance(a, Scalar):
            a = alg.const(a)
        if alg.kind == "minkowski":
            from . import minkowski as mk

            if isinstance(a, AlgebraElement):
                return mk.minkowski_d(a)
            if isinstance(a, mk.MinkowskiForm):
                return mk.d_oneform(a)
        else:
            if alg.n != 4:
                raise _fail(node, "the kappa-Poincare calculus is defined for n = 4 only")
            from . import calculus

            if isinstance(a, AlgebraElement):
                return calculus.d_algebra(a)
            if isinstance(a, calculus.OneForm):
                return calculus.d_oneform(a)
        raise _fail(node, f"d is not defined on {type(a).__name__}")

    def wedge(self, node: Call, u, v):
        alg = self.alg
        if alg.kind == "minkowski":
            from . import minkowski as mk

            if isinstance(u, mk.MinkowskiForm) and isinstance(v, mk.MinkowskiForm):
                return mk.minkowski_wedge(u, v)
        else:
            from . import calculus

            if isinstance(u, calculus.OneForm) and isinstance(v, calculus.OneForm):
                return calculus.wedge(u, v)
        raise _fail(node, "wedge needs two one-forms, e.g. wedge(d(x[0]), d(x[1]))")


def evaluate_text(src: str, ctx: Context | None = None, latex: bool = False):
    return evaluate(parse_latex(src) if latex else parse(src), ctx)


def render(value, fmt: str = "text") -> str:
    """Text or LaTeX rendering of an evaluation result."""
    if fmt == "latex":
        if isinstance(value, TensorElement):
            return _tensor_latex(value)
        return value.latex()
    return str(value)


def _tensor_latex(t: TensorElement) -> str:
    if not t.terms:
        return "0"
    parts = []
    for k, c in sorted(t.terms.items(), key=lambda kv: kv[0]):
        legs = " \\otimes ".join(alg.monomial_latex(m) for alg, m in zip(t.algs, k))
        if c == ONE:
            parts.append(legs)
        elif c == -ONE:
            parts.append("-" + legs)
        else:
            parts.append(f"\\left({c.latex()}\\right) {legs}")
    out = parts[0]
    for p in parts[1:]:
        out += (" - " + p[1:]) if p.startswith("-") else " + " + p
    return out


def normalize(expr, ctx: Context | None = None):
    """Normal form of ``expr``: source text, a parsed tree or an algebra element.

    Mixing generators of the two algebras is rejected by the evaluator.
    """
    if isinstance(expr, str):
        return evaluate_text(expr, ctx)
    if isinstance(expr, Node):
        return evaluate(expr, ctx)
    return expr * 1
