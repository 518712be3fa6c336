"""Recursive-descent parser for group names, weights, angle vectors and tensor expressions.

Grammar (see ``docs/cli.md``)::

    group     := classical "(" int ")" | dynkin
    classical := "SU" | "PSU" | "SO" | "PSO" | "Spin" | "Sp" | "PSp" | "U"
    dynkin    := family int            family is one of A B C D E F G
    weight    := "[" int ("," int)* "]"
    tensor    := weight ("x" weight)*
    angles    := "[" real ("," real)* "]"
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from ..errors import DomainError, ParseError
from ..rootsys import (
    DynkinType,
    LatticeClass,
    Weight,
    adjoint_lattice,
    build_root_system,
    lattice_from_weights,
    simply_connected_lattice,
)

_TOKEN = re.compile(
    r"\s*(?:(?P<real>[+-]?(?:\d+\.\d*|\.\d+|\d+)(?:[eE][+-]?\d+)|[+-]?(?:\d+\.\d*|\.\d+))"
    r"|(?P<int>[+-]?\d+)|(?P<ident>[A-Za-z]+)|(?P<punct>[()\[\],/*⊗]))"
)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    pos: int


def tokenize(s: str) -> list[Token]:
    out, pos = [], 0
    s = s.rstrip()
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if m is None or m.end() == pos:
            raise ParseError(f"unexpected character {s[pos:].lstrip()[:1]!r} at position {pos}")
        kind = m.lastgroup
        out.append(Token(kind, m.group(kind), m.start(kind)))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    def peek(self) -> Token | None:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def next(self, what: str) -> Token:
        tok = self.peek()
        if tok is None:
            raise ParseError(f"expected {what} at end of {self.text!r}")
        self.i += 1
        return tok

    def expect(self, text: str) -> Token:
        tok = self.next(repr(text))
        if tok.text != text:
            raise ParseError(f"expected {text!r} at position {tok.pos}, got {tok.text!r}")
        return tok

    def integer(self) -> int:
        tok = self.next("an integer")
        if tok.kind != "int":
            raise ParseError(f"expected an integer at position {tok.pos}, got {tok.text!r}")
        return int(tok.text)

    def real(self) -> float:
        tok = self.next("a number")
        if tok.kind not in ("int", "real"):
            raise ParseError(f"expected a number at position {tok.pos}, got {tok.text!r}")
        return float(tok.text)

    def done(self):
        tok = self.peek()
        if tok is not None:
            raise ParseError(f"unexpected {tok.text!r} at position {tok.pos}")

    def bracket_list(self, item) -> tuple:
        self.expect("[")
        vals = [item()]
        while self.peek() is not None and self.peek().text == ",":
            self.i += 1
            vals.append(item())
        self.expect("]")
        return tuple(vals)

    def weight(self) -> Weight:
        return self.bracket_list(self.integer)

    def tensor(self) -> list[Weight]:
        factors = [self.weight()]
        while self.peek() is not None and self.peek().text in ("x", "*", "⊗"):
            self.i += 1
            factors.append(self.weight())
        return factors


def parse_weight(s: str) -> Weight:
    """``"[1, 0, 2]"`` -> ``(1, 0, 2)``."""
    p = _Parser(s)
    w = p.weight()
    p.done()
    return w


def parse_angles(s: str) -> tuple[float, ...]:
    p = _Parser(s)
    t = p.bracket_list(p.real)
    p.done()
    return t


def parse_tensor_expression(s: str) -> list[Weight]:
    """``"[1,0] x [0,1]"`` -> list of factor weights."""
    p = _Parser(s)
    factors = p.tensor()
    p.done()
    return factors


# ---------------------------------------------------------------------------
# Groups


@dataclass(frozen=True)
class GroupSpec:
    """A compact simple group: Dynkin type plus character lattice ``X(T)/Q``."""

    dynkin: DynkinType
    lattice: LatticeClass
    display_name: str = field(default="", compare=False)

    @property
    def root_system(self):
        return build_root_system(self.dynkin)

    @property
    def canonical_name(self) -> str:
        return canonical_name(self.dynkin, self.lattice)


_CLASSICAL = ("SU", "PSU", "SO", "PSO", "Spin", "Sp", "PSp", "U")


def _vector_lattice(t: DynkinType) -> LatticeClass:
    """Character lattice of SO(2n): Q plus the vector representation's weight."""
    rs = build_root_system(t)
    if t == DynkinType("A", 3):
        return lattice_from_weights(rs, [(0, 1, 0)])
    return lattice_from_weights(rs, [(1,) + (0,) * (t.rank - 1)])


def _classical(name: str, n: int) -> tuple[DynkinType, str]:
    """Type and lattice form ('sc', 'adj', 'vec') for a classical name."""
    if name == "U":
        raise ParseError(
            f"U({n}) is reductive, not semisimple; it is handled only by the harmonic "
            "commands (verify-harmonic)"
        )
    if n < 1:
        raise ParseError(f"{name}({n}): size must be positive")
    try:
        if name in ("SU", "PSU"):
            if n == 1:
                raise ParseError("SU(1) is the trivial group")
            return DynkinType("A", n - 1), ("sc" if name == "SU" else "adj")
        if name in ("Sp", "PSp"):
            return DynkinType.normalized("C", n), ("sc" if name == "Sp" else "adj")
        if name in ("Spin", "SO", "PSO"):
            if n <= 2:
                raise ParseError(f"{name}({n}) is abelian or trivial, not simple")
            if n == 4:
                raise ParseError(f"{name}(4) is not simple: D2 = A1 x A1")
            if n % 2:
                # SO(2n+1) is already centerless, so PSO(2n+1) names the same group
                t = DynkinType.normalized("B", (n - 1) // 2)
                return t, ("sc" if name == "Spin" else "adj")
            t = DynkinType.normalized("D", n // 2)
            return t, {"Spin": "sc", "SO": "vec", "PSO": "adj"}[name]
    except DomainError as exc:
        raise ParseError(str(exc)) from exc
    raise ParseError(f"unknown group name {name!r}")


def parse_group(s: str) -> GroupSpec:
    """Group name -> :class:`GroupSpec`.

    Classical names carry their own connected form; bare Dynkin names
    (``"E6"``, ``"B3"``) denote the simply-connected group.
    """
    p = _Parser(s)
    tok = p.next("a group name")
    if tok.kind != "ident":
        raise ParseError(f"expected a group name, got {tok.text!r}")
    if tok.text in _CLASSICAL:
        p.expect("(")
        n = p.integer()
        p.expect(")")
        p.done()
        t, form = _classical(tok.text, n)
    elif len(tok.text) == 1 and tok.text in "ABCDEFG":
        rank = p.integer()
        p.done()
        try:
            t = DynkinType.normalized(tok.text, rank)
        except DomainError as exc:
            raise ParseError(str(exc)) from exc
        form = "sc"
    else:
        raise ParseError(f"unknown group name {tok.text!r}")
    rs = build_root_system(t)
    lattice = {
        "sc": simply_connected_lattice,
        "adj": adjoint_lattice,
        "vec": lambda _: _vector_lattice(t),
    }[form](rs)
    return GroupSpec(t, lattice, s.strip())


def canonical_name(t: DynkinType, lattice: LatticeClass) -> str:
    """Preferred name for a group; re-parses to the same :class:`GroupSpec`.

    Forms without a classical name (for example a half-spin quotient of
    Spin(8), or adjoint E6) render as ``"<type>/X<order>"`` and are not
    accepted back by the parser.
    """
    sc, adj = lattice.is_simply_connected, lattice.is_adjoint
    n = t.rank
    if t.family == "A":
        if sc:
            return f"SU({n + 1})"
        if adj:
            return "SO(3)" if n == 1 else f"PSU({n + 1})"
        if n == 3 and lattice == _vector_lattice(t):
            return "SO(6)"
    elif t.family == "B":
        if sc:
            return f"Spin({2 * n + 1})"
        if adj:
            return f"SO({2 * n + 1})"
    elif t.family == "C":
        if sc:
            return f"Sp({n})"
        if adj:
            return f"PSp({n})"
    elif t.family == "D":
        if sc:
            return f"Spin({2 * n})"
        if adj:
            return f"PSO({2 * n})"
        if lattice == _vector_lattice(t):
            return f"SO({2 * n})"
    elif sc:
        return str(t)
    return f"{t}/X{lattice.order}"
