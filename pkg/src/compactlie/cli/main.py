"""``compactlie`` command-line entry point.

Every command renders a list of records. Text mode prints them as a
human-readable table; machine mode prints one whitespace-separated record
per line, led by a record tag. Both modes carry the same numbers (floats are
printed with ``repr`` in both). Formats are documented in ``docs/cli.md``.

Exit codes: 0 ok, 1 parse error, 2 domain error, 3 resource cap exceeded,
4 a verify-harmonic check failed.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from typing import Sequence

from .. import charmult, rootsys, tensor, weyl
from ..errors import DomainError, LieError, ParseError, ResourceError
from ..harmonic import DEFAULT_RESOLUTION, run_battery
from .grammar import (
    GroupSpec,
    canonical_name,
    parse_angles,
    parse_group,
    parse_tensor_expression,
    parse_weight,
)

EXIT_OK, EXIT_PARSE, EXIT_DOMAIN, EXIT_RESOURCE, EXIT_CHECK_FAILED = 0, 1, 2, 3, 4

COMMANDS = ("dim", "weights", "char-eval", "tensor", "center", "lattices", "weyl-order", "roots", "verify-harmonic")

# command -> (needs a group, number of positional arguments after the group)
_ARITY = {
    "dim": (True, 1),
    "weights": (True, 1),
    "char-eval": (True, 2),
    "tensor": (True, None),
    "center": (True, 0),
    "lattices": (True, 0),
    "weyl-order": (True, 0),
    "roots": (True, 0),
    "verify-harmonic": (False, 0),
}


@dataclass
class Query:
    command: str
    group: GroupSpec | None
    arguments: dict = field(default_factory=dict)


@dataclass
class Output:
    text: list[str]
    machine: list[str]
    code: int = EXIT_OK

    def render(self, fmt: str) -> str:
        return "\n".join(self.text if fmt == "text" else self.machine)


def _fmt_weight(w: Sequence[int]) -> str:
    return "(" + ",".join(map(str, w)) + ")"


def _csv(w: Sequence[int]) -> str:
    return ",".join(map(str, w))


def _group_text(factors: Sequence[int]) -> str:
    return " x ".join(f"Z{d}" for d in factors) if factors else "trivial"


def build_query(command: str, args: Sequence[str], *, method: str = "weight-sum",
                resolution: int | None = None, cap: int | None = None) -> Query:
    """Parse the positional arguments of one command into a :class:`Query`."""
    if command not in COMMANDS:
        raise ParseError(f"unknown command {command!r}; expected one of {', '.join(COMMANDS)}")
    needs_group, nargs = _ARITY[command]
    args = list(args)
    group = None
    if needs_group:
        if not args:
            raise ParseError(f"{command}: missing group name")
        group = parse_group(args.pop(0))
    qargs: dict = {"cap": cap}
    if command == "tensor":
        if not args:
            raise ParseError("tensor: missing tensor expression")
        qargs["factors"] = parse_tensor_expression(" ".join(args))
        if len(qargs["factors"]) < 2:
            raise ParseError("tensor: need at least two factors, e.g. '[1,0] x [0,1]'")
    else:
        if len(args) != nargs:
            raise ParseError(f"{command}: expected {nargs} argument(s) after the group, got {len(args)}")
        if command in ("dim", "weights", "char-eval"):
            qargs["weight"] = parse_weight(args[0])
        if command == "char-eval":
            qargs["angles"] = parse_angles(args[1])
            qargs["method"] = method
        if command == "verify-harmonic":
            qargs["resolution"] = DEFAULT_RESOLUTION if resolution is None else resolution
    return Query(command, group, qargs)


def _check_weight(group: GroupSpec, w: Sequence[int], dominant: bool = True) -> tuple[int, ...]:
    rs = group.root_system
    if len(w) != rs.rank:
        raise DomainError(f"weight {_fmt_weight(w)} has length {len(w)}; {group.canonical_name} has rank {rs.rank}")
    if dominant and any(c < 0 for c in w):
        raise DomainError(f"weight {_fmt_weight(w)} is not dominant")
    if rootsys.weight_class(rs, w) not in group.lattice:
        raise DomainError(
            f"weight {_fmt_weight(w)} is not in the character lattice of {group.canonical_name}: "
            "the representation does not factor through this group"
        )
    return tuple(w)


def run_query(q: Query) -> Output:
    """Execute a query; errors propagate as :class:`LieError` subclasses."""
    cap = q.arguments.get("cap")
    g = q.group
    if q.command == "verify-harmonic":
        rows = run_battery(q.arguments["resolution"])
        text = [f"{'check':<30} {'error':>24} {'tolerance':>10}  result"]
        machine = []
        for r in rows:
            verdict = "PASS" if r.passed else "FAIL"
            text.append(f"{r.name:<30} {r.error!r:>24} {r.tolerance!r:>10}  {verdict}")
            machine.append(f"check {r.name} {r.error!r} {r.tolerance!r} {verdict}")
        code = EXIT_OK if all(r.passed for r in rows) else EXIT_CHECK_FAILED
        return Output(text, machine, code)

    rs = g.root_system
    if q.command == "dim":
        lam = _check_weight(g, q.arguments["weight"])
        d = charmult.weyl_dim(rs, lam)
        return Output([str(d)], [f"dim {d}"])
    if q.command == "weights":
        lam = _check_weight(g, q.arguments["weight"])
        chi = charmult.formal_character(rs, lam, **({"cap": cap} if cap else {}))
        items = chi.sorted_items()
        return Output(
            [f"{m} × {_fmt_weight(w)}" for w, m in items],
            [f"weight {m} {_csv(w)}" for w, m in items],
        )
    if q.command == "char-eval":
        lam = _check_weight(g, q.arguments["weight"])
        t = q.arguments["angles"]
        if len(t) != rs.rank:
            raise DomainError(f"expected {rs.rank} angle(s), got {len(t)}")
        val = complex(charmult.eval_character(rs, lam, t, method=q.arguments["method"]))
        return Output([f"{val.real!r} {val.imag!r}i"], [f"value {val.real!r} {val.imag!r}"])
    if q.command == "tensor":
        factors = [_check_weight(g, w) for w in q.arguments["factors"]]
        kw = {"cap": cap} if cap else {}
        acc = tensor.Decomposition({factors[0]: 1})
        for nxt in factors[1:]:
            new: dict = {}
            for lam, m in acc.items():
                for nu, n in tensor.tensor_decompose(rs, lam, nxt, **kw).items():
                    new[nu] = new.get(nu, 0) + m * n
            acc = tensor.Decomposition(new)
        items = acc.sorted_items()
        return Output(
            [f"{m} × {_fmt_weight(w)}" for w, m in items],
            [f"summand {m} {_csv(w)}" for w, m in items],
        )
    if q.command == "center":
        # Z(G) is dual to X(T)/Q, hence isomorphic to it
        inv = rootsys.abelian_invariants(g.lattice.elements, g.lattice.moduli)
        return Output([_group_text(inv)], [" ".join(["center", *map(str, inv)])])
    if q.command == "lattices":
        text, machine = [], []
        for L in rootsys.enumerate_character_lattices(rs):
            inv = rootsys.abelian_invariants(L.elements, L.moduli)
            name = canonical_name(g.dynkin, L)
            mark = "*" if L == g.lattice else "-"
            gens = ";".join(_csv(c) for c in L.generators) or "-"
            text.append(f"{mark} X/Q = {_group_text(inv):<10} order {L.order:<3} generators {gens:<12} {name}")
            machine.append(f"lattice {mark} {_csv(inv) or '-'} {L.order} {gens} {name}")
        return Output(text, machine)
    if q.command == "weyl-order":
        n = weyl.weyl_order(rs, **({"cap": cap} if cap else {}))
        return Output([str(n)], [f"weyl-order {n}"])
    if q.command == "roots":
        text, machine = [], []
        for r in rs.positive_roots:
            w = rootsys.root_to_weight_coords(rs, r)
            h = sum(r)
            text.append(f"height {h:<3} {_fmt_weight(r):<20} weight {_fmt_weight(w)}")
            machine.append(f"root {h} {_csv(r)} {_csv(w)}")
        return Output(text, machine)
    raise ParseError(f"unknown command {q.command!r}")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(message)


def make_parser() -> argparse.ArgumentParser:
    p = _Parser(
        prog="compactlie",
        description="Structure and representation theory of compact simple Lie groups.",
    )
    p.add_argument("command", help=" | ".join(COMMANDS))
    p.add_argument("args", nargs="*", help="group name, then weights / angles / tensor expression")
    p.add_argument("--format", choices=("text", "machine"), default="text")
    p.add_argument("--method", choices=("weight-sum", "weyl-quotient"), default="weight-sum",
                   help="char-eval evaluation method")
    p.add_argument("--resolution", type=int, default=None, help="quadrature resolution (verify-harmonic)")
    p.add_argument("--cap", type=int, default=None, help="resource cap for weight diagrams and orbits")
    return p


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        ns = make_parser().parse_args(argv)
        if ns.resolution is not None and ns.resolution < 0:
            raise ParseError("--resolution must be nonnegative")
        if ns.cap is not None and ns.cap < 1:
            raise ParseError("--cap must be positive")
        q = build_query(ns.command, ns.args, method=ns.method, resolution=ns.resolution, cap=ns.cap)
        out = run_query(q)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ResourceError as exc:
        print(f"resource error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except LieError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    print(out.render(ns.format))
    return out.code


if __name__ == "__main__":
    sys.exit(main())
