import re
import subprocess
import sys

import pytest

from compactlie.cli import build_query, main, parse_group, parse_tensor_expression, parse_weight, run_query
from compactlie.errors import ParseError
from compactlie.rootsys import DynkinType

# (name, type, order of X(T)/Q)
GROUP_TABLE = [
    ("SU(2)", "A1", 2), ("SU(4)", "A3", 4), ("SU(9)", "A8", 9), ("PSU(3)", "A2", 1),
    ("SO(3)", "A1", 1), ("Spin(3)", "A1", 2), ("Sp(1)", "A1", 2), ("PSp(1)", "A1", 1),
    ("Spin(5)", "B2", 2), ("SO(5)", "B2", 1), ("Sp(2)", "B2", 2), ("PSp(2)", "B2", 1),
    ("Spin(7)", "B3", 2), ("SO(7)", "B3", 1), ("PSO(7)", "B3", 1), ("Sp(3)", "C3", 2), ("PSp(3)", "C3", 1),
    ("Spin(6)", "A3", 4), ("SO(6)", "A3", 2), ("PSO(6)", "A3", 1),
    ("Spin(8)", "D4", 4), ("SO(8)", "D4", 2), ("PSO(8)", "D4", 1),
    ("Spin(10)", "D5", 4), ("SO(10)", "D5", 2), ("PSO(10)", "D5", 1),
    ("A3", "A3", 4), ("G2", "G2", 1), ("E6", "E6", 3), ("E7", "E7", 2), ("E8", "E8", 1), ("F4", "F4", 1),
    ("C2", "B2", 2), ("D3", "A3", 4), ("B1", "A1", 2),
]


@pytest.mark.parametrize("name,typ,order", GROUP_TABLE)
def test_parse_group_table(name, typ, order):
    g = parse_group(name)
    assert str(g.dynkin) == typ
    assert g.lattice.order == order
    assert g.display_name == name


@pytest.mark.parametrize("name", [n for n, _, _ in GROUP_TABLE] + ["SU( 4 )", " G2 "])
def test_canonical_round_trip(name):
    g = parse_group(name)
    again = parse_group(g.canonical_name)
    assert again == g
    assert again.canonical_name == g.canonical_name


def test_canonical_names():
    assert parse_group("Sp(1)").canonical_name == "SU(2)"
    assert parse_group("PSU(2)").canonical_name == "SO(3)"
    assert parse_group("Sp(2)").canonical_name == "Spin(5)"
    assert parse_group("PSO(6)").canonical_name == "PSU(4)"
    assert parse_group("D4").canonical_name == "Spin(8)"


def test_so6_lattice_is_vector_class():
    g = parse_group("SO(6)")
    assert g.dynkin == DynkinType("A", 3)
    from compactlie.rootsys import weight_class

    rs = g.root_system
    assert weight_class(rs, (0, 1, 0)) in g.lattice
    assert weight_class(rs, (1, 0, 0)) not in g.lattice


@pytest.mark.parametrize(
    "bad,reason",
    [
        ("SO(4)", "not simple"), ("Spin(4)", "not simple"), ("U(3)", "harmonic"), ("U(1)", "harmonic"),
        ("SU(1)", "trivial"), ("SO(2)", "not simple"), ("D2", "not simple"), ("E9", "canonical"),
        ("FOO(3)", "unknown"), ("SU(3", "')'"), ("SU3", "'('"), ("", "group name"), ("SU(3) x", "unexpected"),
    ],
)
def test_parse_group_errors(bad, reason):
    with pytest.raises(ParseError, match=re.escape(reason)):
        parse_group(bad)


def test_parse_weight():
    assert parse_weight("[0]") == (0,)
    assert parse_weight("[1,1]") == (1, 1)
    assert parse_weight("[1, 0, 2]") == (1, 0, 2)
    assert parse_weight("[-1,2]") == (-1, 2)
    for bad in ["[]", "[1,]", "1,2", "[1 2]", "[1.5]", "[a]", "[1,2]]", "(1,2)"]:
        with pytest.raises(ParseError):
            parse_weight(bad)


def test_parse_tensor_expression():
    assert parse_tensor_expression("[1,0] x [0,1]") == [(1, 0), (0, 1)]
    assert parse_tensor_expression("[1]x[1]x[2]") == [(1,), (1,), (2,)]
    with pytest.raises(ParseError):
        parse_tensor_expression("[1] x")


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out.strip(), out.err.strip()


@pytest.mark.parametrize(
    "argv,code,stdout",
    [
        (["dim", "SU(2)", "[4]"], 0, "5"),
        (["dim", "SO(3)", "[1]"], 2, ""),
        (["dim", "SO(3)", "[2]"], 0, "3"),
        (["center", "SU(4)"], 0, "Z4"),
        (["center", "Spin(8)"], 0, "Z2 x Z2"),
        (["center", "SO(3)"], 0, "trivial"),
        (["center", "E6"], 0, "Z3"),
        (["weyl-order", "G2"], 0, "12"),
        (["dim", "G2", "[0,1]"], 0, "14"),
        (["dim", "SO(6)", "[1,0,0]"], 2, ""),
        (["dim", "SO(6)", "[0,1,0]"], 0, "6"),
        (["dim", "SU(3)", "[1,-1]"], 2, ""),
        (["dim", "SU(3)", "[1]"], 2, ""),
        (["dim", "SU(3)", "[1,"], 1, ""),
        (["dim", "SO(4)", "[1]"], 1, ""),
        (["dim", "U(2)", "[1]"], 1, ""),
        (["frobnicate", "SU(2)"], 1, ""),
        (["dim", "SU(2)"], 1, ""),
        (["dim", "SU(2)", "[1]", "[2]"], 1, ""),
        (["dim", "SU(2)", "[1]", "--format", "json"], 1, ""),
        (["tensor", "SU(2)", "[1]"], 1, ""),
        (["weights", "E8", "[1,1,1,1,1,1,1,1]"], 3, ""),
        (["weyl-order", "E8"], 3, ""),
        (["weights", "SU(3)", "[2,2]", "--cap", "10"], 3, ""),
        (["char-eval", "SU(2)", "[2]", "[0]", "--method", "weyl-quotient"], 2, ""),
        (["char-eval", "SU(2)", "[2]", "[0]"], 0, "3.0 0.0i"),
        (["char-eval", "SU(2)", "[2]", "[0, 1]"], 2, ""),
        (["verify-harmonic", "--resolution", "-1"], 1, ""),
    ],
)
def test_exit_codes(argv, code, stdout, capsys):
    got, out, err = run(argv, capsys)
    assert got == code, err
    if code == 0:
        assert out == stdout
    else:
        assert out == "" and err


def test_xt_error_message(capsys):
    code, _, err = run(["dim", "SO(3)", "[1]"], capsys)
    assert code == 2 and "character lattice of SO(3)" in err


def test_tensor_command(capsys):
    code, out, _ = run(["tensor", "SU(3)", "[1,0] x [0,1]"], capsys)
    assert code == 0 and out.splitlines() == ["1 × (0,0)", "1 × (1,1)"]
    code, out, _ = run(["tensor", "SU(2)", "[1]", "x", "[1]", "x", "[1]", "--format", "machine"], capsys)
    assert out.splitlines() == ["summand 2 1", "summand 1 3"]


def test_verify_harmonic_low_resolution_fails(capsys):
    code, out, _ = run(["verify-harmonic", "--resolution", "2", "--format", "machine"], capsys)
    assert code == 4
    assert any(line.endswith("FAIL") for line in out.splitlines())


def _numbers(text: str) -> list[str]:
    return re.findall(r"-?\d+(?:\.\d+)?(?:e-?\d+)?", text.replace("Z", " "))


COMMAND_GRID = [
    ["dim", "SU(3)", "[2,1]"], ["weights", "SU(3)", "[1,1]"], ["weights", "G2", "[1,0]"],
    ["char-eval", "B2", "[1,1]", "[0.3,0.7]"], ["char-eval", "A2", "[1,1]", "[0.3,0.7]", "--method", "weyl-quotient"],
    ["tensor", "SU(3)", "[1,1] x [1,0]"], ["center", "Spin(8)"], ["center", "SU(6)"], ["center", "E8"],
    ["lattices", "SO(8)"], ["lattices", "A5"], ["weyl-order", "B3"], ["roots", "G2"], ["roots", "A3"],
]


@pytest.mark.parametrize("argv", COMMAND_GRID, ids=" ".join)
def test_text_and_machine_payloads_agree(argv):
    q = build_query(argv[0], [a for a in argv[1:] if not a.startswith("--") and a != "weyl-quotient"],
                    method="weyl-quotient" if "weyl-quotient" in argv else "weight-sum")
    out = run_query(q)
    text_nums = _numbers("\n".join(out.text))
    machine_nums = _numbers("\n".join(out.machine))
    assert text_nums == machine_nums


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "compactlie.cli", "dim", "SU(2)", "[4]"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "5"
