import io
import json

import pytest

from pdgwebster import Algebra
from pdgwebster.cli import run
from pdgwebster.parser import ParseError, parse, tokenize


def cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_tokenize_keeps_sequence_text():
    toks = tokenize("psi@1 e(b,2,1)")
    assert any(t.kind == "seq" and t.value == "b,2,1" for t in toks)


def test_parse_print_round_trip():
    A = Algebra("D", (2, 1), 1, 5)
    for text in (
        "psi@1 e(b,2,1)",
        "2 E(1)@2 e(b,2,1) - x@1 e(b,2,1)",
        "psi@2 psi@1 e(b,2,1)",
    ):
        el = parse(text, A)
        assert parse(str(el), A) == el


def test_parse_scalars_and_parentheses():
    A = Algebra("NH", (), 2, 3)
    assert str(parse("2 x@1 - 3 psi@1", A)) == "-x@1 e(b,b)"
    assert parse("(x@1 + x@2) psi@1", A) == parse("x@1 psi@1 + x@2 psi@1", A)


@pytest.mark.parametrize(
    "text, position",
    [("psi@1 +", 7), ("x@9 e(b,b)", 2), ("(x@1 + x@2)^2", 11)],
)
def test_parse_errors_carry_positions(text, position):
    with pytest.raises(ParseError) as info:
        parse(text, Algebra("NH", (), 2, 3))
    assert info.value.position == position


def test_cli_reduce():
    code, out, _ = cli("reduce", "--algebra", "D", "--s", "2", "--n", "1", "--p", "3", "psi@1 psi@1 e(b,2)")
    assert code == 0
    assert out.strip() == "x@1 x@1 e(b,2) - E(1)@2 x@1 e(b,2) + E(2)@2 e(b,2)"


def test_cli_reduce_json_and_trace():
    code, out, err = cli(
        "reduce", "--algebra", "NH", "--n", "2", "--format", "json", "--trace", "x@2 psi@1"
    )
    obj = json.loads(out)
    assert code == 0 and obj["flag"] == "canonical" and obj["trace_length"] > 0
    assert err.strip()


def test_cli_mult_and_diff():
    code, out, _ = cli("mult", "--algebra", "NH", "--n", "2", "psi@1", "psi@1")
    assert (code, out.strip()) == (0, "0")
    code, out, _ = cli("diff", "--algebra", "NH", "--n", "1", "--k", "2", "x@1")
    assert (code, out.strip()) == (0, "-x@1 x@1 x@1 e(b)")


def test_cli_verify():
    code, out, _ = cli("verify", "nilhecke", "--p", "2,3", "--n-max", "2")
    assert code == 0 and "proven" in out
    code, _, _ = cli("verify", "bimodules", "--p", "3", "--n", "1")
    assert code == 0


def test_cli_oracle_equal():
    base = ("oracle-equal", "--algebra", "NH", "--n", "3")
    assert cli(*base, "psi@1 psi@2 psi@1", "psi@2 psi@1 psi@2")[:2] == (0, "true\n")
    assert cli(*base, "x@1", "x@2")[:2] == (1, "false\n")
    assert cli(*base, "--degree-cap", "1", "x@1", "x@1")[0] == 3


def test_cli_error_codes():
    assert cli("reduce", "--algebra", "NH", "--n", "2", "psi@1 +")[0] == 2
    assert cli("reduce", "--p", "4", "--n", "1", "x@1")[0] == 2
    assert cli("frobnicate")[0] == 2
    assert cli("reduce", "--degree-cap", "1", "--algebra", "NH", "--n", "1", "x@1")[0] == 3


def test_cli_render():
    code, out, _ = cli("render", "--algebra", "D", "--s", "2,1", "--n", "1", "psi@2 psi@1 e(b,2,1)")
    assert code == 0 and out.startswith("<svg")
    code, out, _ = cli(
        "render", "--format", "tikz", "--bimodule", "up", "--j", "1",
        "--algebra", "D", "--s", "2,1", "--n", "1", "psi@2 psi@1 e(b,2,1)",
    )
    assert code == 0 and "tikzpicture" in out and "$3$" in out
