import json

import pytest

from toothpicks.cli import main
from toothpicks.verify import parse_bfile


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_sequence_plain(capsys):
    code, out, _ = run(capsys, "sequence", "--name", "toothpick_T",
                       "--method", "recurrence", "--terms", "10")
    assert code == 0
    assert out.strip() == "0 1 3 7 11 15 23 35 43 47"


def test_sequence_zero_terms(capsys):
    code, out, _ = run(capsys, "sequence", "--name", "toothpick_T", "--terms", "0")
    assert code == 0
    assert out == ""


def test_sequence_default_method_prefers_formula(capsys):
    code, out, _ = run(capsys, "sequence", "--name", "uw_u", "--terms", "6")
    assert code == 0
    assert out.strip() == "0 1 4 4 12 4"


def test_sequence_formula_alias(capsys):
    code, out, _ = run(capsys, "sequence", "--name", "toothpick_t",
                       "--method", "formula", "--terms", "8")
    assert code == 0
    assert out.strip() == "0 1 2 4 4 4 8 12"


def test_sequence_bfile_round_trips(capsys):
    code, out, _ = run(capsys, "sequence", "--name", "corner_c",
                       "--method", "recurrence", "--terms", "12", "--format", "bfile")
    assert code == 0
    seq = parse_bfile(out)
    assert seq.offset == 0
    assert list(seq.terms) == [0, 1, 2, 3, 3, 4, 7, 8, 5, 4, 7, 9]


def test_sequence_csv(capsys):
    code, out, _ = run(capsys, "sequence", "--name", "gould", "--terms", "4",
                       "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["0,1", "1,2", "2,2", "3,4"]


def test_sequence_unknown_name(capsys):
    code, _, err = run(capsys, "sequence", "--name", "nope", "--terms", "3")
    assert code == 2
    assert "unknown sequence binding" in err


def test_usage_error_exit_code(capsys):
    assert main(["sequence", "--bogus-flag"]) == 2
    assert main([]) == 2


def test_analyze_local_minima(capsys):
    code, out, _ = run(capsys, "analyze", "--check", "local-minima", "--nmax", "100")
    assert code == 0
    assert out.strip() == "1 2 5 12 21 44 89"


def test_analyze_ratio_bound(capsys):
    code, out, _ = run(capsys, "analyze", "--check", "ratio-bound", "--nmax", "64")
    assert code == 0
    assert "equality exactly at: 1 3 7 15 31 63" in out


def test_analyze_tree(capsys):
    code, out, _ = run(capsys, "analyze", "--check", "tree", "--variant", "uw",
                       "--nmax", "16")
    assert code == 0
    assert "tree" in out


def test_simulate_and_dump(tmp_path, capsys):
    dump = tmp_path / "s.dump"
    code, out, _ = run(capsys, "simulate", "--variant", "toothpick",
                       "--stages", "10", "--dump", str(dump))
    assert code == 0
    assert out.strip().split() == "0 1 2 4 4 4 8 12 8 4 8".split()
    assert dump.read_text().count("\n") == 55


def test_simulate_grid(capsys):
    code, out, _ = run(capsys, "simulate", "--variant", "uw", "--stages", "8")
    assert code == 0
    assert out.strip() == "0 1 4 4 12 4 12 12 36"


def test_render_writes_svg(tmp_path, capsys):
    out_file = tmp_path / "pic.svg"
    code, _, _ = run(capsys, "render", "--variant", "toothpick", "--stages", "6",
                     "--out", str(out_file))
    assert code == 0
    assert out_file.read_text().count("<line") == 23


def test_verify_single_binding(capsys):
    code, out, _ = run(capsys, "verify", "--binding", "f_sequence", "--nmax", "64")
    assert code == 0
    assert "agree" in out


def test_verify_divergence_is_informational(capsys):
    code, out, _ = run(capsys, "verify", "--binding", "maltese_ca", "--nmax", "32")
    assert code == 0  # not a must-agree binding
    assert "FIRST DIVERGENCE at n=18" in out
    assert "[informational]" in out


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--binding", "gould", "--nmax", "32",
                       "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload[0][0]["name"] == "gould"
    assert payload[0][0]["first_divergence"] is None


def test_verify_exit_one_on_must_agree_divergence(capsys, monkeypatch):
    from toothpicks import cli
    from toothpicks.sequences import IntSequence
    from toothpicks.verify import Generator, SequenceBinding

    bad = SequenceBinding(
        "synthetic",
        None,
        (
            Generator("recurrence", lambda n: IntSequence(0, tuple(range(n + 1))), 64),
            Generator("closedform", lambda n: IntSequence(0, tuple(0 for _ in range(n + 1))), 64),
        ),
        must_agree=True,
    )
    monkeypatch.setattr(cli.verify, "bindings", lambda: {"synthetic": bad})
    code = cli.main(["verify", "--binding", "synthetic", "--nmax", "16"])
    out = capsys.readouterr().out
    assert code == 1
    assert "FIRST DIVERGENCE at n=1" in out
