import json

import pytest

from interquant.cli import main
from interquant.syntax import parse

FIG2 = "most(Humans)(Write_name)\nall(Write_name)(Able_to_write)\n"
FIG4 = "almost_all(Adults)(Go_to_work)\nno(Go_to_work)(Sleep_until_late)\n"


@pytest.fixture
def kbfile(tmp_path):
    def write(text, name="kb.txt"):
        p = tmp_path / name
        p.write_text(text, encoding="utf-8")
        return str(p)
    return write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestParseCommand:
    def test_eq3(self, capsys, kbfile):
        code, out, _ = run(capsys, "parse", kbfile("~all(Men)(Astronauts)\n"))
        assert code == 0
        assert "~all(Men)(Astronauts)" in out
        assert "Pp/Pr" in out and "(Pp/Pr)/Pr" in out

    def test_bad_line(self, capsys, kbfile):
        code, _, err = run(capsys, "parse", kbfile("all(men)(X)\n"))
        assert code == 1
        assert ":1:" in err and "bad-term" in err

    def test_empty(self, capsys, kbfile):
        code, out, _ = run(capsys, "parse", kbfile(""))
        assert code == 0 and "0 statements" in out

    def test_structured(self, capsys, kbfile):
        code, out, _ = run(capsys, "parse", "--structured", kbfile(FIG2))
        recs = [json.loads(ln) for ln in out.splitlines()]
        assert code == 0 and [r["category"] for r in recs] == ["Pp", "Pp"]
        assert all(parse(r["statement"]) for r in recs)


class TestSaturateCommand:
    def test_fig3(self, capsys, kbfile):
        code, out, _ = run(capsys, "saturate", kbfile(FIG2))
        assert code == 0
        assert "most(Humans)(Able_to_write)  [I.A 1,2]" in out

    def test_fig5_chain(self, capsys, kbfile):
        _, out, _ = run(capsys, "saturate", kbfile(FIG4))
        for name in ("few", "most_not", "many_not", "some_not"):
            assert f" {name}(Adults)(Sleep_until_late)  [" in out

    def test_contradictory(self, capsys, kbfile):
        _, out, _ = run(capsys, "saturate", kbfile("some(Woman)(Mortal)\n"))
        assert "~no(Woman)(Mortal)  [CONTRA_POS 1]" in out

    def test_structured_round_trips(self, capsys, kbfile):
        _, out, _ = run(capsys, "saturate", "--structured", kbfile(FIG2))
        recs = [json.loads(ln) for ln in out.splitlines()]
        assert recs[0] == {"index": 1, "statement": "most(Humans)(Write_name)",
                           "rule": "PREMISE", "premises": []}
        for r in recs:
            assert str(parse(r["statement"])) == r["statement"]

    def test_inconsistency_warning(self, capsys, kbfile):
        code, _, err = run(capsys, "saturate", kbfile("all(A)(B)\n~some(A)(B)\n"))
        assert code == 0 and "inconsistent" in err

    def test_step_limit(self, capsys, kbfile):
        code, _, err = run(capsys, "saturate", "--max-steps", "3", kbfile(FIG2))
        assert code == 3 and "max_steps" in err

    def test_parse_errors_stop(self, capsys, kbfile):
        code, _, err = run(capsys, "saturate", kbfile("all(a)(B)\n"))
        assert code == 3 and ":1:" in err


class TestProveCommand:
    def test_derivable(self, capsys, kbfile):
        code, out, _ = run(capsys, "prove", kbfile(FIG2), "most(Humans)(Able_to_write)")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "most(Humans)(Able_to_write)  [I.A]"
        assert lines[1].startswith("  ") and "[PREMISE]" in lines[1]

    def test_countermodel(self, capsys, kbfile):
        code, out, _ = run(capsys, "prove", kbfile("all(X)(Y)\n"), "all(Y)(X)")
        assert code == 1
        assert "countermodel found" in out and "m=2" in out and "X={0}" in out and "Y={0, 1}" in out

    def test_barbara_chain(self, capsys, kbfile):
        code, out, _ = run(capsys, "prove", kbfile("all(M)(P)\nall(S)(M)\n"), "some(S)(P)")
        assert code == 0
        assert "[ExI.A]" in out.splitlines()[0] and "[I.A]" in out.splitlines()[1]

    def test_no_countermodel_in_bound(self, capsys, kbfile):
        # valid but outside the rules: conversion of some
        code, out, _ = run(capsys, "prove", kbfile("some(X)(Y)\n"), "some(Y)(X)")
        assert code == 2 and "no countermodel up to m=5" in out

    def test_structured_countermodel(self, capsys, kbfile):
        _, out, _ = run(capsys, "prove", "--structured", kbfile("all(X)(Y)\n"), "all(Y)(X)")
        rec = json.loads(out)
        assert rec["result"] == "countermodel"
        assert rec["model"] == {"universe_size": 2, "extensions": {"X": [0], "Y": [0, 1]}}

    def test_bad_goal(self, capsys, kbfile):
        code, _, err = run(capsys, "prove", kbfile(FIG2), "most(humans)(X)")
        assert code == 3 and "bad-term" in err


class TestSquareCommand:
    def test_almost_all(self, capsys):
        code, out, _ = run(capsys, "square", "almost_all")
        fields = dict(ln.split(None, 1) for ln in out.splitlines() if ln.split()[0] in
                      ("contrary", "mirror", "contradictory"))
        assert code == 0
        assert fields == {"contrary": "few", "mirror": "many", "contradictory": "many_not"}

    def test_most_centre(self, capsys):
        _, out, _ = run(capsys, "square", "--structured", "most")
        assert json.loads(out)["mirror"] == "most"

    def test_two_system(self, capsys):
        _, out, _ = run(capsys, "square", "--structured", "--system", "2", "all")
        assert json.loads(out)["contradictory"] == "some_not"

    def test_unknown(self, capsys):
        code, _, _ = run(capsys, "square", "--system", "2", "most")
        assert code == 3


class TestMoodsCommand:
    def test_two_system_figure_1(self, capsys):
        code, out, _ = run(capsys, "moods", "--system", "2", "--figure", "1")
        assert code == 0
        rows = {tuple(ln.split()[1:6]) for ln in out.splitlines()[2:] if ln.strip()}
        for mood in [("all", "all", "all"), ("no", "all", "no"),
                     ("all", "some", "some"), ("no", "some", "some_not")]:
            assert (*mood, "yes", "yes") in rows

    def test_five_system_figure_3(self, capsys):
        code, out, _ = run(capsys, "moods", "--structured", "--figure", "3")
        recs = [json.loads(ln) for ln in out.splitlines()]
        row = next(r for r in recs if (r["q_p1"], r["q_p2"], r["q_c"]) == ("few", "many", "some_not"))
        assert row["derivable"] and row["valid"]
        assert not [r for r in recs if r["derivable"] and not r["valid"]]
        assert code == 0

    def test_csv(self, capsys):
        code, out, _ = run(capsys, "moods", "--csv", "--system", "2", "--figure", "2", "--figure", "4")
        lines = out.splitlines()
        assert code == 0 and lines[0] == "figure,q_p1,q_p2,q_c,valid,derivable"
        assert len(lines) == 1 + 2 * 64

    def test_bad_flags(self, capsys):
        code, _, _ = run(capsys, "moods", "--threshold-f", "1/3")
        assert code == 3
        with pytest.raises(SystemExit) as e:
            main(["moods", "--figure", "7"])
        assert e.value.code == 3
