import io

import leftseq as L
from leftseq.cli import run


def lines(capsys):
    out = capsys.readouterr()
    return out.out.splitlines(), out.err.splitlines()


class TestTree:
    def test_text_format(self, capsys):
        assert run(["tree", "--logic", "fscl", "(a || b) && c"]) == 0
        out, _ = lines(capsys)
        assert out == ["((T <| c |> F) <| a |> ((T <| c |> F) <| b |> F))"]

    def test_dot(self, capsys):
        assert run(["tree", "--dot", "a"]) == 0
        out, _ = lines(capsys)
        assert out[0] == "digraph evaltree {"
        assert out[-1] == "}"

    def test_wrong_language_is_a_usage_error(self, capsys):
        assert run(["tree", "--logic", "ffel", "a && b"]) == 2
        _, err = lines(capsys)
        assert err and err[0].startswith("error:")

    def test_guard_exceeded(self, capsys):
        assert run(["tree", "--logic", "ffel", "--max-atoms", "2", "a & b & c"]) == 3

    def test_stdin(self, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO("a & b\n"))
        assert run(["tree", "--logic", "ffel", "--stdin"]) == 0
        out, _ = lines(capsys)
        assert out == ["((T <| b |> F) <| a |> (F <| b |> F))"]


class TestTraces:
    def test_sorted_output(self, capsys):
        assert run(["traces", "--logic", "ffel", "(a & b) | c"]) == 0
        out, _ = lines(capsys)
        assert out == [
            "aT bT cT -> T",
            "aT bT cF -> T",
            "aT bF cT -> T",
            "aT bF cF -> F",
            "aF bT cT -> T",
            "aF bT cF -> F",
            "aF bF cT -> T",
            "aF bF cF -> F",
        ]

    def test_constant(self, capsys):
        assert run(["traces", "T"]) == 0
        out, _ = lines(capsys)
        assert out == ["-> T"]


class TestNormalizeClassify:
    def test_normalize(self, capsys):
        assert run(["normalize", "--logic", "ffel", "a"]) == 0
        out, _ = lines(capsys)
        assert out == ["T & (a & T)"]

    def test_classify(self, capsys):
        assert run(["classify", "--logic", "fscl", "T && ((a && T) || F)"]) == 0
        out, _ = lines(capsys)
        assert out == ["TStarTerm"]

    def test_classify_not_normal(self, capsys):
        assert run(["classify", "--logic", "ffel", "a"]) == 0
        out, _ = lines(capsys)
        assert out == ["NotNormal"]


class TestDecide:
    def test_equal(self, capsys):
        assert run(["decide", "--logic", "fscl", "F && a", "F"]) == 0
        out, _ = lines(capsys)
        assert out == ["EQUAL"]

    def test_not_equal_with_witness(self, capsys):
        assert run(["decide", "--logic", "fscl", "a && F", "F"]) == 1
        out, _ = lines(capsys)
        assert out[0] == "NOT EQUAL"
        assert out[1].startswith("witness: ")

    def test_needs_two_terms(self, capsys):
        assert run(["decide", "--logic", "fscl", "a"]) == 2

    def test_parse_error(self, capsys):
        assert run(["decide", "--logic", "fscl", "a &&", "a"]) == 2
        _, err = lines(capsys)
        assert "error:" in err[0]


class TestTranslateInvert:
    def test_translate(self, capsys):
        assert run(["translate", "a & b"]) == 0
        out, _ = lines(capsys)
        assert out == ["(a || b && F) && b"]
        assert L.parse(out[0]) == L.parse("(a || (b && F)) && b")

    def test_invert_round_trips_tree_output(self, capsys):
        assert run(["tree", "--logic", "fscl", "T && ((a && T) || F)"]) == 0
        tree_text, _ = lines(capsys)
        assert run(["invert", "--logic", "fscl", tree_text[0]]) == 0
        out, _ = lines(capsys)
        assert L.parse(out[0]) == L.parse("T && ((a && T) || F)")

    def test_invert_rejects_out_of_image_tree(self, capsys):
        assert run(["invert", "--logic", "ffel", "(T <| a |> (T <| b |> F))"]) == 2

    def test_invert_parse_error(self, capsys):
        assert run(["invert", "--logic", "ffel", "(T <| a F)"]) == 2


class TestCheck:
    def test_single_catalog(self, capsys):
        assert run(["check", "--catalog", "CP", "--trials", "5", "--seed", "1"]) == 0
        out, _ = lines(capsys)
        assert out == [
            "CP/CP1: ok (5 trials)",
            "CP/CP2: ok (5 trials)",
            "CP/CP3: ok (5 trials)",
            "CP/CP4: ok (5 trials)",
        ]

    def test_all_catalogs(self, capsys):
        assert run(["check", "--trials", "2", "--seed", "0"]) == 0
        out, _ = lines(capsys)
        assert len(out) == 44

    def test_unknown_catalog(self, capsys):
        assert run(["check", "--catalog", "Nope"]) == 2

    def test_export(self, capsys):
        assert run(["check", "--catalog", "GeneralExt", "--export"]) == 0
        out, _ = lines(capsys)
        assert len(out) == 2
        assert out[0].startswith("GeneralExt\tGenExt-and\t")


class TestMemorize:
    def test_repeated_atom(self, capsys):
        assert run(["memorize", "--logic", "fscl", "a && a"]) == 0
        out, _ = lines(capsys)
        assert out == ["((T <| a |> T) <| a |> F)"]


class TestUsage:
    def test_no_command(self):
        assert run([]) == 2

    def test_help(self):
        assert run(["--help"]) == 0

    def test_stdin_and_positional_conflict(self, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO("a\n"))
        assert run(["tree", "a", "--stdin"]) == 2
