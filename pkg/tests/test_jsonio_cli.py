import io
import json

import numpy as np
import pytest
from conftest import fixture_path, load_matrix, load_model, load_state
from hypothesis import given
from hypothesis import strategies as st
from strategies import cut_lists, supermatrices

from superfuzz import jsonio
from superfuzz.cli import EXIT_INPUT, EXIT_NO_CONVERGENCE, EXIT_OK, EXIT_USAGE, main
from superfuzz.errors import ParseError, SchemaError, ValidationError
from superfuzz.fuzzy import StateDomain, SuperStateVector
from superfuzz.models import ModelKind, ModelSpec, Variant
from superfuzz.report import render_matrix, render_vector


def cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main([str(a) for a in argv], out, err)
    return code, out.getvalue(), err.getvalue()


def fx(name):
    return str(fixture_path(name))


class TestLoaders:
    def test_fcm_fixture_model(self):
        spec = load_model("fcm_model.json")
        assert spec.kind is ModelKind.FCM
        assert spec.connection.shape == (18, 18)
        assert spec.connection.row_cuts == spec.connection.col_cuts == (6, 11)

    def test_entries_length(self, tmp_path):
        p = tmp_path / "m.json"
        p.write_text(json.dumps({"rows": 2, "cols": 2, "row_cuts": [], "col_cuts": [], "entries": [1, 2, 3]}))
        with pytest.raises(SchemaError, match="rows\\*cols"):
            jsonio.load_matrix(p)

    def test_off_diagonal_fixture(self, tmp_path):
        d = jsonio.read_json(fixture_path("fcm_model.json"))
        d["matrix"]["entries"][17] = 1  # row 0, column 17: third expert's block column
        p = tmp_path / "bad.json"
        p.write_text(json.dumps(d))
        with pytest.raises(ValidationError) as info:
            jsonio.load_model(p)
        assert [i.code for i in info.value.issues] == ["OffDiagonalNonzero"]

    def test_reports_every_issue_with_path(self):
        d = jsonio.read_json(fixture_path("fcm_model.json"))
        d["matrix"]["entries"][0] = 1
        d["matrix"]["entries"][1] = 3
        with pytest.raises(ValidationError) as info:
            jsonio.model_from_dict(d)
        paths = {(i.code, i.path) for i in info.value.issues}
        assert ("ZeroDiagonalViolated", "$.matrix.entries[0]") in paths
        assert ("EntryDomain", "$.matrix.entries[1]") in paths

    def test_parse_error(self, tmp_path):
        p = tmp_path / "x.json"
        p.write_text("{not json")
        with pytest.raises(ParseError):
            jsonio.load_matrix(p)
        with pytest.raises(ParseError):
            jsonio.load_matrix(tmp_path / "missing.json")

    @pytest.mark.parametrize(
        "patch,where",
        [
            ({"rows": "2"}, "$.rows"),
            ({"row_cuts": [3]}, "$"),
            ({"entries": [1, 2, True, 4]}, "$.entries[2]"),
            ({"extra": 1}, "unknown"),
        ],
    )
    def test_schema_errors(self, patch, where):
        d = {"rows": 2, "cols": 2, "row_cuts": [], "col_cuts": [], "entries": [1, 2, 3, 4]}
        d.update(patch)
        with pytest.raises(SchemaError, match=where.replace("$", "\\$").replace("[", "\\[")):
            jsonio.matrix_from_dict(d)

    def test_state_schema(self):
        with pytest.raises(SchemaError):
            jsonio.state_from_dict({"domain": "binary", "cuts": [], "values": [0, 2]})
        with pytest.raises(SchemaError):
            jsonio.state_from_dict({"domain": "ternary", "cuts": [], "values": [0]})
        with pytest.raises(SchemaError):
            jsonio.state_from_dict({"domain": "binary", "cuts": [1], "values": [0]})

    def test_canonical_text(self):
        text = jsonio.dumps(jsonio.matrix_to_dict(load_matrix("product_a.json")))
        assert text.splitlines()[1] == '  "rows": 3,'
        assert '"entries": [2, 1, 3, 5, 6, 1]' in text
        assert fixture_path("product_a.json").read_text() == text


@given(supermatrices(fuzzy=True))
def test_matrix_roundtrip(a):
    assert jsonio.matrix_from_dict(json.loads(jsonio.dumps(jsonio.matrix_to_dict(a)))) == a


@given(st.integers(1, 12), st.sampled_from(list(StateDomain)), st.data())
def test_state_roundtrip(n, domain, data):
    pools = {
        StateDomain.BINARY: st.sampled_from([0, 1]),
        StateDomain.BIPOLAR: st.sampled_from([-1, 0, 1]),
        StateDomain.SCALED: st.integers(-4, 4),
        StateDomain.FUZZY: st.integers(0, 10).map(lambda k: k / 10),
    }
    vals = data.draw(st.lists(pools[domain], min_size=n, max_size=n))
    v = SuperStateVector(vals, data.draw(cut_lists(n)), domain, 4 if domain is StateDomain.SCALED else None)
    assert jsonio.state_from_dict(json.loads(jsonio.dumps(jsonio.state_to_dict(v)))) == v


@given(st.integers(0, 2**32 - 1), st.sampled_from(list(ModelKind)))
def test_model_roundtrip(seed, kind):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(2, 6))
    if kind is ModelKind.FAM:
        m = rng.integers(0, 11, (n, n)) / 10
    else:
        m = rng.integers(-1, 2, (n, n)).astype(float)
        np.fill_diagonal(m, 0)
    kw = {"scale": 3, "thresholds_u": list(rng.integers(-1, 2, n)), "thresholds_v": [0.5] * n} if kind is ModelKind.BAM else {}
    spec = ModelSpec(kind, Variant.PLAIN, m, [[f"a{i}" for i in range(n)]], [[f"b{i}" for i in range(n)]], **kw)
    assert jsonio.model_from_dict(json.loads(jsonio.dumps(jsonio.model_to_dict(spec)))) == spec


@given(st.integers(1, 20), st.data())
def test_render_bars_at_cuts(n, data):
    cuts = data.draw(cut_lists(n))
    vals = data.draw(st.lists(st.integers(0, 9), min_size=n, max_size=n))
    tokens = render_vector(vals, cuts)[1:-1].split(" ")
    assert tokens.count("|") == len(cuts)
    # count values before each bar
    seen, positions = 0, []
    for t in tokens:
        if t == "|":
            positions.append(seen)
        else:
            seen += 1
    assert positions == list(cuts)


def test_render_matrix():
    text = render_matrix(load_matrix("product_b.json"))
    assert text.splitlines() == ["[1 2]", "-----", "[3 1]"]


class TestRun:
    def test_text_trace(self):
        code, out, _ = cli("run", "--model", fx("fcm_model.json"), "--initial", fx("fcm_initial.json"))
        assert code == EXIT_OK
        assert "step 1 domain state: [1 1 0 0 0 1 | 1 1 1 0 1 | 1 0 1 0 1 1 0]" in out
        assert "step 2 domain state: [1 1 0 1 1 1 | 1 1 1 0 1 | 1 0 1 0 1 1 1]" in out
        assert "step 1 domain raw:   [0 2 -2 0 0 1 | 1 0 1 0 1 | 2 -1 0 0 1 1 -1]" in out
        assert "verdict: fixed point" in out
        assert "  expert 1: " in out

    def test_missing_side(self):
        code, _, err = cli("run", "--model", fx("frm_column_model.json"), "--initial", fx("frm_column_initial.json"))
        assert code == EXIT_USAGE
        assert "--side" in err

    def test_side_on_fcm(self):
        code, _, _ = cli(
            "run", "--model", fx("fcm_model.json"), "--initial", fx("fcm_initial.json"), "--side", "x"
        )
        assert code == EXIT_USAGE

    def test_json_roundtrip(self):
        code, out, _ = cli(
            "run", "--model", fx("frm_diagonal_model.json"), "--initial", fx("frm_diagonal_initial.json"),
            "--side", "domain", "--format", "json",
        )
        assert code == EXIT_OK
        report = json.loads(out)
        states = [jsonio.state_from_dict(s["state"]) for s in report["steps"]]
        assert states[0] == load_state("frm_diagonal_initial.json")
        assert states[1].values.tolist() == [1, 1, 1, 0, 1, 0, 1, 0, 0, 1, 0, 1]
        assert report["steps"][1]["raw"] == [2, 1, 1, 0, 1, 0, 2, 0, 0, 2, 0, 1]
        assert report["verdict"]["type"] == "fixed_point"
        hidden = report["hidden_pattern"]["domain"]
        assert jsonio.state_from_dict(hidden["state"]).values.all()
        assert [e["block"] for e in hidden["experts"]] == [1, 2, 3]

    def test_inline_initial(self):
        code, out, _ = cli("run", "--model", fx("fam_row_model.json"), "--initial", "[0.3, 0, 0.1, 0.7]", "--side", "x")
        assert code == EXIT_OK
        assert "step 0 range state: [0.4 0.3 0.6 | 0.5 0.3 | 0.3 0.4 0.3 0.5 0.3]" in out

    def test_max_steps_exit(self, monkeypatch):
        args = ("run", "--model", fx("fcm_model.json"), "--initial", fx("fcm_initial.json"))
        assert cli(*args, "--max-steps", "1")[0] == EXIT_NO_CONVERGENCE
        monkeypatch.setenv("SUPERFUZZ_MAX_STEPS", "2")
        code, out, _ = cli(*args, "--format", "json")
        assert code == EXIT_NO_CONVERGENCE
        assert json.loads(out)["verdict"] == {"type": "max_steps_exceeded", "steps": 2, "rounds": 2}

    def test_input_errors(self, tmp_path):
        code, _, err = cli("run", "--model", tmp_path / "none.json", "--initial", "[1]")
        assert code == EXIT_INPUT and "cannot read" in err
        code, _, err = cli("run", "--model", fx("fcm_model.json"), "--initial", "[1, 0]")
        assert code == EXIT_INPUT and "length" in err

    def test_bad_model_lists_issues(self, tmp_path):
        d = jsonio.read_json(fixture_path("fcm_model.json"))
        d["matrix"]["entries"][0] = 1
        p = tmp_path / "bad.json"
        p.write_text(json.dumps(d))
        code, _, err = cli("run", "--model", p, "--initial", fx("fcm_initial.json"))
        assert code == EXIT_INPUT
        assert "ZeroDiagonalViolated at $.matrix.entries[0]" in err

    def test_usage(self):
        assert cli()[0] == EXIT_USAGE
        assert cli("run", "--model")[0] == EXIT_USAGE
        assert cli("run", "--model", "a", "--initial", "b", "--max-steps", "0")[0] == EXIT_USAGE


class TestCompose:
    def test_multiply(self):
        code, out, _ = cli("compose", "--op", "multiply", "--a", fx("product_a.json"), "--b", fx("product_b.json"))
        assert code == EXIT_OK
        m = jsonio.matrix_from_dict(json.loads(out))
        assert m.entries.tolist() == [[5, 5], [18, 11], [9, 13]]

    def test_pseudo_transpose_twice(self, tmp_path):
        src = fixture_path("pseudo_transpose_6x3_a.json")
        _, once, _ = cli("compose", "--op", "pseudo-transpose", "--a", src)
        p = tmp_path / "t.json"
        p.write_text(once)
        _, twice, _ = cli("compose", "--op", "pseudo-transpose", "--a", p)
        assert twice == src.read_text()

    def test_moment(self):
        code, out, _ = cli("compose", "--op", "moment", "--semiring", "maxmin", "--a", fx("fuzzy_row_moment_x.json"))
        assert code == EXIT_OK
        got = jsonio.matrix_from_dict(json.loads(out))
        np.testing.assert_allclose(got.entries, [[0.4, 0.4, 0.3], [0.4, 1, 0.4], [0.3, 0.4, 0.4]], atol=1e-9)

    def test_plus_moment(self):
        _, out, _ = cli("compose", "--op", "moment", "--a", fx("row_moment_x.json"))
        assert json.loads(out)["entries"] == [79, 20, 28, 20, 57, 15, 28, 15, 15]

    def test_pseudo_product(self):
        _, out, _ = cli("compose", "--op", "pseudo-product", "--a", fx("pseudo_product_9_a.json"))
        assert jsonio.matrix_from_dict(json.loads(out)) == load_matrix("pseudo_product_9_expected.json")

    def test_block_mismatch(self):
        code, _, err = cli("compose", "--op", "multiply", "--a", fx("product_a.json"), "--b", fx("product_a.json"))
        assert code == EXIT_INPUT
        code, _, err = cli("compose", "--op", "multiply", "--a", fx("product_b.json"), "--b", fx("product_b.json"))
        assert code == EXIT_INPUT
        assert "[]" in err and "[1]" in err

    def test_add_scheme_mismatch(self):
        code, _, err = cli("compose", "--op", "add", "--a", fx("add_a.json"), "--b", fx("add_b.json"))
        assert code == EXIT_INPUT and "[2] vs [1]" in err

    def test_operand_usage(self):
        assert cli("compose", "--op", "multiply", "--a", fx("product_a.json"))[0] == EXIT_USAGE
        assert cli("compose", "--op", "transpose", "--a", fx("product_a.json"), "--b", fx("product_a.json"))[0] == EXIT_USAGE
        args = ("compose", "--op", "add", "--semiring", "maxmin", "--a", fx("product_a.json"), "--b", fx("product_a.json"))
        assert cli(*args)[0] == EXIT_USAGE


class TestEnumerate:
    def test_two_by_two(self):
        assert cli("enumerate", "--rows", 2, "--cols", 2, "--count-only")[1] == "3\n"

    def test_three_by_three_note(self):
        code, out, _ = cli("enumerate", "--rows", 3, "--cols", 3, "--count-only")
        lines = out.splitlines()
        assert code == EXIT_OK and lines[0] == "15"
        assert lines[1].startswith("note:") and "14" in lines[1]

    def test_symmetric_four(self):
        lines = cli("enumerate", "--rows", 4, "--cols", 4, "--class", "symmetric", "--count-only")[1].splitlines()
        assert lines[0] == "7" and "6" in lines[1]

    def test_listing_is_json_lines(self):
        code, out, err = cli("enumerate", "--rows", 3, "--cols", 3)
        rows = [json.loads(line) for line in out.splitlines()]
        assert len(rows) == 15 and rows[0] == {"row_cuts": [], "col_cuts": [1]}
        assert "note:" in err

    def test_pseudo(self):
        out = cli("enumerate", "--rows", 5, "--cols", 5, "--class", "pseudo")[1]
        rows = [json.loads(line) for line in out.splitlines()]
        assert {"row_cuts": [2], "col_cuts": [3]} in rows
        assert all(sorted(5 - c for c in r["col_cuts"]) == r["row_cuts"] for r in rows)

    def test_usage(self):
        assert cli("enumerate", "--rows", 0, "--cols", 2)[0] == EXIT_USAGE
        assert cli("enumerate", "--rows", 2, "--cols", 3, "--class", "symmetric")[0] == EXIT_USAGE
