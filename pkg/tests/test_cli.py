import io
import json

import pytest

from snweb.cli import run

UNKNOT = {"n": 3, "slices": [{"gen": "cupE", "at": 0}, {"gen": "capQ", "at": 0}]}
THETA = {"n": 2, "slices": [{"gen": "vout", "at": 0}, {"gen": "vin", "at": 0}]}
HOPF = {"n": 2, "slices": [{"gen": g, "at": a} for g, a in
                           (("cupE", 0), ("cupE", 0), ("xp", 1), ("xp", 1), ("capQ", 0), ("capQ", 0))]}


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def write(tmp_path):
    def _write(name, obj):
        p = tmp_path / name
        p.write_text(json.dumps(obj) if not isinstance(obj, str) else obj)
        return str(p)
    return _write


def test_eval_unknot_in_q(write):
    assert call("eval", write("u.web", UNKNOT), "--var", "q") == (0, "q^2 + 1 + q^-2\n", "")


def test_eval_theta_in_q(write):
    assert call("eval", write("t.web", THETA), "--var", "q")[1] == "q^2 + 1\n"


def test_eval_in_t_and_rank_override(write):
    path = write("u.web", UNKNOT)
    assert call("eval", path)[1] == "t^6 + 1 + t^-6\n"
    assert call("eval", path, "-n", "2", "--var", "A")[1] == "A^2 + A^-2\n"


def test_var_fallback_note(write):
    from snweb.diagram import kinked_unknot, render_web
    code, out, _ = call("eval", write("k.web", render_web(kinked_unknot(3))), "--var", "q")
    assert code == 0
    assert out.startswith("t^14 + t^8 + t^2") and "shown in t" in out


def test_statesum_verify(write):
    code, out, _ = call("statesum", write("h.web", HOPF), "--verify")
    assert code == 0
    assert out == call("eval", write("h2.web", HOPF))[1]


def test_kauffman(write):
    code, out, _ = call("kauffman", write("h.web", HOPF))
    assert code == 0 and "yes" in out


def test_singular(write):
    d = {"n": 3, "slices": [{"gen": g, "at": a} for g, a in
                            (("cupE", 0), ("cupQ", 0), ("x4", 1), ("capE", 0), ("capQ", 0))]}
    code, out, _ = call("singular", write("s.web", d), "--var", "q")
    assert code == 0 and out.strip()


def test_moy(write):
    from snweb.moy import moy_theta, render_moy
    code, out, _ = call("moy", write("g.moy", render_moy(moy_theta(3, 1, 1))), "--verify")
    assert code == 0
    assert out.count("\n") == 4 and "eta_n = " in out


def test_check_suite():
    code, out, _ = call("check", "--suite", "kauffman", "--seed", "7", "--size", "20")
    assert code == 0 and out.strip().endswith("cases passed")
    assert call("check", "--suite", "kauffman", "--seed", "7", "--size", "20")[1] == out


def test_failing_suite_exits_2():
    assert call("check", "--suite", "moy")[0] == 2


def test_parse_errors_exit_1(write):
    code, _, err = call("eval", write("bad.web", {"n": 2, "slices": [{"gen": "capQ", "at": 0}]}))
    assert code == 1 and "slice 0" in err
    assert call("eval", write("junk.web", "not json"))[0] == 1
    assert call("eval", "/nonexistent/file.web")[0] == 1


def test_usage_error_exits_1():
    with pytest.raises(SystemExit) as exc:
        run(["eval"], io.StringIO(), io.StringIO())
    assert exc.value.code == 1
