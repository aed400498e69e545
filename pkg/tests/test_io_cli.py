from __future__ import annotations

import json

import pytest
from hypothesis import given

from strategies import complexes
from augmental import catalog
from augmental.cli import main
from augmental.complex import EMPTY_SIMPLEX, VOID, union
from augmental.constructions import join
from augmental.io import ComplexFormatError, dumps_complex, loads_complex, read_complex, write_complex
from augmental.manifolds import boundary


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def files(tmp_path):
    def put(name, sigma, order=None):
        path = tmp_path / f"{name}.json"
        write_complex(path, sigma, order)
        return path
    return put


class TestJson:
    def test_bottom_cases(self):
        assert loads_complex('{"facets": []}')[0].is_void
        assert loads_complex('{"facets": [[]]}')[0] == EMPTY_SIMPLEX
        assert dumps_complex(VOID) == '{"facets": []}'
        assert dumps_complex(EMPTY_SIMPLEX) == '{"facets": [[]]}'

    def test_order_survives(self):
        sigma, order = loads_complex('{"facets": [["a","b"]], "order": ["b","a"]}')
        assert order == ["b", "a"]
        assert json.loads(dumps_complex(sigma, order))["order"] == ["b", "a"]

    def test_malformed_json_reports_position(self):
        with pytest.raises(ComplexFormatError, match="line 1, column 13"):
            loads_complex('{"facets": [')

    @pytest.mark.parametrize("text", ['[1, 2]', '{"facets": [1]}', '{"facets": [["a","a"]]}',
                                      '{"facets": [["a"]], "order": ["b"]}'])
    def test_bad_shapes(self, text):
        with pytest.raises(ComplexFormatError):
            loads_complex(text)

    def test_missing_file(self, tmp_path):
        with pytest.raises(ComplexFormatError):
            read_complex(tmp_path / "nope.json")


@given(complexes(max_vertices=6))
def test_round_trip_is_exact(sigma):
    text = dumps_complex(sigma)
    back, _ = loads_complex(text)
    assert back == sigma and dumps_complex(back) == text


class TestCommands:
    def test_homology(self, capsys, files):
        code, out, _ = run(capsys, "homology", files("rp2", catalog.rp2_6()), "--coeff", "Z")
        assert code == 0 and out == "H_1 = Z_2\n"

    def test_homology_over_a_field(self, capsys, files):
        code, out, _ = run(capsys, "homology", files("rp2", catalog.rp2_6()), "--coeff", "Zp:2")
        assert code == 0 and out.splitlines() == ["H_1 = Z_2", "H_2 = Z_2"]

    def test_boundary_of_mobius_cone(self, capsys, files):
        code, out, _ = run(capsys, "boundary", files("mc", catalog.mobius_cone()), "--coeff", "Z")
        mob = catalog.mobius_5()
        sigma, _ = loads_complex(out)
        assert code == 0 and sigma == union(mob, join(boundary(mob), catalog.point("o")))

    def test_link_and_costar(self, capsys, files):
        sq = files("sq", catalog.cycle(4, "c"))
        code, out, _ = run(capsys, "link", sq, "--face", "c0")
        assert code == 0 and loads_complex(out)[0].facets == (("c1",), ("c3",))
        code, out, _ = run(capsys, "costar", sq, "--face", "")
        assert code == 0 and loads_complex(out)[0].is_void

    def test_missing_face(self, capsys, files):
        code, _, err = run(capsys, "link", files("sq", catalog.cycle(4, "c")), "--face", "zz")
        assert code == 2 and "not a face" in err

    def test_sr_ideal(self, capsys, files):
        code, out, _ = run(capsys, "sr-ideal", files("v", VOID), "--universe", "x,y")
        assert code == 0 and out == "ring x,y\n1\n"
        code, out, _ = run(capsys, "sr-ideal", files("e", EMPTY_SIMPLEX), "--universe", "x,y")
        assert out == "ring x,y\nx\ny\n"

    def test_sr_product(self, capsys, files):
        a = files("a", catalog.path(1, "u"), ["u0", "u1"])
        b = files("b", catalog.path(1, "w"), ["w0", "w1"])
        code, out, _ = run(capsys, "sr-product", a, b, "--emit-groebner")
        assert code == 0
        assert out.splitlines()[1:] == ["# C'", "(u0,w1)*(u1,w0)", "# D"]

    def test_hilbert(self, capsys, files):
        code, out, _ = run(capsys, "hilbert", files("s", catalog.sphere(2, "s")), "--upto", "2")
        assert code == 0 and out.splitlines() == ["m | H", "0 | 1", "1 | 4", "2 | 10"]
        code, _, _ = run(capsys, "hilbert", files("s", catalog.sphere(2, "s")), "--upto", "-1")
        assert code == 2

    def test_euler_and_join(self, capsys, files):
        code, out, _ = run(capsys, "euler", files("rp2", catalog.rp2_6()))
        assert code == 0 and out == "0\n"
        code, out, _ = run(capsys, "join", files("p", catalog.points(2, "p")), files("q", catalog.points(2, "q")))
        assert code == 0 and len(loads_complex(out)[0].facets) == 4

    def test_classify_reports(self, capsys, files):
        code, out, _ = run(capsys, "classify", files("m", catalog.mobius_5()))
        assert code == 0 and "orientable: false" in out
        code, out, _ = run(capsys, "cm-classify", files("rp2", catalog.rp2_6()), "--coeff", "Zp:2")
        assert code == 0 and "cm: false" in out and "bbm: true" in out

    def test_kunneth_verify(self, capsys, files):
        rp = files("rp2", catalog.rp2_6())
        code, out, _ = run(capsys, "kunneth-verify", "--op", "join", rp, rp)
        assert code == 0 and "false" not in out

    def test_verify_suite(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "kunneth", "--seed", "42", "--n", "200")
        assert code == 0 and out.splitlines()[0] == "200/200 ok"


class TestExitCodes:
    def test_non_prime_modulus(self, capsys, files):
        code, _, err = run(capsys, "homology", files("rp2", catalog.rp2_6()), "--coeff", "Zp:4")
        assert code == 2 and "prime" in err

    def test_unknown_verb(self, capsys):
        code, _, err = run(capsys, "nope")
        assert code == 2 and "invalid choice" in err

    def test_help(self, capsys):
        code, out, _ = run(capsys, "--help")
        assert code == 0 and "sr-product" in out

    def test_malformed_input(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text('{"facets": [[1,\n')
        code, _, err = run(capsys, "euler", bad)
        assert code == 2 and "line 2, column 1" in err

    def test_missing_file(self, capsys, tmp_path):
        code, _, _ = run(capsys, "euler", tmp_path / "none.json")
        assert code == 2

    def test_failed_verification_exits_one(self, capsys, files, monkeypatch):
        from augmental import cli

        class Broken:
            ok = False

            def render(self):
                return "# join\nq | LHS | RHS | ok\n0 | Z | 0 | false"

        monkeypatch.setattr(cli, "verify_join", lambda *a, **k: Broken())
        p = files("p", catalog.point())
        code, out, _ = run(capsys, "kunneth-verify", "--op", "join", p, p)
        assert code == 1 and "false" in out


def test_output_is_byte_stable(capsys, files):
    path = files("t", catalog.torus_7())
    outputs = set()
    for _ in range(3):
        for argv in (["homology", path], ["classify", path], ["cm-classify", path, "--k", "2"],
                     ["sr-ideal", path], ["verify", "--suite", "uct", "--seed", "5", "--n", "10"]):
            outputs.add((tuple(map(str, argv)), run(capsys, *argv)[1]))
    assert len(outputs) == 5
