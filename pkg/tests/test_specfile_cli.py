import json
from importlib import resources
from pathlib import Path

import pytest

from weakhopf.cli import main
from weakhopf.errors import NotAssociative, ParseError
from weakhopf.fixtures import m2qz2, sweedler_data
from weakhopf.specfile import SpecBundle, emit_spec, parse_spec, write_spec


def _data_path(name):
    return Path(resources.files("weakhopf") / "data" / name)


def _sweedler_doc():
    data = sweedler_data()
    bundle = SpecBundle(field=data.R.field, wb=data.R,
                        elements={"g": data.g}, functionals={"chi": data.chi},
                        maps={"sigma": data.sigma, "delta": data.delta},
                        name="sweedler-data")
    return emit_spec(bundle)


# -- round trips -----------------------------------------------------------------


def test_roundtrip_sweedler():
    doc = _sweedler_doc()
    bundle = parse_spec(doc)
    assert emit_spec(bundle) == doc
    assert bundle.has_antipode
    assert bundle.elements["g"] == sweedler_data().g


def test_roundtrip_groupoid():
    ga = m2qz2()
    bundle = SpecBundle(field=ga.field, wb=ga, name="m2qz2")
    doc = emit_spec(bundle)
    again = emit_spec(parse_spec(doc))
    assert doc == again


def test_roundtrip_prime_field():
    from weakhopf.fields import Field
    from weakhopf.fixtures import qz
    wb = qz(2, Field.prime(2))
    doc = emit_spec(SpecBundle(field=wb.field, wb=wb))
    bundle = parse_spec(doc)
    assert bundle.field.p == 2
    assert emit_spec(bundle) == doc


def test_bundled_files_match_generators():
    assert json.loads(_data_path("sweedler-data.json").read_text()) == _sweedler_doc()
    from weakhopf.cli import _matrix_bundle
    assert json.loads(_data_path("m2q.json").read_text()) == emit_spec(_matrix_bundle(2))


def test_bundled_files_parse_and_validate():
    for name in ("sweedler-data.json", "m2q.json"):
        bundle = parse_spec(str(_data_path(name)))
        assert bundle.has_antipode


# -- parse errors ------------------------------------------------------------------


def test_parse_rejects_bad_json(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{not json")
    with pytest.raises(ParseError):
        parse_spec(str(p))


def test_parse_rejects_missing_keys():
    with pytest.raises(ParseError):
        parse_spec({"field": {"kind": "rationals"}, "dim": 1})


def test_parse_rejects_bad_scalar():
    doc = _sweedler_doc()
    doc["unit"] = ["1/0", "0"]
    with pytest.raises(ParseError):
        parse_spec(doc)


def test_parse_rejects_out_of_range_index():
    doc = _sweedler_doc()
    doc["mult"] = doc["mult"] + [[5, 0, 0, "1"]]
    with pytest.raises(ParseError):
        parse_spec(doc)


def test_parse_validates_axioms():
    doc = _sweedler_doc()
    # corrupt t*t from 1 to t: no longer a group, unit checks still fine but
    # associativity of the coproduct-compatible structure breaks weak axioms
    doc["mult"] = [[0, 0, 0, "1"], [0, 1, 1, "1"], [1, 0, 1, "1"], [1, 1, 1, "1"]]
    with pytest.raises(Exception) as exc:
        parse_spec(doc)
    assert not isinstance(exc.value, ParseError)


def test_parse_not_associative():
    from weakhopf.fields import QQ
    doc = {
        "field": {"kind": "rationals"}, "dim": 3, "basis": ["1", "a", "b"],
        "mult": [[0, 0, 0, "1"], [0, 1, 1, "1"], [0, 2, 2, "1"],
                 [1, 0, 1, "1"], [2, 0, 2, "1"],
                 [1, 1, 2, "1"], [1, 2, 0, "1"]],
        "unit": ["1", "0", "0"],
        "comult": [[0, 0, 0, "1"], [1, 1, 1, "1"], [2, 2, 2, "1"]],
        "counit": ["1", "1", "1"],
    }
    with pytest.raises(NotAssociative):
        parse_spec(doc)


def test_lenient_parse_allows_diagnosis():
    doc = _sweedler_doc()
    doc["counit"] = ["1", "0"]  # breaks the counit axiom
    bundle = parse_spec(doc, validate=False)
    from weakhopf.bialgebra import coalgebra_report
    assert not coalgebra_report(bundle.wb.coalgebra).passed


# -- CLI ---------------------------------------------------------------------------


def test_cli_check_passes(capsys):
    code = main(["check", str(_data_path("m2q.json"))])
    out = capsys.readouterr().out
    assert code == 0
    assert "AXIOM counit_weak_multiplicative PASS" in out
    assert "FAIL" not in out


def test_cli_check_reports_failures(tmp_path, capsys):
    doc = _sweedler_doc()
    doc["counit"] = ["1", "0"]
    p = tmp_path / "broken.json"
    p.write_text(json.dumps(doc))
    code = main(["check", str(p)])
    out = capsys.readouterr().out
    assert code == 1
    assert "FAIL" in out


def test_cli_check_stable_output(capsys):
    main(["check", str(_data_path("sweedler-data.json"))])
    first = capsys.readouterr().out
    main(["check", str(_data_path("sweedler-data.json"))])
    assert capsys.readouterr().out == first


def test_cli_check_missing_file(capsys):
    assert main(["check", "/nonexistent.json"]) == 2


def test_cli_usage_error(capsys):
    assert main(["frobnicate"]) == 2


def test_cli_grouplikes_matrix(capsys):
    code = main(["grouplikes", "--matrix", "2"])
    out = capsys.readouterr().out
    assert code == 0
    assert "COUNT 6 INVERTIBLE 2" in out


def test_cli_grouplikes_brute(tmp_path, capsys):
    from weakhopf.fields import Field
    from weakhopf.groupoid import matrix_algebra
    wb = matrix_algebra(2, Field.prime(2))
    p = tmp_path / "m2f2.json"
    write_spec(SpecBundle(field=wb.field, wb=wb), p)
    code = main(["grouplikes", "--brute", str(p)])
    out = capsys.readouterr().out
    assert code == 0
    assert "COUNT 7" in out


def test_cli_characters(capsys):
    code = main(["characters", str(_data_path("m2q.json")), "--verify", "chi"])
    out = capsys.readouterr().out
    assert code == 0
    assert "CHARACTER left PASS" in out
    assert "CHARACTER right PASS" in out
    assert "INVERSE two-sided" in out


def test_cli_characters_unknown_name(capsys):
    assert main(["characters", str(_data_path("m2q.json")), "--verify", "nope"]) == 2


def test_cli_panov_hopf(capsys):
    code = main(["panov", str(_data_path("sweedler-data.json")), "--hopf"])
    out = capsys.readouterr().out
    assert code == 0
    assert "VERDICT PASS" in out
    assert "CHI 1=1 t=-1" in out


def test_cli_panov_failing(tmp_path, capsys):
    doc = _sweedler_doc()
    doc["maps"]["sigma"] = [["1", "0"], ["0", "1"]]  # identity: wrong winding for delta != 0
    doc["maps"]["delta"] = [["0", "-1"], ["0", "1"]]
    p = tmp_path / "bad-ore.json"
    p.write_text(json.dumps(doc))
    code = main(["panov", str(p), "--hopf"])
    out = capsys.readouterr().out
    assert code == 1
    assert "FAIL" in out


def test_cli_ore_build(capsys):
    code = main(["ore", "build", str(_data_path("sweedler-data.json")),
                 "--verify-degree", "3"])
    out = capsys.readouterr().out
    assert code == 0
    assert "AXIOM antipode_composition PASS" in out


def test_cli_ore_build_rejected(tmp_path, capsys):
    # conjugation by the swap matrix is not a winding map: conditions fail
    from weakhopf.fields import QQ
    from weakhopf.fixtures import m2q
    from weakhopf.linalg import Matrix
    from weakhopf.panov import ad_map
    R = m2q()
    swap = R.element(0, 0, 1) + R.element(0, 1, 0)
    bundle = SpecBundle(field=QQ, wb=R, elements={"g": swap},
                        maps={"sigma": ad_map(R, swap), "delta": Matrix.zero(QQ, 4, 4)})
    p = tmp_path / "rejected.json"
    write_spec(bundle, p)
    code = main(["ore", "build", str(p)])
    out = capsys.readouterr().out
    assert code == 1
    assert "CLAUSE sigma_is_left_winding FAIL" in out


def test_cli_example_roundtrips(tmp_path, capsys):
    for argv in (["example", "sweedler"], ["example", "matrix", "3"],
                 ["example", "groupoid", "Z2", "2"],
                 ["example", "section5", "--group", "Z2", "--n", "1",
                  "--rho", "1,-1", "--q", "1"]):
        out_file = tmp_path / ("-".join(argv[1:]).replace("/", "_").replace(",", "_") + ".json")
        code = main(argv + ["-o", str(out_file)])
        capsys.readouterr()
        assert code == 0
        bundle = parse_spec(str(out_file))
        assert emit_spec(parse_spec(emit_spec(bundle))) == emit_spec(bundle)


def test_cli_example_section5_emits_extension_data(capsys):
    code = main(["example", "section5", "--group", "Z2", "--n", "1",
                 "--rho", "1,-1", "--q", "1"])
    out = capsys.readouterr().out
    assert code == 0
    doc = json.loads(out)
    assert set(doc["maps"]) == {"sigma", "delta"}
    assert "alpha" in doc["functionals"]
    bundle = parse_spec(doc)
    assert bundle.maps["delta"].apply(bundle.wb.basis_vector(1)) == \
        bundle.wb.basis_vector(1) - bundle.wb.unit
