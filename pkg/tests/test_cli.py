import json

from blockrep.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_lr_single_coefficient(capsys):
    code, out, _ = run(capsys, "lr", "[2,1]", "[2,1]", "[3,2,1]")
    assert code == 0
    assert json.loads(out)["coefficient"] == 2


def test_lr_full_table(capsys):
    code, out, _ = run(capsys, "lr", "[1]", "[1]")
    assert code == 0
    assert json.loads(out)["table"] == {"[2]": 1, "[1,1]": 1}


def test_lr_trivial(capsys):
    code, out, _ = run(capsys, "lr", "[]", "[3,1]")
    assert code == 0
    assert json.loads(out)["table"] == {"[3,1]": 1}


def test_decompose_tsv(capsys):
    code, out, _ = run(capsys, "--format", "tsv", "decompose", "[1]", "[1]")
    assert code == 0
    assert out.splitlines() == ["[1,1]\t1", "[2]\t1"]


def test_parse_error_exits_2(capsys):
    code, _, err = run(capsys, "lr", "[2,", "[1]")
    assert code == 2
    assert "error" in err


def test_cauchy_pass(capsys):
    code, out, _ = run(capsys, "cauchy", "--n", "2", "--dmax", "4")
    assert code == 0
    assert json.loads(out)["pass"] is True
    code, out, _ = run(capsys, "cauchy", "--n", "1", "--dmax", "10")
    assert code == 0


def test_singular_poly(capsys):
    code, out, _ = run(capsys, "singular-poly", "--n", "2", "--d", "2")
    assert code == 0
    data = json.loads(out)
    assert data["kernel_dim"] == 2 == data["expected_kernel_dim"]
    assert data["span_check"] is True


def test_singular_ghat_cases(capsys):
    code, out, _ = run(capsys, "singular-ghat", "--c", "-1",
                       "--level-max", "4")
    assert code == 0
    data = json.loads(out)
    assert [b["level"] for b in data["blocks"]] == [4]
    assert data["blocks"][0]["generators_as_det_monomials"] == [[0, 1]]

    code, out, _ = run(capsys, "singular-ghat", "--c", "1/2",
                       "--level-max", "5")
    assert code == 0
    assert json.loads(out)["blocks"] == []

    code, out, _ = run(capsys, "singular-ghat", "--c", "1", "--level-max", "2")
    assert code == 0
    assert json.loads(out)["blocks"][0]["generators_as_det_monomials"] == [[2]]


def test_commutator_check(capsys):
    code, out, _ = run(capsys, "commutator-check", "--k", "2", "--l", "2",
                       "--c", "5/3")
    assert code == 0
    assert json.loads(out)["match"] is True


def test_multiplicity(capsys):
    code, out, _ = run(capsys, "multiplicity", "--chi2", "[1]",
                       "--nu1", '{"kind":"-","body":[1]}',
                       "--nu2", '{"kind":"+","body":[2]}')
    assert code == 0
    assert json.loads(out)["multiplicity"] == 1


def test_reciprocity_single(capsys):
    code, out, _ = run(capsys, "reciprocity", "--nu", "[0,0,0]",
                       "--lambda-minus", '{"kind":"-","body":[1]}',
                       "--mu-plus", '{"kind":"+","body":[1]}',
                       "--N-list", "3,4,5")
    assert code == 0
    data = json.loads(out)
    assert data["lhs"] == 1 and data["holds"]


def test_reciprocity_random_deterministic(capsys):
    code1, out1, _ = run(capsys, "--seed", "5", "reciprocity",
                         "--random", "8", "--size-bound", "3")
    code2, out2, _ = run(capsys, "--seed", "5", "reciprocity",
                         "--random", "8", "--size-bound", "3")
    assert code1 == code2 == 0
    assert out1 == out2
    data = json.loads(out1)
    assert data["count"] == 8 and data["failed"] == 0
    assert len(data["cases"]) == 8
    # the flag is also accepted after the subcommand
    code3, out3, _ = run(capsys, "reciprocity", "--random", "8",
                         "--size-bound", "3", "--seed", "5")
    assert code3 == 0 and out3 == out1


def test_reciprocity_batch(tmp_path, capsys):
    batch = tmp_path / "cases.jsonl"
    lines = [
        {"nu": [0, 0, 0], "lambda_minus": {"kind": "-", "body": [1]},
         "mu_plus": {"kind": "+", "body": [1]}, "N_list": [3, 4, 5]},
        {"nu": [1, 0, 0, -1], "lambda_minus": {"kind": "-", "body": [1]},
         "mu_plus": {"kind": "+", "body": [1]}, "N_list": [4, 5, 6]},
    ]
    batch.write_text("\n".join(json.dumps(x) for x in lines) + "\n")
    code, out, _ = run(capsys, "reciprocity", "--batch", str(batch))
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert [r["line"] for r in rows] == [1, 2]
    assert all(r["holds"] for r in rows)


def test_reciprocity_batch_flags_bad_lines(tmp_path, capsys):
    batch = tmp_path / "cases.jsonl"
    batch.write_text('{"nu": [0,1]}\n')
    code, out, _ = run(capsys, "reciprocity", "--batch", str(batch))
    assert code == 2
    assert "error" in json.loads(out.splitlines()[0])


def test_kac_radul(capsys):
    code, out, _ = run(capsys, "kac-radul", "--nu", "[1,0,-1]", "--N", "3",
                       "--size-bound", "1")
    assert code == 0
    data = json.loads(out)
    assert data["entries"] == [{"lambda_body": [1], "mu_body": [1],
                                "multiplicity": 1}]


def test_resource_cap_env(monkeypatch, capsys):
    monkeypatch.setenv("BLOCKREP_MAX_DEGREE", "3")
    code, _, err = run(capsys, "cauchy", "--n", "2", "--dmax", "5")
    assert code == 2
    assert "cap" in err


def test_chi_support_limit(capsys):
    code, _, err = run(capsys, "singular-ghat", "--c", "0", "--chi2", "[3]",
                       "--level-max", "2")
    assert code == 2
    assert "2 boxes" in err
