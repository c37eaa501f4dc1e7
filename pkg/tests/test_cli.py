import json

import pytest

from cycenum import CosetPartition, GaussSumValue, MembershipReport, PipelineReport
from cycenum.cli import main
from cycenum.weights import WeightSpectrum

PAPER_PARTITION = """{0}
{1,3,9,11}
{2,6}
{4,12}
{5,15,13,7}
{8}
{10,14}
"""


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_cosets_text_matches_paper(capsys):
    code, out, err = run_cli(capsys, "cosets", "16", "3")
    assert code == 0
    assert out == PAPER_PARTITION
    assert err == ""


def test_cosets_not_coprime_exit_code(capsys):
    code, out, err = run_cli(capsys, "cosets", "16", "4")
    assert code == 1
    assert out == ""
    assert err.startswith("NotCoprime")


def test_usage_error_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["weights", "2", "4", "3", "--method", "bogus"])
    assert exc.value.code == 2


def test_cosets_json_roundtrip(capsys):
    code, out, err = run_cli(capsys, "cosets", "16", "3", "--json", "--members")
    assert code == 0 and err == ""
    doc = json.loads(out)
    assert doc["schema"] == 1
    from cycenum import cosets_full

    assert CosetPartition.from_dict(doc) == cosets_full(16, 3)


def test_cosets_json_sizes_only(capsys):
    code, out, _ = run_cli(capsys, "cosets", "16", "3", "--json")
    doc = json.loads(out)
    assert all("members" not in c for c in doc["cosets"])
    assert [c["size"] for c in doc["cosets"]] == [1, 4, 2, 2, 4, 1, 2]


def test_factor_text_and_json(capsys):
    code, out, err = run_cli(capsys, "factor", "5", "2")
    assert code == 0 and err == ""
    assert out == "[1, 1]\n[1, 1, 1, 1, 1]\n"
    code, out, _ = run_cli(capsys, "factor", "5", "2", "--json")
    doc = json.loads(out)
    assert doc["factors"] == [[1, 1], [1, 1, 1, 1, 1]]


def test_code_matrix_output(capsys):
    code, out, err = run_cli(capsys, "code", "2", "4", "3", "--matrix", "--json")
    assert code == 0 and err == ""
    doc = json.loads(out)
    assert doc["generator"] == [1, 1]
    assert doc["matrix"] == [
        [1, 1, 0, 0, 0],
        [0, 1, 1, 0, 0],
        [0, 0, 1, 1, 0],
        [0, 0, 0, 1, 1],
    ]


def test_weights_both_methods_agree(capsys):
    code, out, err = run_cli(capsys, "weights", "2", "4", "1", "--method", "both")
    assert code == 0 and err == ""
    assert "A_8 = 15" in out
    code, out, _ = run_cli(capsys, "weights", "2", "4", "3", "--method", "both",
                           "--json")
    doc = json.loads(out)
    assert doc["spectrum"] == {"0": 1, "2": 10, "4": 5}
    assert doc["enumerator_check"] == {"A11": 16}
    spectrum = WeightSpectrum.from_dict(doc["spectrum"], doc["n"])
    assert spectrum.total() == 16


def test_dual_subcommand(capsys):
    code, out, err = run_cli(capsys, "dual", "2", "4", "1", "--json")
    assert code == 0 and err == ""
    doc = json.loads(out)
    assert doc["dual_check"] == {"A11": 2**11}
    assert doc["dual_spectrum"]["3"] == 35


def test_gauss_json_roundtrip(capsys):
    code, out, err = run_cli(capsys, "gauss", "2", "4", "5", "--json")
    assert code == 0 and err == ""
    doc = json.loads(out)
    g = GaussSumValue.from_dict(doc)
    assert abs(g.value - (-4.0)) < 1e-9
    assert abs(g.magnitude - 4.0) < 1e-9


def test_theta_subcommand(capsys):
    code, out, err = run_cli(capsys, "theta", "2", "4", "3", "--json")
    assert code == 0 and err == ""
    doc = json.loads(out)
    assert doc["theta"] == 2
    assert doc["weight_divisor"] == 2
    assert doc["epsilon_bound"] == 0.125


def test_icq_check_roundtrip(capsys):
    code, out, err = run_cli(capsys, "icq-check", "2", "4", "1",
                             "--epsilon", "0.6", "--json")
    assert code == 0 and err == ""
    doc = json.loads(out)
    doc.pop("schema")
    report = MembershipReport.from_dict(doc)
    assert not report.member
    assert report.failures == ["EpsilonExceedsBound"]


def test_pipeline_roundtrip_and_exit(capsys):
    code, out, err = run_cli(capsys, "pipeline", "2", "4", "3",
                             "--epsilon", "0.125", "--seed", "7", "--json")
    assert code == 0 and err == ""
    doc = json.loads(out)
    report = PipelineReport.from_dict(doc["report"])
    assert report.exact and report.seed == 7


def test_pipeline_trials_summary(capsys):
    code, out, err = run_cli(capsys, "pipeline", "2", "4", "3",
                             "--epsilon", "0.125", "--seed", "0",
                             "--trials", "5", "--json")
    assert code == 0 and err == ""
    doc = json.loads(out)
    assert doc["exact_count"] == 5
    assert len(doc["trial_results"]) == 5


def test_pipeline_membership_failure_exit_code(capsys):
    code, out, err = run_cli(capsys, "pipeline", "2", "4", "3",
                             "--epsilon", "0.3", "--seed", "0")
    assert code == 1
    assert err.startswith("MembershipFailed")


def test_byte_identical_repeat_runs(capsys):
    for argv in (
        ["cosets", "16", "3", "--json", "--members"],
        ["weights", "2", "4", "3", "--method", "both", "--json"],
        ["gauss", "2", "4", "1", "--json"],
        ["pipeline", "2", "4", "3", "--epsilon", "0.125", "--seed", "9",
         "--trials", "3", "--json"],
    ):
        _, out1, _ = run_cli(capsys, *argv)
        _, out2, _ = run_cli(capsys, *argv)
        assert out1 == out2


def test_no_stderr_on_success(capsys):
    for argv in (
        ["cosets", "15", "2"],
        ["factor", "15", "2"],
        ["code", "2", "4", "1"],
        ["gauss", "3", "2", "1", "--json"],
        ["weights", "3", "2", "2", "--method", "both"],
        ["dual", "2", "4", "3"],
        ["theta", "2", "4", "1", "--json"],
        ["icq-check", "2", "4", "1", "--epsilon", "0.4"],
        ["pipeline", "2", "4", "1", "--epsilon", "0.5", "--seed", "1"],
    ):
        code, _, err = run_cli(capsys, *argv)
        assert code == 0, argv
        assert err == "", argv
