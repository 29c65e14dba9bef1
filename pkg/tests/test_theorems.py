import pytest

import theorem_checks
from augmentation import principal
from cli_io import main
from induced_order import leq_induced
from poset_core import delete_element, leq
from theorem_checks import CheckResult, noncommutativity_witness, run_all

SHORT = 2


@pytest.mark.parametrize(
    "name, suite, takes_len",
    theorem_checks.SUITES,
    ids=[name for name, _, _ in theorem_checks.SUITES],
)
def test_suite_passes(name, suite, takes_len):
    result = suite(max_len=SHORT) if takes_len else suite()
    assert result.passed, result.detail
    assert result.checked > 0


def test_noncommutativity_witness_really_differs():
    p, v, w, r1, r2 = noncommutativity_witness()
    assert r1 != r2
    first = principal(delete_element(p, "a"), "b")
    second = principal(delete_element(p, "b"), "a")
    assert leq_induced(first, v, w) == r1
    assert leq_induced(second, v, w) == r2
    # the two auxiliaries sit differently relative to x
    assert (leq(p, "x", "a"), leq(p, "a", "x")) != (leq(p, "x", "b"), leq(p, "b", "x"))


def test_check_result_row():
    row = CheckResult("duality", False, 4, "1 failures").as_row()
    assert row == {"suite": "duality", "status": "FAIL", "checked": 4, "detail": "1 failures"}


def test_run_all_reports_every_suite(monkeypatch):
    monkeypatch.setattr(
        theorem_checks,
        "SUITES",
        [("morphological order", theorem_checks.check_morphological, True)],
    )
    results = run_all(max_len=SHORT)
    assert [r.name for r in results] == ["morphological order"]
    assert results[0].passed


def test_selftest_command(monkeypatch, capsys):
    monkeypatch.setattr(
        theorem_checks,
        "SUITES",
        [
            ("chronological order", theorem_checks.check_chronological, True),
            ("auxiliary embedding", theorem_checks.check_aux_embedding, False),
        ],
    )
    assert main(["selftest", "--max-len", "2"]) == 0
    out = capsys.readouterr().out
    assert "PASS" in out and "FAIL" not in out
    assert "✅" in out


def test_selftest_reports_failure(monkeypatch, capsys):
    def broken(max_len=None):
        return CheckResult("broken", False, 1, "always fails")

    monkeypatch.setattr(theorem_checks, "SUITES", [("broken", broken, False)])
    assert main(["selftest"]) == 1
    assert "broken" in capsys.readouterr().err


@pytest.mark.parametrize(
    "suite",
    [
        theorem_checks.check_oracle_equivalence,
        theorem_checks.check_chronological,
        theorem_checks.check_morphological,
        theorem_checks.check_trivial_sum,
        theorem_checks.check_product_embedding,
        theorem_checks.check_partition,
    ],
    ids=lambda suite: suite.__name__,
)
def test_suite_passes_at_default_lengths(suite):
    result = suite()
    assert result.passed, result.detail
    assert result.checked > 0


def test_product_embedding_reports_pairs_beyond_the_product():
    result = theorem_checks.check_product_embedding()
    assert result.passed, result.detail
    assert "beyond the product" in result.detail
