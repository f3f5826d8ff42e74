import json
import os
import subprocess

import pytest

import lucaslp as lp


def test_exact_values_are_python_ints():
    assert lp.fib(10) == 55
    assert lp.lucas_num(10) == 123
    big = lp.fib(300)
    assert isinstance(big, int)
    a, b = 0, 1
    for _ in range(300):
        a, b = b, a + b
    assert big == a


def test_mod_and_digits():
    assert lp.is_prime(2**61 - 1)
    assert not lp.is_prime(1)
    assert lp.digits_base_p(23, 5) == [3, 4]
    assert lp.fib_mod(10**18, 7) == lp.rec_term((0, 1, 1, 1), 10**18, 7)
    assert lp.binomial_mod_lucas(1000, 300, 13) == lp.binomial_exact(1000, 300) % 13
    assert lp.inverse_mod(3, 7) == 5


def test_errors_map_to_exceptions():
    with pytest.raises(lp.NotPrime):
        lp.fib_mod(5, 9)
    with pytest.raises(lp.NonInvertible):
        lp.inverse_mod(14, 7)
    assert issubclass(lp.NotPrime, ValueError)


def test_residuals():
    assert lp.catalan_residual(20, 7) == 0
    assert lp.lucas_catalan_residual(20, 7) == 0
    assert lp.general_catalan_residual((3, -1, 2, 5), 12, 4) == 0
    assert lp.shift_identity_residual((0, 1, 2, 1), 10, 5, 7) == 0
    with pytest.raises(lp.IndexOrder):
        lp.catalan_residual(3, 5)


def test_special_sequences():
    assert [lp.apery(n) for n in range(4)] == [1, 5, 73, 1445]
    assert [lp.omega(n) for n in range(5)] == [1, 1, 3, 19, 211]
    assert lp.apery_mod(100, 7) == lp.apery(100) % 7


def test_lp_check():
    v = lp.lp_check(lp.SequenceSpec.fib(5, 1), 5)
    assert v["holds"] and v["counterexample"] is None
    v = lp.lp_check(lp.SequenceSpec.fib(1, 0), 3)
    assert not v["holds"]
    ce = v["counterexample"]
    assert ce["n"] == 3 and ce["digits"] == [0, 1]
    assert str(lp.SequenceSpec.fib(5, 1)) == "F(5n+1)"


def test_enumerate_b_and_conditions():
    r = lp.enumerate_valid_b("fib", 5, 5)
    assert r["residues"] == [1, 2, 8, 19]
    assert r["disagreements"] == 0
    assert lp.enumerate_valid_b("lucas", 1, 5)["residues"] == [1]
    assert lp.theorem1_condition(5, 1, 5)
    assert lp.theorem3_condition((0, 1, 1, 1), 5, 1, 5)


def test_cross_validate_small_grid():
    r = lp.cross_validate("general", 7, 6, 6, rec=(0, 1, 2, 1))
    assert r["cells"] == 4 * 6 * 7
    assert r["disagreements"] == 0


def test_periods():
    assert lp.period_mod((0, 1, 1, 1), 5) == (0, 20)
    assert lp.alpha(11) == 10


def test_run_cli_in_process():
    code, out, err = lp.run_cli(["lp-check", "fib-affine", "--a", "5", "--b", "1", "--prime", "5"])
    assert code == 0 and err == ""
    doc = json.loads(out)
    assert doc["verdicts"][0]["holds"] is True
    code, _, err = lp.run_cli(["no-such-command"])
    assert code == 2 and err


@pytest.mark.skipif("LUCASLP_CLI" not in os.environ, reason="CLI binary not provided")
def test_cli_binary_matches_module():
    args = ["enumerate-b", "--family", "fib", "--a", "5", "--prime", "5"]
    proc = subprocess.run([os.environ["LUCASLP_CLI"], *args], capture_output=True, text=True)
    code, out, _ = lp.run_cli(args)
    assert proc.returncode == code
    assert proc.stdout == out
