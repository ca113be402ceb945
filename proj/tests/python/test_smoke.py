import os
import subprocess

import pytest

import flopcalc


def test_rp_numbers():
    assert flopcalc.sw_number(flopcalc.rp_product([4]), [4]) == 1
    assert flopcalc.sw_number(flopcalc.parse_space("rp:2,2"), [2, 1, 1]) == 0
    assert flopcalc.sw_number(flopcalc.parse_space("rp:3"), [2, 1]) == 0


def test_space_properties():
    s = flopcalc.parse_space("hyp:2,4")
    assert s.dim == 5
    assert s.spec == "hyp:2,4"
    assert not s.root_representable
    assert flopcalc.s_number(s, [5]) == 1


def test_parse_error_is_value_error():
    with pytest.raises(ValueError):
        flopcalc.parse_space("rp:2,x")


def test_weight_mismatch():
    with pytest.raises(ValueError):
        flopcalc.sw_number(flopcalc.rp_product([2]), [1])


def test_number_vector_matches_partitions():
    vec = flopcalc.number_vector(flopcalc.rp_product([2]))
    assert [p for p, _ in vec] == flopcalc.partitions(2)
    assert [b for _, b in vec] == [True, True]


def test_bundles():
    assert flopcalc.e_bundle(2, 0).dim == 5
    assert flopcalc.s_number(flopcalc.e_bundle(3, 5), [14]) == 1
    assert flopcalc.s_number(flopcalc.r_bundle(2), [4, 4]) == 1
    f = flopcalc.flop_class([2], [1, 1], [0, 0])
    assert f.dim == 5


def test_invariant_dimensions():
    dims = [flopcalc.invariant_number_space(n)["dimension"] for n in range(1, 9)]
    assert dims == [0, 1, 0, 2, 0, 2, 0, 3]
    assert flopcalc.invariant_number_space(8)["spanned_by_w1_numbers"]


def test_quotient_structure():
    assert flopcalc.intersection_matrix(8) == [[1, 1, 1], [0, 1, 0], [0, 0, 1]]
    assert flopcalc.basis_change_diagonal_check(12)
    parts, independent = flopcalc.quotient_basis(8)
    assert parts == [[2, 2, 2, 2], [4, 2, 2], [8]]
    assert independent
    assert flopcalc.relation_check(2) == (True, True)


def test_verify_report():
    r = flopcalc.verify("prop3", max_dim=10)
    assert r["pass"] and r["claim"] == "prop3" and r["witness"] is None
    with pytest.raises(ValueError):
        flopcalc.verify("nope")


def test_run_cli_in_process():
    code, out, err = flopcalc.run_cli(["number", "rp:4", "4"])
    assert (code, out) == (0, "1\n")
    code, _, err = flopcalc.run_cli(["number", "rp:2,x", "1,1"])
    assert code == 2 and "x" in err


def test_cli_binary():
    exe = os.environ.get("FLOPCALC_CLI")
    if not exe:
        pytest.skip("FLOPCALC_CLI not set")
    out = subprocess.run([exe, "table", "quotient-basis", "12"], capture_output=True, text=True, check=True)
    assert out.stdout.count("4j=") == 4
