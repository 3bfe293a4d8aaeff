from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from kleene_chains.recurrence import (
    CASE_LABELS,
    SequenceTable,
    base_sequences,
    catalan,
    convolve,
    f_seq,
    g_seq,
    sequence,
    subsequences,
    t_seq,
    u_seq,
)

N = 200


@pytest.fixture(scope="module")
def base():
    return base_sequences(N)


@pytest.fixture(scope="module")
def subs():
    return subsequences(N)


def test_catalan_examples():
    assert catalan(1) == 1
    assert catalan(4) == 405 // 3**4
    assert catalan(10) == comb(18, 9) // 10 == 4862
    with pytest.raises(ValueError):
        catalan(0)


def test_small_tables(table):
    assert g_seq(2).values == (3, 9)
    assert g_seq(6).values[-1] == 30618
    assert g_seq(9).values[-1] == 28146690
    assert u_seq(3).values == (1, 3, 18)
    assert u_seq(7).values[-1] == 96228
    assert 3**5 * 42 == u_seq(6).value(6) == 10206
    assert f_seq(3).values == (1, 1, 6)
    assert f_seq(8).values[-1] == 255313
    assert t_seq(2).values == (1, 5)
    assert t_seq(5).value(5) == 1938
    assert t_seq(9).value(9) == 16242474
    for name, values in table.items():
        assert list(base_sequences(9)[name].values) == values


def test_f2_by_hand():
    # f_1 * (2 C_1 3^0 - f_1)
    assert f_seq(2).value(2) == 1 * (2 * 1 * 1 - 1)


@pytest.mark.parametrize("method", ["closed", "recurrence"])
def test_g_u_methods_agree(method, base):
    assert g_seq(60, method=method).values == base["g"].values[:60]
    assert u_seq(60, method=method).values == base["u"].values[:60]


def test_unknown_method():
    with pytest.raises(ValueError):
        g_seq(3, method="fft")


def test_identities(base, subs):
    g, t, f, u, c = (base[k].values for k in ("g", "t", "f", "u", "catalan"))
    for n in range(1, N + 1):
        i = n - 1
        assert g[i] == t[i] + f[i] + u[i]
        assert (t[i] + f[i]) % 2 == 0 and u[i] == (t[i] + f[i]) // 2
        assert u[i] == 3 ** (n - 1) * c[i]
        assert g[i] == 3**n * c[i]
        assert min(g[i], t[i], f[i], u[i]) >= 0
    s = {k: v.values for k, v in subs.items()}
    for i in range(1, N):
        assert t[i] == sum(s[f"T{k}"][i] for k in range(1, 6))
        assert u[i] == sum(s[f"U{k}"][i] for k in range(1, 4))
        assert f[i] == s["F"][i]
        assert s["T4"][i] == s["U2"][i]
        assert s["T5"][i] == s["U1"][i]
        corollary = s["T1"][i] + s["T2"][i] + s["T3"][i] + 2 * (s["T4"][i] + s["T5"][i]) + s["U3"][i] + s["F"][i]
        assert g[i] == corollary


def test_convolve_examples():
    t, u = t_seq(5), u_seq(5)
    assert convolve(t, t).value(4) == 85
    assert convolve(u, u).value(5) == 378
    assert convolve(SequenceTable("a", (7,)), SequenceTable("b", (2,))).values == (0,)
    with pytest.raises(ValueError):
        convolve(t_seq(3), t_seq(4))


def test_subsequence_examples():
    s = subsequences(7)
    assert s["T2"].value(5) == 330
    assert s["T5"].value(7) == 47392
    assert s["U2"].value(4) == 27
    assert set(s) == set(CASE_LABELS)
    assert all(seq.value(1) == 0 for seq in s.values())


def test_sequence_lookup():
    assert sequence("u3", 4).values == (0, 1, 6, 45)
    assert sequence("catalan", 5).values == (1, 1, 2, 5, 14)
    with pytest.raises(KeyError):
        sequence("zz", 3)


def test_value_out_of_range():
    with pytest.raises(IndexError):
        g_seq(3).value(4)


ints = st.lists(st.integers(min_value=0, max_value=10**30), min_size=1, max_size=25)


@given(ints, st.data())
def test_convolution_commutes(a, data):
    b = data.draw(st.lists(st.integers(min_value=0, max_value=10**30), min_size=len(a), max_size=len(a)))
    A, B = SequenceTable("a", tuple(a)), SequenceTable("b", tuple(b))
    assert convolve(A, B).values == convolve(B, A).values
