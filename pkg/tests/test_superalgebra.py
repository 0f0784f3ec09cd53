import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from superjack.coeffield import ONE, ZERO, const, var
from superjack.superalgebra import (
    ExplicitSuperPoly,
    PowerSumIndex,
    SymSuperFunc,
    collect,
    d_operator,
    expand,
    generator,
    multiply,
    multiply_explicit,
    oracle_variables,
    p_product,
    scalar_alpha,
    to_m,
    to_p,
)
from superjack.superpartitions import enumerate_superpartitions, parse

a = var("a")


def m(text, c=1):
    return SymSuperFunc("m", {parse(text): const(c)})


def p(text, c=1):
    return SymSuperFunc("p", {parse(text): const(c)})


# ---------------------------------------------------------------------------
# generators


def test_etilde_is_a_monomial():
    assert generator("etilde", 2) == m("(0;1,1)")


def test_htilde_weights():
    assert generator("htilde", 1) == m("(1;)", 2) + m("(0;1)")


def test_g_one():
    g1 = generator("g", 1)
    assert g1.basis == "p"
    assert g1.coeffs == {parse("(;1)"): 1 / a}


@pytest.mark.parametrize("kind,k", [("e", 0), ("p", 0), ("g", 0), ("etilde", -1), ("x", 1)])
def test_generator_range(kind, k):
    with pytest.raises(ValueError):
        generator(kind, k)


# ---------------------------------------------------------------------------
# power sums


def test_p_product_examples():
    assert p_product(PowerSumIndex((0,)), PowerSumIndex((0,))) == (0, None)
    assert p_product(PowerSumIndex((0,)), PowerSumIndex((2,))) == (-1, PowerSumIndex((2, 0)))
    assert p_product(PowerSumIndex((), (2,)), PowerSumIndex((), (1,))) == (1, PowerSumIndex((), (2, 1)))


def test_fermionic_square_vanishes():
    assert multiply(generator("ptilde", 0), generator("ptilde", 0)).is_zero()


# ---------------------------------------------------------------------------
# products


def test_e1_squared():
    assert multiply(generator("e", 1), generator("e", 1)) == m("(;2)") + m("(;1,1)", 2)


def test_etilde0_times_e1():
    assert multiply(generator("etilde", 0), generator("e", 1)) == m("(1;)") + m("(0;1)")


def test_lazy_product_matches_full_expansion():
    pairs = [
        (m("(1;)"), m("(0;1)")),
        (m("(2,0;)"), m("(;1,1)")),
        (m("(1;1)", 3) + m("(0;2)"), m("(0;)") + m("(;1)")),
    ]
    for f, g in pairs:
        assert multiply(f, g) == multiply_explicit(f, g)


gens = st.sampled_from(
    [("e", 1), ("e", 2), ("etilde", 0), ("etilde", 1), ("h", 2), ("htilde", 1), ("p", 2), ("ptilde", 1), ("ptilde", 0)]
)


def _theta_degree(f):
    (m_,) = f.fermionic_degrees()
    return m_


@settings(max_examples=25, deadline=None)
@given(gens, gens, gens)
def test_associative_and_supercommutative(x, y, z):
    f, g, h = (generator(*t) for t in (x, y, z))
    assert multiply(multiply(f, g), h) == multiply(f, multiply(g, h))
    sign = -1 if _theta_degree(f) * _theta_degree(g) % 2 else 1
    assert multiply(f, g) == multiply(g, f).scale(sign)


# ---------------------------------------------------------------------------
# explicit variables


def test_expand_examples():
    assert expand(m("(0;)"), 2) == ExplicitSuperPoly(2, {((0,), (0, 0)): ONE, ((1,), (0, 0)): ONE})
    assert expand(m("(1;)"), 2) == ExplicitSuperPoly(2, {((0,), (1, 0)): ONE, ((1,), (0, 1)): ONE})


def test_collect_expand_roundtrip_example():
    f = m("(3,1,0;2,1)")
    assert collect(expand(f, 7)) == f


def test_collect_expand_identity_up_to_degree_6():
    for n in range(7):
        for mm in range(7 - n):
            N = oracle_variables(n, mm)
            for lam in enumerate_superpartitions(n, mm):
                f = SymSuperFunc.monomial(lam)
                assert collect(expand(f, N)) == f


def test_insufficient_variables_are_detected():
    with pytest.raises(ValueError):
        expand(m("(;1,1,1)"), 2)
    with pytest.raises(ValueError):
        collect(expand(m("(;1,1)"), 2))


# ---------------------------------------------------------------------------
# change of basis


def test_basis_examples():
    assert to_m(p("(;1)")) == m("(;1)")
    assert to_m(p("(0;)")) == m("(0;)")
    assert to_m(p("(;2)")) == m("(;2)")
    assert to_m(p("(;1,1)")) == m("(;2)") + m("(;1,1)", 2)


def test_p_to_m_agrees_with_multiplication():
    assert to_m(p("(;1,1)")) == multiply(generator("p", 1), generator("p", 1))
    assert to_m(p("(1,0;2)")) == to_m(multiply(multiply(generator("ptilde", 1), generator("ptilde", 0)), generator("p", 2)))


def test_to_m_to_p_identity_up_to_degree_6():
    for n in range(7):
        for mm in range(7 - n):
            for lam in enumerate_superpartitions(n, mm):
                f = SymSuperFunc.monomial(lam, "p")
                assert to_p(to_m(f)).coeffs == f.coeffs


# ---------------------------------------------------------------------------
# d operator


def test_d_examples():
    assert to_p(d_operator(generator("p", 2))) == p("(1;)", 2)
    assert d_operator(SymSuperFunc.one()).is_zero()
    assert d_operator(d_operator(generator("e", 3))).is_zero()


@pytest.mark.parametrize("k", range(0, 6))
def test_d_on_generators(k):
    assert d_operator(generator("e", k + 1)) == generator("etilde", k)
    assert d_operator(generator("h", k + 1)) == generator("htilde", k)
    assert d_operator(generator("p", k + 1)) == generator("ptilde", k).scale(k + 1)


# ---------------------------------------------------------------------------
# scalar product


def test_scalar_examples():
    assert scalar_alpha(p("(;2,1)"), p("(;2,1)")) == 2 * a**2
    assert scalar_alpha(p("(;2)"), p("(;1,1)")) == ZERO
    assert scalar_alpha(p("(0;)"), p("(0;)")) == a


def test_scalar_fermionic_sign():
    # two fermions: the reordering sign (-1)^(m(m-1)/2) is -1
    assert scalar_alpha(p("(1,0;)"), p("(1,0;)")) == -(a**2)


def test_distinct_power_sums_are_orthogonal():
    sector = enumerate_superpartitions(3, 1)
    for x in sector:
        for y in sector:
            val = scalar_alpha(SymSuperFunc.monomial(x, "p"), SymSuperFunc.monomial(y, "p"))
            assert val.is_zero() == (x != y)


def test_json_shape():
    doc = (m("(1;)") + m("(0;1)", 2)).to_json()
    assert doc == {"basis": "m", "terms": [{"sp": "(1;)", "c": "1"}, {"sp": "(0;1)", "c": "2"}]}
