"""Acceptance criteria, one test per criterion, all with exact equality."""

import pytest

from superjack.coeffield import ZERO, var
from superjack.orthobasis import expand_in_basis, jack
from superjack.pieri import pieri, pieri_by_transport
from superjack.sixvertex import SpectralData, asm_sum
from superjack.superalgebra import generator, multiply
from superjack.superpartitions import parse
from superjack.verify import (
    superpartition_range,
    verify_commutators,
    verify_dual,
    verify_duality,
    verify_lemma,
    verify_limits,
    verify_macdonald,
    verify_pieri,
    verify_sixvertex,
)

a = var("a")


def _first(report):
    if report.ok:
        return f"{report.checked} checks"
    m = report.mismatches[0]
    return f"{len(report.mismatches)} mismatches; first ({m.lam}, {m.n}, {m.kind}, {m.omega})"


def test_criterion_01_worked_coefficient(criterion):
    expected = (
        a**4
        * (2 * a + 3)
        * (3 * a + 4)
        * (416 * a**6 + 2000 * a**5 + 3484 * a**4 + 2608 * a**3 + 559 * a**2 - 256 * a - 108)
        / (1152 * (4 * a + 3) * (5 * a + 4) * (7 * a + 6) * (2 * a + 1) * (a + 1) ** 10)
    )
    coeffs = pieri(parse("(6,4,3;5,2,1)"), 3, "e", "alpha")
    omega = parse("(5,2,0;7,5,4,1)")
    got = coeffs[omega].total if omega in coeffs else None
    ok = got is not None and str(got) == str(expected) and got == expected
    assert criterion("criterion 1, worked e_3 coefficient", ok)


def test_criterion_02_asm_sum(criterion):
    data = SpectralData((7 * a - 1, 5 * a - 3, 4 * a - 4), (6 * a - 2, 3 * a - 5, a - 7))
    expected = -(416 * a**6 + 2000 * a**5 + 3484 * a**4 + 2608 * a**3 + 559 * a**2 - 256 * a - 108) / a**6
    assert criterion("criterion 2, size-3 ASM sum", asm_sum(data, "alpha") == expected)


def test_criterion_03_oracle_equivalence(criterion):
    report = verify_pieri(4, 2, 2, kinds=("e", "etilde"))
    assert criterion("criterion 3, e and e~ rules vs Jack-basis expansion", report.ok, _first(report))


def test_criterion_04_dual_rule(criterion):
    report = verify_dual(4, 2, 2)
    assert criterion(
        "criterion 4, g and g~ rules and transport with ||P_lam||^2/||P_Omega||^2",
        report.ok,
        _first(report),
    )


def _literal_transport_disagreements():
    bad = 0
    for lam in superpartition_range(4, 2):
        for kind, ns in (("g", (1, 2)), ("gtilde", (0, 1, 2))):
            for n in ns:
                oracle = expand_in_basis(multiply(generator(kind, n), jack(lam)))
                literal = pieri_by_transport(lam, n, kind, inverted=True)
                bad += sum(1 for om, c in literal.items() if c != oracle.get(om, ZERO))
    return bad


@pytest.mark.xfail(
    strict=True,
    reason="the transport with ||P_Omega||^2/||P_lam||^2 as stated contradicts the brute-force expansion; "
    "the reciprocal ratio is the one that holds",
)
def test_criterion_04_literal_norm_ratio(criterion):
    bad = _literal_transport_disagreements()
    criterion(
        "criterion 4, transport with ||P_Omega||^2/||P_lam||^2 as stated",
        bad == 0,
        f"refuted: {bad} coefficients disagree with the oracle" if bad else "",
    )
    assert bad == 0


def test_criterion_05_operators_and_commutators(criterion):
    report = verify_commutators(4, 4, 2, operators=True)
    assert criterion("criterion 5, e~_0, Q~, q_perp and commutator identities", report.ok, _first(report))


def test_criterion_06_lemma(criterion):
    report = verify_lemma((1, 2, 3))
    assert criterion("criterion 6, rational identity for n = 1, 2, 3", report.ok, _first(report))


def test_criterion_07_limits(criterion):
    report = verify_limits(4, 2, 2)
    assert criterion("criterion 7, determinants as limits of generic ones", report.ok, _first(report))


def test_criterion_08_norms_and_duality(criterion):
    report = verify_duality(4, 4)
    assert criterion("criterion 8, norm formula and omega-hat duality", report.ok, _first(report))


def test_criterion_09_macdonald(criterion):
    report = verify_macdonald(3, 2, 2)
    note = "conjecture verified on range" if report.ok else "counterexample found"
    assert note in report.notes
    assert criterion("criterion 9, q,t rule vs Gram-Schmidt Macdonald", report.ok, f"{note}, {_first(report)}")


def test_criterion_10_sixvertex(criterion):
    report = verify_sixvertex(4, 2, 2, generic_n=3)
    assert criterion("criterion 10, Det vs ASM sum and generic Det vs D'", report.ok, _first(report))
