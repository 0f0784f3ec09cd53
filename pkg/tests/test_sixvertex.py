from itertools import product as cartesian

import pytest

from superjack.coeffield import ONE, var
from superjack.pieri import det_pieri
from superjack.sixvertex import (
    ASM,
    SpectralData,
    asm_sum,
    asm_weight,
    d_prime,
    det_asm_identity,
    enumerate_asm,
    generic_det_vs_d_prime,
    ik_determinant,
    ik_prefactor,
    is_asm,
)
from superjack.superpartitions import classify_strip, parse, strips

a = var("a")
X = SpectralData.symbolic(3)
x1, x2, x3 = X.xs
y1, y2, y3 = X.ys


def _e(i, j):
    return X.xs[i - 1] - X.ys[j - 1]


def _o(i, j):
    return X.xs[i - 1] - X.ys[j - 1] + a


SIZE_3_WEIGHTS = [
    (((1, 0, 0), (0, 1, 0), (0, 0, 1)), [_e(1, 2), _e(1, 3), _e(2, 1), _e(2, 3), _e(3, 1), _e(3, 2)], 6),
    (((1, 0, 0), (0, 0, 1), (0, 1, 0)), [_e(1, 2), _e(1, 3), _e(2, 1), _o(2, 2), _e(3, 1), _o(3, 3)], 6),
    (((0, 1, 0), (1, 0, 0), (0, 0, 1)), [_o(1, 1), _e(1, 3), _o(2, 2), _e(2, 3), _e(3, 1), _e(3, 2)], 6),
    (((0, 1, 0), (0, 0, 1), (1, 0, 0)), [_o(1, 1), _e(1, 3), _o(2, 1), _e(2, 2), _o(3, 2), _o(3, 3)], 6),
    (((0, 0, 1), (0, 1, 0), (1, 0, 0)), [_o(1, 1), _o(1, 2), _o(2, 1), _o(2, 3), _o(3, 2), _o(3, 3)], 6),
    (((0, 0, 1), (1, 0, 0), (0, 1, 0)), [_o(1, 1), _o(1, 2), _e(2, 2), _o(2, 3), _e(3, 1), _o(3, 3)], 6),
    (((0, 1, 0), (1, -1, 1), (0, 1, 0)), [_o(1, 1), _e(1, 3), _e(3, 1), _o(3, 3)], 4),
]

EXAMPLE = SpectralData((7 * a - 1, 5 * a - 3, 4 * a - 4), (6 * a - 2, 3 * a - 5, a - 7))
EXAMPLE_SUM = -(416 * a**6 + 2000 * a**5 + 3484 * a**4 + 2608 * a**3 + 559 * a**2 - 256 * a - 108) / a**6


# ---------------------------------------------------------------------------
# enumeration


@pytest.mark.parametrize("n,count", [(1, 1), (2, 2), (3, 7), (4, 42), (5, 429)])
def test_asm_counts(n, count):
    found = enumerate_asm(n)
    assert len(found) == count
    assert len(set(found)) == count


@pytest.mark.parametrize("n", [1, 2, 3])
def test_enumeration_matches_brute_force(n):
    brute = {
        ASM(tuple(tuple(cells[i * n : (i + 1) * n]) for i in range(n)))
        for cells in cartesian((-1, 0, 1), repeat=n * n)
        if is_asm(tuple(tuple(cells[i * n : (i + 1) * n]) for i in range(n)))
    }
    assert brute == set(enumerate_asm(n))


def test_enumeration_is_deterministic():
    assert enumerate_asm(4) == enumerate_asm.__wrapped__(4)


@pytest.mark.parametrize(
    "entries",
    [((1, 1), (0, 0)), ((0, 1, 0), (1, 0, 0), (0, 0, 0)), ((-1, 1, 1), (1, 0, 0), (1, 0, 0)), ((2,),)],
)
def test_rejects_non_asm(entries):
    assert not is_asm(entries)
    with pytest.raises(ValueError):
        ASM(entries)


def test_asm_json():
    A = ASM(((0, 1, 0), (1, -1, 1), (0, 1, 0)))
    assert A.to_json() == [[0, 1, 0], [1, -1, 1], [0, 1, 0]]
    assert A.n == 3


# ---------------------------------------------------------------------------
# weights


@pytest.mark.parametrize("entries,factors,power", SIZE_3_WEIGHTS)
def test_size_3_weights(entries, factors, power):
    expected = ONE
    for f in factors:
        expected = expected * f
    assert asm_weight(ASM(entries), X) == expected / a**power


def test_size_one():
    data = SpectralData.symbolic(1)
    assert asm_weight(ASM(((1,),)), data) == ONE
    assert asm_sum(data) == ONE


def test_size_mismatch():
    with pytest.raises(ValueError):
        asm_weight(ASM(((1,),)), X)
    with pytest.raises(ValueError):
        asm_weight(ASM(((1,),)), X, "xyz")


def test_worked_sum():
    assert asm_sum(EXAMPLE) == EXAMPLE_SUM


# ---------------------------------------------------------------------------
# Izergin-Korepin


def test_ik_size_one():
    data = SpectralData.symbolic(1)
    u = var("u")
    z = var("x1") / var("y1")
    assert ik_determinant(data) == (u - 1 / u) ** 2 / ((z - 1 / z) * (u * z - 1 / (u * z)))


@pytest.mark.parametrize("n", [1, 2])
def test_ik_equals_prefactor_times_sum(n):
    data = SpectralData.symbolic(n)
    assert ik_determinant(data) == ik_prefactor(data, "qt") * asm_sum(data, "qt")


def test_ik_pole():
    with pytest.raises(ArithmeticError):
        ik_determinant(SpectralData((var("x"),), (var("x"),)))


def test_d_prime_definition():
    data = SpectralData.symbolic(2)
    u, t = var("u"), var("v") ** 2
    assert d_prime(data) == ((t - 1) / (u - 1 / u)) ** 2 * ik_determinant(data)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_generic_determinant_is_d_prime(n):
    assert generic_det_vs_d_prime(n).equal


# ---------------------------------------------------------------------------
# determinant identity


def test_worked_strip_identity():
    cls = classify_strip(parse("(6,4,3;5,2,1)"), parse("(5,2,0;7,5,4,1)"))
    report = det_asm_identity(cls)
    assert report.equal
    # the non-linear factor of the coefficient is the ASM sum
    assert report.lhs == ik_prefactor(EXAMPLE, "alpha") * EXAMPLE_SUM
    assert report.to_json()["equal"] is True


def test_generic_labels_size_2():
    data = SpectralData.symbolic(2)
    from superjack.coeffield import determinant
    from superjack.pieri import bracket

    rows = [[bracket(x, y) for y in data.ys] for x in data.xs]
    assert determinant(rows) == ik_prefactor(data, "alpha") * asm_sum(data, "alpha")


@pytest.mark.parametrize("text", ["(;)", "(0;1)", "(2,0;1)", "(1;2,1)", "(3,1;1)"])
def test_identity_on_strips(text):
    lam = parse(text)
    for n in (1, 2, 3):
        for _, cls in strips(lam, n, "e"):
            assert det_asm_identity(cls).equal
            assert det_asm_identity(cls, "qt").equal


def test_identity_needs_square_determinant():
    (_, cls), *_ = strips(parse("(;1)"), 1, "etilde")
    with pytest.raises(ValueError):
        det_asm_identity(cls)


def test_n1_identity_is_trivial():
    for _, cls in strips(parse("(1;1)"), 1, "e"):
        r = det_asm_identity(cls)
        assert r.lhs == det_pieri(cls)
        assert r.equal
