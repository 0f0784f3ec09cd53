import itertools

import pytest

from superjack.coeffield import var
from superjack.superpartitions import (
    BUMPING,
    NEW_CIRCLE,
    NEW_SQUARE,
    PRE_CIRCLE,
    StripError,
    SuperPartition,
    arm_leg,
    classify_strip,
    conjugate,
    dominance_leq,
    enumerate_superpartitions,
    is_horizontal_strip,
    parse,
    strips,
)

a = var("a")


def sp(text):
    return parse(text)


def all_upto(total):
    for n in range(total + 1):
        for m in range(total + 1 - n):
            yield from enumerate_superpartitions(n, m)


# ---------------------------------------------------------------------------
# parsing and views


def test_parse_diagrams():
    lam = sp("(3,1,0;2,1)")
    assert lam.circled == (4, 2, 2, 1, 1)
    assert lam.star == (3, 2, 1, 1)
    assert (lam.n, lam.m) == (7, 3)


def test_parse_trivial_cases():
    empty = sp("(;)")
    assert (empty.n, empty.m) == (0, 0)
    single = sp("(0;)")
    assert single.star == () and single.circled == (1,) and single.m == 1


@pytest.mark.parametrize("bad", ["(1,1;)", "(;1,2)", "(0,1;)", "3;1", "(a;1)", "(1;0,x)"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse(bad)


def test_trailing_zeros_of_sym_are_dropped():
    assert sp("(1;2,0,0)") == sp("(1;2)")


def test_str_roundtrip_and_json():
    for lam in all_upto(5):
        assert parse(str(lam)) == lam
        assert SuperPartition.from_json(lam.to_json()) == lam


def test_rook_strip_is_enforced():
    with pytest.raises(ValueError):
        SuperPartition((3,), (1,))


# ---------------------------------------------------------------------------
# conjugation, dominance, enumeration


def test_conjugate_examples():
    assert conjugate(sp("(3,1,0;2,1)")) == sp("(4,2,0;1)")
    assert conjugate(sp("(;)")) == sp("(;)")
    lam = sp("(6,4,3;5,2,1)")
    assert conjugate(conjugate(lam)) == lam


def test_conjugate_is_an_involution():
    for lam in all_upto(8):
        assert conjugate(conjugate(lam)) == lam


def test_dominance_examples():
    assert dominance_leq(sp("(;1,1)"), sp("(;2)"))
    assert not dominance_leq(sp("(;2)"), sp("(;1,1)"))
    lam = sp("(2;1,1)")
    assert dominance_leq(lam, lam)


def test_incomparable_pair_at_degree_4_1():
    sector = enumerate_superpartitions(4, 1)
    pairs = [(x, y) for x, y in itertools.combinations(sector, 2) if not dominance_leq(x, y) and not dominance_leq(y, x)]
    assert pairs
    # star (3,1) > (2,2) but circled (3,1,1) < (3,2)
    x, y = sp("(0;3,1)"), sp("(2;2)")
    assert not dominance_leq(x, y) and not dominance_leq(y, x)
    assert (x, y) in pairs


@pytest.mark.parametrize("n,m", [(3, 0), (3, 1), (4, 1), (3, 2), (4, 2)])
def test_dominance_is_a_partial_order(n, m):
    sector = enumerate_superpartitions(n, m)
    for x in sector:
        assert dominance_leq(x, x)
    for x, y in itertools.permutations(sector, 2):
        assert not (dominance_leq(x, y) and dominance_leq(y, x))
    for x, y, z in itertools.permutations(sector, 3):
        if dominance_leq(x, y) and dominance_leq(y, z):
            assert dominance_leq(x, z)


def test_enumeration_examples():
    assert enumerate_superpartitions(0, 1) == (sp("(0;)"),)
    assert len(enumerate_superpartitions(4, 0)) == 5
    assert set(enumerate_superpartitions(1, 1)) == {sp("(1;)"), sp("(0;1)")}


def test_enumeration_is_a_linear_extension():
    for n, m in [(4, 0), (3, 1), (4, 1), (3, 2), (4, 2)]:
        sector = enumerate_superpartitions(n, m)
        assert len(set(sector)) == len(sector)
        for i, x in enumerate(sector):
            for y in sector[i + 1:]:
                assert not dominance_leq(x, y) or x == y


def test_brute_force_sector_sizes():
    # count (antisym; sym) pairs directly
    def brute(n, m):
        count = 0
        for k in range(n + 1):
            for anti in itertools.combinations(range(k, -1, -1), m):
                if sum(anti) == k:
                    count += sum(1 for _ in _partitions(n - k))
        return count

    for n in range(6):
        for m in range(4):
            assert len(enumerate_superpartitions(n, m)) == brute(n, m)


def _partitions(n, largest=None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in _partitions(n - k, k):
            yield (k,) + rest


# ---------------------------------------------------------------------------
# arms and legs


def test_arm_leg_examples():
    assert arm_leg(sp("(;1)"), (1, 1), "star") == (0, 0)
    lam = sp("(3,1,0;2,1)")
    assert arm_leg(lam, (1, 1), "circled") == (3, 4)
    assert arm_leg(lam, (1, 1), "star") == (2, 3)
    with pytest.raises(ValueError):
        arm_leg(lam, (1, 4), "star")


# ---------------------------------------------------------------------------
# strips


def test_tilde_strip_example():
    lam = sp("(3,1;5,4,3)")
    omegas = [om for om, _ in strips(lam, 3, "etilde")]
    assert SuperPartition((5, 5, 5, 4, 2, 1), (5, 5, 4, 4, 1)) in omegas


def test_worked_strip_cells():
    lam, om = sp("(6,4,3;5,2,1)"), sp("(5,2,0;7,5,4,1)")
    assert om in [o for o, _ in strips(lam, 3, "e")]
    cls = classify_strip(lam, om)
    assert cls.of_kind(BUMPING) == ((1, 7), (3, 5), (4, 4))
    assert cls.of_kind(NEW_CIRCLE) == ((2, 6), (5, 3), (7, 1))
    assert cls.x_values(a) == [7 * a - 1, 5 * a - 3, 4 * a - 4]
    assert cls.y_values(a) == [6 * a - 2, 3 * a - 5, a - 7]


def test_decorated_diagram_example():
    cls = classify_strip(sp("(3,1;5,4,3)"), sp("(4,1,0;5,5,4)"))
    assert cls.of_kind(NEW_SQUARE) == ((2, 5), (4, 4))
    assert cls.of_kind(BUMPING) == ((3, 4),)
    assert cls.of_kind(NEW_CIRCLE) == ((3, 5), (6, 1))
    assert cls.of_kind(PRE_CIRCLE) == ((5, 2),)


def test_empty_to_single_circle():
    assert [om for om, _ in strips(sp("(;)"), 0, "etilde")] == [sp("(0;)")]
    cls = classify_strip(sp("(;)"), sp("(0;)"))
    assert cls.xlabels == ()
    assert cls.ylabels == ((1, (1, 1)),)
    assert cls.y_values(a) == [a - 1]


def test_classify_rejects_non_strips():
    with pytest.raises(StripError):
        classify_strip(sp("(;1)"), sp("(;3)"))
    with pytest.raises(StripError):
        classify_strip(sp("(;2)"), sp("(;1)"))


def test_strip_sizes_and_label_invariants():
    for lam in all_upto(4):
        for n in range(0, 3):
            for kind, extra in (("e", 0), ("etilde", 1)):
                for om, cls in strips(lam, n, kind):
                    assert om.n - lam.n == n
                    assert sum(om.circled) - sum(lam.circled) == n + extra
                    counts = {k: cls.count(k) for k in (NEW_SQUARE, BUMPING, NEW_CIRCLE)}
                    assert counts[NEW_SQUARE] + counts[BUMPING] == n
                    assert counts[NEW_SQUARE] + counts[NEW_CIRCLE] == n + extra
                    assert len(cls.xlabels) == n and len(cls.ylabels) == n + extra


def test_classify_succeeds_exactly_on_strips():
    for lam in all_upto(3):
        produced = {om for n in range(3) for kind in ("e", "etilde") for om, _ in strips(lam, n, kind)}
        for n in range(lam.n, lam.n + 3):
            for m in range(lam.m, lam.m + 2):
                for om in enumerate_superpartitions(n, m):
                    try:
                        classify_strip(lam, om)
                        ok = True
                    except StripError:
                        ok = False
                    assert ok == (om in produced), (lam, om)


def test_horizontal_strips_are_conjugate_vertical_strips():
    for lam in all_upto(4):
        for n in range(3):
            for kind, vkind in (("g", "e"), ("gtilde", "etilde")):
                horiz = {om for om, _ in strips(lam, n, kind)}
                vert = {conjugate(om) for om, _ in strips(conjugate(lam), n, vkind)}
                assert horiz == vert
                for om in horiz:
                    assert is_horizontal_strip(lam, om, kind == "gtilde")
