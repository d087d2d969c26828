import random
from itertools import product as pairs

import pytest
from hypothesis import given, settings, strategies as st

from generators import random_covector_lrb
from lrbands.constructions import free_lrb, line_arrangement_lrb, path_example
from lrbands.core import LrbTable, adjoin_identity
from lrbands.order import (
    chambers_by_absorption,
    face_leq,
    face_poset,
    is_meet_semilattice,
    meet,
    meet_criterion,
)
from lrbands.errors import InputError

LEFT_ZERO = LrbTable([[0, 0], [1, 1]], ["x", "y"])


def names(s, xs):
    return sorted(s.names[x] for x in xs)


def test_face_leq_examples(arrangement):
    s = arrangement
    assert face_leq(s, s.index("F2"), s.index("R3"))
    assert all(face_leq(s, x, x) for x in range(s.size))
    f = free_lrb(3)
    assert not face_leq(f, f.index("ba"), f.index("abc"))
    with pytest.raises(InputError):
        face_leq(s, 0, 99)


def test_face_poset_arrangement(arrangement):
    p = face_poset(arrangement)
    assert names(arrangement, p.chambers) == [f"R{i}" for i in range(6)]
    assert names(arrangement, p.facets) == [f"F{i}" for i in range(6)]
    assert p.rank == 2
    assert p.minimals == (0,) or list(p.minimals) == [0]
    # the interval below R3
    assert names(arrangement, p.down(arrangement.index("R3"))) == ["0", "F2", "F3", "R3"]


def test_face_poset_small_cases():
    p = face_poset(LrbTable([[0]]))
    assert len(p.chambers) == 1 and len(p.facets) == 0 and p.rank == 0
    f = free_lrb(3)
    p = face_poset(f)
    assert len(p.chambers) == 6 and p.rank == 3
    assert names(f, p.facets) == sorted(w for w in f.names if len(w) == 2)


@pytest.mark.parametrize("s", [line_arrangement_lrb(4), free_lrb(3), path_example(5), LEFT_ZERO])
def test_chambers_two_ways(s):
    assert sorted(face_poset(s).chambers) == sorted(chambers_by_absorption(s))


def test_covers_are_irreducible(arrangement):
    p = face_poset(arrangement)
    for lo, hi in p.covers:
        assert not any(p.leq(lo, z) and p.leq(z, hi) and z not in (lo, hi) for z in range(arrangement.size))


def test_meet_examples(arrangement):
    s = arrangement
    r = s.index
    assert meet(s, r("R2"), r("R3")) == r("F2")
    assert meet(s, r("R0"), r("R3")) == 0
    assert all(meet(s, x, x) == x for x in range(s.size))
    assert meet(LEFT_ZERO, 0, 1) is None


def test_is_meet_semilattice_examples(arrangement):
    assert is_meet_semilattice(arrangement)
    assert is_meet_semilattice(free_lrb(3))
    assert not is_meet_semilattice(LEFT_ZERO)
    assert is_meet_semilattice(adjoin_identity(LEFT_ZERO))


def test_meet_criterion_examples(arrangement):
    crit = meet_criterion(arrangement)
    assert crit.holds and crit.has_least_element
    s = arrangement
    f0, f1 = s.index("F0"), s.index("F1")
    tag = crit.cases.get((f0, f1)) or crit.cases.get((f1, f0))
    assert tag in (1, 3)
    assert meet_criterion(path_example(6)).holds
    assert not meet_criterion(LEFT_ZERO).holds


def test_commutative_lrb_is_all_case_1():
    # the chain 0 < 1 < 2 under max is a commutative LRB
    chain = LrbTable([[max(i, j) for j in range(3)] for i in range(3)])
    crit = meet_criterion(chain)
    assert crit.holds
    assert set(crit.cases.values()) == {1}


def _brute_meet(s, x, y):
    lower = [z for z in range(s.size) if s(z, x) == x and s(z, y) == y]
    tops = [z for z in lower if all(s(w, z) == z for w in lower)]
    return tops[0] if tops else None


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_meet_matches_definition(seed):
    s = random_covector_lrb(random.Random(seed))
    for x, y in pairs(range(s.size), repeat=2):
        assert meet(s, x, y) == _brute_meet(s, x, y)
    assert is_meet_semilattice(s) == all(
        _brute_meet(s, x, y) is not None for x, y in pairs(range(s.size), repeat=2))
    assert meet_criterion(s).holds == is_meet_semilattice(s)
