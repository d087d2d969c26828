import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from generators import random_covector_lrb
from lrbands.constructions import free_lrb, line_arrangement_lrb, path_example
from lrbands.core import (
    LrbTable,
    adjoin_identity,
    are_isomorphic,
    find_identity,
    is_homomorphism,
    product,
    validate_lrb,
)
from lrbands.errors import InputError
from lrbands.lrbgraph import to_lrb

LEFT_ZERO = LrbTable([[0, 0], [1, 1]], ["x", "y"])


def test_table_shape_is_checked():
    with pytest.raises(InputError):
        LrbTable([[0, 1], [0]])
    with pytest.raises(InputError):
        LrbTable([[0, 2], [1, 1]])
    with pytest.raises(InputError):
        LrbTable([])
    with pytest.raises(InputError):
        LrbTable([[0]], ["a", "b"])


def test_declared_identity_must_be_an_identity():
    with pytest.raises(InputError):
        LrbTable([[0, 0], [1, 1]], identity=0)
    assert LrbTable([[0, 1], [1, 1]], identity=0).identity == 0


def test_json_roundtrip():
    s = line_arrangement_lrb(3)
    back = LrbTable.from_json(s.to_json())
    assert back == s
    with pytest.raises(InputError):
        LrbTable.from_json("{not json")
    with pytest.raises(InputError):
        LrbTable.from_dict({"table": [[0, True], [1, 1]]})
    with pytest.raises(InputError):
        LrbTable.from_dict({"rows": []})


def test_product_examples():
    f = free_lrb(3)
    assert f.names[product(f, f.index("ab"), f.index("ca"))] == "abc"
    s = line_arrangement_lrb(3)
    assert all(product(s, 0, x) == x for x in range(s.size))
    p = path_example(6)
    assert p.names[product(p, p.index("F1"), p.index("C3"))] == "C2"
    with pytest.raises(InputError):
        product(p, 0, p.size)


def test_validate_examples():
    for s in (line_arrangement_lrb(3), free_lrb(3)):
        rep = validate_lrb(s)
        assert rep.ok and rep.is_associative and rep.is_band and rep.is_left_regular
        assert rep.failures() == []
    assert validate_lrb(free_lrb(3)).identity_index == free_lrb(3).index("1")


def test_band_violation_witness():
    # x*y = y, y*x = x, x*x = y
    rep = validate_lrb(LrbTable([[1, 1], [0, 1]], ["x", "y"]))
    assert not rep.is_band
    assert rep.band_witness == 0


def test_witnesses_replay():
    # a right-zero band is a band but not left regular
    right_zero = LrbTable([[0, 1], [0, 1]])
    rep = validate_lrb(right_zero)
    assert rep.is_band and rep.is_associative and not rep.is_left_regular
    x, y = rep.left_regular_witness
    t = right_zero.table
    assert t[t[x][y]][x] != t[x][y]

    bad = LrbTable([[0, 0, 1], [0, 1, 2], [1, 2, 2]])
    rep = validate_lrb(bad)
    assert not rep.is_associative
    x, y, z = rep.associativity_witness
    t = bad.table
    assert t[t[x][y]][z] != t[x][t[y][z]]
    assert {f["axiom"] for f in rep.failures()} >= {"associativity"}


def test_adjoin_identity():
    m = adjoin_identity(LEFT_ZERO)
    assert m.size == 3 and m.identity == 0
    assert validate_lrb(m).ok
    assert m.names[m(m.index("x"), m.index("y"))] == "x"

    f = free_lrb(3)
    assert adjoin_identity(f) is f

    single = adjoin_identity(LrbTable([[0]], ["e"]))
    # {e} is already a monoid, so nothing is adjoined
    assert single.size == 1 and single.identity == 0


def test_adjoin_identity_detects_unlabelled_identity():
    s = LrbTable([[0, 0], [0, 1]])
    out = adjoin_identity(s)
    assert out.size == 2 and out.identity == 1


def test_isomorphism_examples():
    s = line_arrangement_lrb(3)
    phi = are_isomorphic(s, s)
    assert phi is not None and is_homomorphism(s, s, phi)

    from conftest import HEXAGON_EDGES
    from lrbands.lrbgraph import ThinLrbGraph

    t = to_lrb(ThinLrbGraph(6, HEXAGON_EDGES))
    phi = are_isomorphic(t, s)
    assert phi is not None and is_homomorphism(t, s, phi)
    assert sorted(phi) == list(range(13))

    assert free_lrb(2).size == 5 and line_arrangement_lrb(1).size == 3
    assert are_isomorphic(free_lrb(2), line_arrangement_lrb(1)) is None


def test_non_isomorphic_same_size():
    # lines(2) and path_example's relatives: same size, different shape
    a = line_arrangement_lrb(2)  # 9 elements, 4-cycle
    b = adjoin_identity(LrbTable([[i if i == j else i for j in range(8)] for i in range(8)]))
    assert a.size == b.size == 9
    assert are_isomorphic(a, b) is None


def _relabel(s, perm):
    inv = [0] * s.size
    for x, p in enumerate(perm):
        inv[p] = x
    table = [[perm[s.table[inv[u]][inv[v]]] for v in range(s.size)] for u in range(s.size)]
    return LrbTable(table)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_isomorphism_finds_random_relabelling(seed):
    rng = random.Random(seed)
    s = random_covector_lrb(rng, max_size=14)
    perm = list(range(s.size))
    rng.shuffle(perm)
    t = _relabel(s, perm)
    phi = are_isomorphic(s, t)
    assert phi is not None
    assert is_homomorphism(s, t, phi)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_covector_tables_are_lrbs(seed):
    s = random_covector_lrb(random.Random(seed))
    assert validate_lrb(s).ok


def test_find_identity():
    assert find_identity(LEFT_ZERO) is None
    assert find_identity(path_example(3)) == 0


def test_to_dict_is_json_serialisable():
    d = path_example(3).to_dict()
    assert json.loads(json.dumps(d)) == d
    assert d["identity"] == 0
