from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from kleene_chains.logic import (
    Leaf,
    Node,
    TruthValue,
    enumerate_trees,
    evaluate,
    implies,
    internal_nodes,
    leaves,
)
from kleene_chains.recurrence import catalan

# rows and columns in the order 1, 0, 2 as printed
PRINTED_TABLE = {
    (1, 1): 1, (1, 0): 0, (1, 2): 2,
    (0, 1): 1, (0, 0): 1, (0, 2): 1,
    (2, 1): 1, (2, 0): 2, (2, 2): 2,
}


def test_encoding():
    assert [int(v) for v in TruthValue] == [0, 1, 2]
    assert TruthValue.UNKNOWN == 2


@pytest.mark.parametrize("pair,expected", sorted(PRINTED_TABLE.items()))
def test_implies_matches_table(pair, expected):
    assert implies(*pair) == expected


def test_implies_is_max_of_negation():
    for a, b in product(TruthValue, repeat=2):
        want = max(a.neg(), TruthValue(b), key=lambda v: v.rank)
        assert implies(a, b) is want


@pytest.mark.parametrize("a", [0, 1, 2])
def test_true_consequent(a):
    assert implies(a, 1) == 1


def test_eval_examples():
    p1, p2, p3 = Leaf(1), Leaf(2), Leaf(3)
    assert evaluate(p1, [2]) == 2
    assert evaluate(Node(Node(p1, p2), p3), (1, 0, 2)) == 1
    assert evaluate(Node(p1, Node(p2, p3)), (1, 0, 2)) == 1


def test_eval_length_mismatch():
    with pytest.raises(ValueError):
        evaluate(Node(Leaf(1), Leaf(2)), [1])


@pytest.mark.parametrize("n,count", [(1, 1), (3, 2), (5, 14)])
def test_tree_counts(n, count):
    assert len(enumerate_trees(n)) == count


@pytest.mark.parametrize("n", range(1, 13))
def test_tree_count_is_catalan(n):
    assert len(enumerate_trees(n)) == catalan(n)


def test_zero_variables_rejected():
    with pytest.raises(ValueError):
        enumerate_trees(0)


def test_enumeration_order_and_determinism():
    trees = enumerate_trees(3)
    assert [str(t) for t in trees] == ["(p1>(p2>p3))", "((p1>p2)>p3)"]
    assert [str(t) for t in enumerate_trees(6)] == [str(t) for t in enumerate_trees(6)]


def test_trees_distinct():
    trees = enumerate_trees(7)
    assert len(set(trees)) == len(trees)


@given(st.integers(min_value=1, max_value=8), st.data())
def test_tree_shape_invariants(n, data):
    tree = data.draw(st.sampled_from(enumerate_trees(n)))
    assert leaves(tree) == list(range(1, n + 1))
    assert internal_nodes(tree) == n - 1
