"""Term algebra: leaves, grafting, twist action, normalization, grading."""

import random
from fractions import Fraction

import pytest

from homalgebra.terms import (AlphaNode, Leaf, LinComb, Node,
                              grading, make_leaf, normalize, normalize_term,
                              random_lincomb, rename, weight)


def test_make_leaf_basics():
    x0 = make_leaf("x", 0)
    assert x0 == LinComb.of_term(Leaf("x", 0))
    # twisting twice reaches the exponent-2 leaf
    assert make_leaf("x", 2) == x0.alpha().alpha()
    # zero scalar annihilates
    assert 0 * make_leaf("y", 0) == LinComb.zero()
    with pytest.raises(ValueError):
        Leaf("x", -1)


def test_mul_unit_laws():
    one = LinComb.one()
    rng = random.Random(1)
    for _ in range(20):
        v = random_lincomb(rng, ["x", "y"], with_unit=True)
        assert one * v == v
        assert v * one == v


def test_mul_single_grafting():
    x, y = make_leaf("x"), make_leaf("y")
    assert x * y == LinComb.of_term(Node(Leaf("x", 0), Leaf("y", 0)))


def test_mul_bilinearity():
    x, y, z = make_leaf("x"), make_leaf("y"), make_leaf("z")
    assert (x + y) * z == x * z + y * z
    rng = random.Random(2)
    for _ in range(25):
        u = random_lincomb(rng, ["x", "y"], with_unit=True)
        u2 = random_lincomb(rng, ["x", "y"], with_unit=True)
        v = random_lincomb(rng, ["x", "y"], with_unit=True)
        a = Fraction(rng.randint(-3, 3))
        b = Fraction(rng.randint(-3, 3))
        assert (a * u + b * u2) * v == a * (u * v) + b * (u2 * v)
        assert v * (a * u + b * u2) == a * (v * u) + b * (v * u2)


def test_alpha_pushes_through_products():
    x, y = make_leaf("x"), make_leaf("y")
    assert (x * y).alpha() == make_leaf("x", 1) * make_leaf("y", 1)
    assert LinComb.one().alpha() == LinComb.one()
    assert make_leaf("x", 3).alpha() == make_leaf("x", 4)


def test_alpha_is_multiplicative_and_linear():
    rng = random.Random(3)
    for _ in range(25):
        u = random_lincomb(rng, ["x", "y", "z"], with_unit=True)
        v = random_lincomb(rng, ["x", "y", "z"], with_unit=True)
        assert (u * v).alpha() == u.alpha() * v.alpha()
        assert (u + v).alpha() == u.alpha() + v.alpha()


def test_arity_and_weight_grading_of_products():
    rng = random.Random(4)
    for _ in range(25):
        u = random_lincomb(rng, ["x", "y"])
        v = random_lincomb(rng, ["x", "y"])
        got = grading(u * v)
        # every product component sits in the sum of factor gradings
        for (a, w) in got:
            assert any(a == au + av and w == wu + wv
                       for (au, wu) in grading(u) for (av, wv) in grading(v))
        # the twist preserves arity and raises weight by the arity
        assert grading(u.alpha()) == {(a, w + a) for (a, w) in grading(u)}


# ---------------------------------------------------------------------------
# normalization: independent rewriting oracle
# ---------------------------------------------------------------------------

def _rewrite_once(t, choice):
    """Apply the single rewrite step at redex index ``choice`` (preorder);
    returns None when no redex exists.  Rules: weight over a product splits
    into both factors; weight over a leaf adds to the exponent; stacked
    weights add."""
    counter = [0]

    def go(u):
        if isinstance(u, AlphaNode):
            if counter[0] == choice:
                counter[0] += 1
                c = u.child
                if isinstance(c, Leaf):
                    return Leaf(c.name, c.exp + u.weight), True
                if isinstance(c, Node):
                    return Node(AlphaNode(u.weight, c.left),
                                   AlphaNode(u.weight, c.right)), True
                return AlphaNode(u.weight + c.weight, c.child), True
            counter[0] += 1
            child, done = go(u.child)
            return AlphaNode(u.weight, child), done
        if isinstance(u, Node):
            left, done = go(u.left)
            if done:
                return Node(left, u.right), True
            right, done = go(u.right)
            return Node(u.left, right), done
        return u, False

    out, done = go(t)
    return out if done else None


def _count_redexes(t):
    if isinstance(t, AlphaNode):
        return 1 + _count_redexes(t.child)
    if isinstance(t, Node):
        return _count_redexes(t.left) + _count_redexes(t.right)
    return 0


def _all_normal_forms(t, limit=4000):
    """Exhaust every rewrite order; the returned set should be a singleton."""
    seen = set()
    out = set()
    stack = [t]
    while stack:
        u = stack.pop()
        if u in seen:
            continue
        seen.add(u)
        if len(seen) > limit:
            raise AssertionError("rewrite exploration blew up")
        n = _count_redexes(u)
        if n == 0:
            out.add(u)
            continue
        for i in range(n):
            stack.append(_rewrite_once(u, i))
    return out


def _random_raw(rng, depth):
    roll = rng.random()
    if depth <= 0 or roll < 0.3:
        return Leaf(rng.choice("xyz"), rng.randint(0, 2))
    if roll < 0.65:
        return AlphaNode(rng.randint(1, 2), _random_raw(rng, depth - 1))
    return Node(_random_raw(rng, depth - 1), _random_raw(rng, depth - 1))


def test_normalize_single_step():
    raw = AlphaNode(1, Node(Leaf("x"), Leaf("y")))
    assert normalize(raw) == make_leaf("x", 1) * make_leaf("y", 1)


def test_normalize_idempotent_on_normal_forms():
    rng = random.Random(5)
    for _ in range(30):
        t = _random_raw(rng, 3)
        n = normalize_term(t)
        # a normalized term is a raw term with no twist nodes; renormalizing fixes it
        assert normalize_term(n) == n


def test_normalize_weight_two_all_rule_orders():
    # oracle: exhaustive application of the rewrite rules in every order
    raw = AlphaNode(2, Node(Node(Leaf("x"), Leaf("y")), Leaf("z", 1)))
    forms = _all_normal_forms(raw)
    assert len(forms) == 1
    expected = Node(Node(Leaf("x", 2), Leaf("y", 2)), Leaf("z", 3))
    assert forms == {expected}
    assert normalize_term(raw) == expected


def test_normalize_confluent_on_random_raw_terms():
    rng = random.Random(6)
    for _ in range(40):
        t = _random_raw(rng, 3)
        reference = normalize_term(t)
        # random rewrite order reaches the same normal form
        u = t
        while True:
            n = _count_redexes(u)
            if n == 0:
                break
            u = _rewrite_once(u, rng.randrange(n))
        assert u == reference


def test_malformed_raw_term_rejected():
    with pytest.raises(ValueError):
        AlphaNode(0, Leaf("x"))
    with pytest.raises(TypeError):
        normalize_term(("not", "a", "tree"))


def test_grading_examples():
    x, y = make_leaf("x"), make_leaf("y")
    assert grading(x * y) == {(2, 0)}
    assert grading(make_leaf("x", 1) * make_leaf("y", 1) + x) == {(2, 2), (1, 0)}
    assert grading(LinComb.zero()) == set()


def test_rename_injectivity_guard():
    v = make_leaf("x") + make_leaf("y")
    with pytest.raises(ValueError):
        rename(v, {"x": "z", "y": "z"})
    assert rename(v, {"x": "u"}) == make_leaf("u") + make_leaf("y")


def test_term_order_is_total_on_window():
    from homalgebra.congruence import Bound, enumerate_terms
    from homalgebra.terms import sort_key
    terms = enumerate_terms(["x", "y"], Bound(3, 1))
    keys = [sort_key(t) for t in terms]
    assert keys == sorted(keys)
    assert len(set(keys)) == len(keys)
