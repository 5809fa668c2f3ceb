"""Evaluation into carriers, the matrix bijection, tensor-leg tagging."""

import random
from fractions import Fraction

import pytest

from homalgebra.algebras import (Poly, poly_algebra,
                                 q_poly_algebra, rational_algebra)
from homalgebra.congruence import Bound, SaturationConfig, hom_associator, saturate
from homalgebra.morphisms import (AssignmentError, FreeAlgebraHandle,
                                  MorphismAssignment, NamingError,
                                  UnitMismatchError, evaluate,
                                  matrix_of_morphism, morphism_from_matrix,
                                  random_assignment, rename_embed,
                                  tensor_element)
from homalgebra.terms import LinComb, make_leaf, random_lincomb

T = Poly.var("t")


def test_evaluate_leaf_exponent_is_iterated_twist():
    A = q_poly_algebra(2)
    m = MorphismAssignment(A, {"x": T})
    # alpha^2(t) = 4t for the doubling twist
    assert evaluate(make_leaf("x", 2), m) == 4 * T


def test_evaluate_single_product():
    A = poly_algebra(["s", "t"])
    m = MorphismAssignment(A, {"x": Poly.var("s"), "y": T})
    assert evaluate(make_leaf("x") * make_leaf("y"), m) == Poly.var("s") * T


def test_evaluate_kills_associators_in_twisted_carrier():
    # oracle: direct computation in the twisted polynomial carrier; the two
    # bracketings of (x y) z with one twist agree there
    A = q_poly_algebra(2)
    rng = random.Random(17)
    handle = FreeAlgebraHandle(("x", "y", "z"))
    diff = hom_associator(make_leaf("x"), make_leaf("y"), make_leaf("z"))
    for _ in range(20):
        m = random_assignment(handle, A, rng)
        assert evaluate(diff, m).is_zero()


def test_evaluate_is_structural_homomorphism():
    A = poly_algebra(["s", "t"])
    handle = FreeAlgebraHandle(("x", "y"))
    rng = random.Random(18)
    for _ in range(15):
        m = random_assignment(handle, A, rng)
        u = random_lincomb(rng, ["x", "y"], with_unit=True)
        v = random_lincomb(rng, ["x", "y"], with_unit=True)
        assert evaluate(u * v, m) == evaluate(u, m) * evaluate(v, m)
        assert evaluate(u + v, m) == evaluate(u, m) + evaluate(v, m)
        assert evaluate(u.alpha(), m) == A.alpha(evaluate(u, m))


def test_unit_component_requires_strict_unit():
    A = q_poly_algebra(2)  # weakly unital
    m = MorphismAssignment(A, {"x": T})
    with pytest.raises(UnitMismatchError):
        evaluate(LinComb.one() + make_leaf("x"), m)
    # but pure term parts evaluate fine
    assert evaluate(make_leaf("x"), m) == T


def test_missing_image_is_assignment_error():
    A = rational_algebra()
    m = MorphismAssignment(A, {"x": Fraction(2)})
    with pytest.raises(AssignmentError):
        evaluate(make_leaf("y"), m)


def test_morphism_from_matrix_identity():
    A = rational_algebra()
    ident = ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(1)))
    m = morphism_from_matrix(A, ident)
    assert m.images == {"a": 1, "b": 0, "c": 0, "d": 1}


def test_matrix_roundtrip_random():
    A = poly_algebra(["s", "t"])
    rng = random.Random(19)
    for _ in range(25):
        M = ((A.rand(rng), A.rand(rng)), (A.rand(rng), A.rand(rng)))
        assert matrix_of_morphism(morphism_from_matrix(A, M)) == M


def test_agreeing_assignments_evaluate_identically():
    # uniqueness of the extension: same generator images, same values
    A = q_poly_algebra(2)
    handle = FreeAlgebraHandle(("a", "b", "c", "d"))
    rng = random.Random(20)
    M = ((A.rand(rng), A.rand(rng)), (A.rand(rng), A.rand(rng)))
    m1 = morphism_from_matrix(A, M)
    m2 = MorphismAssignment(A, dict(m1.images))
    for _ in range(100):
        v = handle.random_element(rng, max_arity=3, max_exp=1)
        assert A.eq(evaluate(v, m1), evaluate(v, m2))


def test_evaluate_factors_through_congruence():
    # proven-equal pairs evaluate equally in carriers satisfying the laws
    handle = FreeAlgebraHandle(("x", "y", "z"))
    basis = saturate(handle.gens, Bound(3, 1), SaturationConfig(unit_instances=False))
    u = (make_leaf("x") * make_leaf("y")) * make_leaf("z", 1)
    v = make_leaf("x", 1) * (make_leaf("y") * make_leaf("z"))
    assert basis.equal_mod(u, v).proven
    A = q_poly_algebra(2)
    rng = random.Random(23)
    for _ in range(10):
        m = random_assignment(handle, A, rng)
        assert A.eq(evaluate(u, m), evaluate(v, m))


def test_rename_embed():
    a, b = make_leaf("a"), make_leaf("b")
    assert rename_embed(a * b, "'") == make_leaf("a'") * make_leaf("b'")
    assert rename_embed(a * b, "") == a * b
    with pytest.raises(NamingError):
        rename_embed(a, "x")  # tags are apostrophe strings


def test_rename_embed_commutes_with_structure():
    rng = random.Random(24)
    from homalgebra.terms import grading
    for _ in range(15):
        u = random_lincomb(rng, ["x", "y"], with_unit=True)
        v = random_lincomb(rng, ["x", "y"], with_unit=True)
        assert rename_embed(u * v, "'") == rename_embed(u, "'") * rename_embed(v, "'")
        assert rename_embed(u.alpha(), "'") == rename_embed(u, "'").alpha()
        assert grading(rename_embed(u, "'")) == grading(u)


def test_tensor_element():
    x, y = make_leaf("x"), make_leaf("y")
    assert tensor_element(x, LinComb.one()) == make_leaf("x'")
    assert tensor_element(LinComb.one(), y) == make_leaf("y''")
    assert tensor_element(x, y) == make_leaf("x'") * make_leaf("y''")
    # the generator pair maps to left-embed plus right-embed
    pair_image = tensor_element(x, LinComb.one()) + tensor_element(LinComb.one(), y)
    assert pair_image == make_leaf("x'") + make_leaf("y''")


def test_tensor_element_tag_collision():
    # left copy of x' under one prime collides with right copy of x
    u = make_leaf("x'")
    w = make_leaf("x")
    with pytest.raises(NamingError):
        tensor_element(u, w, "'", "''")
    with pytest.raises(NamingError):
        tensor_element(u, w, "'", "'")


def test_matrix_bijection_naturality():
    # composing with a law-preserving carrier morphism acts entrywise
    A = poly_algebra(["t"])
    phi_images = {"t": Poly.var("t") + Poly.one()}
    phi = lambda p: p.substitute(phi_images)
    rng = random.Random(25)
    handle = FreeAlgebraHandle(("a", "b", "c", "d"))
    for _ in range(10):
        M = ((A.rand(rng), A.rand(rng)), (A.rand(rng), A.rand(rng)))
        m = morphism_from_matrix(A, M)
        composed = MorphismAssignment(A, {g: phi(img) for g, img in m.images.items()})
        got = matrix_of_morphism(composed)
        want = tuple(tuple(phi(M[i][j]) for j in range(2)) for i in range(2))
        assert got == want
        # and the composite really is the composite on random elements
        v = handle.random_element(rng, max_arity=2, max_exp=1)
        assert evaluate(v, composed) == phi(evaluate(v, m))
