"""Morphisms out of the free algebra: evaluation, the matrix bijection, and
tensor-leg tagging.

A generator assignment into any carrier extends uniquely to the whole free
algebra: a leaf with exponent k maps to the k-fold twist of the generator
image, products go to carrier products, and the unit component lands on the
carrier unit.  Tensor legs of free carriers are realized by renaming
generators with trailing apostrophes inside one larger free algebra; an
element u (x) w is represented as the product of the left-tagged copy of u
with the right-tagged copy of w.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebras import HomAlgebraDescriptor, UnitFlavor
from .congruence import Bound, RelationBasis, SaturationConfig, saturate
from .terms import Leaf, LinComb, Term, make_leaf, random_lincomb, rename


class UnitMismatchError(ValueError):
    """Nonzero unit component evaluated into a carrier without a strict unit."""


class AssignmentError(KeyError):
    """A generator has no image under the assignment."""


class NamingError(ValueError):
    """Tensor-leg tags collide on the combined generator set."""


@dataclass(frozen=True)
class FreeAlgebraHandle:
    """The free multiplicative Hom-associative algebra on named generators."""
    gens: tuple[str, ...]

    def __post_init__(self):
        if len(set(self.gens)) != len(self.gens):
            raise ValueError(f"generator names must be distinct: {self.gens}")
        object.__setattr__(self, "gens", tuple(sorted(self.gens)))

    def gen(self, name: str) -> LinComb:
        if name not in self.gens:
            raise KeyError(f"unknown generator {name!r}")
        return make_leaf(name, 0)

    def one(self) -> LinComb:
        return LinComb.one()

    def saturated(self, bound: Bound, config: SaturationConfig = SaturationConfig(),
                  cap: int = 200_000) -> RelationBasis:
        return saturate(self.gens, bound, config, cap=cap)

    def random_element(self, rng, max_arity: int = 3, max_exp: int = 1,
                       n_terms: int = 3, with_unit: bool = False) -> LinComb:
        return random_lincomb(rng, self.gens, max_arity, max_exp, n_terms, with_unit)

    def descriptor(self) -> HomAlgebraDescriptor:
        """This free algebra as an evaluation target (elements are LinCombs)."""
        gens = self.gens
        return HomAlgebraDescriptor(
            name="F<" + ",".join(gens) + ">",
            zero=LinComb.zero(),
            add=lambda u, v: u + v,
            scale=lambda c, u: u.scale(c),
            mul=lambda u, v: u * v,
            alpha=lambda u: u.alpha(),
            eq=lambda u, v: u == v,
            unit=LinComb.one(),
            unit_flavor=UnitFlavor.STRICT_UNITAL,
            sweep=tuple(make_leaf(g) for g in gens),
            rand=lambda rng: random_lincomb(rng, gens),
            decompose=lambda v: ([(v.unit, LinComb.one())] if v.unit else [])
                                + [(c, LinComb.of_term(t)) for t, c in v.sorted_terms()],
            fmt=str,
        )


@dataclass(frozen=True)
class MorphismAssignment:
    """A generator-to-element assignment into a carrier."""
    target: HomAlgebraDescriptor
    images: dict

    def image(self, name: str):
        try:
            return self.images[name]
        except KeyError:
            raise AssignmentError(f"no image assigned for generator {name!r}")


def evaluate(v: LinComb, m: MorphismAssignment, memo: dict | None = None):
    """Extend the assignment to ``v``: leaves through twisted images, products
    through the carrier product, the unit component onto the carrier unit.

    ``memo`` caches term values; pass one dict across calls when evaluating
    many elements under the same assignment."""
    target = m.target
    if v.unit and target.unit_flavor is not UnitFlavor.STRICT_UNITAL:
        raise UnitMismatchError(
            f"unit component {v.unit} cannot map into {target.name} "
            f"({target.unit_flavor.value})")
    if memo is None:
        memo = {}

    def of_term(t: Term):
        got = memo.get(t)
        if got is not None:
            return got
        if isinstance(t, Leaf):
            out = target.alpha_pow(m.image(t.name), t.exp)
        else:
            out = target.mul(of_term(t.left), of_term(t.right))
        memo[t] = out
        return out

    acc = target.zero
    if v.unit:
        acc = target.add(acc, target.scale(v.unit, target.unit))
    for t, c in v.sorted_terms():
        acc = target.add(acc, target.scale(c, of_term(t)))
    return acc


# ---------------------------------------------------------------------------
# the 2x2 matrix bijection on the four-generator free algebra
# ---------------------------------------------------------------------------

MATRIX_GENS = ("a", "b", "c", "d")


def morphism_from_matrix(target: HomAlgebraDescriptor, M,
                         gens=MATRIX_GENS) -> MorphismAssignment:
    """Entries of a 2x2 carrier matrix as generator images, row-major."""
    (m11, m12), (m21, m22) = M
    g1, g2, g3, g4 = gens
    return MorphismAssignment(target, {g1: m11, g2: m12, g3: m21, g4: m22})


def matrix_of_morphism(m: MorphismAssignment, gens=MATRIX_GENS):
    g1, g2, g3, g4 = gens
    return ((m.image(g1), m.image(g2)), (m.image(g3), m.image(g4)))


# ---------------------------------------------------------------------------
# tensor legs by generator tagging
# ---------------------------------------------------------------------------

def _check_tag(tag: str):
    if any(ch != "'" for ch in tag):
        raise NamingError(f"leg tags are apostrophe strings, got {tag!r}")


def rename_embed(v: LinComb, tag: str) -> LinComb:
    """Relabel every generator with a trailing prime tag (empty = identity)."""
    _check_tag(tag)
    if not tag:
        return v
    return rename(v, lambda name: name + tag)


def tensor_element(u: LinComb, w: LinComb, left_tag: str = "'",
                   right_tag: str = "''") -> LinComb:
    """u (x) w as the product of the tagged embeddings.

    Pure unit factors degenerate to single embeddings; the two tagged
    generator sets must not collide.
    """
    _check_tag(left_tag)
    _check_tag(right_tag)
    if left_tag == right_tag:
        raise NamingError("tensor legs need distinct tags")
    lu = rename_embed(u, left_tag)
    rw = rename_embed(w, right_tag)
    overlap = lu.generators() & rw.generators()
    if overlap:
        raise NamingError(f"tensor legs collide on generators {sorted(overlap)}")
    return lu * rw


def random_assignment(handle: FreeAlgebraHandle, target: HomAlgebraDescriptor,
                      rng) -> MorphismAssignment:
    """Seeded random generator images; the carrier needs a sampler."""
    return MorphismAssignment(target, {g: target.rand(rng) for g in handle.gens})
