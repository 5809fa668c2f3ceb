"""Exact term algebra for the free unital multiplicative Hom-nonassociative world.

Elements are rational linear combinations of planar binary product trees whose
leaves carry a generator name and a nonnegative twist exponent.  The twist map
is kept in multiplicativity normal form: it never appears as an explicit node,
it only increments leaf exponents.  A raw tree form with explicit weighted
twist nodes exists for input; ``normalize`` pushes the weights to the leaves.

Everything is immutable and exact (``fractions.Fraction``); all operations are
pure functions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

Q = Fraction


def as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"not an exact rational: {c!r}")


# ---------------------------------------------------------------------------
# normalized terms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Leaf:
    """A generator occurrence ``name`` with twist exponent ``exp``."""
    name: str
    exp: int = 0

    def __post_init__(self):
        if not self.name:
            raise ValueError("leaf needs a generator name")
        if self.exp < 0:
            raise ValueError(f"leaf exponent must be >= 0, got {self.exp}")


@dataclass(frozen=True)
class Node:
    """A planar product node: left subtree times right subtree."""
    left: "Term"
    right: "Term"


Term = Union[Leaf, Node]


def arity(t: Term) -> int:
    """Number of leaves of a term."""
    if isinstance(t, Leaf):
        return 1
    return arity(t.left) + arity(t.right)


def weight(t: Term) -> int:
    """Sum of the leaf exponents of a term."""
    if isinstance(t, Leaf):
        return t.exp
    return weight(t.left) + weight(t.right)


def leaves(t: Term) -> Iterator[Leaf]:
    """Left-to-right leaf sequence."""
    if isinstance(t, Leaf):
        yield t
    else:
        yield from leaves(t.left)
        yield from leaves(t.right)


def _leaf_depths(t: Term, depth: int = 0) -> Iterator[int]:
    if isinstance(t, Leaf):
        yield depth
    else:
        yield from _leaf_depths(t.left, depth + 1)
        yield from _leaf_depths(t.right, depth + 1)


def sort_key(t: Term):
    """Total, stable order: arity, then shape (leaf-depth sequence), then leaves.

    The leaf-depth sequence determines a planar binary tree uniquely, so the
    key is injective on terms.  Small terms sort (and print) first.
    """
    return (
        arity(t),
        tuple(_leaf_depths(t)),
        tuple((lf.name, lf.exp) for lf in leaves(t)),
    )


def shift_term(t: Term, k: int) -> Term:
    """Raise every leaf exponent by ``k`` (the normal-form twist action)."""
    if k == 0:
        return t
    if isinstance(t, Leaf):
        return Leaf(t.name, t.exp + k)
    return Node(shift_term(t.left, k), shift_term(t.right, k))


def term_generators(t: Term) -> set[str]:
    return {lf.name for lf in leaves(t)}


# ---------------------------------------------------------------------------
# raw terms (explicit weighted twist nodes, pre-normalization)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AlphaNode:
    """An explicit twist node of weight >= 1 over a subtree."""
    weight: int
    child: "RawTerm"

    def __post_init__(self):
        if self.weight < 1:
            raise ValueError(f"twist node weight must be >= 1, got {self.weight}")


# a normalized term is the twist-node-free special case of a raw term, so
# normalize really is idempotent through this shared representation
RawTerm = Union[Leaf, Node, AlphaNode]


def normalize_term(t: RawTerm) -> Term:
    """Push all explicit twist weights down to the leaf exponents."""
    def push(u: RawTerm, w: int) -> Term:
        if isinstance(u, Leaf):
            return Leaf(u.name, u.exp + w)
        if isinstance(u, Node):
            return Node(push(u.left, w), push(u.right, w))
        if isinstance(u, AlphaNode):
            return push(u.child, w + u.weight)
        raise TypeError(f"malformed raw term node: {u!r}")
    return push(t, 0)


# ---------------------------------------------------------------------------
# linear combinations
# ---------------------------------------------------------------------------

class LinComb:
    """A finite rational combination of terms plus a unit component.

    ``unit`` is the coefficient of the adjoined unit 1; ``terms`` maps Term to
    a nonzero Fraction.  Instances are treated as immutable: operations return
    fresh objects and never mutate their inputs.
    """

    __slots__ = ("unit", "terms")

    def __init__(self, unit=0, terms: Mapping[Term, Fraction] | None = None):
        object.__setattr__(self, "unit", as_fraction(unit))
        cleaned = {}
        if terms:
            for t, c in terms.items():
                c = as_fraction(c)
                if c:
                    cleaned[t] = c
        object.__setattr__(self, "terms", cleaned)

    def __setattr__(self, *a):
        raise AttributeError("LinComb is immutable")

    # -- basic structure ----------------------------------------------------

    @staticmethod
    def zero() -> "LinComb":
        return LinComb(0, {})

    @staticmethod
    def one() -> "LinComb":
        return LinComb(1, {})

    @staticmethod
    def scalar(c) -> "LinComb":
        return LinComb(c, {})

    @staticmethod
    def of_term(t: Term, c=1) -> "LinComb":
        return LinComb(0, {t: as_fraction(c)})

    def is_zero(self) -> bool:
        return self.unit == 0 and not self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinComb):
            return NotImplemented
        return self.unit == other.unit and self.terms == other.terms

    def __hash__(self):
        return hash((self.unit, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        from .grammar import format_lincomb
        return format_lincomb(self)

    # -- vector-space operations --------------------------------------------

    def __add__(self, other: "LinComb") -> "LinComb":
        if not isinstance(other, LinComb):
            return NotImplemented
        out = dict(self.terms)
        for t, c in other.terms.items():
            s = out.get(t, 0) + c
            if s:
                out[t] = s
            else:
                out.pop(t, None)
        return LinComb(self.unit + other.unit, out)

    def __sub__(self, other: "LinComb") -> "LinComb":
        return self + (-1) * other

    def __neg__(self) -> "LinComb":
        return (-1) * self

    def __rmul__(self, c) -> "LinComb":
        if isinstance(c, LinComb):
            return NotImplemented
        c = as_fraction(c)
        if c == 0:
            return LinComb.zero()
        return LinComb(c * self.unit, {t: c * v for t, v in self.terms.items()})

    def scale(self, c) -> "LinComb":
        return as_fraction(c) * self

    # -- algebra operations ---------------------------------------------------

    def __mul__(self, other: "LinComb") -> "LinComb":
        """Bilinear tree grafting; unit components multiply strictly.

        On pure tree terms the product of ``u`` and ``v`` is the new tree with
        ``u`` on the left and ``v`` on the right; the unit acts as a strict
        two-sided identity.
        """
        if not isinstance(other, LinComb):
            return NotImplemented
        out: dict[Term, Fraction] = {}

        def acc(t, c):
            s = out.get(t, 0) + c
            if s:
                out[t] = s
            else:
                out.pop(t, None)

        if self.unit:
            for t, c in other.terms.items():
                acc(t, self.unit * c)
        if other.unit:
            for t, c in self.terms.items():
                acc(t, other.unit * c)
        for t1, c1 in self.terms.items():
            for t2, c2 in other.terms.items():
                acc(Node(t1, t2), c1 * c2)
        return LinComb(self.unit * other.unit, out)

    def alpha(self) -> "LinComb":
        """Twist action in normal form: all leaf exponents up by one, unit fixed."""
        return LinComb(self.unit, {shift_term(t, 1): c for t, c in self.terms.items()})

    def alpha_pow(self, k: int) -> "LinComb":
        if k < 0:
            raise ValueError("negative twist power")
        return LinComb(self.unit, {shift_term(t, k): c for t, c in self.terms.items()})

    # -- inspection ----------------------------------------------------------

    def sorted_terms(self) -> list[tuple[Term, Fraction]]:
        return sorted(self.terms.items(), key=lambda tc: sort_key(tc[0]))

    def generators(self) -> set[str]:
        out: set[str] = set()
        for t in self.terms:
            out |= term_generators(t)
        return out

    def max_arity(self) -> int:
        return max((arity(t) for t in self.terms), default=0)


def make_leaf(name: str, exp: int = 0) -> LinComb:
    """The coefficient-1 combination on the single leaf (name, exp)."""
    return LinComb.of_term(Leaf(name, exp))


def normalize(t: RawTerm) -> LinComb:
    """Normal form of a raw tree as a coefficient-1 combination."""
    return LinComb.of_term(normalize_term(t))


def grading(v: LinComb) -> set[tuple[int, int]]:
    """The set of (arity, weight) pairs of homogeneous components present."""
    return {(arity(t), weight(t)) for t in v.terms}


def rename(v: LinComb, mapping) -> LinComb:
    """Relabel leaf generators; ``mapping`` is a dict or a name -> name callable.

    The relabeling must be injective on the generators that actually occur.
    """
    if callable(mapping):
        fn = mapping
    else:
        fn = lambda n: mapping.get(n, n)
    occurring = set()
    for t in v.terms:
        occurring |= term_generators(t)
    images = {n: fn(n) for n in occurring}
    if len(set(images.values())) != len(images):
        raise ValueError(f"generator relabeling is not injective: {images}")

    def go(t: Term) -> Term:
        if isinstance(t, Leaf):
            return Leaf(images[t.name], t.exp)
        return Node(go(t.left), go(t.right))

    out: dict[Term, Fraction] = {}
    for t, c in v.terms.items():
        out[go(t)] = out.get(go(t), 0) + c
    return LinComb(v.unit, out)


def random_lincomb(rng, gens: Iterable[str], max_arity: int = 3, max_exp: int = 1,
                   n_terms: int = 3, with_unit: bool = False) -> LinComb:
    """Seeded random element, used by property tests and samplers."""
    gens = list(gens)

    def random_term(n: int) -> Term:
        if n == 1:
            return Leaf(rng.choice(gens), rng.randint(0, max_exp))
        k = rng.randint(1, n - 1)
        return Node(random_term(k), random_term(n - k))

    out = LinComb.zero()
    for _ in range(n_terms):
        c = Fraction(rng.randint(-2, 2))
        if c == 0:
            continue
        t = random_term(rng.randint(1, max_arity))
        out = out + LinComb.of_term(t, c)
    if with_unit:
        out = out + LinComb.scalar(rng.randint(-2, 2))
    return out
