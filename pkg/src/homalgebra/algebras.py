"""Concrete Hom-associative carriers and executable axiom checks.

A carrier is described by its exact element operations plus a sampler; the
constructors here produce polynomial carriers, scaling twists of them, 2x2
matrix carriers, and formal tensor products.  Twisting a strictly unital
algebra along a non-identity endomorphism only leaves a weak unit (1 * x gives
the twisted image of x), so descriptors record which unit law is actually
asserted instead of pretending.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, Optional

from .poly import Poly, PolyEndo, monomials_up_to, random_poly
from .terms import as_fraction


class UnitFlavor(Enum):
    STRICT_UNITAL = "STRICT_UNITAL"
    WEAK_UNITAL = "WEAK_UNITAL"
    NON_UNITAL = "NON_UNITAL"


class PreconditionError(ValueError):
    """A constructor precondition failed; the witness is in the message."""


@dataclass(frozen=True)
class HomAlgebraDescriptor:
    """A carrier with exact operations, a distinguished twist map, and a sampler."""
    name: str
    zero: object
    add: Callable
    scale: Callable           # (Fraction, elem) -> elem
    mul: Callable
    alpha: Callable
    eq: Callable
    unit: object = None
    unit_flavor: UnitFlavor = UnitFlavor.NON_UNITAL
    sweep: tuple = ()
    rand: Optional[Callable] = None       # rng -> elem
    decompose: Optional[Callable] = None  # elem -> [(Fraction, basis elem)]
    fmt: Callable = repr

    def sub(self, x, y):
        return self.add(x, self.scale(Fraction(-1), y))

    def alpha_pow(self, x, k: int):
        for _ in range(k):
            x = self.alpha(x)
        return x

    def samples(self, count: int, seed: int = 0) -> list:
        """The sweep, padded with seeded random elements up to ``count``."""
        out = list(self.sweep)
        if self.rand is not None:
            rng = random.Random(seed)
            while len(out) < count:
                out.append(self.rand(rng))
        return out


# ---------------------------------------------------------------------------
# check reports
# ---------------------------------------------------------------------------

@dataclass
class CheckReport:
    law: str
    samples_run: int
    counterexamples: list[str]
    seed: Optional[int] = None

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def to_dict(self) -> dict:
        return {
            "law": self.law,
            "samples_run": self.samples_run,
            "counterexamples": list(self.counterexamples),
            "seed": self.seed,
            "passed": self.passed,
        }


_TRIPLE_SWEEP_CAP = 1000


def _tuples(A: HomAlgebraDescriptor, width: int, count: int, seed: int):
    """Deterministic test tuples: exhaustive sweep tuples (capped), then
    seeded random tuples up to ``count``."""
    out = []
    pool = list(A.sweep)
    if pool and len(pool) ** width <= _TRIPLE_SWEEP_CAP:
        def rec(prefix):
            if len(prefix) == width:
                out.append(tuple(prefix))
                return
            for x in pool:
                rec(prefix + [x])
        rec([])
    rng = random.Random(seed)
    if A.rand is not None:
        while len(out) < count:
            out.append(tuple(A.rand(rng) for _ in range(width)))
    return out


def check_hom_associative(A: HomAlgebraDescriptor, count: int = 100, seed: int = 0) -> CheckReport:
    """(x y) alpha(z) = alpha(x) (y z) on sampled triples."""
    bad = []
    triples = _tuples(A, 3, count, seed)
    for x, y, z in triples:
        lhs = A.mul(A.mul(x, y), A.alpha(z))
        rhs = A.mul(A.alpha(x), A.mul(y, z))
        if not A.eq(lhs, rhs):
            bad.append(f"x={A.fmt(x)}, y={A.fmt(y)}, z={A.fmt(z)}: "
                       f"{A.fmt(lhs)} != {A.fmt(rhs)}")
    return CheckReport("hom_associativity", len(triples), bad, seed)


def check_multiplicative(A: HomAlgebraDescriptor, count: int = 100, seed: int = 0) -> CheckReport:
    """alpha(x y) = alpha(x) alpha(y) on sampled pairs."""
    bad = []
    pairs = _tuples(A, 2, count, seed)
    for x, y in pairs:
        lhs = A.alpha(A.mul(x, y))
        rhs = A.mul(A.alpha(x), A.alpha(y))
        if not A.eq(lhs, rhs):
            bad.append(f"x={A.fmt(x)}, y={A.fmt(y)}: {A.fmt(lhs)} != {A.fmt(rhs)}")
    return CheckReport("multiplicativity", len(pairs), bad, seed)


def check_unital(A: HomAlgebraDescriptor, count: int = 100, seed: int = 0) -> CheckReport:
    """1 x = x = x 1 on sampled elements (strict unit law)."""
    if A.unit is None:
        return CheckReport("unitality", 0, ["carrier has no distinguished unit"], seed)
    bad = []
    elems = [t[0] for t in _tuples(A, 1, count, seed)]
    for x in elems:
        left = A.mul(A.unit, x)
        right = A.mul(x, A.unit)
        if not A.eq(left, x):
            bad.append(f"1 * {A.fmt(x)} = {A.fmt(left)}")
        elif not A.eq(right, x):
            bad.append(f"{A.fmt(x)} * 1 = {A.fmt(right)}")
    return CheckReport("unitality", len(elems), bad, seed)


# ---------------------------------------------------------------------------
# polynomial carriers and twists
# ---------------------------------------------------------------------------

def rational_algebra() -> HomAlgebraDescriptor:
    """The ground field as a carrier (alpha = id)."""
    return HomAlgebraDescriptor(
        name="Q",
        zero=Fraction(0),
        add=lambda x, y: x + y,
        scale=lambda c, x: c * x,
        mul=lambda x, y: x * y,
        alpha=lambda x: x,
        eq=lambda x, y: x == y,
        unit=Fraction(1),
        unit_flavor=UnitFlavor.STRICT_UNITAL,
        sweep=(Fraction(0), Fraction(1), Fraction(-1), Fraction(2), Fraction(1, 2)),
        rand=lambda rng: Fraction(rng.randint(-4, 4), rng.choice([1, 1, 2, 3])),
        decompose=lambda x: [(x, Fraction(1))] if x else [],
        fmt=str,
    )


def poly_algebra(names, sweep_degree: int = 2) -> HomAlgebraDescriptor:
    """Classical commutative polynomial carrier on the given variables."""
    names = tuple(sorted(names))
    if len(set(names)) != len(names):
        raise ValueError(f"duplicate variable names: {names}")
    return HomAlgebraDescriptor(
        name="Q[" + ",".join(names) + "]",
        zero=Poly.zero(),
        add=lambda p, q: p + q,
        scale=lambda c, p: as_fraction(c) * p,
        mul=lambda p, q: p * q,
        alpha=lambda p: p,
        eq=lambda p, q: p == q,
        unit=Poly.one(),
        unit_flavor=UnitFlavor.STRICT_UNITAL,
        sweep=tuple(monomials_up_to(names, sweep_degree)),
        rand=lambda rng: random_poly(rng, names),
        decompose=lambda p: [(c, Poly.monomial(m)) for m, c in p.sorted_items()],
        fmt=str,
    )


def _endo_check(A: HomAlgebraDescriptor, phi, count: int = 24, seed: int = 11):
    """Sampled algebra-endomorphism laws for an arbitrary self-map."""
    for x, y in _tuples(A, 2, count, seed):
        if not A.eq(phi(A.mul(x, y)), A.mul(phi(x), phi(y))):
            raise PreconditionError(
                f"not an algebra endomorphism: phi(x*y) != phi(x)*phi(y) for "
                f"x={A.fmt(x)}, y={A.fmt(y)}")
    if A.unit is not None and not A.eq(phi(A.unit), A.unit):
        raise PreconditionError("not an algebra endomorphism: phi(1) != 1")


def yau_twist_algebra(A: HomAlgebraDescriptor, phi,
                      phi_name: str = "phi") -> HomAlgebraDescriptor:
    """Twist an associative carrier with identity twist map along ``phi``.

    The product becomes phi after mul and the twist map becomes phi.  The
    identity endomorphism returns the carrier unchanged; otherwise the unit
    survives only weakly.
    """
    for x, y, z in _tuples(A, 3, 12, 7):
        if not A.eq(A.mul(A.mul(x, y), z), A.mul(x, A.mul(y, z))):
            raise PreconditionError(
                f"carrier is not associative at x={A.fmt(x)}, y={A.fmt(y)}, z={A.fmt(z)}")
        if not (A.eq(A.alpha(x), x) and A.eq(A.alpha(y), y)):
            raise PreconditionError("carrier twist map must be the identity before twisting")
    _endo_check(A, phi)
    if all(A.eq(phi(x), x) for x in A.samples(16, seed=3)):
        return A
    return HomAlgebraDescriptor(
        name=f"{A.name} twisted by {phi_name}",
        zero=A.zero,
        add=A.add,
        scale=A.scale,
        mul=lambda x, y: phi(A.mul(x, y)),
        alpha=phi,
        eq=A.eq,
        unit=A.unit,
        unit_flavor=UnitFlavor.WEAK_UNITAL if A.unit is not None else UnitFlavor.NON_UNITAL,
        sweep=A.sweep,
        rand=A.rand,
        decompose=A.decompose,
        fmt=A.fmt,
    )


def scaling_twist(names, images: dict[str, Poly]) -> PolyEndo:
    return PolyEndo({v: images.get(v, Poly.var(v)) for v in names})


def q_poly_algebra(q, var: str = "t") -> HomAlgebraDescriptor:
    """The one-variable carrier twisted along t -> q t."""
    base = poly_algebra([var])
    phi = PolyEndo({var: as_fraction(q) * Poly.var(var)})
    return yau_twist_algebra(base, phi, phi_name=f"{var}->{q}{var}")


# ---------------------------------------------------------------------------
# 2x2 matrices over a carrier
# ---------------------------------------------------------------------------

def matrix_algebra(A: HomAlgebraDescriptor) -> HomAlgebraDescriptor:
    """2x2 matrices over a multiplicative Hom-associative carrier.

    Products are matrix products with entry sums in the carrier, the twist map
    acts entrywise, and the diagonal of the carrier unit is the distinguished
    unit (strict only when the carrier unit is strict).
    """
    def mat(fill):
        return ((fill(0, 0), fill(0, 1)), (fill(1, 0), fill(1, 1)))

    def add(X, Y):
        return mat(lambda i, j: A.add(X[i][j], Y[i][j]))

    def mul(X, Y):
        return mat(lambda i, j: A.add(A.mul(X[i][0], Y[0][j]), A.mul(X[i][1], Y[1][j])))

    zero = mat(lambda i, j: A.zero)
    unit = None
    if A.unit is not None:
        unit = mat(lambda i, j: A.unit if i == j else A.zero)

    def fmt(X):
        return "[[%s, %s], [%s, %s]]" % (
            A.fmt(X[0][0]), A.fmt(X[0][1]), A.fmt(X[1][0]), A.fmt(X[1][1]))

    return HomAlgebraDescriptor(
        name=f"M2({A.name})",
        zero=zero,
        add=add,
        scale=lambda c, X: mat(lambda i, j: A.scale(c, X[i][j])),
        mul=mul,
        alpha=lambda X: mat(lambda i, j: A.alpha(X[i][j])),
        eq=lambda X, Y: all(A.eq(X[i][j], Y[i][j]) for i in range(2) for j in range(2)),
        unit=unit,
        unit_flavor=A.unit_flavor if unit is not None else UnitFlavor.NON_UNITAL,
        sweep=(),
        rand=(lambda rng: mat(lambda i, j: A.rand(rng))) if A.rand else None,
        fmt=fmt,
    )


def random_matrix(A: HomAlgebraDescriptor, rng) -> tuple:
    return ((A.rand(rng), A.rand(rng)), (A.rand(rng), A.rand(rng)))


# ---------------------------------------------------------------------------
# formal tensor product of carriers
# ---------------------------------------------------------------------------

class Tensor2:
    """Formal rational combination of basis pure tensors (a (x) b).

    Requires both carriers to decompose elements over a canonical hashable
    basis; products and twists are computed legwise and re-decomposed, which
    is what makes equality exact.
    """

    __slots__ = ("pairs",)

    def __init__(self, pairs=None):
        cleaned = {}
        if pairs:
            for k, c in pairs.items():
                c = as_fraction(c)
                if c:
                    cleaned[k] = c
        object.__setattr__(self, "pairs", cleaned)

    def __setattr__(self, *a):
        raise AttributeError("Tensor2 is immutable")

    def __eq__(self, other):
        if not isinstance(other, Tensor2):
            return NotImplemented
        return self.pairs == other.pairs

    def __hash__(self):
        return hash(frozenset(self.pairs.items()))

    def __repr__(self):
        if not self.pairs:
            return "0"
        bits = []
        for (a, b), c in sorted(self.pairs.items(), key=lambda kv: repr(kv[0])):
            lead = "" if c == 1 else f"{c}*"
            bits.append(f"{lead}({a!r} (x) {b!r})")
        return " + ".join(bits)


def tensor_algebra(A: HomAlgebraDescriptor, B: HomAlgebraDescriptor) -> HomAlgebraDescriptor:
    """Componentwise tensor product of two carriers on formal basis pairs."""
    if A.decompose is None or B.decompose is None:
        raise ValueError("tensor product needs carriers with basis decomposition")

    def pure(a, b) -> Tensor2:
        out = {}
        for ca, ka in A.decompose(a):
            for cb, kb in B.decompose(b):
                k = (ka, kb)
                s = out.get(k, 0) + ca * cb
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        return Tensor2(out)

    def add(s, t):
        out = dict(s.pairs)
        for k, c in t.pairs.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return Tensor2(out)

    def scale(c, s):
        c = as_fraction(c)
        return Tensor2({k: c * v for k, v in s.pairs.items()})

    def mul(s, t):
        out = Tensor2()
        for (a1, b1), c1 in s.pairs.items():
            for (a2, b2), c2 in t.pairs.items():
                out = add(out, scale(c1 * c2, pure(A.mul(a1, a2), B.mul(b1, b2))))
        return out

    def alpha(s):
        out = Tensor2()
        for (a, b), c in s.pairs.items():
            out = add(out, scale(c, pure(A.alpha(a), B.alpha(b))))
        return out

    unit = None
    flavor = UnitFlavor.NON_UNITAL
    if A.unit is not None and B.unit is not None:
        unit = pure(A.unit, B.unit)
        weak = UnitFlavor.WEAK_UNITAL in (A.unit_flavor, B.unit_flavor)
        flavor = UnitFlavor.WEAK_UNITAL if weak else UnitFlavor.STRICT_UNITAL

    sweep = tuple(pure(a, b) for a in A.sweep[:4] for b in B.sweep[:4])

    def rand(rng):
        return pure(A.rand(rng), B.rand(rng))

    return HomAlgebraDescriptor(
        name=f"{A.name} (x) {B.name}",
        zero=Tensor2(),
        add=add,
        scale=scale,
        mul=mul,
        alpha=alpha,
        eq=lambda s, t: s == t,
        unit=unit,
        unit_flavor=flavor,
        sweep=sweep,
        rand=rand if A.rand and B.rand else None,
        fmt=repr,
    )


def tensor_pure(A: HomAlgebraDescriptor, B: HomAlgebraDescriptor, a, b) -> Tensor2:
    """The pure tensor of two carrier elements inside ``tensor_algebra(A, B)``."""
    out: dict = {}
    for ca, ka in A.decompose(a):
        for cb, kb in B.decompose(b):
            k = (ka, kb)
            s = out.get(k, 0) + ca * cb
            if s:
                out[k] = s
            else:
                out.pop(k, None)
    return Tensor2(out)


def tensor_swap(s: Tensor2) -> Tensor2:
    """The twist isomorphism exchanging the two legs."""
    return Tensor2({(b, a): c for (a, b), c in s.pairs.items()})
