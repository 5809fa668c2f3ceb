"""Exact multivariate polynomials over the rationals, plus endomorphisms.

These are the concrete commutative carriers: the coordinate ring of 2x2
matrices on four variables, the plane on two, a one-variable ring for scaling
twists.  Monomials are sorted tuples of (variable, power); coefficients are
``Fraction``.  Polynomials are immutable and hashable, so they can serve as
basis keys in formal tensors.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .terms import as_fraction

Mono = tuple[tuple[str, int], ...]

_ONE: Mono = ()


def _mono_mul(m1: Mono, m2: Mono) -> Mono:
    if not m1:
        return m2
    if not m2:
        return m1
    acc: dict[str, int] = dict(m1)
    for v, e in m2:
        acc[v] = acc.get(v, 0) + e
    return tuple(sorted(acc.items()))


def _mono_degree(m: Mono) -> int:
    return sum(e for _, e in m)


def _mono_str(m: Mono) -> str:
    if not m:
        return "1"
    return "*".join(v if e == 1 else f"{v}^{e}" for v, e in m)


class Poly:
    """Immutable exact-rational polynomial."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs=None):
        cleaned: dict[Mono, Fraction] = {}
        if coeffs:
            for m, c in coeffs.items():
                c = as_fraction(c)
                if c:
                    cleaned[m] = c
        object.__setattr__(self, "coeffs", cleaned)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, *a):
        raise AttributeError("Poly is immutable")

    @staticmethod
    def zero() -> "Poly":
        return Poly()

    @staticmethod
    def one() -> "Poly":
        return Poly({_ONE: Fraction(1)})

    @staticmethod
    def const(c) -> "Poly":
        return Poly({_ONE: as_fraction(c)})

    @staticmethod
    def var(name: str) -> "Poly":
        return Poly({((name, 1),): Fraction(1)})

    @staticmethod
    def monomial(m: Mono, c=1) -> "Poly":
        return Poly({m: as_fraction(c)})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(frozenset(self.coeffs.items()))
            object.__setattr__(self, "_hash", h)
        return h

    def __add__(self, other: "Poly") -> "Poly":
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Poly(out)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-1) * other

    def __neg__(self) -> "Poly":
        return (-1) * self

    def __rmul__(self, c) -> "Poly":
        if isinstance(c, Poly):
            return NotImplemented
        c = as_fraction(c)
        if not c:
            return Poly.zero()
        return Poly({m: c * v for m, v in self.coeffs.items()})

    def __mul__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        out: dict[Mono, Fraction] = {}
        for m1, c1 in self.coeffs.items():
            for m2, c2 in other.coeffs.items():
                m = _mono_mul(m1, m2)
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return Poly(out)

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative power")
        out = Poly.one()
        for _ in range(k):
            out = out * self
        return out

    def substitute(self, images: dict[str, "Poly"]) -> "Poly":
        """Algebra-morphism extension of a variable assignment (missing
        variables map to themselves)."""
        out = Poly.zero()
        for m, c in self.coeffs.items():
            part = Poly.const(c)
            for v, e in m:
                part = part * images.get(v, Poly.var(v)) ** e
            out = out + part
        return out

    def degree(self) -> int:
        return max((_mono_degree(m) for m in self.coeffs), default=0)

    def variables(self) -> set[str]:
        return {v for m in self.coeffs for v, _ in m}

    def sorted_items(self) -> list[tuple[Mono, Fraction]]:
        return sorted(self.coeffs.items(), key=lambda mc: (_mono_degree(mc[0]), mc[0]))

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for m, c in self.sorted_items():
            if not m:
                parts.append(str(c))
            elif c == 1:
                parts.append(_mono_str(m))
            else:
                parts.append(f"{c}*{_mono_str(m)}")
        return " + ".join(parts)


class PolyEndo:
    """Algebra endomorphism given by images of variables, extended by
    substitution (hence automatically multiplicative and unital)."""

    def __init__(self, images: dict[str, Poly]):
        self.images = {v: p for v, p in images.items()}

    def __call__(self, p: Poly) -> Poly:
        return p.substitute(self.images)

    def is_identity_on(self, names) -> bool:
        return all(self.images.get(v, Poly.var(v)) == Poly.var(v) for v in names)

    def compose(self, other: "PolyEndo") -> "PolyEndo":
        """self after other."""
        names = set(self.images) | set(other.images)
        return PolyEndo({v: self(other(Poly.var(v))) for v in names})

    def __repr__(self):
        body = ", ".join(f"{v} -> {p}" for v, p in sorted(self.images.items()))
        return f"PolyEndo({body})"


def monomials_up_to(names, degree: int) -> list[Poly]:
    """All monomials of total degree <= degree, ascending (includes 1)."""
    names = sorted(names)
    level: list[Mono] = [_ONE]
    out: list[Mono] = [_ONE]
    for _ in range(degree):
        nxt = []
        for m in level:
            for v in names:
                mm = _mono_mul(m, ((v, 1),))
                nxt.append(mm)
        # distinct, order-stable
        seen = set(out)
        level = []
        for m in nxt:
            if m not in seen:
                seen.add(m)
                level.append(m)
        out.extend(level)
    return [Poly.monomial(m) for m in out]


def random_poly(rng, names, degree: int = 2, terms: int = 3) -> Poly:
    """Seeded random polynomial with small integer coefficients."""
    names = sorted(names)
    out = Poly.zero()
    for _ in range(terms):
        c = rng.randint(-2, 2)
        if not c:
            continue
        m: Mono = _ONE
        for _ in range(rng.randint(0, degree)):
            m = _mono_mul(m, ((rng.choice(names), 1),))
        out = out + Poly.monomial(m, c)
    return out


# ---------------------------------------------------------------------------
# small expression parser for descriptor files:  3/2*x^2*y + t - 1
# ---------------------------------------------------------------------------

_POLY_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>[A-Za-z_][A-Za-z0-9_]*'*)|(?P<sym>[-+*^()]))")


def parse_poly(text: str, allowed=None) -> Poly:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _POLY_TOKEN.match(text, pos)
        if not m or m.end() == pos:
            if text[pos:].strip():
                raise ValueError(f"bad polynomial syntax near {text[pos:]!r}")
            break
        if m.lastgroup:
            tokens.append((m.lastgroup, m.group(m.lastgroup)))
        pos = m.end()
    tokens.append(("eof", ""))

    state = {"i": 0}

    def peek():
        return tokens[state["i"]]

    def advance():
        tok = tokens[state["i"]]
        state["i"] += 1
        return tok

    def atom() -> Poly:
        kind, value = peek()
        if (kind, value) == ("sym", "-"):
            advance()
            return -atom()
        if kind == "num":
            advance()
            return Poly.const(Fraction(value))
        if kind == "name":
            advance()
            if allowed is not None and value not in allowed:
                raise ValueError(f"unknown variable {value!r}")
            return Poly.var(value)
        if (kind, value) == ("sym", "("):
            advance()
            e = expr()
            if peek() != ("sym", ")"):
                raise ValueError("missing ')'")
            advance()
            return e
        raise ValueError(f"bad polynomial syntax near {value!r}")

    def factor() -> Poly:
        base = atom()
        if peek() == ("sym", "^"):
            advance()
            kind, value = advance()
            if kind != "num" or "/" in value:
                raise ValueError("power must be a nonnegative integer")
            return base ** int(value)
        return base

    def term() -> Poly:
        out = factor()
        while peek() == ("sym", "*"):
            advance()
            out = out * factor()
        return out

    def expr() -> Poly:
        sign = 1
        if peek() == ("sym", "-"):
            advance()
            sign = -1
        elif peek() == ("sym", "+"):
            advance()
        out = sign * term()
        while peek()[0] == "sym" and peek()[1] in "+-":
            _, op = advance()
            nxt = term()
            out = out + (nxt if op == "+" else -nxt)
        return out

    result = expr()
    if peek()[0] != "eof":
        raise ValueError(f"trailing polynomial input near {peek()[1]!r}")
    return result
