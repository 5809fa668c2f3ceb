"""Comultiplications, coactions, and their law checkers.

Two flavors of carrier appear.  Free carriers hold comultiplication values as
tagged elements of one larger free algebra (legs are apostrophe tags on
generator names) and laws are decided by the congruence oracle.  Concrete
commutative carriers hold them as polynomials in duplicated variables and
laws are exact polynomial identities.

The central objects: the four-generator free bialgebra whose comultiplication
is the 2x2 matrix product of a primed and a double-primed copy; the free
plane on x, y with its matrix coaction; their classical polynomial versions;
and the twists of the classical versions along scaling endomorphisms.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .algebras import (HomAlgebraDescriptor, PreconditionError,
                       matrix_algebra, poly_algebra, yau_twist_algebra)
from .congruence import Bound, RelationBasis, SaturationConfig, saturate
from .morphisms import (FreeAlgebraHandle, MorphismAssignment, NamingError,
                        evaluate)
from .poly import Poly, PolyEndo
from .reports import LawItem, LawReport
from .terms import LinComb, make_leaf, rename
from .grammar import format_lincomb

MATRIX_LAYOUT = (("a", "b"), ("c", "d"))
PLANE_GENS = ("x", "y")


def _tagged(names, tag: str) -> list[str]:
    return [n + tag for n in names]


# ---------------------------------------------------------------------------
# free carriers
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FreeHomBialgebra:
    """A free carrier with a comultiplication given on generators.

    ``delta_images`` live in the merged free algebra on the generators tagged
    with one and with two apostrophes (left and right tensor leg).
    """
    handle: FreeAlgebraHandle
    delta_images: dict

    def doubled_handle(self, t1: str = "'", t2: str = "''") -> FreeAlgebraHandle:
        return FreeAlgebraHandle(tuple(_tagged(self.handle.gens, t1)
                                       + _tagged(self.handle.gens, t2)))

    def delta_at(self, t1: str, t2: str) -> dict:
        """The generator images with the two legs retagged."""
        if t1 == t2:
            raise NamingError("tensor legs need distinct tags")
        mapping = {}
        for g in self.handle.gens:
            mapping[g + "'"] = g + t1
            mapping[g + "''"] = g + t2
        return {g: rename(v, mapping) for g, v in self.delta_images.items()}

    def delta(self, v: LinComb, t1: str = "'", t2: str = "''") -> LinComb:
        """Morphism extension of the comultiplication to any element."""
        target = FreeAlgebraHandle(
            tuple(_tagged(self.handle.gens, t1) + _tagged(self.handle.gens, t2)))
        return evaluate(v, MorphismAssignment(target.descriptor(), self.delta_at(t1, t2)))


def _matrix_delta_images(layout=MATRIX_LAYOUT, t1: str = "'", t2: str = "''") -> dict:
    """Row-by-column product of the t1-tagged by the t2-tagged copy."""
    left = [[make_leaf(g + t1) for g in row] for row in layout]
    right = [[make_leaf(g + t2) for g in row] for row in layout]
    images = {}
    for i in range(2):
        for j in range(2):
            images[layout[i][j]] = left[i][0] * right[0][j] + left[i][1] * right[1][j]
    return images


def m_bialgebra() -> FreeHomBialgebra:
    """The free carrier on a, b, c, d with the matrix comultiplication."""
    handle = FreeAlgebraHandle(tuple(g for row in MATRIX_LAYOUT for g in row))
    return FreeHomBialgebra(handle, _matrix_delta_images())


@dataclass(frozen=True)
class FreeComoduleAlgebra:
    """A free carrier coacted on by a free bialgebra.

    ``coaction_images`` live in the merged free algebra on the bialgebra
    generators tagged with one apostrophe and the carrier generators tagged
    with two (the stored convention; law checks retag as needed).
    """
    H: FreeHomBialgebra
    A: FreeAlgebraHandle
    coaction_images: dict

    def coaction_at(self, h_tag: str, a_tag: str) -> dict:
        mapping = {}
        for h in self.H.handle.gens:
            mapping[h + "'"] = h + h_tag
        for x in self.A.gens:
            mapping[x + "''"] = x + a_tag
        if len(set(mapping.values())) != len(mapping):
            raise NamingError(f"legs collide under tags {h_tag!r}, {a_tag!r}")
        return {g: rename(v, mapping) for g, v in self.coaction_images.items()}

    def coaction(self, v: LinComb, h_tag: str = "'", a_tag: str = "''") -> LinComb:
        gens = tuple(_tagged(self.H.handle.gens, h_tag) + _tagged(self.A.gens, a_tag))
        target = FreeAlgebraHandle(gens).descriptor()
        return evaluate(v, MorphismAssignment(target, self.coaction_at(h_tag, a_tag)))


def hom_affine_plane() -> FreeComoduleAlgebra:
    """The free plane on x, y with the matrix coaction of the free bialgebra."""
    H = m_bialgebra()
    A = FreeAlgebraHandle(PLANE_GENS)
    h_rows = MATRIX_LAYOUT
    images = {}
    for i, x in enumerate(PLANE_GENS):
        images[x] = sum(
            (make_leaf(h_rows[i][j] + "'") * make_leaf(PLANE_GENS[j] + "''")
             for j in range(2)),
            LinComb.zero(),
        )
    return FreeComoduleAlgebra(H, A, images)


# ---------------------------------------------------------------------------
# law checks on free carriers
# ---------------------------------------------------------------------------

def check_hom_coassoc(B, elements=None, bound: Bound = Bound(3, 1),
                      config: SaturationConfig = SaturationConfig(),
                      basis: Optional[RelationBasis] = None) -> LawReport:
    """Twisted coassociativity of the comultiplication.

    Free case: both composites are expanded in the triple-tagged free algebra
    and compared by the congruence oracle.  Concrete case: exact equality of
    polynomials in tripled variables.
    """
    if isinstance(B, PolyHomBialgebra):
        return _check_hom_coassoc_poly(B, elements)
    gens = B.handle.gens
    triple = FreeAlgebraHandle(tuple(
        _tagged(gens, "'") + _tagged(gens, "''") + _tagged(gens, "'''")))
    if basis is None:
        basis = saturate(triple.gens, bound, config)
    target = triple.descriptor()
    m1 = MorphismAssignment(target, {
        **{g + "'": v for g, v in B.delta_at("'", "''").items()},
        **{g + "''": make_leaf(g + "'''", 1) for g in gens},
    })
    m2 = MorphismAssignment(target, {
        **{g + "'": make_leaf(g + "'", 1) for g in gens},
        **{g + "''": v for g, v in B.delta_at("''", "'''").items()},
    })
    if elements is None:
        elements = [(g, B.handle.gen(g)) for g in gens]
    report = LawReport("hom_coassociativity", context=basis.describe())
    for label, e in elements:
        d = B.delta(e)
        side1 = evaluate(d, m1)
        side2 = evaluate(d, m2)
        verdict, residue = _equal_mod_or_outside(basis, side1, side2)
        report.items.append(LawItem(
            label=label,
            lhs=format_lincomb(side1),
            rhs=format_lincomb(side2),
            verdict=verdict,
            residue=residue,
        ))
    return report


def check_comultiplicative(B, elements=None) -> LawReport:
    """Compatibility of the twist with the comultiplication (exact)."""
    if isinstance(B, PolyHomBialgebra):
        report = LawReport("comultiplicativity", context={"carrier": B.algebra.name})
        elements = elements or [(v, Poly.var(v)) for v in B.base_vars]
        phi2 = B.leg_endo()
        for label, p in elements:
            lhs = B.delta_eff(B.alpha(p))
            rhs = phi2(B.delta_eff(p))
            report.items.append(LawItem(label, str(lhs), str(rhs),
                                        "EQUAL" if lhs == rhs else "NOT_EQUAL"))
        return report
    report = LawReport("comultiplicativity", context={"carrier": "free"})
    if elements is None:
        elements = [(g, B.handle.gen(g)) for g in B.handle.gens]
        rng = random.Random(5)
        for k in range(4):
            e = B.handle.random_element(rng, max_arity=2, max_exp=1)
            elements.append((f"random_{k}", e))
    for label, e in elements:
        lhs = B.delta(e.alpha())
        rhs = B.delta(e).alpha()
        report.items.append(LawItem(label, format_lincomb(lhs), format_lincomb(rhs),
                                    "EQUAL" if lhs == rhs else "NOT_EQUAL"))
    return report


def check_delta_is_morphism(B, pairs=None, bound: Bound = Bound(3, 1),
                            config: SaturationConfig = SaturationConfig(unit_instances=False),
                            basis=None, seed: int = 9) -> LawReport:
    """The comultiplication respects products (free: modulo the congruence)."""
    if isinstance(B, PolyHomBialgebra):
        return _check_delta_morphism_poly(B, pairs)
    gens = B.handle.gens
    doubled = B.doubled_handle()
    if basis is None:
        basis = saturate(doubled.gens, bound, config)
    if pairs is None:
        rng = random.Random(seed)
        pairs = [(g, h) for g in gens for h in gens][:6]
        pairs = [(f"{g}*{h}", B.handle.gen(g), B.handle.gen(h)) for g, h in pairs]
        for k in range(4):
            u = B.handle.random_element(rng, max_arity=1, max_exp=0, n_terms=2)
            v = B.handle.random_element(rng, max_arity=1, max_exp=0, n_terms=2)
            pairs.append((f"random_{k}", u, v))
    report = LawReport("comultiplication_is_algebra_morphism", context=basis.describe())
    for label, u, v in pairs:
        lhs = B.delta(u * v)
        rhs = B.delta(u) * B.delta(v)
        verdict, residue = _equal_mod_or_outside(basis, lhs, rhs)
        report.items.append(LawItem(label, format_lincomb(lhs), format_lincomb(rhs),
                                    verdict, residue))
    return report


def _equal_mod_or_outside(basis: RelationBasis, lhs: LinComb, rhs: LinComb):
    """Oracle verdict; a difference that escapes the window is a reported
    non-proof, not a crash (the zero difference never escapes)."""
    from .congruence import OutOfWindowError
    try:
        res = basis.equal_mod(lhs, rhs)
    except OutOfWindowError:
        return ("NOT_PROVEN_WITHIN_BOUND",
                format_lincomb(lhs - rhs) + "  (difference escapes the window)")
    return (res.verdict.value,
            None if res.proven else format_lincomb(res.residue))


def check_comodule(C, elements=None, bound: Bound = Bound(3, 1),
                   config: SaturationConfig = SaturationConfig(),
                   basis: Optional[RelationBasis] = None) -> LawReport:
    """The twisted comodule law for a coaction.

    Free case: both composites land in the merged algebra on the doubly
    tagged bialgebra generators plus the bare carrier generators.
    """
    if isinstance(C, PolyComoduleAlgebra):
        return _check_comodule_poly(C, elements)
    H, A = C.H, C.A
    law_gens = tuple(_tagged(H.handle.gens, "'") + _tagged(H.handle.gens, "''")
                     + list(A.gens))
    if basis is None:
        basis = saturate(law_gens, bound, config)
    target = FreeAlgebraHandle(law_gens).descriptor()
    first = MorphismAssignment(
        FreeAlgebraHandle(tuple(_tagged(H.handle.gens, "'") + list(A.gens))).descriptor(),
        C.coaction_at("'", ""))
    m1 = MorphismAssignment(target, {
        **{h + "'": v for h, v in H.delta_at("'", "''").items()},
        **{x: make_leaf(x, 1) for x in A.gens},
    })
    m2 = MorphismAssignment(target, {
        **{h + "'": make_leaf(h + "'", 1) for h in H.handle.gens},
        **{x: v for x, v in C.coaction_at("''", "").items()},
    })
    if elements is None:
        elements = [(x, make_leaf(x)) for x in A.gens]
    report = LawReport("comodule_law", context=basis.describe())
    for label, e in elements:
        d = evaluate(e, first)
        side1 = evaluate(d, m1)
        side2 = evaluate(d, m2)
        verdict, residue = _equal_mod_or_outside(basis, side1, side2)
        report.items.append(LawItem(
            label, format_lincomb(side1), format_lincomb(side2),
            verdict, residue))
    return report


def check_comodule_homalgebra(C, pairs=None, bound: Bound = Bound(3, 1),
                              config: SaturationConfig = SaturationConfig(unit_instances=False),
                              seed: int = 13) -> LawReport:
    """The coaction respects products and the twist."""
    if isinstance(C, PolyComoduleAlgebra):
        return _check_comodule_homalgebra_poly(C, pairs)
    A = C.A
    merged = tuple(_tagged(C.H.handle.gens, "'") + _tagged(A.gens, "''"))
    basis = saturate(merged, bound, config)
    if pairs is None:
        pairs = [(f"{g}*{h}", A.gen(g), A.gen(h)) for g in A.gens for h in A.gens]
        rng = random.Random(seed)
        for k in range(3):
            pairs.append((f"random_{k}",
                          A.random_element(rng, max_arity=1, max_exp=0, n_terms=2),
                          A.random_element(rng, max_arity=1, max_exp=0, n_terms=2)))
    report = LawReport("coaction_is_algebra_morphism", context=basis.describe())
    for label, u, v in pairs:
        lhs = C.coaction(u * v)
        rhs = C.coaction(u) * C.coaction(v)
        verdict, residue = _equal_mod_or_outside(basis, lhs, rhs)
        report.items.append(LawItem(
            f"product {label}", format_lincomb(lhs), format_lincomb(rhs),
            verdict, residue))
        alhs = C.coaction(u.alpha())
        arhs = C.coaction(u).alpha()
        report.items.append(LawItem(
            f"twist {label}", format_lincomb(alhs), format_lincomb(arhs),
            "EQUAL" if alhs == arhs else "NOT_EQUAL"))
    return report


def representability_check(A: HomAlgebraDescriptor, X, Y,
                           B: Optional[FreeHomBialgebra] = None) -> LawReport:
    """Pulling a pair of matrices back along the comultiplication reproduces
    the matrix product in the carrier, entry by entry."""
    if B is None:
        B = m_bialgebra()
    gens = B.handle.gens
    layout = MATRIX_LAYOUT
    images = {}
    for i in range(2):
        for j in range(2):
            images[layout[i][j] + "'"] = X[i][j]
            images[layout[i][j] + "''"] = Y[i][j]
    assignment = MorphismAssignment(A, images)
    M2 = matrix_algebra(A)
    expected = M2.mul(X, Y)
    report = LawReport("matrix_representability", context={"carrier": A.name})
    for i in range(2):
        for j in range(2):
            got = evaluate(B.delta_images[layout[i][j]], assignment)
            want = expected[i][j]
            report.items.append(LawItem(
                f"entry ({i + 1},{j + 1})", A.fmt(got), A.fmt(want),
                "EQUAL" if A.eq(got, want) else "NOT_EQUAL"))
    return report


# ---------------------------------------------------------------------------
# concrete polynomial carriers
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PolyHomBialgebra:
    """A polynomial bialgebra, possibly twisted along an endomorphism.

    ``delta_base`` holds the classical comultiplication images in doubled
    variables (legs tagged with one and two apostrophes); the effective
    comultiplication precomposes the twist.
    """
    algebra: HomAlgebraDescriptor
    base_vars: tuple
    delta_base: dict
    twist: Optional[PolyEndo] = None

    def alpha(self, p: Poly) -> Poly:
        return self.twist(p) if self.twist else p

    def delta_images_at(self, t1: str, t2: str) -> dict:
        sub = {}
        for v in self.base_vars:
            sub[v + "'"] = Poly.var(v + t1)
            sub[v + "''"] = Poly.var(v + t2)
        return {v: img.substitute(sub) for v, img in self.delta_base.items()}

    def delta_classical(self, p: Poly, t1: str = "'", t2: str = "''") -> Poly:
        return p.substitute(self.delta_images_at(t1, t2))

    def delta_eff(self, p: Poly, t1: str = "'", t2: str = "''") -> Poly:
        return self.delta_classical(self.alpha(p), t1, t2)

    def leg_endo(self, t1: str = "'", t2: str = "''") -> PolyEndo:
        """The twist acting on both legs of the doubled variables."""
        images = {}
        for v in self.base_vars:
            img = self.alpha(Poly.var(v))
            images[v + t1] = img.substitute({u: Poly.var(u + t1) for u in self.base_vars})
            images[v + t2] = img.substitute({u: Poly.var(u + t2) for u in self.base_vars})
        return PolyEndo(images)


def classical_m2_bialgebra() -> PolyHomBialgebra:
    """The coordinate bialgebra of 2x2 matrices on a, b, c, d."""
    names = tuple(g for row in MATRIX_LAYOUT for g in row)
    left = [[Poly.var(g + "'") for g in row] for row in MATRIX_LAYOUT]
    right = [[Poly.var(g + "''") for g in row] for row in MATRIX_LAYOUT]
    delta = {}
    for i in range(2):
        for j in range(2):
            delta[MATRIX_LAYOUT[i][j]] = left[i][0] * right[0][j] + left[i][1] * right[1][j]
    return PolyHomBialgebra(poly_algebra(names), names, delta)


@dataclass(frozen=True)
class PolyComoduleAlgebra:
    """A polynomial carrier coacted on by a polynomial bialgebra.

    The classical coaction images live in the union variables (bialgebra
    variables and carrier variables are disjoint names); the effective
    coaction precomposes the carrier twist.
    """
    H: PolyHomBialgebra
    algebra: HomAlgebraDescriptor
    a_vars: tuple
    rho_base: dict
    twist_A: Optional[PolyEndo] = None

    def __post_init__(self):
        clash = set(self.H.base_vars) & set(self.a_vars)
        if clash:
            raise NamingError(f"carrier variables collide with the bialgebra's: {sorted(clash)}")

    def alpha_A(self, p: Poly) -> Poly:
        return self.twist_A(p) if self.twist_A else p

    def rho_classical(self, p: Poly) -> Poly:
        return p.substitute(dict(self.rho_base))

    def rho_eff(self, p: Poly) -> Poly:
        return self.rho_classical(self.alpha_A(p))

    def combined_endo(self) -> PolyEndo:
        """The twist on the mixed carrier (bialgebra legs and carrier legs)."""
        images = {}
        for v in self.H.base_vars:
            images[v] = self.H.alpha(Poly.var(v))
        for v in self.a_vars:
            images[v] = self.alpha_A(Poly.var(v))
        return PolyEndo(images)


def classical_affine_comodule() -> PolyComoduleAlgebra:
    """The plane on x, y with the classical matrix coaction."""
    H = classical_m2_bialgebra()
    rho = {}
    for i, x in enumerate(PLANE_GENS):
        rho[x] = sum((Poly.var(MATRIX_LAYOUT[i][j]) * Poly.var(PLANE_GENS[j])
                      for j in range(2)), Poly.zero())
    return PolyComoduleAlgebra(H, poly_algebra(PLANE_GENS), PLANE_GENS, rho)


def _check_hom_coassoc_poly(B: PolyHomBialgebra, elements=None) -> LawReport:
    report = LawReport("hom_coassociativity", context={"carrier": B.algebra.name})
    if elements is None:
        elements = [(v, Poly.var(v)) for v in B.base_vars]
    for label, p in elements:
        d = B.delta_eff(p)
        sub1 = {}
        sub2 = {}
        for v in B.base_vars:
            dv = B.delta_eff(Poly.var(v))
            av = B.alpha(Poly.var(v))
            sub1[v + "'"] = dv
            sub1[v + "''"] = av.substitute({u: Poly.var(u + "'''") for u in B.base_vars})
            sub2[v + "'"] = av.substitute({u: Poly.var(u + "'") for u in B.base_vars})
            sub2[v + "''"] = B.delta_eff(Poly.var(v), "''", "'''")
        side1 = d.substitute(sub1)
        side2 = d.substitute(sub2)
        report.items.append(LawItem(label, str(side1), str(side2),
                                    "EQUAL" if side1 == side2 else "NOT_EQUAL"))
    return report


def _check_delta_morphism_poly(B: PolyHomBialgebra, pairs=None) -> LawReport:
    report = LawReport("comultiplication_is_algebra_morphism",
                       context={"carrier": B.algebra.name})
    if pairs is None:
        sweep = B.algebra.sweep
        pairs = [(f"{p}|{q}", p, q) for p in sweep[:8] for q in sweep[:8]]
    phi2 = B.leg_endo()
    for label, p, q in pairs:
        lhs = B.delta_eff(B.algebra.mul(p, q))
        rhs = phi2(B.delta_eff(p) * B.delta_eff(q))
        report.items.append(LawItem(label, str(lhs), str(rhs),
                                    "EQUAL" if lhs == rhs else "NOT_EQUAL"))
    return report


def _check_comodule_poly(C: PolyComoduleAlgebra, elements=None) -> LawReport:
    H = C.H
    report = LawReport("comodule_law", context={"carrier": C.algebra.name})
    if elements is None:
        elements = [(v, Poly.var(v)) for v in C.a_vars]
    for label, p in elements:
        d = C.rho_eff(p)
        sub1 = {}
        sub2 = {}
        for v in H.base_vars:
            hv = H.alpha(Poly.var(v))
            sub1[v] = hv.substitute({u: Poly.var(u + "'") for u in H.base_vars})
            sub2[v] = H.delta_eff(Poly.var(v))
        for x in C.a_vars:
            rx = C.rho_eff(Poly.var(x))
            sub1[x] = rx.substitute({u: Poly.var(u + "''") for u in H.base_vars})
            sub2[x] = C.alpha_A(Poly.var(x))
        side1 = d.substitute(sub1)
        side2 = d.substitute(sub2)
        report.items.append(LawItem(label, str(side1), str(side2),
                                    "EQUAL" if side1 == side2 else "NOT_EQUAL"))
    return report


def _check_comodule_homalgebra_poly(C: PolyComoduleAlgebra, pairs=None) -> LawReport:
    report = LawReport("coaction_is_algebra_morphism",
                       context={"carrier": C.algebra.name})
    if pairs is None:
        sweep = C.algebra.sweep
        pairs = [(f"{p}|{q}", p, q) for p in sweep for q in sweep]
    combined = C.combined_endo()
    for label, p, q in pairs:
        lhs = C.rho_eff(C.algebra.mul(p, q))
        rhs = combined(C.rho_eff(p) * C.rho_eff(q))
        report.items.append(LawItem(f"product {label}", str(lhs), str(rhs),
                                    "EQUAL" if lhs == rhs else "NOT_EQUAL"))
        alhs = C.rho_eff(C.alpha_A(p))
        arhs = combined(C.rho_eff(p))
        report.items.append(LawItem(f"twist {label}", str(alhs), str(arhs),
                                    "EQUAL" if alhs == arhs else "NOT_EQUAL"))
    return report


# ---------------------------------------------------------------------------
# twisting classical structures
# ---------------------------------------------------------------------------

def _require_bialgebra_endo(B: PolyHomBialgebra, phi: PolyEndo):
    """phi must preserve both the product (automatic for substitution maps,
    still sampled) and the comultiplication; witness on failure."""
    sweep = B.algebra.sweep[:6]
    for p in sweep:
        for q in sweep:
            if phi(p * q) != phi(p) * phi(q):
                raise PreconditionError(
                    f"product not preserved at {p} , {q}")
    images = {}
    for v in B.base_vars:
        img = phi(Poly.var(v))
        images[v + "'"] = img.substitute({u: Poly.var(u + "'") for u in B.base_vars})
        images[v + "''"] = img.substitute({u: Poly.var(u + "''") for u in B.base_vars})
    phi2 = PolyEndo(images)
    probes = [(v, Poly.var(v)) for v in B.base_vars]
    probes += [(f"{p}*{q}", p * q) for p in sweep[1:3] for q in sweep[1:3]]
    for label, p in probes:
        lhs = B.delta_classical(phi(p))
        rhs = phi2(B.delta_classical(p))
        if lhs != rhs:
            raise PreconditionError(
                f"comultiplication not preserved at {label}: "
                f"delta(phi) = {lhs} but (phi x phi)(delta) = {rhs}")


def yau_twist_bialgebra(B: PolyHomBialgebra, phi: PolyEndo) -> PolyHomBialgebra:
    """Twist a classical polynomial bialgebra along a bialgebra endomorphism:
    the product gains phi after, the comultiplication gains phi before."""
    if B.twist is not None:
        raise PreconditionError("twisting starts from a classical bialgebra")
    _require_bialgebra_endo(B, phi)
    if phi.is_identity_on(B.base_vars):
        return B
    return PolyHomBialgebra(
        algebra=yau_twist_algebra(B.algebra, phi),
        base_vars=B.base_vars,
        delta_base=B.delta_base,
        twist=phi,
    )


def twist_comodule(H: PolyHomBialgebra, C: PolyComoduleAlgebra,
                   phi_H: PolyEndo, phi_A: PolyEndo) -> PolyComoduleAlgebra:
    """Twist a classical comodule algebra along compatible endomorphisms.

    Compatibility demands that the coaction intertwines the carrier twist
    with the pair of twists; it is checked exactly on the carrier generators
    and reported with a witness when it fails.
    """
    if C.twist_A is not None or H.twist is not None:
        raise PreconditionError("twisting starts from classical structures")
    H_twisted = yau_twist_bialgebra(H, phi_H)
    sweep = C.algebra.sweep[:6]
    for p in sweep:
        for q in sweep:
            if phi_A(p * q) != phi_A(p) * phi_A(q):
                raise PreconditionError(f"carrier map not an endomorphism at {p}, {q}")
    combined = PolyEndo({
        **{v: phi_H(Poly.var(v)) for v in H.base_vars},
        **{x: phi_A(Poly.var(x)) for x in C.a_vars},
    })
    witnesses = []
    for x in C.a_vars:
        lhs = C.rho_classical(phi_A(Poly.var(x)))
        rhs = combined(C.rho_classical(Poly.var(x)))
        if lhs != rhs:
            witnesses.append(
                f"generator {x}: rho(phi_A({x})) = {lhs} "
                f"but (phi_H x phi_A)(rho({x})) = {rhs}")
    if witnesses:
        raise PreconditionError(
            "coaction compatibility fails on " + "; ".join(witnesses))
    if phi_H.is_identity_on(H.base_vars) and phi_A.is_identity_on(C.a_vars):
        return C
    return PolyComoduleAlgebra(
        H=H_twisted,
        algebra=yau_twist_algebra(C.algebra, phi_A),
        a_vars=C.a_vars,
        rho_base=C.rho_base,
        twist_A=phi_A,
    )


def lambda_scaling_pair(lam) -> tuple[PolyEndo, PolyEndo]:
    """The scaling fixtures: b and the second plane variable scale by lam
    and 1/lam in the compatible pattern; lam must be invertible."""
    from fractions import Fraction
    lam = Fraction(lam)
    if lam == 0:
        raise PreconditionError("scaling parameter must be invertible (nonzero)")
    phi_H = PolyEndo({
        "a": Poly.var("a"),
        "b": lam * Poly.var("b"),
        "c": (1 / lam) * Poly.var("c"),
        "d": Poly.var("d"),
    })
    phi_A = PolyEndo({
        "x": Poly.var("x"),
        "y": (1 / lam) * Poly.var("y"),
    })
    return phi_H, phi_A
