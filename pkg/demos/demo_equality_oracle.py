"""The bounded equality oracle for the twisted-associative quotient.

Equality is semi-decided: relation instances inside a window are saturated
and row-reduced; a zero residue is a proof, a nonzero one only means "not
proven in this window".  The two relation configurations differ on whether
the unit may appear as an associator argument — the literal unital reading
collapses the twist, and this demo makes that visible.
"""

from homalgebra import Bound, SaturationConfig, make_leaf, saturate

x, y, z = make_leaf("x"), make_leaf("y"), make_leaf("z")

print("saturating 3 generators at arity <= 3, exponents <= 1 (no unit arguments)")
basis = saturate(["x", "y", "z"], Bound(3, 1), SaturationConfig(unit_instances=False))
print("  window terms:", basis.basis_size, "| relation rows:", basis.rows_count)

lhs = (x * y) * z.alpha()
rhs = x.alpha() * (y * z)
res = basis.equal_mod(lhs, rhs)
print("\ntwisted associativity:")
print(" ", lhs, "==", rhs, "->", res.verdict.value)

res = basis.equal_mod(x, x.alpha())
print("a leaf is NOT provably its own twist here:")
print(" ", x, "==", x.alpha(), "->", res.verdict.value, "| residue:", res.residue)

print("\nnow with unit arguments (the literal unital relation set):")
unital = saturate(["x", "y"], Bound(2, 1), SaturationConfig(unit_instances=True))
res = unital.equal_mod(x * y.alpha(), x * y)
print(" ", x * y.alpha(), "==", x * y, "->", res.verdict.value)
res = unital.equal_mod(x, x.alpha())
print(" ", x, "==", x.alpha(), "->", res.verdict.value,
      " (the unit arguments collapse the twist)")

print("\nresidues are canonical representatives:")
print("  reduce(", (x * y) * z.alpha(), ") =", basis.reduce((x * y) * z.alpha()))
