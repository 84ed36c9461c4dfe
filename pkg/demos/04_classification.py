"""Classification bookkeeping: cocycles, matrix invariants, centroids.

Run from the repository root:  python3 demos/04_classification.py
"""

from csalg import (LaurentElt, N2AutElt, centroid_basis, cocycle_of,
                   coboundary, eigenspaces, is_scalar_action, make_n2,
                   n2_component, n2_omega, n4_invariant, pgl2_classes)

N2 = make_n2()
FIELD = N2.field

# Twists of the same order can still be inequivalent; for the N=2 family
# the difference is one bit, read off a cocycle and blind to coboundaries.
flip = N2AutElt(LaurentElt.one(), 1)
straight = cocycle_of(N2AutElt.identity(), 2)
flipped = cocycle_of(flip, 2)
print("component of the trivial order-2 cocycle:", n2_component(straight))
print("component of the flip cocycle:           ", n2_component(flipped))
g = N2AutElt(LaurentElt(FIELD, {2: FIELD.rational(3)}), 0)
print("stable under a coboundary:",
      n2_component(coboundary(flipped, g)) == n2_component(flipped))
print()

# For N=4 the twist datum is an SL2 matrix; only the unordered pair of
# squared eigenvalues survives conjugation and the sign ambiguity.
i = FIELD.root_of_unity(4)
print("invariant of diag(i,-i):   ", n4_invariant([[i, 0], [0, -i]]))
print("invariant of [[0,1],[-1,0]]:", n4_invariant([[0, 1], [-1, 0]]))
print("classes of order dividing 4:",
      ", ".join(str(c) for c in pgl2_classes(4)))
print()

# The centroid of a twisted loop, solved exactly on a window, is spanned
# by multiplications with monomials; nothing else survives the linear
# constraints.  That scalar ring is what distinguishes loop algebras of
# the same underlying shape.
loop = eigenspaces(N2, n2_omega(N2), 2)
solutions = centroid_basis(loop, 3, 1)
print("centroid solutions for the omega loop (window 3, interior 1):")
for chi in solutions:
    print("  multiplication by", is_scalar_action(chi))
