"""Twisted loop algebras: eigenspaces, split forms, and mode spectra.

Run from the repository root:  python3 demos/03_twisted_loops.py
"""

from csalg import (eigenspaces, identity_morphism, l0_spectrum, make_n2,
                   make_n4, n2_omega, n4_auto, split_check, alg_bracket)

N2 = make_n2()
N4 = make_n4()

# The loop algebra of a twist sigma keeps a (x) t^q exactly when a lies in
# the eigenspace matching the residue of q.
loop = eigenspaces(N2, n2_omega(N2), 2)
for i, piece in enumerate(loop.eigenbasis):
    print("residue %d/2:" % i, ", ".join(N2.elt_string(v) for v in piece))
print()

# Base change to half-integer exponents flattens the twist: on a window of
# exponents the multiplication map is a bijection.
print(split_check(loop, 3))
print()

# Mode brackets of the untwisted Virasoro generator reproduce the Witt
# relations [L_a, L_b] = (a - b) L_{a+b-1} in this indexing.
untwisted = eigenspaces(N2, identity_morphism(N2), 1)
for a, b in ((2, -1), (3, 0), (1, 1)):
    got = alg_bracket(untwisted, untwisted.mode("L", a),
                      untwisted.mode("L", b))
    print("[L[%d], L[%d]] = %s" % (a, b, got))
print()

# The fractional parts of the odd Virasoro-mode spectrum separate the
# twisted loops: each order leaves a different fingerprint.
i = N4.field.root_of_unity(4)
zeta3 = N4.field.root_of_unity(3)
twists = [
    ("order 1, untwisted", identity_morphism(N4), 1),
    ("order 2, diag(-1,-1)", n4_auto([[1, 0], [0, 1]],
                                     [[-1, 0], [0, -1]], N4), 2),
    ("order 3, diag(z3,z3^2)", n4_auto([[1, 0], [0, 1]],
                                       [[zeta3, 0], [0, zeta3 ** 2]], N4), 3),
    ("order 4, diag(i,-i)", n4_auto([[1, 0], [0, 1]],
                                    [[i, 0], [0, -i]], N4), 4),
]
for label, sigma, order in twists:
    spec = l0_spectrum(eigenspaces(N4, sigma, order), "odd", 2)
    parts = sorted(spec.fractional_parts)
    print("%-26s odd L0 fractional parts: {%s}"
          % (label, ", ".join(str(p) for p in parts)))
