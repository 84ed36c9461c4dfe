"""The automorphism families of the N=2 and N=4 algebras.

Run from the repository root:  python3 demos/02_automorphisms.py
"""

from fractions import Fraction

from csalg import (LaurentElt, SL2MatrixOverS, check_hom, compose,
                   identity_morphism, make_n2, make_n4, n2_omega, n2_theta,
                   n4_auto, order_of)

N2 = make_n2()
N4 = make_n4()
FIELD = N2.field


def mono(coeff, q):
    return LaurentElt(FIELD, {Fraction(q): coeff})


# Every unit monomial s gives an automorphism theta_s that rescales the
# odd pair by s^{+1} and s^{-1}; omega swaps the pair and flips the current.
omega = n2_omega(N2)
for s in (mono(1, 1), mono(2, 3), mono(1, Fraction(1, 2))):
    theta = n2_theta(s, N2)
    report = check_hom(N2, theta)
    print("theta_s for s = %-8s level %d  homomorphism: %s"
          % (s, theta.level, report.homomorphism))
print("omega is an involution:",
      compose(omega, omega) == identity_morphism(N2))

# Composition follows the units: theta_s theta_s' = theta_{ss'}, and
# conjugating by omega inverts the unit (coefficient included).
s, sp = mono(2, 3), mono(1, 1)
print("theta_s theta_s' = theta_{ss'}:",
      compose(n2_theta(s, N2), n2_theta(sp, N2)) == n2_theta(s * sp, N2))
print("omega theta_s omega = theta_{s^-1}:",
      compose(omega, compose(n2_theta(s, N2), omega))
      == n2_theta(s.inverse(), N2))
print()

# The N=4 automorphisms come in pairs (Y, X): a loop-coefficient matrix Y
# and a constant matrix X, both in SL2.  The pair (-I, -I) acts trivially.
i = FIELD.root_of_unity(4)
y = SL2MatrixOverS(FIELD, [[1, mono(1, 1)], [0, 1]])
phi = n4_auto(y, [[i, 0], [0, -i]], N4)
print("n4_auto(unipotent, diag(i,-i)) homomorphism:",
      check_hom(N4, phi).homomorphism)
rotation = n4_auto([[1, 0], [0, 1]], [[i, 0], [0, -i]], N4)
print("order of the diag(i,-i) twist:", order_of(rotation, 8))
print("(-I, -I) is the identity:",
      n4_auto([[-1, 0], [0, -1]], [[-1, 0], [0, -1]], N4)
      == identity_morphism(N4))
