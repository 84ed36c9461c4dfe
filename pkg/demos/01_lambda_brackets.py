"""Define a conformal superalgebra, evaluate brackets, check the axioms.

Run from the repository root:  python3 demos/01_lambda_brackets.py
"""

from fractions import Fraction

from csalg import (check_axioms, lambda_bracket, make_n2, parse_algebra,
                   format_algebra)

A = make_n2()
print("algebra:", A.name)
print("generators:", ", ".join(g.name for g in A.generators))
print()

# The bracket of the two odd generators carries the whole structure: the
# Virasoro vector, the derivative of the current, and a lambda term.
x = A.elt("G+")
y = A.elt("G-")
print("[G+ lambda G-] =", A.poly_string(lambda_bracket(A, x, y)))

# Brackets extend to decorated elements: derivatives and Laurent tails on
# either side are handled by the same evaluator.
x = A.elt("L", q=2)
y = A.elt("J", dpow=1, q=Fraction(-1, 2))
print("[L t^2 lambda D J t^{-1/2}] =", A.poly_string(lambda_bracket(A, x, y)))
print()

# The axiom report sweeps skew-symmetry and Jacobi exhaustively over the
# generator table and spot-checks the evaluator laws.
print(check_axioms(A))
print()

# The text format round-trips: printing and reparsing is the identity.
text = format_algebra(A)
print(text)
assert parse_algebra(text) == A
print("reparse equals the original: True")
