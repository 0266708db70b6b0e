"""Linear rules from associative multiplication tables.

Any associative structure constants a_ij^k define a double bracket
{{x_i, x_j}} = sum_k a_ij^k x_k (x) 1 - a_ji^k 1 (x) x_k of degree -1.
On degree-1 necklaces it is the commutator Lie bracket; the matrix algebra
gives necklaces in beads e_ij.  Non-associative tables are rejected.
"""

from fractions import Fraction

from necklaces import (
    AssociativityError,
    StructureConstants,
    check_degree1_commutator,
    gl_constants,
    necklace_bracket,
    ngl,
    parse_element,
)
from necklaces.linear_rules import matrix_unit_names
from necklaces.elements import format_element

rule = ngl(2)
names = matrix_unit_names(2)
alphabet = {v: k for k, v in names.items()}


def bracket(a, b):
    got = necklace_bracket(rule, parse_element(a, alphabet), parse_element(b, alphabet))
    return format_element(got, names)


print("degree-1 brackets of the 2x2 matrix rule:")
for a, b in [("e12", "e21"), ("e11", "e12"), ("e11", "e22"), ("e12", "e12")]:
    print(f"  {{{a}, {b}}} = {bracket(a, b)}")
print()

report = check_degree1_commutator(gl_constants(2), rule)
print("all 16 degree-1 brackets match matrix commutators:", report.ok)
print()

# degree -1 grading: one bead disappears per bracket
print("{e12, e21e12e21} =", bracket("e12", "e21e12e21"), "(degree 3 -> degree 3+1-1)")
print()

# a perturbed table fails associativity and is rejected outright
bad = dict(gl_constants(2).a)
bad[(1, 2, 3)] = bad.get((1, 2, 3), Fraction(0)) + 1
try:
    StructureConstants(4, bad)
    print("perturbed table accepted?!")
except AssociativityError as e:
    print("perturbed table rejected:", e)
