"""Decomposing each degree under the quadratic generators.

For one symbol pair the quadratic necklaces E = (x*)^2/2, F = -x^2/2,
H = xx* bracket exactly like sl2, and every degree-n slice splits into
highest weight modules.  The multiplicities come from a closed formula;
the brute-force route counts weight-space dimensions over the necklace
basis and validates them against exact ranks of the E-action.
"""

from necklaces import (
    BracketRule,
    decompose_bruteforce,
    decompose_by_formula,
    necklace_bracket,
    necklace_dimension,
    parse_word,
    sl2_generators,
    table1,
    word_weight,
)

rule = BracketRule.canonical(1)
g = sl2_generators()
print("{H, E} =", necklace_bracket(rule, g.H, g.E), " (= 2E)")
print("{H, F} =", necklace_bracket(rule, g.H, g.F), " (= -2F)")
print("{E, F} =", necklace_bracket(rule, g.E, g.F), " (= H)")
print()

print("H acts diagonally; the weight of a word is deg_{x*} - deg_x:")
for text in ("xxx*", "x*x*", "xx*xx*"):
    print(f"  weight({text}) = {word_weight(parse_word(text))}")
print()

print("multiplicity of weight w in degree n (rows n = 1..8, columns w = 8..0):")
for row in table1(8):
    cells = [row.multiplicity(w) for w in range(8, -1, -1)]
    print(f"  n={row.degree}: ", " ".join(str(c) for c in cells))
print()

# formula vs enumeration-with-rank-checks, a bit further out
for n in (10, 12):
    a = decompose_by_formula(n)
    b = decompose_bruteforce(n)
    status = "agree" if a == b else "DISAGREE"
    print(
        f"degree {n}: dim {necklace_dimension(1, n)}, "
        f"{a.summand_count()} irreducible summands, formula vs oracle: {status}"
    )
