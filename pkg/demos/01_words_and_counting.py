"""Cyclic words and how many of them there are.

Words live over the doubled alphabet x1, x1*, ..., xd, xd*.  A necklace is
a word up to cyclic rotation; we store the lexicographically smallest
rotation (under the order x1 < x1* < x2 < ...), so equality of necklaces
is equality of representatives.
"""

from necklaces import (
    Necklace,
    canonical_rotation,
    enumerate_necklaces,
    lyndon_count,
    necklace_count_by_enumeration,
    necklace_dimension,
    parse_word,
)

w = parse_word("x*xx*x")
print(f"word        : {w}")
print(f"canonical   : {canonical_rotation(w)}")
print(f"necklace    : {Necklace.of(w)}")
print()

# Degree-n necklaces form a basis of the degree-n slice of the cyclic-word
# space; their number has a closed gcd-sum formula.
print("degree:  2d=2 formula  enum   2d=4 formula  enum")
for n in range(0, 9):
    f1 = necklace_dimension(1, n)
    e1 = necklace_count_by_enumeration(1, n)
    f2 = necklace_dimension(2, n)
    e2 = necklace_count_by_enumeration(2, n)
    print(f"{n:>6}: {f1:>12} {e1:>5} {f2:>13} {e2:>5}")
print()

print("all 6 necklaces of degree 4 on x, x*:")
for neck in enumerate_necklaces(1, 4):
    print("  ", neck)
print()

# Aperiodic binary necklaces (Lyndon classes) refine the count: every
# necklace is a power of a unique aperiodic one.
print("aperiodic binary necklaces of length 6 with j marked beads:")
print("  j:", [lyndon_count(6, j) for j in range(7)])
total = sum(lyndon_count(ell, j) for ell in (1, 2, 3, 6) for j in range(ell + 1))
print(f"  summing over divisor lengths recovers {total} = dim of degree 6")
