from fractions import Fraction

import pytest

from necklaces.brackets import BracketRule, center_element, necklace_bracket
from necklaces.counting import enumerate_necklaces
from necklaces.elements import FreeElement, Necklace, NecklaceElement
from necklaces.multipoly import Polynomial, PolyMatrix, symplectic_poisson
from necklaces.sampling import random_word, rng
from necklaces.traces import (
    GENERATORS,
    abelianize,
    casimir_image,
    casimir_image_as_displayed,
    casimir_polynomial,
    center_witness,
    classify_point,
    express_in_trace_generators,
    generator_polynomials,
    generic_matrices,
    induced_bracket,
    stated_casimir_expression,
    table2,
    trace_of,
    verify_cayley_hamilton,
    witness_matrices,
)
from necklaces.words import letters

T1, T2, T3, T4, T5 = (Polynomial.variable(g) for g in GENERATORS)
Z = Polynomial.zero()

# bracket table of the five generators; rows bracket columns
EXPECTED_TABLE2 = [
    [Z, 2 + Z, Z, 2 * T2, T1],
    [-2 + Z, Z, -2 * T1, Z, -T2],
    [Z, 2 * T1, Z, 4 * T5, 2 * T3],
    [-2 * T2, Z, -4 * T5, Z, -2 * T4],
    [-T1, T2, -2 * T3, 2 * T4, Z],
]


def test_generic_matrices_shape():
    mats = generic_matrices(1, 2)
    assert len(mats) == 2 and all(m.size == 2 for m in mats)
    variables = set()
    for m in mats:
        for row in m.entries:
            for e in row:
                variables |= e.variables()
    assert len(variables) == 8
    mats = generic_matrices(2, 2)
    assert len(mats) == 4
    variables = set()
    for m in mats:
        for row in m.entries:
            for e in row:
                variables |= e.variables()
    assert len(variables) == 16


def test_trace_of_basics():
    mats = generic_matrices(1, 2)
    x = mats[0]
    assert trace_of("x", mats) == x.entries[0][0] + x.entries[1][1]
    assert trace_of("1", mats) == 2
    assert trace_of(NecklaceElement.of("x", 3), mats) == 3 * x.trace()


def test_trace_of_1x1_is_commutative_evaluation():
    # size-1 matrices: the trace of a word is the product of its entries
    mats = generic_matrices(1, 1)
    a = Polynomial.variable("x1_11")
    b = Polynomial.variable("x1s_11")
    assert trace_of("1", mats) == 1
    assert trace_of("xx*", mats) == a * b
    assert trace_of("xx*xx*", mats) == a**2 * b**2
    # cyclically distinct words with equal content collapse at size 1
    assert trace_of("xxx*x*", mats) == trace_of("xx*xx*", mats)


def test_trace_rotation_invariance_and_commutators():
    from necklaces.traces import word_matrix

    mats = generic_matrices(1, 2)
    r = rng(30)
    for _ in range(25):
        w = random_word(r, letters(1), 1, 5)
        base = trace_of(Necklace.of(w), mats)
        for k in range(len(w)):
            # evaluating the plain word product, not the canonical form
            assert word_matrix(w.rotated(k), mats).trace() == base
    for _ in range(15):
        a = FreeElement.of(random_word(r, letters(1), 1, 3))
        b = FreeElement.of(random_word(r, letters(1), 1, 3))
        assert trace_of(a.commutator(b), mats).is_zero


def test_induced_bracket_table_cells():
    got = induced_bracket("x", "x*", 2)
    assert got.reduced and got.expression == 2 + Z
    got = induced_bracket("xx", "x*x*", 2)
    assert got.reduced and got.expression == 4 * T5
    got = induced_bracket("xx*", "xx", 2)
    assert got.reduced and got.expression == -2 * T3


def test_induced_bracket_unreduced_flag():
    got = induced_bracket("xxx*", "xx*x*", 2)
    if not got.reduced:
        assert got.expression is None and not got.raw.is_zero
    else:  # a degree-4 output would have had to stay in degree <= 2
        pytest.fail("degree-4 bracket output unexpectedly reduced")


def test_table2_matches_expected_and_antisymmetric():
    t = table2()
    assert t.generators == GENERATORS
    for i in range(5):
        for j in range(5):
            assert t.entry(i, j) == EXPECTED_TABLE2[i][j], (i, j)
    assert t.is_antisymmetric()


def test_table2_audited_cell():
    # the ((x*)^2, x) cell is pinned by antisymmetry to -2 tr(x*); the
    # variant reading -2 tr((x*)^2) cannot occur in an antisymmetric table
    t = table2()
    assert t.entry(3, 0) == -t.entry(0, 3)
    assert t.entry(3, 0) == -2 * T2
    assert t.entry(3, 0) != -2 * T4


def test_abelianization_is_symplectic_poisson_at_n1():
    rule = BracketRule.canonical(1)
    pairs = [("x1", "x1*")]
    necks = [n for k in range(7) for n in enumerate_necklaces(1, k)]
    r = rng(31)
    for _ in range(60):
        n1, n2 = r.choice(necks), r.choice(necks)
        lhs = abelianize(necklace_bracket(rule, NecklaceElement.of(n1), NecklaceElement.of(n2)))
        rhs = symplectic_poisson(abelianize(n1), abelianize(n2), pairs)
        assert lhs == rhs
        got = induced_bracket(n1, n2, 1)
        assert got.reduced and got.expression == rhs


def test_express_in_trace_generators_roundtrip():
    # every necklace of degree <= 4 rewrites exactly; checked by substitution
    mats = generic_matrices(1, 2)
    gens = generator_polynomials()
    for k in range(0, 5):
        for neck in enumerate_necklaces(1, k):
            expr = express_in_trace_generators(neck)
            assert expr.substitute(gens) == trace_of(neck, mats)


def test_express_rejects_high_degree():
    with pytest.raises(ValueError):
        express_in_trace_generators(Necklace.of("xxx*xx*"), max_degree=4)


def test_trace_map_is_poisson_morphism():
    # tr{w1, w2} = {tr w1, tr w2} with the right side extended from the
    # generator table by Leibniz
    from necklaces.poisson import trace_generator_algebra

    alg = trace_generator_algebra()
    rule = BracketRule.canonical(1)
    mats = generic_matrices(1, 2)
    gens = generator_polynomials()
    necks = [n for k in range(1, 5) for n in enumerate_necklaces(1, k)]
    rewritten = {n: express_in_trace_generators(n) for n in necks}
    r = rng(32)
    sampled = {(r.choice(necks), r.choice(necks)) for _ in range(40)}
    # include every generator pair
    gens5 = ["x", "x*", "xx", "x*x*", "xx*"]
    sampled |= {(Necklace.of(a), Necklace.of(b)) for a in gens5 for b in gens5}
    for n1, n2 in sampled:
        lhs = trace_of(
            necklace_bracket(rule, NecklaceElement.of(n1), NecklaceElement.of(n2)), mats
        )
        rhs = alg.bracket(rewritten[n1], rewritten[n2]).substitute(gens)
        assert lhs == rhs, (n1, n2)


def test_cayley_hamilton_report():
    report = verify_cayley_hamilton(2)
    assert report.ok
    labels = [e.label for e in report.entries]
    assert "tr([x,x*]^4) = 2^(1-2) tr([x,x*]^2)^2" in labels
    assert "tr([x,x*]^3) = 0" in labels and "tr([x,x*]^5) = 0" in labels
    with pytest.raises(ValueError):
        verify_cayley_hamilton(0)


def test_casimir_image_exact_relations():
    report = casimir_image()
    assert report.ok, "\n".join(str(e) for e in report.failures())


def test_casimir_image_displayed_variants_fail_by_factor():
    # the variants without the -2 factor are exactly the audited defect
    report = casimir_image_as_displayed()
    assert not report.ok
    assert all(not e.ok for e in report.entries)
    # certify the factor: stated expression == -1/2 tr([x,x*]^2)
    gens = generator_polynomials()
    mats = generic_matrices(1, 2)
    c2 = trace_of(center_element(1, 2), mats)
    assert stated_casimir_expression().substitute(gens) * (-2) == c2
    assert stated_casimir_expression() == -casimir_polynomial()


def test_center_witness_values():
    for lam in (Fraction(1), Fraction(2), Fraction(-3), Fraction(1, 2)):
        for n in range(1, 5):
            expected = 2 * lam**n + (-2) ** n * lam**n
            assert center_witness(n, lam) == expected
    assert center_witness(2, 1) == 6
    assert center_witness(3, 1) == -6
    assert center_witness(1, 1) == 0


def test_witness_commutator_is_diagonal():
    x, xs = witness_matrices(Fraction(5))
    m = x * xs - xs * x
    expected = PolyMatrix(
        [[Fraction(5), 0, 0], [0, Fraction(-10), 0], [0, 0, Fraction(5)]]
    )
    assert m == expected


def test_classify_point_examples():
    got = classify_point((0, 0, 0, 0, 0))
    assert got.leaf == "S_0''" and got.luna_type == "[(1,2)]"
    got = classify_point((0, 0, 1, 1, 0))
    assert got.leaf == "S_lambda" and got.casimir == 4 and got.luna_type == "[(2,1)]"
    got = classify_point((0, 0, 1, 0, 0))
    assert got.leaf == "S_0'" and got.luna_type == "[(1,1);(1,1)]"


def test_classify_point_exact_vs_float():
    exact = classify_point((Fraction(2), Fraction(-1), Fraction(1), Fraction(1, 4), Fraction(1)))
    approx = classify_point((2.0, -1.0, 1.0, 0.25, 1.0))
    assert exact.leaf == approx.leaf and exact.luna_type == approx.luna_type
    # tiny float noise inside the tolerance keeps the degenerate class
    noisy = classify_point((0.0, 0.0, 1e-12, 0.0, 1e-12))
    assert noisy.leaf == "S_0''"
    wide = classify_point((0.0, 0.0, 1e-12, 0.0, 1e-12), tol=1e-15)
    assert wide.leaf != "S_0''"


def test_classify_consistency_rules():
    # S_0'' always lies inside the Casimir zero set
    got = classify_point((3, 5, Fraction(9, 4), Fraction(-25, 4), Fraction(-15, 2)))
    assert got.leaf == "S_0''"
    assert got.casimir == 0


def test_classify_complex_coordinates():
    got = classify_point((0j, 0j, 1 + 0j, 1 + 0j, 0j))
    assert got.leaf == "S_lambda" and abs(got.casimir - 4) < 1e-12
    got = classify_point((0j, 0j, 1j, 1j, 0j))
    assert got.leaf == "S_lambda" and abs(got.casimir + 4) < 1e-12
