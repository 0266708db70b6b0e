"""Linear double brackets built from associative structure constants.

For an associative multiplication x_i x_j = sum_k a_ij^k x_k the rule

    {{x_i, x_j}} = sum_k a_ij^k x_k (x) 1  -  a_ji^k 1 (x) x_k

is a double bracket of degree -1, and the degree-1 part of the induced
necklace Lie algebra is the commutator Lie algebra of the multiplication.
Non-associative tables are rejected at construction, since they do not give
a Jacobi-consistent bracket.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .brackets import BracketRule, necklace_bracket
from .elements import Necklace, NecklaceElement, TensorElement
from .report import CheckReport
from .words import EMPTY_WORD, Letter, Word, unstarred


class AssociativityError(ValueError):
    def __init__(self, i, j, k, s):
        self.indices = (i, j, k, s)
        super().__init__(
            f"structure constants are not associative: "
            f"(x{i} x{j}) x{k} != x{i} (x{j} x{k}) in the x{s} coordinate"
        )


class StructureConstants:
    """Multiplication table a(i,j,k) of an associative algebra, 1-based."""

    __slots__ = ("dim", "a")

    def __init__(self, dim: int, a: dict):
        if dim < 1:
            raise ValueError("dim must be >= 1")
        clean = {}
        for (i, j, k), v in a.items():
            if not (1 <= i <= dim and 1 <= j <= dim and 1 <= k <= dim):
                raise ValueError(f"index out of range in entry {(i, j, k)}")
            v = Fraction(v)
            if v:
                clean[(i, j, k)] = v
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "a", clean)
        self._validate()

    def __setattr__(self, name, value):
        raise AttributeError("StructureConstants is immutable")

    def coefficient(self, i, j, k) -> Fraction:
        return self.a.get((i, j, k), Fraction(0))

    def _validate(self):
        n = self.dim
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                for k in range(1, n + 1):
                    for s in range(1, n + 1):
                        left = sum(
                            self.coefficient(i, j, t) * self.coefficient(t, k, s)
                            for t in range(1, n + 1)
                        )
                        right = sum(
                            self.coefficient(j, k, t) * self.coefficient(i, t, s)
                            for t in range(1, n + 1)
                        )
                        if left != right:
                            raise AssociativityError(i, j, k, s)

    def commutator(self, i: int, j: int) -> dict[int, Fraction]:
        """[x_i, x_j] as coefficients on the basis."""
        out = {}
        for k in range(1, self.dim + 1):
            c = self.coefficient(i, j, k) - self.coefficient(j, i, k)
            if c:
                out[k] = c
        return out

    @classmethod
    def from_json(cls, text: str) -> "StructureConstants":
        """{"dim": n, "a": [[i, j, k, "p/q"], ...]}; omitted entries are 0."""
        data = json.loads(text)
        table = {}
        for i, j, k, v in data.get("a", []):
            table[(int(i), int(j), int(k))] = Fraction(v)
        return cls(int(data["dim"]), table)

    def to_json(self) -> str:
        entries = [
            [i, j, k, str(v)] for (i, j, k), v in sorted(self.a.items())
        ]
        return json.dumps({"dim": self.dim, "a": entries}, sort_keys=True)


def linear_rule(sc: StructureConstants, names=None) -> BracketRule:
    """The degree -1 double bracket attached to an associative table."""
    gens = unstarred(sc.dim)
    table = {}
    for i in range(1, sc.dim + 1):
        for j in range(1, sc.dim + 1):
            terms = {}
            for k in range(1, sc.dim + 1):
                xk = Word([Letter(k)])
                forward = sc.coefficient(i, j, k)
                if forward:
                    terms[(xk, EMPTY_WORD)] = terms.get((xk, EMPTY_WORD), 0) + forward
                backward = sc.coefficient(j, i, k)
                if backward:
                    terms[(EMPTY_WORD, xk)] = terms.get((EMPTY_WORD, xk), 0) - backward
            t = TensorElement(terms)
            if t:
                table[(Letter(i), Letter(j))] = t
    return BracketRule("linear", gens, table, names=names, degree_shift=-1)


def matrix_unit_index(n: int, i: int, j: int) -> int:
    """Generator index of the matrix unit e_ij inside the n x n table."""
    return (i - 1) * n + j


def gl_constants(n: int) -> StructureConstants:
    """Structure constants of the full n x n matrix algebra: e_ij e_kl = delta_jk e_il."""
    table = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            for k in range(1, n + 1):
                for l in range(1, n + 1):
                    if j == k:
                        table[
                            (
                                matrix_unit_index(n, i, j),
                                matrix_unit_index(n, k, l),
                                matrix_unit_index(n, i, l),
                            )
                        ] = 1
    return StructureConstants(n * n, table)


def matrix_unit_names(n: int) -> dict[Letter, str]:
    return {
        Letter(matrix_unit_index(n, i, j)): f"e{i}{j}"
        for i in range(1, n + 1)
        for j in range(1, n + 1)
    }


def ngl(n: int) -> BracketRule:
    """The linear rule of the matrix algebra on n^2 beads e_ij:
    {{e_ij, e_kl}} = delta_jk e_il (x) 1 - delta_il 1 (x) e_kj."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return linear_rule(gl_constants(n), names=matrix_unit_names(n))


def check_degree1_commutator(sc: StructureConstants, rule: BracketRule | None = None) -> CheckReport:
    """Degree-1 necklace brackets must equal commutators of the multiplication."""
    if rule is None:
        rule = linear_rule(sc)
    report = CheckReport(f"degree-1 commutator correspondence, dim={sc.dim}")
    for i in range(1, sc.dim + 1):
        for j in range(1, sc.dim + 1):
            ni = Necklace.of(Word([Letter(i)]))
            nj = Necklace.of(Word([Letter(j)]))
            got = necklace_bracket(rule, NecklaceElement.of(ni), NecklaceElement.of(nj))
            expected = NecklaceElement(
                {
                    Necklace.of(Word([Letter(k)])): c
                    for k, c in sc.commutator(i, j).items()
                }
            )
            report.add(f"{{x{i}, x{j}}}", got == expected)
    return report
