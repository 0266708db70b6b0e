"""Double Poisson brackets on the free algebra and the induced Lie brackets.

A bracket is determined by its values on generator pairs (a BracketRule).
On words it is evaluated by the closed form

    {{a, b}} = sum_{p,q} (b_<q . {{a_p, b_q}}' . a_>p) (x) (a_<p . {{a_p, b_q}}'' . b_>q)

which is the unique bilinear extension that is twisted antisymmetric and an
outer derivation in its second argument; the test suite checks it against
both axioms directly.  Collapsing with the multiplication map gives the
Loday bracket; projecting to cyclic words gives the necklace Lie bracket.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .elements import (
    FreeElement,
    Necklace,
    NecklaceElement,
    TensorElement,
    TripleTensor,
    _Combination,
    project_to_necklace,
)
from .words import Letter, Word, letters


class BracketRule:
    """Generator-level double bracket: a map (Letter, Letter) -> TensorElement.

    kind is one of "canonical_symplectic", "linear", "custom".  Construction
    validates twisted antisymmetry, rule(b, a) == -flip(rule(a, b)), over all
    stored pairs.
    """

    __slots__ = ("kind", "generators", "table", "names", "degree_shift")

    def __init__(self, kind, generators, table, names=None, degree_shift=None):
        self.kind = kind
        self.generators = tuple(generators)
        genset = set(self.generators)
        clean = {}
        for (a, b), t in table.items():
            if a not in genset or b not in genset:
                raise ValueError(f"rule mentions letter outside generator set: {a}, {b}")
            if t:
                clean[(a, b)] = t
        for (a, b), t in clean.items():
            mirrored = clean.get((b, a), TensorElement())
            if mirrored != -t.flip():
                raise ValueError(f"twisted antisymmetry fails on generators ({a}, {b})")
        self.table = clean
        self.names = dict(names) if names else None
        self.degree_shift = degree_shift

    @classmethod
    def canonical(cls, d: int) -> "BracketRule":
        """{{x_i, x_i*}} = 1 (x) 1, all other generator pairs zero."""
        gens = letters(d)
        table = {}
        for i in range(1, d + 1):
            xi, xis = Letter(i), Letter(i, True)
            table[(xi, xis)] = TensorElement.unit(1)
            table[(xis, xi)] = TensorElement.unit(-1)
        return cls("canonical_symplectic", gens, table, degree_shift=-2)

    @classmethod
    def custom(cls, generators, table) -> "BracketRule":
        return cls("custom", generators, table)

    def pair(self, a: Letter, b: Letter) -> TensorElement | None:
        return self.table.get((a, b))

    def check_letters(self, w: Word):
        for a in w:
            if a not in self.generators:
                raise ValueError(f"letter {a.name} is not a generator of this rule")

    def display_names(self) -> dict[Letter, str] | None:
        return self.names


def _as_free(e) -> FreeElement:
    if isinstance(e, FreeElement):
        return e
    if isinstance(e, Word):
        return FreeElement.of(e)
    if isinstance(e, str):
        from .elements import parse_element

        return parse_element(e)
    raise TypeError(f"expected a free-algebra element, got {type(e).__name__}")


def _double_bracket_words(rule: BracketRule, aw: Word, bw: Word) -> dict:
    out: dict = {}
    a = aw.letters
    b = bw.letters
    for p, ap in enumerate(a):
        for q, bq in enumerate(b):
            t = rule.pair(ap, bq)
            if t is None:
                continue
            for (u, v), c in t.terms.items():
                left = Word(b[:q] + u.letters + a[p + 1:])
                right = Word(a[:p] + v.letters + b[q + 1:])
                key = (left, right)
                s = out.get(key, 0) + c
                if s:
                    out[key] = s
                else:
                    del out[key]
    return out


def double_bracket(rule: BracketRule, a, b) -> TensorElement:
    """The double bracket {{a, b}} in A (x) A, extended bilinearly."""
    a, b = _as_free(a), _as_free(b)
    out: dict = {}
    for wa, ca in a.terms.items():
        rule.check_letters(wa)
        for wb, cb in b.terms.items():
            rule.check_letters(wb)
            c = ca * cb
            for key, v in _double_bracket_words(rule, wa, wb).items():
                s = out.get(key, 0) + c * v
                if s:
                    out[key] = s
                else:
                    del out[key]
    return TensorElement(out)


def loday_bracket(rule: BracketRule, a, b) -> FreeElement:
    """{a, b}_L = multiplication applied to {{a, b}}.

    A derivation in its second argument; {[a,b], c}_L == 0, so the value is
    unchanged when the first argument is rotated cyclically.
    """
    return double_bracket(rule, a, b).collapse()


def _as_necklace_element(e) -> NecklaceElement:
    if isinstance(e, NecklaceElement):
        return e
    if isinstance(e, Necklace):
        return NecklaceElement.of(e)
    if isinstance(e, FreeElement):
        return project_to_necklace(e)
    if isinstance(e, (Word, str)):
        return NecklaceElement.of(Necklace.of(e))
    raise TypeError(f"expected a necklace element, got {type(e).__name__}")


def necklace_bracket(rule: BracketRule, e1, e2) -> NecklaceElement:
    """The induced Lie bracket on cyclic words."""
    e1, e2 = _as_necklace_element(e1), _as_necklace_element(e2)
    out = NecklaceElement()
    for n1, c1 in e1.terms.items():
        for n2, c2 in e2.terms.items():
            collapsed = loday_bracket(
                rule, FreeElement.of(n1.representative), FreeElement.of(n2.representative)
            )
            out = out + (c1 * c2) * project_to_necklace(collapsed)
    return out


def _splice_sum(w1: Word, w2: Word) -> dict:
    """Cut-and-join: match each plain letter of w1 with its starred partner
    in w2, remove both, concatenate the opened necklaces."""
    out: dict = {}
    a, b = w1.letters, w2.letters
    for p, ap in enumerate(a):
        if ap.starred:
            continue
        for q, bq in enumerate(b):
            if bq.starred and bq.index == ap.index:
                joined = Word(a[p + 1:] + a[:p] + b[q + 1:] + b[:q])
                key = Necklace.of(joined)
                out[key] = out.get(key, 0) + 1
    return out


def kontsevich_bracket(w1, w2, d: int) -> NecklaceElement:
    """Combinatorial necklace bracket by splicing; no tensor algebra involved.

    Serves as an independent oracle for necklace_bracket with the canonical
    rule on 2d letters.
    """
    n1, n2 = Necklace.of(w1), Necklace.of(w2)
    for w in (n1.representative, n2.representative):
        if w.max_index() > d:
            raise ValueError(f"word {w!r} uses letters beyond x{d}")
    plus = _splice_sum(n1.representative, n2.representative)
    minus = _splice_sum(n2.representative, n1.representative)
    out = dict(plus)
    for k, v in minus.items():
        s = out.get(k, 0) - v
        if s:
            out[k] = s
        else:
            del out[k]
    return NecklaceElement(out)


def _left_extend(rule: BracketRule, a, tensor: TensorElement) -> TripleTensor:
    # {{a, u (x) v}} := {{a, u}} (x) v
    out: dict = {}
    for (u, v), c in tensor.terms.items():
        inner = double_bracket(rule, a, FreeElement.of(u))
        for (s, t), c2 in inner.terms.items():
            key = (s, t, v)
            acc = out.get(key, 0) + c * c2
            if acc:
                out[key] = acc
            else:
                del out[key]
    return TripleTensor(out)


def verify_double_jacobi(rule: BracketRule, a, b, c) -> TripleTensor:
    """Left-hand side of the double Jacobi identity; zero for a valid rule.

    {{a,{{b,c}}'}} (x) {{b,c}}'' + sigma.( same for (b,c,a) ) + sigma^{-1}.( same for (c,a,b) ).
    """
    a, b, c = _as_free(a), _as_free(b), _as_free(c)
    first = _left_extend(rule, a, double_bracket(rule, b, c))
    second = _left_extend(rule, b, double_bracket(rule, c, a)).shift()
    third = _left_extend(rule, c, double_bracket(rule, a, b)).shift_inv()
    return first + second + third


def verify_loday_properties(rule: BracketRule, a, b, c) -> tuple[bool, bool]:
    """(Loday identity holds, {[a,b], c}_L == 0) for the given triple."""
    a, b, c = _as_free(a), _as_free(b), _as_free(c)
    lhs = loday_bracket(rule, a, loday_bracket(rule, b, c))
    rhs = loday_bracket(rule, loday_bracket(rule, a, b), c) + loday_bracket(
        rule, b, loday_bracket(rule, a, c)
    )
    loday_ok = lhs == rhs
    comm_ok = loday_bracket(rule, a.commutator(b), c).is_zero
    return loday_ok, comm_ok


def center_element(d: int, n: int) -> NecklaceElement:
    """The cyclic class of (sum_i [x_i, x_i*])^n."""
    if n < 0:
        raise ValueError("n must be >= 0")
    c = FreeElement()
    for i in range(1, d + 1):
        xi = FreeElement.of(Word([Letter(i)]))
        xis = FreeElement.of(Word([Letter(i, True)]))
        c = c + xi.commutator(xis)
    return project_to_necklace(c**n)


@dataclass
class GradedBracketReport:
    """Outcome of a family of bracket checks; empty violations means pass."""

    degree_shift: int
    samples_checked: int
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def center_check(d: int, n: int, degree_bound: int) -> GradedBracketReport:
    """Bracket the n-th central element against every necklace of degree
    <= degree_bound; all brackets must vanish."""
    if degree_bound < 1:
        raise ValueError("degree_bound must be >= 1")
    from .counting import enumerate_necklaces

    rule = BracketRule.canonical(d)
    cn = center_element(d, n)
    report = GradedBracketReport(degree_shift=-2, samples_checked=0)
    for k in range(0, degree_bound + 1):
        for neck in enumerate_necklaces(d, k):
            got = necklace_bracket(rule, cn, NecklaceElement.of(neck))
            report.samples_checked += 1
            if not got.is_zero:
                report.violations.append((neck, got))
    return report


def check_grading(rule: BracketRule, pairs) -> GradedBracketReport:
    """Check deg {w1, w2} == deg w1 + deg w2 + shift on all given necklace
    pairs (only nonzero homogeneous outputs constrain anything)."""
    shift = rule.degree_shift
    if shift is None:
        raise ValueError("rule declares no degree shift")
    report = GradedBracketReport(degree_shift=shift, samples_checked=0)
    for n1, n2 in pairs:
        n1, n2 = Necklace.of(n1), Necklace.of(n2)
        got = necklace_bracket(rule, n1, n2)
        report.samples_checked += 1
        expected = n1.degree + n2.degree + shift
        for neck in got.terms:
            if neck.degree != expected:
                report.violations.append((n1, n2, neck.degree, expected))
    return report


class TraceElement(_Combination):
    """An element of S(necklaces) (x) A: finite map (necklace monomial, Word)
    -> Fraction, the necklace monomial being a sorted tuple of Necklaces."""

    @staticmethod
    def _key_sort(key):
        mono, w = key
        return (tuple(n.representative._sort_key() for n in mono), w._sort_key())

    @classmethod
    def of(cls, necklaces, w, c=1) -> "TraceElement":
        mono = tuple(sorted((Necklace.of(n) for n in necklaces)))
        if isinstance(w, str):
            from .words import parse_word

            w = parse_word(w)
        return cls({(mono, w): c})

    def __repr__(self):
        chunks = []
        for (mono, w), c in self:
            factors = "".join(f"{n!r}" for n in mono) or "1"
            chunks.append(f"{c}*{factors}(x){w!r}")
        return " + ".join(chunks) if chunks else "0"


def trace_algebra_derivation(rule: BracketRule, w, t: TraceElement) -> TraceElement:
    """Apply {w, -} to a trace-algebra element by the Leibniz rule.

    Necklace factors receive the necklace bracket, the word factor receives
    the Loday bracket.  Restricted to pure necklace monomials this is the
    Lie-Poisson bracket of the symmetric algebra on necklaces.
    """
    w = _as_necklace_element(w)
    out: dict = {}

    def add(key, c):
        s = out.get(key, 0) + c
        if s:
            out[key] = s
        else:
            del out[key]

    for (mono, u), c in t.terms.items():
        for j, nj in enumerate(mono):
            bracket = necklace_bracket(rule, w, NecklaceElement.of(nj))
            rest = mono[:j] + mono[j + 1:]
            for neck, c2 in bracket.terms.items():
                add((tuple(sorted(rest + (neck,))), u), c * c2)
        word_part = FreeElement()
        for nw, cw in w.terms.items():
            word_part = word_part + cw * loday_bracket(
                rule, FreeElement.of(nw.representative), FreeElement.of(u)
            )
        for uw, c2 in word_part.terms.items():
            add((mono, uw), c * c2)
    return TraceElement(out)
