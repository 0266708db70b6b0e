"""Sparse multivariate polynomials over exact rationals.

Monomials are sorted tuples of (variable name, exponent) pairs; coefficients
are fractions.Fraction.  Printing uses graded lexicographic order so output
is deterministic.  This is deliberately plain dictionary arithmetic: the
matrices and identities in this package stay small, and exactness matters
more than speed.
"""

from __future__ import annotations

from fractions import Fraction

Monomial = tuple[tuple[str, int], ...]

_ONE: Monomial = ()


def _coeff(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"coefficient must be exact (int/Fraction), got {type(c).__name__}")


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    exps = dict(a)
    for name, e in b:
        exps[name] = exps.get(name, 0) + e
    return tuple(sorted(exps.items()))


def _mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def _mono_key(m: Monomial):
    # graded lexicographic: degree first, then names/exponents
    return (-_mono_degree(m), tuple((name, -e) for name, e in m))


class Polynomial:
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean: dict[Monomial, Fraction] = {}
        if terms:
            for mono, c in terms.items():
                c = _coeff(c)
                if c:
                    clean[mono] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls()

    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls({_ONE: c})

    @classmethod
    def variable(cls, name: str, power: int = 1) -> "Polynomial":
        if power < 0:
            raise ValueError("negative powers are not supported")
        if power == 0:
            return cls.constant(1)
        return cls({((name, power),): 1})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other)
        return isinstance(other, Polynomial) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                del out[m]
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _coeff(other)
            if not c:
                return Polynomial()
            return Polynomial({m: c * v for m, v in self.terms.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        out: dict[Monomial, Fraction] = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                m = _mono_mul(ma, mb)
                s = out.get(m, 0) + ca * cb
                if s:
                    out[m] = s
                else:
                    del out[m]
        return Polynomial(out)

    __rmul__ = __mul__

    def __truediv__(self, c):
        return self * (Fraction(1) / _coeff(c))

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not supported")
        result = Polynomial.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def total_degree(self) -> int:
        return max((_mono_degree(m) for m in self.terms), default=0)

    def variables(self) -> set[str]:
        return {name for m in self.terms for name, _ in m}

    def coefficient(self, mono: Monomial) -> Fraction:
        return self.terms.get(tuple(sorted(mono)), Fraction(0))

    def constant_term(self) -> Fraction:
        return self.terms.get(_ONE, Fraction(0))

    def diff(self, name: str) -> "Polynomial":
        out: dict[Monomial, Fraction] = {}
        for m, c in self.terms.items():
            exps = dict(m)
            e = exps.get(name, 0)
            if not e:
                continue
            if e == 1:
                del exps[name]
            else:
                exps[name] = e - 1
            mono = tuple(sorted(exps.items()))
            s = out.get(mono, 0) + c * e
            if s:
                out[mono] = s
            else:
                del out[mono]
        return Polynomial(out)

    def substitute(self, mapping: dict[str, "Polynomial | Fraction | int"]) -> "Polynomial":
        """Simultaneous substitution of variables by polynomials or scalars."""
        out = Polynomial.zero()
        for m, c in self.terms.items():
            term = Polynomial.constant(c)
            for name, e in m:
                val = mapping.get(name)
                if val is None:
                    val = Polynomial.variable(name)
                elif not isinstance(val, Polynomial):
                    val = Polynomial.constant(val)
                term = term * val**e
            out = out + term
        return out

    @classmethod
    def parse(cls, text: str, names) -> "Polynomial":
        """Parse an expression in the given variable names, as printed by
        __repr__: terms like "-2*tr(x)^2*tr(xx*)" joined by + and -.

        Variable names are matched longest-first, so names containing '*'
        or '^' (e.g. "tr((x*)^2)") are unambiguous.
        """
        names = sorted(names, key=len, reverse=True)
        pos, n = 0, len(text)

        def skip_ws():
            nonlocal pos
            while pos < n and text[pos].isspace():
                pos += 1

        def parse_factor():
            nonlocal pos
            for name in names:
                if text.startswith(name, pos):
                    pos += len(name)
                    exp = 1
                    if pos < n and text[pos] == "^":
                        pos += 1
                        start = pos
                        while pos < n and text[pos].isdigit():
                            pos += 1
                        exp = int(text[start:pos])
                    return cls.variable(name, exp)
            start = pos
            while pos < n and (text[pos].isdigit() or text[pos] == "/"):
                pos += 1
            if pos == start:
                raise ValueError(f"cannot parse polynomial at {text[start:]!r}")
            return cls.constant(Fraction(text[start:pos]))

        out = cls.zero()
        skip_ws()
        if not text.strip() or text.strip() == "0":
            return out
        while pos < n:
            sign = 1
            skip_ws()
            while pos < n and text[pos] in "+-":
                if text[pos] == "-":
                    sign = -sign
                pos += 1
                skip_ws()
            term = cls.constant(sign)
            term = term * parse_factor()
            skip_ws()
            while pos < n and text[pos] == "*":
                pos += 1
                skip_ws()
                term = term * parse_factor()
                skip_ws()
            out = out + term
        return out

    def __repr__(self):
        if not self.terms:
            return "0"
        chunks = []
        for m in sorted(self.terms, key=_mono_key):
            c = self.terms[m]
            body = "*".join(
                name if e == 1 else f"{name}^{e}" for name, e in m
            )
            if not body:
                chunk = str(c)
            elif c == 1:
                chunk = body
            elif c == -1:
                chunk = f"-{body}"
            else:
                chunk = f"{c}*{body}"
            chunks.append(chunk)
        text = chunks[0]
        for chunk in chunks[1:]:
            text += f" - {chunk[1:]}" if chunk.startswith("-") else f" + {chunk}"
        return text


def symplectic_poisson(f: Polynomial, g: Polynomial, pairs) -> Polynomial:
    """{f, g} = sum_i (df/dq_i dg/dp_i - df/dp_i dg/dq_i) for (q_i, p_i) pairs."""
    out = Polynomial.zero()
    for q, p in pairs:
        out = out + f.diff(q) * g.diff(p) - f.diff(p) * g.diff(q)
    return out


class PolyMatrix:
    """A square matrix of polynomials; also used with constant entries."""

    __slots__ = ("size", "entries")

    def __init__(self, entries):
        rows = [list(r) for r in entries]
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("matrix must be square")
        norm = []
        for r in rows:
            norm.append(
                [e if isinstance(e, Polynomial) else Polynomial.constant(e) for e in r]
            )
        object.__setattr__(self, "size", n)
        object.__setattr__(self, "entries", norm)

    def __setattr__(self, name, value):
        raise AttributeError("PolyMatrix is immutable")

    @classmethod
    def identity(cls, n: int) -> "PolyMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def generic(cls, n: int, prefix: str) -> "PolyMatrix":
        """n x n matrix of fresh indeterminates named prefix_rc."""
        return cls(
            [
                [Polynomial.variable(f"{prefix}_{r + 1}{c + 1}") for c in range(n)]
                for r in range(n)
            ]
        )

    def __eq__(self, other):
        return (
            isinstance(other, PolyMatrix)
            and self.size == other.size
            and self.entries == other.entries
        )

    def __add__(self, other):
        self._check(other)
        return PolyMatrix(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ]
        )

    def __sub__(self, other):
        self._check(other)
        return PolyMatrix(
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ]
        )

    def _check(self, other):
        if not isinstance(other, PolyMatrix) or other.size != self.size:
            raise ValueError("matrix size mismatch")

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Polynomial)):
            return PolyMatrix([[e * other for e in row] for row in self.entries])
        self._check(other)
        n = self.size
        cols = list(zip(*other.entries))
        return PolyMatrix(
            [
                [
                    sum((a * b for a, b in zip(row, col)), Polynomial.zero())
                    for col in cols
                ]
                for row in self.entries
            ]
        )

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative matrix powers are not supported")
        result = PolyMatrix.identity(self.size)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def trace(self) -> Polynomial:
        return sum(
            (self.entries[i][i] for i in range(self.size)), Polynomial.zero()
        )

    def __repr__(self):
        rows = ["[" + ", ".join(map(repr, r)) + "]" for r in self.entries]
        return "[" + "; ".join(rows) + "]"
