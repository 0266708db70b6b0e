"""Exact linear combinations: free-algebra elements, necklaces, tensors.

All coefficients are fractions.Fraction; zero coefficients are pruned
eagerly, so the empty combination is the canonical zero.  Every value is
immutable after construction and all operations are pure.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .words import EMPTY_WORD, Letter, Word, canonical_rotation, format_word, parse_word


def _coeff(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"coefficient must be exact (int/Fraction), got {type(c).__name__}")


class _Combination:
    """Shared machinery for finite maps basis-key -> Fraction."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for k, v in terms.items():
                v = _coeff(v)
                if v:
                    clean[k] = v
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    def __bool__(self):
        return bool(self.terms)

    @property
    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        return type(self) is type(other) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        out = dict(self.terms)
        for k, v in other.terms.items():
            s = out.get(k, 0) + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return type(self)(out)

    def __sub__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return type(self)({k: -v for k, v in self.terms.items()})

    def scaled(self, c):
        c = _coeff(c)
        if not c:
            return type(self)()
        return type(self)({k: c * v for k, v in self.terms.items()})

    def __rmul__(self, c):
        if isinstance(c, (int, Fraction)):
            return self.scaled(c)
        return NotImplemented

    def __truediv__(self, c):
        return self.scaled(Fraction(1, 1) / _coeff(c))

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(sorted(self.terms.items(), key=lambda kv: self._key_sort(kv[0])))

    @staticmethod
    def _key_sort(key):
        return key

    def coefficient(self, key):
        return self.terms.get(key, Fraction(0))


class FreeElement(_Combination):
    """An element of the free algebra: finite map Word -> Fraction."""

    @staticmethod
    def _key_sort(key):
        return key._sort_key()

    @classmethod
    def of(cls, w: Word, c=1) -> "FreeElement":
        return cls({w: c})

    @classmethod
    def unit(cls, c=1) -> "FreeElement":
        return cls({EMPTY_WORD: c})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scaled(other)
        if not isinstance(other, FreeElement):
            return NotImplemented
        out = {}
        for wa, ca in self.terms.items():
            for wb, cb in other.terms.items():
                k = wa * wb
                s = out.get(k, 0) + ca * cb
                if s:
                    out[k] = s
                else:
                    del out[k]
        return FreeElement(out)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not defined")
        result = FreeElement.unit()
        for _ in range(n):
            result = result * self
        return result

    def commutator(self, other: "FreeElement") -> "FreeElement":
        return self * other - other * self

    def max_degree(self) -> int:
        return max((len(w) for w in self.terms), default=0)

    def __repr__(self):
        return format_element(self)


class Necklace:
    """A cyclic word, stored as its canonical (minimal) rotation."""

    __slots__ = ("representative",)

    def __init__(self, representative: Word):
        if representative != canonical_rotation(representative):
            raise ValueError(f"{representative!r} is not a canonical rotation")
        object.__setattr__(self, "representative", representative)

    def __setattr__(self, name, value):
        raise AttributeError("Necklace is immutable")

    @classmethod
    def of(cls, w) -> "Necklace":
        if isinstance(w, Necklace):
            return w
        if isinstance(w, str):
            w = parse_word(w)
        return cls(canonical_rotation(w))

    @property
    def degree(self) -> int:
        return len(self.representative)

    def __hash__(self):
        return hash(self.representative) ^ 0x9E3779B9

    def __eq__(self, other):
        return isinstance(other, Necklace) and self.representative == other.representative

    def __lt__(self, other):
        return self.representative._sort_key() < other.representative._sort_key()

    def __repr__(self):
        return f"({format_word(self.representative)})"


UNIT_NECKLACE = Necklace(EMPTY_WORD)


class NecklaceElement(_Combination):
    """An element of the necklace space: finite map Necklace -> Fraction."""

    @staticmethod
    def _key_sort(key):
        return key.representative._sort_key()

    @classmethod
    def of(cls, n, c=1) -> "NecklaceElement":
        return cls({Necklace.of(n): c})

    @classmethod
    def unit(cls, c=1) -> "NecklaceElement":
        return cls({UNIT_NECKLACE: c})

    def degrees(self):
        return sorted({n.degree for n in self.terms})

    def is_homogeneous(self):
        return len(self.degrees()) <= 1

    def __repr__(self):
        return format_element(self)


def project_to_necklace(e: FreeElement) -> NecklaceElement:
    """Linear projection onto cyclic-equivalence classes.

    Kills every commutator: project_to_necklace(ab - ba) == 0.
    """
    out = {}
    for w, c in e.terms.items():
        k = Necklace.of(w)
        s = out.get(k, 0) + c
        if s:
            out[k] = s
        else:
            del out[k]
    return NecklaceElement(out)


class TensorElement(_Combination):
    """An element of A (x) A: finite map (Word, Word) -> Fraction."""

    @staticmethod
    def _key_sort(key):
        return (key[0]._sort_key(), key[1]._sort_key())

    @classmethod
    def of(cls, left: Word, right: Word, c=1) -> "TensorElement":
        return cls({(left, right): c})

    @classmethod
    def unit(cls, c=1) -> "TensorElement":
        return cls({(EMPTY_WORD, EMPTY_WORD): c})

    def flip(self) -> "TensorElement":
        """The swap (a (x) b) -> (b (x) a); an exact involution."""
        return TensorElement({(v, u): c for (u, v), c in self.terms.items()})

    def outer(self, left: Word, right: Word) -> "TensorElement":
        """Outer action a.(u (x) v).c = (a u) (x) (v c)."""
        return TensorElement(
            {(left * u, v * right): c for (u, v), c in self.terms.items()}
        )

    def inner(self, left: Word, right: Word) -> "TensorElement":
        """Inner action a o (u (x) v) o c = (u c) (x) (a v)."""
        return TensorElement(
            {(u * right, left * v): c for (u, v), c in self.terms.items()}
        )

    def collapse(self) -> FreeElement:
        """Multiplication map: u (x) v -> uv."""
        out = {}
        for (u, v), c in self.terms.items():
            k = u * v
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                del out[k]
        return FreeElement(out)

    def __repr__(self):
        items = [
            f"{c}*{format_word(u)}(x){format_word(v)}"
            for (u, v), c in self
        ]
        return " + ".join(items) if items else "0"


class TripleTensor(_Combination):
    """An element of A (x) A (x) A, with the cyclic-shift actions."""

    @staticmethod
    def _key_sort(key):
        return tuple(w._sort_key() for w in key)

    def shift(self) -> "TripleTensor":
        """sigma: a (x) b (x) c -> c (x) a (x) b."""
        return TripleTensor({(c, a, b): v for (a, b, c), v in self.terms.items()})

    def shift_inv(self) -> "TripleTensor":
        """sigma^{-1}: a (x) b (x) c -> b (x) c (x) a."""
        return TripleTensor({(b, c, a): v for (a, b, c), v in self.terms.items()})

    def __repr__(self):
        items = [
            f"{v}*{format_word(a)}(x){format_word(b)}(x){format_word(c)}"
            for (a, b, c), v in self
        ]
        return " + ".join(items) if items else "0"


# --- element grammar -------------------------------------------------------

_RATIONAL = re.compile(r"[+-]?\d+(?:/\d+)?")


def parse_element(text: str, alphabet: dict[str, Letter] | None = None) -> FreeElement:
    """Parse "c1*w1 + c2*w2" with exact rational coefficients "p/q"."""
    text = text.strip()
    if not text or text == "0":
        return FreeElement()
    # split into signed terms at top level
    terms: list[str] = []
    buf = ""
    for ch in text:
        if ch in "+-" and buf.strip() and not buf.rstrip().endswith(("+", "-")):
            terms.append(buf)
            buf = ch
        else:
            buf += ch
    terms.append(buf)
    out = FreeElement()
    for term in terms:
        term = term.strip()
        sign = 1
        while term and term[0] in "+-":
            if term[0] == "-":
                sign = -sign
            term = term[1:].strip()
        m = _RATIONAL.match(term)
        coeff = Fraction(1)
        if m and (m.end() == len(term) or not term[m.start()].isalpha()):
            coeff = Fraction(m.group(0))
            term = term[m.end():].strip()
            if term.startswith("*"):
                term = term[1:].strip()
        w = parse_word(term, alphabet) if term else EMPTY_WORD
        out = out + FreeElement.of(w, sign * coeff)
    return out


def _format_terms(pairs, names=None) -> str:
    chunks = []
    for key, c in pairs:
        w = key.representative if isinstance(key, Necklace) else key
        body = format_word(w, names)
        if c == 1:
            chunk = body
        elif c == -1:
            chunk = f"-{body}"
        else:
            chunk = f"{c}*{body}"
        chunks.append(chunk)
    if not chunks:
        return "0"
    text = chunks[0]
    for chunk in chunks[1:]:
        text += f" - {chunk[1:]}" if chunk.startswith("-") else f" + {chunk}"
    return text


def format_element(e, names: dict[Letter, str] | None = None) -> str:
    """Render a FreeElement or NecklaceElement in the textual grammar."""
    return _format_terms(list(e), names)
