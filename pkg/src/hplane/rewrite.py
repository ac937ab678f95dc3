"""Generic normal-ordering engine for the quadratic algebras used here.

Words are tuples of unit letters (symbol, copy, exponent) with exponent +-1.
An Algebra supplies a total position order on (symbol, copy) and a local
rewrite for any adjacent out-of-order pair; the engine reduces words to
canonical normal form and exposes exact linear algebra over Scalar.

Two reduction strategies (leftmost / rightmost pair selection) are kept
side by side; their agreement on random words is the confluence gate for
every hardcoded rule table.
"""

from __future__ import annotations

import sys
from typing import Iterable, Sequence

from .scalars import Scalar, ONE

Letter = tuple  # (symbol: str, copy: int, exp: int)
Word = tuple    # tuple[Letter, ...]

sys.setrecursionlimit(1_000_000)


class Algebra:
    """Rule table + letter ordering for one normal-ordering problem."""

    name = "abstract"
    ncopies = 1

    def key(self, symbol: str, copy: int):
        """Total order position of a letter; equal keys = same letter."""
        raise NotImplementedError

    def invertible(self, symbol: str) -> bool:
        return False

    def swap(self, a: Letter, b: Letter):
        """Rewrite for the out-of-order adjacent segment ``a b``.

        Returns None when the letters simply commute, else a list of
        (coefficient, replacement-word) pairs.  Replacement words use unit
        letters and need not be normal-ordered; the engine recurses.
        """
        raise NotImplementedError

    # engine state ------------------------------------------------------

    def __init__(self):
        self._nf_cache = {"left": {}, "right": {}}
        self._mul_cache = {}

    # -- word reduction --------------------------------------------------

    def _reducible_positions(self, word: Word):
        for i in range(len(word) - 1):
            a, b = word[i], word[i + 1]
            ka, kb = self.key(a[0], a[1]), self.key(b[0], b[1])
            if ka > kb:
                yield i, "swap"
            elif ka == kb and a[2] + b[2] == 0:
                yield i, "cancel"

    def normal_form(self, word: Sequence[Letter], strategy: str = "left") -> dict:
        """Reduce a word; returns {canonical monomial: Scalar}."""
        return self._nf(tuple(word), strategy)

    def _nf(self, word: Word, strategy: str) -> dict:
        cache = self._nf_cache[strategy]
        hit = cache.get(word)
        if hit is not None:
            return hit
        pos = None
        if strategy == "left":
            for p in self._reducible_positions(word):
                pos = p
                break
        else:
            for p in self._reducible_positions(word):
                pos = p
        if pos is None:
            result = {self._canonical(word): ONE}
        else:
            i, kind = pos
            pre, post = word[:i], word[i + 2:]
            result = {}
            if kind == "cancel":
                _accumulate(result, ONE, self._nf(pre + post, strategy))
            else:
                repl = self.swap(word[i], word[i + 1])
                if repl is None:
                    sub = self._nf(pre + (word[i + 1], word[i]) + post, strategy)
                    _accumulate(result, ONE, sub)
                else:
                    for coeff, seg in repl:
                        sub = self._nf(pre + tuple(seg) + post, strategy)
                        _accumulate(result, coeff, sub)
            result = {m: c for m, c in result.items() if c}
        cache[word] = result
        return result

    def _canonical(self, word: Word) -> Word:
        """Merge adjacent equal letters of an ordered word."""
        out: list[list] = []
        for sym, copy, exp in word:
            if out and out[-1][0] == sym and out[-1][1] == copy:
                out[-1][2] += exp
            else:
                out.append([sym, copy, exp])
        return tuple((s, c, e) for s, c, e in out if e)

    # -- element layer -----------------------------------------------------

    def element(self, data=None) -> "Element":
        return Element(self, data or {})

    def from_word(self, word: Iterable[Letter], coeff: Scalar = ONE) -> "Element":
        units = tuple(expand_units(word))
        data = {}
        for mono, c in self._nf(units, "left").items():
            data[mono] = coeff * c
        return Element(self, {m: c for m, c in data.items() if c})

    def one(self) -> "Element":
        return Element(self, {(): ONE})

    def gen(self, symbol: str, copy: int = 0, exp: int = 1) -> "Element":
        return self.from_word([(symbol, copy, exp)])

    def mul_monomials(self, ma: Word, mb: Word) -> dict:
        hit = self._mul_cache.get((ma, mb))
        if hit is None:
            word = tuple(expand_units(ma)) + tuple(expand_units(mb))
            hit = self._nf(word, "left")
            self._mul_cache[(ma, mb)] = hit
        return hit


def expand_units(word: Iterable[Letter]):
    """Spell out integer exponents as runs of unit letters."""
    for sym, copy, exp in word:
        step = 1 if exp > 0 else -1
        for _ in range(abs(exp)):
            yield (sym, copy, step)


def _accumulate(target: dict, coeff: Scalar, source: dict):
    for mono, c in source.items():
        prev = target.get(mono)
        target[mono] = coeff * c if prev is None else prev + coeff * c


class Element:
    """Finite Scalar-linear combination of canonical monomials."""

    __slots__ = ("algebra", "data")

    def __init__(self, algebra: Algebra, data: dict):
        self.algebra = algebra
        self.data = data

    def __add__(self, other: "Element") -> "Element":
        data = dict(self.data)
        for m, c in other.data.items():
            prev = data.get(m)
            s = c if prev is None else prev + c
            if s:
                data[m] = s
            elif prev is not None:
                del data[m]
        return Element(self.algebra, data)

    def __neg__(self):
        return Element(self.algebra, {m: -c for m, c in self.data.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, coeff: Scalar) -> "Element":
        if not coeff:
            return Element(self.algebra, {})
        return Element(self.algebra, {m: coeff * c for m, c in self.data.items()})

    def __mul__(self, other):
        if isinstance(other, Scalar):
            return self.scale(other)
        if not isinstance(other, Element):
            return NotImplemented
        out: dict = {}
        alg = self.algebra
        for ma, ca in self.data.items():
            for mb, cb in other.data.items():
                _accumulate(out, ca * cb, alg.mul_monomials(ma, mb))
        return Element(alg, {m: c for m, c in out.items() if c})

    def __rmul__(self, coeff):
        if isinstance(coeff, Scalar):
            return self.scale(coeff)
        return NotImplemented

    def __pow__(self, n: int) -> "Element":
        out = self.algebra.one()
        for _ in range(n):
            out = out * self
        return out

    def is_zero(self) -> bool:
        return not self.data

    def __eq__(self, other):
        return (isinstance(other, Element) and self.algebra is other.algebra
                and self.data == other.data)

    def __hash__(self):
        return hash(tuple(sorted(self.data.items())))

    def commutator(self, other: "Element") -> "Element":
        return self * other - other * self

    # -- rendering -------------------------------------------------------

    def _letter_str(self, sym: str, copy: int, exp: int) -> str:
        name = sym if self.algebra.ncopies == 1 else f"{sym}{copy}"
        return name if exp == 1 else f"{name}^{exp}"

    def render(self) -> str:
        if not self.data:
            return "0"
        parts = []
        for mono in sorted(self.data, key=_mono_sort_key):
            coeff = self.data[mono]
            body = "*".join(self._letter_str(*let) for let in mono)
            cs = coeff.render_compact()
            if cs == "1" and body:
                parts.append(body)
            else:
                parts.append(f"({cs})*{body}" if body else f"({cs})")
        return " + ".join(parts)

    __str__ = render

    def __repr__(self):
        return f"<{self.algebra.name}: {self.render()}>"


def _mono_sort_key(mono: Word):
    return (len(mono), mono)


def random_word(rng, symbols, max_len: int, ncopies: int = 1,
                invertible=frozenset()) -> Word:
    """Uniform random word of unit letters, for confluence sampling."""
    n = rng.randint(1, max_len)
    word = []
    for _ in range(n):
        sym = rng.choice(symbols)
        copy = rng.randrange(ncopies)
        exp = rng.choice((1, -1)) if sym in invertible else 1
        word.append((sym, copy, exp))
    return tuple(word)
