"""The free algebra on the letters x, y with exact rational coefficients.

Words are plain strings over the alphabet ``{"x", "y"}``; the empty string is
the unit word and renders as ``1``.  ``HElem`` is a finite linear combination
of words.  The y-initial subspace (every word empty or starting with ``y``)
has the z-basis ``z_k = y x^(k-1)``, indexed by tuples of positive integers;
``word_from_index`` and ``z_decompose`` convert between the two encodings.

All values are immutable by convention: every operation returns fresh
objects and never mutates its inputs.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, Mapping

from .errors import BadIndex, NotInH1
from .indices import Tuple_, check_index
from .rationals import Rat, rat_str

Word = str

X = "x"
Y = "y"


def word_from_index(k: Tuple_) -> Word:
    """The z-word z_{k_1} ... z_{k_r}; the empty index gives the unit word."""
    check_index(k)
    return "".join("y" + "x" * (e - 1) for e in k)


def in_h1(w: Word) -> bool:
    return not w or w[0] == Y


def z_decompose(w: Word) -> Tuple_:
    """Inverse of word_from_index; raises NotInH1 on an x-initial word."""
    if not w:
        return ()
    if w[0] != Y:
        raise NotInH1(f"word {w!r} does not start with y")
    out = []
    run = 0
    for c in w:
        if c == Y:
            if run:
                out.append(run)
            run = 1
        elif c == X:
            run += 1
        else:
            raise BadIndex(f"letter {c!r} is not in the alphabet")
    out.append(run)
    return tuple(out)


def _grlex(w: Word) -> tuple[int, Word]:
    return (len(w), w)


class HElem:
    """Finite formal sum of words with nonzero exact rational coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Word, object] | Iterable[tuple[Word, object]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        data: dict[Word, object] = {}
        for w, c in items:
            c = Rat(c)
            if c:
                acc = data.get(w)
                acc = c if acc is None else acc + c
                if acc:
                    data[w] = acc
                elif w in data:
                    del data[w]
        self._terms = data

    @classmethod
    def zero(cls) -> "HElem":
        return cls()

    @classmethod
    def unit(cls) -> "HElem":
        return cls({"": 1})

    @classmethod
    def word(cls, w: Word, coeff=1) -> "HElem":
        return cls({w: coeff})

    @classmethod
    def from_index(cls, k: Tuple_) -> "HElem":
        return cls.word(word_from_index(k))

    def terms(self) -> list[tuple[Word, object]]:
        """Term list in graded lexicographic word order (x < y)."""
        return sorted(self._terms.items(), key=lambda t: _grlex(t[0]))

    def coeff(self, w: Word):
        return self._terms.get(w, Rat(0))

    def words(self) -> Iterator[Word]:
        return iter(self._terms)

    @property
    def is_h1(self) -> bool:
        return all(in_h1(w) for w in self._terms)

    def z_terms(self) -> list[tuple[Tuple_, object]]:
        """Terms as (index, coefficient); raises NotInH1 off the subspace."""
        return [(z_decompose(w), c) for w, c in self.terms()]

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, HElem) and self._terms == other._terms

    def __add__(self, other: "HElem") -> "HElem":
        if not isinstance(other, HElem):
            return NotImplemented
        data = dict(self._terms)
        for w, c in other._terms.items():
            acc = data.get(w)
            acc = c if acc is None else acc + c
            if acc:
                data[w] = acc
            elif w in data:
                del data[w]
        out = HElem.__new__(HElem)
        out._terms = data
        return out

    def __neg__(self) -> "HElem":
        out = HElem.__new__(HElem)
        out._terms = {w: -c for w, c in self._terms.items()}
        return out

    def __sub__(self, other: "HElem") -> "HElem":
        return self + (-other)

    def __mul__(self, scalar) -> "HElem":
        s = Rat(scalar)
        out = HElem.__new__(HElem)
        out._terms = {w: c * s for w, c in self._terms.items()} if s else {}
        return out

    __rmul__ = __mul__

    def concat(self, other: "HElem") -> "HElem":
        """Bilinear concatenation product."""
        data: dict[Word, object] = {}
        for wa, ca in self._terms.items():
            for wb, cb in other._terms.items():
                w = wa + wb
                c = ca * cb
                acc = data.get(w)
                acc = c if acc is None else acc + c
                if acc:
                    data[w] = acc
                elif w in data:
                    del data[w]
        out = HElem.__new__(HElem)
        out._terms = data
        return out

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for w, c in self.terms():
            cs = rat_str(c)
            if not w:
                parts.append(cs)
            elif cs == "1":
                parts.append(w)
            elif cs == "-1":
                parts.append("-" + w)
            else:
                parts.append(f"{cs}*{w}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"HElem({str(self)})"

    def to_json(self) -> dict:
        return {
            "terms": [
                {"coeff": rat_str(c), "word": w if w else "1"}
                for w, c in self.terms()
            ]
        }


@lru_cache(maxsize=None)
def _shuffle_words(u: Word, v: Word) -> dict:
    if u > v:
        u, v = v, u
    if not u:
        return {v: 1}
    if not v:
        return {u: 1}
    out: dict[Word, int] = {}
    for w, c in _shuffle_words(u[:-1], v).items():
        w = w + u[-1]
        out[w] = out.get(w, 0) + c
    for w, c in _shuffle_words(u, v[:-1]).items():
        w = w + v[-1]
        out[w] = out.get(w, 0) + c
    return out


def shuffle(a: HElem, b: HElem) -> HElem:
    """Shuffle product, extended bilinearly; the empty word is the unit."""
    data: dict[Word, object] = {}
    for wa, ca in a._terms.items():
        for wb, cb in b._terms.items():
            c = ca * cb
            for w, mult in _shuffle_words(wa, wb).items():
                acc = data.get(w)
                term = c * mult
                acc = term if acc is None else acc + term
                if acc:
                    data[w] = acc
                elif w in data:
                    del data[w]
    out = HElem.__new__(HElem)
    out._terms = data
    return out


def shuffle_all(elems: Iterable[HElem]) -> HElem:
    out = HElem.unit()
    for e in elems:
        out = shuffle(out, e)
    return out


@lru_cache(maxsize=None)
def _harmonic_indices(k: Tuple_, l: Tuple_) -> dict:
    if k > l:
        k, l = l, k
    if not k:
        return {l: 1}
    if not l:
        return {k: 1}
    out: dict[Tuple_, int] = {}
    for idx, c in _harmonic_indices(k[1:], l).items():
        idx = (k[0],) + idx
        out[idx] = out.get(idx, 0) + c
    for idx, c in _harmonic_indices(k, l[1:]).items():
        idx = (l[0],) + idx
        out[idx] = out.get(idx, 0) + c
    for idx, c in _harmonic_indices(k[1:], l[1:]).items():
        idx = (k[0] + l[0],) + idx
        out[idx] = out.get(idx, 0) + c
    return out


def harmonic(a: HElem, b: HElem) -> HElem:
    """Quasi-shuffle product on the z-basis; both operands must be y-initial."""
    data: dict[Word, object] = {}
    for ka, ca in a.z_terms():
        for kb, cb in b.z_terms():
            c = ca * cb
            for idx, mult in _harmonic_indices(ka, kb).items():
                w = word_from_index(idx)
                acc = data.get(w)
                term = c * mult
                acc = term if acc is None else acc + term
                if acc:
                    data[w] = acc
                elif w in data:
                    del data[w]
    out = HElem.__new__(HElem)
    out._terms = data
    return out


def right_mul_x_pow(a: HElem, k: int) -> HElem:
    """Concatenate x^k on the right of every word; k = 0 is the identity."""
    if k < 0:
        raise BadIndex("x-power must be non-negative")
    if k == 0:
        return a
    return a.concat(HElem.word("x" * k))
