"""Equivariant multiplicities of Schubert varieties at torus fixed points.

The multiplicity of the Schubert variety indexed by w at the fixed point
y is computed by pushing the smooth-point formula forward along the
iterated P^1-bundle resolution attached to a reduced word of w.  The
fixed points of that resolution are the subword masks of the word; each
is a smooth point whose tangent characters are read off from the partial
products, so its contribution is the reciprocal of the product of those
characters.  The resolution is birational for a reduced word, hence the
plain sum over masks:

    e_y(X_w)  =  sum over masks with product y  of  1 / (prod of weights).

The reduced sum has the shape f / (chi_1 ... chi_m); the wrapped report
exposes the numerator f together with constancy and integrality flags,
which is everything the smoothness criteria consume.  Signs are folded
into the numerator (denominator factors are kept positive-primitive) and
the criteria only read |f|, so orientation conventions drop out.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Tuple

from .cartan import GCM
from .polyfrac import FactoredRational, LinearForm, MultiPoly
from .weyl import WeylElement, Word, element_from_word, _column, _identity_matrix, _times_gen

# 2^24 subword masks is the desk-scale ceiling
MASK_SWEEP_CAP = 24


class CapExceededError(ValueError):
    """Raised when a requested sweep would exceed the mask cap."""


def _check_word(gcm: GCM, word) -> Word:
    word = tuple(word)
    for i in word:
        gcm._check_index(i)
    if len(word) > MASK_SWEEP_CAP:
        raise CapExceededError(
            "word of length %d exceeds the sweep cap %d" % (len(word), MASK_SWEEP_CAP)
        )
    return word


def _require_reduced(gcm: GCM, word: Word) -> WeylElement:
    w = element_from_word(gcm, word)
    if w.length != len(word):
        raise ValueError("word %r is not reduced (length %d)" % (word, w.length))
    return w


def _sweep(gcm: GCM, word: Word) -> Iterator[Tuple[tuple, Tuple[int, ...], tuple]]:
    """Yield (product matrix, mask, tangent weights) over all 2^N masks.

    At position j the weight is the image of the j-th letter's simple
    root under the partial product so far, with a minus sign when the
    letter is skipped: +sigma_{j-1}(alpha_{i_j}) if taken, else
    -sigma_{j-1}(alpha_{i_j}).  The weight vector is a column read of the
    partial product matrix, so no matrix-vector products are needed.
    """
    n = len(word)
    weights: List[tuple] = [None] * n
    mask: List[int] = [0] * n

    def rec(j: int, matrix):
        if j == n:
            yield matrix, tuple(mask), tuple(weights)
            return
        col = _column(matrix, word[j] - 1)
        mask[j] = 0
        weights[j] = tuple(-c for c in col)
        yield from rec(j + 1, matrix)
        mask[j] = 1
        weights[j] = col
        yield from rec(j + 1, _times_gen(gcm, matrix, word[j]))

    yield from rec(0, _identity_matrix(gcm.rank))


def bs_fixed_points(word, y: WeylElement) -> List[Tuple[int, ...]]:
    """All subword masks of ``word`` whose selected letters multiply to y."""
    gcm = y.gcm
    word = _check_word(gcm, word)
    target = y.matrix
    return [mask for matrix, mask, _ in _sweep(gcm, word) if matrix == target]


def bs_tangent_weights(gcm: GCM, word, mask) -> List[tuple]:
    """Tangent characters of the resolution at one subword fixed point."""
    word = _check_word(gcm, word)
    mask = tuple(mask)
    if len(mask) != len(word):
        raise ValueError("mask length %d != word length %d" % (len(mask), len(word)))
    matrix = _identity_matrix(gcm.rank)
    out = []
    for j, i in enumerate(word):
        col = _column(matrix, i - 1)
        if mask[j]:
            out.append(col)
            matrix = _times_gen(gcm, matrix, i)
        else:
            out.append(tuple(-c for c in col))
    return out


def equivariant_multiplicity(word, y: WeylElement) -> FactoredRational:
    """Reduced multiplicity of the Schubert variety of ``word`` at y.

    ``word`` must be reduced; the result does not depend on which reduced
    word of w is chosen, and it is zero exactly when y is not below w in
    the Bruhat order.
    """
    gcm = y.gcm
    word = _check_word(gcm, word)
    _require_reduced(gcm, word)
    target = y.matrix
    total = FactoredRational.zero(gcm.rank)
    for matrix, _, weights in _sweep(gcm, word):
        if matrix == target:
            total = total + FactoredRational.from_weights(weights, gcm.rank)
    return total


@dataclass(frozen=True)
class NumeratorReport:
    """Numerator data of one reduced multiplicity fraction."""

    y: WeylElement
    w: WeylElement
    frac: FactoredRational

    @property
    def is_zero(self) -> bool:
        return self.frac.is_zero

    @property
    def numerator(self) -> MultiPoly:
        """Sign-normalized numerator polynomial f."""
        return self.frac.num

    @property
    def scalar(self) -> Fraction:
        return self.frac.scalar

    @property
    def den_factors(self) -> Tuple[LinearForm, ...]:
        return self.frac.den

    @property
    def is_constant(self) -> bool:
        return not self.is_zero and self.frac.num.is_constant

    @property
    def is_integral(self) -> bool:
        """Whether no scalar denominator survives full reduction."""
        return not self.is_zero and self.frac.scalar.denominator == 1

    @property
    def abs_f(self) -> Optional[int]:
        """|f| when the numerator is a constant integer, else None."""
        if self.is_constant and self.is_integral:
            return int(self.frac.scalar) * self.frac.num.constant_value()
        return None

    def marker(self):
        """abs_f, or the string "nonconstant" / "nonintegral" / "zero"."""
        if self.is_zero:
            return "zero"
        if not self.is_constant:
            return "nonconstant"
        if not self.is_integral:
            return "nonintegral"
        return self.abs_f


def numerator(word, y: WeylElement) -> NumeratorReport:
    """Numerator report for a single point (see ``multiplicity_table``)."""
    gcm = y.gcm
    word = _check_word(gcm, word)
    w = _require_reduced(gcm, word)
    return NumeratorReport(y, w, equivariant_multiplicity(word, y))


def multiplicity_table(
    w: WeylElement, word: Optional[Word] = None
) -> Dict[WeylElement, NumeratorReport]:
    """Reports for every point of the lower interval [e, w].

    A single sweep over all 2^l(w) masks of a reduced word is bucketed by
    mask product; the bucket keys are exactly the elements y <= w, so the
    interval comes out of the same pass.
    """
    gcm = w.gcm
    if word is None:
        word = w.word
    else:
        word = _check_word(gcm, word)
        if element_from_word(gcm, word) != w:
            raise ValueError("word %r is not a word for %r" % (word, w))
    _check_word(gcm, word)
    _require_reduced(gcm, word)
    buckets: Dict[tuple, FactoredRational] = {}
    for matrix, _, weights in _sweep(gcm, word):
        term = FactoredRational.from_weights(weights, gcm.rank)
        prev = buckets.get(matrix)
        buckets[matrix] = term if prev is None else prev + term
    table = {}
    for matrix, frac in buckets.items():
        y = WeylElement(gcm, matrix)
        table[y] = NumeratorReport(y, w, frac)
    return table
