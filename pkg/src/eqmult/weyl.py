"""Weyl group elements, reduced words, Bruhat order and coset enumeration.

An element is stored as the integer matrix of its action on the root
lattice in the simple-root basis (column j = image of the j-th simple
root) together with a canonical reduced word.  The matrix representation
is faithful for every generalized Cartan matrix, so equality is matrix
equality and no word-problem solver is needed.  The canonical word is
produced by greedily stripping the smallest right descent, which makes
all reported words reproducible.

Word syntax used by the command line: comma-separated 1-based indices,
e.g. "1,2,1"; the empty string is the identity.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, List, Set, Tuple

from .cartan import GCM, NonFiniteTypeError, is_finite_type

Word = Tuple[int, ...]


def _identity_matrix(n: int):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def _times_gen(gcm: GCM, matrix, i: int):
    """Matrix of w * s_i, as column operations col_j -= a[i][j] * col_i."""
    a = gcm.matrix[i - 1]
    k = i - 1
    return tuple(
        tuple(row[j] - a[j] * row[k] for j in range(gcm.rank)) for row in matrix
    )


def _column(matrix, j: int):
    return tuple(row[j] for row in matrix)


def _matrix_descents(gcm: GCM, matrix) -> List[int]:
    # i is a right descent iff w(alpha_i) is a negative root
    out = []
    for j in range(gcm.rank):
        col = _column(matrix, j)
        if all(c <= 0 for c in col):
            out.append(j + 1)
    return out


def _canonical_word(gcm: GCM, matrix) -> Word:
    letters = []
    m = matrix
    ident = _identity_matrix(gcm.rank)
    while m != ident:
        descents = _matrix_descents(gcm, m)
        if not descents:
            raise ValueError("matrix is not a Weyl group element")
        i = descents[0]
        m = _times_gen(gcm, m, i)
        letters.append(i)
    return tuple(reversed(letters))


class WeylElement:
    """Group element with its matrix and a certified reduced word.

    >>> from .cartan import builtin_gcm
    >>> g = builtin_gcm("A", 2)
    >>> w0 = element_from_word(g, (1, 2, 1))
    >>> w0 == element_from_word(g, (2, 1, 2)) and w0.length == 3
    True
    """

    __slots__ = ("gcm", "matrix", "word")

    def __init__(self, gcm: GCM, matrix, word: Word = None):
        self.gcm = gcm
        self.matrix = matrix
        self.word = _canonical_word(gcm, matrix) if word is None else word

    @property
    def length(self) -> int:
        return len(self.word)

    @property
    def is_identity(self) -> bool:
        return not self.word

    def apply(self, v) -> Tuple[int, ...]:
        """Image of a root-lattice vector (simple-root coordinates)."""
        return tuple(
            sum(row[j] * v[j] for j in range(self.gcm.rank) if v[j]) for row in self.matrix
        )

    def apply_extended(self, v) -> Tuple[int, ...]:
        """Action on vectors with one trailing scaling coordinate, fixed."""
        n = self.gcm.rank
        return self.apply(v[:n]) + tuple(v[n:])

    def times_generator(self, i: int) -> "WeylElement":
        return WeylElement(self.gcm, _times_gen(self.gcm, self.matrix, i))

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        if self.gcm != other.gcm:
            raise ValueError("elements of different groups")
        n = self.gcm.rank
        a, b = self.matrix, other.matrix
        prod = tuple(
            tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
            for i in range(n)
        )
        return WeylElement(self.gcm, prod)

    def right_descents(self) -> frozenset:
        return frozenset(_matrix_descents(self.gcm, self.matrix))

    def __eq__(self, other):
        return (
            isinstance(other, WeylElement)
            and self.gcm == other.gcm
            and self.matrix == other.matrix
        )

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return "WeylElement(%s)" % (format_word(self.word) or "e")


def identity(gcm: GCM) -> WeylElement:
    return WeylElement(gcm, _identity_matrix(gcm.rank), ())


def generator(gcm: GCM, i: int) -> WeylElement:
    gcm._check_index(i)
    return WeylElement(gcm, _times_gen(gcm, _identity_matrix(gcm.rank), i), (i,))


def element_from_word(gcm: GCM, word: Iterable[int]) -> WeylElement:
    """Product of simple reflections; the stored word is re-certified.

    A non-reduced input simply yields the element it multiplies out to,
    with the canonical reduced word attached, so the resulting length can
    be smaller than the input length.
    """
    m = _identity_matrix(gcm.rank)
    for i in word:
        gcm._check_index(i)
        m = _times_gen(gcm, m, i)
    return WeylElement(gcm, m)


def parse_word(text: str) -> Word:
    """Parse "1,2,1" (empty string = identity)."""
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError("bad word syntax %r (expected e.g. \"1,2,1\")" % text) from None


def format_word(word: Word) -> str:
    return ",".join(str(i) for i in word)


def canonical_reduced_word(e: WeylElement) -> Word:
    return e.word


def all_reduced_words(e: WeylElement, cap: int):
    """All reduced words of e, as (words, truncated) with a hard cap.

    Backtracking over right descents; deterministic (descents are taken
    in increasing order).
    """
    if cap <= 0:
        raise ValueError("cap must be positive")
    words: List[Word] = []

    def rec(matrix, suffix):
        if len(words) > cap:
            return
        descents = _matrix_descents(e.gcm, matrix)
        if not descents:
            words.append(tuple(suffix[::-1]))
            return
        for i in descents:
            rec(_times_gen(e.gcm, matrix, i), suffix + [i])

    rec(e.matrix, [])
    truncated = len(words) > cap
    return words[:cap], truncated


def bruhat_leq(y: WeylElement, w: WeylElement) -> bool:
    """Bruhat order test by the descent recursion.

    With s a right descent of w:  y <= w  iff  min(y, ys) <= ws, where min
    picks the shorter of the two.  Valid for any generalized Cartan
    matrix; results are memoized.
    """
    if y.gcm != w.gcm:
        raise ValueError("elements of different groups")
    return _bruhat_leq_cached(y, w)


@lru_cache(maxsize=None)
def _bruhat_leq_cached(y: WeylElement, w: WeylElement) -> bool:
    if y.length > w.length:
        return False
    if w.is_identity:
        return y.is_identity
    if y.is_identity:
        return True
    s = min(w.right_descents())
    ws = w.times_generator(s)
    ys = y.times_generator(s)
    smaller = ys if ys.length < y.length else y
    return _bruhat_leq_cached(smaller, ws)


def lower_interval(w: WeylElement) -> Set[WeylElement]:
    """{ y : y <= w }, from subword products of a reduced word of w."""
    word = w.word
    gcm = w.gcm
    seen = {_identity_matrix(gcm.rank)}
    frontier = list(seen)
    for i in word:
        extra = []
        for m in frontier:
            mi = _times_gen(gcm, m, i)
            if mi not in seen:
                seen.add(mi)
                extra.append(mi)
        frontier.extend(extra)
    return {WeylElement(gcm, m) for m in seen}


def bruhat_interval(x: WeylElement, z: WeylElement) -> List[WeylElement]:
    """[x, z], sorted by (length, word); requires x <= z."""
    if not bruhat_leq(x, z):
        raise ValueError("interval is empty: %r is not below %r" % (x, z))
    members = [y for y in lower_interval(z) if bruhat_leq(x, y)]
    return sorted(members, key=lambda y: (y.length, y.word))


def enumerate_ball(gcm: GCM, max_length: int) -> List[WeylElement]:
    """All elements of length <= max_length, for any GCM (BFS)."""
    if max_length < 0:
        raise ValueError("max_length must be >= 0")
    ident = identity(gcm)
    out = [ident]
    seen = {ident.matrix}
    frontier = [ident]
    for _ in range(max_length):
        nxt = []
        for w in frontier:
            for i in range(1, gcm.rank + 1):
                if i in w.right_descents():
                    continue
                v = w.times_generator(i)
                if v.matrix not in seen:
                    seen.add(v.matrix)
                    nxt.append(v)
        out.extend(nxt)
        frontier = nxt
        if not frontier:
            break
    return sorted(out, key=lambda w: (w.length, w.word))


def minimal_coset_reps(gcm: GCM, parabolic: Iterable[int]) -> List[WeylElement]:
    """Minimal-length representatives of W / W_I for finite type.

    These are exactly the elements with no right descent in I.  They are
    generated by upward left multiplication from the identity: for a
    minimal representative u and a simple reflection s, the product su is
    either a longer minimal representative or lies in the same coset.
    """
    if not is_finite_type(gcm):
        raise NonFiniteTypeError("coset enumeration needs a finite Weyl group")
    parabolic = frozenset(parabolic)
    for i in parabolic:
        gcm._check_index(i)
    gens = {i: generator(gcm, i) for i in range(1, gcm.rank + 1)}
    start = identity(gcm)
    reps = {start.matrix: start}
    frontier = [start]
    while frontier:
        nxt = []
        for u in frontier:
            for i, s in gens.items():
                v = s * u
                if v.length != u.length + 1 or v.matrix in reps:
                    continue
                if v.right_descents() & parabolic:
                    continue
                reps[v.matrix] = v
                nxt.append(v)
        frontier = nxt
    return sorted(reps.values(), key=lambda w: (w.length, w.word))
