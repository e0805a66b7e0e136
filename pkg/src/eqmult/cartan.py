"""Generalized Cartan matrices and finite-type root combinatorics.

A :class:`GCM` packages an integer Cartan matrix with a primitive
symmetrizer; root-lattice vectors are plain integer tuples written in the
simple-root basis.  Finite-type data (positive roots, root lengths, the
highest root) is derived by reflection closure; non-finite matrices such
as the affine rank-2 one are accepted, but the finite-type operations
reject them with :class:`NonFiniteTypeError`.

Simple-root indices are 1-based throughout the public interface, matching
the word syntax "1,2,1".
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Tuple

Coords = Tuple[int, ...]

# classical positive-root counts, used as sanity anchors in the test suite
POSITIVE_ROOT_COUNTS = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": {6: 36, 7: 63, 8: 120},
    "F": {4: 24},
    "G": {2: 6},
}

_ROOT_CLOSURE_CAP = 100_000


class NonFiniteTypeError(ValueError):
    """Raised when a finite-type operation meets a non-finite matrix."""


class NonSymmetrizableError(ValueError):
    """Raised when no positive integer symmetrizer exists."""


@dataclass(frozen=True)
class GCM:
    """Generalized Cartan matrix with a primitive positive symmetrizer."""

    matrix: Tuple[Tuple[int, ...], ...]
    symmetrizer: Tuple[int, ...]
    label: Optional[str] = field(default=None, compare=False)

    def __post_init__(self):
        a = self.matrix
        n = len(a)
        if n == 0 or any(len(row) != n for row in a):
            raise ValueError("matrix must be square and nonempty")
        for i in range(n):
            if a[i][i] != 2:
                raise ValueError("diagonal entries must equal 2")
            for j in range(n):
                if i != j:
                    if a[i][j] > 0:
                        raise ValueError("off-diagonal entries must be <= 0")
                    if (a[i][j] == 0) != (a[j][i] == 0):
                        raise ValueError("zero pattern must be symmetric")
        d = self.symmetrizer
        if len(d) != n or any(x <= 0 for x in d):
            raise ValueError("symmetrizer must be positive of length rank")
        g = 0
        for x in d:
            g = math.gcd(g, x)
        if g != 1:
            raise ValueError("symmetrizer must be primitive")
        for i in range(n):
            for j in range(n):
                if d[i] * a[i][j] != d[j] * a[j][i]:
                    raise NonSymmetrizableError(
                        "d[%d]*a[%d][%d] != d[%d]*a[%d][%d]" % (i, i, j, j, j, i)
                    )

    @property
    def rank(self) -> int:
        return len(self.matrix)

    def bilinear(self, u: Sequence[int], v: Sequence[int]) -> int:
        """Symmetrized pairing (u, v) = sum d[i]*a[i][j]*u[i]*v[j]."""
        a, d = self.matrix, self.symmetrizer
        return sum(
            d[i] * a[i][j] * u[i] * v[j]
            for i in range(self.rank)
            for j in range(self.rank)
            if u[i] and v[j]
        )

    def norm(self, v: Sequence[int]) -> int:
        return self.bilinear(v, v)

    def simple_root(self, i: int) -> Coords:
        self._check_index(i)
        return tuple(1 if j == i - 1 else 0 for j in range(self.rank))

    def _check_index(self, i: int) -> None:
        if not 1 <= i <= self.rank:
            raise IndexError("simple root index %d out of range 1..%d" % (i, self.rank))

    def __repr__(self):
        return "GCM(%s, rank=%d)" % (self.label or "custom", self.rank)


def _symmetrizer_for(matrix) -> Tuple[int, ...]:
    """Primitive positive symmetrizer of a GCM, by propagation along edges."""
    n = len(matrix)
    d: list = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if i == j or matrix[i][j] == 0:
                    continue
                ratio = Fraction(matrix[i][j], matrix[j][i])
                if d[j] is None:
                    d[j] = d[i] * ratio
                    stack.append(j)
                elif d[j] != d[i] * ratio:
                    raise NonSymmetrizableError("inconsistent cycle in Cartan matrix")
    scale = math.lcm(*[x.denominator for x in d])
    ints = [int(x * scale) for x in d]
    g = 0
    for x in ints:
        g = math.gcd(g, x)
    ints = [x // g for x in ints]
    for i in range(n):
        for j in range(n):
            if ints[i] * matrix[i][j] != ints[j] * matrix[j][i]:
                raise NonSymmetrizableError("matrix is not symmetrizable")
    return tuple(ints)


def make_gcm(matrix, label: Optional[str] = None) -> GCM:
    """GCM from a raw integer matrix; the symmetrizer is computed."""
    matrix = tuple(tuple(int(x) for x in row) for row in matrix)
    return GCM(matrix, _symmetrizer_for(matrix), label)


def _chain(n: int) -> list:
    m = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i in range(n - 1):
        m[i][i + 1] = m[i + 1][i] = -1
    return m


def builtin_gcm(family: str, n: Optional[int] = None) -> GCM:
    """Standard Cartan data for the builtin families.

    Families: A (n>=1), B (n>=2), C (n>=1), D (n>=3), E (n in 6..8),
    F (n=4), G (n=2) and "affine-A1".  Orientation conventions: in B_n the
    last simple root is short, in C_n it is long, and G_2 has the first
    simple root short (a12 = -3, symmetrizer (1, 3)).
    """
    family = family.strip()
    if family.lower() in ("affine-a1", "affine_a1"):
        return GCM(((2, -2), (-2, 2)), (1, 1), "affine-A1")
    fam = family.upper()
    if n is None:
        raise ValueError("rank parameter required for family %s" % family)
    label = "%s%d" % (fam, n)
    if fam == "A":
        if n < 1:
            raise ValueError("A_n needs n >= 1")
        return GCM(tuple(map(tuple, _chain(n))), (1,) * n, label)
    if fam == "B":
        if n < 2:
            raise ValueError("B_n needs n >= 2")
        m = _chain(n)
        m[n - 1][n - 2] = -2
        return GCM(tuple(map(tuple, m)), (2,) * (n - 1) + (1,), label)
    if fam == "C":
        if n < 1:
            raise ValueError("C_n needs n >= 1")
        if n == 1:
            return GCM(((2,),), (1,), label)
        m = _chain(n)
        m[n - 2][n - 1] = -2
        return GCM(tuple(map(tuple, m)), (1,) * (n - 1) + (2,), label)
    if fam == "D":
        if n < 3:
            raise ValueError("D_n needs n >= 3")
        m = _chain(n - 1)
        for row in m:
            row.append(0)
        m.append([0] * (n - 1) + [2])
        m[n - 3][n - 1] = m[n - 1][n - 3] = -1
        return GCM(tuple(map(tuple, m)), (1,) * n, label)
    if fam == "E":
        if n not in (6, 7, 8):
            raise ValueError("E_n needs n in 6..8")
        # chain 1-3-4-5-...-n with node 2 attached to node 4
        m = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
        edges = [(1, 3), (3, 4), (2, 4)] + [(k, k + 1) for k in range(4, n)]
        for i, j in edges:
            m[i - 1][j - 1] = m[j - 1][i - 1] = -1
        return GCM(tuple(map(tuple, m)), (1,) * n, label)
    if fam == "F":
        if n != 4:
            raise ValueError("F_n needs n = 4")
        m = _chain(4)
        m[1][2] = -1
        m[2][1] = -2
        return GCM(tuple(map(tuple, m)), (2, 2, 1, 1), label)
    if fam == "G":
        if n != 2:
            raise ValueError("G_n needs n = 2")
        return GCM(((2, -3), (-1, 2)), (1, 3), label)
    raise ValueError("unknown family %r" % family)


def gcm_from_name(name: str) -> GCM:
    """Parse a type tag such as "A2", "B3" or "affine-A1"."""
    name = name.strip()
    if name.lower() in ("affine-a1", "affine_a1"):
        return builtin_gcm("affine-A1")
    if len(name) >= 2 and name[0].upper() in "ABCDEFG":
        try:
            return builtin_gcm(name[0], int(name[1:]))
        except ValueError as exc:
            raise ValueError("bad type tag %r: %s" % (name, exc)) from None
    raise ValueError("unknown type tag %r" % name)


def load_gcm_file(path: str) -> GCM:
    """Read a custom matrix from a JSON document {"rank": r, "matrix": [...]}.

    The matrix may be given row-major as a flat array or as nested rows;
    the symmetrizer is computed automatically.
    """
    with open(path, "r", encoding="utf-8") as fh:
        doc = json.load(fh)
    if not isinstance(doc, dict) or "rank" not in doc or "matrix" not in doc:
        raise ValueError("GCM file needs fields 'rank' and 'matrix'")
    rank = int(doc["rank"])
    raw = doc["matrix"]
    if raw and isinstance(raw[0], list):
        rows = raw
    else:
        if len(raw) != rank * rank:
            raise ValueError("flat matrix must have rank*rank entries")
        rows = [raw[i * rank : (i + 1) * rank] for i in range(rank)]
    if len(rows) != rank:
        raise ValueError("matrix must have %d rows" % rank)
    return make_gcm(rows, doc.get("label"))


def simple_reflection(gcm: GCM, i: int, v: Sequence[int]) -> Coords:
    """Image of v under the i-th simple reflection (an involution)."""
    gcm._check_index(i)
    a = gcm.matrix[i - 1]
    pairing = sum(a[j] * v[j] for j in range(gcm.rank))
    out = list(v)
    out[i - 1] -= pairing
    return tuple(out)


def _leading_minors_positive(gcm: GCM) -> bool:
    # Sylvester's criterion on the symmetrized matrix, in exact arithmetic
    n = gcm.rank
    b = [
        [Fraction(gcm.symmetrizer[i] * gcm.matrix[i][j]) for j in range(n)]
        for i in range(n)
    ]
    for k in range(n):
        if b[k][k] <= 0:
            return False
        for i in range(k + 1, n):
            factor = b[i][k] / b[k][k]
            for j in range(k, n):
                b[i][j] -= factor * b[k][j]
    return True


def is_finite_type(gcm: GCM) -> bool:
    """Whether the Weyl group and root system are finite."""
    return _leading_minors_positive(gcm)


def positive_roots(gcm: GCM) -> list:
    """All positive roots, by reflection closure from the simple roots.

    Roots come out sorted by (height, coordinates).  Non-finite input is
    rejected; a hard cap on the closure guards against it independently of
    the determinant test.
    """
    if not is_finite_type(gcm):
        raise NonFiniteTypeError("root system is not finite: %r" % (gcm,))
    n = gcm.rank
    roots = {gcm.simple_root(i) for i in range(1, n + 1)}
    frontier = list(roots)
    while frontier:
        new = []
        for beta in frontier:
            for i in range(1, n + 1):
                gamma = simple_reflection(gcm, i, beta)
                if all(c >= 0 for c in gamma) and gamma not in roots:
                    roots.add(gamma)
                    new.append(gamma)
        if len(roots) > _ROOT_CLOSURE_CAP:
            raise NonFiniteTypeError("root closure exceeded cap; non-finite type?")
        frontier = new
    return sorted(roots, key=lambda r: (sum(r), r))


def highest_root_and_lengths(gcm: GCM):
    """(highest root, all long roots with both signs, orthogonal index set).

    The highest root is the coordinatewise maximum of the positive roots;
    long roots are the ones of maximal squared length under the
    symmetrized form; the index set collects the simple roots orthogonal
    to the highest root.
    """
    pos = positive_roots(gcm)
    highest = max(pos, key=lambda r: (sum(r), r))
    for r in pos:
        if any(c > h for c, h in zip(r, highest)):
            raise ValueError("no coordinatewise-maximal root; input not irreducible?")
    maxlen = max(gcm.norm(r) for r in pos)
    longs = [r for r in pos if gcm.norm(r) == maxlen]
    longs = longs + [tuple(-c for c in r) for r in longs]
    orthogonal = frozenset(
        i for i in range(1, gcm.rank + 1)
        if gcm.bilinear(highest, gcm.simple_root(i)) == 0
    )
    return highest, longs, orthogonal
