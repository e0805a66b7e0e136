"""Exact sparse multivariate polynomials and factored rational functions.

Every multiplicity this package computes is a rational function whose
denominator is a product of characters, i.e. of degree-1 forms.  The
denominator is therefore never expanded: a :class:`FactoredRational` keeps
it as a multiset of primitive, sign-normalized linear forms, and reduction
only ever needs exact division of the numerator by one linear form at a
time.  No general multivariate gcd is required.

Coefficients are Python integers (arbitrary precision); the one global
rational scalar of a fraction is a ``fractions.Fraction`` so that scaling
by 1/d stays exact.

The canonical monomial order is graded lexicographic with the *last*
variable largest (a1 < a2 < ... < delta); it fixes printing and the sign
normalization of numerators.
"""

from __future__ import annotations

import math
from collections import Counter
from fractions import Fraction
from typing import Iterable, Optional, Sequence


def _monomial_key(exps: tuple) -> tuple:
    # graded lex, later variables dominate
    return (sum(exps), tuple(reversed(exps)))


def default_names(nvars: int) -> list:
    return ["a%d" % (i + 1) for i in range(nvars)]


class MultiPoly:
    """Sparse multivariate polynomial over the integers.

    Terms are stored as a map from exponent tuples to nonzero integer
    coefficients.  Instances are treated as immutable: all arithmetic
    returns new objects.

    >>> x = MultiPoly.variable(2, 0); y = MultiPoly.variable(2, 1)
    >>> (x + y) * (x - y) == x * x - y * y
    True
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        clean = {}
        if terms:
            for exps, c in terms.items():
                if c:
                    clean[tuple(exps)] = c
        self.terms = clean

    @classmethod
    def zero(cls, nvars: int) -> "MultiPoly":
        return cls(nvars)

    @classmethod
    def const(cls, nvars: int, c: int) -> "MultiPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "MultiPoly":
        exps = tuple(1 if j == i else 0 for j in range(nvars))
        return cls(nvars, {exps: 1})

    @classmethod
    def from_linear(cls, coeffs: Sequence[int]) -> "MultiPoly":
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            if c:
                terms[tuple(1 if j == i else 0 for j in range(n))] = c
        return cls(n, terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_constant(self) -> bool:
        return all(sum(e) == 0 for e in self.terms)

    def total_degree(self) -> int:
        """Maximal total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def leading_coefficient(self) -> int:
        """Coefficient of the largest monomial in the canonical order."""
        if not self.terms:
            return 0
        return self.terms[max(self.terms, key=_monomial_key)]

    def content(self) -> int:
        """gcd of the absolute coefficients (0 for the zero polynomial)."""
        g = 0
        for c in self.terms.values():
            g = math.gcd(g, abs(c))
            if g == 1:
                break
        return g

    def constant_value(self) -> int:
        if not self.is_constant:
            raise ValueError("polynomial is not constant")
        return self.terms.get((0,) * self.nvars, 0)

    def _check(self, other: "MultiPoly") -> None:
        if self.nvars != other.nvars:
            raise ValueError("variable count mismatch: %d vs %d" % (self.nvars, other.nvars))

    def __add__(self, other):
        if isinstance(other, int):
            other = MultiPoly.const(self.nvars, other)
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, 0) + c
            if s:
                terms[e] = s
            elif e in terms:
                del terms[e]
        return MultiPoly(self.nvars, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = MultiPoly.const(self.nvars, other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return MultiPoly.zero(self.nvars)
            return MultiPoly(self.nvars, {e: c * other for e, c in self.terms.items()})
        self._check(other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(e, 0) + c1 * c2
                if s:
                    terms[e] = s
                elif e in terms:
                    del terms[e]
        return MultiPoly(self.nvars, terms)

    __rmul__ = __mul__

    def scale_down(self, c: int) -> "MultiPoly":
        """Exact division of every coefficient by ``c``."""
        terms = {}
        for e, v in self.terms.items():
            q, r = divmod(v, c)
            if r:
                raise ValueError("coefficient %d not divisible by %d" % (v, c))
            terms[e] = q
        return MultiPoly(self.nvars, terms)

    def eval_at(self, point: Sequence[int]) -> int:
        if len(point) != self.nvars:
            raise ValueError("point has wrong dimension")
        total = 0
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v *= x ** k
            total += v
        return total

    def sorted_terms(self):
        """Terms in descending canonical monomial order."""
        return sorted(self.terms.items(), key=lambda t: _monomial_key(t[0]), reverse=True)

    def __eq__(self, other):
        return (
            isinstance(other, MultiPoly)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def render(self, names: Optional[Sequence[str]] = None) -> str:
        if not self.terms:
            return "0"
        if names is None:
            names = default_names(self.nvars)
        parts = []
        for e, c in self.sorted_terms():
            factors = []
            for i, k in enumerate(e):
                if k == 1:
                    factors.append(names[i])
                elif k > 1:
                    factors.append("%s^%d" % (names[i], k))
            mono = "*".join(factors)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = "%d*%s" % (abs(c), mono)
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self):
        return "MultiPoly(%s)" % self.render()


class LinearForm:
    """Primitive, sign-normalized homogeneous degree-1 form.

    Normalization: the gcd of the coefficients is 1 and the first nonzero
    coefficient is positive.  Arbitrary nonzero integer vectors are turned
    into (sign, content, form) triples by :meth:`normalize`.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[int]):
        coeffs = tuple(int(c) for c in coeffs)
        if not any(coeffs):
            raise ValueError("linear form must be nonzero")
        g = 0
        for c in coeffs:
            g = math.gcd(g, abs(c))
        if g != 1:
            raise ValueError("linear form must be primitive (content %d)" % g)
        first = next(c for c in coeffs if c)
        if first < 0:
            raise ValueError("linear form must have positive first nonzero coefficient")
        self.coeffs = coeffs

    @staticmethod
    def normalize(vec: Sequence[int]):
        """Split an integer vector into sign, content and a normalized form.

        >>> LinearForm.normalize((0, -2, -4))
        (-1, 2, LinearForm(a2+2*a3))
        """
        vec = tuple(int(c) for c in vec)
        if not any(vec):
            raise ValueError("zero weight")
        g = 0
        for c in vec:
            g = math.gcd(g, abs(c))
        vec = tuple(c // g for c in vec)
        first = next(c for c in vec if c)
        sign = 1
        if first < 0:
            sign = -1
            vec = tuple(-c for c in vec)
        return sign, g, LinearForm(vec)

    @property
    def nvars(self) -> int:
        return len(self.coeffs)

    def as_poly(self) -> MultiPoly:
        return MultiPoly.from_linear(self.coeffs)

    def eval_at(self, point: Sequence[int]) -> int:
        return sum(c * x for c, x in zip(self.coeffs, point))

    def __eq__(self, other):
        return isinstance(other, LinearForm) and self.coeffs == other.coeffs

    def __lt__(self, other):
        # consistent with the canonical monomial order: later variables dominate
        return self.coeffs[::-1] < other.coeffs[::-1]

    def __hash__(self):
        return hash(self.coeffs)

    def render(self, names: Optional[Sequence[str]] = None) -> str:
        if names is None:
            names = default_names(self.nvars)
        parts = []
        for c, name in zip(self.coeffs, names):
            if not c:
                continue
            if abs(c) == 1:
                body = name
            else:
                body = "%d*%s" % (abs(c), name)
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+" if c > 0 else "-") + body)
        return "".join(parts)

    def __repr__(self):
        return "LinearForm(%s)" % self.render()


def divide_by_linear(p: MultiPoly, f: LinearForm) -> Optional[MultiPoly]:
    """Exact quotient p / f, or None when f does not divide p.

    Division is performed with respect to the pivot variable of ``f``
    (its largest variable with nonzero coefficient); the remainder must
    vanish identically.  Whenever a quotient q is returned, q * f == p
    holds exactly over the integers.

    >>> x = MultiPoly.variable(2, 0); y = MultiPoly.variable(2, 1)
    >>> divide_by_linear(x * x - y * y, LinearForm((1, -1))) == x + y
    True
    >>> divide_by_linear(x * x + y * y, LinearForm((1, -1))) is None
    True
    """
    if p.nvars != f.nvars:
        raise ValueError("variable count mismatch")
    if p.is_zero:
        return p
    k = max(i for i, c in enumerate(f.coeffs) if c)
    a = f.coeffs[k]
    fpoly = f.as_poly()
    quotient = MultiPoly.zero(p.nvars)
    rem = p
    while not rem.is_zero:
        m = max(e[k] for e in rem.terms)
        if m == 0:
            return None
        # terms of highest pivot degree, shifted down by one in the pivot
        lead = {}
        for e, c in rem.terms.items():
            if e[k] == m:
                q, r = divmod(c, a)
                if r:
                    return None
                le = list(e)
                le[k] = m - 1
                lead[tuple(le)] = q
        step = MultiPoly(p.nvars, lead)
        quotient = quotient + step
        rem = rem - step * fpoly
    return quotient


class FactoredRational:
    """Reduced fraction  sign * scalar * num / (product of linear forms).

    Invariants of the canonical (fully reduced) representation:

    * ``num`` is primitive (content 1) with positive leading coefficient
      in the canonical monomial order; the zero fraction has ``num == 0``
      and no denominator factors;
    * ``scalar`` is a positive ``Fraction`` in lowest terms;
    * every denominator factor is a primitive sign-normalized
      :class:`LinearForm` and none of them divides ``num``;
    * ``sign`` is +1 or -1.

    Because the integers are a unique factorization domain and the
    denominator factors are irreducible, this representation of a rational
    function is unique, so ``==`` decides equality of values.
    """

    __slots__ = ("nvars", "sign", "scalar", "num", "den")

    def __init__(self, nvars, sign, scalar, num, den):
        self.nvars = nvars
        self.sign = sign
        self.scalar = scalar
        self.num = num
        self.den = tuple(den)

    @classmethod
    def zero(cls, nvars: int) -> "FactoredRational":
        return cls(nvars, 1, Fraction(1), MultiPoly.zero(nvars), ())

    @classmethod
    def from_parts(cls, nvars, sign, scalar, num: MultiPoly, den: Iterable[LinearForm]):
        """Build and fully reduce a fraction from raw parts."""
        if scalar == 0 or num.is_zero:
            return cls.zero(nvars)
        if scalar < 0:
            sign, scalar = -sign, -scalar
        lc = num.leading_coefficient()
        if lc < 0:
            sign, num = -sign, -num
        c = num.content()
        if c > 1:
            num = num.scale_down(c)
            scalar = scalar * c
        remaining = Counter(den)
        for f in sorted(remaining):
            while remaining[f]:
                q = divide_by_linear(num, f)
                if q is None:
                    break
                remaining[f] -= 1
                if q.leading_coefficient() < 0:
                    sign, q = -sign, -q
                num = q
        factors = []
        for f in sorted(remaining):
            factors.extend([f] * remaining[f])
        return cls(nvars, sign, scalar, num, factors)

    @classmethod
    def from_weights(
        cls, weights: Iterable[Sequence[int]], nvars: Optional[int] = None
    ) -> "FactoredRational":
        """1 / (product of the given nonzero integer weights).

        Each weight is normalized to a primitive positive form; extracted
        signs and integer contents are folded into the sign and scalar.
        A zero weight is rejected: it signals a non-isolated or
        non-attractive fixed point in the caller's data.  The empty
        product is 1, in which case ``nvars`` must be given.
        """
        weights = [tuple(w) for w in weights]
        if not weights:
            if nvars is None:
                raise ValueError("empty weight list needs an explicit nvars")
            return cls(nvars, 1, Fraction(1), MultiPoly.const(nvars, 1), ())
        nvars = len(weights[0])
        sign = 1
        content = 1
        forms = []
        for w in weights:
            if len(w) != nvars:
                raise ValueError("weights of mixed dimension")
            s, c, f = LinearForm.normalize(w)
            sign *= s
            content *= c
            forms.append(f)
        return cls(
            nvars, sign, Fraction(1, content), MultiPoly.const(nvars, 1), sorted(forms)
        )

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def degree(self) -> Optional[int]:
        """Total degree of the rational function; None for zero."""
        if self.is_zero:
            return None
        return self.num.total_degree() - len(self.den)

    def den_counter(self) -> Counter:
        return Counter(self.den)

    def __add__(self, other: "FactoredRational") -> "FactoredRational":
        if not isinstance(other, FactoredRational):
            return NotImplemented
        if self.nvars != other.nvars:
            raise ValueError("variable count mismatch")
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        ca, cb = Counter(self.den), Counter(other.den)
        common = ca | cb
        extra_a = common - ca
        extra_b = common - cb
        sa = self.scalar * self.sign
        sb = other.scalar * other.sign
        d = math.lcm(sa.denominator, sb.denominator)
        pa = self.num * int(sa * d)
        pb = other.num * int(sb * d)
        for f, k in extra_a.items():
            for _ in range(k):
                pa = pa * f.as_poly()
        for f, k in extra_b.items():
            for _ in range(k):
                pb = pb * f.as_poly()
        num = pa + pb
        return FactoredRational.from_parts(
            self.nvars, 1, Fraction(1, d), num, common.elements()
        )

    def scale(self, c) -> "FactoredRational":
        """Exact multiplication by a rational scalar."""
        c = Fraction(c)
        if c == 0 or self.is_zero:
            return FactoredRational.zero(self.nvars)
        sign = self.sign
        if c < 0:
            sign, c = -sign, -c
        return FactoredRational(self.nvars, sign, self.scalar * c, self.num, self.den)

    def __neg__(self):
        return self.scale(-1)

    def eval_at(self, point: Sequence[int]) -> Fraction:
        """Exact value at an integer point; the denominator must not vanish."""
        den = 1
        for f in self.den:
            v = f.eval_at(point)
            if v == 0:
                raise ZeroDivisionError("denominator factor %r vanishes at %r" % (f, point))
            den *= v
        return self.sign * self.scalar * Fraction(self.num.eval_at(point), den)

    def __eq__(self, other):
        return (
            isinstance(other, FactoredRational)
            and self.nvars == other.nvars
            and self.sign == other.sign
            and self.scalar == other.scalar
            and self.num == other.num
            and Counter(self.den) == Counter(other.den)
        )

    def __hash__(self):
        return hash((self.nvars, self.sign, self.scalar, self.num, frozenset(Counter(self.den).items())))

    def render(self, names: Optional[Sequence[str]] = None) -> str:
        if self.is_zero:
            return "0"
        if names is None:
            names = default_names(self.nvars)
        sgn = "-" if self.sign < 0 else ""
        if self.num.is_constant:
            head = sgn + str(self.scalar * self.num.constant_value())
        else:
            num_str = self.num.render(names)
            if self.scalar == 1:
                head = "%s(%s)" % (sgn, num_str)
            else:
                head = "%s%s * (%s)" % (sgn, self.scalar, num_str)
        if not self.den:
            return head
        den_str = "*".join("(%s)" % f.render(names) for f in self.den)
        return "%s / %s" % (head, den_str)

    def to_dict(self) -> dict:
        """Machine form with explicit coefficient lists."""
        return {
            "nvars": self.nvars,
            "sign": self.sign,
            "scalar": [self.scalar.numerator, self.scalar.denominator],
            "numerator": [
                {"exponents": list(e), "coefficient": c} for e, c in self.num.sorted_terms()
            ],
            "denominator": [list(f.coeffs) for f in self.den],
        }

    def __repr__(self):
        return "FactoredRational(%s)" % self.render()
