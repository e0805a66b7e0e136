"""Smoothness classification of Schubert-variety points from numerators.

A point x of the variety indexed by w is classified by the numerators
f_{y,w} over the whole Bruhat interval [x, w]:

* rationally smooth  <=>  every f is a (nonzero) constant;
* p-smooth           <=>  every f is additionally an integer not
                          divisible by p;
* smooth             <=>  every |f| equals 1.

The Z-smooth flag is defined to coincide with the smooth flag (for
Schubert varieties the two loci agree); it is recorded separately so the
identity is a tested postcondition rather than an assumption, and so an
independent computation could be slotted in later.

The classical pointwise forms of the constant / unit tests (looking only
at f_{x,w} itself) are available behind the ``interval=False`` switch;
the interval forms are the defaults.

``palindromicity_oracle`` is an independent rational-smoothness check:
it tests symmetry of the rank generating function of [x, w]
(Carrell-Peterson), touching none of the multiplicity arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Tuple

from .schubert import NumeratorReport
from .weyl import WeylElement, bruhat_interval, bruhat_leq

Table = Dict[WeylElement, NumeratorReport]


class CriterionChainError(AssertionError):
    """A computed report violates the smooth => p-smooth => rationally
    smooth inclusion chain; this signals a defect, not bad input."""


def prime_factors(n: int) -> FrozenSet[int]:
    """Prime divisors of |n| by trial division (values here are tiny)."""
    n = abs(n)
    out = set()
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.add(p)
            while n % p == 0:
                n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out.add(n)
    return frozenset(out)


def _upper_interval(table: Table, x: WeylElement) -> List[NumeratorReport]:
    # the table covers [e, w]; membership of x is exactly x <= w
    if x not in table:
        raise ValueError("%r is not below the table's top element" % (x,))
    return [rep for y, rep in table.items() if bruhat_leq(x, y)]


def _reports_at(table: Table, x: WeylElement, interval: bool) -> List[NumeratorReport]:
    if interval:
        return _upper_interval(table, x)
    if x not in table:
        raise ValueError("%r is not below the table's top element" % (x,))
    return [table[x]]


def rationally_smooth_at(table: Table, x: WeylElement, interval: bool = True) -> bool:
    """Constant-numerator test at x, quantified over [x, w] by default."""
    return all(rep.is_constant for rep in _reports_at(table, x, interval))


def p_smooth_at(table: Table, x: WeylElement, p: int) -> bool:
    """Integer-and-not-divisible-by-p test over the interval [x, w]."""
    if p < 2:
        raise ValueError("p must be a prime, got %d" % p)
    for rep in _upper_interval(table, x):
        if not (rep.is_constant and rep.is_integral):
            return False
        if rep.abs_f % p == 0:
            return False
    return True


def smooth_at(table: Table, x: WeylElement, interval: bool = True) -> bool:
    """Unit-numerator test (|f| = 1), over [x, w] by default."""
    reports = _upper_interval(table, x) if interval else [table[x]] if x in table else None
    if reports is None:
        raise ValueError("%r is not below the table's top element" % (x,))
    return all(rep.abs_f == 1 for rep in reports)


def z_smooth_at(table: Table, x: WeylElement) -> bool:
    """Defined to equal ``smooth_at``; kept separate deliberately."""
    return smooth_at(table, x)


def torsion_primes(table: Table, x: WeylElement) -> FrozenSet[int]:
    """Primes dividing some numerator over [x, w].

    Only defined at rationally smooth points; these are exactly the
    primes p for which x fails to be p-smooth.
    """
    reports = _upper_interval(table, x)
    out = set()
    for rep in reports:
        if not (rep.is_constant and rep.is_integral):
            raise ValueError(
                "torsion primes are only defined at rationally smooth points"
            )
        out |= prime_factors(rep.abs_f)
    return frozenset(out)


def palindromicity_oracle(x: WeylElement, w: WeylElement) -> bool:
    """Rank-symmetry of the interval [x, w].

    True iff sum over y in [x,w] of q^(l(y)-l(x)) is a palindromic
    polynomial.  Used purely as a cross-validation oracle for
    ``rationally_smooth_at`` in finite type.
    """
    members = bruhat_interval(x, w)
    top = w.length - x.length
    counts = [0] * (top + 1)
    for y in members:
        counts[y.length - x.length] += 1
    return counts == counts[::-1]


@dataclass(frozen=True)
class PointStatus:
    """Classification of one fixed point inside one Schubert variety."""

    marker: object  # abs_f as int, or "nonconstant" / "nonintegral"
    rationally_smooth: bool
    smooth: bool
    z_smooth: bool
    p_smooth: Dict[int, bool]
    torsion_primes: Optional[FrozenSet[int]]


@dataclass(frozen=True)
class LocusReport:
    """Per-point classification of the whole variety indexed by w."""

    w: WeylElement
    primes: Tuple[int, ...]
    points: Dict[WeylElement, PointStatus]


def classify_locus(table: Table, primes) -> LocusReport:
    """Full locus report over [e, w] for the requested primes."""
    primes = tuple(sorted(set(int(p) for p in primes)))
    w = next(iter(table.values())).w
    points = {}
    for y in table:
        rat = rationally_smooth_at(table, y)
        status = PointStatus(
            marker=table[y].marker(),
            rationally_smooth=rat,
            smooth=smooth_at(table, y),
            z_smooth=z_smooth_at(table, y),
            p_smooth={p: p_smooth_at(table, y, p) for p in primes},
            torsion_primes=torsion_primes(table, y) if rat else None,
        )
        points[y] = status
    report = LocusReport(w, primes, points)
    verify_chain(report)
    return report


def verify_chain(report: LocusReport) -> None:
    """Assert the inclusion chain on every point of a report.

    smooth => p-smooth for each queried p => rationally smooth, and
    smooth <=> Z-smooth.  A violation is an internal defect.
    """
    for y, st in report.points.items():
        if st.smooth != st.z_smooth:
            raise CriterionChainError("smooth != Z-smooth at %r" % (y,))
        for p, ok in st.p_smooth.items():
            if st.smooth and not ok:
                raise CriterionChainError("smooth but not %d-smooth at %r" % (p, y))
            if ok and not st.rationally_smooth:
                raise CriterionChainError(
                    "%d-smooth but not rationally smooth at %r" % (p, y)
                )
