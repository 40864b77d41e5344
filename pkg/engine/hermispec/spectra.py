"""
Spectra of mixed graphs.

Floating eigenvalues come from a cyclic Jacobi solver on the real symmetric
embedding of H; exact statements (cospectrality, (-2, 2)-out, simplicity) are
decided on integer characteristic polynomials. Closed-form spectra are
multisets of 2cos(p*pi/q) values whose integer polynomial is assembled from
minimal polynomials of 2cos(2*pi/N).
"""

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import cos, gcd, pi, sqrt
from typing import Optional, Tuple

import numpy as np
from sympy import divisors, factorint

from .charpoly import (
    IntPolynomial,
    char_poly,
    count_roots_in,
    is_square_free,
    product,
    square_free_decomposition,
)
from .config import get_tolerance
from .mixed_graph import cycle_walk_value, hermitian_matrix, induced_subgraph, simple_cycles

MAX_SWEEPS = 60


class ConvergenceError(ArithmeticError):
    """Raised when the Jacobi solver hits its sweep cap."""


class ClosedFormError(ValueError):
    """Raised when an exact 2cos(p*pi/q) multiset is not a union of whole conjugate orbits."""


def normalize_cosine(p, q):
    """
    Reduce 2cos(p*pi/q) to the representative (p, q) with 0 <= p <= q, in lowest terms.

    Raises:
        ValueError: If q is not positive
    """
    if q <= 0:
        raise ValueError(f"Denominator must be positive, got {q}")
    p = p % (2 * q)
    if p > q:
        p = 2 * q - p
    d = gcd(p, q) if p else q
    return (p // d, q // d)


@dataclass(frozen=True)
class Spectrum:
    """
    Eigenvalue multiset of a mixed graph.

    values are floats sorted descending. exact, when known, lists (p, q) pairs
    meaning 2cos(p*pi/q), in the same order as values. polynomial, when
    known, is the exact integer characteristic polynomial.
    """

    values: Tuple[float, ...]
    tol: float = 1e-11
    exact: Optional[Tuple[Tuple[int, int], ...]] = None
    polynomial: Optional[IntPolynomial] = field(default=None, compare=False)

    @classmethod
    def from_exact(cls, pairs, tol=None):
        """Build from (p, q) pairs meaning 2cos(p*pi/q); values are sorted descending."""
        normalized = [normalize_cosine(p, q) for p, q in pairs]
        normalized.sort(key=lambda pq: Fraction(pq[0], pq[1]))
        values = tuple(2 * cos(p * pi / q) for p, q in normalized)
        return cls(values, get_tolerance(tol), tuple(normalized))

    @classmethod
    def from_polynomial(cls, polynomial, tol=None):
        """Numerical roots of an exact polynomial, with the polynomial attached."""
        roots = np.roots(list(reversed(polynomial.coefficients))) if polynomial.degree > 0 else []
        values = tuple(sorted((float(np.real(r)) for r in roots), reverse=True))
        return cls(values, get_tolerance(tol), None, polynomial)

    def __len__(self):
        return len(self.values)

    @property
    def lambda_1(self):
        return self.values[0] if self.values else None

    @property
    def smallest(self):
        return self.values[-1] if self.values else None

    def multiplicities(self):
        """
        Distinct eigenvalues with multiplicities, largest first.

        Exact pairs are compared exactly; floating values are grouped within
        a loose multiple of the tolerance.
        """
        if self.exact is not None:
            counts = Counter(self.exact)
            ordered = sorted(counts, key=lambda pq: Fraction(pq[0], pq[1]))
            return [(2 * cos(p * pi / q), counts[(p, q)]) for p, q in ordered]
        groups = []
        for value in self.values:
            if groups and abs(groups[-1][0] - value) <= max(1e-8, 1e3 * self.tol):
                groups[-1][1] += 1
            else:
                groups.append([value, 1])
        return [(value, count) for value, count in groups]

    def exact_polynomial(self):
        """
        Integer polynomial whose roots are exactly this spectrum.

        Raises:
            ClosedFormError: If no exact form is known or it is not a union of whole orbits
        """
        if self.polynomial is not None:
            return self.polynomial
        if self.exact is None:
            raise ClosedFormError("Spectrum has no exact form")
        return exact_polynomial(self.exact)

    def to_json(self):
        data = {"values": [round(v, 12) for v in self.values]}
        if self.exact is not None:
            data["exact"] = [list(pq) for pq in self.exact]
        return data


# -- exact closed forms -----------------------------------------------------------

def _mobius(n):
    exponents = factorint(n).values()
    if any(e > 1 for e in exponents):
        return 0
    return -1 if len(exponents) % 2 else 1


@lru_cache(maxsize=None)
def _lucas(n):
    """D_n with D_n(2cos t) = 2cos(n t)."""
    if n == 0:
        return IntPolynomial((2,))
    if n == 1:
        return IntPolynomial.x()
    return IntPolynomial.x() * _lucas(n - 1) - _lucas(n - 2)


@lru_cache(maxsize=None)
def cosine_minimal_polynomial(n):
    """
    Minimal polynomial over the integers of 2cos(2*pi/n).

    D_n(x) - 2 factors as the product over d | n of these minimal polynomials,
    squared for d >= 3; Mobius inversion isolates the square for n itself.
    """
    if n < 1:
        raise ValueError(f"Order must be positive, got {n}")
    if n == 1:
        return IntPolynomial((-2, 1))
    if n == 2:
        return IntPolynomial((2, 1))
    numerator, denominator = [], []
    for d in divisors(n):
        mu = _mobius(n // d)
        if mu == 1:
            numerator.append(_lucas(d) - 2)
        elif mu == -1:
            denominator.append(_lucas(d) - 2)
    squared = product(numerator).exact_quotient(product(denominator))
    return squared.exact_quotient(squared.gcd(squared.derivative()))


def _orbit_key(p, q):
    """(N, a) with 2cos(p*pi/q) = 2cos(2*pi*a/N), a coprime to N and a <= N/2."""
    ratio = Fraction(p, 2 * q)
    n, a = ratio.denominator, ratio.numerator % ratio.denominator
    return n, min(a, n - a)


def _orbit(n):
    if n <= 2:
        return [n - 1] if n == 2 else [0]
    return [a for a in range(1, n // 2 + 1) if gcd(a, n) == 1]


def exact_polynomial(pairs):
    """
    Integer polynomial of a multiset of 2cos(p*pi/q) values.

    Raises:
        ClosedFormError: If some conjugate orbit is only partially present
    """
    counts = Counter(_orbit_key(p, q) for p, q in pairs)
    by_order = {}
    for (n, a), count in counts.items():
        by_order.setdefault(n, {})[a] = count
    factors = []
    for n, members in sorted(by_order.items()):
        orbit = _orbit(n)
        multiplicities = {members.get(a, 0) for a in orbit}
        if len(multiplicities) != 1 or set(members) - set(orbit):
            raise ClosedFormError(
                f"Values 2cos(2*pi*a/{n}) do not cover the conjugate orbit {orbit} evenly")
        factors.append(cosine_minimal_polynomial(n) ** multiplicities.pop())
    return product(factors)


def closed_form(family, params=()):
    """
    Closed-form spectrum of a named family member.

    Args:
        family: Family shorthand name ("P", "C", "C1", "C2", "Gt", "Gttm", "D", a letter, ...)
        params: Family parameters

    Returns:
        Spectrum: Exact-form spectrum

    Raises:
        UnknownFamilyError: If the family is not registered
    """
    from .family_registry import default_registry

    return default_registry().closed_form(family, params)


# -- floating eigenvalues -----------------------------------------------------------

def jacobi_eigenvalues(matrix, tol=None, max_sweeps=MAX_SWEEPS):
    """
    Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.

    Args:
        matrix: Real symmetric numpy array
        tol: Off-diagonal Frobenius threshold, relative to the matrix norm
        max_sweeps: Sweep cap

    Returns:
        numpy.ndarray: Eigenvalues sorted descending

    Raises:
        ConvergenceError: If the off-diagonal mass is still above tol after max_sweeps
    """
    tol = get_tolerance(tol)
    a = np.array(matrix, dtype=float)
    n = a.shape[0]
    if n == 0:
        return np.zeros(0)
    scale = max(np.linalg.norm(a), 1.0)
    for _ in range(max_sweeps):
        off = sqrt(max(np.sum(a * a) - np.sum(np.diag(a) ** 2), 0.0))
        if off <= tol * scale:
            return np.sort(np.diag(a))[::-1]
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= 1e-300:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = (1.0 if theta >= 0 else -1.0) / (abs(theta) + sqrt(theta * theta + 1.0))
                c = 1.0 / sqrt(t * t + 1.0)
                s = t * c
                col_p, col_q = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p, row_q = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = a[q, p] = 0.0
    raise ConvergenceError(f"Jacobi did not converge within {max_sweeps} sweeps (n={n})")


def eigenvalues(h, tol=None):
    """
    Spectrum of a Hermitian matrix.

    Works on the real embedding [[A, -B], [B, A]] of H = A + iB, where every
    eigenvalue of H appears twice; one value of each adjacent pair is kept.

    Args:
        h: HermitianMatrix
        tol: Solver tolerance (HERMISPEC_TOL, default 1e-11)

    Returns:
        Spectrum: Floating spectrum, descending
    """
    tol = get_tolerance(tol)
    doubled = jacobi_eigenvalues(h.real_embedding(), tol)
    return Spectrum(tuple(float(v) for v in doubled[0::2]), tol)


def graph_spectrum(g, tol=None):
    """Floating spectrum of a mixed graph, with its exact char poly attached."""
    spectrum = eigenvalues(hermitian_matrix(g), tol)
    return Spectrum(spectrum.values, spectrum.tol, None, char_poly(g))


def numeric_eigenvalues(g):
    """Fast numpy eigenvalues, descending; advisory only (search pre-filters)."""
    if g.n == 0:
        return np.zeros(0)
    return np.linalg.eigvalsh(hermitian_matrix(g).to_numpy())[::-1]


def lambda_one(g, tol=None):
    """Largest eigenvalue lambda_1 of a mixed graph."""
    return graph_spectrum(g, tol).lambda_1


# -- exact decisions ---------------------------------------------------------------

def cospectral(g1, g2):
    """Exact cospectrality: equal integer characteristic polynomials."""
    if g1.n != g2.n:
        return False
    return char_poly(g1) == char_poly(g2)


def is_out(g):
    """
    Exact (-2, 2)-out test.

    True iff fewer than n roots of the characteristic polynomial lie strictly
    inside (-2, 2); a root at exactly +-2 counts as out.
    """
    if g.n == 0:
        return False
    return count_roots_in(char_poly(g), -2, 2) < g.n


def is_admissible(g):
    """All eigenvalues simple and strictly inside (-2, 2)."""
    p = char_poly(g)
    return is_square_free(p) and count_roots_in(p, -2, 2) == g.n


def eigenvalue_multiplicities(g):
    """Square-free factors of the char poly with their multiplicities."""
    return square_free_decomposition(char_poly(g))


def interlaces(g, vertices, tol=None):
    """
    Check lambda_i(g) >= lambda_i(<S>) >= lambda_(i+n-m)(g) for every i.

    Args:
        g: MixedGraph
        vertices: Vertex subset S, m = |S|
        tol: Slack allowed on each inequality

    Returns:
        bool: False only on a violation beyond the tolerance
    """
    tol = get_tolerance(tol)
    slack = max(1e-9, 1e3 * tol)
    big = graph_spectrum(g, tol).values
    sub = graph_spectrum(induced_subgraph(g, vertices), tol).values
    n, m = len(big), len(sub)
    for i in range(m):
        if big[i] < sub[i] - slack or sub[i] < big[i + n - m] - slack:
            return False
    return True


def has_real_odd_cycle(g):
    """True when some odd simple cycle has value +1 or -1."""
    return any(len(c) % 2 == 1 and cycle_walk_value(g, c).is_real for c in simple_cycles(g))


def spectrum_is_symmetric(spectrum, tol=None):
    """Multiset S equals -S within tolerance."""
    slack = max(1e-9, 1e3 * get_tolerance(tol))
    values = sorted(spectrum.values)
    return all(abs(a + b) <= slack for a, b in zip(values, reversed(values)))
