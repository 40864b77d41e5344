"""
Exact characteristic polynomials of mixed and signed graphs.

Three independent routes are provided:

- determinant route: det(xI - H) at n+1 integer points by fraction-free
  elimination over the Gaussian integers, then exact interpolation;
- elementary-subgraph route: coefficients assembled from the real elementary
  subgraphs (disjoint unions of edges and cycles of value +-1), and the
  signed-graph analogue for signed graphs;
- Schwenk-style vertex and edge recursions over smaller pieces.

Root counting in intervals uses Sturm sequences over the rationals.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Tuple

from sympy import Poly, Rational, Symbol, ZZ
from sympy import sturm as sympy_sturm

from .config import get_thread_count
from .mixed_graph import (
    MINUS_ONE,
    GraphValidationError,
    MixedGraph,
    cycle_walk_value,
    hermitian_matrix,
    simple_cycles,
    structure,
)

X = Symbol("x")

# Elementary-subgraph and Schwenk cycle enumeration guards
MAX_GUARDED_ORDER = 20
MAX_GUARDED_CORANK = 4


class CharPolyConsistencyError(ArithmeticError):
    """Raised when exact arithmetic produces an impossible intermediate (a bug, never data)."""


class SizeGuardExceeded(RuntimeError):
    """Raised when an exponential enumeration is asked for a graph beyond the guards."""


@dataclass(frozen=True)
class IntPolynomial:
    """
    Polynomial with exact integer coefficients, constant term first.

    Characteristic polynomials are monic of degree n; the zero polynomial has
    no coefficients.
    """

    coefficients: Tuple[int, ...]

    def __post_init__(self):
        coefficients = [int(c) for c in self.coefficients]
        while coefficients and coefficients[-1] == 0:
            coefficients.pop()
        object.__setattr__(self, "coefficients", tuple(coefficients))

    @classmethod
    def x(cls):
        return cls((0, 1))

    @classmethod
    def constant(cls, value):
        return cls((value,))

    @classmethod
    def from_sympy(cls, poly):
        poly = Poly(poly, X)
        coefficients = []
        for c in reversed(poly.all_coeffs()):
            if c != int(c):
                raise CharPolyConsistencyError(f"Non-integer coefficient {c}")
            coefficients.append(int(c))
        return cls(tuple(coefficients))

    @classmethod
    def from_json(cls, data):
        if not isinstance(data, list) or not all(isinstance(c, int) for c in data):
            raise ValueError("Polynomial JSON must be a list of integers, constant term first")
        return cls(tuple(data))

    def to_json(self):
        return list(self.coefficients)

    def to_sympy(self):
        return Poly(list(reversed(self.coefficients)) or [0], X, domain=ZZ)

    @property
    def degree(self):
        return len(self.coefficients) - 1

    @property
    def leading(self):
        return self.coefficients[-1] if self.coefficients else 0

    @property
    def is_monic(self):
        return self.leading == 1

    def coefficient(self, power):
        return self.coefficients[power] if 0 <= power < len(self.coefficients) else 0

    def __call__(self, x):
        return eval_at(self, x)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return IntPolynomial.from_sympy(self.to_sympy() + other.to_sympy())

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return IntPolynomial.from_sympy(self.to_sympy() - other.to_sympy())

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return IntPolynomial.from_sympy(self.to_sympy() * other.to_sympy())

    __rmul__ = __mul__

    def __pow__(self, exponent):
        return IntPolynomial.from_sympy(self.to_sympy() ** int(exponent))

    def divmod(self, other):
        """Exact division by a monic polynomial: (quotient, remainder)."""
        quotient, remainder = self.to_sympy().div(other.to_sympy())
        return IntPolynomial.from_sympy(quotient), IntPolynomial.from_sympy(remainder)

    def divides(self, other):
        """True when self divides other exactly."""
        if not self.coefficients:
            return False
        _, remainder = other.to_sympy().div(self.to_sympy())
        return remainder.is_zero

    def exact_quotient(self, other):
        quotient, remainder = self.divmod(other)
        if remainder.coefficients:
            raise ArithmeticError(f"{other} does not divide {self}")
        return quotient

    def derivative(self):
        return IntPolynomial(tuple(k * c for k, c in enumerate(self.coefficients))[1:])

    def gcd(self, other):
        return IntPolynomial.from_sympy(self.to_sympy().gcd(other.to_sympy()))

    def reflect(self):
        """p(-x)."""
        return IntPolynomial(tuple(c if k % 2 == 0 else -c for k, c in enumerate(self.coefficients)))

    def __str__(self):
        if not self.coefficients:
            return "0"
        terms = []
        for power in range(self.degree, -1, -1):
            c = self.coefficients[power]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            magnitude = abs(c)
            if power == 0:
                body = str(magnitude)
            else:
                base = "x" if power == 1 else f"x^{power}"
                body = base if magnitude == 1 else f"{magnitude}{base}"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


def _coerce(value):
    if isinstance(value, IntPolynomial):
        return value
    if isinstance(value, int):
        return IntPolynomial.constant(value)
    return NotImplemented


ONE_POLY = IntPolynomial.constant(1)


def product(polynomials):
    """Product of an iterable of polynomials (1 when empty)."""
    result = ONE_POLY
    for p in polynomials:
        result = result * p
    return result


# -- determinant route --------------------------------------------------------

def _gaussian_exact_div(numerator, denominator):
    a, b = numerator
    c, d = denominator
    norm = c * c + d * d
    real = a * c + b * d
    imag = b * c - a * d
    if norm == 0 or real % norm or imag % norm:
        raise CharPolyConsistencyError(
            f"Inexact Gaussian division ({a}+{b}i)/({c}+{d}i) during elimination")
    return real // norm, imag // norm


def gaussian_determinant(rows):
    """
    Determinant of a square Gaussian-integer matrix by Bareiss elimination.

    Args:
        rows: Square matrix as lists of (real, imaginary) integer pairs

    Returns:
        tuple: Exact (real, imaginary) determinant
    """
    n = len(rows)
    if n == 0:
        return (1, 0)
    m = [list(row) for row in rows]
    sign = 1
    previous = (1, 0)
    for k in range(n - 1):
        if m[k][k] == (0, 0):
            swap = next((r for r in range(k + 1, n) if m[r][k] != (0, 0)), None)
            if swap is None:
                return (0, 0)
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        pr, pi = m[k][k]
        pivot_row = m[k]
        for i in range(k + 1, n):
            row = m[i]
            ar, ai = row[k]
            for j in range(k + 1, n):
                br, bi = pivot_row[j]
                cr, ci = row[j]
                # pivot * m[i][j] - m[i][k] * m[k][j], divided by the previous pivot
                nr = pr * cr - pi * ci - (ar * br - ai * bi)
                ni = pr * ci + pi * cr - (ar * bi + ai * br)
                row[j] = _gaussian_exact_div((nr, ni), previous)
            row[k] = (0, 0)
        previous = m[k][k]
    dr, di = m[n - 1][n - 1]
    return (sign * dr, sign * di)


def _interpolate(values):
    """Monomial coefficients of the polynomial taking values[k] at x = k (Newton form)."""
    differences = list(values)
    leading = []
    for _ in range(len(values)):
        leading.append(differences[0])
        differences = [b - a for a, b in zip(differences, differences[1:])]
    coefficients = [Fraction(0)] * len(values)
    falling = [Fraction(1)]  # x (x-1) ... (x-j+1)
    factorial = 1
    for j, delta in enumerate(leading):
        if j > 0:
            factorial *= j
            shifted = [Fraction(0)] + falling
            falling = [shifted[k] - (j - 1) * (falling[k] if k < len(falling) else 0)
                       for k in range(len(shifted))]
        scale = Fraction(delta, factorial)
        for k, c in enumerate(falling):
            coefficients[k] += scale * c
    return coefficients


def char_poly_exact(h):
    """
    Exact characteristic polynomial det(xI - H).

    Args:
        h: HermitianMatrix

    Returns:
        IntPolynomial: Monic, degree n

    Raises:
        CharPolyConsistencyError: On a non-real determinant or inexact interpolation
    """
    n = h.n
    base = h.gaussian_rows()
    values = []
    for x in range(n + 1):
        rows = [[((x if i == j else 0) - base[i][j][0], -base[i][j][1]) for j in range(n)]
                for i in range(n)]
        real, imag = gaussian_determinant(rows)
        if imag != 0:
            raise CharPolyConsistencyError(f"det({x}I - H) has imaginary part {imag}")
        values.append(real)
    coefficients = _interpolate(values)
    if any(c.denominator != 1 for c in coefficients):
        raise CharPolyConsistencyError("Interpolation produced non-integer coefficients")
    poly = IntPolynomial(tuple(int(c) for c in coefficients))
    if poly.degree != n or not poly.is_monic:
        raise CharPolyConsistencyError(f"Characteristic polynomial is not monic of degree {n}")
    return poly


@lru_cache(maxsize=65536)
def char_poly(g):
    """Cached exact characteristic polynomial of a mixed graph."""
    return char_poly_exact(hermitian_matrix(g))


def char_polys(graphs, workers=None):
    """
    Exact characteristic polynomials of many graphs, in input order.

    Runs in HERMISPEC_THREADS worker processes when more than one is configured;
    results are merged back in input order.
    """
    graphs = list(graphs)
    workers = get_thread_count(workers)
    if workers <= 1 or len(graphs) < 2 * workers:
        return [char_poly(g) for g in graphs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(char_poly, graphs, chunksize=max(1, len(graphs) // (4 * workers))))


# -- elementary-subgraph route ------------------------------------------------

@dataclass(frozen=True)
class ElementarySubgraph:
    """Vertex-disjoint edges (pairs) and real cycles (vertex tuples with their value)."""

    edges: Tuple[Tuple[int, int], ...]
    cycles: Tuple[Tuple[Tuple[int, ...], int], ...]

    @property
    def order(self):
        return 2 * len(self.edges) + sum(len(c) for c, _ in self.cycles)

    @property
    def component_count(self):
        return len(self.edges) + len(self.cycles)

    @property
    def rank(self):
        return self.order - self.component_count

    @property
    def corank(self):
        return len(self.cycles)

    @property
    def negative_cycles(self):
        return sum(1 for _, value in self.cycles if value < 0)

    @property
    def sign(self):
        result = 1
        for _, value in self.cycles:
            result *= value
        return result


def _check_guard(g, override):
    info = structure(g)
    if override:
        return
    if info.order > MAX_GUARDED_ORDER or info.corank > MAX_GUARDED_CORANK:
        raise SizeGuardExceeded(
            f"Enumeration refused for order {info.order}, corank {info.corank} "
            f"(limits {MAX_GUARDED_ORDER} and {MAX_GUARDED_CORANK}); pass override=True to force")


def _elementary(n, neighbors, cycles_by_min):
    """All elementary subgraphs; cycles_by_min maps a vertex to cycles whose smallest vertex it is."""
    used = [False] * n
    edges, cycles = [], []

    def extend(v):
        while v < n and used[v]:
            v += 1
        if v == n:
            yield ElementarySubgraph(tuple(edges), tuple(cycles))
            return
        # v stays uncovered
        yield from extend(v + 1)
        used[v] = True
        for w in neighbors[v]:
            if w > v and not used[w]:
                used[w] = True
                edges.append((v, w))
                yield from extend(v + 1)
                edges.pop()
                used[w] = False
        for cycle, value in cycles_by_min.get(v, ()):
            if all(not used[x] for x in cycle[1:]):
                for x in cycle[1:]:
                    used[x] = True
                cycles.append((cycle, value))
                yield from extend(v + 1)
                cycles.pop()
                for x in cycle[1:]:
                    used[x] = False
        used[v] = False

    yield from extend(0)


def elementary_subgraphs(g, override=False):
    """
    Real elementary subgraphs of a mixed graph (cycles of value +-1 only).

    Raises:
        SizeGuardExceeded: Beyond the order/corank guards unless override is set
    """
    _check_guard(g, override)
    cycles_by_min = {}
    for cycle in simple_cycles(g):
        value = cycle_walk_value(g, cycle)
        if value.is_real:
            cycles_by_min.setdefault(cycle[0], []).append((cycle, 1 if value.power == 0 else -1))
    neighbors = {v: g.neighbors(v) for v in range(g.n)}
    yield from _elementary(g.n, neighbors, cycles_by_min)


def char_poly_elementary(g, override=False):
    """
    Characteristic polynomial from real elementary subgraphs.

    (-1)^k c_k sums (-1)^(r + l) 2^s over real elementary subgraphs of order k,
    with rank r, corank s and l negative cycles.
    """
    coefficients = [0] * (g.n + 1)
    for sub in elementary_subgraphs(g, override):
        k = sub.order
        term = (-1) ** (sub.rank + sub.negative_cycles) * 2 ** sub.corank
        coefficients[k] += (-1) ** k * term
    # c_k multiplies x^(n-k)
    return IntPolynomial(tuple(reversed(coefficients)))


def char_poly_signed(gamma, override=False):
    """
    Characteristic polynomial of a signed graph.

    a_k sums (-1)^|U| 2^t(U) sigma(U) over elementary subgraphs U of order k,
    where |U| counts components, t(U) cycles and sigma(U) is the product of
    cycle signs.
    """
    g = gamma.underlying
    _check_guard(g, override)
    cycles_by_min = {}
    for cycle in simple_cycles(g):
        cycles_by_min.setdefault(cycle[0], []).append((cycle, gamma.cycle_sign(cycle)))
    neighbors = {v: g.neighbors(v) for v in range(g.n)}
    coefficients = [0] * (g.n + 1)
    for sub in _elementary(g.n, neighbors, cycles_by_min):
        coefficients[sub.order] += (-1) ** sub.component_count * 2 ** sub.corank * sub.sign
    return IntPolynomial(tuple(reversed(coefficients)))


# -- Schwenk recursions ---------------------------------------------------------

def _real_cycle_term(g, cycles):
    """Sum of h(Z) * phi(g minus V(Z)) over the real cycles given."""
    total = IntPolynomial(())
    for cycle in cycles:
        value = cycle_walk_value(g, cycle)
        if value.is_real:
            sign = -1 if value == MINUS_ONE else 1
            total = total + sign * char_poly(g.delete_vertices(cycle))
    return total


def schwenk_vertex(g, u, override=False):
    """
    Vertex recursion at u.

    phi(X) = x phi(X - u) - sum over neighbours v of phi(X - u - v)
             - 2 sum over real cycles Z through u of h(Z) phi(X - V(Z)).
    """
    _check_guard(g, override)
    if not 0 <= u < g.n:
        raise GraphValidationError(f"Vertex {u} out of range [0, {g.n})")
    result = IntPolynomial.x() * char_poly(g.delete_vertices([u]))
    for v in g.neighbors(u):
        result = result - char_poly(g.delete_vertices([u, v]))
    through = [c for c in simple_cycles(g) if u in c]
    return result - 2 * _real_cycle_term(g, through)


def schwenk_edge(g, u, v, override=False):
    """
    Edge recursion at uv.

    phi(X) = phi(X - uv) - phi(X - u - v) - 2 sum over real cycles Z containing uv of h(Z) phi(X - V(Z)).
    """
    _check_guard(g, override)
    if g.edge_value(u, v) is None:
        raise GraphValidationError(f"No edge between {u} and {v}")
    result = char_poly(g.delete_edge(u, v)) - char_poly(g.delete_vertices([u, v]))
    containing = []
    for cycle in simple_cycles(g):
        closed = tuple(cycle) + (cycle[0],)
        pairs = {frozenset(p) for p in zip(closed, closed[1:])}
        if frozenset((u, v)) in pairs:
            containing.append(cycle)
    return result - 2 * _real_cycle_term(g, containing)


# -- matchings ------------------------------------------------------------------

def count_k_matchings(g, k):
    """Number of k-matchings (k pairwise disjoint edges) of the underlying graph."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if k == 0:
        return 1
    edges = tuple(g.edges())

    @lru_cache(maxsize=None)
    def count(index, used, remaining):
        if remaining == 0:
            return 1
        if len(edges) - index < remaining:
            return 0
        a, b = edges[index]
        total = count(index + 1, used, remaining)
        if not (used >> a) & 1 and not (used >> b) & 1:
            total += count(index + 1, used | (1 << a) | (1 << b), remaining - 1)
        return total

    return count(0, 0, k)


def matching_counts(g):
    """k-matching counts for k = 0..n//2."""
    return [count_k_matchings(g, k) for k in range(g.n // 2 + 1)]


def closed_form_cycle_matchings(n, k):
    """(n / (n - k)) * C(n - k, k), the k-matching count of an n-cycle for k < n."""
    if k == 0:
        return 1
    value = Fraction(n, n - k) * comb(n - k, k)
    if value.denominator != 1:
        raise ArithmeticError(f"Non-integer matching count for n={n}, k={k}")
    return int(value)


# -- evaluation and root counting ----------------------------------------------

def eval_at(p, x):
    """Exact Horner evaluation at an integer or rational."""
    result = 0
    for c in reversed(p.coefficients):
        result = result * x + c
    return result


def square_free_decomposition(p):
    """
    Square-free factors with multiplicities.

    Returns:
        list: (IntPolynomial, multiplicity) pairs of non-constant factors
    """
    _, factors = p.to_sympy().sqf_list()
    return [(IntPolynomial.from_sympy(f), m) for f, m in factors if f.degree() > 0]


def square_free_part(p):
    return product(f for f, _ in square_free_decomposition(p))


def is_square_free(p):
    return p.gcd(p.derivative()).degree <= 0


def sturm_sequence(p):
    """Sturm sequence of p over the rationals (sympy Poly objects)."""
    return sympy_sturm(p.to_sympy())


def _sign_variations(sequence, x):
    signs = []
    for s in sequence:
        value = s.eval(x)
        if value != 0:
            signs.append(1 if value > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def distinct_roots_in(p, a, b):
    """Number of distinct real roots of a square-free p in the open interval (a, b)."""
    a, b = Fraction(a), Fraction(b)
    if not a < b:
        raise ValueError("Interval must satisfy a < b")
    if p.degree <= 0:
        return 0
    sequence = sturm_sequence(p)
    ra, rb = Rational(a.numerator, a.denominator), Rational(b.numerator, b.denominator)
    count = _sign_variations(sequence, ra) - _sign_variations(sequence, rb)
    if eval_at(p, b) == 0:
        count -= 1
    return count


def count_roots_in(p, a, b):
    """
    Exact number of roots of p in the open interval (a, b), counted with multiplicity.

    Each square-free factor is counted by its Sturm sequence and weighted by
    its multiplicity.
    """
    return sum(m * distinct_roots_in(f, a, b) for f, m in square_free_decomposition(p))


def root_multiplicity(p, x):
    """Multiplicity of the rational x as a root of p (0 when not a root)."""
    x = Fraction(x)
    multiplicity = 0
    current = p
    while current.coefficients and eval_at(current, x) == 0:
        multiplicity += 1
        current = current.derivative()
    return multiplicity
