"""Conjectural monomial bases for the bosonic-fermionic coinvariant rings.

Five families are supported, named by variant strings:

  a12 : x^alpha theta_T xi_S over type A paths, alpha bounded by the
        generalized staircase alpha(T, S);
  a11 : x^alpha theta_T over T subset of {2,...,n}, bound alpha(T);
  a02 : theta_T xi_S over type A paths (no x part);
  b12 : type B analogue with the generalized beta(T, S) staircase;
  b11 : x^beta theta_T over T subset of {1,...,n}, bound beta(T).

Elements are stored as exponent data only; the sign that reordering the
fermionic factors would introduce is normalized away.
"""

from functools import lru_cache
from itertools import product
from math import comb, factorial
from typing import NamedTuple

from . import motzkin
from .combinat import IndexSubset
from .qpoly import ONE, ZERO, QuvPolynomial, q_double_factorial_even, q_factorial, q_integer, q_stirling

VARIANTS = ("a12", "a11", "a02", "b12", "b11")


class BasisElement(NamedTuple):
    """A monomial x^alpha theta_T xi_S, as exponent vectors.

    alpha holds the x-exponents, theta and xi are 0/1 occupancy vectors
    (theta[i] == 1 iff theta_{i+1} divides the monomial).
    """

    alpha: tuple
    theta: tuple
    xi: tuple
    variant: str

    @property
    def n(self):
        return len(self.alpha)

    @property
    def theta_set(self):
        return frozenset(i + 1 for i, b in enumerate(self.theta) if b)

    @property
    def xi_set(self):
        return frozenset(i + 1 for i, b in enumerate(self.xi) if b)

    @property
    def deg_x(self):
        return sum(self.alpha)

    @property
    def deg_theta(self):
        return sum(self.theta)

    @property
    def deg_xi(self):
        return sum(self.xi)

    def monomial_str(self):
        """String form like "x2*x3^2*th3*xi3", "1" if empty.

        The x factors come first; fermionic factors follow in ascending
        index order, theta before xi at a shared index.
        """
        parts = []
        for i, e in enumerate(self.alpha):
            if e == 1:
                parts.append("x%d" % (i + 1))
            elif e > 1:
                parts.append("x%d^%d" % (i + 1, e))
        for i in range(self.n):
            if self.theta[i]:
                parts.append("th%d" % (i + 1))
            if self.xi[i]:
                parts.append("xi%d" % (i + 1))
        return "*".join(parts) if parts else "1"

    def to_json(self):
        return {"alpha": list(self.alpha), "theta": list(self.theta), "xi": list(self.xi)}

    def path(self):
        """The decorated path carrying this element (a12/a02/b12 variants)."""
        if self.variant in ("a12", "a02"):
            kind = "a"
        elif self.variant == "b12":
            kind = "b"
        else:
            raise ValueError("variant %s has no path model" % self.variant)
        steps = tuple(_STEP_OF_BITS[t, x] for t, x in zip(self.theta, self.xi))
        return motzkin.MotzkinPath(steps, kind)


_STEP_OF_BITS = {
    (0, 0): motzkin.UP,
    (1, 0): motzkin.HTHETA,
    (0, 1): motzkin.HXI,
    (1, 1): motzkin.DOWN,
}


# -- staircase bounds --------------------------------------------------------


def alpha_sequence(T, S, n):
    """The generalized type A staircase for decoration sets T, S.

    Starts at 0 and steps by -1 + [i not in T] + [i not in S].  Raises
    ValueError when (T, S) does not come from a valid type A path, which
    surfaces as a negative entry (or a decoration in position 1).
    """
    T = frozenset(T)
    S = frozenset(S)
    if 1 in T or 1 in S:
        raise ValueError("type A paths start with an up-step; position 1 cannot carry a decoration")
    if any(not 2 <= i <= n for i in T | S):
        raise ValueError("decoration positions must lie in {2,...,n}")
    seq = [0]
    for i in range(2, n + 1):
        nxt = seq[-1] - 1 + (i not in T) + (i not in S)
        if nxt < 0:
            raise ValueError("invalid (T, S): bound drops below 0 at position %d" % i)
        seq.append(nxt)
    return tuple(seq)


def beta_sequence(T, S, n):
    """The generalized type B staircase for decoration sets T, S.

    Starts at -1 + [1 not in T] + [1 not in S]; later entries add
    -2 + [i not in T] + [i-1 not in T] + [i not in S] + [i-1 not in S].
    A negative entry means the underlying type B path dips below 0.
    """
    T = frozenset(T)
    S = frozenset(S)
    if any(not 1 <= i <= n for i in T | S):
        raise ValueError("decoration positions must lie in {1,...,n}")
    first = -1 + (1 not in T) + (1 not in S)
    if first < 0:
        raise ValueError("invalid (T, S): bound drops below 0 at position 1")
    seq = [first]
    for i in range(2, n + 1):
        nxt = seq[-1] - 2 + (i not in T) + (i - 1 not in T) + (i not in S) + (i - 1 not in S)
        if nxt < 0:
            raise ValueError("invalid (T, S): bound drops below 0 at position %d" % i)
        seq.append(nxt)
    return tuple(seq)


def super_artin_bound(T, n, kind):
    """The (1,1) staircase: alpha(T) for kind "a", beta(T) for kind "b"."""
    T = frozenset(T)
    if kind == "a":
        if any(not 2 <= i <= n for i in T):
            raise ValueError("type A (1,1) needs T inside {2,...,n}")
        seq = [0]
        for i in range(2, n + 1):
            seq.append(seq[-1] + (i not in T))
    elif kind == "b":
        if any(not 1 <= i <= n for i in T):
            raise ValueError("type B (1,1) needs T inside {1,...,n}")
        seq = [1 if 1 not in T else 0]
        for i in range(2, n + 1):
            seq.append(seq[-1] + (i not in T) + (i - 1 not in T))
    else:
        raise ValueError("kind must be 'a' or 'b'")
    return tuple(seq)


def path_bound(path):
    """The staircase bound attached to a decorated path."""
    T, S = path.weight_sets()
    if path.variant == "a":
        return alpha_sequence(T, S, path.n)
    return beta_sequence(T, S, path.n)


def stair_q(path):
    """The product of q-integers [k+1]_q over the path's staircase bound."""
    out = ONE
    for k in path_bound(path):
        out = out * q_integer(k + 1)
    return out


def stair_q_from_sets(T, S, n, kind):
    """stair_q given the decoration sets directly; kind "a" or "b"."""
    bound = alpha_sequence(T, S, n) if kind == "a" else beta_sequence(T, S, n)
    out = ONE
    for k in bound:
        out = out * q_integer(k + 1)
    return out


# -- enumeration --------------------------------------------------------------


def _bits_of_path(path):
    theta = tuple(1 if s in (motzkin.HTHETA, motzkin.DOWN) else 0 for s in path.steps)
    xi = tuple(1 if s in (motzkin.HXI, motzkin.DOWN) else 0 for s in path.steps)
    return theta, xi


def _subset_bits(n, lowest):
    """All 0/1 vectors of length n that vanish below position `lowest`, by bitmask."""
    width = n - lowest + 1
    for mask in range(1 << width):
        yield tuple([0] * (lowest - 1) + [mask >> i & 1 for i in range(width)])


@lru_cache(maxsize=8)
def enumerate_basis(n, variant):
    """The full basis for the given variant, in canonical order.

    Path-borne variants are ordered by path (lexicographic step order),
    then by alpha lexicographically; the (1,1) variants are ordered by
    the bitmask of T, then by exponent vector.
    """
    if n < 1:
        raise ValueError("enumerate_basis needs n >= 1")
    if variant not in VARIANTS:
        raise ValueError("unknown variant %r" % (variant,))
    out = []
    if variant in ("a12", "b12"):
        for path in motzkin.enumerate_paths(n, variant[0]):
            theta, xi = _bits_of_path(path)
            bound = path_bound(path)
            for alpha in product(*(range(b + 1) for b in bound)):
                out.append(BasisElement(alpha, theta, xi, variant))
    elif variant == "a02":
        zero = (0,) * n
        for path in motzkin.enumerate_paths(n, "a"):
            theta, xi = _bits_of_path(path)
            out.append(BasisElement(zero, theta, xi, variant))
    else:
        lowest = 2 if variant == "a11" else 1
        zero_xi = (0,) * n
        for theta in _subset_bits(n, lowest):
            T = frozenset(i + 1 for i, b in enumerate(theta) if b)
            bound = super_artin_bound(T, n, variant[0])
            for alpha in product(*(range(b + 1) for b in bound)):
                out.append(BasisElement(alpha, theta, zero_xi, variant))
    return out


def count_basis(n, variant):
    """Cardinality of the basis without materializing it (streams over paths)."""
    if variant in ("a12", "b12"):
        total = 0
        for path in motzkin.enumerate_paths(n, variant[0]):
            prod = 1
            for b in path_bound(path):
                prod *= b + 1
            total += prod
        return total
    return len(enumerate_basis(n, variant))


# -- series -------------------------------------------------------------------


def hilbert_series(n, variant):
    """The trigraded Hilbert series: sum of u^|T| v^|S| q^(sum alpha)."""
    if n < 1:
        raise ValueError("hilbert_series needs n >= 1")
    total = ZERO
    if variant in ("a12", "b12"):
        for path in motzkin.enumerate_paths(n, variant[0]):
            T, S = path.weight_sets()
            total = total + QuvPolynomial({(0, len(T), len(S)): 1}) * stair_q(path)
    elif variant == "a02":
        terms = {}
        for path in motzkin.enumerate_paths(n, "a"):
            T, S = path.weight_sets()
            key = (0, len(T), len(S))
            terms[key] = terms.get(key, 0) + 1
        total = QuvPolynomial(terms)
    else:
        lowest = 2 if variant == "a11" else 1
        for theta in _subset_bits(n, lowest):
            T = frozenset(i + 1 for i, b in enumerate(theta) if b)
            piece = QuvPolynomial({(0, len(T), 0): 1})
            for b in super_artin_bound(T, n, variant[0]):
                piece = piece * q_integer(b + 1)
            total = total + piece
    return total


def hilbert_11_formula(n, kind):
    """Closed q-Stirling form of the (1,1) Hilbert series, kind "a" or "b".

    Type a sums u^(n-k) [k]_q! Stir_q(n,k); type b sums
    u^(n-k) [2k]_q!! Stir^B_q(n,k).  The k = 0 term is included: it
    vanishes in type a but carries u^n in type b.
    """
    if n < 1:
        raise ValueError("hilbert_11_formula needs n >= 1")
    total = ZERO
    for k in range(0, n + 1):
        fact = q_factorial(k) if kind == "a" else q_double_factorial_even(k)
        term = fact * q_stirling(n, k, kind)
        total = total + QuvPolynomial({(0, n - k, 0): 1}) * term
    return total


# -- ascents ------------------------------------------------------------------


def ascent_positions(alpha, theta, xi):
    """1-based ascent positions of an exponent triple (tuple output).

    Position i is an ascent when theta rises at i, or both theta bits are 1
    with alpha_i >= alpha_{i+1} + xi_{i+1}, or both are 0 with
    alpha_i < alpha_{i+1} + xi_{i+1}.
    """
    out = []
    for i in range(len(alpha) - 1):
        t0, t1 = theta[i], theta[i + 1]
        if t0 < t1:
            out.append(i + 1)
        elif t0 == t1 == 1 and alpha[i] >= alpha[i + 1] + xi[i + 1]:
            out.append(i + 1)
        elif t0 == t1 == 0 and alpha[i] < alpha[i + 1] + xi[i + 1]:
            out.append(i + 1)
    return tuple(out)


def ascent_set(element):
    """The ascent set of a basis element as an IndexSubset."""
    return IndexSubset(ascent_positions(element.alpha, element.theta, element.xi), element.n)


# -- counting recursions --------------------------------------------------------


def count_by_height(n, r):
    """Number of a12 elements whose staircase ends at height r: n! C(n-1, r).

    The final staircase value alpha_n equals the final path height minus 1.
    """
    if n < 1:
        raise ValueError("count_by_height needs n >= 1")
    if r < 0:
        return 0
    return factorial(n) * comb(n - 1, r)


@lru_cache(maxsize=None)
def count_by_height_recursion(n, r):
    """The same count through the step-by-step recursion.

    p(n,r) = (r+1) (p(n-1,r-1) + 2 p(n-1,r) + p(n-1,r+1)), anchored at
    p(1,r) = [r == 0] because the first step of a type A path is forced up.
    """
    if n < 1:
        raise ValueError("count_by_height_recursion needs n >= 1")
    if r < 0 or r > n - 1:
        return 0
    if n == 1:
        return 1 if r == 0 else 0
    return (r + 1) * (
        count_by_height_recursion(n - 1, r - 1)
        + 2 * count_by_height_recursion(n - 1, r)
        + count_by_height_recursion(n - 1, r + 1)
    )


@lru_cache(maxsize=None)
def count_type_b_refined(n, r, stepclass):
    """Type B count refined by final staircase height and last-step class.

    stepclass "E" means the last step is horizontal, "U" up, "D" down.
    The recursions track how the final staircase value beta_n responds to
    the last two steps; the base case puts the empty path in class E.
    """
    if stepclass not in ("E", "U", "D"):
        raise ValueError("stepclass must be 'E', 'U' or 'D'")
    if n < 0:
        raise ValueError("count_type_b_refined needs n >= 0")
    if r < 0:
        return 0
    if n == 0:
        return 1 if (stepclass == "E" and r == 0) else 0
    if stepclass == "E":
        return 2 * (r + 1) * (
            count_type_b_refined(n - 1, r, "E")
            + count_type_b_refined(n - 1, r - 1, "U")
            + count_type_b_refined(n - 1, r + 1, "D")
        )
    if stepclass == "U":
        return (r + 1) * (
            count_type_b_refined(n - 1, r - 1, "E")
            + count_type_b_refined(n - 1, r - 2, "U")
            + count_type_b_refined(n - 1, r, "D")
        )
    return (r + 1) * (
        count_type_b_refined(n - 1, r + 1, "E")
        + count_type_b_refined(n - 1, r, "U")
        + count_type_b_refined(n - 1, r + 2, "D")
    )


def count_type_b(n):
    """Cardinality of the b12 basis by the refined recursion: 4^n n!."""
    if n < 0:
        raise ValueError("count_type_b needs n >= 0")
    total = 0
    for r in range(0, 2 * n + 2):
        for cls in ("E", "U", "D"):
            total += count_type_b_refined(n, r, cls)
    return total
