"""Brute-force verification of the basis conjectures on the quotient rings.

Works directly with the polynomial-exterior algebra on x, theta and xi
variables: symmetrize every monomial of a multidegree to span the
invariants, span the ideal piece by invariant-times-monomial products, and
read off the quotient dimension from an exact integer rank.  Everything is
deterministic: fixed monomial order, fixed pivot rule, no floats.
"""

from functools import lru_cache
from itertools import permutations, product
from math import gcd

from .qpoly import QuvPolynomial


class SuperMonomial(tuple):
    """A monomial x^a theta_M xi_N: (xexp tuple, theta mask, xi mask).

    Masks are bitmasks over variable indices 0..n-1; the fermionic factors
    are implicitly ordered ascending, thetas before xis.
    """

    __slots__ = ()

    def __new__(cls, xexp, tmask, xmask):
        return tuple.__new__(cls, (tuple(xexp), tmask, xmask))

    @property
    def xexp(self):
        return self[0]

    @property
    def tmask(self):
        return self[1]

    @property
    def xmask(self):
        return self[2]

    def degree(self):
        return (sum(self[0]), _popcount(self[1]), _popcount(self[2]))


def _popcount(mask):
    return bin(mask).count("1")


def _mask_bits(mask):
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def _compositions_of(total, slots):
    """Weak compositions of total into slots parts, lexicographic."""
    if slots == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _compositions_of(total - first, slots - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def monomial_basis(n, degree):
    """All monomials of the multidegree (r, s, t) in canonical order."""
    r, s, t = degree
    if s > n or t > n:
        return ()
    masks_s = [m for m in range(1 << n) if _popcount(m) == s]
    masks_t = [m for m in range(1 << n) if _popcount(m) == t]
    out = []
    for xexp in _compositions_of(r, n):
        for tm in masks_s:
            for xm in masks_t:
                out.append(SuperMonomial(xexp, tm, xm))
    return tuple(out)


# -- group actions ------------------------------------------------------------


@lru_cache(maxsize=None)
def symmetric_group(n):
    return tuple(permutations(range(n)))

@lru_cache(maxsize=None)
def hyperoctahedral_group(n):
    """Signed permutations as (perm, signflags); signflags bit i negates slot i."""
    return tuple((perm, flags) for perm in permutations(range(n)) for flags in range(1 << n))


def _permute_mask(mask, perm):
    """Move mask bits through the permutation, with the reordering sign."""
    images = [perm[i] for i in _mask_bits(mask)]
    sign = 1
    for i in range(len(images)):
        for j in range(i + 1, len(images)):
            if images[i] > images[j]:
                sign = -sign
    new_mask = 0
    for b in images:
        new_mask |= 1 << b
    return sign, new_mask


def group_action(g, mono, signed=False):
    """Image of a monomial under a plain or signed permutation.

    g is a permutation tuple, or (perm, signflags) when signed.  The sign
    collects the fermionic reordering parity and, in the signed case,
    (-1) per negated variable counted with its total exponent.
    """
    if signed:
        perm, flags = g
    else:
        perm, flags = g, 0
    xexp = mono.xexp
    n = len(xexp)
    new_x = [0] * n
    for i, e in enumerate(xexp):
        new_x[perm[i]] = e
    sign = 1
    if flags:
        parity = 0
        for i in range(n):
            if flags >> i & 1:
                total = xexp[i] + (mono.tmask >> i & 1) + (mono.xmask >> i & 1)
                parity ^= total & 1
        if parity:
            sign = -1
    s1, tm = _permute_mask(mono.tmask, perm)
    s2, xm = _permute_mask(mono.xmask, perm)
    return sign * s1 * s2, SuperMonomial(new_x, tm, xm)


def multiply_monomials(m1, m2):
    """Product in the superalgebra: None if a fermionic factor repeats.

    Thetas of m2 cross the xis of m1 (one sign per crossing pair), then
    each fermionic family merges with its own sorting sign.
    """
    if m1.tmask & m2.tmask or m1.xmask & m2.xmask:
        return None
    xexp = tuple(a + b for a, b in zip(m1.xexp, m2.xexp))
    sign = -1 if (_popcount(m2.tmask) * _popcount(m1.xmask)) % 2 else 1
    for mine, other in ((m1.tmask, m2.tmask), (m1.xmask, m2.xmask)):
        for b in _mask_bits(other):
            higher = mine >> (b + 1)
            if _popcount(higher) % 2:
                sign = -sign
    return sign, SuperMonomial(xexp, m1.tmask | m2.tmask, m1.xmask | m2.xmask)


def reynolds(mono, n, group_kind):
    """Symmetrize a monomial over the group (sum with signs).

    Returns a dict mapping monomials to integer coefficients; may be empty
    when the orbit sum cancels.
    """
    out = {}
    if group_kind == "a":
        for g in symmetric_group(n):
            sign, image = group_action(g, mono)
            new = out.get(image, 0) + sign
            if new:
                out[image] = new
            else:
                del out[image]
    elif group_kind == "b":
        for g in hyperoctahedral_group(n):
            sign, image = group_action(g, mono, signed=True)
            new = out.get(image, 0) + sign
            if new:
                out[image] = new
            else:
                del out[image]
    else:
        raise ValueError("group_kind must be 'a' or 'b'")
    return out


# -- exact rank ---------------------------------------------------------------


class _Echelon:
    """Incremental integer row reduction with a fixed pivot rule.

    Rows are sparse dicts over column indices.  Each incoming row is
    reduced fraction-free against stored pivot rows (pivot = smallest
    column index); surviving rows are gcd-normalized and kept.
    """

    def __init__(self):
        self.pivots = {}  # leading column -> row dict

    @property
    def rank(self):
        return len(self.pivots)

    def insert(self, row):
        """Reduce a row; store it if independent.  Returns True if rank grew."""
        row = {c: v for c, v in row.items() if v}
        while row:
            lead = min(row)
            pivot = self.pivots.get(lead)
            if pivot is None:
                g = 0
                for v in row.values():
                    g = gcd(g, v)
                if g > 1:
                    row = {c: v // g for c, v in row.items()}
                if row[lead] < 0:
                    row = {c: -v for c, v in row.items()}
                self.pivots[lead] = row
                return True
            a = pivot[lead]
            b = row[lead]
            g = gcd(a, b)
            ma, mb = a // g, b // g
            new = {}
            for c, v in row.items():
                new[c] = v * ma
            for c, v in pivot.items():
                w = new.get(c, 0) - v * mb
                if w:
                    new[c] = w
                else:
                    new.pop(c, None)
            row = new
        return False


def rank_of_rows(rows, ncols=None):
    """Exact rank of a list of sparse integer rows."""
    ech = _Echelon()
    for row in rows:
        ech.insert(row)
        if ncols is not None and ech.rank == ncols:
            break
    return ech.rank


# -- graded pieces of the quotient ----------------------------------------------


@lru_cache(maxsize=None)
def invariant_subspace(n, group_kind, degree):
    """Independent spanning vectors of the invariants in one multidegree.

    Symmetrizes every monomial of the degree and reduces the results to an
    echelon basis.  Vectors are sparse dicts over the canonical monomial
    index of the degree.
    """
    basis = monomial_basis(n, degree)
    index = {m: i for i, m in enumerate(basis)}
    ech = _Echelon()
    for mono in basis:
        vec = reynolds(mono, n, group_kind)
        if not vec:
            continue
        ech.insert({index[m]: c for m, c in vec.items()})
        if ech.rank == len(basis):
            break
    return tuple(dict(row) for _, row in sorted(ech.pivots.items()))


def invariant_dimension(n, group_kind, degree):
    return len(invariant_subspace(n, group_kind, degree))


DEFAULT_MONOMIAL_CAP = 50000


def quotient_dimension(n, group_kind, degree, max_x_degree=None, monomial_cap=DEFAULT_MONOMIAL_CAP):
    """Dimension of one multigraded piece of the coinvariant quotient.

    The ideal piece in degree D is spanned by all products of an invariant
    of degree E (0 < E <= D componentwise) with a monomial of degree D - E;
    positive grading makes this exact with no truncation error.  The
    quotient dimension is the ambient count minus the exact rank.
    """
    r, s, t = degree
    if max_x_degree is not None and r > max_x_degree:
        raise ValueError("degree %r exceeds max_x_degree=%d" % (degree, max_x_degree))
    ambient = monomial_basis(n, degree)
    if len(ambient) > monomial_cap:
        raise RuntimeError(
            "graded piece %r has %d monomials, over the cap %d; "
            "raise monomial_cap to proceed" % (degree, len(ambient), monomial_cap)
        )
    if degree == (0, 0, 0):
        return 1
    rank = _ideal_rank(n, group_kind, degree)
    return len(ambient) - rank


def _ideal_rank(n, group_kind, degree):
    r, s, t = degree
    ambient = monomial_basis(n, degree)
    index = {m: i for i, m in enumerate(ambient)}
    ncols = len(ambient)
    ech = _Echelon()
    for er, es, et in product(range(r + 1), range(s + 1), range(t + 1)):
        E = (er, es, et)
        if E == (0, 0, 0):
            continue
        invariants = invariant_subspace(n, group_kind, E)
        if not invariants:
            continue
        inv_basis = monomial_basis(n, E)
        complement = monomial_basis(n, (r - er, s - es, t - et))
        for vec in invariants:
            for mono in complement:
                row = {}
                for col, coeff in vec.items():
                    result = multiply_monomials(inv_basis[col], mono)
                    if result is None:
                        continue
                    sign, prod_mono = result
                    c = index[prod_mono]
                    new = row.get(c, 0) + sign * coeff
                    if new:
                        row[c] = new
                    else:
                        del row[c]
                if row:
                    ech.insert(row)
                    if ech.rank == ncols:
                        return ncols
    return ech.rank


def default_max_x_degree(n, group_kind):
    """Conjectured top x-degree plus a safety margin of two."""
    top = n * (n - 1) // 2 if group_kind == "a" else n * n
    return top + 2


def hilbert_via_oracle(n, group_kind, max_x_degree=None, jobs=1, monomial_cap=DEFAULT_MONOMIAL_CAP):
    """Assemble the quotient Hilbert series over all multidegrees.

    Scans x-degrees up to max_x_degree (default: conjectured top plus two)
    and all fermionic degrees up to n.  Returns (polynomial, complete,
    report) where complete is True iff every piece in the top two x-degrees
    vanished, and report lists one dict per multidegree.
    """
    if max_x_degree is None:
        max_x_degree = default_max_x_degree(n, group_kind)
    degrees = [
        (r, s, t)
        for r in range(max_x_degree + 1)
        for s in range(n + 1)
        for t in range(n + 1)
    ]
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        args = [(n, group_kind, d, max_x_degree, monomial_cap) for d in degrees]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_quotient_entry, args, chunksize=8))
    else:
        results = [_quotient_entry((n, group_kind, d, max_x_degree, monomial_cap)) for d in degrees]
    results.sort(key=lambda row: row["degree"])
    terms = {}
    complete = True
    for row in results:
        r, s, t = row["degree"]
        dim = row["quotient"]
        if dim:
            terms[(r, s, t)] = dim
            if r >= max_x_degree - 1:
                complete = False
    poly = QuvPolynomial(terms)
    report = [
        {"degree": list(row["degree"]), "ambient": row["ambient"],
         "ideal_rank": row["ideal_rank"], "quotient": row["quotient"]}
        for row in results
    ]
    return poly, complete, report


def _quotient_entry(args):
    n, group_kind, degree, max_x_degree, monomial_cap = args
    ambient = monomial_basis(n, degree)
    if len(ambient) > monomial_cap:
        raise RuntimeError(
            "graded piece %r has %d monomials, over the cap %d" % (degree, len(ambient), monomial_cap)
        )
    if degree == (0, 0, 0):
        rank = 0
    else:
        rank = _ideal_rank(n, group_kind, degree)
    return {
        "degree": tuple(degree),
        "ambient": len(ambient),
        "ideal_rank": rank,
        "quotient": len(ambient) - rank,
    }
