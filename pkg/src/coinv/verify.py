"""The aggregated cross-check suite behind the `verify` CLI command.

Each check replays one of the package's mathematical guarantees over an
exhaustive small range and returns None on success or a short witness
string on the first counterexample.  Checks take the requested n and clamp
it to the range where the guarantee is stated.
"""

from itertools import product
from math import comb, factorial

from . import basis, motzkin, oracle, smirnov, symfun
from .combinat import (
    Composition,
    IndexSubset,
    comp_of_set,
    enumerate_partitions,
    enumerate_subsets,
    hook_partition,
    set_of_comp,
)
from .qpoly import ZERO, QuvPolynomial, q_binomial, q_power


def _choose2(a):
    # algebraic binomial: nonnegative on every integer, e.g. _choose2(-1) == 1
    return a * (a - 1) // 2


# -- qpoly ---------------------------------------------------------------------


def check_q_pascal(n):
    n = min(n, 12)
    for m in range(1, n + 1):
        for r in range(1, m + 1):
            lhs = q_binomial(m, r)
            rhs = q_binomial(m - 1, r - 1) + q_power(r) * q_binomial(m - 1, r)
            if lhs != rhs:
                return "q-Pascal fails at (%d, %d)" % (m, r)
    return None


def check_q_chu_vandermonde(n):
    n = min(n, 10)
    for nn in range(1, n + 1):
        for d in range(nn):
            for k in range(nn - d):
                for l in range(nn - d):
                    lhs = q_power(_choose2(nn - d - k - l)) * q_binomial(nn - d - 1, l)
                    rhs = ZERO
                    for f in range(l + 1):
                        rhs = rhs + (
                            q_power(_choose2(nn - d - k - f) + _choose2(l - f))
                            * q_binomial(nn - d - 1 - k, f)
                            * q_binomial(k, l - f)
                        )
                    if lhs != rhs:
                        return "q-Chu-Vandermonde fails at n=%d d=%d k=%d l=%d" % (nn, d, k, l)
    return None


def check_eval_at_one(n):
    n = min(n, 6)
    for m in range(1, n + 1):
        a = basis.hilbert_series(m, "a12")
        b = smirnov.sw_q(m, 0, 0)
        prod = a * b
        if prod.evaluate() != a.evaluate() * b.evaluate():
            return "evaluation at 1 is not multiplicative at n=%d" % m
    return None


# -- combinat ------------------------------------------------------------------


def check_set_comp_inverse(n):
    n = min(n, 10)
    for m in range(1, n + 1):
        subsets = enumerate_subsets(m)
        if len(subsets) != 1 << (m - 1):
            return "subset count wrong at n=%d" % m
        for s in subsets:
            if set_of_comp(comp_of_set(s)) != s:
                return "Set(Comp(S)) != S at %s" % s
        seen = set()
        for s in subsets:
            comp = comp_of_set(s)
            if comp_of_set(set_of_comp(comp)) != comp:
                return "Comp(Set(a)) != a at %s" % comp
            seen.add(comp.parts)
        if len(seen) != len(subsets):
            return "Comp is not injective at n=%d" % m
    return None


# -- motzkin -------------------------------------------------------------------


def check_path_counts(n):
    n = min(n, 8)
    for m in range(1, n + 1):
        paths = motzkin.enumerate_paths(m, "a")
        if len(paths) != comb(2 * m - 1, m):
            return "type A path count wrong at n=%d" % m
        if len(set(paths)) != len(paths):
            return "duplicate type A paths at n=%d" % m
        if len(motzkin.enumerate_paths(m - 1, "b")) != len(paths):
            return "type A/type B count shift fails at n=%d" % m
        for p in paths:
            floor = 1
            for i in range(1, m + 1):
                if p.height_after(i) < floor:
                    return "type A floor violated by %s" % p
    return None


# -- basis ---------------------------------------------------------------------


def check_cardinality_a(n):
    n = min(n, 8)
    for m in range(1, n + 1):
        if basis.count_basis(m, "a12") != (1 << (m - 1)) * factorial(m):
            return "a12 cardinality wrong at n=%d" % m
    return None


def check_cardinality_b(n):
    n = min(n, 6)
    for m in range(1, n + 1):
        if basis.count_basis(m, "b12") != 4**m * factorial(m):
            return "b12 cardinality wrong at n=%d" % m
        if basis.count_type_b(m) != 4**m * factorial(m):
            return "type B counting recursion wrong at n=%d" % m
    return None


def check_specializations(n):
    """a12 elements with xi == 0 are exactly a11; with alpha == 0, exactly a02."""
    n = min(n, 6)
    for m in range(1, n + 1):
        a12 = basis.enumerate_basis(m, "a12")
        via_12 = sorted((b.alpha, b.theta) for b in a12 if not any(b.xi))
        a11 = sorted((b.alpha, b.theta) for b in basis.enumerate_basis(m, "a11"))
        if via_12 != a11:
            return "a12 restricted to xi=0 differs from a11 at n=%d" % m
        via_02 = sorted((b.theta, b.xi) for b in a12 if not any(b.alpha))
        a02 = sorted((b.theta, b.xi) for b in basis.enumerate_basis(m, "a02"))
        if via_02 != a02:
            return "a12 restricted to alpha=0 differs from a02 at n=%d" % m
        b12 = basis.enumerate_basis(m, "b12")
        via_b = sorted((b.alpha, b.theta) for b in b12 if not any(b.xi))
        b11 = sorted((b.alpha, b.theta) for b in basis.enumerate_basis(m, "b11"))
        if via_b != b11:
            return "b12 restricted to xi=0 differs from b11 at n=%d" % m
    return None


def check_hilbert_stirling_a(n):
    n = min(n, 7)
    for m in range(1, n + 1):
        if basis.hilbert_series(m, "a12").substitute(v=0) != basis.hilbert_11_formula(m, "a"):
            return "a12 Hilbert at v=0 differs from the q-Stirling form at n=%d" % m
    return None


def check_hilbert_stirling_b(n):
    n = min(n, 5)
    for m in range(1, n + 1):
        if basis.hilbert_series(m, "b12").substitute(v=0) != basis.hilbert_11_formula(m, "b"):
            return "b12 Hilbert at v=0 differs from the q-Stirling form at n=%d" % m
    return None


def check_hilbert_dimension(n):
    n = min(n, 7)
    for m in range(1, n + 1):
        if basis.hilbert_series(m, "a12").evaluate() != (1 << (m - 1)) * factorial(m):
            return "a12 Hilbert at q=u=v=1 wrong at n=%d" % m
        weights = basis.hilbert_series(m, "a12").substitute(q=0)
        direct = basis.hilbert_series(m, "a02")
        if weights != direct:
            return "a12 Hilbert at q=0 differs from the a02 series at n=%d" % m
    for m in range(1, min(n, 5) + 1):
        if basis.hilbert_series(m, "b12").evaluate() != 4**m * factorial(m):
            return "b12 Hilbert at q=u=v=1 wrong at n=%d" % m
    return None


def check_count_by_height(n):
    n = min(n, 7)
    for m in range(1, n + 1):
        groups = {}
        for path in motzkin.enumerate_paths(m, "a"):
            bound = basis.path_bound(path)
            size = 1
            for b in bound:
                size *= b + 1
            r = bound[-1]
            groups[r] = groups.get(r, 0) + size
        for r in range(0, m + 1):
            expect = basis.count_by_height(m, r)
            if basis.count_by_height_recursion(m, r) != expect:
                return "count_by_height recursion differs at (%d, %d)" % (m, r)
            if groups.get(r, 0) != expect:
                return "count_by_height enumeration differs at (%d, %d)" % (m, r)
    return None


def check_count_type_b_refined(n):
    n = min(n, 5)
    classes = {motzkin.UP: "U", motzkin.DOWN: "D", motzkin.HTHETA: "E", motzkin.HXI: "E"}
    for m in range(1, n + 1):
        groups = {}
        for path in motzkin.enumerate_paths(m, "b"):
            bound = basis.path_bound(path)
            size = 1
            for b in bound:
                size *= b + 1
            key = (bound[-1], classes[path.steps[-1]])
            groups[key] = groups.get(key, 0) + size
        for r in range(0, 2 * m + 2):
            for cls in ("E", "U", "D"):
                if groups.get((r, cls), 0) != basis.count_type_b_refined(m, r, cls):
                    return "type B refined count differs at n=%d r=%d class=%s" % (m, r, cls)
    return None


# -- smirnov -------------------------------------------------------------------


def check_bijection_suite(n):
    n = min(n, 7)
    for m in range(1, n + 1):
        words = smirnov.enumerate_segmented_permutations(m)
        if len(words) != (1 << (m - 1)) * factorial(m):
            return "segmented permutation count wrong at n=%d" % m
        seen = set()
        for b in basis.enumerate_basis(m, "a12"):
            word = smirnov.psi(b)
            if not word.is_valid():
                return "psi produced an invalid word for %s" % (b,)
            if word in seen:
                return "psi is not injective at %s" % (b,)
            seen.add(word)
            if smirnov.psi_inverse(word) != b:
                return "psi round trip fails at %s" % (b,)
            k, l = smirnov.ascent_descent_counts(word)
            if (b.deg_theta, b.deg_xi) != (k, l):
                return "theta/xi degree not preserved at %s" % (b,)
            if b.deg_x != smirnov.sminv(word):
                return "x-degree vs sminv fails at %s" % (b,)
            if basis.ascent_positions(b.alpha, b.theta, b.xi) != smirnov.split_positions(word):
                return "Asc != Split at %s" % (b,)
            if len(word.blocks()) != m - k - l:
                return "block count identity fails at %s" % (word,)
        if len(seen) != len(words):
            return "psi is not surjective at n=%d" % m
    return None


def check_sw_recursion(n):
    n = min(n, 7)
    for m in range(1, n + 1):
        buckets = {}
        for word in smirnov.enumerate_segmented_permutations(m):
            k, l = smirnov.ascent_descent_counts(word)
            key = (k, l)
            buckets[key] = buckets.get(key, ZERO) + q_power(smirnov.sminv(word))
        total = ZERO
        for k in range(m):
            for l in range(m - k):
                poly = smirnov.sw_q(m, k, l)
                if buckets.get((k, l), ZERO) != poly:
                    return "sw_q recursion differs from enumeration at (%d,%d,%d)" % (m, k, l)
                total = total + _shift_uv(poly, k, l)
        if total != basis.hilbert_series(m, "a12"):
            return "sum of sw_q pieces differs from the Hilbert series at n=%d" % m
    return None


def _shift_uv(poly, k, l):
    return QuvPolynomial({(a, b + k, c + l): co for (a, b, c), co in poly.terms.items()})


# -- symfun --------------------------------------------------------------------


def check_frobenius_routes(n):
    n = min(n, 6)
    for m in range(1, n + 1):
        via_basis = symfun.frobenius_qsym(m, route="basis")
        via_words = symfun.frobenius_qsym(m, route="words")
        if via_basis != via_words:
            return "the two Frobenius routes disagree at n=%d" % m
        if via_basis.total() != basis.hilbert_series(m, "a12"):
            return "Frobenius paired with h_1^n misses the Hilbert series at n=%d" % m
    return None


def qsym_monomial_expansion(expansion):
    """Expand a QSymExpansion into monomials in n variables (test oracle).

    Returns a dict from exponent vectors (length n) to QuvPolynomial.
    Each Q_{S,n} contributes one word per weakly increasing map
    {1..n} -> {1..n} that rises strictly at the positions in S.
    """
    n = expansion.n
    out = {}

    def words(prefix, pos, strict_at):
        if pos == n:
            yield tuple(prefix)
            return
        lo = prefix[-1] + (1 if pos in strict_at else 0) if prefix else 1
        for letter in range(lo, n + 1):
            prefix.append(letter)
            yield from words(prefix, pos + 1, strict_at)
            prefix.pop()

    for subset, coeff in expansion.coeffs.items():
        strict = set(subset.elements)
        for w in words([], 0, strict):
            exps = [0] * n
            for letter in w:
                exps[letter - 1] += 1
            key = tuple(exps)
            now = out.get(key, ZERO) + coeff
            if now:
                out[key] = now
            else:
                del out[key]
    return out


def check_symmetry_witness(n):
    n = min(n, 5)
    for m in range(1, n + 1):
        for k in range(m):
            for l in range(m - k):
                exp = qsym_monomial_expansion(symfun.frobenius_qsym(m, k=k, l=l))
                for key, coeff in exp.items():
                    for i in range(m - 1):
                        swapped = list(key)
                        swapped[i], swapped[i + 1] = swapped[i + 1], swapped[i]
                        if exp.get(tuple(swapped), ZERO) != coeff:
                            return "monomial expansion not symmetric at n=%d (k=%d,l=%d)" % (m, k, l)
    return None


def check_h_mu_dual(n):
    n = min(n, 5)
    for m in range(1, n + 1):
        for mu in enumerate_partitions(m):
            exponent = tuple(mu.parts) + (0,) * (m - mu.length)
            for k in range(m):
                for l in range(m - k):
                    via_theorem = symfun.h_mu_coefficient(m, k, l, mu)
                    expansion = qsym_monomial_expansion(symfun.frobenius_qsym(m, k=k, l=l))
                    via_monomials = expansion.get(exponent, ZERO).substitute(u=1, v=1)
                    if via_theorem != via_monomials:
                        return "h_mu dual-path fails at n=%d mu=%s (k=%d,l=%d)" % (m, mu, k, l)
    return None


def check_hook_identities(n):
    n = min(n, 7)
    for m in range(1, n + 1):
        for d in range(m):
            for k in range(m):
                for l in range(m - k):
                    enum = symfun.hook_schur_coefficient(m, k, l, d)
                    closed = symfun.hook_qbinomial_formula(m, k, l, d)
                    if enum != closed:
                        return "hook identity fails at n=%d d=%d k=%d l=%d" % (m, d, k, l)
                    if d == 0 and closed != symfun.sign_character_formula(m, k, l):
                        return "sign character form fails at n=%d k=%d l=%d" % (m, k, l)
    return None


def check_hook_h_dual(n):
    n = min(n, 6)
    for m in range(1, n + 1):
        for d in range(m):
            mu = hook_partition(m, d)
            for k in range(m):
                for l in range(m - k):
                    if symfun.hook_h_coefficient(m, k, l, d) != symfun.h_mu_coefficient(m, k, l, mu):
                        return "hook h-coefficient differs from h_mu at n=%d d=%d k=%d l=%d" % (m, d, k, l)
    return None


def check_hook_characterization(n):
    n = min(n, 7)
    for m in range(1, n + 1):
        for b in basis.enumerate_basis(m, "a12"):
            asc = basis.ascent_positions(b.alpha, b.theta, b.xi)
            for d in range(m):
                direct = asc == tuple(range(d + 1, m))
                if symfun.hook_asc_characterization(b, d) != direct:
                    return "hook ascent characterization differs at %s d=%d" % (b, d)
    return None


def check_frobenius_specializations(n):
    n = min(n, 6)
    for m in range(1, n + 1):
        frob = symfun.frobenius_qsym(m)
        from_a02 = symfun.QSymExpansion(m)
        for b in basis.enumerate_basis(m, "a02"):
            key = IndexSubset(basis.ascent_positions(b.alpha, b.theta, b.xi), m)
            from_a02.add(key, QuvPolynomial({(0, b.deg_theta, b.deg_xi): 1}))
        if frob.substitute(q=0) != from_a02:
            return "q=0 specialization differs from the a02 expansion at n=%d" % m
        from_a11 = symfun.QSymExpansion(m)
        for b in basis.enumerate_basis(m, "a11"):
            key = IndexSubset(basis.ascent_positions(b.alpha, b.theta, b.xi), m)
            from_a11.add(key, QuvPolynomial({(b.deg_x, b.deg_theta, 0): 1}))
        if frob.substitute(v=0) != from_a11:
            return "v=0 specialization differs from the a11 expansion at n=%d" % m
    return None


def check_slinky(n):
    n = min(n, 8)
    for m in range(1, n + 1):
        for subset in enumerate_subsets(m):
            comp = comp_of_set(subset)
            geometric = symfun.slinky(comp)
            reference = symfun.straighten(comp)
            if geometric != reference:
                return "slinky and straightening disagree at %s" % comp
            if geometric.sign and geometric.shape.n != m:
                return "slinky shape has the wrong size at %s" % comp
        for d in range(m):
            hook = hook_partition(m, d)
            res = symfun.slinky(Composition(hook.parts))
            if res.sign != 1 or res.shape != hook:
                return "hook composition does not fix itself at n=%d d=%d" % (m, d)
    return None


# -- oracle --------------------------------------------------------------------


def check_oracle_type_a(n):
    n = min(n, 3)
    for m in range(1, n + 1):
        poly, complete, _ = oracle.hilbert_via_oracle(m, "a")
        if not complete:
            return "oracle truncation band is nonzero at n=%d" % m
        if poly != basis.hilbert_series(m, "a12"):
            return "oracle differs from the conjectural Hilbert series at n=%d" % m
    return None


def check_oracle_type_b(n):
    n = min(n, 2)
    for m in range(1, n + 1):
        poly, complete, _ = oracle.hilbert_via_oracle(m, "b")
        if not complete:
            return "type B oracle truncation band is nonzero at n=%d" % m
        if poly != basis.hilbert_series(m, "b12"):
            return "type B oracle differs from the conjectural series at n=%d" % m
    return None


def check_oracle_exactness(n):
    """Recompute n=2 with a larger x-degree window; per-degree data must agree."""
    if n < 2:
        return None
    base = oracle.hilbert_via_oracle(2, "a")[2]
    wide = oracle.hilbert_via_oracle(2, "a", max_x_degree=oracle.default_max_x_degree(2, "a") + 2)[2]
    wide_map = {tuple(r["degree"]): r for r in wide}
    for row in base:
        other = wide_map[tuple(row["degree"])]
        if (row["ideal_rank"], row["quotient"]) != (other["ideal_rank"], other["quotient"]):
            return "per-degree ranks changed with a larger window at %r" % (row["degree"],)
    return None


ALL_CHECKS = [
    ("q-pascal", check_q_pascal),
    ("q-chu-vandermonde", check_q_chu_vandermonde),
    ("eval-at-one", check_eval_at_one),
    ("set-comp-inverse", check_set_comp_inverse),
    ("path-counts", check_path_counts),
    ("cardinality-a", check_cardinality_a),
    ("cardinality-b", check_cardinality_b),
    ("specializations", check_specializations),
    ("hilbert-stirling-a", check_hilbert_stirling_a),
    ("hilbert-stirling-b", check_hilbert_stirling_b),
    ("hilbert-dimension", check_hilbert_dimension),
    ("count-by-height", check_count_by_height),
    ("count-type-b-refined", check_count_type_b_refined),
    ("bijection-suite", check_bijection_suite),
    ("sw-recursion", check_sw_recursion),
    ("frobenius-routes", check_frobenius_routes),
    ("symmetry-witness", check_symmetry_witness),
    ("h-mu-dual", check_h_mu_dual),
    ("hook-identities", check_hook_identities),
    ("hook-h-dual", check_hook_h_dual),
    ("hook-characterization", check_hook_characterization),
    ("frobenius-specializations", check_frobenius_specializations),
    ("slinky", check_slinky),
    ("oracle-type-a", check_oracle_type_a),
    ("oracle-type-b", check_oracle_type_b),
    ("oracle-exactness", check_oracle_exactness),
]


def run_all(n, report=print):
    """Run every check clamped to n; stop at the first failure.

    Returns 0 when everything passes, 1 otherwise.
    """
    for name, fn in ALL_CHECKS:
        witness = fn(n)
        if witness is None:
            report("ok   %s" % name)
        else:
            report("FAIL %s: %s" % (name, witness))
            return 1
    return 0
