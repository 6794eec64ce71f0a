"""Segmented Smirnov words, their statistics, and the bijection to the basis.

A segmented word is a word with bars splitting it into blocks; inside a
block adjacent letters must differ.  When the content is (1^n) the words
are segmented permutations, and an insertion bijection matches them with
the a12 basis elements, carrying ascents to the theta-degree, descents to
the xi-degree and the sminversion count to the x-degree.
"""

from functools import lru_cache
from itertools import permutations
from typing import NamedTuple

from .basis import BasisElement
from .combinat import IndexSubset
from .qpoly import ZERO, q_integer


class SegmentedWord(NamedTuple):
    """Letters plus the set of positions followed by a bar (1-based, sorted)."""

    letters: tuple
    splits: tuple

    @property
    def n(self):
        return len(self.letters)

    def blocks(self):
        """The blocks as a tuple of tuples."""
        out = []
        start = 0
        for s in self.splits:
            out.append(self.letters[start:s])
            start = s
        out.append(self.letters[start:])
        return tuple(out)

    def content(self):
        """Multiplicity vector: entry i-1 counts the letter i."""
        top = max(self.letters) if self.letters else 0
        counts = [0] * top
        for w in self.letters:
            counts[w - 1] += 1
        return tuple(counts)

    def is_valid(self):
        """Adjacent letters inside a block must differ."""
        bars = set(self.splits)
        return all(
            self.letters[i] != self.letters[i + 1]
            for i in range(len(self.letters) - 1)
            if i + 1 not in bars
        )

    def __str__(self):
        return format_word(self)


def format_word(word):
    """Word literal with spaces inside blocks and bars between, e.g. "2|1 3"."""
    return "|".join(" ".join(str(w) for w in blk) for blk in word.blocks())


def parse_word(text):
    """Parse a word literal; letters may have several digits."""
    letters = []
    splits = []
    for i, blk in enumerate(text.split("|")):
        if i:
            splits.append(len(letters))
        letters.extend(int(tok) for tok in blk.split())
    word = SegmentedWord(tuple(letters), tuple(splits))
    if not word.is_valid():
        raise ValueError("equal adjacent letters inside a block: %r" % text)
    return word


# -- statistics ---------------------------------------------------------------


def ascent_descent_counts(word):
    """(k, l): numbers of within-block rises and falls."""
    bars = set(word.splits)
    k = l = 0
    w = word.letters
    for i in range(len(w) - 1):
        if i + 1 in bars:
            continue
        if w[i] < w[i + 1]:
            k += 1
        elif w[i] > w[i + 1]:
            l += 1
    return k, l


def _initial_flags(word):
    bars = set(word.splits)
    return [p == 0 or p in bars for p in range(len(word.letters))]


def sminv(word):
    """Number of sminversions of a segmented word.

    A pair i < j with w_i > w_j counts when (1) w_j starts its block, or
    (2) w_{j-1} > w_i, or (3) i != j-1, w_{j-1} = w_i and w_{j-1} starts
    its block, or (4) i != j-1 and w_{j-2} > w_{j-1} = w_i.  On
    permutations only the first two can fire.
    """
    w = word.letters
    n = len(w)
    initial = _initial_flags(word)
    count = 0
    for j in range(1, n):
        for i in range(j):
            if w[i] <= w[j]:
                continue
            if initial[j]:
                count += 1
            elif w[j - 1] > w[i]:
                count += 1
            elif i != j - 1 and w[j - 1] == w[i]:
                if initial[j - 1]:
                    count += 1
                elif j >= 2 and w[j - 2] > w[j - 1]:
                    count += 1
    return count


def thick_thin(word):
    """Per-position flags: "thick" (block-initial or fall end) or "thin"."""
    w = word.letters
    initial = _initial_flags(word)
    out = []
    for p in range(len(w)):
        if initial[p]:
            out.append("thick")
        elif w[p - 1] > w[p]:
            out.append("thick")
        else:
            out.append("thin")
    return tuple(out)


def split_positions(word):
    """1-based splitting values of a segmented permutation (tuple output).

    The value m splits when, with i the position of m and j of m+1:
    i thick and j thin; or both thin with i < j; or both thick with j < i.
    """
    w = word.letters
    n = len(w)
    if sorted(w) != list(range(1, n + 1)):
        raise ValueError("splitting values are defined for segmented permutations")
    kind = thick_thin(word)
    pos = [0] * (n + 2)
    for p, letter in enumerate(w):
        pos[letter] = p
    out = []
    for m in range(1, n):
        i = pos[m]
        j = pos[m + 1]
        ti, tj = kind[i], kind[j]
        if ti == "thick" and tj == "thin":
            out.append(m)
        elif ti == tj == "thin" and i < j:
            out.append(m)
        elif ti == tj == "thick" and j < i:
            out.append(m)
    return tuple(out)


def split_set(word):
    """The splitting values as an IndexSubset."""
    return IndexSubset(split_positions(word), word.n)


# -- enumeration ---------------------------------------------------------------


def enumerate_segmented_permutations(n, k=None, l=None):
    """All 2^(n-1) n! segmented permutations of {1,...,n}.

    Ordered by underlying permutation (lexicographic) and then by the
    bitmask of the split set.  Passing k and/or l filters on the ascent
    and descent counts.
    """
    if n < 1:
        raise ValueError("needs n >= 1")
    out = []
    for perm in permutations(range(1, n + 1)):
        for mask in range(1 << (n - 1)):
            splits = tuple(i + 1 for i in range(n - 1) if mask >> i & 1)
            word = SegmentedWord(perm, splits)
            if k is not None or l is not None:
                ka, la = ascent_descent_counts(word)
                if k is not None and ka != k:
                    continue
                if l is not None and la != l:
                    continue
            out.append(word)
    return out


def enumerate_segmented_words(content, k=None, l=None):
    """All segmented Smirnov words of the given content vector.

    content[i] is the multiplicity of the letter i+1.  The Smirnov
    condition (no equal adjacent letters inside a block) is enforced;
    ordering is by letters, then split bitmask.
    """
    n = sum(content)
    if n < 1:
        raise ValueError("needs a nonempty content")
    words = []

    def rec(prefix, counts):
        if len(prefix) == n:
            words.append(tuple(prefix))
            return
        for letter in range(1, len(counts) + 1):
            if counts[letter - 1] == 0:
                continue
            counts[letter - 1] -= 1
            prefix.append(letter)
            rec(prefix, counts)
            prefix.pop()
            counts[letter - 1] += 1

    rec([], list(content))

    out = []
    for letters in words:
        equal_adjacent = [i + 1 for i in range(n - 1) if letters[i] == letters[i + 1]]
        forced = 0
        for p in equal_adjacent:
            forced |= 1 << (p - 1)
        free = [i for i in range(n - 1) if not forced >> i & 1]
        for mask in range(1 << len(free)):
            bits = forced
            for idx, i in enumerate(free):
                if mask >> idx & 1:
                    bits |= 1 << i
            splits = tuple(i + 1 for i in range(n - 1) if bits >> i & 1)
            word = SegmentedWord(letters, splits)
            if k is not None or l is not None:
                ka, la = ascent_descent_counts(word)
                if k is not None and ka != k:
                    continue
                if l is not None and la != l:
                    continue
            out.append(word)
    return out


# -- the q-count recursion -------------------------------------------------------


@lru_cache(maxsize=None)
def sw_q(n, k, l):
    """The sminv generating polynomial over segmented permutations SW(1^n,k,l).

    Satisfies sw_q(n,k,l) = [n-k-l]_q (sw_q(n-1,k,l) + sw_q(n-1,k,l-1)
    + sw_q(n-1,k-1,l) + sw_q(n-1,k-1,l-1)), starting from the empty word.
    """
    if n < 0:
        raise ValueError("needs n >= 0")
    if n == 0:
        return q_integer(1) if k == 0 and l == 0 else ZERO
    if k < 0 or l < 0 or k + l >= n:
        return ZERO
    factor = q_integer(n - k - l)
    return factor * (
        sw_q(n - 1, k, l)
        + sw_q(n - 1, k, l - 1)
        + sw_q(n - 1, k - 1, l)
        + sw_q(n - 1, k - 1, l - 1)
    )


# -- the insertion bijection ------------------------------------------------------


def psi(element):
    """Map an a12 basis element to its segmented permutation.

    Letters 2..n are inserted in order; the exponent alpha_i names the
    block position counted from the right (starting at 1) where i lands:
    a bare up-step opens a new block there, a theta step appends to it, a
    xi step prepends to it, and a down-step replaces a bar with i so that
    the merged block sits there.
    """
    if element.variant != "a12":
        raise ValueError("psi is defined on a12 elements")
    blocks = [[1]]
    alpha, theta, xi = element.alpha, element.theta, element.xi
    for idx in range(1, element.n):
        i = idx + 1
        p = alpha[idx] + 1
        t, x = theta[idx], xi[idx]
        if t == 0 and x == 0:
            blocks.insert(len(blocks) - p + 1, [i])
        elif t == 1 and x == 0:
            blocks[len(blocks) - p].append(i)
        elif t == 0 and x == 1:
            blocks[len(blocks) - p].insert(0, i)
        else:
            j = len(blocks) - 1 - p
            blocks[j] = blocks[j] + [i] + blocks[j + 1]
            del blocks[j + 1]
    letters = []
    splits = []
    for blk in blocks[:-1]:
        letters.extend(blk)
        splits.append(len(letters))
    letters.extend(blocks[-1])
    return SegmentedWord(tuple(letters), tuple(splits))


def psi_inverse(word):
    """Invert psi: peel letters n, n-1, ..., 2 off the segmented permutation.

    A letter alone in its block was an up-step; last (resp. first) in a
    larger block, a theta (resp. xi) step; interior, a down-step whose
    removal re-inserts the bar.  The block position from the right gives
    alpha_i + 1.
    """
    n = word.n
    if sorted(word.letters) != list(range(1, n + 1)):
        raise ValueError("psi_inverse needs a segmented permutation")
    blocks = [list(blk) for blk in word.blocks()]
    alpha = [0] * n
    theta = [0] * n
    xi = [0] * n
    for i in range(n, 1, -1):
        for bi, blk in enumerate(blocks):
            if i in blk:
                break
        else:
            raise ValueError("letter %d missing" % i)
        p = len(blocks) - bi
        alpha[i - 1] = p - 1
        where = blk.index(i)
        if len(blk) == 1:
            del blocks[bi]
        elif where == len(blk) - 1:
            theta[i - 1] = 1
            blk.pop()
        elif where == 0:
            xi[i - 1] = 1
            blk.pop(0)
        else:
            theta[i - 1] = 1
            xi[i - 1] = 1
            blocks[bi : bi + 1] = [blk[:where], blk[where + 1 :]]
    if blocks != [[1]]:
        raise ValueError("word did not reduce to the single letter 1")
    return BasisElement(tuple(alpha), tuple(theta), tuple(xi), "a12")
