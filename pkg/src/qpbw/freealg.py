"""Root lattice data for the twisted affine rank-2 system and the weight
graded free algebra on the two raising generators e0, e1.

Weights are pairs (a0, a1) counting letters; delta = alpha0 + 2*alpha1, so a
weight decomposes as n*delta + r*alpha1 with n = a0 and r = a1 - 2*a0.

Words are packed into ints: a leading 1 bit, then one bit per letter
(0 -> e0, 1 -> e1), first letter at the most significant position.  Integer
comparison of same-length words is lexicographic order with e0 < e1.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import NamedTuple

from .coeff import LaurentPoly, RatFunc, RF_ONE, inv_qfact, qfact

# Cartan data: a_ij and the symmetric form on the root lattice
CARTAN = ((2, -1), (-4, 2))
SYM = ((4, -2), (-2, 1))  # (alpha_i, alpha_j)
# level of a real root family: 0 for long roots ((a,a)=4), 1 for short ((a,a)=1)


class Weight(NamedTuple):
    a0: int
    a1: int

    @property
    def n(self):
        return self.a0

    @property
    def r(self):
        return self.a1 - 2 * self.a0

    def __add__(self, other):
        return Weight(self.a0 + other[0], self.a1 + other[1])

    def __sub__(self, other):
        return Weight(self.a0 - other[0], self.a1 - other[1])

    @staticmethod
    def from_nr(n: int, r: int) -> "Weight":
        return Weight(n, r + 2 * n)

    def words(self) -> int:
        """Number of words of this weight in the free algebra."""
        return comb(self.a0 + self.a1, self.a0)

    def __str__(self):
        return "%dd%+da1" % (self.n, self.r)


ALPHA0 = Weight(1, 0)
ALPHA1 = Weight(0, 1)
DELTA = Weight(1, 2)


def sym(mu, nu) -> int:
    """The symmetric bilinear form on the root lattice."""
    a, b = mu[0], mu[1]
    c, d = nu[0], nu[1]
    return 4 * a * c - 2 * (a * d + b * c) + b * d


# ---------------------------------------------------------------------------
# packed words

EMPTY_WORD = 1


def word_of(letters) -> int:
    w = 1
    for x in letters:
        w = (w << 1) | x
    return w


def w_len(w: int) -> int:
    return w.bit_length() - 1


def w_letters(w: int):
    L = w.bit_length() - 1
    return [(w >> (L - 1 - k)) & 1 for k in range(L)]


_WW = {}


def w_weight(w: int) -> Weight:
    got = _WW.get(w)
    if got is None:
        L = w.bit_length() - 1
        a1 = bin(w).count("1") - 1
        got = _WW[w] = Weight(L - a1, a1)
    return got


def w_concat(a: int, b: int) -> int:
    Lb = b.bit_length() - 1
    return (a << Lb) | (b ^ (1 << Lb))


def w_first(w: int) -> int:
    return (w >> (w.bit_length() - 2)) & 1


def w_tail(w: int) -> int:
    L = w.bit_length() - 1
    return (1 << (L - 1)) | (w & ((1 << (L - 1)) - 1))


def w_delete(w: int, j: int) -> int:
    """Delete the letter at 0-based position j (from the left)."""
    L = w.bit_length() - 1
    s = L - 1 - j
    return ((w >> (s + 1)) << s) | (w & ((1 << s) - 1))


def w_reverse(w: int) -> int:
    out = 1
    L = w.bit_length() - 1
    for k in range(L):
        out = (out << 1) | ((w >> k) & 1)
    return out


def w_str(w: int) -> str:
    return "*".join("e%d" % x for x in w_letters(w)) if w != 1 else "1"


# ---------------------------------------------------------------------------
# real root labels

GT, LT = ">", "<"


class RootLabel(NamedTuple):
    """A positive real root.  kind is "+a1" (n d + a1), "-a0" (m d - a0,
    m even >= 2), "-a1" (m d - a1, m >= 1) or "+a0" (m d + a0, m even >= 0);
    n is the delta coefficient."""

    kind: str
    n: int

    @property
    def weight(self) -> Weight:
        k, n = self.kind, self.n
        if k == "+a1":
            return Weight(n, 2 * n + 1)
        if k == "-a0":
            return Weight(n - 1, 2 * n)
        if k == "-a1":
            return Weight(n, 2 * n - 1)
        if k == "+a0":
            return Weight(n + 1, 2 * n)
        raise ValueError(k)

    @property
    def side(self) -> str:
        return GT if self.kind in ("+a1", "-a0") else LT

    @property
    def level(self) -> int:
        """Divided-power level: 0 for long roots, 1 for short."""
        return 1 if self.kind in ("+a1", "-a1") else 0

    def order_key(self) -> int:
        """Position in the total order of its side, ascending."""
        k, n = self.kind, self.n
        if k == "+a1":
            return 2 * n
        if k == "-a0":
            return n - 1  # n even >= 2: positions 1, 3, 5, ...
        if k == "-a1":
            return -(2 * n - 1)
        if k == "+a0":
            return -n
        raise ValueError(k)

    def __str__(self):
        k, n = self.kind, self.n
        sign, tag = k[0], k[1:]
        if n == 0:
            return tag if sign == "+" else "-" + tag
        return "%dd%s%s" % (n, sign, tag)


def _fits(w: Weight, mu: Weight) -> bool:
    return w.a0 <= mu.a0 and w.a1 <= mu.a1


def roots_gt_within(mu: Weight):
    """All roots of the greater side fitting inside mu, ascending order."""
    out = [RootLabel("+a1", n) for n in range(mu.a0 + 1)
           if _fits(RootLabel("+a1", n).weight, mu)]
    m = 2
    while _fits(RootLabel("-a0", m).weight, mu):
        out.append(RootLabel("-a0", m))
        m += 2
    out.sort(key=RootLabel.order_key)
    return out


def roots_lt_within(mu: Weight):
    """All roots of the smaller side fitting inside mu, ascending order."""
    out = [RootLabel("-a1", n) for n in range(1, mu.a0 + 1)
           if _fits(RootLabel("-a1", n).weight, mu)]
    m = 0
    while _fits(RootLabel("+a0", m).weight, mu):
        out.append(RootLabel("+a0", m))
        m += 2
    out.sort(key=RootLabel.order_key)
    return out


# ---------------------------------------------------------------------------
# elements of the free algebra


class FreeElt:
    """A finite linear combination of words in e0, e1 with RatFunc
    coefficients, homogeneous of a single weight (or zero)."""

    __slots__ = ("weight", "terms")

    def __init__(self, weight, terms):
        self.weight = weight          # Weight or None for the zero element
        self.terms = terms            # {word:int -> RatFunc}, no zeros

    @staticmethod
    def zero() -> "FreeElt":
        return FreeElt(None, {})

    @staticmethod
    def unit(coeff=RF_ONE) -> "FreeElt":
        c = RatFunc.of(coeff)
        if c.is_zero:
            return FreeElt.zero()
        return FreeElt(Weight(0, 0), {EMPTY_WORD: c})

    @staticmethod
    def gen(i: int) -> "FreeElt":
        return FreeElt(Weight(1 - i, i), {word_of([i]): RF_ONE})

    @staticmethod
    def from_word(w: int, coeff=RF_ONE) -> "FreeElt":
        c = RatFunc.of(coeff)
        if c.is_zero:
            return FreeElt.zero()
        return FreeElt(w_weight(w), {w: c})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, FreeElt):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        if not isinstance(other, FreeElt):
            return NotImplemented
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        if self.weight != other.weight:
            raise ValueError("adding FreeElts of weights %s and %s"
                             % (self.weight, other.weight))
        d = dict(self.terms)
        for w, c in other.terms.items():
            s = d.get(w)
            s = c if s is None else s + c
            if s.is_zero:
                d.pop(w, None)
            else:
                d[w] = s
        return FreeElt(self.weight if d else None, d)

    def __neg__(self):
        return FreeElt(self.weight, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "FreeElt":
        c = RatFunc.of(c)
        if c.is_zero or self.is_zero:
            return FreeElt.zero()
        return FreeElt(self.weight, {w: cc * c for w, cc in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, LaurentPoly, RatFunc)):
            return self.scale(other)
        if not isinstance(other, FreeElt):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return FreeElt.zero()
        d = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w_concat(w1, w2)
                c = c1 * c2
                s = d.get(w)
                s = c if s is None else s + c
                if s.is_zero:
                    d.pop(w, None)
                else:
                    d[w] = s
        return FreeElt(self.weight + other.weight if d else None, d)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, LaurentPoly, RatFunc)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int):
        out = FreeElt.unit()
        for _ in range(k):
            out = out * self
        return out

    def reduce(self) -> "FreeElt":
        return FreeElt(self.weight,
                       {w: c.reduced() for w, c in self.terms.items()})

    def sorted_terms(self):
        return sorted(self.terms.items())

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for w, c in self.sorted_terms():
            parts.append("(%s)*%s" % (c, w_str(w)) if w != 1 else "(%s)" % c)
        return " + ".join(parts)

    __repr__ = __str__


def bracket_v(x: FreeElt, y: FreeElt, v) -> FreeElt:
    """[x, y]_v = xy - v yx."""
    return x * y - (y * x).scale(v)


def commutator(x: FreeElt, y: FreeElt) -> FreeElt:
    return bracket_v(x, y, RF_ONE)


def ht(x: FreeElt) -> int:
    if x.is_zero:
        raise ValueError("undefined on zero")
    return x.weight.r


def iht(x: FreeElt) -> int:
    if x.is_zero:
        raise ValueError("undefined on zero")
    return x.weight.n


def divided(x: FreeElt, k: int, level: int) -> FreeElt:
    """x^k / [k]_i!."""
    return (x ** k).scale(inv_qfact(k, level))


@lru_cache(maxsize=None)
def serre_elements():
    """The two defining relators of the plus part, with divided powers.

    For (i,j) = (0,1):  sum_k (-1)^k e0^(k) e1 e0^(2-k),   3 terms.
    For (i,j) = (1,0):  sum_k (-1)^k e1^(k) e0 e1^(5-k),   6 terms.
    """
    out = []
    for i, j in ((0, 1), (1, 0)):
        m = 1 - CARTAN[i][j]
        ei, ej = FreeElt.gen(i), FreeElt.gen(j)
        acc = FreeElt.zero()
        for k in range(m + 1):
            t = divided(ei, k, i) * ej * divided(ei, m - k, i)
            acc = acc + t.scale((-1) ** k)
        out.append(acc)
    return tuple(out)


def all_words(mu: Weight):
    """All words of the given weight, in increasing (lexicographic) order."""
    out = []

    def rec(w, a0, a1):
        if a0 == 0 and a1 == 0:
            out.append(w)
            return
        if a0:
            rec(w << 1, a0 - 1, a1)
        if a1:
            rec((w << 1) | 1, a0, a1 - 1)

    rec(1, mu.a0, mu.a1)
    return sorted(out)
