"""Kashiwara derivations, the Drinfeld pairing and the zero tests built on it.

The pairing on words is computed through the scaled kernel

    S(w, w') = (w, w') * (1 - q1^-2)^a1 * (1 - q0^-2)^a0

which satisfies S(empty, empty) = 1 and

    S(e_i t, y) = sum_j  v^(2 (alpha_i, |prefix_j|)) S(t, y \\ j)

over the positions j of y carrying the letter i (the adjunction against
the left derivation _i r).  Every S value is a Laurent polynomial with
integer coefficients.  Values are stored as big integers: a polynomial is
encoded by evaluating at v = 2^KBITS after shifting its valuation to zero.
Encoding is a ring homomorphism, and as long as all coefficients stay below
2^(KBITS-1) in absolute value (tracked exactly via 1-norm bounds) a zero
integer certifies a zero polynomial, so the tests remain exact.

Zero testing an element x of the plus part uses (x, x) = 0.  The form is
anisotropic on every weight space: in the canonical basis the Gram matrix
is the identity plus terms in q1^-1 Z[[q1^-1]], hence positive definite
over the Laurent series field, so (x, x) = 0 forces x = 0.  Above a size
cap the test descends through the left derivations instead (x = 0 iff
_i r(x) = 0 for both i).
"""

from __future__ import annotations

import random
from math import comb

from .coeff import LaurentPoly, RatFunc, RF_ONE, RF_ZERO, LP_ONE, vpow
from .freealg import (FreeElt, Weight, all_words, serre_elements, sym,
                      w_concat, w_delete, w_len, w_letters, w_tail, w_weight,
                      EMPTY_WORD)

# v-exponent of q^((alpha_i, nu)) for nu = (a, b): row i gives (per-a, per-b)
IPV = ((8, -4), (-4, 2))

KBITS = 128
_KMASK = (1 << KBITS) - 1
_KHALF = 1 << (KBITS - 1)

# direct (x,x) zero tests allowed up to this many words in the weight space
DIRECT_CAP = 900

# encoded kernel values: (w1, w2) min/max ordered -> (bigint, base, bound)
_SP = {}
# modular kernels: (p, a) -> {(w1, w2) -> int}
_SPMOD = {}


def cache_clear():
    _SP.clear()
    _SPMOD.clear()


def cache_size():
    return len(_SP)


def _encode(poly: dict) -> tuple:
    """Encode an integer Laurent dict as (bigint, base, bound)."""
    if not poly:
        return (0, 0, 0)
    base = min(poly)
    n = 0
    bound = 0
    for e, c in poly.items():
        n += c << (KBITS * (e - base))
        bound += abs(c)
    return (n, base, bound)


def _decode(val: tuple) -> LaurentPoly:
    n, base, bound = val
    if bound >= _KHALF:
        raise OverflowError("kernel coefficient bound exceeded")
    out = {}
    e = base
    while n:
        d = n & _KMASK
        if d >= _KHALF:
            d -= 1 << KBITS
        if d:
            out[e] = d
        n = (n - d) >> KBITS
        e += 1
    return LaurentPoly(out)


def _val_add(acc, val, shift, scale=1):
    """acc + scale * v^shift * val on encoded triples."""
    n2, b2, bd2 = val
    if n2 == 0:
        return acc
    n1, b1, bd1 = acc
    b2 += shift
    if n1 == 0:
        return (n2 * scale, b2, bd2 * abs(scale))
    base = min(b1, b2)
    n = (n1 << (KBITS * (b1 - base))) + (n2 * scale << (KBITS * (b2 - base)))
    return (n, base, bd1 + bd2 * abs(scale))


def _spair(w1: int, w2: int) -> tuple:
    """Encoded S(w1, w2); the two words must have equal weight."""
    if w1 > w2:
        w1, w2 = w2, w1
    got = _SP.get((w1, w2))
    if got is not None:
        return got
    if w1 == EMPTY_WORD:
        out = (1, 0, 1)
    else:
        L1 = w1.bit_length() - 1
        i = (w1 >> (L1 - 1)) & 1
        t = (1 << (L1 - 1)) | (w1 & ((1 << (L1 - 1)) - 1))
        ca, cb = IPV[i]
        acc = (0, 0, 0)
        pa = pb = 0
        L2 = w2.bit_length() - 1
        for j in range(L2):
            lj = (w2 >> (L2 - 1 - j)) & 1
            if lj == i:
                s = L2 - 1 - j
                sub = _spair(t, ((w2 >> (s + 1)) << s) | (w2 & ((1 << s) - 1)))
                acc = _val_add(acc, sub, ca * pa + cb * pb)
            if lj:
                pb += 1
            else:
                pa += 1
        out = acc
    _SP[(w1, w2)] = out
    return out


def _spair_mod(w1: int, w2: int, memo: dict, apows) -> int:
    if w1 > w2:
        w1, w2 = w2, w1
    got = memo.get((w1, w2))
    if got is not None:
        return got
    p, pw = apows
    if w1 == EMPTY_WORD:
        out = 1
    else:
        L1 = w1.bit_length() - 1
        i = (w1 >> (L1 - 1)) & 1
        t = (1 << (L1 - 1)) | (w1 & ((1 << (L1 - 1)) - 1))
        ca, cb = IPV[i]
        acc = 0
        pa = pb = 0
        L2 = w2.bit_length() - 1
        for j in range(L2):
            lj = (w2 >> (L2 - 1 - j)) & 1
            if lj == i:
                s = L2 - 1 - j
                sub = _spair_mod(t, ((w2 >> (s + 1)) << s) | (w2 & ((1 << s) - 1)),
                                 memo, apows)
                acc += sub * pw(ca * pa + cb * pb)
            if lj:
                pb += 1
            else:
                pa += 1
        out = acc % p
    memo[(w1, w2)] = out
    return out


def _mod_session(p: int, a: int):
    """Memo dict plus a power function v^k -> a^k mod p for one evaluation."""
    key = (p, a)
    memo = _SPMOD.get(key)
    if memo is None:
        memo = _SPMOD[key] = {}
    ainv = pow(a, p - 2, p)
    cache = {}

    def pw(k):
        got = cache.get(k)
        if got is None:
            got = cache[k] = pow(a, k, p) if k >= 0 else pow(ainv, -k, p)
        return got

    return memo, (p, pw)


# ---------------------------------------------------------------------------
# integer-cleared elements


def cleared(x: FreeElt):
    """Rewrite x as {word: integer Laurent dict} after scaling by a common
    nonzero factor (denominator atoms and content).  Zero tests unaffected."""
    from .coeff import _ATOMS
    if x.is_zero:
        return {}
    common = {}
    for c in x.terms.values():
        for a, k in c.dens:
            if common.get(a, 0) < k:
                common[a] = k
    intden = 1
    nums = {}
    for w, c in x.terms.items():
        lp = c.num
        mine = dict(c.dens)
        for a, k in common.items():
            e = k - mine.get(a, 0)
            if e:
                lp = lp * (_ATOMS[a] ** e)
        nums[w] = lp
        for f in lp.c.values():
            if f.denominator != 1:
                intden = intden * f.denominator // _gcd(intden, f.denominator)
    out = {}
    for w, lp in nums.items():
        out[w] = {e: int(f * intden) for e, f in lp.c.items()}
    return out


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _cleared_ir(i: int, terms: dict) -> dict:
    """Left derivation _i r on a cleared element (integer Laurent coeffs)."""
    ca, cb = IPV[i]
    out = {}
    for w, poly in terms.items():
        L = w.bit_length() - 1
        pa = pb = 0
        for j in range(L):
            lj = (w >> (L - 1 - j)) & 1
            if lj == i:
                s = L - 1 - j
                wd = ((w >> (s + 1)) << s) | (w & ((1 << s) - 1))
                shift = ca * pa + cb * pb
                acc = out.setdefault(wd, {})
                for e, c in poly.items():
                    e2 = e + shift
                    v = acc.get(e2, 0) + c
                    if v:
                        acc[e2] = v
                    else:
                        del acc[e2]
            if lj:
                pb += 1
            else:
                pa += 1
    return {w: d for w, d in out.items() if d}


# dict-polynomial kernel, only used when the bigint coefficient bound trips
_SPD = {}


def _spair_dict(w1: int, w2: int) -> dict:
    if w1 > w2:
        w1, w2 = w2, w1
    got = _SPD.get((w1, w2))
    if got is not None:
        return got
    if w1 == EMPTY_WORD:
        out = {0: 1}
    else:
        L1 = w1.bit_length() - 1
        i = (w1 >> (L1 - 1)) & 1
        t = (1 << (L1 - 1)) | (w1 & ((1 << (L1 - 1)) - 1))
        ca, cb = IPV[i]
        out = {}
        pa = pb = 0
        L2 = w2.bit_length() - 1
        for j in range(L2):
            lj = (w2 >> (L2 - 1 - j)) & 1
            if lj == i:
                s = L2 - 1 - j
                sub = _spair_dict(t, ((w2 >> (s + 1)) << s) | (w2 & ((1 << s) - 1)))
                sh = ca * pa + cb * pb
                for e, c in sub.items():
                    e2 = e + sh
                    v = out.get(e2, 0) + c
                    if v:
                        out[e2] = v
                    else:
                        del out[e2]
            if lj:
                pb += 1
            else:
                pa += 1
    _SPD[(w1, w2)] = out
    return out


def _dict_pair_sum(terms1: dict, terms2: dict) -> dict:
    """Sum of c1 c2 S(w1, w2) over supports, as an exact int Laurent dict."""
    acc = {}
    for w1, p1 in terms1.items():
        for w2, p2 in terms2.items():
            s = _spair_dict(w1, w2)
            if not s:
                continue
            prod = {}
            for e1, c1 in p1.items():
                for e2, c2 in p2.items():
                    e = e1 + e2
                    prod[e] = prod.get(e, 0) + c1 * c2
            for es, cs in s.items():
                for ep, cp in prod.items():
                    e = es + ep
                    v = acc.get(e, 0) + cs * cp
                    if v:
                        acc[e] = v
                    else:
                        del acc[e]
    return acc


def _pair_xx_zero(terms: dict) -> bool:
    """Exact test of (x, x) = 0 on a cleared element."""
    if not terms:
        return True
    words = sorted(terms)
    enc = {w: _encode(terms[w]) for w in words}
    acc = (0, 0, 0)
    for idx, w in enumerate(words):
        nw, bw, bdw = enc[w]
        for w2 in words[idx:]:
            n2, b2, bd2 = enc[w2]
            m = 1 if w2 == w else 2
            s, sb, sbd = _spair(w, w2)
            if s == 0:
                continue
            prod = nw * n2 * s * m
            acc = _val_add(acc, (prod, bw + b2 + sb, bdw * bd2 * sbd * m), 0)
    n, _, bound = acc
    if bound >= _KHALF:
        return not _dict_pair_sum(terms, terms)
    return n == 0


def is_zero_uplus(x: FreeElt, cap: int = None) -> bool:
    """Exact zero test of x as an element of the plus part.

    Small weight spaces use (x, x) = 0 (anisotropy); larger ones descend
    through both left derivations, which kill exactly the zero classes.
    """
    if x.is_zero:
        return True
    if cap is None:
        cap = DIRECT_CAP
    return _zero_cleared(cleared(x), x.weight, cap)


def _zero_cleared(terms: dict, mu: Weight, cap: int) -> bool:
    if not terms:
        return True
    if mu == (0, 0):
        return not terms.get(EMPTY_WORD)
    if comb(mu.a0 + mu.a1, mu.a0) <= cap:
        return _pair_xx_zero(terms)
    for i in (0, 1):
        if (mu.a0 if i == 0 else mu.a1) == 0:
            continue
        sub = _cleared_ir(i, terms)
        nu = Weight(mu.a0 - 1, mu.a1) if i == 0 else Weight(mu.a0, mu.a1 - 1)
        if not _zero_cleared(sub, nu, cap):
            return False
    return True


# ---------------------------------------------------------------------------
# derivations and the r map on FreeElt


def r_i(i: int, x: FreeElt) -> FreeElt:
    """Right Kashiwara derivation: r_i(xy) = q^((a_i,|y|)) r_i(x) y + x r_i(y)."""
    if x.is_zero:
        return FreeElt.zero()
    ca, cb = IPV[i]
    out = {}
    for w, c in x.terms.items():
        L = w.bit_length() - 1
        letters = w_letters(w)
        sa = sb = 0
        for j in range(L - 1, -1, -1):
            if letters[j] == i:
                wd = w_delete(w, j)
                cc = c * vpow(ca * sa + cb * sb)
                s = out.get(wd)
                s = cc if s is None else s + cc
                if s.is_zero:
                    out.pop(wd, None)
                else:
                    out[wd] = s
            if letters[j]:
                sb += 1
            else:
                sa += 1
    nu = Weight(x.weight.a0 - (1 - i), x.weight.a1 - i)
    return FreeElt(nu if out else None, out)


def i_r(i: int, x: FreeElt) -> FreeElt:
    """Left Kashiwara derivation: _i r(xy) = _i r(x) y + q^((a_i,|x|)) x _i r(y)."""
    if x.is_zero:
        return FreeElt.zero()
    ca, cb = IPV[i]
    out = {}
    for w, c in x.terms.items():
        L = w.bit_length() - 1
        letters = w_letters(w)
        pa = pb = 0
        for j in range(L):
            if letters[j] == i:
                wd = w_delete(w, j)
                cc = c * vpow(ca * pa + cb * pb)
                s = out.get(wd)
                s = cc if s is None else s + cc
                if s.is_zero:
                    out.pop(wd, None)
                else:
                    out[wd] = s
            if letters[j]:
                pb += 1
            else:
                pa += 1
    nu = Weight(x.weight.a0 - (1 - i), x.weight.a1 - i)
    return FreeElt(nu if out else None, out)


class FreeTensor:
    """A sum of word tensors w1 (x) w2 with RatFunc coefficients; the product
    is twisted: (x1 (x) x2)(y1 (x) y2) = q^((|x2|,|y1|)) x1 y1 (x) x2 y2."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = terms or {}

    @staticmethod
    def unit():
        return FreeTensor({(EMPTY_WORD, EMPTY_WORD): RF_ONE})

    def add_term(self, w1, w2, c):
        key = (w1, w2)
        s = self.terms.get(key)
        s = c if s is None else s + c
        if s.is_zero:
            self.terms.pop(key, None)
        else:
            self.terms[key] = s

    def __add__(self, other):
        out = FreeTensor(dict(self.terms))
        for (w1, w2), c in other.terms.items():
            out.add_term(w1, w2, c)
        return out

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        c = RatFunc.of(c)
        if c.is_zero:
            return FreeTensor()
        return FreeTensor({k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        out = FreeTensor()
        for (x1, x2), c1 in self.terms.items():
            m2 = w_weight(x2)
            for (y1, y2), c2 in other.terms.items():
                tw = sym(m2, w_weight(y1))
                out.add_term(w_concat(x1, y1), w_concat(x2, y2),
                             c1 * c2 * vpow(2 * tw))
        return out

    def bracket_v(self, other, v):
        return self * other - (other * self).scale(v)

    @property
    def is_zero(self):
        return not self.terms

    def left_weights(self):
        return sorted({w_weight(w1) for (w1, _) in self.terms})

    def group_by_left_weight(self):
        """Split into {left weight: {left word: FreeElt right leg}}."""
        out = {}
        for (w1, w2), c in self.terms.items():
            nu = w_weight(w1)
            slot = out.setdefault(nu, {})
            elt = slot.get(w1)
            add = FreeElt.from_word(w2, c)
            slot[w1] = add if elt is None else elt + add
        return out


def free_tensor(x: FreeElt, y) -> FreeTensor:
    """The outer product x (x) y as a FreeTensor; y may be a FreeElt or a
    RatFunc-like scalar (a multiple of the empty word)."""
    out = FreeTensor()
    if isinstance(y, FreeElt):
        if x.is_zero or y.is_zero:
            return out
        for w1, c1 in x.terms.items():
            for w2, c2 in y.terms.items():
                out.add_term(w1, w2, c1 * c2)
        return out
    c = RatFunc.of(y)
    if x.is_zero or c.is_zero:
        return out
    for w1, c1 in x.terms.items():
        out.add_term(w1, EMPTY_WORD, c1 * c)
    return out


def r_map(x: FreeElt) -> FreeTensor:
    """The Cartan-stripped coproduct on the plus part:
    r(e_i) = e_i (x) 1 + 1 (x) e_i extended by the twisted product."""
    out = FreeTensor()
    for w, c in x.terms.items() if not x.is_zero else ():
        cur = {(EMPTY_WORD, EMPTY_WORD): RF_ONE}
        for i in w_letters(w):
            nxt = {}
            for (w1, w2), cc in cur.items():
                tw = sym(w_weight(w2), (1 - i, i))
                k1 = (w_concat(w1, 3 if i else 2), w2)
                v1 = nxt.get(k1)
                add = cc * vpow(2 * tw)
                nxt[k1] = add if v1 is None else v1 + add
                k2 = (w1, w_concat(w2, 3 if i else 2))
                v2 = nxt.get(k2)
                nxt[k2] = cc if v2 is None else v2 + cc
            cur = {k: v for k, v in nxt.items() if not v.is_zero}
        for (w1, w2), cc in cur.items():
            out.add_term(w1, w2, cc * c)
    return out


# ---------------------------------------------------------------------------
# the pairing itself


def _clear_factor(mu: Weight) -> LaurentPoly:
    """(1 - q1^-2)^a1 (1 - q0^-2)^a0 as a Laurent polynomial."""
    f1 = LaurentPoly({0: 1, -2: -1})
    f0 = LaurentPoly({0: 1, -8: -1})
    return (f1 ** mu.a1) * (f0 ** mu.a0)


def pair(x: FreeElt, y: FreeElt) -> RatFunc:
    """The Drinfeld pairing of two homogeneous elements of the plus part."""
    if x.is_zero or y.is_zero:
        return RF_ZERO
    if x.weight != y.weight:
        return RF_ZERO
    cx, cy = cleared(x), cleared(y)
    # recover the clearing scales exactly: cleared(x) = sx * x for a scalar sx
    wx = next(iter(cx))
    sx = RatFunc(LaurentPoly(cx[wx])) / x.terms[wx]
    wy = next(iter(cy))
    sy = RatFunc(LaurentPoly(cy[wy])) / y.terms[wy]
    encx = {w: _encode(d) for w, d in cx.items()}
    ency = {w: _encode(d) for w, d in cy.items()}
    acc = (0, 0, 0)
    for w1, (n1, b1, bd1) in encx.items():
        for w2, (n2, b2, bd2) in ency.items():
            s, sb, sbd = _spair(w1, w2)
            if s == 0:
                continue
            acc = _val_add(acc, (n1 * n2 * s, b1 + b2 + sb, bd1 * bd2 * sbd), 0)
    if acc[2] >= _KHALF:
        num = LaurentPoly(_dict_pair_sum(cx, cy))
    else:
        num = _decode(acc)
    return RatFunc(num) / (sx * sy * RatFunc(_clear_factor(x.weight)))


def pair_tensor(t1: FreeTensor, t2: FreeTensor) -> RatFunc:
    """Componentwise pairing of two tensors (defn of the Hopf pairing (3))."""
    acc = RF_ZERO
    g1 = {}
    for (w1, w2), c in t1.terms.items():
        g1.setdefault((w_weight(w1), w_weight(w2)), []).append((w1, w2, c))
    for (y1, y2), c2 in t2.terms.items():
        key = (w_weight(y1), w_weight(y2))
        for (w1, w2, c1) in g1.get(key, ()):
            p1 = pair(FreeElt.from_word(w1), FreeElt.from_word(y1))
            if p1.is_zero:
                continue
            p2 = pair(FreeElt.from_word(w2), FreeElt.from_word(y2))
            if p2.is_zero:
                continue
            acc = acc + c1 * c2 * p1 * p2
    return acc


def radical_zero_full(x: FreeElt) -> bool:
    """Contract-verbatim zero test: (x, w) = 0 for every word w of the same
    weight.  Only sensible for small weight spaces; used to cross-validate
    the (x, x) shortcut."""
    if x.is_zero:
        return True
    cx = cleared(x)
    enc = {w: _encode(d) for w, d in cx.items()}
    for w in all_words(x.weight):
        acc = (0, 0, 0)
        for w1, (n1, b1, bd1) in enc.items():
            s, sb, sbd = _spair(w1, w)
            if s:
                acc = _val_add(acc, (n1 * s, b1 + sb, bd1 * sbd), 0)
        n, _, bound = acc
        if bound >= _KHALF:
            raise OverflowError("bound exceeded")
        if n != 0:
            return False
    return True


def in_lattice_L(x: FreeElt) -> bool:
    """Whether (x, x) lies in A = Q(q1) cap Z[[q1^-1]]."""
    from .coeff import in_ring_A
    return in_ring_A(pair(x, x))


# ---------------------------------------------------------------------------
# the Serre ideal oracle and dimensions


_IDEAL_CACHE = {}


def serre_ideal_component(mu: Weight):
    """A row-reduced basis of the weight-mu component of the two-sided ideal
    generated by the Serre relators, as FreeElts (independent zero oracle)."""
    got = _IDEAL_CACHE.get(mu)
    if got is not None:
        return got
    rows = []
    # integer-scaled relators span the same ideal and keep rows cheap
    from .coeff import qfact
    relators = [s.scale(qfact(2, i)) if i == 0 else s.scale(qfact(5, 1))
                for i, s in enumerate(serre_elements())]
    for s in relators:
        sw = s.weight
        ra0, ra1 = mu.a0 - sw.a0, mu.a1 - sw.a1
        if ra0 < 0 or ra1 < 0:
            continue
        for ua0 in range(ra0 + 1):
            for ua1 in range(ra1 + 1):
                for u in all_words(Weight(ua0, ua1)):
                    for v in all_words(Weight(ra0 - ua0, ra1 - ua1)):
                        row = {}
                        for w, c in s.terms.items():
                            ww = w_concat(w_concat(u, w), v)
                            row[ww] = row.get(ww, RF_ZERO) + c
                        rows.append({w: c for w, c in row.items()
                                     if not c.is_zero})
    # exact Gaussian elimination, pivot on the smallest word
    basis = []  # list of (pivot word, row dict) with row[pivot] = 1
    for row in rows:
        for pw, brow in basis:
            c = row.get(pw)
            if c is not None and not c.is_zero:
                for w, bc in brow.items():
                    nv = row.get(w, RF_ZERO) - c * bc
                    if nv.is_zero:
                        row.pop(w, None)
                    else:
                        row[w] = nv
        row = {w: c for w, c in row.items() if not c.is_zero}
        if row:
            pw = min(row)
            pc = row[pw]
            row = {w: c / pc for w, c in row.items()}
            basis.append((pw, row))
    basis.sort()
    out = [FreeElt(mu, dict(row)) for _, row in basis]
    _IDEAL_CACHE[mu] = out
    return out


_EVAL_PRIMES = (2147483629, 2147483587, 2147483579)


def _eval_points(seed: int, count: int = 3):
    rng = random.Random(0xA22 ^ seed)
    return [(p, rng.randrange(3, p - 2)) for p in _EVAL_PRIMES[:count]]


def gram_rank_mod(mu: Weight, p: int, a: int) -> int:
    words = all_words(mu)
    memo, apows = _mod_session(p, a)
    n = len(words)
    M = [[0] * n for _ in range(n)]
    for i1 in range(n):
        for i2 in range(i1, n):
            v = _spair_mod(words[i1], words[i2], memo, apows)
            M[i1][i2] = v
            M[i2][i1] = v
    return rank_mod(M, p)


def ideal_rank_mod(mu: Weight, p: int, a: int) -> int:
    """Rank of the Serre ideal component at mu, evaluated at v = a mod p."""
    words = all_words(mu)
    index = {w: k for k, w in enumerate(words)}
    rows = []
    for s in serre_elements():
        sw = s.weight
        ra0, ra1 = mu.a0 - sw.a0, mu.a1 - sw.a1
        if ra0 < 0 or ra1 < 0:
            continue
        sterms = [(w, c.subs_int(a, p)) for w, c in s.terms.items()]
        for ua0 in range(ra0 + 1):
            for ua1 in range(ra1 + 1):
                for u in all_words(Weight(ua0, ua1)):
                    for v in all_words(Weight(ra0 - ua0, ra1 - ua1)):
                        row = [0] * len(words)
                        for w, c in sterms:
                            row[index[w_concat(w_concat(u, w), v)]] += c
                        rows.append([c % p for c in row])
    if not rows:
        return 0
    return rank_mod(rows, p)


def rank_mod(rows, p: int) -> int:
    """Rank of an integer matrix over GF(p)."""
    try:
        import numpy as np
    except ImportError:
        np = None
    if np is not None and rows:
        M = np.array(rows, dtype=np.int64) % p
        nr, nc = M.shape
        r = 0
        for c in range(nc):
            if r == nr:
                break
            piv = None
            for i in range(r, nr):
                if M[i, c]:
                    piv = i
                    break
            if piv is None:
                continue
            if piv != r:
                M[[r, piv]] = M[[piv, r]]
            inv = pow(int(M[r, c]), p - 2, p)
            M[r] = M[r] * inv % p
            col = M[r + 1:, c].copy()
            nz = col.nonzero()[0]
            if len(nz):
                M[r + 1 + nz] = (M[r + 1 + nz] - col[nz, None] * M[r]) % p
            r += 1
        return r
    # dense python fallback
    mat = [list(r) for r in rows]
    r = 0
    nc = len(mat[0]) if mat else 0
    for c in range(nc):
        piv = next((i for i in range(r, len(mat)) if mat[i][c] % p), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = pow(mat[r][c], p - 2, p)
        mat[r] = [x * inv % p for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [(x - f * y) % p for x, y in zip(mat[i], mat[r])]
        r += 1
    return r


def dim_uplus(mu: Weight, mode: str = "auto", seed: int = 0):
    """Dimension of the weight-mu space of the plus part as (dim, mode).

    Exact mode certifies the Gram rank by a sandwich: a modular evaluation
    bounds the rank from below, and #words - (modular ideal rank) bounds it
    from above because the Serre ideal sits inside the radical.  When the
    two meet the rank is exact (and the two oracles agree).  Probabilistic
    mode reports the best of three modular evaluations without the ideal
    certificate.
    """
    n = comb(mu.a0 + mu.a1, mu.a0)
    if mu == (0, 0):
        return 1, "exact"
    if mode == "probabilistic":
        best = 0
        for p, a in _eval_points(seed, 3):
            best = max(best, gram_rank_mod(mu, p, a))
        return best, "probabilistic"
    for p, a in _eval_points(seed, 3):
        g = gram_rank_mod(mu, p, a)
        i = ideal_rank_mod(mu, p, a)
        if g + i == n:
            return g, "exact"
    raise ArithmeticError("rank sandwich failed to close at %s" % (mu,))


def gram_matrix(x_list):
    """Exact Gram matrix of a list of FreeElts (same weight) as RatFuncs."""
    n = len(x_list)
    out = [[RF_ZERO] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            v = pair(x_list[i], x_list[j])
            out[i][j] = v
            out[j][i] = v
    return out
