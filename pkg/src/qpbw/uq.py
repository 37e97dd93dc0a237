"""The full algebra in triangular normal form: products are rewritten as
sums of (f-word) * (Cartan monomial) * (e-word) terms.

Cartan monomials are integer pairs (a, b) standing for q^((a/2)h0 + (b/2)h1),
so k0 = (4, 0), k1 = (0, 1), c = (4, 2), c^(1/2) = (2, 1).  Moving q^h past a
generator costs the v-power 2<h, alpha_i>: with h = (a/2)h0 + (b/2)h1 this is
2a - 4b for alpha_0 and -a + 2b for alpha_1.

Equality in the algebra is semantic (is_zero_U), via the pairing Gram test on
each (Cartan, f-weight, e-weight) block; stored normal forms are
representatives, not canonical.
"""

from __future__ import annotations

from fractions import Fraction

from .coeff import LaurentPoly, RatFunc, RF_ONE, RF_ZERO, qpow, vpow
from .freealg import (FreeElt, Weight, w_concat, w_len, w_letters, w_reverse,
                      w_tail, w_weight, word_of, EMPTY_WORD)
from . import bilinear

K0 = (4, 0)
K1 = (0, 1)
KC = (4, 2)
KCHALF = (2, 1)
KID = (0, 0)

# v-exponent of q^(<h, alpha_i>) for h = (a/2)h0 + (b/2)h1
def cart_dot(K, wt) -> int:
    a, b = K
    return (2 * a - 4 * b) * wt[0] + (-a + 2 * b) * wt[1]


def k_gen(i: int):
    return K0 if i == 0 else K1


def _kadd(K, L):
    return (K[0] + L[0], K[1] + L[1])


def _kneg(K):
    return (-K[0], -K[1])


# 1/(q_i - q_i^-1) with interned denominator atoms
_RF_QDEN_INV = (RatFunc(1, LaurentPoly({4: 1, -4: -1})),
                RatFunc(1, LaurentPoly({1: 1, -1: -1})))


class TriangularElt:
    """A finite sum of f-word * Cartan * e-word terms with RatFunc
    coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = terms or {}

    # -- constructors -------------------------------------------------
    @staticmethod
    def zero():
        return TriangularElt()

    @staticmethod
    def scalar(c):
        c = RatFunc.of(c)
        if c.is_zero:
            return TriangularElt()
        return TriangularElt({(EMPTY_WORD, KID, EMPTY_WORD): c})

    @staticmethod
    def cartan(K, coeff=RF_ONE):
        c = RatFunc.of(coeff)
        if c.is_zero:
            return TriangularElt()
        return TriangularElt({(EMPTY_WORD, tuple(K), EMPTY_WORD): c})

    @staticmethod
    def gen_e(i: int):
        return TriangularElt({(EMPTY_WORD, KID, word_of([i])): RF_ONE})

    @staticmethod
    def gen_f(i: int):
        return TriangularElt({(word_of([i]), KID, EMPTY_WORD): RF_ONE})

    @staticmethod
    def from_free(x: FreeElt, side: str = "e"):
        out = {}
        for w, c in x.terms.items():
            if side == "e":
                out[(EMPTY_WORD, KID, w)] = c
            else:
                out[(w, KID, EMPTY_WORD)] = c
        return TriangularElt(out)

    # -- linear structure ---------------------------------------------
    @property
    def is_zero_repr(self) -> bool:
        """Structurally zero (no stored terms); see is_zero_U for semantics."""
        return not self.terms

    def _iadd(self, key, c):
        s = self.terms.get(key)
        s = c if s is None else s + c
        if s.is_zero:
            self.terms.pop(key, None)
        else:
            self.terms[key] = s

    def __add__(self, other):
        out = TriangularElt(dict(self.terms))
        for k, c in other.terms.items():
            out._iadd(k, c)
        return out

    def __neg__(self):
        return TriangularElt({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = RatFunc.of(c)
        if c.is_zero:
            return TriangularElt()
        return TriangularElt({k: v * c for k, v in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, TriangularElt):
            return NotImplemented
        return self.terms == other.terms

    # -- multiplication -----------------------------------------------
    def __mul__(self, other):
        if isinstance(other, (int, Fraction, LaurentPoly, RatFunc)):
            return self.scale(other)
        out = TriangularElt()
        for (f1, Ka, e1), c1 in self.terms.items():
            for (f2, Kb, e2), c2 in other.terms.items():
                c12 = c1 * c2
                for fw, K, ew, c in _nf_ef(e1, f2):
                    sh = -cart_dot(Ka, w_weight(fw)) - cart_dot(Kb, w_weight(ew))
                    key = (w_concat(f1, fw), _kadd(_kadd(Ka, K), Kb),
                           w_concat(ew, e2))
                    cc = c12 * c if sh == 0 else c12 * c * vpow(sh)
                    out._iadd(key, cc)
        return out

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, LaurentPoly, RatFunc)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int):
        out = TriangularElt.scalar(RF_ONE)
        for _ in range(n):
            out = out * self
        return out

    # -- extraction ----------------------------------------------------
    def e_part(self) -> FreeElt:
        """Project onto the plus part; raises if an f-letter or nontrivial
        Cartan survives."""
        terms = {}
        wt = None
        for (fw, K, ew), c in self.terms.items():
            if fw != EMPTY_WORD or K != KID:
                raise ValueError("image not positive: %s" % ((fw, K, ew),))
            terms[ew] = c
            wt = w_weight(ew)
        return FreeElt(wt, terms) if terms else FreeElt.zero()

    def cartan_coeff(self, K) -> RatFunc:
        return self.terms.get((EMPTY_WORD, tuple(K), EMPTY_WORD), RF_ZERO)

    def reduce(self) -> "TriangularElt":
        """Cancel coefficient denominators where exact division allows."""
        return TriangularElt({k: c.light_reduced()
                              for k, c in self.terms.items()})

    def sorted_terms(self):
        return sorted(self.terms.items())

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for (fw, K, ew), c in self.sorted_terms():
            seg = ["(%s)" % c]
            if fw != EMPTY_WORD:
                seg.append("*".join("f%d" % x for x in w_letters(fw)))
            if K != KID:
                seg.append(cartan_str(K))
            if ew != EMPTY_WORD:
                seg.append("*".join("e%d" % x for x in w_letters(ew)))
            bits.append("*".join(seg))
        return " + ".join(bits)

    __repr__ = __str__


def cartan_str(K) -> str:
    """Print (a, b) as k0^x k1^y c^d with d minimizing |x| (d can be a
    half-integer when c^(1/2) is involved)."""
    a, b = K
    # a = 4x + 4d, b = y + 2d with 2d integral
    best = None
    for twod in range(-abs(a) - abs(b) - 2, abs(a) + abs(b) + 3):
        if (a - 2 * twod) % 4:
            continue
        x = (a - 2 * twod) // 4
        y = b - twod
        cand = (abs(x), abs(y), abs(twod))
        if best is None or cand < best[0]:
            best = (cand, x, y, twod)
    _, x, y, twod = best
    parts = []
    if x:
        parts.append("k0" if x == 1 else "k0^%d" % x)
    if y:
        parts.append("k1" if y == 1 else "k1^%d" % y)
    if twod:
        parts.append("c" if twod == 2 else
                     ("c^%d" % (twod // 2) if twod % 2 == 0 else "c^(%d/2)" % twod))
    return "*".join(parts) if parts else "1"


# ---------------------------------------------------------------------------
# the rewriting core: normal form of e-word * f-word

_NF_CACHE = {}


def _nf_ef(ew: int, fw: int):
    """Normal form of the product (e-word) * (f-word) as a tuple of
    (f-word, Cartan, e-word, coeff) terms.  Rewrites e_i f_j ->
    f_j e_i + delta_ij (k_i - k_i^-1)/(q_i - q_i^-1) until triangular."""
    if ew == EMPTY_WORD:
        return ((fw, KID, EMPTY_WORD, RF_ONE),)
    if fw == EMPTY_WORD:
        return ((EMPTY_WORD, KID, ew, RF_ONE),)
    key = (ew, fw)
    got = _NF_CACHE.get(key)
    if got is not None:
        return got
    Le = ew.bit_length() - 1
    i = ew & 1                                   # last letter of ew
    rest = ew >> 1
    j = (fw >> (fw.bit_length() - 2)) & 1        # first letter of fw
    rest2 = w_tail(fw)
    fj = word_of([j])
    acc = {}

    def put(fw_, K_, ew_, c_):
        k = (fw_, K_, ew_)
        s = acc.get(k)
        s = c_ if s is None else s + c_
        if s.is_zero:
            acc.pop(k, None)
        else:
            acc[k] = s

    # rest (e_i f_j) rest2 = (rest f_j)(e_i rest2) + delta branch
    ei = word_of([i])
    for fw1, Ka, ew1, c1 in _nf_ef(rest, fj):
        mid = w_concat(ew1, ei)
        for fw2, Kb, ew2, c2 in _nf_ef(mid, rest2):
            sh = -cart_dot(Ka, w_weight(fw2))
            put(w_concat(fw1, fw2), _kadd(Ka, Kb), ew2,
                c1 * c2 * vpow(sh) if sh else c1 * c2)
    if i == j:
        den = _RF_QDEN_INV[i]
        Ki = k_gen(i)
        for sgn, K in ((1, Ki), (-1, _kneg(Ki))):
            sh1 = -cart_dot(K, w_weight(rest2))
            for fw3, Kc, ew3, c3 in _nf_ef(rest, rest2):
                sh2 = -cart_dot(K, w_weight(ew3))
                put(fw3, _kadd(Kc, K), ew3,
                    c3 * den * vpow(sh1 + sh2) * sgn)
    out = tuple((f, K, e, c) for (f, K, e), c in acc.items())
    _NF_CACHE[key] = out
    return out


# ---------------------------------------------------------------------------
# box elements


def box(i: int, m: int, r: int) -> TriangularElt:
    """The integral Cartan element [k_i, m; r]_i expanded into a Laurent
    combination of powers of k_i."""
    out = TriangularElt.scalar(RF_ONE)
    e = 4 if i == 0 else 1  # q_i = v^e
    Ki = k_gen(i)
    for s in range(1, r + 1):
        den = LaurentPoly({e * s: 1, -e * s: -1})
        f = TriangularElt({
            (EMPTY_WORD, Ki, EMPTY_WORD): RatFunc(vpow(e * (m - s + 1)), den),
            (EMPTY_WORD, _kneg(Ki), EMPTY_WORD): RatFunc(-vpow(e * (-m + s - 1)), den),
        })
        out = out * f
    return out


# ---------------------------------------------------------------------------
# semantic zero test


def is_zero_U(x: TriangularElt) -> bool:
    """Exact zero test in the full algebra via the triangular decomposition:
    group terms by (Cartan, f-weight, e-weight) and test the coefficient
    tensor of each block against the pairing Grams of both wings."""
    if not x.terms:
        return True
    groups = {}
    for (fw, K, ew), c in x.terms.items():
        groups.setdefault((K, w_weight(fw), w_weight(ew)), {})[(fw, ew)] = c
    for (K, lam, mu), block in groups.items():
        fwords = sorted({fw for (fw, _) in block})
        if len(fwords) == 1:
            legs = {fwords[0]: _right_leg(block, fwords[0], mu)}
            combos = legs.values()
        else:
            combos = _independent_combos(block, fwords, mu)
        for leg in combos:
            if not bilinear.is_zero_uplus(leg):
                return False
    return True


def _right_leg(block, fw, mu) -> FreeElt:
    terms = {ew: c for (f, ew), c in block.items() if f == fw}
    return FreeElt(mu if terms else None, terms)


def _independent_combos(block, fwords, mu):
    """Reduce the block to right legs over a maximal independent set of
    f-words.  Dependencies among f-word classes are found from the exact
    Gram matrix of their reversals under the plus-side pairing (the minus
    pairing transported through Omega); anisotropy of the form makes the
    Gram rank equal to the dimension of the span."""
    revs = [FreeElt.from_word(w_reverse(fw)) for fw in fwords]
    n = len(fwords)
    G = bilinear.gram_matrix(revs)
    # exact elimination to find pivots and express dependents
    cols = list(range(n))
    mat = [row[:] for row in G]
    piv_rows, piv_cols = [], []
    r = 0
    for c in cols:
        pr = next((i for i in range(r, n) if not mat[i][c].is_zero), None)
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        inv = mat[r][c].inv()
        mat[r] = [x * inv for x in mat[r]]
        for i in range(n):
            if i != r and not mat[i][c].is_zero:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        piv_cols.append(c)
        r += 1
    dep = {}
    for c in range(n):
        if c in piv_cols:
            continue
        # column c of G = sum beta_b column b over pivots; read off betas
        dep[c] = {piv_cols[k]: mat[k][c] for k in range(len(piv_cols))}
    legs = {b: _right_leg(block, fwords[b], mu) for b in range(n)}
    out = []
    for b in piv_cols:
        leg = legs[b]
        for c, betas in dep.items():
            beta = betas.get(b)
            if beta is not None and not beta.is_zero:
                leg = leg + legs[c].scale(beta)
        out.append(leg)
    return out


# ---------------------------------------------------------------------------
# coproduct into tensors


class TensorElt:
    """A sum of pure tensors of triangular terms with RatFunc coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = terms or {}

    @staticmethod
    def unit():
        k = (EMPTY_WORD, KID, EMPTY_WORD)
        return TensorElt({(k, k): RF_ONE})

    def _iadd(self, key, c):
        s = self.terms.get(key)
        s = c if s is None else s + c
        if s.is_zero:
            self.terms.pop(key, None)
        else:
            self.terms[key] = s

    def __add__(self, other):
        out = TensorElt(dict(self.terms))
        for k, c in other.terms.items():
            out._iadd(k, c)
        return out

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        c = RatFunc.of(c)
        if c.is_zero:
            return TensorElt()
        return TensorElt({k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        out = TensorElt()
        for (l1, r1), c1 in self.terms.items():
            L1 = TriangularElt({l1: RF_ONE})
            R1 = TriangularElt({r1: RF_ONE})
            for (l2, r2), c2 in other.terms.items():
                L = L1 * TriangularElt({l2: RF_ONE})
                R = R1 * TriangularElt({r2: RF_ONE})
                for lk, lc in L.terms.items():
                    for rk, rc in R.terms.items():
                        out._iadd((lk, rk), c1 * c2 * lc * rc)
        return out

    def bracket_v(self, other, v):
        return self * other - (other * self).scale(v)

    @property
    def is_zero_repr(self):
        return not self.terms


def _delta_factor(kind, i) -> TensorElt:
    one = (EMPTY_WORD, KID, EMPTY_WORD)
    if kind == "e":
        ei = (EMPTY_WORD, KID, word_of([i]))
        ki = (EMPTY_WORD, k_gen(i), EMPTY_WORD)
        return TensorElt({(ei, one): RF_ONE, (ki, ei): RF_ONE})
    if kind == "f":
        fi = (word_of([i]), KID, EMPTY_WORD)
        kinv = (EMPTY_WORD, _kneg(k_gen(i)), EMPTY_WORD)
        return TensorElt({(fi, kinv): RF_ONE, (one, fi): RF_ONE})
    raise ValueError(kind)


def coproduct(x: TriangularElt) -> TensorElt:
    """The coproduct, term by term: Delta(e_i) = e_i (x) 1 + k_i (x) e_i,
    Delta(f_i) = f_i (x) k_i^-1 + 1 (x) f_i, Delta(q^h) = q^h (x) q^h."""
    out = TensorElt()
    for (fw, K, ew), c in x.terms.items():
        t = TensorElt.unit().scale(c)
        for j in w_letters(fw):
            t = t * _delta_factor("f", j)
        kk = (EMPTY_WORD, K, EMPTY_WORD)
        t = t * TensorElt({(kk, kk): RF_ONE})
        for j in w_letters(ew):
            t = t * _delta_factor("e", j)
        out = out + t
    return out


def tensor_is_zero(t: TensorElt) -> bool:
    """Semantic zero test of a tensor: block by left term, test the right
    side against a maximal independent family of left terms (both through
    is_zero_U on combined legs).  Adequate for the small tensors used in
    the morphism checks."""
    if not t.terms:
        return True
    # group by full left key; left keys with distinct (Cartan, weights) are
    # independent, equal-key collisions already merged
    blocks = {}
    for (lk, rk), c in t.terms.items():
        blocks.setdefault(lk, TriangularElt())._iadd(rk, c)
    # left keys sharing (K, fwt, ewt) may be dependent; handle via the
    # same reduction used in is_zero_U, lifted to word pairs
    bykey = {}
    for lk, right in blocks.items():
        fw, K, ew = lk
        bykey.setdefault((K, w_weight(fw), w_weight(ew)), []).append((lk, right))
    for (K, lam, mu), entries in bykey.items():
        if len(entries) == 1:
            if not is_zero_U(entries[0][1]):
                return False
            continue
        combos = _independent_pair_combos(entries, lam, mu)
        for right in combos:
            if not is_zero_U(right):
                return False
    return True


def _independent_pair_combos(entries, lam, mu):
    legs = [right for (_lk, right) in entries]
    keys = [lk for (lk, _r) in entries]
    # Gram of the left terms f K e: ((f K e)_a, (f K e)_b) via the product
    # pairing (rev f_a, rev f_b) * (e_a, e_b); exact and anisotropic on the
    # span because both factors are.
    n = len(entries)
    G = []
    for a in range(n):
        fa, _, ea = keys[a]
        row = []
        for bidx in range(n):
            fb, _, eb = keys[bidx]
            v1 = bilinear.pair(FreeElt.from_word(w_reverse(fa)),
                               FreeElt.from_word(w_reverse(fb)))
            v2 = bilinear.pair(FreeElt.from_word(ea), FreeElt.from_word(eb))
            row.append(v1 * v2)
        G.append(row)
    mat = [row[:] for row in G]
    piv_cols = []
    r = 0
    for c in range(n):
        pr = next((i for i in range(r, n) if not mat[i][c].is_zero), None)
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        inv = mat[r][c].inv()
        mat[r] = [x * inv for x in mat[r]]
        for i in range(n):
            if i != r and not mat[i][c].is_zero:
                f = mat[i][c]
                mat[i] = [p - f * q for p, q in zip(mat[i], mat[r])]
        piv_cols.append(c)
        r += 1
    out = []
    for b in piv_cols:
        leg = legs[b]
        for c in range(n):
            if c in piv_cols:
                continue
            beta = mat[piv_cols.index(b)][c]
            if not beta.is_zero:
                leg = leg + legs[c].scale(beta)
        out.append(leg)
    return out


def congruent_mod(x: TensorElt, y: TensorElt, predicate) -> bool:
    """Congruence of two tensors modulo the subspace of tensors whose left
    leg straightens into PBW monomials satisfying the predicate.

    Left legs must lie in U^0 U^+ (a Cartan times a plus element); after
    stripping the Cartan they are straightened in the psi-flavor PBW basis,
    indices matching the predicate are dropped, and what remains must
    vanish leg by leg.
    """
    from . import pbw
    diff = x - y
    groups = {}
    for ((fw, K, ew), rk), c in diff.terms.items():
        if fw != EMPTY_WORD:
            raise ValueError("left factor not in U0U+")
        groups.setdefault((K, w_weight(ew)), []).append((ew, rk, c))
    for (K, nu), entries in groups.items():
        legmap = {}
        for ew, rk, c in entries:
            left = FreeElt.from_word(ew)
            for ix, coeff in pbw.straighten(left).items():
                if predicate(ix):
                    continue
                cur = legmap.setdefault(ix, TriangularElt())
                cur._iadd(rk, c * coeff)
        for ix, leg in legmap.items():
            if not is_zero_U(leg):
                return False
    return True
