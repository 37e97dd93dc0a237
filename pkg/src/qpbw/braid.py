"""Lusztig braid operators and the involutions of the algebra.

T0, T1 and their inverses act as algebra automorphisms through their values
on generators; images of words are cached.  The composite Tpa = T0 T1 shifts
root vectors by delta.  star is the linear anti-involution fixing the
generators and inverting Cartan parts; Omega swaps the two wings and bars
coefficients; bar fixes generators, inverting coefficients and Cartans.
"""

from __future__ import annotations

from .coeff import RatFunc, RF_ONE, inv_qfact, qpow, vpow
from .freealg import FreeElt, w_letters, w_reverse, word_of, EMPTY_WORD, CARTAN
from .uq import TriangularElt, KID, k_gen, _kneg

_IMG = {}         # (i, sign) -> {("e", j) | ("f", j): TriangularElt}
_WORD_IMG = {}    # (i, sign, side, word) -> TriangularElt


def _divp(x: TriangularElt, k: int, level: int) -> TriangularElt:
    return (x ** k).scale(inv_qfact(k, level))


def _gen_images(i: int, sign: int):
    key = (i, sign)
    got = _IMG.get(key)
    if got is not None:
        return got
    E, F = TriangularElt.gen_e, TriangularElt.gen_f
    C = TriangularElt.cartan
    j = 1 - i
    m = -CARTAN[i][j]
    ei, fi, ej, fj = E(i), F(i), E(j), F(j)
    ki = k_gen(i)
    out = {}
    if sign > 0:
        out[("e", i)] = (fi * C(ki)).scale(-1)
        out[("f", i)] = (C(_kneg(ki)) * ei).scale(-1)
        acc_e = TriangularElt.zero()
        acc_f = TriangularElt.zero()
        for r in range(m + 1):
            s = RatFunc((-1) ** r)
            acc_e = acc_e + (_divp(ei, m - r, i) * ej * _divp(ei, r, i)
                             ).scale(s * RatFunc(1, vpow(r * (4 if i == 0 else 1))))
            acc_f = acc_f + (_divp(fi, r, i) * fj * _divp(fi, m - r, i)
                             ).scale(s * vpow(r * (4 if i == 0 else 1)))
        out[("e", j)] = acc_e
        out[("f", j)] = acc_f
    else:
        out[("e", i)] = (C(_kneg(ki)) * fi).scale(-1)
        out[("f", i)] = (ei * C(ki)).scale(-1)
        acc_e = TriangularElt.zero()
        acc_f = TriangularElt.zero()
        for r in range(m + 1):
            s = RatFunc((-1) ** r)
            acc_e = acc_e + (_divp(ei, r, i) * ej * _divp(ei, m - r, i)
                             ).scale(s * RatFunc(1, vpow(r * (4 if i == 0 else 1))))
            acc_f = acc_f + (_divp(fi, m - r, i) * fj * _divp(fi, r, i)
                             ).scale(s * vpow(r * (4 if i == 0 else 1)))
        out[("e", j)] = acc_e
        out[("f", j)] = acc_f
    _IMG[key] = out
    return out


def _cartan_reflect(K, i: int):
    """s_i on the Cartan lattice: h -> h - <h, alpha_i> h_i."""
    a, b = K
    if i == 0:
        return (-a + 4 * b, b)
    return (a, a - b)


def _word_image(i: int, sign: int, side: str, w: int) -> TriangularElt:
    if w == EMPTY_WORD:
        return TriangularElt.scalar(RF_ONE)
    key = (i, sign, side, w)
    got = _WORD_IMG.get(key)
    if got is not None:
        return got
    img = _gen_images(i, sign)
    head = _word_image(i, sign, side, w >> 1)
    out = (head * img[(side, w & 1)]).reduce()
    _WORD_IMG[key] = out
    return out


def apply_T(i: int, sign: int, x: TriangularElt) -> TriangularElt:
    """The braid operator T_i (sign +1) or its inverse (sign -1)."""
    # group by e-word so the (often large) e-word image multiplies a single
    # merged left element per distinct word
    grouped = {}
    for (fw, K, ew), c in x.terms.items():
        grouped.setdefault(ew, []).append((fw, K, c))
    out = TriangularElt.zero()
    for ew, lefts in grouped.items():
        left = TriangularElt.zero()
        for fw, K, c in lefts:
            t = _word_image(i, sign, "f", fw)
            t = t * TriangularElt.cartan(_cartan_reflect(K, i))
            left = left + t.scale(c)
        out = out + left * _word_image(i, sign, "e", ew)
    return out


def T_pa(x: TriangularElt) -> TriangularElt:
    """Tpa = T0 T1 (first T1, then T0)."""
    return apply_T(0, 1, apply_T(1, 1, x))


def T_pa_inv(x: TriangularElt) -> TriangularElt:
    return apply_T(1, -1, apply_T(0, -1, x))


def star(x: TriangularElt) -> TriangularElt:
    """The Q(q1)-linear anti-involution fixing e_i, f_i, inverting q^h."""
    out = TriangularElt.zero()
    for (fw, K, ew), c in x.terms.items():
        t = TriangularElt.from_free(FreeElt.from_word(w_reverse(ew)), "e") \
            if ew != EMPTY_WORD else TriangularElt.scalar(RF_ONE)
        t = t * TriangularElt.cartan(_kneg(K))
        if fw != EMPTY_WORD:
            t = t * TriangularElt.from_free(FreeElt.from_word(w_reverse(fw)), "f")
        out = out + t.scale(c)
    return out


def omega(x: TriangularElt) -> TriangularElt:
    """The bar-semilinear anti-involution swapping e_i with f_i."""
    out = TriangularElt.zero()
    for (fw, K, ew), c in x.terms.items():
        key = (w_reverse(ew), _kneg(K), w_reverse(fw))
        out._iadd(key, c.bar())
    return out


def bar_inv(x: TriangularElt) -> TriangularElt:
    """The bar involution: fixes e_i, f_i; inverts v and q^h."""
    out = TriangularElt.zero()
    for (fw, K, ew), c in x.terms.items():
        out._iadd((fw, _kneg(K), ew), c.bar())
    return out


def T1inv_star(x: TriangularElt) -> TriangularElt:
    """The anti-automorphism T1^-1 o star."""
    return apply_T(1, -1, star(x))


# -- FreeElt conveniences ---------------------------------------------------


def lift(x: FreeElt) -> TriangularElt:
    return TriangularElt.from_free(x, "e")


def apply_T_free(i: int, sign: int, x: FreeElt) -> FreeElt:
    """Apply a braid operator to a plus element whose image is again in the
    plus part; raises when the image leaves it."""
    return apply_T(i, sign, lift(x)).e_part()


def T_pa_free(x: FreeElt) -> FreeElt:
    return T_pa(lift(x)).e_part()


def T_pa_inv_free(x: FreeElt) -> FreeElt:
    return T_pa_inv(lift(x)).e_part()


def star_free(x: FreeElt) -> FreeElt:
    """star restricted to the plus part: reverses every word."""
    if x.is_zero:
        return x
    return FreeElt(x.weight, {w_reverse(w): c for w, c in x.terms.items()})


def T1inv_star_free(x: FreeElt) -> FreeElt:
    return apply_T(1, -1, lift(star_free(x))).e_part()


def cache_clear():
    _WORD_IMG.clear()
