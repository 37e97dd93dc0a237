"""PBW monomials: enumeration by weight, expansion, exact straightening,
the integral families D-, D+, D>=0 and the straightening theorem for
E_{a0}^(s) E_{a1}^(r), plus integrality checking."""

from __future__ import annotations

from typing import NamedTuple

from .coeff import (LaurentPoly, RatFunc, RF_ONE, RF_ZERO, qint, qpow, vpow,
                    V)
from .freealg import (FreeElt, RootLabel, Weight, all_words, divided,
                      roots_gt_within, roots_lt_within)
from . import braid, rootvec
from .rootvec import E, P, psi, psi0, expand_imag


class PBWIndex(NamedTuple):
    """A PBW monomial label: exponents over the greater-side real roots,
    a partition for the imaginary block, exponents over the smaller side.
    Root entries are ((kind, n), exponent) pairs in ascending root order."""

    plus: tuple
    imag: tuple
    minus: tuple

    @property
    def weight(self) -> Weight:
        a0 = a1 = 0
        for (kind, n), k in self.plus + self.minus:
            w = RootLabel(kind, n).weight
            a0 += k * w.a0
            a1 += k * w.a1
        d = sum(self.imag)
        return Weight(a0 + d, a1 + 2 * d)

    def __str__(self):
        bits = []
        for (kind, n), k in self.plus:
            r = str(RootLabel(kind, n))
            bits.append("E[%s]" % r + ("^(%d)" % k if k > 1 else ""))
        if self.imag:
            bits.append("S[%s]" % ",".join(str(p) for p in self.imag))
        for (kind, n), k in self.minus:
            r = str(RootLabel(kind, n))
            bits.append("E[%s]" % r + ("^(%d)" % k if k > 1 else ""))
        return " * ".join(bits) if bits else "1"


def _partitions(d: int):
    """All partitions of d as decreasing tuples."""
    if d == 0:
        yield ()
        return
    def rec(rest, maxpart):
        if rest == 0:
            yield ()
            return
        for p in range(min(rest, maxpart), 0, -1):
            for tail in rec(rest - p, p):
                yield (p,) + tail
    yield from rec(d, d)


def enumerate_pbw(mu: Weight, flavor: str = "psi"):
    """All PBW indices of weight mu (Kostant-type partitions with a
    partition-valued imaginary multiplicity), deterministically ordered.
    The flavor only names the imaginary block; the index set is shared."""
    gt = roots_gt_within(mu)
    lt = roots_lt_within(mu)

    minus_sets = {}

    def minus_options(rest):
        got = minus_sets.get(rest)
        if got is not None:
            return got
        acc = []

        def rec(k, r0, r1, cur):
            if r0 == 0 and r1 == 0:
                acc.append(tuple(cur))
                return
            if k == len(lt):
                return
            w = lt[k].weight
            label = (lt[k].kind, lt[k].n)
            m = 0
            while r0 - m * w.a0 >= 0 and r1 - m * w.a1 >= 0:
                rec(k + 1, r0 - m * w.a0, r1 - m * w.a1,
                    cur + ([(label, m)] if m else []))
                m += 1

        rec(0, rest[0], rest[1], [])
        minus_sets[rest] = tuple(acc)
        return minus_sets[rest]

    result = []

    def rec_plus(k, rest, acc):
        for d in range(0, rest[0] + 1):
            rem = (rest[0] - d, rest[1] - 2 * d)
            if rem[0] < 0 or rem[1] < 0:
                continue
            for lam in _partitions(d):
                for mn in minus_options(rem):
                    result.append(PBWIndex(tuple(acc), lam, mn))
        for j in range(k, len(gt)):
            w = gt[j].weight
            label = (gt[j].kind, gt[j].n)
            m = 1
            while rest[0] - m * w.a0 >= 0 and rest[1] - m * w.a1 >= 0:
                rec_plus(j + 1, (rest[0] - m * w.a0, rest[1] - m * w.a1),
                         acc + [(label, m)])
                m += 1

    rec_plus(0, (mu.a0, mu.a1), [])
    result.sort()
    return result


_EXPAND = {}


def expand_pbw(ix: PBWIndex, flavor: str = "psi") -> FreeElt:
    """The ordered product of divided powers and the imaginary block."""
    key = (ix, flavor)
    got = _EXPAND.get(key)
    if got is not None:
        return got
    out = FreeElt.unit()
    for (kind, n), k in ix.plus:
        out = out * rootvec.divided_power(RootLabel(kind, n), k)
    if ix.imag:
        out = out * expand_imag(flavor, ix.imag)
    for (kind, n), k in ix.minus:
        out = out * rootvec.divided_power(RootLabel(kind, n), k)
    _EXPAND[key] = out
    return out


_PIVOTS = {}
_IDEAL_PIVOTS = {}


def _ip_sub_scaled(acc: dict, scale_acc: dict, other: dict, scale_other: dict):
    """scale_acc * acc - scale_other * other on integer Laurent dicts."""
    out = {}
    for e1, c1 in acc.items():
        for e2, c2 in scale_acc.items():
            e = e1 + e2
            v = out.get(e, 0) + c1 * c2
            if v:
                out[e] = v
            else:
                del out[e]
    for e1, c1 in other.items():
        for e2, c2 in scale_other.items():
            e = e1 + e2
            v = out.get(e, 0) - c1 * c2
            if v:
                out[e] = v
            else:
                del out[e]
    return out


def _ip_divexact(a: dict, d: dict) -> dict:
    """Exact division of integer Laurent dicts (raises on remainder)."""
    if not a:
        return {}
    va, da = min(a), max(a)
    vd, dd = min(d), max(d)
    A = [0] * (da - va + 1)
    for e, c in a.items():
        A[e - va] = c
    D = [0] * (dd - vd + 1)
    for e, c in d.items():
        D[e - vd] = c
    ld = D[-1]
    nd = len(D) - 1
    q = [0] * (len(A) - nd)
    for i in range(len(A) - 1, nd - 1, -1):
        ci = A[i]
        if ci:
            f, rem = divmod(ci, ld)
            if rem:
                raise ArithmeticError("inexact Bareiss division")
            q[i - nd] = f
            for jj in range(nd):
                A[i - nd + jj] -= f * D[jj]
            A[i] = 0
    if any(A[:nd]):
        raise ArithmeticError("inexact Bareiss division")
    base = va - vd
    return {k + base: c for k, c in enumerate(q) if c}


def _int_cols(x: FreeElt):
    """Integer Laurent column of x (a common nonzero scale is dropped)."""
    from .bilinear import cleared
    return cleared(x)


def _raw_ideal_rows(mu: Weight):
    from .coeff import qfact
    from .freealg import w_concat
    rows = []
    rels = [s.scale(qfact(2, i)) if i == 0 else s.scale(qfact(5, 1))
            for i, s in enumerate(serre_elements_cached())]
    for s in rels:
        sw = s.weight
        ra0, ra1 = mu.a0 - sw.a0, mu.a1 - sw.a1
        if ra0 < 0 or ra1 < 0:
            continue
        sterms = [(w, {e: int(f) for e, f in c.reduced().num.c.items()})
                  for w, c in s.terms.items()]
        for ua0 in range(ra0 + 1):
            for ua1 in range(ra1 + 1):
                for u in all_words(Weight(ua0, ua1)):
                    for v in all_words(Weight(ra0 - ua0, ra1 - ua1)):
                        row = {}
                        for w, poly in sterms:
                            ww = w_concat(w_concat(u, w), v)
                            acc = row.setdefault(ww, {})
                            for e, c in poly.items():
                                vv = acc.get(e, 0) + c
                                if vv:
                                    acc[e] = vv
                                else:
                                    del acc[e]
                        rows.append({w: p for w, p in row.items() if p})
    return rows


def serre_elements_cached():
    from .freealg import serre_elements
    return serre_elements()


def _pivot_data(mu: Weight, flavor: str):
    """Division-free sequential elimination over the word space: columns are
    the PBW expansions (each must yield a pivot) followed by raw Serre
    ideal insertion rows (so arbitrary words straighten, the ideal part
    discarded).  Entries are integer Laurent dicts; each pivot stores its
    column, its pivot polynomial, and its combo over the original columns."""
    key = (mu, flavor)
    got = _PIVOTS.get(key)
    if got is not None:
        return got
    indices = enumerate_pbw(mu, flavor)
    shared = _IDEAL_PIVOTS.get(mu)
    pivots = list(shared) if shared is not None else []
    scales = []   # per original PBW column: cleared column / expansion
    nwords = len(all_words(mu))

    def reduce_and_push(col, combo, must_pivot):
        # one-step fraction-free elimination: after reducing by pivot k the
        # entries are divided exactly by the previous pivot (Bareiss), which
        # keeps them minor-sized
        prev = {0: 1}
        for pw, pcol, pcombo, ppoly in pivots:
            f = col.get(pw, {})
            newcol = {}
            for w in set(col) | (set(pcol) if f else set()):
                acc = _ip_sub_scaled(col.get(w, {}), ppoly,
                                     pcol.get(w, {}), f)
                if acc:
                    acc = _ip_divexact(acc, prev)
                    if acc:
                        newcol[w] = acc
            col = newcol
            newcombo = {}
            for t in set(combo) | (set(pcombo) if f else set()):
                acc = _ip_sub_scaled(combo.get(t, {}), ppoly,
                                     pcombo.get(t, {}), f)
                if acc:
                    acc = _ip_divexact(acc, prev)
                    if acc:
                        newcombo[t] = acc
            combo = newcombo
            prev = ppoly
        if not col:
            if must_pivot:
                raise ArithmeticError("inconsistent system: dependent PBW "
                                      "monomials at %s" % (mu,))
            return
        pw = min(col)
        pivots.append((pw, col, combo, col[pw]))

    # sparse ideal rows first (far less fill-in), then the dense expansions;
    # the ideal prefix is flavor-independent and shared
    nideal = nwords - len(indices)
    if shared is None:
        for row in sorted(_raw_ideal_rows(mu), key=len):
            if len(pivots) == nideal:
                break
            reduce_and_push(dict(row), {-1: {0: 1}}, False)
        if len(pivots) != nideal:
            raise ArithmeticError(
                "inconsistent system: ideal rows span %d of %d at %s"
                % (len(pivots), nideal, mu))
        _IDEAL_PIVOTS[mu] = tuple(pivots)
    for j, ix in enumerate(indices):
        x = expand_pbw(ix, flavor)
        col = _int_cols(x)
        w0 = next(iter(col))
        scales.append(RatFunc(LaurentPoly(col[w0])) / x.terms[w0])
        reduce_and_push(col, {j: {0: 1}}, True)
    if len(pivots) != nwords:
        raise ArithmeticError(
            "inconsistent system: PBW plus ideal span a proper subspace "
            "at %s (%d of %d)" % (mu, len(pivots), nwords))
    got = _PIVOTS[key] = (indices, pivots, scales)
    return got


def straighten(x: FreeElt, flavor: str = "psi"):
    """The unique expansion of the class of x over the PBW basis of its
    weight (Serre ideal contributions are discarded).

    The residual is reduced through the cached Bareiss pivots without any
    polynomial division; a nonzero final residual signals a basis bug."""
    if x.is_zero:
        return {}
    indices, pivots, scales = _pivot_data(x.weight, flavor)
    from .bilinear import cleared
    from .coeff import kron_mul_int
    xv = cleared(x)
    w0 = next(iter(xv))
    xscale = RatFunc(LaurentPoly(xv[w0])) / x.terms[w0]
    # maintain the true residual as xv / D with xv integer; a pivot hit
    # multiplies xv by the pivot polynomial (no divisions)
    D = RF_ONE
    hits = []   # (pivot position, numerator poly, D before the hit)
    for k, (pw, pcol, pcombo, ppoly) in enumerate(pivots):
        f = xv.get(pw)
        if not f:
            continue
        hits.append((k, f, D))
        newxv = {}
        for w in set(xv) | set(pcol):
            a = xv.get(w)
            if a:
                acc = (kron_mul_int(a, ppoly) if len(a) * len(ppoly) >= 256
                       else _ip_sub_scaled(a, ppoly, {}, {}))
            else:
                acc = {}
            bpoly = pcol.get(w)
            if bpoly:
                sub = (kron_mul_int(bpoly, f) if len(bpoly) * len(f) >= 256
                       else _ip_sub_scaled(bpoly, f, {}, {}))
                for e, c in sub.items():
                    v = acc.get(e, 0) - c
                    if v:
                        acc[e] = v
                    else:
                        acc.pop(e, None)
            if acc:
                newxv[w] = acc
        xv = newxv
        D = D * RatFunc(1, LaurentPoly(ppoly))
        if not xv:
            break
    if xv:
        raise ArithmeticError("inconsistent system: residual after PBW "
                              "straightening at %s" % (x.weight,))
    coeffs = {}
    for k, fnum, Dk in hits:
        ppoly = pivots[k][3]
        fac = RatFunc(LaurentPoly(fnum)) * Dk * RatFunc(1, LaurentPoly(ppoly))
        for t, poly in pivots[k][2].items():
            if t < 0:
                continue
            add = fac * LaurentPoly(poly) * scales[t]
            nv = coeffs.get(t, RF_ZERO) + add
            if nv.is_zero:
                coeffs.pop(t, None)
            else:
                coeffs[t] = nv
    return {indices[t]: (c / xscale).light_reduced()
            for t, c in coeffs.items() if not (c / xscale).is_zero}


# predicates on PBW indices for the coproduct congruences
def LE2_NEG(ix: PBWIndex) -> bool:
    """No plus or imaginary block and height at most -2."""
    return not ix.plus and not ix.imag and ix.weight.r <= -2


def ZERO_NEG1(ix: PBWIndex) -> bool:
    """No plus block and a nonempty smaller-side block (height <= -1)."""
    return not ix.plus and bool(ix.minus)


def r_congruent(t1, t2, predicate) -> bool:
    """Congruence of two Cartan-stripped coproduct tensors modulo the
    subspace of tensors whose left leg straightens into PBW monomials
    matching the predicate.

    Left weights where the predicate cannot fire are tested as plain tensor
    blocks against the pairing (no straightening); elsewhere the left legs
    are combined per right word and straightened once each."""
    from . import bilinear
    from .freealg import w_weight
    diff = t1 - t2
    byweight = {}
    for (w1, w2), c in diff.terms.items():
        byweight.setdefault(w_weight(w1), {}).setdefault(w1, []).append((w2, c))
    for nu, block in byweight.items():
        droppable = [ix for ix in enumerate_pbw(nu) if predicate(ix)]
        if not droppable:
            if not _tensor_block_zero(block, nu):
                return False
            continue
        # group the left legs by right word: one straightening per w2
        byright = {}
        for w1, rights in block.items():
            for w2, c in rights:
                slot = byright.setdefault(w2, {})
                s = slot.get(w1)
                s = c if s is None else s + c
                if s.is_zero:
                    slot.pop(w1, None)
                else:
                    slot[w1] = s
        legmap = {}
        for w2, left_terms in byright.items():
            if not left_terms:
                continue
            left = FreeElt(nu, dict(left_terms))
            for ix, coeff in straighten(left).items():
                if predicate(ix):
                    continue
                cur = legmap.get(ix)
                add = FreeElt.from_word(w2, coeff)
                legmap[ix] = add if cur is None else cur + add
        for ix, leg in legmap.items():
            if not bilinear.is_zero_uplus(leg):
                return False
    return True


def _tensor_block_zero(block, nu) -> bool:
    """Zero test of sum_w1 w1 (x) leg_w1 as a tensor in the quotient: for
    every support word u, sum_w1 (u, w1) leg_w1 must vanish.  Sound because
    the form is anisotropic, so its Gram on any set of classes has the rank
    of their span."""
    from . import bilinear
    from .bilinear import _spair, _decode
    legs = {}
    for w1, rights in block.items():
        leg = None
        for w2, c in rights:
            add = FreeElt.from_word(w2, c)
            leg = add if leg is None else leg + add
        if leg is not None and not leg.is_zero:
            legs[w1] = leg
    if not legs:
        return True
    for u in legs:
        comb = None
        for w1, leg in legs.items():
            g = _decode(_spair(u, w1))
            if g.is_zero:
                continue
            add = leg.scale(g)
            comb = add if comb is None else comb + add
        if comb is not None and not bilinear.is_zero_uplus(comb):
            return False
    return True


def prune_le(t, min_ht: int):
    """Drop tensor terms whose left weight has height below min_ht.  Only
    valid when every left leg is known to lie inside the smaller-side
    subalgebra (then a homogeneous component of height <= -2 lies entirely
    in the congruence subspace)."""
    from .bilinear import FreeTensor
    from .freealg import w_weight
    out = FreeTensor()
    for (w1, w2), c in t.terms.items():
        if w_weight(w1).r >= min_ht:
            out.add_term(w1, w2, c)
    return out


def integrality(x: FreeElt, flavor: str = "P") -> bool:
    """Whether x straightens with coefficients in Z[v, v^-1]."""
    if x.is_zero:
        return True
    for c in straighten(x, flavor).values():
        num, den = c.normalized()
        if den != LaurentPoly({0: 1}):
            return False
        if any(getattr(f, "denominator", 1) != 1 for f in num.c.values()):
            return False
    return True


# ---------------------------------------------------------------------------
# the integral D families


_DMINUS = {}


def D_minus(s: int, t: int) -> FreeElt:
    """The smaller-side integral family, defined by induction on s."""
    if s < 0 or t < 0:
        return FreeElt.zero()
    if s == 0:
        return FreeElt.unit() if t == 0 else FreeElt.zero()
    got = _DMINUS.get((s, t))
    if got is not None:
        return got
    e0 = FreeElt.gen(0)
    Edm = E("-a1", 1)
    acc = FreeElt.zero()
    if s >= 2 and 3 <= t <= 2 * s - 1:
        for k in range((t + 2) // 2, min(t - 1, s) + 1):
            for l in range(t - k + 1, min(3 * (t - k), k) + 1):
                inner = D_minus(t - k, 3 * (t - k) - l)
                if inner.is_zero:
                    continue
                term = braid.T_pa_free(inner) \
                    * divided(Edm, k - l, 1) * divided(e0, s - k, 0)
                acc = acc + term.scale(
                    RatFunc(vpow(-(3 * (t - k) - l) * (k - l))
                            * qpow(-2 * (t - k) * (s - k))))
    if s >= t:
        acc = acc + divided(Edm, t, 1) * divided(e0, s - t, 0)
    _DMINUS[(s, t)] = acc
    return acc


def d_small(s: int, t: int, p: int):
    """The coproduct companions of the D- family.  Out-of-range parameters
    raise; the value can be a scalar multiple of 1 (psi_0 branch)."""
    if not (s >= 1 and 1 <= t <= 2 * s - 1 and 1 <= p <= (t + 1) // 2):
        raise ValueError("d parameters out of range: %s" % ((s, t, p),))
    acc = FreeElt.zero()
    qd = RatFunc(V - vpow(-1))
    for i in range(0, (t - 2 * p + 1) // 2 + 1):
        dm = D_minus(s - p - i, t - 2 * p - 2 * i + 1)
        if dm.is_zero:
            continue
        c = RatFunc(vpow((-2 * s + t) * (2 * p + 2 * i) + t + 1)) * qd
        if i == 0:
            term = dm.scale(psi0() * c)
        else:
            term = (psi(i) * dm).scale(c)
        acc = acc + term
    return acc


_DPLUS = {}


def D_plus(n: int, r: int) -> FreeElt:
    """The greater-side family, transported from D- through T1^-1 star."""
    if n < 0 or r < 0:
        return FreeElt.zero()
    if n == 0:
        return divided(FreeElt.gen(1), r, 1)
    if r == 0:
        return FreeElt.zero()  # D+_{nd} = delta_{n,0}
    got = _DPLUS.get((n, r))
    if got is not None:
        return got
    e1 = FreeElt.gen(1)
    acc = FreeElt.zero()
    for i in range(1, min(r, 2 * n) + 1):
        dm = D_minus(n, 2 * n - i)
        if dm.is_zero:
            continue
        term = divided(e1, r - i, 1) * braid.T1inv_star_free(dm)
        acc = acc + term.scale(RatFunc(vpow((-2 * n + i) * (r - i))))
    _DPLUS[(n, r)] = acc
    return acc


def D_geq0(n: int, r: int) -> FreeElt:
    """D>=0_{nd + r a1} = sum_i D+_{(n-i)d + r a1} P_i q^(-ir)."""
    acc = FreeElt.zero()
    for i in range(0, n + 1):
        dp = D_plus(n - i, r)
        if dp.is_zero:
            continue
        acc = acc + (dp * P(i)).scale(RatFunc(qpow(-i * r)))
    return acc


def thm_com_rhs(s: int, r: int) -> FreeElt:
    """The straightened form of E_{a0}^(s) E_{a1}^(r)."""
    acc = FreeElt.zero()
    if s >= 1:
        for t in range(0, min(2 * s - 1, r) + 1):
            for i in range(0, t // 2 + 1):
                g = D_geq0(i, r - t)
                dm = D_minus(s - i, t - 2 * i)
                if g.is_zero or dm.is_zero:
                    continue
                acc = acc + (g * dm).scale(
                    RatFunc(qpow(i * (r - 2 * s)) * vpow((r - t) * (-4 * s + t))))
    if r >= 2 * s:
        acc = acc + D_geq0(s, r - 2 * s)
    return acc


def thm_com_check(s: int, r: int) -> bool:
    from . import bilinear
    lhs = divided(FreeElt.gen(0), s, 0) * divided(FreeElt.gen(1), r, 1)
    return bilinear.is_zero_uplus(lhs - thm_com_rhs(s, r))


# flavor conversion matrices on the imaginary block, per degree
def conversion_matrix(d: int, src: str, dst: str):
    """Matrix of the identity from the src monomial basis to the dst one on
    the degree-d imaginary block, as {(row partition, col partition): coeff}.
    Bases: psi monomials, P monomials, Schur elements."""
    from .rootvec import p_poly_mul, psi_in_P, schur_in_P
    parts = sorted(_partitions(d), reverse=True)

    def in_P(flavor, lam):
        if flavor == "P":
            return {tuple(sorted(lam, reverse=True)): RF_ONE}
        if flavor == "psi":
            acc = {(): RF_ONE}
            for k in lam:
                acc = p_poly_mul(acc, psi_in_P(k))
            return acc
        if flavor == "schur":
            return schur_in_P(lam)
        raise ValueError(flavor)

    # express src basis in P coordinates, then change to dst coordinates by
    # solving against the dst expansion (triangular in practice)
    dst_cols = {lam: in_P(dst, lam) for lam in parts}
    out = {}
    for lam in parts:
        vec = dict(in_P(src, lam))
        # eliminate: dst columns are unitriangular against the P-monomial
        # basis under any order refinement of dominance, so greedy works
        remaining = dict(vec)
        used = {}
        for _ in range(4 ** len(parts) + len(parts) + 1):
            if not remaining:
                break
            key = min(remaining)
            # the dst column whose smallest P-monomial is the key (the dst
            # bases are unitriangular with distinct leading monomials)
            hit = None
            for mu in parts:
                if min(dst_cols[mu]) == key:
                    hit = mu
                    break
            if hit is None:
                raise ArithmeticError("conversion failed at degree %d" % d)
            f = remaining[key] / dst_cols[hit][key]
            used[hit] = used.get(hit, RF_ZERO) + f
            for k, c in dst_cols[hit].items():
                nv = remaining.get(k, RF_ZERO) - f * c
                if nv.is_zero:
                    remaining.pop(k, None)
                else:
                    remaining[k] = nv
        if remaining:
            raise ArithmeticError("conversion failed at degree %d" % d)
        for mu, c in used.items():
            if not c.is_zero:
                out[(mu, lam)] = c
    return parts, out
