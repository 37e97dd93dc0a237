"""Exact coefficient arithmetic in the single variable v = q1.

Everything downstream works over Q(v) where v = q1, q = v^2, q0 = v^4.
Laurent polynomials are dicts {exponent: Fraction}; rational functions are
normalized pairs of Laurent polynomials.  All arithmetic is exact.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _intgcd

# v-exponent scale of q_i: q0 = v^4, q1 = v, plain q = v^2
QSCALE = {0: 4, 1: 1, "plain": 2}


def theta(p) -> int:
    """theta(P) is 1 when the statement P holds and 0 otherwise."""
    return 1 if p else 0


def delta(i, j) -> int:
    return 1 if i == j else 0


class LaurentPoly:
    """A Laurent polynomial in v with rational coefficients.

    Stored as a dict {exponent: Fraction} with no zero values.  Instances
    are treated as immutable; operations return new objects.
    """

    __slots__ = ("c",)

    def __init__(self, coeffs=None):
        d = {}
        if coeffs:
            for k, val in coeffs.items():
                if isinstance(val, Fraction) and val.denominator == 1:
                    val = val.numerator
                if val:
                    d[k] = val
        self.c = d

    @staticmethod
    def term(coeff, exp=0) -> "LaurentPoly":
        return LaurentPoly({exp: coeff})

    @property
    def is_zero(self) -> bool:
        return not self.c

    def degree(self) -> int:
        if not self.c:
            raise ValueError("degree of zero polynomial")
        return max(self.c)

    def valuation(self) -> int:
        if not self.c:
            raise ValueError("valuation of zero polynomial")
        return min(self.c)

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.c == other.c
        if isinstance(other, (int, Fraction)):
            return self.c == LaurentPoly.term(other).c
        return NotImplemented

    def __hash__(self):
        return hash(tuple(sorted(self.c.items())))

    def __add__(self, other):
        other = _as_lp(other)
        d = dict(self.c)
        for k, val in other.c.items():
            s = d.get(k, 0) + val
            if s:
                d[k] = s
            else:
                d.pop(k, None)
        out = LaurentPoly()
        out.c = d
        return out

    def __neg__(self):
        out = LaurentPoly()
        out.c = {k: -val for k, val in self.c.items()}
        return out

    def __sub__(self, other):
        return self + (-_as_lp(other))

    def __mul__(self, other):
        other = _as_lp(other)
        a, b = self.c, other.c
        if not a or not b:
            return LaurentPoly()
        if len(a) > len(b):
            a, b = b, a
        if len(a) * len(b) >= 256:
            d = _try_kron_mul(a, b)
            if d is not None:
                out = LaurentPoly()
                out.c = d
                return out
        d = {}
        for k1, v1 in a.items():
            for k2, v2 in b.items():
                k = k1 + k2
                s = d.get(k, 0) + v1 * v2
                if s:
                    d[k] = s
                else:
                    del d[k]
        out = LaurentPoly()
        out.c = d
        return out

    __radd__ = __add__
    __rmul__ = __mul__

    def __rsub__(self, other):
        return _as_lp(other) - self

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of LaurentPoly; use RatFunc")
        out = LP_ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by v^k."""
        out = LaurentPoly()
        out.c = {e + k: val for e, val in self.c.items()}
        return out

    def bar(self) -> "LaurentPoly":
        """The bar involution v -> v^-1."""
        out = LaurentPoly()
        out.c = {-e: val for e, val in self.c.items()}
        return out

    def subs_int(self, a: int, p: int) -> int:
        """Evaluate at v = a modulo the prime p (coefficients must embed)."""
        ainv = pow(a, p - 2, p)
        tot = 0
        for e, val in self.c.items():
            den = val.denominator % p
            num = val.numerator % p
            t = num * pow(den, p - 2, p) % p
            t = t * (pow(a, e, p) if e >= 0 else pow(ainv, -e, p)) % p
            tot = (tot + t) % p
        return tot

    def __str__(self):
        if not self.c:
            return "0"
        parts = []
        for e in sorted(self.c, reverse=True):
            co = self.c[e]
            sign = "-" if co < 0 else "+"
            co = abs(co)
            if e == 0:
                body = str(co)
            else:
                vp = "v" if e == 1 else "v^%d" % e
                body = vp if co == 1 else "%s*%s" % (co, vp)
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        s = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            s += " %s %s" % (sign, body)
        return s

    __repr__ = __str__

    def to_json(self):
        """List of [exponent, numerator, denominator] triples, decreasing exponent."""
        return [[e, self.c[e].numerator, self.c[e].denominator]
                for e in sorted(self.c, reverse=True)]


def _as_lp(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return LaurentPoly.term(x)
    raise TypeError("cannot coerce %r to LaurentPoly" % (x,))


def kron_mul_int(a: dict, b: dict) -> dict:
    """Multiply integer Laurent dicts through a big-integer substitution
    (exact: the digit width strictly bounds the product coefficients)."""
    va, vb = min(a), min(b)
    ma = max(abs(c) for c in a.values())
    mb = max(abs(c) for c in b.values())
    K = (ma * mb * min(len(a), len(b))).bit_length() + 2
    A = 0
    for e, c in a.items():
        A += c << (K * (e - va))
    B = 0
    for e, c in b.items():
        B += c << (K * (e - vb))
    P = A * B
    out = {}
    e = va + vb
    mask = (1 << K) - 1
    half = 1 << (K - 1)
    while P:
        d = P & mask
        if d >= half:
            d -= 1 << K
        if d:
            out[e] = d
        P = (P - d) >> K
        e += 1
    return out


def _try_kron_mul(a: dict, b: dict):
    for c in a.values():
        if c.__class__ is not int:
            return None
    for c in b.values():
        if c.__class__ is not int:
            return None
    return kron_mul_int(a, b)


LP_ZERO = LaurentPoly()
LP_ONE = LaurentPoly({0: 1})
V = LaurentPoly({1: 1})


def _dense(p: LaurentPoly):
    """Shift to an ordinary polynomial (valuation 0) as a dense Fraction list."""
    val = p.valuation()
    deg = p.degree()
    out = [Fraction(0)] * (deg - val + 1)
    for e, c in p.c.items():
        out[e - val] = Fraction(c)
    return out


def _from_dense(lst, val=0) -> LaurentPoly:
    return LaurentPoly({i + val: c for i, c in enumerate(lst) if c})


def _dense_divmod(a, b):
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    q = [Fraction(0)] * max(0, len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        if a[i]:
            f = a[i] / lb
            q[i - db] = f
            for j in range(db + 1):
                a[i - db + j] -= f * b[j]
    while len(a) > 1 and not a[-1]:
        a.pop()
    return q, a


def _icontent(a):
    g = 0
    for c in a:
        g = _intgcd(g, abs(c))
        if g == 1:
            return 1
    return g or 1


def _dense_gcd(a, b):
    """gcd of dense Fraction polynomial lists via the primitive pseudo
    remainder sequence over the integers (coefficient sizes stay tame)."""
    def to_int(p):
        den = 1
        for c in p:
            den = den * c.denominator // _intgcd(den, c.denominator)
        out = [int(c * den) for c in p]
        g = _icontent(out)
        return [c // g for c in out]

    A, B = to_int(a), to_int(b)
    if len(A) < len(B):
        A, B = B, A
    while any(B):
        da, db = len(A) - 1, len(B) - 1
        lb = B[-1]
        R = [c * lb ** (da - db + 1) for c in A]
        for i in range(da, db - 1, -1):
            if R[i]:
                f, rem = divmod(R[i], lb)
                assert rem == 0
                for j in range(db + 1):
                    R[i - db + j] -= f * B[j]
        while len(R) > 1 and not R[-1]:
            R.pop()
        g = _icontent(R)
        A, B = B, [c // g for c in R] if any(R) else [0]
        if len(A) < len(B):
            A, B = B, A
    lead = A[-1]
    return [Fraction(c, lead) for c in A]


def lp_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """gcd up to units (v-powers and rational scalars); result has valuation 0."""
    if a.is_zero:
        return b if b.is_zero else _from_dense(_dense(b))
    if b.is_zero:
        return _from_dense(_dense(a))
    g = _dense_gcd(_dense(a), _dense(b))
    return _from_dense(g)


def lp_divexact(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Exact division a / b; raises if the division leaves a remainder."""
    if a.is_zero:
        return LP_ZERO
    shift = a.valuation() - b.valuation()
    q, r = _dense_divmod(_dense(a), _dense(b))
    if any(r):
        raise ValueError("inexact Laurent division")
    return _from_dense(q, shift)


def _lp_try_div_int(a: LaurentPoly, b: LaurentPoly):
    """a / b over the integers when b has lead +-1.  Returns the quotient,
    False when certainly inexact, or None when this path does not apply."""
    va, da = a.valuation(), a.degree()
    vb, db = b.valuation(), b.degree()
    if da - va < db - vb:
        return False
    A = [0] * (da - va + 1)
    for e, c in a.c.items():
        if c.__class__ is not int:
            return None
        A[e - va] = c
    B = [0] * (db - vb + 1)
    for e, c in b.c.items():
        if c.__class__ is not int:
            return None
        B[e - vb] = c
    lb = B[-1]
    if lb not in (1, -1):
        return None
    nb = len(B) - 1
    q = [0] * (len(A) - nb)
    for i in range(len(A) - 1, nb - 1, -1):
        ci = A[i]
        if ci:
            f = ci * lb
            q[i - nb] = f
            for j in range(nb):
                A[i - nb + j] -= f * B[j]
            A[i] = 0
    if any(A[:nb]):
        return False
    return _from_dense(q, va - vb)


def _prim_int(p: LaurentPoly):
    """Split p = content * v^val * prim where prim has coprime integer
    coefficients, valuation 0, and a positive leading coefficient."""
    val = p.valuation()
    den = 1
    for c in p.c.values():
        den = den * c.denominator // _intgcd(den, c.denominator)
    num = 0
    for c in p.c.values():
        num = _intgcd(num, abs(c.numerator * (den // c.denominator)))
    if num == 0:
        num = 1
    if p.c[p.degree()] < 0:
        num = -num
    content = Fraction(num, den)
    prim = LaurentPoly({e - val: c / content for e, c in p.c.items()})
    return content, val, prim


# denominator atoms: interned primitive integer polynomials (valuation 0,
# positive leading coefficient).  Fractions carry multisets of atom ids, so
# multiplication never needs a gcd and addition cancels by exact division.
_ATOMS = [None]
_ATOM_IDS = {}
_ATOM_BARS = {}


def _intern_atom(prim: LaurentPoly) -> int:
    key = tuple(sorted(prim.c.items()))
    got = _ATOM_IDS.get(key)
    if got is None:
        _ATOMS.append(prim)
        got = _ATOM_IDS[key] = len(_ATOMS) - 1
    return got


def _atom_bar(aid: int):
    """bar of an atom as (unit LaurentPoly, atom id)."""
    got = _ATOM_BARS.get(aid)
    if got is None:
        content, val, prim = _prim_int(_ATOMS[aid].bar())
        unit = LaurentPoly({val: content})
        got = _ATOM_BARS[aid] = (unit, _intern_atom(prim))
    return got


def _dens_mul(d1, d2):
    if not d1:
        return d2
    if not d2:
        return d1
    m = dict(d1)
    for a, k in d2:
        m[a] = m.get(a, 0) + k
    return tuple(sorted(m.items()))


_ATOM_POWS = {}


def _atom_pow(a: int, k: int) -> LaurentPoly:
    got = _ATOM_POWS.get((a, k))
    if got is None:
        got = _ATOM_POWS[(a, k)] = _ATOMS[a] ** k
    return got


def _dens_value(dens) -> LaurentPoly:
    out = LP_ONE
    for a, k in dens:
        out = out * (_ATOMS[a] ** k)
    return out


class RatFunc:
    """A rational function in v: a Laurent numerator over a multiset of
    denominator atoms.  The representation is reduced opportunistically
    (exact division by atoms after sums); canonical form on demand."""

    __slots__ = ("num", "dens")

    def __init__(self, num, den=None):
        num = _as_lp(num)
        if den is None:
            self.num, self.dens = num, ()
            return
        den = _as_lp(den)
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        if num.is_zero:
            self.num, self.dens = LP_ZERO, ()
            return
        content, val, prim = _prim_int(den)
        num = LaurentPoly({e - val: c / content for e, c in num.c.items()})
        if prim == LP_ONE:
            self.num, self.dens = num, ()
        else:
            self.num, self.dens = num, ((_intern_atom(prim), 1),)
            self._cancel()

    @staticmethod
    def _make(num, dens) -> "RatFunc":
        out = RatFunc.__new__(RatFunc)
        out.num = num
        out.dens = () if num.is_zero else dens
        return out

    @staticmethod
    def of(x) -> "RatFunc":
        if isinstance(x, RatFunc):
            return x
        return RatFunc(_as_lp(x))

    def _cancel(self):
        if not self.dens or self.num.is_zero:
            self.dens = ()
            return
        out = []
        for a, k in self.dens:
            atom = _ATOMS[a]
            while k > 0:
                q = _lp_try_div_int(self.num, atom)
                if q is False:
                    break
                if q is None:
                    try:
                        q = lp_divexact(self.num, atom)
                    except ValueError:
                        break
                self.num = q
                k -= 1
            if k:
                out.append((a, k))
        self.dens = tuple(out)

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_laurent(self) -> bool:
        return not self.dens

    @property
    def den(self) -> LaurentPoly:
        return _dens_value(self.dens)

    def normalized(self):
        """Fully reduced (num, den) with den primitive integer, positive
        lead, valuation 0 and gcd(num, den) = 1."""
        num, den = self.num, _dens_value(self.dens)
        if num.is_zero:
            return LP_ZERO, LP_ONE
        if den != LP_ONE:
            g = lp_gcd(num, den)
            if g != LP_ONE:
                num = lp_divexact(num, g)
                den = lp_divexact(den, g)
            content, val, prim = _prim_int(den)
            num = LaurentPoly({e - val: c / content for e, c in num.c.items()})
            den = prim
        return num, den

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, LaurentPoly)):
            other = RatFunc.of(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return (self - other).is_zero

    def __hash__(self):
        return hash(self.normalized())

    def __add__(self, other):
        other = RatFunc.of(other)
        if self.dens == other.dens:
            return RatFunc._make(self.num + other.num, self.dens)
        d1 = dict(self.dens)
        d2 = dict(other.dens)
        common = dict(d1)
        for a, k in d2.items():
            if common.get(a, 0) < k:
                common[a] = k
        n1, n2 = self.num, other.num
        for a, k in common.items():
            e1 = k - d1.get(a, 0)
            e2 = k - d2.get(a, 0)
            if e1:
                n1 = n1 * _atom_pow(a, e1)
            if e2:
                n2 = n2 * _atom_pow(a, e2)
        return RatFunc._make(n1 + n2, tuple(sorted(common.items())))

    def __neg__(self):
        return RatFunc._make(-self.num, self.dens)

    def __sub__(self, other):
        return self + (-RatFunc.of(other))

    def __rsub__(self, other):
        return RatFunc.of(other) - self

    def __mul__(self, other):
        other = RatFunc.of(other)
        num = self.num * other.num
        if num.is_zero:
            return RF_ZERO
        return RatFunc._make(num, _dens_mul(self.dens, other.dens))

    __radd__ = __add__
    __rmul__ = __mul__

    def inv(self) -> "RatFunc":
        if self.is_zero:
            raise ZeroDivisionError("inverse of zero")
        content, val, prim = _prim_int(self.num)
        num = LaurentPoly({-val: 1 / content}) * _dens_value(self.dens)
        if prim == LP_ONE:
            return RatFunc._make(num, ())
        out = RatFunc._make(num, ((_intern_atom(prim), 1),))
        out._cancel()
        return out

    def __truediv__(self, other):
        return self * RatFunc.of(other).inv()

    def __rtruediv__(self, other):
        return RatFunc.of(other) * self.inv()

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        out = RF_ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def bar(self) -> "RatFunc":
        # bar(atom^-k) = unit^-k * prim^-k where bar(atom) = unit * prim
        num = self.num.bar()
        dens = {}
        for a, k in self.dens:
            unit, ab = _atom_bar(a)
            dens[ab] = dens.get(ab, 0) + k
            uinv = LaurentPoly({-e: 1 / c for e, c in unit.c.items()})
            num = num * (uinv ** k)
        return RatFunc._make(num, tuple(sorted(dens.items())))

    def reduced(self) -> "RatFunc":
        """Fully reduced copy (gcd removed, denominator re-interned)."""
        num, den = self.normalized()
        if den == LP_ONE:
            return RatFunc._make(num, ())
        return RatFunc._make(num, ((_intern_atom(den), 1),))

    def light_reduced(self) -> "RatFunc":
        """Cancel denominator atoms that divide the numerator exactly;
        no polynomial gcd."""
        if not self.dens:
            return self
        out = RatFunc._make(self.num, self.dens)
        out._cancel()
        return out

    def subs_int(self, a: int, p: int) -> int:
        d = 1
        for aid, k in self.dens:
            d = d * pow(_ATOMS[aid].subs_int(a, p), k, p) % p
        if d == 0:
            raise ZeroDivisionError("denominator vanishes at evaluation point")
        return self.num.subs_int(a, p) * pow(d, p - 2, p) % p

    def __str__(self):
        num, den = self.normalized()
        if den == LP_ONE:
            return str(num)
        return "(%s)/(%s)" % (num, den)

    __repr__ = __str__


RF_ZERO = RatFunc(LP_ZERO)
RF_ONE = RatFunc(LP_ONE)
RF_V = RatFunc(V)


def vpow(k: int) -> LaurentPoly:
    """v^k as a LaurentPoly."""
    return LaurentPoly({k: 1})


def qpow(k: int) -> LaurentPoly:
    """q^k = v^(2k)."""
    return LaurentPoly({2 * k: 1})


def qint(k: int, level=1) -> LaurentPoly:
    """The quantum integer [k]_i = (q_i^k - q_i^-k)/(q_i - q_i^-1).

    level 0 uses q0 = v^4, level 1 uses q1 = v, "plain" uses q = v^2.
    """
    e = QSCALE[level]
    if k == 0:
        return LP_ZERO
    if k < 0:
        return -qint(-k, level)
    return LaurentPoly({e * (k - 1 - 2 * j): 1 for j in range(k)})


def qfact(k: int, level=1) -> LaurentPoly:
    """[k]_i! = [1]_i [2]_i ... [k]_i."""
    out = LP_ONE
    for p in range(1, k + 1):
        out = out * qint(p, level)
    return out


def qbinom(n: int, m: int, level=1) -> LaurentPoly:
    """The Gaussian binomial [n choose m]_i, a Laurent polynomial."""
    if m < 0 or m > n:
        return LP_ZERO
    num = LP_ONE
    for j in range(1, m + 1):
        num = num * qint(n - m + j, level)
    return lp_divexact(num, qfact(m, level))


def inv_qfact(k: int, level=1) -> "RatFunc":
    """1/[k]_i! with the denominator kept as separate quantum integer atoms."""
    out = RF_ONE
    for j in range(2, k + 1):
        out = out * RatFunc(1, qint(j, level))
    return out


# cyclotomic factor 1 - q + q^2 that divides both b_n numerators
_B_DEN = LaurentPoly({0: 1, 2: -1, 4: 1})


def b(n: int) -> LaurentPoly:
    """The element b_n of Z[q, q^-1] controlling the height-one commutators."""
    if n % 2 == 0:
        i = n // 2
        # (1 - q)((-q)^-i - q^(2i)(q + q^-1))
        sgn = 1 if i % 2 == 0 else -1
        num = LaurentPoly({-2 * i: sgn, 2 * (2 * i + 1): -1, 2 * (2 * i - 1): -1})
        num = LaurentPoly({0: 1, 2: -1}) * num
    else:
        i = (n - 1) // 2
        sgn = 1 if i % 2 == 0 else -1
        # (-q)^-i + q^(2i+1)(q - 1)
        num = LaurentPoly({-2 * i: sgn, 2 * (2 * i + 2): 1, 2 * (2 * i + 1): -1})
    return lp_divexact(num, _B_DEN)


def _u_reduced(f: RatFunc):
    """Rewrite f in u = v^-1 as u^s * (a*P)/(b*Q) in lowest integer terms.

    Returns (s, b, Q0) where s is the u-adic valuation, b the residual
    rational denominator, Q0 the constant term of the primitive integer
    denominator polynomial.  f must be nonzero.
    """
    num, den = f.normalized()
    dn, dd = num.degree(), den.degree()
    # reverse: p(1/u) * u^deg(p) has nonzero constant term
    revn = LaurentPoly({dn - e: c for e, c in num.c.items()})
    revd = LaurentPoly({dd - e: c for e, c in den.c.items()})
    g = lp_gcd(revn, revd)
    if g != LP_ONE:
        revn = lp_divexact(revn, g)
        revd = lp_divexact(revd, g)
    cn, _, pn = _prim_int(revn)
    cd, _, pd = _prim_int(revd)
    scale = cn / cd
    return dd - dn, Fraction(scale).denominator, pd.c.get(0, Fraction(0))


def in_ring_A(f) -> bool:
    """Membership in A = Q(q1) ∩ Z[[q1^-1]].

    True iff f, rewritten in u = 1/v, has no pole at u = 0 and its lowest
    integer terms have a unit denominator constant term (Fatou criterion).
    """
    f = RatFunc.of(f)
    if f.is_zero:
        return True
    s, b, q0 = _u_reduced(f)
    return s >= 0 and b == 1 and abs(q0) == 1


def in_qinv_A(f) -> bool:
    """Membership in q1^-1 A: an A-element whose u-series has no constant term."""
    f = RatFunc.of(f)
    if f.is_zero:
        return True
    s, b, q0 = _u_reduced(f)
    return s >= 1 and b == 1 and abs(q0) == 1


def a_series(f: RatFunc, order: int):
    """Brute-force expansion of f as a series in u = 1/v to the given order.

    Returns the list of coefficients [c_0, ..., c_order] as Fractions, or
    None when f has a pole at u = 0.  Independent oracle for in_ring_A.
    """
    f = RatFunc.of(f)
    if f.is_zero:
        return [Fraction(0)] * (order + 1)
    num, den = f.normalized()
    dn, dd = num.degree(), den.degree()
    if dn > dd:
        return None
    nrev = {dd - e: Fraction(c) for e, c in num.c.items()}
    drev = {dd - e: Fraction(c) for e, c in den.c.items()}
    out = []
    d0 = drev.get(0)
    for k in range(order + 1):
        acc = nrev.get(k, Fraction(0))
        for j in range(1, k + 1):
            if j in drev and (k - j) < len(out):
                acc -= drev[j] * out[k - j]
        out.append(acc / d0)
    return out
