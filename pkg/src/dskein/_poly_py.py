"""Pure-Python kernel for exact Laurent-polynomial arithmetic over Q.

A Laurent polynomial is a dict mapping integer exponents of q to nonzero
rational coefficients, each coefficient a pair (num, den) of ints with
den > 0 and gcd(num, den) == 1.  These functions are the hot loop of the
whole package; a compiled drop-in replacement lives in _poly_kernel.pyx.
"""

from math import gcd

KERNEL = "python"

# Exponents are kept well inside machine-int range; anything this large
# indicates a runaway computation rather than a real answer.
MAX_EXP = 1 << 20


class ExponentOverflow(ArithmeticError):
    pass


def _rat_add(a, b):
    an, ad = a
    bn, bd = b
    n = an * bd + bn * ad
    d = ad * bd
    if n == 0:
        return (0, 1)
    g = gcd(n, d)
    return (n // g, d // g)


def _rat_mul(a, b):
    an, ad = a
    bn, bd = b
    g1 = gcd(abs(an), bd)
    g2 = gcd(abs(bn), ad)
    return ((an // g1) * (bn // g2), (ad // g2) * (bd // g1))


def lp_zero():
    return {}

def lp_one():
    return {0: (1, 1)}


def lp_is_zero(a):
    return not a


def lp_add(a, b):
    if not a:
        return dict(b)
    if not b:
        return dict(a)
    out = dict(a)
    for e, c in b.items():
        if e in out:
            s = _rat_add(out[e], c)
            if s[0] == 0:
                del out[e]
            else:
                out[e] = s
        else:
            out[e] = c
    return out


def lp_neg(a):
    return {e: (-n, d) for e, (n, d) in a.items()}


def lp_sub(a, b):
    return lp_add(a, lp_neg(b))


def lp_scale(a, num, den):
    """Multiply by the rational num/den (need not be reduced)."""
    if num == 0:
        return {}
    if den < 0:
        num, den = -num, -den
    g = gcd(abs(num), den)
    num //= g
    den //= g
    out = {}
    for e, c in a.items():
        out[e] = _rat_mul(c, (num, den))
    return out


def lp_shift(a, k):
    if k == 0:
        return dict(a)
    out = {}
    for e, c in a.items():
        e2 = e + k
        if abs(e2) > MAX_EXP:
            raise ExponentOverflow(f"exponent {e2} out of range")
        out[e2] = c
    return out


def lp_mul(a, b):
    if not a or not b:
        return {}
    out = {}
    for ea, (na, da) in a.items():
        for eb, (nb, db) in b.items():
            e = ea + eb
            if abs(e) > MAX_EXP:
                raise ExponentOverflow(f"exponent {e} out of range")
            g1 = gcd(abs(na), db)
            g2 = gcd(abs(nb), da)
            n = (na // g1) * (nb // g2)
            d = (da // g2) * (db // g1)
            cur = out.get(e)
            if cur is None:
                out[e] = (n, d)
            else:
                cn, cd = cur
                nn = cn * d + n * cd
                nd = cd * d
                if nn == 0:
                    del out[e]
                else:
                    g = gcd(nn, nd)
                    out[e] = (nn // g, nd // g)
    return out


# -- integer (dense) polynomial helpers used for canonical reduction --------

def _ilist_gcd(coeffs):
    g = 0
    for c in coeffs:
        g = gcd(g, abs(c))
        if g == 1:
            return 1
    return g


def to_int_poly(a):
    """Split a nonzero Laurent dict as (c_num, c_den, shift, prim) with

        a == (c_num / c_den) * q**shift * prim(q)

    where prim is a dense primitive int list, prim[0] != 0, leading != 0.
    """
    exps = sorted(a)
    lo, hi = exps[0], exps[-1]
    L = 1
    for e in exps:
        d = a[e][1]
        L = L // gcd(L, d) * d
    coeffs = [0] * (hi - lo + 1)
    for e in exps:
        n, d = a[e]
        coeffs[e - lo] = n * (L // d)
    g = _ilist_gcd(coeffs)
    if g > 1:
        coeffs = [c // g for c in coeffs]
    else:
        g = 1
    return g, L, lo, coeffs


def int_poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def int_poly_divmod_exact(a, b):
    """Exact division of int polys (a = b * quot); raises if not exact."""
    a = list(a)
    db = len(b) - 1
    lead = b[-1]
    quot = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        if a[i] == 0:
            continue
        if a[i] % lead != 0:
            raise ArithmeticError("non-exact polynomial division")
        c = a[i] // lead
        quot[i - db] = c
        for j in range(db + 1):
            a[i - db + j] -= c * b[j]
    if any(a):
        raise ArithmeticError("non-exact polynomial division")
    return quot


def _prim_part(a):
    g = _ilist_gcd(a)
    if g > 1:
        a = [c // g for c in a]
    if a and a[-1] < 0:
        a = [-c for c in a]
    return a


def int_poly_gcd(a, b):
    """Primitive gcd of two dense int polys via the primitive PRS."""
    a = _prim_part([c for c in a])
    b = _prim_part([c for c in b])
    if not a:
        return b if b else [1]
    if not b:
        return a
    if len(a) < len(b):
        a, b = b, a
    while b:
        # pseudo-remainder of a by b
        r = list(a)
        lead = b[-1]
        db = len(b) - 1
        while len(r) - 1 >= db and any(r):
            if r[-1] == 0:
                r.pop()
                continue
            # scale r so that leading term divides
            r = [c * lead for c in r]
            c = r[-1] // b[-1]
            for j in range(db + 1):
                r[len(r) - 1 - db + j] -= c * b[j]
            while r and r[-1] == 0:
                r.pop()
        a, b = b, _prim_part(r)
    if not a:
        return [1]
    return a


def trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def frac_normalize(num, den):
    """Canonical form of the fraction num/den of Laurent dicts.

    Returns (num', den') with den' an ordinary integer polynomial dict of
    content 1, nonzero constant term with positive coefficient, and no
    common polynomial factor with num'.
    """
    if not den:
        raise ZeroDivisionError("zero denominator")
    if not num:
        return {}, {0: (1, 1)}
    gn, Ln, sn, pn = to_int_poly(num)
    gd, Ld, sd, pd = to_int_poly(den)
    g = int_poly_gcd(pn, pd)
    if len(g) > 1 or g[0] != 1:
        pn = trim(int_poly_divmod_exact(pn, g))
        pd = trim(int_poly_divmod_exact(pd, g))
    # overall rational factor (gn * Ld) / (Ln * gd), with den sign pinned
    cn = gn * Ld
    cd = Ln * gd
    if pd[0] < 0:
        pd = [-c for c in pd]
        cn = -cn
    g2 = gcd(abs(cn), cd)
    cn //= g2
    cd //= g2
    shift = sn - sd
    if abs(shift) + len(pn) > MAX_EXP:
        raise ExponentOverflow("exponent out of range")
    num2 = {}
    for i, c in enumerate(pn):
        if c:
            n = cn * c
            g3 = gcd(abs(n), cd)
            num2[shift + i] = (n // g3, cd // g3)
    den2 = {i: (c, 1) for i, c in enumerate(pd) if c}
    return num2, den2
