"""Pure-Python backend for sparse integer-polynomial arithmetic.

A polynomial is a dict mapping packed monomial keys to nonzero Python ints.
Keys pack the exponent vector into a single int, 16 bits per field, with the
total degree in the topmost field so that plain integer comparison of keys is
exactly graded-lex comparison of monomials.  Multiplying two monomials is key
addition; no field can carry as long as every total degree stays below 2**15,
which ``p_mul`` guards once per call via the leading keys.

The compiled twin ``_poly_c`` implements the identical interface; either one
is selected at import time by ``qalg._kernel``.
"""

from math import gcd

FIELD_BITS = 16
DEGREE_LIMIT = 1 << (FIELD_BITS - 1)

BACKEND = "py"


def p_add(a, b):
    if not a:
        return dict(b)
    if not b:
        return dict(a)
    out = dict(a)
    get = out.get
    for k, c in b.items():
        s = get(k, 0) + c
        if s:
            out[k] = s
        elif k in out:
            del out[k]
    return out


def p_sub(a, b):
    if not b:
        return dict(a)
    out = dict(a)
    get = out.get
    for k, c in b.items():
        s = get(k, 0) - c
        if s:
            out[k] = s
        elif k in out:
            del out[k]
    return out


def p_neg(a):
    return {k: -c for k, c in a.items()}


def p_scale(a, c):
    if c == 0:
        return {}
    if c == 1:
        return dict(a)
    return {k: c * v for k, v in a.items()}


def p_mul_mono(a, key, c):
    """Multiply by the single term c*X^key (c nonzero)."""
    if c == 1:
        return {k + key: v for k, v in a.items()}
    return {k + key: c * v for k, v in a.items()}


def p_mul(a, b, degshift):
    """Product of two polynomials; degshift locates the packed degree field."""
    if not a or not b:
        return {}
    if (max(a) >> degshift) + (max(b) >> degshift) >= DEGREE_LIMIT:
        raise OverflowError("polynomial degree exceeds packed-monomial capacity")
    if len(a) < len(b):
        a, b = b, a
    out = {}
    get = out.get
    bitems = list(b.items())
    for ka, ca in a.items():
        for kb, cb in bitems:
            k = ka + kb
            s = get(k, 0) + ca * cb
            if s:
                out[k] = s
            elif k in out:
                del out[k]
    return out


def p_content(a):
    """Positive gcd of all coefficients; 0 for the zero polynomial."""
    g = 0
    for c in a.values():
        g = gcd(g, c)
        if g == 1:
            return 1
    return g


def p_div_int(a, g):
    """Exact division of every coefficient by the integer g."""
    if g == 1:
        return dict(a)
    return {k: c // g for k, c in a.items()}


def p_max_key(a):
    """Leading monomial under graded lex; a must be nonempty."""
    return max(a)
