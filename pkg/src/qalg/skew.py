"""The quantum torus R = C_v[x^+-1, y^+-1] and its localization B = C(x)[y, y^+-1].

The defining relation is v*x*y = y*x with v = q^2, equivalently
y^b x^a = q^(2ab) x^a y^b, so every element has a normal form with all x-powers
left of all y-powers.  B is the left localization at S = C[x,x^-1] \\ {0};
its elements are written sum_j r_j(x) y^j with rational-function coefficients
on the left, and y r(x) = r(q^2 x) y.
"""

from .errors import (
    DivisionByZeroElement,
    NotInS,
    NotInvertible,
    WidthTooLarge,
)
from .scalars import Scalar


def _check_ctx(a, b):
    if a.ctx is not b.ctx:
        raise ValueError("elements from different contexts")


class TorusElement:
    """Normal-form element of the quantum torus: finite map (a, b) -> Scalar."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx, terms=None):
        self.ctx = ctx
        self.terms = {k: c for k, c in (terms or {}).items() if not c.is_zero()}

    @classmethod
    def from_scalar(cls, ctx, s):
        if isinstance(s, int):
            s = ctx.integer(s)
        return cls(ctx, {(0, 0): s})

    @classmethod
    def monomial(cls, ctx, a, b, coeff=None):
        return cls(ctx, {(a, b): coeff if coeff is not None else ctx.one})

    @classmethod
    def x(cls, ctx, exp=1):
        return cls.monomial(ctx, exp, 0)

    @classmethod
    def y(cls, ctx, exp=1):
        return cls.monomial(ctx, 0, exp)

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        _check_ctx(self, other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        return TorusElement(self.ctx, out)

    def __neg__(self):
        return TorusElement(self.ctx, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Scalar):
            return self.scale(other)
        _check_ctx(self, other)
        ctx = self.ctx
        out = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                # (x^a1 y^b1)(x^a2 y^b2) = q^(2 b1 a2) x^(a1+a2) y^(b1+b2)
                k = (a1 + a2, b1 + b2)
                c = c1 * c2
                if b1 and a2:
                    c = c * ctx.q_power(2 * b1 * a2)
                s = out.get(k)
                s = c if s is None else s + c
                if s.is_zero():
                    out.pop(k, None)
                else:
                    out[k] = s
        return TorusElement(ctx, out)

    def scale(self, s):
        if s.is_zero():
            return TorusElement(self.ctx)
        return TorusElement(self.ctx, {k: c * s for k, c in self.terms.items()})

    def __pow__(self, e):
        ctx = self.ctx
        if e == 0:
            return TorusElement.from_scalar(ctx, ctx.one)
        base = self
        if e < 0:
            base = self.inv()
            e = -e
        out = base
        for _ in range(e - 1):
            out = out * base
        return out

    def inv(self):
        if len(self.terms) != 1:
            raise NotInvertible("only torus monomials are invertible")
        ((a, b), c), = self.terms.items()
        # (x^a y^b)^-1 = q^(2ab) x^-a y^-b
        coeff = c.inv() * self.ctx.q_power(2 * a * b)
        return TorusElement(self.ctx, {(-a, -b): coeff})

    def __eq__(self, other):
        if not isinstance(other, TorusElement):
            return NotImplemented
        _check_ctx(self, other)
        if set(self.terms) != set(other.terms):
            return False
        return all(c == other.terms[k] for k, c in self.terms.items())

    __hash__ = None

    def y_degrees(self):
        return {b for (_, b) in self.terms}

    def x_coeff_map(self):
        """Group terms by y-degree: {b: {a: Scalar}}."""
        out = {}
        for (a, b), c in self.terms.items():
            out.setdefault(b, {})[a] = c
        return out

    def eval_coeffs(self, bindings):
        """Coefficient-wise numeric evaluation: {(a, b): Fraction}."""
        return {k: c.eval(bindings) for k, c in self.terms.items()}

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for a, b in sorted(self.terms):
            c = self.terms[(a, b)]
            parts.append(_render_term(c, _mono_str((("x", a), ("y", b))), not parts))
        return " ".join(parts)

    def __repr__(self):
        return f"TorusElement({self})"

    def to_json_terms(self):
        return [
            {"xexp": a, "yexp": b, "coeff": str(self.terms[(a, b)])}
            for a, b in sorted(self.terms)
        ]


def _mono_str(pairs):
    factors = []
    for name, e in pairs:
        if e == 1:
            factors.append(name)
        elif e:
            factors.append(f"{name}^{e}")
    return "*".join(factors)


def _render_term(coeff, mono, first):
    """One rendered summand with sign folded into the separator."""
    neg = coeff.is_negative_leading()
    mag = -coeff if neg else coeff
    body, atomic = mag.render_atom()
    if mono:
        if mag.is_one():
            text = mono
        elif atomic:
            text = f"{body}*{mono}"
        else:
            text = f"({body})*{mono}"
    else:
        text = body if atomic else f"({body})"
    if first:
        return ("-" if neg else "") + text
    return ("- " if neg else "+ ") + text


class RatFuncX:
    """A rational function in x over the scalar field, denominator monic."""

    __slots__ = ("ctx", "num", "den")

    def __init__(self, ctx, num, den=None, _normalized=False):
        self.ctx = ctx
        if _normalized:
            self.num = num
            self.den = den
            return
        if den is None:
            den = {0: ctx.one}
        num = {e: c for e, c in num.items() if not c.is_zero()}
        den = {e: c for e, c in den.items() if not c.is_zero()}
        if not den:
            raise DivisionByZeroElement("rational function with zero denominator")
        if not num:
            self.num = {}
            self.den = {0: ctx.one}
            return
        shift = min(min(num), min(den))
        if shift:
            num = {e - shift: c for e, c in num.items()}
            den = {e - shift: c for e, c in den.items()}
        lead = den[max(den)]
        if not lead.is_one():
            inv = lead.inv()
            num = {e: c * inv for e, c in num.items()}
            den = {e: c * inv for e, c in den.items()}
        self.num = num
        self.den = den

    @classmethod
    def from_scalar(cls, ctx, s):
        if isinstance(s, int):
            s = ctx.integer(s)
        return cls(ctx, {0: s})

    @classmethod
    def x(cls, ctx, exp=1):
        if exp >= 0:
            return cls(ctx, {exp: ctx.one})
        return cls(ctx, {0: ctx.one}, {-exp: ctx.one})

    @classmethod
    def from_x_laurent(cls, ctx, coeffs):
        """Build from {exponent: Scalar} with possibly negative exponents."""
        if not coeffs:
            return cls.zero(ctx)
        low = min(coeffs)
        if low >= 0:
            return cls(ctx, dict(coeffs))
        num = {e - low: c for e, c in coeffs.items()}
        return cls(ctx, num, {-low: ctx.one})

    @classmethod
    def zero(cls, ctx):
        return cls(ctx, {})

    @classmethod
    def one(cls, ctx):
        return cls(ctx, {0: ctx.one})

    def is_zero(self):
        return not self.num

    def __add__(self, other):
        other = self._coerce(other)
        _check_ctx(self, other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.den == other.den:
            return RatFuncX(self.ctx, _xp_add(self.num, other.num), dict(self.den))
        num = _xp_add(_xp_mul(self.num, other.den), _xp_mul(other.num, self.den))
        return RatFuncX(self.ctx, num, _xp_mul(self.den, other.den))

    def __neg__(self):
        return RatFuncX(self.ctx, {e: -c for e, c in self.num.items()}, dict(self.den),
                        _normalized=True)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        if isinstance(other, Scalar):
            if other.is_zero():
                return RatFuncX.zero(self.ctx)
            return RatFuncX(self.ctx, {e: c * other for e, c in self.num.items()},
                            dict(self.den))
        other = self._coerce(other)
        _check_ctx(self, other)
        if self.is_zero() or other.is_zero():
            return RatFuncX.zero(self.ctx)
        return RatFuncX(self.ctx, _xp_mul(self.num, other.num), _xp_mul(self.den, other.den))

    def __truediv__(self, other):
        other = self._coerce(other)
        return self * other.inv()

    def inv(self):
        if self.is_zero():
            raise DivisionByZeroElement("inverse of zero rational function")
        return RatFuncX(self.ctx, dict(self.den), dict(self.num))

    def __pow__(self, e):
        if e == 0:
            return RatFuncX.one(self.ctx)
        base = self if e > 0 else self.inv()
        out = base
        for _ in range(abs(e) - 1):
            out = out * base
        return out

    def _coerce(self, other):
        if isinstance(other, RatFuncX):
            return other
        if isinstance(other, Scalar):
            return RatFuncX.from_scalar(self.ctx, other)
        if isinstance(other, int):
            return RatFuncX.from_scalar(self.ctx, self.ctx.integer(other))
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, (RatFuncX, Scalar, int)):
            return NotImplemented
        other = self._coerce(other)
        _check_ctx(self, other)
        if self.num == other.num and self.den == other.den:
            return True
        return _xp_eq(_xp_mul(self.num, other.den), _xp_mul(other.num, self.den))

    __hash__ = None

    def shift(self, k):
        """Substitute x -> q^(2k) x, the automorphism implementing y^k r = r(.)y^k."""
        if k == 0 or self.is_zero():
            return self
        ctx = self.ctx
        num = {e: c * ctx.q_power(2 * k * e) for e, c in self.num.items()}
        den = {e: c * ctx.q_power(2 * k * e) for e, c in self.den.items()}
        return RatFuncX(ctx, num, den)

    def in_S(self):
        """True when the element lies in S: nonzero with monomial denominator."""
        return bool(self.num) and len(self.den) == 1

    def as_x_laurent(self):
        """{exponent: Scalar} Laurent form; requires a monomial denominator."""
        if not self.in_S():
            if self.is_zero():
                return {}
            raise NotInS("denominator is not a monomial in x")
        (shift, lead), = self.den.items()
        return {e - shift: c for e, c in self.num.items()}

    def eval_coeffs(self, bindings):
        """Evaluate num/den coefficient-wise; returns ({e: Fr}, {e: Fr})."""
        return (
            {e: c.eval(bindings) for e, c in self.num.items()},
            {e: c.eval(bindings) for e, c in self.den.items()},
        )

    def render_poly(self, terms):
        if not terms:
            return "0"
        parts = []
        for e in sorted(terms, reverse=True):
            parts.append(_render_term(terms[e], _mono_str((("x", e),)), not parts))
        return " ".join(parts)

    def __str__(self):
        num = self.render_poly(self.num)
        if self.den == {0: self.ctx.one}:
            return num
        return f"({num})/({self.render_poly(self.den)})"

    def __repr__(self):
        return f"RatFuncX({self})"


def _xp_add(a, b):
    out = dict(a)
    for e, c in b.items():
        s = out.get(e)
        s = c if s is None else s + c
        if s.is_zero():
            out.pop(e, None)
        else:
            out[e] = s
    return out


def _xp_mul(a, b):
    out = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = e1 + e2
            c = c1 * c2
            s = out.get(e)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(e, None)
            else:
                out[e] = s
    return out


def _xp_eq(a, b):
    if set(a) != set(b):
        return False
    return all(c == b[e] for e, c in a.items())


class BElement:
    """Element of B = C(x)[y, y^-1]: finite map yexp -> RatFuncX."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx, terms=None):
        self.ctx = ctx
        self.terms = {j: r for j, r in (terms or {}).items() if not r.is_zero()}

    @classmethod
    def from_ratfunc(cls, r, yexp=0):
        return cls(r.ctx, {yexp: r})

    @classmethod
    def from_torus(cls, t):
        out = {}
        for b, xcoeffs in t.x_coeff_map().items():
            out[b] = RatFuncX.from_x_laurent(t.ctx, xcoeffs)
        return cls(t.ctx, out)

    @classmethod
    def y(cls, ctx, exp=1):
        return cls(ctx, {exp: RatFuncX.one(ctx)})

    @classmethod
    def zero(cls, ctx):
        return cls(ctx)

    def is_zero(self):
        return not self.terms

    def width(self):
        """y-width: max - min stored exponent; None for the zero element."""
        if not self.terms:
            return None
        return max(self.terms) - min(self.terms)

    def __add__(self, other):
        _check_ctx(self, other)
        out = dict(self.terms)
        for j, r in other.terms.items():
            s = out.get(j)
            s = r if s is None else s + r
            if s.is_zero():
                out.pop(j, None)
            else:
                out[j] = s
        return BElement(self.ctx, out)

    def __neg__(self):
        return BElement(self.ctx, {j: -r for j, r in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (RatFuncX, Scalar)):
            return self.scale_right(other)
        _check_ctx(self, other)
        out = {}
        for i, r1 in self.terms.items():
            for j, r2 in other.terms.items():
                # (r1 y^i)(r2 y^j) = r1 * r2(q^(2i) x) y^(i+j)
                k = i + j
                r = r1 * r2.shift(i)
                s = out.get(k)
                s = r if s is None else s + r
                if s.is_zero():
                    out.pop(k, None)
                else:
                    out[k] = s
        return BElement(self.ctx, out)

    def scale_left(self, r):
        """Multiply by a rational function on the left."""
        if isinstance(r, Scalar):
            r = RatFuncX.from_scalar(self.ctx, r)
        return BElement(self.ctx, {j: r * rj for j, rj in self.terms.items()})

    scale_right = scale_left  # left coefficients: r * (rj y^j) = (r rj) y^j

    def __pow__(self, e):
        if e == 0:
            return BElement(self.ctx, {0: RatFuncX.one(self.ctx)})
        base = self if e > 0 else self.inv()
        out = base
        for _ in range(abs(e) - 1):
            out = out * base
        return out

    def inv(self):
        if not b_is_unit(self):
            raise NotInvertible("only monomials r(x) y^k are invertible in B")
        (k, r), = self.terms.items()
        return BElement(self.ctx, {-k: r.shift(-k).inv()})

    def __eq__(self, other):
        if not isinstance(other, BElement):
            return NotImplemented
        _check_ctx(self, other)
        if set(self.terms) != set(other.terms):
            return False
        return all(r == other.terms[j] for j, r in self.terms.items())

    __hash__ = None

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for j in sorted(self.terms):
            r = self.terms[j]
            mono = _mono_str((("y", j),))
            if r.den == {0: self.ctx.one} and len(r.num) == 1:
                e, c = next(iter(r.num.items()))
                parts.append(_render_term(c, _mono_str((("x", e), ("y", j))), not parts))
                continue
            body = str(r)
            if "/" not in body and " " not in body:
                text = f"{body}*{mono}" if mono else body
            elif "/" in body:
                text = f"{body}*{mono}" if mono else body
            else:
                text = f"({body})*{mono}" if mono else f"({body})"
            parts.append(text if not parts else "+ " + text)
        return " ".join(parts)

    def __repr__(self):
        return f"BElement({self})"

    def to_json_terms(self):
        return [
            {
                "yexp": j,
                "num": self.terms[j].render_poly(self.terms[j].num),
                "den": self.terms[j].render_poly(self.terms[j].den),
            }
            for j in sorted(self.terms)
        ]


def torus_mul(a, b):
    """Product in the quantum torus (normal form)."""
    return a * b


def ore_left_multiple(s, a):
    """Left Ore witness for (s, a): returns (h, b) with b*s = h*a exactly.

    s must lie in S = C[x,x^-1] \\ {0}; a is a torus element sum f_i(x) y^i.
    Uses h(x) = prod_{f_i != 0} s(v^i x) and b_i = f_i * prod_{j != i} s(v^j x),
    which avoids any division: h f_i / s(v^i x) is assembled as a product.
    """
    if isinstance(s, TorusElement):
        if set(s.y_degrees()) - {0}:
            raise NotInS("s must not involve y")
        s = RatFuncX.from_x_laurent(s.ctx, s.x_coeff_map().get(0, {}))
    if not isinstance(s, RatFuncX):
        raise TypeError("s must be a RatFuncX or x-only TorusElement")
    if s.is_zero() or not s.in_S():
        raise NotInS("s must be a nonzero Laurent polynomial in x")
    ctx = s.ctx
    if a.is_zero():
        return s, TorusElement(ctx)
    s_laurent = s.as_x_laurent()
    coeffs = a.x_coeff_map()
    supp = sorted(coeffs)

    def shifted(i):
        # s(v^i x) with v = q^2: coefficient of x^d picks up q^(2id)
        return {d: c * ctx.q_power(2 * i * d) for d, c in s_laurent.items()}

    shifts = {i: shifted(i) for i in supp}
    h_laurent = {0: ctx.one}
    for i in supp:
        h_laurent = _xp_mul(h_laurent, shifts[i])
    b_terms = {}
    for i in supp:
        prod = dict(coeffs[i])
        for j in supp:
            if j != i:
                prod = _xp_mul(prod, shifts[j])
        for d, c in prod.items():
            if not c.is_zero():
                b_terms[(d, i)] = c
    return RatFuncX.from_x_laurent(ctx, h_laurent), TorusElement(ctx, b_terms)


def b_left_divmod(a, d):
    """Left Euclidean division in B: a = quot*d + rem with width(rem) < width(d).

    Eliminates from the top y-degree; the quotient coefficient divides by the
    leading coefficient of d shifted through y^(t - top(d)).
    """
    _check_ctx(a, d)
    if d.is_zero():
        raise DivisionByZeroElement("left division by zero in B")
    ctx = a.ctx
    w_d = d.width()
    top_d = max(d.terms)
    lead_d = d.terms[top_d]
    quot = BElement(ctx)
    rem = a
    while not rem.is_zero() and rem.width() >= w_d:
        t = max(rem.terms)
        shift = t - top_d
        coeff = rem.terms[t] / lead_d.shift(shift)
        term = BElement(ctx, {shift: coeff})
        quot = quot + term
        rem = rem - term * d
    return quot, rem


def b_is_unit(a):
    """Units of B are exactly the nonzero monomials r(x) y^k."""
    return len(a.terms) == 1


def b_is_irreducible_width1(a):
    """Irreducibility for y-width <= 1: every width-1 element is irreducible.

    Width-0 elements (and 0) are units or zero, hence not irreducible; width
    >= 2 is outside what this library decides.
    """
    w = a.width()
    if w is None or w == 0:
        return False
    if w == 1:
        return True
    raise WidthTooLarge(f"irreducibility undecided for y-width {w}")


def alpha_coefficients(alpha):
    """Split a width-1 element as (f, g) with unit-normalized alpha' = f(x)y - g(x).

    Any width-1 alpha equals a unit times f(x) y - g(x); the quotient module
    B/B*alpha only depends on the left ideal, so the unit is dropped.
    """
    if alpha.width() != 1:
        raise WidthTooLarge("quotient action requires y-width exactly 1")
    lo = min(alpha.terms)
    f = alpha.terms[lo + 1].shift(-lo)
    g = -alpha.terms[lo].shift(-lo)
    return f, g


def quotient_action(alpha, elem, v):
    """Action of a ring element on B/B*alpha (ambient module), alpha = f y - g.

    The module is C(x) via the coset of v(x); x acts by multiplication,
    y acts by v(x) -> v(q^2 x) g(x)/f(x), and y^-1 by the inverse substitution.
    """
    f, g = alpha_coefficients(alpha)
    if f.is_zero() or g.is_zero():
        raise WidthTooLarge("alpha must have both y-degrees present")
    ctx = alpha.ctx
    if isinstance(elem, TorusElement):
        elem = BElement.from_torus(elem)

    def act_y(w):
        return w.shift(1) * (g / f)

    def act_y_inv(w):
        return w.shift(-1) * (f.shift(-1) / g.shift(-1))

    out = RatFuncX.zero(ctx)
    for j, r in elem.terms.items():
        w = v
        for _ in range(abs(j)):
            w = act_y(w) if j > 0 else act_y_inv(w)
        out = out + r * w
    return out
