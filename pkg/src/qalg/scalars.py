"""Exact scalars: the field Q(q, ...) of rational functions over the rationals.

A ``ScalarContext`` fixes an ordered tuple of commuting indeterminates (always
containing "q"); a ``Scalar`` is a fraction of integer-coefficient polynomials
in those indeterminates.  Scalars are kept content-free and sign-normalized
(denominator leading coefficient positive under graded lex) but are not forced
into a fully canonical form: equality is decided by exact cross-multiplication.
Cheap reductions that pay for themselves are applied on construction: common
monomial factors are cancelled, and when a fraction involves a single
indeterminate it is reduced by a univariate gcd.

Generic parameters such as lambda, mu, c, x1 are modelled as extra free
indeterminates adjoined to Q(q); they can equally be supplied as explicit
elements of Q(q).
"""

from fractions import Fraction
from math import gcd

from ._kernel import FIELD_BITS, kernel
from .errors import DivisionByZero, PoleAtPoint, UnboundSymbol

_EXP_MASK = (1 << FIELD_BITS) - 1


class ScalarContext:
    """An ordered set of indeterminate names; owns all caches for its field."""

    def __init__(self, symbols=("q",)):
        symbols = tuple(symbols)
        if "q" not in symbols:
            raise ValueError('ScalarContext must contain the symbol "q"')
        if len(set(symbols)) != len(symbols):
            raise ValueError("indeterminate names must be distinct")
        for name in symbols:
            if not name.isidentifier():
                raise ValueError(f"bad indeterminate name: {name!r}")
        self.symbols = symbols
        self.nsyms = len(symbols)
        self.degshift = FIELD_BITS * self.nsyms
        self._index = {name: i for i, name in enumerate(symbols)}
        self._sym_cache = {}
        self._qpow_cache = {}
        self._ef_cache = {}  # used by qalg.uq for E^c F^a expansions
        self.zero = Scalar(self, {}, {0: 1}, _normalized=True)
        self.one = Scalar(self, {0: 1}, {0: 1}, _normalized=True)
        self.minus_one = Scalar(self, {0: -1}, {0: 1}, _normalized=True)

    def __repr__(self):
        return f"ScalarContext{self.symbols}"

    def index_of(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise UnboundSymbol(f"symbol {name!r} not in context {self.symbols}") from None

    def mono_key(self, exponents):
        """Pack an exponent tuple (one entry per symbol) into a monomial key."""
        key = 0
        total = 0
        for i, e in enumerate(exponents):
            if e < 0:
                raise ValueError("polynomial exponents must be nonnegative")
            if e >= 1 << (FIELD_BITS - 1):
                raise OverflowError("exponent exceeds packed-monomial capacity")
            total += e
            key |= e << (FIELD_BITS * (self.nsyms - 1 - i))
        return key | (total << self.degshift)

    def unpack_key(self, key):
        """Inverse of mono_key; drops the degree field."""
        return tuple(
            (key >> (FIELD_BITS * (self.nsyms - 1 - i))) & _EXP_MASK
            for i in range(self.nsyms)
        )

    def integer(self, n):
        if n == 0:
            return self.zero
        if n == 1:
            return self.one
        if n == -1:
            return self.minus_one
        return Scalar(self, {0: n}, {0: 1}, _normalized=True)

    def rational(self, num, den=1):
        if isinstance(num, Fraction):
            num, den = num.numerator * den, num.denominator
        if den == 0:
            raise DivisionByZero("rational with zero denominator")
        if den < 0:
            num, den = -num, -den
        g = gcd(num, den)
        if g > 1:
            num, den = num // g, den // g
        return Scalar(self, {0: num} if num else {}, {0: den}, _normalized=True)

    def sym(self, name, exp=1):
        """The scalar name**exp (exp may be negative)."""
        cached = self._sym_cache.get((name, exp))
        if cached is not None:
            return cached
        i = self.index_of(name)
        mono = {self.mono_key(tuple(abs(exp) if j == i else 0 for j in range(self.nsyms))): 1}
        if exp >= 0:
            s = Scalar(self, mono, {0: 1}, _normalized=True)
        else:
            s = Scalar(self, {0: 1}, mono, _normalized=True)
        self._sym_cache[(name, exp)] = s
        return s

    def q_power(self, exp):
        """q**exp, cached; the workhorse coefficient of every commutation rule."""
        cached = self._qpow_cache.get(exp)
        if cached is None:
            cached = self.sym("q", exp)
            self._qpow_cache[exp] = cached
        return cached


def _check_ctx(a, b):
    if a.ctx is not b.ctx:
        raise ValueError("scalars from different contexts")


def _poly_symbols(ctx, terms):
    """Indices of symbols occurring in a term dict."""
    used = set()
    for key in terms:
        for i in range(ctx.nsyms):
            if (key >> (FIELD_BITS * (ctx.nsyms - 1 - i))) & _EXP_MASK:
                used.add(i)
    return used


def _mono_gcd_key(ctx, *term_dicts):
    """Componentwise-min monomial over all keys of all dicts, as a packed key."""
    mins = None
    for terms in term_dicts:
        for key in terms:
            exps = ctx.unpack_key(key)
            if mins is None:
                mins = list(exps)
            else:
                for i, e in enumerate(exps):
                    if e < mins[i]:
                        mins[i] = e
            if mins is not None and not any(mins):
                return 0
    if mins is None or not any(mins):
        return 0
    return ctx.mono_key(tuple(mins))


def _shift_down(terms, key):
    return {k - key: c for k, c in terms.items()}


def _to_dense(ctx, terms, sym_index):
    """Dense coefficient list of a single-symbol polynomial (low to high)."""
    shift = FIELD_BITS * (ctx.nsyms - 1 - sym_index)
    deg = 0
    for key in terms:
        deg = max(deg, (key >> shift) & _EXP_MASK)
    out = [0] * (deg + 1)
    for key, c in terms.items():
        out[(key >> shift) & _EXP_MASK] = c
    return out


def _from_dense(ctx, coeffs, sym_index):
    terms = {}
    for e, c in enumerate(coeffs):
        if c:
            terms[ctx.mono_key(tuple(e if j == sym_index else 0 for j in range(ctx.nsyms)))] = c
    return terms


def _dense_content(p):
    g = 0
    for c in p:
        g = gcd(g, c)
    return g or 1


def _dense_primitive(p):
    g = _dense_content(p)
    return [c // g for c in p]


def _dense_rem(a, b):
    """Pseudo-remainder of dense int polynomials, content-stripped each step."""
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(a) - 1 >= db and any(a):
        da = len(a) - 1
        if a[-1] == 0:
            a.pop()
            continue
        la = a[-1]
        g = gcd(la, lb)
        mul_a, mul_b = lb // g, la // g
        a = [c * mul_a for c in a]
        for i in range(db + 1):
            a[da - db + i] -= mul_b * b[i]
        while a and a[-1] == 0:
            a.pop()
        if a:
            a = _dense_primitive(a)
    return a


def _dense_gcd(a, b):
    """Primitive gcd of dense int polynomials via the Euclidean remainder chain."""
    a = _dense_primitive([c for c in a])
    b = _dense_primitive([c for c in b])
    while a and a[-1] == 0:
        a.pop()
    while b and b[-1] == 0:
        b.pop()
    while b:
        a, b = b, _dense_rem(a, b)
    return a


def _dense_divexact(a, b):
    """Exact quotient a/b of dense int polynomials (b | a)."""
    out = [0] * (len(a) - len(b) + 1)
    a = list(a)
    db = len(b) - 1
    for i in range(len(out) - 1, -1, -1):
        c = a[i + db]
        if c:
            qc = c // b[-1]
            out[i] = qc
            for j in range(db + 1):
                a[i + j] -= qc * b[j]
    return out


class Scalar:
    """An element of the rational-function field of a ScalarContext."""

    __slots__ = ("ctx", "num", "den")

    def __init__(self, ctx, num, den, _normalized=False):
        self.ctx = ctx
        if _normalized:
            self.num = num
            self.den = den
            return
        if not den:
            raise DivisionByZero("scalar with zero denominator")
        if not num:
            self.num = {}
            self.den = {0: 1}
            return
        # cancel a common monomial factor
        mono = _mono_gcd_key(ctx, num, den)
        if mono:
            num = _shift_down(num, mono)
            den = _shift_down(den, mono)
        # univariate fractions reduce by an exact gcd
        used = _poly_symbols(ctx, num) | _poly_symbols(ctx, den)
        if len(used) == 1 and (len(num) > 1 or len(den) > 1):
            i = used.pop()
            dnum, dden = _to_dense(ctx, num, i), _to_dense(ctx, den, i)
            g = _dense_gcd(dnum, dden)
            if len(g) > 1:
                num = _from_dense(ctx, _dense_divexact(dnum, g), i)
                den = _from_dense(ctx, _dense_divexact(dden, g), i)
        # integer content and denominator sign
        g = gcd(kernel.p_content(num), kernel.p_content(den))
        if den[kernel.p_max_key(den)] < 0:
            g = -g
        if g != 1:
            num = kernel.p_div_int(num, g)
            den = kernel.p_div_int(den, g)
        self.num = num
        self.den = den

    # -- predicates ------------------------------------------------------

    def is_zero(self):
        return not self.num

    def is_one(self):
        return self.num == self.den

    def is_integer(self):
        """The int value when the scalar is a plain integer, else None."""
        if self.den == {0: 1} and (not self.num or set(self.num) == {0}):
            return self.num.get(0, 0)
        return None

    def as_monomial(self):
        """(coeff_fraction, exponent_tuple) when num and den are single terms."""
        if len(self.num) != 1 or len(self.den) != 1:
            return None
        (knum, cnum), = self.num.items()
        (kden, cden), = self.den.items()
        exps = tuple(a - b for a, b in zip(self.ctx.unpack_key(knum), self.ctx.unpack_key(kden)))
        return Fraction(cnum, cden), exps

    # -- field arithmetic --------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        _check_ctx(self, other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        shift = self.ctx.degshift
        if self.den == other.den:
            return Scalar(self.ctx, kernel.p_add(self.num, other.num), dict(self.den))
        num = kernel.p_add(
            kernel.p_mul(self.num, other.den, shift),
            kernel.p_mul(other.num, self.den, shift),
        )
        return Scalar(self.ctx, num, kernel.p_mul(self.den, other.den, shift))

    def __sub__(self, other):
        other = self._coerce(other)
        _check_ctx(self, other)
        if other.is_zero():
            return self
        if self.is_zero():
            return -other
        shift = self.ctx.degshift
        if self.den == other.den:
            return Scalar(self.ctx, kernel.p_sub(self.num, other.num), dict(self.den))
        num = kernel.p_sub(
            kernel.p_mul(self.num, other.den, shift),
            kernel.p_mul(other.num, self.den, shift),
        )
        return Scalar(self.ctx, num, kernel.p_mul(self.den, other.den, shift))

    def __neg__(self):
        return Scalar(self.ctx, kernel.p_neg(self.num), dict(self.den), _normalized=True)

    def __mul__(self, other):
        other = self._coerce(other)
        _check_ctx(self, other)
        if self.is_zero() or other.is_zero():
            return self.ctx.zero
        shift = self.ctx.degshift
        if self.is_one():
            return other
        if other.is_one():
            return self
        return Scalar(
            self.ctx,
            kernel.p_mul(self.num, other.num, shift),
            kernel.p_mul(self.den, other.den, shift),
        )

    def __truediv__(self, other):
        other = self._coerce(other)
        return self * other.inv()

    __radd__ = __add__
    __rmul__ = __mul__

    def __rsub__(self, other):
        return self._coerce(other) - self

    def inv(self):
        if self.is_zero():
            raise DivisionByZero("inverse of zero scalar")
        return Scalar(self.ctx, dict(self.den), dict(self.num))

    def __pow__(self, e):
        if e == 0:
            return self.ctx.one
        base = self if e > 0 else self.inv()
        out = base
        for _ in range(abs(e) - 1):
            out = out * base
        return out

    def _coerce(self, other):
        if isinstance(other, Scalar):
            return other
        if isinstance(other, int):
            return self.ctx.integer(other)
        if isinstance(other, Fraction):
            return self.ctx.rational(other)
        return NotImplemented

    # -- equality: exact cross-multiplication, never sampling ---------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self._coerce(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        _check_ctx(self, other)
        if self.num == other.num and self.den == other.den:
            return True
        shift = self.ctx.degshift
        return kernel.p_mul(self.num, other.den, shift) == kernel.p_mul(other.num, self.den, shift)

    def __ne__(self, other):
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    __hash__ = None

    # -- evaluation ---------------------------------------------------------

    def eval(self, bindings):
        """Exact value at a rational point; bindings map symbol name -> Fraction.

        Raises UnboundSymbol for a missing binding of an occurring symbol and
        PoleAtPoint when the denominator vanishes at the point.
        """
        point = {}
        for i, name in enumerate(self.ctx.symbols):
            if name in bindings:
                point[i] = Fraction(bindings[name])
        used = _poly_symbols(self.ctx, self.num) | _poly_symbols(self.ctx, self.den)
        for i in used:
            if i not in point:
                raise UnboundSymbol(f"no binding for {self.ctx.symbols[i]!r}")
        den = self._eval_poly(self.den, point)
        if den == 0:
            raise PoleAtPoint("denominator vanishes at the evaluation point")
        return self._eval_poly(self.num, point) / den

    def _eval_poly(self, terms, point):
        ctx = self.ctx
        total = Fraction(0)
        for key, c in terms.items():
            val = Fraction(c)
            for i, e in enumerate(ctx.unpack_key(key)):
                if e:
                    val *= point[i] ** e
            total += val
        return total

    # -- rendering ----------------------------------------------------------

    def render_poly(self, terms):
        """Deterministic text for one polynomial: graded-lex descending terms."""
        ctx = self.ctx
        if not terms:
            return "0"
        parts = []
        for key in sorted(terms, reverse=True):
            c = terms[key]
            exps = ctx.unpack_key(key)
            factors = []
            for name, e in zip(ctx.symbols, exps):
                if e == 1:
                    factors.append(name)
                elif e:
                    factors.append(f"{name}^{e}")
            mag = abs(c)
            if factors and mag == 1:
                body = "*".join(factors)
            elif factors:
                body = "*".join([str(mag)] + factors)
            else:
                body = str(mag)
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __str__(self):
        num = self.render_poly(self.num)
        if self.den == {0: 1}:
            return num
        return f"({num})/({self.render_poly(self.den)})"

    def __repr__(self):
        return f"Scalar({self})"

    def is_negative_leading(self):
        """True when the numerator's graded-lex leading coefficient is negative."""
        if not self.num:
            return False
        return self.num[kernel.p_max_key(self.num)] < 0

    def render_atom(self):
        """Text plus a flag saying whether it can stand bare as a coefficient."""
        s = str(self)
        atomic = not (" " in s or "/" in s)
        return s, atomic


def scalar_eq(a, b):
    """Exact equality by cross-multiplication."""
    return a == b


def scalar_eval(a, bindings):
    """Exact rational value of a scalar at a point."""
    return a.eval(bindings)
