"""Exact sparse multivariate polynomials and rational functions over Q.

Variables are x1, x2, x3, ... (a countable supply; indices are unbounded).
The shift endomorphism ``frobenius`` sends x_i to x_{i+k} and is the engine
behind every twisted factorial and hook product in this package.

Representation notes
--------------------
A monomial is packed into a single int, 16 bits of exponent per variable
(variable i occupies bits [16*(i-1), 16*i)).  Monomial multiplication is then
integer addition, which keeps the exhaustive verification sweeps fast in pure
Python.  Coefficients are ints, promoted to fractions.Fraction only when a
value is genuinely non-integral.

A ``RatFunc`` is a normalized pair of polynomials.  Normalization removes the
joint integer content and any common monomial factor and makes the leading
denominator coefficient positive; it never performs polynomial GCD, so
semantic equality is always decided by cross multiplication (``rf_equal``).

Internally, values that arise as products of the "bracket" linear forms
x_{a+1}+...+x_{a+m} (and of the binomials 1 - x_S used by partition
generating functions) keep a factored form alongside the expanded dicts.
That factored bookkeeping is a pure optimization: dropping it changes
nothing semantically, only speed.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Mapping, Optional, Union

__all__ = [
    "Monomial",
    "Polynomial",
    "RatFunc",
    "DivisionByZeroError",
    "poly_add",
    "poly_mul",
    "frobenius",
    "rf_add",
    "rf_mul",
    "rf_div",
    "rf_inv",
    "rf_equal",
    "rf_frobenius",
    "rf_to_canonical_string",
]

Coeff = Union[int, Fraction]

_SHIFT = 16
_MASK = (1 << _SHIFT) - 1


class DivisionByZeroError(ZeroDivisionError):
    """Raised when a rational-function denominator is the zero polynomial."""


# ---------------------------------------------------------------------------
# packed monomial keys
# ---------------------------------------------------------------------------

def _mono_pack(exponents: Mapping[int, int]) -> int:
    key = 0
    for var, exp in exponents.items():
        if var < 1:
            raise ValueError(f"variable index must be positive, got {var}")
        if exp < 0:
            raise ValueError(f"exponent must be nonnegative, got {exp}")
        if exp:
            key += exp << (_SHIFT * (var - 1))
    return key


def _mono_unpack(key: int) -> tuple[tuple[int, int], ...]:
    """Return ((var, exp), ...) with var ascending."""
    out = []
    var = 1
    while key:
        exp = key & _MASK
        if exp:
            out.append((var, exp))
        key >>= _SHIFT
        var += 1
    return tuple(out)


def _mono_degree(key: int) -> int:
    deg = 0
    while key:
        deg += key & _MASK
        key >>= _SHIFT
    return deg


def _mono_varseq(key: int) -> tuple[int, ...]:
    """Variable-index sequence with multiplicity, e.g. x1*x3^2 -> (1, 3, 3)."""
    seq = []
    var = 1
    while key:
        exp = key & _MASK
        seq.extend([var] * exp)
        key >>= _SHIFT
        var += 1
    return tuple(seq)


def _term_order(key: int) -> tuple[int, tuple[int, ...]]:
    """Canonical order: total degree descending, then var sequence ascending."""
    seq = _mono_varseq(key)
    return (-len(seq), seq)


# ---------------------------------------------------------------------------
# dict polynomials (packed key -> coefficient)
# ---------------------------------------------------------------------------

_DP_ONE = {0: 1}


def _dp_add(a: dict, b: dict) -> dict:
    if len(a) < len(b):
        a, b = b, a
    out = dict(a)
    for k, v in b.items():
        nv = out.get(k, 0) + v
        if nv:
            out[k] = nv
        else:
            del out[k]
    return out


def _dp_neg(a: dict) -> dict:
    return {k: -v for k, v in a.items()}


def _dp_scale(a: dict, c: Coeff) -> dict:
    if c == 1:
        return dict(a)
    if c == 0:
        return {}
    return {k: v * c for k, v in a.items()}


def _dp_mul(a: dict, b: dict) -> dict:
    if not a or not b:
        return {}
    if len(a) < len(b):
        a, b = b, a
    out: dict = {}
    get = out.get
    for kb, vb in b.items():
        for ka, va in a.items():
            k = ka + kb
            nv = get(k, 0) + va * vb
            if nv:
                out[k] = nv
            else:
                del out[k]
    return out


def _dp_frobenius(a: dict, k: int) -> dict:
    if k == 0:
        return dict(a)
    shift = _SHIFT * k
    return {key << shift: v for key, v in a.items()}


def _dp_min_monomial(dicts: Iterable[dict]) -> int:
    """Packed per-variable minimum exponent over all keys of all dicts."""
    mins: Optional[dict[int, int]] = None
    for d in dicts:
        for key in d:
            exps = dict(_mono_unpack(key))
            if mins is None:
                mins = exps
            else:
                for var in list(mins):
                    e = exps.get(var, 0)
                    if e < mins[var]:
                        if e:
                            mins[var] = e
                        else:
                            del mins[var]
            if not mins:
                return 0
    if not mins:
        return 0
    return _mono_pack(mins)


def _dp_div_monomial(a: dict, mono_key: int) -> dict:
    if mono_key == 0:
        return dict(a)
    return {k - mono_key: v for k, v in a.items()}


def _coeff_clear(dicts: list[dict]) -> tuple[list[dict], Fraction]:
    """Scale int/Fraction dicts to primitive int dicts; return the scale.

    The returned dicts times ``scale`` reproduce the inputs (jointly).
    """
    lcm = 1
    for d in dicts:
        for v in d.values():
            if isinstance(v, Fraction):
                dv = v.denominator
                lcm = lcm // gcd(lcm, dv) * dv
    ints = []
    for d in dicts:
        nd = {}
        for k, v in d.items():
            iv = v * lcm
            nd[k] = int(iv)
        ints.append(nd)
    g = 0
    for d in ints:
        for v in d.values():
            g = gcd(g, v)
            if g == 1:
                break
        if g == 1:
            break
    if g > 1:
        ints = [{k: v // g for k, v in d.items()} for d in ints]
    else:
        g = max(g, 1)
    return ints, Fraction(g, lcm)


def _dp_leading_key(a: dict) -> int:
    return min(a, key=_term_order)


def _dp_div_form(p: dict, off: int, m: int) -> Optional[dict]:
    """Exact quotient of p by x_{off+1}+...+x_{off+m}, or None."""
    if not p:
        return {}
    ybit = _SHIFT * off
    if m == 1:
        unit = 1 << ybit
        out = {}
        for k, v in p.items():
            if (k >> ybit) & _MASK == 0:
                return None
            out[k - unit] = v
        return out
    g = _atom_dict(("F", off + 1, m - 1))
    buckets: dict[int, dict] = {}
    maxd = 0
    for k, v in p.items():
        d = (k >> ybit) & _MASK
        buckets.setdefault(d, {})[k - (d << ybit)] = v
        if d > maxd:
            maxd = d
    if maxd == 0:
        return None
    quotient: dict = {}
    cur = dict(buckets.get(maxd, {}))
    for d in range(maxd, 0, -1):
        if cur:
            shift = (d - 1) << ybit
            for k, v in cur.items():
                quotient[k + shift] = v
        nxt = dict(buckets.get(d - 1, {}))
        for kq, vq in cur.items():
            for kg, vg in g.items():
                kk = kq + kg
                nv = nxt.get(kk, 0) - vq * vg
                if nv:
                    nxt[kk] = nv
                else:
                    nxt.pop(kk, None)
        cur = nxt
    return quotient if not cur else None


def _dp_div_binom(p: dict, pairs: tuple[tuple[int, int], ...]) -> Optional[dict]:
    """Exact quotient of p by 1 - x^pairs, or None."""
    if not p:
        return {}
    # divisibility forces p to vanish under x_i = 1 for i in the factor
    mask = 0
    for v, _e in pairs:
        mask |= _MASK << (_SHIFT * (v - 1))
    projected: dict = {}
    for k, v in p.items():
        kk = k & ~mask
        nv = projected.get(kk, 0) + v
        if nv:
            projected[kk] = nv
        else:
            del projected[kk]
    if projected:
        return None
    u = _mono_pack(dict(pairs))
    udeg = _mono_degree(u)
    buckets: dict[int, dict] = {}
    maxdeg = 0
    for k, v in p.items():
        d = _mono_degree(k)
        buckets.setdefault(d, {})[k] = v
        if d > maxdeg:
            maxdeg = d
    qbound = maxdeg - udeg
    out: dict = {}
    for d in range(0, maxdeg + 1):
        cur = buckets.get(d)
        if not cur:
            continue
        if d > qbound:
            return None
        nxt = buckets.setdefault(d + udeg, {})
        for k, v in cur.items():
            out[k] = out.get(k, 0) + v
            kk = k + u
            nv = nxt.get(kk, 0) + v
            if nv:
                nxt[kk] = nv
            else:
                del nxt[kk]
    return {k: v for k, v in out.items() if v}


# ---------------------------------------------------------------------------
# factor atoms
# ---------------------------------------------------------------------------
#
# ("F", off, m):  the linear form x_{off+1} + ... + x_{off+m}       (m >= 1)
# ("B", pairs):   the binomial 1 - x^pairs, pairs = ((var, exp), ...) sorted

Atom = tuple


@lru_cache(maxsize=None)
def _atom_dict(atom: Atom) -> dict:
    kind = atom[0]
    if kind == "F":
        _, off, m = atom
        return {1 << (_SHIFT * (off + i)): 1 for i in range(m)}
    if kind == "B":
        _, pairs = atom
        return {0: 1, _mono_pack(dict(pairs)): -1}
    raise ValueError(f"unknown atom kind {atom!r}")


def _atom_shift(atom: Atom, k: int) -> Atom:
    if k == 0:
        return atom
    if atom[0] == "F":
        return ("F", atom[1] + k, atom[2])
    return ("B", tuple((v + k, e) for v, e in atom[1]))


def _binom_atom(mono_key: int) -> Atom:
    return ("B", _mono_unpack(mono_key))


def _dp_as_form(p: dict) -> Optional[Atom]:
    """Recognize x_{a+1}+...+x_{a+m} (unit coefficients, consecutive run)."""
    if not p:
        return None
    vars_seen = []
    for k, v in p.items():
        if v != 1:
            return None
        unpacked = _mono_unpack(k)
        if len(unpacked) != 1 or unpacked[0][1] != 1:
            return None
        vars_seen.append(unpacked[0][0])
    vars_seen.sort()
    lo, hi = vars_seen[0], vars_seen[-1]
    if hi - lo + 1 != len(vars_seen):
        return None
    return ("F", lo - 1, hi - lo + 1)


def _dp_as_binom(p: dict) -> Optional[tuple[int, Atom]]:
    """Recognize s*(1 - x^m) with s = +-1; return (s, atom)."""
    if len(p) != 2 or 0 not in p:
        return None
    s = p[0]
    if s not in (1, -1):
        return None
    (key, v), = ((k, v) for k, v in p.items() if k != 0)
    if v != -s:
        return None
    return s, _binom_atom(key)


def _try_divide_atom(p: dict, atom: Atom) -> Optional[dict]:
    if atom[0] == "F":
        return _dp_div_form(p, atom[1], atom[2])
    return _dp_div_binom(p, atom[1])


def _dp_max_var(d: dict) -> int:
    mv = 0
    for key in d:
        mv = max(mv, key.bit_length())
    return (mv + _SHIFT - 1) // _SHIFT


def _dp_eval_point(d: dict, base: int) -> int:
    """Evaluate an int-coefficient dict at x_i = base**i (exact)."""
    total = 0
    for key, coeff in d.items():
        val = coeff
        for var, exp in _mono_unpack(key):
            val *= base ** (var * exp)
        total += val
    return total


def _factor_forms(d: dict) -> tuple[dict, dict]:
    """Greedy exact factorization of d into bracket-form atoms.

    Returns (residual, atoms).  Only int-coefficient dicts; a fixed-point
    integer evaluation cheaply rejects most non-factors before the exact
    trial division runs, so failures stay cheap.
    """
    fac: dict = {}
    mono = _dp_min_monomial([d])
    if mono:
        d = _dp_div_monomial(d, mono)
        for var, exp in _mono_unpack(mono):
            a = ("F", var - 1, 1)
            fac[a] = fac.get(a, 0) + exp
    maxvar = _dp_max_var(d)
    base = 3
    val = _dp_eval_point(d, base)
    for m in range(maxvar, 1, -1):
        for off in range(0, maxvar - m + 1):
            atom = ("F", off, m)
            fval = sum(base ** (off + i + 1) for i in range(m))
            while d != _DP_ONE and val % fval == 0:
                q = _dp_div_form(d, off, m)
                if q is None or not q:
                    break
                d = q
                val = val // fval if val else _dp_eval_point(d, base)
                fac[atom] = fac.get(atom, 0) + 1
    # leftover single-variable content may appear after divisions
    mono = _dp_min_monomial([d])
    if mono:
        d = _dp_div_monomial(d, mono)
        for var, exp in _mono_unpack(mono):
            a = ("F", var - 1, 1)
            fac[a] = fac.get(a, 0) + exp
    return d, fac


_RECONSTRUCT_LIMIT = 60000


def _reconstruct_frf(rf: "RatFunc") -> Optional[_FRF]:
    """Try to rebuild a factored form from materialized num/den dicts."""
    rf._materialize()
    num, den = rf._num, rf._den
    if not num:
        return _FRF_ZERO
    if len(num) + len(den) > _RECONSTRUCT_LIMIT:
        return None
    num_res, num_fac = _factor_forms(num)
    if den == _DP_ONE:
        den_fac: dict = {}
    else:
        den_res, den_fac = _factor_forms(den)
        if den_res != _DP_ONE:
            return None
    fac = dict(num_fac)
    for a, e in den_fac.items():
        ne = fac.get(a, 0) - e
        if ne:
            fac[a] = ne
        else:
            fac.pop(a, None)
    return _FRF._normalized(Fraction(1), num_res, fac)


# ---------------------------------------------------------------------------
# FRF: internal factored rational function
# ---------------------------------------------------------------------------

class _FRF:
    """c * num * prod(atom^e); den-side atoms carry negative exponents.

    ``num`` is a primitive int dict with positive canonical-leading
    coefficient; ``c`` absorbs scale and sign.  Zero is c == 0.
    """

    __slots__ = ("c", "num", "fac")

    def __init__(self, c: Fraction, num: dict, fac: dict):
        self.c = c
        self.num = num
        self.fac = fac

    # -- constructors ------------------------------------------------------

    @staticmethod
    def from_const(c) -> "_FRF":
        c = Fraction(c)
        if c == 0:
            return _FRF_ZERO
        return _FRF(c, dict(_DP_ONE), {})

    @staticmethod
    def from_atoms(atoms: Mapping[Atom, int], c=1) -> "_FRF":
        c = Fraction(c)
        if c == 0:
            return _FRF_ZERO
        return _FRF(c, dict(_DP_ONE), {a: e for a, e in atoms.items() if e})

    @staticmethod
    def from_dict(d: dict) -> "_FRF":
        if not d:
            return _FRF_ZERO
        (ints,), scale = _coeff_clear([d])
        return _FRF._normalized(scale, ints, {})

    @staticmethod
    def _normalized(c: Fraction, num: dict, fac: dict,
                    hint_atoms: Iterable[Atom] = ()) -> "_FRF":
        """Fold monomial content and recognizable factors of num into fac."""
        if not num:
            return _FRF_ZERO
        fac = {a: e for a, e in fac.items() if e}
        if num == _DP_ONE:
            return _FRF(c, num, fac)
        lead = num[_dp_leading_key(num)]
        if lead < 0:
            c = -c
            num = _dp_neg(num)
        g = 0
        for v in num.values():
            g = gcd(g, v)
            if g == 1:
                break
        if g > 1:
            num = {k: v // g for k, v in num.items()}
            c = c * g
        # pull out the common monomial factor as single-variable forms
        mono = _dp_min_monomial([num])
        if mono:
            num = _dp_div_monomial(num, mono)
            for var, exp in _mono_unpack(mono):
                a = ("F", var - 1, 1)
                fac[a] = fac.get(a, 0) + exp
        # cancel against hinted atoms (typically the denominator's)
        for atom in hint_atoms:
            if num == _DP_ONE:
                break
            while True:
                q = _try_divide_atom(num, atom)
                if q is None or not q:
                    break
                fac[atom] = fac.get(atom, 0) + 1
                num = q
        # recognize what remains
        while num != _DP_ONE:
            form = _dp_as_form(num)
            if form is not None:
                fac[form] = fac.get(form, 0) + 1
                num = dict(_DP_ONE)
                break
            rec = _dp_as_binom(num)
            if rec is not None:
                s, atom = rec
                if s < 0:
                    c = -c
                fac[atom] = fac.get(atom, 0) + 1
                num = dict(_DP_ONE)
                break
            break
        fac = {a: e for a, e in fac.items() if e}
        return _FRF(c, num, fac)

    # -- queries ------------------------------------------------------------

    def is_zero(self) -> bool:
        return self.c == 0

    # -- arithmetic ----------------------------------------------------------

    def mul(self, other: "_FRF") -> "_FRF":
        if self.c == 0 or other.c == 0:
            return _FRF_ZERO
        fac = dict(self.fac)
        for a, e in other.fac.items():
            ne = fac.get(a, 0) + e
            if ne:
                fac[a] = ne
            else:
                del fac[a]
        if self.num == _DP_ONE:
            num = other.num if other.num == _DP_ONE else dict(other.num)
            return _FRF(self.c * other.c, num, fac)
        if other.num == _DP_ONE:
            return _FRF(self.c * other.c, dict(self.num), fac)
        return _FRF._normalized(self.c * other.c,
                                _dp_mul(self.num, other.num), fac)

    def inv(self) -> "_FRF":
        if self.c == 0:
            raise DivisionByZeroError("inverse of zero")
        if self.num != _DP_ONE:
            raise ValueError("cannot invert a non-factored numerator")
        return _FRF(1 / self.c, dict(_DP_ONE),
                    {a: -e for a, e in self.fac.items()})

    def frobenius(self, k: int) -> "_FRF":
        if k == 0 or self.c == 0:
            return self
        return _FRF(self.c, _dp_frobenius(self.num, k),
                    {_atom_shift(a, k): e for a, e in self.fac.items()})

    def add(self, other: "_FRF", hint_atoms: Iterable[Atom] = ()) -> "_FRF":
        if self.c == 0:
            return other
        if other.c == 0:
            return self
        common: dict = {}
        for a in set(self.fac) | set(other.fac):
            m = min(self.fac.get(a, 0), other.fac.get(a, 0))
            if m:
                common[a] = m
        p1 = self._expanded_extra(common)
        p2 = other._expanded_extra(common)
        c1, c2 = self.c, other.c
        den_lcm = (c1.denominator * c2.denominator
                   // gcd(c1.denominator, c2.denominator))
        s1 = c1.numerator * (den_lcm // c1.denominator)
        s2 = c2.numerator * (den_lcm // c2.denominator)
        g = gcd(s1, s2)
        total = _dp_add(_dp_scale(p1, s1 // g), _dp_scale(p2, s2 // g))
        if not total:
            return _FRF_ZERO
        hints = list(hint_atoms) if hint_atoms else []
        for a, e in common.items():
            if e < 0:
                hints.append(a)
        return _FRF._normalized(Fraction(g, den_lcm), total, common, hints)

    def _expanded_extra(self, common: dict) -> dict:
        """self.num times the atoms of self.fac exceeding ``common``."""
        out = self.num
        fresh = False
        for a in set(self.fac) | set(common):
            extra = self.fac.get(a, 0) - common.get(a, 0)
            for _ in range(extra):
                out = _dp_mul(out, _atom_dict(a))
                fresh = True
        return out if fresh else dict(out)

    def refactor(self, candidates: Iterable[Atom]) -> "_FRF":
        """Trial-divide num by candidate atoms (exact, optional speed-up)."""
        if self.c == 0 or self.num == _DP_ONE:
            return self
        num = self.num
        fac = dict(self.fac)
        changed = False
        for atom in candidates:
            while num != _DP_ONE:
                q = _try_divide_atom(num, atom)
                if q is None or not q:
                    break
                fac[atom] = fac.get(atom, 0) + 1
                num = q
                changed = True
        if not changed:
            return self
        return _FRF._normalized(self.c, num, fac)

    # -- materialization ------------------------------------------------------

    def num_den_dicts(self) -> tuple[dict, dict]:
        num = _dp_scale(self.num, self.c.numerator)
        den = {0: self.c.denominator}
        for a, e in self.fac.items():
            d = _atom_dict(a)
            for _ in range(e, 0, -1):
                num = _dp_mul(num, d)
            for _ in range(e, 0):
                den = _dp_mul(den, d)
        return num, den

    def equals(self, other: "_FRF") -> bool:
        if self.c == 0 or other.c == 0:
            return self.c == other.c
        lhs = self.num
        rhs = other.num
        for a in set(self.fac) | set(other.fac):
            delta = self.fac.get(a, 0) - other.fac.get(a, 0)
            d = _atom_dict(a)
            for _ in range(delta, 0, -1):
                lhs = _dp_mul(lhs, d)
            for _ in range(delta, 0):
                rhs = _dp_mul(rhs, d)
        s1 = self.c.numerator * other.c.denominator
        s2 = other.c.numerator * self.c.denominator
        return _dp_scale(lhs, s1) == _dp_scale(rhs, s2)


_FRF_ZERO = _FRF(Fraction(0), {}, {})
_FRF.ZERO = _FRF_ZERO
_FRF.ONE = _FRF(Fraction(1), dict(_DP_ONE), {})


# ---------------------------------------------------------------------------
# public Monomial / Polynomial
# ---------------------------------------------------------------------------

class Monomial:
    """Product of variables x_i with positive integer exponents."""

    __slots__ = ("_key",)

    def __init__(self, exponents: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        if isinstance(exponents, Monomial):
            self._key = exponents._key
            return
        if not isinstance(exponents, Mapping):
            exponents = dict(exponents)
        self._key = _mono_pack(exponents)

    @classmethod
    def _from_key(cls, key: int) -> "Monomial":
        m = object.__new__(cls)
        m._key = key
        return m

    @classmethod
    def variable(cls, i: int) -> "Monomial":
        return cls({i: 1})

    @property
    def exponents(self) -> dict[int, int]:
        return dict(_mono_unpack(self._key))

    @property
    def degree(self) -> int:
        return _mono_degree(self._key)

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial._from_key(self._key + other._key)

    def __eq__(self, other) -> bool:
        return isinstance(other, Monomial) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __lt__(self, other: "Monomial") -> bool:
        """Canonical term order: see rf_to_canonical_string."""
        return _term_order(self._key) < _term_order(other._key)

    def __str__(self) -> str:
        return _mono_str(self._key) or "1"

    def __repr__(self) -> str:
        return f"Monomial({self.exponents!r})"


class Polynomial:
    """Sparse multivariate polynomial with exact rational coefficients."""

    __slots__ = ("_d",)

    def __init__(self, terms: Mapping | Iterable[tuple] = ()):
        d: dict = {}
        if isinstance(terms, Polynomial):
            d = dict(terms._d)
        else:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for mono, coeff in items:
                if isinstance(mono, Monomial):
                    key = mono._key
                elif isinstance(mono, int):
                    key = mono
                else:
                    key = _mono_pack(dict(mono))
                coeff = _as_coeff(coeff)
                nv = d.get(key, 0) + coeff
                if nv:
                    d[key] = nv
                else:
                    d.pop(key, None)
        self._d = d

    @classmethod
    def _from_dict(cls, d: dict) -> "Polynomial":
        p = object.__new__(cls)
        p._d = d
        return p

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls._from_dict({})

    @classmethod
    def one(cls) -> "Polynomial":
        return cls.constant(1)

    @classmethod
    def constant(cls, c) -> "Polynomial":
        c = _as_coeff(c)
        return cls._from_dict({0: c} if c else {})

    @classmethod
    def variable(cls, i: int) -> "Polynomial":
        if i < 1:
            raise ValueError("variable index must be positive")
        return cls._from_dict({1 << (_SHIFT * (i - 1)): 1})

    @property
    def terms(self) -> dict[Monomial, Coeff]:
        return {Monomial._from_key(k): v for k, v in self._d.items()}

    def is_zero(self) -> bool:
        return not self._d

    def total_degree(self) -> int:
        return max((_mono_degree(k) for k in self._d), default=0)

    def coefficient(self, mono: Monomial) -> Coeff:
        return self._d.get(mono._key, 0)

    def __len__(self) -> int:
        return len(self._d)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self._d == other._d
        if isinstance(other, (int, Fraction)):
            return self._d == Polynomial.constant(other)._d
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._d.items()))

    def __add__(self, other) -> "Polynomial":
        other = _as_poly(other)
        return Polynomial._from_dict(_dp_add(self._d, other._d))

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._from_dict(_dp_neg(self._d))

    def __sub__(self, other) -> "Polynomial":
        return self + (-_as_poly(other))

    def __rsub__(self, other) -> "Polynomial":
        return _as_poly(other) + (-self)

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return Polynomial._from_dict(_dp_scale(self._d, _as_coeff(other)))
        other = _as_poly(other)
        return Polynomial._from_dict(_dp_mul(self._d, other._d))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative power of a Polynomial")
        out = Polynomial.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def frobenius(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("frobenius shift must be nonnegative")
        return Polynomial._from_dict(_dp_frobenius(self._d, k))

    def __str__(self) -> str:
        return _poly_str(self._d)

    def __repr__(self) -> str:
        return f"Polynomial<{self}>"


def _as_coeff(c) -> Coeff:
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return int(c) if c.denominator == 1 else c
    raise TypeError(f"coefficient must be int or Fraction, got {type(c)}")


def _as_poly(p) -> Polynomial:
    if isinstance(p, Polynomial):
        return p
    if isinstance(p, (int, Fraction)):
        return Polynomial.constant(p)
    raise TypeError(f"expected Polynomial, got {type(p)}")


def poly_add(a: Polynomial, b: Polynomial) -> Polynomial:
    """Coefficient-wise sum; zero coefficients are dropped."""
    return _as_poly(a) + _as_poly(b)


def poly_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    """Distributive product with exponent addition."""
    return _as_poly(a) * _as_poly(b)


def frobenius(p: Polynomial, k: int) -> Polynomial:
    """Shift every variable index by k: x_i -> x_{i+k}."""
    return _as_poly(p).frobenius(k)


# ---------------------------------------------------------------------------
# canonical strings
# ---------------------------------------------------------------------------

def _mono_str(key: int) -> str:
    parts = []
    for var, exp in _mono_unpack(key):
        parts.append(f"x{var}" if exp == 1 else f"x{var}^{exp}")
    return "".join(parts)


def _coeff_str(c: Coeff) -> str:
    if isinstance(c, Fraction) and c.denominator != 1:
        return f"{c.numerator}/{c.denominator}"
    return str(int(c))


def _poly_str(d: dict) -> str:
    if not d:
        return "0"
    pieces = []
    for key in sorted(d, key=_term_order):
        c = d[key]
        mono = _mono_str(key)
        neg = c < 0
        ac = -c if neg else c
        if not mono:
            body = _coeff_str(ac)
        elif ac == 1:
            body = mono
        else:
            body = _coeff_str(ac) + mono
        if not pieces:
            pieces.append(("-" if neg else "") + body)
        else:
            pieces.append(("-" if neg else "+") + body)
    return "".join(pieces)


# ---------------------------------------------------------------------------
# RatFunc
# ---------------------------------------------------------------------------

class RatFunc:
    """Formal fraction of two polynomials, normalized but never GCD-reduced.

    Equality (``==``, ``rf_equal``) is semantic, by cross multiplication.
    """

    __slots__ = ("_num", "_den", "_frf")

    def __init__(self, num=None, den=1):
        if isinstance(num, RatFunc):
            self._num, self._den, self._frf = num._num, num._den, num._frf
            return
        num = Polynomial.zero() if num is None else _as_poly(num)
        den = _as_poly(den)
        self._num, self._den = _rf_normalize(num._d, den._d)
        self._frf = None

    @classmethod
    def _from_frf(cls, f: _FRF) -> "RatFunc":
        rf = object.__new__(cls)
        rf._num = None
        rf._den = None
        rf._frf = f
        return rf

    @classmethod
    def from_const(cls, c) -> "RatFunc":
        return cls._from_frf(_FRF.from_const(c))

    def _materialize(self) -> None:
        if self._num is None:
            num, den = self._frf.num_den_dicts()
            self._num, self._den = _rf_normalize(num, den)

    @property
    def num(self) -> Polynomial:
        self._materialize()
        return Polynomial._from_dict(dict(self._num))

    @property
    def den(self) -> Polynomial:
        self._materialize()
        return Polynomial._from_dict(dict(self._den))

    def _as_frf(self) -> Optional[_FRF]:
        return self._frf

    def is_zero(self) -> bool:
        if self._frf is not None:
            return self._frf.is_zero()
        return not self._num

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = RatFunc.from_const(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return rf_equal(self, other)

    __hash__ = None  # semantic equality is not hash-compatible

    def __add__(self, other) -> "RatFunc":
        return rf_add(self, _as_rf(other))

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        return rf_mul(RatFunc.from_const(-1), self)

    def __sub__(self, other) -> "RatFunc":
        return rf_add(self, -_as_rf(other))

    def __rsub__(self, other) -> "RatFunc":
        return rf_add(_as_rf(other), -self)

    def __mul__(self, other) -> "RatFunc":
        return rf_mul(self, _as_rf(other))

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RatFunc":
        return rf_div(self, _as_rf(other))

    def __rtruediv__(self, other) -> "RatFunc":
        return rf_div(_as_rf(other), self)

    def frobenius(self, k: int) -> "RatFunc":
        return rf_frobenius(self, k)

    def __str__(self) -> str:
        return rf_to_canonical_string(self)

    def __repr__(self) -> str:
        return f"RatFunc<{self}>"


def _as_rf(v) -> RatFunc:
    if isinstance(v, RatFunc):
        return v
    if isinstance(v, (int, Fraction)):
        return RatFunc.from_const(v)
    if isinstance(v, Polynomial):
        return RatFunc(v)
    raise TypeError(f"expected RatFunc, got {type(v)}")


def _rf_normalize(num: dict, den: dict) -> tuple[dict, dict]:
    if not den:
        raise DivisionByZeroError("zero denominator")
    if not num:
        return {}, dict(_DP_ONE)
    (num, den), _scale = _coeff_clear([num, den])
    mono = _dp_min_monomial([num, den])
    if mono:
        num = _dp_div_monomial(num, mono)
        den = _dp_div_monomial(den, mono)
    if den[_dp_leading_key(den)] < 0:
        num = _dp_neg(num)
        den = _dp_neg(den)
    return num, den


def _frf_pair(a: RatFunc, b: RatFunc) -> tuple[Optional[_FRF], Optional[_FRF]]:
    """Factored forms of both operands, upgrading one generic side if cheap."""
    fa, fb = a._frf, b._frf
    if fa is not None and fb is None:
        fb = _reconstruct_frf(b)
        if fb is not None:
            b._frf = fb
    elif fb is not None and fa is None:
        fa = _reconstruct_frf(a)
        if fa is not None:
            a._frf = fa
    return fa, fb


def rf_add(a: RatFunc, b: RatFunc) -> RatFunc:
    a, b = _as_rf(a), _as_rf(b)
    fa, fb = _frf_pair(a, b)
    if fa is not None and fb is not None:
        return RatFunc._from_frf(fa.add(fb))
    a._materialize()
    b._materialize()
    num = _dp_add(_dp_mul(a._num, b._den), _dp_mul(b._num, a._den))
    den = _dp_mul(a._den, b._den)
    out = object.__new__(RatFunc)
    out._num, out._den = _rf_normalize(num, den)
    out._frf = None
    return out


def rf_mul(a: RatFunc, b: RatFunc) -> RatFunc:
    a, b = _as_rf(a), _as_rf(b)
    fa, fb = _frf_pair(a, b)
    if fa is not None and fb is not None:
        return RatFunc._from_frf(fa.mul(fb))
    a._materialize()
    b._materialize()
    out = object.__new__(RatFunc)
    out._num, out._den = _rf_normalize(_dp_mul(a._num, b._num),
                                       _dp_mul(a._den, b._den))
    out._frf = None
    return out


def rf_inv(a: RatFunc) -> RatFunc:
    a = _as_rf(a)
    if a.is_zero():
        raise DivisionByZeroError("inverse of the zero rational function")
    fa = a._frf
    if fa is None:
        fa = _reconstruct_frf(a)
        if fa is not None:
            a._frf = fa
    if fa is not None and fa.num == _DP_ONE:
        return RatFunc._from_frf(fa.inv())
    a._materialize()
    out = object.__new__(RatFunc)
    out._num, out._den = _rf_normalize(dict(a._den), dict(a._num))
    out._frf = None
    return out


def rf_div(a: RatFunc, b: RatFunc) -> RatFunc:
    return rf_mul(_as_rf(a), rf_inv(_as_rf(b)))


def rf_frobenius(a: RatFunc, k: int) -> RatFunc:
    if k < 0:
        raise ValueError("frobenius shift must be nonnegative")
    a = _as_rf(a)
    fa = a._as_frf()
    if fa is not None:
        return RatFunc._from_frf(fa.frobenius(k))
    a._materialize()
    out = object.__new__(RatFunc)
    out._num = _dp_frobenius(a._num, k)
    out._den = _dp_frobenius(a._den, k)
    out._frf = None
    return out


def rf_equal(a: RatFunc, b: RatFunc) -> bool:
    """True iff a.num * b.den == b.num * a.den exactly."""
    a, b = _as_rf(a), _as_rf(b)
    fa, fb = _frf_pair(a, b)
    if fa is not None and fb is not None:
        return fa.equals(fb)
    a._materialize()
    b._materialize()
    return _dp_mul(a._num, b._den) == _dp_mul(b._num, a._den)


def rf_to_canonical_string(a: RatFunc) -> str:
    """Deterministic rendering, e.g. ``(x2x3+x3^2)/(x1^2+x1x2)``."""
    a = _as_rf(a)
    a._materialize()
    if a._den == _DP_ONE:
        return _poly_str(a._num)
    return f"({_poly_str(a._num)})/({_poly_str(a._den)})"
