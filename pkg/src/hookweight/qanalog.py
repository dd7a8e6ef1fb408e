"""Multivariate q-analogues and the twisted semigroup algebra.

``bracket(n)`` is x1+...+xn and ``bracket_factorial(n)`` the twisted
factorial [n]*F[n-1]*F^2[n-2]*...*F^{n-1}[1], where F shifts variable
indices up by one.  ``binomial(n, k)`` is the quotient
[n]! / ([k]! * F^k([n-k]!)), kept as an unreduced rational function;
identities about it are checked through ``rf_equal``.

``SkewElem`` represents finite sums sum_n f_n(x) * u^n in the algebra whose
multiplication twists the right coefficient by the Frobenius shift:
f*u^k . g*u^l = (f * F^k(g)) u^{k+l}.  The divided powers
u^{(n)} = u^n / [n]! have the multivariate binomials as structure constants.
"""

from __future__ import annotations

from functools import lru_cache

from .ratfunc import (
    Polynomial,
    RatFunc,
    _FRF,
    rf_equal,
)

__all__ = [
    "bracket",
    "bracket_factorial",
    "binomial",
    "SkewElem",
    "skew_mul",
    "skew_add",
    "skew_equal",
    "divided_power",
]


def bracket(n: int) -> Polynomial:
    """x1 + x2 + ... + xn; bracket(0) is the zero polynomial."""
    if n < 0:
        raise ValueError("bracket requires n >= 0")
    return _form_poly(0, n)


def _form_poly(off: int, m: int) -> Polynomial:
    p = Polynomial.zero()
    for i in range(m):
        p = p + Polynomial.variable(off + i + 1)
    return p


def _factorial_atoms(n: int, shift: int = 0, sign: int = 1) -> dict:
    """Atoms of F^shift([n]!) with exponent ``sign``."""
    return {("F", shift + i, n - i): sign for i in range(n)}


@lru_cache(maxsize=None)
def _bracket_factorial_frf(n: int) -> _FRF:
    return _FRF.from_atoms(_factorial_atoms(n))


def bracket_factorial(n: int) -> Polynomial:
    """[n]! = [n] * F([n-1]!) expanded; bracket_factorial(0) = 1."""
    if n < 0:
        raise ValueError("bracket_factorial requires n >= 0")
    if n == 0:
        return Polynomial.one()
    return RatFunc._from_frf(_bracket_factorial_frf(n)).num


@lru_cache(maxsize=None)
def _binomial_frf(n: int, k: int) -> _FRF:
    atoms: dict = {}
    for a, e in _factorial_atoms(n).items():
        atoms[a] = atoms.get(a, 0) + e
    for a, e in _factorial_atoms(k, sign=-1).items():
        atoms[a] = atoms.get(a, 0) + e
    for a, e in _factorial_atoms(n - k, shift=k, sign=-1).items():
        atoms[a] = atoms.get(a, 0) + e
    return _FRF.from_atoms(atoms)


def binomial(n: int, k: int) -> RatFunc:
    """[n]! / ([k]! * F^k([n-k]!)) as a rational function."""
    if k < 0 or n < 0 or k > n:
        raise ValueError(f"binomial requires 0 <= k <= n, got n={n}, k={k}")
    return RatFunc._from_frf(_binomial_frf(n, k))


# ---------------------------------------------------------------------------
# skew semigroup algebra
# ---------------------------------------------------------------------------

class SkewElem:
    """Finite sum of f_n(x) * u^n terms with rational-function coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict[int, RatFunc] | None = None):
        self.coeffs = {}
        if coeffs:
            for n, f in coeffs.items():
                if n < 0:
                    raise ValueError("u-degrees must be nonnegative")
                f = f if isinstance(f, RatFunc) else RatFunc.from_const(f)
                if not f.is_zero():
                    self.coeffs[n] = f

    @classmethod
    def term(cls, f, n: int) -> "SkewElem":
        return cls({n: f if isinstance(f, RatFunc) else RatFunc.from_const(f)})

    @classmethod
    def one(cls) -> "SkewElem":
        return cls.term(1, 0)

    @classmethod
    def zero(cls) -> "SkewElem":
        return cls()

    def degrees(self) -> list[int]:
        return sorted(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __mul__(self, other: "SkewElem") -> "SkewElem":
        return skew_mul(self, other)

    def __add__(self, other: "SkewElem") -> "SkewElem":
        return skew_add(self, other)

    def __eq__(self, other) -> bool:
        return isinstance(other, SkewElem) and skew_equal(self, other)

    __hash__ = None

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for n in self.degrees():
            f = self.coeffs[n]
            u = "" if n == 0 else ("u" if n == 1 else f"u^{n}")
            s = str(f)
            if u and not (s.startswith("(") and s.endswith(")")):
                s = f"({s})"
            parts.append(s + ("*" + u if u else ""))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"SkewElem<{self}>"


def skew_mul(a: SkewElem, b: SkewElem) -> SkewElem:
    """Bilinear extension of f u^k . g u^l = (f * F^k(g)) u^{k+l}."""
    out: dict[int, RatFunc] = {}
    for k, f in a.coeffs.items():
        for l, g in b.coeffs.items():
            term = f * g.frobenius(k)
            n = k + l
            out[n] = out[n] + term if n in out else term
    return SkewElem(out)


def skew_add(a: SkewElem, b: SkewElem) -> SkewElem:
    out = dict(a.coeffs)
    for n, f in b.coeffs.items():
        out[n] = out[n] + f if n in out else f
    return SkewElem(out)


def skew_equal(a: SkewElem, b: SkewElem) -> bool:
    if set(a.coeffs) != set(b.coeffs):
        return False
    return all(rf_equal(a.coeffs[n], b.coeffs[n]) for n in a.coeffs)


def divided_power(n: int) -> SkewElem:
    """u^{(n)} = u^n / [n]!."""
    if n < 0:
        raise ValueError("divided_power requires n >= 0")
    inv_fact = _FRF.from_atoms(_factorial_atoms(n, sign=-1))
    return SkewElem.term(RatFunc._from_frf(inv_fact), n)
