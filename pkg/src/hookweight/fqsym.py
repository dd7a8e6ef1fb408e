"""Free quasisymmetric functions and the two maps into the twisted algebra.

``FQSymElem`` is a finite rational combination of basis elements F_w indexed
by permutations of every size; the product shuffles the left word with the
shifted right word.  ``f_of_poset`` sends a labelled forest to the sum of
F_w over its linear extensions, and products of such elements concatenate
forests with shifted labels.

``phi_inv`` maps F_w to wt(w) * u^{(n)} (divided power); it is an algebra
morphism on the span of the forest elements but not on all of FQSym --
``check_pbt_morphism`` verifies the first claim and the F_1 * F_213
counterexample refutes the second.  ``phi_maj`` maps F_w to the P-partition
series gamma(w, x) * u^n and is a morphism everywhere.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Optional, Sequence

from .combinat import (
    DualForestPoset,
    ForestPoset,
    Permutation,
    descents,
    dual_forest_stats,
    linear_extensions,
    maj,
)
from .qanalog import SkewElem, skew_equal, skew_mul, _factorial_atoms
from .ratfunc import (
    Polynomial,
    RatFunc,
    _FRF,
    _mono_pack,
    _mono_degree,
)
from .specialize import UniPoly, UniRatFunc, q_bracket, q_factorial
from .weights import _L_grouped_frf, _wt_perm_tree_frf

__all__ = [
    "FQSymElem",
    "fqsym_mul",
    "f_of_poset",
    "concat_forests",
    "dual_forest_prereqs",
    "forest_prereqs",
    "phi_inv",
    "phi_maj",
    "gamma_perm",
    "gamma_dual_forest",
    "gamma_extension_sum",
    "dual_concat_forests",
    "check_pbt_morphism",
    "check_phimaj_morphism",
    "verify_bw_maj",
    "ppartition_series",
    "gamma_dual_forest_series",
    "shuffles",
]


class FQSymElem:
    """Finite formal sum of F_w basis elements with rational coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Sequence[int], int | Fraction] | None = None):
        self.terms: dict[tuple[int, ...], int | Fraction] = {}
        if terms:
            for w, c in terms.items():
                w = tuple(Permutation(w))
                if c:
                    nc = self.terms.get(w, 0) + c
                    if nc:
                        self.terms[w] = nc
                    else:
                        del self.terms[w]

    @classmethod
    def basis(cls, w: Sequence[int]) -> "FQSymElem":
        return cls({tuple(w): 1})

    @classmethod
    def zero(cls) -> "FQSymElem":
        return cls()

    @classmethod
    def one(cls) -> "FQSymElem":
        return cls({(): 1})

    def __add__(self, other: "FQSymElem") -> "FQSymElem":
        out = dict(self.terms)
        for w, c in other.terms.items():
            nc = out.get(w, 0) + c
            if nc:
                out[w] = nc
            else:
                del out[w]
        return FQSymElem(out)

    def scale(self, c) -> "FQSymElem":
        return FQSymElem({w: v * c for w, v in self.terms.items()})

    def __mul__(self, other: "FQSymElem") -> "FQSymElem":
        return fqsym_mul(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FQSymElem):
            return NotImplemented
        mine = {w: Fraction(c) for w, c in self.terms.items()}
        theirs = {w: Fraction(c) for w, c in other.terms.items()}
        return mine == theirs

    __hash__ = None

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms, key=lambda w: (len(w), w)):
            c = self.terms[w]
            basis = f"F[{','.join(map(str, w))}]"
            if c == 1:
                parts.append(basis)
            elif c == -1:
                parts.append(f"-{basis}")
            else:
                parts.append(f"{c}*{basis}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"FQSymElem<{self}>"


def shuffles(a: Sequence[int], b: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """All interleavings of two disjoint words."""
    a, b = tuple(a), tuple(b)

    def rec(i: int, j: int) -> Iterator[tuple[int, ...]]:
        if i == len(a):
            yield b[j:]
            return
        if j == len(b):
            yield a[i:]
            return
        for rest in rec(i + 1, j):
            yield (a[i],) + rest
        for rest in rec(i, j + 1):
            yield (b[j],) + rest

    return rec(0, 0)


def fqsym_mul(x: FQSymElem, y: FQSymElem) -> FQSymElem:
    """Bilinear shuffle product: F_a F_b = sum over shuffles of a and b+|a|."""
    out: dict[tuple[int, ...], int | Fraction] = {}
    for a, ca in x.terms.items():
        k = len(a)
        for b, cb in y.terms.items():
            shifted = tuple(v + k for v in b)
            c = ca * cb
            for w in shuffles(a, shifted):
                nc = out.get(w, 0) + c
                if nc:
                    out[w] = nc
                else:
                    del out[w]
    return FQSymElem(out)


def f_of_poset(p: ForestPoset) -> FQSymElem:
    """Sum of F_w over the linear extensions of p."""
    return FQSymElem({tuple(w): 1 for w in linear_extensions(p)})


# ---------------------------------------------------------------------------
# phi_inv
# ---------------------------------------------------------------------------

def phi_inv(elem: FQSymElem) -> SkewElem:
    """Linear extension of F_w -> wt(w) u^{(n)} = (wt(w)/[n]!) u^n."""
    by_degree: dict[int, _FRF] = {}
    for w, c in elem.terms.items():
        term = _wt_perm_tree_frf(w)
        if c != 1:
            term = term.mul(_FRF.from_const(c))
        n = len(w)
        hints = tuple(("F", a, n - a) for a in range(n))
        prev = by_degree.get(n)
        by_degree[n] = term if prev is None else prev.add(term, hints)
    coeffs = {}
    for n, total in by_degree.items():
        if total.is_zero():
            continue
        value = total.mul(_FRF.from_atoms(_factorial_atoms(n, sign=-1)))
        coeffs[n] = RatFunc._from_frf(value)
    return SkewElem(coeffs)


def _phi_inv_forest_frf(p: ForestPoset) -> _FRF:
    """Coefficient of u^{|p|} in phi_inv(F_p): L(p) / [n]!."""
    return _L_grouped_frf(p.n, p.cover).mul(
        _FRF.from_atoms(_factorial_atoms(p.n, sign=-1)))


def concat_forests(p: ForestPoset, q: ForestPoset) -> ForestPoset:
    """Disjoint union with q's labels shifted above p's."""
    k = p.n
    covers = p.covers() + [(i + k, t + k) for i, t in q.covers()]
    return ForestPoset.from_covers(p.n + q.n, covers)


def check_pbt_morphism(p: ForestPoset, q: ForestPoset) -> bool:
    """phi_inv(F_p * F_q) == phi_inv(F_p) * phi_inv(F_q), coefficient-wise."""
    fp, fq = f_of_poset(p), f_of_poset(q)
    product = fqsym_mul(fp, fq)
    union = concat_forests(p, q)
    if product == f_of_poset(union):
        lhs_frf = _phi_inv_forest_frf(union)
        lhs = SkewElem({union.n: RatFunc._from_frf(lhs_frf)}) \
            if not lhs_frf.is_zero() else SkewElem()
    else:  # pragma: no cover - the product law holds for labelled forests
        lhs = phi_inv(product)
    rhs = skew_mul(
        SkewElem({p.n: RatFunc._from_frf(_phi_inv_forest_frf(p))}),
        SkewElem({q.n: RatFunc._from_frf(_phi_inv_forest_frf(q))}))
    return skew_equal(lhs, rhs)


# ---------------------------------------------------------------------------
# P-partition generating functions
# ---------------------------------------------------------------------------

def _prefix_atom(elements: Iterable[int]):
    return ("B", tuple((v, 1) for v in sorted(elements)))


def _monomial_atoms(elements: Iterable[int]) -> dict:
    atoms: dict = {}
    for v in elements:
        a = ("F", v - 1, 1)
        atoms[a] = atoms.get(a, 0) + 1
    return atoms


def _gamma_perm_frf(word: tuple[int, ...]) -> _FRF:
    atoms: dict = {}
    for i in descents(word):
        for a, e in _monomial_atoms(word[:i]).items():
            atoms[a] = atoms.get(a, 0) + e
    for i in range(1, len(word) + 1):
        a = _prefix_atom(word[:i])
        atoms[a] = atoms.get(a, 0) - 1
    return _FRF.from_atoms(atoms)


def gamma_perm(w: Sequence[int]) -> RatFunc:
    """Generating function of weakly decreasing maps along the word w.

    Closed form: prod over descents of x_{w_1}..x_{w_i} divided by
    prod_i (1 - x_{w_1}..x_{w_i}).
    """
    return RatFunc._from_frf(_gamma_perm_frf(tuple(Permutation(w))))


def _gamma_dual_forest_frf(p: DualForestPoset) -> _FRF:
    stats = dual_forest_stats(p)
    atoms: dict = {}
    for i in stats.des:
        for a, e in _monomial_atoms(stats.lower_subtrees[i]).items():
            atoms[a] = atoms.get(a, 0) + e
    for i in range(1, p.n + 1):
        a = _prefix_atom(stats.lower_subtrees[i])
        atoms[a] = atoms.get(a, 0) - 1
    return _FRF.from_atoms(atoms)


def gamma_dual_forest(p: DualForestPoset) -> RatFunc:
    """Product formula for the P-partition series of a dual forest."""
    return RatFunc._from_frf(_gamma_dual_forest_frf(p))


@lru_cache(maxsize=512)
def _gamma_extension_sum_frf(pre: tuple[frozenset[int], ...]) -> _FRF:
    n = len(pre)
    full = (1 << n) - 1
    need = [0] * n
    for i, reqs in enumerate(pre):
        for r in reqs:
            need[i] |= 1 << (r - 1)

    @lru_cache(maxsize=None)
    def tail(mask: int, last: int) -> _FRF:
        if mask == full:
            return _FRF.ONE
        total = _FRF.ZERO
        for m in range(1, n + 1):
            bit = 1 << (m - 1)
            if mask & bit or need[m - 1] & ~mask:
                continue
            new_mask = mask | bit
            ideal = [v + 1 for v in range(n) if new_mask >> v & 1]
            step = _FRF.from_atoms({_prefix_atom(ideal): -1})
            if last > m:
                placed = [v + 1 for v in range(n) if mask >> v & 1]
                step = step.mul(_FRF.from_atoms(_monomial_atoms(placed)))
            term = step.mul(tail(new_mask, m))
            total = total.add(term)
        return total

    result = tail(0, 0)
    tail.cache_clear()
    return result


def gamma_extension_sum(prereqs: Sequence[frozenset[int]] | Mapping[int, frozenset[int]],
                        n: Optional[int] = None) -> RatFunc:
    """Exact sum of gamma_perm(w) over the linear extensions of any poset.

    ``prereqs[i]`` lists the elements that must precede i.  The sum is folded
    over prefix order ideals, so shared tails are computed once; it never
    uses the dual-forest product formula.
    """
    if isinstance(prereqs, Mapping):
        n = max(prereqs, default=0) if n is None else n
        pre = tuple(frozenset(prereqs.get(i, frozenset())) for i in range(1, n + 1))
    else:
        pre = tuple(frozenset(s) for s in prereqs)
    return RatFunc._from_frf(_gamma_extension_sum_frf(pre))


def dual_concat_forests(p: DualForestPoset, q: DualForestPoset) -> DualForestPoset:
    """Disjoint union of dual forests with q's labels shifted above p's."""
    k = p.n
    pairs = p.covers() + [(i + k, t + k) for i, t in q.covers()]
    return DualForestPoset.from_covered_by(p.n + q.n, pairs)


def check_phimaj_morphism(p: DualForestPoset, q: DualForestPoset) -> bool:
    """phi_maj(F_p * F_q) == phi_maj(F_p) * phi_maj(F_q) via extension sums.

    Both sides sum gamma over linear extensions (no product formula); the
    left side's support is first verified to be the extensions of the
    shifted disjoint union.
    """
    fp = FQSymElem({tuple(w): 1 for w in p.linear_extensions()})
    fq = FQSymElem({tuple(w): 1 for w in q.linear_extensions()})
    product = fqsym_mul(fp, fq)
    union = dual_concat_forests(p, q)
    if product == FQSymElem({tuple(w): 1 for w in union.linear_extensions()}):
        lhs = SkewElem({union.n: gamma_extension_sum(dual_forest_prereqs(union))})
    else:  # pragma: no cover - the product law holds for shifted unions
        lhs = phi_maj(product)
    rhs = skew_mul(
        SkewElem({p.n: gamma_extension_sum(dual_forest_prereqs(p))}),
        SkewElem({q.n: gamma_extension_sum(dual_forest_prereqs(q))}))
    return skew_equal(lhs, rhs)


def dual_forest_prereqs(p: DualForestPoset) -> list[frozenset[int]]:
    """prereqs[i-1] = strict lower set of i (elements forced before i)."""
    return [frozenset(p.lower_set(i) - {i}) for i in range(1, p.n + 1)]


def forest_prereqs(p: ForestPoset) -> list[frozenset[int]]:
    out = []
    for i in range(1, p.n + 1):
        below = set()
        j = p.below(i)
        while j:
            below.add(j)
            j = p.below(j)
        out.append(frozenset(below))
    return out


# ---------------------------------------------------------------------------
# phi_maj
# ---------------------------------------------------------------------------

def phi_maj(elem: FQSymElem) -> SkewElem:
    """Linear extension of F_w -> gamma(w, x) u^n (plain power of u)."""
    by_degree: dict[int, _FRF] = {}
    for n in {len(w) for w in elem.terms}:
        words = {w: c for w, c in elem.terms.items() if len(w) == n}
        total = _gamma_weighted_sum(words)
        if not total.is_zero():
            by_degree[n] = total
    return SkewElem({n: RatFunc._from_frf(v) for n, v in by_degree.items()})


def _gamma_weighted_sum(terms: Mapping[tuple[int, ...], int | Fraction]) -> _FRF:
    """Sum of c_w * gamma(w) folded over the prefix trie of the words.

    Every prefix contributes its 1/(1 - x_prefix) factor once, and a descent
    between consecutive letters contributes the prefix monomial; folding
    bottom-up keeps the partial sums collapsing instead of accumulating all
    binomial denominators at once.
    """
    words = sorted(terms)

    def fold(group: Sequence[tuple[int, ...]], depth: int,
             placed: tuple[int, ...], last: int) -> _FRF:
        total = _FRF.ZERO
        children: dict[int, list[tuple[int, ...]]] = {}
        for w in group:
            if len(w) == depth:
                total = total.add(_FRF.from_const(terms[w]))
            else:
                children.setdefault(w[depth], []).append(w)
        for m, sub in sorted(children.items()):
            new_placed = placed + (m,)
            step = _FRF.from_atoms({_prefix_atom(new_placed): -1})
            if last > m:
                step = step.mul(_FRF.from_atoms(_monomial_atoms(placed)))
            term = step.mul(fold(sub, depth + 1, new_placed, m))
            total = total.add(term)
        return total

    return fold(words, 0, (), 0)


# ---------------------------------------------------------------------------
# the maj hook formula
# ---------------------------------------------------------------------------

def _all_vars_to_q(f: RatFunc) -> UniRatFunc:
    """Substitute every x_i -> q (monomials collapse to their degree)."""
    frf = f._as_frf()
    if frf is not None and not frf.is_zero():
        num = UniPoly.constant(frf.c.numerator)
        den = UniPoly.constant(frf.c.denominator)
        num = num * _uni_from_dict_all_q(frf.num)
        for atom, e in frf.fac.items():
            if atom[0] == "F":
                a = UniPoly({1: atom[2]})  # the m summands each become q
            else:
                deg = sum(exp for _v, exp in atom[1])
                a = UniPoly({0: 1, deg: -1})
            for _ in range(abs(e)):
                if e > 0:
                    num = num * a
                else:
                    den = den * a
        return UniRatFunc(num, den)
    f._materialize()
    return UniRatFunc(_uni_from_dict_all_q(f._num), _uni_from_dict_all_q(f._den))


def _uni_from_dict_all_q(d: dict) -> UniPoly:
    out: dict = {}
    for key, coeff in d.items():
        e = _mono_degree(key)
        nv = out.get(e, 0) + coeff
        if nv:
            out[e] = nv
        else:
            del out[e]
    return UniPoly(out)


def verify_bw_maj(p: DualForestPoset) -> bool:
    """Major-index hook formula on a dual forest.

    Substituting x_i -> q in the product formula must give
    q^{maj(P)} / prod_i (1 - q^{h_i}), and the extension generating function
    sum_w q^{maj(w)} must equal q^{maj(P)} [n]!_q / prod_i [h_i]_q.
    """
    stats = dual_forest_stats(p)
    hooks = [len(stats.lower_subtrees[i]) for i in range(1, p.n + 1)]
    substituted = _all_vars_to_q(gamma_dual_forest(p))
    den = UniPoly.constant(1)
    for h in hooks:
        den = den * UniPoly({0: 1, h: -1})
    if substituted != UniRatFunc(UniPoly.monomial(stats.maj), den):
        return False
    gen = UniPoly()
    for w in p.linear_extensions():
        gen = gen + UniPoly.monomial(maj(w))
    bracket_den = UniPoly.constant(1)
    for h in hooks:
        bracket_den = bracket_den * q_bracket(h)
    closed = UniRatFunc(q_factorial(p.n) * UniPoly.monomial(stats.maj),
                        bracket_den)
    return UniRatFunc(gen) == closed


# ---------------------------------------------------------------------------
# truncated P-partition oracle
# ---------------------------------------------------------------------------

def ppartition_series(p: DualForestPoset, max_degree: int) -> Polynomial:
    """Direct enumeration of P-partitions, truncated to total degree <= d.

    A P-partition is weakly order-reversing (i <_P j forces f(i) >= f(j))
    and strictly decreasing along covers i -> j with i > j.
    """
    n = p.n
    out: dict = {}

    def rec(i: int, values: list[int]) -> None:
        if i > n:
            if sum(values) <= max_degree:
                key = _mono_pack({v + 1: e for v, e in enumerate(values) if e})
                out[key] = out.get(key, 0) + 1
            return
        for val in range(0, max_degree + 1):
            values.append(val)
            if _ppartition_prefix_ok(p, values):
                rec(i + 1, values)
            values.pop()

    rec(1, [])
    return Polynomial._from_dict({k: v for k, v in out.items() if v})


def _ppartition_prefix_ok(p: DualForestPoset, values: list[int]) -> bool:
    # check all cover relations both of whose endpoints are assigned
    i = len(values)
    for a in range(1, i + 1):
        b = p.covered_by(a)
        if b and b <= i:
            fa, fb = values[a - 1], values[b - 1]
            if fa < fb:
                return False
            if a > b and fa == fb:
                return False
    return True


def gamma_dual_forest_series(p: DualForestPoset, max_degree: int) -> Polynomial:
    """Truncated expansion of the product formula, for the oracle test."""
    stats = dual_forest_stats(p)
    series = {0: 1}
    for i in range(1, p.n + 1):
        u = _mono_pack({v: 1 for v in stats.lower_subtrees[i]})
        udeg = len(stats.lower_subtrees[i])
        geom = {e * u: 1 for e in range(max_degree // udeg + 1)}
        series = _truncated_mul(series, geom, max_degree)
    numer = {0: 1}
    for i in stats.des:
        mono = _mono_pack({v: 1 for v in stats.lower_subtrees[i]})
        numer = _truncated_mul(numer, {mono: 1}, max_degree)
    series = _truncated_mul(series, numer, max_degree)
    return Polynomial._from_dict(series)


def _truncated_mul(a: dict, b: dict, max_degree: int) -> dict:
    out: dict = {}
    for ka, va in a.items():
        da = _mono_degree(ka)
        for kb, vb in b.items():
            if da + _mono_degree(kb) > max_degree:
                continue
            k = ka + kb
            nv = out.get(k, 0) + va * vb
            if nv:
                out[k] = nv
            else:
                del out[k]
    return out
