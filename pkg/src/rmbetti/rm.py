"""Generalized Reed-Muller codes over GF(q).

Everything here is exact: the reduced polynomial space (total degree <= r,
every variable degree < q), the evaluation map over the ordered point grid,
two independent closed-form dimension formulas, the (t, s) split behind the
minimum distance, explicit minimum-weight polynomials and their images under
linear substitutions, one-point indicator polynomials, the sum-zero
description of the codimension-one code, and the heavier support-minimal
witness polynomials used by the purity analysis.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field as dc_field
from math import comb

import numpy as np

from . import linalg
from .codes import LinearCode
from .errors import (CrossCheckError, ParameterError, PreconditionError,
                     RankDeficientFormsError, WitnessParameterError)
from .gf import GF, field


def validate_params(q: int, r: int, m: int) -> None:
    if q < 2:
        raise ParameterError(f"field size must be at least 2, got q={q}")
    if m < 1:
        raise ParameterError(f"need at least one variable, got m={m}")
    if not 0 <= r <= m * (q - 1):
        raise ParameterError(
            f"degree bound r={r} outside 0..m(q-1) = {m * (q - 1)}")


def binom(a: int, b: int) -> int:
    """Binomial with the vanishing convention: 0 whenever a < 0 or a < b or b < 0."""
    if b < 0 or a < 0 or a < b:
        return 0
    return comb(a, b)


def monomial_basis(q: int, r: int, m: int) -> list[tuple[int, ...]]:
    """Exponent vectors with every entry < q and total degree <= r.

    Graded lexicographic order (total degree, then lex), so the basis for a
    smaller r is a prefix of the basis for a larger one.
    """
    validate_params(q, r, m)
    vecs = [v for v in itertools.product(range(q), repeat=m) if sum(v) <= r]
    vecs.sort(key=lambda v: (sum(v), v))
    return vecs


def dim_assmus_key(q: int, r: int, m: int) -> int:
    """Dimension by the classical double-sum formula."""
    validate_params(q, r, m)
    total = 0
    for s in range(r + 1):
        for i in range(m + 1):
            sign = -1 if i % 2 else 1
            total += sign * binom(m, i) * binom(s - i * q + m - 1, s - i * q)
    return total


def dim_inclusion_exclusion(q: int, r: int, m: int) -> int:
    """Dimension by inclusion-exclusion over the variables exceeding degree q-1."""
    validate_params(q, r, m)
    total = 0
    for i in range(m + 1):
        sign = -1 if i % 2 else 1
        total += sign * binom(m, i) * binom(m + r - i * q, m)
    return total


def full_space_binomial_identity(q: int, m: int) -> bool:
    """Exact check of sum_i (-1)^i C(m,i) C((m-i)q, m) = q^m."""
    if q < 2 or m < 1:
        raise ParameterError("need q >= 2 and m >= 1")
    lhs = sum((-1 if i % 2 else 1) * binom(m, i) * binom((m - i) * q, m)
              for i in range(m + 1))
    return lhs == q ** m


def ts_split(q: int, r: int) -> tuple[int, int]:
    """The unique (t, s) with r = t(q-1) + s and 0 <= s <= q-2."""
    if q < 2 or r < 0:
        raise ParameterError("need q >= 2 and r >= 0")
    return divmod(r, q - 1)


def min_distance_formula(q: int, r: int, m: int) -> int:
    """(q - s) * q^(m-t-1); the full-space case t = m degenerates to 1."""
    validate_params(q, r, m)
    t, s = ts_split(q, r)
    if t == m:
        assert s == 0
        return 1
    return (q - s) * q ** (m - t - 1)


# -- points and polynomials ---------------------------------------------------


@dataclass(frozen=True, eq=False)
class PointOrder:
    """All q^m points of GF(q)^m, leftmost coordinate most significant.

    The element order puts 0 first, so points[0] is the origin.
    """
    gf: GF
    m: int
    points: np.ndarray = dc_field(repr=False)

    @property
    def size(self) -> int:
        return self.points.shape[0]


@functools.lru_cache(maxsize=None)
def point_order(q: int, m: int) -> PointOrder:
    gf = field(q)
    if m < 1:
        raise ParameterError(f"need m >= 1, got {m}")
    pts = np.indices((q,) * m).reshape(m, -1).T.astype(gf.dtype)
    pts.setflags(write=False)
    return PointOrder(gf, m, pts)


class ExponentPoly:
    """Polynomial as a map exponent-vector -> nonzero coefficient.

    Every variable degree stays below q: products are reduced with
    X^q -> X, which preserves values on the point grid since a^q = a.
    """

    __slots__ = ("gf", "m", "terms")

    def __init__(self, gf: GF, m: int, terms=None):
        self.gf = gf
        self.m = m
        clean: dict[tuple[int, ...], int] = {}
        for exps, coef in (terms or {}).items():
            coef = int(coef)
            if coef == 0:
                continue
            exps = tuple(int(e) for e in exps)
            if len(exps) != m:
                raise ParameterError(f"exponent vector {exps} does not have {m} entries")
            if any(not 0 <= e < gf.q for e in exps):
                raise ParameterError(f"exponent vector {exps} not reduced below q={gf.q}")
            clean[exps] = coef
        self.terms = clean

    # constructors

    @classmethod
    def zero(cls, gf: GF, m: int) -> "ExponentPoly":
        return cls(gf, m)

    @classmethod
    def constant(cls, gf: GF, m: int, c: int) -> "ExponentPoly":
        return cls(gf, m, {(0,) * m: c})

    @classmethod
    def variable(cls, gf: GF, m: int, i: int) -> "ExponentPoly":
        if not 0 <= i < m:
            raise ParameterError(f"variable index {i} out of range for m={m}")
        exps = [0] * m
        exps[i] = 1
        return cls(gf, m, {tuple(exps): 1})

    # ring operations

    def _like(self, terms) -> "ExponentPoly":
        return ExponentPoly(self.gf, self.m, terms)

    def __add__(self, other: "ExponentPoly") -> "ExponentPoly":
        gf = self.gf
        out = dict(self.terms)
        for exps, coef in other.terms.items():
            out[exps] = gf.add(out.get(exps, 0), coef)
        return self._like(out)

    def __neg__(self) -> "ExponentPoly":
        gf = self.gf
        return self._like({e: gf.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other: "ExponentPoly") -> "ExponentPoly":
        return self + (-other)

    def scaled(self, c: int) -> "ExponentPoly":
        gf = self.gf
        return self._like({e: gf.mul(c, v) for e, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scaled(other)
        gf = self.gf
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exps = tuple(gf.exp_reduce(a + b) for a, b in zip(e1, e2))
                out[exps] = gf.add(out.get(exps, 0), gf.mul(c1, c2))
        return self._like(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "ExponentPoly":
        if k < 0:
            raise ParameterError("negative power of a polynomial")
        out = ExponentPoly.constant(self.gf, self.m, 1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        return (isinstance(other, ExponentPoly) and self.gf is other.gf
                and self.m == other.m and self.terms == other.terms)

    def __hash__(self):
        return hash((self.gf.q, self.m, tuple(sorted(self.terms.items()))))

    def total_degree(self) -> int:
        """Largest term degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        return sorted(self.terms.items())

    def evaluate(self, order: PointOrder | None = None) -> np.ndarray:
        """Evaluation vector over the ordered point grid."""
        gf = self.gf
        if order is None:
            order = point_order(gf.q, self.m)
        if order.gf is not gf or order.m != self.m:
            raise ParameterError("point order does not match this polynomial")
        pts = order.points
        vals = np.zeros(order.size, dtype=gf.dtype)
        for exps, coef in self.sorted_terms():
            col = np.full(order.size, coef, dtype=gf.dtype)
            for i, e in enumerate(exps):
                if e:
                    col = gf.mul(col, gf.pow(pts[:, i], e))
            vals = gf.add(vals, col)
        return vals

    def __repr__(self):
        if not self.terms:
            return "ExponentPoly(0)"
        bits = []
        for exps, coef in self.sorted_terms():
            mono = "*".join(f"X{i + 1}^{e}" for i, e in enumerate(exps) if e)
            bits.append(f"{self.gf.element_str(coef)}*{mono}" if mono
                        else self.gf.element_str(coef))
        return "ExponentPoly(" + " + ".join(bits) + ")"


@functools.lru_cache(maxsize=None)
def _inverse_vandermonde(q: int) -> np.ndarray:
    gf = field(q)
    v = np.array(gf._pow, dtype=gf.dtype)  # v[i, j] = element_i ** j
    aug = np.hstack([v, linalg.identity(gf, q)])
    r, rk, _ = linalg.rref(gf, aug)
    assert rk == q, "evaluation-by-powers matrix must be invertible"
    w = r[:, q:].copy()
    w.setflags(write=False)
    return w


def interpolate(order: PointOrder, values) -> ExponentPoly:
    """The unique reduced polynomial with the given evaluation vector.

    Exact inverse of ExponentPoly.evaluate: per-axis application of the
    inverse of the powers matrix recovers the coefficient tensor.
    """
    gf = order.gf
    q, m = gf.q, order.m
    t = np.asarray(values, dtype=gf.dtype)
    if t.shape != (q ** m,):
        raise ParameterError(f"expected a length-{q ** m} vector")
    t = t.reshape((q,) * m)
    w = _inverse_vandermonde(q)
    for axis in range(m):
        moved = np.moveaxis(t, axis, 0).reshape(q, -1)
        moved = linalg.matmul(gf, w, moved)
        t = np.moveaxis(moved.reshape((q,) * m), 0, axis)
    terms = {tuple(int(e) for e in idx): int(c)
             for idx, c in np.ndenumerate(t) if c}
    return ExponentPoly(gf, m, terms)


def codeword_degree(order: PointOrder, values) -> int:
    """Total degree of the interpolating reduced polynomial (-1 for zero).

    A vector lies in the order-r code exactly when this is <= r.
    """
    return interpolate(order, values).total_degree()


# -- the codes ---------------------------------------------------------------


class RMCode(LinearCode):
    """Reed-Muller code of order r in m variables over GF(q)."""

    def __init__(self, gf: GF, q: int, m: int, r: int, order: PointOrder,
                 G, H, **kw):
        super().__init__(gf, G, H, **kw)
        self.q = q
        self.m = m
        self.r = r
        self.order = order
        self.d = min_distance_formula(q, r, m)

    def __repr__(self):
        return (f"RMCode(q={self.q}, r={self.r}, m={self.m}) = "
                f"[{self.n}, {self.k}, {self.d}]")


def _monomial_row(gf: GF, order: PointOrder, exps) -> np.ndarray:
    col = np.ones(order.size, dtype=gf.dtype)
    for i, e in enumerate(exps):
        if e:
            col = gf.mul(col, gf.pow(order.points[:, i], e))
    return col


@functools.lru_cache(maxsize=256)
def build_code(q: int, r: int, m: int) -> RMCode:
    """Evaluate the monomial basis over the point grid and attach parity data.

    The rank of the evaluation matrix is cross-checked against both dimension
    formulas; disagreement is a hard error, not a warning.
    """
    validate_params(q, r, m)
    gf = field(q)
    order = point_order(q, m)
    basis = monomial_basis(q, r, m)
    G = np.stack([_monomial_row(gf, order, e) for e in basis])
    R, rk, piv = linalg.rref(gf, G)
    k = len(basis)
    ak = dim_assmus_key(q, r, m)
    ie = dim_inclusion_exclusion(q, r, m)
    if not (rk == k == ak == ie):
        raise CrossCheckError(
            f"dimension sources disagree for (q={q}, r={r}, m={m}): "
            f"rank={rk}, monomials={k}, double-sum={ak}, incl-excl={ie}")
    H = linalg.null_space_from_rref(gf, R, rk, piv, order.size)
    return RMCode(gf, q, m, r, order, G, H, validate=(order.size <= 128))


# -- minimum-weight machinery -------------------------------------------------


def _coordinate_indicator(gf: GF, m: int, var: int, value: int) -> ExponentPoly:
    """1 - (X_var - value)^(q-1): one at points with that coordinate, else zero."""
    x = ExponentPoly.variable(gf, m, var)
    shifted = x - ExponentPoly.constant(gf, m, value)
    return ExponentPoly.constant(gf, m, 1) - shifted ** (gf.q - 1)


def min_weight_poly(q: int, r: int, m: int, *, scale: int = 1,
                    pinned=None, excluded=None) -> ExponentPoly:
    """A polynomial whose evaluation has exactly the minimum weight.

    With (t, s) from the split of r, the word is scale * [indicator of
    X_1..X_t = pinned] * prod_j (X_{t+1} - excluded_j): nonzero exactly on
    the (q - s) * q^(m-t-1) points fixing the first t coordinates and
    avoiding the s excluded values in coordinate t+1.
    """
    validate_params(q, r, m)
    gf = field(q)
    t, s = ts_split(q, r)
    pinned = [0] * t if pinned is None else [int(x) for x in pinned]
    excluded = gf.elements()[:s] if excluded is None else [int(x) for x in excluded]
    if int(scale) == 0:
        raise WitnessParameterError("leading scale must be nonzero")
    if len(pinned) != t:
        raise WitnessParameterError(f"need {t} pinned values, got {len(pinned)}")
    if len(excluded) != s or len(set(excluded)) != s:
        raise WitnessParameterError(f"need {s} distinct excluded values")
    for x in pinned + excluded:
        if not 0 <= x < q:
            raise WitnessParameterError(f"{x} is not an element of GF({q})")
    f = ExponentPoly.constant(gf, m, int(scale))
    for i in range(t):
        f = f * _coordinate_indicator(gf, m, i, pinned[i])
    for val in excluded:
        f = f * (ExponentPoly.variable(gf, m, t) - ExponentPoly.constant(gf, m, val))
    return f


def substitute_linear_forms(f: ExponentPoly, forms, shifts=None) -> np.ndarray:
    """Evaluation vector of f(L_1, ..., L_w) computed pointwise.

    forms is a w x m coefficient matrix over the field (rows must be
    independent); optional shifts turn the forms affine.  No symbolic
    reduction happens: coordinate nu is f evaluated at the form values at
    point nu, so membership and weight are for the caller to verify.
    """
    gf = f.gf
    forms = linalg.as_matrix(gf, forms)
    w, m = forms.shape
    if linalg.rank(gf, forms) != w:
        raise RankDeficientFormsError("substituted linear forms are dependent")
    if any(any(exps[w:]) for exps in f.terms):
        raise ParameterError(
            f"polynomial uses variables beyond the {w} substituted forms")
    if shifts is None:
        shifts = [0] * w
    shifts = [int(x) for x in shifts]
    if len(shifts) != w:
        raise ParameterError(f"need {w} shifts, got {len(shifts)}")
    order = point_order(gf.q, m)
    pts = order.points
    cols = np.empty((order.size, w), dtype=gf.dtype)
    for i in range(w):
        acc = np.full(order.size, shifts[i], dtype=gf.dtype)
        for j in range(m):
            coef = int(forms[i, j])
            if coef:
                acc = gf.add(acc, gf.mul(coef, pts[:, j]))
        cols[:, i] = acc
    vals = np.zeros(order.size, dtype=gf.dtype)
    for exps, coef in f.sorted_terms():
        col = np.full(order.size, coef, dtype=gf.dtype)
        for i, e in enumerate(exps[:w]):
            if e:
                col = gf.mul(col, gf.pow(cols[:, i], e))
        vals = gf.add(vals, col)
    return vals


def interpolation_basis(q: int, m: int) -> list[ExponentPoly]:
    """One polynomial per grid point: 1 at that point, 0 elsewhere.

    Stacked evaluations form the identity, which is how the evaluation map
    is seen to be onto at the top degree m(q-1).
    """
    gf = field(q)
    order = point_order(q, m)
    out = []
    for pt in order.points:
        f = ExponentPoly.constant(gf, m, 1)
        for j in range(m):
            f = f * _coordinate_indicator(gf, m, j, int(pt[j]))
        out.append(f)
    return out


def sum_zero_code_equal(q: int, m: int, *, check_generators: bool = True) -> bool:
    """Does the order m(q-1) - 1 code equal the sum-zero hyperplane code?

    Compares row spaces directly; optionally also rebuilds explicit
    generators (point indicator minus origin indicator) and confirms they
    stay within the degree bound and span the same hyperplane.
    """
    if q < 2 or m < 1:
        raise ParameterError("need q >= 2 and m >= 1")
    r = m * (q - 1) - 1
    code = build_code(q, r, m)
    gf, n = code.gf, code.n
    lam = linalg.zeros(gf, n - 1, n)
    for i in range(n - 1):
        lam[i, i] = 1
        lam[i, i + 1] = gf.neg(1)
    equal = linalg.row_space_equal(gf, code.G, lam)
    if not check_generators:
        return equal
    indicators = interpolation_basis(q, m)
    origin = indicators[0]  # points[0] is the origin
    gens = []
    for f in indicators:
        g = f - origin
        if g.total_degree() > r:
            return False
        gens.append(g.evaluate(code.order))
    span = np.stack(gens)
    return equal and linalg.row_space_equal(gf, span, lam)


# -- witness polynomials for the non-purity analysis -------------------------


def witness_poly_large_field(q: int, m: int, r: int) -> ExponentPoly:
    """Degree-r witness for q > 3 whose word is heavier than the minimum.

    Requires s = 1 in the split of r, m >= 2 and 1 < r < m(q-1) - 1.  The
    word's weight is 2(q-2) q^(m-t-1), strictly above (q-1) q^(m-t-1).
    """
    validate_params(q, r, m)
    if q <= 3:
        raise PreconditionError(f"this construction needs q > 3, got q={q}")
    t, s = ts_split(q, r)
    if s != 1:
        raise PreconditionError(f"split of r={r} gives s={s}; need s = 1")
    if m < 2 or not 1 < r < m * (q - 1) - 1:
        raise PreconditionError(
            f"need m >= 2 and 1 < r < m(q-1)-1, got m={m}, r={r}")
    assert 1 <= t <= m - 1
    gf = field(q)
    elems = gf.elements()
    f = ExponentPoly.constant(gf, m, 1)
    for i in range(t - 1):
        x = ExponentPoly.variable(gf, m, i)
        f = f * (x ** (q - 1) - ExponentPoly.constant(gf, m, 1))
    for j in range(2, q):  # third element onwards
        f = f * (ExponentPoly.variable(gf, m, t - 1)
                 - ExponentPoly.constant(gf, m, elems[j]))
    for val in elems[:2]:
        f = f * (ExponentPoly.variable(gf, m, t)
                 - ExponentPoly.constant(gf, m, val))
    assert f.total_degree() == r
    return f


def witness_poly_ternary(m: int, r: int) -> ExponentPoly:
    """The q = 3 analogue; needs s = 1 and t <= m - 2 (three free variables).

    The word's weight is 8 * 3^(m-t-2), strictly above 2 * 3^(m-t-1).
    """
    q = 3
    validate_params(q, r, m)
    t, s = ts_split(q, r)
    if s != 1:
        raise PreconditionError(f"split of r={r} gives s={s}; need s = 1")
    if not 1 <= t <= m - 2:
        raise PreconditionError(
            f"need 1 <= t <= m-2 for q=3, got t={t}, m={m}")
    gf = field(q)
    third = gf.elements()[2]
    f = ExponentPoly.constant(gf, m, 1)
    for i in range(t - 1):
        x = ExponentPoly.variable(gf, m, i)
        f = f * (x ** 2 - ExponentPoly.constant(gf, m, 1))
    for var in (t - 1, t, t + 1):
        f = f * (ExponentPoly.variable(gf, m, var)
                 - ExponentPoly.constant(gf, m, third))
    assert f.total_degree() == r
    return f
