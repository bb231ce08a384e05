"""Exact graded algebra carrier: generator symbols, monomials, series, tensors.

Coefficients are fractions.Fraction throughout; no floating point anywhere.
Monomials are multisets of generator symbols in symmetric mode and ordered
words in nonsymmetric mode; identity/pointed modes admit at most one factor.
Series and two-sided tensors are truncated to a window: total arity is the
grading, with an optional secondary additive weight bound used by operads
whose tables are size-bounded rather than arity-bounded.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .errors import CapMismatch, IllegalProduct, ModeMismatch

SYMMETRIC = "symmetric"
NONSYMMETRIC = "nonsymmetric"
IDENTITY = "identity"
POINTED = "pointed"
MODES = (SYMMETRIC, NONSYMMETRIC, IDENTITY, POINTED)

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class GeneratorSymbol:
    """One basis symbol per iso-class of operations."""

    class_id: str
    arity: int
    in_colours: tuple = ()
    out_colour: object = None
    aut_order: int = 1
    weight: int = -1  # -1 means "default to arity - 1 (reduced grading)"

    def __post_init__(self):
        if self.weight < 0:
            object.__setattr__(self, "weight", max(self.arity - 1, 0))
        if self.arity < 0:
            raise ValueError("negative arity")
        if self.aut_order <= 0 or factorial(self.arity) % self.aut_order != 0:
            raise ValueError(
                "aut_order %d does not divide %d!" % (self.aut_order, self.arity)
            )
        if len(self.in_colours) not in (0, self.arity):
            raise ValueError("in_colours length must equal arity")

    def __repr__(self):
        return "Sym(%s)" % self.class_id


@dataclass(frozen=True)
class Monomial:
    """Word (or multiset) of generator symbols; the empty word is the unit."""

    mode: str
    factors: tuple = ()

    def __post_init__(self):
        if self.mode not in MODES:
            raise ModeMismatch("unknown mode %r" % (self.mode,))
        if self.mode == SYMMETRIC:
            object.__setattr__(
                self, "factors", tuple(sorted(self.factors, key=lambda s: s.class_id))
            )
        else:
            object.__setattr__(self, "factors", tuple(self.factors))
        if self.mode == IDENTITY and len(self.factors) > 1:
            raise IllegalProduct("identity mode admits at most one factor")
        if self.mode == POINTED and len(self.factors) > 1:
            raise IllegalProduct("pointed mode admits at most one factor")
        object.__setattr__(self, "_ta", sum(s.arity for s in self.factors))
        object.__setattr__(self, "_w", sum(s.weight for s in self.factors))
        ids = tuple(s.class_id for s in self.factors)
        object.__setattr__(self, "_ids", ids)
        object.__setattr__(self, "_hash", hash((self.mode,) + ids))

    def __hash__(self):
        return self._hash

    @property
    def total_arity(self):
        return self._ta

    @property
    def weight(self):
        return self._w

    @property
    def is_empty(self):
        return not self.factors

    def class_ids(self):
        return self._ids

    def sort_key(self):
        return self._ids

    def label(self):
        """Human-readable product form, e.g. A_1^2.A_2 ; the unit prints as 1."""
        if not self.factors:
            return "1"
        if self.mode == SYMMETRIC:
            parts = []
            seen = []
            for s in self.factors:
                if seen and seen[-1][0] == s.class_id:
                    seen[-1][1] += 1
                else:
                    seen.append([s.class_id, 1])
            for cid, mult in seen:
                parts.append(cid if mult == 1 else "%s^%d" % (cid, mult))
            return ".".join(parts)
        return ".".join(s.class_id for s in self.factors)

    def __repr__(self):
        return "Mon(%s)" % self.label()


EMPTY = {mode: Monomial(mode, ()) for mode in MODES}


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    """Product of monomials: multiset union (symmetric) or concatenation."""
    if a.mode != b.mode:
        raise ModeMismatch("cannot multiply %s by %s monomial" % (a.mode, b.mode))
    if a.mode in (IDENTITY, POINTED) and a.factors and b.factors:
        raise IllegalProduct("no products of nonempty %s-mode monomials" % a.mode)
    return Monomial(a.mode, a.factors + b.factors)


@dataclass(frozen=True)
class Window:
    """Truncation window: keep monomials with total_arity <= arity_cap and,
    when weight_cap is set, weight <= weight_cap."""

    arity_cap: int
    weight_cap: int | None = None

    def admits(self, m: Monomial) -> bool:
        if m.total_arity > self.arity_cap:
            return False
        if self.weight_cap is not None and m.weight > self.weight_cap:
            return False
        return True


def _as_window(cap) -> Window:
    if isinstance(cap, Window):
        return cap
    return Window(int(cap), None)


class Series:
    """Finite exact-rational linear combination of monomials, truncated."""

    def __init__(self, mode, cap, coeffs=None, completed=False):
        self.mode = mode
        self.window = _as_window(cap)
        self.completed = bool(completed)
        data = {}
        for m, c in (coeffs or {}).items():
            c = Fraction(c)
            if c == 0:
                continue
            if m.mode != mode:
                raise ModeMismatch("monomial mode %r in %r series" % (m.mode, mode))
            if self.window.admits(m):
                data[m] = c
        self._c = data

    @property
    def window_cap(self):
        return self.window.arity_cap

    def coefficient(self, m: Monomial) -> Fraction:
        return self._c.get(m, ZERO)

    def items(self):
        return sorted(self._c.items(), key=lambda kv: kv[0].sort_key())

    def monomials(self):
        return [m for m, _ in self.items()]

    def is_zero(self):
        return not self._c

    def _check_compatible(self, other):
        if self.mode != other.mode:
            raise ModeMismatch("series modes differ")
        if self.window != other.window:
            raise CapMismatch("series windows differ")

    def __add__(self, other):
        self._check_compatible(other)
        data = dict(self._c)
        for m, c in other._c.items():
            data[m] = data.get(m, ZERO) + c
        return Series(self.mode, self.window, data,
                      completed=self.completed or other.completed)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        c = Fraction(c)
        return Series(self.mode, self.window,
                      {m: v * c for m, v in self._c.items()},
                      completed=self.completed)

    def __mul__(self, other):
        self._check_compatible(other)
        acap = self.window.arity_cap
        wcap = self.window.weight_cap
        data = {}
        for ma, ca in self._c.items():
            for mb, cb in other._c.items():
                # prune before building the merged monomial
                if ma.total_arity + mb.total_arity > acap:
                    continue
                if wcap is not None and ma.weight + mb.weight > wcap:
                    continue
                m = mono_mul(ma, mb)
                data[m] = data.get(m, ZERO) + ca * cb
        return Series(self.mode, self.window, data,
                      completed=self.completed or other.completed)

    def truncate(self, cap):
        return Series(self.mode, cap, self._c, completed=self.completed)

    def __eq__(self, other):
        return (isinstance(other, Series) and self.mode == other.mode
                and self._c == other._c)

    def __hash__(self):
        return hash((self.mode, frozenset(self._c.items())))

    def __repr__(self):
        if not self._c:
            return "Series(0)"
        terms = ["%s.%s" % (c, m.label()) for m, c in self.items()]
        return "Series(%s)" % " + ".join(terms)

    def to_json_obj(self):
        return [
            {"monomial": list(m.class_ids()), "coeff": str(c)}
            for m, c in self.items()
        ]


def unit_series(mode, cap) -> Series:
    return Series(mode, cap, {EMPTY[mode]: ONE})


def series_mul(s: Series, t: Series) -> Series:
    return s * t


def series_pow(s: Series, k: int) -> Series:
    out = unit_series(s.mode, s.window)
    for _ in range(k):
        out = out * s
    return out


class Tensor2:
    """Two-sided tensor: finite map (Monomial, Monomial) -> Fraction.

    Truncation applies to the left slot, which carries the grading.
    """

    def __init__(self, mode, cap, coeffs=None):
        self.mode = mode
        self.window = _as_window(cap)
        data = {}
        for (x, y), c in (coeffs or {}).items():
            c = Fraction(c)
            if c == 0:
                continue
            if x.mode != mode or y.mode != mode:
                raise ModeMismatch("tensor slot mode mismatch")
            if self.window.admits(x):
                data[(x, y)] = c
        self._c = data

    @property
    def window_cap(self):
        return self.window.arity_cap

    def coefficient(self, key) -> Fraction:
        return self._c.get(key, ZERO)

    def items(self):
        return sorted(self._c.items(),
                      key=lambda kv: (kv[0][0].sort_key(), kv[0][1].sort_key()))

    def is_zero(self):
        return not self._c

    def _check_compatible(self, other):
        if self.mode != other.mode:
            raise ModeMismatch("tensor modes differ")
        if self.window != other.window:
            raise CapMismatch("tensor windows differ")

    def __add__(self, other):
        self._check_compatible(other)
        data = dict(self._c)
        for k, c in other._c.items():
            data[k] = data.get(k, ZERO) + c
        return Tensor2(self.mode, self.window, data)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        c = Fraction(c)
        return Tensor2(self.mode, self.window,
                       {k: v * c for k, v in self._c.items()})

    def __mul__(self, other):
        """Slotwise product (x1 (x) y1) . (x2 (x) y2) = x1x2 (x) y1y2."""
        self._check_compatible(other)
        acap = self.window.arity_cap
        wcap = self.window.weight_cap
        data = {}
        for (x1, y1), c1 in self._c.items():
            for (x2, y2), c2 in other._c.items():
                if x1.total_arity + x2.total_arity > acap:
                    continue
                if wcap is not None and x1.weight + x2.weight > wcap:
                    continue
                key = (mono_mul(x1, x2), mono_mul(y1, y2))
                data[key] = data.get(key, ZERO) + c1 * c2
        return Tensor2(self.mode, self.window, data)

    def __eq__(self, other):
        return (isinstance(other, Tensor2) and self.mode == other.mode
                and self._c == other._c)

    def __hash__(self):
        return hash((self.mode, frozenset(self._c.items())))

    def __repr__(self):
        if not self._c:
            return "Tensor2(0)"
        terms = ["%s.(%s (x) %s)" % (c, x.label(), y.label())
                 for (x, y), c in self.items()]
        return "Tensor2(%s)" % " + ".join(terms)

    def to_json_obj(self):
        return [
            {"monomial": [list(x.class_ids()), list(y.class_ids())],
             "coeff": str(c)}
            for (x, y), c in self.items()
        ]


def unit_tensor(mode, cap) -> Tensor2:
    e = EMPTY[mode]
    return Tensor2(mode, cap, {(e, e): ONE})


def tensor_mul(u: Tensor2, v: Tensor2) -> Tensor2:
    return u * v


def coefficient(s, key) -> Fraction:
    """Coefficient lookup on a Series (key: Monomial) or Tensor2 (key: pair)."""
    return s.coefficient(key)
