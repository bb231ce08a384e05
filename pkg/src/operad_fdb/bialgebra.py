"""Incidence bialgebra of an operad: comultiplication, counit, structure checks.

The comultiplication of a generator is read off the factorization groupoid:

    Delta(delta_c) = sum over components (1/|Aut(component)|)
                     delta_{inner word} (x) delta_{outer}

computed class-by-class from the two-level engine: an iso-class t of
two-level composites with composite class c contributes
[Aut(c) : image of Stab(t)] components, each with automorphism order
|kernel|, so its total coefficient is |Aut(c)| / |Stab(t)|.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct

from .algebra import (IDENTITY, NONSYMMETRIC, POINTED, SYMMETRIC,
                      GeneratorSymbol, Monomial, Series, Tensor2, Window,
                      mono_mul, unit_tensor)
from .errors import CompletedSeriesCounit, ModeMismatch, WindowExceeded
from .operad import (IsoClass, OperadData, aut_order_word,
                     canonical_colour_word, colour_word_aut,
                     two_level_by_composite, two_level_classes)


@dataclass(frozen=True)
class EvidenceEntry:
    component_id: str
    aut_order: int
    inner: Monomial
    outer: GeneratorSymbol

    def to_json_obj(self):
        return {
            "component": self.component_id,
            "aut_order": self.aut_order,
            "inner": list(self.inner.class_ids()),
            "outer": self.outer.class_id,
        }


@dataclass(frozen=True)
class DeltaResult:
    """Comultiplication of one generator with its factorization evidence."""

    value: Tensor2
    evidence: tuple

    def rows(self):
        """(inner monomial, outer class, coefficient) in deterministic order."""
        return [(x, y.factors[0].class_id, c) for (x, y), c in self.value.items()]

    def to_json_obj(self):
        return {
            "value": self.value.to_json_obj(),
            "evidence": [e.to_json_obj() for e in self.evidence],
        }


def _resolve_class(d: OperadData, c) -> IsoClass:
    if isinstance(c, IsoClass):
        return c
    return d.class_by_id(c)


def delta_gen(d: OperadData, c) -> DeltaResult:
    """Comultiplication of the generator delta_c."""
    cls = _resolve_class(d, c)
    cache = d._cache.setdefault("delta_gen", {})
    if cls.class_id in cache:
        return cache[cls.class_id]
    if cls.weight > d.weight_cap:
        raise WindowExceeded("class %s outside window" % cls.class_id)
    window = d.window()
    coeffs = {}
    evidence = []
    for rec in two_level_by_composite(d).get(cls.class_id, ()):
        image_order = rec.stab_order // rec.kernel_order
        n_components, remainder = divmod(cls.aut_order, image_order)
        if remainder:
            raise AssertionError(
                "orbit-stabilizer violated at %s" % (rec.key,))
        outer_mon = d.monomial((rec.outer.symbol,))
        key = (rec.inner_mon, outer_mon)
        coeffs[key] = coeffs.get(key, Fraction(0)) + \
            Fraction(n_components, rec.kernel_order)
        for j in range(n_components):
            evidence.append(EvidenceEntry(
                "%s#%d" % ("|".join(rec.key), j), rec.kernel_order,
                rec.inner_mon, rec.outer.symbol))
    result = DeltaResult(Tensor2(d.mode, window, coeffs), tuple(evidence))
    cache[cls.class_id] = result
    return result


def _delta_monomial_product(d: OperadData, m: Monomial) -> Tensor2:
    """Delta extended multiplicatively: product of the factors' deltas."""
    out = unit_tensor(d.mode, d.window())
    for s in m.factors:
        out = out * delta_gen(d, s.class_id).value
    return out


def delta(d: OperadData, s: Series) -> Tensor2:
    """Linear and multiplicative extension of delta_gen to a series."""
    if s.mode != d.mode:
        raise ModeMismatch("series mode %r for %s operad" % (s.mode, d.mode))
    out = Tensor2(d.mode, d.window(), {})
    for m, c in s.items():
        out = out + _delta_monomial_product(d, m).scale(c)
    return out


def delta_word_direct(d: OperadData, m: Monomial) -> Tensor2:
    """Comultiplication of a whole word by direct enumeration of two-level
    words, bypassing the multiplicative extension.

    A family W of two-level classes with composite word equal to m
    contributes |Aut(m)| / |Aut(W)| to its (inner, outer) coefficient.
    """
    if m.mode != d.mode:
        raise ModeMismatch("monomial mode mismatch")
    cache = d._cache.setdefault("delta_word", {})
    if m in cache:
        return cache[m]
    window = d.window()
    by_comp = two_level_by_composite(d)
    coeffs = {}
    if d.mode in (SYMMETRIC, IDENTITY, POINTED):
        mult = {}
        for s in m.factors:
            mult[s.class_id] = mult.get(s.class_id, 0) + 1
        groups = []
        for cid, q in sorted(mult.items()):
            recs = by_comp.get(cid, ())
            groups.append((q, recs, _multisets(len(recs), q)))
        aut_m = aut_order_word(d, m)
        for choice in iproduct(*[g[2] for g in groups]):
            family = []
            for (q, recs, _), picks in zip(groups, choice):
                for idx in picks:
                    family.append(recs[idx])
            aut_w = 1
            counts = {}
            for rec in family:
                counts[id(rec)] = counts.get(id(rec), 0) + 1
                aut_w *= rec.stab_order
            for q in counts.values():
                aut_w *= _fact(q)
            inner = d.empty_monomial()
            outer = d.empty_monomial()
            for rec in family:
                inner = mono_mul(inner, rec.inner_mon)
                outer = mono_mul(outer, d.monomial((rec.outer.symbol,)))
            key = (inner, outer)
            coeffs[key] = coeffs.get(key, Fraction(0)) + Fraction(aut_m, aut_w)
    else:  # nonsymmetric: ordered words, rigid
        pools = [by_comp.get(s.class_id, ()) for s in m.factors]
        for family in iproduct(*pools):
            inner = d.empty_monomial()
            outer = d.empty_monomial()
            for rec in family:
                inner = mono_mul(inner, rec.inner_mon)
                outer = mono_mul(outer, d.monomial((rec.outer.symbol,)))
            key = (inner, outer)
            coeffs[key] = coeffs.get(key, Fraction(0)) + 1
    result = Tensor2(d.mode, window, coeffs)
    cache[m] = result
    return result


def _fact(n):
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def _multisets(n, k):
    """All multisets of size k from range(n), as sorted index tuples."""
    out = []

    def rec(start, left, acc):
        if left == 0:
            out.append(tuple(acc))
            return
        for i in range(start, n):
            acc.append(i)
            rec(i, left - 1, acc)
            acc.pop()

    rec(0, k, [])
    return out


# -- counit ---------------------------------------------------------------------


def counit(d: OperadData, m: Monomial) -> Fraction:
    """1 if every factor is a unary identity class, else 0."""
    if m.mode != d.mode:
        raise ModeMismatch("monomial mode mismatch")
    units = d.unit_class_ids()
    if all(s.class_id in units for s in m.factors):
        return Fraction(1)
    return Fraction(0)


def counit_series(d: OperadData, s: Series) -> Fraction:
    """Counit on polynomial (finite-support) series only."""
    if s.completed:
        raise CompletedSeriesCounit(
            "counit is not defined on completed series")
    total = Fraction(0)
    for m, c in s.items():
        total += c * counit(d, m)
    return total


# -- structural checks -------------------------------------------------------------


@dataclass
class CheckReport:
    name: str
    operad: str
    entries: list  # (label, ok, detail)

    @property
    def ok(self):
        return all(ok for _, ok, _ in self.entries)

    def failures(self):
        return [(label, detail) for label, ok, detail in self.entries if not ok]

    def to_json_obj(self):
        return {
            "check": self.name,
            "operad": self.operad,
            "ok": self.ok,
            "entries": [
                {"label": label, "ok": ok, "detail": detail}
                for label, ok, detail in self.entries
            ],
        }

    def summary(self):
        status = "ok" if self.ok else "FAILED (%d)" % len(self.failures())
        return "%s on %s: %d entries, %s" % (
            self.name, self.operad, len(self.entries), status)


def _triple_expand(d, tensor, side):
    """(Delta (x) id) or (id (x) Delta) of a Tensor2, as a dict on triples."""
    out = {}
    for (x, y), c in tensor.items():
        inner = delta_word_direct(d, x) if side == "left" else \
            delta_word_direct(d, y)
        for (u, v), c2 in inner.items():
            key = (u, v, y) if side == "left" else (x, u, v)
            out[key] = out.get(key, Fraction(0)) + c * c2
    return {k: v for k, v in out.items() if v}


def check_coassoc(d: OperadData) -> CheckReport:
    """(Delta (x) id) Delta == (id (x) Delta) Delta on all generators."""
    entries = []
    for cls in d.classes():
        t = delta_gen(d, cls).value
        lhs = _triple_expand(d, t, "left")
        rhs = _triple_expand(d, t, "right")
        ok = lhs == rhs
        detail = "" if ok else "triple tensors differ at %s" % cls.class_id
        entries.append(("coassoc(%s)" % cls.class_id, ok, detail))
    return CheckReport("coassociativity", d.name, entries)


def check_counit_laws(d: OperadData) -> CheckReport:
    """(eps (x) id) Delta == id == (id (x) eps) Delta on all generators."""
    entries = []
    for cls in d.classes():
        t = delta_gen(d, cls).value
        left = {}
        right = {}
        for (x, y), c in t.items():
            left[y] = left.get(y, Fraction(0)) + c * counit(d, x)
            right[x] = right.get(x, Fraction(0)) + c * counit(d, y)
        expected = {d.monomial((cls.symbol,)): Fraction(1)}
        left = {k: v for k, v in left.items() if v}
        right = {k: v for k, v in right.items() if v}
        ok = left == expected and right == expected
        entries.append(("counit(%s)" % cls.class_id, ok,
                        "" if ok else "counit laws fail at %s" % cls.class_id))
    return CheckReport("counit laws", d.name, entries)


def check_multiplicativity(d: OperadData) -> CheckReport:
    """delta_word_direct(xy) == delta_gen(x) . delta_gen(y) on all two-factor
    words in the window; the executable content of CULF multiplicativity."""
    entries = []
    if d.mode in (IDENTITY, POINTED):
        e = d.empty_monomial()
        ok = delta_word_direct(d, e) == unit_tensor(d.mode, d.window())
        entries.append(("unit word", ok, "" if ok else "Delta(1) != 1(x)1"))
        for cls in d.classes():
            m = d.monomial((cls.symbol,))
            ok = delta_word_direct(d, m) == delta_gen(d, cls).value
            entries.append(("word(%s)" % cls.class_id, ok,
                            "" if ok else "direct != generator delta"))
        return CheckReport("multiplicativity", d.name, entries)
    window = d.window()
    for c1 in d.classes():
        for c2 in d.classes():
            if d.mode == SYMMETRIC and c2.class_id < c1.class_id:
                continue
            m = d.monomial((c1.symbol, c2.symbol))
            if not window.admits(m):
                continue
            direct = delta_word_direct(d, m)
            product = delta_gen(d, c1).value * delta_gen(d, c2).value
            ok = direct == product
            entries.append(("word(%s)" % m.label(), ok,
                            "" if ok else "direct != product at %s" % m.label()))
    return CheckReport("multiplicativity", d.name, entries)


# -- Segal check ----------------------------------------------------------------------


def _word_families(d: OperadData):
    """All multisets (symmetric) or words (nonsymmetric) of two-level classes
    within the window, with their word automorphism orders.

    Yields (inner monomial, outer monomial, aut_order_of_word).
    """
    recs = two_level_classes(d)
    acap, wcap = d.arity_cap, d.weight_cap
    if d.mode in (SYMMETRIC, IDENTITY, POINTED):
        max_len = 1 if d.mode in (IDENTITY, POINTED) else None

        def rec_weight(r):
            return r.composite.weight

        results = []

        def dfs(start, arity, weight, family):
            inner = d.empty_monomial()
            outer = d.empty_monomial()
            aut = 1
            counts = {}
            for r in family:
                inner = mono_mul(inner, r.inner_mon)
                outer = mono_mul(outer, d.monomial((r.outer.symbol,)))
                counts[id(r)] = counts.get(id(r), 0) + 1
                aut *= r.stab_order
            for q in counts.values():
                aut *= _fact(q)
            results.append((inner, outer, aut))
            if max_len is not None and len(family) >= max_len:
                return
            for i in range(start, len(recs)):
                r = recs[i]
                na = arity + r.inner_mon.total_arity
                nw = weight + rec_weight(r)
                if na > acap or nw > wcap:
                    continue
                family.append(r)
                dfs(i, na, nw, family)
                family.pop()

        dfs(0, 0, 0, [])
        return results
    # nonsymmetric: ordered tuples
    results = []

    def dfs(arity, weight, inner, outer):
        results.append((inner, outer, 1))
        for r in recs:
            na = arity + r.inner_mon.total_arity
            nw = weight + r.composite.weight
            if na > acap or nw > wcap:
                continue
            dfs(na, nw, mono_mul(inner, r.inner_mon),
                mono_mul(outer, d.monomial((r.outer.symbol,))))

    dfs(0, 0, d.empty_monomial(), d.empty_monomial())
    return results


def _out_colour_word(m: Monomial):
    return tuple(s.out_colour for s in m.factors)


def _in_colour_word_flat(m: Monomial):
    return tuple(c for s in m.factors for c in s.in_colours)


def segal_check(d: OperadData) -> CheckReport:
    """Cardinality-level Segal condition: over every pair of word classes
    (x, y), the two-level-word groupoid and the matched-pairs-of-words
    groupoid have equal homotopy cardinality.

    Left side: sum over families of two-level classes with inner word x and
    outer word y of 1/|Aut(family)|.  Right side: matched pairs contribute
    |Aut(w)| / (|Aut(x)|.|Aut(y)|) when the output colours of x agree with
    the flattened input colours of y (as an object w of the base), else 0.
    """
    lhs = {}
    for inner, outer, aut in _word_families(d):
        key = (inner, outer)
        lhs[key] = lhs.get(key, Fraction(0)) + Fraction(1, aut)
    window = d.window()
    mons = sorted({m for pair in lhs for m in pair}, key=lambda m: m.sort_key())
    rhs = {}
    for x in mons:
        if not window.admits(x):
            continue
        wx = canonical_colour_word(d, _out_colour_word(x))
        for y in mons:
            wy = canonical_colour_word(d, _in_colour_word_flat(y))
            if wx != wy:
                continue
            if x.weight + y.weight > d.weight_cap:
                continue
            rhs[(x, y)] = Fraction(
                colour_word_aut(d, wx),
                aut_order_word(d, x) * aut_order_word(d, y))
    entries = []
    for key in sorted(set(lhs) | set(rhs),
                      key=lambda k: (k[0].sort_key(), k[1].sort_key())):
        x, y = key
        if not window.admits(x) or x.weight + y.weight > d.weight_cap:
            continue
        lv = lhs.get(key, Fraction(0))
        rv = rhs.get(key, Fraction(0))
        ok = lv == rv
        entries.append(("(%s | %s)" % (x.label(), y.label()), ok,
                        "" if ok else "%s != %s" % (lv, rv)))
    return CheckReport("segal", d.name, entries)
