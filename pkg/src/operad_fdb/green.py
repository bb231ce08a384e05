"""Connected Green function, Faa di Bruno verifier, and combinatorial oracles.

The connected Green function is the series of all single iso-classes, each
weighted by the inverse of its automorphism order.  The verifier compares

    Delta(G)   against   sum over colour words w of  G^w (x) g_w

coefficient-exactly on the window, where g_w collects the classes with input
colour word w (again weighted 1/|Aut|), absorbing the theorem's |Aut(w)|
divisor; the absorption identity is asserted on every class it touches.

Independent oracles: a set-partition enumerator for the classical case and
an admissible-cut enumerator for free-operad trees.  Both are separate
implementation paths from the factorization engine.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .algebra import (IDENTITY, NONSYMMETRIC, POINTED, SYMMETRIC, Monomial,
                      Series, Tensor2, mono_mul, unit_series)
from .bialgebra import delta_gen
from .errors import OracleScaleExceeded, WindowExceeded
from .library import comm_plus, _shape_str, _tree_shape
from .operad import (IsoClass, OperadData, aut_order_word,
                     canonical_colour_word, colour_word_aut,
                     two_level_classes)


@dataclass
class GreenFunction:
    """All single operations weighted by inverse symmetry factors, split by
    output colour."""

    series: Series
    colour_parts: dict

    def coefficient(self, m):
        return self.series.coefficient(m)


def green(d: OperadData, cap=None) -> GreenFunction:
    """G = sum over iso-classes c within the window of delta_c / |Aut c|."""
    window = d.window()
    if cap is not None:
        if cap > d.arity_cap:
            raise WindowExceeded("cap %d beyond table arity cap %d"
                                 % (cap, d.arity_cap))
        window = type(window)(cap, window.weight_cap)
    total = {}
    parts = {c: {} for c in d.colours}
    for cls in d.classes():
        m = d.monomial((cls.symbol,))
        coeff = Fraction(1, cls.aut_order)
        total[m] = coeff
        parts[cls.out_colour][m] = coeff
    return GreenFunction(
        Series(d.mode, window, total, completed=True),
        {c: Series(d.mode, window, p, completed=True)
         for c, p in parts.items()})


def g_part(d: OperadData, w) -> Series:
    """w-ary part of the Green function: classes with input colour word w
    (as a multiset in symmetric mode, literal word otherwise), each with
    coefficient 1/|Aut class|.

    This closed form absorbs the |Aut(w)| divisor of the fiber computation;
    the identity |orbit with literal input word w| * |Aut c| == |Aut(w)| is
    asserted for every contributing class.
    """
    w = canonical_colour_word(d, tuple(w))
    coeffs = {}
    for cls in d.classes():
        cw = canonical_colour_word(d, cls.in_colours)
        if cw != w:
            continue
        count = d.in_word_count(cls, w)
        if count * cls.aut_order != colour_word_aut(d, w):
            raise AssertionError(
                "fiber/closed-form mismatch at %s over w=%r" % (cls.class_id, w))
        coeffs[d.monomial((cls.symbol,))] = Fraction(1, cls.aut_order)
    return Series(d.mode, d.window(), coeffs, completed=True)


def green_power(d: OperadData, gf: GreenFunction, w) -> Series:
    """G^w: the product over the entries of the colour word w of the
    corresponding colour parts of G (ordered in nonsymmetric mode)."""
    w = tuple(w)
    if d.mode in (IDENTITY, POINTED) and len(w) > 1:
        raise WindowExceeded("colour words have at most one entry in %s mode"
                             % d.mode)
    cache = getattr(gf, "_power_cache", None)
    if cache is None:
        cache = gf._power_cache = {}
    if w in cache:
        return cache[w]
    if not w:
        out = unit_series(d.mode, gf.series.window)
        out.completed = True
    else:
        out = green_power(d, gf, w[:-1]) * gf.colour_parts[w[-1]]
    cache[w] = out
    return out


# -- the Faa di Bruno check ------------------------------------------------------------


@dataclass
class FdBEntry:
    inner: Monomial
    outer: Monomial
    lhs: Fraction
    rhs: Fraction

    @property
    def match(self):
        return self.lhs == self.rhs

    def to_json_obj(self):
        return {
            "inner": list(self.inner.class_ids()),
            "outer": list(self.outer.class_ids()),
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "match": self.match,
        }


@dataclass
class FdBReport:
    operad: str
    cap: int
    entries: list = field(default_factory=list)

    @property
    def verdict(self):
        return all(e.match for e in self.entries)

    def mismatches(self):
        return [e for e in self.entries if not e.match]

    def to_json_obj(self):
        return {
            "operad": self.operad,
            "verdict": self.verdict,
            "cap": self.cap,
            "entries": [e.to_json_obj() for e in self.entries],
        }

    def text_table(self):
        lines = ["fdb-check %s (cap %d): verdict %s, %d pairs" % (
            self.operad, self.cap, self.verdict, len(self.entries))]
        for e in self.entries:
            mark = "ok " if e.match else "BAD"
            lines.append("  %s  %s (x) %s : lhs=%s rhs=%s" % (
                mark, e.inner.label(), e.outer.label(), e.lhs, e.rhs))
        return "\n".join(lines)


def _pair_in_window(d: OperadData, x: Monomial, y: Monomial) -> bool:
    """A verified pair must have every contributing composite inside the
    table: additive weights make that exactly weight(x) + weight(y) <= cap."""
    return (x.total_arity <= d.arity_cap
            and x.weight + y.weight <= d.weight_cap)


def fdb_check(d: OperadData, cap=None) -> FdBReport:
    """Verify Delta(G) == sum_w G^w (x) g_w coefficientwise on the window."""
    gf = green(d, cap)
    window = gf.series.window
    lhs = {}
    for cls in d.classes():
        value = delta_gen(d, cls).value
        for (x, y), c in value.items():
            if window.admits(x):
                key = (x, y)
                lhs[key] = lhs.get(key, Fraction(0)) + c / cls.aut_order
    rhs = {}
    words = sorted({canonical_colour_word(d, cls.in_colours)
                    for cls in d.classes()})
    for w in words:
        gp = green_power(d, gf, w)
        part = g_part(d, w)
        for x, cx in gp.items():
            for y, cy in part.items():
                key = (x, y)
                rhs[key] = rhs.get(key, Fraction(0)) + cx * cy
    report = FdBReport(d.name, window.arity_cap)
    keys = sorted(set(lhs) | set(rhs),
                  key=lambda k: (k[0].sort_key(), k[1].sort_key()))
    for x, y in keys:
        if not _pair_in_window(d, x, y):
            continue
        report.entries.append(FdBEntry(
            x, y, lhs.get((x, y), Fraction(0)), rhs.get((x, y), Fraction(0))))
    return report


# -- groupoid-level main equivalence ---------------------------------------------------


@dataclass
class VectorCompareReport:
    name: str
    operad: str
    entries: list  # (key label, lhs, rhs)

    @property
    def ok(self):
        return all(l == r for _, l, r in self.entries)

    def failures(self):
        return [(k, l, r) for k, l, r in self.entries if l != r]

    def to_json_obj(self):
        return {
            "check": self.name,
            "operad": self.operad,
            "ok": self.ok,
            "entries": [
                {"fiber": k, "lhs": str(l), "rhs": str(r), "match": l == r}
                for k, l, r in self.entries
            ],
        }

    def summary(self):
        status = "ok" if self.ok else "FAILED (%d)" % len(self.failures())
        return "%s on %s: %d fibers, %s" % (
            self.name, self.operad, len(self.entries), status)


def _c2_window_groupoid(d: OperadData):
    """Raw two-level composites (b; a_1..a_k) within the window, as an
    explicit finite groupoid with labelling maps to (inner word, outer class).
    """
    from . import perms
    from .groupoid import FinGroupoid
    from .operad import _ops_by_out

    sym = d.mode == SYMMETRIC
    objects = []
    for k in range(d.arity_cap + 1):
        for b in d.ops(k):
            wb = d.weight(b)
            pools = [[a for a in _ops_by_out(d, c)
                      if d.weight(a) <= d.weight_cap - wb]
                     for c in b.in_colours]
            if any(not p for p in pools):
                continue

            def fill(i, w, n, acc):
                if n > d.arity_cap:
                    return
                if i == k:
                    objects.append((b, tuple(acc)))
                    return
                for a in pools[i]:
                    if w + d.weight(a) <= d.weight_cap - wb:
                        acc.append(a)
                        fill(i + 1, w + d.weight(a), n + a.arity, acc)
                        acc.pop()

            fill(0, 0, 0, [])
    hom = {}
    labels = {}
    for obj in objects:
        b, inners = obj
        k = b.arity
        ms = tuple(a.arity for a in inners)
        labels[obj] = (
            d.monomial(d.classify(a).symbol for a in inners),
            d.classify(b).class_id)
        if sym:
            from itertools import product as iproduct
            for sigma in perms.all_perms(k):
                for hs in iproduct(*[perms.all_perms(ms[sigma[i]])
                                     for i in range(k)]):
                    tgt = (d.act(b, sigma),
                           tuple(d.act(inners[sigma[i]], hs[i])
                                 for i in range(k)))
                    hom.setdefault((obj, tgt), []).append((sigma, tuple(hs)))
        else:
            hom.setdefault((obj, obj), []).append(
                (perms.identity(k), tuple(perms.identity(m) for m in ms)))

    def compose(f2, f1):
        (s1, h1), (s2, h2) = f1[2], f2[2]
        return (perms.pcomp(s1, s2),
                tuple(perms.pcomp(h1[s2[i]], h2[i]) for i in range(len(s2))))

    def ident(obj):
        return (perms.identity(obj[0].arity),
                tuple(perms.identity(a.arity) for a in obj[1]))

    gpd = FinGroupoid(tuple(objects), {kk: tuple(v) for kk, v in hom.items()},
                      compose, ident, name="C2(%s)" % d.name)
    return gpd, labels


def _hosum_piece_groupoid(d: OperadData, w):
    """The piece of the homotopy sum at the colour word w: the tuple groupoid
    of operations with output colours w times the slot-fixed fiber of w-ary
    operations, quotiented by the diagonal Aut(w) action.

    Objects are pairs (a_1..a_p, r) with out(a_j) = w_j and in(r) = w on the
    nose; a morphism labelled (u, g_1..g_p) with u in Aut(w) sends it to
    ((a_{u(1)}.g_1, ...), r.u).
    """
    from itertools import product as iproduct

    from . import perms
    from .groupoid import FinGroupoid
    from .operad import _ops_by_out

    w = tuple(w)
    p = len(w)
    sym = d.mode == SYMMETRIC
    aut_w = [u for u in (perms.all_perms(p) if sym else (perms.identity(p),))
             if all(w[u[j]] == w[j] for j in range(p))]
    fiber_ops = [r for r in d.all_ops() if r.in_colours == w]
    objects = []
    pools = [[a for a in _ops_by_out(d, c)] for c in w]

    def fill(j, weight, arity, acc):
        if j == p:
            for r in fiber_ops:
                if weight + d.weight(r) <= d.weight_cap:
                    objects.append((tuple(acc), r))
            return
        for a in pools[j]:
            nw = weight + d.weight(a)
            na = arity + a.arity
            if nw <= d.weight_cap and na <= d.arity_cap:
                acc.append(a)
                fill(j + 1, nw, na, acc)
                acc.pop()

    fill(0, 0, 0, [])
    hom = {}
    labels = {}
    for obj in objects:
        tup, r = obj
        ms = tuple(a.arity for a in tup)
        labels[obj] = (d.monomial(d.classify(a).symbol for a in tup),
                       d.classify(r).class_id)
        for u in aut_w:
            gs_pools = [perms.all_perms(tup[u[j]].arity) for j in range(p)] \
                if sym else [(perms.identity(ms[j]),) for j in range(p)]
            for gs in iproduct(*gs_pools):
                tgt = (tuple(d.act(tup[u[j]], gs[j]) for j in range(p)),
                       d.act(r, u) if sym else r)
                hom.setdefault((obj, tgt), []).append((u, tuple(gs)))

    def compose(f2, f1):
        (u1, g1), (u2, g2) = f1[2], f2[2]
        return (perms.pcomp(u1, u2),
                tuple(perms.pcomp(g1[u2[j]], g2[j]) for j in range(len(u2))))

    def ident(obj):
        tup, r = obj
        return (perms.identity(p), tuple(perms.identity(a.arity) for a in tup))

    gpd = FinGroupoid(tuple(objects), {kk: tuple(v) for kk, v in hom.items()},
                      compose, ident, name="hosum(%s|w=%r)" % (d.name, w))
    return gpd, labels


def c2_equivalence_check(d: OperadData) -> VectorCompareReport:
    """Compare, fiberwise over (inner word class, outer class), the homotopy
    cardinality of the two-level-composite groupoid with that of the homotopy
    sum over colour words of tuple-times-fiber pieces."""
    c2, c2_labels = _c2_window_groupoid(d)
    lhs = c2.cardinality_by(lambda o: c2_labels[o])
    rhs = {}
    words = sorted({canonical_colour_word(d, cls.in_colours)
                    for cls in d.classes()})
    for w in words:
        piece, labels = _hosum_piece_groupoid(d, w)
        for key, val in piece.cardinality_by(lambda o: labels[o]).items():
            rhs[key] = rhs.get(key, Fraction(0)) + val
    entries = []
    for key in sorted(set(lhs) | set(rhs),
                      key=lambda k: (k[0].sort_key(), k[1])):
        x, ycid = key
        y = d.monomial((d.class_by_id(ycid).symbol,))
        if not _pair_in_window(d, x, y):
            continue
        entries.append(("(%s | %s)" % (x.label(), ycid),
                        lhs.get(key, Fraction(0)), rhs.get(key, Fraction(0))))
    return VectorCompareReport("c2-equivalence", d.name, entries)


# -- independent oracles ------------------------------------------------------------------


def set_partitions(items):
    """All partitions of a list into nonempty blocks (each a tuple of blocks)."""
    items = list(items)
    if not items:
        yield ()
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield ((first,),) + part
        for i, block in enumerate(part):
            yield part[:i] + (block + (first,),) + part[i + 1:]


def bell_oracle(n, k):
    """Counts of set partitions of an n-set into k blocks, tallied by sorted
    block-size type.  Brute force; guarded at n <= 10."""
    if n > 10:
        raise OracleScaleExceeded("bell_oracle limited to n <= 10")
    if n < 1 or k < 1:
        raise ValueError("need n, k >= 1")
    out = {}
    for part in set_partitions(range(n)):
        if len(part) != k:
            continue
        typ = tuple(sorted(len(b) for b in part))
        out[typ] = out.get(typ, 0) + 1
    return out


@dataclass
class CrosscheckReport:
    cap: int
    entries: list  # (label, ok, detail)

    @property
    def ok(self):
        return all(ok for _, ok, _ in self.entries)

    def to_json_obj(self):
        return {
            "check": "classical-crosscheck",
            "cap": self.cap,
            "ok": self.ok,
            "entries": [{"label": l, "ok": ok, "detail": det}
                        for l, ok, det in self.entries],
        }


def classical_crosscheck(cap) -> CrosscheckReport:
    """delta_gen on the terminal reduced operad against the set-partition
    enumerator: the coefficient of A_1^{l_1}..A_n^{l_n} (x) A_k in
    Delta(A_n) must equal the number of partitions of an n-set of that type.
    """
    d = comm_plus(cap)
    report = CrosscheckReport(cap, [])
    for n in range(1, cap + 1):
        value = delta_gen(d, "A_%d" % n).value
        expected = {}
        for k in range(1, n + 1):
            for typ, count in bell_oracle(n, k).items():
                inner = d.monomial([d.class_by_id("A_%d" % m).symbol
                                    for m in typ])
                outer = d.monomial((d.class_by_id("A_%d" % k).symbol,))
                expected[(inner, outer)] = Fraction(count)
        actual = dict(value.items())
        ok = actual == expected
        detail = ""
        if not ok:
            missing = {k_ for k_ in expected if expected[k_] != actual.get(k_)}
            detail = "first mismatch at %r" % (sorted(
                (x.label(), y.label()) for x, y in missing)[:3],)
        report.entries.append(("Delta(A_%d)" % n, ok, detail))
    return report


def _payload_cuts(shape):
    """Admissible cuts of a tree shape: yields (root part, crown shapes).

    The empty cut puts the whole tree in the crown over a bare edge; cutting
    below every node leaves the tree as root part with unit crowns.
    """
    if shape == ("L",):
        yield ("L",), [("L",)]
        return
    gen, children = shape[1], shape[2]
    yield ("L",), [shape]

    def child_options(c):
        return list(_payload_cuts(c))

    def combine(i, roots, crowns):
        if i == len(children):
            yield ("N", gen, tuple(roots)), list(crowns)
            return
        for sub_root, sub_crowns in child_options(children[i]):
            yield from combine(i + 1, roots + [sub_root], crowns + sub_crowns)

    yield from combine(0, [], [])


def cut_oracle(d: OperadData, cls) -> Tensor2:
    """Coproduct of a free-operad class by direct admissible-cut enumeration;
    independent of the factorization engine."""
    if isinstance(cls, str):
        cls = d.class_by_id(cls)
    if len(d.colours) > 1:
        raise OracleScaleExceeded("cut_oracle handles single-colour trees only")
    payload, _colour = cls.rep.payload
    shape = _tree_shape(payload)
    by_id = {c.class_id: c for c in d.classes()}

    def class_of(s):
        return by_id[_shape_str(s)]

    coeffs = {}
    for root, crowns in _payload_cuts(shape):
        inner = d.monomial(class_of(s).symbol for s in crowns)
        outer = d.monomial((class_of(root).symbol,))
        key = (inner, outer)
        coeffs[key] = coeffs.get(key, Fraction(0)) + 1
    return Tensor2(d.mode, d.window(), coeffs)


# -- classical presentation -----------------------------------------------------------


def classical_eq1_terms(cap):
    """Termwise A-notation for the classical identity on the terminal reduced
    operad: for each k, the pair (G^k truncated, A_k / k!)."""
    d = comm_plus(cap)
    gf = green(d)
    terms = []
    for k in range(1, cap + 1):
        w = ("c",) * k
        gp = green_power(d, gf, w)
        part = g_part(d, w)
        expected_part = Series(
            d.mode, d.window(),
            {d.monomial((d.class_by_id("A_%d" % k).symbol,)):
             Fraction(1, factorial(k))}, completed=True)
        power = unit_series(d.mode, gf.series.window)
        for _ in range(k):
            power = power * gf.series
        terms.append({
            "k": k,
            "lhs_label": "A^%d" % k,
            "rhs_label": "A_%d/%d!" % (k, k),
            "power_matches": gp == power,
            "part_matches": part == expected_part,
        })
    return terms
