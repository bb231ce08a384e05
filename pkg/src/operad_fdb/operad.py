"""Coloured-operad data model within a finite enumeration window.

An OperadData holds finite operation tables per arity, the symmetric-group
action (symmetric mode only), the substitution map, and units.  Tables are
complete for all operations of additive weight <= weight_cap; for reduced
arity-graded operads the weight is arity - 1, so the window is exactly
"arity <= cap".  Tree-backed and monoid-backed operads supply their own
weight so that window closure survives nullary and unary operations.

The factorization machinery enumerates iso-classes of two-level composites
(b; a_1..a_k) once per operad; connected components and automorphism orders
of every factorization groupoid are read off from stabilizer computations
inside the wreath-like group Stab(b) x prod S_{m_i}.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as iproduct
from math import factorial

from . import perms
from .algebra import (IDENTITY, NONSYMMETRIC, POINTED, SYMMETRIC,
                      GeneratorSymbol, Monomial, Window)
from .errors import (ModeMismatch, UnknownOperation, WindowExceeded)
from .groupoid import FinGroupoid


@dataclass(frozen=True)
class Operation:
    """A single operation: typed inputs, one output, canonicalizable payload."""

    op_id: str
    in_colours: tuple
    out_colour: object
    payload: object = None

    @property
    def arity(self):
        return len(self.in_colours)

    def __repr__(self):
        return "Op(%s)" % self.op_id


@dataclass(frozen=True)
class IsoClass:
    """Orbit of an operation under input permutations, with its stabilizer."""

    class_id: str
    rep: Operation
    orbit_size: int
    aut_order: int
    weight: int
    stab: tuple = ((),)  # stabilizer permutations of the representative

    @property
    def arity(self):
        return self.rep.arity

    @property
    def in_colours(self):
        return self.rep.in_colours

    @property
    def out_colour(self):
        return self.rep.out_colour

    @property
    def symbol(self) -> GeneratorSymbol:
        return GeneratorSymbol(
            class_id=self.class_id,
            arity=self.arity,
            in_colours=self.rep.in_colours,
            out_colour=self.rep.out_colour,
            aut_order=self.aut_order,
            weight=self.weight,
        )

    def __repr__(self):
        return "Cls(%s)" % self.class_id


class OperadData:
    """Finite operad window.

    Structural callables (compose, act, units, weight, op tables) are
    injected by the constructors in the library module or by the spec-file
    loader; the orbit/stabilizer and factorization machinery here is generic.
    """

    def __init__(self, *, name, mode, colours, arity_cap, weight_cap,
                 ops_fn, compose_fn, unit_fn, weight_fn,
                 act_fn=None, classes_fn=None, classify_fn=None,
                 in_word_count_fn=None, nullary_source="none"):
        if mode not in (SYMMETRIC, NONSYMMETRIC, IDENTITY, POINTED):
            raise ModeMismatch("unknown mode %r" % (mode,))
        if mode == SYMMETRIC and act_fn is None:
            raise ValueError("symmetric mode requires an action")
        self.name = name
        self.mode = mode
        self.colours = tuple(colours)
        self.arity_cap = int(arity_cap)
        self.weight_cap = int(weight_cap)
        self._ops_fn = ops_fn
        self._compose_fn = compose_fn
        self._unit_fn = unit_fn
        self._weight_fn = weight_fn
        self._act_fn = act_fn
        self._classes_fn = classes_fn
        self._classify_fn = classify_fn
        self._in_word_count_fn = in_word_count_fn
        self.nullary_source = nullary_source
        self._cache = {}

    # -- raw tables -----------------------------------------------------------

    def ops(self, n):
        """All operations of arity n within the weight window."""
        if n < 0 or n > self.arity_cap:
            return ()
        key = ("ops", n)
        if key not in self._cache:
            self._cache[key] = tuple(
                op for op in self._ops_fn(n) if self.weight(op) <= self.weight_cap)
        return self._cache[key]

    def all_ops(self):
        for n in range(self.arity_cap + 1):
            for op in self.ops(n):
                yield op

    def weight(self, op: Operation) -> int:
        return self._weight_fn(op)

    def unit(self, colour) -> Operation:
        return self._unit_fn(colour)

    def act(self, op: Operation, p) -> Operation:
        """Right action: act(op, p).in_colours[i] == op.in_colours[p[i]]."""
        if self.mode != SYMMETRIC:
            if p == perms.identity(op.arity):
                return op
            raise ModeMismatch("%s mode has no symmetric action" % self.mode)
        return self._act_fn(op, p)

    def compose(self, b: Operation, inners) -> Operation:
        """Operad substitution b o (a_1, ..., a_k); raises WindowExceeded
        when the composite falls outside the table window."""
        inners = tuple(inners)
        if len(inners) != b.arity:
            raise UnknownOperation("need %d inner operations, got %d"
                                   % (b.arity, len(inners)))
        for i, a in enumerate(inners):
            if a.out_colour != b.in_colours[i]:
                raise UnknownOperation(
                    "colour mismatch in slot %d of %s" % (i, b.op_id))
        w = self.weight(b) + sum(self.weight(a) for a in inners)
        if w > self.weight_cap:
            raise WindowExceeded(
                "composite of %s has weight %d > %d" % (b.op_id, w, self.weight_cap))
        return self._compose_fn(b, inners)

    def in_window(self, op: Operation) -> bool:
        return self.weight(op) <= self.weight_cap

    def window(self) -> Window:
        return Window(self.arity_cap, self.weight_cap)

    # -- iso-classification -----------------------------------------------------

    def classes(self):
        """All iso-classes within the window, sorted by (arity, class_id)."""
        if "classes" not in self._cache:
            if self._classes_fn is not None:
                cls = tuple(self._classes_fn(self))
            else:
                cls = tuple(self._brute_classes())
            cls = tuple(sorted(cls, key=lambda c: (c.arity, c.class_id)))
            self._cache["classes"] = cls
            self._cache["by_id"] = {c.class_id: c for c in cls}
        return self._cache["classes"]

    def class_by_id(self, class_id) -> IsoClass:
        self.classes()
        try:
            return self._cache["by_id"][class_id]
        except KeyError:
            raise UnknownOperation("no class %r in %s" % (class_id, self.name))

    def classify(self, op: Operation) -> IsoClass:
        if self._classify_fn is not None:
            return self._classify_fn(self, op)
        self.classes()
        key = ("op2class", op)
        table = self._cache.setdefault("op2class_map", {})
        if op not in table:
            if self.mode == SYMMETRIC:
                best = None
                for p in perms.all_perms(op.arity):
                    cand = self.act(op, p)
                    if best is None or cand.op_id < best.op_id:
                        best = cand
                cid = best.op_id
            else:
                cid = op.op_id
            table[op] = self.class_by_id(cid)
        return table[op]

    def _brute_classes(self):
        out = []
        for n in range(self.arity_cap + 1):
            seen = set()
            for op in sorted(self.ops(n), key=lambda o: o.op_id):
                if op.op_id in seen:
                    continue
                if self.mode == SYMMETRIC:
                    orbit = {}
                    for p in perms.all_perms(n):
                        img = self.act(op, p)
                        orbit[img.op_id] = img
                    rep = orbit[min(orbit)]
                    stab = tuple(p for p in perms.all_perms(n)
                                 if self.act(rep, p) == rep)
                    seen.update(orbit)
                    out.append(IsoClass(rep.op_id, rep, len(orbit), len(stab),
                                        self.weight(rep), stab))
                else:
                    seen.add(op.op_id)
                    out.append(IsoClass(op.op_id, op, 1, 1, self.weight(op),
                                        (perms.identity(n),)))
        return out

    def unit_class_ids(self):
        if "unit_ids" not in self._cache:
            self._cache["unit_ids"] = frozenset(
                self.classify(self.unit(c)).class_id for c in self.colours)
        return self._cache["unit_ids"]

    def classes_by_out(self, colour):
        key = ("byout", colour)
        if key not in self._cache:
            self._cache[key] = tuple(
                c for c in self.classes() if c.out_colour == colour)
        return self._cache[key]

    # -- monomials ------------------------------------------------------------

    def monomial(self, symbols) -> Monomial:
        return Monomial(self.mode, tuple(symbols))

    def empty_monomial(self) -> Monomial:
        return Monomial(self.mode, ())

    def in_word_count(self, cls: IsoClass, word) -> int:
        """Number of operations in the orbit of cls whose literal input
        colour word equals `word`; backends may override with a closed form."""
        if self._in_word_count_fn is not None:
            return self._in_word_count_fn(self, cls, word)
        count = 0
        seen = set()
        for p in perms.all_perms(cls.arity):
            img = self.act(cls.rep, p) if self.mode == SYMMETRIC else cls.rep
            if img.op_id in seen:
                continue
            seen.add(img.op_id)
            if img.in_colours == tuple(word):
                count += 1
        return count

    def __repr__(self):
        return "OperadData(%s, mode=%s, arity_cap=%d, weight_cap=%d)" % (
            self.name, self.mode, self.arity_cap, self.weight_cap)


# -- word symmetry ---------------------------------------------------------------


def aut_order_word(d: OperadData, m: Monomial) -> int:
    """Order of the automorphism group of a word of iso-classes.

    Symmetric mode: product of factor aut orders times the factorial of each
    class multiplicity; ordered modes have rigid words.
    """
    if m.mode != d.mode:
        raise ModeMismatch("monomial mode %r in %s operad" % (m.mode, d.mode))
    if d.mode != SYMMETRIC:
        return 1
    total = 1
    mult = {}
    for s in m.factors:
        total *= s.aut_order
        mult[s.class_id] = mult.get(s.class_id, 0) + 1
    for q in mult.values():
        total *= factorial(q)
    return total


def colour_word_aut(d: OperadData, word) -> int:
    """|Aut(w)| for a colour word w in the ambient monoidal base."""
    if d.mode != SYMMETRIC:
        return 1
    mult = {}
    for c in word:
        mult[c] = mult.get(c, 0) + 1
    out = 1
    for q in mult.values():
        out *= factorial(q)
    return out


def canonical_colour_word(d: OperadData, word):
    """Representative of the iso-class of a colour word in the base."""
    if d.mode == SYMMETRIC:
        return tuple(sorted(word, key=str))
    return tuple(word)


# -- two-level classes (the factorization engine) -------------------------------


@dataclass(frozen=True)
class TwoLevelClass:
    """Iso-class of a two-level composite (b; a_1..a_k).

    stab_order is |Stab(t)| inside Stab(b) x prod S_{m_i}; kernel_order
    counts stabilizer elements whose induced block permutation of the
    composite's inputs is the identity.  The factorization groupoid of any
    r ~ composite receives [Aut(r) : image] connected components from this
    class, each with automorphism group of order kernel_order.
    """

    outer: IsoClass
    inner: tuple
    inner_mon: Monomial
    composite: IsoClass
    stab_order: int
    kernel_order: int

    @property
    def key(self):
        return (self.outer.class_id,) + tuple(c.class_id for c in self.inner)


def _stab_and_kernel(d: OperadData, bcls: IsoClass, assign):
    """|Stab(t)| and |ker(block-perm)| for t = (rep(b); class reps).

    Since every slot carries its class representative, the h_i fixing slot i
    after sigma are exactly the class stabilizer whenever the slot classes
    match, so |Stab(t)| = #(class-preserving sigma in Stab(b)) * prod |Aut a_i|.
    The block permutation is the identity iff sigma fixes every slot of
    positive arity pointwise and all h_i there are identities, so the kernel
    counts class-preserving sigma that only permute nullary slots.
    """
    if d.mode != SYMMETRIC:
        return 1, 1
    k = len(assign)
    ids = tuple(c.class_id for c in assign)
    ms = tuple(c.arity for c in assign)
    n_sigma = 0
    kernel = 0
    for sigma in bcls.stab:
        if any(ids[sigma[i]] != ids[i] for i in range(k)):
            continue
        n_sigma += 1
        if all(sigma[i] == i for i in range(k) if ms[i] > 0):
            kernel += 1
    prod_aut = 1
    for c in assign:
        prod_aut *= c.aut_order
    return n_sigma * prod_aut, kernel


def two_level_classes(d: OperadData):
    """All iso-classes of two-level composites within the window, cached."""
    if "two_level" in d._cache:
        return d._cache["two_level"]
    records = []
    for bcls in d.classes():
        b = bcls.rep
        k = b.arity
        budget = d.weight_cap - bcls.weight
        if budget < 0:
            continue
        slot_choices = []
        for colour in b.in_colours:
            cands = [c for c in d.classes_by_out(colour) if c.weight <= budget]
            if not cands:
                slot_choices = None
                break
            slot_choices.append(cands)
        if slot_choices is None:
            continue

        assignments = []

        def fill(i, used, acc):
            if i == k:
                assignments.append(tuple(acc))
                return
            for c in slot_choices[i]:
                if used + c.weight > budget:
                    continue
                acc.append(c)
                fill(i + 1, used + c.weight, acc)
                acc.pop()

        fill(0, 0, [])
        seen_canon = set()
        for assign in assignments:
            ids = tuple(c.class_id for c in assign)
            canon = min(tuple(ids[s[i]] for i in range(k)) for s in bcls.stab)
            if ids != canon or canon in seen_canon:
                continue
            seen_canon.add(canon)
            reps = tuple(c.rep for c in assign)
            stab, kernel = _stab_and_kernel(d, bcls, assign)
            comp = d.compose(b, reps)
            ccls = d.classify(comp)
            mon = d.monomial(c.symbol for c in assign)
            records.append(TwoLevelClass(bcls, assign, mon, ccls, stab, kernel))
    records = tuple(sorted(
        records, key=lambda r: (r.composite.class_id, r.key)))
    d._cache["two_level"] = records
    return records


def two_level_by_composite(d: OperadData):
    if "two_level_by_comp" not in d._cache:
        table = {}
        for rec in two_level_classes(d):
            table.setdefault(rec.composite.class_id, []).append(rec)
        d._cache["two_level_by_comp"] = {k: tuple(v) for k, v in table.items()}
    return d._cache["two_level_by_comp"]


# -- explicit factorization groupoid ----------------------------------------------


def factorization_groupoid(d: OperadData, r: Operation):
    """The homotopy fiber of composition over r, as an explicit groupoid.

    Objects are triples (b, (a_1..a_k), g) with compose(b; a).g == r (modes
    without actions drop g and require equality on the nose); morphisms are
    pairs (sigma, (h_i)) acting by the operad actions, with g transported by
    the inverse block permutation.  Materializes every object, so intended
    for small arities; delta computations use the class-level engine instead.

    Returns (groupoid, inner_word_map, outer_map): the labelling maps send an
    object to the monomial of its inner word and the iso-class of its outer
    operation.
    """
    if d.weight(r) > d.weight_cap:
        raise WindowExceeded("operation %s outside window" % r.op_id)
    n = r.arity
    sym = d.mode == SYMMETRIC
    objects = []
    target_weight = d.weight(r)
    for k in range(d.arity_cap + 1):
        for b in d.ops(k):
            wb = d.weight(b)
            if wb > target_weight:
                continue
            pools = []
            for colour in b.in_colours:
                pool = [a for a in _ops_by_out(d, colour)
                        if d.weight(a) <= target_weight - wb]
                pools.append(pool)

            def fill(i, wacc, aacc, nacc):
                if wacc > target_weight - wb or nacc > n:
                    return
                if i == k:
                    if wacc != target_weight - wb or nacc != n:
                        return
                    inners = tuple(aacc)
                    comp = d.compose(b, inners)
                    if sym:
                        for g in perms.all_perms(n):
                            if d.act(comp, g) == r:
                                objects.append((b, inners, g))
                    else:
                        if comp == r:
                            objects.append((b, inners, perms.identity(n)))
                    return
                for a in pools[i]:
                    aacc.append(a)
                    fill(i + 1, wacc + d.weight(a), aacc, nacc + a.arity)
                    aacc.pop()

            fill(0, 0, [], 0)

    hom = {}
    inner_map = {}
    outer_map = {}
    for obj in objects:
        b, inners, g = obj
        k = b.arity
        ms = tuple(a.arity for a in inners)
        inner_map[obj] = d.monomial(d.classify(a).symbol for a in inners)
        outer_map[obj] = d.classify(b)
        sigmas = perms.all_perms(k) if sym else (perms.identity(k),)
        for sigma in sigmas:
            hss = iproduct(*[perms.all_perms(ms[sigma[i]]) for i in range(k)]) \
                if sym else ((perms.identity(m) for m in ms),)
            for hs in hss:
                hs = tuple(hs)
                b2 = d.act(b, sigma) if sym else b
                inners2 = tuple(d.act(inners[sigma[i]], hs[i]) if sym
                                else inners[i] for i in range(k))
                blk = perms.block_perm(sigma, hs, ms)
                g2 = perms.pcomp(perms.pinv(blk), g)
                tgt = (b2, inners2, g2)
                hom.setdefault((obj, tgt), []).append((sigma, hs))

    def compose(f2, f1):
        (s1, h1), (s2, h2) = f1[2], f2[2]
        sigma = perms.pcomp(s1, s2)
        hs = tuple(perms.pcomp(h1[s2[i]], h2[i]) for i in range(len(s2)))
        return (sigma, hs)

    def ident(obj):
        b, inners, _ = obj
        return (perms.identity(b.arity),
                tuple(perms.identity(a.arity) for a in inners))

    gpd = FinGroupoid(tuple(objects), {k_: tuple(v) for k_, v in hom.items()},
                      compose, ident, name="factorizations(%s)" % r.op_id)
    return gpd, inner_map, outer_map


def _ops_by_out(d: OperadData, colour):
    key = ("rawbyout", colour)
    if key not in d._cache:
        d._cache[key] = tuple(op for op in d.all_ops() if op.out_colour == colour)
    return d._cache[key]


# -- validation --------------------------------------------------------------------


@dataclass
class ValidationReport:
    operad: str
    checks: int = 0
    unit_failures: list = field(default_factory=list)
    assoc_failures: list = field(default_factory=list)
    equivariance_failures: list = field(default_factory=list)
    action_failures: list = field(default_factory=list)

    @property
    def ok(self):
        return not (self.unit_failures or self.assoc_failures
                    or self.equivariance_failures or self.action_failures)

    def all_failures(self):
        return (self.unit_failures + self.assoc_failures
                + self.equivariance_failures + self.action_failures)

    def to_json_obj(self):
        return {
            "operad": self.operad,
            "checks": self.checks,
            "ok": self.ok,
            "unit_failures": self.unit_failures,
            "assoc_failures": self.assoc_failures,
            "equivariance_failures": self.equivariance_failures,
            "action_failures": self.action_failures,
        }

    def summary(self):
        if self.ok:
            return "validate %s: %d checks, clean" % (self.operad, self.checks)
        return "validate %s: %d checks, %d failures" % (
            self.operad, self.checks, len(self.all_failures()))


def validate_operad(d: OperadData, weight_cap=None, assoc_weight_cap=None,
                    equiv_weight_cap=None) -> ValidationReport:
    """Check operad axioms exhaustively on a sub-window.

    All loops are bounded by weight_cap (default: the full table window);
    associativity and equivariance may be bounded further since their raw
    enumerations grow fastest.  Equivariance (symmetric mode) is checked on
    group generators.  Violations are reported, never raised.
    """
    rep = ValidationReport(d.name)
    wcap = d.weight_cap if weight_cap is None else min(weight_cap, d.weight_cap)
    acap = wcap if assoc_weight_cap is None else min(assoc_weight_cap, wcap)
    ecap = wcap if equiv_weight_cap is None else min(equiv_weight_cap, wcap)

    def windowed_ops():
        for op in d.all_ops():
            if d.weight(op) <= wcap:
                yield op

    # unit laws
    for op in windowed_ops():
        rep.checks += 1
        u = d.unit(op.out_colour)
        if d.compose(u, (op,)) != op:
            rep.unit_failures.append("unit o %s != %s" % (op.op_id, op.op_id))
        ins = tuple(d.unit(c) for c in op.in_colours)
        if d.compose(op, ins) != op:
            rep.unit_failures.append("%s o units != %s" % (op.op_id, op.op_id))

    # enumerate two-level composites up to a weight bound
    def two_level_raw(bound):
        for k in range(d.arity_cap + 1):
            for b in d.ops(k):
                wb = d.weight(b)
                if wb > bound:
                    continue
                pools = [[a for a in _ops_by_out(d, c)
                          if d.weight(a) <= bound - wb]
                         for c in b.in_colours]
                if any(not p for p in pools):
                    continue

                def fill(i, w, acc):
                    if i == k:
                        yield tuple(acc)
                        return
                    for a in pools[i]:
                        if w + d.weight(a) <= bound - wb:
                            acc.append(a)
                            yield from fill(i + 1, w + d.weight(a), acc)
                            acc.pop()

                for inners in fill(0, 0, []):
                    yield b, inners

    # associativity: (b o a) o c == b o (a_i o c_i)
    for b, inners in two_level_raw(acap):
        wb = d.weight(b) + sum(d.weight(a) for a in inners)
        comp1 = d.compose(b, inners)
        pools = [[x for x in _ops_by_out(d, c) if d.weight(x) <= acap - wb]
                 for a in inners for c in a.in_colours]
        slots = [a.arity for a in inners]

        def fill(i, w, acc):
            if i == len(pools):
                yield tuple(acc)
                return
            for x in pools[i]:
                if w + d.weight(x) <= acap - wb:
                    acc.append(x)
                    yield from fill(i + 1, w + d.weight(x), acc)
                    acc.pop()

        for flat in fill(0, 0, []):
            rep.checks += 1
            lhs = d.compose(comp1, flat)
            nested = []
            pos = 0
            for a, m in zip(inners, slots):
                nested.append(d.compose(a, flat[pos:pos + m]))
                pos += m
            rhs = d.compose(b, tuple(nested))
            if lhs != rhs:
                rep.assoc_failures.append(
                    "assoc fails: %s o (%s) o (%s): %s != %s" % (
                        b.op_id, ",".join(a.op_id for a in inners),
                        ",".join(x.op_id for x in flat),
                        lhs.op_id, rhs.op_id))

    # equivariance and action axioms (symmetric mode)
    if d.mode == SYMMETRIC:
        for op in windowed_ops():
            n = op.arity
            rep.checks += 1
            if d.act(op, perms.identity(n)) != op:
                rep.action_failures.append(
                    "act(%s, id) != %s" % (op.op_id, op.op_id))
            gens = perms.transpositions(n)
            for p in gens:
                img = d.act(op, p)
                if img.arity != n or img not in d.ops(n):
                    rep.action_failures.append(
                        "orbit of %s leaves the table" % op.op_id)
                for q in gens:
                    rep.checks += 1
                    if d.act(d.act(op, p), q) != d.act(op, perms.pcomp(p, q)):
                        rep.action_failures.append(
                            "action not associative at %s" % op.op_id)
        for b, inners in two_level_raw(ecap):
            k = b.arity
            ms = tuple(a.arity for a in inners)
            comp = d.compose(b, inners)
            moves = [(s, tuple(perms.identity(ms[s[i]]) for i in range(k)))
                     for s in perms.transpositions(k)]
            for i in range(k):
                for h in perms.transpositions(ms[i]):
                    hs = tuple(h if j == i else perms.identity(ms[j])
                               for j in range(k))
                    moves.append((perms.identity(k), hs))
            for sigma, hs in moves:
                rep.checks += 1
                lhs = d.compose(
                    d.act(b, sigma),
                    tuple(d.act(inners[sigma[i]], hs[i]) for i in range(k)))
                rhs = d.act(comp, perms.block_perm(sigma, hs, ms))
                if lhs != rhs:
                    rep.equivariance_failures.append(
                        "equivariance fails at %s o (%s), sigma=%r" % (
                            b.op_id, ",".join(a.op_id for a in inners), sigma))
    return rep


# -- local finiteness -----------------------------------------------------------------


@dataclass
class LocalFinitenessReport:
    operad: str
    component_counts: dict
    warnings: list

    @property
    def ok(self):
        return not self.warnings

    def to_json_obj(self):
        return {
            "operad": self.operad,
            "component_counts": dict(sorted(self.component_counts.items())),
            "warnings": self.warnings,
        }


def local_finiteness_report(d: OperadData) -> LocalFinitenessReport:
    """Factorization-component counts per class, plus the structural hazard
    flag for nullary operations subject to relations (table-provided
    nullaries): finiteness beyond the window is then not certified."""
    counts = {}
    for cls in d.classes():
        total = 0
        for rec in two_level_by_composite(d).get(cls.class_id, ()):
            total += (cls.aut_order * rec.kernel_order) // rec.stab_order
        counts[cls.class_id] = total
    warnings = []
    has_nullary = any(d.ops(0))
    if has_nullary and d.nullary_source == "table":
        warnings.append(
            "nullary operations present with non-free relations: "
            "local finiteness beyond the window is not certified")
    return LocalFinitenessReport(d.name, counts, warnings)


# -- convenience wrappers matching the operation-level surface ---------------------


def iso_classify(d: OperadData, r: Operation) -> IsoClass:
    return d.classify(r)


def enumerate_classes(d: OperadData):
    return d.classes()
