"""Built-in operad constructors, each emitting a validated-ready OperadData.

All builders generate their tables structurally within the window:

  comm_plus          one colour, one n-ary operation per n >= 1, full symmetry
  multivariate       n-ary operations are (n+1)-tuples of colours
  free_operad        operations are planar trees over typed generators
  nonsym_semimonoid  nonsymmetric terminal reduced operad
  monoid_operad      identity ambient: a monoid as a one-object category
  pointed_module     pointed ambient: nullary module elements, unary monoid

Free-operad trees are slot-rigid: each node's inputs are named slots, so
tree isomorphisms cannot permute children and every tree class has trivial
automorphism group; the symmetry lives entirely in leaf relabelling.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from . import perms
from .algebra import IDENTITY, NONSYMMETRIC, POINTED, SYMMETRIC
from .errors import (EmptyColourSet, NotFiniteDecomposition, UnknownBuiltin,
                     UnknownOperation)
from .operad import IsoClass, Operation, OperadData


# -- Comm_+ --------------------------------------------------------------------------


def comm_plus(cap) -> OperadData:
    """Terminal reduced operad: a single n-ary operation A_n for 1 <= n <= cap."""
    if cap < 1:
        raise ValueError("cap must be >= 1")
    colour = "c"

    def make(n):
        return Operation("A_%d" % n, (colour,) * n, colour, ("comm", n))

    def ops_fn(n):
        return (make(n),) if 1 <= n <= cap else ()

    def compose_fn(b, inners):
        return make(sum(a.arity for a in inners))

    return OperadData(
        name="comm_plus",
        mode=SYMMETRIC,
        colours=(colour,),
        arity_cap=cap,
        weight_cap=cap - 1,
        ops_fn=ops_fn,
        compose_fn=compose_fn,
        unit_fn=lambda c: make(1),
        weight_fn=lambda op: op.arity - 1,
        act_fn=lambda op, p: op,
    )


# -- multivariate -----------------------------------------------------------------------


def multivariate(colours, cap) -> OperadData:
    """Operations of arity n are (n+1)-tuples of colours (inputs plus output);
    substitution concatenates input words, forgetting inner-edge colours."""
    colours = tuple(str(c) for c in colours)
    if not colours:
        raise EmptyColourSet("multivariate operad needs a nonempty colour set")
    if cap < 1:
        raise ValueError("cap must be >= 1")

    def make(ins, out):
        ins = tuple(ins)
        return Operation("A(%s|%s)" % (",".join(ins), out), ins, out, (ins, out))

    def ops_fn(n):
        if not 1 <= n <= cap:
            return ()
        out = []

        def fill(i, acc):
            if i == n:
                for o in colours:
                    out.append(make(tuple(acc), o))
                return
            for c in colours:
                acc.append(c)
                fill(i + 1, acc)
                acc.pop()

        fill(0, [])
        return tuple(out)

    def compose_fn(b, inners):
        ins = tuple(c for a in inners for c in a.in_colours)
        return make(ins, b.out_colour)

    def act_fn(op, p):
        return make(tuple(op.in_colours[p[i]] for i in range(op.arity)),
                    op.out_colour)

    return OperadData(
        name="multivariate%d" % len(colours),
        mode=SYMMETRIC,
        colours=colours,
        arity_cap=cap,
        weight_cap=cap - 1,
        ops_fn=ops_fn,
        compose_fn=compose_fn,
        unit_fn=lambda c: make((c,), c),
        weight_fn=lambda op: op.arity - 1,
        act_fn=act_fn,
    )


# -- free operads ------------------------------------------------------------------------


@dataclass(frozen=True)
class PTreeGenerator:
    """Typed generator of a free operad: named slots, colour-matched edges."""

    gen_id: str
    in_colours: tuple
    out_colour: object

    @property
    def arity(self):
        return len(self.in_colours)


# Tree payloads are nested tuples: ("L", label) leaves, ("N", gen_id,
# (children...)) nodes.  Class shapes are the same terms with labels erased.


def _tree_shape(t):
    if t[0] == "L":
        return ("L",)
    return ("N", t[1], tuple(_tree_shape(c) for c in t[2]))


def _shape_str(t):
    if t[0] == "L":
        return "*"
    kids = ",".join(_shape_str(c) for c in t[2])
    return "%s(%s)" % (t[1], kids) if kids else t[1]


def _tree_leaves(t):
    """Leaf labels in planar order."""
    if t[0] == "L":
        return [t[1]]
    out = []
    for c in t[2]:
        out.extend(_tree_leaves(c))
    return out


def _tree_nodes(t):
    if t[0] == "L":
        return 0
    return 1 + sum(_tree_nodes(c) for c in t[2])


def _tree_relabel(t, mapping):
    if t[0] == "L":
        return ("L", mapping[t[1]])
    return ("N", t[1], tuple(_tree_relabel(c, mapping) for c in t[2]))


def _tree_graft(t, subs):
    """Replace leaf labelled i by subs[i] (already carrying final labels)."""
    if t[0] == "L":
        return subs[t[1]]
    return ("N", t[1], tuple(_tree_graft(c, subs) for c in t[2]))


def _tree_leaf_colours(t, gen_by_id, out_colour):
    """Colour of each leaf position in planar order."""
    if t[0] == "L":
        return [out_colour]
    g = gen_by_id[t[1]]
    out = []
    for i, c in enumerate(t[2]):
        out.extend(_tree_leaf_colours(c, gen_by_id, g.in_colours[i]))
    return out


def free_operad(gens, cap, node_budget=None) -> OperadData:
    """Free operad on finitely many typed generators.

    Operations of arity n are trees with n bijectively labelled leaves.  With
    every generator of arity >= 2 the window is "at most cap leaves"; when
    nullary or unary generators are present the table is bounded by node
    count instead (node_budget, default cap) to keep every layer finite.
    """
    gens = tuple(gens)
    gen_by_id = {g.gen_id: g for g in gens}
    if len(gen_by_id) != len(gens):
        raise ValueError("duplicate generator ids")
    colours = tuple(sorted({g.out_colour for g in gens}
                           | {c for g in gens for c in g.in_colours})) or ("c",)
    size_mode = any(g.arity <= 1 for g in gens)
    if size_mode:
        wcap = cap if node_budget is None else node_budget
        weight_of_gen = {g.gen_id: 1 for g in gens}
        # a tree with w nodes has at most 1 + w*(max arity - 1) leaves
        arity_cap = 1 + wcap * max((g.arity - 1 for g in gens if g.arity > 1),
                                   default=0)
    else:
        wcap = cap - 1
        weight_of_gen = {g.gen_id: g.arity - 1 for g in gens}
        arity_cap = cap

    def tree_weight(t):
        if t[0] == "L":
            return 0
        return weight_of_gen[t[1]] + sum(tree_weight(c) for c in t[2])

    # enumerate shapes by (required output colour, weight budget)
    shape_memo = {}

    def shapes(colour, budget):
        key = (colour, budget)
        if key in shape_memo:
            return shape_memo[key]
        out = [("L",)]
        for g in gens:
            if g.out_colour != colour or weight_of_gen[g.gen_id] > budget:
                continue
            rest = budget - weight_of_gen[g.gen_id]

            def fill(i, left, acc):
                if i == g.arity:
                    out.append(("N", g.gen_id, tuple(acc)))
                    return
                for sub in shapes(g.in_colours[i], left):
                    w = tree_weight(sub)
                    if w <= left:
                        acc.append(sub)
                        fill(i + 1, left - w, acc)
                        acc.pop()

            fill(0, rest, [])
        shape_memo[key] = out
        return out

    def all_shapes():
        seen = {}
        for colour in colours:
            for s in shapes(colour, wcap):
                seen.setdefault((_shape_str(s), colour), s)
        return seen

    def label_planar(shape):
        """Identity labelling: leaf i in planar order gets label i."""
        counter = [0]

        def walk(t):
            if t[0] == "L":
                lbl = counter[0]
                counter[0] += 1
                return ("L", lbl)
            return ("N", t[1], tuple(walk(c) for c in t[2]))

        return walk(shape)

    def shape_out_colour(shape):
        # output colour is ambiguous for the bare leaf; handled by caller
        if shape[0] == "L":
            return None
        return gen_by_id[shape[1]].out_colour

    def make_op(payload, out_colour):
        leaves = _tree_leaves(payload)
        n = len(leaves)
        pos_colours = _tree_leaf_colours(payload, gen_by_id, out_colour)
        by_label = {lbl: pos_colours[i] for i, lbl in enumerate(leaves)}
        ins = tuple(by_label[i] for i in range(n))
        lab = ",".join(str(l) for l in leaves)
        op_id = "%s@%s[%s]" % (_shape_str(payload), out_colour, lab)
        return Operation(op_id, ins, out_colour, (payload, out_colour))

    def class_id_of(shape, colour):
        base = _shape_str(shape)
        return "%s@%s" % (base, colour) if len(colours) > 1 else base

    def classes_fn(d):
        out = []
        for (sstr, colour), shape in sorted(all_shapes().items()):
            rep = make_op(label_planar(shape), colour)
            n = rep.arity
            cid = class_id_of(shape, colour)
            out.append(IsoClass(cid, rep, factorial(n), 1, tree_weight(shape),
                                (perms.identity(n),)))
        return out

    def classify_fn(d, op):
        payload, colour = op.payload
        cid = class_id_of(_tree_shape(payload), colour)
        return d.class_by_id(cid)

    def ops_fn(n):
        out = []
        for (sstr, colour), shape in sorted(all_shapes().items()):
            rep = label_planar(shape)
            if len(_tree_leaves(rep)) != n:
                continue
            for p in perms.all_perms(n):
                out.append(make_op(_tree_relabel(rep, {i: p[i] for i in range(n)}),
                                   colour))
        return tuple(out)

    def act_fn(op, p):
        payload, colour = op.payload
        pin = perms.pinv(p)
        return make_op(_tree_relabel(payload, {l: pin[l] for l in _tree_leaves(payload)}),
                       colour)

    def compose_fn(b, inners):
        payload, colour = b.payload
        offs = [0]
        for a in inners:
            offs.append(offs[-1] + a.arity)
        subs = {}
        for i, a in enumerate(inners):
            apay, _ = a.payload
            subs[i] = _tree_relabel(apay, {l: offs[i] + l
                                           for l in _tree_leaves(apay)})
        return make_op(_tree_graft(payload, subs), colour)

    def in_word_count_fn(d, cls, word):
        word = tuple(word)
        if sorted(word, key=str) != sorted(cls.in_colours, key=str):
            return 0
        mult = {}
        for c in word:
            mult[c] = mult.get(c, 0) + 1
        out = 1
        for q in mult.values():
            out *= factorial(q)
        return out

    nullary_source = "free" if any(g.arity == 0 for g in gens) else "none"
    return OperadData(
        name="free(%s)" % ",".join(g.gen_id for g in gens),
        mode=SYMMETRIC,
        colours=colours,
        arity_cap=arity_cap,
        weight_cap=wcap,
        ops_fn=ops_fn,
        compose_fn=compose_fn,
        unit_fn=lambda c: make_op(("L", 0), c),
        weight_fn=lambda op: tree_weight(op.payload[0]),
        act_fn=act_fn,
        classes_fn=classes_fn,
        classify_fn=classify_fn,
        in_word_count_fn=in_word_count_fn,
        nullary_source=nullary_source,
    )


def free_binary(cap) -> OperadData:
    return free_operad((PTreeGenerator("b", ("c", "c"), "c"),), cap)


def free_binary_nullary(cap, node_budget=None) -> OperadData:
    return free_operad(
        (PTreeGenerator("b", ("c", "c"), "c"), PTreeGenerator("z", (), "c")),
        cap, node_budget=node_budget)


# -- nonsymmetric terminal reduced -------------------------------------------------------


def nonsym_semimonoid(cap) -> OperadData:
    """One n-ary operation per n >= 1, no symmetries: ordered-word bialgebra."""
    if cap < 1:
        raise ValueError("cap must be >= 1")
    colour = "c"

    def make(n):
        return Operation("A_%d" % n, (colour,) * n, colour, ("ns", n))

    return OperadData(
        name="nonsym_semimonoid",
        mode=NONSYMMETRIC,
        colours=(colour,),
        arity_cap=cap,
        weight_cap=cap - 1,
        ops_fn=lambda n: (make(n),) if 1 <= n <= cap else (),
        compose_fn=lambda b, inners: make(sum(a.arity for a in inners)),
        unit_fn=lambda c: make(1),
        weight_fn=lambda op: op.arity - 1,
    )


# -- identity ambient: monoids / categories -----------------------------------------------


def monoid_operad(elements, mul, cap=0, weight=None, unit=None,
                  name="monoid") -> OperadData:
    """A monoid as an identity-mode operad: elements are unary arrows.

    For a finite monoid, mul must be total (weight defaults to 0 and the
    window is trivial).  For a window into an infinite monoid, supply an
    additive weight; the table must contain every product of weight <= cap,
    else the finite-decomposition property cannot be certified.
    """
    elements = tuple(elements)
    colour = "x"
    if weight is None:
        weight = {e: 0 for e in elements}
    wmap = dict(weight) if not callable(weight) else {e: weight(e) for e in elements}

    table = {}
    for a in elements:
        for b in elements:
            if wmap[a] + wmap[b] <= cap:
                c = mul(a, b)
                if c not in set(elements):
                    raise NotFiniteDecomposition(
                        "product %r.%r = %r missing from the window table; "
                        "factorizations cannot be certified finite" % (a, b, c))
                if wmap[c] != wmap[a] + wmap[b]:
                    raise NotFiniteDecomposition(
                        "weight not additive on %r.%r" % (a, b))
                table[(a, b)] = c
    if unit is None:
        units = [e for e in elements
                 if all(table.get((e, x)) == x == table.get((x, e))
                        for x in elements if wmap[x] + wmap[e] <= cap)]
        if len(units) != 1:
            raise NotFiniteDecomposition(
                "could not infer a unique monoid unit; pass unit=")
        unit = units[0]

    def make(e):
        return Operation(str(e), (colour,), colour, ("el", e))

    def compose_fn(b, inners):
        # inner arrow applied first: composite of b after a is  a * b
        a = inners[0]
        return make(table[(a.payload[1], b.payload[1])])

    return OperadData(
        name=name,
        mode=IDENTITY,
        colours=(colour,),
        arity_cap=1,
        weight_cap=cap,
        ops_fn=lambda n: tuple(make(e) for e in elements
                               if wmap[e] <= cap) if n == 1 else (),
        compose_fn=compose_fn,
        unit_fn=lambda c: make(unit),
        weight_fn=lambda op: wmap[op.payload[1]],
    )


def nat_plus(cap) -> OperadData:
    """The additive monoid of naturals, truncated at cap."""
    return monoid_operad(range(cap + 1), lambda a, b: a + b, cap=cap,
                         weight=lambda e: e, unit=0, name="nat_plus")


# -- pointed ambient: monoid with a left module ----------------------------------------------


def pointed_module(monoid_elements, monoid_mul, module_elements, module_act,
                   unit=None, name="pointed") -> OperadData:
    """Pointed-mode operad: nullary operations the module elements, unary
    operations the monoid elements; composition x.m via the module action."""
    monoid_elements = tuple(monoid_elements)
    module_elements = tuple(module_elements)
    colour = "x"
    if unit is None:
        cands = [e for e in monoid_elements
                 if all(monoid_mul(e, x) == x == monoid_mul(x, e)
                        for x in monoid_elements)]
        if len(cands) != 1:
            raise UnknownOperation("could not infer monoid unit; pass unit=")
        unit = cands[0]
    for x in module_elements:
        if module_act(x, unit) != x:
            raise NotFiniteDecomposition("module unit law fails at %r" % (x,))
        for m in monoid_elements:
            if module_act(x, m) not in set(module_elements):
                raise NotFiniteDecomposition("module action leaves the set")
            for n in monoid_elements:
                if module_act(module_act(x, m), n) != \
                        module_act(x, monoid_mul(m, n)):
                    raise NotFiniteDecomposition(
                        "module action not associative at %r" % (x,))

    def make_e(x):
        return Operation("e:%s" % (x,), (), colour, ("E", x))

    def make_m(m):
        return Operation("m:%s" % (m,), (colour,), colour, ("M", m))

    def ops_fn(n):
        if n == 0:
            return tuple(make_e(x) for x in module_elements)
        if n == 1:
            return tuple(make_m(m) for m in monoid_elements)
        return ()

    def compose_fn(b, inners):
        if b.arity == 0:
            return b
        a = inners[0]
        m = b.payload[1]
        if a.payload[0] == "E":
            return make_e(module_act(a.payload[1], m))
        return make_m(monoid_mul(a.payload[1], m))

    return OperadData(
        name=name,
        mode=POINTED,
        colours=(colour,),
        arity_cap=1,
        weight_cap=0,
        ops_fn=ops_fn,
        compose_fn=compose_fn,
        unit_fn=lambda c: make_m(unit),
        weight_fn=lambda op: 0,
        nullary_source="pointed",
    )


def pointed_demo(cap=0) -> OperadData:
    """Three-element monoid Z/3 acting (trivially) on a two-element module."""
    return pointed_module(range(3), lambda a, b: (a + b) % 3,
                          ("u", "v"), lambda x, m: x, unit=0,
                          name="pointed_demo")


# -- registry -----------------------------------------------------------------------------


BUILTINS = {
    "comm_plus": comm_plus,
    "multivariate2": lambda cap: multivariate(("1", "2"), cap),
    "multivariate3": lambda cap: multivariate(("1", "2", "3"), cap),
    "free_binary": free_binary,
    "free_binary_nullary": free_binary_nullary,
    "nonsym_semimonoid": nonsym_semimonoid,
    "nat_plus": nat_plus,
    "pointed_demo": pointed_demo,
}


def builtin(name, cap) -> OperadData:
    try:
        factory = BUILTINS[name]
    except KeyError:
        raise UnknownBuiltin(
            "no builtin %r; available: %s" % (name, ", ".join(sorted(BUILTINS))))
    return factory(cap)
