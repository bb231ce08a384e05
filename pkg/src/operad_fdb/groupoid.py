"""Explicit finite groupoids and their homotopy invariants.

A FinGroupoid stores its objects, hom-sets of opaque morphism labels, and a
composition rule.  Everything downstream reduces to three quantities: the
partition into connected components, automorphism group orders, and the
homotopy cardinality  ||X|| = sum over pi_0(X) of 1/|Aut(x)|.

Morphisms are handled as triples (src, tgt, label).  compose(f2, f1) takes
f1: x -> y and f2: y -> z to a morphism x -> z, matching the usual right-to-
left reading.
"""
from __future__ import annotations

from fractions import Fraction

from .errors import NotAnAction, UnknownObject


class FinGroupoid:
    def __init__(self, objects, hom, compose, identity, name=""):
        """objects: iterable of hashables; hom: dict (x, y) -> iterable of
        labels; compose: callable on morphism triples; identity: x -> label."""
        self.objects = tuple(objects)
        self._index = {x: i for i, x in enumerate(self.objects)}
        if len(self._index) != len(self.objects):
            raise ValueError("duplicate objects")
        self._hom = {}
        for (x, y), labels in hom.items():
            labels = tuple(labels)
            if labels:
                self._hom[(x, y)] = labels
        self._compose = compose
        self._identity = identity
        self.name = name
        self._components = None
        self._inverse_cache = {}

    # -- basic structure ---------------------------------------------------

    def hom(self, x, y):
        return self._hom.get((x, y), ())

    def mors(self, x, y):
        return tuple((x, y, l) for l in self.hom(x, y))

    def all_mors(self):
        for (x, y), labels in self._hom.items():
            for l in labels:
                yield (x, y, l)

    def n_morphisms(self):
        return sum(len(v) for v in self._hom.values())

    def identity_mor(self, x):
        if x not in self._index:
            raise UnknownObject(repr(x))
        return (x, x, self._identity(x))

    def compose_mor(self, f2, f1):
        """f1: x -> y, f2: y -> z  |->  x -> z."""
        if f1[1] != f2[0]:
            raise ValueError("morphisms not composable")
        return (f1[0], f2[1], self._compose(f2, f1))

    def inverse(self, f):
        if f in self._inverse_cache:
            return self._inverse_cache[f]
        x, y, _ = f
        idx = self.identity_mor(x)
        idy = self.identity_mor(y)
        for g in self.mors(y, x):
            if self.compose_mor(g, f) == idx and self.compose_mor(f, g) == idy:
                self._inverse_cache[f] = g
                return g
        raise ValueError("morphism has no inverse: %r" % (f,))

    # -- invariants ----------------------------------------------------------

    def components(self):
        """Partition of objects; deterministic, ordered by least object index."""
        if self._components is not None:
            return self._components
        parent = list(range(len(self.objects)))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for (x, y) in self._hom:
            a, b = find(self._index[x]), find(self._index[y])
            if a != b:
                parent[max(a, b)] = min(a, b)
        groups = {}
        for i, x in enumerate(self.objects):
            groups.setdefault(find(i), []).append(x)
        self._components = [tuple(groups[r]) for r in sorted(groups)]
        return self._components

    def component_reps(self):
        return [comp[0] for comp in self.components()]

    def component_of(self, x):
        if x not in self._index:
            raise UnknownObject(repr(x))
        for comp in self.components():
            if x in comp:
                return comp
        raise UnknownObject(repr(x))

    def aut_order(self, x):
        if x not in self._index:
            raise UnknownObject(repr(x))
        return len(self.hom(x, x))

    def cardinality(self) -> Fraction:
        """Homotopy cardinality: sum over components of 1/|Aut(rep)|."""
        total = Fraction(0)
        for comp in self.components():
            total += Fraction(1, self.aut_order(comp[0]))
        return total

    def cardinality_by(self, key):
        """Cardinality vector grouped by key(component representative)."""
        out = {}
        for comp in self.components():
            k = key(comp[0])
            out[k] = out.get(k, Fraction(0)) + Fraction(1, self.aut_order(comp[0]))
        return out

    # -- validation ----------------------------------------------------------

    def check(self, assoc_limit=200_000):
        """Validate the groupoid axioms exhaustively.

        Associativity is checked on all composable triples unless their count
        exceeds assoc_limit.  Returns self so constructions can be chained.
        """
        for x in self.objects:
            idx = self.identity_mor(x)
            if idx[2] not in self.hom(x, x):
                raise ValueError("identity of %r missing from hom" % (x,))
        mors = list(self.all_mors())
        by_src = {}
        for f in mors:
            by_src.setdefault(f[0], []).append(f)
        # closure and unit laws
        for f in mors:
            x, y, _ = f
            if self.compose_mor(f, self.identity_mor(x)) != f:
                raise ValueError("right unit law fails at %r" % (f,))
            if self.compose_mor(self.identity_mor(y), f) != f:
                raise ValueError("left unit law fails at %r" % (f,))
            for g in by_src.get(y, ()):
                h = self.compose_mor(g, f)
                if h[2] not in self.hom(h[0], h[1]):
                    raise ValueError("composition not closed at %r ; %r" % (f, g))
        # inverses
        for f in mors:
            self.inverse(f)
        # associativity
        count = 0
        for f in mors:
            for g in by_src.get(f[1], ()):
                gf = self.compose_mor(g, f)
                for h in by_src.get(g[1], ()):
                    count += 1
                    if count > assoc_limit:
                        return self
                    if self.compose_mor(h, gf) != self.compose_mor(
                            self.compose_mor(h, g), f):
                        raise ValueError(
                            "associativity fails at %r ; %r ; %r" % (f, g, h))
        return self

    # -- serialization ---------------------------------------------------------

    def debug_json(self):
        comps = self.components()
        return {
            "name": self.name,
            "objects": [repr(x) for x in self.objects],
            "hom_sizes": {
                "%d,%d" % (self._index[x], self._index[y]): len(labels)
                for (x, y), labels in sorted(
                    self._hom.items(),
                    key=lambda kv: (self._index[kv[0][0]], self._index[kv[0][1]]))
            },
            "components": [
                {"representative": repr(comp[0]),
                 "size": len(comp),
                 "aut_order": self.aut_order(comp[0])}
                for comp in comps
            ],
            "cardinality": str(self.cardinality()),
        }

    def __repr__(self):
        return "FinGroupoid(%s: %d objects, %d morphisms)" % (
            self.name or "?", len(self.objects), self.n_morphisms())


# -- constructors -------------------------------------------------------------


def discrete(objects):
    objects = tuple(objects)
    hom = {(x, x): ("id",) for x in objects}
    return FinGroupoid(objects, hom,
                       compose=lambda f2, f1: "id",
                       identity=lambda x: "id",
                       name="discrete")


def one_object_group(elements, mul, e, name="BG"):
    """Groupoid with a single object * and Hom(*,*) the given group."""
    hom = {("*", "*"): tuple(elements)}
    return FinGroupoid(("*",), hom,
                       compose=lambda f2, f1: mul(f2[2], f1[2]),
                       identity=lambda x: e,
                       name=name)


def indiscrete_group_component(objects, elements, mul, e, name="comp"):
    """Connected groupoid on `objects` with vertex group the given group:
    Hom(x, y) = G for all pairs, composition by group multiplication."""
    objects = tuple(objects)
    hom = {(x, y): tuple(elements) for x in objects for y in objects}
    return FinGroupoid(objects, hom,
                       compose=lambda f2, f1: mul(f2[2], f1[2]),
                       identity=lambda x: e,
                       name=name)


def disjoint_union(*gs, name="sum"):
    objects = []
    hom = {}
    owner = {}
    for i, g in enumerate(gs):
        for x in g.objects:
            ox = (i, x)
            objects.append(ox)
            owner[ox] = g
        for (x, y), labels in g._hom.items():
            hom[((i, x), (i, y))] = labels

    def compose(f2, f1):
        g = owner[f1[0]]
        return g._compose((f2[0][1], f2[1][1], f2[2]), (f1[0][1], f1[1][1], f1[2]))

    def ident(ox):
        return owner[ox]._identity(ox[1])

    return FinGroupoid(tuple(objects), hom, compose, ident, name=name)


def action_groupoid(points, elements, mul, e, act, name="action", validate=True):
    """Action groupoid of a right action: objects the points, a morphism
    x -> act(x, g) labelled g for every group element g.

    ||action_groupoid(X, G)|| = |X| / |G| whenever act is a genuine action.
    """
    points = tuple(points)
    elements = tuple(elements)
    if validate:
        for x in points:
            if act(x, e) != x:
                raise NotAnAction("identity does not fix %r" % (x,))
            for g in elements:
                y = act(x, g)
                if y not in points:
                    raise NotAnAction("orbit leaves the point set at %r" % (y,))
                for h in elements:
                    if act(y, h) != act(x, mul(g, h)):
                        raise NotAnAction(
                            "act(act(x,g),h) != act(x, g*h) at x=%r" % (x,))
    hom = {}
    for x in points:
        for g in elements:
            hom.setdefault((x, act(x, g)), []).append(g)

    def compose(f2, f1):
        # f1: x -> x.g, f2: x.g -> (x.g).h ; composite is labelled g*h
        return mul(f1[2], f2[2])

    return FinGroupoid(points, {k: tuple(v) for k, v in hom.items()},
                       compose, identity=lambda x: e, name=name)


# -- functors ------------------------------------------------------------------


class GroupoidFunctor:
    """Object map plus morphism map; functoriality is checked on construction."""

    def __init__(self, dom: FinGroupoid, cod: FinGroupoid, omap, mmap,
                 check=True, check_limit=200_000):
        self.dom = dom
        self.cod = cod
        self._omap = dict(omap) if not callable(omap) else omap
        self._mmap = mmap
        if check:
            self._check(check_limit)

    def on_obj(self, x):
        if callable(self._omap):
            return self._omap(x)
        return self._omap[x]

    def on_mor(self, f):
        g = self._mmap(f)
        if g[0] != self.on_obj(f[0]) or g[1] != self.on_obj(f[1]):
            raise ValueError("morphism image has wrong endpoints: %r -> %r" % (f, g))
        return g

    def _check(self, limit):
        for x in self.dom.objects:
            fx = self.on_obj(x)
            if fx not in self.cod._index:
                raise ValueError("object image %r not in codomain" % (fx,))
            if self.on_mor(self.dom.identity_mor(x)) != self.cod.identity_mor(fx):
                raise ValueError("identities not preserved at %r" % (x,))
        count = 0
        by_src = {}
        for f in self.dom.all_mors():
            by_src.setdefault(f[0], []).append(f)
            g = self.on_mor(f)
            if g[2] not in self.cod.hom(g[0], g[1]):
                raise ValueError("morphism image %r not in codomain hom" % (g,))
        for f in list(self.dom.all_mors()):
            for g in by_src.get(f[1], ()):
                count += 1
                if count > limit:
                    return
                if self.on_mor(self.dom.compose_mor(g, f)) != \
                        self.cod.compose_mor(self.on_mor(g), self.on_mor(f)):
                    raise ValueError("composition not preserved at %r ; %r" % (f, g))


def homotopy_fiber(F: GroupoidFunctor, b) -> FinGroupoid:
    """Homotopy fiber of F: E -> B over the object b.

    Objects are pairs (e, beta) with beta: F(e) -> b in B; a morphism
    (e, beta) -> (e', beta') is phi: e -> e' with beta' o F(phi) == beta.
    """
    E, B = F.dom, F.cod
    if b not in B._index:
        raise UnknownObject(repr(b))
    objects = []
    for e in E.objects:
        for beta in B.mors(F.on_obj(e), b):
            objects.append((e, beta))
    hom = {}
    for (e, beta) in objects:
        for (e2, beta2) in objects:
            labels = []
            for phi in E.mors(e, e2):
                if B.compose_mor(beta2, F.on_mor(phi)) == beta:
                    labels.append(phi)
            if labels:
                hom[((e, beta), (e2, beta2))] = tuple(labels)

    def compose(f2, f1):
        return E.compose_mor(f2[2], f1[2])

    return FinGroupoid(tuple(objects), hom, compose,
                       identity=lambda o: E.identity_mor(o[0]),
                       name="fiber(%s over %r)" % (E.name, b))


def fiber_cardinality_vector(F: GroupoidFunctor):
    """Family cardinality of E -> B: entry at b is ||E_b|| / |Aut(b)|.

    Summed over pi_0(B) this recovers ||E|| (homotopy sum splitting).
    """
    out = {}
    for b in F.cod.component_reps():
        fib = homotopy_fiber(F, b)
        out[b] = fib.cardinality() / F.cod.aut_order(b)
    return out


def pullback(F: GroupoidFunctor, G: GroupoidFunctor) -> FinGroupoid:
    """Iso-comma pullback of F: X -> S and G: Y -> S.

    Objects are triples (x, y, sigma: F(x) -> G(y)); morphisms are pairs
    (phi, psi) with sigma' o F(phi) == G(psi) o sigma.
    """
    X, Y, S = F.dom, G.dom, F.cod
    if G.cod is not S and G.cod._hom != S._hom:
        raise ValueError("functors must share a codomain")
    objects = []
    for x in X.objects:
        for y in Y.objects:
            for sigma in S.mors(F.on_obj(x), G.on_obj(y)):
                objects.append((x, y, sigma))
    hom = {}
    for (x, y, sigma) in objects:
        for (x2, y2, sigma2) in objects:
            labels = []
            for phi in X.mors(x, x2):
                lhs = S.compose_mor(sigma2, F.on_mor(phi))
                for psi in Y.mors(y, y2):
                    if S.compose_mor(G.on_mor(psi), sigma) == lhs:
                        labels.append((phi, psi))
            if labels:
                hom[((x, y, sigma), (x2, y2, sigma2))] = tuple(labels)

    def _compose(f2, f1):
        (phi1, psi1), (phi2, psi2) = f1[2], f2[2]
        return (X.compose_mor(phi2, phi1), Y.compose_mor(psi2, psi1))

    return FinGroupoid(
        tuple(objects), hom, _compose,
        identity=lambda o: (X.identity_mor(o[0]), Y.identity_mor(o[1])),
        name="pullback")


def _part_cardinalities(gpd: FinGroupoid, key):
    """Cardinality of the full subgroupoid over each key value."""
    return gpd.cardinality_by(key)


def split_check(F: GroupoidFunctor, G: GroupoidFunctor) -> bool:
    """Check ||P over (cx, cy)|| == sum_s ||X_s over cx||.||Y_s over cy||/|Aut s|
    as vectors over pi_0(X) x pi_0(Y), for P the iso-comma pullback."""
    X, Y, S = F.dom, G.dom, F.cod
    xrep = {x: X.component_of(x)[0] for x in X.objects}
    yrep = {y: Y.component_of(y)[0] for y in Y.objects}
    P = pullback(F, G)
    lhs = P.cardinality_by(lambda o: (xrep[o[0]], yrep[o[1]]))
    rhs = {}
    for s in S.component_reps():
        fibX = homotopy_fiber(F, s)
        fibY = homotopy_fiber(G, s)
        cx = fibX.cardinality_by(lambda o: xrep[o[0]])
        cy = fibY.cardinality_by(lambda o: yrep[o[0]])
        auts = Fraction(S.aut_order(s))
        for kx, vx in cx.items():
            for ky, vy in cy.items():
                k = (kx, ky)
                rhs[k] = rhs.get(k, Fraction(0)) + vx * vy / auts
    lhs = {k: v for k, v in lhs.items() if v}
    rhs = {k: v for k, v in rhs.items() if v}
    return lhs == rhs
