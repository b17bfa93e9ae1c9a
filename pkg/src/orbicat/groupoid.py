"""Finite groupoids with exhaustive validation, orbits, isotropy, skeletons.

All identifiers are opaque strings; every operation breaks ties by least
identifier so outputs are deterministic across runs.  Values are immutable
after validation.
"""

import numpy as np

from .groups import AbstractGroup


class GroupoidError(ValueError):
    pass


class FiniteGroupoid:
    """Explicit object set, arrow set and composition structure.

    `compose[(a, b)]` is the arrow a∘b, defined exactly when
    target(b) == source(a); source(a∘b) = source(b), target(a∘b) = target(a).
    Use :func:`validate_groupoid` to construct one from raw data.
    """

    def __init__(self, objects, arrows, source, target, unit, inverse, compose,
                 name="G"):
        self.name = name
        self.objects = tuple(objects)
        self.arrows = tuple(arrows)
        self.source = dict(source)
        self.target = dict(target)
        self.unit = dict(unit)
        self.inverse = dict(inverse)
        self.compose_map = dict(compose)
        self._out = {x: [] for x in self.objects}
        self._in = {x: [] for x in self.objects}
        for a in self.arrows:
            self._out[self.source[a]].append(a)
            self._in[self.target[a]].append(a)
        for x in self.objects:
            self._out[x].sort()
            self._in[x].sort()

    def __repr__(self):
        return "FiniteGroupoid(%s: %d objects, %d arrows)" % (
            self.name, len(self.objects), len(self.arrows))

    def __eq__(self, other):
        """Same presentation content; object/arrow listing order is ignored."""
        if not isinstance(other, FiniteGroupoid):
            return NotImplemented
        return (set(self.objects) == set(other.objects)
                and set(self.arrows) == set(other.arrows)
                and self.source == other.source and self.target == other.target
                and self.unit == other.unit and self.inverse == other.inverse
                and self.compose_map == other.compose_map)

    def __hash__(self):
        return hash((frozenset(self.objects), frozenset(self.arrows)))

    def compose(self, a, b):
        """a∘b (first b, then a)."""
        try:
            return self.compose_map[(a, b)]
        except KeyError:
            raise GroupoidError("arrows not composable: %s after %s" % (a, b)) from None

    def out_arrows(self, x):
        return self._out[x]

    def in_arrows(self, x):
        return self._in[x]

    def hom(self, x, y):
        return [a for a in self._out[x] if self.target[a] == y]

    def loops(self, x=None):
        if x is not None:
            return self.hom(x, x)
        return sorted(a for a in self.arrows if self.source[a] == self.target[a])

    def is_unit(self, a):
        return self.unit.get(self.source[a]) == a and self.source[a] == self.target[a]


def validate_groupoid(objects, arrows, source, target, unit, inverse, compose,
                      name="G"):
    """Validate raw groupoid data exhaustively and return a FiniteGroupoid.

    Reports the first violated axiom with the offending arrows.  The full
    composition table is required; no closure is inferred.
    """
    objects = tuple(objects)
    arrows = tuple(arrows)
    if len(set(objects)) != len(objects):
        raise GroupoidError("duplicate object ids")
    if len(set(arrows)) != len(arrows):
        raise GroupoidError("duplicate arrow ids")
    obj_set, arr_set = set(objects), set(arrows)

    for a in arrows:
        if a not in source or a not in target:
            raise GroupoidError("arrow %s missing source or target" % a)
        if source[a] not in obj_set:
            raise GroupoidError("arrow %s has unknown source %s" % (a, source[a]))
        if target[a] not in obj_set:
            raise GroupoidError("arrow %s has unknown target %s" % (a, target[a]))
    for x in objects:
        u = unit.get(x)
        if u is None or u not in arr_set:
            raise GroupoidError("object %s has no unit arrow" % x)
        if source[u] != x or target[u] != x:
            raise GroupoidError("unit of %s has endpoints %s -> %s"
                                % (x, source[u], target[u]))
    for a in arrows:
        b = inverse.get(a)
        if b is None or b not in arr_set:
            raise GroupoidError("missing inverse for arrow %s" % a)
        if source[b] != target[a] or target[b] != source[a]:
            raise GroupoidError("inverse of %s has mismatched endpoints" % a)

    # index everything for the table checks
    aidx = {a: i for i, a in enumerate(arrows)}
    n = len(arrows)
    src = np.array([objects.index(source[a]) for a in arrows], dtype=np.int64) \
        if n else np.zeros(0, dtype=np.int64)
    tgt = np.array([objects.index(target[a]) for a in arrows], dtype=np.int64) \
        if n else np.zeros(0, dtype=np.int64)
    comp = np.full((n, n), -1, dtype=np.int64)
    for (a, b), c in compose.items():
        if a not in arr_set or b not in arr_set:
            raise GroupoidError("composition entry on unknown arrows (%s, %s)" % (a, b))
        if c not in arr_set:
            raise GroupoidError("composition (%s, %s) gives unknown arrow %s" % (a, b, c))
        if target[b] != source[a]:
            raise GroupoidError("composition defined on non-composable pair (%s, %s)"
                                % (a, b))
        comp[aidx[a], aidx[b]] = aidx[c]

    # defined exactly on composable pairs, with the right endpoints
    composable = tgt[None, :] == src[:, None]       # composable[a, b]
    defined = comp >= 0
    if bool(np.any(composable & ~defined)):
        a, b = map(int, np.argwhere(composable & ~defined)[0])
        raise GroupoidError("missing composition for composable pair (%s, %s)"
                            % (arrows[a], arrows[b]))
    # (defined on non-composable pairs was rejected above)
    rows, cols = np.nonzero(defined)
    if rows.size:
        vals = comp[rows, cols]
        bad = src[vals] != src[cols]
        if bool(np.any(bad)):
            k = int(np.nonzero(bad)[0][0])
            raise GroupoidError("source of %s∘%s is wrong"
                                % (arrows[rows[k]], arrows[cols[k]]))
        bad = tgt[vals] != tgt[rows]
        if bool(np.any(bad)):
            k = int(np.nonzero(bad)[0][0])
            raise GroupoidError("target of %s∘%s is wrong"
                                % (arrows[rows[k]], arrows[cols[k]]))

    uvec = {x: aidx[unit[x]] for x in objects}
    for a in arrows:
        i = aidx[a]
        if comp[i, uvec[source[a]]] != i:
            raise GroupoidError("unit law fails: %s∘%s != %s"
                                % (a, unit[source[a]], a))
        if comp[uvec[target[a]], i] != i:
            raise GroupoidError("unit law fails: %s∘%s != %s"
                                % (unit[target[a]], a, a))
        j = aidx[inverse[a]]
        if comp[i, j] != uvec[target[a]]:
            raise GroupoidError("inverse law fails: %s∘%s is not the unit of %s"
                                % (a, inverse[a], target[a]))
        if comp[j, i] != uvec[source[a]]:
            raise GroupoidError("inverse law fails: %s∘%s is not the unit of %s"
                                % (inverse[a], a, source[a]))

    # associativity on all composable triples, vectorized per middle arrow
    for b in range(n):
        lefts = np.nonzero(defined[:, b])[0]     # a with a∘b defined
        rights = np.nonzero(defined[b, :])[0]    # c with b∘c defined
        if not lefts.size or not rights.size:
            continue
        ab = comp[lefts, b]
        bc = comp[b, rights]
        lhs = comp[np.ix_(ab, rights)]           # (a∘b)∘c
        rhs = comp[np.ix_(lefts, bc)]            # a∘(b∘c)
        if bool(np.any(lhs != rhs)):
            i, k = map(int, np.argwhere(lhs != rhs)[0])
            raise GroupoidError(
                "non-associative triple (%s, %s, %s)"
                % (arrows[lefts[i]], arrows[b], arrows[rights[k]]))

    return FiniteGroupoid(objects, arrows, source, target, unit, inverse,
                          compose, name=name)


def orbits(g):
    """Partition of the objects; x, y share a block iff some arrow x -> y exists.

    Blocks are sorted tuples, ordered by least member.
    """
    parent = {x: x for x in g.objects}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in g.arrows:
        rx, ry = find(g.source[a]), find(g.target[a])
        if rx != ry:
            if ry < rx:
                rx, ry = ry, rx
            parent[ry] = rx
    blocks = {}
    for x in g.objects:
        blocks.setdefault(find(x), []).append(x)
    return [tuple(sorted(v)) for v in sorted(blocks.values(), key=min)]


def isotropy(g, x):
    """The group of arrows x -> x under composition, with its Cayley table."""
    if x not in set(g.objects):
        raise GroupoidError("unknown object %r" % (x,))
    elems = sorted(g.hom(x, x))
    pos = {a: i for i, a in enumerate(elems)}
    table = [[pos[g.compose(a, b)] for b in elems] for a in elems]
    return AbstractGroup(elems, table, name="%s_%s" % (g.name, x))


class SkeletonRecord:
    """One orbit: id, representative object, members, isotropy group."""

    def __init__(self, orbit_id, representative, members, group):
        self.orbit_id = orbit_id
        self.representative = representative
        self.members = tuple(members)
        self.group = group

    def __repr__(self):
        return "SkeletonRecord(%s at %s, |K|=%d)" % (
            self.orbit_id, self.representative, len(self.group))


class Skeleton:
    def __init__(self, records):
        self.records = tuple(records)

    def __iter__(self):
        return iter(self.records)

    def __len__(self):
        return len(self.records)

    def isotropy_orders(self):
        return tuple(len(r.group) for r in self.records)


def skeleton(g):
    """One record per orbit, isotropy computed at the least representative."""
    records = []
    for block in orbits(g):
        rep = block[0]
        records.append(SkeletonRecord(rep, rep, block, isotropy(g, rep)))
    return Skeleton(records)


def conjugation_isomorphism(g, arrow):
    """The isomorphism isotropy(source) -> isotropy(target) given by k -> a∘k∘a⁻¹."""
    x, y = g.source[arrow], g.target[arrow]
    ainv = g.inverse[arrow]
    return {k: g.compose(g.compose(arrow, k), ainv) for k in g.hom(x, x)}


class Functor:
    """A morphism of groupoids: total object and arrow maps."""

    def __init__(self, domain, codomain, object_map, arrow_map, name="F"):
        self.domain = domain
        self.codomain = codomain
        self.object_map = dict(object_map)
        self.arrow_map = dict(arrow_map)
        self.name = name

    def on_object(self, x):
        return self.object_map[x]

    def on_arrow(self, a):
        return self.arrow_map[a]

    def __repr__(self):
        return "Functor(%s: %s -> %s)" % (self.name, self.domain.name,
                                          self.codomain.name)


def check_functor(domain, codomain, object_map, arrow_map, name="F"):
    """Validate preservation of endpoints, units and composition."""
    for x in domain.objects:
        if x not in object_map:
            raise GroupoidError("object map not total: missing %s" % x)
        if object_map[x] not in set(codomain.objects):
            raise GroupoidError("object map sends %s outside the codomain" % x)
    for a in domain.arrows:
        if a not in arrow_map:
            raise GroupoidError("arrow map not total: missing %s" % a)
        fa = arrow_map[a]
        if fa not in set(codomain.arrows):
            raise GroupoidError("arrow map sends %s outside the codomain" % a)
        if codomain.source[fa] != object_map[domain.source[a]] or \
                codomain.target[fa] != object_map[domain.target[a]]:
            raise GroupoidError("endpoint mismatch at arrow %s" % a)
    for x in domain.objects:
        if arrow_map[domain.unit[x]] != codomain.unit[object_map[x]]:
            raise GroupoidError("unit of %s is not preserved" % x)
    for (a, b), c in domain.compose_map.items():
        if codomain.compose(arrow_map[a], arrow_map[b]) != arrow_map[c]:
            raise GroupoidError("composition not preserved on pair (%s, %s)" % (a, b))
    return Functor(domain, codomain, object_map, arrow_map, name=name)


def identity_functor(g):
    return Functor(g, g, {x: x for x in g.objects}, {a: a for a in g.arrows},
                   name="id_%s" % g.name)


def compose_functors(f, g):
    """f after g."""
    if g.codomain is not f.domain and g.codomain != f.domain:
        raise GroupoidError("functors not composable")
    return Functor(g.domain, f.codomain,
                   {x: f.object_map[y] for x, y in g.object_map.items()},
                   {a: f.arrow_map[b] for a, b in g.arrow_map.items()},
                   name="%s.%s" % (f.name, g.name))


class NaturalTransformation:
    """Components T(x): phi(x) -> psi(x) satisfying psi(h)∘T(x) = T(y)∘phi(h)."""

    def __init__(self, phi, psi, component):
        self.phi = phi
        self.psi = psi
        self.component = dict(component)

    def __repr__(self):
        return "NaturalTransformation(%s => %s)" % (self.phi.name, self.psi.name)


def check_natural(phi, psi, component):
    if phi.domain != psi.domain or phi.codomain != psi.codomain:
        raise GroupoidError("functors are not parallel")
    cod = phi.codomain
    for x in phi.domain.objects:
        t = component.get(x)
        if t is None:
            raise GroupoidError("component missing at object %s" % x)
        if cod.source[t] != phi.object_map[x] or cod.target[t] != psi.object_map[x]:
            raise GroupoidError("component at %s has wrong endpoints" % x)
    for h in phi.domain.arrows:
        x, y = phi.domain.source[h], phi.domain.target[h]
        lhs = cod.compose(psi.arrow_map[h], component[x])
        rhs = cod.compose(component[y], phi.arrow_map[h])
        if lhs != rhs:
            raise GroupoidError("naturality square fails at arrow %s" % h)
    return NaturalTransformation(phi, psi, component)
