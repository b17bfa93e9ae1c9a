"""Builders for the standard groupoids and derived groupoids.

Unit arrows of every constructed groupoid are named "id_<object>" so that
serialization round-trips through the .gpd format.
"""

from .groupoid import GroupoidError, check_functor, validate_groupoid
from .groups import GroupError


class GroupAction:
    """A left action of a finite group on a finite carrier set."""

    def __init__(self, group, carrier, act):
        self.group = group
        self.carrier = tuple(carrier)
        self.act = dict(act)          # (element name, point) -> point
        pts = set(self.carrier)
        for g in group.elements:
            for x in self.carrier:
                y = self.act.get((g, x))
                if y is None or y not in pts:
                    raise GroupError("action of %s undefined or ill-typed at %s" % (g, x))
        e = group.elements[group.identity]
        for x in self.carrier:
            if self.act[(e, x)] != x:
                raise GroupError("identity does not act trivially at %s" % x)
        for g in group.elements:
            for h in group.elements:
                gh = group.mul_named(g, h)
                for x in self.carrier:
                    if self.act[(g, self.act[(h, x)])] != self.act[(gh, x)]:
                        raise GroupError("action not compatible at (%s, %s, %s)" % (g, h, x))
        for g in group.elements:
            if len({self.act[(g, x)] for x in self.carrier}) != len(self.carrier):
                raise GroupError("element %s does not act by a permutation" % g)

    def apply(self, g, x):
        return self.act[(g, x)]

    def stabilizer(self, x):
        idx = [self.group.index(g) for g in self.group.elements
               if self.act[(g, x)] == x]
        return self.group.subgroup(idx, name="Stab(%s)" % x)

    def orbit(self, x):
        return tuple(sorted({self.act[(g, x)] for g in self.group.elements}))


def _build(objects, arrow_spec, compose_rule, name):
    """Assemble and validate a groupoid from arrows (id, src, tgt, inverse id)."""
    arrows, source, target, inverse = [], {}, {}, {}
    for aid, s, t, inv in arrow_spec:
        arrows.append(aid)
        source[aid], target[aid], inverse[aid] = s, t, inv
    unit = {x: "id_%s" % x for x in objects}
    compose = {}
    for a in arrows:
        for b in arrows:
            if target[b] == source[a]:
                compose[(a, b)] = compose_rule(a, b)
    return validate_groupoid(objects, arrows, source, target, unit, inverse,
                             compose, name=name)


def unit_groupoid(points, name=None):
    """All arrows are units."""
    points = tuple(points)
    if not points:
        raise GroupoidError("empty object set")
    spec = [("id_%s" % x, x, x, "id_%s" % x) for x in points]
    return _build(points, spec, lambda a, b: a,
                  name or "u(%d)" % len(points))


def pair_groupoid(points, name=None):
    """Exactly one arrow between any two objects."""
    points = tuple(points)
    if not points:
        raise GroupoidError("empty object set")

    def aid(x, y):
        return "id_%s" % x if x == y else "%s>%s" % (x, y)

    spec = [(aid(x, y), x, y, aid(y, x)) for x in points for y in points]
    src = {aid(x, y): (x, y) for x in points for y in points}

    def rule(a, b):
        return aid(src[b][0], src[a][1])

    return _build(points, spec, rule, name or "Pair(%d)" % len(points))


def point_groupoid(group, obj="pt", name=None):
    """One object; arrows form the given group."""
    e = group.elements[group.identity]

    def aid(g):
        return "id_%s" % obj if g == e else g

    spec = [(aid(g), obj, obj, aid(group.inv_named(g))) for g in group.elements]
    back = {aid(g): g for g in group.elements}

    def rule(a, b):
        return aid(group.mul_named(back[a], back[b]))

    return _build((obj,), spec, rule, name or "pt^%s" % group.name)


def translation_groupoid(action, name=None):
    """Arrows (k, x) from x to k·x; composition (k', kx)∘(k, x) = (k'k, x)."""
    grp = action.group
    e = grp.elements[grp.identity]

    def aid(g, x):
        return "id_%s" % x if g == e else "%s@%s" % (g, x)

    spec = []
    for g in grp.elements:
        for x in action.carrier:
            spec.append((aid(g, x), x, action.apply(g, x),
                         aid(grp.inv_named(g), action.apply(g, x))))
    back = {aid(g, x): (g, x) for g in grp.elements for x in action.carrier}

    def rule(a, b):
        g2, _ = back[a]
        g1, x = back[b]
        return aid(grp.mul_named(g2, g1), x)

    return _build(tuple(action.carrier), spec, rule,
                  name or "%s|X" % grp.name)


def product_groupoid(g, h, name=None):
    objects = ["%s|%s" % (x, y) for x in g.objects for y in h.objects]

    def aid(a, b):
        if g.is_unit(a) and h.is_unit(b):
            return "id_%s|%s" % (g.source[a], h.source[b])
        return "%s|%s" % (a, b)

    spec = []
    back = {}
    for a in g.arrows:
        for b in h.arrows:
            i = aid(a, b)
            back[i] = (a, b)
            spec.append((i, "%s|%s" % (g.source[a], h.source[b]),
                         "%s|%s" % (g.target[a], h.target[b]),
                         aid(g.inverse[a], h.inverse[b])))

    def rule(p, q):
        a2, b2 = back[p]
        a1, b1 = back[q]
        return aid(g.compose(a2, a1), h.compose(b2, b1))

    return _build(objects, spec, rule, name or "%sx%s" % (g.name, h.name))


def disjoint_union(g, h, name=None):
    """Relabels ids with "L:"/"R:" prefixes to guarantee disjointness."""
    def left(x):
        return "id_L:%s" % x[3:] if x.startswith("id_") else "L:%s" % x

    def right(x):
        return "id_R:%s" % x[3:] if x.startswith("id_") else "R:%s" % x

    objects = ["L:%s" % x for x in g.objects] + ["R:%s" % x for x in h.objects]
    spec = [(left(a), "L:%s" % g.source[a], "L:%s" % g.target[a], left(g.inverse[a]))
            for a in g.arrows]
    spec += [(right(a), "R:%s" % h.source[a], "R:%s" % h.target[a], right(h.inverse[a]))
             for a in h.arrows]
    lmap = {left(a): a for a in g.arrows}
    rmap = {right(a): a for a in h.arrows}

    def rule(p, q):
        if p in lmap:
            return left(g.compose(lmap[p], lmap[q]))
        return right(h.compose(rmap[p], rmap[q]))

    return _build(objects, spec, rule, name or "%s+%s" % (g.name, h.name))


def full_subgroupoid(g, subset, name=None):
    """Objects = subset, arrows = both endpoints in subset.

    The subset must be invariant: every arrow with source in it has target in it.
    """
    subset = tuple(sorted(set(subset)))
    missing = [x for x in subset if x not in set(g.objects)]
    if missing:
        raise GroupoidError("unknown objects %s" % (missing,))
    sub = set(subset)
    for a in g.arrows:
        if g.source[a] in sub and g.target[a] not in sub:
            raise GroupoidError("subset not invariant: arrow %s leaves it" % a)
    arrows = [a for a in g.arrows if g.source[a] in sub and g.target[a] in sub]
    arr = set(arrows)
    compose = {k: v for k, v in g.compose_map.items() if k[0] in arr and k[1] in arr}
    return validate_groupoid(subset, arrows,
                             {a: g.source[a] for a in arrows},
                             {a: g.target[a] for a in arrows},
                             {x: g.unit[x] for x in subset},
                             {a: g.inverse[a] for a in arrows},
                             compose, name=name or "%s|U" % g.name)


def orbit_groupoid(g, member, name=None):
    """The full subgroupoid over the orbit of the given object."""
    from .groupoid import orbits
    for block in orbits(g):
        if member in block:
            return full_subgroupoid(g, block, name=name or "%s|O(%s)" % (g.name, member))
    raise GroupoidError("unknown object %r" % (member,))


class FiberedProduct:
    """The weak fibered product of phi: J -> G and psi: J' -> G.

    Objects are triples (x, g, y) with g: phi(x) -> psi(y); arrows are pairs
    (j, j') attached to a source connecting arrow.  `left`/`right` are the
    projection functors onto J and J'.
    """

    def __init__(self, groupoid, left, right):
        self.groupoid = groupoid
        self.left = left
        self.right = right


def fibered_product(phi, psi, name=None):
    if phi.codomain != psi.codomain:
        raise GroupoidError("functors do not share a codomain")
    jg, jh, g = phi.domain, psi.domain, phi.codomain

    def oid(x, c, y):
        return "%s|%s|%s" % (x, c, y)

    objects = []
    obj_data = {}
    for x in jg.objects:
        for y in jh.objects:
            for c in g.hom(phi.object_map[x], psi.object_map[y]):
                o = oid(x, c, y)
                objects.append(o)
                obj_data[o] = (x, c, y)

    def aid(a, c, b):
        if jg.is_unit(a) and jh.is_unit(b):
            return "id_" + oid(jg.source[a], c, jh.source[b])
        return "%s|%s|%s" % (a, c, b)

    spec = []
    back = {}
    for o in objects:
        x, c, y = obj_data[o]
        for a in jg.out_arrows(x):
            for b in jh.out_arrows(y):
                # target connecting arrow = psi(b)∘c∘phi(a)⁻¹
                c2 = g.compose(g.compose(psi.arrow_map[b], c),
                               g.inverse[phi.arrow_map[a]])
                i = aid(a, c, b)
                back[i] = (a, c, b, c2)
                inv = aid(jg.inverse[a], c2, jh.inverse[b])
                spec.append((i, o, oid(jg.target[a], c2, jh.target[b]), inv))

    def rule(p, q):
        a2, _, b2, _ = back[p]
        a1, c1, b1, _ = back[q]
        return aid(jg.compose(a2, a1), c1, jh.compose(b2, b1))

    prod = _build(objects, spec, rule,
                  name or "%sx_%s%s" % (jg.name, g.name, jh.name))
    left = check_functor(prod, jg,
                         {o: obj_data[o][0] for o in objects},
                         {i: back_a for i, (back_a, _, _, _) in
                          ((i, back[i]) for i in prod.arrows)},
                         name="pr1")
    right = check_functor(prod, jh,
                          {o: obj_data[o][2] for o in objects},
                          {i: b for i, (_, _, b, _) in
                           ((i, back[i]) for i in prod.arrows)},
                          name="pr2")
    return FiberedProduct(prod, left, right)


def skeleton_groupoid(skel, name="skel"):
    """Disjoint union of point groupoids, one per skeleton record."""
    records = list(skel)
    if not records:
        raise GroupoidError("empty skeleton")
    objects = [str(r.representative) for r in records]
    spec = []
    rules = {}
    for r in records:
        x = str(r.representative)
        grp = r.group
        e = grp.elements[grp.identity]

        def aid(gname, x=x, e=e):
            return "id_%s" % x if gname == e else "%s:%s" % (x, gname)

        for gname in grp.elements:
            spec.append((aid(gname), x, x, aid(grp.inv_named(gname))))
            for hname in grp.elements:
                rules[(aid(gname), aid(hname))] = aid(grp.mul_named(gname, hname))
    return _build(objects, spec, lambda a, b: rules[(a, b)], name)


def inclusion_functor(sub, g, name=None):
    """The inclusion of a full subgroupoid (ids shared with g)."""
    return check_functor(sub, g, {x: x for x in sub.objects},
                         {a: a for a in sub.arrows},
                         name=name or "incl")
