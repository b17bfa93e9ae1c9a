"""Decision procedures: essential/strong/Morita equivalence, generalized maps.

Group isomorphism and conjugacy live in :mod:`orbicat.groups`; skeletons are
complete Morita invariants for finite groupoids, which turns the Morita
decision into a finite certificate (bipartite matching of orbit records).
"""

from .constructions import fibered_product, full_subgroupoid, inclusion_functor
from .groupoid import (Functor, GroupoidError, check_functor, check_natural,
                       compose_functors, orbits, skeleton)
from .groups import group_isomorphic

YES, NO, UNKNOWN = "yes", "no", "unknown"


class EquivalenceResult:
    """Boolean verdict plus either a witness or an obstruction."""

    def __init__(self, ok, witness=None, obstruction=None):
        self.ok = ok
        self.witness = witness
        self.obstruction = obstruction

    def __bool__(self):
        return self.ok

    def __repr__(self):
        return "EquivalenceResult(%s, %s)" % (self.ok, self.witness or self.obstruction)


def is_essential_equivalence(f):
    """Essential surjectivity plus fully-faithfulness, checked exhaustively.

    On failure the obstruction names an unreached object or a hom-set where
    the arrow map is not a bijection.
    """
    dom, cod = f.domain, f.codomain
    image = sorted(set(f.object_map.values()))
    connect = {}
    for y in sorted(cod.objects):
        hit = None
        for z in image:
            arrs = cod.hom(z, y)
            if arrs:
                hit = (z, arrs[0])
                break
        if hit is None:
            return EquivalenceResult(
                False, obstruction=("not essentially surjective", y))
        connect[y] = hit
    for x in sorted(dom.objects):
        for z in sorted(dom.objects):
            src = dom.hom(x, z)
            dst = cod.hom(f.object_map[x], f.object_map[z])
            mapped = [f.arrow_map[a] for a in src]
            if len(set(mapped)) != len(mapped) or set(mapped) != set(dst):
                return EquivalenceResult(
                    False, obstruction=("not fully faithful", (x, z)))
    return EquivalenceResult(True, witness=connect)


def is_strong_equivalence(f):
    """Quasi-inverse search; for finite groupoids agrees with essential equivalence.

    The quasi-inverse is built canonically: each codomain object picks the
    least image object connected to it and the least connecting arrow, and
    arrows pull back along the fully-faithful bijections.
    """
    ess = is_essential_equivalence(f)
    if not ess:
        return EquivalenceResult(False, obstruction=ess.obstruction)
    dom, cod = f.domain, f.codomain
    # c[y]: f(xi(y)) -> y, the chosen connecting arrow
    xi, c = {}, {}
    inv_obj = {}
    for x in sorted(dom.objects):
        inv_obj.setdefault(f.object_map[x], x)
    for y in sorted(cod.objects):
        z, arr = None, None
        for x in sorted(dom.objects):
            hom = cod.hom(f.object_map[x], y)
            if hom:
                z, arr = x, hom[0]
                break
        xi[y], c[y] = z, arr

    # pull an arrow of cod back through the hom-set bijection
    def pullback(x1, x2, g):
        for a in dom.hom(x1, x2):
            if f.arrow_map[a] == g:
                return a
        raise GroupoidError("fully-faithful pullback failed")  # unreachable

    arrow_map = {}
    for g in cod.arrows:
        y1, y2 = cod.source[g], cod.target[g]
        # c[y2]^-1 ∘ g ∘ c[y1]: f(xi(y1)) -> f(xi(y2))
        gg = cod.compose(cod.inverse[c[y2]], cod.compose(g, c[y1]))
        arrow_map[g] = pullback(xi[y1], xi[y2], gg)
    psi = check_functor(cod, dom, xi, arrow_map, name="%s^-1" % f.name)

    # T': f∘psi => id_cod with components c[y]; T: psi∘f => id_dom pulled back
    t_prime = check_natural(compose_functors(f, psi),
                            _identity_of(cod), c)
    t_comp = {}
    for x in dom.objects:
        t_comp[x] = pullback(xi[f.object_map[x]], x, c[f.object_map[x]])
    t = check_natural(compose_functors(psi, f), _identity_of(dom), t_comp)
    return EquivalenceResult(True, witness=(psi, t, t_prime))


def _identity_of(g):
    return Functor(g, g, {x: x for x in g.objects}, {a: a for a in g.arrows},
                   name="id")


class MoritaWitness:
    """Orbit bijection between two skeletons with per-orbit group isomorphisms."""

    def __init__(self, pairing):
        # list of (record of G, record of H, name mapping)
        self.pairing = tuple(pairing)

    def __repr__(self):
        return "MoritaWitness(%d orbits)" % len(self.pairing)


def morita_equivalent(g, h):
    """Skeleton matching: orbit bijection with isomorphic isotropy groups.

    Returns an EquivalenceResult whose witness is a MoritaWitness.
    """
    sk_g, sk_h = skeleton(g), skeleton(h)
    if len(sk_g) != len(sk_h):
        return EquivalenceResult(
            False, obstruction=("orbit counts differ", (len(sk_g), len(sk_h))))
    remaining = list(sk_h.records)
    pairing = []
    for rec in sk_g.records:
        found = None
        for i, other in enumerate(remaining):
            iso = group_isomorphic(rec.group, other.group)
            if iso is not None:
                found = (i, other, iso)
                break
        if found is None:
            return EquivalenceResult(
                False,
                obstruction=("no isotropy match for orbit", rec.orbit_id))
        i, other, iso = found
        remaining.pop(i)
        pairing.append((rec, other, iso))
    return EquivalenceResult(True, witness=MoritaWitness(pairing))


class GeneralizedMap:
    """A span K <- J -> G whose left leg is an essential equivalence."""

    def __init__(self, left, right):
        if left.domain != right.domain:
            raise GroupoidError("span legs have different apexes")
        ess = is_essential_equivalence(left)
        if not ess:
            raise GroupoidError(
                "left leg is not an essential equivalence: %s" % (ess.obstruction,))
        self.apex = left.domain
        self.left = left
        self.right = right

    def __repr__(self):
        return "GeneralizedMap(%s <- %s -> %s)" % (
            self.left.codomain.name, self.apex.name, self.right.codomain.name)


def identity_generalized(g):
    ident = _identity_of(g)
    return GeneralizedMap(ident, ident)


def compose_generalized(f, g):
    """Composition through the fibered product of f.right and g.left.

    The projected left leg is re-verified as an essential equivalence; a
    failure signals an internal construction bug and is raised, not swallowed.
    """
    if f.right.codomain != g.left.codomain:
        raise GroupoidError("spans are not composable")
    fp = fibered_product(f.right, g.left)
    left = compose_functors(f.left, fp.left)
    right = compose_functors(g.right, fp.right)
    ess = is_essential_equivalence(left)
    if not ess:
        raise GroupoidError(
            "internal error: projected left leg fails essential equivalence "
            "at %s" % (ess.obstruction,))
    return GeneralizedMap(left, right)


def is_generalized_constant(f):
    """The codomain orbit containing the whole image of the right leg, or None."""
    cod = f.right.codomain
    image = {f.right.object_map[x] for x in f.apex.objects}
    if not image:
        return None
    for block in orbits(cod):
        if image <= set(block):
            from .groupoid import isotropy
            return block, isotropy(cod, block[0])
    return None


def find_natural_transformation(phi, psi):
    """Least natural transformation phi => psi, or None (exhaustive search)."""
    dom, cod = phi.domain, phi.codomain
    objs = sorted(dom.objects)
    cands = {x: cod.hom(phi.object_map[x], psi.object_map[x]) for x in objs}
    if any(not v for v in cands.values()):
        return None

    def consistent(assign, x):
        for h in dom.out_arrows(x) + dom.in_arrows(x):
            a, b = dom.source[h], dom.target[h]
            if a in assign and b in assign:
                lhs = cod.compose(psi.arrow_map[h], assign[a])
                rhs = cod.compose(assign[b], phi.arrow_map[h])
                if lhs != rhs:
                    return False
        return True

    assign = {}

    def extend(k):
        if k == len(objs):
            return True
        x = objs[k]
        for t in cands[x]:
            assign[x] = t
            if consistent(assign, x) and extend(k + 1):
                return True
            del assign[x]
        return False

    if extend(0):
        return check_natural(phi, psi, assign)
    return None


def _orbit_map_of_span(f):
    """The induced map skeleton(K) -> skeleton(G), as orbit-of-least-member pairs.

    The left leg is an essential equivalence, so apex orbits biject with K
    orbits; each then lands in a single G orbit through the right leg.
    """
    out = {}
    k_orbits = orbits(f.left.codomain)
    g_orbits = orbits(f.right.codomain)

    def block_of(blocks, x):
        for b in blocks:
            if x in b:
                return b[0]
        raise GroupoidError("object %r outside every orbit" % (x,))

    for block in orbits(f.apex):
        x = block[0]
        out[block_of(k_orbits, f.left.object_map[x])] = \
            block_of(g_orbits, f.right.object_map[x])
    return out


def generalized_maps_equivalent(f, f2):
    """Three-valued comparison of two spans between the same K and G.

    "no" is returned only on the sound orbit-map obstruction; "yes" when a
    2-cell is found over the fibered product of the left legs (or a full
    subgroupoid of it that still surjects onto both apexes); otherwise
    "unknown" (the bounded search is exhausted).
    """
    if f.left.codomain != f2.left.codomain or f.right.codomain != f2.right.codomain:
        raise GroupoidError("spans do not share outer groupoids")
    if _orbit_map_of_span(f) != _orbit_map_of_span(f2):
        return NO
    # candidate apex: fibered product of the LEFT legs; both projections are
    # then essential equivalences
    fp = fibered_product(f.left, f2.left)
    u, v = fp.left, fp.right
    if not is_essential_equivalence(u) or not is_essential_equivalence(v):
        return UNKNOWN
    phi = compose_functors(f.right, u)
    psi = compose_functors(f2.right, v)
    # the left square carries the connecting-arrow transformation by
    # construction; search the right square per component and then look for a
    # component selection that still covers all orbits of both apexes
    blocks = orbits(fp.groupoid)
    good = []
    for block in blocks:
        sub = full_subgroupoid(fp.groupoid, block)
        phi_b = _restrict(phi, sub)
        psi_b = _restrict(psi, sub)
        if find_natural_transformation(phi_b, psi_b) is not None:
            good.append(block)
    need_left = set(b[0] for b in orbits(f.apex))
    need_right = set(b[0] for b in orbits(f2.apex))

    def covers(blocks_chosen, leg, need, apex):
        apex_orbits = orbits(apex)

        def rep(x):
            for b in apex_orbits:
                if x in b:
                    return b[0]
        got = set()
        for b in blocks_chosen:
            for x in b:
                got.add(rep(leg.object_map[x]))
        return need <= got

    if covers(good, u, need_left, f.apex) and covers(good, v, need_right, f2.apex):
        return YES
    return UNKNOWN


def _restrict(functor, sub):
    return Functor(sub, functor.codomain,
                   {x: functor.object_map[x] for x in sub.objects},
                   {a: functor.arrow_map[a] for a in sub.arrows},
                   name=functor.name + "|")


def restrict_generalized(f, subset):
    """Restriction of a span to the full subgroupoid of K over `subset`."""
    sub = full_subgroupoid(f.left.codomain, subset)
    fp = fibered_product(inclusion_functor(sub, f.left.codomain), f.left)
    return GeneralizedMap(compose_functors(_identity_of(sub), fp.left),
                          compose_functors(f.right, fp.right))
