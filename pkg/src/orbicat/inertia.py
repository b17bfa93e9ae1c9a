"""Inertia groupoid, twisted/untwisted sectors, and the two cardinalities.

Cardinalities are exact: Baez-Dolan is the sum of 1/|isotropy| over orbits,
string-Euler the sum of conjugacy-class counts (= the number of inertia
orbits).  Models expose both through their finite stratum-skeleton data.
"""

from fractions import Fraction

from .complexes import (ComplexError, OrbifoldComplex, SimplicialComplex,
                        SimplicialGComplex, quotient_orbifold_complex)
from .constructions import full_subgroupoid, skeleton_groupoid
from .groupoid import skeleton, validate_groupoid
from .groups import conjugacy_classes


def inertia_groupoid(g, name=None):
    """Objects are the loops of g; an arrow (k, h) conjugates k to h∘k∘h⁻¹."""
    loops = g.loops()
    loopset = set(loops)

    def oid(k):
        return k

    def aid(k, h):
        if g.is_unit(h):
            return "id_%s" % k
        return "%s|%s" % (k, h)

    arrows, source, target, inverse, compose = [], {}, {}, {}, {}
    data = {}
    for k in loops:
        x = g.source[k]
        for h in g.out_arrows(x):
            conj = g.compose(g.compose(h, k), g.inverse[h])
            i = aid(k, h)
            arrows.append(i)
            data[i] = (k, h, conj)
            source[i], target[i] = oid(k), oid(conj)
            inverse[i] = aid(conj, g.inverse[h])
    for i in arrows:
        k1, h1, conj1 = data[i]
        for j in arrows:
            k2, h2, conj2 = data[j]
            if conj2 == k1:
                # (k1, h1) ∘ (k2, h2) = (k2, h1∘h2)
                compose[(i, j)] = aid(k2, g.compose(h1, h2))
    unit = {oid(k): aid(k, g.unit[g.source[k]]) for k in loops}
    return validate_groupoid([oid(k) for k in loops], arrows, source, target,
                             unit, inverse, compose,
                             name=name or "L(%s)" % g.name)


def inertia_orbit_count(g):
    """Number of inertia orbits, without building the inertia groupoid."""
    loops = g.loops()
    parent = {k: k for k in loops}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for k in loops:
        for h in g.out_arrows(g.source[k]):
            conj = g.compose(g.compose(h, k), g.inverse[h])
            rk, rc = find(k), find(conj)
            if rk != rc:
                parent[max(rk, rc)] = min(rk, rc)
    return len({find(k) for k in loops})


class Sector:
    def __init__(self, sector_id, objects, twisted, subgroupoid):
        self.sector_id = sector_id
        self.objects = tuple(objects)
        self.twisted = twisted
        self.subgroupoid = subgroupoid

    def __repr__(self):
        return "Sector(%s, %s, %d objects)" % (
            self.sector_id, "twisted" if self.twisted else "untwisted",
            len(self.objects))


class SectorDecomposition:
    def __init__(self, sectors):
        self.sectors = tuple(sectors)

    def __iter__(self):
        return iter(self.sectors)

    def __len__(self):
        return len(self.sectors)

    def twisted(self):
        return [s for s in self.sectors if s.twisted]

    def untwisted(self):
        return [s for s in self.sectors if not s.twisted]


def sectors_discrete(g):
    """Orbit components of the inertia groupoid; components meeting the
    unit-loop section are flagged untwisted."""
    from .groupoid import orbits
    ig = inertia_groupoid(g)
    units = {g.unit[x] for x in g.objects}
    sectors = []
    for i, block in enumerate(orbits(ig)):
        twisted = not any(k in units for k in block)
        sectors.append(Sector("sector%d" % i, block, twisted,
                              full_subgroupoid(ig, block)))
    return SectorDecomposition(sectors)


def baez_dolan_cardinality(g):
    """Sum over orbits of 1/|isotropy|, in lowest terms."""
    total = Fraction(0)
    for rec in skeleton(g):
        total += Fraction(1, len(rec.group))
    return total


def string_euler_cardinality(g):
    """Sum over orbits of the conjugacy-class count of the isotropy group."""
    total = 0
    for rec in skeleton(g):
        total += conjugacy_classes(rec.group)[1]
    return total


# ---------------------------------------------------------------------------
# simplicial sectors

class ModelSector:
    """A sector of a combinatorial model, carried by its own sub-model."""

    def __init__(self, sector_id, twisted, submodel, members):
        self.sector_id = sector_id
        self.twisted = twisted
        self.submodel = submodel
        self.members = members

    def __repr__(self):
        return "ModelSector(%s, %s, %d vertices)" % (
            self.sector_id, "twisted" if self.twisted else "untwisted",
            len(self.submodel.vertices))


class _UF:
    def __init__(self):
        self.parent = {}

    def add(self, x):
        self.parent.setdefault(x, x)

    def find(self, x):
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)

    def blocks(self):
        out = {}
        for x in self.parent:
            out.setdefault(self.find(x), []).append(x)
        return [sorted(v) for v in sorted(out.values(), key=min)]


def _sectors_of_action(x):
    """Components of ⊔_{g≠e} Fix(g) under connectivity and conjugation."""
    grp = x.group
    e = grp.identity
    uf = _UF()
    fixed = {}
    for gi in range(len(grp)):
        if gi == e:
            continue
        gname = grp.elements[gi]
        simps = [s for s in x.complex.simplices
                 if all(x.vertex_perm[gname][v] == v for v in s)]
        fixed[gi] = simps
        for s in simps:
            uf.add((gi, s))
    for gi, simps in fixed.items():
        present = set(simps)
        for s in simps:
            for t in x.complex.proper_cofaces(s):
                if t in present:
                    uf.union((gi, s), (gi, t))
    for gi, simps in fixed.items():
        for hi in range(len(grp)):
            hname = grp.elements[hi]
            target = grp.conj(hi, gi)
            for s in simps:
                uf.union((gi, s), (target, x.act_simplex(hname, s)))

    sectors = []
    for idx, block in enumerate(uf.blocks()):
        g_star = block[0][0]
        part = sorted(s for gi, s in block if gi == g_star)
        cent = sorted(grp.centralizer(g_star))
        sub = grp.subgroup(cent, name="C(%s)" % grp.elements[g_star])
        comp = SimplicialComplex(part, name="Fix(%s)" % grp.elements[g_star])
        perm = {sub.elements[k]: {v: x.vertex_perm[sub.elements[k]][v]
                                  for v in comp.vertices}
                for k in range(len(sub))}
        sector_gc = SimplicialGComplex(comp, sub, perm)
        submodel = quotient_orbifold_complex(
            sector_gc, name="sector(%s)" % grp.elements[g_star])
        sectors.append(("twist[%s]%d" % (grp.elements[g_star], idx), block,
                        submodel))
    return sectors


def _label_classes(model, s):
    """Conjugacy classes of the label subgroup at s, as ambient index sets."""
    lab = model.label[s]
    amb = model.ambient
    classes = []
    seen = set()
    for g in sorted(lab):
        if g in seen:
            continue
        cls = frozenset(amb.conj(h, g) for h in lab)
        seen |= cls
        classes.append(cls)
    return classes


def _sectors_of_labels(model):
    """Sector sheets of a labeled model: pairs (simplex, nontrivial class)."""
    amb = model.ambient
    e = amb.identity
    uf = _UF()
    class_at = {}
    for s in sorted(model.complex.simplices):
        for cls in _label_classes(model, s):
            if cls == frozenset([e]):
                continue
            uf.add((s, cls))
            class_at[(s, min(cls))] = cls
    for (s, cls) in list(uf.parent):
        rep = min(cls)
        for k in range(1, len(s)):
            from itertools import combinations
            for f in combinations(s, k):
                fcls = next(c for c in _label_classes(model, f) if rep in c)
                uf.union((s, cls), (f, fcls))

    sectors = []
    for idx, block in enumerate(uf.blocks()):
        # name a sheet vertex by (vertex, least class element)
        def vname(v, cls):
            return "%s#%s" % (v, amb.elements[min(cls)])

        simps = {}
        labels = {}
        for s, cls in block:
            verts = []
            for v in s:
                vcls = next(c for c in _label_classes(model, (v,))
                            if min(cls) in c)
                verts.append(vname(v, vcls))
            key = tuple(sorted(verts))
            if key in simps and simps[key] != (s, cls):
                raise ComplexError(
                    "ambiguous sector sheet over %s; labels do not separate "
                    "conjugacy classes" % (s,))
            simps[key] = (s, cls)
            labels[key] = frozenset(
                amb.centralizer(min(cls), within=model.label[s]))
        comp = SimplicialComplex(simps.keys(), name="sheet%d" % idx)
        submodel = OrbifoldComplex(comp, amb, labels, name="sector%d" % idx)
        rep_s, rep_cls = min(block)
        sectors.append(("twist[%s]%d" % (amb.elements[min(rep_cls)], idx),
                        block, submodel))
    return sectors


def sectors_simplicial(model):
    """Sector decomposition of a combinatorial model.

    Global-quotient input (an action) decomposes the fixed complexes under
    conjugation; labeled input needs its labels inside a declared ambient
    group.  The untwisted sector is the whole quotient.
    """
    if isinstance(model, SimplicialGComplex):
        untwisted = quotient_orbifold_complex(model)
        twisted = _sectors_of_action(model)
    elif isinstance(model, OrbifoldComplex):
        untwisted = model
        twisted = _sectors_of_labels(model)
    else:
        raise ComplexError("unsupported model type %r" % type(model).__name__)
    sectors = [ModelSector("untwisted", False, untwisted,
                           tuple(untwisted.complex.facets()))]
    for sid, members, sub in twisted:
        sectors.append(ModelSector(sid, True, sub, tuple(members)))
    return SectorDecomposition(sectors)


# ---------------------------------------------------------------------------
# stratum skeleton of a model

class Stratum:
    def __init__(self, stratum_id, simplices, group):
        self.stratum_id = stratum_id
        self.simplices = tuple(simplices)
        self.group = group

    def __repr__(self):
        return "Stratum(%s, %d simplices, |K|=%d)" % (
            self.stratum_id, len(self.simplices), len(self.group))


def model_skeleton(model):
    """Connected components of constant-label simplices, one record each.

    This is the model's finite skeleton data: it is invariant under
    barycentric subdivision, unlike any vertex-level census.
    """
    uf = _UF()
    for s in model.complex.simplices:
        uf.add(s)
    for s in model.complex.simplices:
        for t in model.complex.proper_cofaces(s):
            if model.label[s] == model.label[t]:
                uf.union(s, t)
    strata = []
    for block in uf.blocks():
        rep = min(block)
        strata.append(Stratum("+".join(rep), block, model.label_group(rep)))
    return strata


def model_cardinalities(model):
    """(Baez-Dolan, string-Euler) of the stratum skeleton."""
    bd = Fraction(0)
    se = 0
    for st in model_skeleton(model):
        bd += Fraction(1, len(st.group))
        se += conjugacy_classes(st.group)[1]
    return bd, se


def model_skeleton_groupoid(model, name=None):
    """The stratum skeleton as a finite groupoid (disjoint point groupoids)."""
    class _Rec:
        def __init__(self, rep, group):
            self.representative = rep
            self.group = group

    records = [_Rec("s%d" % i, st.group)
               for i, st in enumerate(model_skeleton(model))]
    return skeleton_groupoid(records, name=name or "skel(%s)" % model.name)
