"""Simplicial complexes, group actions, isotropy-labeled quotients, and the
combinatorial engines: mod-2 homology, cup length, collapsibility, G-paths.

Simplices are sorted tuples of vertex id strings.  Vertex order for cup
products is the global id order, so outputs are reproducible bit for bit.
Subdivision marks in paths are symbolic labels, never floating point.
"""

from itertools import combinations

from .groups import GroupError, embeds


class ComplexError(ValueError):
    pass


def closure_of(simplices):
    """Downward closure of an iterable of simplices (as sorted tuples)."""
    out = set()
    for s in simplices:
        s = tuple(sorted(s))
        for k in range(1, len(s) + 1):
            out.update(combinations(s, k))
    return out


class SimplicialComplex:
    """Finite abstract simplicial complex; every face of a simplex is present."""

    def __init__(self, simplices, name="X"):
        self.name = name
        simps = {tuple(sorted(s)) for s in simplices}
        for s in simps:
            if len(set(s)) != len(s):
                raise ComplexError("degenerate simplex %s" % (s,))
            for k in range(1, len(s)):
                for f in combinations(s, k):
                    if f not in simps:
                        raise ComplexError(
                            "complex not downward closed: missing face %s of %s"
                            % (f, s))
        self.simplices = frozenset(simps)
        self.vertices = tuple(sorted(s[0] for s in simps if len(s) == 1))
        self._cofaces = {}
        for s in simps:
            for k in range(1, len(s)):
                for f in combinations(s, k):
                    self._cofaces.setdefault(f, []).append(s)
        for f in self._cofaces:
            self._cofaces[f].sort()

    @classmethod
    def from_facets(cls, facets, name="X"):
        return cls(closure_of(facets), name=name)

    @property
    def dim(self):
        return max((len(s) - 1 for s in self.simplices), default=-1)

    def k_simplices(self, k):
        return sorted(s for s in self.simplices if len(s) == k + 1)

    def facets(self):
        return sorted(s for s in self.simplices if not self.proper_cofaces(s))

    def proper_cofaces(self, s):
        return self._cofaces.get(tuple(s), [])

    def edges(self):
        return self.k_simplices(1)

    def has(self, s):
        return tuple(sorted(s)) in self.simplices

    def closed_star(self, v):
        """All simplices contained in a simplex containing v."""
        out = set()
        for s in self.simplices:
            if v in s:
                out.update(closure_of([s]))
        return frozenset(out)

    def full_subcomplex(self, vertex_subset):
        keep = set(vertex_subset)
        return frozenset(s for s in self.simplices if set(s) <= keep)

    def is_subcomplex(self, simps):
        simps = set(simps)
        if not simps <= self.simplices:
            return False
        return closure_of(simps) == simps

    def restrict(self, simps, name=None):
        if not self.is_subcomplex(simps):
            raise ComplexError("not a subcomplex")
        return SimplicialComplex(simps, name=name or self.name + "|")

    def components(self):
        """Connected components of the vertex set via shared simplices."""
        parent = {v: v for v in self.vertices}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for s in self.simplices:
            for a in s[1:]:
                ra, rb = find(s[0]), find(a)
                if ra != rb:
                    parent[max(ra, rb)] = min(ra, rb)
        comps = {}
        for v in self.vertices:
            comps.setdefault(find(v), []).append(v)
        return [tuple(sorted(c)) for c in sorted(comps.values(), key=min)]

    def __repr__(self):
        return "SimplicialComplex(%s: %d vertices, %d simplices, dim %d)" % (
            self.name, len(self.vertices), len(self.simplices), self.dim)


def barycenter_name(s):
    return s[0] if len(s) == 1 else "b[%s]" % ",".join(s)


def _chains(simplices):
    """All strict face chains, as tuples of simplices increasing by dimension."""
    by_simplex = {}

    def chains_ending_at(s):
        if s in by_simplex:
            return by_simplex[s]
        out = [(s,)]
        for k in range(1, len(s)):
            for f in combinations(s, k):
                for c in chains_ending_at(f):
                    out.append(c + (s,))
        by_simplex[s] = out
        return out

    all_chains = []
    for s in simplices:
        all_chains.extend(chains_ending_at(tuple(s)))
    return all_chains


def barycentric_subdivision(x, name=None):
    """Barycentric subdivision of a plain complex."""
    simps = [tuple(sorted(barycenter_name(s) for s in chain))
             for chain in _chains(x.simplices)]
    return SimplicialComplex(simps, name=name or "sd(%s)" % x.name)


class SimplicialGComplex:
    """A complex with a simplicial group action, required to be regular:
    any element fixing a simplex setwise fixes it pointwise.  Violating
    inputs must be barycentrically subdivided first.
    """

    def __init__(self, complex, group, vertex_perm, name=None):
        self.complex = complex
        self.group = group
        self.vertex_perm = {g: dict(p) for g, p in vertex_perm.items()}
        self.name = name or "%s:%s" % (group.name, complex.name)
        vs = set(complex.vertices)
        for g in group.elements:
            p = self.vertex_perm.get(g)
            if p is None:
                raise ComplexError("no permutation for element %s" % g)
            if set(p) != vs or set(p.values()) != vs:
                raise ComplexError("element %s is not a vertex permutation" % g)
        e = group.elements[group.identity]
        if any(self.vertex_perm[e][v] != v for v in vs):
            raise ComplexError("identity does not act trivially")
        for g in group.elements:
            for h in group.elements:
                gh = group.mul_named(g, h)
                for v in vs:
                    if self.vertex_perm[g][self.vertex_perm[h][v]] != \
                            self.vertex_perm[gh][v]:
                        raise ComplexError(
                            "assignment is not a homomorphism at (%s, %s)" % (g, h))
        for g in group.elements:
            for s in complex.simplices:
                t = self.act_simplex(g, s)
                if t not in complex.simplices:
                    raise ComplexError(
                        "element %s does not map simplex %s to a simplex" % (g, s))
                if set(t) == set(s) and t != s:
                    raise ComplexError("degenerate image of %s under %s" % (s, g))
                if set(t) == set(s):
                    for v in s:
                        if self.vertex_perm[g][v] != v:
                            raise ComplexError(
                                "action not regular: %s fixes %s setwise, not "
                                "pointwise; barycentrically subdivide first" % (g, s))

    def act_simplex(self, g, s):
        return tuple(sorted(self.vertex_perm[g][v] for v in s))

    def stabilizer(self, s):
        """Pointwise stabilizer of a simplex, as ambient element indices."""
        s = tuple(s)
        return frozenset(
            self.group.index(g) for g in self.group.elements
            if all(self.vertex_perm[g][v] == v for v in s))

    def vertex_orbit(self, v):
        return tuple(sorted({self.vertex_perm[g][v] for g in self.group.elements}))

    def simplex_orbit(self, s):
        return sorted({self.act_simplex(g, s) for g in self.group.elements})

    def __repr__(self):
        return "SimplicialGComplex(%s)" % self.name


def barycentric_subdivision_g(x, name=None):
    """Subdivision of a G-complex with the induced action (always regular)."""
    sub = barycentric_subdivision(x.complex)
    perm = {}
    for g in x.group.elements:
        perm[g] = {}
        for s in x.complex.simplices:
            perm[g][barycenter_name(s)] = barycenter_name(x.act_simplex(g, s))
    return SimplicialGComplex(sub, x.group, perm, name=name or "sd(%s)" % x.name)


class OrbifoldComplex:
    """A quotient complex with a subgroup-of-ambient label per simplex.

    Labels grow on deeper strata: for sigma a face of tau,
    label(tau) <= label(sigma) as subsets of the ambient group.
    Unlabeled simplices default to the trivial subgroup.
    """

    def __init__(self, complex, ambient, label=None, name=None):
        self.complex = complex
        self.ambient = ambient
        self.name = name or complex.name
        triv = frozenset([ambient.identity])
        lab = {s: triv for s in complex.simplices}
        for s, sub in (label or {}).items():
            s = tuple(sorted(s))
            if s not in complex.simplices:
                raise ComplexError("label on unknown simplex %s" % (s,))
            lab[s] = frozenset(int(i) for i in sub)
        self.label = lab
        self._groups = {}
        for s, sub in sorted(lab.items()):
            if not ambient.is_subgroup(sub):
                raise ComplexError(
                    "label of %s is not a subgroup: %s"
                    % (s, sorted(ambient.elements[i] for i in sub)))
        for s in complex.simplices:
            for k in range(1, len(s)):
                for f in combinations(s, k):
                    if not lab[s] <= lab[f]:
                        raise ComplexError(
                            "label monotonicity fails: label(%s) is not inside "
                            "label(%s)" % (s, f))

    def label_group(self, s):
        key = self.label[tuple(sorted(s))]
        if key not in self._groups:
            self._groups[key] = self.ambient.subgroup(key)
        return self._groups[key]

    def label_order(self, s):
        return len(self.label[tuple(sorted(s))])

    @property
    def vertices(self):
        return self.complex.vertices

    @property
    def simplices(self):
        return self.complex.simplices

    def submodel(self, simps, name=None):
        sub = self.complex.restrict(simps, name=name)
        return OrbifoldComplex(sub, self.ambient,
                               {s: self.label[s] for s in sub.simplices},
                               name=name or self.name + "|")

    def full_submodel(self, vertex_subset, name=None):
        return self.submodel(self.complex.full_subcomplex(vertex_subset), name=name)

    def is_trivially_labeled(self):
        triv = frozenset([self.ambient.identity])
        return all(v == triv for v in self.label.values())

    def __repr__(self):
        return "OrbifoldComplex(%s: %d simplices, ambient %s)" % (
            self.name, len(self.complex.simplices), self.ambient.name)


def barycentric_subdivision_model(m, name=None):
    """Subdivision of a labeled model; a chain simplex inherits the label of
    its largest element (its points lie in that open stratum)."""
    simps = {}
    for chain in _chains(m.complex.simplices):
        s = tuple(sorted(barycenter_name(c) for c in chain))
        top = max(chain, key=len)
        simps[s] = m.label[top]
    sub = SimplicialComplex(simps.keys(), name="sd(%s)" % m.complex.name)
    return OrbifoldComplex(sub, m.ambient, simps, name=name or "sd(%s)" % m.name)


def quotient_orbifold_complex(x, name=None):
    """Orbit complex of a regular G-complex with stabilizer labels.

    Representatives are deterministic (least in each orbit).  Raises when the
    quotient is not simplicial or canonical stabilizers fail to nest; both are
    cured by subdividing the input first.
    """
    vrep = {}
    for v in x.complex.vertices:
        vrep[v] = x.vertex_orbit(v)[0]

    image_of = {}
    for s in x.complex.simplices:
        img = tuple(sorted(vrep[v] for v in s))
        if len(set(img)) != len(s):
            raise ComplexError(
                "quotient is not simplicial: simplex %s has vertices in a "
                "shared orbit; barycentrically subdivide first" % (s,))
        image_of[s] = img

    by_image = {}
    for s, img in image_of.items():
        by_image.setdefault(img, []).append(s)
    label = {}
    for img, members in sorted(by_image.items()):
        rep = min(members)
        orb = set(x.simplex_orbit(rep))
        if set(members) != orb:
            raise ComplexError(
                "quotient identifies distinct orbits on %s; barycentrically "
                "subdivide first" % (img,))
        label[img] = x.stabilizer(rep)

    q = SimplicialComplex(by_image.keys(), name="%s/%s" % (x.complex.name,
                                                           x.group.name))
    try:
        return OrbifoldComplex(q, x.group, label, name=name or q.name)
    except ComplexError as exc:
        raise ComplexError(
            "%s (canonical representatives give non-nested stabilizers; "
            "barycentrically subdivide first)" % exc) from None


def fixed_subcomplex(x, g, name=None):
    """Simplices fixed pointwise by the element g."""
    if g not in set(x.group.elements):
        raise GroupError("unknown element %r" % (g,))
    simps = [s for s in x.complex.simplices
             if all(x.vertex_perm[g][v] == v for v in s)]
    return SimplicialComplex(simps, name=name or "Fix(%s)" % g)


# ---------------------------------------------------------------------------
# mod-2 linear algebra, homology, cup products

class Z2Space:
    """Row space over GF(2); vectors are frozensets of hashable coordinates."""

    def __init__(self):
        self.pivots = {}

    def reduce(self, vec):
        v = set(vec)
        while v:
            p = min(v)
            basis = self.pivots.get(p)
            if basis is None:
                break
            v ^= basis
        return frozenset(v)

    def add(self, vec):
        """Insert; returns True when the vector was independent."""
        v = self.reduce(vec)
        if not v:
            return False
        self.pivots[min(v)] = set(v)
        return True

    def contains(self, vec):
        return not self.reduce(vec)

    @property
    def rank(self):
        return len(self.pivots)


def _boundary(s):
    return frozenset(s[:i] + s[i + 1:] for i in range(len(s))) \
        if len(s) > 1 else frozenset()


def homology_z2(x):
    """Betti numbers over the two-element field, one entry per dimension.

    Ranks of the boundary operators are computed by elimination.
    """
    d = x.dim
    if d < 0:
        return ()
    ranks = [0] * (d + 2)
    for k in range(1, d + 1):
        space = Z2Space()
        for s in x.k_simplices(k):
            space.add(_boundary(s))
        ranks[k] = space.rank
    betti = []
    for k in range(d + 1):
        betti.append(len(x.k_simplices(k)) - ranks[k] - ranks[k + 1])
    return tuple(betti)


def reduced_betti_z2(x):
    b = homology_z2(x)
    if not b:
        return ()
    return (b[0] - 1,) + b[1:]


def is_z2_acyclic(x):
    """Trivial reduced mod-2 homology (the necessary test for contractibility)."""
    b = homology_z2(x)
    return bool(b) and b[0] == 1 and all(v == 0 for v in b[1:])


def _coboundary_image(x, k):
    """Spanning set of B^k: coboundaries of the (k-1)-cochain basis."""
    out = []
    for rho in x.k_simplices(k - 1):
        out.append(frozenset(t for t in x.proper_cofaces(rho)
                             if len(t) == k + 1))
    return out


def cohomology_basis_z2(x, k):
    """Representative cocycles for H^k, as frozensets of k-simplices."""
    cob = Z2Space()
    for v in _coboundary_image(x, k):
        cob.add(v)
    # kernel of delta_k via column elimination with combination tracking
    pivots = {}
    reps = []
    taken = Z2Space()
    for v in cob.pivots.values():
        taken.add(frozenset(v))
    for s in x.k_simplices(k):
        vec = set(t for t in x.proper_cofaces(s) if len(t) == k + 2)
        combo = {s}
        while vec:
            p = min(vec)
            hit = pivots.get(p)
            if hit is None:
                break
            vec ^= hit[0]
            combo ^= hit[1]
        if vec:
            pivots[min(vec)] = (set(vec), set(combo))
        else:
            z = frozenset(combo)
            if taken.add(z):
                reps.append(z)
    return reps


def _cup(a, p, b, q, simplices_pq):
    """Front-face/back-face product of a p-cochain and a q-cochain."""
    out = set()
    for s in simplices_pq:
        if s[:p + 1] in a and s[p:] in b:
            out.add(s)
    return frozenset(out)


def cup_length_z2(x, within=None):
    """Longest nonvanishing product of positive-degree mod-2 classes.

    With `within` (a subcomplex given as a simplex set), products of classes
    of x are tested after restriction to it; that is the localized bound used
    by the relative category (monotone in the subcomplex, unlike the
    subcomplex's own cup length).
    """
    d = x.dim
    if d < 1:
        return 0
    basis = {k: cohomology_basis_z2(x, k) for k in range(1, d + 1)}
    cob = {}
    for k in range(1, d + 1):
        sp = Z2Space()
        for v in _coboundary_image(x, k):
            sp.add(v)
        cob[k] = sp

    if within is not None:
        m = x.restrict(within)
        mcob = {}
        for k in range(1, d + 1):
            sp = Z2Space()
            if k <= m.dim + 1:
                for v in _coboundary_image(m, k):
                    sp.add(v)
            mcob[k] = sp

        def nonzero(vec, k):
            r = frozenset(s for s in vec if s in m.simplices)
            return bool(mcob[k].reduce(r))
    else:
        def nonzero(vec, k):
            return bool(cob[k].reduce(vec))

    simps = {k: x.k_simplices(k) for k in range(1, d + 1)}
    current = {k: list(v) for k, v in basis.items() if v}
    best = 0
    if any(nonzero(z, k) for k, zs in current.items() for z in zs):
        best = 1
    length = 1
    while length < d and current:
        nxt = {}
        seen = {k: Z2Space() for k in range(1, d + 1)}
        found = False
        for p, zs in sorted(current.items()):
            for z in zs:
                for q in range(1, d - p + 1):
                    for w in basis[q]:
                        prod = _cup(z, p, w, q, simps[p + q])
                        red = cob[p + q].reduce(prod)
                        if not red:
                            continue      # zero in H*(x): dead either way
                        if seen[p + q].add(red):
                            nxt.setdefault(p + q, []).append(prod)
                            if nonzero(prod, p + q):
                                found = True
        if not nxt:
            break
        current = nxt
        length += 1
        if found:
            best = length
    return best


# ---------------------------------------------------------------------------
# elementary collapses

class CollapseResult:
    """Verdict "yes"/"no"/"unknown"; on "yes", `pairs` is the ordered sequence
    of elementary collapses (free face, coface) onto the target."""

    def __init__(self, verdict, pairs=(), steps=0):
        self.verdict = verdict
        self.pairs = tuple(pairs)
        self.steps = steps

    def __bool__(self):
        return self.verdict == "yes"

    def __repr__(self):
        return "CollapseResult(%s, %d pairs)" % (self.verdict, len(self.pairs))


def _target_simplices(x, target):
    if isinstance(target, str):
        if (target,) not in x.simplices:
            raise ComplexError("target vertex %r not in the complex" % target)
        return frozenset([(target,)])
    if isinstance(target, tuple):
        return frozenset(closure_of([target]))
    t = frozenset(closure_of(target))
    return t


def _free_pairs(x, current, target, admissible):
    pairs = []
    for s in current:
        if s in target:
            continue
        cof = [t for t in x.proper_cofaces(s) if t in current]
        if len(cof) == 1 and cof[0] not in target:
            if admissible is None or admissible(s, cof[0]):
                pairs.append((s, cof[0]))
    pairs.sort()
    return pairs


def is_collapsible(x, target, budget=100000, admissible=None, start=None):
    """Search for a collapse of `start` (default: all of x) onto `target`.

    Greedy free-face collapsing with backtracking under a step budget.  "yes"
    returns the ordered collapse sequence; "no" only when the exhaustive
    search completed; otherwise "unknown".  `admissible(free, coface)` can
    veto pairs (used for isotropy-monotone collapses).
    """
    target = _target_simplices(x, target)
    current = frozenset(x.simplices if start is None else start)
    if not target <= current:
        raise ComplexError("target not contained in the start region")
    steps = 0
    failed = set()
    path = []

    def dfs(state):
        nonlocal steps
        if state == target:
            return True
        if state in failed:
            return False
        if steps >= budget:
            return None
        moves = _free_pairs(x, state, target, admissible)
        exhausted = True
        for s, t in moves:
            steps += 1
            if steps > budget:
                exhausted = False
                break
            path.append((s, t))
            got = dfs(state - {s, t})
            if got:
                return True
            path.pop()
            if got is None:
                exhausted = False
        if exhausted:
            failed.add(state)
            return False
        return None

    got = dfs(current)
    if got:
        return CollapseResult("yes", tuple(path), steps)
    if got is False:
        return CollapseResult("no", (), steps)
    return CollapseResult("unknown", (), steps)


def replay_collapse(x, start, target, pairs):
    """Re-verify a collapse sequence step by step; True iff it ends at target."""
    target = _target_simplices(x, target)
    current = set(start)
    for s, t in pairs:
        if s not in current or t not in current or s in target or t in target:
            return False
        cof = [u for u in x.proper_cofaces(s) if u in current]
        if cof != [t]:
            return False
        current -= {s, t}
    return frozenset(current) == target


def expand_region(x, seed, admissible=None):
    """Grow a region from `seed` by reverse elementary collapses.

    Returns (region, pairs) where reversing the recorded additions collapses
    the region back onto the closure of `seed`.  Saturation is deterministic:
    lowest-dimensional legal additions first, by id order.
    """
    region = set(closure_of(seed))
    pairs = []
    progress = True
    while progress:
        progress = False
        candidates = sorted((s for s in x.simplices if s not in region),
                            key=lambda s: (len(s), s))
        for tau in candidates:
            if tau in region:
                continue
            missing = [f for k in range(1, len(tau))
                       for f in combinations(tau, k) if f not in region]
            if len(missing) != 1:
                continue
            sigma = missing[0]
            if any(c in region for c in x.proper_cofaces(sigma)):
                continue
            if admissible is not None and not admissible(sigma, tau):
                continue
            region.add(sigma)
            region.add(tau)
            pairs.append((sigma, tau))
            progress = True
    return frozenset(region), [(s, t) for s, t in reversed(pairs)]


# ---------------------------------------------------------------------------
# multiple G-paths

class GPathSegment:
    """One subdivision segment: parallel branch paths with branch arrows.

    `branches[j]` is a vertex path; `branch_arrows[j]` relates branch 0 to
    branch j (the arrow family over the subinterval); entry 0 must be the
    identity element.
    """

    def __init__(self, branches, branch_arrows):
        self.branches = tuple(tuple(b) for b in branches)
        self.branch_arrows = tuple(branch_arrows)
        if len(self.branches) != len(self.branch_arrows):
            raise ComplexError("one branch arrow per branch is required")
        if not self.branches:
            raise ComplexError("a segment needs at least one branch")


class MultipleGPath:
    """A branched path over a symbolic subdivision of the interval."""

    def __init__(self, marks, segments, connecting_arrows):
        self.marks = tuple(str(m) for m in marks)
        self.segments = tuple(segments)
        self.connecting_arrows = tuple(connecting_arrows)
        if len(self.marks) != len(self.segments) + 1:
            raise ComplexError("need n+1 marks for n segments")
        if len(self.connecting_arrows) != max(len(self.segments) - 1, 0):
            raise ComplexError("need one connecting arrow per interior mark")

    def spliced_branches(self):
        """Index pairs (segment, branch) of every single-path splice."""
        out = []
        for i, seg in enumerate(self.segments):
            for j in range(len(seg.branches)):
                out.append((i, j))
        return out


class _GComplexWorld:
    """Arrow semantics over a global-quotient model: arrows are group elements."""

    def __init__(self, model):
        self.m = model
        self.g = model.group

    def vertex_ok(self, v):
        return (v,) in self.m.complex.simplices

    def edge_ok(self, v, w):
        return v == w or tuple(sorted((v, w))) in self.m.complex.simplices

    def act(self, g, v):
        return self.m.vertex_perm[g][v]

    def check_arrow_at(self, g, v):
        return g in set(self.g.elements)

    def mul(self, a, b):
        return self.g.mul_named(a, b)

    def inv(self, a):
        return self.g.inv_named(a)

    def label_group(self, simplex):
        sub = self.m.stabilizer(simplex)
        return self.g.subgroup(sub)


class _LabeledWorld:
    """Arrow semantics over a labeled quotient: arrows are label elements and
    act trivially (they are isotropy loops of the quotient point)."""

    def __init__(self, model):
        self.m = model
        self.g = model.ambient

    def vertex_ok(self, v):
        return (v,) in self.m.complex.simplices

    def edge_ok(self, v, w):
        return v == w or tuple(sorted((v, w))) in self.m.complex.simplices

    def act(self, g, v):
        return v

    def check_arrow_at(self, g, v):
        return self.g.index(g) in self.m.label[(v,)]

    def mul(self, a, b):
        return self.g.mul_named(a, b)

    def inv(self, a):
        return self.g.inv_named(a)

    def label_group(self, simplex):
        return self.m.label_group(simplex)


def _world(model):
    if isinstance(model, SimplicialGComplex):
        return _GComplexWorld(model)
    if isinstance(model, OrbifoldComplex):
        return _LabeledWorld(model)
    raise ComplexError("unsupported model type %r" % type(model).__name__)


def validate_gpath(path, model):
    """Check every endpoint/arrow matching condition and all branch splices.

    Over a global-quotient model branch j must be the translate of branch 0 by
    its branch arrow; over a labeled model branch arrows are label elements at
    every point of the branch (the arrow family exists over the whole
    subinterval).  Mismatches report the segment index.
    """
    w = _world(model)
    e = w.g.elements[w.g.identity]
    segs = path.segments
    for i, seg in enumerate(segs):
        if seg.branch_arrows[0] != e:
            raise ComplexError("segment %d: first branch arrow must be the "
                               "identity" % i)
        for j, br in enumerate(seg.branches):
            if not br:
                raise ComplexError("segment %d branch %d is empty" % (i, j))
            for v in br:
                if not w.vertex_ok(v):
                    raise ComplexError("segment %d: unknown vertex %r" % (i, v))
            for a, b in zip(br, br[1:]):
                if not w.edge_ok(a, b):
                    raise ComplexError(
                        "segment %d branch %d: no edge %s-%s" % (i, j, a, b))
        base = seg.branches[0]
        for j, (br, h) in enumerate(zip(seg.branches, seg.branch_arrows)):
            if len(br) != len(base):
                raise ComplexError("segment %d branch %d: length mismatch" % (i, j))
            if isinstance(model, OrbifoldComplex):
                for v in br:
                    if not w.check_arrow_at(h, v):
                        raise ComplexError(
                            "segment %d branch %d: arrow %s is not in the "
                            "label at %s" % (i, j, h, v))
            translated = tuple(w.act(h, v) for v in base)
            if translated != br:
                raise ComplexError(
                    "segment %d branch %d: not the %s-translate of branch 0"
                    % (i, j, h))
    for i, g in enumerate(path.connecting_arrows):
        end = segs[i].branches[0][-1]
        start = segs[i + 1].branches[0][0]
        if isinstance(model, OrbifoldComplex) and not w.check_arrow_at(g, end):
            raise ComplexError(
                "connecting arrow %d: %s is not in the label at %s" % (i, g, end))
        if w.act(g, end) != start:
            raise ComplexError(
                "connecting arrow %d: source %s does not reach %s" % (i, end, start))
    # splice check: branch j of segment i enters through h∘g_{i-1} and leaves
    # through g_i∘h⁻¹; both must carry the neighbouring endpoint correctly
    for i, seg in enumerate(segs):
        for j, h in enumerate(seg.branch_arrows):
            if i > 0:
                entry = w.mul(h, path.connecting_arrows[i - 1])
                if w.act(entry, segs[i - 1].branches[0][-1]) != seg.branches[j][0]:
                    raise ComplexError(
                        "splice fails entering segment %d branch %d" % (i, j))
            if i + 1 < len(segs):
                exit_ = w.mul(path.connecting_arrows[i], w.inv(h))
                if w.act(exit_, seg.branches[j][-1]) != segs[i + 1].branches[0][0]:
                    raise ComplexError(
                        "splice fails leaving segment %d branch %d" % (i, j))
    return path


def _strata_along(world, br):
    out = [(br[0],)]
    for a, b in zip(br, br[1:]):
        if a != b:
            out.append(tuple(sorted((a, b))))
        out.append((b,))
    return out


def path_injections_hold(path, model):
    """True iff along every spliced branch the isotropy label of each point
    embeds into the label at every later point (consecutive embeddings
    compose, so consecutive strata are checked)."""
    w = _world(model)
    validate_gpath(path, model)
    for i, seg in enumerate(path.segments):
        for br in seg.branches:
            whole = list(br)
            # prepend the main line before segment i and append after it:
            # injections along the splice reduce to injections along the
            # concatenated strata since conjugation preserves label groups
            prefix = []
            for k in range(i):
                prefix.extend(path.segments[k].branches[0])
            suffix = []
            for k in range(i + 1, len(path.segments)):
                suffix.extend(path.segments[k].branches[0])
            strata = []
            for piece in (prefix, whole, suffix):
                if piece:
                    strata.extend(_strata_along(w, tuple(piece)))
            for s, t in zip(strata, strata[1:]):
                if set(s) == set(t):
                    continue
                if not set(s) <= set(t) and not set(t) <= set(s):
                    # disjoint strata in the concatenation (jump through an
                    # arrow); labels at both ends of an arrow agree up to
                    # conjugation, skip the synthetic edge
                    continue
                if not embeds(w.label_group(s), w.label_group(t)):
                    return False
    return True
