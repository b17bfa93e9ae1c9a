"""Certified categorical-piece testing and cat/wcat bounds via exact set cover.

The certificate class is isotropy-monotone elementary collapses: sound but
possibly incomplete.  Upper bounds are certified; "no" verdicts rest only on
necessary conditions (isotropy injections along paths, homology); everything
else is "unknown".
"""

from dataclasses import dataclass
from itertools import combinations

from .complexes import (ComplexError, SimplicialGComplex, cup_length_z2,
                        expand_region, is_collapsible, is_z2_acyclic,
                        quotient_orbifold_complex, replay_collapse)
from .groups import conjugacy_classes, embeds, group_embeds
from .inertia import sectors_simplicial

YES, NO, UNKNOWN = "yes", "no", "unknown"


@dataclass
class ToolConfig:
    """Knobs shared by the cover machinery: union depth for candidate pieces,
    elementary-step budget per collapse search, verbosity."""
    depth: int = 2
    budget: int = 100000
    verbose: bool = False
    sector_depth: int = 1

    def __post_init__(self):
        if self.depth < 1 or self.budget < 1:
            raise ValueError("depth and budget must be positive")


class DeformationCertificate:
    """An isotropy-monotone collapse of `region` onto `target`, with a stored
    embedding witness per collapse pair and retained face."""

    def __init__(self, model, region, target, pairs):
        self.model = model
        self.region = frozenset(region)
        self.target = frozenset(target)
        self.pairs = tuple(pairs)
        self.injections = self._witnesses()

    def _witnesses(self):
        out = {}
        m = self.model
        for s, t in self.pairs:
            faces = [f for k in range(1, len(t))
                     for f in combinations(t, k) if f != s]
            checks = []
            for rho in faces + [t]:
                w = group_embeds(m.label_group(s), m.label_group(rho))
                if w is None:
                    raise ComplexError(
                        "collapse pair (%s, %s) is not isotropy-monotone at %s"
                        % (s, t, rho))
                checks.append((rho, w))
            out[(s, t)] = checks
        return out

    def verify(self):
        """Replay the collapses and re-check every stored embedding."""
        if not replay_collapse(self.model.complex, self.region, self.target,
                               self.pairs):
            return False
        for (s, _t), checks in self.injections.items():
            a = self.model.label_group(s)
            for rho, w in checks:
                b = self.model.label_group(rho)
                img = [w[x] for x in a.elements]
                if len(set(img)) != len(img):
                    return False
                bset = set(b.elements)
                if any(y not in bset for y in img):
                    return False
                for p in a.elements:
                    for q in a.elements:
                        if w[a.mul_named(p, q)] != b.mul_named(w[p], w[q]):
                            return False
        return True

    def __repr__(self):
        return "DeformationCertificate(%d collapses onto %d simplices)" % (
            len(self.pairs), len(self.target))


class Obstruction:
    def __init__(self, kind, detail):
        self.kind = kind
        self.detail = detail

    def __repr__(self):
        return "Obstruction(%s: %s)" % (self.kind, self.detail)


# ---------------------------------------------------------------------------
# per-model workspace: reachability, expansion pieces, certified candidates

class _Workspace:
    def __init__(self, model, config):
        self.model = model
        self.config = config
        self.cx = model.complex
        self._reach = {}
        self._expansion = {}

    def admissible(self, s, t):
        """Monotone collapse pair test: label(s) embeds into the label of every
        retained face of t and of t itself."""
        m = self.model
        a = m.label_group(s)
        if not embeds(a, m.label_group(t)):
            return False
        for k in range(1, len(t)):
            for f in combinations(t, k):
                if f != s and not embeds(a, m.label_group(f)):
                    return False
        return True

    def reach_components(self, label_key):
        """Components of the subgraph of vertices/edges whose labels admit an
        embedding of the given label subgroup."""
        if label_key in self._reach:
            return self._reach[label_key]
        grp = self.model.ambient.subgroup(label_key)
        ok_v = [v for v in self.cx.vertices
                if embeds(grp, self.model.label_group((v,)))]
        okset = set(ok_v)
        parent = {v: v for v in ok_v}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for e in self.cx.edges():
            a, b = e
            if a in okset and b in okset and \
                    embeds(grp, self.model.label_group(e)):
                ra, rb = find(a), find(b)
                if ra != rb:
                    parent[max(ra, rb)] = min(ra, rb)
        comp = {v: find(v) for v in ok_v}
        self._reach[label_key] = comp
        return comp

    def can_reach(self, v, t):
        """Monotone reachability of the target from v (isotropy injections
        hold along some path)."""
        comp = self.reach_components(self.model.label[(v,)])
        return v in comp and t in comp and comp[v] == comp[t]

    def expansion_piece(self, t):
        """Maximal region grown from t by reverse monotone collapses; its
        reversed growth is a collapse certificate onto t."""
        if t not in self._expansion:
            region, pairs = expand_region(self.cx, [(t,)], self.admissible)
            cert = DeformationCertificate(self.model, region, [(t,)], pairs)
            self._expansion[t] = (region, cert)
        return self._expansion[t]

    def no_obstruction(self, piece, target):
        """The necessary tests; an Obstruction or None."""
        for s in sorted(piece):
            v = s[0] if len(s) == 1 else None
            if v is None:
                continue
            if not embeds(self.model.label_group((v,)),
                          self.model.label_group((target,))):
                return Obstruction(
                    "isotropy-injection",
                    "label at %s cannot embed into the label at %s" % (v, target))
            if not self.can_reach(v, target):
                return Obstruction(
                    "isotropy-injection",
                    "%s cannot reach %s through isotropy-compatible strata"
                    % (v, target))
        sub = self.cx.restrict(piece)
        if sub.simplices and not is_z2_acyclic(sub):
            return Obstruction("homology",
                               "reduced mod-2 homology of the piece is nonzero")
        return None

    def certify(self, piece, target):
        """YES certificate for collapsing a region containing `piece` onto the
        target vertex, or None under the budget."""
        tsimp = (target,)
        region, cert = self.expansion_piece(target)
        if piece <= region:
            return cert
        regions = []
        if tsimp in piece:
            regions.append(piece)
        regions.append(frozenset(piece | self.cx.closed_star(target)))
        regions.append(frozenset(piece | region))
        regions.append(self.cx.simplices)
        seen = set()
        for r in regions:
            if r in seen or tsimp not in r:
                continue
            seen.add(r)
            if not self.cx.is_subcomplex(r):
                continue
            got = is_collapsible(self.cx, target, budget=self.config.budget,
                                 admissible=self.admissible, start=r)
            if got:
                return DeformationCertificate(self.model, r, [tsimp], got.pairs)
        return None


def is_categorical(model, piece, target, config=None):
    """Can the piece be deformed within the model onto the target vertex orbit?

    Returns (verdict, payload): ("yes", DeformationCertificate) |
    ("no", Obstruction) | ("unknown", None).
    """
    config = config or ToolConfig()
    piece = frozenset(piece)
    if not model.complex.is_subcomplex(piece):
        raise ComplexError("piece is not a subcomplex")
    if (target,) not in model.complex.simplices:
        raise ComplexError("target %r is not a vertex of the model" % (target,))
    ws = _Workspace(model, config)
    obstruction = ws.no_obstruction(piece, target)
    if obstruction is not None:
        return NO, obstruction
    cert = ws.certify(piece, target)
    if cert is not None:
        return YES, cert
    return UNKNOWN, None


def deformable_into(model, m_part, n_part, config=None):
    """Isotropy-monotone collapse of a region containing M onto a subcomplex
    of N; ("yes", certificate) or ("unknown", None) -- never "no"."""
    config = config or ToolConfig()
    m_part, n_part = frozenset(m_part), frozenset(n_part)
    for part, tag in ((m_part, "M"), (n_part, "N")):
        if not model.complex.is_subcomplex(part):
            raise ComplexError("%s is not a subcomplex" % tag)
    if m_part <= n_part:
        return YES, DeformationCertificate(model, m_part, m_part, ())
    ws = _Workspace(model, config)
    candidates = [(frozenset(m_part | n_part), n_part)]
    inter = m_part & n_part
    if inter:
        candidates.append((m_part, inter))
    for region, target in candidates:
        if not target:
            continue
        got = is_collapsible(model.complex, target, budget=config.budget,
                             admissible=ws.admissible, start=region)
        if got:
            return YES, DeformationCertificate(model, region, target, got.pairs)
    return UNKNOWN, None


# ---------------------------------------------------------------------------
# candidate pieces and exact covers

class CatPiece:
    """A certified candidate piece: simplices, certificates per target, and
    the piece weight (class count of the minimal-order certified target)."""

    def __init__(self, simplices, certificates):
        self.simplices = frozenset(simplices)
        self.certificates = dict(certificates)
        self.weight = None
        self.weight_group = None
        self.weight_target = None

    def finish(self, model):
        best = None
        for t in self.certificates:
            grp = model.label_group((t,))
            key = (len(grp), conjugacy_classes(grp)[1], t)
            if best is None or key < best[0]:
                best = (key, t, grp)
        if best is not None:
            _, t, grp = best
            self.weight = conjugacy_classes(grp)[1]
            self.weight_group = grp
            self.weight_target = t
        return self

    def __repr__(self):
        return "CatPiece(%d simplices, weight %s, targets %s)" % (
            len(self.simplices), self.weight, sorted(self.certificates))


def _candidate_regions(model, config):
    cx = model.complex
    stars = {v: cx.closed_star(v) for v in cx.vertices}
    cands = []
    seen = set()
    for r in range(1, config.depth + 1):
        for combo in combinations(sorted(cx.vertices), r):
            u = frozenset().union(*(stars[v] for v in combo))
            if u not in seen:
                seen.add(u)
                cands.append(u)
    return cands, seen


def certified_pieces(model, config=None):
    """All certified candidate pieces: unions of closed stars up to the
    configured depth, plus the per-target expansion pieces."""
    config = config or ToolConfig()
    ws = _Workspace(model, config)
    cands, seen = _candidate_regions(model, config)
    for t in sorted(model.complex.vertices):
        region, _cert = ws.expansion_piece(t)
        if region not in seen:
            seen.add(region)
            cands.append(region)

    pieces = []
    for u in cands:
        feasible = []
        for t in sorted(model.complex.vertices):
            if ws.no_obstruction(u, t) is None:
                grp = model.label_group((t,))
                feasible.append(((len(grp), conjugacy_classes(grp)[1], t), t))
        feasible.sort()
        certs = {}
        for _, t in feasible:
            region, cert = ws.expansion_piece(t)
            if u <= region:
                certs[t] = cert
        if not certs:
            for _, t in feasible[:4]:
                cert = ws.certify(u, t)
                if cert is not None:
                    certs[t] = cert
                    break
        if certs:
            pieces.append(CatPiece(u, certs).finish(model))
    return pieces, ws


def _min_cover(universe, sets):
    """Exact minimum cover by branch and bound; returns (size, chosen) or
    (None, None) when infeasible.  Ties break lexicographically."""
    universe = list(universe)
    cover_of = {e: [i for i, s in enumerate(sets) if e in s] for e in universe}
    if any(not v for v in cover_of.values()):
        return None, None
    best = [len(sets) + 1, None]

    def greedy_bound():
        left = set(universe)
        chosen = []
        while left:
            i = max(range(len(sets)), key=lambda i: (len(sets[i] & left), -i))
            if not sets[i] & left:
                break
            chosen.append(i)
            left -= sets[i]
        if not left:
            best[0], best[1] = len(chosen), sorted(chosen)

    greedy_bound()

    def dfs(left, chosen):
        if not left:
            if len(chosen) < best[0] or (len(chosen) == best[0]
                                         and (best[1] is None or chosen < best[1])):
                best[0], best[1] = len(chosen), list(chosen)
            return
        if len(chosen) + 1 > best[0]:
            return
        # cheap lower bound: one set per uncovered element's best coverage
        e = min(left, key=lambda e: (len(cover_of[e]), e))
        for i in cover_of[e]:
            if len(chosen) + 1 <= best[0]:
                dfs(left - sets[i], chosen + [i])

    dfs(set(universe), [])
    return (best[0], best[1]) if best[1] is not None else (None, None)


def _best_weighted_cover(universe, sets, weights, size):
    """Minimum total weight over covers of exactly-minimum size."""
    universe = set(universe)
    cover_of = {e: sorted((i for i, s in enumerate(sets) if e in s),
                          key=lambda i: (weights[i], i)) for e in universe}
    best = [None, None]

    def dfs(left, chosen, wsum):
        if not left:
            if best[0] is None or (wsum, chosen) < (best[0], best[1]):
                best[0], best[1] = wsum, list(chosen)
            return
        if len(chosen) == size:
            return
        if best[0] is not None and wsum > best[0]:
            return
        e = min(left, key=lambda e: (len(cover_of[e]), e))
        for i in cover_of[e]:
            if i in chosen:
                continue
            dfs(left - sets[i], chosen + [i], wsum + weights[i])

    dfs(set(universe), [], 0)
    return best[0], best[1]


class CatReport:
    """Lower/upper bounds with provenance, the realizing covering, weights."""

    def __init__(self, lower, upper, lower_tags, covering, pieces):
        self.lower = lower
        self.upper = upper
        self.lower_tags = tuple(lower_tags)
        self.covering = covering
        self.pieces = pieces

    @property
    def bounds(self):
        return (self.lower, self.upper)

    def exact(self):
        return self.upper is not None and self.lower == self.upper

    def __repr__(self):
        return "CatReport(lower=%s, upper=%s)" % (self.lower, self.upper)


def _target_cover_bound(ws, vertex_pool):
    """Minimum number of reachability sets S_t needed to cover the vertices:
    a sound lower bound for the number of categorical pieces."""
    verts = sorted(vertex_pool)
    if not verts:
        return 0
    sets = []
    for t in sorted(ws.model.complex.vertices):
        s = frozenset(v for v in verts
                      if embeds(ws.model.label_group((v,)),
                                ws.model.label_group((t,)))
                      and ws.can_reach(v, t))
        sets.append(s)
    size, _ = _min_cover(verts, sets)
    return size if size is not None else len(verts)


def cat_bounds(model, config=None):
    """Certified bounds for the least number of categorical pieces covering
    the model.  Upper: exact minimum set cover over certified pieces.
    Lower: max of cup-length+1, the twisted-sector bound, and the
    target-cover obstruction count."""
    config = config or ToolConfig()
    if not model.complex.simplices:
        return CatReport(0, 0, (("empty", 0),), [], [])
    pieces, ws = certified_pieces(model, config)
    if not pieces:
        raise ComplexError("candidate family is empty (degenerate model)")
    facets = model.complex.facets()
    sets = [frozenset(f for f in facets if f in p.simplices) for p in pieces]
    size, chosen = _min_cover(facets, sets)
    covering = [pieces[i] for i in chosen] if chosen is not None else []

    tags = []
    cup = cup_length_z2(model.complex) + 1
    tags.append(("cup-length", cup))
    obstruction = _target_cover_bound(ws, model.complex.vertices)
    tags.append(("obstruction", obstruction))
    sector_bound = 0
    if config.sector_depth > 0 and not model.is_trivially_labeled():
        sub_config = ToolConfig(config.depth, config.budget, config.verbose,
                                sector_depth=config.sector_depth - 1)
        for sector in sectors_simplicial(model).twisted():
            rep = cat_bounds(sector.submodel, sub_config)
            sector_bound = max(sector_bound, rep.lower)
        tags.append(("sector", sector_bound))
    lower = max(cup, obstruction, sector_bound)
    return CatReport(lower, size, tags, covering, pieces)


def weight(model, piece, config=None):
    """Conjugacy-class count of the minimal-order group through which the
    piece factors (over all targets with YES certificates)."""
    config = config or ToolConfig()
    piece = frozenset(piece)
    ws = _Workspace(model, config)
    best = None
    for t in sorted(model.complex.vertices):
        if ws.no_obstruction(piece, t) is not None:
            continue
        cert = ws.certify(piece, t)
        if cert is None:
            continue
        grp = model.label_group((t,))
        key = (len(grp), conjugacy_classes(grp)[1], t)
        if best is None or key < best:
            best = key
    if best is None:
        raise ComplexError("piece has no YES certificate")
    return best[1]


class WcatReport:
    def __init__(self, value, interval, covering):
        self.value = value
        self.interval = interval
        self.covering = covering

    def __repr__(self):
        return "WcatReport(%s)" % (self.value if self.value is not None
                                   else "interval %s..%s" % self.interval)


def wcat(model, config=None):
    """Least total weight over minimum coverings; an interval when the cat
    bounds are not tight."""
    config = config or ToolConfig()
    rep = cat_bounds(model, config)
    if rep.upper is None:
        return WcatReport(None, (rep.lower, None), [])
    facets = model.complex.facets()
    sets = [frozenset(f for f in facets if f in p.simplices) for p in rep.pieces]
    weights = [p.weight for p in rep.pieces]
    total, chosen = _best_weighted_cover(facets, sets, weights, rep.upper)
    covering = [rep.pieces[i] for i in chosen] if chosen else []
    if not rep.exact():
        return WcatReport(None, (rep.lower, total), covering)
    return WcatReport(total, None, covering)


def relative_cat(model, part, config=None):
    """Least number of categorical pieces covering the given subcomplex.

    Bounds are localized: restricted cup length of the model's classes and
    the target-cover count over the part's vertices."""
    config = config or ToolConfig()
    part = frozenset(part)
    if not model.complex.is_subcomplex(part):
        raise ComplexError("part is not a subcomplex")
    if part == model.complex.simplices:
        return cat_bounds(model, config)
    if not part:
        return CatReport(0, 0, (("empty", 0),), [], [])
    pieces, ws = certified_pieces(model, config)
    sub = model.complex.restrict(part)
    facets = sub.facets()
    sets = [frozenset(f for f in facets if f in p.simplices) for p in pieces]
    size, chosen = _min_cover(facets, sets)
    covering = [pieces[i] for i in chosen] if chosen is not None else []
    cup = cup_length_z2(model.complex, within=part) + 1
    obstruction = _target_cover_bound(ws, sub.vertices)
    lower = max(cup, obstruction)
    tags = (("cup-length", cup), ("obstruction", obstruction))
    return CatReport(lower, size, tags, covering, pieces)


class InertiaCatReport:
    """Sector-by-sector cat bounds of the inertia model, their sum, wcat of
    the base model, and the conjecture verdict."""

    def __init__(self, sector_bounds, total, wcat_report, verdict):
        self.sector_bounds = tuple(sector_bounds)
        self.total = total
        self.wcat = wcat_report
        self.verdict = verdict

    def __repr__(self):
        return "InertiaCatReport(total=%s, wcat=%s, %s)" % (
            self.total, self.wcat.value, self.verdict)


def inertia_cat_report(model, config=None):
    """cat of the inertia model = sum of sector cat bounds (disjoint union is
    additive); compared against wcat of the model."""
    config = config or ToolConfig()
    if isinstance(model, SimplicialGComplex):
        base = quotient_orbifold_complex(model)
    else:
        base = model
    sub_config = ToolConfig(config.depth, config.budget, config.verbose,
                            sector_depth=0)
    sector_bounds = []
    lo = hi = 0
    for sector in sectors_simplicial(model):
        rep = cat_bounds(sector.submodel if sector.twisted else base,
                         sub_config if sector.twisted else config)
        sector_bounds.append((sector.sector_id, rep.bounds))
        lo += rep.lower
        hi = None if hi is None or rep.upper is None else hi + rep.upper
    total = (lo, hi)
    w = wcat(base, config)
    if hi is not None and lo == hi and w.value is not None:
        verdict = "equal" if w.value == hi else "unequal"
    else:
        verdict = "undetermined"
    return InertiaCatReport(sector_bounds, total, w, verdict)
