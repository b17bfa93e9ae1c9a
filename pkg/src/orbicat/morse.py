"""Invariant PL functions on models: critical orbits via lower links,
sublevel models, deformation conditions D1-D3, and the critical-point
inequality harness.

The level separator epsilon is symbolic throughout: sublevels are sampled
strictly between consecutive critical values, never at a numeric tolerance.
"""

from fractions import Fraction

from .complexes import ComplexError, SimplicialComplex, is_collapsible
from .groups import embeds
from .lscat import (UNKNOWN, YES, ToolConfig, cat_bounds, deformable_into,
                    relative_cat)


class InvariantFunction:
    """A vertex -> exact rational assignment on the quotient complex.

    Degenerate inputs (equal values on adjacent vertices) are accepted and
    flagged; they produce conservative critical reports.
    """

    def __init__(self, model, values):
        self.model = model
        self.values = {v: Fraction(x) for v, x in values.items()}
        missing = [v for v in model.complex.vertices if v not in self.values]
        if missing:
            raise ComplexError("function undefined on vertices %s" % missing)
        self.degenerate = any(
            self.values[a] == self.values[b]
            for a, b in model.complex.edges())

    def __getitem__(self, v):
        return self.values[v]


class CriticalReport:
    """Ordered critical values; per value the critical vertex orbits, their
    labels, and the full sub-model over them."""

    def __init__(self, model, function, levels, degenerate):
        self.model = model
        self.function = function
        self.levels = tuple(levels)       # (value, (vertices), submodel)
        self.degenerate = degenerate

    @property
    def critical_values(self):
        return tuple(value for value, _, _ in self.levels)

    @property
    def critical_vertices(self):
        return tuple(v for _, vs, _ in self.levels for v in vs)

    def orbit_count(self):
        return len(self.critical_vertices)

    def __repr__(self):
        return "CriticalReport(%d levels, %d critical orbits%s)" % (
            len(self.levels), self.orbit_count(),
            ", degenerate" if self.degenerate else "")


def _lower_link(model, f, v):
    below = {w for w in model.complex.vertices
             if f[w] < f[v]}
    simps = set()
    for s in model.complex.proper_cofaces((v,)):
        rest = tuple(w for w in s if w != v)
        if all(w in below for w in rest):
            simps.add(rest)
    return SimplicialComplex(simps, name="lk-(%s)" % v)


def is_regular_vertex(model, f, v, config=None):
    """PL regularity: nonempty lower link, collapsible to a point, and the
    label descends (some lower-link vertex admits an embedding of label(v))."""
    config = config or ToolConfig()
    lk = _lower_link(model, f, v)
    if not lk.simplices:
        return False
    collapsed = False
    for t in lk.vertices:
        got = is_collapsible(lk, t, budget=config.budget)
        if got:
            collapsed = True
            break
        if got.verdict == UNKNOWN:
            # budget ran out: stay conservative, treat as critical
            return False
    if not collapsed:
        return False
    lab = model.label_group((v,))
    return any(embeds(lab, model.label_group((w,))) for w in lk.vertices)


def critical_orbits(model, f, config=None):
    """Critical report; vertex orbits of the quotient failing the regularity
    test, grouped by level in increasing order."""
    config = config or ToolConfig()
    if not isinstance(f, InvariantFunction):
        f = InvariantFunction(model, f)
    critical = [v for v in sorted(model.complex.vertices)
                if not is_regular_vertex(model, f, v, config)]
    by_value = {}
    for v in critical:
        by_value.setdefault(f[v], []).append(v)
    levels = []
    for value in sorted(by_value):
        vs = tuple(sorted(by_value[value]))
        sub = model.full_submodel(vs, name="K_%s" % value)
        levels.append((value, vs, sub))
    return CriticalReport(model, f, levels, f.degenerate)


def sublevel(model, f, c):
    """Full sub-model over the vertices with value <= c, labels restricted."""
    if not isinstance(f, InvariantFunction):
        f = InvariantFunction(model, f)
    keep = [v for v in model.complex.vertices if f[v] <= c]
    return model.full_submodel(keep, name="%s<=%s" % (model.name, c))


def _strictly_between(f, lo, hi):
    """A rational strictly between two values (symbolic epsilon surrogate)."""
    return (lo + hi) / 2


class DeformationConditionsReport:
    def __init__(self, d1, d2, d3):
        self.d1 = tuple(d1)   # (gap description, verdict)
        self.d2 = tuple(d2)
        self.d3 = d3

    def all_yes(self):
        return (all(v == YES for _, v in self.d1)
                and all(v == YES for _, v in self.d2)
                and self.d3[1] == YES)

    def __repr__(self):
        return "DeformationConditionsReport(D1=%s, D2=%s, D3=%s)" % (
            [v for _, v in self.d1], [v for _, v in self.d2], self.d3[1])


def verify_deformation_conditions(model, f, config=None):
    """D1 on each regular gap, D2 at each isolated critical value (with the
    closed-star neighborhood of the critical set), D3 above the top level."""
    config = config or ToolConfig()
    if not isinstance(f, InvariantFunction):
        f = InvariantFunction(model, f)
    report = critical_orbits(model, f, config)
    values = list(report.critical_values)
    d1 = []
    for lo, hi in zip(values, values[1:]):
        below = _just_below(f, hi)
        above = _just_above(f, lo)
        m_part = sublevel(model, f, below).complex.simplices
        n_part = sublevel(model, f, above).complex.simplices
        verdict, _ = deformable_into(model, m_part, n_part, config)
        d1.append(("gap %s..%s" % (lo, hi), verdict))
    d2 = []
    for value, vs, _sub in report.levels:
        star = frozenset().union(*(model.complex.closed_star(v) for v in vs))
        upper = set(sublevel(model, f, _just_above(f, value)).complex.simplices)
        star_vertices = {s[0] for s in star if len(s) == 1}
        rest = [v for v in model.complex.vertices
                if v not in star_vertices and f[v] <= value]
        m_part = model.complex.full_subcomplex(
            [v for v in rest if (v,) in upper])
        n_part = sublevel(model, f, _just_below(f, value)).complex.simplices
        if not m_part:
            d2.append(("level %s" % value, YES))
            continue
        verdict, _ = deformable_into(model, m_part, n_part, config)
        d2.append(("level %s" % value, verdict))
    top = max(values) if values else Fraction(0)
    whole = model.complex.simplices
    gc = sublevel(model, f, top).complex.simplices
    verdict, _ = deformable_into(model, whole, gc, config)
    d3 = ("above %s" % top, verdict)
    return DeformationConditionsReport(d1, d2, d3)


def _just_below(f, value):
    lower = [x for x in f.values.values() if x < value]
    return _strictly_between(f, max(lower), value) if lower \
        else value - 1


def _just_above(f, value):
    higher = [x for x in f.values.values() if x > value]
    return _strictly_between(f, value, min(higher)) if higher \
        else value + 1


class LSVerdict:
    def __init__(self, cat_lower, sum_upper, n_critical, verdict):
        self.cat_lower = cat_lower
        self.sum_upper = sum_upper
        self.n_critical = n_critical
        self.verdict = verdict

    def __repr__(self):
        return "LSVerdict(cat>=%s, sum=%s, critical=%d, %s)" % (
            self.cat_lower, self.sum_upper, self.n_critical, self.verdict)


def verify_ls_inequality(model, f, config=None):
    """PASS iff cat lower bound <= sum of relative cat upper bounds over the
    critical levels, and <= the number of critical orbits."""
    config = config or ToolConfig()
    if not isinstance(f, InvariantFunction):
        f = InvariantFunction(model, f)
    report = critical_orbits(model, f, config)
    cat = cat_bounds(model, config)
    total = 0
    for _value, _vs, sub in report.levels:
        rel = relative_cat(model, sub.complex.simplices, config)
        if rel.upper is None:
            total = None
            break
        total += rel.upper
    if total is None:
        verdict = UNKNOWN
    elif cat.lower <= total and cat.lower <= report.orbit_count():
        verdict = "PASS"
    else:
        verdict = "FAIL"
    return LSVerdict(cat.lower, total, report.orbit_count(), verdict)


def m_function(model, f, config=None):
    """Samples of m(c) = relative cat of the sublevel, at midpoints between
    consecutive critical values and beyond both extremes; also checks that
    upper bounds increase weakly and jump by at most the critical level's
    relative cat."""
    config = config or ToolConfig()
    if not isinstance(f, InvariantFunction):
        f = InvariantFunction(model, f)
    report = critical_orbits(model, f, config)
    values = list(report.critical_values)
    samples = []
    points = []
    if values:
        points.append(("below %s" % values[0], values[0] - 1))
        for lo, hi in zip(values, values[1:]):
            points.append(("between %s and %s" % (lo, hi),
                           _strictly_between(f, lo, hi)))
        points.append(("above %s" % values[-1], values[-1] + 1))
    for tag, c in points:
        part = sublevel(model, f, c).complex.simplices
        rel = relative_cat(model, part, config)
        samples.append((tag, c, rel.bounds))
    uppers = [b[1] for _, _, b in samples]
    weakly_increasing = all(
        a is None or b is None or a <= b for a, b in zip(uppers, uppers[1:]))
    jumps_ok = True
    for i, (_value, _vs, sub) in enumerate(report.levels):
        if i + 1 >= len(samples):
            break
        before, after = uppers[i], uppers[i + 1]
        if before is None or after is None:
            continue
        rel = relative_cat(model, sub.complex.simplices, config)
        if rel.upper is not None and after - before > rel.upper:
            jumps_ok = False
    return {"samples": samples, "weakly_increasing": weakly_increasing,
            "jumps_bounded": jumps_ok, "critical_values": values}
