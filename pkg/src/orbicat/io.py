"""Text formats: .grp (group), .gpd (groupoid), .ogx (model), .fn (function),
.gpath (branched path).  UTF-8, newline-delimited, '#' comments.

Every parser has a serializer and parse∘serialize∘parse is the identity on
validated values.  Parse errors carry line numbers.
"""

from fractions import Fraction

from .complexes import (ComplexError, GPathSegment, MultipleGPath,
                        OrbifoldComplex, SimplicialComplex,
                        SimplicialGComplex)
from .groupoid import GroupoidError, validate_groupoid
from .groups import AbstractGroup, GroupError


class ParseError(ValueError):
    def __init__(self, message, line=None):
        self.line = line
        super().__init__("line %s: %s" % (line, message) if line else message)


def _lines(text):
    out = []
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((i, line))
    return out


# ---------------------------------------------------------------------------
# .grp

def parse_group(text):
    """`group <name>`, `elements ...`, `table:` block (row-major, by element
    order, entries are element names)."""
    lines = _lines(text)
    name, elements, rows = None, None, []
    mode = None
    for ln, line in lines:
        tok = line.split()
        if tok[0] == "group" and mode is None:
            name = tok[1] if len(tok) > 1 else "G"
        elif tok[0] == "elements" and mode is None:
            elements = tok[1:]
        elif line == "table:":
            mode = "table"
        elif mode == "table":
            rows.append((ln, tok))
        else:
            raise ParseError("unexpected line %r" % line, ln)
    if elements is None:
        raise ParseError("missing `elements` line")
    if len(rows) != len(elements):
        raise ParseError("table has %d rows for %d elements"
                         % (len(rows), len(elements)))
    index = {e: i for i, e in enumerate(elements)}
    table = []
    for ln, tok in rows:
        if len(tok) != len(elements):
            raise ParseError("ragged table row", ln)
        try:
            table.append([index[t] for t in tok])
        except KeyError as exc:
            raise ParseError("unknown element %s in table" % exc, ln) from None
    try:
        return AbstractGroup(elements, table, name=name or "G")
    except GroupError as exc:
        raise ParseError(str(exc)) from None


def serialize_group(group):
    out = ["group %s" % group.name, "elements %s" % " ".join(group.elements),
           "table:"]
    for i in range(len(group)):
        out.append(" ".join(group.elements[group.table[i][j]]
                            for j in range(len(group))))
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# .gpd

def parse_groupoid(text, name="G"):
    """`objects ...`, `arrow f : x -> y`, `inverse f = g`, `compose g f = h`;
    units are implicit as id_<obj> with their unit compositions."""
    lines = _lines(text)
    objects = []
    arrows, source, target = [], {}, {}
    inverse, compose = {}, {}
    for ln, line in lines:
        tok = line.split()
        if tok[0] == "groupoid":
            name = tok[1] if len(tok) > 1 else name
        elif tok[0] == "objects":
            objects.extend(tok[1:])
        elif tok[0] == "arrow":
            if len(tok) != 6 or tok[2] != ":" or tok[4] != "->":
                raise ParseError("expected `arrow f : x -> y`", ln)
            arrows.append(tok[1])
            source[tok[1]], target[tok[1]] = tok[3], tok[5]
        elif tok[0] == "inverse":
            if len(tok) != 4 or tok[2] != "=":
                raise ParseError("expected `inverse f = g`", ln)
            inverse[tok[1]] = tok[3]
        elif tok[0] == "compose":
            if len(tok) != 5 or tok[3] != "=":
                raise ParseError("expected `compose g f = h`", ln)
            compose[(tok[1], tok[2])] = tok[4]
        else:
            raise ParseError("unexpected line %r" % line, ln)
    if not objects:
        raise ParseError("missing `objects` line")
    units = {}
    for x in objects:
        u = "id_%s" % x
        units[x] = u
        if u not in source:
            arrows.append(u)
            source[u], target[u] = x, x
        inverse.setdefault(u, u)
    for a in arrows:
        sx, tx = source.get(a), target.get(a)
        if sx in units:
            compose.setdefault((a, units[sx]), a)
        if tx in units:
            compose.setdefault((units[tx], a), a)
    try:
        return validate_groupoid(objects, arrows, source, target, units,
                                 inverse, compose, name=name)
    except GroupoidError as exc:
        raise ParseError(str(exc)) from None


def serialize_groupoid(g):
    out = ["groupoid %s" % g.name, "objects %s" % " ".join(g.objects)]
    units = set(g.unit.values())
    for a in g.arrows:
        if a in units:
            continue
        out.append("arrow %s : %s -> %s" % (a, g.source[a], g.target[a]))
    for a in g.arrows:
        if a in units:
            continue
        out.append("inverse %s = %s" % (a, g.inverse[a]))
    for (a, b), c in sorted(g.compose_map.items()):
        if a in units or b in units:
            continue
        out.append("compose %s %s = %s" % (a, b, c))
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# .ogx

def parse_model(text, name="model"):
    """A `group` block, a `complex:` block of `simplex ...` lines, then either
    a `labels:` block (`ambient <group>`, `label v ... -> elements`) or an
    `action:` block (`group <name>`, `perm g : a>b ...`).

    Labeled input returns an OrbifoldComplex; action input returns a
    SimplicialGComplex (quotient on demand).  Listed simplices must be
    downward closed.
    """
    lines = _lines(text)
    mode = None
    gname, elements, rows = None, None, []
    simplex_lines = []
    label_lines = []
    ambient_name = None
    action_group = None
    perm_lines = []
    model_name = name
    for ln, line in lines:
        tok = line.split()
        if tok[0] == "model":
            model_name = tok[1]
        elif tok[0] == "group" and mode is None:
            gname = tok[1] if len(tok) > 1 else "G"
        elif tok[0] == "elements" and mode in (None, "group"):
            elements = tok[1:]
        elif line == "table:":
            mode = "table"
        elif mode == "table" and line not in ("complex:", "labels:", "action:"):
            rows.append((ln, tok))
        elif line == "complex:":
            mode = "complex"
        elif line == "labels:":
            mode = "labels"
        elif line == "action:":
            mode = "action"
        elif mode == "complex":
            if tok[0] != "simplex":
                raise ParseError("expected `simplex v1 v2 ...`", ln)
            simplex_lines.append((ln, tuple(tok[1:])))
        elif mode == "labels":
            if tok[0] == "ambient":
                ambient_name = tok[1]
            elif tok[0] == "label":
                if "->" not in tok:
                    raise ParseError("expected `label v ... -> elements`", ln)
                k = tok.index("->")
                label_lines.append((ln, tuple(tok[1:k]), tok[k + 1:]))
            else:
                raise ParseError("unexpected line %r in labels block" % line, ln)
        elif mode == "action":
            if tok[0] == "group":
                action_group = tok[1]
            elif tok[0] == "perm":
                if len(tok) < 3 or tok[2] != ":":
                    raise ParseError("expected `perm g : a>b ...`", ln)
                moves = {}
                for move in tok[3:]:
                    if ">" not in move:
                        raise ParseError("bad move %r" % move, ln)
                    a, b = move.split(">", 1)
                    moves[a] = b
                perm_lines.append((ln, tok[1], moves))
            else:
                raise ParseError("unexpected line %r in action block" % line, ln)
        else:
            raise ParseError("unexpected line %r" % line, ln)

    if elements is None or not rows:
        group = None
    else:
        index = {e: i for i, e in enumerate(elements)}
        table = []
        for ln, tok in rows:
            if len(tok) != len(elements):
                raise ParseError("ragged table row", ln)
            try:
                table.append([index[t] for t in tok])
            except KeyError as exc:
                raise ParseError("unknown element %s in table" % exc, ln) from None
        try:
            group = AbstractGroup(elements, table, name=gname or "G")
        except GroupError as exc:
            raise ParseError(str(exc)) from None

    if not simplex_lines:
        raise ParseError("missing `complex:` block")
    try:
        cx = SimplicialComplex([s for _, s in simplex_lines], name=model_name)
    except ComplexError as exc:
        raise ParseError(str(exc), simplex_lines[0][0]) from None

    if perm_lines:
        if group is None:
            raise ParseError("action block without a group block")
        if action_group not in (None, group.name):
            raise ParseError("action references unknown group %r" % action_group)
        perms = _complete_action(group, cx, perm_lines)
        try:
            return SimplicialGComplex(cx, group, perms, name=model_name)
        except ComplexError as exc:
            raise ParseError(str(exc)) from None

    from .groups import trivial_group
    if group is None:
        group = trivial_group()
    if ambient_name not in (None, group.name):
        raise ParseError("labels reference unknown group %r" % ambient_name)
    labels = {}
    for ln, simplex, elems in label_lines:
        key = tuple(sorted(simplex))
        try:
            labels[key] = frozenset(group.index(e) for e in elems)
        except GroupError as exc:
            raise ParseError(str(exc), ln) from None
    try:
        return OrbifoldComplex(cx, group, labels, name=model_name)
    except ComplexError as exc:
        raise ParseError(str(exc)) from None


def _complete_action(group, cx, perm_lines):
    """Close generator permutations into a full homomorphic assignment."""
    perms = {group.elements[group.identity]: {v: v for v in cx.vertices}}
    for ln, gname, moves in perm_lines:
        if gname not in set(group.elements):
            raise ParseError("unknown element %r in action" % gname, ln)
        for v in cx.vertices:
            moves.setdefault(v, v)
        bad = [v for v in moves if v not in set(cx.vertices)]
        if bad:
            raise ParseError("permutation of %s moves unknown vertex %s"
                             % (gname, bad[0]), ln)
        perms[gname] = {v: moves[v] for v in cx.vertices}
    changed = True
    while changed:
        changed = False
        for g in list(perms):
            for h in list(perms):
                gh = group.mul_named(g, h)
                if gh not in perms:
                    perms[gh] = {v: perms[g][perms[h][v]] for v in cx.vertices}
                    changed = True
    missing = [g for g in group.elements if g not in perms]
    if missing:
        raise ParseError("action permutations do not generate: missing %s"
                         % missing[0])
    return perms


def serialize_model(model):
    if isinstance(model, SimplicialGComplex):
        out = ["model %s" % model.name]
        out.append(serialize_group(model.group).rstrip("\n"))
        out.append("complex:")
        for s in sorted(model.complex.simplices):
            out.append("simplex %s" % " ".join(s))
        out.append("action:")
        out.append("group %s" % model.group.name)
        for g in model.group.elements:
            moves = " ".join("%s>%s" % (v, model.vertex_perm[g][v])
                             for v in model.complex.vertices)
            out.append("perm %s : %s" % (g, moves))
        return "\n".join(out) + "\n"
    out = ["model %s" % model.name]
    out.append(serialize_group(model.ambient).rstrip("\n"))
    out.append("complex:")
    for s in sorted(model.complex.simplices):
        out.append("simplex %s" % " ".join(s))
    out.append("labels:")
    out.append("ambient %s" % model.ambient.name)
    triv = frozenset([model.ambient.identity])
    for s in sorted(model.complex.simplices):
        lab = model.label[s]
        if lab != triv:
            out.append("label %s -> %s"
                       % (" ".join(s),
                          " ".join(model.ambient.elements[i] for i in sorted(lab))))
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# .fn

def parse_function(text):
    """Lines `vertex p/q` (or `vertex n`)."""
    values = {}
    for ln, line in _lines(text):
        tok = line.split()
        if len(tok) != 2:
            raise ParseError("expected `vertex p/q`", ln)
        try:
            values[tok[0]] = Fraction(tok[1])
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(str(exc), ln) from None
    return values


def serialize_function(values):
    out = []
    for v in sorted(values):
        x = Fraction(values[v])
        out.append("%s %s" % (v, x))
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# .gpath

def parse_gpath(text):
    """`marks r0 r1 ...`; `segment:` blocks of `branch h : v1 v2 ...` lines;
    `connect g` lines between segments."""
    marks = None
    segments = []
    connecting = []
    current = None
    for ln, line in _lines(text):
        tok = line.split()
        if tok[0] == "gpath":
            continue
        if tok[0] == "marks":
            marks = tok[1:]
        elif line == "segment:":
            if current is not None:
                segments.append(current)
            current = ([], [])
        elif tok[0] == "branch":
            if current is None:
                raise ParseError("branch outside a segment block", ln)
            if len(tok) < 4 or tok[2] != ":":
                raise ParseError("expected `branch h : v1 v2 ...`", ln)
            current[1].append(tok[1])
            current[0].append(tuple(tok[3:]))
        elif tok[0] == "connect":
            if current is None:
                raise ParseError("connect before any segment", ln)
            segments.append(current)
            current = None
            connecting.append(tok[1])
        else:
            raise ParseError("unexpected line %r" % line, ln)
    if current is not None:
        segments.append(current)
    if marks is None:
        raise ParseError("missing `marks` line")
    try:
        return MultipleGPath(marks,
                             [GPathSegment(b, h) for b, h in segments],
                             connecting)
    except ComplexError as exc:
        raise ParseError(str(exc)) from None


def serialize_gpath(path):
    out = ["gpath", "marks %s" % " ".join(path.marks)]
    for i, seg in enumerate(path.segments):
        out.append("segment:")
        for br, h in zip(seg.branches, seg.branch_arrows):
            out.append("branch %s : %s" % (h, " ".join(br)))
        if i < len(path.connecting_arrows):
            out.append("connect %s" % path.connecting_arrows[i])
    return "\n".join(out) + "\n"


def load(path):
    """Parse a file by extension; returns the validated value."""
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    name = str(path)
    stem = name.rsplit("/", 1)[-1].rsplit(".", 1)[0]
    if name.endswith(".grp"):
        return parse_group(text)
    if name.endswith(".gpd"):
        return parse_groupoid(text, name=stem)
    if name.endswith(".ogx"):
        return parse_model(text, name=stem)
    if name.endswith(".fn"):
        return parse_function(text)
    if name.endswith(".gpath"):
        return parse_gpath(text)
    raise ParseError("unknown file extension for %r" % name)
