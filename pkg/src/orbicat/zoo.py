"""Hand-built example groups, groupoids, complexes and models used across the
test corpus and the CLI data files."""

from fractions import Fraction

from .complexes import (OrbifoldComplex, SimplicialComplex, SimplicialGComplex,
                        quotient_orbifold_complex)
from .constructions import GroupAction, translation_groupoid
from .groups import cyclic_group, dihedral_group, trivial_group


def octahedron_complex(name="sphere"):
    """Triangulated 2-sphere: square bipyramid with poles N and S."""
    ring = ["e0", "e1", "e2", "e3"]
    facets = []
    for i in range(4):
        a, b = ring[i], ring[(i + 1) % 4]
        facets.append(("N", a, b))
        facets.append(("S", a, b))
    return SimplicialComplex.from_facets(facets, name=name)


def solid_triangle(name="disk"):
    return SimplicialComplex.from_facets([("a", "b", "c")], name=name)


def circle_complex(n=3, name="circle"):
    return SimplicialComplex.from_facets(
        [("c%d" % i, "c%d" % ((i + 1) % n)) for i in range(n)], name=name)


def torus_complex(name="torus"):
    """The 7-vertex triangulated torus."""
    facets = []
    for i in range(7):
        facets.append(tuple(sorted(("v%d" % i, "v%d" % ((i + 1) % 7),
                                    "v%d" % ((i + 3) % 7)))))
        facets.append(tuple(sorted(("v%d" % i, "v%d" % ((i + 2) % 7),
                                    "v%d" % ((i + 3) % 7)))))
    return SimplicialComplex.from_facets(facets, name=name)


def rp2_complex(name="rp2"):
    """The 6-vertex real projective plane."""
    facets = [(1, 2, 4), (1, 2, 6), (1, 3, 4), (1, 3, 5), (1, 5, 6),
              (2, 3, 5), (2, 4, 5), (2, 3, 6), (3, 4, 6), (4, 5, 6)]
    return SimplicialComplex.from_facets(
        [tuple("p%d" % v for v in f) for f in facets], name=name)


def trivial_model(complex, name=None):
    return OrbifoldComplex(complex, trivial_group(), {}, name=name or complex.name)


def octahedron_model():
    return trivial_model(octahedron_complex(), name="sphere")


def teardrop_model():
    """Teardrop: sphere with one Z3 cone point at the north pole."""
    z3 = cyclic_group(3)
    full = frozenset(range(3))
    return OrbifoldComplex(octahedron_complex("teardrop"), z3,
                           {("N",): full}, name="teardrop")


def klein_model(length=3):
    """Seifert-fibration quotient of the Klein bottle: an interval with both
    endpoint labels the full Z2."""
    z2 = cyclic_group(2)
    verts = ["k%d" % i for i in range(length + 1)]
    edges = [tuple(sorted((verts[i], verts[i + 1]))) for i in range(length)]
    cx = SimplicialComplex.from_facets(edges, name="klein")
    full = frozenset(range(2))
    return OrbifoldComplex(cx, z2, {(verts[0],): full, (verts[-1],): full},
                           name="klein")


def hexagon_reflection():
    """Z2 reflection of a hexagonal circle; its quotient is the Klein interval."""
    cx = circle_complex(6, name="hexagon")
    z2 = cyclic_group(2)
    refl = {"c%d" % i: "c%d" % ((6 - i) % 6) for i in range(6)}
    perm = {"e": {v: v for v in cx.vertices}, "r": refl}
    return SimplicialGComplex(cx, z2, perm, name="hexagon:Z2")


def dihedral_sphere():
    """D8 acting on the octagonal bipyramid sphere: rotations about the poles,
    reflections through mirror meridians."""
    ring = ["q%d" % i for i in range(8)]
    facets = []
    for i in range(8):
        a, b = ring[i], ring[(i + 1) % 8]
        facets.append(("N", a, b))
        facets.append(("S", a, b))
    cx = SimplicialComplex.from_facets(facets, name="d8sphere")
    d8 = dihedral_group(8)
    perm = {}
    for f in (0, 1):
        for k in range(4):
            name = d8.elements[2 * k + f]
            p = {"N": "N", "S": "S"}
            for i in range(8):
                j = (i + 2 * k) % 8
                if f:
                    j = (-j) % 8
                p["q%d" % i] = "q%d" % j
            perm[name] = p
    return SimplicialGComplex(cx, d8, perm, name="d8sphere")


def dihedral_disk_model():
    """The quotient of the D8 sphere: a disk with silvered boundary and two
    dihedral corner points."""
    return quotient_orbifold_complex(dihedral_sphere(), name="d8disk")


def z3_disk_action():
    """Z3 rotating a triangulated disk about its fixed center vertex."""
    ring = ["m%d" % i for i in range(3)]
    facets = [("c", ring[i], ring[(i + 1) % 3]) for i in range(3)]
    cx = SimplicialComplex.from_facets(facets, name="z3disk")
    z3 = cyclic_group(3)
    perm = {}
    for k in range(3):
        name = z3.elements[k]
        p = {"c": "c"}
        for i in range(3):
            p["m%d" % i] = "m%d" % ((i + k) % 3)
        perm[name] = p
    return SimplicialGComplex(cx, z3, perm, name="z3disk:Z3")


def teardrop_groupoid():
    """A finite groupoid with the teardrop's stratum skeleton: Z3 fixing a
    point, plus a free Z3 orbit (Baez-Dolan cardinality 1/3 + 1 = 4/3)."""
    z3 = cyclic_group(3)
    pts = ["c", "x0", "x1", "x2"]
    act = {}
    for k in range(3):
        g = z3.elements[k]
        act[(g, "c")] = "c"
        for i in range(3):
            act[(g, "x%d" % i)] = "x%d" % ((i + k) % 3)
    return translation_groupoid(GroupAction(z3, pts, act), name="teardrop-skel")


def octahedron_height():
    """Injective height on the octahedron: 2 critical orbits (min and max)."""
    return {"S": Fraction(-1), "e0": Fraction(0), "e1": Fraction(1, 10),
            "e2": Fraction(2, 10), "e3": Fraction(3, 10), "N": Fraction(1)}


def klein_height(length=3):
    return {"k%d" % i: Fraction(i) for i in range(length + 1)}


def dihedral_disk_height():
    return {"N": Fraction(0), "q0": Fraction(1), "q1": Fraction(2),
            "S": Fraction(3)}
