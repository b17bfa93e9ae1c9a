from fractions import Fraction

from orbicat.constructions import (disjoint_union, pair_groupoid,
                                   point_groupoid, product_groupoid,
                                   unit_groupoid)
from orbicat.equivalence import morita_equivalent
from orbicat.groupoid import isotropy, orbits, skeleton
from orbicat.groups import cyclic_group, dihedral_group, group_isomorphic
from orbicat.inertia import (baez_dolan_cardinality, inertia_groupoid,
                             inertia_orbit_count, model_cardinalities,
                             model_skeleton, model_skeleton_groupoid,
                             sectors_discrete, sectors_simplicial,
                             string_euler_cardinality)
from orbicat.zoo import (dihedral_disk_model, dihedral_sphere, klein_model,
                         octahedron_model, teardrop_groupoid, teardrop_model)


def test_inertia_of_unit_groupoid_is_unit():
    u = unit_groupoid(["a", "b", "c"])
    ig = inertia_groupoid(u)
    assert len(ig.objects) == 3
    assert len(ig.arrows) == 3
    assert all(ig.is_unit(a) for a in ig.arrows)


def test_inertia_of_z2_point():
    # oracle: enumerate 2 loops x 2 conjugators by hand
    z2pt = point_groupoid(cyclic_group(2))
    ig = inertia_groupoid(z2pt)
    assert len(ig.objects) == 2
    assert len(ig.arrows) == 4
    assert len(orbits(ig)) == 2
    for x in ig.objects:
        assert group_isomorphic(isotropy(ig, x), cyclic_group(2)) is not None


def test_inertia_translation_formula():
    # objects of the inertia of a translation-like groupoid are pairs (g, x)
    # with gx = x; conjugation moves them by h.(g,x) = (hx, hgh^-1)
    g = product_groupoid(pair_groupoid(["x", "y"]), point_groupoid(cyclic_group(2)))
    ig = inertia_groupoid(g)
    # two loops per object (e and r), conjugation identifies the two objects
    assert len(ig.objects) == 4
    assert len(orbits(ig)) == 2


def test_sectors_discrete_unit():
    dec = sectors_discrete(unit_groupoid(["a"]))
    assert len(dec) == 1 and not dec.sectors[0].twisted


def test_sectors_discrete_z2_point():
    dec = sectors_discrete(point_groupoid(cyclic_group(2)))
    assert len(dec) == 2
    assert len(dec.untwisted()) == 1
    assert len(dec.twisted()) == 1


def test_sectors_discrete_d8_point_matches_classes():
    dec = sectors_discrete(point_groupoid(dihedral_group(8)))
    assert len(dec) == 5
    assert len(dec.untwisted()) == 1


def test_baez_dolan_examples():
    assert baez_dolan_cardinality(unit_groupoid(list("abcde"))) == 5
    assert baez_dolan_cardinality(point_groupoid(cyclic_group(2))) == Fraction(1, 2)
    d8 = dihedral_group(8)
    two_poles = disjoint_union(point_groupoid(d8), point_groupoid(d8))
    assert baez_dolan_cardinality(two_poles) == Fraction(1, 4)


def test_string_euler_examples():
    assert string_euler_cardinality(point_groupoid(dihedral_group(8))) == 5
    assert string_euler_cardinality(point_groupoid(cyclic_group(6))) == 6
    assert string_euler_cardinality(unit_groupoid(list("abc"))) == 3


def test_string_euler_equals_inertia_orbits():
    g = teardrop_groupoid()
    assert string_euler_cardinality(g) == len(orbits(inertia_groupoid(g)))
    assert string_euler_cardinality(g) == inertia_orbit_count(g)


def test_cardinality_additive_and_multiplicative():
    a = teardrop_groupoid()
    b = point_groupoid(dihedral_group(8))
    assert baez_dolan_cardinality(disjoint_union(a, b)) == \
        baez_dolan_cardinality(a) + baez_dolan_cardinality(b)
    p = product_groupoid(point_groupoid(cyclic_group(2)),
                         point_groupoid(cyclic_group(3)))
    assert baez_dolan_cardinality(p) == Fraction(1, 6)


def test_inertia_morita_invariant_on_example():
    g = teardrop_groupoid()
    sk = skeleton(g)
    from orbicat.constructions import skeleton_groupoid
    h = skeleton_groupoid(sk)
    assert morita_equivalent(g, h)
    assert morita_equivalent(inertia_groupoid(g), inertia_groupoid(h))


def test_sectors_simplicial_teardrop():
    dec = sectors_simplicial(teardrop_model())
    assert len(dec) == 3
    assert len(dec.untwisted()) == 1
    twisted = dec.twisted()
    assert all(len(s.submodel.vertices) == 1 for s in twisted)


def test_sectors_simplicial_trivial_action():
    dec = sectors_simplicial(octahedron_model())
    assert len(dec) == 1 and not dec.sectors[0].twisted


def test_sectors_simplicial_dihedral_sphere():
    dec = sectors_simplicial(dihedral_sphere())
    assert len(dec) == 7
    twisted = dec.twisted()
    dims = sorted(s.submodel.complex.dim for s in twisted)
    assert dims == [0, 0, 0, 0, 1, 1]
    # the 1-dimensional sectors are silvered intervals with order-4 corners
    for s in twisted:
        if s.submodel.complex.dim == 1:
            orders = sorted(s.submodel.label_order((v,))
                            for v in s.submodel.vertices)
            assert orders == [2, 4, 4]


def test_sectors_agree_on_labeled_route():
    dec_action = sectors_simplicial(dihedral_sphere())
    dec_labels = sectors_simplicial(dihedral_disk_model())
    assert len(dec_action) == len(dec_labels)
    dims_a = sorted(s.submodel.complex.dim for s in dec_action.twisted())
    dims_l = sorted(s.submodel.complex.dim for s in dec_labels.twisted())
    assert dims_a == dims_l


def test_sectors_agree_on_zero_dimensional_models():
    # a 0-dimensional global quotient: Z3 fixing one point and a free orbit
    from orbicat.complexes import SimplicialComplex, SimplicialGComplex
    z3 = cyclic_group(3)
    cx = SimplicialComplex([("c",), ("x0",), ("x1",), ("x2",)])
    perm = {}
    for k in range(3):
        g = z3.elements[k]
        p = {"c": "c"}
        for i in range(3):
            p["x%d" % i] = "x%d" % ((i + k) % 3)
        perm[g] = p
    gc = SimplicialGComplex(cx, z3, perm)
    dec = sectors_simplicial(gc)
    from orbicat.complexes import quotient_orbifold_complex
    dec2 = sectors_simplicial(quotient_orbifold_complex(gc))
    assert len(dec) == len(dec2) == 3


def test_model_skeleton_teardrop():
    strata = model_skeleton(teardrop_model())
    assert sorted(len(s.group) for s in strata) == [1, 3]
    bd, se = model_cardinalities(teardrop_model())
    assert bd == Fraction(4, 3)
    assert se == 4


def test_model_skeleton_klein():
    bd, se = model_cardinalities(klein_model())
    assert bd == Fraction(2)
    assert se == 5


def test_model_skeleton_dihedral_disk():
    bd, se = model_cardinalities(dihedral_disk_model())
    # strata: two D8 corners, two Z2 arcs, one trivial interior
    assert bd == Fraction(1, 8) + Fraction(1, 8) + Fraction(1, 2) \
        + Fraction(1, 2) + 1
    assert se == 5 + 5 + 2 + 2 + 1


def test_model_skeleton_groupoid_matches_cardinalities():
    m = teardrop_model()
    g = model_skeleton_groupoid(m)
    assert baez_dolan_cardinality(g) == model_cardinalities(m)[0]
    assert string_euler_cardinality(g) == model_cardinalities(m)[1]
