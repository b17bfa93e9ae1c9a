import pytest

from orbicat.constructions import (GroupAction, disjoint_union,
                                   fibered_product, full_subgroupoid,
                                   inclusion_functor, orbit_groupoid,
                                   pair_groupoid, point_groupoid,
                                   product_groupoid, skeleton_groupoid,
                                   translation_groupoid, unit_groupoid)
from orbicat.equivalence import is_essential_equivalence, morita_equivalent
from orbicat.groupoid import (GroupoidError, check_functor,
                              identity_functor, isotropy, orbits, skeleton)
from orbicat.groups import (GroupError, cyclic_group, dihedral_group,
                            group_isomorphic, product_group, trivial_group)


def swap_action():
    z2 = cyclic_group(2)
    return GroupAction(z2, ["a", "b"],
                       {("e", "a"): "a", ("e", "b"): "b",
                        ("r", "a"): "b", ("r", "b"): "a"})


def test_unit_groupoid_sizes():
    g = unit_groupoid(["x"])
    assert (len(g.objects), len(g.arrows)) == (1, 1)
    g = unit_groupoid(["x", "y"])
    assert (len(g.objects), len(g.arrows)) == (2, 2)
    assert len(unit_groupoid(list("abcde")).objects) == 5
    with pytest.raises(GroupoidError):
        unit_groupoid([])


def test_pair_groupoid_sizes_and_skeleton():
    assert len(pair_groupoid(["x"]).arrows) == 1
    assert len(pair_groupoid(["x", "y"]).arrows) == 4
    sk = skeleton(pair_groupoid(["x", "y", "z"]))
    assert len(sk) == 1 and len(sk.records[0].group) == 1


def test_point_groupoid():
    assert len(point_groupoid(trivial_group()).arrows) == 1
    assert len(point_groupoid(cyclic_group(2)).arrows) == 2
    assert len(isotropy(point_groupoid(dihedral_group(8)), "pt")) == 8


def test_translation_trivial_group_is_unit():
    t = translation_groupoid(
        GroupAction(trivial_group(), ["a", "b"],
                    {("e", "a"): "a", ("e", "b"): "b"}))
    assert len(t.arrows) == 2
    assert orbits(t) == [("a",), ("b",)]


def test_translation_swap_morita_trivial():
    t = translation_groupoid(swap_action())
    assert orbits(t) == [("a", "b")]
    assert morita_equivalent(t, unit_groupoid(["p"]))


def test_translation_disk_center_isotropy():
    z3 = cyclic_group(3)
    act = {}
    for k in range(3):
        g = z3.elements[k]
        act[(g, "c")] = "c"
        for i in range(3):
            act[(g, "m%d" % i)] = "m%d" % ((i + k) % 3)
    t = translation_groupoid(GroupAction(z3, ["c", "m0", "m1", "m2"], act))
    assert group_isomorphic(isotropy(t, "c"), z3) is not None
    # orbit blocks equal action orbits; isotropy equals the stabilizer
    action_orbits = [("c",), ("m0", "m1", "m2")]
    assert orbits(t) == action_orbits


def test_action_validator_rejects_bad_action():
    z2 = cyclic_group(2)
    with pytest.raises(GroupError):
        GroupAction(z2, ["a", "b"],
                    {("e", "a"): "a", ("e", "b"): "b",
                     ("r", "a"): "b", ("r", "b"): "b"})   # not a permutation


def test_product_with_trivial_is_same_shape():
    g = pair_groupoid(["x", "y"])
    p = product_groupoid(g, unit_groupoid(["p"]))
    assert len(p.objects) == 2 and len(p.arrows) == 4
    assert morita_equivalent(p, g)


def test_product_isotropy_is_direct_product():
    z2pt = point_groupoid(cyclic_group(2))
    p = product_groupoid(z2pt, z2pt)
    got = isotropy(p, "pt|pt")
    want = product_group(cyclic_group(2), cyclic_group(2))
    assert group_isomorphic(got, want) is not None


def test_product_orbit_count_multiplies():
    a = unit_groupoid(["a", "b"])
    b = pair_groupoid(["x", "y"])
    assert len(orbits(product_groupoid(a, b))) == 2


def test_disjoint_union_two_units():
    u = disjoint_union(unit_groupoid(["p"]), unit_groupoid(["p"]))
    assert len(orbits(u)) == 2


def test_disjoint_union_skeleton_concatenates():
    a = point_groupoid(cyclic_group(2))
    b = pair_groupoid(["x", "y"])
    u = disjoint_union(a, b)
    sk = skeleton(u)
    assert [len(r.group) for r in sk] == [2, 1]


def test_full_subgroupoid_whole_and_orbit():
    t = translation_groupoid(swap_action())
    whole = full_subgroupoid(t, t.objects)
    assert len(whole.arrows) == len(t.arrows)
    u = disjoint_union(t, point_groupoid(cyclic_group(3)))
    orb = orbit_groupoid(u, "R:pt")
    assert len(orb.objects) == 1 and len(orb.arrows) == 3


def test_full_subgroupoid_rejects_non_invariant():
    t = translation_groupoid(swap_action())
    with pytest.raises(GroupoidError, match="invariant"):
        full_subgroupoid(t, ["a"])


def test_full_subgroupoid_stabilizer_block():
    z2 = cyclic_group(2)
    act = {("e", "f"): "f", ("r", "f"): "f",
           ("e", "a"): "a", ("e", "b"): "b",
           ("r", "a"): "b", ("r", "b"): "a"}
    t = translation_groupoid(GroupAction(z2, ["f", "a", "b"], act))
    sub = full_subgroupoid(t, ["f"])
    assert morita_equivalent(sub, point_groupoid(z2))


def test_fibered_product_of_identities():
    g = pair_groupoid(["x", "y"])
    fp = fibered_product(identity_functor(g), identity_functor(g))
    # objects are triples (x, connecting arrow, y): one per arrow of g
    assert len(fp.groupoid.objects) == len(g.arrows)
    assert is_essential_equivalence(fp.left)
    assert is_essential_equivalence(fp.right)


def test_fibered_product_into_trivial_is_product():
    one = unit_groupoid(["p"])
    a = point_groupoid(cyclic_group(2))
    fa = inclusion_functor(one, one)
    collapse_a = check_functor(a, one, {"pt": "p"},
                               {x: "id_p" for x in a.arrows})
    fp = fibered_product(collapse_a, fa)
    assert len(fp.groupoid.objects) == 1
    assert group_isomorphic(isotropy(fp.groupoid, fp.groupoid.objects[0]),
                            cyclic_group(2)) is not None


def test_fibered_product_pullback_of_essential_is_essential():
    # psi: inclusion of one object into Pair(2) is an essential equivalence;
    # the first projection of the pullback along any functor stays essential
    g = pair_groupoid(["x", "y"])
    one = unit_groupoid(["w"])
    psi = check_functor(one, g, {"w": "x"}, {"id_w": "id_x"})
    phi = identity_functor(g)
    fp = fibered_product(phi, psi)
    assert is_essential_equivalence(psi)
    assert is_essential_equivalence(fp.left)


def test_skeleton_groupoid_idempotent():
    t = translation_groupoid(swap_action())
    u = disjoint_union(t, point_groupoid(cyclic_group(3)))
    sk = skeleton(u)
    rebuilt = skeleton_groupoid(sk)
    sk2 = skeleton(rebuilt)
    assert len(sk) == len(sk2)
    for a, b in zip(sk.records, sk2.records):
        assert group_isomorphic(a.group, b.group) is not None
