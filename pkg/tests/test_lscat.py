import pytest

from orbicat.complexes import ComplexError, barycentric_subdivision_model
from orbicat.groups import cyclic_group
from orbicat.lscat import (ToolConfig, cat_bounds, deformable_into,
                           inertia_cat_report, is_categorical, relative_cat,
                           wcat, weight)
from orbicat.zoo import (dihedral_disk_model, dihedral_sphere, klein_model,
                         octahedron_model, teardrop_model)


def test_config_validation():
    with pytest.raises(ValueError):
        ToolConfig(depth=0)
    with pytest.raises(ValueError):
        ToolConfig(budget=0)


def test_is_categorical_star_of_trivial_vertex():
    m = octahedron_model()
    star = m.complex.closed_star("S")
    verdict, cert = is_categorical(m, star, "S")
    assert verdict == "yes"
    assert cert.verify()


def test_is_categorical_klein_whole_is_no():
    m = klein_model()
    verdict, obstruction = is_categorical(m, m.complex.simplices, "k0")
    assert verdict == "no"
    assert obstruction.kind == "isotropy-injection"
    assert "k3" in obstruction.detail


def test_is_categorical_teardrop_chart():
    m = teardrop_model()
    star = m.complex.closed_star("N")
    verdict, cert = is_categorical(m, star, "N")
    assert verdict == "yes"
    assert cert.verify()


def test_is_categorical_homology_obstruction():
    m = octahedron_model()
    ring = m.complex.full_subcomplex(["e0", "e1", "e2", "e3"])
    verdict, obstruction = is_categorical(m, ring, "e0")
    assert verdict == "no"
    assert obstruction.kind == "homology"


def test_is_categorical_rejects_bad_inputs():
    m = octahedron_model()
    with pytest.raises(ComplexError):
        is_categorical(m, frozenset({("N", "e0")}), "N")   # not a subcomplex
    with pytest.raises(ComplexError):
        is_categorical(m, m.complex.closed_star("N"), "nope")


def test_certificates_are_isotropy_monotone():
    m = klein_model()
    star = m.complex.closed_star("k1")
    verdict, cert = is_categorical(m, star, "k0")
    assert verdict == "yes"
    for (s, t), checks in cert.injections.items():
        rhos = [rho for rho, _ in checks]
        assert t in rhos   # the coface itself is constrained too


def test_cat_bounds_teardrop():
    rep = cat_bounds(teardrop_model())
    assert rep.bounds == (2, 2)
    assert dict(rep.lower_tags)["cup-length"] == 2


def test_cat_bounds_klein():
    rep = cat_bounds(klein_model())
    assert rep.bounds == (2, 2)
    assert dict(rep.lower_tags)["obstruction"] == 2


def test_cat_bounds_dihedral():
    rep = cat_bounds(dihedral_disk_model())
    assert rep.bounds == (2, 2)
    assert dict(rep.lower_tags)["sector"] == 2


def test_cat_bounds_sphere():
    rep = cat_bounds(octahedron_model())
    assert rep.bounds == (2, 2)


def test_cat_bounds_point():
    from orbicat.complexes import OrbifoldComplex, SimplicialComplex
    m = OrbifoldComplex(SimplicialComplex([("p",)]), cyclic_group(3),
                        {("p",): frozenset({0, 1, 2})})
    rep = cat_bounds(m)
    assert rep.bounds == (1, 1)


def test_every_covering_piece_certificate_replays():
    for model in (teardrop_model(), klein_model(), dihedral_disk_model()):
        rep = cat_bounds(model)
        assert rep.covering
        for piece in rep.covering:
            cert = piece.certificates[piece.weight_target]
            assert cert.verify()


def test_weight_values():
    m = teardrop_model()
    south = m.complex.closed_star("S")
    assert weight(m, south) == 1
    north = m.complex.closed_star("N")
    assert weight(m, north) == 3
    d = dihedral_disk_model()
    rep = cat_bounds(d)
    n_piece = next(p for p in rep.covering if ("N",) in p.simplices)
    assert n_piece.weight == 5
    with pytest.raises(ComplexError, match="certificate"):
        ring = octahedron_model().complex.full_subcomplex(
            ["e0", "e1", "e2", "e3"])
        weight(octahedron_model(), ring)


def test_wcat_values():
    assert wcat(teardrop_model()).value == 4
    assert wcat(dihedral_disk_model()).value == 10
    assert wcat(klein_model()).value == 4
    # a manifold model: wcat equals cat
    got = wcat(octahedron_model())
    assert got.value == cat_bounds(octahedron_model()).upper == 2


def test_relative_cat_whole_is_cat():
    m = teardrop_model()
    rep = relative_cat(m, m.complex.simplices)
    assert rep.bounds == cat_bounds(m).bounds


def test_relative_cat_vertex():
    m = octahedron_model()
    rep = relative_cat(m, m.complex.full_subcomplex(["S"]))
    assert rep.bounds == (1, 1)


def test_relative_cat_two_poles():
    d = dihedral_disk_model()
    poles = d.complex.full_subcomplex(["N", "S"])
    rep = relative_cat(d, poles)
    assert rep.bounds == (2, 2)


def test_relative_cat_empty():
    m = octahedron_model()
    rep = relative_cat(m, frozenset())
    assert rep.bounds == (0, 0)


def test_relative_cat_monotone_p1():
    m = dihedral_disk_model()
    small = m.complex.full_subcomplex(["N"])
    mid = m.complex.full_subcomplex(["N", "q0", "q1"])
    big = m.complex.simplices
    reps = [relative_cat(m, part) for part in (small, mid, big)]
    for a, b in zip(reps, reps[1:]):
        assert a.upper <= b.upper
        assert a.lower <= b.lower


def test_relative_cat_subadditive_p2():
    m = octahedron_model()
    north = m.complex.closed_star("N")
    south = m.complex.closed_star("S")
    union = frozenset(north | south)
    ra = relative_cat(m, north)
    rb = relative_cat(m, south)
    ru = relative_cat(m, union)
    assert ru.upper <= ra.upper + rb.upper


def test_deformable_into_subset_trivial():
    m = klein_model()
    small = m.complex.full_subcomplex(["k0"])
    big = m.complex.full_subcomplex(["k0", "k1"])
    verdict, cert = deformable_into(m, small, big)
    assert verdict == "yes" and cert.pairs == ()


def test_deformable_collar_and_p3():
    m = octahedron_model()
    disk = m.complex.full_subcomplex(["S", "e0", "e1", "e2", "e3"])
    point = m.complex.full_subcomplex(["S"])
    verdict, cert = deformable_into(m, disk, point)
    assert verdict == "yes"
    assert cert.verify()
    # P3: M deformable into N implies relcat(M) <= relcat(N)
    assert relative_cat(m, disk).upper <= relative_cat(m, point).upper


def test_deformable_unknown_for_blocked_motion():
    m = klein_model()
    whole = m.complex.simplices
    end = m.complex.full_subcomplex(["k0"])
    verdict, _ = deformable_into(m, whole, end)
    assert verdict == "unknown"


def test_inertia_cat_teardrop():
    rep = inertia_cat_report(teardrop_model())
    assert rep.total == (4, 4)
    assert rep.wcat.value == 4
    assert rep.verdict == "equal"


def test_inertia_cat_dihedral_both_routes():
    for model in (dihedral_disk_model(), dihedral_sphere()):
        rep = inertia_cat_report(model)
        assert rep.total == (10, 10)
        assert rep.wcat.value == 10
        assert rep.verdict == "equal"


def test_inertia_cat_trivial_labels():
    rep = inertia_cat_report(octahedron_model())
    assert rep.total == (2, 2)
    assert rep.wcat.value == 2
    assert rep.verdict == "equal"


def test_subdivision_invariance_of_bounds():
    for model in (teardrop_model(), klein_model()):
        sd = barycentric_subdivision_model(model)
        assert cat_bounds(sd).bounds == cat_bounds(model).bounds
        assert wcat(sd).value == wcat(model).value
