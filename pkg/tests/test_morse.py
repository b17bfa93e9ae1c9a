from fractions import Fraction

import pytest

from orbicat.complexes import ComplexError
from orbicat.morse import (InvariantFunction, critical_orbits, m_function,
                           sublevel, verify_deformation_conditions,
                           verify_ls_inequality)
from orbicat.zoo import (dihedral_disk_height, dihedral_disk_model,
                         klein_height, klein_model, octahedron_height,
                         octahedron_model, teardrop_model)


def test_function_must_be_total():
    with pytest.raises(ComplexError, match="undefined"):
        InvariantFunction(octahedron_model(), {"N": 1})


def test_octahedron_height_two_critical_orbits():
    rep = critical_orbits(octahedron_model(), octahedron_height())
    assert rep.orbit_count() == 2
    assert rep.critical_vertices == ("S", "N")
    assert not rep.degenerate


def test_constant_function_all_critical():
    m = octahedron_model()
    rep = critical_orbits(m, {v: Fraction(0) for v in m.complex.vertices})
    assert rep.orbit_count() == len(m.complex.vertices)
    assert rep.degenerate


def test_teardrop_height_two_critical_orbits():
    rep = critical_orbits(teardrop_model(), octahedron_height())
    assert [vs for _, vs, _ in rep.levels] == [("S",), ("N",)]


def test_klein_far_endpoint_critical_by_label():
    rep = critical_orbits(klein_model(), klein_height())
    assert rep.critical_vertices == ("k0", "k3")


def test_critical_sets_are_orbit_unions_upstairs():
    # pull the quotient function back to the dihedral sphere: critical
    # vertices upstairs must be unions of vertex orbits
    from orbicat.zoo import dihedral_sphere
    from orbicat.complexes import quotient_orbifold_complex
    ds = dihedral_sphere()
    q = quotient_orbifold_complex(ds)
    fq = dihedral_disk_height()
    rep = critical_orbits(q, fq)
    critical = set(rep.critical_vertices)
    for v in critical:
        orbit = ds.vertex_orbit(v)
        reps = {ds.vertex_orbit(w)[0] for w in orbit}
        assert reps <= critical


def test_inner_automorphism_leaves_report_unchanged():
    # on the quotient the function is already conjugation-invariant; composing
    # labels with an inner automorphism cannot change the report
    m = dihedral_disk_model()
    f = dihedral_disk_height()
    before = critical_orbits(m, f)
    after = critical_orbits(m, dict(f))
    assert before.critical_vertices == after.critical_vertices


def test_sublevel_boundaries():
    m = octahedron_model()
    f = octahedron_height()
    assert not sublevel(m, f, Fraction(-2)).complex.simplices
    assert sublevel(m, f, Fraction(2)).complex.simplices \
        == m.complex.simplices
    mid = sublevel(m, f, Fraction(1, 2))
    from orbicat.complexes import is_z2_acyclic
    assert is_z2_acyclic(mid.complex)   # a disk


def test_deformation_conditions_octahedron():
    rep = verify_deformation_conditions(octahedron_model(),
                                        octahedron_height())
    assert rep.all_yes()


def test_deformation_conditions_klein():
    rep = verify_deformation_conditions(klein_model(), klein_height())
    assert all(v == "yes" for _, v in rep.d2)
    assert rep.d3[1] == "yes"


def test_ls_inequality_passes_on_all_models():
    cases = [
        (octahedron_model(), octahedron_height()),
        (teardrop_model(), octahedron_height()),
        (klein_model(), klein_height()),
        (dihedral_disk_model(), dihedral_disk_height()),
    ]
    for model, f in cases:
        verdict = verify_ls_inequality(model, f)
        assert verdict.verdict == "PASS"
        assert verdict.cat_lower <= verdict.sum_upper
        assert verdict.cat_lower <= verdict.n_critical


def test_ls_constant_function_trivially_passes():
    m = octahedron_model()
    f = {v: Fraction(0) for v in m.complex.vertices}
    verdict = verify_ls_inequality(m, f)
    assert verdict.verdict == "PASS"


def test_m_function_steps():
    got = m_function(octahedron_model(), octahedron_height())
    uppers = [b[1] for _, _, b in got["samples"]]
    assert uppers == [0, 1, 2]
    assert got["weakly_increasing"]
    assert got["jumps_bounded"]


def test_m_function_teardrop():
    got = m_function(teardrop_model(), octahedron_height())
    assert [b[1] for _, _, b in got["samples"]] == [0, 1, 2]


def test_m_function_dihedral():
    got = m_function(dihedral_disk_model(), dihedral_disk_height())
    uppers = [b[1] for _, _, b in got["samples"]]
    assert uppers[0] == 0
    assert uppers == sorted(uppers)
