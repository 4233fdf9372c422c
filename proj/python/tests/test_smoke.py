import pytest

import honeymirror as hm


def test_census():
    c = hm.census(3)
    assert c["counts_by_dim"] == [24, 36, 14]
    assert c["types"][(1, 3)] == 8


def test_lattice_ball():
    ball = hm.lattice_ball(2, 1)
    assert len(ball) == 7
    assert [0, 0, 0] in ball


def test_skyscraper_stalk():
    d = hm.skyscraper_at(2, a=0)
    assert hm.stalk(d, 2, [0]) == (1, 0)
    assert hm.stalk(d, 2, [1]) == (0, 0)


def test_structure_sheaf_endomorphisms():
    o = hm.structure_mf(2, 0)
    assert hm.hom_cohomology(o, o) == (1, 0)
    assert hm.hom_cohomology(o, o, engine="truncation") == (1, 0)


def test_mirror_of_generator_hom():
    a = hm.aside_hom(hm.skyscraper_at(2, a=0), hm.skyscraper_at(2, [1, 0, 0], a=1))
    b = hm.hom_cohomology(hm.structure_mf(2, 0), hm.structure_mf(2, 1), weight=[1, 0, 0])
    assert a == b


def test_acyclicity():
    r = hm.check_acyclicity(2, [0, 1, 2])
    assert r["compositions_null"] and r["contractible"]


def test_generators():
    r = hm.check_generators(2, 1)
    assert r["verdict"] == "match"
    assert r["matched"] == r["cells"]


def test_report():
    report, verdict = hm.run_report("arboreal", n=2, radius=2)
    assert verdict == "match"
    assert report["schema"] == "honeymirror/1"


def test_config_error():
    with pytest.raises(hm.ConfigError):
        hm.run_report("mirror", n=9)


def test_bad_engine():
    o = hm.structure_mf(2, 0)
    with pytest.raises(ValueError):
        hm.hom_cohomology(o, o, engine="bogus")
