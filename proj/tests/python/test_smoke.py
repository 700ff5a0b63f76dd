import pytest

import twistlink


def load(corpus, name):
    return twistlink.Diagram.parse((corpus / name).read_text())


def test_onefoil_values(corpus):
    d = load(corpus, "onefoil.tld")
    assert d.validate() == []
    assert sorted(d.twisted_jones()) == [(-6, 0, 1), (-2, 0, 1), (-2, 2, -1)]
    assert d.jones() == [(0, 0, 1)]
    assert d.carrier()["total_euler_genus"] == 2
    assert d.carrier()["orientable"] == [False]


def test_groups(corpus):
    d = load(corpus, "torus1212.tld")
    g = d.group().simplify()
    assert g.count_homs(3) == 36
    assert g.abelianization() == [0, 0]
    assert d.group("upper").simplify().abelianization() == [0]
    assert load(corpus, "twofoil.tld").group().simplify().count_homs(3) == 30


def test_moves_and_walks(corpus):
    u = load(corpus, "unknot.tld")
    d = u.apply("T2 expand a")
    assert "T2 reduce a" in d.moves(["T2"])
    assert d.apply("T2 reduce a") == u
    with pytest.raises(ValueError):
        u.apply("T2 reduce a")
    w, trace = load(corpus, "onefoil.tld").walk(seed=4, steps=6)
    assert len(trace) == 6
    assert w.twisted_jones() == load(corpus, "onefoil.tld").twisted_jones()


def test_realize_and_search(corpus):
    t = load(corpus, "torus1212.tld")
    r = t.realize()
    assert r.virtual >= 1
    assert r.abstract_code() == t.abstract_code()
    path = twistlink.equiv(load(corpus, "unknot.tld"), load(corpus, "fig4-rightmost.tld"), 3)
    assert [s.split()[0] for s in path] == ["T2", "V1", "R2"]


def test_parse_errors():
    with pytest.raises(ValueError, match="edge multiplicity"):
        twistlink.Diagram.parse("X c -a +b +a -c\n")
