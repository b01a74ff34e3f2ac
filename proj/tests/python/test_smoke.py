import pytest

r = pytest.importorskip("recol_graphs")


def test_family_and_decide():
    c6 = r.build_family("c6")
    assert c6.n == 6 and c6.m == 6
    assert r.chromatic_number(c6) == 2
    d = r.decide_recolorable(c6)
    assert not d.recolorable
    core = c6.induced(d.core)
    assert r.check_frozen(core, d.witness, d.witness_ell)

    pet = r.build_family("petersen")
    assert r.decide_recolorable(pet).recolorable


def test_oracle_c6():
    c6 = r.build_family("c6")
    s = r.reconfig_summary(c6, 3)
    assert s.num_colorings == 66
    assert s.num_frozen == 6
    assert not s.connected
    assert r.is_mixing(c6, 4)
    assert r.reconfig_diameter(c6, 4) <= 24


def test_path_roundtrip():
    g = r.build_family("h1:2")
    ell = r.chromatic_number(g) + 1
    phi = r.optimal_coloring(g)
    psi = list(phi)
    # a different proper coloring: move any vertex with a spare color
    for v in range(g.n):
        seen = {phi[w] for w in g.neighbors(v)}
        for c in range(1, ell + 1):
            if c != phi[v] and c not in seen:
                psi[v] = c
                break
        if psi != phi:
            break
    p = r.recolor_path(g, phi, psi, ell)
    r.validate_path(g, p)
    assert p.end() == psi
    assert len(p) <= 2 * g.n * g.n


def test_graph_text_roundtrip():
    g = r.build_family("join(c6,k1)")
    assert r.read_graph_text(r.write_graph_text(g)) == g


def test_errors():
    c4 = r.build_family("c4")
    with pytest.raises(Exception):
        r.decide_recolorable(c4)
