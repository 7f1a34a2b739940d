import math

try:
    import hermitia as hm
except ImportError:
    import _hermitia as hm


def test_corpus_and_classify():
    names = hm.corpus_list()
    assert "kodaira" in names and "calabi_eckmann" in names
    h = hm.corpus_build("corpus:kodaira")
    assert h.dim == 4 and h.n == 2
    assert h.nijenhuis_residual() <= 1e-12
    rep = hm.classify(h)
    assert rep["verdicts"]["vaisman"]
    assert rep["verdicts"]["skt"]
    assert not rep["verdicts"]["kahler"]
    assert not rep["falsified"]


def test_torus_residuals_and_json_round_trip():
    h = hm.corpus_build("flat_torus_2")
    rep = hm.classify(h)
    assert all(v <= 1e-12 for v in rep["residuals"].values())
    h2 = hm.Hermitian.from_json(h.to_json())
    assert h2.dim == h.dim
    assert hm.skt_residual(h2) <= 1e-12


def test_skt_feasibility_flips_with_the_deformation():
    ok = hm.skt_feasibility(hm.corpus_build("calabi_eckmann?t=0"))
    assert ok["feasible"]
    bad = hm.skt_feasibility(
        hm.corpus_build("calabi_eckmann?t_re=0&t_im=0.5"))
    assert not bad["feasible"]
    assert bad["certificate"]


def test_vaisman_scalar_ode():
    tr = hm.vaisman_f_ode(0.0, 1.0, 0.4, 1e-3)
    assert not tr["degenerated"]
    assert abs(tr["f_end"] - math.sqrt(0.2)) < 1e-6


def test_pluriclosed_flow_is_stationary_on_the_torus():
    tr = hm.integrate_pluriclosed(hm.corpus_build("flat_torus_2"), 0.01)
    assert not tr["positivity_failed"]
    assert max(tr["skt_monitor"]) <= 1e-12
