import random
from fractions import Fraction

import pytest

from leavitt import (
    ChenModule,
    Digraph,
    DomainError,
    LeavittAlgebra,
    PathSpaceError,
    QuiverRep,
    SinkModule,
    build_rep,
    dimfun,
    module_action,
    path_count_to,
    paths_ending_at,
    paths_to_cycle_count,
    support_subgraph,
    toeplitz_model,
    updown_model,
    verify_relations,
)
from leavitt.digraph import Path
from leavitt.ratmat import RatMat

from helpers import (
    chain,
    loop_with_tail,
    prefix_paths_brute,
    random_digraph,
    rose,
    toeplitz,
    two_sink_chain,
    two_sinks_fork,
)


# -- build_rep / verify_relations ------------------------------------------------


def test_build_rep_toeplitz():
    g = toeplitz()
    rep = build_rep(g, {"v": 1, "w": 0})
    assert rep.dims == {"v": 1, "w": 0}
    assert rep.arrow_mats["e"].data == ((Fraction(1),),)
    assert (rep.arrow_mats["f"].rows, rep.arrow_mats["f"].cols) == (1, 0)
    assert verify_relations(g, rep).passed


def test_build_rep_identity_blocks():
    g = two_sinks_fork()
    rep = build_rep(g, {"u": 2, "w1": 1, "w2": 1})
    assert rep.arrow_mats["a1"].data == ((Fraction(1),), (Fraction(0),))
    assert rep.arrow_mats["a2"].data == ((Fraction(0),), (Fraction(1),))
    assert verify_relations(g, rep).passed


def test_build_rep_zero():
    g = toeplitz()
    rep = build_rep(g, {"v": 0, "w": 0})
    assert verify_relations(g, rep).passed


def test_build_rep_rejects_non_dimension_function():
    with pytest.raises(DomainError):
        build_rep(toeplitz(), {"v": 1, "w": 1})


def test_verify_relations_detects_bad_rep():
    g = toeplitz()
    bad = QuiverRep(
        {"v": 1, "w": 0},
        {"e": RatMat.from_rows([[2]]), "f": RatMat.from_rows([[]], cols=0)},
        {"e": RatMat.from_rows([[1]]), "f": RatMat.from_rows([], cols=1)},
    )
    report = verify_relations(g, bad)
    assert not report.passed
    assert any(c.relation == "SCK1" and not c.ok for c in report.checks)


def test_verify_relations_shape_mismatch():
    g = toeplitz()
    rep = build_rep(g, {"v": 1, "w": 0})
    rep.arrow_mats["e"] = RatMat.from_rows([[1, 0]])
    with pytest.raises(DomainError):
        verify_relations(g, rep)


def test_random_theta_also_passes():
    rng = random.Random(55)
    for seed in range(20):
        g = random_digraph(rng, max_v=4, max_a=6, separated=True)
        hb = dimfun.hilbert_basis(g, 4)
        if not hb.functions:
            continue
        d = hb.functions[0]
        assert verify_relations(g, build_rep(g, d)).passed
        assert verify_relations(g, build_rep(g, d, seed=seed)).passed


def test_total_dimension():
    g = two_sinks_fork()
    d = {"u": 3, "w1": 2, "w2": 1}
    rep = build_rep(g, d)
    assert sum(rep.dims.values()) == sum(d.values())


def test_rep_json_round_trip():
    g = two_sinks_fork()
    rep = build_rep(g, {"u": 2, "w1": 1, "w2": 1}, seed=3)
    loaded = QuiverRep.from_dict(g, rep.to_dict())
    assert loaded.dims == rep.dims
    assert loaded.arrow_mats == rep.arrow_mats
    assert loaded.dual_mats == rep.dual_mats


# -- module action ----------------------------------------------------------------


def test_module_action_examples():
    g = toeplitz()
    alg = LeavittAlgebra(g)
    rep = build_rep(g, {"v": 1, "w": 0})
    vec = {"v": (Fraction(5),)}
    assert module_action(g, rep, alg.vertex("v"), vec)["v"] == (Fraction(5),)
    x = alg.parse("e e^ + f f^")
    assert module_action(g, rep, x, vec) == module_action(g, rep, alg.vertex("v"), vec)
    zero = module_action(g, rep, alg.parse("e^ f"), vec)
    assert all(not any(b) for b in zero.values())


def test_module_action_matches_relations():
    rng = random.Random(77)
    g = two_sinks_fork()
    alg = LeavittAlgebra(g)
    rep = build_rep(g, {"u": 2, "w1": 1, "w2": 1}, seed=1)
    for _ in range(20):
        vec = {v: tuple(Fraction(rng.randint(-3, 3)) for _ in range(rep.dims[v]))
               for v in g.vertices}
        for expr in ("a1^ a2", "u - a1 a1^ - a2 a2^"):
            out = module_action(g, rep, alg.parse(expr), vec)
            assert all(not any(b) for b in out.values())


def test_support_subgraph():
    g = toeplitz()
    rep = build_rep(g, {"v": 1, "w": 0})
    sub, flags = support_subgraph(g, rep)
    assert sub.vertices == ("v",) and flags.all_true
    g3 = two_sinks_fork()
    rep3 = build_rep(g3, {"u": 1, "w1": 1, "w2": 0})
    sub3, flags3 = support_subgraph(g3, rep3)
    assert sub3.vertices == ("u", "w1") and flags3.all_true
    rep_all = build_rep(g3, {"u": 2, "w1": 1, "w2": 1})
    sub_all, flags_all = support_subgraph(g3, rep_all)
    assert sub_all == g3 and flags_all.all_true


# -- sink modules and path counts -------------------------------------------------


def test_paths_ending_at():
    g = two_sinks_fork()
    ps = paths_ending_at(g, "w1")
    assert [(p.start, p.arrows) for p in ps] == [("w1", ()), ("u", ("a1",))]
    with pytest.raises(PathSpaceError):
        paths_ending_at(toeplitz(), "w")


def test_path_count_examples():
    assert path_count_to(two_sinks_fork(), "w1") == 2
    assert path_count_to(chain(2), "u2") == 3
    assert path_count_to(chain(2), "u0") == 1
    rng = random.Random(4)
    from helpers import random_acyclic_digraph

    for _ in range(30):
        g = random_acyclic_digraph(rng)
        for v in g.vertices:
            assert path_count_to(g, v) == len(paths_ending_at(g, v))


def test_sink_module_fork():
    g = two_sinks_fork()
    sm = SinkModule(g, "w1")
    assert sm.rep.dims == {"u": 1, "w1": 1, "w2": 0}
    assert [p.arrows for p in sm.basis] == [(), ("a1",)]
    assert verify_relations(g, sm.rep).passed
    p, q = Path("u", ("a1",)), Path("w1")
    assert sm.image(p, p) == sm.elementary(p, p)
    assert sm.image(p, q) == sm.elementary(p, q)


def test_sink_module_errors():
    with pytest.raises(PathSpaceError):
        SinkModule(toeplitz(), "w")
    with pytest.raises(DomainError):
        SinkModule(toeplitz(), "v")


def test_sink_module_isolated():
    g = Digraph(["z"], [])
    sm = SinkModule(g, "z")
    assert sm.total_dim == 1
    assert sm.image(Path("z"), Path("z")).data == ((Fraction(1),),)


def test_sink_module_multiplicative():
    for g, w in [(two_sinks_fork(), "w1"), (two_sink_chain(), "w1"), (two_sink_chain(), "w2")]:
        sm = SinkModule(g, w)
        basis = sm.basis
        for p in basis:
            for q in basis:
                for r in basis:
                    for s in basis:
                        left = sm.monomial_matrix(p, q) @ sm.monomial_matrix(r, s)
                        if q == r:
                            assert left == sm.monomial_matrix(p, s)
                        else:
                            assert left == sm.elementary(p, q) @ sm.elementary(r, s)


# -- prefix path spaces of cycles ---------------------------------------------------


def test_paths_to_cycle_count_examples():
    t = toeplitz()
    assert paths_to_cycle_count(t, t.cycles()[0]) == 1
    lt = loop_with_tail()
    assert paths_to_cycle_count(lt, lt.cycles()[0]) == 2
    g = Digraph(
        ["u", "v0", "w"],
        [("e1", "v0", "w"), ("e2", "w", "v0"), ("a", "u", "w")],
    )
    (c,) = g.cycles()
    assert paths_to_cycle_count(g, c) == 3


def test_paths_to_cycle_count_matches_brute_force():
    rng = random.Random(66)
    from helpers import random_unique_cycle_fixture

    for _ in range(25):
        g = random_unique_cycle_fixture(rng)
        (c,) = g.cycles()
        n = paths_to_cycle_count(g, c)
        bound = 2 * (len(g.vertices) + len(c.arrows)) + 2
        brute = prefix_paths_brute(g, c, bound)
        assert n == len(brute)
        # the space is genuinely finite: a longer horizon finds nothing new
        assert len(prefix_paths_brute(g, c, bound + 3)) == n


def test_paths_to_cycle_count_preconditions():
    r2 = rose(2)
    with pytest.raises(PathSpaceError):
        paths_to_cycle_count(r2, r2.cycles()[0])


# -- Chen modules -------------------------------------------------------------------


def test_chen_action_toeplitz():
    t = toeplitz()
    cm = ChenModule(t, t.cycles()[0])
    tok = cm.token(Path("v"))
    assert cm.act_arrow(tok, "e") == tok
    assert cm.act_dual(tok, "e") == tok
    assert cm.act_arrow(tok, "f") is None
    assert cm.act_dual(tok, "f") is None


def test_chen_action_rose1():
    r1 = rose(1)
    cm = ChenModule(r1, r1.cycles()[0])
    tok = cm.token(Path("v"))
    assert cm.act_arrow(tok, "e0") == tok


def test_chen_action_loop_with_tail():
    g = loop_with_tail()
    cm = ChenModule(g, g.cycles()[0])
    t_v = cm.token(Path("v"))
    t_a = cm.token(Path("u", ("a",)))
    assert cm.act_dual(t_a, "e") is None  # t(e)=v but the token starts at u
    assert cm.act_dual(t_v, "e") == t_v
    assert cm.act_dual(t_v, "a") == t_a
    assert cm.act_arrow(t_a, "a") == t_v
    assert set(cm.tokens()) == {Path("v"), Path("u", ("a",))}


def test_chen_apply_linear():
    g = loop_with_tail()
    alg = LeavittAlgebra(g)
    cm = ChenModule(g, g.cycles()[0])
    t_v, t_a = cm.token(Path("v")), cm.token(Path("u", ("a",)))
    vec = {t_v: Fraction(2), t_a: Fraction(3)}
    out = cm.apply(vec, alg.parse("a"))
    assert out == {t_v: Fraction(3)}
    out2 = cm.apply(vec, alg.parse("e e^"))
    assert out2 == {t_v: Fraction(2)}


def test_chen_relations_pass_on_fixtures():
    rng = random.Random(88)
    from helpers import random_unique_cycle_fixture

    for _ in range(20):
        g = random_unique_cycle_fixture(rng)
        (c,) = g.cycles()
        assert ChenModule(g, c).check_relations().passed


# -- operator models -----------------------------------------------------------------


def test_updown_sequences():
    m = updown_model(2, 16)
    seq = list(range(17))
    assert list(m.apply("D0", seq)[:5]) == [0, 2, 4, 6, 8]
    assert list(m.apply("D1", seq)[:5]) == [1, 3, 5, 7, 9]
    up = m.apply("U0", list(range(17)))
    assert list(up[:6]) == [0, 0, 1, 0, 2, 0]


def test_updown_relations():
    for n in (2, 3, 4):
        m = updown_model(n, 64)
        assert all(c.ok for c in m.check_relations())


def test_updown_validation():
    with pytest.raises(DomainError):
        updown_model(1, 16)


def test_toeplitz_model():
    m = toeplitz_model(64)
    checks = {c.name: c for c in m.check_relations()}
    assert checks["T S = 1"].ok and checks["T S = 1"].window == 63
    assert checks["1 - S T = E00"].ok
    e0 = [1] + [0] * 64
    assert not m.apply(e0, "S").any()
    assert list(m.apply(e0, "T")[:3]) == [0, 1, 0]


def test_rep_from_dict_rejects_malformed():
    g = toeplitz()
    for bad in (
        {"arrows": {}},
        {"dims": {"v": 1}},
        {"dims": {"v": 1, "w": 0}, "arrows": {"e": [["x"]]}},
        {"dims": {"v": 1, "w": 0}, "extra": 1},
    ):
        with pytest.raises(DomainError):
            QuiverRep.from_dict(g, bad)


def test_verify_relations_needs_all_matrices():
    g = toeplitz()
    with pytest.raises(DomainError):
        verify_relations(g, QuiverRep({"v": 1, "w": 0}, {}, {}))


def test_verify_relations_empty_digraph():
    g = Digraph([], [])
    report = verify_relations(g, QuiverRep({}, {}, {}))
    assert report.passed


def test_module_action_rejects_bad_block():
    g = toeplitz()
    from leavitt import LeavittAlgebra

    alg = LeavittAlgebra(g)
    rep = build_rep(g, {"v": 2, "w": 0})
    with pytest.raises(DomainError):
        module_action(g, rep, alg.vertex("v"), {"v": (Fraction(1),)})


def test_module_action_composes_with_products():
    # the action of a product must equal the composed actions: this pins the
    # normal-form engine against exact matrix arithmetic on both block styles
    rng = random.Random(2468)
    from leavitt import LeavittAlgebra, dimfun
    from helpers import random_element

    checked = 0
    while checked < 120:
        g = random_digraph(rng, max_v=4, max_a=6)
        hb = dimfun.hilbert_basis(g, 3)
        if not hb.functions:
            continue
        d = dict(hb.functions[0])
        for extra in hb.functions[1:2]:
            for v in d:
                d[v] += extra[v]
        rep = build_rep(g, d, seed=checked if checked % 2 else None)
        alg = LeavittAlgebra(g)
        x, y = random_element(rng, alg), random_element(rng, alg)
        vec = {
            v: tuple(Fraction(rng.randint(-2, 2)) for _ in range(d[v]))
            for v in g.vertices
        }
        assert module_action(g, rep, x * y, vec) == module_action(
            g, rep, y, module_action(g, rep, x, vec)
        )
        checked += 1


def test_chen_apply_composes_with_products():
    rng = random.Random(1357)
    from leavitt import LeavittAlgebra
    from helpers import random_element, random_unique_cycle_fixture

    for _ in range(25):
        g = random_unique_cycle_fixture(rng)
        (c,) = g.cycles()
        cm = ChenModule(g, c)
        alg = LeavittAlgebra(g)
        toks = cm.tokens()
        vec = {t: Fraction(rng.randint(-2, 2)) for t in toks if rng.random() < 0.7}
        vec = {t: c0 for t, c0 in vec.items() if c0}
        x, y = random_element(rng, alg), random_element(rng, alg)
        assert cm.apply(vec, x * y) == cm.apply(cm.apply(vec, x), y)
