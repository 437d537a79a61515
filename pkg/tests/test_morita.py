import itertools

import numpy as np
import pytest

from conftest import (FIELD2, a2_morita_ring, nakayama_ring,
                      product_morita_ring, random_right_tuple, random_tuple,
                      triangular_extension)
from extalg.algebra import (Bimodule, LeftModule, RightModule, field_algebra,
                            hom_space, is_isomorphic, product_algebra)
from extalg.gorenstein import SELF_INJECTIVE, IWANAGA_GORENSTEIN, \
    gorenstein_regime
from extalg.linalg import FpMatrix
from extalg.morita import (CoTupleModule, MoritaContextData, MoritaError,
                           RightTupleModule, TupleModule, morita_ring,
                           theta, theta_co, theta_inverse, tuple_hom_dim,
                           upsilon, upsilon_inverse, verify_thm52,
                           verify_thm53, verify_thm54)
from extalg.structure import simples
from extalg.trivext import (copair_to_module, pair_to_module,
                            right_pair_to_module)


@pytest.fixture(scope="module")
def nak():
    return nakayama_ring(FIELD2)


@pytest.fixture(scope="module")
def a2m():
    return a2_morita_ring(FIELD2)


def test_ring_constructions_agree(nak, a2m):
    prod = product_morita_ring(FIELD2)
    assert nak.total.dim == 4
    assert a2m.total.dim == 3
    assert prod.total.dim == 2
    for ring in (nak, a2m, prod):
        assert (ring.direct.sc == ring.ext.total.sc).all()
        assert (ring.direct.unit == ring.ext.total.unit).all()
        assert ring.iso == FpMatrix.identity(ring.total.dim, FIELD2)


def test_degenerate_ring_is_product():
    prod = product_morita_ring(FIELD2)
    k = field_algebra(FIELD2)
    expect, _, _ = product_algebra(k, k)
    assert (prod.total.sc == expect.sc).all()


def test_nakayama_ring_regime(nak):
    assert gorenstein_regime(nak.total)[0] == SELF_INJECTIVE
    assert len(simples(nak.total)) == 2


def test_a2_morita_matches_triangular(a2m):
    tri = triangular_extension(FIELD2)
    assert a2m.total.dim == tri.total.dim
    assert gorenstein_regime(a2m.total)[0] == IWANAGA_GORENSTEIN
    assert sorted(s.dim for s in simples(a2m.total)) == \
        sorted(s.dim for s in simples(tri.total))


def test_context_leg_checks():
    k = field_algebra(FIELD2)
    other = field_algebra(FIELD2)
    with pytest.raises(MoritaError):
        MoritaContextData(k, other, Bimodule.regular(k), Bimodule.regular(k))


def test_tuple_validation(nak):
    k = LeftModule.regular(nak.context.a)
    one = FpMatrix([[1]], FIELD2)
    zero = FpMatrix.zeros(1, 1, FIELD2)
    TupleModule(nak, k, k, one, zero)  # f then g: composite zero
    with pytest.raises(MoritaError):
        TupleModule(nak, k, k, one, one)  # g o (V ox f) = 1 != 0


def test_theta_round_trip_canned(nak):
    k = LeftModule.regular(nak.context.a)
    one = FpMatrix([[1]], FIELD2)
    zero = FpMatrix.zeros(1, 1, FIELD2)
    for f, g in ((one, zero), (zero, one), (zero, zero)):
        t = TupleModule(nak, k, k, f, g)
        pair = theta(t)
        back = theta_inverse(pair, nak)
        assert back.same_presentation(t)


def test_theta_round_trips_random(nak):
    rng = np.random.default_rng(12)
    for _ in range(10):
        t = random_tuple(nak, rng)
        assert theta_inverse(theta(t), nak).same_presentation(t)


def test_upsilon_round_trips(nak):
    rng = np.random.default_rng(13)
    w = RightModule.regular(nak.context.a)
    one = FpMatrix([[1]], FIELD2)
    zero = FpMatrix.zeros(1, 1, FIELD2)
    rt = RightTupleModule(nak, w, w, one, zero)
    back = upsilon_inverse(upsilon(rt), nak)
    assert back.same_presentation(rt)
    for _ in range(5):
        rt = random_right_tuple(nak, rng)
        assert upsilon_inverse(upsilon(rt), nak).same_presentation(rt)


def test_theta_co_builds_valid_copair(nak):
    k = LeftModule.regular(nak.context.a)
    one = FpMatrix([[1]], FIELD2)
    zero = FpMatrix.zeros(1, 1, FIELD2)
    ct = CoTupleModule(nak, k, k, one, zero)
    copair = theta_co(ct)
    mod = copair_to_module(copair)
    assert mod.dim == 2
    # the same tuple data through the pair route gives an isomorphic module
    t = TupleModule(nak, k, k, one, zero)
    assert is_isomorphic(mod, pair_to_module(theta(t)))


def test_tuple_hom_dim_matches_converted(nak):
    rng = np.random.default_rng(14)
    tuples = [random_tuple(nak, rng) for _ in range(6)]
    for s, t in zip(tuples, tuples[1:]):
        expect = hom_space(pair_to_module(theta(s)),
                           pair_to_module(theta(t))).dim
        assert tuple_hom_dim(s, t) == expect
    s = tuples[0]
    assert tuple_hom_dim(s, s) == hom_space(
        pair_to_module(theta(s)), pair_to_module(theta(s))).dim


def test_verify_thm52_canned(nak):
    k = LeftModule.regular(nak.context.a)
    one = FpMatrix([[1]], FIELD2)
    zero = FpMatrix.zeros(1, 1, FIELD2)
    report = verify_thm52(TupleModule(nak, k, k, one, zero))
    assert report["classification"] in ("agree", "consistent")
    assert report["agreement"]
    assert report["components_established"]


def test_verify_thm53_and_54_canned(nak):
    k = LeftModule.regular(nak.context.a)
    one = FpMatrix([[1]], FIELD2)
    zero = FpMatrix.zeros(1, 1, FIELD2)
    r53 = verify_thm53(CoTupleModule(nak, k, k, one, zero))
    assert r53["agreement"]
    w = RightModule.regular(nak.context.a)
    r54 = verify_thm54(RightTupleModule(nak, w, w, one, zero))
    assert r54["agreement"]


def test_thm52_exhaustive_a2(a2m):
    # every tuple with dim X + dim Y <= 3 over the hereditary Morita ring
    seen = 0
    for dx in range(3):
        for dy in range(3 - dx):
            x = LeftModule(a2m.context.a,
                           [FpMatrix.identity(dx, FIELD2)])
            y = LeftModule(a2m.context.b,
                           [FpMatrix.identity(dy, FIELD2)])
            for entries in itertools.product(range(2), repeat=dy * dx):
                f = FpMatrix.from_entries(dy, dx, list(entries), FIELD2)
                g = FpMatrix.zeros(dx, 0, FIELD2)
                t = TupleModule(a2m, x, y, f, g)
                report = verify_thm52(t)
                assert report["hypotheses_established"]
                assert report["classification"] == "agree"
                seen += 1
    assert seen > 5
