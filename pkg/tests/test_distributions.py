"""Tests for discrete distributions, the two-point family, and the wire format."""

import json
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

import _oracles as orc
from normgap import (
    ArgumentError,
    DiscreteDistribution,
    DomainError,
    cdf_at,
    cdf_left_limit,
    extremal_distribution,
    is_standardized,
    make_two_point,
    mirror,
    moments,
    standardize,
)
from normgap.distributions import (
    FORMAT_TAG,
    dumps,
    from_json_dict,
    loads,
    to_json_dict,
)


def rademacher():
    return DiscreteDistribution([-1.0, 1.0], [0.5, 0.5])


# strategy: 2..10 distinct-ish atoms with positive weights, normalized
_atoms = st.lists(
    st.tuples(
        st.floats(min_value=-50.0, max_value=50.0, allow_nan=False),
        st.floats(min_value=1e-6, max_value=1.0),
    ),
    min_size=2,
    max_size=10,
)


def _build(pairs):
    xs = [x for x, _ in pairs]
    ws = np.array([w for _, w in pairs])
    return DiscreteDistribution(xs, ws / ws.sum())


class TestConstruction:
    def test_sorts_and_keeps_masses(self):
        d = DiscreteDistribution([2.0, -1.0, 0.5], [0.2, 0.5, 0.3])
        assert list(d.xs) == [-1.0, 0.5, 2.0]
        assert d.ps.sum() == pytest.approx(1.0, abs=1e-15)

    def test_strips_zero_mass(self):
        d = DiscreteDistribution([0.0, 1.0, 2.0], [0.5, 0.0, 0.5])
        assert list(d.xs) == [0.0, 2.0]

    def test_merges_near_duplicates(self):
        d = DiscreteDistribution([0.0, 5e-15, 1.0], [0.25, 0.25, 0.5])
        assert len(d) == 2
        assert d.ps[0] == pytest.approx(0.5, abs=1e-15)

    def test_renormalizes_small_drift(self):
        d = DiscreteDistribution([0.0, 1.0], [0.5 + 4e-10, 0.5])
        assert float(d.cum[-1]) == 1.0

    def test_rejects_large_drift(self):
        with pytest.raises(ArgumentError):
            DiscreteDistribution([0.0, 1.0], [0.6, 0.5])

    def test_rejects_negative_mass(self):
        with pytest.raises(ArgumentError):
            DiscreteDistribution([0.0, 1.0], [1.2, -0.2])

    def test_rejects_nonfinite_atoms(self):
        with pytest.raises(ArgumentError):
            DiscreteDistribution([0.0, math.inf], [0.5, 0.5])

    def test_jumps_equal_masses_bitwise(self):
        d = _build([(-3.1, 0.3), (0.2, 0.17), (0.9, 0.41), (7.7, 0.12)])
        for i in range(len(d)):
            jump = cdf_at(d, float(d.xs[i])) - cdf_left_limit(d, float(d.xs[i]))
            assert jump == d.ps[i]

    def test_immutable(self):
        d = rademacher()
        with pytest.raises(ValueError):
            d.xs[0] = 3.0


class TestMoments:
    def test_rademacher(self):
        m = moments(rademacher())
        assert (m.mean, m.variance, m.beta) == (0.0, 1.0, 1.0)

    def test_point_mass(self):
        m = moments(DiscreteDistribution([0.0], [1.0]))
        assert (m.mean, m.variance, m.beta) == (0.0, 0.0, 0.0)

    def test_extremal_law_is_standardized(self, consts):
        m = moments(extremal_distribution(consts))
        assert abs(m.mean) <= 1e-12
        assert abs(m.variance - 1.0) <= 1e-12

    def test_extremal_beta(self, consts):
        assert moments(extremal_distribution(consts)).beta == pytest.approx(
            orc.BETA_EXTREMAL, abs=1e-12)


class TestMembership:
    def test_rademacher_in(self):
        assert is_standardized(rademacher(), 1e-12)

    def test_point_mass_out(self):
        assert not is_standardized(DiscreteDistribution([0.0], [1.0]), 1e-9)

    @pytest.mark.parametrize("a", [0.1, 0.2131, 1.0, 5.0])
    def test_two_point_family_in(self, a):
        assert is_standardized(make_two_point(a), 1e-12)

    def test_tol_validation(self):
        with pytest.raises(ArgumentError):
            is_standardized(rademacher(), 0.0)


class TestTwoPoint:
    def test_symmetric_case(self):
        d = make_two_point(1.0)
        assert list(d.xs) == [-1.0, 1.0]
        assert list(d.ps) == [0.5, 0.5]

    def test_extremal_parameter(self, consts):
        d = make_two_point(consts.x_phi)
        assert d.xs[0] == pytest.approx(orc.X1, abs=1e-12)
        assert d.xs[1] == pytest.approx(orc.X_ROOT, abs=1e-12)
        assert d.ps[0] == pytest.approx(orc.P1, abs=1e-12)
        assert d.ps[1] == pytest.approx(orc.P2, abs=1e-12)
        # six published decimals of the masses hold as stated
        assert d.ps[0] == pytest.approx(0.043441, abs=1e-6)
        assert d.ps[1] == pytest.approx(0.956559, abs=1e-5)

    def test_a_two(self):
        d = make_two_point(2.0)
        assert list(d.xs) == [-0.5, 2.0]
        assert d.ps[0] == pytest.approx(0.8, abs=1e-15)
        assert d.ps[1] == pytest.approx(0.2, abs=1e-15)
        m = moments(d)
        assert m.mean == pytest.approx(0.0, abs=1e-15)
        assert m.variance == pytest.approx(1.0, abs=1e-15)

    def test_moment_round_trip_log_sweep(self):
        for a in np.geomspace(1e-3, 1e3, 1000):
            m = moments(make_two_point(float(a)))
            assert abs(m.mean) <= 1e-12
            assert abs(m.variance - 1.0) <= 1e-12

    @pytest.mark.parametrize("bad", [0.0, -1.0, math.inf, math.nan])
    def test_rejects_bad_parameter(self, bad):
        with pytest.raises(ArgumentError):
            make_two_point(bad)


class TestMirror:
    def test_extremal_mirror_atoms(self, consts):
        t = extremal_distribution(consts, mirrored=True)
        assert t.xs[0] == pytest.approx(-orc.X_ROOT, abs=1e-12)
        assert t.xs[1] == pytest.approx(-orc.X1, abs=1e-12)
        assert t.ps[0] == pytest.approx(orc.P2, abs=1e-12)
        assert t.ps[1] == pytest.approx(orc.P1, abs=1e-12)

    def test_involution_bitwise(self, consts):
        d = extremal_distribution(consts)
        assert mirror(mirror(d)) == d

    @given(_atoms)
    def test_involution_random(self, pairs):
        d = _build(pairs)
        assert mirror(mirror(d)) == d


class TestStandardize:
    def test_shift_scale(self):
        d = standardize(DiscreteDistribution([0.0, 2.0], [0.5, 0.5]))
        assert list(d.xs) == [-1.0, 1.0]

    def test_degenerate_rejected(self):
        with pytest.raises(ArgumentError):
            standardize(DiscreteDistribution([0.0], [1.0]))

    @given(_atoms)
    def test_lands_in_class(self, pairs):
        d = _build(pairs)
        if moments(d).variance <= 1e-12:
            return
        assert is_standardized(standardize(d), 1e-9)

    @given(_atoms)
    def test_idempotent(self, pairs):
        d = _build(pairs)
        if moments(d).variance <= 1e-12:
            return
        s = standardize(d)
        s2 = standardize(s)
        assert np.max(np.abs(s.xs - s2.xs)) <= 1e-9

    def test_many_random_land_in_class(self):
        rng = np.random.default_rng(7)
        for _ in range(10000):
            xs = rng.uniform(-5.0, 5.0, 5)
            ws = rng.dirichlet(np.ones(5))
            d = DiscreteDistribution(xs, ws)
            if moments(d).variance <= 1e-12:
                continue
            assert is_standardized(standardize(d), 1e-9)


class TestCdf:
    def test_rademacher_at_one(self):
        d = rademacher()
        assert cdf_at(d, 1.0) == 1.0
        assert cdf_left_limit(d, 1.0) == 0.5

    def test_extremal_at_zero(self, consts):
        assert cdf_at(extremal_distribution(consts), 0.0) == pytest.approx(0.043441, abs=1e-5)

    def test_infinities(self, consts):
        d = extremal_distribution(consts)
        assert cdf_at(d, -math.inf) == 0.0
        assert cdf_at(d, math.inf) == 1.0
        assert cdf_left_limit(d, -math.inf) == 0.0
        assert cdf_left_limit(d, math.inf) == 1.0

    def test_nan_rejected(self):
        with pytest.raises(DomainError):
            cdf_at(rademacher(), math.nan)
        with pytest.raises(DomainError):
            cdf_left_limit(rademacher(), math.nan)

    @given(_atoms, st.floats(min_value=-60.0, max_value=60.0, allow_nan=False))
    def test_left_limit_below_value(self, pairs, x):
        d = _build(pairs)
        lo = cdf_left_limit(d, x)
        hi = cdf_at(d, x)
        assert 0.0 <= lo <= hi <= 1.0

    @given(_atoms)
    def test_monotone_along_probes(self, pairs):
        d = _build(pairs)
        probes = np.sort(np.concatenate([d.xs, d.xs - 1e-9, d.xs + 1e-9, [-100.0, 100.0]]))
        vals = [cdf_at(d, float(x)) for x in probes]
        assert all(b >= a for a, b in zip(vals, vals[1:]))


class TestJson:
    def test_round_trip(self, consts):
        d = extremal_distribution(consts)
        assert loads(dumps(d)) == d

    def test_tag_written(self, consts):
        obj = to_json_dict(extremal_distribution(consts))
        assert obj["format"] == FORMAT_TAG

    def test_unsorted_input_accepted(self):
        d = from_json_dict({"atoms": [{"x": 1.0, "p": 0.5}, {"x": -1.0, "p": 0.5}]})
        assert list(d.xs) == [-1.0, 1.0]

    def test_sum_tolerance_enforced(self):
        with pytest.raises(ArgumentError):
            from_json_dict({"atoms": [{"x": 0.0, "p": 0.5}, {"x": 1.0, "p": 0.499}]})

    def test_foreign_tag_rejected(self):
        with pytest.raises(ArgumentError):
            from_json_dict({"format": "something/9", "atoms": [{"x": 0.0, "p": 1.0}]})

    def test_malformed_rejected(self):
        for bad in ("[]", "{}", '{"atoms": []}', '{"atoms": [{"x": 0}]}',
                    '{"atoms": [{"x": "a", "p": 1}]}', "not json"):
            with pytest.raises(ArgumentError):
                loads(bad)

    def test_json_text_parses_back(self, consts):
        d = extremal_distribution(consts)
        obj = json.loads(dumps(d))
        assert obj["atoms"][0]["x"] == float(d.xs[0])
