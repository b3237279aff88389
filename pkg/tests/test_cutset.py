import json
import math
from fractions import Fraction

import pytest

from relpoly import (
    CapacityError,
    build_probe_system,
    complete_graph,
    cycle_graph,
    default_probes,
    enumerate_link_coefficients,
    enumerate_node_coefficients,
    estimate_curve_source,
    estimate_node_cut_fractions,
    exact_link_curve_source,
    exact_node_curve_source,
    node_reliability_s_form,
    path_graph,
    recover_cut_counts,
    star_graph,
)
from oracle import brute_cut_counts


def exact_system(graph):
    coeffs = enumerate_node_coefficients(graph)
    return build_probe_system(graph.num_nodes, exact_node_curve_source(coeffs))


class TestProbeSystem:
    def test_matrix_row_at_half(self):
        sys2 = build_probe_system(2, lambda p: float(p), probes=[0.25, 0.5, 0.75])
        rows = sys2.matrix()
        assert rows[1] == pytest.approx([0.25, 0.25, 0.25])

    def test_matrix_row_at_quarter(self):
        sys2 = build_probe_system(2, lambda p: float(p), probes=[0.25, 0.5, 0.75])
        assert sys2.matrix()[0] == pytest.approx([0.0625, 0.1875, 0.5625])

    def test_default_probes_interior_equispaced(self):
        probes = default_probes(3)
        assert probes == [Fraction(i + 1, 5) for i in range(4)]

    def test_boundary_probe_rejected(self):
        with pytest.raises(ValueError):
            build_probe_system(2, lambda p: p, probes=[0.0, 0.5, 0.9])

    def test_duplicate_probe_rejected(self):
        with pytest.raises(ValueError):
            build_probe_system(2, lambda p: p, probes=[0.5, 0.5, 0.9])

    def test_probe_count_checked(self):
        with pytest.raises(ValueError):
            build_probe_system(3, lambda p: p, probes=[0.2, 0.4, 0.6])

    def test_rhs_is_one_minus_curve(self):
        coeffs = enumerate_node_coefficients(path_graph(3))
        system = exact_system(path_graph(3))
        for p, r in zip(system.probes, system.rhs):
            assert float(r) == pytest.approx(1.0 - node_reliability_s_form(coeffs, float(p)), abs=1e-12)


class TestExactRecovery:
    def test_path3(self):
        rec = recover_cut_counts(exact_system(path_graph(3)))
        assert rec.counts == (0, 1, 0, 1)
        assert rec.residual == 0.0
        assert rec.max_rounding_deviation < 1e-6

    def test_k3(self):
        rec = recover_cut_counts(exact_system(complete_graph(3)))
        assert rec.counts == (0, 0, 0, 1)

    def test_cycle4(self):
        rec = recover_cut_counts(exact_system(cycle_graph(4)))
        assert rec.counts == (0, 0, 2, 0, 1)

    def test_round_trip_matches_brute_force(self, corpus):
        for label, g in corpus:
            if g.num_nodes > 9:
                continue
            rec = recover_cut_counts(exact_system(g))
            assert list(rec.counts) == brute_cut_counts(g), label
            assert rec.max_rounding_deviation < 1e-6, label
            assert not rec.flags, label

    def test_no_rounding_returns_raw(self):
        rec = recover_cut_counts(exact_system(path_graph(4)), rounding=False)
        assert rec.counts == rec.raw
        assert not rec.rounded


class TestFloatRecovery:
    def test_float_probes_use_extended_precision(self):
        g = star_graph(6)
        coeffs = enumerate_node_coefficients(g)
        probes = [(i + 1) / (g.num_nodes + 2) for i in range(g.num_nodes + 1)]
        system = build_probe_system(g.num_nodes, exact_node_curve_source(coeffs), probes)
        assert not system.exact
        rec = recover_cut_counts(system)
        assert list(rec.counts) == list(coeffs.cut_counts)
        assert rec.max_rounding_deviation < 1e-6
        assert rec.residual < 1e-9

    def test_mc_source_returns_vector_and_residual(self):
        g = path_graph(5)
        est = estimate_node_cut_fractions(g, 10000, seed=11)
        probes = [float(p) for p in default_probes(g.num_nodes)]
        system = build_probe_system(g.num_nodes, estimate_curve_source(est), probes)
        rec = recover_cut_counts(system)
        assert len(rec.counts) == g.num_nodes + 1
        assert math.isfinite(rec.residual)


class TestLinkVariant:
    @pytest.mark.parametrize("graph", [path_graph(5), star_graph(6), cycle_graph(6), cycle_graph(9)])
    def test_recovers_link_cut_counts(self, graph):
        coeffs = enumerate_link_coefficients(graph)
        l = graph.num_links
        system = build_probe_system(l, exact_link_curve_source(coeffs))
        rec = recover_cut_counts(system)
        expected = [math.comb(l, j) - f for j, f in enumerate(coeffs.kept_counts)]
        assert list(rec.counts) == expected


class TestGuards:
    def test_capacity_cap(self):
        system = build_probe_system(31, lambda p: float(p))
        with pytest.raises(CapacityError):
            recover_cut_counts(system)

    def test_consistency_flags(self):
        # a constant "curve" above 1 forces every recovered count negative
        system = build_probe_system(3, lambda p: 2.0, probes=[0.2, 0.4, 0.6, 0.8])
        rec = recover_cut_counts(system)
        assert any("outside" in f for f in rec.flags)
        assert any("empty residual" in f for f in rec.flags)

    def test_json_payload(self):
        rec = recover_cut_counts(exact_system(path_graph(3)))
        payload = json.loads(rec.to_json())
        assert payload["C"] == [0, 1, 0, 1]
        assert payload["rounded"] is True
        assert payload["residual"] == 0.0
        assert payload["probes"] == [float(Fraction(i + 1, 5)) for i in range(4)]
