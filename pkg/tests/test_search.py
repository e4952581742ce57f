"""Generators, violation search, witnesses, and the published examples."""

import json

import numpy as np
import pytest

from blockdet.checks import Verdict, check_cor_c0, check_lemma1
from blockdet.linalg import ShapeError, frobenius_norm, predicates
from blockdet.search import (
    FAMILIES,
    GeneratorSpec,
    Witness,
    compare_paper_example,
    generate,
    generate_block_family,
    recheck_witness,
    reproduce_paper_example,
    search_violations,
    sharpness_probe,
)


# ---------------------------------------------------------------------------
# generation


def test_generate_is_deterministic_and_per_trial_independent():
    spec = GeneratorSpec(family="gaussian", n=5, r=2, m=3, seed=123)
    first = generate(spec, 7)
    second = generate(spec, 7)
    for a, b in zip(first, second):
        assert np.array_equal(a, b)
    other = generate(spec, 8)
    assert not np.array_equal(first[0], other[0])


def test_generate_zero_bound_gives_zero_matrix():
    spec = GeneratorSpec(family="integer_uniform", n=4, entry_bound=0, seed=1)
    (mat,) = generate(spec, 0)
    assert np.all(mat == 0)


def test_generate_integer_entries_respect_range():
    spec = GeneratorSpec(family="integer_uniform", n=6, m=2, entry_bound=(-3, 5), seed=9)
    for mat in generate(spec, 4):
        assert np.all(mat.imag == 0)
        assert np.all(mat.real == np.round(mat.real))
        assert mat.real.min() >= -3 and mat.real.max() <= 5


def test_generate_symmetric_family_exactly_symmetric():
    spec = GeneratorSpec(family="symmetric", n=6, seed=5)
    (s,) = generate(spec, 3)
    assert np.array_equal(s, s.T)


def test_generate_triangular_and_block_triangular_structure():
    (t,) = generate(GeneratorSpec(family="upper_triangular", n=5, seed=2), 0)
    assert np.all(np.tril(t, -1) == 0)
    (b,) = generate(GeneratorSpec(family="block_triangular", n=6, r=2, seed=2), 0)
    assert np.all(b[2:, :2] == 0)
    assert np.any(b[:2, 2:] != 0)


def test_generate_normal_family_passes_predicate():
    spec = GeneratorSpec(family="normal_via_unitary_conjugation", n=5, seed=11)
    (m,) = generate(spec, 1)
    assert predicates(m).is_normal


def test_generate_block_family_structures_diagonal_blocks():
    spec = GeneratorSpec(family="symmetric", n=6, r=2, m=2, seed=3)
    family = generate_block_family(spec, 0)
    assert family.m == 2 and family.n == 6 and family.r == 2
    for member in family.members:
        assert np.array_equal(member.x, member.x.T)
        assert np.array_equal(member.z, member.z.T)
        assert frobenius_norm(member.y) > 0
    again = generate_block_family(spec, 0)
    for a, b in zip(family.members, again.members):
        assert np.array_equal(a.assemble(), b.assemble())


def test_generate_block_family_needs_valid_split():
    with pytest.raises(ShapeError, match="0 < r < n"):
        generate_block_family(GeneratorSpec(family="gaussian", n=3, r=3, seed=0), 0)


def test_generator_spec_validation():
    with pytest.raises(ValueError, match="unknown family"):
        GeneratorSpec(family="cauchy")
    with pytest.raises(ValueError, match="positive"):
        GeneratorSpec(n=0)
    with pytest.raises(ValueError, match="scale"):
        generate(GeneratorSpec(family="gaussian", entry_bound=(-2, 2)), 0)


def test_every_family_generates():
    for family in FAMILIES:
        spec = GeneratorSpec(family=family, n=4, r=2, m=2, seed=17)
        mats = generate(spec, 0)
        assert len(mats) == 2
        blocks = generate_block_family(spec, 0)
        assert blocks.m == 2


# ---------------------------------------------------------------------------
# violation search


def test_thm1_control_run_has_zero_violations():
    spec = GeneratorSpec(family="integer_uniform", n=6, r=3, m=3, seed=42)
    report = search_violations(spec, "thm1", 200)
    assert report.trials == 200
    assert report.violation_count == 0
    assert report.min_margin is not None and report.min_margin >= 0.0


def test_e21_embedded_witness_fires_at_trial_zero():
    spec = GeneratorSpec(family="integer_uniform", n=4, r=2, m=2, seed=42)
    report = search_violations(spec, "e21", 3)
    assert report.violation_count >= 1
    assert report.violations[0].trial_index == 0
    assert report.violations[0].report.verdict is Verdict.VIOLATED


def test_cor_c1_embedded_witness_needs_hypothesis_mode():
    spec = GeneratorSpec(family="integer_uniform", n=4, r=2, m=2, seed=42)
    gated = search_violations(spec, "cor_c1", 1)
    assert gated.violation_count == 0  # precondition_failed, not violated
    open_mode = search_violations(spec, "cor_c1", 1,
                                  params={"allow_hypothesis_violation": True})
    assert open_mode.violation_count == 1


def test_search_stop_on_first():
    spec = GeneratorSpec(family="integer_uniform", n=4, r=2, m=2, seed=42)
    report = search_violations(spec, "e21", 50, stop_on_first=True)
    assert report.trials == 1
    assert report.violation_count == 1


def test_unknown_predicate_rejected():
    with pytest.raises(ValueError, match="unknown predicate"):
        search_violations(GeneratorSpec(), "nosuch", 1)


def test_search_reports_identical_across_runs():
    spec = GeneratorSpec(family="gaussian", n=4, r=2, m=2, seed=7)
    a = search_violations(spec, "cor_c0", 25)
    b = search_violations(spec, "cor_c0", 25)
    assert json.dumps(a.to_json_dict()) == json.dumps(b.to_json_dict())


def test_witness_roundtrip_reproduces_verdict_and_margin():
    spec = GeneratorSpec(family="integer_uniform", n=4, r=2, m=2, seed=42)
    report = search_violations(spec, "e21", 5)
    for record in report.violations:
        doc = json.loads(json.dumps(record.witness.to_json_dict()))
        witness = Witness.from_json_dict(doc)
        again = recheck_witness(witness)
        assert again.verdict is record.report.verdict
        assert again.margin == pytest.approx(record.report.margin, abs=1e-12)
    probe = sharpness_probe(spec, "cor_c0", 10)
    assert probe.min_positive_witness is not None
    doc = json.loads(json.dumps(probe.min_positive_witness.to_json_dict()))
    again = recheck_witness(Witness.from_json_dict(doc))
    assert again.margin == pytest.approx(probe.min_positive_margin, abs=1e-12)


def test_all_predicates_run_one_trial():
    spec = GeneratorSpec(family="gaussian", n=4, r=2, m=2, seed=3)
    from blockdet.search import PREDICATE_IDS

    for predicate in PREDICATE_IDS:
        report = search_violations(spec, predicate, 2)
        assert report.trials >= 1


# ---------------------------------------------------------------------------
# sharpness probing


def test_sharpness_probe_tracks_min_positive_margin():
    spec = GeneratorSpec(family="gaussian", n=4, r=2, m=1, seed=21)
    report = sharpness_probe(spec, "cor_c0", 40)
    assert report.violation_count == 0
    assert report.min_positive_margin is not None and report.min_positive_margin > 0
    rerun = recheck_witness(report.min_positive_witness)
    assert rerun.margin == report.min_positive_margin


def test_sharpness_probe_does_not_inject_witnesses():
    spec = GeneratorSpec(family="integer_uniform", n=4, r=2, m=2, seed=42)
    probe = sharpness_probe(spec, "e21", 1)
    search = search_violations(spec, "e21", 1)
    assert search.violation_count == 1
    # trial 0 of the probe is a generated pair, not the published one
    assert probe.trials == 1
    if probe.violation_count:
        a = probe.violations[0].witness.matrices[0]
        b = search.violations[0].witness.matrices[0]
        assert not np.array_equal(a, b)


def test_margin_shrinks_as_y_scales_toward_zero():
    rng = np.random.default_rng(31)
    from blockdet.linalg import BlockUpperTriangular

    x = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
    z = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
    y = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
    margins = []
    for delta in (1.0, 1e-1, 1e-3):
        t = BlockUpperTriangular(x=x, y=delta * y, z=z)
        margins.append(check_cor_c0(t).margin)
    assert margins[0] > margins[1] > margins[2] > 0


def test_lemma1_margin_shrinks_with_asymmetry():
    rng = np.random.default_rng(33)
    g = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
    sym = (g + g.T) / 2
    anti = (g - g.T) / 2
    margins = []
    for delta in (1e-1, 1e-3):
        margins.append(check_lemma1(sym + delta * anti).margin)
    assert margins[0] > margins[1] > 0


# ---------------------------------------------------------------------------
# published examples


def test_reproduce_example1():
    report = reproduce_paper_example("example1")
    assert report.verdict is Verdict.VIOLATED
    assert report.lhs.value.real == pytest.approx(1.25e8, rel=5e-3)
    assert report.rhs.value.real == pytest.approx(9.93e8, rel=5e-3)


def test_reproduce_remark_minus12():
    report = reproduce_paper_example("remark_minus12")
    assert report.finding("det_xbar_x_re") == pytest.approx(-12.0, abs=1e-9)


def test_reproduce_example3():
    report = reproduce_paper_example("example3")
    assert report.verdict is Verdict.VIOLATED
    assert report.lhs.value.real == pytest.approx(5193.1, rel=2e-3)
    assert report.rhs.value.real == pytest.approx(20248.0, rel=2e-3)


def test_reproduce_unknown_id_rejected():
    with pytest.raises(ValueError, match="unknown example"):
        reproduce_paper_example("example9")


def test_compare_rows_all_pass():
    for example_id in ("example1", "remark_minus12", "example3"):
        rows = compare_paper_example(example_id)
        assert rows and all(row["pass"] for row in rows)
