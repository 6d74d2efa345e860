"""The law catalogue must catch broken implementations, not just pass on good ones."""
import random

import pytest

from multilin import laws, verify
from multilin.antisym import compound as real_compound
from multilin.antisym import wedge as real_wedge
from multilin.polymap import PolyMap
from multilin.polymap import compose as real_compose
from multilin.symalg import odot as real_odot


def nudge(m):
    """Same shape, one entry off by one."""
    out = m * 1
    if out.data:
        out.data[-1] += 1
    return out


def fails_within(law, rounds=40, seed=0):
    rng = random.Random(seed)
    for _ in range(rounds):
        try:
            law(rng)
        except laws.LawViolation:
            return True
    return False


@pytest.mark.parametrize("suite", sorted(laws.SUITES))
def test_suites_pass_on_real_code(suite):
    for law in laws.SUITES[suite]:
        passed, total, failures = verify.run_law(law, seed=1, rounds=3)
        assert passed == total, failures


def test_broken_odot_is_caught(monkeypatch):
    monkeypatch.setattr(laws, "odot", lambda a, b: nudge(real_odot(a, b)))
    assert fails_within(laws.odot_matches_definition)
    assert fails_within(laws.odot_associative)


def test_broken_wedge_is_caught(monkeypatch):
    monkeypatch.setattr(laws, "wedge", lambda a, b: nudge(real_wedge(a, b)))
    assert fails_within(laws.wedge_matches_definition)


def test_broken_compound_is_caught(monkeypatch):
    monkeypatch.setattr(laws, "compound", lambda a, k: real_compound(a, k) * 2)
    assert fails_within(laws.compound_minors)


def test_broken_compose_is_caught(monkeypatch):
    def bad(phi, psi, max_weight=None):
        out = real_compose(phi, psi, max_weight)
        return PolyMap(out.n_in, out.n_out, {k: nudge(b) for k, b in out.blocks.items()})
    monkeypatch.setattr(laws, "compose", bad)
    assert fails_within(laws.compose_pointwise)


def test_broken_norm_is_caught(monkeypatch):
    real = laws.holder_norm
    monkeypatch.setattr(laws, "holder_norm", lambda a, rho=2.0: real(a, rho) ** 0.5)
    assert fails_within(laws.norm_axioms)


def test_report_flags_failures(monkeypatch):
    def always_fails(rng):
        laws.expect(False, "deliberate", k=1)
    monkeypatch.setitem(laws.SUITES, "broken", (always_fails,))
    lines, ok = verify.run_suites(0, rounds=2, suites=["broken"])
    assert not ok
    assert lines[1].split() == ["broken", "0/2", "FAIL"]
    assert "deliberate (k=1)" in lines[2]
    assert lines[-1] == "some suites FAILED"


def test_report_is_deterministic():
    assert verify.run_suites(7, rounds=2) == verify.run_suites(7, rounds=2)
    assert verify.law_rng(7, "a").random() != verify.law_rng(7, "b").random()
