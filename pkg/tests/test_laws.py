import pytest

from auratopo import LAW_NAMES, run_laws
from auratopo.laws import CORE, EXTENDED, LawContext, get_law
from auratopo import kernel


def test_registry_names_are_unique_and_tiered():
    assert len(LAW_NAMES) == len(set(LAW_NAMES))
    assert len(LAW_NAMES) == 28
    tiers = {get_law(name).tier for name in LAW_NAMES}
    assert tiers == {CORE, EXTENDED}
    for name in LAW_NAMES:
        assert get_law(name).description


def test_unknown_law_and_tier_are_rejected():
    with pytest.raises(ValueError, match="unknown law 'closure-is-cool'"):
        run_laws(names=["closure-is-cool"])
    with pytest.raises(ValueError, match="unknown law tier"):
        run_laws(tier="experimental", max_n=1)


def test_all_laws_hold_on_the_small_grid():
    report = run_laws(max_n=2)
    assert report.ok
    assert {o.name for o in report.outcomes} == set(LAW_NAMES)
    for o in report.outcomes:
        assert o.failed == 0
        assert o.failures == ()
        assert o.checks > 0 or o.tier == EXTENDED
    assert report.text().splitlines()[-1] == "laws: all laws hold on sizes 0..2"


def test_selection_and_tier_filter():
    report = run_laws(names=["closure-interior-duality"], max_n=1)
    assert [o.name for o in report.outcomes] == ["closure-interior-duality"]
    core = run_laws(tier=CORE, max_n=1)
    assert all(o.tier == CORE for o in core.outcomes)
    ext = run_laws(tier=EXTENDED, max_n=2)
    assert {o.name for o in ext.outcomes} == set(LAW_NAMES) - {
        o.name for o in core.outcomes
    }


def test_shared_context_is_reused():
    ctx = LawContext(2)
    first = run_laws(names=["derived-set-laws"], max_n=2, ctx=ctx)
    second = run_laws(names=["derived-closure-decomposition"], max_n=2, ctx=ctx)
    assert first.ok and second.ok


def test_broken_closure_kernel_is_caught_and_named(monkeypatch):
    # Drop the lowest bit of every nonempty closure.
    real = kernel.aura_closure_mask

    def broken(n, scopes, a):
        out = real(n, scopes, a)
        return out & (out - 1)

    monkeypatch.setattr(kernel, "aura_closure_mask", broken)
    report = run_laws(
        names=["derived-closure-decomposition", "cech-closure-axioms"], max_n=2
    )
    assert not report.ok
    by_name = {o.name: o for o in report.outcomes}
    decomposition = by_name["derived-closure-decomposition"]
    assert decomposition.failed > 0
    assert all("derived-closure" in m for m in decomposition.failures)
    assert any("space:" in m for m in decomposition.failures)
    # Witness lists are capped, totals are not.
    assert len(decomposition.failures) <= 5 <= decomposition.failed
    text = report.text()
    assert "FAIL" in text
    assert text.rstrip().endswith("law failures present on sizes 0..2")
    data = report.to_json()
    assert data["ok"] is False
    broken_rows = [row for row in data["laws"] if row["failed"]]
    assert broken_rows and all(row["failures"] for row in broken_rows)


def test_clean_rerun_after_fault_injection():
    report = run_laws(names=["derived-closure-decomposition"], max_n=2)
    assert report.ok


def test_size_gate():
    from auratopo import SizeOutOfRange

    with pytest.raises(SizeOutOfRange):
        run_laws(max_n=4)
