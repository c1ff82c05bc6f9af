from __future__ import annotations

import json

import pytest

from togliatti.cache import ResultCache, cache_key
from togliatti.report import analyze


def test_analyze_tags_consistency(exception_d5):
    rep = analyze(exception_d5)
    tags = rep.tags
    assert tags["minimal"] and tags["smooth_minimal"]
    assert not tags["trivial"]
    # smooth_minimal implies minimal and smoothness
    assert tags["smooth_minimal"] == (tags["minimal"] and rep.smoothness.is_smooth)


def test_analyze_selected_checks(togliatti_cubic):
    rep = analyze(togliatti_cubic, checks=("wlp",))
    assert rep.wlp is not None
    assert rep.togliatti is None and rep.smoothness is None and rep.stability is None
    with pytest.raises(ValueError):
        analyze(togliatti_cubic, checks=("nope",))


def test_analyze_stability_skipped_for_small_rank():
    from togliatti.monomials import make_ideal

    pair = make_ideal(1, 3, [(3, 0), (0, 3)])
    rep = analyze(pair)
    assert rep.stability is None
    assert "rank" in rep.stability_note


def test_report_json_serializable(exception_d4):
    rep = analyze(exception_d4)
    data = rep.to_json_dict()
    blob = json.dumps(data, sort_keys=True)
    back = json.loads(blob)
    assert back["tags"]["minimal"] is True
    assert back["smoothness"]["is_smooth"] is False
    assert back["stability"]["slope_of_E"] == {"num": -5, "den": 1}  # -20/4
    assert "timing_ms" not in back
    assert "timing_ms" in rep.to_json_dict(include_timing=True)


def test_cache_roundtrip(tmp_path):
    cache = ResultCache(str(tmp_path))
    key = cache_key("analyze", "0.1.0", {"x": 1})
    assert cache.lookup("analyze", key) is None
    cache.append("analyze", key, {"answer": 42})
    assert cache.lookup("analyze", key) == {"answer": 42}
    # append-only: a second value for the same key wins on read, nothing is rewritten
    cache.append("analyze", key, {"answer": 43})
    lines = (tmp_path / "analyze.jsonl").read_text().splitlines()
    assert len(lines) == 2
    assert cache.lookup("analyze", key) == {"answer": 43}


def test_cache_disabled_without_env(monkeypatch):
    monkeypatch.delenv("TOGLIATTI_CACHE_DIR", raising=False)
    cache = ResultCache()
    assert not cache.enabled
    cache.append("analyze", "k", {"v": 1})
    assert cache.lookup("analyze", "k") is None
