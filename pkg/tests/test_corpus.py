from __future__ import annotations

import pytest

from burngame.canon import canonical_form
from burngame.corpus import CorpusError, CorpusSpec, enumerate_graphs, isomorphism_classes, load_corpus, stream_to_file, trees
from burngame.graph import complement, is_connected, is_tree
from oracles import burnside_count, connected_counts, orbit_classes


def test_oracles_reproduce_frozen_counts(class_counts):
    totals = [burnside_count(n) for n in range(1, 9)]
    assert totals == [class_counts["all"][n] for n in range(1, 9)]
    conn = connected_counts(totals)
    assert conn == [class_counts["connected"][n] for n in range(1, 9)]
    # a graph and its complement are never both disconnected
    assert [2 * c - t for c, t in zip(conn, totals)] == [class_counts["both_connected"][n] for n in range(1, 9)]
    for n in range(1, 6):
        assert orbit_classes(n) == class_counts["all"][n]
        assert orbit_classes(n, connected_only=True) == class_counts["connected"][n]


@pytest.mark.parametrize("n", range(1, 8))
def test_class_counts_match_fixtures(n, class_counts):
    assert sum(1 for _ in enumerate_graphs(CorpusSpec(n))) == class_counts["all"][n]
    assert sum(1 for _ in enumerate_graphs(CorpusSpec(n, connected_only=True))) == class_counts["connected"][n]
    assert sum(1 for _ in enumerate_graphs(CorpusSpec(n, both_connected=True))) == class_counts["both_connected"][n]


@pytest.mark.parametrize("n", range(1, 10))
def test_tree_counts(n, class_counts):
    ts = trees(n)
    assert len(ts) == class_counts["trees"][n]
    assert all(is_tree(t) for t in ts)
    if n <= 7:
        connected_trees = {canonical_form(g) for g in isomorphism_classes(n) if is_tree(g)}
        assert connected_trees == {canonical_form(t) for t in ts}


def test_labeled_corpus():
    assert sum(1 for _ in enumerate_graphs(CorpusSpec(3, dedup=False))) == 8
    assert sum(1 for _ in enumerate_graphs(CorpusSpec(4, connected_only=True, dedup=False))) == 38


@pytest.mark.parametrize("n", range(1, 6))
def test_filters_commute_with_dedup(n):
    for flag in ("connected_only", "both_connected"):
        filtered_first = {canonical_form(g) for g in enumerate_graphs(CorpusSpec(n, dedup=False, **{flag: True}))}
        deduped = {canonical_form(g) for g in enumerate_graphs(CorpusSpec(n, **{flag: True}))}
        assert filtered_first == deduped


def test_filters_hold_and_classes_are_distinct():
    for n in range(1, 7):
        graphs = list(enumerate_graphs(CorpusSpec(n, both_connected=True)))
        assert all(is_connected(g) and is_connected(complement(g)) for g in graphs)
        assert len({canonical_form(g) for g in graphs}) == len(graphs)
    both4 = list(enumerate_graphs(CorpusSpec(4, both_connected=True)))
    assert len(both4) == 1 and sorted(both4[0].degree(v) for v in range(4)) == [1, 1, 2, 2]


def test_enumeration_is_deterministic():
    first = [g.adj for g in enumerate_graphs(CorpusSpec(6, connected_only=True))]
    isomorphism_classes.cache_clear()
    second = [g.adj for g in enumerate_graphs(CorpusSpec(6, connected_only=True))]
    assert first == second


@pytest.mark.parametrize(
    "kwargs",
    [dict(n=0), dict(n=9), dict(n=8), dict(n=8, connected_only=True), dict(n=8, dedup=False)],
)
def test_spec_limits(kwargs):
    with pytest.raises(CorpusError):
        CorpusSpec(**kwargs)


def test_corpus_files(tmp_path):
    one = tmp_path / "n1.g6"
    assert stream_to_file(CorpusSpec(1), str(one)) == 1
    assert one.read_text() == "@\n"
    five = tmp_path / "n5.g6"
    stream_to_file(CorpusSpec(5, connected_only=True), str(five))
    assert list(load_corpus(str(five))) == list(enumerate_graphs(CorpusSpec(5, connected_only=True)))
    bad = tmp_path / "bad.g6"
    bad.write_text("@\nBw\n\nnot graph6\n")
    with pytest.raises(CorpusError, match="line 4"):
        list(load_corpus(str(bad)))
