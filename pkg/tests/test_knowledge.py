import math
import random

import numpy as np
import pytest

from sehatbot.gateway import EmbeddingVector, MockGateway
from sehatbot.knowledge import (
    DuplicateChunkError,
    DimensionMismatchError,
    KnowledgeChunk,
    KnowledgeError,
    VectorIndex,
    chunk_document,
    ingest_corpus,
)
from sehatbot.service import DATA_DIR

DIM = 16


def unit(values):
    norm = math.sqrt(sum(v * v for v in values))
    return tuple(v / norm for v in values)


def make_chunk(i, values, tags=frozenset()):
    return KnowledgeChunk(
        chunk_id=f"doc#{i:04d}",
        doc_id="doc",
        text=f"chunk {i}",
        embedding=EmbeddingVector(values=unit(values), dimension=len(values)),
        tags=frozenset(tags),
        ordinal=i,
    )


def random_index(rng, n, dim=DIM):
    index = VectorIndex(dimension=dim)
    for i in range(n):
        index.add(make_chunk(i, [rng.gauss(0, 1) for _ in range(dim)]))
    return index


def brute_force_topk(index, query, k):
    """Independent oracle: pure-python linear scan, no numpy."""
    scored = []
    for position, chunk in enumerate(index.chunks()):
        sim = sum(a * b for a, b in zip(chunk.embedding.values, query))
        scored.append((-sim, position, chunk.chunk_id, sim))
    scored.sort(key=lambda t: (t[0], t[1]))
    return [(cid, sim) for _neg, _pos, cid, sim in scored[:k]]


# --- chunking -----------------------------------------------------------


def test_short_document_single_chunk():
    gw = MockGateway(dimension=DIM)
    text = " ".join(f"w{i}" for i in range(10))
    chunks = chunk_document("d", text, chunk_max=300, overlap=50, embed=gw.embed)
    assert len(chunks) == 1
    assert chunks[0].text == text
    assert chunks[0].ordinal == 0


def test_stride_arithmetic_700_words():
    gw = MockGateway(dimension=DIM)
    words = [f"w{i}" for i in range(700)]
    chunks = chunk_document("d", " ".join(words), 300, 50, embed=gw.embed)
    spans = [c.text.split() for c in chunks]
    assert [len(s) for s in spans] == [300, 300, 200]
    assert spans[0] == words[0:300]
    assert spans[1] == words[250:550]
    assert spans[2] == words[500:700]
    assert [c.ordinal for c in chunks] == [0, 1, 2]


def test_consecutive_chunks_share_exact_overlap():
    gw = MockGateway(dimension=DIM)
    words = [f"w{i}" for i in range(800)]
    chunks = chunk_document("d", " ".join(words), 300, 50, embed=gw.embed)
    for left, right in zip(chunks, chunks[1:]):
        assert left.text.split()[-50:] == right.text.split()[:50]


def test_coverage_reconstructs_source():
    gw = MockGateway(dimension=DIM)
    words = [f"w{i}" for i in range(613)]
    chunks = chunk_document("d", " ".join(words), 100, 25, embed=gw.embed)
    rebuilt = chunks[0].text.split()
    for chunk in chunks[1:]:
        rebuilt.extend(chunk.text.split()[25:])
    assert rebuilt == words


def test_overlap_precondition():
    gw = MockGateway(dimension=DIM)
    with pytest.raises(KnowledgeError):
        chunk_document("d", "a b c", 10, 10, embed=gw.embed)


def test_empty_text_empty_list_with_warning(caplog):
    gw = MockGateway(dimension=DIM)
    with caplog.at_level("WARNING", logger="sehatbot.knowledge"):
        assert chunk_document("d", "   ", 10, 2, embed=gw.embed) == []
    assert any("no chunks" in r.message for r in caplog.records)


# --- index --------------------------------------------------------------


def test_add_then_get():
    index = VectorIndex(dimension=DIM)
    chunk = make_chunk(0, range(1, DIM + 1))
    index.add(chunk)
    assert index.get(chunk.chunk_id) == chunk


def test_duplicate_id_rejected():
    index = VectorIndex(dimension=DIM)
    index.add(make_chunk(0, range(1, DIM + 1)))
    with pytest.raises(DuplicateChunkError):
        index.add(make_chunk(0, range(1, DIM + 1)))


def test_dimension_mismatch_rejected():
    index = VectorIndex(dimension=DIM)
    with pytest.raises(DimensionMismatchError):
        index.add(make_chunk(0, range(1, 9)))


def test_ten_thousand_adds_counted():
    rng = random.Random(1)
    index = random_index(rng, 10_000, dim=8)
    assert len(index) == 10_000


def test_exact_text_match_rank_one():
    gw = MockGateway(dimension=64)
    index = VectorIndex(dimension=64)
    texts = ["pehla chunk hai", "dusra alag text", "teesra kuch aur"]
    for i, text in enumerate(texts):
        index.add(
            KnowledgeChunk(
                chunk_id=f"c{i}",
                doc_id="d",
                text=text,
                embedding=gw.embed(text),
                tags=frozenset(),
                ordinal=i,
            )
        )
    results = index.retrieve("dusra alag text", k=2, embed=gw.embed)
    assert results[0].chunk_id == "c1"
    assert results[0].similarity == pytest.approx(1.0, abs=1e-9)
    assert [r.rank for r in results] == [1, 2]


def test_k_larger_than_index_returns_all():
    rng = random.Random(2)
    index = random_index(rng, 5)
    results = index.search_vector(np.array(unit(range(1, DIM + 1))), k=10)
    assert len(results) == 5


def test_empty_index_returns_empty():
    gw = MockGateway(dimension=DIM)
    index = VectorIndex(dimension=DIM)
    assert index.retrieve("anything", k=3, embed=gw.embed) == []


def test_k_must_be_positive():
    index = VectorIndex(dimension=DIM)
    with pytest.raises(KnowledgeError):
        index.search_vector(np.zeros(DIM), k=0)


def test_tag_filter_is_strict():
    index = VectorIndex(dimension=DIM)
    tagged = make_chunk(0, range(1, DIM + 1), tags={("Societal", "MedicalConsensus")})
    untagged = make_chunk(1, range(2, DIM + 2))
    index.add(tagged)
    index.add(untagged)
    results = index.search_vector(
        np.array(unit(range(1, DIM + 1))),
        k=5,
        tag_filter={("Societal", "MedicalConsensus")},
    )
    assert [r.chunk_id for r in results] == [tagged.chunk_id]


def test_cosine_symmetric():
    rng = random.Random(3)
    for _ in range(20):
        a = np.array(unit([rng.gauss(0, 1) for _ in range(DIM)]))
        b = np.array(unit([rng.gauss(0, 1) for _ in range(DIM)]))
        assert abs(float(a @ b) - float(b @ a)) <= 1e-12


def test_matches_brute_force_oracle_small():
    rng = random.Random(4)
    index = random_index(rng, 200)
    for _ in range(10):
        query = np.array(unit([rng.gauss(0, 1) for _ in range(DIM)]))
        got = index.search_vector(query, k=7)
        expected = brute_force_topk(index, query, 7)
        assert [r.chunk_id for r in got] == [cid for cid, _ in expected]
        for r, (_cid, sim) in zip(got, expected):
            assert r.similarity == pytest.approx(sim, abs=1e-9)


def test_ties_broken_by_insertion_order():
    index = VectorIndex(dimension=4)
    same = [1.0, 0.0, 0.0, 0.0]
    index.add(make_chunk(0, same))
    index.add(make_chunk(1, same))
    results = index.search_vector(np.array(same), k=2)
    assert [r.chunk_id for r in results] == ["doc#0000", "doc#0001"]


def test_snapshot_isolated_from_mutation():
    rng = random.Random(5)
    index = random_index(rng, 10)
    chunks_before = index.chunks()
    index.add(make_chunk(99, range(1, DIM + 1)))
    assert len(chunks_before) == 10
    assert len(index.chunks()) == 11


def test_persistence_round_trip(tmp_path):
    rng = random.Random(6)
    index = random_index(rng, 25)
    path = tmp_path / "index.json"
    index.save(path)
    loaded = VectorIndex.load(path)
    assert len(loaded) == len(index)
    query = np.array(unit(range(1, DIM + 1)))
    before = [(r.chunk_id, r.similarity) for r in index.search_vector(query, k=5)]
    after = [(r.chunk_id, r.similarity) for r in loaded.search_vector(query, k=5)]
    assert before == after


def test_load_rejects_foreign_files(tmp_path):
    path = tmp_path / "x.json"
    path.write_text('{"format": "something-else"}')
    with pytest.raises(KnowledgeError):
        VectorIndex.load(path)


def test_corpus_ingest_validates_tags(tmp_path):
    (tmp_path / "doc.md").write_text(
        "---\ndoc_id: d1\ntags:\n  - [Societal, Astrology]\n---\nbody text here\n"
    )
    gw = MockGateway(dimension=DIM)
    from sehatbot.cultural import ProfileError

    with pytest.raises(ProfileError, match="Astrology"):
        ingest_corpus(tmp_path, embed=gw.embed, dimension=DIM)


def test_shipped_corpus_ingests():
    gw = MockGateway()
    index = ingest_corpus(DATA_DIR / "corpus", embed=gw.embed, dimension=gw.dimension)
    assert len(index) >= 6
    assert ("Regional", "HealthcareAccess") in {
        t for c in index.chunks() for t in c.tags
    }
