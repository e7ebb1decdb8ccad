"""RAG substrate: chunk curated documents, embed them, retrieve top-k.

The index is an exhaustive linear scan over unit-norm embeddings (the
corpus is small and curated; exactness beats approximate search here).
Readers work on an immutable snapshot, so a retrieval that started
before a mutation sees the pre-mutation state.
"""

from __future__ import annotations

import json
import logging
import threading
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Iterable, Optional, Union

import numpy as np

logger = logging.getLogger(__name__)

from .gateway import EmbeddingVector

INDEX_FORMAT = "sehatbot-index"
INDEX_VERSION = 1

DEFAULT_CHUNK_MAX = 300
DEFAULT_OVERLAP = 50
DEFAULT_TOP_K = 4

Embedder = Callable[[str], EmbeddingVector]
Tag = tuple[str, str]  # (layer, dimension) from the cultural schema


class KnowledgeError(ValueError):
    pass


class DuplicateChunkError(KnowledgeError):
    pass


class DimensionMismatchError(KnowledgeError):
    pass


@dataclass(frozen=True)
class KnowledgeChunk:
    chunk_id: str
    doc_id: str
    text: str
    embedding: EmbeddingVector
    tags: frozenset[Tag]
    ordinal: int


@dataclass(frozen=True)
class RetrievalResult:
    chunk_id: str
    similarity: float
    rank: int


def chunk_document(
    doc_id: str,
    text: str,
    chunk_max: int = DEFAULT_CHUNK_MAX,
    overlap: int = DEFAULT_OVERLAP,
    *,
    embed: Embedder,
    tags: Iterable[Tag] = (),
) -> list[KnowledgeChunk]:
    """Split into word windows of chunk_max words sharing overlap words.

    Chunk ids are content-addressable (doc id + ordinal) so rebuilt
    indexes stay stable across runs.
    """
    if not 0 <= overlap < chunk_max:
        raise KnowledgeError("require 0 <= overlap < chunk_max")
    words = text.split()
    if not words:
        logger.warning("document %r is empty; no chunks produced", doc_id)
        return []
    tags = frozenset(tags)
    stride = chunk_max - overlap
    chunks: list[KnowledgeChunk] = []
    start = 0
    while True:
        end = min(start + chunk_max, len(words))
        body = " ".join(words[start:end])
        chunks.append(
            KnowledgeChunk(
                chunk_id=f"{doc_id}#{len(chunks):04d}",
                doc_id=doc_id,
                text=body,
                embedding=embed(body),
                tags=tags,
                ordinal=len(chunks),
            )
        )
        if end == len(words):
            return chunks
        start += stride


class VectorIndex:
    """Exact cosine-similarity index over unit-norm chunk embeddings."""

    def __init__(self, dimension: int):
        if dimension <= 0:
            raise KnowledgeError("dimension must be positive")
        self.dimension = dimension
        self._lock = threading.Lock()
        self._chunks: list[KnowledgeChunk] = []
        self._by_id: dict[str, KnowledgeChunk] = {}
        # Cached immutable view; readers that grabbed it keep seeing the
        # pre-mutation state.
        self._view: Optional[tuple[tuple[KnowledgeChunk, ...], np.ndarray]] = None

    def __len__(self) -> int:
        return len(self._chunks)

    def add(self, chunk: KnowledgeChunk) -> None:
        if chunk.embedding.dimension != self.dimension:
            raise DimensionMismatchError(
                f"chunk dimension {chunk.embedding.dimension} != index {self.dimension}"
            )
        with self._lock:
            if chunk.chunk_id in self._by_id:
                raise DuplicateChunkError(f"duplicate chunk_id {chunk.chunk_id!r}")
            self._chunks.append(chunk)
            self._by_id[chunk.chunk_id] = chunk
            self._view = None

    def extend(self, chunks: Iterable[KnowledgeChunk]) -> None:
        for chunk in chunks:
            self.add(chunk)

    def get(self, chunk_id: str) -> Optional[KnowledgeChunk]:
        return self._by_id.get(chunk_id)

    def chunks(self) -> tuple[KnowledgeChunk, ...]:
        chunks, _ = self._snapshot()
        return chunks

    def _snapshot(self) -> tuple[tuple[KnowledgeChunk, ...], Optional[np.ndarray]]:
        with self._lock:
            if not self._chunks:
                return (), None
            if self._view is None:
                self._view = (
                    tuple(self._chunks),
                    np.array([c.embedding.values for c in self._chunks], dtype=np.float64),
                )
            return self._view

    def search_vector(
        self,
        vector: np.ndarray,
        k: int,
        tag_filter: Optional[Iterable[Tag]] = None,
    ) -> list[RetrievalResult]:
        """Top-k by cosine similarity; ties broken by insertion order.

        A tag filter is a strict pre-filter: only chunks carrying at
        least one of the requested tags are candidates.
        """
        if k < 1:
            raise KnowledgeError("k must be >= 1")
        chunks, matrix = self._snapshot()
        if not chunks:
            return []
        vector = np.asarray(vector, dtype=np.float64)
        if vector.shape != (self.dimension,):
            raise DimensionMismatchError(
                f"query dimension {vector.shape} != index {self.dimension}"
            )
        if tag_filter is not None:
            wanted = frozenset(tag_filter)
            candidates = [i for i, c in enumerate(chunks) if c.tags & wanted]
        else:
            candidates = list(range(len(chunks)))
        if not candidates:
            return []
        sims = matrix[candidates] @ vector
        order = np.argsort(-sims, kind="stable")[:k]
        return [
            RetrievalResult(
                chunk_id=chunks[candidates[i]].chunk_id,
                similarity=float(sims[i]),
                rank=rank,
            )
            for rank, i in enumerate(order, start=1)
        ]

    def retrieve(
        self,
        query_text: str,
        k: int = DEFAULT_TOP_K,
        tag_filter: Optional[Iterable[Tag]] = None,
        *,
        embed: Embedder,
    ) -> list[RetrievalResult]:
        if k < 1:
            raise KnowledgeError("k must be >= 1")
        if not len(self):
            return []
        query = np.asarray(embed(query_text).values, dtype=np.float64)
        return self.search_vector(query, k, tag_filter)

    def save(self, path: Union[str, Path]) -> None:
        payload = {
            "format": INDEX_FORMAT,
            "version": INDEX_VERSION,
            "dimension": self.dimension,
            "chunks": [
                {
                    "chunk_id": c.chunk_id,
                    "doc_id": c.doc_id,
                    "text": c.text,
                    "ordinal": c.ordinal,
                    "tags": sorted(list(t) for t in c.tags),
                    "embedding": list(c.embedding.values),
                }
                for c in self._chunks
            ],
        }
        Path(path).write_text(json.dumps(payload, ensure_ascii=False), encoding="utf-8")

    @classmethod
    def load(cls, path: Union[str, Path]) -> "VectorIndex":
        payload = json.loads(Path(path).read_text(encoding="utf-8"))
        if payload.get("format") != INDEX_FORMAT:
            raise KnowledgeError(f"{path}: not a {INDEX_FORMAT} file")
        if payload.get("version") != INDEX_VERSION:
            raise KnowledgeError(f"{path}: unsupported version {payload.get('version')}")
        index = cls(dimension=payload["dimension"])
        for row in payload["chunks"]:
            index.add(
                KnowledgeChunk(
                    chunk_id=row["chunk_id"],
                    doc_id=row["doc_id"],
                    text=row["text"],
                    embedding=EmbeddingVector(
                        values=tuple(row["embedding"]), dimension=payload["dimension"]
                    ),
                    tags=frozenset(tuple(t) for t in row["tags"]),
                    ordinal=row["ordinal"],
                )
            )
        return index


def _parse_front_matter(raw: str, source: str) -> tuple[dict, str]:
    import yaml

    if not raw.startswith("---"):
        return {}, raw
    parts = raw.split("---", 2)
    if len(parts) < 3:
        raise KnowledgeError(f"{source}: unterminated front-matter block")
    meta = yaml.safe_load(parts[1]) or {}
    if not isinstance(meta, dict):
        raise KnowledgeError(f"{source}: front matter must be a mapping")
    return meta, parts[2]


def ingest_corpus(
    corpus_dir: Union[str, Path],
    *,
    embed: Embedder,
    dimension: int,
    chunk_max: int = DEFAULT_CHUNK_MAX,
    overlap: int = DEFAULT_OVERLAP,
) -> VectorIndex:
    """Build an index from a directory of .txt/.md files with front matter.

    Front matter carries doc_id and optional tags as [layer, dimension]
    pairs validated against the cultural schema.
    """
    from .cultural import validate_tag

    index = VectorIndex(dimension=dimension)
    root = Path(corpus_dir)
    files = sorted(p for p in root.iterdir() if p.suffix in (".md", ".txt"))
    for path in files:
        meta, body = _parse_front_matter(path.read_text(encoding="utf-8"), str(path))
        doc_id = str(meta.get("doc_id") or path.stem)
        tags = []
        for pair in meta.get("tags") or []:
            if not isinstance(pair, (list, tuple)) or len(pair) != 2:
                raise KnowledgeError(f"{path}: tag must be a [layer, dimension] pair")
            tags.append(validate_tag(str(pair[0]), str(pair[1])))
        index.extend(
            chunk_document(
                doc_id, body, chunk_max, overlap, embed=embed, tags=tags
            )
        )
    return index
