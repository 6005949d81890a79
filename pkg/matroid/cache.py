"""
On-disk basis graphs.

A cache file is one msgpack map: format version, type string, reflection
order, node and edge counts, node labels, adjacency lists, and a sha256
checksum over the packed body.
"""
from __future__ import annotations

import hashlib
import logging
import os
import tempfile
from pathlib import Path
from typing import Optional

import msgpack

from config.limits import get_cache_dir
from coxeter.roots import RootSystem

from .exceptions import GammaCacheError
from .gamma import BasisGraph, build_gamma
from .orders import ReflectionOrder

logger = logging.getLogger(__name__)

FORMAT_VERSION = 1
_BODY_KEYS = ("version", "type", "order", "nodes", "edges", "labels", "children")


def _body(graph: BasisGraph) -> dict:
    return {
        "version": FORMAT_VERSION,
        "type": graph.type_name,
        "order": list(graph.order),
        "nodes": graph.node_count,
        "edges": graph.edge_count,
        "labels": list(graph.labels),
        "children": [list(c) for c in graph.children],
    }


def _checksum(body: dict) -> str:
    packed = msgpack.packb([body[k] for k in _BODY_KEYS], use_bin_type=True)
    return hashlib.sha256(packed).hexdigest()


def serialize_gamma(graph: BasisGraph) -> bytes:
    body = _body(graph)
    body["checksum"] = _checksum(body)
    return msgpack.packb(body, use_bin_type=True)


def deserialize_gamma(data: bytes) -> BasisGraph:
    try:
        body = msgpack.unpackb(data, raw=False)
    except (msgpack.exceptions.ExtraData, msgpack.exceptions.UnpackException, ValueError, TypeError) as exc:
        raise GammaCacheError(f"unreadable basis graph: {exc}") from exc
    if not isinstance(body, dict) or any(k not in body for k in _BODY_KEYS + ("checksum",)):
        raise GammaCacheError("basis graph header is incomplete")
    if body["version"] != FORMAT_VERSION:
        raise GammaCacheError(f"basis graph format {body['version']}, expected {FORMAT_VERSION}")
    if body["checksum"] != _checksum(body):
        raise GammaCacheError("basis graph checksum mismatch")
    graph = BasisGraph(
        type_name=body["type"],
        order=tuple(body["order"]),
        labels=tuple(body["labels"]),
        children=tuple(tuple(c) for c in body["children"]),
    )
    if graph.node_count != body["nodes"] or graph.edge_count != body["edges"]:
        raise GammaCacheError("basis graph counts do not match its header")
    return graph


def cache_key(type_name: str, order: ReflectionOrder) -> str:
    text = f"{type_name}|{','.join(map(str, order.sequence))}"
    return hashlib.sha256(text.encode("utf-8")).hexdigest()[:16]


def cache_path(rs: RootSystem, order: ReflectionOrder, cache_dir=None) -> Path:
    return get_cache_dir(cache_dir) / f"gamma-{cache_key(str(rs.ctype), order)}.msgpack"


def write_gamma(graph: BasisGraph, path: Path) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
    try:
        with os.fdopen(fd, "wb") as handle:
            handle.write(serialize_gamma(graph))
        os.replace(tmp, path)
    except OSError:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    logger.info("[CACHE] wrote path=%s nodes=%s", path, graph.node_count)
    return path


def read_gamma(path: Path) -> BasisGraph:
    return deserialize_gamma(Path(path).read_bytes())


def load_or_build_gamma(rs: RootSystem, order: ReflectionOrder, cache_dir=None, allow_large: bool = False, write: bool = True) -> BasisGraph:
    path = cache_path(rs, order, cache_dir)
    if path.exists():
        try:
            graph = read_gamma(path)
            if graph.type_name == str(rs.ctype) and graph.order == order.sequence:
                logger.info("[CACHE] hit path=%s", path)
                return graph
            logger.warning("[CACHE] stale path=%s", path)
        except GammaCacheError as exc:
            logger.warning("[CACHE] rebuilding path=%s reason=%s", path, exc)
    graph = build_gamma(rs, order, allow_large=allow_large)
    if write:
        try:
            write_gamma(graph, path)
        except OSError as exc:
            logger.warning("[CACHE] could not write path=%s error=%s", path, exc)
    return graph


def cached_gamma(rs: RootSystem, order: ReflectionOrder, cache_dir: Optional[str] = None, allow_large: bool = False) -> BasisGraph:
    """Cached graph when a cache directory is given, a fresh build otherwise."""
    if cache_dir is None:
        return build_gamma(rs, order, allow_large=allow_large)
    return load_or_build_gamma(rs, order, cache_dir, allow_large)
