"""HTTP service for interactive sub-profile discovery.

Uploaded profiles and qDBs live in process memory.  Weight indexes are cached
per (mode, min, max, predicate-weight) key and shared across requests; index
construction per key is serialized so concurrent identical requests coalesce.
Seeds are optional but always echoed back, so every response is replayable.
"""
from __future__ import annotations

import secrets
import threading
import time
import uuid
from dataclasses import dataclass, field

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from .combinatorics import PascalCache
from .kgprofile import (
    PredicateWeights,
    Profile,
    ProfileError,
    merge_subprofiles,
    pattern_to_subprofile,
    profile_to_qdb,
)
from .qdb import LengthUtility, PriceTable, QdbError, QuantitativeDatabase, parse_qdb
from .sampler import SampleRequest, sample_patterns
from .weighting import ZeroMassError, build_weight_index


class SampleBody(BaseModel):
    minLen: int = 1
    maxLen: int | None = None
    mode: str = "hup"
    k: int = Field(default=1)
    seed: int | None = None
    predicateWeights: dict[str, int] | None = None


class QdbUpload(BaseModel):
    text: str
    prices: dict[str, int] | None = None


@dataclass
class Variant:
    """A profile converted under one predicate-weight table."""

    db: QuantitativeDatabase
    cache: PascalCache
    indexes: dict = field(default_factory=dict)


@dataclass
class ProfileEntry:
    profile: Profile
    variants: dict = field(default_factory=dict)
    lock: threading.Lock = field(default_factory=threading.Lock)


@dataclass
class QdbEntry:
    db: QuantitativeDatabase
    cache: PascalCache
    indexes: dict = field(default_factory=dict)
    lock: threading.Lock = field(default_factory=threading.Lock)


def _length_utility(body: SampleBody) -> LengthUtility:
    try:
        return LengthUtility(mode=body.mode, min_len=body.minLen, max_len=body.maxLen)
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc


def _validate_k(body: SampleBody) -> None:
    if body.k < 1:
        raise HTTPException(status_code=400, detail="k must be >= 1")
    if body.seed is not None and not 0 <= body.seed < 2**64:
        raise HTTPException(status_code=400, detail="seed must fit in 64 unsigned bits")


def create_app(edge_cap: int = 10**6, qdb_char_cap: int = 50_000_000) -> FastAPI:
    app = FastAPI(title="qdbsample")
    profiles: dict[str, ProfileEntry] = {}
    qdbs: dict[str, QdbEntry] = {}

    def get_profile(profile_id: str) -> ProfileEntry:
        entry = profiles.get(profile_id)
        if entry is None:
            raise HTTPException(status_code=404, detail="unknown profile id")
        return entry

    def get_qdb(qdb_id: str) -> QdbEntry:
        entry = qdbs.get(qdb_id)
        if entry is None:
            raise HTTPException(status_code=404, detail="unknown qdb id")
        return entry

    @app.post("/api/profiles")
    def upload_profile(body: dict):
        try:
            profile = Profile.from_json(body)
        except ProfileError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc
        if len(profile.edges) > edge_cap:
            raise HTTPException(status_code=413, detail=f"profile exceeds {edge_cap} edges")
        profile_id = str(uuid.uuid4())
        profiles[profile_id] = ProfileEntry(profile)
        return {"profileId": profile_id, "stats": _profile_stats(profile)}

    def _profile_stats(profile: Profile) -> dict:
        db, _ = profile_to_qdb(profile)
        stats = profile.stats()
        stats["transactions"] = db.stats()
        return stats

    @app.get("/api/profiles/{profile_id}/stats")
    def profile_stats(profile_id: str):
        return _profile_stats(get_profile(profile_id).profile)

    @app.post("/api/profiles/{profile_id}/sample")
    def profile_sample(profile_id: str, body: SampleBody):
        entry = get_profile(profile_id)
        utility = _length_utility(body)
        _validate_k(body)
        try:
            pw = PredicateWeights(body.predicateWeights)
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc

        started = time.perf_counter()
        with entry.lock:
            variant = entry.variants.get(pw.key())
            if variant is None:
                db, _ = profile_to_qdb(entry.profile, pw)
                variant = Variant(db, PascalCache(db.max_transaction_length()))
                entry.variants[pw.key()] = variant
            index_key = (utility.mode, utility.min_len, utility.max_len)
            index = variant.indexes.get(index_key)
            if index is None:
                try:
                    index = build_weight_index(variant.db, utility, variant.cache)
                except ZeroMassError as exc:
                    raise HTTPException(status_code=409, detail=str(exc)) from exc
                variant.indexes[index_key] = index
        preprocess_ms = (time.perf_counter() - started) * 1000

        seed = body.seed if body.seed is not None else secrets.randbits(63)
        request = SampleRequest(utility=utility, k=body.k, seed=seed)
        started = time.perf_counter()
        records = sample_patterns(variant.db, index, request, variant.cache)
        draw_ms = (time.perf_counter() - started) * 1000 / body.k

        subprofiles = [
            pattern_to_subprofile(variant.db.labels_of(r.items), entry.profile)
            for r in records
        ]
        merged = merge_subprofiles(subprofiles)
        return {
            "records": [r.to_json(variant.db) for r in records],
            "subProfile": merged.to_json(),
            "seed": seed,
            "timings": {"preprocessMs": preprocess_ms, "drawMsPerPattern": draw_ms},
        }

    @app.post("/api/qdbs")
    def upload_qdb(body: QdbUpload):
        if len(body.text) > qdb_char_cap:
            raise HTTPException(status_code=413, detail="qdb text too large")
        try:
            prices = PriceTable(body.prices)
            db = parse_qdb(body.text, prices)
        except (QdbError, ValueError) as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc
        qdb_id = str(uuid.uuid4())
        qdbs[qdb_id] = QdbEntry(db, PascalCache(db.max_transaction_length()))
        return {"qdbId": qdb_id, "stats": db.stats()}

    @app.get("/api/qdbs/{qdb_id}/stats")
    def qdb_stats(qdb_id: str):
        return get_qdb(qdb_id).db.stats()

    @app.post("/api/qdbs/{qdb_id}/sample")
    def qdb_sample(qdb_id: str, body: SampleBody):
        entry = get_qdb(qdb_id)
        utility = _length_utility(body)
        _validate_k(body)
        if body.predicateWeights is not None:
            raise HTTPException(status_code=400, detail="predicateWeights apply to profiles only")

        started = time.perf_counter()
        with entry.lock:
            index_key = (utility.mode, utility.min_len, utility.max_len)
            index = entry.indexes.get(index_key)
            if index is None:
                try:
                    index = build_weight_index(entry.db, utility, entry.cache)
                except ZeroMassError as exc:
                    raise HTTPException(status_code=409, detail=str(exc)) from exc
                entry.indexes[index_key] = index
        preprocess_ms = (time.perf_counter() - started) * 1000

        seed = body.seed if body.seed is not None else secrets.randbits(63)
        request = SampleRequest(utility=utility, k=body.k, seed=seed)
        started = time.perf_counter()
        records = sample_patterns(entry.db, index, request, entry.cache)
        draw_ms = (time.perf_counter() - started) * 1000 / body.k
        return {
            "records": [r.to_json(entry.db) for r in records],
            "seed": seed,
            "timings": {"preprocessMs": preprocess_ms, "drawMsPerPattern": draw_ms},
        }

    return app
