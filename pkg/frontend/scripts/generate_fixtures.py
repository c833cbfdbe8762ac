"""Regenerate the frozen service responses used by the frontend tests.

Run from the repository root after installing the Python package:

    python3 frontend/scripts/generate_fixtures.py
"""
import json
from pathlib import Path

from fastapi.testclient import TestClient

from qdbsample.service import create_app

ROOT = Path(__file__).resolve().parents[2]
FIXTURES = ROOT / "frontend" / "tests" / "fixtures"
PROFILE = json.loads((ROOT / "tests" / "data" / "toy_profile.json").read_text())


def dump(name, payload):
    (FIXTURES / name).write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")


def main():
    client = TestClient(create_app())
    dump("toy_profile.json", PROFILE)

    upload = client.post("/api/profiles", json=PROFILE).json()
    dump("upload_response.json", upload)
    profile_id = upload["profileId"]

    sample = client.post(
        f"/api/profiles/{profile_id}/sample",
        json={"k": 10, "seed": 7, "maxLen": 5},
    ).json()
    dump("sample_seed7.json", sample)

    replay = client.post(
        f"/api/profiles/{profile_id}/sample",
        json={"k": 10, "seed": 7, "maxLen": 5},
    ).json()
    for key in ("records", "subProfile", "seed"):
        assert replay[key] == sample[key], "sampling must be deterministic for a fixed seed"

    flat = client.post(
        f"/api/profiles/{profile_id}/sample", json={"k": 400, "seed": 1}
    ).json()
    boosted = client.post(
        f"/api/profiles/{profile_id}/sample",
        json={"k": 400, "seed": 1, "predicateWeights": {"P3": 50}},
    ).json()
    dump("sample_flat_weights.json", flat)
    dump("sample_boosted_p3.json", boosted)


if __name__ == "__main__":
    main()
