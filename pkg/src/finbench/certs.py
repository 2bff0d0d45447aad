"""Machine-checkable certificates and their replay machinery.

A certificate records the recipe that produced it plus its parameters, so
replaying recomputes the verdict and witness from scratch and compares them
bit-exactly against the stored record.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .serialize import canonical_dumps

CERT_SCHEMA = "finbench-cert/1"

KINDS = (
    "colimit-test",
    "finitarity",
    "strictness-witness",
    "no-finitary-endo",
    "atoms",
    "superfin",
    "nominal",
    "hausdorff",
)


@dataclass
class Certificate:
    kind: str
    inputs: dict  # {"recipe": name, "params": {...}}, JSON-able
    verdict: str
    witness: dict
    bounds: dict = field(default_factory=dict)
    schema: str = CERT_SCHEMA

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown certificate kind {self.kind!r}")

    def to_payload(self) -> dict:
        return {
            "schema": self.schema,
            "kind": self.kind,
            "inputs": self.inputs,
            "verdict": self.verdict,
            "witness": self.witness,
            "bounds": self.bounds,
        }

    def dumps(self) -> str:
        return canonical_dumps(self.to_payload())

    @staticmethod
    def from_payload(payload: dict) -> "Certificate":
        if payload.get("schema") != CERT_SCHEMA:
            raise ValueError("unsupported certificate schema")
        return Certificate(
            payload["kind"],
            payload["inputs"],
            payload["verdict"],
            payload["witness"],
            payload.get("bounds", {}),
        )


RECIPES: dict[str, object] = {}


def recipe(name):
    def deco(fn):
        RECIPES[name] = fn
        return fn

    return deco


def recompute(cert: Certificate) -> Certificate:
    name = cert.inputs.get("recipe")
    fn = RECIPES.get(name)
    if fn is None:
        raise ValueError(f"unknown recipe {name!r}")
    return fn(**cert.inputs.get("params", {}))


@dataclass
class ReplayResult:
    match: bool
    diffs: tuple
    recomputed: Certificate


def replay(cert: Certificate) -> ReplayResult:
    fresh = recompute(cert)
    diffs = []
    for fieldname in ("kind", "verdict"):
        a, b = getattr(cert, fieldname), getattr(fresh, fieldname)
        if a != b:
            diffs.append(f"{fieldname}: stored {a!r} recomputed {b!r}")
    for fieldname in ("witness", "bounds", "inputs"):
        a = canonical_dumps(getattr(cert, fieldname))
        b = canonical_dumps(getattr(fresh, fieldname))
        if a != b:
            diffs.append(f"{fieldname}: stored and recomputed payloads differ")
    return ReplayResult(not diffs, tuple(diffs), fresh)


def load_certificate(path) -> Certificate:
    with open(path, "r", encoding="utf-8") as fh:
        return Certificate.from_payload(json.load(fh))


def save_certificate(cert: Certificate, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(cert.dumps())
