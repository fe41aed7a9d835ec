"""Verification harness: named executable cross-checks grouped into suites.

Filled in alongside the module test suites; see ``run_suite``.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class VerificationReport:
    suite: str
    seed: int
    checks: tuple
    overall: bool


SUITES = {}


def run_suite(name, seed):
    raise NotImplementedError


