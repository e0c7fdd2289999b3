"""Shared fixtures: catalog rings and lines are built once per session."""

from __future__ import annotations

import functools

import pytest

from ringline import build_line, build_recipe, builtin_catalog, run_catalog

RECIPES = {e.name: e.recipe for e in builtin_catalog() if e.recipe is not None}
RECIPES.update(
    {
        "z4": "zn:4",
        "gf2": "gf:2",
        "gf3": "gf:3",
        "gf4": "gf:4",
        "dualf2": "dual(gf:2)",
    }
)


@functools.lru_cache(maxsize=None)
def ring_of(name: str):
    return build_recipe(RECIPES[name])


@functools.lru_cache(maxsize=None)
def line_of(name: str, side: str = "left"):
    return build_line(ring_of(name), side)


@functools.lru_cache(maxsize=None)
def catalog_report():
    return run_catalog()


@pytest.fixture(scope="session")
def report():
    return catalog_report()
