"""Classification statistics of a projective ring line.

The signature collects, for one line: the point total, the Type I count,
neighbourhood cardinality, the sizes of neighbourhood intersections over
distant pairs and pairwise-distant triples, the maximum number of mutually
distant points, and a family of candidate "Jacobson point" statistics (the
literature's definition is not pinned down here, so candidates are reported
side by side and never asserted).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Mapping

from . import clique
from .core import jacobson_radical, unit_elements
from .errors import NoDistantPair, UnknownCandidate
from .line import ProjectiveLine

JACOBSON_CANDIDATES = ("A", "B", "C")


@dataclass(frozen=True)
class StatValue:
    """A per-pair/per-triple statistic with its observed spread.

    ``count`` is the number of pairs or triples examined; a count of zero
    (e.g. no pairwise-distant triple exists) reports value 0 with the
    constancy flag set. When observations vary, ``value`` is the minimum and
    ``constant`` is False; consumers should then look at ``lo``/``hi``.
    """

    value: int
    constant: bool
    lo: int
    hi: int
    count: int

    @property
    def vacuous(self) -> bool:
        return self.count == 0

    @classmethod
    def of(cls, values: list[int]) -> "StatValue":
        if not values:
            return cls(value=0, constant=True, lo=0, hi=0, count=0)
        lo, hi = min(values), max(values)
        return cls(value=lo, constant=lo == hi, lo=lo, hi=hi, count=len(values))

    def to_json_dict(self) -> dict:
        return {
            "value": self.value,
            "constant": self.constant,
            "min": self.lo,
            "max": self.hi,
            "count": self.count,
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "StatValue":
        return cls(
            value=d["value"], constant=d["constant"], lo=d["min"], hi=d["max"],
            count=d["count"],
        )


@dataclass(frozen=True)
class LineSignature:
    tot: int
    tpi: int
    one_n: StatValue
    cap2n: StatValue
    cap3n: StatValue
    md: int
    jcb: Mapping[str, int]

    def as_row(self) -> tuple[int, int, int, int, int, int]:
        """(Tot, TpI, 1N, cap2N, cap3N, MD)."""
        return (
            self.tot,
            self.tpi,
            self.one_n.value,
            self.cap2n.value,
            self.cap3n.value,
            self.md,
        )

    def to_json_dict(self) -> dict:
        return {
            "tot": self.tot,
            "tpI": self.tpi,
            "oneN": self.one_n.value,
            "cap2N": self.cap2n.value,
            "cap3N": self.cap3n.value,
            "md": self.md,
            "constancy": {
                "oneN": self.one_n.constant,
                "cap2N": self.cap2n.constant,
                "cap3N": self.cap3n.constant,
                "noTriple": self.cap3n.vacuous,
            },
            "detail": {
                "oneN": self.one_n.to_json_dict(),
                "cap2N": self.cap2n.to_json_dict(),
                "cap3N": self.cap3n.to_json_dict(),
            },
        }

    @classmethod
    def from_json_dict(cls, d: dict, jcb: Mapping[str, int]) -> "LineSignature":
        detail = d["detail"]
        return cls(
            tot=d["tot"],
            tpi=d["tpI"],
            one_n=StatValue.from_json_dict(detail["oneN"]),
            cap2n=StatValue.from_json_dict(detail["cap2N"]),
            cap3n=StatValue.from_json_dict(detail["cap3N"]),
            md=d["md"],
            jcb=dict(jcb),
        )


@dataclass(frozen=True)
class ExpectedSignature:
    """A Table-1 style row of expected values; jcb is informational only."""

    tot: int
    tpi: int
    one_n: int
    cap2n: int
    cap3n: int
    md: int
    jcb: int | None = None

    def as_row(self) -> tuple[int, int, int, int, int, int]:
        return (self.tot, self.tpi, self.one_n, self.cap2n, self.cap3n, self.md)


@dataclass(frozen=True)
class ColumnCheck:
    name: str
    observed: int
    expected: int
    passed: bool


@dataclass(frozen=True)
class SignatureComparison:
    columns: tuple[ColumnCheck, ...]
    jcb_matches: Mapping[str, bool] | None
    passed: bool

    def to_json_dict(self) -> dict:
        return {
            "perColumn": {
                c.name: {"observed": c.observed, "expected": c.expected, "pass": c.passed}
                for c in self.columns
            },
            "jcb": dict(self.jcb_matches) if self.jcb_matches is not None else None,
            "pass": self.passed,
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "SignatureComparison":
        cols = tuple(
            ColumnCheck(name=k, observed=v["observed"], expected=v["expected"],
                        passed=v["pass"])
            for k, v in d["perColumn"].items()
        )
        jcb = d.get("jcb")
        return cls(columns=cols, jcb_matches=dict(jcb) if jcb is not None else None,
                   passed=d["pass"])


def neighbour_masks(line: ProjectiveLine) -> list[int]:
    """Per point, the bitmask of its neighbours (distinct and not distant)."""
    n = len(line.points)
    full = (1 << n) - 1
    masks = []
    for i in range(n):
        distant_mask = 0
        for j in line.adjacency[i].nonzero()[0]:
            distant_mask |= 1 << int(j)
        masks.append(full & ~distant_mask & ~(1 << i))
    return masks


def neighbourhood(line: ProjectiveLine, i: int) -> frozenset[int]:
    """{ j != i : j not distant from i }."""
    n = len(line.points)
    return frozenset(
        j for j in range(n) if j != i and not line.adjacency[i, j]
    )


def _distant_pairs(line: ProjectiveLine) -> list[tuple[int, int]]:
    n = len(line.points)
    return [(i, j) for i in range(n) for j in range(i + 1, n) if line.adjacency[i, j]]


def one_neighbourhood_stat(line: ProjectiveLine) -> StatValue:
    masks = neighbour_masks(line)
    return StatValue.of([m.bit_count() for m in masks])


def pair_intersection_stat(line: ProjectiveLine) -> StatValue:
    """|N(P) ∩ N(Q)| over all unordered distant pairs."""
    pairs = _distant_pairs(line)
    if not pairs:
        raise NoDistantPair(f"line over {line.ring.name} has no distant pair")
    masks = neighbour_masks(line)
    return StatValue.of([(masks[i] & masks[j]).bit_count() for i, j in pairs])


def triple_intersection_stat(line: ProjectiveLine) -> StatValue:
    """|N(P) ∩ N(Q) ∩ N(S)| over all pairwise-distant triples.

    A line without such a triple yields the vacuous StatValue (count 0).
    """
    masks = neighbour_masks(line)
    adj = line.adjacency
    values = []
    for i, j in _distant_pairs(line):
        both = masks[i] & masks[j]
        for k in range(j + 1, len(line.points)):
            if adj[i, k] and adj[j, k]:
                values.append((both & masks[k]).bit_count())
    return StatValue.of(values)


def max_distant_set(line: ProjectiveLine) -> tuple[int, ...]:
    """An exact maximum clique of the distant graph (lexicographically least)."""
    chosen = clique.max_clique(line.adjacency)
    for a, b in combinations(chosen, 2):  # certificate
        assert line.adjacency[a, b]
    return chosen


def jacobson_stat(line: ProjectiveLine, candidate: str) -> int:
    """One of the shipped candidate statistics for the 'Jcb' column.

    A: points neighbouring every other point.
    B: |J(R)| - 1.
    C: nonzero left unit-orbits of pairs with both coordinates in J(R).
    None of these is asserted to be the literature's definition.
    """
    ring = line.ring
    if candidate == "A":
        n = len(line.points)
        masks = neighbour_masks(line)
        return sum(1 for m in masks if m.bit_count() == n - 1)
    if candidate == "B":
        return len(jacobson_radical(ring)) - 1
    if candidate == "C":
        radical = sorted(jacobson_radical(ring).members)
        mul = ring.mul
        us = unit_elements(ring)
        seen: set[tuple[int, int]] = set()
        orbit_count = 0
        for a in radical:
            for b in radical:
                if (a, b) == (0, 0) or (a, b) in seen:
                    continue
                orbit_count += 1
                seen.update((int(mul[u, a]), int(mul[u, b])) for u in us)
        return orbit_count
    raise UnknownCandidate(f"unknown Jacobson candidate {candidate!r}")


def signature(line: ProjectiveLine) -> LineSignature:
    """Aggregate all Table-1 statistics of the line."""
    tpi = sum(
        1
        for p in line.points
        if line.ring.is_unit(p.rep[0]) or line.ring.is_unit(p.rep[1])
    )
    return LineSignature(
        tot=len(line.points),
        tpi=tpi,
        one_n=one_neighbourhood_stat(line),
        cap2n=pair_intersection_stat(line),
        cap3n=triple_intersection_stat(line),
        md=len(max_distant_set(line)),
        jcb={c: jacobson_stat(line, c) for c in JACOBSON_CANDIDATES},
    )


def compare_signature(
    sig: LineSignature, expected: ExpectedSignature
) -> SignatureComparison:
    """Per-column PASS/FAIL; the three neighbourhood columns also require the
    constancy flag. Jcb is informational and never affects the verdict."""
    checks = [
        ColumnCheck("tot", sig.tot, expected.tot, sig.tot == expected.tot),
        ColumnCheck("tpI", sig.tpi, expected.tpi, sig.tpi == expected.tpi),
        ColumnCheck(
            "oneN",
            sig.one_n.value,
            expected.one_n,
            sig.one_n.value == expected.one_n and sig.one_n.constant,
        ),
        ColumnCheck(
            "cap2N",
            sig.cap2n.value,
            expected.cap2n,
            sig.cap2n.value == expected.cap2n and sig.cap2n.constant,
        ),
        ColumnCheck(
            "cap3N",
            sig.cap3n.value,
            expected.cap3n,
            sig.cap3n.value == expected.cap3n and sig.cap3n.constant,
        ),
        ColumnCheck("md", sig.md, expected.md, sig.md == expected.md),
    ]
    jcb_matches = (
        {c: sig.jcb[c] == expected.jcb for c in sig.jcb}
        if expected.jcb is not None
        else None
    )
    return SignatureComparison(
        columns=tuple(checks),
        jcb_matches=jcb_matches,
        passed=all(c.passed for c in checks),
    )
