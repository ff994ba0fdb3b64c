"""Farey labels and the Vieta exchange trees for both Markov-type equations.

Numbers in either solution tree are indexed by reduced rationals p/q in
(0, 1]; descending the Stern-Brocot tree and jumping between triple solutions
are the same walk seen through two lenses.  The boundary labels 0/1 and 1/0
both carry the value 1.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import gcd

ORDINARY = "ordinary"
GENERALIZED = "generalized"

DEFAULT_DEPTH_CAP = 30


@dataclass(frozen=True)
class ReducedFraction:
    """Reduced nonnegative rational; (1, 0) is the infinity label."""

    p: int
    q: int

    def __post_init__(self) -> None:
        if self.p < 0:
            raise ValueError("numerator must be nonnegative")
        if self.q < 0:
            raise ValueError("denominator must be nonnegative")
        if self.q == 0 and self.p != 1:
            raise ValueError("the only zero-denominator label is 1/0")
        if gcd(self.p, self.q) != 1:
            raise ValueError(f"{self.p}/{self.q} is not reduced")

    def __str__(self) -> str:
        return f"{self.p}/{self.q}"

    def __lt__(self, other: "ReducedFraction") -> bool:
        return self.p * other.q < other.p * self.q

    def __le__(self, other: "ReducedFraction") -> bool:
        return self.p * other.q <= other.p * self.q

    def __gt__(self, other: "ReducedFraction") -> bool:
        return other < self

    def __ge__(self, other: "ReducedFraction") -> bool:
        return other <= self

    @classmethod
    def parse(cls, text: str) -> "ReducedFraction":
        num, _, den = text.partition("/")
        return reduce_fraction(int(num), int(den) if den else 1)


INFINITY_LABEL = ReducedFraction(1, 0)
ZERO_LABEL = ReducedFraction(0, 1)
ONE_LABEL = ReducedFraction(1, 1)


def reduce_fraction(p: int, q: int) -> ReducedFraction:
    """Reduce p/q by the gcd.  q = 0 is rejected here; use INFINITY_LABEL."""
    if q <= 0:
        raise ValueError("denominator must be positive")
    if p < 0:
        raise ValueError("numerator must be nonnegative")
    g = gcd(p, q)
    return ReducedFraction(p // g, q // g)


def are_neighbors(a: ReducedFraction, b: ReducedFraction) -> bool:
    return abs(a.p * b.q - b.p * a.q) == 1


def mediant(a: ReducedFraction, b: ReducedFraction) -> ReducedFraction:
    """Farey sum (p_a + p_b)/(q_a + q_b) of two Farey neighbors."""
    if not are_neighbors(a, b):
        raise ValueError(f"{a} and {b} are not Farey neighbors")
    return ReducedFraction(a.p + b.p, a.q + b.q)


def farey_parents(f: ReducedFraction) -> tuple[ReducedFraction, ReducedFraction]:
    """The unique neighbor pair (l, r), l < f < r, with mediant(l, r) = f.

    1/1 is the tree root; its parents are the boundary labels (0/1, 1/0).
    """
    if f.q == 0 or f.p == 0 or f > ONE_LABEL:
        raise ValueError(f"label {f} outside (0, 1]")
    if f == ONE_LABEL:
        return (ZERO_LABEL, INFINITY_LABEL)
    if f.p == 1:
        return (ZERO_LABEL, ReducedFraction(1, f.q - 1))
    c = pow(f.q, -1, f.p)
    d = (f.q * c - 1) // f.p
    right = ReducedFraction(c, d)
    left = ReducedFraction(f.p - c, f.q - d)
    return (left, right)


@dataclass(frozen=True)
class FareyTriple:
    """Labels of one triangulation: two neighbors and their mediant."""

    left: ReducedFraction
    right: ReducedFraction
    mid: ReducedFraction

    def __post_init__(self) -> None:
        if mediant(self.left, self.right) != self.mid:
            raise ValueError("mid is not the mediant of left and right")

    def as_strings(self) -> list[str]:
        return [str(self.left), str(self.right), str(self.mid)]


@dataclass(frozen=True)
class MarkovTriple:
    """Solution triple of the ordinary or generalized equation.

    Entries are kept in slot order so that the Vieta exchange is an involution
    position by position; use sorted_entries() for display.
    """

    a: int
    b: int
    c: int
    kind: str = GENERALIZED

    def __post_init__(self) -> None:
        if self.kind not in (ORDINARY, GENERALIZED):
            raise ValueError(f"unknown equation kind {self.kind!r}")
        if min(self.a, self.b, self.c) <= 0:
            raise ValueError("triple entries must be positive")

    @property
    def entries(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def sorted_entries(self) -> tuple[int, int, int]:
        x, y, z = sorted(self.entries)
        return (x, y, z)

    def satisfies_equation(self) -> bool:
        a, b, c = self.entries
        if self.kind == ORDINARY:
            return a * a + b * b + c * c == 3 * a * b * c
        return a * a + b * b + c * c + a * b + a * c + b * c == 6 * a * b * c


def vieta_step(triple: MarkovTriple, position: int) -> MarkovTriple:
    """Replace one entry by the conjugate root of its defining quadratic.

    position is 1-based.  For a valid triple the division is exact; an inexact
    division therefore signals an invalid input triple.
    """
    if position not in (1, 2, 3):
        raise ValueError("position must be 1, 2 or 3")
    entries = list(triple.entries)
    old = entries[position - 1]
    x, y = [entries[i] for i in range(3) if i != position - 1]
    if triple.kind == ORDINARY:
        num = x * x + y * y
    else:
        num = x * x + x * y + y * y
    if num % old != 0:
        raise ValueError(f"{triple.entries} does not satisfy the {triple.kind} equation")
    entries[position - 1] = num // old
    return MarkovTriple(entries[0], entries[1], entries[2], triple.kind)


@dataclass(frozen=True)
class TreeNode:
    farey: FareyTriple
    triple: MarkovTriple
    depth: int


def _root_value(kind: str) -> int:
    return 3 if kind == GENERALIZED else 2


def _vieta_value(kind: str, x: int, y: int, out: int) -> int:
    num = x * x + y * y + (x * y if kind == GENERALIZED else 0)
    if num % out != 0:
        raise ValueError("inexact exchange: inputs do not solve the equation")
    return num // out


def generate_tree(kind: str, depth: int, depth_cap: int = DEFAULT_DEPTH_CAP) -> list[TreeNode]:
    """Breadth-first exchange tree down to the given depth (inclusive).

    Depth 0 is the first flip away from the all-ones solution: Farey triple
    (0/1, 1/0, 1/1) paired with (1, 1, 3) or (1, 1, 2).  Each node has two
    children, obtained by flipping its second-newest and oldest label in that
    order, except that flips producing a label > 1 are mirrored out of the
    tree; this reproduces the conventional top-to-bottom layout.
    """
    if kind not in (ORDINARY, GENERALIZED):
        raise ValueError(f"unknown equation kind {kind!r}")
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    if depth > depth_cap:
        raise ValueError(f"depth {depth} exceeds cap {depth_cap}")

    # Node state: (kept label, previous mid, mid) with matching values.
    root_state = (ZERO_LABEL, INFINITY_LABEL, ONE_LABEL, 1, 1, _root_value(kind))
    level = [root_state]
    out: list[TreeNode] = []
    for d in range(depth + 1):
        next_level = []
        for kept, prev, mid, v_kept, v_prev, v_mid in level:
            lo, hi = (kept, prev) if kept < prev else (prev, kept)
            farey = FareyTriple(lo, hi, mid)
            tup = tuple(sorted((v_kept, v_prev, v_mid)))
            out.append(TreeNode(farey, MarkovTriple(*tup, kind=kind), d))
            if d == depth:
                continue
            for flip_prev in (True, False):
                if flip_prev:
                    keep_lab, keep_val = kept, v_kept
                    out_val = v_prev
                else:
                    keep_lab, keep_val = prev, v_prev
                    out_val = v_kept
                new_lab = ReducedFraction(keep_lab.p + mid.p, keep_lab.q + mid.q)
                if new_lab.q == 0 or new_lab > ONE_LABEL:
                    continue  # mirror image of the kept subtree
                new_val = _vieta_value(kind, keep_val, v_mid, out_val)
                next_level.append((keep_lab, mid, new_lab, keep_val, v_mid, new_val))
        level = next_level
    return out


def tree_value_at(nodes: list[TreeNode]) -> dict[ReducedFraction, int]:
    """Map each mid label to the value created there (max of its triple)."""
    values: dict[ReducedFraction, int] = {}
    for node in nodes:
        values[node.farey.mid] = node.triple.sorted_entries()[2]
    return values


def tree_to_jsonl(nodes: list[TreeNode]) -> str:
    lines = []
    for node in nodes:
        payload = {
            "farey": node.farey.as_strings(),
            "triple": [str(v) for v in node.triple.sorted_entries()],
            "depth": node.depth,
        }
        lines.append(json.dumps(payload, separators=(",", ":")))
    return "\n".join(lines) + "\n"


def duplicate_max_scan(kind: str, depth: int = 12) -> dict[int, int]:
    """Desk-scale uniqueness scan: maxima that appear at more than one node.

    Returns {value: occurrence count}; empty means no duplicate maxima were
    seen down to the given depth.  No claim is attached beyond the scan.
    """
    seen: dict[int, int] = {}
    for node in generate_tree(kind, depth):
        m = node.triple.sorted_entries()[2]
        seen[m] = seen.get(m, 0) + 1
    return {value: count for value, count in seen.items() if count > 1}
