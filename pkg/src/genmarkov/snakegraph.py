"""Snake graphs, band graphs and exact perfect-matching counts.

A snake graph is a chain of unit-square tiles, each glued to the next either
to the right or upward; the glue word is the whole isomorphism type.  The
derived sign word (south edge of the first tile is '-', signs alternate tile
by tile, and a gluing keeps or flips the running sign according to its
direction) run-length-encodes to a continued fraction, and the number of
perfect matchings of the graph equals that fraction's numerator.  This module
never uses that identity internally: matchings are counted by a frontier
dynamic program over the explicit tile chain, and small graphs can be
enumerated outright, so the two routes stay independent cross-checks.

Band graphs identify one end edge of the chain with the other under the
constraint that exactly one of the two glued edges lies in the minimal
matching; their "good matchings" are counted both by backtracking and by the
end-entry correction formulas.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .contfrac import Entries, canonicalize, continuant, runs_to_signs, signs_to_runs

RIGHT = "right"
UP = "up"

MINUS = "-"
PLUS = "+"

DOMINANT = "dominant"
NONDOMINANT = "nondominant"

DEFAULT_ENUMERATION_CAP = 24

Vertex = tuple[int, int]
Edge = tuple[Vertex, Vertex]  # endpoints sorted lexicographically
Matching = frozenset


def _edge(a: Vertex, b: Vertex) -> Edge:
    return (a, b) if a <= b else (b, a)


class SnakeGraph:
    """Immutable tile chain; construct via from_cf() or from a glue word."""

    def __init__(self, glue: Sequence[str], first_sign: str = MINUS):
        glue = tuple(glue)
        if any(g not in (RIGHT, UP) for g in glue):
            raise ValueError("glue directions must be 'right' or 'up'")
        if first_sign not in (MINUS, PLUS):
            raise ValueError("first sign must be '+' or '-'")
        self.glue = glue
        self.first_sign = first_sign
        positions = [(0, 0)]
        for g in glue:
            x, y = positions[-1]
            positions.append((x + 1, y) if g == RIGHT else (x, y + 1))
        self.positions: tuple[Vertex, ...] = tuple(positions)
        self._edge_tiles: dict[Edge, list[int]] = {}
        for t, (x, y) in enumerate(positions):
            for e in self._tile_sides(x, y):
                self._edge_tiles.setdefault(e, []).append(t)

    @staticmethod
    def _tile_sides(x: int, y: int) -> tuple[Edge, Edge, Edge, Edge]:
        sw, se, nw, ne = (x, y), (x + 1, y), (x, y + 1), (x + 1, y + 1)
        return (_edge(sw, se), _edge(sw, nw), _edge(nw, ne), _edge(se, ne))

    @classmethod
    def from_cf(cls, entries: Sequence[int], first_sign: str = MINUS) -> "SnakeGraph":
        """Build the tile chain whose sign word has the given run lengths.

        The chain has sum(entries) - 1 tiles; an empty or single-cell word has
        no tiles and is rejected.
        """
        entries = tuple(entries)
        if not entries:
            raise ValueError("empty continued fraction")
        if any(a <= 0 for a in entries):
            raise ValueError("entries must be positive")
        if sum(entries) < 2:
            raise ValueError("a snake graph needs at least one tile")
        signs = runs_to_signs(entries, first_sign)
        d = len(signs) - 1
        glue = []
        for j in range(d - 1):
            tile_sign = signs[0] if j % 2 == 0 else _flip(signs[0])
            glue.append(RIGHT if signs[j + 1] == tile_sign else UP)
        return cls(glue, first_sign)

    @property
    def num_tiles(self) -> int:
        return len(self.positions)

    def tile_side(self, tile: int, which: str) -> Edge:
        x, y = self.positions[tile]
        south, west, north, east = self._tile_sides(x, y)
        return {"S": south, "W": west, "N": north, "E": east}[which]

    def sign_word(self) -> str:
        """Derived sign word, length num_tiles + 1 (last sign repeats)."""
        d = self.num_tiles
        signs = [self.first_sign]
        for j, g in enumerate(self.glue):
            tile_sign = self.first_sign if j % 2 == 0 else _flip(self.first_sign)
            signs.append(tile_sign if g == RIGHT else _flip(tile_sign))
        signs.append(signs[-1])
        assert len(signs) == d + 1
        return "".join(signs)

    def cf_entries(self) -> Entries:
        return signs_to_runs(self.sign_word())

    def edges(self) -> list[Edge]:
        return sorted(self._edge_tiles)

    def vertices(self) -> list[Vertex]:
        verts = set()
        for a, b in self._edge_tiles:
            verts.add(a)
            verts.add(b)
        return sorted(verts)

    def boundary_edges(self) -> list[Edge]:
        return sorted(e for e, tiles in self._edge_tiles.items() if len(tiles) == 1)

    def is_boundary(self, e: Edge) -> bool:
        return len(self._edge_tiles.get(e, ())) == 1

    def to_json_dict(self) -> dict:
        return {
            "tiles": [list(pos) for pos in self.positions],
            "glue_dirs": list(self.glue),
            "sign_sequence": self.sign_word(),
        }


def _flip(sign: str) -> str:
    return PLUS if sign == MINUS else MINUS


def count_matchings(g: SnakeGraph) -> int:
    """Perfect-matching count by a frontier DP along the tile chain.

    The frontier is the pair of vertices shared with the next tile.  Each new
    tile introduces three sides (its entry side is already present); of the
    five vertex-disjoint subsets of those sides, the ones covering every
    vertex that leaves the frontier survive.  Exact, linear in tiles.
    """
    d = g.num_tiles
    if d == 1:
        return 2
    # Initial tile: choose among the 7 partial matchings of a 4-cycle.
    subsets = [(), ("S",), ("W",), ("N",), ("E",), ("S", "N"), ("W", "E")]
    covers = {"S": ("sw", "se"), "W": ("sw", "nw"), "N": ("nw", "ne"), "E": ("se", "ne")}
    states: dict[tuple[int, int], int] = {}
    first_glue = g.glue[0]
    for sub in subsets:
        cov = {v: 0 for v in ("sw", "se", "nw", "ne")}
        for side in sub:
            for v in covers[side]:
                cov[v] = 1
        if first_glue == RIGHT:
            finalized, frontier = ("sw", "nw"), ("se", "ne")
        else:
            finalized, frontier = ("sw", "se"), ("nw", "ne")
        if not all(cov[v] for v in finalized):
            continue
        key = (cov[frontier[0]], cov[frontier[1]])
        states[key] = states.get(key, 0) + 1

    # Valid side subsets for a non-initial tile: edges a=E1-O1, b=O1-O2, c=E2-O2.
    choices = ((0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 0, 1))
    total = 0
    for i in range(1, d):
        entry_dir = g.glue[i - 1]
        exit_dir = g.glue[i] if i < d - 1 else None
        new_states: dict[tuple[int, int], int] = {}
        for (c1, c2), n in states.items():
            for a, b, c_ in choices:
                if (a and c1) or (c_ and c2):
                    continue
                cov_e1 = c1 | a
                cov_o1 = a | b
                cov_e2 = c2 | c_
                cov_o2 = b | c_
                if exit_dir is None:
                    if cov_e1 and cov_o1 and cov_e2 and cov_o2:
                        total += n
                elif exit_dir == entry_dir:
                    if cov_e1 and cov_e2:
                        key = (cov_o1, cov_o2)
                        new_states[key] = new_states.get(key, 0) + n
                else:
                    if cov_e1 and cov_o1:
                        key = (cov_e2, cov_o2)
                        new_states[key] = new_states.get(key, 0) + n
        states = new_states
    return total


def _adjacency(g: SnakeGraph) -> tuple[list[Vertex], dict[Vertex, list[Edge]]]:
    verts = g.vertices()
    adj: dict[Vertex, list[Edge]] = {v: [] for v in verts}
    for e in g.edges():
        adj[e[0]].append(e)
        adj[e[1]].append(e)
    return verts, adj


def _backtrack(
    g: SnakeGraph,
    collect: list | None,
    marked: tuple[Edge, ...] = (),
) -> tuple[int, int]:
    """Exhaustive matching enumeration by always covering the least vertex.

    Returns (total count, count of matchings containing any marked edge).
    When collect is a list, every matching is appended as a frozenset.
    """
    verts, adj = _adjacency(g)
    index = {v: i for i, v in enumerate(verts)}
    marked_set = set(marked)
    n = len(verts)
    covered = [False] * n
    chosen: list[Edge] = []
    counts = [0, 0]

    def rec(lo: int, marked_hits: int) -> None:
        while lo < n and covered[lo]:
            lo += 1
        if lo == n:
            counts[0] += 1
            if marked_hits:
                counts[1] += 1
            if collect is not None:
                collect.append(frozenset(chosen))
            return
        v = verts[lo]
        covered[lo] = True
        for e in adj[v]:
            other = e[1] if e[0] == v else e[0]
            oi = index[other]
            if covered[oi]:
                continue
            covered[oi] = True
            chosen.append(e)
            rec(lo + 1, marked_hits + (1 if e in marked_set else 0))
            chosen.pop()
            covered[oi] = False
        covered[lo] = False

    rec(0, 0)
    return counts[0], counts[1]


def enumerate_matchings(g: SnakeGraph, cap: int = DEFAULT_ENUMERATION_CAP) -> list[Matching]:
    """All perfect matchings, canonically sorted; refuses graphs over the cap."""
    if g.num_tiles > cap:
        raise ValueError(
            f"graph has {g.num_tiles} tiles, over the enumeration cap of {cap}"
        )
    found: list[Matching] = []
    _backtrack(g, found)
    return sorted(found, key=lambda m: sorted(m))


def brute_count_matchings(g: SnakeGraph, cap: int = DEFAULT_ENUMERATION_CAP) -> int:
    """Backtracking count (visits every matching, stores none)."""
    if g.num_tiles > cap:
        raise ValueError(
            f"graph has {g.num_tiles} tiles, over the enumeration cap of {cap}"
        )
    total, _ = _backtrack(g, None)
    return total


def extremal_matchings(g: SnakeGraph) -> tuple[Matching, Matching]:
    """The two boundary-only matchings; the minimal one contains S(G_1).

    The boundary edges of a snake graph form a single cycle through every
    vertex, so its perfect matchings are the cycle's two alternating classes.
    """
    boundary = g.boundary_edges()
    adj: dict[Vertex, list[Edge]] = {}
    for e in boundary:
        adj.setdefault(e[0], []).append(e)
        adj.setdefault(e[1], []).append(e)
    for v, es in adj.items():
        if len(es) != 2:
            raise AssertionError(f"boundary is not a cycle at {v}")
    start_edge = g.tile_side(0, "S")
    cycle = [start_edge]
    cur_edge = start_edge
    cur = start_edge[1]  # walk away from start_edge[0]
    while cur != start_edge[0]:
        nxt = next(e for e in adj[cur] if e != cur_edge)
        cycle.append(nxt)
        cur = nxt[1] if nxt[0] == cur else nxt[0]
        cur_edge = nxt
    if len(cycle) != len(boundary) or len(cycle) % 2 != 0:
        raise AssertionError("boundary walk did not close into one even cycle")
    minimal = frozenset(cycle[0::2])
    maximal = frozenset(cycle[1::2])
    return minimal, maximal


@dataclass(frozen=True)
class DominantEdges:
    first: Edge
    last: Edge
    degenerate: bool = False  # single tile: every side qualifies

    def as_pair(self) -> tuple[Edge, Edge]:
        return (self.first, self.last)


def dominant_edges(g: SnakeGraph) -> DominantEdges:
    """End edges whose two vertices belong to no other tile.

    For a single tile this is degenerate (all four sides qualify); the south
    and north edges are reported then.
    """
    if g.num_tiles == 1:
        return DominantEdges(g.tile_side(0, "S"), g.tile_side(0, "N"), degenerate=True)
    first = g.tile_side(0, "W") if g.glue[0] == RIGHT else g.tile_side(0, "S")
    last_tile = g.num_tiles - 1
    last = g.tile_side(last_tile, "E") if g.glue[-1] == RIGHT else g.tile_side(last_tile, "N")
    return DominantEdges(first, last)


def dominant_parity_holds(g: SnakeGraph) -> bool:
    """Parity law: with n = number of runs of the sign word, the minimal
    matching uses both or neither dominant edge when n is even, and minimal
    and maximal each use exactly one when n is odd."""
    n = len(g.cf_entries())
    dom = dominant_edges(g)
    if dom.degenerate:
        return True
    minimal, maximal = extremal_matchings(g)
    min_uses = sum(1 for e in dom.as_pair() if e in minimal)
    max_uses = sum(1 for e in dom.as_pair() if e in maximal)
    if n % 2 == 0:
        return {min_uses, max_uses} == {0, 2}
    return min_uses == 1 and max_uses == 1


@dataclass(frozen=True)
class BandGraph:
    """Snake graph with one end edge identified with the other."""

    base: SnakeGraph
    e: Edge
    e_prime: Edge
    glue: str  # dominant | nondominant (with respect to the first tile)


def band_from_edges(g: SnakeGraph, e: Edge, e_prime: Edge) -> BandGraph:
    first_pair = (g.tile_side(0, "S"), g.tile_side(0, "W"))
    last_tile = g.num_tiles - 1
    last_pair = (g.tile_side(last_tile, "N"), g.tile_side(last_tile, "E"))
    if e not in first_pair:
        raise ValueError("e must be the south or west edge of the first tile")
    if e_prime not in last_pair:
        raise ValueError("e' must be the north or east edge of the last tile")
    minimal, _ = extremal_matchings(g)
    if (e in minimal) == (e_prime in minimal):
        status = "both lie in" if e in minimal else "neither lies in"
        raise ValueError(f"inadmissible gluing: {status} the minimal matching")
    dom = dominant_edges(g)
    if dom.degenerate:
        glue = DOMINANT if e == g.tile_side(0, "S") else NONDOMINANT
    else:
        glue = DOMINANT if e == dom.first else NONDOMINANT
    return BandGraph(g, e, e_prime, glue)


def build_band(g: SnakeGraph, glue: str) -> BandGraph:
    """Band graph gluing the first tile's dominant or nondominant edge.

    The matching end edge e' is forced by admissibility.  On a single tile the
    dominant/nondominant distinction is degenerate; the south edge stands in
    for "dominant" and the west edge for "nondominant".
    """
    if glue not in (DOMINANT, NONDOMINANT):
        raise ValueError(f"unknown gluing {glue!r}")
    dom = dominant_edges(g)
    if dom.degenerate:
        e = g.tile_side(0, "S") if glue == DOMINANT else g.tile_side(0, "W")
    else:
        nondom_first = (
            g.tile_side(0, "S") if dom.first == g.tile_side(0, "W") else g.tile_side(0, "W")
        )
        e = dom.first if glue == DOMINANT else nondom_first
    minimal, _ = extremal_matchings(g)
    last_tile = g.num_tiles - 1
    candidates = [g.tile_side(last_tile, "N"), g.tile_side(last_tile, "E")]
    admissible = [ep for ep in candidates if (e in minimal) != (ep in minimal)]
    if len(admissible) != 1:
        raise AssertionError("expected exactly one admissible partner edge")
    return BandGraph(g, e, admissible[0], glue)


def count_good_formula(entries: Sequence[int], glue: str) -> int:
    """Good-matching count from the end-entry correction formulas.

    Requires a word with first and last entries > 1.  n even:
      dominant:     K(all) - K(drop first, last decremented)
      nondominant:  K(all) - K(first decremented, drop last)
    n odd:
      dominant:     K(all) - K(both ends dropped)
      nondominant:  K(all) - K(both ends decremented)
    n = 1: dominant count is a1, nondominant count is 2.
    """
    entries = tuple(entries)
    if glue not in (DOMINANT, NONDOMINANT):
        raise ValueError(f"unknown gluing {glue!r}")
    if not entries:
        raise ValueError("empty continued fraction")
    n = len(entries)
    if n == 1:
        if entries[0] < 2:
            raise ValueError("single entry must be > 1")
        return entries[0] if glue == DOMINANT else 2
    if entries[0] <= 1 or entries[-1] <= 1:
        raise ValueError("boundary entries must be > 1 for the band formulas")
    whole = continuant(entries)
    if n % 2 == 0:
        if glue == DOMINANT:
            reduced = entries[1:-1] + (entries[-1] - 1,)
        else:
            reduced = (entries[0] - 1,) + entries[1:-1]
    else:
        if glue == DOMINANT:
            reduced = entries[1:-1]
        else:
            reduced = (entries[0] - 1,) + entries[1:-1] + (entries[-1] - 1,)
    if reduced and 0 in reduced:
        reduced = canonicalize(reduced, preserve="value")
    return whole - continuant(reduced)


def count_good_bruteforce(band: BandGraph, cap: int = DEFAULT_ENUMERATION_CAP) -> int:
    """Matchings of the base graph using e or e' (one containing both counts once)."""
    g = band.base
    if g.num_tiles > cap:
        raise ValueError(
            f"graph has {g.num_tiles} tiles, over the enumeration cap of {cap}"
        )
    _, good = _backtrack(g, None, marked=(band.e, band.e_prime))
    return good


def render_ascii(g: SnakeGraph) -> str:
    """Tiles as unit boxes on a character grid."""
    xs = [x for x, _ in g.positions]
    ys = [y for _, y in g.positions]
    width = (max(xs) + 1) * 4 + 1
    height = (max(ys) + 1) * 2 + 1
    grid = [[" "] * width for _ in range(height)]
    for x, y in g.positions:
        col, row = 4 * x, 2 * (max(ys) - y)  # flip so larger y prints higher
        for dc in range(5):
            grid[row][col + dc] = "-" if dc % 4 else "+"
            grid[row + 2][col + dc] = "-" if dc % 4 else "+"
        grid[row + 1][col] = "|"
        grid[row + 1][col + 4] = "|"
    return "\n".join("".join(r).rstrip() for r in grid)
