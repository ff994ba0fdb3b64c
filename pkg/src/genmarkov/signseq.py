"""Sign sequences of straight arcs crossing the integer lattice.

The lattice consists of all unit segments of the lines y = j, x = i and
y = -x + i through integer points.  For coprime (p, q) the open segment from
(0, 0) to (q, p) crosses 2(p+q) - 3 of these unit segments, alternating
diagonal / non-diagonal, and every consecutive pair of crossed segments shares
one lattice endpoint.  The sign sequence records, entry by entry, whether

  * odd positions:  each crossing point is nearer the crossed segment's
    endpoint on the right (-) or on the left (+) of the directed arc, and
  * even positions: each shared endpoint lies right (-) or left (+),

padded by one conventional sign at each end.  Exactly one crossing -- the
central one -- bisects its segment; its sign is a free choice that never
affects the numerator of the run-length continued fraction.

All classifications are exact integer sign tests (no floating point): a point
(x, y) is right of the arc iff q*y - p*x < 0, and nearness comparisons reduce
to doubling a remainder.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .contfrac import Entries, canonicalize, signs_to_runs

MINUS = "-"
PLUS = "+"

MIDPOINT_PLUS = "plus"
MIDPOINT_MINUS = "minus"
MIDPOINT_AUTO = "auto"

LEFT = "left"
RIGHT = "right"

HORIZONTAL = "horizontal"
VERTICAL = "vertical"
DIAGONAL = "diagonal"


class ClosedFormError(ValueError):
    """An index the closed-form case analysis leaves ambiguous or unset."""


def _validate_pq(p: int, q: int) -> None:
    from math import gcd

    if p < 1 or q < 1:
        raise ValueError("p and q must be positive")
    if gcd(p, q) != 1:
        raise ValueError(f"gcd({p},{q}) != 1; use the deformed-arc variants")


def _events(p: int, q: int) -> list[tuple[str, tuple[tuple[int, int], tuple[int, int]], str | None, tuple[int, int]]]:
    """Ordered crossings as (kind, segment endpoints, sign or None for the tie, t).

    t = (num, den) is the arc parameter of the crossing, used only for
    ordering and for the exact crossing point.
    """
    events = []
    s = p + q
    for i in range(1, q):  # vertical segments x = i
        r = (i * p) % q
        fl = (i * p) // q
        # bottom endpoint (i, fl) is right of the arc, top is left
        if 2 * r < q:
            sign = MINUS
        elif 2 * r > q:
            sign = PLUS
        else:
            sign = None
        events.append((VERTICAL, ((i, fl), (i, fl + 1)), sign, (i, q)))
    for j in range(1, p):  # horizontal segments y = j
        r = (j * q) % p
        fl = (j * q) // p
        # left endpoint (fl, j) is left of the arc, right endpoint is right
        if 2 * r > p:
            sign = MINUS
        elif 2 * r < p:
            sign = PLUS
        else:
            sign = None
        events.append((HORIZONTAL, ((fl, j), (fl + 1, j)), sign, (j, p)))
    for i in range(1, s):  # diagonal segments on y = -x + i
        r = (q * i) % s
        fl = (q * i) // s
        # endpoint (fl+1, i-fl-1) is right of the arc, (fl, i-fl) is left
        if 2 * r > s:
            sign = MINUS
        elif 2 * r < s:
            sign = PLUS
        else:
            sign = None
        events.append((DIAGONAL, ((fl, i - fl), (fl + 1, i - fl - 1)), sign, (i, s)))
    events.sort(key=lambda ev: Fraction(ev[3][0], ev[3][1]))
    return events


@dataclass(frozen=True)
class Crossing:
    kind: str
    endpoints: tuple[tuple[int, int], tuple[int, int]]
    point: tuple[Fraction, Fraction]
    side: str  # side of the nearer endpoint: "right", "left" or "tie"


@dataclass(frozen=True)
class CrossingProfile:
    p: int
    q: int
    crossings: tuple[Crossing, ...]
    shared: tuple[tuple[tuple[int, int], str], ...]  # (lattice point, side)

    @property
    def tie_index(self) -> int:
        for i, c in enumerate(self.crossings):
            if c.side == "tie":
                return i
        raise AssertionError("profile has no tie crossing")

    def to_json_dict(self) -> dict:
        return {
            "p": self.p,
            "q": self.q,
            "crossings": [
                {
                    "kind": c.kind,
                    "endpoints": [list(pt) for pt in c.endpoints],
                    "point": [f"{v.numerator}/{v.denominator}" for v in c.point],
                    "side": c.side,
                }
                for c in self.crossings
            ],
            "shared": [{"point": list(pt), "side": side} for pt, side in self.shared],
        }


def crossing_profile(p: int, q: int) -> CrossingProfile:
    """All lattice crossings of the arc (0,0) -> (q,p), in arc order."""
    _validate_pq(p, q)
    events = _events(p, q)
    crossings = []
    for kind, endpoints, sign, (tn, td) in events:
        x = Fraction(tn * q, td)
        y = Fraction(tn * p, td)
        side = "tie" if sign is None else (RIGHT if sign == MINUS else LEFT)
        crossings.append(Crossing(kind, endpoints, (x, y), side))
    shared = []
    for prev, cur in zip(events, events[1:]):
        common = set(prev[1]) & set(cur[1])
        if len(common) != 1:
            raise AssertionError("consecutive crossings must share one endpoint")
        (x0, y0) = common.pop()
        cross = q * y0 - p * x0
        if cross == 0:
            raise AssertionError("shared endpoint on the arc despite gcd 1")
        shared.append(((x0, y0), RIGHT if cross < 0 else LEFT))
    ties = [c for c in crossings if c.side == "tie"]
    if len(ties) != 1:
        raise AssertionError(f"expected exactly one tie crossing, found {len(ties)}")
    return CrossingProfile(p, q, tuple(crossings), tuple(shared))


@dataclass(frozen=True)
class SignSequence:
    """Sign word f_0 ... f_{2c} of an arc with c crossings."""

    signs: str
    midpoint_index: int | None = None

    def __post_init__(self) -> None:
        if any(ch not in (MINUS, PLUS) for ch in self.signs):
            raise ValueError("signs must be over '+'/'-'")

    def __len__(self) -> int:
        return len(self.signs)

    @property
    def crossing_count(self) -> int:
        return (len(self.signs) - 1) // 2

    def runs(self) -> Entries:
        return signs_to_runs(self.signs)

    def first_sign(self) -> str:
        return self.signs[0]


def sign_sequence(p: int, q: int, midpoint: str = MIDPOINT_AUTO) -> SignSequence:
    """Assemble the sign word of the arc (0,0) -> (q,p).

    For p <= q the boundary conventions are f_0 = '-' and f_{2c} = '+';
    they flip for p > q.  The central crossing gets the requested sign,
    where "auto" means the opposite of its immediate predecessor (this is
    the representation the reference tables print).
    """
    _validate_pq(p, q)
    if midpoint not in (MIDPOINT_PLUS, MIDPOINT_MINUS, MIDPOINT_AUTO):
        raise ValueError(f"unknown midpoint policy {midpoint!r}")
    events = _events(p, q)
    c = len(events)
    assert c == 2 * (p + q) - 3
    signs: list[str | None] = [None] * (2 * c + 1)
    signs[0] = MINUS if p <= q else PLUS
    signs[2 * c] = PLUS if p <= q else MINUS
    tie_at = None
    for idx, (kind, endpoints, sign, _t) in enumerate(events, start=1):
        if sign is None:
            tie_at = 2 * idx - 1
        else:
            signs[2 * idx - 1] = sign
    for idx, (prev, cur) in enumerate(zip(events, events[1:]), start=1):
        common = set(prev[1]) & set(cur[1])
        (x0, y0) = common.pop()
        signs[2 * idx] = MINUS if q * y0 - p * x0 < 0 else PLUS
    if tie_at is None:
        raise AssertionError("no tie crossing found")
    if tie_at != c:
        raise AssertionError("tie crossing is not central")
    if midpoint == MIDPOINT_PLUS:
        signs[tie_at] = PLUS
    elif midpoint == MIDPOINT_MINUS:
        signs[tie_at] = MINUS
    else:
        prev_sign = signs[tie_at - 1]
        signs[tie_at] = PLUS if prev_sign == MINUS else MINUS
    if any(s is None for s in signs):
        raise AssertionError("incomplete sign assembly")
    return SignSequence("".join(signs), midpoint_index=tie_at)  # type: ignore[arg-type]


def sign_sequence_closed_form(p: int, q: int, midpoint: str = MIDPOINT_AUTO) -> SignSequence:
    """Evaluate the explicit index formulas for the sign word (p < q only).

    This is the cross-check route for :func:`sign_sequence`.  The windows
    around horizontal crossings are anchored at vtilde_j = floor(qj/p) + j,
    extended to the boundary anchors vtilde_0 = 0 and vtilde_p = p + q - 1
    (their outward halves are exactly the boundary sign conventions).  Any
    even index left unset or set twice inconsistently raises ClosedFormError
    rather than guessing; the central tie is resolved by the midpoint policy.
    """
    _validate_pq(p, q)
    if p >= q:
        raise ValueError("closed form requires p < q")
    c = 2 * (p + q) - 3
    vt = [0] + [(q * j) // p + j for j in range(1, p)] + [p + q - 1]

    even: list[str | None] = [None] * (c + 1)

    def set_even(i: int, sign: str) -> None:
        if i < 0 or i > c:
            return
        if even[i] is not None and even[i] != sign:
            raise ClosedFormError(f"conflicting assignments for f_{2 * i}")
        even[i] = sign

    for j in range(0, p + 1):
        if j >= 1:
            set_even(2 * vt[j] - 2, PLUS)
            set_even(2 * vt[j] - 1, PLUS)
        if j <= p - 1:
            set_even(2 * vt[j], MINUS)
            set_even(2 * vt[j] + 1, MINUS)
    # Alternating vertical/diagonal region between horizontal windows.  The
    # parity here is fixed by the published word tables (e.g. the labels 1/3,
    # 1/4 and 2/5), which force '+' at even i; the inverted parity contradicts
    # those tables on every label whose gap region is nonempty.
    for j in range(0, p):
        for i in range(2 * vt[j] + 2, 2 * vt[j + 1] - 2):
            set_even(i, PLUS if i % 2 == 0 else MINUS)
    unset = [i for i, s in enumerate(even) if s is None]
    if unset:
        raise ClosedFormError(f"even entries left unset at indices {unset}")

    odd: list[str | None] = [None] * c  # odd[i] holds f_{2i+1}
    tie_index: int | None = None

    def set_odd(seq_index: int, sign: str | None) -> None:
        nonlocal tie_index
        slot = (seq_index - 1) // 2
        if odd[slot] is not None:
            raise ClosedFormError(f"conflicting assignments for f_{seq_index}")
        if sign is None:
            tie_index = seq_index
            odd[slot] = "?"
        else:
            odd[slot] = sign

    s = p + q
    for i in range(1, s):  # diagonal crossings, sequence index 4(i-1)+1
        r = (q * i) % s
        if 2 * r == s:
            set_odd(4 * i - 3, None)
        else:
            set_odd(4 * i - 3, MINUS if 2 * r > s else PLUS)
    horizontals = set(vt[1:p])
    for i in range(1, s - 1):  # non-diagonal crossings, sequence index 4(i-1)+3
        if i in horizontals:
            j = vt.index(i)
            r = (j * q) % p
            if 2 * r == p:
                set_odd(4 * i - 1, None)
            else:
                set_odd(4 * i - 1, MINUS if 2 * r > p else PLUS)
        else:
            iprime = max(jj for jj in range(0, p) if i > vt[jj])
            x0 = i - iprime
            r = (x0 * p) % q
            if 2 * r == q:
                set_odd(4 * i - 1, None)
            else:
                set_odd(4 * i - 1, MINUS if 2 * r < q else PLUS)

    if any(s_ is None for s_ in odd):
        raise ClosedFormError("odd entries left unset")
    if tie_index is None or tie_index != c:
        raise ClosedFormError("central tie not identified by the case formulas")

    signs = [""] * (2 * c + 1)
    for i in range(c + 1):
        signs[2 * i] = even[i]  # type: ignore[assignment]
    for slot in range(c):
        signs[2 * slot + 1] = odd[slot]  # type: ignore[assignment]
    if midpoint == MIDPOINT_PLUS:
        signs[c] = PLUS
    elif midpoint == MIDPOINT_MINUS:
        signs[c] = MINUS
    elif midpoint == MIDPOINT_AUTO:
        signs[c] = PLUS if signs[c - 1] == MINUS else MINUS
    else:
        raise ValueError(f"unknown midpoint policy {midpoint!r}")
    return SignSequence("".join(signs), midpoint_index=c)


def even_subsequence(seq: SignSequence) -> SignSequence:
    """Keep indices 0, 2, 4, ...; run lengths give the ordinary-number word."""
    return SignSequence(seq.signs[::2], midpoint_index=None)


def antisymmetric_within(seq: SignSequence) -> bool:
    """f_i = -f_{2c-i} for every i except the central tie."""
    n = len(seq.signs)
    mid = (n - 1) // 2
    for i in range(n):
        j = n - 1 - i
        if i == mid or j == mid:
            continue
        if seq.signs[i] == seq.signs[j]:
            return False
    return True


def opposite_orientations(a: SignSequence, b: SignSequence) -> bool:
    """Entrywise opposite except possibly at the central position."""
    if len(a.signs) != len(b.signs):
        return False
    mid = (len(a.signs) - 1) // 2
    for i, (x, y) in enumerate(zip(a.signs, b.signs)):
        if i == mid:
            continue
        if x == y:
            return False
    return True


def deformed_runs(p: int, q: int, k: int, side: str = LEFT) -> Entries:
    """Run word of the arc to (kq, kp) deformed left or right at lattice points.

    Built by rewriting rather than geometry: with the plus-midpoint word
    [a1,...,an] of (p, q), the left deformation inserts k-1 bridge blocks
    (5, 1, a1-1, a2, ..., an); a1 = 1 leaves a zero that the standard merge
    removes.  The right deformation is the entrywise reversal, with the same
    numerator.
    """
    if k < 2:
        raise ValueError("deformation requires k >= 2")
    if side not in (LEFT, RIGHT):
        raise ValueError(f"unknown side {side!r}")
    if p > q:
        raise ValueError("deformed arcs are generated with p <= q")
    base = sign_sequence(p, q, MIDPOINT_PLUS).runs()
    block = (5, 1, base[0] - 1) + base[1:]
    left = canonicalize(base + block * (k - 1), preserve="value")
    if side == LEFT:
        return left
    return tuple(reversed(left))


DOMINANT = "dominant"
NONDOMINANT = "nondominant"


def band_runs(p: int, q: int, side: str = LEFT) -> tuple[Entries, str]:
    """Run word and gluing type of the closed-curve variant of the arc.

    Left: append 6 to the plus-midpoint word, glue on the first tile's
    dominant edge.  Right: split the last entry of the minus-midpoint word as
    (a_n - 1, 1), append 6, glue nondominant.  The single-crossing arc is
    special: both sides give ((3, 6), nondominant).
    """
    if side not in (LEFT, RIGHT):
        raise ValueError(f"unknown side {side!r}")
    if p > q:
        raise ValueError("band words are generated with p <= q")
    if p == q == 1:
        return ((3, 6), NONDOMINANT)
    if side == LEFT:
        base = sign_sequence(p, q, MIDPOINT_PLUS).runs()
        return (base + (6,), DOMINANT)
    base = sign_sequence(p, q, MIDPOINT_MINUS).runs()
    if base[-1] < 2:
        raise AssertionError("minus-midpoint word should end with an entry > 1")
    return (base[:-1] + (base[-1] - 1, 1, 6), NONDOMINANT)
