"""Exact continued-fraction arithmetic on integer entry sequences.

A finite continued fraction [a1,...,an] = a1 + 1/(a2 + 1/(... + 1/an)) is
represented as a plain tuple of ints.  Its numerator in lowest terms is the
continuant K(a1,...,an), which satisfies

    K(a1,...,ai) = ai * K(a1,...,a_{i-1}) + K(a1,...,a_{i-2}),   K() = 1,

and is computed with Python's arbitrary-precision integers; nothing in this
module ever overflows or rounds.

Also provides the run-length codec between +/- sign strings and entry
sequences: the entries of the continued fraction are the lengths of the
maximal constant runs of the sign string.
"""

from __future__ import annotations

from typing import Sequence

Entries = tuple[int, ...]

MINUS = "-"
PLUS = "+"

# Unicode minus signs occasionally show up in pasted input.
_SIGN_ALIASES = {"−": MINUS, "–": MINUS, "-": MINUS, "+": PLUS}


def continuant(entries: Sequence[int]) -> int:
    """Numerator K(a1,...,an) of the continued fraction, K() = 1."""
    h_prev, h = 0, 1  # (K of the empty prefix's predecessor, K() = 1)
    for a in entries:
        h_prev, h = h, a * h + h_prev
    return h


def evaluate(entries: Sequence[int]) -> tuple[int, int]:
    """Return (K(a1,...,an), K(a2,...,an)), the reduced numerator/denominator.

    Entries must be positive.  The pair is always coprime; the empty sequence
    evaluates to (1, 1) by the K() = 1 convention.
    """
    for a in entries:
        if a <= 0:
            raise ValueError(f"continued-fraction entries must be positive, got {a}")
    return continuant(entries), continuant(entries[1:])


def reverse_entries(entries: Sequence[int]) -> Entries:
    """Reversed entry sequence.  The continuant is invariant under reversal."""
    return tuple(reversed(tuple(entries)))


def canonicalize(entries: Sequence[int], preserve: str = "value") -> Entries:
    """Normalize an entry sequence that may contain zeros or boundary 1s.

    Interior zeros are removed with the merge [..., x, 0, y, ...] -> [..., x+y, ...]
    and a trailing 1 is folded into its predecessor; both rewrites preserve the
    value (hence also the numerator).  With preserve="numerator" a leading 1 is
    additionally folded via [1, a2, ...] -> [a2+1, ...], which keeps the
    numerator but changes the value.

    Zeros may only occur in the interior; an all-zero or boundary-zero
    sequence is rejected.
    """
    if preserve not in ("value", "numerator"):
        raise ValueError(f"unknown preserve mode {preserve!r}")
    work = [int(a) for a in entries]
    if not work:
        return ()
    if any(a < 0 for a in work):
        raise ValueError("negative continued-fraction entry")
    if all(a == 0 for a in work):
        raise ValueError("all-zero continued-fraction input")

    while 0 in work:
        i = work.index(0)
        if i == 0 or i == len(work) - 1:
            raise ValueError("zero entry at sequence boundary cannot be merged")
        work[i - 1 : i + 2] = [work[i - 1] + work[i + 1]]

    while len(work) >= 2 and work[-1] == 1:
        work.pop()
        work[-1] += 1

    if preserve == "numerator":
        while len(work) >= 2 and work[0] == 1:
            work.pop(0)
            work[0] += 1

    return tuple(work)


def signs_to_runs(signs: str) -> Entries:
    """Run lengths of a +/- string, e.g. "--+++--" -> (2, 3, 2)."""
    if not signs:
        raise ValueError("empty sign sequence")
    normalized = []
    for ch in signs:
        if ch not in _SIGN_ALIASES:
            raise ValueError(f"invalid sign character {ch!r}")
        normalized.append(_SIGN_ALIASES[ch])
    runs = [1]
    for prev, cur in zip(normalized, normalized[1:]):
        if cur == prev:
            runs[-1] += 1
        else:
            runs.append(1)
    return tuple(runs)


def runs_to_signs(entries: Sequence[int], first_sign: str = MINUS) -> str:
    """Inverse of :func:`signs_to_runs` given the first sign."""
    first = _SIGN_ALIASES.get(first_sign)
    if first is None:
        raise ValueError(f"invalid sign {first_sign!r}")
    out = []
    sign = first
    for a in entries:
        if a <= 0:
            raise ValueError(f"run lengths must be positive, got {a}")
        out.append(sign * a)
        sign = PLUS if sign == MINUS else MINUS
    if not out:
        raise ValueError("empty run sequence")
    return "".join(out)


def format_entries(entries: Sequence[int]) -> str:
    """Text form used by the CLI: [3,4,5,3]."""
    return "[" + ",".join(str(a) for a in entries) + "]"


def parse_entries(text: str) -> Entries:
    """Parse "[3,4,5,3]" or "3,4,5,3" into an entry tuple."""
    body = text.strip()
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1]
    if not body:
        raise ValueError("empty continued fraction")
    try:
        return tuple(int(part) for part in body.split(","))
    except ValueError as exc:
        raise ValueError(f"cannot parse continued fraction {text!r}") from exc
