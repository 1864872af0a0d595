"""Vectorized kneading over bitmask-encoded compositions.

A composition of ``n`` is stored as an ``(n-1)``-bit word, most significant
bit first, with a 1 wherever a part ends::

    (2, 3)  ->  0 1 0 0  ->  4

In this encoding pinching an end of a sequence flips the bit at that end,
so kneading ``0^(q1-1) 1 r`` gives ``r' 1 0^(q1-1)``, where ``r'`` is ``r``
with its first and last bits flipped.  Lexicographically smaller sequences
have larger words, so the smallest member of a cycle is its largest mask.

Cycles are found without a visited set: a mask is a representative exactly
when no member of its orbit is larger, and the orbit walk stops at the
first larger member.  Work is split into contiguous mask ranges, which are
the prefix classes of the composition space, and the per-range results are
merged and sorted, so the output does not depend on the worker count.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

MAX_N = 40
CHUNK_BITS = 20

COLUMNS = ("caliber", "parity", "alternant", "d", "A", "B", "C", "mask")


def encode(seq) -> int:
    w = 0
    for q in seq:
        w = (w << q) | 1
    return w >> 1


def decode(w: int, n: int) -> tuple[int, ...]:
    parts = []
    run = 1
    for bit in range(n - 2, -1, -1):
        if (w >> bit) & 1:
            parts.append(run)
            run = 1
        else:
            run += 1
    parts.append(run)
    return tuple(parts)


def _bit_length(w: np.ndarray) -> np.ndarray:
    # exact: masks stay below 2**53
    return np.frexp(w.astype(np.float64))[1].astype(np.int64)


def knead_masks(w: np.ndarray, m: int) -> np.ndarray:
    """Apply one kneading step to every ``m``-bit mask in ``w``."""
    h = _bit_length(w) - 1
    nonzero = h >= 0
    h = np.where(nonzero, h, 0)
    t = (m - 1) - h
    r = w & ((np.int64(1) << h) - 1)
    flip = np.where(h >= 1, (np.int64(1) << np.maximum(h - 1, 0)) ^ 1, 0)
    r = r ^ flip
    out = (r << (t + 1)) | (np.int64(1) << t)
    return np.where(nonzero, out, w)


def find_representatives(start: np.ndarray, m: int) -> tuple[np.ndarray, np.ndarray]:
    """Masks in ``start`` that are the maximum of their orbit, with calibers."""
    idx = np.arange(start.size)
    caliber = np.zeros(start.size, dtype=np.int64)
    s = start
    c = knead_masks(start, m)
    steps = 1
    while idx.size:
        done = c == s
        caliber[idx[done]] = steps
        keep = ~(done | (c > s))
        idx, s, c = idx[keep], s[keep], c[keep]
        c = knead_masks(c, m)
        steps += 1
    is_rep = caliber > 0
    return start[is_rep], caliber[is_rep]


def continuant_matrices(w: np.ndarray, m: int):
    """Entries ``p, q, r, s`` of the continuant matrix of each mask.

    A part ``q`` contributes ``[[q, 1], [1, 0]] = U^(q-1) J`` with
    ``U = [[1, 1], [0, 1]]`` and ``J = [[1, 1], [1, 0]]``: a 0 bit multiplies
    by ``U``, a 1 bit (and the end of the word) by ``J``.
    """
    one = np.ones_like(w)
    p, q, r, s = one, np.zeros_like(w), np.zeros_like(w), one
    for bit in range(m - 1, -1, -1):
        cut = ((w >> bit) & 1).astype(bool)
        p, q = np.where(cut, p + q, p), np.where(cut, p, p + q)
        r, s = np.where(cut, r + s, r), np.where(cut, r, r + s)
    return p + q, p, r + s, r


def _isqrt(D: np.ndarray) -> np.ndarray:
    root = np.sqrt(D.astype(np.float64)).astype(np.int64)
    for _ in range(2):
        root = np.where(root * root > D, root - 1, root)
        root = np.where((root + 1) * (root + 1) <= D, root + 1, root)
    return root


def _gcd3(a, b, c):
    return np.gcd(np.gcd(a, b), c)


def cycle_stats(n: int, masks: np.ndarray, caliber: np.ndarray) -> dict[str, np.ndarray]:
    """Invariants of the cycles with the given representative masks.

    The form columns hold the primitive part of the cycle member with the
    smallest middle coefficient (ties by smallest A), found by walking the
    reduction cycle of ``phi`` of the representative.  Cycles whose spec is
    excluded (discriminant -3 or 0) get ``d = 0`` and a zero form.
    """
    m = n - 1
    p, q, r, s = continuant_matrices(masks, m)
    A, B, C = r, p + s, q
    alt = p - s
    parity = (np.bitwise_count(masks).astype(np.int64) + 1) % 2
    valid = ~((parity == 1) & (alt <= 2))
    D = B * B - 4 * A * C
    root = _isqrt(np.where(valid, D, 2))
    A0, B0, C0 = A.copy(), B.copy(), C.copy()
    bA, bB, bC = A.copy(), B.copy(), C.copy()
    cal_max = int(caliber.max()) if caliber.size else 0
    closed = ~valid
    for k in range(1, cal_max + 1):
        twoA = np.where(valid, 2 * A, 1)
        red = (B + root) // twoA + 1
        A, B, C = A * red * red - B * red + C, 2 * A * red - B, A
        inside = valid & (k < caliber)
        better = inside & ((B < bB) | ((B == bB) & (A < bA)))
        bA, bB, bC = np.where(better, A, bA), np.where(better, B, bB), np.where(better, C, bC)
        at_end = valid & (k == caliber)
        closed |= at_end & (A == A0) & (B == B0) & (C == C0)
    if not closed.all():
        raise AssertionError("a reduction cycle disagrees with its kneading cycle")
    d = np.where(valid, _gcd3(bA, bB, bC), 0)
    safe = np.where(valid, d, 1)
    return {
        "caliber": caliber,
        "parity": parity,
        "alternant": alt,
        "d": d,
        "A": np.where(valid, bA // safe, 0),
        "B": np.where(valid, bB // safe, 0),
        "C": np.where(valid, bC // safe, 0),
        "mask": masks,
    }


def census_range(n: int, lo: int, hi: int, parity: int | None) -> dict[str, np.ndarray]:
    masks = np.arange(lo, hi, dtype=np.int64)
    if parity is not None:
        # length = popcount + 1
        keep = (np.bitwise_count(masks).astype(np.int64) + 1) % 2 == parity
        masks = masks[keep]
    reps, cal = find_representatives(masks, n - 1)
    return cycle_stats(n, reps, cal)


def _census_range_args(args):
    return census_range(*args)


@dataclass
class CensusColumns:
    """Columnar census of the kneading cycles of compositions of ``n``."""

    n: int
    columns: dict[str, np.ndarray]

    def __len__(self) -> int:
        return int(self.columns["mask"].size)

    def __getitem__(self, key: str) -> np.ndarray:
        return self.columns[key]

    def select(self, keep: np.ndarray) -> "CensusColumns":
        return CensusColumns(self.n, {k: v[keep] for k, v in self.columns.items()})


def run_census(n: int, parity: int | None = None, workers: int = 1) -> CensusColumns:
    """Census of all compositions of ``n`` (optionally of one length parity)."""
    if not 1 <= n <= MAX_N:
        raise ValueError(f"census supports 1 <= n <= {MAX_N}, got {n}")
    if parity not in (None, 0, 1):
        raise ValueError(f"parity must be 0, 1 or None, got {parity}")
    if n == 1:
        cols = cycle_stats(1, np.zeros(1, dtype=np.int64), np.ones(1, dtype=np.int64))
        out = CensusColumns(1, cols)
        return out if parity in (None, 1) else out.select(np.zeros(1, dtype=bool))
    total = 1 << (n - 1)
    step = 1 << CHUNK_BITS
    tasks = [(n, lo, min(lo + step, total), parity) for lo in range(0, total, step)]
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_census_range_args, tasks))
    else:
        parts = [census_range(*t) for t in tasks]
    cols = {k: np.concatenate([part[k] for part in parts]) for k in COLUMNS}
    order = np.lexsort(
        (cols["mask"], cols["d"], cols["C"], cols["A"], cols["B"], cols["caliber"], cols["parity"])
    )
    return CensusColumns(n, {k: v[order] for k, v in cols.items()})
