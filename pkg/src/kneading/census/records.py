from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Iterable, Iterator

from ..forms import QForm
from ..sequences import Seq
from .engine import CensusColumns, decode, run_census

CSV_HEADER = ("sum_minus_1", "caliber", "d", "A", "B", "C")


@dataclass(frozen=True)
class CycleRecord:
    """One kneading cycle of compositions of ``sum``.

    ``representative`` is the lexicographically smallest member.  ``d`` and
    ``primitive_form`` describe the member of the matching reduction cycle
    with the smallest middle coefficient, as ``d * primitive_form``.  For the
    cycles (1), (2) and (1, k, 1), whose spec is excluded, both are None.
    """

    sum: int
    caliber: int
    parity: int
    alternant: int
    d: int | None
    primitive_form: QForm | None
    representative: Seq

    @property
    def r(self) -> int | None:
        """``r`` with ``sum = (2r + 1) * caliber + 1``, or None if not integral."""
        num = self.sum - 1 - self.caliber
        if num < 0 or num % (2 * self.caliber):
            return None
        return num // (2 * self.caliber)

    @property
    def form(self) -> QForm | None:
        if self.primitive_form is None:
            return None
        return self.primitive_form.scale(self.d)

    def table_row(self) -> tuple:
        A, B, C = self.primitive_form
        return (self.sum - 1, self.caliber, self.d, A, B, C)


def records_from_columns(cols: CensusColumns) -> list[CycleRecord]:
    out = []
    n = cols.n
    c = {k: v.tolist() for k, v in cols.columns.items()}
    for i in range(len(cols)):
        d = c["d"][i]
        out.append(
            CycleRecord(
                sum=n,
                caliber=c["caliber"][i],
                parity=c["parity"][i],
                alternant=c["alternant"][i],
                d=d if d else None,
                primitive_form=QForm(c["A"][i], c["B"][i], c["C"][i]) if d else None,
                representative=decode(c["mask"][i], n),
            )
        )
    return out


def compositions(n: int) -> Iterator[Seq]:
    """All ``2^(n-1)`` compositions of ``n``, each once."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    for w in range(1 << (n - 1)):
        yield decode(w, n)


def cycle_census(n: int, parity: int | None = None, workers: int = 1) -> list[CycleRecord]:
    """Every kneading cycle of compositions of ``n``, optionally of one parity."""
    return records_from_columns(run_census(n, parity, workers))


def write_csv(records: Iterable[CycleRecord], stream=None) -> str:
    own = stream is None
    stream = io.StringIO() if own else stream
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for rec in records:
        if rec.primitive_form is not None:
            writer.writerow(rec.table_row())
    return stream.getvalue() if own else ""


def record_to_json(rec: CycleRecord) -> dict:
    return {
        "sum": rec.sum,
        "caliber": rec.caliber,
        "parity": rec.parity,
        "alternant": rec.alternant,
        "d": rec.d,
        "primitive_form": list(rec.primitive_form) if rec.primitive_form else None,
        "representative": list(rec.representative),
    }
