"""Exact-or-interval values for planar Turán quantities."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class TuranValue:
    """An integer value or interval [lo, hi] with provenance.

    sharp means the stated bound is attained by some witness.  provenance
    records which theorem or search produced the value.
    """

    lo: int
    hi: int
    sharp: bool = False
    provenance: str = ""

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    @classmethod
    def exactly(cls, value: int, provenance: str = "", sharp: bool = True) -> TuranValue:
        return cls(value, value, sharp=sharp, provenance=provenance)

    def to_json(self) -> dict:
        return {
            "lo": self.lo,
            "hi": self.hi,
            "exact": self.exact,
            "sharp": self.sharp,
            "provenance": self.provenance,
        }

    def __str__(self) -> str:
        if self.exact:
            return str(self.lo)
        return f"[{self.lo}, {self.hi}]"
