"""Closed-form planar Turán values and the sufficient-condition classifier.

The wheel and star families have complete piecewise-exact answers; the
two fan families have exact small cases plus asymptotic intervals; cones
over linear forests get a rational upper bound.  Rational bounds are kept
exact internally and floored only at the API edge; a strict bound drops
to the next integer below when it lands on one.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .constructions import apex_serpentine, double_serpentine, two_apex_cycle
from .embedding import is_planar
from .graphs import Graph, complete_graph, empty_graph, join, path_graph
from .patterns import (
    ConeGraph,
    ConePath,
    Explicit,
    Fan,
    PatternSpec,
    Star,
    Wheel,
    chromatic_classify,
    contains_subgraph,
    has_three_disjoint_cycles,
    is_linear_forest,
    realize,
)
from .values import TuranValue


class NoFormulaError(ValueError):
    """No theorem in scope covers this pattern."""


class FormulaRangeError(ValueError):
    """The pattern is covered, but n is below the theorem's stated range."""


def _floor(x: Fraction) -> int:
    return x.numerator // x.denominator


def _strict_floor(x: Fraction) -> int:
    """Largest integer strictly below x."""
    return _floor(x) - 1 if x.denominator == 1 else _floor(x)


def _require(n: int, at_least: int, what: str) -> None:
    if n < at_least:
        raise FormulaRangeError(f"{what} requires n >= {at_least}, got {n}")


def formula_value(spec: PatternSpec, n: int) -> TuranValue:
    """The theorem-backed value or interval for ex_P(n, pattern).

    Raises FormulaRangeError below the stated range and NoFormulaError
    for patterns outside the covered families.
    """
    if isinstance(spec, Wheel):
        return _wheel_value(spec.k, n)
    if isinstance(spec, Star):
        return _star_value(spec.t, n)
    if isinstance(spec, Fan) and spec.r == 3 and spec.t == 2:
        return _fan2_value(n)
    if isinstance(spec, Fan) and spec.r == 3 and spec.t == 3:
        return _fan3_value(n)
    if isinstance(spec, ConePath):
        return _cone_bound(spec.t, n)
    if isinstance(spec, ConeGraph):
        return _cone_bound(spec.forest.n, n)
    raise NoFormulaError(f"no theorem applies to {spec!r}")


def _wheel_value(k: int, n: int) -> TuranValue:
    if k < 4:
        raise NoFormulaError("wheel theorem covers rims of length >= 4")
    _require(n, k + 1, f"wheel:{k}")
    if k >= 6 or (k == 5 and n != 7) or (k == 4 and n >= 12):
        return TuranValue.exactly(3 * n - 6, provenance="wheel-theorem")
    if (k == 4 and n in (5, 6)) or (k == 5 and n == 7):
        return TuranValue.exactly(3 * n - 7, provenance="wheel-theorem")
    return TuranValue.exactly(3 * n - 8, provenance="wheel-theorem")  # k=4, 7<=n<=11


def _star_value(t: int, n: int) -> TuranValue:
    if t < 3:
        raise NoFormulaError("star theorem covers t >= 3")
    _require(n, t + 1, f"star:{t}")
    if t >= 7 or (t == 6 and n in (7, 8, 9, 10, 12)):
        return TuranValue.exactly(3 * n - 6, provenance="star-theorem")
    if t == 6 and n == 11:
        return TuranValue.exactly(3 * n - 7, provenance="star-theorem")
    if (t == 6 and n in (13, 14)) or (t == 5 and n == 7):
        return TuranValue.exactly(3 * n - 8, provenance="star-theorem")
    return TuranValue.exactly((t - 1) * n // 2, provenance="star-theorem")


def _fan2_value(n: int) -> TuranValue:
    _require(n, 5, "fan:2,3")
    bound = Fraction(19 * n, 8) - 4
    if n % 8 == 0:
        return TuranValue.exactly(_floor(bound), provenance="fan2-theorem")
    lo = 2 * n - 3
    hi = _strict_floor(bound)
    if lo == hi:
        return TuranValue.exactly(lo, provenance="fan2-theorem")
    return TuranValue(lo, hi, sharp=False, provenance="fan2-theorem")


def _fan3_value(n: int) -> TuranValue:
    _require(n, 7, "fan:3,3")
    if n in (7, 8, 9, 10, 12):
        return TuranValue.exactly(3 * n - 6, provenance="fan3-theorem")
    if n == 11:
        return TuranValue.exactly(3 * n - 7, provenance="fan3-theorem")
    if n in (13, 14):
        return TuranValue.exactly(3 * n - 8, provenance="fan3-theorem")
    lo = 5 * n // 2
    hi = _strict_floor(Fraction(17 * n, 6) - 4)
    return TuranValue(lo, hi, sharp=False, provenance="fan3-theorem")


def _cone_bound(t: int, n: int) -> TuranValue:
    """Upper bound for cones over t-vertex linear forests, 4 <= t <= 6."""
    if not 4 <= t <= 6:
        raise NoFormulaError("cone bound covers bases on 4 to 6 vertices")
    _require(n, t + 1, f"cone over {t} vertices")
    bound = Fraction(13 * (t - 1) * n, 4 * t - 2) - Fraction(12 * (t - 1), 2 * t - 1)
    return TuranValue(0, _floor(bound), sharp=False, provenance="cone-bound")


# ----------------------------------------------------------------------
# read-only reference table (short-cycle and path bounds)
# ----------------------------------------------------------------------

_REFERENCE = {
    "C4": (4, lambda n: Fraction(15 * (n - 2), 7), None),
    "C5": (11, lambda n: Fraction(12 * n - 33, 5), None),
    "Theta4": (4, lambda n: Fraction(12 * (n - 2), 5), (12, 20)),
    "Theta5": (5, lambda n: Fraction(5 * (n - 2), 2), (50, 120)),
    "C6": (6, lambda n: Fraction(18 * (n - 2), 7), None),
    "P9": (1, lambda n: max(Fraction(9 * n, 4), Fraction(5 * n - 8, 2)), None),
}


def reference_bounds(name: str, n: int) -> TuranValue:
    """Published upper bounds for short cycles, thetas and P_9.

    Upper bounds only; sharp is set when equality holds at the stated
    congruence class.
    """
    if name not in _REFERENCE:
        raise NoFormulaError(f"no reference bound for {name!r}; "
                             f"choose from {sorted(_REFERENCE)}")
    lo_n, fn, sharp_mod = _REFERENCE[name]
    _require(n, lo_n, name)
    sharp = sharp_mod is not None and n % sharp_mod[1] == sharp_mod[0] % sharp_mod[1]
    return TuranValue(0, _floor(fn(n)), sharp=sharp, provenance=f"reference:{name}")


# ----------------------------------------------------------------------
# sufficient conditions for ex_P(n, H) = 3n-6
# ----------------------------------------------------------------------

WITNESS_BUILDERS = {
    "TwoApexCycle": two_apex_cycle,
    "ApexSerpentine": apex_serpentine,
    "DoubleSerpentine": double_serpentine,
}


@dataclass(frozen=True)
class Prop13Verdict:
    """Which sufficient condition H matches, and the witness family whose
    H-freeness proves ex_P(n, H) = 3n-6 from that size onward."""

    condition: str            # "contains-K4", "a".."g", or "not-covered"
    witness: str | None       # key into WITNESS_BUILDERS
    min_n: int | None

    @property
    def covered(self) -> bool:
        return self.condition != "not-covered"

    def to_json(self) -> dict:
        return {"condition": self.condition, "witness": self.witness,
                "min_n": self.min_n}


def _c_subcase(h: Graph) -> str:
    """Witness for max degree 6: split on the proof's case analysis."""
    profile = h.degree_profile()
    n6 = profile.get(6, 0)
    n5 = profile.get(5, 0)
    n4 = profile.get(4, 0)
    if n6 + n5 >= 2:
        sixes = [v for v in range(h.n) if h.degree(v) == 6]
        highs = [v for v in range(h.n) if h.degree(v) >= 5]
        for x in sixes:
            for y in highs:
                if y != x and not h.has_edge(x, y):
                    return "ApexSerpentine"
        return "TwoApexCycle"
    # n6 + n5 == 1 here, so the single high vertex has degree 6
    if n4 >= 6:
        return "TwoApexCycle"
    s = [v for v in range(h.n) if h.degree(v) in (4, 6)]
    pattern = join(empty_graph(2), path_graph(4))
    from .canon import is_isomorphic
    if is_isomorphic(h.induced_subgraph(s), pattern):
        return "DoubleSerpentine"
    return "TwoApexCycle"


def prop13_classify(h: Graph, n: int) -> Prop13Verdict:
    """Evaluate the sufficient conditions in listed order; first match wins.

    Requires h planar.  The returned witness family is the one the
    corresponding proof case uses; verify_verdict checks it concretely.
    """
    if not is_planar(h):
        raise ValueError("classifier expects a planar forbidden graph")
    nh = h.n
    profile = h.degree_profile()
    dmax = h.max_degree()

    if contains_subgraph(h, complete_graph(4)) is not None:
        return Prop13Verdict("contains-K4", "TwoApexCycle", max(nh, 6))
    if n >= nh + 2 and chromatic_classify(h) == "4-chromatic":
        return Prop13Verdict("a", "TwoApexCycle", nh + 2)
    if dmax >= 7:
        return Prop13Verdict("b", "DoubleSerpentine", nh)
    if dmax == 6:
        n65 = profile.get(6, 0) + profile.get(5, 0)
        if n65 >= 2 or (n65 == 1 and profile.get(4, 0) >= 5):
            return Prop13Verdict("c", _c_subcase(h), nh)
    if dmax == 5:
        fives = [v for v in range(nh) if h.degree(v) == 5]
        if len(fives) >= 3 or (len(fives) == 2 and h.has_edge(*fives)):
            return Prop13Verdict("d", "TwoApexCycle", nh)
    if dmax == 4 and profile.get(4, 0) >= 7:
        return Prop13Verdict("e", "TwoApexCycle", nh)
    # (f): three shapes sharing the same witness
    if profile == {3: nh} and nh >= 9:
        return Prop13Verdict("f", "TwoApexCycle", nh)
    if has_three_disjoint_cycles(h):
        return Prop13Verdict("f", "TwoApexCycle", max(nh, 5))
    if dmax in (4, 5, 6) and profile.get(dmax, 0) == 1:
        u = next(v for v in range(nh) if h.degree(v) == dmax)
        if h.neighborhood_subgraph(u).max_degree() >= 3:
            return Prop13Verdict("f", "TwoApexCycle", nh)
    low = sum(c for d, c in profile.items() if d <= 3)
    if h.n > 0 and (h.min_degree() >= 4 or low == 1):
        return Prop13Verdict("g", "ApexSerpentine", max(nh, 6))
    return Prop13Verdict("not-covered", None, None)


def verify_verdict(verdict: Prop13Verdict, h: Graph, n: int) -> bool:
    """Build the verdict's witness family at n and confirm it is H-free
    with 3n-6 edges."""
    if not verdict.covered:
        raise ValueError("nothing to verify for a not-covered verdict")
    if verdict.min_n is not None and n < verdict.min_n:
        raise ValueError(f"witness guarantee starts at n = {verdict.min_n}")
    witness = WITNESS_BUILDERS[verdict.witness](n)
    if witness.edge_count != 3 * n - 6:
        return False
    return contains_subgraph(witness, h) is None
