"""Pretzel diagrams: standardization, orientation tracing, classification.

A pretzel diagram is a cyclic row of vertical 2-string twist regions
("strips") joined by a top rail and a bottom rail of arcs; the arc closing the
row over the top is the top long strand, its partner under the bottom is the
bottom long strand.  A raw diagram is a list of nonzero signed integers, one
per strip: |e| crossings, the sign giving the crossing sign.

Conventions fixed here and relied on everywhere else:

* the top long strand is oriented right to left, and every further link
  component is seeded at its first untraced top arc, also right to left;
* a strip is "parallel" when the trace runs its two strands in the same
  vertical sense and "antiparallel" otherwise;
* the crossing sign of a strip is the sign of its raw entry for both strip
  classes (the antiparallel convention is anchored by the grouping
  P3(2;-3|4;0) for strips [2, -3, 4], and its two companions);
* a single-strip diagram denotes the 2-braid annular closure T(m,2), the
  degenerate form every multi-strip recursion reduces to.

Type classification looks at the Seifert circles through the two long
strands: distinct circles with opposite planar orientations give Type 1, with
equal orientations Type 2, and a shared circle gives Type 3.  Type 3 diagrams
are grouped as P3(mu; -nu | 2*alpha; -2*beta) by strip class and sign.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Iterator, Sequence


class PretzelInputError(ValueError):
    """Raised for unparseable or invalid pretzel descriptions."""


class _TwoComponentUnlink:
    """Sentinel for a diagram whose strips cancel away entirely."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "TwoComponentUnlink"


TWO_COMPONENT_UNLINK = _TwoComponentUnlink()


# ---------------------------------------------------------------------------
# raw diagrams


@dataclass(frozen=True)
class RawPretzel:
    """Strip list of a pretzel diagram; entries are nonzero half-twist counts."""

    strips: tuple[int, ...]

    def __post_init__(self):
        if len(self.strips) < 1:
            raise PretzelInputError("a pretzel needs at least one strip")
        if any(not isinstance(e, int) or e == 0 for e in self.strips):
            raise PretzelInputError(f"strips must be nonzero integers: {self.strips}")

    @property
    def crossings(self) -> int:
        return sum(abs(e) for e in self.strips)


def parse_strips(text: str) -> RawPretzel:
    """Parse "2,-3,4" into a RawPretzel.  Zero strips are dropped: a 0-tangle
    strip is planar-isotopic to no strip at all."""
    entries = []
    for tok in text.split(","):
        tok = tok.strip()
        if not tok:
            raise PretzelInputError(f"empty strip entry in {text!r}")
        try:
            v = int(tok)
        except ValueError:
            raise PretzelInputError(f"bad strip entry {tok!r}") from None
        if v != 0:
            entries.append(v)
    if not entries:
        raise PretzelInputError(f"no nonzero strips in {text!r}")
    return RawPretzel(tuple(entries))


def is_standard(raw: RawPretzel) -> bool:
    """Standard means no +1 strip coexists with a -1 strip."""
    return not (1 in raw.strips and -1 in raw.strips)


def standardize(raw: RawPretzel) -> RawPretzel | _TwoComponentUnlink:
    """Cancel opposite single-crossing strips (Reidemeister II pairs).

    Each +1/-1 pair is deleted; if everything cancels, the diagram is the
    two-component unlink and the sentinel is returned.
    """
    strips = list(raw.strips)
    while 1 in strips and -1 in strips:
        strips.remove(1)
        strips.remove(-1)
    if not strips:
        return TWO_COMPONENT_UNLINK
    return RawPretzel(tuple(strips))


# ---------------------------------------------------------------------------
# Type 3 groupings


@dataclass(frozen=True)
class Type3Grouping:
    """The P3(mu; -nu | 2*alpha; -2*beta) presentation of a Type 3 pretzel.

    ``mu``/``nu`` are the positive/negative parallel strip sizes, ``alpha`` and
    ``beta`` the half crossing counts of the positive/negative antiparallel
    strips.  All four lists are kept sorted descending; the constructor sorts,
    so callers may pass any order.
    """

    mu: tuple[int, ...]
    nu: tuple[int, ...]
    alpha: tuple[int, ...]
    beta: tuple[int, ...]

    def __post_init__(self):
        for name in ("mu", "nu", "alpha", "beta"):
            vals = tuple(sorted(getattr(self, name), reverse=True))
            if any(not isinstance(v, int) or v < 1 for v in vals):
                raise PretzelInputError(f"{name} entries must be positive integers")
            object.__setattr__(self, name, vals)
        if (self.rho_plus + self.rho_minus) % 2 != 0 or self.rho_plus + self.rho_minus < 2:
            raise PretzelInputError(
                "main cycle length rho+ + rho- must be even and at least 2, got "
                f"{self.rho_plus + self.rho_minus}"
            )
        if self.delta_plus and self.delta_minus:
            raise PretzelInputError(
                "not standard: single crossings of both signs (Reidemeister II pair)"
            )

    # derived counts -----------------------------------------------------

    @property
    def rho_plus(self) -> int:
        return len(self.mu)

    @property
    def rho_minus(self) -> int:
        return len(self.nu)

    @property
    def kappa_plus(self) -> int:
        return len(self.alpha)

    @property
    def kappa_minus(self) -> int:
        return len(self.beta)

    @property
    def delta_plus(self) -> int:
        return sum(1 for m in self.mu if m == 1)

    @property
    def delta_minus(self) -> int:
        return sum(1 for v in self.nu if v == 1)

    @property
    def n(self) -> int:
        return (self.rho_plus + self.rho_minus) // 2

    @property
    def sum_alpha(self) -> int:
        return sum(self.alpha)

    @property
    def sum_beta(self) -> int:
        return sum(self.beta)

    @property
    def crossings(self) -> int:
        return sum(self.mu) + sum(self.nu) + 2 * self.sum_alpha + 2 * self.sum_beta

    @property
    def negative_crossings(self) -> int:
        return sum(self.nu) + 2 * self.sum_beta

    @property
    def writhe(self) -> int:
        return self.crossings - 2 * self.negative_crossings

    # structure ----------------------------------------------------------

    def canonical_key(self) -> tuple:
        return (self.mu, self.nu, self.alpha, self.beta)

    def mirror(self) -> "Type3Grouping":
        """Swap crossing signs: mu <-> nu and alpha <-> beta."""
        return Type3Grouping(mu=self.nu, nu=self.mu, alpha=self.beta, beta=self.alpha)

    def notation(self) -> str:
        """Caption-style name, antiparallel strips shown by crossing count."""

        def part(vals, sign, double):
            if not vals:
                return "0"
            k = 2 if double else 1
            return ",".join(str(sign * k * v) for v in vals)

        return (
            f"P3({part(self.mu, 1, False)};{part(self.nu, -1, False)}"
            f"|{part(self.alpha, 1, True)};{part(self.beta, -1, True)})"
        )

    def parallel_strips(self) -> tuple[int, ...]:
        return tuple(list(self.mu) + [-v for v in self.nu])

    def antiparallel_strips(self) -> tuple[int, ...]:
        return tuple([2 * a for a in self.alpha] + [-2 * b for b in self.beta])

    def to_json(self) -> dict:
        return {
            "mu": list(self.mu),
            "nu": list(self.nu),
            "alpha": list(self.alpha),
            "beta": list(self.beta),
            "rho_plus": self.rho_plus,
            "rho_minus": self.rho_minus,
            "kappa_plus": self.kappa_plus,
            "kappa_minus": self.kappa_minus,
            "delta_plus": self.delta_plus,
            "delta_minus": self.delta_minus,
            "n": self.n,
            "crossings": self.crossings,
            "writhe": self.writhe,
            "notation": self.notation(),
        }

    @classmethod
    def from_json(cls, data: dict) -> "Type3Grouping":
        return cls(
            mu=tuple(data["mu"]),
            nu=tuple(data["nu"]),
            alpha=tuple(data["alpha"]),
            beta=tuple(data["beta"]),
        )


def parse_group(text: str) -> Type3Grouping:
    """Parse the grouped form "mu=2;nu=3;alpha=2;beta=" (empty lists allowed)."""
    parts: dict[str, tuple[int, ...]] = {}
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        if "=" not in chunk:
            raise PretzelInputError(f"bad group component {chunk!r}")
        name, _, vals = chunk.partition("=")
        name = name.strip()
        if name not in ("mu", "nu", "alpha", "beta"):
            raise PretzelInputError(f"unknown group list {name!r}")
        vals = vals.strip()
        if vals:
            try:
                parts[name] = tuple(int(v.strip()) for v in vals.split(","))
            except ValueError:
                raise PretzelInputError(f"bad integers in {chunk!r}") from None
        else:
            parts[name] = ()
    missing = {"mu", "nu", "alpha", "beta"} - parts.keys()
    if missing:
        raise PretzelInputError(f"group text missing lists: {sorted(missing)}")
    return Type3Grouping(mu=parts["mu"], nu=parts["nu"], alpha=parts["alpha"], beta=parts["beta"])


# ---------------------------------------------------------------------------
# orientation tracing

# A port is (side, strip, end): side "T"/"B", end "L"/"R".
# Arc i on a rail joins the right port of strip i to the left port of strip
# i+1 (mod k); arc k-1 is the long strand on that rail.


def _strip_exit(strips: Sequence[int], i: int, side: str, end: str) -> tuple[str, str]:
    """Exit (side, end) of the strand entering strip i at (side, end).

    Odd strips transpose their two strand positions, even strips keep them.
    """
    other_side = "B" if side == "T" else "T"
    if abs(strips[i]) % 2 == 1:
        return other_side, ("R" if end == "L" else "L")
    return other_side, end


def _arc_ends(k: int, rail: str, i: int) -> tuple[tuple, tuple]:
    return ((rail, i, "R"), (rail, (i + 1) % k, "L"))


@dataclass
class _Trace:
    """Per-strip strand senses plus component count for a k >= 2 diagram."""

    strips: tuple[int, ...]
    # pass direction keyed by the top port the pass touches: True = downward
    down: dict[tuple[int, str], bool] = field(default_factory=dict)
    arc_dir: dict[tuple[str, int], tuple] = field(default_factory=dict)  # arc -> from-port
    components: int = 0


def _trace_orientations(strips: Sequence[int]) -> _Trace:
    k = len(strips)
    tr = _Trace(strips=tuple(strips))
    port_arc: dict[tuple, tuple[str, int]] = {}
    for rail in ("T", "B"):
        for i in range(k):
            a, b = _arc_ends(k, rail, i)
            port_arc[a] = (rail, i)
            port_arc[b] = (rail, i)

    # Seeds: the top long strand first, then remaining top arcs left to right,
    # each oriented right to left.
    seeds = [("T", k - 1)] + [("T", i) for i in range(k - 1)]
    for arc in seeds:
        if arc in tr.arc_dir:
            continue
        tr.components += 1
        rail, i = arc
        right_port, left_port = _arc_ends(k, rail, i)
        # right-to-left: the long arc starts at the right port of strip k-1,
        # a short arc starts at the left port of strip i+1
        start, target = ((right_port, left_port) if i == k - 1 else (left_port, right_port))
        tr.arc_dir[arc] = start
        # walk: `at` is the port the flow is entering a strip through
        at = target
        while True:
            side, j, end = at
            tr.down[(j, end if side == "T" else _strip_exit(strips, j, side, end)[1])] = (
                side == "T"
            )
            out = (_strip_exit(strips, j, side, end)[0], j, _strip_exit(strips, j, side, end)[1])
            arc2 = port_arc[out]
            a2, b2 = _arc_ends(k, arc2[0], arc2[1])
            if arc2 in tr.arc_dir:
                break
            tr.arc_dir[arc2] = out
            at = b2 if out == a2 else a2
    return tr


def _strip_class(tr: _Trace, i: int) -> str:
    left_down = tr.down[(i, "L")]
    right_down = tr.down[(i, "R")]
    return "parallel" if left_down == right_down else "antiparallel"


# ---------------------------------------------------------------------------
# Seifert circles of the traced diagram


def _seifert_circles(strips: Sequence[int], classes: Sequence[str]) -> list[list[tuple]]:
    """Circles as port cycles after orientation-respecting smoothing.

    Parallel strips smooth vertically (L-L, R-R); antiparallel strips close
    into caps (top and bottom turnbacks) and their interior circles are
    counted separately.
    """
    k = len(strips)
    join: dict[tuple, tuple] = {}
    for i in range(k):
        if classes[i] == "parallel":
            join[("T", i, "L")] = ("B", i, "L")
            join[("B", i, "L")] = ("T", i, "L")
            join[("T", i, "R")] = ("B", i, "R")
            join[("B", i, "R")] = ("T", i, "R")
        else:
            join[("T", i, "L")] = ("T", i, "R")
            join[("T", i, "R")] = ("T", i, "L")
            join[("B", i, "L")] = ("B", i, "R")
            join[("B", i, "R")] = ("B", i, "L")
    port_arc: dict[tuple, tuple] = {}
    arc_other: dict[tuple, dict] = {}
    for rail in ("T", "B"):
        for i in range(k):
            a, b = _arc_ends(k, rail, i)
            port_arc[a] = (rail, i)
            port_arc[b] = (rail, i)
            arc_other[(rail, i)] = {a: b, b: a}

    circles = []
    seen: set[tuple] = set()
    for start in sorted(port_arc):
        if start in seen:
            continue
        cyc = []
        p = start
        while True:
            seen.add(p)
            cyc.append(p)
            q = arc_other[port_arc[p]][p]  # cross the rail arc
            seen.add(q)
            cyc.append(q)
            p = join[q]  # through the smoothed strip
            if p == start:
                break
        circles.append(cyc)
    return circles


def _circle_signed_area(strips: Sequence[int], tr: _Trace, cyc: list[tuple]) -> float:
    """Signed area of the circle's planar polygon, oriented by the trace.

    Positive area means counterclockwise.  Coordinates follow the flat
    template: strip i spans x in [i-0.2, i+0.2], rails at y=1 and y=0, long
    arcs detouring through y=2 and y=-1, caps dipping inside the strip.
    """
    k = len(strips)

    def xy(port):
        rail, i, end = port
        x = i - 0.2 if end == "L" else i + 0.2
        return (x, 1.0 if rail == "T" else 0.0)

    pts: list[tuple[float, float]] = []
    m = len(cyc)
    for idx in range(0, m, 2):
        p, q = cyc[idx], cyc[idx + 1]
        # rail arc from p to q
        rail, i = p[0], None
        for j in range(k):
            a, b = _arc_ends(k, p[0], j)
            if p in (a, b) and q in (a, b):
                i = j
                break
        pts.append(xy(p))
        if i == k - 1:  # long strand detour
            y = 2.0 if rail == "T" else -1.0
            pts.append((xy(p)[0], y))
            pts.append((xy(q)[0], y))
        # then through the strip from q to join[q]; caps dip into the strip
        nxt = cyc[(idx + 2) % m]
        pts.append(xy(q))
        if q[0] == nxt[0]:  # cap (same rail): add the dip vertex
            y = 0.9 if q[0] == "T" else 0.1
            pts.append((q[1], y))
    # orient the polygon by the traced direction of the first rail arc
    first_arc = None
    for j in range(k):
        a, b = _arc_ends(k, cyc[0][0], j)
        if cyc[0] in (a, b) and cyc[1] in (a, b):
            first_arc = (cyc[0][0], j)
            break
    area = 0.0
    for (x1, y1), (x2, y2) in zip(pts, pts[1:] + pts[:1]):
        area += x1 * y2 - x2 * y1
    if tr.arc_dir[first_arc] != cyc[0]:
        area = -area
    return area / 2.0


# ---------------------------------------------------------------------------
# classification


@dataclass(frozen=True)
class LinkType:
    """Classification result: the tag plus the oriented strip content.

    ``parallel`` and ``antiparallel`` carry signed crossing counts usable as a
    skein-engine state for any type; ``grouping`` is set for Type 3 only.
    """

    tag: str  # "type1" | "type2" | "type3"
    grouping: Type3Grouping | None
    parallel: tuple[int, ...]
    antiparallel: tuple[int, ...]
    components: int

    def to_json(self) -> dict:
        data = {
            "type": self.tag,
            "parallel_strips": list(self.parallel),
            "antiparallel_strips": list(self.antiparallel),
            "components": self.components,
        }
        if self.grouping is not None:
            data["grouping"] = self.grouping.to_json()
        return data


def component_count(raw: RawPretzel) -> int:
    """Number of link components of the diagram (single strips close into
    2-braid closures: two components when even, one when odd)."""
    if len(raw.strips) == 1:
        return 2 if raw.strips[0] % 2 == 0 else 1
    return _trace_orientations(raw.strips).components


def classify(raw: RawPretzel) -> LinkType:
    """Classify a standard diagram and, for Type 3, build its grouping."""
    if not is_standard(raw):
        raise PretzelInputError(
            "diagram is not standard: run standardize() to cancel +1/-1 strips"
        )
    strips = raw.strips
    k = len(strips)
    if k == 1:
        # Degenerate single-strip closure: the 2-braid closure T(m,2), an
        # antiparallel 2-strand torus link when |m| is even.
        m = strips[0]
        return LinkType(
            tag="type1",
            grouping=None,
            parallel=(),
            antiparallel=(m,),
            components=2 if m % 2 == 0 else 1,
        )

    tr = _trace_orientations(strips)
    classes = [_strip_class(tr, i) for i in range(k)]
    circles = _seifert_circles(strips, classes)

    def circle_of(arc_ports):
        for idx, cyc in enumerate(circles):
            if arc_ports[0] in cyc:
                return idx
        raise AssertionError("port missing from Seifert circles")

    c1 = circle_of(_arc_ends(k, "T", k - 1))
    c2 = circle_of(_arc_ends(k, "B", k - 1))

    parallel = tuple(strips[i] for i in range(k) if classes[i] == "parallel")
    antiparallel = tuple(strips[i] for i in range(k) if classes[i] == "antiparallel")

    if c1 == c2:
        if any(abs(m) % 2 == 1 for m in antiparallel):
            # two Seifert circles sharing a crossing have opposite senses, so
            # an odd strip of a Type 3 diagram cannot be antiparallel
            raise PretzelInputError(
                f"inconsistent trace for {strips}: odd antiparallel strip in a Type 3 diagram"
            )
        g = Type3Grouping(
            mu=tuple(m for m in parallel if m > 0),
            nu=tuple(-m for m in parallel if m < 0),
            alpha=tuple(m // 2 for m in antiparallel if m > 0),
            beta=tuple(-m // 2 for m in antiparallel if m < 0),
        )
        return LinkType("type3", g, parallel, antiparallel, tr.components)

    a1 = _circle_signed_area(strips, tr, circles[c1])
    a2 = _circle_signed_area(strips, tr, circles[c2])
    tag = "type2" if (a1 > 0) == (a2 > 0) else "type1"
    return LinkType(tag, None, parallel, antiparallel, tr.components)


# ---------------------------------------------------------------------------
# enumeration


def _descending_lists(budget: int, min_part: int, weight: int) -> Iterator[tuple[int, ...]]:
    """All weakly decreasing tuples with parts >= min_part and
    weight*sum <= budget, including the empty tuple."""

    def rec(prefix: list[int], remaining: int, cap: int):
        yield tuple(prefix)
        lo = min_part
        for v in range(min(cap, remaining // weight), lo - 1, -1):
            prefix.append(v)
            yield from rec(prefix, remaining - weight * v, v)
            prefix.pop()

    yield from rec([], budget, budget)


def enumerate_type3(max_crossings: int) -> Iterator[Type3Grouping]:
    """Every standard Type 3 grouping with at most ``max_crossings`` crossings.

    The stream is normalized to nu_i > 1 (negative lone crossings are covered
    through mirror images) and is deterministic: sorted by crossing count, then
    by the canonical key.
    """
    if max_crossings < 2:
        raise PretzelInputError("max_crossings must be at least 2")
    found: list[Type3Grouping] = []
    for mu in _descending_lists(max_crossings, 1, 1):
        smu = sum(mu)
        for nu in _descending_lists(max_crossings - smu, 2, 1):
            if (len(mu) + len(nu)) % 2 != 0 or len(mu) + len(nu) < 2:
                continue
            snu = sum(nu)
            for alpha in _descending_lists(max_crossings - smu - snu, 1, 2):
                sa = 2 * sum(alpha)
                for beta in _descending_lists(max_crossings - smu - snu - sa, 1, 2):
                    found.append(Type3Grouping(mu=mu, nu=nu, alpha=alpha, beta=beta))
    found.sort(key=lambda g: (g.crossings, g.canonical_key()))
    yield from found
