"""Memoized skein-recursion engine for HOMFLY-PT polynomials of pretzel links.

The engine works on abstract states: a multiset of parallel strips and a
multiset of antiparallel strips (signed crossing counts).  Mutation invariance
makes the strip order irrelevant, so the sorted multisets are the memo key.

Skein relations used, with H(unknot) = 1:

    H(D+) = a^-2 H(D-) + a^-1 z H(D0)
    H(D-) = a^2  H(D+) - a    z H(D0)

Resolution rules, each one a diagram fact about the cyclic closure:

* switching a crossing in a strip cancels an adjacent pair, so the strip
  count moves two steps toward zero;
* a strip that reaches zero crossings turns into two vertical transit
  strands, which cut the cycle open: the link becomes the connected sum of
  the 2-braid closures of the remaining strips (T_p for parallel strips,
  T_o for antiparallel ones, a trivial factor for lone crossings);
* the oriented smoothing of an antiparallel crossing caps its strip off
  (the leftover crossings are kinks), shortening the cycle by one strip;
  when only one strip would remain, the capped closure is the unknot;
* the oriented smoothing of a parallel crossing just shortens that strip;
* opposite lone parallel strips cancel by a Reidemeister II move;
* the empty cycle is the two-component unlink, whose value
  delta = (a - a^-1) z^-1 is forced by the skein relation on a kinked
  unknot and is verified at startup against the Hopf-link closed form.

Single-strip states denote 2-braid annular closures and are evaluated by the
same recursion down to lone crossings, never by the closed-form module, so
the closed forms stay an independent cross-check.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .laurent import ONE, AProfile, LaurentPoly2, ZPoly
from .pretzel import (
    TWO_COMPONENT_UNLINK,
    LinkType,
    RawPretzel,
    Type3Grouping,
    classify,
    standardize,
)


class EngineError(ValueError):
    pass


# ---------------------------------------------------------------------------
# closed forms (used by callers and tests; the recursion never consults them)

_FIB: dict[int, ZPoly] = {2: ZPoly.monomial(1, -1), 3: ZPoly.one()}


def fib_f(n: int) -> ZPoly:
    """Fibonacci-like z-sequence: f_2 = z^-1, f_3 = 1, f_{n+2} = z f_{n+1} + f_n.

    deg(f_n) = n - 3 for n >= 2.
    """
    if n < 2:
        raise EngineError(f"f_n defined for n >= 2, got {n}")
    if n not in _FIB:
        z = ZPoly.monomial(1, 1)
        top = max(_FIB)
        for k in range(top + 1, n + 1):
            _FIB[k] = z * _FIB[k - 1] + _FIB[k - 2]
    return _FIB[n]


def torus_parallel(m: int) -> LaurentPoly2:
    """H of the 2-strand torus link T_p(m, 2) with parallel strands."""
    if abs(m) <= 1:
        raise EngineError("|m| >= 2 required; |m| = 1 is the unknot")
    n = abs(m)
    if m > 0:
        return LaurentPoly2.from_z(fib_f(n + 2), 1 - n) - LaurentPoly2.from_z(fib_f(n), -1 - n)
    p = LaurentPoly2.from_z(fib_f(n), n + 1) - LaurentPoly2.from_z(fib_f(n + 2), n - 1)
    return p if n % 2 == 0 else -p


def torus_antiparallel(m: int) -> LaurentPoly2:
    """H of the 2-strand torus link T_o(m, 2) with antiparallel strands."""
    if m % 2 != 0 or abs(m) < 2:
        raise EngineError(f"T_o needs an even crossing count with |m| >= 2, got {m}")
    k = abs(m) // 2
    t = LaurentPoly2.term
    if m > 0:
        out = t(1, 1, -2 * k + 1) + t(1, -1, -2 * k + 1) + t(-1, -1, -2 * k - 1)
        for j in range(1, k):
            out = out + t(1, 1, -2 * j + 1)
        return out
    out = t(-1, 1, 2 * k - 1) + t(-1, -1, 2 * k - 1) + t(1, -1, 2 * k + 1)
    for j in range(1, k):
        out = out + t(-1, 1, 2 * j - 1)
    return out


def unlink_delta() -> LaurentPoly2:
    """H of the two-component unlink: (a - a^-1) z^-1.

    Solving H(D+) = a^-2 H(D-) + a^-1 z H(D0) with D+ = D- = a kinked unknot
    and D0 the split two-unlink gives 1 = a^-2 + a^-1 z H, hence this value.
    """
    return LaurentPoly2.term(1, -1, 1) + LaurentPoly2.term(-1, -1, -1)


DELTA = unlink_delta()


# ---------------------------------------------------------------------------
# states


@dataclass(frozen=True)
class PretzelState:
    """Skein-recursion state: strip multisets plus an accumulated factor.

    ``parallel`` holds signed crossing counts of parallel-oriented strips,
    ``antiparallel`` the (even) counts of antiparallel ones.  The factor
    multiplies the final value and is not part of the memo key.
    """

    parallel: tuple[int, ...]
    antiparallel: tuple[int, ...]
    factor: LaurentPoly2 = field(default_factory=lambda: ONE)

    @classmethod
    def make(
        cls,
        parallel: Iterable[int] = (),
        antiparallel: Iterable[int] = (),
        factor: LaurentPoly2 = ONE,
    ) -> "PretzelState":
        p = sorted(parallel)
        a = sorted(antiparallel)
        if any(e == 0 for e in p + a):
            raise EngineError("zero strips are not part of a state")
        if len(p) + len(a) == 1 and a and abs(a[0]) % 2 == 1:
            # a lone odd strip is the torus knot T(m,2); orientation class is
            # immaterial for a knot, so fold it into the parallel slot
            p, a = [a[0]], []
        if len(p) + len(a) > 1 and len(p) % 2 == 1:
            # every closed pretzel orientation flips direction at each
            # parallel strip, so their number around the cycle is even
            raise EngineError(f"odd number of parallel strips is not closable: {p}")
        return cls(tuple(p), tuple(a), factor)

    @classmethod
    def from_grouping(cls, g: Type3Grouping) -> "PretzelState":
        return cls.make(g.parallel_strips(), g.antiparallel_strips())

    @classmethod
    def from_link_type(cls, lt: LinkType) -> "PretzelState":
        return cls.make(lt.parallel, lt.antiparallel)

    def canonical_key(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return (self.parallel, self.antiparallel)

    def strip_count(self) -> int:
        return len(self.parallel) + len(self.antiparallel)

    def crossings(self) -> int:
        return sum(abs(e) for e in self.parallel) + sum(abs(e) for e in self.antiparallel)

    def mirror(self) -> "PretzelState":
        return PretzelState.make(
            [-e for e in self.parallel], [-e for e in self.antiparallel], self.factor
        )


def state_for(obj) -> PretzelState:
    """Coerce groupings, raw diagrams, or the unlink sentinel into a state."""
    if isinstance(obj, PretzelState):
        return obj
    if isinstance(obj, Type3Grouping):
        return PretzelState.from_grouping(obj)
    if obj is TWO_COMPONENT_UNLINK:
        return PretzelState((), ())
    if isinstance(obj, RawPretzel):
        std = standardize(obj)
        if std is TWO_COMPONENT_UNLINK:
            return PretzelState((), ())
        return PretzelState.from_link_type(classify(std))
    raise EngineError(f"cannot build a pretzel state from {obj!r}")


# ---------------------------------------------------------------------------
# memo cache

_ENTRY_BASE_BYTES = 200
_ENTRY_TERM_BYTES = 100


class EngineCache:
    """Insertion-ordered LRU memo for state values.

    ``max_bytes`` caps the estimated memory footprint; ``None`` means
    unbounded, 0 disables storage entirely.  Shared use across workers is
    safe because entries are pure functions of their key.
    """

    def __init__(self, max_bytes: int | None = None):
        self.max_bytes = max_bytes
        self._data: dict[tuple, LaurentPoly2] = {}
        self._bytes = 0
        self.hits = 0
        self.misses = 0
        self.evictions = 0

    @staticmethod
    def _cost(value: LaurentPoly2) -> int:
        return _ENTRY_BASE_BYTES + _ENTRY_TERM_BYTES * len(value.terms)

    def get(self, key: tuple) -> LaurentPoly2 | None:
        got = self._data.get(key)
        if got is None:
            self.misses += 1
            return None
        self.hits += 1
        # refresh LRU position
        del self._data[key]
        self._data[key] = got
        return got

    def put(self, key: tuple, value: LaurentPoly2) -> None:
        if self.max_bytes == 0:
            return
        if key in self._data:
            return
        self._data[key] = value
        self._bytes += self._cost(value)
        if self.max_bytes is None:
            return
        while self._bytes > self.max_bytes and self._data:
            old_key = next(iter(self._data))
            old = self._data.pop(old_key)
            self._bytes -= self._cost(old)
            self.evictions += 1

    def __len__(self) -> int:
        return len(self._data)

    def stats(self) -> dict:
        return {
            "entries": len(self._data),
            "hits": self.hits,
            "misses": self.misses,
            "evictions": self.evictions,
            "approx_bytes": self._bytes,
        }


def _default_cache() -> EngineCache:
    cap = os.environ.get("PRETZEL_CACHE_BYTES")
    return EngineCache(max_bytes=int(cap) if cap else None)


_shared_cache = _default_cache()


def shared_cache() -> EngineCache:
    return _shared_cache


def reset_shared_cache() -> None:
    global _shared_cache
    _shared_cache = _default_cache()


# ---------------------------------------------------------------------------
# the recursion

_A2 = (0, 2)  # exponents (z, a) of the skein coefficients
_AM2 = (0, -2)
_AZ = (1, 1)
_AMZ = (1, -1)


def _single_key(m: int, antiparallel: bool) -> tuple:
    return ((), (m,)) if antiparallel else ((m,), ())


def _eval_single(m: int, antiparallel: bool, cache: EngineCache) -> LaurentPoly2:
    """2-braid annular closure of one strip, by recursion on the twist count."""
    if m == 0:
        return DELTA  # closure of the empty 2-braid: two split circles
    if abs(m) == 1:
        return ONE  # one kink on the unknot
    if antiparallel and m % 2:
        antiparallel = False  # an odd closure is the torus knot T(m,2)
    key = _single_key(m, antiparallel)
    got = cache.get(key)
    if got is not None:
        return got
    if antiparallel:
        # smoothing any antiparallel crossing caps the braid into an unknot
        if m > 0:
            out = _eval_single(m - 2, True, cache).mul_term(1, *_AM2) + ONE.mul_term(1, *_AMZ)
        else:
            out = _eval_single(m + 2, True, cache).mul_term(1, *_A2) - ONE.mul_term(1, *_AZ)
    else:
        if m > 0:
            out = _eval_single(m - 2, False, cache).mul_term(1, *_AM2) + _eval_single(
                m - 1, False, cache
            ).mul_term(1, *_AMZ)
        else:
            out = _eval_single(m + 2, False, cache).mul_term(1, *_A2) - _eval_single(
                m + 1, False, cache
            ).mul_term(1, *_AZ)
    cache.put(key, out)
    return out


def _cut_value(parallel: Sequence[int], antiparallel: Sequence[int], cache: EngineCache) -> LaurentPoly2:
    """Value after a strip reached zero crossings and cut the cycle open.

    The remaining strips close into a connected sum of their own 2-braid
    closures; connected sums multiply.
    """
    out = ONE
    for e in parallel:
        if abs(e) >= 2:
            out = out * _eval_single(e, False, cache)
    for e in antiparallel:
        if abs(e) >= 2:
            out = out * _eval_single(e, True, cache)
    return out


def _without(t: tuple[int, ...], value: int) -> tuple[int, ...]:
    out = list(t)
    out.remove(value)
    return tuple(out)


def _replace(t: tuple[int, ...], old: int, new: int) -> tuple[int, ...]:
    out = list(t)
    out.remove(old)
    out.append(new)
    out.sort()
    return tuple(out)


def _shrunk(p: tuple[int, ...], a: tuple[int, ...], cache: EngineCache) -> LaurentPoly2:
    """Value of a state after the cycle lost strips to an isotopy.

    A single leftover strip sits in a one-strip cycle, whose closure is the
    plat: an unknot whatever the twist count.  The empty cycle is the
    two-component unlink.
    """
    if len(p) + len(a) == 0:
        return DELTA
    if len(p) + len(a) == 1:
        if p:
            raise EngineError("unreachable: lone parallel strip left by an isotopy")
        return ONE
    return _eval_state(p, a, cache)


def _eval_state(p: tuple[int, ...], a: tuple[int, ...], cache: EngineCache) -> LaurentPoly2:
    # Reidemeister II: a lone crossing rides around the cycle on flypes, so
    # opposite lone strips of one class cancel pairwise.
    if (1 in p and -1 in p) or (1 in a and -1 in a):
        while 1 in p and -1 in p:
            p = _without(_without(p, 1), -1)
        while 1 in a and -1 in a:
            a = _without(_without(a, 1), -1)
        return _shrunk(p, a, cache)

    total = len(p) + len(a)
    if total == 0:
        return DELTA
    if total == 1:
        return _eval_single(p[0], False, cache) if p else _eval_single(a[0], True, cache)

    key = (p, a)
    got = cache.get(key)
    if got is not None:
        return got

    big_parallel = [e for e in p if abs(e) >= 2]
    big_anti = [e for e in a if abs(e) >= 2]
    if big_parallel:
        m = max(big_parallel, key=lambda v: (abs(v), v))
        if m > 0:
            switched = (
                _cut_value(_without(p, m), a, cache)
                if m == 2
                else _eval_state(_replace(p, m, m - 2), a, cache)
            )
            out = switched.mul_term(1, *_AM2) + _eval_state(
                _replace(p, m, m - 1), a, cache
            ).mul_term(1, *_AMZ)
        else:
            switched = (
                _cut_value(_without(p, m), a, cache)
                if m == -2
                else _eval_state(_replace(p, m, m + 2), a, cache)
            )
            out = switched.mul_term(1, *_A2) - _eval_state(
                _replace(p, m, m + 1), a, cache
            ).mul_term(1, *_AZ)
    elif big_anti:
        m = max(big_anti, key=lambda v: (abs(v), v))
        rest_a = _without(a, m)
        # the oriented smoothing caps the strip off and shortens the cycle
        smoothed = _shrunk(p, rest_a, cache)
        if m > 0:
            switched = (
                _cut_value(p, rest_a, cache)
                if m == 2
                else _eval_state(p, _replace(a, m, m - 2), cache)
            )
            out = switched.mul_term(1, *_AM2) + smoothed.mul_term(1, *_AMZ)
        else:
            switched = (
                _cut_value(p, rest_a, cache)
                if m == -2
                else _eval_state(p, _replace(a, m, m + 2), cache)
            )
            out = switched.mul_term(1, *_A2) - smoothed.mul_term(1, *_AZ)
    elif p:
        # lone parallel crossings of one sign (mixed signs cancelled above);
        # switching one cancels it against a neighbour, smoothing turns the
        # strip into transit strands that cut the cycle open
        if p[0] > 0:
            out = _shrunk(p[2:], a, cache).mul_term(1, *_AM2) + _cut_value(
                p[1:], a, cache
            ).mul_term(1, *_AMZ)
        else:
            out = _shrunk(p[:-2], a, cache).mul_term(1, *_A2) - _cut_value(
                p[:-1], a, cache
            ).mul_term(1, *_AZ)
    else:
        # lone antiparallel crossings of one sign; switching one cancels it
        # against a neighbour, the oriented smoothing caps it off
        if a[0] > 0:
            out = _shrunk(p, a[2:], cache).mul_term(1, *_AM2) + _shrunk(
                p, a[1:], cache
            ).mul_term(1, *_AMZ)
        else:
            out = _shrunk(p, a[:-2], cache).mul_term(1, *_A2) - _shrunk(
                p, a[:-1], cache
            ).mul_term(1, *_AZ)

    cache.put(key, out)
    return out


_normalization_checked = False


def _check_normalization() -> None:
    """Verify the derived two-unlink value against the Hopf closed form."""
    global _normalization_checked
    if _normalization_checked:
        return
    hopf = DELTA.mul_term(1, *_AM2) + ONE.mul_term(1, *_AMZ)
    if hopf != torus_antiparallel(2):
        raise EngineError(
            "skein normalization check failed: delta does not reproduce the Hopf link"
        )
    _normalization_checked = True


def homfly(state: PretzelState, cache: EngineCache | None = None) -> LaurentPoly2:
    """Exact HOMFLY-PT polynomial of the pretzel state times its factor."""
    _check_normalization()
    if cache is None:
        cache = _shared_cache
    value = _eval_state(state.parallel, state.antiparallel, cache)
    if state.factor != ONE:
        value = value * state.factor
    return value


# ---------------------------------------------------------------------------
# profiles


@dataclass(frozen=True)
class HomflyProfile:
    """Degree data of a HOMFLY-PT value: extreme a-powers and the MFW bound."""

    E: int
    e: int
    span: int
    b0: int
    p_h: ZPoly
    p_l: ZPoly
    p_h0: tuple[int, int]  # leading z-monomial of p_h: (coeff, exp)
    p_l0: tuple[int, int]
    polynomial: LaurentPoly2


def profile_of_polynomial(value: LaurentPoly2) -> HomflyProfile:
    prof: AProfile = value.a_profile()
    if len(value.a_exponent_parities()) != 1:
        raise EngineError("a-exponents of a link polynomial must share one parity")
    span = prof.E - prof.e
    return HomflyProfile(
        E=prof.E,
        e=prof.e,
        span=span,
        b0=span // 2 + 1,
        p_h=prof.p_h,
        p_l=prof.p_l,
        p_h0=prof.p_h.leading(),
        p_l0=prof.p_l.leading(),
        polynomial=value,
    )


def profile(obj, cache: EngineCache | None = None) -> HomflyProfile:
    """Profile of a grouping, raw diagram, state, or the unlink sentinel."""
    return profile_of_polynomial(homfly(state_for(obj), cache))


# ---------------------------------------------------------------------------
# sign classes and connected-sum profiles


@dataclass(frozen=True)
class SignClass:
    """Assertion about a leading z-monomial.

    kind "F": the leading coefficient has the stated sign (membership of the
    set of all-nonnegative or all-nonpositive z-polynomials, up to sign).
    kind "mono": the leading monomial is exactly sign * z**z_exp.
    """

    kind: str  # "F" | "mono"
    sign: int
    z_exp: int | None = None

    def __post_init__(self):
        if self.kind not in ("F", "mono"):
            raise ValueError(f"bad sign-class kind {self.kind!r}")
        if self.sign not in (-1, 1):
            raise ValueError("sign must be +1 or -1")
        if self.kind == "mono" and self.z_exp is None:
            raise ValueError("monomial class needs a z exponent")

    def check(self, zp: ZPoly) -> bool:
        coeff, exp = zp.leading()
        if self.kind == "mono":
            return coeff == self.sign and exp == self.z_exp
        return (coeff > 0) == (self.sign > 0)

    def mirrored(self, parity: int) -> "SignClass":
        """Class of the mirror-image partner, scaled by (-1)**parity."""
        s = self.sign * (-1) ** (parity & 1)
        return SignClass(self.kind, s, self.z_exp)


@dataclass(frozen=True)
class ConnectedSumProfile:
    E: int
    e: int
    sign_class_h: SignClass
    sign_class_l: SignClass


def connected_sum_value(
    parallel_factors: Sequence[int] = (),
    antiparallel_factors: Sequence[int] = (),
    cache: EngineCache | None = None,
) -> LaurentPoly2:
    """Engine value of a connected sum of 2-braid closures."""
    _check_normalization()
    if cache is None:
        cache = _shared_cache
    return _cut_value(tuple(parallel_factors), tuple(antiparallel_factors), cache)


def connected_sum_profile(
    parallel_factors: Sequence[int], antiparallel_factors: Sequence[int]
) -> ConnectedSumProfile:
    """Extreme a-degrees of a connected sum of torus pieces, in closed form.

    Statistics follow the standard diagrams: a T_p piece carries two Seifert
    circles, a T_o(2k, 2) piece the 2k circles of its lone-crossing cycle,
    and each connected-sum band merges one circle.
    """
    par = list(parallel_factors)
    anti = list(antiparallel_factors)
    if any(abs(m) < 2 for m in par):
        raise EngineError("parallel factors need |m| >= 2")
    if any(m % 2 or abs(m) < 2 for m in anti):
        raise EngineError("antiparallel factors must be even with |m| >= 2")
    rho_p = sum(1 for m in par if m > 0)
    rho_m = len(par) - rho_p
    kappa_p = sum(1 for m in anti if m > 0)
    kappa_m = len(anti) - kappa_p
    pieces = len(par) + len(anti)
    c = sum(abs(m) for m in par) + sum(abs(m) for m in anti)
    c_minus = sum(abs(m) for m in par if m < 0) + sum(abs(m) for m in anti if m < 0)
    w = c - 2 * c_minus
    s = 2 * len(par) + sum(abs(m) for m in anti) - (pieces - 1)
    r_plus = sum(m // 2 for m in anti if m > 0) - kappa_p
    r_minus = sum(abs(m) // 2 for m in anti if m < 0) - kappa_m
    E = s - w - 1 - 2 * r_minus
    e = -s - w + 1 + 2 * r_plus

    # cross-check against additivity of the piece degrees
    def piece_degrees(m: int, anti_piece: bool) -> tuple[int, int]:
        if anti_piece:
            return (-1, -m - 1) if m > 0 else (abs(m) + 1, 1)
        return (1 - m, -1 - m) if m > 0 else (abs(m) + 1, abs(m) - 1)

    sums = [piece_degrees(m, False) for m in par] + [piece_degrees(m, True) for m in anti]
    if (sum(x for x, _ in sums), sum(y for _, y in sums)) != (E, e):
        raise EngineError("connected-sum degree bookkeeping is inconsistent")

    if kappa_p == kappa_m == 0:
        cls_h = SignClass("mono", (-1) ** (c_minus & 1), c - rho_p - 3 * rho_m)
        cls_l = SignClass("mono", (-1) ** ((rho_p + rho_m + c_minus) & 1), c - 3 * rho_p - rho_m)
    else:
        cls_h = SignClass("F", (-1) ** (c_minus & 1))
        cls_l = SignClass("F", (-1) ** ((rho_p + rho_m + kappa_p + kappa_m + c_minus) & 1))
    return ConnectedSumProfile(E=E, e=e, sign_class_h=cls_h, sign_class_l=cls_l)
