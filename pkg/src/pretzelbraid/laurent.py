"""Exact arithmetic for integer Laurent polynomials in the skein variables z and a.

HOMFLY-PT values live in Z[z, z^-1, a, a^-1].  A polynomial is stored sparsely
as a map from (z_exp, a_exp) to its integer coefficient, with zero coefficients
pruned, so two values are equal exactly when their term maps are equal.  Python
integers keep coefficients exact at any size; skein trees multiply coefficients
and must never overflow.

The one-variable companion ``ZPoly`` holds the z-polynomials attached to the
extreme a-powers (the coefficient of a^E and a^e) and the Fibonacci-like
sequence used by the 2-strand torus closed forms.

Text form: terms are emitted sorted by (a_exp, z_exp), both ascending, joined
by " + ".  A term is ``<int>*z^<int>*a^<int>``; a constant term is emitted as
the bare integer, and the zero polynomial as ``"0"``.  This order is fixed so
that serialized polynomials are stable memo/report keys.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator


class LaurentParseError(ValueError):
    """Malformed polynomial text; ``pos`` is the character offset."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


def _pruned(terms: dict) -> dict:
    return {k: c for k, c in terms.items() if c != 0}


class ZPoly:
    """Laurent polynomial in z alone, stored as {z_exp: coeff}."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[int, int] | None = None):
        self.terms = _pruned(terms or {})

    @classmethod
    def zero(cls) -> "ZPoly":
        return cls()

    @classmethod
    def one(cls) -> "ZPoly":
        return cls({0: 1})

    @classmethod
    def monomial(cls, coeff: int, exp: int) -> "ZPoly":
        return cls({exp: coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "ZPoly") -> "ZPoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return ZPoly(out)

    def __mul__(self, other: "ZPoly") -> "ZPoly":
        out: dict[int, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                k = e1 + e2
                out[k] = out.get(k, 0) + c1 * c2
        return ZPoly(out)

    def __neg__(self) -> "ZPoly":
        return ZPoly({e: -c for e, c in self.terms.items()})

    def degree(self) -> int:
        """Highest z-exponent; raises on the zero polynomial."""
        if not self.terms:
            raise ValueError("zero polynomial has no degree")
        return max(self.terms)

    def leading(self) -> tuple[int, int]:
        """(coeff, exp) of the highest-degree term."""
        e = self.degree()
        return self.terms[e], e

    def coeffs_all_nonneg(self) -> bool:
        return all(c > 0 for c in self.terms.values())

    def coeffs_all_nonpos(self) -> bool:
        return all(c < 0 for c in self.terms.values())

    def __eq__(self, other) -> bool:
        return isinstance(other, ZPoly) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for e in sorted(self.terms):
            c = self.terms[e]
            bits.append(f"{c}*z^{e}" if e != 0 else str(c))
        return " + ".join(bits)


@dataclass(frozen=True)
class AProfile:
    """Extreme a-degrees of a polynomial and the attached z-polynomials."""

    E: int
    e: int
    p_h: ZPoly
    p_l: ZPoly


class LaurentPoly2:
    """Integer Laurent polynomial in z and a.

    >>> p = LaurentPoly2.term(1, 1, -1) + LaurentPoly2.term(1, -1, -1)
    >>> (p + LaurentPoly2.term(-1, -1, -3)).serialize()
    '-1*z^-1*a^-3 + 1*z^-1*a^-1 + 1*z^1*a^-1'
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict[tuple[int, int], int] | None = None):
        self.terms = _pruned(terms or {})

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def zero(cls) -> "LaurentPoly2":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly2":
        return cls({(0, 0): 1})

    @classmethod
    def term(cls, coeff: int, z_exp: int = 0, a_exp: int = 0) -> "LaurentPoly2":
        return cls({(z_exp, a_exp): coeff})

    @classmethod
    def from_z(cls, zp: ZPoly, a_exp: int = 0) -> "LaurentPoly2":
        return cls({(e, a_exp): c for e, c in zp.terms.items()})

    # ------------------------------------------------------------------
    # ring operations

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "LaurentPoly2") -> "LaurentPoly2":
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return LaurentPoly2(out)

    def __sub__(self, other: "LaurentPoly2") -> "LaurentPoly2":
        return self + (-other)

    def __neg__(self) -> "LaurentPoly2":
        return LaurentPoly2({k: -c for k, c in self.terms.items()})

    def __mul__(self, other: "LaurentPoly2") -> "LaurentPoly2":
        out: dict[tuple[int, int], int] = {}
        for (z1, a1), c1 in self.terms.items():
            for (z2, a2), c2 in other.terms.items():
                k = (z1 + z2, a1 + a2)
                out[k] = out.get(k, 0) + c1 * c2
        return LaurentPoly2(out)

    def mul_term(self, coeff: int, z_exp: int = 0, a_exp: int = 0) -> "LaurentPoly2":
        """Multiply by a single monomial (the skein coefficients a^±2, a^±1 z)."""
        return LaurentPoly2(
            {(z + z_exp, a + a_exp): c * coeff for (z, a), c in self.terms.items()}
        )

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentPoly2) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        return f"LaurentPoly2({self.serialize()!r})"

    # ------------------------------------------------------------------
    # degree structure in a

    def a_profile(self) -> AProfile:
        """Extreme a-degrees E, e with their z-polynomial coefficients.

        Raises ValueError on the zero polynomial.
        """
        if not self.terms:
            raise ValueError("empty polynomial has no profile")
        hi = max(a for _, a in self.terms)
        lo = min(a for _, a in self.terms)
        p_h = ZPoly({z: c for (z, a), c in self.terms.items() if a == hi})
        p_l = ZPoly({z: c for (z, a), c in self.terms.items() if a == lo})
        return AProfile(E=hi, e=lo, p_h=p_h, p_l=p_l)

    def a_exponent_parities(self) -> set[int]:
        return {a % 2 for _, a in self.terms}

    def subst_a_neg_inv(self) -> "LaurentPoly2":
        """Substitute a -> -a^-1 (the mirror-image rule for HOMFLY-PT)."""
        out: dict[tuple[int, int], int] = {}
        for (z, a), c in self.terms.items():
            k = (z, -a)
            out[k] = out.get(k, 0) + c * (-1) ** (a & 1)
        return LaurentPoly2(out)

    # ------------------------------------------------------------------
    # serialization

    def _sorted_items(self) -> list[tuple[tuple[int, int], int]]:
        # canonical order: a_exp ascending, then z_exp ascending
        return sorted(self.terms.items(), key=lambda kv: (kv[0][1], kv[0][0]))

    def serialize(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for (z, a), c in self._sorted_items():
            if z == 0 and a == 0:
                bits.append(str(c))
            else:
                bits.append(f"{c}*z^{z}*a^{a}")
        return " + ".join(bits)

    _TERM_RE = re.compile(r"(-?\d+)(?:\*z\^(-?\d+)\*a\^(-?\d+))?$")

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly2":
        """Inverse of serialize; accepts any term order, rejects junk."""
        stripped = text.strip()
        if not stripped:
            raise LaurentParseError("empty polynomial text", 0)
        if stripped == "0":
            return cls.zero()
        out: dict[tuple[int, int], int] = {}
        pos = 0
        for chunk in stripped.split(" + "):
            m = cls._TERM_RE.match(chunk.strip())
            if not m:
                raise LaurentParseError(f"bad term {chunk.strip()!r}", text.find(chunk, pos))
            coeff = int(m.group(1))
            z = int(m.group(2)) if m.group(2) is not None else 0
            a = int(m.group(3)) if m.group(3) is not None else 0
            out[(z, a)] = out.get((z, a), 0) + coeff
            pos = text.find(chunk, pos) + len(chunk)
        return cls(out)

    def to_triples(self) -> list[list[int]]:
        """JSON form: sorted [coeff, z_exp, a_exp] triples."""
        return [[c, z, a] for (z, a), c in self._sorted_items()]

    @classmethod
    def from_triples(cls, triples: Iterable[Iterable[int]]) -> "LaurentPoly2":
        out: dict[tuple[int, int], int] = {}
        for c, z, a in triples:
            out[(int(z), int(a))] = out.get((int(z), int(a)), 0) + int(c)
        return cls(out)


ZERO = LaurentPoly2.zero()
ONE = LaurentPoly2.one()
