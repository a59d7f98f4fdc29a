"""Exact sparse arithmetic in commutative algebras whose generators are nilpotent or idempotent.

An algebra is described by a :class:`Signature`: one rewrite rule per generator,
either nilpotent of some index k (the generator's k-th power is zero) or
idempotent (the generator squares to itself).  Mixed signatures cover tensor
products such as "n zeon generators times m idempotent generators" with a single
flat id space.  Elements are immutable sparse sums of monomials with exact
integer or rational coefficients; all operations are pure functions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Union

from .errors import ContextError

Coeff = Union[int, Fraction]

# A canonical monomial: ((generator_id, exponent), ...) sorted by generator id.
# The empty tuple is the unit.  Idempotent generators always carry exponent 1;
# a nilpotent generator of index k carries an exponent in [1, k-1].
Monomial = tuple
UNIT: Monomial = ()


@dataclass(frozen=True)
class GeneratorRule:
    """Rewrite rule for one generator: nilpotent of a given index, or idempotent."""

    nilpotent_index: int | None  # None marks an idempotent generator

    def __post_init__(self):
        if self.nilpotent_index is not None and self.nilpotent_index < 2:
            raise ValueError(f"nilpotent index must be >= 2, got {self.nilpotent_index}")

    @classmethod
    def nilpotent(cls, index: int = 2) -> "GeneratorRule":
        return cls(index)

    @classmethod
    def idempotent(cls) -> "GeneratorRule":
        return cls(None)

    @property
    def is_idempotent(self) -> bool:
        return self.nilpotent_index is None


class Signature:
    """Ordered generator rules defining one algebra context.

    Generator ids are dense (0..G-1) and stable.  Tensor products are formed by
    concatenation (``sig_a + sig_b``); the combined id space is partitioned
    between the factors.  Two signatures are equal when their rules agree;
    display names are cosmetic and kept per generator as (symbol, subscript)
    for deterministic rendering.
    """

    __slots__ = ("rules", "names", "_caps")

    def __init__(self, rules: Iterable[GeneratorRule], names=None):
        self.rules = tuple(rules)
        for r in self.rules:
            if not isinstance(r, GeneratorRule):
                raise TypeError(f"expected GeneratorRule, got {r!r}")
        if names is None:
            names = tuple(self._default_name(r, i) for i, r in enumerate(self.rules))
        else:
            names = tuple((str(s), int(k)) for s, k in names)
            if len(names) != len(self.rules):
                raise ValueError("one display name required per generator")
        self.names = names
        # 0 encodes "idempotent" in the hot multiplication path
        self._caps = tuple(0 if r.is_idempotent else r.nilpotent_index for r in self.rules)

    @staticmethod
    def _default_name(rule: GeneratorRule, i: int):
        if rule.is_idempotent:
            return ("ε", i + 1)
        return ("ζ", i + 1) if rule.nilpotent_index == 2 else ("ν", i + 1)

    @classmethod
    def zeons(cls, n: int, symbol: str = "ζ") -> "Signature":
        """n generators that square to zero."""
        return cls([GeneratorRule.nilpotent(2)] * n, [(symbol, i + 1) for i in range(n)])

    @classmethod
    def generalized_zeons(cls, indices: Iterable[int], symbol: str = "ν") -> "Signature":
        """One nilpotent generator per entry, of that nilpotency index."""
        rules = [GeneratorRule.nilpotent(k) for k in indices]
        return cls(rules, [(symbol, i + 1) for i in range(len(rules))])

    @classmethod
    def idempotents(cls, n: int, symbol: str = "ε") -> "Signature":
        """n generators that square to themselves."""
        return cls([GeneratorRule.idempotent()] * n, [(symbol, i + 1) for i in range(n)])

    def __add__(self, other: "Signature") -> "Signature":
        if not isinstance(other, Signature):
            return NotImplemented
        return Signature(self.rules + other.rules, self.names + other.names)

    def __len__(self) -> int:
        return len(self.rules)

    def __eq__(self, other) -> bool:
        return isinstance(other, Signature) and self.rules == other.rules

    def __hash__(self) -> int:
        return hash(self.rules)

    def __repr__(self) -> str:
        kinds = ",".join("I" if r.is_idempotent else str(r.nilpotent_index) for r in self.rules)
        return f"Signature[{kinds}]"

    def gen(self, gid: int) -> "Element":
        """The generator with id ``gid`` as an element."""
        return Element.blade(self, [gid])

    def one(self) -> "Element":
        return Element.scalar(self, 1)

    def zero(self) -> "Element":
        return Element.scalar(self, 0)

    def render_monomial(self, monomial: Monomial) -> str:
        """Deterministic text for one monomial, multi-index style (e.g. ζ{1,2}ε3)."""
        if not monomial:
            return ""
        parts: list[str] = []
        run_symbol = None
        run_subs: list[int] = []

        def flush():
            if not run_subs:
                return
            if len(run_subs) == 1:
                parts.append(f"{run_symbol}{run_subs[0]}")
            else:
                parts.append(f"{run_symbol}{{{','.join(map(str, run_subs))}}}")

        for gid, exp in monomial:
            symbol, sub = self.names[gid]
            if exp == 1:
                if symbol != run_symbol:
                    flush()
                    run_symbol, run_subs = symbol, []
                run_subs.append(sub)
            else:
                flush()
                run_symbol, run_subs = None, []
                parts.append(f"{symbol}{sub}^{exp}")
        flush()
        return "".join(parts)


def _merge_monomials(caps, ma: Monomial, mb: Monomial):
    """Product of two canonical monomials, or None when a nilpotent power saturates."""
    if not ma:
        return mb
    if not mb:
        return ma
    out = []
    ia = ib = 0
    la, lb = len(ma), len(mb)
    while ia < la and ib < lb:
        pa = ma[ia]
        pb = mb[ib]
        if pa[0] < pb[0]:
            out.append(pa)
            ia += 1
        elif pb[0] < pa[0]:
            out.append(pb)
            ib += 1
        else:
            cap = caps[pa[0]]
            if cap:
                e = pa[1] + pb[1]
                if e >= cap:
                    return None
                out.append((pa[0], e))
            else:
                out.append((pa[0], 1))
            ia += 1
            ib += 1
    out.extend(ma[ia:])
    out.extend(mb[ib:])
    return tuple(out)


class Element:
    """An immutable sparse sum of monomials with exact coefficients.

    Stored terms never include zero coefficients and every monomial is canonical
    for the signature, so equality is plain dict equality.  Arithmetic accepts
    ints and Fractions on either side and lifts them to scalar elements.
    """

    __slots__ = ("signature", "_terms")

    def __init__(self, signature: Signature, terms=(), *, _raw: bool = False):
        self.signature = signature
        if _raw:
            self._terms = terms
            return
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Monomial, Coeff] = {}
        for monomial, coeff in items:
            m = self._canonical(signature, monomial)
            if m is None or coeff == 0:
                continue
            c = acc.get(m)
            c = coeff if c is None else c + coeff
            if c == 0:
                acc.pop(m, None)
            else:
                acc[m] = c
        self._terms = acc

    @staticmethod
    def _canonical(signature: Signature, monomial) -> Monomial | None:
        caps = signature._caps
        exps: dict[int, int] = {}
        for gid, exp in monomial:
            if not 0 <= gid < len(caps):
                raise ValueError(f"generator id {gid} out of range")
            if exp < 1:
                raise ValueError(f"exponent must be >= 1, got {exp}")
            exps[gid] = exps.get(gid, 0) + exp
        out = []
        for gid in sorted(exps):
            cap = caps[gid]
            if cap:
                if exps[gid] >= cap:
                    return None
                out.append((gid, exps[gid]))
            else:
                out.append((gid, 1))
        return tuple(out)

    # -- constructors ---------------------------------------------------

    @classmethod
    def scalar(cls, signature: Signature, value: Coeff) -> "Element":
        return cls(signature, {} if value == 0 else {UNIT: value}, _raw=True)

    @classmethod
    def blade(cls, signature: Signature, gids: Iterable[int], coeff: Coeff = 1) -> "Element":
        """coeff times the product of the given generators (repeats accumulate)."""
        return cls(signature, [(tuple((g, 1) for g in gids), coeff)])

    # -- views -----------------------------------------------------------

    @property
    def terms(self) -> Mapping[Monomial, Coeff]:
        return MappingProxyType(self._terms)

    def sorted_terms(self) -> list[tuple[Monomial, Coeff]]:
        """Terms in the deterministic rendering order (grade, then exponent vector)."""
        return sorted(self._terms.items(), key=lambda t: (len(t[0]), t[0]))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, Element):
            return self.signature == other.signature and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == Element.scalar(self.signature, other)._terms
        return NotImplemented

    __hash__ = None

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Element):
            if self.signature != other.signature:
                raise ContextError("elements belong to different signatures")
            return other
        if isinstance(other, (int, Fraction)):
            return Element.scalar(self.signature, other)
        return None

    def __add__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        acc = dict(self._terms)
        for m, c in rhs._terms.items():
            s = acc.get(m, 0) + c
            if s == 0:
                acc.pop(m, None)
            else:
                acc[m] = s
        return Element(self.signature, acc, _raw=True)

    __radd__ = __add__

    def __neg__(self):
        return Element(self.signature, {m: -c for m, c in self._terms.items()}, _raw=True)

    def __sub__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return rhs + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return Element(self.signature, {}, _raw=True)
            return Element(
                self.signature, {m: c * other for m, c in self._terms.items()}, _raw=True
            )
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        caps = self.signature._caps
        acc: dict[Monomial, Coeff] = {}
        for ma, ca in self._terms.items():
            for mb, cb in rhs._terms.items():
                m = _merge_monomials(caps, ma, mb)
                if m is None:
                    continue
                c = acc.get(m)
                acc[m] = ca * cb if c is None else c + ca * cb
        if any(c == 0 for c in acc.values()):
            acc = {m: c for m, c in acc.items() if c != 0}
        return Element(self.signature, acc, _raw=True)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Element":
        # Iterated products: nilpotent cancellation keeps intermediates small,
        # and a vanished partial product short-circuits the rest.
        if not isinstance(k, int) or k < 0:
            raise ValueError(f"exponent must be a non-negative integer, got {k!r}")
        out = Element.scalar(self.signature, 1)
        for _ in range(k):
            out = out * self
            if not out:
                break
        return out

    # -- structure queries -------------------------------------------------

    def scalar_part(self) -> Coeff:
        return self._terms.get(UNIT, 0)

    def dual_part(self) -> "Element":
        if UNIT not in self._terms:
            return self
        acc = dict(self._terms)
        del acc[UNIT]
        return Element(self.signature, acc, _raw=True)

    def grade_part(self, k: int) -> "Element":
        """Terms whose monomial involves exactly k distinct generators."""
        return Element(
            self.signature, {m: c for m, c in self._terms.items() if len(m) == k}, _raw=True
        )

    def scalar_sum(self) -> Coeff:
        return sum(self._terms.values())

    def min_grade(self) -> int:
        """Least generator count among nonzero terms; 0 for the zero element."""
        if not self._terms:
            return 0
        return min(len(m) for m in self._terms)

    # -- rendering ----------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for m, c in self.sorted_terms():
            body = self.signature.render_monomial(m)
            mag = -c if c < 0 else c
            if not body:
                text = str(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{mag}·{body}"
            if not pieces:
                pieces.append(f"-{text}" if c < 0 else text)
            else:
                pieces.append(f"- {text}" if c < 0 else f"+ {text}")
        return " ".join(pieces)

    __repr__ = __str__


def monomial_ids(monomial: Monomial) -> tuple[int, ...]:
    """Distinct generator ids present in a monomial."""
    return tuple(g for g, _ in monomial)


def nilpotency_index(u: Element, cap: int) -> int | None:
    """Least k <= cap with u**k == 0, or None if no power up to cap vanishes."""
    if cap < 1:
        raise ValueError("cap must be >= 1")
    p = u
    for k in range(1, cap + 1):
        if not p:
            return k
        p = p * u
    return None


def annihilates(blade_gids: Iterable[int], u: Element) -> bool:
    """True when the square-free blade on the given generators multiplies u to zero.

    Only index-2 nilpotent generators are admitted; anything else cannot form a
    square-free annihilator blade in the intended sense.
    """
    gids = tuple(blade_gids)
    sig = u.signature
    for g in gids:
        if not 0 <= g < len(sig):
            raise ValueError(f"generator id {g} out of range")
        if sig._caps[g] != 2:
            raise ValueError("annihilator blades must use index-2 nilpotent generators")
    if len(set(gids)) != len(gids):
        raise ValueError("annihilator blades must be square-free")
    return not Element.blade(sig, gids) * u
