"""Loading and saving the constants file.

The file is JSON.  Rationals are strings ``"num/den"`` in lowest terms,
polynomials are lists of ``{"power": e, "coeffs": {...}}`` factors keyed by
exponent, written exactly as printed (factored, highest exponent first).
Coefficients of the one-parameter family are lists of ``[a_exponent,
rational]`` terms; the discriminant is stored as a prime-power constant times
factors given by ``[a_exponent, t_exponent, rational]`` terms.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Any

from .exact import BiPoly, RatFunc, UniPoly
from .perm import CycleType, Permutation

_RATIONAL = re.compile(r"-?\d+(/\d+)?")


class ConstantsError(ValueError):
    """Parse failure, carrying the offending field path and line number."""

    def __init__(self, field: str, message: str, line: int | None = None):
        self.field, self.line = field, line
        where = f"line {line}, " if line else ""
        super().__init__(f"{where}field {field}: {message}")


def parse_rational(text: str) -> Fraction:
    if not isinstance(text, str) or not _RATIONAL.fullmatch(text):
        raise ValueError(f"not a rational literal: {text!r}")
    value = Fraction(text)
    if format_rational(value) != text:
        raise ValueError(f"rational not in lowest terms: {text!r}")
    return value


def format_rational(c: Fraction) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


@dataclass
class FactoredPoly:
    """Product of powers of univariate factors (coefficients in Q or Q[a])."""

    factors: list[tuple[dict[int, Any], int]]

    def expand_uni(self) -> UniPoly:
        out = UniPoly([1])
        for coeffs, power in self.factors:
            deg = max(coeffs)
            out = out * UniPoly([coeffs.get(k, 0) for k in range(deg + 1)]) ** power
        return out

    def expand_bi(self) -> BiPoly:
        out = BiPoly([1])
        for coeffs, power in self.factors:
            deg = max(coeffs)
            xs = []
            for k in range(deg + 1):
                terms = coeffs.get(k, [])
                adeg = max((e for e, _ in terms), default=0)
                poly = [Fraction(0)] * (adeg + 1)
                for e, c in terms:
                    poly[e] += c
                xs.append(RatFunc(UniPoly(poly)))
            out = out * BiPoly(xs) ** power
        return out

    def factor_polys_uni(self) -> list[tuple[UniPoly, int]]:
        return [(UniPoly([c.get(k, 0) for k in range(max(c) + 1)]), e)
                for c, e in self.factors]


@dataclass
class DeltaFormula:
    """Printed discriminant: prod(prime^exp) * prod(factor^power)."""

    prime_powers: dict[int, int]
    factors: list[tuple[list[tuple[int, int, Fraction]], int]]

    def constant(self) -> Fraction:
        out = Fraction(1)
        for prime, e in self.prime_powers.items():
            out *= Fraction(prime) ** e
        return out

    def exponents(self) -> list[int]:
        return list(self.prime_powers.values()) + [e for _, e in self.factors]

    def specialize_factors(self, a0) -> tuple[Fraction, list[tuple[UniPoly, int]]]:
        """At ``a = a0``: the constant (with t-free factors folded in) and
        the t-dependent factors as polynomials in t."""
        a0 = Fraction(a0)
        const = self.constant()
        polys = []
        for terms, power in self.factors:
            tdeg = max(te for _, te, _ in terms)
            coeffs = [Fraction(0)] * (tdeg + 1)
            for ae, te, c in terms:
                coeffs[te] += c * a0 ** ae
            poly = UniPoly(coeffs)
            if poly.degree == 0:
                const *= poly.coeffs[0] ** power
            else:
                polys.append((poly, power))
        return const, polys

    def at(self, a0) -> UniPoly:
        const, polys = self.specialize_factors(a0)
        out = UniPoly([const])
        for poly, power in polys:
            out = out * poly ** power
        return out


@dataclass
class Constants:
    raw: dict
    x: Permutation
    z: Permutation
    composition: str
    belyi_p: FactoredPoly
    belyi_q: FactoredPoly
    belyi_scale: Fraction
    over_one_multiplier: Fraction
    family_p: FactoredPoly
    family_q: FactoredPoly
    delta: DeltaFormula
    claimed: dict

    @property
    def y(self) -> Permutation:
        return ~self.x * ~self.z

    def claimed_type(self, *path: str) -> CycleType:
        node: Any = self.claimed
        for key in path:
            node = node[key]
        return CycleType.parse(node)

    def dumps(self) -> str:
        return dumps(self.raw)


_WIDTH = 200


def _format(node, indent: int) -> str:
    flat = json.dumps(node, ensure_ascii=False)
    if not isinstance(node, (dict, list)) or len(flat) + indent <= _WIDTH or not node:
        return flat
    pad = " " * (indent + 2)
    if isinstance(node, dict):
        items = [f"{pad}{json.dumps(k)}: {_format(v, indent + 2)}" for k, v in node.items()]
        return "{\n" + ",\n".join(items) + "\n" + " " * indent + "}"
    items = [pad + _format(v, indent + 2) for v in node]
    return "[\n" + ",\n".join(items) + "\n" + " " * indent + "]"


def dumps(raw: dict) -> str:
    """Canonical text: a container stays on one line when it fits in the
    width budget, otherwise one entry per line."""
    return _format(raw, 0) + "\n"


def _line_of(text: str, key: str) -> int | None:
    m = re.search(r'"%s"\s*:' % re.escape(key), text)
    return text.count("\n", 0, m.start()) + 1 if m else None


def _parse_factored(node, field: str, family: bool) -> FactoredPoly:
    if not isinstance(node, list) or not node:
        raise ValueError("expected a nonempty list of factors")
    factors = []
    for i, fac in enumerate(node):
        power = fac["power"]
        if not isinstance(power, int) or power < 1:
            raise ValueError(f"factor {i}: bad power {power!r}")
        coeffs = {}
        for k, v in fac["coeffs"].items():
            if family:
                coeffs[int(k)] = [(int(e), parse_rational(c)) for e, c in v]
            else:
                coeffs[int(k)] = parse_rational(v)
        factors.append((coeffs, power))
    return FactoredPoly(factors)


def _parse_delta(node) -> DeltaFormula:
    pp = {int(k): int(v) for k, v in node["constant"].items()}
    factors = []
    for fac in node["factors"]:
        terms = [(int(ae), int(te), parse_rational(c)) for ae, te, c in fac["terms"]]
        factors.append((terms, int(fac["power"])))
    return DeltaFormula(pp, factors)


def parse(text: str) -> Constants:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConstantsError("<document>", exc.msg, exc.lineno) from exc

    def field(path: str, fn):
        keys = path.split(".")
        try:
            node = raw
            for k in keys:
                node = node[k]
            return fn(node)
        except (KeyError, TypeError, ValueError, IndexError, AttributeError) as exc:
            raise ConstantsError(path, str(exc) or type(exc).__name__,
                                 _line_of(text, keys[-1])) from exc

    degree = field("triple.degree", int)
    composition = field("conventions.composition", str)
    if composition != "left-first":
        raise ConstantsError("conventions.composition",
                             f"unsupported convention {composition!r}",
                             _line_of(text, "composition"))
    return Constants(
        raw=raw,
        x=field("triple.x", lambda s: Permutation.from_cycles(s, degree)),
        z=field("triple.z", lambda s: Permutation.from_cycles(s, degree)),
        composition=composition,
        belyi_p=field("belyi.p", lambda n: _parse_factored(n, "belyi.p", False)),
        belyi_q=field("belyi.q", lambda n: _parse_factored(n, "belyi.q", False)),
        belyi_scale=field("belyi.scale", parse_rational),
        over_one_multiplier=field("belyi.over_one_multiplier", parse_rational),
        family_p=field("family.p", lambda n: _parse_factored(n, "family.p", True)),
        family_q=field("family.q", lambda n: _parse_factored(n, "family.q", True)),
        delta=field("delta", _parse_delta),
        claimed=field("claimed", dict),
    )


def default_path() -> Path:
    return Path(str(resources.files("psp62") / "data" / "constants.json"))


def load(path: str | Path | None = None) -> Constants:
    path = Path(path) if path else default_path()
    return parse(path.read_text(encoding="utf-8"))
