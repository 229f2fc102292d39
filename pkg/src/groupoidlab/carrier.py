"""Finite coefficient carriers for the two-parameter star product.

A carrier supplies the scalar arithmetic that every shape (scalar, matrix,
polynomial) builds on: reduction to canonical form, addition, multiplication,
scaling by an operation parameter, enumeration in a fixed order, and parsing /
formatting of the canonical textual forms.

Supported carriers:

* ``Modular(n)``           -- integers mod n; values are ints in [0, n).
* ``PureNeutrosophic(n)``  -- {0, I, 2I, ..., (n-1)I} with I*I = I; values are
                              the integer coefficients of I.
* ``MixedNeutrosophic(n)`` -- {a + bI : a, b in Z_n}; values are (a, b) pairs.
                              Products follow from distributivity and I*I = I:
                              (a+bI)(c+dI) = ac + (ad+bc+bd)I.
* ``IntervalOf(inner)``    -- one-endpoint intervals [0, v] over a finite inner
                              carrier; values are inner values. Nesting depth
                              is exactly one and rationals are not allowed
                              inside.
* ``RationalDemo()``       -- exact rationals (``fractions.Fraction``); supports
                              arithmetic only, no enumeration or structure.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterator

Value = Any  # int | tuple[int, int] | Fraction, depending on carrier


class CarrierError(ValueError):
    """Invalid carrier construction, value, or textual form."""


class CannotEnumerate(CarrierError):
    """The carrier is not finitely enumerable."""


def is_prime(m: int) -> bool:
    """Trial-division primality; desk-scale inputs only."""
    if m < 2:
        return False
    if m < 4:
        return True
    if m % 2 == 0:
        return False
    f = 3
    while f * f <= m:
        if m % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class CoprimalityClass:
    """gcd information for a parameter pair, with the gcd rendered as a value."""

    is_unit: bool
    gcd: int
    witness: str  # canonical text of the gcd embedded in the carrier


class Carrier:
    """Base interface; concrete carriers implement the scalar arithmetic."""

    # -- arithmetic -----------------------------------------------------

    def reduce(self, v: Value) -> Value:
        raise NotImplementedError

    def add(self, a: Value, b: Value) -> Value:
        raise NotImplementedError

    def mul(self, a: Value, b: Value) -> Value:
        raise NotImplementedError

    def scale(self, param: Value, v: Value) -> Value:
        """Left action of an operation parameter on a value."""
        raise NotImplementedError

    def zero(self) -> Value:
        raise NotImplementedError

    def is_zero(self, v: Value) -> bool:
        return v == self.zero()

    # -- enumeration ----------------------------------------------------

    def size(self) -> int | None:
        """Number of values, or None when not finitely enumerable."""
        raise NotImplementedError

    def enumerate_values(self) -> list[Value]:
        """All values in canonical order; stable across calls."""
        raise NotImplementedError

    # -- parameters -----------------------------------------------------

    def embed_param(self, coeff: int, indeterminate: bool) -> Value:
        """Turn a CLI-style parameter (plain or I-suffixed integer) into the
        internal parameter representation used by :meth:`scale`."""
        raise NotImplementedError

    def param_content(self, param: Value) -> int:
        """gcd of the integer coefficients of a parameter (0 for zero)."""
        raise NotImplementedError

    def param_is_zero(self, param: Value) -> bool:
        raise NotImplementedError

    def param_is_single_prime(self, param: Value) -> bool:
        """True when the parameter has exactly one nonzero coefficient and
        that coefficient is prime."""
        raise NotImplementedError

    def coprimality_class(self, t: Value, u: Value) -> CoprimalityClass:
        g = math.gcd(self.param_content(t), self.param_content(u))
        return CoprimalityClass(is_unit=(g == 1), gcd=g, witness=self.format_value(self.embed_gcd(g)))

    def embed_gcd(self, g: int) -> Value:
        """The gcd rendered as a carrier value (used for the witness text)."""
        raise NotImplementedError

    # -- neutrosophic structure ------------------------------------------

    @property
    def has_indeterminate(self) -> bool:
        return False

    def is_pure_indeterminate(self, v: Value) -> bool:
        """Nonzero and supported entirely on the I component."""
        return False

    # -- text -------------------------------------------------------------

    def format_value(self, v: Value) -> str:
        raise NotImplementedError

    def parse_value(self, s: str) -> Value:
        raise NotImplementedError

    def token(self) -> str:
        """Grammar token for the CLI (e.g. ``zn:7``, ``o(zni:4)``, ``q``)."""
        raise NotImplementedError

    def __str__(self) -> str:  # pragma: no cover - convenience
        return self.token()


@dataclass(frozen=True)
class Modular(Carrier):
    """Integers modulo n."""

    n: int

    def __post_init__(self) -> None:
        if self.n < 2:
            raise CarrierError(f"modulus must be >= 2, got {self.n}")

    def reduce(self, v: int) -> int:
        return int(v) % self.n

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.n

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.n

    def scale(self, param: int, v: int) -> int:
        return (param * v) % self.n

    def zero(self) -> int:
        return 0

    def size(self) -> int:
        return self.n

    def enumerate_values(self) -> list[int]:
        return list(range(self.n))

    def embed_param(self, coeff: int, indeterminate: bool) -> int:
        if indeterminate:
            raise CarrierError("carrier has no indeterminate component; drop the I suffix")
        return coeff % self.n

    def param_content(self, param: int) -> int:
        return abs(param) % self.n if param % self.n else 0

    def param_is_zero(self, param: int) -> bool:
        return param % self.n == 0

    def param_is_single_prime(self, param: int) -> bool:
        return is_prime(param % self.n)

    def embed_gcd(self, g: int) -> int:
        return g % self.n

    def format_value(self, v: int) -> str:
        return str(v)

    def parse_value(self, s: str) -> int:
        s = s.strip()
        if not re.fullmatch(r"-?\d+", s):
            raise CarrierError(f"not a residue: {s!r}")
        return self.reduce(int(s))

    def token(self) -> str:
        return f"zn:{self.n}"


@dataclass(frozen=True)
class PureNeutrosophic(Carrier):
    """{0, I, 2I, ..., (n-1)I}; a value is the integer coefficient of I."""

    n: int

    def __post_init__(self) -> None:
        if self.n < 2:
            raise CarrierError(f"modulus must be >= 2, got {self.n}")

    def reduce(self, v: int) -> int:
        return int(v) % self.n

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.n

    def mul(self, a: int, b: int) -> int:
        # (aI)(bI) = ab I*I = ab I
        return (a * b) % self.n

    def scale(self, param: int, v: int) -> int:
        # both t(bI) = (tb)I and (tI)(bI) = (tb)I collapse to the same action
        return (param * v) % self.n

    def zero(self) -> int:
        return 0

    def size(self) -> int:
        return self.n

    def enumerate_values(self) -> list[int]:
        return list(range(self.n))

    def embed_param(self, coeff: int, indeterminate: bool) -> int:
        return coeff % self.n

    def param_content(self, param: int) -> int:
        return param % self.n

    def param_is_zero(self, param: int) -> bool:
        return param % self.n == 0

    def param_is_single_prime(self, param: int) -> bool:
        return is_prime(param % self.n)

    def embed_gcd(self, g: int) -> int:
        return g % self.n

    @property
    def has_indeterminate(self) -> bool:
        return True

    def is_pure_indeterminate(self, v: int) -> bool:
        return v % self.n != 0

    def format_value(self, v: int) -> str:
        if v == 0:
            return "0"
        if v == 1:
            return "I"
        return f"{v}I"

    def parse_value(self, s: str) -> int:
        s = s.strip()
        if s == "0":
            return 0
        m = re.fullmatch(r"(\d*)I", s)
        if not m:
            raise CarrierError(f"not of the form kI: {s!r}")
        return self.reduce(int(m.group(1) or "1"))

    def token(self) -> str:
        return f"zni:{self.n}"


@dataclass(frozen=True)
class MixedNeutrosophic(Carrier):
    """{a + bI : a, b in Z_n}; a value is the pair (a, b)."""

    n: int

    def __post_init__(self) -> None:
        if self.n < 2:
            raise CarrierError(f"modulus must be >= 2, got {self.n}")

    def reduce(self, v: tuple[int, int]) -> tuple[int, int]:
        a, b = v
        return (int(a) % self.n, int(b) % self.n)

    def add(self, x: tuple[int, int], y: tuple[int, int]) -> tuple[int, int]:
        return ((x[0] + y[0]) % self.n, (x[1] + y[1]) % self.n)

    def mul(self, x: tuple[int, int], y: tuple[int, int]) -> tuple[int, int]:
        # (a+bI)(c+dI) = ac + (ad+bc+bd)I, from distributivity and I*I = I
        a, b = x
        c, d = y
        return ((a * c) % self.n, (a * d + b * c + b * d) % self.n)

    def scale(self, param: tuple[int, int], v: tuple[int, int]) -> tuple[int, int]:
        return self.mul(param, v)

    def zero(self) -> tuple[int, int]:
        return (0, 0)

    def size(self) -> int:
        return self.n * self.n

    def enumerate_values(self) -> list[tuple[int, int]]:
        return [(a, b) for a in range(self.n) for b in range(self.n)]

    def embed_param(self, coeff: int, indeterminate: bool) -> tuple[int, int]:
        c = coeff % self.n
        return (0, c) if indeterminate else (c, 0)

    def param_content(self, param: tuple[int, int]) -> int:
        a, b = self.reduce(param)
        return math.gcd(a, b)

    def param_is_zero(self, param: tuple[int, int]) -> bool:
        return self.reduce(param) == (0, 0)

    def param_is_single_prime(self, param: tuple[int, int]) -> bool:
        a, b = self.reduce(param)
        if a and b:
            return False
        return is_prime(a or b)

    def embed_gcd(self, g: int) -> tuple[int, int]:
        return (g % self.n, 0)

    @property
    def has_indeterminate(self) -> bool:
        return True

    def is_pure_indeterminate(self, v: tuple[int, int]) -> bool:
        a, b = self.reduce(v)
        return a == 0 and b != 0

    def format_value(self, v: tuple[int, int]) -> str:
        a, b = v
        if b == 0:
            return str(a)
        itext = "I" if b == 1 else f"{b}I"
        if a == 0:
            return itext
        return f"{a}+{itext}"

    def parse_value(self, s: str) -> tuple[int, int]:
        s = s.strip().replace(" ", "")
        m = re.fullmatch(r"(?:(\d+)\+)?(\d*)I", s)
        if m:
            return self.reduce((int(m.group(1) or "0"), int(m.group(2) or "1")))
        if re.fullmatch(r"\d+", s):
            return self.reduce((int(s), 0))
        raise CarrierError(f"not of the form a+bI: {s!r}")

    def token(self) -> str:
        return f"nzn:{self.n}"


@dataclass(frozen=True)
class IntervalOf(Carrier):
    """One-endpoint intervals [0, v] over a finite inner carrier.

    A value is the inner endpoint value; all operations act endpoint-wise.
    """

    inner: Carrier

    def __post_init__(self) -> None:
        if isinstance(self.inner, IntervalOf):
            raise CarrierError("interval carriers do not nest")
        if isinstance(self.inner, RationalDemo):
            raise CarrierError("interval carriers require a finite inner carrier")

    def reduce(self, v: Value) -> Value:
        return self.inner.reduce(v)

    def add(self, a: Value, b: Value) -> Value:
        return self.inner.add(a, b)

    def mul(self, a: Value, b: Value) -> Value:
        return self.inner.mul(a, b)

    def scale(self, param: Value, v: Value) -> Value:
        return self.inner.scale(param, v)

    def zero(self) -> Value:
        return self.inner.zero()

    def size(self) -> int | None:
        return self.inner.size()

    def enumerate_values(self) -> list[Value]:
        return self.inner.enumerate_values()

    def embed_param(self, coeff: int, indeterminate: bool) -> Value:
        return self.inner.embed_param(coeff, indeterminate)

    def param_content(self, param: Value) -> int:
        return self.inner.param_content(param)

    def param_is_zero(self, param: Value) -> bool:
        return self.inner.param_is_zero(param)

    def param_is_single_prime(self, param: Value) -> bool:
        return self.inner.param_is_single_prime(param)

    def embed_gcd(self, g: int) -> Value:
        return self.inner.embed_gcd(g)

    @property
    def has_indeterminate(self) -> bool:
        return self.inner.has_indeterminate

    def is_pure_indeterminate(self, v: Value) -> bool:
        return self.inner.is_pure_indeterminate(v)

    def format_value(self, v: Value) -> str:
        return f"[0,{self.inner.format_value(v)}]"

    def parse_value(self, s: str) -> Value:
        s = s.strip()
        if not (s.startswith("[0,") and s.endswith("]")):
            raise CarrierError(f"not of the form [0,x]: {s!r}")
        return self.inner.parse_value(s[3:-1])

    def token(self) -> str:
        return f"o({self.inner.token()})"


@dataclass(frozen=True)
class RationalDemo(Carrier):
    """Exact rationals; arithmetic only, no enumeration or subset structure."""

    def reduce(self, v: Value) -> Fraction:
        return Fraction(v)

    def add(self, a: Fraction, b: Fraction) -> Fraction:
        return a + b

    def mul(self, a: Fraction, b: Fraction) -> Fraction:
        return a * b

    def scale(self, param: Fraction, v: Fraction) -> Fraction:
        return param * v

    def zero(self) -> Fraction:
        return Fraction(0)

    def size(self) -> None:
        return None

    def enumerate_values(self) -> list[Value]:
        raise CannotEnumerate("rational carrier is not enumerable")

    def embed_param(self, coeff: int, indeterminate: bool) -> Fraction:
        if indeterminate:
            raise CarrierError("carrier has no indeterminate component; drop the I suffix")
        return Fraction(coeff)

    def param_content(self, param: Fraction) -> int:
        raise CarrierError("coprimality is not defined for the rational carrier")

    def param_is_zero(self, param: Fraction) -> bool:
        return param == 0

    def param_is_single_prime(self, param: Fraction) -> bool:
        return param.denominator == 1 and is_prime(int(param))

    def coprimality_class(self, t: Fraction, u: Fraction) -> CoprimalityClass:
        raise CarrierError("coprimality is not defined for the rational carrier")

    def format_value(self, v: Fraction) -> str:
        return str(v)

    def parse_value(self, s: str) -> Fraction:
        try:
            return Fraction(s.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise CarrierError(f"not a rational: {s!r}") from exc

    def token(self) -> str:
        return "q"


_CARRIER_RE = re.compile(r"^(zn|zni|nzn):(\d+)$")


def parse_carrier(token: str) -> Carrier:
    """Parse a carrier grammar token: zn:N, zni:N, nzn:N, o(...), q."""
    token = token.strip()
    if token == "q":
        return RationalDemo()
    if token.startswith("o(") and token.endswith(")"):
        return IntervalOf(parse_carrier(token[2:-1]))
    m = _CARRIER_RE.match(token)
    if not m:
        raise CarrierError(f"unknown carrier token: {token!r}")
    kind, num = m.group(1), int(m.group(2))
    if kind == "zn":
        return Modular(num)
    if kind == "zni":
        return PureNeutrosophic(num)
    return MixedNeutrosophic(num)


def parse_param_component(carrier: Carrier, text: str) -> Value:
    """Parse one CLI parameter component: an integer with optional I suffix."""
    text = text.strip()
    m = re.fullmatch(r"(\d*)(I?)", text)
    if not m or (not m.group(1) and not m.group(2)):
        raise CarrierError(f"parameter must be an integer with optional I suffix: {text!r}")
    coeff = int(m.group(1)) if m.group(1) else 1  # bare "I" means 1I
    return carrier.embed_param(coeff, indeterminate=bool(m.group(2)))
