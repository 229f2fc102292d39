"""Element shapes over a carrier and the parameterised star product.

An element is always a flat tuple of carrier values:

* ``Scalar``                -- one entry,
* ``Matrix(rows, cols)``    -- rows*cols entries, row-major,
* ``Poly(max_deg, kind)``   -- max_deg+1 coefficient entries c0..c_max_deg
                               (fixed length; missing high coefficients are 0).

The star product x*y depends on the shape's product kind:

* entrywise (scalar, matrix, entrywise/convolution-at-degree-0 polynomials):
      (x*y)_e = t·x_e + u·y_e
* shuffle polynomials (degree d), which ignore (t, u):
      x*y = (x_0·y_1, x_1·y_2, ..., x_{d-1}·y_d, x_d)
* convolution polynomials:
      (x*y)_k = sum over i+j=k of (t·x_i + u·y_j),
  colliding exponents are summed and exponents above max_deg are dropped.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Iterator

from .carrier import Carrier, CarrierError, Value

Element = tuple  # tuple[Value, ...]


class TooLarge:
    """Sentinel: the element space exceeds the enumeration cap."""

    _instance: "TooLarge | None" = None

    def __new__(cls) -> "TooLarge":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "TooLarge"


TOO_LARGE = TooLarge()

DEFAULT_SPACE_CAP = 10**6


class ProductKind(Enum):
    ENTRYWISE = "entrywise"
    SHUFFLE = "shuffle"
    CONVOLUTION = "conv"


class Shape:
    """Base interface for element shapes."""

    def entry_count(self) -> int:
        raise NotImplementedError

    def token(self) -> str:
        raise NotImplementedError

    def is_entrywise(self) -> bool:
        """True when star acts independently on entries (liftable to scalar)."""
        raise NotImplementedError

    def __str__(self) -> str:  # pragma: no cover - convenience
        return self.token()


@dataclass(frozen=True)
class Scalar(Shape):
    def entry_count(self) -> int:
        return 1

    def token(self) -> str:
        return "scalar"

    def is_entrywise(self) -> bool:
        return True


@dataclass(frozen=True)
class Matrix(Shape):
    rows: int
    cols: int

    def __post_init__(self) -> None:
        if self.rows < 1 or self.cols < 1:
            raise CarrierError("matrix dimensions must be positive")

    def entry_count(self) -> int:
        return self.rows * self.cols

    def token(self) -> str:
        return f"mat:{self.rows}x{self.cols}"

    def is_entrywise(self) -> bool:
        return True


@dataclass(frozen=True)
class Poly(Shape):
    max_deg: int
    kind: ProductKind = ProductKind.ENTRYWISE

    def __post_init__(self) -> None:
        if self.max_deg < 0:
            raise CarrierError("polynomial degree bound must be >= 0")
        if self.kind is ProductKind.SHUFFLE and self.max_deg < 1:
            raise CarrierError("shuffle product needs degree bound >= 1")

    def entry_count(self) -> int:
        return self.max_deg + 1

    def token(self) -> str:
        return f"poly:{self.max_deg}:{self.kind.value}"

    def is_entrywise(self) -> bool:
        return self.kind is ProductKind.ENTRYWISE or (
            self.kind is ProductKind.CONVOLUTION and self.max_deg == 0
        )


def star(carrier: Carrier, shape: Shape, t: Value, u: Value, x: Element, y: Element) -> Element:
    """The two-parameter product of elements x and y."""
    k = shape.entry_count()
    if len(x) != k or len(y) != k:
        raise CarrierError(f"elements must have {k} entries")
    if isinstance(shape, Poly) and shape.kind is ProductKind.SHUFFLE:
        d = shape.max_deg
        out = [carrier.mul(x[i], y[i + 1]) for i in range(d)]
        out.append(x[d])
        return tuple(out)
    if isinstance(shape, Poly) and shape.kind is ProductKind.CONVOLUTION:
        d = shape.max_deg
        acc = [carrier.zero()] * (d + 1)
        for i in range(d + 1):
            for j in range(d + 1):
                k_exp = i + j
                if k_exp > d:
                    continue
                term = carrier.add(carrier.scale(t, x[i]), carrier.scale(u, y[j]))
                acc[k_exp] = carrier.add(acc[k_exp], term)
        return tuple(acc)
    return tuple(
        carrier.add(carrier.scale(t, xi), carrier.scale(u, yi)) for xi, yi in zip(x, y)
    )


@dataclass(frozen=True)
class ElementSpace:
    """Size and (when within the cap) an enumerator for a shape's elements."""

    count: "int | TooLarge"
    carrier: Carrier
    shape: Shape

    def __iter__(self) -> Iterator[Element]:
        if isinstance(self.count, TooLarge):
            raise CarrierError("element space exceeds the enumeration cap")
        values = self.carrier.enumerate_values()
        return itertools.product(values, repeat=self.shape.entry_count())


def element_space(carrier: Carrier, shape: Shape, cap: int = DEFAULT_SPACE_CAP) -> ElementSpace:
    """Count the elements; the count is TooLarge (and iteration refused) above cap."""
    size = carrier.size()
    if size is None:
        raise CarrierError("carrier is not enumerable")
    count: int | TooLarge = size ** shape.entry_count()
    if count > cap:
        count = TOO_LARGE
    return ElementSpace(count=count, carrier=carrier, shape=shape)


@dataclass(frozen=True)
class LiftResult:
    """Whether identity checking may be done on the scalar shadow."""

    liftable: bool
    reason: str


def scalar_projection(shape: Shape) -> LiftResult:
    """Entrywise products mirror the scalar groupoid entry-for-entry; shuffle
    and genuine convolution products mix entries and do not."""
    if shape.is_entrywise():
        return LiftResult(True, "entries evolve independently under star")
    return LiftResult(False, "product mixes entries across positions")


def zero_element(carrier: Carrier, shape: Shape) -> Element:
    return tuple(carrier.zero() for _ in range(shape.entry_count()))


def element_is_zero(carrier: Carrier, e: Element) -> bool:
    return all(carrier.is_zero(v) for v in e)


def element_is_pure_indeterminate(carrier: Carrier, e: Element) -> bool:
    """Nonzero, and every nonzero entry is supported on the I component."""
    if element_is_zero(carrier, e):
        return False
    return all(carrier.is_zero(v) or carrier.is_pure_indeterminate(v) for v in e)


def element_has_indeterminate(carrier: Carrier, e: Element) -> bool:
    return any(carrier.is_pure_indeterminate(v) or _mixed_ipart(carrier, v) for v in e)


def _mixed_ipart(carrier: Carrier, v: Value) -> bool:
    # mixed values (a, b) with b != 0 carry an I component even when a != 0
    from .carrier import IntervalOf, MixedNeutrosophic

    inner = carrier.inner if isinstance(carrier, IntervalOf) else carrier
    if isinstance(inner, MixedNeutrosophic):
        return inner.reduce(v)[1] != 0
    return False


# -- element text -------------------------------------------------------


def format_element(carrier: Carrier, shape: Shape, e: Element) -> str:
    if isinstance(shape, Scalar):
        return carrier.format_value(e[0])
    if isinstance(shape, Matrix):
        rows = []
        for r in range(shape.rows):
            row = e[r * shape.cols : (r + 1) * shape.cols]
            rows.append("[" + ",".join(carrier.format_value(v) for v in row) + "]")
        return "[" + ";".join(rows) + "]"
    return "poly[" + ",".join(carrier.format_value(v) for v in e) + "]"


def _split_top_level(s: str, sep: str) -> list[str]:
    """Split on sep at bracket depth zero (entries may contain brackets)."""
    parts: list[str] = []
    depth = 0
    cur: list[str] = []
    for ch in s:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
            if depth < 0:
                raise CarrierError(f"unbalanced brackets in {s!r}")
        if ch == sep and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if depth != 0:
        raise CarrierError(f"unbalanced brackets in {s!r}")
    parts.append("".join(cur))
    return parts


def parse_element(carrier: Carrier, shape: Shape, s: str) -> Element:
    s = s.strip()
    if isinstance(shape, Scalar):
        return (carrier.parse_value(s),)
    if isinstance(shape, Matrix):
        if not (s.startswith("[") and s.endswith("]")):
            raise CarrierError(f"matrix text must be [...;...]: {s!r}")
        row_texts = _split_top_level(s[1:-1], ";")
        if len(row_texts) != shape.rows:
            raise CarrierError(f"expected {shape.rows} rows, got {len(row_texts)}")
        entries: list[Value] = []
        for rt in row_texts:
            rt = rt.strip()
            if not (rt.startswith("[") and rt.endswith("]")):
                raise CarrierError(f"matrix row must be [...]: {rt!r}")
            cells = _split_top_level(rt[1:-1], ",")
            if len(cells) != shape.cols:
                raise CarrierError(f"expected {shape.cols} columns, got {len(cells)}")
            entries.extend(carrier.parse_value(c) for c in cells)
        return tuple(entries)
    if not (s.startswith("poly[") and s.endswith("]")):
        raise CarrierError(f"polynomial text must be poly[...]: {s!r}")
    cells = _split_top_level(s[5:-1], ",")
    if len(cells) != shape.entry_count():
        raise CarrierError(f"expected {shape.entry_count()} coefficients, got {len(cells)}")
    return tuple(carrier.parse_value(c) for c in cells)


def parse_shape(token: str) -> Shape:
    """Parse a shape grammar token: scalar, mat:RxC, poly:D:KIND."""
    token = token.strip()
    if token == "scalar":
        return Scalar()
    if token.startswith("mat:"):
        dims = token[4:].split("x")
        if len(dims) != 2 or not all(d.isdigit() for d in dims):
            raise CarrierError(f"bad matrix shape token: {token!r}")
        return Matrix(int(dims[0]), int(dims[1]))
    if token.startswith("poly:"):
        parts = token.split(":")
        if len(parts) != 3 or not parts[1].isdigit():
            raise CarrierError(f"bad polynomial shape token: {token!r}")
        kinds = {k.value: k for k in ProductKind}
        if parts[2] not in kinds:
            raise CarrierError(f"unknown polynomial product kind: {parts[2]!r}")
        return Poly(int(parts[1]), kinds[parts[2]])
    raise CarrierError(f"unknown shape token: {token!r}")
