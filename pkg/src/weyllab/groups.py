"""Finite abelian groups, their duals, and the Fourier transform.

A group is a product of cyclic factors Z_{n_1} x ... x Z_{n_k}, written
additively per coordinate but with multiplicative notation in the API.
Elements are enumerated by a mixed-radix index with the last coordinate
fastest.  The dual group is identified with the group itself through the
canonical pairing

    chi_k(x) = exp(2 pi i sum_j k_j x_j / n_j),

so characters are addressed by the same index scheme, character
multiplication is index addition, and conjugation is index inversion.

Normalization: counting measure (weight 1 per point) on the group, weight
1/N per point on the dual, N the group order.  This makes the inversion
formula exact and puts the interesting constants of the transform theory
at 1.
"""

from __future__ import annotations

import numpy as np

from .errors import InvalidSpecError, SpecMismatchError

__all__ = [
    "GroupSpec",
    "GroupElement",
    "Character",
    "make_group",
    "pairing",
    "haar_weights",
    "fourier",
    "inverse_fourier",
]


class GroupSpec:
    """A finite abelian group given by its cyclic factor orders.

    All arithmetic is table driven: multiplication, inversion, division
    (a * b^-1) and the pairing matrix are computed once in the
    constructor.  Tables are indexed by the mixed-radix element index.
    """

    def __init__(self, orders):
        try:
            orders = tuple(int(n) for n in orders)
        except (TypeError, ValueError) as exc:
            raise InvalidSpecError(f"factor orders must be integers: {orders!r}") from exc
        if len(orders) == 0:
            raise InvalidSpecError("a group needs at least one cyclic factor")
        if any(n < 1 for n in orders):
            raise InvalidSpecError(f"factor orders must be >= 1: {orders!r}")
        self.orders = orders
        self.rank = len(orders)
        n = 1
        for m in orders:
            n *= m
        self.order = n

        # coords_table[i] holds the coordinate tuple of element index i,
        # last coordinate fastest.
        radix = np.array(orders, dtype=np.int64)
        idx = np.arange(n, dtype=np.int64)
        coords = np.empty((n, self.rank), dtype=np.int64)
        rem = idx
        for j in range(self.rank - 1, -1, -1):
            coords[:, j] = rem % radix[j]
            rem = rem // radix[j]
        self.coords_table = coords

        # strides for index_of: index = sum_j coords[j] * stride[j]
        stride = np.empty(self.rank, dtype=np.int64)
        acc = 1
        for j in range(self.rank - 1, -1, -1):
            stride[j] = acc
            acc *= radix[j]
        self._stride = stride

        summed = (coords[:, None, :] + coords[None, :, :]) % radix
        self.mul_table = (summed * stride).sum(axis=2)
        self.inv_table = (((-coords) % radix) * stride).sum(axis=1)
        # div_table[a, b] = a * b^-1
        self.div_table = self.mul_table[:, self.inv_table]

        # pairing_table[x, k] = chi_k(x)
        phase = np.zeros((n, n), dtype=np.float64)
        for j in range(self.rank):
            phase += np.outer(coords[:, j], coords[:, j]) / orders[j]
        self.pairing_table = np.exp(2j * np.pi * phase)

    # -- index/coordinate conversions ------------------------------------

    def index_of(self, coords) -> int:
        coords = tuple(int(c) for c in coords)
        if len(coords) != self.rank:
            raise InvalidSpecError(
                f"expected {self.rank} coordinates, got {len(coords)}"
            )
        reduced = [c % n for c, n in zip(coords, self.orders)]
        return int(sum(c * s for c, s in zip(reduced, self._stride)))

    def coords_of(self, index: int) -> tuple:
        index = int(index)
        if not 0 <= index < self.order:
            raise InvalidSpecError(f"element index {index} out of range")
        return tuple(int(c) for c in self.coords_table[index])

    # -- element/character factories -------------------------------------

    def element(self, coords) -> "GroupElement":
        return GroupElement(self, self.index_of(coords))

    def element_by_index(self, index: int) -> "GroupElement":
        return GroupElement(self, index)

    def character(self, coords) -> "Character":
        return Character(self, self.index_of(coords))

    def character_by_index(self, index: int) -> "Character":
        return Character(self, index)

    @property
    def identity(self) -> "GroupElement":
        return GroupElement(self, 0)

    @property
    def trivial_character(self) -> "Character":
        return Character(self, 0)

    def elements(self):
        return [GroupElement(self, i) for i in range(self.order)]

    def characters(self):
        return [Character(self, i) for i in range(self.order)]

    # -- identity --------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, GroupSpec) and self.orders == other.orders

    def __hash__(self):
        return hash(self.orders)

    def __repr__(self):
        return "Z" + "xZ".join(str(n) for n in self.orders)


class _Indexed:
    """Shared machinery for table-indexed group and character objects."""

    __slots__ = ("group", "index")

    def __init__(self, group: GroupSpec, index: int):
        index = int(index)
        if not 0 <= index < group.order:
            raise InvalidSpecError(f"index {index} out of range for {group!r}")
        self.group = group
        self.index = index

    @property
    def coords(self) -> tuple:
        return self.group.coords_of(self.index)

    def _check(self, other):
        if self.group != other.group:
            raise SpecMismatchError(
                f"operands live over different groups: {self.group!r} vs {other.group!r}"
            )
        if type(self) is not type(other):
            raise SpecMismatchError(
                f"cannot combine {type(self).__name__} with {type(other).__name__}"
            )

    def __eq__(self, other):
        return (
            type(self) is type(other)
            and self.group == other.group
            and self.index == other.index
        )

    def __hash__(self):
        return hash((type(self).__name__, self.group, self.index))


class GroupElement(_Indexed):
    def __mul__(self, other) -> "GroupElement":
        self._check(other)
        return GroupElement(self.group, self.group.mul_table[self.index, other.index])

    def inverse(self) -> "GroupElement":
        return GroupElement(self.group, self.group.inv_table[self.index])

    def __repr__(self):
        return f"g{self.coords}"


class Character(_Indexed):
    """A character of the group, addressed by its dual index."""

    def __mul__(self, other) -> "Character":
        self._check(other)
        return Character(self.group, self.group.mul_table[self.index, other.index])

    def conjugate(self) -> "Character":
        return Character(self.group, self.group.inv_table[self.index])

    def __call__(self, x: GroupElement) -> complex:
        if self.group != x.group:
            raise SpecMismatchError("character evaluated on a foreign group element")
        return complex(self.group.pairing_table[x.index, self.index])

    def __repr__(self):
        return f"chi{self.coords}"


def make_group(orders) -> GroupSpec:
    """Build a GroupSpec from an iterable of cyclic factor orders."""
    return GroupSpec(orders)


def pairing(x: GroupElement, chi: Character) -> complex:
    """Evaluate the canonical pairing chi(x)."""
    if x.group != chi.group:
        raise SpecMismatchError("pairing of element and character over different groups")
    return complex(x.group.pairing_table[x.index, chi.index])


def haar_weights(group: GroupSpec):
    """Per-point weights (group side, dual side) of the chosen normalization."""
    return 1.0, 1.0 / group.order


def fourier(group: GroupSpec, values) -> np.ndarray:
    """Transform a function on the group to one on the dual.

    values has the group index on the first axis; trailing axes ride along.
    hat(phi)(k) = sum_x phi(x) * conj(chi_k(x)).
    """
    values = np.asarray(values, dtype=np.complex128)
    if values.shape[0] != group.order:
        raise SpecMismatchError(
            f"expected leading axis {group.order}, got {values.shape[0]}"
        )
    return np.tensordot(group.pairing_table.conj(), values, axes=(0, 0))


def inverse_fourier(group: GroupSpec, values) -> np.ndarray:
    """Inverse transform, phi(x) = (1/N) sum_k hat(phi)(k) * chi_k(x)."""
    values = np.asarray(values, dtype=np.complex128)
    if values.shape[0] != group.order:
        raise SpecMismatchError(
            f"expected leading axis {group.order}, got {values.shape[0]}"
        )
    return np.tensordot(group.pairing_table, values, axes=(1, 0)) / group.order
