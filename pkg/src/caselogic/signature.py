"""Factor vocabularies, outcome values, and bitmask encodings.

Factors are split into a plaintiff-favoring side and a defendant-favoring
side.  The canonical atom order is the plaintiff factors followed by the
defendant factors, each in declaration order; atom ``i`` corresponds to bit
``1 << i`` in all mask representations.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Union

PLAINTIFF = 1
DEFENDANT = 0
UNKNOWN = "?"
CONFLICT = "conflict"

OUTCOMES = (PLAINTIFF, DEFENDANT)
VALUES = (PLAINTIFF, DEFENDANT, UNKNOWN)

Val = Union[int, str]


def opposite(x: Val) -> int:
    """The losing side for a decided outcome.  Undefined for '?'."""
    if x == PLAINTIFF:
        return DEFENDANT
    if x == DEFENDANT:
        return PLAINTIFF
    raise ValueError(f"opposite is undefined for outcome {x!r}")


def state_key(mask: int) -> tuple:
    """Sort key realizing the canonical (lexicographic) order on states.

    States are compared as sorted tuples of atom indices, so {a0, a1} comes
    before {a0, a2} and a proper prefix comes before its extensions.
    """
    return tuple(i for i in range(mask.bit_length()) if mask >> i & 1)


def iter_submasks(mask: int):
    """All submasks of ``mask`` in ascending numeric order."""
    sub = 0
    while True:
        yield sub
        if sub == mask:
            return
        sub = (sub - mask) & mask


@dataclass(frozen=True)
class Signature:
    """The two disjoint, ordered factor vocabularies."""

    plt: tuple
    dfd: tuple

    def __post_init__(self):
        object.__setattr__(self, "plt", tuple(self.plt))
        object.__setattr__(self, "dfd", tuple(self.dfd))
        atoms = self.plt + self.dfd
        for a in atoms:
            if not isinstance(a, str) or not a:
                raise ValueError(f"factor names must be non-empty strings, got {a!r}")
        if len(set(atoms)) != len(atoms):
            raise ValueError("factor names must be unique across both sides")

    @cached_property
    def atoms(self) -> tuple:
        return self.plt + self.dfd

    @property
    def n(self) -> int:
        return len(self.atoms)

    @cached_property
    def _index(self) -> dict:
        return {a: i for i, a in enumerate(self.atoms)}

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise ValueError(f"unknown factor {name!r}") from None

    def mask(self, names: Iterable[str]) -> int:
        m = 0
        for name in names:
            m |= 1 << self.index(name)
        return m

    def names(self, mask: int) -> tuple:
        return tuple(a for i, a in enumerate(self.atoms) if mask >> i & 1)

    def name_set(self, mask: int) -> frozenset:
        return frozenset(self.names(mask))

    @cached_property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def plt_mask(self) -> int:
        return (1 << len(self.plt)) - 1

    @cached_property
    def dfd_mask(self) -> int:
        return self.full_mask ^ self.plt_mask

    def side_mask(self, x: Val) -> int:
        """The mask of all factors favoring outcome ``x``."""
        return self.plt_mask if x == PLAINTIFF else self.dfd_mask if x == DEFENDANT else self._bad_side(x)

    @staticmethod
    def _bad_side(x):
        raise ValueError(f"no factor side for outcome {x!r}")

    def states(self) -> range:
        """All valuations over the atoms, as masks in numeric order."""
        return range(1 << self.n)

    @cached_property
    def canonical_states(self) -> tuple:
        """All valuations sorted in the canonical lexicographic order."""
        return tuple(sorted(self.states(), key=state_key))

    def side_of(self, name: str) -> int:
        return PLAINTIFF if name in self.plt else DEFENDANT
