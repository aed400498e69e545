"""Finitely generated abelian groups in invariant-factor form.

A group is ``Z^r + Z_d1 + ... + Z_dk`` with ``d1 | d2 | ... | dk`` and every
``di >= 2``.  This is the value of every integral homology computation.

>>> canonicalize(0, [4, 6])
FgAbelianGroup(rank=0, torsion=(2, 12))
>>> str(tensor(direct_sum(Z, cyclic(2)), cyclic(4)))
'Z_2 + Z_4'
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, NamedTuple


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class Coefficients:
    """Coefficient ring: ``Z``, the prime field ``Z_p`` or ``Q``."""

    kind: str
    p: int = 0

    def __post_init__(self):
        if self.kind not in ("Z", "Zp", "Q"):
            raise ValueError(f"unknown coefficient kind {self.kind!r}")
        if self.kind == "Zp" and not _is_prime(self.p):
            raise ValueError(f"Zp needs a prime, got {self.p}")

    @property
    def is_field(self) -> bool:
        return self.kind != "Z"

    @property
    def characteristic(self) -> int:
        return self.p if self.kind == "Zp" else 0

    def __str__(self):
        return f"Zp:{self.p}" if self.kind == "Zp" else self.kind


ZZ = Coefficients("Z")
QQ = Coefficients("Q")


def GF(p: int) -> Coefficients:
    return Coefficients("Zp", p)


def parse_coefficients(text: str) -> Coefficients:
    """Parse ``Z``, ``Q`` or ``Zp:<prime>``."""
    text = text.strip()
    if text == "Z":
        return ZZ
    if text == "Q":
        return QQ
    if text.startswith("Zp:"):
        try:
            p = int(text[3:])
        except ValueError:
            raise ValueError(f"bad coefficient string {text!r}") from None
        return GF(p)
    raise ValueError(f"bad coefficient string {text!r}")


@dataclass(frozen=True)
class FgAbelianGroup:
    rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("negative rank")
        t = self.torsion
        if any(d < 2 for d in t) or any(t[i + 1] % t[i] for i in range(len(t) - 1)):
            raise ValueError(f"torsion {t} is not an invariant-factor chain; use canonicalize")

    def is_zero(self) -> bool:
        return self.rank == 0 and not self.torsion

    @property
    def order(self) -> int | None:
        """Cardinality, or ``None`` when infinite."""
        if self.rank:
            return None
        n = 1
        for d in self.torsion:
            n *= d
        return n

    def __str__(self):
        parts = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append(f"Z^{self.rank}")
        parts.extend(f"Z_{d}" for d in self.torsion)
        return " + ".join(parts) if parts else "0"


ZERO = FgAbelianGroup()
Z = FgAbelianGroup(1)


def canonicalize(rank: int, torsion: Iterable[int]) -> FgAbelianGroup:
    """Invariant-factor form by repeated gcd/lcm exchange."""
    ds = [abs(int(d)) for d in torsion]
    if any(d == 0 for d in ds):
        raise ValueError("zero torsion coefficient; count it in the rank")
    ds = [d for d in ds if d != 1]
    changed = True
    while changed:
        changed = False
        for i in range(len(ds)):
            for j in range(i + 1, len(ds)):
                a, b = ds[i], ds[j]
                if b % a:
                    g = gcd(a, b)
                    ds[i], ds[j] = g, a // g * b
                    changed = True
        ds = sorted(d for d in ds if d != 1)
    return FgAbelianGroup(rank, tuple(ds))


def cyclic(n: int) -> FgAbelianGroup:
    """``Z_n``; ``cyclic(0)`` is ``Z``."""
    return Z if n == 0 else canonicalize(0, [n])


def free(r: int) -> FgAbelianGroup:
    return FgAbelianGroup(r)


def direct_sum(*groups: FgAbelianGroup) -> FgAbelianGroup:
    return canonicalize(sum(g.rank for g in groups), [d for g in groups for d in g.torsion])


def tensor(a: FgAbelianGroup, b: FgAbelianGroup) -> FgAbelianGroup:
    rank = a.rank * b.rank
    tors = [d for d in b.torsion for _ in range(a.rank)]
    tors += [d for d in a.torsion for _ in range(b.rank)]
    tors += [gcd(m, n) for m in a.torsion for n in b.torsion]
    return canonicalize(rank, tors)


def tor1(a: FgAbelianGroup, b: FgAbelianGroup) -> FgAbelianGroup:
    return canonicalize(0, [gcd(m, n) for m in a.torsion for n in b.torsion])


class BaseChange(NamedTuple):
    tensor_dim: int
    tor_dim: int


def base_change(a: FgAbelianGroup, coeff: Coefficients) -> BaseChange:
    """Dimensions of ``A (x) F`` and ``Tor(A, F)`` for a field ``F``.

    By universal coefficients, ``dim H_i(X; F)`` is the tensor part of
    ``H_i(X; Z)`` plus the Tor part of ``H_{i-1}(X; Z)``.
    """
    if coeff.kind == "Q":
        return BaseChange(a.rank, 0)
    if coeff.kind == "Zp":
        k = sum(1 for d in a.torsion if d % coeff.p == 0)
        return BaseChange(a.rank + k, k)
    raise ValueError("base_change needs a field")
