from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError


@dataclass(frozen=True, eq=False)
class UniModMatrix:
    """Integer matrix [[a, b], [c, d]] with determinant +-1.

    Equality and hashing are projective: M and -M are the same element
    of PGL2(Z).
    """

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        for name in "abcd":
            object.__setattr__(self, name, int(getattr(self, name)))
        if self.det not in (1, -1):
            raise DomainError(f"determinant must be +-1, got {self.det}")

    @classmethod
    def identity(cls) -> UniModMatrix:
        return cls(1, 0, 0, 1)

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    @property
    def entries(self) -> tuple[int, int, int, int]:
        return self.a, self.b, self.c, self.d

    def is_canonical(self) -> bool:
        return self.c > 0 or (self.c == 0 and self.d == 1)

    def canonical(self) -> UniModMatrix:
        if self.is_canonical():
            return self
        return UniModMatrix(-self.a, -self.b, -self.c, -self.d)

    def inverse(self) -> UniModMatrix:
        s = self.det
        return UniModMatrix(s * self.d, -s * self.b, -s * self.c, s * self.a)

    def __matmul__(self, other: UniModMatrix) -> UniModMatrix:
        a, b, c, d = self.entries
        e, f, g, h = other.entries
        return UniModMatrix(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    def __eq__(self, other):
        if not isinstance(other, UniModMatrix):
            return NotImplemented
        return self.canonical().entries == other.canonical().entries

    def __hash__(self):
        return hash(self.canonical().entries)
