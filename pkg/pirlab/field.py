"""
Exact arithmetic in prime fields F_p.

Only prime moduli below 2^31 are supported, so every product of two residues fits
in a signed 64-bit integer and numpy ``int64`` arrays stay exact.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Literal

from .exceptions import FieldMismatch, ModulusOutOfRange, NotPrime, ZeroInverse

MAX_MODULUS = 2**31

ArithOp = Literal["add", "sub", "mul", "pow"]


@lru_cache(maxsize=256)
def is_prime(n: int) -> bool:
    "Trial division; sufficient below 2^31."
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False

    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2

    return True


@dataclass(slots=True, frozen=True)
class FieldSpec:
    """
    The prime field F_p.

    Args:
        modulus (int): prime p with 2 <= p < 2^31
    """

    modulus: int

    def __post_init__(self):
        if self.modulus >= MAX_MODULUS:
            raise ModulusOutOfRange(self.modulus)
        if not is_prime(self.modulus):
            raise NotPrime(self.modulus)

    def __call__(self, value: int) -> "FieldElement":
        "Reduce an integer into this field."
        return FieldElement(value % self.modulus, self)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(0, self)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(1, self)

    def elements(self) -> Iterator["FieldElement"]:
        for value in range(self.modulus):
            yield FieldElement(value, self)

    def __str__(self) -> str:
        return f"F_{self.modulus}"


@dataclass(slots=True, frozen=True)
class FieldElement:
    """
    A residue of F_p.

    Args:
        value (int): canonical representative in [0, p)
        field (FieldSpec): the field the residue belongs to
    """

    value: int
    field: FieldSpec

    def __post_init__(self):
        if not 0 <= self.value < self.field.modulus:
            raise ValueError(f"{self.value} is not a canonical residue of {self.field}")

    def _coerce(self, other: "FieldElement | int") -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch(self.field.modulus, other.field.modulus)

            return other.value

        return other % self.field.modulus

    def __add__(self, other: "FieldElement | int") -> "FieldElement":
        return FieldElement((self.value + self._coerce(other)) % self.field.modulus, self.field)

    __radd__ = __add__

    def __sub__(self, other: "FieldElement | int") -> "FieldElement":
        return FieldElement((self.value - self._coerce(other)) % self.field.modulus, self.field)

    def __rsub__(self, other: int) -> "FieldElement":
        return FieldElement((self._coerce(other) - self.value) % self.field.modulus, self.field)

    def __mul__(self, other: "FieldElement | int") -> "FieldElement":
        return FieldElement((self.value * self._coerce(other)) % self.field.modulus, self.field)

    __rmul__ = __mul__

    def __neg__(self) -> "FieldElement":
        return FieldElement(-self.value % self.field.modulus, self.field)

    def __pow__(self, exponent: int) -> "FieldElement":
        if exponent < 0:
            return self.inverse() ** -exponent

        # square-and-multiply
        result, base = 1, self.value
        while exponent:
            if exponent & 1:
                result = result * base % self.field.modulus
            base = base * base % self.field.modulus
            exponent >>= 1

        return FieldElement(result, self.field)

    def __truediv__(self, other: "FieldElement | int") -> "FieldElement":
        divisor = other if isinstance(other, FieldElement) else self.field(other)
        return self * divisor.inverse()

    def __int__(self) -> int:
        return self.value

    def __bool__(self) -> bool:
        return self.value != 0

    def inverse(self) -> "FieldElement":
        "Multiplicative inverse via the extended Euclidean algorithm."
        if self.value == 0:
            raise ZeroInverse(f"0 has no inverse in {self.field}")

        old_r, r = self.field.modulus, self.value
        old_t, t = 0, 1
        while r:
            quotient = old_r // r
            old_r, r = r, old_r - quotient * r
            old_t, t = t, old_t - quotient * t

        return FieldElement(old_t % self.field.modulus, self.field)

    def __str__(self) -> str:
        return str(self.value)


def validate_field(p: int) -> FieldSpec:
    "Return the field F_p, raising :class:`NotPrime` for composite moduli."
    return FieldSpec(p)


def arith(op: ArithOp, a: FieldElement, b: FieldElement | int) -> FieldElement:
    """
    Apply a binary field operation.

    ``pow`` takes a non-negative integer exponent as ``b``; the other operations
    require ``b`` to be an element of the same field.
    """
    if op == "pow":
        if not isinstance(b, int) or isinstance(b, bool) or b < 0:
            raise ValueError(f"pow needs a non-negative integer exponent, got {b!r}")

        return a**b

    if not isinstance(b, FieldElement):
        raise TypeError(f"{op} needs a FieldElement operand, got {type(b).__name__}")
    if a.field != b.field:
        raise FieldMismatch(a.field.modulus, b.field.modulus)

    match op:
        case "add":
            return a + b
        case "sub":
            return a - b
        case "mul":
            return a * b
        case _:
            raise ValueError(f"Unsupported field operation: {op}")


def inv(a: FieldElement) -> FieldElement:
    "Multiplicative inverse; raises :class:`ZeroInverse` for zero."
    return a.inverse()
