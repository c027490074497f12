from collections.abc import Collection
from typing import Generic, Protocol, TypeVar

T = TypeVar("T")
NumberT = TypeVar("NumberT", int, float)


class Validator(Protocol[T]):
    "Checks a parsed config or CLI value and returns it unchanged."

    def __call__(self, key: str, value: T) -> T: ...


class RangeValidator(Generic[NumberT]):
    """
    Rejects numbers outside an inclusive range; ``None`` passes through.

    Budgets and limits use ``min_value=1``; seeds are bounded to 64 bits.

    Args:
        min_value: Smallest accepted value
        max_value: Largest accepted value
    """

    def __init__(self, min_value: NumberT | None = None, max_value: NumberT | None = None):
        if min_value is None and max_value is None:
            raise ValueError("At least one of min_value or max_value is required")

        self.min_value = min_value
        self.max_value = max_value

    def __call__(self, key: str, value: NumberT | None) -> NumberT | None:
        if value is None:
            return None

        low, high = self.min_value, self.max_value
        if low is not None and value < low:
            raise ValueError(f"{key} is {value}, minimum is {low}")
        if high is not None and value > high:
            raise ValueError(f"{key} is {value}, maximum is {high}")

        return value


class ChoicesValidator(Generic[T]):
    "Accepts only members of a fixed set, such as the numeric logging levels."

    def __init__(self, choices: Collection[T]):
        self.choices = frozenset(choices)

    def __call__(self, key: str, value: T) -> T:
        if value in self.choices:
            return value

        raise ValueError(f"{key} is {value!r}, must be one of {sorted(self.choices)}")  # type: ignore[type-var]
