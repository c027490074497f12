from contextlib import contextmanager
from dataclasses import MISSING, fields
from dataclasses import field as dc_field
from typing import Any, Iterator, TypeVar, get_args, get_origin, get_type_hints

from pirlab.exceptions import ConfigValidationError

from .env import to_int
from .field_validators import Validator

_T = TypeVar("_T")

_CASTS: dict[type, Any] = {int: to_int, float: float, str: str}


@contextmanager
def _format_error(cls_name: str, field_name: str) -> Iterator[None]:
    try:
        yield
    except Exception as exc:
        raise ConfigValidationError(f"{cls_name}.{field_name}: {exc}") from exc


def _coerce(value: Any, annotation: Any) -> Any:
    "Cast strings to scalar annotations; nested config models pass through untouched."
    if get_origin(annotation) is not None:
        args = [arg for arg in get_args(annotation) if arg is not type(None)]
        if value is None and len(args) < len(get_args(annotation)):
            return None
        if len(args) == 1:
            return _coerce(value, args[0])

        return value

    if not isinstance(annotation, type) or annotation not in _CASTS:
        return value

    # bool is an int subclass, reject it explicitly for numeric fields
    if isinstance(value, bool) and annotation is not bool:
        raise TypeError(f"Expected {annotation.__name__}, got bool")
    if isinstance(value, annotation):
        return value
    if annotation is float and isinstance(value, int):
        return float(value)
    if isinstance(value, str):
        try:
            return _CASTS[annotation](value)
        except Exception as e:
            raise ValueError(f"Cannot cast {value!r} to {annotation.__name__}") from e

    raise TypeError(f"Expected {annotation.__name__}, got {type(value).__name__}")


def validate(cls: type[_T]) -> type[_T]:
    "Install a ``__post_init__`` that casts and validates every dataclass field."
    orig_post_init = getattr(cls, "__post_init__", None)
    hints = get_type_hints(cls)

    def post_init(self, *args, **kwargs):
        for f in fields(self):
            value = getattr(self, f.name)
            with _format_error(cls.__name__, f.name):
                new_value = _coerce(value, hints.get(f.name, f.type))
                if validator := f.metadata.get("validator"):
                    new_value = validator(f.name, new_value)

            if new_value is not value:
                object.__setattr__(self, f.name, new_value)

        if orig_post_init:
            orig_post_init(self, *args, **kwargs)

    cls.__post_init__ = post_init  # type: ignore[reportAttributeAccessIssue]
    return cls


def field(*, default: Any = MISSING, default_factory: Any = MISSING, validator: Validator | None = None) -> Any:
    """Wraps a dataclass field with optional validation."""
    return dc_field(default=default, default_factory=default_factory, metadata={"validator": validator})
