# Registry of named algebras with rational parameters

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Mapping, Optional, Tuple, Union

from ..core.algebra import LieSuperalgebra
from ..core.errors import InputError, PreconditionError
from ..core.scalars import ScalarLike, as_scalar, format_rational
from ..quadratic.form import QuadraticLieSuperalgebra

log = logging.getLogger(__name__)

Built = Union[QuadraticLieSuperalgebra, LieSuperalgebra]
Params = Dict[str, Fraction]


@dataclass(frozen=True)
class Constraint:
    description: str
    check: Callable[[Params], bool]


@dataclass(frozen=True)
class CatalogEntry:
    key: str
    description: str
    source: str
    builder: Callable[..., Built]
    defaults: Dict[str, Fraction] = field(default_factory=dict)
    constraints: Tuple[Constraint, ...] = ()
    quadratic: bool = True

    @property
    def params(self) -> Tuple[str, ...]:
        return tuple(self.defaults)

    def resolve(self, params: Optional[Mapping[str, ScalarLike]] = None) -> Params:
        params = dict(params or {})
        unknown = sorted(set(params) - set(self.defaults))
        if unknown:
            raise InputError(f"{self.key} has no parameter(s) {', '.join(unknown)}")
        resolved = {
            name: as_scalar(params.get(name, default)) for name, default in self.defaults.items()
        }
        for name in self.defaults:
            if name not in params:
                value = format_rational(resolved[name])
                log.warning("%s: parameter %s unbound, using %s", self.key, name, value)
        for constraint in self.constraints:
            if not constraint.check(resolved):
                raise PreconditionError(f"{self.key}: {constraint.description}")
        return resolved

    def build(self, params: Optional[Mapping[str, ScalarLike]] = None) -> Built:
        resolved = self.resolve(params)
        # builders take the parameters positionally, in the order of `defaults`
        built = self.builder(*resolved.values())
        log.debug("built %s with %s", self.key, resolved)
        return built

    def describe(self) -> str:
        line = self.key
        if self.defaults:
            defaults = ", ".join(f"{k}={format_rational(v)}" for k, v in self.defaults.items())
            line += f"({defaults})"
        notes = "; ".join(c.description for c in self.constraints)
        line += f"  {self.description} [{self.source}]"
        return line + (f" requires {notes}" if notes else "")


_ENTRIES: Dict[str, CatalogEntry] = {}


def register(entry: CatalogEntry) -> CatalogEntry:
    if entry.key in _ENTRIES:
        raise InputError(f"catalog key {entry.key} registered twice")
    _ENTRIES[entry.key] = entry
    return entry


def entry(key: str) -> CatalogEntry:
    try:
        return _ENTRIES[key]
    except KeyError:
        raise InputError(f"unknown catalog key {key!r}") from None


def list_entries() -> List[CatalogEntry]:
    return [_ENTRIES[key] for key in sorted(_ENTRIES)]


def build(key: str, params: Optional[Mapping[str, ScalarLike]] = None) -> Built:
    return entry(key).build(params)


# Shared constraint helpers


def nonzero(name: str) -> Constraint:
    return Constraint(f"{name} != 0", lambda p: p[name] != 0)


def integer_at_least(name: str, minimum: int = 0, even: bool = False) -> Constraint:
    kind = "an even integer" if even else "an integer"
    return Constraint(
        f"{name} {kind} >= {minimum}",
        lambda p: p[name].denominator == 1
        and p[name] >= minimum
        and (not even or p[name].numerator % 2 == 0),
    )


def equals(name: str, value: int) -> Constraint:
    return Constraint(f"{name} = {value}", lambda p: p[name] == value)
