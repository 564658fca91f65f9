# JSON algebra documents: basis, brackets and an optional invariant form
# Coefficients are rational strings "p/q"; omitted bracket pairs are zero.

import json
import logging
from pathlib import Path
from typing import List, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from ..core.algebra import GradedBasis, LieSuperalgebra
from ..core.errors import InputError
from ..core.scalars import format_rational, parse_rational
from ..quadratic.form import BilinearForm, QuadraticLieSuperalgebra

log = logging.getLogger(__name__)

DOCUMENT_SCHEMA = 1


class BasisElement(BaseModel):
    label: str = Field(min_length=1, description="Basis vector name")
    parity: int = Field(ge=0, le=1, description="0 even, 1 odd")


class Term(BaseModel):
    coeff: str = Field(description="Rational coefficient p/q")
    basis: str = Field(description="Label of the basis vector")

    @field_validator("coeff")
    @classmethod
    def rational_coeff(cls, v: str) -> str:
        # InputError is a ValueError, so pydantic reports it against the field
        parse_rational(v)
        return v


class BracketEntry(BaseModel):
    left: str
    right: str
    terms: List[Term] = Field(default_factory=list)


class FormEntry(BaseModel):
    left: str
    right: str
    value: str = Field(description="Rational value p/q")

    @field_validator("value")
    @classmethod
    def rational_value(cls, v: str) -> str:
        parse_rational(v)
        return v


class AlgebraDocument(BaseModel):
    schema_version: int = Field(default=DOCUMENT_SCHEMA, alias="schema")
    name: str = Field(default="", description="Algebra name")
    basis: List[BasisElement] = Field(description="Even vectors first")
    brackets: List[BracketEntry] = Field(default_factory=list)
    form: Optional[List[FormEntry]] = Field(default=None, description="Absent for plain algebras")

    model_config = ConfigDict(populate_by_name=True)

    def to_algebra(self) -> Union[QuadraticLieSuperalgebra, LieSuperalgebra]:
        labels = tuple(b.label for b in self.basis)
        graded = GradedBasis(labels, tuple(b.parity for b in self.basis))
        brackets = [
            (entry.left, entry.right, {t.basis: parse_rational(t.coeff) for t in entry.terms})
            for entry in self.brackets
        ]
        algebra = LieSuperalgebra.from_brackets(graded, brackets, self.name)
        if self.form is None:
            return algebra
        pairs = [(f.left, f.right, parse_rational(f.value)) for f in self.form]
        return QuadraticLieSuperalgebra(algebra, BilinearForm.from_pairs(graded, pairs))

    @classmethod
    def from_algebra(
        cls, algebra: Union[QuadraticLieSuperalgebra, LieSuperalgebra]
    ) -> "AlgebraDocument":
        g = algebra.algebra if isinstance(algebra, QuadraticLieSuperalgebra) else algebra
        form = None
        if isinstance(algebra, QuadraticLieSuperalgebra):
            # both orders are written so that non-supersymmetric forms survive a round trip
            gram = algebra.form.gram
            form = [
                FormEntry(left=g.labels[i], right=g.labels[j], value=format_rational(gram[i][j]))
                for i in range(g.dim)
                for j in range(g.dim)
                if gram[i][j]
            ]
        return cls(
            name=g.name,
            basis=[
                BasisElement(label=label, parity=p) for label, p in zip(g.labels, g.basis.parity)
            ],
            brackets=[
                BracketEntry(
                    left=left,
                    right=right,
                    terms=[Term(coeff=format_rational(c), basis=k) for k, c in vector.items()],
                )
                for left, right, vector in g.structure_table()
            ],
            form=form,
        )

    def to_json(self) -> str:
        return self.model_dump_json(by_alias=True, indent=2, exclude_none=True)


def loads(text: str) -> Union[QuadraticLieSuperalgebra, LieSuperalgebra]:
    try:
        document = AlgebraDocument.model_validate(json.loads(text))
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON: {exc.msg} at line {exc.lineno}") from None
    except ValidationError as exc:
        first = exc.errors()[0]
        where = ".".join(str(part) for part in first["loc"])
        raise InputError(f"invalid algebra document at {where}: {first['msg']}") from None
    return document.to_algebra()


def load(path: Union[str, Path]) -> Union[QuadraticLieSuperalgebra, LieSuperalgebra]:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    algebra = loads(text)
    log.debug("loaded %s from %s", getattr(algebra, "name", ""), path)
    return algebra


def dumps(algebra: Union[QuadraticLieSuperalgebra, LieSuperalgebra]) -> str:
    return AlgebraDocument.from_algebra(algebra).to_json()


def dump(algebra: Union[QuadraticLieSuperalgebra, LieSuperalgebra], path: Union[str, Path]):
    Path(path).write_text(dumps(algebra) + "\n")
