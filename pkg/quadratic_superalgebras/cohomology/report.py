# Machine-readable cohomology reports

from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field

from .groups import CohomologyResult

REPORT_SCHEMA = 1


class CohomologyEntry(BaseModel):
    # One degree of a Betti table

    degree: int = Field(ge=0, description="Cochain degree k")
    dim_cochains: int = Field(ge=0, description="dim C^k")
    dim_cocycles: int = Field(ge=0, description="dim Z^k = dim Ker δ_k")
    dim_coboundaries: int = Field(ge=0, description="dim B^k = dim Im δ_{k-1}")
    betti: int = Field(ge=0, description="b_k = dim Z^k - dim B^k")
    representatives: List[str] = Field(default_factory=list, description="Class representatives")

    @classmethod
    def from_result(cls, result: CohomologyResult, with_representatives: bool = True):
        return cls(
            degree=result.degree,
            dim_cochains=result.dim_cochains,
            dim_cocycles=result.dim_cocycles,
            dim_coboundaries=result.dim_coboundaries,
            betti=result.betti,
            representatives=[r.format() for r in result.representatives]
            if with_representatives
            else [],
        )


class CohomologyReport(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    schema_version: int = Field(default=REPORT_SCHEMA, alias="schema", description="Report format")
    algebra: str = Field(description="Catalog key or document name")
    parameters: Dict[str, str] = Field(default_factory=dict, description="Rational parameters")
    results: List[CohomologyEntry] = Field(default_factory=list)

    @classmethod
    def build(
        cls,
        algebra: str,
        results: List[CohomologyResult],
        parameters: Optional[Dict[str, str]] = None,
        with_representatives: bool = True,
    ) -> "CohomologyReport":
        return cls(
            algebra=algebra,
            parameters=parameters or {},
            results=[CohomologyEntry.from_result(r, with_representatives) for r in results],
        )

    def to_json(self) -> str:
        return self.model_dump_json(by_alias=True, indent=2)

    def render_text(self) -> str:
        lines = [f"{self.algebra}"]
        if self.parameters:
            lines[0] += " (" + ", ".join(f"{k}={v}" for k, v in self.parameters.items()) + ")"
        lines.append(f"{'k':>3} {'dim C^k':>8} {'dim Z^k':>8} {'dim B^k':>8} {'b_k':>5}")
        for entry in self.results:
            lines.append(
                f"{entry.degree:>3} {entry.dim_cochains:>8} {entry.dim_cocycles:>8} "
                f"{entry.dim_coboundaries:>8} {entry.betti:>5}"
            )
            for representative in entry.representatives:
                lines.append(f"      [{representative}]")
        return "\n".join(lines)
