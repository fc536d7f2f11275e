#!/usr/bin/env python3
from __future__ import annotations

from typing import Any, ClassVar, Dict, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..modelparse import OUTPUT_FORMATS

DEGREE_CONVENTION = "cohomological degrees; an Adams-Hilton chain of degree q sits in degree -q"

Command = Literal["check", "ext", "invariants"]


class RunConfig(BaseModel):
    """One validated command invocation."""

    model_config = ConfigDict(frozen=True, extra="forbid", protected_namespaces=())

    command: Command
    model_path: Optional[str] = None
    builtin: Optional[str] = None
    field: Optional[str] = None
    window: Optional[Tuple[int, int]] = None
    weight_margin: Optional[int] = Field(default=None, ge=1)
    n: int = Field(default=2, ge=2)
    m_max: int = Field(default=8, ge=0)
    output_format: str = "json"
    cache_dir: Optional[str] = None
    use_cache: bool = True

    @field_validator("window")
    @classmethod
    def _window_nonempty(cls, value: Optional[Tuple[int, int]]) -> Optional[Tuple[int, int]]:
        if value is not None and value[0] > value[1]:
            raise ValueError(f"window {value[0]}..{value[1]} is empty")
        return value

    @field_validator("output_format")
    @classmethod
    def _known_format(cls, value: str) -> str:
        if value not in OUTPUT_FORMATS:
            raise ValueError(f"output format must be one of {', '.join(OUTPUT_FORMATS)}, got {value!r}")
        return value

    @model_validator(mode="after")
    def _one_source(self) -> "RunConfig":
        if (self.model_path is None) == (self.builtin is None):
            raise ValueError("give exactly one of a model file or --builtin")
        return self


class ModelInfo(BaseModel):
    name: str
    flavor: str
    field: str
    generators: Dict[str, int]


class CheckReport(BaseModel):
    model: ModelInfo
    valid: bool
    minimal: bool
    linear_part: Dict[str, Dict[str, str]]
    linear_part_note: str
    linear_homology: Optional[Dict[str, int]] = None
    connectivity: str
    degree_convention: str = DEGREE_CONVENTION


class VerdictEntry(BaseModel):
    verdict: str
    reason: str = ""


class EvaluationEntry(BaseModel):
    ext_class: str
    degree: int
    image: Dict[str, str]


class DualityEntry(BaseModel):
    ok: bool
    top_degree: Optional[int] = None
    reason: str = ""


class ExtReport(BaseModel):
    # Emitted as null rather than dropped when unset.
    always_present: ClassVar[Tuple[str, ...]] = ("evaluation",)

    model: ModelInfo
    window: Tuple[int, int]
    dims: Dict[str, int]
    stability: Dict[str, str]
    weight_margin: Optional[int] = None
    gorenstein: VerdictEntry
    formal_dimension: Union[int, str]
    formal_dimension_status: str
    evaluation: Optional[List[EvaluationEntry]] = None
    evaluation_nonzero: Optional[bool] = None
    evaluation_note: Optional[str] = None
    base_cohomology: Optional[Dict[str, int]] = None
    poincare_duality: Optional[DualityEntry] = None
    products: Optional[List[Dict[str, Any]]] = None
    unit: Optional[str] = None
    unit_note: Optional[str] = None
    checks: Dict[str, Any] = Field(default_factory=dict)
    degree_convention: str = DEGREE_CONVENTION


class InvariantEntry(BaseModel):
    value: Union[int, str]
    exact: bool
    note: str = ""


class CriterionEntry(BaseModel):
    verdict: str
    m: Optional[int] = None
    reason: str = ""
    witness: Dict[str, Any] = Field(default_factory=dict)


class InvariantReport(BaseModel):
    model: ModelInfo
    n: int
    m_max: int
    window: Tuple[int, int]
    gorenstein: VerdictEntry
    formal_dimension: Union[int, str]
    zcl: InvariantEntry
    htc: InvariantEntry
    ext_zcl: InvariantEntry
    htc_ext: InvariantEntry
    criterion: CriterionEntry
    product_length: Optional[int] = None
    ext_product_length: Optional[int] = None
    chain: Dict[str, Optional[bool]]
    degree_convention: str = DEGREE_CONVENTION
