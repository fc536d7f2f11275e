#!/usr/bin/env python3
from __future__ import annotations

from typing import Any, Dict, List, Mapping, Optional, Tuple

from .. import __version__
from ..algebra import DgaPresentation
from ..extcalc import (
    ExtAlgebra,
    class_products,
    cohomology_algebra,
    evaluation_map,
    ext_algebra_table,
    formal_dimension,
    gorenstein_test,
)
from ..linalg import FieldSpec
from ..modelparse import parse_document, presentation_from_document, print_model
from ..models import build_builtin
from ..tcinv import InvariantValue, compute_invariants
from ..utils.logging_config import (
    get_logger,
    log_error_with_context,
    log_function_call,
    log_function_result,
)
from .loaders import SettingsLoader
from .schemas import (
    CheckReport,
    CriterionEntry,
    DualityEntry,
    EvaluationEntry,
    ExtReport,
    InvariantEntry,
    InvariantReport,
    ModelInfo,
    RunConfig,
    VerdictEntry,
)
from .validators import SettingsValidator


def _format_vector(field_spec: FieldSpec, labels: Tuple[str, ...], vec: Mapping[int, Any]) -> str:
    if not vec:
        return "0"
    parts = []
    for i, c in sorted(vec.items()):
        coeff = field_spec.format(c)
        parts.append(labels[i] if coeff == "1" else f"{coeff}*{labels[i]}")
    return " + ".join(parts)


class EngineFactory:
    """Turns settings and run options into presentations, windows and reports."""

    def __init__(self, settings_path: Optional[str] = None):
        self.logger = get_logger("gorext.settings.factory")
        try:
            self.loader = SettingsLoader(settings_path)
            self.validator = SettingsValidator()
            self.settings = self.loader.load()
            self.validator.validate(self.settings)
        except Exception as e:
            log_error_with_context(self.logger, e, "EngineFactory initialization")
            raise
        self.logger.info("EngineFactory initialized", settings_path=self.loader.settings_path)

    # settings ------------------------------------------------------------

    @property
    def engine(self) -> Dict[str, Any]:
        return self.settings["engine"]

    @property
    def builtins(self) -> Dict[str, Any]:
        return self.settings["builtins"]

    @property
    def cache_directory(self) -> str:
        return self.settings["cache"]["directory"]

    def run_config(self, command: str, **options: Any) -> RunConfig:
        """RunConfig with unset options taken from the settings defaults."""
        values = {k: v for k, v in options.items() if v is not None}
        values.setdefault("n", self.settings["invariants"]["n"])
        values.setdefault("m_max", self.settings["invariants"]["m_max"])
        values.setdefault("output_format", self.settings["output"]["format"])
        values.setdefault("use_cache", self.settings["cache"]["enabled"])
        if self.engine.get("weight_margin") is not None:
            values.setdefault("weight_margin", self.engine["weight_margin"])
        return RunConfig(command=command, **values)

    # inputs ------------------------------------------------------------------

    def catalog_entry(self, builtin: Optional[str]) -> Optional[Dict[str, Any]]:
        """The builtins.yaml entry named by a --builtin value, if it names one."""
        if builtin is None:
            return None
        return self.builtins.get(builtin.strip())

    def load_presentation(self, config: RunConfig) -> DgaPresentation:
        field_spec = FieldSpec.parse(config.field) if config.field else None
        if config.builtin is not None:
            entry = self.catalog_entry(config.builtin)
            if entry is None:
                return build_builtin(config.builtin, field_spec)
            if field_spec is None and entry.get("field"):
                field_spec = FieldSpec.parse(entry["field"])
            return build_builtin(entry["spec"], field_spec)
        assert config.model_path is not None
        with open(config.model_path, "r", encoding="utf-8") as f:
            doc = parse_document(f.read())
        if field_spec is not None:
            doc.field_spec = field_spec
        name = config.model_path.rsplit("/", 1)[-1].rsplit(".", 1)[0]
        return presentation_from_document(doc, name)

    def resolve_window(self, config: RunConfig, pres: DgaPresentation) -> Tuple[int, int]:
        """The requested window, else the catalog suggestion, else [-g, factor·g].

        g is the sum of the generator degrees.
        """
        if config.window is not None:
            return config.window
        entry = self.catalog_entry(config.builtin)
        if entry is not None and entry.get("window"):
            lo, hi = entry["window"]
            return (lo, hi)
        guess = sum(g.degree for g in pres.generators)
        return (-guess, self.engine["window_factor"] * guess)

    def cache_material(
        self, config: RunConfig, pres: DgaPresentation, window: Tuple[int, int]
    ) -> Dict[str, Any]:
        material: Dict[str, Any] = {
            "command": config.command,
            "model": print_model(pres),
            "field": pres.field_spec.label,
            "window": list(window),
            "weight_margin": config.weight_margin,
            "version": __version__,
        }
        if config.command == "invariants":
            material.update(n=config.n, m_max=config.m_max)
        return material

    @staticmethod
    def model_info(pres: DgaPresentation) -> ModelInfo:
        return ModelInfo(
            name=pres.name or "model",
            flavor=pres.flavor.value,
            field=pres.field_spec.label,
            generators={g.name: g.degree for g in pres.generators},
        )

    # commands ----------------------------------------------------------------

    def run(self, config: RunConfig, pres: Optional[DgaPresentation] = None) -> Any:
        pres = pres or self.load_presentation(config)
        if config.command == "check":
            return self.check(pres)
        window = self.resolve_window(config, pres)
        if config.command == "ext":
            return self.ext(pres, window, config.weight_margin)
        return self.invariants(pres, window, config.n, config.m_max, config.weight_margin)

    def check(self, pres: DgaPresentation) -> CheckReport:
        log_function_call(self.logger, "check", model=pres.name)
        field_spec = pres.field_spec
        linear = {
            gen: {target: field_spec.to_json(c) for target, c in sorted(terms.items())}
            for gen, terms in pres.linear_part().items()
            if terms
        }
        if pres.commutative:
            connectivity = "sullivan generators in degrees >= 2 (simply connected)"
            homology = None
        else:
            connectivity = "adams-hilton generators in degrees >= 1 (chains on a loop space)"
            homology = {str(k): v for k, v in pres.linear_homology().items()}
        return CheckReport(
            model=self.model_info(pres),
            valid=True,
            minimal=pres.is_minimal,
            linear_part=linear,
            linear_part_note="linear part vanishes" if not linear else "linear part is nonzero",
            linear_homology=homology,
            connectivity=connectivity,
        )

    def ext_algebra(
        self, pres: DgaPresentation, window: Tuple[int, int], margin: Optional[int]
    ) -> ExtAlgebra:
        return ext_algebra_table(
            pres,
            window,
            margin,
            seed=self.engine["lift_seed"],
            stability_step=self.engine["stability_step"],
            check_stability=self.engine["check_stability"],
        )

    def ext(
        self, pres: DgaPresentation, window: Tuple[int, int], margin: Optional[int] = None
    ) -> ExtReport:
        log_function_call(self.logger, "ext", model=pres.name, window=window)
        ext = self.ext_algebra(pres, window, margin)
        field_spec = pres.field_spec
        report: Dict[str, Any] = {
            "model": self.model_info(pres),
            "window": window,
            "dims": {str(p): d for p, d in ext.dims.items()},
            "stability": {str(p): flag for p, flag in ext.stability.items()},
            "weight_margin": ext.margin,
            "checks": ext.checks,
        }
        base_finite: Optional[bool] = None
        if pres.commutative:
            base = cohomology_algebra(pres)
            base_finite = base.finite
            duality = base.poincare_duality()
            report["base_cohomology"] = {str(d): base.dim(d) for d in base.degrees()}
            report["poincare_duality"] = DualityEntry(
                ok=duality.ok, top_degree=duality.top_degree, reason=duality.reason
            )
            ev = evaluation_map(ext)
            labels = ext.class_labels()
            base_labels = pres.base_homology(ext.degrees_with_classes())
            report["evaluation"] = [
                EvaluationEntry(
                    ext_class=labels[image.degree][image.index],
                    degree=image.degree,
                    image={
                        f"h{image.degree}.{k}" if base_labels[image.degree].dimension > 1
                        else f"h{image.degree}": field_spec.to_json(c)
                        for k, c in sorted(image.coordinates.items())
                    },
                )
                for image in ev.images
            ]
            report["evaluation_nonzero"] = ev.nonzero
            report["products"] = class_products(ext)
            if ext.unit is not None:
                report["unit"] = _format_vector(field_spec, labels.get(0, ()), ext.unit)
            else:
                report["unit_note"] = ext.unit_note
        else:
            report["evaluation_note"] = "evaluation map is defined for sullivan models only"
        verdict = gorenstein_test(ext, base_finite)
        fd = formal_dimension(ext)
        report["gorenstein"] = VerdictEntry(verdict=verdict.verdict, reason=verdict.reason)
        report["formal_dimension"] = fd.to_json()
        report["formal_dimension_status"] = fd.status
        result = ExtReport(**report)
        log_function_result(self.logger, "ext", gorenstein=verdict.verdict, fd=fd.to_json())
        return result

    def invariants(
        self,
        pres: DgaPresentation,
        window: Tuple[int, int],
        n: int,
        m_max: int,
        margin: Optional[int] = None,
    ) -> InvariantReport:
        log_function_call(self.logger, "invariants", model=pres.name, n=n, m_max=m_max)
        ext = self.ext_algebra(pres, window, margin)
        summary = compute_invariants(pres, n, window, m_max, margin, ext)
        verdict = gorenstein_test(ext)

        def entry(value: InvariantValue) -> InvariantEntry:
            return InvariantEntry(value=value.to_json(m_max), exact=value.exact, note=value.note)

        criterion = summary.criterion
        return InvariantReport(
            model=self.model_info(pres),
            n=n,
            m_max=m_max,
            window=window,
            gorenstein=VerdictEntry(verdict=verdict.verdict, reason=verdict.reason),
            formal_dimension=formal_dimension(ext).to_json(),
            zcl=entry(summary.zcl),
            htc=entry(summary.htc_lower),
            ext_zcl=entry(summary.ext_zcl),
            htc_ext=entry(summary.htc_ext),
            criterion=CriterionEntry(
                verdict=criterion.verdict,
                m=criterion.m,
                reason=criterion.reason,
                witness=criterion.witness,
            ),
            product_length=summary.product_length,
            ext_product_length=summary.ext_product_length,
            chain=summary.chain,
        )

    def builtin_entries(self) -> List[Dict[str, Any]]:
        """Catalog rows of builtins.yaml, sorted by name."""
        return [{"name": name, **entry} for name, entry in sorted(self.builtins.items())]
