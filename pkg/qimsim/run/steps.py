"""Pure computation steps of a bench run, wired together by :mod:`qimsim.run.pipeline`."""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from qimsim.bench.schema import BenchModel
from qimsim.detection import CoincidenceMap
from qimsim.detection import Pattern
from qimsim.detection import biphoton_amplitude
from qimsim.detection import classical_coincidence
from qimsim.detection import classical_coincidence_map
from qimsim.detection import coincidence_pattern
from qimsim.detection import fringe_spacing
from qimsim.detection import image_error
from qimsim.detection import klyshko_closed_form
from qimsim.detection import klyshko_mc
from qimsim.detection import reference_pattern
from qimsim.detection import rms_deviation
from qimsim.detection import singles_pattern
from qimsim.detection import visibility
from qimsim.detection.patterns import finish
from qimsim.exceptions import NoFringes
from qimsim.grid import Axis
from qimsim.grid import WaveContext
from qimsim.optics import DoubleSlit
from qimsim.optics import FreeSpace
from qimsim.optics import Mask
from qimsim.optics import PointArray
from qimsim.optics import ThinLens
from qimsim.optics import TransferMatrix
from qimsim.optics import arm_transfer
from qimsim.sources import BiphotonSource
from qimsim.sources import ClassicalEnsemble
from qimsim.sources import RandomPhaseEnsemble
from qimsim.sources import SourceModel

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class RunPatterns:
    """Every pattern a run produces; only ``coincidence`` is always present."""

    coincidence: Pattern
    singles: Pattern | None = None
    closed_form: Pattern | None = None
    stderr: Pattern | None = None
    coincidence_map: CoincidenceMap | None = None


def wave_context(bench: BenchModel) -> WaveContext:
    return bench.context


def axes(bench: BenchModel) -> tuple[Axis, Axis]:
    return bench.grid.arm_axis, bench.grid.mode_axis


def transfer_a(
    bench: BenchModel, ctx: WaveContext, grid: Axis, mode_axis: Axis
) -> TransferMatrix:
    return arm_transfer(bench.arm_a, ctx, mode_axis, grid)


def transfer_b(
    bench: BenchModel, ctx: WaveContext, grid: Axis, mode_axis: Axis
) -> TransferMatrix:
    return arm_transfer(bench.arm_b, ctx, mode_axis, grid)


def source(bench: BenchModel, seed: int) -> SourceModel:
    return bench.source.build(bench.pump, seed)


def _marginal(cmap: CoincidenceMap, raw: bool) -> Pattern:
    return finish(cmap.axis2, cmap.values.sum(axis=0) * cmap.axis1.spacing, raw)


def patterns(
    bench: BenchModel,
    source: SourceModel,
    g_a: TransferMatrix,
    g_b: TransferMatrix,
    realizations: int,
    raw: bool,
) -> RunPatterns:
    """
    Coincidence pattern over arm B's detector for the bench's source.

    When arm A ends in a point array the full map is returned too, and the
    main pattern is its sum over arm A's array.
    """
    detector1 = bench.arm_a.detector
    match source:
        case BiphotonSource():
            ampl = biphoton_amplitude(g_a, g_b, source)
            singles = (
                singles_pattern(g_b, source, g_a, raw)
                if isinstance(bench.arm_b.detector, PointArray)
                else None
            )
            if isinstance(detector1, PointArray):
                cmap = CoincidenceMap(ampl.axis1, ampl.axis2, np.abs(ampl.values) ** 2)
                cmap = cmap if raw else cmap.normalized()
                return RunPatterns(_marginal(cmap, raw), singles, coincidence_map=cmap)
            return RunPatterns(coincidence_pattern(ampl, detector1, raw), singles)
        case ClassicalEnsemble():
            if isinstance(detector1, PointArray):
                cmap = classical_coincidence_map(source, g_a, g_b, raw)
                return RunPatterns(_marginal(cmap, raw), coincidence_map=cmap)
            return RunPatterns(classical_coincidence(source, g_a, g_b, detector1, raw))
        case RandomPhaseEnsemble():
            result = klyshko_mc(source, g_a, g_b, realizations, detector1, raw)
            closed = klyshko_closed_form(source, g_a, g_b, detector1, raw)
            stderr = Pattern(result.pattern.axis, result.stderr)
            return RunPatterns(result.pattern, closed_form=closed, stderr=stderr)


def predicted_spacing(bench: BenchModel, ctx: WaveContext) -> float | None:
    """
    Expected fringe spacing for double-slit benches, or None for other geometries.

    Pair sources without lenses give z lambda / d_s with z the free-space path
    from the object back through the source to detector 2. A classically
    correlated source with no lens in arm A and one in arm B gives
    f2 lambda / (epsilon d_s).
    """
    mask = bench.arm_a.first_mask()
    if mask is None or not isinstance(mask.profile, DoubleSlit):
        return None
    d_s = mask.profile.d
    lenses_a = [e for e in bench.arm_a.elements if isinstance(e, ThinLens)]
    lenses_b = [e for e in bench.arm_b.elements if isinstance(e, ThinLens)]
    match bench.source.kind.value:
        case "spdc" if not lenses_a and not lenses_b:
            before_mask = []
            for elem in bench.arm_a.elements:
                if isinstance(elem, Mask):
                    break
                before_mask.append(elem)
            z = sum(e.d for e in before_mask if isinstance(e, FreeSpace))
            z += sum(e.d for e in bench.arm_b.elements if isinstance(e, FreeSpace))
            return z * ctx.wavelength / d_s
        case "classical" if not lenses_a and len(lenses_b) == 1:
            return lenses_b[0].f * ctx.wavelength / (abs(bench.source.epsilon) * d_s)
        case _:
            return None


def metrics(
    bench: BenchModel, ctx: WaveContext, patterns: RunPatterns
) -> dict[str, float | None]:
    main = patterns.coincidence
    try:
        spacing: float | None = fringe_spacing(main)
    except NoFringes as e:
        logger.debug(f"No fringe spacing: {e}")
        spacing = None
    values: dict[str, float | None] = {
        "visibility": visibility(main),
        "fringe_spacing": spacing,
        "predicted_spacing": predicted_spacing(bench, ctx),
    }
    if bench.reference is not None:
        mask = bench.arm_a.first_mask()
        reference = reference_pattern(mask.profile, main.axis, bench.reference.scale)
        values["image_error"] = image_error(main, reference)
    if patterns.singles is not None:
        values["singles_visibility"] = visibility(patterns.singles)
    if patterns.closed_form is not None:
        values["klyshko_rms"] = rms_deviation(main, patterns.closed_form)
    return values
