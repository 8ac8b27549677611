from __future__ import annotations

import re

import jinja2

from qimsim.bench.schema import BenchModel
from qimsim.exceptions import SerializerError
from qimsim.locations import TEMPLATES_DIR
from qimsim.optics import SampledMask

BARE_WORD = re.compile(r"[^\s=:#\"]+")


def path_token(path: object) -> str:
    """Path as one bench word, double-quoted when it would not survive bare."""
    text = str(path)
    if BARE_WORD.fullmatch(text):
        return text
    if '"' in text:
        raise SerializerError(f"Mask file path {text!r} contains a double quote.")
    return f'"{text}"'


_JINJA_ENV = jinja2.Environment(
    loader=jinja2.FileSystemLoader(TEMPLATES_DIR),
    undefined=jinja2.StrictUndefined,
    trim_blocks=True,
    lstrip_blocks=True,
    keep_trailing_newline=True,
    autoescape=False,
)
_JINJA_ENV.filters["num"] = lambda value: repr(float(value))
_JINJA_ENV.filters["path"] = path_token


def render(model: BenchModel) -> str:
    """Canonical bench text; parsing it gives back ``model``."""
    for arm in (model.arm_a, model.arm_b):
        if any(isinstance(getattr(e, "profile", None), SampledMask) for e in arm.elements):
            raise SerializerError(
                "In-memory sampled masks have no bench form; write them to a mask file."
            )
    template = _JINJA_ENV.get_template("bench.j2")
    return template.render(
        bench=model,
        source=model.source,
        grid=model.grid,
        arms=list(model.arms().items()),
    )
