"""Line-oriented parser for ``.bench`` files.

A bench starts with ``pump wavelength_nm=NUM`` and describes one source and
two arms, one statement per line::

    pump wavelength_nm=351
    source spdc
    arm A:
      free d=0.2
      mask double_slit d=5e-4 a=1e-4
      detector farfield_point
    arm B:
      free d=0.8
      detector array min=-3e-3 max=3e-3 n=512

Every error is a :class:`BenchParseError` pointing at the first offending token.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from dataclasses import field
from pathlib import Path
from typing import Any

from pydantic import BaseModel
from pydantic import ValidationError

from qimsim.bench.schema import BenchModel
from qimsim.bench.schema import GridSpec
from qimsim.bench.schema import PumpSpec
from qimsim.bench.schema import ReferenceSpec
from qimsim.bench.schema import SourceSpec
from qimsim.exceptions import BenchParseError
from qimsim.optics import ArmSpec
from qimsim.optics import Bucket
from qimsim.optics import BucketMode
from qimsim.optics import DoubleSlit
from qimsim.optics import FarFieldPoint
from qimsim.optics import FileMask
from qimsim.optics import FreeSpace
from qimsim.optics import GaussianMask
from qimsim.optics import GaussianPupil
from qimsim.optics import Mask
from qimsim.optics import PointArray
from qimsim.optics import SingleSlit
from qimsim.optics import ThinLens

logger = logging.getLogger(__name__)

TOKEN_PATTERN = re.compile(
    r'(?P<comment>#.*)|(?P<quoted>"[^"]*")|(?P<eq>=)|(?P<colon>:)|(?P<space>\s+)'
    r"|(?P<word>[^\s=:#]+)"
)
LENS_MESSAGE = (
    "focal length must be nonzero; negative allowed only with flag --allow-diverging"
)
POSITIVE_KEYS = {"d", "a", "w", "A", "extent", "p_max", "wavelength_nm", "sigma"}
ARM_NAMES = ("A", "B")


@dataclass(frozen=True, slots=True)
class Token:
    kind: str
    text: str
    line: int
    column: int


def tokenize(text: str, line: int) -> list[Token]:
    """
    Tokens of one line with 1-based columns; a comment ends the line.

    A double-quoted run is a single word without its quotes, so values such as
    mask file paths may hold spaces, ``=``, ``:`` or ``#``.
    """
    tokens = []
    for match in TOKEN_PATTERN.finditer(text):
        kind = match.lastgroup
        if kind == "comment":
            break
        if kind == "quoted":
            tokens.append(Token("word", match.group()[1:-1], line, match.start() + 1))
        elif kind != "space":
            tokens.append(Token(kind, match.group(), line, match.start() + 1))
    return tokens


def _fail(message: str, token: Token) -> BenchParseError:
    return BenchParseError(message, token.line, token.column, token.text)


@dataclass(slots=True)
class _Options:
    pairs: dict[str, tuple[Token, Token]]
    flags: list[Token]


def _options(tokens: list[Token]) -> _Options:
    """Splits ``key=value`` pairs from bare words."""
    opts = _Options({}, [])
    i = 0
    while i < len(tokens):
        tok = tokens[i]
        if tok.kind != "word":
            raise _fail(f"unexpected '{tok.text}'", tok)
        if i + 1 < len(tokens) and tokens[i + 1].kind == "eq":
            if i + 2 >= len(tokens) or tokens[i + 2].kind != "word":
                raise _fail(f"missing value after '{tok.text}='", tokens[i + 1])
            if tok.text in opts.pairs:
                raise _fail(f"duplicate key '{tok.text}'", tok)
            opts.pairs[tok.text] = (tok, tokens[i + 2])
            i += 3
        else:
            opts.flags.append(tok)
            i += 1
    return opts


def _convert(key: Token, value: Token, kind: type) -> Any:
    if kind is str:
        return value.text
    try:
        number = kind(value.text)
    except ValueError:
        expected = "an integer" if kind is int else "a number"
        raise _fail(f"'{key.text}' expects {expected}", value) from None
    if key.text in POSITIVE_KEYS and not number > 0:
        raise _fail(f"'{key.text}' must be positive", value)
    return number


def _take(
    head: Token,
    opts: _Options,
    allowed: dict[str, type],
    required: tuple[str, ...] = (),
    flags: tuple[str, ...] = (),
) -> dict[str, Any]:
    for flag in opts.flags:
        if flag.text not in flags:
            raise _fail(f"unexpected '{flag.text}' in '{head.text}' statement", flag)
    values = {}
    for name, (key, value) in opts.pairs.items():
        if name not in allowed:
            raise _fail(f"unknown key '{name}' for '{head.text}'", key)
        values[name] = _convert(key, value, allowed[name])
    for name in required:
        if name not in values:
            raise _fail(f"'{head.text}' requires '{name}='", head)
    return values


def _build[M: BaseModel](model: type[M], token: Token, **kwargs: Any) -> M:
    try:
        return model(**kwargs)
    except ValidationError as e:
        message = e.errors()[0]["msg"].removeprefix("Value error, ")
        raise _fail(message, token) from e


@dataclass(slots=True)
class _ArmDraft:
    header: Token
    elements: list = field(default_factory=list)
    detector: Any = None


@dataclass(slots=True)
class _BenchDraft:
    base_dir: Path | None
    allow_diverging: bool
    heads: dict[str, Token] = field(default_factory=dict)
    pump: PumpSpec | None = None
    source: SourceSpec | None = None
    grid: GridSpec | None = None
    reference: ReferenceSpec | None = None
    arms: dict[str, _ArmDraft] = field(default_factory=dict)
    current: _ArmDraft | None = None

    def once(self, head: Token) -> None:
        if head.text in self.heads:
            raise _fail(f"duplicate '{head.text}' statement", head)
        self.heads[head.text] = head

    def statement(self, tokens: list[Token]) -> None:
        head = tokens[0]
        if head.kind != "word":
            raise _fail(f"unexpected '{head.text}'", head)
        if self.pump is None and head.text != "pump":
            raise _fail("bench must start with 'pump wavelength_nm=NUM'", head)
        match head.text:
            case "pump":
                self.once(head)
                opts = _options(tokens[1:])
                values = _take(head, opts, {"wavelength_nm": float}, ("wavelength_nm",))
                self.pump = _build(PumpSpec, head, **values)
            case "source":
                self.once(head)
                self.current = None
                self.source = self.parse_source(head, tokens[1:])
            case "grid":
                self.once(head)
                self.current = None
                allowed = {"n": int, "extent": float, "p_max": float, "modes": int}
                values = _take(head, _options(tokens[1:]), allowed)
                if not values:
                    raise _fail("'grid' needs one of n, extent, p_max, modes", head)
                self.grid = _build(GridSpec, head, **values)
            case "reference":
                self.once(head)
                self.current = None
                values = _take(head, _options(tokens[1:]), {"scale": float}, ("scale",))
                self.reference = _build(ReferenceSpec, head, **values)
            case "arm":
                self.arm_header(tokens)
            case "free" | "lens" | "mask" | "pupil":
                arm = self.open_arm(head)
                arm.elements.append(self.parse_element(head, tokens[1:]))
            case "detector":
                arm = self.open_arm(head)
                arm.detector = self.parse_detector(head, tokens[1:])
            case _:
                raise _fail(f"unknown statement '{head.text}'", head)

    def arm_header(self, tokens: list[Token]) -> None:
        head = tokens[0]
        if (
            len(tokens) != 3
            or tokens[1].text not in ARM_NAMES
            or tokens[2].kind != "colon"
        ):
            token = tokens[1] if len(tokens) > 1 else head
            raise _fail("arm header must read 'arm A:' or 'arm B:'", token)
        name = tokens[1].text
        if name in self.arms:
            raise _fail(f"duplicate arm {name}", tokens[1])
        self.current = self.arms[name] = _ArmDraft(head)

    def open_arm(self, head: Token) -> _ArmDraft:
        if self.current is None:
            raise _fail(f"'{head.text}' outside an arm", head)
        if self.current.detector is not None:
            name = next(k for k, v in self.arms.items() if v is self.current)
            raise _fail(f"'{head.text}' after the detector of arm {name}", head)
        return self.current

    def parse_source(self, head: Token, tokens: list[Token]) -> SourceSpec:
        if not tokens or tokens[0].text not in ("spdc", "classical", "randomphase"):
            token = tokens[0] if tokens else head
            raise _fail("source must be one of spdc, classical, randomphase", token)
        kind = tokens[0].text
        allowed: dict[str, type] = {
            "profile": str,
            "sigma": float,
            "seed": int,
            "realizations": int,
        }
        required: tuple[str, ...] = ()
        if kind == "classical":
            allowed["epsilon"] = float
            required = ("epsilon",)
        values = _take(tokens[0], _options(tokens[1:]), allowed, required)
        return _build(SourceSpec, tokens[0], kind=kind, **values)

    def parse_element(self, head: Token, tokens: list[Token]) -> Any:
        match head.text:
            case "free":
                values = _take(head, _options(tokens), {"d": float}, ("d",))
                return _build(FreeSpace, head, **values)
            case "lens":
                values = _take(head, _options(tokens), {"f": float}, ("f",))
                f = values["f"]
                if f == 0 or (f < 0 and not self.allow_diverging):
                    raise _fail(LENS_MESSAGE, _options(tokens).pairs["f"][1])
                return _build(ThinLens, head, **values)
            case "pupil":
                values = _take(head, _options(tokens), {"A": float}, ("A",))
                return _build(GaussianPupil, head, **values)
            case "mask":
                return _build(Mask, head, profile=self.parse_mask(head, tokens))

    def parse_mask(self, head: Token, tokens: list[Token]) -> Any:
        if not tokens:
            raise _fail("mask needs a kind or file=PATH", head)
        kind = tokens[0]
        if kind.text == "file":
            values = _take(head, _options(tokens), {"file": str}, ("file",))
            path = Path(values["file"])
            if self.base_dir is not None and not path.is_absolute():
                path = self.base_dir / path
            return _build(FileMask, kind, path=path)
        opts = _options(tokens[1:])
        match kind.text:
            case "double_slit":
                allowed = {"d": float, "a": float, "offset": float}
                values = _take(kind, opts, allowed, ("d", "a"))
                return _build(DoubleSlit, kind, **values)
            case "single_slit":
                values = _take(kind, opts, {"a": float, "offset": float}, ("a",))
                return _build(SingleSlit, kind, **values)
            case "gaussian":
                values = _take(kind, opts, {"w": float, "offset": float}, ("w",))
                return _build(GaussianMask, kind, **values)
            case _:
                raise _fail(f"unknown mask kind '{kind.text}'", kind)

    def parse_detector(self, head: Token, tokens: list[Token]) -> Any:
        if not tokens:
            raise _fail("detector needs a kind: bucket, array or farfield_point", head)
        kind, opts = tokens[0], _options(tokens[1:])
        match kind.text:
            case "bucket":
                _take(kind, opts, {}, flags=("amplitude", "intensity"))
                amplitude = any(flag.text == "amplitude" for flag in opts.flags)
                mode = BucketMode.AMPLITUDE if amplitude else BucketMode.INTENSITY
                return _build(Bucket, kind, mode=mode)
            case "array":
                allowed = {"min": float, "max": float, "n": int}
                values = _take(kind, opts, allowed, ("min", "max", "n"))
                return _build(
                    PointArray,
                    kind,
                    x_min=values["min"],
                    x_max=values["max"],
                    n=values["n"],
                )
            case "farfield_point":
                _take(kind, opts, {})
                return _build(FarFieldPoint, kind)
            case _:
                raise _fail(f"unknown detector kind '{kind.text}'", kind)

    def finish(self) -> BenchModel:
        if self.pump is None:
            raise BenchParseError("empty bench; expected a pump statement", 1, 1, "")
        pump_head = self.heads["pump"]
        arms = {}
        for name in ARM_NAMES:
            draft = self.arms.get(name)
            if draft is None:
                raise _fail(f"bench has no arm {name}", pump_head)
            if draft.detector is None:
                raise _fail(
                    f"arm {name} has no detector; an arm must end with 'detector ...'",
                    draft.header,
                )
            if not draft.elements:
                raise _fail(f"arm {name} needs at least one element", draft.header)
            arms[name] = ArmSpec(
                elements=tuple(draft.elements), detector=draft.detector
            )
        values: dict[str, Any] = {
            "pump": self.pump,
            "arm_a": arms["A"],
            "arm_b": arms["B"],
        }
        if self.source is not None:
            values["source"] = self.source
        if self.grid is not None:
            values["grid"] = self.grid
        if self.reference is not None:
            values["reference"] = self.reference
        return _build(BenchModel, self.heads.get("reference", pump_head), **values)


def parse(
    text: str, *, base_dir: Path | None = None, allow_diverging: bool = False
) -> BenchModel:
    """
    Parses bench text into a :class:`BenchModel`.

    Args:
        text: The bench description.
        base_dir: Directory that relative mask file paths are resolved against.
        allow_diverging: Accept lenses with a negative focal length.

    Raises:
        BenchParseError: At the first syntax or semantic error.
    """
    draft = _BenchDraft(base_dir, allow_diverging)
    for number, line in enumerate(text.splitlines(), start=1):
        tokens = tokenize(line, number)
        if tokens:
            draft.statement(tokens)
    model = draft.finish()
    logger.debug(f"Parsed bench with source {model.source.kind.value}")
    return model
