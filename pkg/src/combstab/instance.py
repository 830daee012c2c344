"""Instance files: JSON objects carrying the numerical type of a generated pair.

Example::

    {"n": 2, "genera": [1, 1], "rank": 1, "degrees": [2, 1], "l": 3,
     "kernel_ranks": [1, 1]}

Exactly one of ``section_dims`` and ``kernel_ranks`` must be present.
``intersection_dims`` (one entry per node) is optional.  Integers may also be
written as decimal strings; floats are rejected.
"""

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from .curve import CombCurve
from .errors import ParseError, ValidationError
from .sheaves import GeneratedPairData, check_intersections

_KNOWN = {"n", "genera", "rank", "degrees", "l", "section_dims", "kernel_ranks",
          "intersection_dims"}


@dataclass(frozen=True)
class Instance:
    curve: CombCurve
    pair: GeneratedPairData
    intersection_dims: Optional[tuple[int, ...]] = None
    # which of section_dims / kernel_ranks the file used
    use_kernel_ranks: bool = True

    def __post_init__(self):
        if self.curve.n != self.pair.n:
            raise ValidationError(
                f"n = {self.curve.n} but {self.pair.n} degrees given", "degrees")
        if self.intersection_dims is not None:
            object.__setattr__(self, "intersection_dims", tuple(self.intersection_dims))
            check_intersections(self.pair, self.intersection_dims)

    def __iter__(self):
        yield self.curve
        yield self.pair


def _integer(value, field):
    if isinstance(value, bool):
        raise ValidationError(f"expected an integer, got {value!r}", field)
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        try:
            return int(value.strip())
        except ValueError:
            pass
    raise ValidationError(f"expected an integer, got {value!r}", field)


def _int_list(data, key, length):
    value = data[key]
    if not isinstance(value, list):
        raise ValidationError("expected an array", key)
    if len(value) != length:
        raise ValidationError(f"expected {length} entries, got {len(value)}", key)
    return tuple(_integer(v, key) for v in value)


def instance_from_dict(data) -> Instance:
    if not isinstance(data, dict):
        raise ValidationError("top level must be an object")
    unknown = set(data) - _KNOWN
    if unknown:
        raise ValidationError(f"unknown keys {sorted(unknown)}")
    for key in ("n", "genera", "rank", "degrees", "l"):
        if key not in data:
            raise ValidationError("missing required key", key)
    has_sections = "section_dims" in data
    has_kernels = "kernel_ranks" in data
    if has_sections == has_kernels:
        raise ValidationError("exactly one of section_dims / kernel_ranks is required",
                              "kernel_ranks")

    n = _integer(data["n"], "n")
    if n < 2:
        raise ValidationError(f"n >= 2 required, got {n}", "n")
    genera = _int_list(data, "genera", n)
    rank = _integer(data["rank"], "rank")
    degrees = _int_list(data, "degrees", n)
    l = _integer(data["l"], "l")
    curve = CombCurve(genera)
    if has_kernels:
        pair = GeneratedPairData.from_kernel_ranks(rank, degrees, l,
                                                   _int_list(data, "kernel_ranks", n))
    else:
        pair = GeneratedPairData(rank, degrees, l, _int_list(data, "section_dims", n))
    intersections = None
    if data.get("intersection_dims") is not None:
        intersections = _int_list(data, "intersection_dims", n - 1)
        if any(k < 0 for k in intersections):
            raise ValidationError("entries must be non-negative", "intersection_dims")
    return Instance(curve, pair, intersections, has_kernels)


def instance_to_dict(instance: Instance) -> dict:
    curve, pair = instance.curve, instance.pair
    out = {
        "n": curve.n,
        "genera": list(curve.genera),
        "rank": pair.r,
        "degrees": list(pair.degrees),
        "l": pair.l,
    }
    if instance.use_kernel_ranks:
        out["kernel_ranks"] = list(pair.kernel_ranks)
    else:
        out["section_dims"] = list(pair.section_dims)
    if instance.intersection_dims is not None:
        out["intersection_dims"] = list(instance.intersection_dims)
    return out


def loads_instance(text: str) -> Instance:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc}") from None
    return instance_from_dict(data)


def dumps_instance(instance: Instance) -> str:
    # one key per line, arrays inline
    items = [f"  {json.dumps(k)}: {json.dumps(v)}" for k, v in instance_to_dict(instance).items()]
    return "{\n" + ",\n".join(items) + "\n}\n"


def parse_instance(path) -> Instance:
    """Read and validate an instance file.

    Raises :class:`ParseError` for unreadable or malformed files and
    :class:`ValidationError` for invariant violations.
    """
    try:
        text = Path(path).read_text()
    except (OSError, UnicodeDecodeError) as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    return loads_instance(text)


def emit_instance(instance: Instance, path) -> None:
    Path(path).write_text(dumps_instance(instance))
