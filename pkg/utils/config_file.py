"""
Plain key=value experiment manifests, read with python-dotenv's parser.

    # moments run
    quantity = E
    power = 2
    T = 500 1000 2000

Keys may use '-' or '_'; numbers are parsed, true/false become booleans and
space-separated values become lists.
"""

from pathlib import Path
from typing import Any, Dict, Union

from dotenv.parser import parse_stream

from libs.exceptions import ParameterError


def _scalar(text: str) -> Any:
    lowered = text.lower()
    if lowered in ("true", "yes", "on"):
        return True
    if lowered in ("false", "no", "off"):
        return False
    for cast in (int, float):
        try:
            return cast(text)
        except ValueError:
            pass
    return text


def parse_value(text: str) -> Any:
    parts = text.split()
    if not parts:
        raise ValueError("empty value")
    if len(parts) == 1:
        return _scalar(parts[0])
    return [_scalar(part) for part in parts]


def load_config_file(path: Union[str, Path]) -> Dict[str, Any]:
    """Parse a manifest into a dict; the last assignment of a key wins."""
    path = Path(path)
    values: Dict[str, Any] = {}
    try:
        with path.open(encoding="utf-8") as stream:
            for binding in parse_stream(stream):
                where = f"{path}:{binding.original.line}"
                if binding.error:
                    raise ParameterError(f"{where}: expected key = value")
                if binding.key is None:
                    continue
                if binding.value is None:
                    raise ParameterError(f"{where}: '{binding.key}' has no value")
                try:
                    values[binding.key.replace("-", "_")] = parse_value(binding.value)
                except ValueError as exc:
                    raise ParameterError(f"{where}: {exc}") from exc
    except OSError as exc:
        raise ParameterError(f"cannot read config file {path}: {exc}") from exc
    return values
