"""Structured report serialization: line-delimited dotted-key/value pairs.

The format is deliberately tiny so scripts can parse it with a split:

    one entry per line:        <dotted.key> = <value>
    value encodings:           int        decimal digits, optional sign
                               float      repr() of the Python float
                               bool       true | false
                               string     raw text (must not contain '=' or
                                          a newline, and must not parse as
                                          one of the other encodings)
                               list       [v1, v2, ...] of scalar values
    comments/blank lines:      lines starting with '#' and empty lines

Serialization is deterministic: keys appear in insertion order, floats use
repr (shortest round-trip form), so identical report objects serialize to
identical bytes.  ``loads(dumps(x)) == x`` for any report built from the
supported value types.
"""

from __future__ import annotations

__all__ = ["dumps", "loads", "flatten"]


def _encode_scalar(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, int):
        return str(v)
    if isinstance(v, float):
        # plain-float repr is the shortest round-trip form (numpy scalars
        # would otherwise stringify as np.float64(...))
        return repr(float(v))
    if isinstance(v, str):
        if "=" in v or "\n" in v:
            raise ValueError(f"string value may not contain '=' or newline: {v!r}")
        return v
    raise TypeError(f"unsupported report value type {type(v).__name__}")


def _encode(v) -> str:
    if isinstance(v, (list, tuple)):
        parts = [_encode_scalar(x) for x in v]
        if any("," in p or "[" in p or "]" in p for p in parts):
            raise ValueError(f"list elements may not contain ',' or brackets: {v!r}")
        return "[" + ", ".join(parts) + "]"
    return _encode_scalar(v)


def flatten(tree: dict, prefix: str = "") -> dict:
    """Flatten nested dicts into dotted keys, preserving insertion order."""
    flat = {}
    for k, v in tree.items():
        key = f"{prefix}.{k}" if prefix else str(k)
        if isinstance(v, dict):
            flat.update(flatten(v, key))
        else:
            flat[key] = v
    return flat


def dumps(tree: dict) -> str:
    """Serialize a (possibly nested) dict of report values."""
    lines = [f"{k} = {_encode(v)}" for k, v in flatten(tree).items()]
    return "\n".join(lines) + "\n"


def _decode_scalar(text: str):
    if text == "true":
        return True
    if text == "false":
        return False
    try:
        return int(text)
    except ValueError:
        pass
    try:
        return float(text)
    except ValueError:
        pass
    return text


def _decode(text: str):
    if text.startswith("[") and text.endswith("]"):
        inner = text[1:-1].strip()
        if not inner:
            return []
        return [_decode_scalar(part.strip()) for part in inner.split(",")]
    return _decode_scalar(text)


def loads(text: str) -> dict:
    """Parse serialized report lines back into a flat {dotted key: value} dict."""
    out = {}
    for n, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ValueError(f"line {n}: expected 'key = value', got {raw!r}")
        key, _, value = line.partition("=")
        out[key.strip()] = _decode(value.strip())
    return out
