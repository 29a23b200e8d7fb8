"""Instance-size caps and their configuration.

Every exhaustive operation takes an optional ``maxn`` override; when a caller
passes None the defaults below apply. The caps exist so that a stray huge
input fails fast with TooLargeError instead of hanging: each guarded search
is guaranteed exhaustive below its cap.

Defaults can be changed process-wide through a key=value config file
(``load_config``) or the METRICLAB_MAXN environment variable, which overrides
every cap at once. Command-line flags override both.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace

from .errors import FormatError, TooLargeError

_ENV_VAR = "METRICLAB_MAXN"


@dataclass(frozen=True)
class Caps:
    # Vertex-count limits. minor_n and treewidth_n apply after exact
    # reductions (block split / simplicial stripping), not to raw input.
    md_n: int = 64
    minor_n: int = 14
    iso_n: int = 20
    vc_n: int = 24
    treewidth_n: int = 18
    line_k: int = 8
    # Enumeration limits: free trees stay cheap to 16, connected graphs
    # blow up past 7 (11117 classes at n=8); larger orders are ingested
    # from corpus files instead of generated in-process.
    tree_enum_n: int = 16
    graph_enum_n: int = 7


def _env_override(caps: Caps) -> Caps:
    raw = os.environ.get(_ENV_VAR)
    if raw is None:
        return caps
    try:
        n = int(raw)
    except ValueError as exc:
        raise FormatError(f"{_ENV_VAR} must be an integer, got {raw!r}") from exc
    return Caps(**{f.name: n for f in fields(Caps)})


def default_caps() -> Caps:
    """Built-in defaults, then METRICLAB_MAXN if set."""
    return _env_override(Caps())


def load_config(path: str) -> Caps:
    """Read key=value cap overrides; unknown keys are rejected.

    Blank lines and lines starting with '#' are ignored. The environment
    variable still wins over the file, flags win over everything.
    """
    known = {f.name for f in fields(Caps)}
    overrides: dict[str, int] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise FormatError(f"{path}:{lineno}: expected key=value, got {line!r}")
            key, _, value = line.partition("=")
            key = key.strip()
            if key not in known:
                raise FormatError(f"{path}:{lineno}: unknown cap {key!r}")
            try:
                overrides[key] = int(value.strip())
            except ValueError as exc:
                raise FormatError(f"{path}:{lineno}: {key} needs an integer") from exc
    return _env_override(replace(Caps(), **overrides))


def check_cap(n: int, cap: int, what: str) -> None:
    if n > cap:
        raise TooLargeError(f"{what}: instance size {n} exceeds cap {cap}")
