"""Line-oriented benchmark configuration.

Grammar, one statement per line:

    # comment (also allowed after nothing else on the line)
    key = value              top-level setting
    [method:NAME]            opens a method section; following key = value
                             lines configure that method

Top-level keys: ``seed``, ``stopwords``, ``mrpc``, ``afs``, ``sick``.
Method keys: ``kind``, ``taxonomy``, ``corpus``, ``embeddings``,
``w_string``, ``window``, ``rank``. ``kind`` defaults to the section name.

Relative paths are resolved against the directory containing the config
file, so a config can travel with its assets.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .errors import ConfigError, MissingAssetError

KNOWN_KINDS = ("string", "lin+string", "pmi+string", "lsa+string", "tfidf", "embedding")

# kinds that cannot run without a particular asset key
_REQUIRED_ASSET = {
    "lin+string": "taxonomy",
    "pmi+string": "corpus",
    "lsa+string": "corpus",
    "embedding": "embeddings",
}

_TOP_KEYS = ("seed", "stopwords", "mrpc", "afs", "sick")
_METHOD_KEYS = ("kind", "taxonomy", "corpus", "embeddings", "w_string", "window", "rank")


@dataclass(frozen=True)
class MethodSpec:
    name: str
    kind: str
    taxonomy: str | None = None
    corpus: str | None = None
    embeddings: str | None = None
    w_string: float = 0.5
    window: int = 5
    rank: int = 100

    def __post_init__(self):
        if self.kind not in KNOWN_KINDS:
            raise ValueError(f"unknown method kind {self.kind!r}")
        if not 0.0 <= self.w_string <= 1.0:
            raise ValueError(f"w_string must lie in [0, 1], got {self.w_string}")
        if self.window < 1:
            raise ValueError(f"window must be at least 1, got {self.window}")
        if self.rank < 1:
            raise ValueError(f"rank must be at least 1, got {self.rank}")
        required = _REQUIRED_ASSET.get(self.kind)
        if required is not None and getattr(self, required) is None:
            raise ValueError(f"method kind {self.kind!r} requires {required!r}")


@dataclass(frozen=True)
class RunConfig:
    methods: tuple[MethodSpec, ...]
    mrpc: str | None = None
    afs: str | None = None
    sick: str | None = None
    stopwords: str | None = None
    seed: int = 0

    def __post_init__(self):
        if not self.methods:
            raise ValueError("a run needs at least one method")
        names = [m.name for m in self.methods]
        if len(set(names)) != len(names):
            raise ValueError("method names must be unique")


def _parse_statements(lines: list[str], path: str):
    """Split raw lines into (top, sections); values carry their line numbers."""
    top: dict[str, tuple[str, int]] = {}
    sections: list[tuple[str, dict[str, tuple[str, int]], int]] = []
    current: dict[str, tuple[str, int]] | None = None
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("["):
            if not line.endswith("]"):
                raise ConfigError("unterminated section header", path, lineno)
            header = line[1:-1].strip()
            if not header.startswith("method:"):
                raise ConfigError(f"unknown section {header!r}, expected [method:NAME]",
                                  path, lineno)
            name = header[len("method:"):].strip()
            if not name:
                raise ConfigError("empty method name", path, lineno)
            if any(name == s[0] for s in sections):
                raise ConfigError(f"duplicate method section {name!r}", path, lineno)
            current = {}
            sections.append((name, current, lineno))
            continue
        if "=" not in line:
            raise ConfigError("expected 'key = value' or a [method:NAME] header",
                              path, lineno)
        key, _, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if not key:
            raise ConfigError("missing key before '='", path, lineno)
        target = top if current is None else current
        if key in target:
            raise ConfigError(f"duplicate key {key!r}", path, lineno)
        target[key] = (value, lineno)
    return top, sections


def _as_int(value: str, key: str, path: str, lineno: int) -> int:
    try:
        return int(value)
    except ValueError:
        raise ConfigError(f"{key} must be an integer, got {value!r}", path, lineno) from None


def _as_float(value: str, key: str, path: str, lineno: int) -> float:
    try:
        return float(value)
    except ValueError:
        raise ConfigError(f"{key} must be a number, got {value!r}", path, lineno) from None


def parse_config(path: str | Path) -> RunConfig:
    p = Path(path)
    if not p.is_file():
        raise MissingAssetError(f"no such file: {p}")
    base = p.parent
    top, sections = _parse_statements(p.read_text(encoding="utf-8").splitlines(), str(p))

    def resolve(value: str) -> str:
        return str((base / value))

    seed = 0
    paths = {"mrpc": None, "afs": None, "sick": None, "stopwords": None}
    for key, (value, lineno) in top.items():
        if key not in _TOP_KEYS:
            raise ConfigError(f"unknown top-level key {key!r}", str(p), lineno)
        if key == "seed":
            seed = _as_int(value, key, str(p), lineno)
        else:
            paths[key] = resolve(value)

    if not sections:
        raise ConfigError("config defines no [method:NAME] sections", str(p), 1)

    methods = []
    for name, body, header_line in sections:
        kind = name
        assets = {"taxonomy": None, "corpus": None, "embeddings": None}
        w_string = None
        window, rank = 5, 100
        for key, (value, lineno) in body.items():
            if key not in _METHOD_KEYS:
                raise ConfigError(f"unknown method key {key!r}", str(p), lineno)
            if key == "kind":
                kind = value
            elif key in assets:
                assets[key] = resolve(value)
            elif key == "w_string":
                w_string = _as_float(value, key, str(p), lineno)
            elif key == "window":
                window = _as_int(value, key, str(p), lineno)
            elif key == "rank":
                rank = _as_int(value, key, str(p), lineno)
        if w_string is None:
            w_string = 1.0 if kind == "string" else 0.5
        try:
            methods.append(MethodSpec(name=name, kind=kind, w_string=w_string,
                                      window=window, rank=rank, **assets))
        except ValueError as exc:
            raise ConfigError(str(exc), str(p), header_line) from None

    try:
        return RunConfig(methods=tuple(methods), seed=seed, **paths)
    except ValueError as exc:
        raise ConfigError(str(exc), str(p), 1) from None


def validate_assets(config: RunConfig) -> None:
    """Check every referenced file exists; raises MissingAssetError if not."""
    referenced = [config.mrpc, config.afs, config.sick, config.stopwords]
    for m in config.methods:
        referenced += [m.taxonomy, m.corpus, m.embeddings]
    for path in referenced:
        if path is not None and not Path(path).is_file():
            raise MissingAssetError(f"no such file: {path}")
