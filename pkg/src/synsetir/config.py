"""Experiment config and sweep files.

A config file is flat ``key = value`` text::

    corpus = corpus.tsv
    lexicon = lexicon.tsv
    stopwords = stopwords.txt
    space = synset
    scheme = nnn
    doc_mode = noisy
    noise_rate = 0.1
    noise_seeds = 0,1,2,3,4,5,6,7,8,9

A sweep file holds several configs as ``[name]`` sections; keys in a
``[DEFAULT]`` section apply to every experiment. Relative paths are resolved
against the directory of the file.
"""

from __future__ import annotations

import configparser
from pathlib import Path

from synsetir.evaluation import DocMode, ExperimentConfig

REQUIRED_KEYS = ("corpus", "lexicon", "space", "scheme")
OPTIONAL_KEYS = (
    "name", "stopwords", "doc_mode", "query_mode", "noise_rate", "noise_seeds", "noise_scope", "top_k",
)
_SECTION = "experiment"


class ConfigError(ValueError):
    def __init__(self, message: str, key: str | None = None):
        super().__init__(message)
        self.key = key


def _resolve(base: Path, value: str) -> str:
    p = Path(value)
    return str(p if p.is_absolute() else base / p)


def _seeds(value: str) -> tuple[int, ...]:
    value = value.strip()
    if ".." in value:
        lo, hi = value.split("..")
        return tuple(range(int(lo), int(hi) + 1))
    return tuple(int(s) for s in value.replace(",", " ").split())


def config_from_mapping(values, base: Path, name: str) -> ExperimentConfig:
    for key in REQUIRED_KEYS:
        if not values.get(key, "").strip():
            raise ConfigError(f"missing config key {key!r} in experiment {name!r}", key)
    unknown = set(values) - set(REQUIRED_KEYS) - set(OPTIONAL_KEYS)
    if unknown:
        raise ConfigError(f"unknown config key {sorted(unknown)[0]!r} in experiment {name!r}", sorted(unknown)[0])
    kwargs = dict(
        name=values.get("name", name).strip(),
        space=values["space"],
        scheme=values["scheme"],
        doc_mode=values.get("doc_mode", "tagged"),
        query_mode=values.get("query_mode", "tagged"),
        noise_scope=values.get("noise_scope", "documents"),
        corpus_path=_resolve(base, values["corpus"].strip()),
        lexicon_path=_resolve(base, values["lexicon"].strip()),
    )
    if values.get("stopwords", "").strip():
        kwargs["stop_words_path"] = _resolve(base, values["stopwords"].strip())
    try:
        if "top_k" in values:
            kwargs["top_k"] = int(values["top_k"])
        if "noise_seeds" in values:
            kwargs["noise_seeds"] = _seeds(values["noise_seeds"])
        if "noise_rate" in values:
            kwargs["noise_rate"] = float(values["noise_rate"])
        elif DocMode(kwargs["doc_mode"].strip().lower().replace("_", "-")) is DocMode.NOISY:
            raise ConfigError(f"missing config key 'noise_rate' in noisy experiment {name!r}", "noise_rate")
        return ExperimentConfig(**kwargs)
    except ConfigError:
        raise
    except ValueError as e:
        raise ConfigError(f"experiment {name!r}: {e}") from None


def parse_config_file(path) -> list[ExperimentConfig]:
    """Read a single config or a sweep file; returns the experiments in file order."""
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    parser = configparser.ConfigParser(interpolation=None)
    parser.optionxform = str.lower
    sweep = any(line.lstrip().startswith("[") for line in text.splitlines())
    try:
        if sweep:
            parser.read_string(text, source=str(path))
        else:
            parser.read_string(f"[{_SECTION}]\n{text}", source=str(path))
    except configparser.Error as e:
        raise ConfigError(f"{path}: {e}") from None
    sections = parser.sections()
    if not sections:
        raise ConfigError(f"{path}: no experiments defined")
    configs = []
    for section in sections:
        default_name = path.stem if not sweep else section
        configs.append(config_from_mapping(dict(parser[section]), path.parent, default_name))
    names = [c.name for c in configs]
    if len(set(names)) != len(names):
        raise ConfigError(f"{path}: duplicate experiment names")
    return configs


def format_sweep(configs, defaults: dict[str, str] | None = None) -> str:
    """Serialise configs as a sweep file (paths written as stored)."""
    lines = []
    if defaults:
        lines.append("[DEFAULT]")
        lines.extend(f"{k} = {v}" for k, v in defaults.items())
        lines.append("")
    for cfg in configs:
        lines.append(f"[{cfg.name}]")
        values = cfg.echo()
        values.pop("name")
        for key, attr in (("corpus", "corpus_path"), ("lexicon", "lexicon_path"), ("stopwords", "stop_words_path")):
            v = getattr(cfg, attr)
            if v and not (defaults and key in defaults):
                values[key] = v
        lines.extend(f"{k} = {v}" for k, v in values.items())
        lines.append("")
    return "\n".join(lines)
