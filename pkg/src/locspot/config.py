"""Declarative pipeline configuration for the CLI.

A config file is a JSON object:

    {
      "gazetteers": [{"path": "chennai.json", "format": "generic_json"}],
      "bbox": [12.8, 80.0, 13.3, 80.4],
      "assets": {"tweet_stopwords": "/override/stopwords.txt"},
      "spelling_correction": false,
      "max_edit_distance": 2,
      "partial_tp_credit": 0,
      "eval_mode": "standard",
      "workers": 1
    }

Relative gazetteer and asset paths resolve against the config file's
directory. Unlisted assets fall back to the packaged data files (or the
LOCSPOT_DATA directory when that environment variable is set).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from . import assets
from .errors import ConfigError
from .evaluation import MODES
from .gazetteer import FORMATS

ASSET_KEYS = (
    "category_words", "bracket_phrases", "gazetteer_stopnames",
    "tweet_stopwords", "english_unigrams", "english_words",
    "street_suffixes", "osm_abbreviations",
)

_ASSET_DEFAULTS = {
    "category_words": assets.CATEGORY_WORDS,
    "bracket_phrases": assets.BRACKET_PHRASES,
    "gazetteer_stopnames": assets.GAZETTEER_STOPNAMES,
    "tweet_stopwords": assets.TWEET_STOPWORDS,
    "english_unigrams": assets.ENGLISH_UNIGRAMS,
    "english_words": assets.ENGLISH_WORDS,
    "street_suffixes": assets.STREET_SUFFIXES,
    "osm_abbreviations": assets.OSM_ABBREVIATIONS,
}


@dataclass
class GazetteerSource:
    path: Path
    format: str


@dataclass
class PipelineConfig:
    gazetteers: list[GazetteerSource] = field(default_factory=list)
    bbox: tuple[float, float, float, float] | None = None
    asset_paths: dict[str, Path] = field(default_factory=dict)
    spelling_correction: bool = False
    max_edit_distance: int = 2
    partial_tp_credit: float = 0.0
    eval_mode: str = "standard"
    workers: int = 1

    @classmethod
    def load(cls, path) -> "PipelineConfig":
        path = Path(path)
        try:
            raw = json.loads(path.read_text(encoding="utf-8"))
        except OSError as exc:
            raise ConfigError(f"cannot read config {path}: {exc}") from None
        except json.JSONDecodeError as exc:
            raise ConfigError(f"config {path} is not valid JSON: {exc}") from None
        if not isinstance(raw, dict):
            raise ConfigError(f"config {path} must be a JSON object")

        base = path.parent
        config = cls()

        for spec in raw.get("gazetteers", []):
            fmt = spec.get("format")
            if fmt not in FORMATS:
                raise ConfigError(f"unknown gazetteer format: {fmt!r}")
            source = base / spec.get("path", "")
            if not source.exists():
                raise ConfigError(f"gazetteer file does not exist: {source}")
            config.gazetteers.append(GazetteerSource(source, fmt))

        bbox = raw.get("bbox")
        if bbox is not None:
            if len(bbox) != 4:
                raise ConfigError("bbox must be [south, west, north, east]")
            south, west, north, east = map(float, bbox)
            if not (south < north and west < east):
                raise ConfigError(f"bbox is not well-ordered: {bbox}")
            config.bbox = (south, west, north, east)

        for key, value in (raw.get("assets") or {}).items():
            if key not in ASSET_KEYS:
                raise ConfigError(f"unknown asset key: {key!r}")
            asset = base / value
            if not asset.exists():
                raise ConfigError(f"asset file does not exist: {asset}")
            config.asset_paths[key] = asset

        config.spelling_correction = bool(raw.get("spelling_correction", False))
        config.max_edit_distance = int(raw.get("max_edit_distance", 2))
        config.partial_tp_credit = float(raw.get("partial_tp_credit", 0.0))
        config.eval_mode = raw.get("eval_mode", "standard")
        if config.eval_mode not in MODES:
            raise ConfigError(f"unknown eval_mode: {config.eval_mode!r}")
        config.workers = int(raw.get("workers", 1))
        if config.workers < 1:
            raise ConfigError("workers must be a positive integer")
        return config

    def asset(self, key: str) -> Path:
        """Resolved path for one dictionary asset."""
        if key in self.asset_paths:
            return self.asset_paths[key]
        return assets.data_path(_ASSET_DEFAULTS[key])
