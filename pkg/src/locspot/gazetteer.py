"""Gazetteer ingestion, filtering, and skip-gram augmentation.

Raw place-name records are loaded from files, cleaned of auxiliary
content (bracketed tags, spaced hyphens), expanded with skip-gram name
variants, and indexed into a surface -> variant mapping that the
language model is compiled from.
"""

from __future__ import annotations

import json
import logging
import re
from dataclasses import dataclass, field
from itertools import combinations

from .errors import ConfigError, GazetteerFormatError

log = logging.getLogger(__name__)

SOURCES = ("osm", "geonames", "dbpedia", "generic")
FORMATS = ("geonames_tsv", "osm_json", "generic_json")

# variant kinds
ORIGINAL = "original"
SKIPGRAM = "skipgram"
BRACKET_ALTERNATIVE = "bracket_alternative"
HYPHEN_SPLIT = "hyphen_split"

# precedence when a surface is produced more than once; lower wins
_KIND_RANK = {ORIGINAL: 0, BRACKET_ALTERNATIVE: 1, HYPHEN_SPLIT: 2, SKIPGRAM: 3}

_BRACKET_RE = re.compile(r"\(([^()]*)\)")
_WS_RE = re.compile(r"\s+")


@dataclass
class GazetteerEntry:
    """One named place from a gazetteer source."""

    id: str
    canonical_name: str
    latitude: float | None = None
    longitude: float | None = None
    source: str = "generic"
    extra: dict = field(default_factory=dict)


@dataclass
class NameVariant:
    """A matchable surface form together with the entries it names."""

    surface: str
    kind: str
    entry_ids: set[str]


@dataclass
class Gazetteer:
    """Immutable-after-build name index used for matching and linking."""

    variants: dict[str, NameVariant]
    entries: dict[str, GazetteerEntry]
    category_words: frozenset[str]
    stopnames: frozenset[str]


def normalize_surface(text: str) -> str:
    """Case-fold and collapse whitespace runs to single spaces."""
    return _WS_RE.sub(" ", text.strip()).lower()


def _in_bbox(lat, lon, bbox) -> bool:
    if lat is None or lon is None:
        return True
    south, west, north, east = bbox
    return south <= lat <= north and west <= lon <= east


def _parse_float(value, what, index, path):
    value = value.strip()
    if value == "":
        return None
    try:
        return float(value)
    except ValueError:
        raise GazetteerFormatError(f"bad {what}: {value!r}", index, path) from None


def load_gazetteer(path, format: str, bbox=None) -> list[GazetteerEntry]:
    """Load raw gazetteer entries from a file.

    Supported formats: geonames_tsv (the public Geonames dump layout,
    name in column 2), osm_json (array of {id,name,lat,lon,tags}), and
    generic_json (array of {id,name} with optional lat/lon/source).
    An optional bbox (south, west, north, east) drops entries whose
    coordinates fall outside it; entries without coordinates pass.
    Names are preserved verbatim; filtering happens in build_gazetteer.
    """
    if format not in FORMATS:
        raise ConfigError(f"unknown gazetteer format: {format!r}")
    if bbox is not None:
        south, west, north, east = bbox
        if not (south < north and west < east):
            raise ConfigError(f"bbox is not well-ordered: {bbox!r}")

    if format == "geonames_tsv":
        entries = _load_geonames_tsv(path)
    else:
        entries = _load_json(path, format)

    if bbox is not None:
        entries = [e for e in entries if _in_bbox(e.latitude, e.longitude, bbox)]
    return entries


def _load_geonames_tsv(path):
    entries = []
    with open(path, encoding="utf-8") as f:
        for lineno, line in enumerate(f, start=1):
            line = line.rstrip("\n")
            if not line:
                continue
            fields = line.split("\t")
            if len(fields) < 6:
                raise GazetteerFormatError(
                    f"expected >= 6 tab-separated fields, got {len(fields)}",
                    lineno, path)
            geonameid, name = fields[0].strip(), fields[1].strip()
            if not geonameid or not name:
                raise GazetteerFormatError("missing id or name", lineno, path)
            lat = _parse_float(fields[4], "latitude", lineno, path)
            lon = _parse_float(fields[5], "longitude", lineno, path)
            extra = {}
            if len(fields) > 7 and fields[6].strip():
                extra["feature_class"] = fields[6].strip()
            if len(fields) > 8 and fields[8].strip():
                extra["country_code"] = fields[8].strip()
            entries.append(GazetteerEntry(
                id=f"geonames:{geonameid}", canonical_name=name,
                latitude=lat, longitude=lon, source="geonames", extra=extra))
    return entries


def _load_json(path, format):
    with open(path, encoding="utf-8") as f:
        try:
            records = json.load(f)
        except json.JSONDecodeError as exc:
            raise GazetteerFormatError(f"invalid JSON: {exc}", path=path) from None
    if records == []:
        return []
    if not isinstance(records, list):
        raise GazetteerFormatError("expected a top-level JSON array", path=path)

    default_source = "osm" if format == "osm_json" else "generic"
    entries = []
    for index, rec in enumerate(records):
        if not isinstance(rec, dict):
            raise GazetteerFormatError("record is not an object", index, path)
        rec_id = rec.get("id")
        name = rec.get("name")
        if rec_id is None or name is None or not str(name).strip():
            raise GazetteerFormatError("record needs 'id' and 'name'", index, path)
        source = rec.get("source", default_source)
        if source not in SOURCES:
            raise GazetteerFormatError(f"unknown source: {source!r}", index, path)
        lat, lon = rec.get("lat"), rec.get("lon")
        try:
            lat = None if lat is None else float(lat)
            lon = None if lon is None else float(lon)
        except (TypeError, ValueError):
            raise GazetteerFormatError("bad lat/lon", index, path) from None
        extra = rec.get("tags") or {}
        entries.append(GazetteerEntry(
            id=f"{source}:{rec_id}", canonical_name=str(name),
            latitude=lat, longitude=lon, source=source, extra=dict(extra)))
    return entries


def filter_entry(name: str, phrase_list) -> list[tuple[str, str]]:
    """Clean one raw name into (surface, kind) pairs.

    Bracketed content matching phrase_list is deleted; other bracketed
    content becomes a separate bracket_alternative surface. A name with
    exactly one spaced hyphen (" - ") additionally yields both sides as
    hyphen_split surfaces. Surfaces are case-folded and whitespace
    normalized. Degenerate names come back unchanged.
    """
    phrases = {normalize_surface(p).strip("()").strip() for p in phrase_list}
    results: list[tuple[str, str]] = []

    alternatives = []
    def _strip_bracket(match):
        inner = normalize_surface(match.group(1))
        if inner and inner not in phrases:
            alternatives.append(inner)
        return " "

    primary = normalize_surface(_BRACKET_RE.sub(_strip_bracket, name))
    if not primary:
        primary = normalize_surface(name)
        if not primary:
            return []
        return [(primary, ORIGINAL)]

    results.append((primary, ORIGINAL))
    results.extend((alt, BRACKET_ALTERNATIVE) for alt in alternatives)

    sides = primary.split(" - ")
    if len(sides) == 2:
        for side in sides:
            side = side.strip()
            if side:
                results.append((side, HYPHEN_SPLIT))

    seen = set()
    deduped = []
    for surface, kind in results:
        if surface not in seen:
            seen.add(surface)
            deduped.append((surface, kind))
    return deduped


def skipgram_variants(name_tokens, category_words) -> set[str]:
    """Generate contraction variants of a tokenized name.

    When the name has three or more tokens and ends in a category word,
    every subsequence that keeps the first and last token (2^(m-2) of
    them, including the full name) is returned. Otherwise only the full
    name comes back.
    """
    tokens = list(name_tokens)
    m = len(tokens)
    full = " ".join(tokens)
    if m <= 2 or tokens[-1] not in category_words:
        return {full}
    interior = tokens[1:-1]
    variants = set()
    for k in range(len(interior) + 1):
        for kept in combinations(interior, k):
            variants.add(" ".join([tokens[0], *kept, tokens[-1]]))
    return variants


def build_gazetteer(entries, stopname_list, phrase_list, category_words) -> Gazetteer:
    """Filter and augment raw entries into a surface -> variant index.

    Original names take precedence over derived surfaces. Derived
    surfaces that collide with an existing variant merge their entry
    ids into it, except hyphen splits that already exist as standalone
    names, which are dropped. Surfaces on the stop-name list are
    removed entirely.
    """
    stopnames = {normalize_surface(s) for s in stopname_list}
    categories = frozenset(normalize_surface(c) for c in category_words)

    entry_index: dict[str, GazetteerEntry] = {}
    for entry in entries:
        if not entry.canonical_name.strip():
            raise GazetteerFormatError(f"entry {entry.id!r} has an empty name")
        if entry.id in entry_index:
            raise GazetteerFormatError(f"duplicate entry id: {entry.id!r}")
        entry_index[entry.id] = entry

    filtered = {
        entry.id: filter_entry(entry.canonical_name, phrase_list)
        for entry in entry_index.values()
    }

    variants: dict[str, NameVariant] = {}

    def _add(surface, kind, entry_id):
        existing = variants.get(surface)
        if existing is None:
            variants[surface] = NameVariant(surface, kind, {entry_id})
            return
        existing.entry_ids.add(entry_id)
        if _KIND_RANK[kind] < _KIND_RANK[existing.kind]:
            existing.kind = kind

    # originals first so later passes can see standalone names
    for kind_pass in (ORIGINAL, BRACKET_ALTERNATIVE, HYPHEN_SPLIT):
        for entry_id, surfaces in filtered.items():
            for surface, kind in surfaces:
                if kind != kind_pass:
                    continue
                if kind == HYPHEN_SPLIT:
                    existing = variants.get(surface)
                    if existing is not None and existing.kind == ORIGINAL:
                        continue
                _add(surface, kind, entry_id)

    for entry_id, surfaces in filtered.items():
        for surface, kind in surfaces:
            if kind == HYPHEN_SPLIT:
                existing = variants.get(surface)
                if existing is None or entry_id not in existing.entry_ids:
                    continue  # this split was dropped above
            for variant in skipgram_variants(surface.split(), categories):
                if variant != surface:
                    _add(variant, SKIPGRAM, entry_id)

    removed = frozenset(surface for surface in variants if surface in stopnames)
    for surface in removed:
        del variants[surface]

    if not variants:
        log.warning("gazetteer is empty after filtering; extraction will "
                    "find nothing")

    return Gazetteer(
        variants=variants,
        entries=entry_index,
        category_words=categories,
        stopnames=removed,
    )
