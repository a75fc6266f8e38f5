"""Exception types shared across the package."""


class LocspotError(Exception):
    """Base class for all package errors."""


class ConfigError(LocspotError):
    """Bad configuration: unknown format, missing path, malformed config."""


class DataError(LocspotError):
    """Malformed input data (gazetteer records, annotations, caches)."""


class GazetteerFormatError(DataError):
    """A gazetteer record failed to parse; carries the record index."""

    def __init__(self, message, record_index=None, path=None):
        loc = []
        if path is not None:
            loc.append(str(path))
        if record_index is not None:
            loc.append(f"record {record_index}")
        prefix = f"[{': '.join(loc)}] " if loc else ""
        super().__init__(prefix + message)
        self.record_index = record_index
        self.path = path


class AnnotationError(DataError):
    """A gold annotation failed to parse or validate; carries its id."""

    def __init__(self, message, ann_id=None):
        prefix = f"[{ann_id}] " if ann_id else ""
        super().__init__(prefix + message)
        self.ann_id = ann_id
