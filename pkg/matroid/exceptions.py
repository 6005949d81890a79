class GammaCacheError(ValueError):
    """A serialized basis graph is unreadable, of another version, or fails its checksum."""
