"""Error types shared across the toolkit."""


class DataError(Exception):
    """Malformed or contract-violating input data.

    Raised for problems a caller can fix by supplying different data
    (bad CSV rows, misaligned series, out-of-range values). Maps to
    HTTP 400 in the service and exit code 2 in the CLI.
    """
