"""Text ingestion of custom spans.

Schema: optional '#' comment lines; the first token is the ambient matrix
size s; every following group of s*s decimal reals is one basis matrix in
row-major order.  Validation (membership in the ambient algebra, bracket
closure) happens when the matrices are turned into a Subalgebra, so a bad
file is rejected with the failing residual.
"""

import numpy as np

from .errors import InvalidInputError


def parse_span_file(path):
    """Return (ambient_size, list of matrices) from a span file."""
    tokens = []
    try:
        with open(path) as handle:
            for line in handle:
                line = line.split("#", 1)[0]
                tokens.extend(line.split())
    except OSError as exc:
        raise InvalidInputError(f"cannot read span file {path}: {exc}") from exc
    if not tokens:
        raise InvalidInputError(f"span file {path} is empty")
    try:
        size = int(tokens[0])
    except ValueError as exc:
        raise InvalidInputError(
            f"span file {path}: first token must be the ambient size") from exc
    if size < 1:
        raise InvalidInputError(f"span file {path}: ambient size must be >= 1")
    values = tokens[1:]
    per_matrix = size * size
    if not values or len(values) % per_matrix != 0:
        raise InvalidInputError(
            f"span file {path}: expected a multiple of {per_matrix} entries "
            f"after the size, got {len(values)}")
    try:
        data = np.array([float(v) for v in values])
    except ValueError as exc:
        raise InvalidInputError(
            f"span file {path}: non-numeric entry ({exc})") from exc
    return size, list(data.reshape(-1, size, size))
