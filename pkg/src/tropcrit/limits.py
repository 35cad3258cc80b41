"""Ground-set size caps for the exhaustive routines.

``TROPCRIT_MAX_GROUND`` overrides every cap at once; otherwise each family of
routines has its own default.
"""

from __future__ import annotations

import os

from .errors import FlagEnumerationTooLarge, GroundTooLarge

DEFAULTS = {
    "flags": 10,
    "taut": 7,
    "char_poly": 20,
}
HARD_MAX = 64


def max_ground(kind: str) -> int:
    raw = os.environ.get("TROPCRIT_MAX_GROUND")
    if raw:
        try:
            return int(raw)
        except ValueError:
            pass
    return DEFAULTS[kind]


def check_flags(size: int) -> None:
    cap = max_ground("flags")
    if size > cap:
        raise FlagEnumerationTooLarge(
            f"ground set of size {size} exceeds flag enumeration cap {cap}"
        )


def check_ground(size: int, kind: str) -> None:
    cap = max_ground(kind)
    if size > cap:
        raise GroundTooLarge(f"ground set of size {size} exceeds {kind} cap {cap}")
