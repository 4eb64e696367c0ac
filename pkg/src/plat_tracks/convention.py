"""The global handedness convention.

Positive twist numbers act as counterclockwise half twists.  Flipping the
convention computes with the mirror-image link; it is exposed only as a
diagnostic (the family is mirror-closed, so the mirrored run exercises
the same assertions on the reflected instance).
"""

_FLIPPED = False


def set_flipped(value):
    global _FLIPPED
    _FLIPPED = bool(value)


def is_flipped():
    return _FLIPPED


def sign_factor():
    return -1 if _FLIPPED else 1
