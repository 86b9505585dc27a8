"""Exception types shared across the library.

Monte-Carlo searches are retry-capped and fail loudly instead of looping
forever; each failure mode gets its own exception so callers (and the CLI)
can map them to exit codes.
"""


class RootSL2Error(Exception):
    """Base class for all library errors."""


class BadInput(RootSL2Error):
    """Invalid group specification, field parameters or file format."""


class MonteCarloExhausted(RootSL2Error):
    """A randomized search hit its retry cap without succeeding."""

    def __init__(self, what, attempts):
        super().__init__(f"{what}: no success in {attempts} attempts")
        self.what = what
        self.attempts = attempts


class RecognitionFailed(RootSL2Error):
    """A recognizer could not certify the expected structure."""


class VerificationFailed(RootSL2Error):
    """A constructed system failed its structural verification."""
