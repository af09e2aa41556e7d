"""Shared exception types.

The distinction matters for the CLI exit codes: verification failures map to
exit 1, configuration problems to 2, and budget exhaustion to 3.  Precision
errors are programming/configuration errors (a window was too shallow for a
requested exact answer) and are never silently absorbed.
"""


class PrecisionError(ValueError):
    """An exact answer was requested below the certified coefficient window."""


class BudgetExceededError(RuntimeError):
    """Predicted enumeration cost exceeds the configured budget."""

    def __init__(self, needed, budget, what=""):
        self.needed = int(needed)
        self.budget = int(budget)
        self.what = what
        msg = f"enumeration needs {self.needed} evaluations, budget is {self.budget}"
        if what:
            msg = f"{what}: {msg}"
        super().__init__(msg)


class ConfigError(ValueError):
    """Malformed run configuration or form file."""


class VerificationFailure(AssertionError):
    """An asserted identity or inequality failed on real data."""
