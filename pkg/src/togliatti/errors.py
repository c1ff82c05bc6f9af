"""Exception types shared across the package."""

from __future__ import annotations


class InvalidIdeal(ValueError):
    """Rejected ideal input.

    ``reason`` is one of "not artinian", "duplicate", "inhomogeneous",
    "malformed".
    """

    def __init__(self, reason: str, detail: str = ""):
        self.reason = reason
        super().__init__(f"{reason}: {detail}" if detail else reason)


class BudgetExceeded(RuntimeError):
    """An enumeration would need more raw subsets than the configured budget."""

    def __init__(self, needed: int, budget: int):
        self.needed = needed
        self.budget = budget
        super().__init__(
            f"enumeration needs {needed} raw subsets, budget is {budget}"
        )


class GuardExceeded(RuntimeError):
    """A brute-force oracle was asked to run beyond its size guard."""


class UnknownTarget(KeyError):
    """Requested reproduction target is not registered."""

    def __init__(self, name: str, valid: list[str]):
        self.target = name
        self.valid = valid
        super().__init__(f"unknown target {name!r}; valid targets: {', '.join(valid)}")
