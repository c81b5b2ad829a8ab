"""Configuration management for the majid-roots toolkit."""

import os
from pathlib import Path
from typing import Any, Optional

from dotenv import load_dotenv

from .errors import BudgetExceededError

# Load environment variables from .env file
load_dotenv()

DEFAULT_BUDGET = 2 ** 28


class Config:
    """Run settings for exhaustive checks, randomized suites and logging."""

    def __init__(self, **overrides: Any):
        """
        Initialize configuration from environment variables.

        Args:
            **overrides: Field values taking precedence over the environment.
                ``None`` values are ignored so CLI flags can be passed through.
        """
        # Exhaustive verification
        self.budget = int(os.getenv("MAJID_BUDGET", str(DEFAULT_BUDGET)))
        self.jobs = int(os.getenv("MAJID_JOBS", "1"))
        self.seed = int(os.getenv("MAJID_SEED", "0"))
        self.twist_rank_bound = int(os.getenv("MAJID_TWIST_RANK_BOUND", "8"))
        self.classify_fallback_limit = int(
            os.getenv("MAJID_CLASSIFY_FALLBACK_LIMIT", "4096")
        )

        # Logging
        self.log_file = Path(os.getenv("MAJID_LOG_FILE", "majid_roots.log"))
        self.log_level = os.getenv("MAJID_LOG_LEVEL", "INFO").upper()

        for name, value in overrides.items():
            if not hasattr(self, name):
                raise ValueError(f"Unknown configuration field: {name}")
            if value is not None:
                setattr(self, name, value)

        self._validate()

    def _validate(self):
        """Validate configuration values."""
        if self.budget < 1:
            raise ValueError(f"MAJID_BUDGET must be >= 1, got {self.budget}")
        if self.jobs < 1:
            raise ValueError(f"MAJID_JOBS must be >= 1, got {self.jobs}")
        if self.twist_rank_bound < 1:
            raise ValueError(
                f"MAJID_TWIST_RANK_BOUND must be >= 1, got {self.twist_rank_bound}"
            )
        if self.classify_fallback_limit < 0:
            raise ValueError(
                "MAJID_CLASSIFY_FALLBACK_LIMIT must be >= 0, "
                f"got {self.classify_fallback_limit}"
            )
        if self.log_level not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            raise ValueError(f"Unsupported MAJID_LOG_LEVEL: {self.log_level}")

    def with_overrides(self, **overrides: Any) -> "Config":
        """Return a new configuration with the given fields replaced."""
        values = {
            "budget": self.budget,
            "jobs": self.jobs,
            "seed": self.seed,
            "twist_rank_bound": self.twist_rank_bound,
            "classify_fallback_limit": self.classify_fallback_limit,
            "log_file": self.log_file,
            "log_level": self.log_level,
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return Config(**values)

    def check_budget(self, required: int, what: str, budget: Optional[int] = None) -> None:
        """
        Refuse an exhaustive loop whose tuple count exceeds the budget.

        Raises:
            BudgetExceededError: If ``required`` is larger than the budget.
        """
        limit = self.budget if budget is None else budget
        if required > limit:
            raise BudgetExceededError(required, limit, what)

    def __repr__(self) -> str:
        return (
            f"Config("
            f"budget={self.budget}, "
            f"jobs={self.jobs}, "
            f"seed={self.seed}, "
            f"twist_rank_bound={self.twist_rank_bound})"
        )


# Global configuration instance
config = Config()
