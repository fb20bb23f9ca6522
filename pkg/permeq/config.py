import logging
from functools import lru_cache
from pathlib import Path

from pydantic import Field, field_validator, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

BASE_DIR = Path(__file__).resolve().parent.parent

# Keys accepted by the compact PERM_EQ_GUARDS override.
_GUARD_KEYS = {"naive": "naive_guard", "pruned": "pruned_guard", "roots": "roots_guard"}


class Settings(BaseSettings):
    model_config = SettingsConfigDict(
        env_file=BASE_DIR / ".env",
        env_file_encoding="utf-8",
        env_prefix="PERM_EQ_",
        case_sensitive=False,
        extra="ignore",
    )

    # ── Checks ───────────────────────────────────────────
    debug_checks: bool = True  # re-validate bijectivity of composites for n <= 12

    # ── Search guards ────────────────────────────────────
    naive_guard: int = Field(default=9, ge=1)
    pruned_guard: int = Field(default=14, ge=1)
    roots_guard: int = Field(default=12, ge=1)
    roots_oracle_ceiling: int = Field(default=7, ge=0)

    # "naive=10,pruned=15", read from PERM_EQ_GUARDS
    guards: str = ""

    # ── Parallelism ──────────────────────────────────────
    workers: int = Field(default=1, ge=1)

    # ── Logging ──────────────────────────────────────────
    log_level: str = "WARNING"
    log_json: bool = False

    @field_validator("guards")
    @classmethod
    def _check_guards(cls, value: str) -> str:
        parse_guards(value)
        return value

    @field_validator("log_level")
    @classmethod
    def _check_log_level(cls, value: str) -> str:
        level = value.strip().upper()
        if not isinstance(logging.getLevelName(level), int):
            raise ValueError(f"Unknown log level '{value}'.")
        return level

    @model_validator(mode="after")
    def _apply_guards(self) -> "Settings":
        for field_name, limit in parse_guards(self.guards).items():
            setattr(self, field_name, limit)
        return self


def parse_guards(text: str) -> dict[str, int]:
    """Parse ``"naive=10,pruned=15"`` into settings field overrides.

    Raises:
        ValueError: On an unknown guard name or a non-positive integer.
    """
    overrides: dict[str, int] = {}
    for chunk in filter(None, (part.strip() for part in text.split(","))):
        name, sep, raw = chunk.partition("=")
        name = name.strip().lower()
        if not sep or name not in _GUARD_KEYS:
            supported = ", ".join(sorted(_GUARD_KEYS))
            raise ValueError(f"Unknown guard '{chunk}'. Supported: {supported}")
        try:
            limit = int(raw)
        except ValueError as exc:
            raise ValueError(f"Guard '{name}' must be an integer, got '{raw.strip()}'.") from exc
        if limit < 1:
            raise ValueError(f"Guard '{name}' must be positive, got {limit}.")
        overrides[_GUARD_KEYS[name]] = limit
    return overrides


@lru_cache
def get_settings() -> Settings:
    """Load settings on first use; a bad environment surfaces as ValidationError here."""
    return Settings()
