"""Run configuration: resource limits, output and reproducibility knobs.

Limits are hard errors, never silent truncation: computations that would
exceed them raise ResourceLimitError, which the verification layer maps to
the distinct resource_limit verdict (exit code 3 in the CLI).

Every field can be overridden by an environment variable SKEWALG_<FIELD>.
"""

import os
from dataclasses import dataclass, fields


class ResourceLimitError(RuntimeError):
    """A configured limit would be exceeded; names the violated bound."""

    def __init__(self, limit_name: str, needed, limit):
        super().__init__(f"{limit_name}: needed {needed}, limit {limit}")
        self.limit_name = limit_name
        self.needed = needed
        self.limit = limit


@dataclass
class Config:
    max_ambient_dimension: int = 6000
    max_generators: int = 2_000_000
    thread_count: int = 1
    output_format: str = "text"
    certificate_directory: str = "certificates"
    random_seed: int = 271828

    def __post_init__(self):
        if self.max_ambient_dimension <= 0 or self.max_generators <= 0:
            raise ValueError("limits must be positive")
        if self.thread_count <= 0:
            raise ValueError("thread_count must be positive")
        if self.output_format not in ("text", "json"):
            raise ValueError("output_format must be 'text' or 'json'")

    @classmethod
    def from_env(cls, **overrides) -> "Config":
        kwargs = {}
        for f in fields(cls):
            env = os.environ.get(f"SKEWALG_{f.name.upper()}")
            if env is not None:
                kwargs[f.name] = f.type(env) if f.type is not str else env
        kwargs.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**kwargs)


DEFAULT_CONFIG = Config()
