"""Shared pytest configuration.

Property-based tests run with a bounded example budget and no deadline:
several operations under test JIT-compile on first call, which would
otherwise trip hypothesis' per-example timing.
"""

from hypothesis import HealthCheck, settings

settings.register_profile(
    "default",
    max_examples=100,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")
