from hypothesis import HealthCheck, settings

# Exact bigint arithmetic has high per-example variance; a wall-clock
# deadline turns slow-but-correct cases into flakes.
settings.register_profile(
    "exact",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("exact")
