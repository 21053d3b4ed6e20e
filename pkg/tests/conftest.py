from hypothesis import HealthCheck, settings

# Oracle-backed properties have wildly varying per-example runtime, so the
# per-example deadline is off for the whole suite.
settings.register_profile(
    "suite", deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("suite")
