from hypothesis import settings

# The acceptance matrix saturates the (single) core for ~90s in the same
# session; wall-clock deadlines on property tests are noise under that
# load, so disable them suite-wide.
settings.register_profile("no-deadline", deadline=None)
settings.load_profile("no-deadline")
