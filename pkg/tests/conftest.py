from hypothesis import settings

# exact arithmetic on 8x8 matrices and the sympy oracle vary too much in speed for per-example deadlines
settings.register_profile("exact", deadline=None)
settings.load_profile("exact")
