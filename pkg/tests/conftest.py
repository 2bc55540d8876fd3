from hypothesis import settings

settings.register_profile("det", derandomize=True, max_examples=150)
settings.load_profile("det")
