from hypothesis import settings

settings.register_profile("fixed", max_examples=40, deadline=None, derandomize=True)
settings.register_profile("seeded", max_examples=40, deadline=None)


def pytest_configure(config):
    # fixed seed by default; --hypothesis-seed=N switches to that seed
    seeded = config.getoption("hypothesis_seed", None) is not None
    settings.load_profile("seeded" if seeded else "fixed")
