# importing a suite module registers its laws
from ejakit.laws.suites import core, corner_filter, dagger_effectus, diamond, exchange, polar, spectral

__all__ = ["core", "spectral", "corner_filter", "polar", "exchange", "diamond", "dagger_effectus"]
