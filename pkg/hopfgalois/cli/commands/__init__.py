"""One module per command; each exposes ``register`` and ``run``."""
