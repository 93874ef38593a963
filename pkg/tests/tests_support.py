"""State shared between the acceptance tests and the terminal summary hook."""

ACCEPTANCE = {}
