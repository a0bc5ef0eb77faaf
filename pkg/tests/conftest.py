"""Shared test configuration: session wall-clock stamp for the budget check."""

import time

SESSION_START = time.monotonic()
