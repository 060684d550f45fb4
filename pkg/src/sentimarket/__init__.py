"""Tweet sentiment and stock index forecasting toolkit."""

__version__ = "0.1.0"
