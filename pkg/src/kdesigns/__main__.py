"""Run the CLI as a module: python -m kdesigns ..."""

from .cli import entry

entry()
