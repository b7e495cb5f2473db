"""Allow ``python -m socaut`` to run the CLI."""

from .cli import entrypoint

if __name__ == "__main__":
    entrypoint()
