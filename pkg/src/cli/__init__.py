"""Command-line surface: check, classify, generate, knn, rknn, bench."""

from src.cli.commands import ExitCode
from src.cli.main import build_parser, main

__all__ = ["ExitCode", "build_parser", "main"]
